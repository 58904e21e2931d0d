//! Hypercohomology of the deformation complex `End_0 E -> End_0 E(d)` of a
//! pair `(E_{r,s}, Phi)`, assembled from the `E_2` page of the hypercohomology
//! spectral sequence. `d_2` vanishes here, so
//!
//! ```text
//! H^1 = E_2^{1,0} + E_2^{0,1},   H^2 = E_2^{2,0} + E_2^{1,1}
//! ```
//!
//! with `E_2^{2,0} = 0`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chow::chi_end0_twist;
use crate::schwarzenberger::{H1Mode, L1Bundle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error("twist d = 0 admits only the zero Higgs field; need d >= 1")]
    TwistTooSmall,
    #[error(
        "surjectivity of H^1(End_0 E) -> H^1(End_0 E(d)) is not established \
         (dimensions {h1_untwisted} -> {h1_twisted})"
    )]
    SurjectivityUnknown { h1_untwisted: u64, h1_twisted: u64 },
}

/// Dimensions of `E_2^{1,0}`, `E_2^{0,1}`, `E_2^{2,0}` and `E_2^{1,1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralTerms {
    pub e10: u64,
    pub e01: u64,
    pub e20: u64,
    pub e11: u64,
}

impl SpectralTerms {
    pub fn h1(&self) -> u64 {
        self.e10 + self.e01
    }

    pub fn h2(&self) -> u64 {
        self.e20 + self.e11
    }
}

/// A hypercohomology dimension, or the reason it cannot be stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HyperDim {
    Known { value: u64 },
    /// The `h^1` inputs are nonzero and the connecting map is not known to be
    /// surjective.
    Unknown { h1_untwisted: u64, h1_twisted: u64 },
    /// Published value that the published `h^0`/`h^1` tables do not add up to.
    Inconsistent { claimed: u64, assembled: u64 },
}

impl HyperDim {
    pub fn known(&self) -> Option<u64> {
        match self {
            HyperDim::Known { value } => Some(*value),
            _ => None,
        }
    }
}

/// `3d(d+3)/2`, the expected dimension for stable pairs.
pub fn expected_dim(d: u64) -> u64 {
    3 * d * (d + 3) / 2
}

/// Regime where the two `h^1` sources disagree.
pub fn in_conflict_regime(bundle: &L1Bundle, d: u64) -> bool {
    d >= 2 && bundle.gap() > d as i64 + 2
}

pub fn spectral_terms(bundle: &L1Bundle, d: u64, mode: H1Mode) -> Result<SpectralTerms, ModuliError> {
    if d == 0 {
        return Err(ModuliError::TwistTooSmall);
    }
    let h0 = bundle.h0_end0(d);
    // for the split cases the conjugation image is H^0(End E) modulo scalars
    let e10 = if bundle.gap() <= 1 {
        h0 - (bundle.h0_end() - 1)
    } else {
        h0
    };
    let h1_untwisted = bundle.h1_end0(0, mode);
    let h1_twisted = bundle.h1_end0(d, mode);
    // onto zero is automatic; for d = 1 the two short exact sequences of the
    // regular pair give surjectivity
    if h1_twisted != 0 && d != 1 {
        return Err(ModuliError::SurjectivityUnknown {
            h1_untwisted,
            h1_twisted,
        });
    }
    let e01 = h1_untwisted - h1_twisted;
    let image = h1_untwisted - e01;
    Ok(SpectralTerms {
        e10,
        e01,
        e20: 0,
        e11: h1_twisted - image,
    })
}

pub fn hyper_h1_dim(bundle: &L1Bundle, d: u64, mode: H1Mode) -> Result<HyperDim, ModuliError> {
    match spectral_terms(bundle, d, mode) {
        Ok(terms) if mode == H1Mode::Paper && in_conflict_regime(bundle, d) => {
            Ok(HyperDim::Inconsistent {
                claimed: expected_dim(d),
                assembled: terms.h1(),
            })
        }
        Ok(terms) => Ok(HyperDim::Known { value: terms.h1() }),
        Err(ModuliError::SurjectivityUnknown {
            h1_untwisted,
            h1_twisted,
        }) => Ok(HyperDim::Unknown {
            h1_untwisted,
            h1_twisted,
        }),
        Err(e) => Err(e),
    }
}

pub fn hyper_h2_dim(bundle: &L1Bundle, d: u64, mode: H1Mode) -> Result<HyperDim, ModuliError> {
    match spectral_terms(bundle, d, mode) {
        Ok(terms) => Ok(HyperDim::Known { value: terms.h2() }),
        Err(ModuliError::SurjectivityUnknown {
            h1_untwisted,
            h1_twisted,
        }) => Ok(HyperDim::Unknown {
            h1_untwisted,
            h1_twisted,
        }),
        Err(e) => Err(e),
    }
}

/// `h^0 - h^1 + h^2` against Riemann-Roch for `End_0 E_{r,s}(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCheck {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
    pub chi: i64,
    pub pass: bool,
}

pub fn euler_consistency(bundle: &L1Bundle, d: u64, mode: H1Mode) -> EulerCheck {
    let h0 = bundle.h0_end0(d);
    let h1 = bundle.h1_end0(d, mode);
    let h2 = bundle.h2_end0(d);
    let chi = chi_end0_twist(bundle.chern(), d as i64).expect("Schwarzenberger Chern data is integral");
    EulerCheck {
        h0,
        h1,
        h2,
        chi,
        pass: h0 as i64 - h1 as i64 + h2 as i64 == chi,
    }
}
