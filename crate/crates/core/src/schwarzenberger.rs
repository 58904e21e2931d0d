//! Schwarzenberger bundles: push-forwards of line bundles along double covers
//! of the plane, branched over a conic (type 1, cover `P1 x P1`) or a quartic
//! (type 2, cover the seven-point blow-up).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chow::ChernPair;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchwarzenbergerError {
    #[error("the type-2 stability criterion needs p >= -1, got p = {0}")]
    NeedsPGeMinusOne(i64),
}

/// Which source to trust for `h^1(End_0 E(d))` on type-1 bundles.
///
/// `Paper` returns the published piecewise values; `Derived` returns the value
/// forced by Kunneth on the quadric (equivalently by Riemann-Roch together
/// with the `h^0` formula). They differ when `s - r > d + 2` and `d >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum H1Mode {
    Paper,
    Derived,
}

impl H1Mode {
    pub const ALL: [H1Mode; 2] = [H1Mode::Paper, H1Mode::Derived];

    pub fn as_str(&self) -> &'static str {
        match self {
            H1Mode::Paper => "paper",
            H1Mode::Derived => "derived",
        }
    }
}

impl fmt::Display for H1Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `E_{r,s} = f_* O(r, s)` for the conic cover `f: P1 x P1 -> P2`.
///
/// Since `E_{r,s} = E_{s,r}` the parameters are stored with `s >= r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct L1Bundle {
    r: i64,
    s: i64,
}

/// Homogeneous identifications available for small `s - r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HomogeneousForm {
    /// `O(a) + O(b)`
    Split { a: i64, b: i64 },
    /// `T_{P2} (twist)`
    TangentTwist { twist: i64 },
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomogeneousForm::Split { a, b } => write!(f, "O({a}) + O({b})"),
            HomogeneousForm::TangentTwist { twist } => write!(f, "T({twist})"),
        }
    }
}

impl L1Bundle {
    pub fn new(r: i64, s: i64) -> Self {
        Self {
            r: r.min(s),
            s: r.max(s),
        }
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// `s - r >= 0`.
    pub fn gap(&self) -> i64 {
        self.s - self.r
    }

    pub fn chern(&self) -> ChernPair {
        let (r, s) = (self.r, self.s);
        let twice_c2 = r * (r - 1) + s * (s - 1);
        // r(r-1) and s(s-1) are both even
        assert_eq!(twice_c2 % 2, 0);
        ChernPair::new(r + s - 1, twice_c2 / 2)
    }

    pub fn is_isomorphic(&self, other: &L1Bundle) -> bool {
        self == other
    }

    pub fn homogeneous_form(&self) -> Option<HomogeneousForm> {
        let r = self.r;
        match self.gap() {
            0 => Some(HomogeneousForm::Split { a: r, b: r - 1 }),
            1 => Some(HomogeneousForm::Split { a: r, b: r }),
            2 => Some(HomogeneousForm::TangentTwist { twist: r - 1 }),
            _ => None,
        }
    }

    /// Stable exactly when simple, i.e. when `s - r >= 2`.
    pub fn is_stable(&self) -> bool {
        self.gap() >= 2
    }

    /// `h^0(End_0 E(d)) = d(d+1)/2 + delta (2-k+d)(2+k+d)` with
    /// `delta = [d >= k - 1]`.
    pub fn h0_end0(&self, d: u64) -> u64 {
        let d = d as i64;
        let k = self.gap();
        let mut h = d * (d + 1) / 2;
        if d >= k - 1 {
            h += (2 - k + d) * (2 + k + d);
        }
        h as u64
    }

    /// `h^0(End E) = h^0(End_0 E) + 1`: 5 and 4 for the split cases, 1 once simple.
    pub fn h0_end(&self) -> u64 {
        self.h0_end0(0) + 1
    }

    pub fn h1_end0(&self, d: u64, mode: H1Mode) -> u64 {
        match mode {
            H1Mode::Paper => h1_end0_paper(self.gap(), d),
            H1Mode::Derived => h1_end0_derived(self.gap(), d),
        }
    }

    pub fn h2_end0(&self, _d: u64) -> u64 {
        0
    }

    /// Whether the two `h^1` sources agree at twist `d`.
    pub fn h1_modes_agree(&self, d: u64) -> bool {
        self.h1_end0(d, H1Mode::Paper) == self.h1_end0(d, H1Mode::Derived)
    }
}

fn h1_end0_paper(k: i64, d: u64) -> u64 {
    if k <= 2 {
        return 0;
    }
    match d {
        0 => (k * k - 4) as u64,
        1 => (k * k - 9) as u64,
        _ => 0,
    }
}

fn h1_end0_derived(k: i64, d: u64) -> u64 {
    let w = d as i64 + 2;
    (k * k - w * w).max(0) as u64
}

/// `E_{p,t} = g_* L^{p,t}` for the quartic cover by the seven-point blow-up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct L2Bundle {
    pub p: i64,
    pub t: [i64; 7],
}

impl L2Bundle {
    pub fn new(p: i64, t: [i64; 7]) -> Self {
        Self { p, t }
    }

    pub fn t_sum(&self) -> i64 {
        self.t.iter().sum()
    }

    pub fn c1(&self) -> i64 {
        self.t_sum() + 3 * self.p - 2
    }

    pub fn chern(&self) -> ChernPair {
        let p = self.p;
        let sum = self.t_sum();
        let sum_sq: i64 = self.t.iter().map(|t| t * t).sum();
        // sum_{i<j} t_i t_j
        let pairs = (sum * sum - sum_sq) / 2;
        let c2 = 4 * p * p - 3 * p + (3 * p - 1) * sum + sum_sq + pairs;
        ChernPair::new(self.c1(), c2)
    }

    /// Stability criterion for `p >= -1`. Which identity applies depends on
    /// the signs of `c1 + 2 t_i`.
    pub fn is_stable(&self) -> Result<bool, SchwarzenbergerError> {
        if self.p < -1 {
            return Err(SchwarzenbergerError::NeedsPGeMinusOne(self.p));
        }
        let c1 = self.c1();
        let p = self.p;
        if self.t.iter().all(|&t| c1 + 2 * t >= 0) {
            let three_sum = 3 * self.t_sum();
            Ok(three_sum == 8 - 7 * p || three_sum == 7 - 7 * p)
        } else {
            let lhs: i64 = self
                .t
                .iter()
                .map(|&t| {
                    let u = c1 + 2 * t;
                    u * u + u
                })
                .sum();
            let rhs = (-3 * c1 + 2 * p + 1) * (-3 * c1 + 2 * p + 2);
            Ok(lhs == rhs)
        }
    }
}

/// Parameters `(p, t)` with `E_{p,t} = E_{q,s}` obtained from the
/// automorphisms of the Picard lattice: `p = 3 sum s + 8q`,
/// `t_i = -s_i - 3q - sum s`.
pub fn l2_isomorphism_image(q: i64, s: [i64; 7]) -> L2Bundle {
    let sum: i64 = s.iter().sum();
    L2Bundle::new(3 * sum + 8 * q, s.map(|si| -si - 3 * q - sum))
}

/// Necessary conditions for a bundle to be of both types: `p` in `[-7, -1]`,
/// `r = p`, `s = p + 3` and `sum t = 4 - p`.
pub fn overlap_l1_l2(b1: &L1Bundle, b2: &L2Bundle) -> bool {
    let p = b2.p;
    (-7..=-1).contains(&p) && b1.r == p && b1.s == p + 3 && b2.t_sum() == 4 - p
}
