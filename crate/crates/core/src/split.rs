//! Higgs pairs on split bundles `O(m1) + O(m2)`.
//!
//! Closed-form parameter counts sit next to an independent brute-force
//! computation: the conjugation action `psi -> psi Phi - Phi psi` of global
//! endomorphisms is written down as an exact rational matrix and its rank and
//! kernel are read off directly.
//!
//! Random Higgs fields come from a fixed 64-bit linear congruential generator
//! so that samples are reproducible across implementations:
//!
//! ```text
//! state_0     = seed XOR 0x853C49E6748FEA9B
//! state_{n+1} = state_n * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//! output      = state_{n+1} >> 33
//! ```
//!
//! A coefficient is `[-5, -4, -3, -2, -1, 1, 2, 3, 4, 5][output % 10]`. Entries
//! are filled in the order `a`, `b`, `c`, each along the graded-lex monomial
//! basis.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cohomology::sections_p2;
use crate::exact::{monomial_basis, rat, ExactError, HomPoly, Rational, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("entry {entry} has degree {found}, expected {expected}")]
    EntryDegree {
        entry: &'static str,
        expected: i64,
        found: i64,
    },
    #[error("entry {entry} must be a polynomial in 3 variables")]
    EntryRing { entry: &'static str },
    #[error("need 0 <= m <= d, got m = {m}, d = {d}")]
    OutOfRange { m: i64, d: i64 },
    #[error("Higgs field is not trace-free")]
    NotTraceFree,
    #[error("Higgs field does not live on O + O({m}) twisted by O({d})")]
    ShapeMismatch { m: i64, d: i64 },
    #[error("expected a conic in 3 variables, got degree {degree} in {num_vars} variables")]
    NotAConic { degree: i64, num_vars: usize },
    #[error("no field with scalar commutant after {attempts} attempts for m = {m}, d = {d}")]
    CertificateNotFound { m: i64, d: i64, attempts: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A map `O(m1) + O(m2) -> (O(m1) + O(m2))(d)`, written
///
/// ```text
/// [ a  b ]
/// [ c  e ]
/// ```
///
/// acting on column vectors, so `deg a = deg e = d`, `deg b = d + m1 - m2` and
/// `deg c = d + m2 - m1`. With `d = 0` this is an endomorphism of the bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix2 {
    m1: i64,
    m2: i64,
    d: i64,
    a: HomPoly,
    b: HomPoly,
    c: HomPoly,
    e: HomPoly,
}

impl PolyMatrix2 {
    pub fn entry_degrees(m1: i64, m2: i64, d: i64) -> [i64; 4] {
        [d, d + m1 - m2, d + m2 - m1, d]
    }

    pub fn new(
        m1: i64,
        m2: i64,
        d: i64,
        a: HomPoly,
        b: HomPoly,
        c: HomPoly,
        e: HomPoly,
    ) -> Result<Self, SplitError> {
        let degs = Self::entry_degrees(m1, m2, d);
        for ((name, p), expected) in [("a", &a), ("b", &b), ("c", &c), ("e", &e)].into_iter().zip(degs) {
            if p.num_vars() != 3 {
                return Err(SplitError::EntryRing { entry: name });
            }
            if p.degree() != expected {
                return Err(SplitError::EntryDegree {
                    entry: name,
                    expected,
                    found: p.degree(),
                });
            }
        }
        Ok(Self {
            m1,
            m2,
            d,
            a,
            b,
            c,
            e,
        })
    }

    /// `[[a, b], [c, -a]]`.
    pub fn trace_free(m1: i64, m2: i64, d: i64, a: HomPoly, b: HomPoly, c: HomPoly) -> Result<Self, SplitError> {
        let e = a.neg();
        Self::new(m1, m2, d, a, b, c, e)
    }

    pub fn zero(m1: i64, m2: i64, d: i64) -> Self {
        let [da, db, dc, de] = Self::entry_degrees(m1, m2, d);
        let z = |k| HomPoly::zero(3, k).expect("3 variables");
        Self {
            m1,
            m2,
            d,
            a: z(da),
            b: z(db),
            c: z(dc),
            e: z(de),
        }
    }

    /// `[[0, 0], [c, 0]]`.
    pub fn lower_triangular(m1: i64, m2: i64, d: i64, c: HomPoly) -> Result<Self, SplitError> {
        let mut out = Self::zero(m1, m2, d);
        out.c = c;
        Self::new(out.m1, out.m2, out.d, out.a, out.b, out.c, out.e)
    }

    pub fn summands(&self) -> (i64, i64) {
        (self.m1, self.m2)
    }

    pub fn twist(&self) -> i64 {
        self.d
    }

    pub fn entries(&self) -> [&HomPoly; 4] {
        [&self.a, &self.b, &self.c, &self.e]
    }

    pub fn is_trace_free(&self) -> bool {
        self.trace().is_zero()
    }

    pub fn trace(&self) -> HomPoly {
        self.a.add(&self.e).expect("diagonal entries share degree and ring")
    }

    /// `self * rhs`; the twists add.
    pub fn compose(&self, rhs: &PolyMatrix2) -> Result<PolyMatrix2, SplitError> {
        if self.summands() != rhs.summands() {
            return Err(SplitError::ShapeMismatch { m: rhs.m1 - rhs.m2, d: rhs.d });
        }
        let entry = |x: &HomPoly, y: &HomPoly, z: &HomPoly, w: &HomPoly| -> Result<HomPoly, ExactError> {
            x.mul(y)?.add(&z.mul(w)?)
        };
        let a = entry(&self.a, &rhs.a, &self.b, &rhs.c)?;
        let b = entry(&self.a, &rhs.b, &self.b, &rhs.e)?;
        let c = entry(&self.c, &rhs.a, &self.e, &rhs.c)?;
        let e = entry(&self.c, &rhs.b, &self.e, &rhs.e)?;
        Self::new(self.m1, self.m2, self.d + rhs.d, a, b, c, e)
    }

    pub fn sub(&self, rhs: &PolyMatrix2) -> Result<PolyMatrix2, SplitError> {
        Self::new(
            self.m1,
            self.m2,
            self.d,
            self.a.sub(&rhs.a)?,
            self.b.sub(&rhs.b)?,
            self.c.sub(&rhs.c)?,
            self.e.sub(&rhs.e)?,
        )
    }
}

/// `(E, Phi)` with `E = O + O(m)`; stored with summands ordered `(O(m), O)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPair {
    pub m: i64,
    pub d: i64,
    pub phi: PolyMatrix2,
}

impl SplitPair {
    pub fn new(m: i64, d: i64, phi: PolyMatrix2) -> Result<Self, SplitError> {
        if phi.summands() != (m, 0) || phi.twist() != d {
            return Err(SplitError::ShapeMismatch { m, d });
        }
        Ok(Self { m, d, phi })
    }

    pub fn random(m: i64, d: i64, seed: u64) -> Result<Self, SplitError> {
        let phi = random_stable_higgs(m, d, seed)?;
        Self::new(m, d, phi)
    }

    pub fn ranks(&self) -> Result<AdjointRanks, SplitError> {
        adjoint_rank_oracle(self.m, self.d, &self.phi)
    }
}

/// Necessary condition for a split bundle to carry a stabilizing Higgs field.
pub fn stability_bound(m1: i64, m2: i64, d: i64) -> bool {
    (m1 - m2).abs() <= d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HiggsCount {
    pub total: u64,
    pub modulo_conj: u64,
}

fn check_range(m: i64, d: i64) -> Result<(), SplitError> {
    if 0 <= m && m <= d {
        Ok(())
    } else {
        Err(SplitError::OutOfRange { m, d })
    }
}

/// Dimension of `H^0(End E(d))` for `E = O + O(m)` and of its quotient by the
/// automorphism group.
pub fn higgs_param_count(m: i64, d: i64) -> Result<HiggsCount, SplitError> {
    check_range(m, d)?;
    let total = 2 * d * d + 6 * d + m * m + 4;
    // doubled so m(m-3)/2 stays integral
    let twice_modulo = if m == 0 {
        2 * (2 * d * d + 6 * d + 1)
    } else {
        4 * d * d + 12 * d + m * (m - 3) + 4
    };
    Ok(HiggsCount {
        total: total as u64,
        modulo_conj: (twice_modulo / 2) as u64,
    })
}

/// Zariski tangent space dimension at a stable split pair.
pub fn tangent_dim_split(m: i64, d: i64) -> Result<u64, SplitError> {
    check_range(m, d)?;
    let base = 3 * d * (d + 3);
    let twice = if m == 0 { base } else { base + m * (m - 3) + 2 };
    Ok((twice / 2) as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    /// degree `d`
    pub trace: HomPoly,
    /// degree `2d`
    pub det: HomPoly,
}

pub fn char_poly(phi: &PolyMatrix2) -> CharPoly {
    let ae = phi.a.mul(&phi.e).expect("entries share a ring");
    let bc = phi.b.mul(&phi.c).expect("entries share a ring");
    CharPoly {
        trace: phi.trace(),
        det: ae.sub(&bc).expect("both products have degree 2d"),
    }
}

/// A conic is smooth iff its symmetric coefficient matrix is nonsingular.
pub fn conic_is_smooth(q: &HomPoly) -> Result<bool, SplitError> {
    if q.num_vars() != 3 || q.degree() != 2 {
        return Err(SplitError::NotAConic {
            degree: q.degree(),
            num_vars: q.num_vars(),
        });
    }
    let mut m = RationalMatrix::zeros(3, 3);
    for i in 0..3 {
        for j in 0..3 {
            let mut exps = vec![0u32; 3];
            exps[i] += 1;
            exps[j] += 1;
            let c = q.coeff(&exps);
            let v = if i == j { c } else { c / rat(2) };
            m.set(i, j, v)?;
        }
    }
    Ok(m.rank() == 3)
}

/// Output of the brute-force conjugation computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointRanks {
    /// dimension of endomorphisms commuting with `Phi`
    pub commutant_dim: u64,
    /// dimension of the conjugation orbit's tangent space
    pub orbit_dim: u64,
    /// `h^0(End_0 E(d)) - orbit_dim`
    pub quotient_dim: u64,
}

/// `h^0(End_0 E(d))` for `E = O + O(m)`: the three blocks of a trace-free field.
pub fn h0_end0_split(m: i64, d: i64) -> u64 {
    [d, d - m, d + m]
        .iter()
        .map(|&k| monomial_basis(3, k).len() as u64)
        .sum()
}

/// Matrix of `psi -> psi Phi - Phi psi` from `H^0(End E)` to the trace-free
/// blocks `(1,1)`, `(1,2)`, `(2,1)` of `H^0(End_0 E(d))`, in monomial
/// coordinates.
fn commutator_matrix(phi: &PolyMatrix2) -> Result<RationalMatrix, SplitError> {
    let (m1, m2) = phi.summands();
    let d = phi.twist();
    let end_degrees = PolyMatrix2::entry_degrees(m1, m2, 0);
    let target = PolyMatrix2::entry_degrees(m1, m2, d);
    let row_blocks = [0usize, 1, 2];
    let row_offsets: Vec<usize> = row_blocks
        .iter()
        .scan(0, |acc, &slot| {
            let start = *acc;
            *acc += monomial_basis(3, target[slot]).len();
            Some(start)
        })
        .collect();
    let rows: usize = row_blocks.iter().map(|&s| monomial_basis(3, target[s]).len()).sum();

    let mut columns = Vec::new();
    for (slot, &deg) in end_degrees.iter().enumerate() {
        for exps in monomial_basis(3, deg) {
            let mut psi = PolyMatrix2::zero(m1, m2, 0);
            let mono = HomPoly::monomial(3, exps, rat(1))?;
            match slot {
                0 => psi.a = mono,
                1 => psi.b = mono,
                2 => psi.c = mono,
                _ => psi.e = mono,
            }
            columns.push(psi);
        }
    }

    let mut matrix = RationalMatrix::zeros(rows, columns.len());
    for (col, psi) in columns.iter().enumerate() {
        let bracket = psi.compose(phi)?.sub(&phi.compose(psi)?)?;
        debug_assert!(bracket.is_trace_free());
        let entries = bracket.entries();
        for (block, &slot) in row_blocks.iter().enumerate() {
            for (i, v) in entries[slot].coefficients().into_iter().enumerate() {
                matrix.set(row_offsets[block] + i, col, v)?;
            }
        }
    }
    Ok(matrix)
}

/// Dimension of the commutant of `phi` inside `H^0(End E)`.
pub fn commutant_dim(phi: &PolyMatrix2) -> Result<u64, SplitError> {
    Ok(commutator_matrix(phi)?.kernel_dim() as u64)
}

/// Brute-force conjugation ranks for a trace-free field on `O + O(m)`.
pub fn adjoint_rank_oracle(m: i64, d: i64, phi: &PolyMatrix2) -> Result<AdjointRanks, SplitError> {
    check_range(m, d)?;
    if phi.summands() != (m, 0) || phi.twist() != d {
        return Err(SplitError::ShapeMismatch { m, d });
    }
    if !phi.is_trace_free() {
        return Err(SplitError::NotTraceFree);
    }
    let matrix = commutator_matrix(phi)?;
    let orbit = matrix.rank() as u64;
    let commutant = (matrix.cols() as u64) - orbit;
    Ok(AdjointRanks {
        commutant_dim: commutant,
        orbit_dim: orbit,
        quotient_dim: h0_end0_split(m, d) - orbit,
    })
}

/// The documented linear congruential generator.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    const MUL: u64 = 6364136223846793005;
    const INC: u64 = 1442695040888963407;
    const SEED_MIX: u64 = 0x853C_49E6_748F_EA9B;
    const COEFFS: [i64; 10] = [-5, -4, -3, -2, -1, 1, 2, 3, 4, 5];

    pub fn new(seed: u64) -> Self {
        Self {
            state: seed ^ Self::SEED_MIX,
        }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(Self::MUL).wrapping_add(Self::INC);
        (self.state >> 33) as u32
    }

    /// Uniform on `{-5, ..., 5} \ {0}`.
    pub fn coefficient(&mut self) -> i64 {
        Self::COEFFS[(self.next_u32() % 10) as usize]
    }

    pub fn poly(&mut self, degree: i64) -> HomPoly {
        let coeffs: Vec<Rational> = monomial_basis(3, degree)
            .iter()
            .map(|_| rat(self.coefficient()))
            .collect();
        HomPoly::from_coefficients(3, degree, &coeffs).expect("basis-sized coefficient vector")
    }
}

const MAX_ATTEMPTS: usize = 64;

/// A pseudo-random trace-free field on `O + O(m)` twisted by `O(d)` whose
/// commutant is exactly the scalars. For `m > d` the commutant can still be
/// scalar while `O(m)` is invariant, so only `m <= d` gives stable pairs.
pub fn random_stable_higgs(m: i64, d: i64, seed: u64) -> Result<PolyMatrix2, SplitError> {
    if m < 0 || d < 0 {
        return Err(SplitError::OutOfRange { m, d });
    }
    let mut rng = Lcg::new(seed);
    let [da, db, dc, _] = PolyMatrix2::entry_degrees(m, 0, d);
    for _ in 0..MAX_ATTEMPTS {
        let a = rng.poly(da);
        let b = rng.poly(db);
        let c = rng.poly(dc);
        let phi = PolyMatrix2::trace_free(m, 0, d, a, b, c)?;
        if commutant_dim(&phi)? == 1 {
            return Ok(phi);
        }
    }
    Err(SplitError::CertificateNotFound {
        m,
        d,
        attempts: MAX_ATTEMPTS,
    })
}

/// Number of monomials in the four blocks of `H^0(End E(d))`.
pub fn higgs_monomial_count(m: i64, d: i64) -> u64 {
    PolyMatrix2::entry_degrees(m, 0, d)
        .iter()
        .map(|&k| monomial_basis(3, k).len() as u64)
        .sum()
}

/// `h^0(End E)` for `E = O + O(m)`.
pub fn h0_end_split(m: i64) -> u64 {
    2 + sections_p2(m) + sections_p2(-m)
}
