//! Closed-form cohomology dimensions of line bundles on the plane, on the
//! quadric `P1 x P1`, and on the blow-up of the plane at seven general points.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{frac, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("cohomological degree {index} out of range 0..={max}")]
    BadIndex { index: usize, max: usize },
    #[error("blow-up formulas need p >= -1, got p = {0}")]
    NeedsDuality(i64),
}

fn check_index(index: usize, max: usize) -> Result<(), CohomologyError> {
    if index > max {
        Err(CohomologyError::BadIndex { index, max })
    } else {
        Ok(())
    }
}

/// `h^0(P^2, O(k))`.
pub fn sections_p2(k: i64) -> u64 {
    if k < 0 {
        0
    } else {
        ((k + 1) * (k + 2) / 2) as u64
    }
}

/// `h^i(P^2, O(k))`.
pub fn h_p2(i: usize, k: i64) -> Result<u64, CohomologyError> {
    check_index(i, 2)?;
    Ok(match i {
        0 => sections_p2(k),
        1 => 0,
        _ => sections_p2(-k - 3),
    })
}

fn h0_p1(n: i64) -> u64 {
    (n + 1).max(0) as u64
}

fn h1_p1(n: i64) -> u64 {
    (-n - 1).max(0) as u64
}

/// `O(a, b)` on `P1 x P1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BidegreeLine {
    pub a: i64,
    pub b: i64,
}

impl BidegreeLine {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }
}

/// `h^i(P1 x P1, O(a, b))` by the Kunneth formula.
pub fn h_p1xp1(i: usize, line: BidegreeLine) -> Result<u64, CohomologyError> {
    check_index(i, 2)?;
    let BidegreeLine { a, b } = line;
    Ok(match i {
        0 => h0_p1(a) * h0_p1(b),
        1 => h0_p1(a) * h1_p1(b) + h1_p1(a) * h0_p1(b),
        _ => h1_p1(a) * h1_p1(b),
    })
}

/// `L^{p,t} = O(pM + sum t_i N_i)` on the blow-up at seven general points,
/// with `M` the pulled-back hyperplane class and `N_i` the exceptional curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlowupLine {
    pub p: i64,
    pub t: [i64; 7],
}

impl BlowupLine {
    pub fn new(p: i64, t: [i64; 7]) -> Self {
        Self { p, t }
    }

    /// `(3d, -d, ..., -d)`, the twist by `-K^d` that shows up for quartic covers.
    pub fn anticanonical_power(d: i64) -> Self {
        Self::new(3 * d, [-d; 7])
    }
}

/// A dimension produced by a general-position formula.
///
/// `raw` is what the formula gives; when it is negative the configuration is
/// outside the regime where the formula is a dimension and `value` is clamped
/// to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaCount {
    pub value: u64,
    pub raw: i64,
}

impl FormulaCount {
    fn from_raw(raw: i64) -> Self {
        Self {
            value: raw.max(0) as u64,
            raw,
        }
    }

    pub fn clamped(&self) -> bool {
        self.raw < 0
    }
}

/// Expected dimension of plane curves of degree `p` with multiplicity `-t_j`
/// at each point where `t_j < 0`.
pub fn curve_count(line: &BlowupLine) -> i64 {
    let conditions: i64 = line
        .t
        .iter()
        .filter(|&&t| t < 0)
        .map(|&t| t * (t + 1) / 2)
        .sum();
    plane_sections(line.p) - conditions
}

fn plane_sections(p: i64) -> i64 {
    (p + 1) * (p + 2) / 2
}

fn half_sum_t_minus(line: &BlowupLine) -> i64 {
    line.t.iter().map(|&t| t * (t - 1) / 2).sum()
}

/// `h^i` of `L^{p,t}` on the seven-point blow-up for `i` in {0, 1}, valid for
/// `p >= -1` and points in general position.
pub fn h_blowup7(i: usize, line: &BlowupLine) -> Result<FormulaCount, CohomologyError> {
    check_index(i, 1)?;
    if line.p < -1 {
        return Err(CohomologyError::NeedsDuality(line.p));
    }
    let all_nonneg = line.t.iter().all(|&t| t >= 0);
    let raw = match (i, all_nonneg) {
        (0, true) => plane_sections(line.p),
        (0, false) => curve_count(line),
        (_, true) => half_sum_t_minus(line),
        (_, false) => curve_count(line) - plane_sections(line.p) + half_sum_t_minus(line),
    };
    Ok(FormulaCount::from_raw(raw))
}

/// `h^i(L^{3d,-d})`: `d^2 + 8d + 1` sections and `7d` for `h^1`.
pub fn h_blowup7_special(i: usize, d: u64) -> Result<u64, CohomologyError> {
    check_index(i, 1)?;
    Ok(match i {
        0 => d * d + 8 * d + 1,
        _ => 7 * d,
    })
}

/// Riemann-Roch on the blow-up, `chi(L) = chi(O) + L.(L - K)/2`, using the
/// intersection form `M^2 = 1`, `N_i^2 = -1`, `M.N_i = 0` and
/// `K = -3M + sum N_i`.
pub fn euler_blowup7(line: &BlowupLine) -> Rational {
    let intersect = |a: (i64, [i64; 7]), b: (i64, [i64; 7])| -> i64 {
        a.0 * b.0 - a.1.iter().zip(b.1.iter()).map(|(x, y)| x * y).sum::<i64>()
    };
    let l = (line.p, line.t);
    let canonical = (-3, [1; 7]);
    rat(1) + frac(intersect(l, l) - intersect(l, canonical), 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::monomial_basis;

    /// Cech count: Laurent monomials in `n` variables of total degree `k` with
    /// every exponent <= -1 (top cohomology of projective space).
    fn laurent_top_count(n: usize, k: i64) -> u64 {
        // shift e_i = -1 - f_i with f_i >= 0, sum f_i = -k - n
        monomial_basis(n, -k - n as i64).len() as u64
    }

    /// Bigraded Cech enumeration on the quadric: each P1 factor contributes
    /// monomials with both exponents >= 0 (H^0) or both <= -1 (H^1).
    fn quadric_cech(i: usize, a: i64, b: i64) -> u64 {
        let factor = |n: i64| -> [u64; 2] {
            let window = n.abs() + 3;
            let mut h = [0u64; 2];
            for e0 in -window..=window {
                let e1 = n - e0;
                if e0 >= 0 && e1 >= 0 {
                    h[0] += 1;
                } else if e0 <= -1 && e1 <= -1 {
                    h[1] += 1;
                }
            }
            h
        };
        let (fa, fb) = (factor(a), factor(b));
        let mut total = 0;
        for ia in 0..2 {
            for ib in 0..2 {
                if ia + ib == i {
                    total += fa[ia] * fb[ib];
                }
            }
        }
        total
    }

    #[test]
    fn plane_examples() {
        assert_eq!(h_p2(0, 2), Ok(6));
        assert_eq!(h_p2(2, -6), Ok(10));
        for k in -10..10 {
            assert_eq!(h_p2(1, k), Ok(0));
        }
        assert!(h_p2(3, 0).is_err());
    }

    #[test]
    fn plane_matches_monomial_and_cech_counts() {
        for k in -5i64..=10 {
            assert_eq!(h_p2(0, k).unwrap(), monomial_basis(3, k).len() as u64);
        }
        for k in -12i64..=4 {
            assert_eq!(h_p2(2, k).unwrap(), laurent_top_count(3, k));
        }
    }

    #[test]
    fn quadric_examples() {
        for d in 0i64..8 {
            let l = BidegreeLine::new(d, d);
            assert_eq!(h_p1xp1(0, l).unwrap(), ((d + 1) * (d + 1)) as u64);
            assert_eq!(h_p1xp1(1, l).unwrap(), 0);
        }
        assert_eq!(h_p1xp1(1, BidegreeLine::new(-2, 8)), Ok(9));
        assert_eq!(h_p1xp1(0, BidegreeLine::new(0, 0)), Ok(1));
        assert!(h_p1xp1(3, BidegreeLine::new(0, 0)).is_err());
    }

    #[test]
    fn quadric_matches_cech_enumeration() {
        for a in -8i64..=8 {
            for b in -8i64..=8 {
                for i in 0..3 {
                    assert_eq!(
                        h_p1xp1(i, BidegreeLine::new(a, b)).unwrap(),
                        quadric_cech(i, a, b),
                        "h^{i}(O({a},{b}))"
                    );
                }
            }
        }
    }

    #[test]
    fn quadric_serre_duality() {
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                for i in 0..3 {
                    assert_eq!(
                        h_p1xp1(i, BidegreeLine::new(a, b)).unwrap(),
                        h_p1xp1(2 - i, BidegreeLine::new(-a - 2, -b - 2)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn blowup_examples() {
        let l = BlowupLine::new(3, [-1; 7]);
        assert_eq!(h_blowup7(0, &l).unwrap().value, 10);
        assert_eq!(h_blowup7(1, &l).unwrap().value, 7);
        let l = BlowupLine::new(2, [0; 7]);
        assert_eq!(h_blowup7(0, &l).unwrap().value, 6);
        assert_eq!(h_blowup7(1, &l).unwrap().value, 0);
        assert_eq!(
            h_blowup7(0, &BlowupLine::new(-2, [0; 7])),
            Err(CohomologyError::NeedsDuality(-2))
        );
        assert!(h_blowup7(2, &l).is_err());
    }

    #[test]
    fn negative_counts_are_flagged() {
        // the formula charges t(t+1)/2 = 1 per point at t = -2
        let l = BlowupLine::new(1, [-2; 7]);
        let h0 = h_blowup7(0, &l).unwrap();
        assert!(h0.clamped());
        assert_eq!(h0.value, 0);
        assert_eq!(h0.raw, 3 - 7);
    }

    #[test]
    fn anticanonical_sections_exceed_vanishing_count() {
        // -dK is nef and -(d+1)K ample on a degree-2 del Pezzo, so h^1 = h^2 = 0
        // and h^0 = chi. The formula keeps chi but shifts 7d into both h^0 and h^1.
        for d in 1..=6i64 {
            let line = BlowupLine::anticanonical_power(d);
            let chi = euler_blowup7(&line);
            assert_eq!(chi, rat(d * d + d + 1));
            let h0 = h_blowup7_special(0, d as u64).unwrap() as i64;
            let h1 = h_blowup7_special(1, d as u64).unwrap() as i64;
            assert_eq!(rat(h0 - h1), chi);
            assert_eq!(h0 - (d * d + d + 1), 7 * d);
        }
        // lines through one point: 2 sections, the formula says 3
        let l = BlowupLine::new(1, [-1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(euler_blowup7(&l), rat(2));
        assert_eq!(h_blowup7(0, &l).unwrap().value, 3);
    }

    #[test]
    fn special_examples() {
        assert_eq!(h_blowup7_special(0, 0), Ok(1));
        assert_eq!(h_blowup7_special(1, 2), Ok(14));
        assert_eq!(h_blowup7_special(0, 2), Ok(21));
    }

    #[test]
    fn special_agrees_with_general_formula() {
        for d in 0i64..=6 {
            let l = BlowupLine::anticanonical_power(d);
            for i in 0..2 {
                let general = h_blowup7(i, &l).unwrap();
                assert!(!general.clamped());
                assert_eq!(general.value, h_blowup7_special(i, d as u64).unwrap());
            }
        }
    }

    #[test]
    fn restricted_sum_makes_cases_agree() {
        // with every t_j >= 0 the curve count is just the plane section count
        let l = BlowupLine::new(4, [0, 1, 2, 0, 3, 0, 1]);
        assert_eq!(curve_count(&l), plane_sections(4));
    }

    #[test]
    fn euler_characteristic_matches_riemann_roch() {
        let ts = [-3i64, -2, -1, 0, 1, 2];
        let mut checked = 0;
        for p in -1i64..=6 {
            for &a in &ts {
                for &b in &ts {
                    for &c in &ts {
                        let line = BlowupLine::new(p, [a, b, c, a, 0, b, -1]);
                        let h0 = h_blowup7(0, &line).unwrap();
                        let h1 = h_blowup7(1, &line).unwrap();
                        let chi = rat(h0.raw - h1.raw);
                        assert_eq!(chi, euler_blowup7(&line), "{line:?}");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 1000);
    }
}
