//! Combinatorial components of the `C*`-fixed locus.
//!
//! A fixed pair is `E = O(m) (I_{Z1} + I_{Z2}(-j))` with `Z2 <= Z1` and a
//! nilpotent field `[[0, 0], [s, 0]]`, `s` in `H^0(O(d - j))`. Components are
//! indexed by `(m, j)` and the lengths `(l1, l2)` of the two subschemes.

use serde::{Deserialize, Serialize};

use crate::cohomology::sections_p2;
use crate::exact::HomPoly;
use crate::split::{char_poly, PolyMatrix2, SplitError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityFlag {
    /// `j >= 1` and both subschemes empty: the only invariant subsheaf has
    /// strictly smaller slope.
    Stable,
    /// `j = 0`: the invariant summand has the same slope as `E`.
    StrictlySemistableCandidate,
    /// nonempty subschemes; stability is not checked
    Candidate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FixedComponent {
    pub m: i64,
    pub j: i64,
    pub l1: u64,
    pub l2: u64,
    pub higgs_dim: u64,
    pub stability_flag: StabilityFlag,
}

impl FixedComponent {
    pub fn c1(&self) -> i64 {
        2 * self.m - self.j
    }

    pub fn c2(&self) -> i64 {
        self.m * (self.m - self.j) + (self.l1 + self.l2) as i64
    }

    /// The nilpotent field `[[0, 0], [s, 0]]` on `O(m) + O(m - j)` with the
    /// given section `s` of `O(d - j)`. Ideal sheaves are ignored; only the
    /// matrix shape matters here.
    pub fn higgs_field(&self, d: i64, s: HomPoly) -> Result<PolyMatrix2, SplitError> {
        PolyMatrix2::lower_triangular(self.m, self.m - self.j, d, s)
    }
}

/// `h^0(O(d - j))`.
pub fn higgs_family_dim(d: i64, j: i64) -> u64 {
    sections_p2(d - j)
}

/// All fixed components with the given Chern data, sorted by `(j, l1)`.
pub fn enumerate_fixed(c1: i64, c2: i64, d: u64) -> Vec<FixedComponent> {
    let d = d as i64;
    let mut out = Vec::new();
    for j in 0..=d {
        if (c1 + j).rem_euclid(2) != 0 {
            continue;
        }
        let m = (c1 + j) / 2;
        let n = c2 - m * (m - j);
        if n < 0 {
            continue;
        }
        let n = n as u64;
        for l2 in 0..=n / 2 {
            let l1 = n - l2;
            let stability_flag = if j == 0 {
                StabilityFlag::StrictlySemistableCandidate
            } else if l1 > 0 {
                StabilityFlag::Candidate
            } else {
                StabilityFlag::Stable
            };
            out.push(FixedComponent {
                m,
                j,
                l1,
                l2,
                higgs_dim: higgs_family_dim(d, j),
                stability_flag,
            });
        }
    }
    out.sort_by_key(|c| (c.j, c.l1));
    out
}

/// Trace and determinant both vanish, i.e. `Phi^2 = 0` in rank two.
pub fn nilpotency_check(phi: &PolyMatrix2) -> bool {
    let cp = char_poly(phi);
    cp.trace.is_zero() && cp.det.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{monomial_basis, rat, Rational};
    use crate::split::random_stable_higgs;

    #[test]
    fn example_no_points() {
        assert_eq!(
            enumerate_fixed(-1, 0, 1),
            vec![FixedComponent {
                m: 0,
                j: 1,
                l1: 0,
                l2: 0,
                higgs_dim: 1,
                stability_flag: StabilityFlag::Stable
            }]
        );
    }

    #[test]
    fn example_one_point() {
        assert_eq!(
            enumerate_fixed(-1, 1, 1),
            vec![FixedComponent {
                m: 0,
                j: 1,
                l1: 1,
                l2: 0,
                higgs_dim: 1,
                stability_flag: StabilityFlag::Candidate
            }]
        );
    }

    #[test]
    fn example_two_points_has_both_nestings() {
        let comps = enumerate_fixed(-1, 2, 1);
        let lengths: Vec<(u64, u64)> = comps.iter().map(|c| (c.l1, c.l2)).collect();
        // {p1, p2} with Z2 empty, and Z1 = Z2 = {p}
        assert_eq!(lengths, vec![(1, 1), (2, 0)]);
    }

    #[test]
    fn negative_c2_is_empty_at_d1() {
        assert!(enumerate_fixed(0, -1, 1).is_empty());
        for c1 in -6..=6 {
            for c2 in -20..0 {
                assert!(enumerate_fixed(c1, c2, 1).is_empty(), "c1={c1} c2={c2}");
            }
        }
    }

    #[test]
    fn negative_c2_is_populated_at_d2() {
        // m = 1, j = 2: c1 = 0, c2 = -1 + n
        let comps = enumerate_fixed(0, -1, 2);
        assert_eq!(comps.len(), 1);
        assert_eq!((comps[0].m, comps[0].j, comps[0].l1), (1, 2, 0));
    }

    #[test]
    fn nonpositive_c2_case_analysis() {
        // with no points, c2 <= 0 forces m(m - j) <= 0
        for d in 0..=4u64 {
            for c1 in -6..=6 {
                for c2 in -6..=0 {
                    for comp in enumerate_fixed(c1, c2, d) {
                        assert!(comp.m * (comp.m - comp.j) <= 0);
                        if comp.l1 + comp.l2 == 0 {
                            assert_eq!(comp.c2(), comp.m * (comp.m - comp.j));
                        }
                    }
                }
            }
        }
        // c2 = 0 with m = 0 or m = j and no points: O + O(-j) and O(j) + O
        let comps = enumerate_fixed(-1, 0, 1);
        assert!(comps.iter().all(|c| c.m == 0 && c.l1 + c.l2 == 0));
        let comps = enumerate_fixed(1, 0, 1);
        assert!(comps.iter().all(|c| c.m == c.j && c.l1 + c.l2 == 0));
    }

    #[test]
    fn c2_equal_one_case_analysis() {
        for d in 0..=4u64 {
            for c1 in -6..=6 {
                for comp in enumerate_fixed(c1, 1, d) {
                    let e = comp.m * (comp.m - comp.j);
                    match e {
                        0 => {
                            assert!(comp.m == 0 || comp.m == comp.j);
                            assert_eq!((comp.l1, comp.l2), (1, 0));
                        }
                        // O(1) + O(1) and O(-1) + O(-1), both with j = 0
                        1 => {
                            assert_eq!((comp.j, comp.m.abs(), comp.l1 + comp.l2), (0, 1, 0));
                            assert_eq!(comp.stability_flag, StabilityFlag::StrictlySemistableCandidate);
                        }
                        _ => {
                            assert!(e < 0 && 0 < comp.m && comp.m < comp.j);
                            assert_eq!((comp.l1 + comp.l2) as i64, 1 - e);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn components_satisfy_chern_identities() {
        for d in 0..=4u64 {
            for c1 in -6..=6 {
                for c2 in -6..=8 {
                    for comp in enumerate_fixed(c1, c2, d) {
                        assert_eq!(2 * comp.m - comp.j, c1);
                        assert_eq!(comp.m * (comp.m - comp.j) + (comp.l1 + comp.l2) as i64, c2);
                        assert!(comp.l2 <= comp.l1);
                        assert!((0..=d as i64).contains(&comp.j));
                        assert_eq!(comp.higgs_dim, monomial_basis(3, d as i64 - comp.j).len() as u64);
                    }
                }
            }
        }
    }

    #[test]
    fn sorted_by_j_then_l1() {
        let comps = enumerate_fixed(0, 4, 4);
        let keys: Vec<(i64, u64)> = comps.iter().map(|c| (c.j, c.l1)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(comps.iter().any(|c| c.j == 0));
        assert!(comps
            .iter()
            .filter(|c| c.j == 0)
            .all(|c| c.stability_flag == StabilityFlag::StrictlySemistableCandidate));
    }

    #[test]
    fn tensoring_by_o1_shifts_m() {
        for d in 0..=3u64 {
            for c1 in -5..=5 {
                for c2 in -4..=6 {
                    let base = enumerate_fixed(c1, c2, d);
                    let shifted = enumerate_fixed(c1 + 2, c2 + c1 + 1, d);
                    let moved: Vec<FixedComponent> = base
                        .iter()
                        .map(|c| FixedComponent { m: c.m + 1, ..*c })
                        .collect();
                    assert_eq!(shifted, moved);
                }
            }
        }
    }

    #[test]
    fn emitted_fields_are_nilpotent() {
        for comp in enumerate_fixed(1, 3, 3) {
            let degree = 3 - comp.j;
            let coeffs: Vec<Rational> = (1..=monomial_basis(3, degree).len() as i64).map(rat).collect();
            let s = HomPoly::from_coefficients(3, degree, &coeffs).unwrap();
            let phi = comp.higgs_field(3, s).unwrap();
            assert!(nilpotency_check(&phi));
        }
    }

    #[test]
    fn nilpotency_examples() {
        let x0 = HomPoly::var(3, 0).unwrap();
        let z = HomPoly::zero(3, 1).unwrap();
        let lower = PolyMatrix2::lower_triangular(0, 0, 1, x0.clone()).unwrap();
        assert!(nilpotency_check(&lower));
        let diag = PolyMatrix2::trace_free(0, 0, 1, x0, z.clone(), z).unwrap();
        assert!(!nilpotency_check(&diag));
        assert!(nilpotency_check(&PolyMatrix2::zero(0, 0, 1)));
        // generic fields are not nilpotent
        assert!(!nilpotency_check(&random_stable_higgs(0, 1, 2).unwrap()));
    }

    #[test]
    fn family_dims() {
        assert_eq!(higgs_family_dim(1, 1), 1);
        assert_eq!(higgs_family_dim(2, 1), 3);
        assert_eq!(higgs_family_dim(3, 0), 10);
    }
}
