use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{ExactError, Rational};

/// All exponent vectors of total degree `degree` in `num_vars` variables, in
/// graded-lexicographic order (x0 > x1 > x2, largest first).
///
/// Negative degrees have no monomials and give an empty list.
pub fn monomial_basis(num_vars: usize, degree: i64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if degree < 0 || num_vars == 0 {
        return out;
    }
    let mut current = vec![0u32; num_vars];
    fill_lex(&mut current, 0, degree as u32, &mut out);
    out
}

fn fill_lex(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_lex(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

/// A homogeneous polynomial with exact rational coefficients in 2 or 3
/// variables.
///
/// The degree is always declared, also for the zero polynomial. A negative
/// declared degree is allowed only for zero; it stands for a section of a line
/// bundle with no global sections.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomPoly {
    num_vars: usize,
    degree: i64,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl HomPoly {
    pub fn zero(num_vars: usize, degree: i64) -> Result<Self, ExactError> {
        check_vars(num_vars)?;
        Ok(Self {
            num_vars,
            degree,
            terms: BTreeMap::new(),
        })
    }

    pub fn from_terms<I>(num_vars: usize, degree: i64, terms: I) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(num_vars, degree)?;
        for (exps, coeff) in terms {
            if exps.len() != num_vars || exps.iter().map(|&e| e as i64).sum::<i64>() != degree {
                return Err(ExactError::BadExponent {
                    exponents: exps,
                    degree,
                });
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }

    pub fn monomial(num_vars: usize, exps: Vec<u32>, coeff: Rational) -> Result<Self, ExactError> {
        let degree = exps.iter().map(|&e| e as i64).sum();
        Self::from_terms(num_vars, degree, [(exps, coeff)])
    }

    /// The coordinate function `x_i`.
    pub fn var(num_vars: usize, i: usize) -> Result<Self, ExactError> {
        let mut exps = vec![0; num_vars];
        if i >= num_vars {
            return Err(ExactError::BadExponent {
                exponents: exps,
                degree: 1,
            });
        }
        exps[i] = 1;
        Self::monomial(num_vars, exps, Rational::one())
    }

    /// Builds a polynomial from coordinates against `monomial_basis(num_vars, degree)`.
    pub fn from_coefficients(
        num_vars: usize,
        degree: i64,
        coeffs: &[Rational],
    ) -> Result<Self, ExactError> {
        let basis = monomial_basis(num_vars, degree);
        Self::from_terms(num_vars, degree, basis.into_iter().zip(coeffs.iter().cloned()))
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coordinates against `monomial_basis(num_vars, degree)`.
    pub fn coefficients(&self) -> Vec<Rational> {
        monomial_basis(self.num_vars, self.degree)
            .iter()
            .map(|e| self.coeff(e))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self {
            num_vars: self.num_vars,
            degree: self.degree,
            terms: BTreeMap::new(),
        };
        if !k.is_zero() {
            out.terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        poly_mul(self, other)
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_space(&self, other: &Self) -> Result<(), ExactError> {
        if self.num_vars != other.num_vars {
            return Err(ExactError::VarCountMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        if self.degree != other.degree {
            return Err(ExactError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }
}

fn check_vars(num_vars: usize) -> Result<(), ExactError> {
    if num_vars == 2 || num_vars == 3 {
        Ok(())
    } else {
        Err(ExactError::UnsupportedVarCount(num_vars))
    }
}

/// Exact product; the result has degree `p.degree() + q.degree()`.
pub fn poly_mul(p: &HomPoly, q: &HomPoly) -> Result<HomPoly, ExactError> {
    if p.num_vars != q.num_vars {
        return Err(ExactError::VarCountMismatch {
            left: p.num_vars,
            right: q.num_vars,
        });
    }
    let mut out = HomPoly {
        num_vars: p.num_vars,
        degree: p.degree + q.degree,
        terms: BTreeMap::new(),
    };
    for (e1, c1) in &p.terms {
        for (e2, c2) in &q.terms {
            let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
            out.add_term(e, c1 * c2);
        }
    }
    Ok(out)
}

impl fmt::Debug for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomPoly[deg {}]({})", self.degree, self)
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // largest monomial first
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (v, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{v}")?,
                    _ => write!(f, "*x{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}
