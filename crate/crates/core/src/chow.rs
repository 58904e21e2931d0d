//! Chow ring of the plane, Chern characters, the Todd class and
//! Hirzebruch-Riemann-Roch Euler characteristics.

use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{frac, rat, to_integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HrrError {
    #[error("Euler characteristic {0} is not an integer; Chern data is inconsistent")]
    NonIntegral(Rational),
}

/// `c0 + c1 H + c2 H^2` in the Chow ring of the plane, where `H^3 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChowClass {
    pub c0: Rational,
    pub c1: Rational,
    pub c2: Rational,
}

impl ChowClass {
    pub fn new(c0: Rational, c1: Rational, c2: Rational) -> Self {
        Self { c0, c1, c2 }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64) -> Self {
        Self::new(rat(c0), rat(c1), rat(c2))
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0)
    }

    /// Degree of the zero-cycle part.
    pub fn degree(&self) -> &Rational {
        &self.c2
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;

    fn add(self, rhs: &ChowClass) -> ChowClass {
        ChowClass::new(&self.c0 + &rhs.c0, &self.c1 + &rhs.c1, &self.c2 + &rhs.c2)
    }
}

impl Mul for &ChowClass {
    type Output = ChowClass;

    fn mul(self, rhs: &ChowClass) -> ChowClass {
        ChowClass::new(
            &self.c0 * &rhs.c0,
            &self.c0 * &rhs.c1 + &self.c1 * &rhs.c0,
            &self.c0 * &rhs.c2 + &self.c1 * &rhs.c1 + &self.c2 * &rhs.c0,
        )
    }
}

/// Chern classes `c1(E) = c1 H`, `c2(E) = c2 H^2` of a rank-two bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChernPair {
    pub c1: i64,
    pub c2: i64,
}

impl ChernPair {
    pub fn new(c1: i64, c2: i64) -> Self {
        Self { c1, c2 }
    }

    /// Chern pair of `O(a) + O(b)`.
    pub fn split(a: i64, b: i64) -> Self {
        Self::new(a + b, a * b)
    }

    pub fn discriminant(&self) -> i64 {
        self.c1 * self.c1 - 4 * self.c2
    }
}

/// `ch(End_0 E) = 3 + (c1^2 - 4 c2) H^2`.
pub fn chern_character_end0(c: ChernPair) -> ChowClass {
    ChowClass::from_ints(3, 0, c.discriminant())
}

/// `ch(O(d)) = 1 + d H + d^2/2 H^2`.
pub fn chern_character_line(d: i64) -> ChowClass {
    ChowClass::new(rat(1), rat(d), frac(d * d, 2))
}

pub fn todd_p2() -> ChowClass {
    ChowClass::new(rat(1), frac(3, 2), rat(1))
}

/// Degree-two part of `ch * td(P^2)`.
pub fn euler_char(ch: &ChowClass) -> Rational {
    (ch * &todd_p2()).c2
}

/// `chi(End_0 E(d))`, which must come out integral.
pub fn chi_end0_twist(c: ChernPair, d: i64) -> Result<i64, HrrError> {
    let ch = &chern_character_end0(c) * &chern_character_line(d);
    let chi = euler_char(&ch);
    to_integer(&chi).ok_or(HrrError::NonIntegral(chi))
}
