//! Sparse polynomials in `t, u` over the rationals, and dense square matrices
//! of them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// One of the two indeterminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    T,
    U,
}

/// A polynomial `Σ c·t^i·u^j`, keyed by `(i, j)`. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rational64>,
}

impl Poly2 {
    pub fn zero() -> Poly2 {
        Poly2::default()
    }

    pub fn one() -> Poly2 {
        Poly2::constant(Rational64::one())
    }

    pub fn constant(c: Rational64) -> Poly2 {
        Poly2::monomial(c, 0, 0)
    }

    pub fn integer(c: i64) -> Poly2 {
        Poly2::constant(Rational64::from_integer(c))
    }

    /// `c·t^i·u^j`.
    pub fn monomial(c: Rational64, i: u32, j: u32) -> Poly2 {
        let mut p = Poly2::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn t() -> Poly2 {
        Poly2::monomial(Rational64::one(), 1, 0)
    }

    pub fn u() -> Poly2 {
        Poly2::monomial(Rational64::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Rational64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational64 {
        self.terms
            .get(&(i, j))
            .copied()
            .unwrap_or_else(Rational64::zero)
    }

    /// Value at `t = t0`, `u = u0`.
    pub fn evaluate(&self, t0: Rational64, u0: Rational64) -> Rational64 {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| c * pow(t0, i) * pow(u0, j))
            .sum()
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational64) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rational64::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: Rational64) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(&k, &v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly2 {
        (0..k).fold(Poly2::one(), |acc, _| &acc * self)
    }

    /// Replaces `var` by `value` everywhere.
    pub fn substitute(&self, var: Var, value: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i, j), &c) in &self.terms {
            let (power, rest) = match var {
                Var::T => (value.pow(i), Poly2::monomial(c, 0, j)),
                Var::U => (value.pow(j), Poly2::monomial(c, i, 0)),
            };
            out = &out + &(&power * &rest);
        }
        out
    }
}

fn pow(x: Rational64, k: u32) -> Rational64 {
    (0..k).fold(Rational64::one(), |acc, _| acc * x)
}

impl Add for &Poly2 {
    type Output = Poly2;

    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&k, &v) in &rhs.terms {
            out.add_term(k, v);
        }
        out
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;

    fn sub(self, rhs: &Poly2) -> Poly2 {
        self + &(-rhs)
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;

    fn neg(self) -> Poly2 {
        self.scale(-Rational64::one())
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i1, j1), &c1) in &self.terms {
            for (&(i2, j2), &c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Highest total degree first.
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&((i, j), _)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        for (n, ((i, j), c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (n, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let magnitude = c.abs();
            if !magnitude.is_one() || (i, j) == (0, 0) {
                write!(f, "{magnitude}")?;
            }
            for (var, exp) in [("t", i), ("u", j)] {
                match exp {
                    0 => {}
                    1 => f.write_str(var)?,
                    _ => write!(f, "{var}^{exp}")?,
                }
            }
        }
        Ok(())
    }
}

/// A dense `dim × dim` matrix over [`Poly2`], row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<Poly2>,
}

impl PolyMatrix {
    pub fn zero(dim: usize) -> PolyMatrix {
        PolyMatrix {
            dim,
            entries: vec![Poly2::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zero(dim);
        for i in 0..dim {
            m.set(i, i, Poly2::one());
        }
        m
    }

    /// Builds a constant matrix from integer rows.
    pub fn from_integers(rows: &[Vec<i64>]) -> PolyMatrix {
        let dim = rows.len();
        let mut m = PolyMatrix::zero(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, Poly2::integer(v));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly2 {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Poly2) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly2::is_zero)
    }

    /// Position of the first non-integral entry, if any.
    pub fn first_non_integral(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|p| !p.is_integral())
            .map(|k| (k / self.dim, k % self.dim))
    }

    /// Position of the first entry where `self` and `other` differ.
    pub fn first_difference(&self, other: &PolyMatrix) -> Option<(usize, usize)> {
        if self.dim != other.dim {
            return Some((0, 0));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(x, y)| x != y)
            .map(|k| (k / self.dim, k % self.dim))
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let n = self.dim;
        let mut out = PolyMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let left = self.get(i, k);
                if left.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let right = other.get(k, j);
                    if right.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.entries[idx] = &out.entries[idx] + &(left * right);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(PolyMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    /// Multiplies every entry by the polynomial `f`.
    pub fn scale(&self, f: &Poly2) -> PolyMatrix {
        PolyMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|p| p * f).collect(),
        }
    }

    /// Product of a sequence of matrices, left to right.
    pub fn product<'a>(
        dim: usize,
        factors: impl IntoIterator<Item = &'a PolyMatrix>,
    ) -> Result<PolyMatrix> {
        factors
            .into_iter()
            .try_fold(PolyMatrix::identity(dim), |acc, m| acc.mul(m))
    }
}

/// `Σ_{k<bound} f^k N^k / k!`, after checking that `N^bound = 0`.
pub fn exp_nilpotent(n: &PolyMatrix, f: &Poly2, bound: usize) -> Result<PolyMatrix> {
    let dim = n.dim();
    let mut power = PolyMatrix::identity(dim);
    let mut f_power = Poly2::one();
    let mut factorial = Rational64::one();
    let mut out = PolyMatrix::zero(dim);
    for k in 0..bound {
        if k > 0 {
            power = power.mul(n)?;
            f_power = &f_power * f;
            factorial *= Rational64::from_integer(k as i64);
        }
        out = out.add(&power.scale(&f_power.scale(factorial.recip())))?;
    }
    if !power.mul(n)?.is_zero() {
        return Err(Error::NotNilpotent(bound));
    }
    Ok(out)
}
