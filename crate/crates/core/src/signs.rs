//! Coefficients of the form `q·ε1^k1·ε2^k2·ε3^k3·ε4^k4` with `q` rational.
//!
//! Each `εi` is a sign, so exponents live in `Z/2` and every monomial is its
//! own inverse. `ε5` is not a generator: it is stored as `ε1ε3ε4`.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Product of sign generators, one bit per `ε1..ε4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignMonomial(u8);

impl SignMonomial {
    pub const ONE: SignMonomial = SignMonomial(0);
    /// `ε5 = ε1ε3/ε4 = ε1ε3ε4`.
    pub const EPS5: SignMonomial = SignMonomial(0b1101);

    /// The generator `ε_k` for `k` in `1..=5`.
    pub fn eps(k: usize) -> SignMonomial {
        match k {
            1..=4 => SignMonomial(1 << (k - 1)),
            5 => Self::EPS5,
            _ => panic!("no sign generator ε{k}"),
        }
    }

    pub fn from_bits(bits: u8) -> SignMonomial {
        SignMonomial(bits & 0b1111)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn exponent(self, k: usize) -> u8 {
        (self.0 >> (k - 1)) & 1
    }

    /// Value of the monomial under `sigma`: `+1` or `-1`.
    pub fn evaluate(self, sigma: SignAssignment) -> i64 {
        (1..=4)
            .filter(|&k| self.exponent(k) == 1)
            .map(|k| sigma.value(k))
            .product()
    }

    /// Generator indices in display order. Any monomial other than `ε4`
    /// itself that involves `ε4` is written with `ε5` instead.
    fn display_factors(self) -> Vec<usize> {
        let (rest, with_five) = if self.exponent(4) == 1 && self != Self::eps(4) {
            (self * Self::EPS5, true)
        } else {
            (self, false)
        };
        let mut out: Vec<usize> = (1..=4).filter(|&k| rest.exponent(k) == 1).collect();
        if with_five {
            out.push(5);
        }
        out
    }
}

impl Mul for SignMonomial {
    type Output = SignMonomial;

    // Exponents live in Z/2, so multiplication adds them bitwise mod 2.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: SignMonomial) -> SignMonomial {
        SignMonomial(self.0 ^ rhs.0)
    }
}

/// A concrete choice `εi ∈ {-1, +1}` for `i = 1..4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignAssignment([i8; 4]);

impl SignAssignment {
    pub const ALL_PLUS: SignAssignment = SignAssignment([1; 4]);

    pub fn new(values: [i8; 4]) -> Option<SignAssignment> {
        values
            .iter()
            .all(|v| *v == 1 || *v == -1)
            .then_some(SignAssignment(values))
    }

    /// All 16 assignments, `++++` first; bit `k` of the index flips `ε(k+1)`.
    pub fn all() -> impl Iterator<Item = SignAssignment> {
        (0u8..16).map(|mask| {
            let mut values = [1i8; 4];
            for (k, v) in values.iter_mut().enumerate() {
                if mask >> k & 1 == 1 {
                    *v = -1;
                }
            }
            SignAssignment(values)
        })
    }

    /// Value of `ε_k` for `k` in `1..=5`.
    pub fn value(self, k: usize) -> i64 {
        match k {
            1..=4 => self.0[k - 1] as i64,
            5 => SignMonomial::EPS5.evaluate(self),
            _ => panic!("no sign generator ε{k}"),
        }
    }

    pub fn values(self) -> [i8; 4] {
        self.0
    }
}

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.0 {
            f.write_str(if v > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for SignAssignment {
    type Err = Error;

    /// Four signs, optionally separated by spaces or commas: `+-++`, `+ - + +`.
    fn from_str(input: &str) -> Result<SignAssignment> {
        let bad = || Error::Parse {
            what: "sign assignment",
            input: input.to_string(),
        };
        let mut values = Vec::with_capacity(4);
        for c in input.chars() {
            match c {
                '+' => values.push(1),
                '-' | '−' => values.push(-1),
                ' ' | ',' => {}
                _ => return Err(bad()),
            }
        }
        let values: [i8; 4] = values.try_into().map_err(|_| bad())?;
        Ok(SignAssignment(values))
    }
}

/// How sign symbols are spelled when rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Notation {
    /// `-3ε5`
    Unicode,
    /// `-3e5`
    Ascii,
    /// `-3\epsilon_5`
    Latex,
}

impl Notation {
    fn symbol(self, k: usize) -> String {
        match self {
            Notation::Unicode => format!("ε{k}"),
            Notation::Ascii => format!("e{k}"),
            Notation::Latex => format!("\\epsilon_{k}"),
        }
    }
}

/// `coeff · mono`; zero is always stored with the unit monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignCoefficient {
    coeff: Rational64,
    mono: SignMonomial,
}

impl SignCoefficient {
    pub fn new(coeff: Rational64, mono: SignMonomial) -> SignCoefficient {
        if coeff.is_zero() {
            SignCoefficient::zero()
        } else {
            SignCoefficient { coeff, mono }
        }
    }

    pub fn zero() -> SignCoefficient {
        SignCoefficient {
            coeff: Rational64::zero(),
            mono: SignMonomial::ONE,
        }
    }

    pub fn integer(value: i64) -> SignCoefficient {
        SignCoefficient::new(Rational64::from_integer(value), SignMonomial::ONE)
    }

    /// `value · ε_k`.
    pub fn eps(value: i64, k: usize) -> SignCoefficient {
        SignCoefficient::new(Rational64::from_integer(value), SignMonomial::eps(k))
    }

    pub fn coeff(self) -> Rational64 {
        self.coeff
    }

    pub fn mono(self) -> SignMonomial {
        self.mono
    }

    pub fn is_zero(self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(self, factor: Rational64) -> SignCoefficient {
        SignCoefficient::new(self.coeff * factor, self.mono)
    }

    /// Sum of two coefficients sharing a monomial (or with one side zero).
    pub fn checked_add(self, other: SignCoefficient) -> Result<SignCoefficient> {
        if self.is_zero() {
            Ok(other)
        } else if other.is_zero() {
            Ok(self)
        } else if self.mono == other.mono {
            Ok(SignCoefficient::new(self.coeff + other.coeff, self.mono))
        } else {
            Err(Error::MixedMonomials(self, other))
        }
    }

    pub fn checked_div(self, other: SignCoefficient) -> Result<SignCoefficient> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(SignCoefficient::new(
            self.coeff / other.coeff,
            self.mono * other.mono,
        ))
    }

    pub fn specialize(self, sigma: SignAssignment) -> Rational64 {
        self.coeff * Rational64::from_integer(self.mono.evaluate(sigma))
    }

    /// The rational part as an integer, if it is one.
    pub fn integer_coeff(self) -> Option<i64> {
        self.coeff.is_integer().then(|| self.coeff.to_integer())
    }

    pub fn render(self, notation: Notation) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        if self.coeff.is_negative() {
            out.push('-');
        }
        let magnitude = self.coeff.abs();
        let factors = self.mono.display_factors();
        if !magnitude.is_one() || factors.is_empty() {
            out.push_str(&magnitude.to_string());
        }
        for k in factors {
            out.push_str(&notation.symbol(k));
        }
        out
    }
}

impl Default for SignCoefficient {
    fn default() -> Self {
        SignCoefficient::zero()
    }
}

impl Mul for SignCoefficient {
    type Output = SignCoefficient;

    fn mul(self, rhs: SignCoefficient) -> SignCoefficient {
        SignCoefficient::new(self.coeff * rhs.coeff, self.mono * rhs.mono)
    }
}

impl Neg for SignCoefficient {
    type Output = SignCoefficient;

    fn neg(self) -> SignCoefficient {
        SignCoefficient::new(-self.coeff, self.mono)
    }
}

impl From<SignMonomial> for SignCoefficient {
    fn from(mono: SignMonomial) -> Self {
        SignCoefficient::new(Rational64::one(), mono)
    }
}

impl fmt::Display for SignCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Unicode))
    }
}

impl FromStr for SignCoefficient {
    type Err = Error;

    /// Parses any of the three notations, e.g. `-3ε5`, `2e1e2`, `\epsilon_4`,
    /// `-1/2ε5`, `0`.
    fn from_str(input: &str) -> Result<SignCoefficient> {
        let bad = || Error::Parse {
            what: "sign coefficient",
            input: input.to_string(),
        };
        let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let (negative, rest) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.as_str()),
        };
        let split = rest
            .find(|c: char| !(c.is_ascii_digit() || c == '/'))
            .unwrap_or(rest.len());
        let (number, mut symbols) = rest.split_at(split);
        let mut coeff = if number.is_empty() {
            Rational64::one()
        } else {
            number.parse::<Rational64>().map_err(|_| bad())?
        };
        if negative {
            coeff = -coeff;
        }
        if number.is_empty() && symbols.is_empty() {
            return Err(bad());
        }
        let mut mono = SignMonomial::ONE;
        while !symbols.is_empty() {
            let after = ["\\epsilon_", "ε", "e"]
                .iter()
                .find_map(|prefix| symbols.strip_prefix(prefix))
                .ok_or_else(bad)?;
            let mut chars = after.chars();
            let k = chars
                .next()
                .and_then(|c| c.to_digit(10))
                .filter(|k| (1..=5).contains(k))
                .ok_or_else(bad)?;
            mono = mono * SignMonomial::eps(k as usize);
            symbols = chars.as_str();
        }
        Ok(SignCoefficient::new(coeff, mono))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(text: &str) -> SignCoefficient {
        text.parse().unwrap()
    }

    fn sigma(text: &str) -> SignAssignment {
        text.parse().unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(c("ε5") * c("ε4"), c("ε1ε3"));
        assert_eq!(c("2ε2") * c("3ε3"), c("6ε2ε3"));
        assert!((c("-3ε5") * SignCoefficient::zero()).is_zero());
        for bits in 0..16 {
            let m = SignMonomial::from_bits(bits);
            assert_eq!(m * m, SignMonomial::ONE);
        }
    }

    #[test]
    fn quotients() {
        assert_eq!(c("-3ε1ε3").checked_div(c("-ε4")), Ok(c("3ε5")));
        assert_eq!(c("6ε2ε3").checked_div(c("2ε2")), Ok(c("3ε3")));
        assert_eq!(c("-7/2ε2ε4").checked_div(c("-7/2ε2ε4")), Ok(c("1")));
        assert_eq!(
            c("ε1").checked_div(SignCoefficient::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn addition_needs_one_monomial() {
        assert_eq!(c("2ε1").checked_add(c("-ε1")), Ok(c("ε1")));
        assert_eq!(c("ε1").checked_add(c("-ε1")), Ok(SignCoefficient::zero()));
        assert_eq!(c("0").checked_add(c("ε3")), Ok(c("ε3")));
        assert!(matches!(
            c("ε1").checked_add(c("ε2")),
            Err(Error::MixedMonomials(..))
        ));
    }

    #[test]
    fn specialization() {
        assert_eq!(c("-3ε5").specialize(SignAssignment::ALL_PLUS), (-3).into());
        assert_eq!(c("ε5").specialize(sigma("+++-")), (-1).into());
        assert_eq!(SignCoefficient::zero().specialize(sigma("-+-+")), 0.into());
        assert_eq!(SignAssignment::all().count(), 16);
        let distinct: std::collections::HashSet<_> = SignAssignment::all().collect();
        assert_eq!(distinct.len(), 16);
        for s in SignAssignment::all() {
            assert_eq!(s.value(5), s.value(1) * s.value(3) / s.value(4));
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(c("-3ε5").to_string(), "-3ε5");
        assert_eq!(c("-3ε5").render(Notation::Ascii), "-3e5");
        assert_eq!(c("-3ε5").render(Notation::Latex), "-3\\epsilon_5");
        assert_eq!(c("ε1ε2ε4").to_string(), "ε2ε3ε5");
        assert_eq!(c("ε2ε3ε4").to_string(), "ε1ε2ε5");
        assert_eq!(c("ε4").to_string(), "ε4");
        assert_eq!(c("-ε1ε2ε3ε4").to_string(), "-ε2ε5");
        assert_eq!(c("1").to_string(), "1");
        assert_eq!(c("-1/2ε5").to_string(), "-1/2ε5");
        assert_eq!(SignCoefficient::zero().to_string(), "0");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "-", "ε6", "x", "2ε", "e0", "1//2"] {
            assert!(bad.parse::<SignCoefficient>().is_err(), "{bad:?} parsed");
        }
        for bad in ["+++", "+++++", "++x+"] {
            assert!(bad.parse::<SignAssignment>().is_err(), "{bad:?} parsed");
        }
        assert_eq!(sigma("+ - + -"), sigma("+,-,+,-"));
    }
}
