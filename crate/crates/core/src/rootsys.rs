//! The root system of type G2.
//!
//! Roots are kept in coordinates over the fundamental roots `a` (short) and
//! `b` (long), so `Root::new(3, 2)` is `3a+2b`. The Euclidean realisation
//! `a = e1 - e2`, `b = -2e1 + e2 + e3` is only used to derive the Gram matrix.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A root `m·a + n·b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    m: i32,
    n: i32,
}

/// An ordered pair of roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootPair {
    pub r: Root,
    pub s: Root,
}

pub const A: Root = Root { m: 1, n: 0 };
pub const B: Root = Root { m: 0, n: 1 };

/// All twelve roots in canonical order: negatives of the positive roots in
/// reverse order, then the positive roots `a ≺ b ≺ a+b ≺ 2a+b ≺ 3a+b ≺ 3a+2b`.
pub const ALL_ROOTS: [Root; 12] = [
    Root { m: -3, n: -2 },
    Root { m: -3, n: -1 },
    Root { m: -2, n: -1 },
    Root { m: -1, n: -1 },
    Root { m: -1, n: 0 },
    Root { m: 0, n: -1 },
    Root { m: 1, n: 0 },
    Root { m: 0, n: 1 },
    Root { m: 1, n: 1 },
    Root { m: 2, n: 1 },
    Root { m: 3, n: 1 },
    Root { m: 3, n: 2 },
];

/// Euclidean coordinates of the fundamental roots.
const EMBED_A: [i64; 3] = [1, -1, 0];
const EMBED_B: [i64; 3] = [-2, 1, 1];

const fn dot(x: [i64; 3], y: [i64; 3]) -> i64 {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

/// Gram matrix of `(a, b)`: `[[2, -3], [-3, 6]]`.
pub const GRAM: [[i64; 2]; 2] = [
    [dot(EMBED_A, EMBED_A), dot(EMBED_A, EMBED_B)],
    [dot(EMBED_B, EMBED_A), dot(EMBED_B, EMBED_B)],
];

impl Root {
    /// Returns the root `m·a + n·b`, or `None` if that vector is not a root.
    pub fn new(m: i32, n: i32) -> Option<Root> {
        let r = Root { m, n };
        r.is_root().then_some(r)
    }

    pub fn m(self) -> i32 {
        self.m
    }

    pub fn n(self) -> i32 {
        self.n
    }

    fn is_root(self) -> bool {
        ALL_ROOTS.contains(&self)
    }

    /// Position in [`ALL_ROOTS`].
    pub fn index(self) -> usize {
        ALL_ROOTS
            .iter()
            .position(|&r| r == self)
            .expect("Root values are always members of ALL_ROOTS")
    }

    pub fn height(self) -> i32 {
        self.m + self.n
    }

    pub fn is_positive(self) -> bool {
        self.height() > 0
    }

    /// `(r, r) == 2`.
    pub fn is_short(self) -> bool {
        inner(self, self) == 2
    }

    /// Coordinates in the Euclidean realisation.
    pub fn euclidean(self) -> [i64; 3] {
        let (m, n) = (self.m as i64, self.n as i64);
        [
            m * EMBED_A[0] + n * EMBED_B[0],
            m * EMBED_A[1] + n * EMBED_B[1],
            m * EMBED_A[2] + n * EMBED_B[2],
        ]
    }

    /// `i·self + j·other` when that is a root.
    pub fn combine(self, i: i32, other: Root, j: i32) -> Option<Root> {
        Root::new(i * self.m + j * other.m, i * self.n + j * other.n)
    }
}

impl Neg for Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root {
            m: -self.m,
            n: -self.n,
        }
    }
}

pub fn all_roots() -> [Root; 12] {
    ALL_ROOTS
}

pub fn positive_roots() -> impl Iterator<Item = Root> {
    ALL_ROOTS.into_iter().filter(|r| r.is_positive())
}

/// Bilinear form through the Gram matrix.
pub fn inner(r: Root, s: Root) -> i64 {
    let (rm, rn) = (r.m as i64, r.n as i64);
    let (sm, sn) = (s.m as i64, s.n as i64);
    rm * sm * GRAM[0][0] + rm * sn * GRAM[0][1] + rn * sm * GRAM[1][0] + rn * sn * GRAM[1][1]
}

/// Bilinear form through Euclidean coordinates.
pub fn euclidean_inner(r: Root, s: Root) -> i64 {
    dot(r.euclidean(), s.euclidean())
}

/// `r + s` if it is a root.
pub fn sum(r: Root, s: Root) -> Option<Root> {
    r.combine(1, s, 1)
}

/// Largest `p >= 0` with `s - p·r` a root.
pub fn chain_p(r: Root, s: Root) -> Result<u32> {
    if r == s || r == -s {
        return Err(Error::ProportionalRoots(r, s));
    }
    let mut p = 0;
    while s.combine(1, r, -(p as i32 + 1)).is_some() {
        p += 1;
    }
    Ok(p)
}

/// `(a,b), (a,a+b), (a,2a+b), (b,3a+b)`.
pub fn extraspecial_pairs() -> [RootPair; 4] {
    let root = |m, n| Root { m, n };
    [
        RootPair { r: A, s: B },
        RootPair {
            r: A,
            s: root(1, 1),
        },
        RootPair {
            r: A,
            s: root(2, 1),
        },
        RootPair {
            r: B,
            s: root(3, 1),
        },
    ]
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coeff, sym) in [(self.m, 'a'), (self.n, 'b')] {
            if coeff == 0 {
                continue;
            }
            if coeff < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if coeff.abs() != 1 {
                out.push_str(&coeff.abs().to_string());
            }
            out.push(sym);
        }
        f.write_str(&out)
    }
}

impl FromStr for Root {
    type Err = Error;

    /// Accepts the rendering grammar: `3a+2b`, `-a-b`, `b`, ...
    fn from_str(input: &str) -> Result<Root> {
        let bad = || Error::Parse {
            what: "root",
            input: input.to_string(),
        };
        let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let mut chars = text.chars().peekable();
        let (mut m, mut n) = (None, None);
        let mut first = true;
        while chars.peek().is_some() {
            let sign = match chars.peek() {
                Some('-') => {
                    chars.next();
                    -1
                }
                Some('+') if !first => {
                    chars.next();
                    1
                }
                _ if first => 1,
                _ => return Err(bad()),
            };
            let mut digits = String::new();
            while let Some(c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                digits.push(*c);
                chars.next();
            }
            let coeff: i32 = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| bad())?
            };
            let slot = match chars.next() {
                Some('a') if m.is_none() && n.is_none() => &mut m,
                Some('b') if n.is_none() => &mut n,
                _ => return Err(bad()),
            };
            *slot = Some(sign * coeff);
            first = false;
        }
        if first {
            return Err(bad());
        }
        Root::new(m.unwrap_or(0), n.unwrap_or(0)).ok_or_else(bad)
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Root, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(text: &str) -> Root {
        text.parse().unwrap()
    }

    #[test]
    fn root_list() {
        let roots = all_roots();
        assert_eq!(roots.len(), 12);
        assert!(roots.contains(&A));
        assert!(roots.contains(&root("-3a-2b")));
        for r in roots {
            assert!(roots.contains(&-r));
            assert_eq!(sum(r, -r), None);
        }
        let positive: Vec<String> = positive_roots().map(|r| r.to_string()).collect();
        assert_eq!(positive, ["a", "b", "a+b", "2a+b", "3a+b", "3a+2b"]);
    }

    #[test]
    fn gram_matches_embedding() {
        assert_eq!(GRAM, [[2, -3], [-3, 6]]);
        assert_eq!(inner(A, A), 2);
        assert_eq!(inner(A, B), -3);
        assert_eq!(inner(root("3a+2b"), root("3a+2b")), 6);
        for r in ALL_ROOTS {
            for s in ALL_ROOTS {
                assert_eq!(inner(r, s), euclidean_inner(r, s));
                assert_eq!(inner(r, s), inner(s, r));
            }
        }
        let short = ALL_ROOTS.iter().filter(|r| r.is_short()).count();
        assert_eq!(short, 6);
        assert!(ALL_ROOTS.iter().all(|&r| matches!(inner(r, r), 2 | 6)));
    }

    #[test]
    fn sums() {
        assert_eq!(sum(A, B), Some(root("a+b")));
        assert_eq!(sum(A, root("3a+b")), None);
        assert_eq!(sum(A, -A), None);
    }

    #[test]
    fn chains() {
        assert_eq!(chain_p(A, B), Ok(0));
        assert_eq!(chain_p(A, root("2a+b")), Ok(2));
        assert_eq!(chain_p(B, root("3a+b")), Ok(0));
        assert_eq!(chain_p(A, root("a+b")), Ok(1));
        assert!(matches!(chain_p(A, -A), Err(Error::ProportionalRoots(..))));
        assert!(chain_p(B, B).is_err());
    }

    #[test]
    fn extraspecial() {
        let pairs = extraspecial_pairs();
        assert_eq!(pairs.len(), 4);
        assert_eq!(pairs[0], RootPair { r: A, s: B });
        assert_eq!(
            pairs[3],
            RootPair {
                r: B,
                s: root("3a+b")
            }
        );
        for p in pairs {
            assert!(sum(p.r, p.s).is_some());
        }
    }

    #[test]
    fn heights() {
        assert_eq!(A.height(), 1);
        assert_eq!(root("3a+2b").height(), 5);
        assert_eq!(root("-2a-b").height(), -3);
    }

    #[test]
    fn rendering_round_trips() {
        let rendered: Vec<String> = ALL_ROOTS.iter().map(|r| r.to_string()).collect();
        assert_eq!(
            rendered,
            [
                "-3a-2b", "-3a-b", "-2a-b", "-a-b", "-a", "-b", "a", "b", "a+b", "2a+b", "3a+b",
                "3a+2b"
            ]
        );
        for r in ALL_ROOTS {
            assert_eq!(r.to_string().parse::<Root>(), Ok(r));
        }
        assert_eq!(root(" 3a + 2b "), root("3a+2b"));
    }

    #[test]
    fn rejects_bad_roots() {
        for bad in ["", "4a+b", "a+a", "c", "+a", "b+a", "a+", "2", "0a"] {
            assert!(bad.parse::<Root>().is_err(), "{bad:?} parsed");
        }
    }
}
