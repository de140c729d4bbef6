//! The adjoint representation of G2 in a Chevalley basis, used as an
//! independent check of the commutator formulas.
//!
//! Basis order: `e_r` for the six negative roots, `h_a`, `h_b`, then `e_r` for
//! the six positive roots. Operators act on coordinate columns, so a group
//! word `g1 g2 ··· gk` is the matrix product in the same order.

use std::fmt;

use num_rational::Rational64;
use num_traits::One;
use rayon::prelude::*;

use crate::commutators::{all_formulas, CommutatorFormula};
use crate::constants::{specialize_table, ConstantTable};
use crate::error::{Error, Result};
use crate::polymat::{exp_nilpotent, Poly2, PolyMatrix};
use crate::rootsys::{inner, sum, Root, A, ALL_ROOTS, B};
use crate::signs::{SignAssignment, SignCoefficient};

pub const DIM: usize = 14;

/// `(ad e_r)^5 = 0` for every root of G2.
pub const NILPOTENCY_BOUND: usize = 5;

/// A Chevalley basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisIndex {
    /// `h_α` for a simple root `α`.
    Cartan(Root),
    RootE(Root),
}

impl BasisIndex {
    pub fn all() -> [BasisIndex; DIM] {
        let mut out = [BasisIndex::Cartan(A); DIM];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = BasisIndex::from_position(k);
        }
        out
    }

    pub fn position(self) -> usize {
        match self {
            BasisIndex::RootE(r) if r.is_positive() => r.index() + 2,
            BasisIndex::RootE(r) => r.index(),
            BasisIndex::Cartan(r) if r == A => 6,
            BasisIndex::Cartan(r) if r == B => 7,
            BasisIndex::Cartan(r) => panic!("h_{r} is not a simple coroot"),
        }
    }

    pub fn from_position(k: usize) -> BasisIndex {
        match k {
            0..=5 => BasisIndex::RootE(ALL_ROOTS[k]),
            6 => BasisIndex::Cartan(A),
            7 => BasisIndex::Cartan(B),
            8..=13 => BasisIndex::RootE(ALL_ROOTS[k - 2]),
            _ => panic!("basis position {k} out of range"),
        }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::Cartan(r) => write!(f, "h_{r}"),
            BasisIndex::RootE(r) if r.to_string().len() == 1 => write!(f, "e_{r}"),
            BasisIndex::RootE(r) => write!(f, "e_{{{r}}}"),
        }
    }
}

/// `h_r = c_a·h_a + c_b·h_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorootVector {
    pub c_a: i64,
    pub c_b: i64,
}

/// Decomposes the coroot `2r/(r,r)` over `a^∨ = a` and `b^∨ = b/3`.
pub fn coroot_coeffs(r: Root) -> Result<CorootVector> {
    let norm = inner(r, r);
    let (ca, cb) = (2 * r.m() as i64, 6 * r.n() as i64);
    if ca % norm != 0 || cb % norm != 0 {
        return Err(Error::NonInteger(format!("coroot of {r}")));
    }
    Ok(CorootVector {
        c_a: ca / norm,
        c_b: cb / norm,
    })
}

/// `<s, α^∨> = 2(s, α)/(α, α)`, the eigenvalue of `ad h_α` on `e_s`.
pub fn cartan_pairing(s: Root, simple: Root) -> i64 {
    2 * inner(s, simple) / inner(simple, simple)
}

/// Integer coordinates over the basis.
pub type Vector = [i64; DIM];

fn unit(index: BasisIndex) -> Vector {
    let mut v = [0; DIM];
    v[index.position()] = 1;
    v
}

/// Structure constants of the algebra spanned by the Chevalley basis, with
/// `N_{r,s}` specialised to integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointAlgebra {
    sigma: SignAssignment,
    brackets: Vec<Vector>,
}

pub fn build_algebra(table: &ConstantTable, sigma: SignAssignment) -> Result<AdjointAlgebra> {
    let n = specialize_table(table, sigma)?;
    let mut brackets = vec![[0; DIM]; DIM * DIM];
    for x in BasisIndex::all() {
        for y in BasisIndex::all() {
            let mut v = [0; DIM];
            match (x, y) {
                (BasisIndex::Cartan(_), BasisIndex::Cartan(_)) => {}
                (BasisIndex::Cartan(alpha), BasisIndex::RootE(s)) => {
                    v[y.position()] = cartan_pairing(s, alpha);
                }
                (BasisIndex::RootE(s), BasisIndex::Cartan(alpha)) => {
                    v[x.position()] = -cartan_pairing(s, alpha);
                }
                (BasisIndex::RootE(r), BasisIndex::RootE(s)) if r == -s => {
                    let h = coroot_coeffs(r)?;
                    v[BasisIndex::Cartan(A).position()] = h.c_a;
                    v[BasisIndex::Cartan(B).position()] = h.c_b;
                }
                (BasisIndex::RootE(r), BasisIndex::RootE(s)) => {
                    if let Some(rs) = sum(r, s) {
                        v[BasisIndex::RootE(rs).position()] = n.get(r, s);
                    }
                }
            }
            brackets[x.position() * DIM + y.position()] = v;
        }
    }
    Ok(AdjointAlgebra { sigma, brackets })
}

/// Outcome of [`jacobi_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub triples_checked: usize,
    pub violations: Vec<[BasisIndex; 3]>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl AdjointAlgebra {
    pub fn sigma(&self) -> SignAssignment {
        self.sigma
    }

    pub fn bracket(&self, x: BasisIndex, y: BasisIndex) -> Vector {
        self.brackets[x.position() * DIM + y.position()]
    }

    /// Bilinear extension of the bracket.
    pub fn bracket_vectors(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = [0; DIM];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let b = &self.brackets[i * DIM + j];
                for k in 0..DIM {
                    out[k] += xi * yj * b[k];
                }
            }
        }
        out
    }

    /// Matrix of `ad x`: column `j` holds `[x, basis_j]`.
    pub fn ad_matrix(&self, x: BasisIndex) -> PolyMatrix {
        let mut m = PolyMatrix::zero(DIM);
        for y in BasisIndex::all() {
            let column = self.bracket(x, y);
            for (row, &value) in column.iter().enumerate() {
                if value != 0 {
                    m.set(row, y.position(), Poly2::integer(value));
                }
            }
        }
        m
    }

    /// `x_r(f) = exp(f · ad e_r)`, required to have integer coefficients.
    pub fn root_element(&self, r: Root, f: &Poly2) -> Result<PolyMatrix> {
        let m = exp_nilpotent(&self.ad_matrix(BasisIndex::RootE(r)), f, NILPOTENCY_BOUND)?;
        if let Some((row, col)) = m.first_non_integral() {
            return Err(Error::NonIntegral { root: r, row, col });
        }
        Ok(m)
    }

    /// Whether the constant matrix `g` (evaluated at `t = u = 1`) satisfies
    /// `g[x, y] = [gx, gy]` on all basis pairs.
    pub fn preserves_bracket(&self, g: &PolyMatrix) -> bool {
        let one = Rational64::one();
        let mut columns = [[0i64; DIM]; DIM];
        for (col, column) in columns.iter_mut().enumerate() {
            for (row, slot) in column.iter_mut().enumerate() {
                let value = g.get(row, col).evaluate(one, one);
                if !value.is_integer() {
                    return false;
                }
                *slot = value.to_integer();
            }
        }
        let apply = |v: &Vector| {
            let mut out = [0; DIM];
            for (j, &vj) in v.iter().enumerate() {
                for k in 0..DIM {
                    out[k] += vj * columns[j][k];
                }
            }
            out
        };
        BasisIndex::all().iter().all(|&x| {
            BasisIndex::all().iter().all(|&y| {
                let left = apply(&self.bracket(x, y));
                let right = self.bracket_vectors(&columns[x.position()], &columns[y.position()]);
                left == right
            })
        })
    }
}

/// Checks `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` on every unordered triple of
/// distinct basis elements.
pub fn jacobi_check(algebra: &AdjointAlgebra) -> JacobiReport {
    let basis = BasisIndex::all();
    let mut report = JacobiReport {
        triples_checked: 0,
        violations: Vec::new(),
    };
    for i in 0..DIM {
        for j in i + 1..DIM {
            for k in j + 1..DIM {
                let (x, y, z) = (basis[i], basis[j], basis[k]);
                let terms = [
                    algebra.bracket_vectors(&algebra.bracket(x, y), &unit(z)),
                    algebra.bracket_vectors(&algebra.bracket(y, z), &unit(x)),
                    algebra.bracket_vectors(&algebra.bracket(z, x), &unit(y)),
                ];
                report.triples_checked += 1;
                let zero = (0..DIM).all(|c| terms.iter().map(|t| t[c]).sum::<i64>() == 0);
                if !zero {
                    report.violations.push([x, y, z]);
                }
            }
        }
    }
    report
}

/// One group generator `x_root(argument)` in a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub root: Root,
    pub argument: Poly2,
}

impl Factor {
    /// `x_root(coeff · t^i · u^j)` with `coeff` specialised under `sigma`.
    pub fn new(
        root: Root,
        coeff: SignCoefficient,
        sigma: SignAssignment,
        i: u32,
        j: u32,
    ) -> Factor {
        Factor {
            root,
            argument: Poly2::monomial(coeff.specialize(sigma), i, j),
        }
    }
}

/// The right-hand side of `f` as a word of root elements.
pub fn formula_word(f: &CommutatorFormula, sigma: SignAssignment) -> Vec<Factor> {
    f.terms
        .iter()
        .map(|term| Factor::new(term.target, term.argument_coeff(), sigma, term.i, term.j))
        .collect()
}

/// Matrix of a word of root elements.
pub fn word_matrix(algebra: &AdjointAlgebra, word: &[Factor]) -> Result<PolyMatrix> {
    let factors = word
        .iter()
        .map(|f| algebra.root_element(f.root, &f.argument))
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::product(DIM, &factors)
}

/// `x_s(u)^-1 x_r(t)^-1 x_s(u) x_r(t)`, with inverses taken as `x(-arg)`.
pub fn commutator_matrix(algebra: &AdjointAlgebra, s: Root, r: Root) -> Result<PolyMatrix> {
    let (t, u) = (Poly2::t(), Poly2::u());
    word_matrix(
        algebra,
        &[
            Factor {
                root: s,
                argument: -&u,
            },
            Factor {
                root: r,
                argument: -&t,
            },
            Factor {
                root: s,
                argument: u,
            },
            Factor {
                root: r,
                argument: t,
            },
        ],
    )
}

/// First entry where the two sides of a checked identity differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub row: BasisIndex,
    pub col: BasisIndex,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry ({}, {}): commutator gives {}, formula gives {}",
            self.row, self.col, self.lhs, self.rhs
        )
    }
}

/// Result of checking one commutator identity under one sign assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCheck {
    pub sigma: SignAssignment,
    pub left: Root,
    pub right: Root,
    pub mismatch: Option<Mismatch>,
}

impl FormulaCheck {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares `[x_s(u), x_r(t)]` with the product of `word`.
pub fn check_word(
    algebra: &AdjointAlgebra,
    s: Root,
    r: Root,
    word: &[Factor],
) -> Result<FormulaCheck> {
    let lhs = commutator_matrix(algebra, s, r)?;
    let rhs = word_matrix(algebra, word)?;
    let mismatch = lhs.first_difference(&rhs).map(|(row, col)| Mismatch {
        row: BasisIndex::from_position(row),
        col: BasisIndex::from_position(col),
        lhs: lhs.get(row, col).to_string(),
        rhs: rhs.get(row, col).to_string(),
    });
    Ok(FormulaCheck {
        sigma: algebra.sigma,
        left: s,
        right: r,
        mismatch,
    })
}

pub fn check_formula(algebra: &AdjointAlgebra, f: &CommutatorFormula) -> Result<FormulaCheck> {
    check_word(algebra, f.left, f.right, &formula_word(f, algebra.sigma))
}

/// Exact matrix check of one formula; coefficients of `f` are specialised
/// under the algebra's sign assignment.
pub fn verify_formula(algebra: &AdjointAlgebra, f: &CommutatorFormula) -> bool {
    check_formula(algebra, f).is_ok_and(|c| c.passed())
}

/// Checks all 60 formulas of `table` under each assignment in `sigmas`, in
/// parallel. Results are ordered by assignment, then formula.
pub fn verify_all_formulas(
    table: &ConstantTable,
    sigmas: &[SignAssignment],
) -> Result<Vec<FormulaCheck>> {
    let formulas = all_formulas(table)?;
    let algebras = sigmas
        .iter()
        .map(|&sigma| build_algebra(table, sigma))
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(&AdjointAlgebra, &CommutatorFormula)> = algebras
        .iter()
        .flat_map(|a| formulas.iter().map(move |f| (a, f)))
        .collect();
    jobs.into_par_iter()
        .map(|(a, f)| check_formula(a, f))
        .collect()
}
