//! Chevalley commutator formulas.
//!
//! For roots `r, s` with `r + s` a root,
//!
//! ```text
//! [x_s(u), x_r(t)] = x_s(u)^-1 x_r(t)^-1 x_s(u) x_r(t)
//!                  = ∏ x_{ir+js}(C_{ij,rs} (-t)^i u^j)
//! ```
//!
//! over all `i, j > 0` with `ir + js` a root, in order of increasing `i + j`.
//! The constants come from `M_{r,s,i} = N_{r,s} N_{r,r+s} ··· N_{r,(i-1)r+s} / i!`.

use num_rational::Rational64;

use crate::constants::ConstantTable;
use crate::error::{Error, Result};
use crate::rootsys::{sum, Root, ALL_ROOTS};
use crate::signs::{Notation, SignAssignment, SignCoefficient};

/// `M_{r,s,i}`.
pub fn m_const(table: &ConstantTable, r: Root, s: Root, i: u32) -> Result<SignCoefficient> {
    let mut product = SignCoefficient::integer(1);
    let mut factorial = 1i64;
    let mut current = s;
    for k in 0..i {
        if k > 0 {
            current =
                sum(r, current).ok_or_else(|| Error::ChainBreak(format!("{k}·r + s"), current))?;
        }
        product = product * table.get(r, current);
        factorial *= (k + 1) as i64;
    }
    let value = product.scale(Rational64::new(1, factorial));
    value
        .integer_coeff()
        .ok_or_else(|| Error::NonInteger(value.to_string()))?;
    Ok(value)
}

/// `C_{ij,rs}`.
pub fn c_const(table: &ConstantTable, i: u32, j: u32, r: Root, s: Root) -> Result<SignCoefficient> {
    let value = match (i, j) {
        (_, 1) => m_const(table, r, s, i)?,
        (1, _) => {
            let sign = if j.is_multiple_of(2) { 1 } else { -1 };
            m_const(table, s, r, j)?.scale(Rational64::from_integer(sign))
        }
        (3, 2) => {
            let rs = sum(r, s).ok_or_else(|| Error::ChainBreak("r + s".into(), r))?;
            m_const(table, rs, r, 2)?.scale(Rational64::new(1, 3))
        }
        (2, 3) => {
            let rs = sum(r, s).ok_or_else(|| Error::ChainBreak("r + s".into(), r))?;
            m_const(table, rs, s, 2)?.scale(Rational64::new(-2, 3))
        }
        _ => return Err(Error::UnsupportedPattern(i, j)),
    };
    value
        .integer_coeff()
        .ok_or_else(|| Error::NonInteger(value.to_string()))?;
    Ok(value)
}

/// One factor `x_target(coeff · (-t)^i · u^j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaTerm {
    pub i: u32,
    pub j: u32,
    pub target: Root,
    pub coeff: SignCoefficient,
}

impl FormulaTerm {
    /// The coefficient of `t^i u^j` in the factor's argument, i.e.
    /// `C_{ij,rs}·(-1)^i`.
    pub fn argument_coeff(&self) -> SignCoefficient {
        if self.i.is_multiple_of(2) {
            self.coeff
        } else {
            -self.coeff
        }
    }
}

/// The expansion of `[x_left(u), x_right(t)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorFormula {
    /// `s`, carrying the parameter `u`.
    pub left: Root,
    /// `r`, carrying the parameter `t`.
    pub right: Root,
    pub terms: Vec<FormulaTerm>,
}

/// Generates `[x_s(u), x_r(t)]`.
pub fn formula(table: &ConstantTable, s: Root, r: Root) -> Result<CommutatorFormula> {
    if r == -s {
        return Err(Error::OppositeRoots(s, r));
    }
    let mut pairs = Vec::new();
    for i in 1..=4 {
        for j in 1..=4 {
            if let Some(target) = r.combine(i, s, j) {
                assert!(i <= 3 && j <= 3, "G2 coefficients never exceed 3");
                pairs.push((i as u32, j as u32, target));
            }
        }
    }
    // Ties in i + j do occur (e.g. 2a+b+a and a+2(a+b) for s = a+b, r = a);
    // the tied factors commute, and the larger i is listed first.
    pairs.sort_by_key(|&(i, j, _)| (i + j, std::cmp::Reverse(i)));
    for w in pairs.windows(2) {
        let ((i1, j1, t1), (i2, j2, t2)) = (w[0], w[1]);
        if i1 + j1 == i2 + j2 {
            assert!(
                sum(t1, t2).is_none() && t1 != -t2,
                "tied factors x_{t1}, x_{t2} must commute"
            );
        }
    }
    let terms = pairs
        .into_iter()
        .map(|(i, j, target)| {
            Ok(FormulaTerm {
                i,
                j,
                target,
                coeff: c_const(table, i, j, r, s)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CommutatorFormula {
        left: s,
        right: r,
        terms,
    })
}

/// One formula per ordered pair `(s, r)` with `s + r` a root, ordered by `s`
/// then `r` in canonical root order.
pub fn all_formulas(table: &ConstantTable) -> Result<Vec<CommutatorFormula>> {
    let mut out = Vec::with_capacity(60);
    for s in ALL_ROOTS {
        for r in ALL_ROOTS {
            if sum(r, s).is_some() {
                out.push(formula(table, s, r)?);
            }
        }
    }
    Ok(out)
}

/// `x_a` for one-letter roots, `x_{a+b}` otherwise.
pub fn root_subscript(r: Root) -> String {
    let name = r.to_string();
    if name.len() == 1 {
        format!("x_{name}")
    } else {
        format!("x_{{{name}}}")
    }
}

fn monomial_text(i: u32, j: u32) -> String {
    let mut out = String::new();
    for (var, exp) in [("t", i), ("u", j)] {
        match exp {
            0 => {}
            1 => out.push_str(var),
            _ => out.push_str(&format!("{var}^{exp}")),
        }
    }
    out
}

/// Renders `coeff · t^i u^j` the way the formulas print it: `-tu`,
/// `3ε2ε3t^2u`, `-2t^2u^3`.
pub fn render_argument(
    coeff: SignCoefficient,
    i: u32,
    j: u32,
    sigma: Option<SignAssignment>,
    notation: Notation,
) -> String {
    let coeff = match sigma {
        Some(sigma) => SignCoefficient::new(coeff.specialize(sigma), Default::default()),
        None => coeff,
    };
    let vars = monomial_text(i, j);
    let rendered = coeff.render(notation);
    let prefix = match rendered.as_str() {
        "1" if !vars.is_empty() => "",
        "-1" if !vars.is_empty() => "-",
        other => other,
    };
    format!("{prefix}{vars}")
}

impl CommutatorFormula {
    /// The right-hand side, or `1` when there are no factors.
    pub fn render(&self, sigma: Option<SignAssignment>, notation: Notation) -> String {
        if self.terms.is_empty() {
            return "1".to_string();
        }
        let separator = match notation {
            Notation::Latex => "\\,",
            _ => " ",
        };
        self.terms
            .iter()
            .map(|term| {
                format!(
                    "{}({})",
                    root_subscript(term.target),
                    render_argument(term.argument_coeff(), term.i, term.j, sigma, notation)
                )
            })
            .collect::<Vec<_>>()
            .join(separator)
    }

    /// `[x_s(u),x_r(t)]`.
    pub fn render_lhs(&self) -> String {
        format!(
            "[{}(u),{}(t)]",
            root_subscript(self.left),
            root_subscript(self.right)
        )
    }

    /// `[x_s(u),x_r(t)] = ...`.
    pub fn render_equation(&self, sigma: Option<SignAssignment>, notation: Notation) -> String {
        let eq = match notation {
            Notation::Latex => "=",
            _ => " = ",
        };
        format!("{}{eq}{}", self.render_lhs(), self.render(sigma, notation))
    }

    /// The same formula with every coefficient replaced by its value under
    /// `sigma`.
    pub fn specialize(&self, sigma: SignAssignment) -> CommutatorFormula {
        CommutatorFormula {
            terms: self
                .terms
                .iter()
                .map(|term| FormulaTerm {
                    coeff: SignCoefficient::new(term.coeff.specialize(sigma), Default::default()),
                    ..*term
                })
                .collect(),
            ..self.clone()
        }
    }

    /// Every coefficient has an integer rational part.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.integer_coeff().is_some())
    }
}
