//! The 41 commutator formulas printed in the reference tables, keyed by
//! `(left, right)`, as shipped in `data/listed_formulas.json`.

use serde::Deserialize;

use crate::rootsys::Root;

const LISTED_FORMULAS: &str = include_str!("../data/listed_formulas.json");

/// One printed formula. `boxed` is the symbolic result and `special` its
/// all-plus specialisation, both as raw LaTeX right-hand sides.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ListedFormula {
    pub number: u32,
    pub left: Root,
    pub right: Root,
    pub boxed: String,
    pub special: String,
}

pub fn listed_formulas() -> Vec<ListedFormula> {
    serde_json::from_str(LISTED_FORMULAS).expect("bundled formula list is valid JSON")
}

/// `(left, right)` for every printed formula, in print order.
pub fn listed_pairs() -> Vec<(Root, Root)> {
    listed_formulas()
        .into_iter()
        .map(|f| (f.left, f.right))
        .collect()
}

/// Canonical form for comparing LaTeX right-hand sides: drops whitespace and
/// thin spaces, and writes one-character subscripts without braces.
pub fn normalize_latex(text: &str) -> String {
    let compact: String = text
        .replace("\\,", "")
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    let mut out = String::with_capacity(compact.len());
    let chars: Vec<char> = compact.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        if chars[k] == '_' && chars.get(k + 1) == Some(&'{') && chars.get(k + 3) == Some(&'}') {
            out.push('_');
            out.push(chars[k + 2]);
            k += 4;
        } else {
            out.push(chars[k]);
            k += 1;
        }
    }
    out
}
