//! Structure constants `N_{r,s}` of the Chevalley basis, `[e_r, e_s] = N_{r,s} e_{r+s}`.
//!
//! [`solve`] starts from the four extraspecial seeds and propagates values
//! through four rewrite rules until every constant is known:
//!
//! * antisymmetry, `N_{s,r} = -N_{r,s}`;
//! * the triple rule, `N_{r1,r2}/(r3,r3) = N_{r2,r3}/(r1,r1) = N_{r3,r1}/(r2,r2)`
//!   whenever `r1 + r2 + r3 = 0`;
//! * the opposite rule, `N_{r,s} N_{-r,-s} = -(p+1)^2`;
//! * the quadruple rule, for `r1 + r2 + r3 + r4 = 0` with no opposite pair,
//!   `N12 N34/(r1+r2)^2 + N23 N14/(r2+r3)^2 + N31 N24/(r3+r1)^2 = 0`.
//!
//! [`verify_relations`] checks the same four relations exhaustively on a
//! specialised table.

use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{chain_p, extraspecial_pairs, inner, sum, Root, ALL_ROOTS};
use crate::signs::{SignAssignment, SignCoefficient};

/// Total map from ordered root pairs to structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantTable {
    entries: [[SignCoefficient; 12]; 12],
}

impl ConstantTable {
    pub fn get(&self, r: Root, s: Root) -> SignCoefficient {
        self.entries[r.index()][s.index()]
    }

    /// Overwrites one entry. Only useful for building corrupted tables in
    /// tests; solved tables never need it.
    pub fn set(&mut self, r: Root, s: Root, value: SignCoefficient) {
        self.entries[r.index()][s.index()] = value;
    }

    /// Nonzero entries in canonical row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Root, Root, SignCoefficient)> + '_ {
        ALL_ROOTS.iter().flat_map(move |&r| {
            ALL_ROOTS.iter().filter_map(move |&s| {
                let value = self.get(r, s);
                (!value.is_zero()).then_some((r, s, value))
            })
        })
    }
}

/// The extraspecial seeds `N_{a,b}, N_{a,a+b}, N_{a,2a+b}, N_{b,3a+b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seeds([SignCoefficient; 4]);

impl Seeds {
    /// Checks that each seed has magnitude `p + 1` for its pair.
    pub fn new(values: [SignCoefficient; 4]) -> Result<Seeds> {
        for (pair, value) in extraspecial_pairs().iter().zip(values) {
            let expected = chain_p(pair.r, pair.s)? as i64 + 1;
            if value.coeff().abs() != Rational64::from_integer(expected) {
                return Err(Error::BadSeed {
                    r: pair.r,
                    s: pair.s,
                    value,
                    expected,
                });
            }
        }
        Ok(Seeds(values))
    }

    /// `ε1, 2ε2, 3ε3, ε4`.
    pub fn symbolic() -> Seeds {
        Seeds([
            SignCoefficient::eps(1, 1),
            SignCoefficient::eps(2, 2),
            SignCoefficient::eps(3, 3),
            SignCoefficient::eps(1, 4),
        ])
    }

    pub fn values(&self) -> [SignCoefficient; 4] {
        self.0
    }
}

/// One instance of a rewrite rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Antisymmetry(Root, Root),
    Triple([Root; 3]),
    Opposite(Root, Root),
    Quadruple([Root; 4]),
}

/// Ordered pairs `(r, s)` with `r + s` a root.
pub fn root_sum_pairs() -> impl Iterator<Item = (Root, Root)> {
    ALL_ROOTS
        .into_iter()
        .flat_map(|r| ALL_ROOTS.into_iter().map(move |s| (r, s)))
        .filter(|&(r, s)| sum(r, s).is_some())
}

/// Ordered triples of roots summing to zero.
pub fn zero_sum_triples() -> Vec<[Root; 3]> {
    let mut out = Vec::new();
    for r1 in ALL_ROOTS {
        for r2 in ALL_ROOTS {
            if let Some(r3) = sum(r1, r2) {
                out.push([r1, r2, -r3]);
            }
        }
    }
    out
}

/// Quadruples `[r1, r2, r3, r4]` with zero sum and no opposite pair.
///
/// One entry per multiset and per choice of distinguished root `r4`; the
/// relation is symmetric in `r1, r2, r3` up to sign, so the remaining three
/// are listed once, in canonical order.
#[allow(clippy::needless_range_loop)]
pub fn zero_sum_quadruples() -> Vec<[Root; 4]> {
    let mut out = Vec::new();
    for i in 0..12 {
        for j in i..12 {
            for k in j..12 {
                for l in k..12 {
                    let multiset = [ALL_ROOTS[i], ALL_ROOTS[j], ALL_ROOTS[k], ALL_ROOTS[l]];
                    let (m, n) = multiset
                        .iter()
                        .fold((0, 0), |(m, n), r| (m + r.m(), n + r.n()));
                    let opposite = (0..4).any(|x| (x + 1..4).any(|y| multiset[x] == -multiset[y]));
                    if m != 0 || n != 0 || opposite {
                        continue;
                    }
                    for pick in 0..4 {
                        if pick > 0 && multiset[pick] == multiset[pick - 1] {
                            continue;
                        }
                        let mut rest = multiset.iter().enumerate().filter(|&(x, _)| x != pick);
                        let mut next = || *rest.next().map(|(_, r)| r).unwrap();
                        out.push([next(), next(), next(), multiset[pick]]);
                    }
                }
            }
        }
    }
    out
}

/// Every rule instance in canonical order.
pub fn rules() -> Vec<Rule> {
    let mut out: Vec<Rule> = root_sum_pairs()
        .map(|(r, s)| Rule::Antisymmetry(r, s))
        .collect();
    out.extend(zero_sum_triples().into_iter().map(Rule::Triple));
    out.extend(root_sum_pairs().map(|(r, s)| Rule::Opposite(r, s)));
    out.extend(zero_sum_quadruples().into_iter().map(Rule::Quadruple));
    out
}

fn norm(r: Root) -> Rational64 {
    Rational64::from_integer(inner(r, r))
}

/// `(x, x)` for a nonzero lattice vector `x = r + s`.
fn sum_norm(r: Root, s: Root) -> Rational64 {
    let (m, n) = ((r.m() + s.m()) as i64, (r.n() + s.n()) as i64);
    let g = crate::rootsys::GRAM;
    Rational64::from_integer(m * m * g[0][0] + 2 * m * n * g[0][1] + n * n * g[1][1])
}

struct Partial {
    known: [[Option<SignCoefficient>; 12]; 12],
}

impl Partial {
    fn get(&self, r: Root, s: Root) -> Option<SignCoefficient> {
        if sum(r, s).is_none() {
            return Some(SignCoefficient::zero());
        }
        self.known[r.index()][s.index()]
    }

    /// Records a derived value; returns whether it was new.
    fn derive(&mut self, r: Root, s: Root, value: SignCoefficient) -> Result<bool> {
        match self.get(r, s) {
            Some(existing) if existing == value => Ok(false),
            Some(existing) => Err(Error::Conflict {
                r,
                s,
                existing,
                derived: value,
            }),
            None => {
                self.known[r.index()][s.index()] = Some(value);
                Ok(true)
            }
        }
    }

    fn apply(&mut self, rule: Rule) -> Result<bool> {
        match rule {
            Rule::Antisymmetry(r, s) => match self.get(r, s) {
                Some(v) => self.derive(s, r, -v),
                None => Ok(false),
            },
            Rule::Opposite(r, s) => match self.get(r, s) {
                Some(v) => {
                    let p = chain_p(r, s)? as i64 + 1;
                    let derived = SignCoefficient::integer(-p * p).checked_div(v)?;
                    self.derive(-r, -s, derived)
                }
                None => Ok(false),
            },
            Rule::Triple([r1, r2, r3]) => {
                // Each pair (x, y) with third root z carries N_{x,y}/(z,z).
                let slots = [(r1, r2, r3), (r2, r3, r1), (r3, r1, r2)];
                let Some(ratio) = slots
                    .iter()
                    .find_map(|&(x, y, z)| self.get(x, y).map(|v| v.scale(norm(z).recip())))
                else {
                    return Ok(false);
                };
                let mut changed = false;
                for (x, y, z) in slots {
                    changed |= self.derive(x, y, ratio.scale(norm(z)))?;
                }
                Ok(changed)
            }
            Rule::Quadruple(roots) => self.apply_quadruple(roots),
        }
    }

    fn apply_quadruple(&mut self, [r1, r2, r3, r4]: [Root; 4]) -> Result<bool> {
        let terms = [
            ((r1, r2), (r3, r4)),
            ((r2, r3), (r1, r4)),
            ((r3, r1), (r2, r4)),
        ];
        let mut known_sum = SignCoefficient::zero();
        let mut unknown = None;
        for ((x1, y1), (x2, y2)) in terms {
            if sum(x1, y1).is_none() {
                continue;
            }
            let denom = sum_norm(x1, y1);
            match (self.get(x1, y1), self.get(x2, y2)) {
                (Some(f), Some(g)) => {
                    known_sum = known_sum.checked_add((f * g).scale(denom.recip()))?;
                }
                (None, Some(g)) if unknown.is_none() => unknown = Some((x1, y1, g, denom)),
                (Some(f), None) if unknown.is_none() => unknown = Some((x2, y2, f, denom)),
                _ => return Ok(false),
            }
        }
        match unknown {
            Some((x, y, other, denom)) => {
                let value = (-known_sum).scale(denom).checked_div(other)?;
                self.derive(x, y, value)
            }
            None => Ok(false),
        }
    }
}

/// Derives the full table from the seeds, applying rules in canonical order.
pub fn solve(seeds: &Seeds) -> Result<ConstantTable> {
    solve_with_rules(seeds, &rules())
}

/// Derives the full table applying the given rule instances, repeatedly and
/// in the given order, until nothing changes.
pub fn solve_with_rules(seeds: &Seeds, rules: &[Rule]) -> Result<ConstantTable> {
    let mut partial = Partial {
        known: [[None; 12]; 12],
    };
    for (pair, value) in extraspecial_pairs().iter().zip(seeds.values()) {
        partial.derive(pair.r, pair.s, value)?;
    }
    loop {
        let mut changed = false;
        for &rule in rules {
            changed |= partial.apply(rule)?;
        }
        if !changed {
            break;
        }
    }
    let missing: Vec<(Root, Root)> = root_sum_pairs()
        .filter(|&(r, s)| partial.get(r, s).is_none())
        .collect();
    if !missing.is_empty() {
        return Err(Error::Incomplete(missing));
    }
    let mut entries = [[SignCoefficient::zero(); 12]; 12];
    for (r, s) in root_sum_pairs() {
        entries[r.index()][s.index()] = partial.get(r, s).unwrap();
    }
    Ok(ConstantTable { entries })
}

/// Which of the four relations an instance belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Antisymmetry,
    Triple,
    Opposite,
    Quadruple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub relation: Relation,
    pub roots: Vec<Root>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let roots: Vec<String> = self.roots.iter().map(|r| r.to_string()).collect();
        write!(
            f,
            "{:?} [{}]: {}",
            self.relation,
            roots.join(", "),
            self.detail
        )
    }
}

/// Outcome of [`verify_relations`]: instance counts and failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub sigma: SignAssignment,
    pub antisymmetry_checked: usize,
    pub triples_checked: usize,
    pub opposite_checked: usize,
    pub quadruples_checked: usize,
    pub violations: Vec<Violation>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Specialises `table` under `sigma` and checks all four relations on every
/// instance.
pub fn verify_relations(table: &ConstantTable, sigma: SignAssignment) -> RelationReport {
    let n = |r: Root, s: Root| table.get(r, s).specialize(sigma);
    let mut report = RelationReport {
        sigma,
        antisymmetry_checked: 0,
        triples_checked: 0,
        opposite_checked: 0,
        quadruples_checked: 0,
        violations: Vec::new(),
    };
    let mut violations = Vec::new();

    for r in ALL_ROOTS {
        for s in ALL_ROOTS {
            report.antisymmetry_checked += 1;
            if n(s, r) != -n(r, s) {
                violations.push(violation(
                    Relation::Antisymmetry,
                    vec![r, s],
                    format!("N[s,r] = {}, N[r,s] = {}", n(s, r), n(r, s)),
                ));
            }
        }
    }

    for [r1, r2, r3] in zero_sum_triples() {
        report.triples_checked += 1;
        let x1 = n(r1, r2) / norm(r3);
        let x2 = n(r2, r3) / norm(r1);
        let x3 = n(r3, r1) / norm(r2);
        if x1 != x2 || x2 != x3 {
            violations.push(violation(
                Relation::Triple,
                vec![r1, r2, r3],
                format!("ratios {x1}, {x2}, {x3}"),
            ));
        }
    }

    for (r, s) in root_sum_pairs() {
        report.opposite_checked += 1;
        let p = chain_p(r, s).expect("r + s is a root, so r != ±s") as i64 + 1;
        let product = n(r, s) * n(-r, -s);
        if product != Rational64::from_integer(-p * p) {
            violations.push(violation(
                Relation::Opposite,
                vec![r, s],
                format!("N[r,s] N[-r,-s] = {product}, expected {}", -p * p),
            ));
        }
        if n(r, s).abs() != Rational64::from_integer(p) {
            violations.push(violation(
                Relation::Opposite,
                vec![r, s],
                format!("|N[r,s]| = {}, expected p+1 = {p}", n(r, s).abs()),
            ));
        }
    }

    for [r1, r2, r3, r4] in zero_sum_quadruples() {
        report.quadruples_checked += 1;
        let total = n(r1, r2) * n(r3, r4) / sum_norm(r1, r2)
            + n(r2, r3) * n(r1, r4) / sum_norm(r2, r3)
            + n(r3, r1) * n(r2, r4) / sum_norm(r3, r1);
        if !total.is_zero() {
            violations.push(violation(
                Relation::Quadruple,
                vec![r1, r2, r3, r4],
                format!("sum is {total}"),
            ));
        }
    }

    report.violations = violations;
    report
}

fn violation(relation: Relation, roots: Vec<Root>, detail: String) -> Violation {
    Violation {
        relation,
        roots,
        detail,
    }
}

/// A table of specialised integer constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerTable {
    entries: [[i64; 12]; 12],
}

impl IntegerTable {
    pub fn get(&self, r: Root, s: Root) -> i64 {
        self.entries[r.index()][s.index()]
    }
}

pub fn specialize_table(table: &ConstantTable, sigma: SignAssignment) -> Result<IntegerTable> {
    let mut entries = [[0; 12]; 12];
    for r in ALL_ROOTS {
        for s in ALL_ROOTS {
            let value = table.get(r, s).specialize(sigma);
            if !value.is_integer() {
                return Err(Error::NonInteger(value.to_string()));
            }
            entries[r.index()][s.index()] = value.to_integer();
        }
    }
    Ok(IntegerTable { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(text: &str) -> Root {
        text.parse().unwrap()
    }

    fn c(text: &str) -> SignCoefficient {
        text.parse().unwrap()
    }

    fn table() -> ConstantTable {
        solve(&Seeds::symbolic()).unwrap()
    }

    #[test]
    fn derived_from_seeds() {
        let t = table();
        assert_eq!(t.get(root("a+b"), root("2a+b")), c("-3ε5"));
        assert_eq!(t.get(root("-a"), root("-b")), c("-ε1"));
        assert_eq!(t.get(root("2a+b"), root("-3a-2b")), c("-ε5"));
        assert_eq!(t.get(root("3a+b"), root("-3a-2b")), c("ε4"));
        assert_eq!(t.get(root("-3a-2b"), root("b")), c("ε4"));
        assert_eq!(t.nonzero().count(), 60);
    }

    #[test]
    fn steps_of_the_hand_derivation() {
        // Triple relations used on the seeds.
        let t = table();
        assert_eq!(t.get(root("b"), root("-a-b")), c("ε1"));
        assert_eq!(t.get(root("-a-b"), root("a")), c("3ε1"));
        assert_eq!(t.get(root("a+b"), root("-2a-b")), c("2ε2"));
        assert_eq!(t.get(root("-3a-b"), root("a")), c("ε3"));
        assert_eq!(t.get(root("2a+b"), root("-3a-b")), c("ε3"));
        assert_eq!(t.get(root("-3a-2b"), root("a+b")), c("-ε5"));
        // Inputs of the quadruple step.
        assert_eq!(t.get(root("-b"), root("a+b")), c("-ε1"));
        assert_eq!(t.get(root("-b"), root("-3a-b")), c("-ε4"));
    }

    #[test]
    fn table_shape() {
        let t = table();
        for r in ALL_ROOTS {
            for s in ALL_ROOTS {
                let v = t.get(r, s);
                assert_eq!(v.is_zero(), sum(r, s).is_none());
                assert_eq!(t.get(s, r), -v);
                assert_eq!(t.get(r, s), t.get(-s, -r));
                if !v.is_zero() {
                    let p = chain_p(r, s).unwrap() as i64;
                    assert_eq!(v.coeff().abs(), Rational64::from_integer(p + 1));
                }
            }
        }
    }

    #[test]
    fn instance_counts() {
        assert_eq!(root_sum_pairs().count(), 60);
        assert_eq!(zero_sum_triples().len(), 60);
        let quads = zero_sum_quadruples();
        for q in &quads {
            assert_eq!(q.iter().map(|r| r.m()).sum::<i32>(), 0);
            assert_eq!(q.iter().map(|r| r.n()).sum::<i32>(), 0);
        }
        // The quadruple from the hand derivation is present with -3a-b distinguished.
        let wanted = [root("-b"), root("a+b"), root("2a+b"), root("-3a-b")];
        assert!(quads.contains(&wanted), "missing {wanted:?}");
    }

    #[test]
    fn relations_hold() {
        let t = table();
        for sigma in SignAssignment::all() {
            let report = verify_relations(&t, sigma);
            assert!(report.passed(), "{sigma}: {:?}", report.violations);
            assert_eq!(report.antisymmetry_checked, 144);
            assert_eq!(report.opposite_checked, 60);
        }
    }

    #[test]
    fn flipped_entry_is_caught() {
        let mut t = table();
        t.set(root("a"), root("b"), c("-ε1"));
        let report = verify_relations(&t, SignAssignment::ALL_PLUS);
        assert!(!report.passed());
    }

    #[test]
    fn bad_seeds() {
        let mut values = Seeds::symbolic().values();
        values[1] = c("ε2");
        assert!(matches!(Seeds::new(values), Err(Error::BadSeed { .. })));
        assert!(Seeds::new(Seeds::symbolic().values()).is_ok());
    }

    #[test]
    fn missing_rules_are_reported() {
        let without_quadruples: Vec<Rule> = rules()
            .into_iter()
            .filter(|r| !matches!(r, Rule::Quadruple(_)))
            .collect();
        let err = solve_with_rules(&Seeds::symbolic(), &without_quadruples).unwrap_err();
        assert!(matches!(err, Error::Incomplete(_)), "{err}");
    }

    #[test]
    fn specialization() {
        let t = table();
        let plus = specialize_table(&t, SignAssignment::ALL_PLUS).unwrap();
        assert_eq!(plus.get(root("-2a-b"), root("-a-b")), -3);
        assert_eq!(plus.get(root("a"), root("b")), 1);
        let sigma: SignAssignment = "+++-".parse().unwrap();
        let flipped = specialize_table(&t, sigma).unwrap();
        assert_eq!(flipped.get(root("a+b"), root("2a+b")), 3);
    }

    #[test]
    fn specialization_rejects_fractions() {
        let mut t = table();
        t.set(root("a"), root("b"), c("1/2ε1"));
        assert!(matches!(
            specialize_table(&t, SignAssignment::ALL_PLUS),
            Err(Error::NonInteger(_))
        ));
    }
}
