use num_rational::Rational64;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use g2_chevalley::adjoint::build_algebra;
use g2_chevalley::constants::{rules, solve, solve_with_rules, Seeds};
use g2_chevalley::polymat::{Poly2, Var};
use g2_chevalley::rootsys::{inner, sum, Root, ALL_ROOTS};
use g2_chevalley::signs::{Notation, SignAssignment, SignCoefficient, SignMonomial};

fn any_root() -> impl Strategy<Value = Root> {
    (0..12usize).prop_map(|k| ALL_ROOTS[k])
}

fn any_sigma() -> impl Strategy<Value = SignAssignment> {
    (0..16usize).prop_map(|k| SignAssignment::all().nth(k).unwrap())
}

fn any_coeff() -> impl Strategy<Value = SignCoefficient> {
    (-12i64..=12, 1i64..=6, 0u8..16).prop_map(|(n, d, bits)| {
        SignCoefficient::new(Rational64::new(n, d), SignMonomial::from_bits(bits))
    })
}

fn any_poly() -> impl Strategy<Value = Poly2> {
    prop::collection::vec((0u32..3, 0u32..3, -4i64..=4), 0..4).prop_map(|terms| {
        terms.into_iter().fold(Poly2::zero(), |acc, (i, j, c)| {
            &acc + &Poly2::monomial(Rational64::from_integer(c), i, j)
        })
    })
}

proptest! {
    #[test]
    fn specialization_is_multiplicative(a in any_coeff(), b in any_coeff(), sigma in any_sigma()) {
        prop_assert_eq!((a * b).specialize(sigma), a.specialize(sigma) * b.specialize(sigma));
        prop_assert_eq!((-a).specialize(sigma), -a.specialize(sigma));
    }

    #[test]
    fn coefficient_rendering_round_trips(a in any_coeff()) {
        for notation in [Notation::Unicode, Notation::Ascii, Notation::Latex] {
            let text = a.render(notation);
            prop_assert_eq!(text.parse::<SignCoefficient>().unwrap(), a, "{}", text);
        }
    }

    #[test]
    fn root_rendering_round_trips(r in any_root()) {
        prop_assert_eq!(r.to_string().parse::<Root>().unwrap(), r);
    }

    #[test]
    fn root_sums_are_symmetric(r in any_root(), s in any_root()) {
        prop_assert_eq!(sum(r, s), sum(s, r));
        prop_assert_eq!(inner(r, s), inner(s, r));
        prop_assert_eq!(inner(-r, s), -inner(r, s));
    }

    #[test]
    fn poly_ring_laws(p in any_poly(), q in any_poly(), r in any_poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!(&p * &Poly2::one(), p);
    }

    #[test]
    fn substitution_is_a_ring_map(p in any_poly(), q in any_poly(), v in any_poly()) {
        let sub = |x: &Poly2| x.substitute(Var::T, &v);
        prop_assert_eq!(sub(&(&p * &q)), &sub(&p) * &sub(&q));
        prop_assert_eq!(sub(&(&p + &q)), &sub(&p) + &sub(&q));
    }

    #[test]
    fn evaluation_is_a_ring_map(p in any_poly(), q in any_poly(), t0 in -3i64..=3, u0 in -3i64..=3) {
        let (t0, u0) = (Rational64::from_integer(t0), Rational64::from_integer(u0));
        prop_assert_eq!((&p * &q).evaluate(t0, u0), p.evaluate(t0, u0) * q.evaluate(t0, u0));
        prop_assert_eq!((&p + &q).evaluate(t0, u0), p.evaluate(t0, u0) + q.evaluate(t0, u0));
    }

    #[test]
    fn root_elements_are_one_parameter_subgroups(
        r in any_root(),
        f in any_poly(),
        g in any_poly(),
        sigma in any_sigma(),
    ) {
        let algebra = build_algebra(&solve(&Seeds::symbolic()).unwrap(), sigma).unwrap();
        let xf = algebra.root_element(r, &f).unwrap();
        let xg = algebra.root_element(r, &g).unwrap();
        prop_assert_eq!(xf.mul(&xg).unwrap(), algebra.root_element(r, &(&f + &g)).unwrap());
    }

    #[test]
    fn root_elements_are_automorphisms(r in any_root(), c in -3i64..=3, sigma in any_sigma()) {
        let algebra = build_algebra(&solve(&Seeds::symbolic()).unwrap(), sigma).unwrap();
        let g = algebra.root_element(r, &Poly2::integer(c)).unwrap();
        prop_assert!(algebra.preserves_bracket(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solver_ignores_rule_order(seed in any::<u64>()) {
        let mut order = rules();
        order.shuffle(&mut StdRng::seed_from_u64(seed));
        let shuffled = solve_with_rules(&Seeds::symbolic(), &order).unwrap();
        prop_assert_eq!(shuffled, solve(&Seeds::symbolic()).unwrap());
    }
}
