use gl11_vacuum::gl11::{Gl11, LoopOperator};
use gl11_vacuum::superpoly::{ExactRational, Parity, SuperPoly, Truncation, VarId};
use gl11_vacuum::susy::{chevalley, D_apply, SusyAlphabet};
use proptest::prelude::*;

fn g() -> &'static Gl11 {
    Gl11::standard()
}

type RawTerm = (Vec<(u8, u32, u32)>, i64, i64);

fn raw_terms(kinds: u8) -> impl Strategy<Value = Vec<RawTerm>> {
    prop::collection::vec(
        (
            prop::collection::vec((0..kinds, 0u32..4, 1u32..3), 0..4),
            -5i64..=5,
            1i64..=3,
        ),
        0..5,
    )
}

fn build(raw: &[RawTerm]) -> SuperPoly {
    let g = g();
    let mut p = g.zero();
    for (factors, num, den) in raw {
        let fs: Vec<(VarId, u32)> = factors
            .iter()
            .map(|&(kind, i, e)| match kind {
                0 => (g.a(i), e),
                1 => (g.c(i), e),
                2 => (g.phi(i), 1),
                _ => (g.psi(i), 1),
            })
            .collect();
        let c = ExactRational::new(*num, *den).unwrap();
        p = &p + &SuperPoly::from_factors(g.alphabet(), c, &fs);
    }
    p
}

fn poly() -> impl Strategy<Value = SuperPoly> {
    raw_terms(4).prop_map(|r| build(&r))
}

fn even_ac() -> impl Strategy<Value = SuperPoly> {
    raw_terms(2).prop_map(|r| build(&r))
}

fn homogeneous() -> impl Strategy<Value = (SuperPoly, Parity)> {
    (poly(), any::<bool>()).prop_map(|(p, odd)| {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        (p.filter_terms(|m| m.parity() == parity), parity)
    })
}

fn op() -> impl Strategy<Value = LoopOperator> {
    (1u8..=2, 1u8..=2, 0u32..=3).prop_map(|(i, j, r)| LoopOperator::new(i, j, r))
}

fn sign(a: Parity, b: Parity) -> ExactRational {
    ExactRational::from_int(if a.is_odd() && b.is_odd() { -1 } else { 1 })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn koszul_commutation((p, pp) in homogeneous(), (q, pq) in homogeneous()) {
        prop_assert_eq!(&p * &q, (&q * &p).scale(&sign(pp, pq)));
    }

    #[test]
    fn odd_squares_vanish((p, pp) in homogeneous()) {
        prop_assume!(pp == Parity::Odd);
        prop_assert!((&p * &p).is_zero());
    }

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn left_odd_derivative_is_super_leibniz((p, pp) in homogeneous(), q in poly(), i in 0u32..4, phi in any::<bool>()) {
        let g = g();
        let v = if phi { g.phi(i) } else { g.psi(i) };
        let lhs = (&p * &q).derive_odd_left(v).unwrap();
        let rhs = &(&p.derive_odd_left(v).unwrap() * &q)
            + &(&p * &q.derive_odd_left(v).unwrap()).scale(&sign(pp, Parity::Odd));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn translation_is_a_derivation(p in poly(), q in poly()) {
        let g = g();
        let lhs = g.translate(&(&p * &q)).unwrap();
        let rhs = &(&g.translate(&p).unwrap() * &q) + &(&p * &g.translate(&q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn loop_action_is_super_leibniz(x in op(), (p, pp) in homogeneous(), q in poly()) {
        let g = g();
        let lhs = g.act(&x, &(&p * &q));
        let rhs = &(&g.act(&x, &p) * &q) + &(&p * &g.act(&x, &q)).scale(&sign(x.parity(), pp));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_matches_commutator(x in op(), y in op(), p in poly()) {
        let g = g();
        let lhs = &g.act(&x, &g.act(&y, &p))
            - &g.act(&y, &g.act(&x, &p)).scale(&sign(x.parity(), y.parity()));
        prop_assert_eq!(lhs, g.act_combination(&x.bracket(&y), &p));
    }

    #[test]
    fn weight_is_additive((p, _) in homogeneous(), (q, _) in homogeneous()) {
        let g = g();
        let prod = &p * &q;
        if let (Ok(wp), Ok(wq), false) = (g.weight(&p), g.weight(&q), prod.is_zero()) {
            prop_assert_eq!(g.weight(&prod).unwrap(), wp + wq);
        }
    }

    #[test]
    fn division_round_trip(p in poly(), d in even_ac()) {
        prop_assume!(!d.is_zero());
        let prod = p.multiply(&d, &Truncation::none()).unwrap();
        prop_assert_eq!(prod.exact_divide(&d).unwrap(), p);
    }

    #[test]
    fn text_and_json_round_trip(p in poly()) {
        let g = g();
        prop_assert_eq!(&g.parse(&p.to_string()).unwrap(), &p);
        prop_assert_eq!(SuperPoly::from_json(g.alphabet(), &p.to_json()).unwrap(), p);
    }

    #[test]
    fn projection_is_a_graded_algebra_map(p in poly(), q in poly()) {
        let g = g();
        let s = SusyAlphabet::for_gl11(g);
        let (cp, cq) = (chevalley(g, &s, &p).unwrap(), chevalley(g, &s, &q).unwrap());
        prop_assert_eq!(chevalley(g, &s, &(&p * &q)).unwrap(), &cp * &cq);
        prop_assert_eq!(
            chevalley(g, &s, &g.translate(&p).unwrap()).unwrap(),
            s.translate(&cp).unwrap()
        );
        for d in cp.internal_degrees() {
            prop_assert!(p.internal_degrees().contains(&d));
        }
    }

    #[test]
    fn cancellation_operator_is_a_derivation(p in even_ac(), q in even_ac()) {
        let g = g();
        let lhs = D_apply(g, &(&p * &q)).unwrap();
        let rhs = D_apply(g, &p).unwrap().scale_poly(&q).add(&D_apply(g, &q).unwrap().scale_poly(&p));
        prop_assert_eq!(lhs, rhs);
    }
}
