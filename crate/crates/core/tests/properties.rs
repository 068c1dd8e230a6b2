use proptest::prelude::*;

use gfsum_core::engine::{
    binomial_sum, lemma2_sum, lemma5_presentations_agree, rule_satisfied, RuleSequence,
};
use gfsum_core::exact::{is_canonical, ratio, Rational};
use gfsum_core::identities::{check_eq1_from_eq5, check_fundamental, Fundamental, FundamentalParams};
use gfsum_core::sums::specialize::{
    cross_rule, ratio_rule, shift_rule, theorem2_via_engine, theorem4_via_engine,
};
use gfsum_core::sums::{theorem1_sum, theorem2_binomial, theorem3_double, theorem4_double, TheoremParams};
use gfsum_core::verify::{run_grid, GridReport, GridSpec};
use gfsum_core::{gen_term, gen_term_oracle, Error, SecondOrderRule, SequenceSpec, ThirdOrderRule};

fn seq() -> impl Strategy<Value = SequenceSpec> {
    (-50i64..=50, -50i64..=50).prop_map(|(a, b)| SequenceSpec::new(a, b))
}

fn coef() -> impl Strategy<Value = Rational> {
    (prop_oneof![-9i64..=-1, 1i64..=9], prop_oneof![-9i64..=-1, 1i64..=9]).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fundamental_identities_hold(m in -40i64..=40, n in -40i64..=40, r in -40i64..=40, g in seq(), h in seq()) {
        for id in Fundamental::ALL {
            let p = FundamentalParams { h: h.clone(), ..FundamentalParams::new(m, n, r, g.clone()) };
            let c = check_fundamental(id, &p);
            prop_assert!(c.equal, "{id} m={m} n={n} r={r}: {} vs {}", c.lhs, c.rhs);
        }
        prop_assert!(check_eq1_from_eq5(m, n, &g).equal);
    }

    #[test]
    fn fast_terms_match_oracle(m in -2000i64..=2000, g in seq()) {
        prop_assert_eq!(gen_term(&g, m), gen_term_oracle(&g, m).unwrap());
    }

    #[test]
    fn theorem_forms_hold_off_guards(
        m in -15i64..=15, n in -7i64..=7, r in -7i64..=7, k in 0i64..=9, g in seq(), h in seq(),
    ) {
        let p = TheoremParams::new(m, n, r, k, g).with_h(h);
        for form in 1..=3 {
            for c in [theorem1_sum(form, &p), theorem2_binomial(form, &p)] {
                match c {
                    Ok(c) => prop_assert!(c.equal && is_canonical(&c.lhs)),
                    Err(e) => prop_assert!(matches!(e, Error::Guard(_)), "{e}"),
                }
            }
        }
        for form in 1..=6 {
            for c in [theorem3_double(form, &p), theorem4_double(form, &p)] {
                match c {
                    Ok(c) => prop_assert!(c.equal),
                    Err(e) => prop_assert!(matches!(e, Error::Guard(_)), "{e}"),
                }
            }
        }
    }

    #[test]
    fn engine_agrees_with_closed_forms(m in -10i64..=10, n in -6i64..=6, r in -6i64..=6, k in 0i64..=7, g in seq(), h in seq()) {
        for form in 1..=3 {
            if let (Ok(a), Ok(b)) = (theorem2_binomial(form, &TheoremParams::new(m, n, r, k, g.clone())), theorem2_via_engine(form, m, n, r, k, &g)) {
                prop_assert_eq!(a, b);
            }
        }
        let p = TheoremParams::new(m, n, r, k, g.clone()).with_h(h.clone());
        for form in 1..=6 {
            if let (Ok(a), Ok(b)) = (theorem4_double(form, &p), theorem4_via_engine(form, m, n, r, k, &g, &h)) {
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn specialized_rules_hold_for_every_sequence(n in -8i64..=8, r in -8i64..=8, g in seq(), h in seq()) {
        if let Ok(rule) = ratio_rule(n, r) {
            prop_assert!(rule_satisfied(&rule, &g, -20..=20));
        }
        if let Ok(rule) = shift_rule(n) {
            prop_assert!(rule_satisfied(&rule, &g, -20..=20));
        }
        if let Ok(rule) = cross_rule(n, r, &g) {
            prop_assert!(rule_satisfied(&rule, &h, -20..=20));
        }
    }

    #[test]
    fn second_order_lemmas_on_random_rules(
        f1 in coef(), f2 in coef(), a in -4i64..=4, b in -4i64..=4,
        s0 in -5i64..=5, s1 in -5i64..=5, s2 in -5i64..=5, s3 in -5i64..=5,
        m in -3i64..=3, k in 0i64..=8,
    ) {
        prop_assume!(a != b);
        let rule = SecondOrderRule::new(f1, f2, a, b).unwrap();
        let seeds: Vec<Rational> = [s0, s1, s2, s3].iter().map(|&v| ratio(v, 1)).collect();
        let x = (1..=4).find_map(|span| RuleSequence::unroll(&rule, &seeds[..span], -90..=90).ok());
        prop_assume!(x.is_some());
        let x = x.unwrap();
        prop_assert!(rule_satisfied(&rule, &x, -80..=80));
        for form in 1..=4 {
            prop_assert!(lemma2_sum(form, &rule, &x, m, k).unwrap().equal);
        }
        for form in 1..=3 {
            prop_assert!(binomial_sum(form, &rule, &x, m, k).unwrap().equal);
        }
    }

    #[test]
    fn third_order_presentations_agree(
        f1 in coef(), f2 in coef(), f3 in coef(), a in -4i64..=4, b in -4i64..=4, c in -4i64..=4,
        seeds in proptest::collection::vec(-5i64..=5, 8), m in -3i64..=3, k in 0i64..=5,
    ) {
        prop_assume!(a != b && b != c && a != c);
        let rule = ThirdOrderRule::new(f1, f2, f3, a, b, c).unwrap();
        let seeds: Vec<Rational> = seeds.iter().map(|&v| ratio(v, 1)).collect();
        let x = (1..=8).find_map(|span| RuleSequence::unroll(&rule, &seeds[..span], -120..=120).ok());
        prop_assume!(x.is_some());
        let x = x.unwrap();
        for form in 1..=6 {
            prop_assert!(lemma5_presentations_agree(form, &rule, &x, m, k).unwrap());
        }
    }
}

#[test]
fn json_report_round_trips() {
    let grid = GridSpec {
        m: -2..=2,
        n: -2..=2,
        r: -2..=2,
        k: 0..=2,
        g_seeds: vec![SequenceSpec::new(3, 7), SequenceSpec::new(0, 0)],
        ..GridSpec::default()
    };
    let rep = run_grid(&grid).unwrap();
    assert_eq!(rep.summary.fail, 0);
    assert!(rep.summary.skipped > 0);
    let text = rep.to_json().unwrap();
    let back = GridReport::from_json(&text).unwrap();
    assert_eq!(back, rep);
    assert_eq!(back.to_json().unwrap(), text);
}
