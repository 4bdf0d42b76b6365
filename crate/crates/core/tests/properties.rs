use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use zxr_core::graphstate::graph_state;
use zxr_core::random::{random_diagram, random_graph, rng};
use zxr_core::rules::{normalize_trace, Config};
use zxr_core::semantics::{equal_up_to_scalar, evaluate, ModelN, TOL};
use zxr_core::{apply, compose, dagger, iso_equal, match_sites, normalize, tensor, CMatrix, Diagram, Phase, RuleId};

fn phase() -> impl Strategy<Value = Phase> {
    (-40i64..40, 1i64..13).prop_map(|(n, d)| Phase::new(n, d))
}

fn close(a: &CMatrix, b: &CMatrix) -> bool {
    a.rows() == b.rows() && a.cols() == b.cols() && a.max_diff(b) <= 1e-9 * a.max_abs().max(1.0)
}

fn eval(d: &Diagram) -> CMatrix {
    evaluate(d, ModelN::STANDARD).unwrap()
}

/// A random diagram with exactly `ins` inputs, found by rejection.
fn diagram_with_inputs(r: &mut impl Rng, ins: usize) -> Option<Diagram> {
    (0..500).map(|_| random_diagram(r, 8)).find(|d| d.inputs().len() == ins)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn phases_form_an_abelian_group(a in phase(), b in phase(), c in phase()) {
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a + Phase::ZERO, a);
        prop_assert_eq!(a + (-a), Phase::ZERO);
        prop_assert_eq!(a - b, a + (-b));
    }

    #[test]
    fn phases_parse_what_they_print(a in phase()) {
        prop_assert_eq!(a.to_string().parse::<Phase>().unwrap(), a);
        let r = a.radians();
        prop_assert!((0.0..2.0 * std::f64::consts::PI).contains(&r));
    }

    #[test]
    fn evaluation_is_functorial(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_diagram(&mut r, 8);
        prop_assume!(g.outputs().len() <= 2);
        let f = diagram_with_inputs(&mut r, g.outputs().len());
        prop_assume!(f.is_some());
        let f = f.unwrap();
        let fg = compose(&f, &g).unwrap();
        prop_assert!(close(&eval(&fg), &eval(&f).matmul(&eval(&g))));
        let t = tensor(&f, &g);
        prop_assert!(close(&eval(&t), &eval(&f).kron(&eval(&g))));
        prop_assert!(close(&eval(&dagger(&f)), &eval(&f).adjoint()));
    }

    #[test]
    fn dagger_is_an_involution(seed in any::<u64>()) {
        let d = random_diagram(&mut rng(seed), 10);
        prop_assert!(iso_equal(&dagger(&dagger(&d)), &d));
    }

    #[test]
    fn random_rewrite_sequences_are_sound(seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut d = random_diagram(&mut r, 10);
        let rules: Vec<RuleId> = RuleId::ALL.iter().copied().filter(|r| !r.is_euler()).collect();
        for _ in 0..4 {
            let mut sites: Vec<(RuleId, Vec<u32>)> =
                rules.iter().flat_map(|&rule| match_sites(rule, &d).into_iter().map(move |a| (rule, a))).collect();
            sites.shuffle(&mut r);
            let Some((rule, at)) = sites.into_iter().next() else { break };
            let next = apply(rule, &d, &at, &Config::default()).unwrap();
            prop_assume!(next.edge_count_total() <= 20);
            for n in 1..=3 {
                let (a, b) = (evaluate(&d, ModelN(n)).unwrap(), evaluate(&next, ModelN(n)).unwrap());
                prop_assert!(equal_up_to_scalar(&a, &b, TOL).unwrap(), "{} at {:?}, n = {}", rule, at, n);
            }
            next.validate().unwrap();
            d = next;
        }
    }

    #[test]
    fn normalize_terminates_and_shrinks(seed in any::<u64>()) {
        let d = random_diagram(&mut rng(seed), 10);
        let (end, steps) = normalize_trace(&d);
        let mut cur = d.clone();
        for (rule, at) in &steps {
            let next = apply(*rule, &cur, at, &Config::default()).unwrap();
            prop_assert!(next.node_count() + next.edge_count_total() < cur.node_count() + cur.edge_count_total());
            cur = next;
        }
        prop_assert_eq!(&cur, &end);
        prop_assert!(equal_up_to_scalar(&eval(&d), &eval(&end), TOL).unwrap());
        prop_assert_eq!(normalize(&end), end);
    }

    #[test]
    fn graph_states_are_normal(seed in any::<u64>(), n in 1usize..7) {
        let g = random_graph(&mut rng(seed), n);
        let d = graph_state(&g);
        prop_assert_eq!(normalize(&d), d);
    }
}
