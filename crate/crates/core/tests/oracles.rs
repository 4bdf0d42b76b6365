//! Semantics and matching checked against independent, test-side oracles.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use zxr_core::graphstate::{cz_diagram, graph_state, SimpleGraph};
use zxr_core::random::{random_diagram, random_graph, rng};
use zxr_core::semantics::{equal_up_to_scalar, evaluate, ModelN, TOL};
use zxr_core::{generator, iso_equal, CMatrix, Diagram, GeneratorId, NodeId, NodeKind, Phase};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn m2(a: Complex64, b: Complex64, cc: Complex64, d: Complex64) -> CMatrix {
    CMatrix::from_rows(&[vec![a, b], vec![cc, d]])
}

fn mul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    // plain 2x2 product, written out
    let g = |m: &CMatrix, r, k| m.get(r, k);
    m2(
        g(a, 0, 0) * g(b, 0, 0) + g(a, 0, 1) * g(b, 1, 0),
        g(a, 0, 0) * g(b, 0, 1) + g(a, 0, 1) * g(b, 1, 1),
        g(a, 1, 0) * g(b, 0, 0) + g(a, 1, 1) * g(b, 1, 0),
        g(a, 1, 0) * g(b, 0, 1) + g(a, 1, 1) * g(b, 1, 1),
    )
}

fn pz(alpha: f64) -> CMatrix {
    m2(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), Complex64::from_polar(1.0, alpha))
}

/// The X rotation as the engine interprets it: `|+><+| + e^{ia}|-><-|`.
fn px(alpha: f64) -> CMatrix {
    let e = Complex64::from_polar(1.0, alpha);
    let one = c(1.0, 0.0);
    m2((one + e) / 2.0, (one - e) / 2.0, (one - e) / 2.0, (one + e) / 2.0)
}

/// The X rotation row exactly as printed in the generator table.
fn px_literal(alpha: f64) -> CMatrix {
    let k = Complex64::from_polar(1.0, -alpha / 2.0);
    let (co, si) = ((alpha / 2.0).cos(), (alpha / 2.0).sin());
    m2(k * co, k * c(0.0, si), k * c(0.0, si), k * co)
}

fn hadamard() -> CMatrix {
    CMatrix::from_real_rows(&[&[FRAC_1_SQRT_2, FRAC_1_SQRT_2], &[FRAC_1_SQRT_2, -FRAC_1_SQRT_2]])
}

fn eval(d: &Diagram, n: u32) -> CMatrix {
    evaluate(d, ModelN(n)).unwrap()
}

fn gen(kind: GeneratorId, alpha: Option<Phase>) -> CMatrix {
    eval(&generator(kind, alpha).unwrap(), 1)
}

#[test]
fn single_qubit_generators_match_hand_matrices() {
    for num in 0..8 {
        let p = Phase::new(num, 4);
        let a = p.radians();
        assert!(gen(GeneratorId::PZ, Some(p)).max_diff(&pz(a)) < 1e-12);
        assert!(gen(GeneratorId::PX, Some(p)).max_diff(&px(a)) < 1e-12);
    }
    assert!(gen(GeneratorId::H, None).max_diff(&hadamard()) < 1e-12);
}

#[test]
fn euler_product_by_two_by_two_multiplication() {
    let q = -PI / 2.0;
    let product = mul(&pz(q), &mul(&px(q), &pz(q)));
    assert!(equal_up_to_scalar(&product, &hadamard(), TOL).unwrap());
    // the n = 2 model doubles every angle
    let doubled = mul(&pz(2.0 * q), &mul(&px(2.0 * q), &pz(2.0 * q)));
    assert!(!equal_up_to_scalar(&doubled, &hadamard(), TOL).unwrap());

    let mut chain = Diagram::new();
    let i = chain.add_input();
    let o = chain.add_output();
    let s: Vec<NodeId> = [NodeKind::ZSpider(Phase::MINUS_HALF_PI), NodeKind::XSpider(Phase::MINUS_HALF_PI), NodeKind::ZSpider(Phase::MINUS_HALF_PI)]
        .into_iter()
        .map(|k| chain.add_node(k))
        .collect();
    for (a, b) in [(i, s[0]), (s[0], s[1]), (s[1], s[2]), (s[2], o)] {
        chain.add_edge(a, b);
    }
    assert!(equal_up_to_scalar(&eval(&chain, 1), &product, TOL).unwrap());
    assert!(equal_up_to_scalar(&eval(&chain, 2), &doubled, TOL).unwrap());
}

#[test]
fn literal_table_row_breaks_the_h_rules() {
    let h = hadamard();
    let a = PI / 2.0;
    // colour change through H holds for the engine's reading only
    assert!(equal_up_to_scalar(&mul(&h, &mul(&pz(a), &h)), &px(a), TOL).unwrap());
    assert!(!equal_up_to_scalar(&mul(&h, &mul(&pz(a), &h)), &px_literal(a), TOL).unwrap());
    let q = -PI / 2.0;
    assert!(!equal_up_to_scalar(&mul(&pz(q), &mul(&px_literal(q), &pz(q))), &h, TOL).unwrap());
    // the two readings agree up to the sign of the angle
    for num in 0..8 {
        let a = PI * num as f64 / 4.0;
        assert!(equal_up_to_scalar(&px_literal(-a), &px(a), TOL).unwrap());
    }
}

/// `prod_{edges} CZ |+...+>`, amplitude `(-1)^{sum x_i x_j}`, first vertex
/// as the most significant bit.
fn graph_state_vector(g: &SimpleGraph) -> CMatrix {
    let n = g.vertices().len();
    let mut m = CMatrix::zeros(1 << n, 1);
    let idx: BTreeMap<&str, usize> = g.vertices().iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    for x in 0..1usize << n {
        let bit = |i: usize| (x >> (n - 1 - i)) & 1;
        let parity: usize = g.edges().iter().map(|(a, b)| bit(idx[a]) & bit(idx[b])).sum();
        m.set(x, 0, c(if parity % 2 == 0 { 1.0 } else { -1.0 }, 0.0));
    }
    m
}

#[test]
fn graph_states_match_the_controlled_z_product() {
    let mut r = rng(11);
    for _ in 0..40 {
        let n = r.gen_range(1..=6);
        let g = random_graph(&mut r, n);
        assert!(equal_up_to_scalar(&eval(&graph_state(&g), 1), &graph_state_vector(&g), TOL).unwrap());
    }
    let cz = CMatrix::from_real_rows(&[&[1., 0., 0., 0.], &[0., 1., 0., 0.], &[0., 0., 1., 0.], &[0., 0., 0., -1.]]);
    assert!(equal_up_to_scalar(&eval(&cz_diagram(), 1), &cz, TOL).unwrap());
}

/// Copies `d` with node ids drawn in a shuffled order.
fn relabel(d: &Diagram, r: &mut impl Rng) -> Diagram {
    let mut ids = d.node_ids();
    ids.shuffle(r);
    let mut out = Diagram::new();
    let map: BTreeMap<NodeId, NodeId> = ids.iter().map(|&v| (v, out.add_node(d.kind(v).unwrap()))).collect();
    for (a, b) in d.edges() {
        out.add_edge(map[&a], map[&b]);
    }
    out.set_inputs(d.inputs().iter().map(|v| map[v]).collect());
    out.set_outputs(d.outputs().iter().map(|v| map[v]).collect());
    out
}

fn permutations(items: &[NodeId]) -> Vec<Vec<NodeId>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Tries every bijection of the inner nodes.
fn brute_force_iso(f: &Diagram, g: &Diagram) -> bool {
    if f.node_count() != g.node_count() || f.inputs().len() != g.inputs().len() || f.outputs().len() != g.outputs().len() {
        return false;
    }
    let inner = |d: &Diagram| d.node_ids().into_iter().filter(|&v| !d.is_boundary(v)).collect::<Vec<_>>();
    let (fi, gi) = (inner(f), inner(g));
    if fi.len() != gi.len() {
        return false;
    }
    permutations(&gi).into_iter().any(|p| {
        let mut map: BTreeMap<NodeId, NodeId> = fi.iter().copied().zip(p).collect();
        map.extend(f.inputs().iter().copied().zip(g.inputs().iter().copied()));
        map.extend(f.outputs().iter().copied().zip(g.outputs().iter().copied()));
        f.node_ids().iter().all(|&v| f.kind(v) == g.kind(map[&v]))
            && f.node_ids().iter().all(|&a| f.node_ids().iter().all(|&b| f.edge_count(a, b) == g.edge_count(map[&a], map[&b])))
    })
}

#[test]
fn iso_agrees_with_brute_force() {
    let mut r = rng(5);
    let mut positives = 0;
    for _ in 0..150 {
        let f = random_diagram(&mut r, 8);
        let g = if r.gen_bool(0.5) { relabel(&f, &mut r) } else { relabel(&random_diagram(&mut r, 8), &mut r) };
        let expected = brute_force_iso(&f, &g);
        positives += expected as usize;
        assert_eq!(iso_equal(&f, &g), expected, "{}\n--\n{}", zxr_core::zxd::serialize(&f), zxr_core::zxd::serialize(&g));
    }
    assert!(positives > 50);
}
