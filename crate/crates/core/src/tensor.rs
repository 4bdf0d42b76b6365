//! Tensor-network contraction of a diagram.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::diagram::{Diagram, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::matrix::CMatrix;

/// Largest number of legs any intermediate tensor may have (2^26 entries).
pub const MAX_LEGS: usize = 26;

/// Dense tensor over binary legs, big-endian in `legs` order.
#[derive(Clone, Debug)]
struct Tensor {
    legs: Vec<usize>,
    data: Vec<Complex64>,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Scalar prefactor of a spider of the given degree.
fn spider_scale(degree: usize) -> f64 {
    if degree == 1 {
        FRAC_1_SQRT_2
    } else {
        1.0
    }
}

fn spider_tensor(kind: NodeKind, legs: Vec<usize>, degree: usize, scale_n: i64) -> Tensor {
    let phase = kind.phase().unwrap().scale(scale_n);
    let e = Complex64::from_polar(1.0, phase.radians());
    let s = spider_scale(degree);
    let k = legs.len();
    let size = 1usize << k;
    let mut data = vec![c(0.0); size];
    match kind {
        NodeKind::ZSpider(_) => {
            data[0] += c(s);
            data[size - 1] += e * s;
        }
        NodeKind::XSpider(_) => {
            let norm = s * 2f64.powf(-(k as f64) / 2.0);
            for (x, slot) in data.iter_mut().enumerate() {
                let sign = if x.count_ones() % 2 == 0 { 1.0 } else { -1.0 };
                *slot = (c(1.0) + e * sign) * norm;
            }
        }
        _ => unreachable!(),
    }
    Tensor { legs, data }
}

fn hadamard_tensor(legs: Vec<usize>) -> Tensor {
    let h = FRAC_1_SQRT_2;
    Tensor { legs, data: vec![c(h), c(h), c(h), c(-h)] }
}

fn bit(index: usize, width: usize, pos: usize) -> usize {
    (index >> (width - 1 - pos)) & 1
}

fn contract(a: &Tensor, b: &Tensor) -> Result<Tensor> {
    let shared: Vec<usize> = a.legs.iter().copied().filter(|l| b.legs.contains(l)).collect();
    let mut legs: Vec<usize> = a.legs.iter().copied().filter(|l| !shared.contains(l)).collect();
    legs.extend(b.legs.iter().copied().filter(|l| !shared.contains(l)));
    if legs.len() > MAX_LEGS {
        return Err(Error::ResourceLimit(legs.len(), MAX_LEGS));
    }
    // bit weight of each result/shared leg inside a and b
    let weight = |t: &Tensor, l: usize| -> usize {
        t.legs.iter().position(|&x| x == l).map_or(0, |p| 1 << (t.legs.len() - 1 - p))
    };
    let res_wa: Vec<usize> = legs.iter().map(|&l| weight(a, l)).collect();
    let res_wb: Vec<usize> = legs.iter().map(|&l| weight(b, l)).collect();
    let sh_wa: Vec<usize> = shared.iter().map(|&l| weight(a, l)).collect();
    let sh_wb: Vec<usize> = shared.iter().map(|&l| weight(b, l)).collect();
    let n = legs.len();
    let mut sh_offsets = Vec::with_capacity(1 << shared.len());
    for s in 0..(1usize << shared.len()) {
        let mut ia = 0;
        let mut ib = 0;
        for j in 0..shared.len() {
            if bit(s, shared.len(), j) == 1 {
                ia += sh_wa[j];
                ib += sh_wb[j];
            }
        }
        sh_offsets.push((ia, ib));
    }
    let mut data = vec![c(0.0); 1 << n];
    for (r, slot) in data.iter_mut().enumerate() {
        let mut ia = 0;
        let mut ib = 0;
        for j in 0..n {
            if bit(r, n, j) == 1 {
                ia += res_wa[j];
                ib += res_wb[j];
            }
        }
        let mut acc = c(0.0);
        for &(oa, ob) in &sh_offsets {
            acc += a.data[ia + oa] * b.data[ib + ob];
        }
        *slot = acc;
    }
    Ok(Tensor { legs, data })
}

/// Evaluates `d` with every spider phase multiplied by `n`.
pub fn contract_diagram(d: &Diagram, n: i64) -> Result<CMatrix> {
    // one label per edge; boundaries expose their edge label as an open leg
    let mut node_legs: BTreeMap<NodeId, Vec<usize>> = BTreeMap::new();
    let mut boundary_label: BTreeMap<NodeId, usize> = BTreeMap::new();
    for (label, (a, b)) in d.edges().into_iter().enumerate() {
        if a == b {
            continue; // spider self-loops are traced out inside the spider tensor
        }
        for v in [a, b] {
            if d.is_boundary(v) {
                boundary_label.insert(v, label);
            } else {
                node_legs.entry(v).or_default().push(label);
            }
        }
    }
    let mut tensors: Vec<Tensor> = Vec::new();
    for (v, kind) in d.nodes() {
        let legs = node_legs.remove(&v).unwrap_or_default();
        match kind {
            NodeKind::Boundary => {}
            NodeKind::HBox => tensors.push(hadamard_tensor(legs)),
            _ => tensors.push(spider_tensor(kind, legs, d.degree(v), n)),
        }
    }

    while tensors.len() > 1 {
        let mut best: Option<(usize, usize, usize, bool)> = None;
        for i in 0..tensors.len() {
            for j in (i + 1)..tensors.len() {
                let shared = tensors[i].legs.iter().filter(|l| tensors[j].legs.contains(l)).count();
                let size = tensors[i].legs.len() + tensors[j].legs.len() - 2 * shared;
                let connected = shared > 0;
                let better = match best {
                    None => true,
                    Some((_, _, bs, bc)) => (connected && !bc) || (connected == bc && size < bs),
                };
                if better {
                    best = Some((i, j, size, connected));
                }
            }
        }
        let (i, j, _, _) = best.unwrap();
        let b = tensors.remove(j);
        let a = tensors.remove(i);
        tensors.push(contract(&a, &b)?);
    }
    let result = tensors.pop().unwrap_or(Tensor { legs: vec![], data: vec![c(1.0)] });

    let (ins, outs) = (d.inputs(), d.outputs());
    let (m, k) = (outs.len(), ins.len());
    if m + k > MAX_LEGS {
        return Err(Error::ResourceLimit(m + k, MAX_LEGS));
    }
    let wires: Vec<usize> = outs.iter().chain(ins).map(|b| boundary_label[b]).collect();
    let width = m + k;
    let mut mat = CMatrix::zeros(1 << m, 1 << k);
    'entries: for idx in 0..(1usize << width) {
        let mut value: BTreeMap<usize, usize> = BTreeMap::new();
        for (pos, &l) in wires.iter().enumerate() {
            let bv = bit(idx, width, pos);
            if *value.entry(l).or_insert(bv) != bv {
                continue 'entries;
            }
        }
        let mut t = 0;
        for &l in &result.legs {
            t = (t << 1) | value[&l];
        }
        mat.set(idx >> k, idx & ((1 << k) - 1), result.data[t]);
    }
    Ok(mat)
}
