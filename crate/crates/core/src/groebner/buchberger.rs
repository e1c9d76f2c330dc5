use std::collections::BTreeSet;

use super::dense::{exps_coprime, exps_divides, exps_lcm, reduce, DPoly, Layout};
use crate::error::{Error, Result};
use crate::poly::Domain;

struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<u32>,
    key: Vec<i64>,
}

/// Reduced, monic Gröbner basis of `gens`, sorted ascending by leading key.
///
/// Pair selection uses the normal strategy (smallest lcm first). Pairs are
/// skipped by the coprime-leading-monomial criterion and Buchberger's chain
/// criterion. `budget` caps the number of S-polynomial reductions.
pub(crate) fn groebner(layout: &Layout, d: Domain, gens: Vec<DPoly>, budget: usize) -> Result<Vec<DPoly>> {
    let mut basis: Vec<DPoly> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let r = reduce(layout, d, &g, &basis);
        if !r.is_zero() {
            basis.push(r.monic(d));
        }
    }
    if basis.iter().any(|g| g.lead().unwrap().exps.iter().all(|&e| e == 0)) {
        return Ok(vec![basis
            .into_iter()
            .find(|g| g.lead().unwrap().exps.iter().all(|&e| e == 0))
            .unwrap()
            .monic(d)]);
    }

    let mut pending: Vec<Pair> = Vec::new();
    let mut live: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(layout, &basis, &mut pending, &mut live, i, j);
        }
    }

    let mut reductions = 0usize;
    while !pending.is_empty() {
        let best = (0..pending.len())
            .min_by(|&a, &b| {
                pending[a]
                    .key
                    .cmp(&pending[b].key)
                    .then((pending[a].i, pending[a].j).cmp(&(pending[b].i, pending[b].j)))
            })
            .unwrap();
        let pair = pending.swap_remove(best);
        live.remove(&(pair.i, pair.j));

        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let (li, lj) = (fi.lead().unwrap(), fj.lead().unwrap());
        if exps_coprime(&li.exps, &lj.exps) {
            continue;
        }
        if chain_skips(&basis, &live, &pair) {
            continue;
        }

        reductions += 1;
        if reductions > budget {
            return Err(Error::BudgetExceeded { limit: budget });
        }
        let s = spoly(layout, d, fi, fj, &pair.lcm);
        let r = reduce(layout, d, &s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic(d);
        if r.lead().unwrap().exps.iter().all(|&e| e == 0) {
            return Ok(vec![r]);
        }
        basis.push(r);
        let n = basis.len() - 1;
        for i in 0..n {
            push_pair(layout, &basis, &mut pending, &mut live, i, n);
        }
    }
    Ok(interreduce(layout, d, basis))
}

fn push_pair(
    layout: &Layout,
    basis: &[DPoly],
    pending: &mut Vec<Pair>,
    live: &mut BTreeSet<(usize, usize)>,
    i: usize,
    j: usize,
) {
    let lcm = exps_lcm(&basis[i].lead().unwrap().exps, &basis[j].lead().unwrap().exps);
    let key = layout.order.dense_key(&layout.vars, &lcm);
    pending.push(Pair { i, j, lcm, key });
    live.insert((i, j));
}

fn chain_skips(basis: &[DPoly], live: &BTreeSet<(usize, usize)>, p: &Pair) -> bool {
    let ord = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    (0..basis.len()).any(|k| {
        k != p.i
            && k != p.j
            && exps_divides(&basis[k].lead().unwrap().exps, &p.lcm)
            && !live.contains(&ord(p.i, k))
            && !live.contains(&ord(p.j, k))
    })
}

fn spoly(layout: &Layout, d: Domain, f: &DPoly, g: &DPoly, lcm: &[u32]) -> DPoly {
    let shift = |p: &DPoly| -> (Vec<u32>, Vec<i64>) {
        let e: Vec<u32> = lcm.iter().zip(&p.lead().unwrap().exps).map(|(a, b)| a - b).collect();
        let k = layout.order.dense_key(&layout.vars, &e);
        (e, k)
    };
    let (ef, kf) = shift(f);
    let (eg, kg) = shift(g);
    // both inputs are monic
    let zero = DPoly::default();
    let a = zero.sub_scaled(d, &d.neg(&d.one()), &ef, &kf, f);
    a.sub_scaled(d, &d.one(), &eg, &kg, g)
}

fn interreduce(layout: &Layout, d: Domain, basis: Vec<DPoly>) -> Vec<DPoly> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<DPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lg = &g.lead().unwrap().exps;
        let redundant = basis.iter().enumerate().any(|(o, h)| {
            let lh = &h.lead().unwrap().exps;
            o != idx && exps_divides(lh, lg) && (lh != lg || o < idx)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<DPoly> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut g = keep[i].clone();
        let head = g.terms.pop().unwrap();
        let mut tail = reduce(layout, d, &g, &others);
        tail.terms.push(head);
        out.push(tail.monic(d));
    }
    out.sort_by(|a, b| a.lead().unwrap().key.cmp(&b.lead().unwrap().key));
    out
}
