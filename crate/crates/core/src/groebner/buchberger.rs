use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Ring};

/// Reduced Gröbner basis in the ring's (weighted) graded reverse lexicographic order.
///
/// Generators are sorted by ascending leading monomial; since reduced bases are
/// unique, two bases of the same ideal compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().map(|g| g.leading().expect("basis elements are non-zero"))
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(Polynomial::is_one)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        p.check_same_ring(&Polynomial::zero(&self.ring))?;
        let reducers = Reducers::new(self.generators.iter().collect());
        Ok(reducers.reduce(p, true))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

/// Leading data cached per reducer: monomial and variable support.
struct Reducers<'a> {
    polys: Vec<&'a Polynomial>,
    leads: Vec<(Monomial, u32)>,
}

impl<'a> Reducers<'a> {
    fn new(polys: Vec<&'a Polynomial>) -> Self {
        let leads = polys
            .iter()
            .map(|p| {
                let m = *p.leading().expect("non-zero reducer");
                (m, m.support())
            })
            .collect();
        Reducers { polys, leads }
    }

    fn find_divisor(&self, t: &Monomial) -> Option<usize> {
        let s = t.support();
        self.leads
            .iter()
            .position(|(m, sup)| sup & !s == 0 && m.divides(t))
    }

    /// Reduces `p`; with `full` the tail is reduced too, otherwise only the head.
    fn reduce(&self, p: &Polynomial, full: bool) -> Polynomial {
        let ring = p.ring().clone();
        // ascending order so the largest term pops off the end
        let mut rest: Vec<Monomial> = p.terms().iter().rev().copied().collect();
        let mut done: Vec<Monomial> = Vec::new();
        while let Some(&t) = rest.last() {
            match self.find_divisor(&t) {
                Some(k) => {
                    let q = self.leads[k].0.quotient_of(&t);
                    let shifted: Vec<Monomial> = self.polys[k].terms().iter().rev().map(|m| m.mul(&q)).collect();
                    rest = merge_xor_ascending(&rest, &shifted);
                }
                None => {
                    done.push(t);
                    rest.pop();
                    if !full {
                        done.extend(rest.iter().rev());
                        break;
                    }
                }
            }
        }
        Polynomial::from_monomials(&ring, done)
    }
}

fn merge_xor_ascending(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct Pair {
    sugar: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.sugar, self.lcm, self.i, self.j).cmp(&(other.sugar, other.lcm, other.i, other.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Engine {
    ring: Arc<Ring>,
    polys: Vec<Polynomial>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn lead(&self, i: usize) -> Monomial {
        *self.polys[i].leading().expect("stored polynomials are non-zero")
    }

    fn reduce_against_active(&self, p: &Polynomial) -> Polynomial {
        let reducers = Reducers::new(
            self.polys.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p).collect(),
        );
        reducers.reduce(p, true)
    }

    /// Gebauer–Möller update after adding polynomial `h`.
    fn update(&mut self, h: usize) {
        let weights = self.ring.weights().to_vec();
        let lh = self.lead(h);
        let candidates: Vec<usize> = (0..h).filter(|&g| self.active[g]).collect();
        let lcm_with = |g: usize, this: &Engine| lh.lcm(&this.lead(g), &weights);

        // chain criterion among the new pairs
        let mut kept: Vec<usize> = Vec::new();
        for (pos, &g1) in candidates.iter().enumerate() {
            let l1 = lcm_with(g1, self);
            if lh.is_coprime(&self.lead(g1)) {
                kept.push(g1);
                continue;
            }
            let dominated_later = candidates[pos + 1..].iter().any(|&g2| lcm_with(g2, self).divides(&l1));
            let dominated_kept = kept.iter().any(|&g2| lcm_with(g2, self).divides(&l1));
            if !dominated_later && !dominated_kept {
                kept.push(g1);
            }
        }
        // among equal lcms keep one; drop coprime pairs (product criterion)
        let mut new_pairs: Vec<Pair> = Vec::new();
        for &g in &kept {
            let l = lcm_with(g, self);
            if lh.is_coprime(&self.lead(g)) {
                continue;
            }
            if new_pairs.iter().any(|p| p.lcm == l) {
                continue;
            }
            let sugar = (self.sugar[h] + l.degree() - lh.degree())
                .max(self.sugar[g] + l.degree() - self.lead(g).degree());
            new_pairs.push(Pair { sugar, lcm: l, i: g, j: h });
        }
        // old pairs made redundant by h
        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let li = lh.lcm(&self.lead(p.i), &weights);
            let lj = lh.lcm(&self.lead(p.j), &weights);
            let redundant = lh.divides(&p.lcm) && li != p.lcm && lj != p.lcm;
            if !redundant {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(new_pairs);
        for g in candidates {
            if lh.divides(&self.lead(g)) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn add(&mut self, p: Polynomial, sugar: u32) {
        let h = self.polys.len();
        self.polys.push(p);
        self.sugar.push(sugar);
        self.active.push(false);
        self.update(h);
    }

    fn s_polynomial(&self, pair: &Pair) -> Polynomial {
        let fi = &self.polys[pair.i];
        let fj = &self.polys[pair.j];
        let qi = self.lead(pair.i).quotient_of(&pair.lcm);
        let qj = self.lead(pair.j).quotient_of(&pair.lcm);
        fi.mul_monomial(&qi).add(&fj.mul_monomial(&qj))
    }
}

fn sugar_of(p: &Polynomial) -> u32 {
    p.terms().iter().map(Monomial::degree).max().unwrap_or(0)
}

pub fn groebner_basis(generators: &[Polynomial]) -> Result<GroebnerBasis> {
    let first = generators.first().ok_or(Error::WrongCount { expected: 1, found: 0 })?;
    for g in generators {
        g.check_same_ring(first)?;
    }
    let ring = first.ring().clone();
    let mut engine = Engine { ring: ring.clone(), polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    // seed with the input in increasing leading-monomial order so the result does not
    // depend on the order given
    let mut input: Vec<Polynomial> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by(|a, b| a.leading().cmp(&b.leading()).then_with(|| a.terms().cmp(b.terms())));
    input.dedup();
    for g in input {
        let r = engine.reduce_against_active(&g);
        if !r.is_zero() {
            let s = sugar_of(&g);
            engine.add(r, s);
        }
    }

    let mut queue: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();
    loop {
        queue.extend(engine.pairs.drain(..).map(Reverse));
        let Some(Reverse(pair)) = queue.pop() else { break };
        // pairs may have been invalidated by later Gebauer–Möller updates; the heap
        // holds them anyway, which only costs an extra reduction to zero
        let s = engine.s_polynomial(&pair);
        let r = engine.reduce_against_active(&s);
        if !r.is_zero() {
            let sugar = pair.sugar.max(sugar_of(&r));
            // pairs still queued go back to the engine so the update can prune them
            engine.pairs.extend(queue.drain().map(|Reverse(p)| p));
            engine.add(r, sugar);
        }
    }

    Ok(interreduce(&ring, engine.polys.into_iter().zip(engine.active).filter(|(_, a)| *a).map(|(p, _)| p).collect()))
}

/// Minimal and then reduced basis from a Gröbner basis.
fn interreduce(ring: &Arc<Ring>, mut basis: Vec<Polynomial>) -> GroebnerBasis {
    basis.sort_by(|a, b| a.leading().cmp(&b.leading()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in basis {
        let lp = *p.leading().expect("non-zero");
        if minimal.iter().any(|q| q.leading().expect("non-zero").divides(&lp)) {
            continue;
        }
        minimal.push(p);
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&Polynomial> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
        let p = &minimal[i];
        let head = Polynomial::monomial(ring, *p.leading().expect("non-zero"));
        let tail = p.add(&head);
        let tail = if others.is_empty() { tail } else { Reducers::new(others).reduce(&tail, true) };
        reduced.push(head.add(&tail));
    }
    reduced.sort_by(|a, b| a.leading().cmp(&b.leading()));
    GroebnerBasis { ring: ring.clone(), generators: reduced }
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(p)
}

/// Every variable has a pure power among the leading monomials.
pub fn is_zero_dimensional(gb: &GroebnerBasis) -> bool {
    let n = gb.ring.arity();
    let mut covered = 0u32;
    for m in gb.leading_monomials() {
        if let Some(i) = m.pure_power_var() {
            covered |= 1 << i;
        }
    }
    covered.count_ones() as usize == n
}

/// Krull dimension of `S/I` from the leading ideal: the size of a largest variable set
/// carrying no leading monomial. `None` for the unit ideal.
pub fn krull_dimension(gb: &GroebnerBasis) -> Option<usize> {
    if gb.is_unit_ideal() {
        return None;
    }
    let n = gb.ring.arity();
    let supports: Vec<u32> = gb.leading_monomials().map(Monomial::support).collect();
    let mut best = 0;
    for set in 0u32..(1 << n) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    Some(best)
}

/// S-polynomial of two polynomials with respect to their leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let weights = f.ring().weights();
    let lf = *f.leading().expect("non-zero");
    let lg = *g.leading().expect("non-zero");
    let l = lf.lcm(&lg, weights);
    f.mul_monomial(&lf.quotient_of(&l)).add(&g.mul_monomial(&lg.quotient_of(&l)))
}
