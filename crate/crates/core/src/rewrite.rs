//! Rewriting of algebra-side words into normal form.
//!
//! A word in the letters `s_i`, `t_i` is normalized in three steps:
//!
//! 1. Stable insertion sort by index; each transposition of two odd letters
//!    flips the sign.  Stability keeps same-index letters in their original
//!    order, which matters for the non-commutative real relations.
//! 2. Per-index reduction by the variant's relations; in the real-mod2 case
//!    the relation `t s = s t + t` makes this a formal sum.
//! 3. Stanley–Reisner kill last: a term whose polynomial support is a
//!    non-face drops out.
//!
//! The result is a coefficient-tagged formal sum; for every variant except
//! real-mod2 it has at most one term.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::monomial::{Arena, Family, Letter, ModelVariant, Monomial, Side};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::{MultiIndex, VertexSet};
use crate::Int;

/// One reduced state of a single index: `t`-exponent and whether an `s` is
/// present.
type IndexState = (u32, bool);

/// Normal form of a word as a sorted formal sum of monomials.  Works for the
/// product-carrying families (A, B, hatB); the relations are selected by the
/// variant.
pub fn normal_form(
    word: &[Letter],
    sigma: &SimplicialComplex,
    variant: &ModelVariant,
) -> Vec<(Monomial, Int)> {
    assert!(
        variant.family.has_product(),
        "normal form applies to the algebra-side families"
    );
    let m = sigma.m();
    let (sorted, sign) = sort_by_index(word, variant.arena);

    // Split into runs of equal index and reduce each run.
    let mut per_index: Vec<(usize, Vec<IndexState>)> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let idx = sorted[i].index();
        let mut run = Vec::new();
        while i < sorted.len() && sorted[i].index() == idx {
            run.push(sorted[i]);
            i += 1;
        }
        let states = reduce_run(&run, variant);
        if states.is_empty() {
            return Vec::new();
        }
        per_index.push((idx, states));
    }

    // Distribute the per-index sums (a genuine product only in real-mod2).
    let mut terms: Vec<(MultiIndex, VertexSet)> = vec![(MultiIndex::zeros(m), VertexSet::EMPTY)];
    for (idx, states) in &per_index {
        let mut next = Vec::new();
        for (poly, ext) in &terms {
            for (exp, has_s) in states {
                let mut poly = poly.clone();
                poly.set(*idx, *exp);
                let ext = if *has_s { ext.insert(*idx) } else { *ext };
                next.push((poly, ext));
            }
        }
        terms = next;
    }

    // Stanley–Reisner kill, then canonical ordering with merged coefficients.
    let modulus = if variant.arena == Arena::RealMod2 { 2 } else { 0 };
    let mut sum: BTreeMap<Monomial, Int> = BTreeMap::new();
    for (poly, ext) in terms {
        if !sigma.contains(poly.support()) {
            continue;
        }
        let mono = Monomial::new(poly, ext, Side::St);
        let entry = sum.entry(mono).or_insert_with(Int::zero);
        *entry += Int::from(sign);
    }
    sum.into_iter()
        .filter_map(|(mono, mut coeff)| {
            if modulus != 0 {
                coeff = ((coeff % modulus) + modulus) % modulus;
            }
            if coeff.is_zero() {
                None
            } else {
                Some((mono, coeff))
            }
        })
        .collect()
}

/// Product of two basis monomials: concatenate the block words and normalize.
pub fn multiply(
    x: &Monomial,
    y: &Monomial,
    sigma: &SimplicialComplex,
    variant: &ModelVariant,
) -> Vec<(Monomial, Int)> {
    let mut word = x.letters();
    word.extend(y.letters());
    normal_form(&word, sigma, variant)
}

/// Stable insertion sort by letter index; returns the sign from transposing
/// odd-degree letters past each other.
fn sort_by_index(word: &[Letter], arena: Arena) -> (Vec<Letter>, i64) {
    let is_odd = |l: &Letter| match l {
        Letter::T(_) => arena.poly_is_odd(),
        Letter::S(_) => arena.ext_is_odd(),
    };
    let mut letters = word.to_vec();
    let mut sign = 1i64;
    for i in 1..letters.len() {
        let mut j = i;
        while j > 0 && letters[j - 1].index() > letters[j].index() {
            if is_odd(&letters[j - 1]) && is_odd(&letters[j]) {
                sign = -sign;
            }
            letters.swap(j - 1, j);
            j -= 1;
        }
    }
    (letters, sign)
}

/// Reduces a run of same-index letters (in original order) to a formal sum
/// of index states.  Empty result means the run is zero.
fn reduce_run(run: &[Letter], variant: &ModelVariant) -> Vec<IndexState> {
    let t_count = run.iter().filter(|l| matches!(l, Letter::T(_))).count() as u32;
    let s_count = run.len() as u32 - t_count;
    match (variant.family, variant.arena) {
        // B-type bases are squarefree with disjoint parts: any same-index
        // pair of letters multiplies to zero — except in the real arena,
        // where the quotient relations fold instead.
        (Family::B | Family::HatB, Arena::Complex { .. } | Arena::Odd { .. }) => {
            if run.len() >= 2 {
                Vec::new()
            } else {
                vec![(t_count, s_count == 1)]
            }
        }
        (Family::B | Family::HatB, Arena::Real | Arena::RealMod2) => {
            // Fold left-to-right: ss→s, ts→t, st→0, tt→0.
            let mut state = run[0];
            for l in &run[1..] {
                state = match (state, l) {
                    (Letter::S(i), Letter::S(_)) => Letter::S(i),
                    (Letter::T(i), Letter::S(_)) => Letter::T(i),
                    (Letter::S(_), Letter::T(_)) | (Letter::T(_), Letter::T(_)) => {
                        return Vec::new()
                    }
                };
            }
            match state {
                Letter::T(_) => vec![(1, false)],
                Letter::S(_) => vec![(0, true)],
            }
        }
        // Polynomial t-powers with an exterior s: s² = 0, s and t commute.
        (Family::A, Arena::Complex { .. }) => {
            if s_count >= 2 {
                Vec::new()
            } else {
                vec![(t_count, s_count == 1)]
            }
        }
        // Characteristic 2 with s² = s and ts = st + t: rewrite the run as a
        // word over {s,t} by a terminating worklist.
        (Family::A, Arena::RealMod2) => reduce_mod2_run(run),
        (Family::A, Arena::Real | Arena::Odd { .. }) | (Family::K | Family::L, _) => {
            unreachable!("variant without an algebra-side normal form: {variant}")
        }
    }
}

/// Worklist reduction of a one-index word over {s, t} by `ss → s` and
/// `ts → st + t`, with coefficients mod 2.  Normal forms are `s^ε t^k`.
fn reduce_mod2_run(run: &[Letter]) -> Vec<IndexState> {
    let start: Vec<bool> = run.iter().map(|l| matches!(l, Letter::S(_))).collect();
    let mut acc: BTreeMap<Vec<bool>, u8> = BTreeMap::new();
    let mut work = vec![start];
    while let Some(word) = work.pop() {
        // Leftmost adjacent violation of the s^ε t^k shape.
        let violation = word.windows(2).position(|w| w[1]);
        match violation {
            None => {
                let e = acc.entry(word).or_insert(0);
                *e ^= 1;
            }
            Some(p) => {
                if word[p] {
                    // ss → s
                    let mut shorter = word.clone();
                    shorter.remove(p);
                    work.push(shorter);
                } else {
                    // ts → st + t
                    let mut swapped = word.clone();
                    swapped.swap(p, p + 1);
                    work.push(swapped);
                    let mut dropped = word.clone();
                    dropped.remove(p + 1);
                    work.push(dropped);
                }
            }
        }
    }
    acc.into_iter()
        .filter(|(_, c)| *c == 1)
        .map(|(word, _)| {
            let s = word.first().copied().unwrap_or(false);
            let t = word.iter().filter(|x| !**x).count() as u32;
            (t, s)
        })
        .collect()
}
