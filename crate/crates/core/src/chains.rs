//! Ordered simplicial (co)chains.
//!
//! Cochains live on *ordered* simplices: a total order on the vertices is
//! fixed, every face is read off in that order, and cup products use the
//! front/back face split in the same order.  Cochain complexes are produced
//! by dualizing the chain complex, so they carry the sign convention
//! `(dγ)(x) = −(−1)^{deg γ} γ(∂x)`; the matching cup product acquires a
//! global `(−1)^{pq}` so that the Leibniz rule holds (checked in the tests).

use std::collections::BTreeMap;

use crate::based::BasedComplex;
use crate::error::{Error, Result};
use crate::homology::{homology_all, CoefficientRing, CohomologyGroup};
use crate::scalar::Scalar;
use crate::simplicial::{SimplicialComplex, SimplicialPair};
use crate::vertex_set::VertexSet;
use crate::{Int, IntMat};

/// Total order on the vertices `1..=m` orienting all simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    /// `positions[v−1]` is the rank of vertex `v`.
    positions: Vec<usize>,
}

impl VertexOrder {
    /// The natural order `1 < 2 < … < m`.
    pub fn natural(m: usize) -> Self {
        VertexOrder {
            positions: (0..m).collect(),
        }
    }

    /// Order given by listing the vertices `1..=m` from smallest to largest.
    pub fn from_sequence(seq: &[usize]) -> Self {
        let m = seq.len();
        let mut positions = vec![usize::MAX; m];
        for (rank, &v) in seq.iter().enumerate() {
            assert!(v >= 1 && v <= m, "vertex {v} outside 1..={m}");
            assert!(positions[v - 1] == usize::MAX, "vertex {v} listed twice");
            positions[v - 1] = rank;
        }
        VertexOrder { positions }
    }

    pub fn m(&self) -> usize {
        self.positions.len()
    }

    pub fn position(&self, v: usize) -> usize {
        self.positions[v - 1]
    }

    /// The face's vertices listed in this order.
    pub fn sorted(&self, face: VertexSet) -> Vec<usize> {
        let mut vs = face.to_vec();
        vs.sort_by_key(|v| self.position(*v));
        vs
    }

    /// Sign of the permutation sorting `list` by this order, or `None` when
    /// a vertex repeats (a degenerate simplex).
    pub fn sort_sign(&self, list: &[usize]) -> Option<i64> {
        let mut sign = 1i64;
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                let (a, b) = (self.position(list[i]), self.position(list[j]));
                if a == b {
                    return None;
                }
                if a > b {
                    sign = -sign;
                }
            }
        }
        Some(sign)
    }
}

/// Simplicial chain complex of `Σ` (direction −1), oriented by `order`.
/// With `reduced`, the empty face spans degree −1 and every vertex maps to it
/// under the augmentation.
pub fn chain_complex(
    sigma: &SimplicialComplex,
    order: &VertexOrder,
    reduced: bool,
) -> BasedComplex<VertexSet> {
    let keep = |f: &VertexSet| reduced || !f.is_empty();
    bounded_chain_complex(sigma.m(), order, &sigma.faces().filter(keep).collect())
}

/// Chain complex spanned by an explicit downward-closed-after-quotient set of
/// faces: boundary terms falling outside `faces` are dropped.  This covers
/// both absolute complexes and quotients by a subcomplex.
fn bounded_chain_complex(
    m: usize,
    order: &VertexOrder,
    faces: &std::collections::BTreeSet<VertexSet>,
) -> BasedComplex<VertexSet> {
    assert_eq!(order.m(), m, "vertex order size must match the ground set");
    let mut by_degree: BTreeMap<i64, Vec<VertexSet>> = BTreeMap::new();
    for &f in faces {
        by_degree.entry(f.len() as i64 - 1).or_default().push(f);
    }
    let index: BTreeMap<VertexSet, usize> = by_degree
        .values()
        .flat_map(|v| v.iter().enumerate().map(|(i, f)| (*f, i)))
        .collect();

    let (lo, hi) = match (by_degree.keys().next(), by_degree.keys().last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => {
            return BasedComplex::builder(-1).build().expect("empty complex");
        }
    };
    let mut builder = BasedComplex::builder(-1);
    for k in lo..=hi {
        let basis = by_degree.get(&k).cloned().unwrap_or_default();
        let mut entries = Vec::new();
        for (col, &f) in basis.iter().enumerate() {
            let vs = order.sorted(f);
            for (j, &v) in vs.iter().enumerate() {
                let sub = f.remove(v);
                if !faces.contains(&sub) {
                    continue;
                }
                let sign = if j % 2 == 0 { 1 } else { -1 };
                entries.push((index[&sub], col, Int::from(sign)));
            }
        }
        builder = builder.basis(k, basis).diff_entries(k, entries);
    }
    builder.build().expect("simplicial boundary squares to zero")
}

/// Cochain complex of `Σ` on the given order (dual-sign convention).
pub fn cochain_complex(
    sigma: &SimplicialComplex,
    order: &VertexOrder,
    reduced: bool,
) -> BasedComplex<VertexSet> {
    chain_complex(sigma, order, reduced).dualize()
}

/// Reduced simplicial cohomology of `Σ` (degrees −1 through dim Σ).  For the
/// empty complex this reports H̃^{−1} = ℤ, the augmentation convention.
pub fn reduced_cohomology(
    sigma: &SimplicialComplex,
    coeffs: CoefficientRing,
) -> Result<Vec<CohomologyGroup>> {
    let order = VertexOrder::natural(sigma.m());
    homology_all(&cochain_complex(sigma, &order, true), coeffs)
}

/// Cochain complex of the pair `(ambient, sub)` in a custom vertex order:
/// ordered cochains on the ambient complex vanishing on the subcomplex.
pub fn relative_cochain_complex_ordered(
    pair: &SimplicialPair,
    order: &VertexOrder,
) -> BasedComplex<VertexSet> {
    let faces: std::collections::BTreeSet<VertexSet> = pair
        .ambient
        .faces()
        .filter(|f| !pair.sub.contains(*f))
        .collect();
    bounded_chain_complex(pair.ambient.m(), order, &faces).dualize()
}

/// Cochain complex of the pair in the natural vertex order.
pub fn relative_cochain_complex(pair: &SimplicialPair) -> BasedComplex<VertexSet> {
    relative_cochain_complex_ordered(pair, &VertexOrder::natural(pair.ambient.m()))
}

/// Cohomology of the pair `(ambient, sub)` in all degrees.
pub fn relative_cohomology(
    pair: &SimplicialPair,
    coeffs: CoefficientRing,
) -> Result<Vec<CohomologyGroup>> {
    homology_all(&relative_cochain_complex(pair), coeffs)
}

/// Cup product of ordered cochains under the dual-sign differential:
///
/// ```text
///   (a ∪ b)(σ) = (−1)^{pq} · a(front) · b(back)
/// ```
///
/// where the vertices of `σ` are listed in `order`, `front` keeps the first
/// `p+1` of them and `back` the last `q+1` (sharing the middle vertex).  The
/// three complexes may differ (e.g. relative complexes for different
/// subcomplexes of one ambient complex); front/back faces absent from the
/// respective basis contribute 0, which is exactly extension by zero.
#[allow(clippy::too_many_arguments)]
pub fn cup<T: Scalar>(
    order: &VertexOrder,
    a_cx: &BasedComplex<VertexSet>,
    p: i64,
    a: &[T],
    b_cx: &BasedComplex<VertexSet>,
    q: i64,
    b: &[T],
    target: &BasedComplex<VertexSet>,
) -> Vec<T> {
    assert!(p >= 0 && q >= 0, "cup degrees must be non-negative");
    assert_eq!(a.len(), a_cx.rank(p), "left factor has wrong length");
    assert_eq!(b.len(), b_cx.rank(q), "right factor has wrong length");
    let (p, q) = (p as usize, q as usize);
    let negate = (p * q) % 2 == 1;
    let mut out = Vec::with_capacity(target.rank((p + q) as i64));
    for sigma in target.labels((p + q) as i64) {
        let vs = order.sorted(*sigma);
        debug_assert_eq!(vs.len(), p + q + 1);
        let front = VertexSet::from_slice(&vs[..=p]);
        let back = VertexSet::from_slice(&vs[p..]);
        let av = a_cx.index_of(p as i64, &front).map(|i| a[i].clone());
        let bv = b_cx.index_of(q as i64, &back).map(|i| b[i].clone());
        let val = match (av, bv) {
            (Some(x), Some(y)) => {
                let prod = x * y;
                if negate {
                    -prod
                } else {
                    prod
                }
            }
            _ => T::zero(),
        };
        out.push(val);
    }
    out
}

/// Matrices of the cochain pullback along a vertex map `g` from the source
/// space into the target space: `(g^♯ γ)(σ) = γ(g(σ))`, where `g(σ)` is
/// re-sorted by the target order with the permutation sign and degenerate
/// images vanish.  Rows are indexed by the source basis, columns by the
/// target basis; faces missing from the target basis (e.g. killed by
/// relativization) contribute 0.  The result is checked to commute with the
/// differentials.
pub fn pullback_matrices(
    g: &dyn Fn(usize) -> usize,
    src_cx: &BasedComplex<VertexSet>,
    src_order: &VertexOrder,
    dst_cx: &BasedComplex<VertexSet>,
    dst_order: &VertexOrder,
) -> Result<BTreeMap<i64, IntMat>> {
    let mut degrees: Vec<i64> = src_cx.degrees();
    degrees.extend(dst_cx.degrees());
    degrees.sort_unstable();
    degrees.dedup();

    let mut out = BTreeMap::new();
    for &k in &degrees {
        let mut entries = Vec::new();
        for (row, sigma) in src_cx.labels(k).iter().enumerate() {
            let image: Vec<usize> = src_order.sorted(*sigma).iter().map(|&v| g(v)).collect();
            let Some(sign) = dst_order.sort_sign(&image) else {
                continue;
            };
            let tau = VertexSet::from_slice(&image);
            if let Some(col) = dst_cx.index_of(k, &tau) {
                entries.push((row, col, Int::from(sign)));
            }
        }
        out.insert(
            k,
            IntMat::from_triplets(src_cx.rank(k), dst_cx.rank(k), &entries),
        );
    }

    for &k in &degrees {
        let mk = &out[&k];
        let next = out
            .get(&(k + 1))
            .cloned()
            .unwrap_or_else(|| IntMat::zero(src_cx.rank(k + 1), dst_cx.rank(k + 1)));
        let lhs = src_cx.diff(k).mul(mk);
        let rhs = next.mul(&dst_cx.diff(k));
        if lhs != rhs {
            return Err(Error::Verification(format!(
                "pullback along vertex map fails to commute with the differential at degree {k}"
            )));
        }
    }
    Ok(out)
}
