//! Relative cochain rings of the barycentric polytope model.
//!
//! A simplicial complex `Σ` on `[m]` is read as the boundary sphere of the
//! dual simplicial polytope, so the simple polytope itself is modeled by
//! the cone `P = CΣ′` over the barycentric subdivision, with each facet
//! `F_i` appearing as the block of flags whose minimal face contains `i`.
//! `P_α` is the union of the facets indexed by `α`.  Everything here runs
//! for arbitrary input complexes; polytopality is the caller's assertion
//! and is not checked.
//!
//! The module computes `H^*(P, P_α)` with the Alexander–Whitney cup
//! product ([`relative_ring_P`]), the chain-level retraction
//! `v_σ ↦ v_{σ∩α}` onto the cone over `Σ_α′` together with a
//! mapping-cone certificate that it induces isomorphisms with torsion
//! ([`theta_check`]), the commuting-square comparison between the relative
//! cup product and the component product upstairs ([`cup_diagram_check`]),
//! and the direct-sum presentation `⊕_α H^*(P, P_α)` with its cup products
//! ([`glm_ring`]), which additively matches the real moment-angle ring.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::based::BasedComplex;
use crate::chains::{cup, pullback_matrices, relative_cochain_complex_ordered, VertexOrder};
use crate::error::{Error, Result};
use crate::homology::{
    decompose_integral, homology_all, CoefficientRing, DegreeDecomposition, GroupShape,
};
use crate::ring::{RingGenerator, RingPresentation};
use crate::scalar::Scalar;
use crate::simplicial::{SimplicialComplex, SimplicialPair, SubdividedComplex};
use crate::vertex_set::VertexSet;
use crate::{Int, IntMat, Rat};

/// The subcomplex of a cone consisting of the faces avoiding the apex.
fn base_subcomplex(cone: &SubdividedComplex) -> SimplicialComplex {
    let apex = cone.apex().expect("cone has an apex");
    let faces: Vec<VertexSet> = cone
        .complex()
        .faces()
        .filter(|f| !f.contains(apex))
        .collect();
    SimplicialComplex::from_facets(cone.complex().m(), &faces)
        .expect("base faces are valid")
}

/// Vertex map of the straight-line retraction `CΣ′ → CΣ_α′`:
/// `v_σ ↦ v_{σ∩α}`, with the apex absorbing every vertex whose face
/// misses `α`.
fn retraction_vertices(
    src: &SubdividedComplex,
    dst: &SubdividedComplex,
    alpha: VertexSet,
) -> Vec<usize> {
    let m_src = src.complex().m();
    let apex_src = src.apex().expect("source is a cone");
    let apex_dst = dst.apex().expect("target is a cone");
    (1..=m_src)
        .map(|v| {
            if v == apex_src {
                return apex_dst;
            }
            let face = src.label(v).expect("non-apex vertex carries a label");
            let cut = face.intersection(alpha);
            if cut.is_empty() {
                apex_dst
            } else {
                dst.vertex_of(cut)
                    .expect("intersection with α is a face of the full subcomplex")
            }
        })
        .collect()
}

/// The chain-level strong deformation retraction `(CΣ′, P_α) → (CΣ_α′, Σ_α′)`
/// together with its pullback matrices on relative cochains.
///
/// `matrices[k]` sends a relative cochain of the target pair (the cone over
/// the subdivided full subcomplex, rel its base) to a relative cochain of
/// `(P, P_α)`; construction fails if the matrices do not commute with the
/// differentials.
#[derive(Debug, Clone)]
pub struct RetractionMap {
    pub alpha: VertexSet,
    pub source: SimplicialPair,
    pub target: SimplicialPair,
    /// `vertex_map[v−1]` is the image of source vertex `v`.
    pub vertex_map: Vec<usize>,
    pub source_cochains: BasedComplex<VertexSet>,
    pub target_cochains: BasedComplex<VertexSet>,
    pub matrices: BTreeMap<i64, IntMat>,
}

/// Build the retraction for one support, in the natural vertex orders.
pub fn retraction(sigma: &SimplicialComplex, alpha: VertexSet) -> Result<RetractionMap> {
    let source = sigma.dual_blocks_pair(alpha)?;
    let src_cone = sigma.cone_over_subdivision();
    let dst_cone = sigma.full_subcomplex(alpha).cone_over_subdivision();
    let target = SimplicialPair::new(dst_cone.complex().clone(), base_subcomplex(&dst_cone))?;

    let vertex_map = retraction_vertices(&src_cone, &dst_cone, alpha);
    let src_order = VertexOrder::natural(source.ambient.m());
    let dst_order = VertexOrder::natural(target.ambient.m());
    let source_cochains = relative_cochain_complex_ordered(&source, &src_order);
    let target_cochains = relative_cochain_complex_ordered(&target, &dst_order);
    let matrices = pullback_matrices(
        &|v| vertex_map[v - 1],
        &source_cochains,
        &src_order,
        &target_cochains,
        &dst_order,
    )?;
    Ok(RetractionMap {
        alpha,
        source,
        target,
        vertex_map,
        source_cochains,
        target_cochains,
        matrices,
    })
}

/// Mapping cone of a cochain map `f: D → C` given by matrices whose rows
/// index `C` and columns index `D`.  The cone is acyclic exactly when `f`
/// is a quasi-isomorphism, torsion included.
fn mapping_cone(
    f: &BTreeMap<i64, IntMat>,
    d_cx: &BasedComplex<VertexSet>,
    c_cx: &BasedComplex<VertexSet>,
) -> Result<BasedComplex<String>> {
    let mut degrees: BTreeSet<i64> = c_cx.degrees().into_iter().collect();
    degrees.extend(d_cx.degrees().into_iter().map(|k| k - 1));
    let (Some(&lo), Some(&hi)) = (degrees.first(), degrees.last()) else {
        return BasedComplex::builder(1).build();
    };
    let f_at = |k: i64| {
        f.get(&k)
            .cloned()
            .unwrap_or_else(|| IntMat::zero(c_cx.rank(k), d_cx.rank(k)))
    };
    let mut builder = BasedComplex::builder(1);
    for k in lo..=hi {
        let mut labels: Vec<String> = d_cx
            .labels(k + 1)
            .iter()
            .map(|l| format!("w:{l}"))
            .collect();
        labels.extend(c_cx.labels(k).iter().map(|l| format!("z:{l}")));
        let d_cols = d_cx.rank(k + 1);
        let d_rows = d_cx.rank(k + 2);
        let mut entries: Vec<(usize, usize, Int)> = Vec::new();
        for (r, c, v) in d_cx.diff(k + 1).entries() {
            if !v.is_zero() {
                entries.push((r, c, -v.clone()));
            }
        }
        for (r, c, v) in f_at(k + 1).entries() {
            if !v.is_zero() {
                entries.push((d_rows + r, c, v.clone()));
            }
        }
        for (r, c, v) in c_cx.diff(k).entries() {
            if !v.is_zero() {
                entries.push((d_rows + r, d_cols + c, v.clone()));
            }
        }
        builder = builder.basis(k, labels).diff_entries(k, entries);
    }
    builder.build()
}

/// Outcome of comparing `H^*(P, P_α)` with the cohomology of the retracted
/// pair, degree by degree.
#[derive(Debug, Clone)]
pub struct ThetaReport {
    pub alpha: VertexSet,
    /// `(degree, shape of H(P, P_α), shape of H(CΣ_α′, Σ_α′))`.
    pub shapes: Vec<(i64, GroupShape, GroupShape)>,
    /// Whether the retraction induces isomorphisms in all degrees
    /// (certified by an acyclic mapping cone, so torsion is covered).
    pub quasi_iso: bool,
}

/// Verify that the retraction pullback is an isomorphism on relative
/// cohomology in every degree, ranks and torsion alike.
pub fn theta_check(sigma: &SimplicialComplex, alpha: VertexSet) -> Result<ThetaReport> {
    let r = retraction(sigma, alpha)?;
    let mut degrees: BTreeSet<i64> = r.source_cochains.degrees().into_iter().collect();
    degrees.extend(r.target_cochains.degrees());
    let mut shapes = Vec::new();
    for &k in &degrees {
        let s = decompose_integral(&r.source_cochains, k)?.to_group().shape();
        let t = decompose_integral(&r.target_cochains, k)?.to_group().shape();
        shapes.push((k, s, t));
    }
    let cone = mapping_cone(&r.matrices, &r.target_cochains, &r.source_cochains)?;
    let quasi_iso = homology_all(&cone, CoefficientRing::Z)?
        .iter()
        .all(|g| g.is_zero());
    Ok(ThetaReport {
        alpha: r.alpha,
        shapes,
        quasi_iso,
    })
}

/// One summand of a cup-product ring: a relative cochain complex tagged by
/// its support.
struct CupPiece {
    tag: VertexSet,
    cochains: BasedComplex<VertexSet>,
}

/// Assemble a ring presentation from relative cochain complexes over one
/// ambient complex: generators from each piece's cohomology, products by
/// the Alexander–Whitney cup landing in the piece of the union support.
fn cup_ring(
    order: &VertexOrder,
    pieces: &[CupPiece],
    piece_of: &dyn Fn(VertexSet) -> Option<usize>,
    maxdeg: i64,
) -> Result<RingPresentation> {
    let mut decomps: BTreeMap<(usize, i64), DegreeDecomposition<Int>> = BTreeMap::new();
    for (pi, piece) in pieces.iter().enumerate() {
        for k in 0..=maxdeg {
            decomps.insert((pi, k), decompose_integral(&piece.cochains, k)?);
        }
    }

    let mut generators: Vec<RingGenerator> = Vec::new();
    let mut reps: Vec<(usize, i64, Vec<Int>)> = Vec::new();
    let mut block_start: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    for k in 0..=maxdeg {
        for (pi, piece) in pieces.iter().enumerate() {
            let decomp = &decomps[&(pi, k)];
            let group = decomp.to_group();
            block_start.insert((pi, k), generators.len());
            let labels = piece.cochains.labels(k);
            for (idx, rep) in decomp.representatives().into_iter().enumerate() {
                let order_int = if idx < group.free_rank {
                    Int::zero()
                } else {
                    group.torsion[idx - group.free_rank].clone()
                };
                let lead = rep
                    .iter()
                    .position(|v| !v.is_zero())
                    .expect("representative is nonzero");
                generators.push(RingGenerator {
                    name: format!("{}:{}", piece.tag, labels[lead]),
                    degree: k,
                    order: order_int,
                    representative: rep.iter().map(|v| v.to_rational()).collect(),
                });
                reps.push((pi, k, rep));
            }
        }
    }
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for g in &mut generators {
        let n = seen.entry(g.name.clone()).or_insert(0);
        *n += 1;
        if *n > 1 {
            g.name = format!("{}#{n}", g.name);
        }
    }

    let mut products = BTreeMap::new();
    for (i, (pa, p, ra)) in reps.iter().enumerate() {
        for (j, (pb, q, rb)) in reps.iter().enumerate() {
            let target_deg = p + q;
            if target_deg > maxdeg {
                continue;
            }
            let union = pieces[*pa].tag.union(pieces[*pb].tag);
            let pt = piece_of(union).ok_or_else(|| {
                Error::Verification(format!("no summand for the union support {union}"))
            })?;
            let value = cup(
                order,
                &pieces[*pa].cochains,
                *p,
                ra,
                &pieces[*pb].cochains,
                *q,
                rb,
                &pieces[pt].cochains,
            );
            let coords = decomps[&(pt, target_deg)].reduce(&value)?;
            let offset = block_start[&(pt, target_deg)];
            let sparse: Vec<(usize, Rat)> = coords
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(t, v)| (offset + t, v.to_rational()))
                .collect();
            if !sparse.is_empty() {
                products.insert((i, j), sparse);
            }
        }
    }

    Ok(RingPresentation {
        coefficients: CoefficientRing::Z,
        maxdeg,
        generators,
        products,
    })
}

/// The relative cochain ring `H^*(P, P_α)` with Alexander–Whitney products,
/// in the natural vertex order of the subdivision.
#[allow(non_snake_case)]
pub fn relative_ring_P(
    sigma: &SimplicialComplex,
    alpha: VertexSet,
    maxdeg: i64,
) -> Result<RingPresentation> {
    let pair = sigma.dual_blocks_pair(alpha)?;
    let order = VertexOrder::natural(pair.ambient.m());
    let cochains = relative_cochain_complex_ordered(&pair, &order);
    cup_ring(
        &order,
        &[CupPiece {
            tag: alpha,
            cochains,
        }],
        &|_| Some(0),
        maxdeg,
    )
}

/// The direct-sum ring `⊕_{α⊆[m]} H^*(P, P_α)`: one summand per support,
/// products `H^*(P,P_α) ⊗ H^*(P,P_β) → H^*(P,P_{α∪β})` by the relative cup
/// in the shared ambient cone.  Additively this is the cohomology of the
/// real moment-angle complex; no degree shifts occur.
pub fn glm_ring(sigma: &SimplicialComplex, maxdeg: i64) -> Result<RingPresentation> {
    let cone = sigma.cone_over_subdivision();
    let order = VertexOrder::natural(cone.complex().m());
    let mut tags: Vec<VertexSet> = VertexSet::full(sigma.m()).subsets().collect();
    tags.sort_by(|a, b| a.cmp_dim_lex(b));
    let mut pieces = Vec::new();
    let mut index: BTreeMap<VertexSet, usize> = BTreeMap::new();
    for (i, &alpha) in tags.iter().enumerate() {
        let sub = cone.dual_block_subcomplex(alpha);
        let pair = SimplicialPair::new(cone.complex().clone(), sub)?;
        pieces.push(CupPiece {
            tag: alpha,
            cochains: relative_cochain_complex_ordered(&pair, &order),
        });
        index.insert(alpha, i);
    }
    cup_ring(&order, &pieces, &|u| index.get(&u).copied(), maxdeg)
}

/// Outcome of the commuting-square comparison for one pair of supports:
/// pulling classes down and cupping in `P` versus cupping upstairs in the
/// cone over `Σ_{α∪β}′` and pulling the result down.
#[derive(Debug, Clone)]
pub struct CupDiagramReport {
    pub alpha: VertexSet,
    pub beta: VertexSet,
    /// Number of basis-class pairs compared (all degrees).
    pub pairs_checked: usize,
    /// `(deg a, index a, deg b, index b)` of any pair where the two paths
    /// disagree in `H^*(P, P_{α∪β})`.
    pub mismatches: Vec<(i64, usize, i64, usize)>,
}

/// Vertex order on the cone over `Σ_{α∪β}′` required by the comparison:
/// vertices whose face meets `α` first (in subdivision order), then the
/// apex, then the `β`-only vertices.  Such an order always exists; faces
/// meeting both `α` and `β` count as `α`-side.
fn diagram_order(cone: &SubdividedComplex, alpha: VertexSet) -> VertexOrder {
    let m = cone.complex().m();
    let apex = cone.apex().expect("cone has an apex");
    let mut seq = Vec::with_capacity(m);
    for v in 1..=m {
        if v == apex {
            continue;
        }
        if !cone.label(v).unwrap().intersection(alpha).is_empty() {
            seq.push(v);
        }
    }
    seq.push(apex);
    for v in 1..=m {
        if v != apex && cone.label(v).unwrap().intersection(alpha).is_empty() {
            seq.push(v);
        }
    }
    VertexOrder::from_sequence(&seq)
}

/// Check that the relative cup product in `P` agrees with the product
/// computed upstairs over the union support, on every pair of cohomology
/// basis classes of the retracted pairs.
pub fn cup_diagram_check(
    sigma: &SimplicialComplex,
    alpha: VertexSet,
    beta: VertexSet,
) -> Result<CupDiagramReport> {
    let gamma = alpha.union(beta);

    // Downstairs: the ambient cone over Σ′ in the natural order, with the
    // three relative complexes rel P_α, P_β, P_γ.
    let x = sigma.cone_over_subdivision();
    let nat_x = VertexOrder::natural(x.complex().m());
    let rel = |support: VertexSet| -> Result<BasedComplex<VertexSet>> {
        let pair = SimplicialPair::new(x.complex().clone(), x.dual_block_subcomplex(support))?;
        Ok(relative_cochain_complex_ordered(&pair, &nat_x))
    };
    sigma.dual_blocks_pair(alpha)?;
    sigma.dual_blocks_pair(beta)?;
    let rel_a = rel(alpha)?;
    let rel_b = rel(beta)?;
    let rel_g = rel(gamma)?;

    // Upstairs: the cone over Σ_γ′ in the α-side < apex < β-side order.
    // Its dual blocks for α and β give the two factors; the pair rel the
    // whole base receives their product.
    let xt = sigma.full_subcomplex(gamma).cone_over_subdivision();
    let up_order = diagram_order(&xt, alpha);
    let up = |support: VertexSet| -> Result<BasedComplex<VertexSet>> {
        let sub = if support == gamma {
            base_subcomplex(&xt)
        } else {
            xt.dual_block_subcomplex(support)
        };
        let pair = SimplicialPair::new(xt.complex().clone(), sub)?;
        Ok(relative_cochain_complex_ordered(&pair, &up_order))
    };
    let up_a = up(alpha)?;
    let up_b = up(beta)?;
    let up_g = up(gamma)?;

    // Class pairs: (CΣ_α′, Σ_α′) and its β counterpart, natural orders.
    let class_side = |support: VertexSet| -> Result<(BasedComplex<VertexSet>, SubdividedComplex)> {
        let cone = sigma.full_subcomplex(support).cone_over_subdivision();
        let pair = SimplicialPair::new(cone.complex().clone(), base_subcomplex(&cone))?;
        let order = VertexOrder::natural(cone.complex().m());
        Ok((relative_cochain_complex_ordered(&pair, &order), cone))
    };
    let (cls_a, cone_a) = class_side(alpha)?;
    let (cls_b, cone_b) = class_side(beta)?;

    let pull = |src_cx: &BasedComplex<VertexSet>,
                src_order: &VertexOrder,
                src_cone: &SubdividedComplex,
                dst_cx: &BasedComplex<VertexSet>,
                dst_cone: &SubdividedComplex,
                support: VertexSet|
     -> Result<BTreeMap<i64, IntMat>> {
        let map = retraction_vertices(src_cone, dst_cone, support);
        pullback_matrices(
            &|v| map[v - 1],
            src_cx,
            src_order,
            dst_cx,
            &VertexOrder::natural(dst_cone.complex().m()),
        )
    };
    // Pull classes straight down to P, and into the upstairs cone.
    let down_a = pull(&rel_a, &nat_x, &x, &cls_a, &cone_a, alpha)?;
    let down_b = pull(&rel_b, &nat_x, &x, &cls_b, &cone_b, beta)?;
    let up_pull_a = pull(&up_a, &up_order, &xt, &cls_a, &cone_a, alpha)?;
    let up_pull_b = pull(&up_b, &up_order, &xt, &cls_b, &cone_b, beta)?;
    // Pull the upstairs product down along the γ-retraction.
    let down_g = {
        let map = retraction_vertices(&x, &xt, gamma);
        pullback_matrices(&|v| map[v - 1], &rel_g, &nat_x, &up_g, &up_order)?
    };

    let mut pairs_checked = 0;
    let mut mismatches = Vec::new();
    for p in cls_a.degrees() {
        let da = decompose_integral(&cls_a, p)?;
        if da.generator_count() == 0 {
            continue;
        }
        for q in cls_b.degrees() {
            let db = decompose_integral(&cls_b, q)?;
            if db.generator_count() == 0 {
                continue;
            }
            let target = decompose_integral(&rel_g, p + q)?;
            for (ia, a_rep) in da.representatives().iter().enumerate() {
                let av = down_a[&p].mul_vec(a_rep);
                let at = up_pull_a[&p].mul_vec(a_rep);
                for (ib, b_rep) in db.representatives().iter().enumerate() {
                    let bv = down_b[&q].mul_vec(b_rep);
                    let bt = up_pull_b[&q].mul_vec(b_rep);
                    let path1 = cup(&nat_x, &rel_a, p, &av, &rel_b, q, &bv, &rel_g);
                    let upstairs = cup(&up_order, &up_a, p, &at, &up_b, q, &bt, &up_g);
                    let path2 = match down_g.get(&(p + q)) {
                        Some(m) => m.mul_vec(&upstairs),
                        None => vec![Int::zero(); rel_g.rank(p + q)],
                    };
                    pairs_checked += 1;
                    if target.reduce(&path1)? != target.reduce(&path2)? {
                        mismatches.push((p, ia, q, ib));
                    }
                }
            }
        }
    }
    Ok(CupDiagramReport {
        alpha,
        beta,
        pairs_checked,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{build_model, Arena, Family, ModelVariant};
    use crate::ring::cohomology_ring;
    use num_traits::One;

    fn two_points() -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(2, &[&[1], &[2]]).unwrap()
    }

    fn square() -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap()
    }

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(
            5,
            &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]],
        )
        .unwrap()
    }

    #[test]
    fn segment_relative_rings() {
        let sigma = two_points();
        let full = relative_ring_P(&sigma, VertexSet::full(2), 2).unwrap();
        let degrees: Vec<i64> = full.generators.iter().map(|g| g.degree).collect();
        assert_eq!(degrees, vec![1]);
        assert!(full.generators[0].order.is_zero());

        let point = relative_ring_P(&sigma, VertexSet::singleton(1), 2).unwrap();
        assert!(point.generators.is_empty());

        let empty = relative_ring_P(&sigma, VertexSet::empty(), 2).unwrap();
        let degrees: Vec<i64> = empty.generators.iter().map(|g| g.degree).collect();
        assert_eq!(degrees, vec![0]);
    }

    #[test]
    fn square_relative_ring_has_the_fundamental_class() {
        let ring = relative_ring_P(&square(), VertexSet::full(4), 3).unwrap();
        let degrees: Vec<i64> = ring.generators.iter().map(|g| g.degree).collect();
        assert_eq!(degrees, vec![2]);
        assert!(ring.generators[0].order.is_zero());
    }

    #[test]
    fn retraction_commutes_and_theta_is_iso() {
        let sigma = two_points();
        let report = theta_check(&sigma, VertexSet::full(2)).unwrap();
        assert!(report.quasi_iso);
        for (k, s, t) in &report.shapes {
            assert_eq!(s, t, "degree {k}");
            if *k == 1 {
                assert_eq!(s, &(1, vec![]));
            }
        }

        let report = theta_check(&sigma, VertexSet::empty()).unwrap();
        assert!(report.quasi_iso);
        let deg0: Vec<_> = report.shapes.iter().filter(|(k, _, _)| *k == 0).collect();
        assert_eq!(deg0[0].1, (1, vec![]));
        assert_eq!(deg0[0].2, (1, vec![]));

        let triangle = SimplicialComplex::simplex_boundary(3);
        for alpha in VertexSet::full(3).subsets() {
            let report = theta_check(&triangle, alpha).unwrap();
            assert!(report.quasi_iso, "support {alpha}");
            for (k, s, t) in &report.shapes {
                assert_eq!(s, t, "support {alpha} degree {k}");
            }
        }
    }

    #[test]
    fn cup_diagram_commutes_on_cycles() {
        // Square with complementary pairs of opposite vertices: one honest
        // product pair, landing on the relative fundamental class.
        let report = cup_diagram_check(
            &square(),
            VertexSet::from_slice(&[1, 3]),
            VertexSet::from_slice(&[2, 4]),
        )
        .unwrap();
        assert_eq!(report.pairs_checked, 1);
        assert!(report.mismatches.is_empty());

        // Pentagon: two disconnected full subcomplexes multiply into the
        // top class as well.
        let report = cup_diagram_check(
            &pentagon(),
            VertexSet::from_slice(&[1, 3]),
            VertexSet::from_slice(&[2, 4, 5]),
        )
        .unwrap();
        assert_eq!(report.pairs_checked, 1);
        assert!(report.mismatches.is_empty());

        // Overlapping supports reduce to multiplicativity on one component.
        let report = cup_diagram_check(&two_points(), VertexSet::full(2), VertexSet::full(2))
            .unwrap();
        assert_eq!(report.pairs_checked, 1);
        assert!(report.mismatches.is_empty());

        // Acyclic factors: nothing to check, and nothing fails.
        let report = cup_diagram_check(
            &two_points(),
            VertexSet::singleton(1),
            VertexSet::singleton(2),
        )
        .unwrap();
        assert_eq!(report.pairs_checked, 0);
        assert!(report.mismatches.is_empty());
    }

    #[test]
    fn glm_rings_of_small_polytopes() {
        // Segment: the boundary of the square is a circle.
        let ring = glm_ring(&two_points(), 2).unwrap();
        let ranks: Vec<usize> = (0..=1)
            .map(|k| ring.group_in_degree(k).free_rank)
            .collect();
        assert_eq!(ranks, vec![1, 1]);
        assert!(ring.commutativity_report().is_empty());
        ring.check_associativity().unwrap();

        // Square: the torus, with its product structure.
        let ring = glm_ring(&square(), 2).unwrap();
        let ranks: Vec<usize> = (0..=2)
            .map(|k| ring.group_in_degree(k).free_rank)
            .collect();
        assert_eq!(ranks, vec![1, 2, 1]);
        let deg1 = ring.generator_indices_in_degree(1);
        let deg2 = ring.generator_indices_in_degree(2);
        let (x, y) = (deg1[0], deg1[1]);
        assert!(ring.product(x, x).is_empty());
        assert!(ring.product(y, y).is_empty());
        let xy = ring.product(x, y);
        assert_eq!(xy.len(), 1);
        assert_eq!(xy[0].0, deg2[0]);
        assert_eq!(&xy[0].1 * &xy[0].1, Rat::one());
        assert!(ring.commutativity_report().is_empty());
        ring.check_associativity().unwrap();
    }

    #[test]
    fn glm_matches_the_real_model_additively() {
        let corpus: Vec<(SimplicialComplex, i64)> = vec![
            (two_points(), 2),
            (SimplicialComplex::simplex_boundary(3), 3),
            (square(), 3),
            (pentagon(), 3),
            (SimplicialComplex::simplex_boundary(4), 4),
        ];
        for (sigma, maxdeg) in corpus {
            let glm = glm_ring(&sigma, maxdeg).unwrap();
            let model = build_model(&sigma, ModelVariant::new(Family::B, Arena::Real)).unwrap();
            let ring = cohomology_ring(&model, maxdeg, CoefficientRing::Z).unwrap();
            for k in 0..=maxdeg {
                assert_eq!(
                    glm.group_in_degree(k).shape(),
                    ring.group_in_degree(k).shape(),
                    "degree {k}"
                );
            }
        }
    }

    #[test]
    fn pentagon_glm_is_a_genus_five_surface() {
        let ring = glm_ring(&pentagon(), 2).unwrap();
        let ranks: Vec<usize> = (0..=2)
            .map(|k| ring.group_in_degree(k).free_rank)
            .collect();
        assert_eq!(ranks, vec![1, 10, 1]);
        // Some pair of degree-1 classes hits the fundamental class.
        let deg1 = ring.generator_indices_in_degree(1);
        let has_top_product = deg1
            .iter()
            .any(|&i| deg1.iter().any(|&j| !ring.product(i, j).is_empty()));
        assert!(has_top_product);
        assert!(ring.commutativity_report().is_empty());
    }
}
