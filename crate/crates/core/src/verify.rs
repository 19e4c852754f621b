//! Executable verification suites and a seeded random-complex generator.
//!
//! Each suite checks one structural claim end to end: differentials square
//! to zero, products are derivations, the algebra and coalgebra squarefree
//! models are dual to each other, the four families compute the same
//! (co)homology, inclusions of subcomplex pairs give exact Mayer–Vietoris
//! sequences, the bigraded Betti table matches full-subcomplex cohomology,
//! and the polytopal cup products agree with the component-wise ones.
//! [`verify_complex`] runs the whole battery on one simplicial complex and
//! collects per-suite outcomes for reporting.
//!
//! Randomness is always seeded ([`random_complex`], [`random_split`]), so a
//! reported failure can be replayed from its seed.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::homology::{homology, CoefficientRing};
use crate::models::{
    build_model, mv_short_exact_sequences, Arena, DGAModel, Family, ModelVariant, Monomial, Side,
};
use crate::ring::{cohomology_ring, component_classes, star_product};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;
use crate::{hochster, polytope, Int};

/// Result of one verification suite on one complex.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// `"ok"`, or the first failure message.
    pub detail: String,
}

/// Deterministic pseudorandom complex on the ground set `{1..m}`.  Facet
/// candidates are sampled uniformly, so ghost vertices, the void-free empty
/// complex and the full simplex all occur.
pub fn random_complex(seed: u64, m: usize) -> SimplicialComplex {
    assert!(
        (1..=crate::vertex_set::MAX_VERTICES).contains(&m),
        "ground set size out of range"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let facet_count = rng.gen_range(0..=m + 1);
    let mut facets = Vec::new();
    for _ in 0..facet_count {
        let mut f = VertexSet::empty();
        for v in 1..=m {
            if rng.gen_bool(0.5) {
                f = f.insert(v);
            }
        }
        facets.push(f);
    }
    SimplicialComplex::from_facets(m, &facets).expect("sampled vertices are in range")
}

/// Split the facets of `sigma` between two subcomplexes whose union is
/// `sigma` again; facets may be shared, so the intersection is usually
/// nontrivial.
pub fn random_split(
    seed: u64,
    sigma: &SimplicialComplex,
) -> (SimplicialComplex, SimplicialComplex) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut first = Vec::new();
    let mut second = Vec::new();
    for f in sigma.facets() {
        match rng.gen_range(0..3u8) {
            0 => first.push(f),
            1 => second.push(f),
            _ => {
                first.push(f);
                second.push(f);
            }
        }
    }
    let m = sigma.m();
    (
        SimplicialComplex::from_facets(m, &first).expect("facets are faces"),
        SimplicialComplex::from_facets(m, &second).expect("facets are faces"),
    )
}

fn random_subset(rng: &mut ChaCha8Rng, ground: VertexSet) -> VertexSet {
    let mut out = VertexSet::empty();
    for v in ground.iter() {
        if rng.gen_bool(0.5) {
            out = out.insert(v);
        }
    }
    out
}

/// Truncation degree used for the infinite families: generous enough to
/// cover the finite models on small ground sets without exploding the basis.
fn truncation_degree(sigma: &SimplicialComplex) -> i64 {
    (2 * sigma.m() as i64 + 1).min(7)
}

fn corpus_arenas() -> [Arena; 3] {
    [Arena::Complex { n: 2 }, Arena::Real, Arena::Odd { n: 3 }]
}

fn to_algebra_side(mono: &Monomial) -> Monomial {
    Monomial::new(mono.poly.clone(), mono.ext, Side::St)
}

/// Build every legal variant (with a truncation for the infinite families);
/// `d∘d = 0` is asserted during construction, modulo 2 for the mod-2 arena.
pub fn d_squared_suite(sigma: &SimplicialComplex) -> Result<()> {
    let d = truncation_degree(sigma);
    for arena in corpus_arenas() {
        build_model(sigma, ModelVariant::new(Family::B, arena))?;
        build_model(sigma, ModelVariant::new(Family::L, arena))?;
        build_model(sigma, ModelVariant::new(Family::HatB, arena))?;
    }
    build_model(sigma, ModelVariant::new(Family::B, Arena::RealMod2))?;
    build_model(sigma, ModelVariant::truncated(Family::A, Arena::Complex { n: 2 }, d))?;
    build_model(sigma, ModelVariant::truncated(Family::A, Arena::RealMod2, d))?;
    build_model(sigma, ModelVariant::truncated(Family::K, Arena::Complex { n: 2 }, d))?;
    Ok(())
}

/// The differential is a derivation for every product-carrying variant and a
/// coderivation for every coproduct-carrying one, on all basis pairs.
pub fn leibniz_suite(sigma: &SimplicialComplex) -> Result<()> {
    let d = truncation_degree(sigma);
    for arena in corpus_arenas() {
        build_model(sigma, ModelVariant::new(Family::B, arena))?.check_leibniz()?;
        build_model(sigma, ModelVariant::new(Family::HatB, arena))?.check_leibniz()?;
        build_model(sigma, ModelVariant::new(Family::L, arena))?.check_co_leibniz()?;
    }
    build_model(sigma, ModelVariant::new(Family::B, Arena::RealMod2))?.check_leibniz()?;
    build_model(sigma, ModelVariant::truncated(Family::A, Arena::Complex { n: 2 }, d))?
        .check_leibniz()?;
    build_model(sigma, ModelVariant::truncated(Family::A, Arena::RealMod2, d))?.check_leibniz()?;
    build_model(sigma, ModelVariant::truncated(Family::K, Arena::Complex { n: 2 }, d))?
        .check_co_leibniz()?;
    Ok(())
}

fn check_differential_duality(b: &DGAModel, l: &DGAModel, arena: Arena) -> Result<()> {
    let dual = l.complex().dualize();
    let a = arena.algebra_d_sign();
    for k in b.complex().degrees() {
        let cols = b.complex().labels(k);
        let l_cols = l.complex().labels(k);
        if cols.len() != l_cols.len()
            || cols
                .iter()
                .zip(l_cols)
                .any(|(x, y)| x.poly != y.poly || x.ext != y.ext)
        {
            return Err(Error::Verification(format!(
                "the squarefree algebra and coalgebra bases disagree in degree {k} ({arena})"
            )));
        }
        // The coalgebra differential carries no arena sign and the chosen
        // dualization convention contributes −(−1)^k, so the transposed
        // matrix matches the algebra differential up to a·(−1)^{k+1}.
        let factor = Int::from(if (k + 1).rem_euclid(2) == 0 { a } else { -a });
        let db = b.complex().diff(k);
        let dd = dual.diff(k);
        if db.rows() != dd.rows() || db.cols() != dd.cols() {
            return Err(Error::Verification(format!(
                "differential shapes disagree in degree {k} ({arena})"
            )));
        }
        for r in 0..db.rows() {
            for c in 0..db.cols() {
                if db[(r, c)] != &factor * &dd[(r, c)] {
                    return Err(Error::Verification(format!(
                        "transposing the coalgebra differential does not give the algebra one \
                         at degree {k}, entry ({r}, {c}), arena {arena}"
                    )));
                }
            }
        }
    }
    Ok(())
}

fn check_table_duality(b: &DGAModel, l: &DGAModel, arena: Arena) -> Result<()> {
    let degrees = b.complex().degrees();
    let mut products: BTreeMap<(Monomial, Monomial, Monomial), Int> = BTreeMap::new();
    for &p in &degrees {
        for &q in &degrees {
            for x in b.complex().labels(p) {
                for y in b.complex().labels(q) {
                    for (z, c) in b.multiply(x, y)? {
                        if !c.is_zero() {
                            products.insert((x.clone(), y.clone(), z), c);
                        }
                    }
                }
            }
        }
    }
    let mut coproducts: BTreeMap<(Monomial, Monomial, Monomial), Int> = BTreeMap::new();
    for &k in &degrees {
        for zl in l.complex().labels(k) {
            let z = to_algebra_side(zl);
            for (xl, yl, c) in l.coproduct(zl)? {
                if c.is_zero() {
                    continue;
                }
                coproducts.insert((to_algebra_side(&xl), to_algebra_side(&yl), z.clone()), c);
            }
        }
    }
    let keys: BTreeSet<_> = products.keys().chain(coproducts.keys()).cloned().collect();
    for key in keys {
        let lhs = products.get(&key).cloned().unwrap_or_else(Int::zero);
        let rhs = coproducts.get(&key).cloned().unwrap_or_else(Int::zero);
        if lhs != rhs {
            return Err(Error::Verification(format!(
                "product and dualized coproduct structure constants disagree on \
                 {} · {} → {} (arena {arena}): {lhs} vs {rhs}",
                key.0, key.1, key.2
            )));
        }
    }
    Ok(())
}

/// The squarefree algebra and coalgebra models are dual: the transposed
/// coalgebra differential equals the algebra differential up to the
/// per-degree sign `a·(−1)^{k+1}`, and the product structure constants
/// equal the coproduct structure constants verbatim — the inversion count
/// behind the multiplication sign is the same one behind the coproduct's
/// Koszul sign.
pub fn duality_suite(sigma: &SimplicialComplex) -> Result<()> {
    for arena in corpus_arenas() {
        let b = build_model(sigma, ModelVariant::new(Family::B, arena))?;
        let l = build_model(sigma, ModelVariant::new(Family::L, arena))?;
        check_differential_duality(&b, &l, arena)?;
        check_table_duality(&b, &l, arena)?;
    }
    Ok(())
}

/// Seeded facet splits give short exact sequences of coalgebra models; both
/// maps commute with the differentials and the sequence is exact in every
/// degree.
pub fn mayer_vietoris_suite(sigma: &SimplicialComplex, seed: u64) -> Result<()> {
    let d = truncation_degree(sigma);
    for round in 0..3u64 {
        let (s1, s2) = random_split(seed.wrapping_add(round), sigma);
        if s1.union(&s2)? != *sigma {
            return Err(Error::Verification(
                "facet split does not cover the complex".to_string(),
            ));
        }
        mv_short_exact_sequences(&s1, &s2, ModelVariant::new(Family::L, Arena::Complex { n: 2 }))?
            .check()?;
        mv_short_exact_sequences(&s1, &s2, ModelVariant::new(Family::L, Arena::Real))?.check()?;
        mv_short_exact_sequences(
            &s1,
            &s2,
            ModelVariant::truncated(Family::K, Arena::Complex { n: 2 }, d),
        )?
        .check()?;
    }
    Ok(())
}

fn compare_shapes(
    left_name: &str,
    left: &DGAModel,
    right_name: &str,
    right: &DGAModel,
    coeffs: CoefficientRing,
    hi: i64,
) -> Result<()> {
    for k in 0..=hi {
        let a = homology(left.complex(), k, coeffs)?.shape();
        let b = homology(right.complex(), k, coeffs)?.shape();
        if a != b {
            return Err(Error::Verification(format!(
                "{left_name} and {right_name} disagree in degree {k} with {coeffs:?} \
                 coefficients: {a:?} vs {b:?}"
            )));
        }
    }
    Ok(())
}

/// Compare a cochain model against a chain model: equal ranks per degree
/// over any coefficients, and over the integers the torsion of degree-`k`
/// homology reappears in degree-`k+1` cohomology.
fn compare_across_sides(
    cochain: &DGAModel,
    chain: &DGAModel,
    coeffs: CoefficientRing,
    hi: i64,
) -> Result<()> {
    for k in 0..=hi {
        let hb = homology(cochain.complex(), k, coeffs)?;
        let hl = homology(chain.complex(), k, coeffs)?;
        if hb.free_rank != hl.free_rank {
            return Err(Error::Verification(format!(
                "cohomology and homology ranks disagree in degree {k} with {coeffs:?} \
                 coefficients: {} vs {}",
                hb.free_rank, hl.free_rank
            )));
        }
        if coeffs == CoefficientRing::Z && k < hi {
            let above = homology(cochain.complex(), k + 1, coeffs)?;
            if above.torsion != hl.torsion {
                return Err(Error::Verification(format!(
                    "integral torsion of degree-{k} homology does not reappear in \
                     degree-{} cohomology: {:?} vs {:?}",
                    k + 1,
                    hl.torsion,
                    above.torsion
                )));
            }
        }
    }
    Ok(())
}

/// All four families compute the same (co)homology through the trusted
/// range, over `ℤ`, `ℤ/2` and `ℤ/3`: the truncated algebra model matches
/// the finite quotient, the truncated coalgebra model matches the finite
/// sub-coalgebra, and the two sides agree rank-wise with the universal
/// torsion shift over the integers.
pub fn quasi_iso_suite(sigma: &SimplicialComplex) -> Result<()> {
    let dtr = truncation_degree(sigma);
    let coeff_list = [
        CoefficientRing::Z,
        CoefficientRing::Zp(2),
        CoefficientRing::Zp(3),
    ];
    let even = Arena::Complex { n: 2 };
    let a = build_model(sigma, ModelVariant::truncated(Family::A, even, dtr))?;
    let b = build_model(sigma, ModelVariant::new(Family::B, even))?;
    let kk = build_model(sigma, ModelVariant::truncated(Family::K, even, dtr))?;
    let l = build_model(sigma, ModelVariant::new(Family::L, even))?;
    let b_top = b.complex().degrees().last().copied().unwrap_or(0);
    for coeffs in coeff_list {
        compare_shapes("the truncated algebra model", &a, "its finite quotient", &b, coeffs, dtr)?;
        compare_shapes(
            "the truncated coalgebra model",
            &kk,
            "its finite sub-coalgebra",
            &l,
            coeffs,
            dtr,
        )?;
        compare_across_sides(&b, &l, coeffs, b_top)?;
    }
    for arena in [Arena::Real, Arena::Odd { n: 3 }] {
        let bb = build_model(sigma, ModelVariant::new(Family::B, arena))?;
        let ll = build_model(sigma, ModelVariant::new(Family::L, arena))?;
        let top = bb.complex().degrees().last().copied().unwrap_or(0);
        for coeffs in coeff_list {
            compare_across_sides(&bb, &ll, coeffs, top)?;
        }
    }
    let am = build_model(sigma, ModelVariant::truncated(Family::A, Arena::RealMod2, dtr))?;
    let bm = build_model(sigma, ModelVariant::new(Family::B, Arena::RealMod2))?;
    compare_shapes(
        "the truncated mod-2 algebra model",
        &am,
        "its finite quotient",
        &bm,
        CoefficientRing::Zp(2),
        dtr,
    )?;
    Ok(())
}

/// The bigraded Betti table computed from the model components equals the
/// one computed from full-subcomplex cohomology, for every arena.
pub fn hochster_suite(sigma: &SimplicialComplex) -> Result<()> {
    let topological = hochster::hochster_table_topological(sigma)?;
    for arena in [
        Arena::Complex { n: 2 },
        Arena::Real,
        Arena::Odd { n: 3 },
        Arena::RealMod2,
    ] {
        let model = hochster::hochster_table_model(sigma, arena)?;
        if model != topological {
            return Err(Error::Verification(format!(
                "bigraded table from the {arena} model differs from the topological one"
            )));
        }
    }
    Ok(())
}

/// In the even arena, products of basis monomials with overlapping supports
/// vanish identically, and so do `⋆`-products of component classes with
/// overlapping supports.
pub fn overlap_suite(sigma: &SimplicialComplex, seed: u64) -> Result<()> {
    let arena = Arena::Complex { n: 2 };
    let b = build_model(sigma, ModelVariant::new(Family::B, arena))?;
    let degrees = b.complex().degrees();
    for &p in &degrees {
        for &q in &degrees {
            for x in b.complex().labels(p) {
                for y in b.complex().labels(q) {
                    if x.support().intersection(y.support()).is_empty() {
                        continue;
                    }
                    if b.multiply(x, y)?.iter().any(|(_, c)| !c.is_zero()) {
                        return Err(Error::Verification(format!(
                            "the overlapping product {x} · {y} does not vanish"
                        )));
                    }
                }
            }
        }
    }
    let m = sigma.m();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ground = VertexSet::full(m);
    for _ in 0..5 {
        let shared = rng.gen_range(1..=m);
        let alpha = random_subset(&mut rng, ground).insert(shared);
        let beta = random_subset(&mut rng, ground).insert(shared);
        let left = component_classes(sigma, alpha, arena, CoefficientRing::Q)?;
        let right = component_classes(sigma, beta, arena, CoefficientRing::Q)?;
        for x in left.iter().take(2) {
            for y in right.iter().take(2) {
                let prod = star_product(sigma, alpha, beta, x, y, arena, CoefficientRing::Q)?;
                if !prod.is_zero() {
                    return Err(Error::Verification(format!(
                        "a component product for overlapping supports {alpha} and {beta} \
                         is nonzero"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Cohomology rings are graded commutative (even where the cochain level is
/// not) and associative, in every arena.
pub fn commutativity_suite(sigma: &SimplicialComplex) -> Result<()> {
    for (arena, coeffs) in [
        (Arena::Complex { n: 2 }, CoefficientRing::Z),
        (Arena::Real, CoefficientRing::Z),
        (Arena::Odd { n: 3 }, CoefficientRing::Q),
        (Arena::RealMod2, CoefficientRing::Zp(2)),
    ] {
        let model = build_model(sigma, ModelVariant::new(Family::B, arena))?;
        let maxdeg = model.complex().degrees().last().copied().unwrap_or(0);
        let ring = cohomology_ring(&model, maxdeg, coeffs)?;
        let report = ring.commutativity_report();
        if !report.is_empty() {
            return Err(Error::Verification(format!(
                "graded commutativity fails for {} generator pair(s) in the {arena} ring",
                report.len()
            )));
        }
        ring.check_associativity()?;
    }
    Ok(())
}

/// Over `ℤ/2` every 0/1 combination of degree-zero generators of a
/// ghost-vertex complex is idempotent; the count is asserted exactly.
pub fn idempotency_suite(m: usize) -> Result<()> {
    let m = m.clamp(1, 3);
    let ghosts = SimplicialComplex::from_facets(m, &[])?;
    let model = build_model(&ghosts, ModelVariant::new(Family::B, Arena::Real))?;
    let ring = cohomology_ring(&model, 0, CoefficientRing::Zp(2))?;
    let gens = ring.generator_count();
    if gens != 1 << m {
        return Err(Error::Verification(format!(
            "expected {} degree-zero generators on {m} ghost vertices, found {gens}",
            1 << m
        )));
    }
    let count = ring.count_idempotent_combinations()?;
    if count != 1 << gens {
        return Err(Error::Verification(format!(
            "expected all {} combinations to be idempotent over ℤ/2, found {count}",
            1 << gens
        )));
    }
    Ok(())
}

/// Polytopal comparison: the retraction-induced maps on relative cochains
/// are quasi-isomorphisms (certified through the mapping cone), and the
/// relative cup product commutes with the product assembled one level up,
/// on a seeded sample of support pairs including a complementary one.
pub fn polytope_suite(sigma: &SimplicialComplex, seed: u64) -> Result<()> {
    let ground = VertexSet::full(sigma.m());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut alphas = vec![VertexSet::empty(), ground];
    for _ in 0..4 {
        alphas.push(random_subset(&mut rng, ground));
    }
    alphas.sort();
    alphas.dedup();
    for &alpha in &alphas {
        let report = polytope::theta_check(sigma, alpha)?;
        if !report.quasi_iso {
            return Err(Error::Verification(format!(
                "the retraction comparison map for support {alpha} is not a quasi-isomorphism"
            )));
        }
        for (k, s, t) in &report.shapes {
            if s != t {
                return Err(Error::Verification(format!(
                    "relative cohomology shapes for support {alpha} differ in degree {k}: \
                     {s:?} vs {t:?}"
                )));
            }
        }
    }
    let half = random_subset(&mut rng, ground);
    let mut pairs = vec![(half, ground.difference(half))];
    for _ in 0..2 {
        pairs.push((
            random_subset(&mut rng, ground),
            random_subset(&mut rng, ground),
        ));
    }
    for (alpha, beta) in pairs {
        let report = polytope::cup_diagram_check(sigma, alpha, beta)?;
        if !report.mismatches.is_empty() {
            return Err(Error::Verification(format!(
                "the cup-product diagram for supports {alpha} and {beta} fails on {} of {} \
                 class pairs",
                report.mismatches.len(),
                report.pairs_checked
            )));
        }
    }
    Ok(())
}

/// Run every suite on one complex.  `seed` drives the sampled parts (facet
/// splits, support pairs); the outcome list reports the first failure of
/// each suite.
pub fn verify_complex(sigma: &SimplicialComplex, seed: u64) -> Vec<SuiteOutcome> {
    let run = |name: &'static str, result: Result<()>| match result {
        Ok(()) => SuiteOutcome {
            name,
            passed: true,
            detail: "ok".to_string(),
        },
        Err(e) => SuiteOutcome {
            name,
            passed: false,
            detail: e.to_string(),
        },
    };
    vec![
        run("d-squared", d_squared_suite(sigma)),
        run("leibniz", leibniz_suite(sigma)),
        run("duality", duality_suite(sigma)),
        run("mayer-vietoris", mayer_vietoris_suite(sigma, seed)),
        run("quasi-isomorphisms", quasi_iso_suite(sigma)),
        run("hochster", hochster_suite(sigma)),
        run("overlap-vanishing", overlap_suite(sigma, seed)),
        run("graded-commutativity", commutativity_suite(sigma)),
        run("idempotency", idempotency_suite(sigma.m())),
        run("polytope-diagrams", polytope_suite(sigma, seed)),
    ]
}
