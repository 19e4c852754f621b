//! The frozen acceptance gate. Each criterion prints a single pass/fail line
//! (visible with `--nocapture`); the test fails if any criterion does.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use macx_core::hochster::{assemble_poincare, hochster_table_model, hochster_table_topological};
use macx_core::homology::{homology, CoefficientRing, CohomologyGroup};
use macx_core::models::{
    build_model, mv_short_exact_sequences, Arena, Family, ModelVariant, Monomial, Side,
};
use macx_core::polytope::{cup_diagram_check, glm_ring};
use macx_core::ring::{cohomology_ring, RingPresentation};
use macx_core::simplicial::SimplicialComplex;
use macx_core::verify::{random_complex, random_split};
use macx_core::vertex_set::VertexSet;
use macx_core::{Int, Rat};

type Check = std::result::Result<(), String>;

fn fail(msg: impl Into<String>) -> Check {
    Err(msg.into())
}

/// Total cohomology of the moment-angle complex over `sigma`, densely from
/// degree 0 to the top of the assembled range.
fn total_groups(sigma: &SimplicialComplex, arena: Arena) -> Result<Vec<CohomologyGroup>, String> {
    let table = hochster_table_model(sigma, arena).map_err(|e| e.to_string())?;
    assemble_poincare(sigma, arena, &table).map_err(|e| e.to_string())
}

/// Asserts the groups are those of a `d`-sphere: ℤ in degrees 0 and `d`.
fn expect_sphere(groups: &[CohomologyGroup], d: i64, what: &str) -> Check {
    for g in groups {
        let expected: (usize, Vec<Int>) = if g.degree == 0 || g.degree == d {
            (1, vec![])
        } else {
            (0, vec![])
        };
        if g.shape() != expected {
            return fail(format!(
                "{what}: degree {} has shape {:?}, expected {:?} for an S^{d}",
                g.degree,
                g.shape(),
                expected
            ));
        }
    }
    if !groups.iter().any(|g| g.degree == d) {
        return fail(format!("{what}: assembled range misses degree {d}"));
    }
    Ok(())
}

fn binomial(m: usize, k: usize) -> usize {
    if k > m {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (m - i) / (i + 1))
}

/// Multiplies a generator combination by one more generator, using the
/// stored structure constants of the presentation.
fn multiply_combination(
    ring: &RingPresentation,
    combo: &BTreeMap<usize, Rat>,
    gen: usize,
) -> BTreeMap<usize, Rat> {
    let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
    for (&i, c) in combo {
        if let Some(terms) = ring.products.get(&(i, gen)) {
            for (t, coeff) in terms {
                let entry = out.entry(*t).or_insert_with(Rat::zero);
                *entry += c * coeff;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// 1. Complex moment-angle complexes over simplex boundaries are odd spheres.
fn criterion_1() -> Check {
    for m in [2usize, 3, 4] {
        let sigma = SimplicialComplex::simplex_boundary(m);
        let groups = total_groups(&sigma, Arena::Complex { n: 2 })?;
        expect_sphere(&groups, 2 * m as i64 - 1, &format!("complex arena, m={m}"))?;
    }
    Ok(())
}

/// 2. Real moment-angle complexes over simplex boundaries are spheres one
///    dimension below the number of vertices.
fn criterion_2() -> Check {
    for m in [2usize, 3, 4] {
        let sigma = SimplicialComplex::simplex_boundary(m);
        let groups = total_groups(&sigma, Arena::Real)?;
        expect_sphere(&groups, m as i64 - 1, &format!("real arena, m={m}"))?;
    }
    Ok(())
}

/// 3. Generalized disk pairs over two points give S^{2n−1}.
fn criterion_3() -> Check {
    let sigma = SimplicialComplex::simplex_boundary(2);
    for n in [3i64, 4] {
        let arena = Arena::disk(n).map_err(|e| e.to_string())?;
        let groups = total_groups(&sigma, arena)?;
        expect_sphere(&groups, 2 * n - 1, &format!("disk:{n}"))?;
    }
    Ok(())
}

/// 4. Ghost-vertex complexes give tori: exterior-algebra ranks and top-class
///    products in the complex arena; rank 2^m in degree 0 with exhaustive
///    idempotency over ℤ₂ in the real arena.
fn criterion_4() -> Check {
    for m in 1usize..=4 {
        let sigma = SimplicialComplex::empty_complex(m);

        let groups = total_groups(&sigma, Arena::Complex { n: 2 })?;
        for g in &groups {
            let expected = if (0..=m as i64).contains(&g.degree) {
                (binomial(m, g.degree as usize), vec![])
            } else {
                (0, vec![])
            };
            if g.shape() != expected {
                return fail(format!(
                    "torus m={m}: degree {} has shape {:?}, expected {:?}",
                    g.degree,
                    g.shape(),
                    expected
                ));
            }
        }

        let model = build_model(&sigma, ModelVariant::new(Family::B, Arena::Complex { n: 2 }))
            .map_err(|e| e.to_string())?;
        let ring =
            cohomology_ring(&model, m as i64, CoefficientRing::Z).map_err(|e| e.to_string())?;
        let circle_gens: Vec<usize> = (0..ring.generators.len())
            .filter(|&i| ring.generators[i].degree == 1)
            .collect();
        if circle_gens.len() != m {
            return fail(format!(
                "torus m={m}: found {} degree-1 generators, expected {m}",
                circle_gens.len()
            ));
        }
        let mut combo: BTreeMap<usize, Rat> = BTreeMap::new();
        combo.insert(circle_gens[0], Rat::one());
        for &g in &circle_gens[1..] {
            combo = multiply_combination(&ring, &combo, g);
        }
        let top: Vec<usize> = (0..ring.generators.len())
            .filter(|&i| ring.generators[i].degree == m as i64)
            .collect();
        if top.len() != 1 || !ring.generators[top[0]].order.is_zero() {
            return fail(format!("torus m={m}: top degree is not a single free class"));
        }
        let ok_product = combo.len() == 1
            && combo.keys().next() == Some(&top[0])
            && combo.values().next().map(|c| c * c) == Some(Rat::one());
        if !ok_product {
            return fail(format!(
                "torus m={m}: product of the {m} circle classes is {combo:?}, expected ± the top class"
            ));
        }

        let real = build_model(&sigma, ModelVariant::new(Family::B, Arena::Real))
            .map_err(|e| e.to_string())?;
        let ring_z =
            cohomology_ring(&real, 0, CoefficientRing::Z).map_err(|e| e.to_string())?;
        if ring_z.group_in_degree(0).shape() != (1 << m, vec![]) {
            return fail(format!(
                "real torus m={m}: H⁰ has shape {:?}, expected free rank {}",
                ring_z.group_in_degree(0).shape(),
                1 << m
            ));
        }
        let ring_f2 =
            cohomology_ring(&real, 0, CoefficientRing::Zp(2)).map_err(|e| e.to_string())?;
        let idems = ring_f2
            .count_idempotent_combinations()
            .map_err(|e| e.to_string())?;
        let all = 1usize << ring_f2.generator_count();
        if idems != all {
            return fail(format!(
                "real torus m={m}: {idems} of {all} ℤ₂-combinations are idempotent, expected all"
            ));
        }
    }
    Ok(())
}

fn corpus() -> Vec<(u64, SimplicialComplex)> {
    (0..100u64)
        .map(|seed| {
            let m = 2 + (seed as usize % 4);
            (seed, random_complex(seed, m))
        })
        .collect()
}

fn shape_of(
    model: &macx_core::models::DGAModel,
    k: i64,
    coeffs: CoefficientRing,
) -> Result<(usize, Vec<Int>), String> {
    homology(model.complex(), k, coeffs)
        .map(|g| g.shape())
        .map_err(|e| e.to_string())
}

/// 5. The four models agree on a seeded random corpus: the two algebra-side
///    models match each other, the two coalgebra-side models match each
///    other, and across the two sides free ranks match degreewise while
///    integral torsion shifts by one degree.
fn criterion_5() -> Check {
    let coeff_list = [
        CoefficientRing::Z,
        CoefficientRing::Zp(2),
        CoefficientRing::Zp(3),
    ];
    for (seed, sigma) in corpus() {
        let m = sigma.m() as i64;
        let trunc = (2 * m + 1).min(7);
        let arena = Arena::Complex { n: 2 };
        let a = build_model(&sigma, ModelVariant::truncated(Family::A, arena, trunc))
            .map_err(|e| e.to_string())?;
        let b = build_model(&sigma, ModelVariant::new(Family::B, arena))
            .map_err(|e| e.to_string())?;
        let k_model = build_model(&sigma, ModelVariant::truncated(Family::K, arena, trunc))
            .map_err(|e| e.to_string())?;
        let l = build_model(&sigma, ModelVariant::new(Family::L, arena))
            .map_err(|e| e.to_string())?;
        let b_top = b.complex().degrees().last().copied().unwrap_or(0);
        let hi = trunc.min(b_top);
        for coeffs in coeff_list {
            for k in 0..=hi {
                let sa = shape_of(&a, k, coeffs)?;
                let sb = shape_of(&b, k, coeffs)?;
                if sa != sb {
                    return fail(format!(
                        "seed {seed}: H^{k} differs between the truncated and finite algebra models under {coeffs:?}: {sa:?} vs {sb:?}"
                    ));
                }
                let sk = shape_of(&k_model, k, coeffs)?;
                let sl = shape_of(&l, k, coeffs)?;
                if sk != sl {
                    return fail(format!(
                        "seed {seed}: H_{k} differs between the truncated and finite coalgebra models under {coeffs:?}: {sk:?} vs {sl:?}"
                    ));
                }
                if sb.0 != sl.0 {
                    return fail(format!(
                        "seed {seed}: free ranks differ across the two sides in degree {k} under {coeffs:?}: {} vs {}",
                        sb.0, sl.0
                    ));
                }
                if coeffs == CoefficientRing::Z && k < hi {
                    let above = shape_of(&b, k + 1, coeffs)?;
                    if above.1 != sl.1 {
                        return fail(format!(
                            "seed {seed}: integral torsion of H^{} does not match torsion of H_{k}: {:?} vs {:?}",
                            k + 1,
                            above.1,
                            sl.1
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// 6. Basis-level Mayer–Vietoris sequences are exact on the same corpus with
///    seeded random facet splits.
fn criterion_6() -> Check {
    for (seed, sigma) in corpus() {
        let (s1, s2) = random_split(seed, &sigma);
        let union = s1.union(&s2).map_err(|e| e.to_string())?;
        if union != sigma {
            return fail(format!("seed {seed}: the split does not cover the complex"));
        }
        let mut variants = vec![ModelVariant::new(Family::L, Arena::Complex { n: 2 })];
        if seed % 10 == 0 {
            let trunc = (2 * sigma.m() as i64 + 1).min(7);
            variants.push(ModelVariant::new(Family::L, Arena::Real));
            variants.push(ModelVariant::truncated(Family::K, Arena::Complex { n: 2 }, trunc));
        }
        for variant in variants {
            mv_short_exact_sequences(&s1, &s2, variant)
                .and_then(|data| data.check())
                .map_err(|e| format!("seed {seed}, {variant}: {e}"))?;
        }
    }
    Ok(())
}

/// 7. The model-derived bigraded table equals the topological one entrywise,
///    including the ℤ/2 of the six-vertex projective plane.
fn criterion_7() -> Check {
    let rp2 = SimplicialComplex::from_facet_lists(
        6,
        &[
            &[1, 2, 3],
            &[1, 3, 4],
            &[1, 4, 5],
            &[1, 2, 6],
            &[1, 5, 6],
            &[2, 3, 5],
            &[2, 4, 5],
            &[2, 4, 6],
            &[3, 4, 6],
            &[3, 5, 6],
        ],
    )
    .map_err(|e| e.to_string())?;
    let small = [
        SimplicialComplex::simplex_boundary(2),
        SimplicialComplex::simplex_boundary(3),
        SimplicialComplex::from_facet_lists(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
            .map_err(|e| e.to_string())?,
        random_complex(11, 4),
        random_complex(29, 4),
    ];
    let arenas = [
        Arena::Complex { n: 2 },
        Arena::Real,
        Arena::Odd { n: 3 },
        Arena::RealMod2,
    ];
    for sigma in &small {
        let topo = hochster_table_topological(sigma).map_err(|e| e.to_string())?;
        for arena in arenas {
            let model = hochster_table_model(sigma, arena).map_err(|e| e.to_string())?;
            if model != topo {
                return fail(format!(
                    "bigraded tables differ for {arena} on m={}",
                    sigma.m()
                ));
            }
        }
    }
    let topo = hochster_table_topological(&rp2).map_err(|e| e.to_string())?;
    for arena in [Arena::Complex { n: 2 }, Arena::Real] {
        let model = hochster_table_model(&rp2, arena).map_err(|e| e.to_string())?;
        if model != topo {
            return fail(format!("bigraded tables differ for {arena} on RP²"));
        }
    }
    let full = VertexSet::full(6);
    if topo.entry(full, 3) != (0, vec![Int::from(2)]) {
        return fail(format!(
            "RP² full-support entry is {:?}, expected torsion ℤ/2",
            topo.entry(full, 3)
        ));
    }
    let assembled = total_groups(&rp2, Arena::Complex { n: 2 })?;
    let h9 = assembled
        .iter()
        .find(|g| g.degree == 9)
        .ok_or("RP²: assembled range misses degree 9")?;
    if h9.shape() != (0, vec![Int::from(2)]) {
        return fail(format!("RP²: H⁹ is {:?}, expected pure ℤ/2", h9.shape()));
    }
    Ok(())
}

/// 8. Cochain products of classes with overlapping vertex support vanish in
///    the complex arena, while the real arena has a genuinely one-sided
///    cochain product that still yields a commutative ring.
fn criterion_8() -> Check {
    let square = SimplicialComplex::from_facet_lists(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
        .map_err(|e| e.to_string())?;
    let b = build_model(&square, ModelVariant::new(Family::B, Arena::Complex { n: 2 }))
        .map_err(|e| e.to_string())?;
    let degrees = b.complex().degrees();
    let mut overlapping = 0usize;
    for &p in &degrees {
        for &q in &degrees {
            for x in b.complex().labels(p) {
                for y in b.complex().labels(q) {
                    if x.support().intersection(y.support()).is_empty() {
                        continue;
                    }
                    overlapping += 1;
                    let prod = b.multiply(x, y).map_err(|e| e.to_string())?;
                    if prod.iter().any(|(_, c)| !c.is_zero()) {
                        return fail(format!("complex arena: {x} · {y} = {prod:?} ≠ 0"));
                    }
                }
            }
        }
    }
    if overlapping == 0 {
        return fail("no overlapping basis pairs were exercised");
    }

    let two_points = SimplicialComplex::simplex_boundary(2);
    let br = build_model(&two_points, ModelVariant::new(Family::B, Arena::Real))
        .map_err(|e| e.to_string())?;
    let t1 = Monomial::from_sets(2, VertexSet::singleton(1), VertexSet::empty(), Side::St);
    let s1 = Monomial::from_sets(2, VertexSet::empty(), VertexSet::singleton(1), Side::St);
    let ts = br.multiply(&t1, &s1).map_err(|e| e.to_string())?;
    let st = br.multiply(&s1, &t1).map_err(|e| e.to_string())?;
    if ts.len() != 1 || ts[0].0 != t1 || ts[0].1 != Int::from(1) {
        return fail(format!("real arena: t₁ · s₁ = {ts:?}, expected t₁"));
    }
    if !st.is_empty() {
        return fail(format!("real arena: s₁ · t₁ = {st:?}, expected 0"));
    }
    for sigma in [&two_points, &square] {
        let model = build_model(sigma, ModelVariant::new(Family::B, Arena::Real))
            .map_err(|e| e.to_string())?;
        let top = model.complex().degrees().last().copied().unwrap_or(0);
        let ring =
            cohomology_ring(&model, top, CoefficientRing::Z).map_err(|e| e.to_string())?;
        let report = ring.commutativity_report();
        if !report.is_empty() {
            return fail(format!(
                "real ring on m={} is not graded-commutative: {report:?}",
                sigma.m()
            ));
        }
    }
    Ok(())
}

/// 9. Over ℤ₂ the degree-0 ring of two ghost vertices has more idempotents
///    than any exterior algebra on the same rank could.
fn criterion_9() -> Check {
    let sigma = SimplicialComplex::empty_complex(2);
    let model = build_model(&sigma, ModelVariant::new(Family::B, Arena::Real))
        .map_err(|e| e.to_string())?;
    let ring = cohomology_ring(&model, 0, CoefficientRing::Zp(2)).map_err(|e| e.to_string())?;
    let idems = ring
        .count_idempotent_combinations()
        .map_err(|e| e.to_string())?;
    if idems < 4 {
        return fail(format!(
            "only {idems} idempotent combinations; an exterior algebra has 2, the split ring must have ≥ 4"
        ));
    }
    if idems != 16 {
        return fail(format!("expected all 16 combinations idempotent, got {idems}"));
    }
    Ok(())
}

/// 10. The polytopal ring agrees additively (with torsion) with the real
///     algebra model on polygon and simplex duals, cup products factor
///     through the retraction diagrams, and the square recovers the torus
///     with a nonzero product of the two circle classes.
fn criterion_10() -> Check {
    let named: Vec<(&str, SimplicialComplex)> = vec![
        ("segment", SimplicialComplex::simplex_boundary(2)),
        ("triangle", SimplicialComplex::simplex_boundary(3)),
        (
            "square",
            SimplicialComplex::from_facet_lists(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
                .map_err(|e| e.to_string())?,
        ),
        (
            "pentagon",
            SimplicialComplex::from_facet_lists(
                5,
                &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]],
            )
            .map_err(|e| e.to_string())?,
        ),
        ("tetrahedron", SimplicialComplex::simplex_boundary(4)),
    ];
    for (name, sigma) in &named {
        let maxdeg = sigma
            .facets()
            .iter()
            .map(|f| f.len() as i64)
            .max()
            .unwrap_or(0);
        let glm = glm_ring(sigma, maxdeg).map_err(|e| format!("{name}: {e}"))?;
        let model = build_model(sigma, ModelVariant::new(Family::B, Arena::Real))
            .map_err(|e| e.to_string())?;
        let br = cohomology_ring(&model, maxdeg, CoefficientRing::Z)
            .map_err(|e| format!("{name}: {e}"))?;
        for k in 0..=maxdeg {
            let g = glm.group_in_degree(k).shape();
            let b = br.group_in_degree(k).shape();
            if g != b {
                return fail(format!(
                    "{name}: degree {k} differs between the polytopal and algebra rings: {g:?} vs {b:?}"
                ));
            }
        }
        let m = sigma.m();
        let ground = VertexSet::full(m);
        let half = VertexSet::from_slice(&(1..=m / 2).collect::<Vec<_>>());
        let pairs = [
            (VertexSet::singleton(1), ground.remove(1)),
            (half, ground.difference(half)),
        ];
        for (alpha, beta) in pairs {
            let report =
                cup_diagram_check(sigma, alpha, beta).map_err(|e| format!("{name}: {e}"))?;
            if !report.mismatches.is_empty() {
                return fail(format!(
                    "{name}: cup diagram for ({alpha}, {beta}) has mismatches: {:?}",
                    report.mismatches
                ));
            }
        }
        if *name == "square" {
            let shapes: Vec<_> = (0..=2).map(|k| glm.group_in_degree(k).shape()).collect();
            let torus = vec![(1, vec![]), (2, vec![]), (1, vec![])];
            if shapes != torus {
                return fail(format!("square: shapes {shapes:?}, expected (1, 2, 1)"));
            }
            let circles: Vec<usize> = (0..glm.generators.len())
                .filter(|&i| glm.generators[i].degree == 1)
                .collect();
            let product = glm
                .products
                .get(&(circles[0], circles[1]))
                .map(|t| !t.is_empty())
                .unwrap_or(false);
            if !product {
                return fail("square: the two circle classes multiply to zero".to_string());
            }
        }
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Check);

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        ("complex spheres over simplex boundaries", criterion_1),
        ("real spheres over simplex boundaries", criterion_2),
        ("generalized disk spheres", criterion_3),
        ("torus rings over ghost vertices", criterion_4),
        ("model agreement on a random corpus", criterion_5),
        ("Mayer-Vietoris exactness", criterion_6),
        ("bigraded tables match topology", criterion_7),
        ("overlap vanishing and one-sided products", criterion_8),
        ("extra idempotents over Z/2", criterion_9),
        ("polytopal ring against the algebra model", criterion_10),
    ];
    let mut failures = Vec::new();
    for (idx, (label, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(()) => println!("criterion {}: pass — {label}", idx + 1),
            Err(msg) => {
                println!("criterion {}: FAIL — {label}: {msg}", idx + 1);
                failures.push(format!("criterion {} ({label}): {msg}", idx + 1));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
