//! Bigraded Betti tables computed along two independent routes.
//!
//! For each support `α ⊆ [m]` the squarefree model splits off a finite
//! component whose cohomology equals the reduced cohomology of the full
//! subcomplex `Σ_α`, shifted by one (the component carries the real
//! grading: degree = number of polynomial letters).  This module computes
//! the table of all these groups once from the model side
//! ([`hochster_table_model`]) and once from ordered simplicial cochains of
//! the full subcomplexes ([`hochster_table_topological`]); the two must
//! agree entry by entry, free ranks and torsion alike.
//! [`assemble_poincare`] sums a table into the total cohomology of the
//! moment-angle complex, shifting each component by `(n−1)|α|` in the
//! complex and odd arenas and not at all in the real ones.

use std::collections::BTreeMap;

use num_traits::One;

use crate::based::BasedComplex;
use crate::chains::reduced_cohomology;
use crate::error::{Error, Result};
use crate::homology::{homology_all, CoefficientRing, CohomologyGroup};
use crate::matrix::Mat;
use crate::models::{diff_terms, Arena, Family, ModelVariant, Monomial, Side};
use crate::simplicial::SimplicialComplex;
use crate::snf::smith_normal_form;
use crate::vertex_set::VertexSet;
use crate::Int;

/// Map `(support α, degree)` → `(free rank, torsion orders)`, storing only
/// nonzero entries.  Entries always satisfy `0 ≤ degree ≤ |α|`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    m: usize,
    entries: BTreeMap<(VertexSet, i64), (usize, Vec<Int>)>,
}

impl BettiTable {
    pub fn m(&self) -> usize {
        self.m
    }

    fn insert(&mut self, alpha: VertexSet, degree: i64, free: usize, torsion: Vec<Int>) {
        debug_assert!(0 <= degree && degree <= alpha.len() as i64);
        if free > 0 || !torsion.is_empty() {
            self.entries.insert((alpha, degree), (free, torsion));
        }
    }

    /// The entry at `(α, degree)`; absent entries are zero.
    pub fn entry(&self, alpha: VertexSet, degree: i64) -> (usize, Vec<Int>) {
        self.entries
            .get(&(alpha, degree))
            .cloned()
            .unwrap_or((0, Vec::new()))
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// Nonzero rows `(α, degree, free rank, torsion)` sorted by support size,
    /// then support, then degree.
    pub fn rows(&self) -> Vec<(VertexSet, i64, usize, Vec<Int>)> {
        let mut out: Vec<_> = self
            .entries
            .iter()
            .map(|(&(a, d), (f, t))| (a, d, *f, t.clone()))
            .collect();
        out.sort_by(|x, y| x.0.cmp_dim_lex(&y.0).then(x.1.cmp(&y.1)));
        out
    }

    /// Supports carrying at least one nonzero entry.
    pub fn supports(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self.entries.keys().map(|&(a, _)| a).collect();
        out.dedup();
        out
    }
}

/// The arena actually used for component differentials: the mod-2 real
/// arena shares the real arena's integral differential, so the table (which
/// records integral shapes) is computed from the signed lift.
fn integral_arena(arena: Arena) -> Arena {
    match arena {
        Arena::RealMod2 => Arena::Real,
        a => a,
    }
}

fn check_support(sigma: &SimplicialComplex, alpha: VertexSet) -> Result<()> {
    let full = VertexSet::full(sigma.m());
    if !alpha.is_subset_of(full) {
        let vertex = alpha
            .difference(full)
            .min_elem()
            .expect("offending vertex exists");
        return Err(Error::VertexOutOfRange {
            vertex,
            m: sigma.m(),
        });
    }
    Ok(())
}

/// The `α`-component of the squarefree model, built directly: basis
/// monomials `t_σ s_{α∖σ}` with `σ ∈ Σ`, graded by the number of
/// polynomial letters.  Agrees with splitting the full model by support,
/// but costs only `2^{|α|}` instead of `2^m`.
pub fn component_complex(
    sigma: &SimplicialComplex,
    arena: Arena,
    alpha: VertexSet,
) -> Result<BasedComplex<Monomial>> {
    check_support(sigma, alpha)?;
    let variant = ModelVariant::new(Family::B, integral_arena(arena));
    let m = sigma.m();
    let mut by_degree: BTreeMap<i64, Vec<Monomial>> = BTreeMap::new();
    for face in sigma.full_subcomplex(alpha).faces() {
        let mono = Monomial::from_sets(m, face, alpha.difference(face), Side::St);
        by_degree.entry(face.len() as i64).or_default().push(mono);
    }
    let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for basis in by_degree.values_mut() {
        basis.sort();
    }
    for basis in by_degree.values() {
        for (i, mono) in basis.iter().enumerate() {
            index.insert(mono, i);
        }
    }
    let mut builder = BasedComplex::builder(1);
    for (&k, basis) in &by_degree {
        let mut entries = Vec::new();
        for (col, mono) in basis.iter().enumerate() {
            for (target, coeff) in diff_terms(mono, sigma, &variant) {
                entries.push((index[&target], col, coeff));
            }
        }
        builder = builder.basis(k, basis.clone()).diff_entries(k, entries);
    }
    builder.build()
}

/// Integral cohomology of the `α`-component, in the real grading.
pub fn model_groups(
    sigma: &SimplicialComplex,
    arena: Arena,
    alpha: VertexSet,
) -> Result<Vec<CohomologyGroup>> {
    homology_all(&component_complex(sigma, arena, alpha)?, CoefficientRing::Z)
}

/// Reduced integral cohomology of the full subcomplex `Σ_α`, shifted up by
/// one so that `H̃^{d−1}(Σ_α)` is reported at table degree `d`.
pub fn topological_groups(
    sigma: &SimplicialComplex,
    alpha: VertexSet,
) -> Result<Vec<CohomologyGroup>> {
    check_support(sigma, alpha)?;
    let groups = reduced_cohomology(&sigma.full_subcomplex(alpha), CoefficientRing::Z)?;
    Ok(groups
        .into_iter()
        .map(|g| CohomologyGroup {
            degree: g.degree + 1,
            ..g
        })
        .collect())
}

fn table_from(
    sigma: &SimplicialComplex,
    per_alpha: &dyn Fn(VertexSet) -> Result<Vec<CohomologyGroup>>,
) -> Result<BettiTable> {
    let mut table = BettiTable {
        m: sigma.m(),
        entries: BTreeMap::new(),
    };
    for alpha in VertexSet::full(sigma.m()).subsets() {
        for g in per_alpha(alpha)? {
            table.insert(alpha, g.degree, g.free_rank, g.torsion.clone());
        }
    }
    Ok(table)
}

/// Betti table from the model side: split the squarefree model by support
/// and take integral cohomology of each component.
pub fn hochster_table_model(sigma: &SimplicialComplex, arena: Arena) -> Result<BettiTable> {
    table_from(sigma, &|alpha| model_groups(sigma, arena, alpha))
}

/// Betti table from the topological side: reduced cohomology of every full
/// subcomplex, shifted by one.  Independent of any arena.
pub fn hochster_table_topological(sigma: &SimplicialComplex) -> Result<BettiTable> {
    table_from(sigma, &|alpha| topological_groups(sigma, alpha))
}

/// Degree shift a support of size `|α|` receives in the total grading.
pub fn arena_shift_per_vertex(arena: Arena) -> i64 {
    match arena {
        Arena::Complex { n } | Arena::Odd { n } => n - 1,
        Arena::Real | Arena::RealMod2 => 0,
    }
}

/// Merge a multiset of torsion orders into canonical invariant factors
/// (each dividing the next) via the diagonal matrix they span.
pub fn canonical_torsion(orders: &[Int]) -> Vec<Int> {
    if orders.is_empty() {
        return Vec::new();
    }
    let n = orders.len();
    let mut diag = Mat::<Int>::zero(n, n);
    for (i, o) in orders.iter().enumerate() {
        diag[(i, i)] = o.clone();
    }
    smith_normal_form(&diag)
        .invariant_factors()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect()
}

/// Total cohomology of the moment-angle complex, assembled from a Betti
/// table: each `(α, d)` entry lands in total degree `d + (n−1)|α|`
/// (complex/odd arenas) or stays at `d` (real arenas).  Torsion orders are
/// recombined into canonical invariant factors per degree.
pub fn assemble_poincare(
    sigma: &SimplicialComplex,
    arena: Arena,
    table: &BettiTable,
) -> Result<Vec<CohomologyGroup>> {
    if table.m() != sigma.m() {
        return Err(Error::Verification(format!(
            "table over {} vertices does not match a complex over {}",
            table.m(),
            sigma.m()
        )));
    }
    let per_vertex = arena_shift_per_vertex(arena);
    let mut free: BTreeMap<i64, usize> = BTreeMap::new();
    let mut torsion: BTreeMap<i64, Vec<Int>> = BTreeMap::new();
    for (alpha, degree, f, t) in table.rows() {
        let total = degree + per_vertex * alpha.len() as i64;
        *free.entry(total).or_default() += f;
        torsion.entry(total).or_default().extend(t);
    }
    let top = free
        .keys()
        .chain(torsion.keys())
        .max()
        .copied()
        .unwrap_or(0);
    Ok((0..=top)
        .map(|k| CohomologyGroup {
            degree: k,
            free_rank: free.get(&k).copied().unwrap_or(0),
            torsion: canonical_torsion(torsion.get(&k).map_or(&[], |v| v.as_slice())),
            representatives: Vec::new(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::build_model;

    fn complex2() -> Arena {
        Arena::Complex { n: 2 }
    }

    fn corpus() -> Vec<SimplicialComplex> {
        vec![
            SimplicialComplex::from_facet_lists(2, &[&[1], &[2]]).unwrap(),
            SimplicialComplex::from_facets(2, &[]).unwrap(),
            SimplicialComplex::full_simplex(3),
            SimplicialComplex::from_facet_lists(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
                .unwrap(),
            SimplicialComplex::simplex_boundary(3),
            SimplicialComplex::from_facet_lists(3, &[&[1], &[3]]).unwrap(),
        ]
    }

    fn projective_plane() -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(
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
        .unwrap()
    }

    #[test]
    fn model_and_topological_tables_agree() {
        for sigma in corpus() {
            let topo = hochster_table_topological(&sigma).unwrap();
            assert_eq!(hochster_table_model(&sigma, complex2()).unwrap(), topo);
            assert_eq!(hochster_table_model(&sigma, Arena::Real).unwrap(), topo);
        }
        let rp2 = projective_plane();
        let topo = hochster_table_topological(&rp2).unwrap();
        assert_eq!(hochster_table_model(&rp2, complex2()).unwrap(), topo);
        // Mod-2 real arena shares the real table.
        assert_eq!(hochster_table_model(&rp2, Arena::RealMod2).unwrap(), topo);
    }

    #[test]
    fn small_tables_entry_by_entry() {
        let two_points = SimplicialComplex::from_facet_lists(2, &[&[1], &[2]]).unwrap();
        let table = hochster_table_model(&two_points, complex2()).unwrap();
        assert_eq!(table.nonzero_count(), 2);
        assert_eq!(table.entry(VertexSet::empty(), 0), (1, vec![]));
        assert_eq!(table.entry(VertexSet::full(2), 1), (1, vec![]));

        let ghosts = SimplicialComplex::from_facets(2, &[]).unwrap();
        let table = hochster_table_model(&ghosts, complex2()).unwrap();
        assert_eq!(table.nonzero_count(), 4);
        for alpha in VertexSet::full(2).subsets() {
            assert_eq!(table.entry(alpha, 0), (1, vec![]));
        }

        let simplex = SimplicialComplex::full_simplex(3);
        let table = hochster_table_model(&simplex, complex2()).unwrap();
        assert_eq!(table.nonzero_count(), 1);
        assert_eq!(table.entry(VertexSet::empty(), 0), (1, vec![]));

        let square =
            SimplicialComplex::from_facet_lists(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap();
        let table = hochster_table_topological(&square).unwrap();
        assert_eq!(table.entry(VertexSet::full(4), 2), (1, vec![]));
    }

    #[test]
    fn projective_plane_torsion_sits_at_the_top() {
        let rp2 = projective_plane();
        let table = hochster_table_topological(&rp2).unwrap();
        assert_eq!(table.entry(VertexSet::full(6), 3), (0, vec![Int::from(2)]));
        let groups = model_groups(&rp2, complex2(), VertexSet::full(6)).unwrap();
        let top: Vec<_> = groups.iter().filter(|g| g.degree == 3).collect();
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].shape(), (0, vec![Int::from(2)]));
    }

    #[test]
    fn assembly_reproduces_known_poincare_series() {
        let two_points = SimplicialComplex::from_facet_lists(2, &[&[1], &[2]]).unwrap();
        let table = hochster_table_topological(&two_points).unwrap();
        let complex = assemble_poincare(&two_points, complex2(), &table).unwrap();
        let ranks: Vec<usize> = complex.iter().map(|g| g.free_rank).collect();
        assert_eq!(ranks, vec![1, 0, 0, 1]);
        let real = assemble_poincare(&two_points, Arena::Real, &table).unwrap();
        let ranks: Vec<usize> = real.iter().map(|g| g.free_rank).collect();
        assert_eq!(ranks, vec![1, 1]);
        let odd = assemble_poincare(&two_points, Arena::Odd { n: 3 }, &table).unwrap();
        let ranks: Vec<usize> = odd.iter().map(|g| g.free_rank).collect();
        assert_eq!(ranks, vec![1, 0, 0, 0, 0, 1]);

        let square =
            SimplicialComplex::from_facet_lists(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap();
        let table = hochster_table_topological(&square).unwrap();
        let real = assemble_poincare(&square, Arena::Real, &table).unwrap();
        let ranks: Vec<usize> = real.iter().map(|g| g.free_rank).collect();
        assert_eq!(ranks, vec![1, 2, 1]);
    }

    #[test]
    fn assembly_matches_model_homology_with_torsion() {
        for (sigma, maxdeg) in [(projective_plane(), 9i64)] {
            let table = hochster_table_topological(&sigma).unwrap();
            let assembled = assemble_poincare(&sigma, complex2(), &table).unwrap();
            let model = build_model(&sigma, ModelVariant::new(Family::B, complex2())).unwrap();
            let groups = homology_all(model.complex(), CoefficientRing::Z).unwrap();
            for k in 0..=maxdeg {
                let from_table = assembled
                    .iter()
                    .find(|g| g.degree == k)
                    .map(|g| g.shape())
                    .unwrap_or((0, vec![]));
                let from_model = groups
                    .iter()
                    .find(|g| g.degree == k)
                    .map(|g| g.shape())
                    .unwrap_or((0, vec![]));
                assert_eq!(from_table, from_model, "degree {k}");
            }
        }
    }

    #[test]
    fn torsion_recombination_gives_invariant_factors() {
        let orders: Vec<Int> = [2, 3].iter().map(|&n| Int::from(n)).collect();
        assert_eq!(canonical_torsion(&orders), vec![Int::from(6)]);
        let orders: Vec<Int> = [2, 2].iter().map(|&n| Int::from(n)).collect();
        assert_eq!(canonical_torsion(&orders), vec![Int::from(2); 2]);
        let orders: Vec<Int> = [4, 6].iter().map(|&n| Int::from(n)).collect();
        assert_eq!(canonical_torsion(&orders), vec![Int::from(2), Int::from(12)]);
        assert!(canonical_torsion(&[]).is_empty());
    }

    #[test]
    fn direct_components_match_the_model_split() {
        let square =
            SimplicialComplex::from_facet_lists(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap();
        for arena in [complex2(), Arena::Real] {
            let model = build_model(&square, ModelVariant::new(Family::B, arena)).unwrap();
            let split = model.hochster_components().unwrap();
            for (alpha, comp) in &split {
                let direct = component_complex(&square, arena, *alpha).unwrap();
                assert_eq!(direct.degrees(), comp.degrees());
                for k in direct.degrees() {
                    assert_eq!(direct.labels(k), comp.labels(k));
                    assert_eq!(direct.diff(k), comp.diff(k));
                }
            }
        }
    }

    #[test]
    fn euler_characteristics_match_per_support() {
        for sigma in corpus() {
            let table = hochster_table_topological(&sigma).unwrap();
            for alpha in VertexSet::full(sigma.m()).subsets() {
                let mut chi = 0i64;
                for d in 0..=alpha.len() as i64 {
                    let (f, _) = table.entry(alpha, d);
                    chi += if (d - 1).rem_euclid(2) == 0 { f as i64 } else { -(f as i64) };
                }
                assert_eq!(
                    chi,
                    sigma.full_subcomplex(alpha).reduced_euler_characteristic(),
                    "support {alpha}"
                );
            }
        }
    }

    #[test]
    fn out_of_range_supports_are_rejected() {
        let sigma = SimplicialComplex::from_facet_lists(2, &[&[1], &[2]]).unwrap();
        let bad = VertexSet::from_slice(&[3]);
        assert!(matches!(
            model_groups(&sigma, complex2(), bad),
            Err(Error::VertexOutOfRange { vertex: 3, m: 2 })
        ));
        assert!(matches!(
            topological_groups(&sigma, bad),
            Err(Error::VertexOutOfRange { vertex: 3, m: 2 })
        ));
    }
}
