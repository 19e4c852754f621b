//! Abstract simplicial complexes on a ground set `{1, …, m}`.
//!
//! A complex always contains the empty face; vertices of the ground set that
//! lie in no face are *ghost vertices* and are perfectly legal (they matter
//! for the moment-angle constructions, where each ghost contributes a sphere
//! factor constraint).  All derived constructions — full subcomplexes, cones,
//! barycentric subdivisions, dual blocks — are pure and leave their inputs
//! untouched.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A finite simplicial complex: a downward-closed set of subsets of `[m]`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    m: usize,
    faces: BTreeSet<VertexSet>,
}

impl SimplicialComplex {
    /// Downward closure of the given facets, plus the empty face.
    pub fn from_facets(m: usize, facets: &[VertexSet]) -> Result<Self> {
        if m == 0 || m > crate::vertex_set::MAX_VERTICES {
            return Err(Error::VertexOutOfRange { vertex: 0, m });
        }
        let ground = VertexSet::full(m);
        let mut faces = BTreeSet::new();
        faces.insert(VertexSet::EMPTY);
        for &f in facets {
            if !f.is_subset_of(ground) {
                let bad = f.difference(ground).min_elem().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex: bad, m });
            }
            for sub in f.subsets() {
                faces.insert(sub);
            }
        }
        Ok(SimplicialComplex { m, faces })
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_facet_lists(m: usize, facets: &[&[usize]]) -> Result<Self> {
        for f in facets {
            for &v in *f {
                if v < 1 || v > m {
                    return Err(Error::VertexOutOfRange { vertex: v, m });
                }
            }
        }
        let sets: Vec<VertexSet> = facets.iter().map(|f| VertexSet::from_slice(f)).collect();
        Self::from_facets(m, &sets)
    }

    /// The boundary of the full simplex on `[m]` (all proper subsets).
    pub fn simplex_boundary(m: usize) -> Self {
        let ground = VertexSet::full(m);
        let facets: Vec<VertexSet> = (1..=m).map(|v| ground.remove(v)).collect();
        Self::from_facets(m, &facets).expect("valid facets")
    }

    /// The full simplex on `[m]`.
    pub fn full_simplex(m: usize) -> Self {
        Self::from_facets(m, &[VertexSet::full(m)]).expect("valid facet")
    }

    /// The complex `{∅}` with `m` ghost vertices.
    pub fn empty_complex(m: usize) -> Self {
        Self::from_facets(m, &[]).expect("valid")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn faces(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.faces.iter().copied()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces_of_card(&self, k: usize) -> Vec<VertexSet> {
        self.faces.iter().copied().filter(|f| f.len() == k).collect()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.faces.contains(&face)
    }

    /// Union of all faces: the non-ghost vertices.
    pub fn vertices(&self) -> VertexSet {
        self.faces
            .iter()
            .fold(VertexSet::EMPTY, |acc, &f| acc.union(f))
    }

    pub fn ghost_vertices(&self) -> VertexSet {
        VertexSet::full(self.m).difference(self.vertices())
    }

    /// Dimension: `-1` for the complex `{∅}`.
    pub fn dim(&self) -> i64 {
        self.faces.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// Maximal faces.
    pub fn facets(&self) -> Vec<VertexSet> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| {
                !self
                    .faces
                    .iter()
                    .any(|&g| f != g && f.is_subset_of(g))
            })
            .collect()
    }

    /// Full subcomplex on `α`: faces contained in `α`.
    ///
    /// The ground set stays `[m]`; vertices of `[m]∖α` become ghosts.  This
    /// keeps multidegree bookkeeping across subcomplexes uniform.
    pub fn full_subcomplex(&self, alpha: VertexSet) -> SimplicialComplex {
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|f| f.is_subset_of(alpha))
            .collect();
        SimplicialComplex { m: self.m, faces }
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.m == other.m && self.faces.is_subset(&other.faces)
    }

    /// Union of face sets (requires equal ground sets).
    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.m != other.m {
            return Err(Error::NotASubcomplex(format!(
                "ground sets differ: {} vs {}",
                self.m, other.m
            )));
        }
        let faces = self.faces.union(&other.faces).copied().collect();
        Ok(SimplicialComplex { m: self.m, faces })
    }

    /// Intersection of face sets (requires equal ground sets).
    pub fn intersection(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.m != other.m {
            return Err(Error::NotASubcomplex(format!(
                "ground sets differ: {} vs {}",
                self.m, other.m
            )));
        }
        let faces = self.faces.intersection(&other.faces).copied().collect();
        Ok(SimplicialComplex { m: self.m, faces })
    }

    /// Remove a single maximal face (used to build Mayer–Vietoris splits).
    pub fn without_facet(&self, facet: VertexSet) -> Result<SimplicialComplex> {
        if !self.facets().contains(&facet) {
            return Err(Error::NotASubcomplex(format!(
                "{facet} is not a facet"
            )));
        }
        let mut faces = self.faces.clone();
        faces.remove(&facet);
        Ok(SimplicialComplex { m: self.m, faces })
    }

    /// Cone: ambient `CΣ` with a new apex vertex `m+1` joined to every face,
    /// together with the base `Σ` embedded as a subcomplex (apex ghost).
    pub fn cone(&self) -> SimplicialPair {
        let m = self.m + 1;
        assert!(m <= crate::vertex_set::MAX_VERTICES);
        let apex = m;
        let mut faces = BTreeSet::new();
        for &f in &self.faces {
            faces.insert(f);
            faces.insert(f.insert(apex));
        }
        let ambient = SimplicialComplex { m, faces };
        let sub = SimplicialComplex {
            m,
            faces: self.faces.clone(),
        };
        SimplicialPair::new(ambient, sub).expect("base is a subcomplex of its cone")
    }

    /// Reduced Euler characteristic `Σ_{σ∈Σ} (−1)^{|σ|−1}` (the empty face
    /// contributes `−1`), equal to `Σ (−1)^k rank H̃^k`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// Barycentric subdivision: vertices are the nonempty faces of `self`
    /// (ordered by cardinality, then lexicographically), faces are the flags
    /// `σ₀ ⊂ … ⊂ σ_k`.
    pub fn barycentric_subdivision(&self) -> SubdividedComplex {
        let mut labels: Vec<VertexSet> = self
            .faces
            .iter()
            .copied()
            .filter(|f| !f.is_empty())
            .collect();
        labels.sort_by(|a, b| a.cmp_dim_lex(b));
        let complex = flags_complex(&labels, None);
        SubdividedComplex {
            complex,
            labels,
            apex: None,
        }
    }

    /// Cone over the barycentric subdivision, with the apex as the last
    /// vertex.  This is the barycentric model of the polytope `P = CΣ′`.
    pub fn cone_over_subdivision(&self) -> SubdividedComplex {
        let mut labels: Vec<VertexSet> = self
            .faces
            .iter()
            .copied()
            .filter(|f| !f.is_empty())
            .collect();
        labels.sort_by(|a, b| a.cmp_dim_lex(b));
        let apex = labels.len() + 1;
        let complex = flags_complex(&labels, Some(apex));
        SubdividedComplex {
            complex,
            labels,
            apex: Some(apex),
        }
    }

    /// The pair `(P, P_α)` where `P` is the cone over the subdivision and
    /// `P_α` is the union of the closed blocks dual to the vertices in `α`:
    /// all flags `σ₀ ⊂ … ⊂ σ_k` with `σ₀ ∩ α ≠ ∅`.
    pub fn dual_blocks_pair(&self, alpha: VertexSet) -> Result<SimplicialPair> {
        if !alpha.is_subset_of(VertexSet::full(self.m)) {
            let bad = alpha
                .difference(VertexSet::full(self.m))
                .min_elem()
                .unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: bad, m: self.m });
        }
        let p = self.cone_over_subdivision();
        let sub = p.dual_block_subcomplex(alpha);
        SimplicialPair::new(p.complex.clone(), sub)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.faces.iter().map(|s| s.to_string()).collect();
        write!(f, "SimplicialComplex(m={}, faces=[{}])", self.m, parts.join(", "))
    }
}

/// All flags of the poset of `labels` (ordered by inclusion), as a complex on
/// ground set `labels.len()` (+1 if an apex joins everything).
///
/// `labels` must be sorted by a linear extension of inclusion, so a flag is
/// always an ascending vertex sequence.
fn flags_complex(labels: &[VertexSet], apex: Option<usize>) -> SimplicialComplex {
    let n = labels.len();
    // Note: the subdivision of {∅} legitimately has zero vertices (m = 0).
    let m = if apex.is_some() { n + 1 } else { n };
    let mut flags: Vec<VertexSet> = vec![VertexSet::EMPTY];
    // DFS over chains; since `labels` linearly extends inclusion, any strict
    // chain is ascending in index.
    let mut stack: Vec<(usize, VertexSet)> = (0..n)
        .map(|i| (i, VertexSet::singleton(i + 1)))
        .collect();
    while let Some((top, flag)) = stack.pop() {
        flags.push(flag);
        for j in top + 1..n {
            if labels[top].is_subset_of(labels[j]) && labels[top] != labels[j] {
                stack.push((j, flag.insert(j + 1)));
            }
        }
    }
    let mut faces = BTreeSet::new();
    for flag in flags {
        faces.insert(flag);
        if let Some(a) = apex {
            faces.insert(flag.insert(a));
        }
    }
    SimplicialComplex { m, faces }
}

/// A complex whose vertices are labeled by nonempty faces of a source
/// complex (plus an optional cone apex as the last vertex).
#[derive(Clone, Debug)]
pub struct SubdividedComplex {
    complex: SimplicialComplex,
    labels: Vec<VertexSet>,
    apex: Option<usize>,
}

impl SubdividedComplex {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Label of vertex `v` (1-based); `None` for the apex.
    pub fn label(&self, v: usize) -> Option<VertexSet> {
        if Some(v) == self.apex {
            None
        } else {
            Some(self.labels[v - 1])
        }
    }

    /// Vertex (1-based) carrying the label `face`, if present.
    pub fn vertex_of(&self, face: VertexSet) -> Option<usize> {
        self.labels.iter().position(|&l| l == face).map(|i| i + 1)
    }

    pub fn apex(&self) -> Option<usize> {
        self.apex
    }

    pub fn labels(&self) -> &[VertexSet] {
        &self.labels
    }

    /// The subcomplex `P_α`: flags whose minimal label meets `α`
    /// (downward-closed; never contains the apex).
    pub fn dual_block_subcomplex(&self, alpha: VertexSet) -> SimplicialComplex {
        let faces: BTreeSet<VertexSet> = self
            .complex
            .faces()
            .filter(|flag| {
                if flag.is_empty() {
                    return true;
                }
                if let Some(a) = self.apex {
                    if flag.contains(a) {
                        return false;
                    }
                }
                // Minimal label of the flag = label of its smallest vertex
                // (labels are sorted by a linear extension of inclusion).
                let min_vertex = flag.min_elem().unwrap();
                !self.labels[min_vertex - 1].intersection(alpha).is_empty()
            })
            .collect();
        SimplicialComplex {
            m: self.complex.m,
            faces,
        }
    }
}

/// A subcomplex inclusion `sub ⊆ ambient` on a common ground set.
#[derive(Clone, Debug)]
pub struct SimplicialPair {
    pub ambient: SimplicialComplex,
    pub sub: SimplicialComplex,
}

impl SimplicialPair {
    pub fn new(ambient: SimplicialComplex, sub: SimplicialComplex) -> Result<Self> {
        if !sub.is_subcomplex_of(&ambient) {
            return Err(Error::NotASubcomplex(
                "pair: sub is not a subcomplex of ambient".into(),
            ));
        }
        Ok(SimplicialPair { ambient, sub })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn faces_sorted(c: &SimplicialComplex) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = c.faces().map(|f| f.to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn from_facets_downward_closure() {
        let c = SimplicialComplex::from_facet_lists(2, &[&[1], &[2]]).unwrap();
        assert_eq!(faces_sorted(&c), vec![vec![], vec![1], vec![2]]);

        let ghost = SimplicialComplex::from_facet_lists(1, &[]).unwrap();
        assert_eq!(ghost.face_count(), 1);
        assert_eq!(ghost.ghost_vertices().to_vec(), vec![1]);

        let full = SimplicialComplex::from_facet_lists(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(full.face_count(), 8);
        assert_eq!(full.dim(), 2);

        assert!(matches!(
            SimplicialComplex::from_facet_lists(2, &[&[3]]),
            Err(Error::VertexOutOfRange { vertex: 3, m: 2 })
        ));
    }

    #[test]
    fn full_subcomplex_keeps_ground_set() {
        let c = SimplicialComplex::simplex_boundary(2); // two points
        let sub = c.full_subcomplex(VertexSet::singleton(1));
        assert_eq!(sub.m(), 2);
        assert_eq!(faces_sorted(&sub), vec![vec![], vec![1]]);
        assert_eq!(sub.ghost_vertices().to_vec(), vec![2]);

        assert_eq!(c.full_subcomplex(VertexSet::full(2)), c);

        let simplex = SimplicialComplex::full_simplex(3);
        let empty = simplex.full_subcomplex(VertexSet::EMPTY);
        assert_eq!(empty.face_count(), 1);

        // Restricting to the whole vertex set is the identity.
        let rp = SimplicialComplex::from_facet_lists(4, &[&[1, 2], &[2, 3], &[3, 4]]).unwrap();
        assert_eq!(rp.full_subcomplex(rp.vertices()), rp);
    }

    #[test]
    fn cone_examples() {
        // Cone over {∅} is a point.
        let pair = SimplicialComplex::empty_complex(1).cone();
        assert_eq!(faces_sorted(&pair.ambient), vec![vec![], vec![2]]);
        assert_eq!(pair.sub.face_count(), 1);

        // Cone over two points is a path of two edges.
        let pair = SimplicialComplex::simplex_boundary(2).cone();
        assert_eq!(
            faces_sorted(&pair.ambient),
            vec![vec![], vec![1], vec![1, 3], vec![2], vec![2, 3], vec![3]]
        );
        assert_eq!(pair.sub.faces_of_card(1).len(), 2);

        // Cone over ∂Δ²: 3 triangles sharing the apex; 14 faces total.
        let pair = SimplicialComplex::simplex_boundary(3).cone();
        assert_eq!(pair.ambient.face_count(), 14);
        assert_eq!(pair.ambient.faces_of_card(3).len(), 3);
        assert_eq!(pair.ambient.dim(), 2);
    }

    #[test]
    fn barycentric_subdivision_examples() {
        // Subdivision of two points: two vertices, no edges.
        let sd = SimplicialComplex::simplex_boundary(2).barycentric_subdivision();
        assert_eq!(sd.complex().faces_of_card(1).len(), 2);
        assert_eq!(sd.complex().faces_of_card(2).len(), 0);

        // Subdivision of a single edge: path on 3 vertices.
        let edge = SimplicialComplex::full_simplex(2);
        let sd = edge.barycentric_subdivision();
        assert_eq!(sd.complex().faces_of_card(1).len(), 3);
        assert_eq!(sd.complex().faces_of_card(2).len(), 2);
        // Vertex order: {1}, {2}, then {1,2}.
        assert_eq!(sd.label(1), Some(VertexSet::singleton(1)));
        assert_eq!(sd.label(2), Some(VertexSet::singleton(2)));
        assert_eq!(sd.label(3), Some(VertexSet::from_slice(&[1, 2])));
        // Edges are {1,3} and {2,3} (the two flags).
        assert!(sd.complex().contains(VertexSet::from_slice(&[1, 3])));
        assert!(sd.complex().contains(VertexSet::from_slice(&[2, 3])));
        assert!(!sd.complex().contains(VertexSet::from_slice(&[1, 2])));

        // Subdivision of ∂Δ² is a hexagon: 6 vertices, 6 edges, flags only.
        let sd = SimplicialComplex::simplex_boundary(3).barycentric_subdivision();
        assert_eq!(sd.complex().faces_of_card(1).len(), 6);
        assert_eq!(sd.complex().faces_of_card(2).len(), 6);
        assert_eq!(sd.complex().faces_of_card(3).len(), 0);
        assert_eq!(sd.complex().reduced_euler_characteristic(), -1); // circle
    }

    #[test]
    fn dual_blocks_examples() {
        // Two points: P is a path v1 - apex - v2.
        let s0 = SimplicialComplex::simplex_boundary(2);
        let pair = s0.dual_blocks_pair(VertexSet::full(2)).unwrap();
        assert_eq!(pair.ambient.faces_of_card(1).len(), 3);
        assert_eq!(pair.ambient.faces_of_card(2).len(), 2);
        // P_[2] = both endpoints.
        assert_eq!(pair.sub.faces_of_card(1).len(), 2);
        assert_eq!(pair.sub.faces_of_card(2).len(), 0);

        let pair1 = s0.dual_blocks_pair(VertexSet::singleton(1)).unwrap();
        assert_eq!(pair1.sub.faces_of_card(1).len(), 1);

        // 4-cycle: P is the cone over an 8-cycle; P_all is the full 8-cycle.
        let square =
            SimplicialComplex::from_facet_lists(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap();
        let pair = square.dual_blocks_pair(VertexSet::full(4)).unwrap();
        assert_eq!(pair.sub.faces_of_card(1).len(), 8);
        assert_eq!(pair.sub.faces_of_card(2).len(), 8);
        assert_eq!(pair.sub.reduced_euler_characteristic(), -1); // circle
        let sd = square.cone_over_subdivision();
        // P_α for α = {1,3} (two opposite vertices): blocks dual to 1 and 3.
        let sub = sd.dual_block_subcomplex(VertexSet::from_slice(&[1, 3]));
        // Each closed dual block of a vertex in the 4-cycle is a path of two
        // edges (vertex barycenter joined to the two adjacent edge
        // barycenters); the two blocks are disjoint.
        assert_eq!(sub.faces_of_card(1).len(), 6);
        assert_eq!(sub.faces_of_card(2).len(), 4);
    }

    #[test]
    fn facets_and_euler() {
        let c = SimplicialComplex::from_facet_lists(3, &[&[1, 2], &[3]]).unwrap();
        let mut fs: Vec<Vec<usize>> = c.facets().iter().map(|f| f.to_vec()).collect();
        fs.sort();
        assert_eq!(fs, vec![vec![1, 2], vec![3]]);

        // S⁰: reduced Euler characteristic 1; {∅}: −1.
        assert_eq!(
            SimplicialComplex::simplex_boundary(2).reduced_euler_characteristic(),
            1
        );
        assert_eq!(
            SimplicialComplex::empty_complex(3).reduced_euler_characteristic(),
            -1
        );

        let removed = c.without_facet(VertexSet::from_slice(&[1, 2])).unwrap();
        assert_eq!(removed.face_count(), c.face_count() - 1);
        assert!(c.without_facet(VertexSet::singleton(1)).is_err());
    }
}
