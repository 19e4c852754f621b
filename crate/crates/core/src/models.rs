//! Finite algebra and coalgebra models of moment-angle complexes.
//!
//! For a simplicial complex on the ground set `{1..m}` and a disk dimension
//! `n`, the polyhedral product of pairs `(Dⁿ, S^{n−1})` admits finitely
//! generated (co)chain models whose basis monomials are indexed by a
//! polynomial exponent vector and a disjoint or arbitrary exterior index
//! set.  [`build_model`] materializes a [`ModelVariant`] as a
//! [`BasedComplex`] of [`Monomial`]s carrying the `ℕᵐ` multigrading, and
//! [`DGAModel`] adds the product (algebra side) or coproduct (coalgebra
//! side) together with executable checks that the differential is a
//! (co)derivation.
//!
//! The sign conventions are fixed once and used uniformly: a basis monomial
//! is read as the interleaved word of its letters ordered by index, and the
//! differential acts on the letter at index `i` with the Koszul sign
//! `(−1)^{(number of odd letters at indices < i)}`, times the global sign of
//! the arena's `d s = ±t` rule on the algebra side.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::based::BasedComplex;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::rewrite;
use crate::scalar::EuclideanScalar;
use crate::simplicial::SimplicialComplex;
use crate::snf::{has_trivial_cokernel, smith_normal_form, solve_with_image};
use crate::vertex_set::{MultiIndex, VertexSet};
use crate::{Int, IntMat};

pub use crate::monomial::{Arena, Family, Letter, ModelVariant, Monomial, Side};

/// A formal `ℤ`-linear combination of basis monomials, sorted by monomial.
pub type FormalSum = Vec<(Monomial, Int)>;

/// A formal combination of elementary tensors, sorted by (left, right).
pub type FormalTensorSum = Vec<(Monomial, Monomial, Int)>;

/// The degree of a basis monomial in the given variant.  The hat model is
/// graded by the number of polynomial letters alone (the real grading),
/// whatever the arena; all other families use the arena degrees.
pub fn model_degree(mono: &Monomial, variant: &ModelVariant) -> i64 {
    match variant.family {
        Family::HatB => mono.poly.total() as i64,
        _ => mono.degree(variant.arena),
    }
}

/// `(−1)^{number of odd letters at indices strictly below i}`.
fn prefix_sign(mono: &Monomial, arena: Arena, i: usize) -> i64 {
    let mut odd = 0usize;
    if arena.poly_is_odd() {
        odd += mono.poly.total_below(i);
    }
    if arena.ext_is_odd() {
        odd += mono.ext.count_below(i);
    }
    if odd.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Differential of a single basis monomial, as a formal sum.
///
/// Algebra side (`A`, `B`, `B̂`): each exterior index `i` is replaced by a
/// polynomial letter, and the term is dropped when the polynomial support
/// would leave the complex.  Coalgebra side (`K`, `L`): each polynomial
/// index is lowered and the exterior letter `v_i` is wedged on; terms with
/// `i` already in the exterior part vanish.
pub fn diff_terms(
    mono: &Monomial,
    sigma: &SimplicialComplex,
    variant: &ModelVariant,
) -> FormalSum {
    let arena = variant.arena;
    let mut out = Vec::new();
    match variant.family {
        Family::A | Family::B | Family::HatB => {
            for i in mono.ext.iter() {
                let poly = mono.poly.incremented(i);
                if !sigma.contains(poly.support()) {
                    continue;
                }
                let sign = arena.algebra_d_sign() * prefix_sign(mono, arena, i);
                out.push((
                    Monomial::new(poly, mono.ext.remove(i), mono.side),
                    Int::from(sign),
                ));
            }
        }
        Family::K | Family::L => {
            for i in mono.poly.support().iter() {
                if mono.ext.contains(i) {
                    continue;
                }
                let sign = prefix_sign(mono, arena, i);
                out.push((
                    Monomial::new(mono.poly.decremented(i), mono.ext.insert(i), mono.side),
                    Int::from(sign),
                ));
            }
        }
    }
    out
}

/// All exponent vectors with support equal to a face and bounded total.
fn push_exponents(
    cur: &mut MultiIndex,
    verts: &[usize],
    extra: usize,
    out: &mut Vec<MultiIndex>,
) {
    match verts.split_first() {
        None => out.push(cur.clone()),
        Some((&v, rest)) => {
            for e in 0..=extra {
                cur.set(v, 1 + e as u32);
                push_exponents(cur, rest, extra - e, out);
            }
            cur.set(v, 1);
        }
    }
}

fn enumerate_alphas(sigma: &SimplicialComplex, poly_deg: i64, bound: i64) -> Vec<MultiIndex> {
    let m = sigma.m();
    let mut out = Vec::new();
    for face in sigma.faces() {
        let k = face.len() as i64;
        if poly_deg * k > bound {
            continue;
        }
        let extra = (bound / poly_deg - k) as usize;
        let verts = face.to_vec();
        let mut cur = MultiIndex::zeros(m);
        for &v in &verts {
            cur.set(v, 1);
        }
        push_exponents(&mut cur, &verts, extra, &mut out);
    }
    out
}

fn enumerate_basis(
    sigma: &SimplicialComplex,
    variant: &ModelVariant,
    side: Side,
    bound: Option<i64>,
) -> Vec<Monomial> {
    let m = sigma.m();
    let full = VertexSet::full(m);
    let mut out = Vec::new();
    match variant.family {
        Family::B | Family::L => {
            for face in sigma.faces() {
                for tau in full.difference(face).subsets() {
                    out.push(Monomial::from_sets(m, face, tau, side));
                }
            }
        }
        Family::HatB => {
            for face in sigma.faces() {
                out.push(Monomial::from_sets(m, face, full.difference(face), side));
            }
        }
        Family::A | Family::K => {
            let alphas = match bound {
                None => vec![MultiIndex::zeros(m)],
                Some(b) => enumerate_alphas(sigma, variant.arena.poly_degree(), b),
            };
            for alpha in alphas {
                for tau in full.subsets() {
                    let mono = Monomial::new(alpha.clone(), tau, side);
                    if bound.is_none_or(|b| model_degree(&mono, variant) <= b) {
                        out.push(mono);
                    }
                }
            }
        }
    }
    out
}

/// A model complex together with its product or coproduct.
#[derive(Clone)]
pub struct DGAModel {
    sigma: SimplicialComplex,
    variant: ModelVariant,
    complex: BasedComplex<Monomial>,
}

/// Build the chosen model of a simplicial complex.
///
/// Finite families (`B`, `L`, `B̂`, and `A`/`K` over a complex without
/// vertices) are built completely and trusted in every degree.  Infinite
/// families with a truncation degree `D` are built through degree `D + 1`
/// and trusted in `0..=D`; in particular the one incomplete differential of
/// a truncated algebra model is left out rather than stored wrong.
///
/// The mod-2 polynomial model squares to zero only modulo 2; its complex is
/// checked and must be consumed with `ℤ/2` coefficients.
pub fn build_model(sigma: &SimplicialComplex, variant: ModelVariant) -> Result<DGAModel> {
    variant.check_for(sigma)?;
    let side = if variant.family.has_coproduct() {
        Side::Uv
    } else {
        Side::St
    };
    let direction = if variant.family.has_coproduct() { -1 } else { 1 };
    let infinite = variant.family.is_infinite() && !sigma.vertices().is_empty();
    let bound = if infinite {
        Some(variant.truncation.expect("validated by check_for") + 1)
    } else {
        None
    };

    let mut by_degree: BTreeMap<i64, Vec<Monomial>> = BTreeMap::new();
    for mono in enumerate_basis(sigma, &variant, side, bound) {
        by_degree
            .entry(model_degree(&mono, &variant))
            .or_default()
            .push(mono);
    }
    for labels in by_degree.values_mut() {
        let mut dec: Vec<(MultiIndex, Monomial)> =
            labels.drain(..).map(|mo| (mo.multidegree(), mo)).collect();
        dec.sort();
        *labels = dec.into_iter().map(|(_, mo)| mo).collect();
    }

    let mut index: BTreeMap<Monomial, (i64, usize)> = BTreeMap::new();
    for (&k, labels) in &by_degree {
        for (i, mo) in labels.iter().enumerate() {
            index.insert(mo.clone(), (k, i));
        }
    }

    let mut builder = BasedComplex::builder(direction);
    if matches!(variant.arena, Arena::RealMod2) {
        builder = builder.check_modulo(2);
    }
    if let Some(b) = bound {
        builder = builder.trusted(0, b - 1);
    }
    for (&k, labels) in &by_degree {
        let mdegs = labels.iter().map(|mo| mo.multidegree()).collect();
        builder = builder.basis_with_multidegrees(k, labels.clone(), mdegs);
    }
    for (&k, labels) in &by_degree {
        // A differential is stored only when the target degree is fully
        // enumerated; for a truncated cochain model that excludes the very
        // top degree.
        if direction > 0 && bound.is_some_and(|b| k + 1 > b) {
            continue;
        }
        let mut entries = Vec::new();
        for (c, mono) in labels.iter().enumerate() {
            for (target, coeff) in diff_terms(mono, sigma, &variant) {
                let &(tk, row) = index.get(&target).expect("differential target is enumerated");
                debug_assert_eq!(tk, k + direction);
                entries.push((row, c, coeff));
            }
        }
        builder = builder.diff_entries(k, entries);
    }

    Ok(DGAModel {
        sigma: sigma.clone(),
        variant,
        complex: builder.build()?,
    })
}

fn add_term(sum: &mut BTreeMap<Monomial, Int>, mono: Monomial, coeff: Int) {
    let entry = sum.entry(mono).or_insert_with(Int::zero);
    *entry += coeff;
    // zero entries are tolerated; comparisons go through `sums_equal`
}

fn sums_equal(
    a: &BTreeMap<Monomial, Int>,
    b: &BTreeMap<Monomial, Int>,
    modulus: Option<u64>,
) -> bool {
    let keys: BTreeSet<&Monomial> = a.keys().chain(b.keys()).collect();
    keys.into_iter().all(|k| {
        let mut d = a.get(k).cloned().unwrap_or_else(Int::zero);
        if let Some(v) = b.get(k) {
            d -= v;
        }
        match modulus {
            None => d.is_zero(),
            Some(p) => (d % Int::from(p)).is_zero(),
        }
    })
}

impl DGAModel {
    pub fn sigma(&self) -> &SimplicialComplex {
        &self.sigma
    }

    pub fn variant(&self) -> ModelVariant {
        self.variant
    }

    pub fn complex(&self) -> &BasedComplex<Monomial> {
        &self.complex
    }

    pub fn into_complex(self) -> BasedComplex<Monomial> {
        self.complex
    }

    /// The unit monomial (not a basis element of the hat model).
    pub fn unit(&self) -> Monomial {
        let side = if self.variant.family.has_coproduct() {
            Side::Uv
        } else {
            Side::St
        };
        Monomial::unit(self.sigma.m(), side)
    }

    pub fn degree_of(&self, mono: &Monomial) -> i64 {
        model_degree(mono, &self.variant)
    }

    /// Differential of a basis monomial as a formal sum (independent of the
    /// truncation bound).
    pub fn differential_of(&self, mono: &Monomial) -> FormalSum {
        diff_terms(mono, &self.sigma, &self.variant)
    }

    /// Product of two basis monomials in normal form (algebra side only).
    pub fn multiply(&self, x: &Monomial, y: &Monomial) -> Result<FormalSum> {
        if !self.variant.family.has_product() {
            return Err(Error::InvalidVariant(format!(
                "family {} carries a coproduct, not a product",
                self.variant.family
            )));
        }
        Ok(rewrite::multiply(x, y, &self.sigma, &self.variant))
    }

    /// Coproduct of a basis monomial (coalgebra side only).
    pub fn coproduct(&self, x: &Monomial) -> Result<FormalTensorSum> {
        if !self.variant.family.has_coproduct() {
            return Err(Error::InvalidVariant(format!(
                "family {} carries a product, not a coproduct",
                self.variant.family
            )));
        }
        Ok(coproduct_terms(x, &self.variant))
    }

    fn check_modulus(&self) -> Option<u64> {
        match self.variant.arena {
            Arena::RealMod2 => Some(2),
            _ => None,
        }
    }

    /// Assert the Leibniz rule `d(xy) = (dx)y + (−1)^{|x|} x(dy)` on every
    /// pair of basis monomials, symbolically (no truncation involved).
    pub fn check_leibniz(&self) -> Result<()> {
        let modulus = self.check_modulus();
        let basis: Vec<Monomial> = self
            .complex
            .degrees()
            .into_iter()
            .flat_map(|k| self.complex.labels(k).to_vec())
            .collect();
        for x in &basis {
            let dx = self.differential_of(x);
            let x_sign = if x.degree(self.variant.arena) % 2 == 0 {
                Int::from(1)
            } else {
                Int::from(-1)
            };
            for y in &basis {
                let dy = self.differential_of(y);
                let mut lhs = BTreeMap::new();
                for (mono, c) in self.multiply(x, y)? {
                    for (target, dc) in self.differential_of(&mono) {
                        add_term(&mut lhs, target, c.clone() * dc);
                    }
                }
                let mut rhs = BTreeMap::new();
                for (mono, c) in &dx {
                    for (target, pc) in self.multiply(mono, y)? {
                        add_term(&mut rhs, target, c * &pc);
                    }
                }
                for (mono, c) in &dy {
                    for (target, pc) in self.multiply(x, mono)? {
                        add_term(&mut rhs, target, &x_sign * c * &pc);
                    }
                }
                if !sums_equal(&lhs, &rhs, modulus) {
                    return Err(Error::Verification(format!(
                        "Leibniz rule fails on {x} · {y} in {}",
                        self.variant
                    )));
                }
            }
        }
        Ok(())
    }

    /// Assert the co-Leibniz rule `Δ(dx) = (d⊗1 + 1⊗d)(Δx)` on every basis
    /// monomial, with the Koszul sign `(−1)^{|left|}` on the second summand.
    pub fn check_co_leibniz(&self) -> Result<()> {
        let modulus = self.check_modulus();
        let arena = self.variant.arena;
        for k in self.complex.degrees() {
            for x in self.complex.labels(k) {
                let mut lhs: BTreeMap<(Monomial, Monomial), Int> = BTreeMap::new();
                for (mono, c) in self.differential_of(x) {
                    for (l, r, tc) in self.coproduct(&mono)? {
                        *lhs.entry((l, r)).or_insert_with(Int::zero) += c.clone() * tc;
                    }
                }
                let mut rhs: BTreeMap<(Monomial, Monomial), Int> = BTreeMap::new();
                for (l, r, tc) in self.coproduct(x)? {
                    for (dl, c) in diff_terms(&l, &self.sigma, &self.variant) {
                        *rhs.entry((dl, r.clone())).or_insert_with(Int::zero) += &tc * c;
                    }
                    let l_sign = if l.degree(arena) % 2 == 0 {
                        Int::from(1)
                    } else {
                        Int::from(-1)
                    };
                    for (dr, c) in diff_terms(&r, &self.sigma, &self.variant) {
                        *rhs.entry((l.clone(), dr)).or_insert_with(Int::zero) +=
                            &l_sign * &tc * c;
                    }
                }
                let keys: BTreeSet<_> = lhs.keys().chain(rhs.keys()).cloned().collect();
                for key in keys {
                    let mut d = lhs.get(&key).cloned().unwrap_or_else(Int::zero);
                    if let Some(v) = rhs.get(&key) {
                        d -= v;
                    }
                    let ok = match modulus {
                        None => d.is_zero(),
                        Some(p) => (d % Int::from(p)).is_zero(),
                    };
                    if !ok {
                        return Err(Error::Verification(format!(
                            "co-Leibniz rule fails on {x} in {}",
                            self.variant
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Split a squarefree model (`B` or `L`) into its multidegree
    /// components, re-graded by the number of polynomial letters.
    ///
    /// The component of `α ⊆ {1..m}` collects the basis monomials with
    /// support exactly `α`; its cohomology in re-graded degree `d` is the
    /// reduced simplicial cohomology `H̃^{d−1}` of the full subcomplex on
    /// `α` (with `H̃^{−1}` of the empty complex contributing `ℤ` for
    /// `α = ∅`).
    pub fn hochster_components(&self) -> Result<BTreeMap<VertexSet, BasedComplex<Monomial>>> {
        if !matches!(self.variant.family, Family::B | Family::L) {
            return Err(Error::InvalidVariant(format!(
                "multidegree components require a squarefree family (B or L), got {}",
                self.variant.family
            )));
        }
        let direction = self.complex.direction();
        let mut grouped: BTreeMap<VertexSet, BTreeMap<i64, Vec<Monomial>>> = BTreeMap::new();
        for k in self.complex.degrees() {
            for mono in self.complex.labels(k) {
                grouped
                    .entry(mono.support())
                    .or_default()
                    .entry(mono.poly.total() as i64)
                    .or_default()
                    .push(mono.clone());
            }
        }
        let mut out = BTreeMap::new();
        for (alpha, mut by_deg) in grouped {
            for labels in by_deg.values_mut() {
                labels.sort();
            }
            let mut index: BTreeMap<Monomial, (i64, usize)> = BTreeMap::new();
            for (&k, labels) in &by_deg {
                for (i, mo) in labels.iter().enumerate() {
                    index.insert(mo.clone(), (k, i));
                }
            }
            let mut builder = BasedComplex::builder(direction);
            for (&k, labels) in &by_deg {
                builder = builder.basis(k, labels.clone());
            }
            for (&k, labels) in &by_deg {
                let mut entries = Vec::new();
                for (c, mono) in labels.iter().enumerate() {
                    for (target, coeff) in self.differential_of(mono) {
                        debug_assert_eq!(target.support(), alpha);
                        let &(tk, row) = index.get(&target).expect("component is closed under d");
                        debug_assert_eq!(tk, k + direction);
                        entries.push((row, c, coeff));
                    }
                }
                builder = builder.diff_entries(k, entries);
            }
            out.insert(alpha, builder.build()?);
        }
        Ok(out)
    }

    /// Compare the model of a simplex face (taken with all other vertices as
    /// ghosts) against the tensor product of its single-index factors:
    /// per-degree ranks must agree with the convolution of the factor state
    /// counts, and the stored differential must agree entrywise with the
    /// differential assembled from the factor tables with Koszul prefix
    /// signs.
    pub fn tensor_factorization(&self, face: VertexSet) -> Result<TensorFactorization> {
        if !self.sigma.contains(face) {
            return Err(Error::NotASubcomplex(format!("{face}")));
        }
        let m = self.sigma.m();
        let simplex = SimplicialComplex::from_facets(m, &[face])?;
        let model = build_model(&simplex, self.variant)?;
        let infinite = self.variant.family.is_infinite() && !face.is_empty();
        let bound = if infinite {
            Some(self.variant.truncation.expect("validated") + 1)
        } else {
            None
        };

        let states: Vec<Vec<(u32, bool, i64)>> = (1..=m)
            .map(|i| factor_states(face.contains(i), &self.variant, bound))
            .collect();
        let factor_counts: Vec<usize> = states.iter().map(|s| s.len()).collect();

        // Convolve the factor degree distributions.
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        counts.insert(0, 1);
        for per in &states {
            let mut next: BTreeMap<i64, usize> = BTreeMap::new();
            for (&d, &c) in &counts {
                for &(_, _, fd) in per {
                    let nd = d + fd;
                    if bound.is_none_or(|b| nd <= b) {
                        *next.entry(nd).or_default() += c;
                    }
                }
            }
            counts = next;
        }

        let degrees: BTreeSet<i64> = model
            .complex
            .degrees()
            .into_iter()
            .chain(counts.keys().copied())
            .collect();
        let mut per_degree = Vec::new();
        for &k in &degrees {
            if bound.is_some_and(|b| k > b) {
                continue;
            }
            let want = counts.get(&k).copied().unwrap_or(0);
            let have = model.complex.rank(k);
            if want != have {
                return Err(Error::Verification(format!(
                    "tensor factorization rank mismatch in degree {k}: model {have}, tensor {want}"
                )));
            }
            per_degree.push((k, have));
        }

        // Entrywise differential comparison from the factor tables.
        let arena = self.variant.arena;
        let direction = model.complex.direction();
        for k in model.complex.degrees() {
            if direction > 0 && bound.is_some_and(|b| k + 1 > b) {
                continue;
            }
            let d = model.complex.diff(k);
            let labels = model.complex.labels(k);
            for (c, mono) in labels.iter().enumerate() {
                let mut expected: BTreeMap<usize, i64> = BTreeMap::new();
                let mut odd_prefix = 0usize;
                for i in 1..=m {
                    let a = mono.poly.get(i);
                    let e = mono.ext.contains(i);
                    let fd = factor_differential(a, e, face.contains(i), &self.variant);
                    if let Some(((na, ne), fc)) = fd {
                        let mut poly = mono.poly.clone();
                        poly.set(i, na);
                        let ext = if ne {
                            mono.ext.insert(i)
                        } else {
                            mono.ext.remove(i)
                        };
                        let target = Monomial::new(poly, ext, mono.side);
                        let row = model
                            .complex
                            .index_of(k + direction, &target)
                            .expect("tensor differential target enumerated");
                        let sign = if odd_prefix.is_multiple_of(2) { 1 } else { -1 };
                        *expected.entry(row).or_default() += sign * fc;
                    }
                    let mut fo = 0usize;
                    if arena.poly_is_odd() {
                        fo += a as usize;
                    }
                    if arena.ext_is_odd() && e {
                        fo += 1;
                    }
                    odd_prefix += fo;
                }
                for r in 0..d.rows() {
                    let stored = &d[(r, c)];
                    let want = Int::from(expected.get(&r).copied().unwrap_or(0));
                    if *stored != want {
                        return Err(Error::Verification(format!(
                            "tensor factorization differential mismatch at degree {k}, entry ({r}, {c})"
                        )));
                    }
                }
            }
        }

        let total = per_degree.iter().map(|&(_, c)| c).sum();
        Ok(TensorFactorization {
            factor_counts,
            per_degree,
            total,
        })
    }
}

/// Outcome of a verified tensor factorization of a simplex model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorFactorization {
    /// Number of basis states of each single-index factor.
    pub factor_counts: Vec<usize>,
    /// Common per-degree rank of the model and the tensor product.
    pub per_degree: Vec<(i64, usize)>,
    /// Total rank over the compared degrees.
    pub total: usize,
}

/// Basis states `(exponent, exterior?, degree)` of the single-index factor.
fn factor_states(in_face: bool, variant: &ModelVariant, bound: Option<i64>) -> Vec<(u32, bool, i64)> {
    let pd = variant.arena.poly_degree();
    let ed = match variant.family {
        Family::HatB => 0,
        _ => variant.arena.ext_degree(),
    };
    let pd_graded = match variant.family {
        Family::HatB => 1,
        _ => pd,
    };
    match variant.family {
        Family::B | Family::L => {
            let mut out = vec![(0, false, 0), (0, true, ed)];
            if in_face {
                out.push((1, false, pd_graded));
            }
            out
        }
        Family::HatB => {
            if in_face {
                vec![(1, false, 1), (0, true, 0)]
            } else {
                vec![(0, true, 0)]
            }
        }
        Family::A | Family::K => {
            let max_a = match (in_face, bound) {
                (false, _) => 0,
                (true, None) => 0,
                (true, Some(b)) => (b / pd) as u32,
            };
            let mut out = Vec::new();
            for a in 0..=max_a {
                for e in [false, true] {
                    let deg = pd * a as i64 + ed * e as i64;
                    if bound.is_none_or(|b| deg <= b) {
                        out.push((a, e, deg));
                    }
                }
            }
            out
        }
    }
}

/// Differential of a single-index factor state, `None` when it vanishes.
fn factor_differential(
    a: u32,
    e: bool,
    in_face: bool,
    variant: &ModelVariant,
) -> Option<((u32, bool), i64)> {
    match variant.family {
        Family::A | Family::B | Family::HatB => {
            if e && in_face {
                Some(((a + 1, false), variant.arena.algebra_d_sign()))
            } else {
                None
            }
        }
        Family::K | Family::L => {
            if a >= 1 && !e {
                Some(((a - 1, true), 1))
            } else {
                None
            }
        }
    }
}

/// Coproduct of a single-index factor: list of `(left, right)` states.  All
/// per-factor signs are `+1`; Koszul signs appear only in the global
/// assembly.
fn factor_coproduct(a: u32, e: bool, variant: &ModelVariant) -> Vec<((u32, bool), (u32, bool))> {
    match (variant.family, variant.arena) {
        (Family::K, Arena::Complex { .. }) => {
            let mut out = Vec::new();
            for b in 0..=a {
                if e {
                    out.push(((b, true), (a - b, false)));
                    out.push(((b, false), (a - b, true)));
                } else {
                    out.push(((b, false), (a - b, false)));
                }
            }
            out
        }
        (Family::L, Arena::Real) => match (a, e) {
            (0, false) => vec![((0, false), (0, false))],
            (1, false) => vec![
                ((1, false), (0, false)),
                ((0, false), (1, false)),
                ((1, false), (0, true)),
            ],
            (0, true) => vec![
                ((0, true), (0, false)),
                ((0, false), (0, true)),
                ((0, true), (0, true)),
            ],
            _ => unreachable!("not a reduced factor state"),
        },
        (Family::L, _) => match (a, e) {
            (0, false) => vec![((0, false), (0, false))],
            (1, false) => vec![((1, false), (0, false)), ((0, false), (1, false))],
            (0, true) => vec![((0, true), (0, false)), ((0, false), (0, true))],
            _ => unreachable!("not a reduced factor state"),
        },
        _ => unreachable!("coproduct requested for an algebra-side family"),
    }
}

/// Coproduct of a basis monomial, assembled index by index left to right
/// with the Koszul sign `(−1)^{|accumulated right leg| · |new left factor|}`.
pub fn coproduct_terms(mono: &Monomial, variant: &ModelVariant) -> FormalTensorSum {
    assert!(variant.family.has_coproduct());
    let m = mono.m();
    let arena = variant.arena;
    let odd_of = |a: u32, e: bool| -> usize {
        let mut o = 0usize;
        if arena.poly_is_odd() {
            o += a as usize;
        }
        if arena.ext_is_odd() && e {
            o += 1;
        }
        o
    };
    // (left poly, left ext, right poly, right ext, sign, right odd count)
    let mut acc = vec![(
        MultiIndex::zeros(m),
        VertexSet::empty(),
        MultiIndex::zeros(m),
        VertexSet::empty(),
        1i64,
        0usize,
    )];
    for i in 1..=m {
        let a = mono.poly.get(i);
        let e = mono.ext.contains(i);
        if a == 0 && !e {
            continue;
        }
        let opts = factor_coproduct(a, e, variant);
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for (lp, le, rp, re, sign, rodd) in &acc {
            for &((la, lext), (ra, rext)) in &opts {
                let l_odd = odd_of(la, lext);
                let flip = (rodd * l_odd) % 2 == 1;
                let mut nlp = lp.clone();
                nlp.set(i, la);
                let nle = if lext { le.insert(i) } else { *le };
                let mut nrp = rp.clone();
                nrp.set(i, ra);
                let nre = if rext { re.insert(i) } else { *re };
                next.push((
                    nlp,
                    nle,
                    nrp,
                    nre,
                    if flip { -sign } else { *sign },
                    rodd + odd_of(ra, rext),
                ));
            }
        }
        acc = next;
    }
    let mut merged: BTreeMap<(Monomial, Monomial), Int> = BTreeMap::new();
    for (lp, le, rp, re, sign, _) in acc {
        let l = Monomial::new(lp, le, mono.side);
        let r = Monomial::new(rp, re, mono.side);
        *merged.entry((l, r)).or_insert_with(Int::zero) += Int::from(sign);
    }
    merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((l, r), c)| (l, r, c))
        .collect()
}

/// The two basis-level maps of the short exact sequence
/// `0 → M(Σ₁∩Σ₂) → M(Σ₁) ⊕ M(Σ₂) → M(Σ₁∪Σ₂) → 0`
/// of coalgebra models, with the four models themselves.
pub struct MayerVietorisData {
    pub intersection: DGAModel,
    pub first: DGAModel,
    pub second: DGAModel,
    pub union: DGAModel,
    /// Per degree: `x ↦ (x, x)`, rows indexed by the concatenated bases of
    /// the first and second model.
    pub into_sum: BTreeMap<i64, IntMat>,
    /// Per degree: `(x, y) ↦ x − y` into the union model.
    pub from_sum: BTreeMap<i64, IntMat>,
}

/// Construct the basis-level Mayer–Vietoris sequence of coalgebra models
/// for two subcomplexes of a common ground set.  For a truncated family the
/// same truncation degree is applied to all four models, so the compared
/// bases line up degree by degree.
pub fn mv_short_exact_sequences(
    sigma1: &SimplicialComplex,
    sigma2: &SimplicialComplex,
    variant: ModelVariant,
) -> Result<MayerVietorisData> {
    if !variant.family.has_coproduct() {
        return Err(Error::InvalidVariant(format!(
            "the basis-level Mayer-Vietoris sequence uses the coalgebra families (K or L), got {}",
            variant.family
        )));
    }
    let inter = sigma1.intersection(sigma2)?;
    let uni = sigma1.union(sigma2)?;
    let intersection = build_model(&inter, variant)?;
    let first = build_model(sigma1, variant)?;
    let second = build_model(sigma2, variant)?;
    let union = build_model(&uni, variant)?;

    let degrees: BTreeSet<i64> = intersection
        .complex
        .degrees()
        .into_iter()
        .chain(first.complex.degrees())
        .chain(second.complex.degrees())
        .chain(union.complex.degrees())
        .collect();
    let mut into_sum = BTreeMap::new();
    let mut from_sum = BTreeMap::new();
    for &k in &degrees {
        let r1 = first.complex.rank(k);
        let r2 = second.complex.rank(k);
        let mut into_triplets = Vec::new();
        for (j, mono) in intersection.complex.labels(k).iter().enumerate() {
            let i1 = first
                .complex
                .index_of(k, mono)
                .expect("subcomplex model basis embeds");
            let i2 = second
                .complex
                .index_of(k, mono)
                .expect("subcomplex model basis embeds");
            into_triplets.push((i1, j, Int::from(1)));
            into_triplets.push((r1 + i2, j, Int::from(1)));
        }
        into_sum.insert(
            k,
            Mat::from_triplets(r1 + r2, intersection.complex.rank(k), &into_triplets),
        );
        let mut from_triplets = Vec::new();
        for (j, mono) in first.complex.labels(k).iter().enumerate() {
            let iu = union
                .complex
                .index_of(k, mono)
                .expect("subcomplex model basis embeds");
            from_triplets.push((iu, j, Int::from(1)));
        }
        for (j, mono) in second.complex.labels(k).iter().enumerate() {
            let iu = union
                .complex
                .index_of(k, mono)
                .expect("subcomplex model basis embeds");
            from_triplets.push((iu, r1 + j, Int::from(-1)));
        }
        from_sum.insert(k, Mat::from_triplets(union.complex.rank(k), r1 + r2, &from_triplets));
    }
    Ok(MayerVietorisData {
        intersection,
        first,
        second,
        union,
        into_sum,
        from_sum,
    })
}

fn block_diag(a: &IntMat, b: &IntMat) -> IntMat {
    let mut triplets = Vec::new();
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            if !a[(r, c)].is_zero() {
                triplets.push((r, c, a[(r, c)].clone()));
            }
        }
    }
    for r in 0..b.rows() {
        for c in 0..b.cols() {
            if !b[(r, c)].is_zero() {
                triplets.push((a.rows() + r, a.cols() + c, b[(r, c)].clone()));
            }
        }
    }
    Mat::from_triplets(a.rows() + b.rows(), a.cols() + b.cols(), &triplets)
}

impl MayerVietorisData {
    /// Verify exactness degree by degree (injectivity, kernel = image over
    /// the integers, surjectivity with trivial cokernel) and that both maps
    /// commute with the differentials.
    pub fn check(&self) -> Result<()> {
        let direction = self.intersection.complex.direction();
        for (&k, into) in &self.into_sum {
            let from = &self.from_sum[&k];
            if !from.mul(into).is_zero() {
                return Err(Error::Verification(format!(
                    "Mayer-Vietoris maps do not compose to zero in degree {k}"
                )));
            }
            let s_into = smith_normal_form(into);
            if s_into.rank != into.cols()
                || !s_into.invariant_factors().iter().all(|d| d.is_unit())
            {
                return Err(Error::Verification(format!(
                    "intersection model does not embed split in degree {k}"
                )));
            }
            if from.rows() > 0 && !has_trivial_cokernel(from) {
                return Err(Error::Verification(format!(
                    "union model is not covered in degree {k}"
                )));
            }
            let kb = smith_normal_form(from).kernel_basis();
            for j in 0..kb.cols() {
                let col: Vec<Int> = (0..kb.rows()).map(|i| kb[(i, j)].clone()).collect();
                if solve_with_image(into, &col).is_none() {
                    return Err(Error::Verification(format!(
                        "kernel exceeds the image in degree {k}"
                    )));
                }
            }
        }
        for (&k, into) in &self.into_sum {
            let Some(into_next) = self.into_sum.get(&(k + direction)) else {
                continue;
            };
            let d_sum = block_diag(&self.first.complex.diff(k), &self.second.complex.diff(k));
            let lhs = d_sum.mul(into);
            let rhs = into_next.mul(&self.intersection.complex.diff(k));
            if lhs != rhs {
                return Err(Error::Verification(format!(
                    "inclusion is not a chain map at degree {k}"
                )));
            }
            let from = &self.from_sum[&k];
            let from_next = &self.from_sum[&(k + direction)];
            let lhs = self.union.complex.diff(k).mul(from);
            let rhs = from_next.mul(&d_sum);
            if lhs != rhs {
                return Err(Error::Verification(format!(
                    "difference map is not a chain map at degree {k}"
                )));
            }
        }
        Ok(())
    }
}
