//! Cohomology rings of model algebras.
//!
//! [`cohomology_ring`] turns an algebra-side model into a
//! [`RingPresentation`]: a canonically ordered list of cohomology
//! generators (free and torsion, with deterministic representatives
//! inherited from the homology engine) together with the sparse table of
//! structure constants obtained by multiplying representatives and
//! re-expressing the product modulo coboundaries.  [`star_product`]
//! multiplies classes of two support components inside the full squarefree
//! model and reduces into the union component, mirroring how top classes of
//! products of spheres assemble from smaller pieces.
//!
//! Structure constants are stored as exact rationals whatever the
//! coefficient ring; torsion coordinates are canonicalized modulo their
//! orders, and mod-p rings canonicalize modulo p.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::based::BasedComplex;
use crate::error::{Error, Result};
use crate::homology::{decompose_degree, CoefficientRing, CohomologyGroup, DegreeDecomposition};
use crate::matrix::Mat;
use crate::models::{Arena, DGAModel, Family, ModelVariant, Monomial};
use crate::scalar::{EuclideanScalar, Scalar};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::VertexSet;
use crate::{Int, IntMat, Rat};

pub use crate::rewrite::{multiply, normal_form};

/// One cohomology generator of a ring presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingGenerator {
    /// Label of the leading monomial of the representative (disambiguated
    /// with `#k` when several generators share it).
    pub name: String,
    pub degree: i64,
    /// Zero for a free generator, the torsion order (≥ 2) otherwise.
    pub order: Int,
    /// Representative cocycle over the model basis of this degree.
    pub representative: Vec<Rat>,
}

/// A graded ring given by generators and sparse structure constants.
///
/// Generators are ordered by (degree, free generators in multidegree order,
/// torsion generators by invariant-factor index); torsion generators may
/// combine several multidegree blocks and are therefore ordered after the
/// free ones.  `products[(i, j)]` holds the nonzero coordinates of
/// `gᵢ · gⱼ` over the generators of degree `deg(i) + deg(j)`; pairs whose
/// product degree exceeds `maxdeg` are not stored.
#[derive(Debug, Clone)]
pub struct RingPresentation {
    pub coefficients: CoefficientRing,
    pub maxdeg: i64,
    pub generators: Vec<RingGenerator>,
    pub products: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
}

fn rat_int(r: &Rat) -> Int {
    debug_assert!(r.is_integer(), "expected an integral coordinate");
    r.to_integer()
}

impl RingPresentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Indices of the generators living in one degree.
    pub fn generator_indices_in_degree(&self, degree: i64) -> Vec<usize> {
        self.generators
            .iter()
            .enumerate()
            .filter(|(_, g)| g.degree == degree)
            .map(|(i, _)| i)
            .collect()
    }

    /// Additive shape of one degree, reassembled from the generator list.
    pub fn group_in_degree(&self, degree: i64) -> CohomologyGroup {
        let mut free_rank = 0;
        let mut torsion = Vec::new();
        for g in &self.generators {
            if g.degree == degree {
                if g.order.is_zero() {
                    free_rank += 1;
                } else {
                    torsion.push(g.order.clone());
                }
            }
        }
        CohomologyGroup {
            degree,
            free_rank,
            torsion,
            representatives: Vec::new(),
        }
    }

    /// Structure constants of `gᵢ · gⱼ` (empty when the product vanishes or
    /// its degree exceeds `maxdeg`).
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        self.products.get(&(i, j)).map_or(&[], |v| v.as_slice())
    }

    pub fn find_generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Canonical form of a coordinate at a target generator: reduced modulo
    /// the torsion order over `ℤ`, modulo `p` over `ℤ/p`, exact over `ℚ`.
    fn canonical(&self, target: usize, v: Rat) -> Rat {
        match self.coefficients {
            CoefficientRing::Q => v,
            CoefficientRing::Zp(p) => Rat::from_integer(num_integer::Integer::mod_floor(
                &rat_int(&v),
                &Int::from(p),
            )),
            CoefficientRing::Z => {
                let o = &self.generators[target].order;
                if o.is_zero() {
                    v
                } else {
                    Rat::from_integer(num_integer::Integer::mod_floor(&rat_int(&v), o))
                }
            }
        }
    }

    fn dense_product(&self, i: usize, j: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.generators.len()];
        for (t, c) in self.product(i, j) {
            out[*t] = c.clone();
        }
        out
    }

    /// Pairs of generators violating graded commutativity
    /// `x·y = (−1)^{deg x · deg y} y·x`; empty for every model the crate
    /// produces.
    pub fn commutativity_report(&self) -> Vec<(usize, usize)> {
        let n = self.generators.len();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i..n {
                let di = self.generators[i].degree;
                let dj = self.generators[j].degree;
                if di + dj > self.maxdeg {
                    continue;
                }
                let sign = if (di * dj) % 2 == 0 {
                    Rat::one()
                } else {
                    -Rat::one()
                };
                let ij = self.dense_product(i, j);
                let ji = self.dense_product(j, i);
                let ok = (0..n).all(|t| {
                    self.canonical(t, ij[t].clone())
                        == self.canonical(t, &sign * &ji[t])
                });
                if !ok {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    /// Assert associativity of the structure constants on every generator
    /// triple whose total degree stays within `maxdeg`.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.generators.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let total = self.generators[i].degree
                        + self.generators[j].degree
                        + self.generators[k].degree;
                    if total > self.maxdeg {
                        continue;
                    }
                    let mut lhs = vec![Rat::zero(); n];
                    for (t, c) in self.product(i, j) {
                        for (u, d) in self.product(*t, k) {
                            lhs[*u] += c * d;
                        }
                    }
                    let mut rhs = vec![Rat::zero(); n];
                    for (t, c) in self.product(j, k) {
                        for (u, d) in self.product(i, *t) {
                            rhs[*u] += c * d;
                        }
                    }
                    let ok = (0..n).all(|u| {
                        self.canonical(u, lhs[u].clone()) == self.canonical(u, rhs[u].clone())
                    });
                    if !ok {
                        return Err(Error::Verification(format!(
                            "associativity fails on generators ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Count the 0/1 combinations `e` of degree-0 generators with
    /// `e·e = e`.  Over `ℤ/2` every combination passes (each element
    /// squares to itself); over `ℤ` only the honest component indicators
    /// among the 0/1 vectors do.  Limited to 16 degree-0 generators.
    pub fn count_idempotent_combinations(&self) -> Result<usize> {
        let zero_gens = self.generator_indices_in_degree(0);
        if zero_gens.len() > 16 {
            return Err(Error::Verification(format!(
                "idempotent scan limited to 16 degree-0 generators, got {}",
                zero_gens.len()
            )));
        }
        let n = self.generators.len();
        let mut count = 0;
        for mask in 0u32..(1 << zero_gens.len()) {
            let picked: Vec<usize> = zero_gens
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &g)| g)
                .collect();
            let mut square = vec![Rat::zero(); n];
            for &i in &picked {
                for &j in &picked {
                    for (t, c) in self.product(i, j) {
                        square[*t] += c;
                    }
                }
            }
            let mut target = vec![Rat::zero(); n];
            for &i in &picked {
                target[i] = Rat::one();
            }
            let ok = (0..n).all(|t| {
                self.canonical(t, square[t].clone()) == self.canonical(t, target[t].clone())
            });
            if ok {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// Compute the cohomology ring of an algebra-side model through `maxdeg`.
///
/// Representatives come from the homology engine degree by degree; each
/// ordered pair of generators is multiplied at the cochain level through
/// the rewriting rules and re-expressed in the chosen generators modulo
/// coboundaries.  A product that cannot be expressed aborts loudly with a
/// lift failure — it would mean the stored representative data is
/// inconsistent.
pub fn cohomology_ring(
    model: &DGAModel,
    maxdeg: i64,
    coeffs: CoefficientRing,
) -> Result<RingPresentation> {
    let coeffs = coeffs.validated()?;
    if !model.variant().family.has_product() {
        return Err(Error::InvalidVariant(format!(
            "cohomology rings need an algebra-side model, got family {}",
            model.variant().family
        )));
    }
    if maxdeg > model.complex().trusted_range().1 {
        return Err(Error::MaxDegreeUntrusted(maxdeg));
    }
    match coeffs {
        CoefficientRing::Z => ring_over::<Int>(model, maxdeg, coeffs, &|m| m.clone()),
        CoefficientRing::Q => ring_over::<Rat>(model, maxdeg, coeffs, &|m| m.cast::<Rat>()),
        CoefficientRing::Zp(p) => ring_over::<crate::scalar::Fp>(model, maxdeg, coeffs, &|m| {
            m.cast_fp(p)
        }),
    }
}

fn ring_over<T: EuclideanScalar>(
    model: &DGAModel,
    maxdeg: i64,
    coeffs: CoefficientRing,
    cast: &dyn Fn(&IntMat) -> Mat<T>,
) -> Result<RingPresentation> {
    let c = model.complex();
    let mut decomps: BTreeMap<i64, DegreeDecomposition<T>> = BTreeMap::new();
    for k in 0..=maxdeg {
        decomps.insert(k, decompose_degree(c, k, cast)?);
    }

    let mut generators = Vec::new();
    let mut reps_t: Vec<Vec<T>> = Vec::new();
    for k in 0..=maxdeg {
        let decomp = &decomps[&k];
        let group = decomp.to_group();
        let labels = c.labels(k);
        for (idx, rep) in decomp.representatives().into_iter().enumerate() {
            let order = if idx < group.free_rank {
                Int::zero()
            } else {
                group.torsion[idx - group.free_rank].clone()
            };
            let lead = rep
                .iter()
                .position(|v| !v.is_zero())
                .expect("representative is nonzero");
            generators.push(RingGenerator {
                name: labels[lead].to_string(),
                degree: k,
                order,
                representative: rep.iter().map(|v| v.to_rational()).collect(),
            });
            reps_t.push(rep);
        }
    }
    // Disambiguate repeated leading monomials deterministically.
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for g in &mut generators {
        let n = seen.entry(g.name.clone()).or_insert(0);
        *n += 1;
        if *n > 1 {
            g.name = format!("{}#{n}", g.name);
        }
    }

    let mut products = BTreeMap::new();
    for i in 0..generators.len() {
        for j in 0..generators.len() {
            let di = generators[i].degree;
            let dj = generators[j].degree;
            let target = di + dj;
            if target > maxdeg {
                continue;
            }
            let mut prod = vec![T::zero(); c.rank(target)];
            let labels_i = c.labels(di);
            let labels_j = c.labels(dj);
            for (a, ca) in reps_t[i].iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (b, cb) in reps_t[j].iter().enumerate() {
                    if cb.is_zero() {
                        continue;
                    }
                    for (mono, coeff) in model.multiply(&labels_i[a], &labels_j[b])? {
                        let t = c.index_of(target, &mono).ok_or_else(|| {
                            Error::Verification(format!(
                                "product monomial {mono} missing from degree {target}"
                            ))
                        })?;
                        let term = ca.clone() * cb.clone() * T::from_int(&coeff);
                        prod[t] = prod[t].clone() + term;
                    }
                }
            }
            let coords = decomps[&target].reduce(&prod)?;
            let offset: usize = generators
                .iter()
                .take_while(|g| g.degree < target)
                .count();
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
        coefficients: coeffs,
        maxdeg,
        generators,
        products,
    })
}

/// A cohomology class of one support component of the squarefree model,
/// graded by the number of polynomial letters.
#[derive(Debug, Clone, PartialEq)]
pub struct CohomologyClass {
    pub degree: i64,
    /// Coordinates over the generators of its degree (free then torsion).
    pub coordinates: Vec<Rat>,
    /// Representative cocycle over the component basis at this degree.
    pub representative: Vec<Rat>,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|c| c.is_zero())
    }
}

fn star_cast<T: EuclideanScalar>(
    comp: &BasedComplex<Monomial>,
    degree: i64,
    cast: &dyn Fn(&IntMat) -> Mat<T>,
) -> Result<DegreeDecomposition<T>> {
    decompose_degree(comp, degree, cast)
}

/// The basis classes of one support component in every degree, in the
/// deterministic generator order of the homology engine.
pub fn component_classes(
    sigma: &SimplicialComplex,
    alpha: VertexSet,
    arena: Arena,
    coeffs: CoefficientRing,
) -> Result<Vec<CohomologyClass>> {
    let model = build_squarefree(sigma, arena)?;
    let comps = model.hochster_components()?;
    let comp = comps
        .get(&alpha)
        .ok_or_else(|| Error::WrongComponent(format!("no component with support {alpha}")))?;
    let coeffs = coeffs.validated()?;
    let mut out = Vec::new();
    for k in comp.degrees() {
        let reps: Vec<Vec<Rat>> = match coeffs {
            CoefficientRing::Z => star_cast::<Int>(comp, k, &|m| m.clone())?
                .representatives()
                .iter()
                .map(|r| r.iter().map(|v| v.to_rational()).collect())
                .collect(),
            CoefficientRing::Q => star_cast::<Rat>(comp, k, &|m| m.cast::<Rat>())?.representatives(),
            CoefficientRing::Zp(p) => {
                star_cast::<crate::scalar::Fp>(comp, k, &|m| m.cast_fp(p))?
                    .representatives()
                    .iter()
                    .map(|r| r.iter().map(|v| v.to_rational()).collect())
                    .collect()
            }
        };
        let count = reps.len();
        for (idx, rep) in reps.into_iter().enumerate() {
            let mut coords = vec![Rat::zero(); count];
            coords[idx] = Rat::one();
            out.push(CohomologyClass {
                degree: k,
                coordinates: coords,
                representative: rep,
            });
        }
    }
    Ok(out)
}

fn build_squarefree(sigma: &SimplicialComplex, arena: Arena) -> Result<DGAModel> {
    crate::models::build_model(sigma, ModelVariant::new(Family::B, arena))
}

/// Multiply a class of the `α`-component with a class of the `β`-component
/// inside the full squarefree model and reduce into the `(α∪β)`-component.
///
/// In the complex (and odd) arenas the product vanishes whenever
/// `α ∩ β ≠ ∅`, because every shared index contributes a same-index letter
/// pair; in the real arenas shared indices fold instead.  With `β = ∅` the
/// unit component acts as the identity.
pub fn star_product(
    sigma: &SimplicialComplex,
    alpha: VertexSet,
    beta: VertexSet,
    a: &CohomologyClass,
    b: &CohomologyClass,
    arena: Arena,
    coeffs: CoefficientRing,
) -> Result<CohomologyClass> {
    let coeffs = coeffs.validated()?;
    match coeffs {
        CoefficientRing::Z => {
            star_over::<Int>(sigma, alpha, beta, a, b, arena, &|m| m.clone(), &|r| rat_int(r))
        }
        CoefficientRing::Q => {
            star_over::<Rat>(sigma, alpha, beta, a, b, arena, &|m| m.cast::<Rat>(), &|r| r.clone())
        }
        CoefficientRing::Zp(p) => star_over::<crate::scalar::Fp>(
            sigma,
            alpha,
            beta,
            a,
            b,
            arena,
            &|m| m.cast_fp(p),
            &move |r| {
                crate::scalar::fp(
                    i64::try_from(rat_int(r)).expect("canonical residue fits"),
                    p,
                )
            },
        ),
    }
}

#[allow(clippy::too_many_arguments)]
fn star_over<T: EuclideanScalar>(
    sigma: &SimplicialComplex,
    alpha: VertexSet,
    beta: VertexSet,
    a: &CohomologyClass,
    b: &CohomologyClass,
    arena: Arena,
    cast: &dyn Fn(&IntMat) -> Mat<T>,
    lift: &dyn Fn(&Rat) -> T,
) -> Result<CohomologyClass> {
    let model = build_squarefree(sigma, arena)?;
    let comps = model.hochster_components()?;
    let comp_a = comps
        .get(&alpha)
        .ok_or_else(|| Error::WrongComponent(format!("no component with support {alpha}")))?;
    let comp_b = comps
        .get(&beta)
        .ok_or_else(|| Error::WrongComponent(format!("no component with support {beta}")))?;
    let union = alpha.union(beta);
    let comp_u = comps
        .get(&union)
        .ok_or_else(|| Error::WrongComponent(format!("no component with support {union}")))?;
    if a.representative.len() != comp_a.rank(a.degree) {
        return Err(Error::WrongComponent(format!(
            "first factor is not a degree-{} cochain of the {alpha}-component",
            a.degree
        )));
    }
    if b.representative.len() != comp_b.rank(b.degree) {
        return Err(Error::WrongComponent(format!(
            "second factor is not a degree-{} cochain of the {beta}-component",
            b.degree
        )));
    }
    let target = a.degree + b.degree;
    let mut prod = vec![T::zero(); comp_u.rank(target)];
    let labels_a = comp_a.labels(a.degree);
    let labels_b = comp_b.labels(b.degree);
    let variant = ModelVariant::new(Family::B, arena);
    for (i, ca) in a.representative.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.representative.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            for (mono, coeff) in multiply(&labels_a[i], &labels_b[j], sigma, &variant) {
                let t = comp_u.index_of(target, &mono).ok_or_else(|| {
                    Error::Verification(format!(
                        "product monomial {mono} missing from the union component"
                    ))
                })?;
                let term = lift(ca) * lift(cb) * T::from_int(&coeff);
                prod[t] = prod[t].clone() + term;
            }
        }
    }
    let decomp = decompose_degree(comp_u, target, cast)?;
    let coords = decomp.reduce(&prod)?;
    Ok(CohomologyClass {
        degree: target,
        coordinates: coords.iter().map(|v| v.to_rational()).collect(),
        representative: prod.iter().map(|v| v.to_rational()).collect(),
    })
}
