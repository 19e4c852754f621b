//! Homology of based complexes over ℤ, ℚ, and prime fields.
//!
//! The computation at one degree runs per multidegree block when the complex
//! is multigraded (the differential preserves the multigrading, so blocks
//! never interact).  Within a block:
//!
//! 1. Smith normal form of the outbound differential describes the kernel
//!    lattice.
//! 2. The inbound differential is rewritten in kernel coordinates; its Smith
//!    normal form presents the quotient kernel/image.
//! 3. Generators are read off from the change-of-basis matrices: free
//!    generators first, then torsion generators with their invariant factors.
//!
//! All change-of-basis data is retained so that an arbitrary cocycle can be
//! reduced to exact coordinates in the chosen basis afterwards
//! ([`DegreeDecomposition::reduce`]).  Representatives are never rescaled:
//! `reduce` applied to the `j`-th stored representative returns the `j`-th
//! standard coordinate vector, which is what makes downstream structure
//! constants reproducible.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::based::BasedComplex;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scalar::{is_prime, EuclideanScalar, Fp, Scalar};
use crate::snf::smith_normal_form;
use crate::vertex_set::MultiIndex;
use crate::{Int, IntMat, Rat};

/// Ground ring of a homology computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientRing {
    /// The integers.
    Z,
    /// The rationals.
    Q,
    /// The prime field ℤ/p.
    Zp(u64),
}

impl CoefficientRing {
    /// Parses the CLI spelling `z | q | zp:<p>` (case-insensitive).
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim().to_ascii_lowercase();
        match t.as_str() {
            "z" => Ok(CoefficientRing::Z),
            "q" => Ok(CoefficientRing::Q),
            _ => match t.strip_prefix("zp:") {
                Some(rest) => {
                    let p: u64 = rest.parse().map_err(|_| {
                        Error::Parse(format!("bad coefficient ring `{text}`"))
                    })?;
                    CoefficientRing::Zp(p).validated()
                }
                None => Err(Error::Parse(format!(
                    "bad coefficient ring `{text}` (expected z, q, or zp:<prime>)"
                ))),
            },
        }
    }

    /// Checks the primality constraint on ℤ/p.
    pub fn validated(self) -> Result<Self> {
        if let CoefficientRing::Zp(p) = self {
            if !is_prime(p) {
                return Err(Error::ModulusNotPrime(p));
            }
        }
        Ok(self)
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Z => write!(f, "Z"),
            CoefficientRing::Q => write!(f, "Q"),
            CoefficientRing::Zp(p) => write!(f, "Z/{p}"),
        }
    }
}

/// One cohomology (or homology) group in fully reduced form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub degree: i64,
    pub free_rank: usize,
    /// Invariant factors `d₁ | d₂ | …`, each ≥ 2.
    pub torsion: Vec<Int>,
    /// Cocycle coordinate vectors in the complex's basis at this degree:
    /// free generators first, then torsion generators in `torsion` order.
    pub representatives: Vec<Vec<Rat>>,
}

impl CohomologyGroup {
    /// Number of stored generators (free plus torsion).
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Dimension after tensoring with ℚ.
    pub fn rational_rank(&self) -> usize {
        self.free_rank
    }

    /// `(free_rank, torsion)` — the data compared in isomorphism checks.
    pub fn shape(&self) -> GroupShape {
        (self.free_rank, self.torsion.clone())
    }
}

/// Free rank together with the torsion orders of a finitely generated group.
pub type GroupShape = (usize, Vec<Int>);

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Homology of a single multidegree block at one degree, together with the
/// change-of-basis data needed to express arbitrary cocycles of the block in
/// the chosen generators.
#[derive(Clone)]
struct BlockDecomposition<T: EuclideanScalar> {
    /// `v⁻¹` of the outbound Smith normal form (rows `out_rank..` give kernel
    /// coordinates).
    out_v_inv: Mat<T>,
    out_rank: usize,
    /// `u` of the Smith normal form of the inbound differential written in
    /// kernel coordinates.
    in_u: Mat<T>,
    in_rank: usize,
    /// How many of the inbound invariant factors are units.
    unit_count: usize,
    /// The non-unit invariant factors (the block's torsion orders).
    orders: Vec<T>,
    free_reps: Vec<Vec<T>>,
    torsion_reps: Vec<Vec<T>>,
}

impl<T: EuclideanScalar> BlockDecomposition<T> {
    /// `outbound`: differential out of the block; `inbound`: differential
    /// into it.  Requires `outbound ∘ inbound = 0`.
    fn new(outbound: &Mat<T>, inbound: &Mat<T>) -> Result<Self> {
        let n = outbound.cols();
        assert_eq!(inbound.rows(), n, "block dimensions disagree");

        let out = smith_normal_form(outbound);
        let r = out.rank;
        let nullity = n - r;
        let kernel = out.kernel_basis();

        // Inbound differential in the coordinates diagonalizing the outbound
        // one.  d∘d = 0 forces the first `r` rows to vanish; a nonzero entry
        // means the complex was not a complex over this scalar (possible for
        // complexes that are only complexes modulo a prime).
        let w = out.v_inv.mul(inbound);
        for i in 0..r {
            for j in 0..w.cols() {
                if !w[(i, j)].is_zero() {
                    return Err(Error::Verification(
                        "inbound differential does not land in the kernel of the outbound one"
                            .to_string(),
                    ));
                }
            }
        }
        let lower: Vec<usize> = (r..n).collect();
        let c = w.select_rows(&lower);

        let inn = smith_normal_form(&c);
        let t = inn.rank;
        let factors = inn.invariant_factors();
        let unit_count = factors.iter().take_while(|f| f.is_unit()).count();
        let orders: Vec<T> = factors[unit_count..].to_vec();

        // Generator j of the quotient has kernel coordinates u⁻¹·e_j; pushing
        // through the kernel basis gives coordinates in the block basis.
        let rep = |j: usize| -> Vec<T> { kernel.mul_vec(&inn.u_inv.column(j)) };
        let free_reps: Vec<Vec<T>> = (t..nullity).map(rep).collect();
        let torsion_reps: Vec<Vec<T>> = (unit_count..t).map(rep).collect();

        Ok(BlockDecomposition {
            out_v_inv: out.v_inv,
            out_rank: r,
            in_u: inn.u,
            in_rank: t,
            unit_count,
            orders,
            free_reps,
            torsion_reps,
        })
    }

    /// Coordinates of a block cocycle: `(free part, raw torsion part)`.  The
    /// raw torsion coordinates are only meaningful modulo `orders` and are
    /// canonicalized by the caller after cross-block recombination.
    fn reduce(&self, x: &[T]) -> Result<(Vec<T>, Vec<T>)> {
        let w = self.out_v_inv.mul_vec(x);
        if w[..self.out_rank].iter().any(|e| !e.is_zero()) {
            return Err(Error::LiftFailure(
                "vector is not a cocycle (nonzero image under the outbound differential)"
                    .to_string(),
            ));
        }
        let z = self.in_u.mul_vec(&w[self.out_rank..]);
        let free = z[self.in_rank..].to_vec();
        let torsion_raw = z[self.unit_count..self.in_rank].to_vec();
        Ok((free, torsion_raw))
    }
}

/// Full homology of a based complex at one degree over one scalar, split into
/// multidegree blocks, with reduction of arbitrary cocycles into the chosen
/// basis.
#[derive(Clone)]
pub struct DegreeDecomposition<T: EuclideanScalar> {
    degree: i64,
    ambient_rank: usize,
    /// `(basis indices at this degree, block data)` per multidegree, in
    /// multidegree order.
    blocks: Vec<(Vec<usize>, BlockDecomposition<T>)>,
    free_reps: Vec<Vec<T>>,
    /// `u` of the Smith normal form of `diag(block torsion orders)`, used to
    /// recombine per-block torsion into invariant-factor form.
    torsion_u: Mat<T>,
    /// Positions in the recombined coordinates carrying non-unit orders.
    torsion_keep: Vec<usize>,
    torsion_orders: Vec<T>,
    torsion_reps: Vec<Vec<T>>,
}

impl<T: EuclideanScalar> DegreeDecomposition<T> {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Dimension of the complex at this degree.
    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn free_rank(&self) -> usize {
        self.free_reps.len()
    }

    pub fn torsion_orders(&self) -> &[T] {
        &self.torsion_orders
    }

    pub fn free_representatives(&self) -> &[Vec<T>] {
        &self.free_reps
    }

    pub fn torsion_representatives(&self) -> &[Vec<T>] {
        &self.torsion_reps
    }

    /// Free representatives followed by torsion representatives — the order
    /// used by [`DegreeDecomposition::reduce`] coordinates.
    pub fn representatives(&self) -> Vec<Vec<T>> {
        let mut all = self.free_reps.clone();
        all.extend(self.torsion_reps.iter().cloned());
        all
    }

    pub fn generator_count(&self) -> usize {
        self.free_reps.len() + self.torsion_orders.len()
    }

    /// Exact coordinates of a cocycle in the chosen generators: free
    /// coordinates (integers/field elements) followed by torsion coordinates
    /// canonicalized to `0 ≤ c < order`.  Fails with
    /// [`Error::LiftFailure`] when the vector is not a cocycle.
    pub fn reduce(&self, x: &[T]) -> Result<Vec<T>> {
        assert_eq!(x.len(), self.ambient_rank, "cocycle has wrong length");
        let mut free = Vec::new();
        let mut torsion_raw = Vec::new();
        for (indices, block) in &self.blocks {
            let restricted: Vec<T> = indices.iter().map(|&i| x[i].clone()).collect();
            let (f, t) = block.reduce(&restricted)?;
            free.extend(f);
            torsion_raw.extend(t);
        }
        // Any part of the vector supported on indices outside every block is
        // impossible: the blocks partition the basis.
        let z = self.torsion_u.mul_vec(&torsion_raw);
        let mut out = free;
        for (pos, order) in self.torsion_keep.iter().zip(&self.torsion_orders) {
            let (_, rem) = z[*pos].div_rem_euclid(order);
            out.push(rem);
        }
        Ok(out)
    }

    /// The group in reporting form, with rational coordinates.
    pub fn to_group(&self) -> CohomologyGroup {
        let to_rat = |v: &Vec<T>| -> Vec<Rat> { v.iter().map(|e| e.to_rational()).collect() };
        let torsion: Vec<Int> = self
            .torsion_orders
            .iter()
            .map(|o| {
                let q = o.to_rational();
                assert!(q.is_integer(), "torsion order must be an integer");
                q.to_integer()
            })
            .collect();
        CohomologyGroup {
            degree: self.degree,
            free_rank: self.free_reps.len(),
            torsion,
            representatives: self
                .free_reps
                .iter()
                .chain(self.torsion_reps.iter())
                .map(to_rat)
                .collect(),
        }
    }
}

/// Writes a block-local vector into ambient coordinates.
fn scatter<T: Scalar>(ambient: usize, indices: &[usize], v: &[T]) -> Vec<T> {
    let mut full = vec![T::zero(); ambient];
    for (slot, value) in indices.iter().zip(v) {
        full[*slot] = value.clone();
    }
    full
}

/// Groups basis positions at one degree by multidegree; a single anonymous
/// block when the complex is not multigraded.
fn index_blocks<L: Clone + fmt::Display>(
    c: &BasedComplex<L>,
    degree: i64,
) -> BTreeMap<MultiIndex, Vec<usize>> {
    let mut map: BTreeMap<MultiIndex, Vec<usize>> = BTreeMap::new();
    let n = c.rank(degree);
    if n == 0 {
        return map;
    }
    match c.multidegrees(degree) {
        Some(mdegs) => {
            for (i, md) in mdegs.iter().enumerate() {
                map.entry(md.clone()).or_default().push(i);
            }
        }
        None => {
            map.insert(MultiIndex::zeros(0), (0..n).collect());
        }
    }
    map
}

/// Per-degree homology over an arbitrary Euclidean scalar.  `cast` turns the
/// stored integer differentials into matrices over the scalar.
pub fn decompose_degree<T, L>(
    c: &BasedComplex<L>,
    k: i64,
    cast: &dyn Fn(&IntMat) -> Mat<T>,
) -> Result<DegreeDecomposition<T>>
where
    T: EuclideanScalar,
    L: Clone + fmt::Display,
{
    c.require_trusted(k)?;
    let dir = c.direction();
    let outbound = cast(&c.diff(k));
    let inbound = cast(&c.diff(k - dir));
    let n = c.rank(k);

    let here = index_blocks(c, k);
    let above = index_blocks(c, k + dir);
    let below = index_blocks(c, k - dir);
    let empty: Vec<usize> = Vec::new();

    let mut blocks = Vec::new();
    let mut free_reps = Vec::new();
    let mut all_orders: Vec<T> = Vec::new();
    let mut raw_torsion_gens: Vec<Vec<T>> = Vec::new();

    for (mdeg, indices) in &here {
        let rows = above.get(mdeg).unwrap_or(&empty);
        let cols = below.get(mdeg).unwrap_or(&empty);
        let out_block = outbound.select_rows(rows).select_columns(indices);
        let in_block = inbound.select_rows(indices).select_columns(cols);
        let block = BlockDecomposition::new(&out_block, &in_block)?;
        for rep in &block.free_reps {
            free_reps.push(scatter(n, indices, rep));
        }
        for (order, rep) in block.orders.iter().zip(&block.torsion_reps) {
            all_orders.push(order.clone());
            raw_torsion_gens.push(scatter(n, indices, rep));
        }
        blocks.push((indices.clone(), block));
    }

    // Torsion from different blocks arrives as ⊕ Z/oᵢ with arbitrary orders;
    // the Smith normal form of diag(oᵢ) recombines it into invariant-factor
    // form.  New generator j is Σᵢ (u⁻¹)ᵢⱼ · gᵢ with order the j-th factor.
    let s = all_orders.len();
    let diag: Vec<(usize, usize, T)> = all_orders
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, o)| (i, i, o))
        .collect();
    let snf_t = smith_normal_form(&Mat::from_triplets(s, s, &diag));
    let factors = snf_t.invariant_factors();
    assert_eq!(factors.len(), s, "diagonal of torsion orders has full rank");
    let unit_count = factors.iter().take_while(|f| f.is_unit()).count();
    let torsion_orders: Vec<T> = factors[unit_count..].to_vec();
    let torsion_keep: Vec<usize> = (unit_count..s).collect();
    let mut torsion_reps = Vec::new();
    for j in &torsion_keep {
        let coeffs = snf_t.u_inv.column(*j);
        let mut gen = vec![T::zero(); n];
        for (i, coeff) in coeffs.iter().enumerate() {
            for (slot, value) in raw_torsion_gens[i].iter().enumerate() {
                gen[slot] = gen[slot].clone() + coeff.clone() * value.clone();
            }
        }
        torsion_reps.push(gen);
    }

    Ok(DegreeDecomposition {
        degree: k,
        ambient_rank: n,
        blocks,
        free_reps,
        torsion_u: snf_t.u,
        torsion_keep,
        torsion_orders,
        torsion_reps,
    })
}

/// Integral decomposition (the one whose torsion data feeds universal
/// coefficients and ring structure constants).
pub fn decompose_integral<L: Clone + fmt::Display>(
    c: &BasedComplex<L>,
    k: i64,
) -> Result<DegreeDecomposition<Int>> {
    decompose_degree(c, k, &|m: &IntMat| m.clone())
}

/// Homology/cohomology of `c` at degree `k` with the given coefficients.
pub fn homology<L: Clone + fmt::Display>(
    c: &BasedComplex<L>,
    k: i64,
    coeffs: CoefficientRing,
) -> Result<CohomologyGroup> {
    match coeffs.validated()? {
        CoefficientRing::Z => Ok(decompose_integral(c, k)?.to_group()),
        CoefficientRing::Q => {
            Ok(decompose_degree::<Rat, L>(c, k, &|m: &IntMat| m.cast::<Rat>())?.to_group())
        }
        CoefficientRing::Zp(p) => {
            Ok(decompose_degree::<Fp, L>(c, k, &|m: &IntMat| m.cast_fp(p))?.to_group())
        }
    }
}

/// All homology groups of `c` over the trusted degree range (restricted to
/// degrees where the complex has a basis, plus their immediate neighbors, so
/// zero groups adjacent to support are reported).
pub fn homology_all<L: Clone + fmt::Display>(
    c: &BasedComplex<L>,
    coeffs: CoefficientRing,
) -> Result<Vec<CohomologyGroup>> {
    let degrees = c.degrees();
    let Some(&lo) = degrees.first() else {
        return Ok(Vec::new());
    };
    let hi = *degrees.last().expect("nonempty");
    let (tlo, thi) = c.trusted_range();
    let mut out = Vec::new();
    for k in lo.max(tlo)..=hi.min(thi) {
        out.push(homology(c, k, coeffs)?);
    }
    Ok(out)
}

/// Dimension over ℤ/p predicted by universal coefficients from the integral
/// groups: `free_rank(k) + #{dᵢ(k) : p | dᵢ} + #{dᵢ(adjacent) : p | dᵢ}`,
/// where the adjacent degree is `k + direction` (the Tor term lives one step
/// along the differential).  Pass `adjacent = None` when that group is zero.
pub fn universal_coefficient_rank(
    at_k: &CohomologyGroup,
    adjacent: Option<&CohomologyGroup>,
    p: u64,
) -> usize {
    let pi = Int::from(p);
    let count = |g: &CohomologyGroup| {
        g.torsion
            .iter()
            .filter(|d| (*d % &pi).is_zero())
            .count()
    };
    at_k.free_rank + count(at_k) + adjacent.map_or(0, count)
}

/// Cross-checks homology over ℤ/p against the prediction of universal
/// coefficients from the integral computation at `k` and `k + direction`.
pub fn check_universal_coefficients<L: Clone + fmt::Display>(
    c: &BasedComplex<L>,
    k: i64,
    p: u64,
) -> Result<()> {
    let integral = homology(c, k, CoefficientRing::Z)?;
    let adjacent = homology(c, k + c.direction(), CoefficientRing::Z)?;
    let field = homology(c, k, CoefficientRing::Zp(p))?;
    let expected = universal_coefficient_rank(&integral, Some(&adjacent), p);
    if field.free_rank != expected {
        return Err(Error::Verification(format!(
            "universal coefficients mismatch at degree {k} over Z/{p}: computed rank {}, expected {expected}",
            field.free_rank
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::based::TRUST_ALL;
    use num_traits::One;

    /// Chain complex 0 → Z --(×2)--> Z → 0 in degrees 1, 0.
    fn doubling() -> BasedComplex<String> {
        BasedComplex::builder(-1)
            .basis(1, vec!["a".to_string()])
            .basis(0, vec!["x".to_string()])
            .diff_entry(1, 0, 0, Int::from(2))
            .build()
            .unwrap()
    }

    /// Simplicial cochain complex of a triangle's boundary (3 vertices,
    /// 3 edges), written down by hand.
    fn circle_cochains() -> BasedComplex<String> {
        let verts = vec!["v1".into(), "v2".into(), "v3".into()];
        let edges = vec!["e12".into(), "e13".into(), "e23".into()];
        // (δa)(vi vj) = a(vj) − a(vi)
        BasedComplex::builder(1)
            .basis(0, verts)
            .basis(1, edges)
            .diff_entries(
                0,
                vec![
                    (0, 0, Int::from(-1)),
                    (0, 1, Int::from(1)),
                    (1, 0, Int::from(-1)),
                    (1, 2, Int::from(1)),
                    (2, 1, Int::from(-1)),
                    (2, 2, Int::from(1)),
                ],
            )
            .build()
            .unwrap()
    }

    /// Two multidegree blocks with coprime torsion (×2 and ×3) plus one free
    /// block, to exercise recombination.
    fn blocked() -> BasedComplex<String> {
        BasedComplex::builder(-1)
            .basis_with_multidegrees(
                1,
                vec!["a".to_string(), "b".to_string()],
                vec![MultiIndex(vec![1, 0]), MultiIndex(vec![0, 1])],
            )
            .basis_with_multidegrees(
                0,
                vec!["x".to_string(), "y".to_string(), "z".to_string()],
                vec![
                    MultiIndex(vec![1, 0]),
                    MultiIndex(vec![0, 1]),
                    MultiIndex(vec![0, 0]),
                ],
            )
            .diff_entry(1, 0, 0, Int::from(2))
            .diff_entry(1, 1, 1, Int::from(3))
            .build()
            .unwrap()
    }

    #[test]
    fn cokernel_of_doubling() {
        let c = doubling();
        let h0 = homology(&c, 0, CoefficientRing::Z).unwrap();
        assert_eq!(h0.free_rank, 0);
        assert_eq!(h0.torsion, vec![Int::from(2)]);
        assert_eq!(h0.representatives.len(), 1);
        let h1 = homology(&c, 1, CoefficientRing::Z).unwrap();
        assert!(h1.is_zero());

        let q0 = homology(&c, 0, CoefficientRing::Q).unwrap();
        assert!(q0.is_zero());
        let f2 = homology(&c, 0, CoefficientRing::Zp(2)).unwrap();
        assert_eq!(f2.free_rank, 1);
        let f21 = homology(&c, 1, CoefficientRing::Zp(2)).unwrap();
        assert_eq!(f21.free_rank, 1);
        let f3 = homology(&c, 0, CoefficientRing::Zp(3)).unwrap();
        assert!(f3.is_zero());
    }

    #[test]
    fn circle_has_two_free_groups() {
        let c = circle_cochains();
        let h0 = homology(&c, 0, CoefficientRing::Z).unwrap();
        assert_eq!((h0.free_rank, h0.torsion.len()), (1, 0));
        let h1 = homology(&c, 1, CoefficientRing::Z).unwrap();
        assert_eq!((h1.free_rank, h1.torsion.len()), (1, 0));

        // The degree-0 representative must be a constant function.
        let rep = &h0.representatives[0];
        assert!(rep.iter().all(|e| e == &rep[0]) && !rep[0].is_zero());

        // A non-cocycle cannot be reduced.
        let d = decompose_integral(&c, 0).unwrap();
        let err = d
            .reduce(&[Int::one(), Int::zero(), Int::zero()])
            .unwrap_err();
        assert!(matches!(err, Error::LiftFailure(_)));
    }

    #[test]
    fn coprime_blocks_recombine_to_invariant_factors() {
        let c = blocked();
        let h0 = homology(&c, 0, CoefficientRing::Z).unwrap();
        // Z/2 ⊕ Z/3 ⊕ Z = Z/6 ⊕ Z.
        assert_eq!(h0.free_rank, 1);
        assert_eq!(h0.torsion, vec![Int::from(6)]);

        let d = decompose_integral(&c, 0).unwrap();
        // x has order 2, hence maps to the unique order-2 element 3·g of Z/6.
        let coords_x = d
            .reduce(&[Int::one(), Int::zero(), Int::zero()])
            .unwrap();
        assert_eq!(coords_x, vec![Int::zero(), Int::from(3)]);
        // y has order 3: coordinate 2 or 4.
        let coords_y = d
            .reduce(&[Int::zero(), Int::one(), Int::zero()])
            .unwrap();
        assert!(coords_y[0].is_zero());
        assert!(coords_y[1] == Int::from(2) || coords_y[1] == Int::from(4));
    }

    #[test]
    fn representatives_reduce_to_standard_coordinates() {
        for c in [doubling(), circle_cochains(), blocked()] {
            for k in c.degrees() {
                let d = decompose_integral(&c, k).unwrap();
                let reps = d.representatives();
                for (j, rep) in reps.iter().enumerate() {
                    let coords = d.reduce(rep).unwrap();
                    for (i, coeff) in coords.iter().enumerate() {
                        let expected = if i == j { Int::one() } else { Int::zero() };
                        assert_eq!(coeff, &expected, "degree {k} generator {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn universal_coefficients_hold_on_examples() {
        for c in [doubling(), circle_cochains(), blocked()] {
            for k in c.degrees() {
                for p in [2, 3, 5] {
                    check_universal_coefficients(&c, k, p).unwrap();
                }
            }
        }
    }

    #[test]
    fn trusted_range_is_enforced() {
        let c = BasedComplex::<String>::builder(1)
            .basis(0, vec!["x".to_string()])
            .trusted(0, 0)
            .build()
            .unwrap();
        assert_eq!(c.trusted_range(), (0, 0));
        assert!(homology(&c, 0, CoefficientRing::Z).is_ok());
        let err = homology(&c, 1, CoefficientRing::Z).unwrap_err();
        assert!(matches!(err, Error::OutsideTrustedRange { .. }));
        assert_eq!(TRUST_ALL.0, i64::MIN);
    }

    #[test]
    fn coefficient_ring_parsing() {
        assert_eq!(CoefficientRing::parse("z").unwrap(), CoefficientRing::Z);
        assert_eq!(CoefficientRing::parse("Q").unwrap(), CoefficientRing::Q);
        assert_eq!(
            CoefficientRing::parse("zp:7").unwrap(),
            CoefficientRing::Zp(7)
        );
        assert!(matches!(
            CoefficientRing::parse("zp:6").unwrap_err(),
            Error::ModulusNotPrime(6)
        ));
        assert!(matches!(
            CoefficientRing::parse("gf:4").unwrap_err(),
            Error::Parse(_)
        ));
        assert_eq!(CoefficientRing::Zp(5).to_string(), "Z/5");
    }

    #[test]
    fn group_display() {
        let g = CohomologyGroup {
            degree: 3,
            free_rank: 2,
            torsion: vec![Int::from(2), Int::from(4)],
            representatives: vec![],
        };
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/4");
        let zero = CohomologyGroup {
            degree: 0,
            free_rank: 0,
            torsion: vec![],
            representatives: vec![],
        };
        assert_eq!(zero.to_string(), "0");
    }
}
