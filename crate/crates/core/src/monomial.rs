//! Monomial labels for the combinatorial models, together with the vocabulary
//! describing a model: the disk family (arena), the model family, and the
//! letters monomials are written in.
//!
//! A monomial is a block word `t^α · s_τ` (algebra side) or `u_α · v_τ`
//! (coalgebra side): a polynomial exponent vector and a set of exterior
//! indices.  Since every arena has exactly one odd letter kind, the block
//! form equals the index-interleaved form with no sign, so the block word is
//! the canonical spelling.

use std::fmt;

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;
use crate::vertex_set::{MultiIndex, VertexSet};

/// The pair `(Dⁿ, S^{n−1})` the moment-angle complex is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Arena {
    /// Even `n ≥ 2`; `n = 2` is the classical polydisk case.
    Complex { n: i64 },
    /// Odd `n ≥ 3`.
    Odd { n: i64 },
    /// `(D¹, S⁰)` over the integers.
    Real,
    /// `(D¹, S⁰)` with ℤ₂ coefficients, where the full Koszul resolution
    /// exists.
    RealMod2,
}

impl Arena {
    pub fn complex(n: i64) -> Result<Arena> {
        if n >= 2 && n % 2 == 0 {
            Ok(Arena::Complex { n })
        } else {
            Err(Error::InvalidVariant(format!(
                "complex arena needs even n ≥ 2, got {n}"
            )))
        }
    }

    /// Arena of the disk pair `(Dⁿ, S^{n−1})`: `n = 1` is the real case,
    /// even `n` the complex-type case, odd `n ≥ 3` its odd companion.
    pub fn disk(n: i64) -> Result<Arena> {
        match n {
            1 => Ok(Arena::Real),
            n if n >= 2 && n % 2 == 0 => Ok(Arena::Complex { n }),
            n if n >= 3 => Ok(Arena::Odd { n }),
            _ => Err(Error::InvalidVariant(format!("disk parameter must be ≥ 1, got {n}"))),
        }
    }

    /// Degree of the polynomial letters `t` / `u`.
    pub fn poly_degree(self) -> i64 {
        match self {
            Arena::Complex { n } | Arena::Odd { n } => n,
            Arena::Real | Arena::RealMod2 => 1,
        }
    }

    /// Degree of the exterior letters `s` / `v`.
    pub fn ext_degree(self) -> i64 {
        self.poly_degree() - 1
    }

    pub fn poly_is_odd(self) -> bool {
        match self {
            // Sign bookkeeping is vacuous in characteristic 2.
            Arena::RealMod2 => false,
            other => other.poly_degree() % 2 != 0,
        }
    }

    pub fn ext_is_odd(self) -> bool {
        match self {
            Arena::RealMod2 => false,
            other => other.ext_degree() % 2 != 0,
        }
    }

    /// Sign of the algebra-side differential on `s` (`d s = ±t`): negative
    /// exactly in the real case.
    pub fn algebra_d_sign(self) -> i64 {
        match self {
            Arena::Real | Arena::RealMod2 => -1,
            _ => 1,
        }
    }
}

impl fmt::Display for Arena {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arena::Complex { n } => write!(f, "complex(n={n})"),
            Arena::Odd { n } => write!(f, "odd(n={n})"),
            Arena::Real => write!(f, "real"),
            Arena::RealMod2 => write!(f, "real-mod2"),
        }
    }
}

/// Which of the five models to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    /// Stanley–Reisner ring tensor exterior algebra (infinite unless the
    /// complex has no vertices; built truncated).
    A,
    /// Finite quotient dga of `A`.
    B,
    /// Stanley–Reisner coalgebra tensor exterior coalgebra (dual of `A`).
    K,
    /// Finite sub-dgc of `K` (dual of `B`).
    L,
    /// Full-support part of `B`: computes relative cohomology of the cone
    /// pair.
    HatB,
}

impl Family {
    /// Whether the family carries a product (algebra side).
    pub fn has_product(self) -> bool {
        matches!(self, Family::A | Family::B | Family::HatB)
    }

    /// Whether the family carries a coproduct (coalgebra side).
    pub fn has_coproduct(self) -> bool {
        matches!(self, Family::K | Family::L)
    }

    /// Whether the basis ranges over all allowed multi-indices (infinite for
    /// complexes with vertices).
    pub fn is_infinite(self) -> bool {
        matches!(self, Family::A | Family::K)
    }

    pub fn parse(text: &str) -> Result<Family> {
        match text.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Family::A),
            "b" => Ok(Family::B),
            "k" => Ok(Family::K),
            "l" => Ok(Family::L),
            "hatb" | "bhat" | "b^" => Ok(Family::HatB),
            other => Err(Error::Parse(format!("unknown model family `{other}`"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::K => write!(f, "K"),
            Family::L => write!(f, "L"),
            Family::HatB => write!(f, "hatB"),
        }
    }
}

/// A fully specified model choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelVariant {
    pub family: Family,
    pub arena: Arena,
    /// Maximal total degree built, for the infinite families.
    pub truncation: Option<i64>,
}

impl ModelVariant {
    pub fn new(family: Family, arena: Arena) -> ModelVariant {
        ModelVariant {
            family,
            arena,
            truncation: None,
        }
    }

    pub fn truncated(family: Family, arena: Arena, maxdeg: i64) -> ModelVariant {
        ModelVariant {
            family,
            arena,
            truncation: Some(maxdeg),
        }
    }

    /// The legal (family, arena) combinations:
    ///
    /// * complex: A, B, K, L, hatB
    /// * odd:     B, L, hatB
    /// * real:    B, L, hatB
    /// * real-mod2: A, B
    pub fn check_legal(&self) -> Result<()> {
        let ok = match self.arena {
            Arena::Complex { .. } => true,
            Arena::Odd { .. } | Arena::Real => {
                matches!(self.family, Family::B | Family::L | Family::HatB)
            }
            Arena::RealMod2 => matches!(self.family, Family::A | Family::B),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidVariant(format!(
                "family {} is not available in arena {}",
                self.family, self.arena
            )))
        }
    }

    /// Full validation against a complex: legality plus the truncation
    /// requirement for the infinite families.
    pub fn check_for(&self, sigma: &SimplicialComplex) -> Result<()> {
        self.check_legal()?;
        let has_vertices = !sigma.vertices().is_empty();
        if self.family.is_infinite() && has_vertices && self.truncation.is_none() {
            return Err(Error::TruncationRequired(format!(
                "family {} has infinite rank for complexes with vertices; set a maximal degree",
                self.family
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ModelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.family, self.arena)?;
        if let Some(d) = self.truncation {
            write!(f, " (≤{d})")?;
        }
        Ok(())
    }
}

/// Which letter names a monomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    /// Algebra side: polynomial `t`, exterior `s`.
    St,
    /// Coalgebra side: polynomial `u`, exterior `v`.
    Uv,
}

/// One generator letter of an algebra-side word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    /// Polynomial letter `t_i`.
    T(usize),
    /// Exterior letter `s_i`.
    S(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::T(i) | Letter::S(i) => i,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(i) => write!(f, "t{i}"),
            Letter::S(i) => write!(f, "s{i}"),
        }
    }
}

/// Canonical monomial `t^poly · s_ext` (or `u_poly · v_ext`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    pub poly: MultiIndex,
    pub ext: VertexSet,
    pub side: Side,
}

impl Monomial {
    pub fn unit(m: usize, side: Side) -> Monomial {
        Monomial {
            poly: MultiIndex::zeros(m),
            ext: VertexSet::EMPTY,
            side,
        }
    }

    pub fn new(poly: MultiIndex, ext: VertexSet, side: Side) -> Monomial {
        Monomial { poly, ext, side }
    }

    /// Squarefree polynomial part given as the index set σ.
    pub fn from_sets(m: usize, poly: VertexSet, ext: VertexSet, side: Side) -> Monomial {
        Monomial {
            poly: MultiIndex::from_set(poly, m),
            ext,
            side,
        }
    }

    pub fn m(&self) -> usize {
        self.poly.m()
    }

    /// Total (uniform) degree in the arena's grading.
    pub fn degree(&self, arena: Arena) -> i64 {
        arena.poly_degree() * self.poly.total() as i64
            + arena.ext_degree() * self.ext.len() as i64
    }

    /// Multidegree: component `i` is `polyᵢ + [i ∈ ext]`.
    pub fn multidegree(&self) -> MultiIndex {
        let mut md = self.poly.clone();
        for v in self.ext.iter() {
            md.set(v, md.get(v) + 1);
        }
        md
    }

    /// All indices occurring in the monomial.
    pub fn support(&self) -> VertexSet {
        self.poly.support().union(self.ext)
    }

    /// Whether the polynomial part is squarefree and disjoint from the
    /// exterior part (the shape of B/L basis monomials).
    pub fn is_reduced_pair(&self) -> bool {
        self.poly.is_squarefree() && self.poly.support().is_disjoint(self.ext)
    }

    /// The block word of letters: exterior letters ascending, then polynomial
    /// letters ascending with multiplicity.  Putting the exterior block first
    /// matches the normal form `s_τ tᵅ` of the mod-2 polynomial model, where
    /// the two kinds of letter do not commute at a shared index; in every
    /// other variant the two blocks commute without signs (at most one kind
    /// of letter is odd), so the choice is invisible there.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for i in self.ext.iter() {
            out.push(Letter::S(i));
        }
        for i in 1..=self.m() {
            for _ in 0..self.poly.get(i) {
                out.push(Letter::T(i));
            }
        }
        out
    }

    /// Number of odd letters in the given arena (the parity entering Koszul
    /// signs).
    pub fn odd_letter_count(&self, arena: Arena) -> usize {
        let mut count = 0;
        if arena.poly_is_odd() {
            count += self.poly.total();
        }
        if arena.ext_is_odd() {
            count += self.ext.len();
        }
        count
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tname, sname) = match self.side {
            Side::St => ("t", "s"),
            Side::Uv => ("u", "v"),
        };
        let mut parts: Vec<String> = Vec::new();
        for i in 1..=self.m() {
            let e = self.poly.get(i);
            match e {
                0 => {}
                1 => parts.push(format!("{tname}{i}")),
                e => parts.push(format!("{tname}{i}^{e}")),
            }
            if self.ext.contains(i) {
                parts.push(format!("{sname}{i}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}
