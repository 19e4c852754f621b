//! Scalar rings the linear algebra layer is generic over.
//!
//! Everything here is exact: arbitrary-precision integers, rationals built on
//! them, and prime fields with a runtime modulus. Floating point is
//! deliberately absent. [`EuclideanScalar`] is the interface the Smith normal
//! form needs: division with remainder, unit detection, and a canonical unit
//! normalizer (sign for the integers, full inversion for fields, where the
//! algorithm degenerates to Gaussian elimination).

use crate::{Int, Rat};
use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Commutative ring element usable as a matrix entry.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    /// Embeds an integer. Matrices over any scalar are built from integer data.
    fn from_int(n: &Int) -> Self;

    /// Canonical integer lift of a vector over this scalar, used when
    /// representatives must be reported in integer coordinates. For fields the
    /// lift may rescale the vector by a unit.
    fn lift_slice(v: &[Self]) -> Vec<Int>;

    /// Unit `u` such that replacing a representative vector `r` by `u·r` puts
    /// it in canonical form (`1` when no normalization applies).
    fn rep_normalizer(v: &[Self]) -> Self;

    /// Exact rational image (canonical lift for prime fields), used when
    /// coordinates over different coefficient rings must share one format.
    fn to_rational(&self) -> Rat;
}

/// Scalar supporting the Euclidean reduction driving the Smith normal form.
pub trait EuclideanScalar: Scalar {
    /// Division with remainder: `self = q·d + r` with `r` strictly smaller
    /// than `d` in the Euclidean sense (`r = 0` over a field).
    fn div_rem_euclid(&self, d: &Self) -> (Self, Self);

    /// Whether the element has a multiplicative inverse.
    fn is_unit(&self) -> bool;

    /// Unit `u` such that `u·self` is the canonical associate: nonnegative for
    /// integers, `1` for nonzero field elements.
    fn normalizing_unit(&self) -> Self;

    /// Euclidean size for pivot selection: `0` for zero, `1` for units,
    /// the absolute value for integers.
    fn euclidean_size(&self) -> Int;
}

impl Scalar for Int {
    fn from_int(n: &Int) -> Self {
        n.clone()
    }

    fn lift_slice(v: &[Self]) -> Vec<Int> {
        v.to_vec()
    }

    fn rep_normalizer(_v: &[Self]) -> Self {
        Int::one()
    }

    fn to_rational(&self) -> Rat {
        Rat::from_integer(self.clone())
    }
}

impl EuclideanScalar for Int {
    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        let (q, r) = self.div_mod_floor(d);
        if r.is_negative() {
            // div_mod_floor keeps the remainder's sign equal to the divisor's;
            // shift once so that 0 <= r < |d|.
            (q + Int::one(), r - d)
        } else {
            (q, r)
        }
    }

    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }

    fn normalizing_unit(&self) -> Self {
        if self.sign() == Sign::Minus {
            -Int::one()
        } else {
            Int::one()
        }
    }

    fn euclidean_size(&self) -> Int {
        self.abs()
    }
}

impl Scalar for Rat {
    fn from_int(n: &Int) -> Self {
        Rat::from_integer(n.clone())
    }

    fn lift_slice(v: &[Self]) -> Vec<Int> {
        let scale = Self::rep_normalizer(v);
        v.iter()
            .map(|x| {
                let y = x.clone() * scale.clone();
                debug_assert!(y.is_integer());
                y.to_integer()
            })
            .collect()
    }

    fn rep_normalizer(v: &[Self]) -> Self {
        // Scale to a primitive integer vector with positive leading entry.
        let mut denom_lcm = Int::one();
        for x in v {
            denom_lcm = denom_lcm.lcm(x.denom());
        }
        let mut numer_gcd = Int::zero();
        for x in v {
            numer_gcd = numer_gcd.gcd(&(x.numer() * &denom_lcm / x.denom()));
        }
        if numer_gcd.is_zero() {
            return Rat::one();
        }
        let lead_neg = v
            .iter()
            .find(|x| !x.is_zero())
            .map(|x| x.numer().is_negative())
            .unwrap_or(false);
        let sign = if lead_neg { -Int::one() } else { Int::one() };
        Rat::new(denom_lcm * sign, numer_gcd)
    }

    fn to_rational(&self) -> Rat {
        self.clone()
    }
}

impl EuclideanScalar for Rat {
    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        (self.clone() / d.clone(), Rat::zero())
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_zero() {
            Rat::one()
        } else {
            self.recip()
        }
    }

    fn euclidean_size(&self) -> Int {
        if self.is_zero() {
            Int::zero()
        } else {
            Int::one()
        }
    }
}

/// Prime-field element with the modulus carried at runtime.
///
/// `modulus == 0` marks an unbound constant (produced by `zero()`/`one()`
/// inside generic code); it unifies with any bound modulus on first contact.
/// Bound values are kept reduced to `0..modulus`.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    value: i64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 1, "modulus must be at least 2");
        Fp { value, modulus }.reduced()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Canonical representative in `0..modulus` (the raw value if unbound).
    pub fn canonical(&self) -> i64 {
        self.reduced().value
    }

    fn reduced(self) -> Self {
        if self.modulus == 0 {
            return self;
        }
        let m = self.modulus as i64;
        Fp {
            value: self.value.rem_euclid(m),
            modulus: self.modulus,
        }
    }

    fn unified(m1: u64, m2: u64) -> u64 {
        match (m1, m2) {
            (0, m) | (m, 0) => m,
            (a, b) => {
                assert_eq!(a, b, "mixed moduli {a} and {b}");
                a
            }
        }
    }

    fn inverse(&self) -> Self {
        assert!(self.modulus != 0 || self.value.abs() == 1, "cannot invert unbound {}", self.value);
        if self.modulus == 0 {
            return *self;
        }
        let m = self.modulus as i64;
        let a = self.value.rem_euclid(m);
        assert!(a != 0, "division by zero in F_{}", self.modulus);
        // Extended Euclid for a^{-1} mod m.
        let (mut r0, mut r1) = (m, a);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        assert!(r0 == 1, "{} is not invertible mod {}", a, m);
        Fp { value: t0, modulus: self.modulus }.reduced()
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let m = Self::unified(self.modulus, other.modulus);
        if m == 0 {
            return self.value == other.value;
        }
        let mi = m as i64;
        self.value.rem_euclid(mi) == other.value.rem_euclid(mi)
    }
}

impl Eq for Fp {}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.reduced().value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let m = Self::unified(self.modulus, rhs.modulus);
        let wide = self.value as i128 + rhs.value as i128;
        let v = if m == 0 { wide } else { wide.rem_euclid(m as i128) };
        Fp { value: i64::try_from(v).expect("unbound prime-field overflow"), modulus: m }.reduced()
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let m = Self::unified(self.modulus, rhs.modulus);
        let wide = self.value as i128 * rhs.value as i128;
        let v = if m == 0 { wide } else { wide.rem_euclid(m as i128) };
        Fp { value: i64::try_from(v).expect("unbound prime-field overflow"), modulus: m }.reduced()
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { value: -self.value, modulus: self.modulus }.reduced()
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp { value: 0, modulus: 0 }
    }
    fn is_zero(&self) -> bool {
        if self.modulus == 0 {
            self.value == 0
        } else {
            self.value.rem_euclid(self.modulus as i64) == 0
        }
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp { value: 1, modulus: 0 }
    }
}

impl Scalar for Fp {
    fn from_int(n: &Int) -> Self {
        // Unbound; the modulus attaches when the matrix binding pass runs.
        let v = i64::try_from(n.clone()).expect("integer too large for prime-field embedding");
        Fp { value: v, modulus: 0 }
    }

    fn lift_slice(v: &[Self]) -> Vec<Int> {
        v.iter().map(|x| Int::from(x.canonical())).collect()
    }

    fn rep_normalizer(_v: &[Self]) -> Self {
        Fp::one()
    }

    fn to_rational(&self) -> Rat {
        Rat::from_integer(Int::from(self.canonical()))
    }
}

impl EuclideanScalar for Fp {
    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        (*self * d.inverse(), Fp::zero())
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_zero() {
            Fp::one()
        } else {
            self.inverse()
        }
    }

    fn euclidean_size(&self) -> Int {
        if self.is_zero() {
            Int::zero()
        } else {
            Int::one()
        }
    }
}

/// Binds every entry of an integer-sourced value to the given modulus.
pub fn fp(n: i64, modulus: u64) -> Fp {
    Fp::new(n, modulus)
}

/// Trial-division primality test; moduli in this crate are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_euclid_has_nonnegative_remainder() {
        let cases = [(7, 3), (-7, 3), (7, -3), (-7, -3), (0, 5), (12, 4)];
        for (a, b) in cases {
            let (q, r) = Int::from(a).div_rem_euclid(&Int::from(b));
            assert_eq!(q * Int::from(b) + &r, Int::from(a));
            assert!(!r.is_negative() && r < Int::from(b).abs(), "({a},{b}) gave r={r}");
        }
    }

    #[test]
    fn fp_arithmetic_and_inverse() {
        let p = 7;
        for a in 1..7 {
            let x = fp(a, p);
            let (q, r) = fp(1, p).div_rem_euclid(&x);
            assert!(r.is_zero());
            assert_eq!(q * x, fp(1, p));
        }
        assert_eq!(fp(3, 5) + fp(4, 5), fp(2, 5));
        assert_eq!(-fp(1, 5), fp(4, 5));
        // Unbound constants unify with bound values.
        assert_eq!(Fp::one() + fp(4, 5), fp(0, 5));
    }

    #[test]
    fn rational_rep_normalizer_gives_primitive_vector() {
        let v = vec![Rat::new(Int::from(2), Int::from(3)), Rat::new(Int::from(-4), Int::from(3))];
        let lifted = Rat::lift_slice(&v);
        assert_eq!(lifted, vec![Int::from(1), Int::from(-2)]);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(97));
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(91));
    }
}
