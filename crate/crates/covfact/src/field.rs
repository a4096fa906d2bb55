//! Exact coefficient fields: the rationals and odd prime fields.
//!
//! All core types are generic over a [`Scalar`], the element type of the
//! coefficient field. Two implementations are provided: [`BigRational`]
//! (arbitrary-precision rationals) and [`Fp`] (an odd prime field with a
//! runtime modulus). Floating point is deliberately unsupported; every
//! computation in this crate is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not an odd prime")]
    NotOddPrime(i64),
    #[error("no {order}-th root of unity: {reason}")]
    NoRootOfUnity { order: u32, reason: String },
    #[error("coefficient {num}/{den} is not representable: {reason}")]
    BadCoefficient {
        num: BigInt,
        den: BigInt,
        reason: String,
    },
}

/// Element of an exact field, together with the runtime description of the
/// field it lives in ([`Scalar::Ctx`]).
///
/// Elements are self-contained: arithmetic never needs the context. The
/// context is needed to *create* elements (from integers, from random draws)
/// and to answer global questions such as the characteristic.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Send
    + Sync
    + 'static
{
    /// Runtime field descriptor (modulus for prime fields, sampling bound
    /// for the rationals).
    type Ctx: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    /// Whether elimination should use the fraction-free Bareiss update to
    /// keep intermediate entries integral.
    const PREFER_FRACTION_FREE: bool;

    fn from_int(ctx: &Self::Ctx, value: i64) -> Self;

    /// The image of `num/den` in the field. Fails when `den` maps to zero.
    fn from_ratio(ctx: &Self::Ctx, num: &BigInt, den: &BigInt) -> Result<Self, FieldError>;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Draw one coefficient: uniform over the field for prime fields,
    /// a uniform integer in `[-bound, bound]` for the rationals.
    fn sample<R: Rng + ?Sized>(ctx: &Self::Ctx, rng: &mut R) -> Self;

    /// `Some(p)` for prime fields, `None` in characteristic zero.
    fn characteristic(ctx: &Self::Ctx) -> Option<i64>;

    /// An element of multiplicative order exactly `order`, if the field
    /// has one. Verified before returning.
    fn root_of_unity<R: Rng + ?Sized>(
        ctx: &Self::Ctx,
        order: u32,
        rng: &mut R,
    ) -> Result<Self, FieldError>;

    /// Scale a row so that fraction-free elimination starts from integral
    /// entries; returns the factor the row was multiplied by.
    fn clear_denominators(_row: &mut [Self]) -> Self {
        Self::one()
    }

    fn div_exact(&self, other: &Self) -> Option<Self> {
        Some(self.clone() * other.inv()?)
    }
}

/// Descriptor of the rational field. `coeff_bound` only affects sampling.
#[derive(Debug, Clone, Copy, Eq)]
pub struct Rationals {
    pub coeff_bound: i64,
}

impl Rationals {
    pub fn new(coeff_bound: i64) -> Self {
        Rationals { coeff_bound }
    }
}

impl Default for Rationals {
    fn default() -> Self {
        Rationals { coeff_bound: 100 }
    }
}

// The sampling bound is not part of the mathematical field.
impl PartialEq for Rationals {
    fn eq(&self, _other: &Self) -> bool {
        true
    }
}

impl Scalar for BigRational {
    type Ctx = Rationals;

    const PREFER_FRACTION_FREE: bool = true;

    fn from_int(_ctx: &Rationals, value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_ratio(_ctx: &Rationals, num: &BigInt, den: &BigInt) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::BadCoefficient {
                num: num.clone(),
                den: den.clone(),
                reason: "zero denominator".into(),
            });
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn sample<R: Rng + ?Sized>(ctx: &Rationals, rng: &mut R) -> Self {
        let b = ctx.coeff_bound.max(1);
        BigRational::from_integer(BigInt::from(rng.gen_range(-b..=b)))
    }

    fn characteristic(_ctx: &Rationals) -> Option<i64> {
        None
    }

    fn root_of_unity<R: Rng + ?Sized>(
        _ctx: &Rationals,
        order: u32,
        _rng: &mut R,
    ) -> Result<Self, FieldError> {
        match order {
            1 => Ok(BigRational::one()),
            2 => Ok(-BigRational::one()),
            _ => Err(FieldError::NoRootOfUnity {
                order,
                reason: "the rationals only contain roots of unity of order 1 and 2".into(),
            }),
        }
    }

    fn clear_denominators(row: &mut [Self]) -> Self {
        let mut lcm = BigInt::one();
        for x in row.iter() {
            if !x.is_zero() {
                lcm = lcm.lcm(x.denom());
            }
        }
        if lcm.is_one() {
            return BigRational::one();
        }
        let factor = BigRational::from_integer(lcm);
        for x in row.iter_mut() {
            *x *= &factor;
        }
        factor
    }
}

/// Descriptor of the prime field `F_p`, `p` an odd prime below `2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: i64,
}

impl PrimeField {
    pub fn new(p: i64) -> Result<Self, FieldError> {
        if p <= 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> i64 {
        self.p
    }
}

fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Element of `F_p` carrying its modulus.
///
/// The literals produced by `Zero::zero()` / `One::one()` cannot know the
/// modulus, so they carry `modulus == 0` and adopt the modulus of the first
/// proper element they are combined with. All elements built through
/// [`Scalar::from_int`] and friends are fully reduced.
#[derive(Debug, Clone, Copy)]
pub struct Fp {
    value: i64,
    modulus: i64,
}

impl Fp {
    pub fn new(field: &PrimeField, value: i64) -> Self {
        Fp {
            value: value.rem_euclid(field.p),
            modulus: field.p,
        }
    }

    /// Canonical representative in `[0, p)`; literals return their raw value.
    pub fn representative(&self) -> i64 {
        self.value
    }

    /// Symmetric representative in `(-p/2, p/2]`, used by the printer.
    pub fn symmetric(&self) -> i64 {
        if self.modulus > 0 && self.value > self.modulus / 2 {
            self.value - self.modulus
        } else {
            self.value
        }
    }

    fn join(a: Fp, b: Fp) -> (i64, i64, i64) {
        match (a.modulus, b.modulus) {
            (0, 0) => (a.value, b.value, 0),
            (0, p) => (a.value.rem_euclid(p), b.value, p),
            (p, 0) => (a.value, b.value.rem_euclid(p), p),
            (p, q) => {
                assert_eq!(p, q, "mixed prime-field moduli {p} and {q}");
                (a.value, b.value, p)
            }
        }
    }

    fn reduce(value: i64, modulus: i64) -> Fp {
        if modulus == 0 {
            Fp { value, modulus }
        } else {
            Fp {
                value: value.rem_euclid(modulus),
                modulus,
            }
        }
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp {
            value: 1,
            modulus: self.modulus,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        match (self.modulus, other.modulus) {
            (0, 0) => self.value == other.value,
            (0, p) => self.value.rem_euclid(p) == other.value,
            (p, 0) => self.value == other.value.rem_euclid(p),
            (p, q) => p == q && self.value == other.value,
        }
    }
}

impl Eq for Fp {}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symmetric())
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::join(self, rhs);
        Fp::reduce(a + b, p)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::join(self, rhs);
        Fp::reduce(a - b, p)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::join(self, rhs);
        if p == 0 {
            Fp::reduce(a * b, 0)
        } else {
            Fp::reduce(((a as i128 * b as i128) % p as i128) as i64, p)
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::reduce(-self.value, self.modulus)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
    fn is_one(&self) -> bool {
        if self.modulus == 0 {
            self.value == 1
        } else {
            self.value == 1
        }
    }
}

impl Scalar for Fp {
    type Ctx = PrimeField;

    const PREFER_FRACTION_FREE: bool = false;

    fn from_int(ctx: &PrimeField, value: i64) -> Self {
        Fp::new(ctx, value)
    }

    fn from_ratio(ctx: &PrimeField, num: &BigInt, den: &BigInt) -> Result<Self, FieldError> {
        let p = BigInt::from(ctx.p);
        let num_red = num.mod_floor(&p).to_string().parse::<i64>().unwrap();
        let den_red = den.mod_floor(&p).to_string().parse::<i64>().unwrap();
        let den_elt = Fp::new(ctx, den_red);
        let inv = den_elt.inv().ok_or_else(|| FieldError::BadCoefficient {
            num: num.clone(),
            den: den.clone(),
            reason: format!("denominator is divisible by {}", ctx.p),
        })?;
        Ok(Fp::new(ctx, num_red) * inv)
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        if self.modulus == 0 {
            // Literals are only ever 0 or +-1.
            return match self.value {
                1 => Some(Fp::one()),
                -1 => Some(Fp {
                    value: -1,
                    modulus: 0,
                }),
                _ => None,
            };
        }
        // Extended Euclid on (value, p).
        let (mut r0, mut r1) = (self.value, self.modulus);
        let (mut s0, mut s1) = (1i64, 0i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime, nonzero elements are units");
        Some(Fp::reduce(s0, self.modulus))
    }

    fn sample<R: Rng + ?Sized>(ctx: &PrimeField, rng: &mut R) -> Self {
        Fp {
            value: rng.gen_range(0..ctx.p),
            modulus: ctx.p,
        }
    }

    fn characteristic(ctx: &PrimeField) -> Option<i64> {
        Some(ctx.p)
    }

    fn root_of_unity<R: Rng + ?Sized>(
        ctx: &PrimeField,
        order: u32,
        rng: &mut R,
    ) -> Result<Self, FieldError> {
        if order == 0 {
            return Err(FieldError::NoRootOfUnity {
                order,
                reason: "order must be positive".into(),
            });
        }
        let d = order as i64;
        if (ctx.p - 1) % d != 0 {
            return Err(FieldError::NoRootOfUnity {
                order,
                reason: format!("{order} does not divide p - 1 = {}", ctx.p - 1),
            });
        }
        let exponent = ((ctx.p - 1) / d) as u64;
        // A random element raised to (p-1)/d has order dividing d; most
        // draws hit order exactly d.
        for _ in 0..128 {
            let x = Fp {
                value: rng.gen_range(1..ctx.p),
                modulus: ctx.p,
            };
            let candidate = x.pow(exponent);
            if has_order(candidate, order) {
                return Ok(candidate);
            }
        }
        Err(FieldError::NoRootOfUnity {
            order,
            reason: "sampling failed to find a generator".into(),
        })
    }
}

fn has_order(z: Fp, order: u32) -> bool {
    let mut acc = z;
    for _ in 1..order {
        if acc.is_one() {
            return false;
        }
        acc = acc * z;
    }
    acc.is_one()
}

/// A field descriptor together with an optional stored root of unity.
#[derive(Debug, Clone)]
pub struct FieldSpec<K: Scalar> {
    base: K::Ctx,
    root_of_unity: Option<(u32, K)>,
}

impl<K: Scalar> FieldSpec<K> {
    pub fn new(base: K::Ctx) -> Self {
        FieldSpec {
            base,
            root_of_unity: None,
        }
    }

    /// Attach a verified root of unity of multiplicative order `order`.
    pub fn with_root_of_unity<R: Rng + ?Sized>(
        base: K::Ctx,
        order: u32,
        rng: &mut R,
    ) -> Result<Self, FieldError> {
        let zeta = K::root_of_unity(&base, order, rng)?;
        Ok(FieldSpec {
            base,
            root_of_unity: Some((order, zeta)),
        })
    }

    pub fn base(&self) -> &K::Ctx {
        &self.base
    }

    pub fn characteristic(&self) -> Option<i64> {
        K::characteristic(&self.base)
    }

    /// The stored root of unity of order `order`, if present.
    pub fn zeta(&self, order: u32) -> Option<&K> {
        match &self.root_of_unity {
            Some((d, z)) if *d == order => Some(z),
            _ => None,
        }
    }

    pub fn root_of_unity_order(&self) -> Option<u32> {
        self.root_of_unity.as_ref().map(|(d, _)| *d)
    }
}

// Two specs describe the same field iff the base descriptors agree; a
// stored root of unity does not change the field.
impl<K: Scalar> PartialEq for FieldSpec<K> {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
    }
}

impl<K: Scalar> Eq for FieldSpec<K> {}
