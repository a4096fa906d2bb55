//! Sparse weighted-homogeneous polynomials in `x0..xn` and `t`.
//!
//! The grading gives every `x_i` weight 1 and `t` weight `m`, so the
//! equation `t^d - b` of a degree-`d` cyclic covering branched along
//! `{b = 0}` is homogeneous of weighted degree `d*m`. Terms are kept in a
//! `BTreeMap` ordered by graded reverse lexicographic order with `t` last;
//! that order is only used for canonical printing and deterministic matrix
//! assembly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::field::{FieldSpec, Scalar};

/// Exponent vector: `x0..xn` plus the auxiliary variable `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    xs: Vec<u32>,
    t: u32,
}

impl Monomial {
    pub fn new(xs: Vec<u32>, t: u32) -> Self {
        Monomial { xs, t }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            xs: vec![0; nvars],
            t: 0,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut xs = vec![0; nvars];
        xs[index] = 1;
        Monomial { xs, t: 0 }
    }

    pub fn t_var(nvars: usize) -> Self {
        Monomial {
            xs: vec![0; nvars],
            t: 1,
        }
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.xs
    }

    pub fn t_exponent(&self) -> u32 {
        self.t
    }

    pub fn uses_t(&self) -> bool {
        self.t > 0
    }

    /// Degree with `x_i` of weight 1 and `t` of weight `m`.
    pub fn weighted_degree(&self, m: usize) -> usize {
        self.xs.iter().map(|&e| e as usize).sum::<usize>() + m * self.t as usize
    }

    /// Plain total degree (every variable of weight 1); grades the order.
    fn total_degree(&self) -> u64 {
        self.xs.iter().map(|&e| e as u64).sum::<u64>() + self.t as u64
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.xs.len(), other.xs.len());
        Monomial {
            xs: self
                .xs
                .iter()
                .zip(&other.xs)
                .map(|(a, b)| a + b)
                .collect(),
            t: self.t + other.t,
        }
    }

    /// Exponentwise quotient, `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if self.t < other.t {
            return None;
        }
        let xs = self
            .xs
            .iter()
            .zip(&other.xs)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial {
            xs,
            t: self.t - other.t,
        })
    }
}

// Graded reverse lexicographic with t as the last variable: higher total
// degree wins; on equal degree the monomial with the smaller exponent at
// the rightmost difference is the larger one.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        if self.t != other.t {
            return other.t.cmp(&self.t);
        }
        for (a, b) in self.xs.iter().zip(&other.xs).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ambient ring: `n + 1` variables `x0..xn`, the variable `t` of weight
/// `m`, and the coefficient field.
#[derive(Debug, Clone)]
pub struct RingCtx<K: Scalar> {
    n: usize,
    m: usize,
    field: FieldSpec<K>,
}

impl<K: Scalar> RingCtx<K> {
    pub fn new(n: usize, m: usize, field: FieldSpec<K>) -> Self {
        assert!(n >= 1, "need at least the variables x0, x1");
        assert!(m >= 1, "t must have positive weight");
        RingCtx { n, m, field }
    }

    /// Projective dimension: variables are `x0..xn`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    /// Weight of `t`.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> &FieldSpec<K> {
        &self.field
    }

    pub fn compatible(&self, other: &Self) -> bool {
        self.n == other.n && self.m == other.m && self.field == other.field
    }

    pub fn scalar(&self, value: i64) -> K {
        K::from_int(self.field.base(), value)
    }
}

impl<K: Scalar> PartialEq for RingCtx<K> {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other)
    }
}

impl<K: Scalar> Eq for RingCtx<K> {}

/// Homogeneity of a polynomial in the weighted grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial is homogeneous of every degree.
    Zero,
    Homogeneous(usize),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn degree(&self) -> Option<usize> {
        match self {
            Homogeneity::Homogeneous(d) => Some(*d),
            _ => None,
        }
    }

    /// Homogeneous of the given degree; true for the zero polynomial.
    pub fn is_degree(&self, d: usize) -> bool {
        matches!(self, Homogeneity::Zero) || *self == Homogeneity::Homogeneous(d)
    }
}

/// Sparse multivariate polynomial over an exact field.
///
/// Invariant: no stored coefficient is zero.
#[derive(Debug, Clone)]
pub struct Polynomial<K: Scalar> {
    ring: RingCtx<K>,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Scalar> Polynomial<K> {
    pub fn zero(ring: &RingCtx<K>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &RingCtx<K>) -> Self {
        Polynomial::constant(ring, ring.scalar(1))
    }

    pub fn constant(ring: &RingCtx<K>, c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn variable(ring: &RingCtx<K>, index: usize) -> Self {
        assert!(index <= ring.n(), "variable x{index} out of range");
        Polynomial::term(ring, Monomial::var(ring.nvars(), index), ring.scalar(1))
    }

    pub fn t(ring: &RingCtx<K>) -> Self {
        Polynomial::term(ring, Monomial::t_var(ring.nvars()), ring.scalar(1))
    }

    pub fn term(ring: &RingCtx<K>, monomial: Monomial, coeff: K) -> Self {
        assert_eq!(monomial.xs.len(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms(ring: &RingCtx<K>, entries: impl IntoIterator<Item = (Monomial, K)>) -> Self {
        let mut p = Polynomial::zero(ring);
        for (mono, coeff) in entries {
            p.add_term(mono, coeff);
        }
        p
    }

    pub fn ring(&self) -> &RingCtx<K> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Option<&K> {
        self.terms.get(monomial)
    }

    pub fn uses_t(&self) -> bool {
        self.terms.keys().any(Monomial::uses_t)
    }

    /// Leading term in the grevlex order.
    pub fn leading(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, monomial: Monomial, coeff: K) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            self.ring.compatible(&other.ring),
            "operands live in different rings: {:?} vs {:?}",
            (self.ring.n, self.ring.m),
            (other.ring.n, other.ring.m)
        );
    }

    pub fn scalar_mul(&self, c: &K) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, k)| {
                let prod = k.clone() * c.clone();
                (!prod.is_zero()).then_some((m.clone(), prod))
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn mul_monomial(&self, monomial: &Monomial, coeff: &K) -> Self {
        if coeff.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, k)| {
                let prod = k.clone() * coeff.clone();
                (!prod.is_zero()).then_some((m.mul(monomial), prod))
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Weighted homogeneity; the zero polynomial gets its own marker.
    pub fn weighted_degree(&self) -> Homogeneity {
        let mut degrees = self
            .terms
            .keys()
            .map(|mono| mono.weighted_degree(self.ring.m));
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Substitute an explicit polynomial of weighted degree `m` for `t`.
    pub fn substitute_t(&self, value: &Polynomial<K>) -> Result<Polynomial<K>, SubstitutionError> {
        self.assert_same_ring(value);
        if !value.weighted_degree().is_degree(self.ring.m) {
            return Err(SubstitutionError {
                required: self.ring.m,
                found: value.weighted_degree(),
            });
        }
        let mut out = Polynomial::zero(&self.ring);
        for (mono, coeff) in &self.terms {
            let x_part = Monomial {
                xs: mono.xs.clone(),
                t: 0,
            };
            let image = value.pow(mono.t).mul_monomial(&x_part, coeff);
            out = &out + &image;
        }
        Ok(out)
    }

    /// The covering involution on equations: `t -> -t`.
    pub fn negate_t(&self) -> Polynomial<K> {
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| {
                let c = if m.t % 2 == 1 { -k.clone() } else { k.clone() };
                (m.clone(), c)
            })
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Exact division, `None` when `divisor` does not divide `self`.
    ///
    /// Single-divisor reduction against the leading term; in an integral
    /// domain the leading term of an exact multiple is always divisible,
    /// so this terminates with remainder zero precisely on multiples.
    pub fn div_exact(&self, divisor: &Polynomial<K>) -> Option<Polynomial<K>> {
        self.assert_same_ring(divisor);
        let (div_mono, div_coeff) = divisor.leading()?;
        let div_inv = div_coeff.inv().expect("leading coefficient is nonzero");
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        while let Some((lm, lc)) = rem.leading() {
            let q_mono = lm.div(div_mono)?;
            let q_coeff = lc.clone() * div_inv.clone();
            let piece = divisor.mul_monomial(&q_mono, &q_coeff);
            quot.add_term(q_mono, q_coeff);
            rem = &rem - &piece;
        }
        Some(quot)
    }

    /// Evaluate at scalar values for `x0..xn` and `t`.
    pub fn evaluate(&self, xs: &[K], t: &K) -> K {
        assert_eq!(xs.len(), self.ring.nvars());
        let mut acc = K::zero();
        for (mono, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (value, &e) in xs.iter().zip(&mono.xs) {
                for _ in 0..e {
                    term = term * value.clone();
                }
            }
            for _ in 0..mono.t {
                term = term * t.clone();
            }
            acc = acc + term;
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("substituted value must be homogeneous of weighted degree {required}, found {found:?}")]
pub struct SubstitutionError {
    pub required: usize,
    pub found: Homogeneity,
}

impl<K: Scalar> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.terms == other.terms
    }
}

impl<K: Scalar> Eq for Polynomial<K> {}

impl<K: Scalar> Add for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (m, k) in &rhs.terms {
            out.add_term(m.clone(), k.clone());
        }
        out
    }
}

impl<K: Scalar> Sub for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (m, k) in &rhs.terms {
            out.add_term(m.clone(), -k.clone());
        }
        out
    }
}

impl<K: Scalar> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), -k.clone()))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<K: Scalar> Mul for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn mul(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        self.assert_same_ring(rhs);
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ka) in &self.terms {
            for (mb, kb) in &rhs.terms {
                out.add_term(ma.mul(mb), ka.clone() * kb.clone());
            }
        }
        out
    }
}

impl<K: Scalar> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Leading term first.
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let repr = coeff.to_string();
            let (sign, magnitude) = match repr.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", repr),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (idx, &e) in mono.xs.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{idx}")),
                    _ => factors.push(format!("x{idx}^{e}")),
                }
            }
            match mono.t {
                0 => {}
                1 => factors.push("t".into()),
                e => factors.push(format!("t^{e}")),
            }
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", magnitude, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// All monomials of weighted degree `degree`, grouped by `t`-stratum
/// `t^j * V_{degree - j*m}`, in ascending grevlex order.
pub fn monomials_of_weighted_degree<K: Scalar>(ring: &RingCtx<K>, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut j = 0;
    while j * ring.m() <= degree {
        let rest = degree - j * ring.m();
        push_x_monomials(ring.nvars(), rest, j as u32, &mut out);
        j += 1;
    }
    out.sort();
    out
}

/// The `t`-free monomials of degree `degree` in `x0..xn` alone.
pub fn monomials_of_degree_in_x<K: Scalar>(ring: &RingCtx<K>, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    push_x_monomials(ring.nvars(), degree, 0, &mut out);
    out.sort();
    out
}

fn push_x_monomials(nvars: usize, degree: usize, t: u32, out: &mut Vec<Monomial>) {
    let mut exps = vec![0u32; nvars];
    fill(&mut exps, 0, degree, t, out);
    fn fill(exps: &mut Vec<u32>, pos: usize, remaining: usize, t: u32, out: &mut Vec<Monomial>) {
        if pos == exps.len() - 1 {
            exps[pos] = remaining as u32;
            out.push(Monomial::new(exps.clone(), t));
            return;
        }
        for e in 0..=remaining {
            exps[pos] = e as u32;
            fill(exps, pos + 1, remaining - e, t, out);
        }
        exps[pos] = 0;
    }
}

/// Number of monomials of weighted degree `degree`:
/// `sum_j C(degree - j*m + n, n)` over the admissible `t`-strata.
pub fn weighted_degree_dimension(n: usize, m: usize, degree: usize) -> usize {
    let mut total = 0usize;
    let mut j = 0;
    while j * m <= degree {
        total += binomial(degree - j * m + n, n);
        j += 1;
    }
    total
}

pub fn binomial(top: usize, bottom: usize) -> usize {
    if bottom > top {
        return 0;
    }
    let bottom = bottom.min(top - bottom);
    let mut acc = 1usize;
    for i in 0..bottom {
        acc = acc * (top - i) / (i + 1);
    }
    acc
}

/// A polynomial with independent random coefficients on every monomial of
/// weighted degree `degree`. Deterministic for a fixed rng state.
pub fn random_homogeneous<K: Scalar, R: Rng + ?Sized>(
    ring: &RingCtx<K>,
    degree: usize,
    rng: &mut R,
) -> Polynomial<K> {
    random_from_monomials(ring, monomials_of_weighted_degree(ring, degree), rng)
}

/// Same, restricted to the `t`-free stratum: a form of degree `degree`
/// in `x0..xn`.
pub fn random_form_in_x<K: Scalar, R: Rng + ?Sized>(
    ring: &RingCtx<K>,
    degree: usize,
    rng: &mut R,
) -> Polynomial<K> {
    random_from_monomials(ring, monomials_of_degree_in_x(ring, degree), rng)
}

fn random_from_monomials<K: Scalar, R: Rng + ?Sized>(
    ring: &RingCtx<K>,
    monomials: Vec<Monomial>,
    rng: &mut R,
) -> Polynomial<K> {
    let mut p = Polynomial::zero(ring);
    for mono in monomials {
        p.add_term(mono, K::sample(ring.field().base(), rng));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField, Rationals};
    use num_rational::BigRational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring_q(n: usize, m: usize) -> RingCtx<BigRational> {
        RingCtx::new(n, m, FieldSpec::new(Rationals::default()))
    }

    fn ring_p(n: usize, m: usize, p: i64) -> RingCtx<Fp> {
        RingCtx::new(n, m, FieldSpec::new(PrimeField::new(p).unwrap()))
    }

    #[test]
    fn difference_of_squares() {
        let ring = ring_q(3, 1);
        let t = Polynomial::t(&ring);
        let x0 = Polynomial::variable(&ring, 0);
        let prod = &(&t - &x0) * &(&t + &x0);
        let expected = &(&t * &t) - &(&x0 * &x0);
        assert_eq!(prod, expected);
        assert_eq!(prod.weighted_degree(), Homogeneity::Homogeneous(2));
    }

    #[test]
    fn adding_zero_is_identity() {
        let ring = ring_p(3, 2, 10007);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = random_homogeneous(&ring, 4, &mut rng);
        let zero = Polynomial::zero(&ring);
        assert_eq!(&p + &zero, p);
    }

    #[test]
    fn quartic_power_matches_multinomial_expansion() {
        // (x0 + x1 + x2 + x3)^4: coefficients are 4!/(e0! e1! e2! e3!).
        let ring = ring_q(3, 1);
        let sum = (0..4)
            .map(|i| Polynomial::variable(&ring, i))
            .fold(Polynomial::zero(&ring), |acc, v| &acc + &v);
        let p = sum.pow(4);
        assert_eq!(p.num_terms(), 35);

        fn factorial(k: u32) -> i64 {
            (1..=k as i64).product::<i64>().max(1)
        }
        for (mono, coeff) in p.terms() {
            let expected: i64 =
                factorial(4) / mono.x_exponents().iter().map(|&e| factorial(e)).product::<i64>();
            assert_eq!(coeff, &BigRational::from_integer(expected.into()));
        }
        let balanced = Monomial::new(vec![1, 1, 1, 1], 0);
        assert_eq!(
            p.coefficient(&balanced),
            Some(&BigRational::from_integer(24.into()))
        );
    }

    #[test]
    fn weighted_degrees() {
        let ring = ring_q(3, 3);
        let t = Polynomial::t(&ring);
        let b = Polynomial::variable(&ring, 0).pow(6);
        let eq = &(&t * &t) - &b;
        assert_eq!(eq.weighted_degree(), Homogeneity::Homogeneous(6));

        let ring2 = ring_q(3, 2);
        let inhom = &Polynomial::variable(&ring2, 0) + &Polynomial::t(&ring2);
        assert_eq!(inhom.weighted_degree(), Homogeneity::Inhomogeneous);

        assert_eq!(Polynomial::zero(&ring).weighted_degree(), Homogeneity::Zero);
        assert!(Polynomial::zero(&ring).weighted_degree().is_degree(17));
    }

    #[test]
    fn substitution_examples() {
        let ring = ring_p(3, 2, 10007);
        let t = Polynomial::t(&ring);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let b = random_form_in_x(&ring, 4, &mut rng);
        let eq = &(&t * &t) - &b;

        // The cyclic equation is invariant under the covering involution.
        assert_eq!(eq.negate_t(), eq);
        assert_eq!(eq.negate_t().negate_t(), eq);

        let p_m = random_form_in_x(&ring, 2, &mut rng);
        let shifted = &t - &p_m;
        assert_eq!(shifted.negate_t(), -&(&t + &p_m));

        let subst = eq.substitute_t(&p_m).unwrap();
        assert_eq!(subst, &(&p_m * &p_m) - &b);

        // Degree mismatch is rejected.
        let linear = Polynomial::variable(&ring, 0);
        assert!(eq.substitute_t(&linear).is_err());
    }

    #[test]
    fn monomial_counts_by_stratum() {
        // n = 3, m = 2, degree 4: strata t^0 V_4, t^1 V_2, t^2 V_0.
        let ring = ring_p(3, 2, 10007);
        let monos = monomials_of_weighted_degree(&ring, 4);
        assert_eq!(monos.len(), 35 + 10 + 1);
        assert_eq!(weighted_degree_dimension(3, 2, 4), 46);
        assert!(monos.iter().all(|mo| mo.weighted_degree(2) == 4));
    }

    #[test]
    fn random_homogeneous_is_deterministic() {
        let ring = ring_p(3, 2, 10007);
        let a = random_homogeneous(&ring, 4, &mut ChaCha8Rng::seed_from_u64(99));
        let b = random_homogeneous(&ring, 4, &mut ChaCha8Rng::seed_from_u64(99));
        assert_eq!(a, b);
        let c = random_homogeneous(&ring, 4, &mut ChaCha8Rng::seed_from_u64(100));
        assert_ne!(a, c);

        let constant = random_homogeneous(&ring, 0, &mut ChaCha8Rng::seed_from_u64(5));
        assert!(constant.num_terms() <= 1);
        assert!(constant.weighted_degree().is_degree(0));
    }

    #[test]
    fn exact_division_round_trip() {
        let ring = ring_q(3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let f = random_form_in_x(&ring, 2, &mut rng);
        let g = random_homogeneous(&ring, 4, &mut rng);
        let product = &f * &g;
        assert_eq!(product.div_exact(&f).unwrap(), g);
        let off = &product + &Polynomial::one(&ring);
        assert!(off.div_exact(&f).is_none());
    }
}
