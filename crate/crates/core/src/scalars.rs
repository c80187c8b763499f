//! Exact coefficient arithmetic.
//!
//! Every generic computation in this crate happens in the Laurent ring
//! `Z[u, u^-1]` with `u = q^(1/4)`: exponents are stored as integers in
//! quarter-powers of `q`, which is the finest fractional power any formula
//! needs. Specializing `q` to a primitive `m`-th root of unity (`m` odd)
//! lands in the cyclotomic field `Q[q]/Phi_m(q)`, where fractional powers
//! are resolved through the inverses of 2 and 4 mod `m`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Ring-object abstraction shared by the generic and specialized scalar
/// rings. Operations take the ring as context so that `CycloRing` can carry
/// its modulus.
pub trait ScalarRing: Clone {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// `q^(k/4)`.
    fn q_quarter(&self, k: i64) -> Self::Elem;
    /// Multiplicative inverse, if `a` is a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Exact quotient `a / b`, if it exists in the ring.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// `Some(m)` when `q` is specialized to a primitive m-th root of unity
    /// (which truncates the algebra's normal form), `None` for the generic
    /// ring.
    fn modulus(&self) -> Option<u32> {
        None
    }

    /// `(k)_q = 1 + q + ... + q^(k-1)`; `(0)_q = 0`.
    fn q_int(&self, k: u32) -> Self::Elem {
        let mut acc = self.zero();
        for i in 0..k {
            let t = self.q_quarter(4 * i as i64);
            acc = self.add(&acc, &t);
        }
        acc
    }

    /// `(k)!_q = (1)_q (2)_q ... (k)_q`; empty product is 1.
    fn q_factorial(&self, k: u32) -> Self::Elem {
        let mut acc = self.one();
        for i in 1..=k {
            let f = self.q_int(i);
            acc = self.mul(&acc, &f);
        }
        acc
    }
}

/// Exact Laurent polynomial in `u = q^(1/4)` with integer coefficients.
///
/// Canonical form: no zero coefficients are stored, so equality is plain
/// term-wise equality and the zero scalar has an empty term map.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        LaurentScalar { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, BigInt::from(n))
    }

    /// `coeff * u^exp` (exp in quarter-powers of q).
    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentScalar { terms }
    }

    /// `q^(numerator/denominator)`; the denominator must divide 4.
    pub fn q_pow(numerator: i64, denominator: i64) -> Result<Self, Error> {
        match denominator {
            1 | 2 | 4 => Ok(Self::monomial(numerator * (4 / denominator), BigInt::one())),
            _ => Err(Error::BadExponentDenominator(denominator)),
        }
    }

    /// `q^(k/4)`.
    pub fn q_quarter(k: i64) -> Self {
        Self::monomial(k, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentScalar { terms }
    }

    pub fn neg(&self) -> Self {
        LaurentScalar { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let entry = terms.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentScalar { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `u -> u^-1`, i.e. `q^(1/4) -> q^(-1/4)`.
    pub fn mirror(&self) -> Self {
        LaurentScalar { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Inverse when `self` is a unit `±u^k`.
    pub fn inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if c.abs().is_one() {
            Some(Self::monomial(-e, c.clone()))
        } else {
            None
        }
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Shift both operands to ordinary polynomials (lowest exponent 0),
        // long-divide, and shift the quotient back. If the true quotient has
        // integer coefficients, every leading-coefficient division below is
        // exact; any inexact step or nonzero remainder means "not divisible".
        let a_lo = *self.terms.keys().next().unwrap();
        let b_lo = *other.terms.keys().next().unwrap();
        let b: Vec<(i64, &BigInt)> =
            other.terms.iter().rev().map(|(e, c)| (e - b_lo, c)).collect();
        let b_deg = b[0].0;
        let b_lead = b[0].1;
        let mut rem: BTreeMap<i64, BigInt> =
            self.terms.iter().map(|(e, c)| (e - a_lo, c.clone())).collect();
        let mut quot: BTreeMap<i64, BigInt> = BTreeMap::new();
        while let Some((&r_deg, r_lead)) = rem.iter().next_back() {
            if r_deg < b_deg {
                return None;
            }
            let shift = r_deg - b_deg;
            let (qc, qr) = r_lead.div_rem(b_lead);
            if !qr.is_zero() {
                return None;
            }
            for (be, bc) in &b {
                let entry = rem.entry(be + shift).or_insert_with(BigInt::zero);
                *entry -= &qc * *bc;
                if entry.is_zero() {
                    rem.remove(&(be + shift));
                }
            }
            quot.insert(shift + a_lo - b_lo, qc);
        }
        Some(LaurentScalar { terms: quot })
    }

    /// Terms as `(exponent_in_quarters, coefficient)` pairs, exponent
    /// descending. This is the canonical machine format.
    pub fn to_pairs(&self) -> Vec<(i64, BigInt)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c.clone())).collect()
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, BigInt)>>(pairs: I) -> Self {
        let mut acc = Self::zero();
        for (e, c) in pairs {
            acc = acc.add(&Self::monomial(e, c));
        }
        acc
    }

    /// Applies `q -> q^sign` for `sign = ±1` (identity or mirror).
    pub fn substitute_sign(&self, sign: i64) -> Self {
        if sign >= 0 {
            self.clone()
        } else {
            self.mirror()
        }
    }
}

impl fmt::Display for LaurentScalar {
    /// Renders terms in decreasing exponent order over `q` with rational
    /// exponents in lowest terms, e.g. `-q^(9/2) + q^(5/2) + q^(3/2) + q^(1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                let g = e.gcd(&4);
                let (num, den) = (e / g, 4 / g);
                if den == 1 {
                    if num == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{num}")?;
                    }
                } else {
                    write!(f, "q^({num}/{den})")?;
                }
            }
        }
        Ok(())
    }
}

/// The generic coefficient ring `Z[q^(1/4), q^(-1/4)]` as a ring object.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct LaurentRing;

impl ScalarRing for LaurentRing {
    type Elem = LaurentScalar;

    fn zero(&self) -> LaurentScalar {
        LaurentScalar::zero()
    }
    fn one(&self) -> LaurentScalar {
        LaurentScalar::one()
    }
    fn from_int(&self, n: i64) -> LaurentScalar {
        LaurentScalar::from_int(n)
    }
    fn add(&self, a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
        a.add(b)
    }
    fn sub(&self, a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
        a.sub(b)
    }
    fn neg(&self, a: &LaurentScalar) -> LaurentScalar {
        a.neg()
    }
    fn mul(&self, a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
        a.mul(b)
    }
    fn is_zero(&self, a: &LaurentScalar) -> bool {
        a.is_zero()
    }
    fn q_quarter(&self, k: i64) -> LaurentScalar {
        LaurentScalar::q_quarter(k)
    }
    fn inv(&self, a: &LaurentScalar) -> Option<LaurentScalar> {
        a.inv()
    }
    fn div_exact(&self, a: &LaurentScalar, b: &LaurentScalar) -> Option<LaurentScalar> {
        a.div_exact(b)
    }
}

/// Integer polynomial division, dividend and divisor both monic-led over Z;
/// used only for building cyclotomic polynomials, where the division is exact.
fn poly_div_exact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// The m-th cyclotomic polynomial, coefficients ascending.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    let mut f = vec![BigInt::zero(); m as usize + 1];
    f[0] = -BigInt::one();
    f[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            f = poly_div_exact_int(&f, &phi_d);
        }
    }
    f
}

/// Element of `Q[q] / Phi_m(q)`: `q` is an honest primitive m-th root of
/// unity because reduction is modulo the cyclotomic polynomial itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloScalar {
    coeffs: Vec<BigRational>,
}

impl CycloScalar {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The cyclotomic field for a fixed odd `m >= 3`, with the canonical square
/// and fourth roots of `q` baked in: `q^(1/2) := q^((m+1)/2)` and
/// `q^(1/4) := q^(((m+1)/2)^2 mod m)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloRing {
    m: u32,
    deg: usize,
    phi: Vec<BigInt>,
    /// `((m+1)/2)^2 mod m`, the exponent realizing `q^(1/4)`.
    inv4: u32,
}

impl CycloRing {
    pub fn new(m: u32) -> Result<Self, Error> {
        if m < 3 || m % 2 == 0 {
            return Err(Error::BadModulus(m));
        }
        let phi = cyclotomic_polynomial(m);
        let deg = phi.len() - 1;
        let half = (m + 1) / 2;
        let inv4 = ((half as u64 * half as u64) % m as u64) as u32;
        Ok(CycloRing { m, deg, phi, inv4 })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    fn elem_from_poly(&self, mut poly: Vec<BigRational>) -> CycloScalar {
        // Reduce modulo the monic Phi_m.
        while poly.len() > self.deg {
            let top = poly.len() - 1;
            let c = poly[top].clone();
            if !c.is_zero() {
                for (i, p) in self.phi.iter().enumerate() {
                    let idx = top - self.deg + i;
                    let sub = &c * BigRational::from(p.clone());
                    poly[idx] -= sub;
                }
            }
            poly.pop();
        }
        poly.resize(self.deg, BigRational::zero());
        CycloScalar { coeffs: poly }
    }

    /// `q^e` for any integer exponent (reduced mod m).
    pub fn root_power(&self, e: i64) -> CycloScalar {
        let e = e.rem_euclid(self.m as i64) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        self.elem_from_poly(poly)
    }

    /// Image of a generic Laurent scalar under `u -> q^(((m+1)/2)^2)`.
    pub fn specialize(&self, a: &LaurentScalar) -> CycloScalar {
        let mut acc = self.zero();
        for (e, c) in a.to_pairs() {
            let quarter = (e % self.m as i64 * self.inv4 as i64).rem_euclid(self.m as i64);
            let t = self.mul(
                &self.root_power(quarter),
                &CycloScalar {
                    coeffs: {
                        let mut v = vec![BigRational::zero(); self.deg];
                        v[0] = BigRational::from(c);
                        v
                    },
                },
            );
            acc = self.add(&acc, &t);
        }
        acc
    }
}

/// Polynomial arithmetic helpers over Q for the extended Euclid in `inv`.
fn qpoly_deg(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn qpoly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = qpoly_deg(b).expect("division by zero polynomial");
    let mut rem = a.to_vec();
    let mut quot = vec![BigRational::zero(); a.len()];
    while let Some(dr) = qpoly_deg(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] / &b[db];
        quot[dr - db] = c.clone();
        for i in 0..=db {
            let sub = &c * &b[i];
            rem[dr - db + i] -= sub;
        }
    }
    (quot, rem)
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let add = x * y;
            out[i + j] += add;
        }
    }
    out
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect()
}

impl ScalarRing for CycloRing {
    type Elem = CycloScalar;

    fn zero(&self) -> CycloScalar {
        CycloScalar { coeffs: vec![BigRational::zero(); self.deg] }
    }

    fn one(&self) -> CycloScalar {
        self.from_int(1)
    }

    fn from_int(&self, n: i64) -> CycloScalar {
        let mut coeffs = vec![BigRational::zero(); self.deg];
        coeffs[0] = BigRational::from(BigInt::from(n));
        CycloScalar { coeffs }
    }

    fn add(&self, a: &CycloScalar, b: &CycloScalar) -> CycloScalar {
        CycloScalar { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }

    fn sub(&self, a: &CycloScalar, b: &CycloScalar) -> CycloScalar {
        CycloScalar { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() }
    }

    fn neg(&self, a: &CycloScalar) -> CycloScalar {
        CycloScalar { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    fn mul(&self, a: &CycloScalar, b: &CycloScalar) -> CycloScalar {
        self.elem_from_poly(qpoly_mul(&a.coeffs, &b.coeffs))
    }

    fn is_zero(&self, a: &CycloScalar) -> bool {
        a.is_zero()
    }

    fn q_quarter(&self, k: i64) -> CycloScalar {
        self.root_power((k % self.m as i64) * self.inv4 as i64)
    }

    fn inv(&self, a: &CycloScalar) -> Option<CycloScalar> {
        if a.is_zero() {
            return None;
        }
        // Extended Euclid: Phi_m is irreducible over Q, so the quotient is a
        // field and every nonzero element is invertible.
        let phi: Vec<BigRational> =
            self.phi.iter().map(|c| BigRational::from(c.clone())).collect();
        let mut r0 = phi;
        let mut r1 = a.coeffs.clone();
        let mut t0: Vec<BigRational> = vec![BigRational::zero()];
        let mut t1: Vec<BigRational> = vec![BigRational::one()];
        while qpoly_deg(&r1).is_some() {
            let (q, r) = qpoly_divmod(&r0, &r1);
            let t = qpoly_sub(&t0, &qpoly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        let d = qpoly_deg(&r0)?;
        if d != 0 {
            return None;
        }
        let lead = r0[0].clone();
        let scaled: Vec<BigRational> = t0.iter().map(|c| c / &lead).collect();
        Some(self.elem_from_poly(scaled))
    }

    fn div_exact(&self, a: &CycloScalar, b: &CycloScalar) -> Option<CycloScalar> {
        let bi = self.inv(b)?;
        Some(self.mul(a, &bi))
    }

    fn modulus(&self) -> Option<u32> {
        Some(self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64, d: i64) -> LaurentScalar {
        LaurentScalar::q_pow(k, d).unwrap()
    }

    #[test]
    fn add_examples() {
        let u2 = LaurentScalar::q_quarter(2);
        assert!(u2.add(&u2.neg()).is_zero());

        let half = q(1, 2);
        let two_half = half.add(&half);
        assert_eq!(two_half, LaurentScalar::monomial(2, BigInt::from(2)));

        let a = q(1, 4).sub(&q(-3, 4));
        assert_eq!(a.add(&q(-3, 4)), q(1, 4));
    }

    #[test]
    fn mul_examples() {
        assert!(LaurentScalar::q_quarter(3).mul(&LaurentScalar::q_quarter(-3)).is_one());
        let lhs = q(1, 2).add(&q(-1, 2)).mul(&q(1, 2));
        assert_eq!(lhs, q(1, 1).add(&LaurentScalar::one()));
        let lhs = q(1, 1).sub(&LaurentScalar::one());
        let rhs = LaurentScalar::one().add(&q(1, 1)).add(&q(2, 1));
        assert_eq!(lhs.mul(&rhs), q(3, 1).sub(&LaurentScalar::one()));
    }

    #[test]
    fn q_int_examples() {
        let r = LaurentRing;
        assert!(r.q_int(0).is_zero());
        assert!(r.q_int(1).is_one());
        assert_eq!(r.q_int(3), LaurentScalar::one().add(&q(1, 1)).add(&q(2, 1)));
    }

    #[test]
    fn q_factorial_examples() {
        let r = LaurentRing;
        assert!(r.q_factorial(0).is_one());
        assert_eq!(r.q_factorial(2), r.q_int(1).mul(&r.q_int(2)));
        assert_eq!(r.q_factorial(3), r.q_int(2).mul(&r.q_int(3)));
        for k in 1..=8u32 {
            assert_eq!(r.q_factorial(k), r.q_factorial(k - 1).mul(&r.q_int(k)));
        }
    }

    #[test]
    fn q_pow_examples() {
        assert_eq!(q(-3, 2), LaurentScalar::q_quarter(-6));
        assert_eq!(q(1, 4), LaurentScalar::q_quarter(1));
        assert_eq!(q(2, 1), LaurentScalar::q_quarter(8));
        assert!(LaurentScalar::q_pow(1, 3).is_err());
    }

    #[test]
    fn mirror_examples() {
        let palindrome = q(1, 2).add(&q(-1, 2));
        assert_eq!(palindrome.mirror(), palindrome);

        let trefoil = q(9, 2)
            .neg()
            .add(&q(5, 2))
            .add(&q(3, 2))
            .add(&q(1, 2));
        let mirrored = q(-9, 2)
            .neg()
            .add(&q(-5, 2))
            .add(&q(-3, 2))
            .add(&q(-1, 2));
        assert_eq!(trefoil.mirror(), mirrored);
        assert!(LaurentScalar::zero().mirror().is_zero());
    }

    #[test]
    fn rendering() {
        let trefoil = q(9, 2)
            .neg()
            .add(&q(5, 2))
            .add(&q(3, 2))
            .add(&q(1, 2));
        assert_eq!(trefoil.to_string(), "-q^(9/2) + q^(5/2) + q^(3/2) + q^(1/2)");
        assert_eq!(LaurentScalar::zero().to_string(), "0");
        assert_eq!(LaurentScalar::from_int(-3).to_string(), "-3");
        let two_half = q(1, 2).add(&q(1, 2));
        assert_eq!(two_half.to_string(), "2q^(1/2)");
        assert_eq!(q(1, 1).to_string(), "q");
        assert_eq!(q(-2, 1).to_string(), "q^-2");
    }

    #[test]
    fn exact_division() {
        let a = q(1, 1).sub(&LaurentScalar::one()); // q - 1
        let b = LaurentScalar::one().add(&q(1, 1)).add(&q(2, 1));
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        // inexact
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(LaurentScalar::zero().div_exact(&a), Some(LaurentScalar::zero()));
    }

    #[test]
    fn cyclotomic_polys() {
        let to_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(to_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(5)), vec![1, 1, 1, 1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(9)), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(15)), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
    }

    #[test]
    fn specialize_examples() {
        for m in [3u32, 5, 7] {
            let ring = CycloRing::new(m).unwrap();
            // q^m = 1
            let qm = ring.specialize(&q(m as i64, 1));
            assert_eq!(qm, ring.one());
            // q^d != 1 for 0 < d < m
            for d in 1..m {
                assert_ne!(ring.root_power(d as i64), ring.one());
            }
            // (q^(1/2))^2 = q, (q^(1/4))^4 = q
            let half = ring.specialize(&q(1, 2));
            assert_eq!(ring.mul(&half, &half), ring.root_power(1));
            let quarter = ring.specialize(&q(1, 4));
            let q4 = ring.mul(&ring.mul(&quarter, &quarter), &ring.mul(&quarter, &quarter));
            assert_eq!(q4, ring.root_power(1));
        }
        // specialize(q^(1/2), 3) = q^2 in the m=3 ring
        let ring = CycloRing::new(3).unwrap();
        assert_eq!(ring.specialize(&q(1, 2)), ring.root_power(2));
        assert!(ring.specialize(&LaurentScalar::zero()).is_zero());
        assert!(CycloRing::new(4).is_err());
        assert!(CycloRing::new(1).is_err());
    }

    #[test]
    fn cyclo_inverse() {
        for m in [3u32, 5, 9] {
            let ring = CycloRing::new(m).unwrap();
            let a = ring.add(&ring.root_power(1), &ring.from_int(2));
            let ai = ring.inv(&a).unwrap();
            assert_eq!(ring.mul(&a, &ai), ring.one());
            assert!(ring.inv(&ring.zero()).is_none());
        }
    }
}
