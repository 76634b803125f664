//! Finite fields.
//!
//! Arithmetic is expressed through the [`Field`] trait: a field value is a
//! context object and elements are small `Copy` handles, so the same
//! polynomial and matrix code works for any field whose parameters are only
//! known at runtime.
//!
//! [`Gf`] is the concrete implementation used throughout the crate. It covers
//! prime fields `GF(p)` and extension fields `GF(p^k)` given by an explicit
//! modulus. An element of `GF(p^k)` is encoded as the integer
//! `c0 + c1 p + ... + c_{k-1} p^{k-1}` of its coefficient vector, so for
//! `p = 2` bit `i` holds the coefficient of `x^i`.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};

/// Field arithmetic over an element handle type.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Copy + Eq + Hash + Ord + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;

    /// Number of elements `q`.
    fn order(&self) -> u64;
    /// The `i`-th element in the canonical enumeration, `0 <= i < q`.
    fn nth(&self, i: u64) -> Self::Elem;
    /// Embeds an integer through the prime subfield.
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, v: i64) -> Self::Elem;

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, bi)).ok_or(Error::DivisionByZero)
    }

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn pow(&self, a: Self::Elem, mut exp: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Uniform random element.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.nth(rng.gen_range(0..self.order()))
    }

    /// Uniform random nonzero element.
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.nth(rng.gen_range(1..self.order()))
    }
}

/// Element of a [`Gf`] field in canonical integer encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe(u32);

impl Fe {
    pub const fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parameters of `GF(p^k)`: characteristic, extension degree and, for
/// `k > 1`, the monic modulus with ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub characteristic: u32,
    pub degree: u32,
    pub modulus: Vec<u32>,
}

/// Largest extension field for which log/exp tables are built.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 16;

/// Primitive polynomials over GF(2), ascending coefficients, `k = 1..=16`.
const BINARY_DEFAULT_MODULI: [&[u32]; 16] = [
    &[0, 1],
    &[1, 1, 1],
    &[1, 1, 0, 1],
    &[1, 1, 0, 0, 1],
    &[1, 0, 1, 0, 0, 1],
    &[1, 1, 0, 0, 0, 0, 1],
    &[1, 1, 0, 0, 0, 0, 0, 1],
    &[1, 0, 1, 1, 1, 0, 0, 0, 1],
    &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1],
    &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1],
    &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    &[1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1],
    &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    &[1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1],
    &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    &[1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1],
];

impl FieldSpec {
    pub fn prime(p: u32) -> Self {
        Self { characteristic: p, degree: 1, modulus: Vec::new() }
    }

    pub fn extension(p: u32, modulus: Vec<u32>) -> Self {
        let degree = modulus.len().saturating_sub(1) as u32;
        Self { characteristic: p, degree, modulus }
    }

    /// `GF(2^k)` with the default primitive modulus (e.g. `x^4+x+1` for `k=4`).
    pub fn binary(k: u32) -> Result<Self> {
        match k {
            1 => Ok(Self::prime(2)),
            2..=16 => Ok(Self::extension(2, BINARY_DEFAULT_MODULI[k as usize - 1].to_vec())),
            _ => Err(Error::InvalidField(format!("no default modulus for GF(2^{k})"))),
        }
    }

    /// The default field of order `q`: `GF(q)` for prime `q`, `GF(2^k)` with
    /// the default modulus for `q = 2^k`.
    pub fn for_order(q: u64) -> Result<Self> {
        if q >= 2 && q <= u32::MAX as u64 && is_prime(q as u32) {
            return Ok(Self::prime(q as u32));
        }
        if q.is_power_of_two() && q > 2 {
            return Self::binary(q.trailing_zeros());
        }
        Err(Error::InvalidField(format!("no default field of order {q}")))
    }

    pub fn order(&self) -> u64 {
        (self.characteristic as u64).pow(self.degree)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 1 {
            write!(f, "GF({})", self.characteristic)
        } else {
            let m: Vec<String> = self.modulus.iter().map(u32::to_string).collect();
            write!(f, "GF({}^{}; {})", self.characteristic, self.degree, m.join(","))
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `GF(p)`, `GF(p^k; m0,...,mk)`, and the shorthands `GF(2^k)` /
    /// `GF(q)` for default binary moduli.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidField(format!("cannot parse field spec `{s}`"));
        let body = s.trim().strip_prefix("GF(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (order, modulus) = match body.split_once(';') {
            Some((o, m)) => (o.trim(), Some(m.trim())),
            None => (body.trim(), None),
        };
        let (p, k) = match order.split_once('^') {
            Some((p, k)) => (p.trim().parse::<u32>().map_err(|_| bad())?, k.trim().parse::<u32>().map_err(|_| bad())?),
            None => {
                let q = order.parse::<u64>().map_err(|_| bad())?;
                if modulus.is_none() {
                    return Self::for_order(q);
                }
                return Err(bad());
            }
        };
        match modulus {
            Some(m) => {
                let coeffs =
                    m.split(',').map(|c| c.trim().parse::<u32>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
                if coeffs.len() != k as usize + 1 {
                    return Err(Error::InvalidField(format!(
                        "modulus of GF({p}^{k}) needs {} coefficients, got {}",
                        k + 1,
                        coeffs.len()
                    )));
                }
                if k == 1 {
                    return Ok(Self::prime(p));
                }
                Ok(Self::extension(p, coeffs))
            }
            None if k == 1 => Ok(Self::prime(p)),
            None if p == 2 => Self::binary(k),
            None => Err(Error::InvalidField(format!("GF({p}^{k}) needs an explicit modulus"))),
        }
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Debug)]
enum Repr {
    Prime { p: u32 },
    Extension { p: u32, exp: Vec<u32>, log: Vec<u32> },
}

#[derive(Debug)]
struct GfInner {
    spec: FieldSpec,
    q: u32,
    repr: Repr,
}

/// A finite field `GF(p)` or `GF(p^k)`; cheap to clone.
#[derive(Clone)]
pub struct Gf {
    inner: Arc<GfInner>,
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner.spec)
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.inner.spec == other.inner.spec
    }
}

impl Eq for Gf {}

impl Gf {
    /// Builds the field, checking that `p` is prime and that the modulus is
    /// irreducible (for `k > 1`).
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let p = spec.characteristic;
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("characteristic {p} is not prime")));
        }
        if spec.degree == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let repr = if spec.degree == 1 {
            Repr::Prime { p }
        } else {
            let q = spec.order();
            if q > MAX_EXTENSION_ORDER {
                return Err(Error::InvalidField(format!(
                    "extension fields are limited to order {MAX_EXTENSION_ORDER}, got {q}"
                )));
            }
            build_extension(&spec)?
        };
        let q = match &repr {
            Repr::Prime { p } => *p,
            Repr::Extension { exp, .. } => exp.len() as u32 / 2 + 1,
        };
        Ok(Self { inner: Arc::new(GfInner { spec, q, repr }) })
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(FieldSpec::prime(p))
    }

    pub fn binary(k: u32) -> Result<Self> {
        Self::new(FieldSpec::binary(k)?)
    }

    pub fn for_order(q: u64) -> Result<Self> {
        Self::new(FieldSpec::for_order(q)?)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.inner.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.spec.characteristic
    }

    /// Checked conversion from the integer encoding.
    pub fn elem(&self, v: u64) -> Result<Fe> {
        if v < self.inner.q as u64 {
            Ok(Fe(v as u32))
        } else {
            Err(Error::FieldMismatch(format!("{v} is not an element of {}", self.inner.spec)))
        }
    }

    /// Iterates the elements in canonical order `0, 1, ..., q-1`.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.inner.q).map(Fe)
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.spec.fmt(f)
    }
}

impl FromStr for Gf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Gf::new(s.parse()?)
    }
}

fn digits_add(p: u32, mut a: u32, mut b: u32) -> u32 {
    let (mut out, mut place) = (0, 1);
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn digits_neg(p: u32, mut a: u32) -> u32 {
    let (mut out, mut place) = (0, 1);
    while a > 0 {
        out += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    out
}

/// Schoolbook multiplication of two encoded residues modulo a monic modulus.
fn slow_mul(p: u32, modulus: &[u32], a: u32, b: u32) -> u32 {
    let k = modulus.len() - 1;
    let digits = |mut v: u32| {
        let mut d = vec![0u64; k];
        for slot in d.iter_mut() {
            *slot = (v % p) as u64;
            v /= p;
        }
        d
    };
    let (da, db) = (digits(a), digits(b));
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, x) in da.iter().enumerate() {
        for (j, y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p64;
        }
    }
    for top in (k..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        prod[top] = 0;
        for (i, m) in modulus[..k].iter().enumerate() {
            let idx = top - k + i;
            prod[idx] = (prod[idx] + p64 - (c * *m as u64) % p64) % p64;
        }
    }
    prod[..k].iter().rev().fold(0u64, |acc, d| acc * p64 + d) as u32
}

fn slow_pow(p: u32, modulus: &[u32], a: u32, mut e: u64) -> u32 {
    let (mut base, mut acc) = (a, 1u32);
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(p, modulus, acc, base);
        }
        base = slow_mul(p, modulus, base, base);
        e >>= 1;
    }
    acc
}

/// Finds a primitive element and tabulates its powers. A generator of order
/// `q-1` exists iff the quotient ring is a field, which doubles as the
/// irreducibility test for the modulus.
fn build_extension(spec: &FieldSpec) -> Result<Repr> {
    let p = spec.characteristic;
    let modulus = &spec.modulus;
    if modulus.len() != spec.degree as usize + 1 {
        return Err(Error::InvalidField("modulus length does not match degree".into()));
    }
    if modulus.iter().any(|&c| c >= p) {
        return Err(Error::InvalidField("modulus coefficients must be reduced mod p".into()));
    }
    if *modulus.last().unwrap() != 1 {
        return Err(Error::InvalidField("modulus must be monic".into()));
    }
    let q = spec.order();
    let group = q - 1;
    let factors = prime_factors(group);
    let generator = (2..q as u32).find(|&c| {
        slow_pow(p, modulus, c, group) == 1 && factors.iter().all(|r| slow_pow(p, modulus, c, group / r) != 1)
    });
    let Some(generator) = generator else {
        return Err(Error::InvalidField(format!("modulus of {spec} is not irreducible")));
    };
    let group = group as usize;
    let mut exp = vec![0u32; 2 * group];
    let mut log = vec![0u32; q as usize];
    let mut cur = 1u32;
    for i in 0..group {
        exp[i] = cur;
        exp[i + group] = cur;
        log[cur as usize] = i as u32;
        cur = slow_mul(p, modulus, cur, generator);
    }
    Ok(Repr::Extension { p, exp, log })
}

impl Field for Gf {
    type Elem = Fe;

    #[inline]
    fn zero(&self) -> Fe {
        Fe(0)
    }

    #[inline]
    fn one(&self) -> Fe {
        Fe(1)
    }

    #[inline]
    fn add(&self, a: Fe, b: Fe) -> Fe {
        match &self.inner.repr {
            Repr::Prime { p } => {
                let s = a.0 as u64 + b.0 as u64;
                let p = *p as u64;
                Fe(if s >= p { s - p } else { s } as u32)
            }
            Repr::Extension { p: 2, .. } => Fe(a.0 ^ b.0),
            Repr::Extension { p, .. } => Fe(digits_add(*p, a.0, b.0)),
        }
    }

    #[inline]
    fn neg(&self, a: Fe) -> Fe {
        match &self.inner.repr {
            Repr::Prime { p } => Fe(if a.0 == 0 { 0 } else { p - a.0 }),
            Repr::Extension { p: 2, .. } => a,
            Repr::Extension { p, .. } => Fe(digits_neg(*p, a.0)),
        }
    }

    #[inline]
    fn sub(&self, a: Fe, b: Fe) -> Fe {
        match &self.inner.repr {
            Repr::Prime { p } => Fe(if a.0 >= b.0 { a.0 - b.0 } else { (a.0 as u64 + *p as u64 - b.0 as u64) as u32 }),
            Repr::Extension { p: 2, .. } => Fe(a.0 ^ b.0),
            Repr::Extension { p, .. } => Fe(digits_add(*p, a.0, digits_neg(*p, b.0))),
        }
    }

    #[inline]
    fn mul(&self, a: Fe, b: Fe) -> Fe {
        match &self.inner.repr {
            Repr::Prime { p } => Fe(((a.0 as u64 * b.0 as u64) % *p as u64) as u32),
            Repr::Extension { exp, log, .. } => {
                if a.0 == 0 || b.0 == 0 {
                    Fe(0)
                } else {
                    Fe(exp[(log[a.0 as usize] + log[b.0 as usize]) as usize])
                }
            }
        }
    }

    fn inv(&self, a: Fe) -> Option<Fe> {
        if a.0 == 0 {
            return None;
        }
        match &self.inner.repr {
            Repr::Prime { p } => {
                // extended Euclid on (a, p)
                let (mut r0, mut r1) = (*p as i64, a.0 as i64);
                let (mut t0, mut t1) = (0i64, 1i64);
                while r1 != 0 {
                    let quot = r0 / r1;
                    (r0, r1) = (r1, r0 - quot * r1);
                    (t0, t1) = (t1, t0 - quot * t1);
                }
                Some(Fe(t0.rem_euclid(*p as i64) as u32))
            }
            Repr::Extension { exp, log, .. } => {
                let group = exp.len() / 2;
                Some(Fe(exp[(group - log[a.0 as usize] as usize) % group]))
            }
        }
    }

    fn order(&self) -> u64 {
        self.inner.q as u64
    }

    fn nth(&self, i: u64) -> Fe {
        debug_assert!(i < self.inner.q as u64);
        Fe(i as u32)
    }

    fn from_int(&self, v: i64) -> Fe {
        let p = self.inner.spec.characteristic as i64;
        Fe(v.rem_euclid(p) as u32)
    }
}
