//! Dense univariate polynomials over a [`Field`].

use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::field::Field;

/// Polynomial with ascending coefficients and no trailing zeros.
///
/// Arithmetic takes the field as an explicit context argument.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Copy + Eq> Poly<E> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs<F: Field<Elem = E>>(field: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|&c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant<F: Field<Elem = E>>(field: &F, c: E) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    pub fn one<F: Field<Elem = E>>(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    /// `x - root`.
    pub fn linear_root<F: Field<Elem = E>>(field: &F, root: E) -> Self {
        Self { coeffs: vec![field.neg(root), field.one()] }
    }

    /// Polynomial of degree at most `max_degree` with uniform coefficients.
    pub fn random<F: Field<Elem = E>, R: Rng + ?Sized>(field: &F, max_degree: usize, rng: &mut R) -> Self {
        let coeffs = (0..=max_degree).map(|_| field.random(rng)).collect();
        Self::from_coeffs(field, coeffs)
    }

    /// Uniform polynomial of degree exactly `degree`; monic when asked.
    pub fn random_of_degree<F: Field<Elem = E>, R: Rng + ?Sized>(
        field: &F,
        degree: usize,
        monic: bool,
        rng: &mut R,
    ) -> Self {
        let mut coeffs: Vec<E> = (0..degree).map(|_| field.random(rng)).collect();
        coeffs.push(if monic { field.one() } else { field.random_nonzero(rng) });
        Self { coeffs }
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn lead(&self) -> Option<E> {
        self.coeffs.last().copied()
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff<F: Field<Elem = E>>(&self, field: &F, i: usize) -> E {
        self.coeffs.get(i).copied().unwrap_or_else(|| field.zero())
    }

    /// Coefficient vector padded with zeros to `len` entries.
    pub fn padded<F: Field<Elem = E>>(&self, field: &F, len: usize) -> Vec<E> {
        debug_assert!(self.coeffs.len() <= len);
        let mut v = self.coeffs.clone();
        v.resize(len, field.zero());
        v
    }

    pub fn is_monic<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.lead() == Some(field.one())
    }

    /// Horner evaluation.
    pub fn eval<F: Field<Elem = E>>(&self, field: &F, x: E) -> E {
        self.coeffs.iter().rev().fold(field.zero(), |acc, &c| field.add(field.mul(acc, x), c))
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| field.add(self.coeff(field, i), other.coeff(field, i))).collect();
        Self::from_coeffs(field, coeffs)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| field.sub(self.coeff(field, i), other.coeff(field, i))).collect();
        Self::from_coeffs(field, coeffs)
    }

    pub fn neg<F: Field<Elem = E>>(&self, field: &F) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&c| field.neg(c)).collect() }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: E) -> Self {
        Self::from_coeffs(field, self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Self::from_coeffs(field, out)
    }

    /// Scales to leading coefficient one.
    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Result<Self> {
        let lead = self.lead().ok_or_else(|| invalid("zero polynomial has no monic associate"))?;
        Ok(self.scale(field, field.inv(lead).ok_or(Error::DivisionByZero)?))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem<F: Field<Elem = E>>(&self, field: &F, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.lead().ok_or(Error::DivisionByZero)?;
        let lead_inv = field.inv(lead).ok_or(Error::DivisionByZero)?;
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![field.zero(); rem.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let c = field.mul(rem[shift + dlen - 1], lead_inv);
            quot[shift] = c;
            if field.is_zero(c) {
                continue;
            }
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = field.sub(rem[shift + i], field.mul(c, d));
            }
        }
        rem.truncate(dlen - 1);
        Ok((Self::from_coeffs(field, quot), Self::from_coeffs(field, rem)))
    }

    /// Exact quotient; errors when `divisor` does not divide `self`.
    pub fn div_exact<F: Field<Elem = E>>(&self, field: &F, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(field, divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(invalid("polynomial division is not exact"))
        }
    }

    /// Monic greatest common divisor; `gcd(a, 0) = monic(a)`.
    pub fn gcd<F: Field<Elem = E>>(field: &F, a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(invalid("gcd(0, 0) is undefined"));
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let (_, r) = r0.div_rem(field, &r1)?;
            r0 = r1;
            r1 = r;
        }
        r0.monic(field)
    }

    /// Monic gcd of a list, all-zero lists give `None`.
    pub fn gcd_all<'a, F, I>(field: &F, polys: I) -> Option<Self>
    where
        F: Field<Elem = E>,
        I: IntoIterator<Item = &'a Self>,
        E: 'a,
    {
        polys.into_iter().filter(|p| !p.is_zero()).fold(None, |acc, p| match acc {
            None => p.monic(field).ok(),
            Some(g) => Self::gcd(field, &g, p).ok(),
        })
    }

    /// The unique polynomial of degree `< points.len()` through the points.
    pub fn interpolate<F: Field<Elem = E>>(field: &F, points: &[(E, E)]) -> Result<Self> {
        if points.is_empty() {
            return Err(invalid("interpolation needs at least one point"));
        }
        for (i, (a, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(b, _)| b == a) {
                return Err(Error::DuplicateAbscissa);
            }
        }
        let mut result = Self::zero();
        for (i, &(xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::one(field);
            let mut denom = field.one();
            for (j, &(xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(field, &Self::linear_root(field, xj));
                    denom = field.mul(denom, field.sub(xi, xj));
                }
            }
            result = result.add(field, &basis.scale(field, field.div(yi, denom)?));
        }
        Ok(result)
    }

    /// `prod (x - r)` over the roots.
    pub fn from_roots<F: Field<Elem = E>>(field: &F, roots: impl IntoIterator<Item = E>) -> Self {
        roots.into_iter().fold(Self::one(field), |acc, r| acc.mul(field, &Self::linear_root(field, r)))
    }
}

/// Maximum degree over a vector of polynomials (`-1` if all zero or empty).
pub fn max_degree<E: Copy + Eq>(polys: &[Poly<E>]) -> isize {
    polys.iter().map(Poly::degree).max().unwrap_or(-1)
}
