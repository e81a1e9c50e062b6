//! Dense univariate polynomials over a gcd domain, nested once to give the
//! bivariate integer polynomials used for rational-function reduction.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) trait GcdRing: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(self / other)` when the division is exact.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    /// Greatest common divisor with positive leading sign.
    fn gcd(&self, other: &Self) -> Self;
    /// Sign of the leading coefficient (recursively), 0 for zero.
    fn lead_sign(&self) -> i8;
}

impl GcdRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn lead_sign(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

/// Coefficients stored low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub(crate) struct UPoly<R> {
    pub coeffs: Vec<R>,
}

impl<R: GcdRing> UPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &R {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    fn shifted_scale(&self, c: &R, k: usize) -> Self {
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().map(|a| a.mul(c)));
        Self::new(v)
    }

    pub fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    fn primitive(&self) -> Self {
        if GcdRing::is_zero(self) {
            return self.clone();
        }
        let c = self.content();
        let mut p =
            Self::new(self.coeffs.iter().map(|a| a.div_exact(&c).expect("content divides coefficients")).collect());
        if p.lead_sign() < 0 {
            p = GcdRing::neg(&p);
        }
        p
    }

    /// `lc(b)^(deg self - deg b + 1) · self mod b`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero");
        let lb = b.lead().clone();
        let mut r = self.clone();
        let mut missing = self.degree().map_or(0, |d| (d + 1).saturating_sub(db));
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().clone();
            r = GcdRing::sub(&r.scale(&lb), &b.shifted_scale(&lr, dr - db));
            missing -= 1;
        }
        for _ in 0..missing {
            r = r.scale(&lb);
        }
        r
    }

    /// Subresultant remainder sequence; returns the last nonzero term.
    fn subresultant_last(mut a: Self, mut b: Self) -> Self {
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b);
            if GcdRing::is_zero(&r) {
                return b;
            }
            if r.degree() == Some(0) {
                return r;
            }
            let mut div = g.clone();
            for _ in 0..delta {
                div = div.mul(&h);
            }
            a = b;
            b = Self::new(
                r.coeffs.iter().map(|c| c.div_exact(&div).expect("subresultant division is exact")).collect(),
            );
            g = a.lead().clone();
            // h <- g^delta / h^(delta - 1)
            let mut num = R::one();
            for _ in 0..delta {
                num = num.mul(&g);
            }
            let mut den = R::one();
            for _ in 1..delta {
                den = den.mul(&h);
            }
            h = num.div_exact(&den).expect("subresultant division is exact");
        }
    }
}

impl<R: GcdRing> GcdRing for UPoly<R> {
    fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = R::zero();
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&z);
                    let b = other.coeffs.get(i).unwrap_or(&z);
                    a.add(b)
                })
                .collect(),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        GcdRing::add(self, &GcdRing::neg(other))
    }
    fn mul(&self, other: &Self) -> Self {
        if GcdRing::is_zero(self) || GcdRing::is_zero(other) {
            return GcdRing::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }
    fn neg(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|a| a.neg()).collect() }
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let db = other.degree()?;
        let lb = other.lead().clone();
        let mut r = self.clone();
        let mut q = vec![R::zero(); self.coeffs.len().saturating_sub(db).max(1)];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lead().div_exact(&lb)?;
            r = GcdRing::sub(&r, &other.shifted_scale(&c, dr - db));
            q[dr - db] = c;
        }
        Some(Self::new(q))
    }
    fn gcd(&self, other: &Self) -> Self {
        if GcdRing::is_zero(self) {
            return other.primitive_with_content();
        }
        if GcdRing::is_zero(other) {
            return self.primitive_with_content();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        if b.degree() == Some(0) {
            return Self::constant(c);
        }
        let a = Self::subresultant_last(a, b);
        let mut g = a.primitive().scale(&c);
        if g.lead_sign() < 0 {
            g = GcdRing::neg(&g);
        }
        g
    }
    fn lead_sign(&self) -> i8 {
        self.coeffs.last().map_or(0, |c| c.lead_sign())
    }
}

impl<R: GcdRing> UPoly<R> {
    fn primitive_with_content(&self) -> Self {
        if self.lead_sign() < 0 {
            GcdRing::neg(self)
        } else {
            self.clone()
        }
    }
}

pub(crate) type Bivariate = UPoly<UPoly<BigInt>>;

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> UPoly<BigInt> {
        UPoly::new(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn univariate_gcd() {
        // (x-1)(x+2) and (x-1)(x+3)
        let a = zp(&[-2, 1, 1]);
        let b = zp(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), zp(&[-1, 1]));
        // content is kept: 2(x+1), 4(x+1)
        assert_eq!(zp(&[2, 2]).gcd(&zp(&[4, 4])), zp(&[2, 2]));
    }

    #[test]
    fn exact_division() {
        let a = zp(&[-2, 1, 1]);
        assert_eq!(a.div_exact(&zp(&[-1, 1])), Some(zp(&[2, 1])));
        assert_eq!(a.div_exact(&zp(&[1, 1])), None);
    }

    #[test]
    fn bivariate_gcd() {
        // x + y and x^2 - y^2 (outer x, inner y)
        let x_plus_y: Bivariate = UPoly::new(vec![zp(&[0, 1]), zp(&[1])]);
        let x2_minus_y2: Bivariate = UPoly::new(vec![zp(&[0, 0, -1]), zp(&[]), zp(&[1])]);
        assert_eq!(x_plus_y.gcd(&x2_minus_y2), x_plus_y);
    }
}
