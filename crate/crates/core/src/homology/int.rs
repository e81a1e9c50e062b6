use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// Integer that stays machine-sized until an operation overflows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Int {
    S(i64),
    B(BigInt),
}

impl Int {
    pub fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Int::S(v),
            None => Int::B(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::S(v) => BigInt::from(*v),
            Int::B(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::S(0))
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Int::S(1) | Int::S(-1))
    }

    pub fn add(&self, o: &Self) -> Self {
        if let (Int::S(a), Int::S(b)) = (self, o) {
            if let Some(s) = a.checked_add(*b) {
                return Int::S(s);
            }
        }
        Int::from_big(self.to_big() + o.to_big())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if let (Int::S(a), Int::S(b)) = (self, o) {
            if let Some(s) = a.checked_mul(*b) {
                return Int::S(s);
            }
        }
        Int::from_big(self.to_big() * o.to_big())
    }

    /// `self - q * x`
    pub fn mul_sub(&self, q: &Self, x: &Self) -> Self {
        if let (Int::S(a), Int::S(q), Int::S(x)) = (self, q, x) {
            if let Some(s) = q.checked_mul(*x).and_then(|p| a.checked_sub(p)) {
                return Int::S(s);
            }
        }
        Int::from_big(self.to_big() - q.to_big() * x.to_big())
    }

    pub fn cmp_abs(&self, o: &Self) -> Ordering {
        match (self, o) {
            (Int::S(a), Int::S(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.to_big().abs().cmp(&o.to_big().abs()),
        }
    }

    /// Nearest-integer quotient `self / p`, so `|self - q p| ≤ |p| / 2`.
    pub fn div_round(&self, p: &Self) -> Self {
        if let (Int::S(a), Int::S(b)) = (self, p) {
            if *a != i64::MIN && *b != i64::MIN {
                let (q, r) = (a.div_euclid(*b), a.rem_euclid(*b));
                let q = if 2 * (r as i128) > (b.unsigned_abs() as i128) { q + b.signum() } else { q };
                return Int::S(q);
            }
        }
        let (a, b) = (self.to_big(), p.to_big());
        let (q, r) = a.div_mod_floor(&b);
        let q = if (&r * 2i32).abs() > b.abs() {
            if r.signum() == b.signum() {
                q + 1
            } else {
                q - 1
            }
        } else {
            q
        };
        Int::from_big(q)
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::S(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes() {
        let a = Int::S(i64::MAX);
        let s = a.add(&Int::S(1));
        assert!(matches!(s, Int::B(_)));
        assert_eq!(s.add(&Int::S(-1)), Int::S(i64::MAX));
        let p = a.mul(&Int::S(2));
        assert_eq!(p.to_big(), BigInt::from(i64::MAX) * 2);
    }

    #[test]
    fn rounded_quotient() {
        for a in -20i64..=20 {
            for b in [-7i64, -3, -2, 2, 3, 5] {
                let q = Int::S(a).div_round(&Int::S(b));
                let r = Int::S(a).mul_sub(&q, &Int::S(b));
                let Int::S(r) = r else { panic!() };
                assert!(2 * r.abs() <= b.abs(), "a={a} b={b} r={r}");
                let big = Int::B(BigInt::from(a)).div_round(&Int::B(BigInt::from(b)));
                let rb = a - big.to_big().to_i64().unwrap() * b;
                assert!(2 * rb.abs() <= b.abs());
            }
        }
    }
}
