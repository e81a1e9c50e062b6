use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::rational::RationalFn;
use super::PolyError;

/// Variable names and arity of a polynomial ring (one or two variables).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Vars {
    names: [char; 2],
    arity: u8,
}

impl Vars {
    pub const fn one(x: char) -> Self {
        Vars { names: [x, '\0'], arity: 1 }
    }

    pub const fn two(x: char, y: char) -> Self {
        Vars { names: [x, y], arity: 2 }
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn name(&self, i: usize) -> char {
        assert!(i < self.arity(), "variable index {i} out of range");
        self.names[i]
    }

    pub fn index_of(&self, x: char) -> Option<usize> {
        (0..self.arity()).find(|&i| self.names[i] == x)
    }
}

/// Exponent vector in half-steps: `[3, 0]` is `x^{3/2}`. Unused slots are 0.
pub type Exp = [i64; 2];

/// Laurent polynomial in one or two variables with integer coefficients and
/// half-integer exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Exp, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: Vars) -> Self {
        LaurentPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: Vars, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, [0, 0], c)
    }

    /// `c · x^{e0/2} y^{e1/2}` with exponents given in half-steps.
    pub fn monomial(vars: Vars, doubled: Exp, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero(vars);
        if vars.arity() == 1 {
            assert_eq!(doubled[1], 0, "second exponent of a one-variable monomial");
        }
        if !c.is_zero() {
            p.terms.insert(doubled, c);
        }
        p
    }

    /// `c · x_i^k` for an integral exponent `k`.
    pub fn var_pow(vars: Vars, i: usize, k: i64, c: impl Into<BigInt>) -> Self {
        let mut e = [0, 0];
        e[i] = 2 * k;
        Self::monomial(vars, e, c)
    }

    pub fn var(vars: Vars, i: usize) -> Self {
        Self::var_pow(vars, i, 1, 1)
    }

    /// Builds a one-variable polynomial from `(integral exponent, coefficient)` pairs.
    pub fn from_terms(vars: Vars, terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero(vars);
        for &(e, c) in terms {
            p.add_term([2 * e, 0], BigInt::from(c));
        }
        p
    }

    /// Builds a two-variable polynomial from `(e0, e1, coefficient)` with integral exponents.
    pub fn from_terms2(vars: Vars, terms: &[(i64, i64, i64)]) -> Self {
        let mut p = Self::zero(vars);
        for &(a, b, c) in terms {
            p.add_term([2 * a, 2 * b], BigInt::from(c));
        }
        p
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0]).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient at a half-step exponent vector (0 when absent).
    pub fn coefficient(&self, doubled: Exp) -> BigInt {
        self.terms.get(&doubled).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^e` for an integral exponent of a one-variable polynomial.
    pub fn coeff(&self, e: i64) -> BigInt {
        self.coefficient([2 * e, 0])
    }

    /// Coefficient of `x^a y^b` with integral exponents.
    pub fn coeff2(&self, a: i64, b: i64) -> BigInt {
        self.coefficient([2 * a, 2 * b])
    }

    pub fn add_term(&mut self, e: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// True when every exponent is integral.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e[0] % 2 == 0 && e[1] % 2 == 0)
    }

    /// Half-integral flags per variable (for pretty printing and metadata).
    pub fn parity_flags(&self) -> [bool; 2] {
        let mut f = [false, false];
        for e in self.terms.keys() {
            for (i, flag) in f.iter_mut().enumerate() {
                *flag |= e[i] % 2 != 0;
            }
        }
        f
    }

    /// Minimal and maximal half-step exponent of variable `i`.
    pub fn exp_range(&self, i: usize) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|e| e[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// `Some((doubled exponent, coefficient))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(Exp, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VarMismatch(self.vars, other.vars))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1]], c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        LaurentPoly { vars: self.vars, terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    /// Multiplies by the monomial with half-step exponent `shift`.
    pub fn shift(&self, shift: Exp) -> Self {
        LaurentPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, a)| ([e[0] + shift[0], e[1] + shift[1]], a.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Replaces variable `i` by its inverse.
    pub fn invert_var(&self, i: usize) -> Self {
        LaurentPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| {
                    let mut e = *e;
                    e[i] = -e[i];
                    (e, a.clone())
                })
                .collect(),
        }
    }

    /// Same coefficients, new variable names (arity must agree).
    pub fn rename(&self, vars: Vars) -> Self {
        assert_eq!(vars.arity(), self.vars.arity(), "rename must keep arity");
        LaurentPoly { vars, terms: self.terms.clone() }
    }

    /// Evaluates at the value `x = value` for a one-variable polynomial with integral exponents.
    pub fn eval_int(&self, value: i64) -> Option<BigInt> {
        let v = BigInt::from(value);
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            if e[0] % 2 != 0 || (e[0] < 0 && value.abs() != 1) {
                return None;
            }
            let k = e[0] / 2;
            let p =
                if k >= 0 { num_traits::pow(v.clone(), k as usize) } else { num_traits::pow(v.clone(), (-k) as usize) };
            acc += c * p;
        }
        Some(acc)
    }

    /// Evaluates every variable at a rational function over `target`.
    ///
    /// A half-integral power of a variable requires its image to be a
    /// monomial with coefficient 1 and even half-step exponents.
    pub fn eval(&self, images: &[RationalFn], target: Vars) -> Result<RationalFn, PolyError> {
        assert_eq!(images.len(), self.vars.arity(), "one image per variable");
        let mut acc = RationalFn::zero(target);
        let mut cache: Vec<BTreeMap<i64, RationalFn>> = vec![BTreeMap::new(); images.len()];
        for (e, c) in &self.terms {
            let mut term = RationalFn::from_poly(LaurentPoly::constant(target, c.clone()));
            for (i, img) in images.iter().enumerate() {
                if e[i] == 0 {
                    continue;
                }
                let p = match cache[i].get(&e[i]) {
                    Some(p) => p.clone(),
                    None => {
                        let p = img.pow_half(e[i])?;
                        cache[i].insert(e[i], p.clone());
                        p
                    }
                };
                term = term.try_mul(&p)?;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Substitutes `value` for the variable `which`. The remaining variables
    /// are matched by name inside `value`'s ring, which is the result ring.
    pub fn substitute(&self, which: char, value: &LaurentPoly) -> Result<RationalFn, PolyError> {
        let target = value.vars();
        let mut images = Vec::with_capacity(self.vars.arity());
        for i in 0..self.vars.arity() {
            let name = self.vars.name(i);
            if name == which {
                images.push(RationalFn::from_poly(value.clone()));
            } else {
                let j = target.index_of(name).ok_or(PolyError::VarMismatch(self.vars, target))?;
                images.push(RationalFn::from_poly(LaurentPoly::var(target, j)));
            }
        }
        if self.vars.index_of(which).is_none() {
            return Err(PolyError::UnknownVariable(which));
        }
        self.eval(&images, target)
    }

    /// Drops terms whose exponent of variable `i` (half-steps) is outside `[lo, hi]`.
    pub fn truncate(&self, i: usize, lo: i64, hi: i64) -> Self {
        LaurentPoly {
            vars: self.vars,
            terms: self.terms.iter().filter(|(e, _)| e[i] >= lo && e[i] <= hi).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mut m = serde_json::Map::new();
                for (i, x) in e.iter().enumerate().take(self.vars.arity()) {
                    m.insert(self.vars.name(i).to_string(), json!(x));
                }
                m.insert("c".into(), bigint_json(c));
                Value::Object(m)
            })
            .collect();
        json!({ "terms": terms, "doubled_exponents": true })
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn fmt_exp(name: char, e: i64) -> String {
    if e == 2 {
        name.to_string()
    } else if e % 2 == 0 && e > 0 {
        format!("{name}^{}", e / 2)
    } else if e % 2 == 0 {
        format!("{name}^({})", e / 2)
    } else {
        format!("{name}^({e}/2)")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> =
                (0..self.vars.arity()).filter(|&i| e[i] != 0).map(|i| fmt_exp(self.vars.name(i), e[i])).collect();
            let abs = c.abs();
            let body = match (mono.is_empty(), abs.is_one()) {
                (true, _) => abs.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{abs}*{}", mono.join("*")),
            };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("polynomial variables mismatch")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.check_vars(rhs).expect("polynomial variables mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.check_vars(rhs).expect("polynomial variables mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { vars: self.vars, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("polynomial variables mismatch")
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Vars = Vars::one('q');
    const QT: Vars = Vars::two('q', 't');

    fn q(k: i64) -> LaurentPoly {
        LaurentPoly::var_pow(Q, 0, k, 1)
    }

    #[test]
    fn binomial_square() {
        let a = q(1) + q(-1);
        assert_eq!(&a * &a, LaurentPoly::from_terms(Q, &[(2, 1), (0, 2), (-2, 1)]));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let p = LaurentPoly::from_terms(Q, &[(3, 2), (-1, -5)]);
        let z = &p + &(-&p);
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn coefficients() {
        let p = LaurentPoly::from_terms(Q, &[(2, 1), (0, 2)]);
        assert_eq!(p.coeff(2), BigInt::from(1));
        assert_eq!(LaurentPoly::zero(Q).coeff(1), BigInt::zero());
        let half = LaurentPoly::monomial(Q, [1, 0], 1);
        assert_eq!(half.coefficient([1, 0]), BigInt::from(1));
    }

    #[test]
    fn display() {
        let p = LaurentPoly::monomial(QT, [4, 0], 3) - LaurentPoly::monomial(QT, [-1, 2], 1);
        assert_eq!(p.to_string(), "3*q^2 - q^(-1/2)*t");
        assert_eq!(LaurentPoly::zero(Q).to_string(), "0");
        assert_eq!((q(-2) - LaurentPoly::one(Q)).to_string(), "-1 + q^(-2)");
    }

    #[test]
    fn mismatched_vars() {
        let a = LaurentPoly::one(Q);
        let b = LaurentPoly::one(QT);
        assert!(matches!(a.try_add(&b), Err(PolyError::VarMismatch(..))));
    }

    #[test]
    fn json_terms() {
        let p = LaurentPoly::monomial(QT, [4, -1], 3);
        let v = p.to_json();
        assert_eq!(v["terms"][0]["q"], 4);
        assert_eq!(v["terms"][0]["t"], -1);
        assert_eq!(v["terms"][0]["c"], 3);
    }
}
