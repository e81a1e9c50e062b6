use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::laurent::{Exp, LaurentPoly, Vars};
use super::upoly::{Bivariate, GcdRing, UPoly};
use super::PolyError;

/// Reduced quotient of Laurent polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial divisible by no
/// variable, coprime to the numerator, and its lexicographically greatest
/// term is positive. Equal values therefore have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, PolyError> {
        if num.vars() != den.vars() {
            return Err(PolyError::VarMismatch(num.vars(), den.vars()));
        }
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(reduce(num, den))
    }

    pub fn zero(vars: Vars) -> Self {
        RationalFn { num: LaurentPoly::zero(vars), den: LaurentPoly::one(vars) }
    }

    pub fn one(vars: Vars) -> Self {
        Self::from_poly(LaurentPoly::one(vars))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let vars = p.vars();
        RationalFn { num: p, den: LaurentPoly::one(vars) }
    }

    pub fn vars(&self) -> Vars {
        self.num.vars()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this value equals, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.den == other.den {
            return Self::new(self.num.try_add(&other.num)?, self.den.clone());
        }
        let n = &self.num.try_mul(&other.den)? + &(&other.num * &self.den);
        Self::new(n, &self.den * &other.den)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self::from_poly(self.num.try_mul(&other.num)?));
        }
        Self::new(self.num.try_mul(&other.num)?, &self.den * &other.den)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, PolyError> {
        Self::new(self.num.try_mul(&other.den)?, &self.den * &other.num)
    }

    pub fn neg(&self) -> Self {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self, PolyError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow_i(&self, k: i64) -> Result<Self, PolyError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        Ok(RationalFn { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// Raises to the power `doubled / 2`. Odd `doubled` needs a square-root monomial.
    pub(crate) fn pow_half(&self, doubled: i64) -> Result<Self, PolyError> {
        if doubled % 2 == 0 {
            return self.pow_i(doubled / 2);
        }
        let (e, c) = self.as_poly().and_then(|p| p.as_monomial()).ok_or(PolyError::NoSquareRoot)?;
        if !c.is_one() || e[0] % 2 != 0 || e[1] % 2 != 0 {
            return Err(PolyError::NoSquareRoot);
        }
        let root: Exp = [e[0] / 2, e[1] / 2];
        let m = LaurentPoly::monomial(self.vars(), [root[0] * doubled, root[1] * doubled], 1);
        Ok(Self::from_poly(m))
    }

    /// Evaluates every variable at a rational function over `target`.
    pub fn eval(&self, images: &[RationalFn], target: Vars) -> Result<Self, PolyError> {
        let n = self.num.eval(images, target)?;
        let d = self.den.eval(images, target)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        n.try_div(&d)
    }

    /// Substitutes `value` for variable `which`; see [`LaurentPoly::substitute`].
    pub fn substitute(&self, which: char, value: &LaurentPoly) -> Result<Self, PolyError> {
        let n = self.num.substitute(which, value)?;
        let d = self.den.substitute(which, value)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        n.try_div(&d)
    }

    pub fn invert_var(&self, i: usize) -> Self {
        Self::new(self.num.invert_var(i), self.den.invert_var(i)).expect("nonzero denominator")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

fn min_exps(p: &LaurentPoly) -> Exp {
    let mut m = [i64::MAX, i64::MAX];
    for (e, _) in p.terms() {
        m[0] = m[0].min(e[0]);
        m[1] = m[1].min(e[1]);
    }
    m
}

/// Largest steps dividing every exponent, so that e.g. polynomials in `q^2`
/// are reduced as polynomials in one variable of half the degree.
fn exponent_steps(ps: &[&LaurentPoly]) -> [i64; 2] {
    let mut step = [0i64, 0];
    for p in ps {
        for (e, _) in p.terms() {
            step[0] = step[0].gcd(&e[0]);
            step[1] = step[1].gcd(&e[1]);
        }
    }
    step.map(|s| s.max(1))
}

fn to_bivariate(p: &LaurentPoly, step: [i64; 2]) -> Bivariate {
    let mut outer: Vec<Vec<BigInt>> = Vec::new();
    for (e, c) in p.terms() {
        let (i, j) = ((e[0] / step[0]) as usize, (e[1] / step[1]) as usize);
        if outer.len() <= i {
            outer.resize(i + 1, Vec::new());
        }
        if outer[i].len() <= j {
            outer[i].resize(j + 1, BigInt::from(0));
        }
        outer[i][j] += c;
    }
    UPoly::new(outer.into_iter().map(UPoly::new).collect())
}

fn from_bivariate(b: &Bivariate, vars: Vars, step: [i64; 2]) -> LaurentPoly {
    let mut p = LaurentPoly::zero(vars);
    for (i, inner) in b.coeffs.iter().enumerate() {
        for (j, c) in inner.coeffs.iter().enumerate() {
            p.add_term([i as i64 * step[0], j as i64 * step[1]], c.clone());
        }
    }
    p
}

fn reduce(num: LaurentPoly, den: LaurentPoly) -> RationalFn {
    let vars = num.vars();
    if num.is_zero() {
        return RationalFn::zero(vars);
    }
    if let Some((e, c)) = den.as_monomial() {
        // Monomial denominators only need a unit check.
        if c.is_one() || *c == BigInt::from(-1) {
            let n = num.shift([-e[0], -e[1]]);
            let n = if c.is_one() { n } else { -n };
            return RationalFn::from_poly(n);
        }
    }
    let mn = min_exps(&num);
    let md = min_exps(&den);
    let n0 = num.shift([-mn[0], -mn[1]]);
    let d0 = den.shift([-md[0], -md[1]]);
    let step = exponent_steps(&[&n0, &d0]);
    let (bn, bd) = (to_bivariate(&n0, step), to_bivariate(&d0, step));
    let g = bn.gcd(&bd);
    let mut bn = bn.div_exact(&g).expect("gcd divides numerator");
    let mut bd = bd.div_exact(&g).expect("gcd divides denominator");
    if bd.lead_sign() < 0 {
        bn = bn.neg();
        bd = bd.neg();
    }
    let n = from_bivariate(&bn, vars, step).shift([mn[0] - md[0], mn[1] - md[1]]);
    let d = from_bivariate(&bd, vars, step);
    // d0 had no monomial factor and the gcd cannot introduce one.
    RationalFn { num: n, den: d }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Vars = Vars::one('q');
    const QT: Vars = Vars::two('q', 't');

    fn p1(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Q, terms)
    }

    fn p2(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms2(QT, terms)
    }

    /// (1 + t^{-1} q) / (1 - q^2)
    fn disjoint_factor() -> RationalFn {
        RationalFn::new(p2(&[(0, 0, 1), (1, -1, 1)]), p2(&[(0, 0, 1), (2, 0, -1)])).unwrap()
    }

    #[test]
    fn cancellation() {
        let r = disjoint_factor();
        let prod = r.try_mul(&RationalFn::from_poly(p2(&[(0, 0, 1), (2, 0, -1)]))).unwrap();
        assert_eq!(prod.as_poly().unwrap(), &p2(&[(0, 0, 1), (1, -1, 1)]));
    }

    #[test]
    fn substitution_of_t() {
        let r = disjoint_factor();
        let s = r.substitute('t', &p1(&[(-3, -1)])).unwrap();
        assert_eq!(s.as_poly().unwrap(), &p1(&[(0, 1), (2, 1)]));
        // identity substitution into the bare variable
        let t = RationalFn::from_poly(LaurentPoly::var(Vars::one('t'), 0));
        let s = t.substitute('t', &p1(&[(-3, -1)])).unwrap();
        assert_eq!(s.as_poly().unwrap(), &p1(&[(-3, -1)]));
    }

    #[test]
    fn substitution_into_vanishing_denominator() {
        // 1/(1 - q t) with t = q^{-1}
        let r = RationalFn::new(p2(&[(0, 0, 1)]), p2(&[(0, 0, 1), (1, 1, -1)])).unwrap();
        assert!(matches!(r.substitute('t', &p1(&[(-1, 1)])), Err(PolyError::DivisionByZero)));
    }

    #[test]
    fn canonical_form_is_unique() {
        // (q^2 - 1)/(q - 1) built two ways equals q + 1 / 1
        let a = RationalFn::new(p1(&[(2, 1), (0, -1)]), p1(&[(1, 1), (0, -1)])).unwrap();
        let b = RationalFn::new(p1(&[(1, -1), (0, -1)]), p1(&[(0, -1)])).unwrap();
        assert_eq!(a, b);
        // q^{-1}/(q^{-2} - 1) = q / (1 - q^2) = -q/(q^2 - 1)
        let c = RationalFn::new(p1(&[(-1, 1)]), p1(&[(-2, 1), (0, -1)])).unwrap();
        let d = RationalFn::new(p1(&[(1, -1)]), p1(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(c, d);
        assert_eq!(c.denominator(), &p1(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(RationalFn::new(p1(&[(0, 1)]), LaurentPoly::zero(Q)), Err(PolyError::DivisionByZero)));
    }

    #[test]
    fn half_powers() {
        let q2 = RationalFn::from_poly(p1(&[(2, 1)]));
        let r = q2.pow_half(3).unwrap();
        assert_eq!(r.as_poly().unwrap(), &p1(&[(3, 1)]));
        // q has the square root q^(1/2), but q^(1/2) has none
        let half = q2.pow_half(1).unwrap().pow_half(1).unwrap();
        assert_eq!(half, RationalFn::from_poly(LaurentPoly::monomial(Q, [1, 0], 1)));
        let bad = RationalFn::from_poly(LaurentPoly::monomial(Q, [1, 0], 1));
        assert!(matches!(bad.pow_half(1), Err(PolyError::NoSquareRoot)));
    }
}
