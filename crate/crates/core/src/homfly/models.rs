use crate::poly::{geometric_sum, mono, quantum_integer, LaurentPoly, Vars, Q};

/// `U = [n]`, `B = [n-1]`, `b = -q^{-1}`: checks `-q^{-1}[n-1] U = [n] b B`.
pub fn fixed_model_one(n: u32) -> bool {
    let (u, b_val) = (quantum_integer(n), quantum_integer(n - 1));
    let b = -&mono(Q, -1);
    let lhs = &(&-&mono(Q, -1) * &b_val) * &u;
    let rhs = &(&quantum_integer(n) * &b) * &b_val;
    lhs == rhs
}

/// `U = 1 + q^2 + ... + q^{2(n-1)}`, `B = 1 + ... + q^{2n}`, `b = -q^{-2}`:
/// checks `U + bB = q^{-2n-2}(U + bq^2 B)`.
pub fn fixed_model_two(n: u32) -> bool {
    let in_q2 = |k: u32| -> LaurentPoly {
        let p = geometric_sum(Vars::one('x'), k);
        let mut out = LaurentPoly::zero(Q);
        for (e, c) in p.terms() {
            out.add_term([2 * e[0], 0], c.clone());
        }
        out
    };
    let (u, big) = (in_q2(n - 1), in_q2(n));
    let b = -&mono(Q, -2);
    let lhs = &u + &(&b * &big);
    let rhs = &mono(Q, -2 * n as i64 - 2) * &(&u + &(&(&b * &mono(Q, 2)) * &big));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_models_hold() {
        for n in 2..=5 {
            assert!(fixed_model_one(n), "model 1, n = {n}");
            assert!(fixed_model_two(n), "model 2, n = {n}");
        }
    }
}
