use super::{HeckeElement, HomflyError};
use crate::poly::{mono, Q};

/// A letter of a braid word that may also contain wide edges `Ē_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WideLetter {
    /// `σ_i` for positive values, `σ_i^{-1}` for negative ones.
    Sigma(i32),
    Wide(usize),
}

/// Parses `"<p>: w1 w2 ..."` where each `w` is a signed generator or `e<i>`.
pub fn parse_wide_word(text: &str) -> Result<(usize, Vec<WideLetter>), HomflyError> {
    let bad = || HomflyError::BadWord(text.to_string());
    let (head, body) = text.split_once(':').ok_or_else(bad)?;
    let strands: usize = head.trim().parse().map_err(|_| bad())?;
    let mut letters = Vec::new();
    for tok in body.split_whitespace() {
        let letter = match tok.strip_prefix(['e', 'E']) {
            Some(i) => WideLetter::Wide(i.parse().map_err(|_| bad())?),
            None => WideLetter::Sigma(tok.parse().map_err(|_| bad())?),
        };
        let i = match letter {
            WideLetter::Sigma(w) => w.unsigned_abs() as usize,
            WideLetter::Wide(i) => i,
        };
        if i == 0 || i >= strands {
            return Err(bad());
        }
        letters.push(letter);
    }
    Ok((strands, letters))
}

/// Evaluates a word in the Hecke algebra with `Ē_i = T_i + q^2`.
pub fn wide_edge_expand(strands: usize, word: &[WideLetter]) -> HeckeElement {
    let q2 = mono(Q, 2);
    word.iter().fold(HeckeElement::identity(strands), |h, l| match *l {
        WideLetter::Sigma(w) if w > 0 => h.mul_generator(w as usize),
        WideLetter::Sigma(w) => h.mul_inverse_generator(w.unsigned_abs() as usize),
        WideLetter::Wide(i) => h.mul_generator(i).add(&h.scale(&q2)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homfly::{markov_trace, QT};
    use crate::poly::{LaurentPoly, RationalFn};

    fn expand(s: &str) -> HeckeElement {
        let (n, w) = parse_wide_word(s).unwrap();
        wide_edge_expand(n, &w)
    }

    #[test]
    fn single_wide_edge() {
        let num = LaurentPoly::from_terms2(QT, &[(0, 0, 1), (3, -1, 1)]);
        let den = LaurentPoly::from_terms2(QT, &[(0, 0, 1), (2, 0, -1)]);
        assert_eq!(markov_trace(&expand("2: e1")), RationalFn::new(num, den).unwrap());
    }

    #[test]
    fn wide_edge_relations() {
        let one_plus_q2 = LaurentPoly::from_terms(Q, &[(0, 1), (2, 1)]);
        assert_eq!(expand("2: e1 e1"), expand("2: e1").scale(&one_plus_q2));
        let q2 = mono(Q, 2);
        let lhs = expand("3: e1 e2 e1").add(&expand("3: e2").scale(&q2));
        let rhs = expand("3: e2 e1 e2").add(&expand("3: e1").scale(&q2));
        assert_eq!(lhs, rhs);
        // σ_i = Ē_i - q^2
        assert_eq!(expand("2: 1"), expand("2: e1").add(&HeckeElement::identity(2).scale(&-&q2)));
        assert!(parse_wide_word("2: e2").is_err());
        assert!(parse_wide_word("2 e1").is_err());
    }
}
