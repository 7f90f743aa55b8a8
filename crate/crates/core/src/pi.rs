//! The syntactic systems `π(n)` and `π(ω)` built from unary `D_i`.
//!
//! Terms are index words, outermost symbol first. The order compares `(index, argument)`
//! lexicographically, which on words is plain lexicographic order with the empty word
//! least, so `Vec<usize>`'s own `Ord` is the term order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::syntax::Cursor;

/// A wellformed term of `π(ω)`. The bound `n` of `π(n)` is a property of the term
/// ([`PiTerm::fits`]), not part of it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PiTerm(Vec<usize>);

impl PiTerm {
    pub fn zero() -> Self {
        PiTerm(Vec::new())
    }

    /// `D_index arg`, if `G_index(arg) < arg`.
    pub fn d(index: usize, arg: &PiTerm) -> Result<Self> {
        if !node_ok(index, &arg.0) {
            return Err(Error::Precondition(format!(
                "G_{index}({arg}) is not below {arg}"
            )));
        }
        let mut w = Vec::with_capacity(arg.0.len() + 1);
        w.push(index);
        w.extend_from_slice(&arg.0);
        Ok(PiTerm(w))
    }

    pub fn from_indices(indices: Vec<usize>) -> Result<Self> {
        if validate_word(&indices, None) {
            Ok(PiTerm(indices))
        } else {
            Err(Error::not_member("pi(omega)", display_word(&indices)))
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn head(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn arg(&self) -> Option<PiTerm> {
        (!self.0.is_empty()).then(|| PiTerm(self.0[1..].to_vec()))
    }

    /// Number of `D` symbols.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Membership in `π(n)`.
    pub fn fits(&self, n: usize) -> bool {
        self.0.iter().all(|&i| i < n)
    }

    /// Membership in `π₀`: zero or headed by `D_0`.
    pub fn is_pi0(&self) -> bool {
        self.head().is_none_or(|i| i == 0)
    }
}

/// `G_i(a)`, as the list of distinct proper suffixes it consists of.
pub fn g_set(i: usize, a: &PiTerm) -> Vec<PiTerm> {
    g_suffixes(i, &a.0).map(|s| PiTerm(s.to_vec())).collect()
}

fn g_suffixes(i: usize, w: &[usize]) -> impl Iterator<Item = &[usize]> {
    w.iter()
        .take_while(move |&&j| j >= i)
        .enumerate()
        .map(move |(k, _)| &w[k + 1..])
}

fn node_ok(i: usize, arg: &[usize]) -> bool {
    g_suffixes(i, arg).all(|s| s < arg)
}

fn validate_word(w: &[usize], n: Option<usize>) -> bool {
    (0..w.len()).all(|p| n.is_none_or(|n| w[p] < n) && node_ok(w[p], &w[p + 1..]))
}

/// Wellformedness in `π(n)` for a raw index word; `None` means `π(ω)`.
pub fn pi_validate(word: &[usize], n: Option<usize>) -> bool {
    validate_word(word, n)
}

pub fn pi_compare(a: &PiTerm, b: &PiTerm) -> std::cmp::Ordering {
    a.cmp(b)
}

/// Every wellformed term of `π(n)` with at most `max_len` symbols, by length and then
/// in term order.
pub fn enumerate_pi(n: usize, max_len: usize) -> Vec<PiTerm> {
    let mut out = vec![PiTerm::zero()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for i in 0..n {
                if node_ok(i, w) {
                    let mut v = Vec::with_capacity(w.len() + 1);
                    v.push(i);
                    v.extend_from_slice(w);
                    next.push(v);
                }
            }
        }
        next.sort();
        out.extend(next.iter().cloned().map(PiTerm));
        layer = next;
    }
    out
}

fn display_word(w: &[usize]) -> String {
    let mut s = String::new();
    for i in w {
        s.push_str(&format!("D{i}("));
    }
    s.push('0');
    s.push_str(&")".repeat(w.len()));
    s
}

impl fmt::Display for PiTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_word(&self.0))
    }
}

impl FromStr for PiTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut w = Vec::new();
        while cur.eat("D") {
            w.push(cur.glued_index()?);
            cur.expect("(")?;
        }
        cur.expect("0")?;
        for _ in 0..w.len() {
            cur.expect(")")?;
        }
        cur.finish()?;
        PiTerm::from_indices(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn p(s: &str) -> PiTerm {
        s.parse().unwrap()
    }

    #[test]
    fn g_set_examples() {
        assert!(g_set(2, &p("0")).is_empty());
        assert!(g_set(1, &p("D0(0)")).is_empty());
        assert_eq!(g_set(0, &p("D1(0)")), vec![p("0")]);
    }

    #[test]
    fn validity_examples() {
        assert!(pi_validate(&[0], Some(1)));
        assert!(pi_validate(&[0, 1], Some(2)));
        assert!(!pi_validate(&[0, 0, 1], Some(2)));
        assert!(!pi_validate(&[0, 1], Some(1)));
        assert!("D0(D0(D1(0)))".parse::<PiTerm>().is_err());
    }

    #[test]
    fn compare_examples() {
        assert_eq!(pi_compare(&p("0"), &p("D0(0)")), Ordering::Less);
        assert_eq!(pi_compare(&p("D0(D1(0))"), &p("D1(0)")), Ordering::Less);
        assert_eq!(pi_compare(&p("D0(0)"), &p("D0(D0(0))")), Ordering::Less);
    }

    #[test]
    fn enumeration_is_closed_under_subterms() {
        let all = enumerate_pi(2, 4);
        for t in &all {
            let mut s = t.clone();
            while let Some(a) = s.arg() {
                assert!(all.contains(&a));
                s = a;
            }
        }
        assert!(all.iter().all(|t| t.fits(2)));
    }

    #[test]
    fn syntax_round_trip() {
        for t in enumerate_pi(3, 3) {
            assert_eq!(p(&t.to_string()), t);
        }
        assert!("D0(0".parse::<PiTerm>().is_err());
    }
}
