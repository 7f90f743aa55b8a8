//! Cantor normal form arithmetic below ε₀.
//!
//! A [`CnfOrdinal`] is a strictly decreasing list of `ω^e·c` terms. Every value is
//! normalized on construction, so structural equality coincides with ordinal equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::syntax::Cursor;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CnfOrdinal {
    terms: Vec<CnfTerm>,
}

/// One summand `ω^exponent · coeff` with `coeff ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CnfTerm {
    exponent: CnfOrdinal,
    coeff: BigUint,
}

impl CnfTerm {
    pub fn exponent(&self) -> &CnfOrdinal {
        &self.exponent
    }

    pub fn coeff(&self) -> &BigUint {
        &self.coeff
    }
}

impl CnfOrdinal {
    pub fn zero() -> Self {
        CnfOrdinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::nat(1u32)
    }

    pub fn nat(k: impl Into<BigUint>) -> Self {
        let k = k.into();
        if k.is_zero() {
            Self::zero()
        } else {
            CnfOrdinal {
                terms: vec![CnfTerm {
                    exponent: Self::zero(),
                    coeff: k,
                }],
            }
        }
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    /// `ω^e`.
    pub fn omega_pow(exponent: CnfOrdinal) -> Self {
        CnfOrdinal {
            terms: vec![CnfTerm {
                exponent,
                coeff: BigUint::one(),
            }],
        }
    }

    /// Builds `Σ ω^eᵢ·cᵢ`, rejecting lists that are not strictly decreasing or carry a zero
    /// coefficient.
    pub fn from_terms(terms: Vec<(CnfOrdinal, BigUint)>) -> Result<Self> {
        for w in terms.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(Error::Precondition(format!(
                    "exponents must be strictly decreasing, found {} before {}",
                    w[0].0, w[1].0
                )));
            }
        }
        if terms.iter().any(|(_, c)| c.is_zero()) {
            return Err(Error::Precondition("zero coefficient".into()));
        }
        Ok(CnfOrdinal {
            terms: terms
                .into_iter()
                .map(|(exponent, coeff)| CnfTerm { exponent, coeff })
                .collect(),
        })
    }

    pub fn terms(&self) -> &[CnfTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    /// The value as a machine integer, if it is finite and fits.
    pub fn as_u64(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => t.coeff.to_u64(),
            _ => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn leading_exponent(&self) -> Option<&CnfOrdinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    /// Number of nodes when `ω^e·c` is read as `c` copies of a node with child `e`.
    pub fn size(&self) -> usize {
        self.terms
            .iter()
            .map(|t| {
                let c = t.coeff.to_usize().unwrap_or(usize::MAX);
                c.saturating_mul(1 + t.exponent.size())
            })
            .fold(0usize, |a, b| a.saturating_add(b))
    }

    /// Maximal nesting depth of exponents; `0` and the naturals have height 0 and 1.
    pub fn height(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.height())
            .max()
            .unwrap_or(0)
    }

    /// Ordinal (left-absorbing) sum `self + other`.
    pub fn add(&self, other: &CnfOrdinal) -> CnfOrdinal {
        let Some(head) = other.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<CnfTerm> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut merged = false;
        for t in &self.terms {
            match t.exponent.cmp(&head.exponent) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => {
                    terms.push(CnfTerm {
                        exponent: t.exponent.clone(),
                        coeff: &t.coeff + &head.coeff,
                    });
                    merged = true;
                }
                Ordering::Less => break,
            }
        }
        let skip = usize::from(merged);
        terms.extend(other.terms[skip..].iter().cloned());
        CnfOrdinal { terms }
    }

    pub fn succ(&self) -> CnfOrdinal {
        self.add(&CnfOrdinal::one())
    }

    /// Hessenberg natural sum `self ⊕ other`.
    pub fn nat_sum(&self, other: &CnfOrdinal) -> CnfOrdinal {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.exponent.cmp(&b.exponent) {
                Ordering::Greater => {
                    terms.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    terms.push(CnfTerm {
                        exponent: a.exponent.clone(),
                        coeff: &a.coeff + &b.coeff,
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(other.terms[j..].iter().cloned());
        CnfOrdinal { terms }
    }

    /// Hessenberg natural product `self ⊗ other`.
    pub fn nat_prod(&self, other: &CnfOrdinal) -> CnfOrdinal {
        let mut acc = CnfOrdinal::zero();
        for a in &self.terms {
            for b in &other.terms {
                let mono = CnfOrdinal {
                    terms: vec![CnfTerm {
                        exponent: a.exponent.nat_sum(&b.exponent),
                        coeff: &a.coeff * &b.coeff,
                    }],
                };
                acc = acc.nat_sum(&mono);
            }
        }
        acc
    }

    /// Left multiplication by an ω-power: `ω^x · self`.
    pub fn omega_pow_mul(x: &CnfOrdinal, rhs: &CnfOrdinal) -> CnfOrdinal {
        CnfOrdinal {
            terms: rhs
                .terms
                .iter()
                .map(|t| CnfTerm {
                    exponent: x.add(&t.exponent),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Ordinal product with a natural number on the right: `self · k`.
    pub fn mul_nat(&self, k: &BigUint) -> CnfOrdinal {
        if k.is_zero() || self.is_zero() {
            return CnfOrdinal::zero();
        }
        let mut terms = self.terms.clone();
        terms[0].coeff = &terms[0].coeff * k;
        CnfOrdinal { terms }
    }

    fn strip_finite(&self) -> CnfOrdinal {
        let mut terms = self.terms.clone();
        if terms.last().is_some_and(|t| t.exponent.is_zero()) {
            terms.pop();
        }
        CnfOrdinal { terms }
    }
}

/// Three-way comparison of ordinal values; lexicographic on the term lists.
pub fn cnf_compare(a: &CnfOrdinal, b: &CnfOrdinal) -> Ordering {
    for (x, y) in a.terms.iter().zip(&b.terms) {
        let ord = cnf_compare(&x.exponent, &y.exponent).then_with(|| x.coeff.cmp(&y.coeff));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    a.terms.len().cmp(&b.terms.len())
}

impl Ord for CnfOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        cnf_compare(self, other)
    }
}

impl PartialOrd for CnfOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `ω_n[seed]`: `ω_0[α] = α`, `ω_{n+1}[α] = ω^{ω_n[α]}`.
pub fn omega_tower(n: usize, seed: &CnfOrdinal) -> CnfOrdinal {
    (0..n).fold(seed.clone(), |acc, _| CnfOrdinal::omega_pow(acc))
}

/// `ω_n = ω_n[1]`.
pub fn omega_n(n: usize) -> CnfOrdinal {
    omega_tower(n, &CnfOrdinal::one())
}

/// The function `f(0) = 0`, `f(ω^a + b) = ω^a + f(a) + f(b)`.
///
/// A block `ω^a·c` is handled in one step as `(ω^a + f(a))·c`, which is what `c`
/// unfoldings of the recursion produce.
pub fn f_hat(a: &CnfOrdinal) -> CnfOrdinal {
    let mut acc = CnfOrdinal::zero();
    for t in &a.terms {
        let block = CnfOrdinal::omega_pow(t.exponent.clone()).add(&f_hat(&t.exponent));
        acc = acc.add(&block.mul_nat(&t.coeff));
    }
    acc
}

/// Maximal order type of `X*` from the maximal order type of `X`.
pub fn mot_star(o: &CnfOrdinal) -> Result<CnfOrdinal> {
    if o.is_zero() {
        return Err(Error::Precondition(
            "maximal order type of X* needs a nonempty X".into(),
        ));
    }
    if let Some(k) = finite_value(o) {
        let e = CnfOrdinal::nat(k - 1u32);
        return Ok(CnfOrdinal::omega_pow(CnfOrdinal::omega_pow(e)));
    }
    // ε + n: the infinite part would have to be a fixed point of ω^·.
    let inf = o.strip_finite();
    if CnfOrdinal::omega_pow(inf.clone()) == inf {
        return Err(Error::Internal(format!(
            "{o} has the form epsilon + n, which a Cantor normal form cannot denote"
        )));
    }
    Ok(CnfOrdinal::omega_pow(CnfOrdinal::omega_pow(o.clone())))
}

fn finite_value(o: &CnfOrdinal) -> Option<BigUint> {
    match o.terms.as_slice() {
        [] => Some(BigUint::zero()),
        [t] if t.exponent.is_zero() => Some(t.coeff.clone()),
        _ => None,
    }
}

/// All ordinals of [`CnfOrdinal::size`] at most `max_size`, sorted ascending.
pub fn enumerate_cnf(max_size: usize) -> Vec<CnfOrdinal> {
    // by_size[s] holds every ordinal of size exactly s.
    let mut by_size: Vec<Vec<CnfOrdinal>> = vec![vec![CnfOrdinal::zero()]];
    for s in 1..=max_size {
        // Candidate exponents: every ordinal of size < s, largest first.
        let mut exps: Vec<&CnfOrdinal> = by_size.iter().flatten().collect();
        exps.sort_by(|a, b| b.cmp(a));
        let mut out = Vec::new();
        let mut picked: Vec<usize> = Vec::new();
        fill(&exps, s, 0, &mut picked, &mut out);
        by_size.push(out);
    }
    let mut all: Vec<CnfOrdinal> = by_size.into_iter().flatten().collect();
    all.sort();
    all
}

fn fill(
    exps: &[&CnfOrdinal],
    remaining: usize,
    from: usize,
    picked: &mut Vec<usize>,
    out: &mut Vec<CnfOrdinal>,
) {
    if remaining == 0 {
        let mut terms: Vec<CnfTerm> = Vec::new();
        for &i in picked.iter() {
            match terms.last_mut() {
                Some(t) if &t.exponent == exps[i] => t.coeff += 1u32,
                _ => terms.push(CnfTerm {
                    exponent: exps[i].clone(),
                    coeff: BigUint::one(),
                }),
            }
        }
        out.push(CnfOrdinal { terms });
        return;
    }
    for i in from..exps.len() {
        let w = 1 + exps[i].size();
        if w <= remaining {
            picked.push(i);
            fill(exps, remaining - w, i, picked, out);
            picked.pop();
        }
    }
}

impl fmt::Display for CnfOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coeff)?;
                continue;
            }
            if t.exponent == CnfOrdinal::one() {
                f.write_str("w")?;
            } else {
                write!(f, "w^({})", t.exponent)?;
            }
            if !t.coeff.is_one() {
                write!(f, "*{}", t.coeff)?;
            }
        }
        Ok(())
    }
}

impl FromStr for CnfOrdinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let v = parse_sum(&mut cur)?;
        cur.finish()?;
        Ok(v)
    }
}

fn parse_sum(cur: &mut Cursor<'_>) -> Result<CnfOrdinal> {
    let start = cur.pos();
    let mut terms: Vec<CnfTerm> = Vec::new();
    loop {
        let at = cur.pos();
        let t = parse_term(cur)?;
        match t {
            None if terms.is_empty() && !cur.eat("+") => return Ok(CnfOrdinal::zero()),
            None => return Err(Error::parse(at, "zero summand in a sum")),
            Some(t) => {
                if let Some(prev) = terms.last() {
                    if prev.exponent <= t.exponent {
                        return Err(Error::parse(
                            at,
                            "exponents must be strictly decreasing (not in normal form)",
                        ));
                    }
                }
                terms.push(t);
            }
        }
        if !cur.eat("+") {
            break;
        }
    }
    debug_assert!(cur.pos() >= start);
    Ok(CnfOrdinal { terms })
}

/// `None` stands for the literal `0`.
fn parse_term(cur: &mut Cursor<'_>) -> Result<Option<CnfTerm>> {
    let at = cur.pos();
    if cur.eat("w") || cur.eat("ω") {
        let exponent = if cur.eat("^") {
            if cur.eat("(") {
                let e = parse_sum(cur)?;
                cur.expect(")")?;
                e
            } else {
                CnfOrdinal::nat(parse_big(cur)?)
            }
        } else {
            CnfOrdinal::one()
        };
        let coeff = if cur.eat("*") {
            let c_at = cur.pos();
            let c = parse_big(cur)?;
            if c.is_zero() {
                return Err(Error::parse(c_at, "coefficient must be positive"));
            }
            c
        } else {
            BigUint::one()
        };
        return Ok(Some(CnfTerm { exponent, coeff }));
    }
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let k = parse_big(cur)?;
            if k.is_zero() {
                Ok(None)
            } else {
                Ok(Some(CnfTerm {
                    exponent: CnfOrdinal::zero(),
                    coeff: k,
                }))
            }
        }
        _ => Err(Error::parse(at, "expected `w`, `0` or a natural number")),
    }
}

fn parse_big(cur: &mut Cursor<'_>) -> Result<BigUint> {
    let s = cur.nat_str()?;
    Ok(s.parse().expect("digits only"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CnfOrdinal {
        s.parse().unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(cnf_compare(&c("0"), &c("0")), Ordering::Equal);
        assert_eq!(cnf_compare(&c("w"), &c("w^(w)")), Ordering::Less);
        assert_eq!(cnf_compare(&c("w^(w) + 1"), &c("w^(w)*2")), Ordering::Less);
    }

    #[test]
    fn add_examples() {
        assert_eq!(c("1").add(&c("w")), c("w"));
        assert_eq!(c("w").add(&c("1")), c("w + 1"));
        assert_eq!(c("w^(w) + w").add(&c("w*2 + 1")), c("w^(w) + w*3 + 1"));
    }

    #[test]
    fn natural_operations() {
        assert_eq!(c("w + 1").nat_sum(&c("w")), c("w*2 + 1"));
        assert_eq!(c("w^(2) + 5").nat_sum(&c("0")), c("w^(2) + 5"));
        assert_eq!(c("w").nat_prod(&c("w")), c("w^(2)"));
        assert_eq!(c("w + 1").nat_prod(&c("2")), c("w*2 + 2"));
        assert_eq!(c("w + 1").nat_prod(&c("w + 1")), c("w^(2) + w*2 + 1"));
    }

    #[test]
    fn towers() {
        let alpha = c("w*3 + 2");
        assert_eq!(omega_tower(0, &alpha), alpha);
        assert_eq!(omega_n(2), c("w^(w)"));
        assert_eq!(omega_n(3), c("w^(w^(w))"));
    }

    #[test]
    fn f_hat_examples() {
        assert_eq!(f_hat(&c("0")), c("0"));
        assert_eq!(f_hat(&c("1")), c("1"));
        assert_eq!(f_hat(&c("w")), c("w + 1"));
        assert_eq!(f_hat(&c("w^(w)")), c("w^(w) + w + 1"));
        // f(ω+ω) unfolds to ω + 1 + ω + 1.
        assert_eq!(f_hat(&c("w*2")), c("w*2 + 1"));
    }

    #[test]
    fn mot_star_values() {
        assert_eq!(mot_star(&c("2")).unwrap(), c("w^(w)"));
        assert_eq!(mot_star(&c("1")).unwrap(), c("w"));
        assert_eq!(mot_star(&c("w")).unwrap(), c("w^(w^(w))"));
        assert!(matches!(mot_star(&c("0")), Err(Error::Precondition(_))));
    }

    #[test]
    fn parser_rejects_bad_forms() {
        for bad in ["1 + w", "w + w", "w*0", "w^(1 + w)", "w +", "x", "0 + 1", "w^("] {
            assert!(bad.parse::<CnfOrdinal>().is_err(), "{bad}");
        }
        assert_eq!(c("  w^( w )*2+w+ 1 "), c("w^(w)*2 + w + 1"));
        assert_eq!(c("ω^3"), c("w^(3)"));
    }

    #[test]
    fn enumeration_is_sorted_and_sized() {
        let all = enumerate_cnf(5);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|a| a.size() <= 5));
        // Size s ordinals are the unordered rooted trees with s + 1 nodes.
        assert_eq!(all.len(), 1 + 1 + 2 + 4 + 9 + 20);
    }

    #[test]
    fn omega_pow_mul_shifts_exponents() {
        assert_eq!(CnfOrdinal::omega_pow_mul(&c("1"), &c("w + 3")), c("w^(2) + w*3"));
        assert_eq!(CnfOrdinal::omega_pow_mul(&c("w"), &c("0")), c("0"));
    }
}
