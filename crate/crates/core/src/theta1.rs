//! Unary ϑ-terms.
//!
//! A term `ϑ_{i₁} ϑ_{i₂} … ϑ_{i_k} 0` is stored as its index word `[i₁, …, i_k]`.
//! Every subterm is a suffix of the word, the coefficient `k_i` picks a suffix, and
//! substitution into the last zero is concatenation, so most operations below work
//! directly on `&[usize]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::syntax::Cursor;

/// A wellformed term of `T`: at every node `ϑ_i α`, `S(α) ≤ i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ThetaTerm(Vec<usize>);

impl ThetaTerm {
    pub fn zero() -> Self {
        ThetaTerm(Vec::new())
    }

    /// `ϑ_index arg`, provided `S(arg) ≤ index + 1`.
    pub fn theta(index: usize, arg: &ThetaTerm) -> Result<Self> {
        if !arg.level_at_most(index + 1) {
            return Err(Error::Precondition(format!(
                "v{index} applied to {arg} whose level exceeds {}",
                index + 1
            )));
        }
        let mut w = Vec::with_capacity(arg.0.len() + 1);
        w.push(index);
        w.extend_from_slice(&arg.0);
        Ok(ThetaTerm(w))
    }

    pub fn from_indices(indices: Vec<usize>) -> Result<Self> {
        if theta_validate(&indices, &ThetaSystem::t()) {
            Ok(ThetaTerm(indices))
        } else {
            Err(Error::not_member("T", display_word(&indices)))
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// The outermost index; `None` for `0`.
    pub fn head(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// `α` for `ϑ_i α`; `None` for `0`.
    pub fn arg(&self) -> Option<ThetaTerm> {
        (!self.0.is_empty()).then(|| ThetaTerm(self.0[1..].to_vec()))
    }

    /// `S`, with `None` standing for `S(0) = -1`.
    pub fn level(&self) -> Option<usize> {
        self.head()
    }

    pub fn level_at_most(&self, bound: usize) -> bool {
        self.head().is_none_or(|s| s <= bound)
    }

    /// Number of `ϑ` symbols.
    pub fn lh(&self) -> usize {
        self.0.len()
    }
}

/// Which family of unary terms a word is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaSystem {
    /// `T_n`: every index `< n`.
    pub bound: Option<usize>,
    /// `T[m]`: `S ≤ m`.
    pub max_level: Option<usize>,
    /// `T'_n`: below the top index `n - 1`, every `ϑ_i α` has `S(α) = i + 1`.
    pub restricted: bool,
}

impl ThetaSystem {
    pub fn t() -> Self {
        ThetaSystem {
            bound: None,
            max_level: None,
            restricted: false,
        }
    }

    pub fn t_n(n: usize) -> Self {
        ThetaSystem {
            bound: Some(n),
            ..Self::t()
        }
    }

    pub fn t_m(m: usize) -> Self {
        ThetaSystem {
            max_level: Some(m),
            ..Self::t()
        }
    }

    pub fn t_nm(n: usize, m: usize) -> Self {
        ThetaSystem {
            bound: Some(n),
            max_level: Some(m),
            restricted: false,
        }
    }

    pub fn t_prime(n: usize) -> Self {
        ThetaSystem {
            bound: Some(n),
            max_level: None,
            restricted: true,
        }
    }

    pub fn t_prime_m(n: usize, m: usize) -> Self {
        ThetaSystem {
            bound: Some(n),
            max_level: Some(m),
            restricted: true,
        }
    }
}

impl fmt::Display for ThetaSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("T")?;
        if self.restricted {
            f.write_str("'")?;
        }
        if let Some(n) = self.bound {
            write!(f, "_{n}")?;
        }
        if let Some(m) = self.max_level {
            write!(f, "[{m}]")?;
        }
        Ok(())
    }
}

/// Membership of a raw index word in the given system.
pub fn theta_validate(word: &[usize], system: &ThetaSystem) -> bool {
    if system.restricted && system.bound.is_none() {
        return false;
    }
    if let (Some(m), Some(&s)) = (system.max_level, word.first()) {
        if s > m {
            return false;
        }
    }
    for (p, &i) in word.iter().enumerate() {
        let arg_level = word.get(p + 1).copied();
        if arg_level.is_some_and(|s| s > i + 1) {
            return false;
        }
        if let Some(n) = system.bound {
            if i >= n {
                return false;
            }
            if system.restricted && i + 1 < n && arg_level != Some(i + 1) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn k_slice(i: usize, word: &[usize]) -> &[usize] {
    let p = word.iter().position(|&j| j <= i).unwrap_or(word.len());
    &word[p..]
}

/// The coefficient `k_i`: strip leading symbols with index `> i`.
pub fn k_coeff(i: usize, a: &ThetaTerm) -> ThetaTerm {
    ThetaTerm(k_slice(i, &a.0).to_vec())
}

/// The linear order on `T`.
///
/// For equal heads the arguments are compared once; the side condition of the
/// matching clause then decides, and its failure means the opposite clause holds.
pub fn theta_compare(a: &ThetaTerm, b: &ThetaTerm) -> Ordering {
    cmp_words(&a.0, &b.0)
}

pub(crate) fn cmp_words(a: &[usize], b: &[usize]) -> Ordering {
    match (a.split_first(), b.split_first()) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some((&i, a1)), Some((&j, b1))) => {
            if i != j {
                return i.cmp(&j);
            }
            match cmp_words(a1, b1) {
                Ordering::Equal => Ordering::Equal,
                Ordering::Less => {
                    if cmp_words(k_slice(i, a1), b) == Ordering::Less {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    }
                }
                Ordering::Greater => {
                    if cmp_words(k_slice(i, b1), a) == Ordering::Less {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    }
                }
            }
        }
    }
}

/// The defining clauses of `<`, evaluated literally: `ϑ_i α < ϑ_j β` iff `i < j`, or
/// `i = j` and either `α < β ∧ k_i α < ϑ_i β` or `β < α ∧ ϑ_i α ≤ k_i β`.
///
/// Unlike [`theta_compare`] this decides each direction independently, so it can be used to
/// test trichotomy. All subproblems compare suffixes of the two inputs and are memoized.
pub fn theta_lt(a: &ThetaTerm, b: &ThetaTerm) -> bool {
    let mut lt = LiteralLt {
        a: &a.0,
        b: &b.0,
        memo: vec![None; (a.0.len() + b.0.len() + 2).pow(2)],
    };
    lt.lt(0, a.0.len() + 1)
}

/// Suffix ids: `0..=a.len()` for suffixes of `a`, then the suffixes of `b`.
struct LiteralLt<'a> {
    a: &'a [usize],
    b: &'a [usize],
    memo: Vec<Option<bool>>,
}

impl LiteralLt<'_> {
    fn word(&self, id: usize) -> &[usize] {
        if id <= self.a.len() {
            &self.a[id..]
        } else {
            &self.b[id - self.a.len() - 1..]
        }
    }

    fn k(&self, i: usize, id: usize) -> usize {
        let w = self.word(id);
        id + w.len() - k_slice(i, w).len()
    }

    fn lt(&mut self, x: usize, y: usize) -> bool {
        let (wx, wy) = (self.word(x), self.word(y));
        let (Some(&i), Some(&j)) = (wx.first(), wy.first()) else {
            return wx.is_empty() && !wy.is_empty();
        };
        if i != j {
            return i < j;
        }
        let slot = x * (self.a.len() + self.b.len() + 2) + y;
        if let Some(v) = self.memo[slot] {
            return v;
        }
        let (x1, y1) = (x + 1, y + 1);
        let v = (self.lt(x1, y1) && {
            let kx = self.k(i, x1);
            self.lt(kx, y)
        }) || (self.lt(y1, x1) && {
            let ky = self.k(i, y1);
            self.word(x) == self.word(ky) || self.lt(x, ky)
        });
        self.memo[slot] = Some(v);
        v
    }
}

impl Ord for ThetaTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        theta_compare(self, other)
    }
}

impl PartialOrd for ThetaTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `a[b]`: the last zero of `a` replaced by `b`. Requires `S(b) ≤ 0`.
pub fn substitute(a: &ThetaTerm, b: &ThetaTerm) -> Result<ThetaTerm> {
    if !b.level_at_most(0) {
        return Err(Error::Precondition(format!(
            "substituted term {b} must lie below v1 0"
        )));
    }
    let mut w = a.0.clone();
    w.extend_from_slice(&b.0);
    Ok(ThetaTerm(w))
}

/// The gap order `a ⊴ b`.
///
/// Every subproblem compares a suffix of `a` with a suffix of `b`, so the recursion is
/// memoized over suffix positions.
pub fn gap_below(a: &ThetaTerm, b: &ThetaTerm) -> bool {
    let (a, b) = (&a.0, &b.0);
    let width = b.len() + 1;
    let mut memo = vec![None; (a.len() + 1) * width];
    gap_below_at(a, b, 0, 0, width, &mut memo)
}

fn gap_below_at(
    a: &[usize],
    b: &[usize],
    p: usize,
    q: usize,
    width: usize,
    memo: &mut [Option<bool>],
) -> bool {
    if p == a.len() {
        return true;
    }
    if q == b.len() {
        return false;
    }
    if let Some(v) = memo[p * width + q] {
        return v;
    }
    let i = b[q];
    let k = b.len() - k_slice(i, &b[q + 1..]).len();
    let v = gap_below_at(a, b, p, k, width, memo)
        || (a[p] == i && gap_below_at(a, b, p + 1, q + 1, width, memo));
    memo[p * width + q] = Some(v);
    v
}

/// The padding map `T_n → T'_n`: `ϑ_i α ↦ ϑ_i ϑ_{i+1} … ϑ_{n-1} ψ(α)`.
pub fn to_tprime(a: &ThetaTerm, n: usize) -> Result<ThetaTerm> {
    if a.0.iter().any(|&i| i >= n) {
        return Err(Error::not_member(format!("T_{n}"), a));
    }
    let mut w = Vec::new();
    for &i in &a.0 {
        w.extend(i..n);
    }
    Ok(ThetaTerm(w))
}

/// Every member of `system` with at most `max_lh` symbols, ordered by length and then
/// lexicographically by index word.
pub fn enumerate_theta(system: &ThetaSystem, max_lh: usize) -> Result<Vec<ThetaTerm>> {
    let Some(n) = system.bound else {
        return Err(Error::InvalidSpec(
            "enumerating unary terms needs an index bound".into(),
        ));
    };
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for len in 0..=max_lh {
        out.extend(
            layer
                .iter()
                .filter(|w| theta_validate(w, system))
                .map(|w| ThetaTerm(w.clone())),
        );
        if len == max_lh {
            break;
        }
        let mut next = Vec::new();
        for w in &layer {
            let top = w.last().map_or(n - 1, |&l| (l + 1).min(n - 1));
            for x in 0..=top {
                if n == 0 {
                    break;
                }
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        layer = next;
    }
    Ok(out)
}

fn display_word(w: &[usize]) -> String {
    let mut s = String::new();
    for i in w {
        s.push_str(&format!("v{i} "));
    }
    s.push('0');
    s
}

impl fmt::Display for ThetaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_word(&self.0))
    }
}

impl FromStr for ThetaTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut w = Vec::new();
        loop {
            if cur.eat("v") || cur.eat("ϑ") {
                let at = cur.pos();
                let i = cur.glued_index()?;
                if let Some(&prev) = w.last() {
                    if i > prev + 1 {
                        return Err(Error::parse(
                            at,
                            format!("v{prev} cannot take an argument of level {i}"),
                        ));
                    }
                }
                w.push(i);
            } else {
                cur.expect("0")?;
                break;
            }
        }
        cur.finish()?;
        Ok(ThetaTerm(w))
    }
}
