//! The addition-free Veblen system `φ_T 0` over an arbitrary subscript system, and the
//! leveled values that serve as the codomain of `o_n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::syntax::Cursor;

/// `φ_{t₁} φ_{t₂} … φ_{t_k} 0`, stored as its subscripts from the outside in.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VeblenTerm<S>(Vec<S>);

impl<S> Default for VeblenTerm<S> {
    fn default() -> Self {
        VeblenTerm(Vec::new())
    }
}

impl<S: Clone> VeblenTerm<S> {
    pub fn zero() -> Self {
        VeblenTerm(Vec::new())
    }

    pub fn phi(sub: S, arg: &VeblenTerm<S>) -> Self {
        let mut v = Vec::with_capacity(arg.0.len() + 1);
        v.push(sub);
        v.extend_from_slice(&arg.0);
        VeblenTerm(v)
    }

    pub fn from_subscripts(subs: Vec<S>) -> Self {
        VeblenTerm(subs)
    }

    pub fn subscripts(&self) -> &[S] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `φ` nodes.
    pub fn nodes(&self) -> usize {
        self.0.len()
    }

    /// `(t, α)` for `φ_t α`.
    pub fn split(&self) -> Option<(&S, VeblenTerm<S>)> {
        self.0
            .split_first()
            .map(|(t, rest)| (t, VeblenTerm(rest.to_vec())))
    }
}

/// The order on `φ_T 0` given a total order on subscripts.
///
/// With `a = φ_s α'` and `b = φ_t β'`: `a < b` iff `s < t ∧ α' < b`, or `s = t ∧ α' < β'`,
/// or `s > t ∧ a ≤ β'`. Each recursive call drops one symbol, so the cost is linear in
/// the combined size.
pub fn veblen_compare<S>(
    a: &VeblenTerm<S>,
    b: &VeblenTerm<S>,
    sub_cmp: &mut impl FnMut(&S, &S) -> Ordering,
) -> Ordering {
    cmp_slices(&a.0, &b.0, sub_cmp)
}

fn cmp_slices<S>(a: &[S], b: &[S], sub_cmp: &mut impl FnMut(&S, &S) -> Ordering) -> Ordering {
    let (Some((s, a1)), Some((t, b1))) = (a.split_first(), b.split_first()) else {
        return a.len().min(1).cmp(&b.len().min(1));
    };
    match sub_cmp(s, t) {
        Ordering::Equal => cmp_slices(a1, b1, sub_cmp),
        Ordering::Less => {
            if cmp_slices(a1, b, sub_cmp) == Ordering::Less {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        Ordering::Greater => {
            if cmp_slices(a, b1, sub_cmp) == Ordering::Greater {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    }
}

/// The defining clauses of `<`, evaluated literally in one direction, for testing
/// trichotomy independently of [`veblen_compare`].
pub fn veblen_lt<S: PartialEq>(
    a: &VeblenTerm<S>,
    b: &VeblenTerm<S>,
    sub_cmp: &mut impl FnMut(&S, &S) -> Ordering,
) -> bool {
    lt_slices(&a.0, &b.0, sub_cmp)
}

fn lt_slices<S: PartialEq>(
    a: &[S],
    b: &[S],
    sub_cmp: &mut impl FnMut(&S, &S) -> Ordering,
) -> bool {
    let (Some((s, a1)), Some((t, b1))) = (a.split_first(), b.split_first()) else {
        return a.is_empty() && !b.is_empty();
    };
    match sub_cmp(s, t) {
        Ordering::Less => lt_slices(a1, b, sub_cmp),
        Ordering::Equal => lt_slices(a1, b1, sub_cmp),
        Ordering::Greater => a == b1 || lt_slices(a, b1, sub_cmp),
    }
}

impl<S: Ord> Ord for VeblenTerm<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_slices(&self.0, &other.0, &mut |x: &S, y: &S| x.cmp(y))
    }
}

impl<S: Ord> PartialOrd for VeblenTerm<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All terms with at most `max_nodes` symbols over the given subscripts, by node count
/// and then lexicographically by subscript position in `subs`.
pub fn enumerate_veblen<S: Clone>(subs: &[S], max_nodes: usize) -> Vec<VeblenTerm<S>> {
    let mut out = vec![VeblenTerm::zero()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_nodes {
        let mut next = Vec::with_capacity(layer.len() * subs.len());
        for w in &layer {
            for k in 0..subs.len() {
                let mut v = w.clone();
                v.push(k);
                next.push(v);
            }
        }
        out.extend(
            next.iter()
                .map(|w| VeblenTerm(w.iter().map(|&k| subs[k].clone()).collect())),
        );
        layer = next;
    }
    out
}

impl<S: fmt::Display> fmt::Display for VeblenTerm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "phi({s}, ")?;
        }
        f.write_str("0")?;
        for _ in &self.0 {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Subscript types with a text syntax usable inside `phi(S, A)`.
pub trait ParseSubscript: Sized {
    fn parse_subscript(text: &str) -> Result<Self>;
}

impl ParseSubscript for usize {
    fn parse_subscript(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        let k = cur.usize()?;
        cur.finish()?;
        Ok(k)
    }
}

impl ParseSubscript for crate::pi::PiTerm {
    fn parse_subscript(text: &str) -> Result<Self> {
        text.parse()
    }
}

impl<S: ParseSubscript> FromStr for VeblenTerm<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let v = parse_with(&mut cur, &mut S::parse_subscript)?;
        cur.finish()?;
        Ok(v)
    }
}

/// Parses `0 | phi(S, A)` where each subscript `S` is the text up to the next comma at
/// bracket depth zero, handed to `parse_sub`.
fn parse_with<S>(
    cur: &mut Cursor<'_>,
    parse_sub: &mut impl FnMut(&str) -> Result<S>,
) -> Result<VeblenTerm<S>> {
    let mut subs = Vec::new();
    while cur.eat("phi") || cur.eat("φ") {
        cur.expect("(")?;
        cur.skip_ws();
        let start = cur.pos();
        let text = cur.take_balanced_until(',')?;
        let sub = parse_sub(text).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::parse(start + pos, msg),
            other => other,
        })?;
        subs.push(sub);
        cur.expect(",")?;
    }
    cur.expect("0")?;
    for _ in 0..subs.len() {
        cur.expect(")")?;
    }
    Ok(VeblenTerm(subs))
}

/// A value in the codomain of `o_n`: a natural number at level 1, and at level `l > 1` a
/// Veblen term whose subscripts are values of level `l - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum LeveledOrdValue {
    Nat(u64),
    Term {
        level: usize,
        term: VeblenTerm<LeveledOrdValue>,
    },
}

impl LeveledOrdValue {
    pub fn nat(k: u64) -> Self {
        LeveledOrdValue::Nat(k)
    }

    /// The zero of level `level ≥ 1`.
    pub fn zero(level: usize) -> Self {
        assert!(level >= 1, "levels start at 1");
        if level == 1 {
            LeveledOrdValue::Nat(0)
        } else {
            LeveledOrdValue::Term {
                level,
                term: VeblenTerm::zero(),
            }
        }
    }

    /// `φ_sub arg`, where `arg` has level `sub.level() + 1`.
    pub fn phi(sub: LeveledOrdValue, arg: &LeveledOrdValue) -> Result<Self> {
        let level = sub.level() + 1;
        match arg {
            LeveledOrdValue::Term { level: l, term } if *l == level => {
                Ok(LeveledOrdValue::Term {
                    level,
                    term: VeblenTerm::phi(sub, term),
                })
            }
            _ => Err(Error::LevelMismatch {
                left: level,
                right: arg.level(),
            }),
        }
    }

    pub fn level(&self) -> usize {
        match self {
            LeveledOrdValue::Nat(_) => 1,
            LeveledOrdValue::Term { level, .. } => *level,
        }
    }

    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        if self.level() != other.level() {
            return Err(Error::LevelMismatch {
                left: self.level(),
                right: other.level(),
            });
        }
        Ok(self.cmp_same_level(other))
    }

    fn cmp_same_level(&self, other: &Self) -> Ordering {
        match (self, other) {
            (LeveledOrdValue::Nat(x), LeveledOrdValue::Nat(y)) => x.cmp(y),
            (LeveledOrdValue::Term { term: a, .. }, LeveledOrdValue::Term { term: b, .. }) => {
                veblen_compare(a, b, &mut |x, y| x.cmp_same_level(y))
            }
            _ => unreachable!("levels were checked equal"),
        }
    }

    /// Parses a value of the given level: a decimal at level 1, Veblen syntax above.
    pub fn parse_at(level: usize, s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let v = parse_level(&mut cur, level)?;
        cur.finish()?;
        Ok(v)
    }
}

fn parse_level(cur: &mut Cursor<'_>, level: usize) -> Result<LeveledOrdValue> {
    if level == 0 {
        return Err(cur.error("levels start at 1"));
    }
    if level == 1 {
        let at = cur.pos();
        let s = cur.nat_str()?;
        return s
            .parse()
            .map(LeveledOrdValue::Nat)
            .map_err(|_| Error::parse(at, format!("number `{s}` out of range")));
    }
    let term = parse_with(cur, &mut |text| LeveledOrdValue::parse_at(level - 1, text))?;
    Ok(LeveledOrdValue::Term { level, term })
}

/// Mixed levels are incomparable.
impl PartialOrd for LeveledOrdValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl fmt::Display for LeveledOrdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeveledOrdValue::Nat(k) => write!(f, "{k}"),
            LeveledOrdValue::Term { term, .. } => write!(f, "{term}"),
        }
    }
}
