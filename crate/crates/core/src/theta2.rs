//! Binary `θ̄`-terms, the subsystems `OT_n` and `OT_n[0]`, and the maps `o_n` and `f`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gapseq::GapSequence;
use crate::syntax::Cursor;
use crate::veblen::LeveledOrdValue;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub enum BinThetaTerm {
    #[default]
    Zero,
    Node(Arc<BinNode>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinNode {
    pub index: usize,
    pub left: BinThetaTerm,
    pub right: BinThetaTerm,
}

/// Which binary system a term is checked against.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BinSystem {
    T(usize),
    Ot(usize),
    Ot0(usize),
}

impl fmt::Display for BinSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinSystem::T(n) => write!(f, "T_{n}"),
            BinSystem::Ot(n) => write!(f, "OT_{n}"),
            BinSystem::Ot0(n) => write!(f, "OT_{n}[0]"),
        }
    }
}

impl BinThetaTerm {
    pub fn zero() -> Self {
        BinThetaTerm::Zero
    }

    /// `θ̄_index(left, right)`, provided `S(left) ≤ index + 1` and `S(right) ≤ index`.
    pub fn theta(index: usize, left: BinThetaTerm, right: BinThetaTerm) -> Result<Self> {
        if !left.level_at_most(index + 1) || !right.level_at_most(index) {
            return Err(Error::Precondition(format!(
                "th{index}({left}, {right}) violates the level conditions"
            )));
        }
        Ok(Self::node(index, left, right))
    }

    fn node(index: usize, left: BinThetaTerm, right: BinThetaTerm) -> Self {
        BinThetaTerm::Node(Arc::new(BinNode { index, left, right }))
    }

    pub fn as_node(&self) -> Option<&BinNode> {
        match self {
            BinThetaTerm::Zero => None,
            BinThetaTerm::Node(n) => Some(n),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, BinThetaTerm::Zero)
    }

    /// `S`, with `None` for `S(0) = -1`.
    pub fn level(&self) -> Option<usize> {
        self.as_node().map(|n| n.index)
    }

    pub fn level_at_most(&self, bound: usize) -> bool {
        self.level().is_none_or(|s| s <= bound)
    }

    pub fn size(&self) -> usize {
        self.as_node()
            .map_or(0, |n| 1 + n.left.size() + n.right.size())
    }

    fn all_nodes(&self, pred: &mut impl FnMut(&BinNode) -> bool) -> bool {
        match self.as_node() {
            None => true,
            Some(n) => pred(n) && n.left.all_nodes(pred) && n.right.all_nodes(pred),
        }
    }

    pub fn is_member(&self, system: BinSystem) -> bool {
        match system {
            BinSystem::T(n) => self.all_nodes(&mut |node| node.index < n),
            BinSystem::Ot(n) => self.all_nodes(&mut |node| {
                node.index < n && k_set(node.index, &node.left).is_empty()
            }),
            BinSystem::Ot0(n) => self.level_at_most(0) && self.is_member(BinSystem::Ot(n)),
        }
    }
}

/// `K_j(a)`, without repetitions, in left-to-right order of first occurrence.
pub fn k_set(j: usize, a: &BinThetaTerm) -> Vec<BinThetaTerm> {
    let mut out = Vec::new();
    collect_k(j, a, &mut out);
    out
}

fn collect_k(j: usize, a: &BinThetaTerm, out: &mut Vec<BinThetaTerm>) {
    let Some(node) = a.as_node() else {
        return;
    };
    if j < node.index {
        collect_k(j, &node.left, out);
        collect_k(j, &node.right, out);
    } else if !out.contains(a) {
        out.push(a.clone());
    }
}

/// The order `<` on binary terms, implemented clause by clause. With `a = θ̄_i α β` and
/// `b = θ̄_i γ δ`, `a < b` iff `α < γ` and every element of `K_i α ∪ {β}` is `< b`, or
/// `α = γ` and `β < δ`, or `γ < α` and `a ≤` some element of `K_i γ ∪ {δ}`.
///
/// The last clause asks for one element, not all of them. Asking for all of them leaves
/// `θ̄_0(θ̄_0(θ̄_0(0,0),0),0)` and `θ̄_0(θ̄_0(0,0), θ̄_0(θ̄_0(θ̄_0(0,0),0),0))` incomparable.
/// On `OT_n` the set `K_i γ` is empty and both readings agree.
pub fn btheta_lt(a: &BinThetaTerm, b: &BinThetaTerm) -> bool {
    LtMemo::default().lt(a, b)
}

#[derive(Default)]
struct LtMemo {
    seen: HashMap<(*const BinNode, *const BinNode), bool>,
}

impl LtMemo {
    fn lt(&mut self, a: &BinThetaTerm, b: &BinThetaTerm) -> bool {
        let (x, y) = match (a.as_node(), b.as_node()) {
            (_, None) => return false,
            (None, Some(_)) => return true,
            (Some(x), Some(y)) => (x, y),
        };
        if x.index != y.index {
            return x.index < y.index;
        }
        let key = (x as *const BinNode, y as *const BinNode);
        if let Some(&v) = self.seen.get(&key) {
            return v;
        }
        let i = x.index;
        let v = if x.left == y.left {
            self.lt(&x.right, &y.right)
        } else if self.lt(&x.left, &y.left) {
            k_set(i, &x.left)
                .iter()
                .chain(std::iter::once(&x.right))
                .all(|xi| self.lt(xi, b))
        } else if self.lt(&y.left, &x.left) {
            k_set(i, &y.left)
                .iter()
                .chain(std::iter::once(&y.right))
                .any(|xi| a == xi || self.lt(a, xi))
        } else {
            false
        };
        self.seen.insert(key, v);
        v
    }
}

/// Equal on identical terms, otherwise decided by [`btheta_lt`].
pub fn btheta_compare(a: &BinThetaTerm, b: &BinThetaTerm) -> Ordering {
    if a == b {
        Ordering::Equal
    } else if btheta_lt(a, b) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// `α⁻`: every `θ̄_i` becomes `θ̄_{i-1}`. Requires `K_0(α) = ∅`.
pub fn shift_down(a: &BinThetaTerm) -> Result<BinThetaTerm> {
    if !k_set(0, a).is_empty() {
        return Err(Error::Precondition(format!(
            "{a} contains th0, so it cannot be shifted down"
        )));
    }
    Ok(shift_unchecked(a))
}

fn shift_unchecked(a: &BinThetaTerm) -> BinThetaTerm {
    match a.as_node() {
        None => BinThetaTerm::Zero,
        Some(n) => BinThetaTerm::node(
            n.index - 1,
            shift_unchecked(&n.left),
            shift_unchecked(&n.right),
        ),
    }
}

/// `o_n : OT_n[0] → ω_{2n-1}`.
pub fn o_value(a: &BinThetaTerm, n: usize) -> Result<LeveledOrdValue> {
    if n == 0 || !a.is_member(BinSystem::Ot0(n)) {
        return Err(Error::not_member(BinSystem::Ot0(n).to_string(), a));
    }
    Ok(o_unchecked(a, n))
}

fn o_unchecked(a: &BinThetaTerm, n: usize) -> LeveledOrdValue {
    if n == 1 {
        return LeveledOrdValue::nat(a.size() as u64);
    }
    match a.as_node() {
        None => LeveledOrdValue::zero(n),
        Some(node) => {
            let sub = o_unchecked(&shift_unchecked(&node.left), n - 1);
            let arg = o_unchecked(&node.right, n);
            LeveledOrdValue::phi(sub, &arg).expect("levels line up by construction")
        }
    }
}

/// The embedding `f : S̄_n → OT_n`:
/// `f(i i₁…i_k j s) = θ̄_i(f(i₁…i_k), f(j s))` where `i₁…i_k` is the maximal run of labels
/// above `i`.
pub fn embed_seq(s: &GapSequence) -> Result<BinThetaTerm> {
    if !s.is_sbar() {
        return Err(Error::not_member(format!("S̄_{}", s.bound()), s));
    }
    Ok(embed_labels(s.labels()))
}

fn embed_labels(s: &[usize]) -> BinThetaTerm {
    let Some((&i, rest)) = s.split_first() else {
        return BinThetaTerm::Zero;
    };
    let k = rest.iter().take_while(|&&l| l > i).count();
    BinThetaTerm::node(i, embed_labels(&rest[..k]), embed_labels(&rest[k..]))
}

/// Every member of `system` with at most `max_nodes` nodes, by size, then index, then
/// the enumeration positions of the children.
pub fn enumerate_btheta(system: BinSystem, max_nodes: usize) -> Vec<BinThetaTerm> {
    let n = match system {
        BinSystem::T(n) | BinSystem::Ot(n) | BinSystem::Ot0(n) => n,
    };
    let ot = !matches!(system, BinSystem::T(_));
    let mut by_size: Vec<Vec<BinThetaTerm>> = vec![vec![BinThetaTerm::Zero]];
    for s in 1..=max_nodes {
        let mut layer = Vec::new();
        for i in 0..n {
            for l in 0..s {
                let r = s - 1 - l;
                for left in by_size[l].iter().filter(|t| t.level_at_most(i + 1)) {
                    if ot && !k_set(i, left).is_empty() {
                        continue;
                    }
                    for right in by_size[r].iter().filter(|t| t.level_at_most(i)) {
                        layer.push(BinThetaTerm::node(i, left.clone(), right.clone()));
                    }
                }
            }
        }
        by_size.push(layer);
    }
    let all = by_size.into_iter().flatten();
    match system {
        BinSystem::Ot0(_) => all.filter(|t| t.level_at_most(0)).collect(),
        _ => all.collect(),
    }
}

impl fmt::Display for BinThetaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_node() {
            None => f.write_str("0"),
            Some(n) => write!(f, "th{}({}, {})", n.index, n.left, n.right),
        }
    }
}

impl FromStr for BinThetaTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let t = parse_term(&mut cur)?;
        cur.finish()?;
        Ok(t)
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<BinThetaTerm> {
    if cur.eat("0") {
        return Ok(BinThetaTerm::Zero);
    }
    let at = cur.pos();
    if !(cur.eat("th") || cur.eat("θ")) {
        return Err(cur.error("expected `0` or `th`"));
    }
    let i = cur.glued_index()?;
    cur.expect("(")?;
    let left = parse_term(cur)?;
    cur.expect(",")?;
    let right = parse_term(cur)?;
    cur.expect(")")?;
    BinThetaTerm::theta(i, left, right).map_err(|e| Error::parse(at, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BinThetaTerm {
        s.parse().unwrap()
    }

    #[test]
    fn k_set_examples() {
        assert!(k_set(3, &b("0")).is_empty());
        assert_eq!(k_set(1, &b("th1(0,0)")), vec![b("th1(0,0)")]);
        assert!(k_set(0, &b("th1(0,0)")).is_empty());
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            btheta_compare(&b("th0(0,0)"), &b("th0(0, th0(0,0))")),
            Ordering::Less
        );
        assert_eq!(
            btheta_compare(&b("th0(0,0)"), &b("th0(th1(0,0), 0)")),
            Ordering::Less
        );
        assert_eq!(btheta_compare(&b("0"), &b("th0(0,0)")), Ordering::Less);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_down(&b("0")).unwrap(), b("0"));
        assert_eq!(shift_down(&b("th1(0,0)")).unwrap(), b("th0(0,0)"));
        assert_eq!(
            shift_down(&b("th2(th2(0,0), th1(0,0))")).unwrap(),
            b("th1(th1(0,0), th0(0,0))")
        );
        assert!(shift_down(&b("th1(0, th0(0,0))")).is_err());
    }

    #[test]
    fn o_examples() {
        assert_eq!(o_value(&b("0"), 2).unwrap(), LeveledOrdValue::zero(2));
        assert_eq!(
            o_value(&b("th0(0, th0(0,0))"), 1).unwrap(),
            LeveledOrdValue::nat(2)
        );
        let v = o_value(&b("th0(th1(0,0), 0)"), 2).unwrap();
        assert_eq!(v.to_string(), "phi(1, 0)");
        assert!(o_value(&b("th1(0,0)"), 2).is_err());
    }

    #[test]
    fn embed_examples() {
        let g = |s: &str| GapSequence::parse(s, 3).unwrap();
        assert_eq!(embed_seq(&g("")).unwrap(), b("0"));
        assert_eq!(embed_seq(&g("2")).unwrap(), b("th2(0,0)"));
        assert_eq!(
            embed_seq(&g("210")).unwrap(),
            b("th2(0, th1(0, th0(0,0)))")
        );
        assert!(embed_seq(&g("02")).is_err());
    }

    #[test]
    fn syntax() {
        let t = b(" th0( th1(0,0) ,0 )");
        assert_eq!(t.to_string(), "th0(th1(0, 0), 0)");
        assert!("th0(th2(0,0), 0)".parse::<BinThetaTerm>().is_err());
        assert!("th0(0)".parse::<BinThetaTerm>().is_err());
    }

    #[test]
    fn enumeration_membership() {
        for sys in [BinSystem::T(2), BinSystem::Ot(2), BinSystem::Ot0(2)] {
            let all = enumerate_btheta(sys, 4);
            assert!(all.iter().all(|t| t.is_member(sys)));
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }
}
