//! Finite sequences over `{0, …, n-1}` under weak and strong gap-embeddability.

use std::fmt;

use crate::error::{Error, Result};
use crate::theta1::ThetaTerm;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GapSequence {
    labels: Vec<usize>,
    n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GapMode {
    Weak,
    Strong,
}

impl GapSequence {
    pub fn new(labels: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&bad) = labels.iter().find(|&&l| l >= n) {
            return Err(Error::Precondition(format!(
                "label {bad} is outside the alphabet of size {n}"
            )));
        }
        Ok(GapSequence { labels, n })
    }

    pub fn empty(n: usize) -> Self {
        GapSequence {
            labels: Vec::new(),
            n,
        }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn bound(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Membership in `S̄_n`: no step up by more than one.
    pub fn is_sbar(&self) -> bool {
        self.labels.windows(2).all(|w| w[1] <= w[0] + 1)
    }

    /// Membership in `S_n[i]`: empty, or first label at most `i`.
    pub fn starts_at_most(&self, i: usize) -> bool {
        self.labels.first().is_none_or(|&s| s <= i)
    }

    /// Parses `ε` (or the empty string), a digit string such as `0210`, or a comma
    /// separated list such as `10,3,0`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        let start = text.len() - text.trim_start().len();
        if t.is_empty() || t == "ε" {
            return Ok(GapSequence::empty(n));
        }
        let mut labels = Vec::new();
        if t.contains(',') {
            let mut offset = start;
            for piece in t.split(',') {
                let lead = piece.len() - piece.trim_start().len();
                let p = piece.trim();
                let l: usize = p.parse().map_err(|_| {
                    Error::parse(offset + lead, format!("`{p}` is not a label"))
                })?;
                labels.push(l);
                offset += piece.len() + 1;
            }
        } else {
            for (k, c) in t.char_indices() {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| Error::parse(start + k, format!("`{c}` is not a label")))?;
                labels.push(d as usize);
            }
        }
        if let Some(p) = labels.iter().position(|&l| l >= n) {
            return Err(Error::parse(
                start,
                format!("label {} at index {p} is not below {n}", labels[p]),
            ));
        }
        Ok(GapSequence { labels, n })
    }
}

impl fmt::Display for GapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_labels(f, &self.labels)
    }
}

fn write_labels(f: &mut fmt::Formatter<'_>, labels: &[usize]) -> fmt::Result {
    if labels.is_empty() {
        return f.write_str("ε");
    }
    let sep = if labels.iter().any(|&l| l >= 10) {
        ","
    } else {
        ""
    };
    for (k, l) in labels.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// `s ≤_gap t` in the given mode.
pub fn gap_leq(s: &GapSequence, t: &GapSequence, mode: GapMode) -> bool {
    gap_leq_labels(&s.labels, &t.labels, mode)
}

/// Decides the embedding by dynamic programming over `(i, p)`: the prefix `s[..=i]`
/// embeds with `s[i]` sent to `t[p]`. From such a state the next label may go to any
/// later `q` with `t[q] = s[i+1]`, provided every label strictly between is `≥ s[i+1]`.
pub fn gap_leq_labels(s: &[usize], t: &[usize], mode: GapMode) -> bool {
    let Some(&s0) = s.first() else {
        return true;
    };
    let mut reach = vec![false; t.len()];
    for (p, &l) in t.iter().enumerate() {
        if l == s0 {
            reach[p] = true;
        }
        if mode == GapMode::Strong && l < s0 {
            break;
        }
    }
    for &next in &s[1..] {
        let mut new = vec![false; t.len()];
        for p in (0..t.len()).filter(|&p| reach[p]) {
            for q in p + 1..t.len() {
                if t[q] < next {
                    break;
                }
                if t[q] == next {
                    if new[q] {
                        // Later positions were already scanned from an earlier start.
                        break;
                    }
                    new[q] = true;
                }
            }
        }
        reach = new;
    }
    reach.contains(&true)
}

/// Splits `s ∈ S_{n+1}` at its zeros into `s₀⁺ 0 s₁⁺ 0 … 0 s_k⁺` and returns
/// `(s₀, (s₁, …, s_k))` over `S_n`.
pub fn h_split(s: &GapSequence) -> Result<(GapSequence, Vec<GapSequence>)> {
    if s.n == 0 {
        return Err(Error::Precondition(
            "h_split needs an alphabet of size at least 1".into(),
        ));
    }
    let n = s.n - 1;
    let mut blocks = s.labels.split(|&l| l == 0).map(|b| GapSequence {
        labels: b.iter().map(|l| l - 1).collect(),
        n,
    });
    let head = blocks.next().expect("split yields at least one block");
    Ok((head, blocks.collect()))
}

/// Inverse of [`h_split`].
pub fn h_unsplit(head: &GapSequence, parts: &[GapSequence]) -> GapSequence {
    let n = head.n + 1;
    let mut labels: Vec<usize> = head.labels.iter().map(|l| l + 1).collect();
    for p in parts {
        labels.push(0);
        labels.extend(p.labels.iter().map(|l| l + 1));
    }
    GapSequence { labels, n }
}

/// Higman's order on finite sequences: `xs` embeds into `ys` along a strictly increasing
/// map with `leq(x, y)` at matched positions. Matching each `x` as early as possible
/// never leaves fewer candidates for the rest.
pub fn higman_leq<T>(xs: &[T], ys: &[T], mut leq: impl FnMut(&T, &T) -> bool) -> bool {
    let mut it = ys.iter();
    xs.iter().all(|x| it.any(|y| leq(x, y)))
}

/// The map `e : T_n → S̄_n`, reading off the indices from the outside in.
pub fn seq_of_term(a: &ThetaTerm, n: usize) -> Result<GapSequence> {
    GapSequence::new(a.indices().to_vec(), n)
        .map_err(|_| Error::not_member(format!("T_{n}"), a))
}

/// The inverse of [`seq_of_term`]; rejects sequences outside `S̄_n`.
pub fn term_of_seq(s: &GapSequence) -> Result<ThetaTerm> {
    if !s.is_sbar() {
        return Err(Error::not_member(format!("S̄_{}", s.n), s));
    }
    ThetaTerm::from_indices(s.labels.clone())
}

/// Which sequences [`enumerate_seqs`] produces.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct SeqFamily {
    /// Only `S̄_n` sequences.
    pub bar: bool,
    /// Only sequences starting with a label `≤ i`.
    pub first_at_most: Option<usize>,
}

/// All sequences of length at most `max_len` in the family, by length and then
/// lexicographically.
pub fn enumerate_seqs(n: usize, max_len: usize, family: SeqFamily) -> Vec<GapSequence> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for len in 0..=max_len {
        out.extend(layer.iter().map(|w| GapSequence {
            labels: w.clone(),
            n,
        }));
        if len == max_len {
            break;
        }
        let mut next = Vec::new();
        for w in &layer {
            let top = match (w.last(), family.bar, w.is_empty()) {
                (Some(&l), true, _) => (l + 2).min(n),
                (None, _, true) => family.first_at_most.map_or(n, |i| (i + 1).min(n)),
                _ => n,
            };
            for x in 0..top {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        layer = next;
    }
    out
}
