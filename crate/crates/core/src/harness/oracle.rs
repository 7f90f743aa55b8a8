//! Slow reference deciders used to cross-check the fast ones.

use crate::gapseq::GapMode;

/// Tries every strictly increasing, label-preserving map from positions of `s` to
/// positions of `t`, then checks the gap conditions on the finished map.
pub fn gap_leq_brute(s: &[usize], t: &[usize], mode: GapMode) -> bool {
    let mut f = Vec::with_capacity(s.len());
    extend(s, t, mode, &mut f)
}

fn extend(s: &[usize], t: &[usize], mode: GapMode, f: &mut Vec<usize>) -> bool {
    if f.len() == s.len() {
        return embedding_ok(s, t, mode, f);
    }
    let from = f.last().map_or(0, |&p| p + 1);
    let want = s[f.len()];
    for p in (from..t.len()).filter(|&p| t[p] == want) {
        f.push(p);
        if extend(s, t, mode, f) {
            return true;
        }
        f.pop();
    }
    false
}

fn embedding_ok(s: &[usize], t: &[usize], mode: GapMode, f: &[usize]) -> bool {
    let labels = (0..s.len()).all(|i| s[i] == t[f[i]]);
    let gaps = (1..s.len()).all(|i| t[f[i - 1] + 1..f[i]].iter().all(|&l| l >= s[i]));
    let prefix = mode == GapMode::Weak
        || f.first().is_none_or(|&p0| t[..p0].iter().all(|&l| l >= s[0]));
    labels && gaps && prefix
}
