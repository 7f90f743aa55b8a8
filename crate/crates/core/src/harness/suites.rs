use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt::Display;
use std::hash::Hash;

use crate::cnf::{cnf_compare, enumerate_cnf, f_hat, omega_tower, CnfOrdinal};
use crate::error::{Error, Result};
use crate::gapseq::{
    enumerate_seqs, gap_leq, gap_leq_labels, h_split, h_unsplit, higman_leq, seq_of_term,
    term_of_seq, GapMode, SeqFamily,
};
use crate::harness::oracle::gap_leq_brute;
use crate::harness::report::Check;
use crate::maps::{chi, chi_std, psi_map, psi_prime, tau, tau0, tau0_bound, tuple_compare, TauValue};
use crate::pi::{enumerate_pi, PiTerm};
use crate::theta1::{
    enumerate_theta, gap_below, k_coeff, substitute, theta_compare, theta_lt, theta_validate,
    ThetaSystem, ThetaTerm,
};
use crate::theta2::{
    btheta_compare, btheta_lt, embed_seq, enumerate_btheta, k_set, o_value, shift_down,
    BinSystem, BinThetaTerm,
};
use crate::veblen::{enumerate_veblen, veblen_compare, veblen_lt, LeveledOrdValue};

/// Quadratic checks run on at most this many terms; larger domains are thinned by a
/// fixed stride.
pub const PAIR_CAP: usize = 5000;
/// Transitivity is checked on all triples of a strided sample of this size.
pub const TRIPLE_SAMPLE: usize = 60;

/// Size parameters of a suite run. What `n` and `size` bound depends on the suite; see
/// [`SUITES`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bounds {
    pub n: usize,
    pub size: usize,
}

pub struct SuiteInfo {
    pub name: &'static str,
    pub property: &'static str,
    pub default: Bounds,
}

const fn b(n: usize, size: usize) -> Bounds {
    Bounds { n, size }
}

pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo { name: "order-cnf", property: "cnf order is a strict total order (size = nodes)", default: b(0, 6) },
    SuiteInfo { name: "order-veblen", property: "veblen order is total for natural, pi0 and leveled subscripts (n = subscript bound, size = phi-nodes)", default: b(3, 6) },
    SuiteInfo { name: "order-pi", property: "pi(n) order is total (size = D-nodes)", default: b(3, 6) },
    SuiteInfo { name: "order-theta", property: "T_n order is total (size = lh)", default: b(3, 6) },
    SuiteInfo { name: "order-btheta", property: "binary T_n order is total (size = nodes)", default: b(3, 6) },
    SuiteInfo { name: "e-iso", property: "gap_below matches strong gap embedding under e", default: b(3, 5) },
    SuiteInfo { name: "unlhd-subset-lt", property: "gap_below implies <=", default: b(3, 5) },
    SuiteInfo { name: "unlhd-partial-order", property: "gap_below is reflexive, antisymmetric, transitive", default: b(3, 5) },
    SuiteInfo { name: "h-iso", property: "h_n is an isomorphism onto head x Higman parts (alphabet n+1)", default: b(2, 6) },
    SuiteInfo { name: "theta-coeff-subst", property: "coefficient and substitution laws", default: b(3, 5) },
    SuiteInfo { name: "block-inequalities", property: "block inequalities in T_2 (n = top exponent, size = lh of alpha, beta)", default: b(3, 3) },
    SuiteInfo { name: "gap-orders", property: "both gap orders are preorders, strong within weak, 0-prefix reflects weak", default: b(3, 5) },
    SuiteInfo { name: "gap-dp-oracle", property: "gap_leq agrees with brute force in both modes", default: b(3, 7) },
    SuiteInfo { name: "chi-monotone", property: "chi is an order isomorphism onto T_2[0] (n = subscript bound, size = phi-nodes)", default: b(5, 5) },
    SuiteInfo { name: "chi-std-monotone", property: "chi_std is strictly monotone into T_2[0] below w^(w^n) (size = nodes)", default: b(3, 8) },
    SuiteInfo { name: "psi-monotone", property: "psi is strictly monotone into T_(n+1)[0] (size = phi-nodes; subscripts up to 3 D-nodes)", default: b(2, 4) },
    SuiteInfo { name: "psi-prime-monotone", property: "psi' is strictly monotone from T_n into T'_n", default: b(3, 5) },
    SuiteInfo { name: "tau-normal-form", property: "tau_m outputs are in normal form, for every n' <= n", default: b(2, 6) },
    SuiteInfo { name: "tau-monotone", property: "tau_m is strictly monotone on T'_(n'+1)[m], for every n' <= n", default: b(2, 6) },
    SuiteInfo { name: "tau-bounds", property: "coefficient bounds of tau_(m+1) and tau_0 < w_(n'+2), for every n' <= n", default: b(2, 6) },
    SuiteInfo { name: "btheta-right-child", property: "the right child is below its parent", default: b(3, 6) },
    SuiteInfo { name: "shift-down", property: "shifting down is monotone and commutes with K", default: b(3, 6) },
    SuiteInfo { name: "o-monotone", property: "o_n' is strictly monotone on OT_n'[0], for every n' <= n", default: b(3, 6) },
    SuiteInfo { name: "f-embed-monotone", property: "f embeds S̄_n into OT_n, injective and monotone for strong gap", default: b(3, 6) },
    SuiteInfo { name: "f-hat", property: "f is monotone, bounded, and consistent on absorbed sums (size = nodes)", default: b(0, 8) },
    SuiteInfo { name: "cnf-arith", property: "natural sum and product laws, right monotonicity of + (size = nodes)", default: b(0, 5) },
];

pub fn suite_info(name: &str) -> Option<&'static SuiteInfo> {
    SUITES.iter().find(|s| s.name == name)
}

/// Runs the named property. Returns a description of the bound actually used.
pub(crate) fn run(name: &str, c: &mut Check, bd: Bounds) -> Result<String> {
    match name {
        "order-cnf" => order_cnf(c, bd),
        "order-veblen" => order_veblen(c, bd),
        "order-pi" => order_pi(c, bd),
        "order-theta" => order_theta(c, bd),
        "order-btheta" => order_btheta(c, bd),
        "e-iso" => e_iso(c, bd),
        "unlhd-subset-lt" => unlhd_subset_lt(c, bd),
        "unlhd-partial-order" => unlhd_partial_order(c, bd),
        "h-iso" => h_iso(c, bd),
        "theta-coeff-subst" => theta_coeff_subst(c, bd),
        "block-inequalities" => block_inequalities(c, bd),
        "gap-orders" => gap_orders(c, bd),
        "gap-dp-oracle" => gap_dp_oracle(c, bd),
        "chi-monotone" => chi_monotone(c, bd),
        "chi-std-monotone" => chi_std_monotone(c, bd),
        "psi-monotone" => psi_monotone(c, bd),
        "psi-prime-monotone" => psi_prime_monotone(c, bd),
        "tau-normal-form" => tau_normal_form(c, bd),
        "tau-monotone" => tau_monotone(c, bd),
        "tau-bounds" => tau_bounds(c, bd),
        "btheta-right-child" => btheta_right_child(c, bd),
        "shift-down" => shift_down_suite(c, bd),
        "o-monotone" => o_monotone(c, bd),
        "f-embed-monotone" => f_embed_monotone(c, bd),
        "f-hat" => f_hat_suite(c, bd),
        "cnf-arith" => cnf_arith(c, bd),
        _ => Err(Error::InvalidSpec(format!("unknown suite `{name}`"))),
    }
}

fn need_n(bd: Bounds) -> Result<usize> {
    if bd.n == 0 {
        Err(Error::InvalidSpec("this suite needs n >= 1".into()))
    } else {
        Ok(bd.n)
    }
}

fn thin<T>(v: Vec<T>, cap: usize) -> Vec<T> {
    if v.len() <= cap {
        return v;
    }
    let stride = v.len().div_ceil(cap);
    v.into_iter().step_by(stride).collect()
}

fn thinned_note(full: usize, used: usize) -> String {
    if full == used {
        format!("{full} terms")
    } else {
        format!("{used} of {full} terms, strided")
    }
}

/// Trichotomy of `lt` on every pair, agreement of `cmp` with it, and transitivity.
///
/// Transitivity is checked twice: on all triples of a strided sample, and exhaustively
/// through the score sequence, since a complete asymmetric relation is transitive exactly
/// when no two elements have the same number of predecessors.
fn total_order<T: PartialEq + Display>(
    c: &mut Check,
    dom: &[T],
    lt: impl Fn(&T, &T) -> bool,
    cmp: impl Fn(&T, &T) -> Ordering,
) {
    let mut below = vec![0usize; dom.len()];
    for (i, a) in dom.iter().enumerate() {
        c.case(!lt(a, a) && cmp(a, a) == Ordering::Equal, || {
            format!("{a} is not equal to itself")
        });
        for (j, b) in dom.iter().enumerate().skip(i + 1) {
            let (x, y) = (lt(a, b), lt(b, a));
            let want = match (x, y) {
                (true, false) => Some(Ordering::Less),
                (false, true) => Some(Ordering::Greater),
                _ => None,
            };
            let got = cmp(a, b);
            c.case(a != b && want == Some(got), || {
                format!("{a} vs {b}: a<b is {x}, b<a is {y}, compare gives {got:?}")
            });
            if x {
                below[j] += 1;
            } else if y {
                below[i] += 1;
            }
        }
    }
    let mut scores = below.clone();
    scores.sort_unstable();
    c.case(scores.iter().enumerate().all(|(k, &s)| k == s), || {
        "the order has a cycle somewhere in the domain".into()
    });
    let sample: Vec<&T> = dom.iter().step_by(dom.len().div_ceil(TRIPLE_SAMPLE).max(1)).collect();
    transitive(c, &sample, |a, b| lt(a, b));
}

fn transitive<T: Display>(c: &mut Check, sample: &[&T], rel: impl Fn(&T, &T) -> bool) {
    let m = sample.len();
    let table: Vec<bool> = (0..m * m).map(|k| rel(sample[k / m], sample[k % m])).collect();
    for i in 0..m {
        for j in 0..m {
            if !table[i * m + j] {
                continue;
            }
            for k in 0..m {
                if table[j * m + k] {
                    c.case(table[i * m + k], || {
                        format!("{} R {} R {} but not {} R {}", sample[i], sample[j], sample[k], sample[i], sample[k])
                    });
                }
            }
        }
    }
}

fn all_distinct<T: Hash + Eq + Display>(c: &mut Check, images: &[T]) {
    let mut seen = HashSet::new();
    for x in images {
        c.case(seen.insert(x), || format!("{x} is hit twice"));
    }
}

/// `a < b ⇒ f(a) < f(b)` over all pairs of a domain sorted increasingly.
fn strictly_monotone<A: Display, B: Display>(
    c: &mut Check,
    dom: &[A],
    img: &[B],
    cmp_dom: impl Fn(&A, &A) -> Ordering,
    cmp_img: impl Fn(&B, &B) -> Ordering,
) {
    for i in 0..dom.len() {
        for j in 0..dom.len() {
            if i != j && cmp_dom(&dom[i], &dom[j]) == Ordering::Less {
                let o = cmp_img(&img[i], &img[j]);
                c.case(o == Ordering::Less, || {
                    format!("{} < {} but images {} and {} compare {o:?}", dom[i], dom[j], img[i], img[j])
                });
            }
        }
    }
}

/// Recursive CNF comparison written independently of the library's.
fn cnf_lt_oracle(a: &CnfOrdinal, b: &CnfOrdinal) -> bool {
    for (x, y) in a.terms().iter().zip(b.terms()) {
        if x.exponent() != y.exponent() {
            return cnf_lt_oracle(x.exponent(), y.exponent());
        }
        if x.coeff() != y.coeff() {
            return x.coeff() < y.coeff();
        }
    }
    a.terms().len() < b.terms().len()
}

fn order_cnf(c: &mut Check, bd: Bounds) -> Result<String> {
    let dom = enumerate_cnf(bd.size);
    total_order(c, &dom, cnf_lt_oracle, cnf_compare);
    Ok(format!("nodes<={}, {} terms", bd.size, dom.len()))
}

fn order_veblen(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let nats: Vec<usize> = (0..n).collect();
    let full = enumerate_veblen(&nats, bd.size);
    let total = full.len();
    let dom = thin(full, PAIR_CAP);
    let used = dom.len();
    total_order(
        c,
        &dom,
        |a, b| veblen_lt(a, b, &mut |x: &usize, y: &usize| x.cmp(y)),
        |a, b| veblen_compare(a, b, &mut |x: &usize, y: &usize| x.cmp(y)),
    );

    let small = bd.size.min(4);
    let pi0: Vec<PiTerm> = enumerate_pi(n, 2).into_iter().filter(PiTerm::is_pi0).collect();
    let pi_full = enumerate_veblen(&pi0, small);
    let pi_total = pi_full.len();
    let pi_dom = thin(pi_full, PAIR_CAP);
    total_order(
        c,
        &pi_dom,
        |a, b| veblen_lt(a, b, &mut |x: &PiTerm, y: &PiTerm| x.cmp(y)),
        |a, b| veblen_compare(a, b, &mut |x: &PiTerm, y: &PiTerm| x.cmp(y)),
    );

    let level2: Vec<LeveledOrdValue> = enumerate_veblen(&nats, 2)
        .iter()
        .map(|t| {
            t.subscripts().iter().rev().try_fold(LeveledOrdValue::zero(2), |acc, &k| {
                LeveledOrdValue::phi(LeveledOrdValue::nat(k as u64), &acc)
            })
        })
        .collect::<Result<_>>()?;
    let lv_full = enumerate_veblen(&level2, small);
    let lv_total = lv_full.len();
    let lv_dom = thin(lv_full, PAIR_CAP);
    let lv_cmp = |x: &LeveledOrdValue, y: &LeveledOrdValue| {
        x.try_cmp(y).expect("subscripts share a level")
    };
    total_order(
        c,
        &lv_dom,
        |a, b| veblen_lt(a, b, &mut lv_cmp.clone()),
        |a, b| veblen_compare(a, b, &mut lv_cmp.clone()),
    );
    Ok(format!(
        "subscripts<{n}, nodes<={}: {}; pi0 subscripts (<=2 D-nodes), nodes<={small}: {}; level-2 subscripts, nodes<={small}: {}",
        bd.size,
        thinned_note(total, used),
        thinned_note(pi_total, pi_dom.len()),
        thinned_note(lv_total, lv_dom.len())
    ))
}

fn order_pi(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let full = enumerate_pi(n, bd.size);
    let total = full.len();
    let dom = thin(full, PAIR_CAP);
    // Plain lexicographic comparison of index words, spelled out.
    let lt = |a: &PiTerm, b: &PiTerm| {
        let (x, y) = (a.indices(), b.indices());
        match x.iter().zip(y).find(|(p, q)| p != q) {
            Some((p, q)) => p < q,
            None => x.len() < y.len(),
        }
    };
    total_order(c, &dom, lt, crate::pi::pi_compare);
    // π₀(n) is an initial segment.
    for a in &dom {
        for p in dom.iter().filter(|p| p.is_pi0()) {
            if a < p {
                c.case(a.is_pi0(), || format!("{a} < {p} but {a} is not in pi0"));
            }
        }
    }
    Ok(format!("n={n}, D-nodes<={}, {}", bd.size, thinned_note(total, dom.len())))
}

fn theta_domain(n: usize, lh: usize) -> Result<Vec<ThetaTerm>> {
    enumerate_theta(&ThetaSystem::t_n(n), lh)
}

fn order_theta(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let full = theta_domain(n, bd.size)?;
    let total = full.len();
    let dom = thin(full, PAIR_CAP);
    total_order(c, &dom, theta_lt, theta_compare);
    Ok(format!("T_{n}, lh<={}, {}", bd.size, thinned_note(total, dom.len())))
}

fn order_btheta(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let full = enumerate_btheta(BinSystem::T(n), bd.size);
    let total = full.len();
    let dom = thin(full, PAIR_CAP);
    total_order(c, &dom, btheta_lt, btheta_compare);
    Ok(format!("T_{n}, nodes<={}, {}", bd.size, thinned_note(total, dom.len())))
}

fn e_iso(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let dom = theta_domain(n, bd.size)?;
    let mut seqs = Vec::with_capacity(dom.len());
    for a in &dom {
        let s = seq_of_term(a, n)?;
        c.case(s.is_sbar() && term_of_seq(&s).as_ref() == Ok(a), || {
            format!("e is not invertible at {a}")
        });
        seqs.push(s);
    }
    let sbar = enumerate_seqs(n, bd.size, SeqFamily { bar: true, first_at_most: None });
    c.case(sbar.len() == dom.len(), || {
        format!("{} terms but {} sequences", dom.len(), sbar.len())
    });
    for (a, s) in dom.iter().zip(&seqs) {
        for (b, t) in dom.iter().zip(&seqs) {
            let (x, y) = (gap_below(a, b), gap_leq(s, t, GapMode::Strong));
            c.case(x == y, || format!("{a} unlhd {b} is {x}, {s} <=s {t} is {y}"));
        }
    }
    Ok(format!("T_{n}, lh<={}, {} terms", bd.size, dom.len()))
}

fn unlhd_subset_lt(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let dom = theta_domain(n, bd.size)?;
    for a in &dom {
        for b in &dom {
            if gap_below(a, b) {
                c.case(theta_compare(a, b) != Ordering::Greater, || {
                    format!("{a} unlhd {b} but {a} > {b}")
                });
            }
        }
    }
    Ok(format!("T_{n}, lh<={}, {} terms", bd.size, dom.len()))
}

fn unlhd_partial_order(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let dom = theta_domain(n, bd.size)?;
    for a in &dom {
        c.case(gap_below(a, a), || format!("{a} unlhd {a} fails"));
        for b in &dom {
            if a != b && gap_below(a, b) {
                c.case(!gap_below(b, a), || format!("{a} and {b} are mutually below"));
            }
        }
    }
    let sample: Vec<&ThetaTerm> = dom.iter().step_by(dom.len().div_ceil(TRIPLE_SAMPLE).max(1)).collect();
    transitive(c, &sample, gap_below);
    Ok(format!("T_{n}, lh<={}, {} terms", bd.size, dom.len()))
}

fn h_iso(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let dom = enumerate_seqs(n + 1, bd.size, SeqFamily::default());
    let mut split = Vec::with_capacity(dom.len());
    for s in &dom {
        let (h, parts) = h_split(s)?;
        c.case(h_unsplit(&h, &parts) == *s, || format!("h is not invertible at {s}"));
        split.push((h, parts));
    }
    let strong = |x: &crate::GapSequence, y: &crate::GapSequence| gap_leq(x, y, GapMode::Strong);
    for (s, (hs, ps)) in dom.iter().zip(&split) {
        for (t, (ht, pt)) in dom.iter().zip(&split) {
            let x = gap_leq(s, t, GapMode::Strong);
            let y = strong(hs, ht) && higman_leq(ps, pt, strong);
            c.case(x == y, || format!("{s} <=s {t} is {x}, the split comparison is {y}"));
        }
    }
    Ok(format!("S_{}, length<={}, {} sequences", n + 1, bd.size, dom.len()))
}

fn theta_coeff_subst(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let dom = theta_domain(n, bd.size)?;
    let subs = enumerate_theta(&ThetaSystem::t_nm(n, 0), bd.size)?;
    let mut substituted: Vec<Vec<ThetaTerm>> = Vec::with_capacity(dom.len());
    for a in &dom {
        for i in 0..=n {
            let k = k_coeff(i, a);
            c.case(k <= *a, || format!("k_{i}({a}) = {k} is above {a}"));
            if let Ok(t) = ThetaTerm::theta(i, a) {
                if i < n {
                    c.case(k < t, || format!("k_{i}({a}) = {k} is not below {t}"));
                }
            }
        }
        let mut row = Vec::with_capacity(subs.len());
        for g in &subs {
            let Some(ag) = c.result(substitute(a, g), || format!("{a}[{g}]")) else {
                row.push(ThetaTerm::zero());
                continue;
            };
            for i in 0..=n {
                let lhs = substitute(&k_coeff(i, a), g);
                let rhs = k_coeff(i, &ag);
                c.case(lhs.as_ref() == Ok(&rhs), || {
                    format!("k_{i}({a})[{g}] differs from k_{i}({a}[{g}]) = {rhs}")
                });
            }
            c.case(*g <= ag && ((*g == ag) == a.is_zero()), || {
                format!("{g} against {a}[{g}] = {ag}")
            });
            row.push(ag);
        }
        substituted.push(row);
    }
    for (x, a) in dom.iter().enumerate() {
        for (y, b) in dom.iter().enumerate() {
            if a < b {
                for (z, g) in subs.iter().enumerate() {
                    let (p, q) = (&substituted[x][z], &substituted[y][z]);
                    c.case(p < q, || format!("{a} < {b} but {a}[{g}] = {p} is not below {q}"));
                }
            }
        }
    }
    Ok(format!(
        "T_{n}, lh<={}, {} terms, {} substituends from T_{n}[0]",
        bd.size,
        dom.len(),
        subs.len()
    ))
}

/// Words of the form `ϑ_0^{k_0} ϑ_1^{l_1} ϑ_0^{k_1} … ϑ_1^{l_r} ϑ_0^{k_r}` with
/// `l_i < n`, `1 ≤ k_i ≤ 2` and `r ≤ max_r`.
fn blocks(n: usize, max_r: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = (1..=2).map(|k| vec![0; k]).collect();
    for r in 0..=max_r {
        out.extend(layer.iter().cloned());
        if r == max_r {
            break;
        }
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..n {
                for k in 1..=2 {
                    let mut v = w.clone();
                    v.extend(std::iter::repeat_n(1, l));
                    v.extend(std::iter::repeat_n(0, k));
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    out
}

fn word(parts: &[&[usize]]) -> Result<ThetaTerm> {
    ThetaTerm::from_indices(parts.concat())
}

fn block_inequalities(c: &mut Check, bd: Bounds) -> Result<String> {
    let top = need_n(bd)?;
    let below_omega1 = enumerate_theta(&ThetaSystem::t_nm(2, 0), bd.size)?;
    let mut pairs = Vec::new();
    for a in &below_omega1 {
        for b in &below_omega1 {
            if a < b {
                pairs.push((a, b));
            }
        }
    }
    for n in 1..=top {
        let ones = vec![1; n];
        let small = blocks(n, 1);
        for blk in blocks(n, 2) {
            for (a, b) in &pairs {
                let lhs = word(&[&blk, &ones, a.indices()])?;
                let rhs = word(&[&[0], &ones, b.indices()])?;
                c.case(lhs < rhs, || format!("{lhs} is not below {rhs}"));
            }
            let lhs = word(&[&blk])?;
            let rhs = word(&[&[0], &ones])?;
            c.case(lhs < rhs, || format!("{lhs} is not below {rhs}"));
        }
        // Two blocks on each side, each closed by ϑ_1ⁿ.
        for (a, b) in &pairs {
            for l0 in &small {
                for l1 in &small {
                    let lhs = word(&[l0, &ones, l1, &ones, a.indices()])?;
                    for r0 in &small {
                        for r1 in &small {
                            let rhs = word(&[r0, &ones, r1, &ones, b.indices()])?;
                            c.case(lhs < rhs, || format!("{lhs} is not below {rhs}"));
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "exponent n<={top}, alpha < beta from T_2[0] with lh<={} ({} pairs)",
        bd.size,
        pairs.len()
    ))
}

fn gap_orders(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let dom = enumerate_seqs(n, bd.size, SeqFamily::default());
    for s in &dom {
        for mode in [GapMode::Weak, GapMode::Strong] {
            c.case(gap_leq(s, s, mode), || format!("{s} does not embed into itself ({mode:?})"));
        }
        for t in &dom {
            if gap_leq(s, t, GapMode::Strong) {
                c.case(gap_leq(s, t, GapMode::Weak), || format!("{s} <=s {t} but not <=w"));
            }
            let mut zs = vec![0];
            zs.extend_from_slice(s.labels());
            let mut zt = vec![0];
            zt.extend_from_slice(t.labels());
            if gap_leq_labels(&zs, &zt, GapMode::Weak) {
                c.case(gap_leq(s, t, GapMode::Weak), || format!("0{s} <=w 0{t} but {s} is not <=w {t}"));
            }
        }
    }
    let sample: Vec<_> = dom.iter().step_by(dom.len().div_ceil(TRIPLE_SAMPLE).max(1)).collect();
    for mode in [GapMode::Weak, GapMode::Strong] {
        transitive(c, &sample, |s, t| gap_leq(s, t, mode));
    }
    Ok(format!("S_{n}, length<={}, {} sequences", bd.size, dom.len()))
}

fn gap_dp_oracle(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let dom = enumerate_seqs(n, bd.size, SeqFamily::default());
    for s in &dom {
        for t in &dom {
            for mode in [GapMode::Weak, GapMode::Strong] {
                let (x, y) = (gap_leq(s, t, mode), gap_leq_brute(s.labels(), t.labels(), mode));
                c.case(x == y, || format!("{s} into {t} ({mode:?}): dp {x}, brute force {y}"));
            }
        }
    }
    Ok(format!("S_{n}, length<={}, {} sequences", bd.size, dom.len()))
}

fn chi_monotone(c: &mut Check, bd: Bounds) -> Result<String> {
    let subs = need_n(bd)?;
    let sub_list: Vec<usize> = (0..subs).collect();
    let dom = enumerate_veblen(&sub_list, bd.size);
    let img: Vec<ThetaTerm> = dom.iter().map(chi).collect();
    let t2 = ThetaSystem::t_nm(2, 0);
    for (a, x) in dom.iter().zip(&img) {
        c.case(theta_validate(x.indices(), &t2), || format!("chi({a}) = {x} is outside T_2[0]"));
    }
    all_distinct(c, &img);
    for (a, x) in dom.iter().zip(&img) {
        for (b, y) in dom.iter().zip(&img) {
            let (p, q) = (veblen_compare(a, b, &mut |s: &usize, t: &usize| s.cmp(t)), theta_compare(x, y));
            c.case(p == q, || format!("{a} vs {b} is {p:?} but {x} vs {y} is {q:?}"));
        }
    }
    // Onto: every T_2[0] term short enough to have a preimage in the domain is hit.
    let lh = bd.size.min(subs);
    let target = enumerate_theta(&t2, lh)?;
    let hit: HashSet<&ThetaTerm> = img.iter().filter(|x| x.lh() <= lh).collect();
    for t in &target {
        c.case(hit.contains(t), || format!("{t} has no preimage"));
    }
    c.case(hit.len() == target.len(), || {
        format!("{} images of lh<={lh}, {} terms in T_2[0]", hit.len(), target.len())
    });
    Ok(format!(
        "subscripts<{subs}, phi-nodes<={}, {} terms; onto T_2[0] at lh<={lh}",
        bd.size,
        dom.len()
    ))
}

fn chi_std_monotone(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let limit = CnfOrdinal::omega_pow(CnfOrdinal::omega_pow(CnfOrdinal::nat(n as u64)));
    let dom: Vec<CnfOrdinal> = enumerate_cnf(bd.size).into_iter().filter(|a| *a < limit).collect();
    let mut img = Vec::with_capacity(dom.len());
    let t2 = ThetaSystem::t_nm(2, 0);
    for a in &dom {
        let x = c.result(chi_std(a), || format!("chi_std({a})")).unwrap_or_default();
        c.case(theta_validate(x.indices(), &t2), || format!("chi_std({a}) = {x} is outside T_2[0]"));
        img.push(x);
    }
    all_distinct(c, &img);
    for (a, x) in dom.iter().zip(&img) {
        for (b, y) in dom.iter().zip(&img) {
            let (p, q) = (cnf_compare(a, b), theta_compare(x, y));
            c.case(p == q, || format!("{a} vs {b} is {p:?} but {x} vs {y} is {q:?}"));
        }
    }
    Ok(format!("below {limit}, nodes<={}, {} ordinals", bd.size, dom.len()))
}

fn psi_monotone(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let subs: Vec<PiTerm> = enumerate_pi(n, 3).into_iter().filter(|p| p.head() == Some(0)).collect();
    let dom = enumerate_veblen(&subs, bd.size);
    let target = ThetaSystem::t_nm(n + 1, 0);
    let mut img = Vec::with_capacity(dom.len());
    for a in &dom {
        let x = c.result(psi_map(a), || format!("psi({a})")).unwrap_or_default();
        c.case(theta_validate(x.indices(), &target), || format!("psi({a}) = {x} is outside {target}"));
        img.push(x);
    }
    all_distinct(c, &img);
    strictly_monotone(c, &dom, &img, |a, b| a.cmp(b), theta_compare);
    Ok(format!(
        "n={n}, {} subscripts D0(..) with <=3 D-nodes, phi-nodes<={}, {} terms",
        subs.len(),
        bd.size,
        dom.len()
    ))
}

fn psi_prime_monotone(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let dom = theta_domain(n, bd.size)?;
    let target = ThetaSystem::t_prime(n);
    let mut img = Vec::with_capacity(dom.len());
    for a in &dom {
        let x = c.result(psi_prime(a, n), || format!("psi'({a})")).unwrap_or_default();
        c.case(theta_validate(x.indices(), &target), || format!("psi'({a}) = {x} is outside {target}"));
        img.push(x);
    }
    all_distinct(c, &img);
    strictly_monotone(c, &dom, &img, theta_compare, theta_compare);
    Ok(format!("T_{n}, lh<={}, {} terms", bd.size, dom.len()))
}

/// `T'_{n+1}[m]` for every `1 ≤ n ≤ top` and `m ≤ n + 1`.
fn tau_domains(top: usize, lh: usize) -> Result<Vec<(usize, usize, Vec<ThetaTerm>)>> {
    let mut out = Vec::new();
    for n in 1..=top {
        for m in 0..=n + 1 {
            out.push((n, m, enumerate_theta(&ThetaSystem::t_prime_m(n + 1, m), lh)?));
        }
    }
    Ok(out)
}

fn tau_values(c: &mut Check, n: usize, m: usize, dom: &[ThetaTerm]) -> Vec<Option<TauValue>> {
    dom.iter()
        .map(|a| c.result(tau(m, a, n), || format!("tau_{m}({a}) at n={n}")))
        .collect()
}

fn tau_normal_form(c: &mut Check, bd: Bounds) -> Result<String> {
    let top = need_n(bd)?;
    let mut count = 0;
    for (n, m, dom) in tau_domains(top, bd.size)? {
        count += dom.len();
        for (a, v) in dom.iter().zip(tau_values(c, n, m, &dom)) {
            match v {
                None => {}
                Some(TauValue::Ordinal(o)) => {
                    c.case(m == 0 && (o.is_zero() || o.is_successor()), || {
                        format!("tau_{m}({a}) = {o} at n={n}")
                    });
                }
                Some(TauValue::Tuple(t)) => {
                    let eta = t.tail();
                    let ok = m > 0
                        && *eta < CnfOrdinal::omega_pow(f_hat(t.omega_coeff()))
                        && (eta.is_zero() || eta.is_successor())
                        && t.omega_coeff().is_zero() == eta.is_zero()
                        && *t.theta_part() == k_coeff(m - 1, a);
                    c.case(ok, || format!("tau_{m}({a}) = {t} at n={n}"));
                }
            }
        }
    }
    Ok(format!("T'_(n+1)[m], n<={top}, every m, lh<={}, {count} terms", bd.size))
}

fn tau_compare(x: &TauValue, y: &TauValue) -> Ordering {
    match (x, y) {
        (TauValue::Ordinal(a), TauValue::Ordinal(b)) => a.cmp(b),
        (TauValue::Tuple(a), TauValue::Tuple(b)) => tuple_compare(a, b).expect("same level"),
        _ => panic!("values of different levels"),
    }
}

fn tau_monotone(c: &mut Check, bd: Bounds) -> Result<String> {
    let top = need_n(bd)?;
    let mut count = 0;
    for (n, m, dom) in tau_domains(top, bd.size)? {
        count += dom.len();
        let vals = tau_values(c, n, m, &dom);
        let (dom, img): (Vec<ThetaTerm>, Vec<TauValue>) = dom
            .into_iter()
            .zip(vals)
            .filter_map(|(a, v)| v.map(|v| (a, v)))
            .unzip();
        strictly_monotone(c, &dom, &img, theta_compare, tau_compare);
    }
    Ok(format!("T'_(n+1)[m], n<={top}, every m, lh<={}, {count} terms", bd.size))
}

fn tau_bounds(c: &mut Check, bd: Bounds) -> Result<String> {
    let top = need_n(bd)?;
    let mut count = 0;
    for (n, m, dom) in tau_domains(top, bd.size)? {
        count += dom.len();
        for (a, v) in dom.iter().zip(tau_values(c, n, m, &dom)) {
            match v {
                Some(TauValue::Ordinal(_)) => {
                    let ok = tau0_bound(a, n);
                    c.case(ok == Ok(true), || {
                        format!("tau_0({a}) = {} is not below w_{}", tau0(a, n).map(|o| o.to_string()).unwrap_or_default(), n + 2)
                    });
                }
                Some(TauValue::Tuple(t)) => {
                    // m = j + 1: the coefficient is below w_{n-j} when j < n and zero otherwise.
                    let j = m - 1;
                    let ok = if j < n {
                        *t.omega_coeff() < omega_tower(n - j, &CnfOrdinal::one())
                    } else {
                        t.omega_coeff().is_zero()
                    };
                    c.case(ok, || format!("tau_{m}({a}) = {t} at n={n} breaks the coefficient bound"));
                }
                None => {}
            }
        }
    }
    Ok(format!("T'_(n+1)[m], n<={top}, every m, lh<={}, {count} terms", bd.size))
}

fn btheta_right_child(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let dom = enumerate_btheta(BinSystem::T(n), bd.size);
    for a in &dom {
        if let Some(node) = a.as_node() {
            c.case(btheta_lt(&node.right, a), || format!("{} is not below {a}", node.right));
        }
    }
    Ok(format!("T_{n}, nodes<={}, {} terms", bd.size, dom.len()))
}

fn shift_down_suite(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let full: Vec<BinThetaTerm> = enumerate_btheta(BinSystem::T(n), bd.size)
        .into_iter()
        .filter(|a| k_set(0, a).is_empty())
        .collect();
    let total = full.len();
    let mut shifted = Vec::with_capacity(total);
    for a in &full {
        let s = c.result(shift_down(a), || format!("shifting {a}")).unwrap_or_default();
        for i in 0..n.saturating_sub(1) {
            let lhs: HashSet<BinThetaTerm> = k_set(i + 1, a).iter().map(|x| shift_down(x).unwrap_or_default()).collect();
            let rhs: HashSet<BinThetaTerm> = k_set(i, &s).into_iter().collect();
            c.case(lhs == rhs, || format!("K_{}({a}) shifted differs from K_{i}({s})", i + 1));
        }
        shifted.push(s);
    }
    let pairs: Vec<(BinThetaTerm, BinThetaTerm)> = thin(full.into_iter().zip(shifted).collect(), PAIR_CAP);
    let (dom, img): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    strictly_monotone(c, &dom, &img, btheta_compare, btheta_compare);
    Ok(format!("T_{n} without th0, nodes<={}, {}", bd.size, thinned_note(total, dom.len())))
}

fn o_monotone(c: &mut Check, bd: Bounds) -> Result<String> {
    let top = need_n(bd)?;
    let mut parts = Vec::new();
    for n in 1..=top {
        let dom = enumerate_btheta(BinSystem::Ot0(n), bd.size);
        let img: Vec<LeveledOrdValue> = dom
            .iter()
            .map(|a| c.result(o_value(a, n), || format!("o_{n}({a})")).unwrap_or(LeveledOrdValue::zero(2 * n - 1)))
            .collect();
        strictly_monotone(c, &dom, &img, btheta_compare, |x, y| {
            x.try_cmp(y).unwrap_or(Ordering::Equal)
        });
        parts.push(format!("OT_{n}[0]: {}", dom.len()));
    }
    Ok(format!("nodes<={}, {}", bd.size, parts.join(", ")))
}

fn f_embed_monotone(c: &mut Check, bd: Bounds) -> Result<String> {
    let n = need_n(bd)?;
    let dom = enumerate_seqs(n, bd.size, SeqFamily { bar: true, first_at_most: None });
    let mut img = Vec::with_capacity(dom.len());
    for s in &dom {
        let x = c.result(embed_seq(s), || format!("f({s})")).unwrap_or_default();
        c.case(x.is_member(BinSystem::Ot(n)), || format!("f({s}) = {x} is outside OT_{n}"));
        img.push(x);
    }
    all_distinct(c, &img);
    for (s, x) in dom.iter().zip(&img) {
        for (t, y) in dom.iter().zip(&img) {
            if gap_leq(s, t, GapMode::Strong) {
                c.case(btheta_compare(x, y) != Ordering::Greater, || {
                    format!("{s} <=s {t} but f gives {x} > {y}")
                });
            }
        }
    }
    Ok(format!("S̄_{n}, length<={}, {} sequences", bd.size, dom.len()))
}

fn f_hat_suite(c: &mut Check, bd: Bounds) -> Result<String> {
    let dom = enumerate_cnf(bd.size);
    let img: Vec<CnfOrdinal> = dom.iter().map(f_hat).collect();
    strictly_monotone(c, &dom, &img, cnf_compare, cnf_compare);
    for a in &dom {
        let Some(lead) = a.leading_exponent() else {
            continue;
        };
        let lo = CnfOrdinal::omega_pow(lead.clone());
        let hi = CnfOrdinal::omega_pow(lead.succ());
        let f = f_hat(a);
        c.case(lo <= f && f < hi, || format!("f({a}) = {f} is outside [{lo}, {hi})"));
    }
    for a1 in &dom {
        let w = CnfOrdinal::omega_pow(a1.clone());
        for a2 in &dom {
            if w.add(a2) == *a2 {
                let lhs = w.add(&f_hat(a1)).add(&f_hat(a2));
                c.case(lhs == f_hat(a2), || {
                    format!("w^({a1}) + f({a1}) + f({a2}) = {lhs}, not f({a2})")
                });
            }
        }
    }
    Ok(format!("nodes<={}, {} ordinals", bd.size, dom.len()))
}

fn cnf_arith(c: &mut Check, bd: Bounds) -> Result<String> {
    let dom = enumerate_cnf(bd.size);
    let (zero, one) = (CnfOrdinal::zero(), CnfOrdinal::one());
    for a in &dom {
        c.case(a.nat_sum(&zero) == *a && a.nat_prod(&one) == *a, || format!("identities fail at {a}"));
        for b in &dom {
            c.case(a.nat_sum(b) == b.nat_sum(a), || format!("{a} (+) {b} is not commutative"));
            c.case(a.nat_prod(b) == b.nat_prod(a), || format!("{a} (x) {b} is not commutative"));
            for d in &dom {
                if b < d {
                    c.case(a.add(b) < a.add(d), || format!("{a} + {b} is not below {a} + {d}"));
                }
            }
        }
    }
    Ok(format!("nodes<={}, {} ordinals", bd.size, dom.len()))
}
