use std::cmp::Ordering;
use std::sync::OnceLock;

use proptest::prelude::*;

use ordgap_core::gapseq::{gap_leq, h_split, h_unsplit, seq_of_term};
use ordgap_core::harness::oracle::gap_leq_brute;
use ordgap_core::maps::{chi, chi_std, psi_prime};
use ordgap_core::pi::pi_validate;
use ordgap_core::theta1::{gap_below, k_coeff, substitute, theta_compare, theta_lt};
use ordgap_core::theta2::{btheta_compare, btheta_lt, enumerate_btheta};
use ordgap_core::{
    BinSystem, BinThetaTerm, CnfOrdinal, GapMode, GapSequence, PiTerm, ThetaTerm, VeblenTerm,
};

fn cnf() -> impl Strategy<Value = CnfOrdinal> {
    let leaf = (0u32..4).prop_map(CnfOrdinal::nat);
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(CnfOrdinal::omega_pow),
            (inner.clone(), inner).prop_map(|(a, b)| a.add(&b)),
        ]
    })
}

/// Any word becomes a wellformed one by capping each step up at one.
fn theta_word(n: usize, max_len: usize) -> impl Strategy<Value = ThetaTerm> {
    prop::collection::vec(0..n, 0..=max_len).prop_map(|mut w| {
        for k in 1..w.len() {
            w[k] = w[k].min(w[k - 1] + 1);
        }
        ThetaTerm::from_indices(w).unwrap()
    })
}

fn theta_below_omega1(max_len: usize) -> impl Strategy<Value = ThetaTerm> {
    theta_word(3, max_len).prop_map(|a| {
        if a.level_at_most(0) {
            a
        } else {
            ThetaTerm::theta(0, &a).unwrap_or_default()
        }
    })
}

/// Prepends each drawn index whenever the result stays wellformed.
fn pi_term(n: usize, max_len: usize) -> impl Strategy<Value = PiTerm> {
    prop::collection::vec(0..n, 0..=max_len).prop_map(|w| {
        w.iter()
            .fold(PiTerm::zero(), |acc, &i| PiTerm::d(i, &acc).unwrap_or(acc))
    })
}

fn seq(n: usize, max_len: usize) -> impl Strategy<Value = GapSequence> {
    prop::collection::vec(0..n, 0..=max_len).prop_map(move |w| GapSequence::new(w, n).unwrap())
}

fn btheta_pool() -> &'static [BinThetaTerm] {
    static POOL: OnceLock<Vec<BinThetaTerm>> = OnceLock::new();
    POOL.get_or_init(|| enumerate_btheta(BinSystem::T(3), 5))
}

fn btheta() -> impl Strategy<Value = BinThetaTerm> {
    (0..btheta_pool().len()).prop_map(|k| btheta_pool()[k].clone())
}

fn veblen(max_sub: usize, max_nodes: usize) -> impl Strategy<Value = VeblenTerm<usize>> {
    prop::collection::vec(0..max_sub, 0..=max_nodes).prop_map(VeblenTerm::from_subscripts)
}

proptest! {
    #[test]
    fn natural_sum_and_product_laws(a in cnf(), b in cnf(), c in cnf()) {
        prop_assert_eq!(a.nat_sum(&b), b.nat_sum(&a));
        prop_assert_eq!(a.nat_prod(&b), b.nat_prod(&a));
        prop_assert_eq!(a.nat_sum(&b).nat_sum(&c), a.nat_sum(&b.nat_sum(&c)));
        prop_assert_eq!(a.nat_sum(&CnfOrdinal::zero()), a.clone());
        prop_assert_eq!(a.nat_prod(&CnfOrdinal::one()), a.clone());
        prop_assert!(a.nat_sum(&b) >= a.add(&b) && a.nat_sum(&b) >= b.add(&a));
    }

    #[test]
    fn ordinal_addition(a in cnf(), b in cnf(), c in cnf()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        if b < c {
            prop_assert!(a.add(&b) < a.add(&c));
        }
        prop_assert!(a.add(&b) >= b);
        prop_assert!(a < a.succ());
    }

    #[test]
    fn cnf_text_round_trip(a in cnf()) {
        prop_assert_eq!(a.to_string().parse::<CnfOrdinal>().unwrap(), a);
    }

    #[test]
    fn theta_order_is_consistent(a in theta_word(4, 9), b in theta_word(4, 9)) {
        let o = theta_compare(&a, &b);
        prop_assert_eq!(o, theta_compare(&b, &a).reverse());
        prop_assert_eq!(theta_lt(&a, &b), o == Ordering::Less);
        prop_assert_eq!(o == Ordering::Equal, a == b);
    }

    #[test]
    fn theta_text_round_trip(a in theta_word(5, 10)) {
        prop_assert_eq!(a.to_string().parse::<ThetaTerm>().unwrap(), a);
    }

    #[test]
    fn gap_below_is_strong_embedding_and_below(a in theta_word(3, 8), b in theta_word(3, 8)) {
        let below = gap_below(&a, &b);
        let (s, t) = (seq_of_term(&a, 3).unwrap(), seq_of_term(&b, 3).unwrap());
        prop_assert_eq!(below, gap_leq(&s, &t, GapMode::Strong));
        if below {
            prop_assert!(a <= b);
        }
    }

    #[test]
    fn coefficients_and_substitution(
        a in theta_word(3, 8),
        b in theta_word(3, 8),
        c in theta_below_omega1(6),
        i in 0usize..4,
    ) {
        prop_assert!(k_coeff(i, &a) <= a);
        let (ac, bc) = (substitute(&a, &c).unwrap(), substitute(&b, &c).unwrap());
        prop_assert!(c <= ac);
        prop_assert_eq!(c == ac, a.is_zero());
        if a < b {
            prop_assert!(ac < bc);
        }
        prop_assert_eq!(substitute(&k_coeff(i, &a), &c).unwrap(), k_coeff(i, &ac));
    }

    #[test]
    fn psi_prime_is_monotone(a in theta_word(3, 8), b in theta_word(3, 8)) {
        let (x, y) = (psi_prime(&a, 3).unwrap(), psi_prime(&b, 3).unwrap());
        prop_assert_eq!(theta_compare(&a, &b), theta_compare(&x, &y));
    }

    #[test]
    fn chi_reflects_the_veblen_order(a in veblen(6, 7), b in veblen(6, 7)) {
        prop_assert_eq!(a.cmp(&b), theta_compare(&chi(&a), &chi(&b)));
    }

    #[test]
    fn chi_std_is_monotone(a in cnf(), b in cnf()) {
        let limit = CnfOrdinal::omega_pow(CnfOrdinal::omega_pow(CnfOrdinal::omega()));
        prop_assume!(a < limit && b < limit);
        let (x, y) = (chi_std(&a).unwrap(), chi_std(&b).unwrap());
        prop_assert_eq!(a.cmp(&b), theta_compare(&x, &y));
    }

    #[test]
    fn veblen_text_round_trip(a in veblen(12, 6)) {
        prop_assert_eq!(a.to_string().parse::<VeblenTerm<usize>>().unwrap(), a);
    }

    #[test]
    fn pi_terms(a in pi_term(4, 10), b in pi_term(4, 10)) {
        prop_assert!(pi_validate(a.indices(), Some(4)));
        let mut s = a.clone();
        while let Some(arg) = s.arg() {
            prop_assert!(pi_validate(arg.indices(), Some(4)));
            s = arg;
        }
        prop_assert_eq!(a.to_string().parse::<PiTerm>().unwrap(), a.clone());
        if b.is_pi0() && a < b {
            prop_assert!(a.is_pi0());
        }
    }

    #[test]
    fn gap_dp_matches_search(s in seq(3, 9), t in seq(3, 11)) {
        for mode in [GapMode::Weak, GapMode::Strong] {
            prop_assert_eq!(gap_leq(&s, &t, mode), gap_leq_brute(s.labels(), t.labels(), mode));
        }
        if gap_leq(&s, &t, GapMode::Strong) {
            prop_assert!(gap_leq(&s, &t, GapMode::Weak));
        }
        prop_assert!(gap_leq(&s, &s, GapMode::Strong));
    }

    #[test]
    fn h_split_round_trip(s in seq(4, 12)) {
        let (head, parts) = h_split(&s).unwrap();
        prop_assert_eq!(h_unsplit(&head, &parts), s.clone());
        prop_assert_eq!(GapSequence::parse(&s.to_string(), 4).unwrap(), s);
    }

    #[test]
    fn binary_order(a in btheta(), b in btheta()) {
        prop_assert_eq!(btheta_compare(&a, &b), btheta_compare(&b, &a).reverse());
        prop_assert!(!(btheta_lt(&a, &b) && btheta_lt(&b, &a)));
        if let Some(node) = a.as_node() {
            prop_assert!(btheta_lt(&node.right, &a));
        }
        prop_assert_eq!(a.to_string().parse::<BinThetaTerm>().unwrap(), a);
    }
}
