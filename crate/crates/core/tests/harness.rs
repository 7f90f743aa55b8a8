use ordgap_core::gapseq::SeqFamily;
use ordgap_core::harness::{
    check_suite, check_suite_default, enumerate, Bounds, EnumSpec, SuiteReport, System, Term,
    SUITES,
};
use ordgap_core::{BinSystem, Error, ThetaSystem};

fn strings(spec: EnumSpec) -> Vec<String> {
    enumerate(&spec).unwrap().iter().map(|t| t.to_string()).collect()
}

#[test]
fn small_enumerations() {
    let t1 = strings(EnumSpec {
        system: System::Theta(ThetaSystem::t_n(1)),
        size: 2,
    });
    assert_eq!(t1, ["0", "v0 0", "v0 v0 0"]);
    let s3 = strings(EnumSpec {
        system: System::GapSeq {
            n: 3,
            family: SeqFamily {
                bar: true,
                first_at_most: None,
            },
        },
        size: 1,
    });
    assert_eq!(s3, ["ε", "0", "1", "2"]);
}

/// Sequences where each step goes up by at most one, counted by their last label.
fn count_sbar(n: usize, max_len: usize) -> u64 {
    let mut total = 1;
    let mut ends = vec![1u64; n];
    for _ in 0..max_len {
        total += ends.iter().sum::<u64>();
        let mut next = vec![0u64; n];
        for (last, &c) in ends.iter().enumerate() {
            for slot in next.iter_mut().take((last + 2).min(n)) {
                *slot += c;
            }
        }
        ends = next;
    }
    total
}

#[test]
fn unary_terms_and_sbar_sequences_are_equinumerous() {
    for n in 1..=3 {
        for len in 1..=6 {
            let terms = enumerate(&EnumSpec {
                system: System::Theta(ThetaSystem::t_n(n)),
                size: len,
            })
            .unwrap();
            let seqs = enumerate(&EnumSpec {
                system: System::GapSeq {
                    n,
                    family: SeqFamily {
                        bar: true,
                        first_at_most: None,
                    },
                },
                size: len,
            })
            .unwrap();
            assert_eq!(terms.len(), seqs.len(), "n={n}, len={len}");
            assert_eq!(terms.len() as u64, count_sbar(n, len), "n={n}, len={len}");
        }
    }
}

#[test]
fn enumeration_is_closed_under_subterms() {
    let terms = enumerate(&EnumSpec {
        system: System::Theta(ThetaSystem::t_n(3)),
        size: 5,
    })
    .unwrap();
    for t in &terms {
        let Term::Theta(a) = t else { unreachable!() };
        let mut s = a.clone();
        while let Some(arg) = s.arg() {
            assert!(terms.contains(&Term::Theta(arg.clone())), "{arg}");
            s = arg;
        }
    }
    let bin = enumerate(&EnumSpec {
        system: System::BinTheta(BinSystem::Ot(3)),
        size: 5,
    })
    .unwrap();
    for t in &bin {
        let Term::BinTheta(a) = t else { unreachable!() };
        if let Some(node) = a.as_node() {
            for child in [&node.left, &node.right] {
                assert!(bin.contains(&Term::BinTheta(child.clone())), "{child}");
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic_and_duplicate_free() {
    for system in [
        System::Cnf,
        System::Veblen { subscripts: 3 },
        System::Pi { n: 3 },
        System::Theta(ThetaSystem::t_prime_m(3, 1)),
        System::GapSeq {
            n: 2,
            family: SeqFamily {
                bar: false,
                first_at_most: Some(0),
            },
        },
        System::BinTheta(BinSystem::T(2)),
    ] {
        let spec = EnumSpec { system, size: 4 };
        let a = strings(spec);
        assert_eq!(a, strings(spec));
        let mut sorted = a.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), a.len(), "{system}");
    }
}

#[test]
fn unbounded_requests_are_rejected() {
    let unbounded = EnumSpec {
        system: System::Theta(ThetaSystem::t()),
        size: 3,
    };
    assert!(matches!(enumerate(&unbounded), Err(Error::InvalidSpec(_))));
    let empty = EnumSpec {
        system: System::Pi { n: 2 },
        size: 0,
    };
    assert!(matches!(enumerate(&empty), Err(Error::InvalidSpec(_))));
    let no_alphabet = EnumSpec {
        system: System::BinTheta(BinSystem::Ot(0)),
        size: 2,
    };
    assert!(enumerate(&no_alphabet).is_err());
}

#[test]
fn named_suite_runs() {
    for (name, n, size) in [("unlhd-subset-lt", 3, 5), ("e-iso", 3, 5), ("tau-monotone", 2, 6)] {
        let r = check_suite(name, Bounds { n, size }).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.cases > 0);
        assert!(r.counterexamples.is_empty());
    }
}

#[test]
fn unknown_suites_are_errors() {
    assert!(matches!(
        check_suite("no-such-suite", Bounds { n: 1, size: 1 }),
        Err(Error::InvalidSpec(_))
    ));
    assert!(check_suite_default("nope").is_err());
}

#[test]
fn every_listed_suite_runs_at_small_bounds() {
    for s in SUITES {
        let bounds = Bounds {
            n: s.default.n.min(2),
            size: s.default.size.min(3),
        };
        let r = check_suite(s.name, bounds).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn reports_are_reproducible_json_lines() {
    let bounds = Bounds { n: 2, size: 4 };
    let a = check_suite("gap-orders", bounds).unwrap();
    let b = check_suite("gap-orders", bounds).unwrap();
    assert_eq!(a.to_json_line(false), b.to_json_line(false));
    let line = a.to_json_line(true);
    assert!(!line.contains('\n'));
    let back: SuiteReport = serde_json::from_str(&line).unwrap();
    assert_eq!(back, a);
    let v: serde_json::Value = serde_json::from_str(&line).unwrap();
    for key in ["suite", "bound", "cases", "failures", "duration_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}
