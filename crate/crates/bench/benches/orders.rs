use criterion::{black_box, criterion_group, criterion_main, Criterion};

use ordgap_core::gapseq::{enumerate_seqs, gap_leq, SeqFamily};
use ordgap_core::harness::oracle::gap_leq_brute;
use ordgap_core::maps::tau;
use ordgap_core::theta1::{enumerate_theta, theta_compare, theta_lt};
use ordgap_core::theta2::{btheta_compare, enumerate_btheta};
use ordgap_core::{BinSystem, GapMode, ThetaSystem};

fn theta(c: &mut Criterion) {
    let terms = enumerate_theta(&ThetaSystem::t_n(3), 5).unwrap();
    c.bench_function("theta_compare T_3 lh<=5 all pairs", |b| {
        b.iter(|| {
            for x in &terms {
                for y in &terms {
                    black_box(theta_compare(x, y));
                }
            }
        })
    });
    c.bench_function("theta_lt T_3 lh<=5 all pairs", |b| {
        b.iter(|| {
            for x in &terms {
                for y in &terms {
                    black_box(theta_lt(x, y));
                }
            }
        })
    });
}

fn gap(c: &mut Criterion) {
    let seqs = enumerate_seqs(3, 5, SeqFamily::default());
    let seqs: Vec<_> = seqs.iter().step_by(7).collect();
    c.bench_function("gap_leq strong, n=3 len<=5 sample", |b| {
        b.iter(|| {
            for s in &seqs {
                for t in &seqs {
                    black_box(gap_leq(s, t, GapMode::Strong));
                }
            }
        })
    });
    c.bench_function("brute embedding, same sample", |b| {
        b.iter(|| {
            for s in &seqs {
                for t in &seqs {
                    black_box(gap_leq_brute(s.labels(), t.labels(), GapMode::Strong));
                }
            }
        })
    });
}

fn tau_map(c: &mut Criterion) {
    let terms = enumerate_theta(&ThetaSystem::t_prime_m(3, 0), 6).unwrap();
    c.bench_function("tau_0 over T'_3[0] lh<=6", |b| {
        b.iter(|| {
            for a in &terms {
                black_box(tau(0, a, 2).unwrap());
            }
        })
    });
}

fn btheta(c: &mut Criterion) {
    let terms = enumerate_btheta(BinSystem::T(2), 4);
    c.bench_function("btheta_compare T_2 size<=4 all pairs", |b| {
        b.iter(|| {
            for x in &terms {
                for y in &terms {
                    black_box(btheta_compare(x, y));
                }
            }
        })
    });
}

criterion_group!(benches, theta, gap, tau_map, btheta);
criterion_main!(benches);
