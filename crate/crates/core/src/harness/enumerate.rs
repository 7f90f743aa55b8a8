use std::fmt;

use crate::cnf::{enumerate_cnf, CnfOrdinal};
use crate::error::{Error, Result};
use crate::gapseq::{enumerate_seqs, GapSequence, SeqFamily};
use crate::pi::{enumerate_pi, PiTerm};
use crate::theta1::{enumerate_theta, ThetaSystem, ThetaTerm};
use crate::theta2::{enumerate_btheta, BinSystem, BinThetaTerm};
use crate::veblen::{enumerate_veblen, VeblenTerm};

/// A term system together with the parameters that make it finite once a size bound is
/// given.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum System {
    /// Cantor normal forms; size counts `ω`-nodes.
    Cnf,
    /// `φ`-terms with natural subscripts below `subscripts`; size counts `φ`-nodes.
    Veblen { subscripts: usize },
    /// `π(n)`; size counts `D`-nodes.
    Pi { n: usize },
    /// A unary system; size is `lh`.
    Theta(ThetaSystem),
    /// Sequences over `{0, …, n-1}`; size is length.
    GapSeq { n: usize, family: SeqFamily },
    /// A binary system; size counts `θ̄`-nodes.
    BinTheta(BinSystem),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EnumSpec {
    pub system: System,
    pub size: usize,
}

/// One enumerated term, of whichever system was asked for.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Term {
    Cnf(CnfOrdinal),
    Veblen(VeblenTerm<usize>),
    Pi(PiTerm),
    Theta(ThetaTerm),
    Seq(GapSequence),
    BinTheta(BinThetaTerm),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Cnf(t) => t.fmt(f),
            Term::Veblen(t) => t.fmt(f),
            Term::Pi(t) => t.fmt(f),
            Term::Theta(t) => t.fmt(f),
            Term::Seq(t) => t.fmt(f),
            Term::BinTheta(t) => t.fmt(f),
        }
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            System::Cnf => f.write_str("cnf"),
            System::Veblen { subscripts } => write!(f, "veblen(sub<{subscripts})"),
            System::Pi { n } => write!(f, "pi({n})"),
            System::Theta(s) => s.fmt(f),
            System::GapSeq { n, family } => {
                f.write_str(if family.bar { "S̄_" } else { "S_" })?;
                write!(f, "{n}")?;
                match family.first_at_most {
                    Some(i) => write!(f, "[{i}]"),
                    None => Ok(()),
                }
            }
            System::BinTheta(s) => write!(f, "btheta {s}"),
        }
    }
}

/// Every term of the system within the size bound, each once, in a fixed order.
///
/// Requests without an index bound, or with a zero bound, are rejected.
pub fn enumerate(spec: &EnumSpec) -> Result<Vec<Term>> {
    if spec.size == 0 {
        return Err(Error::InvalidSpec("the size bound must be positive".into()));
    }
    let positive = |n: usize, what: &str| {
        if n == 0 {
            Err(Error::InvalidSpec(format!("{what} must be positive")))
        } else {
            Ok(())
        }
    };
    Ok(match spec.system {
        System::Cnf => enumerate_cnf(spec.size).into_iter().map(Term::Cnf).collect(),
        System::Veblen { subscripts } => {
            positive(subscripts, "the subscript bound")?;
            let subs: Vec<usize> = (0..subscripts).collect();
            enumerate_veblen(&subs, spec.size)
                .into_iter()
                .map(Term::Veblen)
                .collect()
        }
        System::Pi { n } => {
            positive(n, "n")?;
            enumerate_pi(n, spec.size).into_iter().map(Term::Pi).collect()
        }
        System::Theta(sys) => {
            let Some(n) = sys.bound else {
                return Err(Error::InvalidSpec(
                    "unary systems need an index bound to be finite".into(),
                ));
            };
            positive(n, "n")?;
            enumerate_theta(&sys, spec.size)?
                .into_iter()
                .map(Term::Theta)
                .collect()
        }
        System::GapSeq { n, family } => {
            positive(n, "the alphabet size")?;
            enumerate_seqs(n, spec.size, family)
                .into_iter()
                .map(Term::Seq)
                .collect()
        }
        System::BinTheta(sys) => {
            let (BinSystem::T(n) | BinSystem::Ot(n) | BinSystem::Ot0(n)) = sys;
            positive(n, "n")?;
            enumerate_btheta(sys, spec.size)
                .into_iter()
                .map(Term::BinTheta)
                .collect()
        }
    })
}
