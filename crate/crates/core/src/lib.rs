//! Addition-free ordinal notation systems, the gap-embeddability orders on finite
//! sequences, and the order-preserving maps between them.
//!
//! Every system is a plain value type with a total comparison, a text syntax
//! (`Display`/`FromStr`) and a bounded enumerator. The [`harness`] module checks the
//! order-theoretic properties that tie the systems together by exhaustive search.

pub mod cnf;
pub mod error;
pub mod gapseq;
pub mod harness;
pub mod maps;
pub mod pi;
pub mod theta1;
pub mod theta2;
pub mod veblen;

mod syntax;

pub use cnf::{CnfOrdinal, CnfTerm};
pub use error::{Error, Result};
pub use gapseq::{GapMode, GapSequence};
pub use maps::{OmegaTuple, TauValue};
pub use pi::PiTerm;
pub use theta1::{ThetaSystem, ThetaTerm};
pub use theta2::{BinSystem, BinThetaTerm};
pub use veblen::{LeveledOrdValue, VeblenTerm};
