//! Registry of finite-field hypergeometric identities and a verifier.
//!
//! Each [`IdentityDescriptor`] names its parameter slots (characters, then
//! field points), the domain constraints under which it is claimed, and two
//! evaluators. The engine enumerates or samples assignments, checks
//! `lhs == rhs` exactly in Z[ζ_(q-1)], and records every counterexample in a
//! form that can be replayed from the command line.
//!
//! Identities parameterized by a number of variables n are registered once and
//! instantiated at every n in their range; the n = 1 and n = 2 cases of a
//! general theorem are therefore checked without separate entries.

mod engine;
mod formulas;
mod report;

use std::fmt;

use serde::Serialize;

use crate::chars::{Char, Fq};
use crate::cyclo::CycInt;
use crate::error::{Error, Result};
use crate::field::Elem;

pub use engine::{replay, replay_descriptor, verify, verify_descriptor, Mode, ReplayOutcome, VerifyOptions};
pub use report::{BoundaryReport, Failure, ReportSet, TheoremReport, SCHEMA};

/// Default cap on the number of assignments in exhaustive mode.
pub const DEFAULT_CAP: u128 = 10_000_000;

/// Evaluates one side of an identity.
pub type Eval = fn(&Fq, &Assignment) -> Result<CycInt>;

/// Names of the character and point slots of an identity at a given n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Shape {
    pub chars: Vec<String>,
    pub points: Vec<String>,
}

/// Values for every slot of a [`Shape`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    /// Number of variables, or 0 for identities without one.
    pub n: usize,
    pub chars: Vec<Char>,
    pub points: Vec<Elem>,
}

impl Assignment {
    /// Builds an assignment from CLI-style integers, validating each value
    /// against `fq`.
    pub fn from_indices(fq: &Fq, n: usize, chars: &[u64], points: &[u64]) -> Result<Assignment> {
        Ok(Assignment {
            n,
            chars: chars
                .iter()
                .map(|&m| fq.char_checked(m))
                .collect::<Result<_>>()?,
            points: points
                .iter()
                .map(|&i| fq.field().elem(i))
                .collect::<Result<_>>()?,
        })
    }

    pub fn char_exponents(&self) -> Vec<u32> {
        self.chars.iter().map(|c| c.exponent()).collect()
    }

    pub fn point_indices(&self) -> Vec<u32> {
        self.points.iter().map(|x| x.index()).collect()
    }

    /// `A=1 B1=2 C=3 x1=4` style rendering against a shape.
    pub fn labelled(&self, shape: &Shape) -> String {
        let chars = shape
            .chars
            .iter()
            .zip(&self.chars)
            .map(|(name, c)| format!("{name}={}", c.exponent()));
        let points = shape
            .points
            .iter()
            .zip(&self.points)
            .map(|(name, x)| format!("{name}={}", x.index()));
        chars.chain(points).collect::<Vec<_>>().join(" ")
    }
}

/// One registered identity.
#[derive(Clone, Copy)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub summary: &'static str,
    /// Human-readable domain constraints, mirrored by `admits`.
    pub constraints: &'static [&'static str],
    /// Inclusive range of n, or `None` for identities without a variable count.
    pub n_range: Option<(usize, usize)>,
    pub shape: fn(usize) -> Shape,
    pub admits: fn(&Fq, &Assignment) -> bool,
    pub lhs: Eval,
    pub rhs: Eval,
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("n_range", &self.n_range)
            .finish()
    }
}

impl IdentityDescriptor {
    /// The values of n this identity is instantiated at.
    pub fn ns(&self) -> Vec<usize> {
        match self.n_range {
            None => vec![0],
            Some((lo, hi)) => (lo..=hi).collect(),
        }
    }

    pub fn allows_n(&self, n: usize) -> bool {
        match self.n_range {
            None => n == 0,
            Some((lo, hi)) => (lo..=hi).contains(&n),
        }
    }

    /// Serializable summary for listings.
    pub fn info(&self) -> DescriptorInfo {
        let n0 = self.n_range.map_or(0, |(lo, _)| lo);
        DescriptorInfo {
            id: self.id,
            summary: self.summary,
            constraints: self.constraints,
            n_range: self.n_range,
            shape: (self.shape)(n0),
        }
    }
}

/// JSON-friendly view of an [`IdentityDescriptor`].
#[derive(Debug, Clone, Serialize)]
pub struct DescriptorInfo {
    pub id: &'static str,
    pub summary: &'static str,
    pub constraints: &'static [&'static str],
    pub n_range: Option<(usize, usize)>,
    /// Slot names at the smallest admissible n.
    pub shape: Shape,
}

/// Every identity claimed to hold, in registry order.
pub fn list_identities() -> &'static [IdentityDescriptor] {
    formulas::REGISTRY
}

/// Identities in the form they are usually printed, where that form is known
/// to disagree with the θ-sums or the definition on part of the domain. They
/// are excluded from `all` and are expected to produce counterexamples.
pub fn errata() -> &'static [IdentityDescriptor] {
    formulas::ERRATA
}

/// A deliberately broken copy of `t2.1` (right side off by one), used to
/// check that the verifier can fail.
pub fn negative_control() -> IdentityDescriptor {
    formulas::NEGATIVE_CONTROL
}

/// Looks up an identity in the registry, the errata list, or the negative
/// control.
pub fn lookup(id: &str) -> Result<IdentityDescriptor> {
    list_identities()
        .iter()
        .chain(errata())
        .copied()
        .chain(std::iter::once(negative_control()))
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}
