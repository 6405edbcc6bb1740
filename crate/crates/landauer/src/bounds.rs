//! Closed-form entropy lower bounds for the classic problems.
//!
//! Each problem gets three numbers: the entropy-reduction bound in bits (the
//! separation argument), the pair (S1, S2) from the explicit problem-space
//! encoding (whose difference must equal the bound), and — for the three
//! comparison problems — the exact decision-model bound as an independent
//! cross-check. The entropy bound uses the full placement count (N^N for
//! sorting), which strictly exceeds the permutation count N!; both numbers
//! are always reported so the finite-N gap stays visible.

use thiserror::Error;

use crate::entropy::EntropyBits;

#[derive(Debug, Error, PartialEq)]
pub enum BoundError {
    #[error("{field} must be at least 1")]
    ZeroSize { field: &'static str },
    #[error("{operation} is not defined for problem kind {kind}")]
    UnsupportedKind { operation: &'static str, kind: &'static str },
}

/// A problem instance family with its size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemSpec {
    /// Max of `count` unordered `elem_bits`-bit numbers.
    MaxOfN { count: u64, elem_bits: u32 },
    /// Sorting `count` `elem_bits`-bit numbers.
    Sort { count: u64, elem_bits: u32 },
    /// Searching `count` sorted `elem_bits`-bit numbers for a given key.
    OrderedSearch { count: u64, elem_bits: u32 },
    /// Multiplying two dim×dim matrices of `elem_bits`-bit elements.
    MatMul { dim: u64, elem_bits: u32 },
    /// Adding two `operand_bits`-bit numbers.
    Add { operand_bits: u32 },
    /// Multiplying two `operand_bits`-bit numbers.
    Mul { operand_bits: u32 },
    /// Comparing two `operand_bits`-bit numbers.
    Compare { operand_bits: u32 },
}

impl ProblemSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ProblemSpec::MaxOfN { .. } => "max",
            ProblemSpec::Sort { .. } => "sort",
            ProblemSpec::OrderedSearch { .. } => "search",
            ProblemSpec::MatMul { .. } => "matmul",
            ProblemSpec::Add { .. } => "add",
            ProblemSpec::Mul { .. } => "mul",
            ProblemSpec::Compare { .. } => "compare",
        }
    }

    pub fn validate(&self) -> Result<(), BoundError> {
        let check = |value: u64, field: &'static str| {
            if value == 0 {
                Err(BoundError::ZeroSize { field })
            } else {
                Ok(())
            }
        };
        match *self {
            ProblemSpec::MaxOfN { count, elem_bits }
            | ProblemSpec::Sort { count, elem_bits }
            | ProblemSpec::OrderedSearch { count, elem_bits } => {
                check(count, "count")?;
                check(elem_bits as u64, "elem_bits")
            }
            ProblemSpec::MatMul { dim, elem_bits } => {
                check(dim, "dim")?;
                check(elem_bits as u64, "elem_bits")
            }
            ProblemSpec::Add { operand_bits }
            | ProblemSpec::Mul { operand_bits }
            | ProblemSpec::Compare { operand_bits } => check(operand_bits as u64, "operand_bits"),
        }
    }

    fn unsupported(&self, operation: &'static str) -> BoundError {
        BoundError::UnsupportedKind { operation, kind: self.kind_name() }
    }
}

/// Entropy-reduction lower bound in bits: N for max-finding, N·log₂N for
/// sorting, log₂N for ordered search, n²(log₂n + 2m) for matrix
/// multiplication, n+1 / 2n / 1 for add / mul / compare.
pub fn bound_bits(p: &ProblemSpec) -> Result<EntropyBits, BoundError> {
    p.validate()?;
    let bits = match *p {
        ProblemSpec::MaxOfN { count, .. } => count as f64,
        ProblemSpec::Sort { count, .. } => count as f64 * (count as f64).log2(),
        ProblemSpec::OrderedSearch { count, .. } => (count as f64).log2(),
        ProblemSpec::MatMul { dim, elem_bits } => {
            let n = dim as f64;
            n * n * (n.log2() + 2.0 * elem_bits as f64)
        }
        ProblemSpec::Add { operand_bits } => operand_bits as f64 + 1.0,
        ProblemSpec::Mul { operand_bits } => 2.0 * operand_bits as f64,
        ProblemSpec::Compare { .. } => 1.0,
    };
    Ok(EntropyBits::from_computed(bits))
}

/// How the suffix (output region) of a problem-space encoding is constrained
/// once the problem is solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuffixConstraint {
    /// N flag bits of which exactly one is set.
    OneHot,
    /// N indices of log₂N bits forming a permutation.
    PermutationIndex,
    /// A single log₂N-bit position.
    PositionIndex,
}

/// Bit layout of an explicit problem-space encoding: an input region of
/// `prefix_bits` followed by an output region of `suffix_bits`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EncodingLayout {
    pub prefix_bits: f64,
    pub suffix_bits: f64,
    pub constraint: SuffixConstraint,
}

impl EncodingLayout {
    /// Entropy of the full space: every bit free.
    pub fn s1(&self) -> EntropyBits {
        EntropyBits::from_computed(self.prefix_bits + self.suffix_bits)
    }

    /// Entropy once the suffix is determined by the prefix.
    pub fn s2(&self) -> EntropyBits {
        EntropyBits::from_computed(self.prefix_bits)
    }
}

/// Explicit problem-space layout for the three comparison problems.
pub fn encoding_layout(p: &ProblemSpec) -> Result<EncodingLayout, BoundError> {
    p.validate()?;
    match *p {
        ProblemSpec::MaxOfN { count, elem_bits } => Ok(EncodingLayout {
            prefix_bits: (count * elem_bits as u64) as f64,
            suffix_bits: count as f64,
            constraint: SuffixConstraint::OneHot,
        }),
        ProblemSpec::Sort { count, elem_bits } => Ok(EncodingLayout {
            prefix_bits: (count * elem_bits as u64) as f64,
            suffix_bits: count as f64 * (count as f64).log2(),
            constraint: SuffixConstraint::PermutationIndex,
        }),
        ProblemSpec::OrderedSearch { count, elem_bits } => Ok(EncodingLayout {
            // N sorted numbers plus the key to search for
            prefix_bits: ((count + 1) * elem_bits as u64) as f64,
            suffix_bits: (count as f64).log2(),
            constraint: SuffixConstraint::PositionIndex,
        }),
        _ => Err(p.unsupported("encoding_layout")),
    }
}

/// The (S1, S2) entropy pair of the explicit encoding. S1 − S2 equals
/// [`bound_bits`].
pub fn encoding_entropy(p: &ProblemSpec) -> Result<(EntropyBits, EntropyBits), BoundError> {
    let layout = encoding_layout(p)?;
    Ok((layout.s1(), layout.s2()))
}

/// Time-step lower bound: the entropy bound divided by the one bit a
/// comparison step can pay for.
pub fn time_lower_bound_steps(p: &ProblemSpec) -> Result<f64, BoundError> {
    match p {
        ProblemSpec::MaxOfN { .. }
        | ProblemSpec::Sort { .. }
        | ProblemSpec::OrderedSearch { .. } => Ok(bound_bits(p)?.value() / 1.0),
        _ => Err(p.unsupported("time_lower_bound_steps")),
    }
}

/// Exact comparison-model lower bound: N−1 for max-finding (adversary
/// argument), ⌈log₂N!⌉ for sorting (decision tree), ⌈log₂(N+1)⌉ for ordered
/// search.
pub fn classical_comparison_bound(p: &ProblemSpec) -> Result<u64, BoundError> {
    p.validate()?;
    match *p {
        ProblemSpec::MaxOfN { count, .. } => Ok(count - 1),
        ProblemSpec::Sort { count, .. } => Ok(ceil_log2_factorial(count)),
        ProblemSpec::OrderedSearch { count, .. } => Ok(u64::from(ceil_log2(count + 1))),
        _ => Err(p.unsupported("classical_comparison_bound")),
    }
}

/// Per-iteration energy capacity ratio available to an unstructured search
/// over N items that finishes in √N iterations.
pub fn grover_energy_ratio(n: u64) -> Result<f64, BoundError> {
    if n == 0 {
        return Err(BoundError::ZeroSize { field: "n" });
    }
    Ok((n as f64).sqrt())
}

/// Both bounds side by side, plus the time-step quotient where defined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub entropy_bound_bits: EntropyBits,
    pub classical_bound_ops: Option<u64>,
    pub time_steps_lower: Option<f64>,
}

impl BoundReport {
    pub fn for_problem(p: &ProblemSpec) -> Result<Self, BoundError> {
        let entropy_bound_bits = bound_bits(p)?;
        let (classical_bound_ops, time_steps_lower) = match p {
            ProblemSpec::MaxOfN { .. }
            | ProblemSpec::Sort { .. }
            | ProblemSpec::OrderedSearch { .. } => {
                (Some(classical_comparison_bound(p)?), Some(time_lower_bound_steps(p)?))
            }
            _ => (None, None),
        };
        Ok(BoundReport { entropy_bound_bits, classical_bound_ops, time_steps_lower })
    }
}

/// ⌈log₂ x⌉ for x ≥ 1.
pub(crate) fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else if x.is_power_of_two() {
        x.ilog2()
    } else {
        x.ilog2() + 1
    }
}

/// ⌈log₂ n!⌉, exact. Uses integer arithmetic while n! fits in a u64 and a
/// compensated log sum (snapped to integers within 1e-6) beyond that; the
/// fractional part of log₂n! never sits that close to an integer for the
/// sizes in play.
fn ceil_log2_factorial(n: u64) -> u64 {
    if n <= 20 {
        let factorial: u64 = (2..=n).product();
        return u64::from(ceil_log2(factorial.max(1)));
    }
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for i in 2..=n {
        let v = (i as f64).log2();
        let y = v - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    if (sum - sum.round()).abs() < 1e-6 {
        sum.round() as u64
    } else {
        sum.ceil() as u64
    }
}
