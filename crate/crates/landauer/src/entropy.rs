//! Exact entropy computation over discrete microstate spaces.
//!
//! Entropies are carried in bits. Dense distributions are supported up to
//! 2^24 states; uniform distributions over larger spaces go through the
//! closed-form [`log2_states`] path instead. Summation is compensated
//! (Kahan) so wide distributions stay accurate to well under the 1e-9
//! tolerance used by equality assertions.

use thiserror::Error;

use crate::gate::TruthMap;

/// Boltzmann constant, exact 2019 SI value, in J/K.
pub const BOLTZMANN_J_PER_K: f64 = 1.380649e-23;

/// Cap on dense distribution size; larger spaces must use [`log2_states`].
pub const MAX_DENSE_STATES: usize = 1 << 24;

#[derive(Debug, Error, PartialEq)]
pub enum EntropyError {
    #[error("distribution must have at least one state")]
    Empty,
    #[error(
        "distribution has {states} states, dense cap is 2^24; use log2_states for uniform spaces"
    )]
    TooManyStates { states: usize },
    #[error("probability at state {index} is {value}, must be finite and nonnegative")]
    BadProbability { index: usize, value: f64 },
    #[error("state {state} out of range for {states} states")]
    StateOutOfRange { state: usize, states: usize },
    #[error("probabilities sum to {sum}, expected 1 within 1e-12")]
    NotNormalized { sum: f64 },
    #[error("state count must be at least 1")]
    ZeroStates,
    #[error("entropy must be finite and nonnegative, got {0}")]
    NegativeBits(f64),
    #[error("temperature must be finite and positive, got {0} K")]
    BadTemperature(f64),
    #[error("distribution has {found} states but the map's input space has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("count total must be positive")]
    ZeroTotal,
}

/// Nonnegative entropy (or energy) in bits; one bit = k·ln 2.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct EntropyBits(f64);

impl EntropyBits {
    pub const ZERO: EntropyBits = EntropyBits(0.0);

    pub fn new(bits: f64) -> Result<Self, EntropyError> {
        if !bits.is_finite() || bits < 0.0 {
            return Err(EntropyError::NegativeBits(bits));
        }
        Ok(EntropyBits(bits))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Wraps a computed entropy, absorbing the sub-ulp negative values that
    /// compensated summation can leave behind.
    pub(crate) fn from_computed(raw: f64) -> Self {
        debug_assert!(raw > -1e-9, "entropy computation produced {raw}");
        EntropyBits(raw.max(0.0))
    }
}

impl std::fmt::Display for EntropyBits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} bits", self.0)
    }
}

/// Absolute temperature in kelvins; must be positive.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Temperature(f64);

impl Temperature {
    pub fn new(kelvin: f64) -> Result<Self, EntropyError> {
        if !kelvin.is_finite() || kelvin <= 0.0 {
            return Err(EntropyError::BadTemperature(kelvin));
        }
        Ok(Temperature(kelvin))
    }

    pub fn kelvin(self) -> f64 {
        self.0
    }
}

/// Probability vector over microstates 0..W-1. Entries are nonnegative and
/// sum to 1 within 1e-12.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    pub fn new(probs: Vec<f64>) -> Result<Self, EntropyError> {
        if probs.is_empty() {
            return Err(EntropyError::Empty);
        }
        if probs.len() > MAX_DENSE_STATES {
            return Err(EntropyError::TooManyStates { states: probs.len() });
        }
        for (index, &value) in probs.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(EntropyError::BadProbability { index, value });
            }
        }
        let sum = kahan_sum(probs.iter().copied());
        if (sum - 1.0).abs() > 1e-12 {
            return Err(EntropyError::NotNormalized { sum });
        }
        Ok(Distribution { probs })
    }

    /// Uniform distribution over `states` microstates.
    pub fn uniform(states: usize) -> Result<Self, EntropyError> {
        if states == 0 {
            return Err(EntropyError::ZeroStates);
        }
        if states > MAX_DENSE_STATES {
            return Err(EntropyError::TooManyStates { states });
        }
        let p = 1.0 / states as f64;
        Ok(Distribution { probs: vec![p; states] })
    }

    /// All mass on a single microstate.
    pub fn point_mass(states: usize, state: usize) -> Result<Self, EntropyError> {
        if states == 0 {
            return Err(EntropyError::ZeroStates);
        }
        if states > MAX_DENSE_STATES {
            return Err(EntropyError::TooManyStates { states });
        }
        if state >= states {
            return Err(EntropyError::StateOutOfRange { state, states });
        }
        let mut probs = vec![0.0; states];
        probs[state] = 1.0;
        Ok(Distribution { probs })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

/// Compensated (Kahan) summation.
fn kahan_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut carry = 0.0;
    for v in values {
        let y = v - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Shannon entropy −Σ pᵢ·log₂ pᵢ in bits, with the 0·log₂0 = 0 convention.
pub fn shannon_entropy_bits(d: &Distribution) -> EntropyBits {
    let h = kahan_sum(d.probs.iter().filter(|&&p| p > 0.0).map(|&p| -p * p.log2()));
    EntropyBits::from_computed(h)
}

/// log₂ W, the entropy of the uniform distribution over `states` microstates.
pub fn log2_states(states: u64) -> Result<EntropyBits, EntropyError> {
    if states == 0 {
        return Err(EntropyError::ZeroStates);
    }
    Ok(EntropyBits::from_computed((states as f64).log2()))
}

/// Entropy in bits of the empirical distribution given by `counts` over a
/// total of `total` observations. Zero counts are skipped.
pub fn entropy_from_counts(
    counts: impl IntoIterator<Item = u64>,
    total: u64,
) -> Result<EntropyBits, EntropyError> {
    if total == 0 {
        return Err(EntropyError::ZeroTotal);
    }
    let n = total as f64;
    let h = kahan_sum(counts.into_iter().filter(|&c| c > 0).map(|c| {
        let p = c as f64 / n;
        -p * p.log2()
    }));
    Ok(EntropyBits::from_computed(h))
}

/// Pushforward of `d` through `map`: the output-state distribution
/// q\[s\] = Σ { d\[x\] : map(x) = s }.
pub fn image_distribution(map: &TruthMap, d: &Distribution) -> Result<Distribution, EntropyError> {
    let expected = map.input_states();
    if d.len() != expected {
        return Err(EntropyError::DimensionMismatch { expected, found: d.len() });
    }
    let out_states = map.output_states();
    if out_states > MAX_DENSE_STATES {
        return Err(EntropyError::TooManyStates { states: out_states });
    }
    let mut probs = vec![0.0; out_states];
    for (x, &p) in d.probs.iter().enumerate() {
        probs[map.output(x as u32) as usize] += p;
    }
    Distribution::new(probs)
}

/// Landauer conversion: `bits` of entropy reduction at temperature `t` cost
/// at least bits · k_B · T · ln 2 joules.
pub fn bits_to_joules(bits: EntropyBits, t: Temperature) -> f64 {
    bits.value() * BOLTZMANN_J_PER_K * t.kelvin() * std::f64::consts::LN_2
}
