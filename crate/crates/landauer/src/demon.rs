//! Monte Carlo separation experiments.
//!
//! A demon that separates N particles reduces the system's entropy from its
//! analytic value (N bits for two domains, N·log₂N for N cells) to zero. The
//! simulator samples the pre-separation microstate distribution and checks
//! that a plug-in entropy estimate (with Miller–Madow bias correction)
//! recovers the analytic value. Also provides the rank-preserving quantile
//! map from uniformly distributed values to Maxwell–Boltzmann speeds, which
//! lets max/sort questions about values be asked about particle speeds
//! without changing their answers.

use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bounds::{self, BoundError, ProblemSpec};
use crate::entropy::{self, bits_to_joules, EntropyBits, Temperature};

/// Estimation is refused when the microstate space exceeds 2^20 states.
pub const MAX_STATE_BITS: f64 = 20.0;

#[derive(Debug, Error, PartialEq)]
pub enum DemonError {
    #[error("particle count must be at least 1")]
    NoParticles,
    #[error("state space needs {bits:.1} bits, estimation cap is {MAX_STATE_BITS}; run analytic mode (samples = 0)")]
    StateSpaceTooLarge { bits: f64 },
    #[error("scale parameter must be finite and positive, got {0}")]
    BadScale(f64),
    #[error("tolerance must be finite and positive, got {0}")]
    BadTolerance(f64),
    #[error("quantile u = {u} outside [0, 1)")]
    BadQuantile { u: f64 },
    #[error("quantile inversion produced a non-finite speed for u = {u}")]
    NonFinite { u: f64 },
    #[error("no values to map")]
    EmptyValues,
    #[error(transparent)]
    Bound(#[from] BoundError),
}

/// How the demon's container is partitioned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DemonMode {
    /// Two half-domains; separating the fastest particle from the rest.
    TwoDomain,
    /// N equal cells; placing every particle at its own position.
    NCells,
}

impl DemonMode {
    pub fn name(self) -> &'static str {
        match self {
            DemonMode::TwoDomain => "two_domain",
            DemonMode::NCells => "n_cells",
        }
    }
}

/// Configuration of one demon experiment. `samples = 0` runs analytic mode
/// (no estimation); estimation requires the state space to fit the cap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DemonConfig {
    pub particles: u64,
    pub mode: DemonMode,
    pub samples: u64,
    pub seed: u64,
}

/// Analytic entropies of the experiment, with the empirical estimate when
/// sampling was requested.
#[derive(Debug, Clone, PartialEq)]
pub struct DemonResult {
    pub entropy_before_bits: EntropyBits,
    pub entropy_after_bits: EntropyBits,
    pub entropy_estimate_bits: Option<f64>,
    /// Distinct microstates observed while sampling.
    pub observed_states: Option<u64>,
    pub samples: u64,
}

impl DemonResult {
    /// Minimum work to perform the separation at temperature `t`.
    pub fn work_joules(&self, t: Temperature) -> f64 {
        let reduction = self.entropy_before_bits.value() - self.entropy_after_bits.value();
        bits_to_joules(EntropyBits::new(reduction).expect("before >= after"), t)
    }
}

fn state_bits(cfg: &DemonConfig) -> f64 {
    let n = cfg.particles as f64;
    match cfg.mode {
        DemonMode::TwoDomain => n,
        DemonMode::NCells => n * n.log2(),
    }
}

/// Runs the experiment: samples pre-separation microstates uniformly (each
/// particle independently in 2 domains or N cells), estimates their entropy
/// by plug-in with Miller–Madow correction, and returns the analytic values
/// alongside.
pub fn simulate_demon(cfg: &DemonConfig) -> Result<DemonResult, DemonError> {
    if cfg.particles == 0 {
        return Err(DemonError::NoParticles);
    }
    let before = state_bits(cfg);
    let result = DemonResult {
        entropy_before_bits: EntropyBits::from_computed(before),
        entropy_after_bits: EntropyBits::ZERO,
        entropy_estimate_bits: None,
        observed_states: None,
        samples: cfg.samples,
    };
    if cfg.samples == 0 {
        return Ok(result);
    }
    if before > MAX_STATE_BITS {
        return Err(DemonError::StateSpaceTooLarge { bits: before });
    }

    let n = cfg.particles as usize;
    let mut counts: Vec<u64> = match cfg.mode {
        DemonMode::TwoDomain => vec![0; 1 << n],
        DemonMode::NCells => vec![0; n.pow(n as u32)],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        let state = match cfg.mode {
            DemonMode::TwoDomain => (rng.next_u64() & ((1 << n) - 1)) as usize,
            DemonMode::NCells => {
                let mut state = 0usize;
                let mut radix = 1usize;
                for _ in 0..n {
                    state += radix * rng.random_range(0..n);
                    radix *= n;
                }
                state
            }
        };
        counts[state] += 1;
    }

    let observed = counts.iter().filter(|&&c| c > 0).count() as u64;
    let plugin = entropy::entropy_from_counts(counts.iter().copied(), cfg.samples)
        .expect("samples > 0")
        .value();
    // Miller–Madow: add (K−1)/(2·samples·ln 2) bits, K = observed support
    let correction = (observed as f64 - 1.0) / (2.0 * cfg.samples as f64 * std::f64::consts::LN_2);
    Ok(DemonResult {
        entropy_estimate_bits: Some(plugin + correction),
        observed_states: Some(observed),
        ..result
    })
}

/// Minimum separation work for the problem the demon solves:
/// bits_to_joules(bound, T).
pub fn analytic_separation_work(p: &ProblemSpec, t: Temperature) -> Result<f64, DemonError> {
    match p {
        ProblemSpec::MaxOfN { .. }
        | ProblemSpec::Sort { .. }
        | ProblemSpec::OrderedSearch { .. } => Ok(bits_to_joules(bounds::bound_bits(p)?, t)),
        _ => Err(DemonError::Bound(BoundError::UnsupportedKind {
            operation: "analytic_separation_work",
            kind: p.kind_name(),
        })),
    }
}

/// Maxwell–Boltzmann speed distribution with scale parameter `a`, inverted
/// numerically to `tolerance` (in CDF units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxwellianMap {
    scale: f64,
    tolerance: f64,
}

impl MaxwellianMap {
    pub fn new(scale: f64) -> Result<Self, DemonError> {
        Self::with_tolerance(scale, 1e-12)
    }

    pub fn with_tolerance(scale: f64, tolerance: f64) -> Result<Self, DemonError> {
        if !scale.is_finite() || scale <= 0.0 {
            return Err(DemonError::BadScale(scale));
        }
        if !tolerance.is_finite() || tolerance <= 0.0 {
            return Err(DemonError::BadTolerance(tolerance));
        }
        Ok(MaxwellianMap { scale, tolerance })
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Speed CDF: F(x) = erf(x/(√2·a)) − √(2/π)·(x/a)·e^(−x²/(2a²)).
    pub fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let a = self.scale;
        let z = x / a;
        libm::erf(z / std::f64::consts::SQRT_2)
            - (2.0 / std::f64::consts::PI).sqrt() * z * (-z * z / 2.0).exp()
    }

    /// Quantile F⁻¹(u) for u ∈ [0, 1), by bisection on a bracket that
    /// provably contains it. Bisection is slower than Newton but converges
    /// unconditionally.
    pub fn inverse_cdf(&self, u: f64) -> Result<f64, DemonError> {
        if !(0.0..1.0).contains(&u) {
            return Err(DemonError::BadQuantile { u });
        }
        if u == 0.0 {
            return Ok(0.0);
        }
        let mut lo = 0.0f64;
        let mut hi = self.scale * ((2.0 * (1.0 / (1.0 - u)).ln()).sqrt() + 10.0);
        let mut mid = 0.5 * (lo + hi);
        for _ in 0..200 {
            mid = 0.5 * (lo + hi);
            let f = self.cdf(mid);
            if (f - u).abs() <= self.tolerance {
                return Ok(mid);
            }
            if f < u {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if mid.is_finite() && (self.cdf(mid) - u).abs() <= self.tolerance {
            Ok(mid)
        } else {
            Err(DemonError::NonFinite { u })
        }
    }
}

/// Maps values to Maxwell–Boltzmann speeds by the rank-based quantile
/// transform: speed_i = F⁻¹((rank_i + ½)/N), ties broken by original index.
/// Strictly increasing in value rank, so argmax and sort order carry over.
pub fn quantile_map_to_maxwellian(
    values: &[u64],
    map: &MaxwellianMap,
) -> Result<Vec<f64>, DemonError> {
    if values.is_empty() {
        return Err(DemonError::EmptyValues);
    }
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (values[i], i));
    let mut speeds = vec![0.0f64; n];
    for (rank, &original) in order.iter().enumerate() {
        let u = (rank as f64 + 0.5) / n as f64;
        speeds[original] = map.inverse_cdf(u)?;
    }
    Ok(speeds)
}
