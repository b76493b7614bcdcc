//! Protocol efficiency `C = Σ_j ⟨P_j F_j⟩`: closed forms, Haar-averaged
//! Monte-Carlo estimates, and the comparison of the two channel types.
//!
//! The estimator enumerates every branch exactly for each sampled input, so
//! the only randomness is the choice of inputs. Sample `i` draws its input
//! from a ChaCha stream selected by `i`, and samples are accumulated in fixed
//! chunks merged in index order; the result is bit-identical for any thread
//! count.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{QstsError, Result};
use crate::protocols::{ChannelParams, ProtocolConfig};
use crate::qstate::{c, InputQubit};

const CHUNK: u64 = 4096;

/// `2|m|/(1+m²)`, the concurrence of the generalized Bell states.
pub fn concurrence(m: f64) -> f64 {
    2.0 * m.abs() / (1.0 + m * m)
}

/// Efficiency of the GHZ-channel protocol for real `n`, `m`.
pub fn cpro1_analytic(n: f64, m: f64) -> f64 {
    let [a, b] = sorted([n, m]);
    2.0 / 3.0 * (1.0 + 2.0 * a * b / ((1.0 + a * a) * (1.0 + b * b)))
}

/// Efficiency of the two-pair protocol for real `n1`, `n2`, `m`.
pub fn cpro2_analytic(n1: f64, n2: f64, m: f64) -> f64 {
    let [a, b, d] = sorted([n1, n2, m]);
    2.0 / 3.0 * (1.0 + 4.0 * a * b * d / ((1.0 + a * a) * (1.0 + b * b) * (1.0 + d * d)))
}

// Fixed evaluation order makes the closed forms bit-for-bit symmetric in their arguments.
fn sorted<const K: usize>(mut v: [f64; K]) -> [f64; K] {
    v.sort_by(f64::total_cmp);
    v
}

/// Closed-form efficiency when one exists: three-party protocols with real parameters.
pub fn analytic_efficiency(config: &ProtocolConfig) -> Option<f64> {
    if !config.m.is_real() || !config.channel.is_real() {
        return None;
    }
    let m = config.m.0.re;
    match &config.channel {
        ChannelParams::Ghz { n } => Some(cpro1_analytic(n.0.re, m)),
        ChannelParams::BellPair { n1, n2 } => Some(cpro2_analytic(n1.0.re, n2.0.re, m)),
        _ => None,
    }
}

/// Uniform (Haar) random qubit: `cos θ` uniform on `[−1, 1]`, `φ` uniform on `[0, 2π)`.
pub fn haar_sample<R: Rng + ?Sized>(rng: &mut R) -> InputQubit {
    let cos_theta = 2.0 * rng.random::<f64>() - 1.0;
    let phi = std::f64::consts::TAU * rng.random::<f64>();
    let a = ((1.0 + cos_theta) / 2.0).sqrt();
    let b = ((1.0 - cos_theta) / 2.0).max(0.0).sqrt();
    InputQubit {
        alpha: c(a, 0.0),
        beta: c(b * phi.cos(), b * phi.sin()),
    }
}

/// Random source for sample `index` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Running mean and variance (Welford) with an exact pairwise merge.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Accumulator {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Accumulator {
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn merge(&mut self, other: &Accumulator) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let total = self.count + other.count;
        let delta = other.mean - self.mean;
        self.mean += delta * other.count as f64 / total as f64;
        self.m2 +=
            other.m2 + delta * delta * (self.count as f64 * other.count as f64) / total as f64;
        self.count = total;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Sample variance with the `n − 1` denominator; 0 below two samples.
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            (self.m2 / (self.count - 1) as f64).max(0.0)
        }
    }

    pub fn std_error(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            (self.variance() / self.count as f64).sqrt()
        }
    }
}

/// What each sampled input contributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BranchWeighting {
    /// `Σ_j P_j F_j` over all branches.
    #[default]
    Fidelity,
    /// Total probability of the unit-fidelity branches.
    SuccessOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MonteCarloOptions {
    /// Worker threads; 0 picks the rayon default.
    pub threads: usize,
    pub weighting: BranchWeighting,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EfficiencyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analytic: Option<f64>,
    pub estimate: f64,
    pub samples: u64,
    pub std_error: f64,
    pub seed: u64,
}

/// Haar-averaged `Σ_j P_j F_j` with default options.
pub fn cpro_monte_carlo(
    config: &ProtocolConfig,
    samples: u64,
    seed: u64,
) -> Result<EfficiencyReport> {
    cpro_monte_carlo_with(config, samples, seed, MonteCarloOptions::default())
}

pub fn cpro_monte_carlo_with(
    config: &ProtocolConfig,
    samples: u64,
    seed: u64,
    options: MonteCarloOptions,
) -> Result<EfficiencyReport> {
    if samples == 0 {
        return Err(QstsError::arg("at least one sample is required"));
    }
    let table = config.correction_table()?;
    let chunk = |k: u64| -> Result<Accumulator> {
        let mut acc = Accumulator::default();
        for i in (k * CHUNK)..((k + 1) * CHUNK).min(samples) {
            let input = haar_sample(&mut sample_rng(seed, i));
            let run = config.run_with_table(&input, &table)?;
            acc.push(match options.weighting {
                BranchWeighting::Fidelity => run.weighted_fidelity(),
                BranchWeighting::SuccessOnly => run.success_probability,
            });
        }
        Ok(acc)
    };
    let chunks = samples.div_ceil(CHUNK);
    let parts: Vec<Accumulator> = if options.threads == 1 {
        (0..chunks).map(chunk).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| QstsError::arg(format!("thread pool: {e}")))?;
        pool.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(chunk)
                .collect::<Result<_>>()
        })?
    };
    let mut total = Accumulator::default();
    for p in &parts {
        total.merge(p);
    }
    let analytic = match options.weighting {
        BranchWeighting::Fidelity => analytic_efficiency(config),
        BranchWeighting::SuccessOnly => None,
    };
    Ok(EfficiencyReport {
        analytic,
        estimate: total.mean(),
        samples,
        std_error: total.std_error(),
        seed,
    })
}

/// Sample moments `⟨|α|²⟩`, `⟨|α|⁴⟩`, `⟨|αβ|²⟩` of the Haar sampler, each with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HaarMoments {
    pub alpha2: (f64, f64),
    pub alpha4: (f64, f64),
    pub alpha_beta2: (f64, f64),
    pub samples: u64,
}

pub fn haar_moments(samples: u64, seed: u64) -> HaarMoments {
    let mut a2 = Accumulator::default();
    let mut a4 = Accumulator::default();
    let mut ab2 = Accumulator::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let q = haar_sample(&mut rng);
        let pa = q.alpha.norm_sqr();
        let pb = q.beta.norm_sqr();
        a2.push(pa);
        a4.push(pa * pa);
        ab2.push(pa * pb);
    }
    let pair = |a: &Accumulator| (a.mean(), a.std_error());
    HaarMoments {
        alpha2: pair(&a2),
        alpha4: pair(&a4),
        alpha_beta2: pair(&ab2),
        samples,
    }
}

/// `C₁(n, m)` against `C₂` with `n` in either pair slot.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonReport {
    pub c1: f64,
    /// `C₂(n, n_other, m)`
    pub c2: f64,
    /// `C₂(n_other, n, m)`
    pub c2_swapped: f64,
    /// Concurrence-weighted entanglement of each channel: `c(n)` and `c(n)c(n_other)`.
    pub pairwise_entanglement: f64,
    pub product_entanglement: f64,
    /// `C₁ ≥ C₂` in both slots (to 1e-12).
    pub first_dominates: bool,
    /// `C₁ = C₂` to 1e-12.
    pub equal: bool,
}

/// Compares the two protocols with the GHZ weight reused as one of the pair weights.
pub fn compare_protocols(n: f64, m: f64, n_other: f64) -> ComparisonReport {
    let c1 = cpro1_analytic(n, m);
    let c2 = cpro2_analytic(n, n_other, m);
    let c2_swapped = cpro2_analytic(n_other, n, m);
    ComparisonReport {
        c1,
        c2,
        c2_swapped,
        pairwise_entanglement: concurrence(n),
        product_entanglement: concurrence(n) * concurrence(n_other),
        first_dominates: c1 >= c2 - 1e-12 && c1 >= c2_swapped - 1e-12,
        equal: (c1 - c2).abs() <= 1e-12,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{BasisParameter, ChannelParameter};
    use crate::protocols::Receiver;

    fn p1(n: f64, m: f64) -> ProtocolConfig {
        ProtocolConfig::new(
            ChannelParams::Ghz {
                n: ChannelParameter::real(n).unwrap(),
            },
            BasisParameter::real(m).unwrap(),
            Receiver::Charlie,
        )
    }

    fn p2(n1: f64, n2: f64, m: f64) -> ProtocolConfig {
        ProtocolConfig::new(
            ChannelParams::BellPair {
                n1: ChannelParameter::real(n1).unwrap(),
                n2: ChannelParameter::real(n2).unwrap(),
            },
            BasisParameter::real(m).unwrap(),
            Receiver::Charlie,
        )
    }

    #[test]
    fn concurrence_values() {
        assert_eq!(concurrence(1.0), 1.0);
        assert_eq!(concurrence(0.0), 0.0);
        assert!((concurrence(0.5) - 0.8).abs() < 1e-15);
        assert_eq!(concurrence(-2.0), concurrence(2.0));
    }

    #[test]
    fn closed_forms() {
        assert!((cpro1_analytic(1.0, 1.0) - 1.0).abs() < 1e-15);
        assert!((cpro1_analytic(0.3, 0.0) - 2.0 / 3.0).abs() < 1e-15);
        assert!((cpro1_analytic(0.5, 0.5) - 0.88).abs() < 1e-12);
        assert!((cpro2_analytic(1.0, 1.0, 1.0) - 1.0).abs() < 1e-15);
        assert!((cpro2_analytic(0.4, 0.9, 0.0) - 2.0 / 3.0).abs() < 1e-15);
        assert!((cpro2_analytic(1.0, 1.0, 0.5) - 14.0 / 15.0).abs() < 1e-12);
        // concurrence form
        for (n, m) in [(0.2, 0.7), (1.5, 0.3)] {
            let via_c = 2.0 / 3.0 * (1.0 + concurrence(m) * concurrence(n) / 2.0);
            assert!((cpro1_analytic(n, m) - via_c).abs() < 1e-15);
        }
    }

    #[test]
    fn analytic_only_for_real_three_party() {
        assert!(analytic_efficiency(&p1(0.5, 0.5)).is_some());
        let mut cfg = p1(0.5, 0.5);
        cfg.m = BasisParameter::new(c(0.5, 0.1)).unwrap();
        assert!(analytic_efficiency(&cfg).is_none());
        let ng = ProtocolConfig::new(
            ChannelParams::GhzN {
                parties: 4,
                n: ChannelParameter::real(0.5).unwrap(),
            },
            BasisParameter::real(0.5).unwrap(),
            Receiver::Party(1),
        );
        assert!(analytic_efficiency(&ng).is_none());
    }

    #[test]
    fn accumulator_merge_matches_sequential() {
        let xs: Vec<f64> = (0..1000).map(|i| ((i * 37) % 101) as f64 / 7.0).collect();
        let mut seq = Accumulator::default();
        xs.iter().for_each(|&x| seq.push(x));
        let mut parts = Accumulator::default();
        for chunk in xs.chunks(77) {
            let mut a = Accumulator::default();
            chunk.iter().for_each(|&x| a.push(x));
            parts.merge(&a);
        }
        assert_eq!(seq.count(), parts.count());
        assert!((seq.mean() - parts.mean()).abs() < 1e-12);
        assert!((seq.variance() - parts.variance()).abs() < 1e-9);
    }

    #[test]
    fn deterministic_limit_estimate_is_exact() {
        let r = cpro_monte_carlo(&p1(1.0, 1.0), 100, 4).unwrap();
        assert!((r.estimate - 1.0).abs() < 1e-12);
        assert!(r.std_error < 1e-12);
        assert_eq!(r.analytic, Some(1.0));
        assert!(cpro_monte_carlo(&p1(1.0, 1.0), 0, 4).is_err());
    }

    #[test]
    fn estimates_track_closed_forms() {
        let r = cpro_monte_carlo(&p1(0.5, 0.5), 20_000, 1).unwrap();
        assert!((r.estimate - 0.88).abs() <= 4.0 * r.std_error, "{r:?}");
        let r = cpro_monte_carlo(&p2(1.0, 1.0, 0.5), 20_000, 2).unwrap();
        assert!(
            (r.estimate - 14.0 / 15.0).abs() <= 4.0 * r.std_error,
            "{r:?}"
        );
    }

    #[test]
    fn thread_count_does_not_change_the_result() {
        let cfg = p2(0.5, 0.7, 0.3);
        let opts = |threads| MonteCarloOptions {
            threads,
            ..Default::default()
        };
        let a = cpro_monte_carlo_with(&cfg, 10_000, 9, opts(1)).unwrap();
        let b = cpro_monte_carlo_with(&cfg, 10_000, 9, opts(3)).unwrap();
        let c = cpro_monte_carlo_with(&cfg, 10_000, 9, opts(0)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn success_only_weighting_matches_strategy_probability() {
        // m = 1/n secures Φ⁺ and Ψ⁻ with total probability 2n²/(1+n²)², for every input
        let n = 0.5;
        let r = cpro_monte_carlo_with(
            &p1(n, 1.0 / n),
            500,
            3,
            MonteCarloOptions {
                threads: 1,
                weighting: BranchWeighting::SuccessOnly,
            },
        )
        .unwrap();
        assert!((r.estimate - 0.32).abs() < 1e-12);
        assert_eq!(r.analytic, None);
    }

    #[test]
    fn haar_sampler_is_normalized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..1000 {
            let q = haar_sample(&mut rng);
            assert!(InputQubit::new(q.alpha, q.beta).is_ok());
        }
    }

    #[test]
    fn haar_moments_small_run() {
        let h = haar_moments(100_000, 5);
        assert!((h.alpha2.0 - 0.5).abs() < 5.0 * h.alpha2.1);
        assert!((h.alpha4.0 - 1.0 / 3.0).abs() < 5.0 * h.alpha4.1);
        assert!((h.alpha_beta2.0 - 1.0 / 6.0).abs() < 5.0 * h.alpha_beta2.1);
    }

    #[test]
    fn comparison_examples() {
        let r = compare_protocols(0.5, 0.5, 0.7);
        assert!(r.first_dominates && !r.equal);
        let r = compare_protocols(0.5, 0.5, 1.0);
        assert!(r.equal);
        let r = compare_protocols(0.5, 0.0, 0.3);
        assert!(r.equal);
        assert!((r.c1 - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn permutation_invariance() {
        let (a, b, d) = (0.3, 0.85, 0.6);
        assert_eq!(cpro1_analytic(a, b), cpro1_analytic(b, a));
        let base = cpro2_analytic(a, b, d);
        for (x, y, z) in [(a, d, b), (b, a, d), (b, d, a), (d, a, b), (d, b, a)] {
            assert_eq!(cpro2_analytic(x, y, z), base);
        }
    }
}
