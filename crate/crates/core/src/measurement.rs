//! Projective measurement of a labeled basis on a subset of qubits.

use rand::Rng;

use crate::bases::BasisSet;
use crate::error::{QstsError, Result};
use crate::qstate::{norm_sqr, Amplitude, PureState};

/// Outcomes below this probability carry no post-measurement state.
pub const ZERO_PROBABILITY: f64 = 1e-14;

#[derive(Debug, Clone)]
pub struct MeasurementOutcome {
    pub label: String,
    pub probability: f64,
    /// State of the unmeasured qubits, relative order preserved. `None` when
    /// the outcome has zero probability or no qubits remain.
    pub post_state: Option<PureState>,
}

/// Index bookkeeping for splitting a register into measured and remaining qubits.
struct Split {
    measured_offsets: Vec<usize>,
    rest_offsets: Vec<usize>,
    rest_qubits: usize,
}

fn offsets(qubits: &[usize], total: usize) -> Vec<usize> {
    let k = qubits.len();
    (0..(1usize << k))
        .map(|local| {
            qubits.iter().enumerate().fold(0usize, |acc, (i, &q)| {
                let bit = (local >> (k - 1 - i)) & 1;
                acc | (bit << (total - 1 - q))
            })
        })
        .collect()
}

fn split(state: &PureState, targets: &[usize]) -> Result<Split> {
    let total = state.num_qubits();
    for (i, &t) in targets.iter().enumerate() {
        if t >= total {
            return Err(QstsError::arg(format!(
                "target qubit {t} out of range for {total} qubits"
            )));
        }
        if targets[..i].contains(&t) {
            return Err(QstsError::arg(format!("target qubit {t} listed twice")));
        }
    }
    let rest: Vec<usize> = (0..total).filter(|q| !targets.contains(q)).collect();
    Ok(Split {
        measured_offsets: offsets(targets, total),
        rest_offsets: offsets(&rest, total),
        rest_qubits: rest.len(),
    })
}

/// Unnormalized residual `(⟨b| ⊗ I)|state⟩` on the unmeasured qubits.
///
/// The i-th target qubit pairs with the i-th ket symbol of `b`.
pub fn project(state: &PureState, targets: &[usize], b: &PureState) -> Result<Vec<Amplitude>> {
    if b.num_qubits() != targets.len() {
        return Err(QstsError::arg(format!(
            "basis state has {} qubits but {} targets were given",
            b.num_qubits(),
            targets.len()
        )));
    }
    let sp = split(state, targets)?;
    Ok(residual(state, &sp, b))
}

fn residual(state: &PureState, sp: &Split, b: &PureState) -> Vec<Amplitude> {
    let amps = state.amplitudes();
    sp.rest_offsets
        .iter()
        .map(|&r| {
            b.amplitudes()
                .iter()
                .zip(&sp.measured_offsets)
                .map(|(bt, &t)| bt.conj() * amps[t | r])
                .sum()
        })
        .collect()
}

/// All outcomes of measuring `basis` on `targets`, in basis order.
pub fn measure(
    state: &PureState,
    targets: &[usize],
    basis: &BasisSet,
) -> Result<Vec<MeasurementOutcome>> {
    if basis.subspace_qubits != targets.len() {
        return Err(QstsError::arg(format!(
            "basis acts on {} qubits but {} targets were given",
            basis.subspace_qubits,
            targets.len()
        )));
    }
    let sp = split(state, targets)?;
    Ok(basis
        .iter()
        .map(|(label, b)| {
            let res = residual(state, &sp, b);
            let probability = norm_sqr(&res);
            let post_state = if probability < ZERO_PROBABILITY || sp.rest_qubits == 0 {
                None
            } else {
                PureState::normalize(res).ok().map(|(s, _)| s)
            };
            MeasurementOutcome {
                label: label.to_string(),
                probability,
                post_state,
            }
        })
        .collect())
}

/// Draws one outcome with its stated probability.
pub fn sample<'a, R: Rng + ?Sized>(
    outcomes: &'a [MeasurementOutcome],
    rng: &mut R,
) -> Result<&'a MeasurementOutcome> {
    let last = outcomes
        .last()
        .ok_or_else(|| QstsError::arg("cannot sample from an empty outcome list"))?;
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for o in outcomes {
        acc += o.probability;
        if u < acc {
            return Ok(o);
        }
    }
    // u landed in the roundoff gap above the cumulative sum
    Ok(outcomes
        .iter()
        .rev()
        .find(|o| o.probability > 0.0)
        .unwrap_or(last))
}
