//! Branch enumeration shared by every runner.

use crate::bases::{x_basis, BasisSet};
use crate::error::{QstsError, Result};
use crate::measurement::measure;
use crate::qstate::{Amplitude, PureState};

use super::corrections::{correction_for_map, CorrectionTable};

/// Joint state plus the roles of its qubits.
pub(crate) struct Layout {
    pub joint: PureState,
    pub alice_targets: Vec<usize>,
    pub alice_basis: BasisSet,
    /// Helper qubits in announcement order.
    pub helpers: Vec<usize>,
    pub receiver: usize,
}

/// One joint outcome before the receiver's correction.
#[derive(Debug, Clone)]
pub(crate) struct RawBranch {
    pub alice_label: String,
    pub helper_labels: Vec<String>,
    pub probability: f64,
    pub state: Option<PureState>,
}

pub(crate) fn enumerate(layout: &Layout) -> Result<Vec<RawBranch>> {
    let total = layout.joint.num_qubits();
    let mut roles: Vec<usize> = layout.alice_targets.clone();
    roles.extend(&layout.helpers);
    roles.push(layout.receiver);
    roles.sort_unstable();
    roles.dedup();
    if roles.len() != total || roles.iter().any(|&q| q >= total) {
        return Err(QstsError::arg("layout roles must partition the register"));
    }

    let remaining: Vec<usize> = (0..total)
        .filter(|q| !layout.alice_targets.contains(q))
        .collect();
    let xb = x_basis();
    let mut out = Vec::with_capacity(layout.alice_basis.len() << layout.helpers.len());
    for alice in measure(&layout.joint, &layout.alice_targets, &layout.alice_basis)? {
        descend(
            &xb,
            alice.post_state,
            &remaining,
            &layout.helpers,
            alice.probability,
            &alice.label,
            &mut Vec::new(),
            &mut out,
        )?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn descend(
    xb: &BasisSet,
    state: Option<PureState>,
    remaining: &[usize],
    helpers: &[usize],
    probability: f64,
    alice: &str,
    labels: &mut Vec<String>,
    out: &mut Vec<RawBranch>,
) -> Result<()> {
    let Some((&helper, rest)) = helpers.split_first() else {
        out.push(RawBranch {
            alice_label: alice.to_string(),
            helper_labels: labels.clone(),
            probability,
            state,
        });
        return Ok(());
    };
    let pos = remaining
        .iter()
        .position(|&q| q == helper)
        .ok_or_else(|| QstsError::arg(format!("helper qubit {helper} already measured")))?;
    let next: Vec<usize> = remaining.iter().copied().filter(|&q| q != helper).collect();
    match state {
        Some(s) => {
            for o in measure(&s, &[pos], xb)? {
                labels.push(o.label);
                descend(
                    xb,
                    o.post_state,
                    &next,
                    rest,
                    probability * o.probability,
                    alice,
                    labels,
                    out,
                )?;
                labels.pop();
            }
        }
        None => {
            for label in &xb.labels {
                labels.push(label.clone());
                descend(xb, None, &next, rest, 0.0, alice, labels, out)?;
                labels.pop();
            }
        }
    }
    Ok(())
}

/// Unnormalized residual `√P · state` of a branch.
fn scaled(b: &RawBranch) -> [Amplitude; 2] {
    match &b.state {
        Some(s) => {
            let w = b.probability.sqrt();
            [s.amplitude(0) * w, s.amplitude(1) * w]
        }
        None => [Amplitude::default(); 2],
    }
}

/// Derives the receiver's corrections from the branch maps at a calibration point.
///
/// `basis0` and `basis1` are the raw branches for inputs `|0⟩` and `|1⟩`; the
/// branch map `K` has their scaled residuals as columns. At maximal
/// entanglement every `K` is proportional to a Pauli, whose inverse is the
/// correction for that outcome combination.
pub(crate) fn derive_table(basis0: &[RawBranch], basis1: &[RawBranch]) -> Result<CorrectionTable> {
    let mut table = CorrectionTable::default();
    for (b0, b1) in basis0.iter().zip(basis1) {
        debug_assert_eq!(b0.alice_label, b1.alice_label);
        let c0 = scaled(b0);
        let c1 = scaled(b1);
        let k = [[c0[0], c1[0]], [c0[1], c1[1]]];
        let (correction, overlap) = correction_for_map(&k);
        if (overlap - 1.0).abs() > 1e-9 {
            return Err(QstsError::arg(format!(
                "branch {}/{} is not a Pauli map at the calibration point",
                b0.alice_label,
                b0.helper_labels.join(",")
            )));
        }
        table.push(b0.alice_label.clone(), b0.helper_labels.clone(), correction);
    }
    Ok(table)
}
