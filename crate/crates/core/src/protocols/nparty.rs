//! Register layouts for any number of parties, and the N-party runners.

use crate::bases::{
    channel_bell, channel_ghz_k, generalized_bell_basis, generalized_ghz_basis,
    generalized_multiqubit_basis, BasisParameter, ChannelParameter,
};
use crate::error::{QstsError, Result};
use crate::qstate::InputQubit;

use super::engine::Layout;
use super::{ChannelParams, ProtocolConfig, ProtocolRun, Receiver};

pub const MAX_GHZ_PARTIES: usize = 10;
pub const MAX_BELL_PARTIES: usize = 6;

fn check_parties(parties: usize, max: usize) -> Result<()> {
    if !(3..=max).contains(&parties) {
        return Err(QstsError::arg(format!(
            "party count {parties} outside the supported range 3..={max}"
        )));
    }
    Ok(())
}

/// `[input, sender, party 1, …, party N−1]`; the sender measures the first two qubits.
pub(crate) fn ghz_layout(
    input: &InputQubit,
    parties: usize,
    n: ChannelParameter,
    m: BasisParameter,
    receiver: usize,
) -> Result<Layout> {
    check_parties(parties, MAX_GHZ_PARTIES)?;
    let joint = input.to_state().tensor(&channel_ghz_k(n, parties)?);
    let party_qubit = |k: usize| k + 1;
    Ok(Layout {
        joint,
        alice_targets: vec![0, 1],
        alice_basis: generalized_bell_basis(m),
        helpers: (1..parties)
            .filter(|&k| k != receiver)
            .map(party_qubit)
            .collect(),
        receiver: party_qubit(receiver),
    })
}

/// `[input, sender₁, party 1, sender₂, party 2, …]`.
///
/// The sender's measured qubits are ordered input first, then her halves of
/// the helpers' pairs, then her half of the receiver's pair.
pub(crate) fn bell_layout(
    input: &InputQubit,
    ns: &[ChannelParameter],
    m: BasisParameter,
    receiver: usize,
) -> Result<Layout> {
    let parties = ns.len() + 1;
    check_parties(parties, MAX_BELL_PARTIES)?;
    let joint = ns
        .iter()
        .fold(input.to_state(), |acc, n| acc.tensor(&channel_bell(*n)));
    let sender_qubit = |k: usize| 2 * k - 1;
    let party_qubit = |k: usize| 2 * k;
    let helpers: Vec<usize> = (1..parties).filter(|&k| k != receiver).collect();
    let mut alice_targets = vec![0];
    alice_targets.extend(helpers.iter().map(|&k| sender_qubit(k)));
    alice_targets.push(sender_qubit(receiver));
    let alice_basis = if parties == 3 {
        generalized_ghz_basis(m)
    } else {
        generalized_multiqubit_basis(m, parties)?
    };
    Ok(Layout {
        joint,
        alice_targets,
        alice_basis,
        helpers: helpers.into_iter().map(party_qubit).collect(),
        receiver: party_qubit(receiver),
    })
}

/// Sender outcomes secured by the product rules on `parties − 1` pairs: the
/// `sign` member of the pairs built on `0…0` and `10…0`.
pub fn product_rule_labels(parties: usize, sign: &str) -> Result<Vec<String>> {
    check_parties(parties, MAX_BELL_PARTIES)?;
    if parties == 3 {
        return Ok(vec![format!("GHZ{sign}"), format!("H{sign}")]);
    }
    let zeros = "0".repeat(parties);
    let lead = format!("1{}", "0".repeat(parties - 1));
    Ok(vec![format!("{sign}{zeros}"), format!("{sign}{lead}")])
}

/// GHZ channel shared by the sender and `parties − 1` others; all but the receiver X-measure.
pub fn run_nparty_ghz(
    input: &InputQubit,
    parties: usize,
    n: ChannelParameter,
    m: BasisParameter,
    receiver: Receiver,
) -> Result<ProtocolRun> {
    check_parties(parties, MAX_GHZ_PARTIES)?;
    ProtocolConfig::new(ChannelParams::GhzN { parties, n }, m, receiver).run(input)
}

/// One Bell pair per receiving party; the sender measures all her qubits jointly.
pub fn run_nparty_bell(
    input: &InputQubit,
    ns: &[ChannelParameter],
    m: BasisParameter,
    receiver: Receiver,
) -> Result<ProtocolRun> {
    check_parties(ns.len() + 1, MAX_BELL_PARTIES)?;
    ProtocolConfig::new(ChannelParams::BellN { ns: ns.to_vec() }, m, receiver).run(input)
}
