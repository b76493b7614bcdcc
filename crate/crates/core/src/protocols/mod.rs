//! State-sharing protocols over partially entangled channels.
//!
//! Every runner builds the joint register, lets the sender measure in an
//! `m`-parameterized basis, lets every helper measure in the X basis, and has
//! the receiver apply a Pauli correction chosen from the announced outcomes.
//! All branches are enumerated exactly; nothing is sampled.
//!
//! Register layouts (qubit 0 leftmost):
//!
//! * GHZ channel with `N` participants: `[input, sender, party 1, …, party N−1]`.
//! * Bell pairs with `N` participants: `[input, sender₁, party 1, sender₂, party 2, …]`,
//!   one pair per party.
//!
//! Bob is party 1 and Charlie party 2.

mod corrections;
mod engine;
pub mod nparty;
mod strategy;
mod tables;

use num_complex::Complex64;
use serde::Serialize;

use crate::bases::{BasisParameter, ChannelParameter};
use crate::error::{QstsError, Result};
use crate::qstate::{InputQubit, PureState, SingleQubitUnitary};

pub use corrections::{Correction, CorrectionEntry, CorrectionTable};
pub use nparty::{run_nparty_bell, run_nparty_ghz};
pub use strategy::{choose_m, MRule, MStrategy, STRATEGY_NAMES};
pub use tables::{
    table1_expected, table2_expected, verify_table1, verify_table1_with, verify_table2,
    verify_table2_with, TableReport, TableRow,
};

use engine::{Layout, RawBranch};

/// Branches at or above this fidelity count as successful transfers.
pub const SUCCESS_FIDELITY: f64 = 1.0 - 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProtocolKind {
    /// One partially entangled GHZ channel shared by sender, Bob and Charlie.
    P1,
    /// Two partially entangled Bell pairs, one per receiver.
    P2,
    NPartyGhz,
    NPartyBell,
}

impl ProtocolKind {
    pub fn name(self) -> &'static str {
        match self {
            ProtocolKind::P1 => "p1",
            ProtocolKind::P2 => "p2",
            ProtocolKind::NPartyGhz => "nparty-ghz",
            ProtocolKind::NPartyBell => "nparty-bell",
        }
    }
}

/// Who ends up holding the shared qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Receiver {
    Bob,
    Charlie,
    /// 1-based party index for runs with more than two parties.
    Party(usize),
}

impl Receiver {
    pub fn party_index(self) -> usize {
        match self {
            Receiver::Bob => 1,
            Receiver::Charlie => 2,
            Receiver::Party(k) => k,
        }
    }

    pub fn name(self) -> String {
        match self {
            Receiver::Bob => "bob".into(),
            Receiver::Charlie => "charlie".into(),
            Receiver::Party(k) => format!("party{k}"),
        }
    }

    fn check(self, parties: usize) -> Result<usize> {
        let k = self.party_index();
        if k == 0 || k >= parties {
            return Err(QstsError::arg(format!(
                "receiver {} is not one of the {} receiving parties",
                self.name(),
                parties - 1
            )));
        }
        Ok(k)
    }
}

/// Channel resources of a run.
#[derive(Debug, Clone, PartialEq)]
pub enum ChannelParams {
    Ghz {
        n: ChannelParameter,
    },
    BellPair {
        n1: ChannelParameter,
        n2: ChannelParameter,
    },
    /// GHZ channel over `parties` participants (sender included).
    GhzN {
        parties: usize,
        n: ChannelParameter,
    },
    /// One Bell pair per receiving party; `parties = ns.len() + 1`.
    BellN {
        ns: Vec<ChannelParameter>,
    },
}

impl ChannelParams {
    pub fn kind(&self) -> ProtocolKind {
        match self {
            ChannelParams::Ghz { .. } => ProtocolKind::P1,
            ChannelParams::BellPair { .. } => ProtocolKind::P2,
            ChannelParams::GhzN { .. } => ProtocolKind::NPartyGhz,
            ChannelParams::BellN { .. } => ProtocolKind::NPartyBell,
        }
    }

    pub fn parties(&self) -> usize {
        match self {
            ChannelParams::Ghz { .. } | ChannelParams::BellPair { .. } => 3,
            ChannelParams::GhzN { parties, .. } => *parties,
            ChannelParams::BellN { ns } => ns.len() + 1,
        }
    }

    pub fn weights(&self) -> Vec<ChannelParameter> {
        match self {
            ChannelParams::Ghz { n } | ChannelParams::GhzN { n, .. } => vec![*n],
            ChannelParams::BellPair { n1, n2 } => vec![*n1, *n2],
            ChannelParams::BellN { ns } => ns.clone(),
        }
    }

    /// `n` for GHZ channels, `Π nₖ` for Bell pairs.
    pub fn weight_product(&self) -> Complex64 {
        self.weights()
            .iter()
            .fold(Complex64::new(1.0, 0.0), |acc, n| acc * n.0)
    }

    pub fn is_real(&self) -> bool {
        self.weights().iter().all(ChannelParameter::is_real)
    }

    /// Same channel with every weight set to 1.
    fn maximal(&self) -> ChannelParams {
        let one = ChannelParameter(Complex64::new(1.0, 0.0));
        match self {
            ChannelParams::Ghz { .. } => ChannelParams::Ghz { n: one },
            ChannelParams::BellPair { .. } => ChannelParams::BellPair { n1: one, n2: one },
            ChannelParams::GhzN { parties, .. } => ChannelParams::GhzN {
                parties: *parties,
                n: one,
            },
            ChannelParams::BellN { ns } => ChannelParams::BellN {
                ns: vec![one; ns.len()],
            },
        }
    }
}

/// Classical bits announced per run: the sender's outcome and one bit per helper.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassicalBits {
    pub alice: u32,
    pub helpers: u32,
}

#[derive(Debug, Clone)]
pub struct BranchRecord {
    pub alice_label: String,
    /// X-measurement outcomes of the helpers, in announcement order.
    pub helper_labels: Vec<String>,
    pub probability: f64,
    /// Receiver's qubit before the correction; `None` for zero-probability branches.
    pub uncorrected_state: Option<PureState>,
    pub correction: Correction,
    pub receiver_state: Option<PureState>,
    /// Fidelity with the input; 0 for zero-probability branches.
    pub fidelity: f64,
    pub classical_bits: ClassicalBits,
}

impl BranchRecord {
    /// Outcome of the single helper in the three-party protocols.
    pub fn bob_label(&self) -> Option<&str> {
        self.helper_labels.first().map(String::as_str)
    }

    pub fn is_success(&self) -> bool {
        self.fidelity > SUCCESS_FIDELITY
    }
}

#[derive(Debug, Clone)]
pub struct ProtocolRun {
    pub kind: ProtocolKind,
    pub input: InputQubit,
    pub channel: ChannelParams,
    pub m: BasisParameter,
    pub receiver: Receiver,
    pub branches: Vec<BranchRecord>,
    /// Total probability of branches with fidelity above [`SUCCESS_FIDELITY`].
    pub success_probability: f64,
    pub classical_bits: ClassicalBits,
}

/// Everything needed to run a protocol on any input.
#[derive(Debug, Clone, PartialEq)]
pub struct ProtocolConfig {
    pub channel: ChannelParams,
    pub m: BasisParameter,
    pub receiver: Receiver,
}

impl ProtocolConfig {
    pub fn new(channel: ChannelParams, m: BasisParameter, receiver: Receiver) -> Self {
        Self {
            channel,
            m,
            receiver,
        }
    }

    pub fn kind(&self) -> ProtocolKind {
        self.channel.kind()
    }

    fn layout(&self, input: &InputQubit) -> Result<Layout> {
        let receiver = self.receiver.check(self.channel.parties())?;
        match &self.channel {
            ChannelParams::Ghz { n } => nparty::ghz_layout(input, 3, *n, self.m, receiver),
            ChannelParams::GhzN { parties, n } => {
                nparty::ghz_layout(input, *parties, *n, self.m, receiver)
            }
            ChannelParams::BellPair { n1, n2 } => {
                nparty::bell_layout(input, &[*n1, *n2], self.m, receiver)
            }
            ChannelParams::BellN { ns } => nparty::bell_layout(input, ns, self.m, receiver),
        }
    }

    fn classical_bits(&self) -> ClassicalBits {
        let parties = self.channel.parties() as u32;
        let alice = match self.kind() {
            ProtocolKind::P1 | ProtocolKind::NPartyGhz => 2,
            ProtocolKind::P2 | ProtocolKind::NPartyBell => parties,
        };
        ClassicalBits {
            alice,
            helpers: parties - 2,
        }
    }

    /// Correction table the receiver uses: fixed tables for the three-party
    /// protocols, calibrated at maximal entanglement for larger ones.
    pub fn correction_table(&self) -> Result<CorrectionTable> {
        match self.kind() {
            ProtocolKind::P1 => Ok(CorrectionTable::table1()),
            ProtocolKind::P2 => Ok(CorrectionTable::table2()),
            ProtocolKind::NPartyGhz | ProtocolKind::NPartyBell => self.derived_correction_table(),
        }
    }

    /// Corrections calibrated from the branch maps at unit channel and basis weights.
    pub fn derived_correction_table(&self) -> Result<CorrectionTable> {
        let calib = ProtocolConfig {
            channel: self.channel.maximal(),
            m: BasisParameter(Complex64::new(1.0, 0.0)),
            receiver: self.receiver,
        };
        let b0 = engine::enumerate(&calib.layout(&InputQubit::zero())?)?;
        let b1 = engine::enumerate(&calib.layout(&InputQubit::one())?)?;
        engine::derive_table(&b0, &b1)
    }

    pub fn run(&self, input: &InputQubit) -> Result<ProtocolRun> {
        self.run_with_table(input, &self.correction_table()?)
    }

    pub fn run_with_table(
        &self,
        input: &InputQubit,
        table: &CorrectionTable,
    ) -> Result<ProtocolRun> {
        let raw = engine::enumerate(&self.layout(input)?)?;
        let bits = self.classical_bits();
        let target = input.to_state();
        let branches = raw
            .into_iter()
            .map(|b| finish_branch(b, table, &target, bits))
            .collect::<Result<Vec<_>>>()?;
        let success_probability = branches
            .iter()
            .filter(|b| b.is_success())
            .map(|b| b.probability)
            .sum();
        Ok(ProtocolRun {
            kind: self.kind(),
            input: *input,
            channel: self.channel.clone(),
            m: self.m,
            receiver: self.receiver,
            branches,
            success_probability,
            classical_bits: bits,
        })
    }
}

fn finish_branch(
    raw: RawBranch,
    table: &CorrectionTable,
    target: &PureState,
    bits: ClassicalBits,
) -> Result<BranchRecord> {
    let correction = table
        .get(&raw.alice_label, &raw.helper_labels)
        .ok_or_else(|| {
            QstsError::arg(format!(
                "correction table has no entry for {}/{}",
                raw.alice_label,
                raw.helper_labels.join(",")
            ))
        })?;
    let receiver_state = match &raw.state {
        Some(s) => Some(s.apply_unitary(&correction.unitary(), 0)?),
        None => None,
    };
    let fidelity = match &receiver_state {
        Some(s) => target.fidelity(s)?,
        None => 0.0,
    };
    Ok(BranchRecord {
        alice_label: raw.alice_label,
        helper_labels: raw.helper_labels,
        probability: raw.probability,
        uncorrected_state: raw.state,
        correction,
        receiver_state,
        fidelity,
        classical_bits: bits,
    })
}

/// GHZ-channel protocol: generalized Bell measurement by the sender, X measurement by the helper.
pub fn run_protocol1(
    input: &InputQubit,
    n: ChannelParameter,
    m: BasisParameter,
    receiver: Receiver,
) -> Result<ProtocolRun> {
    ProtocolConfig::new(ChannelParams::Ghz { n }, m, receiver).run(input)
}

/// Two-Bell-pair protocol: generalized GHZ measurement by the sender, X measurement by the helper.
pub fn run_protocol2(
    input: &InputQubit,
    n1: ChannelParameter,
    n2: ChannelParameter,
    m: BasisParameter,
    receiver: Receiver,
) -> Result<ProtocolRun> {
    ProtocolConfig::new(ChannelParams::BellPair { n1, n2 }, m, receiver).run(input)
}

/// Single-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitDensity(pub [[Complex64; 2]; 2]);

impl QubitDensity {
    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    /// Magnitude of the coherence `ρ₀₁`.
    pub fn off_diagonal(&self) -> f64 {
        self.0[0][1].norm()
    }

    /// `tr ρ²`.
    pub fn purity(&self) -> f64 {
        let r = &self.0;
        (r[0][0] * r[0][0] + r[0][1] * r[1][0] + r[1][0] * r[0][1] + r[1][1] * r[1][1]).re
    }
}

impl ProtocolRun {
    pub fn branch(&self, alice: &str, helpers: &[&str]) -> Option<&BranchRecord> {
        self.branches.iter().find(|b| {
            b.alice_label == alice
                && b.helper_labels
                    .iter()
                    .map(String::as_str)
                    .eq(helpers.iter().copied())
        })
    }

    /// `Σ_j P_j F_j` over all branches.
    pub fn weighted_fidelity(&self) -> f64 {
        self.branches
            .iter()
            .map(|b| b.probability * b.fidelity)
            .sum()
    }

    pub fn total_probability(&self) -> f64 {
        self.branches.iter().map(|b| b.probability).sum()
    }

    /// Receiver's state when the helpers' bits are withheld.
    ///
    /// The receiver applies the correction for the all-`XPlus` announcement to
    /// every branch with Alice outcome `alice_label`, and the branches are mixed
    /// with their probabilities conditioned on that outcome.
    pub fn bob_bit_withheld_state(&self, alice_label: &str) -> Result<QubitDensity> {
        let branches: Vec<&BranchRecord> = self
            .branches
            .iter()
            .filter(|b| b.alice_label == alice_label)
            .collect();
        let p_alice: f64 = branches.iter().map(|b| b.probability).sum();
        if branches.is_empty() || p_alice < crate::measurement::ZERO_PROBABILITY {
            return Err(QstsError::arg(format!(
                "Alice outcome {alice_label} has zero probability"
            )));
        }
        let all_plus = vec!["XPlus".to_string(); branches[0].helper_labels.len()];
        let blind = branches
            .iter()
            .find(|b| b.helper_labels == all_plus)
            .map(|b| b.correction)
            .ok_or_else(|| QstsError::arg("no all-XPlus branch for this outcome"))?;
        let mut rho = [[Complex64::default(); 2]; 2];
        for b in branches {
            let Some(raw) = &b.uncorrected_state else {
                continue;
            };
            let s = raw.apply_unitary(&blind.unitary(), 0)?;
            let w = b.probability / p_alice;
            for (i, row) in rho.iter_mut().enumerate() {
                for (j, v) in row.iter_mut().enumerate() {
                    *v += s.amplitude(i) * s.amplitude(j).conj() * w;
                }
            }
        }
        Ok(QubitDensity(rho))
    }

    /// Applies a bit flip to the receiver's qubit before correction.
    ///
    /// With `flip` the receiver undoes it by running `σ_x` before the tabulated
    /// correction, so the fidelity matches the unflipped branch.
    pub fn apply_bitflip_and_recover(&self, branch: usize, flip: bool) -> Result<BranchRecord> {
        let b = self.branch_at(branch)?;
        if !flip {
            return Ok(b.clone());
        }
        let correction = b.correction.after(Correction::X);
        self.reapply(b, true, correction)
    }

    /// Bit flip on the receiver's qubit with the ordinary correction only.
    pub fn apply_bitflip_unrecovered(&self, branch: usize) -> Result<BranchRecord> {
        let b = self.branch_at(branch)?;
        self.reapply(b, true, b.correction)
    }

    fn branch_at(&self, i: usize) -> Result<&BranchRecord> {
        self.branches
            .get(i)
            .ok_or_else(|| QstsError::arg(format!("branch index {i} out of range")))
    }

    fn reapply(
        &self,
        b: &BranchRecord,
        flip: bool,
        correction: Correction,
    ) -> Result<BranchRecord> {
        let mut out = b.clone();
        out.correction = correction;
        if let Some(raw) = &b.uncorrected_state {
            let noisy = if flip {
                raw.apply_unitary(&SingleQubitUnitary::pauli_x(), 0)?
            } else {
                raw.clone()
            };
            let s = noisy.apply_unitary(&correction.unitary(), 0)?;
            out.fidelity = self.input.to_state().fidelity(&s)?;
            out.uncorrected_state = Some(noisy);
            out.receiver_state = Some(s);
        }
        Ok(out)
    }
}
