//! Choice of the basis parameter `m` that makes selected outcomes succeed.

use num_complex::Complex64;

use crate::bases::BasisParameter;
use crate::error::{QstsError, Result};

use super::{nparty, ChannelParams, ProtocolKind};

/// Algebraic assignment of `m`. `x` is the channel weight seen by the rule:
/// `n` for a single GHZ channel, the product of all pair weights otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MRule {
    /// `m* = 1/x`
    ConjInverse,
    /// `m = x`
    Equal,
    /// `m* = x`
    ConjEqual,
    /// `m = 1/x`
    Inverse,
    /// `m* = n₁/n₂`
    ConjRatio,
    /// `m = n₂/n₁`
    Ratio,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MStrategy {
    pub protocol: ProtocolKind,
    pub rule: MRule,
    /// Alice outcomes reaching unit fidelity for any channel value.
    pub targets: Vec<String>,
    /// Extra outcomes that also succeed when every channel weight is real.
    pub real_partners: Vec<String>,
}

/// CLI names of the single-outcome strategies, one per outcome label.
pub const STRATEGY_NAMES: [&str; 12] = [
    "phi-plus",
    "phi-minus",
    "psi-plus",
    "psi-minus",
    "ghz-plus",
    "ghz-minus",
    "g-plus",
    "g-minus",
    "h-plus",
    "h-minus",
    "z-plus",
    "z-minus",
];

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

impl MStrategy {
    fn new(protocol: ProtocolKind, rule: MRule, targets: &[&str], real_partners: &[&str]) -> Self {
        Self {
            protocol,
            rule,
            targets: strs(targets),
            real_partners: strs(real_partners),
        }
    }

    /// Strategy named after the outcome it secures, e.g. `phi-plus` or `z-minus`.
    pub fn named(name: &str) -> Result<Self> {
        use MRule::*;
        use ProtocolKind::*;
        let s = match name {
            "phi-plus" => Self::new(P1, ConjInverse, &["PhiPlus"], &["PsiMinus"]),
            "phi-minus" => Self::new(P1, Equal, &["PhiMinus"], &["PsiPlus"]),
            "psi-plus" => Self::new(P1, ConjEqual, &["PsiPlus"], &["PhiMinus"]),
            "psi-minus" => Self::new(P1, Inverse, &["PsiMinus"], &["PhiPlus"]),
            "ghz-plus" | "h-plus" => Self::new(P2, ConjInverse, &["GHZPlus", "HPlus"], &[]),
            "ghz-minus" | "h-minus" => Self::new(P2, Equal, &["GHZMinus", "HMinus"], &[]),
            "z-plus" | "g-plus" => Self::new(P2, ConjRatio, &["ZPlus", "GPlus"], &[]),
            "z-minus" | "g-minus" => Self::new(P2, Ratio, &["ZMinus", "GMinus"], &[]),
            other => return Err(QstsError::arg(format!("unknown strategy '{other}'"))),
        };
        Ok(s)
    }

    /// The four distinct rules of each two-receiver protocol.
    pub fn distinct_strategies() -> Vec<MStrategy> {
        [
            "phi-plus",
            "phi-minus",
            "psi-plus",
            "psi-minus",
            "ghz-plus",
            "ghz-minus",
            "z-plus",
            "z-minus",
        ]
        .iter()
        .map(|n| Self::named(n).expect("static name"))
        .collect()
    }

    /// GHZ-channel rule carried over to `parties` participants; the sender's
    /// basis is still the two-qubit one, so the targets are unchanged.
    pub fn nparty_ghz(name: &str) -> Result<Self> {
        let mut s = Self::named(name)?;
        if s.protocol != ProtocolKind::P1 {
            return Err(QstsError::arg(format!(
                "'{name}' is not a GHZ-channel strategy"
            )));
        }
        s.protocol = ProtocolKind::NPartyGhz;
        Ok(s)
    }

    /// Product rules for `parties − 1` Bell pairs: `m = Π nₖ` secures the two
    /// `Minus` outcomes built on `0…0` and `10…0`; `m* = 1/Π nₖ` the two `Plus` ones.
    pub fn nparty_bell(rule: MRule, parties: usize) -> Result<Self> {
        let sign = match rule {
            MRule::Equal => "Minus",
            MRule::ConjInverse => "Plus",
            _ => {
                return Err(QstsError::arg(
                    "only the product rules extend to more than two pairs",
                ))
            }
        };
        let labels = nparty::product_rule_labels(parties, sign)?;
        Ok(Self {
            protocol: ProtocolKind::NPartyBell,
            rule,
            targets: labels,
            real_partners: Vec::new(),
        })
    }

    /// Outcomes expected to reach unit fidelity for this channel.
    pub fn targeted_outcomes(&self, channel: &ChannelParams) -> Vec<String> {
        let mut out = self.targets.clone();
        if channel.is_real() {
            out.extend(self.real_partners.iter().cloned());
        }
        out
    }
}

fn inverse(x: Complex64, what: &str) -> Result<Complex64> {
    if x.norm() == 0.0 {
        Err(QstsError::DegenerateChannel(format!("{what} is zero")))
    } else {
        Ok(x.inv())
    }
}

/// The basis parameter mandated by `strategy` for `channel`.
pub fn choose_m(strategy: &MStrategy, channel: &ChannelParams) -> Result<BasisParameter> {
    if strategy.protocol != channel.kind() {
        return Err(QstsError::arg(format!(
            "strategy for {} applied to a {} channel",
            strategy.protocol.name(),
            channel.kind().name()
        )));
    }
    let x = channel.weight_product();
    let m = match strategy.rule {
        MRule::ConjInverse => inverse(x, "channel weight")?.conj(),
        MRule::Equal => x,
        MRule::ConjEqual => x.conj(),
        MRule::Inverse => inverse(x, "channel weight")?,
        MRule::ConjRatio | MRule::Ratio => {
            let ChannelParams::BellPair { n1, n2 } = channel else {
                return Err(QstsError::arg("ratio rules need exactly two Bell pairs"));
            };
            if strategy.rule == MRule::ConjRatio {
                (n1.0 * inverse(n2.0, "n2")?).conj()
            } else {
                n2.0 * inverse(n1.0, "n1")?
            }
        }
    };
    BasisParameter::new(m)
}
