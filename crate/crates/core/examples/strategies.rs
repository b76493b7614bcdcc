//! Choosing the sender's basis parameter so that selected outcomes teleport
//! perfectly, and how much probability that buys.

use qsts::bases::ChannelParameter;
use qsts::efficiency::{cpro_monte_carlo_with, BranchWeighting, MonteCarloOptions};
use qsts::protocols::{choose_m, ChannelParams, MStrategy, ProtocolConfig, ProtocolKind, Receiver};

fn main() -> qsts::Result<()> {
    let ghz = ChannelParams::Ghz {
        n: ChannelParameter::real(0.5)?,
    };
    let pairs = ChannelParams::BellPair {
        n1: ChannelParameter::real(0.5)?,
        n2: ChannelParameter::real(0.25)?,
    };
    let options = MonteCarloOptions {
        weighting: BranchWeighting::SuccessOnly,
        ..Default::default()
    };

    for strategy in MStrategy::distinct_strategies() {
        let channel = match strategy.protocol {
            ProtocolKind::P1 => &ghz,
            _ => &pairs,
        };
        let m = choose_m(&strategy, channel)?;
        let config = ProtocolConfig::new(channel.clone(), m, Receiver::Charlie);
        let p = cpro_monte_carlo_with(&config, 20_000, 1, options)?;
        println!(
            "{:<4} {:<12} m = {:<8.4} succeeds on {:<22} P(success) = {:.4} ± {:.4}",
            strategy.protocol.name(),
            format!("{:?}", strategy.rule),
            m.0.re,
            strategy.targeted_outcomes(channel).join(","),
            p.estimate,
            p.std_error
        );
    }

    // the m* = 1/n rule needs a non-zero channel weight
    let empty = ChannelParams::Ghz {
        n: ChannelParameter::real(0.0)?,
    };
    match choose_m(&MStrategy::named("phi-plus")?, &empty) {
        Err(e) => println!("n = 0: {e}"),
        Ok(m) => println!("n = 0 unexpectedly gave m = {}", m.0),
    }
    Ok(())
}
