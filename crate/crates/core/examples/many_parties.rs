//! More than three parties: a GHZ channel shared by everyone, or one Bell pair
//! per receiving party with the sender measuring all her qubits at once.

use qsts::bases::{BasisParameter, ChannelParameter};
use qsts::efficiency::{haar_sample, sample_rng};
use qsts::protocols::{
    choose_m, run_nparty_bell, run_nparty_ghz, ChannelParams, MRule, MStrategy, ProtocolConfig,
    Receiver,
};

fn main() -> qsts::Result<()> {
    let input = haar_sample(&mut sample_rng(5, 0));

    for parties in 3..=6 {
        let run = run_nparty_ghz(
            &input,
            parties,
            ChannelParameter::real(1.0)?,
            BasisParameter::real(1.0)?,
            Receiver::Party(parties - 1),
        )?;
        let worst = run.branches.iter().map(|b| b.fidelity).fold(1.0, f64::min);
        println!(
            "GHZ channel, {parties} parties: {} branches, {} + {} classical bits, worst F = {worst:.12}",
            run.branches.len(),
            run.classical_bits.alice,
            run.classical_bits.helpers
        );
    }

    let ns = [0.8, 0.6, 0.5];
    let weights: Vec<ChannelParameter> = ns
        .iter()
        .map(|&n| ChannelParameter::real(n))
        .collect::<Result<_, _>>()?;
    let channel = ChannelParams::BellN {
        ns: weights.clone(),
    };
    for rule in [MRule::Equal, MRule::ConjInverse] {
        let strategy = MStrategy::nparty_bell(rule, 4)?;
        let m = choose_m(&strategy, &channel)?;
        let run = ProtocolConfig::new(channel.clone(), m, Receiver::Party(2)).run(&input)?;
        println!(
            "three pairs, {:?}: m = {:.4}, perfect on {:?}, success probability {:.4}",
            rule, m.0.re, strategy.targets, run.success_probability
        );
    }

    let plain = run_nparty_bell(
        &input,
        &weights,
        BasisParameter::real(1.0)?,
        Receiver::Party(3),
    )?;
    println!(
        "three pairs, m = 1: sum P*F = {:.6}",
        plain.weighted_fidelity()
    );
    Ok(())
}
