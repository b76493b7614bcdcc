//! Every branch of the GHZ-channel protocol for one input, with the receiver's
//! corrected state next to the closed-form entry it should match.
//!
//! ```text
//! cargo run --example ghz_channel_table -- 0.5 0.5
//! ```

use qsts::bases::{BasisParameter, ChannelParameter};
use qsts::protocols::{run_protocol1, table1_expected, Receiver};
use qsts::qstate::{InputQubit, PureState};

fn arg(i: usize, default: f64) -> f64 {
    std::env::args()
        .nth(i)
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn main() -> qsts::Result<()> {
    let (n, m) = (arg(1, 0.5), arg(2, 0.5));
    let input = InputQubit::normalized(0.6.into(), num_complex::Complex64::new(0.0, 0.8))?;
    let run = run_protocol1(
        &input,
        ChannelParameter::real(n)?,
        BasisParameter::real(m)?,
        Receiver::Charlie,
    )?;

    println!(
        "n = {n}, m = {m}, input = {:.3}|0> + {:.3}|1>",
        input.alpha, input.beta
    );
    println!(
        "{:<9} {:<7} {:<4} {:>8} {:>10} {:>10}",
        "alice", "bob", "fix", "P", "F", "vs table"
    );
    for b in &run.branches {
        let entry =
            table1_expected(&b.alice_label, run.channel.weights()[0].0, run.m.0, &input).unwrap();
        let agreement = match (&b.receiver_state, PureState::normalize(entry.to_vec())) {
            (Some(s), Ok((e, _))) => e.fidelity(s)?,
            _ => f64::NAN,
        };
        println!(
            "{:<9} {:<7} {:<4} {:>8.5} {:>10.7} {:>10.7}",
            b.alice_label,
            b.bob_label().unwrap_or("-"),
            b.correction,
            b.probability,
            b.fidelity,
            agreement
        );
    }
    println!("success probability: {:.6}", run.success_probability);
    println!("sum P*F: {:.6}", run.weighted_fidelity());
    Ok(())
}
