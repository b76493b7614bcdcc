//! Efficiency curves: the closed forms against sampled estimates, and the GHZ
//! channel against two Bell pairs that share its first weight.
//!
//! Prints CSV; pipe it to a file for plotting.

use qsts::bases::{BasisParameter, ChannelParameter};
use qsts::efficiency::{compare_protocols, cpro_monte_carlo};
use qsts::format::g17;
use qsts::protocols::{ChannelParams, ProtocolConfig, Receiver};

fn main() -> qsts::Result<()> {
    println!("n,c1_analytic,c1_estimate,c1_std_error,c2_equal_pairs,c2_second_half");
    for k in 1..=10 {
        let n = k as f64 / 10.0;
        let config = ProtocolConfig::new(
            ChannelParams::Ghz {
                n: ChannelParameter::real(n)?,
            },
            BasisParameter::real(n)?,
            Receiver::Charlie,
        );
        let rep = cpro_monte_carlo(&config, 4000, 7)?;
        let same = compare_protocols(n, n, n);
        let half = compare_protocols(n, n, 0.5);
        println!(
            "{},{},{},{},{},{}",
            g17(n),
            g17(rep.analytic.unwrap()),
            g17(rep.estimate),
            g17(rep.std_error),
            g17(same.c2),
            g17(half.c2)
        );
    }
    let tight = compare_protocols(0.4, 0.7, 1.0);
    eprintln!(
        "second pair maximally entangled: C1 = {}, C2 = {} (equal: {})",
        tight.c1, tight.c2, tight.equal
    );
    Ok(())
}
