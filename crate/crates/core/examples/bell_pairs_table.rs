//! The two-pair protocol: sixteen branches, the table check over a small grid,
//! and what happens when the roles of the two helpers are swapped.

use qsts::bases::{BasisParameter, ChannelParameter};
use qsts::efficiency::{haar_sample, sample_rng};
use qsts::protocols::{run_protocol2, verify_table2, Receiver};

fn main() -> qsts::Result<()> {
    let input = haar_sample(&mut sample_rng(2024, 0));
    let (n1, n2) = (
        ChannelParameter::real(0.5)?,
        ChannelParameter::real(1.0 / 3.0)?,
    );
    let m = BasisParameter::real(1.0 / 6.0)?;

    let run = run_protocol2(&input, n1, n2, m, Receiver::Charlie)?;
    println!("m = n1 n2 = 1/6");
    for b in &run.branches {
        let mark = if b.is_success() { "*" } else { "" };
        println!(
            "  {:<9} {:<7} {:<3} P = {:.5}  F = {:.9} {mark}",
            b.alice_label,
            b.bob_label().unwrap_or("-"),
            b.correction,
            b.probability,
            b.fidelity
        );
    }
    println!("success probability {:.6}", run.success_probability);

    let bob = run_protocol2(&input, n2, n1, m, Receiver::Bob)?;
    let same = run.branches.iter().zip(&bob.branches).all(|(a, b)| {
        (a.probability - b.probability).abs() < 1e-12 && (a.fidelity - b.fidelity).abs() < 1e-12
    });
    println!("receiver Bob with swapped weights gives the same branches: {same}");

    let grid = [0.3, 0.7, 1.0];
    let mut rows = 0;
    for &a in &grid {
        for &b in &grid {
            for &c in &grid {
                let report = verify_table2(
                    ChannelParameter::real(a)?,
                    ChannelParameter::real(b)?,
                    BasisParameter::real(c)?,
                    &input,
                    1e-10,
                )?;
                rows += report.rows.len();
            }
        }
    }
    println!("{rows} table rows verified on the 3x3x3 grid");
    Ok(())
}
