//! Why the helper's bit matters: without it the receiver holds a state with
//! no coherence left, and a bit flip on the receiver's qubit can be undone once
//! it is known.

use qsts::bases::{BasisParameter, ChannelParameter};
use qsts::protocols::{run_protocol1, Receiver};
use qsts::qstate::InputQubit;

fn main() -> qsts::Result<()> {
    let input = InputQubit::normalized(0.8.into(), num_complex::Complex64::new(0.36, 0.48))?;
    let run = run_protocol1(
        &input,
        ChannelParameter::real(0.7)?,
        BasisParameter::real(0.7)?,
        Receiver::Charlie,
    )?;

    for label in ["PhiPlus", "PhiMinus", "PsiPlus", "PsiMinus"] {
        let rho = run.bob_bit_withheld_state(label)?;
        println!(
            "{label:<9} without Bob's bit: |rho01| = {:.2e}, purity = {:.4}, diag = ({:.4}, {:.4})",
            rho.off_diagonal(),
            rho.purity(),
            rho.0[0][0].re,
            rho.0[1][1].re
        );
    }

    let i = 2;
    let b = &run.branches[i];
    let flipped = run.apply_bitflip_unrecovered(i)?;
    let recovered = run.apply_bitflip_and_recover(i, true)?;
    println!(
        "{} / {}: F = {:.6}, after a flip {:.6}, undone {:.6} (correction {} -> {})",
        b.alice_label,
        b.bob_label().unwrap_or("-"),
        b.fidelity,
        flipped.fidelity,
        recovered.fidelity,
        b.correction,
        recovered.correction
    );
    Ok(())
}
