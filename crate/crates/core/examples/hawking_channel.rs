//! Temperature to channel squeezing, and the three-mode state it produces.

use steerbh::analytic::block_scalars;
use steerbh::hawking::{three_mode_state, HawkingParams};

fn main() -> steerbh::Result<()> {
    let horizon = HawkingParams::from_horizon(1.0, 1.0, 1.0)?;
    println!("f' = h' = 1  ->  T = {:.12}, r = {:.12}", horizon.temperature(), horizon.squeezing());

    for t in [0.0, 0.5, 1.0, 2.0] {
        let p = HawkingParams::from_temperature(t, 1.0)?;
        let cm = three_mode_state(1.0, &p)?;
        let k = block_scalars(1.0, p.squeezing());
        println!(
            "T = {t:>4}: r = {:.9}  sigma_B = {:.9}  sigma_Bbar = {:.9}  det = {:.3e}",
            p.squeezing(),
            k.sigma_b,
            k.sigma_bbar,
            cm.determinant()
        );
    }
    let cm = three_mode_state(1.0, &HawkingParams::from_temperature(1.0, 1.0)?)?;
    println!("\nsigma_ABBbar at s = 1, T = 1:\n{}", cm.matrix());
    Ok(())
}
