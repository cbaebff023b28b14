//! Where the monogamy asymmetries peak, compared with the transition temperature.

use steerbh::analytic::{half_angle_condition_squeezing, transition_temperature};
use steerbh::hawking::temperature_from_squeezing;
use steerbh::steering::ASYMMETRY_COLUMNS;
use steerbh::sweep::{asymmetry_peak, run_sweep, SweepConfig};

fn main() -> steerbh::Result<()> {
    let config = SweepConfig { n_points: 2000, ..Default::default() };
    let rows = run_sweep(&config)?;
    let t_star = transition_temperature(config.s, config.omega)?;
    println!("grid step {:.6}, T* = {t_star:.9}", config.step());
    for (k, name) in ASYMMETRY_COLUMNS.iter().enumerate() {
        let (t, v) = asymmetry_peak(&rows, k).expect("nonempty sweep");
        println!("{name:>14}: peak {v:.9} at T = {t:.6} (|T - T*| = {:.2e})", (t - t_star).abs());
    }
    let other = temperature_from_squeezing(half_angle_condition_squeezing(config.s)?, config.omega)?;
    println!("cosh s = cosh^2 r / (1 - sinh^2 r) would put it at T = {other:.6}");
    Ok(())
}
