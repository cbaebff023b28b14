//! Sweep in temperature and write the CSV table to stdout.

use std::io;

use steerbh::output::write_csv;
use steerbh::sweep::{run_sweep, SweepConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = SweepConfig { s: 1.0, t_min: 0.05, t_max: 3.0, n_points: 30, ..Default::default() };
    let rows = run_sweep(&config)?;
    write_csv(&mut io::stdout().lock(), &rows)?;
    Ok(())
}
