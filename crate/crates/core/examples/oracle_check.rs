//! Numeric pipeline against every closed form over a temperature grid.

use steerbh::output::oracle_json;
use steerbh::sweep::{verify_oracle, SweepConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for s in [0.25, 0.5, 1.0, 1.5] {
        let config = SweepConfig { s, t_min: 0.05, t_max: 5.0, n_points: 200, ..Default::default() };
        let report = verify_oracle(&config)?;
        println!("{}", serde_json::to_string_pretty(&oracle_json(s, 1.0, &report))?);
    }
    Ok(())
}
