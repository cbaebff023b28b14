//! All twelve steerings, the six deficits and the three asymmetries at one point.

use std::env;

use steerbh::sweep::evaluate_point;

fn main() -> steerbh::Result<()> {
    let mut args = env::args().skip(1).map(|a| a.parse::<f64>().expect("numeric argument"));
    let s = args.next().unwrap_or(1.0);
    let t = args.next().unwrap_or(1.0);
    let row = evaluate_point(s, 1.0, t)?;
    let rep = &row.report;

    println!("s = {s}, T = {t}, r = {:.12}", row.squeezing);
    for (name, v) in rep.named_steering().chain(rep.named_deficits()).chain(rep.named_asymmetry()) {
        println!("{name:>16} {v:.12}");
    }
    println!("monogamous: {}", rep.monogamous);
    println!("collective symmetry gap: {:.3e}", rep.collective_symmetry_gap());
    Ok(())
}
