//! Sudden death of A -> B and sudden birth of Bbar -> B.

use steerbh::analytic::{transition_squeezing, transition_temperature};
use steerbh::sweep::{find_transition, TransitionKind};

fn main() -> steerbh::Result<()> {
    println!("{:>5} {:>16} {:>16} {:>16} {:>10}", "s", "T death", "T birth", "T*", "r*");
    for s in [0.25, 0.5, 1.0, 1.5, 2.0] {
        let death = find_transition(s, 1.0, TransitionKind::AToBDeath)?;
        let birth = find_transition(s, 1.0, TransitionKind::BbarToBBirth)?;
        let closed = transition_temperature(s, 1.0)?;
        let r = transition_squeezing(s)?.squeezing;
        println!("{s:>5} {death:>16.12} {birth:>16.12} {closed:>16.12} {r:>10.7}");
    }
    Ok(())
}
