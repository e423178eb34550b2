//! Generator sets of the rational Picard group for every genus with a Mukai model.

use k3nl::divisor::MUKAI_GENERA;
use k3nl::{generators, Genus};

fn main() -> Result<(), k3nl::Error> {
    for &g in MUKAI_GENERA {
        let set = generators(Genus::new(g)?)?;
        let labels: Vec<String> = set.members.iter().map(|c| c.to_string()).collect();
        println!(
            "g = {g:>2}  rank {:>2}  {} generators, {} relation(s): {}",
            set.expected_rank,
            set.members.len(),
            set.relation_dim,
            labels.join(" ")
        );
    }
    Ok(())
}
