//! Divisors covering the non-Brill–Noether-general locus, by the closed form and by
//! direct enumeration of the defining inequalities.

use k3nl::{nonbn_closed_form, nonbn_system, Genus};

fn main() -> Result<(), k3nl::Error> {
    for g in [6, 7, 8, 9, 10, 12, 20] {
        let genus = Genus::new(g)?;
        let closed = nonbn_closed_form(genus);
        let system = nonbn_system(genus);
        assert_eq!(closed.pairs, system.pairs);
        let labels: Vec<String> = closed.labels().map(|p| p.to_string()).collect();
        println!("g = {g:>2}: {}", labels.join(" "));
    }
    Ok(())
}
