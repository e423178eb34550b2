//! Elliptic NL divisors `D_{d,0}`: distinct classes up to a degree cap, and the
//! degrees whose class has a standard label with `n ≠ 0`.

use k3nl::{elliptic_divisors, Genus};

fn main() -> Result<(), k3nl::Error> {
    for g in [2, 3, 4, 5, 7] {
        let e = elliptic_divisors(Genus::new(g)?, 2 * u64::from(g));
        let members: Vec<String> = e.members.iter().map(|c| c.to_string()).collect();
        println!("g = {g}: {}", members.join(" "));
        for (d, class) in &e.folded {
            println!("       d = {d} gives {class}");
        }
    }
    Ok(())
}
