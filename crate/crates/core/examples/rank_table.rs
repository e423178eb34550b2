//! Rank of the NL span for a range of genera, with every term of the closed formula.
//!
//!     cargo run --example rank_table -- 2 30

use k3nl::{betti2, rho, Genus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (lo, hi) = match args[..] {
        [a, b] => (a, b),
        [a] => (a, a),
        _ => (2, 20),
    };
    println!("{:>4} {:>5} {:>8} {:>6} {:>5} {:>10} {:>4}", "g", "rho", "leading", "alpha", "beta", "frac_sum", "sq");
    for g in lo..=hi {
        let b = rho(Genus::new(g)?)?;
        println!(
            "{:>4} {:>5} {:>8} {:>6} {:>5} {:>10} {:>4}",
            b.g,
            b.rho,
            b.leading.to_string(),
            b.alpha,
            b.beta,
            b.frac_sum.to_string(),
            b.square_count
        );
    }
    // b₂ = ρ_g + 1 once the Hodge class is added back
    println!("b2(K_12) = {}", betti2(Genus::new(12)?)?);
    Ok(())
}
