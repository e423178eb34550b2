//! Which NL divisors make up the locus of surfaces carrying a class of given
//! degree and self-intersection.
//!
//!     cargo run --example decompose_loci -- 7 2 0

use k3nl::{decompose_default, Genus, NlPair};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let cases: Vec<(u32, i64, i64)> = match args[..] {
        [g, d, n] => vec![(u32::try_from(g)?, d, n)],
        _ => (2..=12).map(|g| (g, 2, 0)).collect(),
    };
    for (g, d, n) in cases {
        let source = NlPair::new(Genus::new(g)?, d, n);
        let set = decompose_default(&source)?;
        let labels: Vec<String> = set.members.iter().map(|c| c.to_string()).collect();
        println!("g = {g:>2}  C_{{{d},{n}}} = {}", labels.join(" + "));
    }
    Ok(())
}
