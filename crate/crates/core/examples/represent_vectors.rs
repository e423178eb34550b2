//! Canonical labels and explicit lattice vectors.
//!
//! A class `v` with invariants `(d, n)` lies in the lattice of a host divisor when
//! `v = xL + yβ'`; `represent` lists those `(x, y)`.

use num_bigint::BigInt;

use k3nl::{equivalent, represent, represent_exhaustive, Genus, NlPair};

fn main() -> Result<(), k3nl::Error> {
    let g7 = Genus::new(7)?;

    let pair = NlPair::new(g7, 17, 24);
    let class = pair.canonicalize()?;
    println!("{pair} has discriminant {} and standard label {class}", pair.discriminant());
    println!("{pair} ~ {}: {}", class.standard_pair(), equivalent(&pair, &class.standard_pair())?);

    let host = NlPair::new(g7, 5, 2).canonicalize()?;
    let target = NlPair::new(g7, 2, 0);
    let solutions = represent(&host, &target, &BigInt::from(10))?;
    assert_eq!(solutions, represent_exhaustive(&host, &target, 10)?);
    for (x, y) in &solutions {
        println!("{target} = {x}·L + {y}·β' with β' = {}", host.standard_pair());
    }
    Ok(())
}
