//! Structural checks on the recorded genus-12 relation, and on a relation that
//! deliberately uses a divisor outside the generator set (`D_{3,-2}`, discriminant 53).

use k3nl::{check_relation, peterson_relation, Genus, LinearRelation};

fn main() -> Result<(), k3nl::Error> {
    let relation = peterson_relation();
    let terms: Vec<String> = relation.terms.iter().map(|(c, p)| format!("{c:+}·{p}")).collect();
    println!("{} = 0", terms.join(" "));
    for check in check_relation(&relation) {
        println!("  {} {}: {}", check.status(), check.name, check.detail);
    }

    let bogus = LinearRelation::new(Genus::new(12)?, &[(1, 3, 0), (-1, 3, -2)]);
    for check in check_relation(&bogus) {
        println!("  {} {}: {}", check.status(), check.name, check.detail);
    }
    Ok(())
}
