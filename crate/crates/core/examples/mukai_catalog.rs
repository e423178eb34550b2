//! The Mukai-model catalog: dimension counts, degrees, and the genus-12 GIT data.
//! Also shows how a perturbed catalog is caught.

use k3nl::mukai::git_facts;
use k3nl::MukaiCatalog;

fn main() -> Result<(), k3nl::Error> {
    let catalog = MukaiCatalog::default();
    for m in &catalog.models {
        println!(
            "g = {:>2}  {} in {}  ({} - {} + {} = {})",
            m.g,
            m.parameter_space.name(),
            m.ambient.name(),
            m.parameter_dim(),
            m.group_dim(),
            m.fiber_dim,
            m.moduli_dim()
        );
        for c in catalog.check_dimensions(m.g)?.iter().chain([&catalog.check_degrees(m.g)?]) {
            println!("    {} {}: {}", c.status(), c.name, c.detail);
        }
    }
    for c in git_facts(12) {
        println!("GIT {} {}: {}", c.status(), c.name, c.detail);
    }

    let mut broken = catalog.clone();
    broken.models[2].fiber_dim += 1;
    let failed = broken.check_dimensions(broken.models[2].g)?.into_iter().filter(|c| !c.passed).count();
    println!("perturbed catalog: {failed} failing check(s)");
    Ok(())
}
