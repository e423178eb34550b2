//! Command-line front end. Machine output goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 2 usage, 3 non-integral rank, 4 domain error, 5 failed report check.

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::divisor::{
    check_peterson_relation, decompose, elliptic_divisors, generators, minimum_bound,
    peterson_relation, Check,
};
use crate::error::Error;
use crate::lattice::{represent, CanonicalDivisor, Genus, NlPair};
use crate::mukai::{git_facts, MukaiCatalog};
use crate::nonbn::{nonbn_closed_form, nonbn_system, NonBnList};
use crate::output::{int, Document, Format};
use crate::rank::rho;
use crate::reference::PROVENANCE;
use crate::report::build_report;

pub const FORMAT_ENV: &str = "K3NL_FORMAT";
pub const MAX_GENUS: u32 = 10_000;

#[derive(Debug, Parser)]
#[command(name = "k3nl", version, about = "Noether-Lefschetz divisors on moduli of K3 surfaces")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, env = FORMAT_ENV, default_value = "table")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NonBnMethod {
    ClosedForm,
    System,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank of the NL span, term by term.
    Rho {
        /// Genus `g` or inclusive range `a..b`.
        #[arg(long, value_parser = parse_genus_range)]
        g: RangeInclusive<u32>,
    },
    /// Divisors covering the non-Brill-Noether-general locus.
    Nonbn {
        #[arg(long, value_parser = parse_genus)]
        g: u32,
        #[arg(long, value_enum, default_value = "closed-form")]
        method: NonBnMethod,
    },
    /// Canonical form of D_{d,n}.
    Canon {
        #[arg(long, value_parser = parse_genus)]
        g: u32,
        #[arg(long, allow_negative_numbers = true)]
        d: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
    },
    /// Irreducible NL divisors supporting C_{d,n}.
    Decompose {
        #[arg(long, value_parser = parse_genus)]
        g: u32,
        #[arg(long, allow_negative_numbers = true)]
        d: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
        /// Search bound; defaults to the smallest accepted value.
        #[arg(long)]
        bound: Option<BigInt>,
    },
    /// Vectors xL + yB in the lattice of D_{host-d,host-n} with invariants (d, n).
    Represent {
        #[arg(long, value_parser = parse_genus)]
        g: u32,
        #[arg(long, allow_negative_numbers = true)]
        host_d: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        host_n: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        d: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, default_value = "10")]
        bound: BigInt,
    },
    /// Generators of Pic_Q(K_g) for g = 6..10, 12.
    Generators {
        #[arg(long, value_parser = parse_genus)]
        g: u32,
    },
    /// Elliptic divisors D_{d,0}, d = 1..d-max.
    Elliptic {
        #[arg(long, value_parser = parse_genus)]
        g: u32,
        #[arg(long, default_value = "1")]
        d_max: u64,
    },
    /// Structural checks on the genus-12 relation.
    Relation,
    /// Mukai-model catalog with consistency checks.
    Catalog {
        #[arg(long, value_parser = parse_genus)]
        g: Option<u32>,
        /// Print the catalog itself as JSON, in the form `report --catalog` reads.
        #[arg(long)]
        raw: bool,
    },
    /// Full verification report over g = 6..10, 12.
    Report {
        /// Catalog JSON to use instead of the built-in one.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Jacobi symbol (a/b).
    Jacobi {
        #[arg(long, allow_negative_numbers = true)]
        a: BigInt,
        #[arg(long, allow_negative_numbers = true)]
        b: BigInt,
    },
}

fn parse_genus(s: &str) -> Result<u32, String> {
    let g: u32 = s.trim().parse().map_err(|e| format!("invalid genus {s:?}: {e}"))?;
    if !(2..=MAX_GENUS).contains(&g) {
        return Err(format!("genus must lie in [2, {MAX_GENUS}], got {g}"));
    }
    Ok(g)
}

fn parse_genus_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse_genus(a)?, parse_genus(b)?);
            if a > b {
                return Err(format!("empty genus range {s:?}"));
            }
            Ok(a..=b)
        }
        None => parse_genus(s).map(|g| g..=g),
    }
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
    /// Document rendered, but at least one check failed.
    Checks(Box<Document>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(Error::NonIntegralRho { .. }) => 3,
            Failure::Domain(_) => 4,
            Failure::Checks(_) => 5,
        }
    }
}

fn genus(g: u32) -> Result<Genus, Failure> {
    Ok(Genus::new(g)?)
}

fn divisor_row(c: &CanonicalDivisor) -> Value {
    json!({
        "label": c.to_string(),
        "d": c.r(),
        "n": int(&c.n()),
        "delta": int(c.delta()),
        "r": c.r(),
    })
}

const DIVISOR_COLUMNS: &[&str] = &["g", "label", "d", "n", "delta", "r"];
const CHECK_COLUMNS: &[&str] = &["g", "name", "status", "detail"];

fn check_row(g: Option<u32>, c: &Check) -> Value {
    json!({
        "g": g,
        "name": c.name,
        "status": c.status(),
        "detail": c.detail,
    })
}

fn push_checks(doc: &mut Document, g: Option<u32>, checks: &[Check]) {
    for c in checks {
        doc.push_row(check_row(g, c));
    }
}

fn all_passed(doc: &Document) -> bool {
    doc.rows
        .iter()
        .all(|r| r.get("status").is_none_or(|s| s == "PASS"))
}

fn nonbn_document(list: &NonBnList, method: &str) -> Document {
    let mut doc = Document::new("nonbn", "members", DIVISOR_COLUMNS)
        .input("g", json!(list.genus.get()))
        .input("method", json!(method));
    doc.scalar("g", json!(list.genus.get()));
    doc.scalar("count", json!(list.pairs.len()));
    for p in list.labels() {
        let c = p.canonicalize().expect("non-BN labels are valid");
        doc.push_row(divisor_row(&c));
    }
    doc
}

pub fn execute(command: &Command) -> Result<Document, Failure> {
    let doc = match command {
        Command::Rho { g } => {
            let input = if g.start() == g.end() {
                json!(g.start())
            } else {
                json!(format!("{}..{}", g.start(), g.end()))
            };
            let mut doc = Document::new(
                "rho",
                "genera",
                &["g", "rho", "leading", "alpha", "beta", "frac_sum", "square_count"],
            )
            .input("g", input);
            for h in g.clone() {
                let b = rho(genus(h)?)?;
                doc.push_row(json!({
                    "g": b.g,
                    "rho": b.rho,
                    "leading": b.leading.to_string(),
                    "alpha": b.alpha,
                    "beta": b.beta,
                    "frac_sum": b.frac_sum.to_string(),
                    "square_count": b.square_count,
                }));
            }
            doc
        }
        Command::Nonbn { g, method } => {
            let genus = genus(*g)?;
            match method {
                NonBnMethod::ClosedForm => nonbn_document(&nonbn_closed_form(genus), "closed_form"),
                NonBnMethod::System => nonbn_document(&nonbn_system(genus), "system"),
            }
        }
        Command::Canon { g, d, n } => {
            let pair = NlPair::new(genus(*g)?, d.clone(), n.clone());
            let c = pair.canonicalize()?;
            let mut doc = Document::new("canon", "members", DIVISOR_COLUMNS)
                .input("g", json!(g))
                .input("d", int(d))
                .input("n", int(n));
            doc.scalar("g", json!(g));
            doc.push_row(divisor_row(&c));
            doc
        }
        Command::Decompose { g, d, n, bound } => {
            let source = NlPair::new(genus(*g)?, d.clone(), n.clone());
            let bound = bound.clone().unwrap_or_else(|| minimum_bound(&source));
            let set = decompose(&source, &bound)?;
            let mut doc = Document::new("decompose", "members", DIVISOR_COLUMNS)
                .input("g", json!(g))
                .input("d", int(d))
                .input("n", int(n))
                .input("bound", int(&bound));
            doc.scalar("g", json!(g));
            doc.scalar("source_delta", int(&source.discriminant()));
            for c in &set.members {
                doc.push_row(divisor_row(c));
            }
            doc
        }
        Command::Represent {
            g,
            host_d,
            host_n,
            d,
            n,
            bound,
        } => {
            let genus = genus(*g)?;
            let host = NlPair::new(genus, host_d.clone(), host_n.clone()).canonicalize()?;
            let target = NlPair::new(genus, d.clone(), n.clone());
            let found = represent(&host, &target, bound)?;
            let mut doc = Document::new("represent", "solutions", &["g", "host", "x", "y"])
                .input("g", json!(g))
                .input("host_d", int(host_d))
                .input("host_n", int(host_n))
                .input("d", int(d))
                .input("n", int(n))
                .input("bound", int(bound));
            doc.scalar("g", json!(g));
            doc.scalar("host", json!(host.to_string()));
            for (x, y) in &found {
                doc.push_row(json!({"x": int(x), "y": int(y)}));
            }
            doc
        }
        Command::Generators { g } => {
            let set = generators(genus(*g)?)?;
            let mut doc = Document::new("generators", "members", DIVISOR_COLUMNS).input("g", json!(g));
            doc.scalar("g", json!(g));
            doc.scalar("expected_rank", json!(set.expected_rank));
            doc.scalar("relation_dim", json!(set.relation_dim));
            for c in &set.members {
                doc.push_row(divisor_row(c));
            }
            if *g == 6 {
                doc.provenance.push(PROVENANCE[5].to_string());
            }
            doc
        }
        Command::Elliptic { g, d_max } => {
            let e = elliptic_divisors(genus(*g)?, *d_max);
            let mut doc = Document::new("elliptic", "members", DIVISOR_COLUMNS)
                .input("g", json!(g))
                .input("d_max", json!(d_max));
            doc.scalar("g", json!(g));
            for c in &e.members {
                doc.push_row(divisor_row(c));
            }
            doc.extra.insert(
                "folded".into(),
                Value::Array(
                    e.folded
                        .iter()
                        .map(|(d, c)| json!({"input_d": d, "label": c.to_string(), "delta": int(c.delta()), "r": c.r()}))
                        .collect(),
                ),
            );
            doc
        }
        Command::Relation => {
            let rel = peterson_relation();
            let mut doc = Document::new("relation", "checks", CHECK_COLUMNS);
            doc.scalar("g", json!(rel.genus.get()));
            doc.extra.insert(
                "terms".into(),
                Value::Array(
                    rel.terms
                        .iter()
                        .map(|(c, p)| json!({"coefficient": c, "label": p.to_string()}))
                        .collect(),
                ),
            );
            push_checks(&mut doc, Some(12), &check_peterson_relation());
            doc.provenance.push(PROVENANCE[7].to_string());
            doc
        }
        // `--raw` bypasses the document layer; see `run`.
        Command::Catalog { g, .. } => catalog_document(&MukaiCatalog::default(), *g)?,
        Command::Report { catalog } => {
            let catalog = match catalog {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                    MukaiCatalog::from_json(&text)
                        .map_err(|e| Failure::Usage(format!("bad catalog {}: {e}", path.display())))?
                }
                None => MukaiCatalog::default(),
            };
            report_document(&catalog)?
        }
        Command::Jacobi { a, b } => {
            let value = crate::jacobi::jacobi(a, b)?;
            let mut doc = Document::new("jacobi", "values", &["a", "b", "jacobi"])
                .input("a", int(a))
                .input("b", int(b));
            doc.push_row(json!({"a": int(a), "b": int(b), "jacobi": value}));
            doc
        }
    };
    if all_passed(&doc) {
        Ok(doc)
    } else {
        Err(Failure::Checks(Box::new(doc)))
    }
}

fn catalog_document(catalog: &MukaiCatalog, g: Option<u32>) -> Result<Document, Failure> {
    let mut doc = Document::new(
        "catalog",
        "models",
        &[
            "g",
            "ambient",
            "ambient_dim",
            "bundle",
            "section_space_dim",
            "parameter_space",
            "parameter_dim",
            "group",
            "group_dim",
            "fiber_dim",
            "moduli_dim",
            "surface_degree",
            "rs",
        ],
    );
    if let Some(g) = g {
        doc = doc.input("g", json!(g));
    }
    let models: Vec<_> = match g {
        Some(g) => vec![catalog.model(g)?],
        None => catalog.models.iter().collect(),
    };
    let mut checks = Vec::new();
    for m in models {
        doc.push_row(json!({
            "g": m.g,
            "ambient": m.ambient.name(),
            "ambient_dim": m.ambient.dim(),
            "bundle": m.bundle_desc,
            "section_space_dim": m.section_space_dim,
            "parameter_space": m.parameter_space.name(),
            "parameter_dim": m.parameter_dim(),
            "group": m.group.name(),
            "group_dim": m.group_dim(),
            "fiber_dim": m.fiber_dim,
            "moduli_dim": m.moduli_dim(),
            "surface_degree": m.surface_degree() as u64,
            "rs": m.rs_factorization.map(|(r, s)| format!("{r}*{s}")),
        }));
        let mut cs = catalog.check_dimensions(m.g)?;
        cs.push(catalog.check_degrees(m.g)?);
        cs.extend(git_facts(m.g));
        for c in &cs {
            checks.push(check_row(Some(m.g), c));
        }
    }
    let failed = checks.iter().any(|c| c["status"] != "PASS");
    doc.extra.insert("checks".into(), Value::Array(checks));
    doc.provenance.push(PROVENANCE[8].to_string());
    doc.provenance.push(PROVENANCE[9].to_string());
    if failed {
        return Err(Failure::Checks(Box::new(doc)));
    }
    Ok(doc)
}

fn report_document(catalog: &MukaiCatalog) -> Result<Document, Failure> {
    let report = build_report(catalog)?;
    let mut doc = Document::new("report", "checks", CHECK_COLUMNS);
    doc.group_by = Some("g".into());
    let genera: Vec<Value> = report
        .genera
        .iter()
        .map(|r| {
            json!({
                "g": r.genus.get(),
                "rho": r.rho.rho,
                "members": r.generators.members.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "relation_dim": r.generators.relation_dim,
                "decompositions": r.decompositions.iter().map(|s| json!({
                    "d": int(&s.source.d),
                    "n": int(&s.source.n),
                    "members": s.members.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    doc.extra.insert("genera".into(), Value::Array(genera));
    for (g, c) in report.all_checks() {
        doc.push_row(check_row(g, c));
    }
    let passed = report.passed();
    doc.scalar("summary", json!(if passed { "PASS" } else { "FAIL" }));
    doc.provenance = PROVENANCE.iter().map(|s| s.to_string()).collect();
    Ok(doc)
}

/// Parses `args`, runs the command and writes output. Returns the process exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Command::Catalog { raw: true, .. } = cli.command {
        println!("{}", MukaiCatalog::default().to_json());
        return ExitCode::SUCCESS;
    }
    match execute(&cli.command) {
        Ok(doc) => {
            print!("{}", doc.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Checks(doc) => {
                    print!("{}", doc.render(cli.format));
                    eprintln!("error: one or more checks failed");
                }
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Domain(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
