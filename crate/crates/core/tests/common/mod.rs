//! Independent oracles. Nothing here calls into the code paths it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Primes below `limit` by trial division.
pub fn primes_below(limit: u64) -> Vec<u64> {
    (2..limit)
        .filter(|&p| (2..).take_while(|q| q * q <= p).all(|q| p % q != 0))
        .collect()
}

/// Prime factors of `n` with multiplicity, by trial division.
pub fn factor(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Legendre symbol table for an odd prime `p`: entry `a` is `(a/p)` for `0 ≤ a < p`,
/// from the set of squares mod `p`.
pub fn legendre_table(p: u64) -> Vec<i8> {
    let mut table = vec![-1i8; p as usize];
    table[0] = 0;
    for x in 1..p {
        table[((x * x) % p) as usize] = 1;
    }
    table
}

/// `(a/b)` for all residues `a mod b`, as a product of Legendre symbols over the
/// factorization of `b`.
pub fn jacobi_row(b: u64, tables: &std::collections::HashMap<u64, Vec<i8>>) -> Vec<i8> {
    let factors = factor(b);
    (0..b)
        .map(|a| {
            factors
                .iter()
                .map(|p| tables[p][(a % p) as usize])
                .product()
        })
        .collect()
}

pub fn jacobi_oracle(a: i64, b: u64) -> i8 {
    factor(b)
        .iter()
        .map(|&p| legendre_table(p)[a.rem_euclid(p as i64) as usize])
        .product()
}

fn fold(d: i128, ell: i128) -> i128 {
    let s = d.rem_euclid(ell);
    s.min(ell - s)
}

/// Canonical hosts `(Δ', r')` of `C^g_{d,n}`, by scanning `v = xL + yβ'` over
/// `1 ≤ y ≤ bound`, `|x| ≤ bound` and solving for the invariants of `β'`.
pub fn decompose_oracle(g: i128, d: i128, n: i128, bound: i128) -> BTreeSet<(i128, i128)> {
    let ell = 2 * g - 2;
    let mut hosts = BTreeSet::new();
    for y in 1..=bound {
        for x in -bound..=bound {
            let num = d - x * ell;
            if num % y != 0 {
                continue;
            }
            let dp = num / y;
            let rest = n - x * x * ell - 2 * x * y * dp;
            if rest % (y * y) != 0 {
                continue;
            }
            let np = rest / (y * y);
            if np % 2 != 0 {
                continue;
            }
            let delta = dp * dp - ell * np;
            if delta > 0 {
                hosts.insert((delta, fold(dp, ell)));
            }
        }
    }
    hosts
}

/// Non-BN pairs by plain enumeration of the three inequalities in rational arithmetic
/// (numerators and denominators kept separately).
pub fn nonbn_oracle(g: i64) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for n in (0..=4 * g).step_by(2) {
        for d in 1..=3 * g {
            // 2·h⁰(M) = n + 4, 2·h⁰(N) = 2g + n + 2 − 2d
            let hm2 = n + 4;
            let hn2 = 2 * g + n + 2 - 2 * d;
            if hm2 * hn2 >= 4 * (g + 1) && hn2 >= hm2 && d * d > n * (2 * g - 2) {
                out.insert((d, n));
            }
        }
    }
    out
}

pub mod cli {
    use std::process::Command;

    use serde_json::Value;

    pub struct Run {
        pub code: i32,
        pub stdout: String,
        pub stderr: String,
    }

    pub fn run(args: &[&str]) -> Run {
        let out = Command::new(env!("CARGO_BIN_EXE_k3nl"))
            .args(args)
            .env_remove("K3NL_FORMAT")
            .output()
            .expect("binary runs");
        Run {
            code: out.status.code().unwrap_or(-1),
            stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
            stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        }
    }

    fn flat(v: &Value) -> String {
        match v {
            Value::Null => String::new(),
            Value::String(s) => s.clone(),
            Value::Array(items) => items.iter().map(flat).collect::<Vec<_>>().join(" "),
            other => other.to_string(),
        }
    }

    /// Commands exercised for cross-format equivalence, with the JSON key holding the rows.
    pub const COMMANDS: &[(&[&str], &str)] = &[
        (&["rho", "--g", "2..10"], "genera"),
        (&["nonbn", "--g", "10"], "members"),
        (&["nonbn", "--g", "7", "--method", "system"], "members"),
        (&["canon", "--g", "7", "--d", "17", "--n", "24"], "members"),
        (&["decompose", "--g", "7", "--d", "2", "--n", "0"], "members"),
        (&["decompose", "--g", "6", "--d", "0", "--n", "-2"], "members"),
        (
            &["represent", "--g", "7", "--host-d", "5", "--host-n", "2", "--d", "2", "--n", "0"],
            "solutions",
        ),
        (&["generators", "--g", "12"], "members"),
        (&["elliptic", "--g", "7", "--d-max", "7"], "members"),
        (&["relation"], "checks"),
        (&["catalog"], "models"),
        (&["report"], "checks"),
        (&["jacobi", "--a", "5", "--b", "19"], "values"),
    ];

    /// JSON rows and CSV rows carry identical cells. Returns the number of rows compared.
    pub fn cross_format(args: &[&str], rows_key: &str) -> Result<usize, String> {
        let with = |fmt: &str| {
            let mut a: Vec<&str> = args.to_vec();
            a.extend(["--format", fmt]);
            run(&a)
        };
        let json_run = with("json");
        let csv_run = with("csv");
        if json_run.code != 0 || csv_run.code != 0 {
            return Err(format!(
                "{args:?}: exit codes {} / {}: {}",
                json_run.code, csv_run.code, json_run.stderr
            ));
        }
        let doc: Value = serde_json::from_str(&json_run.stdout).map_err(|e| e.to_string())?;
        let results = &doc["results"];
        let rows = results[rows_key]
            .as_array()
            .ok_or_else(|| format!("{args:?}: results.{rows_key} missing"))?;
        let mut reader = csv::Reader::from_reader(csv_run.stdout.as_bytes());
        let header: Vec<String> = reader
            .headers()
            .map_err(|e| e.to_string())?
            .iter()
            .map(str::to_string)
            .collect();
        let records: Vec<csv::StringRecord> =
            reader.records().collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        if records.len() != rows.len() {
            return Err(format!("{args:?}: {} csv rows vs {} json rows", records.len(), rows.len()));
        }
        for (rec, row) in records.iter().zip(rows) {
            for (col, cell) in header.iter().zip(rec.iter()) {
                let v = row.get(col).unwrap_or(&results[col.as_str()]);
                if flat(v) != cell {
                    return Err(format!("{args:?}: column {col}: csv {cell:?} vs json {v}"));
                }
            }
        }
        Ok(rows.len())
    }
}
