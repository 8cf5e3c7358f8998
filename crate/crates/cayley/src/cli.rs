//! Command-line surface. Exit codes are a stable contract: 0 success,
//! 2 input or parse error, 3 resource cap exceeded, 4 internal invariant
//! violation. `verify-paper` exits 1 when any check fails.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::census::census;
use crate::construct::ConstructError;
use crate::corpus::default_corpus;
use crate::enumerate::{enumerate_groups, scan_enumerated, scan_groups, ScanHit};
use crate::expr::parse_spec;
use crate::group::Group;
use crate::structure::subgroup_lattice;
use crate::verify::run_checks;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "cayley",
    about = "Finite group tables: censuses, deficiency scans, enumeration, lattices",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads for corpus scans (defaults to the rayon default).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Reserved; all algorithms are deterministic and ignore it.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Cyclic-subgroup census of one group expression.
    Census {
        /// Group expression, e.g. "Q(8)" or "C(2)xC(2)xC(3)".
        spec: String,
    },
    /// List groups with a given deficiency |G| - |C(G)|.
    Scan(ScanArgs),
    /// Enumerate all groups of one order up to isomorphism.
    Enumerate {
        order: usize,
        /// Emit the full multiplication tables, not just counts.
        #[arg(long)]
        tables: bool,
        /// Allow orders 13..=16 (slower search).
        #[arg(long)]
        allow_large: bool,
    },
    /// Subgroup lattice of one group expression (order capped at 256).
    Lattice {
        spec: String,
    },
    /// Run the built-in verification suite over the shipped claims.
    VerifyPaper {
        /// Corrupt the dihedral(10) fixture first; the suite must then
        /// report a named FAIL (negative control).
        #[arg(long, hide = true)]
        tamper: bool,
    },
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Largest order to consider.
    #[arg(long)]
    max: usize,
    /// Deficiency to match.
    #[arg(long)]
    delta: usize,
    /// Scan all isomorphism classes via enumeration.
    #[arg(long, group = "mode", required = true)]
    enumerate: bool,
    /// Scan a corpus: the built-in family corpus, or a manifest file with
    /// one group expression per line ('#' starts a comment).
    #[arg(long, group = "mode", num_args = 0..=1, value_name = "FILE")]
    corpus: Option<Option<PathBuf>>,
    /// Allow enumeration orders 13..=16.
    #[arg(long)]
    allow_large: bool,
}

/// Parses argv and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match cli.cmd {
        Cmd::Census { spec } => cmd_census(&spec, cli.format),
        Cmd::Scan(args) => cmd_scan(args, cli.format),
        Cmd::Enumerate { order, tables, allow_large } => {
            cmd_enumerate(order, tables, allow_large, cli.format)
        }
        Cmd::Lattice { spec } => cmd_lattice(&spec, cli.format),
        Cmd::VerifyPaper { tamper } => cmd_verify(tamper, cli.format),
    }
}

fn realize_or_exit(spec_text: &str) -> Result<Group, i32> {
    let spec = match parse_spec(spec_text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return Err(EXIT_INPUT);
        }
    };
    match spec.realize() {
        Ok(g) => Ok(g),
        Err(e @ ConstructError::CapExceeded { .. }) => {
            eprintln!("error: {e}");
            Err(EXIT_CAP)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Err(EXIT_INPUT)
        }
    }
}

/// Serialized census; field names are a stable contract.
#[derive(Debug, Serialize)]
pub struct CensusReport {
    pub label: String,
    pub order: usize,
    pub c: BTreeMap<usize, usize>,
    pub pi_e: Vec<usize>,
    pub pi: Vec<usize>,
    pub pi_c: Vec<usize>,
    pub num_cyclic: usize,
    pub delta: usize,
    pub identity_order_sum: bool,
    pub identity_eq1: bool,
}

impl CensusReport {
    pub fn new(g: &Group) -> Self {
        let c = census(g);
        CensusReport {
            label: g.label_or_default(),
            order: c.group_order,
            pi_e: c.pi_e.iter().copied().collect(),
            pi: c.pi.iter().copied().collect(),
            pi_c: c.pi_c.iter().copied().collect(),
            num_cyclic: c.num_cyclic,
            delta: c.delta,
            identity_order_sum: c.order_sum_identity(),
            identity_eq1: c.eq1_identity(),
            c: c.c,
        }
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn cmd_census(spec_text: &str, format: Format) -> i32 {
    let g = match realize_or_exit(spec_text) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let report = CensusReport::new(&g);
    if !report.identity_order_sum || !report.identity_eq1 {
        eprintln!("internal error: census identities violated for {}", report.label);
        return EXIT_INTERNAL;
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        Format::Csv => {
            println!("label,order,num_cyclic,delta,pi_e,pi,pi_c,c,identity_order_sum,identity_eq1");
            let c_field: Vec<String> =
                report.c.iter().map(|(k, v)| format!("{k}:{v}")).collect();
            println!(
                "\"{}\",{},{},{},{},{},{},{},{},{}",
                report.label,
                report.order,
                report.num_cyclic,
                report.delta,
                join(&report.pi_e, ";"),
                join(&report.pi, ";"),
                join(&report.pi_c, ";"),
                c_field.join(";"),
                report.identity_order_sum,
                report.identity_eq1,
            );
        }
        Format::Table => {
            println!("label: {}", report.label);
            println!("order: {}", report.order);
            println!("pi_e:  {}", join(&report.pi_e, " "));
            println!("pi:    {}", join(&report.pi, " "));
            println!("pi_c:  {}", join(&report.pi_c, " "));
            let c_field: Vec<String> =
                report.c.iter().map(|(k, v)| format!("{k}:{v}")).collect();
            println!("c:     {}", c_field.join(" "));
            println!("num_cyclic: {}", report.num_cyclic);
            println!("delta: {}", report.delta);
            println!(
                "identities: order_sum={} eq1={}",
                report.identity_order_sum, report.identity_eq1
            );
        }
    }
    EXIT_OK
}

fn load_manifest(path: &PathBuf, max_order: usize) -> Result<Vec<(String, Group)>, i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(EXIT_INPUT);
        }
    };
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let spec = match parse_spec(line) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: line {}: {e}", lineno + 1);
                return Err(EXIT_INPUT);
            }
        };
        match spec.realize() {
            Ok(g) => {
                if g.order() <= max_order {
                    entries.push((spec.to_string(), g));
                }
            }
            Err(e @ ConstructError::CapExceeded { .. }) => {
                eprintln!("error: line {}: {e}", lineno + 1);
                return Err(EXIT_CAP);
            }
            Err(e) => {
                eprintln!("error: line {}: {e}", lineno + 1);
                return Err(EXIT_INPUT);
            }
        }
    }
    Ok(entries)
}

fn print_hits(hits: &[ScanHit], format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(hits).unwrap()),
        Format::Csv => {
            println!("order,name,delta");
            for h in hits {
                println!("{},\"{}\",{}", h.order, h.name, h.delta);
            }
        }
        Format::Table => {
            for h in hits {
                println!("{:>5}  {:>5}  {}", h.order, h.delta, h.name);
            }
            println!("{} match(es)", hits.len());
        }
    }
}

fn cmd_scan(args: ScanArgs, format: Format) -> i32 {
    let hits = if args.enumerate {
        match scan_enumerated(args.max, args.delta, args.allow_large) {
            Ok(h) => h,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_CAP;
            }
        }
    } else {
        let entries = match args.corpus {
            Some(Some(path)) => match load_manifest(&path, args.max) {
                Ok(e) => e,
                Err(code) => return code,
            },
            _ => default_corpus()
                .into_iter()
                .filter(|(_, g)| g.order() <= args.max)
                .collect(),
        };
        scan_groups(&entries, args.delta)
    };
    print_hits(&hits, format);
    EXIT_OK
}

#[derive(Serialize)]
struct EnumerateReport {
    order: usize,
    count: usize,
    labels: Vec<String>,
    stats: crate::enumerate::SearchStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    tables: Option<Vec<String>>,
}

fn cmd_enumerate(order: usize, tables: bool, allow_large: bool, format: Format) -> i32 {
    let report = match enumerate_groups(order, allow_large) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CAP;
        }
    };
    let labels: Vec<String> =
        report.representatives.iter().map(|g| g.label_or_default()).collect();
    match format {
        Format::Json => {
            let out = EnumerateReport {
                order: report.order,
                count: report.count,
                labels,
                stats: report.stats,
                tables: tables.then(|| {
                    report.representatives.iter().map(|g| g.to_table_string()).collect()
                }),
            };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            println!("order,count,nodes,completed,iso_rejections");
            println!(
                "{},{},{},{},{}",
                report.order,
                report.count,
                report.stats.nodes,
                report.stats.completed,
                report.stats.iso_rejections
            );
        }
        Format::Table => {
            println!("order {}: {} classes", report.order, report.count);
            for l in &labels {
                println!("  {l}");
            }
            println!(
                "search: {} nodes, {} tables completed, {} iso-rejections",
                report.stats.nodes, report.stats.completed, report.stats.iso_rejections
            );
            if tables {
                for g in &report.representatives {
                    println!();
                    print!("{}", g.to_table_string());
                }
            }
        }
    }
    EXIT_OK
}

#[derive(Serialize)]
struct LatticeReport {
    label: String,
    order: usize,
    count: usize,
    subgroups: Vec<Vec<usize>>,
}

fn cmd_lattice(spec_text: &str, format: Format) -> i32 {
    let g = match realize_or_exit(spec_text) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let lat = match subgroup_lattice(&g) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CAP;
        }
    };
    match format {
        Format::Json => {
            let out = LatticeReport {
                label: g.label_or_default(),
                order: g.order(),
                count: lat.len(),
                subgroups: lat.subgroups.iter().map(|s| s.members()).collect(),
            };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            println!("index,size,members");
            for (i, s) in lat.subgroups.iter().enumerate() {
                println!("{},{},\"{}\"", i, s.len(), join(&s.members(), ";"));
            }
        }
        Format::Table => {
            println!("{}: {} subgroups", g.label_or_default(), lat.len());
            for (i, s) in lat.subgroups.iter().enumerate() {
                println!("  #{:<3} size {:<4} {{{}}}", i, s.len(), join(&s.members(), " "));
            }
        }
    }
    EXIT_OK
}

#[derive(Serialize)]
struct VerifyReport {
    checks: Vec<crate::verify::Check>,
    passed: usize,
    failed: usize,
}

fn cmd_verify(tamper: bool, format: Format) -> i32 {
    let checks = run_checks(tamper);
    let passed = checks.iter().filter(|c| c.pass).count();
    let failed = checks.len() - passed;
    match format {
        Format::Json => {
            let out = VerifyReport { checks, passed, failed };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            if out.failed == 0 {
                EXIT_OK
            } else {
                1
            }
        }
        Format::Csv => {
            println!("id,pass,details");
            for c in &checks {
                println!("{},{},\"{}\"", c.id, c.pass, c.details.replace('"', "'"));
            }
            if failed == 0 {
                EXIT_OK
            } else {
                1
            }
        }
        Format::Table => {
            for c in &checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                println!("{tag}  {:<32} {}", c.id, c.details);
            }
            println!("verify-paper: {passed} passed, {failed} failed");
            if failed == 0 {
                EXIT_OK
            } else {
                1
            }
        }
    }
}
