use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pogamma::analysis::analyze;
use pogamma::enumerate::EnumSpec;
use pogamma::io::{self, LoadError, ReportDocument, StructureDoc};
use pogamma::model::{validate_compatibility, validate_gamma_tables, validate_order};
use pogamma::sweep::{sweep, SweepOptions, SweepReport};
use pogamma::theorems::{run_selected, CheckReport, TheoremId};
use pogamma::PoGammaSemigroup;

const PASS: u8 = 0;
const VIOLATION: u8 = 1;
const CANNOT_CHECK: u8 = 2;

#[derive(Parser)]
#[command(name = "pogamma", version, about = "Finite ordered Γ-semigroup workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum TheoremFilter {
    All,
    One(TheoremId),
}

fn parse_filter(s: &str) -> Result<TheoremFilter, String> {
    if s == "all" {
        Ok(TheoremFilter::All)
    } else {
        s.parse().map(TheoremFilter::One).map_err(|e| e.to_string())
    }
}

fn selected(filters: &[TheoremFilter]) -> Vec<TheoremId> {
    if filters.is_empty() || filters.contains(&TheoremFilter::All) {
        return TheoremId::ALL.to_vec();
    }
    TheoremId::ALL
        .into_iter()
        .filter(|t| filters.contains(&TheoremFilter::One(*t)))
        .collect()
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a structure file against every axiom.
    Validate {
        path: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Regularity witnesses, generated bi-ideals and all bi-ideals.
    Analyze {
        path: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Run theorem checkers on one structure.
    Check {
        path: PathBuf,
        /// prop2, prop3, prop4, prop5, prop6-forward, prop6-converse, remark7, thm8, thm9 or all.
        #[arg(long = "theorem", value_parser = parse_filter)]
        theorems: Vec<TheoremFilter>,
        /// Accept orders that are not compatible with the tables (diagnostics only).
        #[arg(long)]
        no_compat_check: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Enumerate every structure of the given size and run the checkers.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long = "theorem", value_parser = parse_filter)]
        theorems: Vec<TheoremFilter>,
        /// One representative per isomorphism class.
        #[arg(long)]
        canonical: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Sweep every size up to (n, m), not just (n, m).
        #[arg(long)]
        cumulative: bool,
        /// Γ-semigroups with the discrete order only.
        #[arg(long)]
        discrete_only: bool,
        /// Include orders incompatible with the tables (diagnostics only).
        #[arg(long)]
        no_compat_check: bool,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Validate { path, output } => cmd_validate(&path, &output),
        Command::Analyze { path, output } => cmd_analyze(&path, &output),
        Command::Check {
            path,
            theorems,
            no_compat_check,
            output,
        } => cmd_check(&path, &selected(&theorems), no_compat_check, &output),
        Command::Sweep {
            n,
            m,
            theorems,
            canonical,
            workers,
            cumulative,
            discrete_only,
            no_compat_check,
            output,
        } => {
            let sizes: Vec<(usize, usize)> = if cumulative {
                (1..=n).flat_map(|i| (1..=m).map(move |j| (i, j))).collect()
            } else {
                vec![(n, m)]
            };
            let runs = sizes
                .into_iter()
                .map(|(n, m)| {
                    let mut opts = SweepOptions::new(EnumSpec::new(n, m).canonical(canonical).require_order(!discrete_only));
                    opts.theorems = selected(&theorems);
                    opts.workers = workers;
                    opts.include_incompatible = no_compat_check;
                    opts
                })
                .collect::<Vec<_>>();
            cmd_sweep(&runs, &output)
        }
    };
    ExitCode::from(code)
}

fn emit(output: &Output, text: &str) -> Result<(), u8> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            CANNOT_CHECK
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report_load_error(e: &LoadError) -> u8 {
    eprintln!("error: {e}");
    if let LoadError::Validation(_, report) = e {
        for f in report.failures.iter().skip(1) {
            eprintln!("  also: {}: {f}", f.axiom);
        }
    }
    CANNOT_CHECK
}

fn cmd_validate(path: &Path, output: &Output) -> u8 {
    let doc = match io::read_doc(path) {
        Ok(doc) => doc,
        Err(e) => return report_load_error(&e),
    };
    match doc.to_structure() {
        Ok(s) => {
            let report = validate_gamma_tables(s.tables())
                .merge(validate_order(s.order()))
                .merge(validate_compatibility(s.tables(), s.order()));
            let text = match output.format {
                Format::Text => format!("{}: valid (n={}, m={})\n", path.display(), s.n(), s.m()),
                Format::Machine => io::to_machine(&ReportDocument::new("validation", report)),
            };
            emit(output, &text).err().unwrap_or(PASS)
        }
        Err(e) => {
            if let (Format::Machine, LoadError::Validation(_, report)) = (output.format, &e) {
                let _ = emit(output, &io::to_machine(&ReportDocument::new("validation", report.clone())));
            }
            report_load_error(&e)
        }
    }
}

fn cmd_analyze(path: &Path, output: &Output) -> u8 {
    let doc = match io::read_doc(path) {
        Ok(doc) => doc,
        Err(e) => return report_load_error(&e),
    };
    let s = match doc.to_structure() {
        Ok(s) => s,
        Err(e) => return report_load_error(&e),
    };
    let report = analyze(&s, doc.name.as_deref());
    let text = match output.format {
        Format::Text => report.to_text(),
        Format::Machine => io::to_machine(&ReportDocument::new("analysis", report)),
    };
    emit(output, &text).err().unwrap_or(PASS)
}

fn load_for_check(doc: &StructureDoc, no_compat_check: bool) -> Result<PoGammaSemigroup, LoadError> {
    if no_compat_check {
        doc.to_structure_without_compatibility()
    } else {
        doc.to_structure()
    }
}

fn check_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "pass" } else { "VIOLATION" };
        let _ = writeln!(out, "{:<15} {:<9} {}", r.theorem.as_str(), status, r.detail);
        if let Some(w) = &r.witness {
            let subsets: Vec<String> = w.subsets.iter().map(|s| s.to_string()).collect();
            let _ = writeln!(
                out,
                "{:<25} witness: side={} elements={:?} letters={:?} subsets=[{}]",
                "",
                w.side,
                w.elements,
                w.letters,
                subsets.join(", ")
            );
        }
    }
    out
}

fn cmd_check(path: &Path, theorems: &[TheoremId], no_compat_check: bool, output: &Output) -> u8 {
    let s = match io::read_doc(path).and_then(|doc| load_for_check(&doc, no_compat_check)) {
        Ok(s) => s,
        Err(e) => return report_load_error(&e),
    };
    let reports = run_selected(&s, theorems);
    let all_pass = reports.iter().all(CheckReport::passed);
    let text = match output.format {
        Format::Text => check_text(&reports),
        Format::Machine => io::to_machine(&ReportDocument::new("check", reports)),
    };
    if let Err(code) = emit(output, &text) {
        return code;
    }
    if all_pass {
        PASS
    } else {
        VIOLATION
    }
}

fn sweep_text(r: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "n={} m={} canonical={} ordered={}: {} table families, {} labeled structures, {} checked",
        r.n, r.m, r.canonical, r.require_order, r.table_families, r.labeled_structures, r.structures
    );
    let c = &r.classes;
    let _ = writeln!(
        out,
        "  classes: regular {}, left regular {}, right regular {}, completely regular {}, strongly regular {}",
        c.regular, c.left_regular, c.right_regular, c.completely_regular, c.strongly_regular
    );
    for t in &r.per_theorem {
        let _ = writeln!(out, "  {:<15} pass {:>7}  violations {}", t.theorem.as_str(), t.passes, t.violations);
    }
    let _ = writeln!(
        out,
        "  every bi-ideal B = (BΓB] yet not completely regular: {}",
        r.prop6_converse_gap.count
    );
    for v in &r.violations {
        let _ = writeln!(out, "  VIOLATION {}: {}", v.report.theorem, v.report.detail);
        for line in v.structure.to_text().lines() {
            let _ = writeln!(out, "    {line}");
        }
    }
    out
}

fn cmd_sweep(runs: &[SweepOptions], output: &Output) -> u8 {
    let mut reports = Vec::with_capacity(runs.len());
    for opts in runs {
        match sweep(opts) {
            Ok(r) => reports.push(r),
            Err(e) => {
                eprintln!("error: {e}");
                eprintln!("hint: exhaustive sweeps are meant for desk-scale sizes such as --n 3 --m 2 or --n 4 --m 1");
                return CANNOT_CHECK;
            }
        }
    }
    let all_pass = reports.iter().all(SweepReport::passed);
    let text = match output.format {
        Format::Text => reports.iter().map(sweep_text).collect(),
        Format::Machine => io::to_machine(&ReportDocument::new("sweep", reports)),
    };
    if let Err(code) = emit(output, &text) {
        return code;
    }
    if all_pass {
        PASS
    } else {
        VIOLATION
    }
}
