//! `msuper`: build, evaluate and verify nonsymmetric Macdonald superpolynomials.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use msuper::arith::{latex_rat, render_rat};
use msuper::evaluation::{special_point, special_value};
use msuper::serial::{fermion_to_json, fermion_to_latex, super_from_json, super_to_json, super_to_latex};
use msuper::verify::{run, singular_probe, Suite, VerifyConfig};
use msuper::yang_baxter::Builder;
use msuper::{Composition, Error, FermionSet, Kind, ModuleLabel, SuperPoly};

#[derive(Parser)]
#[command(name = "msuper", version, about = "Nonsymmetric Macdonald superpolynomials over Q(q,t)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build M_{α,E} and print it.
    Build(Target),
    /// Evaluate at x⁽⁰⁾ or x⁽¹⁾ and compare with the closed form.
    Eval {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        point: Option<PointName>,
    },
    /// Print the fermionic eigenvector τ of a label.
    Tau(LabelArgs),
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "N-max", default_value_t = 5)]
        n_max: usize,
        #[arg(long = "deg-max", default_value_t = 3)]
        deg_max: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the reports as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether M stays an eigenfunction when q = t^e.
    Singular {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        e: i64,
    },
}

#[derive(Args)]
struct LabelArgs {
    #[arg(long = "N")]
    n: usize,
    /// Use the special label of this size when --label is absent.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long = "type", value_parser = ["0", "1"])]
    kind: String,
    /// Members of E or F, comma separated.
    #[arg(long)]
    label: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Target {
    #[command(flatten)]
    label: LabelArgs,
    #[arg(long)]
    alpha: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum PointName {
    X0,
    X1,
}

enum Fail {
    Usage(String),
    Internal(String),
    Mismatch,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Label(_) | Error::Domain(_) | Error::Index(_) => Fail::Usage(e.to_string()),
            _ => Fail::Internal(e.to_string()),
        }
    }
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, Fail> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| Fail::Usage(format!("bad {what} entry {x:?}")))).collect()
}

impl LabelArgs {
    fn label(&self) -> Result<ModuleLabel, Fail> {
        let kind = if self.kind == "0" { Kind::Type0 } else { Kind::Type1 };
        match (&self.label, self.m) {
            (Some(s), _) => {
                let members = parse_list(s, "label")?;
                let set = FermionSet::from_members(self.n, &members).map_err(|e| Fail::Usage(e.to_string()))?;
                let label = ModuleLabel::new(kind, self.n, set)?;
                if self.m.is_some_and(|m| m != label.m()) {
                    return Err(Fail::Usage(format!("--m disagrees with label {label}")));
                }
                Ok(label)
            }
            (None, Some(m)) => Ok(match kind {
                Kind::Type0 => ModuleLabel::type0_special(self.n, m)?,
                Kind::Type1 => ModuleLabel::type1_special(self.n, m)?,
            }),
            (None, None) => Err(Fail::Usage("one of --label or --m is required".into())),
        }
    }

    fn emit(&self, text: &str) -> Result<(), Fail> {
        match &self.out {
            Some(path) => fs::write(path, format!("{text}\n")).map_err(|e| Fail::Internal(format!("{}: {e}", path.display()))),
            None => {
                println!("{text}");
                Ok(())
            }
        }
    }
}

impl Target {
    fn resolve(&self) -> Result<(ModuleLabel, Composition), Fail> {
        let label = self.label.label()?;
        let alpha = Composition::from_usizes(&parse_list(&self.alpha, "alpha")?)?;
        if alpha.len() != label.n {
            return Err(Fail::Usage(format!("alpha has {} parts, expected {}", alpha.len(), label.n)));
        }
        Ok((label, alpha))
    }
}

/// Builds through the on-disk cache when MSUPER_CACHE_DIR is set.
fn build_cached(builder: &Builder, alpha: &Composition, label: &ModuleLabel) -> Result<SuperPoly, Fail> {
    let Some(dir) = std::env::var_os("MSUPER_CACHE_DIR").map(PathBuf::from) else {
        return Ok((*builder.build(alpha, label)?).clone());
    };
    let parts: Vec<String> = alpha.parts().iter().map(|a| a.to_string()).collect();
    let file = dir.join(format!("N{}-type{}-set{}-alpha{}.json", label.n, label.kind.index(), label.set.bits(), parts.join("_")));
    if let Ok(text) = fs::read_to_string(&file) {
        if let Ok(p) = super_from_json(&text) {
            return Ok(p);
        }
    }
    let p = (*builder.build(alpha, label)?).clone();
    // a failed cache write only costs a rebuild next time
    let _ = fs::create_dir_all(&dir).and_then(|_| fs::write(&file, super_to_json(&p)));
    Ok(p)
}

fn execute(cmd: Cmd) -> Result<(), Fail> {
    let builder = Builder::default();
    match cmd {
        Cmd::Build(target) => {
            let (label, alpha) = target.resolve()?;
            let p = build_cached(&builder, &alpha, &label)?;
            let text = match target.label.format {
                Format::Json => super_to_json(&p),
                Format::Latex => super_to_latex(&p),
            };
            target.label.emit(&text)
        }
        Cmd::Tau(args) => {
            let label = args.label()?;
            let tau = builder.tau(&label)?;
            let text = match args.format {
                Format::Json => fermion_to_json(&tau),
                Format::Latex => fermion_to_latex(&tau),
            };
            args.emit(&text)
        }
        Cmd::Eval { target, point } => {
            let (label, alpha) = target.resolve()?;
            let expected_point = if label.kind == Kind::Type0 { PointName::X0 } else { PointName::X1 };
            if point.is_some_and(|p| p != expected_point) {
                return Err(Fail::Usage(format!("type {} labels are evaluated at x{}", label.kind.index(), label.kind.index())));
            }
            if !label.is_special() {
                return Err(Fail::Usage(format!("closed forms exist only for special labels, got {label}")));
            }
            let value = special_value(&alpha, &label)?;
            let m = build_cached(&builder, &alpha, &label)?;
            let direct = m.substitute(&special_point(&label))?;
            let tau = SuperPoly::from_fermion(&builder.tau(&label)?);
            let matched = direct == tau.scale(&value);
            let shown = match target.label.format {
                Format::Json => serde_json::json!({ "V": render_rat(&value), "verdict": if matched { "MATCH" } else { "MISMATCH" } }).to_string(),
                Format::Latex => format!("V = {}\n{}", latex_rat(&value), if matched { "MATCH" } else { "MISMATCH" }),
            };
            target.label.emit(&shown)?;
            if matched {
                Ok(())
            } else {
                Err(Fail::Mismatch)
            }
        }
        Cmd::Verify { suite, n_max, deg_max, seed, out } => {
            let suite: Suite = suite.parse()?;
            let cfg = VerifyConfig { n_max, deg_max, seed };
            let reports = run(suite, &cfg, &builder);
            for r in &reports {
                println!("{r}");
            }
            if let Some(path) = out {
                let json = serde_json::to_string_pretty(&reports).map_err(|e| Fail::Internal(e.to_string()))?;
                fs::write(&path, json).map_err(|e| Fail::Internal(format!("{}: {e}", path.display())))?;
            }
            if reports.iter().all(|r| r.passed()) {
                Ok(())
            } else {
                Err(Fail::Mismatch)
            }
        }
        Cmd::Singular { target, e } => {
            let (label, alpha) = target.resolve()?;
            let report = singular_probe(&builder, &alpha, &label, e)?;
            let text = match target.label.format {
                Format::Json => serde_json::to_string(&report).map_err(|e| Fail::Internal(e.to_string()))?,
                Format::Latex => report.to_string(),
            };
            target.label.emit(&text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Mismatch) => ExitCode::from(3),
    }
}
