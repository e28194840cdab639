//! apg: construct finite groups, compute and bound the minimal abelian
//! partition degree, verify partition files, and emit NAP certificates.

mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use apgroups::error::Error;
use apgroups::families::{ac_partition, family_theta, frobenius_theta};
use apgroups::io::{
    nap_certificate_json, theta_result_json, GroupSpecFile, PartitionFile,
};
use apgroups::nap::{
    embed_in_ap, embed_in_nap, nap_dihedral_product, nap_wreath_check,
    self_centralizing_involution, NapOutcome,
};
use apgroups::partition::{
    compute_bounds, exact_theta_budgeted, verify_partition, AbelianPartition, Certificate,
    ThetaResult, DEFAULT_EXACT_NODE_BUDGET,
};
use apgroups::GroupTable;

const EXIT_OK: u8 = 0;
const EXIT_REFUTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "apg", version, about = "abelian partitions of finite groups")]
struct Cli {
    /// Worker threads; results do not depend on this setting.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Auto,
    Exact,
    Bounds,
    Family,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group and print order, center size, class count, and spectrum.
    Group { spec: String },
    /// Compute or bound theta_a; prints JSON.
    Theta {
        spec: String,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        /// Node budget for the exact search.
        #[arg(long, default_value_t = DEFAULT_EXACT_NODE_BUDGET)]
        budget: u64,
    },
    /// Re-verify a partition file against its group.
    Verify { partition: String },
    /// Certify a group as NAP (witness, then exhaustive for small orders),
    /// or run a pure counting certificate.
    Nap {
        /// Group spec; omit when using a counting flag.
        spec: Option<String>,
        /// Comma-separated odd k list for a dihedral-product count.
        #[arg(long, value_delimiter = ',', conflicts_with = "wreath")]
        dihedral_product: Option<Vec<u64>>,
        /// k:p for a wreath-product count.
        #[arg(long)]
        wreath: Option<String>,
        /// Largest order attempted exhaustively.
        #[arg(long, default_value_t = 60)]
        exhaustive_cap: usize,
    },
    /// Embed a group into an AP-group (H x Z2) or a NAP-group (wreath).
    Embed {
        spec: String,
        #[arg(long, conflicts_with = "ap")]
        nap: bool,
        #[arg(long)]
        ap: bool,
    },
    /// Reproduce the paper's value table; deterministic row order.
    Report {
        /// Keep only rows whose id or title contains this string.
        #[arg(long)]
        only: Option<String>,
        /// Also write the table as CSV (byte-identical across runs).
        #[arg(long)]
        csv: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::SearchBudgetExceeded(_) => EXIT_BUDGET,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Error> {
    match cmd {
        Command::Group { spec } => cmd_group(&spec),
        Command::Theta { spec, mode, budget } => cmd_theta(&spec, mode, budget),
        Command::Verify { partition } => cmd_verify(&partition),
        Command::Nap {
            spec,
            dihedral_product,
            wreath,
            exhaustive_cap,
        } => cmd_nap(spec.as_deref(), dihedral_product, wreath.as_deref(), exhaustive_cap),
        Command::Embed { spec, nap, ap } => cmd_embed(&spec, nap, ap),
        Command::Report { only, csv } => {
            report::cmd_report(only.as_deref(), csv.as_deref())
        }
    }
}

fn cmd_group(spec: &str) -> Result<u8, Error> {
    let spec = GroupSpecFile::from_arg(spec)?;
    let g = spec.build_cached()?;
    let sp = g.spectrum();
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({
            "order": g.size(),
            "center": g.center().order(),
            "classes": g.class_count(),
            "abelian": g.is_abelian(),
            "spectrum": { "omega": sp.omega, "mu": sp.mu },
            "construction": g.construction_tag,
        }))?
    );
    Ok(EXIT_OK)
}

fn cmd_theta(spec: &str, mode: Mode, budget: u64) -> Result<u8, Error> {
    let spec = GroupSpecFile::from_arg(spec)?;
    let g = spec.build_cached()?;
    let result = match mode {
        Mode::Exact => Some(exact_theta_budgeted(&g, budget)?),
        Mode::Family => {
            let id = spec.family_id()?.ok_or_else(|| {
                Error::InvalidParams("family mode needs a family spec".into())
            })?;
            Some(family_theta(&id)?)
        }
        Mode::Bounds => None,
        Mode::Auto => auto_theta(&spec, &g, budget)?,
    };
    match result {
        Some(t) => {
            println!("{}", serde_json::to_string_pretty(&theta_result_json(&t))?);
            Ok(if t.value == 0 { EXIT_REFUTED } else { EXIT_OK })
        }
        None => {
            let b = compute_bounds(&g)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({ "value": null, "bounds": b }))?
            );
            Ok(EXIT_OK)
        }
    }
}

/// Fixed routing: abelian, known family, AC with large centralizers,
/// Frobenius, exact for order <= 60, otherwise bounds only (None).
fn auto_theta(
    spec: &GroupSpecFile,
    g: &GroupTable,
    budget: u64,
) -> Result<Option<ThetaResult>, Error> {
    if g.is_abelian() {
        let partition = if g.size() >= 2 {
            Some(AbelianPartition::new(vec![(0..g.size() as u32).collect()]))
        } else {
            None
        };
        return Ok(Some(ThetaResult {
            value: 1,
            partition,
            certificate: Certificate::Exhaustive,
        }));
    }
    if let Some(id) = spec.family_id()? {
        match family_theta(&id) {
            Ok(t) => return Ok(Some(t)),
            Err(Error::UnsupportedFamily(_)) => {}
            Err(e) => return Err(e),
        }
    }
    match ac_partition(g) {
        Ok(t) => return Ok(Some(t)),
        Err(Error::NotACGroup) | Err(Error::CentralizerTooSmall(_)) => {}
        Err(Error::SearchBudgetExceeded(_)) => {}
        Err(e) => return Err(e),
    }
    match frobenius_theta(g) {
        Ok(t) => return Ok(Some(t)),
        Err(Error::NotFrobenius)
        | Err(Error::ComplementTooSmall)
        | Err(Error::SearchBudgetExceeded(_)) => {}
        Err(e) => return Err(e),
    }
    if g.size() <= 60 {
        return Ok(Some(exact_theta_budgeted(g, budget)?));
    }
    Ok(None)
}

fn cmd_verify(path: &str) -> Result<u8, Error> {
    let text = std::fs::read_to_string(path)?;
    let pf: PartitionFile = serde_json::from_str(&text)?;
    let g = pf.group.build_cached()?;
    let p = pf.partition();
    match verify_partition(&g, &p) {
        Ok(()) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "verified": true,
                    "order": g.size(),
                    "blocks": p.block_count(),
                }))?
            );
            Ok(EXIT_OK)
        }
        Err(e) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "verified": false,
                    "violation": e.to_string(),
                }))?
            );
            Ok(EXIT_REFUTED)
        }
    }
}

fn cmd_nap(
    spec: Option<&str>,
    dihedral_product: Option<Vec<u64>>,
    wreath: Option<&str>,
    exhaustive_cap: usize,
) -> Result<u8, Error> {
    if let Some(ks) = dihedral_product {
        return print_outcome(nap_dihedral_product(&ks)?);
    }
    if let Some(kp) = wreath {
        let (k, p) = kp
            .split_once(':')
            .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
            .ok_or_else(|| Error::InvalidParams("--wreath takes k:p".into()))?;
        return print_outcome(nap_wreath_check(k, p)?);
    }
    let spec = spec.ok_or_else(|| {
        Error::InvalidParams("nap needs a group spec or a counting flag".into())
    })?;
    let g = GroupSpecFile::from_arg(spec)?.build_cached()?;
    if let Some(rep) = self_centralizing_involution(&g)? {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "nap": true,
                "certificate": nap_certificate_json(&rep.certificate),
                "kernel_order": rep.kernel.order(),
            }))?
        );
        return Ok(EXIT_OK);
    }
    if g.size() > exhaustive_cap {
        return Err(Error::SearchBudgetExceeded(format!(
            "no witness and order {} exceeds the exhaustive cap {exhaustive_cap}",
            g.size()
        )));
    }
    let t = exact_theta_budgeted(&g, DEFAULT_EXACT_NODE_BUDGET)?;
    if t.value == 0 {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "nap": true,
                "certificate": { "kind": "Exhaustive", "params": {} },
            }))?
        );
        Ok(EXIT_OK)
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "nap": false,
                "theta": theta_result_json(&t),
            }))?
        );
        Ok(EXIT_REFUTED)
    }
}

fn print_outcome(out: NapOutcome) -> Result<u8, Error> {
    match out {
        NapOutcome::Certified(c) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "nap": true,
                    "certificate": nap_certificate_json(&c),
                }))?
            );
            Ok(EXIT_OK)
        }
        NapOutcome::NotApplicable { inequality } => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "nap": null,
                    "inequality": {
                        "lhs": inequality.lhs.to_string(),
                        "rhs": inequality.rhs.to_string(),
                    },
                    "note": "counting bound does not certify here",
                }))?
            );
            Ok(EXIT_REFUTED)
        }
    }
}

fn cmd_embed(spec: &str, nap: bool, ap: bool) -> Result<u8, Error> {
    if nap == ap {
        return Err(Error::InvalidParams("pass exactly one of --nap / --ap".into()));
    }
    let h = GroupSpecFile::from_arg(spec)?.build_cached()?;
    if ap {
        let (g, p) = embed_in_ap(&h)?;
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "embedding": "H x Z2",
                "order": g.size(),
                "blocks": p.block_count(),
                "verified": true,
            }))?
        );
    } else {
        let e = embed_in_nap(&h)?;
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "embedding": format!("D{} wr H", 2 * e.k_star),
                "k_star": e.k_star,
                "order": e.group.as_ref().map(|g| g.size()),
                "injection_verified": e.injection.is_some(),
                "certificate": nap_certificate_json(&e.certificate),
            }))?
        );
    }
    Ok(EXIT_OK)
}
