use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use unitring::gamma::gamma_unit_group;
use unitring::quaternion::obstruction_certificate;
use unitring::report::{report, ReportRequest};
use unitring::units::{un_formula, un_formula_oracle};
use unitring::verify::{verify_props, verify_table, PropOptions};
use unitring::{Budget, Error};

#[derive(Parser)]
#[command(name = "unitring", version, about = "Unit groups of finite rings")]
struct Cli {
    /// Print JSON on stdout
    #[arg(long, global = true)]
    json: bool,
    /// List the unit elements
    #[arg(long, global = true)]
    elements: bool,
    /// Largest number of elements any construction may enumerate
    #[arg(long, global = true, default_value_t = unitring::ring::DEFAULT_BUDGET)]
    budget: usize,
    /// Seed for sampled property checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Unit group order and structure of a ring expression
    Units { expr: String },
    /// Jacobson radical and the counting identity
    Radical { expr: String },
    /// Number of central idempotents
    Idempotents { expr: String },
    /// Check every row of the table of rings with dihedral unit groups
    #[command(name = "verify-theorem1")]
    VerifyTable,
    /// Run the scripted desk checks
    #[command(name = "verify-props")]
    VerifyProps,
    /// Norm certificate for z^(8k) in the split quaternions
    Obstruction { k: u64 },
    /// Unit group of F_p[x]/(x^n) in closed form, checked by brute force when it fits the budget
    #[command(name = "un-formula")]
    UnFormula { p: u64, n: u64 },
    /// Unit group of Gamma_k
    Gamma { k: u64 },
}

enum Outcome {
    Ok,
    CheckFailed,
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        println!("{}", text());
    }
}

#[derive(Serialize)]
struct UnFormulaOut {
    p: u64,
    n: u64,
    invariants: Vec<u64>,
    display: String,
    oracle_checked: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

#[derive(Serialize)]
struct GammaOut {
    k: u64,
    unit_order: usize,
    structure: unitring::Structure,
    relations_hold: bool,
    splits_as_c2_times_dihedral: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    unit_elements: Option<Vec<String>>,
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let budget = Budget(cli.budget);
    let ring_cmd = |req: ReportRequest| -> Result<Outcome, Error> {
        let expr = match &cli.command {
            Command::Units { expr } | Command::Radical { expr } | Command::Idempotents { expr } => expr,
            _ => unreachable!(),
        };
        let r = report(expr, ReportRequest { elements: cli.elements, ..req }, budget)?;
        emit(cli.json, &r, || r.to_string());
        Ok(Outcome::Ok)
    };
    match &cli.command {
        Command::Units { .. } => ring_cmd(ReportRequest::default()),
        Command::Radical { .. } => ring_cmd(ReportRequest { radical: true, ..Default::default() }),
        Command::Idempotents { .. } => ring_cmd(ReportRequest { idempotents: true, ..Default::default() }),
        Command::VerifyTable => {
            let rows = verify_table(budget);
            let pass = rows.iter().all(|r| r.pass);
            emit(cli.json, &rows, || {
                let mut s = String::new();
                for r in &rows {
                    s += &format!(
                        "{}  c={:<2} {:<12} {:<26} found: char {}, {}\n",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.characteristic,
                        r.group,
                        r.ring,
                        r.found_characteristic,
                        r.found
                    );
                }
                s + &format!("{}/{} rows pass", rows.iter().filter(|r| r.pass).count(), rows.len())
            });
            Ok(if pass { Outcome::Ok } else { Outcome::CheckFailed })
        }
        Command::VerifyProps => {
            let checks = verify_props(PropOptions { seed: cli.seed, budget });
            let pass = checks.iter().all(|c| c.pass);
            emit(cli.json, &checks, || {
                checks
                    .iter()
                    .map(|c| {
                        format!(
                            "{}  {:<28} {}: {}",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.id,
                            c.description,
                            c.detail
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(if pass { Outcome::Ok } else { Outcome::CheckFailed })
        }
        Command::Obstruction { k } => {
            let c = obstruction_certificate(*k)?;
            emit(cli.json, &c, || {
                format!(
                    "k = {}\nN(z^{} - 1) = {}\nRe(z^{}) = {}\nnonzero: {}",
                    c.k,
                    8 * k,
                    c.norm_value,
                    8 * k,
                    c.re_value,
                    c.nonzero
                )
            });
            Ok(if c.nonzero { Outcome::Ok } else { Outcome::CheckFailed })
        }
        Command::UnFormula { p, n } => {
            let inv = un_formula(*p, *n)?;
            let oracle = match u32::try_from(*n) {
                Ok(n32) => match un_formula_oracle(*p, n32, budget) {
                    Ok(o) => Some(o == inv),
                    Err(Error::BudgetExceeded { .. }) => None,
                    Err(e) => return Err(e),
                },
                Err(_) => None,
            };
            let out = UnFormulaOut {
                p: *p,
                n: *n,
                invariants: inv.factors().to_vec(),
                display: inv.to_string(),
                oracle_checked: oracle.is_some(),
                oracle_agrees: oracle,
            };
            emit(cli.json, &out, || {
                let check = match oracle {
                    Some(true) => "oracle agrees",
                    Some(false) => "ORACLE DISAGREES",
                    None => "oracle skipped (over budget)",
                };
                format!("U(F_{p}[x]/(x^{n})) = {inv}\n{check}")
            });
            Ok(if oracle == Some(false) { Outcome::CheckFailed } else { Outcome::Ok })
        }
        Command::Gamma { k } => {
            let g = gamma_unit_group(*k, budget)?;
            let out = GammaOut {
                k: *k,
                unit_order: g.group.order(),
                structure: g.structure.clone(),
                relations_hold: g.relations_hold,
                splits_as_c2_times_dihedral: g.splits_as_c2_times_dihedral,
                unit_elements: cli.elements.then(|| g.elements.iter().map(|x| x.to_string()).collect()),
            };
            emit(cli.json, &out, || {
                let mut s = format!(
                    "Gamma({k})^x: order {}, {}\nrelations r^k = s^2 = 1, srs = r^-1: {}\nC2 x D{}: {}",
                    out.unit_order,
                    out.structure,
                    out.relations_hold,
                    2 * k,
                    out.splits_as_c2_times_dihedral
                );
                if let Some(els) = &out.unit_elements {
                    s += &format!("\n{}", els.join("\n"));
                }
                s
            });
            Ok(if g.relations_hold && g.splits_as_c2_times_dihedral { Outcome::Ok } else { Outcome::CheckFailed })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
