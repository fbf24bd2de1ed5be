use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use merge_algebra::externalization::{self as ext, HeadFunction};
use merge_algebra::linear::{CoeffJson, LinComb};
use merge_algebra::lr::{self, to_lr, Presentation};
use merge_algebra::magma::{self, Section};
use merge_algebra::mg::{self, MatchingMode, SmcMode};
use merge_algebra::parse::{parse_abstract, parse_mg, parse_planar, parse_workspace};
use merge_algebra::trees::{abstract_trees, planar_trees};
use merge_algebra::workbench::{all_laws, law, run_checks, suite_json, unexpected_failures, Config};
use merge_algebra::workspace as ws;
use merge_algebra::{CheckReport, Coeff};

#[derive(Parser)]
#[command(name = "merge-algebra", version, about = "Executable algebra of Merge")]
struct Cli {
    /// Config file, JSON or key=value lines.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List binary trees with N leaves.
    Enum {
        #[arg(value_enum)]
        kind: TreeKind,
        n: usize,
        /// Leaf labels (defaults to the config leaf alphabet).
        #[arg(long, value_delimiter = ',')]
        alphabet: Option<Vec<String>>,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// The fixed point X = x + M(X, X).
    Ds {
        #[command(subcommand)]
        cmd: DsCmd,
    },
    /// Loday–Ronco operations on planar trees.
    Lr {
        #[command(subcommand)]
        cmd: LrCmd,
    },
    /// Minimalist grammar merges.
    Mg {
        #[command(subcommand)]
        cmd: MgCmd,
    },
    /// Merge on workspaces.
    Ws {
        #[command(subcommand)]
        cmd: WsCmd,
    },
    /// Head functions and linear order.
    Ext {
        #[command(subcommand)]
        cmd: ExtCmd,
    },
    /// Run law checks.
    Check {
        laws: Vec<String>,
        #[arg(long, conflicts_with = "laws")]
        all: bool,
        /// List the known laws.
        #[arg(long)]
        list: bool,
        /// Record wall time per law.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        opts: CheckOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeKind {
    Abstract,
    Planar,
}

#[derive(Subcommand)]
enum DsCmd {
    /// X_1 … X_N as sums of abstract trees.
    Solve { n: usize },
    /// dim V_k = m^k C_k.
    Dim {
        k: u32,
        #[arg(default_value_t = 1)]
        m: u32,
    },
}

#[derive(Subcommand)]
enum LrCmd {
    Product {
        a: String,
        b: String,
        #[arg(long)]
        recursive: bool,
    },
    Coproduct {
        t: String,
        #[arg(long)]
        recursive: bool,
    },
    Antipode {
        t: String,
        #[arg(long)]
        recursive: bool,
    },
}

#[derive(Subcommand)]
enum MgCmd {
    /// External Merge of T1 (selector) and T2.
    Em {
        t1: String,
        t2: String,
        #[arg(long)]
        mode: Option<String>,
    },
    /// Internal Merge.
    Im {
        t: String,
        #[arg(long)]
        smc: Option<String>,
    },
    /// N-fold Internal Merge.
    ImN {
        t: String,
        n: usize,
        #[arg(long)]
        smc: Option<String>,
    },
    /// Run grammar law checks (e.g. coideal right-ideal).
    Check {
        laws: Vec<String>,
        #[command(flatten)]
        opts: CheckOpts,
    },
}

#[derive(Subcommand)]
enum WsCmd {
    /// Merge S and S' in the workspace F (components separated by `|`).
    Merge {
        f: String,
        s: String,
        s2: String,
        /// Show extraction degrees and Merge types.
        #[arg(long)]
        graded: bool,
        /// Keep only the terms Minimal Search allows.
        #[arg(long)]
        minimal_search: bool,
    },
    /// Workspace coproduct.
    Coproduct {
        f: String,
        #[arg(long)]
        graded: bool,
    },
}

#[derive(Subcommand)]
enum ExtCmd {
    /// C-command, sisterhood and dominance.
    Relations {
        t: String,
    },
    /// Planar tree from a head function.
    Planarize {
        t: String,
        /// VERTEX=LEAF,… (omit for the label-driven heads).
        #[arg(long)]
        heads: Option<String>,
    },
    /// Linear order on leaves from least common ancestors.
    Lca {
        t: String,
        #[arg(long)]
        heads: Option<String>,
    },
    /// LCA totality or section checks.
    Check {
        #[arg(value_enum)]
        what: ExtCheck,
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        opts: CheckOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtCheck {
    LcaTotality,
    Section,
}

#[derive(clap::Args, Default)]
struct CheckOpts {
    #[arg(long)]
    max_leaves: Option<usize>,
    /// Feature alphabet for grammar laws, leaf alphabet otherwise.
    #[arg(long, value_delimiter = ',')]
    alphabet: Option<Vec<String>>,
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    smc: Option<String>,
}

/// Tree arguments; `-` takes the next line of stdin.
struct Args {
    stdin: Option<std::vec::IntoIter<String>>,
}

impl Args {
    fn get(&mut self, s: &str) -> Result<String> {
        if s != "-" {
            return Ok(s.to_string());
        }
        if self.stdin.is_none() {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            let lines: Vec<String> = buf.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect();
            self.stdin = Some(lines.into_iter());
        }
        self.stdin.as_mut().unwrap().next().context("stdin has no more input")
    }
}

fn coeff_json(c: &Coeff) -> Value {
    json!(CoeffJson::from(c))
}

fn sum_json<K: Ord + std::fmt::Display>(s: &LinComb<K>) -> Value {
    Value::Array(s.into_iter().map(|(k, c)| json!({"coeff": coeff_json(c), "term": k.to_string()})).collect())
}

fn tensor_json<A: Ord + std::fmt::Display, B: Ord + std::fmt::Display>(s: &LinComb<(A, B)>) -> Value {
    Value::Array(
        s.into_iter()
            .map(|((a, b), c)| json!({"coeff": coeff_json(c), "term_pair": [a.to_string(), b.to_string()]}))
            .collect(),
    )
}

fn presentation(recursive: bool) -> Presentation {
    if recursive {
        Presentation::Recursive
    } else {
        Presentation::Graphical
    }
}

fn load_config(path: Option<&std::path::Path>) -> Result<Config> {
    match path {
        None => Ok(Config::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Ok(Config::parse(&text)?)
        }
    }
}

fn apply_opts(cfg: &mut Config, o: &CheckOpts, features: bool) -> Result<()> {
    if let Some(n) = o.max_leaves {
        cfg.max_leaves = Some(n);
    }
    if let Some(a) = &o.alphabet {
        if features {
            cfg.feature_alphabet = a.clone();
        } else {
            cfg.leaf_alphabet = a.clone();
        }
    }
    if let Some(m) = &o.mode {
        cfg.matching_mode = MatchingMode::parse(m)?;
    }
    if let Some(s) = &o.smc {
        cfg.smc_mode = SmcMode::parse(s)?;
    }
    cfg.validate()?;
    Ok(())
}

/// Prints reports and returns whether any failure is unexpected.
fn report(reports: &[CheckReport], cfg: &Config, as_json: bool) -> Result<bool> {
    let bad = unexpected_failures(reports, cfg);
    if as_json {
        println!("{}", serde_json::to_string_pretty(&suite_json(reports, cfg))?);
    } else {
        for r in reports {
            let status = if r.ok() {
                "ok"
            } else if bad.iter().any(|b| b.law == r.law) {
                "FAIL"
            } else {
                "expected-fail"
            };
            let time = r.wall_time_ms.map(|t| format!(" {t}ms")).unwrap_or_default();
            println!(
                "{status:<13} {:<24} tried={} passed={} skipped={} failed={}{time}",
                r.law,
                r.instances_tried,
                r.passed,
                r.skipped,
                r.failures()
            );
            for w in r.witnesses.iter().take(3) {
                println!("    {w}");
            }
            if r.witnesses.len() > 3 {
                println!("    … {} more", r.witnesses.len() - 3);
            }
        }
    }
    Ok(!bad.is_empty())
}

fn run_suite(names: &[String], cfg: &Config, timing: bool, as_json: bool) -> Result<ExitCode> {
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let reports = run_checks(&names, cfg, timing)?;
    Ok(if report(&reports, cfg, as_json)? {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn print(as_json: bool, v: Value, text: impl FnOnce() -> String) -> Result<ExitCode> {
    if as_json {
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("{}", text());
    }
    Ok(ExitCode::SUCCESS)
}

fn head_function(t: &merge_algebra::trees::AbstractTree, heads: Option<&str>) -> Result<HeadFunction> {
    match heads {
        Some(h) => Ok(h.parse()?),
        None => ext::canonical_label_heads(t).context("leaf labels do not determine a head; pass --heads"),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut cfg = load_config(cli.config.as_deref())?;
    let j = cli.json;
    let mut args = Args { stdin: None };
    match cli.cmd {
        Cmd::Enum {
            kind,
            n,
            alphabet,
            count,
        } => {
            if n == 0 {
                bail!("trees have at least one leaf");
            }
            if let Some(a) = alphabet {
                cfg.leaf_alphabet = a;
                cfg.validate()?;
            }
            let alpha = cfg.leaves();
            let trees: Vec<String> = match kind {
                TreeKind::Abstract => abstract_trees(n, &alpha).iter().map(|t| t.to_string()).collect(),
                TreeKind::Planar => {
                    let ls: Vec<String> = alpha.iter().map(|s| s.to_string()).collect();
                    planar_trees(n, &[None::<String>], &ls).iter().map(|t| t.to_string()).collect()
                }
            };
            if count {
                print(j, json!(trees.len()), || trees.len().to_string())
            } else {
                print(j, json!(trees), || trees.join("\n"))
            }
        }
        Cmd::Ds { cmd } => match cmd {
            DsCmd::Solve { n } => {
                let xs = magma::ds_solve(n);
                let v = Value::Array(xs.iter().map(sum_json).collect());
                print(j, v, || {
                    xs.iter()
                        .enumerate()
                        .map(|(i, x)| format!("X_{} = {x}", i + 1))
                        .collect::<Vec<_>>()
                        .join("\n")
                })
            }
            DsCmd::Dim { k, m } => {
                let d = magma::dim_vk(k, m);
                print(j, json!(d.to_string()), || d.to_string())
            }
        },
        Cmd::Lr { cmd } => match cmd {
            LrCmd::Product { a, b, recursive } => {
                let a = to_lr(&parse_planar(&args.get(&a)?)?);
                let b = to_lr(&parse_planar(&args.get(&b)?)?);
                let s = presentation(recursive).product_basis(&a, &b);
                print(j, sum_json(&s), || s.to_string())
            }
            LrCmd::Coproduct { t, recursive } => {
                let t = to_lr(&parse_planar(&args.get(&t)?)?);
                let s = presentation(recursive).coproduct_basis(&t);
                print(j, tensor_json(&s), || s.tensor_string())
            }
            LrCmd::Antipode { t, recursive } => {
                let t = to_lr(&parse_planar(&args.get(&t)?)?);
                let s = lr::antipode_basis(presentation(recursive), &t);
                print(j, sum_json(&s), || s.to_string())
            }
        },
        Cmd::Mg { cmd } => match cmd {
            MgCmd::Em { t1, t2, mode } => {
                let mode = mode.as_deref().map(MatchingMode::parse).transpose()?.unwrap_or(cfg.matching_mode);
                let a = parse_mg(&args.get(&t1)?)?;
                let b = parse_mg(&args.get(&t2)?)?;
                let r = mg::external_merge(&a, &b, mode)?;
                print(j, json!({"result": r.to_string()}), || r.to_string())
            }
            MgCmd::Im { t, smc } => {
                let smc = smc.as_deref().map(SmcMode::parse).transpose()?.unwrap_or(cfg.smc_mode);
                let t = parse_mg(&args.get(&t)?)?;
                let cands = mg::in_dom_im(&t, smc)?;
                let s = mg::internal_merge(&t, smc)?;
                print(j, json!({"candidates": cands, "result": sum_json(&s)}), || s.to_string())
            }
            MgCmd::ImN { t, n, smc } => {
                let smc = smc.as_deref().map(SmcMode::parse).transpose()?.unwrap_or(cfg.smc_mode);
                let t = parse_mg(&args.get(&t)?)?;
                let certs = mg::im_n_certificates(&t, n);
                let s = mg::iterated_internal_merge(&t, n, smc)?;
                print(j, json!({"certificates": certs, "result": sum_json(&s)}), || s.to_string())
            }
            MgCmd::Check { laws, opts } => {
                apply_opts(&mut cfg, &opts, true)?;
                if laws.is_empty() {
                    bail!("name at least one law");
                }
                run_suite(&laws, &cfg, false, j)
            }
        },
        Cmd::Ws { cmd } => match cmd {
            WsCmd::Merge {
                f,
                s,
                s2,
                graded,
                minimal_search,
            } => {
                let f = parse_workspace(&args.get(&f)?)?;
                let s = parse_abstract(&args.get(&s)?)?;
                let s2 = parse_abstract(&args.get(&s2)?)?;
                let out = ws::merge_graded(&s, &s2, &f);
                if !graded && !minimal_search {
                    let sum = out.sum();
                    return print(j, sum_json(&sum), || sum.to_string());
                }
                let terms = if minimal_search {
                    ws::minimal_search_filter(&out.terms)
                } else {
                    out.terms.clone()
                };
                let v = json!({
                    "identity": out.identity,
                    "unsupported_nesting": out.unsupported_nesting,
                    "terms": terms.iter().map(|t| json!({
                        "result": t.result.to_string(),
                        "mtype": t.mtype,
                        "components": t.components,
                        "degrees": t.degrees(),
                    })).collect::<Vec<_>>(),
                });
                print(j, v, || {
                    if out.identity {
                        return format!("{f} (no Merge applies)");
                    }
                    terms
                        .iter()
                        .map(|t| {
                            let parts: Vec<String> = t.components.iter().map(|(c, d)| format!("{c}^{d}")).collect();
                            format!("{:<13} {}", format!("{:?}", t.mtype), parts.join(" | "))
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                })
            }
            WsCmd::Coproduct { f, graded } => {
                let f = parse_workspace(&args.get(&f)?)?;
                if graded {
                    let cuts = ws::graded_coproduct(&f);
                    return print(j, json!(cuts), || {
                        cuts.iter()
                            .map(|c| {
                                format!(
                                    "{} ε^{} ⊗ {} ε^{}",
                                    c.extracted, c.extracted_degree, c.quotient, c.quotient_degree
                                )
                            })
                            .collect::<Vec<_>>()
                            .join("\n")
                    });
                }
                let s = ws::ws_coproduct(&f);
                print(j, tensor_json(&s), || s.tensor_string())
            }
        },
        Cmd::Ext { cmd } => match cmd {
            ExtCmd::Relations { t } => {
                let t = parse_abstract(&args.get(&t)?)?;
                let r = ext::relations(&t);
                let pairs = |s: &std::collections::BTreeSet<ext::Pair>| -> Vec<[String; 2]> {
                    s.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect()
                };
                let v = json!({
                    "dominates": pairs(&r.dominates),
                    "sisters": pairs(&r.sisters),
                    "c_commands": pairs(&r.c_commands),
                    "asym_c_commands": pairs(&r.asym_c_commands),
                });
                print(j, v.clone(), || {
                    ["dominates", "sisters", "c_commands", "asym_c_commands"]
                        .iter()
                        .map(|k| {
                            let ps: Vec<String> =
                                v[k].as_array().unwrap().iter().map(|p| format!("{}>{}", p[0], p[1]).replace('"', "")).collect();
                            format!("{k}: {}", ps.join(" "))
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                })
            }
            ExtCmd::Planarize { t, heads } => {
                let t = parse_abstract(&args.get(&t)?)?;
                let h = head_function(&t, heads.as_deref())?;
                let p = ext::planarize(&t, &h)?;
                print(j, json!({"heads": h.to_string(), "result": p.to_string()}), || p.to_string())
            }
            ExtCmd::Lca { t, heads } => {
                let t = parse_abstract(&args.get(&t)?)?;
                let h = heads.as_deref().map(str::parse::<HeadFunction>).transpose()?;
                let o = ext::lca_order(&t, h.as_ref());
                let v = json!({
                    "order": o,
                    "total": o.is_total(),
                    "antisymmetric": o.antisymmetry_violations().is_empty(),
                });
                print(j, v, || {
                    let ps: Vec<String> =
                        o.precedes.iter().map(|(a, b)| format!("{} < {}", o.labels[*a], o.labels[*b])).collect();
                    format!("{}\ntotal: {}", ps.join("\n"), o.is_total())
                })
            }
            ExtCmd::Check { what, name, opts } => {
                apply_opts(&mut cfg, &opts, false)?;
                let laws = match what {
                    ExtCheck::LcaTotality => vec!["lca-totality".to_string(), "lca-totality-head-free".to_string()],
                    ExtCheck::Section => {
                        let name = name.context("--name {canonical-left|head-driven} is required")?;
                        vec![format!("section-{}", Section::parse(&name)?.name())]
                    }
                };
                run_suite(&laws, &cfg, false, j)
            }
        },
        Cmd::Check {
            laws,
            all,
            list,
            timing,
            opts,
        } => {
            if list {
                for n in all_laws() {
                    println!("{n:<24} {}", law(n)?.about);
                }
                return Ok(ExitCode::SUCCESS);
            }
            apply_opts(&mut cfg, &CheckOpts { alphabet: None, ..opts }, true)?;
            let names: Vec<String> = if all {
                all_laws().into_iter().map(String::from).collect()
            } else if laws.is_empty() {
                bail!("name laws or pass --all");
            } else {
                laws
            };
            run_suite(&names, &cfg, timing, j)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
