use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use mullreg_core::abacus::quotient_b;
use mullreg_core::hooks::{all_hooks, classify_hook};
use mullreg_core::ladder::{is_cr_valid_lemma, is_reg_valid};
use mullreg_core::mullineux::omega_psi;
use mullreg_core::verify::{all_pairs, VerificationReport};
use mullreg_core::{
    b_rim, b_weight, brute_force_cross_checks, colreg, core_b, is_ab_regular, is_cr_valid, j_b, mullineux,
    mullineux_transpose, reg, run_theorem_scan, scan_conjecture_fayers, scan_conjecture_reverse, semireg,
    AbParams, BoxComposition, Error, Partition, ScanOptions,
};

mod output;
mod render;

use output::{Format, Output};
use render::Overlay;

#[derive(Parser)]
#[command(name = "mullreg", version, about = "Mullineux transpose, ladder regularization, cores and quotients")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Lambda {
    /// Partition, e.g. "7,5,1,1" or "7 5 1 1"; "" or "0" is the empty one.
    #[arg(value_parser = parse_lambda)]
    partition: Partition,
}

#[derive(Args, Clone, Copy)]
struct Modulus {
    #[arg(long)]
    b: usize,
}

#[derive(Args, Clone, Copy)]
struct Pair {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
}

impl Pair {
    fn params(self) -> Result<AbParams, Error> {
        AbParams::new(self.a, self.b)
    }
}

#[derive(Args, Clone)]
struct ScanArgs {
    /// Largest partition size to enumerate.
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    /// A parameter pair "a,b"; repeatable. Overrides --b-max.
    #[arg(long = "pair", value_parser = parse_pair)]
    pairs: Vec<(usize, usize)>,
    /// Use every admissible pair with b up to this bound.
    #[arg(long, default_value_t = 5)]
    b_max: usize,
    /// Worker threads.
    #[arg(long, env = "MULLREG_JOBS")]
    jobs: Option<usize>,
}

impl ScanArgs {
    fn pairs_or(&self, keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
        if self.pairs.is_empty() {
            all_pairs(self.b_max).into_iter().filter(|&(a, b)| keep(a, b)).collect()
        } else {
            self.pairs.clone()
        }
    }

    fn jobs(&self) -> usize {
        self.jobs
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Conjugate partition.
    Transpose(Lambda),
    /// Mullineux map M_b.
    Mullineux {
        #[command(flatten)]
        m: Modulus,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// Mullineux transpose X_b = M_b Tr, with the J_b trace.
    MullineuxTr {
        #[command(flatten)]
        m: Modulus,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// One application of J_b.
    Jb {
        #[command(flatten)]
        m: Modulus,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// The b-rim, its pieces and segments.
    Brim {
        #[command(flatten)]
        m: Modulus,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// The b-rectangular decomposition.
    Rect {
        #[command(flatten)]
        m: Modulus,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// omega and psi of the b-rectangular decomposition.
    OmegaPsi {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// Column regularization Cr_{a,b}.
    Colreg {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// Regularization Reg_{a,b}.
    Reg {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// Column semi-regularization Sr_{a,b}.
    Semireg {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// Cr/Reg validity and (a,b)-regularity.
    Valid {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// b-core.
    Core {
        #[command(flatten)]
        m: Modulus,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// b-quotient.
    Quotient {
        #[command(flatten)]
        m: Modulus,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// b-weight.
    Weight {
        #[command(flatten)]
        m: Modulus,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// Per-box arm, leg and hook, with (a,b) shallow/steep flags.
    Hooks {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// ASCII Young diagram.
    Render {
        #[arg(long, value_enum)]
        overlay: Option<Overlay>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[command(flatten)]
        lambda: Lambda,
    },
    /// Exhaustive check of the main theorem. Exits 1 on a violation.
    ScanTheorem(ScanArgs),
    /// Search for counterexamples to the reverse conjecture.
    ScanConjReverse {
        #[command(flatten)]
        scan: ScanArgs,
        /// Accept pairs that are not co-prime.
        #[arg(long)]
        allow_non_coprime: bool,
    },
    /// Search for counterexamples to the Fayers-type conjecture (2a < b).
    ScanConjFayers(ScanArgs),
    /// Cross-module identities. Exits 1 on a failure.
    Selftest(ScanArgs),
}

fn parse_lambda(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once([',', ':'])
        .ok_or_else(|| format!("expected \"a,b\", got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

/// Outcome of a subcommand before formatting.
enum Failure {
    Usage(Error),
    Precondition(String),
    /// A proved statement failed; carries the report or message.
    Violation(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn composition_output(lambda: &Partition, params: AbParams, label: &str, c: &BoxComposition) -> Output {
    let rows = c.row_lengths();
    let text_rows = if rows.is_empty() {
        "0".to_string()
    } else {
        rows.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    };
    let not_a_partition = !c.is_partition();
    let text = if not_a_partition {
        format!("{text_rows} not_a_partition=true\n")
    } else {
        format!("{text_rows}\n")
    };
    Output::new(
        json!({
            "operation": label,
            "partition": lambda,
            "a": params.a(),
            "b": params.b(),
            "rows": text_rows,
            "not_a_partition": not_a_partition,
        }),
        text,
    )
}

fn single(label: &str, lambda: &Partition, extra: Value, result: &Partition) -> Output {
    let mut value = json!({ "operation": label, "partition": lambda, "result": result });
    if let (Value::Object(map), Value::Object(more)) = (&mut value, extra) {
        map.extend(more);
    }
    Output::new(value, format!("{result}\n"))
}

fn report_output(report: &VerificationReport) -> Output {
    let mut text = format!(
        "{}: n_max={} pairs={}\nexamined {}, hypothesis_ok {}, hypothesis_failed {}, inapplicable {}, violations {}\n",
        report.scan,
        report.params.n_max,
        report.params.pairs.len(),
        report.totals.examined,
        report.totals.hypothesis_ok,
        report.totals.hypothesis_failed,
        report.totals.inapplicable,
        report.totals.violations,
    );
    for (name, t) in &report.totals.details {
        text.push_str(&format!(
            "  {name}: examined {}, hypothesis_ok {}, violations {}\n",
            t.examined, t.hypothesis_ok, t.violations
        ));
    }
    for v in &report.violations {
        let witness = v.witness.as_ref().map(|w| serde_json::to_string(w).unwrap()).unwrap_or_default();
        text.push_str(&format!("{} (a,b)=({},{}) {} {}\n", v.partition, v.a, v.b, v.kind, witness));
    }
    let value = serde_json::to_value(report).expect("report serializes");
    let header = VerificationReport::CSV_HEADER.iter().map(|s| s.to_string()).collect();
    let rows = report.csv_rows().into_iter().map(Vec::from).collect();
    Output::new(value, text).with_table(header, rows)
}

fn run_scan(report: VerificationReport, proved: bool) -> Result<Output, Failure> {
    eprintln!(
        "{}: {} cases in {} ms, {} violation(s)",
        report.scan, report.totals.examined, report.duration_ms, report.totals.violations
    );
    let out = report_output(&report);
    if proved && !report.is_clean() {
        Err(Failure::Violation(out))
    } else {
        Ok(out)
    }
}

fn execute(command: Command) -> Result<Output, Failure> {
    let out = match command {
        Command::Transpose(Lambda { partition }) => {
            single("transpose", &partition, json!({}), &partition.transpose())
        }
        Command::Mullineux { m, lambda } => {
            let result = mullineux(&lambda.partition, m.b)?;
            single("mullineux", &lambda.partition, json!({ "b": m.b }), &result)
        }
        Command::MullineuxTr { m, lambda } => {
            let (result, trace) = mullineux_transpose(&lambda.partition, m.b)?;
            let mut out = single(
                "mullineux_tr",
                &lambda.partition,
                json!({ "b": m.b, "trace": trace }),
                &result,
            );
            let steps: Vec<String> = trace.iterates.iter().map(ToString::to_string).collect();
            out.text.push_str(&format!("J_{} trace: {}\n", m.b, steps.join(" -> ")));
            out
        }
        Command::Jb { m, lambda } => {
            let result = j_b(&lambda.partition, m.b)?;
            single("jb", &lambda.partition, json!({ "b": m.b }), &result)
        }
        Command::Brim { m, lambda } => {
            let d = b_rim(&lambda.partition, m.b)?;
            let mut text = render::brim(&lambda.partition, &d);
            text.push_str(&format!("phi = {}\n", d.len()));
            for s in &d.segments {
                text.push_str(&format!("boxes {}-{}: {:?} segment\n", s.start + 1, s.start + s.len, s.kind));
            }
            let rows = d
                .pieces()
                .enumerate()
                .flat_map(|(k, piece)| {
                    piece.iter().enumerate().map(move |(i, c)| {
                        vec![(k + 1).to_string(), (i + 1).to_string(), c.row.to_string(), c.col.to_string()]
                    })
                })
                .collect();
            let value = json!({ "operation": "brim", "partition": lambda.partition, "b": m.b, "decomposition": d });
            let header = ["piece", "label", "row", "col"].map(String::from).to_vec();
            Output::new(value, text).with_table(header, rows)
        }
        Command::Rect { m, lambda } => {
            let d = b_rim(&lambda.partition, m.b)?;
            let mut text = render::rect(&lambda.partition, &d);
            text.push_str(&render::rect_legend(&d));
            let dims: Vec<(usize, usize)> = d.rectangles.iter().map(|r| r.dims()).collect();
            let rows = dims.iter().map(|(x, y)| vec![x.to_string(), y.to_string()]).collect();
            let value = json!({
                "operation": "rect",
                "partition": lambda.partition,
                "b": m.b,
                "dims": dims,
                "rectangles": d.rectangles,
            });
            let header = ["height", "width"].map(String::from).to_vec();
            Output::new(value, text).with_table(header, rows)
        }
        Command::OmegaPsi { pair, lambda } => {
            let params = pair.params()?;
            let (omega, psi) = omega_psi(&lambda.partition, params)?;
            Output::new(
                json!({ "operation": "omega_psi", "partition": lambda.partition, "a": pair.a, "b": pair.b,
                        "omega": omega, "psi": psi }),
                format!("omega={omega} psi={psi}\n"),
            )
        }
        Command::Colreg { pair, lambda } => {
            let params = pair.params()?;
            composition_output(&lambda.partition, params, "colreg", &colreg(&lambda.partition, params))
        }
        Command::Reg { pair, lambda } => {
            let params = pair.params()?;
            composition_output(&lambda.partition, params, "reg", &reg(&lambda.partition, params))
        }
        Command::Semireg { pair, lambda } => {
            let params = pair.params()?;
            match semireg(&lambda.partition, params) {
                Ok(result) => single(
                    "semireg",
                    &lambda.partition,
                    json!({ "a": pair.a, "b": pair.b }),
                    &result,
                ),
                Err(e @ Error::SrNotAPartition { .. }) => {
                    let value = json!({ "operation": "semireg", "partition": lambda.partition,
                                        "a": pair.a, "b": pair.b, "error": e.to_string() });
                    return Err(Failure::Violation(Output::new(value, format!("{e}\n"))));
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Valid { pair, lambda } => {
            let params = pair.params()?;
            let l = &lambda.partition;
            let flags = [
                ("cr_valid", is_cr_valid(l, params)),
                ("cr_valid_lemma", is_cr_valid_lemma(l, params)),
                ("reg_valid", is_reg_valid(l, params)),
                ("ab_regular", is_ab_regular(l, params)),
                ("b_regular", l.is_b_regular(pair.b)),
            ];
            let text = flags.iter().map(|(k, v)| format!("{k}={v}\n")).collect();
            let mut value = json!({ "operation": "valid", "partition": l, "a": pair.a, "b": pair.b });
            for (k, v) in flags {
                value[k] = json!(v);
            }
            Output::new(value, text)
        }
        Command::Core { m, lambda } => {
            let result = core_b(&lambda.partition, m.b)?;
            single("core", &lambda.partition, json!({ "b": m.b }), &result)
        }
        Command::Quotient { m, lambda } => {
            let q = quotient_b(&lambda.partition, m.b)?;
            let comps: Vec<String> = q.components.iter().map(ToString::to_string).collect();
            Output::new(
                json!({ "operation": "quotient", "partition": lambda.partition, "b": m.b, "components": comps }),
                format!("{q}\n"),
            )
        }
        Command::Weight { m, lambda } => {
            let w = b_weight(&lambda.partition, m.b)?;
            Output::new(
                json!({ "operation": "weight", "partition": lambda.partition, "b": m.b, "weight": w }),
                format!("{w}\n"),
            )
        }
        Command::Hooks { pair, lambda } => {
            let params = pair.params()?;
            let header: Vec<String> = ["row", "col", "arm", "leg", "hook", "divisible", "shallow", "steep", "shape32"]
                .map(String::from)
                .to_vec();
            let mut rows = Vec::new();
            let mut records = Vec::new();
            for h in all_hooks(&lambda.partition) {
                let c = classify_hook(&h, params);
                let divisible = h.hook % pair.b == 0;
                rows.push(vec![
                    h.corner.row.to_string(),
                    h.corner.col.to_string(),
                    h.arm.to_string(),
                    h.leg.to_string(),
                    h.hook.to_string(),
                    divisible.to_string(),
                    c.shallow.to_string(),
                    c.steep.to_string(),
                    c.shape32.to_string(),
                ]);
                records.push(json!({ "box": h.corner, "arm": h.arm, "leg": h.leg, "hook": h.hook,
                                     "divisible": divisible, "class": c }));
            }
            let mut text = format!("{}\n", header.join("\t"));
            for r in &rows {
                text.push_str(&r.join("\t"));
                text.push('\n');
            }
            let value = json!({ "operation": "hooks", "partition": lambda.partition, "a": pair.a, "b": pair.b,
                                "hooks": records });
            Output::new(value, text).with_table(header, rows)
        }
        Command::Render { overlay, a, b, lambda } => {
            let l = &lambda.partition;
            let need_b = || b.ok_or_else(|| Failure::Precondition("this overlay needs --b".into()));
            let text = match overlay {
                None => render::plain(l),
                Some(Overlay::Brim) => render::brim(l, &b_rim(l, need_b()?)?),
                Some(Overlay::Rect) => {
                    let d = b_rim(l, need_b()?)?;
                    render::rect(l, &d) + &render::rect_legend(&d)
                }
                Some(Overlay::Ladders) => {
                    let a = a.ok_or_else(|| Failure::Precondition("the ladders overlay needs --a".into()))?;
                    let params = AbParams::new(a, need_b()?)?;
                    render::ladders(l, params)
                }
            };
            Output::new(json!({ "operation": "render", "partition": l, "diagram": text }), text)
        }
        Command::ScanTheorem(args) => {
            let opts = ScanOptions { jobs: args.jobs(), allow_non_coprime: true };
            return run_scan(run_theorem_scan(args.n_max, &args.pairs_or(|_, _| true), &opts)?, true);
        }
        Command::ScanConjReverse { scan, allow_non_coprime } => {
            let opts = ScanOptions { jobs: scan.jobs(), allow_non_coprime };
            let pairs = scan.pairs_or(|a, b| allow_non_coprime || mullreg_core::ladder::gcd(a, b) == 1);
            return run_scan(scan_conjecture_reverse(scan.n_max, &pairs, &opts)?, false);
        }
        Command::ScanConjFayers(args) => {
            let opts = ScanOptions { jobs: args.jobs(), allow_non_coprime: true };
            let pairs = args.pairs_or(|a, b| 2 * a < b);
            return run_scan(scan_conjecture_fayers(args.n_max, &pairs, &opts)?, false);
        }
        Command::Selftest(args) => {
            return run_scan(brute_force_cross_checks(args.n_max, args.b_max, args.jobs())?, true);
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    match execute(cli.command) {
        Ok(out) => {
            out.emit(format);
            ExitCode::SUCCESS
        }
        Err(Failure::Violation(out)) => {
            out.emit(format);
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
