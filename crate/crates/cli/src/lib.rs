//! Command dispatch for the `chardeg` binary. [`run`] takes the full
//! argument list and returns the rendered output and exit status, so tests
//! drive it without spawning a process.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use chardeg::alternating::{
    check_lemma46, check_lemma_lower, check_lemma_upper, check_prop42_range,
    check_stirling_constant, SearchMode,
};
use chardeg::arith::{parse_rational, Natural, Rational};
use chardeg::degree_data::{
    check_exponent_bound, check_out_bound, check_sporadic_thm21, load_file, DegreeTable,
    SporadicStatus,
};
use chardeg::interval::{decide_with_escalation, Decision, DEFAULT_DIGITS, MAX_DIGITS};
use chardeg::lie::{
    beta_degree, check_lemma61, check_thm21, order, steinberg_degree, sweep_parallel, Family,
    GroupSpec, LieError, SweepCheck, SweepConfig, Thm21Report,
};
use chardeg::partition::{enumerate_gamma, gamma_of_size, Partition};
use chardeg::poly::{cyclotomic, cyclotomic_value};
use chardeg::structure::{
    extraspecial_example, frobenius_example, maroti_bound, prop23_check, prop32_bound,
    rat14_lower_bound, thmB_check, ChiefSeries,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
            Status::Inconclusive => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
            Status::Error => "error",
        }
    }

    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn from_decision(d: Decision) -> Self {
        match d {
            Decision::Holds => Status::Pass,
            Decision::Fails => Status::Fail,
            Decision::Inconclusive => Status::Inconclusive,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub exit_code: i32,
    /// Text for stdout.
    pub stdout: String,
    /// Text for stderr (usage, error messages).
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "chardeg",
    version,
    about = "Exact checks of character degree ratio bounds"
)]
struct Cli {
    /// One JSON record per line instead of a single document.
    #[arg(long, global = true)]
    jsonl: bool,
    /// CSV rows (sweep and prop42 only).
    #[arg(long, global = true, conflicts_with = "jsonl")]
    csv: bool,
    /// Worker threads for range checks and sweeps; sequential by default.
    #[arg(long, global = true, value_name = "N")]
    parallel: Option<usize>,
    /// Directory holding sporadic.tsv and small_groups.tsv.
    #[arg(long, global = true, value_name = "DIR")]
    data: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct PartitionArg {
    /// Parts separated by commas; `a^k` repeats a part, e.g. "7^7".
    #[arg(long)]
    partition: String,
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long)]
    family: String,
    /// Rank parameter n of the classical families.
    #[arg(long)]
    rank: Option<u32>,
    #[arg(long)]
    q: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hook lengths, hook product and degree of a partition.
    Hook(PartitionArg),
    /// Degree n!/H of a partition.
    Degree(PartitionArg),
    /// Conjugate partition.
    Conjugate(PartitionArg),
    /// Members of Gamma_m, optionally of one size.
    Gamma {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Witness partitions for the alternating groups.
    Prop42 {
        #[arg(long, conflicts_with_all = ["from", "to"])]
        n: Option<usize>,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
        /// Smallest passing hook product instead of the first found.
        #[arg(long)]
        best: bool,
    },
    /// Lower bound on the largest witness degree, or the constant check.
    Lemma43 {
        #[arg(long, required_unless_present = "constant")]
        n: Option<usize>,
        /// Check ((2 pi)^13/e^15)^(1/28) > 1.35 instead.
        #[arg(long)]
        constant: bool,
    },
    /// Upper bound (m+1)^((m+1)^2) on hook products in Gamma_m.
    Lemma45 {
        #[arg(long)]
        m: usize,
    },
    /// Final reduction (81n/64)^567 e^800 <= n^800.
    Lemma46 {
        #[arg(long)]
        n: usize,
    },
    /// Cyclotomic polynomial, optionally evaluated.
    Cyclotomic {
        #[arg(long)]
        k: u64,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<i64>,
    },
    /// Exact order of a group of Lie type.
    Order(GroupArgs),
    /// Steinberg degree.
    Steinberg(GroupArgs),
    /// Steinberg degree and the chosen small degree.
    Beta(GroupArgs),
    /// alpha^14 > beta^14 |S|.
    Thm21(GroupArgs),
    /// 5 alpha >= 16 beta.
    Lemma61(GroupArgs),
    /// Batch check over families, ranks and fields.
    Sweep {
        /// Comma-separated family names, or "all", "classical", "exceptional".
        #[arg(long, default_value = "all")]
        families: String,
        #[arg(long, default_value_t = 20)]
        rank_max: u32,
        #[arg(long, default_value_t = 32)]
        q_max: u64,
        /// Field bound for exceptional families; defaults to --q-max.
        #[arg(long)]
        exceptional_q_max: Option<u64>,
        /// thm21 or lemma61.
        #[arg(long, default_value = "thm21")]
        check: String,
    },
    /// rat = b/c of a degree list or a table from a data file.
    Rat {
        #[arg(long, conflicts_with = "table")]
        degrees: Option<String>,
        /// Table name, looked up in sporadic.tsv and small_groups.tsv.
        #[arg(long)]
        table: Option<String>,
    },
    /// Checks the recorded pair of every sporadic table.
    SporadicCheck,
    /// |Out(S)| bounds for one group or every table with an outer order.
    OutBound {
        #[arg(long, requires = "order")]
        out: Option<String>,
        #[arg(long, requires = "out")]
        order: Option<String>,
        /// Also check out <= order^EXP for a decimal or p/q exponent.
        #[arg(long, value_name = "EXP")]
        exponent: Option<String>,
    },
    /// Product of the relevant chief factor orders.
    ChiefseriesBound {
        /// JSON file with {"factors": [...]}; "-" is not supported.
        #[arg(long, conflicts_with = "json")]
        file: Option<PathBuf>,
        #[arg(long)]
        json: Option<String>,
    },
    /// rat_g^14 >= rat_gn^14 |N|.
    Prop23 {
        #[arg(long)]
        rat_g: String,
        #[arg(long)]
        rat_gn: String,
        #[arg(long)]
        order_n: String,
    },
    /// floor of (d!)^((n-1)/(d-1)).
    Maroti {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// floor of |N|^1.43.
    Prop32 {
        #[arg(long)]
        order_n: String,
    },
    /// index <= rat_g^21.
    #[command(name = "thmB")]
    ThmB {
        #[arg(long)]
        rat_g: String,
        #[arg(long)]
        index: String,
    },
    /// Degrees of the Frobenius group C_p : C_m.
    ExampleFrobenius {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
    },
    /// Degree support of the extraspecial construction.
    ExampleExtraspecial {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        i: u32,
    },
    /// Checks that squared degrees sum to the group order in the data files.
    ValidateData {
        /// A single TSV file instead of the data directory.
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

struct Ctx {
    jsonl: bool,
    csv: bool,
    parallel: Option<usize>,
    data: PathBuf,
    digits: u32,
}

/// Output of one command before rendering.
enum Output {
    Single(Value),
    Records {
        summary: Value,
        records: Vec<Value>,
        csv: Option<(String, Vec<String>)>,
    },
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Res = Result<(Status, Output), Failure>;

fn default_data_dir() -> PathBuf {
    std::env::var_os("CHARDEG_DATA")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("data/atlas"))
}

fn precision_from_env() -> Result<u32, Failure> {
    match std::env::var("CHARDEG_PRECISION") {
        Err(_) => Ok(DEFAULT_DIGITS),
        Ok(v) => match v.trim().parse::<u32>() {
            Ok(d) if (1..=MAX_DIGITS).contains(&d) => Ok(d),
            _ => Err(Failure(format!(
                "CHARDEG_PRECISION must be an integer in 1..={MAX_DIGITS}, got `{v}`"
            ))),
        },
    }
}

/// Parses `argv` (program name first), runs the command and renders output.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandResult {
                        status: Status::Pass,
                        payload: Value::Null,
                        exit_code: 0,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => error_result(text),
            };
        }
    };
    let digits = match precision_from_env() {
        Ok(d) => d,
        Err(Failure(msg)) => return error_result(format!("error: {msg}\n")),
    };
    let ctx = Ctx {
        jsonl: cli.jsonl,
        csv: cli.csv,
        parallel: cli.parallel,
        data: cli.data.clone().unwrap_or_else(default_data_dir),
        digits,
    };
    match dispatch(&ctx, cli.command) {
        Ok((status, output)) => render(&ctx, status, output),
        Err(Failure(msg)) => error_result(format!("error: {msg}\n")),
    }
}

fn error_result(message: String) -> CommandResult {
    let payload = json!({ "status": "error", "error": message.trim_end() });
    CommandResult {
        status: Status::Error,
        stdout: format!("{payload}\n"),
        payload,
        exit_code: Status::Error.exit_code(),
        stderr: message,
    }
}

fn with_status(status: Status, value: Value) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("status".into(), json!(status.as_str()));
    if let Value::Object(obj) = value {
        map.extend(obj);
    } else {
        map.insert("result".into(), value);
    }
    Value::Object(map)
}

fn render(ctx: &Ctx, status: Status, output: Output) -> CommandResult {
    let (payload, stdout) = match output {
        Output::Single(value) => {
            let payload = with_status(status, value);
            let text = format!(
                "{}\n",
                serde_json::to_string_pretty(&payload).expect("json")
            );
            (payload, text)
        }
        Output::Records {
            summary,
            records,
            csv,
        } => {
            let mut payload = with_status(status, summary);
            payload["records"] = Value::Array(records.clone());
            let text = if ctx.csv {
                match csv {
                    Some((header, rows)) => {
                        let mut t = header + "\n";
                        for r in rows {
                            t.push_str(&r);
                            t.push('\n');
                        }
                        t
                    }
                    None => {
                        return error_result(
                            "error: --csv is only supported by sweep and prop42\n".into(),
                        )
                    }
                }
            } else if ctx.jsonl {
                records.iter().map(|r| format!("{r}\n")).collect()
            } else {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&payload).expect("json")
                )
            };
            (payload, text)
        }
    };
    CommandResult {
        status,
        payload,
        exit_code: status.exit_code(),
        stdout,
        stderr: String::new(),
    }
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse::<Partition>()
        .map_err(|e| Failure(format!("partition `{s}`: {e}")))
}

fn parse_nat(s: &str, what: &str) -> Result<Natural, Failure> {
    s.trim()
        .parse::<Natural>()
        .map_err(|_| Failure(format!("{what}: `{s}` is not a non-negative integer")))
}

fn parse_rat(s: &str, what: &str) -> Result<Rational, Failure> {
    parse_rational(s).ok_or_else(|| Failure(format!("{what}: `{s}` is not a rational number")))
}

fn group_spec(args: &GroupArgs) -> Result<GroupSpec, Failure> {
    let family: Family = args.family.parse()?;
    Ok(GroupSpec::new(family, args.rank, args.q)?)
}

fn lie_error(e: LieError) -> Failure {
    Failure(e.to_string())
}

fn table_json(t: &DegreeTable) -> Value {
    let mut v = t.to_json();
    v["rat"] = json!(t.rat().to_string());
    v
}

fn dispatch(ctx: &Ctx, command: Command) -> Res {
    match command {
        Command::Hook(arg) => {
            let lambda = parse_partition(&arg.partition)?;
            let hooks = lambda.hooks();
            let degree = lambda.degree()?;
            Ok((
                Status::Pass,
                Output::Single(json!({
                    "partition": lambda.to_string(),
                    "n": lambda.size(),
                    "hooks": hooks.grid,
                    "H": hooks.product.to_string(),
                    "degree": degree.to_string(),
                })),
            ))
        }
        Command::Degree(arg) => {
            let lambda = parse_partition(&arg.partition)?;
            let degree = lambda.degree()?;
            Ok((
                Status::Pass,
                Output::Single(
                    json!({ "partition": lambda.to_string(), "n": lambda.size(), "degree": degree.to_string() }),
                ),
            ))
        }
        Command::Conjugate(arg) => {
            let lambda = parse_partition(&arg.partition)?;
            let conj = lambda.conjugate();
            Ok((
                Status::Pass,
                Output::Single(json!({
                    "partition": lambda.to_string(),
                    "conjugate": conj.to_string(),
                    "self_conjugate": lambda.is_self_conjugate(),
                })),
            ))
        }
        Command::Gamma { m, n } => {
            if m == 0 {
                return Err(Failure("m must be at least 1".into()));
            }
            let members: Vec<Partition> = match n {
                Some(n) => gamma_of_size(m, n),
                None => enumerate_gamma(m).collect(),
            };
            let records = members
                .iter()
                .map(|l| json!({ "partition": l.to_string(), "n": l.size(), "self_conjugate": l.is_self_conjugate() }))
                .collect::<Vec<_>>();
            Ok((
                Status::Pass,
                Output::Records {
                    summary: json!({ "m": m, "count": records.len() }),
                    records,
                    csv: None,
                },
            ))
        }
        Command::Prop42 { n, from, to, best } => {
            let (from, to) = match (n, from, to) {
                (Some(n), _, _) => (n, n),
                (None, Some(a), Some(b)) => (a, b),
                (None, Some(a), None) => (a, a),
                _ => return Err(Failure("give --n or --from/--to".into())),
            };
            if to < from {
                return Err(Failure(format!("empty range {from}..{to}")));
            }
            let mode = if best {
                SearchMode::Best
            } else {
                SearchMode::First
            };
            let reports = check_prop42_range(from, to, mode, ctx.parallel)?;
            let failed: Vec<usize> = reports.iter().filter(|r| !r.passed).map(|r| r.n).collect();
            let records: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
            let rows = reports
                .iter()
                .map(|r| {
                    format!(
                        "{},\"{}\",{},{},{:?},{}",
                        r.n, r.witness, r.hook_product, r.degree, r.source, r.passed
                    )
                    .to_lowercase()
                })
                .collect();
            Ok((
                Status::from_bool(failed.is_empty()),
                Output::Records {
                    summary: json!({ "from": from, "to": to, "count": records.len(), "failed": failed }),
                    records,
                    csv: Some(("n,witness,hook_product,degree,source,passed".into(), rows)),
                },
            ))
        }
        Command::Lemma43 { n, constant } => {
            if constant {
                let (d, used) = decide_with_escalation(ctx.digits, check_stirling_constant);
                return Ok((
                    Status::from_decision(d),
                    Output::Single(json!({ "check": "constant", "decision": d, "digits": used })),
                ));
            }
            let n = n.expect("clap requires --n without --constant");
            check_lemma_lower(n, ctx.digits)?;
            let (d, used) = decide_with_escalation(ctx.digits, |digits| {
                check_lemma_lower(n, digits).expect("n checked")
            });
            Ok((
                Status::from_decision(d),
                Output::Single(json!({ "n": n, "decision": d, "digits": used })),
            ))
        }
        Command::Lemma45 { m } => {
            if m == 0 {
                return Err(Failure("m must be at least 1".into()));
            }
            let ok = check_lemma_upper(m);
            let bound = format!("{}^{}", m + 1, (m + 1) * (m + 1));
            Ok((
                Status::from_bool(ok),
                Output::Single(json!({ "m": m, "bound": bound, "holds": ok })),
            ))
        }
        Command::Lemma46 { n } => {
            if n == 0 {
                return Err(Failure("n must be at least 1".into()));
            }
            let (d, used) = decide_with_escalation(ctx.digits, |digits| check_lemma46(n, digits));
            Ok((
                Status::from_decision(d),
                Output::Single(json!({ "n": n, "decision": d, "digits": used })),
            ))
        }
        Command::Cyclotomic { k, q } => {
            let poly = cyclotomic(k)?;
            let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
            let mut v = json!({ "k": k, "polynomial": poly.to_string(), "coefficients": coeffs, "degree": poly.degree() });
            if let Some(q) = q {
                v["q"] = json!(q.to_string());
                v["value"] = json!(cyclotomic_value(k, &q.into())?.to_string());
            }
            Ok((Status::Pass, Output::Single(v)))
        }
        Command::Order(args) => {
            let spec = group_spec(&args)?;
            let o = order(&spec).map_err(lie_error)?;
            Ok((
                Status::Pass,
                Output::Single(json!({ "group": spec.label(), "order": o.to_string() })),
            ))
        }
        Command::Steinberg(args) => {
            let spec = group_spec(&args)?;
            let st = steinberg_degree(&spec).map_err(lie_error)?;
            Ok((
                Status::Pass,
                Output::Single(json!({ "group": spec.label(), "steinberg": st.to_string() })),
            ))
        }
        Command::Beta(args) => {
            let spec = group_spec(&args)?;
            let pair = beta_degree(&spec).map_err(lie_error)?;
            Ok((
                Status::Pass,
                Output::Single(json!({
                    "group": spec.label(),
                    "alpha": pair.alpha_degree.to_string(),
                    "beta": pair.beta_degree.to_string(),
                    "beta_label": pair.beta_label,
                })),
            ))
        }
        Command::Thm21(args) => {
            let report = check_thm21(&group_spec(&args)?).map_err(lie_error)?;
            Ok((
                Status::from_bool(report.passed_114),
                Output::Single(report.to_json()),
            ))
        }
        Command::Lemma61(args) => {
            let report = check_lemma61(&group_spec(&args)?).map_err(lie_error)?;
            Ok((
                Status::from_bool(report.passed_165),
                Output::Single(report.to_json()),
            ))
        }
        Command::Sweep {
            families,
            rank_max,
            q_max,
            exceptional_q_max,
            check,
        } => {
            let families = parse_families(&families)?;
            let check = match check.as_str() {
                "thm21" => SweepCheck::Thm21,
                "lemma61" => SweepCheck::Lemma61,
                other => {
                    return Err(Failure(format!(
                        "unknown check `{other}` (thm21 or lemma61)"
                    )))
                }
            };
            let mut config = SweepConfig::new(families, rank_max, q_max);
            config.exceptional_q_max = exceptional_q_max;
            config.check = check;
            let result = sweep_parallel(&config, ctx.parallel.unwrap_or(1));
            if let Some((spec, e)) = result.errors.first() {
                return Err(Failure(format!("{spec}: {e}")));
            }
            let failures: Vec<String> = result.failures(check).map(|r| r.spec.label()).collect();
            let records: Vec<Value> = result.reports.iter().map(Thm21Report::to_json).collect();
            let rows = result.reports.iter().map(Thm21Report::to_csv).collect();
            let excluded: Vec<Value> =
                result.excluded.iter().map(|x| json!({ "group": x.group, "rule": x.exclusion.rule, "reason": x.exclusion.reason })).collect();
            Ok((
                Status::from_bool(failures.is_empty()),
                Output::Records {
                    summary: json!({
                        "check": check,
                        "count": records.len(),
                        "failures": failures,
                        "excluded": excluded,
                    }),
                    records,
                    csv: Some((Thm21Report::CSV_HEADER.to_string(), rows)),
                },
            ))
        }
        Command::Rat { degrees, table } => {
            let t = match (degrees, table) {
                (Some(d), None) => {
                    let degrees = d
                        .split(',')
                        .map(|x| parse_nat(x, "degree"))
                        .collect::<Result<Vec<_>, _>>()?;
                    DegreeTable::new("input", degrees).map_err(Failure)?
                }
                (None, Some(name)) => find_table(&ctx.data, &name)?,
                _ => return Err(Failure("give --degrees or --table".into())),
            };
            Ok((
                Status::Pass,
                Output::Single(json!({
                    "name": t.name,
                    "b": t.b().to_string(),
                    "c": t.c().map(|c| c.to_string()),
                    "rat": t.rat().to_string(),
                })),
            ))
        }
        Command::SporadicCheck => {
            let tables = load_file(&ctx.data.join("sporadic.tsv"))?;
            let reports: Vec<_> = tables.iter().map(check_sporadic_thm21).collect();
            let all = reports.iter().all(|r| r.status == SporadicStatus::Passed);
            let records = reports.iter().map(|r| r.to_json()).collect::<Vec<_>>();
            Ok((
                Status::from_bool(all),
                Output::Records {
                    summary: json!({ "count": records.len() }),
                    records,
                    csv: None,
                },
            ))
        }
        Command::OutBound {
            out,
            order,
            exponent,
        } => {
            let cases: Vec<(String, Natural, Natural)> = match (out, order) {
                (Some(o), Some(s)) => vec![(
                    "input".into(),
                    parse_nat(&o, "out")?,
                    parse_nat(&s, "order")?,
                )],
                _ => data_tables(&ctx.data)?
                    .into_iter()
                    .filter_map(|t| Some((t.name.clone(), t.out_order?, t.order?)))
                    .collect(),
            };
            let exponent = exponent.map(|e| exponent_parts(&e)).transpose()?;
            let mut all = true;
            let mut records = Vec::with_capacity(cases.len());
            for (name, o, s) in &cases {
                let report = check_out_bound(name, o, s);
                let mut v = serde_json::to_value(&report).expect("json");
                let mut passed = report.passed();
                if let Some((num, den)) = exponent {
                    let ok = check_exponent_bound(o, s, num, den);
                    v["exponent_bound"] =
                        json!({ "exponent": format!("{num}/{den}"), "holds": ok });
                    passed &= ok;
                }
                v["passed"] = json!(passed);
                all &= passed;
                records.push(v);
            }
            Ok((
                Status::from_bool(all),
                Output::Records {
                    summary: json!({ "count": records.len() }),
                    records,
                    csv: None,
                },
            ))
        }
        Command::ChiefseriesBound { file, json } => {
            let text = match (file, json) {
                (Some(path), None) => read_text(&path)?,
                (None, Some(j)) => j,
                _ => return Err(Failure("give --file or --json".into())),
            };
            let series = ChiefSeries::from_json(&text)?;
            let bound = rat14_lower_bound(&series);
            Ok((
                Status::Pass,
                Output::Single(
                    json!({ "factors": series.factors.len(), "rat14_lower_bound": bound.to_string() }),
                ),
            ))
        }
        Command::Prop23 {
            rat_g,
            rat_gn,
            order_n,
        } => {
            let ok = prop23_check(
                &parse_rat(&rat_g, "rat-g")?,
                &parse_rat(&rat_gn, "rat-gn")?,
                &parse_nat(&order_n, "order-n")?,
            )?;
            Ok((
                Status::from_bool(ok),
                Output::Single(json!({ "holds": ok })),
            ))
        }
        Command::Maroti { n, d } => {
            let b = maroti_bound(n, d)?;
            Ok((
                Status::Pass,
                Output::Single(json!({ "n": n, "d": d, "bound": b.to_string() })),
            ))
        }
        Command::Prop32 { order_n } => {
            let b = prop32_bound(&parse_nat(&order_n, "order-n")?);
            Ok((
                Status::Pass,
                Output::Single(json!({ "order_n": order_n.trim(), "bound": b.to_string() })),
            ))
        }
        Command::ThmB { rat_g, index } => {
            let ok = thmB_check(&parse_rat(&rat_g, "rat-g")?, &parse_nat(&index, "index")?)?;
            Ok((
                Status::from_bool(ok),
                Output::Single(json!({ "holds": ok })),
            ))
        }
        Command::ExampleFrobenius { p, m } => {
            let t = frobenius_example(p, m)?;
            Ok((Status::Pass, Output::Single(table_json(&t))))
        }
        Command::ExampleExtraspecial { p, i } => {
            let t = extraspecial_example(p, i)?;
            Ok((Status::Pass, Output::Single(table_json(&t))))
        }
        Command::ValidateData { file } => {
            let tables = match file {
                Some(path) => load_file(&path)?,
                None => data_tables(&ctx.data)?,
            };
            let records: Vec<Value> = tables
                .iter()
                .map(|t| json!({ "name": t.name, "degrees": t.degrees.len(), "squares_match_order": t.squares_match_order() }))
                .collect();
            let all = tables
                .iter()
                .all(|t| t.squares_match_order() != Some(false));
            Ok((
                Status::from_bool(all),
                Output::Records {
                    summary: json!({ "count": records.len() }),
                    records,
                    csv: None,
                },
            ))
        }
    }
}

fn parse_families(s: &str) -> Result<Vec<Family>, Failure> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        match item {
            "all" => out.extend(Family::ALL),
            "classical" => out.extend(Family::classical()),
            "exceptional" => out.extend(Family::exceptional()),
            name => out.push(name.parse()?),
        }
    }
    Ok(out)
}

/// A positive rational exponent as `(num, den)` in lowest terms.
fn exponent_parts(s: &str) -> Result<(u32, u32), Failure> {
    let r = parse_rat(s, "exponent")?;
    let num = u32::try_from(r.numer()).ok();
    let den = u32::try_from(r.denom()).ok();
    match (num, den) {
        (Some(n), Some(d)) if n > 0 => Ok((n, d)),
        _ => Err(Failure(format!(
            "exponent `{s}` must be a positive rational with small numerator and denominator"
        ))),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn data_tables(dir: &Path) -> Result<Vec<DegreeTable>, Failure> {
    let mut tables = Vec::new();
    for name in ["sporadic.tsv", "small_groups.tsv"] {
        let path = dir.join(name);
        if path.exists() {
            tables.extend(load_file(&path)?);
        }
    }
    if tables.is_empty() {
        return Err(Failure(format!("no data files found in {}", dir.display())));
    }
    Ok(tables)
}

fn find_table(dir: &Path, name: &str) -> Result<DegreeTable, Failure> {
    data_tables(dir)?
        .into_iter()
        .find(|t| t.name == name)
        .ok_or_else(|| Failure(format!("no table named `{name}` in {}", dir.display())))
}
