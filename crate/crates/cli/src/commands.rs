use std::fs;
use std::time::Instant;

use colored_eulerian::letter::parse_word;
use colored_eulerian::ppartition::{
    count_ppartitions_bruteforce, eulerian_polynomial, omega_detached_chain, omega_pi, omega_via_extensions,
};
use colored_eulerian::verify::{self, PartitionKind, SuiteReport};
use colored_eulerian::{
    ClassPartition, ColoredGroup, ColoredPermutation, ColoredPoset, IdempotentTable, Limits, StructureConstants,
    TruncatedSeries,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::args::{Command, Format, GlobalArgs, PartitionArg, Range, Suite};
use crate::cache;
use crate::error::CliError;
use crate::report::{to_validated_json, Report};

/// What to print and whether every check held.
pub struct Outcome {
    pub passed: bool,
    pub stdout: String,
}

pub fn run(command: &Command, config: &GlobalArgs) -> Result<Outcome, CliError> {
    let limits = Limits::default().with_max_group_size(config.max_group_size);
    let start = Instant::now();
    match command {
        Command::Enumerate => enumerate(config, &limits, start),
        Command::Verify { suite, naive } => verify_suite(*suite, *naive, config, &limits, start),
        Command::Idempotents => idempotents(config, &limits, start),
        Command::EulerianPoly => eulerian_poly(config, &limits, start),
        Command::OrderPoly { pi, poset, detached, bruteforce } => {
            order_poly(pi.as_deref(), poset.as_deref(), *detached, *bruteforce, config, &limits, start)
        }
        Command::StructureConstants { partition } => structure_constants(*partition, config, &limits, start),
    }
}

fn require<T: Copy>(value: Option<T>, default: Option<T>, flag: &str) -> Result<T, CliError> {
    value.or(default).ok_or_else(|| CliError::Usage(format!("--{flag} is required")))
}

fn report_json<T: Serialize + DeserializeOwned + PartialEq>(
    command: &str,
    config: &GlobalArgs,
    start: Instant,
    passed: bool,
    result: T,
) -> Result<String, CliError> {
    Report::new(command, config, start.elapsed(), passed, result).to_json()
}

fn write_artifact<T: Serialize + DeserializeOwned + PartialEq>(config: &GlobalArgs, artifact: &T) -> Result<(), CliError> {
    if let Some(path) = &config.output {
        fs::write(path, to_validated_json(artifact)? + "\n")?;
    }
    Ok(())
}

fn csv_string(rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.write_record(row)?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Schema(e.to_string()))
}

fn set_string(set: &[usize]) -> String {
    format!("{{{}}}", set.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerateRecord {
    pub rank: usize,
    pub one_line: String,
    pub permutation: ColoredPermutation,
    pub descent_set: Vec<usize>,
    pub des: usize,
    pub intdes: usize,
    pub mr_key: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerateResult {
    pub r: u32,
    pub n: usize,
    pub count: usize,
    pub records: Vec<EnumerateRecord>,
}

fn enumerate(config: &GlobalArgs, limits: &Limits, start: Instant) -> Result<Outcome, CliError> {
    let r = require(config.r, None, "r")?;
    let n = require(config.n, None, "n")?;
    let group = ColoredGroup::new(r, n, limits)?;
    let records: Vec<EnumerateRecord> = group
        .elements()
        .iter()
        .enumerate()
        .map(|(rank, p)| {
            let profile = p.descent_profile();
            EnumerateRecord {
                rank,
                one_line: p.to_string(),
                permutation: p.clone(),
                descent_set: profile.descent_set,
                des: profile.des,
                intdes: profile.intdes,
                mr_key: p.mr_key().to_string(),
            }
        })
        .collect();
    let stdout = match config.format {
        Format::Json => {
            let result = EnumerateResult { r, n, count: records.len(), records };
            report_json("enumerate", config, start, true, result)? + "\n"
        }
        Format::Csv => {
            let mut rows = vec![["rank", "permutation", "descent_set", "des", "intdes", "mr_key"].map(String::from).to_vec()];
            rows.extend(records.iter().map(|rec| {
                vec![
                    rec.rank.to_string(),
                    rec.one_line.clone(),
                    set_string(&rec.descent_set),
                    rec.des.to_string(),
                    rec.intdes.to_string(),
                    rec.mr_key.clone(),
                ]
            }));
            csv_string(rows)?
        }
        Format::Text => records
            .iter()
            .map(|rec| {
                let word = if rec.one_line.is_empty() { "()" } else { &rec.one_line };
                format!(
                    "{:>6}  {word}  Des={} des={} intdes={} mr={}\n",
                    rec.rank,
                    set_string(&rec.descent_set),
                    rec.des,
                    rec.intdes,
                    rec.mr_key
                )
            })
            .collect(),
    };
    Ok(Outcome { passed: true, stdout })
}

fn range_max(range: Option<Range>, default: u32) -> u32 {
    range.map_or(default, |r| r.hi)
}

fn closure_suite(kind: PartitionKind, config: &GlobalArgs, limits: &Limits) -> Result<SuiteReport, CliError> {
    let r = require(config.r, Some(2), "r")?;
    let n = require(config.n, Some(2), "n")?;
    let (report, constants) = verify::closure(r, n, kind, limits)?;
    if let (Some(dir), Some(constants)) = (&config.cache, &constants) {
        cache::store(dir, constants)?;
    }
    Ok(report)
}

fn verify_suite(suite: Suite, naive: bool, config: &GlobalArgs, limits: &Limits, start: Instant) -> Result<Outcome, CliError> {
    let rn = |r: u32, n: usize| -> Result<(u32, usize), CliError> {
        Ok((require(config.r, Some(r), "r")?, require(config.n, Some(n), "n")?))
    };
    let report = match suite {
        Suite::Ftcpp => {
            let (max_r, max_len) = rn(3, 4)?;
            verify::ftcpp(config.seed, config.cases, max_r, max_len, range_max(config.j, 3), limits)?
        }
        Suite::OrderPoly => {
            let (r, n) = rn(3, 3)?;
            verify::order_poly(r, n, range_max(config.j, 3), limits)?
        }
        Suite::Zigzag => {
            let (r, n) = rn(3, 3)?;
            verify::zigzag(r, n, limits)?
        }
        Suite::Chain => {
            let (r, n) = rn(3, 3)?;
            verify::chain(r, n, limits)?
        }
        Suite::Barred => {
            let (r, n) = rn(2, 3)?;
            verify::barred(r, n, range_max(config.j, 3), range_max(config.k, 3), limits)?
        }
        Suite::Steingrimsson => {
            let (r, n) = rn(2, 2)?;
            verify::steingrimsson(r, n, range_max(config.j, 4), limits)?
        }
        Suite::ClosureDes => closure_suite(PartitionKind::Des, config, limits)?,
        Suite::ClosureMr => closure_suite(PartitionKind::Mr, config, limits)?,
        Suite::ClosureDesset => closure_suite(PartitionKind::DesSet, config, limits)?,
        Suite::Phi => {
            let (r, n) = rn(5, 3)?;
            verify::phi(r, n, range_max(config.j, 2), naive, limits)?
        }
        Suite::Idempotents => {
            let (r, n) = rn(5, 3)?;
            verify::idempotents(r, n, limits)?
        }
        Suite::Variants => {
            let (r, n) = rn(2, 2)?;
            verify::variants(r, n, limits)?
        }
    };
    let passed = report.passed();
    let stdout = match config.format {
        Format::Json => report_json("verify", config, start, passed, report)? + "\n",
        Format::Csv => {
            let mut rows = vec![["suite", "checks", "failures", "passed", "first_failure"].map(String::from).to_vec()];
            rows.push(vec![
                report.suite.clone(),
                report.checks.to_string(),
                report.failure_count.to_string(),
                passed.to_string(),
                report.failures.first().map(Value::to_string).unwrap_or_default(),
            ]);
            csv_string(rows)?
        }
        Format::Text => {
            let mut out = format!(
                "{}: {} ({} checks, {} failed)\n",
                report.suite,
                if passed { "PASS" } else { "FAIL" },
                report.checks,
                report.failure_count
            );
            for f in &report.failures {
                out.push_str(&format!("  witness: {f}\n"));
            }
            if let Some(rendered) = report.details.get("rendered").and_then(Value::as_str) {
                out.push_str(rendered);
                out.push('\n');
            }
            out
        }
    };
    Ok(Outcome { passed, stdout })
}

fn idempotents(config: &GlobalArgs, limits: &Limits, start: Instant) -> Result<Outcome, CliError> {
    let r = require(config.r, None, "r")?;
    let n = require(config.n, None, "n")?;
    // refuse the same sizes the group-level commands refuse
    colored_eulerian::group::enumerate_group(r, n, limits)?;
    let table = IdempotentTable::new(r, n)?;
    let json = table.to_json();
    write_artifact(config, &json)?;
    let stdout = match config.format {
        Format::Json => report_json("idempotents", config, start, true, json)? + "\n",
        Format::Csv => {
            let mut rows = vec![["i", "des", "num", "den", "over_common_denominator"].map(String::from).to_vec()];
            for i in 0..=n {
                let scaled = table.scaled_row(i);
                for (d, a) in scaled.iter().enumerate() {
                    let q = table.coefficient(i, d);
                    rows.push(vec![i.to_string(), d.to_string(), q.numer().to_string(), q.denom().to_string(), a.to_string()]);
                }
            }
            csv_string(rows)?
        }
        Format::Text => table.render() + "\n",
    };
    Ok(Outcome { passed: true, stdout })
}

fn bracket(values: &[String]) -> String {
    format!("[{}]", values.join(","))
}

fn eulerian_poly(config: &GlobalArgs, limits: &Limits, start: Instant) -> Result<Outcome, CliError> {
    let r = require(config.r, None, "r")?;
    let n = require(config.n, None, "n")?;
    let series: TruncatedSeries = eulerian_polynomial(r, n, limits)?;
    write_artifact(config, &series)?;
    let coeffs: Vec<String> = series.coefficients.iter().map(ToString::to_string).collect();
    let stdout = match config.format {
        Format::Json => report_json("eulerian-poly", config, start, true, series)? + "\n",
        Format::Csv => {
            let mut rows = vec![vec!["des".to_string(), "count".to_string()]];
            rows.extend(coeffs.iter().enumerate().map(|(d, c)| vec![d.to_string(), c.clone()]));
            csv_string(rows)?
        }
        Format::Text => bracket(&coeffs) + "\n",
    };
    Ok(Outcome { passed: true, stdout })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderPolyValue {
    pub j: u32,
    pub count: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bruteforce: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderPolyResult {
    pub op: String,
    pub params: Value,
    pub values: Vec<OrderPolyValue>,
}

type Counter = Box<dyn Fn(u32) -> Result<String, CliError>>;

fn order_poly(
    pi: Option<&str>,
    poset_path: Option<&std::path::Path>,
    detached: bool,
    bruteforce: bool,
    config: &GlobalArgs,
    limits: &Limits,
    start: Instant,
) -> Result<Outcome, CliError> {
    let js: Vec<u32> = config.j.unwrap_or(Range { lo: 0, hi: 3 }).values().collect();
    let (op, params, poset, closed): (&str, Value, ColoredPoset, Counter) =
        match (pi, poset_path) {
            (Some(word), None) => {
                let r = require(config.r, None, "r")?;
                let p = ColoredPermutation::new(r, parse_word(word)?)?;
                let n = p.n();
                let poset = if detached {
                    ColoredPoset::detached_chain(r, n, p.letters())?
                } else {
                    ColoredPoset::word_chain(r, n, p.letters())?
                };
                let op = if detached { "omega_detached_chain" } else { "omega_pi" };
                let params = json!({"pi": p.to_string(), "r": r, "n": n});
                let f: Counter = if detached {
                    Box::new(move |j| Ok(omega_detached_chain(&p, j).to_string()))
                } else {
                    Box::new(move |j| Ok(omega_pi(&p, j).to_string()))
                };
                (op, params, poset, f)
            }
            (None, Some(path)) => {
                let poset: ColoredPoset = serde_json::from_str(&fs::read_to_string(path)?)?;
                let params = serde_json::to_value(&poset)?;
                let p2 = poset.clone();
                let limits = *limits;
                let f: Counter = Box::new(move |j| Ok(omega_via_extensions(&p2, j, &limits)?.to_string()));
                ("omega_via_extensions", params, poset, f)
            }
            _ => return Err(CliError::Usage("exactly one of --pi or --poset is required".into())),
        };
    let mut values = Vec::with_capacity(js.len());
    let mut passed = true;
    for &j in &js {
        let count = closed(j)?;
        let brute = if bruteforce { Some(count_ppartitions_bruteforce(&poset, j, limits)?.to_string()) } else { None };
        passed &= brute.as_ref().is_none_or(|b| *b == count);
        values.push(OrderPolyValue { j, count, bruteforce: brute });
    }
    let result = OrderPolyResult { op: op.to_string(), params, values };
    write_artifact(config, &result)?;
    let stdout = match config.format {
        Format::Json => report_json("order-poly", config, start, passed, result)? + "\n",
        Format::Csv => {
            let mut rows = vec![vec!["j".to_string(), "count".to_string(), "bruteforce".to_string()]];
            rows.extend(result.values.iter().map(|v| vec![v.j.to_string(), v.count.clone(), v.bruteforce.clone().unwrap_or_default()]));
            csv_string(rows)?
        }
        Format::Text => {
            let counts: Vec<String> = result.values.iter().map(|v| v.count.clone()).collect();
            let mut out = bracket(&counts) + "\n";
            if bruteforce {
                out.push_str(if passed { "bruteforce: agrees\n" } else { "bruteforce: DISAGREES\n" });
            }
            out
        }
    };
    Ok(Outcome { passed, stdout })
}

fn structure_constants(partition: PartitionArg, config: &GlobalArgs, limits: &Limits, start: Instant) -> Result<Outcome, CliError> {
    let r = require(config.r, Some(2), "r")?;
    let n = require(config.n, Some(2), "n")?;
    let kind = match partition {
        PartitionArg::Des => PartitionKind::Des,
        PartitionArg::Mr => PartitionKind::Mr,
    };
    let group = ColoredGroup::new(r, n, limits)?;
    let name = kind.build(&group).name().to_string();
    let cached = config.cache.as_deref().and_then(|dir| cache::load(dir, r, n, &name));
    let constants = match cached {
        Some(c) => {
            eprintln!("structure constants loaded from cache");
            c
        }
        None => {
            let part: ClassPartition = kind.build(&group);
            let report = colored_eulerian::algebra::verify_closure(&group, &part, limits)?;
            let c = StructureConstants::from_report(&report)?;
            if let Some(dir) = &config.cache {
                let path = cache::store(dir, &c)?;
                eprintln!("structure constants written to {}", path.display());
            }
            c
        }
    };
    write_artifact(config, &constants)?;
    let stdout = match config.format {
        Format::Json => report_json("structure-constants", config, start, true, constants)? + "\n",
        Format::Csv => {
            let mut rows = vec![["j", "k", "i", "m"].map(String::from).to_vec()];
            for (j, plane) in constants.tensor.iter().enumerate() {
                for (k, row) in plane.iter().enumerate() {
                    for (i, m) in row.iter().enumerate() {
                        rows.push(vec![j.to_string(), k.to_string(), i.to_string(), m.to_string()]);
                    }
                }
            }
            csv_string(rows)?
        }
        Format::Text => {
            let mut out = format!("classes: {}\n", constants.class_keys.join(" "));
            for (j, plane) in constants.tensor.iter().enumerate() {
                for (k, row) in plane.iter().enumerate() {
                    let terms: Vec<String> = row.iter().map(ToString::to_string).collect();
                    out.push_str(&format!("[{}]·[{}] = {}\n", constants.class_keys[j], constants.class_keys[k], bracket(&terms)));
                }
            }
            out
        }
    };
    Ok(Outcome { passed: true, stdout })
}
