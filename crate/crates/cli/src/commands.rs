use std::f64::consts::LN_10;
use std::fs;
use std::io::{self, Read, Write};

use hextree::asymptotics::{
    asym_mean_height, asym_mean_leaves, asym_mean_register, count_relative_error, ln_asym_count, ln_big,
};
use hextree::bijections::{Bijection, BijectionError};
use hextree::codec::{self, DecodeError};
use hextree::enumerate::{count_ub_closed, counts, generate, oeis_check, Family, OeisReport};
use hextree::exact::Rational;
use hextree::register::{hs_distribution_series, mean_register};
use hextree::series::solve_gf;
use hextree::stats::{height_le_closed, mean_height, mean_leaves_at};
use hextree::structures::{validate, Object};
use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use crate::table::{Cell, Table};
use crate::{
    AsymArgs, AsymQuery, BijectArgs, Command, CountArgs, GenArgs, OeisArgs, RegisterArgs, RegisterQuery, SeriesArgs,
    SizeRange, StatsArgs, StatsQuery, ValidateArgs,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error("input object {index}: {source}")]
    Decode { index: usize, source: DecodeError },
    #[error("cannot read input: {0}")]
    Input(io::Error),
    #[error(transparent)]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

type CliResult = Result<(), CliError>;

type Direction = fn(Bijection, &Object) -> Result<Object, BijectionError>;

pub fn run(command: Command, out: &mut impl Write) -> CliResult {
    match command {
        Command::Count(args) => count(args, out),
        Command::Gen(args) => gen(args, out),
        Command::Series(args) => series(args, out),
        Command::Biject(args) => biject(args, out),
        Command::Register(args) => register(args, out),
        Command::Stats(args) => stats(args, out),
        Command::Asym(args) => asym(args, out),
        Command::Oeis(args) => oeis(args, out),
        Command::Validate(args) => validate_objects(args, out),
    }
}

fn coloured(family: Family, colours: Option<u32>) -> Result<Family, CliError> {
    match (family, colours) {
        (_, None) => Ok(family),
        (Family::Ub(_), Some(a)) => Ok(Family::Ub(a)),
        (other, Some(_)) => Err(CliError::Usage(format!("--colours only applies to `ub`, not `{other}`"))),
    }
}

fn family_label(family: Family) -> String {
    match family {
        Family::Ub(a) => format!("ub:{a}"),
        other => other.to_string(),
    }
}

/// Exact rational as `num/den`, with the denominator always present.
fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn require_positive(range: SizeRange, what: &str) -> Result<(), CliError> {
    if range.start == 0 {
        return Err(CliError::Usage(format!("{what} is defined for n >= 1")));
    }
    Ok(())
}

/// Evaluate `f` at every size, spread over `jobs` threads; results come back
/// in the order of `sizes`.
fn par_map<T: Send>(sizes: &[usize], jobs: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    let jobs = jobs.clamp(1, sizes.len().max(1));
    if jobs == 1 {
        return sizes.iter().map(|&n| f(n)).collect();
    }
    let mut slots: Vec<Option<T>> = sizes.iter().map(|_| None).collect();
    std::thread::scope(|scope| {
        let f = &f;
        let workers: Vec<_> = (0..jobs)
            .map(|w| {
                scope.spawn(move || {
                    sizes.iter().enumerate().skip(w).step_by(jobs).map(|(i, &n)| (i, f(n))).collect::<Vec<_>>()
                })
            })
            .collect();
        for worker in workers {
            for (i, value) in worker.join().expect("worker thread panicked") {
                slots[i] = Some(value);
            }
        }
    });
    slots.into_iter().map(|s| s.expect("every size is computed")).collect()
}

fn count(args: CountArgs, out: &mut impl Write) -> CliResult {
    let family = coloured(args.family, args.colours)?;
    let all = counts(family, args.n.end);
    let mut table = Table::new(&["family", "n", "count"]);
    for n in args.n.iter() {
        table.push(vec![Cell::Text(family_label(family)), Cell::Int(n as u64), Cell::Text(all[n].to_string())]);
    }
    Ok(table.write(args.format, out)?)
}

fn gen(args: GenArgs, out: &mut impl Write) -> CliResult {
    let family = coloured(args.family, args.colours)?;
    let mut remaining = args.limit.unwrap_or(usize::MAX);
    for n in args.n.iter() {
        for object in generate(family, n) {
            if remaining == 0 {
                return Ok(());
            }
            writeln!(out, "{}", codec::to_json_string(&object))?;
            remaining -= 1;
        }
    }
    Ok(())
}

fn series(args: SeriesArgs, out: &mut impl Write) -> CliResult {
    let family = coloured(args.family, args.colours)?;
    let (gf, shift) = family.gf_index(0);
    let s = solve_gf(gf, args.order + shift);
    let coeffs: Vec<String> = (0..=args.order).map(|n| s.coeff(n + shift).to_string()).collect();
    match args.format {
        crate::table::Format::Json => writeln!(out, "{}", json!(coeffs))?,
        crate::table::Format::Csv => {
            let mut table = Table::new(&["n", "coefficient"]);
            for (n, c) in coeffs.into_iter().enumerate() {
                table.push(vec![Cell::Int(n as u64), Cell::Text(c)]);
            }
            table.write(args.format, out)?;
        }
    }
    Ok(())
}

fn read_objects(input: &str) -> Result<Vec<Object>, CliError> {
    let text = if input == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(CliError::Input)?;
        buf
    } else {
        fs::read_to_string(input).map_err(CliError::Input)?
    };
    let mut values = Vec::new();
    for (index, value) in serde_json::Deserializer::from_str(&text).into_iter::<Value>().enumerate() {
        match value.map_err(|e| CliError::Decode { index, source: DecodeError::Json(e.to_string()) })? {
            Value::Array(items) => values.extend(items),
            other => values.push(other),
        }
    }
    if values.is_empty() {
        return Err(CliError::Failed("no input objects".into()));
    }
    values
        .iter()
        .enumerate()
        .map(|(index, v)| codec::decode(v).map_err(|source| CliError::Decode { index, source }))
        .collect()
}

fn biject(args: BijectArgs, out: &mut impl Write) -> CliResult {
    let b = args.bijection;
    let (there, back): (Direction, Direction) =
        if args.inverse { (Bijection::inverse, Bijection::forward) } else { (Bijection::forward, Bijection::inverse) };
    let mut mismatches = 0usize;
    for (index, object) in read_objects(&args.input)?.into_iter().enumerate() {
        let image = there(b, &object).map_err(|e| CliError::Failed(format!("input object {index}: {e}")))?;
        if !args.roundtrip {
            writeln!(out, "{}", codec::to_json_string(&image))?;
            continue;
        }
        let restored = back(b, &image).map_err(|e| CliError::Failed(format!("input object {index}: {e}")))?;
        let ok = restored == object;
        mismatches += usize::from(!ok);
        let mut report = json!({
            "input": codec::encode(&object),
            "image": codec::encode(&image),
            "roundtrip": if ok { "ok" } else { "mismatch" },
        });
        if let Object::Path(p) = &image {
            report["word"] = Value::String(p.word());
        }
        if !ok {
            report["restored"] = codec::encode(&restored);
        }
        writeln!(out, "{report}")?;
    }
    match mismatches {
        0 => Ok(()),
        k => Err(CliError::Failed(format!("{k} round trip(s) did not reproduce the input"))),
    }
}

fn register(args: RegisterArgs, out: &mut impl Write) -> CliResult {
    let a = u64::from(args.colours);
    let sizes = args.n.sizes();
    match args.query {
        RegisterQuery::Dist => {
            let dists = par_map(&sizes, args.jobs, |n| hs_distribution_series(a, n));
            let mut table = Table::new(&["n", "register", "count", "probability"]);
            for (n, dist) in sizes.iter().zip(&dists) {
                let total = dist.total();
                for (reg, c) in &dist.counts {
                    let p = Rational::new(c.clone(), total.clone());
                    table.push(vec![
                        Cell::Int(*n as u64),
                        Cell::Int(u64::from(*reg)),
                        Cell::Text(c.to_string()),
                        Cell::Text(fraction(&p)),
                    ]);
                }
            }
            table.write(args.format, out)?;
        }
        RegisterQuery::Mean => {
            let means = par_map(&sizes, args.jobs, |n| if n == 0 { Rational::from(0i64) } else { mean_register(n, a) });
            let mut table = Table::new(&["n", "mean", "approx"]);
            for (n, m) in sizes.iter().zip(&means) {
                table.push(vec![Cell::Int(*n as u64), Cell::Text(fraction(m)), Cell::Number(m.to_f64())]);
            }
            table.write(args.format, out)?;
        }
    }
    Ok(())
}

fn stats(args: StatsArgs, out: &mut impl Write) -> CliResult {
    if let Some(h) = args.height {
        if args.query != StatsQuery::Height {
            return Err(CliError::Usage("--height only applies to `stats height`".into()));
        }
        let s = height_le_closed(h, args.order);
        let mut table = Table::new(&["n", "trees"]);
        for n in 0..=args.order {
            table.push(vec![Cell::Int(n as u64), Cell::Text(s.coeff(n).to_string())]);
        }
        return Ok(table.write(args.format, out)?);
    }
    let range = args.n.ok_or_else(|| CliError::Usage("give --n, or --height for `stats height`".into()))?;
    require_positive(range, "the marked-tree mean")?;
    let sizes = range.sizes();
    let means = match args.query {
        StatsQuery::Leaves => par_map(&sizes, args.jobs, mean_leaves_at),
        StatsQuery::Height => {
            let all = mean_height(range.end);
            sizes.iter().map(|&n| all[n].clone()).collect()
        }
    };
    let mut table = Table::new(&["n", "mean", "approx"]);
    for (n, m) in sizes.iter().zip(&means) {
        table.push(vec![Cell::Int(*n as u64), Cell::Text(fraction(m)), Cell::Number(m.to_f64())]);
    }
    Ok(table.write(args.format, out)?)
}

/// `sign * exp(ln_abs)` in scientific notation, valid far beyond the `f64`
/// range.
fn scientific_from_ln(ln_abs: f64, negative: bool) -> String {
    let sign = if negative { "-" } else { "" };
    if !ln_abs.is_finite() {
        return if ln_abs < 0.0 { "0".into() } else { format!("{sign}inf") };
    }
    let log10 = ln_abs / LN_10;
    let mut exponent = log10.floor();
    let mut mantissa = 10f64.powf(log10 - exponent);
    if format!("{mantissa:.9}").starts_with("10") {
        mantissa /= 10.0;
        exponent += 1.0;
    }
    format!("{sign}{mantissa:.9}e{exponent}")
}

fn asym(args: AsymArgs, out: &mut impl Write) -> CliResult {
    require_positive(args.n, "the asymptotic expansion")?;
    let a = u64::from(args.colours);
    let sizes = args.n.sizes();
    let header: &[&'static str] =
        if args.compare_exact { &["n", "exact", "asymptotic", "abs_error", "rel_error"] } else { &["n", "asymptotic"] };
    let mut table = Table::new(header);

    if args.query == AsymQuery::Count {
        let exact: Vec<BigInt> =
            if args.compare_exact { par_map(&sizes, args.jobs, |n| count_ub_closed(n, a)) } else { Vec::new() };
        for (i, &n) in sizes.iter().enumerate() {
            let ln_asym = ln_asym_count(n as u64, a);
            let mut row = vec![Cell::Int(n as u64)];
            if let Some(e) = exact.get(i) {
                let rel = count_relative_error(n as u64, a, e);
                row.push(Cell::Text(e.to_string()));
                row.push(Cell::Text(scientific_from_ln(ln_asym, false)));
                row.push(Cell::Text(scientific_from_ln(ln_big(e) + rel.abs().ln(), rel < 0.0)));
                row.push(Cell::Number(rel));
            } else {
                row.push(Cell::Text(scientific_from_ln(ln_asym, false)));
            }
            table.push(row);
        }
        return Ok(table.write(args.format, out)?);
    }

    let asymptotic = |n: usize| match args.query {
        AsymQuery::Register => asym_mean_register(n as u64, a, args.terms),
        AsymQuery::Leaves => asym_mean_leaves(n as u64),
        AsymQuery::Height => asym_mean_height(n as u64),
        AsymQuery::Count => unreachable!("handled above"),
    };
    let exact: Vec<Rational> = match (args.compare_exact, args.query) {
        (false, _) => Vec::new(),
        (true, AsymQuery::Register) => par_map(&sizes, args.jobs, |n| mean_register(n, a)),
        (true, AsymQuery::Leaves) => par_map(&sizes, args.jobs, mean_leaves_at),
        (true, _) => {
            let all = mean_height(args.n.end);
            sizes.iter().map(|&n| all[n].clone()).collect()
        }
    };
    for (i, &n) in sizes.iter().enumerate() {
        let approx = asymptotic(n);
        let mut row = vec![Cell::Int(n as u64)];
        if let Some(e) = exact.get(i) {
            let e = e.to_f64();
            row.push(Cell::Number(e));
            row.push(Cell::Number(approx));
            row.push(Cell::Number(approx - e));
            row.push(Cell::Number((approx - e) / e));
        } else {
            row.push(Cell::Number(approx));
        }
        table.push(row);
    }
    Ok(table.write(args.format, out)?)
}

fn oeis(args: OeisArgs, out: &mut impl Write) -> CliResult {
    if !args.check {
        let mut table = Table::new(&["n", "count"]);
        if args.terms > 0 {
            for (n, c) in counts(Family::Hex, args.terms - 1).into_iter().enumerate() {
                table.push(vec![Cell::Int(n as u64), Cell::Text(c.to_string())]);
            }
        }
        return Ok(table.write(args.format, out)?);
    }
    let report = oeis_check(args.terms).map_err(|e| CliError::Usage(e.to_string()))?;
    let json_out = args.format == crate::table::Format::Json;
    match report {
        OeisReport::Ok { terms } => {
            if json_out {
                writeln!(out, "{}", json!({ "status": "ok", "terms": terms }))?;
            } else {
                writeln!(out, "ok")?;
            }
            Ok(())
        }
        OeisReport::Mismatch { index, expected, found } => {
            let message = format!("mismatch at n={index}: expected {expected}, found {found}");
            if json_out {
                let report = json!({
                    "status": "mismatch",
                    "n": index,
                    "expected": expected.to_string(),
                    "found": found.to_string(),
                });
                writeln!(out, "{report}")?;
            } else {
                writeln!(out, "{message}")?;
            }
            Err(CliError::Failed(message))
        }
    }
}

fn validate_objects(args: ValidateArgs, out: &mut impl Write) -> CliResult {
    let mut invalid = 0usize;
    for (index, object) in read_objects(&args.input)?.iter().enumerate() {
        let report = validate(object, args.colours);
        invalid += usize::from(!report.is_ok());
        let violations: Vec<Value> =
            report.violations.iter().map(|v| json!({ "kind": v.kind.to_string(), "location": v.location })).collect();
        writeln!(out, "{}", json!({ "index": index, "valid": report.is_ok(), "violations": violations }))?;
    }
    match invalid {
        0 => Ok(()),
        k => Err(CliError::Failed(format!("{k} invalid object(s)"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scientific_notation_survives_huge_values() {
        assert_eq!(scientific_from_ln(1000f64.ln(), false), "1.000000000e3");
        assert_eq!(scientific_from_ln(5000.0 * LN_10, true), "-1.000000000e5000");
        assert_eq!(scientific_from_ln(f64::NEG_INFINITY, false), "0");
    }

    #[test]
    fn par_map_keeps_order() {
        let sizes: Vec<usize> = (0..37).collect();
        let serial = par_map(&sizes, 1, |n| n * n);
        assert_eq!(par_map(&sizes, 4, |n| n * n), serial);
        assert_eq!(par_map(&[], 3, |n: usize| n), Vec::<usize>::new());
    }

    #[test]
    fn fractions_always_carry_a_denominator() {
        assert_eq!(fraction(&Rational::from(3i64)), "3/1");
        assert_eq!(fraction(&Rational::new(6, 4)), "3/2");
    }

    #[test]
    fn colours_only_for_ub() {
        assert_eq!(coloured(Family::Ub(1), Some(3)).unwrap(), Family::Ub(3));
        assert!(coloured(Family::Hex, Some(2)).is_err());
        assert_eq!(family_label(Family::Ub(2)), "ub:2");
    }
}
