//! CSV and JSON records. Every number is written with 12 significant digits.

use std::io::{self, Write};

use serde_json::{json, Map, Number, Value};

use crate::steering::{SteeringReport, ASYMMETRY_COLUMNS, DEFICIT_COLUMNS, STEERING_COLUMNS};
use crate::sweep::{OracleReport, SweepRow};

pub const SCHEMA_VERSION: &str = "steerbh-1";

const SIG_DIGITS: usize = 12;

/// `%.12g`-style formatting: 12 significant digits, trailing zeros dropped,
/// scientific notation outside `1e-4 <= |x| < 1e12`.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let sign = if x < 0.0 { "-" } else { "" };
    if (-4..SIG_DIGITS as i32).contains(&exp) {
        let (int_part, frac_part) = if exp >= 0 {
            let split = exp as usize + 1;
            (digits[..split].to_string(), digits[split..].to_string())
        } else {
            ("0".to_string(), format!("{}{}", "0".repeat((-exp - 1) as usize), digits))
        };
        let frac = frac_part.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    } else {
        let m = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{sign}{m}e{exp}")
    }
}

/// `x` rounded to 12 significant digits, as a JSON number.
pub fn json_num(x: f64) -> Value {
    let rounded: f64 = fmt_sig(x).parse().expect("formatted float parses");
    Number::from_f64(rounded).map(Value::Number).unwrap_or(Value::Null)
}

pub fn csv_columns() -> Vec<&'static str> {
    let mut cols = vec!["T", "r"];
    cols.extend(STEERING_COLUMNS);
    cols.extend(DEFICIT_COLUMNS);
    cols.extend(ASYMMETRY_COLUMNS);
    cols
}

pub fn csv_header() -> String {
    csv_columns().join(",")
}

pub fn csv_row(row: &SweepRow) -> String {
    let r = &row.report;
    [row.temperature, row.squeezing]
        .iter()
        .chain(&r.steering)
        .chain(&r.deficits)
        .chain(&r.asymmetry)
        .map(|&v| fmt_sig(v))
        .collect::<Vec<_>>()
        .join(",")
}

/// Header followed by one line per row.
pub fn write_csv<W: Write>(out: &mut W, rows: &[SweepRow]) -> io::Result<()> {
    writeln!(out, "{}", csv_header())?;
    for row in rows {
        writeln!(out, "{}", csv_row(row))?;
    }
    Ok(())
}

fn named(pairs: impl Iterator<Item = (&'static str, f64)>) -> Value {
    Value::Object(pairs.map(|(k, v)| (k.to_string(), json_num(v))).collect::<Map<_, _>>())
}

fn report_fields(obj: &mut Map<String, Value>, report: &SteeringReport) {
    obj.insert("steering".into(), named(report.named_steering()));
    obj.insert("deficits".into(), named(report.named_deficits()));
    obj.insert("asymmetry".into(), named(report.named_asymmetry()));
    obj.insert("monogamous".into(), Value::Bool(report.monogamous));
}

/// A row as `{params, steering, deficits, asymmetry, monogamous}`.
pub fn row_json(s: f64, omega: f64, row: &SweepRow) -> Value {
    let mut obj = Map::new();
    obj.insert(
        "params".into(),
        json!({
            "s": json_num(s),
            "omega": json_num(omega),
            "T": json_num(row.temperature),
            "r": json_num(row.squeezing),
        }),
    );
    report_fields(&mut obj, &row.report);
    Value::Object(obj)
}

pub fn point_json(s: f64, omega: f64, row: &SweepRow) -> Value {
    let mut obj = Map::new();
    obj.insert("schema".into(), Value::from(SCHEMA_VERSION));
    if let Value::Object(fields) = row_json(s, omega, row) {
        obj.extend(fields);
    }
    Value::Object(obj)
}

pub fn sweep_json(s: f64, omega: f64, rows: &[SweepRow]) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "rows": rows.iter().map(|row| row_json(s, omega, row)).collect::<Vec<_>>(),
    })
}

pub fn oracle_json(s: f64, omega: f64, report: &OracleReport) -> Value {
    let deviations: Map<String, Value> =
        report.deviations.iter().map(|d| (format!("G_{}", d.tag), json_num(d.max_abs_deviation))).collect();
    let published: Vec<Value> =
        report.deviations.iter().filter(|d| d.published).map(|d| Value::from(format!("G_{}", d.tag))).collect();
    json!({
        "schema": SCHEMA_VERSION,
        "params": { "s": json_num(s), "omega": json_num(omega) },
        "tolerance": json_num(report.tolerance),
        "max_abs_deviation": deviations,
        "published": published,
        "collective_symmetry_gap": json_num(report.collective_symmetry_gap),
        "purity_deviation": json_num(report.purity_deviation),
        "pass": report.pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(-0.0), "0");
        assert_eq!(fmt_sig(1.0), "1");
        assert_eq!(fmt_sig(1.3250027473578645), "1.32500274736");
        assert_eq!(fmt_sig(-0.05), "-0.05");
        assert_eq!(fmt_sig(3.0), "3");
        assert_eq!(fmt_sig(123456.0), "123456");
        assert_eq!(fmt_sig(0.000012345678901234), "1.23456789012e-5");
        assert_eq!(fmt_sig(0.00012345678901234), "0.000123456789012");
        assert_eq!(fmt_sig(1.5e-13), "1.5e-13");
        assert_eq!(fmt_sig(9.9999999999996), "10");
        assert_eq!(fmt_sig(2.5e12), "2.5e12");
    }

    #[test]
    fn formatted_values_round_trip_to_twelve_digits() {
        for x in [0.997880477701214, 6.53368265684778, 1e-7 / 3.0, 12345.678901234567] {
            let back: f64 = fmt_sig(x).parse().unwrap();
            assert!((back - x).abs() <= 5e-12 * x.abs());
        }
    }

    #[test]
    fn header_layout() {
        let expected = "T,r,G_A_to_B,G_B_to_A,G_A_to_Bbar,G_Bbar_to_A,G_B_to_Bbar,G_Bbar_to_B,\
G_AB_to_Bbar,G_ABbar_to_B,G_BBbar_to_A,G_A_to_BBbar,G_B_to_ABbar,G_Bbar_to_AB,\
D21_AB_Bbar,D21_ABbar_B,D21_BBbar_A,D12_A_BBbar,D12_B_ABbar,D12_Bbar_AB,\
Dasym_AB_Bbar,Dasym_ABbar_B,Dasym_BBbar_A";
        assert_eq!(csv_header(), expected);
    }
}
