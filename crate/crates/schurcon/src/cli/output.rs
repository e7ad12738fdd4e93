//! Deterministic rendering: every float prints with 12 significant digits,
//! so identical runs produce byte-identical files.

use std::io::{self, Write};

use num_bigint::BigUint;
use serde_json::Value;

use crate::young::Partition;

/// Formats a float with 12 significant digits, plain decimal notation for
/// moderate magnitudes and exponent notation outside them.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let formatted = format!("{:.11e}", x);
    let (mantissa, exp) = formatted.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("exponent digits");
    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let sign = if neg { "-" } else { "" };
    // Decimal point sits after `point` digits of the significand.
    let point = exp + 1;
    let body = if (1..=15).contains(&point) {
        let point = point as usize;
        if digits.len() <= point {
            format!("{}{}", digits, "0".repeat(point - digits.len()))
        } else {
            format!("{}.{}", &digits[..point], &digits[point..])
        }
    } else if point <= 0 && point > -4 {
        format!("0.{}{}", "0".repeat(-point as usize), digits)
    } else if digits.len() == 1 {
        format!("{}e{}", digits, point - 1)
    } else {
        format!("{}.{}e{}", &digits[..1], &digits[1..], point - 1)
    };
    format!("{sign}{body}")
}

/// A float as a JSON value: a number (rounded to 12 significant digits) when
/// finite, a tagged string otherwise.
pub fn json_f64(x: f64) -> Value {
    if !x.is_finite() {
        return Value::String(fmt_sig(x));
    }
    let rounded: f64 = fmt_sig(x).parse().expect("fmt_sig emits parseable numbers");
    serde_json::Number::from_f64(rounded)
        .map(Value::Number)
        .unwrap_or_else(|| Value::String(fmt_sig(x)))
}

pub fn json_partition(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| Value::from(x)).collect())
}

pub fn json_spectrum(probs: &[f64]) -> Value {
    Value::Array(probs.iter().map(|&x| json_f64(x)).collect())
}

/// Arbitrary-precision dimensions serialize as decimal strings.
pub fn json_big(x: &BigUint) -> Value {
    Value::String(x.to_string())
}

/// Partition cell for CSV: parts joined by spaces.
pub fn csv_partition(p: &Partition) -> String {
    p.parts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

struct SigFormatter;

impl serde_json::ser::Formatter for SigFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        writer.write_all(fmt_sig(value).as_bytes())
    }
}

/// Serializes a JSON value compactly with the 12-significant-digit float
/// convention and a trailing newline.
pub fn render_json(value: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigFormatter);
    serde::Serialize::serialize(value, &mut ser).expect("in-memory serialization");
    buf.push(b'\n');
    String::from_utf8(buf).expect("JSON is UTF-8")
}

/// CSV writer over an in-memory buffer, CRLF-terminated records.
pub fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for row in rows {
        writer.write_record(row).expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("CSV is UTF-8")
}
