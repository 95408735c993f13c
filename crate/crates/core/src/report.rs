//! Report rendering: JSON at full precision, CSV and text at four decimals.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::detail::{DetailReport, ObjectDetail};
use crate::metrics::{MeasureReport, PerQuadrant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            other => Err(format!("unknown report format `{other}` (expected json, csv or text)")),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
            ReportFormat::Text => "text",
        })
    }
}

/// Formats `value` with exactly four fractional digits, rounding half away
/// from zero on the shortest decimal representation of the double.
pub fn round4(value: f64) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    let repr = format!("{}", value.abs());
    let (int_part, frac_part) = repr.split_once('.').unwrap_or((&repr, ""));
    let mut digits: Vec<u8> = int_part.bytes().map(|b| b - b'0').collect();
    let frac: Vec<u8> = frac_part.bytes().map(|b| b - b'0').collect();
    digits.extend((0..4).map(|i| frac.get(i).copied().unwrap_or(0)));

    if frac.get(4).copied().unwrap_or(0) >= 5 {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, 1);
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }

    let split = digits.len() - 4;
    let body: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
    let negative = value < 0.0 && digits.iter().any(|&d| d != 0);
    format!("{}{}.{}", if negative { "-" } else { "" }, &body[..split], &body[split..])
}

/// Labels for the text report, in presentation order.
pub const MEASURE_LABELS: [&str; 6] = [
    "Balance",
    "Equilibrium",
    "Symmetry",
    "Sequence",
    "Rhythm",
    "Aesthetic value (av)",
];

pub const CSV_HEADER: &str = "path,objects,balance,equilibrium,symmetry,sequence,rhythm,aesthetic_value";

#[derive(Serialize)]
struct Intermediates {
    balance_vertical: f64,
    balance_horizontal: f64,
    equilibrium_x: f64,
    equilibrium_y: f64,
    symmetry_vertical: f64,
    symmetry_horizontal: f64,
    symmetry_radial: f64,
    rhythm_x: f64,
    rhythm_y: f64,
    rhythm_area: f64,
    reading_order: PerQuadrant<u8>,
    weight_order: PerQuadrant<u8>,
}

#[derive(Serialize)]
struct Point {
    x: f64,
    y: f64,
}

#[derive(Serialize)]
struct DetailRow<'a> {
    id: &'a str,
    width: f64,
    height: f64,
    area: f64,
    center: Point,
    offset: Point,
}

#[derive(Serialize)]
struct DetailBlock<'a> {
    objects: usize,
    rows: Vec<DetailRow<'a>>,
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    balance: f64,
    equilibrium: f64,
    symmetry: f64,
    sequence: f64,
    rhythm: f64,
    aesthetic_value: f64,
    intermediates: Intermediates,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<DetailBlock<'a>>,
}

fn report_document(report: &DetailReport, include_detail: bool) -> ReportDocument<'_> {
    let m = &report.measures;
    ReportDocument {
        balance: m.balance.score,
        equilibrium: m.equilibrium.score,
        symmetry: m.symmetry.score,
        sequence: m.sequence.score,
        rhythm: m.rhythm.score,
        aesthetic_value: m.aesthetic_value,
        intermediates: Intermediates {
            balance_vertical: m.balance.vertical,
            balance_horizontal: m.balance.horizontal,
            equilibrium_x: m.equilibrium.x,
            equilibrium_y: m.equilibrium.y,
            symmetry_vertical: m.symmetry.vertical,
            symmetry_horizontal: m.symmetry.horizontal,
            symmetry_radial: m.symmetry.radial,
            rhythm_x: m.rhythm.x,
            rhythm_y: m.rhythm.y,
            rhythm_area: m.rhythm.area,
            reading_order: m.sequence.reading_order,
            weight_order: m.sequence.weight_order,
        },
        detail: include_detail.then(|| DetailBlock {
            objects: report.object_count(),
            rows: report.objects.iter().map(detail_row).collect(),
        }),
    }
}

fn detail_row(o: &ObjectDetail) -> DetailRow<'_> {
    DetailRow {
        id: &o.id,
        width: o.width,
        height: o.height,
        area: o.area,
        center: Point {
            x: o.center_x,
            y: o.center_y,
        },
        offset: Point {
            x: o.offset_x,
            y: o.offset_y,
        },
    }
}

/// The report as a JSON value, full precision.
pub fn report_json(report: &DetailReport, include_detail: bool) -> serde_json::Value {
    serde_json::to_value(report_document(report, include_detail)).expect("reports always serialize")
}

fn measure_values(m: &MeasureReport) -> [f64; 6] {
    let [b, e, s, q, r] = m.components();
    [b, e, s, q, r, m.aesthetic_value]
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One CSV data row (no header, no newline).
pub fn csv_row(source: &str, report: &DetailReport) -> String {
    let mut row = format!("{},{}", csv_field(source), report.object_count());
    for v in measure_values(&report.measures) {
        row.push(',');
        row.push_str(&round4(v));
    }
    row
}

fn text_report(report: &DetailReport, include_detail: bool) -> String {
    let mut out = String::new();
    if include_detail {
        out.push_str(&format!("Number of objects {}\n", report.object_count()));
        out.push_str("id width height area center_x center_y offset_x offset_y\n");
        for o in &report.objects {
            let cells = [o.width, o.height, o.area, o.center_x, o.center_y, o.offset_x, o.offset_y];
            out.push_str(&o.id);
            for c in cells {
                out.push(' ');
                out.push_str(&round4(c));
            }
            out.push('\n');
        }
        out.push('\n');
    }
    for (label, v) in MEASURE_LABELS.iter().zip(measure_values(&report.measures)) {
        out.push_str(&format!("{label} {}\n", round4(v)));
    }
    out
}

/// Renders one report. `source` names the measured file in CSV output; CSV
/// has no per-object section, so `include_detail` only affects JSON and text.
pub fn render_report(report: &DetailReport, source: &str, format: ReportFormat, include_detail: bool) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report_document(report, include_detail))
                .expect("reports always serialize");
            s.push('\n');
            s
        }
        ReportFormat::Csv => format!("{CSV_HEADER}\n{}\n", csv_row(source, report)),
        ReportFormat::Text => text_report(report, include_detail),
    }
}

/// A whole batch as CSV: header once, then one row per entry.
pub fn render_batch_csv<'a>(entries: impl IntoIterator<Item = (&'a str, &'a DetailReport)>) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for (source, report) in entries {
        out.push_str(&csv_row(source, report));
        out.push('\n');
    }
    out
}

/// A whole batch as a JSON array of `{"path", "objects", "report"}`.
pub fn render_batch_json<'a>(entries: impl IntoIterator<Item = (&'a str, &'a DetailReport)>) -> String {
    let rows: Vec<serde_json::Value> = entries
        .into_iter()
        .map(|(source, report)| {
            serde_json::json!({
                "path": source,
                "objects": report.object_count(),
                "report": report_json(report, false),
            })
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("reports always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detail::detail;
    use crate::layout::{Frame, Layout, LayoutObject};

    fn corner_report() -> DetailReport {
        detail(&Layout::new(
            Frame::new(100.0, 100.0),
            vec![LayoutObject::new("o1", 10.0, 10.0, 20.0, 20.0)],
        ))
        .unwrap()
    }

    #[test]
    fn round4_examples() {
        assert_eq!(round4(0.95068), "0.9507");
        assert_eq!(round4(0.73474), "0.7347");
        assert_eq!(round4(0.5), "0.5000");
        assert_eq!(round4(0.0), "0.0000");
        assert_eq!(round4(1.0), "1.0000");
    }

    #[test]
    fn round4_ties_go_away_from_zero() {
        assert_eq!(round4(0.00005), "0.0001");
        assert_eq!(round4(-0.00005), "-0.0001");
        assert_eq!(round4(0.99995), "1.0000");
        assert_eq!(round4(9.99995), "10.0000");
        assert_eq!(round4(-30.0), "-30.0000");
        assert_eq!(round4(-0.00001), "0.0000");
        assert_eq!(round4(1e-7), "0.0000");
        assert_eq!(round4(123456.789), "123456.7890");
    }

    #[test]
    fn text_report_lines() {
        let text = render_report(&corner_report(), "l1.json", ReportFormat::Text, false);
        assert_eq!(
            text,
            "Balance 0.0000\nEquilibrium 0.4000\nSymmetry 0.5000\nSequence 1.0000\nRhythm 0.5000\nAesthetic value (av) 0.4800\n"
        );
    }

    #[test]
    fn text_detail_precedes_measures() {
        let text = render_report(&corner_report(), "l1.json", ReportFormat::Text, true);
        assert!(text.starts_with("Number of objects 1\n"));
        assert!(text.contains("\no1 20.0000 20.0000 400.0000 20.0000 20.0000 -30.0000 -30.0000\n"));
        assert!(text.ends_with("Aesthetic value (av) 0.4800\n"));
    }

    #[test]
    fn json_is_full_precision() {
        let v = report_json(&corner_report(), false);
        assert_eq!(v["aesthetic_value"].as_f64().unwrap(), corner_report().measures.aesthetic_value);
        assert_eq!(v["intermediates"]["weight_order"]["UL"], 4);
        assert!(v.get("detail").is_none());
        let v = report_json(&corner_report(), true);
        assert_eq!(v["detail"]["objects"], 1);
        assert_eq!(v["detail"]["rows"][0]["offset"]["x"], -30.0);
    }

    #[test]
    fn csv_single_report() {
        let csv = render_report(&corner_report(), "dir/l1.json", ReportFormat::Csv, true);
        assert_eq!(
            csv,
            format!("{CSV_HEADER}\ndir/l1.json,1,0.0000,0.4000,0.5000,1.0000,0.5000,0.4800\n")
        );
    }

    #[test]
    fn csv_quotes_awkward_paths() {
        assert!(csv_row("a,b.json", &corner_report()).starts_with("\"a,b.json\",1,"));
    }

    #[test]
    fn batch_csv_header_once() {
        let r = corner_report();
        let csv = render_batch_csv([("a.json", &r), ("b.json", &r)]);
        assert_eq!(csv.matches("path,objects").count(), 1);
        assert_eq!(csv.lines().count(), 3);
    }

    #[test]
    fn format_names() {
        for f in [ReportFormat::Json, ReportFormat::Csv, ReportFormat::Text] {
            assert_eq!(f.to_string().parse::<ReportFormat>().unwrap(), f);
        }
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
