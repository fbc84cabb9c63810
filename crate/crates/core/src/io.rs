//! Input files (arrangements, tope lists, cycles) and report exports.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arrangement::{parse_rational, Arrangement};
use crate::error::{Error, Result};
use crate::spectral::dft::{sin2, Spectrum};
use crate::spectral::identities::IdentityReport;
use crate::tope::Tope;

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        message: e.to_string(),
    }
}

#[derive(Deserialize)]
struct ArrangementFile {
    d: usize,
    vectors: Vec<Vec<Value>>,
}

/// `{"d": 2, "vectors": [["1", "0"], ["1/2", "-3"]]}`. Plain JSON integers
/// are accepted alongside strings.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let file: ArrangementFile = serde_json::from_str(text).map_err(json_error)?;
    let mut vectors = Vec::with_capacity(file.vectors.len());
    for (i, row) in file.vectors.iter().enumerate() {
        let parsed = row
            .iter()
            .map(|v| match v {
                Value::String(s) => parse_rational(s),
                Value::Number(n) if n.is_i64() => parse_rational(&n.to_string()),
                other => Err(format!("expected a rational string, got {other}")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|message| Error::Parse {
                line: 0,
                message: format!("vector {}: {message}", i + 1),
            })?;
        vectors.push(parsed);
    }
    Arrangement::new(file.d, vectors)
}

/// One tope per line over `{+,-}`; blank lines and lines starting with `#`
/// are skipped. Line numbers in errors are 1-based.
pub fn parse_tope_list(text: &str) -> Result<Vec<Tope>> {
    let mut topes = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tope = line.parse::<Tope>().map_err(|e| Error::Parse {
            line: i + 1,
            message: format!("{line:?}: {e}"),
        })?;
        topes.push(tope);
    }
    if topes.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(topes)
}

pub fn format_tope_list(topes: &[Tope]) -> String {
    topes.iter().map(|t| format!("{t}\n")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleFile {
    pub t: usize,
    pub vertices: Vec<Tope>,
}

/// `{"t": 3, "vertices": ["-++", "-+-", ...]}`. Vertex lengths are checked
/// against `t`; the cycle structure itself is left to `validate_cycle`.
pub fn parse_cycle(text: &str) -> Result<CycleFile> {
    let file: CycleFile = serde_json::from_str(text).map_err(json_error)?;
    if let Some((i, v)) = file
        .vertices
        .iter()
        .enumerate()
        .find(|(_, v)| v.len() != file.t)
    {
        return Err(Error::Parse {
            line: 0,
            message: format!("vertex {i} has length {}, expected {}", v.len(), file.t),
        });
    }
    Ok(file)
}

/// Columns `k,re,im,magnitude_squared,sin2_weight` with `sin2_weight = sin^2(pi k/t)`.
pub fn spectrum_csv(spectrum: &Spectrum) -> String {
    let t = spectrum.t();
    let mut out = String::from("k,re,im,magnitude_squared,sin2_weight\n");
    for (k, c) in spectrum.values().iter().enumerate() {
        out.push_str(&format!(
            "{k},{},{},{},{}\n",
            c.re,
            c.im,
            c.norm_sqr(),
            sin2(k, t)
        ));
    }
    out
}

#[derive(Serialize)]
struct IdentityRow<'a> {
    name: &'a str,
    exact: Option<&'a str>,
    float: Option<f64>,
    residual: f64,
    pass: bool,
}

/// JSON list of `{name, exact, float, residual, pass}`.
pub fn identity_reports_json(reports: &[IdentityReport]) -> Value {
    let rows: Vec<IdentityRow> = reports
        .iter()
        .map(|r| IdentityRow {
            name: &r.name,
            exact: r.exact.as_deref(),
            float: r.float,
            residual: r.residual,
            pass: r.pass,
        })
        .collect();
    serde_json::to_value(rows).expect("identity rows serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::dft::dft_int;

    #[test]
    fn arrangement_file() {
        let a =
            parse_arrangement(r#"{"d": 2, "vectors": [["1","0"],["0","1"],["1/2", 1]]}"#).unwrap();
        assert_eq!(a.t(), 3);
        assert_eq!(a.topes().unwrap().len(), 6);
        assert!(matches!(
            parse_arrangement("{\"d\": 2,\n \"vectors\": [[\"x\"]]}"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_arrangement("{\n\"d\": 2,\n]"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert_eq!(
            parse_arrangement(r#"{"d": 2, "vectors": [["1","0"],["2","0"]]}"#).unwrap_err(),
            Error::NotSimple(1, 2)
        );
    }

    #[test]
    fn tope_file() {
        let topes = parse_tope_list("# square\n++\n\n+-\n-+\n--\n").unwrap();
        assert_eq!(topes.len(), 4);
        assert_eq!(format_tope_list(&topes[..1]), "++\n");
        match parse_tope_list("+++\n+0-\n") {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("+0-"));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(parse_tope_list("# nothing\n"), Err(Error::EmptyInput));
    }

    #[test]
    fn cycle_file() {
        let c = parse_cycle(r#"{"t": 2, "vertices": ["++", "-+", "--", "+-"]}"#).unwrap();
        assert_eq!(c.vertices.len(), 4);
        assert!(matches!(
            parse_cycle(r#"{"t": 3, "vertices": ["++"]}"#),
            Err(Error::Parse { .. })
        ));
        let back: CycleFile = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn spectrum_export() {
        let csv = spectrum_csv(&dft_int(&[2, 1, 2, 1, 2, 1]).unwrap());
        let rows: Vec<&str> = csv.lines().collect();
        assert_eq!(rows[0], "k,re,im,magnitude_squared,sin2_weight");
        assert_eq!(rows.len(), 7);
        let mags: Vec<f64> = rows[1..]
            .iter()
            .map(|r| r.split(',').nth(3).unwrap().parse().unwrap())
            .collect();
        for (m, want) in mags.iter().zip([81.0, 0.0, 0.0, 9.0, 0.0, 0.0]) {
            assert!((m - want).abs() < 1e-9);
        }
    }

    #[test]
    fn identity_export() {
        let r = vec![IdentityReport::exact("sum", 9, 9)];
        let v = identity_reports_json(&r);
        assert_eq!(
            v,
            serde_json::json!([{"name": "sum", "exact": "9", "float": null, "residual": 0.0, "pass": true}])
        );
    }
}
