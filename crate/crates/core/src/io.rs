//! JSON and CSV file formats.
//!
//! * complex: `{"generators": [[1,2],…]}` or `{"sets": [[1],[2],[1,2],…]}`; labels are
//!   positive integers or strings (strings are relabelled `1..` in sorted order and the
//!   names kept in `"vertex_names"`);
//! * CW complex: `{"cells": [{"id": 1, "attach": []}, …]}`;
//! * graph: `{"vertices": 4, "edges": [[1,2],…]}`;
//! * matrix: `{"n": 2, "labels": […], "entries": [["1","0"],…]}` with decimal strings
//!   (`"p/q"` for rationals), or CSV with a label header row;
//! * polynomial: `{"coeffs": ["1","-1"]}` ascending.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::{AnyComplex, CwComplex, Graph, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exact::Polynomial;
use crate::matrix::Matrix;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    generators: Option<Vec<Vec<Value>>>,
    sets: Option<Vec<Vec<Value>>>,
    cells: Option<Vec<CellEntry>>,
    #[allow(dead_code)]
    vertex_names: Option<BTreeMap<String, String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CellEntry {
    id: i64,
    #[serde(default)]
    attach: Vec<i64>,
}

/// A complex read from disk, plus the original names when string labels were relabelled.
#[derive(Clone, Debug)]
pub struct LoadedComplex {
    pub complex: AnyComplex,
    /// `vertex_names[i]` is the original name of vertex `i + 1`.
    pub vertex_names: Option<Vec<String>>,
}

pub fn parse_complex(text: &str) -> Result<LoadedComplex> {
    let file: ComplexFile = serde_json::from_str(text)
        .map_err(|e| Error::input(format!("malformed complex file: {e}")))?;
    match (file.generators, file.sets, file.cells) {
        (Some(gens), None, None) => {
            let (sets, names) = relabel(&gens)?;
            let g = SimplicialComplex::generate_closure(sets)?;
            Ok(LoadedComplex { complex: g.into(), vertex_names: names })
        }
        (None, Some(sets), None) => {
            let (sets, names) = relabel(&sets)?;
            let g = SimplicialComplex::from_sets(sets)?;
            Ok(LoadedComplex { complex: g.into(), vertex_names: names })
        }
        (None, None, Some(cells)) => {
            let cw = CwComplex::from_cells(cells.into_iter().map(|c| (c.id, c.attach)))?;
            Ok(LoadedComplex { complex: cw.into(), vertex_names: None })
        }
        _ => Err(Error::input(
            "complex file needs exactly one of \"generators\", \"sets\" or \"cells\"",
        )),
    }
}

fn relabel(sets: &[Vec<Value>]) -> Result<(Vec<Vec<u32>>, Option<Vec<String>>)> {
    let as_ints: Option<Vec<Vec<u32>>> = sets
        .iter()
        .map(|s| s.iter().map(|v| v.as_u64().and_then(|x| u32::try_from(x).ok())).collect())
        .collect();
    if let Some(ints) = as_ints {
        return Ok((ints, None));
    }
    let name = |v: &Value| match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::input(format!("vertex label {other} is neither a number nor a string"))),
    };
    let mut names: Vec<String> = sets.iter().flatten().map(name).collect::<Result<_>>()?;
    names.sort();
    names.dedup();
    let index: BTreeMap<&str, u32> =
        names.iter().enumerate().map(|(i, s)| (s.as_str(), i as u32 + 1)).collect();
    let relabelled = sets
        .iter()
        .map(|s| s.iter().map(|v| name(v).map(|n| index[n.as_str()])).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok((relabelled, Some(names)))
}

/// Canonical JSON: `{"sets": …}` for simplicial input, `{"cells": …}` for CW input.
pub fn complex_to_json(c: &AnyComplex, vertex_names: Option<&[String]>) -> String {
    let value = match c {
        AnyComplex::Simplicial(g) => {
            let sets: Vec<&[u32]> = g.simplices().iter().map(|x| x.vertices()).collect();
            let mut obj = serde_json::json!({ "sets": sets });
            if let Some(names) = vertex_names {
                let map: BTreeMap<String, &String> =
                    names.iter().enumerate().map(|(i, n)| ((i + 1).to_string(), n)).collect();
                obj["vertex_names"] = serde_json::to_value(map).expect("strings");
            }
            obj
        }
        AnyComplex::Cw(cw) => {
            let cells: Vec<CellEntry> = (0..cw.len())
                .map(|i| CellEntry { id: cw.ids()[i], attach: cw.attach_ids(i) })
                .collect();
            serde_json::json!({ "cells": cells })
        }
    };
    compact_rows(&value)
}

/// One top-level array element per line, so files diff well.
fn compact_rows(value: &Value) -> String {
    let obj = value.as_object().expect("object");
    let mut out = String::from("{\n");
    for (k, (key, v)) in obj.iter().enumerate() {
        out.push_str(&format!("  {}: ", serde_json::to_string(key).expect("key")));
        match v {
            Value::Array(items) if !items.is_empty() => {
                out.push_str("[\n");
                for (i, item) in items.iter().enumerate() {
                    let sep = if i + 1 < items.len() { "," } else { "" };
                    out.push_str(&format!("    {}{sep}\n", serde_json::to_string(item).expect("json")));
                }
                out.push_str("  ]");
            }
            other => out.push_str(&serde_json::to_string(other).expect("json")),
        }
        out.push_str(if k + 1 < obj.len() { ",\n" } else { "\n" });
    }
    out.push_str("}\n");
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: u32,
    edges: Vec<(u32, u32)>,
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text)
        .map_err(|e| Error::input(format!("malformed graph file: {e}")))?;
    Graph::new(file.vertices, &file.edges)
}

#[derive(Deserialize)]
struct MatrixFile {
    n: usize,
    labels: Vec<String>,
    entries: Vec<Vec<String>>,
}

pub fn matrix_to_json<T: Display>(m: &Matrix<T>) -> String {
    let labels = serde_json::to_string(m.labels()).expect("strings");
    let rows: Vec<String> = m
        .rows()
        .map(|r| {
            let row: Vec<String> = r.iter().map(ToString::to_string).collect();
            serde_json::to_string(&row).expect("strings")
        })
        .collect();
    let entries = if rows.is_empty() {
        "[]".to_string()
    } else {
        format!("[\n    {}\n  ]", rows.join(",\n    "))
    };
    format!("{{\n  \"n\": {},\n  \"labels\": {labels},\n  \"entries\": {entries}\n}}\n", m.order())
}

pub fn parse_matrix<T: FromStr>(text: &str) -> Result<Matrix<T>> {
    let file: MatrixFile = serde_json::from_str(text)
        .map_err(|e| Error::input(format!("malformed matrix file: {e}")))?;
    if file.labels.len() != file.n || file.entries.len() != file.n {
        return Err(Error::input("matrix file: n, labels and entries disagree"));
    }
    let rows = file
        .entries
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| s.parse::<T>().map_err(|_| Error::input(format!("bad matrix entry {s:?}"))))
                .collect::<Result<Vec<T>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows)?.with_labels(file.labels))
}

/// CSV: a header row of labels, then one row of decimal strings per matrix row.
pub fn write_matrix_csv<T: Display, W: Write>(m: &Matrix<T>, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(m.labels())?;
    for row in m.rows() {
        w.write_record(row.iter().map(ToString::to_string))?;
    }
    w.flush()?;
    Ok(())
}

pub fn matrix_to_csv<T: Display>(m: &Matrix<T>) -> Result<String> {
    let mut buf = Vec::new();
    write_matrix_csv(m, &mut buf)?;
    Ok(String::from_utf8(buf).expect("utf8"))
}

#[derive(Serialize, Deserialize)]
struct PolynomialFile {
    coeffs: Vec<String>,
}

pub fn polynomial_to_json(p: &Polynomial) -> String {
    let file = PolynomialFile { coeffs: p.coeffs().iter().map(ToString::to_string).collect() };
    serde_json::to_string(&file).expect("serializable") + "\n"
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let file: PolynomialFile = serde_json::from_str(text)
        .map_err(|e| Error::input(format!("malformed polynomial file: {e}")))?;
    let coeffs = file
        .coeffs
        .iter()
        .map(|s| s.parse().map_err(|_| Error::input(format!("bad coefficient {s:?}"))))
        .collect::<Result<_>>()?;
    Ok(Polynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::CellComplex;
    use crate::matrix::{IntegerMatrix, RationalMatrix};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn generators_and_sets() {
        let g = parse_complex(r#"{"generators": [[1,2],[1,3],[1,4]]}"#).unwrap();
        assert_eq!(g.complex.cell_count(), 7);
        assert!(g.vertex_names.is_none());
        let s = parse_complex(r#"{"sets": [[1],[2],[1,2]]}"#).unwrap();
        assert_eq!(s.complex.cell_count(), 3);
    }

    #[test]
    fn non_closed_set_list_is_rejected() {
        let e = parse_complex(r#"{"sets": [[1],[1,2]]}"#).unwrap_err();
        assert!(matches!(e, Error::InvalidInput(_)));
    }

    #[test]
    fn malformed_files_are_input_errors() {
        for bad in [
            "not json",
            "{}",
            r#"{"generators": [[1]], "sets": [[1]]}"#,
            r#"{"generators": [[]]}"#,
            r#"{"generators": [[0]]}"#,
            r#"{"generators": [[true]]}"#,
            r#"{"cells": [{"id": 1, "attach": [2]}]}"#,
            r#"{"generators": [[1]], "extra": 1}"#,
        ] {
            let e = parse_complex(bad).unwrap_err();
            assert!(e.is_input_error(), "{bad}: {e}");
        }
    }

    #[test]
    fn string_labels_are_relabelled() {
        let g = parse_complex(r#"{"generators": [["b","a"],["a","c"]]}"#).unwrap();
        assert_eq!(g.vertex_names.as_deref(), Some(&["a".to_string(), "b".into(), "c".into()][..]));
        let json = complex_to_json(&g.complex, g.vertex_names.as_deref());
        let back = parse_complex(&json).unwrap();
        assert_eq!(back.complex.cell_count(), 5);
        assert!(json.contains("\"vertex_names\""));
    }

    #[test]
    fn cw_roundtrip() {
        let text = r#"{"cells": [{"id": 1, "attach": []}, {"id": 2}, {"id": 3, "attach": [1, 2]}]}"#;
        let c = parse_complex(text).unwrap();
        let json = complex_to_json(&c.complex, None);
        let again = parse_complex(&json).unwrap();
        assert_eq!(complex_to_json(&again.complex, None), json);
        assert_eq!(again.complex.core_of(2), &[0, 1, 2]);
    }

    #[test]
    fn canonical_complex_json_layout() {
        let g = parse_complex(r#"{"generators": [[2,1]]}"#).unwrap();
        assert_eq!(
            complex_to_json(&g.complex, None),
            "{\n  \"sets\": [\n    [1],\n    [2],\n    [1,2]\n  ]\n}\n"
        );
    }

    #[test]
    fn graph_files() {
        let g = parse_graph(r#"{"vertices": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]}"#).unwrap();
        assert_eq!(g.edges().len(), 4);
        assert!(parse_graph(r#"{"vertices": 2, "edges": [[1,1]]}"#).is_err());
        assert!(parse_graph(r#"{"vertices": 2, "edges": [[1,2],[2,1]]}"#).is_err());
    }

    #[test]
    fn matrix_json_and_csv() {
        let m = IntegerMatrix::from_i64_rows(&[&[2, -1], &[-1, 1]]).unwrap()
            .with_labels(vec!["{1}".into(), "{1,2}".into()]);
        let json = matrix_to_json(&m);
        assert_eq!(
            json,
            "{\n  \"n\": 2,\n  \"labels\": [\"{1}\",\"{1,2}\"],\n  \"entries\": [\n    [\"2\",\"-1\"],\n    [\"-1\",\"1\"]\n  ]\n}\n"
        );
        let back: IntegerMatrix = parse_matrix(&json).unwrap();
        assert_eq!(back, m);
        assert_eq!(matrix_to_csv(&m).unwrap(), "{1},\"{1,2}\"\n2,-1\n-1,1\n");
        let r: RationalMatrix = m.map(|x| BigRational::new(x.clone(), BigInt::from(3)));
        assert!(matrix_to_json(&r).contains("\"2/3\""));
        let rb: RationalMatrix = parse_matrix(&matrix_to_json(&r)).unwrap();
        assert_eq!(rb, r);
        assert!(parse_matrix::<BigInt>(r#"{"n": 1, "labels": ["a"], "entries": [["x"]]}"#).is_err());
    }

    #[test]
    fn polynomial_json() {
        let p = Polynomial::from_i64(&[1, -3, 1]);
        let text = polynomial_to_json(&p);
        assert_eq!(text, "{\"coeffs\":[\"1\",\"-3\",\"1\"]}\n");
        assert_eq!(parse_polynomial(&text).unwrap(), p);
    }
}
