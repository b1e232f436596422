//! Tableau JSON and cell CSV.
//!
//! JSON is `{"kind": ..., "shape": <skew shape>, "rows": [[entry, ...], ...]}`
//! with kind `plain`, `marked` or `set-valued`. Plain entries are integers,
//! marked entries strings such as `"3'"`, and set-valued entries arrays of
//! either.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::shapes::{Cell, SkewShape};
use crate::tableaux::{Letter, MarkedTableau, SetValuedTableau, Tableau};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyTableau {
    Plain(Tableau),
    Marked(MarkedTableau),
    SetValued(SetValuedTableau),
}

fn letter_value(l: &Letter) -> Value {
    if l.marked {
        Value::String(l.to_string())
    } else {
        Value::from(l.value)
    }
}

fn parse_letter(v: &Value) -> Result<Letter> {
    match v {
        Value::Number(n) => n
            .as_u64()
            .and_then(|x| u32::try_from(x).ok())
            .map(Letter::plain)
            .ok_or_else(|| Error::Parse(format!("bad entry {n}"))),
        Value::String(s) => s.parse(),
        other => Err(Error::Parse(format!("bad entry {other}"))),
    }
}

fn document(kind: &str, shape: &SkewShape, rows: Vec<Value>) -> Value {
    serde_json::json!({ "kind": kind, "shape": shape, "rows": rows })
}

pub fn to_json(t: &AnyTableau) -> Value {
    match t {
        AnyTableau::Plain(t) => {
            let rows = t.rows().iter().map(|r| Value::from(r.clone())).collect();
            document("plain", t.shape(), rows)
        }
        AnyTableau::Marked(t) => {
            let rows = t.rows().iter().map(|r| Value::Array(r.iter().map(letter_value).collect())).collect();
            document("marked", t.shape(), rows)
        }
        AnyTableau::SetValued(t) => {
            let rows = t
                .rows()
                .iter()
                .map(|r| Value::Array(r.iter().map(|s| Value::Array(s.iter().map(letter_value).collect())).collect()))
                .collect();
            document("set-valued", t.shape(), rows)
        }
    }
}

/// Parse a tableau document. Without a `kind` field the kind is inferred
/// from the entries: any array makes it set-valued, otherwise any marked
/// string makes it marked.
pub fn from_json(v: &Value) -> Result<AnyTableau> {
    #[derive(Deserialize)]
    struct Doc {
        kind: Option<String>,
        shape: SkewShape,
        rows: Vec<Vec<Value>>,
    }
    let doc: Doc = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let entries = doc.rows.iter().flatten();
    let kind = match doc.kind.as_deref() {
        Some(k @ ("plain" | "marked" | "set-valued")) => k,
        Some(other) => return Err(Error::Parse(format!("unknown tableau kind {other:?}"))),
        None if entries.clone().any(|e| e.is_array()) => "set-valued",
        None if entries.clone().any(|e| e.is_string()) => "marked",
        None => "plain",
    };
    if kind == "set-valued" {
        let mut size = 0;
        let mut rows = Vec::new();
        for r in &doc.rows {
            let mut row = Vec::new();
            for e in r {
                let items = e.as_array().ok_or_else(|| Error::Parse(format!("expected a set, got {e}")))?;
                let set = items.iter().map(parse_letter).collect::<Result<Vec<_>>>()?;
                size = size.max(set.iter().map(|l| l.value as usize).max().unwrap_or(0));
                row.push(set);
            }
            rows.push(row);
        }
        return Ok(AnyTableau::SetValued(SetValuedTableau::new(doc.shape, size, rows)?));
    }
    let rows: Vec<Vec<Letter>> =
        doc.rows.iter().map(|r| r.iter().map(parse_letter).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    if kind == "marked" {
        Ok(AnyTableau::Marked(MarkedTableau::new(doc.shape, rows)?))
    } else if rows.iter().flatten().any(|l| l.marked) {
        Err(Error::Parse("marked entry in a plain tableau".into()))
    } else {
        let plain = rows.iter().map(|r| r.iter().map(|l| l.value).collect()).collect();
        Ok(AnyTableau::Plain(Tableau::new(doc.shape, plain)?))
    }
}

pub fn to_json_string(t: &AnyTableau) -> String {
    serde_json::to_string(&to_json(t)).expect("tableau JSON is always serializable")
}

pub fn from_json_str(s: &str) -> Result<AnyTableau> {
    from_json(&serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?)
}

/// One CSV record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvCell {
    pub row: usize,
    pub col: usize,
    pub entry: u32,
    pub marked: bool,
}

pub fn csv_cells(t: &AnyTableau) -> Result<Vec<CsvCell>> {
    match t {
        AnyTableau::Plain(t) => {
            Ok(t.entries().map(|(c, v)| CsvCell { row: c.row, col: c.col, entry: v, marked: false }).collect())
        }
        AnyTableau::Marked(t) => {
            Ok(t.entries().map(|(c, l)| CsvCell { row: c.row, col: c.col, entry: l.value, marked: l.marked }).collect())
        }
        AnyTableau::SetValued(_) => Err(Error::InvalidTableau("set-valued tableaux have no CSV form".into())),
    }
}

pub fn write_csv(t: &AnyTableau, w: impl Write) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    for c in csv_cells(t)? {
        wr.serialize(c).map_err(|e| Error::Parse(e.to_string()))?;
    }
    wr.flush().map_err(|e| Error::Parse(e.to_string()))
}

/// Read `row,col,entry,marked` records; an empty file is an error.
pub fn read_csv(r: impl Read) -> Result<Vec<CsvCell>> {
    let mut rd = csv::Reader::from_reader(r);
    let cells = rd
        .deserialize()
        .collect::<std::result::Result<Vec<CsvCell>, _>>()
        .map_err(|e| Error::Parse(format!("malformed CSV: {e}")))?;
    if cells.is_empty() {
        return Err(Error::Parse("CSV holds no cells".into()));
    }
    Ok(cells)
}

/// Rebuild a tableau on a straight (shifted or not) shape from CSV cells.
pub fn tableau_from_cells(cells: &[CsvCell], shifted: bool) -> Result<AnyTableau> {
    let nrows = cells.iter().map(|c| c.row).max().unwrap_or(0);
    let mut rows: Vec<Vec<(usize, Letter)>> = vec![Vec::new(); nrows];
    for c in cells {
        if c.row == 0 || c.col == 0 {
            return Err(Error::Parse("rows and columns are 1-based".into()));
        }
        rows[c.row - 1].push((c.col, Letter { value: c.entry, marked: c.marked }));
    }
    let mut outer = Vec::with_capacity(nrows);
    let mut inner = Vec::with_capacity(nrows);
    for (i, r) in rows.iter_mut().enumerate() {
        r.sort_by_key(|x| x.0);
        let start = if shifted { i + 1 } else { 1 };
        let first = r.first().map(|x| x.0).unwrap_or(start);
        if first < start || r.windows(2).any(|p| p[1].0 != p[0].0 + 1) {
            return Err(Error::Parse(format!("row {} is not contiguous", i + 1)));
        }
        inner.push(first - start);
        outer.push(first - start + r.len());
    }
    let shape = SkewShape::new(&outer, &inner, shifted)?;
    let letters: Vec<Vec<Letter>> = rows.into_iter().map(|r| r.into_iter().map(|x| x.1).collect()).collect();
    if letters.iter().flatten().any(|l| l.marked) {
        return Ok(AnyTableau::Marked(MarkedTableau::new(shape, letters)?));
    }
    let plain = letters.iter().map(|r| r.iter().map(|l| l.value).collect()).collect();
    Ok(AnyTableau::Plain(Tableau::new(shape, plain)?))
}

/// Entry at a cell, for plotting.
pub fn entry_grid(cells: &[CsvCell]) -> Vec<(Cell, u32)> {
    cells.iter().map(|c| (Cell::new(c.row, c.col), c.entry)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    #[test]
    fn json_round_trips() {
        let t = Tableau::from_display(&[&[0, 1, 3], &[2, 4]], false).unwrap();
        let m = MarkedTableau::parse(&[&["1", "2'", "4'"], &["3"]]).unwrap();
        let s = SetValuedTableau::new(
            crate::shapes::SkewShape::shifted(&crate::shapes::StrictPartition::new(vec![2]).unwrap()),
            3,
            vec![vec![vec![Letter::plain(1)], vec![Letter::primed(2), Letter::plain(3)]]],
        )
        .unwrap();
        for x in [AnyTableau::Plain(t), AnyTableau::Marked(m), AnyTableau::SetValued(s)] {
            let text = to_json_string(&x);
            let back = from_json_str(&text).unwrap();
            assert_eq!(back, x);
            assert_eq!(to_json_string(&back), text);
        }
    }

    #[test]
    fn json_format() {
        let m = MarkedTableau::parse(&[&["1", "2'"]]).unwrap();
        assert_eq!(
            to_json_string(&AnyTableau::Marked(m)),
            r#"{"kind":"marked","rows":[[1,"2'"]],"shape":{"inner":[],"outer":[2],"shifted":true}}"#
        );
        assert!(from_json_str(r#"{"shape":{"outer":[2]},"rows":[[1]]}"#).is_err());
        let unmarked = MarkedTableau::parse(&[&["1", "2"]]).unwrap();
        let text = to_json_string(&AnyTableau::Marked(unmarked.clone()));
        assert_eq!(from_json_str(&text).unwrap(), AnyTableau::Marked(unmarked));
        let bare = r#"{"rows":[[1,"2'"]],"shape":{"inner":[],"outer":[2],"shifted":true}}"#;
        assert!(matches!(from_json_str(bare).unwrap(), AnyTableau::Marked(_)));
        assert!(from_json_str(&bare.replace("{\"rows", "{\"kind\":\"plain\",\"rows")).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let t = Tableau::new(
            crate::shapes::SkewShape::straight(&Partition::new(vec![2, 1]).unwrap()),
            vec![vec![1, 2], vec![3]],
        )
        .unwrap();
        let mut buf = Vec::new();
        write_csv(&AnyTableau::Plain(t.clone()), &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("row,col,entry,marked\n1,1,1,false\n"));
        let cells = read_csv(&buf[..]).unwrap();
        assert_eq!(tableau_from_cells(&cells, false).unwrap(), AnyTableau::Plain(t));
        let m = MarkedTableau::parse(&[&["1", "2'", "4"], &["3"]]).unwrap();
        let mut buf = Vec::new();
        write_csv(&AnyTableau::Marked(m.clone()), &mut buf).unwrap();
        assert_eq!(tableau_from_cells(&read_csv(&buf[..]).unwrap(), true).unwrap(), AnyTableau::Marked(m));
        assert!(read_csv("row,col,entry,marked\n".as_bytes()).is_err());
        assert!(read_csv("row,col\n1,x\n".as_bytes()).is_err());
    }
}
