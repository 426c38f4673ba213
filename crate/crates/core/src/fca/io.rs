//! Burmeister `.cxt` and CSV context formats.

use crate::error::{Error, Result};
use crate::fca::context::FormalContext;
use crate::sets::BitSet;

/// Reads a Burmeister context:
///
/// ```text
/// B
///
/// <|G|>
/// <|M|>
///
/// <object names, one per line>
/// <attribute names, one per line>
/// <one row per object of `X` / `.`>
/// ```
///
/// The line after `B` may hold a context name and the blank line after the
/// counts may be missing.
pub fn read_cxt(text: &str) -> Result<FormalContext> {
    let lines: Vec<&str> = text.lines().map(|l| l.trim_end_matches('\r')).collect();
    let mut pos = 0usize;
    let line_at = |pos: usize| -> Result<&str> {
        lines
            .get(pos)
            .copied()
            .ok_or_else(|| Error::parse(pos + 1, 1, "unexpected end of file"))
    };
    if line_at(0)?.trim() != "B" {
        return Err(Error::parse(1, 1, "expected header `B`"));
    }
    pos += 2;
    let count = |pos: usize, what: &str| -> Result<usize> {
        let l = line_at(pos)?;
        l.trim()
            .parse()
            .map_err(|_| Error::parse(pos + 1, 1, format!("expected the number of {what}, found `{l}`")))
    };
    let g = count(pos, "objects")?;
    let m = count(pos + 1, "attributes")?;
    pos += 2;
    if lines.get(pos).is_some_and(|l| l.trim().is_empty()) {
        pos += 1;
    }
    let mut objects = Vec::with_capacity(g);
    for _ in 0..g {
        objects.push(line_at(pos)?.to_string());
        pos += 1;
    }
    let mut attributes = Vec::with_capacity(m);
    for _ in 0..m {
        attributes.push(line_at(pos)?.to_string());
        pos += 1;
    }
    let mut rows = Vec::with_capacity(g);
    for _ in 0..g {
        let l = line_at(pos)?.trim_end();
        let mut row = BitSet::with_capacity(m);
        for (j, c) in l.chars().enumerate() {
            match c {
                _ if j >= m => {
                    return Err(Error::parse(pos + 1, j + 1, format!("row has more than {m} entries")))
                }
                'X' | 'x' => row.insert(j),
                '.' => {}
                other => {
                    return Err(Error::parse(pos + 1, j + 1, format!("unexpected `{other}`, expected `X` or `.`")))
                }
            }
        }
        let len = l.chars().count();
        if len < m {
            return Err(Error::parse(pos + 1, len + 1, format!("row has {len} entries, expected {m}")));
        }
        rows.push(row);
        pos += 1;
    }
    if let Some(extra) = lines[pos.min(lines.len())..].iter().position(|l| !l.trim().is_empty()) {
        return Err(Error::parse(pos + extra + 1, 1, "trailing content after the last row"));
    }
    FormalContext::new(objects, attributes, rows)
}

pub fn write_cxt(k: &FormalContext) -> String {
    let mut out = format!("B\n\n{}\n{}\n\n", k.num_objects(), k.num_attributes());
    for o in k.objects() {
        out.push_str(o);
        out.push('\n');
    }
    for a in k.attributes() {
        out.push_str(a);
        out.push('\n');
    }
    for g in 0..k.num_objects() {
        out.extend((0..k.num_attributes()).map(|m| if k.incident(g, m) { 'X' } else { '.' }));
        out.push('\n');
    }
    out
}

/// Reads a CSV context: the header row names the attributes (its first cell
/// is ignored), every further row starts with an object name. Cells are
/// `1`/`x`/`X` for incidence and `0`/empty otherwise.
pub fn read_csv(text: &str) -> Result<FormalContext> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let csv_err = |e: csv::Error| {
        let line = e.position().map_or(0, |p| p.line() as usize);
        Error::parse(line, 1, e.to_string())
    };
    let header = match records.next() {
        Some(r) => r.map_err(csv_err)?,
        None => return Err(Error::parse(1, 1, "empty CSV input")),
    };
    let attributes: Vec<String> = header.iter().skip(1).map(|s| s.trim().to_string()).collect();
    let m = attributes.len();
    let mut objects = Vec::new();
    let mut rows = Vec::new();
    for rec in records {
        let rec = rec.map_err(csv_err)?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        if rec.len() != m + 1 {
            return Err(Error::parse(
                line,
                rec.len().min(m + 1) + 1,
                format!("row has {} cells, expected {}", rec.len(), m + 1),
            ));
        }
        objects.push(rec[0].trim().to_string());
        let mut row = BitSet::with_capacity(m);
        for (j, cell) in rec.iter().skip(1).enumerate() {
            match cell.trim() {
                "1" | "x" | "X" => row.insert(j),
                "0" | "" => {}
                other => {
                    return Err(Error::parse(line, j + 2, format!("unexpected cell `{other}`")))
                }
            }
        }
        rows.push(row);
    }
    FormalContext::new(objects, attributes, rows)
}

pub fn write_csv(k: &FormalContext) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    let mut header = vec![String::new()];
    header.extend(k.attributes().iter().cloned());
    w.write_record(&header).expect("writing to memory");
    for g in 0..k.num_objects() {
        let mut rec = vec![k.objects()[g].clone()];
        rec.extend((0..k.num_attributes()).map(|m| if k.incident(g, m) { "1" } else { "0" }.to_string()));
        w.write_record(&rec).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("input was utf-8")
}
