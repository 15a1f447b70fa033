use serde::{Deserialize, Serialize};

use partfn::{
    classify_by_enumeration, closed_row, BigCount, ClassificationTable, SMode,
};

use crate::{Format, TableKind, TableSource};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub values: Vec<BigCount>,
}

/// Column-labeled table as emitted by `table --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub kind: String,
    pub source: String,
    pub n_max: usize,
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
}

fn kind_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::Classification => "classification",
        TableKind::ATable => "a-table",
    }
}

fn source_name(source: TableSource) -> &'static str {
    match source {
        TableSource::Counting => "counting",
        TableSource::Enumeration => "enumeration",
        TableSource::Formula => "formula",
    }
}

/// Classification counts recovered from the formula's A-row.
fn counts_from_a_row(n: usize, a: Vec<BigCount>) -> Vec<BigCount> {
    if n == 1 {
        return vec![BigCount::one()];
    }
    let mut counts = vec![BigCount::one(), BigCount::from(n - 1)];
    counts.extend(a.into_iter().skip(1));
    counts
}

fn raw_rows(kind: TableKind, n_max: usize, source: TableSource) -> Result<Vec<TableRow>, String> {
    let mut rows = Vec::with_capacity(n_max);
    match source {
        TableSource::Counting => {
            let table = ClassificationTable::build(n_max);
            for r in table.rows() {
                let values = match kind {
                    TableKind::Classification => r.counts.clone(),
                    TableKind::ATable => r.to_a_row().a,
                };
                rows.push(TableRow { n: r.n, values });
            }
        }
        TableSource::Enumeration => {
            for n in 1..=n_max {
                let r = classify_by_enumeration(n).map_err(|e| e.to_string())?;
                let values = match kind {
                    TableKind::Classification => r.counts,
                    TableKind::ATable => r.to_a_row().a,
                };
                rows.push(TableRow { n, values });
            }
        }
        TableSource::Formula => {
            for n in 1..=n_max {
                let a = closed_row(n, SMode::Floor).map_err(|e| e.to_string())?;
                let values = match kind {
                    TableKind::Classification => counts_from_a_row(n, a),
                    TableKind::ATable => a,
                };
                rows.push(TableRow { n, values });
            }
        }
    }
    Ok(rows)
}

pub fn build(kind: TableKind, n_max: usize, source: TableSource) -> Result<TableDoc, String> {
    if n_max == 0 {
        return Err("n_max must be at least 1".into());
    }
    let mut rows = raw_rows(kind, n_max, source)?;
    let width = rows.iter().map(|r| r.values.len()).max().unwrap_or(1);
    for r in &mut rows {
        r.values.resize(width, BigCount::zero());
    }
    let columns = (0..width)
        .map(|c| match kind {
            TableKind::Classification => format!("k{c}"),
            TableKind::ATable => format!("A{c}"),
        })
        .collect();
    Ok(TableDoc {
        kind: kind_name(kind).into(),
        source: source_name(source).into(),
        n_max,
        columns,
        rows,
    })
}

pub fn render(
    kind: TableKind,
    n_max: usize,
    format: Format,
    source: TableSource,
) -> Result<String, String> {
    let doc = build(kind, n_max, source)?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())? + "\n",
        Format::Csv => render_csv(&doc),
        Format::Text => render_text(kind, &doc),
    })
}

fn render_csv(doc: &TableDoc) -> String {
    let mut out = format!("n,{}\n", doc.columns.join(","));
    for r in &doc.rows {
        let vals: Vec<String> = r.values.iter().map(ToString::to_string).collect();
        out.push_str(&format!("{},{}\n", r.n, vals.join(",")));
    }
    out
}

/// Aligned columns; the row label is `p(n)` for the classification table
/// and `n` for the A-table.
fn render_text(kind: TableKind, doc: &TableDoc) -> String {
    let (corner, header, label): (&str, Vec<String>, fn(usize) -> String) = match kind {
        TableKind::Classification => (
            "p(n)",
            (0..doc.columns.len()).map(|c| c.to_string()).collect(),
            |n| format!("p({n})"),
        ),
        TableKind::ATable => (
            "n",
            (0..doc.columns.len()).map(|c| format!("A^{c}")).collect(),
            |n| n.to_string(),
        ),
    };
    let cells: Vec<(String, Vec<String>)> = doc
        .rows
        .iter()
        .map(|r| (label(r.n), r.values.iter().map(ToString::to_string).collect()))
        .collect();
    let label_w = cells
        .iter()
        .map(|(l, _)| l.len())
        .chain(std::iter::once(corner.len()))
        .max()
        .unwrap_or(1);
    let col_w: Vec<usize> = (0..header.len())
        .map(|c| {
            cells
                .iter()
                .map(|(_, v)| v[c].len())
                .chain(std::iter::once(header[c].len()))
                .max()
                .unwrap_or(1)
        })
        .collect();

    let mut out = format!("{corner:<label_w$}");
    for (h, w) in header.iter().zip(&col_w) {
        out.push_str(&format!("  {h:>w$}"));
    }
    out.push('\n');
    for (l, vals) in &cells {
        out.push_str(&format!("{l:<label_w$}"));
        for (v, w) in vals.iter().zip(&col_w) {
            out.push_str(&format!("  {v:>w$}"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sources_agree_on_small_tables() {
        for kind in [TableKind::Classification, TableKind::ATable] {
            let a = build(kind, 30, TableSource::Counting).unwrap();
            let b = build(kind, 30, TableSource::Enumeration).unwrap();
            let c = build(kind, 30, TableSource::Formula).unwrap();
            assert_eq!(a.rows, b.rows);
            assert_eq!(a.rows, c.rows);
        }
    }

    #[test]
    fn enumeration_ceiling_surfaces() {
        assert!(build(TableKind::Classification, 61, TableSource::Enumeration).is_err());
    }

    #[test]
    fn a_table_text_layout() {
        let text = render(TableKind::ATable, 11, Format::Text, TableSource::Counting).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 12);
        let last: Vec<&str> = lines[11].split_whitespace().collect();
        assert_eq!(last, vec!["11", "11", "20", "16", "7", "2"]);
    }
}
