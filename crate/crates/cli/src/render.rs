use fatpoints::formulas::{Table, TableCell};

use crate::record::OutputRecord;

pub fn records(table: &Table) -> Vec<OutputRecord> {
    table
        .cells()
        .map(|c| OutputRecord::new(c.deg, table.pts, c.value.as_ref()))
        .collect()
}

fn cell_text(cell: &TableCell, mark_defective: bool) -> String {
    let Some(v) = cell.value else {
        return ".".to_string();
    };
    let mut out = v.value.to_string();
    if mark_defective && v.defective {
        out.push('*');
    }
    if cell.resolved_by_oracle() {
        out.push('?');
    }
    out
}

/// Row `b`, column `a`, both from 0, right-aligned. `.` is a cell with no
/// closed form, `*` a defective value, `?` a value computed by the oracle.
pub fn grid(table: &Table, mark_defective: bool) -> String {
    let cells: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|row| row.iter().map(|c| cell_text(c, mark_defective)).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .chain([table.a_max.to_string().len()])
        .max()
        .unwrap_or(1);
    let label = table.b_max.to_string().len().max(3);

    let mut out = format!("{:>label$}", "b\\a");
    for a in 0..=table.a_max {
        out.push_str(&format!(" {a:>width$}"));
    }
    out.push('\n');
    for (b, row) in cells.iter().enumerate() {
        out.push_str(&format!("{b:>label$}"));
        for c in row {
            out.push_str(&format!(" {c:>width$}"));
        }
        out.push('\n');
    }
    out
}

pub fn csv(records: &[OutputRecord]) -> String {
    let mut out = String::from(OutputRecord::CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}
