use super::field::{FieldElement, PrimeField};

/// Dense matrix of vanishing conditions: one row per condition, one column
/// per monomial of the ambient graded piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionsMatrix {
    field: PrimeField,
    cols: usize,
    data: Vec<FieldElement>,
}

impl ConditionsMatrix {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Self {
            field,
            cols,
            data: Vec::new(),
        }
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<FieldElement>]) -> Self {
        let mut m = Self::new(field, cols);
        for r in rows {
            m.push_row(r);
        }
        m
    }

    /// Appends a row; entries are reduced modulo `p`.
    pub fn push_row(&mut self, row: &[FieldElement]) {
        assert_eq!(row.len(), self.cols, "row length must equal column count");
        let p = self.field.modulus();
        self.data.extend(row.iter().map(|&v| v % p));
    }

    pub fn rows(&self) -> usize {
        if self.cols == 0 {
            0
        } else {
            self.data.len() / self.cols
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rank(&self) -> usize {
        rank_mod_p(self)
    }
}

/// Exact rank by fraction-free elimination: a row below the pivot row
/// becomes `pivot * row - lead * pivot_row`, so no inverses are needed.
pub fn rank_mod_p(m: &ConditionsMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let f = m.field();
    let mut a = m.data.clone();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for k in c..cols {
                a.swap(piv * cols + k, rank * cols + k);
            }
        }
        let pv = a[rank * cols + c];
        let (top, rest) = a.split_at_mut((rank + 1) * cols);
        let pivot_row = &top[rank * cols..];
        for row in rest.chunks_exact_mut(cols) {
            let lead = row[c];
            if lead == 0 {
                continue;
            }
            row[c] = 0;
            for k in c + 1..cols {
                row[k] = f.sub(f.mul(pv, row[k]), f.mul(lead, pivot_row[k]));
            }
        }
        rank += 1;
    }
    rank
}
