use crate::field::Field;

/// Reduced row-echelon form; pivots are taken left to right. Zero rows are dropped.
pub fn rref<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    let mut m: Vec<Vec<F>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].inv();
        for x in m[rank].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x = x.sub(&p.mul(&f));
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    m
}

/// Index of the first nonzero entry.
pub fn pivot<F: Field>(row: &[F]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}
