//! Membership in an integer lattice via Hermite normal form.

/// Row-style Hermite basis of the ℤ-span of a set of integer vectors.
#[derive(Debug, Clone)]
pub struct IntLattice {
    dim: usize,
    /// Echelon rows; `pivots[k]` is the leading column of `rows[k]`, whose
    /// entry there is positive.
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl IntLattice {
    pub fn span(dim: usize, generators: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let mut pending: Vec<Vec<i64>> = generators.into_iter().filter(|g| g.iter().any(|&x| x != 0)).collect();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for col in 0..dim {
            // Euclid on column `col` across the pending rows
            loop {
                let mut nz: Vec<usize> = (0..pending.len()).filter(|&r| pending[r][col] != 0).collect();
                if nz.len() <= 1 {
                    break;
                }
                nz.sort_by_key(|&r| pending[r][col].abs());
                let piv = nz[0];
                for &r in &nz[1..] {
                    let q = pending[r][col] / pending[piv][col];
                    let pivot_row = pending[piv].clone();
                    for (x, y) in pending[r].iter_mut().zip(&pivot_row) {
                        *x -= q * y;
                    }
                }
            }
            if let Some(r) = (0..pending.len()).find(|&r| pending[r][col] != 0) {
                let mut row = pending.swap_remove(r);
                if row[col] < 0 {
                    row.iter_mut().for_each(|x| *x = -*x);
                }
                rows.push(row);
                pivots.push(col);
            }
            pending.retain(|g| g.iter().any(|&x| x != 0));
        }
        IntLattice { dim, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut rest = v.to_vec();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            if rest[col] % row[col] != 0 {
                return false;
            }
            let q = rest[col] / row[col];
            for (x, y) in rest.iter_mut().zip(row) {
                *x -= q * y;
            }
        }
        rest.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_lattice() {
        let l = IntLattice::span(3, (0..3).map(|i| (0..3).map(|j| if i == j { 2 } else { 0 }).collect()));
        assert!(l.contains(&[2, -4, 0]));
        assert!(!l.contains(&[1, 0, 1]));
    }

    #[test]
    fn paired_coordinates() {
        // e_0 + e_2, e_1 + e_3 (each twice, order shuffled)
        let gens = vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1], vec![0, 1, 0, 1], vec![1, 0, 1, 0]];
        let l = IntLattice::span(4, gens);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[3, -1, 3, -1]));
        assert!(!l.contains(&[1, 0, 0, 0]));
    }

    #[test]
    fn non_unimodular_generators() {
        let l = IntLattice::span(2, vec![vec![4, 6], vec![6, 9]]);
        // span is generated by (2, 3)
        assert!(l.contains(&[2, 3]));
        assert!(!l.contains(&[1, 0]));
        assert!(!l.contains(&[2, 4]));
    }
}
