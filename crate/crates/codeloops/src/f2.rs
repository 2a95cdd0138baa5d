//! Dense GF(2) rows and kernel computation for small linear systems.
//!
//! Rows are packed into `u64` words.  System sizes here are tiny (at most
//! `2^n` variables for a rank-`n` loop), so plain Gaussian elimination is
//! all that is needed.

/// A bit vector of fixed width, packed little-endian into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zero(len: usize) -> BitRow {
        BitRow { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 != 0
    }

    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_in(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_set(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// A homogeneous linear system over GF(2); rows are equations, columns are
/// variables.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    ncols: usize,
    rows: Vec<BitRow>,
}

impl LinearSystem {
    pub fn new(ncols: usize) -> LinearSystem {
        LinearSystem { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Add the equation `sum of the given variables = 0`.  Variables listed
    /// an even number of times cancel.
    pub fn add_equation(&mut self, vars: &[usize]) {
        let mut row = BitRow::zero(self.ncols);
        for &v in vars {
            row.flip(v);
        }
        if !row.is_zero() {
            self.rows.push(row);
        }
    }

    /// Basis of the solution space, eliminating variables in the order given
    /// by `col_order` (a permutation of the columns).  The solution set does
    /// not depend on the order; the returned basis vectors may.
    pub fn kernel_basis_with_order(&self, col_order: &[usize]) -> Vec<BitRow> {
        assert_eq!(col_order.len(), self.ncols);
        let mut rows = self.rows.clone();
        // pivot_of[c] = row index whose pivot is column c
        let mut pivot_of: Vec<Option<usize>> = vec![None; self.ncols];
        let mut used = vec![false; rows.len()];
        for &col in col_order {
            let Some(r) = (0..rows.len()).find(|&r| !used[r] && rows[r].get(col)) else {
                continue;
            };
            used[r] = true;
            pivot_of[col] = Some(r);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(col) {
                    row.xor_in(&pivot_row);
                }
            }
        }
        let mut basis = Vec::new();
        for &col in col_order {
            if pivot_of[col].is_some() {
                continue;
            }
            // free column: solution with this variable 1, other free vars 0
            let mut sol = BitRow::zero(self.ncols);
            sol.set(col, true);
            for (c, p) in pivot_of.iter().enumerate() {
                if let Some(r) = p {
                    if rows[*r].get(col) {
                        sol.set(c, true);
                    }
                }
            }
            basis.push(sol);
        }
        basis
    }

    pub fn kernel_basis(&self) -> Vec<BitRow> {
        let order: Vec<usize> = (0..self.ncols).collect();
        self.kernel_basis_with_order(&order)
    }
}

/// Reduced row echelon form of a set of rows; a canonical basis of their
/// span.  Two row sets span the same space iff their RREFs are equal.
pub fn rref(rows: &[BitRow]) -> Vec<BitRow> {
    let mut rows: Vec<BitRow> = rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut done = 0;
    while done < rows.len() {
        let pivot = (done..rows.len())
            .min_by_key(|&r| rows[r].first_set().unwrap())
            .unwrap();
        rows.swap(done, pivot);
        let col = rows[done].first_set().unwrap();
        let pivot_row = rows[done].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != done && row.get(col) {
                row.xor_in(&pivot_row);
            }
        }
        rows.retain(|r| !r.is_zero());
        done += 1;
    }
    rows.sort_by_key(|r| r.first_set());
    rows
}

/// Rank of a set of `u32` vectors over GF(2).
pub fn rank_u32(vecs: &[u32]) -> usize {
    let mut pivots: Vec<u32> = Vec::new();
    for &v in vecs {
        let mut v = v;
        for &p in &pivots {
            let high = 31 - p.leading_zeros();
            if v >> high & 1 == 1 {
                v ^= p;
            }
        }
        if v != 0 {
            pivots.push(v);
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solves(sys: &LinearSystem, sol: &BitRow) -> bool {
        sys.rows.iter().all(|row| {
            let mut acc = false;
            for i in row.ones() {
                acc ^= sol.get(i);
            }
            !acc
        })
    }

    /// Brute-force kernel over all 2^n assignments.
    fn kernel_brute(sys: &LinearSystem) -> Vec<BitRow> {
        let n = sys.ncols();
        assert!(n <= 16);
        let mut out = Vec::new();
        for bits in 0u32..1 << n {
            let mut row = BitRow::zero(n);
            for i in 0..n {
                if bits >> i & 1 == 1 {
                    row.set(i, true);
                }
            }
            if solves(sys, &row) {
                out.push(row);
            }
        }
        out
    }

    fn span(basis: &[BitRow], ncols: usize) -> Vec<BitRow> {
        let mut out = vec![BitRow::zero(ncols)];
        for b in basis {
            let mut next = Vec::new();
            for s in &out {
                let mut t = s.clone();
                t.xor_in(b);
                next.push(t);
            }
            out.extend(next);
        }
        out.sort_by_key(|r| r.words.clone());
        out
    }

    #[test]
    fn kernel_matches_brute_force() {
        // variables 0..6; a few overlapping parity constraints
        let mut sys = LinearSystem::new(6);
        sys.add_equation(&[0]);
        sys.add_equation(&[1, 2, 3]);
        sys.add_equation(&[2, 3, 4]);
        sys.add_equation(&[1, 4]); // dependent on the previous two
        let basis = sys.kernel_basis();
        let mut got = span(&basis, 6);
        let mut want = kernel_brute(&sys);
        want.sort_by_key(|r| r.words.clone());
        got.dedup();
        assert_eq!(got, want);
    }

    #[test]
    fn kernel_dimension_independent_of_order() {
        let mut sys = LinearSystem::new(8);
        sys.add_equation(&[0, 1, 2]);
        sys.add_equation(&[2, 3]);
        sys.add_equation(&[4, 5, 6, 7]);
        let fwd = sys.kernel_basis();
        let rev: Vec<usize> = (0..8).rev().collect();
        let bwd = sys.kernel_basis_with_order(&rev);
        assert_eq!(fwd.len(), bwd.len());
        assert_eq!(rref(&fwd), rref(&bwd));
    }

    #[test]
    fn rank_of_mask_sets() {
        assert_eq!(rank_u32(&[0b001, 0b010, 0b100]), 3);
        assert_eq!(rank_u32(&[0b011, 0b101, 0b110]), 2);
        assert_eq!(rank_u32(&[0, 0b1]), 1);
        assert_eq!(rank_u32(&[]), 0);
    }

    #[test]
    fn empty_system_kernel_is_everything() {
        let sys = LinearSystem::new(4);
        assert_eq!(sys.kernel_basis().len(), 4);
    }
}
