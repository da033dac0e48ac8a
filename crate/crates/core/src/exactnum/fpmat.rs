use super::local::LocalContext;

/// Dense matrix over F_p, entries reduced into [0, p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FpMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<u64>], ctx: &LocalContext) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let p = ctx.p_u64();
        let data = rows.iter().flat_map(|row| row.iter().map(move |&x| x % p)).collect();
        FpMatrix { rows: r, cols: c, data }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    /// Reduced row echelon form; returns pivot columns.
    fn rref(&mut self, ctx: &LocalContext) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(k) = (r..self.rows).find(|&k| self.get(k, c) != 0) else {
                continue;
            };
            for j in 0..self.cols {
                self.data.swap(r * self.cols + j, k * self.cols + j);
            }
            let inv = ctx.inv(self.get(r, c)).unwrap();
            for j in 0..self.cols {
                let v = ctx.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) != 0 {
                    let f = self.get(i, c);
                    for j in 0..self.cols {
                        let v = ctx.sub(self.get(i, j), ctx.mul(f, self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, ctx: &LocalContext) -> usize {
        self.clone().rref(ctx).len()
    }

    /// A nonzero vector v with self * v = 0, if one exists.
    pub fn kernel_vector(&self, ctx: &LocalContext) -> Option<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref(ctx);
        let free = (0..self.cols).find(|c| !pivots.contains(c))?;
        let mut v = vec![0; self.cols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = ctx.neg(m.get(r, free));
        }
        Some(v)
    }

    pub fn mul_vec(&self, v: &[u64], ctx: &LocalContext) -> Vec<u64> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0, |acc, j| ctx.add(acc, ctx.mul(self.get(i, j), v[j]))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_annihilates() {
        let ctx = LocalContext::new(5).unwrap();
        let m = FpMatrix::from_rows(&[vec![1, 2, 3], vec![2, 3, 1]], &ctx);
        assert_eq!(m.rank(&ctx), 2);
        let v = m.kernel_vector(&ctx).unwrap();
        assert!(v.iter().any(|&x| x != 0));
        assert_eq!(m.mul_vec(&v, &ctx), vec![0, 0]);
        let full = FpMatrix::from_rows(&[vec![1, 0], vec![0, 1]], &ctx);
        assert!(full.kernel_vector(&ctx).is_none());
    }
}
