//! Dense square matrices over a [`FieldTables`] field.
//!
//! Entries are field codes (`u8`), stored row-major. A matrix packs into a
//! `u128` key by reading the entries as base-`|F|` digits with the first entry
//! most significant, so numeric key order is the lexicographic order of the
//! entry-code strings.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldTables;

pub type Mat = Vec<u8>;

/// Matrix arithmetic for a fixed dimension and field.
#[derive(Debug, Clone)]
pub struct MatrixRing {
    field: Arc<FieldTables>,
    n: usize,
}

impl MatrixRing {
    pub fn new(field: Arc<FieldTables>, n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        MatrixRing { field, n }
    }

    pub fn field(&self) -> &Arc<FieldTables> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.n * self.n
    }

    /// Whether every matrix of this ring fits in a `u128` key.
    pub fn key_fits(&self) -> bool {
        let q = self.field.order() as f64;
        (self.len() as f64) * q.log2() <= 127.99
    }

    pub fn identity(&self) -> Mat {
        let mut m = vec![0u8; self.len()];
        for i in 0..self.n {
            m[i * self.n + i] = 1;
        }
        m
    }

    pub fn zero(&self) -> Mat {
        vec![0u8; self.len()]
    }

    pub fn diag(&self, d: &[u8]) -> Mat {
        let mut m = self.zero();
        for (i, &x) in d.iter().enumerate() {
            m[i * self.n + i] = x;
        }
        m
    }

    #[inline]
    pub fn mul_into(&self, a: &[u8], b: &[u8], out: &mut [u8]) {
        let n = self.n;
        let f = &*self.field;
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u8;
                for k in 0..n {
                    let x = a[i * n + k];
                    let y = b[k * n + j];
                    if x != 0 && y != 0 {
                        s = f.add(s, f.mul(x, y));
                    }
                }
                out[i * n + j] = s;
            }
        }
    }

    pub fn mul(&self, a: &[u8], b: &[u8]) -> Mat {
        let mut out = self.zero();
        self.mul_into(a, b, &mut out);
        out
    }

    pub fn add(&self, a: &[u8], b: &[u8]) -> Mat {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.field.add(x, y))
            .collect()
    }

    pub fn sub(&self, a: &[u8], b: &[u8]) -> Mat {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.field.sub(x, y))
            .collect()
    }

    pub fn scale(&self, c: u8, a: &[u8]) -> Mat {
        a.iter().map(|&x| self.field.mul(c, x)).collect()
    }

    pub fn transpose(&self, a: &[u8]) -> Mat {
        let n = self.n;
        let mut t = self.zero();
        for i in 0..n {
            for j in 0..n {
                t[j * n + i] = a[i * n + j];
            }
        }
        t
    }

    /// Transpose composed with the `q`-power map on entries.
    pub fn conj_transpose(&self, a: &[u8]) -> Mat {
        let mut t = self.transpose(a);
        for x in t.iter_mut() {
            *x = self.field.conj(*x);
        }
        t
    }

    pub fn pow(&self, a: &[u8], mut e: u64) -> Mat {
        let mut r = self.identity();
        let mut b = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    /// Row echelon form in place; returns `(rank, determinant factor)`.
    fn eliminate(&self, m: &mut [u8], cols: usize, rows: usize) -> (usize, u8) {
        let f = &*self.field;
        let mut det = 1u8;
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
                det = 0;
                continue;
            };
            if piv != rank {
                for k in 0..cols {
                    m.swap(piv * cols + k, rank * cols + k);
                }
                det = f.neg(det);
            }
            let pv = m[rank * cols + c];
            det = f.mul(det, pv);
            let pinv = f.inv(pv);
            for k in 0..cols {
                m[rank * cols + k] = f.mul(m[rank * cols + k], pinv);
            }
            for r in 0..rows {
                if r != rank && m[r * cols + c] != 0 {
                    let factor = m[r * cols + c];
                    for k in 0..cols {
                        let v = f.mul(factor, m[rank * cols + k]);
                        m[r * cols + k] = f.sub(m[r * cols + k], v);
                    }
                }
            }
            rank += 1;
        }
        (rank, det)
    }

    pub fn det(&self, a: &[u8]) -> u8 {
        let mut m = a.to_vec();
        let (rank, det) = self.eliminate(&mut m, self.n, self.n);
        if rank < self.n {
            0
        } else {
            det
        }
    }

    pub fn rank(&self, a: &[u8]) -> usize {
        let mut m = a.to_vec();
        self.eliminate(&mut m, self.n, self.n).0
    }

    pub fn inverse(&self, a: &[u8]) -> Option<Mat> {
        let n = self.n;
        let w = 2 * n;
        let mut aug = vec![0u8; n * w];
        for i in 0..n {
            aug[i * w..i * w + n].copy_from_slice(&a[i * n..i * n + n]);
            aug[i * w + n + i] = 1;
        }
        let mut pivots = 0;
        // eliminate on the left block only
        let f = &*self.field;
        for c in 0..n {
            let piv = (pivots..n).find(|&r| aug[r * w + c] != 0)?;
            for k in 0..w {
                aug.swap(piv * w + k, pivots * w + k);
            }
            let pinv = f.inv(aug[pivots * w + c]);
            for k in 0..w {
                aug[pivots * w + k] = f.mul(aug[pivots * w + k], pinv);
            }
            for r in 0..n {
                if r != pivots && aug[r * w + c] != 0 {
                    let factor = aug[r * w + c];
                    for k in 0..w {
                        let v = f.mul(factor, aug[pivots * w + k]);
                        aug[r * w + k] = f.sub(aug[r * w + k], v);
                    }
                }
            }
            pivots += 1;
        }
        let mut inv = self.zero();
        for i in 0..n {
            inv[i * n..i * n + n].copy_from_slice(&aug[i * w + n..i * w + w]);
        }
        Some(inv)
    }

    pub fn encode(&self, a: &[u8]) -> u128 {
        let q = self.field.order() as u128;
        a.iter().fold(0u128, |acc, &x| acc * q + x as u128)
    }

    pub fn decode_into(&self, mut key: u128, out: &mut [u8]) {
        let q = self.field.order() as u128;
        for slot in out.iter_mut().rev() {
            *slot = (key % q) as u8;
            key /= q;
        }
    }

    pub fn decode(&self, key: u128) -> Mat {
        let mut m = self.zero();
        self.decode_into(key, &mut m);
        m
    }

    /// Multiplicative order of an invertible matrix.
    pub fn order(&self, a: &[u8]) -> u64 {
        let id = self.identity();
        let mut x = a.to_vec();
        let mut k = 1;
        while x != id {
            x = self.mul(&x, a);
            k += 1;
        }
        k
    }

    /// Block-diagonal matrix of unipotent Jordan blocks `J_i`, blocks in the
    /// given order; ones on the superdiagonal.
    pub fn jordan_unipotent(&self, blocks: &[usize]) -> Result<Mat> {
        if blocks.iter().sum::<usize>() != self.n || blocks.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "block sizes {blocks:?} do not partition {}",
                self.n
            )));
        }
        let mut m = self.identity();
        let mut start = 0;
        for &b in blocks {
            for k in 0..b - 1 {
                m[(start + k) * self.n + start + k + 1] = 1;
            }
            start += b;
        }
        Ok(m)
    }

    /// Basis of the null space of a `rows × cols` matrix (row-major).
    pub fn null_space(&self, a: &[u8], rows: usize, cols: usize) -> Vec<Vec<u8>> {
        let mut m = a.to_vec();
        let (rank, _) = self.eliminate(&mut m, cols, rows);
        let f = &*self.field;
        // pivot column of each echelon row
        let mut pivot_cols = Vec::with_capacity(rank);
        for r in 0..rank {
            let c = (0..cols)
                .find(|&c| m[r * cols + c] != 0)
                .expect("pivot row");
            pivot_cols.push(c);
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u8; cols];
                v[fc] = 1;
                for (r, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = f.neg(m[r * cols + fc]);
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn ring(p: u64, f: u32, n: usize) -> MatrixRing {
        let t = FieldTables::new(make_field(p, f).unwrap()).unwrap();
        MatrixRing::new(Arc::new(t), n)
    }

    #[test]
    fn inverse_and_det() {
        let r = ring(3, 1, 3);
        let a = vec![1, 1, 0, 0, 1, 2, 2, 0, 1];
        let ai = r.inverse(&a).unwrap();
        assert_eq!(r.mul(&a, &ai), r.identity());
        assert_eq!(r.det(&a), r.det(&r.transpose(&a)));
        let singular = vec![1, 2, 0, 2, 1, 0, 0, 0, 0];
        assert_eq!(r.det(&singular), 0);
        assert!(r.inverse(&singular).is_none());
        assert_eq!(r.rank(&singular), 1);
    }

    #[test]
    fn det_is_multiplicative_over_gf9() {
        let r = ring(3, 2, 2);
        let f = r.field().clone();
        for a in 0..9u8 {
            for b in 0..9u8 {
                let x = vec![a, 1, b, 2];
                let y = vec![b, a, 1, 1];
                assert_eq!(r.det(&r.mul(&x, &y)), f.mul(r.det(&x), r.det(&y)));
            }
        }
    }

    #[test]
    fn encoding_roundtrip_and_order() {
        let r = ring(5, 1, 3);
        let a = vec![4, 0, 3, 1, 2, 0, 0, 0, 1];
        assert_eq!(r.decode(r.encode(&a)), a);
        assert!(r.encode(&r.identity()) > r.encode(&r.zero()));
        let j = r.jordan_unipotent(&[3]).unwrap();
        assert_eq!(r.order(&j), 5);
        assert_eq!(r.pow(&j, 5), r.identity());
    }

    #[test]
    fn null_space_dimension() {
        let r = ring(3, 1, 2);
        // x + 2y = 0 in two unknowns
        let ns = r.null_space(&[1, 2], 1, 2);
        assert_eq!(ns, vec![vec![1, 1]]);
        let ns = r.null_space(&[0, 0, 0, 0], 2, 2);
        assert_eq!(ns.len(), 2);
    }
}
