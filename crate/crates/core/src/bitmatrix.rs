//! Dense matrices over GF(2), one bitset per row.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Parse(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        Ok(m)
    }

    /// Parses rows of `0`/`1`; whitespace inside rows and blank lines are
    /// ignored, lines starting with `#` are comments.
    pub fn from_text(text: &str) -> Result<Self> {
        let rows: Vec<Vec<bool>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::Parse(format!("unexpected character {other:?} in matrix row"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        if rows.is_empty() {
            return Err(Error::Parse("empty matrix".into()));
        }
        BitMatrix::from_rows(&rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            for j in 0..self.cols {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let w = &mut self.data[i * self.words + j / 64];
        if value {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `row[dst] ^= row[src]`.
    pub fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let w = self.words;
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * w);
            (&lo[src * w..(src + 1) * w], &mut hi[..w])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * w);
            (&hi[..w], &mut lo[dst * w..(dst + 1) * w])
        };
        for (d, s) in b.iter_mut().zip(a) {
            *d ^= s;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words {
            self.data.swap(a * self.words + k, b * self.words + k);
        }
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn select_columns(&self, perm: &[usize]) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, perm.len());
        for i in 0..self.rows {
            for (j, &src) in perm.iter().enumerate() {
                if self.get(i, src) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows.len(), cols.len());
        for (a, i) in rows.enumerate() {
            for (b, j) in cols.clone().enumerate() {
                if self.get(i, j) {
                    m.set(a, b, true);
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// `self * other^T`, entry `(i, j)` is the parity of row `i` of `self`
    /// and row `j` of `other`.
    pub fn mul_transpose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols, "column counts differ");
        let mut m = BitMatrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            let a = self.row(i);
            for j in 0..other.rows {
                let b = other.row(j);
                let parity = a.iter().zip(b).fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones()) & 1;
                if parity == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hconcat(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, other.rows, "row counts differ");
        let mut m = BitMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    m.set(i, j, true);
                }
            }
            for j in 0..other.cols {
                if other.get(i, j) {
                    m.set(i, self.cols + j, true);
                }
            }
        }
        m
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else { continue };
            m.swap_rows(p, r);
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.xor_row_into(r, i);
                }
            }
            r += 1;
            if r == m.rows {
                break;
            }
        }
        r
    }

    /// Row `i` packed into a single word; requires at most 64 columns.
    pub fn row_word(&self, i: usize) -> u64 {
        debug_assert!(self.cols <= 64);
        self.data[i * self.words]
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip_and_rank() {
        let m = BitMatrix::from_text("1100\n0110\n1010\n").unwrap();
        assert_eq!(m.to_text(), "1100\n0110\n1010\n");
        assert_eq!(m.rank(), 2);
        assert_eq!(BitMatrix::identity(70).rank(), 70);
        assert!(BitMatrix::from_text("10\n1\n").is_err());
        assert!(BitMatrix::from_text("12\n").is_err());
    }

    #[test]
    fn products() {
        let m = BitMatrix::from_text("110\n011\n").unwrap();
        let p = m.mul_transpose(&m);
        assert_eq!(p.to_text(), "01\n10\n");
        assert_eq!(m.transpose().to_text(), "10\n11\n01\n");
        assert_eq!(m.select_columns(&[2, 0]).to_text(), "01\n10\n");
        let mut w = BitMatrix::zeros(2, 130);
        w.set(0, 129, true);
        w.set(1, 129, true);
        w.xor_row_into(0, 1);
        assert!(w.row(1).iter().all(|&x| x == 0));
        assert_eq!(w.row_weight(0), 1);
    }
}
