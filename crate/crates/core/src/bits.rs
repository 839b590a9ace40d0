//! Row-major packed bit matrix.
//!
//! Used for vertex labels (one row per vertex, one column per coordinate),
//! semicube membership (one row per semicube, one column per vertex) and
//! dense adjacency of the small auxiliary graphs.

use std::fmt::Write as _;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRows {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitRows {
    pub fn new(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        BitRows {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    /// Parses one row per string; every string must have the same length and
    /// consist of `0`/`1` only. Column 0 is the leftmost character.
    pub fn from_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self, String> {
        let cols = rows.first().map_or(0, |s| s.as_ref().len());
        let mut out = BitRows::new(rows.len(), cols);
        for (r, s) in rows.iter().enumerate() {
            let s = s.as_ref();
            if s.len() != cols {
                return Err(format!(
                    "label {r} has length {} but label 0 has length {cols}",
                    s.len()
                ));
            }
            for (c, ch) in s.bytes().enumerate() {
                match ch {
                    b'0' => {}
                    b'1' => out.set(r, c, true),
                    _ => return Err(format!("label {r} contains non-binary character {:?}", ch as char)),
                }
            }
        }
        Ok(out)
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
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.data[r * self.stride + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.stride + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    /// First word of a row; only meaningful when `cols <= 64`.
    #[inline]
    pub fn row_word(&self, r: usize) -> u64 {
        if self.stride == 0 {
            0
        } else {
            self.data[r * self.stride]
        }
    }

    pub fn hamming(&self, a: usize, b: usize) -> u32 {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| (x ^ y).count_ones())
            .sum()
    }

    pub fn count_ones(&self, r: usize) -> u32 {
        self.row(r).iter().map(|w| w.count_ones()).sum()
    }

    pub fn rows_intersect(&self, a: usize, b: usize) -> bool {
        self.row(a).iter().zip(self.row(b)).any(|(x, y)| x & y != 0)
    }

    /// True when the union of rows `a` and `b` has every column set.
    pub fn rows_cover(&self, a: usize, b: usize) -> bool {
        let full = self.cols / 64;
        let (ra, rb) = (self.row(a), self.row(b));
        if ra[..full].iter().zip(&rb[..full]).any(|(x, y)| x | y != u64::MAX) {
            return false;
        }
        match self.cols % 64 {
            0 => true,
            rem => {
                let mask = (1u64 << rem) - 1;
                (ra[full] | rb[full]) & mask == mask
            }
        }
    }

    /// Column indices of set bits in row `r`, ascending.
    pub fn ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(r).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    pub fn row_string(&self, r: usize) -> String {
        let mut s = String::with_capacity(self.cols);
        for c in 0..self.cols {
            s.push(if self.get(r, c) { '1' } else { '0' });
        }
        s
    }

    /// True when some row has two consecutive set columns.
    pub fn row_has_adjacent_ones(&self, r: usize) -> bool {
        let row = self.row(r);
        for (i, &w) in row.iter().enumerate() {
            if w & (w >> 1) != 0 {
                return true;
            }
            if i + 1 < row.len() && (w >> 63) & 1 == 1 && row[i + 1] & 1 == 1 {
                return true;
            }
        }
        false
    }
}

impl std::fmt::Debug for BitRows {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut s = String::new();
        for r in 0..self.rows {
            let _ = write!(s, "{}{}", if r == 0 { "" } else { " " }, self.row_string(r));
        }
        write!(f, "BitRows[{}x{}; {}]", self.rows, self.cols, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_and_strings() {
        let mut b = BitRows::new(2, 70);
        b.set(0, 0, true);
        b.set(0, 69, true);
        b.set(1, 64, true);
        assert!(b.get(0, 69) && !b.get(0, 68));
        assert_eq!(b.hamming(0, 1), 3);
        assert_eq!(b.ones(0).collect::<Vec<_>>(), vec![0, 69]);
        let s = b.row_string(1);
        assert_eq!(s.len(), 70);
        assert_eq!(s.find('1'), Some(64));
    }

    #[test]
    fn cover_and_adjacent_ones() {
        let b = BitRows::from_strings(&["1100", "0011", "0110"]).unwrap();
        assert!(b.rows_cover(0, 1));
        assert!(!b.rows_cover(0, 2));
        assert!(!b.rows_intersect(0, 1));
        assert!(b.row_has_adjacent_ones(0));

        let mut wide = BitRows::new(1, 128);
        wide.set(0, 63, true);
        wide.set(0, 64, true);
        assert!(wide.row_has_adjacent_ones(0));
        wide.set(0, 64, false);
        assert!(!wide.row_has_adjacent_ones(0));
    }

    #[test]
    fn ragged_strings_rejected() {
        assert!(BitRows::from_strings(&["01", "1"]).is_err());
        assert!(BitRows::from_strings(&["0a"]).is_err());
    }
}
