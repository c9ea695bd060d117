//! Echelon bases of GF(2) subspaces of bit-packed vectors (at most 64 bits).

/// A basis kept in echelon form: `rows[b]` is either 0 or a vector whose
/// leading bit is `b`.
#[derive(Clone, PartialEq, Eq)]
pub struct Basis {
    rows: [u64; 64],
    rank: u32,
}

impl Default for Basis {
    fn default() -> Self {
        Basis { rows: [0; 64], rank: 0 }
    }
}

impl std::fmt::Debug for Basis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list()
            .entries(self.vectors().map(|v| format!("{v:#b}")))
            .finish()
    }
}

fn lead(v: u64) -> usize {
    63 - v.leading_zeros() as usize
}

impl Basis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors(vs: impl IntoIterator<Item = u64>) -> Self {
        let mut b = Self::new();
        for v in vs {
            b.insert(v);
        }
        b
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Remainder of `v` after clearing every pivot bit.
    pub fn reduce(&self, mut v: u64) -> u64 {
        // bits strictly below the last visited position
        let mut below = u64::MAX;
        loop {
            let probe = v & below;
            if probe == 0 {
                return v;
            }
            let b = lead(probe);
            if self.rows[b] != 0 {
                v ^= self.rows[b];
            }
            if b == 0 {
                return v;
            }
            below = (1u64 << b) - 1;
        }
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Adds `v`, returning whether it was independent.
    pub fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        self.rows[lead(r)] = r;
        self.rank += 1;
        true
    }

    pub fn vectors(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.iter().rev().copied().filter(|&r| r != 0)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).rev().filter(|&b| self.rows[b] != 0)
    }

    /// Reduced row echelon form, highest pivot first. Two bases span the
    /// same space iff their canonical forms are equal.
    pub fn canonical(&self) -> Vec<u64> {
        let mut rows = self.rows;
        for b in 0..64 {
            if rows[b] == 0 {
                continue;
            }
            for c in (b + 1)..64 {
                if (rows[c] >> b) & 1 == 1 {
                    rows[c] ^= rows[b];
                }
            }
        }
        rows.iter().rev().copied().filter(|&r| r != 0).collect()
    }

    pub fn same_span(&self, other: &Basis) -> bool {
        self.rank == other.rank && other.vectors().all(|v| self.contains(v))
    }

    pub fn is_subspace_of(&self, other: &Basis) -> bool {
        self.vectors().all(|v| other.contains(v))
    }

    /// All `2^rank` vectors of the span in ascending numeric order.
    ///
    /// With a reduced basis, numeric order of span elements equals counter
    /// order on the coefficient vector (highest pivot most significant), so
    /// a binary counter walk yields a sorted list without sorting.
    pub fn span(&self) -> Vec<u64> {
        let mut rows = self.canonical();
        rows.reverse(); // lowest pivot first
        let mut prefix = Vec::with_capacity(rows.len());
        let mut acc = 0u64;
        for &r in &rows {
            acc ^= r;
            prefix.push(acc);
        }
        let n = 1usize << rows.len();
        let mut out = Vec::with_capacity(n);
        let mut cur = 0u64;
        out.push(cur);
        for k in 1..n {
            cur ^= prefix[k.trailing_zeros() as usize];
            out.push(cur);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_is_sorted_and_complete() {
        let b = Basis::from_vectors([0b1011, 0b0110, 0b0001]);
        assert_eq!(b.rank(), 3);
        let span = b.span();
        assert_eq!(span.len(), 8);
        assert!(span.windows(2).all(|w| w[0] < w[1]));
        for &v in &span {
            assert!(b.contains(v));
        }
    }

    #[test]
    fn dependent_vectors_are_rejected() {
        let mut b = Basis::new();
        assert!(b.insert(0b101));
        assert!(b.insert(0b011));
        assert!(!b.insert(0b110));
        assert!(!b.insert(0));
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn canonical_form_identifies_spans() {
        let a = Basis::from_vectors([0b1100, 0b0110]);
        let b = Basis::from_vectors([0b1010, 0b0110]);
        assert_eq!(a.canonical(), b.canonical());
        assert!(a.same_span(&b));
    }
}
