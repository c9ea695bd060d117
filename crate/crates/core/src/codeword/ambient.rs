use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::BinPoly;
use crate::ring::{AmbientElement, RElem, RPoly};

/// A word of Z2^alpha x R^beta. Bit `i` of `a` is `a_i`; symbol `b_j` is
/// `p_j + u q_j` with `p_j`, `q_j` bit `j` of `p`, `q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Codeword {
    alpha: usize,
    beta: usize,
    a: u64,
    p: u64,
    q: u64,
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Codeword {
    pub fn zero(alpha: usize, beta: usize) -> Self {
        assert!(alpha <= 64 && beta <= 64, "codeword lengths are limited to 64");
        Codeword {
            alpha,
            beta,
            a: 0,
            p: 0,
            q: 0,
        }
    }

    pub fn new(a: &[bool], b: &[RElem]) -> Result<Self> {
        if a.len() > 64 || b.len() > 64 {
            return Err(Error::AmbientTooLarge {
                alpha: a.len(),
                beta: b.len(),
            });
        }
        let mut c = Codeword::zero(a.len(), b.len());
        for (i, &bit) in a.iter().enumerate() {
            c.a |= (bit as u64) << i;
        }
        for (j, &s) in b.iter().enumerate() {
            c.p |= (s.p() as u64) << j;
            c.q |= (s.q() as u64) << j;
        }
        Ok(c)
    }

    pub(crate) fn from_bits(alpha: usize, beta: usize, a: u64, p: u64, q: u64) -> Self {
        Codeword {
            alpha,
            beta,
            a: a & low_mask(alpha),
            p: p & low_mask(beta),
            q: q & low_mask(beta),
        }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn a_bit(&self, i: usize) -> bool {
        (self.a >> i) & 1 == 1
    }

    pub fn symbol(&self, j: usize) -> RElem {
        RElem::new((self.p >> j) & 1 == 1, (self.q >> j) & 1 == 1)
    }

    /// The binary block as `a(x)`.
    pub fn a_poly(&self) -> BinPoly {
        BinPoly::from_word(self.a)
    }

    /// The R block as `b(x)`.
    pub fn b_poly(&self) -> RPoly {
        RPoly::new(BinPoly::from_word(self.p), BinPoly::from_word(self.q))
    }

    pub fn is_zero(&self) -> bool {
        self.a | self.p | self.q == 0
    }

    fn check_lengths(&self, other: &Codeword) -> Result<()> {
        if (self.alpha, self.beta) != (other.alpha, other.beta) {
            return Err(Error::LengthMismatch {
                expected: (self.alpha, self.beta),
                found: (other.alpha, other.beta),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Codeword) -> Result<Codeword> {
        self.check_lengths(other)?;
        Ok(Codeword {
            a: self.a ^ other.a,
            p: self.p ^ other.p,
            q: self.q ^ other.q,
            ..*self
        })
    }

    /// `r c`: the binary block is scaled by `r mod u`, each symbol by `r`.
    pub fn scale(&self, r: RElem) -> Codeword {
        let a = if r.p() { self.a } else { 0 };
        let p = if r.p() { self.p } else { 0 };
        let mut q = if r.p() { self.q } else { 0 };
        if r.q() {
            q ^= self.p;
        }
        Codeword { a, p, q, ..*self }
    }

    /// The (1+u)-constacyclic shift: both blocks rotate right by one and
    /// the wrapped symbol is multiplied by 1+u.
    pub fn shift(&self) -> Codeword {
        let (al, be) = (self.alpha, self.beta);
        let a = if al == 0 {
            0
        } else {
            ((self.a << 1) | (self.a >> (al - 1))) & low_mask(al)
        };
        if be == 0 {
            return Codeword { a, ..*self };
        }
        let top_p = (self.p >> (be - 1)) & 1;
        let top_q = (self.q >> (be - 1)) & 1;
        let p = ((self.p << 1) & low_mask(be)) | top_p;
        let q = ((self.q << 1) & low_mask(be)) | (top_p ^ top_q);
        Codeword { a, p, q, ..*self }
    }

    /// Identification with the module element `(a(x), b(x))`.
    pub fn to_ambient(&self) -> AmbientElement {
        AmbientElement::new(self.a_poly(), self.b_poly(), self.alpha, self.beta)
    }

    pub fn from_ambient(e: &AmbientElement) -> Result<Codeword> {
        if e.alpha() > 64 || e.beta() > 64 {
            return Err(Error::AmbientTooLarge {
                alpha: e.alpha(),
                beta: e.beta(),
            });
        }
        let word = |p: &BinPoly| p.as_word().expect("reduced components fit one word");
        Ok(Codeword {
            alpha: e.alpha(),
            beta: e.beta(),
            a: word(e.first()),
            p: word(e.second().p()),
            q: word(e.second().q()),
        })
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.alpha {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.a_bit(i) as u8)?;
        }
        f.write_str("; ")?;
        for j in 0..self.beta {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.symbol(j))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codeword{self}")
    }
}

/// Spreads the low 32 bits of `x` onto the even bit positions.
fn spread(x: u64) -> u64 {
    let mut x = x & 0xFFFF_FFFF;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    (x | (x << 1)) & 0x5555_5555_5555_5555
}

fn compact(x: u64) -> u64 {
    let mut x = x & 0x5555_5555_5555_5555;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x >> 4)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x >> 8)) & 0x0000_FFFF_0000_FFFF;
    (x | (x >> 16)) & 0xFFFF_FFFF
}

/// Reverses the low `n` bits.
fn reverse_low(x: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        x.reverse_bits() >> (64 - n)
    }
}

/// Block lengths of Z2^alpha x R^beta together with the packed key layout.
///
/// A word packs into a `u64` key of `alpha + 2*beta` bits whose numeric
/// order is the canonical codeword order: `a_0` is the most significant
/// bit, then the `a` block, then each symbol `b_j` as two bits
/// (`q_j` high, `p_j` low) so that `0 < 1 < u < 1+u`. Every module
/// operation is GF(2)-linear on keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Ambient {
    alpha: usize,
    beta: usize,
}

impl Ambient {
    pub fn new(alpha: usize, beta: usize) -> Result<Self> {
        if alpha + beta == 0 {
            return Err(Error::NonPositive("alpha + beta"));
        }
        if alpha + 2 * beta > 64 {
            return Err(Error::AmbientTooLarge { alpha, beta });
        }
        Ok(Ambient { alpha, beta })
    }

    /// A purely binary ambient of length `n`.
    pub fn binary(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// `alpha + 2*beta`, the Gray length and the key width.
    pub fn bits(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    pub fn check_budget(&self, budget: u64) -> Result<()> {
        let bits = self.bits() as u32;
        if bits >= 64 || (1u64 << bits) > budget {
            return Err(Error::BudgetExceeded { bits, budget });
        }
        Ok(())
    }

    pub fn a_mask(&self) -> u64 {
        low_mask(self.alpha) << (2 * self.beta)
    }

    /// Key bits holding the `p` (unit) parts of the symbols.
    pub fn p_mask(&self) -> u64 {
        spread(low_mask(self.beta))
    }

    /// Key bits holding the `q` (u) parts of the symbols.
    pub fn q_mask(&self) -> u64 {
        self.p_mask() << 1
    }

    pub fn key(&self, c: &Codeword) -> u64 {
        debug_assert_eq!((c.alpha, c.beta), (self.alpha, self.beta));
        let a = reverse_low(c.a, self.alpha) << (2 * self.beta);
        let p = spread(reverse_low(c.p, self.beta));
        let q = spread(reverse_low(c.q, self.beta)) << 1;
        a | p | q
    }

    pub fn codeword(&self, key: u64) -> Codeword {
        let a = reverse_low(key >> (2 * self.beta), self.alpha);
        let p = reverse_low(compact(key), self.beta);
        let q = reverse_low(compact(key >> 1), self.beta);
        Codeword::from_bits(self.alpha, self.beta, a, p, q)
    }

    pub fn check(&self, c: &Codeword) -> Result<()> {
        if (c.alpha, c.beta) != (self.alpha, self.beta) {
            return Err(Error::LengthMismatch {
                expected: (self.alpha, self.beta),
                found: (c.alpha, c.beta),
            });
        }
        Ok(())
    }

    pub fn shift_key(&self, key: u64) -> u64 {
        self.key(&self.codeword(key).shift())
    }

    /// `u * c`: clears the binary block and moves each `p_j` into `q_j`.
    pub fn u_key(&self, key: u64) -> u64 {
        (key & self.p_mask()) << 1
    }

    /// The binary block of a key, as a key of `Ambient::binary(alpha)`.
    pub fn x_part(&self, key: u64) -> u64 {
        key >> (2 * self.beta)
    }

    /// The R block of a key, as a key of `Ambient::new(0, beta)`.
    pub fn y_part(&self, key: u64) -> u64 {
        key & low_mask(2 * self.beta)
    }

    /// The `q` bits of the symbols as a `beta`-bit word, `b_0` most significant.
    pub fn q_word(&self, key: u64) -> u64 {
        compact(key >> 1) & low_mask(self.beta)
    }

    /// The `p` bits of the symbols as a `beta`-bit word, `b_0` most significant.
    pub fn p_word(&self, key: u64) -> u64 {
        compact(key) & low_mask(self.beta)
    }

    pub fn join(&self, x: u64, y: u64) -> u64 {
        (x << (2 * self.beta)) | y
    }

    /// The u-component of the inner product as a bilinear form on keys:
    /// `sum a_i d_i + sum (p_j q'_j + q_j p'_j)`.
    pub fn u_form(&self, k1: u64, k2: u64) -> bool {
        let swapped = (k2 & self.a_mask()) | ((k2 & self.p_mask()) << 1) | ((k2 & self.q_mask()) >> 1);
        (k1 & swapped).count_ones() & 1 == 1
    }

    /// The unit component of the inner product: `sum p_j p'_j`.
    pub fn unit_form(&self, k1: u64, k2: u64) -> bool {
        (k1 & k2 & self.p_mask()).count_ones() & 1 == 1
    }

    pub fn element_key(&self, e: &AmbientElement) -> Result<u64> {
        if (e.alpha(), e.beta()) != (self.alpha, self.beta) {
            return Err(Error::LengthMismatch {
                expected: (self.alpha, self.beta),
                found: (e.alpha(), e.beta()),
            });
        }
        Ok(self.key(&Codeword::from_ambient(e)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(a: &[u8], b: &[RElem]) -> Codeword {
        let bits: Vec<bool> = a.iter().map(|&x| x == 1).collect();
        Codeword::new(&bits, b).unwrap()
    }

    #[test]
    fn shift_examples() {
        use RElem as E;
        let c = word(&[1, 0], &[E::ONE, E::U]);
        assert_eq!(c.shift(), word(&[0, 1], &[E::U, E::ONE]));
        assert!(Codeword::zero(3, 2).shift().is_zero());
        let c = word(&[1], &[E::ONE_PLUS_U]);
        assert_eq!(c.shift(), word(&[1], &[E::ONE]));
    }

    #[test]
    fn key_order_is_lexicographic() {
        use RElem as E;
        let amb = Ambient::new(1, 2).unwrap();
        let mut words = Vec::new();
        for a in [0u8, 1] {
            for s0 in E::ALL {
                for s1 in E::ALL {
                    words.push(word(&[a], &[s0, s1]));
                }
            }
        }
        // constructed in lexicographic order already
        let keys: Vec<u64> = words.iter().map(|w| amb.key(w)).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(keys, (0..32).collect::<Vec<_>>());
    }

    #[test]
    fn shift_matches_x_star() {
        use crate::ring::star_mul;
        let amb = Ambient::new(3, 4).unwrap();
        for key in (0..1u64 << 11).step_by(7) {
            let c = amb.codeword(key);
            let via_star = Codeword::from_ambient(&star_mul(&RPoly::x(), &c.to_ambient())).unwrap();
            assert_eq!(via_star, c.shift());
        }
    }

    #[test]
    fn shift_period_divides_twice_lcm() {
        use crate::gf2::usize_lcm;
        for (alpha, beta) in [(1, 1), (2, 3), (3, 2), (4, 6), (5, 3)] {
            let amb = Ambient::new(alpha, beta).unwrap();
            let period = 2 * usize_lcm(alpha, beta);
            for key in 0..1u64 << amb.bits() {
                let c = amb.codeword(key);
                let mut d = c;
                for _ in 0..period {
                    d = d.shift();
                }
                assert_eq!(d, c);
            }
        }
    }

    proptest! {
        #[test]
        fn key_round_trip(alpha in 0usize..20, beta in 1usize..20, raw in any::<u64>()) {
            let amb = Ambient::new(alpha, beta).unwrap();
            let key = raw & low_mask(amb.bits());
            prop_assert_eq!(amb.key(&amb.codeword(key)), key);
        }

        #[test]
        fn u_key_matches_scaling(alpha in 0usize..10, beta in 1usize..10, raw in any::<u64>()) {
            let amb = Ambient::new(alpha, beta).unwrap();
            let key = raw & low_mask(amb.bits());
            let c = amb.codeword(key);
            prop_assert_eq!(amb.codeword(amb.u_key(key)), c.scale(RElem::U));
        }
    }
}
