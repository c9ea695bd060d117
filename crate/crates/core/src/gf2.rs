//! Polynomials over GF(2).
//!
//! Coefficients are bit-packed into `u64` words in ascending-degree order:
//! bit `i` of word `w` is the coefficient of `x^(64w + i)`. Values are kept
//! canonical (no trailing zero words), so structural equality is polynomial
//! equality. Operands that fit a single word take dedicated fast paths.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which compares below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

type Words = SmallVec<[u64; 2]>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinPoly {
    words: Words,
}

fn clmul(a: u64, b: u64) -> u128 {
    let wide = a as u128;
    let mut acc = 0u128;
    let mut rest = b;
    while rest != 0 {
        acc ^= wide << rest.trailing_zeros();
        rest &= rest - 1;
    }
    acc
}

impl BinPoly {
    pub fn zero() -> Self {
        BinPoly { words: Words::new() }
    }

    pub fn one() -> Self {
        Self::from_word(1)
    }

    pub fn x() -> Self {
        Self::from_word(2)
    }

    pub fn monomial(k: usize) -> Self {
        let mut words: Words = smallvec![0; k / 64 + 1];
        words[k / 64] = 1u64 << (k % 64);
        BinPoly { words }
    }

    /// Polynomial whose coefficient bits are the bits of `w`.
    pub fn from_word(w: u64) -> Self {
        if w == 0 {
            Self::zero()
        } else {
            BinPoly { words: smallvec![w] }
        }
    }

    pub fn from_u128(w: u128) -> Self {
        let mut p = BinPoly {
            words: smallvec![w as u64, (w >> 64) as u64],
        };
        p.normalize();
        p
    }

    /// Sum of `x^e` over the given exponents (repeated exponents cancel).
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.flip(e);
        }
        p
    }

    /// Coefficient sequence, index `i` holding the coefficient of `x^i`.
    pub fn from_coeffs(bits: &[bool]) -> Self {
        let mut p = Self::zero();
        for (i, &b) in bits.iter().enumerate() {
            if b {
                p.flip(i);
            }
        }
        p
    }

    /// `x^n - 1`, which over GF(2) is `x^n + 1`.
    pub fn xn_minus_one(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.flip(0);
        p
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn degree(&self) -> Degree {
        match self.words.last() {
            None => Degree::NegInfinity,
            Some(&top) => Degree::Finite(64 * (self.words.len() - 1) + 63 - top.leading_zeros() as usize),
        }
    }

    /// Degree as a plain number, treating the zero polynomial as degree 0.
    /// Only meaningful where the caller has already excluded zero.
    pub(crate) fn deg0(&self) -> usize {
        self.degree().finite().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn flip(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1u64 << (i % 64);
        self.normalize();
    }

    /// The single packed word, when the degree is below 64.
    pub fn as_word(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(64 * wi + tz)
                }
            })
        })
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Multiplication by `x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut words: Words = smallvec![0; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = BinPoly { words };
        p.normalize();
        p
    }

    fn xor_assign(&mut self, other: &BinPoly) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a ^= b;
        }
        self.normalize();
    }

    fn mul_ref(&self, other: &BinPoly) -> BinPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let (Some(a), Some(b)) = (self.as_word(), other.as_word()) {
            return Self::from_u128(clmul(a, b));
        }
        let mut words: Words = smallvec![0; self.words.len() + other.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            for (j, &b) in other.words.iter().enumerate() {
                let prod = clmul(a, b);
                words[i + j] ^= prod as u64;
                words[i + j + 1] ^= (prod >> 64) as u64;
            }
        }
        let mut p = BinPoly { words };
        p.normalize();
        p
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &BinPoly) -> Result<(BinPoly, BinPoly)> {
        let db = divisor.degree().finite().ok_or(Error::DivisionByZero)?;
        if let (Some(mut r), Some(b)) = (self.as_word(), divisor.as_word()) {
            let mut q = 0u64;
            while r != 0 {
                let dr = 63 - r.leading_zeros() as usize;
                if dr < db {
                    break;
                }
                r ^= b << (dr - db);
                q |= 1u64 << (dr - db);
            }
            return Ok((Self::from_word(q), Self::from_word(r)));
        }
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Degree::Finite(dr) = r.degree() {
            if dr < db {
                break;
            }
            r.xor_assign(&divisor.shl(dr - db));
            q.flip(dr - db);
        }
        Ok((q, r))
    }

    pub fn rem(&self, divisor: &BinPoly) -> Result<BinPoly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &BinPoly) -> Option<BinPoly> {
        match self.divmod(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// True when `self` divides `other`. Zero divides only zero.
    pub fn divides(&self, other: &BinPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Reduction modulo `x^n - 1`, folding exponent `e` onto `e mod n`.
    /// For `n = 0` the quotient ring is trivial and the result is zero.
    pub fn reduce_cyclic(&self, n: usize) -> BinPoly {
        if n == 0 {
            return Self::zero();
        }
        if let Some(w) = self.as_word() {
            if n >= 64 || w >> n == 0 {
                return self.clone();
            }
            let mask = (1u64 << n) - 1;
            let mut rest = w;
            let mut acc = 0u64;
            while rest != 0 {
                acc ^= rest & mask;
                rest >>= n;
            }
            return Self::from_word(acc);
        }
        let mut out = Self::zero();
        for e in self.exponents() {
            out.flip(e % n);
        }
        out
    }

    /// Product reduced modulo `x^n - 1`.
    pub fn mul_cyclic(&self, other: &BinPoly, n: usize) -> BinPoly {
        self.mul_ref(other).reduce_cyclic(n)
    }

    pub fn pow(&self, e: u32) -> BinPoly {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// The reciprocal `x^deg(p) * p(1/x)`: coefficients reversed, then
    /// renormalized (trailing zeros of `p` drop the degree).
    pub fn reciprocal(&self) -> Result<BinPoly> {
        let d = self.degree().finite().ok_or(Error::ZeroReciprocal)?;
        let mut out = Self::zero();
        for e in self.exponents() {
            out.flip(d - e);
        }
        Ok(out)
    }
}

/// Monic greatest common divisor. Errors on `gcd(0, 0)`.
pub fn gcd(a: &BinPoly, b: &BinPoly) -> Result<BinPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.rem(&y)?;
        x = y;
        y = r;
    }
    Ok(x)
}

/// `gcd` where both arguments are known not to vanish together.
pub(crate) fn gcd_nz(a: &BinPoly, b: &BinPoly) -> BinPoly {
    gcd(a, b).expect("gcd arguments are not both zero")
}

impl PartialOrd for BinPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order of the coefficient bit-vector; in particular lower degree
/// sorts first.
impl Ord for BinPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl Add for &BinPoly {
    type Output = BinPoly;
    fn add(self, rhs: &BinPoly) -> BinPoly {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl Add for BinPoly {
    type Output = BinPoly;
    fn add(mut self, rhs: BinPoly) -> BinPoly {
        self.xor_assign(&rhs);
        self
    }
}

impl AddAssign<&BinPoly> for BinPoly {
    fn add_assign(&mut self, rhs: &BinPoly) {
        self.xor_assign(rhs);
    }
}

impl Mul for &BinPoly {
    type Output = BinPoly;
    fn mul(self, rhs: &BinPoly) -> BinPoly {
        self.mul_ref(rhs)
    }
}

impl Mul for BinPoly {
    type Output = BinPoly;
    fn mul(self, rhs: BinPoly) -> BinPoly {
        self.mul_ref(&rhs)
    }
}

impl fmt::Display for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, e) in self.exponents().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({self})")
    }
}

impl std::str::FromStr for BinPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::text::parse_binpoly(s)
    }
}

/// Irreducible factors with multiplicities, sorted by factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(BinPoly, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(BinPoly, u32)] {
        &self.factors
    }

    pub fn product(&self) -> BinPoly {
        self.factors
            .iter()
            .fold(BinPoly::one(), |acc, (f, e)| &acc * &f.pow(*e))
    }

    pub fn distinct_count(&self) -> usize {
        self.factors.len()
    }

    /// Multiplicity of `f` (zero when absent).
    pub fn multiplicity(&self, f: &BinPoly) -> u32 {
        self.factors.iter().find(|(g, _)| g == f).map_or(0, |(_, e)| *e)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "({p})")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monic polynomials of degree `d` that can be irreducible: constant term
/// set, plus `x` itself when `d = 1`.
fn trial_candidates(d: usize) -> impl Iterator<Item = BinPoly> {
    assert!(d < 64, "trial division beyond degree 63 is out of desk scale");
    let top = 1u64 << d;
    let x_only = (d == 1).then(BinPoly::x);
    x_only
        .into_iter()
        .chain((0..top / 2).map(move |low| BinPoly::from_word(top | (low << 1) | 1)))
}

/// `x^(2^i) mod f` chain test: `f` is irreducible iff
/// `gcd(x^(2^i) - x, f) = 1` for every `i <= deg f / 2`.
fn passes_ben_or(f: &BinPoly) -> bool {
    let n = f.deg0();
    if n <= 1 {
        return n == 1;
    }
    let x = BinPoly::x();
    let mut power = x.clone();
    for _ in 1..=n / 2 {
        power = (&power * &power).rem(f).expect("f is nonzero");
        if !gcd_nz(&(&power + &x), f).is_one() {
            return false;
        }
    }
    true
}

/// Irreducibility by exhaustive trial division up to half the degree.
pub fn is_irreducible(p: &BinPoly) -> bool {
    let n = match p.degree() {
        Degree::Finite(n) if n >= 1 => n,
        _ => return false,
    };
    (1..=n / 2).all(|d| trial_candidates(d).all(|c| !c.divides(p)))
}

/// Complete factorization into irreducibles by trial division in increasing
/// degree. The cofactor is tested for irreducibility before each new degree
/// so large prime cofactors stop the search early.
pub fn factor(p: &BinPoly) -> Result<Factorization> {
    if p.degree() < Degree::Finite(1) {
        return Err(Error::ConstantFactor);
    }
    let mut rest = p.clone();
    let mut factors = Vec::new();
    let mut d = 1;
    loop {
        let dr = rest.deg0();
        if dr == 0 {
            break;
        }
        if 2 * d > dr || passes_ben_or(&rest) {
            factors.push((rest, 1));
            break;
        }
        for cand in trial_candidates(d) {
            let mut mult = 0;
            while let Some(q) = rest.exact_div(&cand) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                factors.push((cand, mult));
            }
        }
        d += 1;
    }
    factors.sort();
    Ok(Factorization { factors })
}

/// Number of orbits of `i -> 2i mod t` on `{0, ..., t-1}`.
pub fn cyclotomic_class_count(t: usize) -> Result<usize> {
    if t == 0 {
        return Err(Error::NonPositive("t"));
    }
    let mut seen = vec![false; t];
    let mut classes = 0;
    for start in 0..t {
        if seen[start] {
            continue;
        }
        classes += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = (2 * i) % t;
        }
    }
    Ok(classes)
}

/// All monic divisors of `x^n - 1`, ascending.
pub fn divisors_of_xn_minus_1(n: usize) -> Result<Vec<BinPoly>> {
    if n == 0 {
        return Err(Error::NonPositive("n"));
    }
    let fact = factor(&BinPoly::xn_minus_one(n))?;
    Ok(sub_multiset_products(&fact))
}

/// Every product `prod f_i^{j_i}` with `0 <= j_i <= e_i`, ascending.
pub fn sub_multiset_products(fact: &Factorization) -> Vec<BinPoly> {
    let mut out = vec![BinPoly::one()];
    for (f, e) in fact.factors() {
        let powers: Vec<BinPoly> = (0..=*e).map(|j| f.pow(j)).collect();
        out = out.iter().flat_map(|d| powers.iter().map(move |pw| d * pw)).collect();
    }
    out.sort();
    out
}

pub(crate) fn usize_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        usize_gcd(b, a % b)
    }
}

pub(crate) fn usize_lcm(a: usize, b: usize) -> usize {
    a / usize_gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = p("1+x+x^3").divmod(&p("1+x")).unwrap();
        assert_eq!((q.clone(), r.clone()), (p("x+x^2"), p("1")));
        assert_eq!(&(&q * &p("1+x")) + &r, p("1+x+x^3"));

        let a = p("1+x^2+x^5+x^9");
        assert_eq!(a.divmod(&BinPoly::one()).unwrap(), (a.clone(), BinPoly::zero()));
        assert_eq!(p("x+1").divmod(&p("x^2+1")).unwrap(), (BinPoly::zero(), p("1+x")));
        assert_eq!(a.divmod(&BinPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn multiword_division_matches_single_word() {
        let a = BinPoly::xn_minus_one(130);
        let b = p("1+x+x^3");
        let (q, r) = a.divmod(&b).unwrap();
        assert!(r.degree() < b.degree());
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(BinPoly::monomial(70).reduce_cyclic(7), p("1"));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p("x^2+1"), &p("x^3+1")).unwrap(), p("x+1"));
        let q = p("1+x+x^4");
        assert_eq!(gcd(&q, &BinPoly::zero()).unwrap(), q);
        assert_eq!(gcd(&p("x+1"), &p("x^2+x+1")).unwrap(), p("1"));
        assert_eq!(gcd(&BinPoly::zero(), &BinPoly::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p("x^3+x+1").reciprocal().unwrap(), p("x^3+x^2+1"));
        assert_eq!(p("x+1").reciprocal().unwrap(), p("x+1"));
        assert_eq!(p("1").reciprocal().unwrap(), p("1"));
        // trailing zeros drop the degree
        assert_eq!(p("x^2+x^3").reciprocal().unwrap(), p("1+x"));
        assert_eq!(BinPoly::zero().reciprocal(), Err(Error::ZeroReciprocal));
    }

    #[test]
    fn factor_examples() {
        let f7 = factor(&BinPoly::xn_minus_one(7)).unwrap();
        assert_eq!(f7.factors(), &[(p("1+x"), 1), (p("1+x+x^3"), 1), (p("1+x^2+x^3"), 1)]);
        assert_eq!(f7.product(), BinPoly::xn_minus_one(7));

        let f6 = factor(&BinPoly::xn_minus_one(6)).unwrap();
        assert_eq!(f6.factors(), &[(p("1+x"), 2), (p("1+x+x^2"), 2)]);

        assert_eq!(factor(&p("x+1")).unwrap().factors(), &[(p("1+x"), 1)]);
        assert_eq!(factor(&p("1")), Err(Error::ConstantFactor));
        assert_eq!(factor(&BinPoly::zero()), Err(Error::ConstantFactor));
    }

    #[test]
    fn factor_handles_large_prime_cofactor() {
        // x^59 - 1 = (x + 1) * (irreducible of degree 58)
        let f = factor(&BinPoly::xn_minus_one(59)).unwrap();
        assert_eq!(f.distinct_count(), 2);
        assert_eq!(f.factors()[1].0.degree(), Degree::Finite(58));
        assert_eq!(f.product(), BinPoly::xn_minus_one(59));
    }

    #[test]
    fn factor_with_powers_of_x() {
        let q = p("x^2+x^3");
        let f = factor(&q).unwrap();
        assert_eq!(f.factors(), &[(p("x"), 2), (p("1+x"), 1)]);
    }

    #[test]
    fn cyclotomic_counts() {
        // orbits enumerated by hand: {0}, {1,2,4}, {3,6,5}
        assert_eq!(cyclotomic_class_count(7).unwrap(), 3);
        assert_eq!(cyclotomic_class_count(1).unwrap(), 1);
        assert_eq!(cyclotomic_class_count(3).unwrap(), 2);
        assert_eq!(cyclotomic_class_count(0), Err(Error::NonPositive("t")));
    }

    #[test]
    fn cyclotomic_count_matches_distinct_factors_for_odd_lengths() {
        for t in (1..40).step_by(2) {
            let fact = factor(&BinPoly::xn_minus_one(t)).unwrap();
            assert_eq!(cyclotomic_class_count(t).unwrap(), fact.distinct_count(), "t={t}");
        }
    }

    #[test]
    fn divisor_sets() {
        assert_eq!(
            divisors_of_xn_minus_1(3).unwrap(),
            vec![p("1"), p("1+x"), p("1+x+x^2"), p("1+x^3")]
        );
        assert_eq!(divisors_of_xn_minus_1(1).unwrap(), vec![p("1"), p("1+x")]);
        let d7 = divisors_of_xn_minus_1(7).unwrap();
        assert_eq!(d7.len(), 8);
        assert!(d7.iter().all(|d| d.divides(&BinPoly::xn_minus_one(7))));
        assert_eq!(divisors_of_xn_minus_1(6).unwrap().len(), 9);
    }

    #[test]
    fn zero_degree_is_below_everything() {
        assert!(BinPoly::zero().degree() < BinPoly::one().degree());
        assert_eq!(BinPoly::one().degree(), Degree::Finite(0));
        assert!(BinPoly::zero() < BinPoly::one());
        assert!(p("1+x+x^2") < p("x^3"));
    }
}
