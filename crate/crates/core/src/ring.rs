//! The chain ring R = F2 + uF2 (u^2 = 0), polynomials over it, and the
//! ambient module Z2[x]/(x^alpha - 1) x R[x]/(x^beta - 1 - u).

use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::gf2::{BinPoly, Degree};

/// An element `p + u*q` of R, stored as the code `p + 2q`. The code order
/// `0 < 1 < u < 1+u` is the canonical symbol order used everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RElem(u8);

impl RElem {
    pub const ZERO: RElem = RElem(0);
    pub const ONE: RElem = RElem(1);
    pub const U: RElem = RElem(2);
    pub const ONE_PLUS_U: RElem = RElem(3);

    pub const ALL: [RElem; 4] = [RElem::ZERO, RElem::ONE, RElem::U, RElem::ONE_PLUS_U];

    pub fn new(p: bool, q: bool) -> Self {
        RElem(p as u8 | (q as u8) << 1)
    }

    pub fn from_code(code: u8) -> Self {
        RElem(code & 3)
    }

    pub fn code(self) -> u8 {
        self.0
    }

    /// Coefficient of 1.
    pub fn p(self) -> bool {
        self.0 & 1 == 1
    }

    /// Coefficient of u.
    pub fn q(self) -> bool {
        self.0 & 2 == 2
    }

    pub fn is_unit(self) -> bool {
        self.p()
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for RElem {
    type Output = RElem;
    #[allow(clippy::suspicious_arithmetic_impl)] // addition in characteristic 2
    fn add(self, rhs: RElem) -> RElem {
        RElem(self.0 ^ rhs.0)
    }
}

/// `(p1 + u q1)(p2 + u q2) = p1 p2 + u (p1 q2 + p2 q1)`.
impl Mul for RElem {
    type Output = RElem;
    fn mul(self, rhs: RElem) -> RElem {
        let p = self.p() & rhs.p();
        let q = (self.p() & rhs.q()) ^ (self.q() & rhs.p());
        RElem::new(p, q)
    }
}

pub fn relem_mul(a: RElem, b: RElem) -> RElem {
    a * b
}

impl fmt::Display for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1",
            2 => "u",
            _ => "1+u",
        })
    }
}

/// A polynomial `p(x) + u*q(x)` over R.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RPoly {
    p: BinPoly,
    q: BinPoly,
}

impl RPoly {
    pub fn new(p: BinPoly, q: BinPoly) -> Self {
        RPoly { p, q }
    }

    pub fn zero() -> Self {
        RPoly::default()
    }

    pub fn one() -> Self {
        RPoly::from_binary(BinPoly::one())
    }

    pub fn x() -> Self {
        RPoly::from_binary(BinPoly::x())
    }

    /// `c * x^k`.
    pub fn monomial(c: RElem, k: usize) -> Self {
        let mut out = RPoly::zero();
        out.add_term(c, k);
        out
    }

    pub fn from_binary(p: BinPoly) -> Self {
        RPoly { p, q: BinPoly::zero() }
    }

    /// `u * q(x)`.
    pub fn u_times(q: BinPoly) -> Self {
        RPoly { p: BinPoly::zero(), q }
    }

    pub fn from_coeffs(coeffs: &[RElem]) -> Self {
        let mut out = RPoly::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            out.add_term(c, k);
        }
        out
    }

    pub fn p(&self) -> &BinPoly {
        &self.p
    }

    pub fn q(&self) -> &BinPoly {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn degree(&self) -> Degree {
        self.p.degree().max(self.q.degree())
    }

    pub fn coeff(&self, k: usize) -> RElem {
        RElem::new(self.p.coeff(k), self.q.coeff(k))
    }

    pub fn add_term(&mut self, c: RElem, k: usize) {
        if c.p() {
            self.p.flip(k);
        }
        if c.q() {
            self.q.flip(k);
        }
    }

    pub fn scale(&self, c: RElem) -> RPoly {
        let p = if c.p() { self.p.clone() } else { BinPoly::zero() };
        let mut q = if c.p() { self.q.clone() } else { BinPoly::zero() };
        if c.q() {
            q += &self.p;
        }
        RPoly { p, q }
    }

    /// Reduction modulo `x^beta - lambda`, folding each term `t x^(beta+k)`
    /// down to `t * lambda * x^k` until the degree is below `beta`.
    pub fn reduce_constacyclic(&self, beta: usize, lambda: RElem) -> Result<RPoly> {
        if beta == 0 {
            return Err(Error::NonPositive("beta"));
        }
        if let (Some(mut p), Some(mut q), true) = (self.p.as_word(), self.q.as_word(), beta < 64) {
            let mask = (1u64 << beta) - 1;
            loop {
                let (hp, hq) = (p >> beta, q >> beta);
                if hp == 0 && hq == 0 {
                    break;
                }
                p &= mask;
                q &= mask;
                // (hp + u hq)(lp + u lq) = hp lp + u (hp lq + hq lp)
                if lambda.p() {
                    p ^= hp;
                    q ^= hq;
                }
                if lambda.q() {
                    q ^= hp;
                }
            }
            return Ok(RPoly::new(BinPoly::from_word(p), BinPoly::from_word(q)));
        }
        let len = self.degree().finite().map_or(0, |d| d + 1);
        let mut coeffs: Vec<RElem> = (0..len).map(|k| self.coeff(k)).collect();
        for k in (beta..len).rev() {
            let t = coeffs[k];
            if !t.is_zero() {
                coeffs[k] = RElem::ZERO;
                coeffs[k - beta] = coeffs[k - beta] + t * lambda;
            }
        }
        coeffs.truncate(beta);
        Ok(RPoly::from_coeffs(&coeffs))
    }

    /// Reduction in R[x]/(x^beta - 1 - u).
    pub fn reduce(&self, beta: usize) -> Result<RPoly> {
        self.reduce_constacyclic(beta, RElem::ONE_PLUS_U)
    }

    /// The image modulo u.
    pub fn bar(&self) -> BinPoly {
        self.p.clone()
    }
}

impl Add for &RPoly {
    type Output = RPoly;
    fn add(self, rhs: &RPoly) -> RPoly {
        RPoly {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
        }
    }
}

impl Add for RPoly {
    type Output = RPoly;
    fn add(self, rhs: RPoly) -> RPoly {
        &self + &rhs
    }
}

impl Mul for &RPoly {
    type Output = RPoly;
    fn mul(self, rhs: &RPoly) -> RPoly {
        RPoly {
            p: &self.p * &rhs.p,
            q: &(&self.p * &rhs.q) + &(&self.q * &rhs.p),
        }
    }
}

impl Mul for RPoly {
    type Output = RPoly;
    fn mul(self, rhs: RPoly) -> RPoly {
        &self * &rhs
    }
}

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree().finite() else {
            return f.write_str("0");
        };
        let mut first = true;
        for k in 0..=deg {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            match (c, k) {
                (RElem::ONE, 0) => f.write_str("1")?,
                (RElem::ONE, _) => f.write_str(&mono)?,
                (RElem::U, 0) => f.write_str("u")?,
                (RElem::U, _) => write!(f, "u*{mono}")?,
                (_, 0) => f.write_str("(1+u)")?,
                (_, _) => write!(f, "(1+u)*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RPoly({self})")
    }
}

impl std::str::FromStr for RPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::text::parse_rpoly(s)
    }
}

/// Product in R[x]/(x^beta - 1 - u), where `x^beta = 1 + u`.
pub fn rpoly_mul_mod(a: &RPoly, b: &RPoly, beta: usize) -> Result<RPoly> {
    (a * b).reduce(beta)
}

/// Reduction modulo u.
pub fn bar_reduce(d: &RPoly) -> BinPoly {
    d.bar()
}

/// `(a(x), b(x)) -> (a(x), b((1+u)x))`, carrying R[x]/(x^beta - 1) onto
/// R[x]/(x^beta - 1 - u). Defined only for odd `beta`.
pub fn mu_map(a: &BinPoly, b: &RPoly, alpha: usize, beta: usize) -> Result<(BinPoly, RPoly)> {
    if beta.is_multiple_of(2) {
        return Err(Error::NotOdd {
            what: "beta",
            value: beta,
        });
    }
    let b = b.reduce_constacyclic(beta, RElem::ONE)?;
    // (1+u)^k is 1 for even k and 1+u for odd k; (1+u)(p + uq) = p + u(p+q)
    let mut q = b.q().clone();
    for k in b.p().exponents().filter(|k| k % 2 == 1) {
        q.flip(k);
    }
    Ok((a.reduce_cyclic(alpha), RPoly::new(b.p().clone(), q)))
}

/// An element `(a(x), b(x))` of Z2[x]/(x^alpha - 1) x R[x]/(x^beta - 1 - u),
/// always held in reduced form. A zero length forces that component to 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmbientElement {
    first: BinPoly,
    second: RPoly,
    alpha: usize,
    beta: usize,
}

impl AmbientElement {
    pub fn new(first: BinPoly, second: RPoly, alpha: usize, beta: usize) -> Self {
        let first = first.reduce_cyclic(alpha);
        let second = if beta == 0 {
            RPoly::zero()
        } else {
            second.reduce(beta).expect("beta is positive")
        };
        AmbientElement {
            first,
            second,
            alpha,
            beta,
        }
    }

    pub fn zero(alpha: usize, beta: usize) -> Self {
        Self::new(BinPoly::zero(), RPoly::zero(), alpha, beta)
    }

    pub fn first(&self) -> &BinPoly {
        &self.first
    }

    pub fn second(&self) -> &RPoly {
        &self.second
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }

    fn check_lengths(&self, other: &AmbientElement) -> Result<()> {
        if (self.alpha, self.beta) != (other.alpha, other.beta) {
            return Err(Error::LengthMismatch {
                expected: (self.alpha, self.beta),
                found: (other.alpha, other.beta),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &AmbientElement) -> Result<AmbientElement> {
        self.check_lengths(other)?;
        Ok(AmbientElement {
            first: &self.first + &other.first,
            second: &self.second + &other.second,
            alpha: self.alpha,
            beta: self.beta,
        })
    }
}

impl fmt::Display for AmbientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// `d * (a, b) = (bar(d) a, d b)` with each component reduced.
pub fn star_mul(d: &RPoly, c: &AmbientElement) -> AmbientElement {
    AmbientElement::new(&d.bar() * c.first(), d * c.second(), c.alpha(), c.beta())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RPoly {
        s.parse().unwrap()
    }

    #[test]
    fn relem_table() {
        assert_eq!(RElem::U * RElem::U, RElem::ZERO);
        assert_eq!(RElem::ONE_PLUS_U * RElem::ONE_PLUS_U, RElem::ONE);
        for e in RElem::ALL {
            assert_eq!(RElem::ONE * e, e);
            assert_eq!(e * RElem::ONE, e);
        }
    }

    #[test]
    fn relem_ring_axioms_exhaustive() {
        for a in RElem::ALL {
            for b in RElem::ALL {
                assert_eq!(a * b, b * a);
                for c in RElem::ALL {
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn wraparound_constant() {
        for beta in 1..9 {
            let top = RPoly::monomial(RElem::ONE, beta - 1);
            assert_eq!(
                rpoly_mul_mod(&RPoly::x(), &top, beta).unwrap(),
                RPoly::monomial(RElem::ONE_PLUS_U, 0)
            );
        }
        let b = r("u+(1+u)*x+x^2");
        assert_eq!(rpoly_mul_mod(&RPoly::one(), &b, 3).unwrap(), b);
        assert_eq!(rpoly_mul_mod(&r("x^2+u*x"), &r("x^2"), 3).unwrap(), r("u+(1+u)*x"));
        assert_eq!(rpoly_mul_mod(&b, &b, 0), Err(Error::NonPositive("beta")));
    }

    #[test]
    fn multiword_reduction_agrees_with_word_path() {
        let big = RPoly::new(BinPoly::monomial(130) + BinPoly::one(), BinPoly::monomial(70));
        let beta = 5;
        let slow = {
            let len = 131;
            let mut coeffs: Vec<RElem> = (0..len).map(|k| big.coeff(k)).collect();
            for k in (beta..len).rev() {
                let t = coeffs[k];
                coeffs[k] = RElem::ZERO;
                coeffs[k - beta] = coeffs[k - beta] + t * RElem::ONE_PLUS_U;
            }
            coeffs.truncate(beta);
            RPoly::from_coeffs(&coeffs)
        };
        assert_eq!(big.reduce(beta).unwrap(), slow);
    }

    #[test]
    fn bar_examples() {
        assert_eq!(bar_reduce(&r("1+u*x+x^2")), "1+x^2".parse().unwrap());
        assert!(bar_reduce(&r("u*x+u*x^3")).is_zero());
        assert_eq!(bar_reduce(&r("(1+u)+(1+u)*x")), "1+x".parse().unwrap());
    }

    #[test]
    fn mu_examples() {
        let a: BinPoly = "1+x".parse().unwrap();
        let (fa, fb) = mu_map(&a, &RPoly::x(), 2, 3).unwrap();
        assert_eq!(fa, a);
        assert_eq!(fb, r("(1+u)*x"));
        assert_eq!(mu_map(&a, &r("x^2"), 2, 3).unwrap().1, r("x^2"));
        assert_eq!(mu_map(&a, &RPoly::one(), 2, 3).unwrap().1, RPoly::one());
        assert_eq!(
            mu_map(&a, &RPoly::one(), 2, 4),
            Err(Error::NotOdd { what: "beta", value: 4 })
        );
    }

    #[test]
    fn star_identity_and_annihilation() {
        let c = AmbientElement::new("1+x".parse().unwrap(), r("u+x^2"), 2, 3);
        assert_eq!(star_mul(&RPoly::one(), &c), c);
        let d = AmbientElement::new("x".parse().unwrap(), r("u*x"), 2, 3);
        assert!(star_mul(&RPoly::monomial(RElem::U, 0), &d).is_zero());
    }

    #[test]
    fn ambient_add_checks_lengths() {
        let a = AmbientElement::zero(2, 3);
        let b = AmbientElement::zero(3, 3);
        assert!(matches!(a.add(&b), Err(Error::LengthMismatch { .. })));
    }
}
