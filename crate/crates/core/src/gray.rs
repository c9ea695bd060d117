//! The Gray map to binary words, Lee weights and binary-image analysis.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::codeword::{validate_spec, Ambient, Case, CodeSet, CodeSpec, Codeword};
use crate::duality::dual_bruteforce;
use crate::error::{Error, Result};
use crate::linalg::Basis;
use crate::ring::RElem;

/// Coordinate order of a Gray image.
///
/// `Interleaved` keeps each symbol's pair together; `Block` writes the
/// binary block, then every first component, then every second component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    Interleaved,
    Block,
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layout::Interleaved => "interleaved",
            Layout::Block => "block",
        })
    }
}

impl FromStr for Layout {
    type Err = Error;

    fn from_str(s: &str) -> Result<Layout> {
        match s {
            "interleaved" => Ok(Layout::Interleaved),
            "block" => Ok(Layout::Block),
            other => Err(Error::Degenerate(format!(
                "unknown layout '{other}' (expected interleaved or block)"
            ))),
        }
    }
}

/// A binary word of length `n <= 64`, coordinate 0 in the most significant
/// of the `n` low bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    n: usize,
    bits: u64,
    layout: Layout,
}

impl BinaryWord {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn bit(&self, i: usize) -> bool {
        (self.bits >> (self.n - 1 - i)) & 1 == 1
    }

    pub fn to_vec(&self) -> Vec<bool> {
        (0..self.n).map(|i| self.bit(i)).collect()
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn hamming_distance(&self, other: &BinaryWord) -> u32 {
        (self.bits ^ other.bits).count_ones()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// `p + u q -> (q, p + q)`.
pub fn gray_symbol(e: RElem) -> (bool, bool) {
    (e.q(), e.p() ^ e.q())
}

/// Gray image of a packed word, as a key of `Ambient::binary(alpha + 2 beta)`.
pub fn gray_key(amb: &Ambient, key: u64, layout: Layout) -> u64 {
    let inter = key ^ ((key & amb.q_mask()) >> 1);
    match layout {
        Layout::Interleaved => inter,
        Layout::Block => {
            let beta = amb.beta();
            let first = amb.q_word(inter);
            let second = amb.p_word(inter);
            (amb.x_part(inter) << (2 * beta)) | (first << beta) | second
        }
    }
}

pub fn gray_map(c: &Codeword, layout: Layout) -> BinaryWord {
    let amb = Ambient::new(c.alpha(), c.beta()).expect("codeword lengths fit a key");
    BinaryWord {
        n: amb.bits(),
        bits: gray_key(&amb, amb.key(c), layout),
        layout,
    }
}

/// Symbol weights 0, 1, 2, 1 for 0, 1, u, 1+u plus the Hamming weight of
/// the binary block.
pub fn lee_weight(c: &Codeword) -> u32 {
    let a = (0..c.alpha()).filter(|&i| c.a_bit(i)).count() as u32;
    let b: u32 = (0..c.beta())
        .map(|j| match c.symbol(j) {
            RElem::ZERO => 0,
            RElem::U => 2,
            _ => 1,
        })
        .sum();
    a + b
}

pub fn lee_distance(c1: &Codeword, c2: &Codeword) -> Result<u32> {
    Ok(lee_weight(&c1.add(c2)?))
}

/// Lee weight of a packed word.
pub fn key_lee_weight(amb: &Ambient, key: u64) -> u32 {
    let p = key & amb.p_mask();
    let q = (key & amb.q_mask()) >> 1;
    (key & amb.a_mask()).count_ones() + (p | q).count_ones() + (q & !p).count_ones()
}

/// The image of every codeword, checked for linearity.
pub fn gray_image(code: &CodeSet, layout: Layout) -> Result<CodeSet> {
    let amb = code.ambient();
    let keys = code.keys().iter().map(|&k| gray_key(&amb, k, layout)).collect();
    CodeSet::from_keys(Ambient::binary(amb.bits())?, keys)
}

/// Minimum nonzero Lee weight. On a binary code this is the minimum
/// Hamming distance.
pub fn min_distance(code: &CodeSet) -> Result<u32> {
    let amb = code.ambient();
    code.keys()
        .iter()
        .filter(|&&k| k != 0)
        .map(|&k| key_lee_weight(&amb, k))
        .min()
        .ok_or_else(|| Error::Degenerate("minimum distance of a code with one word".into()))
}

/// Minimum nonzero Lee weight over the span of `basis`, visiting the span
/// in Gray-code order without materializing it. `None` for the zero code.
pub fn min_distance_of_span(amb: &Ambient, basis: &Basis) -> Option<u32> {
    let vs: Vec<u64> = basis.vectors().collect();
    let mut cur = 0u64;
    let mut best: Option<u32> = None;
    for i in 1u64..(1u64 << vs.len()) {
        cur ^= vs[i.trailing_zeros() as usize];
        let w = key_lee_weight(amb, cur);
        best = Some(best.map_or(w, |b| b.min(w)));
    }
    best
}

fn rotate_right(x: u64, n: usize) -> u64 {
    if n <= 1 {
        return x;
    }
    let mask = (1u64 << n) - 1;
    ((x >> 1) | ((x & 1) << (n - 1))) & mask
}

/// Simultaneous cyclic shift of the first `alpha` and the last `two_beta`
/// coordinates.
pub fn double_shift(key: u64, alpha: usize, two_beta: usize) -> u64 {
    let tail_mask = if two_beta == 0 { 0 } else { (1u64 << two_beta) - 1 };
    let head = rotate_right(key >> two_beta, alpha);
    let tail = rotate_right(key & tail_mask, two_beta);
    (head << two_beta) | tail
}

pub fn is_double_cyclic(bcode: &CodeSet, alpha: usize, two_beta: usize) -> Result<bool> {
    let amb = bcode.ambient();
    if amb.beta() != 0 || amb.alpha() != alpha + two_beta {
        return Err(Error::LengthMismatch {
            expected: (alpha + two_beta, 0),
            found: (amb.alpha(), amb.beta()),
        });
    }
    let b = bcode.basis();
    Ok(b.vectors().all(|v| b.contains(double_shift(v, alpha, two_beta))))
}

/// The dual of a binary code under the standard dot product, by scanning
/// all `2^n` words.
pub fn binary_dual(bcode: &CodeSet, budget: u64) -> Result<CodeSet> {
    let amb = bcode.ambient();
    if amb.beta() != 0 {
        return Err(Error::Degenerate("binary_dual expects a binary code".into()));
    }
    amb.check_budget(budget)?;
    let gens: Vec<u64> = bcode.basis().vectors().collect();
    let keys = (0..1u64 << amb.bits())
        .filter(|&w| gens.iter().all(|&g| (w & g).count_ones() & 1 == 0))
        .collect();
    CodeSet::from_keys(amb, keys)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfDualTransfer {
    pub layout: Layout,
    /// `phi(C^perp) = phi(C)^perp`.
    pub dual_commutes: bool,
    pub code_self_dual: bool,
    /// Set when the code is self-dual.
    pub image_self_dual: Option<bool>,
}

/// Compares the image of the dual with the dual of the image.
pub fn self_dual_transfer(code: &CodeSet, layout: Layout, budget: u64) -> Result<SelfDualTransfer> {
    let dual = dual_bruteforce(code, budget)?;
    let image = gray_image(code, layout)?;
    let image_dual = binary_dual(&image, budget)?;
    let dual_image = gray_image(&dual, layout)?;
    let code_self_dual = &dual == code;
    Ok(SelfDualTransfer {
        layout,
        dual_commutes: dual_image == image_dual,
        code_self_dual,
        image_self_dual: code_self_dual.then(|| image_dual == image),
    })
}

/// Predicted dimension of the Gray image. The second case reads
/// `deg g(x^beta - 1)` as `deg g + beta`.
pub fn gray_dimension_formula(spec: &CodeSpec) -> Result<i64> {
    let v = validate_spec(spec);
    if !v.is_empty() {
        return Err(Error::InvalidSpec(v[0].to_string()));
    }
    let n = (spec.alpha + 2 * spec.beta) as i64;
    let da = spec.a.deg0() as i64;
    let dg = spec.g.deg0() as i64;
    Ok(match spec.case {
        Case::One => n - da - dg,
        Case::Two => n - da - (dg + spec.beta as i64),
        Case::Three => {
            let df = spec.f.as_ref().map_or(0, |f| f.deg0() as i64);
            n - da - dg - df
        }
    })
}

/// Exports a binary code: a header line, then each word as hex with
/// coordinate 0 in the most significant bit, in ascending order.
pub fn export_binary_code(bcode: &CodeSet, layout: Layout) -> String {
    let n = bcode.ambient().bits();
    let d = min_distance(bcode).unwrap_or(0);
    let digits = n.div_ceil(4).max(1);
    let pad = 4 * digits - n;
    let mut out = format!("n={} k={} d={} layout={}\n", n, bcode.dimension(), d, layout);
    for &k in bcode.keys() {
        out.push_str(&format!("{:0digits$x}\n", (k as u128) << pad, digits = digits));
    }
    out
}
