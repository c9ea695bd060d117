//! Punctured codes, the subcode C_b, Type parameters and the code census.

use std::collections::HashSet;

use serde::Serialize;

use crate::codeword::{closure_basis, validate_spec, Ambient, Case, CodeSet, CodeSpec};
use crate::error::{Error, Result};
use crate::gf2::{cyclotomic_class_count, gcd_nz, BinPoly};
use crate::linalg::Basis;

/// Type parameters `(k0, k1, k2)` with the splits `k0 = k0p + k0pp` and
/// `k2 = k2p + k2pp`. Signed, because the closed-form splits can go
/// negative on admissible inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub k0: i64,
    pub k1: i64,
    pub k2: i64,
    pub k0p: i64,
    pub k0pp: i64,
    pub k2p: i64,
    pub k2pp: i64,
}

impl CodeType {
    /// `log2 |C| = k1 + 2 k2`.
    pub fn size_log2(&self) -> i64 {
        self.k1 + 2 * self.k2
    }
}

/// The first blocks of all words, as a binary code of length alpha.
pub fn puncture_x(code: &CodeSet) -> Result<CodeSet> {
    let amb = code.ambient();
    if amb.alpha() == 0 {
        return Err(Error::NonPositive("alpha"));
    }
    let target = Ambient::binary(amb.alpha())?;
    let basis = Basis::from_vectors(code.basis().vectors().map(|k| amb.x_part(k)));
    Ok(CodeSet::from_basis(target, basis))
}

/// The second blocks of all words, as a code over R of length beta.
pub fn puncture_y(code: &CodeSet) -> Result<CodeSet> {
    let amb = code.ambient();
    if amb.beta() == 0 {
        return Err(Error::NonPositive("beta"));
    }
    let target = Ambient::new(0, amb.beta())?;
    let basis = Basis::from_vectors(code.basis().vectors().map(|k| amb.y_part(k)));
    Ok(CodeSet::from_basis(target, basis))
}

/// Words whose second block lies in `{0, u}^beta`.
pub fn subcode_cb(code: &CodeSet) -> Result<CodeSet> {
    let p = code.ambient().p_mask();
    code.filter(|k| k & p == 0)
}

/// Words whose second block is zero.
fn x_only(code: &CodeSet) -> Result<CodeSet> {
    let amb = code.ambient();
    code.filter(|k| amb.y_part(k) == 0)
}

/// Words whose first block is zero.
fn y_only(code: &CodeSet) -> Result<CodeSet> {
    let amb = code.ambient();
    code.filter(|k| amb.x_part(k) == 0)
}

fn deg(p: &BinPoly) -> i64 {
    p.deg0() as i64
}

/// Type parameters predicted from the generator polynomials.
pub fn type_from_formulas(spec: &CodeSpec) -> Result<CodeType> {
    let v = validate_spec(spec);
    if !v.is_empty() {
        return Err(Error::InvalidSpec(v[0].to_string()));
    }
    let alpha = spec.alpha as i64;
    let beta = spec.beta as i64;
    let h = spec.h()?;
    let lh = spec.l.mul_cyclic(&h, spec.alpha);
    let d_a = deg(&spec.a);
    let d_g = deg(&spec.g);
    let d_al = deg(&gcd_nz(&spec.a, &spec.l));
    let d_alh = deg(&gcd_nz(&spec.a, &lh));
    let t = match spec.case {
        Case::One => {
            let k2pp = d_alh - d_al;
            CodeType {
                alpha: spec.alpha,
                beta: spec.beta,
                k0: alpha - d_alh,
                k1: alpha + d_g - d_a,
                k2: beta - d_g,
                k0p: alpha - d_a,
                k0pp: d_a - d_alh,
                k2p: beta - d_g - k2pp,
                k2pp,
            }
        }
        Case::Two => CodeType {
            alpha: spec.alpha,
            beta: spec.beta,
            k0: alpha - d_al,
            k1: alpha + beta - d_a - d_g,
            k2: 0,
            k0p: alpha - d_a,
            k0pp: d_a - d_al,
            k2p: 0,
            k2pp: 0,
        },
        Case::Three => {
            let d_f = deg(spec.f.as_ref().expect("validated case 3 spec has f"));
            let k2pp = d_al - d_alh;
            CodeType {
                alpha: spec.alpha,
                beta: spec.beta,
                k0: alpha - d_al,
                k1: alpha + d_g - d_a - d_f,
                k2: beta - d_g,
                k0p: alpha - d_a,
                k0pp: d_a - d_al,
                k2p: beta - d_g - k2pp,
                k2pp,
            }
        }
    };
    Ok(t)
}

/// Type parameters measured on an explicit code, with `k0 = dim (C_b)_X`.
pub fn type_from_enumeration(code: &CodeSet) -> Result<CodeType> {
    let amb = code.ambient();
    let cb = subcode_cb(code)?;
    let n = code.dimension() as i64;
    let k2 = n - cb.dimension() as i64;
    let k1 = n - 2 * k2;
    let k0 = if amb.alpha() == 0 {
        0
    } else {
        puncture_x(&cb)?.dimension() as i64
    };
    let k0p = x_only(code)?.dimension() as i64;
    let yo = y_only(code)?;
    let k2p = yo.dimension() as i64 - subcode_cb(&yo)?.dimension() as i64;
    Ok(CodeType {
        alpha: amb.alpha(),
        beta: amb.beta(),
        k0,
        k1,
        k2,
        k0p,
        k0pp: k0 - k0p,
        k2p,
        k2pp: k2 - k2p,
    })
}

/// `dim C_b`, the looser reading of `k0`.
pub fn cb_dimension(code: &CodeSet) -> Result<u32> {
    Ok(subcode_cb(code)?.dimension())
}

/// `2^{C2(alpha)} * 3^{C2(beta)}` for odd lengths.
pub fn count_codes_formula(alpha: usize, beta: usize) -> Result<u64> {
    for (what, value) in [("alpha", alpha), ("beta", beta)] {
        if value % 2 == 0 {
            return Err(Error::NotOdd { what, value });
        }
    }
    let ca = cyclotomic_class_count(alpha)? as u32;
    let cb = cyclotomic_class_count(beta)? as u32;
    Ok(2u64.pow(ca) * 3u64.pow(cb))
}

/// Default cap on the ambient size for the census.
pub const DEFAULT_CENSUS_BUDGET: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub alpha: usize,
    pub beta: usize,
    /// All R[x]-submodules.
    pub total: u64,
    /// Submodules equal to the product of their two projections.
    pub separable: u64,
}

/// Counts every R[x]-submodule of Z2^alpha x R^beta by walking the
/// submodule lattice upward from `{0}`: each module is extended by the
/// closure of one extra word, and modules are deduplicated by their
/// reduced echelon form.
pub fn count_codes_census(alpha: usize, beta: usize, budget: u64) -> Result<Census> {
    let amb = Ambient::new(alpha, beta)?;
    amb.check_budget(budget)?;
    let size = 1u64 << amb.bits();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut frontier = vec![Basis::new()];
    seen.insert(Vec::new());
    let mut separable = 0u64;
    while let Some(m) = frontier.pop() {
        if is_separable(&amb, &m) {
            separable += 1;
        }
        for v in 1..size {
            if m.contains(v) {
                continue;
            }
            let next = closure_basis(amb, m.vectors().chain(std::iter::once(v)));
            if seen.insert(next.canonical()) {
                frontier.push(next);
            }
        }
    }
    Ok(Census {
        alpha,
        beta,
        total: seen.len() as u64,
        separable,
    })
}

fn is_separable(amb: &Ambient, m: &Basis) -> bool {
    let xs = Basis::from_vectors(m.vectors().map(|k| amb.x_part(k)));
    let ys = Basis::from_vectors(m.vectors().map(|k| amb.y_part(k)));
    xs.rank() + ys.rank() == m.rank()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub alpha: usize,
    pub beta: usize,
    pub formula: Option<u64>,
    pub census: u64,
    pub separable: u64,
    pub matches: Option<bool>,
}

pub fn census_row(alpha: usize, beta: usize, budget: u64) -> Result<CensusRow> {
    let c = count_codes_census(alpha, beta, budget)?;
    let formula = count_codes_formula(alpha, beta).ok();
    Ok(CensusRow {
        alpha,
        beta,
        formula,
        census: c.total,
        separable: c.separable,
        matches: formula.map(|f| f == c.total),
    })
}

/// Tab-separated census table with a header line.
pub fn census_table(rows: &[CensusRow]) -> String {
    let mut out = String::from("alpha\tbeta\tformula\tcensus\tseparable\tmatch\n");
    for r in rows {
        let formula = r.formula.map_or("-".to_string(), |f| f.to_string());
        let m = match r.matches {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a",
        };
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            r.alpha, r.beta, formula, r.census, r.separable, m
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codeword::{enumerate_closure, enumerate_specs, DEFAULT_BUDGET};
    use crate::ring::{AmbientElement, RPoly};

    fn bp(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    fn closure(spec: &CodeSpec) -> CodeSet {
        enumerate_closure(&spec.generators(), spec.alpha, spec.beta, DEFAULT_BUDGET).unwrap()
    }

    fn example() -> CodeSpec {
        CodeSpec::new(2, 3, Case::One, bp("1+x^2"), bp("1+x"), bp("1+x"))
    }

    #[test]
    fn formula_type_of_the_case_one_example() {
        let t = type_from_formulas(&example()).unwrap();
        assert_eq!((t.k0, t.k1, t.k2), (1, 1, 2));
        assert_eq!(t, type_from_enumeration(&closure(&example())).unwrap());
    }

    #[test]
    fn extreme_codes() {
        let amb = Ambient::new(2, 3).unwrap();
        let zero = type_from_enumeration(&CodeSet::zero(amb)).unwrap();
        assert_eq!((zero.k0, zero.k1, zero.k2, zero.k0p, zero.k2p), (0, 0, 0, 0, 0));
        let full = CodeSet::full(amb, DEFAULT_BUDGET).unwrap();
        let t = type_from_enumeration(&full).unwrap();
        assert_eq!((t.k0, t.k1, t.k2), (2, 2, 3));
        assert_eq!(cb_dimension(&full).unwrap(), 5);
        assert_eq!(subcode_cb(&full).unwrap().len(), 4 * 8);
        assert_eq!(puncture_x(&CodeSet::zero(amb)).unwrap().len(), 1);
        assert!(puncture_x(&CodeSet::zero(Ambient::new(0, 2).unwrap())).is_err());
    }

    #[test]
    fn punctured_codes_match_generators() {
        for spec in enumerate_specs(3, 3).unwrap() {
            let c = closure(&spec);
            let cx = puncture_x(&c).unwrap();
            let gx = crate::gf2::gcd_nz(&spec.a, &spec.l);
            let bin = enumerate_closure(&[AmbientElement::new(gx, RPoly::zero(), 3, 0)], 3, 0, DEFAULT_BUDGET).unwrap();
            assert_eq!(cx, bin, "{spec}");
            let cy = puncture_y(&c).unwrap();
            let gy = enumerate_closure(
                &[AmbientElement::new(BinPoly::zero(), spec.second_generator(), 0, 3)],
                0,
                3,
                DEFAULT_BUDGET,
            )
            .unwrap();
            assert_eq!(cy, gy, "{spec}");
            if spec.case == Case::Two {
                assert_eq!(subcode_cb(&c).unwrap(), c);
            }
        }
    }

    #[test]
    fn cb_of_case_one_matches_three_generators() {
        for spec in enumerate_specs(3, 3).unwrap() {
            if spec.case != Case::One {
                continue;
            }
            let h = spec.h().unwrap();
            let gens = [
                AmbientElement::new(spec.a.clone(), RPoly::zero(), 3, 3),
                AmbientElement::new(spec.l.mul_cyclic(&h, 3), RPoly::u_times(BinPoly::one()), 3, 3),
                AmbientElement::new(BinPoly::zero(), RPoly::u_times(spec.g.clone()), 3, 3),
            ];
            let expected = enumerate_closure(&gens, 3, 3, DEFAULT_BUDGET).unwrap();
            assert_eq!(subcode_cb(&closure(&spec)).unwrap(), expected, "{spec}");
        }
    }

    #[test]
    fn separable_types_match() {
        for (alpha, beta) in [(1, 3), (3, 3), (2, 3), (3, 1)] {
            for spec in enumerate_specs(alpha, beta).unwrap() {
                let f = type_from_formulas(&spec).unwrap();
                let e = type_from_enumeration(&closure(&spec)).unwrap();
                assert_eq!((f.k1, f.k2), (e.k1, e.k2), "{spec}");
                if spec.is_separable() {
                    assert_eq!(f, e, "{spec}");
                }
            }
        }
    }

    #[test]
    fn formula_counts() {
        assert_eq!(count_codes_formula(1, 1).unwrap(), 6);
        assert_eq!(count_codes_formula(7, 7).unwrap(), 216);
        assert_eq!(count_codes_formula(1, 3).unwrap(), 18);
        assert!(count_codes_formula(2, 3).is_err());
    }

    #[test]
    fn census_of_small_ambients() {
        let c = count_codes_census(1, 1, DEFAULT_CENSUS_BUDGET).unwrap();
        assert_eq!(c.separable, 6);
        // the diagonal module {(0,0),(1,u)} is one of the extra ones
        assert!(c.total > 6);
        assert_eq!(count_codes_census(1, 0, DEFAULT_CENSUS_BUDGET).unwrap().total, 2);
        assert!(count_codes_census(8, 8, DEFAULT_CENSUS_BUDGET).is_err());
    }
}
