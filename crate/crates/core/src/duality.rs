//! The inner product, duals by exhaustive scan, dual generator formulas
//! and their comparison against recovered generators.

use serde::Serialize;

use crate::codeword::{closure_basis, enumerate_closure, validate_spec, Ambient, Case, CodeSet, CodeSpec, Codeword};
use crate::error::{Error, Result};
use crate::gf2::{divisors_of_xn_minus_1, factor, gcd_nz, usize_lcm, BinPoly};
use crate::linalg::Basis;
use crate::report::{Row, Status};
use crate::ring::{relem_mul, AmbientElement, RElem, RPoly};

/// `u * sum a_i d_i + sum b_j e_j`.
pub fn inner_product(c1: &Codeword, c2: &Codeword) -> Result<RElem> {
    if (c1.alpha(), c1.beta()) != (c2.alpha(), c2.beta()) {
        return Err(Error::LengthMismatch {
            expected: (c1.alpha(), c1.beta()),
            found: (c2.alpha(), c2.beta()),
        });
    }
    let mut binary = false;
    for i in 0..c1.alpha() {
        binary ^= c1.a_bit(i) & c2.a_bit(i);
    }
    let mut acc = if binary { RElem::U } else { RElem::ZERO };
    for j in 0..c1.beta() {
        acc = acc + relem_mul(c1.symbol(j), c2.symbol(j));
    }
    Ok(acc)
}

/// The inner product of two packed words.
pub fn key_inner_product(amb: &Ambient, k1: u64, k2: u64) -> RElem {
    RElem::new(amb.unit_form(k1, k2), amb.u_form(k1, k2))
}

/// Every ambient word orthogonal to the code, found by testing each of the
/// `2^(alpha + 2 beta)` words against a basis of the code.
pub fn dual_bruteforce(code: &CodeSet, budget: u64) -> Result<CodeSet> {
    let amb = code.ambient();
    amb.check_budget(budget)?;
    let (a, p, q) = (amb.a_mask(), amb.p_mask(), amb.q_mask());
    // per basis vector g: masks m with parity(v & m) = each component of <v, g>
    let tests: Vec<(u64, u64)> = code
        .basis()
        .vectors()
        .map(|g| ((g & a) | ((g & p) << 1) | ((g & q) >> 1), g & p))
        .collect();
    let keys = (0..1u64 << amb.bits())
        .filter(|&v| {
            tests
                .iter()
                .all(|&(mu, mp)| (v & mu).count_ones() & 1 == 0 && (v & mp).count_ones() & 1 == 0)
        })
        .collect();
    CodeSet::from_keys(amb, keys)
}

pub fn check_dual_constacyclic(code: &CodeSet, budget: u64) -> Result<bool> {
    Ok(dual_bruteforce(code, budget)?.is_constacyclic())
}

/// The case whose generator shape the dual takes.
pub fn dual_case(case: Case) -> Case {
    match case {
        Case::One => Case::Two,
        Case::Two => Case::One,
        Case::Three => Case::Three,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualDegrees {
    pub a_bar: i64,
    pub g_bar: i64,
    pub f_bar: Option<i64>,
}

fn deg(p: &BinPoly) -> i64 {
    p.deg0() as i64
}

fn require_valid(spec: &CodeSpec) -> Result<()> {
    match validate_spec(spec).first() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidSpec(v.to_string())),
    }
}

/// Predicted degrees of the dual generators, taken verbatim from the
/// closed forms (they can come out negative).
pub fn dual_degree_formulas(spec: &CodeSpec) -> Result<DualDegrees> {
    require_valid(spec)?;
    let alpha = spec.alpha as i64;
    let beta = spec.beta as i64;
    let h = spec.h()?;
    let lh = spec.l.mul_cyclic(&h, spec.alpha);
    let d_a = deg(&spec.a);
    let d_h = deg(&h);
    let d_al = deg(&gcd_nz(&spec.a, &spec.l));
    let d_alh = deg(&gcd_nz(&spec.a, &lh));
    Ok(match spec.case {
        Case::One => DualDegrees {
            a_bar: alpha - d_alh,
            g_bar: d_h + d_a - d_alh,
            f_bar: None,
        },
        Case::Two => DualDegrees {
            a_bar: alpha - d_al,
            g_bar: d_h - d_a + d_al,
            f_bar: None,
        },
        Case::Three => {
            let d_f = deg(spec.f.as_ref().expect("validated"));
            let d_g = deg(&spec.g);
            DualDegrees {
                a_bar: alpha - d_alh,
                g_bar: beta - d_f - d_a - d_al,
                f_bar: Some(d_h + 2 * d_a + d_f - d_g - 2 * d_al),
            }
        }
    })
}

fn quotient_by_reciprocal(n: usize, p: &BinPoly) -> Result<BinPoly> {
    let r = p.reciprocal()?;
    BinPoly::xn_minus_one(n)
        .exact_div(&r)
        .ok_or_else(|| Error::Degenerate(format!("{r} does not divide x^{n}-1")))
}

/// Generators of the dual of a separable code (`l = 0`).
///
/// In case 3 the product `f g` is written as a product of powers of the
/// irreducible factors of `x^beta - 1`, each with multiplicity at most
/// `2^(e+1)` where `2^e` is the multiplicity in `x^beta - 1`. The dual
/// second generator takes each factor with exponent `2^(e+1) - i`,
/// reciprocated, and is split back into `f | g | x^beta - 1`.
pub fn separable_dual(spec: &CodeSpec) -> Result<CodeSpec> {
    require_valid(spec)?;
    if !spec.is_separable() {
        return Err(Error::InvalidSpec("the separable dual needs l = 0".into()));
    }
    let a_bar = quotient_by_reciprocal(spec.alpha, &spec.a)?;
    let l = BinPoly::zero();
    Ok(match spec.case {
        Case::One | Case::Two => {
            let g_bar = quotient_by_reciprocal(spec.beta, &spec.g)?;
            CodeSpec::new(spec.alpha, spec.beta, dual_case(spec.case), a_bar, l, g_bar)
        }
        Case::Three => {
            let fg = spec.f.as_ref().expect("validated") * &spec.g;
            let n = factor(&BinPoly::xn_minus_one(spec.beta))?;
            let mut f_bar = BinPoly::one();
            let mut g_bar = BinPoly::one();
            for (p, mult) in n.factors() {
                let i = multiplicity_in(&fg, p);
                let k = 2 * mult - i;
                let r = p.reciprocal()?;
                let kg = k.min(*mult);
                g_bar = &g_bar * &r.pow(kg);
                f_bar = &f_bar * &r.pow(k - kg);
            }
            CodeSpec::case_three(spec.alpha, spec.beta, a_bar, l, f_bar, g_bar)
        }
    })
}

fn multiplicity_in(p: &BinPoly, f: &BinPoly) -> u32 {
    let mut m = 0;
    let mut cur = p.clone();
    while let Some(q) = cur.exact_div(f) {
        cur = q;
        m += 1;
    }
    m
}

fn theta_power(t: usize, step: usize) -> BinPoly {
    let exps: Vec<usize> = (0..t).map(|i| i * step).collect();
    BinPoly::from_exponents(&exps)
}

fn eta_term(c1: &BinPoly, c2: &BinPoly, n: usize, m: usize) -> BinPoly {
    if c1.is_zero() || c2.is_zero() {
        return BinPoly::zero();
    }
    let d = c2.deg0();
    let rec = c2.reciprocal().expect("nonzero");
    let t = c1
        .mul_cyclic(&theta_power(m / n, n), m)
        .mul_cyclic(&BinPoly::monomial(m - 1 - d), m);
    t.mul_cyclic(&rec, m)
}

/// The pairing into Z2[x]/(x^m - 1) with `m = 2 lcm(alpha, beta)`. A zero
/// second argument component contributes nothing.
pub fn eta_pair(c1: (&BinPoly, &BinPoly), c2: (&BinPoly, &BinPoly), alpha: usize, beta: usize) -> Result<BinPoly> {
    if alpha == 0 || beta == 0 {
        return Err(Error::NonPositive("alpha and beta"));
    }
    let m = 2 * usize_lcm(alpha, beta);
    Ok(&eta_term(c1.0, c2.0, alpha, m) + &eta_term(c1.1, c2.1, beta, m))
}

/// Dual generators predicted through the Gray image. `None` marks a
/// division that is not exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrayRouteDual {
    pub a_bar: Option<String>,
    /// Cases 1 and 2.
    pub g_bar: Option<String>,
    /// Case 3: one entry per factor power `f_j^{i_j}` of `f g`.
    pub f_bars: Vec<(String, u32, Option<String>)>,
    pub l_bar_family: String,
    pub inexact: Vec<String>,
}

pub fn gray_route_dual(spec: &CodeSpec) -> Result<GrayRouteDual> {
    require_valid(spec)?;
    let gcd_al = gcd_nz(&spec.a, &spec.l);
    let gcd_star = gcd_al.reciprocal()?;
    let a_star = spec.a.reciprocal()?;
    let n_alpha = BinPoly::xn_minus_one(spec.alpha);
    let n_beta = BinPoly::xn_minus_one(spec.beta);
    let mut inexact = Vec::new();
    let a_bar = n_alpha.exact_div(&gcd_star);
    if a_bar.is_none() {
        inexact.push(format!("(x^{}-1) / ({gcd_star})", spec.alpha));
    }
    let mut g_bar = None;
    let mut f_bars = Vec::new();
    let numerator = &n_beta * &gcd_star;
    match spec.case {
        Case::One | Case::Two => {
            // case 2's (x^{2 beta} - 1) / g*(x^beta - 1) is read as the
            // product g* (x^beta - 1), giving the case 1 expression again
            let den = &a_star * &spec.g.reciprocal()?;
            g_bar = numerator.exact_div(&den);
            if g_bar.is_none() {
                inexact.push(format!("({numerator}) / ({den})"));
            }
        }
        Case::Three => {
            let fg = spec.f.as_ref().expect("validated") * &spec.g;
            let numerator = &(&n_beta * &n_beta) * &gcd_star;
            if fg.degree().finite().unwrap_or(0) > 0 {
                for (p, i) in factor(&fg)?.factors() {
                    let den = &a_star * &p.reciprocal()?.pow(*i);
                    let q = numerator.exact_div(&den);
                    if q.is_none() {
                        inexact.push(format!("({numerator}) / ({den})"));
                    }
                    f_bars.push((p.to_string(), *i, q.map(|q| q.to_string())));
                }
            }
        }
    }
    let l_bar_family = match n_alpha.exact_div(&a_star) {
        Some(q) => format!("({q}) * lambda(x)"),
        None => "undefined".to_string(),
    };
    Ok(GrayRouteDual {
        a_bar: a_bar.map(|p| p.to_string()),
        g_bar: g_bar.map(|p| p.to_string()),
        f_bars,
        l_bar_family,
        inexact,
    })
}

/// Candidate second generators of the given shape, in search order.
fn second_generator_candidates(beta: usize, case: Case) -> Result<Vec<(BinPoly, Option<BinPoly>)>> {
    let mut divs = divisors_of_xn_minus_1(beta)?;
    divs.sort();
    Ok(match case {
        Case::One | Case::Two => divs.into_iter().map(|g| (g, None)).collect(),
        Case::Three => {
            // prefer the largest g, as the shape is stated with g maximal
            let mut by_g = divs.clone();
            by_g.sort_by(|x, y| y.degree().cmp(&x.degree()).then(x.cmp(y)));
            let mut out = Vec::new();
            for g in &by_g {
                for f in divs.iter().filter(|f| f.divides(g)) {
                    out.push((g.clone(), Some(f.clone())));
                }
            }
            out
        }
    })
}

fn second_generator_of(case: Case, g: &BinPoly, f: Option<&BinPoly>) -> RPoly {
    match case {
        Case::One => RPoly::from_binary(g.clone()),
        Case::Two => RPoly::u_times(g.clone()),
        Case::Three => RPoly::from_binary(f.expect("case 3 has f") * g),
    }
}

/// Generator of the cyclic code formed by the first blocks of the words
/// whose second block is zero; `None` if that set is not a cyclic code.
pub fn kernel_generator(code: &CodeSet) -> Result<Option<BinPoly>> {
    let amb = code.ambient();
    let alpha = amb.alpha();
    if alpha == 0 {
        return Err(Error::NonPositive("alpha"));
    }
    let bin = Ambient::binary(alpha)?;
    let kernel = Basis::from_vectors(
        code.keys()
            .iter()
            .copied()
            .filter(|&k| amb.y_part(k) == 0)
            .map(|k| amb.x_part(k)),
    );
    let mut a = BinPoly::xn_minus_one(alpha);
    for v in kernel.vectors() {
        a = gcd_nz(&a, &bin.codeword(v).a_poly());
    }
    Ok((alpha as i64 - deg(&a) == kernel.rank() as i64).then_some(a))
}

/// Finds generators `(a, 0), (l, s)` with `s` of the requested shape whose
/// closure is exactly `code`.
pub fn recover_spec(code: &CodeSet, case: Case) -> Result<Option<CodeSpec>> {
    let amb = code.ambient();
    let (alpha, beta) = (amb.alpha(), amb.beta());
    if alpha == 0 || beta == 0 {
        return Ok(None);
    }
    let bin = Ambient::binary(alpha)?;
    let Some(a) = kernel_generator(code)? else {
        return Ok(None);
    };
    // the second block: an ideal, matched against each candidate generator
    let y_amb = Ambient::new(0, beta)?;
    let y_basis = Basis::from_vectors(code.basis().vectors().map(|k| amb.y_part(k)));
    let target = y_basis.canonical();
    let mut found = None;
    for (g, f) in second_generator_candidates(beta, case)? {
        let s = second_generator_of(case, &g, f.as_ref());
        let key = y_amb.element_key(&AmbientElement::new(BinPoly::zero(), s, 0, beta))?;
        if closure_basis(y_amb, [key]).canonical() == target {
            found = Some((g, f, key));
            break;
        }
    }
    let Some((g, f, s_key)) = found else {
        return Ok(None);
    };
    // l: the first block of a word whose second block is s, reduced mod a
    let swapped = Basis::from_vectors(code.basis().vectors().map(|k| (amb.y_part(k) << alpha) | amb.x_part(k)));
    let r = swapped.reduce(s_key << alpha);
    if r >> alpha != 0 {
        return Ok(None);
    }
    let l = bin.codeword(r).a_poly().rem(&a)?;
    let spec = CodeSpec {
        alpha,
        beta,
        case,
        a,
        l,
        g,
        f,
    };
    if !validate_spec(&spec).is_empty() {
        return Ok(None);
    }
    let closure = CodeSet::from_basis(amb, closure_basis(amb, spec.generator_keys()?));
    Ok((&closure == code).then_some(spec))
}

#[derive(Clone, Debug, Serialize)]
pub struct DualReport {
    pub spec: String,
    pub dual_size_log2: u32,
    pub predicted_degrees: DualDegrees,
    /// The recovered dual spec in the stated shape, or a note that none exists.
    pub observed_generators: String,
    pub observed_degrees: Option<DualDegrees>,
    pub gray_route: GrayRouteDual,
    pub rows: Vec<Row>,
    #[serde(skip)]
    pub dual: CodeSet,
}

impl DualReport {
    /// Tri-state summary over the degree rows.
    pub fn degree_status(&self) -> Status {
        let rows: Vec<&Row> = self.rows.iter().filter(|r| r.check.starts_with("deg ")).collect();
        if rows.iter().any(|r| r.status == Status::NotApplicable) {
            Status::NotApplicable
        } else if rows.iter().all(|r| r.status == Status::Match) {
            Status::Match
        } else {
            Status::Mismatch
        }
    }
}

pub const NOT_FOUND: &str = "no spec of the stated form found";

/// Computes the dual by exhaustive scan and compares it with every dual
/// formula that applies to `spec`.
pub fn dual_report(spec: &CodeSpec, budget: u64) -> Result<DualReport> {
    require_valid(spec)?;
    let code = enumerate_closure(&spec.generators(), spec.alpha, spec.beta, budget)?;
    let dual = dual_bruteforce(&code, budget)?;
    let amb = code.ambient();
    let mut rows = Vec::new();
    rows.push(Row::compare(
        "log2 |C| + log2 |C^perp|",
        amb.bits(),
        code.dimension() + dual.dimension(),
    ));
    rows.push(Row::holds("C^perp is constacyclic", dual.is_constacyclic()));
    rows.push(Row::holds("(C^perp)^perp = C", dual_bruteforce(&dual, budget)? == code));

    let predicted = dual_degree_formulas(spec)?;
    let a_bar = kernel_generator(&dual)?;
    let recovered = recover_spec(&dual, dual_case(spec.case))?;
    let observed = recovered.as_ref().map(|r| DualDegrees {
        a_bar: deg(&r.a),
        g_bar: deg(&r.g),
        f_bar: r.f.as_ref().map(deg),
    });
    match &a_bar {
        Some(a) => rows.push(Row::compare("deg a_bar", predicted.a_bar, deg(a))),
        None => rows.push(Row::not_applicable("deg a_bar", "kernel is not a cyclic code")),
    }
    match &observed {
        Some(o) => {
            rows.push(Row::compare("deg g_bar", predicted.g_bar, o.g_bar));
            if let (Some(p), Some(q)) = (predicted.f_bar, o.f_bar) {
                rows.push(Row::compare("deg f_bar", p, q));
            }
        }
        None => {
            let unmatched = |check: &str, p: i64| Row {
                check: check.into(),
                predicted: p.to_string(),
                observed: NOT_FOUND.into(),
                status: Status::NotApplicable,
            };
            rows.push(unmatched("deg g_bar", predicted.g_bar));
            if let Some(p) = predicted.f_bar {
                rows.push(unmatched("deg f_bar", p));
            }
        }
    }

    if spec.is_separable() {
        let sd = separable_dual(spec)?;
        let sd_code = enumerate_closure(&sd.generators(), spec.alpha, spec.beta, budget)?;
        rows.push(Row::holds("separable dual generators span C^perp", sd_code == dual));
    } else {
        rows.push(Row::not_applicable("separable dual generators span C^perp", "l != 0"));
    }

    let gray_route = gray_route_dual(spec)?;
    match (&gray_route.a_bar, &a_bar) {
        (Some(p), Some(a)) => rows.push(Row::compare("gray-route a_bar", p, a.to_string())),
        (None, _) => rows.push(Row::compare("gray-route a_bar", "exact division", "inexact division")),
        (_, None) => rows.push(Row::not_applicable("gray-route a_bar", "kernel is not a cyclic code")),
    }
    if spec.case != Case::Three {
        match (&gray_route.g_bar, &recovered) {
            (Some(p), Some(r)) => rows.push(Row::compare("gray-route g_bar", p, r.g.to_string())),
            (None, _) => rows.push(Row::compare("gray-route g_bar", "exact division", "inexact division")),
            (_, None) => rows.push(Row::not_applicable("gray-route g_bar", NOT_FOUND)),
        }
    } else {
        for (p, i, q) in &gray_route.f_bars {
            let obs = q.clone().unwrap_or_else(|| "inexact division".into());
            rows.push(Row::info(format!("gray-route f_bar for ({p})^{i}"), obs));
        }
    }
    rows.push(Row::info("gray-route l_bar family", &gray_route.l_bar_family));

    Ok(DualReport {
        spec: spec.to_string(),
        dual_size_log2: dual.dimension(),
        predicted_degrees: predicted,
        observed_generators: recovered.map_or(NOT_FOUND.to_string(), |r| r.to_string()),
        observed_degrees: observed,
        gray_route,
        rows,
        dual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codeword::{enumerate_specs, DEFAULT_BUDGET};
    use proptest::prelude::*;
    use RElem as E;

    fn bp(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    fn closure(spec: &CodeSpec) -> CodeSet {
        enumerate_closure(&spec.generators(), spec.alpha, spec.beta, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let w = |a: bool, b: RElem| Codeword::new(&[a], &[b]).unwrap();
        assert_eq!(inner_product(&w(true, E::ZERO), &w(true, E::ZERO)).unwrap(), E::U);
        assert_eq!(inner_product(&w(true, E::ONE), &w(true, E::U)).unwrap(), E::ZERO);
        assert_eq!(inner_product(&Codeword::zero(1, 1), &w(true, E::ONE)).unwrap(), E::ZERO);
        assert!(inner_product(&Codeword::zero(1, 1), &Codeword::zero(1, 2)).is_err());
    }

    #[test]
    fn duals_of_trivial_codes() {
        let amb = Ambient::new(2, 2).unwrap();
        let full = CodeSet::full(amb, DEFAULT_BUDGET).unwrap();
        let zero = CodeSet::zero(amb);
        assert_eq!(dual_bruteforce(&zero, DEFAULT_BUDGET).unwrap(), full);
        assert_eq!(dual_bruteforce(&full, DEFAULT_BUDGET).unwrap(), zero);
        assert!(check_dual_constacyclic(&zero, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn dual_of_the_case_one_example() {
        let spec = CodeSpec::new(2, 3, Case::One, bp("1+x^2"), bp("1+x"), bp("1+x"));
        let d = dual_bruteforce(&closure(&spec), DEFAULT_BUDGET).unwrap();
        assert_eq!(d.len(), 8);
        let p = dual_degree_formulas(&spec).unwrap();
        assert_eq!((p.a_bar, p.g_bar), (1, 3));
    }

    #[test]
    fn separable_dual_examples() {
        let spec = CodeSpec::new(2, 3, Case::One, bp("1+x"), BinPoly::zero(), bp("1+x"));
        let d = separable_dual(&spec).unwrap();
        assert_eq!(
            d,
            CodeSpec::new(2, 3, Case::Two, bp("1+x"), BinPoly::zero(), bp("1+x+x^2"))
        );
        assert_eq!(closure(&d), dual_bruteforce(&closure(&spec), DEFAULT_BUDGET).unwrap());
        let c3 = CodeSpec::case_three(1, 2, bp("1+x"), BinPoly::zero(), bp("1"), bp("1+x^2"));
        let d3 = separable_dual(&c3).unwrap();
        assert_eq!(d3.f.as_ref().unwrap() * &d3.g, bp("1+x^2"));
        assert_eq!(closure(&d3), dual_bruteforce(&closure(&c3), DEFAULT_BUDGET).unwrap());
        let nonsep = CodeSpec::new(2, 3, Case::One, bp("1+x^2"), bp("1+x"), bp("1+x"));
        assert!(separable_dual(&nonsep).is_err());
    }

    #[test]
    fn duality_identities_hold_on_small_sweeps() {
        for (alpha, beta) in [(1, 1), (2, 3), (3, 2), (2, 2)] {
            for spec in enumerate_specs(alpha, beta).unwrap() {
                let c = closure(&spec);
                let d = dual_bruteforce(&c, DEFAULT_BUDGET).unwrap();
                assert_eq!(c.dimension() + d.dimension(), (alpha + 2 * beta) as u32);
                assert!(d.is_constacyclic(), "{spec}");
                assert_eq!(dual_bruteforce(&d, DEFAULT_BUDGET).unwrap(), c);
                if spec.is_separable() {
                    assert_eq!(closure(&separable_dual(&spec).unwrap()), d, "{spec}");
                }
                let r = recover_spec(&d, Case::Three).unwrap();
                assert!(r.is_some(), "{spec}");
            }
        }
    }

    #[test]
    fn eta_examples() {
        let x1 = bp("1+x");
        let z = BinPoly::zero();
        assert!(eta_pair((&x1, &x1), (&z, &z), 2, 3).unwrap().is_zero());
        assert!(eta_pair((&x1, &z), (&x1, &z), 2, 1).unwrap().is_zero());
        assert!(x1.mul_cyclic(&x1.reciprocal().unwrap(), 2).is_zero());
    }

    #[test]
    fn gray_route_examples() {
        let sep = CodeSpec::new(2, 3, Case::One, bp("1+x"), BinPoly::zero(), bp("1"));
        let r = gray_route_dual(&sep).unwrap();
        assert_eq!(r.a_bar.as_deref(), Some("1+x"));
        let ex = CodeSpec::new(2, 3, Case::One, bp("1+x^2"), bp("1+x"), bp("1+x"));
        assert_eq!(gray_route_dual(&ex).unwrap().a_bar.as_deref(), Some("1+x"));
    }

    proptest! {
        #[test]
        fn key_forms_match_the_inner_product(alpha in 0usize..6, beta in 1usize..6, r1 in any::<u64>(), r2 in any::<u64>()) {
            let amb = Ambient::new(alpha, beta).unwrap();
            let mask = (1u64 << amb.bits()) - 1;
            let (k1, k2) = (r1 & mask, r2 & mask);
            let ip = inner_product(&amb.codeword(k1), &amb.codeword(k2)).unwrap();
            prop_assert_eq!(key_inner_product(&amb, k1, k2), ip);
        }

        #[test]
        fn dual_is_shift_invariant(alpha in 1usize..5, beta in 1usize..5, r in any::<u64>()) {
            let amb = Ambient::new(alpha, beta).unwrap();
            let c = closure_basis(amb, [r & ((1u64 << amb.bits()) - 1)]);
            let d = dual_bruteforce(&CodeSet::from_basis(amb, c), DEFAULT_BUDGET).unwrap();
            for &v in d.keys() {
                prop_assert!(d.contains_key(amb.shift_key(v)));
            }
        }

        #[test]
        fn eta_is_bilinear(alpha in 1usize..6, beta in 1usize..6, w in proptest::collection::vec(any::<u64>(), 6)) {
            let pa = |x: u64| BinPoly::from_word(x).reduce_cyclic(alpha);
            let pb = |x: u64| BinPoly::from_word(x).reduce_cyclic(beta);
            let (c, c2, d) = ((pa(w[0]), pb(w[1])), (pa(w[2]), pb(w[3])), (pa(w[4]), pb(w[5])));
            let sum = (&c.0 + &c2.0, &c.1 + &c2.1);
            let lhs = eta_pair((&sum.0, &sum.1), (&d.0, &d.1), alpha, beta).unwrap();
            let rhs = &eta_pair((&c.0, &c.1), (&d.0, &d.1), alpha, beta).unwrap()
                + &eta_pair((&c2.0, &c2.1), (&d.0, &d.1), alpha, beta).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eta_zero_with_a_zero_component(alpha in 1usize..6, beta in 1usize..6, w in proptest::collection::vec(any::<u64>(), 2)) {
            let c11 = BinPoly::from_word(w[0]).reduce_cyclic(alpha);
            let c21 = BinPoly::from_word(w[1]).reduce_cyclic(alpha);
            let z = BinPoly::zero();
            let e = eta_pair((&c11, &z), (&c21, &z), alpha, beta).unwrap();
            if e.is_zero() && !c21.is_zero() {
                prop_assert!(c11.mul_cyclic(&c21.reciprocal().unwrap(), alpha).is_zero());
            }
        }
    }
}
