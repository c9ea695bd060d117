//! Three worked example codes with claimed Gray-image parameters, each
//! built under every generator reading its notation allows.

use serde::Serialize;

use crate::codeword::{closure_basis, validate_spec, Ambient, Case, CodeSpec};
use crate::error::Result;
use crate::gf2::BinPoly;
use crate::gray::min_distance_of_span;
use crate::ring::{AmbientElement, RPoly};

/// One way of reading an example's generator notation.
#[derive(Clone, Debug)]
pub struct Reading {
    pub name: &'static str,
    pub generators: Vec<AmbientElement>,
    /// Present when the reading is a valid generator pair.
    pub spec: Option<CodeSpec>,
}

#[derive(Clone, Debug)]
pub struct Example {
    pub alpha: usize,
    pub beta: usize,
    pub notation: &'static str,
    pub claimed: [u32; 3],
    pub readings: Vec<Reading>,
}

fn bp(s: &str) -> BinPoly {
    s.parse().expect("literal polynomial")
}

fn elem(first: &str, second: RPoly, alpha: usize, beta: usize) -> AmbientElement {
    AmbientElement::new(bp(first), second, alpha, beta)
}

fn from_spec(name: &'static str, spec: CodeSpec) -> Reading {
    Reading {
        name,
        generators: spec.generators(),
        spec: Some(spec),
    }
}

/// The examples over (2,3), (7,7) and (2,6).
pub fn worked_examples() -> Vec<Example> {
    (1..=3).map(example).collect()
}

fn example(index: u8) -> Example {
    let zero = BinPoly::zero;
    match index {
        1 => {
            let (al, be) = (2, 3);
            Example {
                alpha: al,
                beta: be,
                notation: "(1+x, 1+x)",
                claimed: [8, 6, 2],
                readings: vec![
                    Reading {
                        name: "single generator",
                        generators: vec![elem("1+x", RPoly::from_binary(bp("1+x")), al, be)],
                        spec: None,
                    },
                    from_spec(
                        "case 1 with a = x^2+1, l = 1+x, g = 1+x",
                        CodeSpec::new(al, be, Case::One, bp("1+x^2"), bp("1+x"), bp("1+x")),
                    ),
                    from_spec(
                        "separable case 1 with a = 1+x, g = 1+x",
                        CodeSpec::new(al, be, Case::One, bp("1+x"), zero(), bp("1+x")),
                    ),
                ],
            }
        }
        2 => {
            let (al, be) = (7, 7);
            let a = "1+x+x^2+x^4";
            Example {
                alpha: al,
                beta: be,
                notation: "(1+x+x^2+x^4, u(1+x))",
                claimed: [21, 6, 8],
                readings: vec![
                    Reading {
                        name: "single generator",
                        generators: vec![elem(a, RPoly::u_times(bp("1+x")), al, be)],
                        spec: None,
                    },
                    from_spec(
                        "separable case 2 with a = 1+x+x^2+x^4, g = 1+x",
                        CodeSpec::new(al, be, Case::Two, bp(a), zero(), bp("1+x")),
                    ),
                    from_spec(
                        "case 2 with a = x^7+1, l = 1+x+x^2+x^4, g = 1+x",
                        CodeSpec::new(al, be, Case::Two, bp("1+x^7"), bp(a), bp("1+x")),
                    ),
                ],
            }
        }
        3 => {
            let (al, be) = (2, 6);
            let s = RPoly::from_binary(bp("1+x+x^3+x^5"));
            Example {
                alpha: al,
                beta: be,
                notation: "(1+x, 1+x+x^3+x^5)",
                claimed: [14, 7, 4],
                readings: vec![
                    Reading {
                        name: "single generator",
                        generators: vec![elem("1+x", s.clone(), al, be)],
                        spec: None,
                    },
                    Reading {
                        name: "separable, generators (1+x, 0) and (0, 1+x+x^3+x^5)",
                        generators: vec![elem("1+x", RPoly::zero(), al, be), elem("0", s, al, be)],
                        spec: None,
                    },
                ],
            }
        }
        _ => unreachable!("three examples"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReadingResult {
    pub reading: String,
    pub generators: String,
    pub spec: Option<String>,
    pub spec_valid: Option<bool>,
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub reproduces: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleReport {
    pub alpha: usize,
    pub beta: usize,
    pub notation: String,
    pub claimed: String,
    pub readings: Vec<ReadingResult>,
    pub reproduced: bool,
    pub discrepancy: Option<String>,
}

fn nkd(v: [u32; 3]) -> String {
    format!("[{},{},{}]", v[0], v[1], v[2])
}

/// Measures every reading of an example. `k` and `d` do not depend on the
/// Gray layout, which only permutes coordinates.
pub fn example_report(ex: &Example) -> Result<ExampleReport> {
    let amb = Ambient::new(ex.alpha, ex.beta)?;
    let mut readings = Vec::new();
    for r in &ex.readings {
        let keys = r
            .generators
            .iter()
            .map(|g| amb.element_key(g))
            .collect::<Result<Vec<_>>>()?;
        let basis = closure_basis(amb, keys);
        let measured = [
            amb.bits() as u32,
            basis.rank(),
            min_distance_of_span(&amb, &basis).unwrap_or(0),
        ];
        let gens: Vec<String> = r.generators.iter().map(|g| g.to_string()).collect();
        readings.push(ReadingResult {
            reading: r.name.to_string(),
            generators: gens.join(", "),
            spec: r.spec.as_ref().map(|s| s.to_string()),
            spec_valid: r.spec.as_ref().map(|s| validate_spec(s).is_empty()),
            n: measured[0],
            k: measured[1],
            d: measured[2],
            reproduces: measured == ex.claimed,
        });
    }
    let reproduced = readings.iter().any(|r| r.reproduces);
    let discrepancy = (!reproduced).then(|| {
        let seen: Vec<String> = readings.iter().map(|r| nkd([r.n, r.k, r.d])).collect();
        format!(
            "no reading reproduces {}; measured {}",
            nkd(ex.claimed),
            seen.join(", ")
        )
    });
    Ok(ExampleReport {
        alpha: ex.alpha,
        beta: ex.beta,
        notation: ex.notation.to_string(),
        claimed: nkd(ex.claimed),
        readings,
        reproduced,
        discrepancy,
    })
}
