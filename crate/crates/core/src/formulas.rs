//! Closed-form orientation counts as Tutte evaluations, the reliability
//! polynomial, and rational parsing for the front end.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::reductions::MinimalClass;
use crate::tutte::{rational_pow, tutte_polynomial, TuttePolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrientationClass {
    Acyclic,
    StronglyConnected,
    CutMinimal,
    CycleMinimal,
    CycleCutMinimal,
    CyclePathMinimal,
    All,
}

impl OrientationClass {
    pub const ALL: [OrientationClass; 7] = [
        OrientationClass::Acyclic,
        OrientationClass::StronglyConnected,
        OrientationClass::CutMinimal,
        OrientationClass::CycleMinimal,
        OrientationClass::CycleCutMinimal,
        OrientationClass::CyclePathMinimal,
        OrientationClass::All,
    ];

    /// Classes with a closed formula.
    pub const WITH_FORMULA: [OrientationClass; 4] = [
        OrientationClass::Acyclic,
        OrientationClass::StronglyConnected,
        OrientationClass::CutMinimal,
        OrientationClass::CycleMinimal,
    ];

    pub fn minimal_class(self) -> Option<MinimalClass> {
        match self {
            OrientationClass::CutMinimal => Some(MinimalClass::Cut),
            OrientationClass::CycleMinimal => Some(MinimalClass::Cycle),
            OrientationClass::CycleCutMinimal => Some(MinimalClass::CycleCut),
            OrientationClass::CyclePathMinimal => Some(MinimalClass::CyclePath),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrientationClass::Acyclic => "acyclic",
            OrientationClass::StronglyConnected => "strong",
            OrientationClass::CutMinimal => "cut-min",
            OrientationClass::CycleMinimal => "cycle-min",
            OrientationClass::CycleCutMinimal => "cycle-cut-min",
            OrientationClass::CyclePathMinimal => "cycle-path-min",
            OrientationClass::All => "all",
        }
    }
}

impl From<MinimalClass> for OrientationClass {
    fn from(c: MinimalClass) -> Self {
        match c {
            MinimalClass::Cut => OrientationClass::CutMinimal,
            MinimalClass::Cycle => OrientationClass::CycleMinimal,
            MinimalClass::CycleCut => OrientationClass::CycleCutMinimal,
            MinimalClass::CyclePath => OrientationClass::CyclePathMinimal,
        }
    }
}

impl fmt::Display for OrientationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrientationClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c = match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "acyclic" => OrientationClass::Acyclic,
            "strong" | "strongly-connected" => OrientationClass::StronglyConnected,
            "cut-min" | "cut-minimal" => OrientationClass::CutMinimal,
            "cycle-min" | "cycle-minimal" => OrientationClass::CycleMinimal,
            "cycle-cut-min" | "cycle-cut-minimal" => OrientationClass::CycleCutMinimal,
            "cycle-path-min" | "cycle-path-minimal" => OrientationClass::CyclePathMinimal,
            "all" => OrientationClass::All,
            other => return Err(Error::Parse(format!("unknown class {other:?}"))),
        };
        Ok(c)
    }
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn ratio(a: u64, b: u64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn to_natural(value: BigRational, what: &str) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegral(format!("{what} evaluated to {value}")));
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

/// Weighted count of `class` members (each oriented edge in one of `k`
/// colours, each unoriented edge in one of `l`), from the Tutte polynomial.
pub fn chromatic_count(g: &Multigraph, class: OrientationClass, k: u64, l: u64) -> Result<BigUint> {
    let t = tutte_polynomial(g)?;
    chromatic_count_from(&t, g, class, k, l)
}

/// [`chromatic_count`] with a precomputed Tutte polynomial of `g`.
pub fn chromatic_count_from(
    t: &TuttePolynomial,
    g: &Multigraph,
    class: OrientationClass,
    k: u64,
    l: u64,
) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let n1 = g.n() - 1;
    let genus = g.genus()?;
    let outer = ratio(2 * k + l, k);
    let value = match class {
        OrientationClass::Acyclic => {
            rational_pow(&int(k), n1) * rational_pow(&int(k + l), genus) * t.evaluate(&outer, &ratio(l, k + l))
        }
        OrientationClass::StronglyConnected => {
            rational_pow(&int(k + l), n1) * rational_pow(&int(k), genus) * t.evaluate(&ratio(l, k + l), &outer)
        }
        OrientationClass::CycleMinimal => {
            rational_pow(&int(k), n1) * rational_pow(&int(k + l), genus) * t.evaluate(&outer, &BigRational::one())
        }
        OrientationClass::CutMinimal => {
            rational_pow(&int(k + l), n1) * rational_pow(&int(k), genus) * t.evaluate(&BigRational::one(), &outer)
        }
        OrientationClass::All => rational_pow(&int(2 * k + l), g.m()),
        OrientationClass::CycleCutMinimal => return Err(Error::UnsupportedClass("cycle-cut-min")),
        OrientationClass::CyclePathMinimal => return Err(Error::UnsupportedClass("cycle-path-min")),
    };
    to_natural(value, class.name())
}

pub fn check_probability(p: &BigRational, max: &BigRational, inclusive: bool) -> Result<()> {
    let above = if inclusive { p > max } else { p >= max };
    if !p.is_positive() || above {
        return Err(Error::ProbabilityOutOfRange(p.to_string()));
    }
    Ok(())
}

/// All-terminal reliability: the probability that the edges surviving
/// independent deletion with probability `p` still connect every vertex.
pub fn reliability_exact(g: &Multigraph, p: &BigRational) -> Result<BigRational> {
    check_probability(p, &BigRational::one(), false)?;
    let t = tutte_polynomial(g)?;
    reliability_from(&t, g, p)
}

pub fn reliability_from(t: &TuttePolynomial, g: &Multigraph, p: &BigRational) -> Result<BigRational> {
    check_probability(p, &BigRational::one(), false)?;
    let q = BigRational::one() - p;
    Ok(rational_pow(&q, g.n() - 1) * rational_pow(p, g.genus()?) * t.evaluate(&BigRational::one(), &p.recip()))
}

/// Parses `a/b`, an integer, or a decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = match whole.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let value = BigRational::new(whole * &scale + frac, scale);
        return Ok(if negative { -value } else { value });
    }
    let value: BigRational = s.parse().map_err(|_| bad())?;
    if value.denom().is_zero() {
        return Err(bad());
    }
    Ok(value)
}
