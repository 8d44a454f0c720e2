//! Weight sequences r = (r0, r1, ...): finitely-represented rules assigning
//! an integer weight r(i) to the part value i+1.
//!
//! Indexing convention, used everywhere in this crate: part `p >= 1` carries
//! weight `r(p-1)`, so a single-part composition of `n` has weight `r(n-1)`.
//! A composition's weight is the product of its parts' weights; indicator
//! rules (weights in {0,1}) restrict which parts may appear at all.

use crate::ring::{binomial, CommutativeRing};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A total, deterministic rule `i -> r(i)` with a finite description.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WeightRule {
    /// Listed prefix values, then a constant tail.
    Explicit { prefix: Vec<BigInt>, tail: BigInt },
    /// r(i) = 1 iff part i+1 belongs to the set.
    AllowedParts(BTreeSet<u64>),
    /// r(i) = 1 iff part i+1 is congruent to 1 mod m, i.e. i = 0 (mod m).
    ResidueOneMod(u64),
    /// r(i) = 1 iff part i+1 differs from the forbidden value.
    ForbiddenPart(u64),
    /// r(i) = C(i+m-1, i), the m-fold stars-and-bars sequence.
    Pyramidal(u64),
    /// r(i) = (i+1)^2.
    Squares,
}

impl WeightRule {
    /// The weight of index `i` (part value `i + 1`) as an integer.
    pub fn weight_at(&self, i: u64) -> BigInt {
        let indicator = |allowed: bool| {
            if allowed {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        };
        match self {
            WeightRule::Explicit { prefix, tail } => {
                if (i as usize) < prefix.len() {
                    prefix[i as usize].clone()
                } else {
                    tail.clone()
                }
            }
            WeightRule::AllowedParts(parts) => {
                indicator(i.checked_add(1).is_some_and(|p| parts.contains(&p)))
            }
            WeightRule::ResidueOneMod(m) => {
                assert!(*m >= 1, "residue rule needs a modulus of at least 1");
                indicator(i.is_multiple_of(*m))
            }
            WeightRule::ForbiddenPart(part) => indicator(i.checked_add(1) != Some(*part)),
            WeightRule::Pyramidal(m) => {
                assert!(*m >= 1, "pyramidal weights need m of at least 1");
                binomial(i + m - 1, i as i64)
            }
            WeightRule::Squares => {
                let p = BigInt::from(i) + 1;
                &p * &p
            }
        }
    }

    /// The weight of index `i` mapped into `ring`.
    pub fn weight_in<R: CommutativeRing>(&self, ring: &R, i: u64) -> R::Elem {
        ring.from_integer(&self.weight_at(i))
    }
}

/// Parameter validation or parse failure for a family spec.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum FamilyError {
    #[error("family `{family}`: {constraint}")]
    InvalidParameter { family: String, constraint: String },
    #[error("cannot parse family spec `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

fn invalid(family: &str, constraint: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter {
        family: family.to_string(),
        constraint: constraint.into(),
    }
}

/// The named weight families studied by the counting pipelines.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NamedFamily {
    /// Every part allowed: r(i) = 1.
    AllOnes,
    /// Parts 1..=m.
    Bounded { max_part: u64 },
    /// Parts drawn from an explicit set containing 1.
    AllowedSet { parts: Vec<u64> },
    /// Parts 1 or m, m >= 2.
    OneOrM { m: u64 },
    /// Parts congruent to 1 mod m (m = 2 gives odd parts).
    ResidueOneMod { modulus: u64 },
    /// Every part except one forbidden value m >= 2.
    NoPart { part: u64 },
    /// 1 + m colors of the part 1, one color of everything else.
    TwoTypeOnes { extra_ones: u64 },
    /// r(i) = C(m, i): m independent optional increments per part.
    BinomialWeights { m: u64 },
    /// r(i) = C(i+m-1, i).
    PyramidalWeights { m: u64 },
    /// r(i) = (i+1)^2.
    Squares,
}

impl NamedFamily {
    fn grammar_name(&self) -> &'static str {
        match self {
            NamedFamily::AllOnes => "all-ones",
            NamedFamily::Bounded { .. } => "bounded",
            NamedFamily::AllowedSet { .. } => "allowed-set",
            NamedFamily::OneOrM { .. } => "one-or-m",
            NamedFamily::ResidueOneMod { .. } => "residue-1-mod",
            NamedFamily::NoPart { .. } => "no-part",
            NamedFamily::TwoTypeOnes { .. } => "two-type-ones",
            NamedFamily::BinomialWeights { .. } => "binomial",
            NamedFamily::PyramidalWeights { .. } => "pyramidal",
            NamedFamily::Squares => "squares",
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let name = self.grammar_name();
        match self {
            NamedFamily::AllOnes | NamedFamily::Squares => Ok(()),
            NamedFamily::Bounded { max_part } => {
                if *max_part >= 1 {
                    Ok(())
                } else {
                    Err(invalid(name, "the part bound m must be at least 1"))
                }
            }
            NamedFamily::AllowedSet { parts } => {
                if !parts.contains(&1) {
                    return Err(invalid(name, "the allowed set must contain the part 1"));
                }
                let set: BTreeSet<u64> = parts.iter().copied().collect();
                if set.len() != parts.len() {
                    return Err(invalid(name, "the allowed parts must be distinct"));
                }
                if parts.contains(&0) {
                    return Err(invalid(name, "parts are positive; 0 is not a part"));
                }
                Ok(())
            }
            NamedFamily::OneOrM { m } => {
                if *m >= 2 {
                    Ok(())
                } else {
                    Err(invalid(
                        name,
                        "m must be at least 2 (m = 1 duplicates the part 1)",
                    ))
                }
            }
            NamedFamily::ResidueOneMod { modulus } => {
                if *modulus >= 1 {
                    Ok(())
                } else {
                    Err(invalid(name, "the modulus must be at least 1"))
                }
            }
            NamedFamily::NoPart { part } => {
                if *part >= 2 {
                    Ok(())
                } else {
                    Err(invalid(name, "the forbidden part must be at least 2"))
                }
            }
            NamedFamily::TwoTypeOnes { .. } => Ok(()),
            NamedFamily::BinomialWeights { m } | NamedFamily::PyramidalWeights { m } => {
                if *m >= 1 {
                    Ok(())
                } else {
                    Err(invalid(name, "m must be at least 1"))
                }
            }
        }
    }

    /// The weight rule realizing this family, after parameter validation.
    pub fn to_weights(&self) -> Result<WeightRule, FamilyError> {
        self.validate()?;
        Ok(match self {
            NamedFamily::AllOnes => WeightRule::Explicit {
                prefix: vec![],
                tail: BigInt::one(),
            },
            NamedFamily::Bounded { max_part } => {
                WeightRule::AllowedParts((1..=*max_part).collect())
            }
            NamedFamily::AllowedSet { parts } => {
                WeightRule::AllowedParts(parts.iter().copied().collect())
            }
            NamedFamily::OneOrM { m } => WeightRule::AllowedParts([1, *m].into_iter().collect()),
            NamedFamily::ResidueOneMod { modulus } => WeightRule::ResidueOneMod(*modulus),
            NamedFamily::NoPart { part } => WeightRule::ForbiddenPart(*part),
            NamedFamily::TwoTypeOnes { extra_ones } => WeightRule::Explicit {
                prefix: vec![BigInt::from(1 + extra_ones)],
                tail: BigInt::one(),
            },
            NamedFamily::BinomialWeights { m } => WeightRule::Explicit {
                prefix: (0..=*m).map(|i| binomial(*m, i as i64)).collect(),
                tail: BigInt::zero(),
            },
            NamedFamily::PyramidalWeights { m } => WeightRule::Pyramidal(*m),
            NamedFamily::Squares => WeightRule::Squares,
        })
    }
}

/// A family as named on the command line: either one of the built-in
/// families or an explicit prefix-plus-constant-tail weight list.
///
/// The text grammar (one form per line):
///
/// ```text
/// all-ones
/// bounded:m
/// allowed-set:1,m1,...,ms
/// one-or-m:m
/// residue-1-mod:m
/// no-part:m
/// two-type-ones:m
/// binomial:m
/// pyramidal:m
/// squares
/// explicit:c0,c1,...;tail=t
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    Named(NamedFamily),
    Explicit { prefix: Vec<BigInt>, tail: BigInt },
}

impl FamilySpec {
    pub fn to_weights(&self) -> Result<WeightRule, FamilyError> {
        match self {
            FamilySpec::Named(family) => family.to_weights(),
            FamilySpec::Explicit { prefix, tail } => Ok(WeightRule::Explicit {
                prefix: prefix.clone(),
                tail: tail.clone(),
            }),
        }
    }
}

/// Converts a named family into its weight rule.
pub fn family_to_weights(family: &NamedFamily) -> Result<WeightRule, FamilyError> {
    family.to_weights()
}

/// The weight of index `i` under `rule`, as an integer.
pub fn weight_at(rule: &WeightRule, i: u64) -> BigInt {
    rule.weight_at(i)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Named(family) => match family {
                NamedFamily::AllOnes => write!(f, "all-ones"),
                NamedFamily::Bounded { max_part } => write!(f, "bounded:{max_part}"),
                NamedFamily::AllowedSet { parts } => {
                    let mut sorted = parts.clone();
                    sorted.sort_unstable();
                    let joined: Vec<String> = sorted.iter().map(|p| p.to_string()).collect();
                    write!(f, "allowed-set:{}", joined.join(","))
                }
                NamedFamily::OneOrM { m } => write!(f, "one-or-m:{m}"),
                NamedFamily::ResidueOneMod { modulus } => write!(f, "residue-1-mod:{modulus}"),
                NamedFamily::NoPart { part } => write!(f, "no-part:{part}"),
                NamedFamily::TwoTypeOnes { extra_ones } => write!(f, "two-type-ones:{extra_ones}"),
                NamedFamily::BinomialWeights { m } => write!(f, "binomial:{m}"),
                NamedFamily::PyramidalWeights { m } => write!(f, "pyramidal:{m}"),
                NamedFamily::Squares => write!(f, "squares"),
            },
            FamilySpec::Explicit { prefix, tail } => {
                let joined: Vec<String> = prefix.iter().map(|c| c.to_string()).collect();
                write!(f, "explicit:{};tail={tail}", joined.join(","))
            }
        }
    }
}

fn parse_u64(input: &str, text: &str, what: &str) -> Result<u64, FamilyError> {
    text.parse::<u64>().map_err(|_| FamilyError::Parse {
        input: input.to_string(),
        reason: format!("{what} must be a nonnegative integer, got `{text}`"),
    })
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let parse_err = |reason: String| FamilyError::Parse {
            input: s.to_string(),
            reason,
        };
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name, Some(args)),
            None => (s, None),
        };
        let required = |what: &str| {
            args.filter(|a| !a.is_empty())
                .ok_or_else(|| parse_err(format!("expected `{name}:{what}`")))
        };
        let none_expected = || match args {
            Some(_) => Err(parse_err(format!("family `{name}` takes no parameters"))),
            None => Ok(()),
        };
        let spec = match name {
            "all-ones" => {
                none_expected()?;
                FamilySpec::Named(NamedFamily::AllOnes)
            }
            "squares" => {
                none_expected()?;
                FamilySpec::Named(NamedFamily::Squares)
            }
            "bounded" => FamilySpec::Named(NamedFamily::Bounded {
                max_part: parse_u64(s, required("m")?, "m")?,
            }),
            "one-or-m" => FamilySpec::Named(NamedFamily::OneOrM {
                m: parse_u64(s, required("m")?, "m")?,
            }),
            "residue-1-mod" => FamilySpec::Named(NamedFamily::ResidueOneMod {
                modulus: parse_u64(s, required("m")?, "m")?,
            }),
            "no-part" => FamilySpec::Named(NamedFamily::NoPart {
                part: parse_u64(s, required("m")?, "m")?,
            }),
            "two-type-ones" => FamilySpec::Named(NamedFamily::TwoTypeOnes {
                extra_ones: parse_u64(s, required("m")?, "m")?,
            }),
            "binomial" => FamilySpec::Named(NamedFamily::BinomialWeights {
                m: parse_u64(s, required("m")?, "m")?,
            }),
            "pyramidal" => FamilySpec::Named(NamedFamily::PyramidalWeights {
                m: parse_u64(s, required("m")?, "m")?,
            }),
            "allowed-set" => {
                let parts = required("1,m1,...,ms")?
                    .split(',')
                    .map(|t| parse_u64(s, t, "each part"))
                    .collect::<Result<Vec<u64>, _>>()?;
                FamilySpec::Named(NamedFamily::AllowedSet { parts })
            }
            "explicit" => {
                let body = required("c0,c1,...;tail=t")?;
                let (coeffs, tail_part) = body
                    .split_once(';')
                    .ok_or_else(|| parse_err("expected `explicit:c0,c1,...;tail=t`".to_string()))?;
                let tail_text = tail_part.strip_prefix("tail=").ok_or_else(|| {
                    parse_err(format!("expected `tail=t` after `;`, got `{tail_part}`"))
                })?;
                let parse_int = |t: &str| {
                    BigInt::from_str(t).map_err(|_| {
                        parse_err(format!("weight values must be integers, got `{t}`"))
                    })
                };
                let prefix = coeffs
                    .split(',')
                    .map(parse_int)
                    .collect::<Result<Vec<BigInt>, _>>()?;
                FamilySpec::Explicit {
                    prefix,
                    tail: parse_int(tail_text)?,
                }
            }
            other => {
                return Err(parse_err(format!(
                    "unknown family `{other}`; known families: all-ones, bounded:m, \
                     allowed-set:1,m1,...,ms, one-or-m:m, residue-1-mod:m, no-part:m, \
                     two-type-ones:m, binomial:m, pyramidal:m, squares, \
                     explicit:c0,c1,...;tail=t"
                )))
            }
        };
        // Surface parameter constraint violations at parse time too.
        spec.to_weights()?;
        Ok(spec)
    }
}

/// One instance of every named family, with the parameters used by the
/// default verification suite.
pub fn canonical_families() -> Vec<FamilySpec> {
    use NamedFamily::*;
    vec![
        FamilySpec::Named(AllOnes),
        FamilySpec::Named(Bounded { max_part: 3 }),
        FamilySpec::Named(AllowedSet {
            parts: vec![1, 3, 5],
        }),
        FamilySpec::Named(OneOrM { m: 2 }),
        FamilySpec::Named(ResidueOneMod { modulus: 2 }),
        FamilySpec::Named(NoPart { part: 2 }),
        FamilySpec::Named(NoPart { part: 3 }),
        FamilySpec::Named(TwoTypeOnes { extra_ones: 1 }),
        FamilySpec::Named(BinomialWeights { m: 2 }),
        FamilySpec::Named(PyramidalWeights { m: 2 }),
        FamilySpec::Named(Squares),
    ]
}
