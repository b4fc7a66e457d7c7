//! Infinitesimal characters as coordinate lists, and the block structure the
//! counting formulas consume.
//!
//! A coordinate is `±tag + offset` with a rational offset. Distinct tags are
//! treated as algebraically independent, so integrality questions reduce to
//! comparing tags and offsets.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::YoungDiagram;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tag {
    pub name: String,
    pub negated: bool,
}

impl Tag {
    pub fn negate(&self) -> Tag {
        Tag { name: self.name.clone(), negated: !self.negated }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coordinate {
    pub tag: Option<Tag>,
    pub offset: Rational64,
}

fn frac(x: Rational64) -> Rational64 {
    x - x.floor()
}

impl Coordinate {
    pub fn rational(offset: Rational64) -> Self {
        Coordinate { tag: None, offset }
    }

    pub fn int(k: i64) -> Self {
        Self::rational(Rational64::from_integer(k))
    }

    pub fn generic(name: &str, offset: Rational64) -> Self {
        Coordinate { tag: Some(Tag { name: name.into(), negated: false }), offset }
    }

    pub fn negate(&self) -> Self {
        Coordinate { tag: self.tag.as_ref().map(Tag::negate), offset: -self.offset }
    }

    pub fn shifted(&self, delta: Rational64) -> Self {
        Coordinate { tag: self.tag.clone(), offset: self.offset + delta }
    }

    pub fn difference_integral(&self, other: &Coordinate) -> bool {
        self.tag == other.tag && (self.offset - other.offset).is_integer()
    }

    pub fn sum_integral(&self, other: &Coordinate) -> bool {
        self.tag == other.tag.as_ref().map(Tag::negate) && (self.offset + other.offset).is_integer()
    }

    pub fn in_half_integers(&self) -> bool {
        self.tag.is_none() && (self.offset * 2).is_integer()
    }

    /// Canonical representative of the class modulo `Z`: same tag, offset in `[0, 1)`.
    pub fn class_rep(&self) -> Coordinate {
        Coordinate { tag: self.tag.clone(), offset: frac(self.offset) }
    }
}

fn fmt_rational(r: Rational64) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tag {
            None => f.write_str(&fmt_rational(self.offset)),
            Some(t) => {
                write!(f, "{}{}", if t.negated { "-" } else { "" }, t.name)?;
                if self.offset.is_positive() {
                    write!(f, "+{}", fmt_rational(self.offset))
                } else if self.offset.is_negative() {
                    write!(f, "-{}", fmt_rational(-self.offset))
                } else {
                    Ok(())
                }
            }
        }
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<Rational64> {
    let bad = |why| Error::MalformedCoordinate(whole.to_string(), why);
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("expected an integer"));
    }
    let n: i64 = num.parse().map_err(|_| bad("integer out of range"))?;
    let d: i64 = match den {
        None => 1,
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
            d.parse().map_err(|_| bad("denominator out of range"))?
        }
        Some(_) => return Err(bad("expected a positive denominator")),
    };
    if d == 0 {
        return Err(bad("zero denominator"));
    }
    Ok(Rational64::new(n, d))
}

impl FromStr for Coordinate {
    type Err = Error;

    fn from_str(raw: &str) -> Result<Self> {
        let s = raw.trim();
        let bad = |why| Error::MalformedCoordinate(raw.to_string(), why);
        let (negated, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let starts_ident = body.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
        if !starts_ident {
            return Ok(Coordinate::rational(parse_rational(s, raw)?));
        }
        let end = body.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(body.len());
        let (name, rest) = body.split_at(end);
        let offset = match rest.chars().next() {
            None => Rational64::zero(),
            Some('+') => parse_rational(&rest[1..], raw)?,
            Some('-') => -parse_rational(&rest[1..], raw)?,
            Some(_) => return Err(bad("unexpected character after tag")),
        };
        if rest.len() > 1 && rest[1..].starts_with('-') {
            return Err(bad("doubled sign"));
        }
        Ok(Coordinate { tag: Some(Tag { name: name.to_string(), negated }), offset })
    }
}

impl Serialize for Coordinate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Coordinate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated coordinate list. The empty string is the empty list.
pub fn parse_coords(s: &str) -> Result<Vec<Coordinate>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(str::parse).collect()
}

pub fn shift(coords: &[Coordinate], delta: Rational64) -> Vec<Coordinate> {
    coords.iter().map(|c| c.shifted(delta)).collect()
}

/// A maximal set of pairwise difference-integral coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralBlock {
    /// Class representative, offset reduced into `[0, 1)`.
    pub rep: Coordinate,
    /// Multiplicities of the distinct values, as a partition.
    pub mult: YoungDiagram,
    pub coords: Vec<Coordinate>,
}

impl IntegralBlock {
    pub fn size(&self) -> usize {
        self.coords.len()
    }

    pub fn negated(&self) -> IntegralBlock {
        let coords: Vec<Coordinate> = self.coords.iter().map(Coordinate::negate).collect();
        IntegralBlock { rep: self.rep.negate().class_rep(), mult: self.mult.clone(), coords }
    }
}

/// Blocks in ascending order of class representative.
pub fn integral_blocks(coords: &[Coordinate]) -> Vec<IntegralBlock> {
    let mut classes: BTreeMap<Coordinate, Vec<Coordinate>> = BTreeMap::new();
    for c in coords {
        classes.entry(c.class_rep()).or_default().push(c.clone());
    }
    classes
        .into_iter()
        .map(|(rep, mut members)| {
            members.sort();
            let mut counts: BTreeMap<&Coordinate, usize> = BTreeMap::new();
            for m in &members {
                *counts.entry(m).or_insert(0) += 1;
            }
            let mult = YoungDiagram::from_parts(counts.into_values().collect());
            IntegralBlock { rep, mult, coords: members }
        })
        .collect()
}

/// Block data for a unitary group `U(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UDecomposition {
    /// Coordinates in `(n-1)/2 + Z`.
    pub lam: Option<IntegralBlock>,
    /// Coordinates in `n/2 + Z`; even size.
    pub lamp: Option<IntegralBlock>,
    /// Generic classes, paired by sum-integrality.
    pub pairs: Vec<(IntegralBlock, IntegralBlock)>,
    pub p_res: usize,
    pub q_res: usize,
}

impl UDecomposition {
    pub fn lam_size(&self) -> usize {
        self.lam.as_ref().map_or(0, IntegralBlock::size)
    }

    pub fn lamp_size(&self) -> usize {
        self.lamp.as_ref().map_or(0, IntegralBlock::size)
    }
}

/// Outcome of a classification: either usable block data or a proof that
/// no representation has this infinitesimal character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Classified<T> {
    Reps(T),
    NoReps(String),
}

impl<T> Classified<T> {
    pub fn reps(self) -> Option<T> {
        match self {
            Classified::Reps(t) => Some(t),
            Classified::NoReps(_) => None,
        }
    }
}

pub fn classify_u(coords: &[Coordinate], p: usize, q: usize) -> Result<Classified<UDecomposition>> {
    let n = p + q;
    if coords.len() != n {
        return Err(Error::Arity { rank: n, got: coords.len() });
    }
    let lam_class = frac(Rational64::new(n as i64 - 1, 2));
    let mut lam = None;
    let mut lamp = None;
    let mut pairs = Vec::new();
    let blocks = integral_blocks(coords);
    let mut used = vec![false; blocks.len()];
    for i in 0..blocks.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let block = &blocks[i];
        if block.rep.in_half_integers() {
            if block.rep.offset == lam_class {
                lam = Some(block.clone());
            } else if block.size() % 2 == 1 {
                return Ok(Classified::NoReps(format!("class of {} has odd size {}", block.rep, block.size())));
            } else {
                lamp = Some(block.clone());
            }
            continue;
        }
        let partner_rep = block.rep.negate().class_rep();
        let Some(j) = (i + 1..blocks.len()).find(|&j| !used[j] && blocks[j].rep == partner_rep) else {
            return Ok(Classified::NoReps(format!("class of {} has no sum-integral partner", block.rep)));
        };
        if blocks[j].size() != block.size() {
            return Ok(Classified::NoReps(format!(
                "classes of {} and {} have sizes {} and {}",
                block.rep,
                blocks[j].rep,
                block.size(),
                blocks[j].size()
            )));
        }
        used[j] = true;
        pairs.push((block.clone(), blocks[j].clone()));
    }
    let taken = lamp.as_ref().map_or(0, |b: &IntegralBlock| b.size() / 2)
        + pairs.iter().map(|(a, _)| a.size()).sum::<usize>();
    if taken > p || taken > q {
        return Ok(Classified::NoReps(format!("residual signature ({}, {}) is negative", p as i64 - taken as i64, q as i64 - taken as i64)));
    }
    Ok(Classified::Reps(UDecomposition { lam, lamp, pairs, p_res: p - taken, q_res: q - taken }))
}

/// Matches the integral blocks of the two sides of a complex character.
pub fn classify_glc(
    left: &[Coordinate],
    right: &[Coordinate],
) -> Result<Classified<Vec<(IntegralBlock, IntegralBlock)>>> {
    if left.len() != right.len() {
        return Err(Error::Arity { rank: left.len(), got: right.len() });
    }
    let lb = integral_blocks(left);
    let mut rb = integral_blocks(right);
    let mut matched = Vec::new();
    for a in lb {
        let Some(j) = rb.iter().position(|b| b.rep == a.rep) else {
            return Ok(Classified::NoReps(format!("class of {} has no match on the right", a.rep)));
        };
        let b = rb.remove(j);
        if a.size() != b.size() {
            return Ok(Classified::NoReps(format!("class of {} has sizes {} and {}", a.rep, a.size(), b.size())));
        }
        matched.push((a, b));
    }
    debug_assert!(rb.is_empty(), "equal arity leaves no right block unmatched");
    Ok(Classified::Reps(matched))
}
