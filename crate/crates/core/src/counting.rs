//! Counts of irreducible representations with a given infinitesimal character
//! and associated variety, family by family.
//!
//! `count` evaluates the closed formulas (paintings times assignments, summed
//! over row-union decompositions when the character has several integral
//! classes). `verify` recomputes every entry as
//! `Σ_σ [1 : σ]·[σ : Coh]` from induced characters and compares.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::assignments::count_assignments;
use crate::charnorm::{classify_glc, classify_u, integral_blocks, shift, Classified, Coordinate, IntegralBlock};
use crate::coherent::{self, Method};
use crate::diagrams::{enumerate_partitions, row_union_decompositions, YoungDiagram};
use crate::error::{Error, Result};
use crate::paintings::{count_paintings, count_paintings_a_signature, PaintingType};
use crate::symchar::{self, CharSpec, FormalRepSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Glr(usize),
    /// Argument is the number of coordinates `n`; the group is `GL_{n/2}(H)`.
    Glh(usize),
    Glc(usize),
    U(usize, usize),
    /// The double cover of `U(p, q)`, genuine representations only.
    UGenuine(usize, usize),
}

impl GroupSpec {
    /// Number of coordinates of `ν` per side, and size of each orbit partition.
    pub fn rank(&self) -> usize {
        match *self {
            GroupSpec::Glr(n) | GroupSpec::Glh(n) | GroupSpec::Glc(n) => n,
            GroupSpec::U(p, q) | GroupSpec::UGenuine(p, q) => p + q,
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, GroupSpec::Glc(_))
    }

    fn validate(self) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidGroup(format!("{self}: {why}")));
        match self {
            GroupSpec::Glr(0) | GroupSpec::Glc(0) | GroupSpec::Glh(0) => bad("rank must be positive"),
            GroupSpec::Glh(n) if n % 2 == 1 => bad("quaternionic rank needs an even number of coordinates"),
            GroupSpec::U(0, 0) | GroupSpec::UGenuine(0, 0) => bad("p + q must be positive"),
            _ => Ok(self),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Glr(n) => write!(f, "GLR({n})"),
            GroupSpec::Glh(n) => write!(f, "GLH({n})"),
            GroupSpec::Glc(n) => write!(f, "GLC({n})"),
            GroupSpec::U(p, q) => write!(f, "U({p},{q})"),
            GroupSpec::UGenuine(p, q) => write!(f, "U~({p},{q})"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// `GLR(n)`, `GLH(n)`, `GLC(n)`, `U(p,q)`, `U~(p,q)`; case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGroup(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_uppercase();
        let (family, args) = t.split_once('(').ok_or_else(bad)?;
        let args = args.strip_suffix(')').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|a| a.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let spec = match (family, nums.as_slice()) {
            ("GLR", &[n]) => GroupSpec::Glr(n),
            ("GLH", &[n]) => GroupSpec::Glh(n),
            ("GLC", &[n]) => GroupSpec::Glc(n),
            ("U", &[p, q]) => GroupSpec::U(p, q),
            ("U~" | "UG", &[p, q]) => GroupSpec::UGenuine(p, q),
            _ => return Err(bad()),
        };
        spec.validate()
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Infinitesimal character: one coordinate list, or two for `GLC`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Nu {
    Single(Vec<Coordinate>),
    Pair(Vec<Coordinate>, Vec<Coordinate>),
}

impl Nu {
    /// Comma-separated coordinates; two lists joined by `;` for the complex case.
    pub fn parse(s: &str) -> Result<Self> {
        use crate::charnorm::parse_coords;
        Ok(match s.split_once(';') {
            Some((l, r)) => Nu::Pair(parse_coords(l)?, parse_coords(r)?),
            None => Nu::Single(parse_coords(s)?),
        })
    }
}

impl fmt::Display for Nu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Coordinate]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            Nu::Single(v) => f.write_str(&join(v)),
            Nu::Pair(l, r) => write!(f, "{};{}", join(l), join(r)),
        }
    }
}

/// Nilpotent orbit, by its Jordan type (a pair of them for `GLC`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum OrbitSpec {
    Single(YoungDiagram),
    Pair(YoungDiagram, YoungDiagram),
}

impl fmt::Display for OrbitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitSpec::Single(d) => write!(f, "{d}"),
            OrbitSpec::Pair(a, b) => write!(f, "{a}|{b}"),
        }
    }
}

impl FromStr for OrbitSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.split_once('|') {
            Some((a, b)) => OrbitSpec::Pair(a.trim().parse()?, b.trim().parse()?),
            None => OrbitSpec::Single(s.trim().parse()?),
        })
    }
}

/// How the unitary general-case sum attaches orbits to its two integral factors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum USwap {
    /// `U(p',q')` gets the diagram drawn from its own block, `U(e'/2,e'/2)` likewise.
    #[default]
    Unswapped,
    /// `U(p',q')` gets `ι'` and `U(e'/2,e'/2)` gets `ι`, sizes permitting.
    Verbatim,
}

impl FromStr for USwap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unswapped" => Ok(USwap::Unswapped),
            "verbatim" => Ok(USwap::Verbatim),
            _ => Err(Error::Parse(format!("u-swap must be verbatim or unswapped, got {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountOptions {
    pub u_swap: USwap,
    /// Offset of `μ = (m, ..., m)` for the genuine double cover.
    pub mu_offset: Rational64,
    /// Negate the second block of each unitary generic pair before the
    /// complex-group count, turning sum-integrality into difference-integrality.
    pub glc_negation: bool,
    pub threads: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { u_swap: USwap::Unswapped, mu_offset: Rational64::new(1, 2), glc_negation: true, threads: 1 }
    }
}

/// One term of a general-case sum. `value` is the product of `factors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub parts: Vec<YoungDiagram>,
    pub factors: Vec<u64>,
    pub value: u64,
}

impl Summand {
    fn new(parts: Vec<YoungDiagram>, factors: Vec<u64>) -> Self {
        let value = factors.iter().product();
        Summand { parts, factors, value }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CountResult {
    pub count: u64,
    /// Nonzero terms only.
    pub breakdown: Vec<Summand>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub no_reps: Option<String>,
}

impl CountResult {
    fn from_summands(summands: impl IntoIterator<Item = Summand>) -> Self {
        let breakdown: Vec<Summand> = summands.into_iter().filter(|s| s.value > 0).collect();
        CountResult { count: breakdown.iter().map(|s| s.value).sum(), breakdown, no_reps: None }
    }

    fn none(reason: String) -> Self {
        CountResult { no_reps: Some(reason), ..Default::default() }
    }
}

fn kostka(shape: &YoungDiagram, content: &YoungDiagram) -> u64 {
    count_assignments(shape, content).unwrap_or(0)
}

fn check_orbit(group: GroupSpec, orbit: &YoungDiagram) -> Result<()> {
    if orbit.size() != group.rank() {
        return Err(Error::SizeMismatch { expected: group.rank(), got: orbit.size() });
    }
    Ok(())
}

fn check_arity(group: GroupSpec, coords: &[Coordinate]) -> Result<()> {
    if coords.len() != group.rank() {
        return Err(Error::Arity { rank: group.rank(), got: coords.len() });
    }
    Ok(())
}

/// Sum over `(ι_1, ..., ι_r)` with `|ι_j| = e_j` and row union `ι` of the
/// product of per-block factor lists.
fn block_sum(
    orbit: &YoungDiagram,
    blocks: &[IntegralBlock],
    factor: impl Fn(&YoungDiagram, &IntegralBlock) -> Vec<u64>,
) -> CountResult {
    let sizes: Vec<(usize, usize)> = blocks.iter().map(|b| (b.size(), 1)).collect();
    CountResult::from_summands(row_union_decompositions(orbit, &sizes).into_iter().map(|parts| {
        let factors = parts.iter().zip(blocks).flat_map(|(p, b)| factor(p, b)).collect();
        Summand::new(parts, factors)
    }))
}

pub fn count_glr(nu: &[Coordinate], orbit: &YoungDiagram) -> Result<CountResult> {
    let g = GroupSpec::Glr(orbit.size().max(1));
    check_arity(g, nu)?;
    check_orbit(g, orbit)?;
    let blocks = integral_blocks(nu);
    Ok(block_sum(orbit, &blocks, |iota, b| {
        vec![count_paintings(iota, PaintingType::AR), kostka(iota, &b.mult)]
    }))
}

pub fn count_glh(nu: &[Coordinate], orbit: &YoungDiagram) -> Result<CountResult> {
    let g = GroupSpec::Glh(orbit.size());
    check_arity(g, nu)?;
    check_orbit(g, orbit)?;
    let blocks = integral_blocks(nu);
    if let Some(b) = blocks.iter().find(|b| b.size() % 2 == 1) {
        return Ok(CountResult::none(format!("class of {} has odd size {}", b.rep, b.size())));
    }
    Ok(block_sum(orbit, &blocks, |iota, b| {
        vec![count_paintings(iota, PaintingType::AH), kostka(iota, &b.mult)]
    }))
}

/// Complex count for a single matched pair of blocks, orbit `(ι, ι')`.
fn glc_integral(left: &IntegralBlock, right: &IntegralBlock, iota: &YoungDiagram, iota_p: &YoungDiagram) -> Vec<u64> {
    if !left.rep.difference_integral(&right.rep) || left.size() != right.size() {
        return vec![0];
    }
    vec![kostka(iota, &left.mult), kostka(iota_p, &right.mult), u64::from(iota == iota_p)]
}

pub fn count_glc(left: &[Coordinate], right: &[Coordinate], iota: &YoungDiagram, iota_p: &YoungDiagram) -> Result<CountResult> {
    let g = GroupSpec::Glc(iota.size());
    check_arity(g, left)?;
    check_arity(g, right)?;
    check_orbit(g, iota)?;
    check_orbit(g, iota_p)?;
    let matched = match classify_glc(left, right)? {
        Classified::Reps(m) => m,
        Classified::NoReps(why) => return Ok(CountResult::none(why)),
    };
    let sizes: Vec<(usize, usize)> = matched.iter().map(|(a, _)| (a.size(), 1)).collect();
    let lefts = row_union_decompositions(iota, &sizes);
    let rights = row_union_decompositions(iota_p, &sizes);
    let mut summands = Vec::new();
    for l in &lefts {
        for r in &rights {
            let mut parts = Vec::new();
            let mut factors = Vec::new();
            for (k, (a, b)) in matched.iter().enumerate() {
                parts.extend([l[k].clone(), r[k].clone()]);
                factors.extend(glc_integral(a, b, &l[k], &r[k]));
            }
            summands.push(Summand::new(parts, factors));
        }
    }
    Ok(CountResult::from_summands(summands))
}

/// Integral unitary count: branch on the class of the block modulo `Z`.
/// `rep` is `None` for the empty block of a rank-zero factor.
fn u_integral(p: usize, q: usize, rep: Option<&Coordinate>, mult: &YoungDiagram, iota: &YoungDiagram) -> Vec<u64> {
    let n = p + q;
    if iota.size() != n || mult.size() != n {
        return vec![0];
    }
    let Some(rep) = rep else {
        return vec![1];
    };
    let class = rep.class_rep();
    if class.tag.is_some() {
        return vec![0];
    }
    let half = Rational64::new(1, 2);
    let lam_class = if n % 2 == 1 { Rational64::from_integer(0) } else { half };
    let k = kostka(iota, mult);
    if class.offset == lam_class {
        vec![count_paintings_a_signature(iota, p, q).expect("sizes checked"), k]
    } else if (class.offset * 2).is_integer() {
        vec![count_paintings(iota, PaintingType::ADegenerate), k, u64::from(p == q)]
    } else {
        vec![0]
    }
}

pub fn count_u(p: usize, q: usize, nu: &[Coordinate], orbit: &YoungDiagram, opts: &CountOptions) -> Result<CountResult> {
    let g = GroupSpec::U(p, q);
    check_arity(g, nu)?;
    check_orbit(g, orbit)?;
    let blocks = integral_blocks(nu);
    if let [only] = blocks.as_slice() {
        let factors = u_integral(p, q, Some(&only.rep), &only.mult, orbit);
        return Ok(CountResult::from_summands([Summand::new(vec![orbit.clone()], factors)]));
    }
    let d = match classify_u(nu, p, q)? {
        Classified::Reps(d) => d,
        Classified::NoReps(why) => return Ok(CountResult::none(why)),
    };
    let (e, ep) = (d.lam_size(), d.lamp_size());
    let empty = YoungDiagram::empty();
    let lam_mult = d.lam.as_ref().map_or(&empty, |b| &b.mult);
    let lamp_mult = d.lamp.as_ref().map_or(&empty, |b| &b.mult);
    // U(e'/2, e'/2) has rank e' and class e'/2 + Z = Z; when p + q is odd the
    // block sits in 1/2 + Z and is moved there by the det^{1/2} twist.
    let lamp_rep = d.lamp.as_ref().map(|b| {
        if (p + q) % 2 == 1 { b.rep.shifted(Rational64::new(1, 2)) } else { b.rep.clone() }
    });
    let pairs: Vec<(IntegralBlock, IntegralBlock)> = d
        .pairs
        .iter()
        .map(|(a, b)| (a.clone(), if opts.glc_negation { b.negated() } else { b.clone() }))
        .collect();

    let mut sizes = vec![(e, 1), (ep, 1)];
    sizes.extend(pairs.iter().map(|(a, _)| (a.size(), 2)));
    let mut summands = Vec::new();
    for tuple in row_union_decompositions(orbit, &sizes) {
        let (iota, iota_p) = (&tuple[0], &tuple[1]);
        let (for_lam, for_lamp) = match opts.u_swap {
            USwap::Unswapped => (iota, iota_p),
            USwap::Verbatim => (iota_p, iota),
        };
        let mut head = u_integral(d.p_res, d.q_res, d.lam.as_ref().map(|b| &b.rep), lam_mult, for_lam);
        head.extend(u_integral(ep / 2, ep / 2, lamp_rep.as_ref(), lamp_mult, for_lamp));
        // each ι_i' ranges freely over YD_{e_i}
        let free: Vec<Vec<YoungDiagram>> = pairs.iter().map(|(a, _)| enumerate_partitions(a.size())).collect();
        let mut choice = vec![0usize; pairs.len()];
        loop {
            let mut parts = vec![iota.clone(), iota_p.clone()];
            let mut factors = head.clone();
            for (k, (a, b)) in pairs.iter().enumerate() {
                let primed = &free[k][choice[k]];
                parts.extend([tuple[2 + k].clone(), primed.clone()]);
                factors.extend(glc_integral(a, b, &tuple[2 + k], primed));
            }
            summands.push(Summand::new(parts, factors));
            let Some(k) = (0..choice.len()).rev().find(|&k| choice[k] + 1 < free[k].len()) else {
                break;
            };
            choice[k] += 1;
            choice[k + 1..].iter_mut().for_each(|c| *c = 0);
        }
    }
    Ok(CountResult::from_summands(summands))
}

/// Genuine representations of the double cover, via `ν ↦ ν + μ`.
pub fn count_u_genuine(p: usize, q: usize, nu: &[Coordinate], orbit: &YoungDiagram, opts: &CountOptions) -> Result<CountResult> {
    count_u(p, q, &shift(nu, opts.mu_offset), orbit, opts)
}

fn mismatch(what: &str) -> Error {
    Error::Parse(format!("{what} does not fit the group"))
}

/// Dispatches on the group family.
pub fn count(group: GroupSpec, nu: &Nu, orbit: &OrbitSpec, opts: &CountOptions) -> Result<CountResult> {
    let group = group.validate()?;
    match (group, nu, orbit) {
        (GroupSpec::Glc(_), Nu::Pair(l, r), OrbitSpec::Pair(a, b)) => {
            check_orbit(group, a)?;
            count_glc(l, r, a, b)
        }
        (GroupSpec::Glc(_), Nu::Single(_), _) => Err(mismatch("a single coordinate list")),
        (GroupSpec::Glc(_), _, OrbitSpec::Single(_)) => Err(mismatch("a single orbit")),
        (_, Nu::Pair(..), _) => Err(mismatch("a pair of coordinate lists")),
        (_, _, OrbitSpec::Pair(..)) => Err(mismatch("an orbit pair")),
        (g, Nu::Single(v), OrbitSpec::Single(o)) => {
            check_arity(g, v)?;
            check_orbit(g, o)?;
            match g {
                GroupSpec::Glr(_) => count_glr(v, o),
                GroupSpec::Glh(_) => count_glh(v, o),
                GroupSpec::U(p, q) => count_u(p, q, v, o, opts),
                GroupSpec::UGenuine(p, q) => count_u_genuine(p, q, v, o, opts),
                GroupSpec::Glc(_) => unreachable!(),
            }
        }
    }
}

pub fn all_orbits(group: GroupSpec) -> Vec<OrbitSpec> {
    let parts = enumerate_partitions(group.rank());
    if group.is_complex() {
        parts
            .iter()
            .flat_map(|a| parts.iter().map(move |b| OrbitSpec::Pair(a.clone(), b.clone())))
            .collect()
    } else {
        parts.into_iter().map(OrbitSpec::Single).collect()
    }
}

/// Runs `f` over `items` on up to `threads` scoped threads, preserving order.
fn par_map<T: Sync, R: Send>(items: &[T], threads: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    if threads <= 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| {
                let f = &f;
                s.spawn(move || c.iter().map(f).collect::<Vec<R>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Counts for every orbit, in orbit enumeration order.
pub fn count_table(group: GroupSpec, nu: &Nu, opts: &CountOptions) -> Result<Vec<(OrbitSpec, CountResult)>> {
    let orbits = all_orbits(group.validate()?);
    par_map(&orbits, opts.threads, |o| count(group, nu, o, opts).map(|r| (o.clone(), r))).into_iter().collect()
}

/// Coordinates `base, base+1, ...` repeated according to `mult`.
pub fn pattern_coords(mult: &YoungDiagram, base: Rational64) -> Vec<Coordinate> {
    let mut out = Vec::new();
    for (k, &d) in mult.rows().iter().enumerate() {
        let c = Coordinate::rational(base + k as i64);
        out.extend(std::iter::repeat_n(c, d));
    }
    out
}

/// One integral infinitesimal character per multiplicity pattern of the
/// group's rank. For the unitary groups both half-integral classes are
/// produced, shifted back by `μ` for the genuine cover.
pub fn integral_characters(group: GroupSpec, opts: &CountOptions) -> Vec<Nu> {
    let n = group.rank();
    let pats = enumerate_partitions(n);
    let zero = Rational64::from_integer(0);
    match group {
        GroupSpec::Glr(_) | GroupSpec::Glh(_) => pats.iter().map(|d| Nu::Single(pattern_coords(d, zero))).collect(),
        GroupSpec::Glc(_) => pats
            .iter()
            .flat_map(|a| pats.iter().map(move |b| Nu::Pair(pattern_coords(a, zero), pattern_coords(b, zero))))
            .collect(),
        GroupSpec::U(..) | GroupSpec::UGenuine(..) => {
            let back = if matches!(group, GroupSpec::UGenuine(..)) { -opts.mu_offset } else { zero };
            let classes = [Rational64::new(n as i64 - 1, 2), Rational64::new(n as i64, 2)];
            classes
                .iter()
                .flat_map(|&c| pats.iter().map(move |d| Nu::Single(pattern_coords(d, c + back))))
                .collect()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub orbit: OrbitSpec,
    pub formula: u64,
    pub oracle: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub group: GroupSpec,
    pub nu: Nu,
    pub agree: bool,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn first_mismatch(&self) -> Option<&VerifyRow> {
        self.rows.iter().find(|r| r.formula != r.oracle)
    }
}

/// Memoized character-theoretic ingredients for the oracle path.
#[derive(Default)]
struct Oracle {
    trivial_induced: HashMap<YoungDiagram, FormalRepSum>,
    coh: HashMap<coherent::CohSpec, FormalRepSum>,
}

impl Oracle {
    /// `[φ(ι) : Ind_{S_{d_1} × ...} 1]`.
    fn one(&mut self, mult: &YoungDiagram, iota: &YoungDiagram) -> u64 {
        self.trivial_induced
            .entry(mult.clone())
            .or_insert_with(|| {
                let parts: Vec<(usize, CharSpec)> = mult.rows().iter().map(|&d| (d, CharSpec::Triv)).collect();
                symchar::decompose(&symchar::induce_young(&parts).expect("valid parts"))
            })
            .get(iota)
    }

    fn coh(&mut self, spec: coherent::CohSpec, iota: &YoungDiagram) -> u64 {
        self.coh
            .entry(spec)
            .or_insert_with(|| coherent::coh(spec, Method::Oracle).expect("valid family"))
            .get(iota)
    }

    fn glr(&mut self, nu: &[Coordinate], orbit: &YoungDiagram, quaternionic: bool) -> u64 {
        let blocks = integral_blocks(nu);
        if quaternionic && blocks.iter().any(|b| b.size() % 2 == 1) {
            return 0;
        }
        let sizes: Vec<(usize, usize)> = blocks.iter().map(|b| (b.size(), 1)).collect();
        row_union_decompositions(orbit, &sizes)
            .iter()
            .map(|parts| {
                parts
                    .iter()
                    .zip(&blocks)
                    .map(|(iota, b)| {
                        let spec = if quaternionic {
                            coherent::CohSpec::Glh(b.size())
                        } else {
                            coherent::CohSpec::Glr(b.size())
                        };
                        self.one(&b.mult, iota) * self.coh(spec, iota)
                    })
                    .product::<u64>()
            })
            .sum()
    }

    fn glc(&mut self, left: &[Coordinate], right: &[Coordinate], iota: &YoungDiagram, iota_p: &YoungDiagram) -> u64 {
        let Some(matched) = classify_glc(left, right).expect("arity checked").reps() else {
            return 0;
        };
        let single: Vec<(usize, usize)> = matched.iter().map(|(a, _)| (a.size(), 1)).collect();
        let mut total = 0;
        for l in row_union_decompositions(iota, &single) {
            for r in row_union_decompositions(iota_p, &single) {
                total += self.glc_blocks(&matched, &l, &r);
            }
        }
        total
    }

    fn glc_blocks(&mut self, matched: &[(IntegralBlock, IntegralBlock)], l: &[YoungDiagram], r: &[YoungDiagram]) -> u64 {
        matched
            .iter()
            .enumerate()
            .map(|(k, (a, b))| {
                self.one(&a.mult, &l[k])
                    * self.one(&b.mult, &r[k])
                    * coherent::coh_glc_mult(&l[k], &r[k], Method::Oracle).expect("sizes match")
            })
            .product()
    }

    /// Every constituent is drawn from the row union with weight one,
    /// including both sides of each generic pair, whose coherent factor is
    /// the diagonal induction regardless of how the pair was labelled.
    fn u(&mut self, p: usize, q: usize, nu: &[Coordinate], orbit: &YoungDiagram) -> u64 {
        let Some(d) = classify_u(nu, p, q).expect("arity checked").reps() else {
            return 0;
        };
        let empty = YoungDiagram::empty();
        let lam_mult = d.lam.as_ref().map_or(&empty, |b| &b.mult).clone();
        let lamp_mult = d.lamp.as_ref().map_or(&empty, |b| &b.mult).clone();
        let mut sizes = vec![(d.lam_size(), 1), (d.lamp_size(), 1)];
        for (a, _) in &d.pairs {
            sizes.extend([(a.size(), 1), (a.size(), 1)]);
        }
        let mut total = 0;
        for t in row_union_decompositions(orbit, &sizes) {
            let mut term = self.one(&lam_mult, &t[0])
                * self.coh(coherent::CohSpec::U(d.p_res, d.q_res), &t[0])
                * self.one(&lamp_mult, &t[1])
                * self.coh(coherent::CohSpec::UHalf(d.lamp_size() / 2), &t[1]);
            for (k, (a, b)) in d.pairs.iter().enumerate() {
                if term == 0 {
                    break;
                }
                let (l, r) = (&t[2 + 2 * k], &t[3 + 2 * k]);
                term *= self.one(&a.mult, l)
                    * self.one(&b.mult, r)
                    * coherent::coh_glc_mult(l, r, Method::Oracle).expect("sizes match");
            }
            total += term;
        }
        total
    }

    fn eval(&mut self, group: GroupSpec, nu: &Nu, orbit: &OrbitSpec, opts: &CountOptions) -> u64 {
        match (group, nu, orbit) {
            (GroupSpec::Glr(_), Nu::Single(v), OrbitSpec::Single(o)) => self.glr(v, o, false),
            (GroupSpec::Glh(_), Nu::Single(v), OrbitSpec::Single(o)) => self.glr(v, o, true),
            (GroupSpec::Glc(_), Nu::Pair(l, r), OrbitSpec::Pair(a, b)) => self.glc(l, r, a, b),
            (GroupSpec::U(p, q), Nu::Single(v), OrbitSpec::Single(o)) => self.u(p, q, v, o),
            (GroupSpec::UGenuine(p, q), Nu::Single(v), OrbitSpec::Single(o)) => {
                self.u(p, q, &shift(v, opts.mu_offset), o)
            }
            _ => unreachable!("shapes validated by count"),
        }
    }
}

/// Formula against oracle for every orbit of `group`.
pub fn verify(group: GroupSpec, nu: &Nu, opts: &CountOptions) -> Result<VerifyReport> {
    let table = count_table(group, nu, opts)?;
    let mut oracle = Oracle::default();
    let rows: Vec<VerifyRow> = table
        .into_iter()
        .map(|(orbit, res)| VerifyRow { oracle: oracle.eval(group, nu, &orbit, opts), formula: res.count, orbit })
        .collect();
    let agree = rows.iter().all(|r| r.formula == r.oracle);
    Ok(VerifyReport { group, nu: nu.clone(), agree, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charnorm::parse_coords;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn cs(s: &str) -> Vec<Coordinate> {
        parse_coords(s).unwrap()
    }

    fn u(p: usize, q: usize, nu: &str, orbit: &[usize]) -> u64 {
        count_u(p, q, &cs(nu), &yd(orbit), &CountOptions::default()).unwrap().count
    }

    #[test]
    fn group_parsing() {
        assert_eq!("U(2,1)".parse::<GroupSpec>().unwrap(), GroupSpec::U(2, 1));
        assert_eq!("glh(8)".parse::<GroupSpec>().unwrap(), GroupSpec::Glh(8));
        assert_eq!(" U~(1, 2) ".parse::<GroupSpec>().unwrap(), GroupSpec::UGenuine(1, 2));
        for bad in ["GLH(3)", "GLR(0)", "U(0,0)", "SO(3)", "GLR(2", "U(1)", "GLR(-1)"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
        assert_eq!(GroupSpec::U(2, 1).to_string(), "U(2,1)");
    }

    #[test]
    fn orbit_and_nu_parsing() {
        assert_eq!("[2]|[1,1]".parse::<OrbitSpec>().unwrap(), OrbitSpec::Pair(yd(&[2]), yd(&[1, 1])));
        assert_eq!(Nu::parse("0,1;x,x-1").unwrap(), Nu::Pair(cs("0,1"), cs("x,x-1")));
        assert_eq!(Nu::parse("0,1;x,x-1").unwrap().to_string(), "0,1;x,x-1");
    }

    #[test]
    fn real_examples() {
        let c = |nu: &str, o: &[usize]| count_glr(&cs(nu), &yd(o)).unwrap().count;
        assert_eq!(c("0,1,2", &[3]), 4);
        assert_eq!(c("0,1/2", &[2]), 4);
        assert_eq!(c("0,1/2", &[1, 1]), 0);
        assert_eq!(c("0,0,0", &[2, 1]), 0);
    }

    #[test]
    fn quaternionic_examples() {
        let c = |nu: &str, o: &[usize]| count_glh(&cs(nu), &yd(o)).unwrap().count;
        assert_eq!(c("1,1,1,2,2,2,3,3", &[4, 4]), 1);
        assert_eq!(c("1,1,1,1,2,2,2,3,3,4", &[5, 5]), 2);
        assert_eq!(c("1,1,1,1,2,2,2,3,3,4", &[4, 4, 1, 1]), 1);
        for o in enumerate_partitions(2) {
            assert_eq!(count_glh(&cs("0,1/2"), &o).unwrap().count, 0);
        }
    }

    #[test]
    fn complex_examples() {
        let c = |l: &str, r: &str, a: &[usize], b: &[usize]| count_glc(&cs(l), &cs(r), &yd(a), &yd(b)).unwrap().count;
        assert_eq!(c("0,1,2", "0,1,2", &[2, 1], &[2, 1]), 4);
        assert_eq!(c("0,1,2", "0,1,2", &[3], &[2, 1]), 0);
        assert_eq!(c("x", "x-1", &[1], &[1]), 1);
        assert_eq!(c("0", "1/2", &[1], &[1]), 0);
    }

    #[test]
    fn unitary_examples() {
        assert_eq!(u(2, 1, "1,1,2", &[3]), 1);
        assert_eq!(u(2, 1, "1,1,2", &[2, 1]), 2);
        assert_eq!(u(2, 1, "1,1,2", &[1, 1, 1]), 0);
        // the two paintings of [2] with signature (1,1) are •• and sr
        assert_eq!(u(1, 1, "1/2,3/2", &[2]), 2);
        assert_eq!(u(1, 1, "1/2,3/2", &[1, 1]), 1);
        assert_eq!(u(1, 1, "x,-x+1", &[2]), 1);
        assert_eq!(u(1, 1, "x,-x+1", &[1, 1]), 0);
        assert_eq!(u(1, 1, "1/4,1/3", &[2]), 0);
    }

    #[test]
    fn genuine_is_shifted() {
        let o = CountOptions::default();
        for orbit in enumerate_partitions(3) {
            assert_eq!(
                count_u_genuine(2, 1, &cs("1/2,1/2,3/2"), &orbit, &o).unwrap().count,
                count_u(2, 1, &cs("1,1,2"), &orbit, &o).unwrap().count
            );
        }
    }

    #[test]
    fn breakdown_sums_to_count() {
        let r = count_glr(&cs("0,1/2,1,x"), &yd(&[3, 1])).unwrap();
        assert!(r.count > 0);
        assert_eq!(r.count, r.breakdown.iter().map(|s| s.factors.iter().product::<u64>()).sum::<u64>());
    }

    #[test]
    fn table_and_verify() {
        let nu = Nu::Single(cs("1,1,1,2,2,2,3,3"));
        let t = count_table(GroupSpec::Glh(8), &nu, &CountOptions::default()).unwrap();
        let nonzero: Vec<_> = t.iter().filter(|(_, r)| r.count > 0).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].0, OrbitSpec::Single(yd(&[4, 4])));
        let rep = verify(GroupSpec::U(2, 1), &Nu::Single(cs("1,1,2")), &CountOptions::default()).unwrap();
        assert!(rep.agree, "{rep:?}");
    }

    #[test]
    fn threaded_table_matches() {
        let nu = Nu::Single(cs("0,1,1,2,x,x"));
        let one = count_table(GroupSpec::Glr(6), &nu, &CountOptions::default()).unwrap();
        let four = count_table(GroupSpec::Glr(6), &nu, &CountOptions { threads: 4, ..Default::default() }).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn shape_errors() {
        let o = CountOptions::default();
        assert!(count(GroupSpec::Glc(2), &Nu::Single(cs("0,1")), &"[2]".parse().unwrap(), &o).is_err());
        assert!(count(GroupSpec::Glr(2), &Nu::Single(cs("0")), &"[2]".parse().unwrap(), &o).is_err());
        assert!(count(GroupSpec::Glr(2), &Nu::Single(cs("0,1")), &"[3]".parse().unwrap(), &o).is_err());
        assert!(count(GroupSpec::Glr(2), &Nu::Single(cs("0,1")), &"[1]|[1]".parse().unwrap(), &o).is_err());
    }
}
