//! Exact character theory of the symmetric groups.
//!
//! Irreducible characters come from the Murnaghan–Nakayama rule; induced
//! characters from Young subgroups and from the hyperoctahedral groups
//! `W_r = S_r ⋉ {±1}^r ⊂ S_2r` are computed straight from class data with
//! the formula
//!
//! ```text
//! Ind_H^G f (μ) = z_μ · Σ_{H-classes c ↦ μ} f(c) / z_H(c)
//! ```
//!
//! where `z` denotes centralizer orders. Nothing here relies on Pieri or
//! branching rules; this module is the independent side of every check.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::diagrams::{enumerate_partitions, YoungDiagram};
use crate::error::{Error, Result};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn multiplicities(mu: &YoungDiagram) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &k in mu.rows() {
        *m.entry(k).or_insert(0) += 1;
    }
    m
}

/// Centralizer order `z_μ = Π k^{m_k} m_k!` of a permutation of cycle type `μ`.
pub fn centralizer_order(mu: &YoungDiagram) -> BigInt {
    multiplicities(mu)
        .into_iter()
        .fold(BigInt::one(), |acc, (k, m)| acc * BigInt::from(k).pow(m as u32) * factorial(m))
}

/// Size of the conjugacy class of cycle type `μ` in `S_|μ|`.
pub fn class_size(mu: &YoungDiagram) -> BigInt {
    factorial(mu.size()) / centralizer_order(mu)
}

/// Character table of one `S_n`, rows indexed by irreducibles, columns by
/// cycle types, both in reverse-lexicographic partition order.
#[derive(Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<YoungDiagram>,
    index: HashMap<YoungDiagram, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    fn build(n: usize) -> Self {
        let partitions = enumerate_partitions(n);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|shape| partitions.iter().map(|mu| mn(shape, mu.rows(), &mut memo)).collect())
            .collect();
        CharacterTable { n, partitions, index, values }
    }

    pub fn value(&self, shape: &YoungDiagram, mu: &YoungDiagram) -> i64 {
        self.values[self.index[shape]][self.index[mu]]
    }

    pub fn character(&self, shape: &YoungDiagram) -> ClassFunction {
        let row = &self.values[self.index[shape]];
        ClassFunction {
            n: self.n,
            values: self.partitions.iter().cloned().zip(row.iter().map(|&v| BigInt::from(v))).collect(),
        }
    }
}

/// Shared, lazily built table for `S_n`. Tables are immutable once published.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(CharacterTable::build(n));
    let mut w = tables.write().unwrap();
    Arc::clone(w.entry(n).or_insert(built))
}

/// Murnaghan–Nakayama on beta-sets: removing a rim hook of length `k` moves
/// a bead from `b` to `b - k`, with sign `(-1)^{beads jumped over}`.
fn mn(shape: &YoungDiagram, mu: &[usize], memo: &mut HashMap<(YoungDiagram, Vec<usize>), i64>) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return i64::from(shape.is_empty());
    };
    let key = (shape.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = shape.num_rows();
    let beta: Vec<usize> = (0..len).map(|i| shape.row(i) + (len - 1 - i)).collect();
    let mut total = 0i64;
    for (pos, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[pos] = target;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let m = next.len();
        let rows = next.iter().enumerate().map(|(i, &c)| c - (m - 1 - i)).collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&YoungDiagram::from_sorted(rows), rest, memo);
    }
    memo.insert(key, total);
    total
}

/// `χ^ι(μ)`.
pub fn character_value(shape: &YoungDiagram, mu: &YoungDiagram) -> Result<i64> {
    if shape.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: shape.size(), got: mu.size() });
    }
    Ok(character_table(shape.size()).value(shape, mu))
}

pub fn character(shape: &YoungDiagram) -> ClassFunction {
    character_table(shape.size()).character(shape)
}

/// Degree of the irreducible indexed by `shape`.
pub fn dimension(shape: &YoungDiagram) -> u64 {
    let ones = YoungDiagram::new(vec![1; shape.size()]).expect("ones");
    character_table(shape.size()).value(shape, &ones) as u64
}

/// An integer-valued class function on `S_n`, keyed by cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<YoungDiagram, BigInt>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        ClassFunction { n, values: enumerate_partitions(n).into_iter().map(|p| (p, BigInt::zero())).collect() }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&YoungDiagram) -> BigInt) -> Self {
        ClassFunction { n, values: enumerate_partitions(n).into_iter().map(|p| { let v = f(&p); (p, v) }).collect() }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn value(&self, mu: &YoungDiagram) -> &BigInt {
        &self.values[mu]
    }

    pub fn values(&self) -> &BTreeMap<YoungDiagram, BigInt> {
        &self.values
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Pointwise product (the character of the inner tensor product).
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, |a, b| a * b)
    }

    fn zip_with(&self, other: &ClassFunction, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        Ok(ClassFunction {
            n: self.n,
            values: self.values.iter().map(|(k, v)| (k.clone(), op(v, &other.values[k]))).collect(),
        })
    }
}

impl Serialize for ClassFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for (k, v) in &self.values {
            map.serialize_entry(&k.to_string(), &v.to_string())?;
        }
        map.end()
    }
}

/// `(1/n!) Σ_μ |C_μ| f(μ) g(μ)`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.n != g.n {
        return Err(Error::DegreeMismatch(f.n, g.n));
    }
    let mut acc = BigRational::zero();
    for (mu, a) in &f.values {
        let b = &g.values[mu];
        acc += BigRational::new(a * b, centralizer_order(mu));
    }
    Ok(acc)
}

/// A character of one Young-subgroup factor `S_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharSpec {
    Triv,
    Sgn,
    Irr(YoungDiagram),
}

/// The two linear characters of `W_r` used here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperoctChar {
    /// `(s, x) ↦ x_1 ⋯ x_r`.
    Eps,
    Triv,
}

/// Conjugacy class of `W_r`: cycle lengths of positive and negative signed cycles.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedClassType {
    pub positive: YoungDiagram,
    pub negative: YoungDiagram,
}

impl SignedClassType {
    pub fn rank(&self) -> usize {
        self.positive.size() + self.negative.size()
    }

    /// Cycle type in `S_2r`: a positive `k`-cycle gives two `k`-cycles, a
    /// negative one a single `2k`-cycle.
    pub fn image(&self) -> YoungDiagram {
        let mut parts: Vec<usize> = self.positive.rows().iter().flat_map(|&k| [k, k]).collect();
        parts.extend(self.negative.rows().iter().map(|&k| 2 * k));
        YoungDiagram::from_parts(parts)
    }

    /// `Π (2k)^{m_k} m_k!` over both cycle kinds.
    pub fn centralizer_order(&self) -> BigInt {
        [&self.positive, &self.negative]
            .into_iter()
            .flat_map(multiplicities)
            .fold(BigInt::one(), |acc, (k, m)| acc * BigInt::from(2 * k).pow(m as u32) * factorial(m))
    }

    pub fn eps(&self) -> i64 {
        if self.negative.num_rows().is_multiple_of(2) { 1 } else { -1 }
    }
}

pub fn signed_classes(r: usize) -> Vec<SignedClassType> {
    (0..=r)
        .flat_map(|a| {
            enumerate_partitions(a).into_iter().flat_map(move |pos| {
                enumerate_partitions(r - a)
                    .into_iter()
                    .map(move |neg| SignedClassType { positive: pos.clone(), negative: neg })
            })
        })
        .collect()
}

/// One direct factor of a subgroup of `S_n` built from Young and hyperoctahedral pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Young(usize, CharSpec),
    /// `W_r` sitting inside `S_2r`.
    Hyperoct(usize, HyperoctChar),
}

struct FactorClass {
    image: Vec<usize>,
    centralizer: BigInt,
    value: BigInt,
}

impl Factor {
    fn degree(&self) -> usize {
        match self {
            Factor::Young(m, _) => *m,
            Factor::Hyperoct(r, _) => 2 * r,
        }
    }

    fn classes(&self) -> Result<Vec<FactorClass>> {
        Ok(match self {
            Factor::Young(m, spec) => {
                if let CharSpec::Irr(shape) = spec {
                    if shape.size() != *m {
                        return Err(Error::SizeMismatch { expected: *m, got: shape.size() });
                    }
                }
                let table = character_table(*m);
                enumerate_partitions(*m)
                    .into_iter()
                    .map(|mu| {
                        let value = match spec {
                            CharSpec::Triv => 1,
                            CharSpec::Sgn => {
                                if (mu.size() - mu.num_rows()) % 2 == 0 { 1 } else { -1 }
                            }
                            CharSpec::Irr(shape) => table.value(shape, &mu),
                        };
                        FactorClass {
                            centralizer: centralizer_order(&mu),
                            image: mu.rows().to_vec(),
                            value: BigInt::from(value),
                        }
                    })
                    .collect()
            }
            Factor::Hyperoct(r, which) => signed_classes(*r)
                .into_iter()
                .map(|c| FactorClass {
                    image: c.image().rows().to_vec(),
                    centralizer: c.centralizer_order(),
                    value: BigInt::from(match which {
                        HyperoctChar::Eps => c.eps(),
                        HyperoctChar::Triv => 1,
                    }),
                })
                .collect(),
        })
    }
}

/// Character of `Ind_H^{S_n}` of the outer product of the factor characters,
/// where `H` is the direct product of the factors on consecutive points.
pub fn induce(factors: &[Factor]) -> Result<ClassFunction> {
    let n: usize = factors.iter().map(Factor::degree).sum();
    let per_factor = factors.iter().map(Factor::classes).collect::<Result<Vec<_>>>()?;
    let mut acc: BTreeMap<YoungDiagram, BigRational> = BTreeMap::new();

    fn go(
        per_factor: &[Vec<FactorClass>],
        image: &mut Vec<usize>,
        value: BigInt,
        centralizer: BigInt,
        acc: &mut BTreeMap<YoungDiagram, BigRational>,
    ) {
        let Some((first, rest)) = per_factor.split_first() else {
            let mu = YoungDiagram::from_parts(image.clone());
            *acc.entry(mu).or_insert_with(BigRational::zero) += BigRational::new(value, centralizer);
            return;
        };
        for c in first {
            if c.value.is_zero() {
                continue;
            }
            let mark = image.len();
            image.extend_from_slice(&c.image);
            go(rest, image, &value * &c.value, &centralizer * &c.centralizer, acc);
            image.truncate(mark);
        }
    }
    go(&per_factor, &mut Vec::new(), BigInt::one(), BigInt::one(), &mut acc);

    Ok(ClassFunction::from_fn(n, |mu| {
        let v = acc.get(mu).cloned().unwrap_or_else(BigRational::zero) * BigRational::from(centralizer_order(mu));
        assert!(v.is_integer(), "induced character value {v} at {mu} is not an integer");
        v.to_integer()
    }))
}

/// Induction from a Young subgroup `S_{n_1} × ... × S_{n_k}`.
pub fn induce_young(parts: &[(usize, CharSpec)]) -> Result<ClassFunction> {
    let factors: Vec<Factor> = parts.iter().map(|(m, c)| Factor::Young(*m, c.clone())).collect();
    induce(&factors)
}

/// `Ind_{W_r}^{S_2r}` of `ε` or the trivial character.
pub fn hyperoct_induced(r: usize, which: HyperoctChar) -> ClassFunction {
    induce(&[Factor::Hyperoct(r, which)]).expect("hyperoctahedral factor is always well formed")
}

/// Multiplicities of irreducibles in a representation of `S_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalRepSum {
    n: usize,
    mult: BTreeMap<YoungDiagram, u64>,
}

impl FormalRepSum {
    pub fn new(n: usize) -> Self {
        FormalRepSum { n, mult: BTreeMap::new() }
    }

    /// The trivial representation of `S_0`.
    pub fn unit() -> Self {
        let mut s = Self::new(0);
        s.add(&YoungDiagram::empty(), 1);
        s
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, shape: &YoungDiagram, k: u64) {
        assert_eq!(shape.size(), self.n, "constituent {shape} has wrong degree");
        if k > 0 {
            *self.mult.entry(shape.clone()).or_insert(0) += k;
        }
    }

    pub fn merge(&mut self, other: &FormalRepSum) {
        for (shape, &k) in &other.mult {
            self.add(shape, k);
        }
    }

    pub fn get(&self, shape: &YoungDiagram) -> u64 {
        self.mult.get(shape).copied().unwrap_or(0)
    }

    /// Nonzero multiplicities, in ascending diagram order.
    pub fn iter(&self) -> impl Iterator<Item = (&YoungDiagram, u64)> {
        self.mult.iter().map(|(k, &v)| (k, v))
    }

    pub fn total_dimension(&self) -> u64 {
        self.iter().map(|(s, k)| k * dimension(s)).sum()
    }

    pub fn recompose(&self) -> ClassFunction {
        let table = character_table(self.n);
        ClassFunction::from_fn(self.n, |mu| {
            self.iter().map(|(s, k)| BigInt::from(k) * table.value(s, mu)).sum()
        })
    }
}

impl fmt::Display for FormalRepSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.mult.iter().rev().map(|(s, k)| format!("{s}: {k}")).collect();
        write!(f, "{{{}}}", terms.join(", "))
    }
}

impl Serialize for FormalRepSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.mult.len()))?;
        for (k, v) in self.mult.iter().rev() {
            map.serialize_entry(&k.to_string(), v)?;
        }
        map.end()
    }
}

/// `⟨f, χ^ι⟩` for every irreducible `ι`, as exact rationals.
pub fn virtual_multiplicities(f: &ClassFunction) -> BTreeMap<YoungDiagram, BigRational> {
    let table = character_table(f.n);
    table
        .partitions
        .iter()
        .map(|shape| {
            let m = inner_product(f, &table.character(shape)).expect("same degree");
            (shape.clone(), m)
        })
        .collect()
}

/// Decomposes a genuine character into irreducibles.
///
/// Panics if some multiplicity is negative or fractional: the input was not
/// a character, which signals a bug upstream.
pub fn decompose(f: &ClassFunction) -> FormalRepSum {
    let mut out = FormalRepSum::new(f.n);
    for (shape, m) in virtual_multiplicities(f) {
        assert!(m.is_integer() && !m.is_negative(), "multiplicity of {shape} is {m}");
        out.add(&shape, m.to_integer().to_u64().expect("multiplicity fits in u64"));
    }
    out
}
