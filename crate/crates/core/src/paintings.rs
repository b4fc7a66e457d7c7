//! Painted Young diagrams.
//!
//! A painting fills each box with one of `•, s, r, c, d`. The valid
//! paintings are exactly the chains
//!
//! ```text
//! κ0 ⊆ κ1 ⊆ κ2 ⊆ κ3 ⊆ κ4 = ι
//! ```
//!
//! of Young diagrams where `κ0` holds the `•` boxes, `κ1/κ0` (the `s` boxes)
//! and `κ2/κ1` (the `r` boxes) are vertical strips, and `κ3/κ2` (the `c`
//! boxes) and `κ4/κ3` (the `d` boxes) are horizontal strips. Enumeration walks
//! these chains from the outside in.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::{
    horizontal_strip_subdiagrams, vertical_strip_subdiagrams, YoungDiagram,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Dot,
    S,
    R,
    C,
    D,
}

impl Symbol {
    pub const ALL: [Symbol; 5] = [Symbol::Dot, Symbol::S, Symbol::R, Symbol::C, Symbol::D];

    pub fn as_str(self) -> &'static str {
        match self {
            Symbol::Dot => "•",
            Symbol::S => "s",
            Symbol::R => "r",
            Symbol::C => "c",
            Symbol::D => "d",
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Symbol::Dot => "*",
            other => other.as_str(),
        }
    }

    pub fn parse(s: &str) -> Option<Symbol> {
        match s {
            "•" | "*" => Some(Symbol::Dot),
            "s" => Some(Symbol::S),
            "r" => Some(Symbol::R),
            "c" => Some(Symbol::C),
            "d" => Some(Symbol::D),
            _ => None,
        }
    }

    /// Position in the nesting chain: `•` boxes are innermost, `d` outermost.
    fn layer(self) -> usize {
        self as usize
    }
}

/// Painting types, each restricting the alphabet and a parity condition on `•`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PaintingType {
    /// `{•, c, d}`, every column has an even number of `•`.
    AR,
    /// `{•}`, every column even.
    AH,
    /// `{•, s, r}`, every row has an even number of `•`.
    A,
    /// `{•}` only, every row even.
    ADegenerate,
}

impl PaintingType {
    pub fn allows(self, sym: Symbol) -> bool {
        match self {
            PaintingType::AR => matches!(sym, Symbol::Dot | Symbol::C | Symbol::D),
            PaintingType::AH | PaintingType::ADegenerate => sym == Symbol::Dot,
            PaintingType::A => matches!(sym, Symbol::Dot | Symbol::S | Symbol::R),
        }
    }

    /// Parity condition on the `•` sub-diagram.
    fn dots_ok(self, dots: &YoungDiagram) -> bool {
        match self {
            PaintingType::AR | PaintingType::AH => dots.all_columns_even(),
            PaintingType::A | PaintingType::ADegenerate => dots.all_rows_even(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Painting {
    shape: YoungDiagram,
    rows: Vec<Vec<Symbol>>,
}

impl Painting {
    /// Validates a filling against the painting axioms.
    pub fn new(shape: YoungDiagram, rows: Vec<Vec<Symbol>>) -> Result<Self> {
        if rows.len() != shape.num_rows() || rows.iter().zip(shape.rows()).any(|(r, &l)| r.len() != l) {
            return Err(Error::Parse(format!("symbol rows do not match shape {shape}")));
        }
        let p = Painting { shape, rows };
        if !is_valid_painting(&p.shape, &p.rows) {
            return Err(Error::Parse("filling violates the painting axioms".into()));
        }
        Ok(p)
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    /// Symbol at 0-based `(row, col)`.
    pub fn at(&self, row: usize, col: usize) -> Symbol {
        self.rows[row][col]
    }

    pub fn count(&self, sym: Symbol) -> usize {
        self.rows.iter().flatten().filter(|&&s| s == sym).count()
    }

    /// The nested diagrams `[κ0, κ1, κ2, κ3]`.
    pub fn chain(&self) -> [YoungDiagram; 4] {
        std::array::from_fn(|k| {
            let rows = self
                .rows
                .iter()
                .map(|row| row.iter().filter(|s| s.layer() <= k).count())
                .collect();
            YoungDiagram::from_sorted(rows)
        })
    }

    pub fn signature(&self) -> Result<Signature> {
        if self.rows.iter().flatten().any(|s| matches!(s, Symbol::C | Symbol::D)) {
            return Err(Error::NotTypeA);
        }
        let half_dots = self.count(Symbol::Dot) / 2;
        Ok(Signature { p: half_dots + self.count(Symbol::S), q: half_dots + self.count(Symbol::R) })
    }

    fn from_chain(shape: &YoungDiagram, chain: &[YoungDiagram; 4]) -> Self {
        let rows = shape
            .rows()
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (0..len)
                    .map(|j| {
                        let layer = chain.iter().position(|k| j < k.row(i)).unwrap_or(4);
                        Symbol::ALL[layer]
                    })
                    .collect()
            })
            .collect();
        Painting { shape: shape.clone(), rows }
    }
}

impl fmt::Display for Painting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|s| s.as_str()).collect()).collect();
        write!(f, "{}", rows.join("/"))
    }
}

#[derive(Serialize, Deserialize)]
struct PaintingJson {
    shape: YoungDiagram,
    rows: Vec<Vec<String>>,
}

impl Serialize for Painting {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PaintingJson {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x.as_str().to_string()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Painting {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PaintingJson::deserialize(d)?;
        let rows = raw
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| Symbol::parse(s).ok_or_else(|| D::Error::custom(format!("unknown symbol {s:?}"))))
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Painting::new(raw.shape, rows).map_err(D::Error::custom)
    }
}

/// Checks the three painting axioms directly on a symbol grid.
pub fn is_valid_painting(shape: &YoungDiagram, rows: &[Vec<Symbol>]) -> bool {
    // Removing the outer layers must leave a diagram each time.
    for k in 0..4 {
        let kept: Vec<Vec<bool>> =
            rows.iter().map(|r| r.iter().map(|s| s.layer() <= k).collect()).collect();
        for (i, row) in kept.iter().enumerate() {
            // kept boxes in each row form a prefix
            if row.windows(2).any(|w| !w[0] && w[1]) {
                return false;
            }
            // and the row is no longer than the one above
            if i > 0 {
                let above = kept[i - 1].iter().filter(|&&b| b).count();
                if row.iter().filter(|&&b| b).count() > above {
                    return false;
                }
            }
        }
    }
    for row in rows {
        for sym in [Symbol::S, Symbol::R] {
            if row.iter().filter(|&&s| s == sym).count() > 1 {
                return false;
            }
        }
    }
    for j in 0..shape.num_cols() {
        for sym in [Symbol::C, Symbol::D] {
            let n = (0..shape.col(j)).filter(|&i| rows[i][j] == sym).count();
            if n > 1 {
                return false;
            }
        }
    }
    true
}

/// Whether a valid painting also has type `t`.
pub fn has_type(p: &Painting, t: PaintingType) -> bool {
    p.rows.iter().flatten().all(|&s| t.allows(s)) && t.dots_ok(&p.chain()[0])
}

/// All paintings of type `t` on `shape`, ordered lexicographically by chain.
pub fn enumerate_paintings(shape: &YoungDiagram, t: PaintingType) -> Vec<Painting> {
    let mut chains = Vec::new();
    for_each_chain(shape, t, |chain| chains.push(chain.clone()));
    chains.sort();
    chains.iter().map(|c| Painting::from_chain(shape, c)).collect()
}

pub fn count_paintings(shape: &YoungDiagram, t: PaintingType) -> u64 {
    let mut n = 0u64;
    for_each_chain(shape, t, |_| n += 1);
    n
}

/// Number of type-A paintings on `shape` with signature `(p, q)`.
pub fn count_paintings_a_signature(shape: &YoungDiagram, p: usize, q: usize) -> Result<u64> {
    if p + q != shape.size() {
        return Err(Error::SizeMismatch { expected: shape.size(), got: p + q });
    }
    let mut n = 0u64;
    for_each_chain(shape, PaintingType::A, |chain| {
        let half_dots = chain[0].size() / 2;
        let s = chain[1].size() - chain[0].size();
        if half_dots + s == p {
            n += 1;
        }
    });
    Ok(n)
}

/// Reference enumerator: every map from boxes to symbols, filtered by
/// `is_valid_painting` and, if given, the type. Exponential in `|shape|`.
pub fn brute_force_paintings(shape: &YoungDiagram, t: Option<PaintingType>) -> Vec<Painting> {
    let cells: Vec<_> = shape.boxes().collect();
    let total = 5usize.pow(cells.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut rows: Vec<Vec<Symbol>> = shape.rows().iter().map(|&l| vec![Symbol::Dot; l]).collect();
        for b in &cells {
            rows[b.row - 1][b.col - 1] = Symbol::ALL[c % 5];
            c /= 5;
        }
        if is_valid_painting(shape, &rows) {
            let p = Painting { shape: shape.clone(), rows };
            if t.is_none_or(|t| has_type(&p, t)) {
                out.push(p);
            }
        }
    }
    out
}

/// Calls `f` on every chain `[κ0, κ1, κ2, κ3]` of a type-`t` painting of `shape`.
fn for_each_chain(shape: &YoungDiagram, t: PaintingType, mut f: impl FnMut(&[YoungDiagram; 4])) {
    let single = |d: &YoungDiagram| vec![d.clone()];
    // d layer, then c layer: horizontal strips (or nothing if disallowed).
    let k3s = if t.allows(Symbol::D) { horizontal_strip_subdiagrams(shape) } else { single(shape) };
    for k3 in &k3s {
        let k2s = if t.allows(Symbol::C) { horizontal_strip_subdiagrams(k3) } else { single(k3) };
        for k2 in &k2s {
            let k1s = if t.allows(Symbol::R) { vertical_strip_subdiagrams(k2) } else { single(k2) };
            for k1 in &k1s {
                let k0s = if t.allows(Symbol::S) { vertical_strip_subdiagrams(k1) } else { single(k1) };
                for k0 in &k0s {
                    if t.dots_ok(k0) {
                        f(&[k0.clone(), k1.clone(), k2.clone(), k3.clone()]);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::enumerate_partitions;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn grid(spec: &[&str]) -> Vec<Vec<Symbol>> {
        spec.iter()
            .map(|r| r.chars().map(|c| Symbol::parse(&c.to_string()).unwrap()).collect())
            .collect()
    }

    #[test]
    fn single_row_ar_has_n_plus_one() {
        for n in 1..=8 {
            assert_eq!(count_paintings(&yd(&[n]), PaintingType::AR), n as u64 + 1);
        }
    }

    #[test]
    fn u21_paintings_on_21() {
        let ps: Vec<_> = enumerate_paintings(&yd(&[2, 1]), PaintingType::A)
            .into_iter()
            .filter(|p| p.signature().unwrap() == Signature { p: 2, q: 1 })
            .collect();
        let expect = [grid(&["••", "s"]), grid(&["sr", "s"])];
        assert_eq!(ps.len(), 2);
        for e in expect {
            assert!(ps.iter().any(|p| p.rows == e));
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_paintings(&yd(&[1, 1]), PaintingType::AH).len(), 1);
        assert_eq!(count_paintings(&yd(&[1]), PaintingType::AR), 2);
        for n in 0..=8 {
            for shape in enumerate_partitions(n) {
                let ah = u64::from(shape.all_columns_even());
                assert_eq!(count_paintings(&shape, PaintingType::AH), ah);
                let deg = u64::from(shape.all_rows_even());
                assert_eq!(count_paintings(&shape, PaintingType::ADegenerate), deg);
            }
        }
    }

    #[test]
    fn signature_examples() {
        let p = Painting::new(yd(&[3]), grid(&["••s"])).unwrap();
        assert_eq!(p.signature().unwrap(), Signature { p: 2, q: 1 });
        let p = Painting::new(yd(&[2, 2]), grid(&["••", "••"])).unwrap();
        assert_eq!(p.signature().unwrap(), Signature { p: 2, q: 2 });
        let p = Painting::new(yd(&[2, 1]), grid(&["sr", "s"])).unwrap();
        assert_eq!(p.signature().unwrap(), Signature { p: 2, q: 1 });
        let p = Painting::new(yd(&[1]), grid(&["c"])).unwrap();
        assert_eq!(p.signature(), Err(Error::NotTypeA));
    }

    #[test]
    fn signature_counts() {
        assert_eq!(count_paintings_a_signature(&yd(&[3]), 2, 1).unwrap(), 1);
        assert_eq!(count_paintings_a_signature(&yd(&[2, 1]), 2, 1).unwrap(), 2);
        assert_eq!(count_paintings_a_signature(&yd(&[1, 1, 1]), 2, 1).unwrap(), 1);
        assert!(count_paintings_a_signature(&yd(&[2]), 2, 1).is_err());
    }

    #[test]
    fn chain_enumeration_matches_brute_force() {
        for n in 0..=5 {
            for shape in enumerate_partitions(n) {
                let all = brute_force_paintings(&shape, None);
                let mut via_chain = 0;
                for k3 in horizontal_strip_subdiagrams(&shape) {
                    for k2 in horizontal_strip_subdiagrams(&k3) {
                        for k1 in vertical_strip_subdiagrams(&k2) {
                            via_chain += vertical_strip_subdiagrams(&k1).len();
                        }
                    }
                }
                assert_eq!(all.len(), via_chain, "shape {shape}");
                for t in [PaintingType::AR, PaintingType::AH, PaintingType::A, PaintingType::ADegenerate] {
                    let mut brute: Vec<_> = all.iter().filter(|p| has_type(p, t)).cloned().collect();
                    let mut fast = enumerate_paintings(&shape, t);
                    brute.sort_by_key(|p| p.chain());
                    fast.sort_by_key(|p| p.chain());
                    assert_eq!(brute, fast, "shape {shape} type {t:?}");
                }
            }
        }
    }

    #[test]
    fn invalid_fillings_rejected() {
        // two s in one row
        assert!(Painting::new(yd(&[2]), grid(&["ss"])).is_err());
        // two c in one column
        assert!(Painting::new(yd(&[1, 1]), grid(&["c", "c"])).is_err());
        // d left of a dot
        assert!(Painting::new(yd(&[2]), grid(&["d•"])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = Painting::new(yd(&[2, 1]), grid(&["sr", "s"])).unwrap();
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"{"shape":[2,1],"rows":[["s","r"],["s"]]}"#);
        let back: Painting = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        let ascii: Painting =
            serde_json::from_str(r#"{"shape":[2,1],"rows":[["*","*"],["s"]]}"#).unwrap();
        assert_eq!(ascii.count(Symbol::Dot), 2);
    }
}
