//! Coherent continuation representations of the type-A families, as sums of
//! irreducible `S_n`-representations.
//!
//! Every family is built two ways: `Strips` runs the branching rules for the
//! hyperoctahedral inductions and then Pieri expansions box strip by strip;
//! `Oracle` induces characters from class data and decomposes them.

use serde::{Deserialize, Serialize};

use crate::diagrams::{
    enumerate_partitions, horizontal_strip_superdiagrams, vertical_strip_superdiagrams, YoungDiagram,
};
use crate::error::{Error, Result};
use crate::symchar::{self, CharSpec, Factor, FormalRepSum, HyperoctChar};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Strips,
    Oracle,
}

/// Which family's representation to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CohSpec {
    Glr(usize),
    /// Number of coordinates, which must be even.
    Glh(usize),
    Glc(usize),
    U(usize, usize),
    /// `U(p, p)` on the class `n/2 + Z`.
    UHalf(usize),
}

/// Range of the Cartan parameter `s` in the unitary sum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CartanRange {
    /// `0 ≤ s ≤ min(p, q)`.
    #[default]
    Full,
    /// `0 ≤ s ≤ ⌊min(p, q)/2⌋`, kept only to show that it is wrong.
    Halved,
}

fn even_columns(n: usize) -> impl Iterator<Item = YoungDiagram> {
    enumerate_partitions(n).into_iter().filter(YoungDiagram::all_columns_even)
}

fn even_rows(n: usize) -> impl Iterator<Item = YoungDiagram> {
    enumerate_partitions(n).into_iter().filter(YoungDiagram::all_rows_even)
}

fn expand(
    start: impl Iterator<Item = YoungDiagram>,
    strips: &[usize],
    grow: fn(&YoungDiagram, usize) -> Vec<YoungDiagram>,
    out: &mut FormalRepSum,
) {
    let mut layer: Vec<(YoungDiagram, u64)> = start.map(|s| (s, 1)).collect();
    for &l in strips {
        let mut next = std::collections::BTreeMap::new();
        for (shape, k) in &layer {
            for bigger in grow(shape, l) {
                *next.entry(bigger).or_insert(0) += k;
            }
        }
        layer = next.into_iter().collect();
    }
    for (shape, k) in layer {
        out.add(&shape, k);
    }
}

fn decompose_sum(n: usize, terms: impl Iterator<Item = Vec<Factor>>) -> FormalRepSum {
    let mut out = FormalRepSum::new(n);
    for factors in terms {
        out.merge(&symchar::decompose(&symchar::induce(&factors).expect("well-formed factors")));
    }
    out
}

/// `⊕_{2r+i ≤ n} Ind_{W_r × S_i × S_{n-2r-i}} ε ⊗ 1 ⊗ 1`.
pub fn coh_glr(n: usize, method: Method) -> FormalRepSum {
    let terms = (0..=n / 2).flat_map(move |r| (0..=n - 2 * r).map(move |i| (r, i, n - 2 * r - i)));
    match method {
        Method::Strips => {
            let mut out = FormalRepSum::new(n);
            for (r, i, j) in terms {
                expand(even_columns(2 * r), &[i, j], horizontal_strip_superdiagrams, &mut out);
            }
            out
        }
        Method::Oracle => decompose_sum(
            n,
            terms.map(|(r, i, j)| {
                vec![
                    Factor::Hyperoct(r, HyperoctChar::Eps),
                    Factor::Young(i, CharSpec::Triv),
                    Factor::Young(j, CharSpec::Triv),
                ]
            }),
        ),
    }
}

/// `Ind_{W_{n/2}} ε`.
pub fn coh_glh(n: usize, method: Method) -> Result<FormalRepSum> {
    if n % 2 == 1 {
        return Err(Error::InvalidGroup(format!("GLH needs an even number of coordinates, got {n}")));
    }
    Ok(match method {
        Method::Strips => {
            let mut out = FormalRepSum::new(n);
            expand(even_columns(n), &[], horizontal_strip_superdiagrams, &mut out);
            out
        }
        Method::Oracle => symchar::decompose(&symchar::hyperoct_induced(n / 2, HyperoctChar::Eps)),
    })
}

/// Multiplicity of `φ(ι) ⊠ φ(ι')` in `Ind_{S_n}^{S_n × S_n} 1` (diagonal subgroup).
pub fn coh_glc_mult(left: &YoungDiagram, right: &YoungDiagram, method: Method) -> Result<u64> {
    if left.size() != right.size() {
        return Err(Error::SizeMismatch { expected: left.size(), got: right.size() });
    }
    Ok(match method {
        Method::Strips => u64::from(left == right),
        Method::Oracle => {
            let n = left.size();
            let product = symchar::character(left).mul(&symchar::character(right))?;
            let trivial = symchar::character(&YoungDiagram::from_parts(vec![n]));
            let m = symchar::inner_product(&product, &trivial)?;
            assert!(m.is_integer(), "diagonal multiplicity {m} is not integral");
            num_traits::ToPrimitive::to_u64(&m.to_integer()).expect("nonnegative")
        }
    })
}

/// `⊕_s Ind_{W_s × S_{p-s} × S_{q-s}} 1 ⊠ sgn ⊠ sgn` over `0 ≤ s ≤ min(p, q)`.
pub fn coh_u(p: usize, q: usize, method: Method) -> FormalRepSum {
    coh_u_with_range(p, q, method, CartanRange::Full)
}

pub fn coh_u_with_range(p: usize, q: usize, method: Method, range: CartanRange) -> FormalRepSum {
    let top = match range {
        CartanRange::Full => p.min(q),
        CartanRange::Halved => p.min(q) / 2,
    };
    let n = p + q;
    match method {
        Method::Strips => {
            let mut out = FormalRepSum::new(n);
            for s in 0..=top {
                expand(even_rows(2 * s), &[p - s, q - s], vertical_strip_superdiagrams, &mut out);
            }
            out
        }
        Method::Oracle => decompose_sum(
            n,
            (0..=top).map(|s| {
                vec![
                    Factor::Hyperoct(s, HyperoctChar::Triv),
                    Factor::Young(p - s, CharSpec::Sgn),
                    Factor::Young(q - s, CharSpec::Sgn),
                ]
            }),
        ),
    }
}

/// `Ind_{W_p}^{S_2p} 1`.
pub fn coh_u_half(p: usize, method: Method) -> FormalRepSum {
    match method {
        Method::Strips => {
            let mut out = FormalRepSum::new(2 * p);
            expand(even_rows(2 * p), &[], vertical_strip_superdiagrams, &mut out);
            out
        }
        Method::Oracle => symchar::decompose(&symchar::hyperoct_induced(p, HyperoctChar::Triv)),
    }
}

/// Builds the representation for `spec`. For `Glc(n)` the result lists the
/// diagonal: `ι` with multiplicity 1 stands for `φ(ι) ⊠ φ(ι)`.
pub fn coh(spec: CohSpec, method: Method) -> Result<FormalRepSum> {
    Ok(match spec {
        CohSpec::Glr(n) => coh_glr(n, method),
        CohSpec::Glh(n) => coh_glh(n, method)?,
        CohSpec::Glc(n) => {
            let mut out = FormalRepSum::new(n);
            for shape in enumerate_partitions(n) {
                out.add(&shape, coh_glc_mult(&shape, &shape, method)?);
            }
            out
        }
        CohSpec::U(p, q) => coh_u(p, q, method),
        CohSpec::UHalf(p) => coh_u_half(p, method),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paintings::{count_paintings, count_paintings_a_signature, PaintingType};
    use crate::symchar::dimension;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn rep(n: usize, terms: &[(&[usize], u64)]) -> FormalRepSum {
        let mut s = FormalRepSum::new(n);
        for (r, k) in terms {
            s.add(&yd(r), *k);
        }
        s
    }

    #[test]
    fn small_examples() {
        for m in [Method::Strips, Method::Oracle] {
            assert_eq!(coh_glr(1, m), rep(1, &[(&[1], 2)]));
            assert_eq!(coh_glr(2, m), rep(2, &[(&[2], 3), (&[1, 1], 2)]));
            assert_eq!(coh_glh(2, m).unwrap(), rep(2, &[(&[1, 1], 1)]));
            assert_eq!(coh_glh(4, m).unwrap(), rep(4, &[(&[2, 2], 1), (&[1, 1, 1, 1], 1)]));
            assert_eq!(coh_u(2, 1, m), rep(3, &[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)]));
            assert_eq!(coh_u(1, 0, m), rep(1, &[(&[1], 1)]));
            assert_eq!(coh_u_half(1, m), rep(2, &[(&[2], 1)]));
            assert_eq!(coh_u_half(2, m), rep(4, &[(&[4], 1), (&[2, 2], 1)]));
            assert_eq!(coh_glc_mult(&yd(&[2, 1]), &yd(&[2, 1]), m).unwrap(), 1);
            assert_eq!(coh_glc_mult(&yd(&[3]), &yd(&[2, 1]), m).unwrap(), 0);
            let diag: u64 = enumerate_partitions(3)
                .iter()
                .flat_map(|a| enumerate_partitions(3).into_iter().map(move |b| (a.clone(), b)))
                .map(|(a, b)| coh_glc_mult(&a, &b, m).unwrap())
                .sum();
            assert_eq!(diag, 3);
        }
        assert!(coh_glh(3, Method::Strips).is_err());
        assert!(coh_glc_mult(&yd(&[2]), &yd(&[1]), Method::Strips).is_err());
    }

    #[test]
    fn degenerate_ranks() {
        assert_eq!(coh_glr(0, Method::Strips), FormalRepSum::unit());
        assert_eq!(coh_u(0, 0, Method::Oracle), FormalRepSum::unit());
        assert_eq!(coh_u_half(0, Method::Strips), FormalRepSum::unit());
    }

    #[test]
    fn methods_agree() {
        for n in 1..=7 {
            assert_eq!(coh_glr(n, Method::Strips), coh_glr(n, Method::Oracle), "GLR {n}");
        }
        for n in (2..=8).step_by(2) {
            assert_eq!(coh_glh(n, Method::Strips).unwrap(), coh_glh(n, Method::Oracle).unwrap());
        }
        for p in 0..=4 {
            for q in 0..=4 {
                assert_eq!(coh_u(p, q, Method::Strips), coh_u(p, q, Method::Oracle), "U({p},{q})");
            }
        }
    }

    #[test]
    fn glr_dimension_is_sum_of_indices() {
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        for n in 1..=8 {
            let expected: u64 = (0..=n / 2)
                .flat_map(|r| (0..=n - 2 * r).map(move |i| (r, i)))
                .map(|(r, i)| fact(n) / ((1u64 << r) * fact(r) * fact(i) * fact(n - 2 * r - i)))
                .sum();
            assert_eq!(coh_glr(n, Method::Strips).total_dimension(), expected);
        }
    }

    #[test]
    fn multiplicities_count_paintings() {
        for n in 1..=7 {
            let glr = coh_glr(n, Method::Strips);
            for shape in enumerate_partitions(n) {
                assert_eq!(glr.get(&shape), count_paintings(&shape, PaintingType::AR));
                assert!(dimension(&shape) > 0);
            }
        }
        let u = coh_u(2, 1, Method::Strips);
        for shape in enumerate_partitions(3) {
            assert_eq!(u.get(&shape), count_paintings_a_signature(&shape, 2, 1).unwrap());
        }
    }

    #[test]
    fn halved_range_breaks_the_unitary_example() {
        let halved = coh_u_with_range(2, 1, Method::Strips, CartanRange::Halved);
        assert_eq!(halved, rep(3, &[(&[2, 1], 1), (&[1, 1, 1], 1)]));
        assert_ne!(halved.get(&yd(&[3])), 1);
    }
}
