//! Assigned Young diagrams: label fillings with a prescribed content whose
//! label prefixes are diagrams and whose columns never repeat a label.
//! Their counts are Kostka numbers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::diagrams::{horizontal_strip_superdiagrams, YoungDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assignment {
    shape: YoungDiagram,
    /// Labels are 1-based.
    rows: Vec<Vec<usize>>,
}

impl Assignment {
    pub fn new(shape: YoungDiagram, rows: Vec<Vec<usize>>, content: &YoungDiagram) -> Result<Self> {
        if rows.len() != shape.num_rows() || rows.iter().zip(shape.rows()).any(|(r, &l)| r.len() != l) {
            return Err(Error::Parse(format!("label rows do not match shape {shape}")));
        }
        if !is_valid_assignment(&shape, &rows, content) {
            return Err(Error::Parse("filling is not an assignment of this content".into()));
        }
        Ok(Assignment { shape, rows })
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// The diagrams formed by labels `<= 1`, `<= 2`, ..., `<= max`.
    pub fn prefix_shapes(&self) -> Vec<YoungDiagram> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        (1..=max)
            .map(|n| {
                YoungDiagram::from_parts(
                    self.rows.iter().map(|r| r.iter().filter(|&&x| x <= n).count()).collect(),
                )
            })
            .collect()
    }
}

fn check_content(shape: &YoungDiagram, content: &YoungDiagram) -> Result<()> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch { expected: shape.size(), got: content.size() });
    }
    Ok(())
}

/// Checks the defining properties literally: label counts, every label
/// prefix `{1..n}` occupies a diagram, and no label repeats in a column.
pub fn is_valid_assignment(shape: &YoungDiagram, rows: &[Vec<usize>], content: &YoungDiagram) -> bool {
    let n_labels = content.num_rows();
    for (i, &d) in content.rows().iter().enumerate() {
        if rows.iter().flatten().filter(|&&x| x == i + 1).count() != d {
            return false;
        }
    }
    if rows.iter().flatten().any(|&x| x == 0 || x > n_labels) {
        return false;
    }
    for n in 1..=n_labels {
        let mut above = usize::MAX;
        for row in rows {
            let kept: Vec<bool> = row.iter().map(|&x| x <= n).collect();
            if kept.windows(2).any(|w| !w[0] && w[1]) {
                return false;
            }
            let len = kept.iter().filter(|&&b| b).count();
            if len > above {
                return false;
            }
            above = len;
        }
    }
    for j in 0..shape.num_cols() {
        let mut col: Vec<usize> = (0..shape.col(j)).map(|i| rows[i][j]).collect();
        col.sort_unstable();
        if col.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
    }
    true
}

/// All assignments of the given content on `shape`, in lexicographic order of
/// their row-major label sequence.
pub fn enumerate_assignments(shape: &YoungDiagram, content: &YoungDiagram) -> Result<Vec<Assignment>> {
    check_content(shape, content)?;
    let mut out = Vec::new();
    backtrack(shape, content, |rows| {
        out.push(Assignment { shape: shape.clone(), rows: rows.to_vec() })
    });
    Ok(out)
}

pub fn count_assignments(shape: &YoungDiagram, content: &YoungDiagram) -> Result<u64> {
    check_content(shape, content)?;
    let mut n = 0u64;
    backtrack(shape, content, |_| n += 1);
    Ok(n)
}

/// Row-wise fill: each label is at least its left neighbour and exceeds the
/// label above it, with remaining per-label budgets.
fn backtrack(shape: &YoungDiagram, content: &YoungDiagram, mut emit: impl FnMut(&[Vec<usize>])) {
    let cells: Vec<(usize, usize)> = shape.boxes().map(|b| (b.row - 1, b.col - 1)).collect();
    let mut rows: Vec<Vec<usize>> = shape.rows().iter().map(|&l| vec![0; l]).collect();
    let mut budget: Vec<usize> = content.rows().to_vec();
    let n_labels = budget.len();

    fn go(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<usize>>,
        budget: &mut Vec<usize>,
        n_labels: usize,
        emit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let Some(&(i, j)) = cells.get(k) else {
            emit(rows);
            return;
        };
        let left = if j > 0 { rows[i][j - 1] } else { 1 };
        let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
        // a label in row i needs i smaller labels stacked above it
        for label in left.max(above).max(i + 1)..=n_labels {
            if budget[label - 1] == 0 {
                continue;
            }
            budget[label - 1] -= 1;
            rows[i][j] = label;
            go(k + 1, cells, rows, budget, n_labels, emit);
            budget[label - 1] += 1;
        }
        rows[i][j] = 0;
    }
    go(0, &cells, &mut rows, &mut budget, n_labels, &mut emit);
}

/// Multiplicity of `shape` after iterated horizontal-strip expansion of the
/// empty diagram by strips of sizes `d_1, d_2, ...`.
pub fn kostka_via_pieri(shape: &YoungDiagram, content: &YoungDiagram) -> Result<u64> {
    check_content(shape, content)?;
    let mut paths: BTreeMap<YoungDiagram, u64> = BTreeMap::from([(YoungDiagram::empty(), 1)]);
    for &d in content.rows() {
        let mut next = BTreeMap::new();
        for (mu, &k) in &paths {
            for nu in horizontal_strip_superdiagrams(mu, d) {
                if shape.contains(&nu) {
                    *next.entry(nu).or_insert(0) += k;
                }
            }
        }
        paths = next;
    }
    Ok(paths.get(shape).copied().unwrap_or(0))
}
