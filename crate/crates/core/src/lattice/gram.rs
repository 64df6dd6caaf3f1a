use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::ExactRational;

/// Symmetric matrix of exact rationals, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    entries: Vec<Vec<ExactRational>>,
}

/// Inertia of a real symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl Signature {
    pub fn new(positives: usize, negatives: usize, zeros: usize) -> Self {
        Signature { positives, negatives, zeros }
    }

    pub fn dimension(&self) -> usize {
        self.positives + self.negatives + self.zeros
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.positives, self.negatives, self.zeros)
    }
}

impl GramMatrix {
    pub fn new(entries: Vec<Vec<ExactRational>>) -> Result<Self> {
        let d = entries.len();
        if d == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (row, r) in entries.iter().enumerate() {
            if r.len() != d {
                return Err(Error::NotSquare { rows: d, row, len: r.len() });
            }
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate().skip(i + 1) {
                if x != &entries[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(GramMatrix { entries })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| ExactRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn diagonal(diag: &[ExactRational]) -> Self {
        let d = diag.len();
        let mut entries = vec![vec![ExactRational::zero(); d]; d];
        for (i, x) in diag.iter().enumerate() {
            entries[i][i] = x.clone();
        }
        GramMatrix { entries }
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &ExactRational {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<ExactRational>] {
        &self.entries
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &GramMatrix) -> GramMatrix {
        let (a, b) = (self.dimension(), other.dimension());
        let mut entries = vec![vec![ExactRational::zero(); a + b]; a + b];
        for (i, row) in self.entries.iter().enumerate() {
            entries[i][..a].clone_from_slice(row);
        }
        for (i, row) in other.entries.iter().enumerate() {
            entries[a + i][a..].clone_from_slice(row);
        }
        GramMatrix { entries }
    }

    /// `P^T G P` for the permutation sending basis vector `i` to `perm[i]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..dimension`.
    pub fn permuted(&self, perm: &[usize]) -> GramMatrix {
        let d = self.dimension();
        assert_eq!(perm.len(), d, "permutation has the wrong length");
        let mut seen = vec![false; d];
        for &p in perm {
            assert!(p < d && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut entries = vec![vec![ExactRational::zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                entries[perm[i]][perm[j]] = self.entries[i][j].clone();
            }
        }
        GramMatrix { entries }
    }

    /// Fraction-free (Bareiss) elimination on the matrix scaled to integers.
    pub fn determinant(&self) -> ExactRational {
        let d = self.dimension();
        let scale = self
            .entries
            .iter()
            .flatten()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let mut a: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.numer() * (&scale / x.denom())).collect())
            .collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..d {
            if a[k][k].is_zero() {
                match (k + 1..d).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return ExactRational::zero(),
                }
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = ExactRational::new(prev, num_traits::pow(scale, d));
        if negate {
            -det
        } else {
            det
        }
    }

    /// Exact inertia by symmetric elimination.
    ///
    /// A nonzero diagonal pivot contributes its sign; when the whole remaining
    /// diagonal vanishes but some off-diagonal `b` does not, the block
    /// `[[0, b], [b, 0]]` is split off and contributes one of each sign.
    pub fn signature(&self) -> Signature {
        let mut a = self.entries.clone();
        let mut sig = Signature::new(0, 0, 0);
        while !a.is_empty() {
            let k = a.len();
            if let Some(p) = (0..k).find(|&i| !a[i][i].is_zero()) {
                let pivot = a[p][p].clone();
                if pivot.is_positive() {
                    sig.positives += 1;
                } else {
                    sig.negatives += 1;
                }
                let rest: Vec<usize> = (0..k).filter(|&i| i != p).collect();
                a = rest
                    .iter()
                    .map(|&i| {
                        let f = &a[i][p] / &pivot;
                        rest.iter().map(|&j| &a[i][j] - &f * &a[p][j]).collect()
                    })
                    .collect();
                continue;
            }
            let pair = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
            let Some((p, q)) = pair else {
                sig.zeros += k;
                break;
            };
            sig.positives += 1;
            sig.negatives += 1;
            let b = a[p][q].clone();
            let rest: Vec<usize> = (0..k).filter(|&i| i != p && i != q).collect();
            // Schur complement of [[0, b], [b, 0]], whose inverse is [[0, 1/b], [1/b, 0]]
            a = rest
                .iter()
                .map(|&i| {
                    rest.iter()
                        .map(|&j| &a[i][j] - (&a[i][p] * &a[q][j] + &a[i][q] * &a[p][j]) / &b)
                        .collect()
                })
                .collect();
        }
        sig
    }

    pub fn rank(&self) -> usize {
        let s = self.signature();
        s.positives + s.negatives
    }

    /// Integral with every diagonal entry even. Errors if some entry is not an integer.
    pub fn is_even(&self) -> Result<bool> {
        for (i, r) in self.entries.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                if !x.is_integer() {
                    return Err(Error::NonInteger { i, j });
                }
            }
        }
        Ok((0..self.dimension()).all(|i| self.entries[i][i].numer().is_even()))
    }
}

fn lorentzian_diag(n: i64, head: i64) -> Result<GramMatrix> {
    if n < 1 {
        return Err(Error::Dimension { n, requirement: "n must be at least 1" });
    }
    let mut diag = vec![ExactRational::one(); n as usize + 1];
    diag[0] = ExactRational::from_integer((-head).into());
    Ok(GramMatrix::diagonal(&diag))
}

/// `diag(-1, 1, ..., 1)`, the odd unimodular lattice `I_{n,1}`.
pub fn gram_identity_lorentzian(n: i64) -> Result<GramMatrix> {
    lorentzian_diag(n, 1)
}

/// `diag(-3, 1, ..., 1)`.
pub fn gram_form_f(n: i64) -> Result<GramMatrix> {
    lorentzian_diag(n, 3)
}

/// The hyperbolic plane `U`.
pub fn gram_hyperbolic_plane() -> GramMatrix {
    GramMatrix::from_integers(&[vec![0, 1], vec![1, 0]]).expect("symmetric")
}

/// Root-basis Gram matrix of `E8`: chain `0-1-2-3-4-5-6` with node 7 hung on node 4.
pub fn gram_e8() -> GramMatrix {
    let mut rows = vec![vec![0i64; 8]; 8];
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges {
        rows[i][j] = -1;
        rows[j][i] = -1;
    }
    GramMatrix::from_integers(&rows).expect("symmetric")
}

/// `U + E8^((n-1)/8)`, the even unimodular lattice `II_{n,1}`.
pub fn gram_ii(n: i64) -> Result<GramMatrix> {
    if n < 9 || n.rem_euclid(8) != 1 {
        return Err(Error::Dimension { n, requirement: "II_{n,1} exists only for n = 1 mod 8, n >= 9" });
    }
    let e8 = gram_e8();
    Ok((0..(n - 1) / 8).fold(gram_hyperbolic_plane(), |g, _| g.direct_sum(&e8)))
}
