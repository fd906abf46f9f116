//! Classical root systems at numeric rank, in orthogonal coordinates.
//!
//! The inner product carries a per-series scale chosen so that long roots
//! have squared length 2. With that normalization half the adjoint Casimir
//! comes out as `N` for `sl(N)`, `N-2` for `so(N)` and `n+1` for `sp(2n)`,
//! and quantum dimension arguments land in x/2 units without per-series
//! special cases.

use num_traits::Zero;

use crate::symbolic::{int, rat, Rat};

/// Classical series label in Cartan notation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Series {
    A,
    B,
    C,
    D,
}

/// Positive roots of a classical simple Lie algebra at a fixed rank.
#[derive(Clone, Debug)]
pub struct RootSystem {
    series: Series,
    rank: usize,
    positive_roots: Vec<Vec<Rat>>,
    form_scale: Rat,
}

impl RootSystem {
    pub fn new(series: Series, rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        if series == Series::D {
            assert!(rank >= 2, "D series needs rank >= 2");
        }
        let dim = match series {
            Series::A => rank + 1,
            _ => rank,
        };
        let unit = |i: usize, sign_i: i64, j: usize, sign_j: i64| -> Vec<Rat> {
            let mut v = vec![Rat::zero(); dim];
            v[i] = int(sign_i);
            if i != j {
                v[j] = int(sign_j);
            }
            v
        };
        let mut roots = Vec::new();
        match series {
            Series::A => {
                for i in 0..dim {
                    for j in (i + 1)..dim {
                        roots.push(unit(i, 1, j, -1));
                    }
                }
            }
            Series::B | Series::C | Series::D => {
                for i in 0..rank {
                    for j in (i + 1)..rank {
                        roots.push(unit(i, 1, j, -1));
                        roots.push(unit(i, 1, j, 1));
                    }
                }
                match series {
                    Series::B => {
                        for i in 0..rank {
                            roots.push(unit(i, 1, i, 1));
                        }
                    }
                    Series::C => {
                        for i in 0..rank {
                            roots.push(unit(i, 2, i, 2));
                        }
                    }
                    Series::D => {}
                    Series::A => unreachable!(),
                }
            }
        }
        let form_scale = match series {
            Series::C => rat(1, 2),
            _ => int(1),
        };
        RootSystem {
            series,
            rank,
            positive_roots: roots,
            form_scale,
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the ambient orthogonal coordinate space.
    pub fn ambient_dim(&self) -> usize {
        match self.series {
            Series::A => self.rank + 1,
            _ => self.rank,
        }
    }

    pub fn positive_roots(&self) -> &[Vec<Rat>] {
        &self.positive_roots
    }

    pub fn form_scale(&self) -> &Rat {
        &self.form_scale
    }

    /// Scaled inner product of two ambient vectors.
    pub fn inner(&self, u: &[Rat], v: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (a, b) in u.iter().zip(v.iter()) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc * &self.form_scale
    }

    /// Half the sum of all positive roots.
    pub fn weyl_vector(&self) -> Vec<Rat> {
        let mut rho = vec![Rat::zero(); self.ambient_dim()];
        for root in &self.positive_roots {
            for (r, c) in rho.iter_mut().zip(root.iter()) {
                *r += c;
            }
        }
        let half = rat(1, 2);
        rho.iter().map(|c| c * &half).collect()
    }
}

/// Standard positive-root count for the series at the given rank.
pub fn expected_root_count(series: Series, rank: usize) -> usize {
    match series {
        Series::A => rank * (rank + 1) / 2,
        Series::B | Series::C => rank * rank,
        Series::D => rank * (rank - 1),
    }
}
