//! Root-system data for the classical series in the orthonormal ε-basis.
//!
//! Roots are integer vectors over ε_1..ε_l with `(ε_i, ε_j) = δ_ij`. The A
//! series is indexed by the `l` of gl_l (so it carries `l−1` simple roots);
//! B, C, D carry `l`. Normal orderings are stored as the literal sequences
//! used to define composite root vectors, not recomputed from reduced
//! words.

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeriesKind {
    A,
    B,
    C,
    D,
}

impl SeriesKind {
    pub fn letter(self) -> &'static str {
        match self {
            SeriesKind::A => "A",
            SeriesKind::B => "B",
            SeriesKind::C => "C",
            SeriesKind::D => "D",
        }
    }

    /// Inclusive rank validity range.
    pub fn rank_range(self) -> (usize, usize) {
        match self {
            SeriesKind::A | SeriesKind::B => (3, usize::MAX),
            SeriesKind::C => (2, usize::MAX),
            SeriesKind::D => (4, usize::MAX),
        }
    }
}

/// A series with a validated rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Series {
    pub kind: SeriesKind,
    pub l: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSysError {
    #[error("rank {l} is out of range for series {kind:?}")]
    RankOutOfRange { kind: SeriesKind, l: usize },
}

impl Series {
    pub fn new(kind: SeriesKind, l: usize) -> Result<Series, RootSysError> {
        let (lo, hi) = kind.rank_range();
        if l < lo || l > hi {
            return Err(RootSysError::RankOutOfRange { kind, l });
        }
        Ok(Series { kind, l })
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind.letter(), self.l)
    }

    /// Number of simple roots (A in gl_l indexing has l−1).
    pub fn num_simple(&self) -> usize {
        match self.kind {
            SeriesKind::A => self.l - 1,
            _ => self.l,
        }
    }
}

/// A root as an integer vector over ε_1..ε_l.
pub type Root = Vec<i32>;

pub fn inner(a: &Root, b: &Root) -> i64 {
    a.iter().zip(b).map(|(x, y)| *x as i64 * *y as i64).sum()
}

fn eps(l: usize, i: usize) -> Root {
    let mut r = vec![0; l];
    r[i - 1] = 1;
    r
}

fn eps_diff(l: usize, i: usize, j: usize) -> Root {
    let mut r = vec![0; l];
    r[i - 1] += 1;
    r[j - 1] -= 1;
    r
}

fn eps_sum(l: usize, i: usize, j: usize) -> Root {
    let mut r = vec![0; l];
    r[i - 1] += 1;
    r[j - 1] += 1;
    r
}

pub fn neg(r: &Root) -> Root {
    r.iter().map(|x| -x).collect()
}

pub fn root_add(a: &Root, b: &Root) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Fully populated root data for one series and rank.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub series: Series,
    pub simple: Vec<Root>,
    pub positive: Vec<Root>,
    pub theta: Root,
    pub marks: Vec<i64>,
    pub cartan: Vec<Vec<i64>>,
    pub normal_ordering: Vec<Root>,
}

impl RootSystem {
    pub fn build(series: Series) -> RootSystem {
        let l = series.l;
        let mut simple: Vec<Root> = (1..l).map(|i| eps_diff(l, i, i + 1)).collect();
        match series.kind {
            SeriesKind::A => {}
            SeriesKind::B => simple.push(eps(l, l)),
            SeriesKind::C => {
                let mut r = vec![0; l];
                r[l - 1] = 2;
                simple.push(r);
            }
            SeriesKind::D => simple.push(eps_sum(l, l - 1, l)),
        }

        let mut positive: Vec<Root> = Vec::new();
        for i in 1..=l {
            for j in i + 1..=l {
                positive.push(eps_diff(l, i, j));
            }
        }
        match series.kind {
            SeriesKind::A => {}
            SeriesKind::B => {
                for i in 1..=l {
                    for j in i + 1..=l {
                        positive.push(eps_sum(l, i, j));
                    }
                }
                for k in 1..=l {
                    positive.push(eps(l, k));
                }
            }
            SeriesKind::C => {
                for i in 1..=l {
                    for j in i + 1..=l {
                        positive.push(eps_sum(l, i, j));
                    }
                }
                for k in 1..=l {
                    let mut r = vec![0; l];
                    r[k - 1] = 2;
                    positive.push(r);
                }
            }
            SeriesKind::D => {
                for i in 1..=l {
                    for j in i + 1..=l {
                        positive.push(eps_sum(l, i, j));
                    }
                }
            }
        }

        let theta = match series.kind {
            SeriesKind::A => eps_diff(l, 1, l),
            SeriesKind::B | SeriesKind::D => eps_sum(l, 1, 2),
            SeriesKind::C => {
                let mut r = vec![0; l];
                r[0] = 2;
                r
            }
        };

        let n = simple.len();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| 2 * inner(&simple[i], &simple[j]) / inner(&simple[i], &simple[i]))
                    .collect()
            })
            .collect();

        let marks = solve_in_simple_basis(&simple, &theta);
        let normal_ordering = normal_ordering(series);

        RootSystem {
            series,
            simple,
            positive,
            theta,
            marks,
            cartan,
            normal_ordering,
        }
    }

    /// Serre exponent `n_ij = 1 − a_ij` between distinct simple roots.
    pub fn serre_exponent(&self, i: usize, j: usize) -> u32 {
        (1 - self.cartan[i][j]) as u32
    }

    /// Serre exponent toward the affine node,
    /// `n_i0 = 1 + 2(α_i, θ)/(α_i, α_i)`.
    pub fn affine_exponent(&self, i: usize) -> u32 {
        let a = &self.simple[i];
        (1 + 2 * inner(a, &self.theta) / inner(a, a)) as u32
    }

    /// `2ρ = Σ_{β>0} β` as an ε-vector.
    pub fn two_rho(&self) -> Root {
        let mut r = vec![0; self.series.l];
        for b in &self.positive {
            r = root_add(&r, b);
        }
        r
    }
}

/// Express a lattice vector in the simple-root basis by exact integer
/// elimination.
pub fn solve_in_simple_basis(simple: &[Root], target: &Root) -> Vec<i64> {
    let n = simple.len();
    let l = target.len();
    let mut a: Vec<Vec<i128>> = (0..l)
        .map(|r| (0..n).map(|c| simple[c][r] as i128).collect())
        .collect();
    let mut b: Vec<i128> = target.iter().map(|x| *x as i128).collect();
    let mut row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..n {
        if let Some(p) = (row..l).find(|&r| a[r][col] != 0) {
            a.swap(row, p);
            b.swap(row, p);
            for r in 0..l {
                if r != row && a[r][col] != 0 {
                    let (num, den) = (a[r][col], a[row][col]);
                    let pivot_row = a[row].clone();
                    for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                        *x = *x * den - p * num;
                    }
                    b[r] = b[r] * den - b[row] * num;
                }
            }
            pivots.push((row, col));
            row += 1;
        }
    }
    let mut x = vec![0i64; n];
    for (r, c) in pivots {
        assert!(b[r] % a[r][c] == 0, "coordinates are not integral");
        x[c] = (b[r] / a[r][c]) as i64;
    }
    for v in b.iter().skip(row) {
        assert!(*v == 0, "target is not in the simple-root lattice");
    }
    x
}

/// The fixed normal ordering of the positive roots for each series.
fn normal_ordering(series: Series) -> Vec<Root> {
    let l = series.l;
    let mut ord: Vec<Root> = Vec::new();
    match series.kind {
        SeriesKind::A => {
            for i in 1..=l - 1 {
                for j in i + 1..=l {
                    ord.push(eps_diff(l, i, j));
                }
            }
        }
        SeriesKind::B => {
            for i in 1..=l - 1 {
                for j in i + 1..=l {
                    ord.push(eps_diff(l, i, j));
                }
                ord.push(eps(l, i));
                for j in (i + 1..=l).rev() {
                    ord.push(eps_sum(l, i, j));
                }
            }
            ord.push(eps(l, l));
        }
        SeriesKind::C => {
            for i in 1..=l - 1 {
                for j in i + 1..=l {
                    ord.push(eps_diff(l, i, j));
                }
                let mut two = vec![0; l];
                two[i - 1] = 2;
                ord.push(two);
                for j in (i + 1..=l).rev() {
                    ord.push(eps_sum(l, i, j));
                }
            }
            let mut two = vec![0; l];
            two[l - 1] = 2;
            ord.push(two);
        }
        SeriesKind::D => {
            for i in 1..=l - 1 {
                for j in i + 1..=l {
                    ord.push(eps_diff(l, i, j));
                }
                for j in (i + 1..=l).rev() {
                    ord.push(eps_sum(l, i, j));
                }
            }
        }
    }
    ord
}

/// The default series/rank grid used by the check suites.
pub fn default_grid() -> Vec<Series> {
    let mut g = Vec::new();
    for l in [3usize, 4, 5] {
        g.push(Series::new(SeriesKind::A, l).unwrap());
    }
    for l in [3usize, 4] {
        g.push(Series::new(SeriesKind::B, l).unwrap());
    }
    for l in [2usize, 3] {
        g.push(Series::new(SeriesKind::C, l).unwrap());
    }
    for l in [4usize, 5] {
        g.push(Series::new(SeriesKind::D, l).unwrap());
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_validation() {
        assert!(Series::new(SeriesKind::A, 2).is_err());
        assert!(Series::new(SeriesKind::B, 2).is_err());
        assert!(Series::new(SeriesKind::C, 1).is_err());
        assert!(Series::new(SeriesKind::D, 3).is_err());
        assert!(Series::new(SeriesKind::C, 2).is_ok());
    }

    #[test]
    fn a4_has_six_positive_roots_and_theta() {
        let rs = RootSystem::build(Series::new(SeriesKind::A, 4).unwrap());
        assert_eq!(rs.positive.len(), 6);
        assert_eq!(rs.theta, vec![1, 0, 0, -1]);
    }

    #[test]
    fn c2_normal_ordering() {
        let rs = RootSystem::build(Series::new(SeriesKind::C, 2).unwrap());
        assert_eq!(
            rs.normal_ordering,
            vec![vec![1, -1], vec![2, 0], vec![1, 1], vec![0, 2]]
        );
    }

    #[test]
    fn b3_counts_theta_marks() {
        let rs = RootSystem::build(Series::new(SeriesKind::B, 3).unwrap());
        assert_eq!(rs.positive.len(), 9);
        assert_eq!(rs.theta, vec![1, 1, 0]);
        assert_eq!(rs.marks, vec![1, 2, 2]);
    }

    #[test]
    fn inner_product_examples() {
        let a = RootSystem::build(Series::new(SeriesKind::A, 4).unwrap());
        for i in 0..a.simple.len() - 1 {
            assert_eq!(inner(&a.simple[i], &a.simple[i + 1]), -1);
        }
        let b = RootSystem::build(Series::new(SeriesKind::B, 3).unwrap());
        assert_eq!(inner(&b.simple[2], &b.simple[2]), 1);
        let c = RootSystem::build(Series::new(SeriesKind::C, 3).unwrap());
        assert_eq!(inner(&c.simple[2], &c.simple[2]), 4);
    }

    #[test]
    fn affine_exponents() {
        let a = RootSystem::build(Series::new(SeriesKind::A, 4).unwrap());
        assert_eq!(a.affine_exponent(0), 2);
        assert_eq!(a.affine_exponent(1), 1); // interior node commutes plainly
        assert_eq!(a.affine_exponent(a.simple.len() - 1), 2);
        let c = RootSystem::build(Series::new(SeriesKind::C, 2).unwrap());
        assert_eq!(c.affine_exponent(0), 3);
        let b = RootSystem::build(Series::new(SeriesKind::B, 3).unwrap());
        assert_eq!(b.affine_exponent(0), 1);
        assert_eq!(b.affine_exponent(1), 2);
        let d = RootSystem::build(Series::new(SeriesKind::D, 4).unwrap());
        assert_eq!(d.affine_exponent(1), 2);
    }

    #[test]
    fn grid_invariants() {
        for s in default_grid() {
            let rs = RootSystem::build(s);
            let l = s.l;
            let expect = match s.kind {
                SeriesKind::A => l * (l - 1) / 2,
                SeriesKind::B | SeriesKind::C => l * l,
                SeriesKind::D => l * (l - 1),
            };
            assert_eq!(rs.positive.len(), expect, "{}", s.label());
            let tt = inner(&rs.theta, &rs.theta);
            assert_eq!(tt, if s.kind == SeriesKind::C { 4 } else { 2 });
            assert!(rs.positive.contains(&rs.theta));
            // θ reproduced by the marks
            let mut acc = vec![0i32; l];
            for (k, a) in rs.simple.iter().enumerate() {
                for i in 0..l {
                    acc[i] += rs.marks[k] as i32 * a[i];
                }
            }
            assert_eq!(acc, rs.theta, "{}", s.label());
            // normal ordering is a permutation of Δ+
            let mut no = rs.normal_ordering.clone();
            let mut pos = rs.positive.clone();
            no.sort();
            pos.sort();
            assert_eq!(no, pos, "{}", s.label());
            // every positive root is a nonnegative combination of simple roots
            for beta in &rs.positive {
                let coef = solve_in_simple_basis(&rs.simple, beta);
                assert!(coef.iter().all(|&c| c >= 0), "{} {:?}", s.label(), beta);
            }
            // Cartan matrix reconstructed from the inner product
            for i in 0..rs.simple.len() {
                for j in 0..rs.simple.len() {
                    let aij = 2 * inner(&rs.simple[i], &rs.simple[j])
                        / inner(&rs.simple[i], &rs.simple[i]);
                    assert_eq!(aij, rs.cartan[i][j]);
                }
            }
        }
    }
}
