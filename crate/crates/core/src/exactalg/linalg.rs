//! Exact linear algebra by fraction-free (Bareiss) elimination.
//!
//! Rows are scaled to Gaussian integers first; purely real input stays in ℤ.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::scalar::{Rational, Scalar};

/// Integral domain with exact division, enough for Bareiss.
trait Domain: Clone {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn exact_div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Domain for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn exact_div(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        debug_assert!(Zero::is_zero(&r), "inexact Bareiss division");
        q
    }
    fn neg(&self) -> Self {
        -self
    }
}

#[derive(Clone, Debug, PartialEq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl Domain for GaussInt {
    fn nil() -> Self {
        GaussInt { re: Zero::zero(), im: Zero::zero() }
    }
    fn unit() -> Self {
        GaussInt { re: One::one(), im: Zero::zero() }
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn mul(&self, o: &Self) -> Self {
        GaussInt { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn exact_div(&self, o: &Self) -> Self {
        let n = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        let (qr, rr) = re.div_rem(&n);
        let (qi, ri) = im.div_rem(&n);
        debug_assert!(Zero::is_zero(&rr) && Zero::is_zero(&ri), "inexact Bareiss division");
        GaussInt { re: qr, im: qi }
    }
    fn neg(&self) -> Self {
        GaussInt { re: -&self.re, im: -&self.im }
    }
}

/// Row-wise denominator clearing into `(re, im)` integer pairs.
fn integer_rows(m: &Matrix) -> Vec<Vec<(BigInt, BigInt)>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| {
                acc.lcm(x.re().denom()).lcm(x.im().denom())
            });
            let lr = Rational::from_integer(l);
            row.iter()
                .map(|x| ((x.re() * &lr).to_integer(), (x.im() * &lr).to_integer()))
                .collect()
        })
        .collect()
}

enum Cleared {
    Real(Vec<Vec<BigInt>>),
    Complex(Vec<Vec<GaussInt>>),
}

fn clear(m: &Matrix) -> Cleared {
    let rows = integer_rows(m);
    if rows.iter().flatten().all(|(_, im)| Zero::is_zero(im)) {
        Cleared::Real(rows.into_iter().map(|r| r.into_iter().map(|(re, _)| re).collect()).collect())
    } else {
        Cleared::Complex(
            rows.into_iter()
                .map(|r| r.into_iter().map(|(re, im)| GaussInt { re, im }).collect())
                .collect(),
        )
    }
}

fn bareiss_rank<T: Domain>(mut a: Vec<Vec<T>>, ncols: usize) -> usize {
    let nrows = a.len();
    let mut prev = T::unit();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_nil()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for i in rank + 1..nrows {
            let factor = a[i][col].clone();
            for j in col + 1..ncols {
                let v = pivot.mul(&a[i][j]).sub(&factor.mul(&a[rank][j]));
                a[i][j] = v.exact_div(&prev);
            }
            a[i][col] = T::nil();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank over ℚ(i) by fraction-free elimination.
pub fn exact_rank(m: &Matrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    match clear(m) {
        Cleared::Real(rows) => bareiss_rank(rows, m.cols()),
        Cleared::Complex(rows) => bareiss_rank(rows, m.cols()),
    }
}

/// Rank of an integer matrix given row-major.
pub fn integer_rank(rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    bareiss_rank(rows, ncols)
}

/// Leading principal minors `Δ₁, Δ₂, …` by Bareiss without pivoting.
/// Stops after the first vanishing minor (the later ones are not computed).
fn bareiss_minors<T: Domain>(mut a: Vec<Vec<T>>) -> Vec<T> {
    let n = a.len();
    let mut prev = T::unit();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = a[k][k].clone();
        out.push(pivot.clone());
        if pivot.is_nil() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = pivot.mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.exact_div(&prev);
            }
        }
        prev = pivot;
    }
    out
}

fn row_scales(m: &Matrix) -> Vec<BigInt> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.re().denom()).lcm(x.im().denom()))
        })
        .collect()
}

fn real_scalar(n: BigInt) -> Scalar {
    Scalar::real(Rational::from_integer(n))
}

/// Leading principal minors of a square matrix, exact. The list is cut
/// short after the first zero minor.
pub fn leading_principal_minors(m: &Matrix) -> Vec<Scalar> {
    assert!(m.is_square(), "square matrix required");
    let scales = row_scales(m);
    let mut cum = Vec::with_capacity(scales.len());
    let mut acc = BigInt::one();
    for s in &scales {
        acc *= s;
        cum.push(Rational::from_integer(acc.clone()));
    }
    let raw: Vec<Scalar> = match clear(m) {
        Cleared::Real(rows) => bareiss_minors(rows).into_iter().map(real_scalar).collect(),
        Cleared::Complex(rows) => bareiss_minors(rows)
            .into_iter()
            .map(|g| Scalar::new(Rational::from_integer(g.re), Rational::from_integer(g.im)))
            .collect(),
    };
    raw.into_iter()
        .zip(cum)
        .map(|(d, c)| Scalar::new(d.re() / &c, d.im() / &c))
        .collect()
}

/// Determinant by Bareiss with row pivoting.
pub fn determinant(m: &Matrix) -> Scalar {
    assert!(m.is_square(), "square matrix required");
    let n = m.rows();
    if n == 0 {
        return Scalar::one();
    }
    let scale: BigInt = row_scales(m).into_iter().product();
    let d = match clear(m) {
        Cleared::Real(rows) => real_scalar(bareiss_det(rows)),
        Cleared::Complex(rows) => {
            let g = bareiss_det(rows);
            Scalar::new(Rational::from_integer(g.re), Rational::from_integer(g.im))
        }
    };
    let s = Rational::from_integer(scale);
    Scalar::new(d.re() / &s, d.im() / &s)
}

fn bareiss_det<T: Domain>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    let mut prev = T::unit();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_nil()) else {
            return T::nil();
        };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.exact_div(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    if negate {
        prev.neg()
    } else {
        prev
    }
}

/// Indices of a maximal linearly independent subset of `rows`, chosen
/// greedily in input order. Rows are sparse `column -> value` maps.
pub fn independent_rows(rows: &[BTreeMap<usize, Scalar>]) -> Vec<usize> {
    // echelon rows keyed by pivot column, pivot normalized to 1
    let mut basis: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
    let mut picked = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut r: BTreeMap<usize, Scalar> = row.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (*k, v.clone())).collect();
        #[allow(clippy::while_let_loop)] // `r` is moved out in the pivot arm
        loop {
            let Some((&col, lead)) = r.iter().next() else { break };
            match basis.get(&col) {
                Some(b) => {
                    let f = lead.clone();
                    for (c, v) in b {
                        let e = r.entry(*c).or_insert_with(Scalar::zero);
                        *e -= &(&f * v);
                        if e.is_zero() {
                            r.remove(c);
                        }
                    }
                }
                None => {
                    let inv = lead.inv().expect("nonzero pivot");
                    let normalized = r.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
                    basis.insert(col, normalized);
                    picked.push(idx);
                    break;
                }
            }
        }
    }
    picked
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain Gauss–Jordan over ℚ(i), independent of the Bareiss path.
    fn rank_by_field_elimination(m: &Matrix) -> usize {
        let mut a = m.to_rows();
        let (nr, nc) = (m.rows(), m.cols());
        let mut rank = 0;
        for col in 0..nc {
            let Some(p) = (rank..nr).find(|&r| !a[r][col].is_zero()) else { continue };
            a.swap(rank, p);
            let inv = a[rank][col].inv().unwrap();
            for i in 0..nr {
                if i != rank && !a[i][col].is_zero() {
                    let f = &a[i][col] * &inv;
                    for j in 0..nc {
                        let v = &a[i][j] - &(&f * &a[rank][j]);
                        a[i][j] = v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_examples() {
        assert_eq!(exact_rank(&Matrix::identity(3)), 3);
        assert_eq!(exact_rank(&Matrix::from_ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(exact_rank(&Matrix::zeros(0, 0)), 0);
        assert_eq!(exact_rank(&Matrix::zeros(3, 2)), 0);
    }

    #[test]
    fn complex_rank() {
        let i = Scalar::i();
        let one = Scalar::one();
        // second row is i times the first
        let m = Matrix::from_rows(vec![vec![one.clone(), i.clone()], vec![i.clone(), -one.clone()]]).unwrap();
        assert_eq!(exact_rank(&m), 1);
        let m = Matrix::from_rows(vec![vec![one.clone(), i.clone()], vec![i, one]]).unwrap();
        assert_eq!(exact_rank(&m), 2);
    }

    #[test]
    fn bareiss_matches_field_elimination() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..60 {
            let r = rng.random_range(1..=7);
            let c = rng.random_range(1..=7);
            let complex = trial % 3 == 0;
            let mut m = Matrix::from_fn(r, c, |_, _| {
                let re = Scalar::ratio(rng.random_range(-3..=3), rng.random_range(1..=3));
                if complex {
                    &re + &Scalar::new(Rational::zero(), crate::exactalg::rat(rng.random_range(-2..=2), 1))
                } else {
                    re
                }
            });
            if r > 2 && trial % 2 == 0 {
                // force a dependent row
                for j in 0..c {
                    let v = m.get(0, j) + &m.get(1, j).scale_by(2);
                    m.set(r - 1, j, v);
                }
            }
            assert_eq!(exact_rank(&m), rank_by_field_elimination(&m), "{m}");
            let sparse: Vec<BTreeMap<usize, Scalar>> =
                m.to_rows().into_iter().map(|row| row.into_iter().enumerate().collect()).collect();
            assert_eq!(independent_rows(&sparse).len(), exact_rank(&m));
        }
    }

    trait ScaleBy {
        fn scale_by(&self, n: i64) -> Scalar;
    }
    impl ScaleBy for Scalar {
        fn scale_by(&self, n: i64) -> Scalar {
            self * &Scalar::int(n)
        }
    }

    #[test]
    fn determinant_and_minors() {
        let m = Matrix::from_ints(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        assert_eq!(determinant(&m), Scalar::int(4));
        assert_eq!(leading_principal_minors(&m), vec![Scalar::int(2), Scalar::int(3), Scalar::int(4)]);
        let p = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&p), Scalar::int(-1));
        assert_eq!(leading_principal_minors(&p), vec![Scalar::int(0)]);
        let h = Matrix::from_rows(vec![
            vec![Scalar::ratio(1, 2), Scalar::ratio(1, 3)],
            vec![Scalar::ratio(1, 3), Scalar::ratio(1, 4)],
        ])
        .unwrap();
        assert_eq!(determinant(&h), Scalar::ratio(1, 72));
        assert_eq!(leading_principal_minors(&h)[1], Scalar::ratio(1, 72));
    }

    #[test]
    fn independent_rows_is_greedy() {
        let rows: Vec<BTreeMap<usize, Scalar>> = vec![
            [(0, Scalar::int(1)), (1, Scalar::int(1))].into_iter().collect(),
            [(0, Scalar::int(2)), (1, Scalar::int(2))].into_iter().collect(),
            BTreeMap::new(),
            [(1, Scalar::int(3))].into_iter().collect(),
        ];
        assert_eq!(independent_rows(&rows), vec![0, 3]);
    }
}
