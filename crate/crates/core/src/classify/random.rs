//! Seeded random draws with small entries. All integers come from
//! `{-3, …, 3}`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::canonical_symplectic;
use crate::linalg::{Matrix, Rational};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_int<R: Rng>(rng: &mut R) -> i64 {
    rng.gen_range(-3..=3)
}

pub fn nonzero_int<R: Rng>(rng: &mut R) -> i64 {
    loop {
        let v = small_int(rng);
        if v != 0 {
            return v;
        }
    }
}

/// `p/q` with `p ∈ {-3..3}` and `q ∈ {1, 2, 3}`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let p = small_int(rng);
    let q = rng.gen_range(1..=3);
    Rational::new(p, q).expect("q > 0")
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    let p = nonzero_int(rng);
    let q = rng.gen_range(1..=3);
    Rational::new(p, q).expect("q > 0")
}

pub fn int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| Rational::from_int(small_int(rng)))
}

pub fn rational_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_rational(rng))
}

fn symmetric<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = Rational::from_int(small_int(rng));
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}

/// An elementary unimodular matrix `E + c E^{ij}` or a diagonal scaling by
/// `-1`, `2` or `1/2` in one slot.
fn elementary_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let mut a = Matrix::identity(n);
    if n >= 2 && rng.gen_bool(0.7) {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        a.set(i, j, Rational::from_int(nonzero_int(rng)));
    } else {
        let choices = [
            Rational::from_int(-1),
            Rational::from_int(2),
            Rational::new(1, 2).expect("q > 0"),
        ];
        let i = rng.gen_range(0..n);
        a.set(i, i, choices[rng.gen_range(0..choices.len())].clone());
    }
    a
}

/// One random factor from the generating set: a transvection
/// `E + c v vᵀ S`, `[[E, B], [0, E]]`, `[[E, 0], [C, E]]` with symmetric
/// `B`, `C`, or `[[A⁻ᵀ, 0], [0, A]]`.
pub fn symplectic_factor<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    let e = Matrix::identity(n);
    let z = Matrix::zeros(n, n);
    match rng.gen_range(0..4) {
        0 => {
            let s = canonical_symplectic(n);
            let v = Matrix::from_fn(2 * n, 1, |_, _| Rational::from_int(small_int(rng)));
            let c = Rational::from_int(nonzero_int(rng));
            let t = &(&v * &v.transpose()) * &s;
            &Matrix::identity(2 * n) + &t.scale(&c)
        }
        1 => Matrix::block_compose(&[vec![e.clone(), symmetric(rng, n)], vec![z, e]]).expect("square blocks"),
        2 => Matrix::block_compose(&[vec![e.clone(), z], vec![symmetric(rng, n), e]]).expect("square blocks"),
        _ => {
            let a = elementary_invertible(rng, n);
            let a_inv_t = a.inverse().expect("elementary").transpose();
            Matrix::block_diag(&[&a_inv_t, &a])
        }
    }
}

pub fn symplectic<R: Rng>(rng: &mut R, n: usize, steps: usize) -> Matrix {
    let mut m = Matrix::identity(2 * n);
    for _ in 0..steps {
        m = &m * &symplectic_factor(rng, n);
    }
    m
}

/// Random element of `SL_2` (which equals `Sp_2`).
pub fn sl2<R: Rng>(rng: &mut R) -> Matrix {
    let steps = rng.gen_range(1..=3);
    symplectic(rng, 1, steps)
}
