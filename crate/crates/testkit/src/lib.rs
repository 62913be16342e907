//! Seeded instance generators and oracles that share no code path with the library
//! routines they check.

use num_bigint::{BigInt, RandBigInt};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use subres_core::{Integer, Poly, Ring, YPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer in `(-2^bits, 2^bits)`.
pub fn integer(rng: &mut impl Rng, bits: u64) -> Integer {
    let bound = BigInt::from(1) << bits;
    Integer(rng.gen_bigint_range(&-bound.clone(), &bound))
}

pub fn nonzero_integer(rng: &mut impl Rng, bits: u64) -> Integer {
    loop {
        let c = integer(rng, bits);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random polynomial of exact degree `deg` with nonzero constant term.
pub fn full_poly_z(rng: &mut impl Rng, deg: usize, bits: u64) -> Poly<Integer> {
    let mut c: Vec<Integer> = (0..=deg).map(|_| integer(rng, bits)).collect();
    c[0] = nonzero_integer(rng, bits);
    c[deg] = nonzero_integer(rng, bits);
    Poly::new(c)
}

/// [`full_poly_z`] with a degree drawn from `degs`.
pub fn z_in(rng: &mut impl Rng, degs: std::ops::Range<usize>, bits: u64) -> Poly<Integer> {
    let deg = rng.gen_range(degs);
    full_poly_z(rng, deg, bits)
}

pub fn ypoly(rng: &mut impl Rng, ydeg: usize, bits: u64) -> YPoly {
    YPoly::from_coeffs((0..=ydeg).map(|_| integer(rng, bits)))
}

pub fn nonzero_ypoly(rng: &mut impl Rng, ydeg: usize, bits: u64) -> YPoly {
    loop {
        let c = ypoly(rng, ydeg, bits);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random `Z[y][x]` polynomial of x-degree `deg`, y-degree at most `ydeg`, full in `x`.
pub fn full_poly_zy(rng: &mut impl Rng, deg: usize, ydeg: usize, bits: u64) -> Poly<YPoly> {
    let mut c: Vec<YPoly> = (0..=deg).map(|_| ypoly(rng, ydeg, bits)).collect();
    c[0] = nonzero_ypoly(rng, ydeg, bits);
    c[deg] = nonzero_ypoly(rng, ydeg, bits);
    Poly::new(c)
}

pub fn zy_in(
    rng: &mut impl Rng,
    degs: std::ops::Range<usize>,
    ydeg: usize,
    bits: u64,
) -> Poly<YPoly> {
    let deg = rng.gen_range(degs);
    full_poly_zy(rng, deg, ydeg, bits)
}

pub fn same_up_to_sign<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> bool {
    a == b || *a == -b.clone()
}

pub fn scalar_up_to_sign<R: Ring>(a: &R, b: &R) -> bool {
    a == b || *a == -b.clone()
}

/// Determinant as the signed sum over permutations, accumulated row by row over the set
/// of used columns. Exponential, but independent of any elimination.
pub fn minor_expansion_det<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "square matrix required");
    assert!(n < 24, "minor expansion is exponential");
    let mut partial: Vec<Option<R>> = vec![None; 1 << n];
    partial[0] = Some(R::one());
    for (i, row) in rows.iter().enumerate() {
        let mut next: Vec<Option<R>> = vec![None; 1 << n];
        for (used, value) in partial.iter().enumerate() {
            let Some(value) = value else { continue };
            if (used as u32).count_ones() as usize != i {
                continue;
            }
            for (c, entry) in row.iter().enumerate() {
                if used & (1 << c) != 0 || entry.is_zero() {
                    continue;
                }
                // columns already used to the right of c each add one inversion
                let inversions = (used >> (c + 1)).count_ones();
                let term = value.clone() * entry;
                let term = if inversions % 2 == 1 { -term } else { term };
                let slot = &mut next[used | (1 << c)];
                *slot = Some(match slot.take() {
                    Some(acc) => acc + &term,
                    None => term,
                });
            }
        }
        partial = next;
    }
    partial[(1 << n) - 1].clone().unwrap_or_else(R::zero)
}

/// Textbook `k`-th subresultant of `f` (degree `m`) and `g` (degree `n <= m`).
///
/// The `(m+n-2k) x (m+n-k)` matrix of shifted coefficient rows is cut to its first
/// `m+n-2k-1` columns, and a last column holding the row polynomials themselves
/// (`x^i f`, `x^j g`) is appended; the subresultant is the determinant of that matrix,
/// expanded along the polynomial column.
pub fn textbook_subresultant<R: Ring>(f: &Poly<R>, g: &Poly<R>, k: usize) -> Poly<R> {
    let m = f.degree().expect("nonzero f");
    let n = g.degree().expect("nonzero g");
    assert!(m >= n && k < n);
    let ncols = m + n - k;
    let mut row_polys: Vec<Poly<R>> = Vec::new();
    for s in (0..n - k).rev() {
        row_polys.push(f.shift(s));
    }
    for s in (0..m - k).rev() {
        row_polys.push(g.shift(s));
    }
    let nrows = row_polys.len();
    let numeric: Vec<Vec<R>> = row_polys
        .iter()
        .map(|p| (0..nrows - 1).map(|j| p.coeff(ncols - 1 - j)).collect())
        .collect();
    let mut total = Poly::zero();
    for (r, p) in row_polys.iter().enumerate() {
        let minor: Vec<Vec<R>> = numeric
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != r)
            .map(|(_, row)| row.clone())
            .collect();
        let cof = minor_expansion_det(&minor);
        let cof = if (r + nrows - 1) % 2 == 1 { -cof } else { cof };
        total = total + &p.scale(&cof);
    }
    total
}

/// `(x - root)` factors multiplied out: a polynomial with known integer roots.
pub fn from_roots(roots: &[i64]) -> Poly<Integer> {
    roots
        .iter()
        .fold(Poly::one(), |acc, &r| &acc * &Poly::from_i64s(&[-r, 1]))
}
