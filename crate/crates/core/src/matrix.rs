//! Determinant side of the theory: fraction-free determinants, Sylvester and
//! subresultant matrices, split-column determinant polynomials and the gcd-degree test.
//!
//! Matrix rows hold the coefficients of shifted copies `x^i f` and `x^j g`, highest power
//! leftmost. Column `j` of an `ncols`-wide matrix stands for `x^(ncols-1-j)`.
//!
//! A determinant polynomial with split `a` fixes the `a` leftmost columns and the
//! `nrows-1-a` rightmost columns. Each remaining free column `c` contributes the
//! determinant of (fixed columns + `c`) as the coefficient of the power column `c` stands
//! for. With `a = nrows-1` this is the classical subresultant.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::prs::{run_traced, Algorithm};
use crate::ring::{Ring, SizeMeasure};

/// Rectangular matrix over a ring, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetMatrix<R> {
    rows: Vec<Vec<R>>,
    ncols: usize,
}

impl<R: Ring> DetMatrix<R> {
    pub fn new(rows: Vec<Vec<R>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::OutOfRange("rows have different lengths".into()));
        }
        Ok(DetMatrix { rows, ncols })
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Result<Self> {
        DetMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| R::from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &R {
        &self.rows[i][j]
    }

    /// Columns free in a split determinant: `ncols - nrows + 1`.
    pub fn free_cols(&self) -> usize {
        (self.ncols + 1).saturating_sub(self.nrows())
    }

    /// Square submatrix made of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> DetMatrix<R> {
        DetMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
                .collect(),
            ncols: cols.len(),
        }
    }

    pub fn det(&self) -> Result<R> {
        bareiss_det(self)
    }
}

/// Determinant by Bareiss fraction-free elimination; every interior division is exact.
pub fn bareiss_det<R: Ring>(m: &DetMatrix<R>) -> Result<R> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::OutOfRange(format!(
            "determinant of a {n}x{} matrix",
            m.ncols()
        )));
    }
    if n == 0 {
        return Ok(R::one());
    }
    let mut a = m.rows.clone();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let v = row[j].clone() * &pivot_row[k] - row[k].clone() * &pivot_row[j];
                row[j] = v.exact_div(&prev)?;
            }
            row[k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Row holding the coefficients of `x^shift * p` in an `ncols`-wide matrix.
fn shifted_row<R: Ring>(p: &Poly<R>, shift: usize, ncols: usize) -> Vec<R> {
    let mut row = vec![R::zero(); ncols];
    for (k, c) in p.coeffs().iter().enumerate() {
        row[ncols - 1 - k - shift] = c.clone();
    }
    row
}

fn stacked_rows<R: Ring>(
    f: &Poly<R>,
    f_rows: usize,
    g: &Poly<R>,
    g_rows: usize,
    ncols: usize,
) -> DetMatrix<R> {
    let rows = (0..f_rows)
        .rev()
        .map(|s| shifted_row(f, s, ncols))
        .chain((0..g_rows).rev().map(|s| shifted_row(g, s, ncols)))
        .collect();
    DetMatrix { rows, ncols }
}

/// The `(m+n) x (m+n)` Sylvester matrix of `f` (degree `m`) and `g` (degree `n`).
pub fn sylvester_matrix<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Result<DetMatrix<R>> {
    let m = f
        .degree()
        .ok_or(Error::ZeroOperand("Sylvester matrix operand"))?;
    let n = g
        .degree()
        .ok_or(Error::ZeroOperand("Sylvester matrix operand"))?;
    if m == 0 && n == 0 {
        return Err(Error::Degree("Sylvester matrix of two constants".into()));
    }
    Ok(stacked_rows(f, n, g, m, m + n))
}

/// `M_k`: rows `x^k f, ..., f` and `x^(k+δ) g, ..., g` with `δ = deg f - deg g`.
///
/// Requires full `f`, `g` with `deg f >= deg g >= 1` and `k < deg g`.
pub fn build_mk<R: Ring>(f: &Poly<R>, g: &Poly<R>, k: usize) -> Result<DetMatrix<R>> {
    if !f.is_full() || !g.is_full() {
        return Err(Error::NotFull);
    }
    let (m, n) = ordered_degrees(f, g)?;
    if k >= n {
        return Err(Error::OutOfRange(format!(
            "k = {k} must be below deg g = {n}"
        )));
    }
    let delta = m - n;
    Ok(stacked_rows(f, k + 1, g, k + delta + 1, m + k + 1))
}

/// Classical `k`-th subresultant matrix: `n-k` rows of `f`, `m-k` rows of `g`.
pub fn build_sk<R: Ring>(f: &Poly<R>, g: &Poly<R>, k: usize) -> Result<DetMatrix<R>> {
    let (m, n) = ordered_degrees(f, g)?;
    if k >= n {
        return Err(Error::OutOfRange(format!(
            "k = {k} must be below deg g = {n}"
        )));
    }
    Ok(stacked_rows(f, n - k, g, m - k, m + n - k))
}

fn ordered_degrees<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Result<(usize, usize)> {
    let m = f
        .degree()
        .ok_or(Error::ZeroOperand("subresultant operand"))?;
    let n = g
        .degree()
        .ok_or(Error::ZeroOperand("subresultant operand"))?;
    if m < n || n == 0 {
        return Err(Error::Degree(format!(
            "need deg f >= deg g >= 1, got {m} and {n}"
        )));
    }
    Ok((m, n))
}

/// Number of columns fixed on the left; the other `nrows - 1 - a` fixed columns are on the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplitSpec {
    pub a: usize,
}

/// Determinant polynomial of a matrix under a column split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubresPoly<R> {
    pub poly: Poly<R>,
    /// Determinant at the leftmost free column.
    pub flc: R,
    /// Determinant at the rightmost free column.
    pub ftc: R,
    pub split: SplitSpec,
}

pub fn det_poly<R: Ring>(m: &DetMatrix<R>, split: SplitSpec) -> Result<SubresPoly<R>> {
    let (nrows, ncols) = (m.nrows(), m.ncols());
    if nrows == 0 || ncols < nrows {
        return Err(Error::OutOfRange(format!(
            "split determinant needs ncols >= nrows >= 1, got {nrows}x{ncols}"
        )));
    }
    if split.a >= nrows {
        return Err(Error::OutOfRange(format!(
            "split a = {} must be below nrows = {nrows}",
            split.a
        )));
    }
    let right = nrows - 1 - split.a;
    let first_free = split.a;
    let last_free = ncols - 1 - right;
    let mut cols: Vec<usize> = (0..split.a)
        .chain(std::iter::once(first_free))
        .chain(ncols - right..ncols)
        .collect();
    let mut coeffs = vec![R::zero(); ncols];
    let mut flc = R::zero();
    let mut ftc = R::zero();
    for c in first_free..=last_free {
        cols[split.a] = c;
        let d = bareiss_det(&m.select_columns(&cols))?;
        if c == first_free {
            flc = d.clone();
        }
        if c == last_free {
            ftc = d.clone();
        }
        coeffs[ncols - 1 - c] = d;
    }
    Ok(SubresPoly {
        poly: Poly::new(coeffs),
        flc,
        ftc,
        split,
    })
}

/// How the split is chosen for each subresultant matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SplitPolicy {
    /// `a = nrows - 1`: all fixed columns on the left.
    #[default]
    Classical,
    /// `a` fixed, clamped to `nrows - 1`.
    Fixed(usize),
}

impl SplitPolicy {
    pub fn split_for(&self, nrows: usize) -> SplitSpec {
        let top = nrows.saturating_sub(1);
        SplitSpec {
            a: match *self {
                SplitPolicy::Classical => top,
                SplitPolicy::Fixed(a) => a.min(top),
            },
        }
    }
}

/// Result of scanning the generalized subresultants for the gcd degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport<R> {
    pub degree: usize,
    /// `flc` of each scanned subresultant, `k = 0, 1, ...`.
    pub flc: Vec<R>,
    pub ftc: Vec<R>,
    /// For every `i < degree`, `flc = 0` or `ftc = 0`.
    pub or_chain: bool,
    /// For every `i < degree`, `flc = 0` and `ftc = 0`.
    pub and_chain: bool,
    /// `ftc` at `degree` is nonzero as well as `flc`.
    pub ftc_nonzero_at_degree: bool,
}

/// Degree of `gcd(f, g)` from the first nonvanishing formal leading coefficient.
pub fn gcd_degree_detect<R: Ring>(f: &Poly<R>, g: &Poly<R>, policy: SplitPolicy) -> Result<usize> {
    Ok(gcd_degree_report(f, g, policy)?.degree)
}

pub fn gcd_degree_report<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    policy: SplitPolicy,
) -> Result<DegreeReport<R>> {
    if !f.is_full() || !g.is_full() {
        return Err(Error::NotFull);
    }
    let (f, g) = if f.degree() < g.degree() {
        (g, f)
    } else {
        (f, g)
    };
    let n = g.degree().unwrap();
    let mut report = DegreeReport {
        degree: n,
        flc: Vec::new(),
        ftc: Vec::new(),
        or_chain: true,
        and_chain: true,
        ftc_nonzero_at_degree: true,
    };
    for k in 0..n {
        let mat = build_sk(f, g, k)?;
        let sp = det_poly(&mat, policy.split_for(mat.nrows()))?;
        let (flc_zero, ftc_zero) = (sp.flc.is_zero(), sp.ftc.is_zero());
        report.flc.push(sp.flc);
        report.ftc.push(sp.ftc);
        if !flc_zero {
            report.degree = k;
            report.ftc_nonzero_at_degree = !ftc_zero;
            break;
        }
        report.or_chain &= flc_zero || ftc_zero;
        report.and_chain &= flc_zero && ftc_zero;
    }
    Ok(report)
}

/// True when `p` and `q` agree up to a power of `x` and a scalar factor.
pub fn proportional<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> bool {
    let (Ok((p, _)), Ok((q, _))) = (p.full_reduce(), q.full_reduce()) else {
        return false;
    };
    if p.degree() != q.degree() {
        return false;
    }
    let (lp, lq) = (p.lc().unwrap(), q.lc().unwrap());
    p.coeffs()
        .iter()
        .zip(q.coeffs())
        .all(|(a, b)| a.clone() * lq == b.clone() * lp)
}

/// Determinant match found for one remainder of a generalized run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemainderMatch {
    pub step: usize,
    /// Index `k` of the `M_k` matrix, the sum of the degree gaps after the first.
    pub matrix_index: usize,
    /// Splits `a` whose determinant polynomial is proportional to the remainder.
    pub splits: Vec<usize>,
    /// Some matching split reproduces the remainder exactly up to sign and a power of `x`.
    pub exact: bool,
}

/// Pairs every remainder of the generalized run on `(f, g)` with the split determinants of
/// its `M_k` matrix. Remainder `i` belongs to `k = deg g - deg(divisor of step i)`.
pub fn prs_det_correspondence<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    measure: SizeMeasure,
) -> Result<Vec<RemainderMatch>> {
    if !f.is_full() || !g.is_full() {
        return Err(Error::NotFull);
    }
    let (_, trace) = run_traced(f, g, Algorithm::Generalized, measure)?;
    let (u0, v0) = &trace.start;
    let n = v0
        .degree()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Degree("need deg g >= 1".into()))?;
    let mut matches = Vec::new();
    for step in trace.steps.iter().filter(|s| !s.remainder.is_zero()) {
        let k = n - step.deg_v;
        let mat = build_mk(u0, v0, k)?;
        let mut splits = Vec::new();
        let mut exact = false;
        let (rho, _) = step.remainder.full_reduce()?;
        for a in 0..mat.nrows() {
            let sp = det_poly(&mat, SplitSpec { a })?;
            if proportional(&sp.poly, &rho) {
                splits.push(a);
                let (band, _) = sp.poly.full_reduce()?;
                exact |= band == rho || band == -rho.clone();
            }
        }
        matches.push(RemainderMatch {
            step: step.index,
            matrix_index: k,
            splits,
            exact,
        });
    }
    Ok(matches)
}

/// True iff every remainder of the generalized run is matched by some split determinant.
pub fn verify_prs_det_correspondence<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    measure: SizeMeasure,
) -> Result<bool> {
    Ok(prs_det_correspondence(f, g, measure)?
        .iter()
        .all(|m| !m.splits.is_empty()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integer;

    fn p(c: &[i64]) -> Poly<Integer> {
        Poly::from_i64s(c)
    }

    fn z(n: i64) -> Integer {
        Integer::from(n)
    }

    fn mat(rows: &[&[i64]]) -> DetMatrix<Integer> {
        DetMatrix::from_i64s(rows).unwrap()
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(mat(&[&[1, 2], &[3, 4]]).det(), Ok(z(-2)));
        assert_eq!(mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).det(), Ok(z(1)));
        assert_eq!(mat(&[&[5]]).det(), Ok(z(5)));
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).det(), Ok(z(-1)));
        assert_eq!(mat(&[&[0, 1], &[0, 2]]).det(), Ok(z(0)));
        assert!(mat(&[&[1, 2]]).det().is_err());
    }

    #[test]
    fn sylvester() {
        let s = sylvester_matrix(&p(&[1, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(s, mat(&[&[1, 1], &[1, -1]]));
        assert_eq!(s.det(), Ok(z(-2)));
        let d = sylvester_matrix(&p(&[-1, 0, 1]), &p(&[-2, 1]))
            .unwrap()
            .det()
            .unwrap();
        assert_eq!(d.abs(), z(3));
        let f = p(&[1, 2, 3]);
        assert_eq!(sylvester_matrix(&f, &f).unwrap().det(), Ok(z(0)));
        assert!(sylvester_matrix(&p(&[2]), &p(&[3])).is_err());
    }

    #[test]
    fn mk_shapes() {
        let m = build_mk(&p(&[2, 3, 1]), &p(&[1, 1]), 0).unwrap();
        assert_eq!(m, mat(&[&[1, 3, 2], &[1, 1, 0], &[0, 1, 1]]));
        let m = build_mk(&p(&[1, 0, 1]), &p(&[1, 1]), 0).unwrap();
        assert_eq!(m, mat(&[&[1, 0, 1], &[1, 1, 0], &[0, 1, 1]]));
        let m = build_mk(&p(&[1, 2, 3, 4, 5, 6]), &p(&[1, 1, 1, 1, 1]), 2).unwrap();
        assert_eq!(m.free_cols(), 2);
        assert_eq!(m.nrows(), 2 * 2 + 1 + 2);
        assert!(build_mk(&p(&[2, 3, 1]), &p(&[1, 1]), 1).is_err());
        assert!(build_mk(&p(&[0, 3, 1]), &p(&[1, 1]), 0).is_err());
    }

    #[test]
    fn sk_shapes() {
        let f = p(&[1, 2, 3, 4]);
        let g = p(&[5, 6, 7]);
        assert_eq!(
            build_sk(&f, &g, 0).unwrap(),
            sylvester_matrix(&f, &g).unwrap()
        );
        let s = build_sk(&p(&[1, 0, 1]), &p(&[1, 1]), 0).unwrap();
        assert_eq!((s.nrows(), s.ncols()), (3, 3));
        for k in 0..2 {
            assert_eq!(build_sk(&f, &g, k).unwrap().free_cols(), k + 1);
        }
        assert!(build_sk(&f, &g, 2).is_err());
    }

    #[test]
    fn det_poly_examples() {
        let m = build_mk(&p(&[2, 3, 1]), &p(&[1, 1]), 0).unwrap();
        let sp = det_poly(&m, SplitSpec { a: 2 }).unwrap();
        assert!(sp.poly.is_zero());
        let m = build_mk(&p(&[1, 0, 1]), &p(&[1, 1]), 0).unwrap();
        let sp = det_poly(&m, SplitSpec { a: 2 }).unwrap();
        assert_eq!(sp.poly.degree(), Some(0));
        assert_eq!(sp.flc.abs(), z(2));
        assert!(det_poly(&m, SplitSpec { a: 3 }).is_err());
    }

    #[test]
    fn detect_examples() {
        let f = &p(&[1, 1]) * &p(&[2, 1]);
        let g = &p(&[1, 1]) * &p(&[3, 1]);
        assert_eq!(gcd_degree_detect(&f, &g, SplitPolicy::Classical), Ok(1));
        assert_eq!(
            gcd_degree_detect(&p(&[1, 0, 1]), &p(&[1, 1]), SplitPolicy::Classical),
            Ok(0)
        );
        let h = p(&[1, 2, 3, 4]);
        assert_eq!(gcd_degree_detect(&h, &h, SplitPolicy::Classical), Ok(3));
        let r = gcd_degree_report(&f, &g, SplitPolicy::Fixed(0)).unwrap();
        assert_eq!(r.degree, 1);
        assert!(r.or_chain && r.and_chain && r.ftc_nonzero_at_degree);
    }

    #[test]
    fn correspondence_examples() {
        let m = SizeMeasure::Bits;
        let found = prs_det_correspondence(&p(&[1, 0, 1]), &p(&[1, 1]), m).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].matrix_index, 0);
        assert!(!found[0].splits.is_empty());
        let f = &p(&[1, 1]) * &p(&[3, 1, 2]);
        let g = &p(&[1, 1]) * &p(&[-5, 7]);
        assert_eq!(verify_prs_det_correspondence(&f, &g, m), Ok(true));
        let q = &p(&[1, 1]) * &p(&[2, 1]);
        assert_eq!(verify_prs_det_correspondence(&q, &p(&[1, 1]), m), Ok(true));
        assert!(prs_det_correspondence(&q, &p(&[1, 1]), m)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn proportionality() {
        assert!(proportional(&p(&[0, 2, 4]), &p(&[-1, -2])));
        assert!(!proportional(&p(&[1, 2]), &p(&[1, 3])));
        assert!(!proportional(&Poly::zero(), &p(&[1])));
    }
}
