//! Remainder-sequence engines.
//!
//! [`classic_gcd`] and [`classic_resultant`] follow the classical subresultant algorithm,
//! which divides each pseudo-remainder by `g * h^δ` to keep coefficients small.
//! [`gen_gcd`] and [`gen_resultant`] run the generalized algorithm: every step uses
//! [`gen_prem`], and the bookkeeping values `G = g^λ` and `Ḡ = ḡ^λ` account for the power
//! of `x` each step strips off. Every division inside both loops is exact in the ring.
//! A failed one is returned as [`Error::NotDivisible`].

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::pseudo::{gen_prem, prem, DivisionKind};
use crate::ring::{Ring, SizeMeasure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Classic,
    Generalized,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Classic => "classic",
            Algorithm::Generalized => "generalized",
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "classic" => Ok(Algorithm::Classic),
            "generalized" => Ok(Algorithm::Generalized),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

/// One pseudo-division of a remainder-sequence run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrsStep<R> {
    pub index: usize,
    pub deg_u: usize,
    pub deg_v: usize,
    pub delta: usize,
    pub lambda: usize,
    pub kind: DivisionKind,
    /// Divisor coefficient used for premultiplication.
    pub g: R,
    /// Divisor coefficient at the other end.
    pub gbar: R,
    /// `h` after this step's update; `None` on the terminating step.
    pub h: Option<R>,
    /// The adjusted remainder that becomes the next divisor; zero on the terminating step.
    pub remainder: Poly<R>,
    /// Largest coefficient of the pseudo-remainder before the exact division.
    pub raw_size: Option<u64>,
    /// Largest coefficient of the adjusted remainder.
    pub max_coeff_size: Option<u64>,
    /// Whether the closed-form law for `h` agreed with the incremental update.
    pub h_law_holds: Option<bool>,
    pub elapsed_ns: u64,
}

/// Record of a full run, together with the normalized pair the loop started from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrsTrace<R> {
    pub algorithm: Algorithm,
    pub measure: SizeMeasure,
    /// `(u, v)` after content removal, x-power stripping and ordering.
    pub start: (Poly<R>, Poly<R>),
    pub steps: Vec<PrsStep<R>>,
}

impl<R: Ring> PrsTrace<R> {
    pub fn deltas(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.delta).collect()
    }

    pub fn lambdas(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.lambda).collect()
    }

    /// Prefix sums of the degree gaps: `out[i] = delta_0 + ... + delta_i`.
    pub fn delta_prefix_sums(&self) -> Vec<usize> {
        self.steps
            .iter()
            .scan(0, |acc, s| {
                *acc += s.delta;
                Some(*acc)
            })
            .collect()
    }

    pub fn max_coeff_size(&self) -> Option<u64> {
        self.steps.iter().filter_map(|s| s.max_coeff_size).max()
    }

    pub fn max_raw_size(&self) -> Option<u64> {
        self.steps.iter().filter_map(|s| s.raw_size).max()
    }

    pub fn elapsed_ns(&self) -> u64 {
        self.steps.iter().map(|s| s.elapsed_ns).sum()
    }
}

/// `num * h^max(0, 1-δ) / (den * h^max(0, δ-1))`, the fraction-free form of `num / (den * h^(δ-1))`.
fn h_update<R: Ring>(num: R, den: R, h: &R, delta: usize) -> Result<R> {
    let num = if delta == 0 { num * h } else { num };
    let den = den * &h.pow(delta.saturating_sub(1));
    num.exact_div(&den)
}

fn elapsed(since: Instant) -> u64 {
    since.elapsed().as_nanos().min(u64::MAX as u128) as u64
}

struct Prepared<R> {
    u: Poly<R>,
    v: Poly<R>,
    d: R,
    e: usize,
}

/// Content gcd, common x-power and the full primitive parts ordered by degree.
fn prepare<R: Ring>(f: &Poly<R>, g: &Poly<R>, strip_x: bool) -> Result<Prepared<R>> {
    let (cf, pf) = f.content_primitive()?;
    let (cg, pg) = g.content_primitive()?;
    let d = cf.gcd(&cg)?;
    let (u, v, e) = if strip_x {
        let (u, tu) = pf.full_reduce()?;
        let (v, tv) = pg.full_reduce()?;
        (u, v, tu.min(tv))
    } else {
        (pf, pg, 0)
    };
    let (u, v) = if u.degree() < v.degree() {
        (v, u)
    } else {
        (u, v)
    };
    Ok(Prepared { u, v, d, e })
}

fn zero_short_circuit<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Result<Option<Poly<R>>> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(Error::ZeroOperand("gcd of two zero polynomials")),
        (true, false) => Ok(Some(g.clone().normalize_sign())),
        (false, true) => Ok(Some(f.clone().normalize_sign())),
        (false, false) => Ok(None),
    }
}

/// Classical subresultant gcd.
pub fn classic_gcd<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Result<Poly<R>> {
    Ok(classic_gcd_run(f, g, None)?.0)
}

fn classic_gcd_run<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    measure: Option<SizeMeasure>,
) -> Result<(Poly<R>, Option<PrsTrace<R>>)> {
    if let Some(p) = zero_short_circuit(f, g)? {
        return Ok((p, None));
    }
    let Prepared {
        mut u, mut v, d, ..
    } = prepare(f, g, false)?;
    let mut trace = measure.map(|m| PrsTrace {
        algorithm: Algorithm::Classic,
        measure: m,
        start: (u.clone(), v.clone()),
        steps: Vec::new(),
    });
    let mut g_prev = R::one();
    let mut h = R::one();
    loop {
        let start = Instant::now();
        let (du, dv) = (u.degree().unwrap(), v.degree().unwrap());
        let delta = du - dv;
        let r = prem(&u, &v)?;
        let lc = v.lc().unwrap().clone();
        let tc = v.tc().unwrap().clone();
        if r.is_zero() {
            if let Some(t) = trace.as_mut() {
                t.steps.push(PrsStep {
                    index: t.steps.len() + 1,
                    deg_u: du,
                    deg_v: dv,
                    delta,
                    lambda: 0,
                    kind: DivisionKind::Lead,
                    g: lc,
                    gbar: tc,
                    h: None,
                    remainder: Poly::zero(),
                    raw_size: None,
                    max_coeff_size: None,
                    h_law_holds: None,
                    elapsed_ns: elapsed(start),
                });
            }
            let result = v.primitive_part()?.scale(&d);
            return Ok((result.normalize_sign(), trace));
        }
        let raw_size = measure.and_then(|m| r.max_coeff_size(m));
        let den = g_prev.clone() * &h.pow(delta);
        let next = r.exact_div_scalar(&den)?;
        u = std::mem::replace(&mut v, next);
        g_prev = lc.clone();
        h = h_update(g_prev.pow(delta), R::one(), &h, delta)?;
        if let Some(t) = trace.as_mut() {
            t.steps.push(PrsStep {
                index: t.steps.len() + 1,
                deg_u: du,
                deg_v: dv,
                delta,
                lambda: 0,
                kind: DivisionKind::Lead,
                g: lc,
                gbar: tc,
                h: Some(h.clone()),
                remainder: v.clone(),
                raw_size,
                max_coeff_size: v.max_coeff_size(t.measure),
                h_law_holds: None,
                elapsed_ns: elapsed(start),
            });
        }
    }
}

/// Mutable state of the generalized loop: the current pair and `g, ḡ, h, G, Ḡ`.
#[derive(Debug, Clone)]
pub struct GeneralizedState<R> {
    pub u: Poly<R>,
    pub v: Poly<R>,
    pub g: R,
    pub gbar: R,
    pub h: R,
    pub big_g: R,
    pub big_gbar: R,
    lambda: usize,
}

/// What one pass through the pseudo-remainder and adjustment steps produced.
#[derive(Debug, Clone)]
pub enum Advance<R> {
    /// The pseudo-remainder was zero; `v` is the last nonzero remainder.
    Done(PrsStep<R>),
    /// The pair was replaced by `(v, adjusted remainder)`.
    Continue(PrsStep<R>),
}

impl<R: Ring> GeneralizedState<R> {
    /// Starts from full `u`, `v` with `deg u >= deg v` and all bookkeeping values equal to one.
    pub fn new(u: Poly<R>, v: Poly<R>) -> Self {
        GeneralizedState {
            u,
            v,
            g: R::one(),
            gbar: R::one(),
            h: R::one(),
            big_g: R::one(),
            big_gbar: R::one(),
            lambda: 0,
        }
    }

    /// One generalized pseudo-division followed, unless it was exact, by the adjustment
    /// `u := v; v := rḠ/(G g h^δ); g, ḡ := g₂, ḡ₂; h := Ḡ g^δ/(G h^(δ-1)); G, Ḡ := g^λ, ḡ^λ`.
    pub fn advance(&mut self, measure: SizeMeasure, index: usize) -> Result<Advance<R>> {
        let start = Instant::now();
        let deg_u = self
            .u
            .degree()
            .ok_or(Error::ZeroOperand("remainder sequence"))?;
        let deg_v = self
            .v
            .degree()
            .ok_or(Error::ZeroOperand("remainder sequence"))?;
        let step = gen_prem(&self.u, &self.v, measure)?;
        let delta = step.delta;
        if step.r.is_zero() {
            return Ok(Advance::Done(PrsStep {
                index,
                deg_u,
                deg_v,
                delta,
                lambda: step.lambda,
                kind: step.kind,
                g: step.g,
                gbar: step.gbar,
                h: None,
                remainder: Poly::zero(),
                raw_size: None,
                max_coeff_size: None,
                h_law_holds: None,
                elapsed_ns: elapsed(start),
            }));
        }
        let raw_size = step.r.max_coeff_size(measure);

        let den = self.big_g.clone() * &self.g * &self.h.pow(delta);
        let next = step.r.scale(&self.big_gbar).exact_div_scalar(&den)?;
        self.u = std::mem::replace(&mut self.v, next);

        let (g_prev, gbar_prev, lambda_prev) = (self.g.clone(), self.gbar.clone(), self.lambda);
        let h_old = self.h.clone();
        self.g = step.g.clone();
        self.gbar = step.gbar.clone();
        self.h = h_update(
            self.big_gbar.clone() * &self.g.pow(delta),
            self.big_g.clone(),
            &self.h,
            delta,
        )?;
        self.big_g = self.g.pow(step.lambda);
        self.big_gbar = self.gbar.pow(step.lambda);
        self.lambda = step.lambda;

        // h_new * g_prev^λ * h^(δ-1) = ḡ_prev^λ * g^δ, cross-multiplied from the raw step values
        let lhs = self.h.clone() * &g_prev.pow(lambda_prev) * &h_old.pow(delta.saturating_sub(1));
        let rhs = gbar_prev.pow(lambda_prev)
            * &self.g.pow(delta)
            * &(if delta == 0 { h_old } else { R::one() });
        let h_law_holds = lhs == rhs || lhs == -rhs;

        Ok(Advance::Continue(PrsStep {
            index,
            deg_u,
            deg_v,
            delta,
            lambda: step.lambda,
            kind: step.kind,
            g: step.g,
            gbar: step.gbar,
            h: Some(self.h.clone()),
            max_coeff_size: self.v.max_coeff_size(measure),
            remainder: self.v.clone(),
            raw_size,
            h_law_holds: Some(h_law_holds),
            elapsed_ns: elapsed(start),
        }))
    }

    /// The closing `h` update once `v` is a nonzero constant; the result is the resultant.
    fn close_resultant(&self) -> Result<R> {
        let delta = self.u.degree().unwrap_or(0);
        let c = self
            .v
            .lc()
            .ok_or(Error::ZeroOperand("remainder sequence"))?;
        h_update(
            self.big_gbar.clone() * &c.pow(delta),
            self.big_g.clone(),
            &self.h,
            delta,
        )
    }
}

/// Generalized subresultant gcd.
pub fn gen_gcd<R: Ring>(f: &Poly<R>, g: &Poly<R>, measure: SizeMeasure) -> Result<Poly<R>> {
    Ok(gen_gcd_run(f, g, measure, false)?.0)
}

fn gen_gcd_run<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    measure: SizeMeasure,
    keep_trace: bool,
) -> Result<(Poly<R>, Option<PrsTrace<R>>)> {
    if let Some(p) = zero_short_circuit(f, g)? {
        return Ok((p, None));
    }
    let Prepared { u, v, d, e } = prepare(f, g, true)?;
    let mut trace = keep_trace.then(|| PrsTrace {
        algorithm: Algorithm::Generalized,
        measure,
        start: (u.clone(), v.clone()),
        steps: Vec::new(),
    });
    let mut state = GeneralizedState::new(u, v);
    for index in 1.. {
        let (step, done) = match state.advance(measure, index)? {
            Advance::Done(s) => (s, true),
            Advance::Continue(s) => (s, false),
        };
        if let Some(t) = trace.as_mut() {
            t.steps.push(step);
        }
        if done {
            break;
        }
    }
    let result = state.v.primitive_part()?.scale(&d).shift(e);
    Ok((result, trace))
}

/// Resultant of two full polynomials via the generalized loop (up to sign).
///
/// Constant operands follow `res(f, c) = c^deg f`.
pub fn gen_resultant<R: Ring>(f: &Poly<R>, g: &Poly<R>, measure: SizeMeasure) -> Result<R> {
    if !f.is_full() || !g.is_full() {
        return Err(Error::NotFull);
    }
    let (u, v) = if f.degree() < g.degree() {
        (g, f)
    } else {
        (f, g)
    };
    let mut state = GeneralizedState::new(u.clone(), v.clone());
    for index in 1.. {
        if state.v.degree() == Some(0) {
            return state.close_resultant();
        }
        if let Advance::Done(_) = state.advance(measure, index)? {
            return Ok(R::zero());
        }
    }
    unreachable!("remainder degrees strictly decrease")
}

/// Classical subresultant resultant (up to sign); operands need not be full.
pub fn classic_resultant<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Result<R> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroOperand("resultant operand"));
    }
    let (mut u, mut v) = if f.degree() < g.degree() {
        (g.clone(), f.clone())
    } else {
        (f.clone(), g.clone())
    };
    let mut g_prev = R::one();
    let mut h = R::one();
    loop {
        let delta = u.degree().unwrap() - v.degree().unwrap();
        if v.degree() == Some(0) {
            let c = v.lc().unwrap();
            return h_update(
                c.pow(u.degree().unwrap()),
                R::one(),
                &h,
                u.degree().unwrap(),
            );
        }
        let r = prem(&u, &v)?;
        if r.is_zero() {
            return Ok(R::zero());
        }
        let next = r.exact_div_scalar(&(g_prev.clone() * &h.pow(delta)))?;
        u = std::mem::replace(&mut v, next);
        g_prev = u.lc().unwrap().clone();
        h = h_update(g_prev.pow(delta), R::one(), &h, delta)?;
    }
}

/// Resultant of arbitrary nonzero polynomials, reducing to full ones with
/// `res(x^a u, v) = tc(v)^a res(u, v)` (up to sign).
pub fn resultant_any<R: Ring>(f: &Poly<R>, g: &Poly<R>, measure: SizeMeasure) -> Result<R> {
    let (ff, a) = f.full_reduce()?;
    let (gf, b) = g.full_reduce()?;
    if a > 0 && b > 0 {
        return Ok(R::zero());
    }
    let core = gen_resultant(&ff, &gf, measure)?;
    let factor = if a > 0 {
        gf.coeffs()[0].pow(a)
    } else {
        ff.coeffs()[0].pow(b)
    };
    Ok(core * &factor)
}

/// Runs either gcd algorithm and returns its per-step trace.
pub fn run_traced<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    algorithm: Algorithm,
    measure: SizeMeasure,
) -> Result<(Poly<R>, PrsTrace<R>)> {
    let (result, trace) = match algorithm {
        Algorithm::Classic => classic_gcd_run(f, g, Some(measure))?,
        Algorithm::Generalized => gen_gcd_run(f, g, measure, true)?,
    };
    let trace = trace.unwrap_or_else(|| PrsTrace {
        algorithm,
        measure,
        start: (f.clone(), g.clone()),
        steps: Vec::new(),
    });
    Ok((result, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integer, YPoly};

    fn p(c: &[i64]) -> Poly<Integer> {
        Poly::from_i64s(c)
    }

    fn z(n: i64) -> Integer {
        Integer::from(n)
    }

    fn same_up_to_sign<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> bool {
        a == b || *a == -b.clone()
    }

    #[test]
    fn classic_gcd_examples() {
        assert_eq!(classic_gcd(&p(&[-1, 0, 1]), &p(&[1, 2, 1])), Ok(p(&[1, 1])));
        let f = p(&[2, 4, 6]);
        assert_eq!(classic_gcd(&f, &f), Ok(p(&[2, 4, 6])));
        // Knuth's classic example pair is coprime
        let a = p(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]);
        let b = p(&[21, -9, -4, 0, 5, 0, 3]);
        assert_eq!(classic_gcd(&a, &b), Ok(p(&[1])));
        assert_eq!(classic_gcd(&p(&[0, -3]), &Poly::zero()), Ok(p(&[0, 3])));
        assert!(classic_gcd(&Poly::<Integer>::zero(), &Poly::zero()).is_err());
    }

    #[test]
    fn gen_gcd_examples() {
        let m = SizeMeasure::Bits;
        let r = gen_gcd(&p(&[-1, 0, 1]), &p(&[1, 2, 1]), m).unwrap();
        assert!(same_up_to_sign(&r, &p(&[1, 1])));
        let r = gen_gcd(&p(&[0, 1, 0, 1]), &p(&[0, 1, 1]), m).unwrap();
        assert!(same_up_to_sign(&r, &p(&[0, 1])));
        let f = p(&[0, 4, 2]);
        let r = gen_gcd(&f, &f, m).unwrap();
        assert!(same_up_to_sign(&r, &f));
        let a = p(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]);
        let b = p(&[21, -9, -4, 0, 5, 0, 3]);
        assert_eq!(gen_gcd(&a, &b, m), Ok(p(&[1])));
    }

    #[test]
    fn gen_gcd_with_trail_steps() {
        // big leading coefficients force the trail branch
        let w = p(&[1, 1]);
        let a = &w * &p(&[1, 3, 0, 1000]);
        let b = &w * &p(&[1, -2, 999]);
        for m in [SizeMeasure::Bits, SizeMeasure::Degree, SizeMeasure::Terms] {
            let (r, trace) = run_traced(&a, &b, Algorithm::Generalized, m).unwrap();
            assert!(same_up_to_sign(&r, &w), "{m}: {r}");
            assert!(trace.steps.iter().all(|s| s.h_law_holds != Some(false)));
        }
        let (_, trace) = run_traced(&a, &b, Algorithm::Generalized, SizeMeasure::Bits).unwrap();
        assert!(trace.steps.iter().any(|s| s.kind == DivisionKind::Trail));
    }

    #[test]
    fn resultants() {
        let m = SizeMeasure::Bits;
        assert_eq!(
            gen_resultant(&p(&[1, 1]), &p(&[-1, 1]), m).map(|r| r.abs()),
            Ok(z(2))
        );
        assert_eq!(
            gen_resultant(&p(&[-1, 0, 1]), &p(&[-2, 1]), m).map(|r| r.abs()),
            Ok(z(3))
        );
        assert_eq!(gen_resultant(&p(&[1, 2, 1]), &p(&[1, 1]), m), Ok(z(0)));
        assert_eq!(gen_resultant(&p(&[1, 2, 1]), &p(&[3]), m), Ok(z(9)));
        assert_eq!(gen_resultant(&p(&[0, 1]), &p(&[1]), m), Err(Error::NotFull));
        assert_eq!(
            classic_resultant(&p(&[-1, 0, 1]), &p(&[-2, 1])).map(|r| r.abs()),
            Ok(z(3))
        );
    }

    #[test]
    fn resultant_any_examples() {
        let m = SizeMeasure::Bits;
        assert_eq!(
            resultant_any(&p(&[0, 1, 1]), &p(&[2, 1]), m).map(|r| r.abs()),
            Ok(z(2))
        );
        assert_eq!(resultant_any(&p(&[0, 1]), &p(&[0, 1]), m), Ok(z(0)));
        assert_eq!(
            resultant_any(&p(&[2, 1]), &p(&[0, 0, 1, 1]), m).map(|r| r.abs()),
            Ok(z(4))
        );
    }

    #[test]
    fn traces() {
        let (_, t) = run_traced(
            &p(&[-1, 0, 1]),
            &p(&[1, 2, 1]),
            Algorithm::Generalized,
            SizeMeasure::Bits,
        )
        .unwrap();
        assert_eq!(t.steps[0].delta, 0);
        let (_, t) = run_traced(
            &p(&[-1, 0, 1]),
            &p(&[1, 2, 1]),
            Algorithm::Generalized,
            SizeMeasure::Terms,
        )
        .unwrap();
        assert!(t.steps.iter().all(|s| s.kind == DivisionKind::Lead));
        let a = p(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]);
        let b = p(&[21, -9, -4, 0, 5, 0, 3]);
        let (_, t) = run_traced(&a, &b, Algorithm::Classic, SizeMeasure::Bits).unwrap();
        assert_eq!(t.steps.last().unwrap().deg_v, 0);
        assert_eq!(t.delta_prefix_sums().last().copied(), Some(8));
    }

    #[test]
    fn over_zy() {
        let y = |c: &[i64]| YPoly::from_coeffs(c.iter().copied());
        // (x + y)(x - 1) and (x + y)(x + 2)
        let w = Poly::new(vec![y(&[0, 1]), y(&[1])]);
        let a = &w * &Poly::new(vec![y(&[-1]), y(&[1])]);
        let b = &w * &Poly::new(vec![y(&[2]), y(&[1])]);
        let c = classic_gcd(&a, &b).unwrap();
        let g = gen_gcd(&a, &b, SizeMeasure::Degree).unwrap();
        assert!(same_up_to_sign(&c, &w));
        assert!(same_up_to_sign(&g, &w));
    }
}
