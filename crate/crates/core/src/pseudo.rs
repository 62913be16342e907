//! Classical pseudo-division, trail pseudo-division and the adaptive
//! generalized pseudo-remainder.
//!
//! Classical pseudo-division eliminates coefficients from the top, premultiplying the
//! dividend by powers of `lc(v)`. Trail pseudo-division eliminates them from the bottom,
//! premultiplying by powers of `tc(v)`. For full operands the two are mirror images of
//! each other under [`Poly::reverse`]. [`gen_prem`] picks whichever side has the smaller
//! divisor coefficient.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{Ring, SizeMeasure};

/// Which end of the divisor drove the elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivisionKind {
    Lead,
    Trail,
}

impl fmt::Display for DivisionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DivisionKind::Lead => "lead",
            DivisionKind::Trail => "trail",
        })
    }
}

/// Output of [`gen_prem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenPRem<R> {
    /// Full part of the chosen pseudo-remainder (zero when the division is exact).
    pub r: Poly<R>,
    /// `deg(u) - deg(v)`.
    pub delta: usize,
    /// Power of `x` stripped from the pseudo-remainder computed in the chosen orientation.
    pub lambda: usize,
    /// Divisor coefficient the dividend was premultiplied by: `lc(v)` or `tc(v)`.
    pub g: R,
    /// The divisor's coefficient at the opposite end.
    pub gbar: R,
    pub kind: DivisionKind,
}

fn check_degrees<R: Ring>(u: &Poly<R>, v: &Poly<R>) -> Result<(usize, usize)> {
    let dv = v
        .degree()
        .ok_or(Error::ZeroOperand("pseudo-division divisor"))?;
    let du = u
        .degree()
        .ok_or(Error::ZeroOperand("pseudo-division dividend"))?;
    if du < dv {
        return Err(Error::Degree(format!(
            "dividend degree {du} is below divisor degree {dv}"
        )));
    }
    Ok((du, dv))
}

/// Classical pseudo-remainder: `lc(v)^(δ+1) u = q v + prem(u, v)` with `deg prem < deg v`.
pub fn prem<R: Ring>(u: &Poly<R>, v: &Poly<R>) -> Result<Poly<R>> {
    let (du, dv) = check_degrees(u, v)?;
    let lc = v.lc().expect("nonzero divisor");
    let vc = v.coeffs();
    let mut w: Vec<R> = u.coeffs().to_vec();
    // one step per quotient position, always premultiplying so the factor is exactly lc^(δ+1)
    for top in (dv..=du).rev() {
        let c = std::mem::replace(&mut w[top], R::zero());
        let shift = top - dv;
        for x in w[..top].iter_mut() {
            let prev = std::mem::replace(x, R::zero());
            *x = prev * lc;
        }
        if !c.is_zero() {
            for (j, b) in vc[..dv].iter().enumerate() {
                let prev = std::mem::replace(&mut w[shift + j], R::zero());
                w[shift + j] = prev - &(c.clone() * b);
            }
        }
    }
    w.truncate(dv);
    Ok(Poly::new(w))
}

/// Trail pseudo-remainder by bottom-up elimination.
///
/// Returns `W` with `tc(v)^(δ+1) u - W` divisible by `v`, `trailDeg(W) > δ` and
/// `deg W <= deg u`. `W` is not stripped of its power of `x`.
pub fn tprem<R: Ring>(u: &Poly<R>, v: &Poly<R>) -> Result<Poly<R>> {
    if !u.is_full() || !v.is_full() {
        return Err(Error::NotFull);
    }
    let (du, dv) = check_degrees(u, v)?;
    let tc = &v.coeffs()[0];
    let vc = v.coeffs();
    let mut w: Vec<R> = u.coeffs().to_vec();
    for low in 0..=(du - dv) {
        let c = std::mem::replace(&mut w[low], R::zero());
        for x in w[low + 1..].iter_mut() {
            let prev = std::mem::replace(x, R::zero());
            *x = prev * tc;
        }
        if !c.is_zero() {
            for (j, b) in vc.iter().enumerate().skip(1) {
                let prev = std::mem::replace(&mut w[low + j], R::zero());
                w[low + j] = prev - &(c.clone() * b);
            }
        }
    }
    Ok(Poly::new(w))
}

/// The generalized pseudo-remainder of full `u`, `v` with `deg u >= deg v`.
///
/// Lead division is used when `lc(v)` is no bigger than `tc(v)` under `measure`, trail
/// division otherwise. The trail branch runs classical pseudo-division on the reversed
/// operands and reverts the full part of the result.
pub fn gen_prem<R: Ring>(u: &Poly<R>, v: &Poly<R>, measure: SizeMeasure) -> Result<GenPRem<R>> {
    if !u.is_full() || !v.is_full() {
        return Err(Error::NotFull);
    }
    let (du, dv) = check_degrees(u, v)?;
    let delta = du - dv;
    let lc = v.lc().expect("nonzero divisor").clone();
    let tc = v.coeffs()[0].clone();
    let lead = lc.relative_size(measure)? <= tc.relative_size(measure)?;

    let (w, g, gbar, kind) = if lead {
        (prem(u, v)?, lc, tc, DivisionKind::Lead)
    } else {
        (
            prem(&u.reverse()?, &v.reverse()?)?,
            tc,
            lc,
            DivisionKind::Trail,
        )
    };

    let (r, lambda) = if w.is_zero() {
        (Poly::zero(), 0)
    } else {
        let (full, lambda) = w.full_reduce()?;
        let r = match kind {
            DivisionKind::Lead => full,
            DivisionKind::Trail => full.reverse()?,
        };
        (r, lambda)
    };

    Ok(GenPRem {
        r,
        delta,
        lambda,
        g,
        gbar,
        kind,
    })
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

    #[test]
    fn prem_examples() {
        assert_eq!(prem(&p(&[1, 0, 1]), &p(&[2, 1])), Ok(p(&[5])));
        let f = p(&[3, 1, 4, 1]);
        assert_eq!(prem(&f, &f), Ok(Poly::zero()));
        assert_eq!(prem(&p(&[1, 1, 0, 2]), &p(&[1, 0, 1])), Ok(p(&[1, -1])));
        // lc(v)^(δ+1) is applied even when a quotient digit is zero
        assert_eq!(prem(&p(&[1, 0, 1]), &p(&[0, 2])), Ok(p(&[4])));
        assert_eq!(prem(&p(&[1, 0, 1]), &p(&[1, 2])), Ok(p(&[5])));
    }

    #[test]
    fn prem_errors() {
        assert!(prem(&p(&[1, 1]), &Poly::zero()).is_err());
        assert!(matches!(
            prem(&p(&[1, 1]), &p(&[1, 1, 1])),
            Err(Error::Degree(_))
        ));
    }

    #[test]
    fn tprem_examples() {
        // hand elimination: multiply by tc=2 twice, remainder sits at x^2
        let w = tprem(&p(&[1, 0, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(w, p(&[0, 0, 5]));
        assert_eq!(tprem(&p(&[2, 3, 1]), &p(&[2, 1])), Ok(Poly::zero()));
        let f = p(&[3, 1, 4, 1]);
        assert_eq!(tprem(&f, &f), Ok(Poly::zero()));
        assert_eq!(tprem(&p(&[0, 1]), &p(&[1, 1])), Err(Error::NotFull));
    }

    #[test]
    fn gen_prem_examples() {
        let r = gen_prem(&p(&[1, 0, 1]), &p(&[3, 1]), SizeMeasure::Bits).unwrap();
        assert_eq!(
            r,
            GenPRem {
                r: p(&[10]),
                delta: 1,
                lambda: 0,
                g: z(1),
                gbar: z(3),
                kind: DivisionKind::Lead
            }
        );

        let r = gen_prem(&p(&[1, 0, 1]), &p(&[1, 3]), SizeMeasure::Bits).unwrap();
        assert_eq!(
            r,
            GenPRem {
                r: p(&[10]),
                delta: 1,
                lambda: 0,
                g: z(1),
                gbar: z(3),
                kind: DivisionKind::Trail
            }
        );

        let r = gen_prem(&p(&[1, 2, 1, 1]), &p(&[1, 0, 1]), SizeMeasure::Bits).unwrap();
        assert_eq!(
            r,
            GenPRem {
                r: p(&[1]),
                delta: 1,
                lambda: 1,
                g: z(1),
                gbar: z(1),
                kind: DivisionKind::Lead
            }
        );
    }

    #[test]
    fn gen_prem_tie_is_lead_and_zero_remainder() {
        let r = gen_prem(&p(&[2, 3, 1]), &p(&[1, 1]), SizeMeasure::Degree).unwrap();
        assert_eq!(r.kind, DivisionKind::Lead);
        assert!(r.r.is_zero());
        assert_eq!(r.lambda, 0);
        assert!(gen_prem(&p(&[0, 1, 1]), &p(&[1, 1]), SizeMeasure::Bits).is_err());
    }
}
