//! Conjugacy-class growth in the word metric.
//!
//! A [`GrowthProfile`] records `n_{h,l} = |{g ∈ C(h) : |g| = l}|` for
//! `l = 0..=R`. [`fit_polynomial_degree`] regresses `log cumulative` on
//! `log l` over the radii `R/2 < l <= R` and rounds the slope.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::{Element, Group};
use crate::scalar::Real;

/// Fits with a log-log RMS residual at or above this are inconclusive.
pub const FIT_RESIDUAL_TOLERANCE: f64 = 0.15;

/// Smallest radius a degree fit accepts.
pub const MIN_FIT_RADIUS: u32 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthProfile {
    pub group: String,
    pub element: Element,
    pub representative: Element,
    pub radius: u32,
    pub sphere_counts: Vec<u64>,
    pub cumulative: Vec<u64>,
    /// Every member of `C(h)` has been counted.
    pub complete: bool,
    pub class_size: Option<u64>,
}

impl GrowthProfile {
    /// Builds a profile from raw sphere counts.
    pub fn from_sphere_counts(group: &str, element: Element, sphere_counts: Vec<u64>) -> Self {
        let cumulative = sphere_counts
            .iter()
            .scan(0u64, |acc, &n| {
                *acc += n;
                Some(*acc)
            })
            .collect();
        GrowthProfile {
            group: group.to_string(),
            representative: element.clone(),
            element,
            radius: sphere_counts.len().saturating_sub(1) as u32,
            sphere_counts,
            cumulative,
            complete: false,
            class_size: None,
        }
    }

    /// Tab-separated `l  n_l  cumulative` rows with a header.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("l\tn\tcumulative\n");
        for (l, (n, c)) in self.sphere_counts.iter().zip(&self.cumulative).enumerate() {
            let _ = writeln!(out, "{l}\t{n}\t{c}");
        }
        out
    }
}

/// `C(h)` intersected with the spheres of radius `0..=radius`.
pub fn conjugacy_growth(group: &Group, h: &Element, radius: u32) -> Result<GrowthProfile> {
    group.check(h)?;
    let mut counts = vec![0u64; radius as usize + 1];
    let class_size = group.class_size(h)?;
    let representative = group.class_rep(h)?;
    let complete = if class_size.is_some() {
        let class = group.conjugacy_class(h, radius)?;
        let mut complete = true;
        for m in &class.members {
            match group.word_length(m, radius) {
                Ok(l) => counts[l as usize] += 1,
                Err(GroupError::AboveCap { .. }) => complete = false,
                Err(e) => return Err(e),
            }
        }
        complete
    } else {
        for (g, l) in group.enumerate_ball(radius)?.iter() {
            if group.class_rep(g)? == representative {
                counts[*l as usize] += 1;
            }
        }
        false
    };
    let mut profile = GrowthProfile::from_sphere_counts(&group.spec().to_string(), h.clone(), counts);
    profile.representative = representative;
    profile.complete = complete;
    profile.class_size = class_size.map(|s| s as u64);
    Ok(profile)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeFit<F> {
    pub degree: u32,
    pub slope: F,
    /// `max cumulative_l / l^degree` over the radii used.
    pub constant: F,
    /// RMS of the log-log regression residuals.
    pub residual: F,
    pub radii_used: (u32, u32),
    /// All sphere counts beyond the origin vanish.
    pub degenerate: bool,
    pub accepted: bool,
}

/// Fits `cumulative_l ~ c l^d` over `l` in `(R/2, R]`.
pub fn fit_degree<F: Real>(cumulative: &[u64]) -> Result<DegreeFit<F>> {
    let radius = cumulative.len().saturating_sub(1) as u32;
    if radius < MIN_FIT_RADIUS {
        return Err(GroupError::InvalidParameter(format!(
            "degree fit needs radius >= {MIN_FIT_RADIUS}, got {radius}"
        )));
    }
    let lo = radius / 2 + 1;
    let f = |v: f64| F::from_f64(v).expect("representable");
    let degenerate = cumulative.iter().all(|&c| c == cumulative[0]);
    let window: Vec<(F, F)> = (lo..=radius)
        .map(|l| (f(l as f64), f(cumulative[l as usize] as f64)))
        .collect();
    if degenerate || window.iter().any(|(_, c)| *c <= F::zero()) {
        return Ok(DegreeFit {
            degree: 0,
            slope: F::zero(),
            constant: window.iter().map(|p| p.1).fold(F::zero(), F::max),
            residual: if degenerate { F::zero() } else { F::infinity() },
            radii_used: (lo, radius),
            degenerate,
            accepted: degenerate,
        });
    }
    let pts: Vec<(F, F)> = window.iter().map(|&(l, c)| (l.ln(), c.ln())).collect();
    let n = f(pts.len() as f64);
    let mx = pts.iter().fold(F::zero(), |a, p| a + p.0) / n;
    let my = pts.iter().fold(F::zero(), |a, p| a + p.1) / n;
    let sxy = pts.iter().fold(F::zero(), |a, p| a + (p.0 - mx) * (p.1 - my));
    let sxx = pts.iter().fold(F::zero(), |a, p| a + (p.0 - mx) * (p.0 - mx));
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse = pts.iter().fold(F::zero(), |a, p| {
        let r = p.1 - (intercept + slope * p.0);
        a + r * r
    });
    let residual = (sse / n).sqrt();
    let degree = slope.round().max(F::zero()).to_u32().unwrap_or(0);
    let constant = window
        .iter()
        .map(|&(l, c)| c / l.powi(degree as i32))
        .fold(F::zero(), F::max);
    Ok(DegreeFit {
        degree,
        slope,
        constant,
        residual,
        radii_used: (lo, radius),
        degenerate: false,
        accepted: residual < f(FIT_RESIDUAL_TOLERANCE),
    })
}

pub fn fit_polynomial_degree(profile: &GrowthProfile) -> Result<DegreeFit<f64>> {
    fit_degree(&profile.cumulative)
}

/// Membership of `h` in the polynomial-growth set.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GpolVerdict {
    CertifiedPolynomial { reason: String },
    EmpiricalDegree { degree: u32, radius: u32, fit: DegreeFit<f64> },
    Inconclusive { radius: u32, fit: Option<DegreeFit<f64>> },
}

impl GpolVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, GpolVerdict::CertifiedPolynomial { .. })
    }

    /// Certified or empirically polynomial.
    pub fn is_polynomial(&self) -> bool {
        !matches!(self, GpolVerdict::Inconclusive { .. })
    }
}

/// Classifies `h` with certificates enabled.
pub fn classify_gpol(group: &Group, h: &Element, radius: u32) -> Result<GpolVerdict> {
    classify_gpol_with(group, h, radius, true)
}

/// With `certify` off every infinite class goes through the empirical fit.
pub fn classify_gpol_with(
    group: &Group,
    h: &Element,
    radius: u32,
    certify: bool,
) -> Result<GpolVerdict> {
    if group.class_is_finite(h) {
        return Ok(GpolVerdict::CertifiedPolynomial {
            reason: "finite conjugacy class".into(),
        });
    }
    if certify && group.spec().is_virtually_nilpotent() && group.order(h).finite().is_some() {
        return Ok(GpolVerdict::CertifiedPolynomial {
            reason: "torsion element of a virtually nilpotent group".into(),
        });
    }
    let profile = conjugacy_growth(group, h, radius)?;
    Ok(match fit_polynomial_degree(&profile) {
        Ok(fit) if fit.accepted => GpolVerdict::EmpiricalDegree {
            degree: fit.degree,
            radius,
            fit,
        },
        Ok(fit) => GpolVerdict::Inconclusive {
            radius,
            fit: Some(fit),
        },
        Err(_) => GpolVerdict::Inconclusive { radius, fit: None },
    })
}

/// Growth parameters `(C_h, d_h, b_h)` of the majorant series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MajorantParams<F> {
    pub c_h: F,
    pub d_h: u32,
    pub b_h: u32,
}

impl<F: Real> MajorantParams<F> {
    /// `b_h >= d_h/2 + 2`.
    pub fn is_admissible(&self) -> bool {
        2 * self.b_h >= self.d_h + 4
    }

    /// `sqrt(C_h) l^{d_h/2} (l - 1/2)^{-b_h}`
    pub fn term(&self, l: u64) -> F {
        let l = F::from_u64(l).expect("representable");
        let half = F::from_f64(0.5).expect("representable");
        let d = F::from_u32(self.d_h).expect("representable");
        self.c_h.sqrt() * l.powf(d * half) * (l - half).powi(-(self.b_h as i32))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MajorantSums<F> {
    pub params: MajorantParams<F>,
    /// `sums[k-1]` is the partial sum up to `l = k`.
    pub sums: Vec<F>,
    pub divergence_risk: bool,
}

impl<F: Real> MajorantSums<F> {
    pub fn at(&self, k: usize) -> F {
        self.sums[k - 1]
    }
}

pub fn majorant_partial_sums<F: Real>(params: MajorantParams<F>, n: u64) -> Result<MajorantSums<F>> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("majorant needs N >= 1".into()));
    }
    if !(params.c_h > F::zero()) {
        return Err(GroupError::InvalidParameter("C_h must be positive".into()));
    }
    let mut acc = F::zero();
    let sums = (1..=n)
        .map(|l| {
            acc = acc + params.term(l);
            acc
        })
        .collect();
    Ok(MajorantSums {
        params,
        sums,
        divergence_risk: !params.is_admissible(),
    })
}
