//! The basic COCOMO effort equation `E = a * KLOC^b` and a log-space
//! least-squares calibrator for `(a, b)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dataset::Dataset;
use crate::error::{Error, Result};

/// Basic COCOMO project classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CocomoMode {
    Organic,
    SemiDetached,
    Embedded,
}

impl CocomoMode {
    pub const ALL: [CocomoMode; 3] = [CocomoMode::Organic, CocomoMode::SemiDetached, CocomoMode::Embedded];

    pub fn coefficients(self) -> (f64, f64) {
        match self {
            CocomoMode::Organic => (2.4, 1.05),
            CocomoMode::SemiDetached => (3.0, 1.12),
            CocomoMode::Embedded => (3.6, 1.21),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CocomoMode::Organic => "organic",
            CocomoMode::SemiDetached => "semi_detached",
            CocomoMode::Embedded => "embedded",
        }
    }
}

/// A coefficient pair `(a, b)`, optionally tagged with the mode it came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CocomoModel {
    a: f64,
    b: f64,
    mode_label: Option<String>,
}

impl CocomoModel {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a > 0.0 && b > 0.0) {
            return Err(Error::InvalidCoefficients { a, b });
        }
        Ok(Self { a, b, mode_label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.mode_label = Some(label.into());
        self
    }

    pub fn organic() -> Self {
        CocomoMode::Organic.into()
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn mode_label(&self) -> Option<&str> {
        self.mode_label.as_deref()
    }

    /// Effort in person-months for `size` KLOC. A size of zero yields zero.
    pub fn estimate(&self, size: f64) -> Result<f64> {
        if !(size >= 0.0) || !size.is_finite() {
            return Err(Error::InvalidSize(size));
        }
        Ok(self.a * size.powf(self.b))
    }
}

impl From<CocomoMode> for CocomoModel {
    fn from(mode: CocomoMode) -> Self {
        let (a, b) = mode.coefficients();
        Self {
            a,
            b,
            mode_label: Some(mode.name().into()),
        }
    }
}

impl fmt::Display for CocomoModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mode_label {
            Some(label) => write!(f, "{label} (a={}, b={})", self.a, self.b),
            None => write!(f, "custom (a={}, b={})", self.a, self.b),
        }
    }
}

/// Parses `organic`, `semi` (or `semi_detached`), `embedded` and
/// `custom:a=<real>,b=<real>`.
impl FromStr for CocomoModel {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let token = token.trim();
        let invalid = |reason: &str| Error::InvalidToken {
            token: token.into(),
            reason: reason.into(),
        };
        match token {
            "organic" => Ok(CocomoMode::Organic.into()),
            "semi" | "semi_detached" | "semi-detached" => Ok(CocomoMode::SemiDetached.into()),
            "embedded" => Ok(CocomoMode::Embedded.into()),
            _ => {
                let params = token
                    .strip_prefix("custom:")
                    .ok_or_else(|| invalid("expected organic, semi, embedded or custom:a=<real>,b=<real>"))?;
                let (mut a, mut b) = (None, None);
                for part in params.split(',') {
                    let (key, val) = part.split_once('=').ok_or_else(|| invalid("expected key=value"))?;
                    let val: f64 = val.trim().parse().map_err(|_| invalid("coefficient is not a number"))?;
                    match key.trim() {
                        "a" => a = Some(val),
                        "b" => b = Some(val),
                        _ => return Err(invalid("unknown coefficient, expected a or b")),
                    }
                }
                match (a, b) {
                    (Some(a), Some(b)) => CocomoModel::new(a, b),
                    _ => Err(invalid("both a and b are required")),
                }
            }
        }
    }
}

/// Result of [`calibrate`]: the fitted model plus log-space fit quality.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Calibration {
    pub model: CocomoModel,
    /// Residual sum of squares of `ln(effort)`.
    pub rss: f64,
    /// Coefficient of determination of the log-log regression.
    pub r_squared: f64,
    pub n: usize,
}

/// Ordinary least squares on `ln(effort) = ln(a) + b * ln(size)`.
///
/// Uses centred sums, so the result is deterministic for a given record
/// order. Fails unless at least two distinct sizes are present.
pub fn calibrate(dataset: &Dataset) -> Result<Calibration> {
    for r in dataset.records() {
        if !(r.size_kloc > 0.0 && r.actual_effort_pm > 0.0) {
            return Err(Error::NonPositiveCalibration {
                id: r.id,
                size: r.size_kloc,
                effort: r.actual_effort_pm,
            });
        }
    }
    let mut distinct = dataset.sizes();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    if distinct.len() < 2 {
        return Err(Error::Underdetermined(distinct.len()));
    }

    let xs: Vec<f64> = dataset.records().iter().map(|r| r.size_kloc.ln()).collect();
    let ys: Vec<f64> = dataset.records().iter().map(|r| r.actual_effort_pm.ln()).collect();
    let n = xs.len();
    let x_mean = xs.iter().sum::<f64>() / n as f64;
    let y_mean = ys.iter().sum::<f64>() / n as f64;
    let (sxx, sxy, syy) = xs.iter().zip(&ys).fold((0.0, 0.0, 0.0), |(sxx, sxy, syy), (&x, &y)| {
        let (dx, dy) = (x - x_mean, y - y_mean);
        (sxx + dx * dx, sxy + dx * dy, syy + dy * dy)
    });

    let b = sxy / sxx;
    let ln_a = y_mean - b * x_mean;
    let rss = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| (y - ln_a - b * x).powi(2))
        .sum::<f64>();
    // All efforts identical: the constant fit is exact.
    let r_squared = if syy > 0.0 { 1.0 - rss / syy } else { 1.0 };

    let model = CocomoModel::new(ln_a.exp(), b)
        .map_err(|_| {
            Error::Usage(format!(
                "calibrated exponent {b} is not positive; data does not follow a power law"
            ))
        })?
        .with_label("calibrated");
    Ok(Calibration {
        model,
        rss,
        r_squared,
        n,
    })
}

/// Log-space residual sum of squares of `(ln a, b)` over a dataset.
pub fn log_rss(dataset: &Dataset, ln_a: f64, b: f64) -> f64 {
    dataset
        .records()
        .iter()
        .map(|r| (r.actual_effort_pm.ln() - ln_a - b * r.size_kloc.ln()).powi(2))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::ProjectRecord;
    use crate::round_to;

    fn points(pts: &[(f64, f64)]) -> Dataset {
        let records = pts
            .iter()
            .enumerate()
            .map(|(i, &(s, e))| ProjectRecord {
                id: i as u32 + 1,
                size_kloc: s,
                actual_effort_pm: e,
            })
            .collect();
        Dataset::new("pts", records).unwrap()
    }

    #[test]
    fn mode_coefficients() {
        assert_eq!(CocomoMode::Organic.coefficients(), (2.4, 1.05));
        assert_eq!(CocomoMode::SemiDetached.coefficients(), (3.0, 1.12));
        assert_eq!(CocomoMode::Embedded.coefficients(), (3.6, 1.21));
    }

    #[test]
    fn estimate_examples() {
        let organic = CocomoModel::organic();
        assert_eq!(round_to(organic.estimate(16.2).unwrap(), 4), 44.6891);
        assert_eq!(organic.estimate(1.0).unwrap(), 2.4);
        assert_eq!(round_to(organic.estimate(0.086093).unwrap(), 4), 0.1828);
        let semi = CocomoModel::from(CocomoMode::SemiDetached);
        // 3.0 * 10^1.12 = 39.54770...
        assert_eq!(round_to(semi.estimate(10.0).unwrap(), 4), 39.5477);
        assert_eq!(organic.estimate(0.0).unwrap(), 0.0);
        assert!(matches!(organic.estimate(-1.0), Err(Error::InvalidSize(_))));
        assert!(organic.estimate(f64::NAN).is_err());
    }

    #[test]
    fn invalid_coefficients() {
        assert!(CocomoModel::new(0.0, 1.0).is_err());
        assert!(CocomoModel::new(1.0, -1.0).is_err());
        assert!(CocomoModel::new(f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn tokens() {
        assert_eq!("organic".parse::<CocomoModel>().unwrap(), CocomoModel::organic());
        assert_eq!("semi".parse::<CocomoModel>().unwrap().b(), 1.12);
        assert_eq!("embedded".parse::<CocomoModel>().unwrap().a(), 3.6);
        let c: CocomoModel = "custom:a=2.5,b=1.1".parse().unwrap();
        assert_eq!((c.a(), c.b(), c.mode_label()), (2.5, 1.1, None));
        for bad in [
            "",
            "basic",
            "custom:a=2",
            "custom:a=x,b=1",
            "custom:a=1,c=2",
            "custom:a=-1,b=1",
        ] {
            assert!(bad.parse::<CocomoModel>().is_err(), "{bad}");
        }
    }

    #[test]
    fn two_point_fit() {
        let exact = 2.4 * 10f64.powf(1.05);
        let cal = calibrate(&points(&[(1.0, 2.4), (10.0, exact)])).unwrap();
        assert!((cal.model.a() - 2.4).abs() < 1e-12);
        assert!((cal.model.b() - 1.05).abs() < 1e-12);

        let printed = calibrate(&points(&[(1.0, 2.4), (10.0, 26.9285)])).unwrap();
        assert!((printed.model.a() - 2.4).abs() < 1e-6);
        assert!((printed.model.b() - 1.05).abs() < 1e-6);
    }

    #[test]
    fn noiseless_fit() {
        let pts: Vec<_> = [1.5, 2.0, 4.0, 9.0, 20.0]
            .iter()
            .map(|&s| (s, 3.2 * f64::powf(s, 1.3)))
            .collect();
        let cal = calibrate(&points(&pts)).unwrap();
        assert!((cal.model.a() - 3.2).abs() < 1e-10);
        assert!((cal.model.b() - 1.3).abs() < 1e-10);
        assert!((cal.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn underdetermined() {
        assert!(matches!(
            calibrate(&points(&[(3.0, 5.0)])),
            Err(Error::Underdetermined(1))
        ));
        assert!(matches!(
            calibrate(&points(&[(3.0, 5.0), (3.0, 6.0)])),
            Err(Error::Underdetermined(1))
        ));
        assert!(matches!(calibrate(&points(&[])), Err(Error::Underdetermined(0))));
    }
}
