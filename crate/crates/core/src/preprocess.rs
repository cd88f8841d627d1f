//! Size-column preprocessors: identity, (padded) min-max scaling and
//! logarithm, each with a fit / apply / invert lifecycle.
//!
//! Min-max scaling maps `x` to `(x - lo) / (hi - lo)` where
//! `lo = min - pad` and `hi = max + pad`. With `pad = 0` this is plain
//! min-max normalization onto `[0, 1]`. The published IVR comparison table
//! is reproduced by `pad = 1`, which places every observed size strictly
//! inside the unit interval.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LogBase {
    #[default]
    Natural,
    Two,
    Ten,
}

impl LogBase {
    fn log(self, x: f64) -> f64 {
        match self {
            LogBase::Natural => x.ln(),
            LogBase::Two => x.log2(),
            LogBase::Ten => x.log10(),
        }
    }

    fn exp(self, y: f64) -> f64 {
        match self {
            LogBase::Natural => y.exp(),
            LogBase::Two => y.exp2(),
            LogBase::Ten => 10f64.powf(y),
        }
    }

    fn token(self) -> &'static str {
        match self {
            LogBase::Natural => "e",
            LogBase::Two => "2",
            LogBase::Ten => "10",
        }
    }
}

impl FromStr for LogBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" | "ln" | "natural" => Ok(LogBase::Natural),
            "2" | "two" => Ok(LogBase::Two),
            "10" | "ten" => Ok(LogBase::Ten),
            _ => Err(Error::InvalidToken {
                token: s.into(),
                reason: "log base must be one of e, 2, 10".into(),
            }),
        }
    }
}

/// Which preprocessor to use, before it has seen any data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransformSpec {
    None,
    MinMax { pad: f64 },
    Log { base: LogBase },
}

impl TransformSpec {
    /// Min-max with the given padding; rejects negative or non-finite pads.
    pub fn min_max(pad: f64) -> Result<Self> {
        if !pad.is_finite() || pad < 0.0 {
            return Err(Error::InvalidPad(pad));
        }
        Ok(TransformSpec::MinMax { pad })
    }

    pub fn log(base: LogBase) -> Self {
        TransformSpec::Log { base }
    }

    /// The three techniques that reproduce the published comparison table.
    pub fn table3_defaults() -> Vec<TransformSpec> {
        vec![
            TransformSpec::None,
            TransformSpec::MinMax { pad: 1.0 },
            TransformSpec::Log { base: LogBase::Natural },
        ]
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, TransformSpec::None)
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            TransformSpec::None => "none",
            TransformSpec::MinMax { .. } => "norm",
            TransformSpec::Log { .. } => "log",
        }
    }

    /// A filesystem-safe slug, e.g. `norm-pad1`, `log-e`.
    pub fn slug(&self) -> String {
        self.to_string()
            .chars()
            .map(|c| match c {
                ':' => '-',
                '=' => '_',
                c if c.is_ascii_alphanumeric() || c == '.' || c == '-' => c,
                _ => '_',
            })
            .collect::<String>()
            .replace("pad_", "pad")
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformSpec::None => f.write_str("none"),
            TransformSpec::MinMax { pad } => write!(f, "norm:pad={pad}"),
            TransformSpec::Log { base } => write!(f, "log:{}", base.token()),
        }
    }
}

impl Serialize for TransformSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `none`, `norm`, `norm:pad=<real>`, `norm:<real>`, `log`,
/// `log:base=<e|2|10>` and `log:<e|2|10>`.
impl FromStr for TransformSpec {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let token = token.trim();
        let invalid = |reason: &str| Error::InvalidToken {
            token: token.into(),
            reason: reason.into(),
        };
        let (kind, arg) = match token.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (token, None),
        };
        match (kind, arg) {
            ("none", None) => Ok(TransformSpec::None),
            ("norm", None) => Ok(TransformSpec::MinMax { pad: 0.0 }),
            ("norm", Some(arg)) => {
                let raw = arg.strip_prefix("pad=").unwrap_or(arg);
                let pad: f64 = raw.parse().map_err(|_| invalid("pad must be a real number"))?;
                TransformSpec::min_max(pad)
            }
            ("log", None) => Ok(TransformSpec::log(LogBase::Natural)),
            ("log", Some(arg)) => {
                let raw = arg.strip_prefix("base=").unwrap_or(arg);
                Ok(TransformSpec::log(raw.parse()?))
            }
            ("none", Some(_)) => Err(invalid("`none` takes no parameters")),
            _ => Err(invalid("expected none, norm[:pad=<real>] or log[:base=<e|2|10>]")),
        }
    }
}

/// A preprocessor with its parameters frozen by [`fit`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FittedTransform {
    None,
    MinMax { pad: f64, lo: f64, hi: f64 },
    Log { base: LogBase },
}

pub fn fit(spec: TransformSpec, values: &[f64]) -> Result<FittedTransform> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    match spec {
        TransformSpec::None => Ok(FittedTransform::None),
        TransformSpec::MinMax { pad } => {
            if !pad.is_finite() || pad < 0.0 {
                return Err(Error::InvalidPad(pad));
            }
            let (min, max) = values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            });
            let (lo, hi) = (min - pad, max + pad);
            // `!(hi > lo)` also catches NaN bounds.
            if !(hi > lo) || !(hi - lo).is_finite() {
                return Err(Error::DegenerateRange { lo, hi });
            }
            Ok(FittedTransform::MinMax { pad, lo, hi })
        }
        TransformSpec::Log { base } => {
            if let Some(&bad) = values.iter().find(|&&v| !(v > 0.0)) {
                return Err(Error::NonPositiveLog(bad));
            }
            Ok(FittedTransform::Log { base })
        }
    }
}

impl FittedTransform {
    pub fn spec(&self) -> TransformSpec {
        match *self {
            FittedTransform::None => TransformSpec::None,
            FittedTransform::MinMax { pad, .. } => TransformSpec::MinMax { pad },
            FittedTransform::Log { base } => TransformSpec::Log { base },
        }
    }

    pub fn apply(&self, value: f64) -> Result<f64> {
        match *self {
            FittedTransform::None => Ok(value),
            FittedTransform::MinMax { lo, hi, .. } => Ok((value - lo) / (hi - lo)),
            FittedTransform::Log { base } => {
                if !(value > 0.0) {
                    return Err(Error::NonPositiveLog(value));
                }
                Ok(base.log(value))
            }
        }
    }

    pub fn invert(&self, value: f64) -> f64 {
        match *self {
            FittedTransform::None => value,
            FittedTransform::MinMax { lo, hi, .. } => value * (hi - lo) + lo,
            FittedTransform::Log { base } => base.exp(value),
        }
    }

    /// Human-readable units of transformed values.
    pub fn units(&self) -> &'static str {
        match self {
            FittedTransform::None => "KLOC",
            FittedTransform::MinMax { .. } => "normalized",
            FittedTransform::Log { .. } => "log KLOC",
        }
    }
}
