//! Structured results of identity checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::{QPolynomial, TruncSeries};

/// First exponent where the two sides disagree, with both coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of comparing two exactly computed sides of an identity.
///
/// Polynomial comparisons are absolute. Series comparisons hold only up to the
/// truncation order, which is always recorded in `params` as `order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, i64>,
    pub pass: bool,
    pub first_mismatch: Option<Mismatch>,
}

fn param_map(params: &[(&str, i64)]) -> BTreeMap<String, i64> {
    params.iter().map(|&(k, v)| (k.to_owned(), v)).collect()
}

impl VerificationReport {
    pub fn compare_poly(
        identity: &str,
        params: &[(&str, i64)],
        lhs: &QPolynomial,
        rhs: &QPolynomial,
    ) -> Self {
        let first_mismatch = lhs.first_difference(rhs).map(|e| Mismatch {
            exponent: e,
            lhs: lhs.coeff(e).to_string(),
            rhs: rhs.coeff(e).to_string(),
        });
        Self {
            identity: identity.to_owned(),
            params: param_map(params),
            pass: first_mismatch.is_none(),
            first_mismatch,
        }
    }

    /// Panics if the two series have different orders.
    pub fn compare_series(
        identity: &str,
        params: &[(&str, i64)],
        lhs: &TruncSeries,
        rhs: &TruncSeries,
    ) -> Self {
        assert_eq!(
            lhs.order(),
            rhs.order(),
            "series compared at different orders"
        );
        let first_mismatch = lhs.first_difference(rhs).map(|e| Mismatch {
            exponent: e,
            lhs: lhs.coeff(e).to_string(),
            rhs: rhs.coeff(e).to_string(),
        });
        let mut params = param_map(params);
        params.insert("order".to_owned(), lhs.order() as i64);
        Self {
            identity: identity.to_owned(),
            params,
            pass: first_mismatch.is_none(),
            first_mismatch,
        }
    }

    /// Compact JSON with a fixed key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    fn params_text(&self, sep: &str) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// `identity,params,pass,exponent,lhs,rhs`; params are `;`-separated and the
    /// last three fields are empty on a pass.
    pub fn to_csv(&self) -> String {
        let (e, l, r) = match &self.first_mismatch {
            Some(m) => (m.exponent.to_string(), m.lhs.clone(), m.rhs.clone()),
            None => Default::default(),
        };
        format!(
            "{},{},{},{e},{l},{r}",
            self.identity,
            self.params_text(";"),
            self.pass
        )
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.identity)?;
        if !self.params.is_empty() {
            write!(f, " {}", self.params_text(" "))?;
        }
        if let Some(m) = &self.first_mismatch {
            write!(
                f,
                " first mismatch at t^{}: lhs={} rhs={}",
                m.exponent, m.lhs, m.rhs
            )?;
        }
        Ok(())
    }
}
