//! The JSON report written to standard output.

use ghk_core::decimal;
use ghk_core::geometry::Rat;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::input::{InputDocument, Integer, Pair};

const DIGITS: u32 = 12;

/// An exact rational with a display-only decimal approximation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactRational {
    /// Lowest terms `p/q` with `q > 0`, always with the slash.
    pub exact: String,
    /// 12 significant digits.
    pub decimal: f64,
}

impl ExactRational {
    pub fn new(r: &Rat) -> Self {
        ExactRational {
            exact: format!("{}/{}", r.numer(), r.denom()),
            decimal: decimal::approx(r, DIGITS),
        }
    }

    #[cfg(test)]
    pub fn value(&self) -> Option<Rat> {
        self.exact.parse().ok()
    }
}

impl From<&Rat> for ExactRational {
    fn from(r: &Rat) -> Self {
        ExactRational::new(r)
    }
}

pub fn ints(v: &[BigInt]) -> Vec<Integer> {
    v.iter().map(Integer::from).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub family: String,
    pub rays: [Pair; 2],
    pub generators: Vec<Pair>,
    pub det_abs: Integer,
    pub thresholds: [Integer; 2],
    pub saturated: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EghkResult {
    pub value: ExactRational,
    /// Area under the Newton boundary, the limit of `ℓ(H^0(R/I^n)) / n^2`.
    pub epsilon: ExactRational,
    pub remainder: ExactRational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ExactRational>,
    /// `ℓ(H^0_m(R/I))`.
    pub gap_length: Integer,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FunctionResult {
    pub prime: u64,
    pub counts: Vec<Integer>,
    /// `F(n) / p^(2n)`.
    pub ratios: Vec<ExactRational>,
    pub limit: ExactRational,
    /// `C` in `|F(n)/p^(2n) - e_gHK| <= C / p^n`.
    pub constant: Integer,
    pub within_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplitResult {
    pub q: u64,
    pub total_gap: Integer,
    pub sym_vs_ord: Integer,
    pub ord_vs_frob: Integer,
    pub additive: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuasiResult {
    pub period: usize,
    /// `[α2, α1, α0]` per residue class `n mod period`.
    pub coefficients: Vec<[ExactRational; 3]>,
    pub leading: ExactRational,
    pub onset: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TorsionResult {
    pub order: u64,
    pub principal_part: Pair,
    pub cofactor_generators: Vec<Pair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub newton_multiplicity: Option<Integer>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_leading: Option<ExactRational>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowersResult {
    /// `ℓ(H^0_m(R/I^n))` for `n = 1..=max_n`.
    pub h0: Vec<Integer>,
    pub epsilon: ExactRational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_estimate: Option<ExactRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quasi_polynomial: Option<QuasiResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion: Option<TorsionResult>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReptypeResult {
    pub value: ExactRational,
    pub dim: usize,
    /// The toric computation for the same module, when the input has one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub toric_value: Option<ExactRational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    /// `passed`, `failed` or `skipped`.
    pub status: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyResult {
    pub checks: Vec<CheckLine>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlotResult {
    pub path: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_mark: Option<u64>,
    pub red_area: ExactRational,
    pub green_area: ExactRational,
}

/// One field per subcommand; exactly one is set.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Results {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eghk: Option<EghkResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub function: Option<FunctionResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub powers: Option<PowersResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reptype: Option<ReptypeResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plot: Option<PlotResult>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: InputDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<Instance>,
    pub results: Results,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_render_canonically() {
        let r = Rat::new(BigInt::from(4), BigInt::from(-6));
        let e = ExactRational::new(&r);
        assert_eq!(e.exact, "-2/3");
        assert_eq!(e.value(), Some(r));
        assert_eq!(ExactRational::new(&Rat::from_integer(0.into())).exact, "0/1");
        assert_eq!(ExactRational::new(&Rat::new(5.into(), 16.into())).decimal, 0.3125);
    }

    #[test]
    fn report_round_trips() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let report = ReportDocument {
            input: InputDocument::from_family("veronese:3,1"),
            instance: None,
            results: Results {
                function: Some(FunctionResult {
                    prime: 2,
                    counts: vec![Integer(0.into()), Integer(big.clone())],
                    ratios: vec![ExactRational::new(&Rat::new(1.into(), 3.into()))],
                    limit: ExactRational::new(&Rat::new(1.into(), 3.into())),
                    constant: Integer(40.into()),
                    within_bound: true,
                }),
                ..Default::default()
            },
        };
        let json = report.to_json();
        assert!(json.contains("\"123456789012345678901234567890\""));
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
