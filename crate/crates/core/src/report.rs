//! Classification records and their CSV / JSON encodings.

use serde::Serialize;

use crate::analysis::{julia_connectivity, ConnectivityVerdict};
use crate::complex::ComplexValue;
use crate::error::Result;
use crate::iteration::IterationConfig;
use crate::power::{
    classify_quadrant, power_factor, to_parameter, PowerFactor, PowerPhasor, Quadrant,
    ScalingConfig,
};

pub const CSV_HEADER: &str =
    "p,q,c_re,c_im,quadrant,power_factor,verdict,evidence,escape_index,budget";

/// Everything known about one power value.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationRecord {
    pub power: PowerPhasor,
    pub parameter: ComplexValue,
    pub quadrant: Quadrant,
    /// `None` at the origin.
    pub power_factor: Option<PowerFactor>,
    pub verdict: ConnectivityVerdict,
}

pub fn classify(
    s: PowerPhasor,
    scaling: &ScalingConfig,
    cfg: &IterationConfig,
) -> Result<ClassificationRecord> {
    let parameter = to_parameter(&s, scaling)?;
    Ok(ClassificationRecord {
        power: s,
        parameter,
        quadrant: classify_quadrant(&s),
        power_factor: power_factor(&s).ok(),
        verdict: julia_connectivity(parameter, cfg),
    })
}

/// Six decimals, with negative zero printed as zero.
pub fn fmt6(x: f64) -> String {
    format!("{:.6}", x + 0.0)
}

impl ClassificationRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            fmt6(self.power.p()),
            fmt6(self.power.q()),
            fmt6(self.parameter.re()),
            fmt6(self.parameter.im()),
            self.quadrant,
            self.power_factor
                .map_or_else(|| "undefined".to_string(), |pf| fmt6(pf.value)),
            self.verdict.decision,
            self.verdict.evidence,
            self.verdict
                .escape_index()
                .map_or_else(String::new, |t| t.to_string()),
            self.verdict.budget_used,
        )
    }

    /// Human-readable single line.
    pub fn line(&self) -> String {
        let pf = match &self.power_factor {
            Some(pf) => format!("{} {}", fmt6(pf.value), pf.character),
            None => "undefined".into(),
        };
        let escape = self
            .verdict
            .escape_index()
            .map_or_else(|| "-".to_string(), |t| t.to_string());
        format!(
            "S = {}{:+.6}j  c = {:.6}  quadrant {}  pf {}  verdict {}/{}  escape_index {}  budget {}",
            fmt6(self.power.p()),
            self.power.q() + 0.0,
            self.parameter,
            self.quadrant,
            pf,
            self.verdict.decision,
            self.verdict.evidence,
            escape,
            self.verdict.budget_used
        )
    }

    pub fn json(&self) -> String {
        let rec = JsonRecord {
            p: self.power.p() + 0.0,
            q: self.power.q() + 0.0,
            c_re: self.parameter.re() + 0.0,
            c_im: self.parameter.im() + 0.0,
            quadrant: self.quadrant.as_str(),
            power_factor: self.power_factor.map(|pf| pf.value),
            verdict: self.verdict.decision.to_string(),
            evidence: self.verdict.evidence.to_string(),
            escape_index: self.verdict.escape_index(),
            budget: self.verdict.budget_used,
        };
        serde_json::to_string(&rec).expect("record serializes")
    }
}

#[derive(Serialize)]
struct JsonRecord {
    p: f64,
    q: f64,
    c_re: f64,
    c_im: f64,
    quadrant: &'static str,
    power_factor: Option<f64>,
    verdict: String,
    evidence: String,
    escape_index: Option<u32>,
    budget: u32,
}

/// Header plus one row per record, `\n` terminated.
pub fn csv_document(records: &[ClassificationRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}
