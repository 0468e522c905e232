//! JSON and plain-text renderings of the verifier reports.
//!
//! Every report is a plain serde struct whose field order is fixed and
//! whose maps are `BTreeMap`s, so equal inputs serialize to equal bytes.
//! Worker counts and timings are deliberately left out.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use colorvir_core::classifier::{ExtensionReport, Pair, SectorSolution, StabilizationScan, TheoremCheck};
use colorvir_core::involution::InvolutionReport;
use colorvir_core::jacobi::JacobiReport;
use colorvir_core::uea::RealizationReport;
use colorvir_core::{AlgebraParams, Generator, Window};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ParamsJson {
    pub l1: String,
    pub l2: String,
    pub extended: bool,
    pub rho_mode: String,
}

impl From<&AlgebraParams> for ParamsJson {
    fn from(p: &AlgebraParams) -> Self {
        ParamsJson {
            l1: p.l1().to_string(),
            l2: p.l2().to_string(),
            extended: p.extended,
            rho_mode: p.rho.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WindowJson {
    pub m_max: i32,
    pub r_max: String,
    pub u_max: String,
}

impl From<&Window> for WindowJson {
    fn from(w: &Window) -> Self {
        WindowJson {
            m_max: w.m_max,
            r_max: w.r_max.to_string(),
            u_max: w.u_max.to_string(),
        }
    }
}

fn names<'a, I: IntoIterator<Item = &'a Generator>>(gens: I) -> Vec<String> {
    gens.into_iter().map(Generator::to_string).collect()
}

fn params_line(p: &ParamsJson, w: &WindowJson) -> String {
    format!(
        "l1 = {}, l2 = {}, extended = {}, rho = {}, window m<={} r<={} u<={}",
        p.l1, p.l2, p.extended, p.rho_mode, w.m_max, w.r_max, w.u_max
    )
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct JacobiFailureJson {
    pub triple: Vec<String>,
    pub shape: String,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct JacobiJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub params: ParamsJson,
    pub window: WindowJson,
    pub passed: bool,
    pub triples_checked: u64,
    pub triples_escaped: u64,
    /// Failure counts keyed by triple shape such as `P,P,X`.
    pub failure_shapes: BTreeMap<String, u64>,
    pub failures: Vec<JacobiFailureJson>,
}

impl From<&JacobiReport> for JacobiJson {
    fn from(r: &JacobiReport) -> Self {
        let mut failure_shapes = BTreeMap::new();
        let failures = r
            .failures
            .iter()
            .map(|f| {
                let shape = f.shape().map(|s| s.name()).join(",");
                *failure_shapes.entry(shape.clone()).or_insert(0) += 1;
                JacobiFailureJson {
                    triple: names(&f.triple),
                    shape,
                    residual: f.residual.to_string(),
                }
            })
            .collect();
        JacobiJson {
            schema_version: SCHEMA_VERSION,
            command: "jacobi",
            params: (&r.params).into(),
            window: (&r.window).into(),
            passed: r.passed(),
            triples_checked: r.triples_checked,
            triples_escaped: r.triples_escaped,
            failure_shapes,
            failures,
        }
    }
}

impl JacobiJson {
    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graded Jacobi identity: {}", verdict(self.passed));
        let _ = writeln!(s, "{}", params_line(&self.params, &self.window));
        let _ = writeln!(s, "triples checked  {:>10}", self.triples_checked);
        let _ = writeln!(s, "triples escaped  {:>10}", self.triples_escaped);
        let _ = writeln!(s, "failures         {:>10}", self.failures.len());
        for (shape, n) in &self.failure_shapes {
            let _ = writeln!(s, "  ({shape}) {n}");
        }
        for f in &self.failures {
            let _ = writeln!(s, "  {} -> {}", f.triple.join(" "), f.residual);
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoefficientJson {
    pub pair: [String; 2],
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SectorJson {
    pub degree: String,
    pub unknowns: usize,
    pub constraint_rank: usize,
    pub cocycle_dim: usize,
    pub coboundary_rank: usize,
    pub quotient_dim: usize,
    /// Central symbols whose closed-form cocycles should span this sector.
    pub theorem_symbols: Vec<String>,
    pub theorem_match: bool,
    pub representatives: Vec<Vec<CoefficientJson>>,
}

fn coefficient((a, b): &Pair, value: String) -> CoefficientJson {
    CoefficientJson {
        pair: [a.to_string(), b.to_string()],
        value,
    }
}

impl SectorJson {
    fn new(s: &SectorSolution, t: &TheoremCheck) -> Self {
        SectorJson {
            degree: s.sector.to_string(),
            unknowns: s.unknowns,
            constraint_rank: s.constraint_rank,
            cocycle_dim: s.cocycle_dim,
            coboundary_rank: s.coboundary_rank,
            quotient_dim: s.quotient_dim,
            theorem_symbols: t.symbols.iter().map(|z| z.name().to_string()).collect(),
            theorem_match: t.passed(),
            representatives: s
                .representatives
                .iter()
                .map(|rep| {
                    rep.iter()
                        .map(|(pair, v)| coefficient(pair, v.to_string()))
                        .collect()
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanRowJson {
    pub window: WindowJson,
    /// Quotient dimensions in sector order (0,0), (0,1), (1,0), (1,1).
    pub quotient_dims: [usize; 4],
    pub total: usize,
    pub theorem_match: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanJson {
    pub rows: Vec<ScanRowJson>,
    /// Smallest scanned window from which the dimensions stay constant.
    pub stable_from: Option<WindowJson>,
    pub non_increasing: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassifyJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub params: ParamsJson,
    pub window: WindowJson,
    pub sectors: Vec<SectorJson>,
    pub total_quotient_dim: usize,
    pub theorem_match: bool,
    pub scan: ScanJson,
}

impl ClassifyJson {
    /// `reports` in increasing window order; the last one is reported in
    /// full.
    pub fn new(reports: &[ExtensionReport], scan: &StabilizationScan) -> Self {
        let last = reports.last().expect("at least one window");
        ClassifyJson {
            schema_version: SCHEMA_VERSION,
            command: "classify",
            params: (&last.params).into(),
            window: (&last.window).into(),
            sectors: last
                .sectors
                .iter()
                .zip(&last.theorem)
                .map(|(s, t)| SectorJson::new(s, t))
                .collect(),
            total_quotient_dim: last.total_quotient_dim(),
            theorem_match: last.theorem_match(),
            scan: ScanJson {
                rows: reports
                    .iter()
                    .zip(&scan.dims)
                    .map(|(r, d)| ScanRowJson {
                        window: (&r.window).into(),
                        quotient_dims: *d,
                        total: d.iter().sum(),
                        theorem_match: r.theorem_match(),
                    })
                    .collect(),
                stable_from: scan.stable_from().map(|i| (&scan.windows[i]).into()),
                non_increasing: scan.non_increasing(),
            },
        }
    }

    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "central extensions: {}", verdict(self.theorem_match));
        let _ = writeln!(s, "{}", params_line(&self.params, &self.window));
        let _ = writeln!(
            s,
            "{:<8} {:>8} {:>8} {:>8} {:>8} {:>8}  symbols",
            "sector", "unknowns", "cocycles", "cobound", "quotient", "match"
        );
        for x in &self.sectors {
            let _ = writeln!(
                s,
                "{:<8} {:>8} {:>8} {:>8} {:>8} {:>8}  {}",
                x.degree,
                x.unknowns,
                x.cocycle_dim,
                x.coboundary_rank,
                x.quotient_dim,
                x.theorem_match,
                x.theorem_symbols.join(" ")
            );
        }
        let _ = writeln!(s, "total quotient dimension {}", self.total_quotient_dim);
        let _ = writeln!(s, "scan:");
        for r in &self.scan.rows {
            let _ = writeln!(
                s,
                "  window {:>2}  dims {:?}  total {}  match {}",
                r.window.m_max, r.quotient_dims, r.total, r.theorem_match
            );
        }
        match &self.scan.stable_from {
            Some(w) => {
                let _ = writeln!(s, "stable from window {}", w.m_max);
            }
            None => {
                let _ = writeln!(s, "not stable");
            }
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MismatchJson {
    pub pair: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RealizeJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub params: ParamsJson,
    pub window: WindowJson,
    pub passed: bool,
    pub pairs_checked: u64,
    /// `lhs` is the enveloping-algebra commutator, `rhs` the realized
    /// abstract bracket.
    pub mismatches: Vec<MismatchJson>,
}

impl From<&RealizationReport> for RealizeJson {
    fn from(r: &RealizationReport) -> Self {
        RealizeJson {
            schema_version: SCHEMA_VERSION,
            command: "realize",
            params: (&r.params).into(),
            window: (&r.window).into(),
            passed: r.passed(),
            pairs_checked: r.pairs_checked,
            mismatches: r
                .mismatches
                .iter()
                .map(|m| MismatchJson {
                    pair: names(&m.pair),
                    lhs: m.enveloping.to_string(),
                    rhs: m.abstract_table.to_string(),
                })
                .collect(),
        }
    }
}

impl RealizeJson {
    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "enveloping realization: {}", verdict(self.passed));
        let _ = writeln!(s, "{}", params_line(&self.params, &self.window));
        let _ = writeln!(s, "pairs checked  {:>10}", self.pairs_checked);
        let _ = writeln!(s, "mismatches     {:>10}", self.mismatches.len());
        for m in &self.mismatches {
            let _ = writeln!(s, "  [{}]: {} vs {}", m.pair.join(", "), m.lhs, m.rhs);
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvolutionJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub kind: String,
    pub params: ParamsJson,
    pub window: WindowJson,
    pub seed: u64,
    pub passed: bool,
    pub generators_checked: u64,
    pub pairs_checked: u64,
    pub samples_checked: u64,
    pub degree_failures: Vec<String>,
    pub antilinearity_failures: Vec<u64>,
    pub bracket_failures: Vec<MismatchJson>,
    pub involutivity_failures: Vec<String>,
    pub unlisted_centrals: Vec<String>,
}

impl InvolutionJson {
    pub fn new(r: &InvolutionReport, seed: u64) -> Self {
        InvolutionJson {
            schema_version: SCHEMA_VERSION,
            command: "involutions",
            kind: r.kind.to_string(),
            params: (&r.params).into(),
            window: (&r.window).into(),
            seed,
            passed: r.passed(),
            generators_checked: r.generators_checked,
            pairs_checked: r.pairs_checked,
            samples_checked: r.samples_checked,
            degree_failures: names(&r.degree_failures),
            antilinearity_failures: r.antilinearity_failures.clone(),
            bracket_failures: r
                .bracket_failures
                .iter()
                .map(|m| MismatchJson {
                    pair: names(&m.pair),
                    lhs: m.lhs.to_string(),
                    rhs: m.rhs.to_string(),
                })
                .collect(),
            involutivity_failures: names(&r.involutivity_failures),
            unlisted_centrals: r.unlisted_centrals.iter().map(|z| z.name().to_string()).collect(),
        }
    }

    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}: {}", self.kind, verdict(self.passed));
        let _ = writeln!(s, "{}", params_line(&self.params, &self.window));
        let _ = writeln!(s, "seed {}", self.seed);
        let rows = [
            ("generators checked", self.generators_checked),
            ("pairs checked", self.pairs_checked),
            ("samples checked", self.samples_checked),
            ("degree failures", self.degree_failures.len() as u64),
            ("antilinearity failures", self.antilinearity_failures.len() as u64),
            ("bracket failures", self.bracket_failures.len() as u64),
            ("involutivity failures", self.involutivity_failures.len() as u64),
            ("unlisted centrals", self.unlisted_centrals.len() as u64),
        ];
        for (label, n) in rows {
            let _ = writeln!(s, "{label:<24}{n:>10}");
        }
        for m in &self.bracket_failures {
            let _ = writeln!(s, "  [{}]: {} vs {}", m.pair.join(", "), m.lhs, m.rhs);
        }
        s
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}
