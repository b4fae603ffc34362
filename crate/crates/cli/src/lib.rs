//! Command implementations behind the `flagcoh` binary.
//!
//! Every command only formats what the `flagcoh` library computes. Output is
//! deterministic: no timestamps, fixed field order, lexicographic point order.

pub mod args;
pub mod record;
pub mod svg;
pub mod verify;

use flagcoh::bwb::{bwb_with_element, CohomologyResult};
use flagcoh::lefschetz::{ampleness_verdict, BettiProfile, Verdict};
use flagcoh::projective::{bott_all, pn_q_ample_index, TwistSpec};
use flagcoh::qample::{
    chamber_map, q_ample_index, q_ample_index_oracle, ChamberRecord, OracleWindow,
};
use flagcoh::root_system::{dominant_conjugate, Conjugate, Weight};
use serde::Serialize;
use thiserror::Error;

pub use args::{Cli, Command, Format, OracleArgs};
pub use record::OutputRecord;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] flagcoh::Error),

    #[error("{0}")]
    Usage(String),

    #[error("failed to write csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Text to print on stdout plus the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit_code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, exit_code: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    if cli.format != Format::Structured && !matches!(cli.command, Command::Chambers { .. }) {
        return Err(CliError::Usage(format!(
            "--format {} is only supported by `chambers`",
            cli.format.name()
        )));
    }
    match &cli.command {
        Command::Cohomology { rank, weight } => cohomology(*rank, weight).map(Output::ok),
        Command::Qample {
            rank,
            weight,
            oracle,
            window,
        } => qample(*rank, weight, oracle.then_some(*window)).map(Output::ok),
        Command::Chambers { rank, range } => chambers(*rank, *range, cli.format).map(Output::ok),
        Command::VerifyPaper { window } => {
            let report = verify::verify_paper(window_from(*window)?, &verify::Claims::default());
            let exit_code = if report.passed() { 0 } else { 1 };
            Ok(Output {
                text: OutputRecord::new("verify-paper", &report).to_json(),
                exit_code,
            })
        }
        Command::Pn { n, d } => pn(*n, *d).map(Output::ok),
        Command::Lefschetz {
            n,
            dim,
            betti,
            not_smooth,
        } => lefschetz(*n, *dim, betti, !not_smooth).map(Output::ok),
    }
}

pub fn window_from(args: OracleArgs) -> Result<OracleWindow, CliError> {
    Ok(OracleWindow::new(args.box_radius, args.m_min, args.m_max)?)
}

fn parse_weight(rank: usize, coords: &[i64]) -> Result<Weight, CliError> {
    if coords.len() != rank {
        return Err(CliError::Usage(format!(
            "--weight has {} coordinates but --rank is {rank}",
            coords.len()
        )));
    }
    Ok(Weight::new(coords.to_vec())?)
}

#[derive(Debug, Serialize)]
struct CohomologyPayload {
    rank: usize,
    weight: Vec<i64>,
    verdict: &'static str,
    summary: String,
    degree: Option<usize>,
    highest_weight: Option<Vec<i64>>,
    dimension: Option<String>,
    weyl_element: Option<Vec<usize>>,
    /// h^0, ..., h^N as decimal strings.
    h: Vec<String>,
}

pub fn cohomology(rank: usize, coords: &[i64]) -> Result<String, CliError> {
    let weight = parse_weight(rank, coords)?;
    let top = weight.root_system().num_positive_roots();
    let (element, result) = bwb_with_element(&weight);
    let h = (0..=top).map(|i| result.h(i).to_string()).collect();
    let payload = match &result {
        CohomologyResult::AllVanish => CohomologyPayload {
            rank,
            weight: weight.coords().to_vec(),
            verdict: "vanishing",
            summary: "all cohomology vanishes".into(),
            degree: None,
            highest_weight: None,
            dimension: None,
            weyl_element: None,
            h,
        },
        CohomologyResult::Nonvanishing {
            degree,
            highest_weight,
            dimension,
        } => CohomologyPayload {
            rank,
            weight: weight.coords().to_vec(),
            verdict: "nonvanishing",
            summary: format!(
                "H^{degree} is the irreducible module of highest weight {highest_weight}, dimension {dimension}; all other degrees vanish"
            ),
            degree: Some(*degree),
            highest_weight: Some(highest_weight.coords().to_vec()),
            dimension: Some(dimension.to_string()),
            weyl_element: element.map(|w| w.one_line()),
            h,
        },
    };
    Ok(OutputRecord::new("cohomology", &payload).to_json())
}

#[derive(Debug, Serialize)]
struct QamplePayload {
    rank: usize,
    weight: Vec<i64>,
    qmin: usize,
    num_positive_roots: usize,
    pairings: Vec<i64>,
    regular: bool,
    weyl_length: Option<usize>,
    oracle: Option<OraclePayload>,
}

#[derive(Debug, Serialize)]
struct OraclePayload {
    box_radius: i64,
    m_min: i64,
    m_max: i64,
    qmin: usize,
}

pub fn qample(rank: usize, coords: &[i64], oracle: Option<OracleArgs>) -> Result<String, CliError> {
    let weight = parse_weight(rank, coords)?;
    let oracle = match oracle {
        Some(args) => {
            let window = window_from(args)?;
            let q = q_ample_index_oracle(&weight, window)?;
            Some(OraclePayload {
                box_radius: window.box_radius,
                m_min: window.m_min,
                m_max: window.m_max,
                qmin: q.value(),
            })
        }
        None => None,
    };
    let weyl_length = match dominant_conjugate(&weight) {
        Conjugate::Regular { element, .. } => Some(element.length()),
        Conjugate::Singular => None,
    };
    let payload = QamplePayload {
        rank,
        qmin: q_ample_index(&weight).value(),
        num_positive_roots: weight.root_system().num_positive_roots(),
        pairings: weight.pairings(),
        regular: weyl_length.is_some(),
        weyl_length,
        oracle,
        weight: weight.into_coords(),
    };
    Ok(OutputRecord::new("qample", &payload).to_json())
}

#[derive(Debug, Serialize)]
struct ChamberRow {
    weight: Vec<i64>,
    qmin: usize,
    regular: bool,
    weyl_length: Option<usize>,
}

impl From<&ChamberRecord> for ChamberRow {
    fn from(rec: &ChamberRecord) -> Self {
        ChamberRow {
            weight: rec.weight.coords().to_vec(),
            qmin: rec.qmin.value(),
            regular: rec.regular,
            weyl_length: rec.weyl_length,
        }
    }
}

#[derive(Debug, Serialize)]
struct ChambersPayload {
    rank: usize,
    range: i64,
    num_positive_roots: usize,
    points: Vec<ChamberRow>,
}

pub fn chambers(rank: usize, range: i64, format: Format) -> Result<String, CliError> {
    if format == Format::Svg && rank != 2 {
        return Err(CliError::Usage(format!(
            "svg output draws the rank-2 weight plane; got rank {rank}"
        )));
    }
    let records = chamber_map(rank, range)?;
    match format {
        Format::Structured => {
            let payload = ChambersPayload {
                rank,
                range,
                num_positive_roots: rank * (rank + 1) / 2,
                points: records.iter().map(ChamberRow::from).collect(),
            };
            Ok(OutputRecord::new("chambers", &payload).to_json())
        }
        Format::Csv => chambers_csv(rank, &records),
        Format::Svg => Ok(svg::render(range, &records)),
    }
}

fn chambers_csv(rank: usize, records: &[ChamberRecord]) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = (1..=rank).map(|k| format!("a{k}")).collect();
    header.extend(["qmin", "regular", "weyl_length"].map(String::from));
    writer.write_record(&header)?;
    for rec in records {
        let mut row: Vec<String> = rec.weight.coords().iter().map(i64::to_string).collect();
        row.push(rec.qmin.to_string());
        row.push(rec.regular.to_string());
        row.push(rec.weyl_length.map(|l| l.to_string()).unwrap_or_default());
        writer.write_record(&row)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of integers is utf-8"))
}

#[derive(Debug, Serialize)]
struct PnPayload {
    n: usize,
    d: i64,
    h: Vec<String>,
    qmin: usize,
}

pub fn pn(n: i64, d: i64) -> Result<String, CliError> {
    let spec = TwistSpec::new(n, d)?;
    let payload = PnPayload {
        n: spec.n(),
        d,
        h: bott_all(spec).iter().map(ToString::to_string).collect(),
        qmin: pn_q_ample_index(spec).value(),
    };
    Ok(OutputRecord::new("pn", &payload).to_json())
}

#[derive(Debug, Serialize)]
struct LefschetzPayload {
    n: usize,
    dim: usize,
    betti: Vec<u64>,
    verdict: &'static str,
    first_failing_degree: Option<usize>,
}

pub fn lefschetz(n: i64, dim: i64, betti: &[u64], smooth: bool) -> Result<String, CliError> {
    let profile = BettiProfile::new(n, dim, betti.to_vec())?;
    if !smooth {
        return Err(CliError::Usage(
            "the Betti-number criterion only decides ampleness for smooth Y".into(),
        ));
    }
    let (verdict, first_failing_degree) = match ampleness_verdict(&profile) {
        Verdict::Ample => ("ample", None),
        Verdict::NotAmple {
            first_failing_degree,
        } => ("not ample", Some(first_failing_degree)),
    };
    let payload = LefschetzPayload {
        n: profile.ambient_n(),
        dim: profile.dim_y(),
        betti: profile.betti().to_vec(),
        verdict,
        first_failing_degree,
    };
    Ok(OutputRecord::new("lefschetz", &payload).to_json())
}
