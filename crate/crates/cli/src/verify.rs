//! Recomputation of the 1-ample line bundle on `SL_3/B` whose adjoint twist has `H^2 != 0`.

use flagcoh::bwb::bwb_cohomology;
use flagcoh::qample::{q_ample_index, q_ample_index_oracle, OracleWindow};
use flagcoh::root_system::{RootSystem, Weight};
use serde::Serialize;

/// The values the report is checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claims {
    pub qmin: usize,
    pub twisted: Vec<i64>,
    pub degree: usize,
    pub highest_weight: Vec<i64>,
    pub dimension: u64,
}

impl Default for Claims {
    fn default() -> Self {
        Claims {
            qmin: 1,
            twisted: vec![0, -3],
            degree: 2,
            highest_weight: vec![0, 0],
            dimension: 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub status: &'static str,
    pub line_bundle: Vec<i64>,
    pub oracle_window: [i64; 3],
    pub checks: Vec<Check>,
    pub mismatches: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == "PASS"
    }
}

fn check(name: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Check {
    let expected = expected.to_string();
    let computed = computed.to_string();
    Check {
        name: name.into(),
        pass: expected == computed,
        expected,
        computed,
    }
}

fn show(coords: &[i64]) -> String {
    Weight::new(coords.to_vec())
        .map(|w| w.to_string())
        .unwrap_or_else(|_| format!("{coords:?}"))
}

pub fn verify_paper(window: OracleWindow, claims: &Claims) -> Report {
    let rs = RootSystem::new(2).expect("rank 2");
    let line = Weight::new(vec![2, -1]).expect("rank 2");
    let twisted = &line + &rs.canonical();
    let top = rs.num_positive_roots();

    let mut checks = vec![
        check(
            "q-ample index, closed form",
            claims.qmin,
            q_ample_index(&line),
        ),
        match q_ample_index_oracle(&line, window) {
            Ok(q) => check(
                format!(
                    "q-ample index, twist oracle (box {}, m in [{}, {}])",
                    window.box_radius, window.m_min, window.m_max
                ),
                claims.qmin,
                q,
            ),
            Err(e) => check("q-ample index, twist oracle", claims.qmin, e),
        },
        check("L + K", show(&claims.twisted), &twisted),
    ];

    let result = bwb_cohomology(&twisted);
    let expected_h: Vec<String> = (0..=top)
        .map(|i| {
            if i == claims.degree {
                claims.dimension.to_string()
            } else {
                "0".into()
            }
        })
        .collect();
    let computed_h: Vec<String> = (0..=top).map(|i| result.h(i).to_string()).collect();
    checks.push(check(
        "nonvanishing degree of L + K",
        claims.degree,
        result.degree().map_or("none".into(), |d| d.to_string()),
    ));
    checks.push(check(
        "highest weight of the nonvanishing group",
        show(&claims.highest_weight),
        match &result {
            flagcoh::CohomologyResult::Nonvanishing { highest_weight, .. } => {
                highest_weight.to_string()
            }
            flagcoh::CohomologyResult::AllVanish => "none".into(),
        },
    ));
    checks.push(check(
        "h^0..h^3 of L + K",
        expected_h.join(","),
        computed_h.join(","),
    ));

    let mismatches: Vec<String> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| {
            format!(
                "{}: expected {}, computed {}",
                c.name, c.expected, c.computed
            )
        })
        .collect();
    Report {
        status: if mismatches.is_empty() {
            "PASS"
        } else {
            "FAIL"
        },
        line_bundle: line.coords().to_vec(),
        oracle_window: [window.box_radius, window.m_min, window.m_max],
        checks,
        mismatches,
    }
}
