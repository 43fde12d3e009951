//! Report shapes and the three renderers. JSON is the stable machine
//! contract (big integers as decimal strings, rationals as "p/q"); CSV
//! carries the same numeric content column-wise; plain is a human table.

use census_core::asymptotics::AsymptoticsRow;
use census_core::cells::KostantVerdict;
use census_core::counting::{CaseReport, CountParams, ExactCount, QStats};
use census_core::montecarlo::Estimate;
use census_core::BigUint;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellInvolutionReport {
    pub perm: String,
    pub involution: String,
    pub cycles: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceEntry {
    pub n: usize,
    #[serde(serialize_with = "serialize_biguint")]
    pub value: BigUint,
}

fn serialize_biguint<S: serde::Serializer>(v: &BigUint, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_str(v)
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceReport {
    pub name: String,
    pub max_n: usize,
    pub values: Vec<SequenceEntry>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum BoundReport {
    Theorem3 {
        which: &'static str,
        k: u64,
        value: String,
        approx: f64,
    },
    Lemma6 {
        which: &'static str,
        k: u64,
        n: usize,
        value: f64,
    },
}

#[derive(Debug, Clone)]
pub enum Report {
    Count(ExactCount),
    Case(CaseReport),
    QStats(QStats),
    Verdict(KostantVerdict),
    CellInvolution(CellInvolutionReport),
    Sequence(SequenceReport),
    Asymptotics(Vec<AsymptoticsRow>),
    Bound(BoundReport),
    Estimate(Estimate),
}

/// Quotes a CSV field only when it needs it.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_lines(header: &str, rows: Vec<Vec<String>>) -> String {
    let mut out = String::from(header);
    for row in rows {
        out.push('\n');
        let encoded: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&encoded.join(","));
    }
    out
}

/// Space-aligned table for the plain format.
fn plain_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let fmt_row = |cells: Vec<String>| -> String {
        cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:<width$}", c, width = widths[i]))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = fmt_row(header.iter().map(|h| h.to_string()).collect());
    for row in rows {
        out.push('\n');
        out.push_str(&fmt_row(row.clone()));
    }
    out
}

fn params_fragment(params: &CountParams) -> String {
    match params {
        CountParams::Blocks { blocks } => {
            let list = blocks
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(";");
            format!("blocks={list}")
        }
        CountParams::K { k } => format!("k={k}"),
        CountParams::Case { case } => format!("case={case}"),
        CountParams::None {} => String::new(),
    }
}

fn opt_f64(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Plain => self.to_plain(),
        }
    }

    fn to_json(&self) -> String {
        match self {
            Report::Count(x) => serde_json::to_string(x),
            Report::Case(x) => serde_json::to_string(x),
            Report::QStats(x) => serde_json::to_string(x),
            Report::Verdict(x) => serde_json::to_string(x),
            Report::CellInvolution(x) => serde_json::to_string(x),
            Report::Sequence(x) => serde_json::to_string(x),
            Report::Asymptotics(x) => serde_json::to_string(x),
            Report::Bound(x) => serde_json::to_string(x),
            Report::Estimate(x) => serde_json::to_string(x),
        }
        .expect("reports serialize")
    }

    fn to_csv(&self) -> String {
        match self {
            Report::Count(x) => csv_lines(
                "kind,n,params,value",
                vec![vec![
                    x.kind.to_string(),
                    x.n.to_string(),
                    params_fragment(&x.params),
                    x.value.to_string(),
                ]],
            ),
            Report::Case(x) => {
                let list = x
                    .violator_list
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join("|");
                csv_lines(
                    "case_id,total,violators,violator_list",
                    vec![vec![
                        x.case_id.to_string(),
                        x.total.to_string(),
                        x.violators.to_string(),
                        list,
                    ]],
                )
            }
            Report::QStats(x) => {
                let events = x
                    .p_event
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(";");
                csv_lines(
                    "n,k,q_size,p_event,p_joint",
                    vec![vec![
                        x.n.to_string(),
                        x.k.to_string(),
                        x.q_size.to_string(),
                        events,
                        x.p_joint.to_string(),
                    ]],
                )
            }
            Report::Verdict(x) => {
                let row = match x {
                    KostantVerdict::Negative { witness } => vec![
                        "negative".to_string(),
                        witness.member.to_string(),
                        witness.occurrence.start.to_string(),
                        format!("{:?}", witness.occurrence.kind).to_lowercase(),
                        witness
                            .occurrence
                            .witness
                            .iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join(";"),
                    ],
                    KostantVerdict::NoCertificate => vec![
                        "no-certificate".to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ],
                };
                csv_lines("tag,member,occurrence_start,occurrence_kind,witness", vec![row])
            }
            Report::CellInvolution(x) => csv_lines(
                "perm,involution,cycles",
                vec![vec![x.perm.clone(), x.involution.clone(), x.cycles.clone()]],
            ),
            Report::Sequence(x) => csv_lines(
                "n,value",
                x.values
                    .iter()
                    .map(|e| vec![e.n.to_string(), e.value.to_string()])
                    .collect(),
            ),
            Report::Asymptotics(rows) => csv_lines(
                "n,i_n,M_n,r(n),lemma6_bound",
                rows.iter()
                    .map(|r| {
                        vec![
                            r.n.to_string(),
                            r.involutions.to_string(),
                            r.motzkin.to_string(),
                            opt_f64(r.r_n),
                            opt_f64(r.lemma6_bound),
                        ]
                    })
                    .collect(),
            ),
            Report::Bound(x) => {
                let row = match x {
                    BoundReport::Theorem3 {
                        which,
                        k,
                        value,
                        approx,
                    } => vec![
                        which.to_string(),
                        k.to_string(),
                        String::new(),
                        value.clone(),
                        approx.to_string(),
                    ],
                    BoundReport::Lemma6 { which, k, n, value } => vec![
                        which.to_string(),
                        k.to_string(),
                        n.to_string(),
                        value.to_string(),
                        String::new(),
                    ],
                };
                csv_lines("which,k,n,value,approx", vec![row])
            }
            Report::Estimate(x) => csv_lines(
                "quantity,n,k,trials,seed,workers,successes,p_hat,ci95_low,ci95_high",
                vec![vec![
                    serde_json::to_value(x.quantity)
                        .expect("enum string")
                        .as_str()
                        .expect("string")
                        .to_string(),
                    x.n.to_string(),
                    x.k.map(|k| k.to_string()).unwrap_or_default(),
                    x.trials.to_string(),
                    x.seed.to_string(),
                    x.workers.to_string(),
                    x.successes.to_string(),
                    x.p_hat.to_string(),
                    x.ci95.0.to_string(),
                    x.ci95.1.to_string(),
                ]],
            ),
        }
    }

    fn to_plain(&self) -> String {
        match self {
            Report::Count(x) => plain_table(
                &["kind", "n", "params", "value"],
                &[vec![
                    x.kind.to_string(),
                    x.n.to_string(),
                    params_fragment(&x.params),
                    x.value.to_string(),
                ]],
            ),
            Report::Case(x) => {
                let list = x
                    .violator_list
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                plain_table(
                    &["case_id", "total", "violators", "violator_list"],
                    &[vec![
                        x.case_id.to_string(),
                        x.total.to_string(),
                        x.violators.to_string(),
                        list,
                    ]],
                )
            }
            Report::QStats(x) => {
                let events = x
                    .p_event
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                plain_table(
                    &["n", "k", "q_size", "p_event", "p_joint"],
                    &[vec![
                        x.n.to_string(),
                        x.k.to_string(),
                        x.q_size.to_string(),
                        events,
                        x.p_joint.to_string(),
                    ]],
                )
            }
            Report::Verdict(x) => match x {
                KostantVerdict::Negative { witness } => format!(
                    "negative: member {} has a {} occurrence at position {} (witness {:?})",
                    witness.member,
                    format!("{:?}", witness.occurrence.kind).to_lowercase(),
                    witness.occurrence.start,
                    witness.occurrence.witness,
                ),
                KostantVerdict::NoCertificate => {
                    "no-certificate: no consecutive 2143 found in the inspected members"
                        .to_string()
                }
            },
            Report::CellInvolution(x) => plain_table(
                &["perm", "involution", "cycles"],
                &[vec![x.perm.clone(), x.involution.clone(), x.cycles.clone()]],
            ),
            Report::Sequence(x) => {
                let rows: Vec<Vec<String>> = x
                    .values
                    .iter()
                    .map(|e| vec![e.n.to_string(), e.value.to_string()])
                    .collect();
                format!("{}\n{}", x.name, plain_table(&["n", "value"], &rows))
            }
            Report::Asymptotics(rows) => {
                let body: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.n.to_string(),
                            r.involutions.to_string(),
                            r.motzkin.to_string(),
                            opt_f64(r.r_n),
                            opt_f64(r.lemma6_bound),
                        ]
                    })
                    .collect();
                plain_table(&["n", "i_n", "M_n", "r(n)", "lemma6_bound"], &body)
            }
            Report::Bound(x) => match x {
                BoundReport::Theorem3 {
                    k, value, approx, ..
                } => format!("theorem3 bound (23/24)^{k} = {value} ≈ {approx}"),
                BoundReport::Lemma6 { k, n, value, .. } => {
                    format!("lemma6 bound 16·C({k},2)·i_{{{m}}}/i_{{{n}}} = {value}", m = n - 2)
                }
            },
            Report::Estimate(x) => {
                let quantity = serde_json::to_value(x.quantity)
                    .expect("enum string")
                    .as_str()
                    .expect("string")
                    .to_string();
                let mut rows = vec![
                    vec!["quantity".to_string(), quantity],
                    vec!["n".to_string(), x.n.to_string()],
                ];
                if let Some(k) = x.k {
                    rows.push(vec!["k".to_string(), k.to_string()]);
                }
                rows.extend([
                    vec!["trials".to_string(), x.trials.to_string()],
                    vec!["seed".to_string(), x.seed.to_string()],
                    vec!["workers".to_string(), x.workers.to_string()],
                    vec!["successes".to_string(), x.successes.to_string()],
                    vec!["p_hat".to_string(), x.p_hat.to_string()],
                    vec![
                        "ci95".to_string(),
                        format!("[{}, {}]", x.ci95.0, x.ci95.1),
                    ],
                ]);
                plain_table(&["field", "value"], &rows)
            }
        }
    }
}
