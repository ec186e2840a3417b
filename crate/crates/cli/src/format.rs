//! JSON, DOT and CSV encodings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use seatgraph_core::{
    ChordalSequence, CycleBaseReport, Digraph, Label, MaterializedDfs, Polynomial, SeriesIdentity,
    SeriesIdentityReport, SeriesPrefix, SweepRow, Verdict,
};

/// Wire form of a graph. Parallel edges are repeated entries. `labels` is
/// only present when the vertex set is not `1..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Label>>,
    pub edges: Vec<[Label; 2]>,
}

impl From<&Digraph> for GraphJson {
    fn from(g: &Digraph) -> Self {
        let edges = g.edge_list().into_iter().map(|(u, v)| [u, v]).collect();
        if g.has_standard_labels() {
            GraphJson {
                n: Some(g.n()),
                labels: None,
                edges,
            }
        } else {
            GraphJson {
                n: None,
                labels: Some(g.labels().to_vec()),
                edges,
            }
        }
    }
}

impl GraphJson {
    pub fn to_digraph(&self) -> Result<Digraph, String> {
        let edges = self.edges.iter().map(|&[u, v]| (u, v));
        let g = match (&self.labels, self.n) {
            (Some(labels), n) => {
                if n.is_some_and(|n| n != labels.len()) {
                    return Err("\"n\" disagrees with the length of \"labels\"".into());
                }
                Digraph::with_labels(labels.iter().copied(), edges)
            }
            (None, Some(n)) => Digraph::from_edges(n, edges),
            (None, None) => return Err("graph JSON needs \"n\" or \"labels\"".into()),
        };
        g.map_err(|e| e.to_string())
    }
}

pub fn graph_to_json(g: &Digraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph serializes")
}

pub fn graph_from_json(s: &str) -> Result<Digraph, String> {
    let wire: GraphJson = serde_json::from_str(s).map_err(|e| format!("bad graph JSON: {e}"))?;
    wire.to_digraph()
}

pub fn graph_to_dot(g: &Digraph) -> String {
    let mut out = String::from("digraph G {\n");
    for l in g.labels() {
        out.push_str(&format!("  {l};\n"));
    }
    for (u, v) in g.edge_list() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// `3>1;4>2`
pub fn edges_compact(g: &Digraph) -> String {
    g.edge_list()
        .iter()
        .map(|(u, v)| format!("{u}>{v}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn big_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

pub fn poly_json(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(big_json).collect())
}

pub fn series_json(s: &SeriesPrefix) -> Value {
    Value::Array(
        s.coeffs()
            .iter()
            .map(|r| json!([big_json(r.numer()), big_json(r.denom())]))
            .collect(),
    )
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "holds": v.holds,
        "checked_range": v.checked_range,
        "counterexample": v.counterexample.as_ref().map(|c| json!({
            "inputs": c.inputs,
            "lhs": c.lhs,
            "rhs": c.rhs,
        })),
    })
}

pub fn verdict_text(v: &Verdict) -> String {
    let mut out = format!("holds: {}\nchecked: {}\n", v.holds, v.checked_range);
    if let Some(c) = &v.counterexample {
        out.push_str(&format!(
            "counterexample: {}\n  lhs: {}\n  rhs: {}\n",
            c.inputs, c.lhs, c.rhs
        ));
    }
    out
}

pub fn identity_name(which: SeriesIdentity) -> &'static str {
    match which {
        SeriesIdentity::Path => "path",
        SeriesIdentity::Cycle => "cycle",
    }
}

pub fn series_report_json(r: &SeriesIdentityReport, which: SeriesIdentity) -> Value {
    let mut v = verdict_json(&r.verdict);
    let obj = v.as_object_mut().expect("object");
    obj.insert("identity".into(), json!(identity_name(which)));
    obj.insert(
        "graph".into(),
        serde_json::to_value(GraphJson::from(&r.graph)).expect("graph"),
    );
    obj.insert("odp".into(), poly_json(&r.odp));
    obj.insert("lhs".into(), series_json(&r.lhs));
    obj.insert("rhs".into(), series_json(&r.rhs));
    obj.insert("first_bad_m".into(), json!(r.first_bad_m));
    obj.insert("cert_X_chordal".into(), json!(r.chordal_labeling.is_some()));
    obj.insert(
        "chordal_labeling".into(),
        json!(r.chordal_labeling.as_ref().map(|p| p.images().to_vec())),
    );
    obj.insert("cert_comp_chordal".into(), json!(r.complement_peo));
    v
}

pub fn series_report_text(r: &SeriesIdentityReport, which: SeriesIdentity) -> String {
    let labeling = match &r.chordal_labeling {
        Some(p) => format!("true (relabeling {p})"),
        None => "false".into(),
    };
    format!(
        "identity: {}\ngraph: {}\nodp: {}\nlhs: {}\nrhs: {}\ncert_X_chordal: {}\ncert_comp_chordal: {}\n{}",
        identity_name(which),
        graph_to_json(&r.graph),
        r.odp,
        r.lhs,
        r.rhs,
        labeling,
        r.complement_peo,
        verdict_text(&r.verdict),
    )
}

pub fn cycle_base_json(r: &CycleBaseReport) -> Value {
    let mut v = verdict_json(&r.verdict);
    let obj = v.as_object_mut().expect("object");
    obj.insert("n".into(), json!(r.n));
    obj.insert("odp".into(), poly_json(&r.odp));
    obj.insert("lhs".into(), series_json(&r.lhs));
    obj.insert("rhs".into(), series_json(&r.rhs));
    obj.insert("intermediate".into(), json!(r.intermediate));
    v
}

pub fn cycle_base_text(r: &CycleBaseReport) -> String {
    let intermediate = match r.intermediate {
        Some(b) => b.to_string(),
        None => "n/a".into(),
    };
    format!(
        "n: {}\nodp: {}\nlhs: {}\nrhs: {}\nintermediate: {}\n{}",
        r.n,
        r.odp,
        r.lhs,
        r.rhs,
        intermediate,
        verdict_text(&r.verdict)
    )
}

pub const SWEEP_HEADER: [&str; 7] = [
    "graph_id",
    "n",
    "edges",
    "cert_X_chordal",
    "cert_comp_chordal",
    "identity",
    "first_bad_m",
];

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SWEEP_HEADER).expect("in-memory write");
    for row in rows {
        let r = &row.report;
        w.write_record([
            row.graph_id.to_string(),
            r.graph.n().to_string(),
            edges_compact(&r.graph),
            r.chordal_labeling.is_some().to_string(),
            r.complement_peo.to_string(),
            r.verdict.holds.to_string(),
            r.first_bad_m.map(|m| m.to_string()).unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn sweep_json(rows: &[SweepRow], which: SeriesIdentity) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                let mut v = series_report_json(&row.report, which);
                v.as_object_mut()
                    .expect("object")
                    .insert("graph_id".into(), json!(row.graph_id));
                v
            })
            .collect(),
    )
}

/// One CSV row of coefficients per polynomial.
pub fn rows_csv(rows: &[Polynomial]) -> String {
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    for p in rows {
        let record: Vec<String> = if p.is_zero() {
            vec!["0".into()]
        } else {
            p.coeffs().iter().map(|c| c.to_string()).collect()
        };
        w.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn chordal_sequence_json(seq: &ChordalSequence) -> Value {
    Value::Array(
        seq.steps
            .iter()
            .map(|s| {
                json!({
                    "graph": GraphJson::from(&s.graph),
                    "removed": s.removed.map(|(b, a)| [b, a]),
                    "certificates": {
                        "sink_equivalent": s.sink_equivalent,
                        "complement_peo": s.complement_peo,
                    },
                })
            })
            .collect(),
    )
}

pub fn dfs_json(g: &MaterializedDfs) -> Value {
    let edges: Vec<Value> = g
        .witnesses()
        .map(|w| {
            json!({
                "from": w.source.word(),
                "to": w.target.word(),
                "a": w.a,
                "b": w.b,
                "mult": w.multiplicity,
            })
        })
        .collect();
    json!({
        "n": g.n(),
        "vertices": g.vertices().iter().map(|p| p.word()).collect::<Vec<_>>(),
        "edges": edges,
    })
}

/// Layout-free DOT: one node per permutation, one edge per witness, the
/// swapped pair as the label.
pub fn dfs_dot(g: &MaterializedDfs) -> String {
    let mut out = String::from("digraph DFS {\n");
    for p in g.vertices() {
        out.push_str(&format!("  \"{}\";\n", p.word()));
    }
    for w in g.witnesses() {
        let mult = if w.multiplicity > 1 {
            format!(" x{}", w.multiplicity)
        } else {
            String::new()
        };
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{},{}{}\"];\n",
            w.source.word(),
            w.target.word(),
            w.a,
            w.b,
            mult
        ));
    }
    out.push_str("}\n");
    out
}
