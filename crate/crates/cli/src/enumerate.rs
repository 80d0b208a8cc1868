use jacobi_cells::{dual_diagram, enumerate_semimodules, SemiModule, Semigroup, YoungDiagram};
use serde::Serialize;

use crate::SCHEMA;

/// One row of the enumeration: a semi-module and everything derived from it.
#[derive(Debug, Clone, Serialize)]
pub struct SemiModuleRecord {
    pub cogaps: Vec<i64>,
    pub elements: Vec<i64>,
    pub p_generators: Vec<i64>,
    pub q_cogenerators: Vec<i64>,
    pub diagram: YoungDiagram,
    pub dual_diagram: YoungDiagram,
    pub dim: i64,
    pub gaps: i64,
}

impl SemiModuleRecord {
    pub fn new(module: &SemiModule) -> Self {
        SemiModuleRecord {
            cogaps: module.cogaps().to_vec(),
            elements: module.elements_through_conductor(),
            p_generators: module.p_basis(),
            q_cogenerators: module.q_cogenerators(),
            diagram: module.to_diagram(),
            dual_diagram: dual_diagram(module).expect("g-values of a semi-module decrease"),
            dim: module.dimension(),
            gaps: module.gaps_count(),
        }
    }
}

/// Records ordered by `p`-generators, largest first, so that the semigroup
/// itself heads the list and `Z>=0` closes it.
pub fn records(semigroup: &Semigroup) -> Vec<SemiModuleRecord> {
    let mut rows: Vec<_> = enumerate_semimodules(semigroup)
        .map(|m| SemiModuleRecord::new(&m))
        .collect();
    rows.sort_by(|a, b| b.p_generators.cmp(&a.p_generators));
    rows
}

fn tuple(values: &[i64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

fn elements(values: &[i64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("{{{},...}}", parts.join(","))
}

pub fn table(rows: &[SemiModuleRecord]) -> String {
    let header = [
        "Δ",
        "D(Δ)",
        "p-generators",
        "q-cogenerators",
        "D′(Δ)",
        "dim",
        "gaps",
    ];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                elements(&r.elements),
                r.diagram.to_string(),
                tuple(&r.p_generators),
                tuple(&r.q_cogenerators),
                r.dual_diagram.to_string(),
                r.dim.to_string(),
                r.gaps.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |row: &[&str]| {
        let padded: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&header);
    for row in &cells {
        out += &line(&row.iter().map(String::as_str).collect::<Vec<_>>());
    }
    out
}

pub fn json(p: i64, q: i64, rows: &[SemiModuleRecord]) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        schema: &'static str,
        command: &'static str,
        p: i64,
        q: i64,
        count: usize,
        semimodules: &'a [SemiModuleRecord],
    }
    let doc = Doc {
        schema: SCHEMA,
        command: "enumerate",
        p,
        q,
        count: rows.len(),
        semimodules: rows,
    };
    serde_json::to_string(&doc).expect("records serialize") + "\n"
}

pub fn csv(rows: &[SemiModuleRecord]) -> String {
    let join = |v: &[i64]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let cols = |d: &YoungDiagram| {
        d.columns()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "cogaps",
            "p_generators",
            "q_cogenerators",
            "diagram",
            "dual_diagram",
            "dim",
            "gaps",
        ])
        .expect("in-memory write");
    for r in rows {
        writer
            .write_record([
                join(&r.cogaps),
                join(&r.p_generators),
                join(&r.q_cogenerators),
                cols(&r.diagram),
                cols(&r.dual_diagram),
                r.dim.to_string(),
                r.gaps.to_string(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}
