use std::fmt::Write as _;

use serde::Serialize;

use crate::goppa::{CodeReport, DistanceReport, ParameterBounds};
use crate::polymat::PolyMatrix;

/// ANSI styling, off when disabled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    fn paint(&self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    pub fn warn(&self, text: &str) -> String {
        self.paint("33", text)
    }

    pub fn good(&self, text: &str) -> String {
        self.paint("32", text)
    }

    pub fn bad(&self, text: &str) -> String {
        self.paint("31", text)
    }

    pub fn bold(&self, text: &str) -> String {
        self.paint("1", text)
    }
}

/// `n=3 k=2 δ=3 m=2 d_free=6 S=6 MDS=yes`, with `-` for uncomputed values.
pub fn summary_line(r: &CodeReport) -> String {
    let d = r
        .free_distance
        .as_ref()
        .map_or("-".to_string(), |d| d.value.to_string());
    let mds = match r.is_mds {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    };
    format!(
        "n={} k={} δ={} m={} d_free={d} S={} MDS={mds}",
        r.n, r.k, r.degree, r.memory, r.singleton_bound
    )
}

fn distance_detail(d: &DistanceReport) -> String {
    let mut s = format!("{} (trellis, {} states)", d.value, d.states);
    if let Some(bf) = &d.bruteforce {
        let _ = write!(
            s,
            "; brute force {} (deg_bound {}{})",
            bf.value,
            bf.deg_bound,
            if bf.horizon_clipped { ", clipped" } else { "" }
        );
    }
    s
}

pub fn human(r: &CodeReport, emit_matrices: bool, style: Style) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", style.bold(&summary_line(r)));
    let rows: Vec<(&str, String)> = vec![
        ("length n", r.n.to_string()),
        ("dimension k", r.k.to_string()),
        ("degree δ", r.degree.to_string()),
        ("memory m", r.memory.to_string()),
        ("Forney indices", format!("{:?}", r.forney_indices)),
        (
            "free distance",
            r.free_distance
                .as_ref()
                .map_or("not computed".to_string(), distance_detail),
        ),
        ("Singleton bound", r.singleton_bound.to_string()),
        (
            "MDS",
            match r.is_mds {
                Some(true) => "yes".to_string(),
                Some(false) => "no".to_string(),
                None => "unknown".to_string(),
            },
        ),
        (
            "Gamma",
            format!(
                "{} generator{}, evaluation {}",
                r.gamma_size,
                if r.gamma_size == 1 { "" } else { "s" },
                if r.injective { "injective" } else { "not injective" }
            ),
        ),
    ];
    for (key, value) in rows {
        let _ = writeln!(out, "  {key:<16} {value}");
    }
    for w in &r.warnings {
        let _ = writeln!(out, "{}", style.warn(&format!("warning: {w}")));
    }
    if emit_matrices {
        let _ = writeln!(out, "G:\n{}", r.generator_matrix.render_text());
        let _ = writeln!(out, "G (canonical):\n{}", r.canonical_matrix.render_text());
        match &r.parity_matrix {
            Some(h) => {
                let _ = writeln!(out, "H:\n{}", h.render_text());
            }
            None => {
                let _ = writeln!(out, "H: none (k = n)");
            }
        }
    }
    out
}

#[derive(Serialize)]
struct Provenance<'a> {
    invariant: &'a str,
    method: &'a str,
}

#[derive(Serialize)]
struct Matrices {
    generator: Vec<Vec<Vec<i64>>>,
    canonical: Vec<Vec<Vec<i64>>>,
    parity: Option<Vec<Vec<Vec<i64>>>>,
}

#[derive(Serialize)]
struct MachineReport<'a> {
    n: usize,
    k: usize,
    gamma_size: usize,
    injective: bool,
    module_enlarged: bool,
    degree: usize,
    memory: usize,
    forney_indices: &'a [usize],
    free_distance: Option<&'a DistanceReport>,
    singleton_bound: u64,
    is_mds: Option<bool>,
    warnings: &'a [String],
    provenance: Vec<Provenance<'a>>,
    /// Row, column, degree, log-index of the coefficient (-1 for zero).
    matrices: Matrices,
}

/// One JSON document mirroring the report, matrices as log-index arrays.
pub fn machine(r: &CodeReport) -> String {
    let logs = PolyMatrix::to_log_indices;
    let doc = MachineReport {
        n: r.n,
        k: r.k,
        gamma_size: r.gamma_size,
        injective: r.injective,
        module_enlarged: r.module_enlarged,
        degree: r.degree,
        memory: r.memory,
        forney_indices: &r.forney_indices,
        free_distance: r.free_distance.as_ref(),
        singleton_bound: r.singleton_bound,
        is_mds: r.is_mds,
        warnings: &r.warnings,
        provenance: r
            .provenance
            .iter()
            .map(|(i, m)| Provenance {
                invariant: i,
                method: m,
            })
            .collect(),
        matrices: Matrices {
            generator: logs(&r.generator_matrix),
            canonical: logs(&r.canonical_matrix),
            parity: r.parity_matrix.as_ref().map(logs),
        },
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn bounds(b: &ParameterBounds, machine: bool) -> String {
    if machine {
        let mut s = serde_json::to_string_pretty(b).expect("bounds serialize");
        s.push('\n');
        s
    } else {
        format!(
            "n_max={} k_max={} m_max={} δ_max={}\n",
            b.n_max, b.k_max, b.memory_max, b.degree_max
        )
    }
}
