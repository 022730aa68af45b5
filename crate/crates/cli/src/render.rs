//! Text and JSON renderings of planner, rank-locus and report output.

use chowkit::ranklocus::{
    degree_rank_locus, degree_rank_locus_closed_form, dim_rank_locus, Cited, PlannerReport,
};
use chowkit::Error;
use serde::Serialize;

use crate::report::{ReportDocument, Status};

fn line<T>(out: &mut String, label: &str, value: impl std::fmt::Display, field: &Cited<T>) {
    out.push_str(&format!("  {label:<26} {value:<28} [{}]\n", field.citation));
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or("n/a".into(), |x| x.to_string())
}

/// The one-line summary, e.g. `dim 4, K = -H, H^3 = Z/2`.
pub fn plan_summary(p: &PlannerReport) -> String {
    let mut s = format!("dim {}, K = {}", p.dim_x.value, p.k_display());
    if let Some(h3) = p.h3_prediction() {
        s.push_str(&format!(", H^3 = {h3}"));
    }
    s
}

pub fn plan_text(p: &PlannerReport) -> String {
    let spec = &p.spec;
    let mut out = format!(
        "X = W({},{}) cut by {} hyperplanes: {}\n",
        spec.r,
        spec.n,
        spec.c,
        plan_summary(p)
    );
    line(&mut out, "dim Z", p.dim_z.value, &p.dim_z);
    line(&mut out, "dim W", p.dim_w.value, &p.dim_w);
    line(&mut out, "dim X", p.dim_x.value, &p.dim_x);
    line(&mut out, "deg Z", opt(&p.deg_z.value), &p.deg_z);
    line(&mut out, "H^dim X", opt(&p.h_top.value), &p.h_top);
    line(&mut out, "K_X", p.k_display(), &p.k_coefficient);
    line(
        &mut out,
        "canonical type",
        format!("{:?}", p.canonical_type.value),
        &p.canonical_type,
    );
    line(
        &mut out,
        "classification",
        format!("{:?}", p.classification.value),
        &p.classification,
    );
    line(
        &mut out,
        "singular locus dim",
        p.singular_locus_dim.value,
        &p.singular_locus_dim,
    );
    line(
        &mut out,
        "smoothness",
        format!("{:?}", p.smoothness.value),
        &p.smoothness,
    );
    line(
        &mut out,
        "codim Sing W",
        p.singular_codim_in_w.value,
        &p.singular_codim_in_w,
    );
    line(
        &mut out,
        "cohomology iso below",
        p.equivariant_iso_bound.value,
        &p.equivariant_iso_bound,
    );
    line(
        &mut out,
        "Lefschetz range N",
        p.lefschetz_n.value,
        &p.lefschetz_n,
    );
    line(
        &mut out,
        "torsion window",
        opt(&p.torsion_window.value),
        &p.torsion_window,
    );
    line(
        &mut out,
        "obstruction window",
        opt(&p.obstruction_window.value),
        &p.obstruction_window,
    );
    line(
        &mut out,
        "coniveau",
        p.coniveau.value.describe(),
        &p.coniveau,
    );
    if let Some(l) = &p.luna.value {
        let value = format!(
            "weights ({}, {}), M = {}",
            l.weight_plus, l.weight_minus, l.m
        );
        line(&mut out, "Luna slice", value, &p.luna);
        line(&mut out, "slice cone", l.cone_description(), &p.luna);
    }
    if let Some((closed, counted)) = p.fano_singularity_bound.value {
        line(
            &mut out,
            "Fano singular dim",
            format!("{closed} (count {counted})"),
            &p.fano_singularity_bound,
        );
    }
    for note in &p.notes {
        out.push_str(&format!("  note: {note}\n"));
    }
    out
}

pub fn plan_json(p: &PlannerReport) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        summary: String,
        report: &'a PlannerReport,
    }
    serde_json::to_string_pretty(&Doc {
        summary: plan_summary(p),
        report: p,
    })
    .expect("serializes")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankLocusInfo {
    pub r: i64,
    pub n: i64,
    pub ambient_dim: i64,
    pub dim: i64,
    /// `None` beyond the supported Grassmannian scale.
    pub degree: Option<String>,
    pub degree_closed_form: String,
}

pub fn rank_locus_info(r: i64, n: i64) -> Result<RankLocusInfo, Error> {
    let dim = dim_rank_locus(r, n)?;
    let closed = degree_rank_locus_closed_form(r, n)?;
    let degree = match degree_rank_locus(r, n) {
        Ok(d) if d != closed => {
            return Err(Error::Inconsistent(format!(
                "pushforward {d} differs from closed form {closed}"
            )))
        }
        Ok(d) => Some(d.to_string()),
        Err(Error::ScaleExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(RankLocusInfo {
        r,
        n,
        ambient_dim: n * (n + 1) / 2 - 1,
        dim,
        degree,
        degree_closed_form: closed.to_string(),
    })
}

pub fn rank_locus_text(info: &RankLocusInfo) -> String {
    format!(
        "Z({r},{n}) in P{a}: dim {d}, degree {deg} (closed form {c})\n",
        r = info.r,
        n = info.n,
        a = info.ambient_dim,
        d = info.dim,
        deg = info.degree.as_deref().unwrap_or("beyond pushforward scale"),
        c = info.degree_closed_form,
    )
}

pub fn report_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    for c in &doc.checks {
        let status = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        out.push_str(&format!(
            "[{status}] {:<28} expected {:<12} computed {:<12} {}  ({})\n",
            c.id, c.expected, c.computed, c.description, c.citation
        ));
    }
    let failed = doc.failures().count();
    out.push_str(&format!(
        "{} checks, {} passed, {} failed\n",
        doc.checks.len(),
        doc.checks.len() - failed,
        failed
    ));
    for c in doc.failures() {
        out.push_str(&format!("failed: {}\n", c.id));
    }
    out
}
