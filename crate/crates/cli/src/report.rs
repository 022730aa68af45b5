//! The reproduction report: a fixed registry of checks, grouped by tag.

use std::fmt::Display;

use chowkit::appendix::{appendix_intersections, conic_obstruction, hodge_chain, ruled_sigma};
use chowkit::exact::{BigInt, Gf2, GradedElement, Monomial};
use chowkit::ranklocus::{
    degree_rank_locus, degree_rank_locus_closed_form, dim_rank_locus, luna_slice, plan,
    ConiveauVerdict, RankLocusSpec, Smoothness,
};
use chowkit::topology::{
    bgo4_gysin_instance, bso4_group, check_exact, coniveau_obstruction, steenrod_sq, sw_ring, w,
    FGAbelianGroup, ObstructionVerdict, TorsionRingElement,
};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// A value stated by the reference construction.
    Reference,
    /// A value computed here and cross-checked by an independent oracle.
    Derived,
    /// A structural or immediate value.
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub group: &'static str,
    pub description: String,
    pub citation: &'static str,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl ReportDocument {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

type Outcome<T> = Result<T, String>;

struct Group {
    tag: &'static str,
    checks: Vec<Check>,
}

impl Group {
    fn new(tag: &'static str) -> Self {
        Group {
            tag,
            checks: Vec::new(),
        }
    }

    /// Records `computed == expected`; an engine error fails the check.
    fn eq<T: PartialEq + Display>(
        &mut self,
        id: &str,
        description: impl Into<String>,
        citation: &'static str,
        source: Source,
        expected: T,
        computed: Outcome<T>,
    ) {
        let (computed, ok) = match computed {
            Ok(v) => {
                let ok = v == expected;
                (v.to_string(), ok)
            }
            Err(e) => (format!("error: {e}"), false),
        };
        self.checks.push(Check {
            id: format!("{}.{id}", self.tag),
            group: self.tag,
            description: description.into(),
            citation,
            expected: expected.to_string(),
            computed,
            status: if ok { Status::Pass } else { Status::Fail },
            source,
        });
    }
}

fn err(e: impl Display) -> String {
    e.to_string()
}

fn dimensions() -> Group {
    let mut g = Group::new("dimensions");
    for (r, expected) in [(4, 13), (3, 11), (2, 8), (1, 4)] {
        g.eq(
            &format!("z_{r}_5"),
            format!("dim Z_{{{r},5}} in P14"),
            "symmetric 5x5 matrices of rank at most r",
            Source::Reference,
            expected,
            dim_rank_locus(r, 5).map_err(err),
        );
    }
    g
}

/// The pushforward degree, accepted only if the closed form agrees.
fn degree_with_oracle(r: i64, n: i64) -> Outcome<BigInt> {
    let pushed = degree_rank_locus(r, n).map_err(err)?;
    let closed = degree_rank_locus_closed_form(r, n).map_err(err)?;
    if pushed == closed {
        Ok(pushed)
    } else {
        Err(format!("pushforward {pushed} but closed form {closed}"))
    }
}

fn degrees() -> Group {
    let mut g = Group::new("degrees");
    for (r, expected) in [(4, 5), (3, 20), (2, 35), (1, 16)] {
        g.eq(
            &format!("z_{r}_5"),
            format!("deg Z_{{{r},5}} by Segre pushforward, matching the product formula"),
            "degrees of symmetric determinantal loci of 5x5 matrices",
            Source::Reference,
            BigInt::from(expected),
            degree_with_oracle(r, 5),
        );
    }
    g
}

fn corank_one() -> Group {
    let mut g = Group::new("corank-one");
    for n in 2..=6 {
        g.eq(
            &format!("n_{n}"),
            format!("deg Z_{{{},{n}}} is the degree of the determinant", n - 1),
            "the corank-one locus is the determinantal hypersurface",
            Source::Derived,
            BigInt::from(n),
            degree_with_oracle(n - 1, n),
        );
    }
    g
}

fn appendix() -> Group {
    let mut g = Group::new("appendix");
    let report = appendix_intersections().map_err(err);
    let field = |f: fn(&chowkit::appendix::AppendixReport) -> i64| report.clone().map(|r| f(&r));
    let citation = "complete intersection of five (1,1) divisors in P4 x P5";
    g.eq(
        "deg_r",
        "h1^3 E5 on Y",
        citation,
        Source::Reference,
        18,
        field(|r| r.deg_r),
    );
    g.eq(
        "deg_s",
        "h1^2 E4 h2 on Y",
        citation,
        Source::Reference,
        15,
        field(|r| r.deg_s),
    );
    g.eq(
        "quad",
        "h1^2 E4 E5 on Y",
        citation,
        Source::Reference,
        60,
        field(|r| r.quad_number),
    );
    g.eq(
        "multiplicity",
        "ratio of the quadric number to deg S",
        citation,
        Source::Reference,
        4,
        field(|r| r.multiplicity),
    );
    g.eq(
        "d_h",
        "degree of D_H with 2 D_H = 4 H",
        "half of four times the degree of Z_{4,5}",
        Source::Reference,
        10,
        field(|r| r.d_h_degree),
    );
    g
}

fn conic() -> Group {
    let mut g = Group::new("conic");
    let report = conic_obstruction().map_err(err);
    let citation = "conic bundle P(E) over Gr(3,5) restricted to the rank locus";
    g.eq(
        "zeta14",
        "integral of zeta^14 on P(E)",
        citation,
        Source::Reference,
        0,
        report.clone().map(|r| r.zeta14),
    );
    g.eq(
        "zeta13_sigma1",
        "absolute value of the integral of zeta^13 sigma1",
        citation,
        Source::Reference,
        20,
        report.clone().map(|r| r.zeta13_g.abs()),
    );
    g.eq(
        "fiber_count",
        "zeta^13 as a number of conic fibres",
        "twice the degree of Z_{4,5}",
        Source::Reference,
        10,
        report.clone().map(|r| r.fiber_count),
    );
    g.eq(
        "no_section",
        "10 = 0 a + 20 b has no integer solution",
        "a rational section would give a degree-one multisection",
        Source::Reference,
        false,
        report.clone().map(|r| r.section_equation_solvable),
    );
    g.eq(
        "two_paths",
        "zeta^14 on P(E) equals c6(Sym2 U^dual) on Gr(3,5)",
        "top Segre class of E is the top Chern class of its quotient",
        Source::Derived,
        true,
        report.map(|r| r.zeta14 == r.top_chern_sym2),
    );
    g
}

fn ruled() -> Group {
    let mut g = Group::new("ruled");
    for a in 0..=1 {
        let parities: Outcome<Vec<u8>> = (-3..=3)
            .map(|k| ruled_sigma(a, k).map(|s| s.parity).map_err(err))
            .collect();
        g.eq(
            &format!("f{a}"),
            format!("C . K_rel mod 2 for every section C = s + k f on F_{a}"),
            "parity on ruled surfaces depends only on the Hirzebruch index",
            Source::Derived,
            true,
            parities.map(|p| p.iter().all(|&x| i64::from(x) == a)),
        );
    }
    g
}

fn hodge() -> Group {
    let mut g = Group::new("hodge");
    let report = hodge_chain().map_err(err);
    let get = |f: fn(&chowkit::appendix::HodgeChainReport) -> i64| report.clone().map(|r| f(&r));
    let t = "surface T cut by six (1,1) divisors in P4 x P4";
    let s = "etale quotient S = T / (Z/2)";
    let x = "Fano fourfold X = W_{4,5} cut by nine hyperplanes";
    g.eq("t_k2", "K_T^2", t, Source::Reference, 70, get(|r| r.t.k2));
    g.eq(
        "t_chi_o",
        "chi(O_T) by Hirzebruch-Riemann-Roch",
        t,
        Source::Reference,
        20,
        get(|r| r.t.chi_o),
    );
    g.eq(
        "t_chi_top",
        "chi_top(T) by Gauss-Bonnet",
        t,
        Source::Reference,
        170,
        get(|r| r.chi_top_t_gauss_bonnet),
    );
    g.eq(
        "t_noether",
        "Gauss-Bonnet agrees with 12 chi(O) - K^2",
        "Noether's formula",
        Source::Derived,
        true,
        report
            .clone()
            .map(|r| r.chi_top_t_gauss_bonnet == r.chi_top_t_noether),
    );
    g.eq("s_k2", "K_S^2", s, Source::Reference, 35, get(|r| r.s.k2));
    g.eq(
        "s_chi_top",
        "chi_top(S)",
        s,
        Source::Reference,
        85,
        get(|r| r.s.chi_top),
    );
    g.eq(
        "s_chi_o",
        "chi(O_S)",
        s,
        Source::Reference,
        10,
        get(|r| r.s.chi_o),
    );
    g.eq(
        "s_h20",
        "h^{2,0}(S)",
        s,
        Source::Reference,
        9,
        get(|r| r.s.h20),
    );
    g.eq(
        "s_h11",
        "h^{1,1}(S)",
        s,
        Source::Reference,
        65,
        get(|r| r.s.h11),
    );
    g.eq(
        "x_h13",
        "h^{1,3}(X) = h^{2,0}(S)",
        x,
        Source::Reference,
        9,
        get(|r| r.h13_x),
    );
    g.eq(
        "x_h22",
        "h^{2,2}(X)",
        x,
        Source::Reference,
        67,
        get(|r| r.h22_x),
    );
    g.eq(
        "x_h4",
        "H^4 on X",
        x,
        Source::Reference,
        10,
        get(|r| r.h4_x),
    );
    g
}

fn planner() -> Group {
    let mut g = Group::new("planner");
    let run = |r, n, c| RankLocusSpec::new(r, n, c).and_then(plan).map_err(err);
    let a = run(4, 5, 9);
    g.eq(
        "x_4_5_9",
        "(4,5,9): dim, K, smoothness, torsion window, obstruction window",
        "Fano fourfold with two-torsion in H^3",
        Source::Reference,
        "dim 4, K = -H, Smooth, torsion yes, obstruction no".to_string(),
        a.map(|p| {
            format!(
                "dim {}, K = {}, {:?}, torsion {}, obstruction {}",
                p.dim_x.value,
                p.k_display(),
                p.smoothness.value,
                yes_no(p.torsion_window.value),
                yes_no(p.obstruction_window.value),
            )
        }),
    );
    let b = run(4, 6, 11);
    g.eq(
        "x_4_6_11",
        "(4,6,11): dim, K, windows, coniveau verdict",
        "squaring obstruction for n at least 6",
        Source::Reference,
        "dim 6, K = -H, torsion yes, obstruction yes, NotStrongConiveau".to_string(),
        b.map(|p| {
            format!(
                "dim {}, K = {}, torsion {}, obstruction {}, {:?}",
                p.dim_x.value,
                p.k_display(),
                yes_no(p.torsion_window.value),
                yes_no(p.obstruction_window.value),
                p.coniveau.value,
            )
        }),
    );
    let c = run(4, 4, 6);
    g.eq(
        "x_4_4_6",
        "(4,4,6): dim, K, smoothness",
        "double quartic symmetroid threefold",
        Source::Reference,
        "dim 3, K = -2H, IsolatedSingularities".to_string(),
        c.map(|p| {
            format!(
                "dim {}, K = {}, {:?}",
                p.dim_x.value,
                p.k_display(),
                p.smoothness.value
            )
        }),
    );
    g.eq(
        "luna_identity",
        "for even 4 <= r <= n <= 12: weights n-r+2, dim C + M = dim W, M = dim Z_{r-2,n}",
        "Luna slice at the singular stratum",
        Source::Derived,
        true,
        luna_table(),
    );
    g
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn luna_table() -> Outcome<bool> {
    for n in 4..=12 {
        for r in (4..=n).step_by(2) {
            let l = luna_slice(r, n).map_err(err)?;
            let stratum = dim_rank_locus(r - 2, n).map_err(err)?;
            let ok = l.weight_plus == n - r + 2
                && l.weight_minus == n - r + 2
                && l.cone_dim + l.m == l.dim_w
                && l.m == stratum;
            if !ok {
                return Err(format!("({r},{n}) gives {l:?}"));
            }
        }
    }
    Ok(true)
}

fn topology() -> Group {
    let mut g = Group::new("topology");
    let cite = "mod-2 cohomology of BSO(4)";
    g.eq(
        "sq1_w2",
        "Sq^1 w2 = w3",
        cite,
        Source::Reference,
        true,
        Ok(steenrod_sq(1, &w(2)) == w(3)),
    );
    let w3_sq = &w(3) * &w(3);
    g.eq(
        "w3_squared",
        "w3^2 is nonzero",
        cite,
        Source::Reference,
        true,
        Ok(w3_sq
            == GradedElement::from_terms(
                sw_ring(),
                [(Monomial::from_dense(&[0, 2, 0]), Gf2(true))],
            )
            && !w3_sq.is_zero()),
    );
    g.eq(
        "nu_squared",
        "nu^2 reduces to w3^2 mod 2",
        "the integral torsion class nu reduces to w3",
        Source::Reference,
        true,
        Ok(TorsionRingElement::nu().pow(2).reduce_mod2() == w3_sq),
    );
    let expect = ["Z", "0", "0", "Z/2", "Z^2", "0", "Z/2"];
    let table: Outcome<Vec<String>> = (0..=6)
        .map(|d| bso4_group(d).map(|x| x.to_string()).map_err(err))
        .collect();
    g.eq(
        "bso4_table",
        "H^d(BSO(4), Z) for d = 0..6",
        "integral cohomology ring Z[nu, e, p]/(2 nu)",
        Source::Reference,
        expect.join(", "),
        table.map(|t| t.join(", ")),
    );
    let z = FGAbelianGroup::free(1);
    let z2 = FGAbelianGroup::cyclic(2).map_err(err);
    let t = FGAbelianGroup::trivial();
    g.eq(
        "gysin",
        "the Gysin sequence with H^1 = 0, H^2 = Z, H^3 = Z/2 is exact",
        "cohomology of the classifying space of O(4) restricted to the identity component",
        Source::Reference,
        true,
        z2.and_then(|z2| {
            bgo4_gysin_instance(t.clone(), z.clone(), z2)
                .and_then(|s| check_exact(&s))
                .map_err(err)
        }),
    );
    g.eq(
        "gysin_negative",
        "replacing H^3 by 0 breaks exactness",
        "exactness checker rejects wrong groups",
        Source::Trivial,
        false,
        bgo4_gysin_instance(t.clone(), z, t)
            .and_then(|s| check_exact(&s))
            .map_err(err),
    );
    g.eq(
        "obstruction_verdicts",
        "nonzero square gives the coniveau verdict, zero square gives none",
        "squaring obstruction to strong coniveau",
        Source::Trivial,
        true,
        Ok(
            coniveau_obstruction(!w3_sq.is_zero()) == ObstructionVerdict::NotStrongConiveau
                && coniveau_obstruction(false) == ObstructionVerdict::NoConclusion,
        ),
    );
    let verdicts = [
        (6, ConiveauVerdict::NotStrongConiveau),
        (5, ConiveauVerdict::ObstructionVanishes),
    ]
    .into_iter()
    .map(|(n, v)| {
        RankLocusSpec::new(4, n, 2 * n - 1)
            .and_then(plan)
            .map(|p| p.coniveau.value == v && p.smoothness.value == Smoothness::Smooth)
            .map_err(err)
    })
    .collect::<Outcome<Vec<bool>>>();
    g.eq(
        "planner_verdicts",
        "planner verdicts at c = 2n - 1 for n = 5 and n = 6",
        "squaring obstruction applied to c = 2n - 1",
        Source::Derived,
        true,
        verdicts.map(|v| v.iter().all(|&b| b)),
    );
    g
}

fn intersect() -> Group {
    let mut g = Group::new("intersect");
    let cases = [
        (
            "k_t_squared",
            "(h1+h2)^8",
            "P4 x P4",
            70,
            "K_T^2 from the expression parser",
            Source::Reference,
        ),
        (
            "deg_r",
            "h1^3*(-2*h1+4*h2)*(h1+h2)^5",
            "P4 x P5",
            18,
            "h1^3 E5 on Y from the expression parser",
            Source::Reference,
        ),
        ("point", "h1", "P1", 1, "a point on P1", Source::Trivial),
    ];
    for (id, expr, amb, expected, description, source) in cases {
        g.eq(
            id,
            format!("{description}: {expr} on {amb}"),
            "calculator front end",
            source,
            BigInt::from(expected),
            crate::intersect(expr, amb).map_err(err),
        );
    }
    g
}

/// Check groups in report order.
type GroupFn = fn() -> Group;

const GROUPS: &[(&str, GroupFn)] = &[
    ("dimensions", dimensions),
    ("degrees", degrees),
    ("corank-one", corank_one),
    ("appendix", appendix),
    ("conic", conic),
    ("ruled", ruled),
    ("hodge", hodge),
    ("planner", planner),
    ("topology", topology),
    ("intersect", intersect),
];

pub fn group_tags() -> Vec<&'static str> {
    GROUPS.iter().map(|(t, _)| *t).collect()
}

/// Runs the selected groups concurrently and assembles them in registry
/// order. `None` runs everything; an unknown tag yields `None`.
pub fn run(only: Option<&str>) -> Option<ReportDocument> {
    let selected: Vec<_> = GROUPS
        .iter()
        .filter(|(tag, _)| only.is_none_or(|o| o == *tag))
        .collect();
    if selected.is_empty() {
        return None;
    }
    let groups: Vec<Group> = std::thread::scope(|s| {
        let handles: Vec<_> = selected.iter().map(|(_, f)| s.spawn(f)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check group panicked"))
            .collect()
    });
    let checks: Vec<Check> = groups
        .into_iter()
        .inspect(|g| debug_assert!(GROUPS.iter().any(|(t, _)| *t == g.tag)))
        .flat_map(|g| g.checks)
        .collect();
    let overall = if checks.iter().all(|c| c.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    Some(ReportDocument {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        checks,
        overall,
    })
}
