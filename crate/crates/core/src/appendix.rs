//! Scripted computations for the Fano fourfold `X = W_{4,5} ∩ H_1 ∩ ... ∩ H_9`:
//! bidegree intersection numbers on `P4 × P5`, the conic-bundle section
//! obstruction, ruled-surface parities and the Hodge-number chain.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::charclass::{from_total, sym2, trivial, whitney_quotient, whitney_sum};
use crate::error::{Error, Result};
use crate::exact::rat;
use crate::ranklocus::degree_rank_locus;
use crate::ring::IntersectionRing;
use crate::schubert::{tautological_chern, Tautological};
use crate::varieties::{
    adjunction_canonical, complete_intersection, etale_double_cover, grassmannian,
    intersection_number_ci, projective_bundle, projective_product, projective_space, surface_hodge,
    CoverDirection, CoverKind, CoverNumbers, PolarizedModel, SurfaceInvariants,
};

fn small(x: BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::ScaleExceeded(format!("{x} does not fit in 64 bits")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixReport {
    /// `h1³ · E5 · Y`.
    pub deg_r: i64,
    /// `h1² · E4 · h2 · Y`.
    pub deg_s: i64,
    /// `h1² · E4 · E5 · Y`.
    pub quad_number: i64,
    /// `quad_number / deg_s`, reported as a ratio.
    pub multiplicity: i64,
    /// `deg D_H` with `2 D_H ∼ 4 H`.
    pub d_h_degree: i64,
}

/// Intersection numbers on `Y = (1,1)^5 ⊂ P4 × P5` with `E4 = (5,-1)` and
/// `E5 = (-2,4)`, all computed in one ambient ring.
pub fn appendix_intersections() -> Result<AppendixReport> {
    let amb = projective_product(&[4, 5]);
    let ring = amb.ring();
    let h1 = ring.var("h1");
    let h2 = ring.var("h2");
    let e4 = ring.linear(&[5, -1]);
    let e5 = ring.linear(&[-2, 4]);
    let y = vec![ring.linear(&[1, 1]); 5];
    let number = |classes: &[_]| intersection_number_ci(&amb, &y, classes).and_then(small);

    let deg_r = number(&[h1.clone(), h1.clone(), h1.clone(), e5.clone()])?;
    let deg_s = number(&[h1.clone(), h1.clone(), e4.clone(), h2])?;
    let quad_number = number(&[h1.clone(), h1, e4, e5])?;
    if deg_s == 0 || quad_number % deg_s != 0 {
        return Err(Error::Inconsistent(format!(
            "{quad_number} is not a multiple of {deg_s}"
        )));
    }
    let deg_z = small(degree_rank_locus(4, 5)?)?;
    Ok(AppendixReport {
        deg_r,
        deg_s,
        quad_number,
        multiplicity: quad_number / deg_s,
        d_h_degree: 4 * deg_z / 2,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConicObstructionReport {
    /// `∫ ζ^14` on `P(E)`, the coefficient of `a` in `D · ζ^13`.
    pub zeta14: i64,
    /// `∫ ζ^13 σ1`, the coefficient of `b`.
    pub zeta13_g: i64,
    /// `∫ c6(Sym² U^∨)` over `Gr(3,5)`.
    pub top_chern_sym2: i64,
    /// `∫ c5(Sym² U^∨) σ1` over `Gr(3,5)`.
    pub c5_sym2_sigma1: i64,
    /// `ζ^13` as a number of conic fibres.
    pub fiber_count: i64,
    /// Whether `fiber_count = zeta14 · a + zeta13_g · b` has integer solutions.
    pub section_equation_solvable: bool,
}

/// The bundle `E = ker(Sym² V^∨ → Sym² U^∨)` of rank 9 on `Gr(3,5)` and the
/// numbers deciding whether `P(E) → W_{4,5}` has a rational section.
pub fn conic_obstruction() -> Result<ConicObstructionReport> {
    let gr = grassmannian(3, 5)?;
    let ring = gr.ring();
    let u_dual = tautological_chern(ring, Tautological::DualSub);
    let sym = sym2(ring, &u_dual)?;
    let e = whitney_quotient(ring, &trivial(ring, 15), &sym)?;
    let pe = projective_bundle(&gr, &e)?;
    let pr = pe.ring();
    let zeta = pe.divisor("zeta").expect("bundle divisor").clone();
    let sigma1 = pe.divisor("sigma1").expect("pulled back divisor").clone();
    let z13 = pr.pow(&zeta, 13);
    let zeta14 = small(pe.integrate_integer("ζ^14", &pr.mul(&z13, &zeta))?)?;
    let zeta13_g = small(pe.integrate_integer("ζ^13 σ1", &pr.mul(&z13, &sigma1))?)?;

    let top_chern_sym2 = small(gr.integrate_integer("c6", sym.component(6))?)?;
    let c5_sym2_sigma1 =
        small(gr.integrate_integer("c5 σ1", &ring.mul(sym.component(5), &ring.special(1)))?)?;

    let fiber_count = 2 * small(degree_rank_locus(4, 5)?)?;
    let g = zeta14.gcd(&zeta13_g);
    let section_equation_solvable = if g == 0 {
        fiber_count == 0
    } else {
        fiber_count % g == 0
    };
    Ok(ConicObstructionReport {
        zeta14,
        zeta13_g,
        top_chern_sym2,
        c5_sym2_sigma1,
        fiber_count,
        section_equation_solvable,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RuledSigma {
    /// `(s + k f) · K_rel` on the Hirzebruch surface `F_a`.
    pub intersection: i64,
    pub parity: u8,
}

/// Parity of `C · K_rel` for the section `C = s + k f` of `F_a = P(O ⊕ O(-a))`,
/// where `s` is the section with `s² = -a` and `K_rel = K - π^* K_{P1}`.
pub fn ruled_sigma(a: i64, k: i64) -> Result<RuledSigma> {
    if a < 0 {
        return Err(Error::InvalidArgument(format!("need a ≥ 0, got {a}")));
    }
    let p1 = projective_space(1);
    let base = p1.ring();
    let f_base = base.var("h1");
    let twist = from_total(
        base,
        1,
        &base.sub(&base.one(), &base.scale(&f_base, &rat(a))),
    );
    let e = whitney_sum(base, &trivial(base, 1), &twist);
    let fa = projective_bundle(&p1, &e)?;
    let ring = fa.ring();
    let zeta = fa.divisor("zeta").expect("bundle divisor").clone();
    let f = fa.divisor("h1").expect("fibre class").clone();
    let s = ring.sub(&zeta, &ring.scale(&f, &rat(a)));
    let self_int = small(fa.integrate_integer("s²", &ring.mul(&s, &s))?)?;
    if self_int != -a {
        return Err(Error::Inconsistent(format!(
            "s² = {self_int}, expected {}",
            -a
        )));
    }
    let k_base = ring.pullback(&p1.canonical());
    let k_rel = ring.sub(&fa.canonical(), &k_base);
    let c = ring.add(&s, &ring.scale(&f, &rat(k)));
    let intersection = small(fa.integrate_integer("C · K_rel", &ring.mul(&c, &k_rel))?)?;
    Ok(RuledSigma {
        intersection,
        parity: intersection.rem_euclid(2) as u8,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeChainReport {
    /// `T`: six `(1,1)` divisors in `P4 × P4`.
    pub t: SurfaceInvariants,
    /// `K_T = (h1 + h2)|_T` by adjunction and by the tangent class.
    pub k_t_is_h1_plus_h2: bool,
    /// `χ_top(T)` by Gauss–Bonnet and by `12 χ(O) - K²`.
    pub chi_top_t_gauss_bonnet: i64,
    pub chi_top_t_noether: i64,
    /// `S = T / (Z/2)`, an étale quotient.
    pub s: SurfaceInvariants,
    pub h13_x: i64,
    pub sum_hii_s: i64,
    pub sum_hii_x: i64,
    pub h22_x: i64,
    pub h4_x: i64,
}

/// `T → S → X`: invariants of `T`, of its étale quotient `S`, and the Hodge
/// numbers of the fourfold `X` whose middle cohomology is built from `S`.
pub fn hodge_chain() -> Result<HodgeChainReport> {
    let amb = projective_product(&[4, 4]);
    let ring = amb.ring();
    let d = ring.linear(&[1, 1]);
    let divisors = vec![d.clone(); 6];
    let t = complete_intersection(&amb, "T", &divisors)?;
    let k_adj = adjunction_canonical(&amb, &divisors);
    let k_t_is_h1_plus_h2 = k_adj == d && t.canonical() == d;

    let chi_top_t_gauss_bonnet = small(t.chi_top()?)?;
    let t_inv = SurfaceInvariants::from_variety(&t, 0)?;
    let chi_top_t_noether = 12 * t_inv.chi_o - t_inv.k2;
    if chi_top_t_noether != chi_top_t_gauss_bonnet {
        return Err(Error::Inconsistent(format!(
            "Gauss–Bonnet gives {chi_top_t_gauss_bonnet}, Noether gives {chi_top_t_noether}"
        )));
    }

    let quotient = etale_double_cover(
        CoverNumbers {
            k2: t_inv.k2,
            chi_top: t_inv.chi_top,
        },
        CoverDirection::CoverToQuotient,
    )?;
    let s = surface_hodge(quotient.k2, quotient.chi_top, 0)?;

    // H^4(X) carries h^{ii}(S) plus the four classes 1, H, H³, H⁴ in even
    // degrees; h^{1,3}(X) = h^{0,2}(S).
    let h13_x = s.h20;
    let sum_hii_s = 1 + s.h11 + 1;
    let sum_hii_x = sum_hii_s + 4;
    let h22_x = sum_hii_x - 4;

    let z = PolarizedModel::hypersurface(14, small(degree_rank_locus(4, 5)?)?)?;
    let x = z
        .double_cover(&CoverKind::Ramified { branch: rat(0) })
        .sections(9)?;
    if x.dim != 4 || x.canonical != rat(-1) {
        return Err(Error::Inconsistent(format!("unexpected model {x:?}")));
    }
    let h4_x = small(x.degree)?;

    Ok(HodgeChainReport {
        t: t_inv,
        k_t_is_h1_plus_h2,
        chi_top_t_gauss_bonnet,
        chi_top_t_noether,
        s,
        h13_x,
        sum_hii_s,
        sum_hii_x,
        h22_x,
        h4_x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersections_on_y() {
        let r = appendix_intersections().unwrap();
        assert_eq!(
            (
                r.deg_r,
                r.deg_s,
                r.quad_number,
                r.multiplicity,
                r.d_h_degree
            ),
            (18, 15, 60, 4, 10)
        );
    }

    #[test]
    fn conic_bundle_numbers() {
        let r = conic_obstruction().unwrap();
        assert_eq!(r.zeta14, 0);
        assert_eq!(r.zeta14, r.top_chern_sym2);
        assert_eq!(r.zeta13_g, r.c5_sym2_sigma1);
        assert_eq!(r.zeta13_g, 20);
        assert_eq!(r.fiber_count, 10);
        assert!(!r.section_equation_solvable);
    }

    #[test]
    fn sigma_parities() {
        assert_eq!(ruled_sigma(1, 0).unwrap().parity, 1);
        assert_eq!(ruled_sigma(0, 0).unwrap().parity, 0);
        for k in -5..=5 {
            assert_eq!(ruled_sigma(2, k).unwrap().parity, 0);
            assert_eq!(ruled_sigma(3, k).unwrap().parity, 1);
        }
        assert!(ruled_sigma(-1, 0).is_err());
    }

    #[test]
    fn chain() {
        let c = hodge_chain().unwrap();
        assert!(c.k_t_is_h1_plus_h2);
        assert_eq!((c.t.k2, c.t.chi_o, c.t.chi_top), (70, 20, 170));
        assert_eq!(
            (c.s.k2, c.s.chi_top, c.s.chi_o, c.s.h20, c.s.h11),
            (35, 85, 10, 9, 65)
        );
        assert_eq!((c.h13_x, c.h22_x, c.h4_x), (9, 67, 10));
    }
}
