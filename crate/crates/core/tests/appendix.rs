use chowkit::appendix::{appendix_intersections, conic_obstruction, hodge_chain, ruled_sigma};

#[test]
fn multiplicity_relation() {
    let r = appendix_intersections().unwrap();
    assert_eq!(r.quad_number, r.multiplicity * r.deg_s);
    assert_eq!(2 * r.d_h_degree, 4 * 5);
}

#[test]
fn sigma_parity_is_independent_of_offset() {
    for a in 0..=5 {
        let base = ruled_sigma(a, 0).unwrap().parity;
        assert_eq!(i64::from(base), a % 2);
        for k in -5..=5 {
            assert_eq!(ruled_sigma(a, k).unwrap().parity, base);
        }
    }
}

#[test]
fn conic_two_path_equalities() {
    let c = conic_obstruction().unwrap();
    assert_eq!(c.zeta14, c.top_chern_sym2);
    assert_eq!(c.zeta13_g, c.c5_sym2_sigma1);
    assert!(!c.section_equation_solvable);
}

#[test]
fn chain_cross_checks() {
    let h = hodge_chain().unwrap();
    assert_eq!(h.chi_top_t_gauss_bonnet, h.chi_top_t_noether);
    assert!(h.s.is_consistent());
    assert_eq!(h.sum_hii_x, 71);
}
