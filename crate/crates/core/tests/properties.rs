mod oracles;

use oracles::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn schubert_duality(p in schubert_pair(&GRASSMANNIANS)) {
        check_duality(&p)?;
    }

    #[test]
    fn littlewood_richardson_positivity(p in schubert_pair(&GRASSMANNIANS)) {
        check_lr_positivity(&p)?;
    }

    #[test]
    fn pieri_products_match_schur_oracle(p in schubert_pair(&ORACLE_GRASSMANNIANS)) {
        check_schur_oracle(&p)?;
    }

    #[test]
    fn whitney_and_segre(b in split_bundles()) {
        check_whitney_segre(&b)?;
    }

    #[test]
    fn chern_character_roundtrip(b in split_bundles()) {
        check_ch_roundtrip(&b)?;
    }

    #[test]
    fn riemann_roch_on_projective_space(case in hrr_cases()) {
        check_hrr_projective(&case)?;
    }

    #[test]
    fn noether_on_constructed_surfaces(case in surface_cases()) {
        check_noether(&case)?;
    }

    #[test]
    fn cartan_formula(case in cartan_cases()) {
        check_cartan(&case)?;
    }

    #[test]
    fn smith_form_reconstructs(m in small_matrices()) {
        check_snf(&m)?;
    }

    #[test]
    fn exactness_matches_enumeration(t in three_term_sequences()) {
        check_exact_brute_force(&t)?;
    }
}

#[test]
fn oracles_agree_with_known_values() {
    assert!(oracle_self_test());
}

#[test]
fn schur_oracle_on_known_product() {
    use chowkit::schubert::Partition;
    let one = Partition::row(1);
    let prod = schur_oracle_product(2, 4, &one, &one);
    assert_eq!(prod.len(), 2);
}
