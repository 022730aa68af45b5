mod oracles;

use chowkit::exact::BigRational;
use chowkit::schubert::{Partition, SchubertRing};
use chowkit::IntersectionRing;
use oracles::hook_length_count;

#[test]
fn degree_of_grassmannian_matches_hook_length() {
    for n in 2..=13usize {
        for k in 1..n {
            if k * (n - k) > 12 {
                continue;
            }
            let ring = SchubertRing::grassmannian(k, n).unwrap();
            let top = ring.pow(&ring.special(1), ring.dim());
            let full = Partition::rectangle(k, n - k);
            let expected = hook_length_count(full.parts());
            assert_eq!(
                ring.integrate(&top),
                BigRational::from_integer(expected.clone()),
                "Gr({k},{n})"
            );
            assert_eq!(full.standard_tableaux(), expected);
        }
    }
}

#[test]
fn sigma_one_powers_on_gr35() {
    let ring = SchubertRing::grassmannian(3, 5).unwrap();
    let six = ring.pow(&ring.special(1), 6);
    assert_eq!(
        six,
        ring.scale(&ring.sigma(&[2, 2, 2]).unwrap(), &chowkit::exact::rat(5))
    );
}

#[test]
fn duality_is_a_perfect_pairing() {
    let ring = SchubertRing::grassmannian(3, 6).unwrap();
    let basis = Partition::all_in_box(3, 3);
    for a in &basis {
        let dual = a.complement(3, 3);
        let count = basis
            .iter()
            .filter(|b| {
                let p = ring.mul(
                    &ring.basis_class((*a).clone()).unwrap(),
                    &ring.basis_class((*b).clone()).unwrap(),
                );
                ring.integrate(&p) != BigRational::from_integer(0.into())
            })
            .count();
        assert_eq!(count, 1);
        assert!(dual.fits_in_box(3, 3));
    }
}
