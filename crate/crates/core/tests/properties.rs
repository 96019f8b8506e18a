use std::sync::LazyLock;

use proptest::prelude::*;

use multireg::cohomology::{reg_s_region, LocalCohomology};
use multireg::lattice::{pointed_semigroup, semigroup_member, shifted_region, DegreeVector, GeneratorSet};
use multireg::region::{reg_of_j, DegreeBox, ResolutionTypeJ, SemigroupRegion};
use multireg::resolution::{minimal_resolution, minimalize, taylor_complex};
use multireg::ring::{catalog, GradedRing, MonomialIdeal};

static P1P1: LazyLock<GradedRing> = LazyLock::new(|| catalog::multiprojective(&[1, 1]).unwrap());
static HIRZ: LazyLock<GradedRing> = LazyLock::new(|| catalog::hirzebruch(2).unwrap());

fn degree(lo: i64, hi: i64) -> impl Strategy<Value = DegreeVector> {
    prop::collection::vec(lo..=hi, 2).prop_map(DegreeVector::new)
}

fn ideal(nvars: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u32..=2, nvars), 1..=4)
        .prop_filter("nonzero generators", |g| g.iter().all(|m| m.iter().any(|&e| e > 0)))
        .prop_map(move |g| MonomialIdeal::new(nvars, g).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_vectors_round_trip_through_text(d in degree(-50, 50)) {
        let back: DegreeVector = d.to_string().parse().unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn addition_and_subtraction_cancel(a in degree(-20, 20), b in degree(-20, 20)) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(a.checked_add(&b).unwrap(), &a + &b);
    }

    #[test]
    fn semigroup_witnesses_reproduce_the_degree(d in degree(-3, 6)) {
        let c = GeneratorSet::from_coords([vec![1, 0], vec![1, 1], vec![0, 2]]).unwrap();
        if let Some(w) = semigroup_member(&c, &d).unwrap() {
            let sum = c.iter().zip(&w).fold(DegreeVector::zero(2), |acc, (g, &k)| &acc + &g.checked_scale(k as i64).unwrap());
            prop_assert_eq!(sum, d);
        } else {
            // Not in the cone spanned by C, or outside the parity lattice.
            prop_assert!(d.coords()[1] < 0 || d.coords()[0] < 0 || (d.coords()[0] == 0 && d.coords()[1] % 2 != 0));
        }
    }

    #[test]
    fn regions_are_closed_under_the_semigroup(gens in prop::collection::vec(degree(-4, 4), 1..4), x in degree(-6, 6)) {
        let base = P1P1.nc().clone();
        let r = SemigroupRegion::new(base.clone(), gens).unwrap();
        if r.contains_point(&x).unwrap() {
            for c in base.generators().iter() {
                prop_assert!(r.contains_point(&(&x + c)).unwrap());
            }
        }
    }

    #[test]
    fn translation_commutes_with_membership(gens in prop::collection::vec(degree(-4, 4), 1..4), t in degree(-3, 3), x in degree(-6, 6)) {
        let r = SemigroupRegion::new(P1P1.nc().clone(), gens).unwrap();
        let moved = r.translate(&t).unwrap();
        prop_assert_eq!(moved.contains_point(&(&x + &t)).unwrap(), r.contains_point(&x).unwrap());
    }

    #[test]
    fn shifted_semigroups_nest(j in -3i64..=3, x in degree(-5, 5)) {
        let nc = P1P1.nc();
        let a = shifted_region(nc, j).unwrap();
        let b = shifted_region(nc, j + 1).unwrap();
        if b.contains_point(&x).unwrap() {
            prop_assert!(a.contains_point(&x).unwrap());
        }
    }

    #[test]
    fn local_cohomology_is_shift_covariant(e in degree(-3, 3), d in degree(-5, 5), i in 0usize..=4) {
        let eng = LocalCohomology::for_ring(&HIRZ).unwrap();
        prop_assert_eq!(eng.free_dim(std::slice::from_ref(&e), i, &d), eng.piece_dim(i, &(&d - &e)));
    }

    #[test]
    fn reg_of_j_is_translation_covariant(shifts in prop::collection::vec(degree(-2, 3), 1..3), t in degree(-2, 2)) {
        let ring = &*P1P1;
        let eng = LocalCohomology::for_ring(ring).unwrap();
        let reg_s = reg_s_region(ring, &eng, &DegreeBox::cube(2, -6, 6)).unwrap();
        let j = ResolutionTypeJ::new(vec![shifts.clone()]);
        let moved = ResolutionTypeJ::new(vec![shifts.iter().map(|d| d + &t).collect()]);
        let a = reg_of_j(&j, &reg_s).unwrap().translate(&t).unwrap();
        let b = reg_of_j(&moved, &reg_s).unwrap();
        prop_assert!(a.contains_region(&b).unwrap() && b.contains_region(&a).unwrap());
    }

    #[test]
    fn minimalization_matches_the_minimal_resolution(i in ideal(4)) {
        let ring = &*P1P1;
        let taylor = taylor_complex(ring, &i).unwrap();
        let min = minimalize(&taylor);
        prop_assert!(min.validate(ring).is_ok());
        prop_assert!(min.is_minimal());
        prop_assert_eq!(min.type_j(), minimal_resolution(ring, &i).unwrap().type_j());
        prop_assert_eq!(minimalize(&min).type_j(), min.type_j());
    }

    #[test]
    fn minimal_type_ignores_generator_order(i in ideal(4)) {
        let ring = &*P1P1;
        let mut gens = i.generators().to_vec();
        gens.reverse();
        let j = MonomialIdeal::new(4, gens).unwrap();
        prop_assert_eq!(minimal_resolution(ring, &i).unwrap().type_j(), minimal_resolution(ring, &j).unwrap().type_j());
    }
}

#[test]
fn pointed_semigroup_rejects_lines() {
    let c = GeneratorSet::from_coords([vec![1, 0], vec![-1, 0]]).unwrap();
    assert!(pointed_semigroup(&c).is_err());
}
