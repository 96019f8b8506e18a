use multireg::coarsen::{bstar_regular, CoarseEngine, RegNumber};
use multireg::cohomology::{reg_s_region, Dim, LocalCohomology, ModuleData};
use multireg::family::{vres_pipeline, IdealFamily};
use multireg::lattice::{Decision, DegreeVector};
use multireg::region::{DegreeBox, ResolutionTypeJ};
use multireg::resolution::{minimal_resolution, GradedComplex};
use multireg::ring::{catalog, load_ring, parse_monomial, MonomialIdeal, RingError, Violation};

const P1P1: &str = r#"
rank = 2
config_C = [[1, 0], [0, 1]]
irrelevant_ideal = ["x0*y0", "x0*y1", "x1*y0", [0, 1, 0, 1]]

[[variables]]
name = "x0"
degree = [1, 0]

[[variables]]
name = "x1"
degree = [1, 0]

[[variables]]
name = "y0"
degree = [0, 1]

[[variables]]
name = "y1"
degree = [0, 1]

[fan]
rays = [[1, 0], [-1, 0], [0, 1], [0, -1]]
cones = [[0, 2], [0, 3], [1, 2], [1, 3]]
"#;

fn dv(c: &[i64]) -> DegreeVector {
    DegreeVector::new(c.to_vec())
}

#[test]
fn ring_file_matches_the_catalog() {
    let from_file = load_ring(P1P1).unwrap();
    let built = catalog::multiprojective(&[1, 1]).unwrap();
    assert_eq!(from_file.variable_names(), built.variable_names());
    assert_eq!(from_file.irrelevant_ideal(), built.irrelevant_ideal());
    let eng = LocalCohomology::for_ring(&from_file).unwrap();
    let region = reg_s_region(&from_file, &eng, &DegreeBox::cube(2, -4, 4)).unwrap();
    assert_eq!(region.generators(), [dv(&[0, 0])]);
}

#[test]
fn parse_errors_carry_positions() {
    let broken = P1P1.replace("rank = 2", "rank = \"two\"");
    match load_ring(&broken) {
        Err(RingError::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn standing_assumptions_are_checked() {
    let bad = P1P1.replace("config_C = [[1, 0], [0, 1]]", "config_C = [[1, 0], [-1, 0]]");
    match load_ring(&bad) {
        Err(RingError::Violations(v)) => assert!(v.iter().any(|x| matches!(x, Violation::ConfigurationNotPointed(_)))),
        other => panic!("expected a violation, got {other:?}"),
    }
}

#[test]
fn weighted_coarse_regularity_is_exact() {
    let ring = catalog::weighted(&[2, 3, 5], 30).unwrap();
    let ce = CoarseEngine::new(&ring, &dv(&[1])).unwrap();
    let s = ModuleData::ring(1);
    assert_eq!(ce.vregnum(&s), RegNumber::Finite { value: 51, exact: true });
    assert_eq!(ce.vreg_membership(&s, 50), Decision::No);
    assert!(ce.vreg_membership(&s, 49).is_yes());
}

#[test]
fn bstar_lists_must_match() {
    let ring = catalog::multiprojective(&[1, 1]).unwrap();
    let s = ModuleData::ring(2);
    assert!(bstar_regular(&ring, &s, &[dv(&[1, 0])], &[0, 0]).is_err());
}

#[test]
fn cohomology_of_the_plane() {
    let ring = catalog::projective_plane().unwrap();
    let eng = LocalCohomology::for_ring(&ring).unwrap();
    assert_eq!(eng.piece_dim(3, &dv(&[-4])), Dim::finite(3));
    assert_eq!(eng.piece_dim(0, &dv(&[2])), Dim::zero());
}

#[test]
fn resolution_pipeline_on_two_monomials() {
    let ring = catalog::multiprojective(&[1, 1]).unwrap();
    let names = ring.variable_names();
    let gens = ["x0*y0", "x0*y1"].iter().map(|s| parse_monomial(s, &names).unwrap()).collect();
    let ideal = MonomialIdeal::new(4, gens).unwrap();
    let c = minimal_resolution(&ring, &ideal).unwrap();
    let back = GradedComplex::from_json(&c.to_json().to_string()).unwrap();
    assert_eq!(back.type_j(), c.type_j());
    let want: ResolutionTypeJ = "0:{(0,0)};1:{(1,1),(1,1)};2:{(1,2)}".parse().unwrap();
    assert_eq!(c.type_j(), want);
    let fam = IdealFamily::from_fan(&ring).unwrap().with_orthogonal_vectors(&ring).unwrap();
    let report = vres_pipeline(&ring, &fam, &want, &dv(&[1, 1]), None).unwrap();
    assert!(report.passed());
}

#[test]
fn hirzebruch_family_has_no_orthogonal_vectors() {
    let ring = catalog::hirzebruch(1).unwrap();
    let fam = IdealFamily::from_fan(&ring).unwrap();
    assert!(fam.decomposes(&ring).unwrap());
    assert!(fam.with_orthogonal_vectors(&ring).is_err());
}
