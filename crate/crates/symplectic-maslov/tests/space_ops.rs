//! Spaces, lagrangians, group elements, and graphs: constructor
//! validation and the defining identities of graphs in the doubled
//! space.

mod common;

use base_field::linalg::{standard_j, Mat};
use base_field::rat::{rat_int, Rat};
use common::{random_lagrangian, random_sp};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symplectic_maslov::{graph, Lagrangian, SpElement, SpLieElement, SympSpace};

#[test]
fn constructors_validate_their_invariants() {
    // A symplectic Gram matrix must be antisymmetric and nondegenerate.
    assert!(SympSpace::new(Mat::identity(2)).is_err());
    assert!(SympSpace::new(Mat::zeros(2, 2)).is_err());
    assert!(SympSpace::new(Mat::zeros(3, 3)).is_err());
    assert!(SympSpace::new(standard_j(2)).is_ok());

    // A lagrangian basis must be isotropic of full rank.
    let w = SympSpace::standard(1);
    let e1 = Mat::from_rows(vec![vec![rat_int(1)], vec![rat_int(0)]]).unwrap();
    assert!(Lagrangian::new(w.clone(), e1).is_ok());
    let wide = Mat::zeros(2, 2);
    assert!(Lagrangian::new(w.clone(), wide).is_err());

    let w2 = SympSpace::standard(2);
    // span(e₁, e₃) pairs as ⟨e₁|e₃⟩ = 1: not isotropic.
    let bad = Mat::from_cols(vec![
        vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)],
        vec![rat_int(0), rat_int(0), rat_int(1), rat_int(0)],
    ])
    .unwrap();
    assert!(Lagrangian::new(w2.clone(), bad).is_err());
    // Rank-deficient columns.
    let thin = Mat::from_cols(vec![
        vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)],
        vec![rat_int(2), rat_int(0), rat_int(0), rat_int(0)],
    ])
    .unwrap();
    assert!(Lagrangian::new(w2.clone(), thin).is_err());

    // Group elements must preserve the form, Lie elements must satisfy
    // (JX)ᵀ = JX.
    let shear = Mat::from_rows(vec![vec![rat_int(1), rat_int(1)], vec![rat_int(0), rat_int(1)]])
        .unwrap();
    assert!(SpElement::new(w.clone(), shear).is_ok());
    let stretch =
        Mat::from_rows(vec![vec![rat_int(2), rat_int(0)], vec![rat_int(0), rat_int(2)]]).unwrap();
    assert!(SpElement::new(w.clone(), stretch).is_err());
    let trace_free =
        Mat::from_rows(vec![vec![rat_int(1), rat_int(3)], vec![rat_int(2), rat_int(-1)]]).unwrap();
    assert!(SpLieElement::new(w.clone(), trace_free).is_ok());
    let with_trace =
        Mat::from_rows(vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]]).unwrap();
    assert!(SpLieElement::new(w, with_trace).is_err());
}

#[test]
fn pairing_matches_the_gram_matrix() {
    let w = SympSpace::standard(2);
    let v1: Vec<Rat> = vec![rat_int(1), rat_int(2), rat_int(3), rat_int(4)];
    let v2: Vec<Rat> = vec![rat_int(5), rat_int(-1), rat_int(0), rat_int(2)];
    // ⟨v|w⟩ = v₁w₃ + v₂w₄ − v₃w₁ − v₄w₂ = 0 + 4 − 15 + 4 for the standard J.
    let expect = rat_int(-7);
    assert_eq!(w.pairing(&v1, &v2).unwrap(), expect);
    assert_eq!(w.pairing(&v2, &v1).unwrap(), -expect);
    assert_eq!(w.pairing(&v1, &v1).unwrap(), rat_int(0));
}

#[test]
fn graph_of_the_identity_is_the_diagonal() {
    for n in 1..=3 {
        let w = SympSpace::standard(n);
        let id = SpElement::identity(w.clone());
        let gamma = graph(&id).unwrap();
        let diag_basis = Mat::identity(2 * n).vstack(&Mat::identity(2 * n)).unwrap();
        let diagonal = Lagrangian::new(w.doubled(), diag_basis).unwrap();
        assert!(gamma.same_subspace(&diagonal).unwrap());
    }
}

#[test]
fn graphs_are_lagrangian_for_seeded_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(801);
    for n in [1usize, 2] {
        for _ in 0..10 {
            let x = random_sp(&mut rng, n);
            // graph() revalidates isotropy and rank internally.
            let gamma = graph(&x).unwrap();
            assert_eq!(gamma.basis().rank(), 2 * n);
            assert_eq!(gamma.space().dim(), 4 * n);
        }
    }
}

#[test]
fn graph_intersections_measure_fixed_spaces() {
    // dim(Γ_x ∩ Γ_1) = dim ker(x − 1).
    let mut rng = ChaCha8Rng::seed_from_u64(802);
    for n in [1usize, 2] {
        for _ in 0..10 {
            let x = random_sp(&mut rng, n);
            let gx = graph(&x).unwrap();
            let g1 = graph(&SpElement::identity(x.space().clone())).unwrap();
            let fixed = x
                .mat()
                .sub(&Mat::identity(2 * n))
                .unwrap()
                .kernel()
                .len();
            assert_eq!(gx.intersection_dim(&g1).unwrap(), fixed);
        }
    }
}

#[test]
fn transport_and_group_operations_are_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(803);
    for _ in 0..10 {
        let g = random_sp(&mut rng, 2);
        let h = random_sp(&mut rng, 2);
        let l = random_lagrangian(&mut rng, 2);
        // (gh)ℓ = g(hℓ) and g⁻¹(gℓ) = ℓ.
        let via_product = l.transform(&g.mul(&h).unwrap()).unwrap();
        let via_steps = l.transform(&h).unwrap().transform(&g).unwrap();
        assert!(via_product.same_subspace(&via_steps).unwrap());
        let back = l
            .transform(&g)
            .unwrap()
            .transform(&g.inverse().unwrap())
            .unwrap();
        assert!(back.same_subspace(&l).unwrap());
    }
}
