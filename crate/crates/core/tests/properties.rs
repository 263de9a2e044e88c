mod common;

use num_bigint::BigInt;
use num_traits::Zero;
use operadlab::arith::{PolyQ, Rational, Scalar};
use operadlab::linalg::{rank, DynMatrix, Matrix};
use operadlab::morphisms::{dendriform_partition, koszul_sign_twist, polarize, split_expand};
use operadlab::operad::{
    canonicalize_polar, extract_generators, module_equal, perm_act, Membership, Monomial, Perm3,
    Relation, RenderOptions, Space,
};
use proptest::prelude::*;

use common::{small_poly, word};

const TRANSPOSITIONS: [[u8; 3]; 3] = [[1, 0, 2], [0, 2, 1], [2, 1, 0]];

#[test]
fn transpositions_are_involutions() {
    for space in [Space::So1Plain, Space::So1Polar, Space::So2] {
        for m in space.basis() {
            for t in TRANSPOSITIONS {
                let t = Perm3::new(t).unwrap();
                let once = perm_act(t, &m).unwrap();
                let twice = perm_act(t, &once.monomial).unwrap();
                assert_eq!((once.sign * twice.sign, twice.monomial), (1, m));
            }
        }
    }
}

#[test]
fn canonicalization_fixes_canonical_monomials() {
    for m in Space::So1Polar.basis() {
        let c = canonicalize_polar(&m.to_tree()).unwrap();
        assert_eq!((c.sign, c.monomial), (1, m));
    }
}

#[test]
fn polarization_is_invertible() {
    let rows: Vec<Vec<BigInt>> = Space::So1Plain
        .basis()
        .map(|m| {
            let r = Relation::from_terms(Space::So1Plain, [(BigInt::from(1), m)]).unwrap();
            polarize(&r).unwrap().coeffs
        })
        .collect();
    assert_eq!(rank(&Matrix::from_rows(rows, 12).unwrap()), 12);
}

#[test]
fn perm_group_laws() {
    for a in Perm3::all() {
        assert_eq!(a.compose(a.inverse()), Perm3::IDENTITY);
        for b in Perm3::all() {
            assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
            for c in Perm3::all() {
                assert_eq!(a.compose(b).compose(c), a.compose(b.compose(c)));
            }
        }
    }
}

fn int_relation(space: Space) -> impl Strategy<Value = Relation<BigInt>> {
    proptest::collection::vec(-3i64..=3, space.dim())
        .prop_map(move |c| Relation::from_i64(space, &c).unwrap())
}

fn poly_relation(space: Space) -> impl Strategy<Value = Relation<PolyQ>> {
    proptest::collection::vec(small_poly(), space.dim())
        .prop_map(move |c| Relation::new(space, c).unwrap())
}

fn any_space() -> impl Strategy<Value = Space> {
    prop_oneof![
        Just(Space::O1),
        Just(Space::O2),
        Just(Space::So1Plain),
        Just(Space::So1Polar),
        Just(Space::So2)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn split_image_is_constant_across_operations(r in int_relation(Space::So1Plain)) {
        let s = split_expand(&r).unwrap();
        for sigma in 0..6 {
            for (block, plain) in [(0..4, 0), (4..8, 1)] {
                for ty in block {
                    prop_assert_eq!(&s.coeffs[ty * 6 + sigma], &r.coeffs[plain * 6 + sigma]);
                }
            }
        }
    }

    #[test]
    fn split_is_injective(a in int_relation(Space::So1Plain), b in int_relation(Space::So1Plain)) {
        prop_assert_eq!(a == b, split_expand(&a).unwrap() == split_expand(&b).unwrap());
    }

    #[test]
    fn relation_text_round_trips(space in any_space(), seed in proptest::collection::vec(-3i64..=3, 48)) {
        let r: Relation<BigInt> = Relation::from_i64(space, &seed[..space.dim()]).unwrap();
        for unicode in [false, true] {
            let text = r.render(RenderOptions { unicode });
            prop_assert_eq!(&Relation::<BigInt>::parse(space, &text).unwrap(), &r);
        }
    }

    #[test]
    fn polynomial_relation_text_round_trips(r in poly_relation(Space::So2)) {
        let text = r.render(RenderOptions::default());
        prop_assert_eq!(Relation::<PolyQ>::parse(Space::So2, &text).unwrap(), r);
    }

    #[test]
    fn scalar_text_round_trips(p in small_poly(), n in -50i64..50, d in 1i64..20) {
        prop_assert_eq!(PolyQ::parse(&p.to_string()).unwrap(), p.clone());
        let x = Rational::new(n.into(), d.into());
        prop_assert_eq!(Rational::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn matrix_json_round_trips(m in common::small_poly_matrix(4, 6)) {
        let d = DynMatrix::from(m);
        prop_assert_eq!(DynMatrix::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn partition_preserves_entries(seed in proptest::collection::vec(-3i64..=3, 96)) {
        let rows: Vec<Vec<i64>> = seed.chunks(48).map(<[i64]>::to_vec).collect();
        let m = common::int_matrix(&rows, 48);
        let (blocks, xi) = dendriform_partition(&m).unwrap();
        prop_assert_eq!(blocks.iter().map(Matrix::ncols).collect::<Vec<_>>(), vec![18, 18, 12]);
        prop_assert_eq!(xi.undo(&xi.apply(&m)), m.clone());
        let mut before: Vec<BigInt> = m.entries().to_vec();
        let mut after: Vec<BigInt> = blocks.iter().flat_map(|b| b.entries().to_vec()).collect();
        before.sort();
        after.sort();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn twist_is_an_involution(seed in proptest::collection::vec(-3i64..=3, 48), symmetric: bool) {
        let width = if symmetric { 48 } else { 8 };
        let m = common::int_matrix(&[seed[..width].to_vec()], width);
        let twice = koszul_sign_twist(&koszul_sign_twist(&m, symmetric).unwrap(), symmetric).unwrap();
        prop_assert_eq!(twice, m);
    }

    #[test]
    fn extraction_preserves_module(rels in proptest::collection::vec(int_relation(Space::So1Polar), 1..5), w in word()) {
        // Append dependent combinations so extraction has something to drop.
        let mut all = rels.clone();
        for &(a, b, k) in &w {
            let x = &rels[a % rels.len()];
            let y = &rels[b % rels.len()];
            all.push(x.add(&y.act(Perm3::from_index((a + b) % 6)).unwrap().scale(&BigInt::from(k))).unwrap());
        }
        for mode in [Membership::Ring, Membership::Field] {
            let ext = extract_generators(&all, true, mode).unwrap();
            let kept: Vec<Relation<BigInt>> = ext.minimal.iter().map(|&i| all[i].clone()).collect();
            prop_assert!(module_equal(&kept, &all, mode).unwrap());
            prop_assert!(ext.minimal.iter().all(|i| ext.forward.contains(i)));
            prop_assert!(kept.iter().all(|r| !r.is_zero()) || all.iter().all(Relation::is_zero));
        }
    }

    #[test]
    fn monomial_index_round_trips(space in any_space(), i in 0usize..48) {
        let i = i % space.dim();
        prop_assert_eq!(Monomial::from_index(space, i).index(), i);
    }
}

#[test]
fn zero_relation_renders_as_zero() {
    let z: Relation<BigInt> = Relation::zero(Space::So2);
    assert!(z.coeffs.iter().all(Zero::is_zero));
    assert_eq!(z.render(RenderOptions::default()), "0");
}
