use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use ncsf::algebra::{integer, BasisId, Element};
use ncsf::cli::expr::{evaluate, parse, AtomBasis, Expr};
use ncsf::composition::{Composition, SplitKind};
use ncsf::quotients::Quotient;
use ncsf::words::{convolution, pack, shifted_shuffle, standardize, PackedWord, Permutation};

fn composition(max_weight: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=3usize, 1..=max_weight)
        .prop_filter("weight", move |p| p.iter().sum::<usize>() <= max_weight)
        .prop_map(|p| Composition::new(p).unwrap())
}

fn ambient_basis() -> impl Strategy<Value = AtomBasis> {
    prop_oneof![
        Just(AtomBasis::Ambient(BasisId::Sproduct)),
        Just(AtomBasis::Ambient(BasisId::R)),
        Just(AtomBasis::Ambient(BasisId::L)),
        Just(AtomBasis::Ambient(BasisId::PsiMonomial)),
    ]
}

fn rational() -> impl Strategy<Value = BigRational> {
    (0i64..20, 1i64..5).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

/// Expression trees of total degree at most 6 in one family of atoms.
fn expr(basis: BoxedStrategy<AtomBasis>) -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        rational().prop_map(Expr::Number),
        (basis, composition(3)).prop_map(|(b, c)| Expr::Atom(b, c)),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
        ]
    })
}

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn packed_word(max: usize) -> impl Strategy<Value = PackedWord> {
    prop::collection::vec(1..=max, 1..=max).prop_map(|w| pack(&w).unwrap())
}

fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec((composition(3), -3i64..4), 0..4)
        .prop_map(|terms| Element::from_terms(terms.into_iter().map(|(c, k)| (c, integer(k)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_then_parse_is_stable(e in expr(ambient_basis().boxed())) {
        let printed = e.to_string();
        let reparsed = parse(&printed).unwrap();
        prop_assert_eq!(&reparsed, &e);
        prop_assert_eq!(parse(&reparsed.to_string()).unwrap(), reparsed);
    }

    #[test]
    fn emitted_expansions_reparse(a in ambient_basis(), c in composition(4), target in ambient_basis()) {
        let source = format!("{}{}", a.name(), c);
        let first = evaluate(&parse(&source).unwrap(), target).unwrap();
        let again = evaluate(&parse(&first.to_text()).unwrap(), target).unwrap();
        prop_assert_eq!(first, again);
    }

    #[test]
    fn evaluate_is_linear(
        a in expr(ambient_basis().boxed()),
        b in expr(ambient_basis().boxed()),
        target in ambient_basis(),
    ) {
        let sum = Expr::Add(Box::new(a.clone()), Box::new(b.clone()));
        let (Ok(s), Ok(x), Ok(y)) = (evaluate(&sum, target), evaluate(&a, target), evaluate(&b, target)) else {
            // over the degree cap
            return Ok(());
        };
        let mut expected: BTreeMap<Composition, BigRational> = x.coordinates;
        for (k, v) in y.coordinates {
            *expected.entry(k).or_insert_with(BigRational::zero) += v;
        }
        expected.retain(|_, v| !v.is_zero());
        prop_assert_eq!(s.coordinates, expected);
    }

    #[test]
    fn quotient_evaluation_is_linear(
        q in prop_oneof![Just(Quotient::T), Just(Quotient::U)],
        a in composition(3), b in composition(3), c in composition(2),
    ) {
        let name = q.name();
        let target = AtomBasis::Quotient(q);
        let lhs = evaluate(&parse(&format!("({name}{a} + {name}{b}) * {name}{c}")).unwrap(), target).unwrap();
        let rhs = evaluate(&parse(&format!("{name}{a} * {name}{c} + {name}{b} * {name}{c}")).unwrap(), target).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_is_associative_and_unital(x in element(), y in element(), z in element()) {
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
        prop_assert_eq!(x.multiply(&Element::one()), x.clone());
        prop_assert_eq!(Element::one().multiply(&x), x);
    }

    #[test]
    fn pack_and_standardize_are_idempotent(w in prop::collection::vec(1..=9usize, 1..8)) {
        let p = pack(&w).unwrap();
        prop_assert_eq!(pack(p.letters()).unwrap(), p.clone());
        let s = standardize(&w).unwrap();
        prop_assert_eq!(standardize(s.letters()).unwrap(), s.clone());
        prop_assert_eq!(s.descent_composition(), ncsf::words::descent_composition(&w));
    }

    #[test]
    fn split_reconstructs(k in composition(8), m in 1usize..8) {
        prop_assume!(m < k.weight());
        let split = k.split_at_weight(m).unwrap();
        prop_assert_eq!(split.left.weight(), m);
        let rebuilt = match split.kind {
            SplitKind::Concat => split.left.concat(&split.right),
            SplitKind::NearConcat => split.left.near_concat(&split.right).unwrap(),
        };
        prop_assert_eq!(&rebuilt, &k);
        let other = match split.kind {
            SplitKind::Concat => split.left.near_concat(&split.right).ok(),
            SplitKind::NearConcat => Some(split.left.concat(&split.right)),
        };
        prop_assert_ne!(other, Some(k));
    }

    #[test]
    fn shifted_shuffles_are_permutations(s in permutation(4), t in permutation(4)) {
        let (m, n) = (s.len(), t.len());
        let out = shifted_shuffle(&s, &t);
        prop_assert_eq!(out.len() as u128, ncsf::sequences::binomial(m + n, m));
        for mu in out {
            prop_assert!(Permutation::new(mu.letters().to_vec()).is_ok());
            let low: Vec<usize> = mu.letters().iter().copied().filter(|&x| x <= m).collect();
            prop_assert_eq!(low, s.letters().to_vec());
        }
    }

    #[test]
    fn convolution_restricts_to_left_factor(u in packed_word(3), v in packed_word(3)) {
        for w in convolution(&u, &v) {
            prop_assert!(PackedWord::new(w.letters().to_vec()).is_ok());
            prop_assert_eq!(pack(&w.letters()[..u.len()]).unwrap(), u.clone());
            prop_assert_eq!(pack(&w.letters()[u.len()..]).unwrap(), v.clone());
        }
    }
}
