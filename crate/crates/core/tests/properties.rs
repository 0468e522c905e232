use colorvir_core::jacobi::jacobi_residual;
use colorvir_core::uea::{normal_order, normal_order_with, Factor, Strategy as Order, Word};
use colorvir_core::*;
use proptest::prelude::*;

fn h(t: i32) -> HalfInt {
    HalfInt::from_twice(t)
}

/// `(2 l1, 2 l2)` over the test grid.
fn grid_point() -> impl Strategy<Value = (i32, i32)> {
    (0..4i32, 0..4i32)
}

fn on_lattice(l: i32) -> impl Strategy<Value = HalfInt> {
    (-5..=5i32).prop_map(move |k| h(2 * k + l % 2))
}

/// A valid generator of the (possibly extended) algebra at `(a/2, b/2)`.
fn generator(a: i32, b: i32, extended: bool) -> BoxedStrategy<Generator> {
    let centrals = AlgebraParams::from_twice(a, b)
        .unwrap()
        .extended(extended)
        .centrals();
    let composite = prop_oneof![
        (on_lattice(a), on_lattice(a)).prop_map(|(r, s)| Generator::P2(r, s)),
        (on_lattice(b), on_lattice(b)).prop_map(|(u, v)| Generator::X2(u, v)),
        (on_lattice(a), on_lattice(b)).prop_map(|(r, u)| Generator::T(r, u)),
    ]
    .prop_filter_map("X2(u,u) vanishes", |g| g.canonicalize().map(|(g, _)| g));
    prop_oneof![
        3 => (-6..=6i32).prop_map(Generator::L),
        2 => on_lattice(a).prop_map(Generator::P),
        2 => on_lattice(b).prop_map(Generator::X),
        4 => composite,
        1 => proptest::sample::select(centrals).prop_map(Generator::Central),
    ]
    .boxed()
}

fn setup() -> impl Strategy<Value = (AlgebraParams, Generator, Generator, Generator)> {
    (grid_point(), any::<bool>()).prop_flat_map(|((a, b), ext)| {
        let p = AlgebraParams::from_twice(a, b).unwrap().extended(ext);
        (Just(p), generator(a, b, ext), generator(a, b, ext), generator(a, b, ext))
    })
}

fn degree() -> impl Strategy<Value = Degree> {
    proptest::sample::select(Degree::ALL.to_vec())
}

proptest! {
    #[test]
    fn degree_group_laws(a in degree(), b in degree(), c in degree()) {
        prop_assert_eq!(a.dot(b), b.dot(a));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a + Degree::ZERO, a);
    }

    #[test]
    fn canonicalize_is_idempotent(r in -9..9i32, s in -9..9i32) {
        for g in [Generator::P2(h(r), h(s)), Generator::X2(h(r), h(s)), Generator::T(h(r), h(s))] {
            match g.canonicalize() {
                None => prop_assert_eq!(r, s),
                Some((c, sign)) => {
                    let (again, sign2) = c.canonicalize().unwrap();
                    prop_assert_eq!(again, c);
                    prop_assert_eq!(sign2, 1);
                    prop_assert!(sign == 1 || sign == -1);
                    prop_assert_eq!(c.degree(), g.degree());
                }
            }
        }
    }

    #[test]
    fn degrees_are_stable((p, a, _b, _c) in setup()) {
        let d = degree_of(&a, &p).unwrap();
        prop_assert!(Degree::ALL.contains(&d));
        let (canon, _) = a.canonicalize().unwrap();
        prop_assert_eq!(degree_of(&canon, &p).unwrap(), d);
    }

    #[test]
    fn graded_antisymmetry((p, a, b, _c) in setup()) {
        let ab = color_bracket(&a, &b, &p).unwrap();
        let ba = color_bracket(&b, &a, &p).unwrap();
        let sign = Scalar::from_int(a.degree().sign(b.degree()) as i64);
        prop_assert!((&ab + &ba.scale(sign)).is_zero(), "{} vs {}", ab, ba);
    }

    #[test]
    fn bracket_respects_degree_and_index((p, a, b, _c) in setup()) {
        let e = color_bracket(&a, &b, &p).unwrap();
        let total = a.index() + b.index();
        for (g, _) in e.iter() {
            prop_assert_eq!(g.degree(), a.degree() + b.degree());
            if g.is_central() {
                prop_assert!(total.is_zero());
                if let Generator::Central(z) = g {
                    prop_assert!(z.admissible(p.l1(), p.l2()));
                }
            } else {
                prop_assert_eq!(g.index(), total);
            }
        }
    }

    #[test]
    fn restriction_to_superalgebra((p, a, b, _c) in setup()) {
        // brackets involving L or c are the same in v(l1, l2) and g(l1, l2)
        let plain = p.extended(false);
        let in_v = |g: &Generator| matches!(g, Generator::L(_) | Generator::P(_) | Generator::X(_))
            || *g == Generator::C;
        let touches_l = |g: &Generator| matches!(g, Generator::L(_)) || *g == Generator::C;
        prop_assume!(in_v(&a) && in_v(&b) && (touches_l(&a) || touches_l(&b)));
        prop_assert_eq!(
            super_bracket(&a, &b, &plain).unwrap(),
            color_bracket(&a, &b, &plain).unwrap()
        );
    }

    #[test]
    fn jacobi_holds_on_random_triples((p, a, b, c) in setup()) {
        let r = jacobi_residual(&a, &b, &c, &p).unwrap();
        prop_assert!(r.is_zero(), "{} {} {}: {}", a, b, c, r);
    }

    #[test]
    fn central_members_have_zero_residual(
        ((p, a, b, _c), z) in (setup(), 0..9usize)
    ) {
        let centrals = p.centrals();
        let z = Generator::Central(centrals[z % centrals.len()]);
        prop_assert!(jacobi_residual(&a, &b, &z, &p).unwrap().is_zero());
    }
}

fn factor(a: i32, b: i32) -> impl Strategy<Value = Factor> {
    prop_oneof![
        Just(Factor::C),
        (-4..=4i32).prop_map(Factor::L),
        (-3..=3i32).prop_map(move |k| Factor::P(h(2 * k + a % 2))),
        (-3..=3i32).prop_map(move |k| Factor::X(h(2 * k + b % 2))),
    ]
}

fn word() -> impl Strategy<Value = (AlgebraParams, Word)> {
    grid_point().prop_flat_map(|(a, b)| {
        let p = AlgebraParams::from_twice(a, b).unwrap();
        (
            Just(p),
            proptest::collection::vec(factor(a, b), 0..=5)
                .prop_map(|f| Word::new(Scalar::one(), f)),
        )
    })
}

fn odd_count(f: &[Factor]) -> usize {
    f.iter().filter(|x| matches!(x, Factor::X(_))).count()
}

proptest! {
    #[test]
    fn normal_ordering_is_confluent((p, w) in word()) {
        prop_assert_eq!(
            normal_order_with(&w, &p, Order::LeftmostFirst),
            normal_order_with(&w, &p, Order::RightmostFirst)
        );
    }

    #[test]
    fn normal_ordering_preserves_gradings((p, w) in word()) {
        let n = normal_order(&w, &p);
        for (factors, _) in n.iter() {
            let term = Word::new(Scalar::one(), factors.to_vec());
            prop_assert!(term.is_normal());
            prop_assert_eq!(term.degree(), w.degree());
            prop_assert_eq!(odd_count(factors) % 2, odd_count(&w.factors) % 2);
        }
    }
}
