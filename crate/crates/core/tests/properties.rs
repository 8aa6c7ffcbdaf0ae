//! Invariants over random permutation groups, binary fields, matrices and
//! the twisted ring.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use realgraph_core::constructions::{twisted_mul, MatrixElem, PermElem, TwistedRing};
use realgraph_core::ffield::Gf2kField;
use realgraph_core::groupkit::{close, FiniteGroup, GroupElement};
use realgraph_core::realgraph::{prime_graph, real_prime_graph, real_spectrum, satisfies_p};

const PERM_CAP: usize = 1 << 12;

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn perm_group() -> impl Strategy<Value = FiniteGroup> {
    (2usize..=6)
        .prop_flat_map(|n| proptest::collection::vec(perm(n), 1..=3))
        .prop_map(|gens| {
            let gens: Vec<PermElem> = gens.into_iter().map(|g| PermElem::new(g).unwrap()).collect();
            close(&gens, PERM_CAP).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classes_partition_and_divide_order(g in perm_group()) {
        let classes = g.conjugacy_classes();
        let mut seen = vec![false; g.order()];
        for c in classes.iter() {
            prop_assert_eq!(g.order() % c.size(), 0);
            for &x in &c.members {
                prop_assert!(!seen[x as usize]);
                seen[x as usize] = true;
                prop_assert_eq!(g.element_order(x), c.element_order);
                prop_assert_eq!(g.is_real(x), c.is_real);
            }
        }
        prop_assert!(seen.into_iter().all(|s| s));
    }

    #[test]
    fn real_graph_inside_full_graph(g in perm_group()) {
        let full = prime_graph(&g);
        let real = real_prime_graph(&g);
        for v in &real.vertices {
            prop_assert!(full.vertices.contains(v));
        }
        for &[p, q] in &real.edges {
            prop_assert!(full.has_edge(p, q));
        }
        prop_assert_eq!(satisfies_p(&g).holds, real.is_edgeless());
    }

    #[test]
    fn subgroup_orders_divide(g in perm_group()) {
        let n = g.order();
        let mut subs = vec![g.center(), g.derived_subgroup(), g.fitting(), g.o2prime()];
        for p in g.prime_divisors() {
            let s = g.sylow(p);
            prop_assert_eq!(s.order() as u64, realgraph_core::numtheory::p_part(n as u64, p));
            subs.push(g.p_core(p));
            subs.push(s);
        }
        for h in &subs {
            prop_assert_eq!(n % h.order(), 0);
        }
        for x in g.elements() {
            prop_assert_eq!(n % g.centralizer(&[x]).order(), 0);
        }
    }

    #[test]
    fn o2prime_is_idempotent_with_odd_index(g in perm_group()) {
        let o = g.o2prime();
        prop_assert!(g.is_normal(&o));
        prop_assert_eq!((g.order() / o.order()) % 2, 1);
        let (og, _) = g.subgroup_as_group(&o);
        prop_assert_eq!(og.o2prime().order(), og.order());
    }

    #[test]
    fn quotient_by_derived_subgroup(g in perm_group()) {
        let d = g.derived_subgroup();
        let q = g.quotient(&d).unwrap();
        prop_assert_eq!(q.order() * d.order(), g.order());
        prop_assert!(q.group().is_abelian());
        for x in g.elements() {
            prop_assert_eq!(q.project(x) == q.project(0), d.contains(x));
            for y in g.elements().step_by(7) {
                prop_assert_eq!(q.project(g.mul(x, y)), q.group().mul(q.project(x), q.project(y)));
            }
        }
    }
}

fn odd_order_group() -> impl Strategy<Value = FiniteGroup> {
    // products of odd-length cycles on at most 7 points
    proptest::collection::vec(prop_oneof![Just(3usize), Just(5), Just(7)], 1..=2).prop_map(|lens| {
        let gens: Vec<PermElem> = lens
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let cyc: Vec<usize> = (0..l).map(|j| (j + i) % 7).collect();
                PermElem::from_cycles(7, &[&cyc]).unwrap()
            })
            .collect();
        close(&gens, PERM_CAP).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn odd_order_groups_have_trivial_real_spectrum(g in odd_order_group()) {
        prop_assume!(g.order() % 2 == 1);
        prop_assert_eq!(real_spectrum(&g).orders, vec![1]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn binary_field_axioms(k in 2u32..=16, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = Gf2kField::shared(k).unwrap();
        let mask = f.size() - 1;
        let (a, b, c) = (f.elem(a & mask), f.elem(b & mask), f.elem(c & mask));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.add(&a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), f.one());
            prop_assert_eq!(a.pow(f.size() - 1), f.one());
        }
        prop_assert_eq!(a.add(&b).frobenius(1), a.frobenius(1).add(&b.frobenius(1)));
        prop_assert_eq!(a.mul(&b).frobenius(1), a.frobenius(1).mul(&b.frobenius(1)));
        prop_assert_eq!(a.frobenius(k), a);
        let t = a.trace();
        prop_assert!(t.is_zero() || t == f.one());
    }

    #[test]
    fn matrix_inverse_and_determinant(
        p in prop_oneof![Just(2u32), Just(3), Just(5), Just(7)],
        n in 1usize..=4,
        raw in proptest::collection::vec(any::<i64>(), 32),
    ) {
        let rows = |off: usize| -> Vec<Vec<i64>> {
            (0..n).map(|i| (0..n).map(|j| raw[off + i * n + j]).collect()).collect()
        };
        let (Ok(a), Ok(b)) = (MatrixElem::new(p, &rows(0)), MatrixElem::new(p, &rows(16))) else {
            return Ok(());
        };
        let id = MatrixElem::identity_of(p, n);
        prop_assert_eq!(a.mul(&a.inv()), id.clone());
        prop_assert_eq!(a.inv().mul(&a), id);
        prop_assert_eq!(
            a.mul(&b).determinant(),
            (a.determinant() as u64 * b.determinant() as u64 % p as u64) as u32
        );
    }

    #[test]
    fn scaling_is_conjugation_by_constants(k in prop_oneof![Just(2usize), Just(4), Just(8)], seed in any::<u64>()) {
        let ring = TwistedRing::new(k).unwrap();
        let f = ring.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = ring.random_unit(&mut rng, 1);
        let g = (seed % (f.size() - 1)) + 1;
        let gi = f.elem(g).inv().unwrap().bits();
        prop_assert_eq!(ring.constant(gi).mul(&s).mul(&ring.constant(g)), s.scale_by(g));
        let t = s.inv_principal().unwrap();
        prop_assert_eq!(s.mul(&t), ring.one());
    }
}

fn associativity_sweep(k: usize, triples: usize, seed: u64) {
    let ring = TwistedRing::new(k).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..triples {
        let a = ring.random_in_ideal(&mut rng, 0);
        let b = ring.random_in_ideal(&mut rng, 0);
        let c = ring.random_in_ideal(&mut rng, 0);
        let lhs = twisted_mul(&twisted_mul(&a, &b), &c);
        let rhs = twisted_mul(&a, &twisted_mul(&b, &c));
        assert!(lhs == rhs, "a={} b={} c={}", a.describe(), b.describe(), c.describe());
        assert!(twisted_mul(&a, &b.add(&c)) == twisted_mul(&a, &b).add(&twisted_mul(&a, &c)));
    }
}

#[test]
fn twisted_mul_associative_k4() {
    associativity_sweep(4, 100_000, 4);
}

#[test]
fn twisted_mul_associative_k8() {
    associativity_sweep(8, 100_000, 8);
}

#[test]
fn degree_one_field_is_rejected() {
    assert!(Gf2kField::new(1).is_err());
}
