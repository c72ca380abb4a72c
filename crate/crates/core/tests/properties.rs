use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dexter::poly::{cyclotomic_factor, cyclotomic_product};
use dexter::{dexter as dx, hochschild, invariants, meet, monoid};
use dexter::{kappa, kappa_inv, DyckPath, EdgeColor, Poset};

fn dyck(max: usize) -> impl Strategy<Value = DyckPath> {
    (1..=max, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let all = DyckPath::all(n);
        all[i.index(all.len())]
    })
}

/// Two paths of the same size.
fn dyck_pair(max: usize) -> impl Strategy<Value = (DyckPath, DyckPath)> {
    (1..=max, any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(|(n, i, j)| {
        let all = DyckPath::all(n);
        (all[i.index(all.len())], all[j.index(all.len())])
    })
}

fn permuted<T: Clone + Eq + std::hash::Hash>(p: &Poset<T>, perm: &[usize]) -> Poset<T> {
    // Element i of p lands at position perm[i].
    let mut els = vec![p.elements()[0].clone(); p.len()];
    for (i, &k) in perm.iter().enumerate() {
        els[k] = p.elements()[i].clone();
    }
    let edges: Vec<(usize, usize, EdgeColor)> = p.edges().map(|(i, j, c)| (perm[i], perm[j], c)).collect();
    Poset::from_covers(els, edges)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn meet_is_a_greatest_lower_bound((u, v) in dyck_pair(7)) {
        let m = meet::meet(u, v).unwrap();
        prop_assert_eq!(m, meet::meet(v, u).unwrap());
        prop_assert_eq!(meet::meet(u, u).unwrap(), u);
        prop_assert!(dx::path_leq(m, u) && dx::path_leq(m, v));
        for x in dx::down_set(u) {
            if dx::path_leq(x, v) {
                prop_assert!(dx::path_leq(x, m));
            }
        }
    }

    #[test]
    fn kappa_roundtrips(w in dyck(12)) {
        let t = kappa(w);
        prop_assert_eq!(t.inner_nodes(), w.size());
        prop_assert_eq!(kappa_inv(&t).unwrap(), w);
    }

    #[test]
    fn sharp_is_associative(u in dyck(8), v in dyck(8), w in dyck(8)) {
        let l = monoid::sharp(monoid::sharp(u, v).unwrap(), w).unwrap();
        let r = monoid::sharp(u, monoid::sharp(v, w).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn cyclotomic_factorization_roundtrips(
        factors in prop::collection::btree_map(1u64..40, 1u32..3, 0..5)
    ) {
        let factors: Vec<(u64, u32)> = factors.into_iter().collect();
        let p = cyclotomic_product(&factors);
        let f = cyclotomic_factor(&p);
        prop_assert!(f.is_complete());
        prop_assert_eq!(&f.factors, &factors);
        prop_assert_eq!(f.expand(), p);
    }

    #[test]
    fn invariants_ignore_labelling(w in dyck(5), seed in any::<u64>()) {
        let p = dx::j_interval(w);
        let mut perm: Vec<usize> = (0..p.len()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let q = permuted(&p, &perm);
        prop_assert!(invariants::poset_isomorphic(&p, &q).unwrap());
        prop_assert_eq!(invariants::coxeter_coeffs(&p).unwrap(), invariants::coxeter_coeffs(&q).unwrap());
        prop_assert_eq!(
            invariants::zeta_polynomial(&p).unwrap().eval(-1),
            invariants::zeta_polynomial(&q).unwrap().eval(-1)
        );
    }

    #[test]
    fn rho_roundtrips_on_f(n in 1usize..=7, i in any::<prop::sample::Index>()) {
        let els = hochschild::f_interval(n).unwrap().elements();
        let w = els[i.index(els.len())];
        let z = hochschild::rho(w).unwrap();
        prop_assert_eq!(z.len(), n);
        prop_assert_eq!(hochschild::rho_inv(&z).unwrap(), w);
    }
}
