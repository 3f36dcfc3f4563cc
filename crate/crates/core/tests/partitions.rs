use hookseries::partitions::{
    count_boxed_series, enumerate_hook, enumerate_partitions, hook_count_series,
};
use hookseries::{gauss_binomial, Partition, TruncSeries};
use proptest::prelude::*;

/// p(n) by Euler's pentagonal-number recurrence; independent of enumeration.
fn pentagonal_counts(max: usize) -> Vec<u64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max as i64 {
        let mut total = 0;
        for k in 1.. {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            total += sign * p[(n - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                total += sign * p[(n - g2) as usize];
            }
        }
        p[n as usize] = total;
    }
    p.into_iter().map(|v| v as u64).collect()
}

#[test]
fn enumeration_count_matches_pentagonal_recurrence() {
    let p = pentagonal_counts(25);
    assert_eq!(p[4], 5);
    assert_eq!(p[6], 11);
    for (n, &want) in p.iter().enumerate() {
        let all = enumerate_partitions(n);
        assert_eq!(all.len() as u64, want, "n={n}");
        assert!(all.iter().all(|q| q.size() == n));
        // strictly decreasing in the derived order means no repeats
        assert!(all.windows(2).all(|w| w[0] > w[1]), "order at n={n}");
    }
}

#[test]
fn conjugation_is_an_involution() {
    for n in 0..=20 {
        for q in enumerate_partitions(n) {
            let c = q.conjugate();
            assert_eq!(c.size(), n);
            assert_eq!(c.conjugate(), q);
        }
    }
}

#[test]
fn hook_membership_transposes() {
    for n in 0..=15 {
        for q in enumerate_partitions(n) {
            let c = q.conjugate();
            for k in 0..=4 {
                for l in 0..=4 {
                    assert_eq!(q.in_hook(k, l), c.in_hook(l, k), "{q} k={k} l={l}");
                }
            }
        }
    }
}

#[test]
fn hooks_grow_with_either_parameter() {
    for n in 0..=15 {
        for k in 0..=3 {
            for l in 0..=3 {
                let base = enumerate_hook(n, k, l);
                let wider = enumerate_hook(n, k + 1, l);
                let taller = enumerate_hook(n, k, l + 1);
                assert!(base.iter().all(|q| wider.contains(q) && taller.contains(q)));
            }
        }
    }
}

#[test]
fn hook_enumeration_filters_in_order() {
    for n in 0..=12 {
        let filtered: Vec<Partition> = enumerate_partitions(n)
            .into_iter()
            .filter(|q| q.in_hook(2, 1))
            .collect();
        assert_eq!(enumerate_hook(n, 2, 1), filtered);
    }
}

#[test]
fn boxed_counts_are_gaussian_binomials() {
    for k in 0..=5 {
        for l in 0..=5 {
            let want = TruncSeries::from_poly(&gauss_binomial((k + l) as i64, l as i64), 40);
            assert_eq!(count_boxed_series(k, l, 40), want, "k={k} l={l}");
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    assert_eq!(enumerate_partitions(14), enumerate_partitions(14));
    assert_eq!(enumerate_hook(14, 2, 2), enumerate_hook(14, 2, 2));
    assert_eq!(hook_count_series(2, 3, 18), hook_count_series(2, 3, 18));
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..8, 0..8).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn text_and_json_forms_round_trip(q in partition_strategy()) {
        prop_assert_eq!(q.to_string().parse::<Partition>().unwrap(), q.clone());
        let json = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), q);
    }

    #[test]
    fn containment_matches_conjugate_containment(a in partition_strategy(), b in partition_strategy()) {
        prop_assert_eq!(a.contains(&b), a.conjugate().contains(&b.conjugate()));
    }
}
