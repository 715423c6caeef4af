use descendent::characters::character_table;
use descendent::combinatorics::{partitions_bounded, Partition};
use descendent::quasimodular::reconstruct;
use descendent::rational::{format_rational, parse_rational};
use descendent::*;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn series(order: usize) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(rational(), order + 1).prop_map(QSeries::from_coeffs)
}

fn label(max_weight: u32) -> impl Strategy<Value = DescendentLabel> {
    prop::collection::vec(0u32..6, 0..4)
        .prop_filter("weight bound", move |v| v.iter().map(|k| k + 2).sum::<u32>() <= max_weight)
        .prop_map(DescendentLabel::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_ring_axioms(a in series(8), b in series(8), c in series(8)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), QSeries::zero(8));
        prop_assert_eq!(a.mul(&QSeries::one(8)), a.clone());
    }

    #[test]
    fn powers_add(a in series(6), m in 0i64..4, n in 0i64..4) {
        prop_assert_eq!(a.pow(m).unwrap().mul(&a.pow(n).unwrap()), a.pow(m + n).unwrap());
    }

    #[test]
    fn rational_text_round_trip(q in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn series_json_round_trip(a in series(5)) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<QSeries>(&text).unwrap(), a);
    }

    #[test]
    fn partitions_are_valid(n in 0u32..18) {
        let ps = partitions_of(n);
        prop_assert_eq!(BigInt::from(ps.len()), partition_count(n));
        for p in &ps {
            prop_assert_eq!(p.size(), n);
            prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        }
        // class sizes n!/z_μ add up to n!
        let total: Rational = ps
            .iter()
            .map(|p| Rational::new(BigInt::one(), centralizer_order(p)))
            .sum();
        prop_assert_eq!(total, Rational::one());
    }

    #[test]
    fn character_dimensions_square_sum(d in 1u32..9) {
        let t = character_table(d);
        let id = t.partitions().iter().position(|p| p.parts().iter().all(|&x| x == 1)).unwrap();
        let sum: i64 = (0..t.partitions().len()).map(|i| t.row(i)[id] * t.row(i)[id]).sum();
        let fact: i64 = (1..=d as i64).product();
        prop_assert_eq!(sum, fact);
    }

    #[test]
    fn oracle_agrees(l in label(10), d in 0u32..7) {
        prop_assert_eq!(gw_character_oracle(&l, d), gw_invariant(&l, d));
    }

    #[test]
    fn brackets_are_quasimodular(l in label(10)) {
        prop_assume!(!l.is_empty());
        if l.weight() % 2 == 1 {
            // conjugation flips the sign of every odd-weight invariant
            prop_assert!(bracket_series(&l, 8).is_zero());
            return Ok(());
        }
        let x = to_eisenstein(&l).unwrap();
        let order = qm_dimension(l.weight()).unwrap() + 8;
        prop_assert_eq!(reconstruct(&x, order), bracket_series(&l, order));
    }

    #[test]
    fn label_text_round_trip(l in label(20)) {
        let back: DescendentLabel = l.to_string().parse().unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn small_matroid_invariants(entries in prop::collection::vec(-2i64..3, 15)) {
        // a 3 × 5 integer matrix, column major
        let columns: Vec<Vec<Rational>> = entries
            .chunks(3)
            .map(|c| c.iter().map(|&v| Rational::from_integer(v.into())).collect())
            .collect();
        let m = LinearMatroid::new((0..5u32).collect(), columns, 3).unwrap();
        let bases = m.bases();
        let t = m.tutte().unwrap();
        prop_assert_eq!(t.evaluate(1, 1), bases.len() as i64);
        prop_assert_eq!(t.evaluate(2, 2), 32);
        prop_assert!(m.rank() <= 3);
        // basis exchange
        for a in &bases {
            for b in &bases {
                for x in a.iter().filter(|x| !b.contains(x)) {
                    let ok = b.iter().filter(|y| !a.contains(y)).any(|y| {
                        let mut c: Vec<usize> = a.iter().copied().filter(|z| z != x).collect();
                        c.push(*y);
                        c.sort_unstable();
                        bases.contains(&c)
                    });
                    prop_assert!(ok);
                }
            }
        }
    }
}

#[test]
fn partition_bounds() {
    let ps = partitions_bounded(6, 2, 3);
    let want: Vec<Partition> = [vec![3, 3], vec![2, 2, 2]]
        .into_iter()
        .map(|v| Partition::new(v).unwrap())
        .collect();
    assert_eq!(ps, want);
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!(Partition::new(vec![2, 0]).is_err());
}

#[test]
fn euler_inverse() {
    let p = euler_function(30).mul(&inverse_euler(30));
    assert_eq!(p, QSeries::one(30));
    for (d, c) in inverse_euler(30).coeffs().iter().enumerate() {
        assert_eq!(c, &Rational::from_integer(partition_count(d as u32)));
    }
    assert!(QSeries::zero(3).coeffs().iter().all(Zero::is_zero));
}
