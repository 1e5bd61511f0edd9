mod common;

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use proptest::prelude::*;
use substgf::genfun::{
    char_series, detect_period, difference_transform, occurrence_positions, rational_form_from_witness, series_verdict,
    summatory_transform, PeriodWitness, SeriesKind, SeriesVerdict, TruncatedSeries, VerdictOptions,
};
use substgf::rational::{int, Rational};
use substgf::subst::{fixed_point_seed, gap_bound};

const N: usize = 10_000;

#[test]
fn indicators_sum_to_one() {
    for (name, s) in common::corpus() {
        let seed = fixed_point_seed(&s).unwrap();
        let mut total = TruncatedSeries::zeros(N);
        for l in s.alphabet().ids() {
            total = total.add(&char_series(&s, seed, l, N)).unwrap();
        }
        assert!(total.coefficients().iter().all(One::is_one), "{name}");
    }
}

#[test]
fn indicator_is_sum_over_positions() {
    for (name, s) in common::corpus() {
        let seed = fixed_point_seed(&s).unwrap();
        for l in s.alphabet().ids() {
            let c = char_series(&s, seed, l, N);
            let count = c.coefficients().iter().filter(|x| x.is_one()).count();
            let p = occurrence_positions(&s, seed, l, count).unwrap();
            let mut rebuilt = vec![Rational::zero(); N + 1];
            for &q in &p {
                rebuilt[q as usize] += int(1);
            }
            assert_eq!(rebuilt, c.coefficients(), "{name}");
        }
    }
}

#[test]
fn running_count_inverts_positions() {
    for (name, s) in common::corpus() {
        let seed = fixed_point_seed(&s).unwrap();
        for l in s.alphabet().ids() {
            let running = summatory_transform(&char_series(&s, seed, l, N));
            let count = running.coeff(N).clone();
            let count: usize = count.to_integer().try_into().unwrap();
            for (n, p) in occurrence_positions(&s, seed, l, count).unwrap().into_iter().enumerate() {
                assert_eq!(*running.coeff(p as usize), int(n as i64 + 1), "{name}");
            }
        }
    }
}

#[test]
fn first_differences_take_few_values() {
    for (name, s) in common::corpus() {
        let seed = fixed_point_seed(&s).unwrap();
        let bound = gap_bound(&s).unwrap();
        for l in s.alphabet().ids() {
            let p = occurrence_positions(&s, seed, l, 20_000).unwrap();
            let gaps: BTreeSet<u64> = p.windows(2).map(|w| w[1] - w[0]).collect();
            assert!(gaps.len() as u64 <= bound, "{name}: {gaps:?}");
            assert!(gaps.iter().all(|&g| g <= bound), "{name}");
        }
    }
}

#[test]
fn rational_verdicts_re_expand() {
    for (name, s) in common::corpus() {
        let seed = fixed_point_seed(&s).unwrap();
        for l in s.alphabet().ids() {
            for kind in [SeriesKind::Characteristic, SeriesKind::Position] {
                let v = series_verdict(&s, seed, l, kind, &VerdictOptions::default()).unwrap();
                if let SeriesVerdict::Rational { form, .. } = v {
                    let ts = match kind {
                        SeriesKind::Characteristic => char_series(&s, seed, l, 5000),
                        SeriesKind::Position => substgf::genfun::position_series(&s, seed, l, 5000).unwrap(),
                    };
                    assert_eq!(form.expand(5001), ts.coefficients(), "{name}");
                }
            }
        }
    }
}

fn eventually_periodic() -> impl Strategy<Value = (Vec<i64>, usize, usize)> {
    (0usize..20, 1usize..8).prop_flat_map(|(pre, d)| {
        (prop::collection::vec(-3i64..4, pre), prop::collection::vec(-3i64..4, d), 0usize..60).prop_map(
            move |(head, cycle, extra)| {
                let mut v = head;
                let len = 100 + extra;
                while v.len() < len {
                    v.push(cycle[(v.len() - pre) % d]);
                }
                (v, pre, d)
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn difference_then_summation_is_identity(c in prop::collection::vec(-50i64..50, 1..80), m in 0usize..4) {
        let ts = TruncatedSeries::from_ints(c);
        let mut back = difference_transform(&ts, m);
        for _ in 0..m {
            back = summatory_transform(&back);
        }
        prop_assert_eq!(back, ts);
    }

    #[test]
    fn detected_periods_re_expand((seq, pre, d) in eventually_periodic()) {
        let w = detect_period(&seq, 20, 8).unwrap().expect("a witness exists");
        prop_assert!(w.preperiod <= pre && d % w.period == 0);
        prop_assert!(w.holds_on(&seq));
        let coeffs: Vec<Rational> = seq.iter().map(|&x| int(x)).collect();
        let form = rational_form_from_witness(&coeffs, w).unwrap();
        prop_assert_eq!(form.expand(seq.len()), coeffs.clone());
        let summed = form.summed();
        let sums = summatory_transform(&TruncatedSeries::new(coeffs));
        prop_assert_eq!(summed.expand(seq.len()), sums.coefficients());
    }

    #[test]
    fn wrong_witness_is_rejected((seq, _, _) in eventually_periodic()) {
        let w = detect_period(&seq, 20, 8).unwrap().unwrap();
        let coeffs: Vec<Rational> = seq.iter().map(|&x| int(x)).collect();
        let bad = PeriodWitness { preperiod: 0, period: w.period };
        if !bad.holds_on(&seq) {
            prop_assert!(rational_form_from_witness(&coeffs, bad).is_err());
        }
    }
}
