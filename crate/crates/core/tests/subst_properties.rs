mod common;

use proptest::prelude::*;
use substgf::genfun::words::positions;
use substgf::rational::{self, Rational};
use substgf::subst::pf::sign_at;
use substgf::subst::{fixed_point_seed, fixed_word_prefix, gap_bound, pf_data, substitution_matrix, SubstitutionMatrix};

#[test]
fn matrix_of_power_is_power_of_matrix() {
    for (name, s) in common::corpus() {
        let a = substitution_matrix(&s);
        for m in 1..=10u32 {
            if s.size() >= 3 && m > 6 {
                // σ^m images grow like λ^m; keep the expansion small.
                break;
            }
            assert_eq!(substitution_matrix(&s.power(m as usize)), a.pow(m).unwrap(), "{name}, m = {m}");
        }
    }
}

#[test]
fn corpus_letters_have_bounded_gaps() {
    for (name, s) in common::corpus() {
        let seed = fixed_point_seed(&s).unwrap();
        let w = fixed_word_prefix(&s, seed, 100_000);
        let bound = gap_bound(&s).unwrap();
        for l in s.alphabet().ids() {
            let p = positions(w.letters(), l);
            assert!(p[0] < bound, "{name}");
            assert!(p.windows(2).all(|x| x[1] - x[0] <= bound), "{name}");
        }
    }
}

fn matrix(k: usize) -> impl Strategy<Value = SubstitutionMatrix> {
    prop::collection::vec(prop::collection::vec(0u64..=2, k), k).prop_map(|rows| SubstitutionMatrix::from_rows(rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn prefixes_nest_and_are_self_similar(s in common::primitive_substitution(3), n in 1usize..400) {
        let seed = fixed_point_seed(&s).unwrap();
        let w = fixed_word_prefix(&s, seed, n);
        let w1 = fixed_word_prefix(&s, seed, n + 1);
        prop_assert!(w.is_prefix_of(&w1));
        let image = s.iterate(&w, seed.power);
        let longer = fixed_word_prefix(&s, seed, image.len());
        prop_assert_eq!(image, longer);
    }

    #[test]
    fn gaps_stay_below_the_bound(s in common::primitive_substitution(3)) {
        let seed = fixed_point_seed(&s).unwrap();
        let w = fixed_word_prefix(&s, seed, 100_000);
        let bound = gap_bound(&s).unwrap();
        for l in s.alphabet().ids() {
            let p = positions(w.letters(), l);
            prop_assert!(!p.is_empty());
            prop_assert!(p[0] < bound);
            prop_assert!(p.windows(2).all(|x| x[1] - x[0] <= bound));
        }
    }

    #[test]
    fn pf_enclosure_brackets_a_sign_change(s in common::primitive_substitution(4)) {
        let pf = pf_data(&substitution_matrix(&s)).unwrap();
        let e = &pf.enclosure;
        let width: Rational = &e.upper - &e.lower;
        prop_assert!(width <= rational::ratio(1, 1_000_000_000_000));
        let (lo, hi) = (sign_at(&pf.min_poly, &e.lower), sign_at(&pf.min_poly, &e.upper));
        prop_assert!(lo != 0 && hi != 0 && lo != hi);
        // The minimal polynomial divides the characteristic polynomial.
        prop_assert!(pf.char_poly.div_rem(&pf.min_poly).1.is_zero());
        if let Some(v) = &pf.value {
            prop_assert!(e.lower < *v && *v < e.upper);
        }
    }

    #[test]
    fn primitivity_on_random_matrices(a in (1usize..=4).prop_flat_map(matrix)) {
        let k = a.size();
        let witness = a.is_primitive();
        let limit = witness.unwrap_or((k - 1) * (k - 1) + 1);
        for m in 1..limit {
            prop_assert!(!a.pow(m as u32).unwrap().is_positive());
        }
        if let Some(w) = witness {
            prop_assert!(a.pow(w as u32).unwrap().is_positive());
        } else {
            prop_assert!(!a.pow(limit as u32).unwrap().is_positive());
        }
    }
}
