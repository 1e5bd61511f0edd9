#![allow(dead_code)]

use proptest::prelude::*;
use substgf::subst::{catalog, fixed_point_seed, Substitution};

pub fn corpus() -> Vec<(&'static str, Substitution)> {
    vec![
        ("fibonacci", catalog::fibonacci()),
        ("xyz", catalog::xyz()),
        ("period_two", catalog::period_two()),
        ("thue_morse", catalog::thue_morse()),
        ("pairs", catalog::fibonacci_pairs()),
    ]
}

const LETTERS: [char; 4] = ['a', 'b', 'c', 'd'];

/// Images of length 1..=4 over `k` letters, `k` in `2..=max_k`.
pub fn substitution(max_k: usize) -> impl Strategy<Value = Substitution> {
    (2..=max_k)
        .prop_flat_map(|k| prop::collection::vec(prop::collection::vec(0..k, 1..=4), k))
        .prop_map(|images| {
            let owned: Vec<(char, String)> = images
                .iter()
                .enumerate()
                .map(|(i, img)| (LETTERS[i], img.iter().map(|&l| LETTERS[l]).collect()))
                .collect();
            let rules: Vec<(char, &str)> = owned.iter().map(|(c, s)| (*c, s.as_str())).collect();
            Substitution::from_rules(&rules).expect("well-formed rules")
        })
}

/// Primitive substitutions with a growing fixed-point seed.
pub fn primitive_substitution(max_k: usize) -> impl Strategy<Value = Substitution> {
    substitution(max_k).prop_filter("primitive with a growing seed", |s| fixed_point_seed(s).is_ok())
}
