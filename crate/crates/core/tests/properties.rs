use proptest::prelude::*;

use splab::insertion::{mixed_insert_word, relation_neighbors, PlacticClass, Word};
use splab::mixed_jdt::{audit_rectification, mixed_rectify, mixed_rectify_traced, staircase};
use splab::sagan_worley::{sw_rectify, sw_rectify_with, CornerOrder};
use splab::tableau::{content, enumerate_tableaux, is_q_tableau, is_semistandard, parse_tableau, print_tableau, Mode};
use splab::SkewShape;

fn word(max_letter: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1..=max_letter, 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rectified_staircase_is_the_insertion_tableau(w in word(6, 10)) {
        let rec = mixed_rectify_traced(&staircase(&w)).unwrap();
        prop_assert_eq!(&rec.result, &mixed_insert_word(&w));
        prop_assert!(audit_rectification(&rec).is_ok());
    }

    #[test]
    fn relations_preserve_the_class(w in word(5, 9)) {
        let class = PlacticClass::of_word(&w);
        for v in relation_neighbors(&w) {
            prop_assert_eq!(&PlacticClass::of_word(&v.0), &class, "{} ~ {}", Word(w.clone()), v);
        }
    }

    #[test]
    fn insertion_tableaux_are_fixed_by_rectification(w in word(6, 10)) {
        let t = mixed_insert_word(&w);
        prop_assert!(is_semistandard(&t));
        prop_assert_eq!(t.len(), w.len());
        prop_assert_eq!(mixed_rectify(&t).unwrap(), t.clone());
        prop_assert_eq!(parse_tableau(&print_tableau(&t)).unwrap(), t);
    }
}

#[test]
fn sagan_worley_corner_orders_agree_on_larger_shapes() {
    for shape in ["5,3,1/2", "6,3/3,1", "5,4,2/3,1"] {
        let shape: SkewShape = shape.parse().unwrap();
        for t in enumerate_tableaux(&shape, 3, Mode::QTableau) {
            let r = sw_rectify(&t);
            assert!(is_q_tableau(&r) && r.shape().is_straight(), "{t}");
            assert_eq!(content(&r), content(&t));
            assert_eq!(sw_rectify_with(&t, CornerOrder::HighestFirst, true).unwrap(), r, "{t}");
        }
    }
}
