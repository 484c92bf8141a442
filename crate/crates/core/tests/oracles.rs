//! Cross-module checks: closed forms against the word pipeline, period
//! polynomial spaces against the cusp-form dimension formula.

use mdz_core::cuspdim::cusp_form_dimension;
use mdz_core::exactalg::rat;
use mdz_core::higherdepth::{analyze_instance, e_matrix, q_corner};
use mdz_core::ihara::check_lemmas;
use mdz_core::periodpoly::{conditions_crosscheck, verify_exact_sequence, wk_plus0};
use mdz_core::sumodd::{compositions, partial_row_closed, IndexTuple, WordPipeline};
use mdz_core::{NcPoly, Word};

#[test]
fn lemmas_hold_through_weight_twenty() {
    for weight in 2..=20 {
        assert!(check_lemmas(weight).is_empty(), "N={weight}");
    }
}

#[test]
fn closed_rows_match_words_for_same_parity_pairs() {
    let mut pipe = WordPipeline::new();
    for weight in 3..=14 {
        for t in compositions(weight, 2) {
            if t.parts()[0] % 2 != t.parts()[1] % 2 {
                continue;
            }
            assert_eq!(partial_row_closed(&t).unwrap(), pipe.partial_row(&t).unwrap(), "{t}");
        }
    }
}

#[test]
fn period_spaces_match_cusp_forms() {
    for k in (4..=40).step_by(2) {
        let dim = wk_plus0(k).unwrap().dim() as u64;
        assert_eq!(dim, cusp_form_dimension(k, 2), "k={k}");
        assert_eq!(dim, (k / 4 - 1) as u64, "k={k}");
    }
    for k in (8..=30).step_by(2) {
        let c = conditions_crosscheck(k).unwrap();
        assert!(c.corrected_matches() && !c.verbatim_matches(), "{c:?}");
    }
}

#[test]
fn exact_sequence_identities() {
    let mut pipe = WordPipeline::new();
    for weight in (8..=20).step_by(2) {
        let r = verify_exact_sequence(weight, &mut pipe).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.middle_dim as u32, weight / 2 - 2);
        assert_eq!(r.rank_partial + r.dim_w, r.middle_dim);
    }
}

#[test]
fn depth_three_worked_examples() {
    let e5 = e_matrix(5, 3).unwrap();
    assert_eq!(e5.matrix.rows(), 3);
    assert_eq!(e5.matrix.rank(), 3);
    assert_eq!(e5.matrix[(2, 2)], q_corner(5));
    assert_eq!(q_corner(9), rat(127, 2));
    assert!(analyze_instance(4, 12).unwrap().invertible);
}

#[test]
fn word_syntax_round_trips() {
    let w: Word = "0.0.-1".parse().unwrap();
    assert_eq!(w.to_string(), "0.0.-1");
    assert_eq!((w.weight(), w.depth()), (3, 1));
    let p = NcPoly::term(w.clone(), rat(-3, 4));
    assert_eq!(p.star().star(), p);
    assert!(IndexTuple::new(vec![0, 3]).is_err());
}
