//! Acceptance suite: every verification criterion at full scale, one test
//! per criterion so failures surface independently. Each passing test prints
//! its own pass line (visible with `--nocapture`); a failing one panics with
//! the matching FAIL line.

use mockingbird_cli::{criteria, Suite};

fn run(number: usize) {
    let list = criteria();
    let criterion = &list[number - 1];
    assert_eq!(criterion.number, number, "criterion table out of order");
    match (criterion.run)(Suite::Full) {
        Ok(()) => println!(
            "criterion {:02} PASS {}",
            criterion.number, criterion.name
        ),
        Err(detail) => panic!(
            "criterion {:02} FAIL {}: {detail}",
            criterion.number, criterion.name
        ),
    }
}

#[test]
fn acceptance_01_element_counts() {
    run(1);
}

#[test]
fn acceptance_02_cover_counts() {
    run(2);
}

#[test]
fn acceptance_03_interval_counts() {
    run(3);
}

#[test]
fn acceptance_04_degree_censuses() {
    run(4);
}

#[test]
fn acceptance_05_height_censuses() {
    run(5);
}

#[test]
fn acceptance_06_series_match_recurrences() {
    run(6);
}

#[test]
fn acceptance_07_meet_and_join_laws() {
    run(7);
}

#[test]
fn acceptance_08_term_to_forest_isomorphism() {
    run(8);
}

#[test]
fn acceptance_09_pruning_preserves_intervals() {
    run(9);
}

#[test]
fn acceptance_10_chain_extrema() {
    run(10);
}

#[test]
fn acceptance_11_coefficient_spot_checks() {
    run(11);
}

#[test]
fn acceptance_12_extremal_product_models() {
    run(12);
}

#[test]
fn acceptance_13_rewrite_engine_fidelity() {
    run(13);
}

#[test]
fn acceptance_14_transitive_reduction() {
    run(14);
}
