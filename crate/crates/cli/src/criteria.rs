//! The verification suites behind `mockingbird verify`.
//!
//! Fourteen numbered criteria re-check the library's central claims against
//! independent evidence: exhaustively generated lattices against the counting
//! recurrences, structural isomorphisms element by element, and the rewrite
//! engine against hand-checked graphs. The `Fast` suite trims the exhaustive
//! scales so the whole run finishes in seconds; `Full` runs the complete
//! desk-scale verification.
//!
//! Structural checks (those that materialize a whole interval element by
//! element) skip bases whose predicted size exceeds [`INTERVAL_CAP`]; the
//! skipped bases stay covered by the arithmetic-level checks, and each
//! criterion pins the exact number of skips it expects so a regression in
//! the predictions cannot silently empty a loop.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use clap::ValueEnum;
use cls_engine::{CLSDefinition, ExplorationLimits, Reachability};
use duplicative_forests::{
    all_forests, check_isomorphism_via_fr, forest_interval, forest_join, forest_meet, fr,
    interval_cardinality, ladder, ml, parse_forest, pruning, relative_pruning, render_forest,
    Forest,
};
use enumeration::{
    brute_force_census, characteristic_series, sequence, CensusIndex, CensusKind, SequenceName,
};
use lattice_analysis::{is_isomorphic_by, Poset};
use mockingbird_poset::{closed_terms, comb, poset_of, star_max, star_min, MockTerm};
use num_bigint::{BigInt, BigUint};
use term_core::Term;

/// Structural checks skip intervals predicted to exceed this many elements.
/// The all-white five-node chain alone spans 3 263 442 of them.
const INTERVAL_CAP: u32 = 2_000;

/// All-pairs meet/join comparisons run only in lattices up to this size.
const PAIRWISE_CAP: usize = 300;

/// Verification scale selected with `verify --suite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Trimmed exhaustive scales; finishes in a few seconds.
    Fast,
    /// The complete desk-scale verification.
    Full,
}

impl Suite {
    /// Largest lattice generated exhaustively (1806 elements at order 5).
    fn lattice_limit(self) -> usize {
        match self {
            Suite::Fast => 4,
            Suite::Full => 5,
        }
    }

    /// Degree ceiling for the exhaustive censuses of closed terms.
    fn census_degree(self) -> usize {
        match self {
            Suite::Fast => 7,
            Suite::Full => 10,
        }
    }

    /// Largest lattice whose meet/join laws are checked over all pairs.
    fn meet_join_order(self) -> usize {
        match self {
            Suite::Fast => 3,
            Suite::Full => 4,
        }
    }

    /// Node ceiling for the forests whose intervals get the lattice laws.
    fn lattice_forest_nodes(self) -> usize {
        match self {
            Suite::Fast => 4,
            Suite::Full => 5,
        }
    }

    /// Node ceiling for the forests in the pruning-isomorphism sweep.
    fn pruning_forest_nodes(self) -> usize {
        match self {
            Suite::Fast => 4,
            Suite::Full => 6,
        }
    }

    /// Degree ceiling for the term-to-forest isomorphism sweep.
    fn isomorphism_degree(self) -> usize {
        match self {
            Suite::Fast => 4,
            Suite::Full => 6,
        }
    }

    /// Degree ceiling for the height-homogeneity sweep over components.
    fn component_degree(self) -> usize {
        match self {
            Suite::Fast => 4,
            Suite::Full => 6,
        }
    }

    /// Degree ceilings for the chain-extrema sweep: closed terms, then the
    /// open terms over the leaves `M`, `x1`, `x2`.
    fn chain_degrees(self) -> (usize, usize) {
        match self {
            Suite::Fast => (4, 2),
            Suite::Full => (6, 3),
        }
    }
}

/// One verification criterion: a stable number, a short name, and its check.
pub struct Criterion {
    pub number: usize,
    pub name: &'static str,
    pub run: fn(Suite) -> Result<(), String>,
}

/// The criterion table, in fixed order.
pub fn criteria() -> Vec<Criterion> {
    let checks: [(&'static str, fn(Suite) -> Result<(), String>); 14] = [
        ("element counts of generated lattices", check_element_counts),
        ("cover counts of generated lattices", check_cover_counts),
        ("interval counts of generated lattices", check_interval_counts),
        ("degree censuses of extremal terms", check_degree_censuses),
        ("height censuses of extremal terms", check_height_censuses),
        ("series solutions match recurrences", check_series_against_recurrences),
        ("meet and join laws", check_lattice_axioms),
        ("term-to-forest order isomorphism", check_fr_isomorphism),
        ("pruning preserves intervals", check_pruning_invariance),
        ("chain extrema", check_chain_extrema),
        ("indegree and interval-size coefficients", check_displayed_coefficients),
        ("extremal product models", check_model_laws),
        ("rewrite engine fidelity", check_engine_fidelity),
        ("covers form a transitive reduction", check_transitive_reduction),
    ];
    checks
        .into_iter()
        .enumerate()
        .map(|(index, (name, run))| Criterion {
            number: index + 1,
            name,
            run,
        })
        .collect()
}

/// Runs a whole suite and formats one line per criterion plus a summary
/// line, returning the report and the number of failures. The report is
/// deterministic byte-for-byte: fixed order, no timings.
pub fn run_report(suite: Suite) -> (String, usize) {
    let list = criteria();
    let total = list.len();
    let mut report = String::new();
    let mut failures = 0usize;
    for criterion in &list {
        match (criterion.run)(suite) {
            Ok(()) => {
                report.push_str(&format!(
                    "{:02}/{total} PASS {}\n",
                    criterion.number, criterion.name
                ));
            }
            Err(detail) => {
                failures += 1;
                report.push_str(&format!(
                    "{:02}/{total} FAIL {}: {detail}\n",
                    criterion.number, criterion.name
                ));
            }
        }
    }
    if failures == 0 {
        report.push_str(&format!("all {total} criteria passed\n"));
    } else {
        report.push_str(&format!("{failures} of {total} criteria failed\n"));
    }
    (report, failures)
}

/// Exhaustive lattices above the canonical chain terms, cached because
/// several criteria revisit the same orders.
fn comb_lattice(d: usize) -> &'static Poset<MockTerm> {
    static CELLS: [OnceLock<Poset<MockTerm>>; 6] = [const { OnceLock::new() }; 6];
    CELLS[d].get_or_init(|| poset_of(&comb(d)))
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn big(values: &[u64]) -> Vec<BigInt> {
    values.iter().map(|&value| BigInt::from(value)).collect()
}

fn cap() -> BigUint {
    BigUint::from(INTERVAL_CAP)
}

fn check_element_counts(suite: Suite) -> Result<(), String> {
    const DISPLAYED: [u64; 6] = [1, 1, 2, 6, 42, 1806];
    let limit = suite.lattice_limit();
    let table = sequence(SequenceName::Elements, limit + 1);
    ensure(table.values() == big(&DISPLAYED[..=limit]), || {
        "the element recurrence drifted from its known prefix".into()
    })?;
    for d in 0..=limit {
        let generated = comb_lattice(d).stats().elements;
        ensure(BigInt::from(generated) == table.values()[d], || {
            format!(
                "order {d}: generated {generated} elements, recurrence expects {}",
                table.values()[d]
            )
        })?;
    }
    Ok(())
}

fn check_cover_counts(suite: Suite) -> Result<(), String> {
    const DISPLAYED: [u64; 6] = [0, 0, 1, 7, 97, 8287];
    let limit = suite.lattice_limit();
    let table = sequence(SequenceName::Edges, limit + 1);
    ensure(table.values() == big(&DISPLAYED[..=limit]), || {
        "the cover recurrence drifted from its known prefix".into()
    })?;
    for d in 0..=limit {
        let generated = comb_lattice(d).stats().covers;
        ensure(BigInt::from(generated) == table.values()[d], || {
            format!(
                "order {d}: generated {generated} covers, recurrence expects {}",
                table.values()[d]
            )
        })?;
    }
    Ok(())
}

fn check_interval_counts(suite: Suite) -> Result<(), String> {
    const DISPLAYED: [u64; 6] = [1, 1, 3, 17, 371, 144_513];
    let limit = suite.lattice_limit();
    let table = sequence(SequenceName::Intervals, 8);
    ensure(table.values()[..=limit] == big(&DISPLAYED[..=limit]), || {
        "the interval recurrence drifted from its known prefix".into()
    })?;
    for d in 0..=limit {
        let counted = BigInt::from(comb_lattice(d).count_intervals());
        ensure(counted == table.values()[d], || {
            format!(
                "order {d}: counted {counted} intervals, recurrence expects {}",
                table.values()[d]
            )
        })?;
    }
    // Far beyond brute-force reach the recurrence stays exact.
    ensure(
        table.values()[7].to_string() == "438176621806663544657",
        || format!("interval recurrence at order 7 gave {}", table.values()[7]),
    )
}

fn check_degree_censuses(suite: Suite) -> Result<(), String> {
    const MAXIMAL: [u64; 8] = [1, 1, 1, 2, 4, 9, 21, 51];
    const MINIMAL: [u64; 8] = [1, 1, 2, 4, 12, 34, 108, 344];
    const ISOLATED: [u64; 11] = [1, 1, 1, 1, 3, 5, 13, 29, 71, 171, 427];
    let bound = suite.census_degree();
    for (kind, name, displayed) in [
        (CensusKind::Maximal, SequenceName::MaxDegree, &MAXIMAL[..]),
        (CensusKind::Minimal, SequenceName::MinDegree, &MINIMAL[..]),
        (CensusKind::Isolated, SequenceName::IsoDegree, &ISOLATED[..]),
    ] {
        let census =
            brute_force_census(kind, CensusIndex::Degree, bound).map_err(|e| e.to_string())?;
        let table = sequence(name, bound + 1);
        ensure(census.values() == table.values(), || {
            format!("{} census disagrees with its recurrence", census.label())
        })?;
        let prefix = displayed.len().min(bound + 1);
        ensure(census.values()[..prefix] == big(&displayed[..prefix]), || {
            format!("{} census drifted from its known prefix", census.label())
        })?;
    }
    Ok(())
}

fn check_height_censuses(_suite: Suite) -> Result<(), String> {
    let maximal = brute_force_census(CensusKind::Maximal, CensusIndex::Height, 4)
        .map_err(|e| e.to_string())?;
    let minimal = brute_force_census(CensusKind::Minimal, CensusIndex::Height, 4)
        .map_err(|e| e.to_string())?;
    let isolated = brute_force_census(CensusKind::Isolated, CensusIndex::Height, 4)
        .map_err(|e| e.to_string())?;
    ensure(maximal.values() == big(&[1, 1, 2, 10, 170]), || {
        "maximal-by-height census drifted from its known prefix".into()
    })?;
    ensure(minimal.values() == maximal.values(), || {
        "maximal and minimal height censuses disagree".into()
    })?;
    ensure(isolated.values() == big(&[1, 1, 1, 3, 21]), || {
        "isolated-by-height census drifted from its known prefix".into()
    })?;
    // The recurrences reproduce the censuses and extend to height 7 with
    // exact big integers.
    let classes = sequence(SequenceName::ClassesHeight, 8);
    let iso = sequence(SequenceName::IsoHeight, 8);
    ensure(maximal.values() == &classes.values()[..5], || {
        "height census disagrees with the class recurrence".into()
    })?;
    ensure(isolated.values() == &iso.values()[..5], || {
        "isolated census disagrees with its recurrence".into()
    })?;
    ensure(
        classes.values()[7].to_string() == "1285739648704587610",
        || format!("class recurrence at height 7 gave {}", classes.values()[7]),
    )?;
    ensure(iso.values()[7].to_string() == "210065930571", || {
        format!("isolated recurrence at height 7 gave {}", iso.values()[7])
    })
}

fn check_series_against_recurrences(_suite: Suite) -> Result<(), String> {
    const ORDER: usize = 10;
    for name in [
        SequenceName::MaxDegree,
        SequenceName::MinDegree,
        SequenceName::IsoDegree,
        SequenceName::ClassesHeight,
        SequenceName::IsoHeight,
        SequenceName::Elements,
        SequenceName::Edges,
    ] {
        let series = characteristic_series(name, ORDER).map_err(|e| e.to_string())?;
        let expected = recurrence_prefix(name, ORDER + 1);
        ensure(series.coefficients() == expected.as_slice(), || {
            format!("{name} series disagrees with its recurrence")
        })?;
    }
    // The interval statistic has no functional equation of this shape; its
    // recurrence carries an auxiliary parameter instead.
    ensure(
        characteristic_series(SequenceName::Intervals, 3).is_err(),
        || "the interval statistic unexpectedly solved as a plain series".into(),
    )
}

/// The first `len` series coefficients according to the recurrences. The
/// lattice statistics index by lattice order, one above the series order, so
/// their tables shift by one entry.
fn recurrence_prefix(name: SequenceName, len: usize) -> Vec<BigInt> {
    match name {
        SequenceName::Elements | SequenceName::Edges => {
            sequence(name, len + 1).values()[1..].to_vec()
        }
        _ => sequence(name, len).values().to_vec(),
    }
}

fn check_lattice_axioms(suite: Suite) -> Result<(), String> {
    for d in 0..=suite.meet_join_order() {
        ensure(comb_lattice(d).is_lattice(), || {
            format!("order {d} fails the lattice laws")
        })?;
    }
    let expected_skips = match suite {
        Suite::Fast => 0usize,
        Suite::Full => 9,
    };
    let mut skipped = 0usize;
    for size in 1..=suite.lattice_forest_nodes() {
        for forest in all_forests(size) {
            if interval_cardinality(&forest) > cap() {
                skipped += 1;
                continue;
            }
            let poset = forest_interval(&forest);
            ensure(poset.is_lattice(), || {
                format!(
                    "interval above {} fails the lattice laws",
                    render_forest(&forest)
                )
            })?;
            if poset.len() > PAIRWISE_CAP {
                continue;
            }
            for i in 0..poset.len() {
                for j in i..poset.len() {
                    check_meet_join(&poset, &forest, i, j)?;
                }
            }
        }
    }
    ensure(skipped == expected_skips, || {
        format!("{skipped} intervals skipped by the size cap, expected {expected_skips}")
    })
}

/// Compares the recursive meet/join of two interval members against the
/// brute-force meet/join found inside the generated poset.
fn check_meet_join(poset: &Poset<Forest>, context: &Forest, i: usize, j: usize) -> Result<(), String> {
    let left = &poset.elements()[i];
    let right = &poset.elements()[j];
    let meet_index = poset
        .meet(i, j)
        .ok_or_else(|| format!("no meet inside {}", render_forest(context)))?;
    let join_index = poset
        .join(i, j)
        .ok_or_else(|| format!("no join inside {}", render_forest(context)))?;
    let meet = forest_meet(left, right).map_err(|e| e.to_string())?;
    let join = forest_join(left, right).map_err(|e| e.to_string())?;
    ensure(meet == poset.elements()[meet_index], || {
        format!(
            "recursive meet of {} and {} differs from brute force",
            render_forest(left),
            render_forest(right)
        )
    })?;
    ensure(join == poset.elements()[join_index], || {
        format!(
            "recursive join of {} and {} differs from brute force",
            render_forest(left),
            render_forest(right)
        )
    })
}

fn check_fr_isomorphism(suite: Suite) -> Result<(), String> {
    let mut skipped: Vec<String> = Vec::new();
    for degree in 0..=suite.isomorphism_degree() {
        for term in closed_terms(degree) {
            let forest = fr(term.term()).map_err(|e| e.to_string())?;
            if interval_cardinality(&forest) > cap() {
                skipped.push(term.to_string());
                continue;
            }
            let terms = poset_of(&term);
            let forests = forest_interval(&forest);
            let isomorphic =
                check_isomorphism_via_fr(&terms, &forests).map_err(|e| e.to_string())?;
            ensure(isomorphic, || {
                format!("the forest map breaks the order above {term}")
            })?;
        }
    }
    let expected_skips: &[&str] = match suite {
        Suite::Fast => &[],
        Suite::Full => &["M(M(M(M(M(MM)))))"],
    };
    ensure(skipped == expected_skips, || {
        format!("skipped {skipped:?}, expected {expected_skips:?}")
    })?;

    // A worked example with variables: 6 elements, 7 covers on both sides.
    let open = MockTerm::parse("M(x1(Mx2))(MM)").map_err(|e| e.to_string())?;
    let terms = poset_of(&open);
    let forests = forest_interval(&fr(open.term()).map_err(|e| e.to_string())?);
    for (side, stats) in [("term", terms.stats()), ("forest", forests.stats())] {
        ensure(stats.elements == 6 && stats.covers == 7, || {
            format!(
                "{side} side of the open example has {} elements and {} covers",
                stats.elements, stats.covers
            )
        })?;
    }
    let isomorphic = check_isomorphism_via_fr(&terms, &forests).map_err(|e| e.to_string())?;
    ensure(isomorphic, || {
        "the forest map breaks the order above the open example".into()
    })
}

fn check_pruning_invariance(suite: Suite) -> Result<(), String> {
    let expected_skips = match suite {
        Suite::Fast => 0usize,
        Suite::Full => 231,
    };
    let mut skipped = 0usize;
    for size in 1..=suite.pruning_forest_nodes() {
        for forest in all_forests(size) {
            let pruned = pruning(&forest);
            ensure(
                interval_cardinality(&forest) == interval_cardinality(&pruned),
                || {
                    format!(
                        "pruning changes the interval count of {}",
                        render_forest(&forest)
                    )
                },
            )?;
            if interval_cardinality(&forest) > cap() {
                skipped += 1;
                continue;
            }
            let upper = forest_interval(&forest);
            let lower = forest_interval(&pruned);
            let isomorphic = is_isomorphic_by(&upper, &lower, |member| {
                relative_pruning(&forest, member).expect("interval members lie above their base")
            });
            ensure(isomorphic, || {
                format!(
                    "pruning is not an order isomorphism at {}",
                    render_forest(&forest)
                )
            })?;
        }
    }
    ensure(skipped == expected_skips, || {
        format!("{skipped} intervals skipped by the size cap, expected {expected_skips}")
    })?;
    // The chain-term forests prune to the all-white ladders.
    for d in 0..=8 {
        let forest = fr(comb(d + 1).term()).map_err(|e| e.to_string())?;
        ensure(pruning(&forest) == ladder(d), || {
            format!(
                "the chain term of degree {} does not prune to the {d}-rung ladder",
                d + 1
            )
        })?;
    }
    Ok(())
}

fn check_chain_extrema(suite: Suite) -> Result<(), String> {
    for d in 1..=suite.lattice_limit() {
        let extrema = comb_lattice(d).chain_extrema().map_err(|e| e.to_string())?;
        let expected_longest = (1usize << (d - 1)) - 1;
        ensure(
            extrema.shortest_edges == d - 1 && extrema.longest_edges == expected_longest,
            || {
                format!(
                    "order {d} chains span {}..{}, expected {}..{expected_longest}",
                    extrema.shortest_edges,
                    extrema.longest_edges,
                    d - 1
                )
            },
        )?;
    }
    // Above an arbitrary term the chain extrema come straight from its
    // forest statistics: the white count and the ml weight.
    let (closed_bound, open_bound) = suite.chain_degrees();
    let mut terms: Vec<MockTerm> = Vec::new();
    for degree in 0..=closed_bound {
        terms.extend(closed_terms(degree));
    }
    terms.extend(open_terms(open_bound));
    let mut checked = 0usize;
    for term in &terms {
        let forest = fr(term.term()).map_err(|e| e.to_string())?;
        if interval_cardinality(&forest) > cap() {
            continue;
        }
        let extrema = poset_of(term).chain_extrema().map_err(|e| e.to_string())?;
        ensure(extrema.shortest_edges == forest.white_count(), || {
            format!("shortest chain above {term} is not its white count")
        })?;
        ensure(extrema.longest_edges as u128 == ml(&forest) - 1, || {
            format!("longest chain above {term} is not its ml weight minus one")
        })?;
        checked += 1;
    }
    if suite == Suite::Full {
        ensure(checked >= 200, || {
            format!("only {checked} terms reached the chain check")
        })?;
    }
    Ok(())
}

/// Every applicative shape over the leaves `M`, `x1`, `x2` with at most
/// `degree_bound` applications, in a fixed deterministic order.
fn open_terms(degree_bound: usize) -> Vec<MockTerm> {
    let mut by_degree: Vec<Vec<Term>> = vec![vec![Term::con("M"), Term::var(1), Term::var(2)]];
    for degree in 1..=degree_bound {
        let mut level = Vec::new();
        for split in 0..degree {
            for left in &by_degree[split] {
                for right in &by_degree[degree - 1 - split] {
                    level.push(Term::app(left.clone(), right.clone()));
                }
            }
        }
        by_degree.push(level);
    }
    by_degree
        .into_iter()
        .flatten()
        .map(|term| MockTerm::new(term).expect("M is the only constant used"))
        .collect()
}

fn check_displayed_coefficients(_suite: Suite) -> Result<(), String> {
    let base = parse_forest("o[o[]]o[]").map_err(|e| e.to_string())?;
    let poset = forest_interval(&base);
    let stats = poset.stats();
    ensure(stats.elements == 12 && stats.covers == 20, || {
        format!(
            "the worked interval has {} elements and {} covers",
            stats.elements, stats.covers
        )
    })?;
    ensure(poset.count_intervals() == BigUint::from(51u32), || {
        format!("the worked interval counts {} intervals", poset.count_intervals())
    })?;
    let indegrees = poset.cover_indegrees();
    let sizes = poset.interval_sizes();
    // The all-black maximum is covered four ways and dominates everything.
    let maxima = poset.maximal_elements();
    ensure(maxima.len() == 1, || {
        "the worked interval has no unique maximum".into()
    })?;
    let top = maxima[0];
    ensure(poset.elements()[top].white_count() == 0, || {
        "the maximum of the worked interval still has white nodes".into()
    })?;
    ensure(indegrees[top] == 4, || {
        format!("the all-black maximum has indegree {}", indegrees[top])
    })?;
    ensure(sizes[top] == 12, || {
        format!("the all-black maximum has down-interval size {}", sizes[top])
    })?;
    let mut sorted_indegrees = indegrees;
    sorted_indegrees.sort_unstable();
    ensure(
        sorted_indegrees == [0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 4],
        || format!("indegree multiset is {sorted_indegrees:?}"),
    )?;
    let mut sorted_sizes = sizes;
    sorted_sizes.sort_unstable();
    ensure(
        sorted_sizes == [1, 2, 2, 2, 3, 3, 4, 4, 6, 6, 6, 12],
        || format!("interval-size multiset is {sorted_sizes:?}"),
    )
}

fn check_model_laws(_suite: Suite) -> Result<(), String> {
    let mut maximal = Vec::new();
    let mut minimal = Vec::new();
    for degree in 0..=4 {
        for term in closed_terms(degree) {
            if term.is_maximal() {
                maximal.push(term.clone());
            }
            if term.is_minimal() {
                minimal.push(term);
            }
        }
    }
    ensure(maximal.len() == 9 && minimal.len() == 20, || {
        format!(
            "found {} maximal and {} minimal terms through degree 4",
            maximal.len(),
            minimal.len()
        )
    })?;
    for a in &maximal {
        for b in &maximal {
            let product = star_max(a, b).map_err(|e| e.to_string())?;
            ensure(product.is_maximal(), || {
                format!("{a} * {b} leaves the maximal model")
            })?;
            // Oracle: the product is the top of the order above `a b`.
            let poset = poset_of(&MockTerm::app(a.clone(), b.clone()));
            let maxima = poset.maximal_elements();
            ensure(
                maxima.len() == 1 && poset.elements()[maxima[0]] == product,
                || format!("{a} * {b} is not the top above their application"),
            )?;
        }
    }
    for a in &minimal {
        for b in &minimal {
            let product = star_min(a, b).map_err(|e| e.to_string())?;
            ensure(product.is_minimal(), || {
                format!("{a} * {b} leaves the minimal model")
            })?;
            // Oracle: the product is the unique minimal term below `a b`.
            let minima = downward_minima(&MockTerm::app(a.clone(), b.clone()));
            ensure(minima.len() == 1 && minima.contains(&product), || {
                format!("{a} * {b} is not the unique minimum below their application")
            })?;
        }
    }
    // The defining duplication equation holds in both models.
    let m = MockTerm::m();
    for t in &maximal {
        let left = star_max(&m, t).map_err(|e| e.to_string())?;
        let right = star_max(t, t).map_err(|e| e.to_string())?;
        ensure(left == right, || {
            format!("M * {t} differs from {t} * {t} in the maximal model")
        })?;
    }
    for t in &minimal {
        let left = star_min(&m, t).map_err(|e| e.to_string())?;
        let right = star_min(t, t).map_err(|e| e.to_string())?;
        ensure(left == right, || {
            format!("M * {t} differs from {t} * {t} in the minimal model")
        })?;
    }
    Ok(())
}

/// Minimal elements of the downward closure of `term`. Predecessor steps
/// only move down, so minimality inside the closure coincides with global
/// minimality.
fn downward_minima(term: &MockTerm) -> BTreeSet<MockTerm> {
    let mut seen = BTreeSet::from([term.clone()]);
    let mut frontier = vec![term.clone()];
    while let Some(current) = frontier.pop() {
        for predecessor in current.predecessors() {
            if seen.insert(predecessor.clone()) {
                frontier.push(predecessor);
            }
        }
    }
    seen.into_iter().filter(MockTerm::is_minimal).collect()
}

fn check_engine_fidelity(suite: Suite) -> Result<(), String> {
    // The identity combinator's graph from a nested start term.
    let identity = CLSDefinition::builtin(&["I"]).map_err(|e| e.to_string())?;
    let start = identity.parse("II(III)").map_err(|e| e.to_string())?;
    let graph = identity.rewrite_graph(&start, ExplorationLimits::default(), true);
    ensure(graph.nodes().len() == 7 && graph.arcs().len() == 9, || {
        format!(
            "identity graph has {} nodes and {} arcs",
            graph.nodes().len(),
            graph.arcs().len()
        )
    })?;
    let normal_forms = graph.normal_forms(false).map_err(|e| e.to_string())?;
    let identity_term = identity.parse("I").map_err(|e| e.to_string())?;
    ensure(normal_forms == BTreeSet::from([identity_term]), || {
        "identity graph has unexpected normal forms".into()
    })?;

    // Duplication preserves height, so every component is height-homogeneous.
    let mock = CLSDefinition::builtin(&["M"]).map_err(|e| e.to_string())?;
    let expected_skips = match suite {
        Suite::Fast => 0usize,
        Suite::Full => 1,
    };
    let mut skipped = 0usize;
    for degree in 0..=suite.component_degree() {
        for term in closed_terms(degree) {
            let forest = fr(term.term()).map_err(|e| e.to_string())?;
            if interval_cardinality(&forest) > cap() {
                skipped += 1;
                continue;
            }
            let component = mock.rewrite_graph(term.term(), ExplorationLimits::default(), false);
            ensure(!component.is_truncated(), || {
                format!("the component of {term} hit the exploration budget")
            })?;
            let height = term.term().height();
            ensure(
                component.nodes().iter().all(|node| node.height() == height),
                || format!("height varies across the component of {term}"),
            )?;
        }
    }
    ensure(skipped == expected_skips, || {
        format!("{skipped} components skipped, expected {expected_skips}")
    })?;

    // A composite duplicator assembled from S and K reaches x2 x2.
    let sk = CLSDefinition::builtin(&["S", "K"]).map_err(|e| e.to_string())?;
    let duplicator = sk
        .parse("S(S(KS)(K(SKK)))(K(SKK))")
        .map_err(|e| e.to_string())?;
    let from = Term::app(Term::app(duplicator, Term::var(1)), Term::var(2));
    let to = sk.parse("x2x2").map_err(|e| e.to_string())?;
    ensure(
        sk.reachable(&from, &to, ExplorationLimits::default()) == Reachability::Reached,
        || "the S/K duplicator never reaches x2 x2".into(),
    )?;

    // Classification of the builtin rule table.
    let names: Vec<&'static str> = CLSDefinition::builtin_names().collect();
    let table = CLSDefinition::builtin(&names).map_err(|e| e.to_string())?;
    let hierarchical: Vec<&str> = names
        .iter()
        .copied()
        .filter(|name| table.is_hierarchical(name).unwrap_or(false))
        .collect();
    ensure(hierarchical == ["M", "M1", "W"], || {
        format!("hierarchical combinators: {hierarchical:?}")
    })?;
    let k_nonerasing = table.is_nonerasing("K").map_err(|e| e.to_string())?;
    ensure(!k_nonerasing, || "K claims to be nonerasing".into())?;
    for name in ["S", "L"] {
        let claims = table.is_hierarchical(name).map_err(|e| e.to_string())?;
        ensure(!claims, || format!("{name} claims to be hierarchical"))?;
    }
    Ok(())
}

fn check_transitive_reduction(suite: Suite) -> Result<(), String> {
    for d in 0..=suite.lattice_limit() {
        ensure(comb_lattice(d).transitive_reduction_check(), || {
            format!("order {d} covers contain a transitive shortcut")
        })?;
    }
    Ok(())
}
