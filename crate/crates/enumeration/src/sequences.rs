use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::EnumerationError;

/// Names of the eight counting sequences.
///
/// Three are indexed by term degree (number of applications), two by term
/// height, and three by lattice order `d`, where the lattice of order `d` is
/// the rewrite poset generated by the right comb of degree `d`. The
/// lattice-indexed tables are one step ahead of their height-indexed
/// recurrences: the value at order `d ≥ 1` is the recurrence value at
/// `d − 1`, and the value at order 0 describes the one-point lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceName {
    /// Closed maximal terms by degree: 1, 1, 1, 2, 4, 9, 21, 51, … (the
    /// Motzkin numbers).
    MaxDegree,
    /// Closed minimal terms by degree: 1, 1, 2, 4, 12, 34, 108, 344, …
    MinDegree,
    /// Closed isolated terms by degree: 1, 1, 1, 1, 3, 5, 13, 29, …
    IsoDegree,
    /// Rewrite classes (each holding exactly one closed maximal term) by
    /// height: 1, 1, 2, 10, 170, 33490, …
    ClassesHeight,
    /// Closed isolated terms by height: 1, 1, 1, 3, 21, 651, …
    IsoHeight,
    /// Lattice elements by lattice order: 1, 1, 2, 6, 42, 1806, …
    Elements,
    /// Lattice covering edges by lattice order: 0, 0, 1, 7, 97, 8287, …
    Edges,
    /// Lattice intervals by lattice order: 1, 1, 3, 17, 371, 144513, …
    Intervals,
}

impl SequenceName {
    /// Every sequence name, in canonical listing order.
    pub const ALL: [SequenceName; 8] = [
        SequenceName::MaxDegree,
        SequenceName::MinDegree,
        SequenceName::IsoDegree,
        SequenceName::ClassesHeight,
        SequenceName::IsoHeight,
        SequenceName::Elements,
        SequenceName::Edges,
        SequenceName::Intervals,
    ];

    /// The canonical command-line spelling.
    pub fn as_str(self) -> &'static str {
        match self {
            SequenceName::MaxDegree => "max-deg",
            SequenceName::MinDegree => "min-deg",
            SequenceName::IsoDegree => "iso-deg",
            SequenceName::ClassesHeight => "classes-ht",
            SequenceName::IsoHeight => "iso-ht",
            SequenceName::Elements => "elements",
            SequenceName::Edges => "edges",
            SequenceName::Intervals => "intervals",
        }
    }

    /// What the value at index `i` counts, including the indexing
    /// convention, which deliberately differs between sequences.
    pub fn description(self) -> &'static str {
        match self {
            SequenceName::MaxDegree => "closed maximal terms of degree d (Motzkin numbers)",
            SequenceName::MinDegree => "closed minimal terms of degree d",
            SequenceName::IsoDegree => "closed isolated terms of degree d",
            SequenceName::ClassesHeight => {
                "rewrite classes whose maximal term has height h (exactly one closed maximal term per class)"
            }
            SequenceName::IsoHeight => "closed isolated terms of height h",
            SequenceName::Elements => "elements of the Mockingbird lattice of order d",
            SequenceName::Edges => "covering edges of the Mockingbird lattice of order d",
            SequenceName::Intervals => "intervals of the Mockingbird lattice of order d",
        }
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceName {
    type Err = EnumerationError;

    fn from_str(text: &str) -> Result<SequenceName, EnumerationError> {
        SequenceName::ALL
            .into_iter()
            .find(|name| name.as_str() == text)
            .ok_or_else(|| EnumerationError::UnknownSequence(text.to_owned()))
    }
}

/// A finite prefix of one counting sequence: `values()[i]` is the count at
/// index `i` under the sequence's own indexing convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    label: String,
    values: Vec<BigInt>,
}

impl SequenceTable {
    pub(crate) fn new(label: impl Into<String>, values: Vec<BigInt>) -> SequenceTable {
        SequenceTable {
            label: label.into(),
            values,
        }
    }

    /// The sequence this table tabulates.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// All tabulated values in index order.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// The value at `index`, or `None` beyond the tabulated range.
    pub fn value(&self, index: usize) -> Option<&BigInt> {
        self.values.get(index)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Tables print one decimal value per line, stable for golden files.
impl fmt::Display for SequenceTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for value in &self.values {
            writeln!(f, "{value}")?;
        }
        Ok(())
    }
}

/// Tabulates the first `count` values of the named sequence by its exact
/// recurrence (arbitrary precision, no series truncation involved).
pub fn sequence(name: SequenceName, count: usize) -> SequenceTable {
    let values = match name {
        SequenceName::MaxDegree => max_degree_values(count),
        SequenceName::MinDegree => min_degree_values(count),
        SequenceName::IsoDegree => iso_degree_values(count),
        SequenceName::ClassesHeight => classes_height_values(count),
        SequenceName::IsoHeight => iso_height_values(count),
        SequenceName::Elements => lattice_indexed(BigInt::one(), growth_values, count),
        SequenceName::Edges => lattice_indexed(BigInt::zero(), cover_values, count),
        SequenceName::Intervals => lattice_indexed(BigInt::one(), interval_values, count),
    };
    SequenceTable::new(name.as_str(), values)
}

/// Lattice-indexed sequences report `recurrence(d − 1)` at order `d ≥ 1`;
/// the order-0 value describes the one-point lattice directly.
fn lattice_indexed(
    order_zero: BigInt,
    recurrence: fn(usize) -> Vec<BigInt>,
    count: usize,
) -> Vec<BigInt> {
    if count == 0 {
        return Vec::new();
    }
    let mut values = vec![order_zero];
    values.extend(recurrence(count - 1));
    values
}

/// Pushes the two base values 1, 1 (indices 0 and 1), stopping at `count`.
fn push_unit_bases(values: &mut Vec<BigInt>, count: usize) {
    for _ in 0..count.min(2) {
        values.push(BigInt::one());
    }
}

/// max-deg: v(d) = Σ_{i=0}^{d−2} v(i)·v(d−1−i) for d ≥ 2.
fn max_degree_values(count: usize) -> Vec<BigInt> {
    let mut values = Vec::with_capacity(count);
    push_unit_bases(&mut values, count);
    for d in 2..count {
        let total = (0..=d - 2).map(|i| &values[i] * &values[d - 1 - i]).sum();
        values.push(total);
    }
    values
}

/// min-deg: v(d) = Σ_{i=0}^{d−1} v(i)·v(d−1−i) − [d odd]·v((d−1)/2) for d ≥ 2.
fn min_degree_values(count: usize) -> Vec<BigInt> {
    let mut values = Vec::with_capacity(count);
    push_unit_bases(&mut values, count);
    for d in 2..count {
        let mut total: BigInt = (0..=d - 1).map(|i| &values[i] * &values[d - 1 - i]).sum();
        if d % 2 == 1 {
            total -= &values[(d - 1) / 2];
        }
        values.push(total);
    }
    values
}

/// iso-deg: v(d) = Σ_{i=0}^{d−2} v(i)·v(d−1−i) − [d odd]·v((d−1)/2) for d ≥ 2.
fn iso_degree_values(count: usize) -> Vec<BigInt> {
    let mut values = Vec::with_capacity(count);
    push_unit_bases(&mut values, count);
    for d in 2..count {
        let mut total: BigInt = (0..=d - 2).map(|i| &values[i] * &values[d - 1 - i]).sum();
        if d % 2 == 1 {
            total -= &values[(d - 1) / 2];
        }
        values.push(total);
    }
    values
}

/// classes-ht: v(h) = v(h−1)² − v(h−1) + 2·v(h−1)·Σ_{i=1}^{h−1} v(i−1) for h ≥ 2.
fn classes_height_values(count: usize) -> Vec<BigInt> {
    height_square_values(count, 1)
}

/// iso-ht: v(h) = v(h−1)² − 2·v(h−1) + 2·v(h−1)·Σ_{i=1}^{h−1} v(i−1) for h ≥ 2.
fn iso_height_values(count: usize) -> Vec<BigInt> {
    height_square_values(count, 2)
}

/// Shared shape of the two height recurrences, differing only in how many
/// copies of the previous value the square overcounts.
fn height_square_values(count: usize, overcount: u32) -> Vec<BigInt> {
    let mut values = Vec::with_capacity(count);
    push_unit_bases(&mut values, count);
    for h in 2..count {
        let previous = values[h - 1].clone();
        let below: BigInt = values[..h - 1].iter().sum();
        let total = &previous * &previous - &previous * overcount + 2 * &previous * below;
        values.push(total);
    }
    values
}

/// elements (unshifted): v(0) = 1, v(h) = v(h−1) + v(h−1)².
fn growth_values(count: usize) -> Vec<BigInt> {
    let mut values = Vec::with_capacity(count);
    if count >= 1 {
        values.push(BigInt::one());
    }
    for h in 1..count {
        let previous = &values[h - 1];
        values.push(previous + previous * previous);
    }
    values
}

/// edges (unshifted): v(0) = 0, v(h) = v(h−1) + g(h−1) + 2·v(h−1)·g(h−1)
/// with `g` the unshifted elements recurrence.
fn cover_values(count: usize) -> Vec<BigInt> {
    let growth = growth_values(count);
    let mut values = Vec::with_capacity(count);
    if count >= 1 {
        values.push(BigInt::zero());
    }
    for h in 1..count {
        let previous = &values[h - 1];
        let grown = &growth[h - 1];
        values.push(previous + grown + 2 * previous * grown);
    }
    values
}

/// intervals (unshifted): the catalytic family
/// `ns_k(0) = 1`, `ns_k(h) = ns_k(h−1)² + Σ_{i=0}^{k} C(k,i)·ns_{k+i}(h−1)`,
/// reported at `k = 1`. The parameter `k` at most doubles per recursion
/// level, so tabulating `count` values touches `k` up to `2^(count−1)`;
/// memoization over `(k, h)` keeps that tractable.
fn interval_values(count: usize) -> Vec<BigInt> {
    let mut memo: HashMap<(u64, usize), BigInt> = HashMap::new();
    (0..count)
        .map(|h| catalytic_interval_count(1, h, &mut memo))
        .collect()
}

fn catalytic_interval_count(
    k: u64,
    h: usize,
    memo: &mut HashMap<(u64, usize), BigInt>,
) -> BigInt {
    if h == 0 {
        return BigInt::one();
    }
    if let Some(known) = memo.get(&(k, h)) {
        return known.clone();
    }
    let previous = catalytic_interval_count(k, h - 1, memo);
    let mut total = &previous * &previous;
    for i in 0..=k {
        let weight = num_integer::binomial(BigInt::from(k), BigInt::from(i));
        total += weight * catalytic_interval_count(k + i, h - 1, memo);
    }
    memo.insert((k, h), total.clone());
    total
}
