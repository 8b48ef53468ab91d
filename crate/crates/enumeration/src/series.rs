use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::EnumerationError;
use crate::sequences::SequenceName;

/// A power series with arbitrary-precision integer coefficients, truncated at
/// a fixed maximal exponent (the *order*). Every operation truncates at that
/// order by construction, so results never silently exceed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Index `n` holds the coefficient of `z^n`; the length is `order + 1`.
    coefficients: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> TruncatedSeries {
        TruncatedSeries {
            coefficients: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series `value` truncated at `order`.
    pub fn constant(value: impl Into<BigInt>, order: usize) -> TruncatedSeries {
        let mut series = TruncatedSeries::zero(order);
        series.coefficients[0] = value.into();
        series
    }

    /// The constant series `1` truncated at `order`.
    pub fn one(order: usize) -> TruncatedSeries {
        TruncatedSeries::constant(1, order)
    }

    /// The monomial `z` truncated at `order` (the zero series when the order
    /// is 0).
    pub fn z(order: usize) -> TruncatedSeries {
        let mut series = TruncatedSeries::zero(order);
        if order >= 1 {
            series.coefficients[1] = BigInt::from(1);
        }
        series
    }

    /// A series from explicit low-order coefficients: missing entries are
    /// zero, entries beyond the order are dropped.
    pub fn from_coefficients<I, T>(order: usize, values: I) -> TruncatedSeries
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coefficients: Vec<BigInt> = values
            .into_iter()
            .take(order + 1)
            .map(Into::into)
            .collect();
        coefficients.resize(order + 1, BigInt::zero());
        TruncatedSeries { coefficients }
    }

    /// The maximal exponent carried by this series.
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// The coefficient of `z^n`, or `None` beyond the order.
    pub fn coefficient(&self, n: usize) -> Option<&BigInt> {
        self.coefficients.get(n)
    }

    /// All coefficients, index `n` holding the coefficient of `z^n`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    fn check_same_order(&self, other: &TruncatedSeries) -> Result<(), EnumerationError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(EnumerationError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, EnumerationError> {
        self.check_same_order(other)?;
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coefficients })
    }

    /// Coefficient-wise difference.
    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, EnumerationError> {
        self.check_same_order(other)?;
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TruncatedSeries { coefficients })
    }

    /// Coefficient-wise product with an integer constant.
    pub fn scale(&self, factor: impl Into<BigInt>) -> TruncatedSeries {
        let factor = factor.into();
        let coefficients = self.coefficients.iter().map(|a| a * &factor).collect();
        TruncatedSeries { coefficients }
    }

    /// The usual (Cauchy) product, truncated at the common order.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, EnumerationError> {
        self.check_same_order(other)?;
        let len = self.coefficients.len();
        let mut coefficients = vec![BigInt::zero(); len];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..len - i].iter().enumerate() {
                coefficients[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coefficients })
    }

    /// The Hadamard (coefficient-wise) product.
    pub fn hadamard(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, EnumerationError> {
        self.check_same_order(other)?;
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a * b)
            .collect();
        Ok(TruncatedSeries { coefficients })
    }

    /// The max product: coefficient `n` collects every pair `(i, j)` with
    /// `max(i, j) = n`, i.e.
    /// `(F ↑ G)[n] = F[n]·G[n] + F[n]·Σ_{j<n} G[j] + G[n]·Σ_{i<n} F[i]`.
    pub fn max_prod(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, EnumerationError> {
        self.check_same_order(other)?;
        let mut coefficients = Vec::with_capacity(self.coefficients.len());
        let mut self_prefix = BigInt::zero();
        let mut other_prefix = BigInt::zero();
        for (a, b) in self.coefficients.iter().zip(&other.coefficients) {
            coefficients.push(a * b + a * &other_prefix + b * &self_prefix);
            self_prefix += a;
            other_prefix += b;
        }
        Ok(TruncatedSeries { coefficients })
    }

    /// Substitution of `z²` for `z`: coefficient `n` of the result is
    /// coefficient `n/2` of the input when `n` is even and zero otherwise,
    /// truncated at the order.
    pub fn subst_square(&self) -> TruncatedSeries {
        let coefficients = (0..self.coefficients.len())
            .map(|n| {
                if n % 2 == 0 {
                    self.coefficients[n / 2].clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        TruncatedSeries { coefficients }
    }

    /// Multiplication by `z`: coefficients shift up one index and the top
    /// coefficient falls off the truncation.
    pub fn times_z(&self) -> TruncatedSeries {
        let mut coefficients = vec![BigInt::zero()];
        coefficients.extend(self.coefficients[..self.coefficients.len() - 1].iter().cloned());
        TruncatedSeries { coefficients }
    }
}

/// Solves `F = equation(F)` up to the given order by iterating from the zero
/// series.
///
/// The equation must be contractive: coefficient `n` of the image may depend
/// only on coefficients below `n` of the argument. Each iteration then fixes
/// at least one further coefficient, so the iteration stabilizes within
/// `order + 1` steps; if it does not, the contraction precondition is
/// violated and an error is returned.
pub fn solve_fixpoint<F>(mut equation: F, order: usize) -> Result<TruncatedSeries, EnumerationError>
where
    F: FnMut(&TruncatedSeries) -> Result<TruncatedSeries, EnumerationError>,
{
    let mut current = TruncatedSeries::zero(order);
    for _ in 0..=order {
        let next = equation(&current)?;
        if next == current {
            return Ok(current);
        }
        current = next;
    }
    if equation(&current)? == current {
        Ok(current)
    } else {
        Err(EnumerationError::NotStabilized { order })
    }
}

/// Solves the self-referential counting equation behind the named sequence
/// and returns the raw series (indexed by degree or height, without the
/// lattice-order shift applied by [`crate::sequence`]):
///
/// - `max-deg`:    `D = 1 + z + z·D² − z·D`
/// - `min-deg`:    `D = 1 + z + z·D² − z·D[z := z²]`
/// - `iso-deg`:    `D = 1 + 2z + z·D² − z·D − z·D[z := z²]`
/// - `classes-ht`: `H = 1 + z + z·(H ↑ H) − z·H`
/// - `iso-ht`:     `H = 1 + 2z + z·(H ↑ H) − 2z·H`
/// - `elements`:   `H = 1 + z·H + z·(H ⊠ H)`
/// - `edges`:      `H = z·H + z·G + 2z·(H ⊠ G)` with `G` the solved
///   `elements` series
///
/// The `intervals` sequence carries a catalytic parameter and is computed by
/// recurrence only, so requesting it here is an error.
pub fn characteristic_series(
    name: SequenceName,
    order: usize,
) -> Result<TruncatedSeries, EnumerationError> {
    let one = TruncatedSeries::one(order);
    let z = TruncatedSeries::z(order);
    match name {
        SequenceName::MaxDegree => solve_fixpoint(
            |d| {
                let square = d.mul(d)?;
                one.add(&z)?.add(&square.times_z())?.sub(&d.times_z())
            },
            order,
        ),
        SequenceName::MinDegree => solve_fixpoint(
            |d| {
                let square = d.mul(d)?;
                one.add(&z)?
                    .add(&square.times_z())?
                    .sub(&d.subst_square().times_z())
            },
            order,
        ),
        SequenceName::IsoDegree => solve_fixpoint(
            |d| {
                let square = d.mul(d)?;
                one.add(&z.scale(2))?
                    .add(&square.times_z())?
                    .sub(&d.times_z())?
                    .sub(&d.subst_square().times_z())
            },
            order,
        ),
        SequenceName::ClassesHeight => solve_fixpoint(
            |h| {
                let peak = h.max_prod(h)?;
                one.add(&z)?.add(&peak.times_z())?.sub(&h.times_z())
            },
            order,
        ),
        SequenceName::IsoHeight => solve_fixpoint(
            |h| {
                let peak = h.max_prod(h)?;
                one.add(&z.scale(2))?
                    .add(&peak.times_z())?
                    .sub(&h.times_z().scale(2))
            },
            order,
        ),
        SequenceName::Elements => solve_fixpoint(
            |h| {
                let diagonal = h.hadamard(h)?;
                one.add(&h.times_z())?.add(&diagonal.times_z())
            },
            order,
        ),
        SequenceName::Edges => {
            let growth = characteristic_series(SequenceName::Elements, order)?;
            solve_fixpoint(
                |h| {
                    let cross = h.hadamard(&growth)?;
                    h.times_z()
                        .add(&growth.times_z())?
                        .add(&cross.times_z().scale(2))
                },
                order,
            )
        }
        SequenceName::Intervals => Err(EnumerationError::NoSeriesEquation {
            name: SequenceName::Intervals.as_str(),
        }),
    }
}
