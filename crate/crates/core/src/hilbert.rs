//! The Hilbert series of the ring of hook Schur functions.
//!
//! `G_{k,l}(t)` counts partitions fitting in the `(k, l)`-hook. It is computed
//! three ways: as `A^{k,l}(t) / ((1-t)(1-t^2)...(1-t^{k+l}))` with a closed
//! form for the numerator, by unrolling the hook recurrence on `l`, and by
//! brute-force enumeration in [`crate::partitions`]. The `verify_*` functions
//! compare these routes and the q-binomial identities they rest on.

use crate::error::{Error, Result};
use crate::partitions::{hook_count_series, hook_count_table};
use crate::qseries::{gauss_binomial, QPolynomial, TruncSeries, DEFAULT_ORDER};
use crate::report::VerificationReport;

/// The shape `(k, l)` of a hook and the order to which its series is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HookParams {
    pub k: usize,
    pub l: usize,
    pub order: usize,
}

impl HookParams {
    pub fn new(k: usize, l: usize, order: usize) -> Self {
        Self { k, l, order }
    }

    /// Uses [`DEFAULT_ORDER`].
    pub fn with_default_order(k: usize, l: usize) -> Self {
        Self::new(k, l, DEFAULT_ORDER)
    }

    pub fn transposed(self) -> Self {
        Self {
            k: self.l,
            l: self.k,
            ..self
        }
    }

    pub fn hilbert_series(&self) -> TruncSeries {
        hilbert_series(self.k, self.l, self.order)
    }

    pub fn hook_count_series(&self) -> TruncSeries {
        hook_count_series(self.k, self.l, self.order)
    }
}

fn gb(a: usize, b: usize) -> QPolynomial {
    gauss_binomial(a as i64, b as i64)
}

/// `G_k(t) = Π_{i=1..k} 1/(1 - t^i)`, partitions with at most `k` rows.
pub fn g_rows(k: usize, order: usize) -> TruncSeries {
    (1..=k).fold(TruncSeries::one(order), |acc, i| {
        let factor = TruncSeries::inv_one_minus_tpow(i as i64, order).expect("i >= 1");
        acc.mul(&factor).expect("same order")
    })
}

/// `G_{k,l}` from `G_{k,j} = G_{k,j-1} + t^{j(k+1)} G_k G_j`, starting at
/// `G_{k,0} = G_k`.
///
/// The second term counts the hook partitions containing the cell in row
/// `k+1`, column `j`.
pub fn g_hook_recurrence(k: usize, l: usize, order: usize) -> TruncSeries {
    let rows = g_rows(k, order);
    let mut acc = rows.clone();
    for j in 1..=l {
        let with_cell = rows
            .mul(&g_rows(j, order))
            .expect("same order")
            .shift(j * (k + 1));
        acc = acc.add(&with_cell).expect("same order");
    }
    acc
}

/// `A^{k,l}` from `A^{k,j} = (1 - t^{k+j}) A^{k,j-1} + t^{j(k+1)} [k+j, j]`
/// with `A^{k,0} = 1`.
pub fn a_poly_recurrence(k: usize, l: usize) -> QPolynomial {
    (1..=l).fold(QPolynomial::one(), |acc, j| {
        &(&QPolynomial::one_minus_tpow(k + j) * &acc) + &gb(k + j, j).shift(j * (k + 1))
    })
}

/// `A^{k,l} = 1 + Σ_{i=1..l} t^{i(k+l+1)} [k, i] Σ_{j=0..l-i} t^{j(k-i+1)} [i+j-1, j]`.
///
/// Out-of-range binomials are zero and `[0, 0] = 1`.
pub fn a_poly_closed(k: usize, l: usize) -> QPolynomial {
    let mut total = QPolynomial::one();
    for i in 1..=l {
        let outer = gb(k, i);
        if outer.is_zero() {
            continue;
        }
        // i <= k from here on, so every exponent below is non-negative
        let inner = (0..=l - i).fold(QPolynomial::zero(), |acc, j| {
            &acc + &gb(i + j - 1, j).shift(j * (k - i + 1))
        });
        total = &total + &(&outer * &inner).shift(i * (k + l + 1));
    }
    total
}

/// `G_{k,l}(t) = A^{k,l}(t) · G_{k+l}(t)`, truncated at `order`.
pub fn hilbert_series(k: usize, l: usize, order: usize) -> TruncSeries {
    TruncSeries::from_poly(&a_poly_closed(k, l), order)
        .mul(&g_rows(k + l, order))
        .expect("same order")
}

/// Closed form of `A^{k,l}` against its defining recurrence.
pub fn verify_lemma(k: usize, l: usize) -> VerificationReport {
    VerificationReport::compare_poly(
        "a-closed-vs-recurrence",
        &[("k", k as i64), ("l", l as i64)],
        &a_poly_closed(k, l),
        &a_poly_recurrence(k, l),
    )
}

/// Checks, as exact polynomial identities,
/// `(1 - t^i)[k, i] = (1 - t^{k-i+1})[k, i-1]` for `1 <= i <= k <= max_k` and
/// `[a, b] = [a-1, b-1] + t^b [a-1, b]` for `1 <= b <= a <= max_k`.
pub fn verify_tbinomial_identities(max_k: usize) -> Result<Vec<VerificationReport>> {
    if max_k < 1 {
        return Err(Error::OutOfRange {
            name: "max_k",
            value: max_k as i64,
            requirement: "must be at least 1",
        });
    }
    let mut reports = Vec::new();
    for k in 1..=max_k {
        for i in 1..=k {
            let lhs = &QPolynomial::one_minus_tpow(i) * &gb(k, i);
            let rhs = &QPolynomial::one_minus_tpow(k - i + 1) * &gb(k, i - 1);
            reports.push(VerificationReport::compare_poly(
                "tbinomial-ratio",
                &[("k", k as i64), ("i", i as i64)],
                &lhs,
                &rhs,
            ));
        }
    }
    for a in 1..=max_k {
        for b in 1..=a {
            let rhs = &gb(a - 1, b - 1) + &gb(a - 1, b).shift(b);
            reports.push(VerificationReport::compare_poly(
                "tbinomial-pascal",
                &[("a", a as i64), ("b", b as i64)],
                &gb(a, b),
                &rhs,
            ));
        }
    }
    Ok(reports)
}

/// `t^{l(k+1)} Σ_{i=0..l} t^{i²} [k, i][l, i] = t^{l(k+1)} [k+l, l]`.
pub fn verify_qvandermonde(k: usize, l: usize) -> VerificationReport {
    let sum = (0..=l).fold(QPolynomial::zero(), |acc, i| {
        &acc + &(&gb(k, i) * &gb(l, i)).shift(i * i)
    });
    let shift = l * (k + 1);
    VerificationReport::compare_poly(
        "q-vandermonde",
        &[("k", k as i64), ("l", l as i64)],
        &sum.shift(shift),
        &gb(k + l, l).shift(shift),
    )
}

/// `A^{k,l} - A^{k,l-1} + t^{k+l} A^{k,l-1}`, from the recurrence values.
pub fn a_step_lhs(k: usize, l: usize) -> QPolynomial {
    let prev = a_poly_recurrence(k, l.saturating_sub(1));
    let cur = a_poly_recurrence(k, l);
    &(&cur - &prev) + &prev.shift(k + l)
}

/// `t^{l(k+1)} [k+l, l]`, what [`a_step_lhs`] must reduce to.
pub fn a_step_target(k: usize, l: usize) -> QPolynomial {
    gb(k + l, l).shift(l * (k + 1))
}

/// The five-group expansion of [`a_step_lhs`] used when proving the closed
/// form, evaluated term by term:
///
/// ```text
/// t^{l(k+1)}
///   + Σ_{i=1}^{l-2} t^{(i+1)(k+l)} [k,i] Σ_{j=0}^{l-i-2} t^{(j+1)(k-i)} [i+j, j]
///   + Σ_{i=1}^{l-2} t^{(i+1)(k+l)} [k,i] Σ_{j=0}^{l-2-i} t^{j(k-i)} (t^j [i+j-1, j] - [i+j, j])
///   + Σ_{i=1}^{l-2} t^{(i+1)(k+l)} [k,i] t^{(l-i-1)(k-i+1)} [l-2, l-1-i]
///   + Σ_{i=1}^{l}   t^{l(k+1)+i²} [k,i] [l-1, l-i]
///   + t^{l(k+l)} [k, l-1] [l-2, 0]
/// ```
///
/// Requires `l >= 2`; smaller `l` puts `[l-2, 0]` and the sum bounds out of range.
pub fn a_step_expansion(k: usize, l: usize) -> Result<QPolynomial> {
    if l < 2 {
        return Err(Error::OutOfRange {
            name: "l",
            value: l as i64,
            requirement: "the expansion is only defined for l >= 2",
        });
    }
    let gbi = |a: i64, b: i64| gauss_binomial(a, b);
    let mut total = QPolynomial::monomial(1, l * (k + 1));
    for i in 1..=l - 2 {
        let head = gb(k, i);
        if head.is_zero() {
            continue;
        }
        // i <= k, so k - i and k - i + 1 are non-negative
        let head = head.shift((i + 1) * (k + l));
        let (ii, jmax) = (i as i64, l - 2 - i);

        let second = (0..=jmax).fold(QPolynomial::zero(), |acc, j| {
            &acc + &gbi(ii + j as i64, j as i64).shift((j + 1) * (k - i))
        });
        let third = (0..=jmax).fold(QPolynomial::zero(), |acc, j| {
            let diff = &gbi(ii + j as i64 - 1, j as i64).shift(j) - &gbi(ii + j as i64, j as i64);
            &acc + &diff.shift(j * (k - i))
        });
        let fourth = gbi(l as i64 - 2, (l - 1 - i) as i64).shift((l - i - 1) * (k - i + 1));

        total = &total + &(&head * &(&(&second + &third) + &fourth));
    }
    for i in 1..=l {
        let term = &gb(k, i) * &gb(l - 1, l - i);
        total = &total + &term.shift(l * (k + 1) + i * i);
    }
    let last = &gauss_binomial(k as i64, l as i64 - 1) * &gb(l - 2, 0);
    Ok(&total + &last.shift(l * (k + l)))
}

/// Three-way comparison for one recurrence step of `A^{k,l}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntermediateReport {
    /// [`a_step_lhs`] against [`a_step_target`]; this is what must hold.
    pub lhs_vs_target: VerificationReport,
    /// [`a_step_expansion`] against [`a_step_lhs`].
    pub expansion_vs_lhs: VerificationReport,
    /// [`a_step_expansion`] against [`a_step_target`].
    pub expansion_vs_target: VerificationReport,
}

impl IntermediateReport {
    pub fn passed(&self) -> bool {
        self.lhs_vs_target.pass
    }

    /// The step identity holds but the written-out expansion does not match it.
    pub fn expansion_suspect(&self) -> bool {
        self.lhs_vs_target.pass && !self.expansion_vs_lhs.pass
    }

    pub fn reports(&self) -> [&VerificationReport; 3] {
        [
            &self.lhs_vs_target,
            &self.expansion_vs_lhs,
            &self.expansion_vs_target,
        ]
    }
}

pub fn verify_intermediate_expression(k: usize, l: usize) -> Result<IntermediateReport> {
    let expansion = a_step_expansion(k, l)?;
    let lhs = a_step_lhs(k, l);
    let target = a_step_target(k, l);
    let params = [("k", k as i64), ("l", l as i64)];
    Ok(IntermediateReport {
        lhs_vs_target: VerificationReport::compare_poly("a-step-vs-target", &params, &lhs, &target),
        expansion_vs_lhs: VerificationReport::compare_poly(
            "a-step-expansion-vs-lhs",
            &params,
            &expansion,
            &lhs,
        ),
        expansion_vs_target: VerificationReport::compare_poly(
            "a-step-expansion-vs-target",
            &params,
            &expansion,
            &target,
        ),
    })
}

fn theorem_reports(
    k: usize,
    l: usize,
    order: usize,
    oracle: &TruncSeries,
) -> Vec<VerificationReport> {
    let params = [("k", k as i64), ("l", l as i64)];
    let closed = hilbert_series(k, l, order);
    let recurrence = g_hook_recurrence(k, l, order);
    let swapped = hilbert_series(l, k, order);
    vec![
        VerificationReport::compare_series("hilbert-vs-hook-count", &params, &closed, oracle),
        VerificationReport::compare_series(
            "hilbert-vs-hook-recurrence",
            &params,
            &closed,
            &recurrence,
        ),
        VerificationReport::compare_series(
            "hook-recurrence-vs-hook-count",
            &params,
            &recurrence,
            oracle,
        ),
        VerificationReport::compare_series("hilbert-kl-symmetry", &params, &closed, &swapped),
    ]
}

/// Compares, up to `order`, the closed-form Hilbert series, the unrolled hook
/// recurrence, the enumerated hook counts, and the closed form at `(l, k)`.
pub fn verify_theorem(k: usize, l: usize, order: usize) -> Vec<VerificationReport> {
    theorem_reports(k, l, order, &hook_count_series(k, l, order))
}

/// [`verify_theorem`] for every `k <= max_k`, `l <= max_l`, enumerating the
/// partitions only once. Reports come out ordered by `(k, l)`.
pub fn verify_theorem_sweep(max_k: usize, max_l: usize, order: usize) -> Vec<VerificationReport> {
    let table = hook_count_table(max_k, max_l, order);
    let mut reports = Vec::new();
    for (k, row) in table.iter().enumerate() {
        for (l, oracle) in row.iter().enumerate() {
            reports.extend(theorem_reports(k, l, order, oracle));
        }
    }
    reports
}
