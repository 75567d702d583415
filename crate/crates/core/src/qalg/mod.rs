//! Exact arithmetic: Laurent polynomials in `q`, rational functions in `q`,
//! and truncated series in an auxiliary variable `t`.

mod poly;
mod rat;
mod series;

pub use poly::QPoly;
pub use rat::{ratio, QRat};
pub use series::{qpochhammer, TruncSeries};

/// The q-integer `[j]_q = 1 + q + ... + q^{j-1}`; `[0]_q = 0`.
pub fn qint(j: usize) -> QPoly {
    QPoly::from_terms((0..j as i64).map(|e| (e, 1)))
}

/// The q-factorial `[1]_q [2]_q ... [m]_q`.
pub fn qfact(m: usize) -> QPoly {
    (1..=m).map(qint).product()
}

/// The falling q-product `[m]_q [m-1]_q ... [m-n+1]_q`.
pub fn qfalling(m: usize, n: usize) -> QPoly {
    (m + 1 - n.min(m)..=m)
        .filter(|&j| j > 0)
        .map(qint)
        .product()
}
