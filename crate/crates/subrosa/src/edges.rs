//! Edge substitution sequences.
//!
//! `sigma(n)` lists the corner labels of the unit rhombuses bisected by a
//! super-rhombus edge; `alpha(n)` is the part outside the corner roses.
//! Label 0 (even n only) stands for a unit edge lying along the super-edge.

use crate::geometry::diagonal_measure;
use crate::Error;

fn check_n(n: usize) -> Result<(), Error> {
    if n < 2 {
        Err(Error::InvalidParameter(format!("n must be >= 2, got {n}")))
    } else {
        Ok(())
    }
}

/// The increasing run 1,3,...,n-2 (odd n) or 0,2,...,n-2 (even n): the labels
/// bisected inside a corner rose, reading outward from the corner.
pub fn underlined_prefix(n: usize) -> Vec<usize> {
    let start = if n % 2 == 1 { 1 } else { 0 };
    (start..=n.saturating_sub(2)).step_by(2).collect()
}

/// Full edge substitution sequence for parameter n.
pub fn sigma(n: usize) -> Result<Vec<usize>, Error> {
    check_n(n)?;
    let mut half = underlined_prefix(n);
    // reversed underlined prefixes of the smaller parameters of equal parity
    let mut m = if n % 2 == 1 { 3 } else { 2 };
    while m <= n - 2 {
        let mut part = underlined_prefix(m);
        part.reverse();
        half.extend(part);
        m += 2;
    }
    let mut full = half.clone();
    full.extend(half.iter().rev());
    Ok(full)
}

/// The non-underlined middle of sigma(n): the labels bisected between the
/// two corner roses of an edge.
pub fn alpha(n: usize) -> Result<Vec<usize>, Error> {
    let s = sigma(n)?;
    let p = underlined_prefix(n).len();
    Ok(s[p..s.len() - p].to_vec())
}

/// Multiplicity of label m in each half of alpha(n): (n-m)/2 - 1.
pub fn f(m: usize, n: usize) -> Result<usize, Error> {
    check_n(n)?;
    if m > n - 2 || m % 2 != n % 2 {
        return Err(Error::InvalidParameter(format!(
            "label m={m} invalid for n={n}: need 0 <= m <= n-2 and matching parity"
        )));
    }
    Ok((n - m) / 2 - 1)
}

/// Split an even-length sequence at its midpoint into (in, out) halves.
pub fn split_in_out(seq: &[usize]) -> Result<(Vec<usize>, Vec<usize>), Error> {
    if seq.len() % 2 != 0 {
        return Err(Error::InvalidParameter("sequence length must be even".into()));
    }
    let half = seq.len() / 2;
    Ok((seq[..half].to_vec(), seq[half..].to_vec()))
}

/// Super-edge length read off sigma(n): unit length for 0-labels, the
/// diagonal measure for the rest. Equals the scaling factor.
pub fn edge_length_from_sigma(n: usize) -> Result<f64, Error> {
    let mut total = 0.0;
    for m in sigma(n)? {
        total += if m == 0 { 1.0 } else { diagonal_measure(n, m)? };
    }
    Ok(total)
}
