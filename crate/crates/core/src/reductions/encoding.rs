use crate::orientation::PartialOrientation;

use super::pair::ReferencePair;

/// Squarefree exponent vector of length `2m`: slot `r` (the `x` block) is set
/// when the rank-`r` edge is oriented as in the reference, slot `m + r` (the
/// `y` block) when it is oriented against it.
pub fn monomial_encoding(o: &PartialOrientation, pair: &ReferencePair) -> Vec<u8> {
    let m = pair.m();
    let mut exps = vec![0u8; 2 * m];
    for (r, &e) in pair.order().iter().enumerate() {
        let s = o.state(e);
        if !s.is_oriented() {
            continue;
        }
        if pair.agrees(e, s) {
            exps[r] = 1;
        } else {
            exps[m + r] = 1;
        }
    }
    exps
}
