//! Exact Gromov hyperbolicity by the four-point condition.

use rayon::prelude::*;

use crate::metric::DistanceMatrix;

/// Twice the hyperbolicity `δ`: the largest gap between the two biggest of
/// the three pair sums over all 4-tuples. Doubling keeps it integral.
///
/// Scans all `C(n, 4)` tuples, parallel over the first index.
pub fn hyperbolicity_x2(d: &DistanceMatrix) -> u32 {
    let n = d.len();
    if n < 4 {
        return 0;
    }
    (0..n)
        .into_par_iter()
        .map(|a| {
            let mut best = 0;
            for b in a + 1..n {
                let ab = d.get(a, b);
                for c in b + 1..n {
                    let (ac, bc) = (d.get(a, c), d.get(b, c));
                    for e in c + 1..n {
                        let s1 = ab + d.get(c, e);
                        let s2 = ac + d.get(b, e);
                        let s3 = d.get(a, e) + bc;
                        best = best.max(top_gap(s1, s2, s3));
                    }
                }
            }
            best
        })
        .max()
        .unwrap_or(0)
}

#[inline]
fn top_gap(s1: u32, s2: u32, s3: u32) -> u32 {
    let (hi, lo) = if s1 >= s2 { (s1, s2) } else { (s2, s1) };
    if s3 >= hi {
        s3 - hi
    } else {
        hi - lo.max(s3)
    }
}
