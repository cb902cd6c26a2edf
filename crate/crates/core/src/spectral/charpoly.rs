use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::poly::IntPoly;
use crate::graph::Graph;

/// `det(yI - A)` by Faddeev–LeVerrier over exact integers.
///
/// With `M_0 = 0`, `c_n = 1`: `M_k = A M_{k-1} + c_{n-k+1} I` and
/// `c_{n-k} = -tr(A M_k) / k`; the division is always exact.
pub fn char_poly(g: &Graph) -> IntPoly {
    let n = g.order();
    let adj = g.adjacency_lists();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c I
        let mut next = a_times(&adj, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = a_times(&adj, &m);
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "trace not divisible by {k}");
        coeffs[n - k] = -q;
    }
    IntPoly::new(coeffs).expect("leading coefficient is 1")
}

fn a_times(adj: &[Vec<usize>], m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    adj.iter()
        .map(|nbrs| {
            let mut row = vec![BigInt::zero(); n];
            for &l in nbrs {
                for (x, y) in row.iter_mut().zip(&m[l]) {
                    *x += y;
                }
            }
            row
        })
        .collect()
}

/// 0 is an adjacency eigenvalue. Decided exactly.
pub fn is_singular(g: &Graph) -> bool {
    char_poly(g).constant_term().is_zero()
}

/// Every adjacency eigenvalue is an integer. Decided exactly.
pub fn is_integral(g: &Graph) -> bool {
    char_poly(g).has_only_integer_roots()
}
