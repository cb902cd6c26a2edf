use alloc::vec::Vec;

use super::charpoly::char_poly;
use super::eigen::{adjacency_spectrum, main_angles_of};
use super::poly::{divide_by_root_f64, mul_f64, IntPoly};
use super::SpectralError;
use crate::graph::Graph;

/// Characteristic polynomial of the cone over `g` from the spectrum and main
/// angles of `g`: `P_G(y) · (y − Σ n βᵢ² / (y − μᵢ))`.
///
/// Coefficients are floating point, constant term first.
pub fn cone_charpoly(g: &Graph) -> Vec<f64> {
    let n = g.order() as f64;
    let p = char_poly(g).to_f64_vec();
    let angles = main_angles_of(&adjacency_spectrum(g));
    let mut out = mul_f64(&p, &[0.0, 1.0]);
    for angle in angles {
        let weight = n * angle.beta * angle.beta;
        if weight == 0.0 {
            continue;
        }
        let quotient = divide_by_root_f64(&p, angle.eigenvalue);
        for (o, q) in out.iter_mut().zip(&quotient) {
            *o -= weight * q;
        }
    }
    out
}

/// Closed form for the cone over `K_m − M`:
/// `y^{m/2} (y+2)^{m/2−1} (y² + (2−m)y − m)`.
pub fn knm_cone_charpoly(m: usize) -> Result<IntPoly, SpectralError> {
    if m % 2 == 1 || m < 4 {
        return Err(SpectralError::BadConeOrder(m));
    }
    let m_i = m as i64;
    let quadratic = IntPoly::from_i64(&[-m_i, 2 - m_i, 1]).expect("monic");
    Ok(IntPoly::linear(0)
        .pow(m / 2)
        .mul(&IntPoly::linear(-2).pow(m / 2 - 1))
        .mul(&quadratic))
}
