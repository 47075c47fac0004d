use super::Poly;
use crate::scalar::Field;

/// The unique polynomial of degree `< points.len()` through the given
/// `(x, y)` pairs, by Newton divided differences. The `x` values must be
/// pairwise distinct.
pub fn interpolate<T: Field>(points: &[(T, T)]) -> Poly<T> {
    let n = points.len();
    let xs: Vec<T> = points.iter().map(|(x, _)| x.clone()).collect();
    let mut table: Vec<T> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = table[i].clone() - table[i - 1].clone();
            let den = xs[i].clone() - xs[i - level].clone();
            table[i] = num / den;
        }
    }
    // Horner on the Newton form: c0 + (x - x0)(c1 + (x - x1)(c2 + ...))
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        let factor = Poly::new(vec![-xs[i].clone(), T::one()]);
        acc = &(&acc * &factor) + &Poly::constant(table[i].clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rat, ratio};
    use crate::QPoly;

    #[test]
    fn recovers_polynomials() {
        let p: QPoly = Poly::new(vec![ratio(1, 3), rat(-2), rat(0), rat(5), ratio(-7, 2)]);
        let pts: Vec<_> = [0, 1, -1, 2, -2].iter().map(|&x| (rat(x), p.eval(&rat(x)))).collect();
        assert_eq!(interpolate(&pts), p);
        let more: Vec<_> = (0..9).map(|x| (rat(x), p.eval(&rat(x)))).collect();
        assert_eq!(interpolate(&more), p);
    }

    #[test]
    fn float_interpolation() {
        let pts: [(f64, f64); 3] = [(0.0, 1.0), (1.0, 2.0), (2.0, 5.0)];
        let p = interpolate(&pts);
        for (c, e) in p.coeffs().iter().zip([1.0f64, 0.0, 1.0]) {
            assert!((c - e).abs() < 1e-12);
        }
    }
}
