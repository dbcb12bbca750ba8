use crate::error::{Error, Result};
use crate::exactalg::matrix::Matrix;
use crate::exactalg::Quaternion;

/// Matrix of `v ↦ q v q̄` on `Im H` in the basis `(i, j, k)`; `q` must be an
/// exact unit quaternion.
pub fn lambda_so3(q: &Quaternion) -> Result<Matrix> {
    if !q.is_unit() {
        return Err(Error::NotUnit(format!("{} for q = {q}", q.norm())));
    }
    let qc = q.conj();
    let cols: Vec<Vec<_>> = [Quaternion::i(), Quaternion::j(), Quaternion::k()]
        .iter()
        .map(|e| (&(q * e) * &qc).im_coords().to_vec())
        .collect();
    Ok(Matrix::from_columns(3, &cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Scalar;

    #[test]
    fn identity_and_i() {
        assert_eq!(lambda_so3(&Quaternion::one()).unwrap(), Matrix::identity(3));
        assert_eq!(
            lambda_so3(&Quaternion::i()).unwrap(),
            Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]])
        );
    }

    #[test]
    fn rotation_about_i() {
        let q = Quaternion::new(Scalar::frac(3, 5), Scalar::frac(4, 5), Scalar::zero(), Scalar::zero());
        let m = lambda_so3(&q).unwrap();
        // cos θ = 9/25 − 16/25, sin θ = 2·(3/5)(4/5)
        let (c, s) = (Scalar::frac(-7, 25), Scalar::frac(24, 25));
        let want = Matrix::from_fn(3, 3, |r, col| match (r, col) {
            (0, 0) => Scalar::one(),
            (1, 1) | (2, 2) => c.clone(),
            (2, 1) => s.clone(),
            (1, 2) => -&s,
            _ => Scalar::zero(),
        });
        assert_eq!(m, want);
    }

    #[test]
    fn rejects_non_unit() {
        assert!(matches!(lambda_so3(&Quaternion::from_ints(1, 1, 0, 0)), Err(Error::NotUnit(_))));
    }
}
