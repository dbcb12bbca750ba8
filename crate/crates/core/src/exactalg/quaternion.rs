use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::matrix::Matrix;
use super::scalar::Scalar;

/// `w + x·i + y·j + z·k` with exact coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: Scalar,
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
}

impl Quaternion {
    pub fn new(w: Scalar, x: Scalar, y: Scalar, z: Scalar) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(Scalar::int(w), Scalar::int(x), Scalar::int(y), Scalar::int(z))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    /// The basis `1, i, j, k` in that order.
    pub fn basis() -> [Quaternion; 4] {
        [Self::one(), Self::i(), Self::j(), Self::k()]
    }

    pub fn from_coords(c: &[Scalar]) -> Self {
        Self::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
    }

    pub fn coords(&self) -> [Scalar; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `q̄q = w² + x² + y² + z²`.
    pub fn norm(&self) -> Scalar {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn re(&self) -> Scalar {
        self.w.clone()
    }

    pub fn im(&self) -> Self {
        Self::new(Scalar::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    /// Imaginary part as coordinates in `(i, j, k)`.
    pub fn im_coords(&self) -> [Scalar; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(c * &self.w, c * &self.x, c * &self.y, c * &self.z)
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(self.conj().scale(&n))
    }

    /// Matrix of `x ↦ self·x` in the basis `1, i, j, k`.
    pub fn left_mult_matrix(&self) -> Matrix {
        let cols: Vec<Vec<Scalar>> = Self::basis().iter().map(|e| (self * e).coords().to_vec()).collect();
        Matrix::from_columns(4, &cols)
    }

    /// Matrix of `x ↦ x·self` in the basis `1, i, j, k`.
    pub fn right_mult_matrix(&self) -> Matrix {
        let cols: Vec<Vec<Scalar>> = Self::basis().iter().map(|e| (e * self).coords().to_vec()).collect();
        Matrix::from_columns(4, &cols)
    }

    /// Real inner product `Re(p̄q)`.
    pub fn inner(&self, other: &Quaternion) -> Scalar {
        (self.conj() * other).re()
    }
}

impl Mul<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Mul<Quaternion> for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        &self * &o
    }
}

impl Mul<&Quaternion> for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        &self * o
    }
}

impl Add<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        &self + &o
    }
}

impl Sub<&Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.w - &o.w, &self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        &self - &o
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i + {}j + {}k)", self.w, self.x, self.y, self.z)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let m1 = -Quaternion::one();
        assert_eq!(&i * &i, m1);
        assert_eq!(&j * &j, m1);
        assert_eq!(&k * &k, m1);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&(&i * &j) * &k, m1);
    }

    #[test]
    fn norm_is_multiplicative() {
        let p = Quaternion::from_ints(1, 2, -3, 4);
        let q = Quaternion::from_ints(0, -1, 5, 2);
        assert_eq!((&p * &q).norm(), p.norm() * q.norm());
        assert_eq!(&p * &p.inv().unwrap(), Quaternion::one());
    }
}
