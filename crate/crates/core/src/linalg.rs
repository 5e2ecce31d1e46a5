//! Small fixed-size complex matrix helpers (2x2 throughout).

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex 2x2 matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub m: [[Complex64; 2]; 2],
}

impl Mat2 {
    pub fn new(m: [[Complex64; 2]; 2]) -> Self {
        Mat2 { m }
    }

    pub fn zero() -> Self {
        Mat2::new([[Complex64::new(0.0, 0.0); 2]; 2])
    }

    pub fn identity() -> Self {
        let mut z = Mat2::zero();
        z.m[0][0] = Complex64::new(1.0, 0.0);
        z.m[1][1] = Complex64::new(1.0, 0.0);
        z
    }

    pub fn from_real(r: &[[i64; 2]; 2]) -> Self {
        let mut out = Mat2::zero();
        for (i, row) in r.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                out.m[i][j] = Complex64::new(v as f64, 0.0);
            }
        }
        out
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = self.m[i][0] * other.m[0][j] + self.m[i][1] * other.m[1][j];
            }
        }
        out
    }

    pub fn add(&self, other: &Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = self.m[i][j] + other.m[i][j];
            }
        }
        out
    }

    pub fn inverse(&self, context: &'static str) -> Result<Mat2> {
        let d = self.det();
        if d.norm() < 1e-300 {
            return Err(Error::SingularDenominator(context));
        }
        Ok(Mat2::new([
            [self.m[1][1] / d, -self.m[0][1] / d],
            [-self.m[1][0] / d, self.m[0][0] / d],
        ]))
    }

    /// row * M for a row 2-vector.
    pub fn row_mul(&self, row: &[Complex64; 2]) -> [Complex64; 2] {
        [
            row[0] * self.m[0][0] + row[1] * self.m[1][0],
            row[0] * self.m[0][1] + row[1] * self.m[1][1],
        ]
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        let mut d = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let a = Mat2::new([
            [Complex64::new(1.0, 2.0), Complex64::new(0.5, -1.0)],
            [Complex64::new(-0.3, 0.0), Complex64::new(2.0, 1.0)],
        ]);
        let inv = a.inverse("test").unwrap();
        assert!(a.mul(&inv).max_abs_diff(&Mat2::identity()) < 1e-14);
    }

    #[test]
    fn singular_detected() {
        assert!(Mat2::zero().inverse("test").is_err());
    }
}
