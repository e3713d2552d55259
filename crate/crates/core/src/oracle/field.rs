use serde::{Deserialize, Serialize};

use super::linalg::Matrix;
use super::OracleError;

/// `F_p` or `F_{p^2} = F_p[x]/(x^2 + a x + b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u32,
    deg: u32,
    modulus: Option<(u32, u32)>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn has_root(p: u32, a: u32, b: u32) -> bool {
    (0..p).any(|x| (x * x + a * x + b) % p == 0)
}

impl FieldSpec {
    pub const MAX_P: u32 = 251;

    pub fn prime(p: u32) -> Result<Self, OracleError> {
        if !is_prime(p) {
            return Err(OracleError::NotPrime(p));
        }
        if p > Self::MAX_P {
            return Err(OracleError::FieldTooLarge(p));
        }
        Ok(FieldSpec { p, deg: 1, modulus: None })
    }

    /// `F_{p^2}` with the lexicographically first irreducible `x^2 + a x + b`.
    pub fn quadratic(p: u32) -> Result<Self, OracleError> {
        FieldSpec::prime(p)?;
        let (a, b) = (0..p)
            .flat_map(|a| (0..p).map(move |b| (a, b)))
            .find(|&(a, b)| !has_root(p, a, b))
            .expect("every F_p has an irreducible quadratic");
        Ok(FieldSpec { p, deg: 2, modulus: Some((a, b)) })
    }

    pub fn with_modulus(p: u32, a: u32, b: u32) -> Result<Self, OracleError> {
        FieldSpec::prime(p)?;
        let (a, b) = (a % p, b % p);
        if has_root(p, a, b) {
            return Err(OracleError::Reducible { p, a, b });
        }
        Ok(FieldSpec { p, deg: 2, modulus: Some((a, b)) })
    }

    /// `q = p` or `q^2 = p^2` for the quadratic extension.
    pub fn from_size(q: u64) -> Result<Self, OracleError> {
        let q32 = u32::try_from(q).map_err(|_| OracleError::NotPrimePower(q))?;
        if is_prime(q32) {
            return FieldSpec::prime(q32);
        }
        let r = (q as f64).sqrt().round() as u32;
        if (r as u64) * (r as u64) == q && is_prime(r) {
            return FieldSpec::quadratic(r);
        }
        Err(OracleError::NotPrimePower(q))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn modulus(&self) -> Option<(u32, u32)> {
        self.modulus
    }

    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.deg)
    }

    pub fn prime_field(&self) -> FieldSpec {
        FieldSpec { p: self.p, deg: 1, modulus: None }
    }

    /// The quadratic extension of this prime field, with the conventional modulus.
    pub fn extension(&self) -> Result<FieldSpec, OracleError> {
        if self.deg != 1 {
            return Err(OracleError::RequiresPrimeField(self.q()));
        }
        FieldSpec::quadratic(self.p)
    }

    /// Multiplication by `x` on the basis `(1, x)`.
    pub fn generator_matrix(&self) -> Option<Matrix> {
        let (a, b) = self.modulus?;
        Some(Matrix::from_images(self.p, 2, |j| match j {
            0 => vec![(1, 1)],
            _ => vec![(0, -(b as i64)), (1, -(a as i64))],
        }))
    }

    pub(crate) fn require_prime(&self) -> Result<u32, OracleError> {
        if self.deg == 1 {
            Ok(self.p)
        } else {
            Err(OracleError::RequiresPrimeField(self.q()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventional_moduli() {
        assert_eq!(FieldSpec::quadratic(2).unwrap().modulus(), Some((1, 1)));
        assert_eq!(FieldSpec::quadratic(3).unwrap().modulus(), Some((0, 1)));
        assert_eq!(FieldSpec::quadratic(5).unwrap().modulus(), Some((0, 2)));
        assert_eq!(FieldSpec::quadratic(3).unwrap().q(), 9);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(FieldSpec::prime(4), Err(OracleError::NotPrime(4)));
        assert_eq!(FieldSpec::prime(1), Err(OracleError::NotPrime(1)));
        assert_eq!(
            FieldSpec::with_modulus(3, 0, 2),
            Err(OracleError::Reducible { p: 3, a: 0, b: 2 })
        );
        assert!(FieldSpec::with_modulus(3, 1, 2).is_ok());
        assert_eq!(FieldSpec::from_size(4).unwrap(), FieldSpec::quadratic(2).unwrap());
        assert_eq!(FieldSpec::from_size(6), Err(OracleError::NotPrimePower(6)));
    }

    #[test]
    fn generator_satisfies_modulus() {
        for p in [2, 3, 5, 7] {
            let f = FieldSpec::quadratic(p).unwrap();
            let (a, b) = f.modulus().unwrap();
            let x = f.generator_matrix().unwrap();
            let poly = x.mul(&x).add_scaled(a as i64, &x).add_scaled(b as i64, &Matrix::identity(p, 2));
            assert!(poly.is_zero());
        }
    }
}
