//! Prime fields of word size.

use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Coefficient representation: the least non-negative residue.
pub type Coeff = u32;

/// Default modulus for every computation in this crate.
pub const DEFAULT_PRIME: u32 = 32003;

/// The field `Z/pZ` for a prime `p < 2^31`.
///
/// Elements are plain residues in `[0, p)`; the modulus is carried by the
/// field value rather than by each element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

/// Element of a prime field bundled with nothing but its residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElement(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if p >= 1 << 31 {
            return Err(AlgebraError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(&self, v: i64) -> Coeff {
        v.rem_euclid(self.p as i64) as Coeff
    }

    #[inline]
    pub fn add(&self, a: Coeff, b: Coeff) -> Coeff {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Coeff, b: Coeff) -> Coeff {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Coeff) -> Coeff {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Coeff, b: Coeff) -> Coeff {
        ((a as u64 * b as u64) % self.p as u64) as Coeff
    }

    pub fn pow(&self, mut a: Coeff, mut e: u64) -> Coeff {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: Coeff) -> Result<Coeff, AlgebraError> {
        if a.is_multiple_of(self.p) {
            return Err(AlgebraError::InverseOfZero);
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Ok(self.from_i64(t0))
    }

    /// Inverse of a value already known to be nonzero.
    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Coeff) -> Coeff {
        self.inv(a).expect("inverse of a nonzero residue")
    }

    /// Applies a field operation to residues. `b` is ignored by unary ops.
    pub fn apply(&self, op: FieldOp, a: FieldElement, b: FieldElement) -> Result<FieldElement, AlgebraError> {
        let (a, b) = (a.0 % self.p, b.0 % self.p);
        let v = match op {
            FieldOp::Add => self.add(a, b),
            FieldOp::Sub => self.sub(a, b),
            FieldOp::Mul => self.mul(a, b),
            FieldOp::Neg => self.neg(a),
            FieldOp::Inv => self.inv(a)?,
        };
        Ok(FieldElement(v))
    }

    /// Signed representative in `(-p/2, p/2]`, handy for printing small integers.
    pub fn to_signed(&self, a: Coeff) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}
