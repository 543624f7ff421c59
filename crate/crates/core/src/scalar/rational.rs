use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::{Codec, Ring, SampleProfile, SampleRing};
use crate::error::{Error, Result};
use crate::linalg::{self, DenseQ};
use crate::matrix::NcMatrix;

/// The field of exact rationals (the commutative, `d = 1` specialization).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QRing;

impl Ring for QRing {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn try_inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn from_rational(&self, q: &BigRational) -> BigRational {
        q.clone()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn supports_flattening(&self) -> bool {
        true
    }

    fn invert_matrix(&self, m: &NcMatrix<BigRational>) -> Option<NcMatrix<BigRational>> {
        if !m.is_square() {
            return None;
        }
        let n = m.nrows();
        let dense = DenseQ::from_vec(n, n, m.entries().to_vec());
        let inv = dense.inverse()?;
        NcMatrix::new(m.col_labels().to_vec(), m.row_labels().to_vec(), inv.into_data()).ok()
    }
}

impl SampleRing for QRing {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, profile: &SampleProfile) -> BigRational {
        profile.sample_rational(rng)
    }
}

impl Codec for QRing {
    fn encode(&self, a: &BigRational) -> serde_json::Value {
        serde_json::Value::String(linalg::rational_to_string(a))
    }

    fn decode(&self, v: &serde_json::Value) -> Result<BigRational> {
        v.as_str()
            .and_then(linalg::parse_rational)
            .ok_or_else(|| Error::invalid(format!("expected a rational string, got {v}")))
    }
}
