use num_rational::BigRational;
use rand::Rng;

use super::{Codec, Ring, SampleProfile, SampleRing};
use crate::error::{Error, Result};
use crate::matrix::NcMatrix;

/// Polynomials `c_0 + c_1 t + ... + c_L t^L` over a base ring, with `t`
/// central and `t^{L+1} = 0`.
///
/// An element is invertible exactly when `c_0` is; the inverse is built
/// order by order. With `L = 1` this is the ring of dual numbers.
#[derive(Clone, Debug)]
pub struct TruncRing<R: Ring> {
    base: R,
    order: usize,
}

impl<R: Ring> TruncRing<R> {
    pub fn new(base: R, order: usize) -> Self {
        TruncRing { base, order }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `c * t^k`, zero when `k > L`.
    pub fn monomial(&self, c: R::Elem, k: usize) -> Vec<R::Elem> {
        let mut v = vec![self.base.zero(); self.order + 1];
        if k <= self.order {
            v[k] = c;
        }
        v
    }

    pub fn constant(&self, c: R::Elem) -> Vec<R::Elem> {
        self.monomial(c, 0)
    }

    /// `c_0 + c_1 t` (higher coefficients zero).
    pub fn linear(&self, c0: R::Elem, c1: R::Elem) -> Vec<R::Elem> {
        let mut v = self.constant(c0);
        if self.order >= 1 {
            v[1] = c1;
        }
        v
    }

    pub fn coefficient<'a>(&self, a: &'a [R::Elem], k: usize) -> &'a R::Elem {
        &a[k]
    }
}

impl<R: Ring> Ring for TruncRing<R> {
    type Elem = Vec<R::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.order + 1]
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(self.order + 1 - i) {
                if !self.base.is_zero(y) {
                    out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
                }
            }
        }
        out
    }

    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        // b_0 = c_0^{-1}, b_k = -c_0^{-1} * sum_{i=1..k} c_i b_{k-i}
        let c0_inv = self.base.try_inv(&a[0])?;
        let mut b: Vec<R::Elem> = Vec::with_capacity(self.order + 1);
        b.push(c0_inv.clone());
        for k in 1..=self.order {
            let mut acc = self.base.zero();
            for i in 1..=k {
                if !self.base.is_zero(&a[i]) {
                    acc = self.base.add(&acc, &self.base.mul(&a[i], &b[k - i]));
                }
            }
            b.push(self.base.neg(&self.base.mul(&c0_inv, &acc)));
        }
        Some(b)
    }

    fn from_rational(&self, q: &BigRational) -> Self::Elem {
        self.constant(self.base.from_rational(q))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|x| self.base.is_zero(x))
    }

    fn supports_flattening(&self) -> bool {
        self.base.supports_flattening()
    }

    /// Inverts the `t^0` part over the base ring and lifts order by order:
    /// `B_k = -B_0 * sum_{i=1..k} M_i B_{k-i}`.
    fn invert_matrix(&self, m: &NcMatrix<Self::Elem>) -> Option<NcMatrix<Self::Elem>> {
        if !m.is_square() {
            return None;
        }
        let layer = |k: usize| m.map(|e| e[k].clone());
        let layers: Vec<NcMatrix<R::Elem>> = (0..=self.order).map(layer).collect();
        let b0 = self.base.invert_matrix(&layers[0])?;
        let mut inv = vec![b0.clone()];
        for k in 1..=self.order {
            let mut acc: Option<NcMatrix<R::Elem>> = None;
            for i in 1..=k {
                let term = layers[i].mul(&self.base, &inv[k - i]).ok()?;
                acc = Some(match acc {
                    None => term,
                    Some(s) => s.add(&self.base, &term).ok()?,
                });
            }
            let acc = acc.expect("k >= 1");
            let bk = b0.mul(&self.base, &acc).ok()?.map(|e| self.base.neg(e));
            inv.push(bk);
        }
        let (rows, cols) = (b0.row_labels().to_vec(), b0.col_labels().to_vec());
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(inv.iter().map(|b| b.at(r, c).clone()).collect());
            }
        }
        NcMatrix::new(rows, cols, data).ok()
    }
}

impl<R: SampleRing> SampleRing for TruncRing<R> {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, profile: &SampleProfile) -> Self::Elem {
        (0..=self.order).map(|_| self.base.sample(rng, profile)).collect()
    }
}

/// Serialized as a coefficient map `{"0": c_0, "1": c_1, ...}` with zero
/// coefficients omitted.
impl<R: Codec> Codec for TruncRing<R> {
    fn encode(&self, a: &Self::Elem) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (k, c) in a.iter().enumerate() {
            if !self.base.is_zero(c) {
                map.insert(k.to_string(), self.base.encode(c));
            }
        }
        serde_json::Value::Object(map)
    }

    fn decode(&self, v: &serde_json::Value) -> Result<Self::Elem> {
        let map = v.as_object().ok_or_else(|| Error::invalid(format!("expected a coefficient map, got {v}")))?;
        let mut out = self.zero();
        for (k, c) in map {
            let k: usize = k.parse().map_err(|_| Error::invalid(format!("bad series exponent `{k}`")))?;
            if k > self.order {
                return Err(Error::invalid(format!("exponent {k} exceeds truncation order {}", self.order)));
            }
            out[k] = self.base.decode(c)?;
        }
        Ok(out)
    }
}
