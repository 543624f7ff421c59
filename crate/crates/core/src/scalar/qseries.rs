use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::{Codec, Ring, SampleProfile, SampleRing};
use crate::error::{Error, Result};
use crate::linalg;

/// Polynomial in `q` with rational coefficients, lowest degree first and no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly(Vec<BigRational>);

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = BigRational::one();
        QPoly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        QPoly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        QPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    /// Euclidean division: `self = quot * d + rem`.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.0.len() - 1;
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        let lead_inv = d.lead().recip();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, x) in d.0.iter().enumerate() {
                rem[k + i] -= &c * x;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Monic greatest common divisor (zero only when both are zero).
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        self.scale(&self.lead().recip())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let abs = if neg { -c } else { c.clone() };
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let coeff = linalg::rational_to_string(&abs);
            let body = match (k, abs.is_one()) {
                (0, _) => coeff,
                (1, true) => "q".to_string(),
                (1, false) => format!("{coeff}*q"),
                (_, true) => format!("q^{k}"),
                (_, false) => format!("{coeff}*q^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Reduced rational function `num / den` in `q`: `gcd(num, den) = 1` and
/// `den` monic, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QFrac {
    num: QPoly,
    den: QPoly,
}

impl QFrac {
    pub fn new(num: QPoly, den: QPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.lead().recip();
        Some(QFrac { num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn from_poly(p: QPoly) -> Self {
        QFrac { num: p, den: QPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &QFrac) -> QFrac {
        if self.den == o.den {
            return QFrac::new(self.num.add(&o.num), self.den.clone()).expect("nonzero denominator");
        }
        QFrac::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).expect("nonzero denominator")
    }

    pub fn neg(&self) -> QFrac {
        QFrac { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &QFrac) -> QFrac {
        QFrac::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominator")
    }

    pub fn inv(&self) -> Option<QFrac> {
        QFrac::new(self.den.clone(), self.num.clone())
    }

    /// Parses `P` or `(P)/(Q)` where `P`, `Q` are sums of terms `c`, `c*q^k`,
    /// `q^k`, `q`, in the format produced by `Display`.
    pub fn parse(s: &str) -> Option<QFrac> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (n, d) = rest.split_once(")/(")?;
            let d = d.strip_suffix(')')?;
            return QFrac::new(parse_poly(n)?, parse_poly(d)?);
        }
        Some(QFrac::from_poly(parse_poly(s)?))
    }
}

fn parse_poly(s: &str) -> Option<QPoly> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        // a sign not directly after the '/' of a rational or a '^' starts a term
        if i > 0 && (ch == '+' || ch == '-') && !matches!(s.as_bytes()[i - 1], b'/' | b'^' | b'*') {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut out = QPoly::zero();
    for t in terms {
        let (neg, t) = match t.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (coeff, k) = match t.split_once('q') {
            None => (linalg::parse_rational(t)?, 0),
            Some((c, e)) => {
                let c = match c.strip_suffix('*') {
                    Some(c) => linalg::parse_rational(c)?,
                    None if c.is_empty() => BigRational::one(),
                    None => return None,
                };
                let k = match e.strip_prefix('^') {
                    Some(e) => e.parse().ok()?,
                    None if e.is_empty() => 1,
                    None => return None,
                };
                (c, k)
            }
        };
        let coeff = if neg { -coeff } else { coeff };
        out = out.add(&QPoly::q_pow(k).scale(&coeff));
    }
    Some(out)
}

impl fmt::Display for QFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Power series `sum_k c_k z^k`, `k <= N`, with coefficients in `Q(q)`.
/// Commutative; a unit exactly when `c_0 != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QSeriesRing {
    order: usize,
}

impl QSeriesRing {
    pub fn new(order: usize) -> Self {
        QSeriesRing { order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `c * z^k`, zero when `k > N`.
    pub fn monomial(&self, c: QFrac, k: usize) -> Vec<QFrac> {
        let mut v = vec![QFrac::zero(); self.order + 1];
        if k <= self.order {
            v[k] = c;
        }
        v
    }
}

impl Ring for QSeriesRing {
    type Elem = Vec<QFrac>;

    fn zero(&self) -> Vec<QFrac> {
        vec![QFrac::zero(); self.order + 1]
    }

    fn one(&self) -> Vec<QFrac> {
        self.monomial(QFrac::one(), 0)
    }

    fn add(&self, a: &Vec<QFrac>, b: &Vec<QFrac>) -> Vec<QFrac> {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }

    fn neg(&self, a: &Vec<QFrac>) -> Vec<QFrac> {
        a.iter().map(QFrac::neg).collect()
    }

    fn mul(&self, a: &Vec<QFrac>, b: &Vec<QFrac>) -> Vec<QFrac> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(self.order + 1 - i) {
                if !y.is_zero() {
                    out[i + j] = out[i + j].add(&x.mul(y));
                }
            }
        }
        out
    }

    fn try_inv(&self, a: &Vec<QFrac>) -> Option<Vec<QFrac>> {
        let c0_inv = a[0].inv()?;
        let mut b = vec![c0_inv.clone()];
        for k in 1..=self.order {
            let mut acc = QFrac::zero();
            for i in 1..=k {
                if !a[i].is_zero() {
                    acc = acc.add(&a[i].mul(&b[k - i]));
                }
            }
            b.push(c0_inv.mul(&acc).neg());
        }
        Some(b)
    }

    fn from_rational(&self, q: &BigRational) -> Vec<QFrac> {
        self.monomial(QFrac::constant(q.clone()), 0)
    }

    fn is_zero(&self, a: &Vec<QFrac>) -> bool {
        a.iter().all(QFrac::is_zero)
    }
}

impl SampleRing for QSeriesRing {
    /// Coefficients are random rational constants.
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G, profile: &SampleProfile) -> Vec<QFrac> {
        (0..=self.order).map(|_| QFrac::constant(profile.sample_rational(rng))).collect()
    }
}

impl Codec for QSeriesRing {
    fn encode(&self, a: &Vec<QFrac>) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                map.insert(k.to_string(), serde_json::Value::String(c.to_string()));
            }
        }
        serde_json::Value::Object(map)
    }

    fn decode(&self, v: &serde_json::Value) -> Result<Vec<QFrac>> {
        let map = v.as_object().ok_or_else(|| Error::invalid(format!("expected a coefficient map, got {v}")))?;
        let mut out = self.zero();
        for (k, c) in map {
            let k: usize = k.parse().map_err(|_| Error::invalid(format!("bad series exponent `{k}`")))?;
            if k > self.order {
                return Err(Error::invalid(format!("exponent {k} exceeds truncation order {}", self.order)));
            }
            out[k] = c
                .as_str()
                .and_then(QFrac::parse)
                .ok_or_else(|| Error::invalid(format!("bad q-rational coefficient {c}")))?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_are_reduced() {
        // (q^2 - 1) / (2q - 2) = (q + 1)/2
        let f = QFrac::new(QPoly::from_i64(&[-1, 0, 1]), QPoly::from_i64(&[-2, 2])).unwrap();
        assert_eq!(f.denom(), &QPoly::one());
        assert_eq!(f.to_string(), "1/2*q + 1/2");
    }

    #[test]
    fn display_parse_round_trip() {
        let f = QFrac::new(QPoly::from_i64(&[0, -3, 0, 1]), QPoly::from_i64(&[1, -1, 0, 2])).unwrap();
        let s = f.to_string();
        assert_eq!(QFrac::parse(&s).unwrap(), f, "{s}");
        assert_eq!(QFrac::parse("-q").unwrap(), QFrac::from_poly(QPoly::from_i64(&[0, -1])));
    }

    #[test]
    fn geometric_series_inverse() {
        // 1/(1 - qz) = sum q^k z^k
        let r = QSeriesRing::new(4);
        let mut a = r.one();
        a[1] = QFrac::from_poly(QPoly::from_i64(&[0, -1]));
        let inv = r.try_inv(&a).unwrap();
        for (k, c) in inv.iter().enumerate() {
            assert_eq!(c, &QFrac::from_poly(QPoly::q_pow(k)));
        }
    }
}
