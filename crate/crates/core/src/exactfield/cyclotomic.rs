use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly;
use super::{FieldError, Rational, RootOfUnity};

/// Per-conductor tables: the cyclotomic polynomial and `x^j mod Φ_m`.
struct CycloData {
    phi: usize,
    poly: Vec<i64>,
    poly_q: Vec<Rational>,
    powers: Vec<Vec<i64>>,
}

fn data(m: u32) -> Arc<CycloData> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycloData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(d) = cache.read().expect("cyclotomic cache poisoned").get(&m) {
        return d.clone();
    }
    let built = Arc::new(build(m));
    cache
        .write()
        .expect("cyclotomic cache poisoned")
        .entry(m)
        .or_insert(built)
        .clone()
}

fn build(m: u32) -> CycloData {
    let p = poly::cyclotomic_poly(m);
    let phi = p.len() - 1;
    let mut powers = Vec::with_capacity(m as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..m {
        powers.push(cur.clone());
        // multiply by x, then reduce the degree-phi term
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for (i, c) in cur.iter_mut().enumerate() {
                *c -= top * p[i];
            }
        }
    }
    CycloData {
        phi,
        poly_q: poly::int_poly(&p),
        poly: p,
        powers,
    }
}

/// Euler's totient of `m`, the dimension of the m-th cyclotomic field.
pub fn euler_phi(m: u32) -> usize {
    data(m).phi
}

/// An exact element of Q(ζ_m), stored in the power basis `1, ζ, …, ζ^{φ(m)-1}`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    m: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { m: 1, coeffs: vec![q] }
    }

    /// `ζ_m^a`.
    pub fn root(m: u32, a: i64) -> Self {
        assert!(m >= 1);
        let d = data(m);
        let j = a.rem_euclid(m as i64) as usize;
        Cyclotomic {
            m,
            coeffs: poly::int_poly(&d.powers[j]),
        }
    }

    /// Build from power-basis coefficients modulo Φ_m. Longer inputs are
    /// reduced; shorter ones are zero-padded.
    pub fn from_coeffs(m: u32, coeffs: Vec<Rational>) -> Self {
        assert!(m >= 1);
        let d = data(m);
        let mut c = if coeffs.len() > d.phi {
            poly::rem(&coeffs, &d.poly_q)
        } else {
            coeffs
        };
        c.resize(d.phi, Rational::zero());
        Cyclotomic { m, coeffs: c }
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_one()
    }

    pub fn is_minus_one(&self) -> bool {
        self.is_rational() && self.coeffs[0] == -Rational::one()
    }

    /// Re-express in Q(ζ_l); `l` must be a multiple of the conductor.
    pub fn coerce(&self, l: u32) -> Cyclotomic {
        assert!(l.is_multiple_of(self.m), "conductor {} does not divide {}", self.m, l);
        if l == self.m {
            return self.clone();
        }
        let d = data(l);
        let step = (l / self.m) as usize;
        let mut out = vec![Rational::zero(); d.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, &p) in d.powers[i * step].iter().enumerate() {
                if p != 0 {
                    out[t] += c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
        Cyclotomic { m: l, coeffs: out }
    }

    fn common(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let l = self.m.lcm(&other.m);
        (self.coerce(l), other.coerce(l))
    }

    fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn checked_inv(&self) -> Result<Cyclotomic, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Cyclotomic::from_rational(q.recip()).coerce(self.m));
        }
        let d = data(self.m);
        let inv = poly::inverse_mod(&self.coeffs, &d.poly_q).ok_or(FieldError::DivisionByZero)?;
        Ok(Cyclotomic::from_coeffs(self.m, inv))
    }

    pub fn inv(&self) -> Cyclotomic {
        self.checked_inv().expect("inverse of zero")
    }

    pub fn checked_div(&self, other: &Cyclotomic) -> Result<Cyclotomic, FieldError> {
        Ok(self * &other.checked_inv()?)
    }

    pub fn pow(&self, e: i64) -> Cyclotomic {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact root-of-unity test against every `ζ_M^j` with `M = lcm(2, m)`.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        let big = self.m.lcm(&2);
        let x = self.coerce(big);
        let mut ints = Vec::with_capacity(x.coeffs.len());
        for c in &x.coeffs {
            if !c.is_integer() {
                return None;
            }
            ints.push(c.numer().to_i64()?);
        }
        let d = data(big);
        (0..big)
            .find(|&j| d.powers[j as usize] == ints)
            .map(|j| RootOfUnity::new(big, j as i64).reduced())
    }

    /// Complex conjugate, i.e. the automorphism ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Cyclotomic {
        let d = data(self.m);
        let mut out = vec![Rational::zero(); d.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = (self.m as usize - i) % self.m as usize;
            for (t, &p) in d.powers[j].iter().enumerate() {
                if p != 0 {
                    out[t] += c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
        Cyclotomic { m: self.m, coeffs: out }
    }
}

impl From<RootOfUnity> for Cyclotomic {
    fn from(r: RootOfUnity) -> Self {
        r.to_cyclotomic()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.coeffs == other.coeffs;
        }
        if self.is_rational() && other.is_rational() {
            return self.coeffs[0] == other.coeffs[0];
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.is_rational() && self.m != 1 {
            let mut out = self.clone();
            out.coeffs[0] += &rhs.coeffs[0];
            return out;
        }
        if self.is_rational() && rhs.m != 1 {
            let mut out = rhs.clone();
            out.coeffs[0] += &self.coeffs[0];
            return out;
        }
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if let Some(q) = rhs.as_rational() {
            return self.scale(&q);
        }
        if let Some(q) = self.as_rational() {
            return rhs.scale(&q);
        }
        let (a, b) = self.common(rhs);
        let d = data(a.m);
        let mut prod = vec![Rational::zero(); 2 * d.phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        // reduce by the monic Φ_m from the top degree down
        for deg in (d.phi..prod.len()).rev() {
            let c = std::mem::take(&mut prod[deg]);
            if c.is_zero() {
                continue;
            }
            for (t, &p) in d.poly[..d.phi].iter().enumerate() {
                if p != 0 {
                    prod[deg - d.phi + t] -= &c * Rational::from_integer(BigInt::from(p));
                }
            }
        }
        prod.truncate(d.phi);
        Cyclotomic { m: a.m, coeffs: prod }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        if let Some(r) = self.as_root_of_unity() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z({},{i})", self.m)?;
            }
        }
        Ok(())
    }
}

/// Compact JSON form: a rational string `"a/b"`, a root string `"z(m,a)"`, or
/// `{"m": m, "coeffs": ["c0", …]}` for anything else.
impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if let Some(q) = self.as_rational() {
            return s.collect_str(&q);
        }
        if let Some(r) = self.as_root_of_unity() {
            return s.collect_str(&r);
        }
        #[derive(Serialize)]
        struct Raw {
            m: u32,
            coeffs: Vec<String>,
        }
        Raw {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Text(String),
            Raw { m: u32, coeffs: Vec<String> },
        }
        match Wire::deserialize(d)? {
            Wire::Text(t) => t.parse().map_err(serde::de::Error::custom),
            Wire::Raw { m, coeffs } => {
                if m == 0 {
                    return Err(serde::de::Error::custom("conductor must be positive"));
                }
                let cs = coeffs
                    .iter()
                    .map(|c| c.parse::<Rational>().map_err(serde::de::Error::custom))
                    .collect::<Result<Vec<_>, _>>()?;
                if cs.len() != euler_phi(m) {
                    return Err(serde::de::Error::custom("coefficient count must be phi(m)"));
                }
                Ok(Cyclotomic::from_coeffs(m, cs))
            }
        }
    }
}

impl std::str::FromStr for Cyclotomic {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.starts_with("z(") {
            return Ok(t.parse::<RootOfUnity>()?.to_cyclotomic());
        }
        t.parse::<Rational>()
            .map(Cyclotomic::from_rational)
            .map_err(|_| FieldError::Parse(s.to_string()))
    }
}
