use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Cyclotomic, FieldError};

/// The root of unity `ζ_m^a`, with `ζ_m = exp(2πi/m)`.
///
/// Values are compared after reduction, so `z(4,2) == z(2,1)`.
#[derive(Clone, Copy, Debug)]
pub struct RootOfUnity {
    m: u32,
    a: u32,
}

impl RootOfUnity {
    pub fn new(m: u32, a: i64) -> Self {
        assert!(m >= 1, "root of unity needs m >= 1");
        RootOfUnity {
            m,
            a: a.rem_euclid(m as i64) as u32,
        }
    }

    pub fn one() -> Self {
        RootOfUnity { m: 1, a: 0 }
    }

    pub fn minus_one() -> Self {
        RootOfUnity { m: 2, a: 1 }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    /// Lowest-terms form: `gcd(m, a) = 1`, and `z(1,0)` for one.
    pub fn reduced(&self) -> Self {
        let g = self.m.gcd(&self.a);
        RootOfUnity {
            m: self.m / g,
            a: self.a / g,
        }
    }

    /// Multiplicative order `m / gcd(m, a)`.
    pub fn order(&self) -> u32 {
        self.m / self.m.gcd(&self.a)
    }

    pub fn is_one(&self) -> bool {
        self.a == 0
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let l = self.m.lcm(&other.m);
        let a = self.a as u64 * (l / self.m) as u64 + other.a as u64 * (l / other.m) as u64;
        RootOfUnity::new(l, (a % l as u64) as i64)
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(self.m, -(self.a as i64))
    }

    pub fn pow(&self, e: i64) -> RootOfUnity {
        let m = self.m as i64;
        RootOfUnity::new(self.m, (self.a as i64 * e.rem_euclid(m)) % m)
    }

    /// Exponent of this value relative to `ζ_l`, when `ζ_l` generates a group
    /// containing it.
    pub fn exponent_in(&self, l: u32) -> Option<u32> {
        let r = self.reduced();
        if !l.is_multiple_of(r.m) {
            return None;
        }
        Some(r.a * (l / r.m))
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::root(self.m, self.a as i64)
    }
}

impl PartialEq for RootOfUnity {
    fn eq(&self, other: &Self) -> bool {
        let (x, y) = (self.reduced(), other.reduced());
        x.m == y.m && x.a == y.a
    }
}

impl Eq for RootOfUnity {}

impl std::hash::Hash for RootOfUnity {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        let r = self.reduced();
        r.m.hash(state);
        r.a.hash(state);
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z({},{})", self.m, self.a)
    }
}

impl FromStr for RootOfUnity {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FieldError::Parse(s.to_string());
        let inner = s
            .trim()
            .strip_prefix("z(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (m, a) = inner.split_once(',').ok_or_else(bad)?;
        let m: u32 = m.trim().parse().map_err(|_| bad())?;
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        if m == 0 {
            return Err(bad());
        }
        Ok(RootOfUnity::new(m, a))
    }
}

impl Serialize for RootOfUnity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootOfUnity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
