//! Exact arithmetic in cyclotomic fields `Q(zeta_N)` and in rational phases `Q/Z`.
//!
//! A [`CycScalar`] stores its coordinates in the power basis of `Q[x]/Phi_N(x)` as a
//! vector of integer numerators over one common positive denominator. Operations
//! between scalars of different conductors lift both operands to the lcm first.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

struct Cyclotomic {
    phi: usize,
    /// `powers[k]` = coordinates of `x^k mod Phi_n` for `0 <= k < n`.
    powers: Vec<Vec<i64>>,
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients (low degree first) of the n-th cyclotomic polynomial.
fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let divisor = cyclotomic_polynomial(d);
            poly = divide_monic(&poly, &divisor);
        }
    }
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn table(n: u32) -> Arc<Cyclotomic> {
    static TABLES: OnceLock<RwLock<HashMap<u32, Arc<Cyclotomic>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = tables.read().unwrap().get(&n) {
        return t.clone();
    }
    let phi = euler_phi(n as u64) as usize;
    let poly = cyclotomic_polynomial(n);
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x and reduce by the monic Phi_n
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
        if top != 0 {
            for j in 0..phi {
                next[j] -= top * poly[j];
            }
        }
        cur = next;
    }
    let t = Arc::new(Cyclotomic { phi, powers });
    tables.write().unwrap().insert(n, t.clone());
    t
}

/// An exact element of a cyclotomic field.
#[derive(Clone)]
pub struct CycScalar {
    conductor: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycScalar {
    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        CycScalar {
            conductor: 1,
            num: vec![BigInt::from(v)],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let mut s = CycScalar {
            conductor: 1,
            num: vec![r.numer().clone()],
            den: r.denom().clone(),
        };
        s.normalize();
        s
    }

    /// `zeta_q^p` with conductor reduced to the denominator of `p/q` in lowest terms.
    pub fn root_of_unity(p: i64, q: i64) -> Result<Self> {
        if q <= 0 {
            return Err(Error::InvalidArgument(format!(
                "root of unity order must be positive, got {q}"
            )));
        }
        let g = p.gcd(&q);
        let (p, q) = (p / g, q / g);
        let p = p.rem_euclid(q);
        let t = table(q as u32);
        let num = t.powers[p as usize].iter().map(|&c| BigInt::from(c)).collect();
        Ok(CycScalar {
            conductor: q as u32,
            num,
            den: BigInt::one(),
        })
    }

    /// Builds a scalar from power-basis coordinates; the length must equal `phi(conductor)`.
    pub fn from_coeffs(conductor: u32, coeffs: &[BigRational]) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::InvalidArgument("conductor must be positive".into()));
        }
        let phi = table(conductor).phi;
        if coeffs.len() != phi {
            return Err(Error::InvalidArgument(format!(
                "conductor {conductor} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut s = CycScalar {
            conductor,
            num,
            den,
        };
        s.normalize();
        Ok(s)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coordinates as rationals.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// Returns `Some(r)` when the scalar is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in self.num.iter_mut() {
                *c = -c.clone();
            }
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    /// Re-expresses the scalar in `Q(zeta_n)`; `n` must be a multiple of the conductor.
    pub fn lift(&self, n: u32) -> Self {
        if n == self.conductor {
            return self.clone();
        }
        assert!(
            n % self.conductor == 0,
            "cannot lift conductor {} to {n}",
            self.conductor
        );
        let t = table(n);
        let step = (n / self.conductor) as usize;
        let mut num = vec![BigInt::zero(); t.phi];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, &p) in t.powers[k * step].iter().enumerate() {
                if p != 0 {
                    num[j] += c * p;
                }
            }
        }
        CycScalar {
            conductor: n,
            num,
            den: self.den.clone(),
        }
        .normalized()
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.conductor == b.conductor {
            return (a.clone(), b.clone());
        }
        let n = (a.conductor as u64).lcm(&(b.conductor as u64)) as u32;
        (a.lift(n), b.lift(n))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(CycScalar {
                conductor: 1,
                num: vec![self.den.clone()],
                den: self.num[0].clone(),
            }
            .normalized());
        }
        // Solve (multiplication-by-self) * y = e_0 over Q.
        let t = table(self.conductor);
        let phi = t.phi;
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(phi);
        for k in 0..phi {
            let xk = CycScalar::root_of_unity(k as i64, self.conductor as i64)
                .unwrap()
                .lift(self.conductor);
            cols.push((self * &xk).coeffs());
        }
        let mut m: Vec<Vec<BigRational>> = (0..phi)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..phi).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(Error::DivisionByZero)?;
            m.swap(col, piv);
            let p = m[col][col].clone();
            for v in m[col].iter_mut() {
                *v = &*v / &p;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=phi {
                        let sub = &f * &m[col][c];
                        m[r][c] -= sub;
                    }
                }
            }
        }
        let coeffs: Vec<BigRational> = m.iter().map(|row| row[phi].clone()).collect();
        CycScalar::from_coeffs(self.conductor, &coeffs)
    }

    fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    /// Complex conjugation, `zeta_N -> zeta_N^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.conductor as usize;
        if n <= 2 {
            return self.clone();
        }
        let t = table(self.conductor);
        let mut num = vec![BigInt::zero(); t.phi];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (n - k) % n;
            for (j, &p) in t.powers[e].iter().enumerate() {
                if p != 0 {
                    num[j] += c * p;
                }
            }
        }
        CycScalar {
            conductor: self.conductor,
            num,
            den: self.den.clone(),
        }
        .normalized()
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycScalar::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// If the scalar is a root of unity, returns `(p, q)` in lowest terms with
    /// `0 <= p < q` such that the scalar equals `exp(2 pi i p / q)`.
    pub fn as_root_of_unity(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            return None;
        }
        let l = (self.conductor as i64).lcm(&2);
        (0..l).find_map(|k| {
            let z = CycScalar::root_of_unity(k, l).unwrap();
            if &z == self {
                let g = k.gcd(&l);
                Some((k / g, l / g))
            } else {
                None
            }
        })
    }

    /// Numerical value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let n = self.conductor as f64;
        self.num.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let a = 2.0 * std::f64::consts::PI * k as f64 / n;
            (re + c * a.cos(), im + c * a.sin())
        })
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = CycScalar::common(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycScalar {}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (a, b) = CycScalar::common(self, rhs);
        let num = if a.den == b.den {
            a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect()
        } else {
            a.num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| x * &b.den + y * &a.den)
                .collect()
        };
        let den = if a.den == b.den {
            a.den.clone()
        } else {
            &a.den * &b.den
        };
        CycScalar {
            conductor: a.conductor,
            num,
            den,
        }
        .normalized()
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self + &(-rhs)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        if self.is_zero() || rhs.is_zero() {
            return CycScalar::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.conductor == 1 || rhs.conductor == 1 {
            let (r, other) = if self.conductor == 1 {
                (self, rhs)
            } else {
                (rhs, self)
            };
            return CycScalar {
                conductor: other.conductor,
                num: other.num.iter().map(|c| c * &r.num[0]).collect(),
                den: &other.den * &r.den,
            }
            .normalized();
        }
        let (a, b) = CycScalar::common(self, rhs);
        let t = table(a.conductor);
        let phi = t.phi;
        let n = a.conductor as usize;
        let mut conv = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        let mut num = vec![BigInt::zero(); phi];
        for (k, c) in conv.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                num[k] += c;
                continue;
            }
            for (j, &p) in t.powers[k % n].iter().enumerate() {
                if p != 0 {
                    num[j] += c * p;
                }
            }
        }
        CycScalar {
            conductor: a.conductor,
            num,
            den: &a.den * &b.den,
        }
        .normalized()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &CycScalar) -> CycScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        *self = &*self + rhs;
    }
}

impl From<i64> for CycScalar {
    fn from(v: i64) -> Self {
        CycScalar::from_integer(v)
    }
}

fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match ScalarRepr::from(self) {
            ScalarRepr::Phase(s) => write!(f, "{s}"),
            ScalarRepr::Coeffs { conductor, coeffs } => {
                write!(f, "cyc({conductor}; {})", coeffs.join(", "))
            }
        }
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized form: a phase string `"p/q"` for roots of unity, otherwise the
/// explicit power-basis coordinates.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum ScalarRepr {
    Phase(String),
    Coeffs { conductor: u32, coeffs: Vec<String> },
}

impl From<&CycScalar> for ScalarRepr {
    fn from(s: &CycScalar) -> Self {
        match s.as_root_of_unity() {
            Some((p, q)) => ScalarRepr::Phase(format!("{p}/{q}")),
            None => ScalarRepr::Coeffs {
                conductor: s.conductor,
                coeffs: s.coeffs().iter().map(rational_string).collect(),
            },
        }
    }
}

impl TryFrom<&ScalarRepr> for CycScalar {
    type Error = Error;
    fn try_from(r: &ScalarRepr) -> Result<Self> {
        match r {
            ScalarRepr::Phase(s) => Ok(Phase::from_str(s)?.to_scalar()),
            ScalarRepr::Coeffs { conductor, coeffs } => {
                let cs = coeffs
                    .iter()
                    .map(|c| parse_rational(c))
                    .collect::<Result<Vec<_>>>()?;
                CycScalar::from_coeffs(*conductor, &cs)
            }
        }
    }
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr::from(self).serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(de)?;
        CycScalar::try_from(&r).map_err(serde::de::Error::custom)
    }
}

/// A rational number modulo 1, read as the root of unity `exp(2 pi i p/q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(Ratio<i64>);

impl Phase {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q <= 0 {
            return Err(Error::InvalidArgument(format!(
                "phase denominator must be positive, got {q}"
            )));
        }
        Ok(Phase::reduce(Ratio::new(p, q)))
    }

    pub fn zero() -> Self {
        Phase(Ratio::from_integer(0))
    }

    fn reduce(r: Ratio<i64>) -> Self {
        let q = *r.denom();
        let p = r.numer().rem_euclid(q);
        Phase(Ratio::new(p, q))
    }

    pub fn value(&self) -> Ratio<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn times(&self, n: i64) -> Self {
        Phase::reduce(self.0 * n)
    }

    pub fn to_scalar(&self) -> CycScalar {
        CycScalar::root_of_unity(*self.0.numer(), *self.0.denom()).expect("positive denominator")
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        Phase::reduce(self.0 + rhs.0)
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        Phase::reduce(self.0 - rhs.0)
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::reduce(-self.0)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Phase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad phase {s:?}, expected \"p/q\""));
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (
                p.trim().parse::<i64>().map_err(|_| bad())?,
                q.trim().parse::<i64>().map_err(|_| bad())?,
            ),
            None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
        };
        if q <= 0 {
            return Err(bad());
        }
        Phase::new(p, q)
    }
}

impl Serialize for Phase {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Phase {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        Phase::from_str(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(p: i64, q: i64) -> CycScalar {
        CycScalar::root_of_unity(p, q).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn identity_root() {
        assert!(z(0, 1).is_one());
        assert_eq!(z(7, 7), CycScalar::one());
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let i = z(1, 4);
        assert_eq!(&i * &i, CycScalar::from_integer(-1));
    }

    #[test]
    fn fifth_root_identities() {
        let zeta = z(1, 5);
        let mut acc = CycScalar::one();
        let mut sum = CycScalar::zero();
        for _ in 0..5 {
            sum += &acc;
            acc = &acc * &zeta;
        }
        assert!(acc.is_one());
        assert!(sum.is_zero());
    }

    #[test]
    fn third_roots_sum() {
        assert_eq!(&z(1, 3) + &z(2, 3), CycScalar::from_integer(-1));
    }

    #[test]
    fn conductor_normalization() {
        assert_eq!(z(2, 6), z(1, 3));
        assert_eq!(z(1, 6).lift(6) * z(1, 6), z(1, 3));
        assert_eq!(z(3, 12), z(1, 4));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(CycScalar::zero().inv(), Err(Error::DivisionByZero));
        assert!(CycScalar::root_of_unity(1, 0).is_err());
    }

    #[test]
    fn golden_ratio_inverse() {
        // phi = 1 + zeta_5 + zeta_5^4 satisfies phi^2 = phi + 1
        let phi = &(&CycScalar::one() + &z(1, 5)) + &z(4, 5);
        assert_eq!(&phi * &phi, &phi + &CycScalar::one());
        let inv = phi.inv().unwrap();
        assert_eq!(inv, &phi - &CycScalar::one());
    }

    #[test]
    fn root_detection_round_trip() {
        for q in 1..13 {
            for p in 0..q {
                let s = z(p, q);
                let (a, b) = s.as_root_of_unity().unwrap();
                assert_eq!(z(a, b), s);
            }
        }
        assert_eq!(z(1, 5).as_root_of_unity(), Some((1, 5)));
        assert_eq!((-z(1, 5)).as_root_of_unity(), Some((7, 10)));
        assert!(CycScalar::from_integer(2).as_root_of_unity().is_none());
    }

    #[test]
    fn serde_forms() {
        let s = z(3, 10);
        assert_eq!(serde_json::to_string(&s).unwrap(), "\"3/10\"");
        let phi = &(&CycScalar::one() + &z(1, 5)) + &z(4, 5);
        let js = serde_json::to_string(&phi).unwrap();
        let back: CycScalar = serde_json::from_str(&js).unwrap();
        assert_eq!(back, phi);
        assert_eq!(serde_json::to_string(&back).unwrap(), js);
    }

    #[test]
    fn phase_arithmetic() {
        let a = Phase::new(3, 4).unwrap();
        let b = Phase::new(1, 2).unwrap();
        assert_eq!(a + b, Phase::new(1, 4).unwrap());
        assert_eq!(-a, Phase::new(1, 4).unwrap());
        assert_eq!((a + b).to_scalar(), &a.to_scalar() * &b.to_scalar());
        assert_eq!("-1/3".parse::<Phase>().unwrap(), Phase::new(2, 3).unwrap());
    }
}
