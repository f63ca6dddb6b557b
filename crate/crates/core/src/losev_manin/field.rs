//! Exact arithmetic in `Q(ζ_m) = Q[x]/Φ_m(x)` and in rational functions over it.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense polynomial over `Q`, lowest degree first, no trailing zeros.
pub type QPoly = Vec<BigRational>;

fn q_trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn q_mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    q_trim(&mut out);
    out
}

fn q_sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut out: QPoly = (0..a.len().max(b.len()))
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    q_trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
fn q_divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: QPoly = a.to_vec();
    q_trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") / lb;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &c * y;
        }
        q[shift] = c;
        q_trim(&mut r);
    }
    q_trim(&mut q);
    (q, r)
}

fn q_monic(mut p: QPoly) -> QPoly {
    if let Some(l) = p.last().cloned() {
        for c in &mut p {
            *c /= &l;
        }
    }
    p
}

fn q_gcd(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    q_trim(&mut x);
    q_trim(&mut y);
    while !y.is_empty() {
        let (_, r) = q_divrem(&x, &y);
        x = y;
        y = r;
    }
    q_monic(x)
}

fn q_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// `Φ_m` with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> QPoly {
    let mut p: QPoly = vec![BigRational::zero(); m as usize + 1];
    p[0] = -BigRational::one();
    p[m as usize] = BigRational::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = q_divrem(&p, &cyclotomic_polynomial(d)).0;
        }
    }
    p
}

#[derive(Debug, PartialEq, Eq)]
struct FieldData {
    m: u32,
    modulus: QPoly,
}

/// The field `Q(ζ_m)`; cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField(Arc<FieldData>);

impl CyclotomicField {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 || m > 1000 {
            return Err(Error::Parse(format!("cyclotomic order {m} out of range")));
        }
        Ok(CyclotomicField(Arc::new(FieldData {
            m,
            modulus: cyclotomic_polynomial(m),
        })))
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    /// `φ(m)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    pub fn zero(&self) -> Cyc {
        Cyc {
            field: self.clone(),
            c: Vec::new(),
        }
    }

    pub fn one(&self) -> Cyc {
        self.rational(BigRational::one())
    }

    pub fn rational(&self, q: BigRational) -> Cyc {
        self.from_power_basis(vec![q])
    }

    pub fn integer(&self, k: i64) -> Cyc {
        self.rational(BigRational::from_integer(k.into()))
    }

    /// `ζ^j` for any integer `j`.
    pub fn zeta_pow(&self, j: i64) -> Cyc {
        let e = j.rem_euclid(self.m() as i64) as usize;
        let mut v = vec![BigRational::zero(); e + 1];
        v[e] = BigRational::one();
        self.from_power_basis(v)
    }

    /// `Σ c_j ζ^j`, reduced modulo `Φ_m`; any length is accepted.
    pub fn from_power_basis(&self, mut c: QPoly) -> Cyc {
        q_trim(&mut c);
        let (_, r) = q_divrem(&c, &self.0.modulus);
        Cyc { field: self.clone(), c: r }
    }
}

/// An element of `Q(ζ_m)` in the power basis `1, ζ, …, ζ^{φ(m)-1}`.
#[derive(Clone)]
pub struct Cyc {
    field: CyclotomicField,
    c: QPoly,
}

impl Cyc {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Power-basis coefficients, trailing zeros removed.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.c
    }

    /// The coefficient of `ζ^j` for `j < φ(m)`.
    pub fn coefficient(&self, j: usize) -> BigRational {
        self.c.get(j).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.c.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.c[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, o: &Cyc) -> Cyc {
        let mut c = q_sub(&self.c, &o.c.iter().map(|x| -x).collect::<Vec<_>>());
        q_trim(&mut c);
        Cyc { field: self.field.clone(), c }
    }

    pub fn sub(&self, o: &Cyc) -> Cyc {
        Cyc {
            field: self.field.clone(),
            c: q_sub(&self.c, &o.c),
        }
    }

    pub fn neg(&self) -> Cyc {
        Cyc {
            field: self.field.clone(),
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, o: &Cyc) -> Cyc {
        self.field.from_power_basis(q_mul(&self.c, &o.c))
    }

    pub fn pow(&self, e: u32) -> Cyc {
        (0..e).fold(self.field.one(), |acc, _| acc.mul(self))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Cyc {
        assert!(!self.is_zero(), "inverse of zero in a cyclotomic field");
        // Extended Euclid: s·a + t·Φ = 1.
        let (mut r0, mut r1) = (self.field.0.modulus.clone(), self.c.clone());
        let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = q_divrem(&r0, &r1);
            let s2 = q_sub(&s0, &q_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let g = r0[0].clone();
        let s: QPoly = s0.into_iter().map(|x| x / &g).collect();
        self.field.from_power_basis(s)
    }

    pub fn div(&self, o: &Cyc) -> Cyc {
        self.mul(&o.inv())
    }
}

impl PartialEq for Cyc {
    fn eq(&self, o: &Self) -> bool {
        self.field.m() == o.field.m() && self.c == o.c
    }
}

impl Eq for Cyc {}

impl PartialOrd for Cyc {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Lexicographic on power-basis coefficients; only for deterministic ordering.
impl Ord for Cyc {
    fn cmp(&self, o: &Self) -> Ordering {
        let n = self.c.len().max(o.c.len());
        (0..n)
            .map(|j| self.coefficient(j).cmp(&o.coefficient(j)))
            .find(|c| c.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl std::hash::Hash for Cyc {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.c.hash(h);
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let (sign, mag) = if q.is_negative() { ("-", -q) } else { ("+", q.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = mag.is_one();
            match j {
                0 => write!(f, "{mag}")?,
                _ if unit => {}
                _ => write!(f, "{mag}*")?,
            }
            match j {
                0 => {}
                1 => f.write_str("ζ")?,
                _ => write!(f, "ζ^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Polynomial in `z` over `Q(ζ_m)`, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    field: CyclotomicField,
    c: Vec<Cyc>,
}

impl Poly {
    pub fn new(field: &CyclotomicField, mut c: Vec<Cyc>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { field: field.clone(), c }
    }

    pub fn zero(field: &CyclotomicField) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn constant(c: Cyc) -> Poly {
        let f = c.field.clone();
        Poly::new(&f, vec![c])
    }

    /// `c · z^e`.
    pub fn monomial(c: Cyc, e: usize) -> Poly {
        let f = c.field.clone();
        let mut v = vec![f.zero(); e];
        v.push(c);
        Poly::new(&f, v)
    }

    pub fn coefficients(&self) -> &[Cyc] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Cyc> {
        self.c.last()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let z = self.field.zero();
        let v = (0..n)
            .map(|i| self.c.get(i).unwrap_or(&z).add(o.c.get(i).unwrap_or(&z)))
            .collect();
        Poly::new(&self.field, v)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&self.field.integer(-1)))
    }

    pub fn scale(&self, k: &Cyc) -> Poly {
        Poly::new(&self.field, self.c.iter().map(|x| x.mul(k)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut v = vec![self.field.zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                v[i + j] = v[i + j].add(&x.mul(y));
            }
        }
        Poly::new(&self.field, v)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(&self, b: &Poly) -> (Poly, Poly) {
        let db = b.degree().expect("division by the zero polynomial");
        let inv = b.c[db].inv();
        let mut r = self.c.clone();
        if r.len() <= db {
            return (Poly::zero(&self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - db];
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let c = r.last().expect("nonempty").mul(&inv);
            for (j, y) in b.c.iter().enumerate() {
                r[shift + j] = r[shift + j].sub(&c.mul(y));
            }
            q[shift] = c;
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (Poly::new(&self.field, q), Poly::new(&self.field, r))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&l.inv()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut x = self.clone();
        let mut y = o.clone();
        while !y.is_zero() {
            let r = x.divrem(&y).1;
            x = y;
            y = r;
        }
        x.monic()
    }

    pub fn eval(&self, z: &Cyc) -> Cyc {
        self.c.iter().rev().fold(self.field.zero(), |acc, c| acc.mul(z).add(c))
    }

    /// `(p(z), k)` with `self = (z - s)^k · p(z)` and `p(s) ≠ 0`.
    pub fn split_root(&self, s: &Cyc) -> (Poly, usize) {
        let lin = Poly::new(&self.field, vec![s.neg(), self.field.one()]);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, r) = p.divrem(&lin);
            if !r.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        (p, k)
    }

    /// All roots (with multiplicity) of the form `r·ζ^j` with `r ∈ Q`.
    /// Any factor left over raises `UnsupportedFieldExtension`.
    pub fn linear_roots(&self) -> Result<Vec<(Cyc, usize)>> {
        let field = &self.field;
        let mut out: Vec<(Cyc, usize)> = Vec::new();
        if self.is_zero() {
            return Err(Error::DegenerateFamily("zero polynomial has no finite root set".into()));
        }
        let (mut rest, k0) = self.split_root(&field.zero());
        if k0 > 0 {
            out.push((field.zero(), k0));
        }
        for j in 0..field.m() as i64 {
            if rest.degree() == Some(0) {
                break;
            }
            let zj = field.zeta_pow(j);
            // q(w) = rest(ζ^j w); its rational roots are common roots of the
            // power-basis components.
            let mut zk = field.one();
            let mut q_coeffs = Vec::with_capacity(rest.c.len());
            for c in &rest.c {
                q_coeffs.push(c.mul(&zk));
                zk = zk.mul(&zj);
            }
            let mut g: QPoly = Vec::new();
            for b in 0..field.degree() {
                let comp: QPoly = q_coeffs.iter().map(|c| c.coefficient(b)).collect();
                g = q_gcd(&g, &comp);
            }
            for r in rational_roots(&g)? {
                let root = zj.mul(&field.rational(r));
                let (p, k) = rest.split_root(&root);
                if k > 0 {
                    out.push((root, k));
                    rest = p;
                }
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            return Err(Error::UnsupportedFieldExtension(format!(
                "a factor of degree {} has roots outside the form r·ζ^j",
                rest.degree().unwrap_or(0)
            )));
        }
        out.sort();
        Ok(out)
    }
}

const ROOT_SEARCH_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let v = n
        .abs()
        .to_u64()
        .filter(|&v| v <= ROOT_SEARCH_LIMIT)
        .ok_or_else(|| Error::UnsupportedFieldExtension(format!("coefficient {n} too large for a rational root search")))?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Ok(out)
}

/// Distinct nonzero rational roots of a polynomial over `Q`.
fn rational_roots(p: &[BigRational]) -> Result<Vec<BigRational>> {
    let mut p: QPoly = p.to_vec();
    q_trim(&mut p);
    while p.first().is_some_and(|c| c.is_zero()) {
        p.remove(0);
    }
    if p.len() < 2 {
        return Ok(Vec::new());
    }
    let den = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    let lead = ints.last().expect("nonempty");
    let mut roots = Vec::new();
    for a in divisors(&ints[0])? {
        for b in divisors(lead)? {
            for s in [a.clone(), -a.clone()] {
                let r = BigRational::new(s, b.clone());
                if !roots.contains(&r) && q_eval(&p, &r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// A point of `P^1` over `Q(ζ_m)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ZPoint {
    Finite(Cyc),
    Infinity,
}

impl fmt::Display for ZPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZPoint::Finite(c) => write!(f, "{c}"),
            ZPoint::Infinity => f.write_str("∞"),
        }
    }
}

/// An element of `Q(ζ_m)(z)`: reduced, with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicRational {
    num: Poly,
    den: Poly,
}

impl CyclotomicRational {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DegenerateFamily("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(CyclotomicRational {
                den: Poly::constant(num.field.one()),
                num,
            });
        }
        let g = num.gcd(&den);
        let num = num.divrem(&g).0;
        let den = den.divrem(&g).0;
        let l = den.leading().expect("nonzero").inv();
        Ok(CyclotomicRational {
            num: num.scale(&l),
            den: den.scale(&l),
        })
    }

    pub fn constant(c: Cyc) -> Self {
        let f = c.field.clone();
        CyclotomicRational {
            num: Poly::constant(c),
            den: Poly::constant(f.one()),
        }
    }

    /// `c · z^e` for any integer `e`.
    pub fn monomial(c: Cyc, e: i64) -> Self {
        let one = c.field.one();
        let (num, den) = if e >= 0 {
            (Poly::monomial(c, e as usize), Poly::constant(one))
        } else {
            (Poly::constant(c), Poly::monomial(one, e.unsigned_abs() as usize))
        };
        CyclotomicRational::new(num, den).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.num.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    /// Degree as a map `P^1 → P^1`.
    pub fn map_degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let num = self.num.mul(&o.den).sub(&o.num.mul(&self.den));
        CyclotomicRational::new(num, self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DegenerateFamily("division by an identically zero coordinate".into()));
        }
        CyclotomicRational::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    /// `(ord_p, leading coefficient)` in the local parameter `z - p`, or
    /// `1/z` at infinity. The function must be nonzero.
    pub fn order_at(&self, p: &ZPoint) -> (i64, Cyc) {
        match p {
            ZPoint::Finite(s) => {
                let (qn, a) = self.num.split_root(s);
                let (qd, b) = self.den.split_root(s);
                (a as i64 - b as i64, qn.eval(s).div(&qd.eval(s)))
            }
            ZPoint::Infinity => {
                let dn = self.num.degree().expect("nonzero function") as i64;
                let dd = self.den.degree().expect("nonzero denominator") as i64;
                (dd - dn, self.num.leading().expect("nonzero").div(self.den.leading().expect("nonzero")))
            }
        }
    }

    /// Finite zeros and poles, without multiplicity.
    pub fn special_values(&self) -> Result<Vec<Cyc>> {
        let mut out: Vec<Cyc> = self
            .num
            .linear_roots()?
            .into_iter()
            .chain(self.den.linear_roots()?)
            .map(|(r, _)| r)
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn eval(&self, z: &Cyc) -> Option<Cyc> {
        let d = self.den.eval(z);
        (!d.is_zero()).then(|| self.num.eval(z).div(&d))
    }
}

impl fmt::Display for CyclotomicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Poly| -> String {
            if p.is_zero() {
                return "0".into();
            }
            let terms: Vec<String> = p
                .c
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| match i {
                    0 => format!("({c})"),
                    1 => format!("({c})z"),
                    _ => format!("({c})z^{i}"),
                })
                .collect();
            terms.join(" + ")
        };
        if self.den.degree() == Some(0) && self.den.c[0] == self.den.field.one() {
            write!(f, "{}", show(&self.num))
        } else {
            write!(f, "[{}] / [{}]", show(&self.num), show(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn cyclotomic_polynomials() {
        let ints = |m| -> Vec<i64> {
            cyclotomic_polynomial(m).iter().map(|c| c.to_integer().try_into().unwrap()).collect()
        };
        assert_eq!(ints(1), vec![-1, 1]);
        assert_eq!(ints(3), vec![1, 1, 1]);
        assert_eq!(ints(4), vec![1, 0, 1]);
        assert_eq!(ints(6), vec![1, -1, 1]);
        assert_eq!(ints(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn field_identities() {
        let f = CyclotomicField::new(3).unwrap();
        let w = f.zeta_pow(1);
        assert_eq!(w.pow(3), f.one());
        assert_eq!(f.one().add(&w).add(&w.pow(2)), f.zero());
        let alpha = f.one().sub(&w.pow(2)).div(&f.one().sub(&w));
        assert_eq!(alpha, w.pow(2).neg());
        let x = f.from_power_basis(vec![q(2, 3), q(-5, 7)]);
        assert_eq!(x.mul(&x.inv()), f.one());
        assert_eq!(f.zeta_pow(-1), w.pow(2));
    }

    #[test]
    fn roots_and_orders() {
        let f = CyclotomicField::new(3).unwrap();
        let w = f.zeta_pow(1);
        // (z - ω)(z + 2)^2 z
        let lin = |r: Cyc| Poly::new(&f, vec![r.neg(), f.one()]);
        let p = lin(w.clone()).mul(&lin(f.integer(-2))).mul(&lin(f.integer(-2))).mul(&lin(f.zero()));
        let roots = p.linear_roots().unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&(f.integer(-2), 2)));
        assert!(roots.contains(&(w.clone(), 1)));
        // z^2 - 2 has no roots of the supported form.
        let p2 = Poly::new(&f, vec![f.integer(-2), f.zero(), f.one()]);
        assert!(matches!(p2.linear_roots(), Err(Error::UnsupportedFieldExtension(_))));

        let x = CyclotomicRational::new(lin(w.clone()), lin(w.pow(2))).unwrap();
        assert_eq!(x.order_at(&ZPoint::Finite(w.clone())).0, 1);
        assert_eq!(x.order_at(&ZPoint::Finite(w.pow(2))).0, -1);
        assert_eq!(x.order_at(&ZPoint::Infinity), (0, f.one()));
        let (k, c) = x.order_at(&ZPoint::Finite(f.one()));
        assert_eq!(k, 0);
        assert_eq!(c, f.one().sub(&w).div(&f.one().sub(&w.pow(2))));
    }

    #[test]
    fn reduction() {
        let f = CyclotomicField::new(4).unwrap();
        let i = f.zeta_pow(1);
        let lin = |r: Cyc| Poly::new(&f, vec![r.neg(), f.one()]);
        let num = lin(i.clone()).mul(&lin(f.one()));
        let den = lin(i.clone()).scale(&f.integer(3));
        let x = CyclotomicRational::new(num, den).unwrap();
        assert_eq!(x.numerator().degree(), Some(1));
        assert_eq!(x.denominator().degree(), Some(0));
        assert_eq!(x.eval(&f.integer(4)), Some(f.integer(1)));
        assert_eq!(CyclotomicRational::monomial(i.clone(), -2).order_at(&ZPoint::Finite(f.zero())), (-2, i));
    }
}
