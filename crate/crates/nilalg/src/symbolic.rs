//! Sparse multivariate polynomials and rational functions over [`Scalar`].
//!
//! The indeterminate universe is fixed: the nine basis-change entries
//! g11..g33, the Rabinowitsch variables y and z, the adjoined-i variable w,
//! the element coordinates x1..x3, the deformation parameter t, the
//! composition parameter u and the family parameter alpha. Term order is
//! graded reverse lexicographic over that fixed order.

use crate::scalar::{Scalar, ScalarError};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub const NVARS: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    G11,
    G12,
    G13,
    G21,
    G22,
    G23,
    G31,
    G32,
    G33,
    Y,
    Z,
    W,
    X1,
    X2,
    X3,
    T,
    U,
    Alpha,
}

pub const ALL_VARS: [Var; NVARS] = [
    Var::G11,
    Var::G12,
    Var::G13,
    Var::G21,
    Var::G22,
    Var::G23,
    Var::G31,
    Var::G32,
    Var::G33,
    Var::Y,
    Var::Z,
    Var::W,
    Var::X1,
    Var::X2,
    Var::X3,
    Var::T,
    Var::U,
    Var::Alpha,
];

impl Var {
    pub fn index(self) -> usize {
        ALL_VARS.iter().position(|v| *v == self).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::G11 => "g11",
            Var::G12 => "g12",
            Var::G13 => "g13",
            Var::G21 => "g21",
            Var::G22 => "g22",
            Var::G23 => "g23",
            Var::G31 => "g31",
            Var::G32 => "g32",
            Var::G33 => "g33",
            Var::Y => "y",
            Var::Z => "z",
            Var::W => "w",
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::X3 => "x3",
            Var::T => "t",
            Var::U => "u",
            Var::Alpha => "alpha",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        ALL_VARS.iter().copied().find(|v| v.name() == s)
    }

    /// The three generic element coordinates.
    pub fn coords() -> [Var; 3] {
        [Var::X1, Var::X2, Var::X3]
    }

    /// The nine basis-change entries, row-major.
    pub fn g_entries() -> [[Var; 3]; 3] {
        [
            [Var::G11, Var::G12, Var::G13],
            [Var::G21, Var::G22, Var::G23],
            [Var::G31, Var::G32, Var::G33],
        ]
    }
}

/// Exponent vector over the fixed universe; graded reverse lexicographic Ord.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var) -> Monomial {
        let mut m = [0u16; NVARS];
        m[v.index()] = 1;
        Monomial(m)
    }

    pub fn var_pow(v: Var, e: u16) -> Monomial {
        let mut m = [0u16; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = [0u16; NVARS];
        for k in 0..NVARS {
            m[k] = self.0[k] + o.0[k];
        }
        Monomial(m)
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut m = [0u16; NVARS];
        for k in 0..NVARS {
            if self.0[k] < o.0[k] {
                return None;
            }
            m[k] = self.0[k] - o.0[k];
        }
        Some(Monomial(m))
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut m = [0u16; NVARS];
        for k in 0..NVARS {
            m[k] = self.0[k].max(o.0[k]);
        }
        Monomial(m)
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut m = [0u16; NVARS];
        for k in 0..NVARS {
            m[k] = self.0[k].min(o.0[k]);
        }
        Monomial(m)
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.index()]
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // grevlex: larger = the one whose last nonzero difference is negative
        for k in (0..NVARS).rev() {
            if self.0[k] != other.0[k] {
                return other.0[k].cmp(&self.0[k]);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: map from monomial to nonzero Scalar coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn var(v: Var) -> Polynomial {
        Polynomial::from_term(Monomial::var(v), Scalar::one())
    }

    pub fn from_term(m: Monomial, c: Scalar) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_int(n: i64) -> Polynomial {
        Polynomial::constant(Scalar::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<Var> {
        ALL_VARS
            .iter()
            .copied()
            .filter(|v| self.degree_in(*v) > 0)
            .collect()
    }

    /// Leading term under grevlex (largest monomial).
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.insert_add(*m, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.insert_add(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            out.insert_add(m1.mul(m), c1.mul(c));
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitute polynomials for variables; identity for unnamed ones.
    pub fn substitute(&self, map: &[(Var, Polynomial)]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            let mut residual = *m;
            for (v, p) in map {
                let e = m.exponent(*v);
                if e > 0 {
                    term = term.mul(&p.pow(e as u32));
                    residual.0[v.index()] = 0;
                }
            }
            out = out.add(&term.mul_term(&residual, &Scalar::one()));
        }
        out
    }

    /// Evaluate a variable at a scalar.
    pub fn eval_var(&self, v: Var, value: &Scalar) -> Polynomial {
        self.substitute(&[(v, Polynomial::constant(value.clone()))])
    }

    /// Full evaluation when every support variable is assigned.
    pub fn eval_all(&self, assign: &[(Var, Scalar)]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for k in 0..NVARS {
                let e = m.0[k];
                if e > 0 {
                    let var = ALL_VARS[k];
                    let val = assign
                        .iter()
                        .find(|(v, _)| *v == var)
                        .map(|(_, s)| s.clone())
                        .unwrap_or_else(Scalar::zero);
                    for _ in 0..e {
                        term = term.mul(&val);
                    }
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Coefficient of v^k, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: u16) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                let mut m2 = *m;
                m2.0[v.index()] = 0;
                out.insert_add(m2, c.clone());
            }
        }
        out
    }

    /// True if every coefficient is a plain rational.
    pub fn has_rational_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_rational())
    }

    /// Divide every coefficient by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some((_, lc)) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Exact division; None when the division leaves a remainder.
    pub fn try_div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quo = Polynomial::zero();
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (*m, c.clone())
        };
        let dcinv = dc.inv().ok()?;
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (*m, c.clone())
            };
            let qm = rm.div(&dm)?;
            let qc = rc.mul(&dcinv);
            quo.insert_add(qm, qc.clone());
            rem = rem.sub(&d.mul_term(&qm, &qc));
        }
        Some(quo)
    }
}

// --- multivariate gcd (recursive content / primitive part) -------------------

/// Treat p as univariate in `v`: dense coefficient list, ascending degree.
fn coeffs_in(p: &Polynomial, v: Var) -> Vec<Polynomial> {
    let d = p.degree_in(v);
    (0..=d).map(|k| p.coeff_of(v, k)).collect()
}

fn from_coeffs(coeffs: &[Polynomial], v: Var) -> Polynomial {
    let mut out = Polynomial::zero();
    for (k, c) in coeffs.iter().enumerate() {
        out = out.add(&c.mul_term(&Monomial::var_pow(v, k as u16), &Scalar::one()));
    }
    out
}

/// gcd of the content coefficients (recursive).
fn content(p: &Polynomial, v: Var) -> Polynomial {
    let cs = coeffs_in(p, v);
    let mut g = Polynomial::zero();
    for c in cs {
        if !c.is_zero() {
            g = poly_gcd(&g, &c);
        }
    }
    g
}

/// Pseudo-remainder of a by b in the main variable v.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: Var) -> Polynomial {
    let db = b.degree_in(v);
    let lb = b.coeff_of(v, db);
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(v);
        if dr < db {
            break;
        }
        let lr = r.coeff_of(v, dr);
        // lb * r - lr * x^(dr-db) * b
        let shift = Monomial::var_pow(v, dr - db);
        r = r
            .mul(&lb)
            .sub(&b.mul(&lr).mul_term(&shift, &Scalar::one()));
    }
    r
}

/// GCD of two polynomials over the scalar field, normalized monic in grevlex.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    // Choose the last variable (in universe order) appearing in either.
    let v = *a
        .support_vars()
        .iter()
        .chain(b.support_vars().iter())
        .max_by_key(|v| v.index())
        .unwrap();
    if a.degree_in(v) == 0 || b.degree_in(v) == 0 {
        // v appears in only one: gcd divides the other's content wrt v.
        let (with_v, without) = if a.degree_in(v) > 0 { (a, b) } else { (b, a) };
        return poly_gcd(&content(with_v, v), without);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let cg = poly_gcd(&ca, &cb);
    let pa = a.try_div_exact(&ca).expect("content divides");
    let pb = b.try_div_exact(&cb).expect("content divides");
    // Primitive PRS.
    let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        let rc = content(&r, v);
        let rp = r.try_div_exact(&rc).expect("content divides");
        f = g;
        g = rp;
        if g.degree_in(v) == 0 {
            return cg.monic();
        }
    }
    let gc = content(&g, v);
    let gp = g.try_div_exact(&gc).expect("content divides");
    cg.mul(&gp).monic()
}

// --- rational functions --------------------------------------------------------

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum RfError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at {0} = 0 after reduction")]
    PoleAtZero(&'static str),
    #[error("value is not a polynomial")]
    NotPolynomial,
    #[error("value is not a scalar constant")]
    NotScalar,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Reduced fraction of polynomials; denominator monic, gcd(num, den) = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalFunction, RfError> {
        if den.is_zero() {
            return Err(RfError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial, den: Polynomial) -> RationalFunction {
        if num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = poly_gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (
                num.try_div_exact(&g).expect("gcd divides num"),
                den.try_div_exact(&g).expect("gcd divides den"),
            )
        };
        // Normalize: denominator monic.
        let lc = d.leading().expect("den nonzero").1.clone();
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero");
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RationalFunction { num: n, den: d }
    }

    pub fn zero() -> RationalFunction {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> RationalFunction {
        RationalFunction {
            num: Polynomial::one(),
            den: Polynomial::one(),
        }
    }

    pub fn from_poly(p: Polynomial) -> RationalFunction {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn from_scalar(s: Scalar) -> RationalFunction {
        Self::from_poly(Polynomial::constant(s))
    }

    pub fn from_int(n: i64) -> RationalFunction {
        Self::from_scalar(Scalar::from_int(n))
    }

    pub fn var(v: Var) -> RationalFunction {
        Self::from_poly(Polynomial::var(v))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn as_polynomial(&self) -> Option<Polynomial> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            // A constant denominator still yields a polynomial.
            self.den.as_constant().map(|c| {
                let inv = c.inv().expect("den nonzero");
                self.num.scale(&inv)
            })
        }
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        self.as_polynomial().and_then(|p| p.as_constant())
    }

    pub fn add(&self, o: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        let den = self.den.mul(&o.den);
        Self::reduced(num, den)
    }

    pub fn sub(&self, o: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&o.den).sub(&o.num.mul(&self.den));
        let den = self.den.mul(&o.den);
        Self::reduced(num, den)
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        Self::reduced(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &RationalFunction) -> Result<RationalFunction, RfError> {
        if o.is_zero() {
            return Err(RfError::ZeroDenominator);
        }
        Ok(Self::reduced(
            self.num.mul(&o.den),
            self.den.mul(&o.num),
        ))
    }

    pub fn inv(&self) -> Result<RationalFunction, RfError> {
        RationalFunction::one().div(self)
    }

    pub fn scale(&self, s: &Scalar) -> RationalFunction {
        Self::reduced(self.num.scale(s), self.den.clone())
    }

    /// Substitute rational functions for variables.
    pub fn substitute_rf(&self, map: &[(Var, RationalFunction)]) -> RationalFunction {
        let sub_poly = |p: &Polynomial| -> RationalFunction {
            let mut out = RationalFunction::zero();
            for (m, c) in p.terms() {
                let mut term = RationalFunction::from_scalar(c.clone());
                let mut residual = *m;
                for (v, rf) in map {
                    let e = m.exponent(*v);
                    if e > 0 {
                        let mut pw = RationalFunction::one();
                        for _ in 0..e {
                            pw = pw.mul(rf);
                        }
                        term = term.mul(&pw);
                        residual.0[v.index()] = 0;
                    }
                }
                term = term.mul(&RationalFunction::from_poly(Polynomial::from_term(
                    residual,
                    Scalar::one(),
                )));
                out = out.add(&term);
            }
            out
        };
        let n = sub_poly(&self.num);
        let d = sub_poly(&self.den);
        n.div(&d).expect("substituted denominator is nonzero")
    }

    /// Value at `v` = 0: polynomial part in the remaining variables, or a
    /// pole error when the reduced denominator vanishes at v = 0.
    pub fn eval_at_zero(&self, v: Var) -> Result<RationalFunction, RfError> {
        let den0 = self.den.eval_var(v, &Scalar::zero());
        if den0.is_zero() {
            return Err(RfError::PoleAtZero(v.name()));
        }
        let num0 = self.num.eval_var(v, &Scalar::zero());
        Ok(Self::reduced(num0, den0))
    }

    /// Evaluate one variable at a scalar value (must not hit a pole).
    pub fn eval_var(&self, v: Var, value: &Scalar) -> Result<RationalFunction, RfError> {
        let den = self.den.eval_var(v, value);
        if den.is_zero() {
            return Err(RfError::PoleAtZero(v.name()));
        }
        let num = self.num.eval_var(v, value);
        Ok(Self::reduced(num, den))
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.num.degree_in(v).max(self.den.degree_in(v))
    }

    pub fn support_vars(&self) -> Vec<Var> {
        let mut vs = self.num.support_vars();
        for v in self.den.support_vars() {
            if !vs.contains(&v) {
                vs.push(v);
            }
        }
        vs
    }
}

// --- display -----------------------------------------------------------------

fn format_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (k, &e) in m.0.iter().enumerate() {
        if e == 1 {
            parts.push(ALL_VARS[k].name().to_string());
        } else if e > 1 {
            parts.push(format!("{}^{}", ALL_VARS[k].name(), e));
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        // Descending grevlex order for readability.
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let cs = c.to_string();
            let ms = format_monomial(m);
            let (neg, body) = if let Some(stripped) = cs.strip_prefix('-') {
                // only a leading minus: safe to factor out when no inner +/-
                if stripped.contains(" + ") || stripped.contains(" - ") {
                    (false, format!("({cs})"))
                } else {
                    (true, stripped.to_string())
                }
            } else if cs.contains(" + ") || cs.contains(" - ") {
                (false, format!("({cs})"))
            } else {
                (false, cs)
            };
            let term = if ms.is_empty() {
                body
            } else if body == "1" {
                ms
            } else {
                format!("{body}*{ms}")
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        write!(f, "{out}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
