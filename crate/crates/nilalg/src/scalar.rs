//! Exact scalars in a tower Q ⊂ Q(i) ⊂ Q(i)(√d₁) ⊂ Q(i)(√d₁)(√d₂).
//!
//! A [`Scalar`] is stored as exact rational coordinates over the basis
//! {1, i} × {1, r1} × {1, r2}, where `r1`, `r2` are the adjoined square
//! roots of the tower's radicands. Equality is canonical: two scalars in
//! the same tower are equal iff their coordinate vectors are equal.
//! Adjoining the root of an element that is already a square leaves the
//! tower unchanged and returns the root inside the current field.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Default cap on the number of square-root extensions above Q(i).
pub const DEFAULT_DEPTH_CAP: usize = 2;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ScalarError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("tower depth cap ({0}) exceeded")]
    TowerDepthExceeded(usize),
    #[error("scalars live in incompatible towers")]
    IncompatibleTowers,
    #[error("square root of zero requested where nonzero required")]
    ZeroRadicand,
}

/// A Gaussian rational a + b·i with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gauss {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gauss {
    pub fn zero() -> Self {
        Gauss {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    pub fn one() -> Self {
        Gauss {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }
    pub fn i() -> Self {
        Gauss {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }
    pub fn from_rational(re: BigRational) -> Self {
        Gauss {
            re,
            im: BigRational::zero(),
        }
    }
    pub fn from_int(n: i64) -> Self {
        Gauss::from_rational(BigRational::from_integer(BigInt::from(n)))
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }
    fn add(&self, o: &Gauss) -> Gauss {
        Gauss {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &Gauss) -> Gauss {
        Gauss {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &Gauss) -> Gauss {
        Gauss {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn neg(&self) -> Gauss {
        Gauss {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn inv(&self) -> Option<Gauss> {
        let n = &self.re * &self.re + &self.im * &self.im;
        if n.is_zero() {
            return None;
        }
        Some(Gauss {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    let num = q.numer();
    let den = q.denom();
    let rn = num.sqrt();
    let rd = den.sqrt();
    if &(&rn * &rn) == num && &(&rd * &rd) == den {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// Square root of a Gaussian rational inside Q(i), if one exists there.
fn gauss_sqrt(z: &Gauss) -> Option<Gauss> {
    if z.is_zero() {
        return Some(Gauss::zero());
    }
    if z.im.is_zero() {
        if let Some(r) = rational_sqrt(&z.re) {
            return Some(Gauss::from_rational(r));
        }
        let neg = -z.re.clone();
        if let Some(r) = rational_sqrt(&neg) {
            return Some(Gauss {
                re: BigRational::zero(),
                im: r,
            });
        }
        return None;
    }
    // z = a+bi with b ≠ 0: need q = √(a²+b²) rational, x² = (a+q)/2 rational.
    let norm = &z.re * &z.re + &z.im * &z.im;
    let q = rational_sqrt(&norm)?;
    let two = BigRational::from_integer(BigInt::from(2));
    let x2 = (&z.re + &q) / &two;
    let x = rational_sqrt(&x2)?;
    if x.is_zero() {
        return None;
    }
    let y = &z.im / &(&x * &two);
    Some(Gauss { re: x, im: y })
}

/// A tower of square-root extensions of Q(i).
///
/// `exts[k]` holds the k-th radicand as coordinates of length 2^k over the
/// sub-tower below it. Invariant: no radicand is a square at its level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    exts: Vec<Vec<Gauss>>,
    depth_cap: usize,
}

impl Tower {
    pub fn base() -> Arc<Tower> {
        Arc::new(Tower {
            exts: Vec::new(),
            depth_cap: DEFAULT_DEPTH_CAP,
        })
    }

    pub fn depth(&self) -> usize {
        self.exts.len()
    }

    pub fn depth_cap(&self) -> usize {
        self.depth_cap
    }

    /// The k-th radicand as a Scalar of this tower.
    pub fn radicand(self: &Arc<Tower>, k: usize) -> Scalar {
        let mut coords = vec![Gauss::zero(); 1 << self.depth()];
        for (idx, g) in self.exts[k].iter().enumerate() {
            coords[idx] = g.clone();
        }
        Scalar {
            tower: Arc::clone(self),
            coords,
        }
    }

    /// The k-th adjoined root r_{k+1} as a Scalar of this tower.
    pub fn root(self: &Arc<Tower>, k: usize) -> Scalar {
        assert!(k < self.depth());
        let mut coords = vec![Gauss::zero(); 1 << self.depth()];
        coords[1 << k] = Gauss::one();
        Scalar {
            tower: Arc::clone(self),
            coords,
        }
    }

    /// True if `prefix`'s extensions form a prefix of this tower's.
    fn extends(&self, prefix: &Tower) -> bool {
        prefix.exts.len() <= self.exts.len()
            && prefix.exts[..] == self.exts[..prefix.exts.len()]
    }
}

/// An exact element of a [`Tower`].
#[derive(Debug, Clone)]
pub struct Scalar {
    tower: Arc<Tower>,
    /// Coordinates over the root-product basis; index bit k ⇔ factor r_{k+1}.
    coords: Vec<Gauss>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.tower, &other.tower) || self.tower == other.tower {
            return self.coords == other.coords;
        }
        match promote_pair(self, other) {
            Ok((a, b)) => a.coords == b.coords,
            Err(_) => false,
        }
    }
}
impl Eq for Scalar {}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // Hash only the coordinates that are nonzero, with their index, so
        // that equal values hash equally across prefix-compatible towers.
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                i.hash(state);
                c.hash(state);
            }
        }
    }
}

// --- level arithmetic on raw coordinate slices ------------------------------

fn slice_add(a: &[Gauss], b: &[Gauss]) -> Vec<Gauss> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

fn slice_sub(a: &[Gauss], b: &[Gauss]) -> Vec<Gauss> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

fn slice_neg(a: &[Gauss]) -> Vec<Gauss> {
    a.iter().map(|x| x.neg()).collect()
}

fn slice_is_zero(a: &[Gauss]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Multiply two elements of level `d` (coords length 2^d) in `tower`.
fn slice_mul(tower: &Tower, d: usize, a: &[Gauss], b: &[Gauss]) -> Vec<Gauss> {
    if d == 0 {
        return vec![a[0].mul(&b[0])];
    }
    let h = 1 << (d - 1);
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    // (a0 + a1 r)(b0 + b1 r) = a0b0 + a1b1·D + (a0b1 + a1b0) r
    let mut rad = vec![Gauss::zero(); h];
    for (i, g) in tower.exts[d - 1].iter().enumerate() {
        rad[i] = g.clone();
    }
    let a0b0 = slice_mul(tower, d - 1, a0, b0);
    let a1b1 = slice_mul(tower, d - 1, a1, b1);
    let cross = slice_mul(tower, d - 1, &a1b1, &rad);
    let lo = slice_add(&a0b0, &cross);
    let a0b1 = slice_mul(tower, d - 1, a0, b1);
    let a1b0 = slice_mul(tower, d - 1, a1, b0);
    let hi = slice_add(&a0b1, &a1b0);
    let mut out = lo;
    out.extend(hi);
    out
}

/// Invert an element of level `d`; None if zero.
fn slice_inv(tower: &Tower, d: usize, a: &[Gauss]) -> Option<Vec<Gauss>> {
    if d == 0 {
        return a[0].inv().map(|g| vec![g]);
    }
    let h = 1 << (d - 1);
    let (a0, a1) = a.split_at(h);
    if slice_is_zero(a1) {
        let inv0 = slice_inv(tower, d - 1, a0)?;
        let mut out = inv0;
        out.extend(vec![Gauss::zero(); h]);
        return Some(out);
    }
    // 1/(a0 + a1 r) = (a0 - a1 r) / (a0² - a1²·D)
    let mut rad = vec![Gauss::zero(); h];
    for (i, g) in tower.exts[d - 1].iter().enumerate() {
        rad[i] = g.clone();
    }
    let a0sq = slice_mul(tower, d - 1, a0, a0);
    let a1sq = slice_mul(tower, d - 1, a1, a1);
    let a1sq_d = slice_mul(tower, d - 1, &a1sq, &rad);
    let norm = slice_sub(&a0sq, &a1sq_d);
    let ninv = slice_inv(tower, d - 1, &norm)?;
    let lo = slice_mul(tower, d - 1, a0, &ninv);
    let hi = slice_neg(&slice_mul(tower, d - 1, a1, &ninv));
    let mut out = lo;
    out.extend(hi);
    Some(out)
}

/// Square root of a level-`d` element within the same level, if it exists.
fn slice_sqrt(tower: &Tower, d: usize, a: &[Gauss]) -> Option<Vec<Gauss>> {
    if d == 0 {
        return gauss_sqrt(&a[0]).map(|g| vec![g]);
    }
    let h = 1 << (d - 1);
    let (a0, a1) = a.split_at(h);
    if slice_is_zero(a1) {
        // Either √a0 at the lower level, or r·√(a0/D).
        if let Some(r) = slice_sqrt(tower, d - 1, a0) {
            let mut out = r;
            out.extend(vec![Gauss::zero(); h]);
            return Some(out);
        }
        let mut rad = vec![Gauss::zero(); h];
        for (i, g) in tower.exts[d - 1].iter().enumerate() {
            rad[i] = g.clone();
        }
        let dinv = slice_inv(tower, d - 1, &rad)?;
        let quot = slice_mul(tower, d - 1, a0, &dinv);
        if let Some(y) = slice_sqrt(tower, d - 1, &quot) {
            let mut out = vec![Gauss::zero(); h];
            out.extend(y);
            return Some(out);
        }
        return None;
    }
    // a = a0 + a1 r, a1 ≠ 0: x + y r with x² = (a0 ± w)/2, w² = a0² - a1² D.
    let mut rad = vec![Gauss::zero(); h];
    for (i, g) in tower.exts[d - 1].iter().enumerate() {
        rad[i] = g.clone();
    }
    let a0sq = slice_mul(tower, d - 1, a0, a0);
    let a1sq = slice_mul(tower, d - 1, a1, a1);
    let norm = slice_sub(&a0sq, &slice_mul(tower, d - 1, &a1sq, &rad));
    let w = slice_sqrt(tower, d - 1, &norm)?;
    let two = vec![Gauss::from_int(2)];
    let mut two_full = two.clone();
    two_full.resize(h, Gauss::zero());
    let half = slice_inv(tower, d - 1, &two_full)?;
    for w_signed in [w.clone(), slice_neg(&w)] {
        let x2 = slice_mul(tower, d - 1, &slice_add(a0, &w_signed), &half);
        if let Some(x) = slice_sqrt(tower, d - 1, &x2) {
            if slice_is_zero(&x) {
                continue;
            }
            let xinv = slice_inv(tower, d - 1, &x)?;
            let y_half = slice_mul(tower, d - 1, a1, &xinv);
            let y = slice_mul(tower, d - 1, &y_half, &half);
            let mut out = x;
            out.extend(y);
            return Some(out);
        }
    }
    None
}

// --- promotion ---------------------------------------------------------------

fn pad_to(coords: &[Gauss], len: usize) -> Vec<Gauss> {
    let mut v = coords.to_vec();
    v.resize(len, Gauss::zero());
    v
}

/// Bring two scalars into a common tower.
fn promote_pair(a: &Scalar, b: &Scalar) -> Result<(Scalar, Scalar), ScalarError> {
    if a.tower == b.tower {
        return Ok((a.clone(), b.clone()));
    }
    if a.tower.extends(&b.tower) {
        let nb = Scalar {
            tower: Arc::clone(&a.tower),
            coords: pad_to(&b.coords, a.coords.len()),
        };
        return Ok((a.clone(), nb));
    }
    if b.tower.extends(&a.tower) {
        let na = Scalar {
            tower: Arc::clone(&b.tower),
            coords: pad_to(&a.coords, b.coords.len()),
        };
        return Ok((na, b.clone()));
    }
    // General promotion: re-express b inside a's tower by adjoining each of
    // b's radicands there, then evaluating b's coordinates against the roots.
    let nb = b.promote_into(&a.tower)?;
    let na = Scalar {
        tower: Arc::clone(&nb.tower),
        coords: pad_to(&a.coords, nb.coords.len()),
    };
    Ok((na, nb))
}

impl Scalar {
    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn zero() -> Scalar {
        Scalar {
            tower: Tower::base(),
            coords: vec![Gauss::zero()],
        }
    }

    pub fn one() -> Scalar {
        Scalar {
            tower: Tower::base(),
            coords: vec![Gauss::one()],
        }
    }

    pub fn i() -> Scalar {
        Scalar {
            tower: Tower::base(),
            coords: vec![Gauss::i()],
        }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar {
            tower: Tower::base(),
            coords: vec![Gauss::from_int(n)],
        }
    }

    pub fn from_fraction(p: i64, q: i64) -> Scalar {
        assert!(q != 0);
        Scalar {
            tower: Tower::base(),
            coords: vec![Gauss::from_rational(BigRational::new(
                BigInt::from(p),
                BigInt::from(q),
            ))],
        }
    }

    pub fn from_rational(q: BigRational) -> Scalar {
        Scalar {
            tower: Tower::base(),
            coords: vec![Gauss::from_rational(q)],
        }
    }

    pub fn from_gauss(g: Gauss) -> Scalar {
        Scalar {
            tower: Tower::base(),
            coords: vec![g],
        }
    }

    pub fn in_tower(tower: &Arc<Tower>, g: Gauss) -> Scalar {
        let mut coords = vec![Gauss::zero(); 1 << tower.depth()];
        coords[0] = g;
        Scalar {
            tower: Arc::clone(tower),
            coords,
        }
    }

    pub fn is_zero(&self) -> bool {
        slice_is_zero(&self.coords)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0] == Gauss::one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// True when the scalar lies in Q (no i, no roots).
    pub fn is_rational(&self) -> bool {
        self.coords[0].is_rational() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// True when the scalar lies in Q(i) (no root coordinates).
    pub fn is_gaussian(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if this scalar is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coords[0].re.clone())
        } else {
            None
        }
    }

    pub fn as_gauss(&self) -> Option<Gauss> {
        if self.is_gaussian() {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Flattened canonical coordinates: (re, im) of each basis coefficient.
    pub fn flat_coords(&self) -> Vec<BigRational> {
        let mut v = Vec::with_capacity(self.coords.len() * 2);
        for c in &self.coords {
            v.push(c.re.clone());
            v.push(c.im.clone());
        }
        v
    }

    fn depth(&self) -> usize {
        self.tower.depth()
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        let (a, b) = promote_pair(self, o).expect("tower promotion failed in add");
        Scalar {
            tower: a.tower,
            coords: slice_add(&a.coords, &b.coords),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        let (a, b) = promote_pair(self, o).expect("tower promotion failed in sub");
        Scalar {
            tower: a.tower,
            coords: slice_sub(&a.coords, &b.coords),
        }
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            tower: Arc::clone(&self.tower),
            coords: slice_neg(&self.coords),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        let (a, b) = promote_pair(self, o).expect("tower promotion failed in mul");
        let d = a.tower.depth();
        Scalar {
            coords: slice_mul(&a.tower, d, &a.coords, &b.coords),
            tower: a.tower,
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        let d = self.depth();
        match slice_inv(&self.tower, d, &self.coords) {
            Some(coords) => Ok(Scalar {
                tower: Arc::clone(&self.tower),
                coords,
            }),
            None => Err(ScalarError::DivisionByZero),
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        let (a, b) = promote_pair(self, o)?;
        let d = a.tower.depth();
        let binv = slice_inv(&a.tower, d, &b.coords).ok_or(ScalarError::DivisionByZero)?;
        Ok(Scalar {
            coords: slice_mul(&a.tower, d, &a.coords, &binv),
            tower: a.tower,
        })
    }

    pub fn mul_int(&self, n: i64) -> Scalar {
        self.mul(&Scalar::from_int(n))
    }

    pub fn square(&self) -> Scalar {
        self.mul(self)
    }

    /// Square root within the current tower, if the element is a square there.
    pub fn sqrt_in_tower(&self) -> Option<Scalar> {
        slice_sqrt(&self.tower, self.depth(), &self.coords).map(|coords| Scalar {
            tower: Arc::clone(&self.tower),
            coords,
        })
    }

    /// Re-express this scalar inside `target`, adjoining roots as needed.
    fn promote_into(&self, target: &Arc<Tower>) -> Result<Scalar, ScalarError> {
        // Promote each radicand of self's tower into the accumulating target
        // and take its root there; then expand self's coordinates.
        let mut tower = Arc::clone(target);
        let mut roots: Vec<Scalar> = Vec::new();
        for k in 0..self.tower.depth() {
            let rad_low = Scalar {
                tower: Arc::clone(&self.tower),
                coords: {
                    let mut c = vec![Gauss::zero(); 1 << self.tower.depth()];
                    for (i, g) in self.tower.exts[k].iter().enumerate() {
                        c[i] = g.clone();
                    }
                    c
                },
            };
            // The radicand only involves roots 0..k, already in `roots`.
            let rad_in_target = rad_low.eval_lower(&tower, &roots, k)?;
            let (nt, r) = adjoin_sqrt(&tower, &rad_in_target)?;
            // Earlier roots must be re-padded if the tower grew.
            if nt != tower {
                for rt in roots.iter_mut() {
                    *rt = Scalar {
                        tower: Arc::clone(&nt),
                        coords: pad_to(&rt.coords, 1 << nt.depth()),
                    };
                }
            }
            tower = nt;
            roots.push(r);
        }
        self.eval_lower(&tower, &roots, self.tower.depth())
    }

    /// Evaluate the first 2^k coordinates against explicit root values.
    fn eval_lower(
        &self,
        target: &Arc<Tower>,
        roots: &[Scalar],
        k: usize,
    ) -> Result<Scalar, ScalarError> {
        let mut acc = Scalar::in_tower(target, Gauss::zero());
        for idx in 0..(1usize << k) {
            let g = if idx < self.coords.len() {
                self.coords[idx].clone()
            } else {
                Gauss::zero()
            };
            if g.is_zero() {
                continue;
            }
            let mut term = Scalar::in_tower(target, g);
            for (bit, root) in roots.iter().enumerate().take(k) {
                if idx & (1 << bit) != 0 {
                    term = term.mul(root);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

/// Adjoin a square root of `d` to `tower`.
///
/// If `d` is already a square at the current level the tower is returned
/// unchanged together with the existing root; otherwise a new extension is
/// pushed (subject to the depth cap).
pub fn adjoin_sqrt(tower: &Arc<Tower>, d: &Scalar) -> Result<(Arc<Tower>, Scalar), ScalarError> {
    if d.is_zero() {
        return Err(ScalarError::ZeroRadicand);
    }
    let d = if d.tower() == tower {
        d.clone()
    } else if tower.extends(d.tower()) {
        Scalar {
            tower: Arc::clone(tower),
            coords: pad_to(&d.coords, 1 << tower.depth()),
        }
    } else {
        d.promote_into(tower)?
    };
    let tower = Arc::clone(d.tower());
    if let Some(r) = d.sqrt_in_tower() {
        return Ok((tower, r));
    }
    if tower.depth() >= tower.depth_cap() {
        return Err(ScalarError::TowerDepthExceeded(tower.depth_cap()));
    }
    let mut exts = tower.exts.clone();
    exts.push(d.coords.clone());
    let new_tower = Arc::new(Tower {
        exts,
        depth_cap: tower.depth_cap,
    });
    let mut coords = vec![Gauss::zero(); 1 << new_tower.depth()];
    coords[1 << tower.depth()] = Gauss::one();
    Ok((
        Arc::clone(&new_tower),
        Scalar {
            tower: new_tower,
            coords,
        },
    ))
}

/// Total order on scalars used for canonical parameter representatives:
/// flattened coordinates compared entrywise by (|value|, negative-last).
pub fn canonical_cmp(a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let (pa, pb) = match promote_pair(a, b) {
        Ok(p) => p,
        Err(_) => return Ordering::Equal,
    };
    let fa = pa.flat_coords();
    let fb = pb.flat_coords();
    for (x, y) in fa.iter().zip(fb.iter()) {
        let ax = x.abs();
        let ay = y.abs();
        match ax.cmp(&ay) {
            Ordering::Equal => {}
            o => return o,
        }
        match (x.is_negative(), y.is_negative()) {
            (false, true) => return Ordering::Less,
            (true, false) => return Ordering::Greater,
            _ => {}
        }
    }
    fa.len().cmp(&fb.len())
}

// --- display -----------------------------------------------------------------

fn basis_name(idx: usize) -> String {
    let mut parts = Vec::new();
    if idx & 1 != 0 {
        parts.push("r1".to_string());
    }
    if idx & 2 != 0 {
        parts.push("r2".to_string());
    }
    parts.join("*")
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(bool, String)> = Vec::new();
        for (idx, g) in self.coords.iter().enumerate() {
            let base = basis_name(idx);
            for (val, sym) in [(&g.re, ""), (&g.im, "i")] {
                if val.is_zero() {
                    continue;
                }
                let neg = val.is_negative();
                let mag = val.abs();
                let mut factors: Vec<String> = Vec::new();
                let mag_one = mag.is_one();
                if !mag_one || (sym.is_empty() && base.is_empty()) {
                    factors.push(mag.to_string());
                }
                if !sym.is_empty() {
                    factors.push(sym.to_string());
                }
                if !base.is_empty() {
                    factors.push(base.clone());
                }
                terms.push((neg, factors.join("*")));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (neg, s)) in terms.iter().enumerate() {
            if k == 0 {
                if *neg {
                    out.push('-');
                }
            } else {
                out.push_str(if *neg { " - " } else { " + " });
            }
            out.push_str(s);
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rational_by_integer_scaling() {
        // (1/2 + i) * 2 = 1 + 2i
        let x = Scalar::from_fraction(1, 2).add(&Scalar::i());
        let y = x.mul(&s(2));
        let expect = s(1).add(&Scalar::i().mul_int(2));
        assert_eq!(y, expect);
        assert_eq!(y.to_string(), "1 + 2*i");
    }

    #[test]
    fn self_division() {
        let x = s(1).add(&Scalar::i());
        assert!(x.div(&x).unwrap().is_one());
    }

    #[test]
    fn division_by_one_plus_i() {
        // 1 / (1+i) = 1/2 - i/2, verified by multiplying back.
        let x = s(1).add(&Scalar::i());
        let y = s(1).div(&x).unwrap();
        let expect = Scalar::from_fraction(1, 2).sub(&Scalar::i().mul(&Scalar::from_fraction(1, 2)));
        assert_eq!(y, expect);
        assert!(y.mul(&x).is_one());
    }

    #[test]
    fn adjoin_perfect_square_keeps_tower() {
        let t = Tower::base();
        let (t2, r) = adjoin_sqrt(&t, &s(4)).unwrap();
        assert_eq!(t2.depth(), 0);
        assert_eq!(r, s(2));
    }

    #[test]
    fn adjoin_sqrt2_defining_relation() {
        let t = Tower::base();
        let (t2, r) = adjoin_sqrt(&t, &s(2)).unwrap();
        assert_eq!(t2.depth(), 1);
        assert_eq!(r.square(), s(2));
        assert!(r.square().is_gaussian());
    }

    #[test]
    fn adjoin_minus_one_gives_i() {
        let t = Tower::base();
        let (t2, r) = adjoin_sqrt(&t, &s(-1)).unwrap();
        assert_eq!(t2.depth(), 0);
        assert_eq!(r, Scalar::i());
    }

    #[test]
    fn depth_cap_enforced() {
        let t = Tower::base();
        let (t1, _) = adjoin_sqrt(&t, &s(2)).unwrap();
        let (t2, _) = adjoin_sqrt(&t1, &s(3)).unwrap();
        assert_eq!(t2.depth(), 2);
        let err = adjoin_sqrt(&t2, &s(5)).unwrap_err();
        assert_eq!(err, ScalarError::TowerDepthExceeded(2));
    }

    #[test]
    fn arithmetic_in_extension() {
        let t = Tower::base();
        let (t1, r) = adjoin_sqrt(&t, &s(2)).unwrap();
        let x = Scalar::in_tower(&t1, Gauss::from_int(1)).add(&r); // 1 + √2
        let y = x.mul(&x); // 3 + 2√2
        let expect = Scalar::in_tower(&t1, Gauss::from_int(3)).add(&r.mul_int(2));
        assert_eq!(y, expect);
        assert!(x.mul(&x.inv().unwrap()).is_one());
    }

    #[test]
    fn nested_sqrt_detection() {
        // (1+√2)² = 3+2√2 is a square in Q(i)(√2).
        let t = Tower::base();
        let (t1, r) = adjoin_sqrt(&t, &s(2)).unwrap();
        let x = Scalar::in_tower(&t1, Gauss::from_int(3)).add(&r.mul_int(2));
        let (t2, root) = adjoin_sqrt(&t1, &x).unwrap();
        assert_eq!(t2.depth(), 1);
        assert_eq!(root.square(), x);
    }

    #[test]
    fn cross_tower_promotion() {
        // √2 (in tower [2]) times √3 (in tower [3]) squares to 6.
        let t = Tower::base();
        let (_, r2) = adjoin_sqrt(&t, &s(2)).unwrap();
        let (_, r3) = adjoin_sqrt(&t, &s(3)).unwrap();
        let p = r2.mul(&r3);
        assert_eq!(p.square(), s(6));
    }

    #[test]
    fn exactness_properties() {
        let vals = [
            s(3),
            Scalar::from_fraction(-7, 3),
            s(2).add(&Scalar::i().mul_int(5)),
            Scalar::from_fraction(1, 9).sub(&Scalar::i()),
        ];
        for a in &vals {
            for b in &vals {
                assert_eq!(a.add(b).sub(b), *a);
                if !b.is_zero() {
                    assert_eq!(a.mul(b).div(b).unwrap(), *a);
                }
            }
        }
    }

    #[test]
    fn canonical_order_prefers_positive() {
        // 5 precedes -5; 1/2 precedes 2.
        assert_eq!(canonical_cmp(&s(5), &s(-5)), std::cmp::Ordering::Less);
        assert_eq!(
            canonical_cmp(&Scalar::from_fraction(1, 2), &s(2)),
            std::cmp::Ordering::Less
        );
    }
}
