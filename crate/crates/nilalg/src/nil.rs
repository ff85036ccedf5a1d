//! Nil-index computation over all non-associative bracketings and a generic
//! trilinear identity checker.
//!
//! A power x^k means every arrangement of parentheses of a k-fold product;
//! bracketings are enumerated as full binary trees in a fixed (Catalan)
//! order: trees of degree n are listed by left-subtree degree ascending,
//! then recursively by left index, then right index.

use crate::algebra::ScalarAlgebra;
use crate::scalar::Scalar;
use crate::symbolic::{Polynomial, Var};
use std::fmt;

/// A full binary tree; leaves are element slots, numbered left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketTree {
    Leaf,
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn degree(&self) -> usize {
        match self {
            BracketTree::Leaf => 1,
            BracketTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    /// All bracketings of the given degree in canonical order.
    pub fn enumerate(degree: usize) -> Vec<BracketTree> {
        assert!(degree >= 1);
        if degree == 1 {
            return vec![BracketTree::Leaf];
        }
        let mut out = Vec::new();
        for left in 1..degree {
            let ls = BracketTree::enumerate(left);
            let rs = BracketTree::enumerate(degree - left);
            for l in &ls {
                for r in &rs {
                    out.push(BracketTree::Node(Box::new(l.clone()), Box::new(r.clone())));
                }
            }
        }
        out
    }

    /// Evaluate on explicit leaf vectors (left-to-right), in an algebra.
    pub fn eval_scalars(&self, alg: &ScalarAlgebra, leaves: &[Vec<Scalar>]) -> Vec<Scalar> {
        let mut pos = 0;
        self.eval_inner(alg, leaves, &mut pos)
    }

    fn eval_inner(
        &self,
        alg: &ScalarAlgebra,
        leaves: &[Vec<Scalar>],
        pos: &mut usize,
    ) -> Vec<Scalar> {
        match self {
            BracketTree::Leaf => {
                let v = leaves[*pos].clone();
                *pos += 1;
                v
            }
            BracketTree::Node(l, r) => {
                let lv = l.eval_inner(alg, leaves, pos);
                let rv = r.eval_inner(alg, leaves, pos);
                alg.multiply(&lv, &rv)
            }
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf => write!(f, "."),
            BracketTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// Parse the dot-parenthesis encoding used by identity files:
/// `.` is a leaf, `(AB)` the product of two subtrees; e.g. `((..).)`
/// is (xy)z and `(.(..))` is x(yz).
pub fn parse_tree(s: &str) -> Option<BracketTree> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (tree, used) = parse_tree_inner(&chars, 0)?;
    if used == chars.len() {
        Some(tree)
    } else {
        None
    }
}

fn parse_tree_inner(chars: &[char], pos: usize) -> Option<(BracketTree, usize)> {
    match chars.get(pos)? {
        '.' => Some((BracketTree::Leaf, pos + 1)),
        '(' => {
            let (l, p1) = parse_tree_inner(chars, pos + 1)?;
            let (r, p2) = parse_tree_inner(chars, p1)?;
            if chars.get(p2) == Some(&')') {
                Some((BracketTree::Node(Box::new(l), Box::new(r)), p2 + 1))
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Values of every bracketing on the generic element x = Σ xᵢeᵢ, per degree,
/// as coordinate vectors of polynomials in x1..x3 (plus any parameters left
/// in the table). Products with a vanishing side are short-circuited, which
/// keeps the enumeration cheap on genuinely nil tables.
pub struct PowerPolynomials {
    by_degree: Vec<Vec<Vec<Polynomial>>>,
}

impl PowerPolynomials {
    pub fn up_to(alg: &crate::algebra::Algebra, k_max: usize) -> PowerPolynomials {
        let dim = alg.dim();
        let coords = Var::coords();
        let generic: Vec<Polynomial> = (0..dim).map(|i| Polynomial::var(coords[i])).collect();
        let mut by_degree: Vec<Vec<Vec<Polynomial>>> = vec![vec![generic]];
        let lift = |rf: &crate::symbolic::RationalFunction| -> Polynomial {
            rf.as_polynomial()
                .expect("nil computations require polynomial table entries")
        };
        for d in 2..=k_max {
            let mut values = Vec::new();
            for left in 1..d {
                let right = d - left;
                for li in 0..by_degree[left - 1].len() {
                    for ri in 0..by_degree[right - 1].len() {
                        let lv = &by_degree[left - 1][li];
                        let rv = &by_degree[right - 1][ri];
                        let zero_l = lv.iter().all(|p| p.is_zero());
                        let zero_r = rv.iter().all(|p| p.is_zero());
                        if zero_l || zero_r {
                            values.push(vec![Polynomial::zero(); dim]);
                        } else {
                            let mut prod = vec![Polynomial::zero(); dim];
                            for i in 0..dim {
                                if lv[i].is_zero() {
                                    continue;
                                }
                                for j in 0..dim {
                                    if rv[j].is_zero() {
                                        continue;
                                    }
                                    let uv = lv[i].mul(&rv[j]);
                                    for k in 0..dim {
                                        let c = alg.entry(i, j, k);
                                        if !c.is_zero() {
                                            prod[k] = prod[k].add(&uv.mul(&lift(c)));
                                        }
                                    }
                                }
                            }
                            values.push(prod);
                        }
                    }
                }
            }
            by_degree.push(values);
        }
        PowerPolynomials { by_degree }
    }

    pub fn degree(&self, d: usize) -> &[Vec<Polynomial>] {
        &self.by_degree[d - 1]
    }

    pub fn all_vanish_at(&self, d: usize) -> bool {
        self.by_degree[d - 1]
            .iter()
            .all(|v| v.iter().all(|p| p.is_zero()))
    }
}

/// Value of every degree-k bracketing on the generic element.
pub fn power_polynomials(alg: &crate::algebra::Algebra, k: usize) -> Vec<Vec<Polynomial>> {
    assert!(k >= 2);
    PowerPolynomials::up_to(alg, k).by_degree.swap_remove(k - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NilVerdict {
    NilOfIndex(usize),
    NotNilUpTo(usize),
}

/// Least n such that every bracketing of every degree m with n ≤ m ≤ k_max
/// vanishes identically while some degree-(n−1) bracketing does not.
///
/// Degrees are checked independently: vanishing at one degree is not assumed
/// to propagate upward. Parameters still present in the table are treated
/// symbolically, so the verdict then holds for every parameter value.
pub fn nil_index(alg: &crate::algebra::Algebra, k_max: usize) -> NilVerdict {
    assert!(k_max >= 2);
    let powers = PowerPolynomials::up_to(alg, k_max);
    let vanish: Vec<bool> = (1..=k_max).map(|d| powers.all_vanish_at(d)).collect();
    let mut n = None;
    for cand in (2..=k_max).rev() {
        if vanish[cand - 1] {
            n = Some(cand);
        } else {
            break;
        }
    }
    match n {
        Some(n) if (n..=k_max).all(|m| vanish[m - 1]) => NilVerdict::NilOfIndex(n),
        _ => NilVerdict::NotNilUpTo(k_max),
    }
}

/// One term of a trilinear identity: coefficient, a permutation of the three
/// letters (indices into (x, y, z) in slot order), and a degree-3 bracketing.
#[derive(Debug, Clone)]
pub struct IdentityTerm {
    pub coef: Scalar,
    pub perm: [usize; 3],
    pub tree: BracketTree,
}

impl IdentityTerm {
    pub fn new(coef: Scalar, perm: [usize; 3], tree: BracketTree) -> IdentityTerm {
        assert_eq!(tree.degree(), 3, "only trilinear identities are supported");
        assert!({
            let mut s = perm;
            s.sort_unstable();
            s == [0, 1, 2]
        });
        IdentityTerm { coef, perm, tree }
    }

    /// Parse a permutation like "xzy" (letters of (x,y,z) in slot order).
    pub fn parse_perm(s: &str) -> Option<[usize; 3]> {
        let idx: Vec<usize> = s
            .chars()
            .map(|c| match c {
                'x' => Some(0),
                'y' => Some(1),
                'z' => Some(2),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        let arr: [usize; 3] = idx.try_into().ok()?;
        let mut sorted = arr;
        sorted.sort_unstable();
        if sorted == [0, 1, 2] {
            Some(arr)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityVerdict {
    Holds,
    /// A basis triple (1-based indices) where the identity fails.
    Fails(usize, usize, usize),
}

/// Check a multilinear degree-3 identity on all basis triples; multilinearity
/// makes this a complete decision procedure in characteristic zero.
pub fn check_trilinear_identity(alg: &ScalarAlgebra, terms: &[IdentityTerm]) -> IdentityVerdict {
    let n = alg.dim();
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                let triple = [
                    alg.basis_vector(p),
                    alg.basis_vector(q),
                    alg.basis_vector(r),
                ];
                let mut acc = vec![Scalar::zero(); n];
                for term in terms {
                    let leaves: Vec<Vec<Scalar>> = term
                        .perm
                        .iter()
                        .map(|&slot| triple[slot].clone())
                        .collect();
                    let v = term.tree.eval_scalars(alg, &leaves);
                    for k in 0..n {
                        acc[k] = acc[k].add(&v[k].mul(&term.coef));
                    }
                }
                if acc.iter().any(|c| !c.is_zero()) {
                    return IdentityVerdict::Fails(p + 1, q + 1, r + 1);
                }
            }
        }
    }
    IdentityVerdict::Holds
}

/// The left-normed tree ((xy)z).
pub fn tree_left() -> BracketTree {
    parse_tree("((..).)").unwrap()
}

/// The right-normed tree (x(yz)).
pub fn tree_right() -> BracketTree {
    parse_tree("(.(..))").unwrap()
}

/// Named trilinear identities satisfied by the non-nilpotent nilalgebra N3.
pub fn named_identity(name: &str) -> Option<Vec<IdentityTerm>> {
    let one = Scalar::one;
    let neg = || Scalar::from_int(-1);
    let l = tree_left;
    let r = tree_right;
    let t = |c: Scalar, p: &str, tree: BracketTree| {
        IdentityTerm::new(c, IdentityTerm::parse_perm(p).unwrap(), tree)
    };
    let terms = match name {
        // (xy)z − (xz)y − x(yz) = 0
        "leibniz" => vec![
            t(one(), "xyz", l()),
            t(neg(), "xzy", l()),
            t(neg(), "xyz", r()),
        ],
        // (xy)z − (zy)x − y(zx) = 0
        "reverse-leibniz" => vec![
            t(one(), "xyz", l()),
            t(neg(), "zyx", l()),
            t(neg(), "yzx", r()),
        ],
        // (xy)z − x(yz) + (yz)x − y(zx) − (yx)z + y(xz) = 0
        "weakly-associative" => vec![
            t(one(), "xyz", l()),
            t(neg(), "xyz", r()),
            t(one(), "yzx", l()),
            t(neg(), "yzx", r()),
            t(neg(), "yxz", l()),
            t(one(), "yxz", r()),
        ],
        // (xy)z + (yx)z + z(xy) + z(yx) = 0
        "jordan-2-nilpotent" => vec![
            t(one(), "xyz", l()),
            t(one(), "yxz", l()),
            t(one(), "zxy", r()),
            t(one(), "zyx", r()),
        ],
        // (xy)z + (yx)z = 0
        "almost-anticommutative" => vec![t(one(), "xyz", l()), t(one(), "yxz", l())],
        _ => return None,
    };
    Some(terms)
}

pub const NAMED_IDENTITIES: [&str; 5] = [
    "leibniz",
    "reverse-leibniz",
    "weakly-associative",
    "jordan-2-nilpotent",
    "almost-anticommutative",
];

/// The two full linearizations of x³ = 0: Σ_{σ∈S₃}(x_{σ1}x_{σ2})x_{σ3} and
/// Σ_{σ∈S₃} x_{σ1}(x_{σ2}x_{σ3}).
pub fn full_linearizations() -> [Vec<IdentityTerm>; 2] {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let left: Vec<IdentityTerm> = perms
        .iter()
        .map(|p| IdentityTerm::new(Scalar::one(), *p, tree_left()))
        .collect();
    let right: Vec<IdentityTerm> = perms
        .iter()
        .map(|p| IdentityTerm::new(Scalar::one(), *p, tree_right()))
        .collect();
    [left, right]
}

/// The Jacobi identity (xy)z + (yz)x + (zx)y = 0.
pub fn jacobi_identity() -> Vec<IdentityTerm> {
    ["xyz", "yzx", "zxy"]
        .iter()
        .map(|p| {
            IdentityTerm::new(
                Scalar::one(),
                IdentityTerm::parse_perm(p).unwrap(),
                tree_left(),
            )
        })
        .collect()
}

/// The general 12-term identity family of the non-nilpotent remark,
/// parametrized by the ten free coefficients α₁..α₁₀; the x(yz) and y(zx)
/// coefficients are the determined combinations.
pub fn remark_family(a: &[Scalar; 10]) -> Vec<IdentityTerm> {
    let l = tree_left;
    let r = tree_right;
    let t = |c: &Scalar, p: &str, tree: BracketTree| {
        IdentityTerm::new(c.clone(), IdentityTerm::parse_perm(p).unwrap(), tree)
    };
    // α₁(xy)z + α₂(yx)z + α₃(xz)y + α₄(zy)x + α₅(yz)x + α₆(zx)y
    // + α₇ z(xy) + α₈ z(yx) + α₉ y(xz) + α₁₀ x(zy)
    // + (−α₁+α₂+α₇−α₈−α₄+α₅+α₁₀)·x(yz) + (−α₁+α₂+α₇−α₈−α₃+α₆+α₉)·y(zx)
    let c_xyz_r = a[1]
        .add(&a[6])
        .add(&a[4])
        .add(&a[9])
        .sub(&a[0])
        .sub(&a[7])
        .sub(&a[3]);
    let c_yzx_r = a[1]
        .add(&a[6])
        .add(&a[5])
        .add(&a[8])
        .sub(&a[0])
        .sub(&a[7])
        .sub(&a[2]);
    vec![
        t(&a[0], "xyz", l()),
        t(&a[1], "yxz", l()),
        t(&a[2], "xzy", l()),
        t(&a[3], "zyx", l()),
        t(&a[4], "yzx", l()),
        t(&a[5], "zxy", l()),
        t(&a[6], "zxy", r()),
        t(&a[7], "zyx", r()),
        t(&a[8], "yxz", r()),
        t(&a[9], "xzy", r()),
        t(&c_xyz_r, "xyz", r()),
        t(&c_yzx_r, "yzx", r()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{instantiate, CatalogLabel, FamilyId};

    fn algebra(id: FamilyId) -> crate::algebra::Algebra {
        instantiate(&CatalogLabel::plain(id)).unwrap()
    }

    fn scalar_algebra(id: FamilyId) -> ScalarAlgebra {
        algebra(id).scalar_table().unwrap()
    }

    #[test]
    fn catalan_enumeration_counts() {
        let counts: Vec<usize> = (1..=8).map(|d| BracketTree::enumerate(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn power_polynomials_n1() {
        // N1 (e1e1 = e2): the single degree-2 bracketing is x1²·e2.
        let vals = power_polynomials(&algebra(FamilyId::N1), 2);
        assert_eq!(vals.len(), 1);
        let x1sq = Polynomial::var(Var::X1).pow(2);
        assert_eq!(vals[0][0], Polynomial::zero());
        assert_eq!(vals[0][1], x1sq);
        assert_eq!(vals[0][2], Polynomial::zero());
    }

    #[test]
    fn power_polynomials_anticommutative_square_is_zero() {
        let vals = power_polynomials(&algebra(FamilyId::G4), 2);
        assert!(vals[0].iter().all(|p| p.is_zero()));
    }

    #[test]
    fn power_polynomials_bn1_degree4() {
        // bN1 (e1e1 = e2, e2e2 = e3): only (xx)(xx) survives at degree 4,
        // with value x1⁴·e3.
        let vals = power_polynomials(&algebra(FamilyId::BN1), 4);
        assert_eq!(vals.len(), 5);
        let nonzero: Vec<usize> = vals
            .iter()
            .enumerate()
            .filter(|(_, v)| v.iter().any(|p| !p.is_zero()))
            .map(|(k, _)| k)
            .collect();
        assert_eq!(nonzero.len(), 1);
        let v = &vals[nonzero[0]];
        assert_eq!(v[2], Polynomial::var(Var::X1).pow(4));
        let trees = BracketTree::enumerate(4);
        assert_eq!(trees[nonzero[0]].to_string(), "((..)(..))");
    }

    #[test]
    fn nil_indices_match_catalog() {
        assert_eq!(nil_index(&algebra(FamilyId::G1), 8), NilVerdict::NilOfIndex(2));
        assert_eq!(nil_index(&algebra(FamilyId::BN1), 8), NilVerdict::NilOfIndex(5));
        assert_eq!(nil_index(&algebra(FamilyId::RN1), 8), NilVerdict::NilOfIndex(4));
        assert_eq!(nil_index(&algebra(FamilyId::N5), 8), NilVerdict::NilOfIndex(3));
    }

    #[test]
    fn nil_index_symbolic_families() {
        for (f, n) in [
            (FamilyId::G3, 2),
            (FamilyId::A1, 2),
            (FamilyId::N6, 3),
            (FamilyId::RN2, 4),
        ] {
            let a = crate::catalog::symbolic_member(f);
            assert_eq!(nil_index(&a, 8), NilVerdict::NilOfIndex(n), "{}", f.name());
        }
    }

    #[test]
    fn not_nil_detected() {
        // e1e1 = e1 is idempotent, not nil.
        let a = crate::algebra::Algebra::from_entries(
            3,
            vec![],
            &[(1, 1, 1, crate::symbolic::RationalFunction::one())],
        )
        .unwrap();
        assert_eq!(nil_index(&a, 8), NilVerdict::NotNilUpTo(8));
    }

    #[test]
    fn leibniz_holds_on_n3_fails_on_n5() {
        let terms = named_identity("leibniz").unwrap();
        assert_eq!(
            check_trilinear_identity(&scalar_algebra(FamilyId::N3), &terms),
            IdentityVerdict::Holds
        );
        match check_trilinear_identity(&scalar_algebra(FamilyId::N5), &terms) {
            IdentityVerdict::Fails(_, _, _) => {}
            IdentityVerdict::Holds => panic!("leibniz should fail on N5"),
        }
        // documented witness triple (e3, e3, e1): LHS (e3e3)e1 = e2e1 = 0,
        // RHS (e3e1)e3 + e3(e3e1) = -2e2
        let n5 = scalar_algebra(FamilyId::N5);
        let e3 = n5.basis_vector(2);
        let e1 = n5.basis_vector(0);
        let lhs = n5.multiply(&n5.multiply(&e3, &e3), &e1);
        let rhs: Vec<Scalar> = n5
            .multiply(&n5.multiply(&e3, &e1), &e3)
            .iter()
            .zip(n5.multiply(&e3, &n5.multiply(&e3, &e1)).iter())
            .map(|(a, b)| a.add(b))
            .collect();
        assert!(lhs.iter().all(|c| c.is_zero()));
        assert_eq!(rhs[1], Scalar::from_int(-2));
    }

    #[test]
    fn zero_algebra_satisfies_everything() {
        let z = scalar_algebra(FamilyId::Zero);
        for name in NAMED_IDENTITIES {
            let terms = named_identity(name).unwrap();
            assert_eq!(check_trilinear_identity(&z, &terms), IdentityVerdict::Holds);
        }
    }

    #[test]
    fn named_identities_and_family_hold_on_n3() {
        let n3 = scalar_algebra(FamilyId::N3);
        for name in NAMED_IDENTITIES {
            let terms = named_identity(name).unwrap();
            assert_eq!(
                check_trilinear_identity(&n3, &terms),
                IdentityVerdict::Holds,
                "{name} fails on N3"
            );
        }
        let picks = [
            [1, 2, 0, -1, 3, 0, 5, 0, 0, 2],
            [0, 0, 1, 1, 1, -2, 0, 4, -3, 7],
        ];
        for pick in picks {
            let coeffs: [Scalar; 10] = pick.map(Scalar::from_int);
            let terms = remark_family(&coeffs);
            assert_eq!(check_trilinear_identity(&n3, &terms), IdentityVerdict::Holds);
        }
    }

    #[test]
    fn full_linearizations_hold_on_nilindex3() {
        let [l, r] = full_linearizations();
        for f in [
            FamilyId::N1,
            FamilyId::N2,
            FamilyId::N3,
            FamilyId::N4,
            FamilyId::N5,
        ] {
            let a = scalar_algebra(f);
            assert_eq!(check_trilinear_identity(&a, &l), IdentityVerdict::Holds);
            assert_eq!(check_trilinear_identity(&a, &r), IdentityVerdict::Holds);
        }
    }

    #[test]
    fn jacobi_separates_lie_from_non_lie() {
        assert_eq!(
            check_trilinear_identity(&scalar_algebra(FamilyId::G4), &jacobi_identity()),
            IdentityVerdict::Holds
        );
        assert!(matches!(
            check_trilinear_identity(&scalar_algebra(FamilyId::A2), &jacobi_identity()),
            IdentityVerdict::Fails(_, _, _)
        ));
    }
}
