//! The built-in catalog: seventeen families of complex 3-dimensional
//! nilalgebras plus the zero algebra, with canonical parameter
//! representatives and isomorphism certificates for the three parameter
//! identifications g3^α ≅ g3^{1/α}, A1^α ≅ A1^{1/α}, N6^α ≅ N6^{−α}.

use crate::algebra::Algebra;
use crate::matrix::Matrix;
use crate::scalar::{canonical_cmp, Scalar};
use crate::symbolic::{Polynomial, RationalFunction, Var};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("unknown family id {0:?}")]
    UnknownFamily(String),
    #[error("family {0} takes no parameter")]
    UnexpectedParameter(&'static str),
    #[error("family {0} requires a parameter (or symbolic instantiation)")]
    MissingParameter(&'static str),
}

/// Family identifiers, following the catalog's naming: `g1..g4` and
/// `A1..A3` are the anticommutative algebras, `N1..N6` the nil-index-3
/// script family, `rN1`/`rN2` the nil-index-4 pair, `bN1`/`bN2` the
/// nil-index-5 pair, and `C3` the zero algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    G1,
    G2,
    G3,
    G4,
    A1,
    A2,
    A3,
    N1,
    N2,
    N3,
    N4,
    N5,
    N6,
    RN1,
    RN2,
    BN1,
    BN2,
    Zero,
}

pub const ALL_FAMILIES: [FamilyId; 18] = [
    FamilyId::G1,
    FamilyId::G2,
    FamilyId::G3,
    FamilyId::G4,
    FamilyId::A1,
    FamilyId::A2,
    FamilyId::A3,
    FamilyId::N1,
    FamilyId::N2,
    FamilyId::N3,
    FamilyId::N4,
    FamilyId::N5,
    FamilyId::N6,
    FamilyId::RN1,
    FamilyId::RN2,
    FamilyId::BN1,
    FamilyId::BN2,
    FamilyId::Zero,
];

impl FamilyId {
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::G1 => "g1",
            FamilyId::G2 => "g2",
            FamilyId::G3 => "g3",
            FamilyId::G4 => "g4",
            FamilyId::A1 => "A1",
            FamilyId::A2 => "A2",
            FamilyId::A3 => "A3",
            FamilyId::N1 => "N1",
            FamilyId::N2 => "N2",
            FamilyId::N3 => "N3",
            FamilyId::N4 => "N4",
            FamilyId::N5 => "N5",
            FamilyId::N6 => "N6",
            FamilyId::RN1 => "rN1",
            FamilyId::RN2 => "rN2",
            FamilyId::BN1 => "bN1",
            FamilyId::BN2 => "bN2",
            FamilyId::Zero => "C3",
        }
    }

    pub fn from_name(s: &str) -> Result<FamilyId, CatalogError> {
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| CatalogError::UnknownFamily(s.to_string()))
    }

    pub fn is_parametric(self) -> bool {
        matches!(
            self,
            FamilyId::G3 | FamilyId::A1 | FamilyId::N6 | FamilyId::RN2
        )
    }

    /// Identification on the parameter space, when the family has one.
    pub fn identification(self) -> Option<ParamIdentification> {
        match self {
            FamilyId::G3 | FamilyId::A1 => Some(ParamIdentification::Inverse),
            FamilyId::N6 => Some(ParamIdentification::Negation),
            FamilyId::RN2 => Some(ParamIdentification::Trivial),
            _ => None,
        }
    }

    /// Expected nil index of every member (for parametric families, of every
    /// parameter value).
    pub fn nil_index(self) -> usize {
        match self {
            FamilyId::G1
            | FamilyId::G2
            | FamilyId::G3
            | FamilyId::G4
            | FamilyId::A1
            | FamilyId::A2
            | FamilyId::A3
            | FamilyId::Zero => 2,
            FamilyId::N1
            | FamilyId::N2
            | FamilyId::N3
            | FamilyId::N4
            | FamilyId::N5
            | FamilyId::N6 => 3,
            FamilyId::RN1 | FamilyId::RN2 => 4,
            FamilyId::BN1 | FamilyId::BN2 => 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamIdentification {
    /// α ~ α⁻¹ (0 is its own class).
    Inverse,
    /// α ~ −α.
    Negation,
    /// every α is its own class.
    Trivial,
}

/// A family together with an optional parameter value. A parametric family
/// without a value denotes the symbolic member (table in `alpha`).
#[derive(Debug, Clone, PartialEq)]
pub struct CatalogLabel {
    pub family: FamilyId,
    pub param: Option<Scalar>,
}

impl CatalogLabel {
    pub fn plain(family: FamilyId) -> CatalogLabel {
        CatalogLabel {
            family,
            param: None,
        }
    }

    pub fn with_param(family: FamilyId, param: Scalar) -> CatalogLabel {
        CatalogLabel {
            family,
            param: Some(param),
        }
    }

    /// Canonicalize the parameter under the family identification.
    pub fn canonical(&self) -> CatalogLabel {
        match (&self.param, self.family.identification()) {
            (Some(p), Some(_)) => {
                CatalogLabel::with_param(self.family, canonical_parameter(self.family, p))
            }
            _ => self.clone(),
        }
    }
}

impl fmt::Display for CatalogLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.param {
            Some(p) => write!(f, "{}({})", self.family.name(), p),
            None => write!(f, "{}", self.family.name()),
        }
    }
}

/// Raw table of a family, 1-based (i, j, k, coefficient-in-alpha) entries.
/// The coefficient is a polynomial in `alpha` with integer coefficients,
/// encoded as (constant, alpha-coefficient).
fn raw_table(f: FamilyId) -> Vec<(usize, usize, usize, i64, i64)> {
    match f {
        FamilyId::G1 => vec![(2, 3, 1, 1, 0), (3, 2, 1, -1, 0)],
        FamilyId::G2 => vec![
            (1, 3, 1, 1, 0),
            (2, 3, 2, 1, 0),
            (3, 1, 1, -1, 0),
            (3, 2, 2, -1, 0),
        ],
        FamilyId::G3 => vec![
            (1, 3, 1, 1, 0),
            (1, 3, 2, 1, 0),
            (2, 3, 2, 0, 1),
            (3, 1, 1, -1, 0),
            (3, 1, 2, -1, 0),
            (3, 2, 2, 0, -1),
        ],
        FamilyId::G4 => vec![
            (1, 2, 3, 1, 0),
            (1, 3, 2, -1, 0),
            (2, 3, 1, 1, 0),
            (2, 1, 3, -1, 0),
            (3, 1, 2, 1, 0),
            (3, 2, 1, -1, 0),
        ],
        FamilyId::A1 => vec![
            (1, 2, 3, 1, 0),
            (1, 3, 1, 1, 0),
            (1, 3, 3, 1, 0),
            (2, 3, 2, 0, 1),
            (2, 1, 3, -1, 0),
            (3, 1, 1, -1, 0),
            (3, 1, 3, -1, 0),
            (3, 2, 2, 0, -1),
        ],
        FamilyId::A2 => vec![
            (1, 2, 1, 1, 0),
            (2, 3, 2, 1, 0),
            (2, 1, 1, -1, 0),
            (3, 2, 2, -1, 0),
        ],
        FamilyId::A3 => vec![
            (1, 2, 3, 1, 0),
            (1, 3, 1, 1, 0),
            (2, 3, 2, 1, 0),
            (2, 1, 3, -1, 0),
            (3, 1, 1, -1, 0),
            (3, 2, 2, -1, 0),
        ],
        FamilyId::N1 => vec![(1, 1, 2, 1, 0)],
        FamilyId::N2 => vec![(1, 1, 2, 1, 0), (1, 3, 1, 1, 0), (3, 1, 1, -1, 0)],
        FamilyId::N3 => vec![(1, 1, 2, 1, 0), (1, 3, 3, 1, 0), (3, 1, 3, -1, 0)],
        FamilyId::N4 => vec![(1, 1, 2, 1, 0), (1, 3, 2, 1, 0), (3, 1, 2, -1, 0)],
        FamilyId::N5 => vec![
            (1, 1, 2, 1, 0),
            (1, 3, 3, 1, 0),
            (3, 1, 3, -1, 0),
            (3, 3, 2, 1, 0),
        ],
        FamilyId::N6 => vec![
            (1, 1, 2, 1, 0),
            (1, 3, 2, 0, 1),
            (3, 1, 2, 0, -1),
            (3, 3, 2, 1, 0),
        ],
        FamilyId::RN1 => vec![(1, 1, 2, 1, 0), (2, 1, 3, 1, 0)],
        FamilyId::RN2 => vec![(1, 1, 2, 1, 0), (1, 2, 3, 1, 0), (2, 1, 3, 0, 1)],
        FamilyId::BN1 => vec![(1, 1, 2, 1, 0), (2, 2, 3, 1, 0)],
        FamilyId::BN2 => vec![(1, 1, 2, 1, 0), (2, 1, 3, 1, 0), (2, 2, 3, 1, 0)],
        FamilyId::Zero => vec![],
    }
}

/// The symbolic member of a family: table entries polynomial in `alpha`.
pub fn symbolic_member(f: FamilyId) -> Algebra {
    let entries: Vec<(usize, usize, usize, RationalFunction)> = raw_table(f)
        .into_iter()
        .map(|(i, j, k, c0, c1)| {
            let p = Polynomial::from_int(c0)
                .add(&Polynomial::var(Var::Alpha).scale(&Scalar::from_int(c1)));
            (i, j, k, RationalFunction::from_poly(p))
        })
        .collect();
    let params = if f.is_parametric() {
        vec![Var::Alpha]
    } else {
        vec![]
    };
    Algebra::from_entries(3, params, &entries).expect("catalog tables are well-formed")
}

/// Instantiate a label: the exact table, with the parameter substituted.
pub fn instantiate(label: &CatalogLabel) -> Result<Algebra, CatalogError> {
    let a = symbolic_member(label.family);
    match (&label.param, label.family.is_parametric()) {
        (Some(p), true) => Ok(a.instantiate_param(Var::Alpha, p)),
        (None, true) => Ok(a),
        (Some(_), false) => Err(CatalogError::UnexpectedParameter(label.family.name())),
        (None, false) => Ok(a),
    }
}

/// Deterministic representative of the identification class of α.
///
/// For {α, α⁻¹} and {α, −α} the minimum under the canonical scalar order is
/// chosen; fixed points map to themselves, and α = 0 has no inverse so it is
/// its own class for inverse-type identifications.
pub fn canonical_parameter(family: FamilyId, alpha: &Scalar) -> Scalar {
    match family.identification() {
        None | Some(ParamIdentification::Trivial) => alpha.clone(),
        Some(ParamIdentification::Negation) => {
            let neg = alpha.neg();
            if canonical_cmp(alpha, &neg).is_le() {
                alpha.clone()
            } else {
                neg
            }
        }
        Some(ParamIdentification::Inverse) => {
            if alpha.is_zero() {
                return alpha.clone();
            }
            let inv = alpha.inv().expect("nonzero");
            if canonical_cmp(alpha, &inv).is_le() {
                alpha.clone()
            } else {
                inv
            }
        }
    }
}

/// Basis-change certificate rows realizing the identification
/// `family(α) → family(σ(α))` (σ = inverse or negation), symbolically in α.
///
/// Rows are the new basis in the old coordinates; transforming the symbolic
/// member by these rows yields the table of the identified member.
pub fn identification_certificate(family: FamilyId) -> Option<Matrix<RationalFunction>> {
    let a = RationalFunction::var(Var::Alpha);
    let one = RationalFunction::one();
    let zero = RationalFunction::zero();
    let inv_a = one.div(&a).expect("alpha is a nonzero symbol");
    match family {
        // g3^α ≅ g3^{1/α} via (e1, ((1−α)/α)e1 + (1/α)e2, (1/α)e3)
        FamilyId::G3 => {
            let c = one.sub(&a).div(&a).unwrap();
            Some(Matrix::from_rows(vec![
                vec![one.clone(), zero.clone(), zero.clone()],
                vec![c, inv_a.clone(), zero.clone()],
                vec![zero.clone(), zero, inv_a],
            ]))
        }
        // A1^α ≅ A1^{1/α} via
        // (e1, ((1+α)(1−α²)/α²)e1 + e2 + ((1−α²)/α²)e3, ((1−α²)/α²)e1 + (1/α²)e3)
        FamilyId::A1 => {
            let a2 = a.mul(&a);
            let q = one.sub(&a2).div(&a2).unwrap(); // (1−α²)/α²
            let p = one.add(&a).mul(&q); // (1+α)(1−α²)/α²
            let inv_a2 = one.div(&a2).unwrap();
            Some(Matrix::from_rows(vec![
                vec![one.clone(), zero.clone(), zero.clone()],
                vec![p, one.clone(), q.clone()],
                vec![q, zero, inv_a2],
            ]))
        }
        // N6^α ≅ N6^{−α} via e3 ↦ −e3
        FamilyId::N6 => Some(Matrix::from_rows(vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), zero, one.neg()],
        ])),
        _ => None,
    }
}

/// The identified symbolic member the certificate lands on: α ↦ σ(α).
pub fn identification_image(family: FamilyId) -> Option<Algebra> {
    let a = symbolic_member(family);
    match family.identification()? {
        ParamIdentification::Inverse => {
            let inv = RationalFunction::one()
                .div(&RationalFunction::var(Var::Alpha))
                .unwrap();
            Some(a.substitute_param(Var::Alpha, &inv))
        }
        ParamIdentification::Negation => Some(a.substitute_param(
            Var::Alpha,
            &RationalFunction::var(Var::Alpha).neg(),
        )),
        ParamIdentification::Trivial => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n5_table_matches_catalog() {
        let a = instantiate(&CatalogLabel::plain(FamilyId::N5)).unwrap();
        let entries = a.entries();
        let shown: Vec<(usize, usize, usize, String)> = entries
            .iter()
            .map(|(i, j, k, c)| (*i, *j, *k, c.to_string()))
            .collect();
        assert_eq!(
            shown,
            vec![
                (1, 1, 2, "1".to_string()),
                (1, 3, 3, "1".to_string()),
                (3, 1, 3, "-1".to_string()),
                (3, 3, 2, "1".to_string()),
            ]
        );
    }

    #[test]
    fn g4_has_six_products() {
        let a = instantiate(&CatalogLabel::plain(FamilyId::G4)).unwrap();
        assert_eq!(a.entries().len(), 6);
        assert!(a.is_anticommutative());
    }

    #[test]
    fn zero_algebra_is_zero() {
        let a = instantiate(&CatalogLabel::plain(FamilyId::Zero)).unwrap();
        assert!(a.is_zero_table());
    }

    #[test]
    fn parameter_validation() {
        assert!(instantiate(&CatalogLabel::with_param(FamilyId::G1, Scalar::one())).is_err());
        let sym = instantiate(&CatalogLabel::plain(FamilyId::N6)).unwrap();
        assert_eq!(sym.params(), &[Var::Alpha]);
    }

    #[test]
    fn canonical_parameter_examples() {
        // N6: α = −5 → 5 (positive preferred at equal magnitude)
        assert_eq!(
            canonical_parameter(FamilyId::N6, &Scalar::from_int(-5)),
            Scalar::from_int(5)
        );
        // g3: α = 1 is a fixed point of α ↦ 1/α
        assert_eq!(
            canonical_parameter(FamilyId::G3, &Scalar::one()),
            Scalar::one()
        );
        // A1: 2 and 1/2 share a representative
        assert_eq!(
            canonical_parameter(FamilyId::A1, &Scalar::from_int(2)),
            canonical_parameter(FamilyId::A1, &Scalar::from_fraction(1, 2))
        );
        // inverse-type: 0 is its own class
        assert_eq!(
            canonical_parameter(FamilyId::A1, &Scalar::zero()),
            Scalar::zero()
        );
    }

    #[test]
    fn identification_certificates_verify_symbolically() {
        for f in [FamilyId::G3, FamilyId::A1, FamilyId::N6] {
            let cert = identification_certificate(f).unwrap();
            let src = symbolic_member(f);
            let got = src.transform_rf(&cert).unwrap();
            let want = identification_image(f).unwrap();
            assert_eq!(got, want, "identification certificate for {}", f.name());
        }
    }

    #[test]
    fn n6_certificate_at_concrete_value() {
        let cert = identification_certificate(FamilyId::N6).unwrap();
        let rows: Vec<Vec<RationalFunction>> = cert
            .rows_vec()
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|e| {
                        e.eval_var(Var::Alpha, &Scalar::from_int(5)).unwrap()
                    })
                    .collect()
            })
            .collect();
        let src = instantiate(&CatalogLabel::with_param(FamilyId::N6, Scalar::from_int(5)))
            .unwrap();
        let got = src.transform_rf(&Matrix::from_rows(rows)).unwrap();
        let want = instantiate(&CatalogLabel::with_param(FamilyId::N6, Scalar::from_int(-5)))
            .unwrap();
        assert_eq!(got, want);
    }
}
