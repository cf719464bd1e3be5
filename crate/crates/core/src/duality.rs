//! Duality `β ↦ β*` from `(m, n)` to `(m, C(m,2) − n)` and the Pfaffian
//! pencil classifier for signature `(4, 2)`.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, rat, Mat, Rat};
use crate::lie::Subspace;
use crate::realtype::{fingerprint, Fingerprint};
use crate::twostep::tensor::{binom2, pairs};
use crate::twostep::{catalog, parse_tensor, SkewTensor};

/// The dual tensor on `(ℚᵐ)*`, written in the dual basis.
///
/// Its values lie in `∧²(ℚᵐ)* / (ker β_*)^⊥`, identified with `ℚ^{n₂}` through
/// the coordinate vectors `e*_i ∧ e*_j` chosen greedily in lexicographic order
/// as a complement of the annihilator.
pub fn dualize(e: &SkewTensor) -> Result<SkewTensor> {
    if !e.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let (m, n) = e.signature();
    let p = binom2(m);
    let beta = e.beta_star();
    // (ker β_*)^⊥ is the row space of β_*
    let annihilator = Subspace::span(p, &(0..n).map(|r| beta.row(r).to_vec()).collect::<Vec<_>>());
    let complement = annihilator.coordinate_complement();
    let n2 = complement.len();
    debug_assert_eq!(n2, p - n);
    let mut basis: Vec<Vec<Rat>> = complement.iter().map(|&c| exact::unit_vec(p, c)).collect();
    basis.extend(annihilator.basis().iter().cloned());
    let change = Mat::from_cols(p, &basis).inverse().ok_or_else(|| Error::Internal("complement is not a basis".into()))?;
    let mut out = SkewTensor::zero(m, n2);
    for (idx, (i, j)) in pairs(m).into_iter().enumerate() {
        for k in 0..n2 {
            let c = change[(k, idx)].clone();
            if !c.is_zero() {
                out.add_term(i + 1, j + 1, m + k + 1, c)?;
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PencilTag {
    CommonRadical,
    DiscZero,
    DiscPos,
    DiscNeg,
}

impl PencilTag {
    pub const ALL: [PencilTag; 4] = [PencilTag::CommonRadical, PencilTag::DiscZero, PencilTag::DiscPos, PencilTag::DiscNeg];

    /// Class name among the four real `(4,2)` classes. `DiscPos` is `ε = 1`
    /// since `Pf(xA + yB) = x² − εy²` for `e125+e136+εe246+e345`.
    pub fn label(self) -> &'static str {
        match self {
            PencilTag::CommonRadical => "beta_6_8",
            PencilTag::DiscZero => "beta_6_22(0)",
            PencilTag::DiscPos => "beta_6_22(1)",
            PencilTag::DiscNeg => "beta_6_22(-1)",
        }
    }

    /// Representative of the class.
    pub fn representative(self) -> SkewTensor {
        let src = match self {
            PencilTag::CommonRadical => "e125+e136",
            PencilTag::DiscZero => "e125+e136+e345",
            PencilTag::DiscPos => "e125+e136+e246+e345",
            PencilTag::DiscNeg => "e125+e136-e246+e345",
        };
        parse_tensor(src, 4, 2).expect("representatives parse")
    }
}

impl fmt::Display for PencilTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PencilTag::CommonRadical => "COMMON_RADICAL",
            PencilTag::DiscZero => "DISC_ZERO",
            PencilTag::DiscPos => "DISC_POS",
            PencilTag::DiscNeg => "DISC_NEG",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PencilClass {
    pub tag: PencilTag,
    pub label: &'static str,
    /// Coefficients `(a, b, c)` of `q = a x² + b xy + c y²`.
    #[serde(serialize_with = "ser_rats")]
    pub quadratic: [Rat; 3],
    #[serde(serialize_with = "ser_rat")]
    pub discriminant: Rat,
}

fn ser_rats<S: serde::Serializer>(v: &[Rat; 3], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(3))?;
    for x in v {
        seq.serialize_element(&exact::rat::to_string(x))?;
    }
    seq.end()
}

fn ser_rat<S: serde::Serializer>(v: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&exact::rat::to_string(v))
}

/// `Pf = a₁₂a₃₄ − a₁₃a₂₄ + a₁₄a₂₃` of a 4×4 skew matrix.
pub fn pfaffian4(a: &Mat) -> Rat {
    &a[(0, 1)] * &a[(2, 3)] - &a[(0, 2)] * &a[(1, 3)] + &a[(0, 3)] * &a[(1, 2)]
}

/// The two skew matrices of a `(4,2)` tensor.
pub fn pencil(e: &SkewTensor) -> Result<(Mat, Mat)> {
    if e.signature() != (4, 2) {
        return Err(Error::UnsupportedSignature(e.m(), e.n()));
    }
    let d = e.dense();
    let comp = |k: usize| {
        let mut a = Mat::zeros(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                a[(i, j)] = d[i][j][k].clone();
            }
        }
        a
    };
    Ok((comp(0), comp(1)))
}

pub fn pfaffian_pencil_classify(e: &SkewTensor) -> Result<PencilClass> {
    let (a, b) = pencil(e)?;
    // Pf(xA + yB) is quadratic: read off a, c and a + b + c
    let qa = pfaffian4(&a);
    let qc = pfaffian4(&b);
    let qb = pfaffian4(&a.add(&b)) - &qa - &qc;
    let disc = &qb * &qb - rat(4) * &qa * &qc;
    let tag = if e.radical().dim() > 0 {
        PencilTag::CommonRadical
    } else if disc.is_zero() {
        PencilTag::DiscZero
    } else if disc.is_positive() {
        PencilTag::DiscPos
    } else {
        PencilTag::DiscNeg
    };
    Ok(PencilClass { tag, label: tag.label(), quadratic: [qa, qb, qc], discriminant: disc })
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityRow {
    pub row: String,
    pub dual: String,
    pub class: PencilClass,
}

/// Dual of a class representative, matched back to a `(4,4)` row by fingerprint.
#[derive(Clone, Debug, Serialize)]
pub struct DoubleDual {
    pub class: PencilTag,
    pub dual: String,
    pub fingerprint_row: Option<String>,
    pub redualized: PencilTag,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub rows: Vec<DualityRow>,
    pub distinct: bool,
    pub covers_all_classes: bool,
    pub bis_pairs_separated: bool,
    pub double_duals: Vec<DoubleDual>,
}

impl DualityReport {
    pub fn class_of(&self, row: &str) -> Option<PencilTag> {
        self.rows.iter().find(|r| r.row == row).map(|r| r.class.tag)
    }

    /// Each representative's dual returns to its own class and has the
    /// fingerprint of the row assigned to that class.
    pub fn double_duals_consistent(&self) -> bool {
        self.double_duals
            .iter()
            .all(|d| d.redualized == d.class && d.fingerprint_row.as_deref().and_then(|r| self.class_of(r)) == Some(d.class))
    }

    pub fn pass(&self) -> bool {
        self.distinct && self.covers_all_classes && self.bis_pairs_separated && self.double_duals_consistent()
    }
}

/// Dualizes the four `(4,4)` representatives and classifies each.
pub fn verify_duality_table() -> Result<DualityReport> {
    let rows: Vec<DualityRow> = catalog()
        .iter()
        .filter(|e| e.table == 3)
        .map(|e| {
            let dual = dualize(&e.tensor)?;
            Ok(DualityRow { row: e.row.to_string(), dual: dual.render_compact(), class: pfaffian_pencil_classify(&dual)? })
        })
        .collect::<Result<_>>()?;
    let mut tags: Vec<PencilTag> = rows.iter().map(|r| r.class.tag).collect();
    tags.sort();
    let distinct = tags.windows(2).all(|w| w[0] != w[1]);
    let covers_all_classes = tags == PencilTag::ALL.to_vec();
    let class_of = |row: &str| rows.iter().find(|r| r.row == row).map(|r| r.class.tag);
    let bis_pairs_separated =
        catalog().iter().filter(|e| e.table == 3 && e.is_bis()).all(|e| e.partner_row().is_some_and(|p| class_of(e.row) != class_of(&p)));
    let row_prints: Vec<(String, Fingerprint)> =
        catalog().iter().filter(|e| e.table == 3).map(|e| Ok((e.row.to_string(), fingerprint(&e.tensor)?))).collect::<Result<_>>()?;
    let double_duals = PencilTag::ALL
        .iter()
        .map(|&class| {
            let dual = dualize(&class.representative())?;
            let print = fingerprint(&dual)?;
            let fingerprint_row = row_prints.iter().find(|(_, f)| *f == print).map(|(r, _)| r.clone());
            let redualized = pfaffian_pencil_classify(&dualize(&dual)?)?.tag;
            Ok(DoubleDual { class, dual: dual.render_compact(), fingerprint_row, redualized })
        })
        .collect::<Result<_>>()?;
    Ok(DualityReport { rows, distinct, covers_all_classes, bis_pairs_separated, double_duals })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representatives_classify_to_themselves() {
        for tag in PencilTag::ALL {
            assert_eq!(pfaffian_pencil_classify(&tag.representative()).unwrap().tag, tag);
        }
    }

    #[test]
    fn pencil_quadratic_of_beta_6_22() {
        let c = pfaffian_pencil_classify(&PencilTag::DiscNeg.representative()).unwrap();
        // x² + y²
        assert_eq!(c.quadratic, [rat(1), rat(0), rat(1)]);
        assert_eq!(c.discriminant, rat(-4));
    }

    #[test]
    fn dual_signature() {
        let e = catalog::lookup(3, "1").unwrap();
        let d = dualize(&e.tensor).unwrap();
        assert_eq!(d.signature(), (4, 2));
        let dd = dualize(&d).unwrap();
        assert_eq!(dd.signature(), (4, 4));
        assert!(dualize(&SkewTensor::zero(4, 2)).is_err());
    }

    #[test]
    fn table_dictionary() {
        let r = verify_duality_table().unwrap();
        assert!(r.pass(), "{r:?}");
        let got: Vec<(&str, PencilTag)> = r.rows.iter().map(|x| (x.row.as_str(), x.class.tag)).collect();
        assert_eq!(
            got,
            [("1", PencilTag::DiscPos), ("1-bis", PencilTag::DiscNeg), ("2", PencilTag::DiscZero), ("3", PencilTag::CommonRadical)]
        );
    }

    #[test]
    fn wrong_signature_rejected() {
        assert!(pfaffian_pencil_classify(&SkewTensor::zero(4, 4)).is_err());
    }
}
