//! Frozen values: complex ranks, stabilizer dimensions, canonical weights,
//! `ad h` spectra and the pencil classes of the (4,4) duals.

use nilreal::duality::{verify_duality_table, PencilTag};
use nilreal::graded::GradedContext;
use nilreal::report::catalog_fingerprints;
use nilreal::sl2;
use nilreal::twostep::catalog;
use nilreal::twostep::catalog::format_weights;

/// `(row, dim 𝔤ₑ, complex rank, type, weights on U, weights on V)`.
type Golden = (&'static str, usize, usize, &'static str, Option<&'static str>, Option<&'static str>);

#[rustfmt::skip]
const FINGERPRINTS: [Golden; 27] = [
    ("1:1", 10, 3, "3*sl2R", Some("(1,0,0)+(0,1,0)+(0,0,1)"), Some("(0,0,0)+(0,0,0)")),
    ("1:1-bis", 10, 3, "sl2C+sl2R", None, None),
    ("1:2", 11, 3, "2*sl2R+t", Some("(1,0)+(1,0)+(0,1)"), Some("(0,0)+(0,0)")),
    ("1:3", 12, 2, "sl2R+t", Some("(1)+(1)+(1)"), Some("(0)+(0)")),
    ("1:4", 14, 3, "2*sl2R+t", Some("(1,1)+(1,0)"), Some("(0,1)")),
    ("1:5", 15, 4, "sp4R+sl2R+t", Some("(1,0,0)+(0,0,1)"), Some("(0,0,0)+(0,0,0)")),
    ("1:6", 16, 3, "2*sl2R+t", Some("(1,0)+(1,0)+(0,1)"), Some("(0,0)+(0,0)")),
    ("2:1", 4, 1, "sl2R", Some("(4)"), Some("(2)")),
    ("2:1-bis", 4, 1, "su2", None, None),
    ("2:2", 5, 2, "2t", None, None),
    ("2:2-bis", 5, 2, "t+u", None, None),
    ("2:3", 6, 2, "2t", None, None),
    ("2:3-bis", 6, 2, "t+u", None, None),
    ("2:4", 7, 2, "2t", None, None),
    ("2:5", 7, 3, "3t", None, None),
    ("2:5-bis", 7, 3, "2t+u", None, None),
    ("2:6", 8, 3, "3t", None, None),
    ("2:7", 9, 2, "2t", None, None),
    ("2:8", 10, 3, "2*sl2R+t", Some("(1,0)+(0,1)+(0,0)"), Some("(1,0)+(0,0)")),
    ("2:9", 11, 2, "sl2R+t", Some("(2)+(1)"), Some("(1)+(0)")),
    ("2:10", 11, 3, "sl2R+2t", Some("(1)+(1)+(0)"), Some("(1)+(0)")),
    ("2:11", 11, 4, "2*sl2R+2t", Some("(1,0)+(0,1)+(0,0)"), Some("(1,0)+(0,0)")),
    ("2:12", 12, 3, "3t", None, None),
    ("3:1", 8, 3, "2*sl2R+t", Some("(1,0)+(0,1)"), Some("(1,1)")),
    ("3:1-bis", 8, 3, "sl2C+u", None, None),
    ("3:2", 9, 2, "sl2R+t", Some("(1)+(1)"), Some("(2)+(0)")),
    ("3:3", 11, 3, "sl2R+2t", Some("(1)+(0)+(0)"), Some("(1)+(0)+(0)")),
];

/// Eigenvalues of `ad h` on the graded algebra, ascending.
#[rustfmt::skip]
const AD_H_SPECTRA: [(&str, &[i64]); 27] = [
    ("1:1", &[-6, -4, -2, 0, 2, 4, 6]),
    ("1:1-bis", &[-6, -4, -2, 0, 2, 4, 6]),
    ("1:2", &[-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6]),
    ("1:3", &[-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5]),
    ("1:4", &[-4, -2, 0, 2, 4]),
    ("1:5", &[-6, -4, -3, -2, -1, 0, 1, 2, 3, 4, 6]),
    ("1:6", &[-4, -3, -2, -1, 0, 1, 2, 3, 4]),
    ("2:1", &[-6, -4, -2, 0, 2, 4, 6]),
    ("2:1-bis", &[-6, -4, -2, 0, 2, 4, 6]),
    ("2:2", &[-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6]),
    ("2:2-bis", &[-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6]),
    ("2:3", &[-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6]),
    ("2:3-bis", &[-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6]),
    ("2:4", &[-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6]),
    ("2:5", &[-6, -4, -2, 0, 2, 4, 6]),
    ("2:5-bis", &[-6, -4, -2, 0, 2, 4, 6]),
    ("2:6", &[-6, -5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5, 6]),
    ("2:7", &[-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5]),
    ("2:8", &[-6, -4, -2, 0, 2, 4, 6]),
    ("2:9", &[-4, -2, 0, 2, 4]),
    ("2:10", &[-4, -2, 0, 2, 4]),
    ("2:11", &[-6, -4, -3, -2, -1, 0, 1, 2, 3, 4, 6]),
    ("2:12", &[-4, -3, -2, -1, 0, 1, 2, 3, 4]),
    ("3:1", &[-4, -2, 0, 2, 4]),
    ("3:1-bis", &[-4, -2, 0, 2, 4]),
    ("3:2", &[-4, -3, -2, -1, 0, 1, 2, 3, 4]),
    ("3:3", &[-4, -3, -2, -1, 0, 1, 2, 3, 4]),
];

#[test]
fn fingerprints_are_frozen() {
    let prints = catalog_fingerprints().unwrap();
    assert_eq!(prints.len(), FINGERPRINTS.len());
    for ((id, f), &(row, dim_ge, rank, label, wu, wv)) in prints.iter().zip(&FINGERPRINTS) {
        assert_eq!(id, row);
        let d = &f.descriptor;
        assert_eq!((f.dim_ge, f.complex_rank, d.type_label.as_str()), (dim_ge, rank, label), "{row}");
        assert_eq!(d.weights_u.as_ref().map(format_weights).as_deref(), wu, "{row}");
        assert_eq!(d.weights_v.as_ref().map(format_weights).as_deref(), wv, "{row}");
    }
}

#[test]
fn ad_h_spectra_are_frozen() {
    for (e, &(row, spectrum)) in catalog().iter().zip(&AD_H_SPECTRA) {
        assert_eq!(e.id(), row);
        let ctx = GradedContext::get(e.m, e.n).unwrap();
        let t = sl2::embed_triple(ctx, &sl2::lift(ctx, &e.tensor).unwrap()).unwrap();
        assert_eq!(t.ad_h_eigenvalues(ctx).unwrap(), spectrum, "{row}");
    }
}

#[test]
fn duality_dictionary_is_frozen() {
    let report = verify_duality_table().unwrap();
    let expected = [("1", PencilTag::DiscPos), ("1-bis", PencilTag::DiscNeg), ("2", PencilTag::DiscZero), ("3", PencilTag::CommonRadical)];
    for (row, tag) in expected {
        assert_eq!(report.class_of(row), Some(tag), "3:{row}");
    }
}
