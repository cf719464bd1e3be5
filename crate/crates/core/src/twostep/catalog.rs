//! The 27 real orbit representatives in dimension 8 with their expected invariants.

use std::sync::OnceLock;

use super::parse::parse_tensor;
use super::tensor::SkewTensor;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub table: u8,
    pub row: &'static str,
    pub m: usize,
    pub n: usize,
    /// Tensor in compact notation, e.g. `e127+e348`.
    pub source: &'static str,
    /// Expected reductive centralizer, e.g. `2*sl2R+t`.
    pub expected_gt: &'static str,
    /// Component group of the stabilizer, carried unverified.
    pub expected_pi0: Option<&'static str>,
    pub expected_weights_u: Option<&'static str>,
    pub expected_weights_v: Option<&'static str>,
    pub tensor: SkewTensor,
}

impl CatalogEntry {
    pub fn id(&self) -> String {
        format!("{}:{}", self.table, self.row)
    }

    pub fn is_bis(&self) -> bool {
        self.row.ends_with("-bis")
    }

    /// Row label of the other real form in the same complex orbit, if any.
    pub fn partner_row(&self) -> Option<String> {
        if let Some(base) = self.row.strip_suffix("-bis") {
            return Some(base.to_string());
        }
        let bis = format!("{}-bis", self.row);
        catalog().iter().any(|e| e.table == self.table && e.row == bis).then_some(bis)
    }

    pub fn weights_u(&self) -> Option<WeightMultiset> {
        self.expected_weights_u.map(|s| parse_weights(s).expect("catalog weights are well formed"))
    }

    pub fn weights_v(&self) -> Option<WeightMultiset> {
        self.expected_weights_v.map(|s| parse_weights(s).expect("catalog weights are well formed"))
    }
}

/// Highest weights of the irreducible constituents, one Dynkin-label tuple each.
pub type WeightMultiset = Vec<Vec<i64>>;

/// Parses `(1,0)+(0,1)+(0,0)`.
pub fn parse_weights(src: &str) -> Result<WeightMultiset> {
    let bad = |msg: &str| Error::Invalid(format!("weight list {src:?}: {msg}"));
    src.split('+')
        .map(|part| {
            let inner =
                part.trim().strip_prefix('(').and_then(|p| p.strip_suffix(')')).ok_or_else(|| bad("expected parenthesized tuple"))?;
            inner.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| bad("expected integers"))).collect()
        })
        .collect()
}

pub fn format_weights(w: &WeightMultiset) -> String {
    w.iter().map(|t| format!("({})", t.iter().map(i64::to_string).collect::<Vec<_>>().join(","))).collect::<Vec<_>>().join("+")
}

type Row = (u8, &'static str, &'static str, &'static str, Option<&'static str>, Option<&'static str>, Option<&'static str>);

const ROWS: &[Row] = &[
    (1, "1", "e127+e348+e567+e568", "3*sl2R", Some("S3"), Some("(1,0,0)+(0,1,0)+(0,0,1)"), Some("(0,0,0)+(0,0,0)")),
    (1, "1-bis", "e127+e348-e367+e457-e568", "sl2C+sl2R", None, None, None),
    (1, "2", "e148+e157+e238+e467", "2*sl2R+t", Some("1"), Some("(1,0)+(1,0)+(0,1)"), Some("(0,0)+(0,0)")),
    (1, "3", "e148+e157+e238+e267+e347", "sl2R+t", Some("1"), Some("(1)+(1)+(1)"), Some("(0)+(0)")),
    (1, "4", "e137+e168+e248+e257", "2*sl2R+t", Some("1"), Some("(1,1)+(0,1)"), Some("(1,0)")),
    (1, "5", "e128+e347+e567", "sp4R+sl2R+t", Some("1"), Some("(1,0,0)+(0,0,1)"), Some("(0,0,0)+(0,0,0)")),
    (1, "6", "e128+e167+e257+e347", "2*sl2R+t", Some("1"), Some("(1,0)+(1,0)+(0,1)"), Some("(0,0)+(0,0)")),
    (2, "1", "e126+e158+e238+e257+e347+e456", "sl2R", Some("1"), Some("(4)"), Some("(2)")),
    (2, "1-bis", "e126-e158+2e236+2e248+e257-2e347-2e358+2e456", "su2", None, None, None),
    (2, "2", "e146+e157+e238+e247+e356", "2t", Some("C2"), None, None),
    (2, "2-bis", "e146-e157-e238+e246+e257+e347-e356", "t+u", None, None, None),
    (2, "3", "e148+e156+e237+e248+e346", "2t", Some("C2"), None, None),
    (2, "3-bis", "e138+e147+e156-e237+e248+e346", "t+u", None, None, None),
    (2, "4", "e128+e157+e237+e256+e346", "2t", Some("1"), None, None),
    (2, "5", "e136+e158+e247+e258", "3t", Some("S3"), None, None),
    (2, "5-bis", "e136+e148+e157-e247+e258", "2t+u", None, None, None),
    (2, "6", "e138+e157+e237+e246", "3t", Some("1"), None, None),
    (2, "7", "e138+e147+e156+e237+e246", "2t", Some("1"), None, None),
    (2, "8", "e127+e158+e256+e346", "2*sl2R+t", Some("1"), Some("(1,0)+(0,1)+(0,0)"), Some("(0,1)+(0,0)")),
    (2, "9", "e128+e136+e157+e247+e256", "sl2R+t", Some("1"), Some("(2)+(1)"), Some("(1)+(0)")),
    (2, "10", "e128+e146+e237+e356", "sl2R+2t", Some("1"), Some("(1)+(1)+(0)"), Some("(1)+(0)")),
    (2, "11", "e147+e158+e236", "2*sl2R+2t", Some("1"), Some("(1,0)+(0,1)+(0,0)"), Some("(1,0)+(0,0)")),
    (2, "12", "e128+e147+e156+e236", "3t", Some("1"), None, None),
    (3, "1", "e125+e137+e248+e346", "2*sl2R+t", Some("C2"), Some("(1,0)+(0,1)"), Some("(1,1)")),
    (3, "1-bis", "e125+e137-e148-e238-e247+e346", "sl2C+u", None, None, None),
    (3, "2", "e128+e135+e147+e237+e246", "sl2R+t", Some("1"), Some("(1)+(1)"), Some("(2)+(0)")),
    (3, "3", "e127+e138+e145+e236", "sl2R+2t", Some("1"), Some("(1)+(0)+(0)"), Some("(1)+(0)+(0)")),
];

pub fn table_signature(table: u8) -> Option<(usize, usize)> {
    match table {
        1 => Some((6, 2)),
        2 => Some((5, 3)),
        3 => Some((4, 4)),
        _ => None,
    }
}

/// All 27 entries ordered by table, then as listed.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        ROWS.iter()
            .map(|&(table, row, source, gt, pi0, wu, wv)| {
                let (m, n) = table_signature(table).expect("known table");
                let tensor = parse_tensor(source, m, n).expect("catalog tensors parse");
                CatalogEntry {
                    table,
                    row,
                    m,
                    n,
                    source,
                    expected_gt: gt,
                    expected_pi0: pi0,
                    expected_weights_u: wu,
                    expected_weights_v: wv,
                    tensor,
                }
            })
            .collect()
    })
}

pub fn lookup(table: u8, row: &str) -> Result<&'static CatalogEntry> {
    catalog().iter().find(|e| e.table == table && e.row == row).ok_or_else(|| Error::UnknownRow { table, row: row.to_string() })
}

/// `(base, bis)` pairs of real forms sharing a complex orbit.
pub fn bis_pairs() -> Vec<(&'static CatalogEntry, &'static CatalogEntry)> {
    catalog()
        .iter()
        .filter(|e| e.is_bis())
        .map(|bis| (lookup(bis.table, bis.row.trim_end_matches("-bis")).expect("base row exists"), bis))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_per_table() {
        let count = |t| catalog().iter().filter(|e| e.table == t).count();
        assert_eq!((count(1), count(2), count(3)), (7, 16, 4));
        assert_eq!(bis_pairs().len(), 6);
    }

    #[test]
    fn compact_source_round_trips() {
        for e in catalog() {
            assert_eq!(e.tensor.render_compact(), e.source, "{}", e.id());
        }
    }

    #[test]
    fn weight_dimensions_fit_modules() {
        // sum of constituent dimensions for single-ideal sl2 rows
        for e in catalog().iter().filter(|e| e.expected_gt.starts_with("sl2R+") || e.expected_gt == "sl2R") {
            let dim = |w: WeightMultiset| w.iter().map(|t| t[0] as usize + 1).sum::<usize>();
            assert_eq!(dim(e.weights_u().unwrap()), e.m, "{}", e.id());
            assert_eq!(dim(e.weights_v().unwrap()), e.n, "{}", e.id());
        }
    }

    #[test]
    fn unknown_row() {
        assert!(matches!(lookup(1, "99"), Err(Error::UnknownRow { .. })));
        assert_eq!(lookup(2, "3-bis").unwrap().partner_row().as_deref(), Some("3"));
        assert_eq!(lookup(2, "4").unwrap().partner_row(), None);
    }
}
