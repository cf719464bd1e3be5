//! End-to-end verification of the catalog and the self-test report.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::duality::{self, DualityReport};
use crate::error::{Error, Result};
use crate::exact::{self, rat, Mat};
use crate::graded::{chevalley, CartanType, GradedContext};
use crate::lataut::{self, GramLattice};
use crate::realtype::{parse_type_label, run_pipeline, weights_match, Fingerprint, Pipeline};
use crate::sl2;
use crate::twostep::catalog::format_weights;
use crate::twostep::impossibility::impossibility_report;
use crate::twostep::{catalog, parse_tensor, tensor_to_lie, CatalogEntry, SkewTensor};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, expected: impl ToString, computed: impl ToString, pass: bool) -> Self {
        Check { name: name.to_string(), expected: expected.to_string(), computed: computed.to_string(), pass }
    }

    /// Passes iff the two renderings agree.
    pub fn eq(name: &str, expected: impl ToString, computed: impl ToString) -> Self {
        let (e, c) = (expected.to_string(), computed.to_string());
        let pass = e == c;
        Check { name: name.to_string(), expected: e, computed: c, pass }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RowRecord {
    pub table: u8,
    pub row: String,
    pub tensor: String,
    pub checks: Vec<Check>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<Fingerprint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub rows_passed: usize,
    pub checks: usize,
    pub checks_passed: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub report_version: u32,
    pub rows: Vec<RowRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duality: Option<DualityReport>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.summary.pass
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub table: Option<u8>,
    pub row: Option<String>,
    /// Worker threads; `0` uses the default pool.
    pub jobs: usize,
    pub timing: bool,
}

impl VerifyOptions {
    fn selects(&self, e: &CatalogEntry) -> bool {
        self.table.is_none_or(|t| t == e.table) && self.row.as_deref().is_none_or(|r| r == e.row)
    }
}

fn structural_checks(e: &CatalogEntry) -> Vec<Check> {
    let l = tensor_to_lie(&e.tensor);
    vec![
        Check::eq("nondegenerate", true, e.tensor.is_nondegenerate()),
        Check::eq("jacobi", true, l.satisfies_jacobi()),
        Check::eq("two_step", true, l.is_two_step()),
        Check::eq("center_dim", e.n, l.center().dim()),
        Check::eq("derived_dim", e.n, l.derived().dim()),
    ]
}

fn pipeline_checks(e: &CatalogEntry, p: &Pipeline) -> Result<Vec<Check>> {
    let ctx = GradedContext::get(e.m, e.n)?;
    let expected = parse_type_label(e.expected_gt)?;
    let d = &p.fingerprint.descriptor;
    let mut checks = vec![
        Check::eq("gt_dim", expected.total_dim, d.total_dim),
        Check::eq("gt_label", e.expected_gt, &d.type_label),
        Check::eq(
            "torus_signature",
            format!("({},{})", expected.split_tori, expected.compact_tori),
            format!("({},{})", d.center_sig.positive, d.center_sig.negative),
        ),
        Check::eq(
            "ss_killing_signature",
            format!("({},{})", expected.ss_sig.0, expected.ss_sig.1),
            format!("({},{})", d.ss_killing_sig.positive, d.ss_killing_sig.negative),
        ),
    ];
    if let (Some(eu), Some(ev)) = (e.weights_u(), e.weights_v()) {
        let expected = format!("U {} V {}", e.expected_weights_u.unwrap_or(""), e.expected_weights_v.unwrap_or(""));
        let check = match (&p.analysis.weights, &d.weights_u, &d.weights_v) {
            (Some(w), Some(cu), Some(cv)) => Check::new(
                "weights",
                expected,
                format!("U {} V {}", format_weights(cu), format_weights(cv)),
                weights_match(&w.ideals, &w.weights_u, &w.weights_v, &eu, &ev),
            ),
            _ => Check::new("weights", expected, "not split", false),
        };
        checks.push(check);
    }
    checks.push(Check::eq("triple_relations", true, p.triple.relations_hold(ctx)));
    let eig = p.triple.ad_h_eigenvalues(ctx);
    checks.push(Check::new(
        "ad_h_minpoly",
        "squarefree with integer roots",
        eig.as_ref().map_or_else(|e| e.to_string(), |v| format!("{v:?}")),
        eig.is_ok(),
    ));
    checks.push(Check::eq("centralizer_closed", true, sl2::verify_sl2_closure(&p.centralizer)));
    checks.push(Check::eq("centralizer_annihilates", true, sl2::annihilates(&p.centralizer, &e.tensor)));
    checks.push(Check::new(
        "gt_in_stabilizer",
        format!("dim gt + 1 <= dim ge = {}", p.fingerprint.dim_ge),
        d.total_dim + 1,
        d.total_dim < p.fingerprint.dim_ge,
    ));
    Ok(checks)
}

fn bis_check(e: &CatalogEntry, own: &Fingerprint, partner: &Fingerprint) -> Check {
    let complex = |f: &Fingerprint| (f.dim_ge, f.complex_rank, f.descriptor.total_dim);
    Check::new(
        "bis_separation",
        "fingerprints differ, complexified invariants agree",
        format!(
            "partner {}: differ={} dims {:?} vs {:?}",
            e.partner_row().unwrap_or_default(),
            own != partner,
            complex(own),
            complex(partner)
        ),
        own != partner && complex(own) == complex(partner),
    )
}

/// Runs the full pipeline on the selected rows. Failures become report entries.
pub fn verify_tables(opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let selected: Vec<&CatalogEntry> = catalog().iter().filter(|e| opts.selects(e)).collect();
    if selected.is_empty() {
        return Err(Error::UnknownRow { table: opts.table.unwrap_or(0), row: opts.row.clone().unwrap_or_default() });
    }
    let mut needed: Vec<&CatalogEntry> = selected.clone();
    for e in &selected {
        if let Some(p) = e.partner_row() {
            let partner = crate::twostep::lookup(e.table, &p)?;
            if !needed.iter().any(|x| x.id() == partner.id()) {
                needed.push(partner);
            }
        }
    }
    let run = || -> Vec<(String, std::result::Result<Pipeline, Error>)> {
        needed.par_iter().map(|e| (e.id(), run_pipeline(&e.tensor))).collect()
    };
    let results: BTreeMap<String, std::result::Result<Pipeline, Error>> = if opts.jobs > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build().map_err(|e| Error::Internal(e.to_string()))?.install(run)
    } else {
        run()
    }
    .into_iter()
    .collect();

    let duality = if selected.iter().any(|e| e.table == 3) { Some(duality::verify_duality_table()?) } else { None };

    let rows: Vec<RowRecord> = selected
        .iter()
        .map(|e| {
            let mut checks = structural_checks(e);
            let result = &results[&e.id()];
            let fingerprint = match result {
                Ok(p) => {
                    match pipeline_checks(e, p) {
                        Ok(c) => checks.extend(c),
                        Err(err) => checks.push(Check::new("pipeline_checks", "ok", err, false)),
                    }
                    Some(p.fingerprint.clone())
                }
                Err(err) => {
                    checks.push(Check::new("pipeline", "ok", err, false));
                    None
                }
            };
            if let (Some(own), Some(partner)) = (&fingerprint, e.partner_row()) {
                match &results[&format!("{}:{partner}", e.table)] {
                    Ok(p) => checks.push(bis_check(e, own, &p.fingerprint)),
                    Err(err) => checks.push(Check::new("bis_separation", "partner pipeline ok", err, false)),
                }
            }
            if let (3, Some(d)) = (e.table, &duality) {
                let class = d.class_of(e.row);
                checks.push(Check::new(
                    "dual_class",
                    "pairwise distinct classes covering all four",
                    class.map_or("missing".to_string(), |c| c.label().to_string()),
                    class.is_some() && d.pass(),
                ));
            }
            let pass = checks.iter().all(|c| c.pass);
            RowRecord { table: e.table, row: e.row.to_string(), tensor: e.source.to_string(), checks, pass, fingerprint }
        })
        .collect();

    let checks: Vec<&Check> = rows.iter().flat_map(|r| &r.checks).collect();
    let summary = Summary {
        rows: rows.len(),
        rows_passed: rows.iter().filter(|r| r.pass).count(),
        checks: checks.len(),
        checks_passed: checks.iter().filter(|c| c.pass).count(),
        pass: rows.iter().all(|r| r.pass),
    };
    Ok(VerificationReport {
        report_version: REPORT_VERSION,
        rows,
        duality,
        summary,
        wall_time_ms: opts.timing.then(|| start.elapsed().as_millis()),
    })
}

/// Fingerprint of an arbitrary tensor together with the catalog rows it matches.
#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub report_version: u32,
    pub tensor: String,
    pub fingerprint: Fingerprint,
    pub matches: Vec<String>,
}

pub fn catalog_fingerprints() -> Result<&'static [(String, Fingerprint)]> {
    static PRINTS: std::sync::OnceLock<std::result::Result<Vec<(String, Fingerprint)>, Error>> = std::sync::OnceLock::new();
    PRINTS
        .get_or_init(|| catalog().par_iter().map(|e| Ok((e.id(), crate::realtype::fingerprint(&e.tensor)?))).collect())
        .as_ref()
        .map(Vec::as_slice)
        .map_err(Clone::clone)
}

pub fn analyze(e: &SkewTensor) -> Result<AnalyzeReport> {
    let fingerprint = crate::realtype::fingerprint(e)?;
    let matches = catalog_fingerprints()?.iter().filter(|(_, f)| *f == fingerprint).map(|(id, _)| id.clone()).collect();
    Ok(AnalyzeReport { report_version: REPORT_VERSION, tensor: e.render_compact(), fingerprint, matches })
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub report_version: u32,
    pub checks: Vec<Check>,
    pub pass: bool,
}

/// Root-system and grading dimensions, exhaustive Jacobi on D7 and E7,
/// module identification, impossibility samples, exact-arithmetic spot
/// checks and the reference lattice.
pub fn selftest(seed: u64) -> Result<SelftestReport> {
    let mut checks = Vec::new();
    for (t, dim, pos) in [(CartanType::D(7), 91, 42), (CartanType::E(7), 133, 63)] {
        let chev = chevalley(t)?;
        checks.push(Check::eq(&format!("{t}_dim"), dim, chev.dim()));
        checks.push(Check::eq(&format!("{t}_positive_roots"), pos, chev.positive_count()));
        checks.push(Check::eq(&format!("{t}_jacobi"), true, chev.alg.satisfies_jacobi()));
    }
    for (m, n, g1) in [(6, 2, 30), (5, 3, 30), (4, 4, 24)] {
        let ctx = GradedContext::get(m, n)?;
        let name = format!("({m},{n})");
        checks.push(Check::eq(&format!("{name}_g1_dim"), g1, ctx.graded.piece(1).len()));
        checks.push(Check::eq(&format!("{name}_grading"), true, ctx.graded.grading_witness().is_none()));
        checks.push(Check::eq(&format!("{name}_g0_homomorphism"), true, ctx.ident.homomorphism_witness(&ctx.graded).is_none()));
        checks.push(Check::eq(&format!("{name}_module_iso_solution_dim"), 1, ctx.iso.solution_dim));
        checks.push(Check::eq(
            &format!("{name}_module_iso_equivariant"),
            true,
            ctx.iso.equivariance_witness(&ctx.graded, &ctx.ident).is_none(),
        ));
    }
    for r in impossibility_report(seed, 100) {
        checks.push(Check::new(&format!("impossible_({},{})", r.m, r.n), "no nondegenerate sample", r.nondegenerate_samples, r.pass()));
    }
    let sym = Mat::from_i64(3, 3, &[2, 1, 0, 1, -3, 4, 0, 4, 0]);
    let p = Mat::from_i64(3, 3, &[1, 2, 0, 0, 1, 5, 3, 0, 1]);
    checks.push(Check::eq("signature_congruence", format!("{:?}", sym.signature()?), format!("{:?}", sym.congruent(&p).signature()?)));
    let k = sym.kernel().len();
    checks.push(Check::eq("rank_nullity", sym.cols(), sym.rank() + k));
    checks.push(Check::eq("inverse", true, sym.inverse().is_some_and(|i| i.mul(&sym) == Mat::identity(3))));
    checks.push(Check::eq("rational_parse", "-3/4", exact::rat::to_string(&(rat(-3) / rat(4)))));
    let all_round_trip = catalog().iter().all(|e| parse_tensor(&e.tensor.render(), e.m, e.n).as_ref() == Ok(&e.tensor));
    checks.push(Check::eq("parser_round_trip", true, all_round_trip));
    let group = GramLattice::new(lataut::reference_gram())?.aut_group()?;
    checks.push(Check::eq("lattice_order", 24, group.order));
    checks.push(Check::eq("lattice_generators", true, lataut::reference_generators().iter().all(|g| group.contains(g))));
    let pass = checks.iter().all(|c| c.pass);
    Ok(SelftestReport { report_version: REPORT_VERSION, checks, pass })
}
