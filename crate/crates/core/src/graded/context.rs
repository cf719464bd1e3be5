//! Per-signature graded data, built once per process.

use std::sync::{Arc, OnceLock};

use super::chevalley::ChevalleyAlgebra;
use super::grading::{ambient_type, find_node, GradedAlgebra};
use super::identify::{G0Identification, ModuleIso};
use super::roots::CartanType;
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct GradedContext {
    pub m: usize,
    pub n: usize,
    pub graded: GradedAlgebra,
    pub ident: G0Identification,
    pub iso: ModuleIso,
    /// Orientation attempts rejected before the accepted one.
    pub rejected_orientations: usize,
}

pub fn chevalley(t: CartanType) -> Result<Arc<ChevalleyAlgebra>> {
    static E7: OnceLock<Arc<ChevalleyAlgebra>> = OnceLock::new();
    static D7: OnceLock<Arc<ChevalleyAlgebra>> = OnceLock::new();
    let cell = match t {
        CartanType::E(7) => &E7,
        CartanType::D(7) => &D7,
        other => return ChevalleyAlgebra::new(other).map(Arc::new),
    };
    Ok(cell.get_or_init(|| Arc::new(ChevalleyAlgebra::new(t).expect("E7 and D7 are supported"))).clone())
}

impl GradedContext {
    /// Grades the ambient algebra by the node of the signature and searches
    /// chain orientations (and, for `m = n`, chain assignments) for an
    /// identification that admits the module isomorphism.
    pub fn build(m: usize, n: usize) -> Result<Self> {
        let chev = chevalley(ambient_type(m, n)?)?;
        let (node, u, v) = find_node(&chev, m, n)?;
        let graded = GradedAlgebra::new(chev, node)?;
        let rev = |c: &[usize]| c.iter().rev().copied().collect::<Vec<_>>();
        let mut assignments = vec![(u.clone(), v.clone())];
        if m == n {
            assignments.push((v.clone(), u.clone()));
        }
        let mut rejected = 0;
        let mut last_err = Error::ModuleIso(0);
        for (uc, vc) in assignments {
            for (ru, rv) in [(false, false), (false, true), (true, false), (true, true)] {
                let uc = if ru { rev(&uc) } else { uc.clone() };
                let vc = if rv { rev(&vc) } else { vc.clone() };
                let ident = G0Identification::new(&graded, m, n, &uc, &vc)?;
                match ModuleIso::new(&graded, &ident) {
                    Ok(iso) => return Ok(GradedContext { m, n, graded, ident, iso, rejected_orientations: rejected }),
                    Err(e) => {
                        rejected += 1;
                        last_err = e;
                    }
                }
            }
        }
        Err(last_err)
    }

    /// Cached context for `(6,2)`, `(5,3)` or `(4,4)`.
    pub fn get(m: usize, n: usize) -> Result<&'static GradedContext> {
        static CTX: [OnceLock<std::result::Result<GradedContext, Error>>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        let slot = match (m, n) {
            (6, 2) => 0,
            (5, 3) => 1,
            (4, 4) => 2,
            _ => return Err(Error::UnsupportedSignature(m, n)),
        };
        CTX[slot].get_or_init(|| GradedContext::build(m, n)).as_ref().map_err(Clone::clone)
    }

    pub fn dim(&self) -> usize {
        self.graded.dim()
    }
}
