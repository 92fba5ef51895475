//! Verdicts for pairs `(g, h)` and the two survey drivers.
//!
//! A pair is first tested for equal real ranks (no compact quotient by the
//! Calabi-Markus phenomenon). Otherwise `d = d(H)` is computed and the
//! degree-`d` coefficient is read off every candidate Poincaré polynomial of
//! `G_U/K`; if all vanish there is no compact Clifford-Klein form.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, RealForm, RealInvariants, RealSimpleAlgebra, SemisimpleRealAlgebra};
use crate::error::{Error, Result};
use crate::poincare::{self, DegreeData, IntPolynomial};
use crate::rootsys::SimpleType;
use crate::subalg::{self, CandidateList};

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    NoCK_CalabiMarkus,
    NoCK_Tholozan,
    Inconclusive,
}

impl Outcome {
    pub fn is_nock(self) -> bool {
        self != Outcome::Inconclusive
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub d: usize,
    pub rank_g: usize,
    pub rank_h: usize,
    /// Empty on the equal-rank branch.
    pub polynomials: Vec<IntPolynomial>,
    #[serde(with = "poincare::wire")]
    pub coefficients_at_d: Vec<BigInt>,
    /// Set only when `h = sl(2,R)`: whether the verdict agrees with the
    /// semisimple-`K` theorem for `sl(2,R)`, which always predicts NoCK.
    pub sl2_fast_path_agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub evidence: Evidence,
}

/// A non-compact simple `g` with semisimple `K`, with its candidate
/// polynomials computed once so that many subalgebras can be checked.
#[derive(Debug, Clone)]
pub struct Ambient {
    pub g: RealSimpleAlgebra,
    pub invariants: RealInvariants,
    pub degrees: DegreeData,
    pub polynomials: Vec<IntPolynomial>,
}

impl Ambient {
    pub fn new(g: RealSimpleAlgebra) -> Result<Self> {
        if g.is_compact() {
            return Err(Error::Input(format!("{g} is compact")));
        }
        let invariants = g.invariants();
        if invariants.torus_rank > 0 {
            return Err(Error::Input(format!(
                "maximal compact subalgebra of {g} has a center of dimension {}",
                invariants.torus_rank
            )));
        }
        let degrees = DegreeData::new(
            invariants.dual_degrees.clone(),
            invariants.max_compact.degrees(),
        )?;
        let polynomials: Vec<IntPolynomial> = poincare::candidate_polynomials(&degrees)?
            .into_iter()
            .collect();
        if polynomials.is_empty() {
            return Err(Error::Internal(format!(
                "no ordering of the degrees of {g} gives a polynomial"
            )));
        }
        Ok(Ambient {
            g,
            invariants,
            degrees,
            polynomials,
        })
    }

    pub fn check(&self, h: &SemisimpleRealAlgebra) -> Result<Verdict> {
        let g = &self.g;
        if h.is_empty() {
            return Err(Error::Input("h is the zero algebra".into()));
        }
        if h.dim() >= self.invariants.dim {
            return Err(Error::Input(format!(
                "dim {h} = {} is not smaller than dim {g} = {}",
                h.dim(),
                self.invariants.dim
            )));
        }
        let (d, rank_h) = catalog::sum_invariants(h);
        let rank_g = self.invariants.real_rank;
        if rank_h > rank_g {
            return Err(Error::Input(format!(
                "real rank of {h} ({rank_h}) exceeds that of {g} ({rank_g})"
            )));
        }
        let (outcome, polynomials, coefficients_at_d) = if rank_h == rank_g {
            (Outcome::NoCK_CalabiMarkus, vec![], vec![])
        } else {
            let coeffs: Vec<BigInt> = self.polynomials.iter().map(|p| p.coefficient(d)).collect();
            let outcome = if coeffs.iter().all(Zero::is_zero) {
                Outcome::NoCK_Tholozan
            } else {
                Outcome::Inconclusive
            };
            (outcome, self.polynomials.clone(), coeffs)
        };
        let sl2_fast_path_agrees = is_sl2r(h).then_some(outcome.is_nock());
        Ok(Verdict {
            outcome,
            evidence: Evidence {
                d,
                rank_g,
                rank_h,
                polynomials,
                coefficients_at_d,
                sl2_fast_path_agrees,
            },
        })
    }
}

fn is_sl2r(h: &SemisimpleRealAlgebra) -> bool {
    matches!(h.as_simple().map(|a| a.form()), Some(RealForm::SlR(2)))
}

/// Verdict for a single pair. The embedding `h ⊂ g` is assumed, not checked;
/// only real rank and dimension are sanity-checked.
pub fn check_pair(g: &RealSimpleAlgebra, h: &SemisimpleRealAlgebra) -> Result<Verdict> {
    Ambient::new(*g)?.check(h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub h: SemisimpleRealAlgebra,
    pub verdict: Verdict,
}

/// All checked rows for one ambient algebra, in canonical order.
#[derive(Debug, Clone)]
pub struct Survey {
    pub g: RealSimpleAlgebra,
    pub polynomials: Vec<IntPolynomial>,
    pub rows: Vec<SurveyRow>,
}

impl Survey {
    pub fn with_outcome(&self, outcome: Outcome) -> impl Iterator<Item = &SurveyRow> {
        self.rows
            .iter()
            .filter(move |r| r.verdict.outcome == outcome)
    }

    /// The subalgebras detected by the coefficient test.
    pub fn detected(&self) -> Vec<&SurveyRow> {
        self.with_outcome(Outcome::NoCK_Tholozan).collect()
    }
}

fn row_order(a: &SurveyRow, b: &SurveyRow) -> std::cmp::Ordering {
    (a.h.factors().len(), a.h.to_string()).cmp(&(b.h.factors().len(), b.h.to_string()))
}

/// Checks every entry against `ambient`; rows come back sorted by number of
/// factors, then canonical name. Repeated entries are kept.
pub fn survey_rows(ambient: &Ambient, entries: &[SemisimpleRealAlgebra]) -> Result<Survey> {
    let mut rows = entries
        .iter()
        .map(|h| {
            Ok(SurveyRow {
                h: h.clone(),
                verdict: ambient.check(h)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(row_order);
    Ok(Survey {
        g: ambient.g,
        polynomials: ambient.polynomials.clone(),
        rows,
    })
}

/// Split pairs: every regular semisimple subalgebra type of `t`, realized as
/// its split real form inside the split real form of `t`.
pub fn survey_split(t: SimpleType) -> Result<Survey> {
    let ambient = Ambient::new(catalog::split_form(t))?;
    let entries: Vec<SemisimpleRealAlgebra> = subalg::enumerate_regular_types(t)
        .iter()
        .map(|c| c.split_real_form())
        .collect();
    survey_rows(&ambient, &entries)
}

pub fn survey_candidates(g: &RealSimpleAlgebra, cl: &CandidateList) -> Result<Survey> {
    if cl.ambient != *g {
        return Err(Error::Input(format!(
            "candidate list is for {}, not {g}",
            cl.ambient
        )));
    }
    survey_rows(&Ambient::new(*g)?, &cl.entries)
}
