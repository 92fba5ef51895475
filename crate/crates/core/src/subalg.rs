//! Candidate subalgebra lists.
//!
//! Complex regular semisimple subalgebra types are enumerated by closing the
//! ambient diagram under two moves: deleting nodes, and replacing a connected
//! component by its extended diagram with one node removed. Only isomorphism
//! types are tracked, so the state of the closure is a multiset of simple
//! types and each move acts on a single factor.
//!
//! Real candidate lists are read from JSON files of the form
//! `{"ambient": "e6(6)", "candidates": ["sl(2,R)", ...]}`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, RealSimpleAlgebra, SemisimpleRealAlgebra};
use crate::error::{Error, Result};
use crate::rootsys::{extended_diagram, DynkinDiagram, SimpleType};

/// A complex semisimple type as a multiset of simple factors, stored in
/// descending `(family, rank)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComplexSemisimpleType {
    factors: Vec<SimpleType>,
}

impl ComplexSemisimpleType {
    pub fn new(mut factors: Vec<SimpleType>) -> Self {
        factors.sort_unstable_by(|a, b| b.cmp(a));
        ComplexSemisimpleType { factors }
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The split real form, factor by factor.
    pub fn split_real_form(&self) -> SemisimpleRealAlgebra {
        SemisimpleRealAlgebra::from_factors(
            self.factors
                .iter()
                .map(|&t| catalog::split_form(t))
                .collect(),
        )
    }
}

impl fmt::Display for ComplexSemisimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

fn component_types(d: &DynkinDiagram) -> Vec<SimpleType> {
    d.components()
        .iter()
        .map(|c| {
            c.classify()
                .expect("subdiagrams of finite-type diagrams are of finite type")
        })
        .collect()
}

/// Results of deleting any nonempty set of nodes from the diagram of `t`
/// (the empty multiset included, for deleting everything).
pub fn node_deletions(t: SimpleType) -> BTreeSet<Vec<SimpleType>> {
    let diagram = DynkinDiagram::of(t);
    let n = diagram.len();
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let removed: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let mut types = component_types(&diagram.remove_nodes(&removed));
        types.sort_unstable();
        out.insert(types);
    }
    out
}

/// Results of deleting one node from the extended diagram of `t`.
pub fn extended_deletions(t: SimpleType) -> BTreeSet<Vec<SimpleType>> {
    let ext = extended_diagram(t);
    (0..ext.len())
        .map(|i| {
            let mut types = component_types(&ext.remove_nodes(&[i]));
            types.sort_unstable();
            types
        })
        .collect()
}

/// Every isomorphism type of regular semisimple subalgebra of `t`, other
/// than `t` itself.
pub fn enumerate_regular_types(t: SimpleType) -> BTreeSet<ComplexSemisimpleType> {
    let mut moves: HashMap<SimpleType, Vec<Vec<SimpleType>>> = HashMap::new();
    let start = ComplexSemisimpleType::new(vec![t]);
    let mut seen: BTreeSet<ComplexSemisimpleType> = BTreeSet::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start.clone());
    while let Some(state) = queue.pop_front() {
        let mut distinct = state.factors.clone();
        distinct.dedup();
        for factor in distinct {
            let replacements = moves.entry(factor).or_insert_with(|| {
                node_deletions(factor)
                    .into_iter()
                    .chain(extended_deletions(factor))
                    .collect()
            });
            let pos = state.factors.iter().position(|&f| f == factor).unwrap();
            for r in replacements.iter() {
                let mut next = state.factors.clone();
                next.remove(pos);
                next.extend(r.iter().copied());
                if next.is_empty() {
                    continue;
                }
                let next = ComplexSemisimpleType::new(next);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen.remove(&start);
    seen
}

/// A list of real subalgebras of `ambient` to be checked.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateList {
    pub ambient: RealSimpleAlgebra,
    pub entries: Vec<SemisimpleRealAlgebra>,
    pub source: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CandidateFile {
    pub ambient: String,
    pub candidates: Vec<String>,
}

/// Parses candidate-file JSON; `source` is recorded as provenance.
pub fn parse_candidates(text: &str, source: &str) -> Result<CandidateList> {
    let file: CandidateFile = serde_json::from_str(text)?;
    let ambient_sum = catalog::parse_algebra(&file.ambient)
        .map_err(|e| Error::Candidates(format!("ambient '{}': {e}", file.ambient)))?;
    let ambient = *ambient_sum
        .as_simple()
        .ok_or_else(|| Error::Candidates(format!("ambient '{}' is not simple", file.ambient)))?;
    if file.candidates.is_empty() {
        return Err(Error::Candidates("empty candidate list".into()));
    }
    let ambient_alone = SemisimpleRealAlgebra::from_factors(vec![ambient]);
    let entries = file
        .candidates
        .iter()
        .enumerate()
        .map(|(index, name)| {
            let h = catalog::parse_algebra(name).map_err(|e| Error::CandidateEntry {
                index,
                msg: format!("'{name}': {e}"),
            })?;
            if h == ambient_alone {
                return Err(Error::CandidateEntry {
                    index,
                    msg: format!("'{name}' equals the ambient algebra"),
                });
            }
            Ok(h)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CandidateList {
        ambient,
        entries,
        source: source.to_string(),
    })
}

pub fn load_candidates(path: &Path) -> Result<CandidateList> {
    let text = std::fs::read_to_string(path)?;
    parse_candidates(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family::{self, *};

    fn t(f: Family, r: usize) -> SimpleType {
        SimpleType::new(f, r).unwrap()
    }

    fn names(set: &BTreeSet<ComplexSemisimpleType>) -> BTreeSet<String> {
        set.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn a1_has_no_proper_types() {
        assert!(enumerate_regular_types(t(A, 1)).is_empty());
    }

    #[test]
    fn g2_types() {
        let got = names(&enumerate_regular_types(t(G, 2)));
        let want: BTreeSet<String> = ["A1", "A1+A1", "A2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn e6_contains_maximal_rank_types() {
        let got = names(&enumerate_regular_types(t(E, 6)));
        assert!(got.contains("A5+A1"));
        assert!(got.contains("A2+A2+A2"));
        assert!(got.contains("D5"));
        assert!(!got.contains("E6"));
        assert!(!got.contains("D4+A1"));
    }

    #[test]
    fn f4_contains_both_b_and_c() {
        let got = names(&enumerate_regular_types(t(F, 4)));
        for s in [
            "B4",
            "C3+A1",
            "A2+A2",
            "A3+A1",
            "B3",
            "C3",
            "B2",
            "D4",
            "A1+A1+A1+A1",
        ] {
            assert!(got.contains(s), "{s}");
        }
        assert!(!got.contains("C2"));
    }

    fn moves_of(c: &ComplexSemisimpleType) -> Vec<ComplexSemisimpleType> {
        let mut out = Vec::new();
        for (i, &f) in c.factors().iter().enumerate() {
            for r in node_deletions(f).into_iter().chain(extended_deletions(f)) {
                let mut next = c.factors().to_vec();
                next.remove(i);
                next.extend(r);
                if !next.is_empty() {
                    out.push(ComplexSemisimpleType::new(next));
                }
            }
        }
        out
    }

    #[test]
    fn closure_is_a_fixed_point() {
        for ty in [t(G, 2), t(F, 4), t(B, 4), t(C, 4), t(D, 5), t(E, 6)] {
            let set = enumerate_regular_types(ty);
            let ambient = ComplexSemisimpleType::new(vec![ty]);
            for c in &set {
                assert!(c.rank() <= ty.rank());
                for m in moves_of(c) {
                    assert!(m == ambient || set.contains(&m), "{ty}: {c} -> {m}");
                }
            }
        }
    }

    #[test]
    fn node_deletion_results_are_included() {
        for ty in [t(F, 4), t(E, 7), t(B, 5)] {
            let set = enumerate_regular_types(ty);
            for d in node_deletions(ty) {
                if !d.is_empty() {
                    assert!(set.contains(&ComplexSemisimpleType::new(d)));
                }
            }
        }
    }

    // Multisets {A_k1, ..., A_kr} with Σ(k_i + 1) <= n + 1, excluding A_n.
    fn levi_types(n: usize) -> BTreeSet<ComplexSemisimpleType> {
        fn go(budget: usize, max_part: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if !acc.is_empty() {
                out.push(acc.clone());
            }
            for k in (1..=max_part).rev() {
                if k < budget {
                    acc.push(k);
                    go(budget - k - 1, k, acc, out);
                    acc.pop();
                }
            }
        }
        let mut parts = Vec::new();
        go(n + 1, n, &mut Vec::new(), &mut parts);
        parts
            .into_iter()
            .filter(|p| p != &vec![n])
            .map(|p| ComplexSemisimpleType::new(p.into_iter().map(|k| t(A, k)).collect()))
            .collect()
    }

    #[test]
    fn type_a_gives_levi_types() {
        for n in 1..=7 {
            assert_eq!(enumerate_regular_types(t(A, n)), levi_types(n), "A{n}");
        }
    }

    #[test]
    fn split_real_forms() {
        let c = ComplexSemisimpleType::new(vec![t(A, 1), t(D, 4)]);
        assert_eq!(c.split_real_form().to_string(), "so(4,4)+sl(2,R)");
        assert_eq!(c.to_string(), "D4+A1");
    }

    #[test]
    fn candidate_file_errors() {
        let empty = r#"{"ambient": "e6(6)", "candidates": []}"#;
        assert!(
            matches!(parse_candidates(empty, "t"), Err(Error::Candidates(m)) if m == "empty candidate list")
        );
        let self_pair = r#"{"ambient": "e6(6)", "candidates": ["sl(2,R)", "e6(6)"]}"#;
        assert!(matches!(
            parse_candidates(self_pair, "t"),
            Err(Error::CandidateEntry { index: 1, .. })
        ));
        let bad = r#"{"ambient": "e6(6)", "candidates": ["sl(2,R", "su(2)"]}"#;
        assert!(matches!(
            parse_candidates(bad, "t"),
            Err(Error::CandidateEntry { index: 0, .. })
        ));
        let not_json = "ambient: e6(6)";
        assert!(matches!(
            parse_candidates(not_json, "t"),
            Err(Error::Json(_))
        ));
    }

    #[test]
    fn candidate_file_parses() {
        let text = r#"{"ambient": "e6(6)", "candidates": ["sl(2,R)", "su(2)+su*(4)"]}"#;
        let cl = parse_candidates(text, "inline").unwrap();
        assert_eq!(cl.ambient.to_string(), "e6(6)");
        assert_eq!(cl.entries.len(), 2);
        assert_eq!(cl.source, "inline");
    }
}
