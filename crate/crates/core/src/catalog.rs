//! Real simple Lie algebras and their Cartan-decomposition invariants.
//!
//! Classical families are described by closed formulas in their parameters;
//! the exceptional real forms come from a fixed table whose entries are
//! checked against `dim k + torus + d = dim g` in the tests. All dimensions
//! are recomputed from root counts.

use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{self, Family, SimpleType};

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExceptionalForm {
    E6_6,
    E6_2,
    E6_M14,
    E6_M26,
    E7_7,
    E7_M5,
    E7_M25,
    E8_8,
    E8_M24,
    F4_4,
    F4_M20,
    G2_2,
}

struct ExceptionalEntry {
    form: ExceptionalForm,
    name: &'static str,
    family: Family,
    rank: usize,
    /// Simple factors of the maximal compact subalgebra.
    compact: &'static [(Family, usize)],
    torus: usize,
    real_rank: usize,
    d: usize,
}

const EXCEPTIONAL: &[ExceptionalEntry] = {
    use ExceptionalForm::*;
    use Family::*;
    &[
        ExceptionalEntry {
            form: E6_6,
            name: "e6(6)",
            family: E,
            rank: 6,
            compact: &[(C, 4)],
            torus: 0,
            real_rank: 6,
            d: 42,
        },
        ExceptionalEntry {
            form: E6_2,
            name: "e6(2)",
            family: E,
            rank: 6,
            compact: &[(A, 5), (A, 1)],
            torus: 0,
            real_rank: 4,
            d: 40,
        },
        ExceptionalEntry {
            form: E6_M14,
            name: "e6(-14)",
            family: E,
            rank: 6,
            compact: &[(D, 5)],
            torus: 1,
            real_rank: 2,
            d: 32,
        },
        ExceptionalEntry {
            form: E6_M26,
            name: "e6(-26)",
            family: E,
            rank: 6,
            compact: &[(F, 4)],
            torus: 0,
            real_rank: 2,
            d: 26,
        },
        ExceptionalEntry {
            form: E7_7,
            name: "e7(7)",
            family: E,
            rank: 7,
            compact: &[(A, 7)],
            torus: 0,
            real_rank: 7,
            d: 70,
        },
        ExceptionalEntry {
            form: E7_M5,
            name: "e7(-5)",
            family: E,
            rank: 7,
            compact: &[(D, 6), (A, 1)],
            torus: 0,
            real_rank: 4,
            d: 64,
        },
        ExceptionalEntry {
            form: E7_M25,
            name: "e7(-25)",
            family: E,
            rank: 7,
            compact: &[(E, 6)],
            torus: 1,
            real_rank: 3,
            d: 54,
        },
        ExceptionalEntry {
            form: E8_8,
            name: "e8(8)",
            family: E,
            rank: 8,
            compact: &[(D, 8)],
            torus: 0,
            real_rank: 8,
            d: 128,
        },
        ExceptionalEntry {
            form: E8_M24,
            name: "e8(-24)",
            family: E,
            rank: 8,
            compact: &[(E, 7), (A, 1)],
            torus: 0,
            real_rank: 4,
            d: 112,
        },
        ExceptionalEntry {
            form: F4_4,
            name: "f4(4)",
            family: F,
            rank: 4,
            compact: &[(C, 3), (A, 1)],
            torus: 0,
            real_rank: 4,
            d: 28,
        },
        ExceptionalEntry {
            form: F4_M20,
            name: "f4(-20)",
            family: F,
            rank: 4,
            compact: &[(B, 4)],
            torus: 0,
            real_rank: 1,
            d: 16,
        },
        ExceptionalEntry {
            form: G2_2,
            name: "g2(2)",
            family: G,
            rank: 2,
            compact: &[(A, 1), (A, 1)],
            torus: 0,
            real_rank: 2,
            d: 8,
        },
    ]
};

impl ExceptionalForm {
    pub const ALL: [ExceptionalForm; 12] = {
        use ExceptionalForm::*;
        [
            E6_6, E6_2, E6_M14, E6_M26, E7_7, E7_M5, E7_M25, E8_8, E8_M24, F4_4, F4_M20, G2_2,
        ]
    };

    fn entry(self) -> &'static ExceptionalEntry {
        EXCEPTIONAL
            .iter()
            .find(|e| e.form == self)
            .expect("every exceptional form has a table entry")
    }

    pub fn name(self) -> &'static str {
        self.entry().name
    }

    pub fn from_name(name: &str) -> Option<Self> {
        EXCEPTIONAL.iter().find(|e| e.name == name).map(|e| e.form)
    }
}

/// Labelled real forms. Parameters are taken at face value: `su*(n)` and
/// `so*(n)` carry the matrix size `n = 2k`; `sp(n, R)`, `sp(n, C)` and the
/// compact `sp(n)` carry the rank `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RealForm {
    SlR(u32),
    SlC(u32),
    Su(u32, u32),
    SuStar(u32),
    So(u32, u32),
    SoStar(u32),
    SoC(u32),
    SpR(u32),
    SpC(u32),
    Sp(u32, u32),
    Exceptional(ExceptionalForm),
    Compact(SimpleType),
}

/// A real simple Lie algebra. Construct through [`RealSimpleAlgebra::new`]
/// (or the parser) so the parameters are known to be consistent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RealSimpleAlgebra {
    form: RealForm,
}

fn ty(family: Family, rank: usize) -> SimpleType {
    SimpleType::new(family, rank).expect("rank checked by caller")
}

/// `D3 = A3`, `C2 = B2`; everything else is left alone.
fn normalize(t: SimpleType) -> SimpleType {
    match (t.family(), t.rank()) {
        (Family::D, 3) => ty(Family::A, 3),
        (Family::C, 2) => ty(Family::B, 2),
        _ => t,
    }
}

fn so_type(n: u32) -> Option<SimpleType> {
    let n = n as usize;
    match n {
        3 => Some(ty(Family::A, 1)),
        0..=4 => None,
        _ if n % 2 == 1 => Some(normalize(ty(Family::B, (n - 1) / 2))),
        _ => Some(normalize(ty(Family::D, n / 2))),
    }
}

fn sp_type(n: u32) -> Option<SimpleType> {
    match n {
        0 => None,
        1 => Some(ty(Family::A, 1)),
        _ => Some(normalize(ty(Family::C, n as usize))),
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidForm(msg.into())
}

impl RealSimpleAlgebra {
    pub fn new(form: RealForm) -> Result<Self> {
        use RealForm::*;
        let form = match form {
            SlR(n) | SlC(n) if n < 2 => return Err(invalid(format!("sl({n}) needs n >= 2"))),
            Su(p, q) | Sp(p, q) if p == 0 || q == 0 => {
                return Err(invalid(format!(
                    "indefinite form ({p},{q}) needs p, q >= 1"
                )))
            }
            SuStar(n) if n < 4 || n % 2 == 1 => {
                return Err(invalid(format!("su*({n}) needs an even size >= 4")))
            }
            SoStar(n) if n < 6 || n % 2 == 1 => {
                return Err(invalid(format!("so*({n}) needs an even size >= 6")))
            }
            So(p, q) => {
                if p == 0 || q == 0 {
                    return Err(invalid(format!("so({p},{q}) needs p, q >= 1")));
                }
                if so_type(p + q).is_none() {
                    return Err(invalid(format!("so({p},{q}) is not simple")));
                }
                So(p.min(q), p.max(q))
            }
            SoC(n) if so_type(n).is_none() => {
                return Err(invalid(format!("so({n},C) is not simple")))
            }
            SpR(0) | SpC(0) => return Err(invalid("sp(0) is the zero algebra")),
            Compact(t) => Compact(normalize(t)),
            f => f,
        };
        Ok(RealSimpleAlgebra { form })
    }

    pub fn form(&self) -> RealForm {
        self.form
    }

    /// Compact real form of `t`.
    pub fn compact(t: SimpleType) -> Self {
        RealSimpleAlgebra {
            form: RealForm::Compact(normalize(t)),
        }
    }

    pub fn exceptional(form: ExceptionalForm) -> Self {
        RealSimpleAlgebra {
            form: RealForm::Exceptional(form),
        }
    }

    /// Type of the complexification (of one copy, for complex algebras viewed as real).
    pub fn complex_type(&self) -> SimpleType {
        use RealForm::*;
        match self.form {
            SlR(n) | SlC(n) => ty(Family::A, n as usize - 1),
            Su(p, q) => ty(Family::A, (p + q) as usize - 1),
            SuStar(n) => ty(Family::A, n as usize - 1),
            So(p, q) => so_type(p + q).expect("validated"),
            SoStar(n) => so_type(n).expect("validated"),
            SoC(n) => so_type(n).expect("validated"),
            SpR(n) | SpC(n) => sp_type(n).expect("validated"),
            Sp(p, q) => sp_type(p + q).expect("validated"),
            Exceptional(e) => {
                let entry = e.entry();
                ty(entry.family, entry.rank)
            }
            Compact(t) => t,
        }
    }

    /// A complex simple algebra regarded as a real one.
    pub fn is_complex(&self) -> bool {
        matches!(
            self.form,
            RealForm::SlC(_) | RealForm::SoC(_) | RealForm::SpC(_)
        )
    }

    pub fn is_compact(&self) -> bool {
        matches!(self.form, RealForm::Compact(_))
    }

    pub fn is_split(&self) -> bool {
        !self.is_complex() && self.invariants().real_rank == self.complex_type().rank()
    }

    pub fn dim(&self) -> usize {
        let base = rootsys::dimension(self.complex_type());
        if self.is_complex() {
            2 * base
        } else {
            base
        }
    }

    pub fn invariants(&self) -> RealInvariants {
        use RealForm::*;
        let dim = self.dim();
        let ct = self.complex_type();
        let mut degrees = rootsys::degrees(ct);
        if self.is_complex() {
            degrees.extend(rootsys::degrees(ct));
            degrees.sort_unstable();
        }
        let n = |x: u32| x as usize;
        let (compact, torus, real_rank, d): (Vec<RealSimpleAlgebra>, usize, usize, usize) =
            match self.form {
                SlR(k) => {
                    let k = n(k);
                    let (c, t) = compact_so(k);
                    (c, t, k - 1, k * (k + 1) / 2 - 1)
                }
                SlC(k) => {
                    let k = n(k);
                    (compact_su(k), 0, k - 1, k * k - 1)
                }
                Su(p, q) => {
                    let (p, q) = (n(p), n(q));
                    let mut c = compact_su(p);
                    c.extend(compact_su(q));
                    (c, 1, p.min(q), 2 * p * q)
                }
                SuStar(s) => {
                    let k = n(s) / 2;
                    (compact_sp(k), 0, k - 1, 2 * k * k - k - 1)
                }
                So(p, q) => {
                    let (p, q) = (n(p), n(q));
                    let (mut c, t1) = compact_so(p);
                    let (c2, t2) = compact_so(q);
                    c.extend(c2);
                    (c, t1 + t2, p.min(q), p * q)
                }
                SoStar(s) => {
                    let k = n(s) / 2;
                    (compact_su(k), 1, k / 2, k * (k - 1))
                }
                SoC(k) => {
                    let k = n(k);
                    let (c, t) = compact_so(k);
                    (c, t, ct.rank(), k * (k - 1) / 2)
                }
                SpR(k) => {
                    let k = n(k);
                    (compact_su(k), 1, k, k * (k + 1))
                }
                SpC(k) => {
                    let k = n(k);
                    (compact_sp(k), 0, k, k * (2 * k + 1))
                }
                Sp(p, q) => {
                    let (p, q) = (n(p), n(q));
                    let mut c = compact_sp(p);
                    c.extend(compact_sp(q));
                    (c, 0, p.min(q), 4 * p * q)
                }
                Exceptional(e) => {
                    let entry = e.entry();
                    let c = entry
                        .compact
                        .iter()
                        .map(|&(f, r)| RealSimpleAlgebra::compact(ty(f, r)))
                        .collect();
                    (c, entry.torus, entry.real_rank, entry.d)
                }
                Compact(_) => (vec![*self], 0, 0, 0),
            };
        RealInvariants {
            dim,
            real_rank,
            max_compact: SemisimpleRealAlgebra::from_factors(compact),
            torus_rank: torus,
            d,
            dual_degrees: degrees,
        }
    }
}

fn compact_su(n: usize) -> Vec<RealSimpleAlgebra> {
    if n < 2 {
        vec![]
    } else {
        vec![RealSimpleAlgebra::compact(ty(Family::A, n - 1))]
    }
}

fn compact_sp(n: usize) -> Vec<RealSimpleAlgebra> {
    sp_type(n as u32)
        .map(RealSimpleAlgebra::compact)
        .into_iter()
        .collect()
}

/// Simple factors and torus rank of the compact `so(n)`.
fn compact_so(n: usize) -> (Vec<RealSimpleAlgebra>, usize) {
    match n {
        0 | 1 => (vec![], 0),
        2 => (vec![], 1),
        4 => {
            let su2 = RealSimpleAlgebra::compact(ty(Family::A, 1));
            (vec![su2, su2], 0)
        }
        _ => (
            vec![RealSimpleAlgebra::compact(
                so_type(n as u32).expect("n >= 3"),
            )],
            0,
        ),
    }
}

impl fmt::Display for RealSimpleAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use RealForm::*;
        match self.form {
            SlR(n) => write!(f, "sl({n},R)"),
            SlC(n) => write!(f, "sl({n},C)"),
            Su(p, q) => write!(f, "su({p},{q})"),
            SuStar(n) => write!(f, "su*({n})"),
            So(p, q) => write!(f, "so({p},{q})"),
            SoStar(n) => write!(f, "so*({n})"),
            SoC(n) => write!(f, "so({n},C)"),
            SpR(n) => write!(f, "sp({n},R)"),
            SpC(n) => write!(f, "sp({n},C)"),
            Sp(p, q) => write!(f, "sp({p},{q})"),
            Exceptional(e) => write!(f, "{}", e.name()),
            Compact(t) => {
                let r = t.rank();
                match t.family() {
                    Family::A => write!(f, "su({})", r + 1),
                    Family::B => write!(f, "so({})", 2 * r + 1),
                    Family::C => write!(f, "sp({r})"),
                    Family::D => write!(f, "so({})", 2 * r),
                    Family::E => write!(f, "e{r}"),
                    Family::F => write!(f, "f4"),
                    Family::G => write!(f, "g2"),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealInvariants {
    pub dim: usize,
    pub real_rank: usize,
    /// Semisimple part of the maximal compact subalgebra `k`.
    pub max_compact: SemisimpleRealAlgebra,
    /// Dimension of the center of `k`.
    pub torus_rank: usize,
    /// `dim p`, the non-compact dimension.
    pub d: usize,
    /// Fundamental degrees of the compact dual.
    pub dual_degrees: Vec<u32>,
}

pub fn invariants(a: &RealSimpleAlgebra) -> RealInvariants {
    a.invariants()
}

/// The split real form of `t`.
pub fn split_form(t: SimpleType) -> RealSimpleAlgebra {
    use ExceptionalForm::*;
    use RealForm::*;
    let r = t.rank() as u32;
    let form = match (t.family(), t.rank()) {
        (Family::A, _) => SlR(r + 1),
        (Family::B, _) => So(r, r + 1),
        (Family::C, _) => SpR(r),
        (Family::D, _) => So(r, r),
        (Family::E, 6) => Exceptional(E6_6),
        (Family::E, 7) => Exceptional(E7_7),
        (Family::E, _) => Exceptional(E8_8),
        (Family::F, _) => Exceptional(F4_4),
        (Family::G, _) => Exceptional(G2_2),
    };
    RealSimpleAlgebra::new(form).expect("split forms are valid")
}

/// Direct sum of real simple algebras, kept in canonical order: larger
/// dimension first, ties broken by name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SemisimpleRealAlgebra {
    factors: Vec<RealSimpleAlgebra>,
}

impl SemisimpleRealAlgebra {
    pub fn from_factors(mut factors: Vec<RealSimpleAlgebra>) -> Self {
        factors.sort_by_cached_key(|f| (Reverse(f.dim()), f.to_string()));
        SemisimpleRealAlgebra { factors }
    }

    pub fn factors(&self) -> &[RealSimpleAlgebra] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(RealSimpleAlgebra::dim).sum()
    }

    /// Fundamental degrees of all factors' complexifications, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .factors
            .iter()
            .flat_map(|f| rootsys::degrees(f.complex_type()))
            .collect();
        out.sort_unstable();
        out
    }

    /// The single factor, if there is exactly one.
    pub fn as_simple(&self) -> Option<&RealSimpleAlgebra> {
        match self.factors.as_slice() {
            [a] => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for SemisimpleRealAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl Serialize for SemisimpleRealAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SemisimpleRealAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "0" {
            return Ok(SemisimpleRealAlgebra::default());
        }
        parse_algebra(&s).map_err(serde::de::Error::custom)
    }
}

/// `(Σ d, Σ rank_R)` over the factors.
pub fn sum_invariants(h: &SemisimpleRealAlgebra) -> (usize, usize) {
    h.factors.iter().fold((0, 0), |(d, r), f| {
        let inv = f.invariants();
        (d + inv.d, r + inv.real_rank)
    })
}

/// Every valid algebra whose complexification has rank at most `max_rank`,
/// plus all exceptional forms.
pub fn catalog_up_to_rank(max_rank: usize) -> Vec<RealSimpleAlgebra> {
    use RealForm::*;
    let mut forms: Vec<RealForm> = Vec::new();
    let mr = max_rank as u32;
    for n in 2..=mr + 1 {
        forms.extend([SlR(n), SlC(n)]);
    }
    for p in 1..=mr {
        for q in p..=mr {
            forms.extend([So(p, q), Sp(p, q)]);
            if p + q <= mr + 1 {
                forms.push(Su(p, q));
                if p != q {
                    forms.push(Su(q, p));
                }
            }
        }
    }
    for n in 1..=mr {
        forms.extend([SpR(n), SpC(n), SuStar(2 * n), SoStar(2 * n)]);
    }
    for n in 3..=2 * mr + 1 {
        forms.push(SoC(n));
    }
    forms.extend(ExceptionalForm::ALL.map(Exceptional));
    let mut out: Vec<RealSimpleAlgebra> = forms
        .into_iter()
        .filter_map(|f| RealSimpleAlgebra::new(f).ok())
        .filter(|a| a.complex_type().rank() <= max_rank || matches!(a.form, Exceptional(_)))
        .collect();
    out.extend(
        SimpleType::all_up_to_rank(max_rank)
            .into_iter()
            .map(RealSimpleAlgebra::compact),
    );
    out.sort();
    out.dedup();
    out
}

/// Parses a `+`-separated list of algebra names; whitespace is ignored.
pub fn parse_algebra(name: &str) -> Result<SemisimpleRealAlgebra> {
    let chars: Vec<(usize, char)> = name
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser {
        chars,
        pos: 0,
        end: name.len(),
    };
    let mut factors = vec![parser.factor()?];
    while parser.peek() == Some('+') {
        parser.pos += 1;
        factors.push(parser.factor()?);
    }
    if parser.pos < parser.chars.len() {
        return Err(parser.error("expected '+' or end of input"));
    }
    Ok(SemisimpleRealAlgebra::from_factors(factors))
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

enum Arg {
    Int(u32),
    Real,
    Complex,
}

impl Parser {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.offset(),
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '*' {
                s.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        s
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let start = self.pos;
        let mut v: i64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as i64))
                .ok_or_else(|| self.error("integer too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(if neg { -v } else { v })
    }

    fn unsigned(&mut self) -> Result<u32> {
        let at = self.pos;
        let v = self.int()?;
        u32::try_from(v).map_err(|_| {
            self.pos = at;
            self.error("expected a non-negative integer")
        })
    }

    fn arg(&mut self) -> Result<Arg> {
        match self.peek() {
            Some('R') => {
                self.pos += 1;
                Ok(Arg::Real)
            }
            Some('C') => {
                self.pos += 1;
                Ok(Arg::Complex)
            }
            _ => self.unsigned().map(Arg::Int),
        }
    }

    fn factor(&mut self) -> Result<RealSimpleAlgebra> {
        use RealForm::*;
        let start = self.pos;
        let name = self.ident();
        let at = |p: &Parser, msg: String| Error::Parse {
            pos: p.chars.get(start).map_or(p.end, |&(i, _)| i),
            msg,
        };
        let compact_exceptional = |t: (Family, usize)| RealSimpleAlgebra::compact(ty(t.0, t.1));
        if self.peek() != Some('(') {
            return match name.as_str() {
                "e6" => Ok(compact_exceptional((Family::E, 6))),
                "e7" => Ok(compact_exceptional((Family::E, 7))),
                "e8" => Ok(compact_exceptional((Family::E, 8))),
                "f4" => Ok(compact_exceptional((Family::F, 4))),
                "g2" => Ok(compact_exceptional((Family::G, 2))),
                "" => Err(self.error("expected an algebra name")),
                _ => Err(self.error("expected '('")),
            };
        }
        self.pos += 1;
        if matches!(name.as_str(), "e6" | "e7" | "e8" | "f4" | "g2") {
            let index = self.int()?;
            self.expect(')')?;
            let full = format!("{name}({index})");
            return ExceptionalForm::from_name(&full)
                .map(RealSimpleAlgebra::exceptional)
                .ok_or_else(|| at(self, format!("unknown exceptional form {full}")));
        }
        let first = self.unsigned()?;
        let second = if self.peek() == Some(',') {
            self.pos += 1;
            Some(self.arg()?)
        } else {
            None
        };
        self.expect(')')?;
        let form = match (name.as_str(), second) {
            ("sl", Some(Arg::Real)) => SlR(first),
            ("sl", Some(Arg::Complex)) => SlC(first),
            ("su", Some(Arg::Int(q))) => Su(first, q),
            ("su", None) => {
                if first < 2 {
                    return Err(invalid(format!("su({first}) is not simple")));
                }
                return Ok(RealSimpleAlgebra::compact(ty(
                    Family::A,
                    first as usize - 1,
                )));
            }
            ("su*", None) => SuStar(first),
            ("so", Some(Arg::Int(q))) => So(first, q),
            ("so", Some(Arg::Complex)) => SoC(first),
            ("so", None) => {
                return match so_type(first) {
                    Some(t) => Ok(RealSimpleAlgebra::compact(t)),
                    None => Err(invalid(format!("so({first}) is not simple"))),
                }
            }
            ("so*", None) => SoStar(first),
            ("sp", Some(Arg::Real)) => SpR(first),
            ("sp", Some(Arg::Complex)) => SpC(first),
            ("sp", Some(Arg::Int(q))) => Sp(first, q),
            ("sp", None) => {
                return match sp_type(first) {
                    Some(t) => Ok(RealSimpleAlgebra::compact(t)),
                    None => Err(invalid("sp(0) is the zero algebra")),
                }
            }
            ("sl" | "su" | "su*" | "so" | "so*", _) => {
                return Err(at(self, format!("bad arguments for {name}")))
            }
            _ => return Err(at(self, format!("unknown family '{name}'"))),
        };
        RealSimpleAlgebra::new(form)
    }
}
