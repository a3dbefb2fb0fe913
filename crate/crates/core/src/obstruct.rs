//! Obstructions to cyclic commensurability: static invariants, the τ and ρ
//! equations for a pair of covers, the exact root-power test, ratio scans
//! and orientation analysis.
//!
//! `Fail` is only reported for a certified gap or an exact mismatch.
//! Near-ties are `Inconclusive`.

use std::fmt;
use std::str::FromStr;

use rug::ops::Pow;
use rug::Integer;

use crate::algebra::{power_transform, IntPoly};
use crate::covers::{admissible, b1_of_cover};
use crate::error::{Error, Result};
use crate::knot::KnotRecord;
use crate::numerics::CertifiedReal;

/// Intervals that contain 0 and are at most this wide count as a pass.
pub const TIE_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    fn rank(self) -> u8 {
        match self {
            Verdict::Pass => 2,
            Verdict::Inconclusive => 1,
            Verdict::Fail => 0,
        }
    }

    /// The more favourable of the two.
    pub fn best(self, other: Verdict) -> Verdict {
        if other.rank() > self.rank() {
            other
        } else {
            self
        }
    }

    /// The less favourable of the two.
    pub fn worst(self, other: Verdict) -> Verdict {
        if other.rank() < self.rank() {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Orientation sign ε of a hypothetical diffeomorphism of covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Epsilon {
    Plus,
    Minus,
    #[default]
    Both,
}

impl Epsilon {
    pub fn signs(self) -> &'static [i64] {
        match self {
            Epsilon::Plus => &[1],
            Epsilon::Minus => &[-1],
            Epsilon::Both => &[1, -1],
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Epsilon::Plus => "+1",
            Epsilon::Minus => "-1",
            Epsilon::Both => "both",
        })
    }
}

impl FromStr for Epsilon {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "+" | "plus" => Ok(Epsilon::Plus),
            "-1" | "-" | "minus" => Ok(Epsilon::Minus),
            "both" | "±1" => Ok(Epsilon::Both),
            other => Err(Error::InvalidArgument(format!("epsilon must be +1, -1 or both, got {other:?}"))),
        }
    }
}

fn sign_label(s: i64) -> &'static str {
    if s > 0 {
        "+1"
    } else {
        "-1"
    }
}

#[derive(Clone, Debug)]
pub struct Quantity {
    pub label: String,
    pub value: CertifiedReal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Integer { label: String, value: Integer },
    Polynomial { label: String, poly: IntPoly },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Integer { label, value } => write!(f, "{label} = {value}"),
            Witness::Polynomial { label, poly } => write!(f, "{label} = {}", poly.display_with("s")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TestEntry {
    pub id: String,
    pub verdict: Verdict,
    /// Whether the verdict counts towards the report's overall verdict.
    pub decisive: bool,
    pub quantities: Vec<Quantity>,
    pub witnesses: Vec<Witness>,
    pub note: Option<String>,
}

impl TestEntry {
    fn new(id: impl Into<String>, verdict: Verdict) -> Self {
        TestEntry {
            id: id.into(),
            verdict,
            decisive: true,
            quantities: Vec::new(),
            witnesses: Vec::new(),
            note: None,
        }
    }

    fn informational(mut self) -> Self {
        self.decisive = false;
        self
    }

    fn quantity(mut self, label: impl Into<String>, value: CertifiedReal) -> Self {
        self.quantities.push(Quantity { label: label.into(), value });
        self
    }

    fn integer(mut self, label: impl Into<String>, value: impl Into<Integer>) -> Self {
        self.witnesses.push(Witness::Integer { label: label.into(), value: value.into() });
        self
    }

    fn polynomial(mut self, label: impl Into<String>, poly: IntPoly) -> Self {
        self.witnesses.push(Witness::Polynomial { label: label.into(), poly });
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn quantity_value(&self, label: &str) -> Option<&CertifiedReal> {
        self.quantities.iter().find(|q| q.label == label).map(|q| &q.value)
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub knot1: String,
    pub knot2: String,
    pub n1: Option<u64>,
    pub n2: Option<u64>,
    pub epsilon: Option<Epsilon>,
    pub entries: Vec<TestEntry>,
    pub caveats: Vec<String>,
}

impl ObstructionReport {
    fn new(k1: &KnotRecord, k2: &KnotRecord) -> Self {
        ObstructionReport {
            knot1: k1.name().to_string(),
            knot2: k2.name().to_string(),
            n1: None,
            n2: None,
            epsilon: None,
            entries: Vec::new(),
            caveats: Vec::new(),
        }
    }

    /// `Fail` if a decisive entry fails, else `Inconclusive` if one is
    /// inconclusive, else `Pass`.
    pub fn verdict(&self) -> Verdict {
        self.entries
            .iter()
            .filter(|e| e.decisive)
            .fold(Verdict::Pass, |acc, e| acc.worst(e.verdict))
    }

    pub fn entry(&self, id: &str) -> Option<&TestEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn decisive_entries(&self) -> impl Iterator<Item = &TestEntry> {
        self.entries.iter().filter(|e| e.decisive)
    }
}

fn interval_verdict(d: &CertifiedReal) -> Verdict {
    if d.excludes_zero() {
        Verdict::Fail
    } else if d.width_f64() <= TIE_TOLERANCE {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    }
}

fn is_monic(p: &IntPoly) -> bool {
    p.lead().is_some_and(|c| c.clone().abs() == 1)
}

/// Degree, monicness, and declared genus and fiberedness must agree for
/// cyclically commensurable knots when one of them is admissible.
pub fn static_compare(k1: &KnotRecord, k2: &KnotRecord) -> ObstructionReport {
    let mut report = ObstructionReport::new(k1, k2);
    let (a1, a2) = (admissible(k1), admissible(k2));
    let informational = !(a1 || a2);
    if informational {
        report.caveats.push("neither knot is admissible; static checks are informational only".into());
    }
    let push = |report: &mut ObstructionReport, e: TestEntry| {
        report.entries.push(if informational { e.informational() } else { e });
    };

    let (d1, d2) = (k1.alexander().deg(), k2.alexander().deg());
    let e = TestEntry::new("degree", if d1 == d2 { Verdict::Pass } else { Verdict::Fail })
        .integer(format!("deg Δ({})", k1.name()), d1 as u64)
        .integer(format!("deg Δ({})", k2.name()), d2 as u64);
    push(&mut report, e);

    let (m1, m2) = (is_monic(k1.alexander()), is_monic(k2.alexander()));
    let e = TestEntry::new("monic", if m1 == m2 { Verdict::Pass } else { Verdict::Fail })
        .integer(format!("lead Δ({})", k1.name()), k1.alexander().lead().unwrap().clone())
        .integer(format!("lead Δ({})", k2.name()), k2.alexander().lead().unwrap().clone());
    push(&mut report, e);

    if let (Some(g1), Some(g2)) = (k1.genus(), k2.genus()) {
        let e = TestEntry::new("genus", if g1 == g2 { Verdict::Pass } else { Verdict::Fail })
            .integer(format!("genus({})", k1.name()), g1)
            .integer(format!("genus({})", k2.name()), g2);
        push(&mut report, e);
    }
    if let (Some(f1), Some(f2)) = (k1.fibered(), k2.fibered()) {
        let e = TestEntry::new("fibered", if f1 == f2 { Verdict::Pass } else { Verdict::Fail })
            .note(format!("{}: {f1}, {}: {f2}", k1.name(), k2.name()));
        push(&mut report, e);
    }

    let e = TestEntry::new("admissible", Verdict::Pass)
        .informational()
        .note(format!("{}: {a1}, {}: {a2}", k1.name(), k2.name()));
    report.entries.push(e);
    report
}

fn check_b1(k: &KnotRecord, n: u64) -> Result<()> {
    match b1_of_cover(k, n) {
        1 => Ok(()),
        b1 => Err(Error::B1Violation { knot: k.name().to_string(), n, b1 }),
    }
}

/// `n·ρ(K) - Σ_{k=1}^{n} σ(K, e^{2πik/n})` and the signature sum.
fn rho_term(k: &KnotRecord, n: u64) -> Result<(CertifiedReal, i64)> {
    let rho = k.rho()?;
    let sum = k.signature_sum(n)?;
    Ok((&rho.mul_i64(n as i64) - &CertifiedReal::from_i64(sum, rho.prec()), sum))
}

/// The τ equation `n1·τ(K1) = n2·τ(K2)` and the ρ equation
/// `n1·ρ(K1) - Σσ(K1) = ε·(n2·ρ(K2) - Σσ(K2))` for `X(K1)_{n1} ≅ X(K2)_{n2}`.
///
/// For `Epsilon::Both` the per-sign entries are informational and the
/// decisive `rho` entry carries the better of the two.
pub fn cover_pair_test(
    k1: &KnotRecord,
    n1: u64,
    k2: &KnotRecord,
    n2: u64,
    epsilon: Epsilon,
) -> Result<ObstructionReport> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidArgument("cover degrees must be positive".into()));
    }
    check_b1(k1, n1)?;
    check_b1(k2, n2)?;
    let mut report = ObstructionReport::new(k1, k2);
    report.n1 = Some(n1);
    report.n2 = Some(n2);
    report.epsilon = Some(epsilon);

    let t1 = k1.tau()?.mul_i64(n1 as i64);
    let t2 = k2.tau()?.mul_i64(n2 as i64);
    let d = &t1 - &t2;
    report.entries.push(
        TestEntry::new("tau", interval_verdict(&d))
            .quantity("n1·τ(K1)", t1)
            .quantity("n2·τ(K2)", t2)
            .quantity("difference", d),
    );

    let terms = rho_term(k1, n1).and_then(|a| Ok((a, rho_term(k2, n2)?)));
    let ((x1, s1), (x2, s2)) = match terms {
        Ok(t) => t,
        Err(Error::InsufficientData(msg)) => {
            report.entries.push(TestEntry::new("rho", Verdict::Inconclusive).note(msg));
            return Ok(report);
        }
        Err(e) => return Err(e),
    };

    let single = epsilon != Epsilon::Both;
    let mut best = Verdict::Fail;
    for &s in epsilon.signs() {
        let combo = &x1 - &x2.mul_i64(s);
        let v = interval_verdict(&combo);
        best = best.best(v);
        let id = if single { "rho".to_string() } else { format!("rho[{}]", sign_label(s)) };
        let mut e = TestEntry::new(id, v)
            .quantity("n1·ρ(K1) - Σσ(K1)", x1.clone())
            .quantity("n2·ρ(K2) - Σσ(K2)", x2.clone())
            .quantity("combination", combo)
            .integer("Σσ(K1)", s1)
            .integer("Σσ(K2)", s2);
        if !single {
            e = e.informational();
        }
        report.entries.push(e);
    }
    if !single {
        report.entries.push(TestEntry::new("rho", best).note("better of ε = +1 and ε = -1"));
    }

    // Signature sums are integers, so the ρ equation forces this into Z.
    let r1 = k1.rho()?.mul_i64(n1 as i64);
    let r2 = k2.rho()?.mul_i64(n2 as i64);
    for &s in epsilon.signs() {
        let v = &r1 - &r2.mul_i64(s);
        let verdict = if v.contains_integer() { Verdict::Pass } else { Verdict::Fail };
        report.entries.push(
            TestEntry::new(format!("rho mod 1[{}]", sign_label(s)), verdict)
                .informational()
                .quantity("n1·ρ(K1) - ε·n2·ρ(K2)", v),
        );
    }
    Ok(report)
}

fn sign_normalized(p: IntPoly) -> IntPoly {
    if p.lead().is_some_and(|c| *c < 0) {
        -p
    } else {
        p
    }
}

/// Whether the roots of `p1` raised to `n1` and those of `p2` raised to `n2`
/// agree as multisets, leading coefficients included.
pub fn power_multisets_match(p1: &IntPoly, n1: u64, p2: &IntPoly, n2: u64) -> Option<IntPoly> {
    if p1.deg() != p2.deg() {
        return None;
    }
    let c1 = p1.lead()?.clone().abs().pow(n1 as u32);
    let c2 = p2.lead()?.clone().abs().pow(n2 as u32);
    if c1 != c2 {
        return None;
    }
    let q1 = sign_normalized(power_transform(p1, n1 as u32));
    let q2 = sign_normalized(power_transform(p2, n2 as u32));
    (q1 == q2).then_some(q1)
}

/// Exact test: `{r_i^{n1}} = {s_j^{n2}}` with multiplicity and
/// `|C1|^{n1} = |C2|^{n2}`. Never inconclusive.
pub fn multiset_power_test(k1: &KnotRecord, n1: u64, k2: &KnotRecord, n2: u64) -> ObstructionReport {
    assert!(n1 >= 1 && n2 >= 1, "cover degrees must be positive");
    let mut report = ObstructionReport::new(k1, k2);
    report.n1 = Some(n1);
    report.n2 = Some(n2);
    let (p1, p2) = (k1.alexander(), k2.alexander());
    let (d1, d2) = (p1.deg(), p2.deg());
    if d1 != d2 {
        report.entries.push(
            TestEntry::new("degree", Verdict::Fail)
                .integer("deg Δ(K1)", d1 as u64)
                .integer("deg Δ(K2)", d2 as u64),
        );
        return report;
    }

    let c1 = p1.lead().unwrap().clone().abs().pow(n1 as u32);
    let c2 = p2.lead().unwrap().clone().abs().pow(n2 as u32);
    let lead_ok = c1 == c2;
    report.entries.push(
        TestEntry::new("leading", if lead_ok { Verdict::Pass } else { Verdict::Fail })
            .integer("|C1|^n1", c1)
            .integer("|C2|^n2", c2),
    );

    let q1 = sign_normalized(power_transform(p1, n1 as u32));
    let q2 = sign_normalized(power_transform(p2, n2 as u32));
    let e = if q1 == q2 {
        TestEntry::new("multiset", Verdict::Pass).polynomial("common power transform", q1)
    } else {
        TestEntry::new("multiset", Verdict::Fail)
            .polynomial("power transform of Δ(K1)", q1)
            .polynomial("power transform of Δ(K2)", q2)
    };
    report.entries.push(e);
    report
}

#[derive(Clone, Debug)]
pub struct RatioCandidate {
    pub a: u64,
    pub b: u64,
    /// Smallest k with a passing exact test at covers `(k·a, k·b)`.
    pub k: u64,
    pub witness: IntPoly,
    /// `cover_pair_test` at `(k·a, k·b)` with both orientations.
    pub validation: std::result::Result<ObstructionReport, Error>,
}

#[derive(Clone, Debug, Default)]
pub struct RatioScan {
    pub ratios: Vec<RatioCandidate>,
    pub caveats: Vec<String>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Coprime ratios `a : b` (`a, b ≤ n_max`) such that some `k` with
/// `k·a, k·b ≤ n_max` passes the exact multiset test.
///
/// Ratios whose τ equation certifiably fails are skipped first; that is
/// sound since an exact pass implies the τ equation.
pub fn ratio_scan(k1: &KnotRecord, k2: &KnotRecord, n_max: u64) -> Result<RatioScan> {
    let mut scan = RatioScan::default();
    let (tau1, tau2) = (k1.tau()?, k2.tau()?);
    for (k, t) in [(k1, &tau1), (k2, &tau2)] {
        if !admissible(k) {
            scan.caveats.push(format!("{} is not admissible", k.name()));
        }
        if t.contains_zero() {
            scan.caveats.push(format!("τ({}) vanishes; the τ test is vacuous", k.name()));
        }
    }
    if k1.alexander().deg() != k2.alexander().deg() {
        return Ok(scan);
    }

    let (m1, r1) = (tau1.mid_f64(), tau1.radius_f64());
    let (m2, r2) = (tau2.mid_f64(), tau2.radius_f64());
    for a in 1..=n_max {
        for b in 1..=n_max {
            if gcd(a, b) != 1 {
                continue;
            }
            let (af, bf) = (a as f64, b as f64);
            let slack = af * r1 + bf * r2 + (af * m1.abs() + bf * m2.abs()) * 1e-12 + 1e-300;
            if (af * m1 - bf * m2).abs() > slack {
                continue;
            }
            if (&tau1.mul_i64(a as i64) - &tau2.mul_i64(b as i64)).excludes_zero() {
                continue;
            }
            let hit = (1..)
                .take_while(|k| k * a <= n_max && k * b <= n_max)
                .find_map(|k| power_multisets_match(k1.alexander(), k * a, k2.alexander(), k * b).map(|w| (k, w)));
            if let Some((k, witness)) = hit {
                let validation = cover_pair_test(k1, k * a, k2, k * b, Epsilon::Both);
                scan.ratios.push(RatioCandidate { a, b, k, witness, validation });
            }
        }
    }
    Ok(scan)
}

/// For the unique surviving ratio `a : b`, checks for every `k` with
/// `k·b ≤ n_max` whether `k·(a·ρ(K1) - ε·b·ρ(K2))` can be an integer; where
/// it can, the full ρ equation at covers `(k·a, k·b)` decides.
pub fn orientation_test(k1: &KnotRecord, k2: &KnotRecord, n_max: u64) -> Result<ObstructionReport> {
    let scan = ratio_scan(k1, k2, n_max)?;
    let mut report = match scan.ratios.as_slice() {
        [r] => orientation_for_ratio(k1, k2, r.a, r.b, n_max)?,
        ratios => {
            let mut report = ObstructionReport::new(k1, k2);
            report.epsilon = Some(Epsilon::Both);
            report.entries.push(if ratios.is_empty() {
                TestEntry::new("ratio", Verdict::Fail)
                    .note(format!("no ratio passes the exact multiset test up to n_max = {n_max}"))
            } else {
                let list: Vec<String> = ratios.iter().map(|r| format!("{}:{}", r.a, r.b)).collect();
                TestEntry::new("ratio", Verdict::Inconclusive)
                    .note(format!("several ratios survive: {}", list.join(", ")))
            });
            report
        }
    };
    report.caveats.splice(0..0, scan.caveats);
    Ok(report)
}

/// The orientation analysis of [`orientation_test`] for a given ratio.
pub fn orientation_for_ratio(
    k1: &KnotRecord,
    k2: &KnotRecord,
    a: u64,
    b: u64,
    n_max: u64,
) -> Result<ObstructionReport> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("ratio terms must be positive".into()));
    }
    let mut report = ObstructionReport::new(k1, k2);
    report.epsilon = Some(Epsilon::Both);
    report.entries.push(
        TestEntry::new("ratio", Verdict::Pass)
            .informational()
            .integer("a", a)
            .integer("b", b),
    );

    let (rho1, rho2) = match (k1.rho(), k2.rho()) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(Error::InsufficientData(msg)), _) | (_, Err(Error::InsufficientData(msg))) => {
            report.entries.push(TestEntry::new("orientation", Verdict::Inconclusive).note(msg));
            return Ok(report);
        }
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };

    let k_max = n_max / b;
    let mut overall = Verdict::Fail;
    for s in [1i64, -1] {
        let mut passing = Vec::new();
        let mut open = Vec::new();
        for k in 1..=k_max {
            let (n1, n2) = (k * a, k * b);
            let v = &rho1.mul_i64(n1 as i64) - &rho2.mul_i64(s * n2 as i64);
            let mut verdict = Verdict::Fail;
            let mut note = None;
            if v.contains_integer() {
                let eps = if s > 0 { Epsilon::Plus } else { Epsilon::Minus };
                match cover_pair_test(k1, n1, k2, n2, eps) {
                    Ok(r) => verdict = r.entry("rho").map_or(Verdict::Inconclusive, |e| e.verdict),
                    Err(e @ Error::B1Violation { .. }) => {
                        verdict = Verdict::Inconclusive;
                        note = Some(e.to_string());
                    }
                    Err(e) => return Err(e),
                }
            }
            match verdict {
                Verdict::Pass => passing.push(k),
                Verdict::Inconclusive => open.push(k),
                Verdict::Fail => {}
            }
            let mut e = TestEntry::new(format!("orientation[{}] k={k}", sign_label(s)), verdict)
                .informational()
                .quantity("k·(a·ρ(K1) - ε·b·ρ(K2))", v);
            e.note = note;
            report.entries.push(e);
        }
        let summary = if let Some(&k) = passing.first() {
            TestEntry::new(format!("orientation[{}]", sign_label(s)), Verdict::Pass)
                .integer("first passing k", k)
                .note(format!("ρ equation holds at covers {} and {}", k * a, k * b))
        } else if open.is_empty() {
            let kind = if s > 0 { "preserving" } else { "reversing" };
            TestEntry::new(format!("orientation[{}]", sign_label(s)), Verdict::Fail)
                .note(format!("orientation-{kind} diffeomorphism excluded for all covers up to n_max = {n_max}"))
        } else {
            TestEntry::new(format!("orientation[{}]", sign_label(s)), Verdict::Inconclusive)
                .integer("first undecided k", open[0])
        };
        overall = overall.best(summary.verdict);
        report.entries.push(summary.integer("k checked up to", k_max).informational());
    }
    report.entries.push(TestEntry::new("orientation", overall).note("better of ε = +1 and ε = -1"));
    Ok(report)
}

pub const MAX_PROBE_COEFF: u64 = 10_000;
const MAX_PROBE_VECTORS: u64 = 50_000_000;

/// Primitive integer vectors `c` with `|c_i| ≤ max_coeff` and first nonzero
/// entry positive for which the interval `Σ c_i·v_i` contains 0.
///
/// Candidates only: an empty answer does not certify independence beyond
/// the search box, and a hit does not prove a relation.
pub fn rational_dependence_probe(values: &[CertifiedReal], max_coeff: u64) -> Result<Vec<Vec<i64>>> {
    if max_coeff > MAX_PROBE_COEFF {
        return Err(Error::InvalidArgument(format!("max_coeff must be at most {MAX_PROBE_COEFF}")));
    }
    let m = values.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let side = 2 * max_coeff + 1;
    let pivot = values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.excludes_zero())
        .max_by(|(_, x), (_, y)| x.mid_f64().abs().total_cmp(&y.mid_f64().abs()))
        .map(|(i, _)| i);
    let free = if pivot.is_some() { m - 1 } else { m };
    if side.checked_pow(free as u32).is_none_or(|n| n > MAX_PROBE_VECTORS) {
        return Err(Error::InvalidArgument("search box too large".into()));
    }

    let bound = max_coeff as i64;
    let mut out = Vec::new();
    let mut c = vec![-bound; m];
    if let Some(p) = pivot {
        c[p] = 0;
    }
    let others: Vec<usize> = (0..m).filter(|&i| Some(i) != pivot).collect();
    loop {
        match pivot {
            None => consider(values, &c, &mut out),
            Some(p) => {
                let partial: CertifiedReal = others.iter().map(|&i| values[i].mul_i64(c[i])).sum();
                let target = (-&partial).div(&values[p]).expect("pivot excludes 0");
                let lo = target.lower().to_f64().ceil().max(-(bound as f64)) as i64;
                let hi = target.upper().to_f64().floor().min(bound as f64) as i64;
                for cp in lo..=hi {
                    c[p] = cp;
                    consider(values, &c, &mut out);
                }
                c[p] = 0;
            }
        }
        // odometer over the free coordinates
        let mut i = 0;
        loop {
            if i == others.len() {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            let j = others[i];
            if c[j] < bound {
                c[j] += 1;
                break;
            }
            c[j] = -bound;
            i += 1;
        }
    }
}

fn consider(values: &[CertifiedReal], c: &[i64], out: &mut Vec<Vec<i64>>) {
    let first = c.iter().find(|&&x| x != 0);
    if !first.is_some_and(|&x| x > 0) {
        return;
    }
    if c.iter().fold(0u64, |g, &x| gcd(g, x.unsigned_abs())) != 1 {
        return;
    }
    let total: CertifiedReal = values.iter().zip(c).map(|(v, &k)| v.mul_i64(k)).sum();
    if total.contains_zero() {
        out.push(c.to_vec());
    }
}
