use std::fmt;
use std::sync::{Arc, OnceLock};

use rug::{Float, Integer, Rational};

use super::profile::{SignatureJump, SignatureProfile};
use super::seifert::{positive_lead, SeifertMatrix};
use super::turn::Turn;
use crate::algebra::cyclotomic::{roots_of_unity_zero_count, vanishes_at_primitive_root};
use crate::algebra::{normalize_alexander, IntLaurentPoly, IntPoly};
use crate::error::{Error, Result};
use crate::numerics::{log_mahler, unit_circle_roots, CertifiedReal, UnitCircleRoot, DEFAULT_RADIUS};

/// Declared signature value after a jump at `turn`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeclaredJump {
    pub turn: Rational,
    pub value: i64,
}

/// Raw input for a knot, as read from a catalog entry.
///
/// Declared Δ, σ and jumps describe the stored data; `mirror` asks for the
/// mirror image of that data.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct KnotSpec {
    pub name: String,
    pub seifert: Option<Vec<Vec<i64>>>,
    pub alexander: Option<Vec<Integer>>,
    pub signature: Option<i64>,
    pub signature_jumps: Option<Vec<DeclaredJump>>,
    pub mirror: bool,
    pub comment: String,
    pub genus: Option<u32>,
    pub fibered: Option<bool>,
}

struct KnotData {
    spec: KnotSpec,
    seifert: Option<SeifertMatrix>,
    alexander: IntPoly,
    radius: f64,
    profile: OnceLock<Result<SignatureProfile>>,
    tau: OnceLock<Result<CertifiedReal>>,
    rho: OnceLock<Result<CertifiedReal>>,
}

/// A named knot with cached invariants. Cloning and mirroring share the
/// underlying data and caches.
#[derive(Clone)]
pub struct KnotRecord {
    name: String,
    mirrored: bool,
    data: Arc<KnotData>,
}

impl fmt::Debug for KnotRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KnotRecord")
            .field("name", &self.name)
            .field("mirrored", &self.mirrored)
            .field("alexander", &self.data.alexander.to_string())
            .finish()
    }
}

impl KnotRecord {
    pub fn new(spec: KnotSpec) -> Result<Self> {
        Self::with_radius_spec(spec, DEFAULT_RADIUS)
    }

    pub fn from_seifert(name: &str, entries: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(KnotSpec { name: name.into(), seifert: Some(entries), ..Default::default() })
    }

    pub fn from_alexander(name: &str, coeffs: &[i64], signature: Option<i64>) -> Result<Self> {
        Self::new(KnotSpec {
            name: name.into(),
            alexander: Some(coeffs.iter().map(|&c| Integer::from(c)).collect()),
            signature,
            ..Default::default()
        })
    }

    fn with_radius_spec(spec: KnotSpec, radius: f64) -> Result<Self> {
        let knot = spec.name.clone();
        let bad = move |message: String| Error::InconsistentInput { knot: knot.clone(), message };
        if spec.seifert.is_none() && spec.alexander.is_none() {
            return Err(bad("either a Seifert matrix or an Alexander polynomial is required".into()));
        }
        let seifert = spec.seifert.clone().map(SeifertMatrix::new).transpose()?;
        let declared = match &spec.alexander {
            Some(c) => {
                let laurent = IntLaurentPoly::new(c.clone(), 0);
                let p = normalize_alexander(&laurent)
                    .map_err(|_| bad("the Alexander polynomial is zero".into()))?;
                if !p.is_reciprocal() || p.deg() % 2 == 1 {
                    return Err(bad(format!("{p} is not reciprocal of even degree")));
                }
                if p.eval(&Integer::from(1)).abs() != 1 {
                    return Err(bad(format!("{p} does not take the value ±1 at t = 1")));
                }
                Some(positive_lead(p))
            }
            None => None,
        };
        let alexander = match (&seifert, declared) {
            (Some(s), Some(d)) => {
                let from_matrix = s.alexander();
                if from_matrix != d {
                    return Err(bad(format!(
                        "declared Alexander polynomial {d} differs from the Seifert matrix's {from_matrix}"
                    )));
                }
                d
            }
            (Some(s), None) => s.alexander(),
            (None, Some(d)) => d,
            (None, None) => unreachable!(),
        };
        if let Some(s) = spec.signature {
            if s % 2 != 0 {
                return Err(bad(format!("signature {s} is odd")));
            }
        }
        if let Some(jumps) = &spec.signature_jumps {
            if let Some(j) = jumps.iter().find(|j| j.value % 2 != 0) {
                return Err(bad(format!("signature value {} after turn {} is odd", j.value, j.turn)));
            }
        }
        let name = spec.name.clone();
        let mirrored = spec.mirror;
        let data = KnotData {
            spec,
            seifert,
            alexander,
            radius,
            profile: OnceLock::new(),
            tau: OnceLock::new(),
            rho: OnceLock::new(),
        };
        let record = KnotRecord { name, mirrored, data: Arc::new(data) };
        let d = &record.data;
        if let (Some(s), Some(sig)) = (&d.seifert, d.spec.signature) {
            let from_matrix = s.signature_at_turn(&Rational::from((1, 2)))?;
            if from_matrix != sig {
                return Err(bad(format!(
                    "declared signature {sig} differs from the Seifert matrix's {from_matrix}"
                )));
            }
        }
        if d.spec.signature_jumps.is_some() || (d.seifert.is_none() && d.spec.signature.is_some()) {
            record.base_profile()?;
        }
        Ok(record)
    }

    /// Same knot with invariants certified to `radius` (fresh caches).
    pub fn with_radius(&self, radius: f64) -> Result<Self> {
        let mut spec = self.data.spec.clone();
        spec.name = self.name.clone();
        spec.mirror = self.mirrored;
        Self::with_radius_spec(spec, radius)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    pub fn radius(&self) -> f64 {
        self.data.radius
    }

    pub fn comment(&self) -> &str {
        &self.data.spec.comment
    }

    pub fn genus(&self) -> Option<u32> {
        self.data.spec.genus
    }

    pub fn fibered(&self) -> Option<bool> {
        self.data.spec.fibered
    }

    pub fn has_seifert(&self) -> bool {
        self.data.seifert.is_some()
    }

    /// Seifert matrix of this (possibly mirrored) knot.
    pub fn seifert(&self) -> Option<SeifertMatrix> {
        let s = self.data.seifert.clone()?;
        Some(if self.mirrored { s.negated() } else { s })
    }

    /// The input data in catalog form, with this record's name and mirror flag.
    pub fn spec(&self) -> KnotSpec {
        let mut spec = self.data.spec.clone();
        spec.name = self.name.clone();
        spec.mirror = self.mirrored;
        spec
    }

    pub fn mirror(&self) -> KnotRecord {
        let name = match self.name.strip_prefix("mirror:") {
            Some(base) => base.to_string(),
            None => format!("mirror:{}", self.name),
        };
        KnotRecord { name, mirrored: !self.mirrored, data: Arc::clone(&self.data) }
    }

    /// Normalized Alexander polynomial (mirror-invariant).
    pub fn alexander(&self) -> &IntPoly {
        &self.data.alexander
    }

    fn sign(&self) -> i64 {
        if self.mirrored {
            -1
        } else {
            1
        }
    }

    fn base_profile(&self) -> Result<&SignatureProfile> {
        self.data
            .profile
            .get_or_init(|| build_profile(&self.data))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Signature function of this knot (mirror applied).
    pub fn profile(&self) -> Result<SignatureProfile> {
        let p = self.base_profile()?;
        Ok(if self.mirrored { p.negated() } else { p.clone() })
    }

    /// Unit-circle zeros of Δ with turn in `(0, 1/2]`.
    pub fn jump_roots(&self) -> Result<Vec<UnitCircleRoot>> {
        Ok(self.base_profile()?.jumps().iter().map(|j| j.root.clone()).collect())
    }

    /// `σ(K, e^{2πi·turn})`.
    pub fn signature_at(&self, turn: &Turn) -> Result<i64> {
        let folded = turn.folded();
        if let Turn::Exact(r) = &folded {
            if *r == 0 {
                return Ok(0);
            }
            let q = r.denom().to_u64().ok_or_else(|| {
                Error::InvalidArgument(format!("turn {r} has too large a denominator"))
            })?;
            if vanishes_at_primitive_root(&self.data.alexander, q) {
                return Err(Error::SingularAtZ { point: format!("turn {turn}") });
            }
            if let Some(s) = &self.data.seifert {
                return Ok(self.sign() * s.signature_at_turn(r)?);
            }
        }
        Ok(self.sign() * self.base_profile()?.value_at(&folded)?)
    }

    /// `σ(K) = σ(K, -1)`.
    pub fn signature(&self) -> Result<i64> {
        self.signature_at(&Turn::new(1, 2))
    }

    /// `Σ_{k=1}^{n} σ(K, e^{2πik/n})`.
    pub fn signature_sum(&self, n: u64) -> Result<i64> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        if roots_of_unity_zero_count(&self.data.alexander, n) > 0 {
            return Err(Error::SingularAtRootOfUnity { n });
        }
        let profile = self.base_profile()?;
        let mut sum = 0i64;
        for k in 1..n {
            sum += profile.value_at(&Turn::Exact(Rational::from((k, n))))?;
        }
        Ok(self.sign() * sum)
    }

    /// `τ(K)`, the log Mahler measure of Δ.
    pub fn tau(&self) -> Result<CertifiedReal> {
        self.data
            .tau
            .get_or_init(|| log_mahler(&self.data.alexander, self.data.radius))
            .clone()
    }

    /// `ρ(K) = ∫ σ(K, z) dz` over the unit circle of total length 1.
    pub fn rho(&self) -> Result<CertifiedReal> {
        let base = self
            .data
            .rho
            .get_or_init(|| self.base_profile().and_then(|p| p.rho(self.data.radius)))
            .clone()?;
        Ok(if self.mirrored { -base } else { base })
    }
}

fn build_profile(d: &KnotData) -> Result<SignatureProfile> {
    let knot = || d.spec.name.clone();
    let roots = unit_circle_roots(&d.alexander, d.radius)?;
    let m = roots.len();
    let values: Vec<Option<i64>> = if let Some(s) = &d.seifert {
        seifert_arc_values(s, &roots)?
    } else if let Some(declared) = &d.spec.signature_jumps {
        let values = match_declared_jumps(&roots, declared).map_err(|message| {
            Error::InconsistentInput { knot: knot(), message }
        })?;
        if let (Some(sig), Some(Some(last))) = (d.spec.signature, values.last()) {
            if sig != *last {
                return Err(Error::InconsistentInput {
                    knot: knot(),
                    message: format!("signature {sig} differs from the last jump value {last}"),
                });
            }
        }
        values
    } else {
        let mut values = vec![None; m];
        if let Some(sig) = d.spec.signature {
            if m == 0 && sig != 0 {
                return Err(Error::InconsistentInput {
                    knot: knot(),
                    message: format!(
                        "Δ has no zeros on the unit circle, so the signature is 0, not {sig}"
                    ),
                });
            }
            if let Some(last) = values.last_mut() {
                *last = Some(sig);
            }
        }
        values
    };
    Ok(SignatureProfile::new(
        d.alexander.clone(),
        roots
            .into_iter()
            .zip(values)
            .map(|(root, value)| SignatureJump { root, value })
            .collect(),
    ))
}

/// Evaluates the Seifert form at an exact point inside each arc after a jump.
fn seifert_arc_values(s: &SeifertMatrix, roots: &[UnitCircleRoot]) -> Result<Vec<Option<i64>>> {
    let half = Rational::from((1, 2));
    let mut out = Vec::with_capacity(roots.len());
    for i in 0..roots.len() {
        if roots[i].is_minus_one() {
            // empty arc; keep the previous value
            out.push(out.last().copied().unwrap_or(Some(0)));
            continue;
        }
        let sample = match roots.get(i + 1) {
            None => half.clone(),
            Some(next) => rational_between(&roots[i], next),
        };
        out.push(Some(s.signature_at_turn(&sample)?));
    }
    Ok(out)
}

/// An exact turn strictly between two distinct roots.
fn rational_between(a: &UnitCircleRoot, b: &UnitCircleRoot) -> Rational {
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        let (ta, tb) = (a.turn(), b.turn());
        if ta.upper() < tb.lower() {
            let mid = Float::with_val(ta.prec().max(tb.prec()) + 1, ta.upper() + tb.lower()) / 2u32;
            return mid.to_rational().expect("finite midpoint");
        }
        let r = ta.radius_f64().min(tb.radius_f64()) * 1e-6;
        a.refine_angle(r);
        b.refine_angle(r);
    }
}

/// Assigns declared jumps to certified roots in order; each declared turn
/// must be nearest to the root it is assigned to.
fn match_declared_jumps(
    roots: &[UnitCircleRoot],
    declared: &[DeclaredJump],
) -> std::result::Result<Vec<Option<i64>>, String> {
    if declared.len() != roots.len() {
        return Err(format!(
            "Δ has {} unit-circle zeros with turn in (0, 1/2] but {} signature jumps were given",
            roots.len(),
            declared.len()
        ));
    }
    let mut sorted: Vec<(f64, &DeclaredJump)> = declared
        .iter()
        .map(|j| {
            let f = Turn::Exact(j.turn.clone()).folded();
            (f.as_exact().unwrap().to_f64(), j)
        })
        .collect();
    sorted.sort_by(|x, y| x.0.total_cmp(&y.0));
    let turns: Vec<f64> = roots.iter().map(|r| r.turn().mid_f64()).collect();
    let mut values = Vec::with_capacity(roots.len());
    for (i, (t, j)) in sorted.iter().enumerate() {
        let nearest = turns
            .iter()
            .enumerate()
            .min_by(|x, y| (x.1 - t).abs().total_cmp(&(y.1 - t).abs()))
            .map(|(k, _)| k)
            .unwrap();
        if nearest != i {
            return Err(format!(
                "declared jump at turn {} does not match the zero at turn {:.12}",
                j.turn, turns[i]
            ));
        }
        values.push(Some(j.value));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> KnotRecord {
        KnotRecord::from_seifert("trefoil", vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    fn figure8() -> KnotRecord {
        KnotRecord::from_seifert("figure8", vec![vec![1, 1], vec![0, -1]]).unwrap()
    }

    fn k948() -> KnotRecord {
        KnotRecord::from_alexander("9_48", &[1, -7, 11, -7, 1], Some(2)).unwrap()
    }

    fn k12n642() -> KnotRecord {
        KnotRecord::from_alexander("12n_642", &[1, 7, -15, 7, 1], Some(2)).unwrap()
    }

    #[test]
    fn alexander_of_inputs() {
        assert_eq!(trefoil().alexander(), &IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(figure8().alexander(), &IntPoly::from_i64s(&[1, -3, 1]));
        assert_eq!(k948().alexander(), &IntPoly::from_i64s(&[1, -7, 11, -7, 1]));
    }

    #[test]
    fn signatures() {
        for k in [trefoil(), figure8(), k948(), k12n642()] {
            assert_eq!(k.signature_at(&Turn::new(0, 1)).unwrap(), 0);
        }
        assert_eq!(k948().signature().unwrap(), 2);
        assert_eq!(figure8().signature().unwrap(), 0);
        assert_eq!(trefoil().signature().unwrap(), -2);
        assert_eq!(trefoil().mirror().signature().unwrap(), 2);
        assert!(matches!(
            trefoil().signature_at(&Turn::new(1, 6)),
            Err(Error::SingularAtZ { .. })
        ));
    }

    #[test]
    fn signature_sums() {
        assert_eq!(k948().signature_sum(4).unwrap(), 6);
        assert_eq!(k948().signature_sum(8).unwrap(), 14);
        assert_eq!(k12n642().signature_sum(3).unwrap(), 4);
        assert_eq!(k12n642().signature_sum(6).unwrap(), 10);
        assert_eq!(k948().signature_sum(1).unwrap(), 0);
        assert_eq!(k948().mirror().signature_sum(8).unwrap(), -14);
        assert!(matches!(trefoil().signature_sum(6), Err(Error::SingularAtRootOfUnity { n: 6 })));
    }

    #[test]
    fn tau_and_rho() {
        assert!(trefoil().tau().unwrap().is_exact_zero());
        assert!(figure8().rho().unwrap().is_exact_zero());
        let t = k948().tau().unwrap();
        assert!((t.mid_f64() - 5.10696f64.ln()).abs() < 1e-5);
        assert!(t.radius_f64() <= 1e-12);
        let r = k948().rho().unwrap();
        assert!((r.mid_f64() - 1.645123).abs() < 1e-6);
        let r2 = k12n642().rho().unwrap();
        assert!((r2.mid_f64() - 1.806503).abs() < 1e-6);
        let m = k948().mirror();
        assert!((m.rho().unwrap().mid_f64() + 1.645123).abs() < 1e-6);
        assert_eq!(m.tau().unwrap(), t);
        assert_eq!(m.mirror().name(), "9_48");
        assert_eq!(m.name(), "mirror:9_48");
    }

    #[test]
    fn seifert_profile_matches_direct_evaluation() {
        let k = trefoil();
        let p = k.profile().unwrap();
        assert_eq!(p.signature(), Some(-2));
        for (n, d) in [(1, 10), (1, 5), (1, 3), (9, 20)] {
            let t = Turn::new(n, d);
            assert_eq!(p.value_at(&t).unwrap(), k.signature_at(&t).unwrap());
        }
    }

    #[test]
    fn validation_errors() {
        let r = KnotRecord::new(KnotSpec { name: "x".into(), ..Default::default() });
        assert!(matches!(r, Err(Error::InconsistentInput { .. })));
        assert!(matches!(
            KnotRecord::from_alexander("x", &[1, -3, 1], Some(2)),
            Err(Error::InconsistentInput { .. })
        ));
        assert!(matches!(
            KnotRecord::from_alexander("x", &[1, 2, 3], None),
            Err(Error::InconsistentInput { .. })
        ));
        assert!(matches!(
            KnotRecord::from_alexander("x", &[1, -7, 11, -7, 1], Some(3)),
            Err(Error::InconsistentInput { .. })
        ));
        let both = KnotRecord::new(KnotSpec {
            name: "t".into(),
            seifert: Some(vec![vec![-1, 1], vec![0, -1]]),
            alexander: Some(vec![Integer::from(1), Integer::from(-3), Integer::from(1)]),
            ..Default::default()
        });
        assert!(matches!(both, Err(Error::InconsistentInput { .. })));
        let sig = KnotRecord::new(KnotSpec {
            name: "t".into(),
            seifert: Some(vec![vec![-1, 1], vec![0, -1]]),
            signature: Some(2),
            ..Default::default()
        });
        assert!(matches!(sig, Err(Error::InconsistentInput { .. })));
        assert!(matches!(
            KnotRecord::from_seifert("bad", vec![vec![1, 0], vec![0, 1]]),
            Err(Error::InvalidSeifert(_))
        ));
    }

    #[test]
    fn declared_jumps() {
        // granny knot: (t^2 - t + 1)^2, one double zero
        let spec = KnotSpec {
            name: "granny".into(),
            alexander: Some([1, -2, 3, -2, 1].iter().map(|&c| Integer::from(c)).collect()),
            signature_jumps: Some(vec![DeclaredJump { turn: Rational::from((1, 6)), value: -4 }]),
            ..Default::default()
        };
        let k = KnotRecord::new(spec.clone()).unwrap();
        assert_eq!(k.signature().unwrap(), -4);
        let rho = k.rho().unwrap();
        assert!((rho.mid_f64() + 8.0 / 3.0).abs() < 1e-12);

        let mut wrong = spec.clone();
        wrong.signature_jumps = Some(vec![]);
        assert!(matches!(KnotRecord::new(wrong), Err(Error::InconsistentInput { .. })));
        let mut wrong = spec;
        wrong.signature = Some(4);
        assert!(matches!(KnotRecord::new(wrong), Err(Error::InconsistentInput { .. })));
    }

    #[test]
    fn insufficient_data_with_two_jumps() {
        // 3_1 # 5_1: Δ = (t^2 - t + 1)(t^4 - t^3 + t^2 - t + 1), zeros at 1/10, 1/6, 3/10
        let d = &IntPoly::from_i64s(&[1, -1, 1]) * &IntPoly::from_i64s(&[1, -1, 1, -1, 1]);
        let coeffs: Vec<i64> = d.coeffs().iter().map(|c| c.to_i64().unwrap()).collect();
        let k = KnotRecord::from_alexander("3_1#5_1", &coeffs, Some(-6)).unwrap();
        assert_eq!(k.signature().unwrap(), -6);
        assert_eq!(k.signature_at(&Turn::new(1, 20)).unwrap(), 0);
        assert!(matches!(k.rho(), Err(Error::InsufficientData(_))));
        assert!(matches!(k.signature_at(&Turn::new(1, 8)), Err(Error::InsufficientData(_))));
    }

    #[test]
    fn caches_are_shared_with_mirror() {
        let k = k948();
        let m = k.mirror();
        let _ = m.tau().unwrap();
        assert!(k.data.tau.get().is_some());
        assert!(Arc::ptr_eq(&k.data, &m.data));
    }

    #[test]
    fn unknot() {
        let u = KnotRecord::from_alexander("unknot", &[1], Some(0)).unwrap();
        assert!(u.tau().unwrap().is_exact_zero());
        assert!(u.rho().unwrap().is_exact_zero());
        assert_eq!(u.signature_sum(7).unwrap(), 0);
        assert!(u.profile().unwrap().jumps().is_empty());
        let empty = KnotRecord::from_seifert("unknot", vec![]).unwrap();
        assert_eq!(empty.signature().unwrap(), 0);
    }
}
