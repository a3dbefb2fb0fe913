//! Piecewise-constant signature function on the upper half circle.

use std::cmp::Ordering;

use rug::Rational;

use super::turn::Turn;
use crate::algebra::cyclotomic::vanishes_at_primitive_root;
use crate::algebra::IntPoly;
use crate::error::{Error, Result};
use crate::numerics::{CertifiedReal, UnitCircleRoot};

/// A unit-circle zero of Δ in turn coordinates and the signature on the arc
/// that follows it (`None` when the input data does not determine it).
#[derive(Clone, Debug)]
pub struct SignatureJump {
    pub root: UnitCircleRoot,
    pub value: Option<i64>,
}

impl SignatureJump {
    pub fn turn(&self) -> CertifiedReal {
        self.root.turn()
    }
}

/// `σ(e^{2πi·s})` for `s ∈ [0, 1/2]`: 0 up to the first jump, then
/// constant between consecutive jumps.
#[derive(Clone, Debug)]
pub struct SignatureProfile {
    alexander: IntPoly,
    jumps: Vec<SignatureJump>,
}

/// Position of a point relative to the jumps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    /// Inside arc `i` (after `i` jumps).
    Arc(usize),
    /// On the jump with this index.
    Jump(usize),
}

impl SignatureProfile {
    /// `jumps` must list the unit-circle zeros of `alexander` with turn in
    /// `(0, 1/2]`, in increasing order.
    pub fn new(alexander: IntPoly, jumps: Vec<SignatureJump>) -> Self {
        SignatureProfile { alexander, jumps }
    }

    pub fn alexander(&self) -> &IntPoly {
        &self.alexander
    }

    pub fn jumps(&self) -> &[SignatureJump] {
        &self.jumps
    }

    pub fn negated(&self) -> Self {
        SignatureProfile {
            alexander: self.alexander.clone(),
            jumps: self
                .jumps
                .iter()
                .map(|j| SignatureJump { root: j.root.clone(), value: j.value.map(|v| -v) })
                .collect(),
        }
    }

    /// Value on arc `i`; arc 0 starts at turn 0 where the signature vanishes.
    pub fn arc_value(&self, i: usize) -> Option<i64> {
        if i == 0 {
            Some(0)
        } else {
            self.jumps[i - 1].value
        }
    }

    /// `σ(K) = σ(K, -1)`, the value on the last arc.
    pub fn signature(&self) -> Option<i64> {
        self.arc_value(self.jumps.len())
    }

    pub fn is_complete(&self) -> bool {
        self.jumps.iter().all(|j| j.value.is_some())
    }

    /// Locates an exact turn in `[0, 1/2]`. A rational turn `p/q` lies on a
    /// jump iff `Φ_q` divides Δ, which is decided exactly first; otherwise
    /// refinement separates it from every jump.
    pub fn locate_exact(&self, r: &Rational) -> Result<Location> {
        let q = r.denom().to_u64().expect("turn denominator fits in u64");
        let singular = *r > 0 && vanishes_at_primitive_root(&self.alexander, q);
        let mut arc = 0;
        for (i, j) in self.jumps.iter().enumerate() {
            if singular {
                let t = j.turn();
                let rb = CertifiedReal::from_rational(r, t.prec() + 16);
                if t.overlaps(&rb) {
                    return Ok(Location::Jump(i));
                }
            }
            match compare_turn(&j.root, r)? {
                Ordering::Less => arc = i + 1,
                Ordering::Equal => return Ok(Location::Jump(i)),
                Ordering::Greater => break,
            }
        }
        Ok(Location::Arc(arc))
    }

    /// Locates a certified turn in `[0, 1/2]` (slightly outside is allowed;
    /// the function is symmetric about both ends). Errors if it cannot be
    /// separated from a jump.
    pub fn locate_ball(&self, b: &CertifiedReal) -> Result<Location> {
        let target = (b.radius_f64() * 1e-3).max(1e-300);
        let mut arc = 0;
        for (i, j) in self.jumps.iter().enumerate() {
            let mut root = j.root.clone();
            let mut radius = 1e-15f64;
            loop {
                let t = root.turn();
                match t.certified_cmp(b) {
                    Some(Ordering::Less) => {
                        arc = i + 1;
                        break;
                    }
                    Some(Ordering::Greater) => return Ok(Location::Arc(arc)),
                    _ => {}
                }
                if radius < target {
                    return Err(Error::SingularAtZ {
                        point: format!("turn {b}, within reach of the zero at turn {}", t),
                    });
                }
                radius *= 1e-15;
                root.refine_angle(radius);
            }
        }
        Ok(Location::Arc(arc))
    }

    pub fn value_at(&self, turn: &Turn) -> Result<i64> {
        let loc = match turn.folded() {
            Turn::Exact(r) => self.locate_exact(&r)?,
            Turn::Approx(b) => self.locate_ball(&b)?,
        };
        match loc {
            Location::Jump(i) => Err(Error::SingularAtZ {
                point: format!("turn {}", self.jumps[i].turn()),
            }),
            Location::Arc(i) => self.arc_value(i).ok_or_else(|| {
                Error::InsufficientData(format!(
                    "the signature between the zeros {} and {} is not determined by σ(K) alone",
                    i,
                    i + 1
                ))
            }),
        }
    }

    /// `∫ σ` over the circle, in turns:
    /// `v_m - 2 Σ s_i (v_i - v_{i-1})` for jump turns `s_i` and arc values `v_i`.
    pub fn rho(&self, radius: f64) -> Result<CertifiedReal> {
        if self.jumps.is_empty() {
            return Ok(CertifiedReal::exact_zero());
        }
        let values: Vec<i64> = (0..=self.jumps.len())
            .map(|i| self.arc_value(i))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                Error::InsufficientData(
                    "ρ needs the signature on every arc; supply a Seifert matrix or signature_jumps".into(),
                )
            })?;
        let weight: i64 = values.windows(2).map(|w| 2 * (w[1] - w[0]).abs()).sum();
        let per_root = radius / (weight.max(1) as f64 * 2.0);
        let mut acc = CertifiedReal::from_i64(values[self.jumps.len()], 64);
        for (i, j) in self.jumps.iter().enumerate() {
            let dv = values[i + 1] - values[i];
            if dv == 0 {
                continue;
            }
            let mut root = j.root.clone();
            if root.turn().radius_f64() > per_root {
                root.refine_angle(per_root * 4.0);
            }
            let mut s = root.turn();
            while s.radius_f64() > per_root {
                root.refine_angle(root.angle.radius_f64() / 16.0);
                s = root.turn();
            }
            acc = &acc - &s.mul_i64(2 * dv);
        }
        Ok(acc)
    }
}

/// Sign of `root_turn - r`, refining the root until the intervals separate.
fn compare_turn(root: &UnitCircleRoot, r: &Rational) -> Result<Ordering> {
    if root.is_minus_one() {
        return Ok(Rational::from((1, 2)).cmp(r));
    }
    let mut root = root.clone();
    let mut radius = 1e-15f64;
    for _ in 0..12 {
        let t = root.turn();
        let prec = t.prec() + 16;
        let rb = CertifiedReal::from_rational(r, prec);
        if let Some(ord) = t.certified_cmp(&rb) {
            return Ok(ord);
        }
        radius *= 1e-20;
        root.refine_angle(radius);
    }
    Err(Error::SingularAtZ { point: format!("turn {r}") })
}
