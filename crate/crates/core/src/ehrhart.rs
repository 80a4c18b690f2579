//! Classical and weighted Ehrhart polynomials, the reciprocity / purity /
//! constant-term checks, and the intersection-cohomology invariants derived
//! from the IC weight function.
//!
//! The weighted polynomial is assembled face by face,
//!
//! ```text
//! E_{P,f}(z, y) = sum_Q f_Q(y) (1+y)^{dim Q} (-1)^{dim Q} Ehr_Q(-z),
//! ```
//!
//! and every evaluation can be compared against a direct weighted lattice
//! count that involves no interpolation at all.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, interpolate_univariate, LaurentPolyY, Poly, Rational, WeightedEhrhartPoly};
use crate::lattice_count::LatticeCounter;
use crate::polytope::{FaceId, FaceLattice, LatticePolytope};
use crate::stanley::{classical_h, ic_weight_function, toric_h, WeightFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Reciprocity,
    Purity,
    ConstantTerm,
    DehnSommerville,
    Oracle,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Reciprocity => "reciprocity",
            Identity::Purity => "purity",
            Identity::ConstantTerm => "constant-term",
            Identity::DehnSommerville => "dehn-sommerville",
            Identity::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Identity::Reciprocity,
            Identity::Purity,
            Identity::ConstantTerm,
            Identity::DehnSommerville,
            Identity::Oracle,
        ]
        .into_iter()
        .find(|i| i.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub label: String,
    pub ell: Option<i64>,
    pub lhs: LaurentPolyY,
    pub rhs: LaurentPolyY,
    pub difference: LaurentPolyY,
}

impl CheckRow {
    fn new(label: impl Into<String>, ell: Option<i64>, lhs: LaurentPolyY, rhs: LaurentPolyY) -> Self {
        let difference = &lhs - &rhs;
        CheckRow {
            label: label.into(),
            ell,
            lhs,
            rhs,
            difference,
        }
    }

    fn at(ell: i64, lhs: LaurentPolyY, rhs: LaurentPolyY) -> Self {
        Self::new(format!("l={ell}"), Some(ell), lhs, rhs)
    }
}

/// Exact comparison of two sides of an identity; passes iff every
/// difference is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub identity: Identity,
    pub ell_range: Vec<i64>,
    pub rows: Vec<CheckRow>,
    pub passed: bool,
}

impl CheckReport {
    fn new(identity: Identity, rows: Vec<CheckRow>) -> Self {
        CheckReport {
            identity,
            ell_range: rows.iter().filter_map(|r| r.ell).collect(),
            passed: rows.iter().all(|r| r.difference.is_zero()),
            rows,
        }
    }

    pub fn first_discrepancy(&self) -> Option<&CheckRow> {
        self.rows.iter().find(|r| !r.difference.is_zero())
    }
}

/// `(-y)^n`.
fn minus_y_pow(n: usize) -> LaurentPolyY {
    LaurentPolyY::monomial(int(if n.is_multiple_of(2) { 1 } else { -1 }), n as i64)
}

/// `(-y)^n * p(1/y)`.
pub fn purity_dual(p: &LaurentPolyY, n: usize) -> LaurentPolyY {
    &minus_y_pow(n) * &p.substitute_reciprocal()
}

/// A polytope with its face lattice and a lattice-point counter, the
/// context every Ehrhart computation runs in.
#[derive(Debug)]
pub struct Ehrhart {
    polytope: LatticePolytope,
    lattice: FaceLattice,
    counter: LatticeCounter,
    ehr_memo: Mutex<BTreeMap<FaceId, Poly>>,
}

impl Ehrhart {
    pub fn new(polytope: LatticePolytope) -> Result<Self> {
        Self::with_counter(polytope, LatticeCounter::default())
    }

    pub fn with_counter(polytope: LatticePolytope, counter: LatticeCounter) -> Result<Self> {
        let lattice = FaceLattice::new(&polytope)?;
        Ok(Ehrhart {
            polytope,
            lattice,
            counter,
            ehr_memo: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    pub fn counter(&self) -> &LatticeCounter {
        &self.counter
    }

    pub fn dim(&self) -> usize {
        self.polytope.ambient_dim()
    }

    pub fn count_closed(&self, q: &FaceId, dilation: u64) -> Result<u64> {
        self.counter.closed(&self.polytope, self.lattice.require(q)?, dilation)
    }

    pub fn count_relint(&self, q: &FaceId, dilation: u64) -> Result<u64> {
        self.counter.relint(&self.polytope, self.lattice.require(q)?, dilation)
    }

    /// `Ehr_Q(z)`, interpolated from counts at `l = 1..=dim Q + 1`. The value
    /// at `z = 0` is then required to be 1.
    pub fn ehrhart_z(&self, q: &FaceId) -> Result<Poly> {
        if let Some(p) = self.ehr_memo.lock().expect("memo poisoned").get(q) {
            return Ok(p.clone());
        }
        let face = self.lattice.require(q)?;
        let samples = (1..=face.dim as u64 + 1)
            .map(|l| Ok((l as i64, int(self.counter.closed(&self.polytope, face, l)? as i64))))
            .collect::<Result<Vec<_>>>()?;
        let ehr = interpolate_univariate(&samples, face.dim)?;
        let at_zero = ehr.eval_int(0);
        if !at_zero.is_one() {
            return Err(Error::Inconsistent {
                face: q.clone(),
                value: at_zero.to_string(),
            });
        }
        self.ehr_memo
            .lock()
            .expect("memo poisoned")
            .insert(q.clone(), ehr.clone());
        Ok(ehr)
    }

    pub fn classical_ehrhart(&self, q: &FaceId) -> Result<WeightedEhrhartPoly> {
        Ok(WeightedEhrhartPoly::from_z_poly(
            &self.ehrhart_z(q)?,
            &LaurentPolyY::one(),
        ))
    }

    /// `(-1)^{dim Q} Ehr_Q(-z)`.
    pub fn relint_ehrhart_z(&self, q: &FaceId) -> Result<Poly> {
        let dim = self.lattice.require(q)?.dim;
        let reflected = self.ehrhart_z(q)?.negate_variable();
        Ok(if dim % 2 == 0 {
            reflected
        } else {
            reflected.scale(&int(-1))
        })
    }

    pub fn relint_ehrhart(&self, q: &FaceId) -> Result<WeightedEhrhartPoly> {
        Ok(WeightedEhrhartPoly::from_z_poly(
            &self.relint_ehrhart_z(q)?,
            &LaurentPolyY::one(),
        ))
    }

    fn require_weights(&self, f: &WeightFunction) -> Result<()> {
        if f.covers(&self.lattice) {
            Ok(())
        } else {
            Err(Error::WeightDomainMismatch)
        }
    }

    /// Sum over faces (in face-lattice order) of `f_Q(y) * factor(dim Q) * term(Q)`.
    fn face_sum(
        &self,
        f: &WeightFunction,
        factor: (i64, i64),
        mut term: impl FnMut(&FaceId) -> Result<Rational>,
    ) -> Result<LaurentPolyY> {
        self.require_weights(f)?;
        let mut total = LaurentPolyY::zero();
        for face in self.lattice.faces() {
            let w = f.get(&face.id).expect("domain checked");
            if w.is_zero() {
                continue;
            }
            let t = term(&face.id)?;
            let power = LaurentPolyY::binomial_power(factor.0, factor.1, face.dim as u32);
            total += &(w * &power).scale(&t);
        }
        Ok(total)
    }

    /// `E_{P,f}(z, y)`.
    pub fn weighted_ehrhart(&self, f: &WeightFunction) -> Result<WeightedEhrhartPoly> {
        self.require_weights(f)?;
        let mut total = WeightedEhrhartPoly::zero();
        for face in self.lattice.faces() {
            let w = f.get(&face.id).expect("domain checked");
            if w.is_zero() {
                continue;
            }
            let weight = w * &LaurentPolyY::binomial_power(1, 1, face.dim as u32);
            total = &total + &WeightedEhrhartPoly::from_z_poly(&self.relint_ehrhart_z(&face.id)?, &weight);
        }
        Ok(total)
    }

    /// `sum_Q f_Q(y) (1+y)^{dim Q} |relint(lQ) ∩ M|`, by direct counting.
    pub fn weighted_count_direct(&self, f: &WeightFunction, dilation: u64) -> Result<LaurentPolyY> {
        self.face_sum(f, (1, 1), |q| Ok(int(self.count_relint(q, dilation)? as i64)))
    }

    /// `sum_Q f_Q(y) (-1-y)^{dim Q} |lQ ∩ M|`.
    pub fn reciprocity_rhs(&self, f: &WeightFunction, dilation: u64) -> Result<LaurentPolyY> {
        self.face_sum(f, (-1, -1), |q| Ok(int(self.count_closed(q, dilation)? as i64)))
    }

    /// `sum_Q f_Q(y) (-1-y)^{dim Q}`, evaluated directly.
    pub fn hodge_polynomial(&self, f: &WeightFunction) -> Result<LaurentPolyY> {
        self.face_sum(f, (-1, -1), |_| Ok(Rational::one()))
    }

    /// `E(-l, y)` against the closed-count formula, `l = 1..=l_max`.
    pub fn check_reciprocity(&self, f: &WeightFunction, l_max: u64) -> Result<CheckReport> {
        let e = self.weighted_ehrhart(f)?;
        let rows = (1..=l_max)
            .map(|l| {
                Ok(CheckRow::at(
                    l as i64,
                    e.evaluate(-(l as i64)),
                    self.reciprocity_rhs(f, l)?,
                ))
            })
            .collect::<Result<_>>()?;
        Ok(CheckReport::new(Identity::Reciprocity, rows))
    }

    /// `E(-l, y)` against `(-y)^n E(l, 1/y)`, `l = 0..=l_max`.
    pub fn check_purity(&self, f: &WeightFunction, l_max: u64) -> Result<CheckReport> {
        let e = self.weighted_ehrhart(f)?;
        let n = self.dim();
        let rows = (0..=l_max as i64)
            .map(|l| CheckRow::at(l, e.evaluate(-l), purity_dual(&e.evaluate(l), n)))
            .collect();
        Ok(CheckReport::new(Identity::Purity, rows))
    }

    /// `E(0, y)` from the interpolated polynomial against the direct formula.
    pub fn check_constant_term(&self, f: &WeightFunction) -> Result<CheckReport> {
        let e = self.weighted_ehrhart(f)?;
        let rows = vec![CheckRow::at(0, e.evaluate(0), self.hodge_polynomial(f)?)];
        Ok(CheckReport::new(Identity::ConstantTerm, rows))
    }

    /// `E(l, y)` against the direct weighted count, `l = 1..=l_max`.
    pub fn check_oracle(&self, f: &WeightFunction, l_max: u64) -> Result<CheckReport> {
        let e = self.weighted_ehrhart(f)?;
        let rows = (1..=l_max)
            .map(|l| {
                Ok(CheckRow::at(
                    l as i64,
                    e.evaluate(l as i64),
                    self.weighted_count_direct(f, l)?,
                ))
            })
            .collect::<Result<_>>()?;
        Ok(CheckReport::new(Identity::Oracle, rows))
    }

    /// For a simple polytope: the `f`-vector `h`-polynomial is palindromic
    /// and equals the toric `h`-polynomial.
    pub fn dehn_sommerville_check(&self) -> Result<CheckReport> {
        if !self.polytope.is_simple() {
            return Err(Error::NotSimple);
        }
        let n = self.dim();
        let h = classical_h(&self.lattice.f_vector()).to_laurent();
        let reversed = LaurentPolyY::from_terms(h.terms().map(|(e, c)| (n as i64 - e, c.clone())));
        let toric = toric_h(&self.lattice)?.to_laurent();
        let rows = vec![
            CheckRow::new("palindromic", None, h.clone(), reversed),
            CheckRow::new("toric", None, h, toric),
        ];
        Ok(CheckReport::new(Identity::DehnSommerville, rows))
    }

    pub fn ic_weights(&self) -> Result<WeightFunction> {
        ic_weight_function(&self.lattice)
    }

    /// `Iχ_y = sum_Q g~_Q(-y) (-1-y)^{dim Q}`.
    pub fn ic_chi(&self) -> Result<LaurentPolyY> {
        self.hodge_polynomial(&self.ic_weights()?)
    }

    /// `Iχ_y` at `y = 1`.
    pub fn ic_signature(&self) -> Result<Rational> {
        Ok(self.ic_chi()?.eval(&Rational::one()))
    }

    /// `Iχ_y` at `y = -t^2`; the coefficients are the IH Betti numbers.
    pub fn ih_poincare(&self) -> Result<Poly> {
        ih_poincare_from_chi(&self.ic_chi()?)
    }

    /// `h_P(s)` from the `g~` table.
    pub fn toric_h(&self) -> Result<Poly> {
        toric_h(&self.lattice)
    }
}

/// Substitutes `y = -t^2`, requiring nonnegative integer coefficients.
pub fn ih_poincare_from_chi(chi: &LaurentPolyY) -> Result<Poly> {
    let mut coeffs = Vec::new();
    for (e, c) in chi.terms() {
        let value = if e % 2 == 0 { c.clone() } else { -c };
        if e < 0 || !value.is_integer() || value.is_negative() {
            return Err(Error::NonIntegralBetti {
                degree: 2 * e,
                value: value.to_string(),
            });
        }
        let k = 2 * e as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        coeffs[k] = value;
    }
    Ok(Poly::new(coeffs))
}
