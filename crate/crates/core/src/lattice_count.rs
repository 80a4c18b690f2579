//! Lattice points in dilated faces `lQ` and their relative interiors.
//!
//! Counting walks the integer points of the bounding box of `lQ`. A point is
//! in `lQ` when it is tight on every facet containing `Q` and satisfies the
//! remaining facet inequalities; it is in the relative interior when those
//! remaining inequalities are strict. Tight facets are never tested strictly.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polytope::{Face, FaceId, LatticePolytope};

pub const DEFAULT_COUNT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMode {
    Closed,
    RelativeInterior,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CountRequest {
    pub face: FaceId,
    pub dilation: u64,
    pub mode: CountMode,
}

fn count(p: &LatticePolytope, q: &Face, dilation: u64, mode: CountMode, budget: u64) -> Result<u64> {
    if dilation == 0 {
        return Err(Error::NonPositiveDilation);
    }
    let l = i64::try_from(dilation).map_err(|_| Error::ArithmeticOverflow)?;
    let n = p.ambient_dim();
    let mut lo = vec![i64::MAX; n];
    let mut hi = vec![i64::MIN; n];
    for &v in q.id.indices() {
        for (i, &x) in p.vertices()[v].iter().enumerate() {
            let x = x.checked_mul(l).ok_or(Error::ArithmeticOverflow)?;
            lo[i] = lo[i].min(x);
            hi[i] = hi[i].max(x);
        }
    }
    let volume = lo.iter().zip(&hi).try_fold(1u128, |acc, (&a, &b)| {
        acc.checked_mul((b as i128 - a as i128 + 1) as u128)
    });
    match volume {
        Some(v) if v <= budget as u128 => {}
        v => {
            return Err(Error::BudgetExceeded {
                volume: v.unwrap_or(u128::MAX),
                budget,
            })
        }
    }

    let facets = p.facets();
    let is_active: Vec<bool> = (0..facets.len()).map(|f| q.active_facets.contains(&f)).collect();
    let strict = mode == CountMode::RelativeInterior;
    let mut x = lo.clone();
    let mut total = 0u64;
    loop {
        let inside = facets.iter().zip(&is_active).all(|(h, &active)| {
            let value = h.eval(&x);
            let bound = h.offset as i128 * l as i128;
            if active {
                value == bound
            } else if strict {
                value < bound
            } else {
                value <= bound
            }
        });
        if inside {
            total += 1;
        }
        // odometer step over the box
        let mut i = 0;
        loop {
            if i == n {
                return Ok(total);
            }
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
    }
}

/// `|lQ ∩ Z^n|` with the default budget.
pub fn count_closed(p: &LatticePolytope, q: &Face, dilation: u64) -> Result<u64> {
    count(p, q, dilation, CountMode::Closed, DEFAULT_COUNT_BUDGET)
}

/// `|relint(lQ) ∩ Z^n|` with the default budget.
pub fn count_relint(p: &LatticePolytope, q: &Face, dilation: u64) -> Result<u64> {
    count(p, q, dilation, CountMode::RelativeInterior, DEFAULT_COUNT_BUDGET)
}

/// Counting with a configurable box budget and a memo keyed by
/// `(polytope fingerprint, face, dilation, mode)`.
///
/// The memo only ever stores values that a fresh computation would return,
/// so concurrent fills are idempotent.
#[derive(Debug)]
pub struct LatticeCounter {
    budget: u64,
    cache: Mutex<HashMap<(u64, CountRequest), u64>>,
}

impl Default for LatticeCounter {
    fn default() -> Self {
        Self::new(DEFAULT_COUNT_BUDGET)
    }
}

impl LatticeCounter {
    pub fn new(budget: u64) -> Self {
        LatticeCounter {
            budget,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn count(&self, p: &LatticePolytope, q: &Face, dilation: u64, mode: CountMode) -> Result<u64> {
        let mut h = DefaultHasher::new();
        p.hash(&mut h);
        let key = (
            h.finish(),
            CountRequest {
                face: q.id.clone(),
                dilation,
                mode,
            },
        );
        if let Some(&hit) = self.cache.lock().expect("count cache poisoned").get(&key) {
            return Ok(hit);
        }
        let value = count(p, q, dilation, mode, self.budget)?;
        self.cache.lock().expect("count cache poisoned").insert(key, value);
        Ok(value)
    }

    pub fn closed(&self, p: &LatticePolytope, q: &Face, dilation: u64) -> Result<u64> {
        self.count(p, q, dilation, CountMode::Closed)
    }

    pub fn relint(&self, p: &LatticePolytope, q: &Face, dilation: u64) -> Result<u64> {
        self.count(p, q, dilation, CountMode::RelativeInterior)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{face_lattice, standard_polytope, PolytopeKind};

    #[test]
    fn closed_counts() {
        let square = standard_polytope(PolytopeKind::Cube, 2).unwrap();
        let lat = face_lattice(&square).unwrap();
        assert_eq!(count_closed(&square, lat.top(), 2).unwrap(), 9);
        let edge = lat.require(&FaceId::new(vec![0, 1])).unwrap();
        assert_eq!(count_closed(&square, edge, 5).unwrap(), 6);

        let tri = standard_polytope(PolytopeKind::Simplex, 2).unwrap();
        let lat = face_lattice(&tri).unwrap();
        assert_eq!(count_closed(&tri, lat.top(), 3).unwrap(), 10);
    }

    #[test]
    fn relint_counts() {
        let square = standard_polytope(PolytopeKind::Cube, 2).unwrap();
        let lat = face_lattice(&square).unwrap();
        assert_eq!(count_relint(&square, lat.top(), 3).unwrap(), 4);
        let edge = lat.require(&FaceId::new(vec![0, 1])).unwrap();
        assert_eq!(count_relint(&square, edge, 4).unwrap(), 3);
        for v in lat.faces().iter().filter(|f| f.dim == 0) {
            for l in 1..6 {
                assert_eq!(count_relint(&square, v, l).unwrap(), 1);
            }
        }
    }

    #[test]
    fn budget_is_loud() {
        let square = standard_polytope(PolytopeKind::Cube, 2).unwrap();
        let lat = face_lattice(&square).unwrap();
        let counter = LatticeCounter::new(10);
        assert_eq!(
            counter.closed(&square, lat.top(), 3),
            Err(Error::BudgetExceeded { volume: 16, budget: 10 })
        );
        assert_eq!(counter.closed(&square, lat.top(), 2), Ok(9));
        assert_eq!(count_closed(&square, lat.top(), 0), Err(Error::NonPositiveDilation));
    }

    #[test]
    fn cache_is_transparent() {
        let cube = standard_polytope(PolytopeKind::Cube, 3).unwrap();
        let lat = face_lattice(&cube).unwrap();
        let counter = LatticeCounter::default();
        for face in lat.faces() {
            for l in 1..4 {
                let first = counter.relint(&cube, face, l).unwrap();
                assert_eq!(first, counter.relint(&cube, face, l).unwrap());
                assert_eq!(first, count_relint(&cube, face, l).unwrap());
            }
        }
    }
}
