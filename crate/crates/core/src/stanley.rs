//! Stanley's toric `g`- and `h`-polynomials on face posets, the dual-face
//! polynomials `g~_Q`, weight functions, and the intersection-cohomology
//! weight `f_Q(y) = g~_Q(-y)`.
//!
//! `g~_Q` is the `g`-polynomial of the polar face `Q°`. It is computed from
//! the order-dual of the interval `[Q, P]` of the face lattice, never from a
//! geometric polar polytope, so it is defined for every full-dimensional
//! polytope whether or not the origin is interior.

use std::collections::BTreeMap;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::exact::{int, LaurentPolyY, Poly};
use crate::polytope::{FaceId, FaceLattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetElement {
    /// The face of the underlying polytope; `None` for its empty face.
    pub face: Option<FaceId>,
    pub dim: i64,
}

/// A finite graded poset of faces with a bottom of dimension `-1` and a top.
#[derive(Clone, Debug)]
pub struct FacePoset {
    elements: Vec<PosetElement>,
    /// `less[a][b]` iff `a < b` strictly.
    less: Vec<Vec<bool>>,
    bottom: usize,
    top: usize,
}

impl FacePoset {
    fn from_parts(elements: Vec<PosetElement>, less: Vec<Vec<bool>>) -> Result<Self> {
        let n = elements.len();
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| x == b || less[b][x]))
            .ok_or_else(|| Error::NotGraded("no bottom element".into()))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| x == t || less[x][t]))
            .ok_or_else(|| Error::NotGraded("no top element".into()))?;
        if elements[bottom].dim != -1 {
            return Err(Error::NotGraded(format!(
                "bottom element has dimension {}",
                elements[bottom].dim
            )));
        }
        for a in 0..n {
            for b in 0..n {
                if !less[a][b] {
                    continue;
                }
                let gap = elements[b].dim - elements[a].dim;
                let covers = !(0..n).any(|c| less[a][c] && less[c][b]);
                if gap < 1 || (covers && gap != 1) {
                    return Err(Error::NotGraded(format!(
                        "dimensions {} < {} along a covering relation",
                        elements[a].dim, elements[b].dim
                    )));
                }
            }
        }
        Ok(FacePoset {
            elements,
            less,
            bottom,
            top,
        })
    }

    /// All faces of the polytope, plus the empty face as bottom.
    pub fn of_polytope(lattice: &FaceLattice) -> Self {
        let mut elements = vec![PosetElement { face: None, dim: -1 }];
        elements.extend(lattice.faces().iter().map(|f| PosetElement {
            face: Some(f.id.clone()),
            dim: f.dim as i64,
        }));
        let n = elements.len();
        let less = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| match (&elements[a].face, &elements[b].face) {
                        (None, Some(_)) => true,
                        (Some(x), Some(y)) => x != y && x.is_subset_of(y),
                        _ => false,
                    })
                    .collect()
            })
            .collect();
        Self::from_parts(elements, less).expect("a face lattice is graded")
    }

    /// Order-dual, regraded so the old top becomes the new bottom with
    /// dimension `-1`: `dim* = dim(top) - 1 - dim`.
    pub fn dual(&self) -> Self {
        let d = self.elements[self.top].dim;
        let n = self.elements.len();
        FacePoset {
            elements: self
                .elements
                .iter()
                .map(|e| PosetElement {
                    face: e.face.clone(),
                    dim: d - 1 - e.dim,
                })
                .collect(),
            less: (0..n).map(|a| (0..n).map(|b| self.less[b][a]).collect()).collect(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// The interval `[bottom, x]`.
    pub fn lower_interval(&self, x: usize) -> Self {
        let keep: Vec<usize> = (0..self.elements.len())
            .filter(|&a| a == x || self.less[a][x])
            .collect();
        let elements = keep.iter().map(|&a| self.elements[a].clone()).collect();
        let less = keep
            .iter()
            .map(|&a| keep.iter().map(|&b| self.less[a][b]).collect())
            .collect();
        Self::from_parts(elements, less).expect("an interval of a graded poset is graded")
    }

    /// Order-dual of `[Q, P]`: the face poset of the polar face `Q°`, with
    /// `P` playing the empty face.
    pub fn dual_interval(lattice: &FaceLattice, q: &FaceId) -> Result<Self> {
        lattice.require(q)?;
        let dual = Self::of_polytope(lattice).dual();
        let x = dual
            .elements
            .iter()
            .position(|e| e.face.as_ref() == Some(q))
            .expect("face is present");
        Ok(dual.lower_interval(x))
    }

    pub fn elements(&self) -> &[PosetElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn top(&self) -> &PosetElement {
        &self.elements[self.top]
    }

    /// Dimension of the top element, i.e. of the polytope the poset belongs to.
    pub fn dim(&self) -> i64 {
        self.elements[self.top].dim
    }

    /// Every nontrivial interval has as many even- as odd-rank elements.
    pub fn is_eulerian(&self) -> bool {
        let n = self.elements.len();
        (0..n).all(|a| {
            (0..n).filter(|&b| self.less[a][b]).all(|b| {
                let sum: i64 = (0..n)
                    .filter(|&z| (z == a || self.less[a][z]) && (z == b || self.less[z][b]))
                    .map(|z| if self.elements[z].dim.rem_euclid(2) == 0 { 1 } else { -1 })
                    .sum();
                sum == 0
            })
        })
    }

    /// `g` of every lower interval `[bottom, x]`, indexed like `elements()`.
    fn g_values(&self) -> Vec<Poly> {
        let n = self.elements.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| self.elements[x].dim);

        let t_minus_one = Poly::from_integers(&[-1, 1]);
        let span = (self.dim() + 2).max(1) as usize;
        let powers: Vec<Poly> = (0..span).map(|k| t_minus_one.pow(k as u32)).collect();

        let mut g = vec![Poly::zero(); n];
        for x in order {
            if x == self.bottom {
                g[x] = Poly::one();
                continue;
            }
            let d = self.elements[x].dim;
            let mut h = Poly::zero();
            for y in (0..n).filter(|&y| self.less[y][x]) {
                let k = (d - 1 - self.elements[y].dim) as usize;
                h = &h + &(&g[y] * &powers[k]);
            }
            g[x] = truncated_difference(&h, d);
        }
        g
    }
}

/// `g_0 = h_0`, `g_i = h_i - h_{i-1}` for `1 <= i <= floor(d/2)`.
fn truncated_difference(h: &Poly, d: i64) -> Poly {
    let top = (d.max(0) / 2) as usize;
    let mut coeffs = vec![h.coeff(0)];
    coeffs.extend((1..=top).map(|i| h.coeff(i) - h.coeff(i - 1)));
    Poly::new(coeffs)
}

/// Toric `g`-polynomial of the poset's top element.
pub fn g_polynomial(poset: &FacePoset) -> Result<Poly> {
    if !poset.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    Ok(poset.g_values().swap_remove(poset.top))
}

/// `g~_Q(t) = g_{Q°}(t)`.
pub fn g_tilde(lattice: &FaceLattice, q: &FaceId) -> Result<Poly> {
    g_polynomial(&FacePoset::dual_interval(lattice, q)?)
}

/// `g~_Q` for every nonempty face, from a single pass over the dual lattice.
pub fn g_tilde_table(lattice: &FaceLattice) -> Result<BTreeMap<FaceId, Poly>> {
    let dual = FacePoset::of_polytope(lattice).dual();
    if !dual.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    Ok(dual
        .elements
        .iter()
        .zip(dual.g_values())
        .filter_map(|(e, g)| e.face.clone().map(|f| (f, g)))
        .collect())
}

/// `h_P(s) = sum_Q g~_Q(s) (s-1)^{dim Q}`, palindromic of degree `n`.
pub fn toric_h(lattice: &FaceLattice) -> Result<Poly> {
    let table = g_tilde_table(lattice)?;
    let s_minus_one = Poly::from_integers(&[-1, 1]);
    Ok(lattice.faces().iter().fold(Poly::zero(), |acc, f| {
        &acc + &(&table[&f.id] * &s_minus_one.pow(f.dim as u32))
    }))
}

/// The classical `h`-polynomial of a simple polytope from its `f`-vector:
/// `h(s) = sum_j f_j (s-1)^j`, which is the simplicial-polar formula
/// `sum_k f_{k-1}(P°) (s-1)^{n-k}` with `f_{k-1}(P°) = f_{n-k}(P)`.
pub fn classical_h(f_vector: &[usize]) -> Poly {
    let s_minus_one = Poly::from_integers(&[-1, 1]);
    f_vector.iter().enumerate().fold(Poly::zero(), |acc, (j, &f)| {
        &acc + &s_minus_one.pow(j as u32).scale(&int(f as i64))
    })
}

/// Laurent weights on the nonempty faces of a polytope.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightFunction {
    entries: BTreeMap<FaceId, LaurentPolyY>,
}

impl WeightFunction {
    pub fn from_fn(lattice: &FaceLattice, mut f: impl FnMut(&crate::polytope::Face) -> LaurentPolyY) -> Self {
        WeightFunction {
            entries: lattice.faces().iter().map(|face| (face.id.clone(), f(face))).collect(),
        }
    }

    pub fn constant(lattice: &FaceLattice) -> Self {
        Self::from_fn(lattice, |_| LaurentPolyY::one())
    }

    pub fn indicator(lattice: &FaceLattice, q: &FaceId) -> Result<Self> {
        lattice.require(q)?;
        Ok(Self::from_fn(lattice, |f| {
            if &f.id == q {
                LaurentPolyY::one()
            } else {
                LaurentPolyY::zero()
            }
        }))
    }

    /// Indicator of a closed union of faces.
    pub fn subcomplex(lattice: &FaceLattice, faces: &[FaceId]) -> Result<Self> {
        for q in faces {
            lattice.require(q)?;
            if let Some(missing) = lattice.subfaces(q).find(|s| !faces.contains(&s.id)) {
                return Err(Error::NotClosedSubcomplex {
                    face: q.clone(),
                    missing: missing.id.clone(),
                });
            }
        }
        Ok(Self::from_fn(lattice, |f| {
            if faces.contains(&f.id) {
                LaurentPolyY::one()
            } else {
                LaurentPolyY::zero()
            }
        }))
    }

    /// Explicit weights; faces not listed get weight 0 and are returned so
    /// the caller can warn about them.
    pub fn from_table(lattice: &FaceLattice, table: &[(FaceId, LaurentPolyY)]) -> Result<(Self, Vec<FaceId>)> {
        let mut given = BTreeMap::new();
        for (q, w) in table {
            lattice.require(q)?;
            given.insert(q.clone(), w.clone());
        }
        let mut defaulted = Vec::new();
        let weights = Self::from_fn(lattice, |f| {
            given.get(&f.id).cloned().unwrap_or_else(|| {
                defaulted.push(f.id.clone());
                LaurentPolyY::zero()
            })
        });
        Ok((weights, defaulted))
    }

    pub fn get(&self, q: &FaceId) -> Option<&LaurentPolyY> {
        self.entries.get(q)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FaceId, &LaurentPolyY)> {
        self.entries.iter()
    }

    /// Defined on exactly the nonempty faces of the lattice.
    pub fn covers(&self, lattice: &FaceLattice) -> bool {
        self.entries.len() == lattice.len() && lattice.faces().iter().all(|f| self.entries.contains_key(&f.id))
    }

    /// Multiplies every weight by `w`.
    pub fn scale(&self, w: &LaurentPolyY) -> Self {
        WeightFunction {
            entries: self.entries.iter().map(|(q, f)| (q.clone(), f * w)).collect(),
        }
    }
}

impl Add for &WeightFunction {
    type Output = WeightFunction;

    /// Pointwise sum over the union of the two domains.
    fn add(self, rhs: &WeightFunction) -> WeightFunction {
        let mut entries = self.entries.clone();
        for (q, w) in &rhs.entries {
            *entries.entry(q.clone()).or_default() += w;
        }
        WeightFunction { entries }
    }
}

/// `f_Q(y) = g~_Q(-y)`.
pub fn ic_weight_function(lattice: &FaceLattice) -> Result<WeightFunction> {
    let table = g_tilde_table(lattice)?;
    Ok(WeightFunction::from_fn(lattice, |f| {
        table[&f.id].to_laurent().substitute_negated()
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightKind {
    Constant,
    Ic,
    Indicator(FaceId),
    Subcomplex(Vec<FaceId>),
    Table(Vec<(FaceId, LaurentPolyY)>),
}

/// Builds a weight function, also returning the faces a table left unset.
pub fn builtin_weight_function_with_defaults(
    kind: &WeightKind,
    lattice: &FaceLattice,
) -> Result<(WeightFunction, Vec<FaceId>)> {
    let weights = match kind {
        WeightKind::Constant => WeightFunction::constant(lattice),
        WeightKind::Ic => ic_weight_function(lattice)?,
        WeightKind::Indicator(q) => WeightFunction::indicator(lattice, q)?,
        WeightKind::Subcomplex(faces) => WeightFunction::subcomplex(lattice, faces)?,
        WeightKind::Table(entries) => return WeightFunction::from_table(lattice, entries),
    };
    Ok((weights, Vec::new()))
}

pub fn builtin_weight_function(kind: &WeightKind, lattice: &FaceLattice) -> Result<WeightFunction> {
    builtin_weight_function_with_defaults(kind, lattice).map(|(w, _)| w)
}
