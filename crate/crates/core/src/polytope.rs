//! Lattice polytopes given by vertices: facet description, face lattice,
//! simplicity, and a small corpus of standard families.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_VERTICES: usize = 64;
pub const DEFAULT_MAX_FACETS: usize = 24;

/// A face named by the sorted indices of the polytope vertices it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaceId(Vec<usize>);

impl FaceId {
    /// Sorts and deduplicates the indices.
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        FaceId(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertex-set inclusion, which is the face order.
    pub fn is_subset_of(&self, other: &FaceId) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// `{x : normal . x <= offset}` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HalfSpace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl HalfSpace {
    pub fn eval(&self, x: &[i64]) -> i128 {
        dot(&self.normal, x)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Fraction-free Gaussian elimination; returns the rank.
pub(crate) fn rank(rows: &[Vec<i128>]) -> Result<usize> {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            if m[r][col] == 0 {
                continue;
            }
            let (p, q) = (m[rank][col], m[r][col]);
            let (head, tail) = m.split_at_mut(r);
            for (x, &y) in tail[0][col..ncols].iter_mut().zip(&head[rank][col..ncols]) {
                *x = x
                    .checked_mul(p)
                    .and_then(|a| y.checked_mul(q).and_then(|b| a.checked_sub(b)))
                    .ok_or(Error::ArithmeticOverflow)?;
            }
            let g = m[r].iter().fold(0i128, |g, v| g.gcd(v));
            if g > 1 {
                m[r].iter_mut().for_each(|v| *v /= g);
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// Bareiss determinant of a square matrix.
fn det(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return Ok(0);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j]
                    .checked_mul(m[k][k])
                    .and_then(|a| m[i][k].checked_mul(m[k][j]).and_then(|b| a.checked_sub(b)))
                    .ok_or(Error::ArithmeticOverflow)?;
                m[i][j] = v / prev;
            }
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

fn difference_rows(points: &[&Vec<i64>]) -> Vec<Vec<i128>> {
    let Some((base, rest)) = points.split_first() else {
        return Vec::new();
    };
    rest.iter()
        .map(|p| {
            p.iter()
                .zip(base.iter())
                .map(|(&a, &b)| a as i128 - b as i128)
                .collect()
        })
        .collect()
}

/// Dimension of the affine hull of a point set.
pub(crate) fn affine_dimension(points: &[&Vec<i64>]) -> Result<usize> {
    rank(&difference_rows(points))
}

/// Normal of the hyperplane through `dim` points, as the vector of signed
/// maximal minors of the difference matrix. Zero when the points are
/// affinely dependent.
fn hyperplane_normal(points: &[&Vec<i64>], dim: usize) -> Result<Vec<i64>> {
    let rows = difference_rows(points);
    let mut normal = Vec::with_capacity(dim);
    for skip in 0..dim {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != skip)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let d = det(minor)?;
        let d = if skip % 2 == 0 { d } else { -d };
        normal.push(d);
    }
    let g = normal.iter().fold(0i128, |g, v| g.gcd(v));
    if g == 0 {
        return Ok(vec![0; dim]);
    }
    normal
        .into_iter()
        .map(|v| i64::try_from(v / g).map_err(|_| Error::ArithmeticOverflow))
        .collect()
}

/// Visits every `k`-subset of `0..n` in lexicographic order.
fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    if k > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx)?;
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return Ok(());
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Facets of the convex hull of a full-dimensional point set, by brute
/// force over all `dim`-subsets.
fn hull_facets(points: &[Vec<i64>], dim: usize) -> Result<Vec<HalfSpace>> {
    let mut found = BTreeSet::new();
    for_each_combination(points.len(), dim, |combo| {
        let chosen: Vec<&Vec<i64>> = combo.iter().map(|&i| &points[i]).collect();
        let normal = hyperplane_normal(&chosen, dim)?;
        if normal.iter().all(|&v| v == 0) {
            return Ok(());
        }
        let level = dot(&normal, chosen[0]);
        let (mut above, mut below) = (false, false);
        for p in points {
            match dot(&normal, p).cmp(&level) {
                std::cmp::Ordering::Greater => above = true,
                std::cmp::Ordering::Less => below = true,
                std::cmp::Ordering::Equal => {}
            }
            if above && below {
                return Ok(());
            }
        }
        let (normal, level) = if above {
            (normal.iter().map(|v| -v).collect(), -level)
        } else {
            (normal, level)
        };
        let offset = i64::try_from(level).map_err(|_| Error::ArithmeticOverflow)?;
        found.insert(HalfSpace { normal, offset });
        Ok(())
    })?;
    Ok(found.into_iter().collect())
}

/// Points lying on every listed facet.
fn common_points(points: &[Vec<i64>], facets: &[HalfSpace], which: impl Iterator<Item = usize> + Clone) -> Vec<usize> {
    (0..points.len())
        .filter(|&p| {
            which
                .clone()
                .all(|f| facets[f].eval(&points[p]) == facets[f].offset as i128)
        })
        .collect()
}

/// A full-dimensional lattice polytope `conv(vertices)` in `Z^n`, together
/// with its irredundant facet description.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<i64>>,
    facets: Vec<HalfSpace>,
}

impl LatticePolytope {
    /// Builds a polytope from its exact vertex list. Repeated or non-extreme
    /// points are rejected.
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self> {
        Self::with_max_vertices(vertices, DEFAULT_MAX_VERTICES)
    }

    pub fn with_max_vertices(vertices: Vec<Vec<i64>>, max_vertices: usize) -> Result<Self> {
        let ambient_dim = check_shape(&vertices, max_vertices)?;
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::DuplicateVertex(i));
            }
        }
        let facets = hull_facets(&vertices, ambient_dim)?;
        if let Some(bad) = non_extreme(&vertices, &facets).first() {
            return Err(Error::NonExtremeVertex(*bad));
        }
        Ok(LatticePolytope {
            ambient_dim,
            vertices,
            facets,
        })
    }

    /// Convex hull of an arbitrary point list: duplicates and non-extreme
    /// points are dropped, the remaining vertices kept in sorted order.
    pub fn hull_of(mut points: Vec<Vec<i64>>) -> Result<Self> {
        points.sort();
        points.dedup();
        check_shape(&points, usize::MAX)?;
        let facets = hull_facets(&points, points[0].len())?;
        let drop: BTreeSet<usize> = non_extreme(&points, &facets).into_iter().collect();
        let vertices = points
            .into_iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, p)| p)
            .collect();
        Self::new(vertices)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// Indices of the vertices lying on facet `f`.
    pub fn facet_vertices(&self, f: usize) -> Vec<usize> {
        common_points(&self.vertices, &self.facets, std::iter::once(f))
    }

    /// Every vertex lies on exactly `n` facets.
    pub fn is_simple(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| self.facets.iter().filter(|h| h.eval(v) == h.offset as i128).count() == self.ambient_dim)
    }

    pub fn contains_origin_interior(&self) -> bool {
        self.facets.iter().all(|h| h.offset > 0)
    }

    /// The polytope dilated by `k`.
    pub fn scaled(&self, k: i64) -> Result<Self> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|&x| x.checked_mul(k).ok_or(Error::ArithmeticOverflow))
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::new(vertices)
    }
}

fn check_shape(points: &[Vec<i64>], max_vertices: usize) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::NotFullDimensional { rank: 0, ambient: 0 });
    };
    let n = first.len();
    if n == 0 {
        return Err(Error::UnsupportedDimension {
            kind: "ambient space".into(),
            dim: 0,
        });
    }
    for (i, p) in points.iter().enumerate() {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                index: i,
                expected: n,
                got: p.len(),
            });
        }
    }
    if points.len() > max_vertices {
        return Err(Error::TooManyVertices {
            got: points.len(),
            cap: max_vertices,
        });
    }
    let refs: Vec<&Vec<i64>> = points.iter().collect();
    let r = affine_dimension(&refs)?;
    if r < n {
        return Err(Error::NotFullDimensional { rank: r, ambient: n });
    }
    Ok(n)
}

/// A point is extreme iff the facets through it meet the point set in that
/// point alone.
fn non_extreme(points: &[Vec<i64>], facets: &[HalfSpace]) -> Vec<usize> {
    (0..points.len())
        .filter(|&p| {
            let through: Vec<usize> = (0..facets.len())
                .filter(|&f| facets[f].eval(&points[p]) == facets[f].offset as i128)
                .collect();
            common_points(points, facets, through.into_iter()) != [p]
        })
        .collect()
}

/// The irredundant facet half-spaces of `p`, sorted.
pub fn facet_description(p: &LatticePolytope) -> &[HalfSpace] {
    p.facets()
}

pub fn is_simple(p: &LatticePolytope) -> bool {
    p.is_simple()
}

pub fn contains_origin_interior(p: &LatticePolytope) -> bool {
    p.contains_origin_interior()
}

/// A nonempty face: its vertex set, dimension, and the facets containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: FaceId,
    pub dim: usize,
    pub active_facets: Vec<usize>,
}

/// All nonempty faces of a polytope, ordered by `(dim, id)`.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    ambient_dim: usize,
    faces: Vec<Face>,
    index: HashMap<FaceId, usize>,
}

impl FaceLattice {
    pub fn new(p: &LatticePolytope) -> Result<Self> {
        Self::with_max_facets(p, DEFAULT_MAX_FACETS)
    }

    /// Faces are the nonempty intersections of facet vertex sets (plus `P`
    /// itself), closed under further intersection with facets.
    pub fn with_max_facets(p: &LatticePolytope, max_facets: usize) -> Result<Self> {
        let m = p.facets().len();
        if m > max_facets {
            return Err(Error::EnumerationBudgetExceeded {
                got: m,
                cap: max_facets,
            });
        }
        let facet_sets: Vec<BTreeSet<usize>> = (0..m).map(|f| p.facet_vertices(f).into_iter().collect()).collect();

        let all: BTreeSet<usize> = (0..p.vertices().len()).collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut queue = VecDeque::from([all.clone()]);
        seen.insert(all);
        while let Some(set) = queue.pop_front() {
            for fs in &facet_sets {
                let next: BTreeSet<usize> = set.intersection(fs).copied().collect();
                if !next.is_empty() && !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }

        let mut faces = seen
            .into_iter()
            .map(|set| {
                let pts: Vec<&Vec<i64>> = set.iter().map(|&v| &p.vertices()[v]).collect();
                let dim = affine_dimension(&pts)?;
                let active_facets = (0..m).filter(|&f| set.is_subset(&facet_sets[f])).collect();
                Ok(Face {
                    id: FaceId(set.into_iter().collect()),
                    dim,
                    active_facets,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        faces.sort_by(|a, b| (a.dim, &a.id).cmp(&(b.dim, &b.id)));
        let index = faces.iter().enumerate().map(|(i, f)| (f.id.clone(), i)).collect();
        Ok(FaceLattice {
            ambient_dim: p.ambient_dim(),
            faces,
            index,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face(&self, id: &FaceId) -> Option<&Face> {
        self.index.get(id).map(|&i| &self.faces[i])
    }

    pub fn index_of(&self, id: &FaceId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn require(&self, id: &FaceId) -> Result<&Face> {
        self.face(id).ok_or_else(|| Error::UnknownFace(id.clone()))
    }

    /// The polytope itself, as its own top face.
    pub fn top(&self) -> &Face {
        self.faces.last().expect("face lattice always contains P")
    }

    /// Number of faces of each dimension `0..=n`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.ambient_dim + 1];
        for face in &self.faces {
            f[face.dim] += 1;
        }
        f
    }

    /// `sum over nonempty faces of (-1)^dim`; equals 1 for any polytope.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces.iter().map(|f| if f.dim % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// Faces `Q'` with `Q' <= Q`, including `Q`.
    pub fn subfaces<'a>(&'a self, q: &'a FaceId) -> impl Iterator<Item = &'a Face> + 'a {
        self.faces.iter().filter(move |f| f.id.is_subset_of(q))
    }

    /// Faces `R` with `Q <= R`, including `Q`.
    pub fn superfaces<'a>(&'a self, q: &'a FaceId) -> impl Iterator<Item = &'a Face> + 'a {
        self.faces.iter().filter(move |f| q.is_subset_of(&f.id))
    }
}

pub fn face_lattice(p: &LatticePolytope) -> Result<FaceLattice> {
    FaceLattice::new(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolytopeKind {
    Simplex,
    Cube,
    Cross,
    PyramidOverSquare,
}

impl PolytopeKind {
    pub fn name(self) -> &'static str {
        match self {
            PolytopeKind::Simplex => "simplex",
            PolytopeKind::Cube => "cube",
            PolytopeKind::Cross => "cross",
            PolytopeKind::PyramidOverSquare => "pyramid_over_square",
        }
    }
}

impl FromStr for PolytopeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simplex" => Ok(PolytopeKind::Simplex),
            "cube" => Ok(PolytopeKind::Cube),
            "cross" | "octahedron" => Ok(PolytopeKind::Cross),
            "pyramid_over_square" | "pyramid" => Ok(PolytopeKind::PyramidOverSquare),
            other => Err(Error::Parse(format!("unknown polytope kind {other:?}"))),
        }
    }
}

impl fmt::Display for PolytopeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `simplex = conv{0, e_1..e_n}`, `cube = [0,1]^n`, `cross = conv{±e_i}`,
/// and the square pyramid with apex `(0,0,1)` (three dimensions only).
pub fn standard_polytope(kind: PolytopeKind, n: usize) -> Result<LatticePolytope> {
    let unsupported = || Error::UnsupportedDimension {
        kind: kind.name().to_string(),
        dim: n,
    };
    if n == 0 || (kind == PolytopeKind::PyramidOverSquare && n != 3) {
        return Err(unsupported());
    }
    let unit = |i: usize, s: i64| -> Vec<i64> {
        let mut v = vec![0; n];
        v[i] = s;
        v
    };
    let vertices = match kind {
        PolytopeKind::Simplex => std::iter::once(vec![0; n]).chain((0..n).map(|i| unit(i, 1))).collect(),
        PolytopeKind::Cube => {
            if n >= 32 {
                return Err(unsupported());
            }
            (0..1u64 << n)
                .map(|bits| (0..n).map(|i| ((bits >> i) & 1) as i64).collect())
                .collect()
        }
        PolytopeKind::Cross => (0..n).flat_map(|i| [unit(i, 1), unit(i, -1)]).collect(),
        PolytopeKind::PyramidOverSquare => vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![1, 1, 0],
            vec![0, 0, 1],
        ],
    };
    LatticePolytope::new(vertices)
}
