#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weighted_ehrhart::{
    standard_polytope, Error, FaceId, FaceLattice, LatticePolytope, LaurentPolyY, PolytopeKind, WeightFunction,
};

/// The standard corpus: cubes and simplices up to dimension 4, cross
/// polytopes in dimensions 2..=4, and the square pyramid.
pub fn corpus() -> Vec<(String, LatticePolytope)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("cube_{n}"), standard_polytope(PolytopeKind::Cube, n).unwrap()));
        out.push((
            format!("simplex_{n}"),
            standard_polytope(PolytopeKind::Simplex, n).unwrap(),
        ));
    }
    for n in 2..=4 {
        out.push((format!("cross_{n}"), standard_polytope(PolytopeKind::Cross, n).unwrap()));
    }
    out.push((
        "pyramid_over_square".into(),
        standard_polytope(PolytopeKind::PyramidOverSquare, 3).unwrap(),
    ));
    out
}

/// A lattice polygon with `m` vertices, `3 <= m <= 8`.
pub fn lattice_polygon(m: usize) -> LatticePolytope {
    let vertices: Vec<[i64; 2]> = match m {
        3 => vec![[0, 0], [1, 0], [0, 1]],
        4 => vec![[0, 0], [1, 0], [1, 1], [0, 1]],
        5 => vec![[0, 0], [1, 0], [2, 1], [1, 2], [0, 1]],
        6 => vec![[1, 0], [2, 0], [3, 1], [2, 2], [1, 2], [0, 1]],
        7 => vec![[2, 0], [3, 1], [3, 2], [2, 3], [1, 3], [0, 2], [0, 1]],
        8 => vec![[1, 0], [2, 0], [3, 1], [3, 2], [2, 3], [1, 3], [0, 2], [0, 1]],
        _ => panic!("no polygon with {m} vertices in the test corpus"),
    };
    LatticePolytope::new(vertices.into_iter().map(|v| v.to_vec()).collect()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random full-dimensional polytope of dimension 1..=3 with coordinates in
/// `[-3, 3]`.
pub fn random_polytope(rng: &mut ChaCha8Rng) -> LatticePolytope {
    loop {
        let d = rng.random_range(1..=3usize);
        let k = rng.random_range(d + 1..=d + 6);
        let points: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..d).map(|_| rng.random_range(-3..=3)).collect())
            .collect();
        match LatticePolytope::hull_of(points) {
            Ok(p) => return p,
            Err(Error::NotFullDimensional { .. }) => continue,
            Err(e) => panic!("unexpected hull error {e}"),
        }
    }
}

pub fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentPolyY {
    let terms = rng.random_range(0..=3);
    LaurentPolyY::from_integers(
        &(0..terms)
            .map(|_| (rng.random_range(-2..=2i64), rng.random_range(-3..=3i64)))
            .collect::<Vec<_>>(),
    )
}

pub fn random_weights(lattice: &FaceLattice, rng: &mut ChaCha8Rng) -> WeightFunction {
    WeightFunction::from_fn(lattice, |_| random_laurent(rng))
}

/// Faces by literal enumeration of every facet subset: the vertex set on
/// the common equality locus, deduplicated.
pub fn brute_force_faces(p: &LatticePolytope) -> BTreeSet<FaceId> {
    let facets = p.facets();
    let m = facets.len();
    assert!(m <= 20, "brute force over 2^{m} subsets");
    let mut faces = BTreeSet::new();
    for mask in 0u32..(1 << m) {
        let on: Vec<usize> = (0..p.vertices().len())
            .filter(|&v| {
                (0..m).filter(|f| mask >> f & 1 == 1).all(|f| {
                    let h = &facets[f];
                    let value: i64 = h.normal.iter().zip(&p.vertices()[v]).map(|(a, x)| a * x).sum();
                    value == h.offset
                })
            })
            .collect();
        if !on.is_empty() {
            faces.insert(FaceId::new(on));
        }
    }
    faces
}

/// `|lQ ∩ Z^n|` for a face given by its vertex set, by testing every box
/// point against all facets (tight on those containing every vertex of Q).
pub fn brute_force_count(p: &LatticePolytope, q: &FaceId, l: i64, strict: bool) -> u64 {
    let n = p.ambient_dim();
    let verts: Vec<&Vec<i64>> = q.indices().iter().map(|&i| &p.vertices()[i]).collect();
    let lo: Vec<i64> = (0..n).map(|i| verts.iter().map(|v| v[i] * l).min().unwrap()).collect();
    let hi: Vec<i64> = (0..n).map(|i| verts.iter().map(|v| v[i] * l).max().unwrap()).collect();
    let dot = |a: &[i64], x: &[i64]| -> i64 { a.iter().zip(x).map(|(a, x)| a * x).sum() };
    let mut count = 0;
    let mut x = lo.clone();
    'outer: loop {
        let ok = p.facets().iter().all(|h| {
            let tight = verts.iter().all(|v| dot(&h.normal, v) == h.offset);
            let value = dot(&h.normal, &x);
            if tight {
                value == h.offset * l
            } else if strict {
                value < h.offset * l
            } else {
                value <= h.offset * l
            }
        });
        count += ok as u64;
        for i in 0..n {
            if x[i] < hi[i] {
                x[i] += 1;
                continue 'outer;
            }
            x[i] = lo[i];
        }
        return count;
    }
}
