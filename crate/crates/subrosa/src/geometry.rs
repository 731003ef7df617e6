//! Exact directions, points and placed rhombuses.
//!
//! Angles are stored as integers in units of pi/(2n) ("doubled directions"),
//! so both parities of the symmetry order n work with integer arithmetic.
//! Points are integer combinations of the 4n unit vectors; equality of points
//! is decided through the numeric embedding.

use std::ops::{Add, Neg, Sub};

use crate::Error;

/// A direction as an integer multiple of pi/(2n), reduced modulo 4n.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Dir(pub u32);

/// The symmetry order n of the tiling family (n >= 2).
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Symmetry {
    pub n: usize,
}

impl Symmetry {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("n must be >= 2, got {n}")));
        }
        Ok(Symmetry { n })
    }

    /// Ring size for doubled directions.
    pub fn modulus(&self) -> i64 {
        4 * self.n as i64
    }

    /// Normalize an integer to a doubled direction.
    pub fn dir(&self, v: i64) -> Dir {
        Dir(v.rem_euclid(self.modulus()) as u32)
    }

    pub fn add(&self, d: Dir, delta: i64) -> Dir {
        self.dir(d.0 as i64 + delta)
    }

    /// The antiparallel direction d + 2n.
    pub fn antiparallel(&self, d: Dir) -> Dir {
        self.add(d, 2 * self.n as i64)
    }

    /// Direction class modulo 2n: a direction and its antiparallel share a class.
    pub fn class(&self, d: Dir) -> u32 {
        d.0 % (2 * self.n as u32)
    }

    /// Signed representative of `d` in the interval (-n, n] (doubled units).
    pub fn signed(&self, d: Dir) -> i64 {
        let m = self.modulus();
        let v = d.0 as i64;
        let n = self.n as i64;
        if v <= n {
            v
        } else if v > 3 * n {
            v - m
        } else {
            // antiparallel representative
            v - 2 * n
        }
    }

    /// Unit step at direction d as an exact integer vector.
    pub fn unit(&self, d: Dir) -> CycloVec {
        let mut v = CycloVec::zero(self.n);
        v.coeffs[d.0 as usize] = 1;
        v
    }

    /// Number of distinct prototile shapes, floor(n/2).
    pub fn prototile_count(&self) -> usize {
        self.n / 2
    }

    pub fn embedder(&self) -> Embedder {
        Embedder::new(self.n)
    }
}

/// Increment every letter of a word by a constant turn.
pub fn turn(sym: &Symmetry, word: &[Dir], delta: i64) -> Vec<Dir> {
    word.iter().map(|&d| sym.add(d, delta)).collect()
}

/// Length 2 cos(k pi / 2n) of the diagonal bisecting corner k of the (k, n-k) rhombus.
pub fn diagonal_measure(n: usize, k: usize) -> Result<f64, Error> {
    if k > n {
        return Err(Error::InvalidParameter(format!(
            "diagonal measure needs 0 <= k <= n, got k={k}, n={n}"
        )));
    }
    Ok(2.0 * (k as f64 * std::f64::consts::PI / (2.0 * n as f64)).cos())
}

/// Linear scaling factor of the substitution.
pub fn scaling_factor(n: usize) -> Result<f64, Error> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be >= 2, got {n}")));
    }
    let nf = n as f64;
    let half = std::f64::consts::PI / (2.0 * nf);
    if n % 2 == 1 {
        Ok(half.cos() / (half.sin() * half.sin()))
    } else {
        Ok(2.0 / (1.0 - (std::f64::consts::PI / nf).cos()))
    }
}

/// Area of the unit rhombus (k, n-k).
pub fn prototile_area(n: usize, k: usize) -> f64 {
    (k as f64 * std::f64::consts::PI / n as f64).sin()
}

/// A point as an unreduced integer combination of the 4n unit roots.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycloVec {
    pub coeffs: Vec<i64>,
}

impl CycloVec {
    pub fn zero(n: usize) -> Self {
        CycloVec { coeffs: vec![0; 4 * n] }
    }

    pub fn is_coeff_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Exact rotation by t units of pi/(2n): cyclically shifts coefficients.
    pub fn rotated(&self, sym: &Symmetry, t: i64) -> CycloVec {
        let m = sym.modulus() as usize;
        let shift = t.rem_euclid(sym.modulus()) as usize;
        let mut out = vec![0; m];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[(j + shift) % m] = c;
        }
        CycloVec { coeffs: out }
    }

    /// Exact reflection across the axis at angle rho/2 (doubled units): d -> rho - d.
    pub fn reflected(&self, sym: &Symmetry, rho: i64) -> CycloVec {
        let m = sym.modulus() as usize;
        let mut out = vec![0; m];
        for (j, &c) in self.coeffs.iter().enumerate() {
            let idx = (rho - j as i64).rem_euclid(sym.modulus()) as usize;
            out[idx] = c;
        }
        CycloVec { coeffs: out }
    }

    pub fn scaled(&self, factor: i64) -> CycloVec {
        CycloVec { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }
}

impl Add for &CycloVec {
    type Output = CycloVec;
    fn add(self, rhs: &CycloVec) -> CycloVec {
        debug_assert_eq!(self.coeffs.len(), rhs.coeffs.len());
        CycloVec {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycloVec {
    type Output = CycloVec;
    fn sub(self, rhs: &CycloVec) -> CycloVec {
        debug_assert_eq!(self.coeffs.len(), rhs.coeffs.len());
        CycloVec {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycloVec {
    type Output = CycloVec;
    fn neg(self) -> CycloVec {
        CycloVec { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Precomputed cos/sin table for the 4n unit directions.
pub struct Embedder {
    pub cos: Vec<f64>,
    pub sin: Vec<f64>,
}

impl Embedder {
    pub fn new(n: usize) -> Self {
        let m = 4 * n;
        let mut cos = Vec::with_capacity(m);
        let mut sin = Vec::with_capacity(m);
        for j in 0..m {
            let a = j as f64 * std::f64::consts::PI / (2.0 * n as f64);
            cos.push(a.cos());
            sin.push(a.sin());
        }
        Embedder { cos, sin }
    }

    pub fn embed(&self, v: &CycloVec) -> (f64, f64) {
        let mut x = 0.0;
        let mut y = 0.0;
        for (j, &c) in v.coeffs.iter().enumerate() {
            if c != 0 {
                let cf = c as f64;
                x += cf * self.cos[j];
                y += cf * self.sin[j];
            }
        }
        (x, y)
    }

    pub fn embed_dir(&self, d: Dir) -> (f64, f64) {
        (self.cos[d.0 as usize], self.sin[d.0 as usize])
    }
}

pub fn embed(v: &CycloVec, n: usize) -> (f64, f64) {
    Embedder::new(n).embed(v)
}

pub fn points_equal(p: &CycloVec, q: &CycloVec, n: usize, eps: f64) -> bool {
    let emb = Embedder::new(n);
    let (px, py) = emb.embed(p);
    let (qx, qy) = emb.embed(q);
    let (dx, dy) = (px - qx, py - qy);
    (dx * dx + dy * dy).sqrt() < eps
}

/// An orientation-preserving isometry of the direction lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    pub rot: Dir,
    pub shift: CycloVec,
}

impl Isometry {
    pub fn identity(sym: &Symmetry) -> Self {
        Isometry { rot: Dir(0), shift: CycloVec::zero(sym.n) }
    }

    pub fn new(rot: Dir, shift: CycloVec) -> Self {
        Isometry { rot, shift }
    }

    pub fn apply_point(&self, sym: &Symmetry, p: &CycloVec) -> CycloVec {
        &p.rotated(sym, self.rot.0 as i64) + &self.shift
    }

    /// self after other: (self . other)(p) = self(other(p)).
    pub fn compose(&self, sym: &Symmetry, other: &Isometry) -> Isometry {
        Isometry {
            rot: sym.add(self.rot, other.rot.0 as i64),
            shift: &other.shift.rotated(sym, self.rot.0 as i64) + &self.shift,
        }
    }
}

/// A prototile (k, n-k) placed by an even isometry.
///
/// The anchor is the corner labeled k; the edge from the anchor to the next
/// counterclockwise corner points at `rot`. The four edge vectors, read
/// counterclockwise, are the unit vectors at rot, rot+2k, rot+2n, rot+2k+2n.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PlacedRhombus {
    pub k: usize,
    pub rot: Dir,
    pub pos: CycloVec,
}

impl PlacedRhombus {
    /// The parallelogram spanned counterclockwise by unit steps at d1 then d2,
    /// based at `base`, normalized to the anchor convention.
    pub fn from_span(sym: &Symmetry, base: &CycloVec, d1: Dir, d2: Dir) -> Self {
        let gap = (d2.0 as i64 - d1.0 as i64).rem_euclid(sym.modulus());
        debug_assert!(gap > 0 && gap < 2 * sym.n as i64, "span must be positively oriented");
        debug_assert!(gap % 2 == 0, "span gap must be an even number of doubled units");
        let label = (gap / 2) as usize;
        if label <= sym.n / 2 {
            PlacedRhombus { k: label, rot: d1, pos: base.clone() }
        } else {
            // corner labeled n - label sits at base + u(d1), first edge at d2
            PlacedRhombus {
                k: sym.n - label,
                rot: d2,
                pos: base + &sym.unit(d1),
            }
        }
    }

    pub fn edge_dirs(&self, sym: &Symmetry) -> [Dir; 4] {
        let r = self.rot.0 as i64;
        let k = 2 * self.k as i64;
        let h = 2 * sym.n as i64;
        [sym.dir(r), sym.dir(r + k), sym.dir(r + h), sym.dir(r + k + h)]
    }

    /// Vertices counterclockwise from the anchor.
    pub fn vertices(&self, sym: &Symmetry) -> [CycloVec; 4] {
        let e0 = sym.unit(self.rot);
        let e1 = sym.unit(sym.add(self.rot, 2 * self.k as i64));
        let v0 = self.pos.clone();
        let v1 = &v0 + &e0;
        let v2 = &v1 + &e1;
        let v3 = &v0 + &e1;
        [v0, v1, v2, v3]
    }

    /// Corner labels in vertex order.
    pub fn corner_labels(&self, sym: &Symmetry) -> [usize; 4] {
        [self.k, sym.n - self.k, self.k, sym.n - self.k]
    }

    pub fn area(&self, sym: &Symmetry) -> f64 {
        prototile_area(sym.n, self.k)
    }

    /// Rotate about the origin by `rot_delta` doubled units, then translate.
    pub fn transformed(&self, sym: &Symmetry, rot_delta: i64, shift: &CycloVec) -> Self {
        PlacedRhombus {
            k: self.k,
            rot: sym.add(self.rot, rot_delta),
            pos: &self.pos.rotated(sym, rot_delta) + shift,
        }
    }

    /// Pick the unique anchor representation: among the equivalent
    /// (anchor corner, rotation) pairs, the one with the smallest rotation.
    /// Squares (2k = n) have four representations, other rhombuses two.
    pub fn canonical(&self, sym: &Symmetry) -> Self {
        let verts = self.vertices(sym);
        let h = 2 * sym.n as i64;
        let mut reps: Vec<(Dir, &CycloVec)> = vec![(self.rot, &verts[0]), (sym.add(self.rot, h), &verts[2])];
        if 2 * self.k == sym.n {
            reps.push((sym.add(self.rot, h / 2), &verts[1]));
            reps.push((sym.add(self.rot, 3 * h / 2), &verts[3]));
        }
        let best = reps.iter().min_by_key(|(r, _)| r.0).unwrap();
        PlacedRhombus { k: self.k, rot: best.0, pos: best.1.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antiparallel_examples() {
        let s5 = Symmetry::new(5).unwrap();
        assert_eq!(s5.antiparallel(Dir(3)), Dir(13));
        assert_eq!(s5.antiparallel(Dir(13)), Dir(3));
        let s2 = Symmetry::new(2).unwrap();
        assert_eq!(s2.antiparallel(Dir(0)), Dir(4));
    }

    #[test]
    fn antiparallel_is_involutive() {
        for n in 2..12 {
            let sym = Symmetry::new(n).unwrap();
            for d in 0..sym.modulus() {
                let d = Dir(d as u32);
                assert_eq!(s_apply2(&sym, d), d);
            }
        }
        fn s_apply2(sym: &Symmetry, d: Dir) -> Dir {
            sym.antiparallel(sym.antiparallel(d))
        }
    }

    #[test]
    fn turn_examples() {
        let sym = Symmetry::new(5).unwrap();
        assert_eq!(turn(&sym, &[Dir(1), Dir(3)], 2), vec![Dir(3), Dir(5)]);
        let w = vec![Dir(7), Dir(0), Dir(19)];
        assert_eq!(turn(&sym, &w, 0), w);
        assert_eq!(turn(&sym, &[Dir(1)], 10), vec![sym.antiparallel(Dir(1))]);
    }

    #[test]
    fn diagonal_measure_values() {
        assert!((diagonal_measure(4, 2).unwrap() - 1.41421356).abs() < 1e-8);
        assert!((diagonal_measure(7, 0).unwrap() - 2.0).abs() < 1e-12);
        assert!((diagonal_measure(5, 1).unwrap() - 1.90211303).abs() < 1e-8);
        assert!(diagonal_measure(5, 6).is_err());
    }

    #[test]
    fn scaling_factor_values() {
        assert!((scaling_factor(2).unwrap() - 2.0).abs() < 1e-12);
        // consistency with the 12-tile super-rhombus: S(3)^2 = 12
        let s3 = scaling_factor(3).unwrap();
        assert!((s3 - 3.46410162).abs() < 1e-8);
        assert!((s3 * s3 - 12.0).abs() < 1e-8);
        // S(5) from the diagonal-measure sum (n-1)d(1) + (n-3)d(3)
        let s5 = scaling_factor(5).unwrap();
        let expect = 4.0 * diagonal_measure(5, 1).unwrap() + 2.0 * diagonal_measure(5, 3).unwrap();
        assert!((s5 - expect).abs() < 1e-9);
        assert!((s5 - 9.95959314).abs() < 1e-8);
        assert!(scaling_factor(1).is_err());
    }

    #[test]
    fn scaling_factor_matches_diagonal_sum_for_odd_n() {
        for n in (3..100).step_by(2) {
            let s = scaling_factor(n).unwrap();
            let mut sum = 0.0;
            let mut m = 1;
            while m <= n - 2 {
                sum += (n - m) as f64 * diagonal_measure(n, m).unwrap();
                m += 2;
            }
            assert!((s - sum).abs() / s < 1e-9, "n={n}: {s} vs {sum}");
        }
    }

    #[test]
    fn embed_examples() {
        let sym = Symmetry::new(5).unwrap();
        let emb = sym.embedder();
        let (x, y) = emb.embed(&CycloVec::zero(5));
        assert_eq!((x, y), (0.0, 0.0));
        let (x, y) = emb.embed(&sym.unit(Dir(0)));
        assert!((x - 1.0).abs() < 1e-12 && y.abs() < 1e-12);
        let (x, y) = emb.embed(&sym.unit(Dir(10)));
        assert!((x + 1.0).abs() < 1e-12 && y.abs() < 1e-12);
    }

    #[test]
    fn embed_is_additive() {
        let sym = Symmetry::new(7).unwrap();
        let emb = sym.embedder();
        let p = &sym.unit(Dir(3)) + &sym.unit(Dir(9));
        let q = &sym.unit(Dir(20)) + &sym.unit(Dir(3));
        let sum = &p + &q;
        let (px, py) = emb.embed(&p);
        let (qx, qy) = emb.embed(&q);
        let (sx, sy) = emb.embed(&sum);
        assert!((sx - (px + qx)).abs() < 1e-12);
        assert!((sy - (py + qy)).abs() < 1e-12);
    }

    #[test]
    fn points_equal_examples() {
        let sym = Symmetry::new(5).unwrap();
        let p = sym.unit(Dir(3));
        assert!(points_equal(&p, &p.clone(), 5, 1e-9));
        let cancel = &sym.unit(Dir(2)) + &sym.unit(Dir(12));
        assert!(points_equal(&cancel, &CycloVec::zero(5), 5, 1e-9));
        assert!(!points_equal(&sym.unit(Dir(0)), &sym.unit(Dir(2)), 5, 1e-9));
    }

    #[test]
    fn placed_rhombus_edges_close() {
        for n in 2..9 {
            let sym = Symmetry::new(n).unwrap();
            let emb = sym.embedder();
            for k in 1..=n / 2 {
                for r in 0..4 * n {
                    let t = PlacedRhombus { k, rot: Dir(r as u32), pos: CycloVec::zero(n) };
                    let mut sum = CycloVec::zero(n);
                    for d in t.edge_dirs(&sym) {
                        sum = &sum + &sym.unit(d);
                    }
                    let (x, y) = emb.embed(&sum);
                    assert!(x.abs() < 1e-9 && y.abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn canonical_representation_identifies_anchors() {
        let sym = Symmetry::new(5).unwrap();
        let t = PlacedRhombus { k: 2, rot: Dir(17), pos: sym.unit(Dir(4)) };
        let verts = t.vertices(&sym);
        let other = PlacedRhombus { k: 2, rot: sym.add(t.rot, 10), pos: verts[2].clone() };
        let a = t.canonical(&sym);
        let b = other.canonical(&sym);
        assert_eq!(a.k, b.k);
        assert_eq!(a.rot, b.rot);
        assert!(points_equal(&a.pos, &b.pos, 5, 1e-9));
        // square: all four corner representations agree
        let sym4 = Symmetry::new(4).unwrap();
        let sq = PlacedRhombus { k: 2, rot: Dir(11), pos: CycloVec::zero(4) };
        let vs = sq.vertices(&sym4);
        for (i, v) in vs.iter().enumerate() {
            let rep = PlacedRhombus { k: 2, rot: sym4.add(sq.rot, 4 * i as i64), pos: v.clone() };
            let c = rep.canonical(&sym4);
            assert_eq!(c.rot, sq.canonical(&sym4).rot);
            assert!(points_equal(&c.pos, &sq.canonical(&sym4).pos, 4, 1e-9));
        }
    }

    #[test]
    fn isometry_compose_apply() {
        let sym = Symmetry::new(4).unwrap();
        let a = Isometry::new(Dir(3), sym.unit(Dir(1)));
        let b = Isometry::new(Dir(5), sym.unit(Dir(6)));
        let p = sym.unit(Dir(2));
        let via_compose = a.compose(&sym, &b).apply_point(&sym, &p);
        let stepwise = a.apply_point(&sym, &b.apply_point(&sym, &p));
        assert_eq!(via_compose, stepwise);
        let id = Isometry::identity(&sym);
        assert_eq!(id.apply_point(&sym, &p), p);
    }
}
