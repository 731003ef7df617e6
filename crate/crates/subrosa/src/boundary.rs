//! Boundary words of super-rhombuses.
//!
//! The boundary of the region to be tiled is read counterclockwise as a
//! circular word of unit-vector directions. It is assembled from four edge
//! segments (A, C, E, G) carrying the non-underlined edge sequence and four
//! rose segments (B, D, F, H) tracing the outer boundary of the corner
//! sectors; combined in the order H, F, D, B the rose segments walk the full
//! corner rose clockwise.

use std::collections::HashMap;
use std::ops::Range;

use crate::edges::{alpha, underlined_prefix};
use crate::geometry::{CycloVec, Dir, Symmetry};
use crate::Error;

#[derive(Clone, Debug)]
pub struct BoundaryWord {
    pub sym: Symmetry,
    pub letters: Vec<Dir>,
    /// Start vertex of each letter; verts[i+1] = verts[i] + unit(letters[i]).
    pub verts: Vec<CycloVec>,
    /// Segment tags A..H with their letter ranges, when built from a super-rhombus.
    pub segments: Vec<(char, Range<usize>)>,
}

/// Letters contributed by one edge segment at doubled direction `delta`:
/// label m > 0 dips over the bisected rhombus (delta+m then delta-m),
/// label 0 is a unit step along the edge.
pub fn edge_segment_letters(sym: &Symmetry, labels: &[usize], delta: i64) -> Vec<Dir> {
    let mut out = Vec::new();
    for &m in labels {
        if m == 0 {
            out.push(sym.dir(delta));
        } else {
            out.push(sym.dir(delta + m as i64));
            out.push(sym.dir(delta - m as i64));
        }
    }
    out
}

/// Clockwise walk along the corner-rose boundary from the peak on the radius
/// at `theta_hi` to the peak `2*label` doubled units clockwise of it.
pub fn rose_segment_letters(sym: &Symmetry, theta_hi: i64, label: usize) -> Vec<Dir> {
    let n = sym.n as i64;
    let mut out = Vec::new();
    for j in 0..label as i64 {
        out.push(sym.dir(theta_hi - n - 2 - 2 * j));
        out.push(sym.dir(theta_hi - n - 2 * j));
    }
    out
}

impl BoundaryWord {
    pub fn from_letters(sym: Symmetry, letters: Vec<Dir>, anchor: CycloVec) -> Self {
        let mut verts = Vec::with_capacity(letters.len());
        let mut p = anchor;
        for &d in &letters {
            verts.push(p.clone());
            p = &p + &sym.unit(d);
        }
        BoundaryWord { sym, letters, verts, segments: Vec::new() }
    }

    /// Boundary word of the (k, n-k) super-rhombus, bottom edge horizontal,
    /// corner k at the left end of the base (placed at the origin).
    pub fn super_rhombus(sym: &Symmetry, k: usize) -> Result<Self, Error> {
        let n = sym.n;
        if k == 0 || k > n - 1 {
            return Err(Error::InvalidParameter(format!("k={k} out of range 1..={}", n - 1)));
        }
        let a = alpha(n)?;
        let prefix = underlined_prefix(n);
        let kk = 2 * k as i64;
        let h = 2 * n as i64;

        let mut letters = Vec::new();
        let mut segments = Vec::new();
        let push = |tag: char, seg: Vec<Dir>, letters: &mut Vec<Dir>, segments: &mut Vec<(char, Range<usize>)>| {
            let start = letters.len();
            letters.extend(seg);
            segments.push((tag, start..letters.len()));
        };

        push('A', edge_segment_letters(sym, &a, 0), &mut letters, &mut segments);
        push('B', rose_segment_letters(sym, h, n - k), &mut letters, &mut segments);
        push('C', edge_segment_letters(sym, &a, kk), &mut letters, &mut segments);
        push('D', rose_segment_letters(sym, h + kk, k), &mut letters, &mut segments);
        push('E', edge_segment_letters(sym, &a, h), &mut letters, &mut segments);
        push('F', rose_segment_letters(sym, 2 * h, n - k), &mut letters, &mut segments);
        push('G', edge_segment_letters(sym, &a, kk + h), &mut letters, &mut segments);
        push('H', rose_segment_letters(sym, kk, k), &mut letters, &mut segments);

        // start point: the peak of the bottom-left corner rose on the ray
        // along the bottom edge
        let mut anchor = CycloVec::zero(n);
        for &m in &prefix {
            if m == 0 {
                anchor = &anchor + &sym.unit(Dir(0));
            } else {
                anchor = &anchor + &sym.unit(sym.dir(m as i64));
                anchor = &anchor + &sym.unit(sym.dir(-(m as i64)));
            }
        }
        let mut w = BoundaryWord::from_letters(*sym, letters, anchor);
        w.segments = segments;
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn segment_letters(&self, tag: char) -> Option<&[Dir]> {
        self.segments
            .iter()
            .find(|(t, _)| *t == tag)
            .map(|(_, r)| &self.letters[r.clone()])
    }

    /// Direction counts balance exactly against their antiparallels, which
    /// also forces the walk to close.
    pub fn is_balanced(&self) -> bool {
        balance_check(&self.sym, &self.letters)
    }

    /// The word has the form u followed by the half-turned u.
    pub fn is_half_turn_form(&self) -> bool {
        let l = self.letters.len();
        if l % 2 != 0 {
            return false;
        }
        let h = l / 2;
        (0..h).all(|i| self.letters[i + h] == self.sym.antiparallel(self.letters[i]))
    }
}

pub fn balance_check(sym: &Symmetry, letters: &[Dir]) -> bool {
    let m = sym.modulus() as usize;
    let mut counts = vec![0i64; m];
    for d in letters {
        counts[d.0 as usize] += 1;
    }
    (0..m).all(|d| counts[d] == counts[sym.antiparallel(Dir(d as u32)).0 as usize])
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimpleReport {
    pub simple: bool,
    /// Pairs of coincident path vertices ("touching points").
    pub touching_points: usize,
    pub detail: Option<String>,
}

/// A closed unit-segment path is simple when no two non-adjacent edges
/// intersect; coincident vertices count as touching, not crossing.
pub fn simple_check(w: &BoundaryWord) -> SimpleReport {
    let emb = w.sym.embedder();
    let l = w.len();
    let pts: Vec<(f64, f64)> = w.verts.iter().map(|v| emb.embed(v)).collect();
    let eps = 1e-9 * (1.0 + pts.iter().map(|p| p.0.abs().max(p.1.abs())).fold(0.0, f64::max));

    let mut touching = 0;
    for i in 0..l {
        for j in (i + 1)..l {
            let (dx, dy) = (pts[i].0 - pts[j].0, pts[i].1 - pts[j].1);
            if (dx * dx + dy * dy).sqrt() < eps {
                touching += 1;
            }
        }
    }

    for i in 0..l {
        for j in (i + 1)..l {
            // adjacency on the circle
            if j == i + 1 || (i == 0 && j == l - 1) {
                continue;
            }
            let a = pts[i];
            let b = pts[(i + 1) % l];
            let c = pts[j];
            let d = pts[(j + 1) % l];
            if let Some(kind) = segment_contact(a, b, c, d, eps) {
                match kind {
                    Contact::Endpoint => {} // touching, allowed
                    Contact::Crossing => {
                        return SimpleReport {
                            simple: false,
                            touching_points: touching,
                            detail: Some(format!("edges {i} and {j} cross")),
                        };
                    }
                }
            }
        }
    }
    SimpleReport { simple: true, touching_points: touching, detail: None }
}

enum Contact {
    /// Segments meet only at a shared endpoint.
    Endpoint,
    /// Interiors meet: a proper crossing, a T-contact, or a collinear overlap.
    Crossing,
}

fn segment_contact(
    a: (f64, f64),
    b: (f64, f64),
    c: (f64, f64),
    d: (f64, f64),
    eps: f64,
) -> Option<Contact> {
    let cross = |o: (f64, f64), p: (f64, f64), q: (f64, f64)| {
        (p.0 - o.0) * (q.1 - o.1) - (p.1 - o.1) * (q.0 - o.0)
    };
    let close = |p: (f64, f64), q: (f64, f64)| {
        let (dx, dy) = (p.0 - q.0, p.1 - q.1);
        (dx * dx + dy * dy).sqrt() < eps
    };
    // edges are unit length, so the cross product is a distance from the line
    let sgn = |x: f64| if x.abs() < eps { 0i32 } else if x > 0.0 { 1 } else { -1 };
    let d1 = cross(a, b, c);
    let d2 = cross(a, b, d);
    let d3 = cross(c, d, a);
    let d4 = cross(c, d, b);
    let shared_end =
        close(a, c) || close(a, d) || close(b, c) || close(b, d);

    if d1.abs() < eps && d2.abs() < eps {
        // collinear: overlap unless they only share an endpoint
        let on = |p: (f64, f64)| {
            let t = ((p.0 - a.0) * (b.0 - a.0) + (p.1 - a.1) * (b.1 - a.1))
                / ((b.0 - a.0).powi(2) + (b.1 - a.1).powi(2));
            t > eps && t < 1.0 - eps
        };
        if on(c) || on(d) {
            return Some(Contact::Crossing);
        }
        return if shared_end { Some(Contact::Endpoint) } else { None };
    }

    if (sgn(d1) * sgn(d2) < 0 && sgn(d3) * sgn(d4) < 0)
        || (sgn(d1) == 0 && point_strictly_on(a, b, c, eps))
        || (sgn(d2) == 0 && point_strictly_on(a, b, d, eps))
        || (sgn(d3) == 0 && point_strictly_on(c, d, a, eps))
        || (sgn(d4) == 0 && point_strictly_on(c, d, b, eps))
    {
        return Some(Contact::Crossing);
    }
    if shared_end {
        return Some(Contact::Endpoint);
    }
    None
}

fn point_strictly_on(a: (f64, f64), b: (f64, f64), p: (f64, f64), eps: f64) -> bool {
    let len2 = (b.0 - a.0).powi(2) + (b.1 - a.1).powi(2);
    let t = ((p.0 - a.0) * (b.0 - a.0) + (p.1 - a.1) * (b.1 - a.1)) / len2;
    t > eps && t < 1.0 - eps
}

/// The unique label m in [0, n] with d congruent to +-m modulo 2n.
pub fn diam(sym: &Symmetry, d: Dir) -> usize {
    let h = 2 * sym.n as u32;
    let r = d.0 % h;
    std::cmp::min(r, h - r) as usize
}

/// Of the two orientations d and antiparallel(d), the one a rhombus bisected
/// by a horizontal edge actually contributes to the boundary word.
pub fn orient_s(sym: &Symmetry, d: Dir) -> Dir {
    let m = diam(sym, d) as u32;
    let md = sym.modulus() as u32;
    if d.0 == m || d.0 == md - m {
        d
    } else {
        sym.antiparallel(d)
    }
}

/// Normalize an unordered pair of direction classes to representatives
/// a < b in the signed interval (-n, n], returned as directions.
pub fn normalize_pair(sym: &Symmetry, a: Dir, b: Dir) -> Result<(Dir, Dir), Error> {
    if sym.class(a) == sym.class(b) {
        return Err(Error::InvalidParameter(
            "projection needs non-parallel direction classes".into(),
        ));
    }
    let mut sa = sym.signed(a);
    let mut sb = sym.signed(b);
    if sa > sb {
        std::mem::swap(&mut sa, &mut sb);
    }
    Ok((sym.dir(sa), sym.dir(sb)))
}

#[derive(Clone, Debug)]
pub struct ProjectionWord {
    pub a: Dir,
    pub b: Dir,
    pub letters: Vec<Dir>,
    pub positions: Vec<usize>,
}

impl ProjectionWord {
    /// Letters as 'a', 'b' and uppercase for their antiparallels.
    pub fn pattern(&self, sym: &Symmetry) -> String {
        self.letters
            .iter()
            .map(|&d| {
                if d == self.a {
                    'a'
                } else if d == self.b {
                    'b'
                } else if d == sym.antiparallel(self.a) {
                    'A'
                } else {
                    'B'
                }
            })
            .collect()
    }
}

/// Erase all letters except a, b and their antiparallels, keeping positions.
pub fn project(sym: &Symmetry, letters: &[Dir], a: Dir, b: Dir) -> Result<ProjectionWord, Error> {
    let (a, b) = normalize_pair(sym, a, b)?;
    let keep = [a, sym.antiparallel(a), b, sym.antiparallel(b)];
    let mut out = Vec::new();
    let mut pos = Vec::new();
    for (i, &d) in letters.iter().enumerate() {
        if keep.contains(&d) {
            out.push(d);
            pos.push(i);
        }
    }
    Ok(ProjectionWord { a, b, letters: out, positions: pos })
}

/// An involution pairing each letter with an antiparallel partner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub partner: Vec<usize>,
}

/// The canonical non-crossing matching of a balanced circular word: within
/// each direction class the chords nest, equivalently the i-th occurrence of
/// a direction pairs with the i-th last occurrence of its antiparallel when
/// the occurrences fill opposite halves.
pub fn canonical_matching(sym: &Symmetry, letters: &[Dir]) -> Result<Matching, Error> {
    if !balance_check(sym, letters) {
        return Err(Error::Unbalanced);
    }
    let mut partner = vec![usize::MAX; letters.len()];
    let h = 2 * sym.n as u32;
    let mut by_class: HashMap<u32, Vec<usize>> = HashMap::new();
    for (i, &d) in letters.iter().enumerate() {
        by_class.entry(d.0 % h).or_default().push(i);
    }
    for (class, positions) in by_class {
        let opener = Dir(class);
        // cycle lemma: rotate so prefix sums stay non-negative, then nest
        let vals: Vec<i64> = positions
            .iter()
            .map(|&p| if letters[p] == opener { 1 } else { -1 })
            .collect();
        let m = vals.len();
        let mut sum = 0i64;
        let mut min = i64::MAX;
        let mut start = 0;
        for (i, v) in vals.iter().enumerate() {
            sum += v;
            if sum < min {
                min = sum;
                start = i + 1;
            }
        }
        let mut stack: Vec<usize> = Vec::new();
        for i in 0..m {
            let idx = (start + i) % m;
            if vals[idx] > 0 {
                stack.push(positions[idx]);
            } else {
                let open = stack.pop().expect("balanced class");
                partner[open] = positions[idx];
                partner[positions[idx]] = open;
            }
        }
        debug_assert!(stack.is_empty());
    }
    Ok(Matching { partner })
}
