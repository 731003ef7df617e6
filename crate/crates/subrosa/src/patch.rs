//! Finite patches of placed rhombuses and geometric point interning.

use std::collections::{HashMap, HashSet};

use crate::geometry::{CycloVec, Embedder, PlacedRhombus, Symmetry};

/// Clusters nearby embedded points into stable integer ids.
///
/// Distinct vertices of unit-rhombus tilings are at least the shortest
/// diagonal apart (about 0.125 for n = 25), far above both the grid cell and
/// the matching tolerance, so cluster lookup through the 3x3 neighborhood of
/// grid cells is unambiguous.
pub struct PointIndex {
    cell: f64,
    eps: f64,
    map: HashMap<(i64, i64), Vec<usize>>,
    pts: Vec<(f64, f64)>,
}

impl PointIndex {
    pub fn new(eps: f64) -> Self {
        PointIndex { cell: 1.0 / 64.0, eps, map: HashMap::new(), pts: Vec::new() }
    }

    fn cell_of(&self, p: (f64, f64)) -> (i64, i64) {
        ((p.0 / self.cell).round() as i64, (p.1 / self.cell).round() as i64)
    }

    pub fn find(&self, p: (f64, f64)) -> Option<usize> {
        let (cx, cy) = self.cell_of(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.map.get(&(cx + dx, cy + dy)) {
                    for &id in ids {
                        let q = self.pts[id];
                        let (ex, ey) = (p.0 - q.0, p.1 - q.1);
                        if (ex * ex + ey * ey).sqrt() <= self.eps {
                            return Some(id);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn intern(&mut self, p: (f64, f64)) -> usize {
        if let Some(id) = self.find(p) {
            return id;
        }
        let id = self.pts.len();
        self.pts.push(p);
        self.map.entry(self.cell_of(p)).or_default().push(id);
        id
    }

    pub fn point(&self, id: usize) -> (f64, f64) {
        self.pts[id]
    }

    pub fn len(&self) -> usize {
        self.pts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pts.is_empty()
    }
}

/// Matching tolerance for a patch of the given diameter.
pub fn point_eps(diameter: f64) -> f64 {
    1e-9 * diameter.max(1.0)
}

/// A set of placed unit rhombuses.
#[derive(Clone, Debug)]
pub struct Patch {
    pub sym: Symmetry,
    pub tiles: Vec<PlacedRhombus>,
}

impl Patch {
    pub fn new(sym: Symmetry) -> Self {
        Patch { sym, tiles: Vec::new() }
    }

    pub fn from_tiles(sym: Symmetry, tiles: Vec<PlacedRhombus>) -> Self {
        Patch { sym, tiles }
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn area(&self) -> f64 {
        self.tiles.iter().map(|t| t.area(&self.sym)).sum()
    }

    /// Counts per prototile shape k.
    pub fn shape_histogram(&self) -> HashMap<usize, usize> {
        let mut h = HashMap::new();
        for t in &self.tiles {
            *h.entry(t.k).or_insert(0) += 1;
        }
        h
    }

    pub fn transformed(&self, rot_delta: i64, shift: &CycloVec) -> Patch {
        Patch {
            sym: self.sym,
            tiles: self
                .tiles
                .iter()
                .map(|t| t.transformed(&self.sym, rot_delta, shift))
                .collect(),
        }
    }

    /// Greatest distance of any tile anchor from the origin plus slack;
    /// adequate for tolerance selection.
    pub fn diameter_hint(&self) -> f64 {
        let emb = self.sym.embedder();
        let mut r: f64 = 1.0;
        for t in &self.tiles {
            let (x, y) = emb.embed(&t.pos);
            r = r.max(x.hypot(y));
        }
        2.0 * (r + 2.0)
    }

    /// Sort tiles by (pos coefficients lexicographic, rot, k); the order used
    /// for serialized output.
    pub fn sort_canonical(&mut self) {
        self.tiles.sort_by(|a, b| {
            a.pos
                .coeffs
                .cmp(&b.pos.coeffs)
                .then(a.rot.0.cmp(&b.rot.0))
                .then(a.k.cmp(&b.k))
        });
    }
}

/// Accumulates tiles, dropping exact duplicates (same shape, rotation and
/// anchor point under the geometric tolerance).
pub struct PatchBuilder {
    sym: Symmetry,
    emb: Embedder,
    idx: PointIndex,
    seen: HashSet<(usize, u32, usize)>,
    tiles: Vec<PlacedRhombus>,
}

impl PatchBuilder {
    pub fn new(sym: Symmetry, eps: f64) -> Self {
        PatchBuilder {
            sym,
            emb: sym.embedder(),
            idx: PointIndex::new(eps),
            seen: HashSet::new(),
            tiles: Vec::new(),
        }
    }

    /// Returns false if the tile was already present.
    pub fn insert(&mut self, tile: PlacedRhombus) -> bool {
        let c = tile.canonical(&self.sym);
        let pid = self.idx.intern(self.emb.embed(&c.pos));
        if self.seen.insert((c.k, c.rot.0, pid)) {
            self.tiles.push(tile);
            true
        } else {
            false
        }
    }

    pub fn insert_patch(&mut self, patch: &Patch) -> usize {
        let mut dups = 0;
        for t in &patch.tiles {
            if !self.insert(t.clone()) {
                dups += 1;
            }
        }
        dups
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn into_patch(self) -> Patch {
        Patch { sym: self.sym, tiles: self.tiles }
    }
}

/// Canonical per-tile keys of a patch, interned into the given index.
pub fn tile_keys(patch: &Patch, idx: &mut PointIndex) -> HashSet<(usize, u32, usize)> {
    let emb = patch.sym.embedder();
    patch
        .tiles
        .iter()
        .map(|t| {
            let c = t.canonical(&patch.sym);
            (c.k, c.rot.0, idx.intern(emb.embed(&c.pos)))
        })
        .collect()
}

/// Exact set equality of two patches (shape, rotation and position of every tile).
pub fn patches_equal(a: &Patch, b: &Patch) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let eps = point_eps(a.diameter_hint().max(b.diameter_hint()));
    let mut idx = PointIndex::new(eps);
    tile_keys(a, &mut idx) == tile_keys(b, &mut idx)
}

/// True if every tile of `inner` occurs in `outer` with identical pose.
pub fn patch_contains(outer: &Patch, inner: &Patch) -> bool {
    let eps = point_eps(outer.diameter_hint().max(inner.diameter_hint()));
    let mut idx = PointIndex::new(eps);
    let outer_keys = tile_keys(outer, &mut idx);
    tile_keys(inner, &mut idx).is_subset(&outer_keys)
}
