//! Constructive interior tiler.
//!
//! Replaying the boundary-word reduction with geometry attached tiles the
//! enclosed region: every swap of adjacent letters carves one unit rhombus
//! off the boundary, every cancel removes a zero-area spike. The symmetric
//! variant applies each move across the full orbit of the boundary's
//! symmetry group, producing a patch with the symmetries of the region.

use crate::boundary::{canonical_matching, BoundaryWord};
use crate::edges::{alpha, sigma, underlined_prefix};
use crate::geometry::{CycloVec, Isometry, PlacedRhombus, Symmetry};
use crate::patch::{point_eps, Patch, PatchBuilder};
use crate::rewrite::{Move, Reducer};
use crate::rose::rose_sector;
use crate::Error;

/// Tile the region enclosed by a verified boundary word.
pub fn tile_region(w: &BoundaryWord) -> Result<Patch, Error> {
    let sym = &w.sym;
    let matching = canonical_matching(sym, &w.letters)?;
    let mut red = Reducer::new(sym, &w.letters, &matching, Some(&w.verts));
    let mut tiles = Vec::new();
    loop {
        let mv = red
            .find_move()
            .map_err(|s| Error::Stuck(format!("{} (word {:?})", s.detail, s.word)))?;
        match mv {
            None => break,
            Some(Move::Cancel(i)) => red.apply_cancel(i),
            Some(Move::Swap(i)) => {
                let (base, x, y) = red.apply_swap(i);
                tiles.push(PlacedRhombus::from_span(sym, &base, x, y));
            }
        }
    }
    Ok(Patch::from_tiles(*sym, tiles))
}

/// A plane isometry expressed exactly on the direction lattice.
#[derive(Clone, Debug)]
pub enum PlaneMap {
    /// v -> rotate(v, t) + shift
    Rot { t: i64, shift: CycloVec },
    /// v -> reflect(v, rho) + shift; reverses boundary orientation
    Refl { rho: i64, shift: CycloVec },
}

impl PlaneMap {
    pub fn apply(&self, sym: &Symmetry, p: &CycloVec) -> CycloVec {
        match self {
            PlaneMap::Rot { t, shift } => &p.rotated(sym, *t) + shift,
            PlaneMap::Refl { rho, shift } => &p.reflected(sym, *rho) + shift,
        }
    }

    pub fn is_reflection(&self) -> bool {
        matches!(self, PlaneMap::Refl { .. })
    }
}

/// All nontrivial symmetries of a closed boundary word, found by matching the
/// letter sequence under rotations and reflections and anchored exactly on a
/// vertex correspondence.
pub fn word_symmetries(w: &BoundaryWord) -> Vec<PlaneMap> {
    let sym = &w.sym;
    let l = w.len();
    let mut maps = Vec::new();
    if l == 0 {
        return maps;
    }
    for s in 0..l {
        // rotation candidate: w[i+s] = w[i] + t
        let t = w.letters[s].0 as i64 - w.letters[0].0 as i64;
        if !(s == 0 && t == 0)
            && (0..l).all(|i| w.letters[(i + s) % l] == sym.add(w.letters[i], t))
        {
            let shift = &w.verts[s] - &w.verts[0].rotated(sym, t);
            maps.push(PlaneMap::Rot { t: t.rem_euclid(sym.modulus()), shift });
        }
        // reflection candidate: w[(s-1-i) mod l] = (rho + 2n) - w[i]
        let rho2n = w.letters[(s + l - 1) % l].0 as i64 + w.letters[0].0 as i64;
        if (0..l).all(|i| {
            let idx = (s + 2 * l - 1 - i) % l;
            w.letters[idx] == sym.dir(rho2n - w.letters[i].0 as i64)
        }) {
            let rho = rho2n - 2 * sym.n as i64;
            let shift = &w.verts[s % l] - &w.verts[0].reflected(sym, rho);
            maps.push(PlaneMap::Refl { rho: rho.rem_euclid(sym.modulus()), shift });
        }
    }
    maps
}

/// Tile a symmetric region applying every reduction move across its full
/// symmetry orbit; the result carries the symmetries of the boundary.
pub fn tile_region_symmetric(w: &BoundaryWord) -> Result<Patch, Error> {
    let sym = &w.sym;
    let maps = word_symmetries(w);
    if maps.is_empty() {
        return Err(Error::AsymmetricBoundary);
    }
    let matching = canonical_matching(sym, &w.letters)?;
    let mut red = Reducer::new(sym, &w.letters, &matching, Some(&w.verts));
    let emb = sym.embedder();
    let eps = {
        let far = w
            .verts
            .iter()
            .map(|v| {
                let (x, y) = emb.embed(v);
                x.hypot(y)
            })
            .fold(1.0, f64::max);
        point_eps(2.0 * far)
    };
    let close = |p: (f64, f64), q: (f64, f64)| {
        let (dx, dy) = (p.0 - q.0, p.1 - q.1);
        (dx * dx + dy * dy).sqrt() < eps
    };
    let mut tiles = Vec::new();

    loop {
        let mv = red
            .find_move()
            .map_err(|s| Error::Stuck(format!("{} (word {:?})", s.detail, s.word)))?;
        let (base_pos, is_cancel) = match mv {
            None => break,
            Some(Move::Cancel(i)) => (i, true),
            Some(Move::Swap(i)) => (i, false),
        };

        // three consecutive path points identify a move location
        let l = red.len();
        let path_triple = |red: &Reducer, i: usize| -> [ (f64, f64); 3] {
            let j = (i + 1) % red.len();
            let p2 = &red.vert_at(j).clone() + &sym.unit(red.dir_at(j));
            [emb.embed(red.vert_at(i)), emb.embed(red.vert_at(j)), emb.embed(&p2)]
        };
        let base = path_triple(&red, base_pos);

        let mut orbit: Vec<usize> = vec![base_pos];
        for map in &maps {
            let j = (base_pos + 1) % l;
            let far = &red.vert_at(j).clone() + &sym.unit(red.dir_at(j));
            let img = [
                emb.embed(&map.apply(sym, red.vert_at(base_pos))),
                emb.embed(&map.apply(sym, red.vert_at(j))),
                emb.embed(&map.apply(sym, &far)),
            ];
            let want = if map.is_reflection() { [img[2], img[1], img[0]] } else { img };
            let mut found = None;
            for cand in 0..l {
                let t = path_triple(&red, cand);
                if close(t[0], want[0]) && close(t[1], want[1]) && close(t[2], want[2]) {
                    found = Some(cand);
                    break;
                }
            }
            let pos = found.ok_or_else(|| {
                Error::Stuck("symmetry image of a move not found on the boundary".into())
            })?;
            if !orbit.contains(&pos) {
                orbit.push(pos);
            }
        }
        let _ = base;
        if std::env::var("SUBROSA_DEBUG_ORBITS").is_ok() {
            eprintln!(
                "move at {base_pos} ({}) orbit {:?} word {:?}",
                if is_cancel { "cancel" } else { "swap" },
                orbit,
                red.letters().iter().map(|d| d.0).collect::<Vec<_>>()
            );
        }

        // orbit members must be pairwise node-disjoint
        for (ai, &a) in orbit.iter().enumerate() {
            for &b in &orbit[ai + 1..] {
                if (a + 1) % l == b || (b + 1) % l == a {
                    return Err(Error::OrbitConflict(format!(
                        "moves at positions {a} and {b} share a boundary edge"
                    )));
                }
            }
        }

        // apply through stable node identities: earlier applications in the
        // orbit shift positions but never touch other orbit members
        let ids: Vec<usize> = orbit.iter().map(|&p| red.node_id(p)).collect();
        for id in ids {
            let p = red.position_of(id);
            if is_cancel {
                red.apply_cancel(p);
            } else {
                let (b, x, y) = red.apply_swap(p);
                tiles.push(PlacedRhombus::from_span(sym, &b, x, y));
            }
        }
    }
    Ok(Patch::from_tiles(*sym, tiles))
}

/// Exact vector of the full edge-sequence walk in direction `delta`: the
/// scaled image of a unit step.
pub fn sigma_walk(sym: &Symmetry, delta: i64) -> Result<CycloVec, Error> {
    let mut v = CycloVec::zero(sym.n);
    for m in sigma(sym.n)? {
        v = &v + &label_step(sym, delta, m);
    }
    Ok(v)
}

fn label_step(sym: &Symmetry, delta: i64, m: usize) -> CycloVec {
    if m == 0 {
        sym.unit(sym.dir(delta))
    } else {
        &sym.unit(sym.dir(delta - m as i64)) + &sym.unit(sym.dir(delta + m as i64))
    }
}

/// The full super-rhombus patch: symmetric interior tiling, four corner rose
/// sectors, and the counted-in half of the edge-bisected rhombuses of each
/// edge (the first half in counterclockwise traversal).
pub fn super_rhombus_patch(sym: &Symmetry, k: usize) -> Result<Patch, Error> {
    super_rhombus_patch_with(sym, k, true)
}

pub fn super_rhombus_patch_with(sym: &Symmetry, k: usize, symmetric: bool) -> Result<Patch, Error> {
    let n = sym.n;
    if k == 0 || k > n / 2 {
        return Err(Error::InvalidParameter(format!(
            "prototile index k={k} out of range 1..={}",
            n / 2
        )));
    }
    let w = BoundaryWord::super_rhombus(sym, k)?;
    let interior = if symmetric { tile_region_symmetric(&w)? } else { tile_region(&w)? };

    let kk = 2 * k as i64;
    let h = 2 * n as i64;
    let bl = CycloVec::zero(n);
    let br = sigma_walk(sym, 0)?;
    let tl = sigma_walk(sym, kk)?;
    let tr = &br + &tl;

    let scale_hint = {
        let emb = sym.embedder();
        let (x, y) = emb.embed(&tr);
        2.0 * (x.hypot(y) + 2.0)
    };
    let mut builder = PatchBuilder::new(*sym, point_eps(scale_hint));
    builder.insert_patch(&interior);

    // corner sectors, counterclockwise, each starting at its own radius
    let corners = [
        (bl.clone(), 0i64, k),
        (br.clone(), kk, n - k),
        (tr.clone(), h, k),
        (tl.clone(), h + kk, n - k),
    ];
    for (pos, start, label) in &corners {
        let pose = Isometry::new(sym.dir(*start), pos.clone());
        let sector = rose_sector(sym, *label, &pose)?;
        builder.insert_patch(&sector);
    }

    // counted-in bisected rhombuses of each edge
    let a = alpha(n)?;
    let prefix = underlined_prefix(n);
    let edges = [(bl, 0i64), (br, kk), (tr, h), (tl, h + kk)];
    for (corner, delta) in edges {
        let mut pos = corner;
        for &m in &prefix {
            pos = &pos + &label_step(sym, delta, m);
        }
        for &m in &a[..a.len() / 2] {
            if m > 0 {
                let tile = PlacedRhombus::from_span(
                    sym,
                    &pos,
                    sym.dir(delta - m as i64),
                    sym.dir(delta + m as i64),
                );
                builder.insert(tile);
            }
            pos = &pos + &label_step(sym, delta, m);
        }
    }

    Ok(builder.into_patch())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::canonical_matching;
    use crate::geometry::{prototile_area, scaling_factor, Dir};
    use crate::patch::patches_equal;
    use std::collections::HashMap;

    fn region_area(w: &BoundaryWord) -> f64 {
        let emb = w.sym.embedder();
        let pts: Vec<(f64, f64)> = w.verts.iter().map(|v| emb.embed(v)).collect();
        let l = pts.len();
        let mut a = 0.0;
        for i in 0..l {
            let (x1, y1) = pts[i];
            let (x2, y2) = pts[(i + 1) % l];
            a += x1 * y2 - x2 * y1;
        }
        a / 2.0
    }

    fn reflect_tile(sym: &Symmetry, t: &PlacedRhombus, rho: i64, shift: &CycloVec) -> PlacedRhombus {
        let vs = t.vertices(sym);
        let image_base = &vs[0].reflected(sym, rho) + shift;
        let d1 = sym.dir(rho - t.rot.0 as i64 - 2 * t.k as i64);
        let d2 = sym.dir(rho - t.rot.0 as i64);
        PlacedRhombus::from_span(sym, &image_base, d1, d2)
    }

    #[test]
    fn square_region_tiles_into_four_squares() {
        let sym = Symmetry::new(2).unwrap();
        let w = BoundaryWord::super_rhombus(&sym, 1).unwrap();
        let p = tile_region(&w).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.tiles.iter().all(|t| t.k == 1));
        assert!((p.area() - 4.0).abs() < 1e-9);
        let ps = tile_region_symmetric(&w).unwrap();
        assert_eq!(ps.len(), 4);
        assert!(patches_equal(&p, &ps));
    }

    #[test]
    fn interior_area_matches_region() {
        for n in 2..=8 {
            let sym = Symmetry::new(n).unwrap();
            for k in 1..=n / 2 {
                let w = BoundaryWord::super_rhombus(&sym, k).unwrap();
                let p = tile_region(&w).unwrap();
                let area = region_area(&w);
                assert!(
                    (p.area() - area).abs() / area < 1e-6,
                    "n={n} k={k}: tiles {} vs region {area}",
                    p.area()
                );
            }
        }
    }

    #[test]
    fn area_decreases_by_each_emitted_tile() {
        // replay the reduction watching the polygon area ledger
        let sym = Symmetry::new(5).unwrap();
        let w = BoundaryWord::super_rhombus(&sym, 2).unwrap();
        let matching = canonical_matching(&sym, &w.letters).unwrap();
        let mut red = Reducer::new(&sym, &w.letters, &matching, Some(&w.verts));
        let emb = sym.embedder();
        let poly_area = |red: &Reducer| {
            let l = red.len();
            let mut a = 0.0;
            for i in 0..l {
                let (x1, y1) = emb.embed(red.vert_at(i));
                let (x2, y2) = emb.embed(red.vert_at((i + 1) % l));
                a += x1 * y2 - x2 * y1;
            }
            a / 2.0
        };
        let mut area = poly_area(&red);
        loop {
            match red.find_move().unwrap() {
                None => break,
                Some(Move::Cancel(i)) => {
                    red.apply_cancel(i);
                    let next = poly_area(&red);
                    assert!((next - area).abs() < 1e-9);
                    area = next;
                }
                Some(Move::Swap(i)) => {
                    let (base, x, y) = red.apply_swap(i);
                    let t = PlacedRhombus::from_span(&sym, &base, x, y);
                    let next = poly_area(&red);
                    assert!((area - next - t.area(&sym)).abs() < 1e-9);
                    area = next;
                }
            }
        }
        assert!(area.abs() < 1e-9);
    }

    #[test]
    fn tile_count_per_shape_equals_crossing_count() {
        for n in 2..=8 {
            let sym = Symmetry::new(n).unwrap();
            for k in 1..=n / 2 {
                let w = BoundaryWord::super_rhombus(&sym, k).unwrap();
                let m = canonical_matching(&sym, &w.letters).unwrap();
                let l = w.len();
                let in_arc = |start: usize, end: usize, x: usize| {
                    let span = (end + l - start) % l;
                    let off = (x + l - start) % l;
                    off > 0 && off < span
                };
                let mut chords = Vec::new();
                for i in 0..l {
                    if i < m.partner[i] {
                        chords.push((i, m.partner[i]));
                    }
                }
                let mut crossings: HashMap<usize, usize> = HashMap::new();
                for (ci, &(p1, q1)) in chords.iter().enumerate() {
                    for &(p2, q2) in &chords[ci + 1..] {
                        if in_arc(p1, q1, p2) != in_arc(p1, q1, q2) {
                            let ypos = if in_arc(p1, q1, p2) { p2 } else { q2 };
                            let x = w.letters[p1];
                            let y = w.letters[ypos];
                            let gap =
                                (y.0 as i64 - x.0 as i64).rem_euclid(sym.modulus()) as usize;
                            let shape = std::cmp::min(gap / 2, n - gap / 2);
                            *crossings.entry(shape).or_default() += 1;
                        }
                    }
                }
                let p = tile_region(&w).unwrap();
                let histogram = p.shape_histogram();
                assert_eq!(histogram, crossings, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn emitted_directions_come_from_the_word() {
        let sym = Symmetry::new(7).unwrap();
        let w = BoundaryWord::super_rhombus(&sym, 2).unwrap();
        let dirs: std::collections::HashSet<u32> = w.letters.iter().map(|d| d.0).collect();
        let p = tile_region(&w).unwrap();
        for t in &p.tiles {
            for d in t.edge_dirs(&sym) {
                assert!(dirs.contains(&d.0), "direction {d:?} not on the boundary");
            }
        }
    }

    #[test]
    fn symmetric_tiler_output_is_invariant() {
        let sym = Symmetry::new(5).unwrap();
        let w = BoundaryWord::super_rhombus(&sym, 2).unwrap();
        let p = tile_region_symmetric(&w).unwrap();
        let maps = word_symmetries(&w);
        assert!(maps.len() >= 3, "rhombus boundary has its dihedral group");
        assert!(maps.iter().any(|m| m.is_reflection()));
        for map in &maps {
            let mapped: Vec<PlacedRhombus> = p
                .tiles
                .iter()
                .map(|t| match map {
                    PlaneMap::Rot { t: tt, shift } => t.transformed(&sym, *tt, shift),
                    PlaneMap::Refl { rho, shift } => reflect_tile(&sym, t, *rho, shift),
                })
                .collect();
            let q = Patch::from_tiles(sym, mapped);
            assert!(patches_equal(&p, &q), "not invariant under {map:?}");
        }
    }

    #[test]
    fn symmetric_and_plain_agree_on_size_and_area() {
        for n in 2..=7 {
            let sym = Symmetry::new(n).unwrap();
            for k in 1..=n / 2 {
                let w = BoundaryWord::super_rhombus(&sym, k).unwrap();
                let a = tile_region(&w).unwrap();
                let b = tile_region_symmetric(&w).unwrap();
                assert_eq!(a.len(), b.len(), "n={n} k={k}");
                assert!((a.area() - b.area()).abs() < 1e-9, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn octagon_reports_orbit_conflict() {
        let sym = Symmetry::new(4).unwrap();
        let letters: Vec<Dir> = (0..8).map(|i| Dir(2 * i)).collect();
        let w = BoundaryWord::from_letters(sym, letters, CycloVec::zero(4));
        match tile_region_symmetric(&w) {
            Err(Error::OrbitConflict(_)) => {}
            other => panic!("expected orbit conflict, got {other:?}"),
        }
        // the plain tiler handles the octagon fine
        let p = tile_region(&w).unwrap();
        let area = region_area(&w);
        assert!((p.area() - area).abs() < 1e-9);
    }

    #[test]
    fn super_patch_counts_and_areas() {
        let sym3 = Symmetry::new(3).unwrap();
        let p3 = super_rhombus_patch(&sym3, 1).unwrap();
        assert_eq!(p3.len(), 12);
        assert!(p3.tiles.iter().all(|t| t.k == 1));
        let sym2 = Symmetry::new(2).unwrap();
        let p2 = super_rhombus_patch(&sym2, 1).unwrap();
        assert_eq!(p2.len(), 4);

        for n in 2..=8 {
            let sym = Symmetry::new(n).unwrap();
            let s = scaling_factor(n).unwrap();
            for k in 1..=n / 2 {
                let p = super_rhombus_patch(&sym, k).unwrap();
                let want = s * s * prototile_area(n, k);
                assert!(
                    (p.area() - want).abs() / want < 1e-6,
                    "n={n} k={k}: {} vs {want}",
                    p.area()
                );
            }
        }
    }

    #[test]
    fn super_patch_contains_every_prototile_for_5() {
        let sym = Symmetry::new(5).unwrap();
        for k in 1..=2 {
            let p = super_rhombus_patch(&sym, k).unwrap();
            let shapes: std::collections::HashSet<usize> =
                p.tiles.iter().map(|t| t.k).collect();
            assert_eq!(shapes, [1usize, 2].into_iter().collect(), "k={k}");
        }
    }
}
