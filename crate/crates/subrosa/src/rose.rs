//! Rose patches: the rotationally symmetric ring arrangements R1 and R2^b,
//! and the corner sectors cut from R2^1.

use crate::geometry::{CycloVec, Isometry, PlacedRhombus, Symmetry};
use crate::patch::Patch;
use crate::Error;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum RoseKind {
    R1,
    R2,
}

#[derive(Clone, Debug)]
pub struct RosePatch {
    pub kind: RoseKind,
    pub omitted_rings: usize,
    pub tiles: Patch,
}

/// Ring j, sector i of the large rose rotated by `r` doubled units about
/// `center`. The tile is spanned by unit steps at 2i+r and 2(i+j)+r, based at
/// the partial ring walk.
fn r2_tile(sym: &Symmetry, i: usize, j: usize, r: i64, center: &CycloVec) -> PlacedRhombus {
    let mut base = center.clone();
    for t in (i + 1)..(i + j) {
        base = &base + &sym.unit(sym.dir(2 * t as i64 + r));
    }
    let d1 = sym.dir(2 * i as i64 + r);
    let d2 = sym.dir(2 * (i + j) as i64 + r);
    PlacedRhombus::from_span(sym, &base, d1, d2)
}

/// The large rose with `b` outermost rings omitted, rotated by `r` about `center`.
pub fn rose_r2_rotated(sym: &Symmetry, b: usize, r: i64, center: &CycloVec) -> Result<RosePatch, Error> {
    let n = sym.n;
    if b > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "omitted ring count b={b} out of range 0..={}",
            n - 1
        )));
    }
    let mut tiles = Vec::new();
    for j in 1..=(n - 1 - b) {
        for i in 0..2 * n {
            tiles.push(r2_tile(sym, i, j, r, center));
        }
    }
    Ok(RosePatch { kind: RoseKind::R2, omitted_rings: b, tiles: Patch::from_tiles(*sym, tiles) })
}

/// Rose R2^b: 2n-fold symmetric rings of (j, n-j) rhombuses, j = 1..n-1-b.
pub fn rose_r2(sym: &Symmetry, b: usize) -> Result<RosePatch, Error> {
    rose_r2_rotated(sym, b, 0, &CycloVec::zero(sym.n))
}

/// Rose R1: n-fold symmetric rings of (2j, n-2j) rhombuses.
pub fn rose_r1(sym: &Symmetry) -> Result<RosePatch, Error> {
    let n = sym.n;
    if n < 3 {
        return Err(Error::InvalidParameter(format!("rose R1 needs n >= 3, got {n}")));
    }
    let rings = (n - 1) / 2;
    let mut tiles = Vec::new();
    for j in 1..=rings {
        for i in 0..n {
            let mut base = CycloVec::zero(n);
            for t in (i + 1)..(i + j) {
                base = &base + &sym.unit(sym.dir(4 * t as i64));
            }
            let d1 = sym.dir(4 * i as i64);
            let d2 = sym.dir(4 * (i + j) as i64);
            tiles.push(PlacedRhombus::from_span(sym, &base, d1, d2));
        }
    }
    Ok(RosePatch { kind: RoseKind::R1, omitted_rings: 0, tiles: Patch::from_tiles(*sym, tiles) })
}

/// Symmetry axis angle of a rose tile: ring-j tiles are bisected by the ray
/// at 2i + j + r and touch the rays at distance one on either side only in
/// single vertices.
fn tile_axis(i: usize, j: usize, r: i64) -> i64 {
    2 * i as i64 + j as i64 + r
}

/// The sector of the corner rose R2^1 spanning `corner_label * pi/n`,
/// positioned by `pose`.
///
/// In the pose's frame the sector spans doubled angles [0, 2*label), bounded
/// by rose radii; tiles bisected by the starting radius are included, tiles
/// bisected by the ending radius belong to the next sector counterclockwise.
/// The rose itself carries the corner orientation: rotated a half step for
/// odd n, aligned with the lattice for even n.
pub fn rose_sector(sym: &Symmetry, corner_label: usize, pose: &Isometry) -> Result<Patch, Error> {
    let n = sym.n;
    if corner_label == 0 || corner_label > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "corner label {corner_label} out of range 1..={}",
            n - 1
        )));
    }
    let q = (n % 2) as i64; // corner rose rotation parity
    let span = 2 * corner_label as i64;
    let mut tiles = Vec::new();
    if n >= 3 {
        for j in 1..=(n - 2) {
            for i in 0..2 * n {
                let phi = tile_axis(i, j, q).rem_euclid(sym.modulus());
                if phi < span {
                    let t = r2_tile(sym, i, j, q, &CycloVec::zero(n));
                    tiles.push(t.transformed(sym, pose.rot.0 as i64, &pose.shift));
                }
            }
        }
    }
    Ok(Patch::from_tiles(*sym, tiles))
}
