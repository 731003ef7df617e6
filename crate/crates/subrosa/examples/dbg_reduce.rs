use subrosa::boundary::{canonical_matching, BoundaryWord};
use subrosa::geometry::{Dir, Symmetry};

fn main() {
    let sym = Symmetry::new(3).unwrap();
    let w = BoundaryWord::super_rhombus(&sym, 1).unwrap();
    println!("word: {:?}", w.letters.iter().map(|d| d.0).collect::<Vec<_>>());
    let m = canonical_matching(&sym, &w.letters).unwrap();
    println!("matching: {:?}", m.partner);

    // replicate the engine with a global crossing-condition audit each step
    let mut letters: Vec<u32> = w.letters.iter().map(|d| d.0).collect();
    let mut mate: Vec<usize> = m.partner.clone(); // by id
    let mut ids: Vec<usize> = (0..letters.len()).collect();

    let audit = |letters: &Vec<u32>, ids: &Vec<usize>, mate: &Vec<usize>| -> Option<String> {
        let l = letters.len();
        let pos_of = |id: usize| ids.iter().position(|&x| x == id).unwrap();
        let in_arc = |s: usize, e: usize, x: usize| {
            let span = (e + l - s) % l;
            let off = (x + l - s) % l;
            off > 0 && off < span
        };
        for i in 0..l {
            let p = pos_of(mate[ids[i]]);
            if p == i { continue; }
            for j in 0..l {
                if j == i || j == p { continue; }
                let q = pos_of(mate[ids[j]]);
                if q == j || q == i || q == p { continue; }
                // chords {i,p}, {j,q} interleaved?
                if in_arc(i, p, j) != in_arc(i, p, q) {
                    let ypos = if in_arc(i, p, j) { j } else { q };
                    let x = letters[i];
                    let y = letters[ypos];
                    let gap = (y as i64 - x as i64).rem_euclid(12);
                    if !(gap > 0 && gap < 6) {
                        return Some(format!("bad crossing chords ({i},{p}) ({j},{q}) letters {x},{y}"));
                    }
                }
            }
        }
        None
    };

    println!("initial audit: {:?}", audit(&letters, &ids, &mate));

    loop {
        let l = letters.len();
        if l == 0 { break; }
        let pos_of = |ids: &Vec<usize>, id: usize| ids.iter().position(|&x| x == id).unwrap();
        let scan = if l == 2 { 1 } else { l };
        let mut acted = false;
        for i in 0..scan {
            let j = (i + 1) % l;
            if mate[ids[i]] == ids[j] {
                println!("cancel at {i}: letters {},{}", letters[i], letters[j]);
                let (a, b) = if i < j { (i, j) } else { (j, i) };
                letters.remove(b); letters.remove(a);
                ids.remove(b); ids.remove(a);
                acted = true;
                break;
            }
        }
        if !acted {
            let in_arc = |s: usize, e: usize, x: usize| {
                let span = (e + l - s) % l;
                let off = (x + l - s) % l;
                off > 0 && off < span
            };
            for i in 0..scan {
                let j = (i + 1) % l;
                let p = pos_of(&ids, mate[ids[i]]);
                let q = pos_of(&ids, mate[ids[j]]);
                if p == j { continue; }
                if in_arc(p, i, q) {
                    let gap = (letters[j] as i64 - letters[i] as i64).rem_euclid(12);
                    if gap > 0 && gap < 6 {
                        println!("swap at {i}: letters {},{}", letters[i], letters[j]);
                        letters.swap(i, j);
                        ids.swap(i, j);
                        acted = true;
                        break;
                    } else {
                        println!("STUCK bad adjacent crossing at {i}: {},{} word {:?}", letters[i], letters[j], letters);
                        return;
                    }
                }
            }
        }
        if !acted {
            println!("STUCK no move, word {:?}", letters);
            return;
        }
        if let Some(bad) = audit(&letters, &ids, &mate) {
            println!("AUDIT FAILED after move: {bad}; word {:?}", letters);
            return;
        }
    }
    println!("reduced to empty");
}
