// Dev experiment: compare canonical-guided reduction with the brute-force
// existential-matching oracle on all balanced circular words.
use subrosa::boundary::canonical_matching;
use subrosa::geometry::{Dir, Symmetry};
use subrosa::rewrite::reduce_to_empty;

fn oracle(sym: &Symmetry, word: &[Dir]) -> bool {
    // positions per class
    let h = 2 * sym.n as u32;
    let mut classes: Vec<u32> = word.iter().map(|d| d.0 % h).collect();
    classes.sort();
    classes.dedup();
    // per class: opener positions and closer positions
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for &c in &classes {
        let opens: Vec<usize> = (0..word.len()).filter(|&i| word[i].0 == c).collect();
        let closes: Vec<usize> = (0..word.len()).filter(|&i| word[i].0 == c + h).collect();
        if opens.len() != closes.len() { return false; }
        groups.push((opens, closes));
    }
    // enumerate all bijections per class via permutations, test directly
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 { return vec![vec![]]; }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for slot in 0..=p.len() {
                let mut q = p.clone();
                q.insert(slot, k - 1);
                out.push(q);
            }
        }
        out
    }
    let l = word.len();
    let in_arc = |start: usize, end: usize, x: usize| {
        let span = (end + l - start) % l;
        let off = (x + l - start) % l;
        off > 0 && off < span
    };
    let choice_sets: Vec<Vec<Vec<(usize, usize)>>> = groups
        .iter()
        .map(|(o, c)| {
            perms(o.len())
                .into_iter()
                .map(|p| o.iter().cloned().zip(p.into_iter().map(|ix| c[ix])).collect())
                .collect()
        })
        .collect();
    // cartesian product with early exit
    fn rec(
        sym: &Symmetry,
        word: &[Dir],
        sets: &[Vec<Vec<(usize, usize)>>],
        chosen: &mut Vec<(usize, usize)>,
        in_arc: &dyn Fn(usize, usize, usize) -> bool,
    ) -> bool {
        if sets.is_empty() {
            return check(sym, word, chosen, in_arc);
        }
        for cand in &sets[0] {
            let len0 = chosen.len();
            chosen.extend(cand.iter().cloned());
            if rec(sym, word, &sets[1..], chosen, in_arc) {
                return true;
            }
            chosen.truncate(len0);
        }
        false
    }
    fn check(
        sym: &Symmetry,
        word: &[Dir],
        chords: &[(usize, usize)],
        in_arc: &dyn Fn(usize, usize, usize) -> bool,
    ) -> bool {
        for (i, &(p1, q1)) in chords.iter().enumerate() {
            for &(p2, q2) in &chords[i + 1..] {
                // interleaved?
                let c2_in = in_arc(p1, q1, p2);
                let c2q_in = in_arc(p1, q1, q2);
                if c2_in == c2q_in {
                    continue; // nested or disjoint
                }
                // y is the letter of chord2 inside the arc p1 -> q1
                let ypos = if c2_in { p2 } else { q2 };
                let x = word[p1];
                let y = word[ypos];
                let gap = (y.0 as i64 - x.0 as i64).rem_euclid(sym.modulus());
                if !(gap > 0 && gap < 2 * sym.n as i64) {
                    return false;
                }
            }
        }
        true
    }
    let mut chosen = Vec::new();
    rec(sym, word, &choice_sets, &mut chosen, &in_arc)
}

fn main() {
    let sym = Symmetry::new(5).unwrap();
    let a = 1u32;
    let b = 3u32;
    let alphabet = [Dir(a), Dir(b), Dir(a + 10), Dir(b + 10)];
    let max_len = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let mut mismatches = 0u64;
    let mut total = 0u64;
    let mut reducible = 0u64;
    for len in (2..=max_len).step_by(2) {
        let mut word = vec![0usize; len];
        loop {
            // balanced filter
            let mut counts = [0i64; 4];
            for &c in &word {
                counts[c] += 1;
            }
            if counts[0] == counts[2] && counts[1] == counts[3] {
                let w: Vec<Dir> = word.iter().map(|&c| alphabet[c]).collect();
                total += 1;
                let m = canonical_matching(&sym, &w).unwrap();
                let guided = reduce_to_empty(&sym, &w, &m).is_ok();
                let orc = oracle(&sym, &w);
                if guided {
                    reducible += 1;
                }
                if guided != orc {
                    mismatches += 1;
                    if mismatches <= 10 {
                        println!("MISMATCH guided={guided} oracle={orc}: {:?}", word);
                    }
                }
            }
            // увеличить word as base-4 counter
            let mut i = 0;
            loop {
                if i == len {
                    break;
                }
                word[i] += 1;
                if word[i] < 4 {
                    break;
                }
                word[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
        }
        println!("len {len}: total so far {total}, reducible {reducible}, mismatches {mismatches}");
    }
}
