use subrosa::boundary::{canonical_matching, BoundaryWord};
use subrosa::geometry::Symmetry;
use subrosa::rewrite::{reduce_to_empty, replay};

fn main() {
    let sym = Symmetry::new(3).unwrap();
    let w = BoundaryWord::super_rhombus(&sym, 1).unwrap();
    let m = canonical_matching(&sym, &w.letters).unwrap();
    match reduce_to_empty(&sym, &w.letters, &m) {
        Ok(trace) => {
            println!("trace: {:?}", trace.steps.iter().map(|s| (s.pos, s.kind)).collect::<Vec<_>>());
            println!("replay end: {:?}", replay(&sym, &w.letters, &trace));
        }
        Err(s) => println!("stuck: {} {:?}", s.detail, s.word),
    }
}
