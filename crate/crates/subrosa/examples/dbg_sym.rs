use subrosa::boundary::BoundaryWord;
use subrosa::geometry::Symmetry;
use subrosa::tiler::tile_region_symmetric;

fn main() {
    let sym = Symmetry::new(3).unwrap();
    let w = BoundaryWord::super_rhombus(&sym, 1).unwrap();
    match tile_region_symmetric(&w) {
        Ok(p) => println!("ok: {} tiles", p.len()),
        Err(e) => println!("error: {e}"),
    }
}
