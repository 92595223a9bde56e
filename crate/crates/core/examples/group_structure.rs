//! Series, center and nilpotency of a few builtin groups.

use grouplab::corpus::parse_builtin;
use grouplab::structure::{derived_series, is_nilpotent, is_soluble, lower_central_series};

pub fn run_example() -> Vec<String> {
    let mut lines = Vec::new();
    for spec in ["symmetric:4", "dihedral:4", "quaternion8", "sl23", "alternating:5"] {
        let g = parse_builtin(spec).unwrap().build().unwrap();
        lines.push(format!(
            "{spec:<14} order {:>3}  center {:>2}  derived {:?}  lower central {:?}  soluble {}  nilpotent {}",
            g.order(),
            g.center().order(),
            derived_series(&g).orders(),
            lower_central_series(&g).orders(),
            is_soluble(&g),
            is_nilpotent(&g),
        ));
    }
    lines
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
