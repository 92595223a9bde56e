//! Minimal non-nilpotent subgroups and their decomposition P ⋊ Q.

use grouplab::corpus::parse_builtin;
use grouplab::structure::schmidt_subgroups;

pub fn run_example() -> Vec<String> {
    let mut lines = Vec::new();
    for spec in ["symmetric:4", "sl23", "dihedral:4"] {
        let g = parse_builtin(spec).unwrap().build().unwrap();
        let found = schmidt_subgroups(&g).unwrap();
        lines.push(format!("{spec}: {} Schmidt subgroups", found.len()));
        for s in &found {
            lines.push(format!(
                "  order {:>2}: P order {} (p = {}), Q = <{}> (q = {}), audits pass {}",
                s.s.order(),
                s.normal_sylow.order(),
                s.p,
                s.complement_generator,
                s.q,
                s.audits.passes()
            ));
        }
    }
    lines
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
