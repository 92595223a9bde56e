//! Full subgroup lattice, maximal subgroups and the Frattini subgroup.

use std::collections::BTreeMap;

use grouplab::corpus::parse_builtin;
use grouplab::structure::SubgroupLattice;

pub fn run_example() -> Vec<String> {
    let mut lines = Vec::new();
    for spec in ["symmetric:4", "quaternion8", "cyclic:12", "symmetric:5"] {
        let g = parse_builtin(spec).unwrap().build().unwrap();
        let lattice = SubgroupLattice::new(&g).unwrap();
        let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
        for h in lattice.subgroups() {
            *by_order.entry(h.order()).or_default() += 1;
        }
        let maximal: Vec<usize> = lattice.maximal().iter().map(|h| h.order()).collect();
        lines.push(format!(
            "{spec}: {} subgroups by order {by_order:?}; maximal orders {maximal:?}; Frattini order {}",
            lattice.len(),
            lattice.frattini().order()
        ));
    }
    let s6 = parse_builtin("symmetric:6").unwrap().build().unwrap();
    lines.push(format!("symmetric:6: {}", SubgroupLattice::new(&s6).unwrap_err()));
    lines
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
