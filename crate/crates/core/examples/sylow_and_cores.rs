//! Sylow subgroups, p-cores, p-closure and p-nilpotency.

use grouplab::corpus::parse_builtin;
use grouplab::structure::{is_p_closed, is_p_nilpotent, normal_p_complement, p_core, sylow_subgroups};

pub fn run_example() -> Vec<String> {
    let mut lines = Vec::new();
    for spec in ["symmetric:4", "alternating:4", "sl23", "dihedral:4 x cyclic:3"] {
        let g = parse_builtin(spec).unwrap().build().unwrap();
        for &p in g.prime_spectrum() {
            let sylows = sylow_subgroups(&g, p);
            lines.push(format!(
                "{spec} p={p}: {} Sylow subgroups of order {}, core {}, closed {}, nilpotent {}, complement {:?}",
                sylows.len(),
                sylows[0].order(),
                p_core(&g, p).order(),
                is_p_closed(&g, p),
                is_p_nilpotent(&g, p),
                normal_p_complement(&g, p).map(|c| c.order()),
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
