//! Parsing, composing and inspecting permutations in cycle notation.
//!
//! Products compose left to right: `a.then(&b)` applies `a` first.

use grouplab::{commutator, Permutation};

pub fn run_example() -> Vec<String> {
    let a = Permutation::parse_cycles("(1 2 3)", 4).unwrap();
    let b = Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap();
    let ab = a.then(&b);
    let c = commutator(&a, &b).unwrap();
    let parsed: Permutation = "5:(1 5)(2 3)".parse().unwrap();
    vec![
        format!("a = {a}, order {}", a.order()),
        format!("b = {b}, order {}", b.order()),
        format!("ab = {ab}, order {}", ab.order()),
        format!("a^-1 = {}", a.inverse()),
        format!("[a, b] = {c}"),
        format!("{parsed} has cycles {:?}", parsed.cycles()),
        format!("bad input: {}", Permutation::parse_cycles("(1 2 2)", 3).unwrap_err()),
    ]
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
