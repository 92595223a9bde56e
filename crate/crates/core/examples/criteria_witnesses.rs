//! The five order-product criteria with their witnesses.

use grouplab::corpus::parse_builtin;
use grouplab::criteria::{check, Criterion};

pub fn run_example() -> Vec<String> {
    let mut lines = Vec::new();
    for spec in ["symmetric:3", "symmetric:4", "sl23", "cyclic:6"] {
        let g = parse_builtin(spec).unwrap().build().unwrap();
        for c in Criterion::ALL {
            let primes: Vec<Option<u64>> = if c == Criterion::T5 {
                g.prime_spectrum().iter().map(|&p| Some(p)).collect()
            } else {
                vec![None]
            };
            for p in primes {
                let r = check(&g, c, p).unwrap();
                let label = match p {
                    Some(p) => format!("{}[p={p}]", c.name()),
                    None => c.name().to_string(),
                };
                let witness = match &r.witness {
                    Some(w) => format!(
                        "a = {} ({}), b = {} ({}), |ab| = {}",
                        w.a, w.order_a, w.b, w.order_b, w.product_order
                    ),
                    None => "-".to_string(),
                };
                lines.push(format!(
                    "{spec:<12} {label:<8} holds {:<5} {} {:<5} {witness}",
                    r.holds,
                    c.structure_name(),
                    r.structural_verdict
                ));
            }
        }
    }
    lines
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
