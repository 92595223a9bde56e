//! Reading a group from the text file format.

use grouplab::corpus::parse_group_str;
use grouplab::criteria::check_t2;

const TEXT: &str = "\
# the Frobenius group of order 20
name: F20
degree: 5
gen: (1 2 3 4 5)
gen: (2 3 5 4)
";

pub fn run_example() -> Vec<String> {
    let desc = parse_group_str(TEXT, "unnamed").unwrap();
    let g = desc.build().unwrap();
    let report = check_t2(&g);
    let mut lines = vec![
        format!("{desc}"),
        format!("order {}, t2 holds {}", g.order(), report.holds),
    ];
    for bad in ["gen: (1 2)\n", "degree: 3\ngen: (1 4)\n", "degree: 3\ncolour: red\n"] {
        lines.push(format!("{:?}: {}", bad, parse_group_str(bad, "x").unwrap_err()));
    }
    lines
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
