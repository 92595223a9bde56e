//! Every check and audit over all subgroups of the symmetric group on 4
//! points.

use grouplab::corpus::subgroups_of_symmetric;
use grouplab::criteria::verify_group;

pub fn run_example() -> Vec<String> {
    let corpus = subgroups_of_symmetric(4).unwrap();
    let mut lines = Vec::new();
    let mut consistent = 0;
    for d in &corpus {
        let g = d.build().unwrap();
        let v = verify_group(&g);
        if v.all_consistent() {
            consistent += 1;
        }
        let holding: Vec<String> = v
            .reports
            .iter()
            .filter(|r| r.holds)
            .map(|r| match r.prime {
                Some(p) => format!("{}[{p}]", r.criterion.name()),
                None => r.criterion.name().to_string(),
            })
            .collect();
        lines.push(format!("{} order {:>2}: {}", d.name, v.order, holding.join(" ")));
    }
    lines.push(format!("{consistent} of {} groups consistent", corpus.len()));
    lines
}

fn main() {
    for line in run_example() {
        println!("{line}");
    }
}
