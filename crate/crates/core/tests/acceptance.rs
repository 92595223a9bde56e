//! Acceptance suite. Runs every criterion over the full corpus and prints
//! one PASS/FAIL line each; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rayon::prelude::*;

use grouplab::corpus::{builtin_all, subgroups_of_symmetric, GroupDescriptor};
use grouplab::criteria::{
    check_bw, check_c21, check_c51, check_t2, check_t5, t2_exact_product_violation, Criterion,
    WitnessKind,
};
use grouplab::perm::gcd;
use grouplab::primes::is_power_of;
use grouplab::structure::{
    derived_subgroup, focal_subgroup, is_nilpotent, is_nilpotent_by_series,
    is_nilpotent_by_sylows, is_p_closed, is_p_nilpotent, lower_central_series, derived_series,
    normal_p_complement, p_core, sylow_subgroup, SubgroupLattice,
};
use grouplab::{Elem, FiniteGroup, Subgroup};

struct Entry {
    name: String,
    group: FiniteGroup,
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(violations: &[String], detail: String) -> Outcome {
    let mut detail = detail;
    if !violations.is_empty() {
        detail.push_str(&format!("; {} violation(s), first: {}", violations.len(), violations[0]));
    }
    Outcome { passed: violations.is_empty(), detail }
}

fn load_corpus() -> (Vec<Entry>, Vec<usize>) {
    let mut descriptors: Vec<GroupDescriptor> = Vec::new();
    let mut counts = Vec::new();
    for n in 3..=5 {
        let subs = subgroups_of_symmetric(n).expect("symmetric subgroups");
        counts.push(subs.len());
        descriptors.extend(subs);
    }
    descriptors.extend(builtin_all());
    let entries = descriptors
        .par_iter()
        .map(|d| Entry {
            name: d.name.clone(),
            group: d.build().expect("corpus group builds"),
        })
        .collect();
    (entries, counts)
}

fn violations<F>(corpus: &[Entry], f: F) -> Vec<String>
where
    F: Fn(&Entry) -> Vec<String> + Sync + Send,
{
    corpus.par_iter().flat_map(f).collect()
}

fn derived_nilpotent(g: &FiniteGroup) -> bool {
    is_nilpotent(&derived_subgroup(g).to_group())
}

// Commutators and primary commutators by brute force over all pairs.
fn primary_commutators_brute(g: &FiniteGroup) -> Vec<Elem> {
    let mut set = BTreeSet::new();
    for a in 0..g.order() {
        for b in 0..g.order() {
            set.insert(g.comm(a, b));
        }
    }
    set.into_iter()
        .filter(|&x| x != g.identity())
        .filter(|&x| g.element_order(x) == 1 || is_prime_power(g.element_order(x)))
        .collect()
}

fn is_prime_power(n: u64) -> bool {
    (2..=n).find(|&d| n.is_multiple_of(d)).is_some_and(|p| is_power_of(n, p))
}

fn ac1(corpus: &[Entry], counts: &[usize]) -> Outcome {
    let mut v = violations(corpus, |e| {
        let holds = check_t2(&e.group).holds;
        let expected = derived_nilpotent(&e.group);
        let mut out = Vec::new();
        if holds != expected {
            out.push(format!("{}: t2={} G' nilpotent={}", e.name, holds, expected));
        }
        // In the nilpotent case the product orders are exact.
        if expected {
            if let Some(w) = t2_exact_product_violation(&e.group) {
                out.push(format!("{}: |ab| != |a||b| for {} and {}", e.name, w.a, w.b));
            }
        }
        out
    });
    if counts != [6, 30, 156] {
        v.push(format!("symmetric subgroup counts {counts:?}, expected [6, 30, 156]"));
    }
    outcome(
        &v,
        format!("{} groups (S3/S4/S5 subgroups {:?} + builtins)", corpus.len(), counts),
    )
}

fn ac2(corpus: &[Entry]) -> Outcome {
    let v = violations(corpus, |e| {
        let holds = check_c21(&e.group).holds;
        let expected = derived_nilpotent(&e.group);
        if holds != expected {
            vec![format!("{}: c21={} G' nilpotent={}", e.name, holds, expected)]
        } else {
            vec![]
        }
    });
    outcome(&v, format!("{} groups", corpus.len()))
}

fn ac3(corpus: &[Entry]) -> Outcome {
    let v = violations(corpus, |e| {
        let holds = check_c51(&e.group).holds;
        let expected = is_nilpotent(&e.group);
        if holds != expected {
            vec![format!("{}: c51={} nilpotent={}", e.name, holds, expected)]
        } else {
            vec![]
        }
    });
    outcome(&v, format!("{} groups", corpus.len()))
}

fn ac4(corpus: &[Entry]) -> Outcome {
    let pairs: usize = corpus.iter().map(|e| e.group.prime_spectrum().len()).sum();
    let v = violations(corpus, |e| {
        let g = &e.group;
        let mut out = Vec::new();
        for &p in g.prime_spectrum() {
            let holds = check_t5(g, p).expect("prime in spectrum").holds;
            let expected = is_p_closed(g, p) && is_p_nilpotent(g, p);
            if holds != expected {
                out.push(format!("{} p={}: t5={} expected={}", e.name, p, holds, expected));
            }
        }
        out
    });
    outcome(&v, format!("{pairs} (group, prime) pairs"))
}

fn ac5(corpus: &[Entry]) -> Outcome {
    let v = violations(corpus, |e| {
        let g = &e.group;
        let bw = check_bw(g).holds;
        let c51 = check_c51(g).holds;
        let t2 = check_t2(g).holds;
        let mut out = Vec::new();
        if bw && !is_nilpotent(g) {
            out.push(format!("{}: bw holds on a non-nilpotent group", e.name));
        }
        if bw && !c51 {
            out.push(format!("{}: bw holds but c51 fails", e.name));
        }
        if c51 && !t2 {
            out.push(format!("{}: c51 holds but t2 fails", e.name));
        }
        out
    });
    let bw_count = corpus.iter().filter(|e| check_bw(&e.group).holds).count();
    outcome(&v, format!("bw holds on {bw_count} groups"))
}

fn ac6(corpus: &[Entry]) -> Outcome {
    let checked: usize = corpus
        .par_iter()
        .map(|e| {
            let g = &e.group;
            g.prime_spectrum()
                .iter()
                .map(|&p| g.subgroup_conjugates(&sylow_subgroup(g, p)).len())
                .sum::<usize>()
        })
        .sum();
    let v = violations(corpus, |e| {
        let g = &e.group;
        let derived = derived_subgroup(g);
        let mut out = Vec::new();
        for &p in g.prime_spectrum() {
            for q in g.subgroup_conjugates(&sylow_subgroup(g, p)) {
                match focal_subgroup(g, &q) {
                    Ok(f) if f == q.intersection(&derived) => {}
                    Ok(f) => out.push(format!(
                        "{} p={}: focal order {} vs Q∩G' order {}",
                        e.name,
                        p,
                        f.order(),
                        q.intersection(&derived).order()
                    )),
                    Err(err) => out.push(format!("{} p={}: {}", e.name, p, err)),
                }
            }
        }
        out
    });
    outcome(&v, format!("{checked} Sylow subgroups"))
}

fn ac7(corpus: &[Entry]) -> Outcome {
    let results: Vec<(usize, usize, usize, Vec<String>)> = corpus
        .par_iter()
        .filter(|e| check_t2(&e.group).holds)
        .map(|e| {
            let g = &e.group;
            let lattice = SubgroupLattice::new(g).expect("corpus is within the lattice cap");
            let pcs = primary_commutators_brute(g);
            let mut pairs = 0;
            let mut normalizing = 0;
            let mut out = Vec::new();
            for h in lattice.primary_subgroups() {
                let members: Vec<Elem> = h.indices().collect();
                for &x in &pcs {
                    if gcd(g.element_order(x), h.order() as u64) != 1 {
                        continue;
                    }
                    pairs += 1;
                    let normalizes = members.iter().all(|&y| h.contains_elem(g.conj(y, x)));
                    if !normalizes {
                        continue;
                    }
                    normalizing += 1;
                    if !members.iter().all(|&y| g.commutes(x, y)) {
                        out.push(format!(
                            "{}: {} normalizes but does not centralize a subgroup of order {}",
                            e.name,
                            g.element(x),
                            h.order()
                        ));
                    }
                }
            }
            // The library audit must agree.
            if let Err(err) = grouplab::criteria::normalizer_audit_with(&lattice) {
                out.push(format!("{}: library audit: {}", e.name, err));
            }
            (1, pairs, normalizing, out)
        })
        .collect();
    let groups: usize = results.iter().map(|r| r.0).sum();
    let pairs: usize = results.iter().map(|r| r.1).sum();
    let normalizing: usize = results.iter().map(|r| r.2).sum();
    let v: Vec<String> = results.into_iter().flat_map(|r| r.3).collect();
    outcome(
        &v,
        format!("{groups} groups with t2, {pairs} coprime pairs, {normalizing} normalizing"),
    )
}

fn ac8(corpus: &[Entry]) -> Outcome {
    // (name, Schmidt orders, p = 2 cases, of which abelian P, violations)
    type Scan = (String, Vec<usize>, usize, usize, Vec<String>);
    let results: Vec<Scan> = corpus
        .par_iter()
        .map(|e| {
            let g = &e.group;
            let lattice = SubgroupLattice::new(g).expect("corpus is within the lattice cap");
            let mut out = Vec::new();
            let mut orders = Vec::new();
            let mut two_cases = 0;
            let mut two_abelian = 0;
            // Independent minimality scan over the lattice.
            let oracle: Vec<&Subgroup> = lattice
                .subgroups()
                .iter()
                .filter(|s| !is_nilpotent(&s.to_group()))
                .filter(|s| {
                    lattice.subgroups().iter().all(|t| {
                        !(t.is_subgroup_of(s) && t.order() < s.order())
                            || is_nilpotent(&t.to_group())
                    })
                })
                .collect();
            match lattice.schmidt_subgroups() {
                Ok(found) => {
                    if found.len() != oracle.len() {
                        out.push(format!(
                            "{}: {} Schmidt subgroups detected, oracle finds {}",
                            e.name,
                            found.len(),
                            oracle.len()
                        ));
                    }
                    for s in &found {
                        orders.push(s.s.order());
                        let a = &s.audits;
                        let sg = s.s.to_group();
                        let p_order = s.normal_sylow.order();
                        let mut ok = a.derived_is_p
                            && a.p_normal
                            && a.q_cyclic
                            && a.q_nonnormal
                            && a.order_splits
                            && derived_subgroup(&sg).order() == p_order
                            && is_power_of(p_order as u64, s.p)
                            && is_power_of(s.complement_generator.order(), s.q)
                            && s.s.contains(&s.complement_generator);
                        if s.p == 2 {
                            two_cases += 1;
                            let t = a.two_group.as_ref();
                            ok &= t.is_some_and(|t| t.passes());
                            if t.is_some_and(|t| t.p_abelian) {
                                two_abelian += 1;
                            }
                        }
                        if !ok {
                            out.push(format!(
                                "{}: Schmidt subgroup of order {} fails audit {:?}",
                                e.name,
                                s.s.order(),
                                a
                            ));
                        }
                    }
                }
                Err(err) => out.push(format!("{}: {}", e.name, err)),
            }
            orders.sort_unstable();
            (e.name.clone(), orders, two_cases, two_abelian, out)
        })
        .collect();
    let total: usize = results.iter().map(|r| r.1.len()).sum();
    let two_cases: usize = results.iter().map(|r| r.2).sum();
    let two_abelian: usize = results.iter().map(|r| r.3).sum();
    let mut v: Vec<String> = Vec::new();
    let s4 = results.iter().find(|r| r.0 == "symmetric:4");
    match s4 {
        Some(r) if r.1 == [6, 6, 6, 6, 12] => {}
        Some(r) => v.push(format!("S4 Schmidt orders {:?}, expected [6, 6, 6, 6, 12]", r.1)),
        None => v.push("symmetric:4 missing from the corpus".into()),
    }
    v.extend(results.into_iter().flat_map(|r| r.4));
    outcome(
        &v,
        format!(
            "{total} Schmidt subgroups, {two_cases} with p = 2 ({two_abelian} with abelian P), S4 orders [6, 6, 6, 6, 12]"
        ),
    )
}

fn ac9(corpus: &[Entry]) -> Outcome {
    let find = |name: &str| &corpus.iter().find(|e| e.name == name).expect("builtin").group;
    let mut v = Vec::new();
    let s4 = find("symmetric:4");
    let r = check_t2(s4);
    let mut detail = String::new();
    match &r.witness {
        Some(w) => {
            detail.push_str(&format!(
                "t2 on S4: a={} b={} orders ({}, {}, {})",
                w.a, w.b, w.order_a, w.order_b, w.product_order
            ));
            if (w.order_a, w.order_b, w.product_order) != (3, 2, 3) {
                v.push("t2 witness orders differ from (3, 2, 3)".to_string());
            }
            if !w.verify(s4, Criterion::T2, None) || w.kind != WitnessKind::Inequality {
                v.push("t2 witness does not re-verify".to_string());
            }
            let ab = w.a.then(&w.b);
            if ab.order() != 3 || gcd(w.a.order(), w.b.order()) != 1 {
                v.push("t2 witness arithmetic recomputed incorrectly".to_string());
            }
        }
        None => v.push("check_t2 on S4 returned no witness".to_string()),
    }
    let s3 = find("symmetric:3");
    let r = check_bw(s3);
    match &r.witness {
        Some(w) => {
            detail.push_str(&format!(
                "; bw on S3: a={} b={} |ab|={} vs {}",
                w.a,
                w.b,
                w.product_order,
                w.order_a * w.order_b
            ));
            if w.product_order != 2 || w.order_a * w.order_b != 6 {
                v.push("bw witness on S3 is not |ab| = 2 vs 6".to_string());
            }
            if w.a.then(&w.b).order() != 2 || !w.verify(s3, Criterion::Bw, None) {
                v.push("bw witness does not re-verify".to_string());
            }
        }
        None => v.push("check_bw on S3 returned no witness".to_string()),
    }
    outcome(&v, detail)
}

fn lagrange(name: &str, g: &FiniteGroup, label: &str, h: &Subgroup, out: &mut Vec<String>) {
    if !g.order().is_multiple_of(h.order()) {
        out.push(format!("{name}: {label} of order {} in group of order {}", h.order(), g.order()));
    }
}

fn ac10(corpus: &[Entry]) -> Outcome {
    let results: Vec<(usize, Vec<String>)> = corpus
        .par_iter()
        .map(|e| {
            let g = &e.group;
            let name = e.name.as_str();
            let mut out = Vec::new();
            let mut produced = 0;
            let mut check = |label: &str, h: &Subgroup, out: &mut Vec<String>| {
                produced += 1;
                lagrange(name, g, label, h, out);
            };
            let lattice = SubgroupLattice::new(g).expect("corpus is within the lattice cap");
            for h in lattice.subgroups() {
                check("lattice member", h, &mut out);
            }
            for h in lattice.maximal() {
                check("maximal subgroup", &h, &mut out);
            }
            check("Frattini subgroup", &lattice.frattini(), &mut out);
            check("center", &g.center(), &mut out);
            check("derived subgroup", &derived_subgroup(g), &mut out);
            for t in lower_central_series(g).terms.iter() {
                check("lower central term", t, &mut out);
            }
            for t in derived_series(g).terms.iter() {
                check("derived series term", t, &mut out);
            }
            for &p in g.prime_spectrum() {
                let q = sylow_subgroup(g, p);
                check("Sylow subgroup", &q, &mut out);
                check("normalizer", &g.normalizer(&q), &mut out);
                check("centralizer", &g.centralizer(&q), &mut out);
                check("p-core", &p_core(g, p), &mut out);
                if let Some(c) = normal_p_complement(g, p) {
                    check("normal p-complement", &c, &mut out);
                }
                if let Ok(f) = focal_subgroup(g, &q) {
                    check("focal subgroup", &f, &mut out);
                }
                let count = g.subgroup_conjugates(&q).len();
                if count as u64 % p != 1 || g.order() % count != 0 {
                    out.push(format!("{name}: {count} Sylow {p}-subgroups"));
                }
            }
            if is_nilpotent_by_series(g) != is_nilpotent_by_sylows(g) {
                out.push(format!("{name}: series and Sylow nilpotency disagree"));
            }
            (produced, out)
        })
        .collect();
    let produced: usize = results.iter().map(|r| r.0).sum();
    let v: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    outcome(&v, format!("{produced} produced subgroups checked"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (corpus, counts) = load_corpus();
    let mut rows: Vec<(usize, &str, Outcome)> = vec![
        (1, "t2 equivalence", ac1(&corpus, &counts)),
        (2, "c21 equivalence", ac2(&corpus)),
        (3, "c51 equivalence", ac3(&corpus)),
        (4, "t5 equivalence", ac4(&corpus)),
        (5, "bw sufficiency and chain", ac5(&corpus)),
        (6, "focal subgroup equals Q ∩ G'", ac6(&corpus)),
        (7, "normalizer implies centralizer audit", ac7(&corpus)),
        (8, "Schmidt structure audit", ac8(&corpus)),
        (9, "witness spot-check", ac9(&corpus)),
        (10, "engine invariants", ac10(&corpus)),
    ];
    // Criterion 1 also bounds the wall time of the whole run.
    let elapsed = start.elapsed().as_secs_f64();
    let t2 = &mut rows[0].2;
    t2.detail.push_str(&format!(", full run {elapsed:.2}s"));
    if elapsed >= 60.0 {
        t2.passed = false;
        t2.detail.push_str(" exceeds 60s");
    }

    let mut failed = 0;
    for (id, label, o) in &rows {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("[{status}] {id:>2}. {label}: {}", o.detail);
        if !o.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {} failed", rows.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
