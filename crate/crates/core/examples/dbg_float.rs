use qracah_braid::suite::{run_suite, SuiteConfig};

fn main() {
    let config = SuiteConfig {
        timing: true,
        ..SuiteConfig::default()
    };
    let t = std::time::Instant::now();
    let report = run_suite(&config).unwrap();
    println!("exact suite: {} pass, {} fail in {:?}", report.passes(), report.failures(), t.elapsed());
    for r in report.results.iter().filter(|r| !r.passed).take(12) {
        println!("FAIL {} {:?} {:?}", r.identity, r.params, r.detail);
    }
    let mut slowest: Vec<_> = report.results.iter().map(|r| (r.millis, r.identity.clone(), r.params.clone())).collect();
    slowest.sort_by_key(|x| std::cmp::Reverse(x.0));
    println!("slowest cases:");
    for (ms, id, params) in slowest.iter().take(12) {
        println!("  {ms} ms  {id} {params:?}");
    }
    let mut per_identity: std::collections::BTreeMap<&str, u64> = Default::default();
    for r in &report.results {
        *per_identity.entry(r.identity.as_str()).or_default() += r.millis;
    }
    let mut v: Vec<_> = per_identity.into_iter().collect();
    v.sort_by_key(|x| std::cmp::Reverse(x.1));
    println!("per identity totals:");
    for (id, ms) in v {
        println!("  {ms} ms  {id}");
    }
}
