//! Acceptance run: one PASS/FAIL line per criterion, with time limits.

use std::time::Duration;

use msuper::verify::{eigen, evaluate_compositions, evaluate_partitions, hecke, hooks, module, singular, symmetrize, Recorder, VerifyConfig, VerifyReport};
use msuper::yang_baxter::Builder;
use msuper::Kind;

struct Line {
    id: usize,
    what: &'static str,
    ok: bool,
    detail: String,
}

fn judge(id: usize, what: &'static str, r: &VerifyReport, limit: Duration) -> Line {
    let mut detail = format!("{} cases, {} failures, {:.2}s (limit {}s)", r.cases, r.failures.len(), r.elapsed.as_secs_f64(), limit.as_secs());
    for f in r.failures.iter().take(5) {
        detail.push_str(&format!("\n      {}\n        lhs: {}\n        rhs: {}", f.case, f.lhs, f.rhs));
    }
    Line { id, what, ok: r.passed() && r.cases > 0 && r.elapsed < limit, detail }
}

fn main() {
    let builder = Builder::default();
    let seed = 20_24;
    let mut lines = Vec::new();

    let r1 = hecke(&VerifyConfig { n_max: 6, deg_max: 3, seed });
    lines.push(judge(1, "Hecke relations on the full basis, N = 3..6", &r1, Duration::from_secs(30)));

    let r2 = module(&VerifyConfig { n_max: 6, deg_max: 0, seed });
    lines.push(judge(2, "MD + DM = [N]_t, D^2 = M^2 = 0, N <= 6", &r2, Duration::from_secs(30)));

    let r3 = eigen(&VerifyConfig { n_max: 6, deg_max: 3, seed }, &builder);
    lines.push(judge(3, "eigenfunction identities", &r3, Duration::from_secs(600)));

    let partitions = VerifyConfig { n_max: 6, deg_max: 4, seed };
    let mut rec = Recorder::new("eval0 partitions");
    evaluate_partitions(&mut rec, &partitions, &builder, Kind::Type0);
    let r4 = rec.finish();
    lines.push(judge(4, "type 0 evaluation, three-way agreement", &r4, Duration::from_secs(900)));

    let mut rec = Recorder::new("eval1 partitions");
    evaluate_partitions(&mut rec, &partitions, &builder, Kind::Type1);
    let r5 = rec.finish();
    lines.push(judge(5, "type 1 evaluation, three-way agreement", &r5, Duration::from_secs(900)));

    let compositions = VerifyConfig { n_max: 5, deg_max: 3, seed };
    let mut rec = Recorder::new("composition evaluations");
    evaluate_compositions(&mut rec, &compositions, &builder, Kind::Type0);
    evaluate_compositions(&mut rec, &compositions, &builder, Kind::Type1);
    let r6 = rec.finish();
    lines.push(judge(6, "composition evaluations for every rearrangement", &r6, Duration::from_secs(900)));

    let r7 = hooks(&VerifyConfig { n_max: 6, deg_max: 4, seed });
    lines.push(judge(7, "hook identity and hook step relation, 200 instances each", &r7, Duration::from_secs(600)));

    let r8 = symmetrize(&VerifyConfig { n_max: 5, deg_max: 3, seed }, &builder);
    lines.push(judge(8, "symmetrization identities and closed values", &r8, Duration::from_secs(900)));

    let r9 = singular(&builder);
    lines.push(judge(9, "singular fixtures at N = 6", &r9, Duration::from_secs(300)));

    let leading: Vec<_> = [&r3, &r4, &r5, &r6].iter().flat_map(|r| r.failures.iter()).filter(|f| f.case.starts_with("leading term")).collect();
    let all_built = [&r3, &r4, &r5, &r6].iter().all(|r| r.failures.iter().all(|f| !f.case.starts_with("build") && !f.case.starts_with("evaluate")));
    lines.push(Line {
        id: 10,
        what: "leading term and triangularity for every built polynomial",
        ok: leading.is_empty() && all_built,
        detail: format!("{} leading-term failures across criteria 3-6", leading.len()),
    });

    for l in &lines {
        println!("criterion {:>2} {}: {} ({})", l.id, if l.ok { "PASS" } else { "FAIL" }, l.what, l.detail);
    }
    println!("built {} distinct polynomials", builder.cached());
    let failed: Vec<usize> = lines.iter().filter(|l| !l.ok).map(|l| l.id).collect();
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
