//! Acceptance run: one line per criterion, non-zero exit if any fails.
//! Runs without the libtest harness so the lines always show.

use std::time::Instant;

use multirel::fixpoint::{
    infinity, is_deflationary, is_omega_trivial, is_wellfounded, iter_star_bracket, iter_star_paren, nabla, omega,
    omega_binary, star, star_binary, sum_of_powers,
};
use multirel::laws::{
    self, check_algebra, check_law, find_law, repro_all, repro_item, AxiomSet, Expected, FiniteAlgebra, RelModel,
    ReproOutcome, SuiteOptions,
};
use multirel::space::{random_relation, rng_from_seed, ClassSpace, SearchMode, DEFAULT_SEED};
use multirel::structure::{is_in_class, nu, tau, ClassTag};
use multirel::{MultiRelation, StateSet, Universe};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all(u: &Universe) -> Vec<MultiRelation> {
    ClassSpace::new(u, ClassTag::General).unwrap().iter().unwrap().collect()
}

fn rel(u: &Universe, text: &str) -> MultiRelation {
    MultiRelation::parse_literal(u, text).unwrap()
}

/// Peleg composition straight from its definition: for each `(a,B)` in `R`
/// and each choice function `f` picking `(b, f(b))` in `S` for every `b` in
/// `B`, relate `a` to the union of the `f(b)`.
fn seq_by_choice_functions(r: &MultiRelation, s: &MultiRelation) -> MultiRelation {
    let u = r.universe();
    let rows: Vec<Vec<StateSet>> =
        (0..u.len()).map(|b| s.pairs().filter(|(x, _)| *x == b).map(|(_, t)| t).collect()).collect();
    let mut out = Vec::new();
    for (a, bs) in r.pairs() {
        let bs: Vec<usize> = bs.iter().collect();
        let mut choice = vec![0usize; bs.len()];
        if bs.iter().any(|&b| rows[b].is_empty()) {
            continue;
        }
        loop {
            let target = bs.iter().zip(&choice).fold(StateSet::EMPTY, |acc, (&b, &i)| acc.union(rows[b][i]));
            out.push((a, target));
            // advance the mixed-radix counter over choice functions
            let mut k = 0;
            while k < bs.len() {
                choice[k] += 1;
                if choice[k] < rows[bs[k]].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == bs.len() {
                break;
            }
        }
    }
    MultiRelation::from_index_pairs(u, out).unwrap()
}

fn criterion_1() -> Outcome {
    let mut pairs = 0;
    let one = Universe::of_size(1).unwrap();
    let rels = all(&one);
    for r in &rels {
        for s in &rels {
            ensure(r.seq(s).unwrap() == seq_by_choice_functions(r, s), || format!("n=1: {r} . {s}"))?;
            pairs += 1;
        }
    }
    let mut rng = rng_from_seed(DEFAULT_SEED);
    for n in [2, 3] {
        let u = Universe::of_size(n).unwrap();
        for _ in 0..10_000 {
            let (r, s) = (random_relation(&u, &mut rng), random_relation(&u, &mut rng));
            ensure(r.seq(&s).unwrap() == seq_by_choice_functions(&r, &s), || format!("n={n}: {r} . {s}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs agree"))
}

/// Holds at n=1 exhaustively and at n=2 exhaustively or on 2*10^5 samples.
fn holds_up_to_two(name: &str) -> Result<&'static str, String> {
    let law = find_law(name).ok_or_else(|| format!("{name} missing from catalog"))?;
    let mut regime = "exhaustive";
    for n in [1, 2] {
        let m = RelModel::of_size(n).map_err(|e| e.to_string())?;
        let mode = if n == 1 {
            SearchMode::Exhaustive
        } else {
            laws::check::auto_mode(&law, &m, laws::check::DEFAULT_SAMPLES, DEFAULT_SEED).map_err(|e| e.to_string())?
        };
        if matches!(mode, SearchMode::Sampled { .. }) {
            regime = "sampled";
        }
        let v = check_law(&law, &m, mode).map_err(|e| e.to_string())?;
        ensure(!v.is_refuted(), || v.line(name))?;
    }
    Ok(regime)
}

fn holds_all(names: &[String]) -> Outcome {
    let mut sampled = 0;
    for name in names {
        if holds_up_to_two(name)? == "sampled" {
            sampled += 1;
        }
    }
    Ok(format!("{} laws hold ({sampled} sampled at n=2)", names.len()))
}

fn criterion_2() -> Outcome {
    let names: Vec<String> =
        (1..=6).map(|i| format!("c{i}")).chain((1..=11).map(|i| format!("cl{i}"))).collect();
    holds_all(&names)
}

fn criterion_3() -> Outcome {
    let groups = [
        "domaxverif-", "mraxioms-", "dclatprop1-", "explicitdomverif-", "dompropsverif-", "iso2-", "iso3-",
        "nutauinterior-", "nutauconst-", "nutauhoms-", "taunusplit-",
    ];
    let names: Vec<String> = laws::catalog()
        .into_iter()
        .filter(|l| l.expected == Expected::Valid && groups.iter().any(|g| l.name.starts_with(g)))
        .map(|l| l.name)
        .collect();
    for g in groups {
        ensure(names.iter().any(|n| n.starts_with(g)), || format!("no laws in group {g}"))?;
    }
    let summary = holds_all(&names)?;
    let u = Universe::of_size(2).unwrap();
    let top = MultiRelation::univ(&u);
    ensure(tau(&top) == MultiRelation::one_pi(&u), || format!("tau(U) = {}", tau(&top)))?;
    let iso = multirel::structure::check_iso_roundtrips(&u, SearchMode::Exhaustive).map_err(|e| e.to_string())?;
    ensure(iso.all_hold(), || iso.to_text())?;
    Ok(format!("{summary}; tau(U) = 1p; round-trips hold"))
}

fn criterion_4() -> Outcome {
    let opts = SuiteOptions::default();
    let refuted: Vec<_> = laws::catalog().into_iter().filter(|l| l.expected == Expected::Refuted).collect();
    for law in &refuted {
        let e = laws::run_law(law, &opts).map_err(|e| e.to_string())?;
        ensure(!e.mismatch, || e.line())?;
    }
    let items = repro_all().map_err(|e| e.to_string())?;
    for item in &items {
        ensure(item.outcome() == ReproOutcome::Pass, || item.lines().join("\n"))?;
    }
    Ok(format!("{} refuted laws witnessed at n <= 3; {} stored items replay", refuted.len(), items.len()))
}

/// Greatest fixpoint by plain descent from `U`.
fn gfp_oracle(f: impl Fn(&MultiRelation) -> MultiRelation, u: &Universe) -> MultiRelation {
    let mut x = MultiRelation::univ(u);
    loop {
        let next = f(&x);
        if next == x {
            return x;
        }
        x = next;
    }
}

fn criterion_5() -> Outcome {
    let u = Universe::of_size(2).unwrap();
    for r in all(&u) {
        let s = star(&r);
        ensure(s == iter_star_paren(&r), || format!("star vs paren at {r}"))?;
        ensure(s == iter_star_bracket(&r), || format!("star vs bracket at {r}"))?;
        ensure(s == sum_of_powers(&r), || format!("star vs powers at {r}"))?;
    }
    let abc = Universe::new(["a", "b", "c"]).unwrap();
    let r = rel(&abc, "{(a,{b,c}),(b,{a})}");
    let s = rel(&abc, "{(c,{a})}");
    let w = omega(&r);
    let ws = omega_binary(&r, &s).unwrap();
    ensure(w == gfp_oracle(|x| r.seq(x).unwrap(), &abc), || "R^w differs from the oracle".into())?;
    ensure(w.is_empty(), || format!("R^w = {w}"))?;
    ensure(ws == gfp_oracle(|x| s.union(&r.seq(x).unwrap()).unwrap(), &abc), || "R^wS differs from the oracle".into())?;
    let ss = star_binary(&r, &s).unwrap();
    ensure(ss == s, || format!("R^*S = {ss}"))?;
    let lower = w.union(&ss).unwrap();
    ensure(lower.is_subset(&ws).unwrap() && lower != ws, || format!("{lower} not strictly below {ws}"))?;
    let inf_s = infinity(&r).seq(&s).unwrap();
    ensure(ws != inf_s, || format!("R^wS = R^inf.S = {ws}"))?;
    for name in ["nucounter", "inftycounter"] {
        let item = repro_item(name).map_err(|e| e.to_string())?;
        ensure(item.outcome() == ReproOutcome::Pass, || item.lines().join("\n"))?;
    }
    Ok(format!("256 relations; R^wS = {ws}"))
}

fn criterion_6() -> Outcome {
    let u = Universe::of_size(2).unwrap();
    let mut trivial = 0;
    for r in all(&u) {
        let t = is_omega_trivial(&r);
        let d = is_deflationary(&r, SearchMode::Exhaustive).map_err(|e| e.to_string())?;
        let w = is_wellfounded(&r, SearchMode::Exhaustive).map_err(|e| e.to_string())?;
        ensure(t == d && d == w, || format!("{r}: trivial {t}, deflationary {d}, wellfounded {w}"))?;
        trivial += usize::from(t);
    }
    Ok(format!("256 relations agree, {trivial} wellfounded"))
}

fn criterion_7() -> Outcome {
    let u = Universe::of_size(2).unwrap();
    let top = MultiRelation::univ(&u);
    let co = MultiRelation::co_one_pi(&u);
    let one_pi = MultiRelation::one_pi(&u);
    for x in all(&u) {
        let nx = nu(&x);
        let w = omega(&nx);
        let n = nabla(&nx);
        ensure(w == n.seq(&top).unwrap(), || format!("nu(x)^w at {x}"))?;
        ensure(nu(&w) == n.seq(&co).unwrap(), || format!("nu(nu(x)^w) at {x}"))?;
        ensure(tau(&w) == n.seq(&one_pi).unwrap(), || format!("tau(nu(x)^w) at {x}"))?;
    }
    Ok("three identities on 256 relations".into())
}

fn criterion_8() -> Outcome {
    let started = Instant::now();
    let alg = FiniteAlgebra::builtin();
    let report = check_algebra(&alg, AxiomSet::CTrioid).map_err(|e| e.to_string())?;
    ensure(report.axioms.iter().all(|(_, v)| v.holds()), || format!("{:?}", report.verdict()))?;
    let d = alg.domain_table();
    ensure(d == ["0", "1s", "1s", "1s"], || format!("d column {d:?}"))?;
    let item = repro_item("ctrioidcounter1").map_err(|e| e.to_string())?;
    ensure(item.outcome() == ReproOutcome::Pass, || item.lines().join("\n"))?;
    Ok(format!("{} axioms hold, 4 refutations replay, {:?}", report.axioms.len(), started.elapsed()))
}

fn criterion_9() -> Outcome {
    let u = Universe::of_size(2).unwrap();
    let top = MultiRelation::univ(&u);
    let rels = all(&u);
    for r in &rels {
        for s in &rels {
            let lhs = r.parikh_seq(&s.par(&top).unwrap()).unwrap();
            let rhs = r.seq(s).unwrap().par(&top).unwrap();
            ensure(lhs == rhs, || format!("R={r} S={s}"))?;
        }
    }
    let up: Vec<_> = rels.iter().filter(|r| is_in_class(r, ClassTag::UpClosed)).collect();
    for r in &up {
        for s in &up {
            ensure(r.par(s).unwrap() == r.inter(s).unwrap(), || format!("par vs inter at {r}, {s}"))?;
        }
    }
    Ok(format!("{} pairs; par = inter on {} up-closed pairs", rels.len() * rels.len(), up.len() * up.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("seq agrees with the choice-function oracle", criterion_1),
        ("c1-c6 and cl1-cl11 hold", criterion_2),
        ("derived domain, projection and round-trip laws hold", criterion_3),
        ("refuted laws are witnessed and stored witnesses replay", criterion_4),
        ("finite and infinite iteration values", criterion_5),
        ("termination notions coincide", criterion_6),
        ("nabla identities", criterion_7),
        ("builtin four-element algebra", criterion_8),
        ("up-closed bridge", criterion_9),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = run();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS {title}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {title}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {}/9 passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
