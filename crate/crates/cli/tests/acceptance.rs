//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use unmixed_core::braidspace::YDModule;
use unmixed_core::permgroup::{conjugacy_class, permutations_of, CycleType, NormalForm, Permutation, UnmixedClass};
use unmixed_core::reps::{enumerate_irreps, RepChoice, RepSpec};
use unmixed_core::verdict::properties::{commuting_pair_records, exponent_sum_modulus, violations};
use unmixed_core::verdict::{
    decide, finite_type, negativity_check_full_class, theorem1_oracle, CartanData, EngineConfig, NegativityResult,
    Outcome, Report,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_unmixed"))
        .arg("--quiet")
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8"),
        out.status.code().unwrap_or(-1),
    )
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let (out, code) = cli(args);
    ensure(code == 0, || format!("{args:?} exited {code}"))?;
    serde_json::from_str(&out).map_err(|e| format!("{args:?}: {e}"))
}

fn choice(k: u32, n: u32, spec: &str) -> RepChoice {
    spec.parse::<RepSpec>().unwrap().resolve(k, n).unwrap()
}

fn rep_label(k: u32, n: u32, spec: &str) -> String {
    choice(k, n, spec).to_string()
}

/// `z(m,a)` as the fraction `a/m` of a full turn.
fn turn(s: &str) -> (i64, i64) {
    let inner = s.trim_start_matches("z(").trim_end_matches(')');
    let (m, a) = inner.split_once(',').expect("z(m,a)");
    (m.parse().unwrap(), a.parse().unwrap())
}

fn product_is_one(x: &str, y: &str) -> bool {
    let ((m1, a1), (m2, a2)) = (turn(x), turn(y));
    (a1 * m2 + a2 * m1) % (m1 * m2) == 0
}

/// Adjacency of the diagram of a braiding matrix given as strings.
fn graph(q: &[Vec<String>]) -> Vec<BTreeSet<usize>> {
    let m = q.len();
    (0..m)
        .map(|a| {
            (0..m)
                .filter(|&b| b != a && !product_is_one(&q[a][b], &q[b][a]))
                .collect()
        })
        .collect()
}

fn components(adj: &[BTreeSet<usize>]) -> Vec<BTreeSet<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn is_cycle(adj: &[BTreeSet<usize>]) -> bool {
    adj.iter().all(|n| n.len() == 2) && components(adj).len() == 1
}

fn has_triangle(adj: &[BTreeSet<usize>]) -> bool {
    (0..adj.len()).any(|a| {
        adj[a]
            .iter()
            .any(|&b| adj[b].iter().any(|&c| c != a && adj[c].contains(&a)))
    })
}

fn q_matrix(w: &Value) -> Vec<Vec<String>> {
    serde_json::from_value(w["q"].clone()).expect("q matrix")
}

fn row<'a>(table: &'a Value, rep: &str) -> Result<&'a Value, String> {
    table["rows"]
        .as_array()
        .and_then(|rows| rows.iter().find(|r| r["rep"] == rep))
        .ok_or_else(|| format!("no row {rep}"))
}

fn outcome_counts(table: &Value) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for r in table["rows"].as_array().unwrap() {
        *m.entry(r["outcome"].as_str().unwrap().to_string()).or_default() += 1;
    }
    m
}

fn grid() -> Check {
    let cfg = EngineConfig::default();
    let (mut cases, mut gaps) = (0, 0);
    for k in 2..=10u32 {
        for n in 1..=10 / k {
            for e in enumerate_irreps(k, n) {
                if e.gap {
                    gaps += 1;
                    continue;
                }
                let v = decide(k, n, &e.choice, &cfg).map_err(|err| format!("({k}^{n}) {}: {err}", e.choice))?;
                let o = theorem1_oracle(k, n, &e.choice);
                ensure(o == Some(v.outcome), || {
                    format!(
                        "({k}^{n}) {}: engine {} vs closed form {o:?} ({})",
                        e.choice, v.outcome, v.detail
                    )
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cataloged irreps agree, {gaps} catalog gaps skipped"))
}

fn table_2_3() -> Check {
    let t = cli_json(&["table", "--k", "2", "--n", "3", "--format", "json"])?;
    let rows = t["rows"].as_array().unwrap();
    ensure(rows.len() == 10, || format!("{} rows", rows.len()))?;
    let negs: BTreeSet<&str> = rows
        .iter()
        .filter(|r| r["outcome"] == "negative-braiding")
        .map(|r| r["rep"].as_str().unwrap())
        .collect();
    let want: BTreeSet<String> = ["chi=k:3;mu=trivial", "chi=k:3;mu=sign"]
        .iter()
        .map(|s| rep_label(2, 3, s))
        .collect();
    ensure(
        negs.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>() == want,
        || format!("negatives {negs:?}"),
    )?;
    ensure(outcome_counts(&t).get("infinite-dim") == Some(&8), || {
        "expected 8 infinite".into()
    })?;

    let theta = row(&t, &rep_label(2, 3, "chi=k:3;mu=standard"))?;
    let adj = graph(&q_matrix(&theta["witness"]));
    ensure(adj.len() == 6 && is_cycle(&adj), || format!("theta_- diagram {adj:?}"))?;
    ensure(theta["witness"]["name"] == "A_5^(1)", || {
        format!("theta_- named {}", theta["witness"]["name"])
    })?;
    for spec in ["chi=k:1;mu=trivial*trivial", "chi=k:1;mu=trivial*sign"] {
        let r = row(&t, &rep_label(2, 3, spec))?;
        ensure(r["outcome"] == "infinite-dim", || format!("{spec} not infinite"))?;
        let adj = graph(&q_matrix(&r["witness"]));
        ensure(has_triangle(&adj), || format!("{spec}: no triangle"))?;
        ensure(r["witness"]["name"] == "A_2^(1)", || {
            format!("{spec} named {}", r["witness"]["name"])
        })?;
    }
    Ok("10 rows, 2 negative, 6-cycle and triangles found".into())
}

fn table_2_4() -> Check {
    let t = cli_json(&["table", "--k", "2", "--n", "4", "--format", "json"])?;
    let rows = t["rows"].as_array().unwrap();
    ensure(rows.len() == 20, || format!("{} rows", rows.len()))?;
    ensure(outcome_counts(&t).get("infinite-dim") == Some(&20), || {
        format!("{:?}", outcome_counts(&t))
    })?;
    // components {1,4,6} and {2,3,5}, counted from zero
    let want: BTreeSet<BTreeSet<usize>> = [[0, 3, 5], [1, 2, 4]]
        .iter()
        .map(|c| c.iter().copied().collect())
        .collect();
    for spec in ["chi=k:1;mu=trivial*standard", "chi=k:3;mu=standard*trivial"] {
        let r = row(&t, &rep_label(2, 4, spec))?;
        let adj = graph(&q_matrix(&r["witness"]));
        let comps: BTreeSet<BTreeSet<usize>> = components(&adj).into_iter().collect();
        ensure(adj.len() == 6 && comps == want, || {
            format!("{spec}: components {comps:?}")
        })?;
        ensure(adj.iter().all(|n| n.len() == 2), || {
            format!("{spec}: not two triangles")
        })?;
    }
    Ok("20 rows all infinite, two disjoint triangles for both degree-8 rows".into())
}

/// Is there a simultaneous index permutation taking `a` to `b`?
fn permutation_equivalent(a: &[Vec<String>], b: &[Vec<String>]) -> bool {
    fn extend(a: &[Vec<String>], b: &[Vec<String>], p: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = p.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || (0..i).any(|x| a[x][i] != b[p[x]][j] || a[i][x] != b[j][p[x]]) || a[i][i] != b[j][j] {
                continue;
            }
            used[j] = true;
            p.push(j);
            if extend(a, b, p, used) {
                return true;
            }
            p.pop();
            used[j] = false;
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

fn n_equals_5() -> Check {
    for spec in ["chi=k:5;mu=trivial", "chi=k:5;mu=sign"] {
        let r = cli_json(&["classify", "--k", "2", "--n", "5", "--rep", spec, "--format", "json"])?;
        ensure(r["outcome"] == "negative-braiding", || {
            format!("{spec}: {}", r["outcome"])
        })?;
    }
    let class = UnmixedClass::new(2, 5).unwrap();
    ensure(class.class_size() == 945, || "class size".into())?;
    let yd = YDModule::new(choice(2, 5, "chi=k:5;mu=trivial").build(&class).unwrap());
    let full = match negativity_check_full_class(&yd, 10_000).map_err(|e| e.to_string())? {
        NegativityResult::Negative(c) => c,
        other => return Err(format!("unreduced run: {other:?}")),
    };
    ensure(!full.reduced, || "unreduced run reported reduction".into())?;

    let (m, p) = ("-1".to_string(), "1".to_string());
    let expected: Vec<Vec<String>> = [
        [&m, &m, &p, &m, &p, &m],
        [&m, &m, &p, &m, &p, &m],
        [&p, &m, &m, &m, &p, &m],
        [&p, &m, &m, &m, &p, &m],
        [&p, &m, &p, &m, &m, &m],
        [&p, &m, &p, &m, &m, &m],
    ]
    .iter()
    .map(|r| r.iter().map(|s| s.to_string()).collect())
    .collect();
    for spec in ["chi=k:5;mu=standard", "chi=k:5;mu=standard_sign"] {
        let r = cli_json(&["classify", "--k", "2", "--n", "5", "--rep", spec, "--format", "json"])?;
        ensure(r["outcome"] == "infinite-dim", || format!("{spec}: {}", r["outcome"]))?;
        let q: Vec<Vec<String>> = q_matrix(&r["witness"])
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| match turn(x) {
                        (1, 0) => "1".to_string(),
                        (2, 1) => "-1".to_string(),
                        _ => x.clone(),
                    })
                    .collect()
            })
            .collect();
        ensure(permutation_equivalent(&q, &expected), || format!("{spec}: Q {q:?}"))?;
        ensure(r["witness"]["name"] == "A_5^(1)", || {
            format!("{spec}: {}", r["witness"]["name"])
        })?;
        ensure(is_cycle(&graph(&q_matrix(&r["witness"]))), || {
            format!("{spec}: diagram is not a 6-cycle")
        })?;
    }
    Ok(format!(
        "top characters negative ({} unreduced pairs), standard twists reproduce Q with A_5^(1)",
        full.pairs_checked
    ))
}

fn cycles() -> Check {
    for k in [4u32, 6] {
        let t = cli_json(&["table", "--k", &k.to_string(), "--n", "1", "--format", "json"])?;
        let rows = t["rows"].as_array().unwrap();
        ensure(rows.len() == k as usize, || format!("k={k}: {} rows", rows.len()))?;
        for a in 0..k {
            let r = row(&t, &rep_label(k, 1, &format!("chi=({a})")))?;
            let want = if 2 * a == k {
                "negative-braiding"
            } else {
                "infinite-dim"
            };
            ensure(r["outcome"] == want, || format!("k={k} a={a}: {}", r["outcome"]))?;
        }
    }
    Ok("omega = -1 alone is negative for k = 4, 6".into())
}

fn even_small_cases() -> Check {
    let t = cli_json(&["table", "--k", "4", "--n", "2", "--format", "json"])?;
    let (mut neg, mut inf) = (0, 0);
    for r in t["rows"].as_array().unwrap() {
        let rep = r["rep"].as_str().unwrap();
        if r["degree"] == 1 && (rep.starts_with("chi=(1,1);") || rep.starts_with("chi=(3,3);")) {
            ensure(r["outcome"] == "negative-braiding", || {
                format!("{rep}: {}", r["outcome"])
            })?;
            neg += 1;
        } else if r["degree"].as_u64().unwrap() > 1 {
            ensure(r["outcome"] == "infinite-dim", || format!("{rep}: {}", r["outcome"]))?;
            inf += 1;
        }
    }
    ensure(neg == 4, || format!("{neg} negative degree-one rows"))?;

    let t = cli_json(&["table", "--k", "6", "--n", "3", "--format", "json"])?;
    for mu in ["trivial", "sign"] {
        let r = row(&t, &rep_label(6, 3, &format!("chi=(3,3,3);mu={mu}")))?;
        ensure(r["outcome"] == "negative-braiding", || {
            format!("(3,3,3) {mu}: {}", r["outcome"])
        })?;
        for c in [1, 5] {
            let r = row(&t, &rep_label(6, 3, &format!("chi=({c},{c},{c});mu={mu}")))?;
            ensure(r["outcome"] == "infinite-dim" && r["rule"] == "cycle", || {
                format!("({c},{c},{c}) {mu}: {} by {}", r["outcome"], r["rule"])
            })?;
        }
    }
    Ok(format!(
        "(4^2): {neg} negative, {inf} higher-degree infinite; (6^3): cycle rule fires for c = 1, 5"
    ))
}

fn pair_properties() -> Check {
    let mut total = 0;
    for (k, n) in [(4u32, 2u32), (4, 3), (6, 2), (8, 2)] {
        let class = UnmixedClass::new(k, n).unwrap();
        let recs = commuting_pair_records(&class, None).map_err(|e| e.to_string())?;
        let bad = violations(&class, &recs);
        ensure(bad.is_empty(), || format!("({k}^{n}): {}", bad.join("; ")))?;
        // the exponent sum must not depend on which transporter is used
        if let Some(m) = exponent_sum_modulus(k, n) {
            for z in class.centralizer_generators() {
                let twisted = commuting_pair_records(&class, Some(&z)).map_err(|e| e.to_string())?;
                ensure(violations(&class, &twisted).is_empty(), || {
                    format!("({k}^{n}) twisted by {z}")
                })?;
                for (a, b) in recs.iter().zip(&twisted) {
                    ensure(a.block_types() == b.block_types(), || {
                        format!("({k}^{n}) {}: block types", a.t)
                    })?;
                    ensure(a.exponent_sum() % m == b.exponent_sum() % m, || {
                        format!("({k}^{n}) {}", a.t)
                    })?;
                }
            }
        }
        total += recs.len();
    }
    Ok(format!("{total} commuting pairs satisfy both properties"))
}

/// Connected Cartan matrices of finite type up to rank 8.
fn finite_lookup() -> Vec<(String, Vec<Vec<i64>>)> {
    fn chain(m: usize) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0; m]; m];
        for i in 0..m {
            a[i][i] = 2;
            if i + 1 < m {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    }
    let mut out = Vec::new();
    for m in 1..=8 {
        out.push((format!("A{m}"), chain(m)));
    }
    for m in 2..=8 {
        let mut b = chain(m);
        b[m - 2][m - 1] = -2;
        out.push((format!("B{m}"), b.clone()));
        if m >= 3 {
            let c: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| b[j][i]).collect()).collect();
            out.push((format!("C{m}"), c));
        }
    }
    for m in 4..=8 {
        let mut d = chain(m);
        d[m - 2][m - 1] = 0;
        d[m - 1][m - 2] = 0;
        d[m - 3][m - 1] = -1;
        d[m - 1][m - 3] = -1;
        out.push((format!("D{m}"), d));
    }
    for m in 6..=8 {
        let mut e = chain(m);
        e[m - 2][m - 1] = 0;
        e[m - 1][m - 2] = 0;
        e[2][m - 1] = -1;
        e[m - 1][2] = -1;
        out.push((format!("E{m}"), e));
    }
    let mut f = chain(4);
    f[1][2] = -2;
    out.push(("F4".into(), f));
    out.push(("G2".into(), vec![vec![2, -3], vec![-1, 2]]));
    out
}

fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn extend(a: &[Vec<i64>], b: &[Vec<i64>], p: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = p.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || (0..i).any(|x| a[x][i] != b[p[x]][j] || a[i][x] != b[j][p[x]]) {
                continue;
            }
            used[j] = true;
            p.push(j);
            if extend(a, b, p, used) {
                return true;
            }
            p.pop();
            used[j] = false;
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

fn lookup_finite(a: &[Vec<i64>], table: &[(String, Vec<Vec<i64>>)]) -> bool {
    let m = a.len();
    let adj: Vec<BTreeSet<usize>> = (0..m)
        .map(|i| (0..m).filter(|&j| j != i && a[i][j] != 0).collect())
        .collect();
    components(&adj).iter().all(|comp| {
        let idx: Vec<usize> = comp.iter().copied().collect();
        let sub: Vec<Vec<i64>> = idx.iter().map(|&i| idx.iter().map(|&j| a[i][j]).collect()).collect();
        table.iter().any(|(_, t)| isomorphic(&sub, t))
    })
}

/// Symmetrizable by construction: `a_ij = b_ij / d_i` with `b` symmetric.
fn random_cartan(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let m = rng.gen_range(1..=8);
    let d: Vec<i64> = (0..m).map(|_| *[1, 1, 1, 2, 3].choose(rng).unwrap()).collect();
    let forest = rng.gen_bool(0.6);
    let density = rng.gen_range(0.15..0.5);
    let mut a = vec![vec![0i64; m]; m];
    for i in 0..m {
        a[i][i] = 2;
    }
    for j in 1..m {
        let partners: Vec<usize> = if forest {
            if rng.gen_bool(0.85) {
                vec![rng.gen_range(0..j)]
            } else {
                vec![]
            }
        } else {
            (0..j).filter(|_| rng.gen_bool(density)).collect()
        };
        for i in partners {
            let mult = if rng.gen_bool(0.85) { 1 } else { 2 };
            let l = num_lcm(d[i], d[j]) * mult;
            a[i][j] = -l / d[i];
            a[j][i] = -l / d[j];
        }
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    order
        .iter()
        .map(|&i| order.iter().map(|&j| a[i][j]).collect())
        .collect()
}

fn num_lcm(x: i64, y: i64) -> i64 {
    let (mut a, mut b) = (x, y);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    x / a * y
}

fn finite_type_oracle() -> Result<String, String> {
    let table = finite_lookup();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut finite = 0;
    for s in 0..500 {
        let a = random_cartan(&mut rng);
        let orders = vec![0; a.len()];
        let engine = finite_type(&CartanData { a: a.clone(), orders }).finite;
        let oracle = lookup_finite(&a, &table);
        ensure(engine == oracle, || {
            format!("sample {s}: engine {engine}, lookup {oracle} on {a:?}")
        })?;
        finite += usize::from(oracle);
    }
    ensure((50..=450).contains(&finite), || {
        format!("unbalanced sample: {finite} finite")
    })?;
    Ok(format!("500 matrices ({finite} finite)"))
}

/// Maximal abelian subsets of the class by exhaustive subset search.
fn brute_inventory(k: u32, n: u32) -> BTreeMap<usize, u128> {
    let degree = (k * n) as usize;
    let class = conjugacy_class(&CycleType::uniform(k, n), degree).unwrap();
    let m = class.len();
    assert!(m <= 20, "subset search is exponential");
    let commute: Vec<u32> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| class[i].commutes_with(&class[j]))
                .fold(0u32, |acc, j| acc | 1 << j)
        })
        .collect();
    let abelian = |s: u32| (0..m).all(|i| s & (1 << i) == 0 || s & !commute[i] == 0);
    let mut maximal = Vec::new();
    for s in 1u32..(1 << m) {
        if abelian(s) && (0..m).all(|i| s & (1 << i) != 0 || !abelian(s | 1 << i)) {
            maximal.push(s);
        }
    }
    let mut group = Vec::new();
    permutations_of(degree, &mut group);
    let set_of = |s: u32| -> BTreeSet<Permutation> {
        (0..m)
            .filter(|&i| s & (1 << i) != 0)
            .map(|i| class[i].clone())
            .collect()
    };
    let mut orbits: BTreeMap<BTreeSet<Permutation>, usize> = BTreeMap::new();
    for s in maximal {
        let members = set_of(s);
        let canon = group
            .iter()
            .map(|g| members.iter().map(|t| g.conjugate(t)).collect::<BTreeSet<_>>())
            .min()
            .unwrap();
        *orbits.entry(canon).or_default() += 1;
    }
    let mut out: BTreeMap<usize, u128> = BTreeMap::new();
    for (canon, count) in orbits {
        assert!(
            out.insert(canon.len(), count as u128).is_none(),
            "two orbits of one size"
        );
    }
    out
}

fn inventory_oracle() -> Result<String, String> {
    for (k, n) in [(2u32, 2u32), (2, 3)] {
        let class = UnmixedClass::new(k, n).unwrap();
        let yd = YDModule::new(choice(k, n, &format!("chi=k:{n}")).build(&class).unwrap());
        let inv = unmixed_core::braidspace::maximal_abelian_subracks(&yd, true, 1000).map_err(|e| e.to_string())?;
        let engine: BTreeMap<usize, u128> = inv.entries.iter().map(|e| (e.size, e.count)).collect();
        ensure(engine.len() == inv.entries.len(), || "duplicate sizes".into())?;
        let brute = brute_inventory(k, n);
        ensure(engine == brute, || {
            format!("({k}^{n}): engine {engine:?}, brute force {brute:?}")
        })?;
    }
    Ok("inventories match for (2^2) and (2^3)".into())
}

fn random_element(class: &UnmixedClass, rng: &mut ChaCha8Rng) -> NormalForm {
    let (k, n) = (class.k(), class.n());
    let mut images: Vec<u32> = (1..=n).collect();
    images.shuffle(rng);
    NormalForm {
        d: (0..n).map(|_| rng.gen_range(0..k)).collect(),
        b: Permutation::from_images(images).unwrap(),
    }
}

fn homomorphism() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let mut reps = 0;
    for (k, n) in [(2u32, 3u32), (2, 4), (2, 5), (4, 1), (6, 1), (4, 2), (6, 3)] {
        let class = UnmixedClass::new(k, n).unwrap();
        for e in enumerate_irreps(k, n) {
            if e.gap {
                continue;
            }
            let rep = e.choice.build(&class).map_err(|err| err.to_string())?;
            for _ in 0..200 {
                let (x, y) = (random_element(&class, &mut rng), random_element(&class, &mut rng));
                // compose as honest permutations, not through normal forms
                let xy = class.assemble(&x).compose(&class.assemble(&y));
                let lhs = rep.evaluate_perm(&xy).map_err(|err| err.to_string())?;
                let rhs = &rep.evaluate(&x) * &rep.evaluate(&y);
                ensure(lhs == rhs, || format!("({k}^{n}) {}: not multiplicative", e.choice))?;
            }
            reps += 1;
        }
    }
    Ok(format!("{reps} representations, 200 pairs each"))
}

fn oracles() -> Check {
    let a = finite_type_oracle()?;
    let b = inventory_oracle()?;
    let c = homomorphism()?;
    Ok(format!("{a}; {b}; {c}"))
}

const COMMANDS: &[&[&str]] = &[
    &["table", "--k", "2", "--n", "3", "--format", "json"],
    &["table", "--k", "2", "--n", "4", "--format", "json"],
    &["table", "--k", "4", "--n", "1", "--format", "json"],
    &["table", "--k", "6", "--n", "1", "--format", "json"],
    &["table", "--k", "4", "--n", "2", "--format", "json"],
    &["table", "--k", "6", "--n", "3", "--format", "json"],
    &["table", "--k", "2", "--n", "3"],
    &[
        "classify",
        "--k",
        "2",
        "--n",
        "5",
        "--rep",
        "chi=k:5;mu=trivial",
        "--format",
        "json",
    ],
    &[
        "classify",
        "--k",
        "2",
        "--n",
        "5",
        "--rep",
        "chi=k:5;mu=standard",
        "--format",
        "json",
    ],
    &["classify", "--k", "2", "--n", "4", "--rep", "chi=k:1;mu=standard"],
    &["diagram", "--k", "2", "--n", "3", "--rep", "chi=k:3;mu=standard"],
    &["diagram", "--k", "2", "--n", "4", "--rep", "chi=k:1;mu=standard"],
    &["diagram", "--k", "2", "--n", "3", "--rep", "chi=k:3;mu=trivial"],
];

fn determinism() -> Check {
    for args in COMMANDS {
        let mut outputs = Vec::new();
        for threads in ["1", "1", "4", "4"] {
            let mut full = vec!["--threads", threads];
            full.extend_from_slice(args);
            outputs.push(cli(&full));
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || {
            format!("{args:?} differs between runs")
        })?;
    }
    // reports survive a round trip through the schema
    let (out, _) = cli(COMMANDS[8]);
    let report: Report = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(report.to_json() + "\n" == out, || {
        "classify JSON does not round-trip".into()
    })?;
    let v = decide(2, 4, &choice(2, 4, "chi=k:1;mu=standard"), &EngineConfig::default()).unwrap();
    let w = decide(2, 4, &choice(2, 4, "chi=k:1;mu=standard"), &EngineConfig::default()).unwrap();
    ensure(v.outcome == w.outcome && v.outcome == Outcome::InfiniteDim, || {
        "library runs differ".into()
    })?;
    Ok(format!(
        "{} commands byte-identical over 1 and 4 threads",
        COMMANDS.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("closed-form grid, k*n <= 10", grid),
        ("(2^3) table", table_2_3),
        ("(2^4) table", table_2_4),
        ("(2^5) top characters", n_equals_5),
        ("single cycles, k = 4, 6", cycles),
        ("even cycle lengths, (4^2) and (6^3)", even_small_cases),
        ("commuting-pair properties", pair_properties),
        ("independent oracles", oracles),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(msg) => println!("PASS {}: {name}: {msg} ({secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {}: {name}: {msg} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
