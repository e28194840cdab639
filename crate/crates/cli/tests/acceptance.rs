//! End-to-end acceptance run: fourteen headline checks, one line each,
//! with wall-clock limits. Run with `--nocapture` to see the table.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use apgroups::error::Error;
use apgroups::families::{
    ac_partition, build_family, dihedral, family_theta, frobenius_theta, generalized_quaternion,
    FamilyId,
};
use apgroups::graph::max_noncommuting_set;
use apgroups::nap::{
    gamma, nap_dihedral_product, nap_wreath_check, self_centralizing_involution, NapCertKind,
};
use apgroups::partition::{
    classify_small_theta, compute_bounds, exact_theta, verify_certificate, verify_partition,
    SmallTheta,
};
use apgroups::GroupTable;

type Check = fn() -> Result<String, String>;

fn fam(s: &str) -> FamilyId {
    FamilyId::parse(s).unwrap()
}

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn lib<T>(r: Result<T, Error>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

#[test]
fn acceptance() {
    let checks: &[(&str, u64, Check)] = &[
        ("theta(D8) = theta(Q8) = 3, three routes", 1, c01),
        ("dihedral/quaternion series n+1, n = 2..15", 10, c02),
        ("theta(A4) = 5, exact and Frobenius", 1, c03),
        ("theta(A5) = 21 via AC partition", 30, c04),
        ("theta(L2(q)) = q^2+q+1, q in {7,8,9,11,13}", 300, c05),
        ("theta(Sz(8)) = 4551 with Sylow census", 1200, c06),
        ("S3 NAP by both routes, exit code 1", 5, c07),
        ("odd dihedrals NAP, k in {3,5,7,9}", 5, c08),
        ("D6 x D6 NAP, counting and exhaustive", 120, c09),
        ("D10 wr Z3 NAP, 120 > 91 cross-checked", 60, c10),
        ("commuting-pair identity, 25+ groups", 10, c11),
        ("bound sandwich and block-size inequality", 60, c12),
        ("product inequality on 12 certified pairs", 60, c13),
        ("gamma 2/4/7 and the order-200 embedding", 1, c14),
    ];
    let mut failures = Vec::new();
    for (i, (title, limit, run)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let dt = start.elapsed();
        match outcome {
            Ok(detail) if dt <= Duration::from_secs(*limit) => {
                println!("criterion {:>2}: PASS {:>7.2?}  {title}: {detail}", i + 1, dt);
            }
            Ok(_) => {
                println!(
                    "criterion {:>2}: FAIL {:>7.2?}  {title}: over the {limit}s limit",
                    i + 1,
                    dt
                );
                failures.push(i + 1);
            }
            Err(msg) => {
                println!("criterion {:>2}: FAIL {:>7.2?}  {title}: {msg}", i + 1, dt);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}

fn c01() -> Result<String, String> {
    for name in ["dihedral:8", "quaternion:8"] {
        let id = fam(name);
        let g = lib(build_family(&id))?;
        ensure(lib(family_theta(&id))?.value == 3, "family route")?;
        ensure(lib(exact_theta(&g))?.value == 3, "exact route")?;
        let b = lib(compute_bounds(&g))?;
        ensure(b.best_lb == 3 && b.best_ub == Some(3), "bounds sandwich")?;
        ensure(
            lib(classify_small_theta(&g))? == SmallTheta::Three,
            "structural route",
        )?;
    }
    Ok("all three routes give 3".into())
}

fn c02() -> Result<String, String> {
    for n in 2..=15usize {
        for kind in ["dihedral", "quaternion"] {
            let id = fam(&format!("{kind}:{}", 4 * n));
            let g = lib(build_family(&id))?;
            let t = lib(family_theta(&id))?;
            ensure(t.value == n + 1, "formula value")?;
            lib(verify_certificate(&g, &t))?;
            ensure(lib(exact_theta(&g))?.value == n + 1, "exact agreement")?;
        }
    }
    Ok("28 groups at n+1, certificates re-checked".into())
}

fn c03() -> Result<String, String> {
    let g = lib(build_family(&fam("alternating:4")))?;
    ensure(lib(exact_theta(&g))?.value == 5, "exact route")?;
    let t = lib(frobenius_theta(&g))?;
    ensure(t.value == 5, "4 * 1 + 1")?;
    lib(verify_certificate(&g, &t))?;
    Ok("5 = 5".into())
}

fn c04() -> Result<String, String> {
    let g = lib(build_family(&fam("alternating:5")))?;
    let t = lib(ac_partition(&g))?;
    ensure(t.value == 21, "AC value")?;
    lib(verify_certificate(&g, &t))?;
    let c = lib(max_noncommuting_set(&g))?;
    ensure(c.exact && c.size == 21, "n(A5) = 21 exactly")?;
    Ok("21 = n(G)".into())
}

fn c05() -> Result<String, String> {
    for q in [7u64, 8, 9, 11, 13] {
        let id = fam(&format!("psl2:{q}"));
        let g = lib(build_family(&id))?;
        let t = lib(family_theta(&id))?;
        ensure(t.value == (q * q + q + 1) as usize, "value")?;
        let p = t.partition.as_ref().ok_or("partition missing")?;
        lib(verify_partition(&g, p))?;
        lib(verify_certificate(&g, &t))?;
        let d = if q % 2 == 0 { 1 } else { 2 };
        let (a, b) = (((q - 1) / d) as usize, ((q + 1) / d) as usize);
        let mut census: BTreeMap<usize, usize> = BTreeMap::new();
        for block in &p.blocks {
            *census.entry(block.len()).or_default() += 1;
        }
        let mut expected: BTreeMap<usize, usize> = BTreeMap::new();
        *expected.entry(q as usize).or_default() += 1;
        *expected.entry((q - 1) as usize).or_default() += q as usize;
        *expected.entry(a - 1).or_default() += (q * (q + 1) / 2) as usize;
        *expected.entry(b - 1).or_default() += (q * (q - 1) / 2) as usize;
        ensure(census == expected, "conjugate census")?;
    }
    Ok("five orders verified with census".into())
}

fn c06() -> Result<String, String> {
    let id = fam("suzuki:8");
    let g = lib(build_family(&id))?;
    let t = lib(family_theta(&id))?;
    ensure(t.value == 4551, "value 4551")?;
    let p = t.partition.as_ref().ok_or("partition missing")?;
    lib(verify_partition(&g, p))?;
    lib(verify_certificate(&g, &t))?;
    let orders = g.orders().to_vec();
    let mut per_sylow: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for block in &p.blocks {
        if !block.iter().all(|&x| orders[x as usize].is_power_of_two()) {
            continue;
        }
        let x = *block.iter().find(|&&x| orders[x as usize] > 1).unwrap();
        let j = if orders[x as usize] == 2 { x } else { g.mul(x, x) };
        *per_sylow.entry(g.centralizer(j).members).or_default() += 1;
    }
    ensure(per_sylow.len() == 65, "65 Sylow subgroups")?;
    ensure(per_sylow.values().all(|&c| c == 7), "7 blocks per Sylow")?;
    Ok("4551 verified; 65 x 7 Sylow blocks".into())
}

fn c07() -> Result<String, String> {
    let id = fam("symmetric:3");
    let g = lib(build_family(&id))?;
    let t = lib(family_theta(&id))?;
    ensure(t.value == 0, "witness route")?;
    lib(verify_certificate(&g, &t))?;
    ensure(lib(exact_theta(&g))?.value == 0, "exhaustive route")?;
    let status = Command::new(env!("CARGO_BIN_EXE_apg"))
        .args(["theta", "symmetric:3", "--mode", "exact"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(status.status.code() == Some(1), "CLI exit code 1")?;
    Ok("NAP twice, CLI exits 1".into())
}

fn c08() -> Result<String, String> {
    for k in [3usize, 5, 7, 9] {
        let g = dihedral(k);
        ensure(
            lib(self_centralizing_involution(&g))?.is_some(),
            "witness route",
        )?;
        ensure(lib(exact_theta(&g))?.value == 0, "exhaustive route")?;
    }
    Ok("orders 6, 10, 14, 18".into())
}

fn c09() -> Result<String, String> {
    let out = lib(nap_dihedral_product(&[3, 3]))?;
    let c = out.certificate().ok_or("16 < 18 must certify")?;
    ensure(c.cross_validated, "enumerated cross-check")?;
    let d6 = dihedral(3);
    let g = lib(GroupTable::direct_product(&d6, &d6))?;
    ensure(lib(exact_theta(&g))?.value == 0, "exhaustive refutation")?;
    Ok("16 - 18 < 0 and the search agrees".into())
}

fn c10() -> Result<String, String> {
    let out = lib(nap_wreath_check(5, 3))?;
    let c = out.certificate().ok_or("221 < 250 must certify")?;
    ensure(c.cross_validated, "order-3000 cross-check")?;
    match c.kind {
        NapCertKind::WreathCount { di_nc, dm_nc, .. } => {
            ensure(di_nc == 120 && dm_nc == 91, "counts 120 and 91")?;
        }
        _ => return fail("unexpected certificate kind"),
    }
    Ok("Di_nc = 120 > 91 = Dm_nc".into())
}

fn corpus() -> Result<Vec<(String, GroupTable)>, String> {
    let mut out: Vec<(String, GroupTable)> = Vec::new();
    for n in [2usize, 3, 4, 6, 8, 12] {
        out.push((format!("Z{n}"), GroupTable::cyclic(n)));
    }
    for m in [3usize, 4, 5, 6, 7, 8, 9, 10, 15, 30] {
        out.push((format!("D{}", 2 * m), dihedral(m)));
    }
    for o in [8usize, 16, 24] {
        out.push((format!("Q{o}"), lib(generalized_quaternion(o))?));
    }
    for name in ["alternating:4", "symmetric:4", "alternating:5", "frobenius:7:3:2", "psl2:7"] {
        out.push((name.to_string(), lib(build_family(&fam(name)))?));
    }
    let d6 = dihedral(3);
    out.push(("D6xD6".into(), lib(GroupTable::direct_product(&d6, &d6))?));
    out.push((
        "Z3xD8".into(),
        lib(GroupTable::direct_product(&GroupTable::cyclic(3), &dihedral(4)))?,
    ));
    out.push((
        "Z3xS3".into(),
        lib(GroupTable::direct_product(&GroupTable::cyclic(3), &dihedral(3)))?,
    ));
    out.push((
        "Q8xZ2".into(),
        lib(GroupTable::direct_product(
            &lib(generalized_quaternion(8))?,
            &GroupTable::cyclic(2),
        ))?,
    ));
    Ok(out)
}

fn c11() -> Result<String, String> {
    let groups = corpus()?;
    ensure(groups.len() >= 25, "corpus size")?;
    for (name, g) in &groups {
        let n = g.size() as u32;
        let pairs: usize = (0..n)
            .map(|a| (0..n).filter(|&b| g.commutes(a, b)).count())
            .sum();
        ensure(
            pairs == g.size() * g.class_count(),
            &format!("identity for {name}"),
        )?;
    }
    Ok(format!("{} groups", groups.len()))
}

fn c12() -> Result<String, String> {
    let mut checked = 0usize;
    for (name, g) in corpus()? {
        if g.is_abelian() {
            continue;
        }
        let t = match name.as_str() {
            "alternating:5" => lib(ac_partition(&g))?,
            "psl2:7" => lib(family_theta(&fam("psl2:7")))?,
            _ if g.size() <= 60 => lib(exact_theta(&g))?,
            _ => continue,
        };
        if t.value == 0 {
            continue;
        }
        let b = lib(compute_bounds(&g))?;
        ensure(b.best_lb <= t.value, &format!("lower bound for {name}"))?;
        ensure(b.lb_classcount <= t.value, &format!("class bound for {name}"))?;
        if let Some(ub) = b.best_ub {
            ensure(t.value <= ub, &format!("upper bound for {name}"))?;
        }
        if let Some(p) = &t.partition {
            let sq: usize = p.blocks.iter().map(|b| b.len() * b.len()).sum();
            ensure(
                sq <= g.size() * g.class_count(),
                &format!("block-size sum for {name}"),
            )?;
        }
        checked += 1;
    }
    ensure(checked >= 15, "enough certified groups")?;
    Ok(format!("{checked} AP groups sandwiched"))
}

fn c13() -> Result<String, String> {
    let pairs: &[(&str, &str)] = &[
        ("cyclic:2", "dihedral:8"),
        ("cyclic:3", "dihedral:8"),
        ("cyclic:4", "dihedral:8"),
        ("cyclic:5", "dihedral:8"),
        ("cyclic:2", "quaternion:8"),
        ("cyclic:3", "quaternion:8"),
        ("cyclic:2", "dihedral:12"),
        ("cyclic:2", "dihedral:16"),
        ("cyclic:2", "quaternion:16"),
        ("cyclic:2", "dihedral:20"),
        ("cyclic:2", "alternating:4"),
        ("cyclic:3", "alternating:4"),
    ];
    let mut strict = 0usize;
    for (hs, ks) in pairs {
        let h = lib(build_family(&fam(hs)))?;
        let k = lib(build_family(&fam(ks)))?;
        let th = lib(family_theta(&fam(hs)))?.value;
        let tk = match family_theta(&fam(ks)) {
            Ok(t) => t.value,
            Err(_) => lib(exact_theta(&k))?.value,
        };
        let g = lib(GroupTable::direct_product(&h, &k))?;
        let v = lib(exact_theta(&g))?.value;
        ensure(v >= 1 && v <= th * tk, &format!("{hs} x {ks}"))?;
        if v < th * tk {
            strict += 1;
        }
    }
    Ok(format!("{} pairs, {strict} strict", pairs.len()))
}

fn c14() -> Result<String, String> {
    ensure(gamma(1).gamma == 2, "gamma(1)")?;
    ensure(gamma(2).gamma == 4, "gamma(2)")?;
    ensure(gamma(3).gamma == 7, "gamma(3)")?;
    for n in 1..=4u64 {
        let g = gamma(n);
        ensure(g.gamma > n, "gamma exceeds n")?;
        ensure(g.gamma_odd >= g.gamma, "odd variant is no smaller")?;
    }
    let emb = lib(apgroups::nap::embed_in_nap(&GroupTable::cyclic(2)))?;
    let g = emb.group.ok_or("wreath not built")?;
    ensure(g.size() == 200, "order 200")?;
    let inj = emb.injection.ok_or("injection missing")?;
    ensure(
        inj.len() == 2 && inj[0] != inj[1] && g.mul(inj[1], inj[1]) == inj[0],
        "Z2 embeds",
    )?;
    ensure(emb.certificate.cross_validated, "embedding verified")?;
    Ok("gamma exact; D10 wr Z2 contains Z2".into())
}

/// CLI round-trip: a partition emitted by `theta` is re-accepted by
/// `verify` with exit 0.
#[test]
fn cli_partition_roundtrip() {
    let out = Command::new(env!("CARGO_BIN_EXE_apg"))
        .args(["theta", "dihedral:20", "--mode", "family"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], 6);
    let pf = serde_json::json!({
        "group": { "family": "dihedral", "params": [20] },
        "blocks": v["partition"]["blocks"],
    });
    let dir = std::env::temp_dir().join(format!("apg-roundtrip-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d20.json");
    std::fs::write(&path, pf.to_string()).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_apg"))
        .args(["verify", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let _ = std::fs::remove_dir_all(&dir);
}

/// Usage and budget exit codes.
#[test]
fn cli_exit_codes() {
    let bad = Command::new(env!("CARGO_BIN_EXE_apg"))
        .args(["theta", "nosuchfamily:4"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let tight = Command::new(env!("CARGO_BIN_EXE_apg"))
        .args(["theta", "alternating:5", "--mode", "exact", "--budget", "2"])
        .output()
        .unwrap();
    assert_eq!(tight.status.code(), Some(3));
    let nap = Command::new(env!("CARGO_BIN_EXE_apg"))
        .args(["nap", "dihedral:6"])
        .output()
        .unwrap();
    assert_eq!(nap.status.code(), Some(0));
    let ap = Command::new(env!("CARGO_BIN_EXE_apg"))
        .args(["nap", "dihedral:8"])
        .output()
        .unwrap();
    assert_eq!(ap.status.code(), Some(1));
}
