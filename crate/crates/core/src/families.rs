//! Named group families with closed-form theta values and certified
//! minimal partitions: dihedral and generalized quaternion groups,
//! symmetric and alternating groups, PSL(2,q) on the projective line,
//! Sz(q) on its ovoid, and cyclic Frobenius semidirect products.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::graph;
use crate::group::{GroupTable, PermSpec, SubgroupRef, DEFAULT_ORDER_CAP};
use crate::partition::{
    certify_minimal_via_centralizers, exact_theta, normalize_first_block,
    recheck_centralizer_certificate, verify_partition, AbelianPartition, Certificate, ThetaResult,
};

/// A named family member. Dihedral and quaternion parameters are total
/// group orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyId {
    Cyclic { n: u64 },
    Dihedral { order: u64 },
    GeneralizedQuaternion { order: u64 },
    Symmetric { n: u64 },
    Alternating { n: u64 },
    Psl2 { q: u64 },
    Suzuki { q: u64 },
    /// Z_m x| Z_k with the complement generator acting as a -> a^t.
    FrobeniusSemidirect { m: u64, k: u64, t: u64 },
}

impl FamilyId {
    /// Parses `name:param[:param...]`, e.g. `dihedral:20`, `psl2:7`,
    /// `frobenius:7:3:2`.
    pub fn parse(s: &str) -> Result<FamilyId> {
        let parts: Vec<&str> = s.split(':').collect();
        let nums: Result<Vec<u64>> = parts[1..]
            .iter()
            .map(|p| {
                p.parse::<u64>()
                    .map_err(|_| Error::InvalidParams(format!("bad family parameter {p:?}")))
            })
            .collect();
        let nums = nums?;
        let one = || -> Result<u64> {
            nums.first()
                .copied()
                .ok_or_else(|| Error::InvalidParams("family needs a parameter".into()))
        };
        match parts[0] {
            "cyclic" | "z" => Ok(FamilyId::Cyclic { n: one()? }),
            "dihedral" | "d" => Ok(FamilyId::Dihedral { order: one()? }),
            "quaternion" | "q" => Ok(FamilyId::GeneralizedQuaternion { order: one()? }),
            "symmetric" | "s" => Ok(FamilyId::Symmetric { n: one()? }),
            "alternating" | "a" => Ok(FamilyId::Alternating { n: one()? }),
            "psl2" | "l2" => Ok(FamilyId::Psl2 { q: one()? }),
            "suzuki" | "sz" => Ok(FamilyId::Suzuki { q: one()? }),
            "frobenius" | "f" => {
                if nums.len() != 3 {
                    return Err(Error::InvalidParams(
                        "frobenius needs kernel:complement:action".into(),
                    ));
                }
                Ok(FamilyId::FrobeniusSemidirect {
                    m: nums[0],
                    k: nums[1],
                    t: nums[2],
                })
            }
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut m = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

// ----------------------------------------------------------------------
// builders

/// Dihedral group of order 2m: indices 0..m are powers of the rotation b,
/// indices m..2m are the reflections a b^i.
pub fn dihedral(m: usize) -> GroupTable {
    assert!(m >= 1);
    let n = 2 * m;
    let mut mul = vec![0u32; n * n];
    for e1 in 0..2usize {
        for i1 in 0..m {
            for e2 in 0..2usize {
                for i2 in 0..m {
                    let (e, i) = match (e1, e2) {
                        (_, 0) => (e1, (i1 + i2) % m),
                        (0, 1) => (1, (m - i1 + i2) % m), // b^i a = a b^-i
                        _ => (0, (m + i2 - i1) % m),      // (a b^i)(a b^j) = b^{j-i}
                    };
                    mul[(e1 * m + i1) * n + (e2 * m + i2)] = (e * m + i) as u32;
                }
            }
        }
    }
    GroupTable::from_mul_table(mul, &format!("D{n}")).expect("dihedral presentation closes")
}

/// Generalized quaternion group of order 4n: b of order 2n, a^2 = b^n,
/// a^-1 b a = b^-1; indices 0..2n are b^i, 2n..4n are a b^i.
pub fn generalized_quaternion(order: usize) -> Result<GroupTable> {
    if order % 4 != 0 || order < 8 {
        return Err(Error::InvalidParams(
            "generalized quaternion needs order 4n >= 8".into(),
        ));
    }
    let n = order / 4;
    let m = 2 * n;
    let mut mul = vec![0u32; order * order];
    for e1 in 0..2usize {
        for i1 in 0..m {
            for e2 in 0..2usize {
                for i2 in 0..m {
                    let (e, i) = match (e1, e2) {
                        (_, 0) => (e1, (i1 + i2) % m),
                        (0, 1) => (1, (m - i1 + i2) % m),
                        _ => (0, (n + m + i2 - i1) % m), // a b^i a b^j = b^{n+j-i}
                    };
                    mul[(e1 * m + i1) * order + (e2 * m + i2)] = (e * m + i) as u32;
                }
            }
        }
    }
    GroupTable::from_mul_table(mul, &format!("Q{order}"))
}

fn symmetric(n: usize) -> Result<GroupTable> {
    if n <= 1 {
        return Ok(GroupTable::cyclic(1));
    }
    let mut cycle: Vec<u16> = (1..n as u16).collect();
    cycle.push(0);
    let mut swap: Vec<u16> = (0..n as u16).collect();
    swap.swap(0, 1);
    let g = GroupTable::from_generators(
        &PermSpec {
            degree: n,
            generators: vec![cycle, swap],
        },
        &format!("S{n}"),
    )?;
    Ok(g)
}

fn alternating(n: usize) -> Result<GroupTable> {
    if n <= 2 {
        return Ok(GroupTable::cyclic(1));
    }
    let three: Vec<u16> = {
        let mut p: Vec<u16> = (0..n as u16).collect();
        p[0] = 1;
        p[1] = 2;
        p[2] = 0;
        p
    };
    let mut gens = vec![three];
    if n > 3 {
        let cyc: Vec<u16> = if n % 2 == 1 {
            let mut c: Vec<u16> = (1..n as u16).collect();
            c.push(0);
            c
        } else {
            // cycle on 1..n, fixing 0
            let mut c: Vec<u16> = (0..n as u16).collect();
            for i in 1..n - 1 {
                c[i] = (i + 1) as u16;
            }
            c[n - 1] = 1;
            c
        };
        gens.push(cyc);
    }
    GroupTable::from_generators(
        &PermSpec {
            degree: n,
            generators: gens,
        },
        &format!("A{n}"),
    )
}

/// PSL(2,q) as permutations of the q+1 points of the projective line:
/// field element codes 0..q, then infinity at index q. Generated by the
/// translations z -> z + x^i over a basis and the flip z -> -1/z.
pub fn psl2(q: u64) -> Result<GroupTable> {
    let (p, m) = prime_power(q).ok_or_else(|| {
        Error::InvalidParams(format!("psl2 parameter {q} is not a prime power"))
    })?;
    let d = if q % 2 == 0 { 1 } else { 2 };
    let expected = q * (q * q - 1) / d;
    if expected > DEFAULT_ORDER_CAP as u64 {
        return Err(Error::OrderCapExceeded {
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let f = FieldSpec::new(p, m)?;
    let qd = q as usize;
    let inf = qd as u16;
    let mut gens: Vec<Vec<u16>> = Vec::new();
    for i in 0..m {
        let beta = FieldElem(p.pow(i) as u32);
        let mut perm: Vec<u16> = (0..=inf).collect();
        for z in 0..qd {
            perm[z] = f.add(FieldElem(z as u32), beta).0 as u16;
        }
        gens.push(perm);
    }
    let mut s: Vec<u16> = vec![0; qd + 1];
    s[qd] = 0;
    s[0] = inf;
    for z in 1..qd {
        s[z] = f.neg(f.inv(FieldElem(z as u32)).expect("nonzero")).0 as u16;
    }
    gens.push(s);
    let g = GroupTable::from_generators(
        &PermSpec {
            degree: qd + 1,
            generators: gens,
        },
        &format!("L2({q})"),
    )?;
    if g.size() as u64 != expected {
        return Err(Error::InvariantBroken(format!(
            "L2({q}) closure has order {}, expected {expected}",
            g.size()
        )));
    }
    Ok(g)
}

type Mat = [[FieldElem; 4]; 4];

fn mat_apply(f: &FieldSpec, m: &Mat, v: &[FieldElem; 4]) -> [FieldElem; 4] {
    let mut out = [f.zero(); 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i] = f.add(out[i], f.mul(m[i][j], v[j]));
        }
    }
    out
}

fn normalize_point(f: &FieldSpec, v: &[FieldElem; 4]) -> [FieldElem; 4] {
    let lead = v.iter().find(|c| c.0 != 0).expect("nonzero vector");
    let s = f.inv(*lead).expect("nonzero");
    let mut out = *v;
    for c in &mut out {
        *c = f.mul(*c, s);
    }
    out
}

/// Sz(q) as permutations of the q^2+1 ovoid points, from the standard
/// lower-unitriangular generators u(a,b) (group law
/// u(a,b)u(c,d) = u(a+c, b+d+a c^theta)) and the antidiagonal flip.
pub fn suzuki(q: u64) -> Result<GroupTable> {
    let valid = q >= 8 && q.is_power_of_two() && q.trailing_zeros() % 2 == 1;
    if !valid {
        return Err(Error::InvalidParams(format!(
            "suzuki parameter {q} must be 2^(2n+1) >= 8"
        )));
    }
    let order = q * q * (q - 1) * (q * q + 1);
    if order > DEFAULT_ORDER_CAP as u64 {
        return Err(Error::OrderCapExceeded {
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let m = q.trailing_zeros();
    let f = FieldSpec::new(2, m)?;
    let u_mat = |a: FieldElem, b: FieldElem| -> Result<Mat> {
        let th = |x| f.suzuki_twist(x);
        let mut mt = [[f.zero(); 4]; 4];
        for (i, row) in mt.iter_mut().enumerate() {
            row[i] = f.one();
        }
        mt[1][0] = a;
        mt[2][0] = f.add(f.mul(a, th(a)?), b); // a^{1+theta} + b
        mt[2][1] = th(a)?;
        // a^{2+theta} + a b + b^theta
        mt[3][0] = f.add(
            f.add(f.mul(f.mul(a, a), th(a)?), f.mul(a, b)),
            th(b)?,
        );
        mt[3][1] = b;
        mt[3][2] = a;
        Ok(mt)
    };
    let mut mats: Vec<Mat> = Vec::new();
    for i in 0..m {
        let beta = FieldElem(1 << i);
        mats.push(u_mat(beta, f.zero())?);
        mats.push(u_mat(f.zero(), beta)?);
    }
    let mut flip = [[f.zero(); 4]; 4];
    for i in 0..4 {
        flip[i][3 - i] = f.one();
    }
    mats.push(flip);

    // orbit of e1 = the ovoid
    let e1 = [f.one(), f.zero(), f.zero(), f.zero()];
    let mut points: Vec<[FieldElem; 4]> = vec![e1];
    let mut index: BTreeMap<[u32; 4], usize> = BTreeMap::new();
    let key = |v: &[FieldElem; 4]| [v[0].0, v[1].0, v[2].0, v[3].0];
    index.insert(key(&e1), 0);
    let mut head = 0;
    while head < points.len() {
        let v = points[head];
        head += 1;
        for mt in &mats {
            let w = normalize_point(&f, &mat_apply(&f, mt, &v));
            if !index.contains_key(&key(&w)) {
                index.insert(key(&w), points.len());
                points.push(w);
            }
        }
    }
    let degree = points.len();
    if degree as u64 != q * q + 1 {
        return Err(Error::InvariantBroken(format!(
            "Sz({q}) ovoid orbit has {degree} points, expected {}",
            q * q + 1
        )));
    }
    let gens: Vec<Vec<u16>> = mats
        .iter()
        .map(|mt| {
            points
                .iter()
                .map(|v| index[&key(&normalize_point(&f, &mat_apply(&f, mt, v)))] as u16)
                .collect()
        })
        .collect();
    let g = GroupTable::from_generators_capped(
        &PermSpec {
            degree,
            generators: gens,
        },
        &format!("Sz({q})"),
        DEFAULT_ORDER_CAP,
        crate::group::DEFAULT_DENSE_LIMIT,
    )?;
    if g.size() as u64 != order {
        return Err(Error::InvariantBroken(format!(
            "Sz({q}) closure has order {}, expected {order}",
            g.size()
        )));
    }
    Ok(g)
}

fn frobenius_semidirect(m: u64, k: u64, t: u64) -> Result<GroupTable> {
    if m < 2 || k < 2 {
        return Err(Error::InvalidParams("kernel and complement must be nontrivial".into()));
    }
    // the action a -> a^t must have order k and act without fixed points
    let mut pow = 1u64;
    for j in 1..=k {
        pow = pow * t % m;
        if j < k {
            if pow == 1 {
                return Err(Error::InvalidParams(format!(
                    "action order divides {j}, not {k}"
                )));
            }
            if gcd(pow + m - 1, m) != 1 {
                return Err(Error::InvalidParams(
                    "action has fixed points; not Frobenius".into(),
                ));
            }
        }
    }
    if pow != 1 {
        return Err(Error::InvalidParams(format!("{t}^{k} != 1 mod {m}")));
    }
    let (mu, ku) = (m as usize, k as usize);
    let size = mu
        .checked_mul(ku)
        .filter(|&s| s <= crate::group::DEFAULT_DENSE_LIMIT)
        .ok_or(Error::OrderCapExceeded {
            cap: crate::group::DEFAULT_DENSE_LIMIT,
        })?;
    // element a^i b^j has index i + m*j;
    // (a^i1 b^j1)(a^i2 b^j2) = a^{i1 + i2 t^j1} b^{j1+j2}
    let tpow: Vec<u64> = {
        let mut v = vec![1u64];
        for _ in 1..ku {
            v.push(v.last().unwrap() * t % m);
        }
        v
    };
    let mut mul = vec![0u32; size * size];
    for j1 in 0..ku {
        for i1 in 0..mu {
            for j2 in 0..ku {
                for i2 in 0..mu {
                    let i = (i1 as u64 + i2 as u64 * tpow[j1]) % m;
                    let j = (j1 + j2) % ku;
                    mul[(i1 + mu * j1) * size + (i2 + mu * j2)] =
                        (i as usize + mu * j) as u32;
                }
            }
        }
    }
    GroupTable::from_mul_table(mul, &format!("Z{m}:Z{k}(t={t})"))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn build_family(id: &FamilyId) -> Result<GroupTable> {
    match *id {
        FamilyId::Cyclic { n } => {
            if n < 1 || n as usize > DEFAULT_ORDER_CAP {
                return Err(Error::InvalidParams("cyclic order out of range".into()));
            }
            Ok(GroupTable::cyclic(n as usize))
        }
        FamilyId::Dihedral { order } => {
            if order < 2 || order % 2 != 0 {
                return Err(Error::InvalidParams("dihedral order must be even".into()));
            }
            Ok(dihedral(order as usize / 2))
        }
        FamilyId::GeneralizedQuaternion { order } => generalized_quaternion(order as usize),
        FamilyId::Symmetric { n } => {
            if factorial_capped(n).is_none() {
                return Err(Error::OrderCapExceeded {
                    cap: DEFAULT_ORDER_CAP,
                });
            }
            symmetric(n as usize)
        }
        FamilyId::Alternating { n } => {
            if factorial_capped(n).map(|f| f / 2).is_none() {
                return Err(Error::OrderCapExceeded {
                    cap: DEFAULT_ORDER_CAP,
                });
            }
            alternating(n as usize)
        }
        FamilyId::Psl2 { q } => psl2(q),
        FamilyId::Suzuki { q } => suzuki(q),
        FamilyId::FrobeniusSemidirect { m, k, t } => frobenius_semidirect(m, k, t),
    }
}

fn factorial_capped(n: u64) -> Option<u64> {
    let mut f = 1u64;
    for i in 2..=n {
        f = f.checked_mul(i)?;
        if f > DEFAULT_ORDER_CAP as u64 * 2 {
            return None;
        }
    }
    Some(f)
}

// ----------------------------------------------------------------------
// closed-form theta with certified partitions

pub fn family_theta(id: &FamilyId) -> Result<ThetaResult> {
    match *id {
        FamilyId::Cyclic { n } => {
            let partition = (n >= 2).then(|| AbelianPartition::new(vec![(0..n as u32).collect()]));
            build_family(id)?;
            Ok(ThetaResult {
                value: 1,
                partition,
                certificate: Certificate::FamilyFormula {
                    name: "abelian".into(),
                },
            })
        }
        FamilyId::Dihedral { order } => {
            let g = build_family(id)?;
            let m = order as usize / 2;
            if m <= 2 {
                return exact_theta(&g);
            }
            if m % 2 == 1 {
                return nap_by_witness(&g, m as u32);
            }
            let n = m / 2;
            let mut blocks: Vec<Vec<u32>> = vec![(0..m as u32).collect()];
            let mut anchors: Vec<u32> = vec![1];
            for j in 0..n {
                blocks.push(vec![(m + j) as u32, (m + n + j) as u32]);
                anchors.push((m + j) as u32);
            }
            certified(&g, blocks, anchors, n + 1)
        }
        FamilyId::GeneralizedQuaternion { order } => {
            let g = build_family(id)?;
            let n = order as usize / 4;
            let m = 2 * n;
            let mut blocks: Vec<Vec<u32>> = vec![(0..m as u32).collect()];
            let mut anchors: Vec<u32> = vec![1];
            for j in 0..n {
                blocks.push(vec![(m + j) as u32, (m + n + j) as u32]);
                anchors.push((m + j) as u32);
            }
            certified(&g, blocks, anchors, n + 1)
        }
        FamilyId::Symmetric { n } => match n {
            0..=2 => exact_theta(&build_family(id)?),
            3 => {
                let g = build_family(id)?;
                let w = self_centralizing_witness(&g)
                    .ok_or_else(|| Error::InvariantBroken("S3 witness missing".into()))?;
                nap_by_witness(&g, w)
            }
            4 => exact_theta(&build_family(id)?),
            _ => Err(Error::UnsupportedFamily(format!("symmetric:{n}"))),
        },
        FamilyId::Alternating { n } => match n {
            0..=3 => exact_theta(&build_family(id)?),
            4 => exact_theta(&build_family(id)?),
            5 => ac_partition(&build_family(id)?),
            _ => Err(Error::UnsupportedFamily(format!("alternating:{n}"))),
        },
        FamilyId::Psl2 { q } => match q {
            2 => {
                let g = build_family(id)?;
                let w = self_centralizing_witness(&g)
                    .ok_or_else(|| Error::InvariantBroken("L2(2) witness missing".into()))?;
                nap_by_witness(&g, w)
            }
            3 => exact_theta(&build_family(id)?),
            4 | 5 => ac_partition(&build_family(id)?),
            _ => psl2_theta(q),
        },
        FamilyId::Suzuki { q } => {
            if q == 8 {
                suzuki_theta(q)
            } else {
                let valid = q >= 8 && q.is_power_of_two() && q.trailing_zeros() % 2 == 1;
                if !valid {
                    return Err(Error::InvalidParams(format!(
                        "suzuki parameter {q} must be 2^(2n+1) >= 8"
                    )));
                }
                // formula only; the construction is out of reach at this order
                Ok(ThetaResult {
                    value: (q * q * q * q + q * q * q - q * q + q - 1) as usize,
                    partition: None,
                    certificate: Certificate::FamilyFormula {
                        name: format!("suzuki:{q}"),
                    },
                })
            }
        }
        FamilyId::FrobeniusSemidirect { .. } => frobenius_theta(&build_family(id)?),
    }
}

fn nap_by_witness(g: &GroupTable, w: u32) -> Result<ThetaResult> {
    let c = g.centralizer(w);
    if g.mul(w, w) != 0 || w == 0 || c.members != vec![0, w] {
        return Err(Error::InvariantBroken(format!(
            "element {w} is not a self-centralizing involution"
        )));
    }
    Ok(ThetaResult {
        value: 0,
        partition: None,
        certificate: Certificate::NapSelfCentralizing { witness: w },
    })
}

fn self_centralizing_witness(g: &GroupTable) -> Option<u32> {
    g.involutions()
        .into_iter()
        .find(|&x| g.centralizer(x).members == vec![0, x])
}

/// Sorts blocks canonically, keeps the anchors aligned, and re-checks the
/// literal centralizer-minimality pattern.
fn certified(
    g: &GroupTable,
    blocks: Vec<Vec<u32>>,
    anchors: Vec<u32>,
    value: usize,
) -> Result<ThetaResult> {
    let (p, anchors) = sort_with_anchors(blocks, anchors);
    if p.block_count() != value {
        return Err(Error::InvariantBroken(format!(
            "constructed {} blocks, formula says {value}",
            p.block_count()
        )));
    }
    certify_minimal_via_centralizers(g, &p, &anchors)?;
    Ok(ThetaResult {
        value,
        partition: Some(p),
        certificate: Certificate::CentralizerMinimal { anchors },
    })
}

fn sort_with_anchors(
    blocks: Vec<Vec<u32>>,
    anchors: Vec<u32>,
) -> (AbelianPartition, Vec<u32>) {
    let mut paired: Vec<(Vec<u32>, u32)> = blocks
        .into_iter()
        .zip(anchors)
        .map(|(mut b, a)| {
            b.sort_unstable();
            (b, a)
        })
        .collect();
    paired.sort();
    let (blocks, anchors): (Vec<Vec<u32>>, Vec<u32>) = paired.into_iter().unzip();
    (AbelianPartition { blocks }, anchors)
}

/// Distinct conjugates of the subgroup with the given members, as sorted
/// member vectors in deterministic order.
fn conjugate_subgroups(g: &GroupTable, members: &[u32]) -> Vec<Vec<u32>> {
    let gens: Vec<u32> = if g.generator_indices().is_empty() {
        (1..g.size() as u32).collect()
    } else {
        g.generator_indices().to_vec()
    };
    let mut start = members.to_vec();
    start.sort_unstable();
    let mut seen: BTreeSet<Vec<u32>> = [start.clone()].into();
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for &x in &gens {
            let mut t: Vec<u32> = s.iter().map(|&a| g.conj(a, x)).collect();
            t.sort_unstable();
            if seen.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    seen.into_iter().collect()
}

/// The partition of L2(q), q > 5, from the TI-subgroup conjugate
/// decomposition: one full Sylow p-subgroup, the remaining Sylow
/// conjugates minus 1, and all conjugates of the two maximal tori minus 1.
fn psl2_theta(q: u64) -> Result<ThetaResult> {
    let g = psl2(q)?;
    let (p, _) = prime_power(q).expect("validated by psl2");
    let d = if q % 2 == 0 { 1 } else { 2 };
    let a_ord = ((q - 1) / d) as u32;
    let b_ord = ((q + 1) / d) as u32;
    let sylows = centralizer_family(&g, p as u32, q as usize)?;
    let tori_a = centralizer_family(&g, a_ord, a_ord as usize)?;
    let tori_b = centralizer_family(&g, b_ord, b_ord as usize)?;
    let (qs, r) = (q as usize, (q + 1) as usize);
    if sylows.len() != r
        || tori_a.len() != qs * (qs + 1) / 2
        || tori_b.len() != qs * (qs - 1) / 2
    {
        return Err(Error::InvariantBroken(format!(
            "L2({q}) conjugate census {} / {} / {} off the closed form",
            sylows.len(),
            tori_a.len(),
            tori_b.len()
        )));
    }
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut anchors: Vec<u32> = Vec::new();
    for (i, s) in sylows.iter().enumerate() {
        anchors.push(s[1]);
        if i == 0 {
            blocks.push(s.clone());
        } else {
            blocks.push(s[1..].to_vec());
        }
    }
    for t in tori_a.iter().chain(&tori_b) {
        // anchor at a generator of the torus, whose centralizer is
        // exactly the torus
        let gen = t
            .iter()
            .copied()
            .find(|&x| g.centralizer(x).order() == t.len())
            .ok_or_else(|| Error::InvariantBroken("torus without generator".into()))?;
        anchors.push(gen);
        blocks.push(t[1..].to_vec());
    }
    certified(&g, blocks, anchors, (qs * qs + qs + 1) as usize)
}

/// Distinct centralizers of elements of the given order; each must have
/// exactly `size` elements.
fn centralizer_family(g: &GroupTable, elem_order: u32, size: usize) -> Result<Vec<Vec<u32>>> {
    let orders = g.orders();
    let seed = (0..g.size() as u32)
        .find(|&x| orders[x as usize] == elem_order)
        .ok_or_else(|| {
            Error::InvariantBroken(format!("no element of order {elem_order}"))
        })?;
    let c = g.centralizer(seed);
    if c.order() != size {
        return Err(Error::InvariantBroken(format!(
            "centralizer of an order-{elem_order} element has {} members, expected {size}",
            c.order()
        )));
    }
    Ok(conjugate_subgroups(g, &c.members))
}

/// The Sz(q) partition: each Sylow 2-subgroup splits along Z(P) and the
/// centralizer cosets of its order-4 elements, with the center of every
/// non-distinguished Sylow redistributed one element per coset block;
/// all conjugates of the three maximal tori contribute their nonidentity
/// elements as blocks.
fn suzuki_theta(q: u64) -> Result<ThetaResult> {
    let g = suzuki(q)?;
    let r = 1u64 << ((q.trailing_zeros() + 1) / 2); // 2^{n+1}
    let orders = g.orders();
    let t0 = (1..g.size() as u32)
        .find(|&x| orders[x as usize] == 2)
        .expect("even order");
    let p0 = g.centralizer(t0);
    if p0.order() as u64 != q * q {
        return Err(Error::InvariantBroken(format!(
            "involution centralizer has order {}, expected q^2",
            p0.order()
        )));
    }
    let sylows = conjugate_subgroups(&g, &p0.members);
    let tori: Vec<Vec<Vec<u32>>> = [q - 1, q - r + 1, q + r + 1]
        .iter()
        .map(|&o| centralizer_family(&g, o as u32, o as usize))
        .collect::<Result<_>>()?;
    let expected = [
        (q * q + 1) as usize,
        (q * q * (q * q + 1) / 2) as usize,
        (q * q * (q - 1) * (q + r + 1) / 4) as usize,
        (q * q * (q - 1) * (q - r + 1) / 4) as usize,
    ];
    let got = [sylows.len(), tori[0].len(), tori[1].len(), tori[2].len()];
    if got != expected {
        return Err(Error::InvariantBroken(format!(
            "Sz({q}) conjugate census {got:?} != {expected:?}"
        )));
    }
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut anchors: Vec<u32> = Vec::new();
    for (si, syl) in sylows.iter().enumerate() {
        // Z(P) = identity plus the involutions; everything else has
        // order 4 and its centralizer coset within P has q elements
        let (zp, rest): (Vec<u32>, Vec<u32>) = syl
            .iter()
            .copied()
            .partition(|&x| orders[x as usize] <= 2);
        if zp.len() as u64 != q {
            return Err(Error::InvariantBroken(format!(
                "|Z(P)| = {}, expected q", zp.len()
            )));
        }
        let mut cosets: Vec<Vec<u32>> = Vec::new();
        let mut assigned: BTreeSet<u32> = BTreeSet::new();
        for &x in &rest {
            if assigned.contains(&x) {
                continue;
            }
            let coset: Vec<u32> = rest
                .iter()
                .copied()
                .filter(|&y| g.commutes(x, y))
                .collect();
            if coset.len() as u64 != q {
                return Err(Error::InvariantBroken(format!(
                    "centralizer coset has {} elements, expected q",
                    coset.len()
                )));
            }
            assigned.extend(&coset);
            cosets.push(coset);
        }
        for (j, mut coset) in cosets.into_iter().enumerate() {
            anchors.push(coset[0]);
            if si == 0 {
                if j == 0 {
                    coset.extend(&zp);
                }
            } else {
                // glue one nontrivial central element onto each coset
                coset.push(zp[j + 1]);
            }
            blocks.push(coset);
        }
    }
    for t in tori.iter().flatten() {
        anchors.push(t[1]);
        blocks.push(t[1..].to_vec());
    }
    let value = (q * q * q * q + q * q * q - q * q + q - 1) as usize;
    let (part, anchors) = sort_with_anchors(blocks, anchors);
    if part.block_count() != value {
        return Err(Error::InvariantBroken(format!(
            "Sz({q}) constructed {} blocks, formula says {value}",
            part.block_count()
        )));
    }
    verify_partition(&g, &part)?;
    recheck_centralizer_certificate(&g, &part, &anchors)?;
    Ok(ThetaResult {
        value,
        partition: Some(part),
        certificate: Certificate::CentralizerMinimal { anchors },
    })
}

// ----------------------------------------------------------------------
// AC-groups

/// True iff every noncentral element has an abelian centralizer.
pub fn ac_group_check(g: &GroupTable) -> bool {
    let z = g.center();
    (0..g.size() as u32)
        .filter(|&x| !z.contains(x))
        .all(|x| g.is_commuting_set(&g.centralizer(x).members))
}

/// For an AC-group with all centralizers of size at least |Z| + 2:
/// theta_a = n(G), with blocks cut from the centralizers of a maximum
/// noncommuting set.
pub fn ac_partition(g: &GroupTable) -> Result<ThetaResult> {
    if g.is_abelian() {
        return exact_theta(g);
    }
    if !ac_group_check(g) {
        return Err(Error::NotACGroup);
    }
    let z = g.center();
    let min_c = (0..g.size() as u32)
        .filter(|&x| !z.contains(x))
        .map(|x| g.centralizer(x).order())
        .min()
        .expect("nonabelian group has noncentral elements");
    if min_c < z.order() + 2 {
        return Err(Error::CentralizerTooSmall(min_c));
    }
    let clique = graph::max_noncommuting_set(g)?;
    if !clique.exact {
        return Err(Error::SearchBudgetExceeded(
            "need the exact maximum noncommuting set".into(),
        ));
    }
    let xs = clique.witness;
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    for (i, &x) in xs.iter().enumerate() {
        let c = g.centralizer(x).members;
        if i == 0 {
            blocks.push(c);
        } else {
            blocks.push(
                c.into_iter()
                    .filter(|&y| !z.contains(y))
                    .collect(),
            );
        }
    }
    certified(g, blocks, xs, clique.size)
}

// ----------------------------------------------------------------------
// Frobenius groups

/// Finds a Frobenius complement H (H meets each conjugate off itself
/// trivially) and the kernel N = (G minus all conjugates of H) + 1.
pub fn frobenius_detect(g: &GroupTable) -> Result<(SubgroupRef, SubgroupRef)> {
    if g.size() > 512 {
        return Err(Error::SearchBudgetExceeded(format!(
            "frobenius detection caps at order 512, got {}",
            g.size()
        )));
    }
    let mut subs = g.all_subgroups();
    subs.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.members.cmp(&b.members)));
    for h in &subs {
        if h.order() < 2 || h.order() >= g.size() {
            continue;
        }
        let h_set: BTreeSet<u32> = h.members.iter().copied().collect();
        let ok = (0..g.size() as u32).all(|x| {
            if h.contains(x) {
                return true;
            }
            let conj: BTreeSet<u32> = h.members.iter().map(|&a| g.conj(a, x)).collect();
            conj.intersection(&h_set).eq([&0u32])
        });
        if !ok {
            continue;
        }
        let mut covered = vec![false; g.size()];
        for x in 0..g.size() as u32 {
            for &a in &h.members {
                if a != 0 {
                    covered[g.conj(a, x) as usize] = true;
                }
            }
        }
        let kernel: Vec<u32> = (0..g.size() as u32)
            .filter(|&x| !covered[x as usize])
            .collect();
        if kernel.len() * h.order() == g.size() && g.is_subgroup(&kernel) {
            let n = SubgroupRef { members: kernel };
            if g.is_normal(&n) {
                return Ok((n, h.clone()));
            }
        }
    }
    Err(Error::NotFrobenius)
}

/// theta_a(G) = |N| theta_a(H) + theta_a(N) for a Frobenius group with
/// |H| >= 3, with the partition glued from N's partition and a partition
/// of each of the |N| conjugates of H (identity removed).
pub fn frobenius_theta(g: &GroupTable) -> Result<ThetaResult> {
    let (n_ref, h_ref) = frobenius_detect(g)?;
    if h_ref.order() < 3 {
        return Err(Error::ComplementTooSmall);
    }
    let n_tab = g.induced_table(&n_ref, "frobenius-kernel")?;
    let h_tab = g.induced_table(&h_ref, "frobenius-complement")?;
    let tn = exact_theta(&n_tab)?;
    let th = exact_theta(&h_tab)?;
    let (tn_part, th_part) = match (&tn.partition, &th.partition) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => {
            return Err(Error::InvariantBroken(
                "frobenius kernel or complement is NAP".into(),
            ))
        }
    };
    let th_part = normalize_first_block(&h_tab, &th_part)?;
    let mut blocks: Vec<Vec<u32>> = tn_part
        .blocks
        .iter()
        .map(|b| b.iter().map(|&i| n_ref.members[i as usize]).collect())
        .collect();
    // one conjugate of H per kernel element; key each by its member set
    // and remember the least conjugator
    let mut conjugates: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    for x in 0..g.size() as u32 {
        let mut set: Vec<u32> = h_ref.members.iter().map(|&a| g.conj(a, x)).collect();
        set.sort_unstable();
        conjugates.entry(set).or_insert(x);
    }
    if conjugates.len() != n_ref.order() {
        return Err(Error::InvariantBroken(format!(
            "{} conjugates of H, expected |N| = {}",
            conjugates.len(),
            n_ref.order()
        )));
    }
    for (_, &x) in conjugates.iter() {
        for hb in &th_part.blocks {
            let mapped: Vec<u32> = hb
                .iter()
                .map(|&i| g.conj(h_ref.members[i as usize], x))
                .filter(|&y| y != 0)
                .collect();
            if mapped.len() < 2 {
                return Err(Error::InvariantBroken(
                    "complement block too small after removing identity".into(),
                ));
            }
            blocks.push(mapped);
        }
    }
    let value = n_ref.order() * th.value + tn.value;
    let p = AbelianPartition::new(blocks);
    if p.block_count() != value {
        return Err(Error::InvariantBroken(format!(
            "glued {} blocks, formula says {value}",
            p.block_count()
        )));
    }
    verify_partition(g, &p)?;
    Ok(ThetaResult {
        value,
        partition: Some(p),
        certificate: Certificate::FamilyFormula {
            name: "frobenius".into(),
        },
    })
}
