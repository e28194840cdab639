//! NAP certification: self-centralizing involutions, diagonal-involution
//! counting in products of dihedral groups, wreath-product counting,
//! the gamma function, and the two embedding theorems (every group embeds
//! in an AP-group and in a NAP-group).

use num_bigint::BigInt;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::families::dihedral;
use crate::group::{GroupTable, PermSpec, SubgroupRef};
use crate::partition::AbelianPartition;

/// A strict inequality instance; for counting certificates NAP follows
/// from lhs < rhs (fewer potential mates than elements that need one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NapCertKind {
    SelfCentralizingInvolution { witness: u32 },
    DihedralProductCount { k_list: Vec<u64>, di: u64, dm: u64 },
    WreathCount { k: u64, p: u64, di_nc: u64, dm_nc: u64 },
    /// The embedding certificate: fixed-point-free diagonal involutions
    /// of D_{2k*} wr H outnumber their potential mates.
    FixedPointFreeCount { k_star: u64, h: u64 },
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NapCertificate {
    pub kind: NapCertKind,
    pub inequality: Inequality,
    pub cross_validated: bool,
}

/// A counting check that does not certify: the inequality came out the
/// wrong way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NapOutcome {
    Certified(NapCertificate),
    NotApplicable { inequality: Inequality },
}

impl NapOutcome {
    pub fn certificate(&self) -> Option<&NapCertificate> {
        match self {
            NapOutcome::Certified(c) => Some(c),
            NapOutcome::NotApplicable { .. } => None,
        }
    }
}

/// Counting cross-validation on constructed groups is capped here;
/// beyond it certificates are arithmetic-only.
pub const CROSS_VALIDATE_CAP: usize = 5_000;

// ----------------------------------------------------------------------
// self-centralizing involutions

#[derive(Debug, Clone)]
pub struct ScInvolutionReport {
    pub certificate: NapCertificate,
    /// The abelian normal 2-complement the witness inverts.
    pub kernel: SubgroupRef,
}

/// Finds an involution x with C_G(x) = {1, x}. Such a group is Frobenius
/// with complement <x> over the (abelian) subgroup of odd-order elements;
/// the structure is checked, not assumed.
pub fn self_centralizing_involution(g: &GroupTable) -> Result<Option<ScInvolutionReport>> {
    let witness = match g
        .involutions()
        .into_iter()
        .find(|&x| g.centralizer(x).members == vec![0, x])
    {
        Some(w) => w,
        None => return Ok(None),
    };
    let kernel = g.odd_part_subgroup().ok_or_else(|| {
        Error::InvariantBroken("odd-order elements do not form a subgroup".into())
    })?;
    if kernel.order() * 2 != g.size() {
        return Err(Error::InvariantBroken(format!(
            "odd part has index {}, expected 2",
            g.size() / kernel.order()
        )));
    }
    if !g.is_commuting_set(&kernel.members) {
        return Err(Error::InvariantBroken("kernel is not abelian".into()));
    }
    if !g.is_normal(&kernel) {
        return Err(Error::InvariantBroken("kernel is not normal".into()));
    }
    Ok(Some(ScInvolutionReport {
        certificate: NapCertificate {
            kind: NapCertKind::SelfCentralizingInvolution { witness },
            inequality: Inequality {
                lhs: BigInt::from(g.centralizer(witness).order()),
                rhs: BigInt::from(2),
            },
            cross_validated: true,
        },
        kernel,
    }))
}

// ----------------------------------------------------------------------
// diagonal involutions

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSets {
    pub di: Vec<u32>,
    pub dm: Vec<u32>,
}

/// Decodes an element of a tagged direct product into coordinates
/// (most significant factor first).
pub fn product_coordinates(factors: &[usize], mut x: usize) -> Vec<usize> {
    let mut coords = vec![0usize; factors.len()];
    for (i, &f) in factors.iter().enumerate().rev() {
        coords[i] = x % f;
        x /= f;
    }
    coords
}

/// Di(G) = involutions with every coordinate an involution, Dm(G) = the
/// union of their centralizers minus Di(G).
pub fn diagonal_sets(g: &GroupTable) -> Result<DiagonalSets> {
    let factors = g.factors.clone().unwrap_or_else(|| vec![g.size()]);
    if factors.iter().any(|f| f % 2 != 0) {
        return Err(Error::FactorOddOrder);
    }
    let di: Vec<u32> = (1..g.size() as u32)
        .filter(|&x| {
            g.mul(x, x) == 0
                && product_coordinates(&factors, x as usize)
                    .iter()
                    .all(|&c| c != 0)
        })
        .collect();
    let di_set: BTreeSet<u32> = di.iter().copied().collect();
    let mut in_dm = vec![false; g.size()];
    for &x in &di {
        for y in 0..g.size() as u32 {
            if g.commutes(x, y) && !di_set.contains(&y) {
                in_dm[y as usize] = true;
            }
        }
    }
    let dm: Vec<u32> = (0..g.size() as u32)
        .filter(|&y| in_dm[y as usize])
        .collect();
    Ok(DiagonalSets { di, dm })
}

// ----------------------------------------------------------------------
// counting certificates

/// D_{2k_1} x ... x D_{2k_t} with all k_i odd >= 3 is NAP when
/// (k_1+1)...(k_t+1) < 2 k_1...k_t: too few mates for the diagonal
/// involutions.
pub fn nap_dihedral_product(k_list: &[u64]) -> Result<NapOutcome> {
    if k_list.is_empty() || k_list.iter().any(|&k| k < 3 || k % 2 == 0) {
        return Err(Error::InvalidParams(
            "dihedral product counting needs odd k >= 3".into(),
        ));
    }
    let lhs: BigInt = k_list.iter().map(|&k| BigInt::from(k + 1)).product();
    let prod_k: BigInt = k_list.iter().map(|&k| BigInt::from(k)).product();
    let rhs = BigInt::from(2) * &prod_k;
    if lhs >= rhs {
        return Ok(NapOutcome::NotApplicable {
            inequality: Inequality { lhs, rhs },
        });
    }
    let order: u64 = k_list.iter().map(|&k| 2 * k).product();
    let mut cross_validated = false;
    let mut di_count = u64::MAX;
    let mut dm_count = u64::MAX;
    if order as usize <= CROSS_VALIDATE_CAP {
        let mut g = dihedral(k_list[0] as usize);
        for &k in &k_list[1..] {
            g = GroupTable::direct_product(&g, &dihedral(k as usize))?;
        }
        let sets = diagonal_sets(&g)?;
        di_count = sets.di.len() as u64;
        dm_count = sets.dm.len() as u64;
        let expect_di: u64 = k_list.iter().product();
        let expect_dm: u64 = k_list.iter().map(|&k| k + 1).product::<u64>() - expect_di;
        if di_count != expect_di || dm_count != expect_dm {
            return Err(Error::InvariantBroken(format!(
                "diagonal counts ({di_count}, {dm_count}) off the closed form \
                 ({expect_di}, {expect_dm})"
            )));
        }
        cross_validated = true;
    }
    if !cross_validated {
        di_count = k_list.iter().product();
        dm_count = k_list.iter().map(|&k| k + 1).product::<u64>() - di_count;
    }
    Ok(NapOutcome::Certified(NapCertificate {
        kind: NapCertKind::DihedralProductCount {
            k_list: k_list.to_vec(),
            di: di_count,
            dm: dm_count,
        },
        inequality: Inequality { lhs, rhs },
        cross_validated,
    }))
}

/// D_{2k} wr Z_p with k odd >= 3 and p an odd prime is NAP when
/// (k+1)^p + k < 2 k^p; the nonconstant diagonal involutions
/// (k^p - k of them) outnumber their potential mates ((k+1)^p - k^p).
pub fn nap_wreath_check(k: u64, p: u64) -> Result<NapOutcome> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::InvalidParams("wreath counting needs odd k >= 3".into()));
    }
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::InvalidParams("wreath counting needs an odd prime p".into()));
    }
    let kp = BigInt::from(k).pow(p as u32);
    let k1p = BigInt::from(k + 1).pow(p as u32);
    let lhs = &k1p + BigInt::from(k);
    let rhs = BigInt::from(2) * &kp;
    if lhs >= rhs {
        return Ok(NapOutcome::NotApplicable {
            inequality: Inequality { lhs, rhs },
        });
    }
    let di_nc_formula = &kp - BigInt::from(k);
    let dm_nc_formula = &k1p - &kp;
    let di_nc: u64 = di_nc_formula.try_into().expect("small count");
    let dm_nc: u64 = dm_nc_formula.try_into().expect("small count");
    let order = (2 * k).checked_pow(p as u32).map(|b| b * p);
    let mut cross_validated = false;
    if let Some(order) = order {
        if order as usize <= CROSS_VALIDATE_CAP {
            let (got_di, got_dm) = wreath_diagonal_counts(k, p)?;
            if got_di != di_nc || got_dm != dm_nc {
                return Err(Error::InvariantBroken(format!(
                    "wreath diagonal counts ({got_di}, {got_dm}) off the formulas \
                     ({di_nc}, {dm_nc})"
                )));
            }
            cross_validated = true;
        }
    }
    Ok(NapOutcome::Certified(NapCertificate {
        kind: NapCertKind::WreathCount { k, p, di_nc, dm_nc },
        inequality: Inequality { lhs, rhs },
        cross_validated,
    }))
}

/// Enumerates, on the constructed wreath product, the nonconstant
/// diagonal involutions of the base and their potential mates (base
/// tuples of involutions-or-identity with at least one identity slot).
fn wreath_diagonal_counts(k: u64, p: u64) -> Result<(u64, u64)> {
    let d = dihedral(k as usize);
    let top: Vec<u16> = {
        let mut c: Vec<u16> = (1..p as u16).collect();
        c.push(0);
        c
    };
    let g = GroupTable::wreath_product(
        &d,
        &PermSpec {
            degree: p as usize,
            generators: vec![top],
        },
    )?;
    let dsize = d.size();
    let invol: Vec<bool> = (0..dsize as u32).map(|c| c != 0 && d.mul(c, c) == 0).collect();
    let top_size = g.size() / dsize.pow(p as u32);
    let mut di_nc = 0u64;
    let mut dm_nc = 0u64;
    let radix = vec![dsize; p as usize];
    for b in 0..dsize.pow(p as u32) {
        let x = (b * top_size) as u32;
        let coords = product_coordinates(&radix, b);
        let all_inv = coords.iter().all(|&c| invol[c]);
        if all_inv {
            debug_assert_eq!(g.mul(x, x), 0);
            if coords.iter().any(|&c| c != coords[0]) {
                di_nc += 1;
            }
        } else if coords.iter().all(|&c| c == 0 || invol[c])
            && coords.iter().any(|&c| c == 0)
        {
            dm_nc += 1;
        }
    }
    Ok((di_nc, dm_nc))
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

// ----------------------------------------------------------------------
// gamma and the embeddings

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaResult {
    /// Smallest k > n with k!/n! > (1+k)^n - k^n.
    pub gamma: u64,
    /// Smallest odd such k; the dihedral counting needs k odd.
    pub gamma_odd: u64,
}

fn gamma_holds(n: u64, k: u64) -> bool {
    let lhs: BigInt = (n + 1..=k).map(BigInt::from).product();
    let rhs = BigInt::from(k + 1).pow(n as u32) - BigInt::from(k).pow(n as u32);
    lhs > rhs
}

pub fn gamma(n: u64) -> GammaResult {
    assert!(n >= 1);
    let g = (n + 1..).find(|&k| gamma_holds(n, k)).expect("gamma exists");
    let g_odd = (n + 1..)
        .filter(|k| k % 2 == 1)
        .find(|&k| gamma_holds(n, k))
        .expect("odd gamma exists");
    GammaResult {
        gamma: g,
        gamma_odd: g_odd,
    }
}

#[derive(Debug)]
pub struct NapEmbedding {
    /// The constructed wreath product, when it fits the table caps.
    pub group: Option<GroupTable>,
    pub k_star: u64,
    pub certificate: NapCertificate,
    /// Image of each element of H under the verified injection into the
    /// top copy.
    pub injection: Option<Vec<u32>>,
}

/// Embeds H into the NAP-group D_{2k*} wr H (H acting regularly), with
/// k* the smallest odd integer past |H| satisfying the gamma inequality.
pub fn embed_in_nap(h: &GroupTable) -> Result<NapEmbedding> {
    let n = h.size() as u64;
    let k_star = gamma(n.max(1)).gamma_odd;
    let certificate = NapCertificate {
        kind: NapCertKind::FixedPointFreeCount { k_star, h: n },
        inequality: Inequality {
            lhs: BigInt::from(k_star + 1).pow(n as u32) - BigInt::from(k_star).pow(n as u32),
            rhs: (n + 1..=k_star).map(BigInt::from).product(),
        },
        cross_validated: false,
    };
    // regular representation of H as the top group
    let degree = h.size();
    let perm_of = |a: u32| -> Vec<u16> {
        (0..degree as u32).map(|i| h.mul(i, a) as u16).collect()
    };
    let gens: Vec<Vec<u16>> = (1..degree as u32).map(perm_of).collect();
    let spec = PermSpec {
        degree,
        generators: if degree == 1 { vec![] } else { gens },
    };
    let d = dihedral(k_star as usize);
    let g = match GroupTable::wreath_product(&d, &spec) {
        Ok(g) => g,
        Err(Error::OrderCapExceeded { .. }) => {
            return Ok(NapEmbedding {
                group: None,
                k_star,
                certificate,
                injection: None,
            })
        }
        Err(e) => return Err(e),
    };
    // the top copy sits at indices 0..|H| in wreath encoding; recover the
    // BFS numbering of the top group to map original indices
    let top = GroupTable::from_generators(&spec, "top")?;
    let top_perm = top.perm_rep().expect("top group keeps its permutations");
    let injection: Vec<u32> = (0..degree as u32)
        .map(|a| {
            let p = perm_of(a).into_boxed_slice();
            top_perm
                .elems
                .iter()
                .position(|e| *e == p)
                .expect("regular image") as u32
        })
        .collect();
    for a in 0..degree as u32 {
        for b in 0..degree as u32 {
            if g.mul(injection[a as usize], injection[b as usize])
                != injection[h.mul(a, b) as usize]
            {
                return Err(Error::InvariantBroken(
                    "top-copy injection is not a homomorphism".into(),
                ));
            }
        }
    }
    let mut cert = certificate;
    cert.cross_validated = true;
    Ok(NapEmbedding {
        group: Some(g),
        k_star,
        certificate: cert,
        injection: Some(injection),
    })
}

/// Embeds H into the AP-group H x Z_2, partitioned by the cosets of the
/// Z_2 factor.
pub fn embed_in_ap(h: &GroupTable) -> Result<(GroupTable, AbelianPartition)> {
    let g = GroupTable::direct_product(h, &GroupTable::cyclic(2))?;
    let blocks: Vec<Vec<u32>> = (0..h.size() as u32)
        .map(|i| vec![2 * i, 2 * i + 1])
        .collect();
    let p = AbelianPartition::new(blocks);
    crate::partition::verify_partition(&g, &p)?;
    Ok((g, p))
}
