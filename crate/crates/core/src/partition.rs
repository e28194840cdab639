//! Abelian partitions: verification, normalization, bounds, exact search,
//! and machine-checkable minimality certificates.
//!
//! An abelian partition splits the whole group into disjoint commuting
//! sets of size at least 2. The exact solver is a branch-and-bound over
//! partial covers: each new block is anchored at the most constrained
//! uncovered element, and subtrees are cut by a pigeonhole argument on a
//! noncommuting set of the uncovered part (each of its members needs a
//! private partner) plus the usual incumbent bound.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph;
use crate::group::{GroupTable, SubgroupRef};

/// Disjoint commuting blocks covering the group; block 0 holds the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianPartition {
    pub blocks: Vec<Vec<u32>>,
}

impl AbelianPartition {
    pub fn new(mut blocks: Vec<Vec<u32>>) -> AbelianPartition {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        // block containing the identity (least element 0) sorts first
        AbelianPartition { blocks }
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn min_block_size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).min().unwrap_or(0)
    }
}

/// How a theta value is known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    /// exhaustive branch-and-bound completed
    Exhaustive,
    /// Lemma-style anchors: pairwise noncommuting, one per block
    CentralizerMinimal { anchors: Vec<u32> },
    /// closed-form family value
    FamilyFormula { name: String },
    /// lower and upper bounds met
    SandwichedBounds,
    /// exhaustive search proved no abelian partition exists
    NapExhaustive,
    /// a counting certificate from the NAP module
    NapCounting { summary: String },
    /// a self-centralizing involution
    NapSelfCentralizing { witness: u32 },
}

/// A theta value with its certificate; value 0 means NAP.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaResult {
    pub value: usize,
    pub partition: Option<AbelianPartition>,
    pub certificate: Certificate,
}

/// Lower and upper bounds, each labeled with the argument that gives it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    /// n(G), or a lower bound when the clique search was cut
    pub lb_noncommuting: usize,
    pub lb_noncommuting_exact: bool,
    /// ceil(|G| / c(G))
    pub lb_classcount: usize,
    /// 3 for nonabelian groups, 1 for abelian
    pub lb_floor: usize,
    /// [G:Z] - [A:Z] + 1 when the abelian-subgroup search finished
    pub ub_thm_c: Option<usize>,
    /// [G:Z(G)] when the center is nontrivial
    pub ub_center_cosets: Option<usize>,
    /// upper bounds come with explicit partitions only when |Z| >= 2;
    /// otherwise they presuppose the group is an AP-group
    pub ub_unconditional: bool,
    pub best_lb: usize,
    pub best_ub: Option<usize>,
}

pub const DEFAULT_EXACT_NODE_BUDGET: u64 = 20_000_000;

// ----------------------------------------------------------------------
// verification

/// Checks the abelian-partition conditions and reports the first violated
/// one with a witness.
pub fn verify_partition(g: &GroupTable, p: &AbelianPartition) -> Result<()> {
    let mut seen = vec![false; g.size()];
    let mut covered = 0usize;
    for (bi, block) in p.blocks.iter().enumerate() {
        if block.len() < 2 {
            return Err(Error::InvariantBroken(format!(
                "block {bi} has size {} < 2",
                block.len()
            )));
        }
        for &x in block {
            if x as usize >= g.size() {
                return Err(Error::MalformedClaim(format!("element {x} out of range")));
            }
            if seen[x as usize] {
                return Err(Error::MalformedClaim(format!(
                    "element {x} appears in two blocks"
                )));
            }
            seen[x as usize] = true;
            covered += 1;
        }
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[..i] {
                if !g.commutes(a, b) {
                    return Err(Error::NotCommuting(format!(
                        "block {bi} contains noncommuting pair ({a}, {b})"
                    )));
                }
            }
        }
    }
    if covered != g.size() {
        return Err(Error::MalformedClaim(format!(
            "partition covers {covered} of {} elements",
            g.size()
        )));
    }
    if !p.blocks.first().is_some_and(|b| b.contains(&0)) {
        return Err(Error::InvariantBroken("identity is not in block 0".into()));
    }
    Ok(())
}

pub fn is_valid_partition(g: &GroupTable, p: &AbelianPartition) -> bool {
    verify_partition(g, p).is_ok()
}

// ----------------------------------------------------------------------
// constructive partitions

/// The cosets of a nontrivial center, identity coset first.
pub fn center_coset_partition(g: &GroupTable) -> Result<AbelianPartition> {
    let z = g.center();
    if z.order() < 2 {
        return Err(Error::CenterTrivial);
    }
    Ok(AbelianPartition::new(cosets_of(g, &z.members)))
}

fn cosets_of(g: &GroupTable, sub: &[u32]) -> Vec<Vec<u32>> {
    let mut assigned = vec![false; g.size()];
    let mut out = Vec::new();
    for x in 0..g.size() as u32 {
        if assigned[x as usize] {
            continue;
        }
        let mut coset: Vec<u32> = sub.iter().map(|&z| g.mul(z, x)).collect();
        coset.sort_unstable();
        for &y in &coset {
            assigned[y as usize] = true;
        }
        out.push(coset);
    }
    out
}

/// Inverse pairs {x, x^-1} for odd-order groups, with the identity added
/// to the first pair.
pub fn odd_order_partition(g: &GroupTable) -> Result<AbelianPartition> {
    if g.size() % 2 == 0 {
        return Err(Error::EvenOrder);
    }
    if g.size() < 3 {
        return Err(Error::InvalidParams("need |G| >= 3".into()));
    }
    let mut used = vec![false; g.size()];
    used[0] = true;
    let mut blocks = Vec::new();
    for x in 1..g.size() as u32 {
        if used[x as usize] {
            continue;
        }
        let y = g.inv(x);
        debug_assert_ne!(x, y, "no involutions in an odd-order group");
        used[x as usize] = true;
        used[y as usize] = true;
        let mut block = vec![x, y];
        if blocks.is_empty() {
            block.push(0);
        }
        blocks.push(block);
    }
    Ok(AbelianPartition::new(blocks))
}

/// The Theorem-C construction: a maximal-order abelian subgroup as the
/// first block, the remaining center cosets as the others. Needs |Z| >= 2.
pub fn theorem_c_partition(g: &GroupTable) -> Result<AbelianPartition> {
    let z = g.center();
    if z.order() < 2 {
        return Err(Error::CenterTrivial);
    }
    let a = g.max_abelian_subgroup()?;
    let mut blocks = vec![a.members.clone()];
    let in_a: BTreeSet<u32> = a.members.iter().copied().collect();
    for coset in cosets_of(g, &z.members) {
        if !in_a.contains(&coset[0]) {
            blocks.push(coset);
        }
    }
    Ok(AbelianPartition::new(blocks))
}

// ----------------------------------------------------------------------
// bounds

pub fn compute_bounds(g: &GroupTable) -> Result<BoundsReport> {
    if g.is_abelian() {
        return Err(Error::InvalidParams(
            "abelian group: theta_a = 1, no bounds needed".into(),
        ));
    }
    let clique = match graph::max_noncommuting_set(g) {
        Ok(r) => r,
        Err(_) => graph::CliqueResult {
            size: 3,
            witness: vec![],
            exact: false,
            nodes: 0,
        },
    };
    let classes = g.class_count();
    let lb_classcount = g.size().div_ceil(classes);
    let z = g.center().order();
    let ub_center_cosets = (z >= 2).then(|| g.size() / z);
    let ub_thm_c = match g.max_abelian_subgroup() {
        Ok(a) => Some(g.size() / z - a.order() / z + 1),
        Err(_) => None,
    };
    let best_lb = clique.size.max(lb_classcount).max(3);
    let best_ub = match (ub_thm_c, ub_center_cosets) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(BoundsReport {
        lb_noncommuting: clique.size,
        lb_noncommuting_exact: clique.exact,
        lb_classcount,
        lb_floor: 3,
        ub_thm_c,
        ub_center_cosets,
        ub_unconditional: z >= 2,
        best_lb,
        best_ub,
    })
}

// ----------------------------------------------------------------------
// exact search

struct ExactSearch<'g> {
    g: &'g GroupTable,
    covered: Vec<bool>,
    blocks: Vec<Vec<u32>>,
    best: Option<Vec<Vec<u32>>>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'g> ExactSearch<'g> {
    fn uncovered(&self) -> Vec<u32> {
        (0..self.g.size() as u32)
            .filter(|&x| !self.covered[x as usize])
            .collect()
    }

    /// Greedy noncommuting set among the uncovered elements, most
    /// constrained first, together with a pigeonhole feasibility verdict:
    /// every member needs a partner outside the set, and partners cannot
    /// be shared across blocks.
    fn uncovered_lower_bound(&self, unc: &[u32], cand_sizes: &[usize]) -> (usize, bool) {
        let mut order: Vec<usize> = (0..unc.len()).collect();
        order.sort_by_key(|&i| (cand_sizes[i], unc[i]));
        let mut chosen: Vec<u32> = Vec::new();
        let mut partners: BTreeSet<u32> = BTreeSet::new();
        let mut feasible = true;
        for &i in &order {
            let x = unc[i];
            if chosen.iter().any(|&s| self.g.commutes(s, x)) {
                continue;
            }
            chosen.push(x);
            for &y in unc {
                if y != x && self.g.commutes(x, y) {
                    partners.insert(y);
                }
            }
            let outside = partners.iter().filter(|p| !chosen.contains(p)).count();
            if outside < chosen.len() {
                feasible = false;
                break;
            }
        }
        (chosen.len(), feasible)
    }

    fn record_candidate(&mut self, extra: Option<Vec<u32>>) {
        let total = self.blocks.len() + extra.is_some() as usize;
        if self
            .best
            .as_ref()
            .is_none_or(|b| total < b.len())
        {
            let mut sol = self.blocks.clone();
            if let Some(e) = extra {
                sol.push(e);
            }
            self.best = Some(sol);
        }
    }

    fn search(&mut self) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = false;
            return;
        }
        let unc = self.uncovered();
        if unc.is_empty() {
            self.record_candidate(None);
            return;
        }
        if unc.len() == 1 {
            return; // a leftover singleton can never form a block
        }
        if self.g.is_commuting_set(&unc) {
            self.record_candidate(Some(unc));
            return;
        }
        let cand_sizes: Vec<usize> = unc
            .iter()
            .map(|&x| unc.iter().filter(|&&y| self.g.commutes(x, y)).count())
            .collect();
        // any uncovered element whose only uncovered commuter is itself
        // is stuck
        if cand_sizes.iter().any(|&c| c < 2) {
            return;
        }
        let (nc_size, feasible) = self.uncovered_lower_bound(&unc, &cand_sizes);
        if !feasible {
            return;
        }
        let max_block = *cand_sizes.iter().max().unwrap();
        let lb = self.blocks.len() + nc_size.max(unc.len().div_ceil(max_block));
        if let Some(best) = &self.best {
            if lb >= best.len() {
                return;
            }
        }
        // anchor the next block at the most constrained uncovered element
        let anchor_pos = (0..unc.len()).min_by_key(|&i| (cand_sizes[i], unc[i])).unwrap();
        let anchor = unc[anchor_pos];
        let cands: Vec<u32> = unc
            .iter()
            .copied()
            .filter(|&y| y != anchor && self.g.commutes(anchor, y))
            .collect();
        let mut options: Vec<Vec<u32>> = Vec::new();
        enumerate_commuting_subsets(self.g, &cands, &mut vec![anchor], &mut options);
        options.retain(|b| b.len() >= 2);
        // larger blocks first so good incumbents appear early
        options.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        for block in options {
            for &x in &block {
                self.covered[x as usize] = true;
            }
            self.blocks.push(block);
            self.search();
            let block = self.blocks.pop().unwrap();
            for &x in &block {
                self.covered[x as usize] = false;
            }
            if !self.exhausted {
                return;
            }
        }
    }
}

fn enumerate_commuting_subsets(
    g: &GroupTable,
    cands: &[u32],
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    out.push(current.clone());
    for (i, &c) in cands.iter().enumerate() {
        if current.iter().all(|&x| g.commutes(x, c)) {
            current.push(c);
            enumerate_commuting_subsets(g, &cands[i + 1..], current, out);
            current.pop();
        }
    }
}

/// Exact minimal abelian partition size by exhaustive branch-and-bound;
/// returns 0 with a NAP certificate when no partition exists.
pub fn exact_theta(g: &GroupTable) -> Result<ThetaResult> {
    exact_theta_budgeted(g, DEFAULT_EXACT_NODE_BUDGET)
}

pub fn exact_theta_budgeted(g: &GroupTable, budget: u64) -> Result<ThetaResult> {
    if g.is_abelian() {
        // the trivial group carries no size >= 2 block; the value is still 1
        let partition = (g.size() >= 2)
            .then(|| AbelianPartition::new(vec![(0..g.size() as u32).collect()]));
        return Ok(ThetaResult {
            value: 1,
            partition,
            certificate: Certificate::Exhaustive,
        });
    }
    let mut search = ExactSearch {
        g,
        covered: vec![false; g.size()],
        blocks: Vec::new(),
        best: None,
        nodes: 0,
        budget,
        exhausted: true,
    };
    // seed the incumbent with the constructive upper bounds
    for seed in [theorem_c_partition(g), center_coset_partition(g)] {
        if let Ok(p) = seed {
            debug_assert!(is_valid_partition(g, &p));
            if search.best.as_ref().is_none_or(|b| p.block_count() < b.len()) {
                search.best = Some(p.blocks);
            }
        }
    }
    search.search();
    if !search.exhausted {
        return Err(Error::SearchBudgetExceeded(format!(
            "exact theta search hit the {budget}-node budget"
        )));
    }
    match search.best {
        Some(blocks) => {
            let p = AbelianPartition::new(blocks);
            verify_partition(g, &p)?;
            Ok(ThetaResult {
                value: p.block_count(),
                partition: Some(p),
                certificate: Certificate::Exhaustive,
            })
        }
        None => Ok(ThetaResult {
            value: 0,
            partition: None,
            certificate: Certificate::NapExhaustive,
        }),
    }
}

// ----------------------------------------------------------------------
// certificates and lemma checks

/// The literal minimality pattern: block 0 equals the centralizer of the
/// first anchor, every other block is a centralizer minus the center, and
/// all those centralizers are abelian.
pub fn certify_minimal_via_centralizers(
    g: &GroupTable,
    p: &AbelianPartition,
    anchors: &[u32],
) -> Result<()> {
    verify_partition(g, p)?;
    if anchors.len() != p.blocks.len() {
        return Err(Error::AnchorMismatch(format!(
            "{} anchors for {} blocks",
            anchors.len(),
            p.blocks.len()
        )));
    }
    let z: Vec<u32> = g.center().members;
    for (i, (&a, block)) in anchors.iter().zip(&p.blocks).enumerate() {
        let c = g.centralizer(a);
        if !g.is_commuting_set(&c.members) {
            return Err(Error::AnchorMismatch(format!(
                "centralizer of anchor {a} is not abelian"
            )));
        }
        let expected: Vec<u32> = if i == 0 {
            c.members
        } else {
            c.members
                .iter()
                .copied()
                .filter(|x| z.binary_search(x).is_err())
                .collect()
        };
        if &expected != block {
            return Err(Error::AnchorMismatch(format!(
                "block {i} does not match the centralizer pattern of anchor {a}"
            )));
        }
    }
    Ok(())
}

/// Re-check a CentralizerMinimal certificate in its general form: one
/// anchor inside each block, anchors pairwise noncommuting. The anchors
/// are then a noncommuting set of size |blocks|, so no abelian partition
/// can be smaller, and the partition itself witnesses attainment.
pub fn recheck_centralizer_certificate(
    g: &GroupTable,
    p: &AbelianPartition,
    anchors: &[u32],
) -> Result<()> {
    verify_partition(g, p)?;
    if anchors.len() != p.blocks.len() {
        return Err(Error::AnchorMismatch(format!(
            "{} anchors for {} blocks",
            anchors.len(),
            p.blocks.len()
        )));
    }
    for (i, (&a, block)) in anchors.iter().zip(&p.blocks).enumerate() {
        if block.binary_search(&a).is_err() {
            return Err(Error::AnchorMismatch(format!(
                "anchor {a} is not in block {i}"
            )));
        }
    }
    for (i, &a) in anchors.iter().enumerate() {
        for &b in &anchors[..i] {
            if g.commutes(a, b) {
                return Err(Error::AnchorMismatch(format!(
                    "anchors {a} and {b} commute"
                )));
            }
        }
    }
    Ok(())
}

/// Re-check any ThetaResult whose certificate admits an internal check.
pub fn verify_certificate(g: &GroupTable, t: &ThetaResult) -> Result<()> {
    match (&t.certificate, &t.partition) {
        (Certificate::CentralizerMinimal { anchors }, Some(p)) => {
            if p.block_count() != t.value {
                return Err(Error::AnchorMismatch("block count != value".into()));
            }
            recheck_centralizer_certificate(g, p, anchors)
        }
        (Certificate::NapSelfCentralizing { witness }, _) => {
            let x = *witness;
            if g.mul(x, x) != 0 || x == 0 || g.centralizer(x).members != vec![0, x].into_iter().collect::<Vec<_>>() {
                return Err(Error::AnchorMismatch(
                    "witness is not a self-centralizing involution".into(),
                ));
            }
            Ok(())
        }
        (_, Some(p)) => {
            if t.value >= 1 && p.block_count() != t.value {
                return Err(Error::AnchorMismatch("block count != value".into()));
            }
            verify_partition(g, p)
        }
        _ => Ok(()),
    }
}

/// Move every nontrivial central element into block 0, per the
/// first-summand normalization. Reports rather than repairs a partition
/// whose donor block would drop below size 2.
pub fn normalize_first_block(g: &GroupTable, p: &AbelianPartition) -> Result<AbelianPartition> {
    verify_partition(g, p)?;
    let z = g.center().members;
    if z.len() < 2 {
        return Ok(p.clone());
    }
    let mut blocks = p.blocks.clone();
    for &zc in &z {
        if zc == 0 || blocks[0].contains(&zc) {
            continue;
        }
        let donor = blocks
            .iter()
            .position(|b| b.contains(&zc))
            .expect("partition covers G");
        if blocks[donor].len() <= 2 {
            return Err(Error::InvariantBroken(format!(
                "central element {zc} sits in a size-2 block; partition is not minimal"
            )));
        }
        blocks[donor].retain(|&x| x != zc);
        blocks[0].push(zc);
    }
    let out = AbelianPartition::new(blocks);
    verify_partition(g, &out)?;
    Ok(out)
}

/// Centralizer-union covering from an oversized commuting set: with
/// |S| > theta_a(G), the centralizers of the pairwise quotients cover G.
pub fn check_union_lemma(g: &GroupTable, s: &[u32]) -> Result<bool> {
    if !g.is_commuting_set(s) {
        return Err(Error::NotCommuting("input set must be commuting".into()));
    }
    let mut covered = vec![false; g.size()];
    for (j, &aj) in s.iter().enumerate() {
        for &ai in &s[..j] {
            let q = g.mul(g.inv(ai), aj);
            for x in 0..g.size() as u32 {
                if g.commutes(x, q) {
                    covered[x as usize] = true;
                }
            }
        }
    }
    Ok(covered.iter().all(|&c| c))
}

/// Minimal block size never exceeds the class count.
pub fn min_part_size_check(g: &GroupTable, p: &AbelianPartition) -> bool {
    p.min_block_size() <= g.class_count()
}

// ----------------------------------------------------------------------
// small-theta classification

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SmallTheta {
    One,
    Three,
    Four,
    Other,
    NapCandidate,
}

/// Structural characterization of theta in {1, 3, 4}, used as an oracle
/// against the exact solver.
pub fn classify_small_theta(g: &GroupTable) -> Result<SmallTheta> {
    if !g.is_dense() {
        return Err(Error::QuotientTooLarge);
    }
    if g.is_abelian() {
        return Ok(SmallTheta::One);
    }
    let z = g.center();
    if z.order() < 2 {
        return Ok(SmallTheta::NapCandidate);
    }
    // theta = 3 iff G = P x Q with P a 2-group, P/Z(P) of order 4, and Q
    // abelian; equivalently the odd-order elements are central and the
    // 2-power elements form a subgroup with that quotient shape
    let two_part: Vec<u32> = (0..g.size() as u32)
        .filter(|&x| g.orders()[x as usize].is_power_of_two())
        .collect();
    let odd_central = (0..g.size() as u32)
        .filter(|&x| g.orders()[x as usize] % 2 == 1)
        .all(|x| z.contains(x));
    if odd_central && g.is_subgroup(&two_part) {
        let p = g.induced_table(&SubgroupRef { members: two_part }, "sylow2")?;
        if !p.is_abelian() && p.size() / p.center().order() == 4 {
            return Ok(SmallTheta::Three);
        }
    }
    let q = g.quotient(&z)?;
    let four = match q.size() {
        9 => q.is_abelian() && q.orders().iter().all(|&o| o <= 3),
        6 => !q.is_abelian(),
        _ => false,
    };
    if four {
        return Ok(SmallTheta::Four);
    }
    Ok(SmallTheta::Other)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermSpec;

    pub(crate) fn s3() -> GroupTable {
        GroupTable::from_generators(
            &PermSpec {
                degree: 3,
                generators: vec![vec![1, 2, 0], vec![1, 0, 2]],
            },
            "S3",
        )
        .unwrap()
    }

    /// Q8 with encoding eps*4 + i for a^eps b^i, b^2 = a^2 central.
    pub(crate) fn q8() -> GroupTable {
        // a^eps b^i with eps in {0,1}, i in 0..4; b^4 = 1, a^2 = b^2,
        // a^-1 b a = b^-1
        let n = 8;
        let enc = |eps: usize, i: usize| (eps * 4 + i) as u32;
        let mut mul = vec![0u32; n * n];
        for e1 in 0..2 {
            for i1 in 0..4 {
                for e2 in 0..2 {
                    for i2 in 0..4 {
                        // (a^e1 b^i1)(a^e2 b^i2)
                        let (eps, i) = if e2 == 0 {
                            (e1, (i1 + i2) % 4)
                        } else if e1 == 0 {
                            // b^i1 a = a b^-i1
                            (1, (4 - i1 + i2) % 4)
                        } else {
                            // a b^i1 a b^i2 = a^2 b^{i2-i1} = b^{2+i2-i1}
                            (0, (2 + 4 + i2 - i1) % 4)
                        };
                        mul[(enc(e1, i1) * 8 + enc(e2, i2)) as usize] = enc(eps, i);
                    }
                }
            }
        }
        GroupTable::from_mul_table(mul, "Q8").unwrap()
    }

    fn a4() -> GroupTable {
        GroupTable::from_generators(
            &PermSpec {
                degree: 4,
                generators: vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]],
            },
            "A4",
        )
        .unwrap()
    }

    fn d8() -> GroupTable {
        GroupTable::from_generators(
            &PermSpec {
                degree: 4,
                generators: vec![vec![1, 2, 3, 0], vec![1, 0, 3, 2]],
            },
            "D8",
        )
        .unwrap()
    }

    #[test]
    fn q8_is_a_group_with_one_involution() {
        let g = q8();
        assert!(g.validate_axioms());
        assert_eq!(g.involutions().len(), 1);
        assert_eq!(g.center().order(), 2);
    }

    #[test]
    fn verify_q8_hand_partition() {
        let g = q8();
        // {1, b^2, b, b^3}, {a, a b^2}, {a b, a b^3}
        let p = AbelianPartition::new(vec![vec![0, 1, 2, 3], vec![4, 6], vec![5, 7]]);
        assert!(is_valid_partition(&g, &p));
    }

    #[test]
    fn single_block_fails_for_nonabelian() {
        let g = s3();
        let p = AbelianPartition::new(vec![(0..6).collect()]);
        assert!(matches!(
            verify_partition(&g, &p),
            Err(Error::NotCommuting(_))
        ));
    }

    #[test]
    fn singleton_block_fails() {
        let g = q8();
        let p = AbelianPartition::new(vec![vec![0, 1, 2, 3], vec![4, 6], vec![5], vec![7]]);
        assert!(matches!(
            verify_partition(&g, &p),
            Err(Error::InvariantBroken(_))
        ));
    }

    #[test]
    fn center_cosets_of_q8() {
        let g = q8();
        let p = center_coset_partition(&g).unwrap();
        assert_eq!(p.block_count(), 4);
        assert!(p.blocks.iter().all(|b| b.len() == 2));
        assert!(is_valid_partition(&g, &p));
    }

    #[test]
    fn center_cosets_need_center() {
        assert!(matches!(
            center_coset_partition(&s3()),
            Err(Error::CenterTrivial)
        ));
    }

    #[test]
    fn odd_order_pairing() {
        let z7 = GroupTable::cyclic(7);
        let p = odd_order_partition(&z7).unwrap();
        assert_eq!(p.block_count(), 3);
        assert!(is_valid_partition(&z7, &p));
        let z3 = GroupTable::cyclic(3);
        let p = odd_order_partition(&z3).unwrap();
        assert_eq!(p.block_count(), 1);
        assert!(matches!(
            odd_order_partition(&GroupTable::cyclic(4)),
            Err(Error::EvenOrder)
        ));
    }

    #[test]
    fn exact_theta_d8_and_q8() {
        for g in [d8(), q8()] {
            let t = exact_theta(&g).unwrap();
            assert_eq!(t.value, 3, "{}", g.construction_tag);
            assert!(is_valid_partition(&g, t.partition.as_ref().unwrap()));
        }
    }

    #[test]
    fn exact_theta_s3_is_nap() {
        let t = exact_theta(&s3()).unwrap();
        assert_eq!(t.value, 0);
        assert_eq!(t.certificate, Certificate::NapExhaustive);
    }

    #[test]
    fn exact_theta_a4() {
        let t = exact_theta(&a4()).unwrap();
        assert_eq!(t.value, 5);
        assert!(is_valid_partition(&a4(), t.partition.as_ref().unwrap()));
    }

    #[test]
    fn exact_theta_never_two() {
        // nonabelian groups up to order 12 from our builders
        for g in [s3(), d8(), q8(), a4()] {
            let t = exact_theta(&g).unwrap();
            assert_ne!(t.value, 2);
        }
    }

    #[test]
    fn bounds_for_d8_sandwich() {
        let b = compute_bounds(&d8()).unwrap();
        assert_eq!(b.ub_thm_c, Some(3));
        assert!(b.lb_noncommuting >= 3);
        assert_eq!(b.best_lb, 3);
        assert_eq!(b.best_ub, Some(3));
    }

    #[test]
    fn normalize_moves_central_element() {
        let g = q8();
        // valid partition with the central involution (index 2 = b^2)
        // outside block 0: {1, b, ...}? b^2 commutes with everything.
        // Use blocks {0,1}(=1,b), {2,3,4,6}? b^2,b^3 with a? a=4 vs b^3=3
        // do not commute. Take {0,1},{2,3},{4,6},{5,7}: 4 blocks.
        let p = AbelianPartition::new(vec![vec![0, 1], vec![2, 3], vec![4, 6], vec![5, 7]]);
        assert!(is_valid_partition(&g, &p));
        // donor block {2,3} has size 2: the lemma says this cannot happen
        // for a *minimal* partition, and this one is not minimal
        assert!(matches!(
            normalize_first_block(&g, &p),
            Err(Error::InvariantBroken(_))
        ));
        // a minimal partition normalizes fine
        let t = exact_theta(&g).unwrap();
        let p = t.partition.unwrap();
        let norm = normalize_first_block(&g, &p).unwrap();
        let z = g.center().members;
        assert!(z.iter().all(|&zc| norm.blocks[0].contains(&zc)));
        assert_eq!(norm.block_count(), p.block_count());
    }

    #[test]
    fn union_lemma_on_q8() {
        let g = q8();
        // {1, b, b^2, b^3} is commuting of size 4 > theta_a(Q8) = 3
        assert!(check_union_lemma(&g, &[0, 1, 2, 3]).unwrap());
        assert!(check_union_lemma(&g, &[0, 1, 4]).is_err());
    }

    #[test]
    fn min_part_size_on_q8() {
        let g = q8();
        let t = exact_theta(&g).unwrap();
        assert!(min_part_size_check(&g, t.partition.as_ref().unwrap()));
    }

    #[test]
    fn classify_small_theta_examples() {
        assert_eq!(classify_small_theta(&d8()).unwrap(), SmallTheta::Three);
        assert_eq!(classify_small_theta(&q8()).unwrap(), SmallTheta::Three);
        assert_eq!(
            classify_small_theta(&GroupTable::cyclic(5)).unwrap(),
            SmallTheta::One
        );
        assert_eq!(
            classify_small_theta(&s3()).unwrap(),
            SmallTheta::NapCandidate
        );
    }

    #[test]
    fn centralizer_certificate_on_q8() {
        let g = q8();
        // anchors b, a, ab: C(b) = <b>, C(a) = {1,b^2,a,ab^2},
        // C(ab) = {1,b^2,ab,ab^3}
        let p = AbelianPartition::new(vec![vec![0, 1, 2, 3], vec![4, 6], vec![5, 7]]);
        certify_minimal_via_centralizers(&g, &p, &[1, 4, 5]).unwrap();
        recheck_centralizer_certificate(&g, &p, &[1, 4, 5]).unwrap();
        // a wrong anchor fails
        assert!(certify_minimal_via_centralizers(&g, &p, &[1, 4, 4]).is_err());
    }
}
