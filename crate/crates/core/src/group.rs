//! Finite groups as explicit element-indexed tables.
//!
//! Element identity is the positional index; index 0 is always the group
//! identity. Groups built from permutation generators number elements in
//! BFS order from the identity over generator multiplication, which makes
//! every construction bit-reproducible.
//!
//! Two backends share one interface: a dense row-major multiplication
//! table for small groups, and a permutation-action backend (images on the
//! permutation domain plus on-demand composition) for groups whose dense
//! table would not fit, such as Sz(8) on 65 points.

use std::collections::HashMap;
use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default cap on generated group order.
pub const DEFAULT_ORDER_CAP: usize = 200_000;
/// Largest order for which a dense multiplication table is materialized.
pub const DEFAULT_DENSE_LIMIT: usize = 5_000;
/// Default cap for the maximal-abelian-subgroup search.
pub const DEFAULT_SUBGROUP_SEARCH_CAP: usize = 10_000;

/// A set of permutation generators on `[0, degree)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermSpec {
    pub degree: usize,
    pub generators: Vec<Vec<u16>>,
}

impl PermSpec {
    pub fn validate(&self) -> Result<()> {
        for g in &self.generators {
            if g.len() != self.degree {
                return Err(Error::InvalidParams(format!(
                    "generator length {} != degree {}",
                    g.len(),
                    self.degree
                )));
            }
            let mut seen = vec![false; self.degree];
            for &img in g {
                let img = img as usize;
                if img >= self.degree || seen[img] {
                    return Err(Error::InvalidParams("generator is not a bijection".into()));
                }
                seen[img] = true;
            }
        }
        Ok(())
    }
}

/// Permutation images for every element, with an index for composition.
#[derive(Debug, Clone)]
pub struct PermRep {
    pub degree: usize,
    pub elems: Vec<Box<[u16]>>,
    index: HashMap<Box<[u16]>, u32>,
}

fn compose(a: &[u16], b: &[u16]) -> Box<[u16]> {
    // apply a first, then b
    a.iter().map(|&i| b[i as usize]).collect()
}

/// A finite group with indexed elements; identity is index 0.
#[derive(Debug)]
pub struct GroupTable {
    size: usize,
    /// Dense row-major table, when small enough.
    mul_table: Option<Vec<u32>>,
    /// Permutation images, when built from a permutation action.
    perm: Option<PermRep>,
    inv: Vec<u32>,
    pub labels: Option<Vec<String>>,
    pub construction_tag: String,
    /// Mixed-radix coordinate sizes when built by direct products
    /// (most significant first).
    pub factors: Option<Vec<usize>>,
    /// Indices of the construction generators, when known. Lets the
    /// permutation backend answer center / class queries without scanning
    /// all pairs.
    generators: Vec<u32>,
    orders: OnceLock<Vec<u32>>,
    center: OnceLock<Vec<u32>>,
}

/// A subgroup given by its sorted member indices in the parent group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubgroupRef {
    pub members: Vec<u32>,
}

impl SubgroupRef {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// Element orders and the divisibility-maximal subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub omega: BTreeSet<u32>,
    pub mu: BTreeSet<u32>,
}

impl GroupTable {
    // ------------------------------------------------------------------
    // construction

    /// Closure enumeration from permutation generators, BFS order from the
    /// identity. Fails once the cap is exceeded.
    pub fn from_generators(spec: &PermSpec, tag: &str) -> Result<GroupTable> {
        Self::from_generators_capped(spec, tag, DEFAULT_ORDER_CAP, DEFAULT_DENSE_LIMIT)
    }

    pub fn from_generators_capped(
        spec: &PermSpec,
        tag: &str,
        order_cap: usize,
        dense_limit: usize,
    ) -> Result<GroupTable> {
        spec.validate()?;
        let identity: Box<[u16]> = (0..spec.degree as u16).collect();
        let gens: Vec<Box<[u16]>> = spec
            .generators
            .iter()
            .map(|g| g.clone().into_boxed_slice())
            .collect();
        let mut elems: Vec<Box<[u16]>> = vec![identity.clone()];
        let mut index: HashMap<Box<[u16]>, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut queue: VecDeque<u32> = VecDeque::from([0]);
        while let Some(e) = queue.pop_front() {
            for g in &gens {
                let prod = compose(&elems[e as usize], g);
                if !index.contains_key(&prod) {
                    if elems.len() >= order_cap {
                        return Err(Error::OrderCapExceeded { cap: order_cap });
                    }
                    let id = elems.len() as u32;
                    index.insert(prod.clone(), id);
                    elems.push(prod);
                    queue.push_back(id);
                }
            }
        }
        let size = elems.len();
        let perm = PermRep {
            degree: spec.degree,
            elems,
            index,
        };
        let inv: Vec<u32> = (0..size)
            .map(|e| {
                let p = &perm.elems[e];
                let mut q = vec![0u16; perm.degree];
                for (i, &img) in p.iter().enumerate() {
                    q[img as usize] = i as u16;
                }
                perm.index[&q.into_boxed_slice()]
            })
            .collect();
        let mut generators: Vec<u32> = spec
            .generators
            .iter()
            .map(|g| perm.index[g.as_slice()])
            .filter(|&i| i != 0)
            .collect();
        generators.dedup();
        let mut table = GroupTable {
            size,
            mul_table: None,
            perm: Some(perm),
            inv,
            labels: None,
            construction_tag: tag.to_string(),
            factors: None,
            generators,
            orders: OnceLock::new(),
            center: OnceLock::new(),
        };
        if size <= dense_limit {
            table.densify();
        }
        Ok(table)
    }

    fn densify(&mut self) {
        let perm = self.perm.as_ref().expect("densify needs a perm backend");
        let n = self.size;
        let mut mul = vec![0u32; n * n];
        for x in 0..n {
            let px = &perm.elems[x];
            for y in 0..n {
                mul[x * n + y] = perm.index[&compose(px, &perm.elems[y])];
            }
        }
        self.mul_table = Some(mul);
    }

    /// Build from an explicit multiplication table (row-major). Verifies
    /// the identity and inverse laws and that rows/columns are bijections.
    pub fn from_mul_table(mul: Vec<u32>, tag: &str) -> Result<GroupTable> {
        let size = (mul.len() as f64).sqrt().round() as usize;
        if size * size != mul.len() {
            return Err(Error::InvalidParams("mul table is not square".into()));
        }
        for x in 0..size {
            if mul[x * size] != x as u32 || mul[x] != x as u32 {
                return Err(Error::InvalidParams("element 0 is not an identity".into()));
            }
        }
        let mut inv = vec![u32::MAX; size];
        for x in 0..size {
            let mut row = vec![false; size];
            let mut col = vec![false; size];
            for y in 0..size {
                let r = mul[x * size + y] as usize;
                let c = mul[y * size + x] as usize;
                if r >= size || c >= size || row[r] || col[c] {
                    return Err(Error::InvalidParams("table row/column not a bijection".into()));
                }
                row[r] = true;
                col[c] = true;
                if r == 0 {
                    inv[x] = y as u32;
                }
            }
        }
        for x in 0..size {
            let i = inv[x];
            if i == u32::MAX || mul[i as usize * size + x] != 0 {
                return Err(Error::InvalidParams("inverse law fails".into()));
            }
        }
        Ok(GroupTable {
            size,
            mul_table: Some(mul),
            perm: None,
            inv,
            labels: None,
            construction_tag: tag.to_string(),
            factors: None,
            generators: Vec::new(),
            orders: OnceLock::new(),
            center: OnceLock::new(),
        })
    }

    /// Cyclic group of order n under addition.
    pub fn cyclic(n: usize) -> GroupTable {
        assert!(n >= 1);
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = ((a + b) % n) as u32;
            }
        }
        GroupTable::from_mul_table(mul, &format!("Z{n}")).expect("cyclic table is a group")
    }

    /// Componentwise product; index of (g, h) is `g * |H| + h`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
        let size = g
            .size
            .checked_mul(h.size)
            .filter(|&s| s <= DEFAULT_DENSE_LIMIT)
            .ok_or(Error::OrderCapExceeded {
                cap: DEFAULT_DENSE_LIMIT,
            })?;
        let mut mul = vec![0u32; size * size];
        for ga in 0..g.size {
            for ha in 0..h.size {
                let a = ga * h.size + ha;
                for gb in 0..g.size {
                    for hb in 0..h.size {
                        let b = gb * h.size + hb;
                        mul[a * size + b] = (g.mul(ga as u32, gb as u32) as usize * h.size)
                            as u32
                            + h.mul(ha as u32, hb as u32);
                    }
                }
            }
        }
        let tag = format!("({})x({})", g.construction_tag, h.construction_tag);
        let mut t = GroupTable::from_mul_table(mul, &tag)?;
        let mut factors = g.factors.clone().unwrap_or_else(|| vec![g.size]);
        factors.extend(h.factors.clone().unwrap_or_else(|| vec![h.size]));
        t.factors = Some(factors);
        Ok(t)
    }

    /// Wreath product `K wr H` with `H` permuting the coordinates of the
    /// base group `K^n`. Encoding of (f, h): base tuple in big-endian
    /// `|K|`-radix, then `index = base * |H| + h`.
    pub fn wreath_product(k: &GroupTable, h_spec: &PermSpec) -> Result<GroupTable> {
        let h = GroupTable::from_generators(h_spec, "wreath-top")?;
        let h_perm = h.perm.as_ref().expect("top group retains its permutations");
        let n = h_spec.degree;
        let base_size = k
            .size
            .checked_pow(n as u32)
            .ok_or(Error::OrderCapExceeded {
                cap: DEFAULT_DENSE_LIMIT,
            })?;
        let size = base_size
            .checked_mul(h.size)
            .filter(|&s| s <= DEFAULT_DENSE_LIMIT)
            .ok_or(Error::OrderCapExceeded {
                cap: DEFAULT_DENSE_LIMIT,
            })?;
        let decode_base = |mut b: usize| {
            let mut f = vec![0u32; n];
            for i in (0..n).rev() {
                f[i] = (b % k.size) as u32;
                b /= k.size;
            }
            f
        };
        let encode_base = |f: &[u32]| {
            let mut b = 0usize;
            for &c in f {
                b = b * k.size + c as usize;
            }
            b
        };
        let mut mul = vec![0u32; size * size];
        for a in 0..size {
            let (fa, ha) = (decode_base(a / h.size), a % h.size);
            let sigma = &h_perm.elems[ha]; // point images of ha
            for b in 0..size {
                let (fb, hb) = (decode_base(b / h.size), b % h.size);
                // (fa, ha)(fb, hb) = (fa . (ha . fb), ha hb),
                // with (ha . fb)_i = fb_{sigma_ha^{-1}(i)}, i.e. the
                // coordinate at sigma(i') lands at i' composed: place
                // fb[j] at position sigma[j].
                let mut moved = vec![0u32; n];
                for j in 0..n {
                    moved[sigma[j] as usize] = fb[j];
                }
                let prod: Vec<u32> = (0..n).map(|i| k.mul(fa[i], moved[i])).collect();
                let hc = h.mul(ha as u32, hb as u32) as usize;
                mul[a * size + b] = (encode_base(&prod) * h.size + hc) as u32;
            }
        }
        let tag = format!("({})wr(deg{}|{}|)", k.construction_tag, n, h.size);
        GroupTable::from_mul_table(mul, &tag)
    }

    // ------------------------------------------------------------------
    // basic queries

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.mul_table {
            t[a as usize * self.size + b as usize]
        } else {
            let p = self.perm.as_ref().unwrap();
            p.index[&compose(&p.elems[a as usize], &p.elems[b as usize])]
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutes(&self, a: u32, b: u32) -> bool {
        if let Some(t) = &self.mul_table {
            t[a as usize * self.size + b as usize] == t[b as usize * self.size + a as usize]
        } else {
            // compare the two compositions pointwise, no index lookups
            let p = self.perm.as_ref().unwrap();
            let (pa, pb) = (&p.elems[a as usize], &p.elems[b as usize]);
            pa.iter()
                .enumerate()
                .all(|(i, &ai)| pb[ai as usize] == pa[pb[i] as usize])
        }
    }

    pub fn perm_rep(&self) -> Option<&PermRep> {
        self.perm.as_ref()
    }

    pub fn is_dense(&self) -> bool {
        self.mul_table.is_some()
    }

    pub fn mul_table(&self) -> Option<&[u32]> {
        self.mul_table.as_deref()
    }

    pub fn element_order(&self, x: u32) -> u32 {
        let mut n = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    pub fn orders(&self) -> &[u32] {
        self.orders
            .get_or_init(|| (0..self.size as u32).map(|x| self.element_order(x)).collect())
    }

    pub fn spectrum(&self) -> Spectrum {
        let omega: BTreeSet<u32> = self.orders().iter().copied().collect();
        let mu: BTreeSet<u32> = omega
            .iter()
            .copied()
            .filter(|&d| !omega.iter().any(|&e| e != d && e % d == 0))
            .collect();
        Spectrum { omega, mu }
    }

    /// Multiset of element orders as (order, count) pairs.
    pub fn order_profile(&self) -> Vec<(u32, usize)> {
        let mut counts: std::collections::BTreeMap<u32, usize> = Default::default();
        for &o in self.orders() {
            *counts.entry(o).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// Indices of the construction generators (empty when the group was
    /// built from a raw table).
    pub fn generator_indices(&self) -> &[u32] {
        &self.generators
    }

    pub fn is_abelian(&self) -> bool {
        if !self.generators.is_empty() {
            return self
                .generators
                .iter()
                .all(|&a| self.generators.iter().all(|&b| self.commutes(a, b)));
        }
        (0..self.size as u32).all(|a| (0..a).all(|b| self.commutes(a, b)))
    }

    pub fn center(&self) -> SubgroupRef {
        let members = self
            .center
            .get_or_init(|| {
                if self.generators.is_empty() {
                    (0..self.size as u32)
                        .filter(|&z| (0..self.size as u32).all(|g| self.commutes(z, g)))
                        .collect()
                } else {
                    (0..self.size as u32)
                        .filter(|&z| self.generators.iter().all(|&g| self.commutes(z, g)))
                        .collect()
                }
            })
            .clone();
        SubgroupRef { members }
    }

    pub fn centralizer(&self, x: u32) -> SubgroupRef {
        SubgroupRef {
            members: (0..self.size as u32)
                .filter(|&g| self.commutes(g, x))
                .collect(),
        }
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.size];
        let mut classes = Vec::new();
        for x in 0..self.size as u32 {
            if seen[x as usize] {
                continue;
            }
            let mut class = BTreeSet::new();
            if self.generators.is_empty() {
                for g in 0..self.size as u32 {
                    class.insert(self.conj(x, g));
                }
            } else {
                // orbit of x under conjugation by the generators
                let mut queue = VecDeque::from([x]);
                class.insert(x);
                while let Some(y) = queue.pop_front() {
                    for &g in &self.generators {
                        let z = self.conj(y, g);
                        if class.insert(z) {
                            queue.push_back(z);
                        }
                    }
                }
            }
            for &y in &class {
                seen[y as usize] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    pub fn class_count(&self) -> usize {
        self.conjugacy_classes().len()
    }

    /// Number of ordered commuting pairs, with the class-counting identity
    /// asserted (it fails only on a broken table).
    pub fn commuting_pairs_count(&self) -> usize {
        let count = (0..self.size as u32)
            .map(|a| (0..self.size as u32).filter(|&b| self.commutes(a, b)).count())
            .sum();
        assert_eq!(
            count,
            self.size * self.class_count(),
            "commuting pair count must equal |G| c(G)"
        );
        count
    }

    pub fn involutions(&self) -> Vec<u32> {
        (1..self.size as u32)
            .filter(|&x| self.mul(x, x) == 0)
            .collect()
    }

    /// The set of odd-order elements, if it is closed under multiplication
    /// (then it is the normal 2-complement).
    pub fn odd_part_subgroup(&self) -> Option<SubgroupRef> {
        let members: Vec<u32> = (0..self.size as u32)
            .filter(|&x| self.orders()[x as usize] % 2 == 1)
            .collect();
        let set: BTreeSet<u32> = members.iter().copied().collect();
        for &a in &members {
            for &b in &members {
                if !set.contains(&self.mul(a, b)) {
                    return None;
                }
            }
        }
        Some(SubgroupRef { members })
    }

    // ------------------------------------------------------------------
    // subgroups

    /// Subgroup generated by `seed`.
    pub fn closure(&self, seed: &[u32]) -> SubgroupRef {
        let mut members: BTreeSet<u32> = [0].into();
        let mut queue: VecDeque<u32> = VecDeque::from([0]);
        let mut gens: Vec<u32> = seed.to_vec();
        gens.retain(|&g| g != 0);
        if gens.is_empty() {
            return SubgroupRef { members: vec![0] };
        }
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        SubgroupRef {
            members: members.into_iter().collect(),
        }
    }

    pub fn is_subgroup(&self, members: &[u32]) -> bool {
        let set: BTreeSet<u32> = members.iter().copied().collect();
        set.contains(&0)
            && members
                .iter()
                .all(|&a| members.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, sub: &SubgroupRef) -> bool {
        (0..self.size as u32).all(|g| sub.members.iter().all(|&x| sub.contains(self.conj(x, g))))
    }

    /// The multiplication table induced on a subgroup, with the index map
    /// new -> old. The identity keeps index 0.
    pub fn induced_table(&self, sub: &SubgroupRef, tag: &str) -> Result<GroupTable> {
        let members = &sub.members;
        if members.first() != Some(&0) {
            return Err(Error::InvalidParams("subgroup must contain identity".into()));
        }
        let n = members.len();
        let pos = |x: u32| members.binary_search(&x).expect("closed subgroup") as u32;
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = pos(self.mul(members[i], members[j]));
            }
        }
        GroupTable::from_mul_table(mul, tag)
    }

    /// Quotient by a normal subgroup. Cosets are numbered by their least
    /// element, identity coset first.
    pub fn quotient(&self, normal: &SubgroupRef) -> Result<GroupTable> {
        if !self.is_subgroup(&normal.members) || !self.is_normal(normal) {
            return Err(Error::InvalidParams("quotient needs a normal subgroup".into()));
        }
        let mut coset_of = vec![u32::MAX; self.size];
        let mut reps: Vec<u32> = Vec::new();
        for x in 0..self.size as u32 {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            for &z in &normal.members {
                coset_of[self.mul(x, z) as usize] = c;
            }
            reps.push(x);
        }
        let q = reps.len();
        let mut mul = vec![0u32; q * q];
        for i in 0..q {
            for j in 0..q {
                mul[i * q + j] = coset_of[self.mul(reps[i], reps[j]) as usize];
            }
        }
        GroupTable::from_mul_table(mul, &format!("{}/N{}", self.construction_tag, normal.order()))
    }

    /// Every subgroup, by closing each known subgroup under one extra
    /// generator until a fixpoint. Exponential in principle; meant for the
    /// small groups the Frobenius detector runs on.
    pub fn all_subgroups(&self) -> Vec<SubgroupRef> {
        let mut known: BTreeSet<Vec<u32>> = [vec![0u32]].into();
        let mut frontier: Vec<Vec<u32>> = vec![vec![0u32]];
        while let Some(h) = frontier.pop() {
            let sub = SubgroupRef { members: h.clone() };
            for x in 1..self.size as u32 {
                if sub.contains(x) {
                    continue;
                }
                let mut seed = h.clone();
                seed.push(x);
                let bigger = self.closure(&seed);
                if known.insert(bigger.members.clone()) {
                    frontier.push(bigger.members);
                }
            }
        }
        known
            .into_iter()
            .map(|members| SubgroupRef { members })
            .collect()
    }

    /// An abelian subgroup of maximal order, by branch-and-bound over
    /// commuting sets closed under the subgroup-closure operator. Ties are
    /// broken toward the smallest sorted member list.
    pub fn max_abelian_subgroup(&self) -> Result<SubgroupRef> {
        self.max_abelian_subgroup_capped(DEFAULT_SUBGROUP_SEARCH_CAP)
    }

    pub fn max_abelian_subgroup_capped(&self, cap: usize) -> Result<SubgroupRef> {
        if self.size > cap {
            return Err(Error::SearchBudgetExceeded(format!(
                "|G| = {} exceeds subgroup search cap {}",
                self.size, cap
            )));
        }
        if self.is_abelian() {
            return Ok(SubgroupRef {
                members: (0..self.size as u32).collect(),
            });
        }
        let z = self.center().members;
        let cands: Vec<u32> = (0..self.size as u32)
            .filter(|x| z.binary_search(x).is_err())
            .collect();
        let mut best = SubgroupRef { members: z.clone() };
        self.max_abelian_rec(&SubgroupRef { members: z }, &cands, &mut best);
        Ok(best)
    }

    fn max_abelian_rec(&self, current: &SubgroupRef, cands: &[u32], best: &mut SubgroupRef) {
        if current.order() > best.order()
            || (current.order() == best.order() && current.members < best.members)
        {
            *best = current.clone();
        }
        if current.order() + cands.len() < best.order() {
            return;
        }
        if let Some((&x, rest)) = cands.split_first() {
            // include x: closure stays abelian since x commutes with all
            // of `current` and both generate a commuting set
            let mut seed = current.members.clone();
            seed.push(x);
            let bigger = self.closure(&seed);
            let new_cands: Vec<u32> = rest
                .iter()
                .copied()
                .filter(|&y| !bigger.contains(y) && bigger.members.iter().all(|&a| self.commutes(a, y)))
                .collect();
            debug_assert!(self.is_commuting_set(&bigger.members));
            self.max_abelian_rec(&bigger, &new_cands, best);
            // exclude x
            self.max_abelian_rec(current, rest, best);
        }
    }

    pub fn is_commuting_set(&self, members: &[u32]) -> bool {
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[..i].iter().all(|&b| self.commutes(a, b)))
    }

    /// Full associativity / identity / inverse audit. Exhaustive up to 512
    /// elements, random triples beyond.
    pub fn validate_axioms(&self) -> bool {
        let n = self.size as u32;
        let id_ok = (0..n).all(|x| self.mul(0, x) == x && self.mul(x, 0) == x);
        let inv_ok = (0..n).all(|x| self.mul(x, self.inv(x)) == 0);
        if !(id_ok && inv_ok) {
            return false;
        }
        if self.size <= 512 {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    let xy = self.mul(x, y);
                    (0..n).all(|z| self.mul(xy, z) == self.mul(x, self.mul(y, z)))
                })
            })
        } else {
            // deterministic sample
            let mut s: u64 = 0x9e3779b97f4a7c15;
            let mut next = || {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                (s % self.size as u64) as u32
            };
            (0..20_000).all(|_| {
                let (x, y, z) = (next(), next(), next());
                self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z))
            })
        }
    }
}
