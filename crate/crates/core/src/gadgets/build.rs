use num_bigint::BigUint;
use num_traits::One;

use super::exactify::DeltaDecomposition;
use super::instance::{ControlInstance, GadgetInfo, GadgetKind, GroupLabel};
use super::prereduction::{build_prereduction, pow10, PrereductionWeights};
use crate::error::{Error, Result};
use crate::formula::{count_sat, CnfFormula, MAX_SAT_VARS};
use crate::game::Game;
use crate::layered::{BandLayout, BlockKind, BlockSpec};

/// The light weight chain shared by all gadgets, smallest first.
///
/// Each level weighs more than everything below it, so any sum of chain
/// players splits uniquely into per-level counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWeights {
    pub x: BigUint,
    pub x_prime: BigUint,
    pub y: BigUint,
    pub y_prime: BigUint,
    pub y_star: BigUint,
    pub y_star_star: BigUint,
    pub z: BigUint,
    pub z_prime: BigUint,
    /// `z*_1 .. z*_k`, each the sum of `z*_1` and all earlier terms.
    pub z_star: Vec<BigUint>,
}

impl ChainWeights {
    /// Chain of the decrease gadget.
    pub fn for_decrease(k: usize, n: usize) -> Self {
        Self::build(k, BigUint::one(), n + 1, k + 2)
    }

    /// Chain of the maintain gadget, starting above the `L` levels.
    pub fn for_maintain(k: usize, n: usize, x: BigUint) -> Self {
        Self::build(k, x, n + 3, k + 1)
    }

    fn build(k: usize, x: BigUint, y_star_factor: usize, z_prime_factor: usize) -> Self {
        let x_prime = &x * (k + 1);
        let y = &x_prime * (2 * k + 1);
        let y_prime = &y * (k + 2);
        let y_star = &y_prime * y_star_factor;
        let y_star_star = &y_star * (k + 2);
        let z = &y_star_star * y_star_factor;
        let z_prime = &z * z_prime_factor;
        let first = &z_prime * (k + 2);
        let mut z_star = vec![first.clone()];
        let mut sum = first.clone();
        for _ in 1..k {
            let next = &first + &sum;
            sum += &next;
            z_star.push(next);
        }
        ChainWeights { x, x_prime, y, y_prime, y_star, y_star_star, z, z_prime, z_star }
    }
}

fn check_k(k: usize, n: usize, strict: bool) -> Result<()> {
    let lo = if strict { 4 } else { 1 };
    if k < lo || k >= n {
        return Err(Error::InvalidParameter(format!(
            "{} mode needs {lo} <= k < n, got k = {k}, n = {n}",
            if strict { "strict" } else { "relaxed" }
        )));
    }
    Ok(())
}

/// Players in table order; blocks are assembled afterwards from the labels.
struct Assembly {
    weights: Vec<BigUint>,
    groups: Vec<GroupLabel>,
    heavy: Vec<usize>,
    quota: BigUint,
}

impl Assembly {
    fn light(&mut self, group: GroupLabel, w: BigUint) {
        self.weights.push(w);
        self.groups.push(group);
    }

    fn lights(&mut self, group: GroupLabel, w: &BigUint, count: usize) {
        for _ in 0..count {
            self.light(group, w.clone());
        }
    }

    /// A heavy player that needs light weight exactly `residual` to reach `q - 1`.
    fn heavy(&mut self, group: GroupLabel, residual: BigUint) {
        self.heavy.push(self.weights.len());
        let w = &self.quota - 1u8 - residual;
        self.light(group, w);
    }

    fn members(&self, pred: impl Fn(GroupLabel) -> bool) -> Vec<usize> {
        (0..self.groups.len()).filter(|&p| pred(self.groups[p])).collect()
    }

    fn block(&self, label: &str, kind: BlockKind, group: GroupLabel, granularity: BigUint) -> BlockSpec {
        BlockSpec { label: label.into(), kind, members: self.members(|g| g == group), granularity }
    }
}

/// Shared part of both tables: the encoded formula, `D`, `E`, `F` and the quota.
struct Skeleton {
    pre: PrereductionWeights,
    scale: BigUint,
    assembly: Assembly,
}

fn skeleton(formula: &CnfFormula, k: usize, chain: &ChainWeights) -> Skeleton {
    let n = formula.num_vars();
    let m = formula.num_clauses();
    let floor = chain.z_star.last().expect("k >= 1") * 2u8;
    let pre = build_prereduction(formula, &floor);
    let scale = pow10(pre.t as u64 * (m as u64 + 1) + n as u64);
    let abc = pre.all();
    let w_abc: BigUint = abc.iter().sum();
    let w_e = &w_abc * &scale;
    let quota = (w_abc + w_e + pow10(pre.t as u64)) * 2u8 + 1u8;
    let mut assembly = Assembly { weights: Vec::new(), groups: Vec::new(), heavy: Vec::new(), quota };
    assembly.light(GroupLabel::Distinguished, BigUint::one());
    for i in 0..k {
        assembly.light(GroupLabel::A, pre.a[i].clone());
    }
    for i in 0..k {
        assembly.light(GroupLabel::A, pre.b[i].clone());
    }
    for i in k..n {
        assembly.light(GroupLabel::B, pre.a[i].clone());
    }
    for i in k..n {
        assembly.light(GroupLabel::B, pre.b[i].clone());
    }
    for c in &pre.c {
        assembly.light(GroupLabel::C, c.clone());
    }
    for i in 0..k {
        assembly.heavy(GroupLabel::D, &pre.q_prime + &chain.x * i + &chain.x_prime);
    }
    for w in &abc {
        assembly.light(GroupLabel::E, w * &scale);
    }
    assembly.heavy(GroupLabel::F, &pre.q_prime * &scale + &chain.x_prime);
    Skeleton { pre, scale, assembly }
}

fn pair(pre: &PrereductionWeights, i: usize) -> BigUint {
    &pre.a[i - 1] + &pre.b[i - 1]
}

fn chain_players(a: &mut Assembly, chain: &ChainWeights, counts: [usize; 8]) {
    let [x, xp, y, yp, ys, yss, z, zp] = counts;
    a.lights(GroupLabel::X, &chain.x, x);
    a.lights(GroupLabel::XPrime, &chain.x_prime, xp);
    a.lights(GroupLabel::Y, &chain.y, y);
    a.lights(GroupLabel::YPrime, &chain.y_prime, yp);
    a.lights(GroupLabel::YStar, &chain.y_star, ys);
    a.lights(GroupLabel::YStarStar, &chain.y_star_star, yss);
    a.lights(GroupLabel::Z, &chain.z, z);
    a.lights(GroupLabel::ZPrime, &chain.z_prime, zp);
    for w in &chain.z_star {
        a.light(GroupLabel::ZStar, w.clone());
    }
}

/// Blocks from most to least significant: `E`, `A ∪ B ∪ C`, the chain from
/// `Z*` down to `X`.
fn chain_blocks(s: &Skeleton, chain: &ChainWeights) -> Vec<BlockSpec> {
    let a = &s.assembly;
    let t = pow10(s.pre.t as u64);
    let abc = a.members(|g| matches!(g, GroupLabel::A | GroupLabel::B | GroupLabel::C));
    let u = BlockKind::UniformChainLevel;
    vec![
        a.block("E", BlockKind::Enumerable, GroupLabel::E, &t * &s.scale),
        BlockSpec { label: "ABC".into(), kind: BlockKind::Enumerable, members: abc, granularity: t },
        a.block("Z*", BlockKind::Superincreasing, GroupLabel::ZStar, chain.z_star[0].clone()),
        a.block("Z'", u, GroupLabel::ZPrime, chain.z_prime.clone()),
        a.block("Z", u, GroupLabel::Z, chain.z.clone()),
        a.block("Y**", u, GroupLabel::YStarStar, chain.y_star_star.clone()),
        a.block("Y*", u, GroupLabel::YStar, chain.y_star.clone()),
        a.block("Y'", u, GroupLabel::YPrime, chain.y_prime.clone()),
        a.block("Y", u, GroupLabel::Y, chain.y.clone()),
        a.block("X'", u, GroupLabel::XPrime, chain.x_prime.clone()),
        a.block("X", u, GroupLabel::X, chain.x.clone()),
    ]
}

fn finish(s: Skeleton, blocks: Vec<BlockSpec>, budget: usize, info: GadgetInfo) -> Result<ControlInstance> {
    let Assembly { weights, groups, heavy, quota } = s.assembly;
    let game = Game::new(weights, quota)?;
    let bands = BandLayout { distinguished: 0, heavy, blocks };
    Ok(ControlInstance {
        game,
        distinguished: 0,
        budget,
        goal: info.kind.goal(),
        groups: Some(groups),
        bands: Some(bands),
        gadget: Some(info),
    })
}

fn model_count(formula: &CnfFormula) -> Result<Option<u64>> {
    if formula.num_vars() > MAX_SAT_VARS {
        return Ok(None);
    }
    count_sat(formula).map(Some)
}

/// Gadget whose distinguished player can lose power by deleting at most `k`
/// players exactly when some prefix of length `k` leaves at most half of its
/// completions satisfying.
pub fn build_decrease(formula: &CnfFormula, k: usize, strict: bool) -> Result<ControlInstance> {
    let n = formula.num_vars();
    check_k(k, n, strict)?;
    let chain = ChainWeights::for_decrease(k, n);
    let mut s = skeleton(formula, k, &chain);
    let pre = s.pre.clone();
    let a = &mut s.assembly;
    for i in 1..=k {
        for j in 0..=k + 1 {
            for l in 1..=k {
                a.heavy(GroupLabel::S(None), pair(&pre, i) + &chain.y * j + &chain.z * l);
            }
        }
    }
    for i in 1..=k {
        for j in 0..=n {
            for l in 1..=k {
                a.heavy(GroupLabel::T(None), pair(&pre, i) + &chain.y_prime * j + &chain.z_prime * l);
            }
        }
    }
    for i in 1..=k {
        for j in 0..=k + 1 {
            a.heavy(GroupLabel::U(None), &chain.y_star * j + &chain.z_star[i - 1]);
        }
    }
    for i in 1..=k {
        for j in 0..=n {
            a.heavy(GroupLabel::V(None), &chain.y_star_star * j + &chain.z_star[i - 1]);
        }
    }
    chain_players(a, &chain, [k, 2 * k, k + 1, n, k + 1, n, k + 1, k + 1]);
    let blocks = chain_blocks(&s, &chain);
    let info = GadgetInfo {
        kind: GadgetKind::Decrease,
        k,
        n,
        m: formula.num_clauses(),
        ell: None,
        strict,
        t: pre.t,
        xi: model_count(formula)?,
    };
    finish(s, blocks, k, info)
}

/// The decrease gadget without `S`, `U`, `Y`, `Y*` and `Z`.
pub fn build_nonincrease(formula: &CnfFormula, k: usize, strict: bool) -> Result<ControlInstance> {
    let full = build_decrease(formula, k, strict)?;
    let groups = full.groups.as_ref().expect("gadgets carry groups");
    let dropped: Vec<usize> = (0..groups.len())
        .filter(|&p| {
            matches!(groups[p], GroupLabel::S(_) | GroupLabel::U(_) | GroupLabel::Y | GroupLabel::YStar | GroupLabel::Z)
        })
        .collect();
    let (mut inst, _) = full.delete(&dropped)?;
    if let Some(b) = inst.bands.as_mut() {
        b.blocks.retain(|blk| !blk.members.is_empty());
    }
    inst.goal = GadgetKind::Nonincrease.goal();
    if let Some(info) = inst.gadget.as_mut() {
        info.kind = GadgetKind::Nonincrease;
    }
    Ok(inst)
}

/// Gadget whose distinguished player keeps exactly its power after deleting
/// at most `k` players exactly when some prefix of length `k` has exactly
/// `ell` satisfying completions.
///
/// Strict mode requires `ell` not to be a power of two; see
/// [`super::exactify`] for the standard way to arrange that.
pub fn build_maintain(formula: &CnfFormula, k: usize, ell: u64, strict: bool) -> Result<ControlInstance> {
    let n = formula.num_vars();
    check_k(k, n, strict)?;
    let delta = DeltaDecomposition::new(ell)?;
    if strict && delta.levels() < 2 {
        return Err(Error::InvalidParameter(format!("ell = {ell} is a power of two")));
    }
    if delta.exponents[0] as usize > n {
        return Err(Error::InvalidParameter(format!("ell = {ell} needs more than {n} binary digits")));
    }
    let chain = ChainWeights::for_maintain(k, n, delta.ceiling());
    let mut s = skeleton(formula, k, &chain);
    let pre = s.pre.clone();
    let a = &mut s.assembly;
    let h = delta.levels();
    for lvl in 0..h {
        a.lights(GroupLabel::L(lvl + 1), &delta.level_weights[lvl], delta.exponents[lvl] as usize);
    }
    let v_steps: Vec<usize> = [0].into_iter().chain(0..=n + 2).chain([n + 2]).collect();
    for lvl in 0..h {
        let (d, dw) = (delta.exponents[lvl] as usize, &delta.level_weights[lvl]);
        let tag = Some(lvl + 1);
        for i in 1..=k {
            for j in 0..=k + 1 {
                for jp in 0..k {
                    for jpp in 0..=d {
                        a.heavy(GroupLabel::S(tag), pair(&pre, i) + &chain.y * j + &chain.z * jp + dw * jpp);
                    }
                }
            }
        }
        for i in 1..=k {
            for j in 0..=n + 2 {
                for jp in 0..k {
                    for jpp in 0..=d {
                        a.heavy(GroupLabel::T(tag), pair(&pre, i) + &chain.y_prime * j + &chain.z_prime * jp + dw * jpp);
                    }
                }
            }
        }
        for i in 1..=k {
            for j in 1..=k {
                for jp in 0..=d {
                    a.heavy(GroupLabel::U(tag), pair(&pre, i) + &chain.y_star * j + dw * jp);
                }
            }
        }
        for i in 1..=k {
            for &j in &v_steps {
                for jp in 0..=d {
                    a.heavy(GroupLabel::V(tag), &chain.y_star_star * j + &chain.z_star[i - 1] + dw * jp);
                }
            }
        }
    }
    chain_players(a, &chain, [k, 2 * k, k + 1, n + 2, k + 1, n + 2, k, k]);
    let mut blocks = chain_blocks(&s, &chain);
    for lvl in (0..h).rev() {
        let label = GroupLabel::L(lvl + 1);
        blocks.push(s.assembly.block(&label.to_string(), BlockKind::UniformChainLevel, label, delta.level_weights[lvl].clone()));
    }
    let info = GadgetInfo {
        kind: GadgetKind::Maintain,
        k,
        n,
        m: formula.num_clauses(),
        ell: Some(ell),
        strict,
        t: pre.t,
        xi: model_count(formula)?,
    };
    finish(s, blocks, k, info)
}
