//! Structured pivot counting for gadget games.
//!
//! A banded game splits the players other than the distinguished one into
//! *heavy* players, any two of which overshoot the quota, and *light* blocks
//! whose weights live in non-overlapping numeric bands: the combined weight
//! of every block below a block is smaller than that block's granularity.
//! Every pivotal coalition then holds exactly one heavy player, and the
//! residual `q - 1 - w_h` splits into one value per block in exactly one way,
//! so the count factorizes into a product of per-block counts.
//!
//! The band layout is produced by the gadget builders; nothing here tries to
//! infer it from raw weights.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{Game, IndexRemap};

/// Enumerable blocks are tabulated in full, so they must stay small.
pub const MAX_ENUMERABLE_MEMBERS: usize = 24;

/// Largest pivot window (number of residual values) handled point by point.
pub const MAX_WINDOW: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BlockKind {
    Enumerable,
    UniformChainLevel,
    Superincreasing,
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockKind::Enumerable => "ENUMERABLE",
            BlockKind::UniformChainLevel => "UNIFORM_CHAIN_LEVEL",
            BlockKind::Superincreasing => "SUPERINCREASING",
        })
    }
}

/// Index-only description of one light block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    pub label: String,
    pub kind: BlockKind,
    pub members: Vec<usize>,
    pub granularity: BigUint,
}

/// Band metadata for a game: which players are heavy, and the light blocks
/// from most to least significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandLayout {
    pub distinguished: usize,
    pub heavy: Vec<usize>,
    pub blocks: Vec<BlockSpec>,
}

impl BandLayout {
    /// The layout of the game after a deletion described by `remap`.
    pub fn after_deletion(&self, remap: &IndexRemap) -> Result<BandLayout> {
        let distinguished = remap
            .get(self.distinguished)
            .ok_or_else(|| Error::Structural("the distinguished player was deleted".into()))?;
        let keep = |v: &[usize]| v.iter().filter_map(|&p| remap.get(p)).collect::<Vec<_>>();
        Ok(BandLayout {
            distinguished,
            heavy: keep(&self.heavy),
            blocks: self
                .blocks
                .iter()
                .map(|b| BlockSpec {
                    label: b.label.clone(),
                    kind: b.kind,
                    members: keep(&b.members),
                    granularity: b.granularity.clone(),
                })
                .collect(),
        })
    }
}

/// A light block with its weights resolved against a concrete game.
#[derive(Debug)]
pub struct LightBlock {
    label: String,
    kind: BlockKind,
    members: Vec<usize>,
    /// Member weights; ascending for superincreasing blocks.
    weights: Vec<BigUint>,
    granularity: BigUint,
    max_sum: BigUint,
    table: OnceLock<HashMap<BigUint, u64>>,
}

impl LightBlock {
    pub fn new(
        label: impl Into<String>,
        kind: BlockKind,
        members: Vec<usize>,
        weights: Vec<BigUint>,
        granularity: BigUint,
    ) -> Result<Self> {
        let label = label.into();
        if members.len() != weights.len() {
            return Err(Error::Structural(format!("block {label}: members and weights differ in length")));
        }
        if granularity.is_zero() {
            return Err(Error::Structural(format!("block {label}: granularity must be positive")));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_multiple_of(&granularity)) {
            return Err(Error::Structural(format!(
                "block {label}: weight {w} is not a multiple of granularity {granularity}"
            )));
        }
        let mut pairs: Vec<(usize, BigUint)> = members.into_iter().zip(weights).collect();
        match kind {
            BlockKind::Enumerable => {
                if pairs.len() > MAX_ENUMERABLE_MEMBERS {
                    return Err(Error::Structural(format!(
                        "block {label}: {} members exceed the enumerable limit {MAX_ENUMERABLE_MEMBERS}",
                        pairs.len()
                    )));
                }
            }
            BlockKind::UniformChainLevel => {
                if pairs.windows(2).any(|p| p[0].1 != p[1].1) {
                    return Err(Error::Structural(format!("block {label}: uniform level has unequal weights")));
                }
            }
            BlockKind::Superincreasing => {
                pairs.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
                let mut below = BigUint::zero();
                for (p, w) in &pairs {
                    if *w <= below {
                        return Err(Error::Structural(format!(
                            "block {label}: weight {w} of player {p} does not exceed the sum {below} of smaller members"
                        )));
                    }
                    below += w;
                }
            }
        }
        let max_sum = pairs.iter().map(|(_, w)| w).sum();
        let (members, weights) = pairs.into_iter().unzip();
        Ok(LightBlock { label, kind, members, weights, granularity, max_sum, table: OnceLock::new() })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> BlockKind {
        self.kind
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn granularity(&self) -> &BigUint {
        &self.granularity
    }

    pub fn max_sum(&self) -> &BigUint {
        &self.max_sum
    }

    /// Number of member subsets whose weights sum to `target`.
    ///
    /// `target` must be a multiple of the granularity and at most `max_sum`.
    pub fn count(&self, target: &BigUint) -> Result<BigUint> {
        if !target.is_multiple_of(&self.granularity) || target > &self.max_sum {
            return Err(Error::InvalidParameter(format!(
                "block {}: target {target} is not a multiple of {} in [0, {}]",
                self.label, self.granularity, self.max_sum
            )));
        }
        Ok(match self.kind {
            BlockKind::Enumerable => BigUint::from(self.table().get(target).copied().unwrap_or(0)),
            BlockKind::UniformChainLevel => match self.weights.first() {
                None => BigUint::from(u8::from(target.is_zero())),
                Some(unit) => {
                    let (m, rem) = target.div_rem(unit);
                    if !rem.is_zero() {
                        BigUint::zero()
                    } else {
                        let m = m.to_usize().expect("bounded by member count");
                        binomial(self.weights.len(), m)
                    }
                }
            },
            BlockKind::Superincreasing => {
                let mut rest = target.clone();
                for w in self.weights.iter().rev() {
                    if *w <= rest {
                        rest -= w;
                    }
                }
                BigUint::from(u8::from(rest.is_zero()))
            }
        })
    }

    /// Sparse `sum -> count` table over all member subsets, built once.
    fn table(&self) -> &HashMap<BigUint, u64> {
        self.table.get_or_init(|| {
            let mut table: HashMap<BigUint, u64> = HashMap::from([(BigUint::zero(), 1)]);
            for w in &self.weights {
                let shifted: Vec<(BigUint, u64)> = table.iter().map(|(s, &c)| (s + w, c)).collect();
                for (s, c) in shifted {
                    *table.entry(s).or_insert(0) += c;
                }
            }
            table
        })
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Per-block targets for one residual, most significant block first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub values: Vec<BigUint>,
}

impl Decomposition {
    pub fn recompose(&self) -> BigUint {
        self.values.iter().sum()
    }
}

/// Validated band structure over a borrowed game.
#[derive(Debug)]
pub struct BandSystem<'g> {
    game: &'g Game,
    distinguished: usize,
    heavy: Vec<usize>,
    blocks: Vec<LightBlock>,
}

impl<'g> BandSystem<'g> {
    /// Resolves `layout` against `game` and checks every structural condition:
    /// the partition of the players, pairwise heavy exclusion, the no-carry
    /// chain between blocks, and that light players alone never reach the
    /// pivot window.
    pub fn new(game: &'g Game, layout: &BandLayout) -> Result<Self> {
        let n = game.num_players();
        game.check_player(layout.distinguished)?;
        let mut seen = vec![false; n];
        let mut claim = |p: usize, what: &str| -> Result<()> {
            if p >= n {
                return Err(Error::Structural(format!("{what} player {p} is out of range ({n} players)")));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::Structural(format!("player {p} is claimed twice")));
            }
            Ok(())
        };
        claim(layout.distinguished, "distinguished")?;
        for &h in &layout.heavy {
            claim(h, "heavy")?;
        }
        for b in &layout.blocks {
            for &p in &b.members {
                claim(p, &format!("block {}", b.label))?;
            }
        }
        if let Some(p) = seen.iter().position(|s| !s) {
            return Err(Error::Structural(format!("player {p} is neither heavy, light nor distinguished")));
        }

        let blocks = layout
            .blocks
            .iter()
            .map(|b| {
                let weights = b.members.iter().map(|&p| game.weight(p).clone()).collect();
                LightBlock::new(b.label.clone(), b.kind, b.members.clone(), weights, b.granularity.clone())
            })
            .collect::<Result<Vec<_>>>()?;

        // no-carry: everything below a block sums to less than its granularity
        let mut below = BigUint::zero();
        for i in (0..blocks.len()).rev() {
            if below >= blocks[i].granularity {
                let lower: Vec<&str> = blocks[i + 1..].iter().map(|b| b.label()).collect();
                return Err(Error::NoCarry { upper: blocks[i].label.clone(), lower: lower.join(",") });
            }
            below += &blocks[i].max_sum;
        }

        let q = game.quota();
        let mut lightest: Vec<&BigUint> = layout.heavy.iter().map(|&h| game.weight(h)).collect();
        lightest.sort();
        if lightest.len() >= 2 && lightest[0] + lightest[1] <= *q {
            return Err(Error::Structural(format!(
                "two heavy players weigh {} + {} <= quota {q}",
                lightest[0], lightest[1]
            )));
        }
        let w_d = game.weight(layout.distinguished);
        if w_d < q && below + w_d >= *q {
            return Err(Error::Structural("light players alone can reach the pivot window".into()));
        }
        if w_d >= q && !lightest.is_empty() {
            return Err(Error::Structural("distinguished player outweighs the quota".into()));
        }

        Ok(BandSystem { game, distinguished: layout.distinguished, heavy: layout.heavy.clone(), blocks })
    }

    pub fn game(&self) -> &Game {
        self.game
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    pub fn heavy(&self) -> &[usize] {
        &self.heavy
    }

    pub fn blocks(&self) -> &[LightBlock] {
        &self.blocks
    }

    pub fn light_total(&self) -> BigUint {
        self.blocks.iter().map(|b| &b.max_sum).sum()
    }

    /// Splits `residual` into one value per block, or `None` when some block
    /// would need a value it cannot reach.
    ///
    /// Because the blocks below any block sum to less than its granularity,
    /// the part owned by lower blocks is exactly `residual mod granularity`.
    pub fn decompose(&self, residual: &BigUint) -> Option<Decomposition> {
        let mut rest = residual.clone();
        let mut values = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let low = &rest % &b.granularity;
            let value = &rest - &low;
            if value > b.max_sum {
                return None;
            }
            values.push(value);
            rest = low;
        }
        rest.is_zero().then_some(Decomposition { values })
    }

    /// Light subsets summing exactly to `residual`, as a product of block counts.
    pub fn count_residual(&self, residual: &BigUint) -> BigUint {
        let Some(d) = self.decompose(residual) else {
            return BigUint::zero();
        };
        let mut product = BigUint::one();
        for (b, v) in self.blocks.iter().zip(&d.values) {
            product *= b.count(v).expect("decomposition respects block bounds");
            if product.is_zero() {
                break;
            }
        }
        product
    }

    fn window(&self) -> Result<Option<(BigUint, u64)>> {
        let q = self.game.quota();
        let w = self.game.weight(self.distinguished);
        if w.is_zero() {
            return Ok(None);
        }
        let lo = if w >= q { BigUint::zero() } else { q - w };
        let width = (q - &lo).to_u64().filter(|&v| v <= MAX_WINDOW).ok_or_else(|| {
            Error::Structural(format!("pivot window of width {} is too wide for point-wise counting", q - &lo))
        })?;
        Ok(Some((lo, width)))
    }

    /// Pivotal coalitions containing heavy player `h`.
    pub fn count_for_heavy(&self, h: usize) -> Result<BigUint> {
        let Some((lo, width)) = self.window()? else {
            return Ok(BigUint::zero());
        };
        let w_h = self.game.weight(h);
        let mut total = BigUint::zero();
        for offset in 0..width {
            let target = &lo + offset;
            if *w_h <= target {
                total += self.count_residual(&(target - w_h));
            }
        }
        Ok(total)
    }

    /// Per-heavy-player counts, in layout order.
    pub fn breakdown(&self) -> Result<Vec<(usize, BigUint)>> {
        for b in &self.blocks {
            if b.kind == BlockKind::Enumerable {
                b.table();
            }
        }
        self.heavy.par_iter().map(|&h| self.count_for_heavy(h).map(|c| (h, c))).collect()
    }

    /// `η(G, distinguished)`.
    ///
    /// The coalitions without any heavy player contribute nothing: light
    /// players alone stay below the window, which was checked in [`BandSystem::new`].
    pub fn pivot_count(&self) -> Result<BigUint> {
        Ok(self.breakdown()?.into_iter().map(|(_, c)| c).sum())
    }
}

/// Free-function form of [`BandSystem::decompose`].
pub fn decompose_target(bands: &BandSystem<'_>, residual: &BigUint) -> Option<Decomposition> {
    bands.decompose(residual)
}

/// Free-function form of [`LightBlock::count`].
pub fn count_block(block: &LightBlock, target: &BigUint) -> Result<BigUint> {
    block.count(target)
}

/// `η` for the distinguished player of a banded game.
pub fn pivot_count_layered(bands: &BandSystem<'_>, player: usize) -> Result<BigUint> {
    if player != bands.distinguished {
        return Err(Error::Structural(format!(
            "player {player} is not the distinguished player {}",
            bands.distinguished
        )));
    }
    bands.pivot_count()
}

/// Players that appear in more than one block of `layout`, if any.
pub fn overlapping_members(layout: &BandLayout) -> Vec<usize> {
    let mut seen = HashSet::new();
    let mut dup = Vec::new();
    for p in layout.blocks.iter().flat_map(|b| &b.members).chain(&layout.heavy) {
        if !seen.insert(*p) {
            dup.push(*p);
        }
    }
    dup
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn uniform_level_counts_binomials() {
        let b = LightBlock::new("Y", BlockKind::UniformChainLevel, (0..5).collect(), vec![big(45); 5], big(45)).unwrap();
        assert_eq!(b.count(&big(90)).unwrap(), big(10));
        assert_eq!(b.count(&big(0)).unwrap(), big(1));
        assert_eq!(b.count(&big(225)).unwrap(), big(1));
        assert!(b.count(&big(270)).is_err());
        assert!(b.count(&big(50)).is_err());
    }

    #[test]
    fn superincreasing_has_unique_representations() {
        // Z* with k = 4: z*_1 = 1470 and each next = z*_1 + all previous
        let z1 = 1470u64;
        let z: Vec<u64> = vec![z1, 2 * z1, 4 * z1, 8 * z1];
        let b = LightBlock::new("Z*", BlockKind::Superincreasing, vec![3, 1, 2, 0], z.iter().map(|&v| big(v)).collect(), big(1))
            .unwrap();
        assert_eq!(b.count(&big(z[1])).unwrap(), big(1));
        assert_eq!(b.count(&big(z1 + 1)).unwrap(), big(0));
        assert_eq!(b.count(&big(z[0] + z[3])).unwrap(), big(1));
        assert!(LightBlock::new("bad", BlockKind::Superincreasing, vec![0, 1, 2], vec![big(1), big(2), big(3)], big(1)).is_err());
    }

    #[test]
    fn enumerable_block_tabulates_multiplicities() {
        let b = LightBlock::new("E", BlockKind::Enumerable, vec![0, 1, 2, 3], vec![big(10), big(20), big(30), big(10)], big(10))
            .unwrap();
        assert_eq!(b.count(&big(30)).unwrap(), big(3));
        assert_eq!(b.count(&big(0)).unwrap(), big(1));
        assert_eq!(b.count(&big(70)).unwrap(), big(1));
    }

    /// Distinguished 0 (weight 1), heavies 1..=2, blocks [X'(3,3), X(1,1)].
    fn toy() -> (Game, BandLayout) {
        let q = 100u64;
        let game = Game::from_u64(&[1, q - 1 - 4, q - 1 - 3, 3, 3, 1], q).unwrap();
        let layout = BandLayout {
            distinguished: 0,
            heavy: vec![1, 2],
            blocks: vec![
                BlockSpec { label: "X'".into(), kind: BlockKind::UniformChainLevel, members: vec![3, 4], granularity: big(3) },
                BlockSpec { label: "X".into(), kind: BlockKind::UniformChainLevel, members: vec![5], granularity: big(1) },
            ],
        };
        (game, layout)
    }

    #[test]
    fn toy_counts_match_definition() {
        let (game, layout) = toy();
        let bands = BandSystem::new(&game, &layout).unwrap();
        assert_eq!(decompose_target(&bands, &big(0)).unwrap().values, vec![big(0), big(0)]);
        let total = bands.light_total();
        assert_eq!(bands.decompose(&total).unwrap().values, vec![big(6), big(1)]);
        assert_eq!(bands.decompose(&big(2)), None);
        // heavy 1 needs 4 = 3 + 1 (2 ways), heavy 2 needs 3 (2 ways)
        let layered = pivot_count_layered(&bands, 0).unwrap();
        assert_eq!(layered, big(4));
        let mitm = crate::engines::pivot_count_mitm(&game, 0, &Default::default()).unwrap();
        assert_eq!(layered, mitm);
        assert!(pivot_count_layered(&bands, 1).is_err());
    }

    #[test]
    fn structural_violations_are_reported() {
        let (game, mut layout) = toy();
        layout.blocks[0].granularity = big(1);
        assert!(matches!(BandSystem::new(&game, &layout), Err(Error::NoCarry { .. })));

        let (game, mut layout) = toy();
        layout.heavy.pop();
        assert!(matches!(BandSystem::new(&game, &layout), Err(Error::Structural(_))));

        let (_, layout) = toy();
        let light_heavy = Game::from_u64(&[1, 40, 40, 3, 3, 1], 100).unwrap();
        assert!(matches!(BandSystem::new(&light_heavy, &layout), Err(Error::Structural(_))));
        assert!(overlapping_members(&layout).is_empty());
    }

    #[test]
    fn deletion_keeps_layout_valid() {
        let (game, layout) = toy();
        let (smaller, remap) = game.delete_players(&[4, 2]).unwrap();
        let shrunk = layout.after_deletion(&remap).unwrap();
        let bands = BandSystem::new(&smaller, &shrunk).unwrap();
        let mitm = crate::engines::pivot_count_mitm(&smaller, 0, &Default::default()).unwrap();
        assert_eq!(bands.pivot_count().unwrap(), mitm);
        let (_, remap) = game.delete_players(&[0]).unwrap();
        assert!(layout.after_deletion(&remap).is_err());
    }
}
