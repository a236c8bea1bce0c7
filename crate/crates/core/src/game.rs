//! Weighted voting games, coalitions and exact index values.
//!
//! A game is a list of nonnegative big-integer weights plus a positive quota.
//! Players are identified by position. Every type here is immutable once
//! built; "surgery" such as deleting players returns a new game.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Game {
    weights: Vec<BigUint>,
    quota: BigUint,
}

impl Game {
    pub fn new(weights: Vec<BigUint>, quota: BigUint) -> Result<Self> {
        if quota.is_zero() {
            return Err(Error::InvalidGame("quota must be at least 1".into()));
        }
        Ok(Game { weights, quota })
    }

    /// Convenience constructor for small games.
    pub fn from_u64(weights: &[u64], quota: u64) -> Result<Self> {
        Game::new(weights.iter().map(|&w| BigUint::from(w)).collect(), BigUint::from(quota))
    }

    pub fn weights(&self) -> &[BigUint] {
        &self.weights
    }

    pub fn weight(&self, player: usize) -> &BigUint {
        &self.weights[player]
    }

    pub fn quota(&self) -> &BigUint {
        &self.quota
    }

    pub fn num_players(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> BigUint {
        self.weights.iter().sum()
    }

    pub fn check_player(&self, player: usize) -> Result<()> {
        if player < self.weights.len() {
            Ok(())
        } else {
            Err(Error::PlayerOutOfRange { player, players: self.weights.len() })
        }
    }

    /// Weights of every player except `player`, in index order.
    pub fn other_weights(&self, player: usize) -> Vec<&BigUint> {
        self.weights
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != player)
            .map(|(_, w)| w)
            .collect()
    }

    pub fn coalition_weight(&self, coalition: &Coalition) -> Result<BigUint> {
        coalition.validate(self)?;
        Ok(coalition.members().iter().map(|&j| &self.weights[j]).sum())
    }

    /// `v(T)`: 1 if the coalition meets the quota, else 0.
    pub fn characteristic(&self, coalition: &Coalition) -> Result<u8> {
        Ok(u8::from(self.coalition_weight(coalition)? >= self.quota))
    }

    /// Whether `player` turns the losing coalition `coalition` into a winning one.
    ///
    /// Uses the interval form `q - w_i <= w_T <= q - 1`.
    pub fn is_pivotal(&self, player: usize, coalition: &Coalition) -> Result<bool> {
        self.check_player(player)?;
        if coalition.contains(player) {
            return Err(Error::PlayerInCoalition(player));
        }
        let w_t = self.coalition_weight(coalition)?;
        Ok(self.in_pivot_window(player, &w_t))
    }

    /// Whether a coalition of weight `w_t` (not containing `player`) is one
    /// that `player` is pivotal for.
    pub fn in_pivot_window(&self, player: usize, w_t: &BigUint) -> bool {
        *w_t < self.quota && w_t + &self.weights[player] >= self.quota
    }

    /// Removes `victims` and returns the smaller game with the old-to-new index table.
    pub fn delete_players(&self, victims: &[usize]) -> Result<(Game, IndexRemap)> {
        let mut gone = vec![false; self.weights.len()];
        for &v in victims {
            self.check_player(v)?;
            gone[v] = true;
        }
        let mut map = Vec::with_capacity(self.weights.len());
        let mut weights = Vec::with_capacity(self.weights.len());
        for (j, w) in self.weights.iter().enumerate() {
            if gone[j] {
                map.push(None);
            } else {
                map.push(Some(weights.len()));
                weights.push(w.clone());
            }
        }
        Ok((Game { weights, quota: self.quota.clone() }, IndexRemap { map }))
    }

    pub fn weight_class_partition(&self) -> WeightClassPartition {
        WeightClassPartition::of_players(self, 0..self.num_players())
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ";{})", self.quota)
    }
}

/// Old index to new index, `None` for deleted players.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexRemap {
    map: Vec<Option<usize>>,
}

impl IndexRemap {
    pub fn identity(n: usize) -> Self {
        IndexRemap { map: (0..n).map(Some).collect() }
    }

    pub fn get(&self, old: usize) -> Option<usize> {
        self.map.get(old).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &IndexRemap) -> IndexRemap {
        IndexRemap { map: self.map.iter().map(|m| m.and_then(|i| next.get(i))).collect() }
    }
}

/// A set of player indices. Validity is checked against a concrete game on use.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Coalition {
    members: Vec<usize>,
}

impl Coalition {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Coalition { members }
    }

    pub fn empty() -> Self {
        Coalition::default()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, player: usize) -> bool {
        self.members.binary_search(&player).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn validate(&self, game: &Game) -> Result<()> {
        match self.members.last() {
            Some(&p) if p >= game.num_players() => {
                Err(Error::InvalidCoalition { player: p, players: game.num_players() })
            }
            _ => Ok(()),
        }
    }
}

/// The rational `pivot_count / 2^exponent`, kept unreduced.
///
/// Equality and ordering compare the rational values, so `1/2^1 == 2/2^2`.
#[derive(Clone, Debug)]
pub struct ExactIndex {
    pub pivot_count: BigUint,
    pub exponent: u64,
}

impl ExactIndex {
    pub fn new(pivot_count: BigUint, exponent: u64) -> Self {
        ExactIndex { pivot_count, exponent }
    }

    /// `count / 2^(players - 1)`; a single-player game has exponent 0.
    pub fn for_game(pivot_count: BigUint, players: usize) -> Self {
        ExactIndex::new(pivot_count, players.saturating_sub(1) as u64)
    }

    /// Approximate value as `(mantissa, decimal exponent)`, mantissa in [1, 10).
    /// Only meant for display.
    pub fn approx_decimal(&self) -> Option<(f64, i64)> {
        if self.pivot_count.is_zero() {
            return None;
        }
        let bits = self.pivot_count.bits();
        let shift = bits.saturating_sub(60);
        let top = (&self.pivot_count >> shift).to_f64().unwrap_or(f64::MAX);
        let log10 = top.log10() + (shift as f64 - self.exponent as f64) * std::f64::consts::LOG10_2;
        let exp = log10.floor();
        let mut mantissa = 10f64.powf(log10 - exp);
        let mut exp = exp as i64;
        if mantissa >= 10.0 {
            mantissa /= 10.0;
            exp += 1;
        }
        Some((mantissa, exp))
    }

    /// Six significant digits, trailing zeros trimmed.
    pub fn decimal_string(&self) -> String {
        let Some((mantissa, exp)) = self.approx_decimal() else {
            return "0".to_string();
        };
        if (-5..6).contains(&exp) {
            let decimals = (5 - exp).max(0) as usize;
            let v = mantissa * 10f64.powi(exp as i32);
            let s = format!("{v:.decimals$}");
            trim_zeros(&s)
        } else {
            format!("{}e{}", trim_zeros(&format!("{mantissa:.5}")), exp)
        }
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

impl PartialEq for ExactIndex {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExactIndex {}

impl PartialOrd for ExactIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        // a / 2^e1  vs  b / 2^e2   <=>   a * 2^e2  vs  b * 2^e1
        let lhs = &self.pivot_count << other.exponent;
        let rhs = &other.pivot_count << self.exponent;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for ExactIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.pivot_count, self.exponent)
    }
}

/// Players grouped by weight, heaviest class first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightClassPartition {
    classes: Vec<(BigUint, Vec<usize>)>,
}

impl WeightClassPartition {
    /// Partition of an arbitrary subset of players (used for restricted searches).
    pub fn of_players(game: &Game, players: impl IntoIterator<Item = usize>) -> Self {
        let mut by_weight: BTreeMap<&BigUint, Vec<usize>> = BTreeMap::new();
        for p in players {
            by_weight.entry(&game.weights[p]).or_default().push(p);
        }
        let classes = by_weight
            .into_iter()
            .rev()
            .map(|(w, mut members)| {
                members.sort_unstable();
                (w.clone(), members)
            })
            .collect();
        WeightClassPartition { classes }
    }

    pub fn classes(&self) -> &[(BigUint, Vec<usize>)] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, player: usize) -> Option<usize> {
        self.classes.iter().position(|(_, m)| m.contains(&player))
    }
}

/// On-disk form of a game: decimal strings only, so round trips are bit-exact.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GameDoc {
    pub weights: Vec<String>,
    pub quota: String,
}

impl From<&Game> for GameDoc {
    fn from(game: &Game) -> Self {
        GameDoc {
            weights: game.weights.iter().map(|w| w.to_str_radix(10)).collect(),
            quota: game.quota.to_str_radix(10),
        }
    }
}

impl TryFrom<&GameDoc> for Game {
    type Error = Error;

    fn try_from(doc: &GameDoc) -> Result<Game> {
        let weights = doc
            .weights
            .iter()
            .enumerate()
            .map(|(i, s)| parse_decimal(s).map_err(|e| Error::Format(format!("weights[{i}]: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let quota = parse_decimal(&doc.quota).map_err(|e| Error::Format(format!("quota: {e}")))?;
        Game::new(weights, quota)
    }
}

impl Game {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GameDoc::from(self)).expect("game document serializes")
    }

    pub fn from_json(text: &str) -> Result<Game> {
        let doc: GameDoc = serde_json::from_str(text)?;
        Game::try_from(&doc)
    }
}

/// Strict decimal: ASCII digits only, no sign, no exponent.
pub fn parse_decimal(s: &str) -> std::result::Result<BigUint, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{s:?} is not a decimal integer"));
    }
    BigUint::parse_bytes(s.as_bytes(), 10).ok_or_else(|| format!("{s:?} is not a decimal integer"))
}

/// `2^e` as a big integer.
pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn example1() -> Game {
        Game::from_u64(&[1, 2, 2, 2, 3, 3], 8).unwrap()
    }

    #[test]
    fn characteristic_on_example1() {
        let g = example1();
        assert_eq!(g.characteristic(&Coalition::new([4, 5, 1])).unwrap(), 1);
        assert_eq!(g.characteristic(&Coalition::new([4, 5, 0])).unwrap(), 0);
        assert_eq!(g.characteristic(&Coalition::empty()).unwrap(), 0);
        assert!(matches!(
            g.characteristic(&Coalition::new([6])),
            Err(Error::InvalidCoalition { player: 6, .. })
        ));
    }

    #[test]
    fn pivotality_on_example1() {
        let g = example1();
        assert!(g.is_pivotal(1, &Coalition::new([4, 5])).unwrap());
        assert!(!g.is_pivotal(1, &Coalition::new([4, 5, 0, 2])).unwrap());
        assert!(matches!(g.is_pivotal(1, &Coalition::new([1, 4])), Err(Error::PlayerInCoalition(1))));
    }

    #[test]
    fn zero_weight_player_is_never_pivotal() {
        let g = Game::from_u64(&[0, 3, 5], 5).unwrap();
        for mask in 0..4u32 {
            let t = Coalition::new((0..2).filter(|b| mask >> b & 1 == 1).map(|b| b + 1));
            assert!(!g.is_pivotal(0, &t).unwrap());
        }
    }

    #[test]
    fn deletion_matches_example1() {
        let g = example1();
        let (h, remap) = g.delete_players(&[5]).unwrap();
        assert_eq!(h, Game::from_u64(&[1, 2, 2, 2, 3], 8).unwrap());
        assert_eq!(remap.get(5), None);
        assert_eq!(remap.get(4), Some(4));
        let (h, _) = g.delete_players(&[3]).unwrap();
        assert_eq!(h, Game::from_u64(&[1, 2, 2, 3, 3], 8).unwrap());
        let (h, remap) = g.delete_players(&[]).unwrap();
        assert_eq!(h, g);
        assert_eq!(remap, IndexRemap::identity(6));
    }

    #[test]
    fn weight_classes() {
        let p = example1().weight_class_partition();
        let got: Vec<(u64, Vec<usize>)> =
            p.classes().iter().map(|(w, m)| (w.to_u64().unwrap(), m.clone())).collect();
        assert_eq!(got, vec![(3, vec![4, 5]), (2, vec![1, 2, 3]), (1, vec![0])]);
        assert_eq!(Game::from_u64(&[5, 4, 3], 1).unwrap().weight_class_partition().len(), 3);
        assert_eq!(Game::from_u64(&[7, 7, 7, 7], 1).unwrap().weight_class_partition().len(), 1);
    }

    #[test]
    fn zero_quota_rejected() {
        assert!(Game::from_u64(&[1], 0).is_err());
    }

    #[test]
    fn exact_index_compares_values() {
        let a = ExactIndex::new(8u32.into(), 5);
        let b = ExactIndex::new(1u32.into(), 2);
        let c = ExactIndex::new(3u32.into(), 4);
        assert_eq!(a, b);
        assert!(c < a);
        assert_eq!(a.to_string(), "8/2^5");
        assert_eq!(a.decimal_string(), "0.25");
        assert_eq!(ExactIndex::new(0u32.into(), 3).decimal_string(), "0");
        assert_eq!(ExactIndex::new(11904u32.into(), 317).decimal_string(), "4.45845e-92");
    }

    #[test]
    fn json_round_trip_is_exact() {
        let big = BigUint::parse_bytes(b"123456789012345678901234567890123456789", 10).unwrap();
        let g = Game::new(vec![big.clone(), 0u32.into(), 7u32.into()], big + 1u32).unwrap();
        assert_eq!(Game::from_json(&g.to_json()).unwrap(), g);
        assert!(Game::from_json(r#"{"weights":["1e3"],"quota":"1"}"#).is_err());
        assert!(Game::from_json(r#"{"weights":["-1"],"quota":"1"}"#).is_err());
    }

    fn game_strategy() -> impl Strategy<Value = Game> {
        (prop::collection::vec(0u64..40, 1..10), 1u64..120)
            .prop_map(|(w, q)| Game::from_u64(&w, q).unwrap())
    }

    proptest! {
        #[test]
        fn characteristic_is_monotone(g in game_strategy(), a in any::<u32>(), b in any::<u32>()) {
            let n = g.num_players();
            let small = Coalition::new((0..n).filter(|&j| (a & b) >> j & 1 == 1));
            let large = Coalition::new((0..n).filter(|&j| a >> j & 1 == 1));
            prop_assert!(g.characteristic(&small).unwrap() <= g.characteristic(&large).unwrap());
        }

        #[test]
        fn deletion_composes(g in game_strategy(), m1 in any::<u16>(), m2 in any::<u16>()) {
            let n = g.num_players();
            let first: Vec<usize> = (0..n).filter(|&j| m1 >> j & 1 == 1).collect();
            let (g1, r1) = g.delete_players(&first).unwrap();
            // second victims named in original indices, translated through r1
            let second: Vec<usize> = (0..n).filter(|&j| m2 >> j & 1 == 1 && r1.get(j).is_some()).collect();
            let second_new: Vec<usize> = second.iter().map(|&j| r1.get(j).unwrap()).collect();
            let (g2, r2) = g1.delete_players(&second_new).unwrap();
            let all: Vec<usize> = first.iter().chain(&second).copied().collect();
            let (g12, r12) = g.delete_players(&all).unwrap();
            prop_assert_eq!(g2, g12);
            prop_assert_eq!(r1.then(&r2), r12);
        }

        #[test]
        fn index_order_matches_rationals(a in 0u64..5000, ea in 0u64..12, b in 0u64..5000, eb in 0u64..12) {
            let x = ExactIndex::new(a.into(), ea);
            let y = ExactIndex::new(b.into(), eb);
            let lhs = a as u128 * (1u128 << eb);
            let rhs = b as u128 * (1u128 << ea);
            prop_assert_eq!(x.cmp(&y), lhs.cmp(&rhs));
        }
    }
}
