use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::closed_form::CaseCounts;
use crate::error::{Error, Result};
use crate::formula::Assignment;
use crate::game::{parse_decimal, ExactIndex, Game, GameDoc, IndexRemap};
use crate::layered::{BandLayout, BandSystem, BlockKind, BlockSpec};

/// Which group of a gadget a player belongs to.
///
/// The heavy families of the maintain gadget and the `L` groups carry a
/// level index; serialized as `S_2`, `L_1`, and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupLabel {
    Distinguished,
    A,
    B,
    C,
    D,
    E,
    F,
    S(Option<usize>),
    T(Option<usize>),
    U(Option<usize>),
    V(Option<usize>),
    L(usize),
    X,
    XPrime,
    Y,
    YPrime,
    YStar,
    YStarStar,
    Z,
    ZPrime,
    ZStar,
}

impl GroupLabel {
    /// Case number (1 to 6) for heavy groups.
    pub fn case(self) -> Option<usize> {
        match self {
            GroupLabel::D => Some(1),
            GroupLabel::F => Some(2),
            GroupLabel::S(_) => Some(3),
            GroupLabel::T(_) => Some(4),
            GroupLabel::U(_) => Some(5),
            GroupLabel::V(_) => Some(6),
            _ => None,
        }
    }

    /// The label with any level index dropped, e.g. `S_2` to `S`.
    pub fn family(self) -> GroupLabel {
        match self {
            GroupLabel::S(_) => GroupLabel::S(None),
            GroupLabel::T(_) => GroupLabel::T(None),
            GroupLabel::U(_) => GroupLabel::U(None),
            GroupLabel::V(_) => GroupLabel::V(None),
            other => other,
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let indexed = |f: &mut fmt::Formatter<'_>, name: &str, level: &Option<usize>| match level {
            Some(i) => write!(f, "{name}_{i}"),
            None => f.write_str(name),
        };
        match self {
            GroupLabel::Distinguished => f.write_str("player-1"),
            GroupLabel::A => f.write_str("A"),
            GroupLabel::B => f.write_str("B"),
            GroupLabel::C => f.write_str("C"),
            GroupLabel::D => f.write_str("D"),
            GroupLabel::E => f.write_str("E"),
            GroupLabel::F => f.write_str("F"),
            GroupLabel::S(i) => indexed(f, "S", i),
            GroupLabel::T(i) => indexed(f, "T", i),
            GroupLabel::U(i) => indexed(f, "U", i),
            GroupLabel::V(i) => indexed(f, "V", i),
            GroupLabel::L(i) => write!(f, "L_{i}"),
            GroupLabel::X => f.write_str("X"),
            GroupLabel::XPrime => f.write_str("X'"),
            GroupLabel::Y => f.write_str("Y"),
            GroupLabel::YPrime => f.write_str("Y'"),
            GroupLabel::YStar => f.write_str("Y*"),
            GroupLabel::YStarStar => f.write_str("Y**"),
            GroupLabel::Z => f.write_str("Z"),
            GroupLabel::ZPrime => f.write_str("Z'"),
            GroupLabel::ZStar => f.write_str("Z*"),
        }
    }
}

impl FromStr for GroupLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Format(format!("unknown group label `{s}`"));
        let (name, level) = match s.split_once('_') {
            Some((name, idx)) => (name, Some(idx.parse::<usize>().map_err(|_| bad())?)),
            None => (s, None),
        };
        Ok(match (name, level) {
            ("player-1", None) => GroupLabel::Distinguished,
            ("A", None) => GroupLabel::A,
            ("B", None) => GroupLabel::B,
            ("C", None) => GroupLabel::C,
            ("D", None) => GroupLabel::D,
            ("E", None) => GroupLabel::E,
            ("F", None) => GroupLabel::F,
            ("S", l) => GroupLabel::S(l),
            ("T", l) => GroupLabel::T(l),
            ("U", l) => GroupLabel::U(l),
            ("V", l) => GroupLabel::V(l),
            ("L", Some(i)) => GroupLabel::L(i),
            ("X", None) => GroupLabel::X,
            ("X'", None) => GroupLabel::XPrime,
            ("Y", None) => GroupLabel::Y,
            ("Y'", None) => GroupLabel::YPrime,
            ("Y*", None) => GroupLabel::YStar,
            ("Y**", None) => GroupLabel::YStarStar,
            ("Z", None) => GroupLabel::Z,
            ("Z'", None) => GroupLabel::ZPrime,
            ("Z*", None) => GroupLabel::ZStar,
            _ => return Err(bad()),
        })
    }
}

impl Serialize for GroupLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// How the index of the distinguished player should move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Goal {
    Decrease,
    Nonincrease,
    Maintain,
    Increase,
    Nondecrease,
}

impl Goal {
    pub const ALL: [Goal; 5] = [Goal::Decrease, Goal::Nonincrease, Goal::Maintain, Goal::Increase, Goal::Nondecrease];

    pub fn holds(self, before: &ExactIndex, after: &ExactIndex) -> bool {
        match self {
            Goal::Decrease => after < before,
            Goal::Nonincrease => after <= before,
            Goal::Maintain => after == before,
            Goal::Increase => after > before,
            Goal::Nondecrease => after >= before,
        }
    }

    /// Goals that an empty deletion would satisfy trivially; those require
    /// at least one deleted player.
    pub fn needs_deletion(self) -> bool {
        matches!(self, Goal::Nonincrease | Goal::Maintain | Goal::Nondecrease)
    }

    pub fn name(self) -> &'static str {
        match self {
            Goal::Decrease => "DECREASE",
            Goal::Nonincrease => "NONINCREASE",
            Goal::Maintain => "MAINTAIN",
            Goal::Increase => "INCREASE",
            Goal::Nondecrease => "NONDECREASE",
        }
    }
}

impl fmt::Display for Goal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Goal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Goal::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown goal `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GadgetKind {
    Decrease,
    Nonincrease,
    Maintain,
}

impl GadgetKind {
    pub fn goal(self) -> Goal {
        match self {
            GadgetKind::Decrease => Goal::Decrease,
            GadgetKind::Nonincrease => Goal::Nonincrease,
            GadgetKind::Maintain => Goal::Maintain,
        }
    }
}

impl FromStr for GadgetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "decrease" => Ok(GadgetKind::Decrease),
            "nonincrease" => Ok(GadgetKind::Nonincrease),
            "maintain" => Ok(GadgetKind::Maintain),
            _ => Err(Error::InvalidParameter(format!("unknown gadget kind `{s}`"))),
        }
    }
}

/// Parameters a gadget was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetInfo {
    pub kind: GadgetKind,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<u64>,
    /// False for instances outside `4 <= k < n`.
    pub strict: bool,
    pub t: u32,
    /// `#SAT` of the source formula, when it was small enough to count.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<u64>,
}

/// A control-by-deleting-players question.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ControlInstance {
    pub game: Game,
    pub distinguished: usize,
    pub budget: usize,
    pub goal: Goal,
    /// Group label per player, for gadget instances.
    pub groups: Option<Vec<GroupLabel>>,
    pub bands: Option<BandLayout>,
    pub gadget: Option<GadgetInfo>,
}

impl ControlInstance {
    pub fn new(game: Game, distinguished: usize, budget: usize, goal: Goal) -> Result<Self> {
        game.check_player(distinguished)?;
        Ok(ControlInstance { game, distinguished, budget, goal, groups: None, bands: None, gadget: None })
    }

    pub fn num_players(&self) -> usize {
        self.game.num_players()
    }

    /// Players labelled `label` (levels ignored when `label` has none), in index order.
    pub fn members_of(&self, label: GroupLabel) -> Result<Vec<usize>> {
        let groups = self.groups.as_ref().ok_or(Error::MissingProvenance("group"))?;
        let exact = !matches!(label, GroupLabel::S(None) | GroupLabel::T(None) | GroupLabel::U(None) | GroupLabel::V(None));
        Ok((0..groups.len())
            .filter(|&p| if exact { groups[p] == label } else { groups[p].family() == label })
            .collect())
    }

    /// The instance after deleting `victims`, with groups and bands remapped.
    pub fn delete(&self, victims: &[usize]) -> Result<(ControlInstance, IndexRemap)> {
        if victims.contains(&self.distinguished) {
            return Err(Error::InvalidParameter("the distinguished player cannot be deleted".into()));
        }
        let (game, remap) = self.game.delete_players(victims)?;
        let distinguished = remap.get(self.distinguished).expect("distinguished survives");
        let groups = self.groups.as_ref().map(|g| {
            (0..g.len()).filter(|&p| remap.get(p).is_some()).map(|p| g[p]).collect()
        });
        let bands = self.bands.as_ref().map(|b| b.after_deletion(&remap)).transpose()?;
        Ok((
            ControlInstance { game, distinguished, budget: self.budget, goal: self.goal, groups, bands, gadget: self.gadget.clone() },
            remap,
        ))
    }

    pub fn band_system(&self) -> Result<BandSystem<'_>> {
        let layout = self.bands.as_ref().ok_or(Error::MissingProvenance("band"))?;
        BandSystem::new(&self.game, layout)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&InstanceDoc::from(self)).expect("instance document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: InstanceDoc = serde_json::from_str(text)?;
        ControlInstance::try_from(doc)
    }
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    #[serde(flatten)]
    game: GameDoc,
    distinguished: usize,
    budget: usize,
    goal: Goal,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    groups: Option<Vec<GroupLabel>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bands: Option<BandsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gadget: Option<GadgetInfo>,
}

#[derive(Serialize, Deserialize)]
struct BandsDoc {
    heavy: Vec<usize>,
    blocks: Vec<BlockDoc>,
}

#[derive(Serialize, Deserialize)]
struct BlockDoc {
    label: String,
    kind: BlockKind,
    members: Vec<usize>,
    granularity: String,
}

impl From<&ControlInstance> for InstanceDoc {
    fn from(inst: &ControlInstance) -> Self {
        InstanceDoc {
            game: GameDoc::from(&inst.game),
            distinguished: inst.distinguished,
            budget: inst.budget,
            goal: inst.goal,
            groups: inst.groups.clone(),
            bands: inst.bands.as_ref().map(|b| BandsDoc {
                heavy: b.heavy.clone(),
                blocks: b
                    .blocks
                    .iter()
                    .map(|s| BlockDoc {
                        label: s.label.clone(),
                        kind: s.kind,
                        members: s.members.clone(),
                        granularity: s.granularity.to_str_radix(10),
                    })
                    .collect(),
            }),
            gadget: inst.gadget.clone(),
        }
    }
}

impl TryFrom<InstanceDoc> for ControlInstance {
    type Error = Error;

    fn try_from(doc: InstanceDoc) -> Result<Self> {
        let game = Game::try_from(&doc.game)?;
        game.check_player(doc.distinguished)?;
        if let Some(g) = &doc.groups {
            if g.len() != game.num_players() {
                return Err(Error::Format(format!("{} group labels for {} players", g.len(), game.num_players())));
            }
        }
        let bands = doc
            .bands
            .map(|b| -> Result<BandLayout> {
                let blocks = b
                    .blocks
                    .into_iter()
                    .map(|s| {
                        let granularity = parse_decimal(&s.granularity)
                            .map_err(|e| Error::Format(format!("granularity of block {}: {e}", s.label)))?;
                        Ok(BlockSpec { label: s.label, kind: s.kind, members: s.members, granularity })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(BandLayout { distinguished: doc.distinguished, heavy: b.heavy, blocks })
            })
            .transpose()?;
        Ok(ControlInstance {
            game,
            distinguished: doc.distinguished,
            budget: doc.budget,
            goal: doc.goal,
            groups: doc.groups,
            bands,
            gadget: doc.gadget,
        })
    }
}

/// Deletion encoding a prefix assignment: for each `i <= k` the `A` player
/// holding `b_i` when `x_i` is true, otherwise the one holding `a_i`.
///
/// The `A` group is laid out as `a_1..a_k` followed by `b_1..b_k`.
pub fn witness_deletion(instance: &ControlInstance, prefix: &Assignment) -> Result<Vec<usize>> {
    let a = instance.members_of(GroupLabel::A)?;
    if a.is_empty() {
        return Err(Error::MissingProvenance("A-group"));
    }
    let k = a.len() / 2;
    if prefix.len() != k || a.len() != 2 * k {
        return Err(Error::InvalidParameter(format!(
            "prefix has {} values, the A group encodes {k} variables",
            prefix.len()
        )));
    }
    Ok((1..=k).map(|i| if prefix.value(i) { a[k + i - 1] } else { a[i - 1] }).collect())
}

/// Pivot counts of the distinguished player split by the heavy player's case.
pub fn case_counts(instance: &ControlInstance) -> Result<CaseCounts> {
    let groups = instance.groups.as_ref().ok_or(Error::MissingProvenance("group"))?;
    let system = instance.band_system()?;
    let mut cases = CaseCounts::default();
    for (h, count) in system.breakdown()? {
        let case = groups[h]
            .case()
            .ok_or_else(|| Error::Structural(format!("heavy player {h} is in non-heavy group {}", groups[h])))?;
        cases.0[case - 1] += count;
    }
    Ok(cases)
}

impl CaseCounts {
    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        let labels = [
            GroupLabel::Distinguished,
            GroupLabel::XPrime,
            GroupLabel::YStarStar,
            GroupLabel::S(Some(2)),
            GroupLabel::V(None),
            GroupLabel::L(1),
            GroupLabel::ZStar,
        ];
        for l in labels {
            assert_eq!(l.to_string().parse::<GroupLabel>().unwrap(), l);
        }
        assert_eq!(GroupLabel::S(Some(2)).to_string(), "S_2");
        assert!("Q".parse::<GroupLabel>().is_err());
        assert!("L".parse::<GroupLabel>().is_err());
    }

    #[test]
    fn goal_relations() {
        let quarter = ExactIndex::new(8u32.into(), 5);
        let less = ExactIndex::new(3u32.into(), 4);
        assert!(Goal::Decrease.holds(&quarter, &less));
        assert!(!Goal::Maintain.holds(&quarter, &less));
        assert!(Goal::Maintain.holds(&quarter, &ExactIndex::new(1u32.into(), 2)));
        assert!(Goal::Nondecrease.holds(&less, &quarter));
        assert_eq!("maintain".parse::<Goal>().unwrap(), Goal::Maintain);
    }

    #[test]
    fn plain_instance_round_trip() {
        let game = Game::from_u64(&[1, 2, 2, 2, 3, 3], 8).unwrap();
        let inst = ControlInstance::new(game, 1, 1, Goal::Decrease).unwrap();
        let back = ControlInstance::from_json(&inst.to_json()).unwrap();
        assert_eq!(back, inst);
        assert!(ControlInstance::from_json(r#"{"weights":["1"],"quota":"1","distinguished":3,"budget":0,"goal":"DECREASE"}"#).is_err());
    }
}
