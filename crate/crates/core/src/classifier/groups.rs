use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Where a group order came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderProvenance {
    /// Listed with the (G4, G6) refinement cases of the classification.
    PaperTable3,
    /// Standard transitive-group orders, and degree-12 orders pinned from
    /// long Frobenius scans of the exemplar polynomials.
    Derived,
}

/// Transitive group identifier `nTj`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupLabel {
    degree: u8,
    t_index: u16,
}

struct Entry {
    degree: u8,
    t_index: u16,
    name: &'static str,
    order: u64,
    provenance: OrderProvenance,
}

const fn entry(degree: u8, t_index: u16, name: &'static str, order: u64, provenance: OrderProvenance) -> Entry {
    Entry { degree, t_index, name, order, provenance }
}

use OrderProvenance::{Derived, PaperTable3};

// Degree-12 orders marked Derived come from 200000-prime Frobenius scans of
// the matching exemplar (`cargo run --release --example scan_exemplars 200000`);
// tests/group_orders.rs repeats a shorter scan.
const GROUPS: &[Entry] = &[
    entry(4, 1, "C4", 4, Derived),
    entry(4, 2, "V4", 4, Derived),
    entry(4, 3, "D4", 8, Derived),
    entry(6, 1, "C6", 6, Derived),
    entry(6, 2, "S3", 6, Derived),
    entry(6, 3, "D6", 12, Derived),
    entry(6, 5, "C3xS3", 18, Derived),
    entry(6, 9, "S3xS3", 36, Derived),
    entry(12, 2, "12T2", 12, Derived),
    entry(12, 3, "12T3", 12, PaperTable3),
    entry(12, 10, "12T10", 24, PaperTable3),
    entry(12, 11, "12T11", 24, Derived),
    entry(12, 12, "12T12", 24, PaperTable3),
    entry(12, 13, "12T13", 24, PaperTable3),
    entry(12, 14, "12T14", 24, Derived),
    entry(12, 15, "12T15", 24, Derived),
    entry(12, 16, "12T16", 36, PaperTable3),
    entry(12, 18, "12T18", 36, Derived),
    entry(12, 28, "12T28", 48, PaperTable3),
    entry(12, 37, "12T37", 72, PaperTable3),
    entry(12, 38, "12T38", 72, PaperTable3),
    entry(12, 39, "12T39", 72, Derived),
    entry(12, 42, "12T42", 72, Derived),
    entry(12, 81, "12T81", 144, PaperTable3),
];

impl GroupLabel {
    pub const T4_1: GroupLabel = GroupLabel::raw(4, 1);
    pub const T4_2: GroupLabel = GroupLabel::raw(4, 2);
    pub const T4_3: GroupLabel = GroupLabel::raw(4, 3);
    pub const T6_1: GroupLabel = GroupLabel::raw(6, 1);
    pub const T6_2: GroupLabel = GroupLabel::raw(6, 2);
    pub const T6_3: GroupLabel = GroupLabel::raw(6, 3);
    pub const T6_5: GroupLabel = GroupLabel::raw(6, 5);
    pub const T6_9: GroupLabel = GroupLabel::raw(6, 9);

    const fn raw(degree: u8, t_index: u16) -> Self {
        GroupLabel { degree, t_index }
    }

    /// Only labels from the closed sets used by the classification are accepted.
    pub fn new(degree: u8, t_index: u16) -> Result<Self> {
        let label = Self::raw(degree, t_index);
        match label.entry() {
            Some(_) => Ok(label),
            None => Err(Error::UnknownLabel(format!("{degree}T{t_index}"))),
        }
    }

    /// Shorthand for degree-12 labels; panics outside the closed set.
    pub fn t12(t_index: u16) -> Self {
        Self::new(12, t_index).expect("known degree-12 label")
    }

    fn entry(&self) -> Option<&'static Entry> {
        GROUPS.iter().find(|e| e.degree == self.degree && e.t_index == self.t_index)
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn t_index(&self) -> u16 {
        self.t_index
    }

    pub fn name(&self) -> &'static str {
        self.entry().map_or("?", |e| e.name)
    }

    pub fn order(&self) -> u64 {
        self.entry().map_or(0, |e| e.order)
    }

    pub fn order_provenance(&self) -> OrderProvenance {
        self.entry().map_or(Derived, |e| e.provenance)
    }

    pub fn quartic_groups() -> [GroupLabel; 3] {
        [Self::T4_1, Self::T4_2, Self::T4_3]
    }

    pub fn sextic_groups() -> [GroupLabel; 5] {
        [Self::T6_1, Self::T6_2, Self::T6_3, Self::T6_5, Self::T6_9]
    }

    pub fn dodecic_groups() -> Vec<GroupLabel> {
        GROUPS.iter().filter(|e| e.degree == 12).map(|e| Self::raw(12, e.t_index)).collect()
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}T{}", self.degree, self.t_index)
    }
}

impl FromStr for GroupLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownLabel(s.to_string());
        let (n, j) = s.split_once('T').ok_or_else(bad)?;
        Self::new(n.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?)
    }
}

impl Serialize for GroupLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `(G4, G6)` pairs that cannot occur for an irreducible dodecic.
pub const EXCLUDED_PAIRS: [(GroupLabel, GroupLabel); 3] =
    [(GroupLabel::T4_1, GroupLabel::T6_1), (GroupLabel::T4_1, GroupLabel::T6_2), (GroupLabel::T4_1, GroupLabel::T6_5)];

/// Possible dodecic groups for a given `(G4, G6)`; empty exactly for the
/// excluded pairs.
pub fn candidate_groups(g4: GroupLabel, g6: GroupLabel) -> Result<Vec<GroupLabel>> {
    let row = match g4.t_index {
        _ if g4.degree != 4 => return Err(Error::UnknownLabel(g4.to_string())),
        1 => 0,
        2 => 1,
        _ => 2,
    };
    let col = match g6.t_index {
        _ if g6.degree != 6 => return Err(Error::UnknownLabel(g6.to_string())),
        1 => 0,
        2 => 1,
        5 => 2,
        3 => 3,
        _ => 4,
    };
    const TABLE: [[&[u16]; 5]; 3] = [
        [&[], &[], &[], &[11], &[39]],
        [&[2], &[3], &[18], &[3, 10], &[16, 37]],
        [&[14], &[15], &[42], &[12, 13, 28], &[38, 81]],
    ];
    Ok(TABLE[row][col].iter().map(|&t| GroupLabel::t12(t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_cells() {
        let t = |v: &[u16]| v.iter().map(|&j| GroupLabel::t12(j)).collect::<Vec<_>>();
        assert_eq!(candidate_groups(GroupLabel::T4_2, GroupLabel::T6_3).unwrap(), t(&[3, 10]));
        assert_eq!(candidate_groups(GroupLabel::T4_3, GroupLabel::T6_3).unwrap(), t(&[12, 13, 28]));
        assert!(candidate_groups(GroupLabel::T4_1, GroupLabel::T6_1).unwrap().is_empty());
        assert!(candidate_groups(GroupLabel::T6_1, GroupLabel::T4_1).is_err());
        let mut empty = Vec::new();
        for g4 in GroupLabel::quartic_groups() {
            for g6 in GroupLabel::sextic_groups() {
                if candidate_groups(g4, g6).unwrap().is_empty() {
                    empty.push((g4, g6));
                }
            }
        }
        assert_eq!(empty, EXCLUDED_PAIRS.to_vec());
    }

    #[test]
    fn sixteen_dodecic_groups() {
        let all = GroupLabel::dodecic_groups();
        assert_eq!(all.len(), 16);
        let mut from_table: Vec<_> = GroupLabel::quartic_groups()
            .into_iter()
            .flat_map(|g4| GroupLabel::sextic_groups().into_iter().map(move |g6| (g4, g6)))
            .flat_map(|(g4, g6)| candidate_groups(g4, g6).unwrap())
            .collect();
        from_table.sort();
        from_table.dedup();
        assert_eq!(from_table, all);
    }

    #[test]
    fn labels() {
        let l: GroupLabel = "12T81".parse().unwrap();
        assert_eq!(l.order(), 144);
        assert_eq!(l.order_provenance(), OrderProvenance::PaperTable3);
        assert_eq!(GroupLabel::T6_9.order(), 36);
        assert_eq!(GroupLabel::T4_3.name(), "D4");
        assert!("12T5".parse::<GroupLabel>().is_err());
        assert!("4X1".parse::<GroupLabel>().is_err());
        assert_eq!(serde_json::to_string(&GroupLabel::T4_2).unwrap(), "\"4T2\"");
    }

    #[test]
    fn table3_orders() {
        for (t, order) in [(3, 12), (10, 24), (16, 36), (37, 72), (12, 24), (13, 24), (28, 48), (38, 72), (81, 144)] {
            let g = GroupLabel::t12(t);
            assert_eq!(g.order(), order);
            assert_eq!(g.order_provenance(), OrderProvenance::PaperTable3);
        }
    }
}
