//! Party labels and their assignment to modes.

use std::fmt;

use crate::error::{invalid, Result};

/// One of the three observers: the free-falling `A`, the exterior `B` and the
/// interior partner `Bbar`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Party {
    A,
    B,
    Bbar,
}

impl Party {
    pub const ALL: [Party; 3] = [Party::A, Party::B, Party::Bbar];

    /// Name used in column headers (`A`, `B`, `Bbar`).
    pub fn label(self) -> &'static str {
        match self {
            Party::A => "A",
            Party::B => "B",
            Party::Bbar => "Bbar",
        }
    }

    fn bit(self) -> u8 {
        match self {
            Party::A => 1,
            Party::B => 2,
            Party::Bbar => 4,
        }
    }
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A set of parties, stored as a bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PartySet(u8);

impl PartySet {
    pub const EMPTY: PartySet = PartySet(0);

    pub fn of(parties: &[Party]) -> PartySet {
        PartySet(parties.iter().fold(0, |acc, p| acc | p.bit()))
    }

    pub fn contains(self, p: Party) -> bool {
        self.0 & p.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_disjoint(self, other: PartySet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: PartySet) -> PartySet {
        PartySet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Party> {
        Party::ALL.into_iter().filter(move |p| self.contains(*p))
    }

    /// Concatenated labels, e.g. `ABbar`.
    pub fn label(self) -> String {
        self.iter().map(Party::label).collect()
    }
}

impl From<Party> for PartySet {
    fn from(p: Party) -> Self {
        PartySet(p.bit())
    }
}

impl fmt::Display for PartySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Assignment of each party to a disjoint set of mode indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartyMap {
    n_modes: usize,
    modes: Vec<(Party, Vec<usize>)>,
}

impl PartyMap {
    /// `A -> 0`, `B -> 1`, `Bbar -> 2`.
    pub fn standard() -> PartyMap {
        PartyMap { n_modes: 3, modes: vec![(Party::A, vec![0]), (Party::B, vec![1]), (Party::Bbar, vec![2])] }
    }

    pub fn new(n_modes: usize, assignment: Vec<(Party, Vec<usize>)>) -> Result<PartyMap> {
        let mut seen = Vec::new();
        for (i, (party, modes)) in assignment.iter().enumerate() {
            if assignment[..i].iter().any(|(p, _)| p == party) {
                return invalid(format!("party {party} assigned twice"));
            }
            if modes.is_empty() {
                return invalid(format!("party {party} has no modes"));
            }
            for &m in modes {
                if m >= n_modes {
                    return invalid(format!("mode {m} out of range for {n_modes} modes"));
                }
                if seen.contains(&m) {
                    return invalid(format!("mode {m} assigned to more than one party"));
                }
                seen.push(m);
            }
        }
        Ok(PartyMap { n_modes, modes: assignment })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn modes_of(&self, party: Party) -> Option<&[usize]> {
        self.modes.iter().find(|(p, _)| *p == party).map(|(_, m)| m.as_slice())
    }

    /// Mode indices for a party set, ascending.
    pub fn resolve(&self, set: PartySet) -> Result<Vec<usize>> {
        if set.is_empty() {
            return invalid("empty party set");
        }
        let mut out = Vec::new();
        for p in set.iter() {
            match self.modes_of(p) {
                Some(m) => out.extend_from_slice(m),
                None => return invalid(format!("party {p} is not mapped to any mode")),
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_map() {
        let map = PartyMap::standard();
        assert_eq!(map.resolve(PartySet::of(&[Party::Bbar, Party::A])).unwrap(), vec![0, 2]);
        assert_eq!(map.resolve(Party::B.into()).unwrap(), vec![1]);
        assert!(map.resolve(PartySet::EMPTY).is_err());
    }

    #[test]
    fn rejects_overlap_and_range() {
        assert!(PartyMap::new(3, vec![(Party::A, vec![0]), (Party::B, vec![0])]).is_err());
        assert!(PartyMap::new(2, vec![(Party::A, vec![2])]).is_err());
        assert!(PartyMap::new(2, vec![(Party::A, vec![0]), (Party::A, vec![1])]).is_err());
        assert!(PartyMap::new(2, vec![(Party::A, vec![])]).is_err());
    }

    #[test]
    fn multi_mode_party() {
        let map = PartyMap::new(4, vec![(Party::A, vec![3, 0]), (Party::B, vec![1])]).unwrap();
        assert_eq!(map.resolve(PartySet::of(&[Party::A, Party::B])).unwrap(), vec![0, 1, 3]);
        assert!(map.resolve(Party::Bbar.into()).is_err());
    }

    #[test]
    fn set_labels() {
        assert_eq!(PartySet::of(&[Party::Bbar, Party::A]).label(), "ABbar");
        assert_eq!(PartySet::of(&[Party::B, Party::B]).len(), 1);
    }
}
