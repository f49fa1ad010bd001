//! Sunflowers in uniform set families.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sunflower {
    /// Sorted petals, each a member of the input family.
    pub petals: Vec<Vec<usize>>,
    pub core: Vec<usize>,
    /// True when the classical recursion found it; false for the exhaustive fallback.
    pub by_recursion: bool,
}

impl Sunflower {
    /// Every pair of distinct petals meets exactly in the core.
    pub fn is_valid(&self) -> bool {
        let distinct: BTreeSet<&Vec<usize>> = self.petals.iter().collect();
        distinct.len() == self.petals.len()
            && self.petals.iter().enumerate().all(|(i, a)| {
                self.petals[i + 1..]
                    .iter()
                    .all(|b| a.iter().filter(|v| b.binary_search(v).is_ok()).copied().eq(self.core.iter().copied()))
            })
    }
}

/// `t! (m-1)^t`; any family of more distinct t-sets has an m-petal sunflower.
pub fn erdos_rado_threshold(t: usize, m: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 1..=t as u128 {
        acc = acc.checked_mul(i)?.checked_mul(m as u128 - 1)?;
    }
    Some(acc)
}

fn normalize(family: &[Vec<usize>], m: usize) -> Result<Vec<Vec<usize>>> {
    if m < 2 {
        return Err(Error::invalid("sunflower needs m >= 2 petals"));
    }
    let t = family.first().map_or(1, Vec::len);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (i, s) in family.iter().enumerate() {
        let mut s = s.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != t || family[i].len() != t {
            return Err(Error::invalid(format!("set {i} has size {} but the family is {t}-uniform", family[i].len())));
        }
        if t == 0 {
            return Err(Error::invalid("sets must be non-empty"));
        }
        // repeated sets cannot be distinct petals
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }
    Ok(out)
}

/// The classical recursion: either a greedy maximal disjoint subfamily has
/// m members, or the most frequent element of its union joins the core.
fn recurse(family: &[Vec<usize>], m: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    // returns (indices into family, core)
    let mut disjoint: Vec<usize> = Vec::new();
    let mut union = BTreeSet::new();
    for (i, s) in family.iter().enumerate() {
        if s.iter().all(|v| !union.contains(v)) {
            union.extend(s.iter().copied());
            disjoint.push(i);
            if disjoint.len() == m {
                return Some((disjoint, Vec::new()));
            }
        }
    }
    if family.first().is_none_or(|s| s.len() <= 1) {
        return None;
    }
    let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
    for s in family {
        for v in s.iter().filter(|v| union.contains(v)) {
            *freq.entry(*v).or_default() += 1;
        }
    }
    let (&x, _) = freq.iter().max_by_key(|&(&v, &c)| (c, std::cmp::Reverse(v)))?;
    let (idx, link): (Vec<usize>, Vec<Vec<usize>>) = family
        .iter()
        .enumerate()
        .filter(|(_, s)| s.contains(&x))
        .map(|(i, s)| (i, s.iter().copied().filter(|&v| v != x).collect()))
        .unzip();
    if link.len() < m {
        return None;
    }
    let (inner, mut core) = recurse(&link, m)?;
    core.push(x);
    core.sort_unstable();
    Some((inner.into_iter().map(|i| idx[i]).collect(), core))
}

/// Exhaustive search: for every candidate core (a pairwise intersection),
/// look for m sets through it whose remainders are pairwise disjoint.
pub fn find_sunflower_exhaustive(family: &[Vec<usize>], m: usize) -> Result<Option<Sunflower>> {
    let family = normalize(family, m)?;
    Ok(exhaustive(&family, m))
}

fn exhaustive(family: &[Vec<usize>], m: usize) -> Option<Sunflower> {
    if family.len() < m {
        return None;
    }
    let mut cores = BTreeSet::new();
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            cores.insert(a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect::<Vec<_>>());
        }
    }
    for core in cores {
        let rest: Vec<(usize, Vec<usize>)> = family
            .iter()
            .enumerate()
            .filter(|(_, s)| core.iter().all(|v| s.binary_search(v).is_ok()))
            .map(|(i, s)| (i, s.iter().copied().filter(|v| core.binary_search(v).is_err()).collect()))
            .collect();
        let mut chosen = Vec::new();
        if pack(&rest, 0, m, &mut BTreeSet::new(), &mut chosen) {
            return Some(Sunflower {
                petals: chosen.iter().map(|&i| family[i].clone()).collect(),
                core,
                by_recursion: false,
            });
        }
    }
    None
}

fn pack(
    rest: &[(usize, Vec<usize>)],
    from: usize,
    m: usize,
    used: &mut BTreeSet<usize>,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == m {
        return true;
    }
    if rest.len() - from < m - chosen.len() {
        return false;
    }
    for j in from..rest.len() {
        let (i, r) = &rest[j];
        if r.iter().any(|v| used.contains(v)) {
            continue;
        }
        used.extend(r.iter().copied());
        chosen.push(*i);
        if pack(rest, j + 1, m, used, chosen) {
            return true;
        }
        chosen.pop();
        for v in r {
            used.remove(v);
        }
    }
    false
}

/// An m-petal sunflower of the family, or None if there is none. Runs the
/// classical recursion first (it always succeeds above the threshold) and
/// falls back to exhaustive search. Repeated sets count once.
pub fn erdos_rado_sunflower(family: &[Vec<usize>], m: usize) -> Result<Option<Sunflower>> {
    let family = normalize(family, m)?;
    let found = match recurse(&family, m) {
        Some((idx, core)) => {
            Some(Sunflower { petals: idx.iter().map(|&i| family[i].clone()).collect(), core, by_recursion: true })
        }
        None => exhaustive(&family, m),
    };
    if let Some(sf) = &found {
        if sf.petals.len() != m || !sf.is_valid() {
            return Err(Error::ValidationFault(format!("invalid sunflower {sf:?}")));
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let s = erdos_rado_sunflower(&[vec![1, 2], vec![3, 4], vec![5, 6]], 3).unwrap().unwrap();
        assert_eq!(s.petals.len(), 3);
        assert!(s.core.is_empty());
        let s = erdos_rado_sunflower(&[vec![1, 2], vec![1, 3], vec![1, 4]], 3).unwrap().unwrap();
        assert_eq!(s.core, vec![1]);
    }

    #[test]
    fn absent_when_none_exists() {
        // a triangle's edges pairwise meet in different points
        let tri = [vec![0, 1], vec![1, 2], vec![0, 2]];
        assert!(erdos_rado_sunflower(&tri, 3).unwrap().is_none());
        assert!(erdos_rado_sunflower(&tri, 2).unwrap().is_some());
    }

    #[test]
    fn fallback_finds_what_recursion_misses() {
        // greedy disjoint picks {0,1},{2,3}; the star at 4 is a 3-sunflower
        let fam = [vec![0, 1], vec![2, 3], vec![0, 4], vec![2, 4], vec![4, 5]];
        let s = erdos_rado_sunflower(&fam, 3).unwrap().unwrap();
        assert!(s.is_valid());
    }

    #[test]
    fn thresholds() {
        assert_eq!(erdos_rado_threshold(2, 3), Some(8));
        assert_eq!(erdos_rado_threshold(3, 3), Some(48));
        assert_eq!(erdos_rado_threshold(1, 5), Some(4));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(erdos_rado_sunflower(&[vec![1, 2], vec![3]], 3).is_err());
        assert!(erdos_rado_sunflower(&[vec![1, 2]], 1).is_err());
        assert!(erdos_rado_sunflower(&[vec![1, 1]], 2).is_err());
    }
}
