//! Permutations in one-line notation and classical pattern containment.
//!
//! Positions and values are 1-based throughout, including the positions
//! reported in a [`PatternOccurrence`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, PermutationDefect, Result};
use crate::Limits;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates `values` as a rearrangement of `1..=values.len()`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let defect = if v == 0 {
                Some(PermutationDefect::Zero)
            } else if v as usize > n {
                Some(PermutationDefect::Gap)
            } else if seen[v as usize] {
                Some(PermutationDefect::Duplicate)
            } else {
                None
            };
            if let Some(defect) = defect {
                return Err(Error::NotAPermutation {
                    token: v.to_string(),
                    defect,
                });
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    /// Identity permutation `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    /// Builds a short pattern from its digits, e.g. `"4231"`.
    ///
    /// Only for permutations of length at most 9.
    pub fn from_digits(digits: &str) -> Result<Self> {
        let values = digits
            .chars()
            .map(|c| {
                c.to_digit(10).ok_or_else(|| Error::NotAPermutation {
                    token: c.to_string(),
                    defect: PermutationDefect::NotAnInteger,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// Compact digit string (`"4231"`) for permutations of length ≤ 9,
    /// space separated otherwise.
    pub fn to_digits(&self) -> String {
        if self.len() <= 9 {
            self.values.iter().map(|v| v.to_string()).collect()
        } else {
            self.to_string()
        }
    }

    /// The first occurrence of `pattern`, if any. See [`contains_pattern`].
    pub fn find(&self, pattern: &Permutation) -> Option<PatternOccurrence> {
        contains_pattern(self, pattern)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        contains_pattern(self, pattern).is_none()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

/// Parses decimal integers separated by whitespace and/or commas.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    let n = tokens.len();
    let mut seen = vec![false; n + 1];
    let mut values = Vec::with_capacity(n);
    for token in tokens {
        let fail = |defect| Error::NotAPermutation {
            token: token.to_string(),
            defect,
        };
        let v: u64 = token
            .parse()
            .map_err(|_| fail(PermutationDefect::NotAnInteger))?;
        if v == 0 {
            return Err(fail(PermutationDefect::Zero));
        }
        if v > n as u64 {
            return Err(fail(PermutationDefect::Gap));
        }
        if seen[v as usize] {
            return Err(fail(PermutationDefect::Duplicate));
        }
        seen[v as usize] = true;
        values.push(v as u32);
    }
    Ok(Permutation { values })
}

/// Strictly increasing 1-based positions of a pattern inside a host.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternOccurrence {
    pub positions: Vec<usize>,
}

impl PatternOccurrence {
    /// Host values at the occurrence's positions.
    pub fn values_in(&self, host: &Permutation) -> Vec<u32> {
        self.positions.iter().map(|&p| host.values[p - 1]).collect()
    }

    /// Whether this really is an occurrence of `pattern` in `host`.
    pub fn is_occurrence_of(&self, host: &Permutation, pattern: &Permutation) -> bool {
        let k = pattern.len();
        if self.positions.len() != k
            || self.positions.windows(2).any(|w| w[0] >= w[1])
            || self.positions.iter().any(|&p| p == 0 || p > host.len())
        {
            return false;
        }
        let picked = self.values_in(host);
        (0..k).all(|a| {
            (0..k).all(|b| (picked[a] < picked[b]) == (pattern.values[a] < pattern.values[b]))
        })
    }
}

/// Lexicographically least occurrence of `pattern` in `host`.
///
/// Depth-first over positions in increasing order; a partial embedding is
/// abandoned as soon as its relative order disagrees with the pattern, so
/// the first complete embedding found is the least one.
pub fn contains_pattern(host: &Permutation, pattern: &Permutation) -> Option<PatternOccurrence> {
    let k = pattern.len();
    if k > host.len() {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    if embed(&host.values, &pattern.values, 0, &mut chosen) {
        Some(PatternOccurrence {
            positions: chosen.into_iter().map(|p| p + 1).collect(),
        })
    } else {
        None
    }
}

fn embed(host: &[u32], pattern: &[u32], start: usize, chosen: &mut Vec<usize>) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    // Leave room for the remaining pattern letters.
    let last = host.len() - (pattern.len() - depth);
    for pos in start..=last {
        let v = host[pos];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&p, &pv)| (host[p] < v) == (pv < pattern[depth]));
        if consistent {
            chosen.push(pos);
            if embed(host, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn avoids_all<'a, I>(host: &Permutation, patterns: I) -> bool
where
    I: IntoIterator<Item = &'a Permutation>,
{
    patterns
        .into_iter()
        .all(|p| contains_pattern(host, p).is_none())
}

/// `(position, value)` of every entry larger than all entries before it.
pub fn left_to_right_maxima(perm: &Permutation) -> Vec<(usize, u32)> {
    let mut best = 0;
    let mut out = Vec::new();
    for (i, &v) in perm.values.iter().enumerate() {
        if v > best {
            best = v;
            out.push((i + 1, v));
        }
    }
    out
}

/// One left-to-right maximum and the segment that follows it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub maximum: u32,
    pub tail: Vec<u32>,
}

/// `π = m_1 α_1 m_2 α_2 ... m_k α_k` split at the left-to-right maxima.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StageDecomposition {
    pub stages: Vec<Stage>,
}

impl StageDecomposition {
    /// Reassembles the permutation's one-line notation.
    pub fn concat(&self) -> Vec<u32> {
        self.stages
            .iter()
            .flat_map(|s| std::iter::once(s.maximum).chain(s.tail.iter().copied()))
            .collect()
    }

    /// Maximum of the stage before `index`, with `m_0 = 0`.
    pub fn previous_maximum(&self, index: usize) -> u32 {
        if index == 0 {
            0
        } else {
            self.stages[index - 1].maximum
        }
    }
}

pub fn stage_decompose(perm: &Permutation) -> StageDecomposition {
    let mut stages: Vec<Stage> = Vec::new();
    for &v in &perm.values {
        match stages.last_mut() {
            Some(stage) if v < stage.maximum => stage.tail.push(v),
            _ => stages.push(Stage {
                maximum: v,
                tail: Vec::new(),
            }),
        }
    }
    StageDecomposition { stages }
}

/// Linear 231-avoidance test: the permutation avoids 231 exactly when a single
/// stack sorts it.
pub fn is_231_avoiding(perm: &Permutation) -> bool {
    let mut stack: Vec<u32> = Vec::with_capacity(perm.len());
    let mut expected = 1;
    for &v in &perm.values {
        while let Some(&top) = stack.last() {
            if top > v {
                break;
            }
            if top != expected {
                return false;
            }
            expected += 1;
            stack.pop();
        }
        stack.push(v);
    }
    while let Some(top) = stack.pop() {
        if top != expected {
            return false;
        }
        expected += 1;
    }
    true
}

/// Every permutation of length `n` avoiding all of `patterns`, by brute force.
pub fn avoiders(
    n: usize,
    patterns: &[Permutation],
    limits: &Limits,
) -> Result<BTreeSet<Permutation>> {
    let all: Vec<Permutation> = permutations_of(n, limits)?.collect();
    Ok(all
        .into_par_iter()
        .filter(|p| avoids_all(p, patterns))
        .collect::<Vec<_>>()
        .into_iter()
        .collect())
}

/// All permutations of length `n` in lexicographic order.
pub fn permutations_of(n: usize, limits: &Limits) -> Result<Permutations> {
    Limits::check(limits.brute_force, n, "permutation enumeration")?;
    Ok(Permutations {
        next: Some((1..=n as u32).collect()),
    })
}

/// Iterator returned by [`permutations_of`].
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<u32>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { values: current })
    }
}

fn next_lexicographic(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}
