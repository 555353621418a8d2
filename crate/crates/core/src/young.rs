//! Young diagrams, hook lengths and the link to Welter's game.
//!
//! A Welter position with distinct coordinates is a beta-set: sorting it
//! decreasingly and subtracting the staircase `(m-1, …, 1, 0)` gives a
//! partition. Moving in Welter's game removes a hook from that partition.
//!
//! Rows and columns are 1-based throughout, matching the usual `(i, j)`
//! cell notation.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamecore::all_distinct;
use crate::padic::Base;
use crate::welter::{full_descendant, PsiOracle, SumPosition, WelterPosition};

/// Largest shape [`tableau_count_oracle`] will enumerate.
pub const ORACLE_CELL_CAP: u64 = 10;

/// A partition: weakly decreasing positive parts. Empty is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct YoungDiagram(Vec<u64>);

impl YoungDiagram {
    /// Trailing zero parts are dropped.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(YoungDiagram(parts))
    }

    pub fn empty() -> Self {
        YoungDiagram(Vec::new())
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn row_length(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn column_length(&self, j: u64) -> usize {
        self.0.iter().take_while(|&&l| l >= j).count()
    }

    pub fn contains_cell(&self, i: usize, j: u64) -> bool {
        i >= 1 && j >= 1 && self.row_length(i) >= j
    }

    /// Arm plus leg plus one.
    pub fn hook_length(&self, i: usize, j: u64) -> Result<u64> {
        if !self.contains_cell(i, j) {
            return Err(Error::CellOutsideDiagram { row: i, col: j as usize });
        }
        let arm = self.row_length(i) - j;
        let leg = (self.column_length(j) - i) as u64;
        Ok(arm + leg + 1)
    }

    /// Whether every cell of `other` is a cell of `self`.
    pub fn includes(&self, other: &YoungDiagram) -> bool {
        other.rows() <= self.rows() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    fn cells(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &l)| (1..=l).map(move |j| (i + 1, j)))
    }
}

impl TryFrom<Vec<u64>> for YoungDiagram {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        YoungDiagram::new(v)
    }
}

impl From<YoungDiagram> for Vec<u64> {
    fn from(y: YoungDiagram) -> Vec<u64> {
        y.0
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// An ordered `k`-tuple of diagrams, `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<YoungDiagram>", into = "Vec<YoungDiagram>")]
pub struct DiagramTuple(Vec<YoungDiagram>);

impl DiagramTuple {
    pub fn new(diagrams: Vec<YoungDiagram>) -> Result<Self> {
        if diagrams.is_empty() {
            return Err(Error::InvalidParams("a diagram tuple needs at least one diagram".into()));
        }
        Ok(DiagramTuple(diagrams))
    }

    pub fn includes(&self, other: &DiagramTuple) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(y, z)| y.includes(z))
    }
}

impl TryFrom<Vec<YoungDiagram>> for DiagramTuple {
    type Error = Error;

    fn try_from(v: Vec<YoungDiagram>) -> Result<Self> {
        DiagramTuple::new(v)
    }
}

impl From<DiagramTuple> for Vec<YoungDiagram> {
    fn from(t: DiagramTuple) -> Vec<YoungDiagram> {
        t.0
    }
}

impl fmt::Display for DiagramTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|y| y.to_string()).collect();
        f.write_str(&parts.join(";"))
    }
}

/// Something made of one or more diagrams: a single diagram or a tuple.
pub trait Shape: Sized + Clone {
    fn diagrams(&self) -> &[YoungDiagram];

    /// Rebuilds a shape of the same kind from its diagrams.
    fn from_diagrams(diagrams: Vec<YoungDiagram>) -> Result<Self>;

    fn size(&self) -> u64 {
        self.diagrams().iter().map(YoungDiagram::size).sum()
    }
}

impl Shape for YoungDiagram {
    fn diagrams(&self) -> &[YoungDiagram] {
        std::slice::from_ref(self)
    }

    fn from_diagrams(mut diagrams: Vec<YoungDiagram>) -> Result<Self> {
        if diagrams.len() != 1 {
            return Err(Error::ArityMismatch { expected: 1, found: diagrams.len() });
        }
        Ok(diagrams.pop().unwrap())
    }
}

impl Shape for DiagramTuple {
    fn diagrams(&self) -> &[YoungDiagram] {
        &self.0
    }

    fn from_diagrams(diagrams: Vec<YoungDiagram>) -> Result<Self> {
        DiagramTuple::new(diagrams)
    }
}

/// Hook lengths as a sorted multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct HookMultiset(Vec<u64>);

impl HookMultiset {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `Y(A)`: sort decreasingly, subtract the staircase, drop zero parts.
pub fn position_to_diagram(a: &[u64]) -> Result<YoungDiagram> {
    if !all_distinct(a) {
        return Err(Error::RepeatedCoordinates(a.to_vec()));
    }
    let mut sorted = a.to_vec();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    let m = sorted.len() as u64;
    let parts = sorted.iter().enumerate().map(|(k, &x)| x - (m - 1 - k as u64)).collect();
    YoungDiagram::new(parts)
}

/// `(λ¹ + m - 1, λ² + m - 2, …, λ^m)`, padding with zero parts.
pub fn diagram_to_position(y: &YoungDiagram, m: usize) -> Result<Vec<u64>> {
    if y.rows() > m {
        return Err(Error::ArityTooSmall { rows: y.rows(), m });
    }
    Ok((1..=m).map(|k| y.row_length(k) + (m - k) as u64).collect())
}

/// `H(Y)`, or the multiset sum `H(Y¹) + ⋯ + H(Y^k)` for a tuple.
pub fn hook_lengths<S: Shape>(shape: &S) -> HookMultiset {
    let mut hooks = Vec::new();
    for y in shape.diagrams() {
        for (i, j) in y.cells() {
            hooks.push(y.hook_length(i, j).expect("cell of the diagram"));
        }
    }
    hooks.sort_unstable();
    HookMultiset(hooks)
}

/// `Y ∖ H_{i,j}(Y)`, computed by lowering one beta-number by the hook
/// length.
pub fn remove_hook(y: &YoungDiagram, i: usize, j: u64) -> Result<YoungDiagram> {
    let h = y.hook_length(i, j)?;
    let m = y.rows();
    let mut beta = diagram_to_position(y, m)?;
    beta[i - 1] -= h;
    debug_assert!(all_distinct(&beta));
    position_to_diagram(&beta)
}

/// Hook removal on cells: rows `i..i+leg-1` take the length of the row
/// below minus one, row `i+leg` is cut back to `j-1`.
pub fn remove_hook_cells(y: &YoungDiagram, i: usize, j: u64) -> Result<YoungDiagram> {
    y.hook_length(i, j)?;
    let leg = y.column_length(j) - i;
    let mut parts = y.0.clone();
    for r in i..i + leg {
        parts[r - 1] = y.row_length(r + 1) - 1;
    }
    parts[i + leg - 1] = j - 1;
    YoungDiagram::new(parts)
}

/// The cell `(i, j)` whose hook a Welter move `A -> B` removes.
///
/// `i` is the rank of the moved coordinate `a^s` among the coordinates of
/// `A` in decreasing order; `j` is the rank of the new value among the
/// naturals missing from `A`, in increasing order.
pub fn move_matches_hook(a: &[u64], b: &[u64]) -> Result<(usize, u64)> {
    let not_option = || Error::NotAnOption { from: a.to_vec(), to: b.to_vec() };
    if a.len() != b.len() || !all_distinct(a) || !all_distinct(b) {
        return Err(not_option());
    }
    let changed: Vec<usize> = (0..a.len()).filter(|&s| a[s] != b[s]).collect();
    let [s] = changed[..] else {
        return Err(not_option());
    };
    if b[s] > a[s] {
        return Err(not_option());
    }
    let i = 1 + a.iter().filter(|&&x| x > a[s]).count();
    let j = 1 + b[s] - a.iter().filter(|&&x| x < b[s]).count() as u64;
    Ok((i, j))
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// `f = n! / ∏ h` over the hook multiset, exactly.
pub fn tableau_count<S: Shape>(shape: &S) -> BigUint {
    let product = hook_lengths(shape).0.iter().fold(BigUint::from(1u32), |acc, &h| acc * h);
    factorial(shape.size()) / product
}

/// Counts standard tableaux by growing the shape one cell at a time, each
/// prefix staying a (tuple of) diagram(s).
pub fn tableau_count_oracle<S: Shape>(shape: &S) -> Result<BigUint> {
    let cells = shape.size();
    if cells > ORACLE_CELL_CAP {
        return Err(Error::SizeCapExceeded { cells, cap: ORACLE_CELL_CAP });
    }
    let target: Vec<Vec<u64>> = shape.diagrams().iter().map(|y| y.0.clone()).collect();
    let start: Vec<Vec<u64>> = target.iter().map(|_| Vec::new()).collect();
    let mut memo = HashMap::new();
    Ok(grow(&target, start, &mut memo))
}

// number of ways to grow `current` into `target`
fn grow(target: &[Vec<u64>], current: Vec<Vec<u64>>, memo: &mut HashMap<Vec<Vec<u64>>, BigUint>) -> BigUint {
    if current == target {
        return BigUint::from(1u32);
    }
    if let Some(v) = memo.get(&current) {
        return v.clone();
    }
    let mut total = BigUint::from(0u32);
    for (l, (rows, goal)) in current.iter().zip(target).enumerate() {
        for r in 0..=rows.len() {
            let len = rows.get(r).copied().unwrap_or(0);
            let above = if r == 0 { u64::MAX } else { rows[r - 1] };
            if len + 1 > above || len + 1 > goal.get(r).copied().unwrap_or(0) {
                continue;
            }
            let mut next = current.clone();
            if r == rows.len() {
                next[l].push(1);
            } else {
                next[l][r] += 1;
            }
            total += grow(target, next, memo);
        }
    }
    memo.insert(current, total.clone());
    total
}

/// `ν_p(f)` as `ν_p(n!) - Σ ν_p(h)`.
pub fn nu_of_fcount<S: Shape>(p: Base, shape: &S) -> Result<u64> {
    p.require_prime()?;
    let hooks: u64 = hook_lengths(shape).0.iter().map(|&h| p.ord(h).finite().unwrap() as u64).sum();
    Ok(p.factorial_order(shape.size()) - hooks)
}

/// `⊕_p` over the hook multiset of `1 + p + ⋯ + p^{ord_p(h)}`.
pub fn psi_diagram<S: Shape>(p: Base, shape: &S) -> u64 {
    p.nim_sum(hook_lengths(shape).0.iter().map(|&h| p.pnorm(h).expect("hook lengths are positive")))
}

/// Number of coordinates used to embed `y` in Welter's game: one per row,
/// and a single coordinate for the empty diagram.
fn embedding_arity(y: &YoungDiagram) -> usize {
    y.rows().max(1)
}

/// A subshape `Z ⊆ Y` with `|Z| = ψ_p(Y)` cells and `f^Z` prime to `p`.
///
/// Each diagram becomes a Welter position with one coordinate per row, the
/// tuple a sum position, and `Z` is read off the full descendant with the
/// same value.
pub fn find_pprime_subdiagram<S: Shape>(p: Base, shape: &S) -> Result<S> {
    find_pprime_embedded(p, shape, 0)
}

/// As [`find_pprime_subdiagram`], with `extra` additional zero rows in
/// every embedding.
pub fn find_pprime_embedded<S: Shape>(p: Base, shape: &S, extra: usize) -> Result<S> {
    p.require_prime()?;
    let parts = shape
        .diagrams()
        .iter()
        .map(|y| diagram_to_position(y, embedding_arity(y) + extra).and_then(WelterPosition::new))
        .collect::<Result<Vec<_>>>()?;
    let a = SumPosition::new(parts)?;
    let z = full_descendant(&mut PsiOracle::new(p), &a, None)?;
    let diagrams = z.parts().iter().map(|w| position_to_diagram(w.coords())).collect::<Result<Vec<_>>>()?;
    S::from_diagrams(diagrams)
}

/// Every shape obtained by deleting one corner cell, in order of the
/// component and then the row of the deleted cell.
pub fn corner_removals<S: Shape>(shape: &S) -> Vec<S> {
    let mut out = Vec::new();
    for (l, y) in shape.diagrams().iter().enumerate() {
        for r in 0..y.rows() {
            if y.0.get(r + 1).is_some_and(|&below| below == y.0[r]) {
                continue;
            }
            let mut parts = y.0.clone();
            parts[r] -= 1;
            let mut diagrams = shape.diagrams().to_vec();
            diagrams[l] = YoungDiagram::new(parts).expect("corner removal keeps a partition");
            out.push(S::from_diagrams(diagrams).expect("same number of diagrams"));
        }
    }
    out
}

/// Partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: u64) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_into(n, n, &mut current, &mut out);
    out
}

fn partitions_into(n: u64, max: u64, current: &mut Vec<u64>, out: &mut Vec<YoungDiagram>) {
    if n == 0 {
        out.push(YoungDiagram(current.clone()));
        return;
    }
    for part in (1..=max.min(n)).rev() {
        current.push(part);
        partitions_into(n - part, part, current, out);
        current.pop();
    }
}

/// All diagrams with at most `n` cells, by size then as in [`partitions`].
pub fn diagrams_up_to(n: u64) -> Vec<YoungDiagram> {
    (0..=n).flat_map(partitions).collect()
}

/// All `k`-tuples of diagrams with at most `n` cells in total.
pub fn tuples_up_to(k: usize, n: u64) -> Vec<DiagramTuple> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    tuples_into(k, n, &mut current, &mut out);
    out
}

fn tuples_into(k: usize, budget: u64, current: &mut Vec<YoungDiagram>, out: &mut Vec<DiagramTuple>) {
    if current.len() == k {
        out.push(DiagramTuple(current.clone()));
        return;
    }
    for y in diagrams_up_to(budget) {
        let size = y.size();
        current.push(y);
        tuples_into(k, budget - size, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(parts: &[u64]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    fn t(parts: &[&[u64]]) -> DiagramTuple {
        DiagramTuple::new(parts.iter().map(|p| y(p)).collect()).unwrap()
    }

    fn b(p: u64) -> Base {
        Base::new(p).unwrap()
    }

    #[test]
    fn diagram_validation() {
        assert_eq!(y(&[3, 1, 0, 0]), y(&[3, 1]));
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert!(YoungDiagram::new(vec![2, 0, 1]).is_err());
        assert!(y(&[]).is_empty());
        assert!(DiagramTuple::new(vec![]).is_err());
    }

    #[test]
    fn position_diagram_examples() {
        assert_eq!(position_to_diagram(&[3, 7, 5]).unwrap(), y(&[5, 4, 3]));
        assert_eq!(position_to_diagram(&[5, 9, 7, 1, 0]).unwrap(), y(&[5, 4, 3]));
        assert_eq!(position_to_diagram(&[0, 1, 2, 3]).unwrap(), y(&[]));
        assert!(position_to_diagram(&[2, 2]).is_err());
        assert_eq!(diagram_to_position(&y(&[5, 4, 3]), 3).unwrap(), vec![7, 5, 3]);
        assert_eq!(diagram_to_position(&y(&[4, 3, 2]), 3).unwrap(), vec![6, 4, 2]);
        assert_eq!(diagram_to_position(&y(&[]), 3).unwrap(), vec![2, 1, 0]);
        assert_eq!(diagram_to_position(&y(&[1, 1]), 1), Err(Error::ArityTooSmall { rows: 2, m: 1 }));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_lengths(&y(&[5, 4, 3])).values(), [1, 1, 1, 2, 3, 3, 3, 4, 5, 5, 6, 7]);
        assert_eq!(hook_lengths(&y(&[1])).values(), [1]);
        assert_eq!(hook_lengths(&y(&[2, 1])).values(), [1, 1, 3]);
        assert!(y(&[2, 1]).hook_length(2, 2).is_err());
    }

    #[test]
    fn remove_hook_examples() {
        let shape = y(&[5, 4, 3]);
        assert_eq!(remove_hook(&shape, 1, 2).unwrap(), y(&[3, 2, 1]));
        assert_eq!(remove_hook(&shape, 3, 2).unwrap(), y(&[5, 4, 1]));
        assert_eq!(remove_hook(&shape, 3, 3).unwrap(), y(&[5, 4, 2]));
        assert_eq!(remove_hook(&shape, 1, 1).unwrap(), y(&[3, 2]));
        assert!(matches!(remove_hook(&shape, 3, 4), Err(Error::CellOutsideDiagram { .. })));
    }

    #[test]
    fn beta_and_cell_hook_removal_agree() {
        for shape in diagrams_up_to(9) {
            for (i, j) in shape.cells().collect::<Vec<_>>() {
                let via_beta = remove_hook(&shape, i, j).unwrap();
                assert_eq!(via_beta, remove_hook_cells(&shape, i, j).unwrap(), "{shape} ({i},{j})");
                let h = shape.hook_length(i, j).unwrap();
                assert_eq!(via_beta.size() + h, shape.size());
            }
        }
    }

    #[test]
    fn move_hook_examples() {
        assert_eq!(move_matches_hook(&[7, 5, 3], &[1, 5, 3]).unwrap(), (1, 2));
        assert_eq!(move_matches_hook(&[9], &[4]).unwrap(), (1, 5));
        assert!(move_matches_hook(&[7, 5, 3], &[1, 4, 3]).is_err());
        assert!(move_matches_hook(&[7, 5, 3], &[7, 5, 3]).is_err());
        assert!(move_matches_hook(&[7, 5, 3], &[7, 5, 5]).is_err());
    }

    #[test]
    fn tableau_count_examples() {
        assert_eq!(tableau_count(&y(&[2, 1])), BigUint::from(2u32));
        assert_eq!(tableau_count(&y(&[4, 3, 2])), BigUint::from(168u32));
        assert_eq!(tableau_count(&y(&[3, 2, 2])), BigUint::from(21u32));
        assert_eq!(tableau_count(&t(&[&[4, 4, 2], &[2, 1]])), BigUint::from(144144u32));
        assert_eq!(tableau_count(&t(&[&[2, 2, 1], &[2]])), BigUint::from(105u32));
        assert_eq!(tableau_count(&y(&[])), BigUint::from(1u32));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(tableau_count_oracle(&y(&[2, 1])).unwrap(), BigUint::from(2u32));
        assert_eq!(tableau_count_oracle(&t(&[&[2, 2, 1], &[2]])).unwrap(), BigUint::from(105u32));
        assert_eq!(tableau_count_oracle(&y(&[])).unwrap(), BigUint::from(1u32));
        assert_eq!(tableau_count_oracle(&y(&[4, 4, 3])), Err(Error::SizeCapExceeded { cells: 11, cap: 10 }));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(nu_of_fcount(b(2), &y(&[4, 3, 2])).unwrap(), 3);
        assert_eq!(nu_of_fcount(b(2), &y(&[3, 2, 2])).unwrap(), 0);
        assert_eq!(nu_of_fcount(b(7), &y(&[])).unwrap(), 0);
        assert_eq!(nu_of_fcount(b(4), &y(&[2])), Err(Error::CompositeBase(4)));
    }

    #[test]
    fn psi_diagram_examples() {
        assert_eq!(psi_diagram(b(5), &y(&[5, 4, 3])), 12);
        assert_eq!(psi_diagram(b(2), &y(&[5, 4, 3])), 6);
        assert_eq!(psi_diagram(b(2), &t(&[&[4, 4, 2], &[2, 1]])), 7);
        assert_eq!(psi_diagram(b(3), &y(&[])), 0);
    }

    #[test]
    fn pprime_examples() {
        assert_eq!(find_pprime_subdiagram(b(2), &y(&[4, 3, 2])).unwrap(), y(&[3, 2, 2]));
        let full = y(&[3, 2, 2]);
        assert_eq!(find_pprime_subdiagram(b(2), &full).unwrap(), full);
        assert_eq!(find_pprime_subdiagram(b(3), &y(&[])).unwrap(), y(&[]));
        assert_eq!(find_pprime_subdiagram(b(6), &y(&[2])), Err(Error::CompositeBase(6)));
    }

    #[test]
    fn larger_embedding_gives_same_subdiagram() {
        for p in [2, 3, 5] {
            for shape in diagrams_up_to(8) {
                let z = find_pprime_subdiagram(b(p), &shape).unwrap();
                for extra in 1..=2 {
                    assert_eq!(find_pprime_embedded(b(p), &shape, extra).unwrap(), z, "p={p} {shape}");
                }
            }
        }
    }

    #[test]
    fn corner_examples() {
        assert_eq!(corner_removals(&y(&[2, 1])), vec![y(&[1, 1]), y(&[2])]);
        assert_eq!(corner_removals(&y(&[4, 3, 2])), vec![y(&[3, 3, 2]), y(&[4, 2, 2]), y(&[4, 3, 1])]);
        assert_eq!(corner_removals(&y(&[1])), vec![y(&[])]);
        assert!(corner_removals(&y(&[])).is_empty());
        assert_eq!(corner_removals(&t(&[&[1], &[1]])), vec![t(&[&[], &[1]]), t(&[&[1], &[]])]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(3), vec![y(&[3]), y(&[2, 1]), y(&[1, 1, 1])]);
        // pairs of partitions: 1, 2, 5, 10, 20
        assert_eq!(tuples_up_to(2, 4).len(), 1 + 2 + 5 + 10 + 20);
    }

    #[test]
    fn includes_relation() {
        assert!(y(&[4, 3, 2]).includes(&y(&[3, 2, 2])));
        assert!(!y(&[4, 3, 2]).includes(&y(&[3, 3, 3])));
        assert!(!y(&[4]).includes(&y(&[1, 1])));
        assert!(y(&[4]).includes(&y(&[])));
    }
}
