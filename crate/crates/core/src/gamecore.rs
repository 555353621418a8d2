//! Subtraction games `Γ(P, S)` over `ℕ^m`, evaluated on a finite box.
//!
//! Moves only subtract, so the descendant cone of a position with every
//! coordinate `<= B` stays inside the box `[0, B]^m`. Every evaluation is
//! therefore bounded by an explicit componentwise cap.
//!
//! Option enumeration for [`MoveSet::Saturation`] walks the whole box
//! `{B : 0 <= B <= A}` and filters, costing `Π(a^i + 1)` per position.
//! That is fine for the small boxes this crate verifies (bounds around 12,
//! arity up to 5) and nothing more.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::{Base, Order};

/// A point of `ℕ^m`. Coordinates keep their order; nothing here sorts them.
pub type Position = Vec<u64>;

/// Membership test for `Sat^m_p` via the digit criterion: `C != 0` and,
/// with `N = mord_p(C)`, the `N`th digits of the components do not sum to
/// a multiple of `p`.
pub fn is_saturation_move(p: Base, c: &[u64]) -> bool {
    let n = match p.mord(c) {
        Ok(Order::Finite(n)) => n,
        _ => return false,
    };
    let digit_sum: u64 = c.iter().map(|&x| p.digit(x, n)).sum();
    digit_sum % p.get() != 0
}

/// `ord_p(Σ c^i) == mord_p(C)` straight from the definition.
pub fn is_saturation_move_direct(p: Base, c: &[u64]) -> bool {
    if c.iter().all(|&x| x == 0) {
        return false;
    }
    let total: u64 = c.iter().sum();
    Ok(p.ord(total)) == p.mord(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveSet {
    /// `T^m`: decrease exactly one coordinate.
    WeightOne,
    /// `Sat^m_p`.
    Saturation(Base),
    /// A finite set of nonzero vectors.
    Explicit(BTreeSet<Vec<u64>>),
    /// Disjoint union of zero-padded move sets, one per block of
    /// consecutive coordinates. The `usize` is the block's arity.
    Sum(Vec<(usize, MoveSet)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PositionSet {
    FullGrid,
    /// Pairwise-distinct coordinates (Welter's game).
    DistinctCoords,
    ExplicitFinite(BTreeSet<Vec<u64>>),
    /// Cartesian product over consecutive coordinate blocks.
    Product(Vec<(usize, PositionSet)>),
}

impl MoveSet {
    pub fn contains(&self, c: &[u64]) -> bool {
        match self {
            MoveSet::WeightOne => c.iter().filter(|&&x| x != 0).count() == 1,
            MoveSet::Saturation(p) => is_saturation_move(*p, c),
            MoveSet::Explicit(set) => set.contains(c),
            MoveSet::Sum(parts) => {
                let mut offset = 0;
                let mut hit = None;
                for (arity, moves) in parts {
                    let seg = &c[offset..offset + arity];
                    if seg.iter().any(|&x| x != 0) {
                        if hit.is_some() {
                            return false;
                        }
                        hit = Some(moves.contains(seg));
                    }
                    offset += arity;
                }
                hit.unwrap_or(false)
            }
        }
    }

    /// Condition `S ⊆ Sat^m_p`.
    fn check_star(&self, p: Base) -> Result<()> {
        match self {
            MoveSet::WeightOne => Ok(()),
            MoveSet::Saturation(q) if *q == p => Ok(()),
            MoveSet::Saturation(q) => {
                Err(Error::InvalidParams(format!("move set Sat_{q} is not contained in Sat_{p}")))
            }
            MoveSet::Explicit(set) => match set.iter().find(|c| !is_saturation_move(p, c)) {
                Some(c) => Err(Error::NotSaturationCompatible(c.clone())),
                None => Ok(()),
            },
            // zero padding changes neither the component sum nor mord
            MoveSet::Sum(parts) => parts.iter().try_for_each(|(_, m)| m.check_star(p)),
        }
    }

    /// Calls `f` with every `B = A - C` (C in this set, `B >= 0`), writing
    /// into `buf[range]` and leaving the rest of `buf` untouched.
    fn for_each_target(&self, a: &[u64], buf: &mut [u64], f: &mut dyn FnMut(&[u64])) {
        debug_assert_eq!(a.len(), buf.len());
        match self {
            MoveSet::WeightOne => {
                for i in 0..a.len() {
                    let orig = buf[i];
                    for v in 0..a[i] {
                        buf[i] = v;
                        f(buf);
                    }
                    buf[i] = orig;
                }
            }
            MoveSet::Saturation(p) => {
                let m = a.len();
                let mut c = vec![0u64; m];
                buf.copy_from_slice(a);
                // odometer over B in [0, A]; c tracks A - B
                loop {
                    let mut i = 0;
                    loop {
                        if i == m {
                            buf.copy_from_slice(a);
                            return;
                        }
                        if buf[i] > 0 {
                            buf[i] -= 1;
                            c[i] += 1;
                            break;
                        }
                        buf[i] = a[i];
                        c[i] = 0;
                        i += 1;
                    }
                    if is_saturation_move(*p, &c) {
                        f(buf);
                    }
                }
            }
            MoveSet::Explicit(set) => {
                let saved = buf.to_vec();
                for c in set {
                    if c.len() != a.len() || c.iter().zip(a).any(|(ci, ai)| ci > ai) {
                        continue;
                    }
                    for i in 0..a.len() {
                        buf[i] = a[i] - c[i];
                    }
                    f(buf);
                }
                buf.copy_from_slice(&saved);
            }
            MoveSet::Sum(parts) => {
                let mut offset = 0;
                for (arity, moves) in parts {
                    let range = offset..offset + arity;
                    let (before, rest) = buf.split_at_mut(offset);
                    let (seg, after) = rest.split_at_mut(*arity);
                    let before: &[u64] = before;
                    let after: &[u64] = after;
                    let mut whole = vec![0u64; a.len()];
                    whole[..offset].copy_from_slice(before);
                    whole[offset + arity..].copy_from_slice(after);
                    moves.for_each_target(&a[range.clone()], seg, &mut |b| {
                        whole[range.clone()].copy_from_slice(b);
                        f(&whole);
                    });
                    offset += arity;
                }
            }
        }
    }
}

impl PositionSet {
    pub fn contains(&self, a: &[u64]) -> bool {
        match self {
            PositionSet::FullGrid => true,
            PositionSet::DistinctCoords => all_distinct(a),
            PositionSet::ExplicitFinite(set) => set.contains(a),
            PositionSet::Product(parts) => {
                let mut offset = 0;
                parts.iter().all(|(arity, set)| {
                    let ok = set.contains(&a[offset..offset + arity]);
                    offset += arity;
                    ok
                })
            }
        }
    }
}

pub(crate) fn all_distinct(a: &[u64]) -> bool {
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// `Γ(P, S)` together with its arity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameSpec {
    arity: usize,
    positions: PositionSet,
    moves: MoveSet,
}

impl GameSpec {
    pub fn new(arity: usize, positions: PositionSet, moves: MoveSet) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        check_moves_arity(&moves, arity)?;
        check_positions_arity(&positions, arity)?;
        Ok(GameSpec { arity, positions, moves })
    }

    /// `Nim[m] = Γ(ℕ^m, T^m)`.
    pub fn nim(m: usize) -> Result<Self> {
        Self::new(m, PositionSet::FullGrid, MoveSet::WeightOne)
    }

    /// Welter's game: Nim restricted to pairwise-distinct coordinates.
    pub fn welter(m: usize) -> Result<Self> {
        Self::new(m, PositionSet::DistinctCoords, MoveSet::WeightOne)
    }

    /// A game with finitely many positions and move vectors.
    pub fn explicit<I, J>(arity: usize, moves: I, positions: J) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u64>>,
        J: IntoIterator<Item = Vec<u64>>,
    {
        Self::new(
            arity,
            PositionSet::ExplicitFinite(positions.into_iter().collect()),
            MoveSet::Explicit(moves.into_iter().collect()),
        )
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn positions(&self) -> &PositionSet {
        &self.positions
    }

    pub fn moves(&self) -> &MoveSet {
        &self.moves
    }

    pub fn contains(&self, a: &[u64]) -> bool {
        a.len() == self.arity && self.positions.contains(a)
    }

    fn check_position(&self, a: &[u64]) -> Result<()> {
        if a.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: a.len() });
        }
        if !self.positions.contains(a) {
            return Err(Error::NotInPositionSet(a.to_vec()));
        }
        Ok(())
    }

    /// Calls `f` on every option of `a` without allocating per option.
    /// `a` must already be a member of the position set.
    pub fn for_each_option(&self, a: &[u64], mut f: impl FnMut(&[u64])) {
        let mut buf = a.to_vec();
        let positions = &self.positions;
        self.moves.for_each_target(a, &mut buf, &mut |b| {
            if positions.contains(b) {
                f(b)
            }
        });
    }

    /// All `B` in `P` with `A - B` in `S`.
    pub fn options(&self, a: &[u64]) -> Result<Vec<Position>> {
        self.check_position(a)?;
        let mut out = Vec::new();
        self.for_each_option(a, |b| out.push(b.to_vec()));
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn is_option(&self, a: &[u64], b: &[u64]) -> bool {
        if !self.contains(a) || !self.contains(b) {
            return false;
        }
        let mut c = Vec::with_capacity(a.len());
        for (x, y) in a.iter().zip(b) {
            match x.checked_sub(*y) {
                Some(d) => c.push(d),
                None => return false,
            }
        }
        self.moves.contains(&c)
    }

    /// Fails unless `S ⊆ Sat^m_p`.
    pub fn check_star(&self, p: Base) -> Result<()> {
        self.moves.check_star(p)
    }

    /// The canonical `p`-saturation `Γ(P, Sat^m_p)`. Under `S ⊆ Sat^m_p`
    /// this has the same Sprague-Grundy function as `Γ(P, S ∪ Sat^m_p)`.
    pub fn saturate(&self, p: Base) -> Result<Self> {
        self.check_star(p)?;
        Ok(GameSpec { arity: self.arity, positions: self.positions.clone(), moves: MoveSet::Saturation(p) })
    }

    /// Disjunctive sum. Nested sums are flattened and adjacent Nim-like
    /// blocks merged, so `Nim[1] + Nim[1] == Nim[2]` structurally.
    pub fn sum(parts: &[GameSpec]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParams("a disjunctive sum needs at least one summand".into()));
        }
        let mut moves = Vec::new();
        let mut positions = Vec::new();
        for g in parts {
            match &g.moves {
                MoveSet::Sum(inner) => moves.extend(inner.iter().cloned()),
                other => moves.push((g.arity, other.clone())),
            }
            match &g.positions {
                PositionSet::Product(inner) => positions.extend(inner.iter().cloned()),
                other => positions.push((g.arity, other.clone())),
            }
        }
        let arity = parts.iter().map(|g| g.arity).sum();
        Ok(GameSpec { arity, moves: normalize_moves(moves), positions: normalize_positions(positions) })
    }

    /// All members of the position set inside `[0, bound]^m`, in
    /// lexicographic order.
    pub fn positions_within(&self, bound: u64) -> Vec<Position> {
        let mut out = Vec::new();
        let mut a = vec![0u64; self.arity];
        loop {
            if self.positions.contains(&a) {
                out.push(a.clone());
            }
            let mut i = self.arity;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if a[i] < bound {
                    a[i] += 1;
                    break;
                }
                a[i] = 0;
            }
        }
    }
}

/// Parses `nim:m`, `welter:m` or `sum:g1+g2+…` into its summands; a plain
/// game is a single summand. Whitespace is ignored.
pub fn parse_summands(text: &str) -> Result<Vec<GameSpec>> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    match text.strip_prefix("sum:") {
        Some(rest) => rest.split('+').map(parse_simple_game).collect(),
        None => Ok(vec![parse_simple_game(&text)?]),
    }
}

/// [`parse_summands`] followed by [`GameSpec::sum`].
pub fn parse_game(text: &str) -> Result<GameSpec> {
    GameSpec::sum(&parse_summands(text)?)
}

fn parse_simple_game(text: &str) -> Result<GameSpec> {
    let bad = || Error::InvalidParams(format!("cannot parse game '{text}'"));
    let (kind, m) = text.split_once(':').ok_or_else(bad)?;
    let m: usize = m.parse().map_err(|_| bad())?;
    match kind {
        "nim" => GameSpec::nim(m),
        "welter" => GameSpec::welter(m),
        _ => Err(bad()),
    }
}

/// Whether the game is `W[m]` for its arity (`W[1]` is `Nim[1]`).
pub fn is_welter(spec: &GameSpec) -> bool {
    spec.moves == MoveSet::WeightOne
        && (spec.positions == PositionSet::DistinctCoords
            || (spec.arity == 1 && spec.positions == PositionSet::FullGrid))
}

fn check_moves_arity(moves: &MoveSet, arity: usize) -> Result<()> {
    match moves {
        MoveSet::Explicit(set) => {
            for c in set {
                if c.len() != arity {
                    return Err(Error::ArityMismatch { expected: arity, found: c.len() });
                }
                if c.iter().all(|&x| x == 0) {
                    return Err(Error::InvalidMove(c.clone()));
                }
            }
            Ok(())
        }
        MoveSet::Sum(parts) => {
            let total: usize = parts.iter().map(|(a, _)| a).sum();
            if total != arity {
                return Err(Error::ArityMismatch { expected: arity, found: total });
            }
            parts.iter().try_for_each(|(a, m)| check_moves_arity(m, *a))
        }
        _ => Ok(()),
    }
}

fn check_positions_arity(positions: &PositionSet, arity: usize) -> Result<()> {
    match positions {
        PositionSet::ExplicitFinite(set) => match set.iter().find(|a| a.len() != arity) {
            Some(a) => Err(Error::ArityMismatch { expected: arity, found: a.len() }),
            None => Ok(()),
        },
        PositionSet::Product(parts) => {
            let total: usize = parts.iter().map(|(a, _)| a).sum();
            if total != arity {
                return Err(Error::ArityMismatch { expected: arity, found: total });
            }
            parts.iter().try_for_each(|(a, s)| check_positions_arity(s, *a))
        }
        _ => Ok(()),
    }
}

// Padded T^{m1} ∪ padded T^{m2} = T^{m1+m2}.
fn normalize_moves(parts: Vec<(usize, MoveSet)>) -> MoveSet {
    let mut merged: Vec<(usize, MoveSet)> = Vec::new();
    for (arity, moves) in parts {
        match (merged.last_mut(), &moves) {
            (Some((prev, MoveSet::WeightOne)), MoveSet::WeightOne) => *prev += arity,
            _ => merged.push((arity, moves)),
        }
    }
    if merged.len() == 1 {
        merged.pop().unwrap().1
    } else {
        MoveSet::Sum(merged)
    }
}

fn normalize_positions(parts: Vec<(usize, PositionSet)>) -> PositionSet {
    let mut merged: Vec<(usize, PositionSet)> = Vec::new();
    for (arity, set) in parts {
        match (merged.last_mut(), &set) {
            (Some((prev, PositionSet::FullGrid)), PositionSet::FullGrid) => *prev += arity,
            _ => merged.push((arity, set)),
        }
    }
    if merged.len() == 1 {
        merged.pop().unwrap().1
    } else {
        PositionSet::Product(merged)
    }
}

/// Sprague-Grundy value and longest-walk length of one position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eval {
    pub sg: u64,
    pub lg: u64,
}

impl Eval {
    pub fn is_full(self) -> bool {
        self.sg == self.lg
    }
}

const MAX_TABLE_CELLS: u64 = 1 << 23;
const UNSET: u32 = u32::MAX;

/// Dense box index shared by [`EvalTable`] and [`Reachability`].
#[derive(Debug, Clone)]
struct BoxIndex {
    arity: usize,
    bound: u64,
    cells: usize,
}

impl BoxIndex {
    fn new(arity: usize, bound: u64, cap: u64) -> Result<Self> {
        let side = bound.checked_add(1).ok_or(Error::TableTooLarge { arity, bound })?;
        let mut cells: u64 = 1;
        for _ in 0..arity {
            cells = cells.checked_mul(side).filter(|&c| c <= cap).ok_or(Error::TableTooLarge { arity, bound })?;
        }
        Ok(BoxIndex { arity, bound, cells: cells as usize })
    }

    fn check(&self, a: &[u64]) -> Result<()> {
        if a.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: a.len() });
        }
        if a.iter().any(|&x| x > self.bound) {
            return Err(Error::OutOfBound { position: a.to_vec(), bound: self.bound });
        }
        Ok(())
    }

    // first coordinate most significant, so index order is lexicographic
    fn index(&self, a: &[u64]) -> usize {
        let side = self.bound + 1;
        a.iter().fold(0u64, |acc, &x| acc * side + x) as usize
    }

    fn position(&self, mut idx: usize) -> Position {
        let side = (self.bound + 1) as usize;
        let mut a = vec![0u64; self.arity];
        for slot in a.iter_mut().rev() {
            *slot = (idx % side) as u64;
            idx /= side;
        }
        a
    }
}

/// Memoized `(sg, lg)` for every position of one game inside `[0, B]^m`.
///
/// A table is tied to a single game, so values for different games or
/// different `p` can never mix.
#[derive(Debug, Clone)]
pub struct EvalTable {
    spec: GameSpec,
    index: BoxIndex,
    sg: Vec<u32>,
    lg: Vec<u32>,
}

impl EvalTable {
    pub fn new(spec: GameSpec, bound: u64) -> Result<Self> {
        let index = BoxIndex::new(spec.arity, bound, MAX_TABLE_CELLS)?;
        let cells = index.cells;
        Ok(EvalTable { spec, index, sg: vec![UNSET; cells], lg: vec![UNSET; cells] })
    }

    pub fn spec(&self) -> &GameSpec {
        &self.spec
    }

    pub fn bound(&self) -> u64 {
        self.index.bound
    }

    pub fn eval(&mut self, a: &[u64]) -> Result<Eval> {
        self.index.check(a)?;
        self.spec.check_position(a)?;
        Ok(self.eval_unchecked(a))
    }

    pub fn sg(&mut self, a: &[u64]) -> Result<u64> {
        self.eval(a).map(|e| e.sg)
    }

    pub fn lg(&mut self, a: &[u64]) -> Result<u64> {
        self.eval(a).map(|e| e.lg)
    }

    pub fn is_full(&mut self, a: &[u64]) -> Result<bool> {
        self.eval(a).map(Eval::is_full)
    }

    fn eval_unchecked(&mut self, a: &[u64]) -> Eval {
        let idx = self.index.index(a);
        if self.sg[idx] != UNSET {
            return Eval { sg: self.sg[idx] as u64, lg: self.lg[idx] as u64 };
        }
        let mut options = Vec::new();
        self.spec.for_each_option(a, |b| options.push(b.to_vec()));
        let mut seen = Vec::with_capacity(options.len() + 1);
        let mut lg = 0;
        for b in &options {
            let e = self.eval_unchecked(b);
            seen.push(e.sg);
            lg = lg.max(e.lg + 1);
        }
        let sg = mex(&mut seen);
        debug_assert!(sg <= lg);
        self.sg[idx] = sg as u32;
        self.lg[idx] = lg as u32;
        Eval { sg, lg }
    }

    /// Evaluates every in-bound position, returning them in lexicographic
    /// order with their values.
    pub fn fill(&mut self) -> Vec<(Position, Eval)> {
        self.spec
            .positions_within(self.index.bound)
            .into_iter()
            .map(|a| {
                let e = self.eval_unchecked(&a);
                (a, e)
            })
            .collect()
    }
}

/// Minimum excludant. Sorts its argument.
pub fn mex(values: &mut [u64]) -> u64 {
    values.sort_unstable();
    let mut m = 0;
    for &v in values.iter() {
        if v == m {
            m += 1;
        } else if v > m {
            break;
        }
    }
    m
}

const MAX_REACH_POSITIONS: u64 = 1 << 14;

/// Descendant sets of every in-bound position, as bitsets over the box.
///
/// Options have strictly smaller box index than their parent, so one pass
/// in index order fills every set from the sets of its options.
#[derive(Debug, Clone)]
pub struct Reachability {
    index: BoxIndex,
    words: usize,
    sets: Vec<Vec<u64>>,
}

impl Reachability {
    pub fn new(spec: &GameSpec, bound: u64) -> Result<Self> {
        let index = BoxIndex::new(spec.arity, bound, MAX_REACH_POSITIONS)?;
        let words = index.cells.div_ceil(64);
        let mut sets: Vec<Vec<u64>> = vec![Vec::new(); index.cells];
        for idx in 0..index.cells {
            let a = index.position(idx);
            if !spec.positions.contains(&a) {
                continue;
            }
            let mut set = vec![0u64; words];
            set[idx / 64] |= 1 << (idx % 64);
            spec.for_each_option(&a, |b| {
                let j = index.index(b);
                for (w, src) in set.iter_mut().zip(&sets[j]) {
                    *w |= src;
                }
            });
            sets[idx] = set;
        }
        Ok(Reachability { index, words, sets })
    }

    /// Whether `b` is a descendant of `a` (including `b == a`).
    pub fn is_descendant(&self, a: &[u64], b: &[u64]) -> Result<bool> {
        self.index.check(a)?;
        self.index.check(b)?;
        let set = &self.sets[self.index.index(a)];
        if set.is_empty() {
            return Err(Error::NotInPositionSet(a.to_vec()));
        }
        let j = self.index.index(b);
        Ok(set[j / 64] >> (j % 64) & 1 == 1)
    }

    /// Proper descendants of `a` in lexicographic order.
    pub fn proper_descendants(&self, a: &[u64]) -> Result<Vec<Position>> {
        self.index.check(a)?;
        let i = self.index.index(a);
        let set = &self.sets[i];
        if set.is_empty() {
            return Err(Error::NotInPositionSet(a.to_vec()));
        }
        let mut out = Vec::new();
        for w in 0..self.words {
            let mut bits = set[w];
            while bits != 0 {
                let j = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if j != i {
                    out.push(self.index.position(j));
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(p: u64) -> Base {
        Base::new(p).unwrap()
    }

    #[test]
    fn saturation_membership_examples() {
        assert!(is_saturation_move(b(3), &[1, 0]));
        assert!(!is_saturation_move(b(3), &[1, 2]));
        assert!(is_saturation_move(b(3), &[1, 3]));
        assert!(!is_saturation_move(b(3), &[0, 0]));
    }

    #[test]
    fn weight_one_vectors_are_saturation_moves() {
        for p in [2, 3, 5, 7] {
            for m in 1..=4 {
                for i in 0..m {
                    for v in 1..=30 {
                        let mut c = vec![0; m];
                        c[i] = v;
                        assert!(is_saturation_move(b(p), &c));
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn digit_criterion_matches_definition(
            p in 2u64..8,
            c in proptest::collection::vec(0u64..200, 1..5),
        ) {
            prop_assert_eq!(is_saturation_move(b(p), &c), is_saturation_move_direct(b(p), &c));
        }
    }

    #[test]
    fn options_examples() {
        let nim2 = GameSpec::nim(2).unwrap();
        assert_eq!(nim2.options(&[1, 2]).unwrap(), vec![vec![0, 2], vec![1, 0], vec![1, 1]]);
        let w2 = GameSpec::welter(2).unwrap();
        assert_eq!(w2.options(&[1, 2]).unwrap(), vec![vec![0, 2], vec![1, 0]]);
        let sat = nim2.saturate(b(3)).unwrap();
        assert!(sat.options(&[0, 0]).unwrap().is_empty());
        assert!(w2.options(&[1, 1]).is_err());
        assert!(nim2.options(&[1]).is_err());
    }

    #[test]
    fn saturated_options_match_filtered_box() {
        let sat = GameSpec::welter(3).unwrap().saturate(b(3)).unwrap();
        let a = [5, 2, 4];
        let got = sat.options(&a).unwrap();
        let mut want = Vec::new();
        for x in 0..=5 {
            for y in 0..=2 {
                for z in 0..=4 {
                    let bb = [x, y, z];
                    let c = [5 - x, 2 - y, 4 - z];
                    if all_distinct(&bb) && is_saturation_move_direct(b(3), &c) {
                        want.push(bb.to_vec());
                    }
                }
            }
        }
        assert_eq!(got, want);
    }

    #[test]
    fn table_one_spot_values() {
        let sat = GameSpec::nim(2).unwrap().saturate(b(3)).unwrap();
        let mut t = EvalTable::new(sat, 3).unwrap();
        assert_eq!(t.sg(&[1, 1]).unwrap(), 2);
        assert_eq!(t.sg(&[1, 2]).unwrap(), 0);
        assert_eq!(t.sg(&[3, 3]).unwrap(), 6);
        assert!(matches!(t.sg(&[4, 0]), Err(Error::OutOfBound { .. })));
    }

    #[test]
    fn welter_longest_walk() {
        let mut t = EvalTable::new(GameSpec::welter(3).unwrap(), 6).unwrap();
        assert_eq!(t.lg(&[1, 3, 4]).unwrap(), 5);
        assert_eq!(t.lg(&[0, 1, 2]).unwrap(), 0);
        for (a, e) in t.fill() {
            assert_eq!(e.lg, a.iter().sum::<u64>() - 3, "{a:?}");
        }
    }

    #[test]
    fn evaluation_invariants() {
        let games = [
            GameSpec::nim(2).unwrap().saturate(b(3)).unwrap(),
            GameSpec::welter(3).unwrap().saturate(b(2)).unwrap(),
            GameSpec::welter(3).unwrap(),
        ];
        for g in games {
            let mut t = EvalTable::new(g.clone(), 5).unwrap();
            for (a, e) in t.fill() {
                assert!(e.sg <= e.lg);
                for o in g.options(&a).unwrap() {
                    assert!(t.lg(&o).unwrap() < e.lg);
                    assert_ne!(t.sg(&o).unwrap(), e.sg);
                }
            }
        }
    }

    #[test]
    fn full_position_checks() {
        let mut w3 = EvalTable::new(GameSpec::welter(3).unwrap(), 6).unwrap();
        assert!(w3.is_full(&[5, 3, 2]).unwrap());
        assert!(w3.is_full(&[0, 1, 2]).unwrap());
        let sat = GameSpec::welter(3).unwrap().saturate(b(2)).unwrap();
        let mut t = EvalTable::new(sat, 6).unwrap();
        assert_eq!(t.eval(&[6, 4, 2]).unwrap(), Eval { sg: 7, lg: 9 });
        assert!(!t.is_full(&[6, 4, 2]).unwrap());
    }

    #[test]
    fn sums_flatten_and_merge() {
        let nim1 = GameSpec::nim(1).unwrap();
        assert_eq!(GameSpec::sum(&[nim1.clone(), nim1.clone()]).unwrap(), GameSpec::nim(2).unwrap());
        let w = GameSpec::welter(3).unwrap();
        assert_eq!(GameSpec::sum(&[w.clone()]).unwrap(), w);
        let left = GameSpec::sum(&[GameSpec::sum(&[w.clone(), nim1.clone()]).unwrap(), nim1.clone()]).unwrap();
        let right = GameSpec::sum(&[w.clone(), GameSpec::sum(&[nim1.clone(), nim1.clone()]).unwrap()]).unwrap();
        assert_eq!(left, right);
        assert!(GameSpec::sum(&[]).is_err());
    }

    #[test]
    fn sum_moves_touch_one_block() {
        let g = GameSpec::sum(&[GameSpec::welter(2).unwrap(), GameSpec::welter(2).unwrap()]).unwrap();
        assert!(g.is_option(&[2, 1, 3, 0], &[0, 1, 3, 0]));
        assert!(!g.is_option(&[2, 1, 3, 0], &[0, 1, 2, 0]));
        assert!(!g.is_option(&[2, 1, 3, 0], &[1, 1, 3, 0]));
        assert!(g.options(&[1, 0, 1, 0]).unwrap().is_empty());
    }

    #[test]
    fn saturate_checks_star() {
        let p = b(3);
        let ok = GameSpec::explicit(1, [vec![3]], [vec![0], vec![3]]).unwrap();
        let sat = ok.saturate(p).unwrap();
        let mut t = EvalTable::new(sat, 3).unwrap();
        assert_eq!(t.sg(&[3]).unwrap(), 1);
        let bad = GameSpec::explicit(2, [vec![1, 2]], [vec![0, 0], vec![1, 2]]).unwrap();
        assert_eq!(bad.saturate(p), Err(Error::NotSaturationCompatible(vec![1, 2])));
        assert!(GameSpec::explicit(1, [vec![0]], [vec![0]]).is_err());
    }

    #[test]
    fn sprague_grundy_sum_rule_in_bound() {
        let w2 = GameSpec::welter(2).unwrap();
        let nim1 = GameSpec::nim(1).unwrap();
        let sum = GameSpec::sum(&[w2.clone(), nim1.clone()]).unwrap();
        let mut ts = EvalTable::new(sum.clone(), 5).unwrap();
        let mut t1 = EvalTable::new(w2, 5).unwrap();
        for (a, e) in ts.fill() {
            assert_eq!(e.sg, t1.sg(&a[..2]).unwrap() ^ a[2]);
        }
    }

    #[test]
    fn parse_games() {
        assert_eq!(parse_game("nim:2").unwrap(), GameSpec::nim(2).unwrap());
        assert_eq!(parse_game(" sum:nim:1 + nim:1 ").unwrap(), GameSpec::nim(2).unwrap());
        let parts = parse_summands("sum:welter:3+welter:1").unwrap();
        assert_eq!(parts, vec![GameSpec::welter(3).unwrap(), GameSpec::welter(1).unwrap()]);
        assert!(parts.iter().all(is_welter));
        assert!(is_welter(&GameSpec::nim(1).unwrap()));
        assert!(!is_welter(&GameSpec::nim(2).unwrap()));
        for bad in ["", "nim", "nim:x", "rim:2", "sum:", "nim:0"] {
            assert!(parse_game(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn mex_values() {
        assert_eq!(mex(&mut []), 0);
        assert_eq!(mex(&mut [1, 2]), 0);
        assert_eq!(mex(&mut [2, 0, 1, 1, 4]), 3);
    }

    #[test]
    fn reachability_in_welter() {
        let g = GameSpec::welter(2).unwrap();
        let r = Reachability::new(&g, 4).unwrap();
        assert!(r.is_descendant(&[3, 1], &[2, 0]).unwrap());
        assert!(r.is_descendant(&[3, 1], &[3, 1]).unwrap());
        assert!(!r.is_descendant(&[3, 1], &[0, 2]).unwrap());
        let d = r.proper_descendants(&[2, 1]).unwrap();
        assert_eq!(d, vec![vec![0, 1], vec![1, 0], vec![2, 0]]);
    }

    #[test]
    fn positions_within_is_lexicographic() {
        let ps = GameSpec::welter(2).unwrap().positions_within(2);
        assert_eq!(ps, vec![vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 2], vec![2, 0], vec![2, 1]]);
    }
}
