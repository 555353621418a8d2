//! Welter's game and disjunctive sums of it under `p`-saturation.
//!
//! The closed form `ψ_p` gives the Sprague-Grundy value of the canonical
//! `p`-saturation of `W[m]`; sums combine by `⊕_p`. The same module holds
//! the brute-force checks of calmness and of the `p`-Nim-sum property, and
//! the constructive search for full descendants.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamecore::{all_distinct, Eval, EvalTable, GameSpec, Position, Reachability};
use crate::padic::Base;

/// A position of `W[m]`: pairwise-distinct coordinates, `m >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct WelterPosition(Vec<u64>);

impl WelterPosition {
    pub fn new(coords: Vec<u64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroArity);
        }
        if !all_distinct(&coords) {
            return Err(Error::RepeatedCoordinates(coords));
        }
        Ok(WelterPosition(coords))
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// Longest walk in `W[m]`: `Σ a^i - m(m-1)/2`.
    pub fn longest_walk(&self) -> u64 {
        let m = self.0.len() as u64;
        self.0.iter().sum::<u64>() - m * (m - 1) / 2
    }
}

impl TryFrom<Vec<u64>> for WelterPosition {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        WelterPosition::new(v)
    }
}

impl From<WelterPosition> for Vec<u64> {
    fn from(w: WelterPosition) -> Vec<u64> {
        w.0
    }
}

impl fmt::Display for WelterPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A position of `W[m¹] + ⋯ + W[m^k]`, one part per summand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SumPosition {
    parts: Vec<WelterPosition>,
}

impl SumPosition {
    pub fn new(parts: Vec<WelterPosition>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParams("a sum position needs at least one part".into()));
        }
        Ok(SumPosition { parts })
    }

    pub fn from_coords(parts: Vec<Vec<u64>>) -> Result<Self> {
        Self::new(parts.into_iter().map(WelterPosition::new).collect::<Result<_>>()?)
    }

    pub fn parts(&self) -> &[WelterPosition] {
        &self.parts
    }

    pub fn arities(&self) -> Vec<usize> {
        self.parts.iter().map(WelterPosition::arity).collect()
    }

    /// All coordinates concatenated, as a position of the sum game.
    pub fn flatten(&self) -> Position {
        self.parts.iter().flat_map(|w| w.0.iter().copied()).collect()
    }

    /// Inverse of [`flatten`](Self::flatten) for the given arities.
    pub fn unflatten(arities: &[usize], coords: &[u64]) -> Result<Self> {
        let total: usize = arities.iter().sum();
        if total != coords.len() {
            return Err(Error::ArityMismatch { expected: total, found: coords.len() });
        }
        let mut offset = 0;
        let mut parts = Vec::with_capacity(arities.len());
        for &m in arities {
            parts.push(WelterPosition::new(coords[offset..offset + m].to_vec())?);
            offset += m;
        }
        Self::new(parts)
    }

    /// Whether `other` is reachable in the saturated sum: same shape and
    /// componentwise no larger.
    pub fn dominates(&self, other: &SumPosition) -> bool {
        self.arities() == other.arities() && self.flatten().iter().zip(other.flatten()).all(|(a, b)| *a >= b)
    }
}

impl fmt::Display for SumPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|w| w.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `ψ_p(A) = ⊕_p a^i ⊕_p ⊕_{i<j} (p^{ord_p(a^i - a^j) + 1} - 1)`.
pub fn psi(p: Base, a: &[u64]) -> Result<u64> {
    if !all_distinct(a) {
        return Err(Error::RepeatedCoordinates(a.to_vec()));
    }
    let mut terms: Vec<u64> = a.to_vec();
    for (i, &x) in a.iter().enumerate() {
        for &y in &a[i + 1..] {
            terms.push(p.repdigit_allnines(x.abs_diff(y))?);
        }
    }
    Ok(p.nim_sum(terms))
}

pub fn psi_sum(p: Base, a: &SumPosition) -> Result<u64> {
    let values = a.parts.iter().map(|w| psi(p, &w.0)).collect::<Result<Vec<_>>>()?;
    Ok(p.nim_sum(values))
}

/// A pair violating the calmness congruence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalmWitness {
    pub a: Position,
    pub b: Position,
    pub n: u32,
    /// `sg(A) - sg(B)` reduced mod `p^{N+1}`.
    pub lhs: u64,
    /// `Σ (a^i - b^i)` reduced mod `p^{N+1}`.
    pub rhs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalmReport {
    pub witness: Option<CalmWitness>,
    pub pairs_checked: u64,
}

impl CalmReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks `sg~(A) - sg~(B) ≡ Σ(a^i - b^i) (mod p^{N+1})` for every in-bound
/// `A` and every proper descendant `B` of `A`.
///
/// Descendants are taken in `spec` itself; only the values come from its
/// canonical saturation. Pairs are visited with `A` in lexicographic order
/// and, for each `A`, `B` in lexicographic order.
pub fn check_calm(spec: &GameSpec, p: Base, bound: u64) -> Result<CalmReport> {
    let mut table = EvalTable::new(spec.saturate(p)?, bound)?;
    let reach = Reachability::new(spec, bound)?;
    let mut pairs_checked = 0;
    for a in spec.positions_within(bound) {
        let sg_a = table.sg(&a)?;
        for b in reach.proper_descendants(&a)? {
            pairs_checked += 1;
            if let Some(w) = calm_violation(p, &a, sg_a, &b, table.sg(&b)?) {
                return Ok(CalmReport { witness: Some(w), pairs_checked });
            }
        }
    }
    Ok(CalmReport { witness: None, pairs_checked })
}

/// The congruence for one pair, `None` when it holds.
pub fn calm_violation(p: Base, a: &[u64], sg_a: u64, b: &[u64], sg_b: u64) -> Option<CalmWitness> {
    let c: Vec<u64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let n = p.mord(&c).ok()?.finite()?;
    let modulus = p.pow(n + 1) as i128;
    let lhs = (sg_a as i128 - sg_b as i128).rem_euclid(modulus) as u64;
    let rhs = (c.iter().sum::<u64>() as i128).rem_euclid(modulus) as u64;
    (lhs != rhs).then(|| CalmWitness { a: a.to_vec(), b: b.to_vec(), n, lhs, rhs })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PnWitness {
    pub position: Position,
    /// Value in the saturation of the sum.
    pub sum_sg: u64,
    /// `⊕_p` of the summands' saturated values.
    pub nim_sum: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PnReport {
    pub witness: Option<PnWitness>,
    pub positions_checked: u64,
}

impl PnReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks `sg(sat(Γ¹ + Γ²)) = sg(sat Γ¹) ⊕_p sg(sat Γ²)` on every in-bound
/// position of the sum, stopping at the first mismatch.
pub fn check_pn(left: &GameSpec, right: &GameSpec, p: Base, bound: u64) -> Result<PnReport> {
    let sum = GameSpec::sum(&[left.clone(), right.clone()])?;
    let mut whole = EvalTable::new(sum.saturate(p)?, bound)?;
    let mut lt = EvalTable::new(left.saturate(p)?, bound)?;
    let mut rt = EvalTable::new(right.saturate(p)?, bound)?;
    let split = left.arity();
    let mut positions_checked = 0;
    for a in sum.positions_within(bound) {
        positions_checked += 1;
        let sum_sg = whole.sg(&a)?;
        let nim_sum = p.nim_sum([lt.sg(&a[..split])?, rt.sg(&a[split..])?]);
        if sum_sg != nim_sum {
            return Ok(PnReport { witness: Some(PnWitness { position: a, sum_sg, nim_sum }), positions_checked });
        }
    }
    Ok(PnReport { witness: None, positions_checked })
}

/// Highest digit level at which the summands' digits add up to `p` or
/// more, or `None` if the plain sum never carries.
fn carry_level(p: Base, alphas: &[u64]) -> Option<u32> {
    let top = alphas.iter().map(|&a| p.digits(a).len()).max().unwrap_or(0) as u32;
    (0..top).rev().find(|&l| alphas.iter().map(|&a| p.digit(a, l)).sum::<u64>() >= p.get())
}

/// The value `β` reachable by a full descendant of a sum whose parts have
/// values `alphas`: digits `p - 1` up to the highest carrying level `M`,
/// then the carry-free digits of `⊕_p alphas` above it.
pub fn target_full_value(p: Base, alphas: &[u64]) -> u64 {
    let nim = p.nim_sum(alphas.iter().copied());
    match carry_level(p, alphas) {
        None => nim,
        Some(m) => {
            let low = p.pow(m + 1);
            (low - 1) + nim / low * low
        }
    }
}

/// Splits `β` into `β^i <= α^i` with `Σ β^i = ⊕_p β^i = β`.
///
/// Digits above `M` are copied from each `α^i`. Level `M` is filled greedily
/// in index order up to `p - 1`, and the first part left strictly below its
/// `α^i_M` takes all the `p - 1` digits below `M`.
pub fn split_target(p: Base, alphas: &[u64], beta: u64) -> Result<Vec<u64>> {
    if beta != target_full_value(p, alphas) {
        return Err(Error::InvalidParams(format!("{beta} is not the full target value of {alphas:?}")));
    }
    let Some(m) = carry_level(p, alphas) else {
        return Ok(alphas.to_vec());
    };
    let low = p.pow(m);
    let high = p.pow(m + 1);
    let mut remaining = p.get() - 1;
    let mut betas = Vec::with_capacity(alphas.len());
    let mut receiver = None;
    for (i, &a) in alphas.iter().enumerate() {
        let digit = p.digit(a, m);
        let take = digit.min(remaining);
        remaining -= take;
        if take < digit && receiver.is_none() {
            receiver = Some(i);
        }
        betas.push(a / high * high + take * low);
    }
    let receiver = receiver.expect("digit sum at the carry level is at least p");
    betas[receiver] += low - 1;

    debug_assert!(betas.iter().zip(alphas).all(|(b, a)| b <= a));
    debug_assert_eq!(betas.iter().sum::<u64>(), beta);
    debug_assert_eq!(p.nim_sum(betas.iter().copied()), beta);
    Ok(betas)
}

/// Values of saturated Welter components and of saturated sums of them.
pub trait SgOracle {
    fn base(&self) -> Base;

    /// `(sg, lg)` of one component in the saturation of `W[m]`.
    fn component(&mut self, a: &[u64]) -> Result<Eval>;

    /// `(sg, lg)` in the saturation of the whole sum.
    fn sum(&mut self, a: &SumPosition) -> Result<Eval>;
}

/// Closed forms: `sg = ψ_p`, `lg = Σ a^i - m(m-1)/2`, combined over parts
/// by `⊕_p` and `+`.
#[derive(Debug, Clone, Copy)]
pub struct PsiOracle {
    p: Base,
}

impl PsiOracle {
    pub fn new(p: Base) -> Self {
        PsiOracle { p }
    }
}

impl SgOracle for PsiOracle {
    fn base(&self) -> Base {
        self.p
    }

    fn component(&mut self, a: &[u64]) -> Result<Eval> {
        let w = WelterPosition::new(a.to_vec())?;
        Ok(Eval { sg: psi(self.p, a)?, lg: w.longest_walk() })
    }

    fn sum(&mut self, a: &SumPosition) -> Result<Eval> {
        Ok(Eval { sg: psi_sum(self.p, a)?, lg: a.parts.iter().map(WelterPosition::longest_walk).sum() })
    }
}

/// Brute-force tables for the saturated sum and for each saturated
/// component arity, all capped at the same bound.
#[derive(Debug, Clone)]
pub struct BruteOracle {
    p: Base,
    arities: Vec<usize>,
    sum: EvalTable,
    components: BTreeMap<usize, EvalTable>,
}

impl BruteOracle {
    pub fn new(p: Base, arities: &[usize], bound: u64) -> Result<Self> {
        let welters = arities.iter().map(|&m| GameSpec::welter(m)).collect::<Result<Vec<_>>>()?;
        let sum = EvalTable::new(GameSpec::sum(&welters)?.saturate(p)?, bound)?;
        let mut components = BTreeMap::new();
        for &m in arities {
            if let std::collections::btree_map::Entry::Vacant(e) = components.entry(m) {
                e.insert(EvalTable::new(GameSpec::welter(m)?.saturate(p)?, bound)?);
            }
        }
        Ok(BruteOracle { p, arities: arities.to_vec(), sum, components })
    }

    pub fn sum_table(&mut self) -> &mut EvalTable {
        &mut self.sum
    }
}

impl SgOracle for BruteOracle {
    fn base(&self) -> Base {
        self.p
    }

    fn component(&mut self, a: &[u64]) -> Result<Eval> {
        match self.components.get_mut(&a.len()) {
            Some(t) => t.eval(a),
            None => Err(Error::ArityMismatch { expected: *self.arities.first().unwrap_or(&0), found: a.len() }),
        }
    }

    fn sum(&mut self, a: &SumPosition) -> Result<Eval> {
        if a.arities() != self.arities {
            return Err(Error::InvalidParams(format!(
                "sum position has arities {:?}, oracle covers {:?}",
                a.arities(),
                self.arities
            )));
        }
        self.sum.eval(&a.flatten())
    }
}

/// Descendants of `a` in `W[m]` whose coordinates keep the relative order
/// of `a`'s, in lexicographic order.
///
/// Every descendant is a rearrangement of one of these, and `ψ_p` and the
/// walk length ignore coordinate order, so nothing is lost by searching
/// only these. They correspond one-to-one to the subdiagrams of the
/// position's Young diagram.
pub fn order_preserving_descendants(a: &[u64]) -> Vec<Position> {
    let m = a.len();
    let mut by_rank: Vec<usize> = (0..m).collect();
    by_rank.sort_by(|&i, &j| a[j].cmp(&a[i]));
    let sorted: Vec<u64> = by_rank.iter().map(|&i| a[i]).collect();

    let mut out = Vec::new();
    let mut chosen = vec![0u64; m];
    fill_ranks(&sorted, 0, u64::MAX, &mut chosen, &mut |desc| {
        let mut b = vec![0u64; m];
        for (rank, &i) in by_rank.iter().enumerate() {
            b[i] = desc[rank];
        }
        out.push(b);
    });
    out.sort();
    out
}

// rank k (0-based) takes a value below the previous rank and at least m-1-k
fn fill_ranks(sorted: &[u64], k: usize, above: u64, chosen: &mut [u64], f: &mut dyn FnMut(&[u64])) {
    let m = sorted.len();
    if k == m {
        f(chosen);
        return;
    }
    let floor = (m - 1 - k) as u64;
    let cap = sorted[k].min(above.saturating_sub(1));
    if cap < floor {
        return;
    }
    for v in floor..=cap {
        chosen[k] = v;
        fill_ranks(sorted, k + 1, v, chosen, f);
    }
}

/// A full descendant `𝔹` of `𝔸` (`sg(𝔹) = lg(𝔹) = target`) in the
/// saturation of a sum of Welter's games.
///
/// With `α^i` the part values, `β` from [`target_full_value`] and its split
/// `β^i` from [`split_target`], each part is replaced by the
/// lexicographically smallest order-preserving descendant with
/// `sg = lg = β^i`. The resulting full position is then walked down by
/// full options that lower `lg` by one, always taking the lexicographically
/// smallest, until `lg` reaches the target. Such options only ever lower a
/// single coordinate by one.
pub fn full_descendant<O: SgOracle>(oracle: &mut O, a: &SumPosition, target: Option<u64>) -> Result<SumPosition> {
    let p = oracle.base();
    let start = oracle.sum(a)?;
    let target = target.unwrap_or(start.sg);
    if target > start.sg {
        return Err(Error::TargetTooLarge { target, value: start.sg });
    }

    let alphas = a.parts.iter().map(|w| oracle.component(&w.0).map(|e| e.sg)).collect::<Result<Vec<_>>>()?;
    let beta = target_full_value(p, &alphas);
    let betas = split_target(p, &alphas, beta)?;

    let mut parts = Vec::with_capacity(a.parts.len());
    for (w, &bi) in a.parts.iter().zip(&betas) {
        let mut found = None;
        for cand in order_preserving_descendants(&w.0) {
            let e = oracle.component(&cand)?;
            if e.sg == bi && e.lg == bi {
                found = Some(cand);
                break;
            }
        }
        let cand = found.ok_or_else(|| Error::SearchExhausted(format!("no full descendant of {w} with value {bi}")))?;
        parts.push(WelterPosition::new(cand)?);
    }
    let mut current = SumPosition::new(parts)?;
    let e = oracle.sum(&current)?;
    if e.sg != beta || e.lg != beta {
        return Err(Error::SearchExhausted(format!("{current} has sg {} and lg {}, expected both {beta}", e.sg, e.lg)));
    }

    let mut lg = beta;
    while lg > target {
        current = full_unit_option(oracle, &current, lg - 1)?
            .ok_or_else(|| Error::SearchExhausted(format!("{current} has no full option with value {}", lg - 1)))?;
        lg -= 1;
    }

    let e = oracle.sum(&current)?;
    if !a.dominates(&current) || e.sg != target || e.lg != target {
        return Err(Error::SearchExhausted(format!("{current} fails the postconditions")));
    }
    Ok(current)
}

/// Lexicographically smallest option lowering one coordinate by one that
/// is full with value `value`.
fn full_unit_option<O: SgOracle>(oracle: &mut O, a: &SumPosition, value: u64) -> Result<Option<SumPosition>> {
    let arities = a.arities();
    let flat = a.flatten();
    let mut best: Option<Position> = None;
    for i in 0..flat.len() {
        if flat[i] == 0 {
            continue;
        }
        let mut cand = flat.clone();
        cand[i] -= 1;
        let Ok(pos) = SumPosition::unflatten(&arities, &cand) else {
            continue;
        };
        let e = oracle.sum(&pos)?;
        if e.sg == value && e.lg == value && best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.map(|b| SumPosition::unflatten(&arities, &b)).transpose()
}
