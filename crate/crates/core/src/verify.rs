//! Named exhaustive sweeps, each pitting a closed form or construction
//! against brute force and reporting a [`Verdict`].
//!
//! Sweeps visit instances in a fixed order (lexicographic over positions,
//! shapes by size) and stop at the first counterexample. Each
//! counterexample carries replay parameters whose `focus` restricts the
//! sweep to that single instance.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gamecore::{is_saturation_move, is_saturation_move_direct, is_welter, parse_summands, EvalTable, GameSpec};
use crate::padic::Base;
use crate::welter::{check_calm, check_pn, full_descendant, psi, BruteOracle, SumPosition};
use crate::young::{
    corner_removals, diagrams_up_to, find_pprime_subdiagram, hook_lengths, move_matches_hook, nu_of_fcount,
    position_to_diagram, psi_diagram, remove_hook, tableau_count, tableau_count_oracle, tuples_up_to, Shape,
    ORACLE_CELL_CAP,
};

/// Sweep parameters. Each suite reads only the fields it needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub primes: Vec<u64>,
    /// Coordinate cap; `None` uses the largest allowed for each game.
    pub bound: Option<u64>,
    /// Arities of single Welter or Nim games.
    pub arities: Vec<usize>,
    /// Game expressions as accepted by [`parse_summands`].
    pub games: Vec<String>,
    /// Cell cap for single diagrams.
    pub cells: u64,
    /// Cell cap for diagram tuples, their sizes `k`, and the bases used.
    pub tuple_cells: u64,
    pub tuple_sizes: Vec<usize>,
    pub tuple_primes: Vec<u64>,
    pub instances: u64,
    pub seed: u64,
    /// When set, only the instance equal to this value is checked.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub focus: Option<Value>,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            primes: vec![2, 3, 5],
            bound: None,
            arities: vec![1, 2, 3],
            games: Vec::new(),
            cells: 12,
            tuple_cells: 10,
            tuple_sizes: vec![2],
            tuple_primes: vec![2, 3],
            instances: 10_000,
            seed: 0x5eed,
            focus: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub suite: String,
    pub params: Params,
    pub outcome: Outcome,
    pub expected: Outcome,
    pub counterexample: Option<Value>,
    /// Parameters that re-run only the failing instance.
    pub replay: Option<Params>,
    pub positions_checked: u64,
    pub elapsed_ms: u64,
}

impl Verdict {
    /// Whether the outcome is the one the suite expects.
    pub fn ok(&self) -> bool {
        self.outcome == self.expected
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub claim: &'static str,
    pub expected: Outcome,
    pub defaults: Params,
}

struct Failure {
    p: Option<u64>,
    instance: Value,
    detail: Value,
}

struct Ctx<'a> {
    params: &'a Params,
    checked: u64,
}

impl Ctx<'_> {
    /// Counts the instance unless a focus excludes it.
    fn visit(&mut self, instance: &Value) -> bool {
        let wanted = self.params.focus.as_ref().is_none_or(|f| f == instance);
        if wanted {
            self.checked += 1;
        }
        wanted
    }
}

type SuiteFn = fn(&mut Ctx) -> Result<Option<Failure>>;

struct Suite {
    name: &'static str,
    claim: &'static str,
    expected: Outcome,
    defaults: fn() -> Params,
    run: SuiteFn,
}

const MAX_PRIME: u64 = 31;
const MAX_CELLS: u64 = 14;
const MAX_TUPLE_CELLS: u64 = 10;
const MAX_INSTANCES: u64 = 1_000_000;

/// Largest coordinate allowed for a game with the given largest summand
/// arity and total arity.
pub fn bound_cap(max_part: usize, total: usize) -> Option<u64> {
    let by_part = match max_part {
        1 | 2 => 9,
        3 => 6,
        4 => 4,
        _ => return None,
    };
    let by_total = match total {
        0..=4 => 9,
        5 => 6,
        _ => return None,
    };
    Some(by_part.min(by_total))
}

fn cap_error(name: &'static str, value: u64, cap: u64) -> Error {
    Error::ParamsExceedCaps { name, value, cap }
}

fn resolve_bound(params: &Params, parts: &[usize]) -> Result<u64> {
    let max_part = parts.iter().copied().max().unwrap_or(0);
    let total = parts.iter().sum();
    let cap = bound_cap(max_part, total).ok_or(cap_error("arity", total as u64, 5))?;
    match params.bound {
        None => Ok(cap),
        Some(b) if b <= cap => Ok(b),
        Some(b) => Err(cap_error("bound", b, cap)),
    }
}

fn base(p: u64) -> Result<Base> {
    if p > MAX_PRIME {
        return Err(cap_error("p", p, MAX_PRIME));
    }
    Base::new(p)
}

fn prime(p: u64) -> Result<Base> {
    base(p)?.require_prime()
}

fn games(params: &Params) -> Result<Vec<(String, Vec<GameSpec>)>> {
    params.games.iter().map(|g| Ok((g.clone(), parse_summands(g)?))).collect()
}

fn arities_of(parts: &[GameSpec]) -> Vec<usize> {
    parts.iter().map(GameSpec::arity).collect()
}

fn welter_arities(name: &str, parts: &[GameSpec]) -> Result<Vec<usize>> {
    if !parts.iter().all(is_welter) {
        return Err(Error::InvalidParams(format!("{name} is not a sum of Welter games")));
    }
    Ok(arities_of(parts))
}

fn two_summands(name: &str, parts: &[GameSpec]) -> Result<()> {
    if parts.len() != 2 {
        return Err(Error::InvalidParams(format!("{name} must have exactly two summands")));
    }
    Ok(())
}

fn check_caps(params: &Params) -> Result<()> {
    if params.cells > MAX_CELLS {
        return Err(cap_error("cells", params.cells, MAX_CELLS));
    }
    if params.tuple_cells > MAX_TUPLE_CELLS {
        return Err(cap_error("tuple_cells", params.tuple_cells, MAX_TUPLE_CELLS));
    }
    if params.instances > MAX_INSTANCES {
        return Err(cap_error("instances", params.instances, MAX_INSTANCES));
    }
    if let Some(&k) = params.tuple_sizes.iter().find(|&&k| k == 0 || k > 3) {
        return Err(cap_error("tuple_sizes", k as u64, 3));
    }
    for &p in params.primes.iter().chain(&params.tuple_primes) {
        base(p)?;
    }
    games(params).map(drop)
}

fn suites() -> Vec<Suite> {
    vec![
        Suite {
            name: "sg-classical-sum",
            claim: "Sprague-Grundy value of a disjunctive sum is the binary Nim-sum of the summands' values",
            expected: Outcome::Pass,
            defaults: || Params {
                games: strings(&["sum:nim:1+nim:1", "sum:welter:2+nim:1", "sum:welter:2+welter:2"]),
                bound: Some(7),
                ..Params::default()
            },
            run: sg_classical_sum,
        },
        Suite {
            name: "welter-classical",
            claim: "Welter's formula: psi_2 is the Sprague-Grundy function of Welter's game",
            expected: Outcome::Pass,
            defaults: Params::default,
            run: welter_classical,
        },
        Suite {
            name: "carry-lemma",
            claim: "coordinates congruent mod p^N: the sum of differences, the p-Nim-sum of digit differences and the digit-N term agree mod p^(N+1)",
            expected: Outcome::Pass,
            defaults: Params::default,
            run: carry_lemma,
        },
        Suite {
            name: "saturation-digit-criterion",
            claim: "membership in Sat_p is decided by the digit sum at level mord_p, and weight-one vectors are members",
            expected: Outcome::Pass,
            defaults: || Params { arities: vec![1, 2, 3, 4], ..Params::default() },
            run: saturation_digit_criterion,
        },
        Suite {
            name: "saturated-nim-table",
            claim: "reference table of Sprague-Grundy values of Nim[2] saturated at p=3",
            expected: Outcome::Pass,
            defaults: || Params { primes: vec![3], arities: vec![2], bound: Some(3), ..Params::default() },
            run: saturated_nim_table,
        },
        Suite {
            name: "saturated-nim",
            claim: "the p-saturation of Nim has Sprague-Grundy value equal to the p-Nim-sum of the heaps",
            expected: Outcome::Pass,
            defaults: Params::default,
            run: saturated_nim,
        },
        Suite {
            name: "psi-vs-brute",
            claim: "psi_p is the Sprague-Grundy function of the p-saturation of Welter's game",
            expected: Outcome::Pass,
            defaults: Params::default,
            run: psi_vs_brute,
        },
        Suite {
            name: "welter-sum",
            claim: "the p-saturation of a sum of Welter games has value equal to the p-Nim-sum of the psi_p values",
            expected: Outcome::Pass,
            defaults: || Params {
                games: strings(&[
                    "sum:welter:1+welter:1",
                    "sum:welter:1+welter:2",
                    "sum:welter:2+welter:1",
                    "sum:welter:2+welter:2",
                ]),
                bound: Some(6),
                ..Params::default()
            },
            run: welter_sum,
        },
        Suite {
            name: "welter-calm",
            claim: "Nim and Welter games are p-calm",
            expected: Outcome::Pass,
            defaults: || Params {
                games: strings(&["nim:1", "nim:2", "welter:2", "welter:3"]),
                ..Params::default()
            },
            run: welter_calm,
        },
        Suite {
            name: "calm-counterexample",
            claim: "the game on positions {0, p} with weight-one moves is not p-calm",
            expected: Outcome::Fail,
            defaults: || Params { primes: vec![3], ..Params::default() },
            run: calm_counterexample,
        },
        Suite {
            name: "pn-sum",
            claim: "the p-saturation of a sum of p-calm games has value equal to the p-Nim-sum of the saturated summands",
            expected: Outcome::Pass,
            defaults: || Params {
                games: strings(&["sum:welter:3+nim:1", "sum:welter:2+welter:2", "sum:nim:1+nim:1"]),
                bound: Some(6),
                ..Params::default()
            },
            run: pn_sum,
        },
        Suite {
            name: "pn-nim-corollary",
            claim: "a game that is not p-calm breaks the p-Nim-sum property when added to Nim[1]",
            expected: Outcome::Fail,
            defaults: || Params { primes: vec![3], ..Params::default() },
            run: pn_nim_corollary,
        },
        Suite {
            name: "full-descendants",
            claim: "every position of a saturated sum of Welter games has a full descendant with the same value",
            expected: Outcome::Pass,
            defaults: || Params {
                games: strings(&["welter:3", "sum:welter:3+welter:2"]),
                bound: Some(6),
                ..Params::default()
            },
            run: full_descendants,
        },
        Suite {
            name: "full-option-descent",
            claim: "a full position with positive value in a saturated Welter sum has a full option one step shorter",
            expected: Outcome::Pass,
            defaults: || Params {
                games: strings(&["welter:3", "sum:welter:2+welter:2"]),
                bound: Some(6),
                ..Params::default()
            },
            run: full_option_descent,
        },
        Suite {
            name: "hook-correspondence",
            claim: "a move in Welter's game removes a hook from the position's Young diagram, whose size is the longest walk",
            expected: Outcome::Pass,
            defaults: Params::default,
            run: hook_correspondence,
        },
        Suite {
            name: "hook-formula",
            claim: "the hook length formula counts standard tableaux of diagrams and diagram tuples",
            expected: Outcome::Pass,
            defaults: || Params { cells: 8, tuple_cells: 8, ..Params::default() },
            run: hook_formula,
        },
        Suite {
            name: "psi-hook-version",
            claim: "psi_p equals the p-Nim-sum of the p-norms of the hook lengths",
            expected: Outcome::Pass,
            defaults: Params::default,
            run: psi_hook_version,
        },
        Suite {
            name: "macdonald-criterion",
            claim: "the tableau count is prime to p exactly when psi_p equals the number of cells",
            expected: Outcome::Pass,
            defaults: || Params { cells: 14, tuple_sizes: vec![2, 3], ..Params::default() },
            run: macdonald_criterion,
        },
        Suite {
            name: "pprime-subdiagram",
            claim: "every diagram includes a subdiagram with psi_p cells whose tableau count is prime to p",
            expected: Outcome::Pass,
            defaults: Params::default,
            run: pprime_subdiagram,
        },
        Suite {
            name: "pprime-generalized",
            claim: "every diagram tuple includes a subtuple with psi_p cells whose tableau count is prime to p",
            expected: Outcome::Pass,
            defaults: Params::default,
            run: pprime_generalized,
        },
    ]
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Registered suites in a stable order.
pub fn list_suites() -> Vec<SuiteInfo> {
    suites()
        .into_iter()
        .map(|s| SuiteInfo { name: s.name, claim: s.claim, expected: s.expected, defaults: (s.defaults)() })
        .collect()
}

pub fn default_params(name: &str) -> Result<Params> {
    suites()
        .into_iter()
        .find(|s| s.name == name)
        .map(|s| (s.defaults)())
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// Runs one suite with its default parameters.
pub fn run_default(name: &str) -> Result<Verdict> {
    run_suite(name, &default_params(name)?)
}

pub fn run_suite(name: &str, params: &Params) -> Result<Verdict> {
    let suite = suites().into_iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    check_caps(params)?;
    let start = Instant::now();
    let mut ctx = Ctx { params, checked: 0 };
    let failure = (suite.run)(&mut ctx)?;
    let (outcome, counterexample, replay) = match failure {
        None => (Outcome::Pass, None, None),
        Some(f) => {
            let mut replay = params.clone();
            if let Some(p) = f.p {
                replay.primes = vec![p];
                replay.tuple_primes = vec![p];
            }
            replay.focus = Some(f.instance.clone());
            let cx = json!({ "p": f.p, "instance": f.instance, "detail": f.detail });
            (Outcome::Fail, Some(cx), Some(replay))
        }
    };
    Ok(Verdict {
        suite: name.to_string(),
        params: params.clone(),
        outcome,
        expected: suite.expected,
        counterexample,
        replay,
        positions_checked: ctx.checked,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn fail(p: Option<u64>, instance: Value, detail: Value) -> Result<Option<Failure>> {
    Ok(Some(Failure { p, instance, detail }))
}

fn sg_classical_sum(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for (name, parts) in games(ctx.params)? {
        two_summands(&name, &parts)?;
        let bound = resolve_bound(ctx.params, &arities_of(&parts))?;
        let sum = GameSpec::sum(&parts)?;
        let mut whole = EvalTable::new(sum.clone(), bound)?;
        let mut left = EvalTable::new(parts[0].clone(), bound)?;
        let mut right = EvalTable::new(parts[1].clone(), bound)?;
        let split = parts[0].arity();
        for a in sum.positions_within(bound) {
            let inst = json!({ "game": name, "position": a });
            if !ctx.visit(&inst) {
                continue;
            }
            let got = whole.sg(&a)?;
            let want = left.sg(&a[..split])? ^ right.sg(&a[split..])?;
            if got != want {
                return fail(None, inst, json!({ "sum_sg": got, "xor": want }));
            }
        }
    }
    Ok(None)
}

fn welter_classical(ctx: &mut Ctx) -> Result<Option<Failure>> {
    let two = Base::new(2)?;
    for &m in &ctx.params.arities {
        let bound = resolve_bound(ctx.params, &[m])?;
        let game = GameSpec::welter(m)?;
        let mut table = EvalTable::new(game.clone(), bound)?;
        for a in game.positions_within(bound) {
            let inst = json!({ "arity": m, "position": a });
            if !ctx.visit(&inst) {
                continue;
            }
            let (got, want) = (table.sg(&a)?, psi(two, &a)?);
            if got != want {
                return fail(None, inst, json!({ "sg": got, "psi": want }));
            }
        }
    }
    Ok(None)
}

fn carry_lemma(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.params.seed ^ p);
        for _ in 0..ctx.params.instances {
            let m = rng.gen_range(1..=4usize);
            let n = rng.gen_range(0..=4u32);
            let unit = base.pow(n);
            let mut a = Vec::with_capacity(m);
            let mut b = Vec::with_capacity(m);
            for _ in 0..m {
                let x: u64 = rng.gen_range(0..unit * p * p * 8);
                let y = x - unit * rng.gen_range(0..=x / unit);
                a.push(x);
                b.push(y);
            }
            let inst = json!({ "p": p, "a": a, "b": b, "n": n });
            if !ctx.visit(&inst) {
                continue;
            }
            let modulus = base.pow(n + 1);
            let plain = a.iter().zip(&b).map(|(x, y)| x - y).sum::<u64>() % modulus;
            let carry_free = base.nim_sum(a.iter().zip(&b).map(|(&x, &y)| base.nim_diff(x, y))) % modulus;
            let top = base.nim_sum(a.iter().zip(&b).map(|(&x, &y)| base.nim_diff(base.digit(x, n), base.digit(y, n))));
            let digit_term = top * unit;
            if plain != carry_free || plain != digit_term {
                return fail(
                    Some(p),
                    inst,
                    json!({ "sum": plain, "carry_free": carry_free, "digit_term": digit_term }),
                );
            }
        }
    }
    Ok(None)
}

fn saturation_digit_criterion(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        for &m in &ctx.params.arities.clone() {
            let bound = resolve_bound(ctx.params, &[m])?;
            for c in GameSpec::nim(m)?.positions_within(bound) {
                let inst = json!({ "p": p, "vector": c });
                if !ctx.visit(&inst) {
                    continue;
                }
                let digit = is_saturation_move(base, &c);
                let direct = is_saturation_move_direct(base, &c);
                let weight_one = c.iter().filter(|&&x| x != 0).count() == 1;
                if digit != direct || (weight_one && !digit) {
                    return fail(Some(p), inst, json!({ "digit": digit, "direct": direct }));
                }
            }
        }
    }
    Ok(None)
}

/// Sprague-Grundy values of `Γ(ℕ², Sat²_3)` for coordinates up to 3.
pub const TABLE_ONE: [[u64; 4]; 4] = [[0, 1, 2, 3], [1, 2, 0, 4], [2, 0, 1, 5], [3, 4, 5, 6]];

fn saturated_nim_table(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        for &m in &ctx.params.arities.clone() {
            let bound = resolve_bound(ctx.params, &[m])?;
            let game = GameSpec::nim(m)?.saturate(base)?;
            let mut table = EvalTable::new(game.clone(), bound)?;
            for a in game.positions_within(bound) {
                let inst = json!({ "p": p, "position": a });
                if !ctx.visit(&inst) {
                    continue;
                }
                let got = table.sg(&a)?;
                let reference = match (p, a.as_slice()) {
                    (3, &[x, y]) if x <= 3 && y <= 3 => TABLE_ONE[x as usize][y as usize],
                    _ => base.nim_sum(a.iter().copied()),
                };
                if got != reference {
                    return fail(Some(p), inst, json!({ "sg": got, "expected": reference }));
                }
            }
        }
    }
    Ok(None)
}

fn saturated_nim(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        for &m in &ctx.params.arities.clone() {
            let bound = resolve_bound(ctx.params, &[m])?;
            let plain = GameSpec::nim(m)?;
            let mut table = EvalTable::new(plain.saturate(base)?, bound)?;
            let mut nim = EvalTable::new(plain.clone(), bound)?;
            for a in plain.positions_within(bound) {
                let inst = json!({ "p": p, "position": a });
                if !ctx.visit(&inst) {
                    continue;
                }
                let got = table.sg(&a)?;
                let want = base.nim_sum(a.iter().copied());
                // at p = 2 the saturation changes nothing
                let classical = if p == 2 { nim.sg(&a)? } else { want };
                if got != want || got != classical {
                    return fail(Some(p), inst, json!({ "sg": got, "nim_sum": want, "nim_sg": classical }));
                }
            }
        }
    }
    Ok(None)
}

fn psi_vs_brute(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        for &m in &ctx.params.arities.clone() {
            let bound = resolve_bound(ctx.params, &[m])?;
            let game = GameSpec::welter(m)?;
            let mut table = EvalTable::new(game.saturate(base)?, bound)?;
            for a in game.positions_within(bound) {
                let inst = json!({ "p": p, "position": a });
                if !ctx.visit(&inst) {
                    continue;
                }
                let (got, want) = (table.sg(&a)?, psi(base, &a)?);
                if got != want {
                    return fail(Some(p), inst, json!({ "sg": got, "psi": want }));
                }
            }
        }
    }
    Ok(None)
}

fn welter_sum(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        for (name, parts) in games(ctx.params)? {
            let arities = welter_arities(&name, &parts)?;
            let bound = resolve_bound(ctx.params, &arities)?;
            let sum = GameSpec::sum(&parts)?;
            let mut table = EvalTable::new(sum.saturate(base)?, bound)?;
            for a in sum.positions_within(bound) {
                let inst = json!({ "p": p, "game": name, "position": a });
                if !ctx.visit(&inst) {
                    continue;
                }
                let got = table.sg(&a)?;
                let want = crate::welter::psi_sum(base, &SumPosition::unflatten(&arities, &a)?)?;
                if got != want {
                    return fail(Some(p), inst, json!({ "sg": got, "psi_sum": want }));
                }
            }
        }
    }
    Ok(None)
}

fn welter_calm(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        for (name, parts) in games(ctx.params)? {
            let bound = resolve_bound(ctx.params, &arities_of(&parts))?;
            let inst = json!({ "p": p, "game": name, "bound": bound });
            if !ctx.visit(&inst) {
                continue;
            }
            let report = check_calm(&GameSpec::sum(&parts)?, base, bound)?;
            ctx.checked += report.pairs_checked;
            if let Some(w) = report.witness {
                return fail(Some(p), inst, serde_json::to_value(w).expect("plain data"));
            }
        }
    }
    Ok(None)
}

/// `Γ({0, p}, T¹)`.
pub fn two_point_game(p: u64) -> Result<GameSpec> {
    GameSpec::explicit(1, [vec![p]], [vec![0], vec![p]])
}

fn calm_counterexample(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        let inst = json!({ "p": p });
        if !ctx.visit(&inst) {
            continue;
        }
        let report = check_calm(&two_point_game(p)?, base, p)?;
        ctx.checked += report.pairs_checked;
        if let Some(w) = report.witness {
            return fail(Some(p), inst, serde_json::to_value(w).expect("plain data"));
        }
    }
    Ok(None)
}

fn pn_sum(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        for (name, parts) in games(ctx.params)? {
            two_summands(&name, &parts)?;
            let bound = resolve_bound(ctx.params, &arities_of(&parts))?;
            let inst = json!({ "p": p, "game": name, "bound": bound });
            if !ctx.visit(&inst) {
                continue;
            }
            let report = check_pn(&parts[0], &parts[1], base, bound)?;
            ctx.checked += report.positions_checked;
            if let Some(w) = report.witness {
                return fail(Some(p), inst, serde_json::to_value(w).expect("plain data"));
            }
        }
    }
    Ok(None)
}

fn pn_nim_corollary(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        let inst = json!({ "p": p });
        if !ctx.visit(&inst) {
            continue;
        }
        let report = check_pn(&two_point_game(p)?, &GameSpec::nim(1)?, base, p)?;
        ctx.checked += report.positions_checked;
        if let Some(w) = report.witness {
            return fail(Some(p), inst, serde_json::to_value(w).expect("plain data"));
        }
    }
    Ok(None)
}

fn full_descendants(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        for (name, parts) in games(ctx.params)? {
            let arities = welter_arities(&name, &parts)?;
            let bound = resolve_bound(ctx.params, &arities)?;
            let mut oracle = BruteOracle::new(base, &arities, bound)?;
            let mut check = EvalTable::new(GameSpec::sum(&parts)?.saturate(base)?, bound)?;
            for a in GameSpec::sum(&parts)?.positions_within(bound) {
                let inst = json!({ "p": p, "game": name, "position": a });
                if !ctx.visit(&inst) {
                    continue;
                }
                let sum = SumPosition::unflatten(&arities, &a)?;
                let value = check.sg(&a)?;
                let found = match full_descendant(&mut oracle, &sum, None) {
                    Ok(z) => z,
                    Err(e) => return fail(Some(p), inst, json!({ "error": e.to_string() })),
                };
                let z = found.flatten();
                let e = check.eval(&z)?;
                let below = a.iter().zip(&z).all(|(x, y)| x >= y);
                if !below || e.sg != value || e.lg != value {
                    return fail(Some(p), inst, json!({ "descendant": z, "sg": e.sg, "lg": e.lg, "target": value }));
                }
            }
        }
    }
    Ok(None)
}

fn full_option_descent(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        for (name, parts) in games(ctx.params)? {
            welter_arities(&name, &parts)?;
            let bound = resolve_bound(ctx.params, &arities_of(&parts))?;
            let game = GameSpec::sum(&parts)?.saturate(base)?;
            let mut table = EvalTable::new(game.clone(), bound)?;
            for (a, e) in table.fill() {
                if !e.is_full() || e.lg == 0 {
                    continue;
                }
                let inst = json!({ "p": p, "game": name, "position": a });
                if !ctx.visit(&inst) {
                    continue;
                }
                let mut found = false;
                for b in game.options(&a)? {
                    let eb = table.eval(&b)?;
                    if eb.is_full() && eb.lg + 1 == e.lg {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return fail(Some(p), inst, json!({ "sg": e.sg, "lg": e.lg }));
                }
            }
        }
    }
    Ok(None)
}

fn hook_correspondence(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &m in &ctx.params.arities.clone() {
        let bound = resolve_bound(ctx.params, &[m])?;
        let game = GameSpec::welter(m)?;
        let mut table = EvalTable::new(game.clone(), bound)?;
        for a in game.positions_within(bound) {
            let inst = json!({ "position": a });
            if !ctx.visit(&inst) {
                continue;
            }
            let ya = position_to_diagram(&a)?;
            let lg = table.lg(&a)?;
            if ya.size() != lg {
                return fail(None, inst, json!({ "cells": ya.size(), "lg": lg }));
            }
            for b in game.options(&a)? {
                let (i, j) = move_matches_hook(&a, &b)?;
                let h: u64 = a.iter().zip(&b).map(|(x, y)| x - y).sum();
                let removed = remove_hook(&ya, i, j)?;
                let yb = position_to_diagram(&b)?;
                if removed != yb || ya.hook_length(i, j)? != h {
                    return fail(
                        None,
                        inst,
                        json!({ "option": b, "cell": [i, j], "removed": removed.to_string(), "expected": yb.to_string() }),
                    );
                }
            }
        }
    }
    Ok(None)
}

fn hook_formula(ctx: &mut Ctx) -> Result<Option<Failure>> {
    let cells = ctx.params.cells;
    if cells > ORACLE_CELL_CAP {
        return Err(cap_error("cells", cells, ORACLE_CELL_CAP));
    }
    for y in diagrams_up_to(cells) {
        let inst = json!({ "shape": y.to_string() });
        if !ctx.visit(&inst) {
            continue;
        }
        let f = tableau_count(&y);
        let oracle = tableau_count_oracle(&y)?;
        let recurrence = if y.is_empty() { f.clone() } else { corner_removals(&y).iter().map(tableau_count).sum() };
        if f != oracle || f != recurrence {
            return fail(
                None,
                inst,
                json!({ "f": f.to_string(), "oracle": oracle.to_string(), "recurrence": recurrence.to_string() }),
            );
        }
    }
    for &k in &ctx.params.tuple_sizes.clone() {
        for t in tuples_up_to(k, ctx.params.tuple_cells.min(ORACLE_CELL_CAP)) {
            let inst = json!({ "shape": t.to_string() });
            if !ctx.visit(&inst) {
                continue;
            }
            let (f, oracle) = (tableau_count(&t), tableau_count_oracle(&t)?);
            if f != oracle {
                return fail(None, inst, json!({ "f": f.to_string(), "oracle": oracle.to_string() }));
            }
        }
    }
    Ok(None)
}

fn psi_hook_version(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        let base = base(p)?;
        for &m in &ctx.params.arities.clone() {
            let bound = resolve_bound(ctx.params, &[m])?;
            for a in GameSpec::welter(m)?.positions_within(bound) {
                let inst = json!({ "p": p, "position": a });
                if !ctx.visit(&inst) {
                    continue;
                }
                let via_hooks = psi_diagram(base, &position_to_diagram(&a)?);
                let direct = psi(base, &a)?;
                if via_hooks != direct {
                    return fail(Some(p), inst, json!({ "hooks": via_hooks, "psi": direct }));
                }
            }
        }
    }
    Ok(None)
}

fn macdonald_check<S: Shape + ToString>(ctx: &mut Ctx, p: u64, shape: &S) -> Result<Option<Failure>> {
    let base = prime(p)?;
    let inst = json!({ "p": p, "shape": shape.to_string() });
    if !ctx.visit(&inst) {
        return Ok(None);
    }
    let nu = nu_of_fcount(base, shape)?;
    let psi = psi_diagram(base, shape);
    if (nu == 0) != (psi == shape.size()) {
        return fail(Some(p), inst, json!({ "nu": nu, "psi": psi, "cells": shape.size() }));
    }
    Ok(None)
}

fn macdonald_criterion(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        for y in diagrams_up_to(ctx.params.cells) {
            if let Some(f) = macdonald_check(ctx, p, &y)? {
                return Ok(Some(f));
            }
        }
    }
    for &p in &ctx.params.tuple_primes.clone() {
        for &k in &ctx.params.tuple_sizes.clone() {
            for t in tuples_up_to(k, ctx.params.tuple_cells) {
                if let Some(f) = macdonald_check(ctx, p, &t)? {
                    return Ok(Some(f));
                }
            }
        }
    }
    Ok(None)
}

fn pprime_check<S: Shape + ToString>(
    ctx: &mut Ctx,
    p: u64,
    shape: &S,
    includes: fn(&S, &S) -> bool,
) -> Result<Option<Failure>> {
    let base = prime(p)?;
    let inst = json!({ "p": p, "shape": shape.to_string() });
    if !ctx.visit(&inst) {
        return Ok(None);
    }
    let z = match find_pprime_subdiagram(base, shape) {
        Ok(z) => z,
        Err(e) => return fail(Some(p), inst, json!({ "error": e.to_string() })),
    };
    let psi = psi_diagram(base, shape);
    let nu = nu_of_fcount(base, &z)?;
    if !includes(shape, &z) || z.size() != psi || nu != 0 {
        return fail(Some(p), inst, json!({ "z": z.to_string(), "psi": psi, "nu": nu }));
    }
    debug_assert_eq!(hook_lengths(&z).len() as u64, z.size());
    Ok(None)
}

fn pprime_subdiagram(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.primes.clone() {
        for y in diagrams_up_to(ctx.params.cells) {
            if let Some(f) = pprime_check(ctx, p, &y, |a, b| a.includes(b))? {
                return Ok(Some(f));
            }
        }
    }
    Ok(None)
}

fn pprime_generalized(ctx: &mut Ctx) -> Result<Option<Failure>> {
    for &p in &ctx.params.tuple_primes.clone() {
        for &k in &ctx.params.tuple_sizes.clone() {
            for t in tuples_up_to(k, ctx.params.tuple_cells) {
                if let Some(f) = pprime_check(ctx, p, &t, |a, b| a.includes(b))? {
                    return Ok(Some(f));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_stable_and_large_enough() {
        let names: Vec<&str> = list_suites().iter().map(|s| s.name).collect();
        assert!(names.len() >= 10);
        assert!(names.contains(&"psi-vs-brute"));
        assert!(names.contains(&"pprime-subdiagram"));
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), names.len());
        assert_eq!(names, list_suites().iter().map(|s| s.name).collect::<Vec<_>>());
    }

    #[test]
    fn unknown_suite_and_caps() {
        assert_eq!(run_default("no-such-suite").unwrap_err(), Error::UnknownSuite("no-such-suite".into()));
        let mut params = default_params("psi-vs-brute").unwrap();
        params.bound = Some(10);
        assert!(matches!(run_suite("psi-vs-brute", &params), Err(Error::ParamsExceedCaps { .. })));
        let mut params = default_params("macdonald-criterion").unwrap();
        params.cells = 15;
        assert!(matches!(run_suite("macdonald-criterion", &params), Err(Error::ParamsExceedCaps { .. })));
    }

    #[test]
    fn table_one_suite_passes() {
        let v = run_default("saturated-nim-table").unwrap();
        assert!(v.ok() && v.outcome == Outcome::Pass);
        assert_eq!(v.positions_checked, 16);
    }

    #[test]
    fn expected_failure_is_replayable() {
        let v = run_default("calm-counterexample").unwrap();
        assert_eq!(v.outcome, Outcome::Fail);
        assert!(v.ok());
        let cx = v.counterexample.as_ref().unwrap();
        assert_eq!(cx["detail"]["a"], json!([3]));
        assert_eq!(cx["detail"]["b"], json!([0]));
        let replay = run_suite("calm-counterexample", v.replay.as_ref().unwrap()).unwrap();
        assert_eq!(replay.outcome, Outcome::Fail);
        assert_eq!(replay.counterexample, v.counterexample);
    }
}
