//! Exhaustive and analytic evaluation of decoder performance: per-class
//! fractions of non-correctable weight-j errors, the channel-weighted
//! corrected fraction beta_j, the small-p logical error rate approximation,
//! the closed form for row-confined phase-flip failures, and the
//! undetectable-error weight enumerator.

use rayon::prelude::*;

use crate::channel::{binomial, ChannelModel};
use crate::code::{CodeFamily, QubitPos, StabilizerCode};
use crate::decoder::{residual_class, Decoder};
use crate::error::Error;
use crate::pauli::{Pauli, PauliOperator, Syndrome};
use crate::rng::TrialRng;

/// Default ceiling on the number of exhaustive decodes per table.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Default number of sampled patterns per class when sampling kicks in.
pub const DEFAULT_SAMPLES_PER_CLASS: u64 = 10_000_000;

const PAULIS: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

/// Canonical class order used by the result tables: X count descending, then
/// Z count descending (XX, XZ, XY, ZZ, ZY, YY for weight 2).
pub fn class_order(weight: usize) -> Vec<(usize, usize)> {
    let mut order = Vec::new();
    for l in (0..=weight).rev() {
        for i in (0..=weight - l).rev() {
            order.push((i, l));
        }
    }
    order
}

/// Non-correctable statistics for one error class (i Z's, l X's, rest Y's).
#[derive(Clone, Debug)]
pub struct ClassFraction {
    pub z_count: usize,
    pub x_count: usize,
    pub y_count: usize,
    /// Number of ordered patterns in the class.
    pub class_size: u128,
    /// Patterns decoded (class_size when exhaustive, sample count otherwise).
    pub decoded: u64,
    pub failures: u64,
    pub exhaustive: bool,
}

impl ClassFraction {
    pub fn fraction(&self) -> f64 {
        if self.decoded == 0 {
            0.0
        } else {
            self.failures as f64 / self.decoded as f64
        }
    }

    /// Wilson 95% interval of the fraction; collapses to the point estimate
    /// under exhaustive enumeration.
    pub fn interval(&self) -> (f64, f64) {
        if self.exhaustive {
            let f = self.fraction();
            (f, f)
        } else {
            crate::monte_carlo::wilson_interval(self.failures, self.decoded, 1.96)
        }
    }

    /// Class label in the conventional letter order, e.g. `XZ` or `ZZY`.
    pub fn label(&self) -> String {
        let mut s = String::new();
        s.extend(std::iter::repeat_n('X', self.x_count));
        s.extend(std::iter::repeat_n('Z', self.z_count));
        s.extend(std::iter::repeat_n('Y', self.y_count));
        s
    }
}

/// Fractions of non-correctable weight-j errors per class.
#[derive(Clone, Debug)]
pub struct FractionTable {
    pub family: CodeFamily,
    pub d: usize,
    pub weight: usize,
    pub classes: Vec<ClassFraction>,
}

impl FractionTable {
    pub fn class(&self, z_count: usize, x_count: usize) -> &ClassFraction {
        self.classes
            .iter()
            .find(|c| c.z_count == z_count && c.x_count == x_count)
            .expect("class exists")
    }

    /// Builds a table directly from per-class fractions (in `class_order`),
    /// e.g. to evaluate beta against externally reported values.
    pub fn from_fractions(
        family: CodeFamily,
        d: usize,
        weight: usize,
        fractions: &[f64],
    ) -> FractionTable {
        let order = class_order(weight);
        assert_eq!(order.len(), fractions.len());
        let scale = 1_000_000_000u64;
        let classes = order
            .iter()
            .zip(fractions)
            .map(|(&(i, l), &f)| ClassFraction {
                z_count: i,
                x_count: l,
                y_count: weight - i - l,
                class_size: 0,
                decoded: scale,
                failures: (f * scale as f64).round() as u64,
                exhaustive: true,
            })
            .collect();
        FractionTable { family, d, weight, classes }
    }
}

/// How `enumerate_fractions` may spend its work.
#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    /// Ceiling on exhaustive decode count (C(n,j) * 3^j).
    pub budget: u64,
    /// When set, tables over budget fall back to stratified sampling with
    /// this many patterns per class.
    pub samples_per_class: Option<u64>,
    pub seed: u64,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { budget: DEFAULT_BUDGET, samples_per_class: None, seed: 1 }
    }
}

/// Number of decodes an exhaustive weight-j table costs.
pub fn exhaustive_cost(n: usize, weight: usize) -> u128 {
    binomial(n, weight) * 3u128.pow(weight as u32)
}

/// Decodes weight-j error patterns and aggregates non-correctable fractions
/// per class. Exhaustive within budget; stratified sampling beyond it when
/// enabled, refused otherwise.
pub fn enumerate_fractions(
    decoder: &Decoder,
    weight: usize,
    opts: &EnumerateOptions,
) -> Result<FractionTable, Error> {
    let code = decoder.code();
    if weight == 0 || weight > code.t() + 1 {
        return Err(Error::invalid_argument(format!(
            "weight must lie in 1..={}, got {weight}",
            code.t() + 1
        )));
    }
    let cost = exhaustive_cost(code.n(), weight);
    if cost <= opts.budget as u128 {
        Ok(enumerate_exhaustive(decoder, weight))
    } else if let Some(samples) = opts.samples_per_class {
        Ok(enumerate_sampled(decoder, weight, samples, opts.seed))
    } else {
        Err(Error::BudgetExceeded(format!(
            "weight-{weight} table needs {cost} decodes (budget {}); \
             enable sampling or raise the budget",
            opts.budget
        )))
    }
}

struct ClassIndex {
    order: Vec<(usize, usize)>,
    index: Vec<Vec<usize>>,
}

impl ClassIndex {
    fn new(weight: usize) -> ClassIndex {
        let order = class_order(weight);
        let mut index = vec![vec![usize::MAX; weight + 1]; weight + 1];
        for (slot, &(i, l)) in order.iter().enumerate() {
            index[i][l] = slot;
        }
        ClassIndex { order, index }
    }

    fn slot(&self, z_count: usize, x_count: usize) -> usize {
        self.index[z_count][x_count]
    }
}

/// Precomputed syndromes of single-qubit errors; pattern syndromes are XORs.
fn single_qubit_syndromes(code: &StabilizerCode) -> Vec<[Syndrome; 3]> {
    (0..code.n())
        .map(|q| {
            PAULIS.map(|p| {
                let e = PauliOperator::from_factors(code.n(), &[(q, p)]).unwrap();
                code.syndrome(&e).unwrap()
            })
        })
        .collect()
}

fn decode_pattern(
    decoder: &Decoder,
    singles: &[[Syndrome; 3]],
    positions: &[usize],
    paulis: &[Pauli],
) -> (usize, usize, bool) {
    let code = decoder.code();
    let mut s = Syndrome::zeros(code.generator_count());
    let mut e = PauliOperator::identity(code.n());
    let (mut z_count, mut x_count) = (0, 0);
    for (&q, &p) in positions.iter().zip(paulis) {
        let pi = PAULIS.iter().position(|&x| x == p).unwrap();
        s = s.xor(&singles[q][pi]);
        e.set(q, p);
        match p {
            Pauli::Z => z_count += 1,
            Pauli::X => x_count += 1,
            _ => {}
        }
    }
    let result = decoder.decode(&s).expect("valid syndrome");
    let class = residual_class(&e, &result, code);
    assert!(
        class != crate::decoder::ResidualClass::SyndromeMismatch,
        "decoder failed to reproduce the syndrome of {e}"
    );
    (z_count, x_count, class.is_failure())
}

fn enumerate_exhaustive(decoder: &Decoder, weight: usize) -> FractionTable {
    let code = decoder.code();
    let n = code.n();
    let classes = ClassIndex::new(weight);
    let singles = single_qubit_syndromes(code);

    // Parallel over the first position of the combination.
    let failures = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; classes.order.len()];
            let mut positions = vec![0usize; weight];
            positions[0] = first;
            enumerate_positions(decoder, &singles, &classes, &mut positions, 1, &mut counts);
            counts
        })
        .reduce(
            || vec![0u64; classes.order.len()],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );

    let total_positions = binomial(n, weight);
    let class_list = classes
        .order
        .iter()
        .zip(&failures)
        .map(|(&(i, l), &f)| {
            let m = weight - i - l;
            let class_size = total_positions
                * binomial(weight, i)
                * binomial(weight - i, l);
            ClassFraction {
                z_count: i,
                x_count: l,
                y_count: m,
                class_size,
                decoded: class_size as u64,
                failures: f,
                exhaustive: true,
            }
        })
        .collect();
    FractionTable { family: code.family(), d: code.d(), weight, classes: class_list }
}

fn enumerate_positions(
    decoder: &Decoder,
    singles: &[[Syndrome; 3]],
    classes: &ClassIndex,
    positions: &mut Vec<usize>,
    depth: usize,
    counts: &mut [u64],
) {
    let weight = positions.len();
    if depth == weight {
        let mut paulis = vec![Pauli::X; weight];
        enumerate_paulis(decoder, singles, classes, positions, &mut paulis, 0, counts);
        return;
    }
    let n = decoder.code().n();
    for q in positions[depth - 1] + 1..n {
        positions[depth] = q;
        enumerate_positions(decoder, singles, classes, positions, depth + 1, counts);
    }
}

fn enumerate_paulis(
    decoder: &Decoder,
    singles: &[[Syndrome; 3]],
    classes: &ClassIndex,
    positions: &[usize],
    paulis: &mut Vec<Pauli>,
    depth: usize,
    counts: &mut [u64],
) {
    if depth == positions.len() {
        let (z, x, failed) = decode_pattern(decoder, singles, positions, paulis);
        if failed {
            counts[classes.slot(z, x)] += 1;
        }
        return;
    }
    for p in PAULIS {
        paulis[depth] = p;
        enumerate_paulis(decoder, singles, classes, positions, paulis, depth + 1, counts);
    }
}

fn enumerate_sampled(
    decoder: &Decoder,
    weight: usize,
    samples_per_class: u64,
    seed: u64,
) -> FractionTable {
    let code = decoder.code();
    let n = code.n();
    let singles = single_qubit_syndromes(code);
    let total_positions = binomial(n, weight);
    let order = class_order(weight);
    let classes = order
        .iter()
        .enumerate()
        .map(|(class_idx, &(i, l))| {
            let m = weight - i - l;
            let mut letters = Vec::with_capacity(weight);
            letters.extend(std::iter::repeat_n(Pauli::Z, i));
            letters.extend(std::iter::repeat_n(Pauli::X, l));
            letters.extend(std::iter::repeat_n(Pauli::Y, m));
            let failures: u64 = (0..samples_per_class)
                .into_par_iter()
                .map(|sample| {
                    let mut rng = TrialRng::from_seed_and_trial(
                        seed ^ (class_idx as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15),
                        sample,
                    );
                    let mut positions = sample_positions(n, weight, &mut rng);
                    positions.sort_unstable();
                    let mut paulis = letters.clone();
                    shuffle(&mut paulis, &mut rng);
                    let (_, _, failed) =
                        decode_pattern(decoder, &singles, &positions, &paulis);
                    u64::from(failed)
                })
                .sum();
            ClassFraction {
                z_count: i,
                x_count: l,
                y_count: m,
                class_size: total_positions * binomial(weight, i) * binomial(weight - i, l),
                decoded: samples_per_class,
                failures,
                exhaustive: false,
            }
        })
        .collect();
    FractionTable { family: code.family(), d: code.d(), weight, classes }
}

fn sample_positions(n: usize, k: usize, rng: &mut TrialRng) -> Vec<usize> {
    // Floyd's algorithm for a uniform k-subset of 0..n.
    let mut chosen = Vec::with_capacity(k);
    for j in n - k..n {
        let t = rng.next_below(j as u64 + 1) as usize;
        if chosen.contains(&t) {
            chosen.push(j);
        } else {
            chosen.push(t);
        }
    }
    chosen
}

fn shuffle<T>(items: &mut [T], rng: &mut TrialRng) {
    for i in (1..items.len()).rev() {
        let j = rng.next_below(i as u64 + 1) as usize;
        items.swap(i, j);
    }
}

/// Channel-weighted fraction of weight-j errors the decoder corrects:
/// beta_j = 1 - p^-j * sum_(i,l) C(j,i) p_z^i C(j-i,l) p_x^l p_y^(j-i-l) f_j(i,l).
pub fn beta(table: &FractionTable, ch: &ChannelModel) -> Result<f64, Error> {
    if ch.p() <= 0.0 {
        return Err(Error::invalid_argument(
            "beta is undefined for p = 0".into(),
        ));
    }
    let j = table.weight;
    let mut weighted = 0.0;
    for class in &table.classes {
        let w = ch.class_weight(j, class.z_count, class.x_count)?;
        weighted += w * class.fraction();
    }
    Ok(1.0 - weighted / ch.p().powi(j as i32))
}

/// Small-p logical error rate approximation
/// p_L ~= (1 - beta_(t+1)) C(n, t+1) p^(t+1).
pub fn pl_approx(
    code: &StabilizerCode,
    ch: &ChannelModel,
    table: &FractionTable,
) -> Result<f64, Error> {
    let t = code.t();
    if table.weight != t + 1 {
        return Err(Error::invalid_argument(format!(
            "pl_approx needs the weight-{} table, got weight {}",
            t + 1,
            table.weight
        )));
    }
    if ch.p() == 0.0 {
        return Ok(0.0);
    }
    let b = beta(table, ch)?;
    Ok((1.0 - b) * binomial(code.n(), t + 1) as f64 * ch.p().powi((t + 1) as i32))
}

/// Exact fraction from the closed form for phase-flip failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma1Fraction {
    pub failing: u128,
    pub total: u128,
}

impl Lemma1Fraction {
    pub fn value(&self) -> f64 {
        self.failing as f64 / self.total as f64
    }
}

/// Closed form for the fraction of weight-(t+1) pure-Z errors the tailored
/// decoder cannot correct on a phase-flip channel: d C(d-2, t+1) / C(n, t+1).
/// Only defined for d > 3; the d=3 failure is the separate Y-degeneracy.
pub fn lemma1_fraction(d: usize, t: usize, n: usize) -> Result<Lemma1Fraction, Error> {
    if d <= 3 || d % 2 == 0 {
        return Err(Error::invalid_argument(format!(
            "closed form requires odd d > 3, got {d}"
        )));
    }
    if t != (d - 1) / 2 {
        return Err(Error::invalid_argument(format!(
            "t must equal (d-1)/2 = {}, got {t}",
            (d - 1) / 2
        )));
    }
    if n != d * d + (d - 1) * (d - 1) {
        return Err(Error::invalid_argument(format!(
            "n must equal d^2 + (d-1)^2 = {}, got {n}",
            d * d + (d - 1) * (d - 1)
        )));
    }
    Ok(Lemma1Fraction {
        failing: d as u128 * binomial(d - 2, t + 1),
        total: binomial(n, t + 1),
    })
}

/// The row-confined weight-(t+1) pure-Z patterns avoiding both Y-designated
/// columns: exactly the failing patterns counted by the closed form.
/// Returned as sorted qubit index sets.
pub fn lemma1_failing_patterns(code: &StabilizerCode) -> Result<Vec<Vec<usize>>, Error> {
    if code.family() != CodeFamily::Zzzy || code.d() <= 3 {
        return Err(Error::invalid_argument(
            "failing-pattern census applies to zzzy codes with d > 3".into(),
        ));
    }
    let lat = code.lattice();
    let d = code.d();
    let t = code.t();
    let mut patterns = Vec::new();
    for row in 0..d {
        let free_cols: Vec<usize> = (0..d)
            .filter(|&col| !lat.is_designated(lat.full(row, col)))
            .collect();
        let mut choice = vec![0usize; t + 1];
        combinations(&free_cols, t + 1, 0, &mut choice, 0, &mut |cols| {
            patterns.push(cols.iter().map(|&c| lat.full(row, c)).collect());
        });
    }
    patterns.sort();
    Ok(patterns)
}

fn combinations(
    items: &[usize],
    k: usize,
    start: usize,
    choice: &mut Vec<usize>,
    depth: usize,
    emit: &mut impl FnMut(&[usize]),
) {
    if depth == k {
        emit(choice);
        return;
    }
    for idx in start..items.len() {
        choice[depth] = items[idx];
        combinations(items, k, idx + 1, choice, depth + 1, emit);
    }
}

/// Coefficients L_w of the undetectable-error weight enumerator: the number
/// of weight-w operators commuting with every generator but acting as a
/// nontrivial logical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub coefficients: Vec<u64>,
}

impl WeightEnumerator {
    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }
}

/// Enumerates the three nontrivial logical cosets by multiplying every
/// stabilizer element (Gray-code subset walk) with each logical
/// representative. Feasible for n - k <= 16 generators.
pub fn weight_enumerator(code: &StabilizerCode) -> Result<WeightEnumerator, Error> {
    let r = code.generator_count();
    if r > 16 {
        return Err(Error::invalid_argument(format!(
            "group enumeration limited to n - k <= 16 generators, code has {r}"
        )));
    }
    let reps = [
        code.logical_x().clone(),
        code.logical_z().clone(),
        code.logical_x().compose(code.logical_z())?,
    ];
    let mut coefficients = vec![0u64; code.n() + 1];
    let mut element = PauliOperator::identity(code.n());
    let total = 1u64 << r;
    for step in 0..total {
        if step > 0 {
            // Gray-code walk: one generator toggles per step.
            let row = step.trailing_zeros() as usize;
            element = element.compose(code.row(row))?;
        }
        for rep in &reps {
            coefficients[rep.compose(&element)?.weight()] += 1;
        }
    }
    Ok(WeightEnumerator { coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{build_surface, build_zzzy};

    #[test]
    fn class_order_matches_convention() {
        let labels: Vec<String> = {
            let table = FractionTable::from_fractions(
                CodeFamily::Surface,
                3,
                2,
                &[0.0; 6],
            );
            table.classes.iter().map(|c| c.label()).collect()
        };
        assert_eq!(labels, ["XX", "XZ", "XY", "ZZ", "ZY", "YY"]);
        let table = FractionTable::from_fractions(CodeFamily::Surface, 5, 3, &[0.0; 10]);
        let labels: Vec<String> = table.classes.iter().map(|c| c.label()).collect();
        assert_eq!(
            labels,
            ["XXX", "XXZ", "XXY", "XZZ", "XZY", "XYY", "ZZZ", "ZZY", "ZYY", "YYY"]
        );
    }

    #[test]
    fn zzzy_d3_zz_class_is_one_failure_in_78() {
        let code = build_zzzy(3).unwrap();
        let decoder = Decoder::new(&code);
        let table =
            enumerate_fractions(&decoder, 2, &EnumerateOptions::default()).unwrap();
        let zz = table.class(2, 0);
        assert_eq!(zz.failures, 1);
        assert_eq!(zz.decoded, 78);
        assert!((zz.fraction() - 1.0 / 78.0).abs() < 1e-12);
    }

    #[test]
    fn surface_d3_xz_class_is_exactly_zero() {
        let code = build_surface(3).unwrap();
        let decoder = Decoder::new(&code);
        let table =
            enumerate_fractions(&decoder, 2, &EnumerateOptions::default()).unwrap();
        assert_eq!(table.class(1, 1).failures, 0);
    }

    #[test]
    fn weight_one_tables_are_all_zero() {
        for family in ["surface", "zzzy", "zzzy-dual", "xzzx"] {
            let code = crate::code::build(family.parse().unwrap(), 3).unwrap();
            let decoder = Decoder::new(&code);
            let table =
                enumerate_fractions(&decoder, 1, &EnumerateOptions::default()).unwrap();
            for class in &table.classes {
                assert_eq!(class.failures, 0, "{family} {}", class.label());
            }
        }
    }

    #[test]
    fn budget_refusal_carries_estimate() {
        let code = build_zzzy(3).unwrap();
        let decoder = Decoder::new(&code);
        let opts = EnumerateOptions { budget: 10, samples_per_class: None, seed: 1 };
        let err = enumerate_fractions(&decoder, 2, &opts).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("702"), "{msg}");
    }

    #[test]
    fn sampled_mode_approximates_exhaustive() {
        let code = build_zzzy(3).unwrap();
        let decoder = Decoder::new(&code);
        let exact =
            enumerate_fractions(&decoder, 2, &EnumerateOptions::default()).unwrap();
        let opts = EnumerateOptions {
            budget: 10,
            samples_per_class: Some(4000),
            seed: 9,
        };
        let sampled = enumerate_fractions(&decoder, 2, &opts).unwrap();
        for (a, b) in exact.classes.iter().zip(&sampled.classes) {
            assert!(!b.exhaustive);
            let (lo, hi) = b.interval();
            let f = a.fraction();
            assert!(
                f >= lo - 0.02 && f <= hi + 0.02,
                "{}: exact {f}, sampled {} [{lo}, {hi}]",
                a.label(),
                b.fraction()
            );
        }
    }

    #[test]
    fn weight_out_of_contract_rejected() {
        let code = build_zzzy(3).unwrap();
        let decoder = Decoder::new(&code);
        assert!(enumerate_fractions(&decoder, 0, &EnumerateOptions::default()).is_err());
        assert!(enumerate_fractions(&decoder, 3, &EnumerateOptions::default()).is_err());
    }

    #[test]
    fn beta_of_all_zero_table_is_one() {
        let table = FractionTable::from_fractions(CodeFamily::Surface, 3, 2, &[0.0; 6]);
        let ch = ChannelModel::new(0.01, 1.0).unwrap();
        assert!((beta(&table, &ch).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn beta_rejects_p_zero() {
        let table = FractionTable::from_fractions(CodeFamily::Surface, 3, 2, &[0.0; 6]);
        let ch = ChannelModel::new(0.0, 1.0).unwrap();
        assert!(beta(&table, &ch).is_err());
    }

    #[test]
    fn surface_depolarizing_beta_from_reported_fractions() {
        // Fractions as reported for the d=3 surface code; depolarizing beta_2.
        let table = FractionTable::from_fractions(
            CodeFamily::Surface,
            3,
            2,
            &[0.27, 0.0, 0.27, 0.27, 0.27, 0.51],
        );
        let ch = ChannelModel::new(0.001, 1.0).unwrap();
        let b = beta(&table, &ch).unwrap();
        assert!((b - (1.0 - 2.13 / 9.0)).abs() < 1e-9, "{b}");
        assert!((b - 0.763).abs() < 5e-4);
    }

    #[test]
    fn phase_flip_beta_only_sees_the_zz_class() {
        let code = build_zzzy(3).unwrap();
        let decoder = Decoder::new(&code);
        let table =
            enumerate_fractions(&decoder, 2, &EnumerateOptions::default()).unwrap();
        let ch = ChannelModel::new(0.001, f64::INFINITY).unwrap();
        let b = beta(&table, &ch).unwrap();
        assert!((b - (1.0 - 1.0 / 78.0)).abs() < 1e-12);
        assert!((b - 0.987).abs() < 5e-4);
    }

    #[test]
    fn pl_approx_phase_flip_example() {
        let code = build_zzzy(3).unwrap();
        let decoder = Decoder::new(&code);
        let table =
            enumerate_fractions(&decoder, 2, &EnumerateOptions::default()).unwrap();
        let ch = ChannelModel::new(0.001, f64::INFINITY).unwrap();
        let pl = pl_approx(&code, &ch, &table).unwrap();
        // (1/78) * C(13,2) * p^2 = p^2 exactly.
        assert!((pl - 1.0e-6).abs() < 1e-12, "{pl}");
    }

    #[test]
    fn pl_approx_zero_when_beta_is_one() {
        let code = build_surface(3).unwrap();
        let table = FractionTable::from_fractions(CodeFamily::Surface, 3, 2, &[0.0; 6]);
        let ch = ChannelModel::new(0.001, 1.0).unwrap();
        assert_eq!(pl_approx(&code, &ch, &table).unwrap(), 0.0);
    }

    #[test]
    fn lemma1_values() {
        let f = lemma1_fraction(5, 2, 41).unwrap();
        assert_eq!(f.failing, 5);
        assert_eq!(f.total, 10660);
        let f7 = lemma1_fraction(7, 3, 85).unwrap();
        assert_eq!(f7.failing, 35);
        assert_eq!(f7.total, 2024785);
        assert!(lemma1_fraction(3, 1, 13).is_err());
        assert!(lemma1_fraction(5, 1, 41).is_err());
        assert!(lemma1_fraction(5, 2, 40).is_err());
    }

    #[test]
    fn lemma1_pattern_census_counts() {
        let code = build_zzzy(5).unwrap();
        let patterns = lemma1_failing_patterns(&code).unwrap();
        assert_eq!(patterns.len(), 5);
        for p in &patterns {
            assert_eq!(p.len(), 3);
            // Row confined: all in the same full row.
            let lat = code.lattice();
            let rows: Vec<usize> = p
                .iter()
                .map(|&q| match lat.pos(q) {
                    QubitPos::Full { row, .. } => row,
                    _ => panic!("half-row qubit in census"),
                })
                .collect();
            assert!(rows.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn enumerator_rejects_large_codes() {
        let code = build_zzzy(5).unwrap();
        assert!(weight_enumerator(&code).is_err());
    }

    #[test]
    fn enumerator_total_is_three_cosets() {
        let code = build_zzzy(3).unwrap();
        let w = weight_enumerator(&code).unwrap();
        assert_eq!(w.total(), 3 * 4096);
        assert_eq!(w.coefficients[0], 0);
        assert_eq!(w.coefficients[1], 0);
        assert_eq!(w.coefficients[2], 0);
    }
}
