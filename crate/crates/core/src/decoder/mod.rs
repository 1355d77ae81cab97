//! Two-pass matching decoders for the code families built by this crate.
//!
//! The decode pipeline follows the classic CSS split: an X-side pass matches
//! the highlighted X generators and yields the Z-like corrections, then a
//! Z-side pass yields the X-like corrections. For ZZZY codes two extra steps
//! surround the passes: [`update_weights`] biases the first pass using the
//! ZY generators, and between the passes the syndrome bit of every ZY
//! generator whose Y qubit received a Z correction is toggled, so the second
//! pass does not chase measurement flips the correction already explains.
//! XZZX codes run the same two passes on their vertex/plaquette graphs with
//! mixed per-qubit corrections. The dual ZZZY code is decoded by conjugating
//! the problem onto its primal twin, which is an exact reduction.

mod blossom;
pub mod distance;
pub mod matching;
pub mod weights;

pub use distance::{DecodePass, DistanceMatrix};
pub use matching::{mwpm, MatchingProblem, DP_MAX_NODES};
pub use weights::{update_weights, update_weights_with_stats, UpdateStats, WeightVector};

use crate::code::{CodeFamily, QubitPos, StabilizerCode};
use crate::error::Error;
use crate::pauli::{Bits, Pauli, PauliOperator, Syndrome};
use distance::PassGraph;

/// How one matched pair was resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchKind {
    /// Two highlighted ancillas matched through the lattice (H row indices).
    Ancillas(usize, usize),
    /// A highlighted ancilla matched to the lattice boundary.
    ToBoundary(usize),
}

/// One matched pair with its path cost and the qubits the path crosses.
#[derive(Clone, Debug)]
pub struct MatchedPair {
    pub kind: MatchKind,
    pub cost: f64,
    pub path: Vec<usize>,
}

/// Decode outcome plus the per-pass artifacts kept for tracing.
#[derive(Clone, Debug)]
pub struct DecodeResult {
    /// Estimated channel error; explains the full input syndrome.
    pub e_hat: PauliOperator,
    /// Qubit weights after preprocessing (all ones for plain families).
    pub weights: WeightVector,
    /// Syndrome after the inter-pass ZY flip step.
    pub flipped_syndrome: Syndrome,
    pub x_matching: Vec<MatchedPair>,
    pub z_matching: Vec<MatchedPair>,
}

/// Classification of the residual error left after applying a correction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidualClass {
    NoError,
    LogicalX,
    LogicalZ,
    LogicalY,
    /// The correction failed to reproduce the syndrome: a decoder bug.
    SyndromeMismatch,
}

impl ResidualClass {
    pub fn is_failure(self) -> bool {
        self != ResidualClass::NoError
    }
}

/// Classifies the residual `e * e_hat` by its action on the logical qubit.
pub fn residual_class(
    e: &PauliOperator,
    result: &DecodeResult,
    code: &StabilizerCode,
) -> ResidualClass {
    let residual = e.compose(&result.e_hat).expect("operator lengths match");
    let s = code.syndrome(&residual).expect("operator lengths match");
    if !s.is_zero() {
        return ResidualClass::SyndromeMismatch;
    }
    let flips_x = !residual.commutes(code.logical_x()).unwrap();
    let flips_z = !residual.commutes(code.logical_z()).unwrap();
    match (flips_x, flips_z) {
        (false, false) => ResidualClass::NoError,
        (true, false) => ResidualClass::LogicalZ,
        (false, true) => ResidualClass::LogicalX,
        (true, true) => ResidualClass::LogicalY,
    }
}

/// Reusable decoder for one code; precomputes the pass graphs once.
pub struct Decoder {
    code: StabilizerCode,
    x_graph: PassGraph,
    z_graph: PassGraph,
    /// Set for the dual family: the primal decoder plus the qubit map
    /// primal -> dual.
    primal: Option<(Box<Decoder>, Vec<usize>)>,
    /// When false, the ZY weight preprocessing is skipped (plain baseline);
    /// the structural inter-pass flip always runs.
    use_weights: bool,
}

fn pass_graphs(code: &StabilizerCode) -> (PassGraph, PassGraph) {
    let lattice = *code.lattice();
    let (x_corr, z_corr): (fn(&Lat, usize) -> Pauli, fn(&Lat, usize) -> Pauli) =
        match code.family() {
            CodeFamily::Xzzx => (
                |lat, q| match lat.pos(q) {
                    QubitPos::Full { .. } => Pauli::Z,
                    QubitPos::Half { .. } => Pauli::X,
                },
                |lat, q| match lat.pos(q) {
                    QubitPos::Full { .. } => Pauli::X,
                    QubitPos::Half { .. } => Pauli::Z,
                },
            ),
            _ => (|_, _| Pauli::Z, |_, _| Pauli::X),
        };
    type Lat = crate::code::Lattice;
    let x_graph = PassGraph::build(code, code.z_block_len()..code.generator_count(), |q| {
        x_corr(&lattice, q)
    });
    let z_graph = PassGraph::build(code, 0..code.z_block_len(), |q| z_corr(&lattice, q));
    (x_graph, z_graph)
}

impl Decoder {
    pub fn new(code: &StabilizerCode) -> Decoder {
        Decoder::build(code, true)
    }

    /// Plain-matching baseline: uniform first-pass weights even on ZZZY codes.
    pub fn new_plain(code: &StabilizerCode) -> Decoder {
        Decoder::build(code, false)
    }

    fn build(code: &StabilizerCode, use_weights: bool) -> Decoder {
        match code.family() {
            CodeFamily::ZzzyDual => {
                let primal_code = crate::code::build_zzzy(code.d()).expect("valid distance");
                let primal = Decoder::build(&primal_code, use_weights);
                let perm = code.dual_perm().expect("dual code carries its permutation").to_vec();
                let (x_graph, z_graph) = pass_graphs(&primal_code);
                Decoder {
                    code: code.clone(),
                    x_graph,
                    z_graph,
                    primal: Some((Box::new(primal), perm)),
                    use_weights,
                }
            }
            _ => {
                let (x_graph, z_graph) = pass_graphs(code);
                Decoder { code: code.clone(), x_graph, z_graph, primal: None, use_weights }
            }
        }
    }

    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    pub fn decode(&self, s: &Syndrome) -> Result<DecodeResult, Error> {
        if s.len() != self.code.generator_count() {
            return Err(Error::invalid_argument(format!(
                "syndrome has {} bits but the code has {} generators",
                s.len(),
                self.code.generator_count()
            )));
        }
        match &self.primal {
            None => self.decode_direct(s),
            Some((primal, perm)) => {
                // Generator rows of the dual correspond 1:1 to the primal's,
                // so the syndrome carries over verbatim; the estimate maps
                // back through the X/Z swap and the lattice transposition.
                let mut result = primal.decode_direct(s)?;
                result.e_hat = result.e_hat.hadamard_transform().permuted(perm);
                let mut weights = WeightVector::ones(self.code.n());
                for q in 0..self.code.n() {
                    weights.set(perm[q], result.weights.get(q));
                }
                result.weights = weights;
                for pair in result.x_matching.iter_mut().chain(&mut result.z_matching) {
                    for q in &mut pair.path {
                        *q = perm[*q];
                    }
                }
                Ok(result)
            }
        }
    }

    fn decode_direct(&self, s: &Syndrome) -> Result<DecodeResult, Error> {
        let code = &self.code;
        let n = code.n();

        // X-side pass with preprocessed weights.
        let weights = if code.n_zy() > 0 && self.use_weights {
            update_weights(s, &WeightVector::ones(n), code)
        } else {
            WeightVector::ones(n)
        };
        let x_rows: Vec<usize> =
            (code.z_block_len()..code.generator_count()).filter(|&i| s.get(i)).collect();
        let (x_toggles, x_matching) = run_pass(&self.x_graph, &weights.tenths(), &x_rows)?;

        // Toggle every ZY generator whose Y qubit received a Z-like correction.
        let mut flipped = s.clone();
        for i in 0..code.n_zy() {
            if x_toggles.get(code.h_map(i)) {
                flipped.toggle(i);
            }
        }

        // Z-side pass on uniform weights and the flipped syndrome.
        let uniform = WeightVector::ones(n);
        let z_rows: Vec<usize> = (0..code.z_block_len()).filter(|&i| flipped.get(i)).collect();
        let (z_toggles, z_matching) = run_pass(&self.z_graph, &uniform.tenths(), &z_rows)?;

        let mut e_hat = PauliOperator::identity(n);
        for q in x_toggles.iter_ones() {
            let p = self.x_graph.correction[q].expect("toggled qubit belongs to the pass");
            e_hat.set(q, p);
        }
        for q in z_toggles.iter_ones() {
            let p = self.z_graph.correction[q].expect("toggled qubit belongs to the pass");
            let combined = match (e_hat.get(q), p) {
                (Pauli::I, p) => p,
                (a, b) if a == b => Pauli::I,
                (Pauli::Z, Pauli::X) | (Pauli::X, Pauli::Z) => Pauli::Y,
                (a, b) => panic!("unexpected correction overlap {a:?}/{b:?}"),
            };
            e_hat.set(q, combined);
        }

        Ok(DecodeResult { e_hat, weights, flipped_syndrome: flipped, x_matching, z_matching })
    }
}

/// Runs one pass: distances, matching, and path XOR. Returns the per-qubit
/// toggle parities and the matched pairs for tracing.
fn run_pass(
    graph: &PassGraph,
    weights: &[i64],
    highlighted_rows: &[usize],
) -> Result<(Bits, Vec<MatchedPair>), Error> {
    let n = graph.correction.len();
    let mut toggles = Bits::zeros(n);
    let mut matching = Vec::new();
    if highlighted_rows.is_empty() {
        return Ok((toggles, matching));
    }
    let dm = distance::distances(graph, weights, highlighted_rows)?;
    let problem = MatchingProblem::from_distances(&dm);
    let pairs = mwpm(&problem)?;
    let k = dm.node_count();
    for (a, b) in pairs {
        let (kind, cost, path) = if a < k && b < k {
            (
                MatchKind::Ancillas(dm.node_row(a), dm.node_row(b)),
                dm.cost(a, b),
                dm.path(a, b).to_vec(),
            )
        } else if a < k {
            debug_assert_eq!(b, k + a, "ancilla may only take its own boundary copy");
            (MatchKind::ToBoundary(dm.node_row(a)), dm.boundary_cost(a), dm.boundary_path(a).to_vec())
        } else {
            continue; // boundary-boundary pair, no correction
        };
        for &q in &path {
            toggles.set(q, !toggles.get(q));
        }
        matching.push(MatchedPair { kind, cost, path });
    }
    Ok((toggles, matching))
}

/// Decodes a syndrome of a ZZZY code (or its dual) with the full
/// weight-preprocessing pipeline. Convenience wrapper; build a [`Decoder`]
/// once when decoding in a loop.
pub fn zzzy_decode(s: &Syndrome, code: &StabilizerCode) -> Result<DecodeResult, Error> {
    if !matches!(code.family(), CodeFamily::Zzzy | CodeFamily::ZzzyDual) {
        return Err(Error::invalid_argument(format!(
            "zzzy_decode expects a zzzy code, got {}",
            code.family()
        )));
    }
    Decoder::new(code).decode(s)
}

/// Two independent uniform-weight matching passes on a plain surface code.
pub fn surface_decode(s: &Syndrome, code: &StabilizerCode) -> Result<DecodeResult, Error> {
    if code.family() != CodeFamily::Surface {
        return Err(Error::invalid_argument(format!(
            "surface_decode expects a surface code, got {}",
            code.family()
        )));
    }
    Decoder::new(code).decode(s)
}

/// Independent primal/dual matching passes on an XZZX code.
pub fn xzzx_decode(s: &Syndrome, code: &StabilizerCode) -> Result<DecodeResult, Error> {
    if code.family() != CodeFamily::Xzzx {
        return Err(Error::invalid_argument(format!(
            "xzzx_decode expects an xzzx code, got {}",
            code.family()
        )));
    }
    Decoder::new(code).decode(s)
}

/// Distance matrix between the highlighted ancillas of one pass, as used by
/// the matching step. For ZZZY codes pass the preprocessed weights for the
/// X pass and uniform weights for the Z pass.
pub fn compute_distance(
    s: &Syndrome,
    q: &WeightVector,
    code: &StabilizerCode,
    pass: DecodePass,
) -> Result<DistanceMatrix, Error> {
    if s.len() != code.generator_count() {
        return Err(Error::invalid_argument(format!(
            "syndrome has {} bits but the code has {} generators",
            s.len(),
            code.generator_count()
        )));
    }
    if q.len() != code.n() {
        return Err(Error::invalid_argument(format!(
            "weight vector has {} entries but the code has {} qubits",
            q.len(),
            code.n()
        )));
    }
    if code.family() == CodeFamily::ZzzyDual {
        let primal = crate::code::build_zzzy(code.d())?;
        let perm = code.dual_perm().expect("dual code carries its permutation");
        let mut q_primal = WeightVector::ones(code.n());
        for qubit in 0..code.n() {
            q_primal.set(qubit, q.get(perm[qubit]));
        }
        let mut dm = compute_distance(s, &q_primal, &primal, pass)?;
        dm.permute_qubits(perm);
        return Ok(dm);
    }
    let (x_graph, z_graph) = pass_graphs(code);
    let (graph, rows) = match pass {
        DecodePass::X => (&x_graph, code.z_block_len()..code.generator_count()),
        DecodePass::Z => (&z_graph, 0..code.z_block_len()),
    };
    let highlighted: Vec<usize> = rows.filter(|&i| s.get(i)).collect();
    distance::distances(graph, &q.tenths(), &highlighted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{build, build_surface, build_xzzx, build_zzzy, build_zzzy_dual};

    fn decode_error(decoder: &Decoder, text: &str) -> (PauliOperator, DecodeResult, ResidualClass) {
        let code = decoder.code();
        let e = PauliOperator::parse(code.n(), text).unwrap();
        let s = code.syndrome(&e).unwrap();
        let result = decoder.decode(&s).unwrap();
        let class = residual_class(&e, &result, code);
        (e, result, class)
    }

    #[test]
    fn z1_is_corrected_exactly_with_flip_step() {
        let decoder = Decoder::new(&build_zzzy(3).unwrap());
        let (e, result, class) = decode_error(&decoder, "Z1");
        assert_eq!(result.e_hat, e);
        assert_eq!(class, ResidualClass::NoError);
        // The flip step must deactivate A3 so the Z pass stays empty.
        assert!(result.z_matching.is_empty());
        let g3_row = (0..6).find(|&i| decoder.code().label(i) == 3).unwrap();
        assert!(!result.flipped_syndrome.get(g3_row));
    }

    #[test]
    fn z2_z3_corrected_through_forced_weight() {
        let decoder = Decoder::new(&build_zzzy(3).unwrap());
        let (e, result, class) = decode_error(&decoder, "Z2 Z3");
        assert_eq!(result.weights.get(2), weights::WEIGHT_FORCED);
        assert_eq!(result.e_hat, e);
        assert_eq!(class, ResidualClass::NoError);
    }

    #[test]
    fn z2_z3_fails_without_preprocessing_on_plain_surface() {
        let code = build_surface(3).unwrap();
        let decoder = Decoder::new(&code);
        let e = PauliOperator::parse(13, "Z1 Z2").unwrap();
        let s = code.syndrome(&e).unwrap();
        let result = decoder.decode(&s).unwrap();
        // The plain decoder picks the single-qubit explanation Z3.
        assert_eq!(result.e_hat, PauliOperator::parse(13, "Z3").unwrap());
        assert_eq!(residual_class(&e, &result, &code), ResidualClass::LogicalZ);
    }

    #[test]
    fn z6_z8_collapses_to_y7_degeneracy() {
        let code = build_zzzy(3).unwrap();
        let decoder = Decoder::new(&code);
        let (_, result, class) = decode_error(&decoder, "Z6 Z8");
        assert_eq!(result.e_hat, PauliOperator::parse(13, "Y7").unwrap());
        assert_eq!(class, ResidualClass::LogicalZ);
    }

    #[test]
    fn fig2b_boundary_distance_is_0_9() {
        // After update_weights for the Z2 Z3 error, A1's cheapest route to a
        // boundary runs right through qubits 2 and 3 at cost 1.0 - 0.1.
        let code = build_zzzy(3).unwrap();
        let e = PauliOperator::parse(13, "Z2 Z3").unwrap();
        let s = code.syndrome(&e).unwrap();
        let q = update_weights(&s, &WeightVector::ones(13), &code);
        let dm = compute_distance(&s, &q, &code, DecodePass::X).unwrap();
        assert_eq!(dm.node_count(), 1);
        assert_eq!(code.label(dm.node_row(0)), 1);
        assert!((dm.boundary_cost(0) - 0.9).abs() < 1e-9);
        assert_eq!(dm.boundary_path(0), &[1, 2]);
    }

    #[test]
    fn uniform_distances_count_hops() {
        let code = build_surface(3).unwrap();
        let e = PauliOperator::parse(13, "Z4 Z9").unwrap();
        let s = code.syndrome(&e).unwrap();
        let dm = compute_distance(&s, &WeightVector::ones(13), &code, DecodePass::X).unwrap();
        // G1 and G11 are two vertical hops apart.
        assert_eq!(dm.node_count(), 2);
        assert!((dm.cost(0, 1) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn surface_single_errors_all_corrected() {
        let code = build_surface(3).unwrap();
        let decoder = Decoder::new(&code);
        let (_, result, class) = decode_error(&decoder, "Z5");
        assert_eq!(result.e_hat, PauliOperator::parse(13, "Z5").unwrap());
        assert_eq!(class, ResidualClass::NoError);
    }

    #[test]
    fn all_weight_one_errors_corrected_everywhere() {
        for family in ["surface", "zzzy", "zzzy-dual", "xzzx"] {
            let code = build(family.parse().unwrap(), 3).unwrap();
            let decoder = Decoder::new(&code);
            for qubit in 0..code.n() {
                for p in [Pauli::X, Pauli::Y, Pauli::Z] {
                    let e = PauliOperator::from_factors(code.n(), &[(qubit, p)]).unwrap();
                    let s = code.syndrome(&e).unwrap();
                    let result = decoder.decode(&s).unwrap();
                    assert_eq!(
                        residual_class(&e, &result, &code),
                        ResidualClass::NoError,
                        "{family}: error {e}"
                    );
                }
            }
        }
    }

    #[test]
    fn syndrome_is_always_reproduced() {
        // Random weight-3 errors across families: e_hat explains s exactly.
        let mut rng = crate::rng::TrialRng::new(11);
        for family in ["surface", "zzzy", "zzzy-dual", "xzzx"] {
            let code = build(family.parse().unwrap(), 5).unwrap();
            let decoder = Decoder::new(&code);
            for _ in 0..150 {
                let mut e = PauliOperator::identity(code.n());
                for _ in 0..3 {
                    let q = rng.next_below(code.n() as u64) as usize;
                    let p = match rng.next_below(3) {
                        0 => Pauli::X,
                        1 => Pauli::Y,
                        _ => Pauli::Z,
                    };
                    e.set(q, p);
                }
                let s = code.syndrome(&e).unwrap();
                let result = decoder.decode(&s).unwrap();
                let class = residual_class(&e, &result, &code);
                assert_ne!(class, ResidualClass::SyndromeMismatch, "{family}: {e}");
            }
        }
    }

    #[test]
    fn residual_class_of_stabilizer_is_no_error() {
        let code = build_zzzy(3).unwrap();
        let stab = code.row(0).compose(code.row(3)).unwrap();
        let result = DecodeResult {
            e_hat: stab,
            weights: WeightVector::ones(13),
            flipped_syndrome: Syndrome::zeros(12),
            x_matching: Vec::new(),
            z_matching: Vec::new(),
        };
        let e = PauliOperator::identity(13);
        assert_eq!(residual_class(&e, &result, &code), ResidualClass::NoError);
    }

    #[test]
    fn residual_class_detects_pure_z_logical() {
        // Z1 Z2 Z3 anticommutes only with logical X: a logical Z action.
        let code = build_surface(3).unwrap();
        let result = DecodeResult {
            e_hat: PauliOperator::parse(13, "Z1 Z2 Z3").unwrap(),
            weights: WeightVector::ones(13),
            flipped_syndrome: Syndrome::zeros(12),
            x_matching: Vec::new(),
            z_matching: Vec::new(),
        };
        let e = PauliOperator::identity(13);
        assert_eq!(residual_class(&e, &result, &code), ResidualClass::LogicalZ);
    }

    #[test]
    fn decoder_rejects_wrong_syndrome_length() {
        let decoder = Decoder::new(&build_surface(3).unwrap());
        assert!(decoder.decode(&Syndrome::zeros(5)).is_err());
    }

    #[test]
    fn family_guards_on_free_functions() {
        let surface = build_surface(3).unwrap();
        let zzzy = build_zzzy(3).unwrap();
        let s = Syndrome::zeros(12);
        assert!(zzzy_decode(&s, &surface).is_err());
        assert!(surface_decode(&s, &zzzy).is_err());
        assert!(xzzx_decode(&s, &surface).is_err());
        assert!(surface_decode(&s, &surface).is_ok());
        assert!(zzzy_decode(&s, &zzzy).is_ok());
        assert!(xzzx_decode(&s, &build_xzzx(3).unwrap()).is_ok());
    }

    #[test]
    fn dual_decoding_mirrors_primal() {
        let primal = build_zzzy(3).unwrap();
        let dual = build_zzzy_dual(3).unwrap();
        let primal_decoder = Decoder::new(&primal);
        let dual_decoder = Decoder::new(&dual);
        let perm = primal.lattice().transpose_perm();
        let mut rng = crate::rng::TrialRng::new(5);
        for _ in 0..100 {
            let mut e = PauliOperator::identity(13);
            for _ in 0..2 {
                let q = rng.next_below(13) as usize;
                let p = match rng.next_below(3) {
                    0 => Pauli::X,
                    1 => Pauli::Y,
                    _ => Pauli::Z,
                };
                e.set(q, p);
            }
            let e_dual = e.hadamard_transform().permuted(&perm);
            let s = primal.syndrome(&e).unwrap();
            let s_dual = dual.syndrome(&e_dual).unwrap();
            assert_eq!(s, s_dual);
            let r = primal_decoder.decode(&s).unwrap();
            let r_dual = dual_decoder.decode(&s_dual).unwrap();
            assert_eq!(r_dual.e_hat, r.e_hat.hadamard_transform().permuted(&perm));
            let c = residual_class(&e, &r, &primal);
            let c_dual = residual_class(&e_dual, &r_dual, &dual);
            let expected = match c {
                ResidualClass::LogicalX => ResidualClass::LogicalZ,
                ResidualClass::LogicalZ => ResidualClass::LogicalX,
                other => other,
            };
            assert_eq!(c_dual, expected);
        }
    }
}
