//! C-Port Vector metrics.
//!
//! The C-Port Vector of a port is `CPV_i = rho * a_i * sum_j C[i][j] * w_j`,
//! where `rho` is the standardization merit factor (adopted / applicable
//! standards), `C` is the 4x3 innovation matrix of cumulative project costs
//! in M EUR (bundles x TRL stages), `a` weights the port's business
//! specificity and `w` rewards early- vs late-stage innovation. Both weight
//! vectors obey the constraint `sum(1/x^2) = 1`.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Relative tolerance for the weight constraint check.
const WEIGHT_CONSTRAINT_TOL: f64 = 1e-9;

/// The four vertical service domains, in canonical row order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Bundle {
    #[serde(rename = "Nv")]
    Navigation,
    #[serde(rename = "Fr")]
    Freight,
    #[serde(rename = "Mb")]
    Mobility,
    #[serde(rename = "St")]
    Sustainability,
}

impl Bundle {
    pub const ALL: [Bundle; 4] = [
        Bundle::Navigation,
        Bundle::Freight,
        Bundle::Mobility,
        Bundle::Sustainability,
    ];

    /// Two-letter canonical code (`Nv`, `Fr`, `Mb`, `St`).
    pub fn code(self) -> &'static str {
        match self {
            Bundle::Navigation => "Nv",
            Bundle::Freight => "Fr",
            Bundle::Mobility => "Mb",
            Bundle::Sustainability => "St",
        }
    }

    pub fn full_name(self) -> &'static str {
        match self {
            Bundle::Navigation => "Vessel & Marine Navigation",
            Bundle::Freight => "e-Freight & Intermodal Logistics",
            Bundle::Mobility => "Passenger Transport",
            Bundle::Sustainability => "Environmental Sustainability",
        }
    }

    /// Parses the canonical code, case-sensitively.
    pub fn from_code(code: &str) -> Option<Bundle> {
        Bundle::ALL.into_iter().find(|b| b.code() == code)
    }

    /// Row index in the innovation matrix.
    pub fn index(self) -> usize {
        match self {
            Bundle::Navigation => 0,
            Bundle::Freight => 1,
            Bundle::Mobility => 2,
            Bundle::Sustainability => 3,
        }
    }
}

impl std::fmt::Display for Bundle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.code())
    }
}

/// TRL buckets, in canonical column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TrlStage {
    #[serde(rename = "P")]
    Prototype,
    #[serde(rename = "D")]
    Demo,
    #[serde(rename = "R")]
    Released,
}

impl TrlStage {
    pub const ALL: [TrlStage; 3] = [TrlStage::Prototype, TrlStage::Demo, TrlStage::Released];

    pub fn code(self) -> &'static str {
        match self {
            TrlStage::Prototype => "P",
            TrlStage::Demo => "D",
            TrlStage::Released => "R",
        }
    }

    pub fn full_name(self) -> &'static str {
        match self {
            TrlStage::Prototype => "Prototype",
            TrlStage::Demo => "Demo",
            TrlStage::Released => "Released",
        }
    }

    /// Column index in the innovation matrix.
    pub fn index(self) -> usize {
        match self {
            TrlStage::Prototype => 0,
            TrlStage::Demo => 1,
            TrlStage::Released => 2,
        }
    }
}

impl std::fmt::Display for TrlStage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.code())
    }
}

/// Buckets an integer TRL into its stage: 1-5 Prototype, 6-7 Demo, 8-9 Released.
pub fn trl_stage(trl: u8) -> Result<TrlStage, Error> {
    match trl {
        1..=5 => Ok(TrlStage::Prototype),
        6..=7 => Ok(TrlStage::Demo),
        8..=9 => Ok(TrlStage::Released),
        other => Err(Error::TrlOutOfRange(i64::from(other))),
    }
}

/// Which of the two weight vectors a `WeightVector` is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightKind {
    /// The 4-dimensional `a` vector weighting bundles by port vocation.
    BusinessSpecificity,
    /// The 3-dimensional `w` vector weighting TRL stages.
    InnovationReward,
}

impl WeightKind {
    pub fn expected_len(self) -> usize {
        match self {
            WeightKind::BusinessSpecificity => 4,
            WeightKind::InnovationReward => 3,
        }
    }
}

impl std::fmt::Display for WeightKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            WeightKind::BusinessSpecificity => "business-specificity",
            WeightKind::InnovationReward => "innovation-reward",
        })
    }
}

/// A strictly positive weight vector satisfying `sum(1/x^2) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    values: Vec<f64>,
    kind: WeightKind,
}

impl WeightVector {
    /// Validates an already-normalized vector against the constraint.
    pub fn new(values: Vec<f64>, kind: WeightKind) -> Result<Self, Error> {
        check_positive_components(&values)?;
        check_length(&values, kind)?;
        let sum: f64 = values.iter().map(|v| 1.0 / (v * v)).sum();
        let residual = (sum - 1.0).abs();
        if residual > WEIGHT_CONSTRAINT_TOL {
            return Err(Error::WeightConstraint { residual });
        }
        Ok(WeightVector { values, kind })
    }

    /// Scales raw positive weights by `k = sqrt(sum 1/raw^2)` so that the
    /// constraint holds exactly while pairwise ratios are preserved.
    pub fn normalize(raw: &[f64], kind: WeightKind) -> Result<Self, Error> {
        check_positive_components(raw)?;
        check_length(raw, kind)?;
        let k = raw.iter().map(|v| 1.0 / (v * v)).sum::<f64>().sqrt();
        let values = raw.iter().map(|v| v * k).collect();
        Ok(WeightVector { values, kind })
    }

    /// The flat vector: `(2,2,2,2)` for business specificity, `(sqrt 3) x3`
    /// for innovation reward.
    pub fn uniform(kind: WeightKind) -> Self {
        let raw = vec![1.0; kind.expected_len()];
        Self::normalize(&raw, kind).expect("uniform weights always normalize")
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }
}

fn check_positive_components(values: &[f64]) -> Result<(), Error> {
    for (index, &value) in values.iter().enumerate() {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::NonPositiveWeight { index, value });
        }
    }
    Ok(())
}

fn check_length(values: &[f64], kind: WeightKind) -> Result<(), Error> {
    let expected = kind.expected_len();
    if values.len() != expected {
        return Err(Error::WeightLength {
            kind,
            expected,
            actual: values.len(),
        });
    }
    Ok(())
}

/// Applicable vs adopted standards for a port; the source of `rho`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardsLedger {
    applicable: std::collections::BTreeSet<String>,
    adopted: std::collections::BTreeSet<String>,
}

impl StandardsLedger {
    /// Deduplicates both sets and enforces `adopted` as a subset of
    /// `applicable`; extraneous identifiers are listed in the error.
    pub fn new<A, B>(applicable: A, adopted: B) -> Result<Self, Error>
    where
        A: IntoIterator,
        B: IntoIterator,
        A::Item: Into<String>,
        B::Item: Into<String>,
    {
        let applicable: std::collections::BTreeSet<String> =
            applicable.into_iter().map(Into::into).collect();
        let adopted: std::collections::BTreeSet<String> =
            adopted.into_iter().map(Into::into).collect();
        let extraneous: Vec<String> = adopted.difference(&applicable).cloned().collect();
        if !extraneous.is_empty() {
            return Err(Error::AdoptedNotApplicable(extraneous));
        }
        Ok(StandardsLedger {
            applicable,
            adopted,
        })
    }

    /// The standardization merit factor: |adopted| / |applicable|.
    ///
    /// An empty applicable set yields 0 - a port claiming no applicable
    /// standard has adopted none, so its vector is null.
    pub fn merit(&self) -> f64 {
        if self.applicable.is_empty() {
            0.0
        } else {
            self.adopted.len() as f64 / self.applicable.len() as f64
        }
    }

    pub fn applicable(&self) -> &std::collections::BTreeSet<String> {
        &self.applicable
    }

    pub fn adopted(&self) -> &std::collections::BTreeSet<String> {
        &self.adopted
    }
}

/// The 4x3 matrix of cumulative project costs in M EUR, bundles x stages.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InnovationMatrix {
    cells: [[f64; 3]; 4],
}

impl InnovationMatrix {
    pub const fn zero() -> Self {
        InnovationMatrix {
            cells: [[0.0; 3]; 4],
        }
    }

    /// Builds a matrix from rows in canonical bundle order, rejecting any
    /// cell that is not a finite non-negative cost.
    pub fn new(cells: [[f64; 3]; 4]) -> Result<Self, Error> {
        for bundle in Bundle::ALL {
            for stage in TrlStage::ALL {
                let value = cells[bundle.index()][stage.index()];
                if !(value.is_finite() && value >= 0.0) {
                    return Err(Error::InvalidCost {
                        bundle,
                        stage,
                        value,
                    });
                }
            }
        }
        Ok(InnovationMatrix { cells })
    }

    pub fn get(&self, bundle: Bundle, stage: TrlStage) -> f64 {
        self.cells[bundle.index()][stage.index()]
    }

    /// Accumulates a cost contribution into one cell.
    pub fn add_cost(&mut self, bundle: Bundle, stage: TrlStage, meur: f64) -> Result<(), Error> {
        if !(meur.is_finite() && meur >= 0.0) {
            return Err(Error::InvalidCost {
                bundle,
                stage,
                value: meur,
            });
        }
        self.cells[bundle.index()][stage.index()] += meur;
        Ok(())
    }

    pub fn cells(&self) -> &[[f64; 3]; 4] {
        &self.cells
    }

    /// Per-bundle totals in canonical order.
    pub fn row_sums(&self) -> [f64; 4] {
        let mut sums = [0.0; 4];
        for (row, sum) in self.cells.iter().zip(sums.iter_mut()) {
            *sum = row.iter().sum();
        }
        sums
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().flatten().all(|&v| v == 0.0)
    }
}

/// Total investment via the trace identity.
///
/// Builds `T` with `T[i][j] = sqrt(C[i][j])` and returns `Tr(T' * T)`, which
/// equals the entrywise sum of `C`. Non-negativity of every cell is
/// guaranteed by the matrix constructor, so the square roots are defined.
pub fn total_investment(matrix: &InnovationMatrix) -> f64 {
    let cells = matrix.cells();
    let mut tilde = [[0.0_f64; 3]; 4];
    for i in 0..4 {
        for j in 0..3 {
            tilde[i][j] = cells[i][j].sqrt();
        }
    }
    // gram = T' * T (3x3); its trace is the sum of squared entries of T.
    let mut trace = 0.0;
    for j in 0..3 {
        let mut gram_jj = 0.0;
        for row in &tilde {
            gram_jj += row[j] * row[j];
        }
        trace += gram_jj;
    }
    trace
}

/// A port's C-Port Vector for one time window. Components are in M EUR and
/// indexed by bundle in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct CPortVector {
    components: [f64; 4],
    rho: f64,
    window: String,
}

/// Computes `CPV_i = rho * a_i * sum_j C[i][j] * w_j` over the canonical
/// bundle order.
pub fn cport_vector(
    rho: f64,
    a: &WeightVector,
    matrix: &InnovationMatrix,
    w: &WeightVector,
    window: impl Into<String>,
) -> Result<CPortVector, Error> {
    if !(rho.is_finite() && (0.0..=1.0).contains(&rho)) {
        return Err(Error::RhoOutOfRange(rho));
    }
    if a.kind() != WeightKind::BusinessSpecificity {
        return Err(Error::WeightKindMismatch {
            expected: WeightKind::BusinessSpecificity,
            actual: a.kind(),
        });
    }
    if w.kind() != WeightKind::InnovationReward {
        return Err(Error::WeightKindMismatch {
            expected: WeightKind::InnovationReward,
            actual: w.kind(),
        });
    }
    let cells = matrix.cells();
    let mut components = [0.0; 4];
    for bundle in Bundle::ALL {
        let i = bundle.index();
        let weighted_row: f64 = cells[i].iter().zip(w.values()).map(|(c, wj)| c * wj).sum();
        components[i] = rho * a.values()[i] * weighted_row;
    }
    Ok(CPortVector {
        components,
        rho,
        window: window.into(),
    })
}

impl CPortVector {
    pub fn components(&self) -> &[f64; 4] {
        &self.components
    }

    pub fn component(&self, bundle: Bundle) -> f64 {
        self.components[bundle.index()]
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn window(&self) -> &str {
        &self.window
    }

    /// Euclidean magnitude, in M EUR.
    pub fn magnitude(&self) -> f64 {
        self.components.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_null(&self) -> bool {
        self.components.iter().all(|&c| c == 0.0)
    }

    /// Per-bundle `(v_i / |v|)^2`; the four shares sum to 1.
    pub fn squared_share(&self) -> Result<[f64; 4], Error> {
        let norm_sq: f64 = self.components.iter().map(|c| c * c).sum();
        if norm_sq == 0.0 {
            return Err(Error::NullVector {
                op: "squared share",
            });
        }
        let mut shares = [0.0; 4];
        for (share, c) in shares.iter_mut().zip(self.components.iter()) {
            *share = (c * c) / norm_sq;
        }
        Ok(shares)
    }
}

/// Angle between two C-Port Vectors, in degrees within [0, 180].
///
/// The cosine argument is clamped to [-1, 1] so that near-parallel vectors
/// cannot push `acos` out of its domain.
pub fn angle_degrees(v1: &CPortVector, v2: &CPortVector) -> Result<f64, Error> {
    let m1 = v1.magnitude();
    let m2 = v2.magnitude();
    if m1 == 0.0 || m2 == 0.0 {
        return Err(Error::NullVector { op: "angle" });
    }
    let dot: f64 = v1
        .components
        .iter()
        .zip(v2.components.iter())
        .map(|(x, y)| x * y)
        .sum();
    let cos = (dot / (m1 * m2)).clamp(-1.0, 1.0);
    Ok(cos.acos().to_degrees())
}

/// Ranks ports descending by |C-PV|, ties broken by port id so the output
/// is deterministic.
pub fn rank_ports(snapshots: &[(String, CPortVector)]) -> Vec<(String, f64)> {
    let mut ranked: Vec<(String, f64)> = snapshots
        .iter()
        .map(|(id, v)| (id.clone(), v.magnitude()))
        .collect();
    ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    ranked
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn uniform_a() -> WeightVector {
        WeightVector::uniform(WeightKind::BusinessSpecificity)
    }

    fn uniform_w() -> WeightVector {
        WeightVector::uniform(WeightKind::InnovationReward)
    }

    /// Matrix with the given per-bundle totals, all placed in the Demo column.
    fn matrix_with_row_sums(sums: [f64; 4]) -> InnovationMatrix {
        let mut cells = [[0.0; 3]; 4];
        for (row, sum) in cells.iter_mut().zip(sums) {
            row[1] = sum;
        }
        InnovationMatrix::new(cells).unwrap()
    }

    #[test]
    fn trl_stage_buckets() {
        assert_eq!(trl_stage(1).unwrap(), TrlStage::Prototype);
        assert_eq!(trl_stage(5).unwrap(), TrlStage::Prototype);
        assert_eq!(trl_stage(6).unwrap(), TrlStage::Demo);
        assert_eq!(trl_stage(7).unwrap(), TrlStage::Demo);
        assert_eq!(trl_stage(8).unwrap(), TrlStage::Released);
        assert_eq!(trl_stage(9).unwrap(), TrlStage::Released);
        assert!(trl_stage(0).is_err());
        assert!(trl_stage(10).is_err());
        assert!(trl_stage(0).unwrap_err().to_string().contains('0'));
    }

    #[test]
    fn merit_ratio() {
        let full = StandardsLedger::new(["s1", "s2"], ["s1", "s2"]).unwrap();
        assert_eq!(full.merit(), 1.0);

        let none = StandardsLedger::new(["s1", "s2"], Vec::<String>::new()).unwrap();
        assert_eq!(none.merit(), 0.0);

        let partial = StandardsLedger::new(["s1", "s2", "s3", "s4"], ["s1", "s2", "s3"]).unwrap();
        assert_eq!(partial.merit(), 0.75);
    }

    #[test]
    fn merit_empty_applicable_is_zero() {
        let ledger = StandardsLedger::new(Vec::<String>::new(), Vec::<String>::new()).unwrap();
        assert_eq!(ledger.merit(), 0.0);
    }

    #[test]
    fn ledger_rejects_extraneous_adopted() {
        let err = StandardsLedger::new(["a"], ["a", "z"]).unwrap_err();
        assert!(err.to_string().contains('z'), "{err}");
    }

    #[test]
    fn ledger_deduplicates() {
        let ledger = StandardsLedger::new(["a", "a", "b"], ["a", "a"]).unwrap();
        assert_eq!(ledger.applicable().len(), 2);
        assert_eq!(ledger.merit(), 0.5);
    }

    #[test]
    fn normalize_uniform_four() {
        let a = WeightVector::normalize(&[1.0, 1.0, 1.0, 1.0], WeightKind::BusinessSpecificity)
            .unwrap();
        assert_eq!(a.values(), &[2.0, 2.0, 2.0, 2.0]);
    }

    #[test]
    fn normalize_uniform_three() {
        let w = WeightVector::normalize(&[1.0, 1.0, 1.0], WeightKind::InnovationReward).unwrap();
        let sqrt3 = 3.0_f64.sqrt();
        for &v in w.values() {
            assert_relative_eq!(v, sqrt3, max_relative = 1e-12);
        }
    }

    #[test]
    fn normalize_preserves_ratios_and_constraint() {
        let a = WeightVector::normalize(&[1.0, 2.0, 2.0, 2.0], WeightKind::BusinessSpecificity)
            .unwrap();
        let v = a.values();
        assert_relative_eq!(v[1] / v[0], 2.0, max_relative = 1e-12);
        let residual: f64 = v.iter().map(|x| 1.0 / (x * x)).sum::<f64>() - 1.0;
        assert!(residual.abs() < 1e-12, "residual {residual}");
        // k = sqrt(1 + 3 * 0.25)
        assert_relative_eq!(v[0], 1.75_f64.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert!(
            WeightVector::normalize(&[1.0, -1.0, 1.0, 1.0], WeightKind::BusinessSpecificity)
                .is_err()
        );
        assert!(
            WeightVector::normalize(&[1.0, 1.0, 1.0], WeightKind::BusinessSpecificity).is_err()
        );
        assert!(WeightVector::new(vec![1.0, 1.0, 1.0], WeightKind::InnovationReward).is_err());
    }

    #[test]
    fn cport_vector_null_when_rho_zero() {
        let matrix = matrix_with_row_sums([0.406, 1.208, 0.852, 3.757]);
        let v = cport_vector(0.0, &uniform_a(), &matrix, &uniform_w(), "w").unwrap();
        assert_eq!(v.components(), &[0.0; 4]);
        assert!(v.is_null());
    }

    #[test]
    fn cport_vector_null_on_zero_matrix() {
        let v = cport_vector(
            1.0,
            &uniform_a(),
            &InnovationMatrix::zero(),
            &uniform_w(),
            "w",
        )
        .unwrap();
        assert_eq!(v.components(), &[0.0; 4]);
    }

    #[test]
    fn cport_vector_uniform_weights_scale_row_sums() {
        // Biennium totals in M EUR; expected components are 2*sqrt(3) times
        // the row sums when rho = 1 and both weight vectors are uniform.
        let sums = [0.406, 1.208, 0.852, 3.757];
        let matrix = matrix_with_row_sums(sums);
        let v = cport_vector(1.0, &uniform_a(), &matrix, &uniform_w(), "2017-2018").unwrap();
        let factor = 2.0 * 3.0_f64.sqrt();
        for (component, sum) in v.components().iter().zip(sums) {
            assert_relative_eq!(*component, factor * sum, max_relative = 1e-12);
        }
    }

    #[test]
    fn cport_vector_validates_inputs() {
        let matrix = InnovationMatrix::zero();
        assert!(cport_vector(1.5, &uniform_a(), &matrix, &uniform_w(), "w").is_err());
        assert!(cport_vector(-0.1, &uniform_a(), &matrix, &uniform_w(), "w").is_err());
        assert!(cport_vector(1.0, &uniform_w(), &matrix, &uniform_w(), "w").is_err());
        assert!(cport_vector(1.0, &uniform_a(), &matrix, &uniform_a(), "w").is_err());
    }

    #[test]
    fn matrix_rejects_negative_cells() {
        let mut cells = [[0.0; 3]; 4];
        cells[2][1] = -0.5;
        let err = InnovationMatrix::new(cells).unwrap_err();
        assert!(err.to_string().contains("Mb/D"), "{err}");
    }

    #[test]
    fn total_investment_examples() {
        let ones = InnovationMatrix::new([[1.0; 3]; 4]).unwrap();
        assert_relative_eq!(total_investment(&ones), 12.0, max_relative = 1e-12);

        assert_eq!(total_investment(&InnovationMatrix::zero()), 0.0);

        // Biennium totals placed anywhere in their rows sum to 6.223 M EUR.
        let spread = InnovationMatrix::new([
            [0.2, 0.1, 0.106],
            [1.208, 0.0, 0.0],
            [0.0, 0.852, 0.0],
            [0.0, 0.757, 3.0],
        ])
        .unwrap();
        assert_relative_eq!(total_investment(&spread), 6.223, max_relative = 1e-12);
    }

    #[test]
    fn angle_examples() {
        let matrix = matrix_with_row_sums([1.0, 2.0, 3.0, 4.0]);
        let v = cport_vector(1.0, &uniform_a(), &matrix, &uniform_w(), "w").unwrap();
        assert_relative_eq!(angle_degrees(&v, &v).unwrap(), 0.0, epsilon = 1e-6);

        let e1 = cport_vector(
            1.0,
            &uniform_a(),
            &matrix_with_row_sums([1.0, 0.0, 0.0, 0.0]),
            &uniform_w(),
            "w",
        )
        .unwrap();
        let e2 = cport_vector(
            1.0,
            &uniform_a(),
            &matrix_with_row_sums([0.0, 1.0, 0.0, 0.0]),
            &uniform_w(),
            "w",
        )
        .unwrap();
        assert_relative_eq!(angle_degrees(&e1, &e2).unwrap(), 90.0, max_relative = 1e-12);
    }

    #[test]
    fn angle_between_biennium_snapshots() {
        // Bundle totals of the two biennia, k EUR scale; the angle is
        // scale-free so units cancel. Frozen expected value computed from
        // the dot-product definition: 35.11252018137693 degrees.
        let v1 = cport_vector(
            1.0,
            &uniform_a(),
            &matrix_with_row_sums([406.0, 1208.0, 852.0, 3757.0]),
            &uniform_w(),
            "2017-2018",
        )
        .unwrap();
        let v2 = cport_vector(
            1.0,
            &uniform_a(),
            &matrix_with_row_sums([444.0, 71.0, 0.0, 572.0]),
            &uniform_w(),
            "2019-2020",
        )
        .unwrap();
        let angle = angle_degrees(&v1, &v2).unwrap();
        assert_relative_eq!(angle, 35.11252018137693, max_relative = 1e-9);

        // Independent oracle: cosine straight from the bundle totals.
        let a = [406.0_f64, 1208.0, 852.0, 3757.0];
        let b = [444.0_f64, 71.0, 0.0, 572.0];
        let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
        let oracle = (dot / (na * nb)).acos().to_degrees();
        assert_relative_eq!(angle, oracle, max_relative = 1e-9);
    }

    #[test]
    fn angle_undefined_for_null_vector() {
        let null = cport_vector(
            0.0,
            &uniform_a(),
            &matrix_with_row_sums([1.0, 1.0, 1.0, 1.0]),
            &uniform_w(),
            "w",
        )
        .unwrap();
        let other = cport_vector(
            1.0,
            &uniform_a(),
            &matrix_with_row_sums([1.0, 1.0, 1.0, 1.0]),
            &uniform_w(),
            "w",
        )
        .unwrap();
        let err = angle_degrees(&null, &other).unwrap_err();
        assert_eq!(err.to_string(), "angle undefined for null C-Port Vector");
    }

    #[test]
    fn squared_share_examples() {
        let even = cport_vector(
            1.0,
            &uniform_a(),
            &matrix_with_row_sums([1.0, 1.0, 1.0, 1.0]),
            &uniform_w(),
            "w",
        )
        .unwrap();
        for share in even.squared_share().unwrap() {
            assert_relative_eq!(share, 0.25, max_relative = 1e-12);
        }

        // Biennium snapshots reproduce the published per-bundle shares at
        // 2-decimal rounding.
        let v1 = cport_vector(
            1.0,
            &uniform_a(),
            &matrix_with_row_sums([0.406, 1.208, 0.852, 3.757]),
            &uniform_w(),
            "2017-2018",
        )
        .unwrap();
        let rounded: Vec<f64> = v1
            .squared_share()
            .unwrap()
            .iter()
            .map(|s| (s * 100.0).round() / 100.0)
            .collect();
        assert_eq!(rounded, vec![0.01, 0.09, 0.04, 0.86]);

        let v2 = cport_vector(
            1.0,
            &uniform_a(),
            &matrix_with_row_sums([0.444, 0.071, 0.0, 0.572]),
            &uniform_w(),
            "2019-2020",
        )
        .unwrap();
        let rounded: Vec<f64> = v2
            .squared_share()
            .unwrap()
            .iter()
            .map(|s| (s * 100.0).round() / 100.0)
            .collect();
        assert_eq!(rounded, vec![0.37, 0.01, 0.0, 0.62]);

        let sum: f64 = v1.squared_share().unwrap().iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn squared_share_undefined_for_null_vector() {
        let null = cport_vector(
            1.0,
            &uniform_a(),
            &InnovationMatrix::zero(),
            &uniform_w(),
            "w",
        )
        .unwrap();
        assert!(null.squared_share().is_err());
    }

    #[test]
    fn rank_ports_ordering() {
        let a = cport_vector(
            1.0,
            &uniform_a(),
            &matrix_with_row_sums([1.0, 0.0, 0.0, 0.0]),
            &uniform_w(),
            "w",
        )
        .unwrap();
        let b = cport_vector(
            1.0,
            &uniform_a(),
            &matrix_with_row_sums([2.0, 0.0, 0.0, 0.0]),
            &uniform_w(),
            "w",
        )
        .unwrap();
        let ranked = rank_ports(&[("A".into(), a.clone()), ("B".into(), b)]);
        assert_eq!(ranked[0].0, "B");
        assert_eq!(ranked[1].0, "A");

        let single = rank_ports(&[("solo".into(), a.clone())]);
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].0, "solo");

        // Equal magnitudes fall back to lexicographic port ids.
        let tied = rank_ports(&[("zeta".into(), a.clone()), ("alpha".into(), a)]);
        assert_eq!(tied[0].0, "alpha");
        assert_eq!(tied[1].0, "zeta");
    }
}
