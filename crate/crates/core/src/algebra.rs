//! Finite operation tables, axiom checking and BCK/Hilbert duality.
//!
//! Every table stores its distinguished element θ at index 0. Tables with
//! another distinguished element are renumbered on construction through
//! [`OpTable::with_theta`].

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::Poset;

/// Index of θ in every stored table.
pub const THETA: usize = 0;

/// Orientation of a table.
///
/// `Star` tables are read as BCK/BCI operations `x ∗ y`; `Dot` tables as
/// Hilbert operations `x · y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Star,
    Dot,
}

impl TableKind {
    pub fn toggled(self) -> Self {
        match self {
            TableKind::Star => TableKind::Dot,
            TableKind::Dot => TableKind::Star,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TableKind::Star => "star",
            TableKind::Dot => "dot",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An `n × n` operation table over element indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpTable {
    n: usize,
    cells: Vec<usize>,
    kind: TableKind,
    labels: Option<Vec<String>>,
}

impl OpTable {
    /// Builds a table from rows, with θ at index 0.
    pub fn new(
        kind: TableKind,
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::usage(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            cells.extend(row);
        }
        Self::from_cells(kind, n, cells, labels)
    }

    /// Builds a table from row-major cells, with θ at index 0.
    pub fn from_cells(
        kind: TableKind,
        n: usize,
        cells: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::usage("a table needs at least one element"));
        }
        if cells.len() != n * n {
            return Err(Error::usage(format!(
                "expected {} cells for n = {n}, got {}",
                n * n,
                cells.len()
            )));
        }
        if let Some(pos) = cells.iter().position(|&v| v >= n) {
            return Err(Error::usage(format!(
                "entry {} at ({}, {}) is out of range for n = {n}",
                cells[pos],
                pos / n,
                pos % n
            )));
        }
        if let Some(labels) = &labels {
            validate_labels(labels, n)?;
        }
        Ok(OpTable {
            n,
            cells,
            kind,
            labels,
        })
    }

    /// Builds a table whose distinguished element is `theta`, renumbering
    /// so that θ becomes index 0. Other elements keep their relative order
    /// and their labels.
    pub fn with_theta(
        kind: TableKind,
        theta: usize,
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let raw = Self::new(kind, rows, labels)?;
        if theta >= raw.n {
            return Err(Error::usage(format!(
                "theta {theta} is out of range for n = {}",
                raw.n
            )));
        }
        Ok(raw.relabel(&move_to_front(raw.n, theta)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn theta(&self) -> usize {
        THETA
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label, or its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(labels) => labels[x].clone(),
            None => x.to_string(),
        }
    }

    /// Looks an element up by label, falling back to a numeric index.
    pub fn find_element(&self, name: &str) -> Option<usize> {
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == name) {
                return Some(i);
            }
        }
        name.parse::<usize>().ok().filter(|&i| i < self.n)
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(labels) = &labels {
            validate_labels(labels, self.n)?;
        }
        self.labels = labels;
        Ok(self)
    }

    /// Applies the bijection `perm` (old index to new index) to rows,
    /// columns and values at once. Labels travel with their elements.
    pub fn relabel(&self, perm: &[usize]) -> OpTable {
        assert_eq!(perm.len(), self.n, "permutation size mismatch");
        let n = self.n;
        let mut cells = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[perm[x] * n + perm[y]] = perm[self.op(x, y)];
            }
        }
        let labels = self.labels.as_ref().map(|labels| {
            let mut out = vec![String::new(); n];
            for (old, label) in labels.iter().enumerate() {
                out[perm[old]] = label.clone();
            }
            out
        });
        OpTable {
            n,
            cells,
            kind: self.kind,
            labels,
        }
    }
}

impl Serialize for OpTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<&[usize]> = (0..self.n).map(|x| self.row(x)).collect();
        let mut st = s.serialize_struct("OpTable", 5)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("theta", &THETA)?;
        st.serialize_field("labels", &self.labels)?;
        st.serialize_field("table", &rows)?;
        st.end()
    }
}

fn validate_labels(labels: &[String], n: usize) -> Result<()> {
    if labels.len() != n {
        return Err(Error::usage(format!(
            "expected {n} labels, got {}",
            labels.len()
        )));
    }
    for (i, label) in labels.iter().enumerate() {
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::usage(format!(
                "label {i} must be non-empty and free of whitespace"
            )));
        }
        if labels[..i].contains(label) {
            return Err(Error::usage(format!("duplicate label {label:?}")));
        }
    }
    Ok(())
}

/// Permutation (old to new) that moves `theta` to index 0 and keeps the
/// relative order of everything else.
pub(crate) fn move_to_front(n: usize, theta: usize) -> Vec<usize> {
    (0..n)
        .map(|i| match i.cmp(&theta) {
            std::cmp::Ordering::Less => i + 1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => i,
        })
        .collect()
}

/// Axiom system to check a table against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxiomSystem {
    Bci,
    Bck,
    Hilbert,
}

impl AxiomSystem {
    pub fn required_kind(self) -> TableKind {
        match self {
            AxiomSystem::Bci | AxiomSystem::Bck => TableKind::Star,
            AxiomSystem::Hilbert => TableKind::Dot,
        }
    }

    pub fn axioms(self) -> &'static [Axiom] {
        use Axiom::*;
        match self {
            AxiomSystem::Bci => &[Bci1, Bci2, Bci3, Bci4],
            AxiomSystem::Bck => &[Bci1, Bci2, Bci3, Bci4, Bck5],
            AxiomSystem::Hilbert => &[Hilbert1, Hilbert2, Hilbert3],
        }
    }
}

impl std::str::FromStr for AxiomSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bci" => Ok(AxiomSystem::Bci),
            "bck" => Ok(AxiomSystem::Bck),
            "hilbert" => Ok(AxiomSystem::Hilbert),
            other => Err(Error::usage(format!("unknown axiom system {other:?}"))),
        }
    }
}

/// A single axiom. BCI/BCK axioms read the table as `∗`, Hilbert axioms as
/// `·`; both write θ for the distinguished element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    /// `((x∗y)∗(x∗z))∗(z∗y) = θ`
    #[serde(rename = "bci-1")]
    Bci1,
    /// `(x∗(x∗y))∗y = θ`
    #[serde(rename = "bci-2")]
    Bci2,
    /// `x∗x = θ`
    #[serde(rename = "bci-3")]
    Bci3,
    /// `x∗y = θ ∧ y∗x = θ ⇒ x = y`
    #[serde(rename = "bci-4")]
    Bci4,
    /// `θ∗x = θ`
    #[serde(rename = "bck-5")]
    Bck5,
    /// `x·(y·x) = θ`
    #[serde(rename = "hilbert-1")]
    Hilbert1,
    /// `(x·(y·z))·((x·y)·(x·z)) = θ`
    #[serde(rename = "hilbert-2")]
    Hilbert2,
    /// `x·y = θ ∧ y·x = θ ⇒ x = y`
    #[serde(rename = "hilbert-3")]
    Hilbert3,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::Bci1 => "bci-1",
            Axiom::Bci2 => "bci-2",
            Axiom::Bci3 => "bci-3",
            Axiom::Bci4 => "bci-4",
            Axiom::Bck5 => "bck-5",
            Axiom::Hilbert1 => "hilbert-1",
            Axiom::Hilbert2 => "hilbert-2",
            Axiom::Hilbert3 => "hilbert-3",
        }
    }

    /// Number of quantified variables.
    pub fn arity(self) -> usize {
        match self {
            Axiom::Bci3 | Axiom::Bck5 => 1,
            Axiom::Bci2 | Axiom::Bci4 | Axiom::Hilbert1 | Axiom::Hilbert3 => 2,
            Axiom::Bci1 | Axiom::Hilbert2 => 3,
        }
    }

    /// Whether the instance given by `w` (of length [`Axiom::arity`]) holds.
    pub fn holds(self, t: &OpTable, w: &[usize]) -> bool {
        let th = THETA;
        let o = |a, b| t.op(a, b);
        match self {
            Axiom::Bci1 => {
                let (x, y, z) = (w[0], w[1], w[2]);
                o(o(o(x, y), o(x, z)), o(z, y)) == th
            }
            Axiom::Bci2 => {
                let (x, y) = (w[0], w[1]);
                o(o(x, o(x, y)), y) == th
            }
            Axiom::Bci3 => o(w[0], w[0]) == th,
            Axiom::Bci4 | Axiom::Hilbert3 => {
                let (x, y) = (w[0], w[1]);
                !(o(x, y) == th && o(y, x) == th) || x == y
            }
            Axiom::Bck5 => o(th, w[0]) == th,
            Axiom::Hilbert1 => {
                let (x, y) = (w[0], w[1]);
                o(x, o(y, x)) == th
            }
            Axiom::Hilbert2 => {
                let (x, y, z) = (w[0], w[1], w[2]);
                o(o(x, o(y, z)), o(o(x, y), o(x, z))) == th
            }
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A failing axiom together with the first failing instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub kind_checked: AxiomSystem,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

/// Calls `f` on every tuple in `0..n` of the given arity, in lexicographic
/// order, until it returns `Some`.
fn scan<T>(n: usize, arity: usize, mut f: impl FnMut(&[usize]) -> Option<T>) -> Option<T> {
    let mut w = vec![0; arity];
    if n == 0 {
        return None;
    }
    loop {
        if let Some(found) = f(&w) {
            return Some(found);
        }
        let mut k = arity;
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            w[k] += 1;
            if w[k] < n {
                break;
            }
            w[k] = 0;
        }
    }
}

fn first_failure(
    t: &OpTable,
    arity: usize,
    holds: impl Fn(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    scan(t.n(), arity, |w| (!holds(w)).then(|| w.to_vec()))
}

/// Checks every instance of every axiom of `system`, recording the first
/// failing instance (lexicographic scan) of each failing axiom.
pub fn verify_axioms(t: &OpTable, system: AxiomSystem) -> Result<AxiomReport> {
    if t.kind() != system.required_kind() {
        return Err(Error::usage(format!(
            "{system:?} axioms need a {} table, got a {} table",
            system.required_kind(),
            t.kind()
        )));
    }
    let violations: Vec<Violation> = system
        .axioms()
        .iter()
        .filter_map(|&axiom| {
            first_failure(t, axiom.arity(), |w| axiom.holds(t, w))
                .map(|witness| Violation { axiom, witness })
        })
        .collect();
    Ok(AxiomReport {
        kind_checked: system,
        passed: violations.is_empty(),
        violations,
    })
}

/// BCK identities beyond the axioms, each with a counterexample when false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyFlags {
    pub commutative: bool,
    pub commutative_witness: Option<Vec<usize>>,
    pub implicative: bool,
    pub implicative_witness: Option<Vec<usize>>,
    pub positive_implicative: bool,
    pub positive_implicative_witness: Option<Vec<usize>>,
}

/// `x∗(x∗y) = y∗(y∗x)`
pub fn commutative_holds(t: &OpTable, x: usize, y: usize) -> bool {
    t.op(x, t.op(x, y)) == t.op(y, t.op(y, x))
}

/// `x∗(y∗x) = x`
pub fn implicative_holds(t: &OpTable, x: usize, y: usize) -> bool {
    t.op(x, t.op(y, x)) == x
}

/// `(x∗y)∗z = (x∗z)∗(y∗z)`
pub fn positive_implicative_holds(t: &OpTable, x: usize, y: usize, z: usize) -> bool {
    t.op(t.op(x, y), z) == t.op(t.op(x, z), t.op(y, z))
}

/// First counterexample to positive implicativity, if any.
pub fn positive_implicative_witness(t: &OpTable) -> Option<Vec<usize>> {
    first_failure(t, 3, |w| positive_implicative_holds(t, w[0], w[1], w[2]))
}

/// Evaluates commutativity, implicativity and positive implicativity of a
/// BCK table exhaustively.
pub fn bck_properties(t: &OpTable) -> Result<PropertyFlags> {
    let report = verify_axioms(t, AxiomSystem::Bck)?;
    if !report.passed {
        return Err(Error::usage(format!(
            "table is not a BCK-algebra (fails {})",
            report.violations[0].axiom
        )));
    }
    let commutative_witness = first_failure(t, 2, |w| commutative_holds(t, w[0], w[1]));
    let implicative_witness = first_failure(t, 2, |w| implicative_holds(t, w[0], w[1]));
    let positive_implicative_witness = positive_implicative_witness(t);
    Ok(PropertyFlags {
        commutative: commutative_witness.is_none(),
        commutative_witness,
        implicative: implicative_witness.is_none(),
        implicative_witness,
        positive_implicative: positive_implicative_witness.is_none(),
        positive_implicative_witness,
    })
}

/// Transposes the table (`x·y = y∗x`) and flips its orientation.
pub fn dualize(t: &OpTable) -> OpTable {
    let n = t.n();
    let cells = (0..n * n).map(|k| t.op(k % n, k / n)).collect();
    OpTable {
        n,
        cells,
        kind: t.kind().toggled(),
        labels: t.labels.clone(),
    }
}

/// The order `x ≤ y ⇔ x∗y = θ` of a BCK table.
pub fn bck_order(t: &OpTable) -> Result<Poset> {
    if t.kind() != TableKind::Star {
        return Err(Error::usage("the BCK order is read from a star table"));
    }
    let n = t.n();
    let leq = (0..n * n).map(|k| t.op(k / n, k % n) == THETA).collect();
    let poset = Poset::new(n, leq, t.labels().map(<[String]>::to_vec))
        .map_err(|e| Error::integrity(format!("x∗y = θ is not a partial order: {e}")))?;
    if poset.least() != Some(THETA) {
        return Err(Error::integrity("θ is not the least element of x∗y = θ"));
    }
    Ok(poset)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(rows: Vec<Vec<usize>>) -> OpTable {
        OpTable::new(TableKind::Star, rows, None).unwrap()
    }

    #[test]
    fn axiom_three_breach_is_reported() {
        let t = star(vec![vec![0, 0], vec![1, 1]]);
        let report = verify_axioms(&t, AxiomSystem::Bck).unwrap();
        assert!(!report.passed);
        let v = report
            .violations
            .iter()
            .find(|v| v.axiom == Axiom::Bci3)
            .unwrap();
        assert_eq!(v.witness, vec![1]);
        for v in &report.violations {
            assert!(!v.axiom.holds(&t, &v.witness));
        }
    }

    #[test]
    fn kind_mismatch_is_a_usage_error() {
        let t = star(vec![vec![0]]);
        assert!(matches!(
            verify_axioms(&t, AxiomSystem::Hilbert),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            verify_axioms(&dualize(&t), AxiomSystem::Bck),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn singleton_has_every_property() {
        let flags = bck_properties(&star(vec![vec![0]])).unwrap();
        assert!(flags.commutative && flags.implicative && flags.positive_implicative);
        assert!(flags.commutative_witness.is_none());
    }

    #[test]
    fn chain_of_three_properties() {
        // θ < a < b under x∗y = θ if x ≤ y, x otherwise.
        let t = star(vec![vec![0, 0, 0], vec![1, 0, 0], vec![2, 2, 0]]);
        let flags = bck_properties(&t).unwrap();
        assert!(!flags.commutative);
        assert_eq!(flags.commutative_witness, Some(vec![1, 2]));
        assert!(!flags.implicative);
        assert!(flags.positive_implicative);
    }

    #[test]
    fn non_bck_properties_is_an_error() {
        let t = star(vec![vec![0, 1], vec![1, 0]]);
        assert!(bck_properties(&t).is_err());
    }

    #[test]
    fn with_theta_renumbers() {
        // Same 2-chain stored with θ at index 1.
        let t = OpTable::with_theta(
            TableKind::Star,
            1,
            vec![vec![1, 0], vec![1, 1]],
            Some(vec!["a".into(), "t".into()]),
        )
        .unwrap();
        assert_eq!(t.cells(), &[0, 0, 1, 0]);
        assert_eq!(t.labels().unwrap(), &["t".to_string(), "a".to_string()]);
    }

    #[test]
    fn out_of_range_entries_are_rejected() {
        assert!(OpTable::new(TableKind::Star, vec![vec![0, 2], vec![1, 0]], None).is_err());
        assert!(OpTable::new(TableKind::Star, vec![vec![0, 0], vec![1]], None).is_err());
        assert!(OpTable::new(TableKind::Star, vec![], None).is_err());
    }

    #[test]
    fn duplicate_labels_are_rejected() {
        let labels = Some(vec!["a".to_string(), "a".to_string()]);
        assert!(OpTable::new(TableKind::Star, vec![vec![0, 0], vec![1, 0]], labels).is_err());
    }

    #[test]
    fn scan_order_is_lexicographic() {
        let mut seen = Vec::new();
        scan::<()>(2, 2, |w| {
            seen.push(w.to_vec());
            None
        });
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn bck_order_rejects_non_orders() {
        // x∗y = θ everywhere: not antisymmetric.
        let t = star(vec![vec![0, 0], vec![0, 0]]);
        assert!(matches!(bck_order(&t), Err(Error::Integrity(_))));
    }
}
