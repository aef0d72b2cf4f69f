//! Symmetric functions in noncommuting variables, truncated to `k` variables.
//!
//! `m_π` sums the monomials whose position pattern is exactly `π`; `p_π` sums
//! those whose pattern is coarser than or equal to `π`, so
//! `p_π = Σ_{σ ≥ π} m_σ`. Formal elements ([`NCSymElement`]) are integer
//! combinations of partitions tagged with one of these bases; their product is
//! computed in the power-sum basis, where it is the slash product on indices.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::NcsymError;
use crate::lincomb::{add_coeff, mul_coeff, Coeff, LinComb};
use crate::partition::{coarser_eq, enumerate_partitions, slash, SetPartition};
use crate::rook::{partition_to_rook, RookAlgebraElement};

/// A word `x_{i_1} x_{i_2} ⋯ x_{i_n}` given by its index sequence. Ordered
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NCMonomial(Vec<usize>);

impl NCMonomial {
    pub fn new(indices: Vec<usize>) -> Self {
        Self(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut indices = Vec::with_capacity(self.0.len() + other.0.len());
        indices.extend_from_slice(&self.0);
        indices.extend_from_slice(&other.0);
        Self(indices)
    }
}

impl fmt::Display for NCMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("x{i}")).collect();
        f.write_str(&parts.join("*"))
    }
}

/// A finitely supported polynomial in `k` noncommuting variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCPolynomial {
    k: usize,
    terms: LinComb<NCMonomial>,
}

#[derive(Serialize)]
struct TermJson<'a> {
    indices: &'a [usize],
    coeff: Coeff,
}

#[derive(Serialize)]
struct PolynomialJson<'a> {
    k: usize,
    terms: Vec<TermJson<'a>>,
}

impl NCPolynomial {
    pub fn zero(k: usize) -> Self {
        Self {
            k,
            terms: LinComb::zero(),
        }
    }

    pub fn from_terms<I>(k: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (NCMonomial, Coeff)>,
    {
        Self {
            k,
            terms: terms.into_iter().collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &LinComb<NCMonomial> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, monomial: &NCMonomial) -> Coeff {
        self.terms.coeff(monomial)
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.terms.add_assign(&other.terms);
    }

    pub fn scale(&self, factor: Coeff) -> Self {
        Self {
            k: self.k,
            terms: self.terms.scale(factor),
        }
    }

    /// `{"k":k,"terms":[{"indices":[…],"coeff":c},…]}` in monomial order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolynomialJson {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(m, &coeff)| TermJson {
                    indices: m.indices(),
                    coeff,
                })
                .collect(),
        })
        .expect("polynomial JSON serializes")
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (mono, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match idx {
                0 if c < 0 => f.write_str("-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{mono}")?;
            } else if mono.degree() == 0 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// The positions of `x` grouped by equal index, in standard form.
pub fn type_partition(monomial: &NCMonomial) -> SetPartition {
    let mut seen: Vec<usize> = Vec::new();
    let word = monomial
        .indices()
        .iter()
        .map(|i| match seen.iter().position(|s| s == i) {
            Some(pos) => pos + 1,
            None => {
                seen.push(*i);
                seen.len()
            }
        })
        .collect::<Vec<_>>();
    SetPartition::from_word(word)
}

fn monomial_from_labels(partition: &SetPartition, labels: &[usize]) -> NCMonomial {
    NCMonomial(
        partition
            .rgf_word()
            .iter()
            .map(|&b| labels[b - 1])
            .collect(),
    )
}

/// `m_π` over `x_1, …, x_k`: one monomial per injective labelling of the
/// blocks.
pub fn expand_m(partition: &SetPartition, k: usize) -> NCPolynomial {
    fn go(
        partition: &SetPartition,
        k: usize,
        labels: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<(NCMonomial, Coeff)>,
    ) {
        if labels.len() == partition.num_blocks() {
            out.push((monomial_from_labels(partition, labels), 1));
            return;
        }
        for v in 1..=k {
            if !used[v] {
                used[v] = true;
                labels.push(v);
                go(partition, k, labels, used, out);
                labels.pop();
                used[v] = false;
            }
        }
    }
    let mut terms = Vec::new();
    go(
        partition,
        k,
        &mut Vec::new(),
        &mut vec![false; k + 1],
        &mut terms,
    );
    NCPolynomial::from_terms(k, terms)
}

/// `p_π` over `x_1, …, x_k`: one monomial per labelling of the blocks, equal
/// labels allowed.
pub fn expand_p(partition: &SetPartition, k: usize) -> NCPolynomial {
    let b = partition.num_blocks();
    if k == 0 && b > 0 {
        return NCPolynomial::zero(k);
    }
    let mut labels = vec![1; b];
    let mut terms = Vec::new();
    loop {
        terms.push((monomial_from_labels(partition, &labels), 1));
        // odometer step over [k]^b
        let mut pos = b;
        loop {
            if pos == 0 {
                return NCPolynomial::from_terms(k, terms);
            }
            pos -= 1;
            if labels[pos] < k {
                labels[pos] += 1;
                break;
            }
            labels[pos] = 1;
        }
    }
}

/// Product of noncommutative polynomials: concatenation on monomials.
pub fn multiply_nc(f: &NCPolynomial, g: &NCPolynomial) -> Result<NCPolynomial, NcsymError> {
    if f.k != g.k {
        return Err(NcsymError::VariableCountMismatch(f.k, g.k));
    }
    Ok(NCPolynomial {
        k: f.k,
        terms: f.terms.bilinear(&g.terms, NCMonomial::concat),
    })
}

/// The action `g(x_{i_1} ⋯ x_{i_n}) = x_{g⁻¹(i_1)} ⋯ x_{g⁻¹(i_n)}`, where
/// `perm[i - 1] = g(i)`.
pub fn permute_variables(f: &NCPolynomial, perm: &[usize]) -> Result<NCPolynomial, NcsymError> {
    let k = f.k;
    if perm.len() != k {
        return Err(NcsymError::InvalidPermutation(k));
    }
    let mut inverse = vec![0; k + 1];
    for (i, &gi) in perm.iter().enumerate() {
        if gi == 0 || gi > k || inverse[gi] != 0 {
            return Err(NcsymError::InvalidPermutation(k));
        }
        inverse[gi] = i + 1;
    }
    Ok(NCPolynomial::from_terms(
        k,
        f.terms.iter().map(|(m, &c)| {
            (
                NCMonomial(m.indices().iter().map(|&i| inverse[i]).collect()),
                c,
            )
        }),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Power sums `p_π`.
    P,
    /// Monomial symmetric functions `m_π`.
    M,
}

impl Basis {
    pub fn symbol(self) -> char {
        match self {
            Basis::P => 'p',
            Basis::M => 'm',
        }
    }

    /// The truncated expansion of one basis element.
    pub fn expand(self, partition: &SetPartition, k: usize) -> NCPolynomial {
        match self {
            Basis::P => expand_p(partition, k),
            Basis::M => expand_m(partition, k),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Basis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "p" => Ok(Basis::P),
            "m" => Ok(Basis::M),
            other => Err(format!("unknown basis {other:?} (expected p or m)")),
        }
    }
}

/// A formal integer combination of `p_π` or of `m_π`; partitions of
/// different sizes may be mixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCSymElement {
    basis: Basis,
    terms: LinComb<SetPartition>,
}

impl NCSymElement {
    pub fn zero(basis: Basis) -> Self {
        Self {
            basis,
            terms: LinComb::zero(),
        }
    }

    /// The multiplicative identity, indexed by the trivial partition.
    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, SetPartition::trivial())
    }

    pub fn basis_element(basis: Basis, partition: SetPartition) -> Self {
        Self {
            basis,
            terms: LinComb::basis(partition),
        }
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (SetPartition, Coeff)>,
    {
        Self {
            basis,
            terms: terms.into_iter().collect(),
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<SetPartition> {
        &self.terms
    }

    pub fn coeff(&self, partition: &SetPartition) -> Coeff {
        self.terms.coeff(partition)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// The truncated polynomial this element denotes.
    pub fn expand(&self, k: usize) -> NCPolynomial {
        let mut out = NCPolynomial::zero(k);
        for (partition, &c) in self.terms.iter() {
            out.add_assign(&self.basis.expand(partition, k).scale(c));
        }
        out
    }

    /// Product in either basis. Monomial-basis operands are multiplied by way
    /// of the power-sum basis and converted back.
    pub fn product(&self, other: &Self) -> Result<Self, NcsymError> {
        if self.basis != other.basis {
            return Err(NcsymError::BasisMismatch {
                expected: self.basis.symbol(),
                found: other.basis.symbol(),
            });
        }
        match self.basis {
            Basis::P => product_p(self, other),
            Basis::M => Ok(to_basis(
                &product_p(&to_basis(self, Basis::P), &to_basis(other, Basis::P))?,
                Basis::M,
            )),
        }
    }
}

impl fmt::Display for NCSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (partition, &c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            if c.unsigned_abs() != 1 {
                write!(f, "{}*", c.unsigned_abs())?;
            }
            write!(f, "{}[{}]", self.basis, partition)?;
        }
        Ok(())
    }
}

fn require_p(u: &NCSymElement) -> Result<(), NcsymError> {
    if u.basis != Basis::P {
        return Err(NcsymError::BasisMismatch {
            expected: 'p',
            found: u.basis.symbol(),
        });
    }
    Ok(())
}

/// `p_π · p_σ = p_{π|σ}`, extended bilinearly.
pub fn product_p(u: &NCSymElement, v: &NCSymElement) -> Result<NCSymElement, NcsymError> {
    require_p(u)?;
    require_p(v)?;
    Ok(NCSymElement {
        basis: Basis::P,
        terms: u.terms.bilinear(&v.terms, slash),
    })
}

/// Change of basis between `p` and `m`, degree by degree.
pub fn to_basis(u: &NCSymElement, target: Basis) -> NCSymElement {
    if u.basis == target {
        return u.clone();
    }
    let mut matrices: HashMap<usize, BasisMatrix> = HashMap::new();
    let terms = u.terms.linear_map(|partition| {
        let n = partition.n();
        let matrix = matrices.entry(n).or_insert_with(|| match u.basis {
            Basis::P => zeta_matrix(n),
            Basis::M => mu_matrix(n),
        });
        let row = matrix.index_of(partition);
        matrix
            .order
            .iter()
            .zip(&matrix.entries[row])
            .filter(|(_, &c)| c != 0)
            .map(|(sigma, &c)| (sigma.clone(), c))
            .collect()
    });
    NCSymElement {
        basis: target,
        terms,
    }
}

/// The isomorphism onto the rook algebra: `p_π ↦ R_π`.
pub fn rook_image(u: &NCSymElement) -> Result<RookAlgebraElement, NcsymError> {
    require_p(u)?;
    Ok(u.terms
        .iter()
        .map(|(partition, &c)| (partition_to_rook(partition), c))
        .collect())
}

/// A change-of-basis matrix on degree `n`. Rows and columns follow `order`:
/// decreasing block count, ties broken RGF-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisMatrix {
    n: usize,
    order: Vec<SetPartition>,
    entries: Vec<Vec<Coeff>>,
    position: HashMap<SetPartition, usize>,
}

impl BasisMatrix {
    fn with_entries(n: usize, order: Vec<SetPartition>, entries: Vec<Vec<Coeff>>) -> Self {
        let position = order
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Self {
            n,
            order,
            entries,
            position,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[SetPartition] {
        &self.order
    }

    pub fn entries(&self) -> &[Vec<Coeff>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn index_of(&self, partition: &SetPartition) -> usize {
        self.position[partition]
    }

    pub fn get(&self, row: &SetPartition, column: &SetPartition) -> Coeff {
        self.entries[self.index_of(row)][self.index_of(column)]
    }

    pub fn is_unit_upper_triangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &c)| (j < i && c == 0) || (j == i && c == 1) || j > i)
        })
    }

    /// Matrix product; both operands must share the same order.
    pub fn multiply(&self, other: &Self) -> Vec<Vec<Coeff>> {
        assert_eq!(self.order, other.order, "basis orders differ");
        let size = self.size();
        let mut out = vec![vec![0 as Coeff; size]; size];
        for (i, row) in self.entries.iter().enumerate() {
            for (l, &a) in row.iter().enumerate().filter(|(_, &a)| a != 0) {
                for (j, &b) in other.entries[l].iter().enumerate().filter(|(_, &b)| b != 0) {
                    out[i][j] = add_coeff(out[i][j], mul_coeff(a, b));
                }
            }
        }
        out
    }
}

#[derive(Serialize)]
struct BasisMatrixJson<'a> {
    n: usize,
    order: &'a [SetPartition],
    entries: &'a [Vec<Coeff>],
}

impl Serialize for BasisMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BasisMatrixJson {
            n: self.n,
            order: &self.order,
            entries: &self.entries,
        }
        .serialize(serializer)
    }
}

/// `Π_n` sorted by decreasing block count, then RGF-lex.
pub fn canonical_order(n: usize) -> Vec<SetPartition> {
    let mut order = enumerate_partitions(n);
    order.sort_by(|a, b| b.num_blocks().cmp(&a.num_blocks()).then_with(|| a.cmp(b)));
    order
}

/// Entry `(π, σ)` is 1 when `σ ≥ π`, so that `p_π = Σ_σ ζ(π, σ) m_σ`.
pub fn zeta_matrix(n: usize) -> BasisMatrix {
    let order = canonical_order(n);
    let entries = order
        .iter()
        .map(|pi| {
            order
                .iter()
                .map(|sigma| Coeff::from(coarser_eq(sigma, pi).expect("same ground set")))
                .collect()
        })
        .collect();
    BasisMatrix::with_entries(n, order, entries)
}

/// The inverse of [`zeta_matrix`], by back-substitution on the unit upper
/// triangular system. Entry `(π, σ)` gives `m_π = Σ_σ μ(π, σ) p_σ`.
pub fn mu_matrix(n: usize) -> BasisMatrix {
    let zeta = zeta_matrix(n);
    let size = zeta.size();
    // strictly-upper nonzero columns of each zeta row
    let above: Vec<Vec<usize>> = zeta
        .entries
        .iter()
        .enumerate()
        .map(|(i, row)| (i + 1..size).filter(|&l| row[l] != 0).collect())
        .collect();
    let mut mu = vec![vec![0 as Coeff; size]; size];
    #[allow(clippy::needless_range_loop)]
    for j in 0..size {
        mu[j][j] = 1;
        for i in (0..j).rev() {
            let acc = above[i].iter().take_while(|&&l| l <= j).fold(0, |acc, &l| {
                add_coeff(acc, mul_coeff(zeta.entries[i][l], mu[l][j]))
            });
            mu[i][j] = -acc;
        }
    }
    BasisMatrix::with_entries(n, zeta.order, mu)
}
