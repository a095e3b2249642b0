//! Finite and affine Weyl groups.
//!
//! Finite elements are stored with their lexicographically least reduced
//! word (generators are 1-based, matching wall index 0 = the affine wall)
//! together with their matrices on weight and on coroot coordinates. The
//! affine group is the semidirect product `π₁(T) ⋊ W` acting on the Cartan
//! algebra by `(β, w)·h = w(h) + β`; its reflections are indexed by affine
//! real roots `(m, ᾱ)`, whose reflection fixes the wall `ᾱ(h) + m = 0`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::rat_int;
use crate::lattice::{
    pairing, pairing_rational, CorootVector, RationalCartanVector, Root, RootDatum, Weight,
};
use crate::linalg::{self, IMat};

/// An element of the finite Weyl group in canonical form.
#[derive(Debug, Clone)]
pub struct FiniteWeylElement {
    word: Vec<usize>,
    mat_weight: IMat,
    mat_coroot: IMat,
}

impl PartialEq for FiniteWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for FiniteWeylElement {}

impl std::hash::Hash for FiniteWeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl PartialOrd for FiniteWeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiniteWeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word.len(), &self.word).cmp(&(other.word.len(), &other.word))
    }
}

impl FiniteWeylElement {
    /// The lexicographically least reduced word, with 1-based generators.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// The sign character `(−1)^{ℓ(w)}`.
    pub fn det(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Short label such as `e` or `s1s2s1`.
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.iter().map(|i| format!("s{i}")).collect()
        }
    }

    pub fn act_weight(&self, lambda: &Weight) -> Weight {
        Weight::new(linalg::mat_vec(&self.mat_weight, &lambda.coords))
    }

    pub fn act_coroot(&self, beta: &CorootVector) -> CorootVector {
        CorootVector::new(linalg::mat_vec(&self.mat_coroot, &beta.coords))
    }

    pub fn act_rational(&self, h: &RationalCartanVector) -> RationalCartanVector {
        RationalCartanVector::new(
            self.mat_coroot
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&h.coords)
                        .map(|(&m, c)| rat_int(m) * c)
                        .sum()
                })
                .collect(),
        )
    }

    pub fn act_complex(&self, h: &[num_complex::Complex64]) -> Vec<num_complex::Complex64> {
        self.mat_coroot
            .iter()
            .map(|row| row.iter().zip(h).map(|(&m, c)| m as f64 * c).sum())
            .collect()
    }

    pub(crate) fn weight_matrix(&self) -> &IMat {
        &self.mat_weight
    }
}

impl fmt::Display for FiniteWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// The full finite Weyl group with canonical words, built once per datum.
#[derive(Debug)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<FiniteWeylElement>,
    index: HashMap<IMat, usize>,
    /// Reflection index per root (parallel to `RootDatum::roots`).
    reflection_of_root: Vec<usize>,
}

impl WeylGroup {
    /// The cached group of a datum.
    pub fn get(datum: &RootDatum) -> &WeylGroup {
        datum.weyl_cache.get_or_init(|| WeylGroup::build(datum))
    }

    fn build(datum: &RootDatum) -> WeylGroup {
        let rank = datum.rank();
        let gen_weight: Vec<IMat> = (1..=rank)
            .map(|i| simple_weight_matrix(datum, i))
            .collect();
        let gen_coroot: Vec<IMat> = (1..=rank)
            .map(|i| simple_coroot_matrix(datum, i))
            .collect();
        let mut elements = vec![FiniteWeylElement {
            word: vec![],
            mat_weight: linalg::ident(rank),
            mat_coroot: linalg::ident(rank),
        }];
        let mut index = HashMap::new();
        index.insert(elements[0].mat_weight.clone(), 0usize);
        // Breadth-first by length; parents in lex order and ascending
        // generators make the first word found the lex-least reduced word.
        let mut queue: VecDeque<usize> = VecDeque::from([0usize]);
        while let Some(at) = queue.pop_front() {
            for g in 1..=rank {
                let mat_weight =
                    linalg::mat_mul(&elements[at].mat_weight, &gen_weight[g - 1]);
                if index.contains_key(&mat_weight) {
                    continue;
                }
                let mat_coroot =
                    linalg::mat_mul(&elements[at].mat_coroot, &gen_coroot[g - 1]);
                let mut word = elements[at].word.clone();
                word.push(g);
                index.insert(mat_weight.clone(), elements.len());
                elements.push(FiniteWeylElement {
                    word,
                    mat_weight,
                    mat_coroot,
                });
                queue.push_back(elements.len() - 1);
            }
        }
        let reflection_of_root = datum
            .roots()
            .iter()
            .map(|r| {
                let mat = reflection_weight_matrix(datum, r);
                *index.get(&mat).expect("reflections lie in W")
            })
            .collect();
        WeylGroup {
            rank,
            elements,
            index,
            reflection_of_root,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in breadth-first (length, lex) order; index 0 is `e`.
    pub fn elements(&self) -> &[FiniteWeylElement] {
        &self.elements
    }

    pub fn identity(&self) -> &FiniteWeylElement {
        &self.elements[0]
    }

    /// The simple reflection `s_i`, 1-based.
    ///
    /// # Panics
    /// Panics if `i` is out of `1..=rank`.
    pub fn simple_reflection(&self, i: usize) -> &FiniteWeylElement {
        assert!((1..=self.rank).contains(&i), "generator index {i}");
        self.elements
            .iter()
            .find(|e| e.word == [i])
            .expect("simple reflections are enumerated")
    }

    /// The reflection attached to a root of the datum.
    pub fn reflection(&self, datum: &RootDatum, alpha: &Weight) -> Result<&FiniteWeylElement> {
        let pos = datum
            .roots()
            .iter()
            .position(|r| &r.weight == alpha)
            .ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        Ok(&self.elements[self.reflection_of_root[pos]])
    }

    pub fn compose(&self, a: &FiniteWeylElement, b: &FiniteWeylElement) -> FiniteWeylElement {
        let mat = linalg::mat_mul(&a.mat_weight, &b.mat_weight);
        self.by_weight_matrix(&mat).clone()
    }

    pub fn inverse(&self, a: &FiniteWeylElement) -> FiniteWeylElement {
        // The weight matrix of w⁻¹ is the transpose of the coroot matrix of w.
        let mat = linalg::transpose(&a.mat_coroot);
        self.by_weight_matrix(&mat).clone()
    }

    fn by_weight_matrix(&self, mat: &IMat) -> &FiniteWeylElement {
        &self.elements[*self.index.get(mat).expect("closed under products")]
    }
}

fn simple_weight_matrix(datum: &RootDatum, i: usize) -> IMat {
    let rank = datum.rank();
    let mut m = linalg::ident(rank);
    for r in 0..rank {
        m[r][i - 1] -= datum.cartan()[r][i - 1];
    }
    m
}

fn simple_coroot_matrix(datum: &RootDatum, i: usize) -> IMat {
    let rank = datum.rank();
    let mut m = linalg::ident(rank);
    for c in 0..rank {
        m[i - 1][c] -= datum.cartan()[c][i - 1];
    }
    m
}

fn reflection_weight_matrix(datum: &RootDatum, root: &Root) -> IMat {
    let rank = datum.rank();
    let coroot = datum
        .coroot_of(&root.weight)
        .expect("roots have integral coroots");
    let mut m = linalg::ident(rank);
    for r in 0..rank {
        for c in 0..rank {
            m[r][c] -= root.weight.coords[r] * coroot.coords[c];
        }
    }
    m
}

/// An affine real root `ᾱ + mδ`, stored as the pair `(m, ᾱ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub delta: i64,
    pub finite: Weight,
}

impl AffineRoot {
    pub fn new(delta: i64, finite: Weight) -> Self {
        AffineRoot { delta, finite }
    }

    /// Positive means `m > 0`, or `m = 0` with positive finite part.
    pub fn is_positive(&self, datum: &RootDatum) -> bool {
        if self.delta != 0 {
            return self.delta > 0;
        }
        datum
            .find_root(&self.finite)
            .map(|r| r.is_positive())
            .unwrap_or(false)
    }

    pub fn neg(&self) -> AffineRoot {
        AffineRoot {
            delta: -self.delta,
            finite: self.finite.neg(),
        }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.delta, self.finite)
    }
}

/// An element `t_β w` of the affine Weyl group `π₁(T) ⋊ W`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    pub translation: CorootVector,
    pub finite: FiniteWeylElement,
}

impl AffineWeylElement {
    pub fn identity(datum: &RootDatum) -> Self {
        AffineWeylElement {
            translation: CorootVector::zero(datum.rank()),
            finite: WeylGroup::get(datum).identity().clone(),
        }
    }

    pub fn from_finite(w: &FiniteWeylElement, rank: usize) -> Self {
        AffineWeylElement {
            translation: CorootVector::zero(rank),
            finite: w.clone(),
        }
    }

    pub fn from_translation(beta: &CorootVector, datum: &RootDatum) -> Self {
        AffineWeylElement {
            translation: beta.clone(),
            finite: WeylGroup::get(datum).identity().clone(),
        }
    }

    /// `(β₁, w₁)(β₂, w₂) = (β₁ + w₁(β₂), w₁w₂)`.
    pub fn compose(&self, other: &Self, datum: &RootDatum) -> Self {
        let group = WeylGroup::get(datum);
        AffineWeylElement {
            translation: self.translation.add(&self.finite.act_coroot(&other.translation)),
            finite: group.compose(&self.finite, &other.finite),
        }
    }

    pub fn inverse(&self, datum: &RootDatum) -> Self {
        let group = WeylGroup::get(datum);
        let w_inv = group.inverse(&self.finite);
        AffineWeylElement {
            translation: w_inv.act_coroot(&self.translation).neg(),
            finite: w_inv,
        }
    }

    /// The affine action `h ↦ w(h) + β`.
    pub fn act(&self, h: &RationalCartanVector) -> RationalCartanVector {
        self.finite.act_rational(h).add_coroot(&self.translation)
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.finite.is_identity()
    }

    /// The reflection `r_α = t_{−mᾱ∨} s_ᾱ` of an affine real root.
    pub fn reflection(datum: &RootDatum, alpha: &AffineRoot) -> Result<Self> {
        let group = WeylGroup::get(datum);
        let coroot = datum.coroot_of(&alpha.finite)?;
        Ok(AffineWeylElement {
            translation: coroot.scale(-alpha.delta),
            finite: group.reflection(datum, &alpha.finite)?.clone(),
        })
    }

    /// Action on affine roots: `(β,w)·(m, ᾱ) = (m − (wᾱ)(β), wᾱ)`.
    pub fn act_affine_root(&self, alpha: &AffineRoot) -> AffineRoot {
        let finite = self.finite.act_weight(&alpha.finite);
        AffineRoot {
            delta: alpha.delta - pairing(&finite, &self.translation),
            finite,
        }
    }

    pub fn label(&self) -> String {
        format!("t{:?}·{}", self.translation.coords, self.finite.label())
    }
}

/// A point of the closed fundamental alcove together with its tight walls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcovePoint {
    pub point: RationalCartanVector,
    /// Tight constraints: `0` for the highest-root wall `θ(h) = 1`, `i ≥ 1`
    /// for `α_i(h) = 0`.
    pub walls: BTreeSet<usize>,
}

impl AlcovePoint {
    pub fn stabilizer_walls(&self) -> &BTreeSet<usize> {
        &self.walls
    }
}

/// Constraint values `(θ(h) − 1, α_1(h), …, α_n(h))`; the point is in the
/// closed alcove iff the first is ≤ 0 and the rest are ≥ 0.
fn alcove_margins(datum: &RootDatum, h: &RationalCartanVector) -> Vec<BigRational> {
    let mut vals = Vec::with_capacity(datum.rank() + 1);
    vals.push(pairing_rational(&datum.highest_root().weight, h) - BigRational::one());
    for i in 0..datum.rank() {
        vals.push(pairing_rational(&datum.simple_root(i), h));
    }
    vals
}

pub fn in_closed_alcove(datum: &RootDatum, h: &RationalCartanVector) -> bool {
    let vals = alcove_margins(datum, h);
    !vals[0].is_positive() && vals[1..].iter().all(|v| !v.is_negative())
}

/// Folds `h` into the closed fundamental alcove by repeatedly reflecting in
/// the most-violated wall (smallest index on ties). Returns the folded point
/// with its tight walls and a witness `g` with `g(h) =` the folded point.
pub fn fold_to_alcove(
    datum: &RootDatum,
    h: &RationalCartanVector,
) -> Result<(AlcovePoint, AffineWeylElement)> {
    if h.rank() != datum.rank() {
        return Err(Error::RankMismatch(format!(
            "point has rank {}, datum {}",
            h.rank(),
            datum.rank()
        )));
    }
    let group = WeylGroup::get(datum);
    let theta = datum.highest_root().weight.clone();
    let theta_coroot = datum.coroot_of(&theta)?;
    let r0 = AffineWeylElement {
        translation: theta_coroot,
        finite: group.reflection(datum, &theta)?.clone(),
    };
    let mut current = h.clone();
    let mut witness = AffineWeylElement::identity(datum);
    let mut steps = 0usize;
    loop {
        let vals = alcove_margins(datum, &current);
        // violation size per wall; wall 0 violated when θ(h) − 1 > 0,
        // wall i ≥ 1 violated when α_i(h) < 0.
        let mut worst: Option<(BigRational, usize)> = None;
        for (idx, v) in vals.iter().enumerate() {
            let violation = if idx == 0 { v.clone() } else { -v.clone() };
            if violation.is_positive() {
                let better = match &worst {
                    None => true,
                    Some((w, _)) => violation > *w,
                };
                if better {
                    worst = Some((violation, idx));
                }
            }
        }
        match worst {
            None => {
                let walls: BTreeSet<usize> = vals
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.is_zero())
                    .map(|(i, _)| i)
                    .collect();
                return Ok((
                    AlcovePoint {
                        point: current,
                        walls,
                    },
                    witness,
                ));
            }
            Some((_, 0)) => {
                current = r0.act(&current);
                witness = r0.compose(&witness, datum);
            }
            Some((_, i)) => {
                let s = AffineWeylElement::from_finite(group.simple_reflection(i), datum.rank());
                current = s.act(&current);
                witness = s.compose(&witness, datum);
            }
        }
        steps += 1;
        assert!(
            steps < 1_000_000,
            "alcove folding failed to terminate; separating-wall count must decrease"
        );
    }
}

/// All finite Weyl elements, breadth-first (length, lex) order.
pub fn enumerate_finite_weyl(datum: &RootDatum) -> Vec<FiniteWeylElement> {
    WeylGroup::get(datum).elements().to_vec()
}

/// Affine generators `r_0 = t_{θ∨}s_θ, r_1 = s_1, …, r_n = s_n`.
pub fn affine_generators(datum: &RootDatum) -> Result<Vec<AffineWeylElement>> {
    let group = WeylGroup::get(datum);
    let theta = datum.highest_root().weight.clone();
    let mut gens = vec![AffineWeylElement {
        translation: datum.coroot_of(&theta)?,
        finite: group.reflection(datum, &theta)?.clone(),
    }];
    for i in 1..=datum.rank() {
        gens.push(AffineWeylElement::from_finite(
            group.simple_reflection(i),
            datum.rank(),
        ));
    }
    Ok(gens)
}

/// Affine Weyl elements grouped by length, `result[l]` = elements of length
/// `l`, complete for `l ≤ max_length`.
pub fn affine_elements_by_length(
    datum: &RootDatum,
    max_length: usize,
) -> Result<Vec<Vec<AffineWeylElement>>> {
    if max_length > 12 {
        return Err(Error::Invalid(
            "affine enumeration is capped at length 12".to_string(),
        ));
    }
    let gens = affine_generators(datum)?;
    let mut seen: BTreeSet<(Vec<i64>, Vec<usize>)> = BTreeSet::new();
    let id = AffineWeylElement::identity(datum);
    let key = |g: &AffineWeylElement| (g.translation.coords.clone(), g.finite.word().to_vec());
    seen.insert(key(&id));
    let mut levels = vec![vec![id]];
    for _ in 0..max_length {
        let mut next = Vec::new();
        for g in levels.last().unwrap() {
            for r in &gens {
                let prod = g.compose(r, datum);
                if seen.insert(key(&prod)) {
                    next.push(prod);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    Ok(levels)
}

/// A Bruhat cover `w = r_α v` with `ℓ(w) = ℓ(v) + 1` and `α` a positive
/// affine real root.
#[derive(Debug, Clone)]
pub struct CoverPair {
    pub upper: AffineWeylElement,
    pub lower: AffineWeylElement,
    pub root: AffineRoot,
}

/// If `g` is an affine reflection, its positive affine root.
pub fn reflection_root(datum: &RootDatum, g: &AffineWeylElement) -> Option<AffineRoot> {
    // g = (β, s_γ) is a reflection iff β = t·γ∨ for some integer t; then
    // g = r_{(−t, γ)} = r_{(t, −γ)}.
    let root = datum
        .roots()
        .iter()
        .find(|r| {
            WeylGroup::get(datum)
                .reflection(datum, &r.weight)
                .map(|s| s == &g.finite)
                .unwrap_or(false)
        })?
        .clone();
    let coroot = datum.coroot_of(&root.weight).ok()?;
    let mut t: Option<i64> = None;
    for (b, c) in g.translation.coords.iter().zip(&coroot.coords) {
        match (b, c) {
            (0, 0) => continue,
            (_, 0) => return None,
            (b, c) => {
                if b % c != 0 {
                    return None;
                }
                let ratio = b / c;
                if let Some(prev) = t {
                    if prev != ratio {
                        return None;
                    }
                } else {
                    t = Some(ratio);
                }
            }
        }
    }
    let t = t.unwrap_or(0);
    let candidate = AffineRoot::new(-t, root.weight);
    if candidate.is_positive(datum) {
        Some(candidate)
    } else {
        Some(candidate.neg())
    }
}

/// All Bruhat covers `(w, v, α)` with `ℓ(w) ≤ max_length`.
pub fn bruhat_cover_pairs(datum: &RootDatum, max_length: usize) -> Result<Vec<CoverPair>> {
    let levels = affine_elements_by_length(datum, max_length)?;
    let mut covers = Vec::new();
    for l in 1..levels.len() {
        for upper in &levels[l] {
            for lower in &levels[l - 1] {
                let candidate = upper.compose(&lower.inverse(datum), datum);
                if let Some(root) = reflection_root(datum, &candidate) {
                    covers.push(CoverPair {
                        upper: upper.clone(),
                        lower: lower.clone(),
                        root,
                    });
                }
            }
        }
    }
    Ok(covers)
}
