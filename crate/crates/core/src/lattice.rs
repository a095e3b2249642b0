//! Root data for the simple families A–G at rank ≤ 4, with the basic inner
//! form. All arithmetic is exact.
//!
//! Coordinate conventions, used crate-wide:
//!
//! * weights are integer vectors in the fundamental-weight basis, so
//!   `λ(α_i∨) = λ.coords[i]`;
//! * Cartan-algebra vectors are written in the simple-coroot basis;
//! * `cartan[i][j] = α_j(α_i∨)`, hence column `j` of the Cartan matrix is the
//!   weight vector of the simple root `α_j`;
//! * the basic form `⟨·,·⟩` is normalized so long roots have squared length
//!   2, and is transported to the coroot side through `α∨ ↦ 2α/⟨α,α⟩`; its
//!   Gram matrix on the simple coroots is `gram[i][j] = cartan[i][j]/d_j`
//!   with `d_j = ⟨α_j,α_j⟩/2`.
//!
//! Simple roots are ordered as in Bourbaki (for B/C/F/G the last chain node
//! conventions are fixed by the `half_norms` table below).

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, rat_int};
use crate::linalg;

/// Simple-type family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

/// An integral weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    /// The fundamental weight `ω_i` (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Weight { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Weight {
        Weight::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight::new(self.coords.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// An integral vector of the coroot lattice, in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorootVector {
    pub coords: Vec<i64>,
}

impl CorootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        CorootVector { coords }
    }

    pub fn zero(rank: usize) -> Self {
        CorootVector {
            coords: vec![0; rank],
        }
    }

    /// The simple coroot `α_i∨` (0-based index).
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        CorootVector { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &CorootVector) -> CorootVector {
        CorootVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &CorootVector) -> CorootVector {
        CorootVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> CorootVector {
        CorootVector::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: i64) -> CorootVector {
        CorootVector::new(self.coords.iter().map(|a| a * c).collect())
    }

    pub fn to_rational(&self) -> RationalCartanVector {
        RationalCartanVector {
            coords: self.coords.iter().map(|&c| rat_int(c)).collect(),
        }
    }
}

impl fmt::Display for CorootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// A rational Cartan-algebra vector, in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCartanVector {
    pub coords: Vec<BigRational>,
}

impl RationalCartanVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalCartanVector { coords }
    }

    pub fn zero(rank: usize) -> Self {
        RationalCartanVector {
            coords: vec![BigRational::zero(); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalCartanVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        RationalCartanVector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        RationalCartanVector::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalCartanVector::new(self.coords.iter().map(|a| a * c).collect())
    }

    pub fn add_coroot(&self, other: &CorootVector) -> Self {
        self.add(&other.to_rational())
    }

    /// Integral coordinates, if the vector lies in the coroot lattice.
    pub fn as_integral(&self) -> Option<CorootVector> {
        let mut coords = Vec::with_capacity(self.coords.len());
        for c in &self.coords {
            if !c.denom().is_one() {
                return None;
            }
            coords.push(i64::try_from(c.numer().clone()).ok()?);
        }
        Some(CorootVector::new(coords))
    }
}

/// A root, stored both as a weight and in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub weight: Weight,
    pub root_coords: Vec<i64>,
    /// Squared length under the basic form; 2 exactly for long roots.
    pub norm: BigRational,
}

impl Root {
    pub fn is_long(&self) -> bool {
        self.norm == rat_int(2)
    }

    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.height() > 0
    }
}

/// The canonical pairing of a weight with a coroot-lattice vector.
///
/// # Panics
/// Panics if the ranks differ.
pub fn pairing(lambda: &Weight, beta: &CorootVector) -> i64 {
    assert_eq!(lambda.rank(), beta.rank(), "pairing rank mismatch");
    lambda
        .coords
        .iter()
        .zip(&beta.coords)
        .map(|(l, b)| l * b)
        .sum()
}

/// The canonical pairing against a rational Cartan vector.
pub fn pairing_rational(lambda: &Weight, h: &RationalCartanVector) -> BigRational {
    assert_eq!(lambda.rank(), h.rank(), "pairing rank mismatch");
    lambda
        .coords
        .iter()
        .zip(&h.coords)
        .map(|(l, b)| rat_int(*l) * b)
        .sum()
}

/// A fixed simple simply-connected type with its root system and basic form.
pub struct RootDatum {
    family: Family,
    rank: usize,
    cartan: linalg::IMat,
    /// `d_i = ⟨α_i, α_i⟩ / 2`; 1 for long simple roots.
    half_norms: Vec<BigRational>,
    gram: Vec<Vec<BigRational>>,
    gram_inverse: Vec<Vec<BigRational>>,
    roots: Vec<Root>,
    positive: Vec<usize>,
    highest: usize,
    pub(crate) weyl_cache: OnceLock<crate::weyl::WeylGroup>,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootDatum({})", self.name())
    }
}

impl RootDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let (cartan, half_norms) = family_tables(family, rank)?;
        let gram: Vec<Vec<BigRational>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| rat_int(cartan[i][j]) / &half_norms[j])
                    .collect()
            })
            .collect();
        let gram_inverse = linalg::rat_inverse(&gram)
            .expect("Gram matrix of a simple type is invertible");
        let roots = enumerate_roots(&cartan, &half_norms);
        let positive: Vec<usize> = roots
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_positive())
            .map(|(i, _)| i)
            .collect();
        let highest = *positive
            .iter()
            .max_by_key(|&&i| roots[i].height())
            .expect("nonempty root system");
        let datum = RootDatum {
            family,
            rank,
            cartan,
            half_norms,
            gram,
            gram_inverse,
            roots,
            positive,
            highest,
            weyl_cache: OnceLock::new(),
        };
        debug_assert!(datum.roots[datum.highest].is_long());
        debug_assert!(datum.roots[datum.highest]
            .weight
            .coords
            .iter()
            .all(|&c| c >= 0));
        Ok(datum)
    }

    /// Builds from a concatenated name such as `A2` or `c3`.
    pub fn from_name(name: &str) -> Result<Self> {
        let name = name.trim();
        if name.len() < 2 {
            return Err(Error::Parse(format!("cannot read type `{name}`")));
        }
        let family: Family = name[..1].parse()?;
        let rank: usize = name[1..]
            .parse()
            .map_err(|_| Error::Parse(format!("cannot read rank in `{name}`")))?;
        RootDatum::new(family, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// `cartan[i][j] = α_j(α_i∨)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix of the basic form on the simple coroots (integral values).
    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    pub(crate) fn gram_inverse(&self) -> &[Vec<BigRational>] {
        &self.gram_inverse
    }

    /// `⟨α_i, α_i⟩/2` for the simple roots.
    pub fn half_norms(&self) -> &[BigRational] {
        &self.half_norms
    }

    /// The simple root `α_i` as a weight (column `i` of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new((0..self.rank).map(|r| self.cartan[r][i]).collect())
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        (0..self.rank).map(|i| self.simple_root(i)).collect()
    }

    /// All roots, positives first, sorted by height then lexicographically.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.positive.iter().map(|&i| &self.roots[i])
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest]
    }

    /// Looks a weight up in the root list.
    pub fn find_root(&self, w: &Weight) -> Option<&Root> {
        self.roots.iter().find(|r| &r.weight == w)
    }

    /// The basic form on coroot-lattice vectors.
    pub fn basic_form(&self, beta: &CorootVector, gamma: &CorootVector) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, b) in beta.coords.iter().enumerate() {
            if *b == 0 {
                continue;
            }
            for (j, g) in gamma.coords.iter().enumerate() {
                if *g == 0 {
                    continue;
                }
                acc += &self.gram[i][j] * rat_int(b * g);
            }
        }
        acc
    }

    /// The basic form on rational Cartan vectors.
    pub fn basic_form_rational(
        &self,
        beta: &RationalCartanVector,
        gamma: &RationalCartanVector,
    ) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, b) in beta.coords.iter().enumerate() {
            for (j, g) in gamma.coords.iter().enumerate() {
                acc += &self.gram[i][j] * b * g;
            }
        }
        acc
    }

    /// The basic form extended to complex Cartan vectors, ℂ-bilinearly.
    pub fn basic_form_complex(
        &self,
        beta: &[num_complex::Complex64],
        gamma: &[num_complex::Complex64],
    ) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (i, b) in beta.iter().enumerate() {
            for (j, g) in gamma.iter().enumerate() {
                acc += crate::exact::rational_to_f64(&self.gram[i][j]) * b * g;
            }
        }
        acc
    }

    /// The weight `β* = ⟨β, ·⟩` attached to a coroot-lattice vector.
    pub fn dual_weight(&self, beta: &CorootVector) -> Result<Weight> {
        let coords = linalg::rat_mat_vec(
            &self.gram,
            &beta.to_rational().coords,
        );
        let mut out = Vec::with_capacity(self.rank);
        for c in &coords {
            if !c.denom().is_one() {
                return Err(Error::NonIntegral(format!(
                    "dual weight of {beta} has coordinate {c}"
                )));
            }
            out.push(i64::try_from(c.numer().clone()).map_err(|_| {
                Error::NonIntegral(format!("dual weight of {beta} overflows"))
            })?);
        }
        Ok(Weight::new(out))
    }

    /// The coroot `h_α = 2α/⟨α,α⟩` of a root, in simple-coroot coordinates.
    pub fn coroot_of(&self, alpha: &Weight) -> Result<CorootVector> {
        let root = self
            .find_root(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        let d_alpha = &root.norm / rat_int(2);
        let mut coords = Vec::with_capacity(self.rank);
        for (c, d_i) in root.root_coords.iter().zip(&self.half_norms) {
            let v = rat_int(*c) * d_i / &d_alpha;
            if !v.denom().is_one() {
                return Err(Error::NonIntegral(format!(
                    "coroot of {alpha} has coordinate {v}"
                )));
            }
            coords.push(i64::try_from(v.numer().clone()).map_err(|_| {
                Error::NonIntegral(format!("coroot of {alpha} overflows"))
            })?);
        }
        Ok(CorootVector::new(coords))
    }

    /// Squared length of a weight under the basic form (via the inverse Gram
    /// matrix).
    pub fn weight_norm(&self, lambda: &Weight) -> BigRational {
        let v: Vec<BigRational> = lambda.coords.iter().map(|&c| rat_int(c)).collect();
        let gv = linalg::rat_mat_vec(&self.gram_inverse, &v);
        v.iter().zip(&gv).map(|(a, b)| a * b).sum()
    }

    /// `2/⟨ᾱ,ᾱ⟩` for a root; 1 for long roots, 2 or 3 for short ones.
    pub fn inv_half_norm(&self, alpha: &Weight) -> Result<i64> {
        let root = self
            .find_root(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.to_string()))?;
        let t = rat_int(2) / &root.norm;
        debug_assert!(t.denom().is_one());
        Ok(i64::try_from(t.numer().clone()).expect("tiny"))
    }
}

/// Cartan matrix (`[i][j] = α_j(α_i∨)`) and simple-root half-norms per type.
fn family_tables(family: Family, rank: usize) -> Result<(linalg::IMat, Vec<BigRational>)> {
    let unsupported = |reason: &str| Error::UnsupportedType {
        family: family.to_string(),
        rank,
        reason: reason.to_string(),
    };
    if rank == 0 {
        return Err(unsupported("rank must be at least 1"));
    }
    if rank > 4 {
        return Err(unsupported("ranks above 4 are out of scope"));
    }
    let chain = |n: usize| -> linalg::IMat {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    let ones = |n: usize| vec![rat_int(1); n];
    match family {
        Family::A => Ok((chain(rank), ones(rank))),
        Family::B => {
            if rank < 2 {
                return Err(unsupported("B requires rank ≥ 2"));
            }
            // Last simple root short: α_n(α_{n−1}∨) = −1, α_{n−1}(α_n∨) = −2.
            let mut m = chain(rank);
            m[rank - 1][rank - 2] = -2;
            let mut d = ones(rank);
            d[rank - 1] = rat(1, 2);
            Ok((m, d))
        }
        Family::C => {
            if rank < 2 {
                return Err(unsupported("C requires rank ≥ 2"));
            }
            // Last simple root long: α_n(α_{n−1}∨) = −2, α_{n−1}(α_n∨) = −1.
            let mut m = chain(rank);
            m[rank - 2][rank - 1] = -2;
            let mut d = vec![rat(1, 2); rank];
            d[rank - 1] = rat_int(1);
            Ok((m, d))
        }
        Family::D => {
            if rank < 3 {
                return Err(unsupported("D requires rank ≥ 3"));
            }
            // Fork: α_n attaches to α_{n−2}.
            let mut m = chain(rank - 1);
            for row in &mut m {
                row.push(0);
            }
            m.push(vec![0; rank]);
            m[rank - 1][rank - 1] = 2;
            m[rank - 1][rank - 3] = -1;
            m[rank - 3][rank - 1] = -1;
            Ok((m, ones(rank)))
        }
        Family::E => Err(unsupported("E types start at rank 6")),
        Family::F => {
            if rank != 4 {
                return Err(unsupported("F exists only at rank 4"));
            }
            let m = vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ];
            let d = vec![rat_int(1), rat_int(1), rat(1, 2), rat(1, 2)];
            Ok((m, d))
        }
        Family::G => {
            if rank != 2 {
                return Err(unsupported("G exists only at rank 2"));
            }
            let m = vec![vec![2, -3], vec![-1, 2]];
            let d = vec![rat(1, 3), rat_int(1)];
            Ok((m, d))
        }
    }
}

/// All roots by reflection closure from the simple roots, in simple-root
/// coordinates; sorted by (height, coordinates) with positives last-in-front.
fn enumerate_roots(cartan: &linalg::IMat, half_norms: &[BigRational]) -> Vec<Root> {
    let rank = cartan.len();
    let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut c = vec![0i64; rank];
        c[i] = 1;
        seen.insert(c.clone());
        queue.push(c);
    }
    while let Some(c) = queue.pop() {
        for i in 0..rank {
            let pair: i64 = (0..rank).map(|j| cartan[i][j] * c[j]).sum();
            let mut refl = c.clone();
            refl[i] -= pair;
            if seen.insert(refl.clone()) {
                queue.push(refl);
            }
        }
    }
    let mut roots: Vec<Root> = seen
        .into_iter()
        .map(|c| {
            let weight = Weight::new(
                (0..rank)
                    .map(|i| (0..rank).map(|j| cartan[i][j] * c[j]).sum())
                    .collect(),
            );
            let mut norm = BigRational::zero();
            for i in 0..rank {
                for j in 0..rank {
                    norm += &half_norms[i] * rat_int(cartan[i][j] * c[i] * c[j]);
                }
            }
            Root {
                weight,
                root_coords: c,
                norm,
            }
        })
        .collect();
    roots.sort_by(|a, b| {
        let key = |r: &Root| (-r.height(), r.root_coords.clone());
        key(a).cmp(&key(b)).reverse()
    });
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    /// Positive roots built bottom-up through root strings, using only the
    /// Cartan pairings: `β + α_i` is a root iff the downward string length
    /// exceeds `β(α_i∨)`. Independent of the reflection closure above.
    fn root_string_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let rank = cartan.len();
        let mut known: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut c = vec![0i64; rank];
            c[i] = 1;
            known.insert(c.clone());
            frontier.push(c);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..rank {
                    let pair: i64 = (0..rank).map(|j| cartan[i][j] * beta[j]).sum();
                    let mut q = 0i64;
                    loop {
                        let mut down = beta.clone();
                        down[i] -= q + 1;
                        if down.iter().all(|&c| c == 0) || !known.contains(&down) {
                            break;
                        }
                        q += 1;
                    }
                    if q - pair >= 1 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            frontier = next;
        }
        known.into_iter().collect()
    }

    fn all_types() -> Vec<RootDatum> {
        [
            "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "F4",
            "G2",
        ]
        .iter()
        .map(|name| RootDatum::from_name(name).unwrap())
        .collect()
    }

    #[test]
    fn rejects_invalid_types() {
        assert!(RootDatum::new(Family::E, 3).is_err());
        assert!(RootDatum::new(Family::E, 4).is_err());
        assert!(RootDatum::new(Family::A, 5).is_err());
        assert!(RootDatum::new(Family::A, 0).is_err());
        assert!(RootDatum::new(Family::D, 2).is_err());
        assert!(RootDatum::new(Family::B, 1).is_err());
        assert!(RootDatum::new(Family::C, 1).is_err());
        assert!(RootDatum::new(Family::F, 3).is_err());
        assert!(RootDatum::new(Family::G, 3).is_err());
        assert!(RootDatum::from_name("H2").is_err());
        assert!(RootDatum::from_name("A").is_err());
    }

    #[test]
    fn cartan_tables() {
        assert_eq!(RootDatum::from_name("A1").unwrap().cartan(), &[vec![2]]);
        assert_eq!(
            RootDatum::from_name("A2").unwrap().cartan(),
            &[vec![2, -1], vec![-1, 2]]
        );
        let c2 = RootDatum::from_name("C2").unwrap();
        assert_eq!(c2.cartan(), &[vec![2, -2], vec![-1, 2]]);
        // Off-diagonal entries are {−1, −2} whichever node is listed first.
        let mut off = vec![c2.cartan()[0][1], c2.cartan()[1][0]];
        off.sort();
        assert_eq!(off, vec![-2, -1]);
        assert_eq!(
            RootDatum::from_name("G2").unwrap().cartan(),
            &[vec![2, -3], vec![-1, 2]]
        );
        let f4 = RootDatum::from_name("F4").unwrap();
        assert_eq!(f4.cartan()[2], vec![0, -2, 2, -1]);
        assert_eq!(f4.cartan()[1], vec![-1, 2, -1, 0]);
    }

    #[test]
    fn cartan_entry_is_pairing_of_simple_root_with_simple_coroot() {
        for d in all_types() {
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    let alpha_j = d.simple_root(j);
                    let coroot_i = CorootVector::simple(d.rank(), i);
                    assert_eq!(pairing(&alpha_j, &coroot_i), d.cartan()[i][j]);
                }
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        let expected = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("B4", 16),
            ("C2", 4),
            ("C3", 9),
            ("C4", 16),
            ("D3", 6),
            ("D4", 12),
            ("F4", 24),
            ("G2", 6),
        ];
        for (name, count) in expected {
            let d = RootDatum::from_name(name).unwrap();
            assert_eq!(d.num_positive_roots(), count, "{name}");
            assert_eq!(d.roots().len(), 2 * count, "{name}");
        }
    }

    #[test]
    fn roots_match_root_string_oracle() {
        for d in all_types() {
            let oracle = root_string_positive_roots(d.cartan());
            let mut ours: Vec<Vec<i64>> = d
                .positive_roots()
                .map(|r| r.root_coords.clone())
                .collect();
            ours.sort();
            assert_eq!(ours, oracle, "{}", d.name());
        }
    }

    #[test]
    fn highest_root_is_maximal() {
        for d in all_types() {
            let theta = d.highest_root();
            assert!(theta.is_long(), "{}", d.name());
            assert!(theta.weight.coords.iter().all(|&c| c >= 0), "{}", d.name());
            // θ + α_i is never a root.
            for i in 0..d.rank() {
                let mut up = theta.root_coords.clone();
                up[i] += 1;
                assert!(
                    d.roots().iter().all(|r| r.root_coords != up),
                    "{} grows past θ",
                    d.name()
                );
            }
            // Strictly maximal height among positive roots.
            let max_h = d.positive_roots().map(|r| r.height()).max().unwrap();
            assert_eq!(theta.height(), max_h);
            assert_eq!(
                d.positive_roots().filter(|r| r.height() == max_h).count(),
                1,
                "{}",
                d.name()
            );
        }
    }

    #[test]
    fn highest_root_examples() {
        assert_eq!(
            RootDatum::from_name("A1").unwrap().highest_root().weight,
            Weight::new(vec![2])
        );
        let a2 = RootDatum::from_name("A2").unwrap();
        assert_eq!(
            a2.highest_root().weight,
            a2.simple_root(0).add(&a2.simple_root(1))
        );
        assert_eq!(a2.highest_root().weight, Weight::new(vec![1, 1]));
        let c2 = RootDatum::from_name("C2").unwrap();
        assert_eq!(c2.highest_root().root_coords, vec![2, 1]);
        assert_eq!(c2.highest_root().weight, Weight::new(vec![2, 0]));
        let g2 = RootDatum::from_name("G2").unwrap();
        assert_eq!(g2.highest_root().root_coords, vec![3, 2]);
        assert_eq!(g2.highest_root().weight, Weight::new(vec![0, 1]));
    }

    #[test]
    fn gram_examples() {
        assert_eq!(RootDatum::from_name("A1").unwrap().gram()[0][0], rat_int(2));
        let a2 = RootDatum::from_name("A2").unwrap();
        assert_eq!(a2.gram()[0][1], rat_int(-1));
        assert_eq!(a2.basic_form(
            &CorootVector::simple(2, 0),
            &CorootVector::simple(2, 1)
        ), rat_int(-1));
        let c2 = RootDatum::from_name("C2").unwrap();
        let g: Vec<Vec<BigRational>> = c2.gram().to_vec();
        assert_eq!(
            g,
            vec![
                vec![rat_int(4), rat_int(-2)],
                vec![rat_int(-2), rat_int(2)]
            ]
        );
        let g2 = RootDatum::from_name("G2").unwrap();
        assert_eq!(
            g2.gram().to_vec(),
            vec![
                vec![rat_int(6), rat_int(-3)],
                vec![rat_int(-3), rat_int(2)]
            ]
        );
    }

    #[test]
    fn gram_is_symmetric_integral_positive_definite() {
        for d in all_types() {
            let n = d.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(d.gram()[i][j], d.gram()[j][i], "{}", d.name());
                    assert!(d.gram()[i][j].denom().is_one(), "{}", d.name());
                }
                // Diagonal is even: the coroot lattice is even for every type
                // under the ⟨long, long⟩ = 2 normalization.
                assert!(
                    (&d.gram()[i][i] / rat_int(2)).denom().is_one(),
                    "{}",
                    d.name()
                );
            }
            // Leading principal minors are positive (exact determinants).
            for k in 1..=n {
                let sub: Vec<Vec<BigRational>> = (0..k)
                    .map(|i| (0..k).map(|j| d.gram()[i][j].clone()).collect())
                    .collect();
                assert!(det(&sub) > BigRational::zero(), "{}", d.name());
            }
        }
    }

    fn det(m: &[Vec<BigRational>]) -> BigRational {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = BigRational::zero();
        for j in 0..n {
            let minor: Vec<Vec<BigRational>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[i][c].clone())
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            acc += sign * &m[0][j] * det(&minor);
        }
        acc
    }

    #[test]
    fn basic_form_positive_on_random_vectors() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for d in all_types() {
            for _ in 0..100 {
                let v = RationalCartanVector::new(
                    (0..d.rank())
                        .map(|_| rat(rng.random_range(-20..=20), rng.random_range(1..=9)))
                        .collect(),
                );
                if v.is_zero() {
                    continue;
                }
                assert!(
                    d.basic_form_rational(&v, &v) > BigRational::zero(),
                    "{}",
                    d.name()
                );
            }
        }
    }

    #[test]
    fn dual_weight_examples() {
        let a1 = RootDatum::from_name("A1").unwrap();
        assert_eq!(
            a1.dual_weight(&CorootVector::new(vec![1])).unwrap(),
            Weight::new(vec![2])
        );
        assert_eq!(
            a1.dual_weight(&CorootVector::new(vec![0])).unwrap(),
            Weight::zero(1)
        );
        let a2 = RootDatum::from_name("A2").unwrap();
        assert_eq!(
            a2.dual_weight(&CorootVector::simple(2, 0)).unwrap(),
            a2.simple_root(0)
        );
    }

    #[test]
    fn dual_weight_respects_pairing() {
        // β*(γ) = ⟨β, γ⟩ for lattice vectors.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for d in all_types() {
            for _ in 0..50 {
                let beta = CorootVector::new(
                    (0..d.rank()).map(|_| rng.random_range(-6..=6)).collect(),
                );
                let gamma = CorootVector::new(
                    (0..d.rank()).map(|_| rng.random_range(-6..=6)).collect(),
                );
                let star = d.dual_weight(&beta).unwrap();
                assert_eq!(
                    rat_int(pairing(&star, &gamma)),
                    d.basic_form(&beta, &gamma),
                    "{}",
                    d.name()
                );
            }
        }
    }

    #[test]
    fn pairing_duality_of_bases() {
        for d in all_types() {
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    let omega = Weight::fundamental(d.rank(), i);
                    let coroot = CorootVector::simple(d.rank(), j);
                    assert_eq!(pairing(&omega, &coroot), i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn coroot_examples() {
        let a1 = RootDatum::from_name("A1").unwrap();
        let alpha = a1.simple_root(0);
        assert_eq!(a1.coroot_of(&alpha).unwrap(), CorootVector::new(vec![1]));
        let a2 = RootDatum::from_name("A2").unwrap();
        let theta = a2.highest_root().weight.clone();
        assert_eq!(a2.coroot_of(&theta).unwrap(), CorootVector::new(vec![1, 1]));
        let c2 = RootDatum::from_name("C2").unwrap();
        let theta = c2.highest_root().weight.clone();
        assert_eq!(c2.coroot_of(&theta).unwrap(), CorootVector::new(vec![1, 1]));
        assert!(a2.coroot_of(&Weight::new(vec![5, 5])).is_err());
    }

    #[test]
    fn coroots_are_integral_for_all_roots() {
        for d in all_types() {
            for r in d.roots() {
                let h = d.coroot_of(&r.weight).unwrap();
                // α(h_α) = 2.
                assert_eq!(pairing(&r.weight, &h), 2, "{}", d.name());
                // ⟨h_α, h_α⟩ = 4/⟨α,α⟩.
                assert_eq!(
                    d.basic_form(&h, &h),
                    rat_int(4) / &r.norm,
                    "{}",
                    d.name()
                );
            }
        }
    }

    #[test]
    fn weight_norm_agrees_with_root_norm() {
        for d in all_types() {
            for r in d.roots() {
                assert_eq!(d.weight_norm(&r.weight), r.norm, "{}", d.name());
            }
            assert_eq!(d.weight_norm(&d.highest_root().weight), rat_int(2));
        }
    }

    #[test]
    fn inv_half_norm_values() {
        let c2 = RootDatum::from_name("C2").unwrap();
        assert_eq!(c2.inv_half_norm(&c2.highest_root().weight).unwrap(), 1);
        assert_eq!(c2.inv_half_norm(&c2.simple_root(0)).unwrap(), 2);
        let g2 = RootDatum::from_name("G2").unwrap();
        assert_eq!(g2.inv_half_norm(&g2.simple_root(0)).unwrap(), 3);
    }
}
