//! Exact model of the G₂ root datum: positive roots, Gram form, coroot
//! pairings, the Weyl group, and weights written in the `(β₃, β₄)` basis.
//!
//! Coordinates are always with respect to the simple roots `β₁` (long) and
//! `β₆` (short). The Gram matrix is `[[6, −3], [−3, 2]]`, so long roots have
//! squared length 6 and short roots 2. The overall scale cancels in every
//! coroot pairing.
//!
//! A [`WeightVector`] carries coefficients that are affine forms in two
//! symbolic parameters `r` and `s`, which lets the parameter
//! `Λ(r, s) = 2r·β₃ + (s − 3r)·β₄` be manipulated without choosing values.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum G2Error {
    #[error("pairing against the zero vector")]
    ZeroRoot,
    #[error("{0} is not a root of G2")]
    NotARoot(RootVector),
    #[error("coroot coefficient is not integral for {0}")]
    NonIntegralCoroot(RootVector),
    #[error("unknown simple reflection {0:?}")]
    UnknownGenerator(char),
}

fn rat(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

/// A vector with rational coefficients in the simple-root basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub c1: Rational64,
    pub c6: Rational64,
}

impl RootVector {
    pub const fn new(c1: Rational64, c6: Rational64) -> Self {
        Self { c1, c6 }
    }

    pub fn from_ints(c1: i64, c6: i64) -> Self {
        Self::new(rat(c1), rat(c6))
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c6.is_zero()
    }

    /// Index `i` in `1..=6` if this is the positive root `βᵢ`.
    pub fn positive_index(&self) -> Option<usize> {
        PositiveRoot::ALL
            .iter()
            .find(|r| r.vector() == *self)
            .map(|r| r.index())
    }

    pub fn is_positive_root(&self) -> bool {
        self.positive_index().is_some()
    }

    pub fn is_root(&self) -> bool {
        self.is_positive_root() || (-*self).is_positive_root()
    }

    fn as_affine(&self) -> [Affine; 2] {
        [Affine::constant(self.c1), Affine::constant(self.c6)]
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c1, self.c6)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.positive_index() {
            Some(i) => write!(f, "beta{i}"),
            None => match (-*self).positive_index() {
                Some(i) => write!(f, "-beta{i}"),
                None => write!(f, "{}·beta1 + {}·beta6", self.c1, self.c6),
            },
        }
    }
}

impl Add for RootVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.c1 + o.c1, self.c6 + o.c6)
    }
}

impl Sub for RootVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.c1 - o.c1, self.c6 - o.c6)
    }
}

impl Neg for RootVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.c1, -self.c6)
    }
}

impl Mul<RootVector> for Rational64 {
    type Output = RootVector;
    fn mul(self, v: RootVector) -> RootVector {
        RootVector::new(self * v.c1, self * v.c6)
    }
}

/// The six positive roots, labelled as `β₁ … β₆`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PositiveRoot {
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
}

impl PositiveRoot {
    pub const ALL: [PositiveRoot; 6] = [
        PositiveRoot::B1,
        PositiveRoot::B2,
        PositiveRoot::B3,
        PositiveRoot::B4,
        PositiveRoot::B5,
        PositiveRoot::B6,
    ];

    /// Roots of the unipotent radical `N` of the parabolic generated by `β₁`.
    pub const UNIPOTENT: [PositiveRoot; 5] = [
        PositiveRoot::B2,
        PositiveRoot::B3,
        PositiveRoot::B4,
        PositiveRoot::B5,
        PositiveRoot::B6,
    ];

    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i.checked_sub(1)?).copied()
    }

    pub fn vector(self) -> RootVector {
        let (a, b) = match self {
            PositiveRoot::B1 => (1, 0),
            PositiveRoot::B2 => (1, 1),
            PositiveRoot::B3 => (2, 3),
            PositiveRoot::B4 => (1, 2),
            PositiveRoot::B5 => (1, 3),
            PositiveRoot::B6 => (0, 1),
        };
        RootVector::from_ints(a, b)
    }

    pub fn is_long(self) -> bool {
        matches!(self, PositiveRoot::B1 | PositiveRoot::B3 | PositiveRoot::B5)
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "beta{}", self.index())
    }
}

pub fn beta(i: usize) -> RootVector {
    PositiveRoot::from_index(i)
        .unwrap_or_else(|| panic!("no positive root beta{i}"))
        .vector()
}

/// An affine form `c + r_coeff·r + s_coeff·s` with rational coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Affine {
    pub c: Rational64,
    pub r: Rational64,
    pub s: Rational64,
}

impl Affine {
    pub const fn new(c: Rational64, r: Rational64, s: Rational64) -> Self {
        Self { c, r, s }
    }

    pub fn constant(c: Rational64) -> Self {
        Self::new(c, rat(0), rat(0))
    }

    pub fn from_ints(c: i64, r: i64, s: i64) -> Self {
        Self::new(rat(c), rat(r), rat(s))
    }

    pub fn is_constant(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    pub fn eval(&self, r: Rational64, s: Rational64) -> Rational64 {
        self.c + self.r * r + self.s * s
    }

    pub fn eval_f64(&self, r: f64, s: f64) -> f64 {
        to_f64(self.c) + to_f64(self.r) * r + to_f64(self.s) * s
    }

    pub fn eval_complex(&self, r: f64, s: Complex64) -> Complex64 {
        Complex64::new(to_f64(self.c) + to_f64(self.r) * r, 0.0) + s * to_f64(self.s)
    }
}

fn to_f64(x: Rational64) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

impl Add for Affine {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.c + o.c, self.r + o.r, self.s + o.s)
    }
}

impl Sub for Affine {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.c - o.c, self.r - o.r, self.s - o.s)
    }
}

impl Neg for Affine {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.c, -self.r, -self.s)
    }
}

impl Mul<Affine> for Rational64 {
    type Output = Affine;
    fn mul(self, a: Affine) -> Affine {
        Affine::new(self * a.c, self * a.r, self * a.s)
    }
}

impl fmt::Debug for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Affine {
    /// Renders e.g. `s-3r`, `2r`, `5/2`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coef, sym) in [(self.s, "s"), (self.r, "r"), (self.c, "")] {
            if coef.is_zero() {
                continue;
            }
            let neg = coef < rat(0);
            let mag = if neg { -coef } else { coef };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            if sym.is_empty() || mag != rat(1) {
                out.push_str(&mag.to_string());
            }
            out.push_str(sym);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// A weight `a3·β₃ + a4·β₄` whose coefficients may depend affinely on `r, s`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub a3: Affine,
    pub a4: Affine,
}

impl WeightVector {
    pub fn new(a3: Affine, a4: Affine) -> Self {
        Self { a3, a4 }
    }

    /// The symbolic parameter `Λ(r, s) = 2r·β₃ + (s − 3r)·β₄`.
    pub fn lambda() -> Self {
        Self::new(Affine::from_ints(0, 2, 0), Affine::from_ints(0, -3, 1))
    }

    /// `Λ` at concrete rational `(r, s)`.
    pub fn lambda_at(r: Rational64, s: Rational64) -> Self {
        let l = Self::lambda();
        Self::new(
            Affine::constant(l.a3.eval(r, s)),
            Affine::constant(l.a4.eval(r, s)),
        )
    }

    /// Coordinates in the `(β₁, β₆)` basis, using `β₃ = (2,3)`, `β₄ = (1,2)`.
    pub fn simple_coords(&self) -> [Affine; 2] {
        let two = rat(2);
        let three = rat(3);
        [two * self.a3 + self.a4, three * self.a3 + two * self.a4]
    }

    /// Inverse of [`simple_coords`](Self::simple_coords); the change of basis
    /// has determinant 1, so the conversion is lossless.
    pub fn from_simple_coords(c: [Affine; 2]) -> Self {
        let two = rat(2);
        let three = rat(3);
        Self::new(two * c[0] - c[1], two * c[1] - three * c[0])
    }

    pub fn from_root(v: RootVector) -> Self {
        Self::from_simple_coords(v.as_affine())
    }

    /// The root vector, when both coefficients are constants.
    pub fn to_root_vector(&self) -> Option<RootVector> {
        let [c1, c6] = self.simple_coords();
        (c1.is_constant() && c6.is_constant()).then(|| RootVector::new(c1.c, c6.c))
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})beta3 + ({})beta4", self.a3, self.a4)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Anything that has coordinates in the simple-root basis.
pub trait SimpleCoords {
    fn coords(&self) -> [Affine; 2];
}

impl SimpleCoords for RootVector {
    fn coords(&self) -> [Affine; 2] {
        self.as_affine()
    }
}

impl SimpleCoords for WeightVector {
    fn coords(&self) -> [Affine; 2] {
        self.simple_coords()
    }
}

const GRAM: [[i64; 2]; 2] = [[6, -3], [-3, 2]];

/// The invariant inner product on the root lattice.
pub fn gram(u: &RootVector, v: &RootVector) -> Rational64 {
    let a = [u.c1, u.c6];
    let b = [v.c1, v.c6];
    let mut acc = rat(0);
    for i in 0..2 {
        for j in 0..2 {
            acc += a[i] * b[j] * rat(GRAM[i][j]);
        }
    }
    acc
}

fn gram_affine(u: &[Affine; 2], v: &RootVector) -> Affine {
    let b = [v.c1, v.c6];
    let mut acc = Affine::default();
    for (i, ui) in u.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            acc = acc + (*bj * rat(GRAM[i][j])) * *ui;
        }
    }
    acc
}

/// Coroot pairing `⟨λ, α^∨⟩ = 2(λ, α)/(α, α)`.
pub fn pairing<V: SimpleCoords>(lambda: &V, alpha: &RootVector) -> Result<Affine, G2Error> {
    if alpha.is_zero() {
        return Err(G2Error::ZeroRoot);
    }
    let norm = gram(alpha, alpha);
    Ok((rat(2) / norm) * gram_affine(&lambda.coords(), alpha))
}

/// Simple reflection `v ↦ v − ⟨v, α^∨⟩α`.
pub fn reflect(alpha: &RootVector, v: &WeightVector) -> Result<WeightVector, G2Error> {
    let p = pairing(v, alpha)?;
    let [c1, c6] = v.simple_coords();
    Ok(WeightVector::from_simple_coords([
        c1 - alpha.c1 * p,
        c6 - alpha.c6 * p,
    ]))
}

pub fn reflect_root(alpha: &RootVector, v: &RootVector) -> Result<RootVector, G2Error> {
    let w = reflect(alpha, &WeightVector::from_root(*v))?;
    Ok(w.to_root_vector().expect("constant input reflects to constant output"))
}

/// `ρ_P`: half the sum of the roots of the unipotent radical.
pub fn rho_p() -> WeightVector {
    let sum = PositiveRoot::UNIPOTENT
        .iter()
        .fold(RootVector::from_ints(0, 0), |acc, r| acc + r.vector());
    WeightVector::from_root(Rational64::new(1, 2) * sum)
}

/// Coefficients `(c1, c6)` with `β^∨ = c1·β₁^∨ + c6·β₆^∨`.
pub fn coroot_decomposition(beta: &RootVector) -> Result<(i64, i64), G2Error> {
    if !beta.is_root() {
        return Err(G2Error::NotARoot(*beta));
    }
    let norm = gram(beta, beta);
    let c1 = beta.c1 * gram(&self::beta(1), &self::beta(1)) / norm;
    let c6 = beta.c6 * gram(&self::beta(6), &self::beta(6)) / norm;
    if !c1.is_integer() || !c6.is_integer() {
        return Err(G2Error::NonIntegralCoroot(*beta));
    }
    Ok((c1.to_integer(), c6.to_integer()))
}

/// Generator of the Weyl group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimpleReflection {
    Rho1,
    Rho6,
}

impl SimpleReflection {
    fn matrix(self) -> Mat2 {
        match self {
            // v - <v, β1^∨> β1 with <v, β1^∨> = 2c1 - c6
            SimpleReflection::Rho1 => [[-1, 1], [0, 1]],
            // v - <v, β6^∨> β6 with <v, β6^∨> = -3c1 + 2c6
            SimpleReflection::Rho6 => [[1, 0], [3, -1]],
        }
    }

    fn label(self) -> char {
        match self {
            SimpleReflection::Rho1 => '1',
            SimpleReflection::Rho6 => '6',
        }
    }
}

type Mat2 = [[i64; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

const IDENTITY: Mat2 = [[1, 0], [0, 1]];

/// A Weyl group element. Equality and hashing use the matrix only; the
/// word is kept for display.
#[derive(Clone, Debug)]
pub struct WeylElement {
    word: Vec<SimpleReflection>,
    matrix: Mat2,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WeylElement {
    pub fn identity() -> Self {
        Self {
            word: Vec::new(),
            matrix: IDENTITY,
        }
    }

    /// Product of the given reflections, leftmost applied last.
    pub fn from_word(word: &[SimpleReflection]) -> Self {
        let matrix = word
            .iter()
            .fold(IDENTITY, |acc, g| mat_mul(&acc, &g.matrix()));
        Self {
            word: word.to_vec(),
            matrix,
        }
    }

    /// Parses a word such as `"61616"` (digits `1` and `6`, optionally with
    /// `rho`/`ρ` prefixes and separators).
    pub fn parse(word: &str) -> Result<Self, G2Error> {
        let mut gens = Vec::new();
        let cleaned = word.replace("rho", "").replace('ρ', "");
        for ch in cleaned.chars() {
            match ch {
                '1' => gens.push(SimpleReflection::Rho1),
                '6' => gens.push(SimpleReflection::Rho6),
                ' ' | '_' | '-' | '*' | '·' => {}
                other => return Err(G2Error::UnknownGenerator(other)),
            }
        }
        Ok(Self::from_word(&gens))
    }

    /// `w = ρ₆ρ₁ρ₆ρ₁ρ₆`, the element whose intertwining operator produces
    /// the symmetric-cube constant term.
    pub fn long_intertwining() -> Self {
        use SimpleReflection::*;
        Self::from_word(&[Rho6, Rho1, Rho6, Rho1, Rho6])
    }

    pub fn word(&self) -> &[SimpleReflection] {
        &self.word
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "1".into();
        }
        self.word
            .iter()
            .map(|g| format!("rho{}", g.label()))
            .collect::<Vec<_>>()
            .join("")
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.matrix
    }

    pub fn compose(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Self {
            word,
            matrix: mat_mul(&self.matrix, &other.matrix),
        }
    }

    pub fn inverse(&self) -> Self {
        let word: Vec<_> = self.word.iter().rev().copied().collect();
        let [[a, b], [c, d]] = self.matrix;
        let det = a * d - b * c;
        // det = ±1 for Weyl group elements
        Self {
            word,
            matrix: [[d * det, -b * det], [-c * det, a * det]],
        }
    }

    pub fn apply(&self, v: &RootVector) -> RootVector {
        let m = self.matrix;
        RootVector::new(
            rat(m[0][0]) * v.c1 + rat(m[0][1]) * v.c6,
            rat(m[1][0]) * v.c1 + rat(m[1][1]) * v.c6,
        )
    }

    pub fn apply_weight(&self, v: &WeightVector) -> WeightVector {
        let m = self.matrix;
        let [c1, c6] = v.simple_coords();
        WeightVector::from_simple_coords([
            rat(m[0][0]) * c1 + rat(m[0][1]) * c6,
            rat(m[1][0]) * c1 + rat(m[1][1]) * c6,
        ])
    }
}

/// All twelve elements, each with a shortest word, ordered by BFS from the
/// identity (so by length, `ρ₁` before `ρ₆` at each step).
pub fn weyl_group() -> Vec<WeylElement> {
    let gens = [SimpleReflection::Rho1, SimpleReflection::Rho6];
    let mut seen: HashMap<Mat2, ()> = HashMap::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([WeylElement::identity()]);
    seen.insert(IDENTITY, ());
    while let Some(w) = queue.pop_front() {
        for g in gens {
            let next = w.compose(&WeylElement::from_word(&[g]));
            if seen.insert(next.matrix, ()).is_none() {
                queue.push_back(next);
            }
        }
        out.push(w);
    }
    out
}

/// Length of a shortest word representing `w`.
pub fn length(w: &WeylElement) -> usize {
    weyl_group()
        .into_iter()
        .find(|x| x == w)
        .map(|x| x.word.len())
        .expect("element of the Weyl group")
}

/// `{α > 0 : w⁻¹α < 0}`, the roots of `N_w⁻`.
pub fn inverted_roots(w: &WeylElement) -> BTreeSet<PositiveRoot> {
    let inv = w.inverse();
    PositiveRoot::ALL
        .iter()
        .copied()
        .filter(|a| (-inv.apply(&a.vector())).is_positive_root())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn gram_values() {
        assert_eq!(gram(&beta(1), &beta(1)), rat(6));
        assert_eq!(gram(&beta(6), &beta(6)), rat(2));
        assert_eq!(gram(&beta(3), &beta(6)), rat(0));
        for root in PositiveRoot::ALL {
            let expected = if root.is_long() { 6 } else { 2 };
            assert_eq!(gram(&root.vector(), &root.vector()), rat(expected), "{root}");
        }
    }

    #[test]
    fn self_pairing_is_two() {
        for root in PositiveRoot::ALL {
            let v = root.vector();
            assert_eq!(pairing(&v, &v).unwrap(), Affine::from_ints(2, 0, 0));
            assert_eq!(pairing(&(-v), &v).unwrap(), Affine::from_ints(-2, 0, 0));
        }
    }

    #[test]
    fn zero_root_rejected() {
        let z = RootVector::from_ints(0, 0);
        assert_eq!(pairing(&beta(1), &z), Err(G2Error::ZeroRoot));
    }

    #[test]
    fn lambda_pairings() {
        let l = WeightVector::lambda();
        let table = [
            (1, "2r"),
            (2, "s+3r"),
            (3, "s+r"),
            (4, "2s"),
            (5, "s-r"),
            (6, "s-3r"),
        ];
        for (i, expected) in table {
            assert_eq!(pairing(&l, &beta(i)).unwrap().to_string(), expected, "beta{i}");
        }
    }

    #[test]
    fn reflections() {
        let l = WeightVector::lambda();
        let refl = reflect(&beta(6), &l).unwrap();
        assert_eq!(refl.a3, Affine::from_ints(0, -1, 1));
        assert_eq!(refl.a4, Affine::from_ints(0, 3, -1));
        assert_eq!(reflect_root(&beta(1), &beta(1)).unwrap(), -beta(1));
        assert_eq!(reflect_root(&beta(6), &beta(1)).unwrap(), beta(5));
    }

    #[test]
    fn rho_p_is_five_halves_beta4() {
        let rho = rho_p();
        assert_eq!(rho.a3, Affine::default());
        assert_eq!(rho.a4, Affine::constant(r(5, 2)));
        assert_eq!(rho.to_root_vector().unwrap(), RootVector::new(r(5, 2), rat(5)));
        assert_eq!(pairing(&rho, &beta(1)).unwrap(), Affine::default());
    }

    #[test]
    fn coroots() {
        assert_eq!(coroot_decomposition(&beta(1)), Ok((1, 0)));
        assert_eq!(coroot_decomposition(&beta(2)), Ok((3, 1)));
        assert_eq!(coroot_decomposition(&beta(3)), Ok((2, 1)));
        assert_eq!(coroot_decomposition(&beta(4)), Ok((3, 2)));
        assert_eq!(coroot_decomposition(&beta(5)), Ok((1, 1)));
        assert_eq!(coroot_decomposition(&beta(6)), Ok((0, 1)));
        let bogus = RootVector::from_ints(2, 1);
        assert_eq!(coroot_decomposition(&bogus), Err(G2Error::NotARoot(bogus)));
    }

    #[test]
    fn weyl_group_has_twelve_elements() {
        let g = weyl_group();
        assert_eq!(g.len(), 12);
        assert!(g.contains(&WeylElement::identity()));
        let a = WeylElement::parse("61616").unwrap();
        let b = WeylElement::parse("16161").unwrap();
        assert_ne!(a, b);
        assert_eq!(WeylElement::parse("11").unwrap(), WeylElement::identity());
        assert_eq!(WeylElement::parse("66").unwrap(), WeylElement::identity());
        // w·ρ1 = ρ1·w is the longest element, acting as -1
        let w = WeylElement::long_intertwining();
        let rho1 = WeylElement::parse("1").unwrap();
        assert_eq!(w.compose(&rho1), rho1.compose(&w));
        assert_eq!(w.compose(&rho1).matrix(), [[-1, 0], [0, -1]]);
    }

    #[test]
    fn inverted_root_sets() {
        assert!(inverted_roots(&WeylElement::identity()).is_empty());
        assert_eq!(
            inverted_roots(&WeylElement::parse("6").unwrap()),
            BTreeSet::from([PositiveRoot::B6])
        );
        assert_eq!(
            inverted_roots(&WeylElement::long_intertwining()),
            PositiveRoot::UNIPOTENT.into_iter().collect()
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!(
            WeylElement::parse("6x1"),
            Err(G2Error::UnknownGenerator('x'))
        );
        assert_eq!(
            WeylElement::parse("rho6rho1").unwrap(),
            WeylElement::parse("61").unwrap()
        );
    }

    #[test]
    fn affine_display() {
        assert_eq!(Affine::from_ints(0, -3, 1).to_string(), "s-3r");
        assert_eq!(Affine::constant(r(5, 2)).to_string(), "5/2");
        assert_eq!(Affine::from_ints(0, 0, 0).to_string(), "0");
        assert_eq!(Affine::from_ints(-1, 0, 2).to_string(), "2s-1");
        assert_eq!(Affine::from_ints(0, -1, 0).to_string(), "-r");
    }
}
