//! The Fock space `⊕_n H^T_*(Hilb^n)` as `Λ ⊗ Q(ε1, ε2)` in the power-sum
//! basis, with colored Heisenberg operators, normal-ordered products, the
//! Virasoro generators and Lehn's cubic operator.
//!
//! Model: for `m > 0`, `P_{-m}(α) = (α/ε2) p_m` and `P_m(α) = -(α/ε1) m ∂/∂p_m`.
//! Every operator is a sum of scaled products of factors that are expanded
//! into words of uncolored modes only when applied to a graded component.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::Error;
use crate::exact::{GradedScalar, Rational, RationalFunction};
use crate::jack::{eigenvalue, Jacks};
use crate::partitions::{enumerate, Partition};
use crate::report::Report;
use crate::symfunc::{power_sum_norm, Basis, Lambda, SymFunc};

/// Power-sum expansion with equivariant coefficients.
pub type FockVector = SymFunc<GradedScalar>;

pub fn vacuum() -> FockVector {
    SymFunc::basis_element(Basis::PowerSum, Partition::empty())
}

/// `p_λ` as a Fock vector.
pub fn basis_vector(lam: &Partition) -> FockVector {
    SymFunc::basis_element(Basis::PowerSum, lam.clone())
}

/// Embeds a `Q(k)` expansion as a Fock vector in the power-sum basis.
pub fn lift(ring: &Lambda, f: &SymFunc<RationalFunction>) -> Result<FockVector, Error> {
    Ok(ring.to_power_sum(f)?.map_coeffs(GradedScalar::lift))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeisenbergMode {
    index: i64,
    color: GradedScalar,
}

impl HeisenbergMode {
    pub fn new(index: i64, color: GradedScalar) -> Result<Self, Error> {
        if index == 0 {
            return Err(Error::ZeroMode);
        }
        Ok(HeisenbergMode { index, color })
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    pub fn color(&self) -> &GradedScalar {
        &self.color
    }
}

/// `⟨α, β⟩ = -αβ/(ε1ε2)`.
pub fn color_pairing(alpha: &GradedScalar, beta: &GradedScalar) -> GradedScalar {
    alpha
        .mul(beta)
        .neg()
        .div(&GradedScalar::c2x())
        .expect("ε1ε2 is homogeneous and nonzero")
}

/// Scalar carried by a word of uncolored modes: `(1/ε2)` per creation mode
/// and `(-1/ε1)` per annihilation mode.
fn word_scalar(word: &[i64]) -> GradedScalar {
    let creations = word.iter().filter(|&&m| m < 0).count() as u32;
    let annihilations = word.len() as u32 - creations;
    let minus_inv_k = RationalFunction::k().recip().expect("k ≠ 0").neg();
    let sign = if annihilations.is_multiple_of(2) { 1 } else { -1 };
    GradedScalar::homogeneous(
        -(word.len() as i64),
        minus_inv_k.pow(creations).scale(&Rational::from_integer(sign.into())),
    )
}

/// Applies a word (rightmost mode first) of `p_m` multiplications and
/// `m ∂/∂p_m` derivations to `p_λ`.
fn word_on_basis(word: &[i64], lam: &Partition) -> Option<(i64, Partition)> {
    let mut parts = lam.parts().to_vec();
    let mut mult: i64 = 1;
    for &m in word.iter().rev() {
        if m < 0 {
            parts.push((-m) as usize);
        } else {
            let m = m as usize;
            let count = parts.iter().filter(|&&p| p == m).count();
            if count == 0 {
                return None;
            }
            mult *= (m * count) as i64;
            let pos = parts.iter().position(|&p| p == m).expect("counted");
            parts.swap_remove(pos);
        }
    }
    Some((mult, Partition::from_unsorted(parts)))
}

/// Stable reordering with creation (negative) modes to the left.
pub fn normal_order(modes: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = modes.iter().copied().filter(|&m| m < 0).collect();
    out.extend(modes.iter().copied().filter(|&m| m > 0));
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Factor {
    /// `P_m(1)`.
    Mode(i64),
    /// `L_n(1)`.
    Virasoro(i64),
    /// The operator of cup product with `c1(V)`, modes bounded by `cap`.
    Lehn { cap: usize },
}

impl Factor {
    /// Words with their full scalar coefficients, as they act on degree `d`.
    fn expand(&self, d: usize) -> Result<Vec<(GradedScalar, Vec<i64>)>, Error> {
        let mut acc: BTreeMap<Vec<i64>, GradedScalar> = BTreeMap::new();
        let mut push = |c: GradedScalar, word: Vec<i64>| {
            let v = c.mul(&word_scalar(&word));
            let slot = acc.entry(word).or_default();
            *slot = slot.add(&v);
        };
        let minus_c2 = GradedScalar::c2x().neg();
        match *self {
            Factor::Mode(m) => push(GradedScalar::one(), vec![m]),
            Factor::Virasoro(n) => {
                let half = minus_c2.scale(&Rational::new(1.into(), 2.into()));
                let bound = d as i64 + n.abs();
                for l in -bound..=bound {
                    let m = n - l;
                    if l != 0 && m != 0 {
                        push(half.clone(), normal_order(&[l, m]));
                    }
                }
            }
            Factor::Lehn { cap } => {
                if d > cap {
                    return Err(Error::OutsideTruncation {
                        degree: d,
                        valid_through: cap,
                    });
                }
                let top = d as i64;
                let cubic = minus_c2.pow(2).scale(&Rational::new((-1).into(), 6.into()));
                for m1 in -top..=top {
                    for m2 in -top..=top {
                        let m3 = -m1 - m2;
                        if m1 != 0 && m2 != 0 && m3 != 0 && m3.abs() <= top {
                            push(cubic.clone(), normal_order(&[m1, m2, m3]));
                        }
                    }
                }
                let quad = minus_c2
                    .mul(&GradedScalar::kx())
                    .scale(&Rational::new(1.into(), 4.into()));
                for m in (-top..=top).filter(|&m| m != 0) {
                    let w = Rational::from_integer((m.abs() - 1).into());
                    push(quad.scale(&w), normal_order(&[-m, m]));
                }
            }
        }
        Ok(acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (c, w))
            .collect())
    }

    fn apply(&self, v: &FockVector) -> Result<FockVector, Error> {
        let mut cache: BTreeMap<usize, Vec<(GradedScalar, Vec<i64>)>> = BTreeMap::new();
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (lam, c) in v.terms() {
            let d = lam.size();
            let words = match cache.entry(d) {
                Entry::Occupied(e) => e.into_mut(),
                Entry::Vacant(e) => e.insert(self.expand(d)?),
            };
            for (s, word) in words.iter() {
                if let Some((mult, mu)) = word_on_basis(word, lam) {
                    out.add_term(mu, c.mul(s).scale(&Rational::from_integer(BigInt::from(mult))));
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OpTerm {
    pub coeff: GradedScalar,
    /// Leftmost factor acts last.
    pub factors: Vec<Factor>,
}

/// Finite sum of scaled products of [`Factor`]s.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockOperator {
    terms: Vec<OpTerm>,
}

impl FockOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::scalar(GradedScalar::one())
    }

    pub fn scalar(c: GradedScalar) -> Self {
        Self::from_term(c, Vec::new())
    }

    fn from_term(coeff: GradedScalar, factors: Vec<Factor>) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        FockOperator {
            terms: vec![OpTerm { coeff, factors }],
        }
    }

    pub fn terms(&self) -> &[OpTerm] {
        &self.terms
    }

    /// `P_m(α)`.
    pub fn mode(mode: &HeisenbergMode) -> Self {
        Self::from_term(mode.color.clone(), vec![Factor::Mode(mode.index)])
    }

    /// `c · P_{m1}(1) ⋯ P_{mr}(1)`. Any zero index gives the zero operator.
    pub fn word(coeff: GradedScalar, modes: &[i64]) -> Self {
        if modes.contains(&0) {
            return Self::zero();
        }
        Self::from_term(coeff, modes.iter().map(|&m| Factor::Mode(m)).collect())
    }

    /// `L_n(α) = (1/2) Σ_{l+m=n} :P_l P_m:(α)`.
    pub fn virasoro(n: i64, alpha: &GradedScalar) -> Self {
        Self::from_term(alpha.clone(), vec![Factor::Virasoro(n)])
    }

    /// `-(1/6) Σ :P_{m1}P_{m2}P_{m3}:(1) + (1/4) Σ (|m|-1) :P_{-m}P_m:(K_X)`,
    /// with all `|m_i| ≤ maxdeg`. Fails on components above `maxdeg`.
    pub fn lehn_cubic(maxdeg: usize) -> Self {
        Self::from_term(GradedScalar::one(), vec![Factor::Lehn { cap: maxdeg }])
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        FockOperator { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&GradedScalar::one().neg()))
    }

    pub fn scale(&self, c: &GradedScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FockOperator {
            terms: self
                .terms
                .iter()
                .map(|t| OpTerm {
                    coeff: t.coeff.mul(c),
                    factors: t.factors.clone(),
                })
                .collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let coeff = a.coeff.mul(&b.coeff);
                if coeff.is_zero() {
                    continue;
                }
                let mut factors = a.factors.clone();
                factors.extend(b.factors.iter().cloned());
                terms.push(OpTerm { coeff, factors });
            }
        }
        FockOperator { terms }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn apply(&self, v: &FockVector) -> Result<FockVector, Error> {
        if v.basis() != Basis::PowerSum {
            return Err(Error::BasisMismatch {
                expected: "p".into(),
                found: v.basis().symbol().into(),
            });
        }
        let mut out = SymFunc::zero(Basis::PowerSum);
        for t in &self.terms {
            let mut w = v.clone();
            for f in t.factors.iter().rev() {
                if w.is_zero() {
                    break;
                }
                w = f.apply(&w)?;
            }
            out = out.add(&w.scale(&t.coeff));
        }
        Ok(out)
    }

    /// Images of the power-sum basis of degree `d`, in enumeration order.
    pub fn matrix(&self, d: usize) -> Result<Vec<(Partition, FockVector)>, Error> {
        enumerate(d)
            .into_iter()
            .map(|lam| {
                let img = self.apply(&basis_vector(&lam))?;
                Ok((lam, img))
            })
            .collect()
    }
}

pub fn heis_apply(mode: &HeisenbergMode, v: &FockVector) -> Result<FockVector, Error> {
    FockOperator::mode(mode).apply(v)
}

/// The operator of a coproduct insertion `:P_{m1} ⋯ P_{mr}:(α)`, equal to
/// `(-ε1ε2)^{r-1} α P_{m1}(1) ⋯ P_{mr}(1)` with the modes optionally
/// normal-ordered.
pub fn coproduct_insert(
    modes: &[i64],
    alpha: &GradedScalar,
    normal: bool,
) -> Result<FockOperator, Error> {
    if modes.is_empty() {
        return Err(Error::EmptyWord);
    }
    let coeff = GradedScalar::c2x()
        .neg()
        .pow(modes.len() as u32 - 1)
        .mul(alpha);
    let word = if normal {
        normal_order(modes)
    } else {
        modes.to_vec()
    };
    Ok(FockOperator::word(coeff, &word))
}

/// Bilinear pairing with `⟨p_λ, p_μ⟩ = δ_{λμ} k^{l(λ)} z_λ`.
pub fn fock_pairing(v: &FockVector, w: &FockVector) -> Result<GradedScalar, Error> {
    for f in [v, w] {
        if f.basis() != Basis::PowerSum {
            return Err(Error::BasisMismatch {
                expected: "p".into(),
                found: f.basis().symbol().into(),
            });
        }
    }
    let mut acc = GradedScalar::zero();
    for (lam, a) in v.terms() {
        if let Some(b) = w.terms().get(lam) {
            acc = acc.add(&a.mul(b).scale_rf(&power_sum_norm(lam)));
        }
    }
    Ok(acc)
}

/// All partitions of size at most `maxdeg`, smallest size first.
pub fn basis_up_to(maxdeg: usize) -> Vec<Partition> {
    (0..=maxdeg).flat_map(enumerate).collect()
}

/// Compares two linear maps on every `p_λ` with `|λ| ≤ maxdeg`.
pub fn compare_on_basis<F>(suite: &str, label: &str, maxdeg: usize, f: F) -> Report
where
    F: Fn(&FockVector) -> Result<(FockVector, FockVector), Error> + Sync,
{
    let results: Vec<_> = basis_up_to(maxdeg)
        .into_par_iter()
        .map(|lam| {
            let r = f(&basis_vector(&lam));
            (lam, r)
        })
        .collect();
    let mut report = Report::new(suite, maxdeg);
    for (lam, r) in results {
        let input = || format!("{label} on p{lam}");
        match r {
            Ok((lhs, rhs)) => report.check(input, &lhs, &rhs),
            Err(e) => report.error(input(), e),
        }
    }
    report
}

/// `[P_i(α), P_j(β)] = i δ_{i+j,0} ⟨α,β⟩ id` on all degrees `≤ maxdeg`.
pub fn commutator_check(
    i: i64,
    j: i64,
    alpha: &GradedScalar,
    beta: &GradedScalar,
    maxdeg: usize,
) -> Result<Report, Error> {
    let a = FockOperator::mode(&HeisenbergMode::new(i, alpha.clone())?);
    let b = FockOperator::mode(&HeisenbergMode::new(j, beta.clone())?);
    let lhs = a.commutator(&b);
    let central = if i + j == 0 {
        color_pairing(alpha, beta).scale(&Rational::from_integer(i.into()))
    } else {
        GradedScalar::zero()
    };
    let label = format!("[P_{i}({alpha}), P_{j}({beta})]");
    Ok(compare_on_basis("heisenberg", &label, maxdeg, |v| {
        Ok((lhs.apply(v)?, v.scale(&central)))
    }))
}

/// `[L_n(α), L_m(β)] = (n-m) L_{n+m}(αβ) - ((n³-n)/12) δ_{n+m,0} ⟨c2 α, β⟩ id`.
pub fn virasoro_check(
    n: i64,
    m: i64,
    alpha: &GradedScalar,
    beta: &GradedScalar,
    maxdeg: usize,
) -> Report {
    let lhs = FockOperator::virasoro(n, alpha).commutator(&FockOperator::virasoro(m, beta));
    let mut rhs = FockOperator::virasoro(n + m, &alpha.mul(beta))
        .scale(&int_scalar(n - m));
    if n + m == 0 {
        let c = color_pairing(&GradedScalar::c2x().mul(alpha), beta)
            .scale(&Rational::new((n * n * n - n).into(), 12.into()))
            .neg();
        rhs = rhs.add(&FockOperator::scalar(c));
    }
    let label = format!("[L_{n}({alpha}), L_{m}({beta})]");
    compare_on_basis("virasoro", &label, maxdeg, |v| Ok((lhs.apply(v)?, rhs.apply(v)?)))
}

/// `[c1(V)∪, P_n(α)] = (n/2) Σ_{l+m=n} :P_l P_m:(α) - (n(|n|-1)/2) P_n(K_X α)`
/// on all degrees `≤ maxdeg`.
pub fn lehn_commutator_check(n: i64, alpha: &GradedScalar, maxdeg: usize) -> Result<Report, Error> {
    let cubic = FockOperator::lehn_cubic(maxdeg + n.unsigned_abs() as usize);
    let p = FockOperator::mode(&HeisenbergMode::new(n, alpha.clone())?);
    let lhs = cubic.commutator(&p);
    let rhs = FockOperator::virasoro(n, alpha)
        .scale(&int_scalar(n))
        .sub(
            &FockOperator::mode(&HeisenbergMode::new(n, GradedScalar::kx().mul(alpha))?)
                .scale(&ratio_scalar(n * (n.abs() - 1), 2)),
        );
    let label = format!("[c1(V), P_{n}({alpha})]");
    Ok(compare_on_basis("lehn", &label, maxdeg, |v| Ok((lhs.apply(v)?, rhs.apply(v)?))))
}

/// Lehn's operator against `ε1 · □^k` on every `p_λ` with `|λ| ≤ maxdeg`.
pub fn lehn_hamiltonian_check(ring: &Lambda, maxdeg: usize) -> Report {
    let cubic = FockOperator::lehn_cubic(maxdeg);
    compare_on_basis("lehn", "c1(V) vs ε1·□", maxdeg, |v| {
        let rf = v.try_map_coeffs(|c| {
            c.as_homogeneous()
                .filter(|(d, _)| *d == 0)
                .map(|(_, f)| f.clone())
                .ok_or_else(|| Error::NotConstant(c.to_string()))
        })?;
        let boxed = ring
            .box_hamiltonian(&rf)?
            .map_coeffs(|f| GradedScalar::homogeneous(1, f.clone()));
        Ok((cubic.apply(v)?, boxed))
    })
}

/// Lehn's operator on lifted Jack functions against the eigenvalue
/// `-(n(λ)ε1 + n(λ')ε2)`, for `|λ| ≤ maxdeg`.
pub fn lehn_eigen_check(jacks: &Jacks, maxdeg: usize) -> Report {
    let cubic = FockOperator::lehn_cubic(maxdeg);
    let results: Vec<_> = basis_up_to(maxdeg)
        .into_par_iter()
        .map(|lam| {
            let r = (|| {
                let p = lift(jacks.ring(), &jacks.jack(&lam)?)?;
                let ev = GradedScalar::weight(-(lam.n_stat() as i64), -(lam.conjugate().n_stat() as i64));
                let via_box = GradedScalar::homogeneous(1, eigenvalue(&lam));
                Ok::<_, Error>((cubic.apply(&p)?, p.scale(&ev), ev, via_box))
            })();
            (lam, r)
        })
        .collect();
    let mut report = Report::new("lehn", maxdeg);
    for (lam, r) in results {
        match r {
            Ok((lhs, rhs, ev, via_box)) => {
                report.check(|| format!("c1(V) P{lam}"), &lhs, &rhs);
                report.check(|| format!("eigenvalue of P{lam} vs ε1·e_λ"), &ev, &via_box);
            }
            Err(e) => report.error(format!("c1(V) P{lam}"), e),
        }
    }
    report
}

/// Transpose of `P_m(α)` is `P_{-m}(α)` under [`fock_pairing`].
pub fn transpose_check(m: i64, alpha: &GradedScalar, maxdeg: usize) -> Result<Report, Error> {
    let a = FockOperator::mode(&HeisenbergMode::new(m, alpha.clone())?);
    let b = FockOperator::mode(&HeisenbergMode::new(-m, alpha.clone())?);
    let basis = basis_up_to(maxdeg);
    let mut report = Report::new("heisenberg", maxdeg);
    for lam in &basis {
        let v = basis_vector(lam);
        let av = a.apply(&v)?;
        for mu in &basis {
            let w = basis_vector(mu);
            let lhs = fock_pairing(&av, &w)?;
            let rhs = fock_pairing(&v, &b.apply(&w)?)?;
            report.check(|| format!("transpose P_{m}({alpha}) on p{lam}, p{mu}"), &lhs, &rhs);
        }
    }
    Ok(report)
}

fn int_scalar(n: i64) -> GradedScalar {
    ratio_scalar(n, 1)
}

fn ratio_scalar(p: i64, q: i64) -> GradedScalar {
    GradedScalar::one().scale(&Rational::new(p.into(), q.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn k_times(v: FockVector) -> FockVector {
        v.scale(&GradedScalar::lift(&RationalFunction::k()))
    }

    #[test]
    fn heis_examples() {
        let e2 = GradedScalar::eps2();
        let create = HeisenbergMode::new(-1, e2.clone()).unwrap();
        assert_eq!(heis_apply(&create, &vacuum()).unwrap(), basis_vector(&p(&[1])));
        let kill = HeisenbergMode::new(1, e2).unwrap();
        assert_eq!(
            heis_apply(&kill, &basis_vector(&p(&[1]))).unwrap(),
            k_times(vacuum())
        );
        let kill1 = HeisenbergMode::new(1, GradedScalar::one()).unwrap();
        assert!(heis_apply(&kill1, &basis_vector(&p(&[2]))).unwrap().is_zero());
        assert_eq!(HeisenbergMode::new(0, GradedScalar::one()), Err(Error::ZeroMode));
    }

    #[test]
    fn pairing_values() {
        let c = crate::exact::gs_constants();
        assert_eq!(color_pairing(&c.eps2, &c.eps2), GradedScalar::lift(&RationalFunction::k()));
        assert_eq!(color_pairing(&c.one, &c.c2x), GradedScalar::one().neg());
        let v = basis_vector(&p(&[1]));
        assert_eq!(fock_pairing(&v, &v).unwrap(), GradedScalar::lift(&RationalFunction::k()));
        assert!(fock_pairing(&basis_vector(&p(&[2])), &basis_vector(&p(&[1, 1])))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn commutator_examples() {
        let c = crate::exact::gs_constants();
        assert!(commutator_check(1, -1, &c.eps2, &c.eps2, 4).unwrap().passed());
        assert!(commutator_check(2, 3, &c.one, &c.one, 4).unwrap().passed());
        assert!(commutator_check(3, -3, &c.one, &c.c2x, 4).unwrap().passed());
    }

    #[test]
    fn coproduct_examples() {
        let e2 = GradedScalar::eps2();
        let single = coproduct_insert(&[-1], &e2, true).unwrap();
        assert_eq!(single.apply(&vacuum()).unwrap(), basis_vector(&p(&[1])));
        let ordered = coproduct_insert(&[1, -1], &GradedScalar::one(), true).unwrap();
        let expected = FockOperator::word(GradedScalar::c2x().neg(), &[-1, 1]);
        assert_eq!(ordered, expected);
        let shift0 = coproduct_insert(&[2, -3, 1], &GradedScalar::one(), true).unwrap();
        for (lam, img) in shift0.matrix(3).unwrap() {
            assert!(img.terms().keys().all(|mu| mu.size() == lam.size()));
        }
        assert_eq!(coproduct_insert(&[], &e2, true), Err(Error::EmptyWord));
    }

    #[test]
    fn l0_is_the_degree() {
        let l0 = FockOperator::virasoro(0, &GradedScalar::one());
        for lam in basis_up_to(4) {
            let v = basis_vector(&lam);
            let expected = v.scale_rational(&Rational::from_integer(lam.size().into()));
            assert_eq!(l0.apply(&v).unwrap(), expected);
        }
    }

    #[test]
    fn virasoro_examples() {
        let one = GradedScalar::one();
        assert!(virasoro_check(1, -1, &one, &one, 5).passed());
        assert!(virasoro_check(2, -2, &one, &GradedScalar::eps2(), 5).passed());
    }

    #[test]
    fn lehn_small() {
        let c1 = FockOperator::lehn_cubic(3);
        assert!(c1.apply(&basis_vector(&p(&[1]))).unwrap().is_zero());
        assert!(matches!(
            c1.apply(&basis_vector(&p(&[2, 2]))),
            Err(Error::OutsideTruncation { .. })
        ));
        let jacks = Jacks::new(6);
        let p2 = lift(jacks.ring(), &jacks.jack(&p(&[2])).unwrap()).unwrap();
        let expected = p2.scale(&GradedScalar::homogeneous(1, RationalFunction::k()));
        assert_eq!(c1.apply(&p2).unwrap(), expected);
        assert!(lehn_hamiltonian_check(jacks.ring(), 4).passed());
    }

    #[test]
    fn lehn_commutator_examples() {
        let c = crate::exact::gs_constants();
        assert!(lehn_commutator_check(-1, &c.eps2, 3).unwrap().passed());
        assert!(lehn_commutator_check(1, &c.one, 3).unwrap().passed());
    }

    #[test]
    fn transpose_small() {
        assert!(transpose_check(2, &GradedScalar::eps2(), 4).unwrap().passed());
    }
}
