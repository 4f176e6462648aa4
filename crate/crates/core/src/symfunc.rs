//! Symmetric functions over `Q(k)` (or graded scalars) in the monomial and
//! power-sum bases, with the deformed inner product
//! `⟨p_λ, p_μ⟩ = δ_{λμ} k^{l(λ)} z_λ` and the Hamiltonian `□^k`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::exact::{Coeff, Poly, Rational, RationalFunction};
use crate::partitions::{enumerate, Partition};

pub const DEFAULT_DEGREE_CAP: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "p")]
    PowerSum,
    #[serde(rename = "fix")]
    FixedPoint,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::FixedPoint => "I",
        }
    }
}

/// Sparse partition-indexed linear combination in a tagged basis.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct SymFunc<C> {
    basis: Basis,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coeff> SymFunc<C> {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, lam: Partition) -> Self {
        Self::term(basis, lam, C::one())
    }

    pub fn term(basis: Basis, lam: Partition, c: C) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lam, c);
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut f = Self::zero(basis);
        for (lam, c) in terms {
            f.add_term(lam, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, C> {
        self.terms
    }

    pub fn coeff(&self, lam: &Partition) -> C {
        self.terms.get(lam).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, lam: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lam) {
            Some(slot) => {
                let s = slot.add(&c);
                if s.is_zero() {
                    self.terms.remove(&lam);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(lam, c);
            }
        }
    }

    fn check_basis(&self, other: &Self) {
        assert_eq!(self.basis, other.basis, "mixing bases in a linear combination");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_basis(other);
        let mut out = self.clone();
        for (lam, c) in &other.terms {
            out.add_term(lam.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(C::neg)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(l, x)| (l.clone(), x.mul(c))),
        )
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self::from_terms(
            self.basis,
            self.terms.iter().map(|(l, x)| (l.clone(), x.scale(r))),
        )
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SymFunc<D> {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    pub fn try_map_coeffs<D: Coeff>(
        &self,
        f: impl Fn(&C) -> Result<D, Error>,
    ) -> Result<SymFunc<D>, Error> {
        let mut out = SymFunc::zero(self.basis);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Same coefficients, new tag. Used when the caller knows the
    /// reinterpretation is meaningful.
    pub fn retag(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn degree_component(&self, n: usize) -> Self {
        Self::from_terms(
            self.basis,
            self.terms
                .iter()
                .filter(|(l, _)| l.size() == n)
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for SymFunc<C> {
    /// Renders like `m[2] + (2/(1+k))·m[1,1]`, most dominant term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        for (i, (lam, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-', ' ']) => (true, rest.to_string()),
                _ => (false, cs),
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if body != "1" {
                if body.contains(['+', '-', '/', ' ']) {
                    write!(f, "({body})·")?;
                } else {
                    write!(f, "{body}·")?;
                }
            }
            write!(f, "{sym}{lam}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<C> {
    partition: Partition,
    coeff: C,
}

#[derive(Serialize, Deserialize)]
struct SymFuncRepr<C> {
    basis: Basis,
    terms: Vec<TermRepr<C>>,
}

impl<C: Coeff + Serialize> Serialize for SymFunc<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymFuncRepr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| TermRepr {
                    partition: l.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coeff + DeserializeOwned> Deserialize<'de> for SymFunc<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SymFuncRepr::<C>::deserialize(d)?;
        Ok(SymFunc::from_terms(
            repr.basis,
            repr.terms.into_iter().map(|t| (t.partition, t.coeff)),
        ))
    }
}

/// Terms of `p_r · m_μ` in the monomial basis.
///
/// Each `ν` arises by adding `r` to one part of `μ` or appending `r`; its
/// multiplicity is the number of part positions of `ν` that give back `μ`
/// when `r` is removed there.
pub fn power_times_monomial(r: usize, mu: &Partition) -> Vec<(Partition, u64)> {
    let mut seen: Vec<Partition> = Vec::new();
    let parts = mu.parts();
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for i in 0..parts.len() {
        if i > 0 && parts[i] == parts[i - 1] {
            continue;
        }
        let mut v = parts.to_vec();
        v[i] += r;
        candidates.push(v);
    }
    let mut v = parts.to_vec();
    v.push(r);
    candidates.push(v);

    let mut out = Vec::new();
    for c in candidates {
        let nu = Partition::from_unsorted(c);
        if seen.contains(&nu) {
            continue;
        }
        let mult = (0..nu.len())
            .filter(|&i| {
                let mut w = nu.parts().to_vec();
                if w[i] < r {
                    return false;
                }
                w[i] -= r;
                Partition::from_unsorted(w) == *mu
            })
            .count() as u64;
        seen.push(nu.clone());
        out.push((nu, mult));
    }
    out
}

/// Change-of-basis data for one degree. Partitions are in descending
/// lexicographic order; rows are sparse.
#[derive(Debug)]
pub struct Transition {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `p_λ = Σ p_in_m[λ][μ] m_μ`
    pub p_in_m: Vec<Vec<(usize, Rational)>>,
    /// `m_λ = Σ m_in_p[λ][μ] p_μ`
    pub m_in_p: Vec<Vec<(usize, Rational)>>,
}

impl Transition {
    fn build(n: usize) -> Result<Self, Error> {
        let partitions = enumerate(n);
        let index: HashMap<Partition, usize> = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let size = partitions.len();

        let mut p_in_m = Vec::with_capacity(size);
        for lam in &partitions {
            let mut cur: BTreeMap<Partition, u64> = BTreeMap::new();
            cur.insert(Partition::empty(), 1);
            for &r in lam.parts() {
                let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
                for (mu, c) in &cur {
                    for (nu, m) in power_times_monomial(r, mu) {
                        *next.entry(nu).or_insert(0) += c * m;
                    }
                }
                cur = next;
            }
            p_in_m.push(
                cur.into_iter()
                    .map(|(mu, c)| (index[&mu], Rational::from_integer(c.into())))
                    .collect::<Vec<_>>(),
            );
        }

        // p_λ involves m_λ and only strictly more dominant m_μ, i.e. earlier
        // positions; solve forward from `[n]`.
        let zero = Rational::from_integer(0.into());
        let mut m_in_p: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(size);
        for (i, row) in p_in_m.iter().enumerate() {
            let mut dense = vec![zero.clone(); size];
            dense[i] = Rational::from_integer(1.into());
            let mut diag = None;
            for (j, c) in row {
                if *j == i {
                    diag = Some(c.clone());
                    continue;
                }
                if *j > i {
                    return Err(Error::Degenerate(format!(
                        "p{} has m{} outside the triangular support",
                        partitions[i], partitions[*j]
                    )));
                }
                for (t, d) in &m_in_p[*j] {
                    dense[*t] -= c * d;
                }
            }
            let diag = diag.ok_or_else(|| Error::Degenerate("zero diagonal in p→m".into()))?;
            let inv = diag.recip();
            m_in_p.push(
                dense
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| *c != zero)
                    .map(|(t, c)| (t, c * &inv))
                    .collect(),
            );
        }

        Ok(Transition {
            partitions,
            index,
            p_in_m,
            m_in_p,
        })
    }

    pub fn position(&self, lam: &Partition) -> usize {
        self.index[lam]
    }
}

/// The ring `Λ` with a fixed degree cap and memoized per-degree
/// transition tables. Cheap to share between threads.
#[derive(Debug)]
pub struct Lambda {
    cap: usize,
    tables: Vec<OnceLock<Arc<Transition>>>,
}

impl Default for Lambda {
    fn default() -> Self {
        Lambda::new(DEFAULT_DEGREE_CAP)
    }
}

impl Lambda {
    pub fn new(cap: usize) -> Self {
        Lambda {
            cap,
            tables: (0..=cap).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn check_degree(&self, n: usize) -> Result<(), Error> {
        if n > self.cap {
            Err(Error::DegreeCap {
                degree: n,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    pub fn partitions(&self, n: usize) -> Result<Vec<Partition>, Error> {
        Ok(self.transition(n)?.partitions.clone())
    }

    pub fn transition(&self, n: usize) -> Result<Arc<Transition>, Error> {
        self.check_degree(n)?;
        if let Some(t) = self.tables[n].get() {
            return Ok(t.clone());
        }
        let built = Arc::new(Transition::build(n)?);
        Ok(self.tables[n].get_or_init(|| built).clone())
    }

    fn expect_basis<C>(f: &SymFunc<C>, basis: Basis) -> Result<(), Error> {
        if f.basis != basis {
            return Err(Error::BasisMismatch {
                expected: basis.symbol().into(),
                found: f.basis.symbol().into(),
            });
        }
        Ok(())
    }

    fn convert<C: Coeff>(
        &self,
        f: &SymFunc<C>,
        to: Basis,
        pick: impl Fn(&Transition) -> &Vec<Vec<(usize, Rational)>>,
    ) -> Result<SymFunc<C>, Error> {
        let mut acc: BTreeMap<Partition, C> = BTreeMap::new();
        for (lam, c) in &f.terms {
            let t = self.transition(lam.size())?;
            for (j, r) in &pick(&t)[t.position(lam)] {
                let v = c.scale(r);
                let key = &t.partitions[*j];
                match acc.get_mut(key) {
                    Some(slot) => *slot = slot.add(&v),
                    None => {
                        acc.insert(key.clone(), v);
                    }
                }
            }
        }
        Ok(SymFunc::from_terms(to, acc))
    }

    pub fn p_to_m<C: Coeff>(&self, f: &SymFunc<C>) -> Result<SymFunc<C>, Error> {
        Self::expect_basis(f, Basis::PowerSum)?;
        self.convert(f, Basis::Monomial, |t| &t.p_in_m)
    }

    pub fn m_to_p<C: Coeff>(&self, f: &SymFunc<C>) -> Result<SymFunc<C>, Error> {
        Self::expect_basis(f, Basis::Monomial)?;
        self.convert(f, Basis::PowerSum, |t| &t.m_in_p)
    }

    /// Power-sum form of a monomial or power-sum expansion.
    pub fn to_power_sum<C: Coeff>(&self, f: &SymFunc<C>) -> Result<SymFunc<C>, Error> {
        match f.basis {
            Basis::PowerSum => {
                for lam in f.terms.keys() {
                    self.check_degree(lam.size())?;
                }
                Ok(f.clone())
            }
            Basis::Monomial => self.m_to_p(f),
            Basis::FixedPoint => Err(Error::BasisMismatch {
                expected: "m or p".into(),
                found: "fix".into(),
            }),
        }
    }

    pub fn to_monomial<C: Coeff>(&self, f: &SymFunc<C>) -> Result<SymFunc<C>, Error> {
        match f.basis {
            Basis::Monomial => Ok(f.clone()),
            _ => self.p_to_m(f),
        }
    }

    /// Bilinear pairing `⟨p_λ, p_μ⟩ = δ_{λμ} k^{l(λ)} z_λ`.
    pub fn inner_product<C: Coeff>(&self, f: &SymFunc<C>, g: &SymFunc<C>) -> Result<C, Error> {
        let fp = self.to_power_sum(f)?;
        let gp = self.to_power_sum(g)?;
        let mut acc = C::zero();
        for (lam, a) in &fp.terms {
            if let Some(b) = gp.terms.get(lam) {
                let w = C::from_ratfunc(&power_sum_norm(lam))?;
                acc = acc.add(&a.mul(b).mul(&w));
            }
        }
        Ok(acc)
    }

    /// Product in `Λ`, returned in the power-sum basis.
    pub fn multiply<C: Coeff>(&self, f: &SymFunc<C>, g: &SymFunc<C>) -> Result<SymFunc<C>, Error> {
        let fp = self.to_power_sum(f)?;
        let gp = self.to_power_sum(g)?;
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (l1, a) in &fp.terms {
            for (l2, b) in &gp.terms {
                let mut parts = l1.parts().to_vec();
                parts.extend_from_slice(l2.parts());
                let nu = Partition::from_unsorted(parts);
                self.check_degree(nu.size())?;
                out.add_term(nu, a.mul(b));
            }
        }
        Ok(out)
    }

    /// Product in `Λ`, expressed in the basis of `f` (monomial or power sum).
    pub fn multiply_in_basis<C: Coeff>(
        &self,
        f: &SymFunc<C>,
        g: &SymFunc<C>,
    ) -> Result<SymFunc<C>, Error> {
        let prod = self.multiply(f, g)?;
        match f.basis {
            Basis::Monomial => self.p_to_m(&prod),
            _ => Ok(prod),
        }
    }

    /// The Hamiltonian
    /// `□^k = (k/2) Σ mn p_{m+n} ∂_m ∂_n + ((k-1)/2) Σ m(m-1) p_m ∂_m
    ///        + (1/2) Σ (m+n) p_m p_n ∂_{m+n}`
    /// acting on a power-sum expansion.
    pub fn box_hamiltonian<C: Coeff>(&self, f: &SymFunc<C>) -> Result<SymFunc<C>, Error> {
        Self::expect_basis(f, Basis::PowerSum)?;
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (lam, c) in &f.terms {
            self.check_degree(lam.size())?;
            for (nu, w) in box_on_power_sum(lam) {
                out.add_term(nu, c.mul(&C::from_ratfunc(&w)?));
            }
        }
        Ok(out)
    }
}

/// `k^{l(λ)} z_λ`.
pub fn power_sum_norm(lam: &Partition) -> RationalFunction {
    let mut coeffs = vec![Rational::from_integer(0.into()); lam.len() + 1];
    coeffs[lam.len()] = Rational::from_integer(lam.z_stat().into());
    RationalFunction::from_poly(Poly::from_coeffs(coeffs))
}

/// `□^k p_λ` as a list of `(ν, coefficient)` with repeats merged.
fn box_on_power_sum(lam: &Partition) -> BTreeMap<Partition, RationalFunction> {
    let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
    let mut acc_k: BTreeMap<Partition, Rational> = BTreeMap::new();
    let half = Rational::new(1.into(), 2.into());
    let int = |n: usize| Rational::from_integer(n.into());

    let remove = |parts: &[usize], vals: &[usize]| -> Vec<usize> {
        let mut v = parts.to_vec();
        for x in vals {
            let pos = v.iter().position(|p| p == x).expect("part present");
            v.remove(pos);
        }
        v
    };

    let mults = lam.multiplicities();

    // (k/2) Σ_{m,n} mn p_{m+n} ∂_m ∂_n
    for &(m, cm) in &mults {
        for &(n, cn) in &mults {
            let count = if m == n { cm * (cm - 1) } else { cm * cn };
            if count == 0 {
                continue;
            }
            let mut v = remove(lam.parts(), &[m, n]);
            v.push(m + n);
            let nu = Partition::from_unsorted(v);
            *acc_k.entry(nu).or_default() += &half * int(m * n * count);
        }
    }

    // ((k-1)/2) Σ m(m-1) p_m ∂_m is diagonal
    let diag: usize = lam.parts().iter().map(|&p| p * (p - 1)).sum();
    if diag > 0 {
        let d = &half * int(diag);
        *acc_k.entry(lam.clone()).or_default() += d.clone();
        *acc.entry(lam.clone()).or_default() -= d;
    }

    // (1/2) Σ_{m,n} (m+n) p_m p_n ∂_{m+n}
    for &(r, cr) in &mults {
        for m in 1..r {
            let mut v = remove(lam.parts(), &[r]);
            v.push(m);
            v.push(r - m);
            let nu = Partition::from_unsorted(v);
            *acc.entry(nu).or_default() += &half * int(r * cr);
        }
    }

    let mut out = BTreeMap::new();
    let keys: std::collections::BTreeSet<Partition> =
        acc.keys().chain(acc_k.keys()).cloned().collect();
    for nu in keys {
        let c0 = acc.get(&nu).cloned().unwrap_or_default();
        let c1 = acc_k.get(&nu).cloned().unwrap_or_default();
        let f = RationalFunction::from_poly(Poly::from_coeffs(vec![c0, c1]));
        if !f.is_zero() {
            out.insert(nu, f);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn rf(a: i64, b: i64) -> RationalFunction {
        RationalFunction::linear(a, b)
    }

    fn half() -> Rational {
        Rational::new(1.into(), 2.into())
    }

    fn ps(terms: &[(&[usize], RationalFunction)]) -> SymFunc<RationalFunction> {
        SymFunc::from_terms(Basis::PowerSum, terms.iter().map(|(l, c)| (p(l), c.clone())))
    }

    fn ms(terms: &[(&[usize], RationalFunction)]) -> SymFunc<RationalFunction> {
        SymFunc::from_terms(Basis::Monomial, terms.iter().map(|(l, c)| (p(l), c.clone())))
    }

    #[test]
    fn p_to_m_examples() {
        let ring = Lambda::default();
        let one = RationalFunction::one();
        assert_eq!(ring.p_to_m(&ps(&[(&[1], one.clone())])).unwrap(), ms(&[(&[1], one.clone())]));
        assert_eq!(
            ring.p_to_m(&ps(&[(&[1, 1], one.clone())])).unwrap(),
            ms(&[(&[2], one.clone()), (&[1, 1], rf(2, 0))])
        );
        assert_eq!(
            ring.p_to_m(&ps(&[(&[2, 1], one.clone())])).unwrap(),
            ms(&[(&[3], one.clone()), (&[2, 1], one.clone())])
        );
    }

    #[test]
    fn m_to_p_examples() {
        let ring = Lambda::default();
        let one = RationalFunction::one();
        assert_eq!(ring.m_to_p(&ms(&[(&[2], one.clone())])).unwrap(), ps(&[(&[2], one.clone())]));
        let h = RationalFunction::constant(half());
        assert_eq!(
            ring.m_to_p(&ms(&[(&[1, 1], one)])).unwrap(),
            ps(&[(&[1, 1], h.clone()), (&[2], h.neg())])
        );
    }

    #[test]
    fn basis_guard() {
        let ring = Lambda::default();
        let f = ms(&[(&[1], RationalFunction::one())]);
        assert!(matches!(ring.p_to_m(&f), Err(Error::BasisMismatch { .. })));
        let big = ps(&[(&[11], RationalFunction::one())]);
        assert!(matches!(ring.p_to_m(&big), Err(Error::DegreeCap { .. })));
    }

    #[test]
    fn inner_product_examples() {
        let ring = Lambda::default();
        let one = RationalFunction::one();
        let p2 = ps(&[(&[2], one.clone())]);
        let p11 = ps(&[(&[1, 1], one.clone())]);
        assert_eq!(ring.inner_product(&p2, &p2).unwrap(), rf(0, 2));
        assert!(ring.inner_product(&p2, &p11).unwrap().is_zero());
        assert_eq!(
            ring.inner_product(&p11, &p11).unwrap(),
            RationalFunction::from_poly(Poly::from_ints(&[0, 0, 2]))
        );
    }

    #[test]
    fn multiply_examples() {
        let ring = Lambda::default();
        let one = RationalFunction::one();
        let p1 = ps(&[(&[1], one.clone())]);
        assert_eq!(ring.multiply(&p1, &p1).unwrap(), ps(&[(&[1, 1], one.clone())]));
        assert_eq!(
            ring.multiply(&ps(&[(&[2], one.clone())]), &ps(&[(&[3, 1], one.clone())])).unwrap(),
            ps(&[(&[3, 2, 1], one.clone())])
        );
        let m1 = ms(&[(&[1], one.clone())]);
        assert_eq!(
            ring.multiply_in_basis(&m1, &m1).unwrap(),
            ms(&[(&[2], one), (&[1, 1], rf(2, 0))])
        );
    }

    #[test]
    fn hamiltonian_small_cases() {
        let ring = Lambda::default();
        let one = RationalFunction::one();
        assert!(ring.box_hamiltonian(&ps(&[(&[1], one.clone())])).unwrap().is_zero());
        // Oracle: p_2 = P_(2) - (2/(1+k)) P_(1,1) with eigenvalues k and -1
        // recombines to (k-1) p_2 + p_{1,1}.
        assert_eq!(
            ring.box_hamiltonian(&ps(&[(&[2], one.clone())])).unwrap(),
            ps(&[(&[2], rf(-1, 1)), (&[1, 1], one.clone())])
        );
        assert_eq!(
            ring.box_hamiltonian(&ps(&[(&[1, 1], one)])).unwrap(),
            ps(&[(&[2], rf(0, 1))])
        );
    }

    #[test]
    fn power_times_monomial_counts() {
        assert_eq!(
            power_times_monomial(1, &p(&[1])),
            vec![(p(&[2]), 1), (p(&[1, 1]), 2)]
        );
        assert_eq!(power_times_monomial(2, &p(&[])), vec![(p(&[2]), 1)]);
    }

    #[test]
    fn json_shape() {
        let f = ms(&[(&[2], RationalFunction::one())]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"basis":"m","terms":[{"partition":[2],"coeff":{"num":["1"],"den":["1"]}}]}"#
        );
        let back: SymFunc<RationalFunction> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn display_form() {
        let f = ms(&[
            (&[2], RationalFunction::one()),
            (
                &[1, 1],
                RationalFunction::new(Poly::from_int(2), Poly::from_ints(&[1, 1])).unwrap(),
            ),
        ]);
        assert_eq!(f.to_string(), "m[2] + (2/(1+k))·m[1,1]");
    }
}
