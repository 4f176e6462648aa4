//! Jack symmetric functions `P^{(k)}_λ`.
//!
//! Two independent constructions are provided: Gram–Schmidt on the monomial
//! basis with respect to the deformed inner product, and eigenvectors of the
//! Hamiltonian `□^k` found by back-substitution. Closed formulas (norm,
//! integral-form scalar, Pieri coefficients) live next to them so the test
//! suites can check one against the other.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::{Coeff, Poly, Rational, RationalFunction};
use crate::partitions::{enumerate, Partition, Square};
use crate::report::Report;
use crate::symfunc::{Basis, Lambda, SymFunc, DEFAULT_DEGREE_CAP};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JackAlgorithm {
    GramSchmidt,
    Hamiltonian,
}

/// All `P_λ` with `|λ| = degree`, in the monomial basis.
#[derive(Clone, Debug)]
pub struct JackFamily {
    pub degree: usize,
    pub algorithm: JackAlgorithm,
    /// Descending lexicographic order.
    pub partitions: Vec<Partition>,
    table: BTreeMap<Partition, SymFunc<RationalFunction>>,
}

impl JackFamily {
    pub fn get(&self, lam: &Partition) -> Option<&SymFunc<RationalFunction>> {
        self.table.get(lam)
    }

    pub fn table(&self) -> &BTreeMap<Partition, SymFunc<RationalFunction>> {
        &self.table
    }

    /// Pairs `(λ, μ)` where `m_μ` occurs in `P_λ` but `μ ≤ λ` fails in
    /// dominance order. Empty for a correct family.
    pub fn dominance_violations(&self) -> Vec<(Partition, Partition)> {
        let mut out = Vec::new();
        for (lam, f) in &self.table {
            for mu in f.terms().keys() {
                if !mu.dominated_by(lam) {
                    out.push((lam.clone(), mu.clone()));
                }
            }
        }
        out
    }
}

/// Memoized Jack families on top of a [`Lambda`] ring.
#[derive(Debug)]
pub struct Jacks {
    ring: Lambda,
    gram_schmidt: Vec<OnceLock<Arc<JackFamily>>>,
    hamiltonian: Vec<OnceLock<Arc<JackFamily>>>,
}

impl Default for Jacks {
    fn default() -> Self {
        Jacks::new(DEFAULT_DEGREE_CAP)
    }
}

impl Jacks {
    pub fn new(cap: usize) -> Self {
        Jacks {
            ring: Lambda::new(cap),
            gram_schmidt: (0..=cap).map(|_| OnceLock::new()).collect(),
            hamiltonian: (0..=cap).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn ring(&self) -> &Lambda {
        &self.ring
    }

    pub fn cap(&self) -> usize {
        self.ring.cap()
    }

    pub fn family(&self, n: usize, algorithm: JackAlgorithm) -> Result<Arc<JackFamily>, Error> {
        self.ring.check_degree(n)?;
        let slot = match algorithm {
            JackAlgorithm::GramSchmidt => &self.gram_schmidt[n],
            JackAlgorithm::Hamiltonian => &self.hamiltonian[n],
        };
        if let Some(f) = slot.get() {
            return Ok(f.clone());
        }
        let built = Arc::new(match algorithm {
            JackAlgorithm::GramSchmidt => self.build_gram_schmidt(n)?,
            JackAlgorithm::Hamiltonian => self.build_hamiltonian(n)?,
        });
        Ok(slot.get_or_init(|| built).clone())
    }

    pub fn jack_gram_schmidt(&self, n: usize) -> Result<Arc<JackFamily>, Error> {
        self.family(n, JackAlgorithm::GramSchmidt)
    }

    pub fn jack_hamiltonian(&self, n: usize) -> Result<Arc<JackFamily>, Error> {
        self.family(n, JackAlgorithm::Hamiltonian)
    }

    /// `P_λ` in the monomial basis (Gram–Schmidt family).
    pub fn jack(&self, lam: &Partition) -> Result<SymFunc<RationalFunction>, Error> {
        let fam = self.jack_gram_schmidt(lam.size())?;
        Ok(fam.get(lam).expect("family covers all partitions").clone())
    }

    /// `P_λ` in the power-sum basis.
    pub fn jack_power_sum(&self, lam: &Partition) -> Result<SymFunc<RationalFunction>, Error> {
        self.ring.m_to_p(&self.jack(lam)?)
    }

    /// `J_λ = c_λ(k) P_λ`.
    pub fn integral_form(&self, lam: &Partition) -> Result<SymFunc<RationalFunction>, Error> {
        Ok(self.jack(lam)?.scale(&integral_form_scalar(lam)))
    }

    /// `P_λ` at `k = 1`.
    pub fn schur_specialize(&self, lam: &Partition) -> Result<SymFunc<Rational>, Error> {
        let one = Rational::from_integer(1.into());
        self.jack(lam)?.try_map_coeffs(|c| c.eval(&one))
    }

    /// Coordinates of a monomial or power-sum expansion in the Jack basis.
    ///
    /// Peels off the lexicographically leading term repeatedly; works because
    /// each `P_λ` is `m_λ` plus lexicographically later terms.
    pub fn to_jack_basis<C: Coeff>(&self, f: &SymFunc<C>) -> Result<BTreeMap<Partition, C>, Error> {
        let mut rest = self.ring.to_monomial(f)?;
        let mut out = BTreeMap::new();
        while let Some((lam, c)) = rest.terms().iter().next().map(|(l, c)| (l.clone(), c.clone())) {
            let p = self.jack(&lam)?;
            let lifted = p.try_map_coeffs(|x| C::from_ratfunc(x))?;
            rest = rest.sub(&lifted.scale(&c));
            if rest.terms().contains_key(&lam) {
                return Err(Error::Degenerate(format!("leading term {lam} did not cancel")));
            }
            out.insert(lam, c);
        }
        Ok(out)
    }

    /// `p_1 · P_μ` expanded in the Jack basis by direct multiplication.
    pub fn pieri_expansion(&self, mu: &Partition) -> Result<BTreeMap<Partition, RationalFunction>, Error> {
        let p1 = SymFunc::basis_element(Basis::PowerSum, Partition::new(vec![1])?);
        let prod = self.ring.multiply(&p1, &self.jack(mu)?)?;
        self.to_jack_basis(&prod)
    }

    /// `⟨m_λ, m_μ⟩` for `λ, μ ⊢ n`, in enumeration order.
    pub fn monomial_gram(&self, n: usize) -> Result<Vec<Vec<RationalFunction>>, Error> {
        let t = self.ring.transition(n)?;
        let parts = &t.partitions;
        let size = parts.len();
        let zero = Rational::from_integer(0.into());
        let dense: Vec<Vec<Rational>> = t
            .m_in_p
            .iter()
            .map(|row| {
                let mut v = vec![zero.clone(); size];
                for (j, r) in row {
                    v[*j] = r.clone();
                }
                v
            })
            .collect();
        let mut gram = vec![vec![RationalFunction::zero(); size]; size];
        for i in 0..size {
            for j in i..size {
                // Σ_ν a_ν b_ν z_ν k^{l(ν)}, collected by l(ν)
                let mut by_len = vec![zero.clone(); n + 1];
                for (nu, lam) in parts.iter().enumerate() {
                    let (a, b) = (&dense[i][nu], &dense[j][nu]);
                    if !num_traits::Zero::is_zero(a) && !num_traits::Zero::is_zero(b) {
                        by_len[lam.len()] += a * b * Rational::from_integer(lam.z_stat().into());
                    }
                }
                let g = RationalFunction::from_poly(Poly::from_coeffs(by_len));
                gram[j][i] = g.clone();
                gram[i][j] = g;
            }
        }
        Ok(gram)
    }

    fn build_gram_schmidt(&self, n: usize) -> Result<JackFamily, Error> {
        let parts = self.ring.partitions(n)?;
        let size = parts.len();
        let gram = self.monomial_gram(n)?;
        let zero = RationalFunction::zero();
        // monomial coefficients of P_μ, and the same divided by ⟨P_μ, P_μ⟩
        let mut coeffs: Vec<Vec<RationalFunction>> = vec![Vec::new(); size];
        let mut dual: Vec<Vec<RationalFunction>> = vec![Vec::new(); size];

        for i in (0..size).rev() {
            let mut u = vec![zero.clone(); size];
            u[i] = RationalFunction::one();
            for j in (i + 1)..size {
                // ⟨m_λ, P_μ⟩ / ⟨P_μ, P_μ⟩
                let mut c = RationalFunction::zero();
                for nu in j..size {
                    if !dual[j][nu].is_zero() && !gram[i][nu].is_zero() {
                        c = c.add(&dual[j][nu].mul(&gram[i][nu]));
                    }
                }
                if c.is_zero() {
                    continue;
                }
                for nu in j..size {
                    if !coeffs[j][nu].is_zero() {
                        u[nu] = u[nu].sub(&coeffs[j][nu].mul(&c));
                    }
                }
            }
            // ⟨P_λ, P_λ⟩ = ⟨m_λ, P_λ⟩ since P_λ - m_λ is orthogonal to P_λ
            let mut norm = RationalFunction::zero();
            for nu in i..size {
                if !u[nu].is_zero() {
                    norm = norm.add(&u[nu].mul(&gram[i][nu]));
                }
            }
            if norm.is_zero() {
                return Err(Error::Degenerate(format!("⟨P{0}, P{0}⟩ = 0", parts[i])));
            }
            let inv = norm.recip()?;
            dual[i] = u.iter().map(|x| x.mul(&inv)).collect();
            coeffs[i] = u;
        }

        let table = parts
            .iter()
            .enumerate()
            .map(|(i, lam)| {
                let f = SymFunc::from_terms(
                    Basis::Monomial,
                    parts.iter().cloned().zip(coeffs[i].iter().cloned()),
                );
                (lam.clone(), f)
            })
            .collect();
        Ok(JackFamily {
            degree: n,
            algorithm: JackAlgorithm::GramSchmidt,
            partitions: parts,
            table,
        })
    }

    /// Matrix of `□^k` on the monomial basis of degree `n`:
    /// `h[μ][ν]` is the `m_μ` coefficient of `□ m_ν`.
    pub fn hamiltonian_matrix(&self, n: usize) -> Result<Vec<Vec<RationalFunction>>, Error> {
        let parts = self.ring.partitions(n)?;
        let size = parts.len();
        let mut h = vec![vec![RationalFunction::zero(); size]; size];
        for (col, nu) in parts.iter().enumerate() {
            let m = SymFunc::<RationalFunction>::basis_element(Basis::Monomial, nu.clone());
            let image = self
                .ring
                .p_to_m(&self.ring.box_hamiltonian(&self.ring.m_to_p(&m)?)?)?;
            for (row, mu) in parts.iter().enumerate() {
                h[row][col] = image.coeff(mu);
            }
        }
        Ok(h)
    }

    fn build_hamiltonian(&self, n: usize) -> Result<JackFamily, Error> {
        let parts = self.ring.partitions(n)?;
        let size = parts.len();
        let h = self.hamiltonian_matrix(n)?;
        let e: Vec<RationalFunction> = parts.iter().map(eigenvalue).collect();

        let mut table = BTreeMap::new();
        for i in 0..size {
            let mut u = vec![RationalFunction::zero(); size];
            u[i] = RationalFunction::one();
            for j in (i + 1)..size {
                let mut s = RationalFunction::zero();
                for t in i..j {
                    if !u[t].is_zero() && !h[j][t].is_zero() {
                        s = s.add(&h[j][t].mul(&u[t]));
                    }
                }
                if s.is_zero() {
                    continue;
                }
                let gap = e[i].sub(&e[j]);
                if gap.is_zero() {
                    return Err(Error::Degenerate(format!(
                        "e{} = e{} with nonzero coupling",
                        parts[i], parts[j]
                    )));
                }
                u[j] = s.div(&gap)?;
            }
            table.insert(
                parts[i].clone(),
                SymFunc::from_terms(Basis::Monomial, parts.iter().cloned().zip(u)),
            );
        }
        Ok(JackFamily {
            degree: n,
            algorithm: JackAlgorithm::Hamiltonian,
            partitions: parts,
            table,
        })
    }
}

/// `e_λ(k) = n(λ') k - n(λ)`, the `□^k` eigenvalue of `P_λ`.
pub fn eigenvalue(lam: &Partition) -> RationalFunction {
    RationalFunction::linear(-(lam.n_stat() as i64), lam.conjugate().n_stat() as i64)
}

/// `⟨P_λ, P_λ⟩ = Π_s (l(s) + (a(s)+1) k) / (l(s) + 1 + a(s) k)`.
pub fn norm_formula(lam: &Partition) -> RationalFunction {
    let mut num = Poly::one();
    let mut den = Poly::one();
    for s in lam.squares() {
        let (a, l) = lam.hook(s);
        num = num.mul(&Poly::from_ints(&[l as i64, a as i64 + 1]));
        den = den.mul(&Poly::from_ints(&[l as i64 + 1, a as i64]));
    }
    RationalFunction::new(num, den).expect("hook factors are nonzero")
}

/// `c_λ(k) = Π_s (l(s) + 1 + a(s) k)`, so that `J_λ = c_λ(k) P_λ`.
pub fn integral_form_scalar(lam: &Partition) -> RationalFunction {
    let mut acc = Poly::one();
    for s in lam.squares() {
        let (a, l) = lam.hook(s);
        acc = acc.mul(&Poly::from_ints(&[l as i64 + 1, a as i64]));
    }
    RationalFunction::from_poly(acc)
}

/// `b_λ(s) = (l(s) + 1 + k a(s)) / (l(s) + k (a(s) + 1))`.
pub fn b_factor(lam: &Partition, s: Square) -> Result<RationalFunction, Error> {
    let h = lam.arm_leg(s)?;
    RationalFunction::new(
        Poly::from_ints(&[h.leg as i64 + 1, h.arm as i64]),
        Poly::from_ints(&[h.leg as i64, h.arm as i64 + 1]),
    )
}

/// Coefficient of `P_λ` in `p_1 P_μ`: `Π_{s ∈ R} b_λ(s) / b_μ(s)`.
pub fn pieri_coefficient(mu: &Partition, lam: &Partition) -> Result<RationalFunction, Error> {
    let mut acc = RationalFunction::one();
    for s in Partition::pieri_r(mu, lam)? {
        acc = acc.mul(&b_factor(lam, s)?.div(&b_factor(mu, s)?)?);
    }
    Ok(acc)
}

/// Polynomial in an auxiliary variable `X` with `Q(k)` coefficients,
/// constant term first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QkPoly {
    pub coeffs: Vec<RationalFunction>,
}

impl QkPoly {
    fn trim(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        QkPoly { coeffs }
    }

    pub fn one() -> Self {
        QkPoly {
            coeffs: vec![RationalFunction::one()],
        }
    }

    /// `X + c`.
    pub fn x_plus(c: RationalFunction) -> Self {
        Self::trim(vec![c, RationalFunction::one()])
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return QkPoly { coeffs: Vec::new() };
        }
        let mut out = vec![RationalFunction::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::trim(out)
    }
}

impl fmt::Display for QkPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = if c.is_one() && i > 0 {
                String::new()
            } else {
                format!("({c})")
            };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{cs}X")?,
                _ => write!(f, "{cs}X^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Diagonal entry `c_λλ(X; k) = Π_{i=1}^N (X + N - i + k λ_i)`.
pub fn c_diag(lam: &Partition, n: usize) -> Result<QkPoly, Error> {
    if lam.len() > n {
        return Err(Error::LengthExceeds {
            partition: lam.to_string(),
            n,
        });
    }
    Ok((1..=n).fold(QkPoly::one(), |acc, i| {
        acc.mul(&QkPoly::x_plus(RationalFunction::linear(
            (n - i) as i64,
            lam.part(i) as i64,
        )))
    }))
}

fn per_degree<T: Send>(
    maxn: usize,
    f: impl Fn(usize) -> Result<T, Error> + Sync,
) -> Vec<(usize, Result<T, Error>)> {
    (0..=maxn).into_par_iter().map(|n| (n, f(n))).collect()
}

/// `jack_gram_schmidt(n) = jack_hamiltonian(n)` termwise for `n ≤ maxn`.
pub fn cross_validation_check(jacks: &Jacks, maxn: usize) -> Report {
    let mut report = Report::new("jack", maxn);
    for (n, r) in per_degree(maxn, |n| {
        Ok((jacks.jack_gram_schmidt(n)?, jacks.jack_hamiltonian(n)?))
    }) {
        match r {
            Ok((gs, ham)) => {
                for lam in &gs.partitions {
                    report.check(|| format!("two algorithms for P{lam}"), &gs.table[lam], &ham.table[lam]);
                }
            }
            Err(e) => report.error(format!("Jack families of degree {n}"), e),
        }
    }
    report
}

/// `□^k P_λ = e_λ(k) P_λ` for `|λ| ≤ maxn`.
pub fn eigen_check(jacks: &Jacks, maxn: usize) -> Report {
    let ring = jacks.ring();
    let mut report = Report::new("jack", maxn);
    for (n, r) in per_degree(maxn, |n| {
        let fam = jacks.jack_gram_schmidt(n)?;
        fam.partitions
            .iter()
            .map(|lam| {
                let p = ring.m_to_p(&fam.table[lam])?;
                Ok((lam.clone(), ring.box_hamiltonian(&p)?, p.scale(&eigenvalue(lam))))
            })
            .collect::<Result<Vec<_>, Error>>()
    }) {
        match r {
            Ok(rows) => {
                for (lam, lhs, rhs) in rows {
                    report.check(|| format!("□ P{lam}"), &lhs, &rhs);
                }
            }
            Err(e) => report.error(format!("□ on degree {n}"), e),
        }
    }
    report
}

/// Orthogonality and `⟨P_λ, P_λ⟩ = norm_formula(λ)` for `|λ| ≤ maxn`.
pub fn norm_check(jacks: &Jacks, maxn: usize) -> Report {
    let ring = jacks.ring();
    let mut report = Report::new("norm", maxn);
    for (n, r) in per_degree(maxn, |n| {
        let fam = jacks.jack_gram_schmidt(n)?;
        let ps = fam
            .partitions
            .iter()
            .map(|lam| ring.m_to_p(&fam.table[lam]))
            .collect::<Result<Vec<_>, Error>>()?;
        let mut rows = Vec::new();
        for (i, lam) in fam.partitions.iter().enumerate() {
            for (j, mu) in fam.partitions.iter().enumerate().skip(i) {
                rows.push((lam.clone(), mu.clone(), ring.inner_product(&ps[i], &ps[j])?));
            }
        }
        Ok(rows)
    }) {
        match r {
            Ok(rows) => {
                for (lam, mu, ip) in rows {
                    if lam == mu {
                        report.check(|| format!("⟨P{lam}, P{lam}⟩"), &ip, &norm_formula(&lam));
                    } else {
                        report.check(|| format!("⟨P{lam}, P{mu}⟩"), &ip, &RationalFunction::zero());
                    }
                }
            }
            Err(e) => report.error(format!("norms in degree {n}"), e),
        }
    }
    report
}

/// Direct Pieri expansion against the product formula for `|μ| < maxn`,
/// and every coefficient equal to 1 at `k = 1`.
pub fn pieri_check(jacks: &Jacks, maxn: usize) -> Report {
    let one = Rational::from_integer(1.into());
    let mus: Vec<Partition> = (0..maxn).flat_map(enumerate).collect();
    let results: Vec<_> = mus
        .into_par_iter()
        .map(|mu| {
            let r = jacks.pieri_expansion(&mu);
            (mu, r)
        })
        .collect();
    let mut report = Report::new("pieri", maxn);
    for (mu, r) in results {
        let direct = match r {
            Ok(d) => d,
            Err(e) => {
                report.error(format!("p1·P{mu}"), e);
                continue;
            }
        };
        let mut formula = BTreeMap::new();
        for (lam, _) in mu.add_box_targets() {
            match pieri_coefficient(&mu, &lam) {
                Ok(c) => {
                    formula.insert(lam, c);
                }
                Err(e) => report.error(format!("pieri_coefficient({mu}, {lam})"), e),
            }
        }
        let show = |m: &BTreeMap<Partition, RationalFunction>| {
            m.iter()
                .map(|(l, c)| format!("({c})·P{l}"))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        report.expect(
            || format!("p1·P{mu}"),
            direct == formula,
            || show(&direct),
            || show(&formula),
        );
        for (lam, c) in &formula {
            let at_one = c.eval(&one);
            report.expect(
                || format!("pieri_coefficient({mu}, {lam}) at k=1"),
                at_one.as_ref() == Ok(&one),
                || format!("{at_one:?}"),
                || "1".into(),
            );
        }
    }
    report
}

/// Support of `P_λ` in the monomial basis lies below `λ` in dominance order,
/// for both constructions.
pub fn jack_triangularity_check(jacks: &Jacks, maxn: usize) -> Report {
    let mut report = Report::new("triangularity", maxn);
    for (n, r) in per_degree(maxn, |n| {
        Ok([jacks.jack_gram_schmidt(n)?, jacks.jack_hamiltonian(n)?])
    }) {
        match r {
            Ok(fams) => {
                for fam in fams {
                    for lam in &fam.partitions {
                        let bad: Vec<String> = fam.table[lam]
                            .terms()
                            .keys()
                            .filter(|mu| !mu.dominated_by(lam))
                            .map(|mu| mu.to_string())
                            .collect();
                        report.expect(
                            || format!("support of P{lam} ({:?})", fam.algorithm),
                            bad.is_empty(),
                            || bad.join(", "),
                            || format!("partitions ≤ {lam}"),
                        );
                    }
                }
            }
            Err(e) => report.error(format!("Jack families of degree {n}"), e),
        }
    }
    report
}

/// At `k = 1` the Gram matrix of `{P_λ}` under `⟨p_λ, p_μ⟩ = δ z_λ` is the
/// identity, for `|λ| ≤ maxn`.
pub fn schur_check(jacks: &Jacks, maxn: usize) -> Report {
    let ring = jacks.ring();
    let mut report = Report::new("jack", maxn);
    for (n, r) in per_degree(maxn, |n| {
        let parts = ring.partitions(n)?;
        let ps = parts
            .iter()
            .map(|lam| ring.m_to_p(&jacks.schur_specialize(lam)?))
            .collect::<Result<Vec<_>, Error>>()?;
        let mut rows = Vec::new();
        for (i, lam) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                let mut acc = Rational::from_integer(0.into());
                for (nu, a) in ps[i].terms() {
                    if let Some(b) = ps[j].terms().get(nu) {
                        acc += a * b * Rational::from_integer(nu.z_stat().into());
                    }
                }
                let expected = Rational::from_integer(u8::from(i == j).into());
                rows.push((lam.clone(), mu.clone(), acc, expected));
            }
        }
        Ok(rows)
    }) {
        match r {
            Ok(rows) => {
                for (lam, mu, got, want) in rows {
                    report.check(|| format!("⟨s{lam}, s{mu}⟩ at k=1"), &got, &want);
                }
            }
            Err(e) => report.error(format!("Schur functions of degree {n}"), e),
        }
    }
    report
}

/// `c_diag(λ, n) ≠ c_diag(μ, n)` for distinct `λ, μ ⊢ n ≤ maxn`.
pub fn c_diag_check(maxn: usize) -> Report {
    let mut report = Report::new("jack", maxn);
    for n in 1..=maxn {
        let parts = enumerate(n);
        let polys: Vec<QkPoly> = parts
            .iter()
            .map(|lam| c_diag(lam, n).expect("l(λ) ≤ |λ|"))
            .collect();
        for i in 0..parts.len() {
            for j in (i + 1)..parts.len() {
                report.expect(
                    || format!("c_diag({}, {n}) vs c_diag({}, {n})", parts[i], parts[j]),
                    polys[i] != polys[j],
                    || polys[i].to_string(),
                    || polys[j].to_string(),
                );
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn frac(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    fn m(terms: &[(&[usize], RationalFunction)]) -> SymFunc<RationalFunction> {
        SymFunc::from_terms(Basis::Monomial, terms.iter().map(|(l, c)| (p(l), c.clone())))
    }

    #[test]
    fn gram_schmidt_small_degrees() {
        let jacks = Jacks::new(6);
        let one = RationalFunction::one();
        let f1 = jacks.jack_gram_schmidt(1).unwrap();
        assert_eq!(f1.get(&p(&[1])).unwrap(), &m(&[(&[1], one.clone())]));
        let f2 = jacks.jack_gram_schmidt(2).unwrap();
        // hand Gram–Schmidt with ⟨p2,p2⟩ = 2k, ⟨p11,p11⟩ = 2k²
        assert_eq!(
            f2.get(&p(&[2])).unwrap(),
            &m(&[(&[2], one.clone()), (&[1, 1], frac(&[2], &[1, 1]))])
        );
        assert_eq!(f2.get(&p(&[1, 1])).unwrap(), &m(&[(&[1, 1], one.clone())]));
        let f3 = jacks.jack_gram_schmidt(3).unwrap();
        assert_eq!(f3.get(&p(&[1, 1, 1])).unwrap(), &m(&[(&[1, 1, 1], one)]));
    }

    #[test]
    fn hamiltonian_degree_two() {
        let jacks = Jacks::new(6);
        let fam = jacks.jack_hamiltonian(2).unwrap();
        assert_eq!(
            fam.get(&p(&[2])).unwrap(),
            jacks.jack_gram_schmidt(2).unwrap().get(&p(&[2])).unwrap()
        );
        assert_eq!(eigenvalue(&p(&[2])), RationalFunction::k());
        assert_eq!(eigenvalue(&p(&[1, 1])), RationalFunction::from_int(-1));
    }

    #[test]
    fn norm_formula_examples() {
        assert_eq!(norm_formula(&p(&[1])), RationalFunction::k());
        assert_eq!(norm_formula(&p(&[2])), frac(&[0, 0, 2], &[1, 1]));
    }

    #[test]
    fn integral_form_examples() {
        assert_eq!(integral_form_scalar(&p(&[1])), RationalFunction::one());
        assert_eq!(integral_form_scalar(&p(&[2])), RationalFunction::linear(1, 1));
        assert_eq!(integral_form_scalar(&p(&[1, 1])), RationalFunction::from_int(2));
    }

    #[test]
    fn c_diag_examples() {
        let x_plus_k = c_diag(&p(&[1]), 1).unwrap();
        assert_eq!(x_plus_k, QkPoly::x_plus(RationalFunction::k()));
        let expected = QkPoly::x_plus(RationalFunction::linear(1, 2))
            .mul(&QkPoly::x_plus(RationalFunction::k()));
        assert_eq!(c_diag(&p(&[2, 1]), 2).unwrap(), expected);
        assert!(matches!(c_diag(&p(&[1, 1, 1]), 2), Err(Error::LengthExceeds { .. })));
    }

    #[test]
    fn pieri_coefficient_examples() {
        assert_eq!(pieri_coefficient(&p(&[1]), &p(&[2])).unwrap(), RationalFunction::one());
        assert_eq!(
            pieri_coefficient(&p(&[1]), &p(&[1, 1])).unwrap(),
            frac(&[0, 2], &[1, 1])
        );
        assert!(pieri_coefficient(&p(&[2]), &p(&[1, 1])).is_err());
    }

    #[test]
    fn pieri_direct_degree_two() {
        let jacks = Jacks::new(6);
        let exp = jacks.pieri_expansion(&p(&[1])).unwrap();
        assert_eq!(exp.len(), 2);
        assert_eq!(exp[&p(&[2])], RationalFunction::one());
        assert_eq!(exp[&p(&[1, 1])], frac(&[0, 2], &[1, 1]));
    }

    #[test]
    fn schur_examples() {
        let jacks = Jacks::new(6);
        let s2 = jacks.schur_specialize(&p(&[2])).unwrap();
        let one = Rational::from_integer(1.into());
        assert_eq!(s2.coeff(&p(&[2])), one);
        assert_eq!(s2.coeff(&p(&[1, 1])), one);
        let s11 = jacks.schur_specialize(&p(&[1, 1])).unwrap();
        assert_eq!(s11.terms().len(), 1);
    }

    #[test]
    fn small_suites_pass() {
        let jacks = Jacks::new(6);
        for r in [
            cross_validation_check(&jacks, 4),
            eigen_check(&jacks, 4),
            norm_check(&jacks, 4),
            pieri_check(&jacks, 4),
            jack_triangularity_check(&jacks, 4),
            schur_check(&jacks, 4),
            c_diag_check(4),
        ] {
            assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn degree_cap_enforced() {
        let jacks = Jacks::new(4);
        assert!(matches!(jacks.jack_gram_schmidt(5), Err(Error::DegreeCap { .. })));
    }
}
