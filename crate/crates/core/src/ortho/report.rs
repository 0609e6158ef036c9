use std::fmt;

use serde::Serialize;

use super::spectral::{generalized_eigenspace, ideal_i_lambda, rational_spectrum, Spectrum};
use super::{canonicalize, fitting, is_lie_orthogonal, restrict, Operator};
use crate::algebra::{unit_vector, LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

/// A pair of vectors showing where a check breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail { witness: Witness },
    Inapplicable { reason: String },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    fn fail(x: Vec<Rational>, y: Vec<Rational>, detail: impl Into<String>) -> Self {
        Verdict::Fail {
            witness: Witness {
                x,
                y,
                detail: detail.into(),
            },
        }
    }

    fn inapplicable(reason: impl Into<String>) -> Self {
        Verdict::Inapplicable { reason: reason.into() }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail { witness } => write!(
                f,
                "FAIL: {} (x = {}, y = {})",
                witness.detail,
                vector_string(&witness.x),
                vector_string(&witness.y)
            ),
            Verdict::Inapplicable { reason } => write!(f, "n/a ({reason})"),
        }
    }
}

fn vector_string(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// `[L_λ, L_μ] = 0` for one pair of rational eigenvalues with `λμ ≠ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenPairCheck {
    pub lambda: Rational,
    pub mu: Rational,
    pub verdict: Verdict,
}

/// Checks on `I_λ` for one nonzero rational eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealCheck {
    pub lambda: Rational,
    pub dim: usize,
    pub deficit: usize,
    pub is_ideal: Verdict,
    /// Solvability degree at most two, for `λ ≠ ±1`.
    pub solvable_degree_le_2: Verdict,
}

/// A user-supplied ideal `I` with centerless `L/I` must be `J`-invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientIdealCheck {
    pub ideal: Subspace,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismReport {
    pub is_automorphism: bool,
    /// `L' ⊆ ker(J - Id)`
    pub kernel_contains_derived: Verdict,
    /// `[im(J - Id), L'] = 0`
    pub image_commutes_with_derived: Verdict,
    /// `im(J - Id) ⊆ R`
    pub image_in_radical: Verdict,
    /// `I_μ` nilpotent of degree at most two for every rational `μ ≠ 1`.
    pub eigen_ideals_nilpotent: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub spectrum: Spectrum,
    /// `L0 ⊆ Z`
    pub zero_eigenspace_in_center: Verdict,
    /// `J(Z) ⊆ Z`
    pub center_invariant: Verdict,
    /// `J(R) ⊆ R`
    pub radical_invariant: Verdict,
    /// Every term of the ascending central series is `J`-invariant.
    pub ascending_series_invariant: Verdict,
    pub eigenspace_commutation: Vec<EigenPairCheck>,
    pub ideals: Vec<IdealCheck>,
    /// `L = Z + Σ I_λ`; needs the full spectrum.
    pub ideals_cover: Verdict,
    /// No eigenvalue `±1` forces solvability degree at most two.
    pub solvability_bound: Verdict,
    /// `J² = Id` on a declared semisimple algebra.
    pub semisimple_annihilation: Verdict,
    pub quotient_ideals: Vec<QuotientIdealCheck>,
    pub automorphism: AutomorphismReport,
}

impl InvarianceReport {
    /// Every check as `(name, verdict)`, in a fixed order.
    pub fn checks(&self) -> Vec<(String, &Verdict)> {
        let mut out: Vec<(String, &Verdict)> = vec![
            ("zero eigenspace in center".into(), &self.zero_eigenspace_in_center),
            ("center invariant".into(), &self.center_invariant),
            ("radical invariant".into(), &self.radical_invariant),
            (
                "ascending central series invariant".into(),
                &self.ascending_series_invariant,
            ),
        ];
        for p in &self.eigenspace_commutation {
            out.push((format!("[L_{}, L_{}] = 0", p.lambda, p.mu), &p.verdict));
        }
        for c in &self.ideals {
            out.push((format!("I_{} is an ideal", c.lambda), &c.is_ideal));
            out.push((
                format!("I_{} solvable of degree <= 2", c.lambda),
                &c.solvable_degree_le_2,
            ));
        }
        out.push(("ideals I_lambda cover L".into(), &self.ideals_cover));
        out.push((
            "solvability bound without eigenvalues +-1".into(),
            &self.solvability_bound,
        ));
        out.push(("J^2 = Id on semisimple algebra".into(), &self.semisimple_annihilation));
        for (k, q) in self.quotient_ideals.iter().enumerate() {
            out.push((
                format!("ideal #{} with centerless quotient invariant", k + 1),
                &q.verdict,
            ));
        }
        let a = &self.automorphism;
        out.push(("automorphism: L' in ker(J - Id)".into(), &a.kernel_contains_derived));
        out.push((
            "automorphism: [im(J - Id), L'] = 0".into(),
            &a.image_commutes_with_derived,
        ));
        out.push(("automorphism: im(J - Id) in radical".into(), &a.image_in_radical));
        out.push((
            "automorphism: I_mu nilpotent of degree <= 2".into(),
            &a.eigen_ideals_nilpotent,
        ));
        out
    }

    pub fn has_failures(&self) -> bool {
        self.checks().iter().any(|(_, v)| v.is_fail())
    }
}

impl fmt::Display for InvarianceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ev: Vec<String> = self
            .spectrum
            .eigenvalues
            .iter()
            .map(|(l, m)| format!("{l} (x{m})"))
            .collect();
        writeln!(
            f,
            "rational spectrum: [{}]{}",
            ev.join(", "),
            if self.spectrum.splits { "" } else { " (does not split)" }
        )?;
        let checks = self.checks();
        let width = checks.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
        for (name, v) in checks {
            writeln!(f, "  {name:<width$}  {v}")?;
        }
        Ok(())
    }
}

fn invariance(s: &Subspace, j: &Matrix, what: &str) -> Verdict {
    match s.invariance_witness(j) {
        None => Verdict::Pass,
        Some(x) => {
            let y = j.mul_vec(&x).expect("square");
            Verdict::fail(x, y, format!("J maps a vector of {what} outside it"))
        }
    }
}

fn first_nonzero_bracket(l: &LieAlgebra, a: &Subspace, b: &Subspace) -> Option<(Vec<Rational>, Vec<Rational>)> {
    for x in a.basis_vectors() {
        for y in b.basis_vectors() {
            if !l.bracket(&x, &y).expect("ambient").iter().all(Rational::is_zero) {
                return Some((x, y));
            }
        }
    }
    None
}

/// First `(x, e_i)` with `x` a basis vector of `s` and `[x, e_i] ≠ 0`.
fn first_noncentral(l: &LieAlgebra, s: &Subspace) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let n = l.dim();
    for x in s.basis_vectors() {
        for i in 0..n {
            let e = unit_vector(n, i);
            if !l.bracket(&x, &e).expect("ambient").iter().all(Rational::is_zero) {
                return Some((x, e));
            }
        }
    }
    None
}

fn solvability_verdict(l: &LieAlgebra, s: &Subspace, bound: usize, what: &str) -> Verdict {
    let sub = match l.subalgebra(s) {
        Ok(a) => a,
        Err(_) => return Verdict::inapplicable(format!("{what} is not a subalgebra")),
    };
    match sub.solvability_degree() {
        Some(d) if d <= bound => Verdict::Pass,
        _ => {
            // a nonzero bracket inside the second derived term
            let series = l.derived_series_of(s);
            let d2 = series.get(2).or(series.last()).expect("nonempty");
            let (x, y) = first_nonzero_bracket(l, d2, d2).unwrap_or_default();
            Verdict::fail(x, y, format!("{what} has solvability degree above {bound}"))
        }
    }
}

/// Runs every applicable invariance check on a Lie-orthogonal operator.
/// `quotient_ideals` are extra ideals to test for invariance when their
/// quotient is centerless.
pub fn invariance_report(j: &Operator, quotient_ideals: &[Subspace]) -> Result<InvarianceReport> {
    if !is_lie_orthogonal(j) {
        return Err(Error::NotLieOrthogonal);
    }
    let l = j.algebra();
    let n = l.dim();
    let m = j.matrix();
    let z = l.center();
    let r = l.radical();
    let spectrum = rational_spectrum(j);

    let (l0, _) = fitting(j);
    let zero_eigenspace_in_center = match first_noncentral(l, &l0) {
        None => Verdict::Pass,
        Some((x, y)) => Verdict::fail(x, y, "vector of L0 does not commute with a basis vector"),
    };
    let center_invariant = invariance(&z, m, "the center");
    let radical_invariant = invariance(&r, m, "the radical");
    let ascending_series_invariant = l
        .ascending_central_series()
        .iter()
        .enumerate()
        .map(|(i, t)| invariance(t, m, &format!("Z_{}", i + 1)))
        .find(Verdict::is_fail)
        .unwrap_or(Verdict::Pass);

    let eigen: Vec<(Rational, Subspace)> = spectrum
        .eigenvalues
        .iter()
        .map(|(lam, _)| (lam.clone(), generalized_eigenspace(j, lam)))
        .collect();
    let mut eigenspace_commutation = Vec::new();
    for (a, (lam, la)) in eigen.iter().enumerate() {
        for (mu, lm) in &eigen[a..] {
            if (lam * mu).is_one() {
                continue;
            }
            let verdict = match first_nonzero_bracket(l, la, lm) {
                None => Verdict::Pass,
                Some((x, y)) => Verdict::fail(x, y, "generalized eigenvectors do not commute"),
            };
            eigenspace_commutation.push(EigenPairCheck {
                lambda: lam.clone(),
                mu: mu.clone(),
                verdict,
            });
        }
    }

    let one = Rational::one();
    let minus_one = -&one;
    let mut ideals = Vec::new();
    let mut cover = z.clone();
    for (lam, _) in &spectrum.eigenvalues {
        if lam.is_zero() {
            continue;
        }
        let il = ideal_i_lambda(j, lam)?;
        cover = cover.sum(&il.ideal)?;
        let is_ideal = match l.ideal_witness(&il.ideal) {
            None => Verdict::Pass,
            Some((x, y)) => Verdict::fail(x, y, "bracket leaves I_lambda"),
        };
        let solvable_degree_le_2 = if *lam == one || *lam == minus_one {
            Verdict::inapplicable("eigenvalue is +-1")
        } else {
            solvability_verdict(l, &il.ideal, 2, "I_lambda")
        };
        ideals.push(IdealCheck {
            lambda: lam.clone(),
            dim: il.ideal.dim(),
            deficit: il.deficit,
            is_ideal,
            solvable_degree_le_2,
        });
    }
    let ideals_cover = if !spectrum.splits {
        Verdict::inapplicable("irrational spectrum")
    } else {
        match cover.first_outside(&Subspace::full(n)) {
            None => Verdict::Pass,
            Some(x) => Verdict::fail(x.clone(), x, "basis vector outside the sum of the I_lambda"),
        }
    };

    // ±1 are rational, so their absence from the rational roots is exact
    let solvability_bound = if spectrum.contains(&one) || spectrum.contains(&minus_one) {
        Verdict::inapplicable("J has eigenvalue +-1")
    } else {
        solvability_verdict(l, &Subspace::full(n), 2, "L")
    };

    let semisimple_annihilation = match l.decomposition() {
        Some(d) if d.is_semisimple() => {
            let sq = m * m;
            match (0..n).find(|&i| !(0..n).all(|k| sq.get(k, i) == &delta(k, i))) {
                None => Verdict::Pass,
                Some(i) => Verdict::fail(unit_vector(n, i), sq.column(i), "J^2 moves a basis vector"),
            }
        }
        _ => Verdict::inapplicable("algebra not declared semisimple"),
    };

    let quotient_ideals = quotient_ideals
        .iter()
        .map(|ideal| {
            let verdict = match l.quotient(ideal) {
                Err(_) => Verdict::inapplicable("not an ideal"),
                Ok(q) if !q.algebra.center().is_zero() => Verdict::inapplicable("quotient has a center"),
                Ok(_) => invariance(ideal, m, "the ideal"),
            };
            QuotientIdealCheck {
                ideal: ideal.clone(),
                verdict,
            }
        })
        .collect();

    let automorphism = automorphism_report(j, &spectrum, &r)?;

    Ok(InvarianceReport {
        spectrum,
        zero_eigenspace_in_center,
        center_invariant,
        radical_invariant,
        ascending_series_invariant,
        eigenspace_commutation,
        ideals,
        ideals_cover,
        solvability_bound,
        semisimple_annihilation,
        quotient_ideals,
        automorphism,
    })
}

fn delta(i: usize, j: usize) -> Rational {
    if i == j {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn automorphism_report(j: &Operator, spectrum: &Spectrum, r: &Subspace) -> Result<AutomorphismReport> {
    let l = j.algebra();
    let n = l.dim();
    if !l.is_automorphism(j.matrix()) {
        let na = || Verdict::inapplicable("not an automorphism");
        return Ok(AutomorphismReport {
            is_automorphism: false,
            kernel_contains_derived: na(),
            image_commutes_with_derived: na(),
            image_in_radical: na(),
            eigen_ideals_nilpotent: na(),
        });
    }
    let d = j.matrix() - &Matrix::identity(n);
    let derived = l.derived_subalgebra();
    let kernel_contains_derived = match derived
        .basis_vectors()
        .into_iter()
        .find(|x| !d.mul_vec(x).expect("square").iter().all(Rational::is_zero))
    {
        None => Verdict::Pass,
        Some(x) => {
            let y = d.mul_vec(&x).expect("square");
            Verdict::fail(x, y, "(J - Id) does not vanish on L'")
        }
    };
    let image = Subspace::span(&d);
    let image_commutes_with_derived = match first_nonzero_bracket(l, &image, &derived) {
        None => Verdict::Pass,
        Some((x, y)) => Verdict::fail(x, y, "im(J - Id) does not commute with L'"),
    };
    let image_in_radical = match (0..n).find(|&i| !r.contains(&d.column(i))) {
        None => Verdict::Pass,
        Some(i) => Verdict::fail(unit_vector(n, i), d.column(i), "(J - Id) e_i lies outside R"),
    };
    let mut eigen_ideals_nilpotent = Verdict::Pass;
    for (mu, _) in &spectrum.eigenvalues {
        if mu.is_one() || mu.is_zero() {
            continue;
        }
        let il = ideal_i_lambda(j, mu)?;
        let sub = l.subalgebra(&il.ideal)?;
        if !matches!(sub.nilpotency_degree(), Some(k) if k <= 2) {
            let (x, y) = first_nonzero_bracket(l, &il.ideal, &il.ideal).unwrap_or_default();
            eigen_ideals_nilpotent = Verdict::fail(x, y, format!("I_{mu} is not 2-step nilpotent"));
            break;
        }
    }
    Ok(AutomorphismReport {
        is_automorphism: true,
        kernel_contains_derived,
        image_commutes_with_derived,
        image_in_radical,
        eigen_ideals_nilpotent,
    })
}

/// For `J` with eigenvalue 1 and a Levi subalgebra inside `I_1`: the
/// canonical restriction `J_1` to `I_1` satisfies `J_1 = Id + N` with `N`
/// nilpotent and `im N` inside the radical of `I_1`.
pub fn levi_unipotence_check(j: &Operator, levi: &Subspace) -> Result<Verdict> {
    if !is_lie_orthogonal(j) {
        return Err(Error::NotLieOrthogonal);
    }
    let one = Rational::one();
    if !rational_spectrum(j).contains(&one) {
        return Ok(Verdict::inapplicable("1 is not an eigenvalue"));
    }
    let i1 = ideal_i_lambda(j, &one)?.ideal;
    if !i1.contains_subspace(levi) {
        return Ok(Verdict::inapplicable("I_1 does not contain the Levi subalgebra"));
    }
    let j1 = canonicalize(&restrict(j, &i1)?);
    let d = i1.dim();
    let nmat = j1.matrix() - &Matrix::identity(d);
    let back = |v: &[Rational]| i1.basis().mul_vec(v).expect("coordinates");
    let top = nmat.pow(d as u32)?;
    if let Some(k) = (0..d).find(|&k| !top.column(k).iter().all(Rational::is_zero)) {
        return Ok(Verdict::fail(
            back(&unit_vector(d, k)),
            back(&top.column(k)),
            "J_1 - Id is not nilpotent",
        ));
    }
    let r1 = j1.algebra().radical();
    match (0..d).find(|&k| !r1.contains(&nmat.column(k))) {
        None => Ok(Verdict::Pass),
        Some(k) => Ok(Verdict::fail(
            back(&unit_vector(d, k)),
            back(&nmat.column(k)),
            "image of J_1 - Id leaves the radical of I_1",
        )),
    }
}
