//! Truncated integer power series and the Poincaré/Euler-characteristic identity.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::homalg::GradedAlgebra;
use crate::{Error, Result};

/// Power series known exactly through degree `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntSeries {
    coeffs: Vec<i64>,
}

impl IntSeries {
    /// Series with the given coefficients, reliable through `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        IntSeries { coeffs }
    }

    /// Polynomial `coeffs`, zero-padded (exactly) out to `order`.
    pub fn polynomial(coeffs: &[i64], order: usize) -> Self {
        let mut c = alloc::vec![0; order + 1];
        for (i, x) in coeffs.iter().enumerate().take(order + 1) {
            c[i] = *x;
        }
        IntSeries { coeffs: c }
    }

    pub fn one(order: usize) -> Self {
        Self::polynomial(&[1], order)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`; asking beyond the truncation order is an error.
    pub fn coeff(&self, n: usize) -> Result<i64> {
        self.coeffs.get(n).copied().ok_or(Error::BeyondTruncation {
            requested: n,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> IntSeries {
        IntSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn mul(&self, rhs: &IntSeries) -> Result<IntSeries> {
        let order = self.order().min(rhs.order());
        let mut out = alloc::vec![0i64; order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                let t = a.checked_mul(*b).ok_or(Error::Overflow("series product"))?;
                out[i + j] = out[i + j].checked_add(t).ok_or(Error::Overflow("series product"))?;
            }
        }
        Ok(IntSeries { coeffs: out })
    }

    /// `self / rhs`; `rhs` must have constant term ±1.
    pub fn div(&self, rhs: &IntSeries) -> Result<IntSeries> {
        let c0 = rhs.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(Error::NonUnitConstant(c0));
        }
        let order = self.order().min(rhs.order());
        let mut out = alloc::vec![0i64; order + 1];
        for n in 0..=order {
            let mut acc = self.coeffs[n];
            for k in 1..=n {
                let t = rhs.coeffs[k]
                    .checked_mul(out[n - k])
                    .ok_or(Error::Overflow("series division"))?;
                acc = acc.checked_sub(t).ok_or(Error::Overflow("series division"))?;
            }
            out[n] = acc * c0;
        }
        Ok(IntSeries { coeffs: out })
    }

    pub fn pow(&self, e: usize) -> Result<IntSeries> {
        let mut acc = IntSeries::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntSeries({self} + O(t^{}))", self.order() + 1)
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let abs = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (n, abs) {
                (0, _) => write!(f, "{abs}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{abs}t")?,
                (_, 1) => write!(f, "t^{n}")?,
                _ => write!(f, "{abs}t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `P_A(t) = Σ dim A_n t^n` through `max_degree`.
pub fn poincare(a: &GradedAlgebra, max_degree: usize) -> Result<IntSeries> {
    let coeffs = (0..=max_degree)
        .map(|n| a.component_dim(n).map(|d| d as i64))
        .collect::<Result<_>>()?;
    Ok(IntSeries::new(coeffs))
}

/// `Q_A(t) = Σ_k (dim A^!_{kN} t^{kN} - dim A^!_{kN+1} t^{kN+1})`.
pub fn q_series(a: &GradedAlgebra, max_degree: usize) -> Result<IntSeries> {
    let nn = a.relation_degree();
    let coeffs = (0..=max_degree)
        .map(|n| match n % nn {
            0 => a.dual_dim(n).map(|d| d as i64),
            1 => a.dual_dim(n).map(|d| -(d as i64)),
            _ => Ok(0),
        })
        .collect::<Result<_>>()?;
    Ok(IntSeries::new(coeffs))
}

/// `χ^(n) = Σ_k (dim A_{n-kN} dim A^!_{kN} - dim A_{n-kN-1} dim A^!_{kN+1})`.
pub fn chi_direct(a: &GradedAlgebra, max_degree: usize) -> Result<IntSeries> {
    let nn = a.relation_degree();
    let dim = |m: isize| -> Result<i64> {
        if m < 0 {
            Ok(0)
        } else {
            a.component_dim(m as usize).map(|d| d as i64)
        }
    };
    let mut coeffs = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let mut chi = 0i64;
        let mut k = 0;
        while k * nn <= n {
            let even = k * nn;
            chi += dim(n as isize - even as isize)? * a.dual_dim(even)? as i64;
            if even < n {
                chi -= dim(n as isize - even as isize - 1)? * a.dual_dim(even + 1)? as i64;
            }
            k += 1;
        }
        coeffs.push(chi);
    }
    Ok(IntSeries::new(coeffs))
}

/// `P_A(t) · Q_A(t)`, checked coefficientwise against [`chi_direct`].
pub fn chi_via_product(a: &GradedAlgebra, max_degree: usize) -> Result<IntSeries> {
    let product = poincare(a, max_degree)?.mul(&q_series(a, max_degree)?)?;
    let direct = chi_direct(a, max_degree)?;
    if product != direct {
        return Err(Error::Consistency(format!(
            "P·Q = {product} but the direct Euler characteristic is {direct}"
        )));
    }
    Ok(product)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KoszulVerdict {
    /// `χ^(n) = 0` for `1 ≤ n ≤ up_to`; necessary, not sufficient.
    Consistent { up_to: usize },
    /// `χ^(degree) ≠ 0`, so the algebra is not Koszul.
    Refuted { degree: usize },
}

/// Koszul algebras have `P_A Q_A = 1`; reports the first degree where that fails.
pub fn koszul_necessary(a: &GradedAlgebra, max_degree: usize) -> Result<KoszulVerdict> {
    if max_degree < 1 {
        return Err(Error::Parameter("max degree must be at least 1".into()));
    }
    let chi = chi_via_product(a, max_degree)?;
    Ok(match (1..=max_degree).find(|&n| chi.coeffs[n] != 0) {
        Some(degree) => KoszulVerdict::Refuted { degree },
        None => KoszulVerdict::Consistent { up_to: max_degree },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `(1-t)^{-D} (1-t²)^{-D(D-1)/2}`.
    ParafermiPoincare,
    /// `(1+t)^D (1-t²)^{-D(D+1)/2}`.
    ParabosePoincare,
    /// `1 - Dt + D(D²-1)/3 t³ - D²(D²-1)/12 t⁴`.
    QB,
    /// `Q_B(t) / ((1-t)^D (1-t²)^{D(D-1)/2})`.
    ChiB,
}

fn exact_div(num: i64, den: i64, what: &str) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::NonIntegral(format!("{what}: {num}/{den}")));
    }
    Ok(num / den)
}

/// Expands one of the closed-form series through `max_degree`.
pub fn closed_form_expand(form: ClosedForm, generators: usize, max_degree: usize) -> Result<IntSeries> {
    if generators == 0 {
        return Err(Error::Parameter("generator count must be positive".into()));
    }
    let d = generators as i64;
    let geometric = IntSeries::new(alloc::vec![1; max_degree + 1]);
    let geometric2 = IntSeries::new((0..=max_degree).map(|n| (n % 2 == 0) as i64).collect());
    let q_b = || -> Result<IntSeries> {
        let c3 = exact_div(d * (d * d - 1), 3, "D(D²-1)/3")?;
        let c4 = exact_div(d * d * (d * d - 1), 12, "D²(D²-1)/12")?;
        Ok(IntSeries::polynomial(&[1, -d, 0, c3, -c4], max_degree))
    };
    let pairs = generators * (generators - 1) / 2;
    match form {
        ClosedForm::ParafermiPoincare => geometric.pow(generators)?.mul(&geometric2.pow(pairs)?),
        ClosedForm::ParabosePoincare => {
            let sym = generators * (generators + 1) / 2;
            IntSeries::polynomial(&[1, 1], max_degree)
                .pow(generators)?
                .mul(&geometric2.pow(sym)?)
        }
        ClosedForm::QB => q_b(),
        ClosedForm::ChiB => {
            let denominator = IntSeries::polynomial(&[1, -1], max_degree)
                .pow(generators)?
                .mul(&IntSeries::polynomial(&[1, 0, -1], max_degree).pow(pairs)?)?;
            q_b()?.div(&denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn truncation_is_enforced() {
        let s = IntSeries::new(alloc::vec![1, 2, 3]);
        assert_eq!(s.coeff(2).unwrap(), 3);
        assert_eq!(s.coeff(3), Err(Error::BeyondTruncation { requested: 3, order: 2 }));
        let t = IntSeries::new(alloc::vec![1, 1]);
        assert_eq!(s.mul(&t).unwrap().order(), 1);
    }

    #[test]
    fn division_inverts_product() {
        let a = IntSeries::new(alloc::vec![1, -3, 0, 8, -6, 0, 0]);
        let b = IntSeries::new(alloc::vec![1, 2, 4, 6, 9, 12, 16]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.div(&b).unwrap(), a);
        assert_eq!(
            a.div(&IntSeries::new(alloc::vec![2, 1, 0, 0, 0, 0, 0])),
            Err(Error::NonUnitConstant(2))
        );
    }

    #[test]
    fn display() {
        assert_eq!(IntSeries::polynomial(&[1, -2, 0, 2, -1], 5).to_string(), "1 - 2t + 2t^3 - t^4");
        assert_eq!(IntSeries::polynomial(&[0], 2).to_string(), "0");
    }

    #[test]
    fn closed_forms_small() {
        let p = closed_form_expand(ClosedForm::ParafermiPoincare, 2, 7).unwrap();
        assert_eq!(p.coeffs(), [1, 2, 4, 6, 9, 12, 16, 20]);
        let q = closed_form_expand(ClosedForm::QB, 3, 6).unwrap();
        assert_eq!(q.coeffs(), [1, -3, 0, 8, -6, 0, 0]);
        let chi = closed_form_expand(ClosedForm::ChiB, 3, 6).unwrap();
        assert_eq!(&chi.coeffs()[..6], [1, 0, 0, 0, 0, 6]);
        assert_eq!(
            closed_form_expand(ClosedForm::ChiB, 2, 9).unwrap(),
            IntSeries::one(9)
        );
    }
}
