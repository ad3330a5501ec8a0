//! Schur products computed through explicit polynomials. Used as an oracle for
//! the Littlewood-Richardson routines, sharing nothing with them but tableau
//! enumeration.

use std::collections::{BTreeMap, HashMap};

use super::{add_checked, SchurExpansion};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::enum_ssyt;
use crate::word::evaluation;

/// Largest `|lambda| + |mu|` accepted by [`monomial_product_oracle`].
pub const MONOMIAL_ORACLE_BOUND: usize = 10;

/// Dense polynomial: exponent vector (one entry per variable) to coefficient.
pub type Polynomial = HashMap<Vec<usize>, i64>;

/// `s_lambda(x_0, ..., x_{n-1})`: one monomial per tableau over `0..n`.
pub fn schur_polynomial(lambda: &Partition, num_vars: usize) -> Result<Polynomial> {
    let mut poly = Polynomial::new();
    if lambda.len() > num_vars {
        return Ok(poly);
    }
    if lambda.is_empty() {
        poly.insert(vec![0; num_vars], 1);
        return Ok(poly);
    }
    for t in enum_ssyt(lambda, num_vars - 1)? {
        let mut exps = evaluation(&t.to_word());
        exps.resize(num_vars, 0);
        let c = poly.entry(exps).or_insert(0);
        *c = c.checked_add(1).ok_or(Error::Overflow("schur_polynomial"))?;
    }
    Ok(poly)
}

fn multiply(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let overflow = || Error::Overflow("monomial_product_oracle");
    let mut out = Polynomial::new();
    for (ea, &ca) in a {
        for (eb, &cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let prod = ca.checked_mul(cb).ok_or_else(overflow)?;
            let slot = out.entry(e).or_insert(0);
            *slot = slot.checked_add(prod).ok_or_else(overflow)?;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// `s_lambda * s_mu` in the Schur basis, obtained by multiplying the two Schur
/// polynomials in `num_vars` variables and peeling off Schur polynomials.
///
/// Each round takes the lexicographically largest exponent vector that is a
/// partition (hence dominance-maximal), records its coefficient `c` as the
/// coefficient of `s_nu` and subtracts `c * s_nu`. Since `s_nu` is `x^nu` plus
/// dominance-lower terms, the leading key strictly decreases. The residual
/// polynomial, over all monomials, must end at zero.
pub fn monomial_product_oracle(lambda: &Partition, mu: &Partition, num_vars: usize) -> Result<SchurExpansion> {
    let degree = lambda.size() + mu.size();
    if degree > MONOMIAL_ORACLE_BOUND {
        return Err(Error::BoundExceeded {
            what: "monomial_product_oracle",
            got: degree,
            bound: MONOMIAL_ORACLE_BOUND,
        });
    }
    if num_vars < degree {
        return Err(Error::TooFewVariables {
            needed: degree,
            got: num_vars,
        });
    }
    let mut residual = multiply(&schur_polynomial(lambda, num_vars)?, &schur_polynomial(mu, num_vars)?)?;
    let mut terms = BTreeMap::new();
    loop {
        let lead = residual
            .iter()
            .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
            .max_by(|a, b| a.0.cmp(b.0));
        let Some((exps, &c)) = lead else { break };
        let lead_key = exps.clone();
        let nu = Partition::new(lead_key.clone()).expect("sorted exponents form a partition");
        for (e, k) in schur_polynomial(&nu, num_vars)? {
            let slot = residual.entry(e).or_insert(0);
            *slot = k
                .checked_mul(c)
                .and_then(|kc| slot.checked_sub(kc))
                .ok_or(Error::Overflow("monomial_product_oracle"))?;
        }
        residual.retain(|_, v| *v != 0);
        if residual.contains_key(&lead_key) {
            return Err(Error::NonzeroResidual);
        }
        add_checked(&mut terms, nu, c, "monomial_product_oracle")?;
    }
    if !residual.is_empty() {
        return Err(Error::NonzeroResidual);
    }
    SchurExpansion::from_terms(degree, terms)
}
