//! The noncrossing expansion engine behind mixed moments, product cumulants
//! and cumulants of noncommutative polynomials.
//!
//! Everything is a weighted sum over noncrossing partitions of letter
//! positions. In free (numeric) mode blocks must be constant in the variable
//! labels and are weighted by the member's univariate cumulants; in tracial
//! (symbolic) mode no freeness is assumed and each block contributes a
//! cyclic-canonical joint-cumulant symbol.

use super::family::FreeFamily;
use super::symbols::{JointCumulantSymbol, NCPolynomial};
use crate::error::{Error, Result};
use crate::exact::MultiPoly;
use crate::ncpart::{visit_nc, BlockRules, UnionFind};

/// Expansion mode for [`poly_cumulant`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExpansionMode {
    /// Freeness assumed between distinct names; blocks weighted by the
    /// family's univariate cumulants (exact values or `k[X;n]` symbols).
    Numeric,
    /// No freeness assumed; blocks become joint-cumulant symbols. This is
    /// the strong-cancellation engine.
    Symbolic,
}

/// Hard letter bound for unpruned (symbolic or unbounded-support) sums.
const EXHAUSTIVE_LETTER_BOUND: usize = 14;
/// Letter bound when every member has a finite cumulant support.
const PRUNED_LETTER_BOUND: usize = 24;

fn check_bounds(letters: &[&str], family: &FreeFamily, mode: ExpansionMode) -> Result<()> {
    let n = letters.len();
    let pruned = mode == ExpansionMode::Numeric
        && family.members().all(|s| s.max_contributing().is_some());
    let bound = if pruned {
        PRUNED_LETTER_BOUND
    } else {
        EXHAUSTIVE_LETTER_BOUND
    };
    if n > bound {
        return Err(Error::bound(format!(
            "expansion over {n} letters exceeds the bound {bound} \
             (roughly Catalan({n}) ~ 1e{:.0} partitions)",
            0.6 * n as f64
        )));
    }
    Ok(())
}

/// Weighted sum over noncrossing partitions of the letter positions.
///
/// `groups`, when present, are consecutive group sizes (an interval
/// partition); only partitions whose join with it is full are kept, which is
/// the product-formula condition.
pub(crate) fn nc_cumulant_sum(
    letters: &[&str],
    groups: Option<&[usize]>,
    family: &FreeFamily,
    mode: ExpansionMode,
) -> Result<MultiPoly> {
    let n = letters.len();
    if n == 0 {
        return Err(Error::invalid("empty word"));
    }
    if let Some(gs) = groups {
        if gs.iter().sum::<usize>() != n {
            return Err(Error::invalid("group sizes must sum to the word length"));
        }
        if gs.iter().any(|&g| g == 0) {
            return Err(Error::invalid("empty group"));
        }
    }
    for &name in letters {
        family.get(name)?;
    }
    check_bounds(letters, family, mode)?;

    // group index of each position (1-based positions)
    let group_of: Vec<usize> = match groups {
        None => vec![0; n + 1],
        Some(gs) => {
            let mut g = vec![0usize; n + 1];
            let mut pos = 1;
            for (gi, &len) in gs.iter().enumerate() {
                for _ in 0..len {
                    g[pos] = gi;
                    pos += 1;
                }
            }
            g
        }
    };
    let n_groups = groups.map(|gs| gs.len()).unwrap_or(1);

    let mut total = MultiPoly::zero();
    let compat = |i: usize, j: usize| letters[i - 1] == letters[j - 1];
    let trivially_true = |_: usize, _: usize| true;
    let size_ok = |min: usize, s: usize| {
        family
            .get(letters[min - 1])
            .map(|spec| spec.contributes(s))
            .unwrap_or(false)
    };
    let grow_ok = |min: usize, s: usize| {
        family
            .get(letters[min - 1])
            .ok()
            .and_then(|spec| spec.max_contributing())
            .is_none_or(|m| s < m)
    };
    let rules = match mode {
        ExpansionMode::Numeric => BlockRules {
            size_ok: &size_ok,
            compat: &compat,
            grow_ok: &grow_ok,
        },
        ExpansionMode::Symbolic => BlockRules {
            size_ok: &trivially_true,
            compat: &trivially_true,
            grow_ok: &trivially_true,
        },
    };

    visit_nc(n, &rules, &mut |blocks| {
        if groups.is_some() {
            let mut uf = UnionFind::new(n_groups);
            // union-find over group indices through the blocks; positions in
            // one group are already connected through the interval partition
            for b in blocks {
                let g0 = group_of[b[0]] + 1;
                for &x in &b[1..] {
                    uf.union(g0, group_of[x] + 1);
                }
            }
            if uf.components() != 1 {
                return;
            }
        }
        let mut weight = MultiPoly::one();
        for b in blocks {
            let factor = match mode {
                ExpansionMode::Numeric => family
                    .get(letters[b[0] - 1])
                    .expect("validated above")
                    .kappa(b.len()),
                ExpansionMode::Symbolic => {
                    let word: Vec<&str> = b.iter().map(|&x| letters[x - 1]).collect();
                    JointCumulantSymbol::new(&word).to_poly()
                }
            };
            if factor.is_zero() {
                return;
            }
            weight = weight.mul(&factor);
        }
        total = total.add(&weight);
    });
    Ok(total)
}

/// Mixed moment `tau(X_{w_1} ... X_{w_n})` of a free family.
pub fn mixed_moment(word: &[&str], family: &FreeFamily) -> Result<MultiPoly> {
    nc_cumulant_sum(word, None, family, ExpansionMode::Numeric)
}

/// Product formula: the cumulant of consecutive products,
/// `K_r(X.. , X.. , ...)` with the factors grouped by `group_sizes`,
/// expanded over partitions whose join with the grouping is full.
pub fn product_cumulant(
    group_sizes: &[usize],
    word: &[&str],
    family: &FreeFamily,
) -> Result<MultiPoly> {
    nc_cumulant_sum(word, Some(group_sizes), family, ExpansionMode::Numeric)
}

/// `K_r(P, P, ..., P)` for a noncommutative polynomial `P`, expanded
/// multilinearly over its terms.
pub fn poly_cumulant(
    p: &NCPolynomial,
    family: &FreeFamily,
    r: usize,
    mode: ExpansionMode,
) -> Result<MultiPoly> {
    if r == 0 {
        return Err(Error::invalid("cumulant order must be >= 1"));
    }
    if p.terms().is_empty() {
        return Ok(MultiPoly::zero());
    }
    // worst-case letter count decides admissibility up front
    let max_len = p.degree() * r;
    let probe: Vec<&str> = std::iter::repeat_n("__probe", max_len.max(1)).collect();
    {
        // bound check with a fake all-one-name word; numeric prunability
        // depends only on the family
        check_bounds(&probe, family, mode)?;
    }
    let terms = p.terms();
    let k = terms.len();
    let mut total = MultiPoly::zero();
    let mut choice = vec![0usize; r];
    loop {
        // one multilinear term: factors choice[0], ..., choice[r-1]
        let mut coeff = MultiPoly::one();
        let mut letters: Vec<&str> = Vec::new();
        let mut groups: Vec<usize> = Vec::with_capacity(r);
        for &ci in &choice {
            let (c, w) = &terms[ci];
            coeff = coeff.mul(c);
            groups.push(w.len());
            letters.extend(w.iter().map(|s| s.as_str()));
        }
        if !coeff.is_zero() {
            let inner = nc_cumulant_sum(&letters, Some(&groups), family, mode)?;
            total = total.add(&coeff.mul(&inner));
        }
        // next word choice
        let mut i = 0;
        loop {
            if i == r {
                return Ok(total);
            }
            choice[i] += 1;
            if choice[i] < k {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}
