//! Smooth direct-sum decompositions.
//!
//! A vector-space decomposition `V = W1 (+) W2` is a *smooth* splitting when
//! the diffeology of `V` agrees with the sum diffeology of the parts. For
//! the modeled class this is decidable: the projections onto a basis of `W1`
//! along `W2` are smooth functionals iff they all kill the characteristic
//! subspace, and the common kernel of those projections is exactly `W2` —
//! so the criterion is "`W1` standard and `C` contained in `W2`".

use crate::error::Error;
use crate::exactlin::{column_space_basis, kernel_basis, SubspaceQ};
use crate::forms::{classify_pseudo_metric, BilinearFormQ};
use crate::sampling::Sampler;
use crate::space::DiffSpace;

/// Verdict of a smooth-splitting check for an ordered pair of complements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothSplit {
    pub first: SubspaceQ,
    pub second: SubspaceQ,
    pub verdict: bool,
    pub reason: String,
}

/// The decomposition induced by a pseudo-metric: its column space (the
/// standard summand, carrying a true metric) and its kernel (always the
/// characteristic subspace).
pub fn decompose(space: &DiffSpace, form: &BilinearFormQ) -> Result<(SubspaceQ, SubspaceQ), Error> {
    let verdict = classify_pseudo_metric(space, form.matrix())?;
    if !verdict.is_pseudo_metric() {
        return Err(Error::NotPseudoMetric(verdict.to_string()));
    }
    let standard_part = column_space_basis(form.matrix());
    let kernel_part = kernel_basis(form.matrix());
    Ok((standard_part, kernel_part))
}

/// Decides whether `V = first (+) second` is a smooth splitting.
///
/// Errors with `NotDirectSum` unless the pair is an honest vector-space
/// complement; otherwise reports the verdict with the first failing
/// condition in `reason`.
pub fn check_smooth_split(
    space: &DiffSpace,
    first: &SubspaceQ,
    second: &SubspaceQ,
) -> Result<SmoothSplit, Error> {
    let n = space.dimension();
    if first.ambient_dim() != n || second.ambient_dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "subspaces live in Q^{} and Q^{}, space dimension is {}",
            first.ambient_dim(),
            second.ambient_dim(),
            n
        )));
    }
    if first.dim() + second.dim() != n {
        return Err(Error::NotDirectSum(format!(
            "dimensions {} + {} do not sum to {}",
            first.dim(),
            second.dim(),
            n
        )));
    }
    if !first.intersect(second).is_zero() {
        return Err(Error::NotDirectSum(
            "subspaces intersect nontrivially".to_owned(),
        ));
    }

    let standard = space.is_standard_subspace(first);
    let contains_c = second.contains(space.characteristic_subspace());
    let (verdict, reason) = if !standard {
        (
            false,
            "first summand does not carry the standard subset diffeology".to_owned(),
        )
    } else if !contains_c {
        (
            false,
            "second summand does not contain the characteristic subspace".to_owned(),
        )
    } else {
        (true, "smooth splitting".to_owned())
    };
    Ok(SmoothSplit {
        first: first.clone(),
        second: second.clone(),
        verdict,
        reason,
    })
}

/// The canonical standard summand: the orthogonal complement of the
/// characteristic subspace under the coordinate dot product.
///
/// Every pseudo-metric has this exact subspace as its column space, which
/// makes it an invariant of the space rather than of any chosen form.
pub fn invariant_standard_part(space: &DiffSpace) -> SubspaceQ {
    space.characteristic_subspace().annihilator()
}

/// A smooth scalar product (positive definite smooth form) exists iff no
/// generator forces degeneracy, i.e. the characteristic subspace is zero.
pub fn admits_smooth_scalar_product(space: &DiffSpace) -> bool {
    space.characteristic_subspace().is_zero()
}

/// Outcome of the randomized search for standard smooth summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandProbe {
    pub seed: u64,
    pub trials: usize,
    /// dim V*; every standard smooth summand must have exactly this
    /// dimension.
    pub dual_dim: usize,
    /// Sampled complements of `C` that were accepted as standard smooth
    /// summands, canonicalized, sorted, deduplicated.
    pub summands: Vec<SubspaceQ>,
    /// Whether the canonical orthogonal complement of `C` was among them.
    pub contains_invariant_part: bool,
    /// Subspaces of dimension > dim V* examined for the maximality claim.
    pub oversized_checked: usize,
    /// How many of those were simultaneously standard and able to split
    /// off smoothly. The dimension count makes this impossible, so any
    /// nonzero value falsifies the criterion.
    pub oversized_found: usize,
}

impl SummandProbe {
    pub fn distinct_summands(&self) -> usize {
        self.summands.len()
    }
}

/// Samples complements of the characteristic subspace and records which ones
/// pass the smooth-splitting check with the first summand standard.
///
/// A pair with `dim W1 = dim V*` forces `W2 = C`, so the search reduces to
/// sampling transversals `W1` of `C`. Separately, each trial also samples an
/// oversized subspace (dimension above `dim V*`) and confirms it is not a
/// standard smooth summand. Deterministic for a fixed seed.
pub fn probe_standard_summands(space: &DiffSpace, seed: u64, trials: usize) -> SummandProbe {
    assert!(trials >= 1, "at least one trial required");
    let n = space.dimension();
    let k = space.dual_dim();
    let c = space.characteristic_subspace();
    let mut summands = Vec::new();
    let mut oversized_checked = 0;
    let mut oversized_found = 0;

    for trial in 0..trials {
        let mut sampler = Sampler::stream(seed, trial as u64);

        let w1 = sampler.subspace(n, k);
        if w1.is_complement_of(c) {
            let split = check_smooth_split(space, &w1, c).expect("complement checked");
            if split.verdict {
                summands.push(w1);
            }
        }

        if k < n {
            let dim = sampler.usize_in(k + 1, n);
            let w = sampler.subspace(n, dim);
            oversized_checked += 1;
            // "Splits off smoothly" needs a complement containing C, which
            // exists iff W misses C entirely.
            if space.is_standard_subspace(&w) && w.intersect(c).is_zero() {
                oversized_found += 1;
            }
        }
    }

    summands.sort();
    summands.dedup();
    let contains_invariant_part = summands
        .binary_search(&invariant_standard_part(space))
        .is_ok();
    SummandProbe {
        seed,
        trials,
        dual_dim: k,
        summands,
        contains_invariant_part,
        oversized_checked,
        oversized_found,
    }
}
