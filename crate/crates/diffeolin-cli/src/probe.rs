//! Randomized verification of the cross-module properties.
//!
//! Every property is a [`Property`] trait object registered in
//! [`property_registry`]; `probe` runs each over deterministic sampled
//! inputs derived from the seed, so identical invocations produce
//! byte-identical output. All checks are pass/fail except the summand
//! survey, which is reported descriptively.

use serde_json::json;

use diffeolin::exactlin::{kernel_basis, ZERO_EIGENVALUE_EPS};
use diffeolin::{
    canonical_pseudo_metric, check_smooth_split, column_space_basis, decompose,
    induced_dual_metric_closed_form, induced_dual_metric_via_pairing, invariant_standard_part,
    is_pseudo_metric, is_smooth_dual_metric, is_smooth_form, jacobi_eigen, probe_standard_summands,
    pseudo_metric_from_dual_metric, psi, psi_inverse_on_standard_part, signature_lemma_check,
    smooth_form_space, solve_any, symmetric_inertia, DiffSpace, MatrixQ, Rational, Sampler,
    SubspaceQ,
};

use crate::cli::{emit, CliError, Command, GlobalOpts, Verdict};
use crate::doc::load_space;
use crate::render::{Report, Section};

pub struct ProbeContext {
    pub seed: u64,
    pub trials: usize,
    /// When given, space-dependent properties run on this space; otherwise
    /// each trial samples a fresh random space.
    pub space: Option<DiffSpace>,
    /// Registry position; keys this property's random stream.
    pub stream: u64,
}

impl ProbeContext {
    fn sampler(&self) -> Sampler {
        Sampler::stream(self.seed, self.stream)
    }

    fn space_for_trial(&self, sampler: &mut Sampler) -> DiffSpace {
        match &self.space {
            Some(space) => space.clone(),
            None => sampler.space(6),
        }
    }
}

pub enum PropertyOutcome {
    Pass,
    Fail(String),
    /// Descriptive result, never pass/fail.
    Info(Vec<String>),
}

pub trait Property {
    fn name(&self) -> &'static str;
    fn check(&self, ctx: &ProbeContext) -> PropertyOutcome;
}

/// A pass/fail property backed by a plain function that errors on the first
/// falsified trial.
struct NamedCheck {
    name: &'static str,
    run: fn(&ProbeContext) -> Result<(), String>,
}

impl Property for NamedCheck {
    fn name(&self) -> &'static str {
        self.name
    }
    fn check(&self, ctx: &ProbeContext) -> PropertyOutcome {
        match (self.run)(ctx) {
            Ok(()) => PropertyOutcome::Pass,
            Err(message) => PropertyOutcome::Fail(message),
        }
    }
}

pub fn property_registry() -> Vec<Box<dyn Property>> {
    let checks: Vec<NamedCheck> = vec![
        NamedCheck {
            name: "rank-nullity",
            run: rank_nullity,
        },
        NamedCheck {
            name: "rref-idempotent",
            run: rref_idempotent,
        },
        NamedCheck {
            name: "annihilator-involution",
            run: annihilator_involution,
        },
        NamedCheck {
            name: "inertia-congruence-invariance",
            run: inertia_congruence,
        },
        NamedCheck {
            name: "jacobi-inertia-sign-agreement",
            run: jacobi_sign_agreement,
        },
        NamedCheck {
            name: "characteristic-dimension",
            run: characteristic_dimension,
        },
        NamedCheck {
            name: "standardness-edges",
            run: standardness_edges,
        },
        NamedCheck {
            name: "smooth-form-space",
            run: smooth_form_space_props,
        },
        NamedCheck {
            name: "canonical-pseudo-metric",
            run: canonical_pm_verifies,
        },
        NamedCheck {
            name: "signature-bound",
            run: signature_bound,
        },
        NamedCheck {
            name: "pairing-linearity",
            run: pairing_linearity,
        },
        NamedCheck {
            name: "pairing-round-trip",
            run: pairing_round_trip,
        },
        NamedCheck {
            name: "dual-metric-round-trip",
            run: dual_metric_round_trip,
        },
        NamedCheck {
            name: "dual-metric-well-posed",
            run: dual_metric_well_posed,
        },
        NamedCheck {
            name: "invariant-standard-part",
            run: invariant_part_is_column_space,
        },
        NamedCheck {
            name: "decompose-splits-smoothly",
            run: decompose_splits,
        },
        NamedCheck {
            name: "split-check-mirror",
            run: split_check_mirror,
        },
        NamedCheck {
            name: "summand-maximality",
            run: summand_maximality,
        },
    ];
    let mut registry: Vec<Box<dyn Property>> = checks
        .into_iter()
        .map(|c| Box::new(c) as Box<dyn Property>)
        .collect();
    registry.push(Box::new(SummandSurvey));
    registry
}

fn fail(trial: usize, message: impl Into<String>) -> String {
    format!("trial {trial}: {}", message.into())
}

fn rank_nullity(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let rows = sampler.usize_in(1, 6);
        let cols = sampler.usize_in(1, 6);
        let m = sampler.matrix(rows, cols);
        if m.rank() + kernel_basis(&m).dim() != cols {
            return Err(fail(trial, "rank + kernel dimension != column count"));
        }
    }
    Ok(())
}

fn rref_idempotent(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let rows = sampler.usize_in(1, 6);
        let cols = sampler.usize_in(1, 6);
        let m = sampler.matrix(rows, cols);
        let once = m.rref().matrix;
        if once.rref().matrix != once {
            return Err(fail(trial, "rref(rref(M)) != rref(M)"));
        }
    }
    Ok(())
}

fn annihilator_involution(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let ambient = sampler.usize_in(1, 6);
        let dim = sampler.usize_in(0, ambient);
        let s = sampler.subspace(ambient, dim);
        if s.annihilator().annihilator() != s {
            return Err(fail(trial, "annihilator applied twice moved the subspace"));
        }
        if s.annihilator().dim() + s.dim() != ambient {
            return Err(fail(trial, "annihilator dimension mismatch"));
        }
    }
    Ok(())
}

fn inertia_congruence(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let n = sampler.usize_in(1, 5);
        let a = sampler.symmetric(n);
        let p = sampler.invertible(n);
        let congruent = p.transpose().matmul(&a).matmul(&p);
        let left = symmetric_inertia(&a).map_err(|e| fail(trial, e.to_string()))?;
        let right = symmetric_inertia(&congruent).map_err(|e| fail(trial, e.to_string()))?;
        if left != right {
            return Err(fail(trial, format!("inertia {left} became {right}")));
        }
    }
    Ok(())
}

fn jacobi_sign_agreement(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let n = sampler.usize_in(1, 6);
        let a = sampler.symmetric(n);
        let inertia = symmetric_inertia(&a).map_err(|e| fail(trial, e.to_string()))?;
        let eigen = jacobi_eigen(&a, 1e-12).map_err(|e| fail(trial, e.to_string()))?;
        let positive = eigen
            .values
            .iter()
            .filter(|&&v| v > ZERO_EIGENVALUE_EPS)
            .count();
        let negative = eigen
            .values
            .iter()
            .filter(|&&v| v < -ZERO_EIGENVALUE_EPS)
            .count();
        let zero = n - positive - negative;
        if (positive, negative, zero) != (inertia.positive, inertia.negative, inertia.zero) {
            return Err(fail(
                trial,
                format!(
                    "float signs ({positive}, {negative}, {zero}) disagree with exact {inertia}"
                ),
            ));
        }
    }
    Ok(())
}

fn characteristic_dimension(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let c = space.characteristic_subspace();
        if c.dim() + c.annihilator().dim() != space.dimension() {
            return Err(fail(trial, "dim C + dim ann(C) != n"));
        }
        if space.dual_dim() != space.dimension() - c.dim() {
            return Err(fail(trial, "dual dimension bookkeeping broken"));
        }
    }
    Ok(())
}

fn standardness_edges(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let n = space.dimension();
        if !space.is_standard_subspace(&SubspaceQ::zero(n)) {
            return Err(fail(trial, "zero subspace reported non-standard"));
        }
        let full_standard = space.is_standard_subspace(&SubspaceQ::full(n));
        if full_standard != space.generators().is_empty() {
            return Err(fail(
                trial,
                "full-space standardness disagrees with generators",
            ));
        }
        // Monotonicity: a subspace of a standard subspace stays standard.
        let dim = sampler.usize_in(0, n);
        let w = sampler.subspace(n, dim);
        if space.is_standard_subspace(&w) && w.dim() > 0 {
            let picked = sampler.usize_in(1, w.dim());
            let rows = sampler.matrix(picked, w.dim());
            let sub = SubspaceQ::span_of_rows(&rows.matmul(w.basis()));
            if !space.is_standard_subspace(&sub) {
                return Err(fail(trial, "subspace of a standard subspace not standard"));
            }
        }
    }
    Ok(())
}

/// Membership of a symmetric matrix in the span of a family, by flattening.
fn in_span(basis: &[MatrixQ], target: &MatrixQ) -> bool {
    let n = target.rows();
    if basis.is_empty() {
        return target.is_zero();
    }
    let rows: Vec<Vec<Rational>> = (0..n * n)
        .map(|idx| {
            basis
                .iter()
                .map(|m| m.at(idx / n, idx % n).clone())
                .collect()
        })
        .collect();
    let coeffs = MatrixQ::from_rows(rows).expect("uniform flattening");
    let flat: Vec<Rational> = (0..n * n)
        .map(|idx| target.at(idx / n, idx % n).clone())
        .collect();
    solve_any(&coeffs, &flat).is_ok()
}

fn smooth_form_space_props(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let basis = smooth_form_space(&space);
        let k = space.dual_dim();
        if basis.len() != k * (k + 1) / 2 {
            return Err(fail(trial, "solution space dimension != k(k+1)/2"));
        }
        for m in &basis {
            if !is_smooth_form(&space, m).map_err(|e| fail(trial, e.to_string()))? {
                return Err(fail(trial, "basis member fails the smoothness test"));
            }
        }
        let probe = sampler.symmetric(space.dimension());
        let smooth = is_smooth_form(&space, &probe).map_err(|e| fail(trial, e.to_string()))?;
        if smooth != in_span(&basis, &probe) {
            return Err(fail(trial, "smoothness disagrees with span membership"));
        }
    }
    Ok(())
}

fn canonical_pm_verifies(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let canon = canonical_pseudo_metric(&space);
        if !is_pseudo_metric(&space, canon.matrix()).map_err(|e| fail(trial, e.to_string()))? {
            return Err(fail(trial, "canonical pseudo-metric rejected"));
        }
    }
    Ok(())
}

fn signature_bound(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let form = sampler.smooth_form(&space);
        let bound = signature_lemma_check(&space, &form).map_err(|e| fail(trial, e.to_string()))?;
        if !bound.holds {
            return Err(fail(trial, "zero multiplicity below dim C"));
        }
        if !kernel_basis(&form).contains(space.characteristic_subspace()) {
            return Err(fail(trial, "smooth form kernel does not contain C"));
        }
    }
    Ok(())
}

fn pairing_linearity(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let form = sampler.pseudo_metric(&space);
        let n = space.dimension();
        let (u, v) = (sampler.vector(n), sampler.vector(n));
        let (alpha, beta) = (sampler.rational(), sampler.rational());
        let combo: Vec<Rational> = u
            .iter()
            .zip(&v)
            .map(|(a, b)| &alpha * a + &beta * b)
            .collect();
        let lhs = psi(&space, &form, &combo).map_err(|e| fail(trial, e.to_string()))?;
        let pu = psi(&space, &form, &u).map_err(|e| fail(trial, e.to_string()))?;
        let pv = psi(&space, &form, &v).map_err(|e| fail(trial, e.to_string()))?;
        let rhs: Vec<Rational> = pu
            .iter()
            .zip(&pv)
            .map(|(a, b)| &alpha * a + &beta * b)
            .collect();
        if lhs != rhs {
            return Err(fail(trial, "pairing is not linear"));
        }
        let c = space.characteristic_subspace();
        for i in 0..c.dim() {
            let image =
                psi(&space, &form, c.basis_row(i)).map_err(|e| fail(trial, e.to_string()))?;
            if image.iter().any(|x| !x.is_zero()) {
                return Err(fail(trial, "characteristic vector not annihilated"));
            }
        }
    }
    Ok(())
}

fn pairing_round_trip(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let form = sampler.pseudo_metric(&space);
        let k = space.dual_dim();

        let coords = sampler.vector(k);
        let v = psi_inverse_on_standard_part(&space, &form, &coords)
            .map_err(|e| fail(trial, e.to_string()))?;
        let back = psi(&space, &form, &v).map_err(|e| fail(trial, e.to_string()))?;
        if back != coords {
            return Err(fail(trial, "psi o psi^{-1} is not the identity"));
        }

        let v0 = column_space_basis(form.matrix());
        if v0.dim() > 0 {
            let weights = sampler.matrix(1, v0.dim());
            let w = weights.matmul(v0.basis()).row_vec(0);
            let coords = psi(&space, &form, &w).map_err(|e| fail(trial, e.to_string()))?;
            let again = psi_inverse_on_standard_part(&space, &form, &coords)
                .map_err(|e| fail(trial, e.to_string()))?;
            if again != w {
                return Err(fail(trial, "psi^{-1} o psi is not the identity on V0"));
            }
        }
    }
    Ok(())
}

fn dual_metric_round_trip(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let form = sampler.pseudo_metric(&space);
        let pushed = induced_dual_metric_via_pairing(&space, &form)
            .map_err(|e| fail(trial, e.to_string()))?;
        let back = pseudo_metric_from_dual_metric(&space, pushed.matrix())
            .map_err(|e| fail(trial, e.to_string()))?;
        if back != form {
            return Err(fail(trial, "pullback of the pushforward moved the form"));
        }

        let b = sampler.positive_definite(space.dual_dim());
        let pulled =
            pseudo_metric_from_dual_metric(&space, &b).map_err(|e| fail(trial, e.to_string()))?;
        let again = induced_dual_metric_via_pairing(&space, &pulled)
            .map_err(|e| fail(trial, e.to_string()))?;
        if *again.matrix() != b {
            return Err(fail(trial, "pushforward of the pullback moved the metric"));
        }
    }
    Ok(())
}

fn dual_metric_well_posed(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let form = sampler.pseudo_metric(&space);
        let via = induced_dual_metric_via_pairing(&space, &form)
            .map_err(|e| fail(trial, e.to_string()))?;
        let closed = induced_dual_metric_closed_form(&space, &form)
            .map_err(|e| fail(trial, e.to_string()))?;
        if via != closed {
            return Err(fail(trial, "pairing and closed-form routes disagree"));
        }
        if !is_smooth_dual_metric(&space, via.matrix()) {
            return Err(fail(
                trial,
                "pushforward is not a smooth metric on the dual",
            ));
        }
        // Well-posed: preimages perturbed inside the kernel give the same
        // Gram matrix.
        let k = space.dual_dim();
        let c = space.characteristic_subspace();
        let mut preimages = Vec::with_capacity(k);
        for i in 0..k {
            let mut coords = vec![Rational::zero(); k];
            coords[i] = Rational::one();
            let mut v = psi_inverse_on_standard_part(&space, &form, &coords)
                .map_err(|e| fail(trial, e.to_string()))?;
            if c.dim() > 0 {
                let weights = sampler.matrix(1, c.dim());
                let shift = weights.matmul(c.basis()).row_vec(0);
                for (entry, delta) in v.iter_mut().zip(&shift) {
                    *entry += delta;
                }
            }
            preimages.push(v);
        }
        for i in 0..k {
            for j in 0..k {
                if form.evaluate(&preimages[i], &preimages[j]) != *via.matrix().at(i, j) {
                    return Err(fail(trial, "kernel perturbation changed the pushforward"));
                }
            }
        }
    }
    Ok(())
}

fn invariant_part_is_column_space(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let form = sampler.pseudo_metric(&space);
        if column_space_basis(form.matrix()) != invariant_standard_part(&space) {
            return Err(fail(trial, "column space differs from the invariant part"));
        }
        if kernel_basis(form.matrix()) != *space.characteristic_subspace() {
            return Err(fail(
                trial,
                "kernel differs from the characteristic subspace",
            ));
        }
    }
    Ok(())
}

fn decompose_splits(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let form = sampler.pseudo_metric(&space);
        let (v0, v1) = decompose(&space, &form).map_err(|e| fail(trial, e.to_string()))?;
        let split = check_smooth_split(&space, &v0, &v1).map_err(|e| fail(trial, e.to_string()))?;
        if !split.verdict {
            return Err(fail(trial, split.reason));
        }
    }
    Ok(())
}

fn split_check_mirror(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    for trial in 0..ctx.trials {
        let space = ctx.space_for_trial(&mut sampler);
        let n = space.dimension();
        let d = sampler.usize_in(0, n);
        let first = sampler.subspace(n, d);
        let second = sampler.subspace(n, n - d);
        let Ok(split) = check_smooth_split(&space, &first, &second) else {
            continue; // not complements; nothing to mirror
        };
        let c = space.characteristic_subspace();
        let expected = space.is_standard_subspace(&first) && second.contains(c);
        if split.verdict != expected {
            return Err(fail(trial, "verdict differs from the defining criterion"));
        }
        let mirrored =
            check_smooth_split(&space, &second, &first).map_err(|e| fail(trial, e.to_string()))?;
        let expected_mirror = space.is_standard_subspace(&second) && first.contains(c);
        if mirrored.verdict != expected_mirror {
            return Err(fail(trial, "swapped verdict differs from the criterion"));
        }
    }
    Ok(())
}

fn summand_maximality(ctx: &ProbeContext) -> Result<(), String> {
    let mut sampler = ctx.sampler();
    let per_space = 10.min(ctx.trials.max(1));
    for trial in 0..ctx.trials.div_euclid(5).max(1) {
        let space = ctx.space_for_trial(&mut sampler);
        let derived_seed = ctx.seed.wrapping_mul(31).wrapping_add(trial as u64);
        let probe = probe_standard_summands(&space, derived_seed, per_space);
        if probe.oversized_found != 0 {
            return Err(fail(
                trial,
                format!(
                    "{} oversized standard smooth summand(s) found",
                    probe.oversized_found
                ),
            ));
        }
    }
    Ok(())
}

/// Descriptive survey of how many distinct standard smooth summands the
/// sampler finds; probes the uniqueness claim without asserting it.
struct SummandSurvey;

impl Property for SummandSurvey {
    fn name(&self) -> &'static str {
        "summand-uniqueness-survey"
    }
    fn check(&self, ctx: &ProbeContext) -> PropertyOutcome {
        let mut sampler = ctx.sampler();
        let spaces: Vec<(String, DiffSpace)> = match &ctx.space {
            Some(space) => vec![("given space".to_owned(), space.clone())],
            None => (0..3)
                .map(|i| (format!("sampled space {i}"), sampler.space(6)))
                .collect(),
        };
        let trials = ctx.trials.clamp(1, 60);
        let mut lines = Vec::new();
        for (index, (label, space)) in spaces.iter().enumerate() {
            let derived_seed = ctx.seed.wrapping_mul(131).wrapping_add(index as u64);
            let probe = probe_standard_summands(space, derived_seed, trials);
            lines.push(format!(
                "{label}: n={}, dual dimension {}, trials {}, distinct standard smooth summands {}, \
                 contains invariant part {}, oversized candidates {}, oversized found {}",
                space.dimension(),
                probe.dual_dim,
                probe.trials,
                probe.distinct_summands(),
                probe.contains_invariant_part,
                probe.oversized_checked,
                probe.oversized_found,
            ));
        }
        lines.push(
            "note: multiple distinct summands with a standard first factor are expected \
             for spaces with 0 < dim C < n; the count is recorded, not judged"
                .to_owned(),
        );
        PropertyOutcome::Info(lines)
    }
}

pub struct ProbeCommand;

impl Command for ProbeCommand {
    fn name(&self) -> &'static str {
        "probe"
    }
    fn usage(&self) -> &'static str {
        "probe [--seed S] [--trials N] [space]"
    }
    fn about(&self) -> &'static str {
        "run every cross-module property on sampled inputs"
    }
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError> {
        let space = match args {
            [] => None,
            [path] => Some(load_space(std::path::Path::new(path))?),
            _ => {
                return Err(CliError::new(format!(
                    "expected at most one argument: usage: {}",
                    self.usage()
                )))
            }
        };

        let mut report = Report::new();
        let mut header = Section::new("probe");
        header.push("seed", opts.seed.to_string());
        header.push("trials", opts.trials.to_string());
        header.push(
            "space",
            match &space {
                Some(s) => format!("given (n={})", s.dimension()),
                None => "sampled per trial".to_owned(),
            },
        );
        report.sections.push(header);

        let mut failures = 0usize;
        let registry = property_registry();
        let total = registry.len();
        let mut results = Section::new("properties");
        let mut info_sections = Vec::new();
        for (index, property) in registry.iter().enumerate() {
            let ctx = ProbeContext {
                seed: opts.seed,
                trials: opts.trials,
                space: space.clone(),
                stream: index as u64,
            };
            match property.check(&ctx) {
                PropertyOutcome::Pass => {
                    results.push(property.name(), format!("PASS ({} trials)", opts.trials));
                }
                PropertyOutcome::Fail(message) => {
                    failures += 1;
                    results.push(property.name(), format!("FAIL ({message})"));
                }
                PropertyOutcome::Info(lines) => {
                    results.push(property.name(), "INFO (see survey section)".to_owned());
                    let mut section = Section::new(property.name());
                    for (i, line) in lines.iter().enumerate() {
                        section.push(format!("result {i}"), line.clone());
                    }
                    info_sections.push(section);
                }
            }
        }
        report.sections.push(results);
        report.sections.extend(info_sections);

        let mut summary = Section::new("summary");
        summary.push("properties", total.to_string());
        summary.push("failures", failures.to_string());
        report.sections.push(summary);

        emit(opts, json!(report.to_json()), report.to_text());
        Ok(Verdict::from_bool(failures == 0))
    }
}
