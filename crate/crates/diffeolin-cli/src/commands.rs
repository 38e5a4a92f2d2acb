//! The operation subcommands: one registry entry per library operation.

use std::path::Path;

use serde_json::json;

use diffeolin::{
    canonical_pseudo_metric, check_smooth_split, classify_pseudo_metric, decompose, dual_basis,
    induced_dual_metric, invariant_standard_part, is_smooth_form, pseudo_metric_from_dual_metric,
    smooth_form_space, BilinearFormQ,
};

use crate::cli::{emit, expect_args, CliError, Command, GlobalOpts, Verdict};
use crate::doc::{load_matrix, load_space, load_subspace, matrix_strings, subspace_strings};
use crate::render::{matrix_block, subspace_text};

pub fn operation_commands() -> Vec<Box<dyn Command>> {
    vec![
        Box::new(Dual),
        Box::new(Forms),
        Box::new(CheckForm),
        Box::new(PseudoMetric),
        Box::new(CheckPseudoMetric),
        Box::new(Decompose),
        Box::new(CheckSplit),
        Box::new(InvariantPart),
        Box::new(DualMetric),
        Box::new(FromDualMetric),
    ]
}

fn form_from_file(path: &str, dimension: usize) -> Result<BilinearFormQ, CliError> {
    let matrix = load_matrix(Path::new(path))?;
    if matrix.rows() != dimension || matrix.cols() != dimension {
        return Err(CliError::new(format!(
            "{path}: matrix is {}x{}, space dimension is {dimension}",
            matrix.rows(),
            matrix.cols()
        )));
    }
    Ok(BilinearFormQ::new(matrix)?)
}

struct Dual;

impl Command for Dual {
    fn name(&self) -> &'static str {
        "dual"
    }
    fn usage(&self) -> &'static str {
        "dual <space>"
    }
    fn about(&self) -> &'static str {
        "canonical basis of the diffeological dual"
    }
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError> {
        let [space_path] = expect_args::<1>(self, args)?;
        let space = load_space(Path::new(&space_path))?;
        let basis = dual_basis(&space);
        emit(
            opts,
            json!({
                "dual_dimension": basis.dim(),
                "rows": matrix_strings(basis.matrix()),
            }),
            format!(
                "dual dimension: {}\ndual basis rows:\n{}",
                basis.dim(),
                matrix_block(basis.matrix())
            ),
        );
        Ok(Verdict::Success)
    }
}

struct Forms;

impl Command for Forms {
    fn name(&self) -> &'static str {
        "forms"
    }
    fn usage(&self) -> &'static str {
        "forms <space>"
    }
    fn about(&self) -> &'static str {
        "basis of the space of smooth symmetric bilinear forms"
    }
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError> {
        let [space_path] = expect_args::<1>(self, args)?;
        let space = load_space(Path::new(&space_path))?;
        let basis = smooth_form_space(&space);
        let mut text = format!("smooth form space dimension: {}\n", basis.len());
        for (i, m) in basis.iter().enumerate() {
            text.push_str(&format!("basis form {i}:\n{}", matrix_block(m)));
        }
        emit(
            opts,
            json!({
                "dimension": basis.len(),
                "basis": basis.iter().map(matrix_strings).collect::<Vec<_>>(),
            }),
            text,
        );
        Ok(Verdict::Success)
    }
}

struct CheckForm;

impl Command for CheckForm {
    fn name(&self) -> &'static str {
        "check-form"
    }
    fn usage(&self) -> &'static str {
        "check-form <space> <matrix>"
    }
    fn about(&self) -> &'static str {
        "is the symmetric form smooth for the space?"
    }
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError> {
        let [space_path, matrix_path] = expect_args::<2>(self, args)?;
        let space = load_space(Path::new(&space_path))?;
        let form = form_from_file(&matrix_path, space.dimension())?;
        let smooth = is_smooth_form(&space, form.matrix())?;
        emit(
            opts,
            json!({ "smooth": smooth }),
            format!("smooth: {smooth}"),
        );
        Ok(Verdict::from_bool(smooth))
    }
}

struct PseudoMetric;

impl Command for PseudoMetric {
    fn name(&self) -> &'static str {
        "pseudometric"
    }
    fn usage(&self) -> &'static str {
        "pseudometric <space>"
    }
    fn about(&self) -> &'static str {
        "the canonical pseudo-metric of the space"
    }
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError> {
        let [space_path] = expect_args::<1>(self, args)?;
        let space = load_space(Path::new(&space_path))?;
        let canon = canonical_pseudo_metric(&space);
        emit(
            opts,
            json!({ "matrix": matrix_strings(canon.matrix()) }),
            format!("canonical pseudo-metric:\n{}", matrix_block(canon.matrix())),
        );
        Ok(Verdict::Success)
    }
}

struct CheckPseudoMetric;

impl Command for CheckPseudoMetric {
    fn name(&self) -> &'static str {
        "check-pm"
    }
    fn usage(&self) -> &'static str {
        "check-pm <space> <matrix>"
    }
    fn about(&self) -> &'static str {
        "is the symmetric form a pseudo-metric?"
    }
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError> {
        let [space_path, matrix_path] = expect_args::<2>(self, args)?;
        let space = load_space(Path::new(&space_path))?;
        let form = form_from_file(&matrix_path, space.dimension())?;
        let verdict = classify_pseudo_metric(&space, form.matrix())?;
        let ok = verdict.is_pseudo_metric();
        if ok {
            emit(
                opts,
                json!({ "pseudo_metric": true }),
                "pseudo-metric: true".to_owned(),
            );
        } else {
            emit(
                opts,
                json!({ "pseudo_metric": false, "reason": verdict.to_string() }),
                format!("pseudo-metric: false\nreason: {verdict}"),
            );
        }
        Ok(Verdict::from_bool(ok))
    }
}

struct Decompose;

impl Command for Decompose {
    fn name(&self) -> &'static str {
        "decompose"
    }
    fn usage(&self) -> &'static str {
        "decompose <space> <matrix>"
    }
    fn about(&self) -> &'static str {
        "standard summand and kernel of a pseudo-metric"
    }
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError> {
        let [space_path, matrix_path] = expect_args::<2>(self, args)?;
        let space = load_space(Path::new(&space_path))?;
        let form = form_from_file(&matrix_path, space.dimension())?;
        let (v0, v1) = decompose(&space, &form)?;
        emit(
            opts,
            json!({
                "v0": subspace_strings(&v0),
                "v1": subspace_strings(&v1),
            }),
            format!(
                "V0 (standard summand):\n{}V1 (kernel):\n{}",
                matrix_block(v0.basis()),
                matrix_block(v1.basis())
            ),
        );
        Ok(Verdict::Success)
    }
}

struct CheckSplit;

impl Command for CheckSplit {
    fn name(&self) -> &'static str {
        "check-split"
    }
    fn usage(&self) -> &'static str {
        "check-split <space> <V1> <V2>"
    }
    fn about(&self) -> &'static str {
        "is V1 (+) V2 a smooth splitting?"
    }
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError> {
        let [space_path, first_path, second_path] = expect_args::<3>(self, args)?;
        let space = load_space(Path::new(&space_path))?;
        let first = load_subspace(Path::new(&first_path), space.dimension())?;
        let second = load_subspace(Path::new(&second_path), space.dimension())?;
        let split = check_smooth_split(&space, &first, &second)?;
        emit(
            opts,
            json!({
                "smooth_split": split.verdict,
                "reason": split.reason,
                "first": subspace_strings(&split.first),
                "second": subspace_strings(&split.second),
            }),
            format!("smooth split: {}\nreason: {}", split.verdict, split.reason),
        );
        Ok(Verdict::from_bool(split.verdict))
    }
}

struct InvariantPart;

impl Command for InvariantPart {
    fn name(&self) -> &'static str {
        "invariant-part"
    }
    fn usage(&self) -> &'static str {
        "invariant-part <space>"
    }
    fn about(&self) -> &'static str {
        "the pseudo-metric-independent standard summand"
    }
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError> {
        let [space_path] = expect_args::<1>(self, args)?;
        let space = load_space(Path::new(&space_path))?;
        let part = invariant_standard_part(&space);
        emit(
            opts,
            json!({ "rows": subspace_strings(&part), "dimension": part.dim() }),
            format!("invariant standard part: {}", subspace_text(&part)),
        );
        Ok(Verdict::Success)
    }
}

struct DualMetric;

impl Command for DualMetric {
    fn name(&self) -> &'static str {
        "dual-metric"
    }
    fn usage(&self) -> &'static str {
        "dual-metric <space> <matrix>"
    }
    fn about(&self) -> &'static str {
        "true metric induced on the dual by a pseudo-metric"
    }
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError> {
        let [space_path, matrix_path] = expect_args::<2>(self, args)?;
        let space = load_space(Path::new(&space_path))?;
        let form = form_from_file(&matrix_path, space.dimension())?;
        let metric = induced_dual_metric(&space, &form)?;
        emit(
            opts,
            json!({ "matrix": matrix_strings(metric.matrix()) }),
            format!(
                "induced dual metric ({0}x{0}, canonical dual basis):\n{1}",
                metric.dim(),
                matrix_block(metric.matrix())
            ),
        );
        Ok(Verdict::Success)
    }
}

struct FromDualMetric;

impl Command for FromDualMetric {
    fn name(&self) -> &'static str {
        "from-dual-metric"
    }
    fn usage(&self) -> &'static str {
        "from-dual-metric <space> <matrix>"
    }
    fn about(&self) -> &'static str {
        "pseudo-metric inducing a given metric on the dual"
    }
    fn run(&self, opts: &GlobalOpts, args: &[String]) -> Result<Verdict, CliError> {
        let [space_path, matrix_path] = expect_args::<2>(self, args)?;
        let space = load_space(Path::new(&space_path))?;
        let metric = load_matrix(Path::new(&matrix_path))?;
        let form = pseudo_metric_from_dual_metric(&space, &metric)?;
        emit(
            opts,
            json!({ "matrix": matrix_strings(form.matrix()) }),
            format!("pseudo-metric:\n{}", matrix_block(form.matrix())),
        );
        Ok(Verdict::Success)
    }
}
