//! Subcommand implementations.
//!
//! Exit-code contract (stable for scripting): 0 = success / anosov,
//! 1 = semantic failure (a check failed), 2 = input error (unreadable or
//! malformed files, unknown names, bad parameters).

use std::path::{Path, PathBuf};

use serde::Serialize;

use anosov_core::catalog;
use anosov_core::doubling::{
    double_construction, min_dimension_lint, quadext_conjugation_check, DoublingError,
    MinDimensionLint,
};
use anosov_core::hyperbolicity::certify;
use anosov_core::lie::{GradingError, LieAlgebra};
use anosov_core::matrix::Matrix;
use anosov_core::rational::format_rational;

use crate::format::{
    read_json, to_canonical_json, write_canonical, AlgebraFile, CertificateFile, FormatError,
    MatrixFile, Parameters,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SEMANTIC: i32 = 1;

type CmdResult = Result<i32, FormatError>;

fn load_algebra(path: &Path) -> Result<LieAlgebra, FormatError> {
    let file: AlgebraFile = read_json(path)?;
    file.to_algebra()
        .map_err(|e| FormatError::Invalid(format!("{}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<Matrix, FormatError> {
    let file: MatrixFile = read_json(path)?;
    file.to_matrix()
        .map_err(|e| FormatError::Invalid(format!("{}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// validate

#[derive(Serialize)]
struct ValidationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    jacobi: String,
    graded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    grading: Option<String>,
    lower_central_series: Vec<usize>,
    nilpotent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    step: Option<usize>,
    abelian_factor: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    abelian_factor_witness: Option<Vec<String>>,
    min_dimension: String,
    valid: bool,
}

fn build_validation_report(alg: &LieAlgebra) -> ValidationReport {
    let jacobi = match alg.jacobi_check() {
        Ok(()) => "pass".to_string(),
        Err(v) => {
            let parts: Vec<String> = v.residual.iter().map(format_rational).collect();
            format!(
                "fail at ({}, {}, {}): residual ({})",
                v.i + 1,
                v.j + 1,
                v.k + 1,
                parts.join(", ")
            )
        }
    };
    let jacobi_ok = jacobi == "pass";
    let graded = alg.degrees().is_some();
    let grading = match alg.grading_check() {
        Ok(()) => graded.then(|| "pass".to_string()),
        Err(GradingError::MissingDegrees) => None,
        Err(GradingError::Violation { i, j, k }) => Some(format!(
            "fail at ({}, {}, {}): degrees do not add",
            i + 1,
            j + 1,
            k + 1
        )),
    };
    let grading_ok = grading.as_deref().is_none_or(|s| s == "pass");
    let series = alg.lower_central_series();
    let witness = alg.abelian_factor_witness();
    let min_dimension = match min_dimension_lint(alg) {
        MinDimensionLint::Ok {
            dim,
            step,
            required,
        } => format!("ok (dim {dim} >= {required} for step {step})"),
        MinDimensionLint::Warning {
            dim,
            step,
            required,
        } => format!(
            "warning: dim {dim} < {required} = 2*{step}+2; a {step}-step algebra of this dimension cannot be Anosov"
        ),
        MinDimensionLint::NotNilpotent => "not applicable (not nilpotent)".to_string(),
    };
    ValidationReport {
        name: alg.name().map(String::from),
        dim: alg.dim(),
        jacobi,
        graded,
        grading,
        nilpotent: series.nilpotent,
        step: series.step(),
        lower_central_series: series.dims,
        abelian_factor: witness.is_some(),
        abelian_factor_witness: witness
            .map(|w| w.iter().map(format_rational).collect()),
        min_dimension,
        valid: jacobi_ok && grading_ok && series.nilpotent,
    }
}

pub fn cmd_validate(path: &Path, json: bool) -> CmdResult {
    let alg = load_algebra(path)?;
    let report = build_validation_report(&alg);
    if json {
        print!("{}", to_canonical_json(&report));
    } else {
        if let Some(name) = &report.name {
            println!("algebra: {name}");
        }
        println!("dimension: {}", report.dim);
        println!("jacobi: {}", report.jacobi);
        match &report.grading {
            Some(s) => println!("grading: {s}"),
            None => println!("grading: (no degrees attached)"),
        }
        println!(
            "lower central series: {:?}{}",
            report.lower_central_series,
            match report.step {
                Some(k) => format!(" (nilpotent, step {k})"),
                None => " (NOT nilpotent)".to_string(),
            }
        );
        println!(
            "abelian factor: {}",
            if report.abelian_factor {
                "yes"
            } else {
                "no"
            }
        );
        println!("minimal dimension: {}", report.min_dimension);
        println!("result: {}", if report.valid { "PASS" } else { "FAIL" });
    }
    Ok(if report.valid { EXIT_OK } else { EXIT_SEMANTIC })
}

// ---------------------------------------------------------------------------
// double

pub fn cmd_double(path: &Path, a: i64, scale: bool, out: Option<&Path>) -> CmdResult {
    let mut alg = load_algebra(path)?;
    if !alg.has_integer_constants() && scale {
        let (scaled, l) = alg.scale_basis_to_integer();
        println!("scaled basis by L = {l}: all structure constants are now integers");
        alg = scaled;
    }
    let result = match double_construction(&alg, a) {
        Ok(r) => r,
        Err(e @ (DoublingError::MissingGrading | DoublingError::GradingViolation { .. })) => {
            eprintln!("cannot double: {e}");
            eprintln!("the construction needs a grading: attach positive degrees with deg(k) = deg(i) + deg(j) on every bracket");
            return Ok(EXIT_SEMANTIC);
        }
        Err(e @ DoublingError::NonIntegerConstants) => {
            eprintln!("cannot double: {e} (or pass --scale)");
            return Ok(EXIT_SEMANTIC);
        }
        Err(e @ DoublingError::JacobiViolation(_)) => {
            eprintln!("cannot double: {e}");
            return Ok(EXIT_SEMANTIC);
        }
        Err(e @ DoublingError::ParameterTooSmall { .. }) => {
            return Err(FormatError::Invalid(e.to_string()));
        }
    };
    if let Err(e) = quadext_conjugation_check(&result) {
        eprintln!("internal consistency failure: {e}");
        return Ok(EXIT_SEMANTIC);
    }
    let cert = certify(&result.doubled, &result.matrix)
        .expect("doubled matrix has matching size");

    let base = out.map_or_else(
        || default_base(path, &format!("_doubled_a{a}")),
        Path::to_path_buf,
    );
    let permutation: Vec<usize> = result
        .degree_sorted_permutation()
        .iter()
        .map(|&i| i + 1)
        .collect();
    let parameters = Parameters {
        construction: "doubling".into(),
        a: Some(a),
        catalog: alg.name().map(String::from),
        block_exponents: Some(
            result.block_exponents.iter().map(|&d| i64::from(d)).collect(),
        ),
        degree_sorted_permutation: Some(permutation.clone()),
    };
    let cert_file = CertificateFile::new(&result.doubled, &result.matrix, &cert, parameters);
    let algebra_path = with_suffix(&base, ".algebra.json");
    let matrix_path = with_suffix(&base, ".matrix.json");
    let cert_path = with_suffix(&base, ".certificate.json");
    write_canonical(&algebra_path, &AlgebraFile::from_algebra(&result.doubled))?;
    write_canonical(
        &matrix_path,
        &MatrixFile::from_matrix(result.doubled.name(), &result.matrix),
    )?;
    write_canonical(&cert_path, &cert_file)?;

    println!(
        "doubled {} (dim {}) into dim {} with a = {a}",
        alg.name().unwrap_or("algebra"),
        alg.dim(),
        result.doubled.dim()
    );
    println!("block exponents: {:?}", result.block_exponents);
    println!("basis order grouped by degree (1-based): {permutation:?}");
    print_certificate_summary(&cert_file);
    println!("wrote {}", algebra_path.display());
    println!("wrote {}", matrix_path.display());
    println!("wrote {}", cert_path.display());
    Ok(if cert.anosov { EXIT_OK } else { EXIT_SEMANTIC })
}

fn default_base(input: &Path, suffix: &str) -> PathBuf {
    let stem = input
        .file_stem()
        .map_or_else(|| "algebra".to_string(), |s| s.to_string_lossy().into_owned());
    let stem = stem.strip_suffix(".algebra").unwrap_or(&stem);
    input.with_file_name(format!("{stem}{suffix}"))
}

fn with_suffix(base: &Path, suffix: &str) -> PathBuf {
    let mut name = base
        .file_name()
        .map_or_else(String::new, |s| s.to_string_lossy().into_owned());
    name.push_str(suffix);
    base.with_file_name(name)
}

fn print_certificate_summary(file: &CertificateFile) {
    let f = &file.flags;
    println!(
        "flags: automorphism={} integral={} unimodular={} hyperbolic={} anosov={}",
        f.automorphism, f.integral, f.unimodular, f.hyperbolic, f.anosov
    );
    println!(
        "splitting: expanding {} / contracting {} ({})",
        file.expanding_dim, file.contracting_dim, file.classification_mode
    );
    println!("char poly (constant first): [{}]", file.char_poly.join(", "));
    if let Some(witnesses) = &file.failure_witnesses {
        for w in witnesses {
            println!("failure: {w}");
        }
    }
}

// ---------------------------------------------------------------------------
// certify

pub fn cmd_certify(algebra_path: &Path, matrix_path: &Path, out: Option<&Path>) -> CmdResult {
    let alg = load_algebra(algebra_path)?;
    let matrix = load_matrix(matrix_path)?;
    let cert = certify(&alg, &matrix)
        .map_err(|e| FormatError::Invalid(e.to_string()))?;
    let file = CertificateFile::new(&alg, &matrix, &cert, Parameters::user());
    print_certificate_summary(&file);
    if let Some(path) = out {
        write_canonical(path, &file)?;
        println!("wrote {}", path.display());
    }
    Ok(if cert.anosov { EXIT_OK } else { EXIT_SEMANTIC })
}

// ---------------------------------------------------------------------------
// example

struct CatalogDescription {
    name: &'static str,
    params: &'static str,
    emits: &'static str,
    about: &'static str,
}

const CATALOG: &[CatalogDescription] = &[
    CatalogDescription {
        name: "heisenberg3",
        params: "(none)",
        emits: "algebra",
        about: "three-dimensional two-step algebra [X1,X2] = X3, graded (1,1,2)",
    },
    CatalogDescription {
        name: "filiform",
        params: "--k <k >= 2> (default 2)",
        emits: "algebra",
        about: "maximal-step chain [X1,Xi] = X(i+1): dimension k+1, step k, degrees (1,1,2,...,k)",
    },
    CatalogDescription {
        name: "seven_dim_family",
        params: "--k <k >= 2> (default 2)",
        emits: "algebra",
        about: "seven-dimensional graded curve at t = 4k^2/(k^2+1)^2, where sqrt(t) = 2k/(k^2+1) and sqrt(1-t) = (k^2-1)/(k^2+1) are rational",
    },
    CatalogDescription {
        name: "eight_dim",
        params: "--a <a >= 2> (default 2)",
        emits: "algebra + matrix",
        about: "eight-dimensional two-step algebra on a twisted pairing; automorphism diag(B, B, B^-3, B^2)",
    },
    CatalogDescription {
        name: "free_two_step",
        params: "--r <r >= 1> (default 1)",
        emits: "algebra + matrix",
        about: "r copies of Q^3 wedging into a shared Lambda^2 Q^3 (dim 3r+3); automorphism diag(A,...,A, Lambda^2 A) with A = [[1,1,1],[1,2,2],[1,2,3]]",
    },
];

fn catalog_entry(
    name: &str,
    k: u32,
    r: u32,
    a: i64,
) -> Result<(String, LieAlgebra, Option<Matrix>), FormatError> {
    let err = |e: catalog::CatalogError| FormatError::Invalid(e.to_string());
    match name {
        "heisenberg3" => Ok(("heisenberg3".into(), catalog::heisenberg3(), None)),
        "filiform" => Ok((
            format!("filiform_k{k}"),
            catalog::filiform(k).map_err(err)?,
            None,
        )),
        "seven_dim_family" => Ok((
            format!("seven_dim_family_k{k}"),
            catalog::seven_dim_family(k).map_err(err)?,
            None,
        )),
        "eight_dim" => {
            let (alg, m) = catalog::eight_dim_example(a).map_err(err)?;
            Ok((format!("eight_dim_a{a}"), alg, Some(m)))
        }
        "free_two_step" => {
            let (alg, m) =
                catalog::free_two_step_sums(r, &catalog::default_free_generator()).map_err(err)?;
            Ok((format!("free_two_step_r{r}"), alg, Some(m)))
        }
        other => Err(FormatError::Invalid(format!(
            "unknown example `{other}`; try `example --list`"
        ))),
    }
}

fn write_entry(
    base: &Path,
    alg: &LieAlgebra,
    matrix: Option<&Matrix>,
) -> Result<(), FormatError> {
    let algebra_path = with_suffix(base, ".algebra.json");
    write_canonical(&algebra_path, &AlgebraFile::from_algebra(alg))?;
    println!("wrote {}", algebra_path.display());
    if let Some(m) = matrix {
        let matrix_path = with_suffix(base, ".matrix.json");
        write_canonical(&matrix_path, &MatrixFile::from_matrix(alg.name(), m))?;
        println!("wrote {}", matrix_path.display());
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_example(
    name: Option<&str>,
    k: u32,
    r: u32,
    a: i64,
    out: Option<&Path>,
    list: bool,
    all: bool,
) -> CmdResult {
    if list {
        println!("{:<18} {:<28} {:<18} description", "name", "parameters", "emits");
        for d in CATALOG {
            println!("{:<18} {:<28} {:<18} {}", d.name, d.params, d.emits, d.about);
        }
        return Ok(EXIT_OK);
    }
    if all {
        let dir = out.ok_or_else(|| {
            FormatError::Invalid("--all needs --out <directory>".to_string())
        })?;
        let mut entries = vec![("heisenberg3", 2u32, 1u32)];
        for kk in 2..=6 {
            entries.push(("filiform", kk, 1));
            entries.push(("seven_dim_family", kk, 1));
        }
        entries.push(("eight_dim", 2, 1));
        for rr in 1..=3 {
            entries.push(("free_two_step", 2, rr));
        }
        for (n, kk, rr) in entries {
            let (base_name, alg, matrix) = catalog_entry(n, kk, rr, 2)?;
            write_entry(&dir.join(base_name), &alg, matrix.as_ref())?;
        }
        return Ok(EXIT_OK);
    }
    let Some(name) = name else {
        return Err(FormatError::Invalid(
            "missing example name; try `example --list`".to_string(),
        ));
    };
    let (base_name, alg, matrix) = catalog_entry(name, k, r, a)?;
    let base = out.map_or_else(|| PathBuf::from(base_name), Path::to_path_buf);
    write_entry(&base, &alg, matrix.as_ref())?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// recheck

pub fn cmd_recheck(path: &Path) -> CmdResult {
    let file: CertificateFile = read_json(path)?;
    let alg = file
        .algebra
        .to_algebra()
        .map_err(|e| FormatError::Invalid(format!("{}: {e}", path.display())))?;
    let rows = crate::format::parse_matrix_rows(&file.matrix)?;
    let matrix = Matrix::from_rows(rows).map_err(|e| FormatError::Invalid(e.to_string()))?;
    let cert = certify(&alg, &matrix).map_err(|e| FormatError::Invalid(e.to_string()))?;
    let recomputed = CertificateFile::new(&alg, &matrix, &cert, file.parameters.clone());

    let mut mismatches = Vec::new();
    if recomputed.flags != file.flags {
        mismatches.push(format!(
            "flags: recorded {:?}, recomputed {:?}",
            file.flags, recomputed.flags
        ));
    }
    if recomputed.char_poly != file.char_poly {
        mismatches.push(format!(
            "char_poly: recorded [{}], recomputed [{}]",
            file.char_poly.join(", "),
            recomputed.char_poly.join(", ")
        ));
    }
    if (recomputed.expanding_dim, recomputed.contracting_dim)
        != (file.expanding_dim, file.contracting_dim)
    {
        mismatches.push(format!(
            "splitting: recorded {}/{}, recomputed {}/{}",
            file.expanding_dim, file.contracting_dim,
            recomputed.expanding_dim, recomputed.contracting_dim
        ));
    }
    if recomputed.classification_mode != file.classification_mode {
        mismatches.push(format!(
            "classification_mode: recorded {}, recomputed {}",
            file.classification_mode, recomputed.classification_mode
        ));
    }
    if recomputed.failure_witnesses != file.failure_witnesses {
        mismatches.push("failure witnesses differ".to_string());
    }

    if mismatches.is_empty() {
        println!(
            "recheck OK: all recorded claims reproduce exactly (anosov = {})",
            file.flags.anosov
        );
        Ok(EXIT_OK)
    } else {
        for m in &mismatches {
            eprintln!("mismatch — {m}");
        }
        Ok(EXIT_SEMANTIC)
    }
}

// ---------------------------------------------------------------------------
// report

pub fn cmd_report(path: &Path) -> CmdResult {
    let file: CertificateFile = read_json(path)?;
    let name = file.algebra.name.as_deref().unwrap_or("(unnamed)");
    println!("certificate for {name}");
    println!("dimension: {}", file.algebra.dim);
    println!("construction: {}", file.parameters.construction);
    if let Some(a) = file.parameters.a {
        println!("parameter a: {a}");
    }
    if let Some(catalog) = &file.parameters.catalog {
        println!("catalog entry: {catalog}");
    }
    if let Some(exponents) = &file.parameters.block_exponents {
        println!("block exponents: {exponents:?}");
    }
    if let Some(perm) = &file.parameters.degree_sorted_permutation {
        println!("basis order grouped by degree (1-based): {perm:?}");
    }
    print_certificate_summary(&file);
    println!(
        "verdict: {}",
        if file.flags.anosov {
            "ANOSOV (hyperbolic unimodular integer automorphism)"
        } else {
            "not anosov"
        }
    );
    Ok(EXIT_OK)
}
