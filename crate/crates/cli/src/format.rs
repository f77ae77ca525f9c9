//! JSON wire formats: matrices as rational strings, check results with
//! witnesses, and the harness report. Rationals always travel as `p/q`
//! strings (never numeric literals) so exactness survives serialization.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use ginv_core::scalar::{format_rational, parse_rational, GaussianRational};
use ginv_core::suite::{CheckResult, Verdict, Witness};
use ginv_core::Matrix;

#[derive(Debug)]
pub enum FileError {
    Io { path: String, source: std::io::Error },
    Json { path: String, source: serde_json::Error },
    BadEntry { path: String, row: usize, col: usize, detail: String },
    Shape { path: String, detail: String },
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Io { path, source } => write!(f, "{path}: {source}"),
            FileError::Json { path, source } => write!(f, "{path}: invalid JSON: {source}"),
            FileError::BadEntry { path, row, col, detail } => {
                write!(f, "{path}: entry ({row},{col}): {detail}")
            }
            FileError::Shape { path, detail } => write!(f, "{path}: {detail}"),
        }
    }
}

impl std::error::Error for FileError {}

/// One matrix entry as a pair of rational strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryRepr {
    pub re: String,
    pub im: String,
}

/// The on-disk matrix format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<EntryRepr>>,
}

pub fn matrix_to_file(m: &Matrix) -> MatrixFile {
    let entries = (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| {
                    let e = m.at(r, c);
                    EntryRepr { re: format_rational(e.re()), im: format_rational(e.im()) }
                })
                .collect()
        })
        .collect();
    MatrixFile { rows: m.rows(), cols: m.cols(), entries }
}

pub fn read_matrix(path: &Path) -> Result<Matrix, FileError> {
    let text = fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file: MatrixFile = serde_json::from_str(&text).map_err(|source| FileError::Json {
        path: path.display().to_string(),
        source,
    })?;
    matrix_from_file(&file, &path.display().to_string())
}

pub fn matrix_from_file(file: &MatrixFile, path: &str) -> Result<Matrix, FileError> {
    if file.rows == 0 || file.cols == 0 {
        return Err(FileError::Shape {
            path: path.to_string(),
            detail: format!("dimensions must be positive, got {}x{}", file.rows, file.cols),
        });
    }
    if file.entries.len() != file.rows {
        return Err(FileError::Shape {
            path: path.to_string(),
            detail: format!("expected {} rows of entries, got {}", file.rows, file.entries.len()),
        });
    }
    let mut rows = Vec::with_capacity(file.rows);
    for (r, row) in file.entries.iter().enumerate() {
        if row.len() != file.cols {
            return Err(FileError::Shape {
                path: path.to_string(),
                detail: format!("row {r} has {} entries, expected {}", row.len(), file.cols),
            });
        }
        let mut out = Vec::with_capacity(file.cols);
        for (c, entry) in row.iter().enumerate() {
            let re = parse_rational(&entry.re).map_err(|e| FileError::BadEntry {
                path: path.to_string(),
                row: r,
                col: c,
                detail: e.to_string(),
            })?;
            let im = parse_rational(&entry.im).map_err(|e| FileError::BadEntry {
                path: path.to_string(),
                row: r,
                col: c,
                detail: e.to_string(),
            })?;
            out.push(GaussianRational::new(re, im));
        }
        rows.push(out);
    }
    Ok(Matrix::from_rows(rows))
}

/// Serializes pretty JSON and writes it atomically (temp file + rename).
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), FileError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|source| FileError::Json {
        path: path.display().to_string(),
        source,
    })?;
    text.push('\n');
    let tmp = path.with_extension("tmp");
    let io_err = |source| FileError::Io { path: path.display().to_string(), source };
    fs::write(&tmp, text).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)?;
    Ok(())
}

pub fn write_matrix(path: &Path, m: &Matrix) -> Result<(), FileError> {
    write_json(path, &matrix_to_file(m))
}

// --- Check results -----------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct NamedMatrixRepr {
    pub name: String,
    pub matrix: MatrixFile,
}

#[derive(Debug, Serialize)]
pub struct WitnessRepr {
    pub kind: &'static str,
    pub equation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<MatrixFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<MatrixFile>,
    pub inputs: Vec<NamedMatrixRepr>,
}

#[derive(Debug, Serialize)]
pub struct CheckResultRepr {
    #[serde(rename = "checkName")]
    pub check_name: String,
    #[serde(rename = "paperRef")]
    pub paper_ref: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRepr>,
}

fn witness_repr(kind: &'static str, w: &Witness) -> WitnessRepr {
    WitnessRepr {
        kind,
        equation: w.equation.clone(),
        lhs: w.lhs.as_ref().map(matrix_to_file),
        rhs: w.rhs.as_ref().map(matrix_to_file),
        inputs: w
            .inputs
            .iter()
            .map(|(name, m)| NamedMatrixRepr { name: name.clone(), matrix: matrix_to_file(m) })
            .collect(),
    }
}

pub fn check_result_repr(r: &CheckResult) -> CheckResultRepr {
    let witness = match &r.verdict {
        Verdict::Pass => None,
        Verdict::Fail(w) => Some(witness_repr("fail", w)),
        Verdict::HypothesisViolated(w) => Some(witness_repr("hypothesis-violated", w)),
    };
    CheckResultRepr {
        check_name: r.check_name.clone(),
        paper_ref: r.paper_ref.clone(),
        pass: r.passed(),
        witness,
    }
}

// --- Harness report ----------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct ReportMeta {
    pub seed: u64,
    pub trials: u32,
    pub dims: usize,
    #[serde(rename = "indexMax")]
    pub index_max: usize,
    #[serde(rename = "entryBound")]
    pub entry_bound: u32,
    #[serde(rename = "mList")]
    pub m_list: Vec<u32>,
    #[serde(rename = "toolVersion")]
    pub tool_version: String,
}

#[derive(Debug, Serialize)]
pub struct ReportSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    #[serde(rename = "hypothesisViolated")]
    pub hypothesis_violated: usize,
}

#[derive(Debug, Serialize)]
pub struct ReportFile {
    pub meta: ReportMeta,
    pub results: Vec<CheckResultRepr>,
    pub summary: ReportSummary,
}

pub fn build_report(meta: ReportMeta, results: &[CheckResult]) -> ReportFile {
    let summary = ReportSummary {
        total: results.len(),
        passed: results.iter().filter(|r| r.passed()).count(),
        failed: results.iter().filter(|r| r.failed()).count(),
        hypothesis_violated: results.iter().filter(|r| r.hypothesis_violated()).count(),
    };
    ReportFile {
        meta,
        results: results.iter().map(check_result_repr).collect(),
        summary,
    }
}

// --- Pierce block file -------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct BlocksFile {
    pub p: MatrixFile,
    pub t: MatrixFile,
    pub s: MatrixFile,
    pub n: MatrixFile,
    pub c: Vec<MatrixFile>,
}
