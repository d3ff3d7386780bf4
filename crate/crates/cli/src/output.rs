//! Artifact emission: atomic file writes, FNV-1a config hashing, CSV with
//! 17 significant digits, and dependency-free SVG line plots.
//!
//! Determinism contract: two runs with identical config hashes produce
//! byte-identical CSV/JSON/SVG (no timestamps are embedded anywhere; wall
//! times go to stderr only).

use crate::CliError;
use std::io::Write;
use std::path::Path;

/// 64-bit FNV-1a of a byte string.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x1_0000_01b3);
    }
    h
}

/// Hash of a serializable config, as fixed-width hex.
pub fn config_hash<T: serde::Serialize>(cfg: &T) -> Result<String, CliError> {
    let s = serde_json::to_string(cfg)
        .map_err(|e| CliError::Internal(format!("config serialization: {e}")))?;
    Ok(format!("{:016x}", fnv1a(s.as_bytes())))
}

/// Writes `bytes` to `path` atomically (temp file in the same directory,
/// then rename), creating parent directories as needed.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    if let Some(d) = dir {
        std::fs::create_dir_all(d)
            .map_err(|e| CliError::Internal(format!("create {}: {e}", d.display())))?;
    }
    let mut tmp = tempfile::NamedTempFile::new_in(dir.unwrap_or(Path::new(".")))
        .map_err(|e| CliError::Internal(format!("temp file for {}: {e}", path.display())))?;
    tmp.write_all(bytes)
        .map_err(|e| CliError::Internal(format!("write {}: {e}", path.display())))?;
    tmp.persist(path)
        .map_err(|e| CliError::Internal(format!("rename into {}: {e}", path.display())))?;
    Ok(())
}

/// One numeric cell with 17 significant digits (round-trippable f64).
pub fn fmt17(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        format!("{v}")
    }
}

/// Assembles a CSV document: mandatory header row, comma separation,
/// '.' decimal, 17 significant digits.
pub fn csv_table(header: &[&str], rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&v| fmt17(v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// A minimal SVG line plot (direct path generation, no dependencies);
/// `log_x` plots log₁₀ of the abscissa. Points with non-finite or (in log
/// mode) non-positive coordinates are skipped.
pub fn svg_plot(title: &str, points: &[(f64, f64)], log_x: bool) -> String {
    let (w, h, ml, mb, mt, mr) = (640.0, 420.0, 60.0, 40.0, 30.0, 20.0);
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(x, y)| x.is_finite() && y.is_finite() && (!log_x || x > 0.0))
        .map(|&(x, y)| (if log_x { x.log10() } else { x }, y))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if pts.is_empty() || x1 <= x0 {
        (x0, x1) = (0.0, 1.0);
    }
    if y1 <= y0 {
        (y0, y1) = (y0.min(0.0), y0.min(0.0) + 1.0);
    }
    let sx = |x: f64| ml + (x - x0) / (x1 - x0) * (w - ml - mr);
    let sy = |y: f64| h - mb - (y - y0) / (y1 - y0) * (h - mb - mt);
    let mut path = String::new();
    for (i, &(x, y)) in pts.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        path.push_str(&format!("{cmd}{:.2} {:.2} ", sx(x), sy(y)));
    }
    let xlabel = if log_x { "log10 x" } else { "x" };
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" ",
            "viewBox=\"0 0 {w} {h}\">\n",
            "<metadata>title: {title}</metadata>\n",
            "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            "<text x=\"{tx}\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">{title}</text>\n",
            "<line x1=\"{ml}\" y1=\"{yb}\" x2=\"{xr}\" y2=\"{yb}\" stroke=\"black\"/>\n",
            "<line x1=\"{ml}\" y1=\"{mt}\" x2=\"{ml}\" y2=\"{yb}\" stroke=\"black\"/>\n",
            "<text x=\"{tx}\" y=\"{h2}\" text-anchor=\"middle\" font-size=\"11\">{xlabel}</text>\n",
            "<text x=\"{ml}\" y=\"{yb2}\" font-size=\"10\">{x0:.3e}</text>\n",
            "<text x=\"{xr}\" y=\"{yb2}\" text-anchor=\"end\" font-size=\"10\">{x1:.3e}</text>\n",
            "<text x=\"8\" y=\"{yb}\" font-size=\"10\">{y0:.3e}</text>\n",
            "<text x=\"8\" y=\"{mt2}\" font-size=\"10\">{y1:.3e}</text>\n",
            "<path d=\"{path}\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"/>\n",
            "</svg>\n"
        ),
        w = w,
        h = h,
        title = title,
        tx = (ml + w - mr) / 2.0,
        ml = ml,
        mt = mt,
        mt2 = mt + 4.0,
        yb = h - mb,
        yb2 = h - mb + 14.0,
        xr = w - mr,
        h2 = h - 8.0,
        xlabel = xlabel,
        x0 = x0,
        x1 = x1,
        y0 = y0,
        y1 = y1,
        path = path.trim_end(),
    )
}
