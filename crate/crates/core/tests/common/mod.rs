#![allow(dead_code)]

use std::path::PathBuf;

/// Sizes of the 24 IVR projects, typed in independently of the library's
/// embedded copy.
pub const IVR_SIZES: [f64; 24] = [
    16.2, 5.34, 7.6, 4.7, 3.1, 5.2, 6.8, 6.4, 7.2, 5.4, 8.5, 7.8, 12.5, 10.4, 9.5, 3.4, 6.8, 5.8, 7.4, 7.2, 8.6, 6.4,
    10.6, 6.3,
];

pub const IVR_EFFORTS: [f64; 24] = [
    86.1, 24.02, 36.05, 20.74, 12.85, 23.3, 31.72, 29.59, 33.88, 24.34, 41.01, 37.15, 63.9, 51.71, 46.6, 14.29, 31.73,
    26.42, 34.96, 33.88, 41.56, 29.59, 52.86, 29.06,
];

#[derive(Debug, Clone, Copy)]
pub struct PrintedRow {
    pub id: u32,
    pub none: f64,
    pub norm: f64,
    pub log: f64,
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// The published comparison table, 24 rows, as printed.
pub fn printed_table() -> Vec<PrintedRow> {
    let text = std::fs::read_to_string(fixture("table3_printed.csv")).unwrap();
    text.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            PrintedRow {
                id: f[0].parse().unwrap(),
                none: f[1].parse().unwrap(),
                norm: f[2].parse().unwrap(),
                log: f[3].parse().unwrap(),
            }
        })
        .collect()
}

/// Plain left fold, kept separate from the library's metric code.
pub fn mmre_and_pred(actual: &[f64], estimated: &[f64], threshold: f64) -> (f64, f64) {
    let mut total = 0.0;
    let mut hits = 0usize;
    for i in 0..actual.len() {
        let e = (actual[i] - estimated[i]).abs() / actual[i];
        total += e;
        if e <= threshold {
            hits += 1;
        }
    }
    let n = actual.len() as f64;
    (total / n, hits as f64 / n)
}

/// Least squares via the raw normal equations, solved by Cramer's rule.
pub fn normal_equations_fit(sizes: &[f64], efforts: &[f64]) -> (f64, f64) {
    let n = sizes.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for (&s, &e) in sizes.iter().zip(efforts) {
        let (x, y) = (s.ln(), e.ln());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let det = n * sxx - sx * sx;
    let ln_a = (sy * sxx - sx * sxy) / det;
    let b = (n * sxy - sx * sy) / det;
    (ln_a.exp(), b)
}
