use num_complex::Complex64;

/// Eigenvalue multiset of a matrix, optionally with the Perron root marked.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<Complex64>,
    perron_index: Option<usize>,
}

impl Spectrum {
    pub fn new(values: Vec<Complex64>) -> Self {
        Spectrum {
            values,
            perron_index: None,
        }
    }

    pub fn from_real(values: impl IntoIterator<Item = f64>) -> Self {
        Self::new(values.into_iter().map(|v| Complex64::new(v, 0.0)).collect())
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn perron_index(&self) -> Option<usize> {
        self.perron_index
    }

    /// Marks the eigenvalue closest to 1 as the Perron root if it lies within
    /// `tol`; returns whether one was marked.
    pub fn mark_perron(&mut self, tol: f64) -> bool {
        self.perron_index = self
            .closest_to(Complex64::new(1.0, 0.0))
            .filter(|&i| (self.values[i] - 1.0).norm() <= tol);
        self.perron_index.is_some()
    }

    pub fn closest_to(&self, z: Complex64) -> Option<usize> {
        self.values
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - z).norm().total_cmp(&(b.1 - z).norm()))
            .map(|(i, _)| i)
    }

    /// Real parts, for spectra known to be real.
    pub fn real_parts(&self) -> Vec<f64> {
        self.values.iter().map(|z| z.re).collect()
    }

    pub fn sum(&self) -> Complex64 {
        self.values.iter().sum()
    }

    pub fn max_imag(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, z| acc.max(z.im.abs()))
    }

    /// Number of eigenvalues within `tol` of `z`.
    pub fn count_near(&self, z: Complex64, tol: f64) -> usize {
        self.values.iter().filter(|v| (*v - z).norm() <= tol).count()
    }

    /// Returns a copy with `z` adjoined.
    pub fn with(&self, z: Complex64) -> Spectrum {
        let mut values = self.values.clone();
        values.push(z);
        Spectrum::new(values)
    }
}

/// Pairs two multisets greedily by smallest distance and returns the largest
/// paired distance, or `None` when the sizes differ.
///
/// Greedy pairing is not an optimal assignment, but at desk scale and with
/// tolerances far below the eigenvalue gaps it agrees with one.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            pairs.push(((x - y).norm(), i, j));
        }
    }
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut used_a = vec![false; a.len()];
    let mut used_b = vec![false; b.len()];
    let mut worst = 0.0_f64;
    let mut matched = 0;
    for (d, i, j) in pairs {
        if used_a[i] || used_b[j] {
            continue;
        }
        used_a[i] = true;
        used_b[j] = true;
        worst = worst.max(d);
        matched += 1;
        if matched == a.len() {
            break;
        }
    }
    Some(worst)
}
