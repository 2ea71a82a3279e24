use std::f64::consts::PI;
use std::io::Write;

use crate::error::{Error, Result};
use crate::partner_search::EnumerationReport;

/// Occupancy of resonance-set members by direction `atan2(n2, n1)`.
///
/// Bin `i` covers `(-π + i·w, -π + (i+1)·w]` with `w = 2π / bins`. Angles are
/// only used for binning; `axis_count` is an exact integer count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngularHistogram {
    pub counts: Vec<u64>,
    pub axis_count: u64,
}

impl AngularHistogram {
    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn bin_center(&self, i: usize) -> f64 {
        let w = 2.0 * PI / self.bins() as f64;
        -PI + (i as f64 + 0.5) * w
    }

    /// CSV with a header row.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "bin_center_radians,count")?;
        for (i, c) in self.counts.iter().enumerate() {
            writeln!(out, "{:.9},{}", self.bin_center(i), c)?;
        }
        Ok(())
    }
}

pub fn stats_anisotropy(report: &EnumerationReport, bins: usize) -> Result<AngularHistogram> {
    if bins < 4 || !bins.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "bins must be even and >= 4, got {bins}"
        )));
    }
    let w = 2.0 * PI / bins as f64;
    let mut counts = vec![0u64; bins];
    let mut axis_count = 0;
    for n in &report.lambda_members {
        if n.n2 == 0 {
            axis_count += 1;
        }
        let theta = (n.n2 as f64).atan2(n.n1 as f64);
        let i = ((theta + PI) / w).ceil() as i64 - 1;
        counts[i.clamp(0, bins as i64 - 1) as usize] += 1;
    }
    Ok(AngularHistogram { counts, axis_count })
}
