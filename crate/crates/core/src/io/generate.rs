//! Seeded random instances.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Instance, Point};
use crate::io::format::write_instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Independent uniform points in the square.
    #[default]
    Uniform,
    /// Points scattered around `⌈n/4⌉` random centres within `region / 10`.
    Clustered,
    /// Uniform points snapped to the nearest node of a square lattice.
    Grid,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Uniform => "uniform",
            Family::Clustered => "clustered",
            Family::Grid => "grid",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Family::Uniform),
            "clustered" => Ok(Family::Clustered),
            "grid" => Ok(Family::Grid),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

pub const DEFAULT_REGION: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub seed: u64,
    /// Side of the square `[0, region]²`.
    pub region: f64,
    pub family: Family,
}

impl GenSpec {
    pub fn uniform(n: usize, m: usize, k: usize, seed: u64) -> Self {
        GenSpec {
            n,
            m,
            k,
            seed,
            region: DEFAULT_REGION,
            family: Family::Uniform,
        }
    }

    /// Spacing of the lattice used by [`Family::Grid`].
    pub fn lattice_spacing(&self) -> f64 {
        self.region / lattice_cells(self.n + self.m) as f64
    }
}

fn lattice_cells(points: usize) -> usize {
    ((points as f64).sqrt().ceil() as usize).max(1)
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("at least one terminal is required")]
    NoTerminals,
    #[error("k = {k} exceeds m = {m}")]
    BudgetTooLarge { k: usize, m: usize },
    #[error("region side must be positive and finite, got {0}")]
    BadRegion(f64),
}

pub fn generate_instance(spec: &GenSpec) -> Result<Instance, GenError> {
    if spec.n == 0 {
        return Err(GenError::NoTerminals);
    }
    if spec.k > spec.m {
        return Err(GenError::BudgetTooLarge {
            k: spec.k,
            m: spec.m,
        });
    }
    if !(spec.region.is_finite() && spec.region > 0.0) {
        return Err(GenError::BadRegion(spec.region));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let total = spec.n + spec.m;
    let region = spec.region;
    let points: Vec<Point> = match spec.family {
        Family::Uniform => (0..total)
            .map(|_| uniform_point(&mut rng, region))
            .collect(),
        Family::Clustered => {
            let centres: Vec<Point> = (0..spec.n.div_ceil(4))
                .map(|_| uniform_point(&mut rng, region))
                .collect();
            let radius = region / 10.0;
            (0..total)
                .map(|_| {
                    let c = centres[rng.gen_range(0..centres.len())];
                    let angle = rng.gen::<f64>() * std::f64::consts::TAU;
                    let r = radius * rng.gen::<f64>().sqrt();
                    Point::new(
                        (c.x + r * angle.cos()).clamp(0.0, region),
                        (c.y + r * angle.sin()).clamp(0.0, region),
                    )
                })
                .collect()
        }
        Family::Grid => {
            let cells = lattice_cells(total);
            let spacing = spec.lattice_spacing();
            let snap = |v: f64| ((v / spacing).round() as usize).min(cells) as f64 * spacing;
            (0..total)
                .map(|_| {
                    let p = uniform_point(&mut rng, region);
                    Point::new(snap(p.x), snap(p.y))
                })
                .collect()
        }
    };

    let (terminals, steiners) = points.split_at(spec.n);
    Ok(Instance::new(terminals.to_vec(), steiners.to_vec(), spec.k)
        .expect("generated instances satisfy the instance invariants"))
}

/// Instance file text for `spec`, prefixed with a comment recording it.
pub fn generate(spec: &GenSpec) -> Result<String, GenError> {
    let inst = generate_instance(spec)?;
    Ok(format!(
        "# family={} n={} m={} k={} seed={} region={}\n{}",
        spec.family,
        spec.n,
        spec.m,
        spec.k,
        spec.seed,
        spec.region,
        write_instance(&inst)
    ))
}

fn uniform_point(rng: &mut ChaCha8Rng, region: f64) -> Point {
    Point::new(rng.gen::<f64>() * region, rng.gen::<f64>() * region)
}
