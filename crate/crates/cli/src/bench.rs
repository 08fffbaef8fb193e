//! Phase timings on random permissible graphs.
//!
//! Each sample draws a permissible graph, relabels it at random and times
//! the four phases separately: profile computation, the permissibility
//! check, all `2n` UIDs, and the matching driver. Only the scaling is of
//! interest; nothing here asserts a bound.

use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use uidiso::iso::match_permissible;
use uidiso::profile::check_with_profiles;
use uidiso::random::{random_permissible_graph, random_permutation};
use uidiso::uid::generate_uid_with;
use uidiso::DegreeProfiles;

const ATTEMPTS_PER_SAMPLE: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BenchRow {
    pub n: usize,
    /// Samples actually drawn; fewer than requested when permissible graphs
    /// of this order are rare or absent.
    pub samples: usize,
    pub preprocess_us: f64,
    pub check_us: f64,
    pub uid_us: f64,
    pub match_us: f64,
}

impl BenchRow {
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{:.2}\t{:.2}\t{:.2}\t{:.2}",
            self.n, self.samples, self.preprocess_us, self.check_us, self.uid_us, self.match_us
        )
    }
}

fn time<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

pub fn run_bench(
    orders: RangeInclusive<usize>,
    samples: usize,
    edge_prob: f64,
    seed: u64,
) -> Vec<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for n in orders {
        let mut totals = [Duration::ZERO; 4];
        let mut drawn = 0;
        for _ in 0..samples {
            let Some(g) = random_permissible_graph(n, edge_prob, ATTEMPTS_PER_SAMPLE, &mut rng)
            else {
                break;
            };
            let h = g.permute(&random_permutation(n, &mut rng)).expect("permutation");
            drawn += 1;

            let ((p1, p2), t) = time(|| (DegreeProfiles::new(&g), DegreeProfiles::new(&h)));
            totals[0] += t;
            let (verdicts, t) = time(|| (check_with_profiles(&g, &p1), check_with_profiles(&h, &p2)));
            totals[1] += t;
            assert!(verdicts.0.permissible && verdicts.1.permissible);
            let (_, t) = time(|| {
                for v in 0..n {
                    generate_uid_with(&g, &p1, v).expect("connected");
                    generate_uid_with(&h, &p2, v).expect("connected");
                }
            });
            totals[2] += t;
            let (result, t) = time(|| match_permissible(&g, &p1, &h, &p2, 0));
            totals[3] += t;
            assert!(result.is_isomorphic(), "relabelled copy not matched at n = {n}");
        }
        let mean = |d: Duration| {
            if drawn == 0 {
                0.0
            } else {
                d.as_secs_f64() * 1e6 / drawn as f64
            }
        };
        rows.push(BenchRow {
            n,
            samples: drawn,
            preprocess_us: mean(totals[0]),
            check_us: mean(totals[1]),
            uid_us: mean(totals[2]),
            match_us: mean(totals[3]),
        });
    }
    rows
}
