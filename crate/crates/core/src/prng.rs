//! MT19937 generator and bounded uniform series.
//!
//! Seeding follows the reference `init_genrand` recurrence; the output
//! stream is bit-identical to `std::mt19937` and to the `mt19937ar.c`
//! reference code. Other seeding schemes plug in through [`SeedingPolicy`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const N: usize = 624;
const M: usize = 397;
const MATRIX_A: u32 = 0x9908_b0df;
const UPPER_MASK: u32 = 0x8000_0000;
const LOWER_MASK: u32 = 0x7fff_ffff;

/// The known Fermat primes, in increasing order.
pub const FERMAT_PRIMES: [u32; 5] = [3, 5, 17, 257, 65537];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SeedValue(pub u32);

impl From<u32> for SeedValue {
    fn from(v: u32) -> Self {
        SeedValue(v)
    }
}

impl std::fmt::Display for SeedValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Ordered set of seeds drawn from the Fermat primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermatSeedSet(Vec<SeedValue>);

impl FermatSeedSet {
    /// Builds a set from arbitrary values. Values must be Fermat primes;
    /// duplicates are removed and the result is sorted.
    pub fn new(values: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut seeds: Vec<u32> = values.into_iter().collect();
        if let Some(bad) = seeds.iter().find(|s| !FERMAT_PRIMES.contains(s)) {
            return Err(Error::Validation(format!("{bad} is not a Fermat prime")));
        }
        seeds.sort_unstable();
        seeds.dedup();
        if seeds.is_empty() {
            return Err(Error::Validation("seed set is empty".into()));
        }
        Ok(FermatSeedSet(seeds.into_iter().map(SeedValue).collect()))
    }

    pub fn seeds(&self) -> &[SeedValue] {
        &self.0
    }
}

impl Default for FermatSeedSet {
    fn default() -> Self {
        FermatSeedSet(FERMAT_PRIMES.iter().copied().map(SeedValue).collect())
    }
}

/// Full generator state: 624 words and a cursor in `0..=624`.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorState {
    words: [u32; N],
    cursor: usize,
}

impl std::fmt::Debug for GeneratorState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GeneratorState")
            .field("words[0..4]", &&self.words[..4])
            .field("cursor", &self.cursor)
            .finish()
    }
}

/// Turns a seed into an initialized generator state.
pub trait SeedingPolicy {
    fn seed(&self, seed: SeedValue) -> GeneratorState;
}

/// `init_genrand`: `w[0] = seed`, `w[i] = 1812433253 * (w[i-1] ^ (w[i-1] >> 30)) + i`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReferenceInit;

impl SeedingPolicy for ReferenceInit {
    fn seed(&self, seed: SeedValue) -> GeneratorState {
        seed_generator(seed)
    }
}

pub fn seed_generator(seed: SeedValue) -> GeneratorState {
    let mut words = [0u32; N];
    words[0] = seed.0;
    for i in 1..N {
        let prev = words[i - 1];
        words[i] = 1_812_433_253u32
            .wrapping_mul(prev ^ (prev >> 30))
            .wrapping_add(i as u32);
    }
    GeneratorState { words, cursor: N }
}

impl GeneratorState {
    /// `init_by_array` from the reference implementation.
    pub fn from_key(key: &[u32]) -> Self {
        let mut state = seed_generator(SeedValue(19_650_218));
        let mt = &mut state.words;
        let mut i = 1usize;
        let mut j = 0usize;
        let mut k = N.max(key.len());
        while k > 0 {
            let prev = mt[i - 1];
            mt[i] = (mt[i] ^ (prev ^ (prev >> 30)).wrapping_mul(1_664_525))
                .wrapping_add(key.get(j).copied().unwrap_or(0))
                .wrapping_add(j as u32);
            i += 1;
            j += 1;
            if i >= N {
                mt[0] = mt[N - 1];
                i = 1;
            }
            if j >= key.len() {
                j = 0;
            }
            k -= 1;
        }
        k = N - 1;
        while k > 0 {
            let prev = mt[i - 1];
            mt[i] = (mt[i] ^ (prev ^ (prev >> 30)).wrapping_mul(1_566_083_941))
                .wrapping_sub(i as u32);
            i += 1;
            if i >= N {
                mt[0] = mt[N - 1];
                i = 1;
            }
            k -= 1;
        }
        mt[0] = 0x8000_0000;
        state.cursor = N;
        state
    }

    pub fn words(&self) -> &[u32; N] {
        &self.words
    }

    pub fn cursor(&self) -> usize {
        self.cursor
    }

    fn twist(&mut self) {
        let mt = &mut self.words;
        for i in 0..N {
            let y = (mt[i] & UPPER_MASK) | (mt[(i + 1) % N] & LOWER_MASK);
            let mag = if y & 1 == 0 { 0 } else { MATRIX_A };
            mt[i] = mt[(i + M) % N] ^ (y >> 1) ^ mag;
        }
        self.cursor = 0;
    }

    /// Next tempered 32-bit output.
    pub fn next_word(&mut self) -> u32 {
        if self.cursor >= N {
            self.twist();
        }
        let mut y = self.words[self.cursor];
        self.cursor += 1;
        y ^= y >> 11;
        y ^= (y << 7) & 0x9d2c_5680;
        y ^= (y << 15) & 0xefc6_0000;
        y ^ (y >> 18)
    }

    /// 53-bit resolution draw in `[0, 1)` built from two consecutive words.
    pub fn next_unit(&mut self) -> f64 {
        let a = (self.next_word() >> 5) as f64;
        let b = (self.next_word() >> 6) as f64;
        (a * 67_108_864.0 + b) * (1.0 / 9_007_199_254_740_992.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SortOrder {
    #[serde(alias = "asc")]
    Ascending,
    #[default]
    #[serde(alias = "desc")]
    Descending,
}

impl std::str::FromStr for SortOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "asc" | "ascending" => Ok(SortOrder::Ascending),
            "desc" | "descending" => Ok(SortOrder::Descending),
            other => Err(Error::Validation(format!("unknown sort order `{other}`"))),
        }
    }
}

/// Sorted synthetic temperature series, values in `[t_min, t_max]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UniformSeries {
    pub seed: SeedValue,
    pub t_min: f64,
    pub t_max: f64,
    pub order: SortOrder,
    pub values: Vec<f64>,
}

impl UniformSeries {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Draws `n` values `t_min + u * (t_max - t_min)` and sorts them.
pub fn uniform_series(
    seed: SeedValue,
    n: usize,
    t_min: f64,
    t_max: f64,
    order: SortOrder,
) -> Result<UniformSeries> {
    uniform_series_with(&ReferenceInit, seed, n, t_min, t_max, order)
}

pub fn uniform_series_with<P: SeedingPolicy + ?Sized>(
    policy: &P,
    seed: SeedValue,
    n: usize,
    t_min: f64,
    t_max: f64,
    order: SortOrder,
) -> Result<UniformSeries> {
    if n < 2 {
        return Err(Error::InsufficientSamples { given: n, needed: 2 });
    }
    if !(t_min <= t_max) {
        return Err(Error::InvalidBounds {
            min: t_min,
            max: t_max,
        });
    }
    let mut state = policy.seed(seed);
    let span = t_max - t_min;
    let mut values: Vec<f64> = (0..n)
        .map(|_| (t_min + state.next_unit() * span).min(t_max))
        .collect();
    values.sort_by(f64::total_cmp);
    if order == SortOrder::Descending {
        values.reverse();
    }
    Ok(UniformSeries {
        seed,
        t_min,
        t_max,
        order,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeding_sets_first_word_and_cursor() {
        let state = seed_generator(SeedValue(5));
        assert_eq!(state.words()[0], 5);
        assert_eq!(state.cursor(), 624);
        assert_eq!(state, seed_generator(SeedValue(5)));
    }

    #[test]
    fn zero_seed_is_valid() {
        let state = seed_generator(SeedValue(0));
        assert!(state.words().iter().any(|&w| w != 0));
        let mut state = state;
        assert_eq!(state.next_word(), 2_357_136_044);
    }

    #[test]
    fn ten_thousandth_default_output() {
        // Conformance value required of std::mt19937.
        let mut state = seed_generator(SeedValue(5489));
        for _ in 0..9999 {
            state.next_word();
        }
        assert_eq!(state.next_word(), 4_123_659_995);
        assert!(state.cursor() <= 624);
    }

    #[test]
    fn unit_draws_stay_in_range() {
        let mut state = seed_generator(SeedValue(65537));
        for _ in 0..100_000 {
            let u = state.next_unit();
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn series_errors() {
        assert!(matches!(
            uniform_series(SeedValue(3), 1, 0.0, 1.0, SortOrder::Ascending),
            Err(Error::InsufficientSamples { given: 1, .. })
        ));
        assert!(matches!(
            uniform_series(SeedValue(3), 10, 2.0, 1.0, SortOrder::Ascending),
            Err(Error::InvalidBounds { .. })
        ));
    }

    #[test]
    fn degenerate_interval_is_flat() {
        let s = uniform_series(SeedValue(3), 538, 25.0, 25.0, SortOrder::Ascending).unwrap();
        assert!(s.values.iter().all(|&v| v == 25.0));
    }

    #[test]
    fn descending_is_reverse_of_ascending() {
        let up = uniform_series(SeedValue(17), 100, 1.0, 2.0, SortOrder::Ascending).unwrap();
        let mut down = uniform_series(SeedValue(17), 100, 1.0, 2.0, SortOrder::Descending).unwrap();
        down.values.reverse();
        assert_eq!(up.values, down.values);
    }

    #[test]
    fn fermat_set_rejects_composites() {
        assert!(FermatSeedSet::new([5, 9]).is_err());
        assert!(FermatSeedSet::new([]).is_err());
        let set = FermatSeedSet::new([17, 5, 5]).unwrap();
        assert_eq!(set.seeds(), &[SeedValue(5), SeedValue(17)]);
    }
}
