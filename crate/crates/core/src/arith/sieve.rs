use super::root::integer_kth_root;
use crate::{Error, Result};

/// Default number of odd integers covered by one segment (`2^24` bits).
pub const DEFAULT_SEGMENT_SIZE: usize = 1 << 24;

/// Primality table for the integers of `[lo, hi]`, one bit per odd integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSegment {
    lo: u64,
    hi: u64,
    /// Bit `i` is set iff `first_odd + 2 i` is prime.
    bits: Vec<u64>,
    first_odd: u64,
    odd_count: usize,
}

impl PrimeSegment {
    fn empty(lo: u64, hi: u64) -> Self {
        PrimeSegment {
            lo,
            hi,
            bits: Vec::new(),
            first_odd: 1,
            odd_count: 0,
        }
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    /// Whether `m` is prime. `m` must lie in `[lo, hi]`.
    pub fn is_prime(&self, m: u64) -> bool {
        debug_assert!(m >= self.lo && m <= self.hi);
        if m == 2 {
            return true;
        }
        if m.is_multiple_of(2) || m < self.first_odd {
            return false;
        }
        let i = ((m - self.first_odd) / 2) as usize;
        i < self.odd_count && self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Primes of the segment in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        let two = (self.lo <= 2 && 2 <= self.hi).then_some(2);
        let odd = self.bits.iter().enumerate().flat_map(move |(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        });
        let first_odd = self.first_odd;
        let odd_count = self.odd_count;
        two.into_iter()
            .chain(odd.take_while(move |&i| i < odd_count).map(move |i| first_odd + 2 * i as u64))
    }

    pub fn count(&self) -> usize {
        self.iter().count()
    }
}

/// Odd-only sieve of Eratosthenes up to `n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    // index i <-> 2i + 1
    let half = (n - 1) / 2 + 1;
    let mut composite = vec![false; half];
    composite[0] = true; // 1
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= n {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = p * p / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut out = Vec::with_capacity(half / 8 + 1);
    out.push(2u64);
    out.extend(
        composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| 2 * i as u64 + 1),
    );
    out
}

/// Segmented sieve with a fixed segment size and base primes up to
/// `sqrt(max_hi)`.
#[derive(Debug, Clone)]
pub struct SegmentedSieve {
    max_hi: u64,
    base: Vec<u64>,
    segment_size: usize,
}

impl SegmentedSieve {
    pub fn new(max_hi: u64) -> Self {
        Self::with_segment_size(max_hi, DEFAULT_SEGMENT_SIZE)
    }

    pub fn with_segment_size(max_hi: u64, segment_size: usize) -> Self {
        assert!(segment_size >= 64, "segment size below one word");
        let base = primes_up_to(integer_kth_root(max_hi, 2));
        SegmentedSieve {
            max_hi,
            base,
            segment_size,
        }
    }

    pub fn segment_size(&self) -> usize {
        self.segment_size
    }

    /// Sieve `[lo, hi]` as one segment. Fails if the range holds more odd
    /// integers than the segment size or exceeds `max_hi`.
    pub fn segment(&self, lo: u64, hi: u64) -> Result<PrimeSegment> {
        if lo > hi {
            return Ok(PrimeSegment::empty(lo, hi));
        }
        if hi > self.max_hi {
            return Err(Error::Guard(format!(
                "segment end {hi} above sieve limit {}",
                self.max_hi
            )));
        }
        let first_odd = lo.max(1) | 1;
        let odd_count = if first_odd > hi {
            0
        } else {
            ((hi - first_odd) / 2 + 1) as usize
        };
        if odd_count > self.segment_size {
            return Err(Error::Guard(format!(
                "[{lo}, {hi}] spans {odd_count} odd integers, segment size is {}",
                self.segment_size
            )));
        }
        Ok(sieve_segment(&self.base, lo, hi, first_odd, odd_count))
    }

    /// Consecutive segments covering `[lo, hi]`.
    pub fn segments(&self, lo: u64, hi: u64) -> impl Iterator<Item = PrimeSegment> + '_ {
        let span = 2 * self.segment_size as u64;
        let mut next = Some(lo);
        std::iter::from_fn(move || {
            let start = next?;
            if start > hi {
                next = None;
                return None;
            }
            // keep segment starts even so each holds at most `segment_size` odds
            let end = start.saturating_add(span - 1 - (start & 1)).min(hi);
            next = end.checked_add(1);
            Some(self.segment(start, end).expect("segment within limits"))
        })
    }
}

fn sieve_segment(base: &[u64], lo: u64, hi: u64, first_odd: u64, odd_count: usize) -> PrimeSegment {
    let words = odd_count.div_ceil(64);
    let mut bits = vec![!0u64; words];
    if !odd_count.is_multiple_of(64) {
        bits[words - 1] = (1u64 << (odd_count % 64)) - 1;
    }
    let clear = |bits: &mut [u64], i: usize| bits[i / 64] &= !(1u64 << (i % 64));
    if first_odd == 1 && odd_count > 0 {
        clear(&mut bits, 0);
    }
    for &p in base.iter().skip(1) {
        if p.saturating_mul(p) > hi {
            break;
        }
        // first odd multiple of p that is >= max(p^2, first_odd)
        let mut start = (first_odd.div_ceil(p) * p).max(p * p);
        if start % 2 == 0 {
            start += p;
        }
        if start > hi {
            continue;
        }
        let mut i = ((start - first_odd) / 2) as usize;
        let step = p as usize;
        while i < odd_count {
            clear(&mut bits, i);
            i += step;
        }
    }
    PrimeSegment {
        lo,
        hi,
        bits,
        first_odd,
        odd_count,
    }
}

/// Primes in `[lo, hi]` as a single segment (empty when `lo > hi`).
pub fn primes_in_range(lo: u64, hi: u64) -> PrimeSegment {
    if lo > hi {
        return PrimeSegment::empty(lo, hi);
    }
    let base = primes_up_to(integer_kth_root(hi, 2));
    let first_odd = lo.max(1) | 1;
    let odd_count = if first_odd > hi {
        0
    } else {
        ((hi - first_odd) / 2 + 1) as usize
    };
    sieve_segment(&base, lo, hi, first_odd, odd_count)
}
