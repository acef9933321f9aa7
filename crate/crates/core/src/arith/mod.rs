//! Exact 64-bit integer number theory.

mod mangoldt;
mod primality;
mod root;
mod sieve;

pub use mangoldt::{mangoldt_weights, prime_power_base, WeightEntry};
pub use primality::{is_prime, is_prime_trial};
pub use root::{checked_pow, integer_kth_root, integer_kth_root_ceil};
pub use sieve::{primes_in_range, primes_up_to, PrimeSegment, SegmentedSieve, DEFAULT_SEGMENT_SIZE};
