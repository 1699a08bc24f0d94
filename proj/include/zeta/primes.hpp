#pragma once

#include <cstdint>
#include <vector>

namespace zeta {

inline constexpr std::uint64_t kMaxPrimeCount = std::uint64_t(1) << 31;
inline constexpr std::uint64_t kDefaultBlockSize = 4096;

/// A contiguous, gap-free run of primes: primes.front() is the
/// start_index-th prime (1-based), and the elements are strictly increasing.
struct PrimeBlock {
    std::uint64_t start_index = 1;
    std::vector<std::uint64_t> primes;
};

/// The first n primes starting at p_1 = 2. Throws ResourceLimitError for
/// n > 2^31 and DomainError for n = 0.
PrimeBlock first_n_primes(std::uint64_t n);

/// Partition of first_n_primes(n_total) into blocks of block_size primes
/// (the last block may be shorter).
std::vector<PrimeBlock> prime_blocks(std::uint64_t n_total, std::uint64_t block_size);

/// Rosser-type upper bound on the nth prime: n(ln n + ln ln n) for n >= 6,
/// a fixed small table below that.
std::uint64_t nth_prime_upper_bound(std::uint64_t n);

/// Deterministic trial-division primality check (intended for tests and the
/// von Staudt-Clausen property, not for bulk generation).
bool is_prime_u64(std::uint64_t n);

}  // namespace zeta
