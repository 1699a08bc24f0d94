#include "zeta/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "zeta/errors.hpp"

namespace zeta {

namespace {

constexpr std::uint64_t kSegmentSpan = std::uint64_t(1) << 21;

// Odd-only sieve of [2, limit]; returns all primes up to limit.
std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    const std::uint64_t half = (limit - 1) / 2;  // index i represents 2i+1
    std::vector<bool> composite(half + 1, false);
    primes.push_back(2);
    for (std::uint64_t i = 1; i <= half; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        primes.push_back(p);
        if (p * p > limit) continue;
        for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
    }
    return primes;
}

}  // namespace

std::uint64_t nth_prime_upper_bound(std::uint64_t n) {
    static constexpr std::uint64_t small[] = {0, 2, 3, 5, 7, 11};
    if (n < 6) return small[n];
    const double nd = static_cast<double>(n);
    const double bound = nd * (std::log(nd) + std::log(std::log(nd)));
    return static_cast<std::uint64_t>(bound) + 2;
}

PrimeBlock first_n_primes(std::uint64_t n) {
    if (n == 0) throw DomainError("prime count must be positive");
    if (n > kMaxPrimeCount) throw ResourceLimitError("prime count exceeds 2^31 guard");

    const std::uint64_t limit = nth_prime_upper_bound(n);
    PrimeBlock block;
    block.start_index = 1;
    block.primes.reserve(n);

    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;
    const std::vector<std::uint64_t> base = simple_sieve(root);

    if (n >= 1) block.primes.push_back(2);
    std::vector<bool> composite;
    for (std::uint64_t low = 3; low <= limit && block.primes.size() < n; low += kSegmentSpan) {
        const std::uint64_t high = std::min(low + kSegmentSpan - 1, limit);
        const std::uint64_t count = (high - low) / 2 + 1;  // odd numbers in [low, high]
        composite.assign(count, false);
        for (const std::uint64_t p : base) {
            if (p == 2) continue;
            if (p * p > high) break;
            std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
            if (start % 2 == 0) start += p;
            for (std::uint64_t m = start; m <= high; m += 2 * p) composite[(m - low) / 2] = true;
        }
        for (std::uint64_t i = 0; i < count && block.primes.size() < n; ++i) {
            if (!composite[i]) block.primes.push_back(low + 2 * i);
        }
    }
    // The Rosser-type bound contains the nth prime for all supported n.
    if (block.primes.size() != n) throw ResourceLimitError("sieve bound undershot the nth prime");
    return block;
}

std::vector<PrimeBlock> prime_blocks(std::uint64_t n_total, std::uint64_t block_size) {
    if (block_size == 0) throw DomainError("block size must be positive");
    PrimeBlock all = first_n_primes(n_total);
    std::vector<PrimeBlock> blocks;
    blocks.reserve((n_total + block_size - 1) / block_size);
    for (std::uint64_t begin = 0; begin < n_total; begin += block_size) {
        const std::uint64_t end = std::min(begin + block_size, n_total);
        PrimeBlock b;
        b.start_index = begin + 1;
        b.primes.assign(all.primes.begin() + static_cast<std::ptrdiff_t>(begin),
                        all.primes.begin() + static_cast<std::ptrdiff_t>(end));
        blocks.push_back(std::move(b));
    }
    return blocks;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace zeta
