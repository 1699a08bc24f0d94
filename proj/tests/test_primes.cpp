#include <doctest.h>

#include <cmath>
#include <random>

#include "zeta/errors.hpp"
#include "zeta/primes.hpp"

using zeta::PrimeBlock;

TEST_CASE("first primes") {
    CHECK(zeta::first_n_primes(1).primes == std::vector<std::uint64_t>{2});
    CHECK(zeta::first_n_primes(3).primes == std::vector<std::uint64_t>{2, 3, 5});
    const PrimeBlock b = zeta::first_n_primes(1000);
    REQUIRE(b.primes.size() == 1000);
    CHECK(b.start_index == 1);
    CHECK(b.primes.back() == 7919);
    CHECK_THROWS_AS(zeta::first_n_primes(0), zeta::DomainError);
    CHECK_THROWS_AS(zeta::first_n_primes((std::uint64_t(1) << 31) + 1),
                    zeta::ResourceLimitError);
}

TEST_CASE("blocks partition the sequence") {
    const auto blocks = zeta::prime_blocks(5, 2);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].primes == std::vector<std::uint64_t>{2, 3});
    CHECK(blocks[1].primes == std::vector<std::uint64_t>{5, 7});
    CHECK(blocks[2].primes == std::vector<std::uint64_t>{11});
    CHECK(blocks[1].start_index == 3);
    CHECK(blocks[2].start_index == 5);

    CHECK(zeta::prime_blocks(1000, 1000).size() == 1);
    const auto uneven = zeta::prime_blocks(10, 3);
    REQUIRE(uneven.size() == 4);
    CHECK(uneven[3].primes.size() == 1);

    const auto whole = zeta::first_n_primes(1000).primes;
    std::vector<std::uint64_t> glued;
    for (const auto& blk : zeta::prime_blocks(1000, 64)) {
        glued.insert(glued.end(), blk.primes.begin(), blk.primes.end());
    }
    CHECK(glued == whole);
}

TEST_CASE("determinism") {
    CHECK(zeta::first_n_primes(5000).primes == zeta::first_n_primes(5000).primes);
}

TEST_CASE("random ordinals agree with a trial-division oracle") {
    const auto all = zeta::first_n_primes(1'000'000).primes;
    REQUIRE(all.size() == 1'000'000);
    std::mt19937_64 rng(7919);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const size_t idx = pick(rng);
        CAPTURE(idx);
        CHECK(zeta::is_prime_u64(all[idx]));
        if (idx > 0) {
            // gap-free: no prime strictly between consecutive elements
            for (std::uint64_t m = all[idx - 1] + 1; m < all[idx]; ++m) {
                CHECK_FALSE(zeta::is_prime_u64(m));
            }
        }
    }
}

TEST_CASE("sizing bound contains the nth prime") {
    for (std::uint64_t n : {std::uint64_t(6), std::uint64_t(100), std::uint64_t(1000),
                            std::uint64_t(100000)}) {
        CAPTURE(n);
        const auto b = zeta::first_n_primes(n);
        CHECK(b.primes.back() <= zeta::nth_prime_upper_bound(n));
    }
}
