#include "zeta/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace zeta {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<BigRational>& bernoulli_table() {
    static std::vector<BigRational> table{BigRational(1, 1)};  // B_0
    return table;
}

std::mutex g_factorial_mutex;
std::vector<BigInt>& factorial_table() {
    static std::vector<BigInt> table{BigInt(1)};  // 0!
    return table;
}

}  // namespace

BigRational bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    auto& table = bernoulli_table();
    while (table.size() <= n) {
        const unsigned m = static_cast<unsigned>(table.size());
        // B_m = -1/(m+1) * sum_{j=0..m-1} C(m+1, j) B_j
        BigRational sum;
        for (unsigned j = 0; j < m; ++j) {
            if (j > 1 && j % 2 == 1) continue;  // odd Bernoulli numbers above 1 vanish
            sum += BigRational(binomial(m + 1, j)) * table[j];
        }
        table.push_back(sum / BigRational(-static_cast<long>(m) - 1, 1));
    }
    return table[n];
}

BigInt factorial(unsigned n) {
    std::lock_guard<std::mutex> lock(g_factorial_mutex);
    auto& table = factorial_table();
    while (table.size() <= n) {
        const unsigned m = static_cast<unsigned>(table.size());
        table.push_back(table[m - 1] * BigInt(static_cast<long>(m)));
    }
    return table[n];
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.raw(), n, k);
    return r;
}

}  // namespace zeta
