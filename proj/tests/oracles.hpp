#pragma once

// Brute-force reference routines for tests. Deliberately naive and
// independent of the library's code paths.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline bool trial_division_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// Smallest t with r^t = 1 mod q by repeated multiplication.
inline std::uint64_t order_by_iteration(std::uint64_t r, std::uint64_t q) {
    std::uint64_t x = r % q;
    std::uint64_t t = 1;
    while (x != 1) {
        x = x * r % q;
        ++t;
    }
    return t;
}

// C(k) straight from the definition, circular or not, in doubles.
inline std::vector<double> correlation_by_definition(const std::vector<int>& s, bool circular) {
    const std::size_t n = s.size();
    std::vector<double> c;
    for (std::size_t k = 1; k < n; ++k) {
        double acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!circular && j + k >= n)
                break;
            acc += s[j] * s[(j + k) % n];
        }
        c.push_back(acc / static_cast<double>(n));
    }
    return c;
}

inline double randomness_by_definition(const std::vector<int>& s, bool circular = true) {
    const auto c = correlation_by_definition(s, circular);
    double total = 0;
    for (double v : c)
        total += std::fabs(v);
    return 1.0 - total / static_cast<double>(s.size() - 1);
}

inline std::vector<int> bipolar(const std::vector<int>& bits) {
    std::vector<int> out;
    for (int b : bits)
        out.push_back(b ? 1 : -1);
    return out;
}

}  // namespace oracle
