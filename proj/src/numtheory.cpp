#include "dseq/numtheory.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dseq {

Modulus::Modulus(std::uint64_t q) : q_(q) {
    if (q < 3 || q % 2 == 0)
        throw std::domain_error("modulus must be odd and at least 3, got " + std::to_string(q));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m < 2)
        throw std::domain_error("mod_pow: modulus must be at least 2");
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

// n odd, n > 2; false means composite for certain.
bool passes_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    std::uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    // First 12 primes as witnesses are sufficient below 3.3e24.
    constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2)
        return false;
    for (auto p : witnesses) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : witnesses)
        if (!passes_witness(n, a, d, s))
            return false;
    return true;
}

std::vector<PrimePower> factor(std::uint64_t n) {
    std::vector<PrimePower> out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.push_back({p, e});
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel; p <= n / p avoids overflow of p * p.
    for (std::uint64_t p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t phi = n;
    for (auto [p, e] : factor(n))
        phi = phi / p * (p - 1);
    return phi;
}

std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t q, OrderMethod method) {
    if (q < 2)
        throw std::domain_error("multiplicative_order: modulus must be at least 2");
    if (std::gcd(r, q) != 1)
        throw std::domain_error("base and denominator share a factor");
    if (q == 2)
        return 1;

    if (method == OrderMethod::naive) {
        const std::uint64_t base = r % q;
        std::uint64_t x = base;
        std::uint64_t t = 1;
        while (x != 1) {
            x = mul_mod(x, base, q);
            ++t;
        }
        return t;
    }

    const std::uint64_t phi = is_prime(q) ? q - 1 : totient(q);
    std::uint64_t t = phi;
    for (auto [p, e] : factor(phi)) {
        for (unsigned i = 0; i < e && t % p == 0; ++i) {
            if (mod_pow(r, t / p, q) != 1)
                break;
            t /= p;
        }
    }
    return t;
}

SequenceClass class_for_order(std::uint64_t q, std::uint64_t order) noexcept {
    if (order == q - 1)
        return SequenceClass::maximum_length;
    if ((q - 1) % 2 == 0 && order == (q - 1) / 2)
        return SequenceClass::half_length;
    return SequenceClass::other;
}

Classification classify(std::uint64_t q, std::uint64_t r) {
    if (!is_prime(q))
        throw std::domain_error("classification requires a prime modulus, got " + std::to_string(q));
    const auto order = multiplicative_order(r, q);
    return {class_for_order(q, order), order};
}

std::string_view to_string(SequenceClass cls) noexcept {
    switch (cls) {
    case SequenceClass::maximum_length: return "max";
    case SequenceClass::half_length: return "half";
    case SequenceClass::other: return "other";
    }
    return "other";
}

std::vector<std::uint64_t> iterate_odds(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit > 3)
        out.reserve((limit - 2) / 2);
    for (std::uint64_t q = 3; q < limit; q += 2)
        out.push_back(q);
    return out;
}

std::vector<std::uint64_t> iterate_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit <= 3)
        return out;
    // Odd-only sieve: index i stands for 2i + 1.
    const std::uint64_t half = limit / 2;
    std::vector<bool> composite(half, false);
    for (std::uint64_t i = 1; i < half; ++i) {
        if (composite[i])
            continue;
        const std::uint64_t p = 2 * i + 1;
        if (p >= limit)
            break;
        out.push_back(p);
        for (std::uint64_t m = p * p; m < limit; m += 2 * p)
            composite[m / 2] = true;
    }
    return out;
}

}  // namespace dseq
