#pragma once

// Sparse rational convolution through common denominators: numerators are
// multiplied as integers (128-bit when the l1 bound allows, GMP otherwise).

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "ea/exactnum.hpp"

namespace ea {

struct IntForm {
    std::vector<std::uint32_t> ids;
    std::vector<mpz_class> nums;
    mpz_class den = 1;
};

template <class C>
IntForm to_int_form(const C& a) {
    IntForm f;
    for (const auto& [id, c] : a) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), c.den().get_mpz_t());
    f.ids.reserve(a.size());
    f.nums.reserve(a.size());
    for (const auto& [id, c] : a) {
        f.ids.push_back(id);
        f.nums.push_back(c.num() * (f.den / c.den()));
    }
    return f;
}

inline mpz_class mpz_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi = static_cast<unsigned long>(u >> 64);
    mpz_class out = hi << 64;
    out += static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull);
    return neg ? mpz_class(-out) : out;
}

/// Whether every numerator fits in a signed 64-bit integer and the products'
/// l1 bound fits in 125 bits.
inline bool fits_i128(const IntForm& a, const IntForm& b) {
    mpz_class la, lb;
    for (const auto& x : a.nums) {
        if (!mpz_fits_slong_p(x.get_mpz_t())) return false;
        la += abs(x);
    }
    for (const auto& x : b.nums) {
        if (!mpz_fits_slong_p(x.get_mpz_t())) return false;
        lb += abs(x);
    }
    if (la == 0 || lb == 0) return true;
    return mpz_sizeinbase(la.get_mpz_t(), 2) + mpz_sizeinbase(lb.get_mpz_t(), 2) <= 125;
}

template <class C, class Prod>
C convolve(const C& a, const C& b, std::size_t n, Prod prod) {
    C out;
    if (a.is_zero() || b.is_zero()) return out;
    IntForm fa = to_int_form(a), fb = to_int_form(b);
    mpz_class den = fa.den * fb.den;
    if (fits_i128(fa, fb)) {
        std::vector<long> na(fa.nums.size()), nb(fb.nums.size());
        for (std::size_t i = 0; i < na.size(); ++i) na[i] = fa.nums[i].get_si();
        for (std::size_t j = 0; j < nb.size(); ++j) nb[j] = fb.nums[j].get_si();
        std::vector<__int128> acc(n, 0);
        std::vector<bool> touched(n, false);
        for (std::size_t i = 0; i < na.size(); ++i) {
            __int128 x = na[i];
            for (std::size_t j = 0; j < nb.size(); ++j) {
                std::uint32_t k = prod(fa.ids[i], fb.ids[j]);
                acc[k] += x * nb[j];
                touched[k] = true;
            }
        }
        for (std::size_t k = 0; k < n; ++k)
            if (touched[k] && acc[k] != 0) out.set(static_cast<std::uint32_t>(k), Rational(mpz_from_i128(acc[k]), den));
        return out;
    }
    std::vector<mpz_class> acc(n);
    std::vector<bool> touched(n, false);
    for (std::size_t i = 0; i < fa.nums.size(); ++i)
        for (std::size_t j = 0; j < fb.nums.size(); ++j) {
            std::uint32_t k = prod(fa.ids[i], fb.ids[j]);
            mpz_addmul(acc[k].get_mpz_t(), fa.nums[i].get_mpz_t(), fb.nums[j].get_mpz_t());
            touched[k] = true;
        }
    for (std::size_t k = 0; k < n; ++k)
        if (touched[k] && acc[k] != 0) out.set(static_cast<std::uint32_t>(k), Rational(acc[k], den));
    return out;
}

}  // namespace ea
