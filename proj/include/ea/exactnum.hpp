#pragma once

// Exact scalars: arbitrary-precision rationals, the real quadratic field
// Q(sqrt 5), and univariate polynomials over the rationals.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ea {

/// Rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class value);

    /// Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::string to_string() const { return value_.get_str(); }
    std::size_t hash() const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element a + b*sqrt(5) of the real quadratic field, sqrt(5) taken positive.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(long a) : a_(a) {}                 // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    /// The golden ratio (1 + sqrt 5) / 2.
    static QuadExt phi() { return {Rational(1, 2), Rational(1, 2)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt operator-() const { return {-a_, -b_}; }
    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);
    QuadExt& operator/=(const QuadExt& rhs);

    friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
    friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
    friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
    friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) = default;
    /// Order of the real numbers under the positive embedding.
    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

    QuadExt inverse() const;
    /// a - b*sqrt5
    QuadExt conjugate() const { return {a_, -b_}; }
    /// a^2 - 5 b^2
    Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

    /// "a + b*sqrt5" with the sign folded into the operator; plain "a" when b = 0
    std::string to_string() const;

private:
    Rational a_;
    Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

/// Sign of a + b*sqrt(5) as a real number, decided exactly.
int quad_sign(const QuadExt& x);

/// Univariate polynomial in t with rational coefficients; index = degree.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    Poly(Rational c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coefficients);

    /// The monomial t.
    static Poly t();
    /// c0 + c1*t
    static Poly linear(const Rational& c0, const Rational& c1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of t^k, zero outside the stored range.
    Rational coefficient(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator/=(const Rational& c);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
    friend Poly operator/(Poly lhs, const Rational& c) { return lhs /= c; }

    friend bool operator==(const Poly& p, const Poly& q) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// p (p+1) ... (p+k-1); the empty product for k = 0 is 1.
Poly rising_factorial(const Poly& p, unsigned k);

/// Binomial coefficient C(n, k) as a rational (zero when k < 0 or k > n).
Rational binomial(long n, long k);

}  // namespace ea

template <>
struct std::hash<ea::Rational> {
    std::size_t operator()(const ea::Rational& r) const noexcept { return r.hash(); }
};
