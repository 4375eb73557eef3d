#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace basephi {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element a + b*phi of Z[phi], phi = (1 + sqrt 5) / 2.
///
/// phi is irrational, so (a, b) is the unique coordinate pair of the value and
/// equality is componentwise. Ordering is the real ordering, decided with
/// integer arithmetic only.
class GoldenInteger {
public:
    GoldenInteger() = default;
    GoldenInteger(BigInt unit, BigInt phi) : unit_(std::move(unit)), phi_(std::move(phi)) {}

    static GoldenInteger from_integer(BigInt n) { return {std::move(n), 0}; }
    static GoldenInteger phi() { return {0, 1}; }

    const BigInt& unit() const noexcept { return unit_; }
    const BigInt& phi_coefficient() const noexcept { return phi_; }

    /// True when the value is an integer (phi-coefficient zero).
    bool is_integer() const { return phi_.is_zero(); }

    /// -1, 0 or +1.
    int sign() const;

    GoldenInteger& operator+=(const GoldenInteger& rhs);
    GoldenInteger& operator-=(const GoldenInteger& rhs);
    GoldenInteger& operator*=(const GoldenInteger& rhs);

    friend GoldenInteger operator+(GoldenInteger lhs, const GoldenInteger& rhs) { return lhs += rhs; }
    friend GoldenInteger operator-(GoldenInteger lhs, const GoldenInteger& rhs) { return lhs -= rhs; }
    friend GoldenInteger operator*(GoldenInteger lhs, const GoldenInteger& rhs) { return lhs *= rhs; }
    friend GoldenInteger operator-(const GoldenInteger& x) { return {-x.unit_, -x.phi_}; }

    friend bool operator==(const GoldenInteger&, const GoldenInteger&) = default;
    friend std::strong_ordering operator<=>(const GoldenInteger& x, const GoldenInteger& y);

    /// "a+b*phi" style text, used in diagnostics.
    std::string to_string() const;

private:
    BigInt unit_;
    BigInt phi_;
};

std::ostream& operator<<(std::ostream& os, const GoldenInteger& x);

GoldenInteger golden_add(const GoldenInteger& x, const GoldenInteger& y);
GoldenInteger golden_mul(const GoldenInteger& x, const GoldenInteger& y);
std::strong_ordering golden_compare(const GoldenInteger& x, const GoldenInteger& y);

/// F_n for any integer n, with F_{-n} = (-1)^{n+1} F_n.
BigInt fibonacci(std::int64_t n);

/// L_n for n >= 0 (L_0 = 2, L_1 = 1). Throws DomainError for negative n.
BigInt lucas(std::int64_t n);

/// phi^j = F_j * phi + F_{j-1}, any integer j.
GoldenInteger phi_power(std::int64_t j);

}  // namespace basephi
