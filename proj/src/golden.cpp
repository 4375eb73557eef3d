#include "basephi/golden.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "basephi/errors.hpp"

namespace basephi {

namespace {

// Sign of p + q*sqrt(5).
int sign_with_sqrt5(const BigInt& p, const BigInt& q) {
    const int sp = p.sign();
    const int sq = q.sign();
    if (sp >= 0 && sq >= 0) {
        return (sp == 0 && sq == 0) ? 0 : 1;
    }
    if (sp <= 0 && sq <= 0) {
        return -1;
    }
    // Opposite signs: |p| versus |q|*sqrt(5). Equality would make sqrt(5) rational.
    const BigInt p2 = p * p;
    const BigInt q2 = 5 * q * q;
    if (sp > 0) {
        return p2 > q2 ? 1 : -1;
    }
    return q2 > p2 ? 1 : -1;
}

}  // namespace

int GoldenInteger::sign() const {
    // a + b*phi = ((2a + b) + b*sqrt(5)) / 2
    return sign_with_sqrt5(2 * unit_ + phi_, phi_);
}

GoldenInteger& GoldenInteger::operator+=(const GoldenInteger& rhs) {
    unit_ += rhs.unit_;
    phi_ += rhs.phi_;
    return *this;
}

GoldenInteger& GoldenInteger::operator-=(const GoldenInteger& rhs) {
    unit_ -= rhs.unit_;
    phi_ -= rhs.phi_;
    return *this;
}

GoldenInteger& GoldenInteger::operator*=(const GoldenInteger& rhs) {
    // phi^2 = phi + 1
    const BigInt bb = phi_ * rhs.phi_;
    BigInt unit = unit_ * rhs.unit_ + bb;
    BigInt phi = unit_ * rhs.phi_ + rhs.unit_ * phi_ + bb;
    unit_ = std::move(unit);
    phi_ = std::move(phi);
    return *this;
}

std::strong_ordering operator<=>(const GoldenInteger& x, const GoldenInteger& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string GoldenInteger::to_string() const {
    std::ostringstream os;
    os << unit_ << (phi_.sign() < 0 ? "-" : "+") << abs(phi_) << "phi";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenInteger& x) { return os << x.to_string(); }

GoldenInteger golden_add(const GoldenInteger& x, const GoldenInteger& y) { return x + y; }

GoldenInteger golden_mul(const GoldenInteger& x, const GoldenInteger& y) { return x * y; }

std::strong_ordering golden_compare(const GoldenInteger& x, const GoldenInteger& y) { return x <=> y; }

BigInt fibonacci(std::int64_t n) {
    const bool negative = n < 0;
    const std::int64_t m = negative ? -n : n;
    BigInt a = 0;
    BigInt b = 1;
    for (std::int64_t i = 0; i < m; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    if (negative && m % 2 == 0) {
        a = -a;
    }
    return a;
}

BigInt lucas(std::int64_t n) {
    if (n < 0) {
        throw DomainError("lucas: index must be non-negative, got " + std::to_string(n));
    }
    BigInt a = 2;
    BigInt b = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

GoldenInteger phi_power(std::int64_t j) { return {fibonacci(j - 1), fibonacci(j)}; }

}  // namespace basephi
