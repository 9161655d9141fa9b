#pragma once

// Truncated formal power series in q with exact integer coefficients, plus
// the q-Pochhammer and Gaussian binomial primitives built on top of them.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rrbeck {

using BigInt = boost::multiprecision::cpp_int;

class NonUnitConstantTerm : public std::domain_error {
public:
    NonUnitConstantTerm()
        : std::domain_error("series constant term is not a unit (+1 or -1)")
    {}
};

/// Power series sum_{i=0}^{order} c_i q^i. Everything past q^order is dropped,
/// and binary operations work at the smaller of the two operand orders.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = 0)
        : coeffs_(order + 1)
    {}

    TruncatedSeries(std::vector<BigInt> coeffs, std::size_t order)
        : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1);
    }

    static TruncatedSeries constant(BigInt value, std::size_t order)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(value);
        return s;
    }

    /// value * q^exponent, or zero when exponent > order.
    static TruncatedSeries monomial(std::size_t exponent, BigInt value, std::size_t order)
    {
        TruncatedSeries s(order);
        if (exponent <= order)
            s.coeffs_[exponent] = std::move(value);
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of q^i; zero beyond the order.
    BigInt operator[](std::size_t i) const { return i <= order() ? coeffs_[i] : BigInt{0}; }

    /// Mutable access for builders. i must not exceed order().
    BigInt& at(std::size_t i) { return coeffs_.at(i); }

    bool operator==(const TruncatedSeries&) const = default;

    TruncatedSeries truncated(std::size_t order) const
    {
        TruncatedSeries s(std::min(order, this->order()));
        std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
        return s;
    }

    /// Multiply by q^k.
    TruncatedSeries shifted(std::size_t k) const
    {
        TruncatedSeries s(order());
        for (std::size_t i = k; i <= order(); ++i)
            s.coeffs_[i] = coeffs_[i - k];
        return s;
    }

    /// Multiply by 1/(1 - q^k), k >= 1, in place: b_i = a_i + b_{i-k}.
    TruncatedSeries& divide_by_one_minus_q_power(std::size_t k)
    {
        if (k == 0)
            throw NonUnitConstantTerm();
        for (std::size_t i = k; i <= order(); ++i)
            coeffs_[i] += coeffs_[i - k];
        return *this;
    }

    /// Multiply by (1 - q^k) in place.
    TruncatedSeries& multiply_by_one_minus_q_power(std::size_t k)
    {
        if (k == 0) {
            std::fill(coeffs_.begin(), coeffs_.end(), BigInt{0});
            return *this;
        }
        for (std::size_t i = order(); i >= k; --i)
            coeffs_[i] -= coeffs_[i - k];
        return *this;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    TruncatedSeries& operator*=(const BigInt& scalar)
    {
        for (auto& c : coeffs_)
            c *= scalar;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const BigInt& s) { return a *= s; }

    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (b.coeffs_[j] != 0)
                    r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

private:
    std::vector<BigInt> coeffs_;
};

inline TruncatedSeries series_from_coeffs(std::vector<BigInt> coeffs, std::size_t order)
{
    return TruncatedSeries(std::move(coeffs), order);
}

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) { return a - b; }
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

/// Multiplicative inverse of a series whose constant term is +1 or -1.
/// Solves sum_{i<=n} a_i b_{n-i} = [n == 0] for b one coefficient at a time.
inline TruncatedSeries invert(const TruncatedSeries& a)
{
    const BigInt& a0 = a.coeffs()[0];
    if (a0 != 1 && a0 != -1)
        throw NonUnitConstantTerm();
    const auto ac = a.coeffs();
    TruncatedSeries b(a.order());
    b.at(0) = a0;  // 1/a0 == a0 for a unit
    for (std::size_t n = 1; n <= a.order(); ++n) {
        BigInt acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (ac[i] != 0)
                acc += ac[i] * b.coeffs()[n - i];
        }
        b.at(n) = -a0 * acc;
    }
    return b;
}

/// prod_{j=0}^{n-1} (1 - q^{start + j*step}).
inline TruncatedSeries pochhammer_finite(std::size_t start, std::size_t step, std::size_t n,
                                         std::size_t order)
{
    auto s = TruncatedSeries::constant(1, order);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t e = start + j * step;
        if (e > order)
            break;
        s.multiply_by_one_minus_q_power(e);
    }
    return s;
}

/// (q^start; q^step)_infinity truncated at order. start >= 1, step >= 1.
inline TruncatedSeries pochhammer_infinite(std::size_t start, std::size_t step, std::size_t order)
{
    if (start == 0 || step == 0)
        throw std::invalid_argument("pochhammer_infinite: start and step must be positive");
    std::size_t factors = 0;
    while (start + factors * step <= order)
        ++factors;
    return pochhammer_finite(start, step, factors, order);
}

/// q^a + q^{2a} + ... = q^a / (1 - q^a), a >= 1.
inline TruncatedSeries geometric_tail(std::size_t a, std::size_t order)
{
    if (a == 0)
        throw std::invalid_argument("geometric_tail: a must be positive");
    TruncatedSeries s(order);
    for (std::size_t e = a; e <= order; e += a)
        s.at(e) = 1;
    return s;
}

/// The Gaussian polynomial [A+k choose k]_q, i.e. the generating function of
/// partitions with at most k parts, each at most A. Zero if A < 0, k < 0 or A+k < 0.
inline TruncatedSeries gaussian_binomial(long A, long k, std::size_t order)
{
    if (A < 0 || k < 0)
        return TruncatedSeries(order);
    // row[j] holds G(a, j) for the current a; G(a, j) = G(a, j-1) + q^j G(a-1, j).
    std::vector<TruncatedSeries> row(static_cast<std::size_t>(k) + 1,
                                     TruncatedSeries::constant(1, order));
    for (long a = 1; a <= A; ++a) {
        for (long j = 1; j <= k; ++j) {
            auto& cur = row[static_cast<std::size_t>(j)];
            cur = row[static_cast<std::size_t>(j - 1)] + cur.shifted(static_cast<std::size_t>(j));
        }
    }
    return row[static_cast<std::size_t>(k)];
}

} // namespace rrbeck
