#pragma once

// Generating functions for the two Rogers-Ramanujan identities and for the
// part-count statistics attached to them, as truncated series.

#include <cstddef>
#include <stdexcept>

#include "rrbeck/series.hpp"

namespace rrbeck {

namespace detail {

// sum_{m>=0} weight(m) q^{m^2 + shift*m} / (q;q)_{m + extra}
template <typename Weight>
TruncatedSeries staircase_sum(std::size_t order, std::size_t shift, std::size_t extra,
                              const Weight& weight)
{
    TruncatedSeries total(order);
    // inverse_poch = 1/(q;q)_{m+extra}, extended one factor per step
    auto inverse_poch = TruncatedSeries::constant(1, order);
    for (std::size_t j = 1; j <= extra; ++j)
        inverse_poch.divide_by_one_minus_q_power(j);
    for (std::size_t m = 0; m * m + shift * m <= order; ++m) {
        if (m > 0)
            inverse_poch.divide_by_one_minus_q_power(m + extra);
        total += inverse_poch.shifted(m * m + shift * m) * weight(m);
    }
    return total;
}

// sum_{m>=1} [q^{5m-r1}/(1-q^{5m-r1}) + q^{5m-r2}/(1-q^{5m-r2})]
inline TruncatedSeries residue_tails(std::size_t r1, std::size_t r2, std::size_t order)
{
    TruncatedSeries total(order);
    for (std::size_t m = 1; 5 * m - std::max(r1, r2) <= order; ++m) {
        total += geometric_tail(5 * m - r1, order);
        total += geometric_tail(5 * m - r2, order);
    }
    return total;
}

} // namespace detail

/// sum_n q^{n^2}/(q;q)_n
inline TruncatedSeries rr1_sum_side(std::size_t order)
{
    return detail::staircase_sum(order, 0, 0, [](std::size_t) { return BigInt{1}; });
}

/// 1/((q;q^5)_inf (q^4;q^5)_inf)
inline TruncatedSeries rr1_product_side(std::size_t order)
{
    return invert(pochhammer_infinite(1, 5, order) * pochhammer_infinite(4, 5, order));
}

/// sum_n q^{n^2+n}/(q;q)_n
inline TruncatedSeries rr2_sum_side(std::size_t order)
{
    return detail::staircase_sum(order, 1, 0, [](std::size_t) { return BigInt{1}; });
}

/// 1/((q^2;q^5)_inf (q^3;q^5)_inf)
inline TruncatedSeries rr2_product_side(std::size_t order)
{
    return invert(pochhammer_infinite(2, 5, order) * pochhammer_infinite(3, 5, order));
}

/// Total number of parts over partitions into parts = +-1 mod 5.
inline TruncatedSeries t1_series(std::size_t order)
{
    return rr1_sum_side(order) * detail::residue_tails(1, 4, order);
}

/// Total number of parts over super-distinct partitions: sum_n n q^{n^2}/(q;q)_n.
inline TruncatedSeries t2_series(std::size_t order)
{
    return detail::staircase_sum(order, 0, 0, [](std::size_t m) { return BigInt{m}; });
}

/// Total number of parts over partitions into parts = +-2 mod 5.
inline TruncatedSeries s1_series(std::size_t order)
{
    return rr2_sum_side(order) * detail::residue_tails(2, 3, order);
}

/// Total number of parts over super-distinct partitions with parts > 1.
inline TruncatedSeries s2_series(std::size_t order)
{
    return detail::staircase_sum(order, 1, 0, [](std::size_t m) { return BigInt{m}; });
}

/// Closed forms for the four a = 1 cases (b-1 in lambda only, b+1 in lambda
/// only, both, b in lambda). Each is
///   sum_{m>=1} q^{m^2}/(q;q)_{m+1} * inner_m(q)
/// with inner_m a polynomial depending on the case.
inline TruncatedSeries case_closed_form(int which, std::size_t order)
{
    if (which < 1 || which > 4)
        throw std::invalid_argument("case_closed_form: case must be 1..4");
    const auto inner = [&](std::size_t m) {
        TruncatedSeries poly(order);
        switch (which) {
        case 1:
        case 2:
            // sum_{j=1}^m q^{m+j} (1 - q^{m-j+1})
            for (std::size_t j = 1; j <= m; ++j)
                poly += TruncatedSeries::monomial(m + j, 1, order).multiply_by_one_minus_q_power(m - j + 1);
            break;
        case 3:
            // sum_{j=2}^m q^{2j-2} (1 - q^{m-j+1}) (1 - q^{m-j+2})
            for (std::size_t j = 2; j <= m; ++j)
                poly += TruncatedSeries::monomial(2 * j - 2, 1, order)
                            .multiply_by_one_minus_q_power(m - j + 1)
                            .multiply_by_one_minus_q_power(m - j + 2);
            break;
        case 4:
            // sum_{j=1}^m q^{2j-1} (1 - q^{m-j+1})
            for (std::size_t j = 1; j <= m; ++j)
                poly += TruncatedSeries::monomial(2 * j - 1, 1, order).multiply_by_one_minus_q_power(m - j + 1);
            break;
        }
        return poly;
    };

    TruncatedSeries total(order);
    auto inverse_poch = TruncatedSeries::constant(1, order);
    inverse_poch.divide_by_one_minus_q_power(1);
    for (std::size_t m = 1; m * m <= order; ++m) {
        inverse_poch.divide_by_one_minus_q_power(m + 1);  // 1/(q;q)_{m+1}
        total += inverse_poch.shifted(m * m) * inner(m);
    }
    return total;
}

/// Pairs (lambda, (a^b)) with lambda super-distinct, a = +-1 mod 5 and a > 1:
/// R_1(1;q) * (q^4/(1-q^4) + sum_{m>=2} [q^{5m-1}/(1-q^{5m-1}) + q^{5m-4}/(1-q^{5m-4})]).
inline TruncatedSeries case5_series(std::size_t order)
{
    auto tails = geometric_tail(4, order);
    for (std::size_t m = 2; 5 * m - 4 <= order; ++m) {
        tails += geometric_tail(5 * m - 1, order);
        tails += geometric_tail(5 * m - 4, order);
    }
    return rr1_sum_side(order) * tails;
}

/// q/(1-q) * R_1(1;q) - T_2(q): the combined generating function of cases 1-4.
inline TruncatedSeries cases_1to4_telescoped(std::size_t order)
{
    return rr1_sum_side(order) * geometric_tail(1, order) - t2_series(order);
}

} // namespace rrbeck
