#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rrbeck {

using Part = int;

class NotSuperDistinct : public std::invalid_argument {
public:
    NotSuperDistinct()
        : std::invalid_argument("partition parts are not super-distinct")
    {}
};

/// A partition stored largest part first. Parts past the length read as 0.
class Partition {
public:
    Partition() = default;

    /// Takes parts already in non-increasing order.
    explicit Partition(std::vector<Part> parts)
        : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be non-increasing");
        }
    }

    Partition(std::initializer_list<Part> parts)
        : Partition(std::vector<Part>(parts))
    {}

    /// Sorts the given parts; zero parts are dropped.
    static Partition from_multiset(std::vector<Part> parts)
    {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    std::span<const Part> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// lambda_i, 1-based, with lambda_i = 0 for i > length().
    Part part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    bool contains(Part v) const { return std::find(parts_.begin(), parts_.end(), v) != parts_.end(); }

    std::size_t multiplicity(Part v) const
    {
        return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), v));
    }

    bool is_distinct() const
    {
        return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
    }

    bool is_super_distinct() const
    {
        for (std::size_t i = 1; i < parts_.size(); ++i) {
            if (parts_[i - 1] - parts_[i] < 2)
                return false;
        }
        return true;
    }

    /// Inserts copies of v (v > 0) keeping the order.
    Partition with_part(Part v, std::size_t copies = 1) const
    {
        if (v <= 0)
            throw std::invalid_argument("inserted part must be positive");
        auto parts = parts_;
        auto pos = std::find_if(parts.begin(), parts.end(), [v](Part p) { return p < v; });
        parts.insert(pos, copies, v);
        return Partition(std::move(parts));
    }

    /// Removes one copy of v; throws if v is not a part.
    Partition without_part(Part v) const
    {
        auto parts = parts_;
        auto it = std::find(parts.begin(), parts.end(), v);
        if (it == parts.end())
            throw std::invalid_argument("part to remove is not present");
        parts.erase(it);
        return Partition(std::move(parts));
    }

    /// Replaces one copy of `from` by `to` and re-sorts.
    Partition with_replaced(Part from, Part to) const { return without_part(from).with_part(to); }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<Part> parts_;
};

/// A partition with one marked part. marked_index is 1-based.
class MarkedPartition {
public:
    MarkedPartition(Partition partition, std::size_t marked_index)
        : partition_(std::move(partition))
        , marked_index_(marked_index)
    {
        if (marked_index_ < 1 || marked_index_ > partition_.length())
            throw std::out_of_range("marked index outside the partition");
    }

    const Partition& partition() const noexcept { return partition_; }
    std::size_t marked_index() const noexcept { return marked_index_; }

    /// c: value of the marked part.
    Part marked_part() const { return partition_.part(marked_index_); }
    /// x: the part right after the marked one, 0 if the marked part is last.
    Part next_part() const { return partition_.part(marked_index_ + 1); }
    /// y = c - x.
    Part gap() const { return marked_part() - next_part(); }

    auto operator<=>(const MarkedPartition&) const = default;
    bool operator==(const MarkedPartition&) const = default;

private:
    Partition partition_;
    std::size_t marked_index_;
};

/// The pair (lambda, (a^b)).
struct RectPair {
    Partition lambda;
    Part a = 1;
    int b = 1;

    int size() const { return lambda.size() + a * b; }

    auto operator<=>(const RectPair&) const = default;
    bool operator==(const RectPair&) const = default;
};

enum class PartitionClass {
    All,
    OddParts,
    Distinct,
    SuperDistinct,
    SuperDistinctGt1,
    Mod5Pm1,
    Mod5Pm2,
    ExactlyOneEvenPart,
    ExactlyOneRepeatedPart,
};

inline constexpr PartitionClass kAllPartitionClasses[] = {
    PartitionClass::All,
    PartitionClass::OddParts,
    PartitionClass::Distinct,
    PartitionClass::SuperDistinct,
    PartitionClass::SuperDistinctGt1,
    PartitionClass::Mod5Pm1,
    PartitionClass::Mod5Pm2,
    PartitionClass::ExactlyOneEvenPart,
    PartitionClass::ExactlyOneRepeatedPart,
};

inline std::string to_string(PartitionClass c)
{
    switch (c) {
    case PartitionClass::All: return "ALL";
    case PartitionClass::OddParts: return "ODD_PARTS";
    case PartitionClass::Distinct: return "DISTINCT";
    case PartitionClass::SuperDistinct: return "SUPER_DISTINCT";
    case PartitionClass::SuperDistinctGt1: return "SUPER_DISTINCT_GT1";
    case PartitionClass::Mod5Pm1: return "MOD5_PM1";
    case PartitionClass::Mod5Pm2: return "MOD5_PM2";
    case PartitionClass::ExactlyOneEvenPart: return "EXACTLY_ONE_EVEN_PART";
    case PartitionClass::ExactlyOneRepeatedPart: return "EXACTLY_ONE_REPEATED_PART";
    }
    return "?";
}

inline bool is_mod5_pm1(Part p) { return p % 5 == 1 || p % 5 == 4; }
inline bool is_mod5_pm2(Part p) { return p % 5 == 2 || p % 5 == 3; }

inline bool in_class(const Partition& lambda, PartitionClass cls)
{
    const auto parts = lambda.parts();
    auto all_parts = [&](auto pred) { return std::all_of(parts.begin(), parts.end(), pred); };
    switch (cls) {
    case PartitionClass::All:
        return true;
    case PartitionClass::OddParts:
        return all_parts([](Part p) { return p % 2 == 1; });
    case PartitionClass::Distinct:
        return lambda.is_distinct();
    case PartitionClass::SuperDistinct:
        return lambda.is_super_distinct();
    case PartitionClass::SuperDistinctGt1:
        return lambda.is_super_distinct() && all_parts([](Part p) { return p > 1; });
    case PartitionClass::Mod5Pm1:
        return all_parts(is_mod5_pm1);
    case PartitionClass::Mod5Pm2:
        return all_parts(is_mod5_pm2);
    case PartitionClass::ExactlyOneEvenPart: {
        std::vector<Part> evens;
        std::copy_if(parts.begin(), parts.end(), std::back_inserter(evens),
                     [](Part p) { return p % 2 == 0; });
        return !evens.empty() && evens.front() == evens.back();
    }
    case PartitionClass::ExactlyOneRepeatedPart: {
        std::size_t repeated = 0;
        for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i])
                ++j;
            if (j - i >= 2)
                ++repeated;
            i = j;
        }
        return repeated == 1;
    }
    }
    return false;
}

namespace detail {

// Depth-first generation in lexicographically decreasing order. Consecutive
// parts differ by at least min_gap; only parts accepted by allowed are used.
template <typename Allowed, typename Emit>
void generate_partitions(int remaining, Part max_part, int min_gap, const Allowed& allowed,
                         std::vector<Part>& prefix, const Emit& emit)
{
    if (remaining == 0) {
        emit(prefix);
        return;
    }
    for (Part p = std::min(remaining, max_part); p >= 1; --p) {
        if (!allowed(p))
            continue;
        prefix.push_back(p);
        generate_partitions(remaining - p, p - min_gap, min_gap, allowed, prefix, emit);
        prefix.pop_back();
    }
}

} // namespace detail

/// Every partition of n in the class, in lexicographically decreasing order.
inline std::vector<Partition> enumerate(int n, PartitionClass cls)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    auto any = [](Part) { return true; };
    int gap = 0;
    std::function<bool(Part)> allowed = any;
    bool filter = false;
    switch (cls) {
    case PartitionClass::All: break;
    case PartitionClass::OddParts: allowed = [](Part p) { return p % 2 == 1; }; break;
    case PartitionClass::Distinct: gap = 1; break;
    case PartitionClass::SuperDistinct: gap = 2; break;
    case PartitionClass::SuperDistinctGt1:
        gap = 2;
        allowed = [](Part p) { return p > 1; };
        break;
    case PartitionClass::Mod5Pm1: allowed = is_mod5_pm1; break;
    case PartitionClass::Mod5Pm2: allowed = is_mod5_pm2; break;
    case PartitionClass::ExactlyOneEvenPart:
    case PartitionClass::ExactlyOneRepeatedPart: filter = true; break;
    }
    std::vector<Part> prefix;
    detail::generate_partitions(n, n, gap, allowed, prefix, [&](const std::vector<Part>& parts) {
        Partition p(parts);
        if (!filter || in_class(p, cls))
            out.push_back(std::move(p));
    });
    return out;
}

/// Total number of parts over all partitions of n in the class.
inline long total_parts(int n, PartitionClass cls)
{
    long total = 0;
    for (const auto& p : enumerate(n, cls))
        total += static_cast<long>(p.length());
    return total;
}

/// Every marked partition of n in the class: each partition once per part.
inline std::vector<MarkedPartition> enumerate_marked(int n, PartitionClass cls)
{
    std::vector<MarkedPartition> out;
    for (auto& p : enumerate(n, cls)) {
        for (std::size_t i = 1; i <= p.length(); ++i)
            out.emplace_back(p, i);
    }
    return out;
}

/// Pairs (lambda, (a^b)) with |lambda| + ab = n, lambda in lambda_cls and
/// rect_ok(a, b). Ordered by a, then b, then lambda as enumerated.
template <typename RectPredicate>
std::vector<RectPair> enumerate_rect_pairs(int n, PartitionClass lambda_cls,
                                           const RectPredicate& rect_ok)
{
    std::vector<RectPair> out;
    for (Part a = 1; a <= n; ++a) {
        for (int b = 1; a * b <= n; ++b) {
            if (!rect_ok(a, b))
                continue;
            for (auto& lambda : enumerate(n - a * b, lambda_cls))
                out.push_back(RectPair{std::move(lambda), a, b});
        }
    }
    return out;
}

/// Transpose of the Ferrers diagram.
inline Partition conjugate(const Partition& lambda)
{
    std::vector<Part> cols;
    const Part first = lambda.part(1);
    cols.reserve(static_cast<std::size_t>(first));
    for (Part j = 1; j <= first; ++j) {
        const auto parts = lambda.parts();
        cols.push_back(static_cast<Part>(
            std::count_if(parts.begin(), parts.end(), [j](Part p) { return p >= j; })));
    }
    return Partition(std::move(cols));
}

/// Componentwise sum, shorter partition padded with zeros.
inline Partition partition_sum(const Partition& lambda, const Partition& mu)
{
    const std::size_t len = std::max(lambda.length(), mu.length());
    std::vector<Part> parts(len);
    for (std::size_t i = 1; i <= len; ++i)
        parts[i - 1] = lambda.part(i) + mu.part(i);
    return Partition(std::move(parts));
}

/// mu with marked part a, the b-th copy of a, maps to (mu minus b copies of a, (a^b)).
inline RectPair marked_to_pair(const MarkedPartition& mu)
{
    const auto parts = mu.partition().parts();
    const Part a = mu.marked_part();
    const auto first = std::find(parts.begin(), parts.end(), a);
    const int b = static_cast<int>(mu.marked_index()) - static_cast<int>(first - parts.begin());
    std::vector<Part> rest(parts.begin(), first);
    rest.insert(rest.end(), first + b, parts.end());
    return RectPair{Partition(std::move(rest)), a, b};
}

/// Inverse of marked_to_pair: insert b copies of a and mark the b-th one.
inline MarkedPartition pair_to_marked(const RectPair& p)
{
    const auto parts = p.lambda.parts();
    const auto first_le = std::find_if(parts.begin(), parts.end(), [&](Part v) { return v <= p.a; });
    const auto index = static_cast<std::size_t>(first_le - parts.begin()) + static_cast<std::size_t>(p.b);
    return MarkedPartition(p.lambda.with_part(p.a, static_cast<std::size_t>(p.b)), index);
}

/// z_{u,lambda}: the largest part of lambda that is <= u, if any.
inline std::optional<Part> largest_part_at_most(const Partition& lambda, Part u)
{
    for (Part p : lambda.parts()) {
        if (p <= u)
            return p;
    }
    return std::nullopt;
}

/// delta_m = (2m-1, 2m-3, ..., 3, 1).
inline Partition staircase(std::size_t m)
{
    std::vector<Part> parts;
    for (std::size_t i = m; i >= 1; --i)
        parts.push_back(static_cast<Part>(2 * i - 1));
    return Partition(std::move(parts));
}

struct StaircaseDecomposition {
    std::size_t m = 0;
    Partition eta;  // parts <= m
    bool operator==(const StaircaseDecomposition&) const = default;
};

/// Writes a super-distinct lambda as delta_m + conjugate(eta) with m = length.
inline StaircaseDecomposition staircase_decompose(const Partition& lambda)
{
    if (!lambda.is_super_distinct())
        throw NotSuperDistinct();
    const std::size_t m = lambda.length();
    std::vector<Part> excess;
    for (std::size_t i = 1; i <= m; ++i) {
        const Part d = lambda.part(i) - static_cast<Part>(2 * (m - i) + 1);
        if (d > 0)
            excess.push_back(d);
    }
    return {m, conjugate(Partition(std::move(excess)))};
}

/// "(5,2,2,1)", "()" for the empty partition.
inline std::string to_string(const Partition& lambda)
{
    std::string s = "(";
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(lambda.parts()[i]);
    }
    return s + ')';
}

/// "(5,2,2*,1)".
inline std::string to_string(const MarkedPartition& mu)
{
    std::string s = "(";
    const auto parts = mu.partition().parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts[i]);
        if (i + 1 == mu.marked_index())
            s += '*';
    }
    return s + ')';
}

/// Canonical pair rendering: "lambda=[5,1] a=2 b=2".
inline std::string to_string(const RectPair& p)
{
    std::string s = "lambda=[";
    for (std::size_t i = 0; i < p.lambda.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p.lambda.parts()[i]);
    }
    return s + "] a=" + std::to_string(p.a) + " b=" + std::to_string(p.b);
}

} // namespace rrbeck
