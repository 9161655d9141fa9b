#pragma once

// The injections behind the two part-count identities.
//
// phi maps marked super-distinct partitions into pairs (lambda, (a^b)) with
// lambda super-distinct and a = +-1 mod 5. psi maps marked super-distinct
// partitions with parts > 1 into pairs with lambda super-distinct (parts > 1)
// and a = +-2 mod 5. The excess counts are the complements of their images.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrbeck/partition.hpp"

namespace rrbeck {

class PreconditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInImage : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Domains and codomains

/// Pairs (lambda, (a^b)) |- n with lambda super-distinct, a = +-1 mod 5, b >= 1.
inline std::vector<RectPair> t1_set(int n)
{
    return enumerate_rect_pairs(n, PartitionClass::SuperDistinct,
                                [](Part a, int) { return is_mod5_pm1(a); });
}

/// Marked super-distinct partitions of n.
inline std::vector<MarkedPartition> t2_set(int n)
{
    return enumerate_marked(n, PartitionClass::SuperDistinct);
}

/// Pairs (lambda, (a^b)) |- n with lambda super-distinct with parts > 1,
/// a = +-2 mod 5, b >= 1. Empty for n = 0.
inline std::vector<RectPair> s1_set(int n)
{
    if (n <= 0)
        return {};
    return enumerate_rect_pairs(n, PartitionClass::SuperDistinctGt1,
                                [](Part a, int) { return is_mod5_pm2(a); });
}

/// Marked super-distinct partitions of n with parts > 1. Empty for n = 0.
inline std::vector<MarkedPartition> s2_set(int n)
{
    if (n <= 0)
        return {};
    return enumerate_marked(n, PartitionClass::SuperDistinctGt1);
}

inline bool in_t1(const RectPair& p)
{
    return p.b >= 1 && is_mod5_pm1(p.a) && p.lambda.is_super_distinct();
}

inline bool in_s1(const RectPair& p)
{
    return p.b >= 1 && is_mod5_pm2(p.a) && in_class(p.lambda, PartitionClass::SuperDistinctGt1);
}

// ---------------------------------------------------------------------------
// phi

/// Removes the marked row and turns it into the column (1^c).
inline RectPair phi(const MarkedPartition& mu)
{
    if (!mu.partition().is_super_distinct())
        throw PreconditionViolated("phi: partition is not super-distinct");
    return RectPair{mu.partition().without_part(mu.marked_part()), 1, mu.marked_part()};
}

/// True iff p is in the image of phi: a = 1 and none of b-1, b, b+1 is a part.
inline bool phi_image_member(const RectPair& p)
{
    return p.a == 1 && !p.lambda.contains(p.b - 1) && !p.lambda.contains(p.b) &&
           !p.lambda.contains(p.b + 1);
}

inline MarkedPartition phi_inverse(const RectPair& p)
{
    if (!in_t1(p) || !phi_image_member(p))
        throw NotInImage("phi_inverse: " + to_string(p) + " is not in the image of phi");
    const Partition mu = p.lambda.with_part(p.b);
    const auto parts = mu.parts();
    const auto pos = std::find(parts.begin(), parts.end(), p.b) - parts.begin();
    return MarkedPartition(mu, static_cast<std::size_t>(pos) + 1);
}

// ---------------------------------------------------------------------------
// psi

enum class ImageClassLabel { I1, I2, I3, I4, I5, I6, I7, Complement };

inline constexpr std::array<ImageClassLabel, 7> kImageClasses = {
    ImageClassLabel::I1, ImageClassLabel::I2, ImageClassLabel::I3, ImageClassLabel::I4,
    ImageClassLabel::I5, ImageClassLabel::I6, ImageClassLabel::I7,
};

inline std::string to_string(ImageClassLabel l)
{
    switch (l) {
    case ImageClassLabel::I1: return "I1";
    case ImageClassLabel::I2: return "I2";
    case ImageClassLabel::I3: return "I3";
    case ImageClassLabel::I4: return "I4";
    case ImageClassLabel::I5: return "I5";
    case ImageClassLabel::I6: return "I6";
    case ImageClassLabel::I7: return "I7";
    case ImageClassLabel::Complement: return "COMPLEMENT";
    }
    return "?";
}

/// Leaves of the psi case ladder. c is the marked part, x the next part
/// (0 if none), y = c - x.
enum class PsiBranch {
    Even,               // c = 2k
    OddPm2,             // c odd, c = 2,3 mod 5
    SmallGap,           // y in {2,3}
    Mod0NextPart,       // c = 10j+5, x != 0
    Mod0Last,           // c = 10j+5, x = 0
    Mod4NextPart,       // c = 10j+9, x != 0
    Mod4Last,           // c = 10j+9, x = 0
    Mod20Is11PosNext,   // c = 20h+11, h > 0, x != 0
    Mod20Is11PosLast,   // c = 20h+11, h > 0, x = 0
    Mod20Is11ZeroNext,  // c = 11, x != 0
    Mod20Is11ZeroLast,  // c = 11, x = 0
    Mod20Is1NextR0,     // c = 20h+1 = 3m+r, x != 0
    Mod20Is1NextR1,
    Mod20Is1NextR2,
    Mod20Is1LastR0,     // x = 0
    Mod20Is1LastR1,
    Mod20Is1LastR2,
};

inline constexpr std::array<PsiBranch, 17> kPsiBranches = {
    PsiBranch::Even,           PsiBranch::OddPm2,          PsiBranch::SmallGap,
    PsiBranch::Mod0NextPart,   PsiBranch::Mod0Last,        PsiBranch::Mod4NextPart,
    PsiBranch::Mod4Last,       PsiBranch::Mod20Is11PosNext, PsiBranch::Mod20Is11PosLast,
    PsiBranch::Mod20Is11ZeroNext, PsiBranch::Mod20Is11ZeroLast, PsiBranch::Mod20Is1NextR0,
    PsiBranch::Mod20Is1NextR1, PsiBranch::Mod20Is1NextR2,  PsiBranch::Mod20Is1LastR0,
    PsiBranch::Mod20Is1LastR1, PsiBranch::Mod20Is1LastR2,
};

inline std::string to_string(PsiBranch b)
{
    switch (b) {
    case PsiBranch::Even: return "case1";
    case PsiBranch::OddPm2: return "case2A";
    case PsiBranch::SmallGap: return "case2B(i)";
    case PsiBranch::Mod0NextPart: return "case2B(ii),x>0";
    case PsiBranch::Mod0Last: return "case2B(ii),x=0";
    case PsiBranch::Mod4NextPart: return "case2B(iii),x>0";
    case PsiBranch::Mod4Last: return "case2B(iii),x=0";
    case PsiBranch::Mod20Is11PosNext: return "case2B(iv)(a),h>0,x>0";
    case PsiBranch::Mod20Is11PosLast: return "case2B(iv)(a),h>0,x=0";
    case PsiBranch::Mod20Is11ZeroNext: return "case2B(iv)(a),h=0,x>0";
    case PsiBranch::Mod20Is11ZeroLast: return "case2B(iv)(a),h=0,x=0";
    case PsiBranch::Mod20Is1NextR0: return "case2B(iv)(b),x>0,r=0";
    case PsiBranch::Mod20Is1NextR1: return "case2B(iv)(b),x>0,r=1";
    case PsiBranch::Mod20Is1NextR2: return "case2B(iv)(b),x>0,r=2";
    case PsiBranch::Mod20Is1LastR0: return "case2B(iv)(b),x=0,r=0";
    case PsiBranch::Mod20Is1LastR1: return "case2B(iv)(b),x=0,r=1";
    case PsiBranch::Mod20Is1LastR2: return "case2B(iv)(b),x=0,r=2";
    }
    return "?";
}

struct PsiResult {
    RectPair pair;
    ImageClassLabel label;
    PsiBranch branch;
};

inline PsiResult psi(const MarkedPartition& mu)
{
    if (!in_class(mu.partition(), PartitionClass::SuperDistinctGt1))
        throw PreconditionViolated("psi: partition is not super-distinct with parts > 1");

    const Part c = mu.marked_part();
    const Part x = mu.next_part();
    const Part y = mu.gap();
    const Partition rest = mu.partition().without_part(c);

    // rest with x replaced by x + shift (shift 0 leaves it unchanged)
    auto bump_next = [&](Part shift) { return shift == 0 ? rest : rest.with_replaced(x, x + shift); };
    // rest with the given parts inserted; zero parts are skipped
    auto insert = [&](std::initializer_list<Part> parts) {
        Partition out = rest;
        for (Part p : parts) {
            if (p > 0)
                out = out.with_part(p);
        }
        return out;
    };
    auto result = [](Partition lambda, Part a, int b, ImageClassLabel l, PsiBranch br) {
        return PsiResult{RectPair{std::move(lambda), a, b}, l, br};
    };

    using L = ImageClassLabel;
    using B = PsiBranch;

    if (c % 2 == 0)
        return result(rest, 2, c / 2, L::I1, B::Even);

    const int k = (c - 1) / 2;
    if (c % 5 == 2 || c % 5 == 3)
        return result(rest, c, 1, L::I2, B::OddPm2);

    // c odd, c = 0, 1 or 4 mod 5, hence c >= 5
    if (y == 2 || y == 3)
        return result(bump_next(1), 2, k, L::I3, B::SmallGap);

    // y >= 4 from here on
    if (c % 5 == 0) {
        const int j = (c - 5) / 10;
        if (x != 0)
            return result(bump_next(1), 5 * j + 2, 2, L::I4, B::Mod0NextPart);
        return result(insert({5 * j + 3}), 5 * j + 2, 1, L::I4, B::Mod0Last);
    }
    if (c % 5 == 4) {
        const int j = (c - 9) / 10;
        if (x != 0)
            return result(bump_next(3), 5 * j + 3, 2, L::I5, B::Mod4NextPart);
        return result(insert({3}), 5 * j + 3, 2, L::I5, B::Mod4Last);
    }
    // c = 1 mod 10
    if (c % 20 == 11) {
        const int h = (c - 11) / 20;
        if (h > 0) {
            if (x != 0)
                return result(bump_next(3), 5 * h + 2, 4, L::I6, B::Mod20Is11PosNext);
            return result(insert({3}), 5 * h + 2, 4, L::I6, B::Mod20Is11PosLast);
        }
        if (x != 0)
            return result(bump_next(2), 3, 3, L::I6, B::Mod20Is11ZeroNext);
        return result(insert({2}), 3, 3, L::I6, B::Mod20Is11ZeroLast);
    }
    // c = 20h + 1, h >= 1
    const int h = (c - 1) / 20;
    const int m = c / 3;
    const int r = c % 3;
    if (x != 0) {
        const B br = r == 0 ? B::Mod20Is1NextR0 : r == 1 ? B::Mod20Is1NextR1 : B::Mod20Is1NextR2;
        return result(bump_next(r), 3, m, L::I7, br);
    }
    if (r != 1)
        return result(insert({r}), 3, m, L::I7, r == 0 ? B::Mod20Is1LastR0 : B::Mod20Is1LastR2);
    return result(insert({5 * (h - 1) + 8, 5 * (h - 1) + 6, 5 * (h - 1) + 4}), 5 * (h - 1) + 3, 1,
                  L::I7, B::Mod20Is1LastR1);
}

// ---------------------------------------------------------------------------
// The printed image sets I1..I7, evaluated literally. Used for diagnostics.

namespace detail {

// Accumulates the first failed clause of a conjunction.
class Clauses {
public:
    Clauses& require(bool ok, const std::string& why)
    {
        if (!ok && !failure_)
            failure_ = why;
        return *this;
    }
    const std::optional<std::string>& failure() const { return failure_; }

private:
    std::optional<std::string> failure_;
};

inline std::string num(long v) { return std::to_string(v); }

inline void require_absent(Clauses& c, const Partition& lambda, std::initializer_list<long> values,
                           const std::string& what)
{
    for (long v : values)
        c.require(v <= 0 || !lambda.contains(static_cast<Part>(v)),
                  what + "=" + num(v) + " is a part of lambda");
}

inline void require_present(Clauses& c, const Partition& lambda, long v, const std::string& what)
{
    c.require(lambda.contains(static_cast<Part>(v)), what + "=" + num(v) + " is not a part of lambda");
}

// Every part z <= bound lies in `allowed`.
inline void require_only_small(Clauses& c, const Partition& lambda, long bound,
                               std::initializer_list<long> allowed)
{
    for (Part z : lambda.parts()) {
        if (z <= bound && std::find(allowed.begin(), allowed.end(), z) == allowed.end()) {
            c.require(false, "part " + num(z) + " <= " + num(bound) + " is not permitted");
            return;
        }
    }
}

// z_{u,lambda} exists, is >= low, and z - t is not a part for each t.
inline void require_z(Clauses& c, const Partition& lambda, long u, long low,
                      std::initializer_list<long> offsets, const std::string& name)
{
    const auto z = u > 0 ? largest_part_at_most(lambda, static_cast<Part>(u)) : std::nullopt;
    c.require(z.has_value(), name + " (u=" + num(u) + ") does not exist");
    if (!z)
        return;
    c.require(*z >= low, name + "=" + num(*z) + " is less than " + num(low));
    for (long t : offsets)
        c.require(!lambda.contains(static_cast<Part>(*z - t)),
                  name + "-" + num(t) + "=" + num(*z - t) + " is a part of lambda");
}

// Union of conjunctive sets: member iff some set has no failed clause.
inline std::optional<std::string> any_of(std::initializer_list<Clauses> sets)
{
    std::string why;
    int i = 1;
    for (const auto& s : sets) {
        if (!s.failure())
            return std::nullopt;
        why += (why.empty() ? "" : "; ") + std::string("set ") + num(i++) + ": " + *s.failure();
    }
    return why;
}

} // namespace detail

/// Why p is not in the printed set I_j, or nullopt if it is.
/// p is assumed to lie in S_1(n).
inline std::optional<std::string> image_class_violation(const RectPair& p, ImageClassLabel label)
{
    using detail::Clauses;
    const Partition& lam = p.lambda;
    const long a = p.a;
    const long b = p.b;

    switch (label) {
    case ImageClassLabel::I1: {
        Clauses s;
        s.require(a == 2, "a is not 2");
        detail::require_absent(s, lam, {2 * b - 1}, "2b-1");
        detail::require_absent(s, lam, {2 * b}, "2b");
        detail::require_absent(s, lam, {2 * b + 1}, "2b+1");
        return s.failure();
    }
    case ImageClassLabel::I2: {
        Clauses s;
        s.require(b == 1, "b is not 1");
        s.require(a % 2 == 1, "a is not odd");
        detail::require_absent(s, lam, {a - 1}, "a-1");
        detail::require_absent(s, lam, {a}, "a");
        detail::require_absent(s, lam, {a + 1}, "a+1");
        return s.failure();
    }
    case ImageClassLabel::I3: {
        const long k = b;
        Clauses s1, s2;
        s1.require(a == 2, "a is not 2").require(k >= 2, "k < 2");
        detail::require_present(s1, lam, 2 * k, "2k");
        detail::require_absent(s1, lam, {2 * k - 2}, "2k-2");
        detail::require_absent(s1, lam, {2 * k + 2}, "2k+2");
        s2.require(a == 2, "a is not 2").require(k >= 2, "k < 2");
        detail::require_present(s2, lam, 2 * k - 1, "2k-1");
        detail::require_absent(s2, lam, {2 * k - 3}, "2k-3");
        detail::require_absent(s2, lam, {2 * k + 1}, "2k+1");
        detail::require_absent(s2, lam, {2 * k + 2}, "2k+2");
        return detail::any_of({s1, s2});
    }
    case ImageClassLabel::I4: {
        Clauses s1, s2;
        s1.require(b == 2, "b is not 2").require(a > 2, "a <= 2").require(a % 5 == 2, "a != 2 mod 5");
        detail::require_absent(s1, lam, {2 * a - 1, 2 * a, 2 * a + 1, 2 * a + 2}, "2a-1..2a+2");
        detail::require_z(s1, lam, 2 * a - 2, 3, {2}, "z_{2a-2}");
        s2.require(b == 1, "b is not 1").require(a % 5 == 2, "a != 2 mod 5");
        detail::require_present(s2, lam, a + 1, "a+1");
        detail::require_only_small(s2, lam, 2 * a + 2, {a + 1});
        return detail::any_of({s1, s2});
    }
    case ImageClassLabel::I5: {
        Clauses s1, s2;
        s1.require(b == 2, "b is not 2").require(a % 5 == 3, "a != 3 mod 5");
        detail::require_absent(s1, lam, {2 * a + 3, 2 * a + 4}, "2a+3..2a+4");
        detail::require_z(s1, lam, 2 * a + 2, 5, {2, 3, 4}, "z_{2a+2}");
        s2.require(b == 2, "b is not 2").require(a % 5 == 3, "a != 3 mod 5");
        detail::require_present(s2, lam, 3, "3");
        detail::require_only_small(s2, lam, 2 * a + 4, {3});
        return detail::any_of({s1, s2});
    }
    case ImageClassLabel::I6: {
        Clauses s1, s2, s3, s4;
        s1.require(b == 4, "b is not 4").require(a % 5 == 2, "a != 2 mod 5").require(a > 2, "a <= 2");
        detail::require_absent(s1, lam, {4 * a + 3, 4 * a + 4}, "4a+3..4a+4");
        detail::require_z(s1, lam, 4 * a + 2, 5, {}, "z_{4a+2}");
        detail::require_z(s1, lam, 2 * a + 2, 0, {2, 3, 4}, "z_{2a+2}");
        s2.require(b == 4, "b is not 4").require(a % 5 == 2, "a != 2 mod 5").require(a > 2, "a <= 2");
        detail::require_present(s2, lam, 3, "3");
        detail::require_only_small(s2, lam, 4 * a + 4, {3});
        s3.require(a == 3 && b == 3, "rectangle is not (3^3)");
        detail::require_absent(s3, lam, {10, 11, 12}, "10..12");
        detail::require_z(s3, lam, 9, 4, {2, 3}, "z_9");
        s4.require(a == 3 && b == 3, "rectangle is not (3^3)");
        detail::require_present(s4, lam, 2, "2");
        detail::require_only_small(s4, lam, 12, {2});
        return detail::any_of({s1, s2, s3, s4});
    }
    case ImageClassLabel::I7: {
        const long m = b;
        Clauses s1, s2, s3, s4, s5, s6;
        s1.require(a == 3, "a is not 3").require(m % 20 == 7, "m != 7 mod 20");
        detail::require_absent(s1, lam, {3 * m - 3, 3 * m - 2, 3 * m - 1, 3 * m, 3 * m + 1}, "3m-3..3m+1");
        s1.require(largest_part_at_most(lam, static_cast<Part>(3 * m - 4)).has_value(),
                   "no part <= 3m-4");
        s2.require(a == 3, "a is not 3").require(m % 20 == 0 && m > 0, "m != 0 mod 20");
        detail::require_absent(s2, lam, {3 * m + 1, 3 * m + 2}, "3m+1..3m+2");
        detail::require_z(s2, lam, 3 * m - 2, 3, {2}, "z_{3m-2}");
        s3.require(a == 3, "a is not 3").require(m % 20 == 13, "m != 13 mod 20");
        detail::require_absent(s3, lam, {3 * m + 1, 3 * m + 2, 3 * m + 3}, "3m+1..3m+3");
        detail::require_z(s3, lam, 3 * m, 4, {2, 3}, "z_{3m}");
        s4.require(a == 3, "a is not 3").require(m % 20 == 7, "m != 7 mod 20");
        detail::require_only_small(s4, lam, 3 * m + 1, {});
        s5.require(a == 3, "a is not 3").require(m % 20 == 13, "m != 13 mod 20");
        detail::require_present(s5, lam, 2, "2");
        detail::require_only_small(s5, lam, 3 * m + 3, {2});
        s6.require(b == 1, "b is not 1").require(a % 15 == 13, "a != 13 mod 15");
        detail::require_present(s6, lam, a + 1, "a+1");
        detail::require_present(s6, lam, a + 3, "a+3");
        detail::require_present(s6, lam, a + 5, "a+5");
        detail::require_only_small(s6, lam, 4 * a + 10, {a + 1, a + 3, a + 5});
        return detail::any_of({s1, s2, s3, s4, s5, s6});
    }
    case ImageClassLabel::Complement:
        for (auto l : kImageClasses) {
            if (!image_class_violation(p, l))
                return "pair satisfies the printed " + to_string(l) + " conditions";
        }
        return std::nullopt;
    }
    return "unknown label";
}

/// Membership in the printed set I_j (or in none of them, for Complement).
inline bool image_class_member(const RectPair& p, ImageClassLabel label)
{
    return !image_class_violation(p, label).has_value();
}

/// S(n): the pairs of S_1(n) not hit by psi, in s1_set order.
inline std::vector<RectPair> s_set(int n)
{
    std::set<RectPair> image;
    for (const auto& mu : s2_set(n))
        image.insert(psi(mu).pair);
    std::vector<RectPair> out;
    for (auto& p : s1_set(n)) {
        if (!image.contains(p))
            out.push_back(std::move(p));
    }
    return out;
}

} // namespace rrbeck
