#pragma once

// Figurate numbers: triangular T_n = n(n+1)/2, generalized pentagonal
// G_n = T_n - T_{floor(n/2)}, and squares, with scaled variants.

#include <cstdint>
#include <optional>
#include <vector>

namespace qseries
{

constexpr std::int64_t triangular(std::int64_t n)
{
    return n * (n + 1) / 2;
}

constexpr std::int64_t gen_pentagonal(std::int64_t n)
{
    return triangular(n) - triangular(n / 2);
}

constexpr std::int64_t square(std::int64_t n)
{
    return n * n;
}

// (-1)^{T_n}. T_n is odd exactly when n = 1, 2 (mod 4).
constexpr int triangular_sign(std::int64_t n)
{
    const auto r = n % 4;
    return (r == 1 || r == 2) ? -1 : 1;
}

enum class FigurateKind { triangular, gen_pentagonal, square };

// How indices are counted when the sequence takes part in a representation.
// `signed_index` counts m and -m as distinct indices (so every nonzero value is
// reached twice), which is the natural reading for squares j^2 with j in Z.
enum class IndexDomain { non_negative, signed_index };

struct FigurateSeq {
    FigurateKind kind = FigurateKind::triangular;
    std::int64_t multiplier = 1;
    IndexDomain domain = IndexDomain::non_negative;

    // multiplier * base(n); strictly increasing in n >= 0 for every kind.
    std::int64_t value(std::int64_t n) const;

    // Number of indices mapping to value(m) under this sequence's domain.
    int weight(std::int64_t m) const
    {
        return (domain == IndexDomain::signed_index && m > 0) ? 2 : 1;
    }

    bool operator==(const FigurateSeq &) const = default;
};

std::int64_t figurate_base(FigurateKind kind, std::int64_t n);

// The unique m >= 0 with seq.value(m) == x, if any.
std::optional<std::int64_t> index_of(const FigurateSeq &seq, std::int64_t x);

inline bool is_member(const FigurateSeq &seq, std::int64_t x)
{
    return index_of(seq, x).has_value();
}

// All values seq.value(m) <= limit, in increasing order of m.
std::vector<std::int64_t> values_up_to(const FigurateSeq &seq, std::int64_t limit);

// Number of index pairs (i, j) with a.value(i) + b.value(j) == n, each pair
// weighted by a.weight(i) * b.weight(j).
std::int64_t representation_count(std::int64_t n, const FigurateSeq &a, const FigurateSeq &b);

// representation_count for every n in [0, n_max], by a single pair scan.
std::vector<std::int64_t> representation_counts(std::int64_t n_max, const FigurateSeq &a,
                                                const FigurateSeq &b);

} // namespace qseries
