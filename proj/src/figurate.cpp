#include <qseries/figurate.hpp>

#include <stdexcept>

namespace qseries
{

std::int64_t figurate_base(FigurateKind kind, std::int64_t n)
{
    switch (kind) {
        case FigurateKind::triangular:
            return triangular(n);
        case FigurateKind::gen_pentagonal:
            return gen_pentagonal(n);
        case FigurateKind::square:
            return square(n);
    }
    throw std::logic_error("unknown figurate kind");
}

std::int64_t FigurateSeq::value(std::int64_t n) const
{
    if (n < 0) {
        throw std::invalid_argument("figurate index must be nonnegative");
    }
    return multiplier * figurate_base(kind, n);
}

std::optional<std::int64_t> index_of(const FigurateSeq &seq, std::int64_t x)
{
    if (x < 0) {
        return std::nullopt;
    }
    // Bracket x by doubling, then binary search the increasing sequence.
    std::int64_t hi = 1;
    while (seq.value(hi) < x) {
        hi *= 2;
    }
    std::int64_t lo = 0;
    while (lo < hi) {
        const auto mid = lo + (hi - lo) / 2;
        if (seq.value(mid) < x) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (seq.value(lo) == x) {
        return lo;
    }
    return std::nullopt;
}

std::vector<std::int64_t> values_up_to(const FigurateSeq &seq, std::int64_t limit)
{
    std::vector<std::int64_t> out;
    for (std::int64_t m = 0; seq.value(m) <= limit; ++m) {
        out.push_back(seq.value(m));
    }
    return out;
}

std::int64_t representation_count(std::int64_t n, const FigurateSeq &a, const FigurateSeq &b)
{
    if (n < 0) {
        return 0;
    }
    std::int64_t count = 0;
    for (std::int64_t i = 0; a.value(i) <= n; ++i) {
        if (auto j = index_of(b, n - a.value(i))) {
            count += a.weight(i) * b.weight(*j);
        }
    }
    return count;
}

std::vector<std::int64_t> representation_counts(std::int64_t n_max, const FigurateSeq &a,
                                                const FigurateSeq &b)
{
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n_max < 0 ? 0 : n_max + 1), 0);
    for (std::int64_t i = 0; a.value(i) <= n_max; ++i) {
        for (std::int64_t j = 0; a.value(i) + b.value(j) <= n_max; ++j) {
            counts[static_cast<std::size_t>(a.value(i) + b.value(j))] += a.weight(i) * b.weight(j);
        }
    }
    return counts;
}

} // namespace qseries
