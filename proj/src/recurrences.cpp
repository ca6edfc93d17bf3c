#include <qseries/recurrences.hpp>

#include <stdexcept>

#include <qseries/figurate.hpp>

namespace qseries
{

namespace
{

constexpr FigurateSeq pentagonal(std::int64_t multiplier)
{
    return {FigurateKind::gen_pentagonal, multiplier};
}

// Offset and coefficient of summand j, for j >= 0.
RecurrenceTerm term(Recurrence kind, std::int64_t j)
{
    const int square_coeff = j == 0 ? 1 : (j % 2 == 0 ? 2 : -2);
    switch (kind) {
        case Recurrence::rec1:
            return {2 * gen_pentagonal(j), triangular_sign(j)};
        case Recurrence::rec2:
            return {square(j), square_coeff};
        case Recurrence::rec3:
            return {2 * square(j), square_coeff};
        case Recurrence::rec4:
            return {3 * square(j), square_coeff};
        case Recurrence::rec5:
            return {gen_pentagonal(j), triangular_sign(j)};
        case Recurrence::rec6:
            return {triangular(j), triangular_sign(j)};
    }
    throw std::logic_error("unknown recurrence");
}

} // namespace

std::string_view to_string(Recurrence kind)
{
    switch (kind) {
        case Recurrence::rec1:
            return "REC1";
        case Recurrence::rec2:
            return "REC2";
        case Recurrence::rec3:
            return "REC3";
        case Recurrence::rec4:
            return "REC4";
        case Recurrence::rec5:
            return "REC5";
        case Recurrence::rec6:
            return "REC6";
    }
    return "?";
}

std::optional<Recurrence> parse_recurrence(std::string_view name)
{
    for (auto kind : all_recurrences) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

std::vector<RecurrenceTerm> recurrence_terms(Recurrence kind, std::int64_t n)
{
    std::vector<RecurrenceTerm> terms;
    for (std::int64_t j = 0;; ++j) {
        auto t = term(kind, j);
        if (t.offset > n) {
            break;
        }
        terms.push_back(t);
    }
    return terms;
}

int recurrence_rhs(Recurrence kind, std::int64_t n)
{
    switch (kind) {
        case Recurrence::rec1:
            return is_member({FigurateKind::triangular, 1}, n) ? 1 : 0;
        case Recurrence::rec2:
            if (auto m = index_of(pentagonal(1), n)) {
                return triangular_sign(*m);
            }
            return 0;
        case Recurrence::rec3:
            if (auto m = index_of(pentagonal(1), n)) {
                return triangular_sign(*m / 2);
            }
            return 0;
        case Recurrence::rec4:
            return is_member(pentagonal(1), n) ? 1 : 0;
        case Recurrence::rec5:
            if (auto m = index_of(pentagonal(2), n)) {
                return triangular_sign(*m);
            }
            return 0;
        case Recurrence::rec6:
            if (auto m = index_of(pentagonal(4), n)) {
                return triangular_sign(*m);
            }
            return 0;
    }
    throw std::logic_error("unknown recurrence");
}

std::size_t term_count(Recurrence kind, std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("term_count needs n >= 0");
    }
    std::size_t count = 0;
    while (term(kind, static_cast<std::int64_t>(count)).offset <= n) {
        ++count;
    }
    return count;
}

FunctionTable q_via_recurrence(Recurrence kind, std::int64_t n_max)
{
    if (n_max < 0) {
        throw std::invalid_argument("recurrence n_max must be nonnegative");
    }
    const auto terms = recurrence_terms(kind, n_max);
    std::vector<Integer> q(static_cast<std::size_t>(n_max + 1));
    for (std::int64_t n = 0; n <= n_max; ++n) {
        // Q(n) = rhs(n) - sum_{j>=1} c_j Q(n - o_j)
        auto &value = q[static_cast<std::size_t>(n)];
        value = recurrence_rhs(kind, n);
        for (std::size_t j = 1; j < terms.size() && terms[j].offset <= n; ++j) {
            const auto &prev = q[static_cast<std::size_t>(n - terms[j].offset)];
            const auto c = terms[j].coefficient;
            if (c > 0) {
                mpz_submul_ui(value.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(c));
            } else {
                mpz_addmul_ui(value.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(-c));
            }
        }
    }
    return FunctionTable({PartitionKind::q}, std::move(q));
}

} // namespace qseries
