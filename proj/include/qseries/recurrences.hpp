#pragma once

// Q(n) via six linear recurrences, each the k -> infinity limit of one of the
// truncated families. Every recurrence has the shape
//
//     sum_{j>=0} c_j Q(n - o_j) = rhs(n),   o_0 = 0, c_0 = 1,
//
// and is solved bottom-up for Q(n).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qseries/partitions.hpp>

namespace qseries
{

enum class Recurrence {
    rec1, // offsets 2G_j, coefficients (-1)^{T_j};   rhs 1 iff n = T_m
    rec2, // offsets j^2,  coefficients 1, 2(-1)^j;   rhs (-1)^{T_m} iff n = G_m
    rec3, // offsets 2j^2, coefficients 1, 2(-1)^j;   rhs (-1)^{T_{floor(m/2)}} iff n = G_m
    rec4, // offsets 3j^2, coefficients 1, 2(-1)^j;   rhs 1 iff n = G_m
    rec5, // offsets G_j,  coefficients (-1)^{T_j};   rhs (-1)^{T_m} iff n = 2G_m
    rec6, // offsets T_j,  coefficients (-1)^{T_j};   rhs (-1)^{T_m} iff n = 4G_m
};

inline constexpr Recurrence all_recurrences[] = {Recurrence::rec1, Recurrence::rec2, Recurrence::rec3,
                                                 Recurrence::rec4, Recurrence::rec5, Recurrence::rec6};

std::string_view to_string(Recurrence kind);
std::optional<Recurrence> parse_recurrence(std::string_view name);

struct RecurrenceTerm {
    std::int64_t offset;
    int coefficient;
};

// Summands with offset <= n, in increasing offset order, starting at (0, 1).
std::vector<RecurrenceTerm> recurrence_terms(Recurrence kind, std::int64_t n);

// Right-hand side rhs(n), one of -1, 0, 1.
int recurrence_rhs(Recurrence kind, std::int64_t n);

// Number of summands Q(n - offset) with offset <= n, j = 0 included.
std::size_t term_count(Recurrence kind, std::int64_t n);

FunctionTable q_via_recurrence(Recurrence kind, std::int64_t n_max);

} // namespace qseries
