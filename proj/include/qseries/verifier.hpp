#pragma once

// Coefficientwise checks of the identity catalog, sweeps of the inequality
// families with their strictness boundaries, conjecture evidence, and the
// parity corollaries.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <qseries/partitions.hpp>
#include <qseries/series.hpp>

namespace qseries
{

enum class IdentityId {
    eq2,       // truncated pentagonal number theorem
    eq6,       // truncated Gauss identity, squares
    eq7,       // truncated Gauss identity, triangular numbers
    eq7_rev,   // the same truncation written with the MP_k series
    th11,      // (-q;q)_inf times the truncated pentagonal sum in q^2
    th14,      // (-q;q)_inf times the truncated square sum in q^r
    lemma21,   // one-sided square theta sum as a basic hypergeometric sum
    gauss4,    // 1 + 2 sum (-q)^{n^2} = (q;q)_inf / (-q;q)_inf
    gauss5,    // sum (-q)^{T_n} = (q^2;q^2)_inf / (-q;q^2)_inf
    aux2,      // (-q;q)(q^2;q^2)/(-q^2;q^2) = sum (-1)^{T_{floor(j/2)}} q^{G_j}
    aux3,      // (-q;q)(q^3;q^3)/(-q^3;q^3) = sum q^{G_j}
    cor31,     // Q convolution over 2G_j against sums of M_k at (n - T_j)/2
    cor32a,    // square-offset Q sums against 2 M_{o,k}(n)
    cor32b,    // twice-square offsets against 2 sum M_{o,k}(j) Q_2(n - 2j)
    cor32c,    // thrice-square offsets against 2 sum M_{o,k}(j) Q_3(n - 3j)
};

inline constexpr IdentityId all_identities[] = {
    IdentityId::eq2,    IdentityId::eq6,    IdentityId::eq7,   IdentityId::eq7_rev, IdentityId::th11,
    IdentityId::th14,   IdentityId::lemma21, IdentityId::gauss4, IdentityId::gauss5, IdentityId::aux2,
    IdentityId::aux3,   IdentityId::cor31,  IdentityId::cor32a, IdentityId::cor32b, IdentityId::cor32c,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
bool uses_k(IdentityId id);
bool uses_r(IdentityId id);

struct IdentityParams {
    std::int64_t k = 1;
    std::int64_t r = 1;
};

inline constexpr std::int64_t max_identity_k = 8;
inline constexpr std::int64_t max_identity_r = 3;
inline constexpr std::size_t max_identity_order = 2000;
inline constexpr std::size_t default_identity_order = 300;

struct Mismatch {
    std::size_t exponent;
    Integer lhs;
    Integer rhs;
};

struct IdentityReport {
    IdentityId id;
    IdentityParams params;
    std::size_t order = 0;
    std::optional<Mismatch> failure; // empty: PASS
    std::vector<std::string> warnings;

    bool passed() const
    {
        return !failure;
    }
};

// Both sides of an identity as series through q^order.
struct IdentitySides {
    Series lhs;
    Series rhs;
};

// Throws std::invalid_argument for parameters outside k in [1, 8],
// r in [1, 3] (when used) or order in [1, 2000].
IdentitySides identity_sides(IdentityId id, IdentityParams params, std::size_t order);
IdentityReport verify_identity(IdentityId id, IdentityParams params, std::size_t order = default_identity_order);

// Lowest exponent at which the truncated tail of the identity can contribute;
// checking below it only exercises the trivial part.
std::size_t identity_min_order(IdentityId id, IdentityParams params);

// The M_k convolution side of ID_COR31 written two other ways: for even n = 2m,
// sum_{j in Z} M_k(m - j(4j-1)); for odd n = 2m+1, sum_{j in Z} M_k(m - j(4j-3)).
Series cor31_reindexed_rhs(std::int64_t k, std::size_t order);
Series cor31_direct_rhs(std::int64_t k, std::size_t order);

struct FamilyPoint {
    std::int64_t k;
    std::int64_t n;
    Integer value;
};

struct FamilyReport {
    std::string family_id;
    std::pair<std::int64_t, std::int64_t> k_range{0, 0};
    std::pair<std::int64_t, std::int64_t> n_range{0, 0};
    std::vector<FamilyPoint> violations;
    std::vector<FamilyPoint> boundary_mismatches;
    // Values outside the asserted domain that would have failed the sign
    // test; reported, never fatal.
    std::vector<FamilyPoint> observations;
    std::size_t evidence_count = 0;

    bool clean() const
    {
        return violations.empty() && boundary_mismatches.empty();
    }
};

enum class FamilyId { eq3, eq8, eq9, eq110, cor12, cor15a, cor15b, cor15c, ineq41, ineq42 };

inline constexpr FamilyId all_families[] = {FamilyId::eq3,    FamilyId::eq8,    FamilyId::eq9,   FamilyId::eq110,
                                            FamilyId::cor12,  FamilyId::cor15a, FamilyId::cor15b, FamilyId::cor15c,
                                            FamilyId::ineq41, FamilyId::ineq42};

std::string_view to_string(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);

// Proved families, as opposed to the two that rest on the theta-series
// nonnegativity conjectures.
bool is_proved(FamilyId id);

enum class Strictness {
    one_sided, // value > 0 is asserted at or above the threshold only
    iff,       // value == 0 below the threshold and value > 0 at or above it
    none,      // sign only
};

struct FamilyRule {
    Strictness strictness;
    std::int64_t threshold; // first n of the strict region
    std::int64_t n_min;     // first n of the asserted domain
};

FamilyRule family_rule(FamilyId id, std::int64_t k);

// The family's signed sum at (k, n), reading the one table the family needs
// (p, overpartitions, pod or Q) built through n_max.
class FamilyEvaluator
{
public:
    FamilyEvaluator(FamilyId id, std::int64_t n_max);

    Integer operator()(std::int64_t k, std::int64_t n) const;

private:
    FamilyId id_;
    FunctionTable table_;
};

FamilyReport verify_inequality_family(FamilyId id, std::int64_t k_max, std::int64_t n_max);

enum class ConjectureId { conj1, conj2, conj41, conj42 };

inline constexpr ConjectureId all_conjectures[] = {ConjectureId::conj1, ConjectureId::conj2, ConjectureId::conj41,
                                                   ConjectureId::conj42};

std::string_view to_string(ConjectureId id);
std::optional<ConjectureId> parse_conjecture(std::string_view name);

// The two theta series conjectured to have nonnegative coefficients:
// (-q;q)_inf sum_{n>=0} (-1)^{T_n} q^{G_{n+2k}}  and the same with T_{n+2k}.
Series conjectured_theta_series(ConjectureId id, std::int64_t k, std::size_t order);

// For conj1/conj2 `limit` is n_max; for conj41/conj42 it is the series order.
FamilyReport check_conjecture(ConjectureId id, std::int64_t k_max, std::int64_t limit);

enum class ParityId { cor13, cor16a, cor16b, cor16c, cor43a, cor43b };

inline constexpr ParityId all_parities[] = {ParityId::cor13,  ParityId::cor16a, ParityId::cor16b,
                                            ParityId::cor16c, ParityId::cor43a, ParityId::cor43b};

std::string_view to_string(ParityId id);
std::optional<ParityId> parse_parity(std::string_view name);

FamilyReport verify_parity(ParityId id, std::int64_t n_max);

} // namespace qseries
