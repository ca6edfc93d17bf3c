#include <qseries/verifier.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <qseries/figurate.hpp>
#include <qseries/recurrences.hpp>

namespace qseries
{

namespace
{

using std::int64_t;
using std::size_t;

int sign_pow(int64_t e)
{
    return (e % 2 == 0) ? 1 : -1;
}

size_t as_size(int64_t v)
{
    return static_cast<size_t>(v);
}

Series poch(size_t c, size_t step, size_t order)
{
    return pochhammer(PochSpec::of(c, step), order);
}

Series poch_neg(size_t c, size_t step, size_t order)
{
    return pochhammer(PochSpec::negated(c, step), order);
}

Series poch_inv(size_t c, size_t step, size_t order)
{
    return pochhammer_inverse(PochSpec::of(c, step), order);
}

Series poch_neg_inv(size_t c, size_t step, size_t order)
{
    return pochhammer_inverse(PochSpec::negated(c, step), order);
}

// sum_{n>=1} q^{step*(C(k,2)+(k+1)n)} / (q^step;q^step)_n * [n-1, k-1]_{q^step},
// multiplied out term by term from the Gaussian binomial column.
Series truncated_pentagonal_tail(int64_t k, size_t step, size_t order)
{
    const auto s = static_cast<int64_t>(step);
    const auto exponent = [&](int64_t n) { return s * (k * (k - 1) / 2 + (k + 1) * n); };
    int64_t n_top = 0;
    while (exponent(n_top + 1) <= static_cast<int64_t>(order)) {
        ++n_top;
    }
    Series sum(order);
    if (n_top == 0) {
        return sum;
    }
    const auto gauss = gaussian_binomial_column(k - 1, n_top - 1, step, order);
    auto inv = Series::one(order); // 1 / (q^step;q^step)_n
    for (int64_t n = 1; n <= n_top; ++n) {
        inv.over_binomial(1, step * as_size(n));
        if (n < k) {
            continue;
        }
        sum += mul_shifted(inv, gauss[as_size(n - 1)], as_size(exponent(n)));
    }
    return sum;
}

// Coefficients of `lhs` and `rhs` as sequences indexed by n.
IdentitySides sides_from(size_t order, const std::function<Integer(int64_t)> &lhs,
                         const std::function<Integer(int64_t)> &rhs)
{
    std::vector<Integer> l(order + 1), r(order + 1);
    for (size_t n = 0; n <= order; ++n) {
        l[n] = lhs(static_cast<int64_t>(n));
        r[n] = rhs(static_cast<int64_t>(n));
    }
    return {Series(order, std::move(l)), Series(order, std::move(r))};
}

// Q(n) + 2 sum_{j=1}^{k} (-1)^j Q(n - c j^2) - rhs(n), where rhs is the
// delta term of the matching limiting recurrence.
Integer square_offset_sum(const FunctionTable &q, int64_t c, int64_t k, int64_t n, Recurrence delta)
{
    Integer v = q(n);
    for (int64_t j = 1; j <= k; ++j) {
        const auto &term = q(n - c * j * j);
        if (j % 2 == 0) {
            mpz_addmul_ui(v.get_mpz_t(), term.get_mpz_t(), 2);
        } else {
            mpz_submul_ui(v.get_mpz_t(), term.get_mpz_t(), 2);
        }
    }
    v -= recurrence_rhs(delta, n);
    return v;
}

// sum_{j=0}^{2k-1} (-1)^{T_j} f(n - offset(j)).
template <typename Offset>
Integer theta_offset_sum(const FunctionTable &f, int64_t k, int64_t n, Offset offset)
{
    Integer v = 0;
    for (int64_t j = 0; j < 2 * k; ++j) {
        if (triangular_sign(j) > 0) {
            v += f(n - offset(j));
        } else {
            v -= f(n - offset(j));
        }
    }
    return v;
}

Integer with_sign(int s, Integer v)
{
    if (s < 0) {
        v = -v;
    }
    return v;
}

void check_params(IdentityId id, IdentityParams params, size_t order)
{
    if (uses_k(id) && (params.k < 1 || params.k > max_identity_k)) {
        throw std::invalid_argument("k must lie in [1, " + std::to_string(max_identity_k) + "]");
    }
    if (uses_r(id) && (params.r < 1 || params.r > max_identity_r)) {
        throw std::invalid_argument("r must lie in [1, " + std::to_string(max_identity_r) + "]");
    }
    if (order < 1 || order > max_identity_order) {
        throw std::invalid_argument("order must lie in [1, " + std::to_string(max_identity_order) + "]");
    }
}

// Tail sign of the truncated triangular Gauss identity. The coefficient of
// q^{k(2k+1)} on the left is (-1)^{k-1} for every k, which fixes the sign.
int eq7_tail_sign(int64_t k)
{
    return sign_pow(k - 1);
}

IdentitySides sides_eq7_lhs_only(int64_t k, size_t order, Series rhs)
{
    auto lhs = poch_neg(1, 2, order) * poch_inv(2, 2, order) * theta_truncated(ThetaKind::triangular_2k, k, order);
    return {std::move(lhs), std::move(rhs)};
}

// MP_k series with each infinite product expanded afresh per summand.
Series mp_k_literal(int64_t k, size_t order)
{
    Series sum(order);
    for (int64_t j = 0; k * (2 * j + 2 * k + 1) <= static_cast<int64_t>(order); ++j) {
        auto term = poch_neg(as_size(2 * j + 2 * k + 3), 2, order);
        term *= pochhammer_inverse(PochSpec::of(as_size(2 * k + 2 * j + 2), 2), order);
        sum += shift(term, as_size(k * (2 * j + 2 * k + 1)));
    }
    sum *= pochhammer(PochSpec::negated(1, 2, as_size(k)), order);
    sum *= pochhammer_inverse(PochSpec::of(2, 2, as_size(k - 1)), order);
    return sum;
}

} // namespace

std::string_view to_string(IdentityId id)
{
    switch (id) {
        case IdentityId::eq2:
            return "ID_EQ2";
        case IdentityId::eq6:
            return "ID_EQ6";
        case IdentityId::eq7:
            return "ID_EQ7";
        case IdentityId::eq7_rev:
            return "ID_EQ7REV";
        case IdentityId::th11:
            return "ID_TH11";
        case IdentityId::th14:
            return "ID_TH14";
        case IdentityId::lemma21:
            return "ID_LEMMA21";
        case IdentityId::gauss4:
            return "ID_GAUSS4";
        case IdentityId::gauss5:
            return "ID_GAUSS5";
        case IdentityId::aux2:
            return "ID_AUX2";
        case IdentityId::aux3:
            return "ID_AUX3";
        case IdentityId::cor31:
            return "ID_COR31";
        case IdentityId::cor32a:
            return "ID_COR32A";
        case IdentityId::cor32b:
            return "ID_COR32B";
        case IdentityId::cor32c:
            return "ID_COR32C";
    }
    return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name)
{
    for (auto id : all_identities) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

bool uses_k(IdentityId id)
{
    switch (id) {
        case IdentityId::gauss4:
        case IdentityId::gauss5:
        case IdentityId::aux2:
        case IdentityId::aux3:
            return false;
        default:
            return true;
    }
}

bool uses_r(IdentityId id)
{
    return id == IdentityId::th14;
}

size_t identity_min_order(IdentityId id, IdentityParams params)
{
    const auto k = params.k;
    switch (id) {
        case IdentityId::eq2:
            return as_size(gen_pentagonal(2 * k));
        case IdentityId::eq6:
        case IdentityId::cor32a:
            return as_size((k + 1) * (k + 1));
        case IdentityId::eq7:
        case IdentityId::eq7_rev:
            return as_size(k * (2 * k + 1));
        case IdentityId::th11:
        case IdentityId::cor31:
            return as_size(2 * gen_pentagonal(2 * k));
        case IdentityId::th14:
            return as_size(params.r * (k + 1) * (k + 1));
        case IdentityId::lemma21:
            return as_size(2 * k + 3);
        case IdentityId::cor32b:
            return as_size(2 * (k + 1) * (k + 1));
        case IdentityId::cor32c:
            return as_size(3 * (k + 1) * (k + 1));
        default:
            return 0;
    }
}

Series cor31_direct_rhs(int64_t k, size_t order)
{
    const auto mk = table_m_k(k, static_cast<int64_t>(order));
    Series out(order);
    for (int64_t n = 0; n <= static_cast<int64_t>(order); ++n) {
        Integer v = 0;
        for (int64_t j = 0; triangular(j) <= n; ++j) {
            if ((n - triangular(j)) % 2 == 0) {
                v += mk((n - triangular(j)) / 2);
            }
        }
        out.add_term(as_size(n), v);
    }
    return out;
}

Series cor31_reindexed_rhs(int64_t k, size_t order)
{
    const auto mk = table_m_k(k, static_cast<int64_t>(order));
    Series out(order);
    for (int64_t n = 0; n <= static_cast<int64_t>(order); ++n) {
        const auto m = n / 2;
        const int64_t c = (n % 2 == 0) ? 1 : 3; // j(4j - c)
        Integer v = mk(m);
        for (int64_t j = 1; j * (4 * j - c) <= m; ++j) {
            v += mk(m - j * (4 * j - c));
            v += mk(m - j * (4 * j + c)); // index -j
        }
        out.add_term(as_size(n), v);
    }
    return out;
}

IdentitySides identity_sides(IdentityId id, IdentityParams params, size_t order)
{
    check_params(id, params, order);
    const auto k = params.k;
    const auto N = order;
    const auto one = Series::one(N);

    switch (id) {
        case IdentityId::eq2: {
            auto lhs = poch_inv(1, 1, N) * theta_truncated(ThetaKind::pentagonal_2k, k, N);
            auto rhs = one + Integer(sign_pow(k - 1)) * truncated_pentagonal_tail(k, 1, N);
            return {std::move(lhs), std::move(rhs)};
        }
        case IdentityId::eq6: {
            auto lhs = poch_neg(1, 1, N) * poch_inv(1, 1, N) * theta_truncated(ThetaKind::square_k, k, N);
            // (-1;q)_{n-k} / (q;q)_n, starting at n = k+1 where (-1;q)_1 = 2.
            auto ratio = Integer(2) * pochhammer_inverse(PochSpec::of(1, 1, as_size(k + 1)), N);
            // The Gaussian factor here is [n-1, k]; with [n-1, k-1] the two
            // sides disagree a few terms past q^{(k+1)^2}.
            const auto gauss = gaussian_binomial_column(k, static_cast<int64_t>(N), 1, N);
            Series tail(N);
            for (int64_t n = k + 1; (k + 1) * n <= static_cast<int64_t>(N); ++n) {
                if (n > k + 1) {
                    ratio.times_binomial(-1, as_size(n - 1 - k));
                    ratio.over_binomial(1, as_size(n));
                }
                tail += mul_shifted(ratio, gauss[as_size(n - 1)], as_size((k + 1) * n));
            }
            tail *= pochhammer(PochSpec::negated(1, 1, as_size(k)), N);
            auto rhs = one + Integer(sign_pow(k)) * tail;
            return {std::move(lhs), std::move(rhs)};
        }
        case IdentityId::eq7: {
            // (-q;q^2)_{n-k} / (q^2;q^2)_n, starting at n = k.
            auto ratio = pochhammer_inverse(PochSpec::of(2, 2, as_size(k)), N);
            const auto gauss = gaussian_binomial_column(k - 1, static_cast<int64_t>(N), 2, N);
            Series tail(N);
            for (int64_t n = k; 2 * (k + 1) * n - k <= static_cast<int64_t>(N); ++n) {
                if (n > k) {
                    ratio.times_binomial(-1, as_size(2 * (n - 1 - k) + 1));
                    ratio.over_binomial(1, as_size(2 * n));
                }
                tail += mul_shifted(ratio, gauss[as_size(n - 1)], as_size(2 * (k + 1) * n - k));
            }
            tail *= pochhammer(PochSpec::negated(1, 2, as_size(k)), N);
            return sides_eq7_lhs_only(k, N, one + Integer(eq7_tail_sign(k)) * tail);
        }
        case IdentityId::eq7_rev:
            return sides_eq7_lhs_only(k, N, one - Integer(sign_pow(k)) * mp_k_literal(k, N));
        case IdentityId::th11: {
            auto lhs = poch_neg(1, 1, N) * theta_truncated(ThetaKind::pentagonal_2k, k, N, 2);
            auto prefactor = poch(2, 2, N) * poch_inv(1, 2, N);
            auto rhs = prefactor * (one + Integer(sign_pow(k - 1)) * truncated_pentagonal_tail(k, 2, N));
            return {std::move(lhs), std::move(rhs)};
        }
        case IdentityId::th14: {
            const auto r = as_size(params.r);
            auto lhs = poch_neg(1, 1, N) * theta_truncated(ThetaKind::square_k, k, N, r);
            auto first = poch_neg(1, 1, N) * poch(r, r, N) * poch_neg_inv(r, r, N);
            // 1 / ((q^{2r};q^{2r})_j (q^r;q^{2r})_{k+j+1})
            auto denom = pochhammer_inverse(PochSpec::of(r, 2 * r, as_size(k + 1)), N);
            Series sum(N);
            const auto lead = params.r * (k + 1) * (k + 1);
            for (int64_t j = 0; lead + (2 * k + 2 * j + 3) * params.r * j <= static_cast<int64_t>(N); ++j) {
                if (j > 0) {
                    denom.over_binomial(1, as_size(2 * params.r * j));
                    denom.over_binomial(1, as_size(params.r * (2 * k + 2 * j + 1)));
                }
                sum += shift(denom, as_size((2 * k + 2 * j + 3) * params.r * j));
            }
            auto second = poch(r, 2 * r, N) * poch_inv(1, 2, N) * shift(sum, as_size(lead));
            auto rhs = first + Integer(2 * sign_pow(k)) * second;
            return {std::move(lhs), std::move(rhs)};
        }
        case IdentityId::lemma21: {
            Series lhs(N);
            for (int64_t j = 0; j * j + 2 * j * (k + 1) <= static_cast<int64_t>(N); ++j) {
                lhs.add_term(as_size(j * j + 2 * j * (k + 1)), sign_pow(j));
            }
            auto denom = Series::one(N); // 1 / ((q^2;q^2)_j (q^{2k+3};q^2)_j)
            Series sum(N);
            for (int64_t j = 0; j * (2 * j + 2 * k + 3) <= static_cast<int64_t>(N); ++j) {
                if (j > 0) {
                    denom.over_binomial(1, as_size(2 * j));
                    denom.over_binomial(1, as_size(2 * k + 3 + 2 * (j - 1)));
                }
                sum += shift(denom, as_size(j * (2 * j + 2 * k + 3)));
            }
            auto rhs = poch(as_size(2 * k + 3), 2, N) * sum;
            return {std::move(lhs), std::move(rhs)};
        }
        case IdentityId::gauss4: {
            Series lhs = one;
            for (int64_t n = 1; n * n <= static_cast<int64_t>(N); ++n) {
                lhs.add_term(as_size(n * n), 2 * sign_pow(n));
            }
            return {std::move(lhs), poch(1, 1, N) * poch_neg_inv(1, 1, N)};
        }
        case IdentityId::gauss5: {
            Series lhs(N);
            for (int64_t j = 0; triangular(j) <= static_cast<int64_t>(N); ++j) {
                lhs.add_term(as_size(triangular(j)), triangular_sign(j));
            }
            return {std::move(lhs), poch(2, 2, N) * poch_neg_inv(1, 2, N)};
        }
        case IdentityId::aux2:
        case IdentityId::aux3: {
            const size_t s = id == IdentityId::aux2 ? 2 : 3;
            auto lhs = poch_neg(1, 1, N) * poch(s, s, N) * poch_neg_inv(s, s, N);
            Series rhs(N);
            for (int64_t j = 0; gen_pentagonal(j) <= static_cast<int64_t>(N); ++j) {
                rhs.add_term(as_size(gen_pentagonal(j)), s == 2 ? triangular_sign(j / 2) : 1);
            }
            return {std::move(lhs), std::move(rhs)};
        }
        case IdentityId::cor31: {
            const auto q = table_q(static_cast<int64_t>(N));
            auto rhs = cor31_direct_rhs(k, N);
            auto lhs = sides_from(
                           N,
                           [&](int64_t n) {
                               auto v = theta_offset_sum(q, k, n, [](int64_t j) { return 2 * gen_pentagonal(j); });
                               v -= recurrence_rhs(Recurrence::rec1, n);
                               return with_sign(sign_pow(k - 1), v);
                           },
                           [](int64_t) { return Integer(0); })
                           .lhs;
            return {std::move(lhs), std::move(rhs)};
        }
        case IdentityId::cor32a:
        case IdentityId::cor32b:
        case IdentityId::cor32c: {
            const int64_t c = id == IdentityId::cor32a ? 1 : (id == IdentityId::cor32b ? 2 : 3);
            const Recurrence delta[] = {Recurrence::rec2, Recurrence::rec3, Recurrence::rec4};
            const auto q = table_q(static_cast<int64_t>(N));
            const auto mok = table_m_ok(k, static_cast<int64_t>(N));
            std::optional<FunctionTable> qr;
            if (c > 1) {
                qr = table_q_r(c, static_cast<int64_t>(N));
            }
            return sides_from(
                N,
                [&](int64_t n) { return with_sign(sign_pow(k), square_offset_sum(q, c, k, n, delta[c - 1])); },
                [&](int64_t n) {
                    if (c == 1) {
                        return Integer(2 * mok(n));
                    }
                    Integer v = 0;
                    for (int64_t j = 0; c * j <= n; ++j) {
                        mpz_addmul(v.get_mpz_t(), mok(j).get_mpz_t(), (*qr)(n - c * j).get_mpz_t());
                    }
                    return Integer(2 * v);
                });
        }
    }
    throw std::logic_error("unknown identity");
}

IdentityReport verify_identity(IdentityId id, IdentityParams params, size_t order)
{
    if (!uses_k(id)) {
        params.k = 0;
    }
    if (!uses_r(id)) {
        params.r = 0;
    }
    IdentityReport report{id, params, order, std::nullopt, {}};
    const auto sides = identity_sides(id, params, order);

    const auto min_order = identity_min_order(id, params);
    if (order < min_order) {
        report.warnings.push_back("order " + std::to_string(order) + " is below the lowest tail exponent "
                                  + std::to_string(min_order) + "; only the untruncated part is exercised");
    }

    for (size_t n = 0; n <= order; ++n) {
        if (sides.lhs[n] != sides.rhs[n]) {
            report.failure = Mismatch{n, sides.lhs[n], sides.rhs[n]};
            return report;
        }
    }
    if (id == IdentityId::cor31) {
        // The two re-indexed forms of the right side must agree as well.
        const auto reindexed = cor31_reindexed_rhs(params.k, order);
        for (size_t n = 0; n <= order; ++n) {
            if (sides.rhs[n] != reindexed[n]) {
                report.failure = Mismatch{n, sides.rhs[n], reindexed[n]};
                report.warnings.push_back("re-indexed right side disagrees with the direct sum");
                return report;
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Inequality families

std::string_view to_string(FamilyId id)
{
    switch (id) {
        case FamilyId::eq3:
            return "FAM_EQ3";
        case FamilyId::eq8:
            return "FAM_EQ8";
        case FamilyId::eq9:
            return "FAM_EQ9";
        case FamilyId::eq110:
            return "FAM_EQ110";
        case FamilyId::cor12:
            return "FAM_COR12";
        case FamilyId::cor15a:
            return "FAM_COR15A";
        case FamilyId::cor15b:
            return "FAM_COR15B";
        case FamilyId::cor15c:
            return "FAM_COR15C";
        case FamilyId::ineq41:
            return "FAM_INEQ41";
        case FamilyId::ineq42:
            return "FAM_INEQ42";
    }
    return "?";
}

std::optional<FamilyId> parse_family(std::string_view name)
{
    for (auto id : all_families) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

bool is_proved(FamilyId id)
{
    return id != FamilyId::ineq41 && id != FamilyId::ineq42;
}

FamilyRule family_rule(FamilyId id, int64_t k)
{
    switch (id) {
        // The three classical families carry a constant 1 in their generating
        // functions, so n = 0 is outside the claim.
        case FamilyId::eq3:
            return {Strictness::one_sided, gen_pentagonal(2 * k) + 1, 1};
        case FamilyId::eq8:
            return {Strictness::one_sided, (k + 1) * (k + 1), 1};
        case FamilyId::eq9:
            return {Strictness::one_sided, (2 * k + 1) * k, 1};
        case FamilyId::eq110:
            return {Strictness::none, 0, 0};
        case FamilyId::cor12:
            return {Strictness::iff, 2 * gen_pentagonal(2 * k), 0};
        case FamilyId::cor15a:
            return {Strictness::iff, (k + 1) * (k + 1), 0};
        case FamilyId::cor15b:
            return {Strictness::iff, 2 * (k + 1) * (k + 1), 0};
        case FamilyId::cor15c:
            return {Strictness::iff, 3 * (k + 1) * (k + 1), 0};
        case FamilyId::ineq41:
            return {Strictness::iff, gen_pentagonal(2 * k), 0};
        case FamilyId::ineq42:
            return {Strictness::iff, triangular(2 * k), 0};
    }
    throw std::logic_error("unknown family");
}

namespace
{

FunctionTable family_table(FamilyId id, int64_t n_max)
{
    switch (id) {
        case FamilyId::eq3:
        case FamilyId::eq110:
            return table_p(n_max);
        case FamilyId::eq8:
            return table_overpartition(n_max);
        case FamilyId::eq9:
            return table_pod(n_max);
        default:
            return table_q(n_max);
    }
}

} // namespace

FamilyEvaluator::FamilyEvaluator(FamilyId id, int64_t n_max) : id_(id), table_(family_table(id, n_max)) {}

Integer FamilyEvaluator::operator()(int64_t k, int64_t n) const
{
    const auto &f = table_;
    const auto pent = [](int64_t j) { return gen_pentagonal(j); };
    const auto tri = [](int64_t j) { return triangular(j); };
    switch (id_) {
        case FamilyId::eq3:
            return with_sign(sign_pow(k - 1), theta_offset_sum(f, k, n, pent));
        case FamilyId::eq8: {
            Integer v = f(n);
            for (int64_t j = 1; j <= k; ++j) {
                v += 2 * sign_pow(j) * f(n - j * j);
            }
            return with_sign(sign_pow(k), v);
        }
        case FamilyId::eq9:
        case FamilyId::eq110:
            return with_sign(sign_pow(k - 1), theta_offset_sum(f, k, n, tri));
        case FamilyId::cor12: {
            auto v = theta_offset_sum(f, k, n, [](int64_t j) { return 2 * gen_pentagonal(j); });
            v -= recurrence_rhs(Recurrence::rec1, n);
            return with_sign(sign_pow(k - 1), v);
        }
        case FamilyId::cor15a:
            return with_sign(sign_pow(k), square_offset_sum(f, 1, k, n, Recurrence::rec2));
        case FamilyId::cor15b:
            return with_sign(sign_pow(k), square_offset_sum(f, 2, k, n, Recurrence::rec3));
        case FamilyId::cor15c:
            return with_sign(sign_pow(k), square_offset_sum(f, 3, k, n, Recurrence::rec4));
        case FamilyId::ineq41: {
            auto v = theta_offset_sum(f, k, n, pent);
            v -= recurrence_rhs(Recurrence::rec5, n);
            return with_sign(sign_pow(k - 1), v);
        }
        case FamilyId::ineq42: {
            auto v = theta_offset_sum(f, k, n, tri);
            v -= recurrence_rhs(Recurrence::rec6, n);
            return with_sign(sign_pow(k - 1), v);
        }
    }
    throw std::logic_error("unknown family");
}

FamilyReport verify_inequality_family(FamilyId id, int64_t k_max, int64_t n_max)
{
    if (k_max < 1 || n_max < 0) {
        throw std::invalid_argument("family sweep needs k_max >= 1 and n_max >= 0");
    }
    FamilyReport report;
    report.family_id = std::string(to_string(id));
    report.k_range = {1, k_max};
    report.n_range = {0, n_max};
    const FamilyEvaluator value(id, n_max);
    for (int64_t k = 1; k <= k_max; ++k) {
        const auto rule = family_rule(id, k);
        for (int64_t n = 0; n <= n_max; ++n) {
            auto v = value(k, n);
            const bool asserted = n >= rule.n_min && (id != FamilyId::eq110 || n % 2 == 1 || k % 2 == 1);
            if (!asserted) {
                if (sgn(v) < 0) {
                    report.observations.push_back({k, n, v});
                }
                continue;
            }
            ++report.evidence_count;
            if (sgn(v) < 0) {
                report.violations.push_back({k, n, v});
                continue;
            }
            const bool strict_region = n >= rule.threshold;
            switch (rule.strictness) {
                case Strictness::iff:
                    if (strict_region != (sgn(v) > 0)) {
                        report.boundary_mismatches.push_back({k, n, v});
                    }
                    break;
                case Strictness::one_sided:
                    if (strict_region && sgn(v) == 0) {
                        report.boundary_mismatches.push_back({k, n, v});
                    }
                    break;
                case Strictness::none:
                    break;
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Conjectures

std::string_view to_string(ConjectureId id)
{
    switch (id) {
        case ConjectureId::conj1:
            return "CONJ1";
        case ConjectureId::conj2:
            return "CONJ2";
        case ConjectureId::conj41:
            return "CONJ41";
        case ConjectureId::conj42:
            return "CONJ42";
    }
    return "?";
}

std::optional<ConjectureId> parse_conjecture(std::string_view name)
{
    for (auto id : all_conjectures) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

Series conjectured_theta_series(ConjectureId id, int64_t k, size_t order)
{
    if (id != ConjectureId::conj41 && id != ConjectureId::conj42) {
        throw std::invalid_argument("only CONJ41 and CONJ42 are theta series");
    }
    if (k < 1) {
        throw std::invalid_argument("k must be positive");
    }
    Series theta(order);
    for (int64_t n = 0;; ++n) {
        const auto e = id == ConjectureId::conj41 ? gen_pentagonal(n + 2 * k) : triangular(n + 2 * k);
        if (e > static_cast<int64_t>(order)) {
            break;
        }
        theta.add_term(as_size(e), triangular_sign(n));
    }
    return poch_neg(1, 1, order) * theta;
}

FamilyReport check_conjecture(ConjectureId id, int64_t k_max, int64_t limit)
{
    if (k_max < 1 || limit < 0) {
        throw std::invalid_argument("conjecture check needs k_max >= 1 and a nonnegative range");
    }
    FamilyReport report;
    report.family_id = std::string(to_string(id));
    report.k_range = {1, k_max};
    report.n_range = {0, limit};

    switch (id) {
        case ConjectureId::conj1: {
            const FamilyEvaluator a(FamilyId::cor15a, limit);
            const FamilyEvaluator b(FamilyId::cor15b, limit);
            const FamilyEvaluator c(FamilyId::cor15c, limit);
            for (int64_t k = 1; k <= k_max; ++k) {
                for (int64_t n = 0; n <= limit; ++n) {
                    const auto va = a(k, n), vb = b(k, n), vc = c(k, n);
                    ++report.evidence_count;
                    if (va < vb) {
                        report.violations.push_back({k, n, Integer(va - vb)});
                    }
                    if (vb < vc) {
                        report.violations.push_back({k, n, Integer(vb - vc)});
                    }
                }
            }
            break;
        }
        case ConjectureId::conj2: {
            const auto q2 = table_q_r(2, limit);
            const auto q3 = table_q_r(3, limit);
            for (int64_t k = 1; k <= k_max; ++k) {
                const auto mok = table_m_ok(k, limit);
                for (int64_t n = 0; n <= limit; ++n) {
                    Integer s2 = 0, s3 = 0;
                    for (int64_t j = 0; 2 * j <= n; ++j) {
                        mpz_addmul(s2.get_mpz_t(), mok(j).get_mpz_t(), q2(n - 2 * j).get_mpz_t());
                    }
                    for (int64_t j = 0; 3 * j <= n; ++j) {
                        mpz_addmul(s3.get_mpz_t(), mok(j).get_mpz_t(), q3(n - 3 * j).get_mpz_t());
                    }
                    ++report.evidence_count;
                    if (s3 > s2) {
                        report.violations.push_back({k, n, Integer(s2 - s3)});
                    }
                    if (s2 > mok(n)) {
                        report.violations.push_back({k, n, Integer(mok(n) - s2)});
                    }
                }
            }
            break;
        }
        case ConjectureId::conj41:
        case ConjectureId::conj42:
            for (int64_t k = 1; k <= k_max; ++k) {
                const auto s = conjectured_theta_series(id, k, as_size(limit));
                for (size_t n = 0; n <= as_size(limit); ++n) {
                    ++report.evidence_count;
                    if (sgn(s[n]) < 0) {
                        report.violations.push_back({k, static_cast<int64_t>(n), s[n]});
                    }
                }
            }
            break;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Parity corollaries

std::string_view to_string(ParityId id)
{
    switch (id) {
        case ParityId::cor13:
            return "COR13";
        case ParityId::cor16a:
            return "COR16A";
        case ParityId::cor16b:
            return "COR16B";
        case ParityId::cor16c:
            return "COR16C";
        case ParityId::cor43a:
            return "COR43A";
        case ParityId::cor43b:
            return "COR43B";
    }
    return "?";
}

std::optional<ParityId> parse_parity(std::string_view name)
{
    for (auto id : all_parities) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

FamilyReport verify_parity(ParityId id, int64_t n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("parity check needs n_max >= 1");
    }
    constexpr FigurateSeq pent{FigurateKind::gen_pentagonal, 1};
    const auto signed_square = [](int64_t mult) {
        return FigurateSeq{FigurateKind::square, mult, IndexDomain::signed_index};
    };

    FigurateSeq a = pent, b = pent, target = pent;
    switch (id) {
        case ParityId::cor13:
            b = {FigurateKind::gen_pentagonal, 2};
            target = {FigurateKind::triangular, 1};
            break;
        case ParityId::cor16a:
            b = signed_square(1);
            break;
        case ParityId::cor16b:
            b = signed_square(2);
            break;
        case ParityId::cor16c:
            b = signed_square(3);
            break;
        case ParityId::cor43a:
            target = {FigurateKind::gen_pentagonal, 2};
            break;
        case ParityId::cor43b:
            b = {FigurateKind::triangular, 1};
            target = {FigurateKind::gen_pentagonal, 4};
            break;
    }

    FamilyReport report;
    report.family_id = std::string(to_string(id));
    report.n_range = {0, n_max};
    const auto counts = representation_counts(n_max, a, b);
    for (int64_t n = 0; n <= n_max; ++n) {
        const auto count = counts[as_size(n)];
        ++report.evidence_count;
        if ((count % 2 == 1) != is_member(target, n)) {
            report.violations.push_back({0, n, Integer(static_cast<long>(count))});
        }
    }
    return report;
}

} // namespace qseries
