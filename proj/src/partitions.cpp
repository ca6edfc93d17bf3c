#include <qseries/partitions.hpp>

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace qseries
{

namespace
{

const Integer zero_value{0};

// s / (a; q^step)_length, one exact binomial division per live factor.
void divide_by(Series &s, const PochSpec &spec)
{
    for (std::size_t j = 0; !spec.length || j < *spec.length; ++j) {
        const auto e = spec.offset + spec.step * j;
        if (e > s.order()) {
            break;
        }
        s.over_binomial(spec.sign, e);
    }
}

std::int64_t binom2(std::int64_t k)
{
    return k * (k - 1) / 2;
}

} // namespace

std::string FunctionId::name() const
{
    const auto with = [this](const char *base) { return std::string(base) + "(" + std::to_string(param) + ")"; };
    switch (kind) {
        case PartitionKind::p:
            return "P";
        case PartitionKind::q:
            return "Q";
        case PartitionKind::q_r:
            return with("Q_R");
        case PartitionKind::overpartition:
            return "OVERPARTITION";
        case PartitionKind::pod:
            return "POD";
        case PartitionKind::m_k:
            return with("M_K");
        case PartitionKind::m_ok:
            return with("M_OK");
        case PartitionKind::mp_k:
            return with("MP_K");
    }
    return "?";
}

std::optional<PartitionKind> parse_partition_kind(const std::string &name)
{
    static const std::map<std::string, PartitionKind> names{
        {"P", PartitionKind::p},       {"Q", PartitionKind::q},
        {"Q_R", PartitionKind::q_r},   {"OVERPARTITION", PartitionKind::overpartition},
        {"POD", PartitionKind::pod},   {"M_K", PartitionKind::m_k},
        {"M_OK", PartitionKind::m_ok}, {"MP_K", PartitionKind::mp_k},
    };
    if (auto it = names.find(name); it != names.end()) {
        return it->second;
    }
    return std::nullopt;
}

bool is_parameterized(PartitionKind kind)
{
    return kind == PartitionKind::q_r || kind == PartitionKind::m_k || kind == PartitionKind::m_ok
           || kind == PartitionKind::mp_k;
}

void validate(const FunctionId &id)
{
    if (id.kind == PartitionKind::q_r && id.param < 2) {
        throw std::invalid_argument("Q_R needs r >= 2");
    }
    if (is_parameterized(id.kind) && id.kind != PartitionKind::q_r && id.param < 1) {
        throw std::invalid_argument(id.name() + " needs k >= 1");
    }
}

FunctionTable::FunctionTable(FunctionId id, std::vector<Integer> values)
    : id_(id), values_(std::move(values))
{
    if (values_.empty()) {
        throw std::invalid_argument("function table needs at least f(0)");
    }
}

const Integer &FunctionTable::operator()(std::int64_t n) const
{
    if (n < 0) {
        return zero_value;
    }
    if (n > n_max()) {
        throw std::out_of_range(id_.name() + " table holds n <= " + std::to_string(n_max()) + ", asked for "
                                + std::to_string(n));
    }
    return values_[static_cast<std::size_t>(n)];
}

Series gf_p(std::size_t order)
{
    return pochhammer_inverse(PochSpec::of(1, 1), order);
}

Series gf_q(std::size_t order)
{
    return pochhammer(PochSpec::negated(1, 1), order);
}

Series gf_q_r(std::int64_t r, std::size_t order)
{
    validate({PartitionKind::q_r, r});
    const auto ru = static_cast<std::size_t>(r);
    auto s = pochhammer(PochSpec::of(ru, 2 * ru), order);
    divide_by(s, PochSpec::of(1, 2));
    return s;
}

Series gf_overpartition(std::size_t order)
{
    auto s = pochhammer(PochSpec::negated(1, 1), order);
    divide_by(s, PochSpec::of(1, 1));
    return s;
}

Series gf_pod(std::size_t order)
{
    auto s = pochhammer(PochSpec::negated(1, 2), order);
    divide_by(s, PochSpec::of(2, 2));
    return s;
}

Series gf_m_k(std::int64_t k, std::size_t order)
{
    validate({PartitionKind::m_k, k});
    // [n-1, k-1] / (q;q)_n == 1 / ((q;q)_{k-1} (q;q)_{n-k} (1 - q^n)), zero for n < k.
    Series sum(order);
    auto tail = Series::one(order); // 1 / (q;q)_{n-k}
    for (std::int64_t n = k;; ++n) {
        const auto e = binom2(k) + (k + 1) * n;
        if (e > static_cast<std::int64_t>(order)) {
            break;
        }
        if (n > k) {
            tail.over_binomial(1, static_cast<std::size_t>(n - k));
        }
        auto term = shift(tail, static_cast<std::size_t>(e));
        term.over_binomial(1, static_cast<std::size_t>(n));
        sum += term;
    }
    if (k > 1) {
        divide_by(sum, PochSpec::of(1, 1, static_cast<std::size_t>(k - 1)));
    }
    return sum;
}

Series gf_m_ok(std::int64_t k, std::size_t order)
{
    validate({PartitionKind::m_ok, k});
    Series sum(order);
    // 1 / ((q^2;q^2)_j (q;q^2)_{k+j+1})
    auto denom = pochhammer_inverse(PochSpec::of(1, 2, static_cast<std::size_t>(k + 1)), order);
    for (std::int64_t j = 0;; ++j) {
        const auto e = (k + 1) * (k + 1) + (2 * k + 2 * j + 3) * j;
        if (e > static_cast<std::int64_t>(order)) {
            break;
        }
        if (j > 0) {
            denom.over_binomial(1, static_cast<std::size_t>(2 * j));
            denom.over_binomial(1, static_cast<std::size_t>(2 * (k + j) + 1));
        }
        sum += shift(denom, static_cast<std::size_t>(e));
    }
    return sum;
}

Series gf_mp_k(std::int64_t k, std::size_t order)
{
    validate({PartitionKind::mp_k, k});
    Series sum(order);
    // ratio_j = (-q^{2j+2k+3};q^2)_inf / (q^{2k+2j+2};q^2)_inf
    auto ratio = pochhammer(PochSpec::negated(static_cast<std::size_t>(2 * k + 3), 2), order);
    divide_by(ratio, PochSpec::of(static_cast<std::size_t>(2 * k + 2), 2));
    for (std::int64_t j = 0;; ++j) {
        const auto e = k * (2 * j + 2 * k + 1);
        if (e > static_cast<std::int64_t>(order)) {
            break;
        }
        if (j > 0) {
            ratio.times_binomial(1, static_cast<std::size_t>(2 * k + 2 * j));
            ratio.over_binomial(-1, static_cast<std::size_t>(2 * j + 2 * k + 1));
        }
        sum += shift(ratio, static_cast<std::size_t>(e));
    }
    sum *= pochhammer(PochSpec::negated(1, 2, static_cast<std::size_t>(k)), order);
    if (k > 1) {
        divide_by(sum, PochSpec::of(2, 2, static_cast<std::size_t>(k - 1)));
    }
    return sum;
}

Series generating_function(const FunctionId &id, std::size_t order)
{
    validate(id);
    switch (id.kind) {
        case PartitionKind::p:
            return gf_p(order);
        case PartitionKind::q:
            return gf_q(order);
        case PartitionKind::q_r:
            return gf_q_r(id.param, order);
        case PartitionKind::overpartition:
            return gf_overpartition(order);
        case PartitionKind::pod:
            return gf_pod(order);
        case PartitionKind::m_k:
            return gf_m_k(id.param, order);
        case PartitionKind::m_ok:
            return gf_m_ok(id.param, order);
        case PartitionKind::mp_k:
            return gf_mp_k(id.param, order);
    }
    throw std::logic_error("unknown partition kind");
}

FunctionTable make_table(const FunctionId &id, std::int64_t n_max)
{
    if (n_max < 0) {
        throw std::invalid_argument("table n_max must be nonnegative");
    }
    auto gf = generating_function(id, static_cast<std::size_t>(n_max));
    const auto c = gf.coeffs();
    return FunctionTable(id, std::vector<Integer>(c.begin(), c.end()));
}

namespace
{

// Visits every partition of n as a nonincreasing part list.
void for_each_partition(std::int64_t n, const std::function<void(const std::vector<std::int64_t> &)> &visit)
{
    std::vector<std::int64_t> parts;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rest, std::int64_t max_part) {
        if (rest == 0) {
            visit(parts);
            return;
        }
        for (auto part = std::min(rest, max_part); part >= 1; --part) {
            parts.push_back(part);
            rec(rest - part, part);
            parts.pop_back();
        }
    };
    rec(n, n);
}

std::map<std::int64_t, std::int64_t> multiplicities(const std::vector<std::int64_t> &parts)
{
    std::map<std::int64_t, std::int64_t> m;
    for (auto p : parts) {
        ++m[p];
    }
    return m;
}

bool is_m_k(const std::vector<std::int64_t> &parts, std::int64_t k)
{
    const auto mult = multiplicities(parts);
    for (std::int64_t i = 1; i < k; ++i) {
        if (!mult.contains(i)) {
            return false;
        }
    }
    if (mult.contains(k)) {
        return false;
    }
    std::int64_t above = 0;
    std::int64_t below = 0;
    for (auto p : parts) {
        (p > k ? above : below) += 1;
    }
    return above > below;
}

bool is_mp_k(const std::vector<std::int64_t> &parts, std::int64_t k)
{
    const auto mult = multiplicities(parts);
    // Smallest part exceeding 2k-1.
    auto first = mult.upper_bound(2 * k - 1);
    if (first == mult.end() || first->first % 2 == 0 || first->second != k) {
        return false;
    }
    for (const auto &[part, count] : mult) {
        if (part != first->first && part % 2 == 1 && count > 1) {
            return false;
        }
    }
    return true;
}

} // namespace

Integer enumerate_oracle(const FunctionId &id, std::int64_t n, std::int64_t ceiling)
{
    validate(id);
    if (id.kind == PartitionKind::m_ok) {
        throw std::invalid_argument("no enumeration oracle for M_OK");
    }
    if (n > ceiling) {
        throw std::out_of_range("enumeration oracle refuses n = " + std::to_string(n) + " above ceiling "
                                + std::to_string(ceiling));
    }
    if (n < 0) {
        return 0;
    }
    Integer count = 0;
    for_each_partition(n, [&](const std::vector<std::int64_t> &parts) {
        const auto mult = multiplicities(parts);
        const bool distinct = mult.size() == parts.size();
        switch (id.kind) {
            case PartitionKind::p:
                count += 1;
                break;
            case PartitionKind::q:
                count += distinct ? 1 : 0;
                break;
            case PartitionKind::q_r: {
                bool ok = distinct;
                for (auto p : parts) {
                    ok = ok && (p % id.param != 0);
                }
                count += ok ? 1 : 0;
                break;
            }
            case PartitionKind::overpartition: {
                Integer ways;
                mpz_ui_pow_ui(ways.get_mpz_t(), 2, mult.size());
                count += ways;
                break;
            }
            case PartitionKind::pod: {
                bool ok = true;
                for (const auto &[part, c] : mult) {
                    ok = ok && (part % 2 == 0 || c == 1);
                }
                count += ok ? 1 : 0;
                break;
            }
            case PartitionKind::m_k:
                count += is_m_k(parts, id.param) ? 1 : 0;
                break;
            case PartitionKind::mp_k:
                count += is_mp_k(parts, id.param) ? 1 : 0;
                break;
            case PartitionKind::m_ok:
                break;
        }
    });
    return count;
}

} // namespace qseries
