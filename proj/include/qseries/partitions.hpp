#pragma once

// Exact value tables of partition functions, each read off its generating
// function, plus brute-force enumeration oracles for cross-validation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <qseries/series.hpp>

namespace qseries
{

enum class PartitionKind {
    p,             // all partitions
    q,             // distinct parts
    q_r,           // distinct parts, none divisible by r
    overpartition, // last occurrence of each part size may be overlined
    pod,           // odd parts not repeated
    m_k,           // k least missing part, more parts > k than < k
    m_ok,          // odd-part family with generating function q^{(k+1)^2} * ...
    mp_k,          // first part > 2k-1 is odd and occurs exactly k times
};

// A partition function, with its parameter (r for q_r, k for the k-families;
// ignored otherwise).
struct FunctionId {
    PartitionKind kind = PartitionKind::p;
    std::int64_t param = 0;

    // "P", "Q", "Q_R(3)", "OVERPARTITION", "POD", "M_K(2)", "M_OK(2)", "MP_K(2)"
    std::string name() const;
    bool operator==(const FunctionId &) const = default;
};

// Parses the names produced by FunctionId::name; param is supplied separately
// for parameterized kinds ("Q_R", "M_K", "M_OK", "MP_K").
std::optional<PartitionKind> parse_partition_kind(const std::string &name);
bool is_parameterized(PartitionKind kind);

// Validates the parameter for the kind (r >= 2, k >= 1); throws
// std::invalid_argument otherwise.
void validate(const FunctionId &id);

class FunctionTable
{
public:
    FunctionTable(FunctionId id, std::vector<Integer> values);

    const FunctionId &id() const
    {
        return id_;
    }
    std::int64_t n_max() const
    {
        return static_cast<std::int64_t>(values_.size()) - 1;
    }
    // f(n); zero for every negative n. Throws std::out_of_range above n_max.
    const Integer &operator()(std::int64_t n) const;

    const std::vector<Integer> &values() const
    {
        return values_;
    }

    bool operator==(const FunctionTable &) const = default;

private:
    FunctionId id_;
    std::vector<Integer> values_;
};

// Generating functions, truncated at `order`.
Series gf_p(std::size_t order);
Series gf_q(std::size_t order);
Series gf_q_r(std::int64_t r, std::size_t order);
Series gf_overpartition(std::size_t order);
Series gf_pod(std::size_t order);
// sum_{n>=1} q^{C(k,2)+(k+1)n} / (q;q)_n * [n-1, k-1]
Series gf_m_k(std::int64_t k, std::size_t order);
// q^{(k+1)^2} sum_{j>=0} q^{(2k+2j+3)j} / ((q^2;q^2)_j (q;q^2)_{k+j+1})
Series gf_m_ok(std::int64_t k, std::size_t order);
// (-q;q^2)_k/(q^2;q^2)_{k-1} sum_{j>=0} q^{k(2j+2k+1)} (-q^{2j+2k+3};q^2)_inf / (q^{2k+2j+2};q^2)_inf
Series gf_mp_k(std::int64_t k, std::size_t order);

Series generating_function(const FunctionId &id, std::size_t order);
FunctionTable make_table(const FunctionId &id, std::int64_t n_max);

inline FunctionTable table_p(std::int64_t n_max)
{
    return make_table({PartitionKind::p}, n_max);
}
inline FunctionTable table_q(std::int64_t n_max)
{
    return make_table({PartitionKind::q}, n_max);
}
inline FunctionTable table_q_r(std::int64_t r, std::int64_t n_max)
{
    return make_table({PartitionKind::q_r, r}, n_max);
}
inline FunctionTable table_overpartition(std::int64_t n_max)
{
    return make_table({PartitionKind::overpartition}, n_max);
}
inline FunctionTable table_pod(std::int64_t n_max)
{
    return make_table({PartitionKind::pod}, n_max);
}
inline FunctionTable table_m_k(std::int64_t k, std::int64_t n_max)
{
    return make_table({PartitionKind::m_k, k}, n_max);
}
inline FunctionTable table_m_ok(std::int64_t k, std::int64_t n_max)
{
    return make_table({PartitionKind::m_ok, k}, n_max);
}
inline FunctionTable table_mp_k(std::int64_t k, std::int64_t n_max)
{
    return make_table({PartitionKind::mp_k, k}, n_max);
}

inline constexpr std::int64_t default_oracle_ceiling = 60;

// Counts by explicit generation of every partition of n. Exponential: refuses
// n above `ceiling` with std::out_of_range. M_OK has no combinatorial oracle
// here and throws std::invalid_argument.
Integer enumerate_oracle(const FunctionId &id, std::int64_t n,
                         std::int64_t ceiling = default_oracle_ceiling);

} // namespace qseries
