#include <qseries/report_io.hpp>

#include <algorithm>
#include <sstream>

namespace qseries
{

namespace
{

Json points(std::vector<FamilyPoint> pts)
{
    std::sort(pts.begin(), pts.end(), [](const auto &a, const auto &b) {
        return a.k != b.k ? a.k < b.k : a.n < b.n;
    });
    Json out = Json::array();
    for (const auto &p : pts) {
        out.push_back({{"k", p.k}, {"n", p.n}, {"value", p.value.get_str()}});
    }
    return out;
}

} // namespace

std::string_view outcome(const IdentityReport &r)
{
    return r.passed() ? "PASS" : "FAIL";
}

std::string_view outcome(const FamilyReport &r)
{
    return r.clean() ? "CLEAN" : "VIOLATED";
}

Json to_json(const Series &s)
{
    Json coeffs = Json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(c.get_str());
    }
    return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const FunctionTable &t)
{
    Json values = Json::array();
    for (const auto &v : t.values()) {
        values.push_back(v.get_str());
    }
    return {{"kind", "table"}, {"name", t.id().name()}, {"n_max", t.n_max()}, {"values", std::move(values)}};
}

Json to_json(const IdentityReport &r)
{
    Json params = Json::object();
    if (uses_k(r.id)) {
        params["k"] = r.params.k;
    }
    if (uses_r(r.id)) {
        params["r"] = r.params.r;
    }
    Json j = {{"kind", "identity"},
              {"identity_id", std::string(to_string(r.id))},
              {"params", std::move(params)},
              {"order", r.order},
              {"outcome", std::string(outcome(r))}};
    if (r.failure) {
        j["first_mismatch"] = {{"exponent", r.failure->exponent},
                               {"lhs", r.failure->lhs.get_str()},
                               {"rhs", r.failure->rhs.get_str()}};
    }
    j["warnings"] = r.warnings;
    return j;
}

Json to_json(const FamilyReport &r, std::string_view kind)
{
    Json j = {{"kind", std::string(kind)}, {"family_id", r.family_id}};
    if (kind != "parity") {
        j["k_range"] = {r.k_range.first, r.k_range.second};
    }
    j["n_range"] = {r.n_range.first, r.n_range.second};
    j["evidence_count"] = r.evidence_count;
    j["outcome"] = std::string(outcome(r));
    j["violations"] = points(r.violations);
    j["boundary_mismatches"] = points(r.boundary_mismatches);
    j["observations"] = points(r.observations);
    return j;
}

std::string to_csv(const FunctionTable &t)
{
    std::ostringstream os;
    os << "n,value\n";
    for (std::size_t n = 0; n < t.values().size(); ++n) {
        os << n << ',' << t.values()[n] << '\n';
    }
    return os.str();
}

std::string to_csv(const IdentityReport &r)
{
    std::ostringstream os;
    os << "identity_id,k,r,order,outcome,exponent,lhs,rhs\n";
    os << to_string(r.id) << ',';
    if (uses_k(r.id)) {
        os << r.params.k;
    }
    os << ',';
    if (uses_r(r.id)) {
        os << r.params.r;
    }
    os << ',' << r.order << ',' << outcome(r) << ',';
    if (r.failure) {
        os << r.failure->exponent << ',' << r.failure->lhs << ',' << r.failure->rhs;
    } else {
        os << ",,";
    }
    os << '\n';
    return os.str();
}

// One summary row; the point lists only exist in JSON.
std::string to_csv(const FamilyReport &r)
{
    std::ostringstream os;
    os << "family_id,k_min,k_max,n_min,n_max,evidence_count,violations,boundary_mismatches,observations,outcome\n";
    os << r.family_id << ',' << r.k_range.first << ',' << r.k_range.second << ',' << r.n_range.first << ','
       << r.n_range.second << ',' << r.evidence_count << ',' << r.violations.size() << ','
       << r.boundary_mismatches.size() << ',' << r.observations.size() << ',' << outcome(r) << '\n';
    return os.str();
}

std::string render(const Json &j)
{
    return j.dump(2) + "\n";
}

} // namespace qseries
