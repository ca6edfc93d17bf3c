#include <doctest.h>

#include <qseries/report_io.hpp>

using namespace qseries;

TEST_CASE("series json")
{
    auto j = to_json(Series(3, {1, -1, 0, 7}));
    CHECK(j["order"] == 3);
    CHECK(j["coeffs"] == Json::array({"1", "-1", "0", "7"}));
}

TEST_CASE("big values are decimal strings")
{
    auto t = table_p(500);
    auto j = to_json(t);
    CHECK(j["name"] == "P");
    CHECK(j["n_max"] == 500);
    // p(500) has 22 digits and does not fit a double exactly.
    CHECK(j["values"][500] == "2300165032574323995027");
    CHECK(j["values"][500].is_string());
}

TEST_CASE("table csv")
{
    const auto csv = to_csv(table_q(20));
    CHECK(csv.rfind("n,value\n", 0) == 0);
    CHECK(csv.size() > 6);
    CHECK(csv.substr(csv.size() - 6) == "20,64\n");
    std::size_t rows = 0;
    for (char c : csv) {
        rows += c == '\n';
    }
    CHECK(rows == 22); // header + n = 0..20
}

TEST_CASE("identity report views")
{
    IdentityReport pass{IdentityId::th14, {2, 3}, 300, std::nullopt, {}};
    auto j = to_json(pass);
    CHECK(j["outcome"] == "PASS");
    CHECK(j["identity_id"] == "ID_TH14");
    CHECK(j["params"]["k"] == 2);
    CHECK(j["params"]["r"] == 3);
    CHECK_FALSE(j.contains("first_mismatch"));
    CHECK(to_csv(pass) == "identity_id,k,r,order,outcome,exponent,lhs,rhs\nID_TH14,2,3,300,PASS,,,\n");

    IdentityReport fail{IdentityId::gauss4, {0, 0}, 10, Mismatch{4, Integer(2), Integer(-3)}, {"w"}};
    j = to_json(fail);
    CHECK(j["outcome"] == "FAIL");
    CHECK_FALSE(j["params"].contains("k"));
    CHECK(j["first_mismatch"]["exponent"] == 4);
    CHECK(j["first_mismatch"]["lhs"] == "2");
    CHECK(j["first_mismatch"]["rhs"] == "-3");
    CHECK(j["warnings"] == Json::array({"w"}));
    CHECK(to_csv(fail) == "identity_id,k,r,order,outcome,exponent,lhs,rhs\nID_GAUSS4,,,10,FAIL,4,2,-3\n");
}

TEST_CASE("family report lists are sorted by (k, n)")
{
    FamilyReport r;
    r.family_id = "FAM_X";
    r.k_range = {1, 3};
    r.n_range = {0, 9};
    r.evidence_count = 30;
    r.violations = {{3, 1, Integer(-1)}, {1, 5, Integer(-2)}, {1, 2, Integer(-3)}};
    auto j = to_json(r, "inequality");
    CHECK(j["outcome"] == "VIOLATED");
    REQUIRE(j["violations"].size() == 3);
    CHECK(j["violations"][0]["n"] == 2);
    CHECK(j["violations"][1]["n"] == 5);
    CHECK(j["violations"][2]["k"] == 3);
    CHECK(j["violations"][0]["value"] == "-3");
    CHECK(j["k_range"] == Json::array({1, 3}));
    CHECK_FALSE(to_json(r, "parity").contains("k_range"));
    CHECK(to_csv(r).find("\nFAM_X,1,3,0,9,30,3,0,0,VIOLATED\n") != std::string::npos);
}

TEST_CASE("rendering is byte-identical across runs")
{
    auto a = render(to_json(verify_parity(ParityId::cor16b, 500), "parity"));
    auto b = render(to_json(verify_parity(ParityId::cor16b, 500), "parity"));
    CHECK(a == b);
    CHECK(a.back() == '\n');
}
