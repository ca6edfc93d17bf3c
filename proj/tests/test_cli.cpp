#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include <qseries/cli.hpp>

namespace
{

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int status = qseries::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

nlohmann::json parse(const Run &r)
{
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST_CASE("table")
{
    auto r = invoke({"table", "--name", "Q", "--nmax", "20", "--format", "csv"});
    CHECK(r.status == 0);
    CHECK(r.out.substr(r.out.size() - 6) == "20,64\n");

    r = invoke({"table", "--name", "Q_R", "--r", "3", "--nmax", "4"});
    CHECK(r.status == 0);
    CHECK(parse(r)["name"] == "Q_R(3)");
    CHECK(parse(r)["values"][4] == "1");

    CHECK(invoke({"table", "--name", "M_K(2)", "--nmax", "7"}).status == 0);
    CHECK(invoke({"table", "--name", "M_K", "--nmax", "7"}).status == 64);
    CHECK(invoke({"table", "--name", "Q_R", "--r", "1", "--nmax", "7"}).status == 64);
    CHECK(invoke({"table", "--name", "NOPE", "--nmax", "7"}).status == 64);
    CHECK(invoke({"table", "--name", "P", "--nmax", "-1"}).status == 64);
    CHECK(invoke({"table", "--name", "P"}).status == 64);
}

TEST_CASE("identity")
{
    auto r = invoke({"identity", "--id", "ID_LEMMA21", "--k", "3", "--order", "200"});
    CHECK(r.status == 0);
    CHECK(parse(r)["outcome"] == "PASS");

    r = invoke({"identity", "--id", "ID_TH14", "--k", "2", "--r", "3", "--order", "300", "--format", "csv"});
    CHECK(r.status == 0);
    CHECK(r.out.find("ID_TH14,2,3,300,PASS") != std::string::npos);

    CHECK(invoke({"identity", "--id", "ID_TH14", "--r", "4"}).status == 64);
    CHECK(invoke({"identity", "--id", "ID_EQ2", "--k", "9"}).status == 64);
    CHECK(invoke({"identity", "--id", "ID_EQ2", "--order", "2001"}).status == 64);
    CHECK(invoke({"identity", "--id", "nope"}).status == 64);

    // Low order passes with a warning on stderr.
    r = invoke({"identity", "--id", "ID_EQ2", "--k", "5", "--order", "10"});
    CHECK(r.status == 0);
    CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("inequality, conjecture, parity")
{
    auto r = invoke({"inequality", "--family", "FAM_COR15B", "--kmax", "3", "--nmax", "300"});
    CHECK(r.status == 0);
    CHECK(parse(r)["outcome"] == "CLEAN");
    CHECK(parse(r)["evidence_count"] == 3 * 301);

    r = invoke({"conjecture", "--id", "CONJ41", "--kmax", "2", "--order", "200"});
    CHECK(r.status == 0);
    CHECK(parse(r)["kind"] == "conjecture");
    CHECK(invoke({"conjecture", "--id", "CONJ41", "--nmax", "200"}).status == 64);
    CHECK(invoke({"conjecture", "--id", "CONJ1", "--order", "200"}).status == 64);
    CHECK(invoke({"conjecture", "--id", "CONJ2", "--kmax", "2", "--nmax", "100"}).status == 0);

    r = invoke({"parity", "--id", "COR13", "--nmax", "100"});
    CHECK(r.status == 0);
    CHECK(parse(r)["violations"].empty());
    CHECK(invoke({"parity", "--id", "COR13", "--nmax", "0"}).status == 64);
}

TEST_CASE("bench defaults to csv")
{
    auto r = invoke({"bench", "--nmax", "200"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("kind,n_max,terms_at_nmax,wall_millis\n", 0) == 0);
    CHECK(r.out.find("REC4,200,9,") != std::string::npos);
    r = invoke({"bench", "--nmax", "50", "--format", "json"});
    CHECK(parse(r)["rows"].size() == 6);
}

TEST_CASE("all")
{
    auto r = invoke({"all", "--kmax", "2", "--nmax", "100", "--parity-nmax", "100", "--order", "120"});
    CHECK(r.status == 0);
    auto j = parse(r);
    CHECK(j["summary"]["outcome"] == "PASS");
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["families"].size() == 10);
    CHECK(j["parities"].size() == 6);
}

TEST_CASE("usage errors and help")
{
    CHECK(invoke({}).status == 64);
    CHECK(invoke({"frobnicate"}).status == 64);
    CHECK(invoke({"table", "--name", "P", "--nmax", "3", "--format", "xml"}).status == 64);
    auto r = invoke({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("identity") != std::string::npos);
}

TEST_CASE("--out writes the report to a file")
{
    const auto path = std::filesystem::temp_directory_path() / "qseries_cli_test.json";
    std::filesystem::remove(path);
    auto r = invoke({"parity", "--id", "COR43B", "--nmax", "50", "--out", path.string()});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in);
    auto j = nlohmann::json::parse(in);
    CHECK(j["family_id"] == "COR43B");
    std::filesystem::remove(path);

    CHECK(invoke({"parity", "--id", "COR13", "--nmax", "5", "--out", "/nonexistent/dir/x.json"}).status == 1);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args{"inequality", "--family", "FAM_EQ110", "--kmax", "4", "--nmax", "200"};
    CHECK(invoke(args).out == invoke(args).out);
}
