#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "polystab/cli_app.hpp"
#include "polystab/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

using namespace polystab;
using namespace polystab::testing;
using nlohmann::json;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli_main(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("polynomial parsing") {
    {
        const ComplexPolynomial p = parse_polynomial("1 2 3 1");
        REQUIRE(p.is_real());
        CHECK(p.as_real() == Polynomial{1, 2, 3, 1});
    }
    {
        const ComplexPolynomial p = parse_polynomial("1/2 0 -3/4");
        REQUIRE(p.is_real());
        CHECK(p.as_real() == Polynomial{Rat(1, 2), Rat(0), Rat(-3, 4)});
    }
    {
        const ComplexPolynomial p = parse_polynomial("1 1+2i -3/4i");
        CHECK_FALSE(p.is_real());
        CHECK(p.coefficients()[1] == CRat(Rat(1), Rat(2)));
        CHECK(p.coefficients()[2] == CRat(Rat(0), Rat(-3, 4)));
    }
    CHECK_THROWS_AS(parse_polynomial("0 1 1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    try {
        parse_polynomial("1 2 x 4");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.token_index == 2);
    }
    CHECK_THROWS_AS(parse_polynomial("1 1/0"), ParseError);
}

TEST_CASE("parse/format round trip") {
    Rng rng(424242);
    for (int i = 0; i < 150; ++i) {
        const Polynomial p = random_poly(rng, uniform_int(rng, 0, 8));
        const ComplexPolynomial back = parse_polynomial(format_polynomial(p));
        REQUIRE(back.is_real());
        CHECK(back.as_real() == p);
    }
    for (int i = 0; i < 100; ++i) {
        const FactoredComplex fc = random_factored_complex(rng, 5, true);
        CHECK(parse_polynomial(format_polynomial(fc.p)) == fc.p);
    }
}

TEST_CASE("stability command") {
    const CliResult r = run({"stability", "1 2 3 1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("verdict: stable") != std::string::npos);
    CHECK(r.out.find("h: 1 2 5/2 1") != std::string::npos);
}

TEST_CASE("crosscheck exit codes and agreement") {
    const CliResult r = run({"crosscheck", "1 1 1 2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("agreement: yes") != std::string::npos);
    for (const char* method : {"sturm", "routh", "hurwitz", "hankel", "cf"})
        CHECK(r.out.find(std::string(method) + ": (n-, n+, axis) = (1, 2, 0)") !=
              std::string::npos);
}

TEST_CASE("json output is exact") {
    const CliResult r = run({"--format", "json", "stability", "1 2 3 1"});
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["stable"] == true);
    CHECK(j["h"] == json::array({"1", "2", "5/2", "1"}));
    const std::regex exact(R"(^-?\d+(/\d+)?$)");
    for (const auto& h : j["h"]) CHECK(std::regex_match(h.get<std::string>(), exact));
}

TEST_CASE("json distribution carries exact strings only") {
    const CliResult r = run({"--format", "json", "distribution", "1 1 1 1", "--method", "routh"});
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["distribution"]["n_minus"] == 1);
    CHECK(j["distribution"]["axis_count"] == 2);
    CHECK(j["distribution"]["axis_omega_squared"] == "1");
}

TEST_CASE("input errors exit with status 2") {
    CHECK(run({"stability", "0 1 1"}).status == 2);
    CHECK(run({"stability", ""}).status == 2);
    CHECK(run({"distribution", "1 2 nope"}).status == 2);
    CHECK(run({"lorenz", "10", "-1", "8/3"}).status == 2);
    CHECK(run({"nonsense"}).status == 2);
    // Complex input to a real-only route.
    CHECK(run({"stability", "1 2i"}).status == 2);
    CHECK(run({"distribution", "1 2i", "--method", "hurwitz"}).status == 2);
    CHECK(run({"distribution", "1 2i", "--method", "sturm"}).status == 0);
}

TEST_CASE("lorenz command") {
    const CliResult r = run({"--format", "json", "lorenz", "10", "28", "8/3"});
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["r_star"] == "470/19");
    CHECK(j["wing"]["classification"] == "unstable");
    CHECK(j["fixed_points"] == 3);
}

TEST_CASE("hodograph writes plot files and reports the exact winding") {
    const std::string csv_path = "/tmp/polystab_test_hodograph.csv";
    const std::string svg_path = "/tmp/polystab_test_hodograph.svg";
    {
        const CliResult r =
            run({"hodograph", "1 2 3 1", "--points", "64", "--out", csv_path});
        CHECK(r.status == 0);
        CHECK(r.out.find("delta/pi: 3") != std::string::npos);
        std::ifstream file(csv_path);
        REQUIRE(file.good());
        std::string header;
        std::getline(file, header);
        CHECK(header == "omega,re,im");
        int rows = 0;
        for (std::string line; std::getline(file, line);) ++rows;
        CHECK(rows == 64);
    }
    {
        const CliResult r =
            run({"hodograph", "1 2 3 1", "--points", "16", "--out", svg_path});
        CHECK(r.status == 0);
        std::ifstream file(svg_path);
        REQUIRE(file.good());
        std::stringstream content;
        content << file.rdbuf();
        CHECK(content.str().find("<polyline") != std::string::npos);
    }
    // Axis roots: refuse with the gcd in the message.
    const CliResult bad = run({"hodograph", "1 1 1 1"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("1 0 -1") != std::string::npos);
    std::remove(csv_path.c_str());
    std::remove(svg_path.c_str());
}

TEST_CASE("batch input runs every line") {
    const std::string path = "/tmp/polystab_test_batch.txt";
    {
        std::ofstream file(path);
        file << "1 2 3 1\n\n1 1 1 2\n";
    }
    const CliResult r = run({"crosscheck", "--in", path});
    CHECK(r.status == 0);
    CHECK(r.out.find("## 1 2 3 1") != std::string::npos);
    CHECK(r.out.find("## 1 1 1 2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("distribution methods agree through the cli") {
    for (const char* method : {"routh", "sturm", "hankel", "cf"}) {
        const CliResult r = run({"distribution", "1 1 1 1", "--method", method});
        CHECK(r.status == 0);
        CHECK(r.out.find("n_minus: 1") != std::string::npos);
        CHECK(r.out.find("axis roots: 2") != std::string::npos);
    }
    // The minor-quotient route refuses the axis case.
    CHECK(run({"distribution", "1 1 1 1", "--method", "hurwitz"}).status == 2);
}
