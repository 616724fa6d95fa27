#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "removal/generate.hpp"
#include "removal/io.hpp"
#include "removal/record.hpp"
#include "removal/rng.hpp"

using namespace removal;

TEST_CASE("system files round-trip") {
    for (int rep = 0; rep < 20; ++rep) {
        GroupParams g(rep % 2 ? 2 : 3, 3);
        TripleSystem sys = random_system_budgeted(g, 100, derive_seed(121, rep));
        std::istringstream in(format_system(sys));
        Instance parsed = parse_instance(in);
        auto* back = std::get_if<TripleSystem>(&parsed);
        REQUIRE(back != nullptr);
        CHECK(back->params == g);
        CHECK(back->X.members() == sys.X.members());
        CHECK(back->Y.members() == sys.Y.members());
        CHECK(back->Z.members() == sys.Z.members());
    }
}

TEST_CASE("matched files round-trip") {
    GroupParams g(3, 2);
    MatchedTriples m = random_singleton(g, 9);
    m.triples.push_back(Triangle{4, 4, g.neg(g.add(4, 4))});
    std::istringstream in(format_matched(m));
    Instance parsed = parse_instance(in);
    auto* back = std::get_if<MatchedTriples>(&parsed);
    REQUIRE(back != nullptr);
    CHECK(back->triples == m.triples);
    CHECK_FALSE(back->cross_free_verified);  // never trusted from disk
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            parse_instance(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("bogus header\n", 1);
    expect_line("fpn v2 p=2 n=3\n", 1);
    expect_line("fpn v1 p=9 n=3\n", 1);  // p not prime
    expect_line("fpn v1 p=2 n=3\nX: 1 2\nW: 3\n", 3);
    expect_line("fpn v1 p=2 n=3\nX: 1 99\n", 2);     // out of range
    expect_line("fpn v1 p=2 n=3\nX: 1 -2\n", 2);     // not an index
    expect_line("fpn v1 p=2 n=2\nT: 1 2 0\n", 2);    // does not sum to zero
    expect_line("fpn v1 p=2 n=2\nT: 1 2\n", 2);      // too few
    expect_line("fpn v1 p=2 n=2\nT: 1 2 3 0\n", 2);  // too many
    expect_line("fpn v1 p=2 n=2\nX: 1\nT: 1 2 3\n", 3);  // mixed kinds
    expect_line("fpn v1 p=2 n=2\n", 2);  // nothing after header
}

TEST_CASE("comments and blank lines are ignored") {
    std::istringstream in("# instance\n\nfpn v1 p=2 n=2\n# sets\nX: 1\nY: 2\nZ: 3\n");
    Instance parsed = parse_instance(in);
    auto* sys = std::get_if<TripleSystem>(&parsed);
    REQUIRE(sys != nullptr);
    CHECK(count_naive(*sys) == 1);
}

TEST_CASE("experiment records are reproducible and exact") {
    auto build = [] {
        ExperimentRecord rec("count", 42);
        rec.param_int("p", 2);
        rec.param("instance", "demo.fpn");
        rec.out_int("triangles", 16);
        rec.out_rational("delta", Rational::of(16, 256));
        rec.out_real("c_p", 0.08170416594551047);
        rec.out_bool("verified", true);
        rec.set_wall_millis(999);  // excluded from the comparison contract
        return rec;
    };
    std::string a = build().to_json();
    std::string b = build().to_json();
    CHECK(a == b);
    CHECK(a.find("\"delta\": \"1/16\"") != std::string::npos);  // exact rational
    CHECK(a.find("0.081704165945510471") != std::string::npos);  // 17 significant digits
    CHECK(a.find("\"seed\": 42") != std::string::npos);

    ExperimentRecord wide("big", 0);
    wide.out_int128("count", (static_cast<u128>(1) << 100));
    std::string j = wide.to_json();
    CHECK(j.find("\"1267650600228229401496703205376\"") != std::string::npos);
}

TEST_CASE("csv emission") {
    ExperimentRecord rec("frontier", 0);
    rec.csv_header({"n", "m", "epsilon"});
    rec.csv_row({"4", "12", "3/4"});
    rec.csv_row({"8", "144", "9/16"});
    std::string csv = rec.csv_text();
    CHECK(csv == "n,m,epsilon\n4,12,3/4\n8,144,9/16\n");
}

TEST_CASE("output directory resolution") {
    unsetenv("REMOVAL_LAB_OUT");
    CHECK(resolve_out_dir("explicit") == "explicit");
    CHECK(resolve_out_dir("") == "out");
    setenv("REMOVAL_LAB_OUT", "/tmp/envdir", 1);
    CHECK(resolve_out_dir("") == "/tmp/envdir");
    CHECK(resolve_out_dir("flagged") == "flagged");
    unsetenv("REMOVAL_LAB_OUT");
}
