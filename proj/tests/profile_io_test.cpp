#include "torsig/errors.hpp"
#include "torsig/profile_io.hpp"

#include <catch_amalgamated.hpp>

using torsig::TorusKnot;

TEST_CASE("JSON rendering of T(2,3)") {
    const auto prof = torsig::signature_profile(TorusKnot(2, 3));
    CHECK(torsig::profile_to_json(prof) == R"({"p":2,"q":3,"breakpoints":["1/6","5/6"],"values":[0,-2,0]})");
}

TEST_CASE("TSV rendering") {
    const auto prof = torsig::signature_profile(TorusKnot(2, 3));
    CHECK(torsig::profile_to_tsv(prof) == "0\t1/6\t0\n1/6\t5/6\t-2\n5/6\t1\t0\n");
}

TEST_CASE("JSON round trip") {
    for (auto [p, q] : {std::pair{2, 3}, {3, 5}, {4, 7}, {7, 9}}) {
        const auto prof = torsig::signature_profile(TorusKnot(p, q));
        const auto back = torsig::profile_from_json(torsig::profile_to_json(prof));
        CHECK(back.p == prof.p);
        CHECK(back.q == prof.q);
        CHECK(back.breakpoints == prof.breakpoints);
        CHECK(back.values == prof.values);
    }
}

TEST_CASE("malformed JSON is rejected") {
    for (const char* text : {"", "{", "[]", R"({"p":2,"q":3,"breakpoints":["1/6"],"values":[0]})",
                             R"({"p":2,"q":3,"breakpoints":["x"],"values":[0,1]})",
                             R"({"p":2,"q":3,"breakpoints":[1],"values":[0,1]})",
                             R"({"q":3,"breakpoints":[],"values":[0]})"}) {
        INFO(text);
        CHECK_THROWS_AS(torsig::profile_from_json(text), torsig::InvalidArgument);
    }
}
