#include <doctest.h>

#include "dap/dyck.hpp"
#include "support/oracles.hpp"

using namespace dap;
using dyck::GroupWord;
using dyck::Polygon;

namespace {

GroupWord word_of(std::vector<std::string> basis,
                  std::initializer_list<std::pair<const char*, long long>> coeffs) {
    GroupWord w(std::move(basis));
    for (const auto& [g, k] : coeffs) w.add_to(g, k);
    return w;
}

} // namespace

TEST_CASE("the three-triangle fixture validates") {
    Polygon p = oracle::sample_polygon();
    Report report = dyck::validate(p);
    CHECK(report.all_passed());

    bool closure_flag = false;
    bool note_echoed = false;
    for (const auto& e : report.entries()) {
        if (e.identity == "cycle 3 is a closed edge cycle") {
            closure_flag = e.note == "closes B1->C";
        }
        if (e.identity == "note" && e.note.find("closes through C") != std::string::npos) {
            note_echoed = true;
        }
    }
    CHECK(closure_flag);
    CHECK(note_echoed);
}

TEST_CASE("a single triangle validates (V - E + F = 3 - 3 + 1)") {
    Polygon p = oracle::sample_polygon();
    Polygon triangle;
    triangle.field = p.field;
    triangle.vertices = {p.vertices[0], p.vertices[1], p.vertices[6]}; // A, B, B1
    triangle.edges = {{"A", "B"}, {"B", "B1"}, {"B1", "A"}};
    triangle.cycles = {{"A", "B", "B1"}};
    triangle.generators = {"A", "B"};
    CHECK(dyck::validate(triangle).all_passed());
}

TEST_CASE("disconnected complexes are rejected") {
    Polygon p = oracle::sample_polygon();
    Polygon two = p;
    two.edges = {{"A", "A-C"}, {"A-C", "B3"}, {"B3", "A"},
                 {"B", "B-C"}, {"B-C", "B4"}, {"B4", "B"}};
    two.cycles = {{"A", "A-C", "B3"}, {"B", "B-C", "B4"}};
    Report report = dyck::validate(two);
    CHECK_FALSE(report.all_passed());
    bool connectivity_failed = false;
    for (const auto& e : report.entries()) {
        if (e.identity == "edge graph is connected" && e.status == CheckEntry::Status::fail) {
            connectivity_failed = true;
        }
    }
    CHECK(connectivity_failed);
}

TEST_CASE("validation catches structural defects") {
    Polygon base = oracle::sample_polygon();

    Polygon bad_edge = base;
    bad_edge.edges.push_back({"A", "nowhere"});
    CHECK_FALSE(dyck::validate(bad_edge).all_passed());

    Polygon open_cycle = base;
    open_cycle.cycles[0] = {"A", "A-C", "B4"}; // B4->A is not an edge
    CHECK_FALSE(dyck::validate(open_cycle).all_passed());

    Polygon bad_euler = base;
    bad_euler.cycles.push_back({"A", "A-C", "B3"}); // duplicate face breaks V-E+F
    CHECK_FALSE(dyck::validate(bad_euler).all_passed());

    Polygon off_line = base;
    off_line.generators = {"A", "B", "B1"}; // B1 sits off the generator line
    CHECK_FALSE(dyck::validate(off_line).all_passed());
}

TEST_CASE("reach walks shortest paths with frozen answers") {
    Polygon p = oracle::sample_polygon();

    auto to_b4 = dyck::reach(p, "A", "B4");
    CHECK(to_b4 == std::vector<std::string>{"A", "B", "B4"});

    auto to_b1 = dyck::reach(p, "A", "B1");
    CHECK(to_b1 == std::vector<std::string>{"A", "B", "C", "B1"});

    auto self = dyck::reach(p, "A", "A");
    CHECK(self == std::vector<std::string>{"A"});

    CHECK_THROWS_AS((void)dyck::reach(p, "A", "missing"), Error);
    CHECK_THROWS_AS((void)dyck::reach(p, "B1", "A"), Error); // from must be a generator
}

TEST_CASE("reach distances satisfy the triangle inequality") {
    Polygon p = oracle::sample_polygon();
    auto distance = [&](const std::string& from, const std::string& to) {
        return static_cast<long long>(dyck::reach(p, from, to).size()) - 1;
    };
    for (const auto& g : p.generators) {
        CHECK(distance(g, g) == 0);
        for (const auto& mid : p.generators) {
            for (const auto& v : p.vertices) {
                CHECK(distance(g, v.label) <= distance(g, mid) + distance(mid, v.label));
            }
        }
    }
}

TEST_CASE("present matches the independent BFS oracle on every vertex") {
    Polygon p = oracle::sample_polygon();
    for (const auto& v : p.vertices) {
        GroupWord word = dyck::present(p, v.label);
        auto expected = oracle::present_oracle(p, v.label);
        for (const auto& g : p.generators) {
            long long want = expected.count(g) ? expected[g] : 0;
            CHECK(word.coefficient(g) == want);
        }
    }
}

TEST_CASE("present: frozen words") {
    Polygon p = oracle::sample_polygon();
    CHECK(dyck::present(p, "A") == word_of(p.generators, {{"A", 1}}));
    CHECK(dyck::present(p, "B") == word_of(p.generators, {{"B", 1}}));
    CHECK(dyck::present(p, "B4") == word_of(p.generators, {{"A", 1}, {"B", 1}}));
    CHECK(dyck::present(p, "B1") == word_of(p.generators, {{"A", 1}, {"B", 1}, {"C", 1}}));
    CHECK(dyck::present(p, "B4").path_measure() == 2);
    CHECK(dyck::present(p, "B1").path_measure() == 3);
    CHECK_THROWS_AS((void)dyck::present(p, "missing"), Error);
}

TEST_CASE("word operations") {
    std::vector<std::string> basis{"A", "B", "C"};
    GroupWord w1 = word_of(basis, {{"A", 1}, {"B", 2}});
    GroupWord w2 = word_of(basis, {{"B", 1}, {"C", 3}});
    CHECK(dyck::word_add(w1, w2) == word_of(basis, {{"A", 1}, {"B", 3}, {"C", 3}}));

    GroupWord zero(basis);
    CHECK(dyck::word_add(w1, zero) == w1);
    CHECK(dyck::word_add(w1, dyck::word_negate(w1)) == zero);

    GroupWord other(std::vector<std::string>{"X", "Y"});
    CHECK_THROWS_AS((void)dyck::word_add(w1, other), Error);

    CHECK(w1.to_json() == R"({"A":1,"B":2})");
    CHECK(zero.to_json() == "{}");
}

TEST_CASE("word group laws hold exhaustively for small coefficients") {
    std::vector<std::string> basis{"A", "B", "C"};
    std::vector<GroupWord> words;
    for (long long a = -3; a <= 3; ++a) {
        for (long long b = -3; b <= 3; ++b) {
            for (long long c = -3; c <= 3; ++c) {
                words.push_back(word_of(basis, {{"A", a}, {"B", b}, {"C", c}}));
            }
        }
    }
    REQUIRE(words.size() == 343);
    GroupWord zero(basis);
    for (const auto& w : words) {
        CHECK(dyck::word_add(w, zero) == w);
        CHECK(dyck::word_add(zero, w) == w);
        CHECK(dyck::word_add(w, dyck::word_negate(w)) == zero);
    }
    for (const auto& w1 : words) {
        for (const auto& w2 : words) {
            GroupWord sum = dyck::word_add(w1, w2);
            CHECK(sum.basis() == basis); // closure
            CHECK(sum == dyck::word_add(w2, w1));
        }
    }
    // associativity over all triples
    for (const auto& w1 : words) {
        for (const auto& w2 : words) {
            GroupWord left = dyck::word_add(w1, w2);
            for (const auto& w3 : words) {
                if (dyck::word_add(left, w3) != dyck::word_add(w1, dyck::word_add(w2, w3))) {
                    FAIL("associativity failed");
                }
            }
        }
    }
}

TEST_CASE("polygon JSON round-trips") {
    Polygon p = oracle::sample_polygon();
    Polygon back = Polygon::from_json(p.to_json(2));
    CHECK(back.vertices == p.vertices);
    CHECK(back.edges == p.edges);
    CHECK(back.cycles == p.cycles);
    CHECK(back.generators == p.generators);
    CHECK(back.notes == p.notes);
    CHECK(dyck::validate(back).all_passed());

    CHECK_THROWS_AS((void)Polygon::from_json("{not json"), Error);
    CHECK_THROWS_AS((void)Polygon::from_json(R"({"vertices": []})"), Error);
}
