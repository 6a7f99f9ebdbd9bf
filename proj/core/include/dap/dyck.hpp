#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dap/plane.hpp"
#include "dap/report.hpp"

namespace dap::dyck {

struct Vertex {
    std::string label;
    Point position;
    bool operator==(const Vertex&) const = default;
};

/// A polygon complex: labeled plane points, an undirected edge set, the
/// declared bounded faces as directed cycles (closure edge back to the
/// first vertex implied), and an ordered basis of generator labels that
/// must name pairwise distinct collinear vertices.
///
/// JSON shape:
///   {"field": "Q", "vertices": [{"label": "A", "x": "5", "y": "0"}, ...],
///    "edges": [["A","B"], ...], "cycles": [["A","D","E"], ...],
///    "generators": ["A","B","C"], "notes": ["..."]}
struct Polygon {
    FieldSpec field = FieldSpec::rationals();
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::vector<std::string>> cycles;
    std::vector<std::string> generators;
    std::vector<std::string> notes; // free-form annotations, echoed by validate()

    static Polygon from_json(std::string_view text);
    std::string to_json(int indent = -1) const;
};

/// Structural validation: every check lands in the report (edge endpoints
/// declared, no duplicate or loop edges, connectivity, cycle closure,
/// generator distinctness and collinearity, and the disc criterion
/// V - E + F = 1 over the declared faces).  Notes on the polygon are echoed
/// as informational entries.  The polygon is valid iff nothing failed.
Report validate(const Polygon& polygon);

/// Shortest edge path from a generator to any vertex, as the visited label
/// sequence (length = hops).  Ties prefer predecessors that are generators
/// (in basis order), then lexicographically smaller labels.
std::vector<std::string> reach(const Polygon& polygon, const std::string& from,
                               const std::string& to);

/// Integer combination of the generator basis.  Canonical form keeps the
/// basis order fixed and serializes only nonzero coefficients.
class GroupWord {
public:
    explicit GroupWord(std::vector<std::string> basis);
    static GroupWord unit(std::vector<std::string> basis, const std::string& generator);

    const std::vector<std::string>& basis() const noexcept { return basis_; }
    long long coefficient(const std::string& generator) const;
    void add_to(const std::string& generator, long long delta);

    /// Total move count k_1 + ... + k_n of the underlying path.
    long long path_measure() const;

    bool operator==(const GroupWord&) const = default;
    std::string to_json() const;

private:
    std::vector<std::string> basis_;
    std::vector<long long> coeff_;
};

GroupWord word_add(const GroupWord& a, const GroupWord& b);
GroupWord word_negate(const GroupWord& w);

/// Presentation of a vertex over the generator basis: generators present as
/// their unit word; any other vertex decomposes the tie-broken shortest path
/// from the first generator into maximal segments starting at generator
/// visits, each segment contributing its move count to that generator.
GroupWord present(const Polygon& polygon, const std::string& vertex);

} // namespace dap::dyck
