#include "dap/dyck.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

namespace dap::dyck {

namespace {

using nlohmann::json;

std::map<std::string, std::size_t> label_index(const Polygon& p) {
    std::map<std::string, std::size_t> out;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        out.emplace(p.vertices[i].label, i);
    }
    return out;
}

std::map<std::string, std::set<std::string>> adjacency(const Polygon& p) {
    std::map<std::string, std::set<std::string>> out;
    for (const auto& v : p.vertices) out[v.label];
    for (const auto& [u, v] : p.edges) {
        out[u].insert(v);
        out[v].insert(u);
    }
    return out;
}

bool has_edge(const Polygon& p, const std::string& u, const std::string& v) {
    return std::any_of(p.edges.begin(), p.edges.end(), [&](const auto& e) {
        return (e.first == u && e.second == v) || (e.first == v && e.second == u);
    });
}

} // namespace

Report validate(const Polygon& polygon) {
    Report report;

    std::set<std::string> labels;
    bool labels_unique = true;
    for (const auto& v : polygon.vertices) {
        labels_unique = labels.insert(v.label).second && labels_unique;
    }
    report.add(CheckEntry::of(labels_unique && !polygon.vertices.empty(),
                              "vertex labels are nonempty and unique",
                              {std::to_string(polygon.vertices.size()) + " vertices"}));

    bool endpoints_ok = true;
    bool loops_ok = true;
    std::set<std::pair<std::string, std::string>> seen;
    bool duplicates_ok = true;
    for (const auto& [u, v] : polygon.edges) {
        if (!labels.count(u) || !labels.count(v)) endpoints_ok = false;
        if (u == v) loops_ok = false;
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        duplicates_ok = seen.insert(key).second && duplicates_ok;
    }
    report.add(CheckEntry::of(endpoints_ok, "edge endpoints are declared vertices",
                              {std::to_string(polygon.edges.size()) + " edges"}));
    report.add(CheckEntry::of(loops_ok, "no loop edges", {}));
    report.add(CheckEntry::of(duplicates_ok, "no duplicate edges", {}));

    // connectivity over the edge graph
    bool connected = false;
    if (!polygon.vertices.empty() && endpoints_ok) {
        auto adj = adjacency(polygon);
        std::set<std::string> visited;
        std::deque<std::string> queue{polygon.vertices.front().label};
        visited.insert(polygon.vertices.front().label);
        while (!queue.empty()) {
            std::string cur = queue.front();
            queue.pop_front();
            for (const auto& next : adj[cur]) {
                if (visited.insert(next).second) queue.push_back(next);
            }
        }
        connected = visited.size() == labels.size();
    }
    report.add(CheckEntry::of(connected, "edge graph is connected", {}));

    for (std::size_t i = 0; i < polygon.cycles.size(); ++i) {
        const auto& cycle = polygon.cycles[i];
        std::string name = "cycle " + std::to_string(i + 1);
        bool ok = cycle.size() >= 3;
        std::string closure;
        if (ok) {
            for (const auto& label : cycle) ok = ok && labels.count(label) > 0;
        }
        if (ok) {
            for (std::size_t j = 0; ok && j + 1 < cycle.size(); ++j) {
                ok = has_edge(polygon, cycle[j], cycle[j + 1]);
            }
            ok = ok && has_edge(polygon, cycle.back(), cycle.front());
            closure = cycle.back() + "->" + cycle.front();
        }
        CheckEntry entry = CheckEntry::of(ok, name + " is a closed edge cycle", cycle);
        if (ok) entry.note = "closes " + closure;
        report.add(std::move(entry));
    }

    bool generators_ok = !polygon.generators.empty();
    std::set<std::string> generator_set;
    for (const auto& g : polygon.generators) {
        generators_ok = generators_ok && labels.count(g) > 0 && generator_set.insert(g).second;
    }
    report.add(CheckEntry::of(generators_ok, "generators are pairwise distinct vertices",
                              polygon.generators));

    bool collinear_ok = generators_ok;
    if (generators_ok && polygon.generators.size() >= 2) {
        auto index = label_index(polygon);
        const Point& p0 = polygon.vertices[index[polygon.generators[0]]].position;
        const Point& p1 = polygon.vertices[index[polygon.generators[1]]].position;
        if (p0 == p1) {
            collinear_ok = false;
        } else {
            Line l = line_through(p0, p1);
            for (std::size_t i = 2; i < polygon.generators.size(); ++i) {
                collinear_ok = collinear_ok &&
                               l.contains(polygon.vertices[index[polygon.generators[i]]].position);
            }
        }
    }
    report.add(CheckEntry::of(collinear_ok, "generators lie on one common line",
                              polygon.generators));

    long long v = static_cast<long long>(polygon.vertices.size());
    long long e = static_cast<long long>(polygon.edges.size());
    long long f = static_cast<long long>(polygon.cycles.size());
    report.add(CheckEntry::of(v - e + f == 1, "V - E + F = 1 over the declared faces",
                              {std::to_string(v) + " - " + std::to_string(e) + " + " +
                               std::to_string(f)},
                              std::to_string(v - e + f), "1"));

    for (const auto& note : polygon.notes) {
        CheckEntry entry = CheckEntry::passed("note", {});
        entry.note = note;
        report.add(std::move(entry));
    }
    return report;
}

namespace {

// BFS from `from`; path to `to` reconstructed backwards, ties preferring
// generator predecessors in basis order, then lexicographic labels.
std::vector<std::string> shortest_path(const Polygon& polygon, const std::string& from,
                                       const std::string& to) {
    auto adj = adjacency(polygon);
    std::map<std::string, long long> dist;
    dist[from] = 0;
    std::deque<std::string> queue{from};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const auto& next : adj[cur]) {
            if (!dist.count(next)) {
                dist[next] = dist[cur] + 1;
                queue.push_back(next);
            }
        }
    }
    if (!dist.count(to)) {
        raise(Errc::unknown_vertex, "no path reaches '" + to + "'");
    }

    auto generator_rank = [&](const std::string& label) -> long long {
        auto it = std::find(polygon.generators.begin(), polygon.generators.end(), label);
        if (it == polygon.generators.end()) {
            return static_cast<long long>(polygon.generators.size());
        }
        return it - polygon.generators.begin();
    };

    std::vector<std::string> path{to};
    std::string cur = to;
    while (cur != from) {
        std::string best;
        for (const auto& prev : adj[cur]) {
            if (!dist.count(prev) || dist[prev] != dist[cur] - 1) continue;
            if (best.empty()) {
                best = prev;
                continue;
            }
            auto rank_new = generator_rank(prev), rank_best = generator_rank(best);
            if (rank_new < rank_best || (rank_new == rank_best && prev < best)) {
                best = prev;
            }
        }
        path.push_back(best);
        cur = best;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

std::vector<std::string> reach(const Polygon& polygon, const std::string& from,
                               const std::string& to) {
    auto index = label_index(polygon);
    if (!index.count(from)) raise(Errc::unknown_vertex, "unknown vertex '" + from + "'");
    if (!index.count(to)) raise(Errc::unknown_vertex, "unknown vertex '" + to + "'");
    if (std::find(polygon.generators.begin(), polygon.generators.end(), from) ==
        polygon.generators.end()) {
        raise(Errc::degenerate_input, "'" + from + "' is not a generator");
    }
    if (from == to) return {from};
    return shortest_path(polygon, from, to);
}

GroupWord::GroupWord(std::vector<std::string> basis)
    : basis_(std::move(basis)), coeff_(basis_.size(), 0) {}

GroupWord GroupWord::unit(std::vector<std::string> basis, const std::string& generator) {
    GroupWord out(std::move(basis));
    out.add_to(generator, 1);
    return out;
}

long long GroupWord::coefficient(const std::string& generator) const {
    auto it = std::find(basis_.begin(), basis_.end(), generator);
    if (it == basis_.end()) raise(Errc::unknown_vertex, "'" + generator + "' is not in the basis");
    return coeff_[static_cast<std::size_t>(it - basis_.begin())];
}

void GroupWord::add_to(const std::string& generator, long long delta) {
    auto it = std::find(basis_.begin(), basis_.end(), generator);
    if (it == basis_.end()) raise(Errc::unknown_vertex, "'" + generator + "' is not in the basis");
    coeff_[static_cast<std::size_t>(it - basis_.begin())] += delta;
}

long long GroupWord::path_measure() const {
    long long sum = 0;
    for (long long k : coeff_) sum += k;
    return sum;
}

std::string GroupWord::to_json() const {
    json out = json::object();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (coeff_[i] != 0) out[basis_[i]] = coeff_[i];
    }
    return out.dump();
}

GroupWord word_add(const GroupWord& a, const GroupWord& b) {
    if (a.basis() != b.basis()) {
        raise(Errc::basis_mismatch, "words over different generator bases");
    }
    GroupWord out(a.basis());
    for (const auto& g : a.basis()) {
        out.add_to(g, a.coefficient(g) + b.coefficient(g));
    }
    return out;
}

GroupWord word_negate(const GroupWord& w) {
    GroupWord out(w.basis());
    for (const auto& g : w.basis()) out.add_to(g, -w.coefficient(g));
    return out;
}

GroupWord present(const Polygon& polygon, const std::string& vertex) {
    auto index = label_index(polygon);
    if (!index.count(vertex)) raise(Errc::unknown_vertex, "unknown vertex '" + vertex + "'");
    if (polygon.generators.empty()) {
        raise(Errc::degenerate_input, "polygon declares no generators");
    }
    auto is_generator = [&](const std::string& label) {
        return std::find(polygon.generators.begin(), polygon.generators.end(), label) !=
               polygon.generators.end();
    };
    if (is_generator(vertex)) {
        return GroupWord::unit(polygon.generators, vertex);
    }

    std::vector<std::string> path = shortest_path(polygon, polygon.generators.front(), vertex);
    GroupWord word(polygon.generators);
    std::string segment_start = path.front();
    long long moves = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        ++moves;
        if (is_generator(path[i]) && i + 1 < path.size()) {
            word.add_to(segment_start, moves);
            segment_start = path[i];
            moves = 0;
        }
    }
    word.add_to(segment_start, moves);
    return word;
}

// ---- JSON ----

Polygon Polygon::from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        raise(Errc::parse_error, std::string("bad polygon JSON: ") + e.what());
    }
    try {
        Polygon out;
        out.field = j.contains("field") ? FieldSpec::parse(j.at("field").get<std::string>())
                                        : FieldSpec::rationals();
        for (const auto& jv : j.at("vertices")) {
            out.vertices.push_back(Vertex{
                jv.at("label").get<std::string>(),
                Point{Scalar::parse(out.field, jv.at("x").get<std::string>()),
                      Scalar::parse(out.field, jv.at("y").get<std::string>())}});
        }
        for (const auto& je : j.at("edges")) {
            out.edges.emplace_back(je.at(0).get<std::string>(), je.at(1).get<std::string>());
        }
        for (const auto& jc : j.at("cycles")) {
            std::vector<std::string> cycle;
            for (const auto& label : jc) cycle.push_back(label.get<std::string>());
            out.cycles.push_back(std::move(cycle));
        }
        for (const auto& jg : j.at("generators")) {
            out.generators.push_back(jg.get<std::string>());
        }
        if (j.contains("notes")) {
            for (const auto& jn : j.at("notes")) out.notes.push_back(jn.get<std::string>());
        }
        return out;
    } catch (const json::exception& e) {
        raise(Errc::parse_error, std::string("bad polygon JSON: ") + e.what());
    }
}

std::string Polygon::to_json(int indent) const {
    json out;
    out["field"] = field.str();
    json jverts = json::array();
    for (const auto& v : vertices) {
        json jv;
        jv["label"] = v.label;
        jv["x"] = v.position.x.str();
        jv["y"] = v.position.y.str();
        jverts.push_back(jv);
    }
    out["vertices"] = jverts;
    json jedges = json::array();
    for (const auto& [u, v] : edges) jedges.push_back(json::array({u, v}));
    out["edges"] = jedges;
    out["cycles"] = cycles;
    out["generators"] = generators;
    if (!notes.empty()) out["notes"] = notes;
    return out.dump(indent);
}

} // namespace dap::dyck
