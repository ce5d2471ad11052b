#include "uppertail/family.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "format.hpp"

namespace uppertail {

namespace {

// F = all edges of H incident to the vertex set A, on its covered vertices.
Graph incident_subgraph(const Graph& h, const std::vector<int>& a, std::vector<int>* covered_out) {
    std::vector<char> in_a(h.vertex_count(), 0);
    for (int v : a) in_a[v] = 1;
    std::vector<char> covered(h.vertex_count(), 0);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : h.edges()) {
        if (in_a[u] || in_a[v]) {
            edges.emplace_back(u, v);
            covered[u] = covered[v] = 1;
        }
    }
    std::vector<int> verts;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (covered[v]) verts.push_back(v);
    std::vector<int> index(h.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    for (auto& [u, v] : edges) {
        u = index[u];
        v = index[v];
    }
    if (covered_out) *covered_out = verts;
    return Graph(static_cast<int>(verts.size()), std::move(edges));
}

struct ClassAccumulator {
    Graph representative;
    std::vector<int> first_set; // lexicographically first generating A (H labels)
    long long generating = 0;
    int core_size = 0;
    int edge_count = 0;
    bool is_full_edge_set = false;
};

FamilyReport assemble(const Graph& h, std::map<std::string, ClassAccumulator> classes,
                      int canon_guard) {
    FamilyReport report;
    report.delta = max_degree(h);

    // Eq-4.4 bookkeeping: the full edge set generated by two sets A means H is
    // regular bipartite; its class keeps multiplicity N(H,H) = 1 and the extra
    // generator is carried by the h_in_family indicator.
    for (auto& [key, acc] : classes) {
        if (acc.is_full_edge_set && acc.generating == 2) report.h_in_family = true;
    }

    for (auto& [key, acc] : classes) {
        FamilyEntry e;
        e.subgraph = acc.representative;
        e.core_set = acc.first_set;
        e.generating_sets = acc.generating;
        e.core_size = acc.core_size;
        e.edge_count = acc.edge_count;
        e.multiplicity = acc.generating;
        if (acc.is_full_edge_set && report.h_in_family) e.multiplicity -= 1;
        e.canonical_edges = canonical_edge_list(acc.representative, canon_guard);
        report.entries.push_back(std::move(e));
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const FamilyEntry& a, const FamilyEntry& b) {
                  if (a.core_size != b.core_size) return a.core_size < b.core_size;
                  return a.canonical_edges < b.canonical_edges;
              });
    return report;
}

} // namespace

FamilyReport enumerate_family(const Graph& h, int size_guard) {
    if (h.vertex_count() > size_guard)
        throw size_guard_error("enumerate_family: " + std::to_string(h.vertex_count()) +
                               " vertices exceeds guard " + std::to_string(size_guard));
    auto preds = structural_predicates(h);
    if (!preds.is_connected)
        throw std::invalid_argument("enumerate_family: H must be connected "
                                    "(handle components separately)");
    const int delta = max_degree(h);
    if (delta < 2) throw std::invalid_argument("enumerate_family: need Delta >= 2");

    std::vector<int> core = max_degree_core_vertices(h, delta);
    std::map<std::string, ClassAccumulator> classes;

    // DFS over independent subsets of the core (independence in H)
    std::vector<int> current;
    auto record = [&](const std::vector<int>& a) {
        std::vector<int> covered;
        Graph f = incident_subgraph(h, a, &covered);
        std::string key = canonical_form(f, size_guard);
        auto [it, inserted] = classes.try_emplace(key);
        ClassAccumulator& acc = it->second;
        if (inserted) {
            acc.representative = f;
            acc.first_set = a;
            acc.core_size = static_cast<int>(a.size());
            acc.edge_count = f.edge_count();
            acc.is_full_edge_set = (f.edge_count() == h.edge_count());
        }
        acc.generating += 1;
    };
    std::function<void(size_t)> dfs = [&](size_t start) {
        for (size_t i = start; i < core.size(); ++i) {
            int v = core[i];
            bool ok = true;
            for (int u : current)
                if (h.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(v);
            record(current);
            dfs(i + 1);
            current.pop_back();
        }
    };
    dfs(0);

    FamilyReport report = assemble(h, std::move(classes), size_guard);
    // multiplicity must agree with the copy count N(F,H); Eq. 4.4 holds
    // because the generating sets are in bijection with the copies.
    for (auto& e : report.entries) e.multiplicity = count_copies(e.subgraph, h, size_guard);
    return report;
}

FamilyReport enumerate_family_bruteforce(const Graph& h, int edge_guard) {
    const int m = h.edge_count();
    if (m > edge_guard)
        throw size_guard_error("enumerate_family_bruteforce: " + std::to_string(m) +
                               " edges exceeds guard " + std::to_string(edge_guard));
    const int delta = max_degree(h);
    if (delta < 2) throw std::invalid_argument("enumerate_family_bruteforce: need Delta >= 2");

    std::map<std::string, ClassAccumulator> classes;
    const auto& all_edges = h.edges();
    for (unsigned long subset = 1; subset < (1ull << m); ++subset) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < m; ++i)
            if (subset >> i & 1) edges.push_back(all_edges[i]);
        // build F on covered vertices
        std::vector<char> covered(h.vertex_count(), 0);
        for (auto [u, v] : edges) covered[u] = covered[v] = 1;
        std::vector<int> verts;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (covered[v]) verts.push_back(v);
        std::vector<int> index(h.vertex_count(), -1);
        for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
        for (auto& [u, v] : edges) {
            u = index[u];
            v = index[v];
        }
        Graph f(static_cast<int>(verts.size()), std::move(edges));

        if (max_degree(f) != delta) continue;
        int tau = vertex_cover_number(f);
        if (static_cast<long long>(tau) * delta != f.edge_count()) continue;

        std::string key = canonical_form(f, 20);
        auto [it, inserted] = classes.try_emplace(key);
        ClassAccumulator& acc = it->second;
        if (inserted) {
            acc.representative = f;
            acc.core_size = f.edge_count() / delta;
            acc.edge_count = f.edge_count();
            acc.is_full_edge_set = (f.edge_count() == h.edge_count());
            // the defining independent set: cover vertices of degree delta
            for (int v = 0; v < f.vertex_count(); ++v)
                if (f.degree(v) == delta) acc.first_set.push_back(verts[v]);
        }
        acc.generating += 1;
    }

    auto preds = structural_predicates(h);
    FamilyReport report;
    {
        // N(F,H) is the number of edge subsets in the class, directly
        std::map<std::string, ClassAccumulator> moved = std::move(classes);
        report = assemble(h, std::move(moved), 20);
        for (auto& e : report.entries) e.multiplicity = e.generating_sets;
        report.h_in_family = preds.is_connected && preds.is_regular && preds.is_bipartite &&
                             h.edge_count() > 0;
    }
    return report;
}

bool family_reports_equal(const FamilyReport& a, const FamilyReport& b) {
    if (a.delta != b.delta || a.h_in_family != b.h_in_family) return false;
    if (a.entries.size() != b.entries.size()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i) {
        const auto& x = a.entries[i];
        const auto& y = b.entries[i];
        if (x.canonical_edges != y.canonical_edges || x.multiplicity != y.multiplicity ||
            x.core_size != y.core_size || x.edge_count != y.edge_count)
            return false;
    }
    return true;
}

IdentityReport verify_identity(const Graph& h, int size_guard) {
    FamilyReport fam = enumerate_family(h, size_guard);
    const int delta = fam.delta;

    IdentityReport report;
    report.lhs = independence_polynomial(max_degree_core(h, delta));

    int max_core = 0;
    for (const auto& e : fam.entries) max_core = std::max(max_core, e.core_size);
    int h_term = fam.h_in_family ? h.edge_count() / delta : 0;
    max_core = std::max(max_core, h_term);

    std::vector<BigUint> rhs(static_cast<size_t>(max_core) + 1);
    rhs[0] = BigUint(1);
    for (const auto& e : fam.entries)
        rhs[e.core_size] += BigUint(static_cast<unsigned long long>(e.multiplicity));
    if (fam.h_in_family) rhs[h_term] += BigUint(1);
    report.rhs = IntPolynomial(std::move(rhs));
    report.holds = (report.lhs == report.rhs);
    return report;
}

namespace {
std::string edges_json(const std::vector<std::pair<int, int>>& edges) {
    std::string out = "[";
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += "[" + std::to_string(edges[i].first) + "," + std::to_string(edges[i].second) + "]";
    }
    return out + "]";
}
} // namespace

std::string FamilyReport::to_json() const {
    std::string out = "{";
    out += "\"delta\":" + std::to_string(delta);
    out += ",\"h_in_family\":" + std::string(h_in_family ? "true" : "false");
    out += ",\"classes\":[";
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (i) out += ",";
        out += "{\"edges\":" + edges_json(e.canonical_edges);
        out += ",\"core_size\":" + std::to_string(e.core_size);
        out += ",\"multiplicity\":" + std::to_string(e.multiplicity);
        out += ",\"edge_count\":" + std::to_string(e.edge_count) + "}";
    }
    out += "]}";
    return out;
}

std::string IdentityReport::to_json() const {
    return "{\"lhs\":" + lhs.to_json() + ",\"rhs\":" + rhs.to_json() +
           ",\"holds\":" + (holds ? "true" : "false") + "}";
}

} // namespace uppertail
