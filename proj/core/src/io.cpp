#include "uppertail/io.hpp"

#include <fstream>
#include <sstream>

#include "format.hpp"

namespace uppertail {

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    std::optional<int> declared_n;
    std::string line;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!(ss >> a >> b)) throw parse_error("edge list: malformed line '" + line + "'");
        std::string extra;
        if (ss >> extra) throw parse_error("edge list: trailing tokens in '" + line + "'");
        if (first_content_line && a == "n") {
            try {
                declared_n = std::stoi(b);
            } catch (...) {
                throw parse_error("edge list: bad vertex count '" + b + "'");
            }
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        int u, v;
        try {
            size_t pa = 0, pb = 0;
            u = std::stoi(a, &pa);
            v = std::stoi(b, &pb);
            if (pa != a.size() || pb != b.size()) throw parse_error("");
        } catch (...) {
            throw parse_error("edge list: non-integer endpoint in '" + line + "'");
        }
        if (u < 0 || v < 0) throw parse_error("edge list: negative vertex label");
        edges.emplace_back(u, v);
    }
    GraphSpec spec;
    spec.edge_list = std::move(edges);
    spec.n_vertices = declared_n;
    try {
        return build_graph(spec);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("edge list: ") + e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open edge list file '" + path + "'");
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

GraphSpec parse_preset(const std::string& token) {
    GraphSpec spec;
    size_t colon = token.find(':');
    spec.preset = token.substr(0, colon);
    if (spec.preset.empty()) throw parse_error("empty preset name");
    if (colon != std::string::npos) {
        std::string rest = token.substr(colon + 1);
        if (rest.empty()) throw parse_error("preset '" + spec.preset + "': empty parameter list");
        std::istringstream ss(rest);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            try {
                size_t pos = 0;
                long long v = std::stoll(piece, &pos);
                if (pos != piece.size()) throw parse_error("");
                spec.params.push_back(v);
            } catch (...) {
                throw parse_error("preset '" + spec.preset + "': bad parameter '" + piece + "'");
            }
        }
    }
    return spec;
}

Graph parse_graph_argument(const std::string& arg) {
    if (arg.empty()) throw parse_error("empty graph argument");
    std::istringstream ss(arg);
    std::string piece;
    std::optional<Graph> acc;
    while (std::getline(ss, piece, '+')) {
        Graph g = build_graph(parse_preset(piece));
        acc = acc ? disjoint_union(*acc, g) : g;
    }
    return *acc;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : s) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string write_weighted_graph(const WeightedGraph& g, double p, const std::string& h_spec) {
    char head[160];
    std::snprintf(head, sizeof(head), "uppertail-weighted-graph 1\nn %d\np %.17g\nh %s\nhash %016llx\n",
                  g.size(), p, h_spec.empty() ? "-" : h_spec.c_str(),
                  static_cast<unsigned long long>(fnv1a64(h_spec)));
    std::string out = head;
    for (int i = 0; i < g.size(); ++i) {
        for (int j = i + 1; j < g.size(); ++j) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", g.at(i, j));
            out += buf;
            out += (j + 1 == g.size()) ? '\n' : ' ';
        }
        if (i + 1 == g.size()) out += "\n"; // last row is empty
    }
    return out;
}

WeightedGraph read_weighted_graph(std::istream& in, double* p_out, std::string* h_spec_out) {
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "uppertail-weighted-graph" || version != 1)
        throw parse_error("weighted graph: bad header");
    std::string key;
    int n = 0;
    double p = 0;
    std::string h_spec, hash_hex;
    if (!(in >> key >> n) || key != "n") throw parse_error("weighted graph: missing n");
    if (!(in >> key >> p) || key != "p") throw parse_error("weighted graph: missing p");
    if (!(in >> key >> h_spec) || key != "h") throw parse_error("weighted graph: missing h");
    if (!(in >> key >> hash_hex) || key != "hash") throw parse_error("weighted graph: missing hash");
    if (n < 1) throw parse_error("weighted graph: bad size");
    WeightedGraph g(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v;
            if (!(in >> v)) throw parse_error("weighted graph: truncated triangle");
            g.set(i, j, v);
        }
    if (p_out) *p_out = p;
    if (h_spec_out) *h_spec_out = (h_spec == "-") ? "" : h_spec;
    return g;
}

} // namespace uppertail
