#include "twofold/textio.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "twofold/graph6.hpp"

namespace twofold {

Graph parse_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative counts");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        edges.push_back({u, v});
    }
    return Graph::from_edge_list(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

Permutation parse_cycles(const std::string& text, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("permutation: expected '(' at position " +
                                        std::to_string(pos));
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < text.size() && text[pos] != ')') {
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            if (end == pos)
                throw std::invalid_argument("permutation: expected a vertex number at position " +
                                            std::to_string(pos));
            const int v = std::stoi(text.substr(pos, end - pos));
            if (v >= n)
                throw std::invalid_argument("permutation: vertex " + std::to_string(v) +
                                            " out of range for n = " + std::to_string(n));
            cycle.push_back(v);
            pos = end;
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                skip_ws();
            }
        }
        if (pos == text.size()) throw std::invalid_argument("permutation: unclosed cycle");
        ++pos;  // ')'
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int from = cycle[i];
            const int to = cycle[(i + 1) % cycle.size()];
            if (img[static_cast<std::size_t>(from)] != from)
                throw std::invalid_argument("permutation: vertex " + std::to_string(from) +
                                            " appears in two cycles");
            img[static_cast<std::size_t>(from)] = to;
        }
        skip_ws();
    }
    return Permutation::from_images(std::move(img));
}

} // namespace

Permutation parse_permutation(const std::string& text, int n) {
    std::string trimmed = text;
    const auto first = trimmed.find_first_not_of(" \t\r\n");
    const auto last = trimmed.find_last_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("permutation: empty string");
    trimmed = trimmed.substr(first, last - first + 1);

    if (trimmed == "id") return Permutation::identity(n);
    if (trimmed.find('(') != std::string::npos) return parse_cycles(trimmed, n);

    std::istringstream in(trimmed);
    std::vector<int> img;
    int v = 0;
    while (in >> v) img.push_back(v);
    if (!in.eof()) throw std::invalid_argument("permutation: stray token in image array");
    if (static_cast<int>(img.size()) != n)
        throw std::invalid_argument("permutation: image array has " +
                                    std::to_string(img.size()) + " entries, expected " +
                                    std::to_string(n));
    return Permutation::from_images(std::move(img));
}

std::vector<Arc> parse_arcs(const std::string& text) {
    std::istringstream in(text);
    std::vector<Arc> arcs;
    std::string tok;
    while (in >> tok) {
        const auto comma = tok.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == tok.size())
            throw std::invalid_argument("arc list: expected \"u,v\", got \"" + tok + "\"");
        try {
            arcs.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
        } catch (const std::exception&) {
            throw std::invalid_argument("arc list: bad number in \"" + tok + "\"");
        }
    }
    return arcs;
}

LayeredSpec parse_layered_spec(std::istream& in) {
    auto next_line = [&](const char* what) {
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (!line.empty() && line[0] != '#') return line;
        }
        throw std::invalid_argument(std::string("layered spec: missing ") + what);
    };

    LayeredSpec spec;
    int m = 0;
    try {
        m = std::stoi(next_line("layer count"));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("layered spec: first line must be the layer count");
    }
    if (m < 3) throw std::invalid_argument("layered spec: need at least 3 layers");
    for (int i = 0; i < m; ++i) spec.layers.push_back(parse_graph6(next_line("layer graph6 line")));

    bool auto_link0 = false;
    for (int i = 0; i < m; ++i) {
        std::string line = next_line("link permutation line");
        if (line == "auto") {
            if (i != 0)
                throw std::invalid_argument("layered spec: \"auto\" is only valid for link 0");
            auto_link0 = true;
            spec.links.push_back(tf_identity(spec.layers[0].vertex_count()));  // placeholder
            continue;
        }
        const int n = spec.layers[static_cast<std::size_t>(i)].vertex_count();
        Permutation alpha = parse_permutation(line, n);
        Permutation beta = parse_permutation(next_line("link beta line"), n);
        spec.links.push_back({std::move(alpha), std::move(beta)});
    }
    if (auto_link0)
        spec.links[0] = complete_link_cycle({spec.links.begin() + 1, spec.links.end()});
    return spec;
}

} // namespace twofold
