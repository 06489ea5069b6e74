#include "twofold/census.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <stdexcept>
#include <thread>

#include "twofold/double_cover.hpp"
#include "twofold/errors.hpp"
#include "twofold/graph6.hpp"

namespace twofold {

CensusRecord classify_graph(const Graph& g, const CensusOptions& opt) {
    CensusRecord rec;
    rec.graph6 = write_graph6(g);
    rec.n = g.vertex_count();
    rec.edge_count = g.edge_count();
    const auto tris = g.triangles();
    rec.triangle_count = static_cast<int>(tris.size());
    rec.connected = g.is_connected();
    rec.bipartite = g.bipartition().has_value();
    rec.vertex_determining = g.is_vertex_determining();
    rec.every_edge_on_triangle = g.every_edge_on_triangle();

    rec.aut_order = automorphism_group(g, std::nullopt, opt.enum_cap).order;
    const DoubleCover dc = build_double_cover(g);
    rec.cover_aut_order = automorphism_group(dc.graph, std::nullopt, opt.enum_cap).order;

    // Order alone never needs an element list; the explicit TF group is only
    // materialised for the per-configuration triangle counts below.
    std::optional<TFGroup> tf;
    if (rec.n <= opt.oracle_bound) {
        tf = tf_group_brute_force(g, opt.oracle_bound);
        rec.tf_order = tf->order;
    } else {
        const AutGroup sigma = colour_class_stabiliser(dc, opt.enum_cap);
        rec.tf_order = sigma.order;
        if (sigma.elements) {
            tf.emplace();
            tf->n = rec.n;
            for (const auto& s : *sigma.elements)
                tf->elements.push_back(extract_tf_from_sigma(dc, s));
            std::sort(tf->elements.begin(), tf->elements.end());
            tf->order = tf->elements.size();
        }
        // else: too large to enumerate; the counts are simply omitted.
    }
    rec.unstable_by_definition = rec.cover_aut_order > 2 * rec.aut_order;
    rec.has_nontrivial_tf = rec.tf_order > rec.aut_order;
    rec.tf_criterion_consistent = rec.unstable_by_definition == rec.has_nontrivial_tf;

    if (tf) {
        std::map<TriangleImageConfig, int> counts{
            {TriangleImageConfig::ClosedZ6, 0},
            {TriangleImageConfig::TwoTrianglesSharedVertex, 0},
            {TriangleImageConfig::TwoTrianglesSharedEdge, 0},
            {TriangleImageConfig::UndirectedTriangle, 0},
        };
        for (const auto& t : tf->elements) {
            if (!t.nontrivial()) continue;
            for (const auto& tri : tris) ++counts[classify_triangle_image(g, t, tri).config];
        }
        rec.triangle_config_counts = std::move(counts);
    }
    return rec;
}

std::vector<CensusRecord> run_census(std::istream& in, const CensusOptions& opt) {
    std::vector<std::pair<int, std::string>> lines;  // (input line number, text)
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) lines.push_back({lineno, line});
    }

    std::vector<CensusRecord> records(lines.size());
    auto work = [&](std::size_t i) {
        try {
            records[i] = classify_graph(parse_graph6(lines[i].second), opt);
        } catch (const std::exception& e) {
            records[i] = CensusRecord{};
            records[i].graph6 = lines[i].second;
            records[i].error = "line " + std::to_string(lines[i].first) + ": " + e.what();
        }
        records[i].index = static_cast<int>(i);
    };

    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || lines.size() < 2) {
        for (std::size_t i = 0; i < lines.size(); ++i) work(i);
    } else {
        // Records land in preallocated slots keyed by input index, so the
        // output is identical regardless of scheduling.
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = static_cast<std::size_t>(t); i < lines.size();
                     i += static_cast<std::size_t>(jobs))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }
    return records;
}

namespace {

// Recursive-descent evaluator for the predicate mini-language.
class PredicateParser {
public:
    PredicateParser(const CensusRecord& rec, const std::string& text) : rec_(rec), text_(text) {}

    bool run() {
        const bool v = parse_or();
        skip_ws();
        if (pos_ != text_.size())
            throw std::invalid_argument("predicate: trailing input at position " +
                                        std::to_string(pos_));
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(const char* tok) {
        skip_ws();
        const std::size_t len = std::string(tok).size();
        if (text_.compare(pos_, len, tok) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    bool parse_or() {
        bool v = parse_and();
        while (eat("||")) v = parse_and() || v;
        return v;
    }

    bool parse_and() {
        bool v = parse_unary();
        while (eat("&&")) v = parse_unary() && v;
        return v;
    }

    bool parse_unary() {
        if (eat("!")) return !parse_unary();
        if (eat("(")) {
            const bool v = parse_or();
            if (!eat(")")) throw std::invalid_argument("predicate: missing ')'");
            return v;
        }
        return parse_atom();
    }

    std::string parse_identifier() {
        skip_ws();
        std::size_t end = pos_;
        while (end < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            ++end;
        if (end == pos_)
            throw std::invalid_argument("predicate: expected a field name at position " +
                                        std::to_string(pos_));
        std::string id = text_.substr(pos_, end - pos_);
        pos_ = end;
        return id;
    }

    bool parse_atom() {
        const std::string id = parse_identifier();
        skip_ws();
        // Numeric comparison?
        static const char* ops[] = {"==", "!=", "<=", ">=", "<", ">"};
        for (const char* op : ops) {
            const std::size_t before = pos_;
            if (!eat(op)) continue;
            skip_ws();
            std::size_t end = pos_;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
                ++end;
            if (end == pos_) {
                pos_ = before;
                break;
            }
            const std::uint64_t rhs = std::stoull(text_.substr(pos_, end - pos_));
            pos_ = end;
            const auto lhs = numeric_field(id);
            if (!lhs) return false;  // absent count: no match
            const std::string o(op);
            if (o == "==") return *lhs == rhs;
            if (o == "!=") return *lhs != rhs;
            if (o == "<=") return *lhs <= rhs;
            if (o == ">=") return *lhs >= rhs;
            if (o == "<") return *lhs < rhs;
            return *lhs > rhs;
        }
        return bool_field(id);
    }

    std::optional<std::uint64_t> config_count(TriangleImageConfig c) const {
        if (!rec_.triangle_config_counts) return std::nullopt;
        return static_cast<std::uint64_t>(rec_.triangle_config_counts->at(c));
    }

    std::optional<std::uint64_t> numeric_field(const std::string& id) const {
        if (id == "n") return static_cast<std::uint64_t>(rec_.n);
        if (id == "edges") return static_cast<std::uint64_t>(rec_.edge_count);
        if (id == "triangles") return static_cast<std::uint64_t>(rec_.triangle_count);
        if (id == "aut_order") return rec_.aut_order;
        if (id == "cover_aut_order") return rec_.cover_aut_order;
        if (id == "tf_order") return rec_.tf_order;
        if (id == "closed_z6") return config_count(TriangleImageConfig::ClosedZ6);
        if (id == "shared_vertex") return config_count(TriangleImageConfig::TwoTrianglesSharedVertex);
        if (id == "shared_edge") return config_count(TriangleImageConfig::TwoTrianglesSharedEdge);
        if (id == "undirected_triangle")
            return config_count(TriangleImageConfig::UndirectedTriangle);
        throw std::invalid_argument("predicate: unknown numeric field \"" + id + "\"");
    }

    bool bool_field(const std::string& id) const {
        if (id == "connected") return rec_.connected;
        if (id == "bipartite") return rec_.bipartite;
        if (id == "vertex_determining") return rec_.vertex_determining;
        if (id == "every_edge_on_triangle") return rec_.every_edge_on_triangle;
        if (id == "unstable") return rec_.unstable_by_definition;
        if (id == "has_nontrivial_tf") return rec_.has_nontrivial_tf;
        if (id == "consistent") return rec_.tf_criterion_consistent;
        if (id == "has_triangle") return rec_.triangle_count > 0;
        throw std::invalid_argument("predicate: unknown field \"" + id + "\"");
    }

    const CensusRecord& rec_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

bool eval_predicate(const CensusRecord& rec, const std::string& predicate) {
    if (rec.error) return false;
    return PredicateParser(rec, predicate).run();
}

std::vector<CensusRecord> find_minimal(const std::vector<CensusRecord>& records,
                                       const std::string& predicate) {
    if (records.empty()) throw std::invalid_argument("empty corpus");
    std::vector<CensusRecord> matches;
    for (const auto& rec : records)
        if (eval_predicate(rec, predicate)) matches.push_back(rec);
    if (matches.empty()) return matches;

    int best_n = matches[0].n, best_e = matches[0].edge_count;
    for (const auto& rec : matches)
        if (rec.n < best_n || (rec.n == best_n && rec.edge_count < best_e)) {
            best_n = rec.n;
            best_e = rec.edge_count;
        }
    std::vector<CensusRecord> out;
    for (const auto& rec : matches)
        if (rec.n == best_n && rec.edge_count == best_e) out.push_back(rec);
    std::sort(out.begin(), out.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.graph6 < b.graph6; });
    return out;
}

} // namespace twofold
