#include "laddermat/graph.hpp"

#include <stdexcept>

namespace laddermat {

namespace {

// Reduces a 1-based index into [1, m].
int wrap_index(int index, int m) {
    int r = (index - 1) % m;
    if (r < 0)
        r += m;
    return r + 1;
}

std::string side_suffix(int sign) { return sign >= 0 ? "+" : "-"; }

} // namespace

std::string family_token(Family family) {
    switch (family) {
    case Family::Ladder:
        return "ladder";
    case Family::CircularLadder:
        return "cl";
    case Family::Mobius:
        return "mobius";
    }
    throw std::logic_error("family_token: unhandled family");
}

Family parse_family(const std::string& token) {
    if (token == "ladder")
        return Family::Ladder;
    if (token == "cl")
        return Family::CircularLadder;
    if (token == "mobius")
        return Family::Mobius;
    throw std::invalid_argument("unknown family '" + token +
                                "' (expected ladder, cl, or mobius)");
}

void FamilySpec::validate() const {
    if (n < min_n())
        throw std::domain_error(family_token(family) + " requires n >= " +
                                std::to_string(min_n()) + ", got n = " +
                                std::to_string(n));
}

std::string VertexId::label(const FamilySpec& spec) const {
    switch (spec.family) {
    case Family::Ladder:
        if (index < 1 || index > spec.n)
            throw std::domain_error("vertex index " + std::to_string(index) +
                                    " outside [1, " + std::to_string(spec.n) +
                                    "]");
        return "u" + std::to_string(index) + side_suffix(sign);
    case Family::CircularLadder:
        return "u" + std::to_string(wrap_index(index, spec.n)) +
               side_suffix(sign);
    case Family::Mobius: {
        const int pos = wrap_index(index, 2 * spec.n);
        if (pos <= spec.n)
            return "u" + std::to_string(pos);
        return "v" + std::to_string(pos - spec.n);
    }
    }
    throw std::logic_error("VertexId::label: unhandled family");
}

std::string EdgeId::label(const FamilySpec& spec) const {
    switch (spec.family) {
    case Family::Ladder:
        if (kind == EdgeKind::Spoke) {
            if (index < 1 || index > spec.n)
                throw std::domain_error("spoke index " +
                                        std::to_string(index) + " outside [1, " +
                                        std::to_string(spec.n) + "]");
            return "f" + std::to_string(index);
        }
        if (index < 1 || index > spec.n - 1)
            throw std::domain_error("rail index " + std::to_string(index) +
                                    " outside [1, " + std::to_string(spec.n - 1) +
                                    "]");
        return "e" + std::to_string(index) + side_suffix(sign);
    case Family::CircularLadder:
        if (kind == EdgeKind::Spoke)
            return "f" + std::to_string(wrap_index(index, spec.n));
        return "e" + std::to_string(wrap_index(index, spec.n)) +
               side_suffix(sign);
    case Family::Mobius:
        // Spokes alias with period n, cycle edges with period 2n.
        if (kind == EdgeKind::Spoke)
            return "f" + std::to_string(wrap_index(index, spec.n));
        return "e" + std::to_string(wrap_index(index, 2 * spec.n));
    }
    throw std::logic_error("EdgeId::label: unhandled family");
}

const OrientedGraph::Edge& OrientedGraph::find_edge(
    const std::string& id) const {
    for (const auto& edge : edges)
        if (edge.id == id)
            return edge;
    throw LabelError("unknown edge id '" + id + "'");
}

std::size_t OrientedGraph::vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertex_labels.size(); ++i)
        if (vertex_labels[i] == label)
            return i;
    throw LabelError("unknown vertex label '" + label + "'");
}

OrientedGraph build_graph(const FamilySpec& spec) {
    spec.validate();
    const std::size_t n = static_cast<std::size_t>(spec.n);
    OrientedGraph g;
    g.family = spec.family;
    g.n = spec.n;

    const auto add_edge = [&g](std::string id, std::size_t tail,
                               std::size_t head) {
        g.edges.push_back({std::move(id), tail, head});
    };

    if (spec.family == Family::Mobius) {
        for (std::size_t i = 1; i <= n; ++i)
            g.vertex_labels.push_back("u" + std::to_string(i));
        for (std::size_t i = 1; i <= n; ++i)
            g.vertex_labels.push_back("v" + std::to_string(i));
        for (std::size_t j = 1; j <= 2 * n; ++j)
            add_edge("e" + std::to_string(j), j - 1, j % (2 * n));
        for (std::size_t i = 1; i <= n; ++i)
            add_edge("f" + std::to_string(i), i - 1, n + i - 1);
        return g;
    }

    // Positions 0..n-1 are the + side, n..2n-1 the - side.
    for (std::size_t i = 1; i <= n; ++i)
        g.vertex_labels.push_back("u" + std::to_string(i) + "+");
    for (std::size_t i = 1; i <= n; ++i)
        g.vertex_labels.push_back("u" + std::to_string(i) + "-");

    if (spec.family == Family::Ladder) {
        for (std::size_t i = 1; i <= n; ++i)
            add_edge("f" + std::to_string(i), i - 1, n + i - 1);
        for (std::size_t i = 1; i + 1 <= n; ++i)
            add_edge("e" + std::to_string(i) + "+", i - 1, i);
        for (std::size_t i = 1; i + 1 <= n; ++i)
            add_edge("e" + std::to_string(i) + "-", n + i - 1, n + i);
    } else {
        for (std::size_t i = 1; i <= n; ++i)
            add_edge("e" + std::to_string(i) + "+", i - 1, i % n);
        for (std::size_t i = 1; i <= n; ++i)
            add_edge("e" + std::to_string(i) + "-", n + i - 1, n + i % n);
        for (std::size_t i = 1; i <= n; ++i)
            add_edge("f" + std::to_string(i), i - 1, n + i - 1);
    }
    return g;
}

RationalMatrix incidence_matrix(const OrientedGraph& g) {
    RationalMatrix q(g.vertex_labels.size(), g.edges.size());
    std::vector<std::string> edge_ids;
    edge_ids.reserve(g.edges.size());
    for (std::size_t c = 0; c < g.edges.size(); ++c) {
        q(g.edges[c].tail, c) = 1;
        q(g.edges[c].head, c) = -1;
        edge_ids.push_back(g.edges[c].id);
    }
    q.set_row_labels(g.vertex_labels);
    q.set_col_labels(std::move(edge_ids));
    return q;
}

RationalMatrix laplacian_matrix(const OrientedGraph& g) {
    const RationalMatrix q = incidence_matrix(g);
    RationalMatrix lap = q * q.transpose();
    lap.set_row_labels(g.vertex_labels);
    lap.set_col_labels(g.vertex_labels);
    return lap;
}

OrientedGraph contract_edge(const OrientedGraph& g,
                            const std::string& edge_id) {
    const OrientedGraph::Edge& target = g.find_edge(edge_id);
    const std::size_t keep = std::min(target.tail, target.head);
    const std::size_t drop = std::max(target.tail, target.head);

    OrientedGraph out;
    out.family = g.family;
    out.n = g.n;
    for (std::size_t i = 0; i < g.vertex_labels.size(); ++i)
        if (i != drop)
            out.vertex_labels.push_back(g.vertex_labels[i]);

    const auto remap = [keep, drop](std::size_t v) {
        if (v == drop)
            return keep;
        return v > drop ? v - 1 : v;
    };
    for (const auto& edge : g.edges) {
        if (edge.id == edge_id)
            continue;
        const std::size_t tail = remap(edge.tail);
        const std::size_t head = remap(edge.head);
        if (tail == head)
            continue;
        out.edges.push_back({edge.id, tail, head});
    }
    return out;
}

nlohmann::ordered_json graph_to_json(const OrientedGraph& g) {
    nlohmann::ordered_json doc;
    doc["family"] = family_token(g.family);
    doc["n"] = g.n;
    doc["vertices"] = g.vertex_labels;
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& edge : g.edges) {
        nlohmann::ordered_json entry;
        entry["id"] = edge.id;
        entry["tail"] = g.vertex_labels[edge.tail];
        entry["head"] = g.vertex_labels[edge.head];
        edges.push_back(std::move(entry));
    }
    return doc;
}

} // namespace laddermat
