#pragma once

/**
 * The three oriented graph families and their matrix views.
 *
 * Canonical labeling and ordering:
 *
 *   Ladder L_n (n >= 1): vertices u1+..un+, u1-..un-; edges f1..fn (spokes,
 *   ui+ -> ui-), then e1+..e{n-1}+ and e1-..e{n-1}- (rails, ui -> u{i+1} on
 *   each side).
 *
 *   Circular ladder CL_n (n >= 3): same vertices; edges e1+..en+, e1-..en-
 *   (rails, index mod n), then f1..fn (spokes).
 *
 *   Mobius ladder M_n (n >= 3): vertices u1..un, v1..vn along the single
 *   2n-cycle (position n+i carries label v{i}); edges e1..e{2n} (cycle,
 *   position j -> j+1 mod 2n), then f1..fn (spokes, ui -> vi).
 *
 * Incidence columns carry +1 at an edge's tail and -1 at its head.
 */

#include "laddermat/matrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace laddermat {

enum class Family { Ladder, CircularLadder, Mobius };

std::string family_token(Family family);
Family parse_family(const std::string& token);

struct FamilySpec {
    Family family;
    int n;

    int min_n() const { return family == Family::Ladder ? 1 : 3; }

    /// Raises std::domain_error naming the family minimum when n is too small.
    void validate() const;
};

struct VertexId {
    int index;
    int sign = +1;

    /// Canonical label after index aliasing (mod n, or mod 2n with u -> v).
    std::string label(const FamilySpec& spec) const;
};

enum class EdgeKind { Spoke, Rail };

struct EdgeId {
    EdgeKind kind;
    int index;
    int sign = +1;

    std::string label(const FamilySpec& spec) const;
};

struct OrientedGraph {
    struct Edge {
        std::string id;
        std::size_t tail;
        std::size_t head;
    };

    Family family;
    int n;
    std::vector<std::string> vertex_labels;
    std::vector<Edge> edges;

    const Edge& find_edge(const std::string& id) const;
    std::size_t vertex_index(const std::string& label) const;
};

OrientedGraph build_graph(const FamilySpec& spec);

/// |V| x |E| matrix over {0, +1, -1}; labeled in canonical order.
RationalMatrix incidence_matrix(const OrientedGraph& g);

/// Q * Q^T; diagonal holds degrees, off-diagonal minus edge multiplicities.
RationalMatrix laplacian_matrix(const OrientedGraph& g);

/**
 * Identifies the endpoints of the named edge. The earlier endpoint keeps its
 * position and label; the edge itself and any self-loop created by the merge
 * are dropped, parallel edges are kept. Raises LabelError for an unknown id.
 */
OrientedGraph contract_edge(const OrientedGraph& g, const std::string& edge_id);

/// Edge-list document: family, n, vertex labels, and id/tail/head per edge.
nlohmann::ordered_json graph_to_json(const OrientedGraph& g);

} // namespace laddermat
