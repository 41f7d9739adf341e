#pragma once

/**
 * Exact rational linear algebra: Gauss-Jordan inversion, fraction-free
 * determinants, and the pseudoinverse oracle used to certify every closed
 * form in the library.
 *
 * The Laplacian pseudoinverse is computed as (L + J/N)^{-1} - J/N, which is
 * exact over the rationals for the Laplacian of a connected graph; the
 * incidence pseudoinverse follows as Q^T L^+.
 */

#include "laddermat/graph.hpp"
#include "laddermat/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace laddermat {

/// Elimination found no nonzero pivot in the recorded column.
struct SingularMatrixError : std::runtime_error {
    std::size_t pivot_column;

    explicit SingularMatrixError(std::size_t column)
        : std::runtime_error("singular matrix: no pivot in column " +
                             std::to_string(column)),
          pivot_column(column) {}
};

/// The Laplacian belongs to a disconnected graph.
struct ConnectivityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A path argument is not a forward-oriented walk between its endpoints.
struct PathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Exact inverse via Gauss-Jordan elimination, first nonzero pivot per
 * column. Raises SingularMatrixError carrying the deficient column.
 */
RationalMatrix gauss_jordan_inverse(const RationalMatrix& m);

/**
 * Determinant by Bareiss fraction-free elimination; every division is exact,
 * so integer input never leaves the integers. Returns 0 for singular input.
 */
BigRational bareiss_determinant(const RationalMatrix& m);

/**
 * Moore-Penrose inverse of a connected graph's Laplacian. Input must be
 * symmetric with zero row sums; disconnected input raises ConnectivityError.
 */
RationalMatrix pinv_laplacian(const RationalMatrix& lap);

/// Q^T * Lplus, the Moore-Penrose inverse of Q given the one of L = QQ^T.
RationalMatrix pinv_incidence(const RationalMatrix& q,
                              const RationalMatrix& lplus);

/// Outcome of the four Moore-Penrose conditions for a candidate X against A.
struct PenroseReport {
    bool axa_equals_a = false;
    bool xax_equals_x = false;
    bool ax_symmetric = false;
    bool xa_symmetric = false;

    bool all() const {
        return axa_equals_a && xax_equals_x && ax_symmetric && xa_symmetric;
    }
};

PenroseReport penrose_check(const RationalMatrix& a, const RationalMatrix& x);

/**
 * Number of spanning trees via the Matrix-Tree theorem: Bareiss determinant
 * of the Laplacian with the last vertex's row and column removed. Handles
 * the multigraphs produced by contract_edge.
 */
BigInt matrix_tree_count(const OrientedGraph& g);

/// L+_{uu} + L+_{vv} - L+_{uv} - L+_{vu}, addressed by vertex labels.
BigRational resistance_from_lplus(const RationalMatrix& lplus,
                                  const std::string& u, const std::string& v);

/**
 * Resistance as the telescoping sum of Q+ entries along a directed u -> v
 * path, given as an ordered list of edge ids. Every edge must be oriented
 * forward along the walk; violations raise PathError.
 */
BigRational path_sum_resistance(const OrientedGraph& g,
                                const RationalMatrix& qplus,
                                const std::vector<std::string>& path,
                                const std::string& u, const std::string& v);

} // namespace laddermat
