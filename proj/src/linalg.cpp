#include "laddermat/linalg.hpp"

#include <utility>

namespace laddermat {

namespace {

void require_square(const RationalMatrix& m, const char* what) {
    if (m.rows() != m.cols())
        throw ShapeError(std::string(what) + ": matrix is " +
                         m.shape_string());
}

BigRational bareiss_rational(RationalMatrix work) {
    const std::size_t n = work.rows();
    int sign = 1;
    BigRational prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (work(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && work(swap_row, k) == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(work(k, c), work(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                work(i, j) =
                    (work(i, j) * work(k, k) - work(i, k) * work(k, j)) / prev;
        prev = work(k, k);
    }
    return sign > 0 ? work(n - 1, n - 1) : -work(n - 1, n - 1);
}

BigRational bareiss_integer(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<BigInt> work(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            work[r * n + c] = numerator(m(r, c));

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (work[k * n + k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && work[swap_row * n + k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(work[k * n + c], work[swap_row * n + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt value = work[i * n + j] * work[k * n + k] -
                               work[i * n + k] * work[k * n + j];
                BigInt quotient, remainder;
                divide_qr(value, prev, quotient, remainder);
                if (remainder != 0)
                    throw std::logic_error(
                        "bareiss_determinant: inexact division");
                work[i * n + j] = std::move(quotient);
            }
        prev = work[k * n + k];
    }
    BigInt det = work[n * n - 1];
    return BigRational(sign > 0 ? det : -det);
}

} // namespace

RationalMatrix gauss_jordan_inverse(const RationalMatrix& m) {
    require_square(m, "gauss_jordan_inverse");
    const std::size_t n = m.rows();
    RationalMatrix work = m;
    RationalMatrix inv = RationalMatrix::identity(n);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw SingularMatrixError(col);
        if (pivot != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(work(pivot, c), work(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        const BigRational scale = 1 / work(col, col);
        if (scale != 1)
            for (std::size_t c = 0; c < n; ++c) {
                work(col, c) *= scale;
                inv(col, c) *= scale;
            }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work(r, col) == 0)
                continue;
            const BigRational factor = work(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                work(r, c) -= factor * work(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    if (!m.col_labels().empty())
        inv.set_row_labels(m.col_labels());
    if (!m.row_labels().empty())
        inv.set_col_labels(m.row_labels());
    return inv;
}

BigRational bareiss_determinant(const RationalMatrix& m) {
    require_square(m, "bareiss_determinant");
    if (m.rows() == 0)
        return 1;
    bool integral = true;
    for (std::size_t r = 0; r < m.rows() && integral; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (denominator(m(r, c)) != 1) {
                integral = false;
                break;
            }
    return integral ? bareiss_integer(m) : bareiss_rational(m);
}

RationalMatrix pinv_laplacian(const RationalMatrix& lap) {
    require_square(lap, "pinv_laplacian");
    if (!lap.is_symmetric())
        throw std::invalid_argument("pinv_laplacian: matrix is not symmetric");
    for (const auto& sum : lap.row_sums())
        if (sum != 0)
            throw std::invalid_argument(
                "pinv_laplacian: row sums are not zero");

    const std::size_t count = lap.rows();
    const RationalMatrix shift = RationalMatrix::constant(
        count, count, make_rational(1, BigInt(count)));
    RationalMatrix inverse;
    try {
        inverse = gauss_jordan_inverse(lap + shift);
    } catch (const SingularMatrixError&) {
        throw ConnectivityError(
            "pinv_laplacian: input is the Laplacian of a disconnected graph");
    }
    RationalMatrix result = inverse - shift;
    if (!lap.row_labels().empty()) {
        result.set_row_labels(lap.row_labels());
        result.set_col_labels(lap.col_labels());
    }
    return result;
}

RationalMatrix pinv_incidence(const RationalMatrix& q,
                              const RationalMatrix& lplus) {
    if (q.rows() != lplus.rows())
        throw ShapeError("pinv_incidence: " + q.shape_string() +
                         " incidence vs " + lplus.shape_string() +
                         " pseudoinverse");
    return q.transpose() * lplus;
}

PenroseReport penrose_check(const RationalMatrix& a, const RationalMatrix& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw ShapeError("penrose_check: candidate is " + x.shape_string() +
                         ", need " + std::to_string(a.cols()) + "x" +
                         std::to_string(a.rows()));
    const RationalMatrix ax = a * x;
    const RationalMatrix xa = x * a;
    PenroseReport report;
    report.axa_equals_a = ax * a == a;
    report.xax_equals_x = x * ax == x;
    report.ax_symmetric = ax.is_symmetric();
    report.xa_symmetric = xa.is_symmetric();
    return report;
}

BigInt matrix_tree_count(const OrientedGraph& g) {
    const std::size_t count = g.vertex_labels.size();
    if (count == 0)
        throw std::domain_error("matrix_tree_count: graph has no vertices");
    if (count == 1)
        return 1;
    const RationalMatrix lap = laplacian_matrix(g);
    const BigRational det =
        bareiss_determinant(lap.minor_removed(count - 1, count - 1));
    if (denominator(det) != 1)
        throw std::logic_error("matrix_tree_count: non-integer determinant");
    return numerator(det);
}

BigRational resistance_from_lplus(const RationalMatrix& lplus,
                                  const std::string& u, const std::string& v) {
    const std::size_t ui = lplus.row_index(u);
    const std::size_t vi = lplus.row_index(v);
    return lplus(ui, ui) + lplus(vi, vi) - lplus(ui, vi) - lplus(vi, ui);
}

BigRational path_sum_resistance(const OrientedGraph& g,
                                const RationalMatrix& qplus,
                                const std::vector<std::string>& path,
                                const std::string& u, const std::string& v) {
    std::size_t current = g.vertex_index(u);
    const std::size_t target = g.vertex_index(v);
    for (const auto& id : path) {
        const OrientedGraph::Edge* edge = nullptr;
        try {
            edge = &g.find_edge(id);
        } catch (const LabelError& err) {
            throw PathError(err.what());
        }
        if (edge->tail != current)
            throw PathError("edge " + id + " does not leave vertex " +
                            g.vertex_labels[current]);
        current = edge->head;
    }
    if (current != target)
        throw PathError("path ends at " + g.vertex_labels[current] +
                        ", expected " + v);

    const std::size_t u_col = qplus.col_index(u);
    const std::size_t v_col = qplus.col_index(v);
    BigRational sum = 0;
    for (const auto& id : path) {
        const std::size_t row = qplus.row_index(id);
        sum += qplus(row, u_col) - qplus(row, v_col);
    }
    return sum;
}

} // namespace laddermat
