#include "laddermat/closed_form.hpp"

#include "laddermat/sequences.hpp"

#include <stdexcept>

namespace laddermat {

namespace {

BigInt av(int n) { return seq_value(SeqKind::A, static_cast<unsigned>(n)); }
BigInt sv(int n) { return seq_value(SeqKind::S, static_cast<unsigned>(n)); }

// (a_{n+1} - a_n) / (a_{n+1} + a_n + shift), the scale common to the
// circular families; shift is -2 for the circular ladder, +2 for Mobius.
BigRational cycle_ratio(int n, int shift) {
    return make_rational(av(n + 1) - av(n), av(n + 1) + av(n) + shift);
}

void attach_labels(RationalMatrix& m, const OrientedGraph& g, MatrixKind kind) {
    std::vector<std::string> edge_ids;
    edge_ids.reserve(g.edges.size());
    for (const auto& edge : g.edges)
        edge_ids.push_back(edge.id);
    if (kind == MatrixKind::QPlus) {
        m.set_row_labels(std::move(edge_ids));
        m.set_col_labels(g.vertex_labels);
    } else {
        m.set_row_labels(g.vertex_labels);
        m.set_col_labels(g.vertex_labels);
    }
}

ClosedFormResult wrap(const FamilySpec& spec, MatrixKind kind,
                      RationalMatrix matrix) {
    attach_labels(matrix, build_graph(spec), kind);
    return {spec, kind, std::move(matrix)};
}

} // namespace

std::string matrix_kind_token(MatrixKind kind) {
    switch (kind) {
    case MatrixKind::QPlus:
        return "qplus";
    case MatrixKind::LPlus:
        return "lplus";
    case MatrixKind::Resistance:
        return "resistance";
    }
    throw std::logic_error("matrix_kind_token: unhandled kind");
}

MatrixKind parse_matrix_kind(const std::string& token) {
    if (token == "qplus")
        return MatrixKind::QPlus;
    if (token == "lplus")
        return MatrixKind::LPlus;
    if (token == "resistance")
        return MatrixKind::Resistance;
    throw std::invalid_argument("unknown matrix kind '" + token +
                                "' (expected qplus, lplus, or resistance)");
}

LadderBlocks LadderBlocks::make(int n) {
    FamilySpec{Family::Ladder, n}.validate();
    const BigInt s_n = sv(n);
    const BigInt two_s = 2 * s_n;
    const BigInt two_n = 2 * n;

    LadderBlocks blocks{RationalMatrix(static_cast<std::size_t>(n),
                                       static_cast<std::size_t>(n)),
                        RationalMatrix(static_cast<std::size_t>(n - 1),
                                       static_cast<std::size_t>(n)),
                        RationalMatrix(static_cast<std::size_t>(n - 1),
                                       static_cast<std::size_t>(n))};

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int lo = std::min(i, j);
            const int hi = std::max(i, j);
            blocks.b(i - 1, j - 1) =
                make_rational(av(lo) * av(n - hi + 1), two_s);
        }

    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            BigRational c_entry;
            BigRational d_entry;
            if (i <= j) {
                const BigRational tail =
                    make_rational(av(n - j + 1) * sv(i), two_s);
                c_entry = (i == j ? BigRational(1) : BigRational(0)) -
                          make_rational(i, two_n) - tail;
                d_entry = -make_rational(i, two_n) + tail;
            } else {
                const BigRational tail =
                    make_rational(av(j) * sv(n - i), two_s);
                c_entry = BigRational(1, 2) - make_rational(i, two_n) + tail;
                d_entry = BigRational(1, 2) - make_rational(i, two_n) - tail;
            }
            blocks.c(i - 1, j - 1) = c_entry;
            blocks.d(i - 1, j - 1) = d_entry;
        }
    return blocks;
}

ClosedFormResult ladder_qplus(int n) {
    const FamilySpec spec{Family::Ladder, n};
    const LadderBlocks blocks = LadderBlocks::make(n);
    const std::size_t un = static_cast<std::size_t>(n);
    RationalMatrix h(3 * un - 2, 2 * un);

    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j) {
            h(i, j) = blocks.b(i, j);
            h(i, un + j) = -blocks.b(i, j);
        }
    for (std::size_t i = 0; i + 1 < un; ++i)
        for (std::size_t j = 0; j < un; ++j) {
            h(un + i, j) = blocks.c(i, j);
            h(un + i, un + j) = blocks.d(i, j);
            h(2 * un - 1 + i, j) = blocks.d(i, j);
            h(2 * un - 1 + i, un + j) = blocks.c(i, j);
        }
    return wrap(spec, MatrixKind::QPlus, std::move(h));
}

ClosedFormResult cl_qplus(int n) {
    const FamilySpec spec{Family::CircularLadder, n};
    spec.validate();
    const BigRational rho = cycle_ratio(n, -2);
    const std::size_t un = static_cast<std::size_t>(n);
    RationalMatrix q(3 * un, 2 * un);

    // Entry value at circular gap t from edge index j back to vertex index i.
    const auto rail = [&](int t, int sigma) {
        return -sigma * make_rational(2 * av(t + 1) - av(t), 4) * rho +
               make_rational(sigma * av(t + 1) + 1, 4) -
               make_rational(2 * t + 1, 4 * n);
    };
    const auto spoke = [&](int t) {
        return make_rational(av(t + 1) + av(t), 4) * rho -
               make_rational(av(t + 1) - av(t), 4);
    };

    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) {
            const int t = (j - i + n) % n;
            for (int edge_side : {+1, -1})
                for (int vertex_side : {+1, -1}) {
                    const std::size_t row =
                        static_cast<std::size_t>(j - 1) +
                        (edge_side > 0 ? 0 : un);
                    const std::size_t col =
                        static_cast<std::size_t>(i - 1) +
                        (vertex_side > 0 ? 0 : un);
                    q(row, col) = rail(t, edge_side * vertex_side);
                }
            const BigRational base = spoke(t);
            q(2 * un + static_cast<std::size_t>(j - 1),
              static_cast<std::size_t>(i - 1)) = base;
            q(2 * un + static_cast<std::size_t>(j - 1),
              un + static_cast<std::size_t>(i - 1)) = -base;
        }
    return wrap(spec, MatrixKind::QPlus, std::move(q));
}

ClosedFormResult mobius_qplus(int n) {
    const FamilySpec spec{Family::Mobius, n};
    spec.validate();
    const BigRational rho = cycle_ratio(n, +2);
    const std::size_t un = static_cast<std::size_t>(n);
    RationalMatrix q(3 * un, 2 * un);

    for (int j = 1; j <= 2 * n; ++j)
        for (int i = 1; i <= 2 * n; ++i) {
            const int gap = (j - i + 2 * n) % (2 * n);
            BigRational value;
            if (gap < n) {
                const int t = gap;
                value = -make_rational(2 * av(t + 1) - av(t), 4) * rho +
                        make_rational(av(t + 1) + 1, 4) -
                        make_rational(2 * t + 1, 4 * n);
            } else {
                // The cycle edge sits past the antipode of the vertex, which
                // flips the sign pattern of the first two terms.
                const int t = gap - n;
                value = make_rational(2 * av(t + 1) - av(t), 4) * rho -
                        make_rational(av(t + 1) - 1, 4) -
                        make_rational(2 * t + 1, 4 * n);
            }
            q(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) =
                value;
        }

    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= 2 * n; ++i) {
            const int t = (j - i + 2 * n) % n;
            const int unreduced = i + t;
            const int sign =
                ((unreduced - 1) % (2 * n)) / n == 0 ? +1 : -1;
            const BigRational base =
                make_rational(av(t + 1) + av(t), 4) * rho -
                make_rational(av(t + 1) - av(t), 4);
            q(2 * un + static_cast<std::size_t>(j - 1),
              static_cast<std::size_t>(i - 1)) = sign * base;
        }
    return wrap(spec, MatrixKind::QPlus, std::move(q));
}

ClosedFormResult qplus(const FamilySpec& spec) {
    spec.validate();
    switch (spec.family) {
    case Family::Ladder:
        return ladder_qplus(spec.n);
    case Family::CircularLadder:
        return cl_qplus(spec.n);
    case Family::Mobius:
        return mobius_qplus(spec.n);
    }
    throw std::logic_error("qplus: unhandled family");
}

ClosedFormResult lplus(const FamilySpec& spec) {
    spec.validate();
    const int n = spec.n;
    if (spec.family == Family::Ladder) {
        const RationalMatrix h = ladder_qplus(n).matrix;
        return wrap(spec, MatrixKind::LPlus, h.transpose() * h);
    }

    const BigRational rho =
        cycle_ratio(n, spec.family == Family::CircularLadder ? -2 : +2);
    const BigRational constant =
        make_rational(BigInt(n) * n - 1, BigInt(24) * n);
    const auto entry = [&](int t, int sigma) {
        return sigma * make_rational(av(t + 1) + av(t), 8) * rho -
               sigma * make_rational(av(t + 1) - av(t), 8) -
               make_rational(t, 4) + make_rational(BigInt(t) * t, BigInt(4) * n) +
               constant;
    };

    const std::size_t un = static_cast<std::size_t>(n);
    RationalMatrix m(2 * un, 2 * un);
    if (spec.family == Family::CircularLadder) {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                const int t = j - i;
                for (int si : {+1, -1})
                    for (int sj : {+1, -1}) {
                        const std::size_t r =
                            static_cast<std::size_t>(i - 1) + (si > 0 ? 0 : un);
                        const std::size_t c =
                            static_cast<std::size_t>(j - 1) + (sj > 0 ? 0 : un);
                        const BigRational value = entry(t, si * sj);
                        m(r, c) = value;
                        m(c, r) = value;
                    }
            }
    } else {
        for (int i = 1; i <= 2 * n; ++i)
            for (int j = i; j <= 2 * n; ++j) {
                const int forward = (j - i) % (2 * n);
                const int t = std::min(forward, 2 * n - forward);
                const BigRational value = entry(t, +1);
                m(static_cast<std::size_t>(i - 1),
                  static_cast<std::size_t>(j - 1)) = value;
                m(static_cast<std::size_t>(j - 1),
                  static_cast<std::size_t>(i - 1)) = value;
            }
    }
    return wrap(spec, MatrixKind::LPlus, std::move(m));
}

ClosedFormResult ladder_resistance(int n) {
    const FamilySpec spec{Family::Ladder, n};
    spec.validate();
    const BigInt s_n = sv(n);
    const std::size_t un = static_cast<std::size_t>(n);
    RationalMatrix m(2 * un, 2 * un);

    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const int d = j - i;
            const BigRational alpha = make_rational(
                av(i) * av(n - i + 1) + av(j) * av(n - j + 1), 4 * s_n);
            const BigRational cross =
                make_rational(av(i) * av(n - j + 1), 2 * s_n);
            for (int si : {+1, -1})
                for (int sj : {+1, -1}) {
                    const std::size_t r =
                        static_cast<std::size_t>(i - 1) + (si > 0 ? 0 : un);
                    const std::size_t c =
                        static_cast<std::size_t>(j - 1) + (sj > 0 ? 0 : un);
                    const BigRational value = make_rational(d, 2) -
                                              si * sj * cross + alpha;
                    m(r, c) = value;
                    m(c, r) = value;
                }
        }
    return wrap(spec, MatrixKind::Resistance, std::move(m));
}

ClosedFormResult cl_resistance(int n) {
    const FamilySpec spec{Family::CircularLadder, n};
    spec.validate();
    const BigRational rho = cycle_ratio(n, -2);
    const std::size_t un = static_cast<std::size_t>(n);
    RationalMatrix m(2 * un, 2 * un);

    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const int t = j - i;
            for (int si : {+1, -1})
                for (int sj : {+1, -1}) {
                    const int sigma = si * sj;
                    const BigRational value =
                        -sigma *
                            make_rational(av(t + 1) + av(t) - 2 * sigma, 4) *
                            rho +
                        sigma * make_rational(av(t + 1) - av(t), 4) +
                        make_rational(t, 2) -
                        make_rational(BigInt(t) * t, BigInt(2) * n);
                    const std::size_t r =
                        static_cast<std::size_t>(i - 1) + (si > 0 ? 0 : un);
                    const std::size_t c =
                        static_cast<std::size_t>(j - 1) + (sj > 0 ? 0 : un);
                    m(r, c) = value;
                    m(c, r) = value;
                }
        }
    return wrap(spec, MatrixKind::Resistance, std::move(m));
}

ClosedFormResult mobius_resistance(int n) {
    const FamilySpec spec{Family::Mobius, n};
    spec.validate();
    const BigRational rho = cycle_ratio(n, +2);
    const std::size_t un = static_cast<std::size_t>(n);
    RationalMatrix m(2 * un, 2 * un);

    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i; j <= 2 * n; ++j) {
            const int forward = (j - i) % (2 * n);
            const int t = std::min(forward, 2 * n - forward);
            const BigRational value =
                -make_rational(av(t + 1) + av(t) - 2, 4) * rho +
                make_rational(av(t + 1) - av(t), 4) + make_rational(t, 2) -
                make_rational(BigInt(t) * t, BigInt(2) * n);
            m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                value;
            m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) =
                value;
        }
    return wrap(spec, MatrixKind::Resistance, std::move(m));
}

ClosedFormResult resistance(const FamilySpec& spec) {
    spec.validate();
    switch (spec.family) {
    case Family::Ladder:
        return ladder_resistance(spec.n);
    case Family::CircularLadder:
        return cl_resistance(spec.n);
    case Family::Mobius:
        return mobius_resistance(spec.n);
    }
    throw std::logic_error("resistance: unhandled family");
}

BigRational kirchhoff_index(const FamilySpec& spec) {
    spec.validate();
    const int n = spec.n;
    switch (spec.family) {
    case Family::Ladder:
        return make_rational(BigInt(n) * n, 3) *
               (BigRational(n + 1) + make_rational(av(n), sv(n)));
    case Family::CircularLadder:
    case Family::Mobius: {
        const int shift = spec.family == Family::CircularLadder ? -2 : +2;
        return BigRational(BigInt(n) * n) * cycle_ratio(n, shift) +
               make_rational(BigInt(n) * (BigInt(n) * n - 1), 6);
    }
    }
    throw std::logic_error("kirchhoff_index: unhandled family");
}

BigInt tree_count(const FamilySpec& spec) {
    spec.validate();
    const int n = spec.n;
    if (spec.family == Family::Ladder)
        return sv(n);
    const int shift = spec.family == Family::CircularLadder ? -2 : +2;
    const BigInt doubled = BigInt(n) * (av(n + 1) + av(n) + shift);
    BigInt count, remainder;
    divide_qr(doubled, BigInt(2), count, remainder);
    if (remainder != 0)
        throw std::logic_error("tree_count: half-integer result");
    return count;
}

BigInt contracted_tree_count(const FamilySpec& spec, int spoke_index) {
    spec.validate();
    const int n = spec.n;
    if (spoke_index < 1 || spoke_index > n)
        throw std::domain_error("contracted_tree_count: spoke index " +
                                std::to_string(spoke_index) +
                                " outside [1, " + std::to_string(n) + "]");
    if (spec.family == Family::Ladder)
        return av(spoke_index) * av(n - spoke_index + 1);
    return BigInt(n) * sv(n);
}

} // namespace laddermat
