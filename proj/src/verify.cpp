#include "laddermat/verify.hpp"

#include "laddermat/sequences.hpp"

#include <optional>
#include <utility>

namespace laddermat {

namespace {

BigInt av(int n) { return seq_value(SeqKind::A, static_cast<unsigned>(n)); }
BigInt sv(int n) { return seq_value(SeqKind::S, static_cast<unsigned>(n)); }

std::optional<std::pair<std::size_t, std::size_t>> first_diff(
    const RationalMatrix& a, const RationalMatrix& b) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != b(r, c))
                return std::make_pair(r, c);
    return std::nullopt;
}

CheckResult matrix_compare(std::string name, const RationalMatrix& closed,
                           const RationalMatrix& oracle) {
    CheckResult result{std::move(name)};
    if (closed.rows() != oracle.rows() || closed.cols() != oracle.cols()) {
        result.pass = false;
        result.detail["closed_shape"] = closed.shape_string();
        result.detail["oracle_shape"] = oracle.shape_string();
        return result;
    }
    if (const auto diff = first_diff(closed, oracle)) {
        result.pass = false;
        result.detail["row"] = closed.row_labels().empty()
                                   ? std::to_string(diff->first)
                                   : closed.row_labels()[diff->first];
        result.detail["col"] = closed.col_labels().empty()
                                   ? std::to_string(diff->second)
                                   : closed.col_labels()[diff->second];
        result.detail["closed"] =
            format_rational(closed(diff->first, diff->second));
        result.detail["oracle"] =
            format_rational(oracle(diff->first, diff->second));
    }
    return result;
}

CheckResult not_applicable(std::string name) {
    CheckResult result{std::move(name)};
    result.applicable = false;
    return result;
}

std::string spoke_id(int i) { return "f" + std::to_string(i); }

// Endpoint labels of spoke f_i in the family's canonical naming.
std::pair<std::string, std::string> spoke_endpoints(const FamilySpec& spec,
                                                    int i) {
    if (spec.family == Family::Mobius)
        return {"u" + std::to_string(i), "v" + std::to_string(i)};
    return {"u" + std::to_string(i) + "+", "u" + std::to_string(i) + "-"};
}

} // namespace

VerifyContext VerifyContext::make(const FamilySpec& spec) {
    spec.validate();
    VerifyContext ctx{spec,
                      build_graph(spec),
                      {},
                      {},
                      qplus(spec).matrix,
                      lplus(spec).matrix,
                      resistance(spec).matrix,
                      {},
                      {}};
    ctx.incidence = incidence_matrix(ctx.graph);
    ctx.laplacian = laplacian_matrix(ctx.graph);
    ctx.lplus_oracle = pinv_laplacian(ctx.laplacian);
    ctx.qplus_oracle = pinv_incidence(ctx.incidence, ctx.lplus_oracle);
    return ctx;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "penrose",        "qplus_oracle",     "lplus_oracle",
        "ladder_lemmas",  "scaled_b",         "factorization",
        "resistance",     "spoke_resistance", "path_sum",
        "kirchhoff",      "tree_count",       "contracted_trees"};
    return names;
}

CheckResult check_penrose(const VerifyContext& ctx) {
    CheckResult result{"penrose"};
    const PenroseReport report =
        penrose_check(ctx.incidence, ctx.qplus_closed);
    if (!report.all()) {
        result.pass = false;
        result.detail["axa_equals_a"] = report.axa_equals_a;
        result.detail["xax_equals_x"] = report.xax_equals_x;
        result.detail["ax_symmetric"] = report.ax_symmetric;
        result.detail["xa_symmetric"] = report.xa_symmetric;
    }
    return result;
}

CheckResult check_qplus_oracle(const VerifyContext& ctx) {
    return matrix_compare("qplus_oracle", ctx.qplus_closed, ctx.qplus_oracle);
}

CheckResult check_lplus_oracle(const VerifyContext& ctx) {
    return matrix_compare("lplus_oracle", ctx.lplus_closed, ctx.lplus_oracle);
}

CheckResult check_ladder_lemmas(const VerifyContext& ctx) {
    if (ctx.spec.family != Family::Ladder)
        return not_applicable("ladder_lemmas");
    CheckResult result{"ladder_lemmas"};
    const RationalMatrix& h = ctx.qplus_closed;
    const std::size_t vertices = ctx.incidence.rows();

    const RationalMatrix h_ones =
        h * RationalMatrix::ones_column(h.cols());
    for (std::size_t r = 0; r < h_ones.rows(); ++r)
        if (h_ones(r, 0) != 0) {
            result.pass = false;
            result.detail["lemma"] = "h_ones";
            result.detail["row"] = h.row_labels()[r];
            result.detail["value"] = format_rational(h_ones(r, 0));
            return result;
        }

    const RationalMatrix expected =
        RationalMatrix::identity(vertices) -
        make_rational(1, BigInt(vertices)) *
            RationalMatrix::all_ones(vertices, vertices);
    const RationalMatrix qh = ctx.incidence * h;
    if (qh != expected) {
        result.pass = false;
        result.detail["lemma"] = "qh_identity";
        const auto diff = first_diff(qh, expected);
        result.detail["row"] = diff->first;
        result.detail["col"] = diff->second;
        return result;
    }

    if (!(h * ctx.incidence).is_symmetric()) {
        result.pass = false;
        result.detail["lemma"] = "hq_symmetric";
    }
    return result;
}

CheckResult check_scaled_b(const VerifyContext& ctx) {
    if (ctx.spec.family != Family::Ladder)
        return not_applicable("scaled_b");
    CheckResult result{"scaled_b"};
    const int n = ctx.spec.n;
    const BigInt s_n = sv(n);
    const RationalMatrix scaled =
        BigRational(2 * s_n) * LadderBlocks::make(n).b;
    for (int i = 1; i <= n; ++i) {
        BigRational row_sum = 0;
        for (int j = 1; j <= n; ++j) {
            const BigRational& entry = scaled(i - 1, j - 1);
            if (denominator(entry) != 1) {
                result.pass = false;
                result.detail["reason"] = "non-integer entry";
                result.detail["row"] = i;
                result.detail["col"] = j;
                return result;
            }
            row_sum += entry;
        }
        if (row_sum != BigRational(s_n)) {
            result.pass = false;
            result.detail["reason"] = "row sum";
            result.detail["row"] = i;
            result.detail["value"] = format_rational(row_sum);
            return result;
        }
        if (scaled(i - 1, i - 1) != BigRational(av(i) * av(n - i + 1))) {
            result.pass = false;
            result.detail["reason"] = "diagonal";
            result.detail["row"] = i;
            return result;
        }
    }
    return result;
}

CheckResult check_factorization(const VerifyContext& ctx) {
    if (ctx.spec.family != Family::CircularLadder)
        return not_applicable("factorization");
    CheckResult result{"factorization"};
    const int n = ctx.spec.n;
    const BigRational total(tree_count(ctx.spec));
    BigRational factored;
    if (n % 2 == 1) {
        const int k = (n - 1) / 2;
        factored = BigRational(BigInt(n) * sv(n)) *
                   make_rational(sv(k + 1) + sv(k), sv(k + 1) - sv(k));
    } else {
        const int k = n / 2;
        factored = BigRational(BigInt(n) * sv(n)) *
                   make_rational(sv(k + 1) + 2 * sv(k) + sv(k - 1),
                                 sv(k + 1) - sv(k - 1));
    }
    if (total != factored) {
        result.pass = false;
        result.detail["tree_count"] = format_rational(total);
        result.detail["factored"] = format_rational(factored);
    }
    return result;
}

CheckResult check_resistance_oracle(const VerifyContext& ctx) {
    const std::size_t vertices = ctx.lplus_oracle.rows();
    RationalMatrix assembled(vertices, vertices);
    for (std::size_t r = 0; r < vertices; ++r)
        for (std::size_t c = 0; c < vertices; ++c)
            assembled(r, c) = ctx.lplus_oracle(r, r) + ctx.lplus_oracle(c, c) -
                              ctx.lplus_oracle(r, c) - ctx.lplus_oracle(c, r);
    assembled.set_row_labels(ctx.graph.vertex_labels);
    assembled.set_col_labels(ctx.graph.vertex_labels);
    return matrix_compare("resistance", ctx.resistance_closed, assembled);
}

CheckResult check_spoke_resistance(const VerifyContext& ctx) {
    CheckResult result{"spoke_resistance"};
    const BigRational total(tree_count(ctx.spec));
    for (int i = 1; i <= ctx.spec.n; ++i) {
        const auto [u, v] = spoke_endpoints(ctx.spec, i);
        const BigRational closed = ctx.resistance_closed.at(u, v);
        const BigRational ratio =
            BigRational(contracted_tree_count(ctx.spec, i)) / total;
        if (closed != ratio) {
            result.pass = false;
            result.detail["spoke"] = spoke_id(i);
            result.detail["resistance"] = format_rational(closed);
            result.detail["tree_ratio"] = format_rational(ratio);
            return result;
        }
    }
    return result;
}

CheckResult check_path_sum(const VerifyContext& ctx) {
    CheckResult result{"path_sum"};
    const auto compare = [&](const std::vector<std::string>& path,
                             const std::string& u, const std::string& v) {
        const BigRational by_path =
            path_sum_resistance(ctx.graph, ctx.qplus_closed, path, u, v);
        const BigRational by_lplus =
            resistance_from_lplus(ctx.lplus_oracle, u, v);
        if (by_path != by_lplus) {
            result.pass = false;
            result.detail["path"] = path;
            result.detail["path_sum"] = format_rational(by_path);
            result.detail["oracle"] = format_rational(by_lplus);
            return false;
        }
        return true;
    };

    const int n = ctx.spec.n;
    for (int i = 1; i <= n; ++i) {
        const auto [u, v] = spoke_endpoints(ctx.spec, i);
        if (!compare({spoke_id(i)}, u, v))
            return result;
    }

    const FamilySpec& spec = ctx.spec;
    const int cycle = spec.family == Family::Mobius ? 2 * n : n;
    const int max_start = spec.family == Family::Ladder ? n - 1 : cycle;
    for (int start = 1; start <= max_start; ++start)
        for (int len = 1; len <= 3; ++len) {
            if (spec.family == Family::Ladder && start + len > n)
                break;
            if (spec.family != Family::Ladder && len >= cycle)
                break;
            std::vector<std::string> path;
            for (int step = 0; step < len; ++step) {
                EdgeId rail{EdgeKind::Rail, start + step, +1};
                path.push_back(rail.label(spec));
            }
            const std::string u = VertexId{start, +1}.label(spec);
            const std::string v = VertexId{start + len, +1}.label(spec);
            if (!compare(path, u, v))
                return result;
        }
    return result;
}

CheckResult check_kirchhoff(const VerifyContext& ctx) {
    CheckResult result{"kirchhoff"};
    const BigRational closed = kirchhoff_index(ctx.spec);
    const BigRational half_sum = ctx.resistance_closed.grand_sum() / 2;
    const BigRational from_trace =
        BigRational(2 * ctx.spec.n) * ctx.lplus_oracle.trace();
    if (closed != half_sum || closed != from_trace) {
        result.pass = false;
        result.detail["closed"] = format_rational(closed);
        result.detail["half_grand_sum"] = format_rational(half_sum);
        result.detail["trace_oracle"] = format_rational(from_trace);
    }
    return result;
}

CheckResult check_tree_count(const VerifyContext& ctx) {
    CheckResult result{"tree_count"};
    const BigInt closed = tree_count(ctx.spec);
    const BigInt oracle = matrix_tree_count(ctx.graph);
    if (closed != oracle) {
        result.pass = false;
        result.detail["closed"] = closed.str();
        result.detail["oracle"] = oracle.str();
    }
    return result;
}

CheckResult check_contracted_trees(const VerifyContext& ctx) {
    CheckResult result{"contracted_trees"};
    for (int i = 1; i <= ctx.spec.n; ++i) {
        const BigInt closed = contracted_tree_count(ctx.spec, i);
        const BigInt oracle =
            matrix_tree_count(contract_edge(ctx.graph, spoke_id(i)));
        if (closed != oracle) {
            result.pass = false;
            result.detail["spoke"] = spoke_id(i);
            result.detail["closed"] = closed.str();
            result.detail["oracle"] = oracle.str();
            return result;
        }
    }
    return result;
}

std::vector<CheckResult> run_all_checks(const VerifyContext& ctx) {
    std::vector<CheckResult> results;
    results.push_back(check_penrose(ctx));
    results.push_back(check_qplus_oracle(ctx));
    results.push_back(check_lplus_oracle(ctx));
    results.push_back(check_ladder_lemmas(ctx));
    results.push_back(check_scaled_b(ctx));
    results.push_back(check_factorization(ctx));
    results.push_back(check_resistance_oracle(ctx));
    results.push_back(check_spoke_resistance(ctx));
    results.push_back(check_path_sum(ctx));
    results.push_back(check_kirchhoff(ctx));
    results.push_back(check_tree_count(ctx));
    results.push_back(check_contracted_trees(ctx));
    return results;
}

} // namespace laddermat
