/**
 * laddermat: generate and certify the exact closed-form matrices of the
 * ladder, circular ladder, and Mobius ladder families.
 *
 * Verbs:
 *   generate    emit one matrix (or the graph edge list) for a single n
 *   verify      run the full cross-check suite over a range of n
 *   trees       tabulate spanning-tree counts against the Matrix-Tree oracle
 *   kirchhoff   tabulate Kirchhoff indices against the trace oracle
 *   identities  sweep the sequence identities and Binet evaluations
 *
 * Exit status: 0 all good, 1 a verification failed, 2 usage error.
 * LADDERMAT_FORMAT selects the default --format for generate.
 */

#include "laddermat/closed_form.hpp"
#include "laddermat/linalg.hpp"
#include "laddermat/sequences.hpp"
#include "laddermat/serialize.hpp"
#include "laddermat/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace laddermat;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NRange {
    int lo = 0;
    int hi = 0;
};

NRange parse_range(const std::string& text) {
    const auto parse_bound = [&](const std::string& part) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(part, &used);
            if (used != part.size())
                throw std::invalid_argument(part);
            return value;
        } catch (const std::exception&) {
            throw UsageError("bad n value '" + part + "' in '" + text + "'");
        }
    };
    const auto dots = text.find("..");
    NRange range;
    if (dots == std::string::npos) {
        range.lo = range.hi = parse_bound(text);
    } else {
        range.lo = parse_bound(text.substr(0, dots));
        range.hi = parse_bound(text.substr(dots + 2));
    }
    if (range.lo > range.hi)
        throw UsageError("empty n range '" + text + "'");
    return range;
}

std::vector<Family> resolve_families(const std::string& token) {
    if (token == "all")
        return {Family::Ladder, Family::CircularLadder, Family::Mobius};
    try {
        return {parse_family(token)};
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }
}

void check_minima(const std::vector<Family>& families, const NRange& range) {
    for (const Family family : families) {
        const FamilySpec lowest{family, range.lo};
        if (range.lo < lowest.min_n())
            throw UsageError(family_token(family) + " requires n >= " +
                             std::to_string(lowest.min_n()) +
                             ", range starts at " + std::to_string(range.lo));
    }
}

/// Owns the output target: stdout by default, a file when requested.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::out | std::ios::trunc);
            if (!file_)
                throw UsageError("cannot open output file '" + path + "'");
        }
    }

    std::ostream& stream() {
        return file_.is_open() ? file_ : std::cout;
    }

private:
    std::ofstream file_;
};

std::string default_format() {
    const char* env = std::getenv("LADDERMAT_FORMAT");
    if (env == nullptr || *env == '\0')
        return "csv";
    const std::string value(env);
    if (value != "csv" && value != "json")
        throw UsageError("LADDERMAT_FORMAT must be csv or json, got '" +
                         value + "'");
    return value;
}

std::string graph_to_csv(const OrientedGraph& g) {
    std::string out = "id,tail,head\n";
    for (const auto& edge : g.edges) {
        out += edge.id;
        out += ',';
        out += g.vertex_labels[edge.tail];
        out += ',';
        out += g.vertex_labels[edge.head];
        out += '\n';
    }
    return out;
}

int run_generate(const std::string& family_token_arg, int n,
                 const std::string& matrix_arg, std::string format,
                 const std::string& output) {
    if (format.empty())
        format = default_format();
    Family family;
    try {
        family = parse_family(family_token_arg);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }
    const FamilySpec spec{family, n};
    try {
        spec.validate();
    } catch (const std::domain_error& err) {
        throw UsageError(err.what());
    }

    Sink sink(output);
    if (matrix_arg == "graph") {
        const OrientedGraph g = build_graph(spec);
        if (format == "json")
            sink.stream() << graph_to_json(g).dump() << "\n";
        else
            sink.stream() << graph_to_csv(g);
        return 0;
    }

    MatrixKind kind;
    try {
        kind = parse_matrix_kind(matrix_arg);
    } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
    }
    ClosedFormResult result;
    switch (kind) {
    case MatrixKind::QPlus:
        result = qplus(spec);
        break;
    case MatrixKind::LPlus:
        result = lplus(spec);
        break;
    case MatrixKind::Resistance:
        result = resistance(spec);
        break;
    }
    if (format == "json")
        sink.stream() << matrix_json_string(result);
    else
        sink.stream() << matrix_to_csv(result);
    return 0;
}

int run_verify(const std::string& family_arg, const std::string& n_arg,
               const std::string& output) {
    const std::vector<Family> families = resolve_families(family_arg);
    const NRange range = parse_range(n_arg);
    check_minima(families, range);

    Sink sink(output);
    std::ostream& out = sink.stream();
    out << "family,n";
    for (const auto& name : check_names())
        out << ',' << name;
    out << "\n";

    bool all_pass = true;
    for (const Family family : families)
        for (int n = range.lo; n <= range.hi; ++n) {
            const FamilySpec spec{family, n};
            const VerifyContext ctx = VerifyContext::make(spec);
            const std::vector<CheckResult> results = run_all_checks(ctx);
            out << family_token(family) << ',' << n;
            for (const auto& checked : results)
                out << ','
                    << (!checked.applicable ? "na"
                                            : checked.pass ? "pass" : "fail");
            out << "\n";
            for (const auto& checked : results) {
                if (checked.applicable && !checked.pass) {
                    all_pass = false;
                    nlohmann::ordered_json record;
                    record["family"] = family_token(family);
                    record["n"] = n;
                    record["check"] = checked.name;
                    record["detail"] = checked.detail;
                    out << record.dump() << "\n";
                }
            }
        }
    return all_pass ? 0 : 1;
}

int run_trees(const std::string& family_arg, const std::string& n_arg,
              const std::string& output) {
    const std::vector<Family> families = resolve_families(family_arg);
    const NRange range = parse_range(n_arg);
    check_minima(families, range);

    Sink sink(output);
    std::ostream& out = sink.stream();
    out << "family,n,closed,oracle,match\n";
    bool all_match = true;
    for (const Family family : families)
        for (int n = range.lo; n <= range.hi; ++n) {
            const FamilySpec spec{family, n};
            const BigInt closed = tree_count(spec);
            const BigInt oracle = matrix_tree_count(build_graph(spec));
            const bool match = closed == oracle;
            all_match = all_match && match;
            out << family_token(family) << ',' << n << ',' << closed.str()
                << ',' << oracle.str() << ',' << (match ? "yes" : "no")
                << "\n";
        }
    return all_match ? 0 : 1;
}

int run_kirchhoff(const std::string& family_arg, const std::string& n_arg,
                  const std::string& output) {
    const std::vector<Family> families = resolve_families(family_arg);
    const NRange range = parse_range(n_arg);
    check_minima(families, range);

    Sink sink(output);
    std::ostream& out = sink.stream();
    out << "family,n,closed,oracle,match\n";
    bool all_match = true;
    for (const Family family : families)
        for (int n = range.lo; n <= range.hi; ++n) {
            const FamilySpec spec{family, n};
            const BigRational closed = kirchhoff_index(spec);
            const RationalMatrix lp = pinv_laplacian(
                laplacian_matrix(build_graph(spec)));
            const BigRational oracle = BigRational(2 * n) * lp.trace();
            const bool match = closed == oracle;
            all_match = all_match && match;
            out << family_token(family) << ',' << n << ','
                << format_rational(closed) << ',' << format_rational(oracle)
                << ',' << (match ? "yes" : "no") << "\n";
        }
    return all_match ? 0 : 1;
}

int run_identities(int n_max, const std::string& output) {
    if (n_max < 2)
        throw UsageError("--n-max must be at least 2");
    Sink sink(output);
    std::ostream& out = sink.stream();
    out << "identity,cases,failures\n";

    bool all_pass = true;
    const auto report = [&](const std::string& name, long cases,
                            long failures) {
        all_pass = all_pass && failures == 0;
        out << name << ',' << cases << ',' << failures << "\n";
    };

    const auto sweep_plain = [&](const std::string& name, IdentityId id) {
        long failures = 0;
        for (int n = 0; n <= n_max; ++n)
            if (!check_identity(id, static_cast<unsigned>(n)))
                ++failures;
        report(name, n_max + 1, failures);
    };
    sweep_plain("sum", IdentityId::Sum);
    sweep_plain("double_s", IdentityId::DoubleS);

    const auto sweep_pairs = [&](const std::string& name, IdentityId id) {
        long cases = 0;
        long failures = 0;
        const int cap = n_max / 2;
        for (int n = 0; n <= cap; ++n)
            for (int Kk = 0; Kk <= n; ++Kk) {
                ++cases;
                if (!check_identity(id, static_cast<unsigned>(n),
                                    static_cast<unsigned>(Kk)))
                    ++failures;
            }
        report(name, cases, failures);
    };
    sweep_pairs("convolution", IdentityId::Convolution);
    sweep_pairs("split", IdentityId::Split);

    sweep_plain("square", IdentityId::Square);
    sweep_plain("weighted_sum", IdentityId::WeightedSum);

    {
        long cases = 0;
        long failures = 0;
        for (int n = 1; n <= n_max; n += 2) {
            ++cases;
            if (!check_identity(IdentityId::FactorOdd,
                                static_cast<unsigned>(n),
                                static_cast<unsigned>((n - 1) / 2)))
                ++failures;
        }
        report("factor_odd", cases, failures);
    }
    {
        long cases = 0;
        long failures = 0;
        for (int n = 2; n <= n_max; n += 2) {
            ++cases;
            if (!check_identity(IdentityId::FactorEven,
                                static_cast<unsigned>(n),
                                static_cast<unsigned>(n / 2)))
                ++failures;
        }
        report("factor_even", cases, failures);
    }

    for (const SeqKind kind : {SeqKind::A, SeqKind::S}) {
        long failures = 0;
        for (int n = 0; n <= n_max; ++n) {
            const QuadExt value = binet_value(kind, static_cast<unsigned>(n));
            if (!value.is_integral() ||
                numerator(value.rational_part) !=
                    seq_value(kind, static_cast<unsigned>(n)))
                ++failures;
        }
        report(kind == SeqKind::A ? "binet_a" : "binet_s", n_max + 1,
               failures);
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact closed forms for ladder-family graphs"};
    app.require_subcommand(1);

    std::string family;
    std::string n_range;
    int n_single = 0;
    std::string matrix_arg;
    std::string format;
    std::string output;
    int n_max = 200;

    CLI::App* generate = app.add_subcommand(
        "generate", "emit one matrix or the graph edge list");
    generate->add_option("--family", family, "ladder, cl, or mobius")
        ->required();
    generate->add_option("--n", n_single, "half the vertex count")->required();
    generate
        ->add_option("--matrix", matrix_arg,
                     "qplus, lplus, resistance, or graph")
        ->required()
        ->check(CLI::IsMember({"qplus", "lplus", "resistance", "graph"}));
    generate->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    generate->add_option("--output", output, "write here instead of stdout");

    CLI::App* verify =
        app.add_subcommand("verify", "run the oracle cross-check suite");
    verify->add_option("--family", family, "ladder, cl, mobius, or all")
        ->required();
    verify->add_option("--n", n_range, "single n or range A..B")->required();
    verify->add_option("--output", output, "write here instead of stdout");

    CLI::App* trees =
        app.add_subcommand("trees", "spanning-tree counts vs Matrix-Tree");
    trees->add_option("--family", family, "ladder, cl, mobius, or all")
        ->required();
    trees->add_option("--n", n_range, "single n or range A..B")->required();
    trees->add_option("--output", output, "write here instead of stdout");

    CLI::App* kirchhoff =
        app.add_subcommand("kirchhoff", "Kirchhoff indices vs trace oracle");
    kirchhoff->add_option("--family", family, "ladder, cl, mobius, or all")
        ->required();
    kirchhoff->add_option("--n", n_range, "single n or range A..B")
        ->required();
    kirchhoff->add_option("--output", output, "write here instead of stdout");

    CLI::App* identities =
        app.add_subcommand("identities", "sequence identity sweeps");
    identities->add_option("--n-max", n_max, "sweep bound (default 200)");
    identities->add_option("--output", output, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (generate->parsed())
            return run_generate(family, n_single, matrix_arg, format, output);
        if (verify->parsed())
            return run_verify(family, n_range, output);
        if (trees->parsed())
            return run_trees(family, n_range, output);
        if (kirchhoff->parsed())
            return run_kirchhoff(family, n_range, output);
        if (identities->parsed())
            return run_identities(n_max, output);
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
