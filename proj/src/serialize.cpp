#include "laddermat/serialize.hpp"

#include <stdexcept>

namespace laddermat {

std::string matrix_to_csv(const ClosedFormResult& result) {
    const RationalMatrix& m = result.matrix;
    std::string out = "label";
    for (const auto& label : m.col_labels()) {
        out += ',';
        out += label;
    }
    out += '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += m.row_labels()[r];
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out += ',';
            out += format_rational(m(r, c));
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json matrix_to_json(const ClosedFormResult& result) {
    nlohmann::ordered_json doc;
    doc["spec"] = {{"family", family_token(result.spec.family)},
                   {"n", result.spec.n}};
    doc["kind"] = matrix_kind_token(result.kind);
    doc["rows"] = result.matrix.row_labels();
    doc["cols"] = result.matrix.col_labels();
    auto& entries = doc["entries"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < result.matrix.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < result.matrix.cols(); ++c)
            row.push_back(format_rational(result.matrix(r, c)));
        entries.push_back(std::move(row));
    }
    return doc;
}

std::string matrix_json_string(const ClosedFormResult& result) {
    return matrix_to_json(result).dump() + "\n";
}

ClosedFormResult matrix_from_json(const nlohmann::ordered_json& doc) {
    try {
        FamilySpec spec{parse_family(doc.at("spec").at("family")),
                        doc.at("spec").at("n").get<int>()};
        const MatrixKind kind = parse_matrix_kind(doc.at("kind"));
        const auto rows = doc.at("rows").get<std::vector<std::string>>();
        const auto cols = doc.at("cols").get<std::vector<std::string>>();
        const auto& entries = doc.at("entries");
        if (entries.size() != rows.size())
            throw std::invalid_argument("entry row count mismatch");

        RationalMatrix m(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto& row = entries.at(r);
            if (row.size() != cols.size())
                throw std::invalid_argument("entry column count mismatch");
            for (std::size_t c = 0; c < cols.size(); ++c)
                m(r, c) = parse_rational(
                    row.at(c).get_ref<const std::string&>());
        }
        m.set_row_labels(rows);
        m.set_col_labels(cols);
        return {spec, kind, std::move(m)};
    } catch (const nlohmann::json::exception& err) {
        throw std::invalid_argument(std::string("malformed matrix document: ") +
                                    err.what());
    }
}

} // namespace laddermat
