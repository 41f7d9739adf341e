#pragma once

/**
 * Deterministic CSV/JSON renderings of closed-form results.
 *
 * Rationals are rendered as "p/q" strings (integers without "/1"), never
 * floats. The JSON layout is
 *
 *   {"spec":{"family":...,"n":...},"kind":...,"rows":[...],"cols":[...],
 *    "entries":[["p/q",...],...]}
 *
 * and matrix_from_json inverts it, so emit -> parse -> emit is the identity
 * on bytes.
 */

#include "laddermat/closed_form.hpp"

#include <json.hpp>

#include <string>

namespace laddermat {

/// Header "label,<col labels>", then one row per label. Trailing newline.
std::string matrix_to_csv(const ClosedFormResult& result);

nlohmann::ordered_json matrix_to_json(const ClosedFormResult& result);

/// Compact single-line dump of matrix_to_json, newline-terminated.
std::string matrix_json_string(const ClosedFormResult& result);

/// Rebuilds a result from the document layout above; throws
/// std::invalid_argument on a malformed document.
ClosedFormResult matrix_from_json(const nlohmann::ordered_json& doc);

} // namespace laddermat
