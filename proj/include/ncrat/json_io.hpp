#pragma once

#include <json.hpp>

#include "ncrat/decide.hpp"
#include "ncrat/point.hpp"
#include "ncrat/realize.hpp"
#include "ncrat/series.hpp"

namespace ncrat {

using Json = nlohmann::ordered_json;

/// Matrices encode as arrays of rows with "num/den" or "int" strings.
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

/// {"d": .., "n": .., "mats": [matrix, ...]}
Json point_to_json(const EvalPoint& z);
EvalPoint point_from_json(const Json& j);

/// {"points": [point, ...]}
Json multipoint_to_json(const MultiPoint& pts);
MultiPoint multipoint_from_json(const Json& j);

/// {"d", "p", "q", "m", "A": [..], "B": [..], "C", "D"}
Json realization_to_json(const FmRealization& r);
FmRealization realization_from_json(const Json& j);

/// {"d", "p", "q", "order", "coeffs": {"<digit word>": matrix}}
Json series_to_json(const TruncSeries& s);

Json verdict_to_json(const Verdict& v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace ncrat
