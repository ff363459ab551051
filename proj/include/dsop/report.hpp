#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsop/asymptotics.hpp"

namespace dsop {

/// Reads a CSV written by to_csv(RatioReport). Throws ValidationError on a
/// malformed header or row.
std::vector<RatioRow> parse_ratio_csv(std::string_view text);

/// Static log-log line chart of (x, y) pairs with axes, ticks and a
/// polyline. Points with a nonpositive coordinate are skipped.
std::string loglog_svg(const std::vector<std::pair<double, double>>& points, std::string_view title,
                       std::string_view x_label, std::string_view y_label);

}  // namespace dsop
