#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dsop/interval.hpp"
#include "dsop/sobolev.hpp"

namespace dsop {

enum class Mode { exact, floating };

struct LaguerreDoc {
  Rational alpha;
  friend bool operator==(const LaguerreDoc&, const LaguerreDoc&) = default;
};

struct MomentsDoc {
  std::vector<Rational> values;
  ExtReal lo = ExtReal::minus_infinity();
  ExtReal hi = ExtReal::plus_infinity();
  friend bool operator==(const MomentsDoc&, const MomentsDoc&) = default;
};

/// The JSON config document:
///
///   {"measure": {"type": "laguerre", "alpha": "0"},
///    "masses": [{"c": "-1", "order": 1, "lambda": "2"}],
///    "mode": "exact"}
///
/// A moment measure reads {"type": "moments", "values": ["1", ...],
/// "hull": ["0", "inf"]}. Numbers are exact strings; unknown keys are
/// rejected. λ = 0 entries are kept here and dropped by to_spec.
struct ConfigDoc {
  std::variant<LaguerreDoc, MomentsDoc> measure;
  std::vector<MassTerm> masses;
  Mode mode = Mode::exact;
  friend bool operator==(const ConfigDoc&, const ConfigDoc&) = default;
};

/// Throws ValidationError; syntax errors carry "line L, column C".
ConfigDoc parse_config(std::string_view text);
ConfigDoc load_config(const std::string& path);

std::string serialize_config(const ConfigDoc& doc);

/// Builds the validated inner product. Throws ValidationError.
SobolevSpec to_spec(const ConfigDoc& doc);

}  // namespace dsop
