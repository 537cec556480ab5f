#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bubblecross/bounds.hpp"
#include "bubblecross/io/csv.hpp"

namespace bubblecross::io {

// value / ((n-1)!)^2 rounded half-up to `digits` decimals. Display only.
inline std::string ratio_decimal(const BigCount& value, int n, int digits = 12) {
  const BigCount top = big_factorial(n - 1);
  const BigCount den = top * top;
  BigCount scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigCount scaled = (value * scale * 2 + den) / (den * 2);
  const BigCount whole = scaled / scale;
  std::string frac = BigCount(scaled % scale).str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return whole.str() + "." + frac;
}

inline void write_bounds_csv(std::ostream& os, const std::vector<BoundRow>& rows) {
  os << csv_row({"n", "bound", "ratio_approx"});
  for (const auto& row : rows) {
    os << csv_row({std::to_string(row.n), row.nu_recurrence.str(), ratio_decimal(row.nu_recurrence, row.n)});
  }
}

inline nlohmann::json bounds_to_json(const std::vector<BoundRow>& rows) {
  nlohmann::json j;
  auto& out = j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    out.push_back({{"n", row.n},
                   {"nu_recurrence", row.nu_recurrence.str()},
                   {"nu_closed_sum", row.nu_generation_sum.str()},
                   {"nu_closed_form", row.nu_closed_form.str()},
                   {"bracket", closed_form_bracket(row.n).str()},
                   {"ratio_approx", ratio_decimal(row.nu_recurrence, row.n)}});
  }
  return j;
}

}  // namespace bubblecross::io
