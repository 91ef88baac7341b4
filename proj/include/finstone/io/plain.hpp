#pragma once

#include "finstone/io/json.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace finstone::io {

namespace detail {

inline void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out.emplace_back(path, j.get<std::string>());
  } else {
    out.emplace_back(path, j.dump());
  }
}

}  // namespace detail

/// One "key  value" line per leaf, keys padded to a common width. Arrays of
/// scalars stay on one line.
inline std::string to_plain(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  detail::flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string s;
  for (const auto& [k, v] : rows) s += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return s;
}

}  // namespace finstone::io
