#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace slc {

/// Strips a trailing `$k` renaming suffix.
inline std::string_view base_name(std::string_view name) {
  auto pos = name.find('$');
  return pos == std::string_view::npos ? name : name.substr(0, pos);
}

/// Deterministic fresh name `base$k` with the smallest k >= 1 for which
/// `taken` answers false.
inline std::string fresh_name(std::string_view name, const std::function<bool(const std::string&)>& taken) {
  std::string base(base_name(name));
  for (unsigned k = 1;; ++k) {
    std::string candidate = base + "$" + std::to_string(k);
    if (!taken(candidate)) return candidate;
  }
}

}  // namespace slc
