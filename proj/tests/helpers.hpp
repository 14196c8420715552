#pragma once

#include <map>
#include <memory>
#include <string>

#include "coxeter/system.hpp"

// Shared enumerated systems; building the element store twice for the same
// group would dominate the suite's runtime.
inline const cox::CoxeterSystem& sys_of(const std::string& spec) {
  static std::map<std::string, std::unique_ptr<cox::CoxeterSystem>> cache;
  auto& slot = cache[spec];
  if (!slot)
    slot = std::make_unique<cox::CoxeterSystem>(cox::CoxeterType::parse(spec));
  return *slot;
}
