#pragma once

#include <functional>
#include <optional>

#include "flagkit/error.hpp"

/// The code of the flagkit::Error raised by `fn`, or nothing if it returns.
inline std::optional<flagkit::Errc> error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const flagkit::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
