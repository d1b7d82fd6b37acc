#pragma once

#include <optional>

#include "poncelet/error.hpp"

template <typename F>
std::optional<poncelet::ErrorCode> ErrorCodeOf(F&& f) {
  try {
    f();
  } catch (const poncelet::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
