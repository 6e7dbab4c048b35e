#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace pdnf::app {

/// A field description bundled into the binary.
struct Fixture {
  std::string_view name;
  std::string_view text;
};

/// All bundled fixtures, sorted by name.
std::span<const Fixture> fixtures();

std::optional<std::string_view> fixture_text(std::string_view name);

}  // namespace pdnf::app
