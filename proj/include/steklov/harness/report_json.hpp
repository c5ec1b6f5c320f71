// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include <string>

#include "steklov/bounds.hpp"

namespace steklov::harness {

using Json = nlohmann::ordered_json;

/// Value rounded to 12 significant digits; infinities become "inf"/"-inf",
/// NaN becomes null.
Json json_number(double value);

/// "%.12g" text, "inf"/"-inf" for infinities.
std::string format_number(double value);

Json to_json(const bounds::BoundReport& report);

/// Compact single-line dump followed by a newline.
std::string dump_line(const Json& j);

}  // namespace steklov::harness
