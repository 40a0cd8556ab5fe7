#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace gvcot {

std::string base64_encode(std::span<const std::uint8_t> data);

} // namespace gvcot
