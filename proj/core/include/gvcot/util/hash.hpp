#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace gvcot {

std::string sha256_hex(std::span<const std::uint8_t> data);
std::string sha256_hex(const std::string& data);

} // namespace gvcot
