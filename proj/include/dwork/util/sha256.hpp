#pragma once

#include <string>

namespace dwork {

std::string sha256_hex(const std::string& data);
std::string sha256_file(const std::string& path);

}  // namespace dwork
