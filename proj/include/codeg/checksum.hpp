#pragma once

#include <map>
#include <string>
#include <string_view>

namespace codeg {

std::string sha256_hex(std::string_view data);

// reads a sha256sum-style manifest: "<hex>  <relative path>" per line
std::map<std::string, std::string> read_manifest(std::string const& path);

std::string read_file(std::string const& path);

}  // namespace codeg
