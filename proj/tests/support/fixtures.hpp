#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "flex/io.hpp"

namespace fixture {

inline std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string path(const std::string& name) { return std::string(FLEX_FIXTURES) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(FLEX_GOLDEN) + "/" + name; }

inline flex::FlexibleSystem load(const std::string& name) { return flex::parse_system(read(path(name))); }

}  // namespace fixture
