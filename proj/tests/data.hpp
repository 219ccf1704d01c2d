#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hsx/textio.hpp"

inline std::string read_data(const std::string& file) {
  std::ifstream in(std::string(HSX_TEST_DATA) + "/" + file);
  if (!in) throw std::runtime_error("missing test data " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline hsx::CodingSequence load_coding(const std::string& file) { return hsx::parse_coding(read_data(file)); }
