#pragma once

#include <string>

#include "ainf/spec_io.hpp"

inline ainf::SpecDocument load_fixture(const std::string& name) {
  return ainf::parse_spec_file(std::string(AINF_FIXTURE_DIR) + "/" + name);
}
