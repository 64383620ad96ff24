#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "forklab/fork.hpp"

namespace forklab::fixtures {

inline Fork load(const std::string& name) {
  std::ifstream in(std::string(FORKLAB_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return read_fork(in);
}

inline Fork parse(const std::string& text) {
  std::istringstream in(text);
  return read_fork(in);
}

}  // namespace forklab::fixtures
