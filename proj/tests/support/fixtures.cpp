#include "fixtures.hpp"

#include <fstream>
#include <stdexcept>

#include "locdiag/parser.hpp"

#ifndef LOCDIAG_FIXTURE_DIR
#error "LOCDIAG_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace testsupport {

std::string fixture_path(const std::string& name) {
  return std::string(LOCDIAG_FIXTURE_DIR) + "/" + name;
}

namespace {

locdiag::SystemFile load(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  return locdiag::parse_system_file(in);
}

}  // namespace

const locdiag::SystemFile& circuit3() {
  static const locdiag::SystemFile file = load("circuit3.sys");
  return file;
}

const locdiag::SystemFile& circuit11() {
  static const locdiag::SystemFile file = load("circuit11.sys");
  return file;
}

locdiag::Formula obs_low_c_low_f() { return locdiag::parse_formula("!C & !F"); }

}  // namespace testsupport
