#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "trank/parser.hpp"

namespace testsupport {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string corpus_path(const std::string& name) {
  return std::string(TRANK_CORPUS_DIR) + "/" + name;
}

inline trank::Presentation load_corpus(const std::string& name) {
  return trank::parse_presentation(read_file(corpus_path(name)));
}

inline trank::Presentation p1_free() { return load_corpus("p1_free.pres"); }
inline trank::Presentation p2_torus() { return load_corpus("p2_torus.pres"); }
inline trank::Presentation p3_bs12() { return load_corpus("p3_bs12.pres"); }
inline trank::Presentation p4_trefoil() { return load_corpus("p4_trefoil.pres"); }
inline trank::Presentation p5_genus2() { return load_corpus("p5_genus2.pres"); }

}  // namespace testsupport
