#pragma once
// Shared access to the bundled fixture corpus for the test binaries.

#include <map>
#include <string>
#include <vector>

#include "kpar/gauss.hpp"

inline std::string data_path(const std::string& f) {
  return std::string(KPAR_DATA_DIR) + "/" + f;
}

inline const std::map<std::string, kpar::GaussDiagram>& corpus() {
  static const std::map<std::string, kpar::GaussDiagram> c =
      kpar::load_corpus(data_path("corpus.tsv"));
  return c;
}

inline const kpar::GaussDiagram& fix(const std::string& name) { return corpus().at(name); }

// The closed-knot fixtures, in table order.
inline const std::vector<std::string>& knot_names() {
  static const std::vector<std::string> names{"2.1",  "3.1",   "3.5",   "4.1",
                                              "4.4",  "4.75",  "4.107", "5.2012"};
  return names;
}
