#pragma once

#include <string>

#include "cauchon/io.hpp"

#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must be defined by the build"
#endif

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline cauchon::RatMatrix rows(std::initializer_list<std::initializer_list<long>> init) {
  std::vector<std::vector<cauchon::Rat>> out;
  for (const auto& r : init) {
    std::vector<cauchon::Rat> row;
    for (long v : r) row.emplace_back(v);
    out.push_back(row);
  }
  return cauchon::RatMatrix::from_rows(out);
}

inline cauchon::MinorFamily family(std::size_t m, std::size_t p, std::initializer_list<const char*> items) {
  cauchon::MinorFamily f(m, p);
  for (const char* s : items) f.insert(cauchon::parse_minor_index(s));
  return f;
}

// The diagram with crosses at (1,2), (2,1), (2,2).
inline cauchon::CauchonDiagram crossed_diagram() {
  return cauchon::CauchonDiagram::from_black(3, 3, {{1, 2}, {2, 1}, {2, 2}});
}

inline cauchon::MinorFamily six_minor_family() {
  return family(3, 3, {"[1,2|2,3]", "[1,3|2,3]", "[2,3|2,3]", "[2,3|1,3]", "[2,3|1,2]", "[1,2,3|1,2,3]"});
}
