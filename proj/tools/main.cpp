#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const auto r = cauchon::cli::run(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << r.rendered();
  if (!r.error.empty()) std::cerr << r.error << (r.error.back() == '\n' ? "" : "\n");
  return r.code;
}
