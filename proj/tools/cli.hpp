#pragma once

#include <string>
#include <vector>

#include "cauchon/io.hpp"

namespace cauchon::cli {

// 0 affirmative, 1 negative verdict, 2 usage or domain error, 3 guard exceeded.
enum ExitCode { kYes = 0, kNo = 1, kUsage = 2, kResource = 3 };

struct CommandResult {
  int code = kYes;
  Json json;
  std::string text;
  bool as_json = false;
  std::string error;  // for stderr

  // What the process should print on stdout.
  std::string rendered() const;
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace cauchon::cli
