#pragma once

// Fixed table of the worked C5 numbers: category data, ambialgebra units,
// the four vertex examples under both scripts, and the bubble.

#include <string>
#include <vector>

namespace quinn {

struct ReproRow {
  std::string item;
  std::string expected;
  std::string computed;
  bool ok = false;
};

std::vector<ReproRow> reproduce_paper();
/// One line per row plus a summary line; byte-stable.
std::string format_reproduction(const std::vector<ReproRow>& rows);

}  // namespace quinn
