#pragma once

#include <string>
#include <vector>

namespace multipole::tables {

// A table in the layout of the golden CSV files: the first column labels the row.
struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const Grid&) const = default;
};

// n(3,g,s) for 3 <= g <= max_g, columns s = 0..8.
Grid table1(int max_g, int workers = 1);
// n(4,g,s) for 3 <= g <= max_g, columns s = 0, 2, ..., 16.
Grid table2(int max_g, int workers = 1);
// b1 and b2 of P_{k,g,(k-2)g} for 3 <= g <= 16, 3 <= k <= 9.
Grid table3();
Grid table4();

std::string to_csv(const Grid& g);
std::string to_markdown(const Grid& g);
Grid read_csv(const std::string& path);

struct CellDiff {
  std::string row, column, expected, actual;
};
// Cells of `actual` that differ from `expected`, restricted to the rows of `actual`.
std::vector<CellDiff> diff(const Grid& expected, const Grid& actual);

}  // namespace multipole::tables
