#include "multipole/tables.hpp"

#include <fstream>
#include <sstream>

#include "multipole/bounds.hpp"
#include "multipole/search.hpp"

namespace multipole::tables {

namespace {

Grid search_table(int k, int max_g, int step, int columns, int workers) {
  Grid out;
  out.header.push_back("g");
  for (int c = 0; c < columns; ++c) out.header.push_back("s=" + std::to_string(c * step));
  for (int g = 3; g <= max_g; ++g) {
    std::vector<std::string> row{std::to_string(g)};
    for (int c = 0; c < columns; ++c) {
      const int s = c * step;
      if (s > (k - 2) * g) {
        row.emplace_back();
        continue;
      }
      search::SearchParams p;
      p.k = k;
      p.g = g;
      p.s = s;
      p.workers = workers;
      const auto r = search::find_min_nontrivial(p);
      row.push_back(r.n_value ? std::to_string(*r.n_value) : "?");
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

Grid bound_table(bool upper) {
  Grid out;
  out.header.push_back("g");
  for (int k = 3; k <= 9; ++k) out.header.push_back("k=" + std::to_string(k));
  for (int g = 3; g <= 16; ++g) {
    std::vector<std::string> row{std::to_string(g)};
    for (int k = 3; k <= 9; ++k) {
      const auto qb = bounds::quadratic(k, g, (k - 2) * g);
      row.push_back(bounds::table_cell(upper ? qb.b2() : qb.b1(), !qb.has_real_roots));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? sep : "") + cells[i];
  return out;
}

}  // namespace

Grid table1(int max_g, int workers) { return search_table(3, max_g, 1, 9, workers); }
Grid table2(int max_g, int workers) { return search_table(4, max_g, 2, 9, workers); }
Grid table3() { return bound_table(false); }
Grid table4() { return bound_table(true); }

std::string to_csv(const Grid& g) {
  std::string out = join(g.header, ",") + "\n";
  for (const auto& row : g.rows) out += join(row, ",") + "\n";
  return out;
}

std::string to_markdown(const Grid& g) {
  std::string out = "| " + join(g.header, " | ") + " |\n|";
  for (std::size_t i = 0; i < g.header.size(); ++i) out += "---|";
  out += "\n";
  for (const auto& row : g.rows) out += "| " + join(row, " | ") + " |\n";
  return out;
}

Grid read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Grid out;
  bool first = true;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    // A trailing empty cell is dropped by getline.
    if (line.back() == ',') cells.emplace_back();
    if (first)
      out.header = std::move(cells);
    else
      out.rows.push_back(std::move(cells));
    first = false;
  }
  for (auto& row : out.rows) row.resize(out.header.size());
  return out;
}

std::vector<CellDiff> diff(const Grid& expected, const Grid& actual) {
  std::vector<CellDiff> out;
  for (const auto& row : actual.rows) {
    const std::vector<std::string>* match = nullptr;
    for (const auto& e : expected.rows)
      if (!e.empty() && e[0] == row[0]) match = &e;
    for (std::size_t c = 1; c < actual.header.size(); ++c) {
      const std::string want = match && c < match->size() ? (*match)[c] : "";
      const std::string got = c < row.size() ? row[c] : "";
      if (want != got) out.push_back({row[0], actual.header[c], want, got});
    }
  }
  return out;
}

}  // namespace multipole::tables
