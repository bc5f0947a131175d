#include <algorithm>
#include <map>
#include <sstream>

#include "atlas/atomic.hpp"
#include "json.hpp"

namespace atlas::atomic {

namespace {

std::string cell_symbol(const Cell& cell, const SymbolLookup& symbol) {
  if (!symbol) return {};
  std::string s = symbol(cell.z);
  return s == "/" ? std::string{} : s;  // unnamed elements render the bare Z
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string render_text(const TableGrid& grid, const SymbolLookup& symbol) {
  constexpr int kCellWidth = 4;
  int min_row = 0, min_col = 0;
  if (!grid.cells.empty()) {
    min_row = grid.cells.front().row;
    min_col = grid.cells.front().col;
    for (const Cell& c : grid.cells) min_col = std::min(min_col, c.col);
  }

  std::map<int, std::map<int, std::string>> rows;
  for (const Cell& c : grid.cells) {
    std::string text = cell_symbol(c, symbol);
    if (text.empty()) text = std::to_string(c.z);
    rows[c.row][c.col] = text;
  }

  std::ostringstream os;
  int last_row = min_row - 1;
  for (const auto& [row, cols] : rows) {
    for (; last_row + 1 < row; ++last_row) os << '\n';  // blank grid rows
    last_row = row;
    std::string line;
    for (const auto& [col, text] : cols) {
      const std::size_t x = std::size_t(col - min_col) * kCellWidth;
      if (line.size() < x) line.resize(x, ' ');
      std::string padded = text;
      if (padded.size() < kCellWidth - 1)
        padded.insert(0, kCellWidth - 1 - padded.size(), ' ');
      line += padded;
    }
    os << line << '\n';
  }
  return os.str();
}

std::string render_csv(const TableGrid& grid, const SymbolLookup& symbol) {
  std::ostringstream os;
  os << "row,col,Z,symbol,n,l,two_j,two_mj,subblock\n";
  for (const Cell& c : grid.cells) {
    const Address a = z_to_address(c.z);
    os << c.row << ',' << c.col << ',' << c.z << ','
       << csv_field(cell_symbol(c, symbol)) << ',' << c.shell.n << ','
       << c.shell.l << ',' << a.j.twice() << ',' << a.mj.twice() << ','
       << subblock_name(c.tag) << '\n';
  }
  return os.str();
}

std::string render_json(const TableGrid& grid, const SymbolLookup& symbol) {
  // Same fields as the CSV, nested by (n+l, n) block.
  std::map<std::pair<int, int>, std::vector<const Cell*>> blocks;
  for (const Cell& c : grid.cells) blocks[c.shell.block_key()].push_back(&c);

  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [key, cells] : blocks) {
    nlohmann::ordered_json block;
    block["n"] = cells.front()->shell.n;
    block["l"] = cells.front()->shell.l;
    block["shell"] = cells.front()->shell.label();
    block["n_plus_l"] = key.first;
    auto& arr = block["cells"] = nlohmann::ordered_json::array();
    for (const Cell* c : cells) {
      const Address a = z_to_address(c->z);
      arr.push_back({{"row", c->row},
                     {"col", c->col},
                     {"Z", c->z},
                     {"symbol", cell_symbol(*c, symbol)},
                     {"two_j", a.j.twice()},
                     {"two_mj", a.mj.twice()},
                     {"subblock", subblock_name(c->tag)}});
    }
    out.push_back(std::move(block));
  }
  return out.dump(2) + "\n";
}

}  // namespace atlas::atomic
