#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "atlas/halfint.hpp"

namespace atlas::atomic {

/// Highest atomic number the generator is validated for (the table is open
/// ended, but contracts stop at the end of the 9p entry).
inline constexpr int kMaxZ = 218;

/// One-electron shell nl.
struct Shell {
  int n = 0;
  int l = 0;
  int degeneracy() const { return 2 * (2 * l + 1); }
  std::pair<int, int> block_key() const { return {n + l, n}; }
  std::string label() const;  // "4f"
  friend auto operator<=>(const Shell&, const Shell&) = default;
};

/// Spectroscopic letter for an orbital quantum number (s, p, d, f, g, ...).
char shell_letter(int l);

/// One box of the SO(4,2)xSU(2) table.
struct Address {
  int n = 0;
  int l = 0;
  HalfInt j;
  HalfInt mj;
  friend auto operator<=>(const Address&, const Address&) = default;
};

enum class FillingRule { EN, ENL, MADELUNG };

struct ShellOccupancy {
  Shell shell;
  int occupancy = 0;
  friend auto operator<=>(const ShellOccupancy&, const ShellOccupancy&) = default;
};

/// Ground configuration: shells in the generating rule's energy order,
/// occupancies summing to Z.
struct Configuration {
  std::vector<ShellOccupancy> entries;
  int electron_count() const;
  std::string str() const;  // "1s2 2s2 2p6 ..."
};

/// First k shells in Madelung order: n+l ascending, ties by n ascending.
std::vector<Shell> madelung_order(int k);

Configuration ground_configuration(int z, FillingRule rule);

/// Sub-multiplet of an l-block: j = l-1/2 (length 2l) comes first, then
/// j = l+1/2 (length 2l+2); an s-block has a single j = 1/2 multiplet.
enum class SubBlock { First, Second, Only };

std::string subblock_name(SubBlock tag);

Address z_to_address(int z);
int address_to_z(const Address& a);

struct BlockPosition {
  Shell shell;
  SubBlock tag = SubBlock::Only;
  int position = 0;  // 1-based within the sub-multiplet
  int length = 0;    // sub-multiplet length
};

BlockPosition block_of(int z);

/// Atomic numbers of the rare gases closing the seven Madelung periods:
/// [2, 10, 18, 36, 54, 86, 118].
std::vector<int> rare_gas_sequence();

enum class Layout { MadelungSkeleton, So42, Scerri, Conventional18 };

struct Cell {
  int row = 0;
  int col = 0;
  int z = 0;
  Shell shell;
  SubBlock tag = SubBlock::Only;
};

struct TableGrid {
  Layout layout = Layout::MadelungSkeleton;
  int zmax = 0;
  std::vector<Cell> cells;  // sorted by (row, col); coordinates unique
};

TableGrid build_table(Layout layout, int zmax);

struct FamilyReport {
  int z = 0;
  Address address;
  Shell shell;
  SubBlock tag = SubBlock::Only;
  std::string family;                // column family, e.g. "alkali metals"
  std::vector<std::string> series;   // lanthanide, actinide, ...
  bool no_homologue = false;
  std::string note;
};

FamilyReport family_report(int z);

/// Optional Z -> element symbol hook (wired to the dataset registry by the
/// CLI); an empty result renders the bare atomic number.
using SymbolLookup = std::function<std::string(int)>;

std::string render_text(const TableGrid& grid, const SymbolLookup& symbol = {});
std::string render_csv(const TableGrid& grid, const SymbolLookup& symbol = {});
std::string render_json(const TableGrid& grid, const SymbolLookup& symbol = {});

}  // namespace atlas::atomic
