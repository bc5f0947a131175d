#include "atlas/atomic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace atlas::atomic {

namespace {

constexpr const char* kShellLetters = "spdfghiklmnoqrtuvwxyz";

void check_z(int z) {
  if (z < 1 || z > kMaxZ)
    throw std::out_of_range("atomic number out of range: " + std::to_string(z) +
                            " (supported 1.." + std::to_string(kMaxZ) + ")");
}

}  // namespace

char shell_letter(int l) {
  if (l < 0 || l >= int(sizeof(kShellLetters)) - 1)
    throw std::invalid_argument("no spectroscopic letter for l=" + std::to_string(l));
  return kShellLetters[l];
}

std::string Shell::label() const {
  return std::to_string(n) + shell_letter(l);
}

std::vector<Shell> madelung_order(int k) {
  if (k < 1) throw std::invalid_argument("madelung_order: k must be >= 1");
  std::vector<Shell> out;
  out.reserve(k);
  for (int s = 1; int(out.size()) < k; ++s)      // s = n + l
    for (int n = (s + 2) / 2; n <= s && int(out.size()) < k; ++n)
      out.push_back({n, s - n});
  return out;
}

int Configuration::electron_count() const {
  int total = 0;
  for (const auto& e : entries) total += e.occupancy;
  return total;
}

std::string Configuration::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ' ';
    os << entries[i].shell.label() << entries[i].occupancy;
  }
  return os.str();
}

Configuration ground_configuration(int z, FillingRule rule) {
  check_z(z);
  std::vector<Shell> order;
  if (rule == FillingRule::MADELUNG) {
    order = madelung_order(64);
  } else {
    // E(n) with ties broken by l, and E(n,l), both reduce to (n, l)
    // lexicographic order for filling purposes.
    for (int n = 1; n <= 10; ++n)
      for (int l = 0; l < n; ++l) order.push_back({n, l});
  }

  Configuration config;
  int remaining = z;
  for (const Shell& shell : order) {
    if (remaining == 0) break;
    const int occ = std::min(remaining, shell.degeneracy());
    config.entries.push_back({shell, occ});
    remaining -= occ;
  }
  return config;
}

std::string subblock_name(SubBlock tag) {
  switch (tag) {
    case SubBlock::First: return "first";
    case SubBlock::Second: return "second";
    case SubBlock::Only: return "only";
  }
  throw std::logic_error("unknown sub-block tag");
}

namespace {

/// Blocks in (n+l, n) dictionary order paired with their first atomic number.
std::vector<std::pair<Shell, int>> block_starts() {
  std::vector<std::pair<Shell, int>> out;
  int z = 1;
  for (const Shell& shell : madelung_order(64)) {
    out.emplace_back(shell, z);
    z += shell.degeneracy();
  }
  return out;
}

std::pair<Shell, int> owning_block(int z) {
  check_z(z);
  for (const auto& [shell, start] : block_starts())
    if (z < start + shell.degeneracy()) return {shell, start};
  throw std::logic_error("block enumeration exhausted");
}

}  // namespace

Address z_to_address(int z) {
  const auto [shell, start] = owning_block(z);
  const int idx = z - start;  // 0-based box index within the block
  int two_j = 0, sub_idx = idx;
  if (shell.l == 0) {
    two_j = 1;
  } else if (idx < 2 * shell.l) {
    two_j = 2 * shell.l - 1;
  } else {
    two_j = 2 * shell.l + 1;
    sub_idx = idx - 2 * shell.l;
  }
  return {shell.n, shell.l, HalfInt::from_twice(two_j),
          HalfInt::from_twice(-two_j + 2 * sub_idx)};
}

int address_to_z(const Address& a) {
  if (a.n < 1 || a.l < 0 || a.l > a.n - 1)
    throw std::invalid_argument("invalid shell labels n=" + std::to_string(a.n) +
                                " l=" + std::to_string(a.l));
  const int two_j = a.j.twice();
  if (two_j != 2 * a.l - 1 && two_j != 2 * a.l + 1)
    throw std::invalid_argument("j must be l - 1/2 or l + 1/2, got j=" + a.j.str());
  if (two_j < 1)
    throw std::invalid_argument("j must be >= 1/2, got j=" + a.j.str());
  const int two_mj = a.mj.twice();
  if (two_mj < -two_j || two_mj > two_j || (two_mj - two_j) % 2 != 0)
    throw std::invalid_argument("mj out of range for j=" + a.j.str() +
                                ": mj=" + a.mj.str());

  const Shell shell{a.n, a.l};
  int start = 0;
  for (const auto& [blk, blk_start] : block_starts())
    if (blk == shell) {
      start = blk_start;
      break;
    }
  if (start == 0) throw std::invalid_argument("shell beyond the generated table");

  int offset = (a.l > 0 && two_j == 2 * a.l + 1) ? 2 * a.l : 0;
  offset += (two_mj + two_j) / 2;
  const int z = start + offset;
  check_z(z);
  return z;
}

BlockPosition block_of(int z) {
  const auto [shell, start] = owning_block(z);
  const int idx = z - start;
  if (shell.l == 0) return {shell, SubBlock::Only, idx + 1, 2};
  if (idx < 2 * shell.l)
    return {shell, SubBlock::First, idx + 1, 2 * shell.l};
  return {shell, SubBlock::Second, idx - 2 * shell.l + 1, 2 * (shell.l + 1)};
}

std::vector<int> rare_gas_sequence() {
  std::vector<int> out;
  int z = 0;
  for (const Shell& shell : madelung_order(64)) {
    z += shell.degeneracy();
    // periods close after 1s and after each np shell
    if ((shell.n == 1 && shell.l == 0) || shell.l == 1) out.push_back(z);
    if (out.size() == 7) break;
  }
  return out;
}

namespace {

int max_l_used(int zmax) {
  int lmax = 0;
  for (const auto& [shell, start] : block_starts()) {
    if (start > zmax) break;
    lmax = std::max(lmax, shell.l);
  }
  return lmax;
}

/// Madelung period of a shell (the parenthesized groups: ns ... np).
int period_of(const Shell& shell) {
  return shell.n + std::max(0, shell.l - 1);
}

TableGrid build_blocks_grid(Layout layout, int zmax) {
  // Shared geometry for the skeleton and the SO(4,2)xSU(2) table: row n,
  // l-columns side by side, 2(2l+1) boxes each, so column offset is 2l^2.
  // Scerri's form mirrors the columns and drops each l-block by l rows.
  const int width = 2 * (max_l_used(zmax) + 1) * (max_l_used(zmax) + 1);
  TableGrid grid{layout, zmax, {}};
  for (const auto& [shell, start] : block_starts()) {
    if (start > zmax) break;
    for (int idx = 0; idx < shell.degeneracy() && start + idx <= zmax; ++idx) {
      const int z = start + idx;
      int row = shell.n;
      int col = 2 * shell.l * shell.l + idx;
      if (layout == Layout::Scerri) {
        row = shell.n + shell.l;
        col = width - 1 - col;
      }
      grid.cells.push_back({row, col, z, shell, block_of(z).tag});
    }
  }
  return grid;
}

TableGrid build_conventional18(int zmax) {
  TableGrid grid{Layout::Conventional18, zmax, {}};
  int max_period = 0;
  std::vector<std::pair<Shell, int>> appendages;  // l >= 3 blocks in Z order
  for (const auto& [shell, start] : block_starts()) {
    if (start > zmax) break;
    if (shell.l >= 3)
      appendages.emplace_back(shell, start);
    else
      max_period = std::max(max_period, period_of(shell));
  }

  int appendage_row = max_period;
  for (const auto& [shell, start] : block_starts()) {
    if (start > zmax) break;
    int row = period_of(shell), col0 = 0;
    switch (shell.l) {
      case 0: col0 = 1; break;
      case 1: col0 = 13; break;
      case 2: col0 = 3; break;
      default:  // lanthanide/actinide-style appendage rows below the grid
        row = ++appendage_row;
        col0 = 3;
        break;
    }
    for (int idx = 0; idx < shell.degeneracy() && start + idx <= zmax; ++idx) {
      const int z = start + idx;
      // conventional form keeps helium with the noble gases
      const int col = (z == 2) ? 18 : col0 + idx;
      grid.cells.push_back({row, col, z, shell, block_of(z).tag});
    }
  }
  return grid;
}

}  // namespace

TableGrid build_table(Layout layout, int zmax) {
  if (zmax < 1 || zmax > kMaxZ)
    throw std::out_of_range("zmax out of range: " + std::to_string(zmax));
  TableGrid grid = (layout == Layout::Conventional18)
                       ? build_conventional18(zmax)
                       : build_blocks_grid(layout, zmax);
  std::sort(grid.cells.begin(), grid.cells.end(),
            [](const Cell& a, const Cell& b) {
              return std::pair(a.row, a.col) < std::pair(b.row, b.col);
            });
  return grid;
}

FamilyReport family_report(int z) {
  const Address addr = z_to_address(z);
  const BlockPosition pos = block_of(z);

  FamilyReport report;
  report.z = z;
  report.address = addr;
  report.shell = pos.shell;
  report.tag = pos.tag;

  if (addr.l == 0) {
    report.family = addr.mj < HalfInt(0) ? "alkali metals" : "alkaline earth metals";
  } else if (addr.l == 1 && addr.j.twice() == 3 && addr.mj.twice() == 3) {
    report.family = "rare gases";
  } else if (addr.l == 1 && addr.j.twice() == 3 && addr.mj.twice() == 1) {
    report.family = "halogens";
  } else {
    report.family = std::string(1, shell_letter(addr.l)) + "-block column (j=" +
                    addr.j.str() + ", mj=" + addr.mj.str() + ")";
  }

  if (z >= 57 && z <= 70) report.series.push_back("lanthanides");
  if (z >= 89 && z <= 102) report.series.push_back("actinides");
  if (z >= 121 && z <= 138) {
    report.series.push_back("g-family");
    report.no_homologue = true;  // no homologue among the known elements
  }
  if (z >= 139 && z <= 152) report.series.push_back("superactinides");

  if (z == 62)
    report.note = "closes the first f sub-block (6 of 6); the divalent "
                  "samarium ion corresponds to this filled sub-multiplet";
  return report;
}

}  // namespace atlas::atomic
