#include "bstrata/diagram_grid.hpp"

#include <stdexcept>

namespace bstrata {

char color_code(Color c) { return c == Color::black ? 'b' : 'w'; }

CellLocation position_to_cell(int n, int k) {
  const int t = n * (n + 1) / 2;
  if (n < 1 || k < 1 || k > t) {
    throw std::out_of_range("position " + std::to_string(k) + " outside [1, " +
                            std::to_string(t) + "]");
  }
  int r = 1;
  while (r * (r + 1) / 2 < k) ++r;
  const int m = k - r * (r - 1) / 2;
  return {{r, m}, {n + 1 - r, m}, n - r + m};
}

int tableau_position(int row, int col) { return row * (row - 1) / 2 + col; }

StaircaseColoring::StaircaseColoring(int n, Color fill)
    : n_(n), cells_(static_cast<std::size_t>(n * (n + 1) / 2), fill) {
  if (n < 1) throw std::invalid_argument("staircase rank must be positive");
}

bool is_cauchon_lw(const StaircaseColoring& s) {
  const int n = s.rank();
  for (int r = 1; r <= n; ++r) {
    // Cells (r, 1..m-1) all black iff m <= first_white.
    int first_white = r + 1;
    for (int m = 1; m <= r; ++m) {
      if (s.at(r, m) == Color::white) {
        first_white = m;
        break;
      }
    }
    for (int m = 1; m <= r; ++m) {
      if (s.at(r, m) != Color::black || m <= first_white) continue;
      bool white_above = false;
      for (int above = m; above < r && !white_above; ++above) {
        white_above = s.at(above, m) == Color::white;
      }
      if (white_above || m == r) return false;
    }
  }
  return true;
}

StaircaseColoring diagram_to_staircase(const ReducedWord& word,
                                       const Diagram& d) {
  if (word.rank() != d.rank()) {
    throw std::invalid_argument("diagram rank does not match word rank");
  }
  StaircaseColoring s(d.rank());
  for (int k : d.positions()) {
    const TableauCell cell = position_to_cell(d.rank(), k).tableau;
    s.set(cell.row, cell.col, Color::black);
  }
  return s;
}

Diagram staircase_to_diagram(const StaircaseColoring& s) {
  std::vector<int> members;
  for (int r = 1; r <= s.rank(); ++r)
    for (int m = 1; m <= r; ++m)
      if (s.at(r, m) == Color::black) members.push_back(tableau_position(r, m));
  return Diagram::from_positions(s.rank(), members);
}

SymmetricGrid::SymmetricGrid(int n, Color fill)
    : n_(n), cells_(static_cast<std::size_t>(n * n), fill) {
  if (n < 1) throw std::invalid_argument("grid rank must be positive");
}

bool SymmetricGrid::is_mirror_symmetric() const {
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= n_; ++c) {
      const GridCell m = mirror(n_, {r, c});
      if (at(r, c) != at(m.row, m.col)) return false;
    }
  return true;
}

StaircaseColoring SymmetricGrid::staircase() const {
  StaircaseColoring s(n_);
  for (int r = 1; r <= n_; ++r)
    for (int m = 1; m <= r; ++m) s.set(r, m, at(n_ + 1 - r, m));
  return s;
}

std::vector<GridCell> SymmetricGrid::black_cells() const {
  std::vector<GridCell> out;
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= n_; ++c)
      if (at(r, c) == Color::black) out.push_back({r, c});
  return out;
}

std::vector<std::string> SymmetricGrid::ascii_rows() const {
  std::vector<std::string> rows;
  for (int r = n_; r >= 1; --r) {
    std::string line;
    for (int c = 1; c <= n_; ++c) line += at(r, c) == Color::black ? '#' : '.';
    rows.push_back(std::move(line));
  }
  return rows;
}

std::string SymmetricGrid::to_ascii() const {
  std::string out;
  for (const auto& row : ascii_rows()) out += row + '\n';
  return out;
}

SymmetricGrid symmetric_grid(const StaircaseColoring& s) {
  const int n = s.rank();
  SymmetricGrid g(n);
  for (int r = 1; r <= n; ++r)
    for (int m = 1; m <= r; ++m) g.set(n + 1 - r, m, s.at(r, m));
  for (int row = 1; row <= n; ++row)
    for (int col = 1; col <= n; ++col)
      if (row + col > n + 1) {
        const GridCell src = SymmetricGrid::mirror(n, {row, col});
        g.set(row, col, g.at(src.row, src.col));
      }
  return g;
}

}  // namespace bstrata
