// Geometric pictures of a diagram.
//
// Staircase tableau: row r = 1..n (row 1 on top, shortest), columns m = 1..r.
// Position k sits in the unique row r with r(r-1)/2 < k <= r(r+1)/2, at
// column m = k - r(r-1)/2, and carries the letter i_k = n - r + m.
//
// Symmetric grid: n x n, rows counted from the bottom, columns from the left.
// Tableau cell (r, m) is grid cell (n+1-r, m), so the staircase occupies
// {(row, col) : row + col <= n+1} and the diagonal cells are (n+1-r, r).
// The remaining cells mirror through mu(row, col) = (n+1-col, n+1-row).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bstrata/reduced_word.hpp"

namespace bstrata {

enum class Color : std::uint8_t { white, black };

/// 'b' / 'w' in dumps.
char color_code(Color c);

struct TableauCell {
  int row = 0;
  int col = 0;
  friend bool operator==(const TableauCell&, const TableauCell&) = default;
};

struct GridCell {
  int row = 0;  // from the bottom
  int col = 0;  // from the left
  friend bool operator==(const GridCell&, const GridCell&) = default;
  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

struct CellLocation {
  TableauCell tableau;
  GridCell grid;
  int letter = 0;
};

CellLocation position_to_cell(int n, int k);

/// Inverse of position_to_cell on tableau coordinates.
int tableau_position(int row, int col);

class StaircaseColoring {
 public:
  explicit StaircaseColoring(int n, Color fill = Color::white);

  int rank() const { return n_; }
  Color at(int row, int col) const { return cells_[tableau_position(row, col) - 1]; }
  void set(int row, int col, Color c) { cells_[tableau_position(row, col) - 1] = c; }

  friend bool operator==(const StaircaseColoring&,
                         const StaircaseColoring&) = default;

 private:
  int n_;
  std::vector<Color> cells_;  // indexed by position - 1
};

/// Lam-Williams conditions on the staircase:
///  (1) a black cell with a white cell above it in its column has only
///      black cells to its left;
///  (2) a black diagonal cell has only black cells to its left.
bool is_cauchon_lw(const StaircaseColoring& s);

StaircaseColoring diagram_to_staircase(const ReducedWord& word,
                                       const Diagram& d);

/// Diagram whose members are the black cells.
Diagram staircase_to_diagram(const StaircaseColoring& s);

class SymmetricGrid {
 public:
  explicit SymmetricGrid(int n, Color fill = Color::white);

  int rank() const { return n_; }
  Color at(int row, int col) const { return cells_[index(row, col)]; }
  void set(int row, int col, Color c) { cells_[index(row, col)] = c; }

  static GridCell mirror(int n, GridCell cell) {
    return {n + 1 - cell.col, n + 1 - cell.row};
  }
  bool is_mirror_symmetric() const;

  /// Restriction to the staircase region.
  StaircaseColoring staircase() const;
  std::vector<GridCell> black_cells() const;

  /// One string per grid row, top row first; '#' black, '.' white.
  std::vector<std::string> ascii_rows() const;
  std::string to_ascii() const;

  friend bool operator==(const SymmetricGrid&, const SymmetricGrid&) = default;

 private:
  int index(int row, int col) const { return (row - 1) * n_ + (col - 1); }
  int n_;
  std::vector<Color> cells_;
};

SymmetricGrid symmetric_grid(const StaircaseColoring& s);

}  // namespace bstrata
