// Pipe dreams on a symmetric grid and the stratum dimension.
//
// Rows are labelled 1..n from the bottom; columns are labelled -n..-1 from
// the left (column c carries -(n+1-c)). Pipe i enters row i from the right
// edge; pipe -j enters the column labelled -j from the bottom edge.
//
// Local routing:
//   white cell  bottom -> left,  right -> top   (pair of elbows)
//   black cell  bottom -> top,   right -> left  (crossing)
//
// A pipe leaving through the left edge of row i ends at i; leaving through
// the top of the column labelled v it ends at v. tau(start) = end.

#pragma once

#include <string>
#include <vector>

#include "bstrata/diagram_grid.hpp"
#include "bstrata/reduced_word.hpp"
#include "bstrata/weyl.hpp"

namespace bstrata {

/// Follows one pipe; start is a label in +-[n].
int trace_pipe(const SymmetricGrid& g, int start);

/// Endpoint map of the pipe dream. Throws on a grid that is not mirror
/// symmetric.
SignedPermutation tau(const SymmetricGrid& g);

/// tau of the symmetric grid built from a diagram.
SignedPermutation tau_of_diagram(const ReducedWord& word, const Diagram& d);

/// tau(Delta) == w^Delta w^{-1}. Throws on a non-Cauchon diagram.
bool verify_lemma_tau(const ReducedWord& word, const Diagram& d);

enum class CycleKind { A, B, C };

char cycle_kind_code(CycleKind k);

struct GroupedCycle {
  CycleKind kind = CycleKind::A;
  /// Canonical cycles: one for C, the pair for A and B (canonical one first).
  std::vector<std::vector<int>> cycles;
  /// Sorted support in +-[n].
  std::vector<int> support;
  /// 1 for A, cycle length for B, half the cycle length for C.
  int size = 0;
  bool even() const { return size % 2 == 0; }
  bool contributes = false;
};

struct CycleClassification {
  std::vector<GroupedCycle> cycles;
  int dimension = 0;
};

/// Groups the cycles of tau into fixed pairs (A), mirrored pairs with
/// negation-free support (B) and self-negated cycles (C). Dimension counts
/// even B groups plus odd C cycles.
CycleClassification classify_cycles(const SignedPermutation& tau);

/// Disjoint cycle text omitting fixed points, e.g. "(1 -4)(-1 4)(2 3 -2 -3)".
/// The identity is written "()".
std::string cycle_notation(const SignedPermutation& p);

/// Dimension of the stratum of a Cauchon diagram from the cycle formula.
int stratum_dimension(const ReducedWord& word, const Diagram& d);

/// dim ker(I + P_tau) over the rationals, by exact elimination.
int kernel_dimension(const SignedPermutation& tau);

}  // namespace bstrata
