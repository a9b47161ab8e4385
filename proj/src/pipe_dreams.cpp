#include "bstrata/pipe_dreams.hpp"

#include <algorithm>
#include <stdexcept>

#include "bstrata/exact_rank.hpp"

namespace bstrata {

namespace {

void require_cauchon(const ReducedWord& word, const Diagram& d) {
  if (!is_cauchon(word, d)) {
    throw std::invalid_argument("diagram " + d.to_hex() + " is not Cauchon");
  }
}

std::vector<int> cycle_from(const SignedPermutation& p, int start) {
  std::vector<int> cycle{start};
  for (int x = p(start); x != start; x = p(x)) cycle.push_back(x);
  return cycle;
}

std::vector<int> negated(std::vector<int> xs) {
  for (int& x : xs) x = -x;
  return xs;
}

}  // namespace

int trace_pipe(const SymmetricGrid& g, int start) {
  const int n = g.rank();
  if (start == 0 || start > n || start < -n) {
    throw std::out_of_range("pipe label outside +-[n]");
  }
  int row, col;
  bool moving_up;
  if (start > 0) {
    row = start;
    col = n;
    moving_up = false;
  } else {
    row = 1;
    col = n + 1 + start;
    moving_up = true;
  }
  while (row <= n && col >= 1) {
    // Elbows turn the pipe; crossings keep its direction.
    if (g.at(row, col) == Color::white) moving_up = !moving_up;
    if (moving_up) {
      ++row;
    } else {
      --col;
    }
  }
  return col < 1 ? row : -(n + 1 - col);
}

SignedPermutation tau(const SymmetricGrid& g) {
  if (!g.is_mirror_symmetric()) {
    throw std::invalid_argument("pipe dream requires a mirror-symmetric grid");
  }
  std::vector<int> window;
  for (int i = 1; i <= g.rank(); ++i) window.push_back(trace_pipe(g, i));
  return SignedPermutation(window);
}

SignedPermutation tau_of_diagram(const ReducedWord& word, const Diagram& d) {
  return tau(symmetric_grid(diagram_to_staircase(word, d)));
}

bool verify_lemma_tau(const ReducedWord& word, const Diagram& d) {
  require_cauchon(word, d);
  return tau_of_diagram(word, d) ==
         compose(w_delta(word, d), inverse(word.product()));
}

char cycle_kind_code(CycleKind k) {
  switch (k) {
    case CycleKind::A: return 'a';
    case CycleKind::B: return 'b';
    case CycleKind::C: return 'c';
  }
  return '?';
}

CycleClassification classify_cycles(const SignedPermutation& p) {
  const int n = p.rank();
  std::vector<bool> seen(static_cast<std::size_t>(2 * n + 1));
  auto mark = [&](int x) { seen[x + n] = true; };

  CycleClassification out;
  // Visiting 1, -1, 2, -2, ... makes the first unseen element of each cycle
  // its canonical start: least absolute value, positive first.
  for (int a = 1; a <= n; ++a) {
    for (int x : {a, -a}) {
      if (seen[x + n]) continue;
      GroupedCycle g;
      const std::vector<int> cycle = cycle_from(p, x);
      const bool self_negated =
          std::find(cycle.begin(), cycle.end(), -x) != cycle.end();
      if (cycle.size() == 1) {
        g.kind = CycleKind::A;
        g.cycles = {{x}, {-x}};
        g.size = 1;
      } else if (self_negated) {
        g.kind = CycleKind::C;
        g.cycles = {cycle};
        g.size = static_cast<int>(cycle.size()) / 2;
        g.contributes = !g.even();
      } else {
        g.kind = CycleKind::B;
        g.cycles = {cycle, negated(cycle)};
        g.size = static_cast<int>(cycle.size());
        g.contributes = g.even();
      }
      for (const auto& c : g.cycles) {
        for (int y : c) {
          mark(y);
          g.support.push_back(y);
        }
      }
      std::sort(g.support.begin(), g.support.end());
      if (g.contributes) ++out.dimension;
      out.cycles.push_back(std::move(g));
    }
  }
  return out;
}

std::string cycle_notation(const SignedPermutation& p) {
  std::string out;
  for (const auto& group : classify_cycles(p).cycles) {
    if (group.kind == CycleKind::A) continue;
    for (const auto& cycle : group.cycles) {
      out += '(';
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(cycle[i]);
      }
      out += ')';
    }
  }
  return out.empty() ? "()" : out;
}

int stratum_dimension(const ReducedWord& word, const Diagram& d) {
  require_cauchon(word, d);
  return classify_cycles(tau_of_diagram(word, d)).dimension;
}

int kernel_dimension(const SignedPermutation& p) {
  const SignedPermMatrix m = matrix_rep(p);
  const int n = m.n;
  std::vector<std::vector<std::int64_t>> rows(
      static_cast<std::size_t>(n), std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j) + (i == j ? 1 : 0);
  return n - exact_rank(std::move(rows));
}

}  // namespace bstrata
