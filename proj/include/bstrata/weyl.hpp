// Signed permutations as the Weyl group of type B_n.
//
// An element is stored in window notation w(1), ..., w(n). The value on a
// negative argument is never stored: w(-i) = -w(i).
//
// Simple reflections follow the labelling in which alpha_n is the short
// simple root:
//   alpha_i = e_i - e_{i+1}   (1 <= i < n)
//   alpha_n = e_n
// so s_i (i < n) swaps window positions i and i+1 and s_n negates the last
// window entry. Composition is composition of functions on +-[n]:
// compose(a, b)(i) = a(b(i)).

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bstrata {

/// Largest rank a SignedPermutation can hold.
inline constexpr int kMaxRank = 16;

class SignedPermutation {
 public:
  /// Validates that |w(1)|..|w(n)| is a permutation of [n].
  explicit SignedPermutation(std::span<const int> window);
  SignedPermutation(std::initializer_list<int> window);

  static SignedPermutation identity(int n);

  int rank() const { return n_; }

  /// Value at i for i in +-[n].
  int operator()(int i) const {
    return i > 0 ? window_[i - 1] : -window_[-i - 1];
  }

  std::vector<int> window() const;

  /// In-place right multiplication by s_i. Hot path of the enumerator.
  void right_multiply_simple(int i) {
    if (i < n_) {
      std::swap(window_[i - 1], window_[i]);
    } else {
      window_[n_ - 1] = static_cast<std::int8_t>(-window_[n_ - 1]);
    }
  }

  /// Root-image ascent test; see is_right_ascent().
  bool ascends_at(int i) const {
    if (i == n_) return window_[n_ - 1] > 0;
    // w(e_i - e_{i+1}) = sgn(a) e_|a| - sgn(b) e_|b|; a root of B_n is
    // positive iff its coefficient on the smallest basis index is positive.
    const int a = window_[i - 1];
    const int b = window_[i];
    return (a < 0 ? -a : a) < (b < 0 ? -b : b) ? a > 0 : b < 0;
  }

  /// Comma separated window, e.g. "1,-2".
  std::string to_string() const;
  static SignedPermutation parse(std::string_view text);

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&,
                          const SignedPermutation&) = default;

 private:
  SignedPermutation() = default;

  std::int8_t n_ = 0;
  std::array<std::int8_t, kMaxRank> window_{};

  friend SignedPermutation compose(const SignedPermutation&,
                                   const SignedPermutation&);
  friend SignedPermutation inverse(const SignedPermutation&);
};

/// n x n matrix with P[i][j] = 1 if sigma(i) = j, -1 if sigma(i) = -j.
struct SignedPermMatrix {
  int n = 0;
  std::vector<int> entries;  // row-major, 0-based

  int at(int row, int col) const { return entries[row * n + col]; }
  SignedPermMatrix transpose() const;
  SignedPermMatrix operator*(const SignedPermMatrix& rhs) const;
  friend bool operator==(const SignedPermMatrix&,
                         const SignedPermMatrix&) = default;
};

SignedPermutation identity(int n);
SignedPermutation compose(const SignedPermutation& a,
                          const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& w);
SignedPermutation simple_reflection(int n, int i);

/// The element (-1, -2, ..., -n).
SignedPermutation longest_element(int n);

/// True iff l(w s_i) = l(w) + 1, i.e. w(alpha_i) is a positive root.
bool is_right_ascent(const SignedPermutation& w, int i);

/// Number of positive roots sent to negative roots.
int length(const SignedPermutation& w);

SignedPermMatrix matrix_rep(const SignedPermutation& w);

/// All n^2 reflections of B_n, one per positive root.
std::vector<SignedPermutation> reflections(int n);

/// Lower Bruhat interval [id, w] by downward closure over covers
/// u = v t, l(u) = l(v) - 1. Exponential in n; meant for n <= 4.
std::set<SignedPermutation> bruhat_interval(const SignedPermutation& w);

}  // namespace bstrata
