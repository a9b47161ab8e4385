// The staircase reduced word of the maximal minimal coset representative
// w = s_n (s_{n-1} s_n) ... (s_1 s_2 ... s_n), diagrams on its positions,
// and the Cauchon condition.
//
// Positions are 1-based, k = 1..t with t = n(n+1)/2. A diagram is a bitmask
// with bit k-1 set iff position k is a member.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bstrata/weyl.hpp"

namespace bstrata {

/// Largest rank for which a diagram fits into a 64-bit mask (t = 55).
inline constexpr int kMaxDiagramRank = 10;

class ReducedWord {
 public:
  int rank() const { return n_; }
  int length() const { return static_cast<int>(letters_.size()); }

  /// Simple reflection index at position k (1-based).
  int letter(int k) const { return letters_[k - 1]; }
  const std::vector<int>& letters() const { return letters_; }

  /// s_{i_1} ... s_{i_t}, i.e. w_max^J.
  SignedPermutation product() const;

 private:
  friend ReducedWord build_reduced_word(int n);
  int n_ = 0;
  std::vector<int> letters_;
};

/// Row r of the staircase tableau (r = 1..n) contributes s_{n-r+1}, ..., s_n.
ReducedWord build_reduced_word(int n);

class Diagram {
 public:
  Diagram(int n, std::uint64_t bits);

  /// Diagram from a list of 1-based member positions.
  static Diagram from_positions(int n, const std::vector<int>& positions);
  /// Lowercase little-endian hex of the mask, e.g. {2,3} -> "6".
  static Diagram from_hex(int n, std::string_view hex);

  int rank() const { return n_; }
  int size() const { return n_ * (n_ + 1) / 2; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int k) const { return (bits_ >> (k - 1)) & 1U; }
  std::vector<int> positions() const;
  std::string to_hex() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  int n_;
  std::uint64_t bits_;
};

/// Outcome of scanning a diagram from position t down to 1.
struct CauchonScan {
  /// First step l (1-based, position t-l+1) at which the ascent test fails.
  std::optional<int> failing_step;
  /// v^Delta accumulated over the steps that were processed.
  SignedPermutation v;
};

CauchonScan scan_cauchon(const ReducedWord& word, const Diagram& d);

bool is_cauchon(const ReducedWord& word, const Diagram& d);

/// w^Delta = s^Delta_{i_1} ... s^Delta_{i_t}, obtained as the inverse of the
/// right-to-left product v^Delta.
SignedPermutation w_delta(const ReducedWord& word, const Diagram& d);

}  // namespace bstrata
