#include "bstrata/reduced_word.hpp"

#include <stdexcept>

namespace bstrata {

namespace {

void check_same_rank(const ReducedWord& word, const Diagram& d) {
  if (word.rank() != d.rank()) {
    throw std::invalid_argument("diagram rank " + std::to_string(d.rank()) +
                                " does not match word rank " +
                                std::to_string(word.rank()));
  }
}

}  // namespace

SignedPermutation ReducedWord::product() const {
  SignedPermutation w = identity(n_);
  for (int i : letters_) w.right_multiply_simple(i);
  return w;
}

ReducedWord build_reduced_word(int n) {
  if (n < 1 || n > kMaxRank) {
    throw std::invalid_argument("rank must lie in [1, " +
                                std::to_string(kMaxRank) + "]");
  }
  ReducedWord word;
  word.n_ = n;
  for (int r = 1; r <= n; ++r)
    for (int i = n - r + 1; i <= n; ++i) word.letters_.push_back(i);
  return word;
}

Diagram::Diagram(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxDiagramRank) {
    throw std::invalid_argument("diagram rank must lie in [1, " +
                                std::to_string(kMaxDiagramRank) + "]");
  }
  const int t = size();
  if (t < 64 && (bits >> t) != 0) {
    throw std::invalid_argument("diagram has members beyond position " +
                                std::to_string(t));
  }
}

Diagram Diagram::from_positions(int n, const std::vector<int>& positions) {
  const int t = n * (n + 1) / 2;
  std::uint64_t bits = 0;
  for (int k : positions) {
    if (k < 1 || k > t) {
      throw std::out_of_range("position " + std::to_string(k) +
                              " outside [1, " + std::to_string(t) + "]");
    }
    bits |= std::uint64_t{1} << (k - 1);
  }
  return Diagram(n, bits);
}

Diagram Diagram::from_hex(int n, std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty() || hex.size() > 16) {
    throw std::invalid_argument("diagram hex must have 1 to 16 digits");
  }
  std::uint64_t bits = 0;
  for (char c : hex) {
    int digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      throw std::invalid_argument("invalid hex digit in '" + std::string(hex) +
                                  "'");
    }
    bits = (bits << 4) | static_cast<std::uint64_t>(digit);
  }
  return Diagram(n, bits);
}

std::vector<int> Diagram::positions() const {
  std::vector<int> out;
  for (int k = 1; k <= size(); ++k)
    if (contains(k)) out.push_back(k);
  return out;
}

std::string Diagram::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (bits_ == 0) return "0";
  std::string out;
  for (std::uint64_t b = bits_; b != 0; b >>= 4) out.insert(out.begin(), kDigits[b & 0xF]);
  return out;
}

CauchonScan scan_cauchon(const ReducedWord& word, const Diagram& d) {
  check_same_rank(word, d);
  CauchonScan scan{std::nullopt, identity(word.rank())};
  const int t = word.length();
  for (int step = 1; step <= t; ++step) {
    const int k = t - step + 1;
    const int i = word.letter(k);
    if (!scan.v.ascends_at(i)) {
      scan.failing_step = step;
      return scan;
    }
    if (d.contains(k)) scan.v.right_multiply_simple(i);
  }
  return scan;
}

bool is_cauchon(const ReducedWord& word, const Diagram& d) {
  return !scan_cauchon(word, d).failing_step.has_value();
}

SignedPermutation w_delta(const ReducedWord& word, const Diagram& d) {
  check_same_rank(word, d);
  SignedPermutation v = identity(word.rank());
  for (int k = word.length(); k >= 1; --k)
    if (d.contains(k)) v.right_multiply_simple(word.letter(k));
  return inverse(v);
}

}  // namespace bstrata
