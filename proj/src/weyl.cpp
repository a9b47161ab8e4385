#include "bstrata/weyl.hpp"

#include <charconv>
#include <deque>
#include <stdexcept>

namespace bstrata {

namespace {

int sign(int v) { return v > 0 ? 1 : -1; }
int absolute(int v) { return v > 0 ? v : -v; }

// Sign test for w(ca e_a + cb e_b), a != b, ca, cb in {-1, 1}. The image is
// sgn(w(a)) ca e_|w(a)| + sgn(w(b)) cb e_|w(b)|; roots of B_n are positive
// iff the coefficient on the smallest index is positive.
bool image_positive(const SignedPermutation& w, int ca, int a, int cb, int b) {
  const int wa = w(a);
  const int wb = w(b);
  return absolute(wa) < absolute(wb) ? sign(wa) * ca > 0 : sign(wb) * cb > 0;
}

void check_rank(int n) {
  if (n < 1 || n > kMaxRank) {
    throw std::invalid_argument("rank must lie in [1, " +
                                std::to_string(kMaxRank) + "], got " +
                                std::to_string(n));
  }
}

}  // namespace

SignedPermutation::SignedPermutation(std::span<const int> window) {
  const int n = static_cast<int>(window.size());
  check_rank(n);
  std::array<bool, kMaxRank + 1> seen{};
  for (int v : window) {
    const int a = absolute(v);
    if (v == 0 || a > n || seen[a]) {
      throw std::invalid_argument(
          "window is not a signed permutation of +-[n]");
    }
    seen[a] = true;
  }
  n_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) window_[i] = static_cast<std::int8_t>(window[i]);
}

SignedPermutation::SignedPermutation(std::initializer_list<int> window)
    : SignedPermutation(std::span<const int>(window.begin(), window.size())) {}

SignedPermutation SignedPermutation::identity(int n) {
  check_rank(n);
  SignedPermutation w;
  w.n_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) w.window_[i] = static_cast<std::int8_t>(i + 1);
  return w;
}

std::vector<int> SignedPermutation::window() const {
  return {window_.begin(), window_.begin() + n_};
}

std::string SignedPermutation::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += std::to_string(window_[i]);
  }
  return out;
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view field = text.substr(pos, comma - pos);
    int value = 0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size() ||
        field.empty()) {
      throw std::invalid_argument("malformed window: '" + std::string(text) +
                                  "'");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  return SignedPermutation(values);
}

SignedPermMatrix SignedPermMatrix::transpose() const {
  SignedPermMatrix t{n, std::vector<int>(entries.size())};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.entries[j * n + i] = at(i, j);
  return t;
}

SignedPermMatrix SignedPermMatrix::operator*(
    const SignedPermMatrix& rhs) const {
  if (rhs.n != n) throw std::invalid_argument("matrix size mismatch");
  SignedPermMatrix p{n, std::vector<int>(entries.size())};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (const int a = at(i, k))
        for (int j = 0; j < n; ++j) p.entries[i * n + j] += a * rhs.at(k, j);
  return p;
}

SignedPermutation identity(int n) { return SignedPermutation::identity(n); }

SignedPermutation compose(const SignedPermutation& a,
                          const SignedPermutation& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("compose: rank mismatch");
  }
  SignedPermutation c;
  c.n_ = a.n_;
  for (int i = 1; i <= a.rank(); ++i) {
    c.window_[i - 1] = static_cast<std::int8_t>(a(b(i)));
  }
  return c;
}

SignedPermutation inverse(const SignedPermutation& w) {
  SignedPermutation u;
  u.n_ = w.n_;
  for (int i = 1; i <= w.rank(); ++i) {
    const int v = w(i);
    u.window_[absolute(v) - 1] = static_cast<std::int8_t>(v > 0 ? i : -i);
  }
  return u;
}

SignedPermutation simple_reflection(int n, int i) {
  SignedPermutation s = identity(n);
  if (i < 1 || i > n) {
    throw std::out_of_range("simple reflection index " + std::to_string(i) +
                            " outside [1, " + std::to_string(n) + "]");
  }
  s.right_multiply_simple(i);
  return s;
}

SignedPermutation longest_element(int n) {
  std::vector<int> window(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) window[i] = -(i + 1);
  return SignedPermutation(window);
}

bool is_right_ascent(const SignedPermutation& w, int i) {
  const int n = w.rank();
  if (i < 1 || i > n) {
    throw std::out_of_range("ascent index " + std::to_string(i) +
                            " outside [1, " + std::to_string(n) + "]");
  }
  if (i == n) return w(n) > 0;
  return image_positive(w, 1, i, -1, i + 1);
}

int length(const SignedPermutation& w) {
  const int n = w.rank();
  int inversions = 0;
  for (int a = 1; a <= n; ++a) {
    if (w(a) < 0) ++inversions;  // e_a
    for (int b = a + 1; b <= n; ++b) {
      if (!image_positive(w, 1, a, -1, b)) ++inversions;  // e_a - e_b
      if (!image_positive(w, 1, a, 1, b)) ++inversions;   // e_a + e_b
    }
  }
  return inversions;
}

SignedPermMatrix matrix_rep(const SignedPermutation& w) {
  const int n = w.rank();
  SignedPermMatrix p{n, std::vector<int>(static_cast<std::size_t>(n * n))};
  for (int i = 1; i <= n; ++i) {
    const int v = w(i);
    p.entries[(i - 1) * n + absolute(v) - 1] = v > 0 ? 1 : -1;
  }
  return p;
}

std::vector<SignedPermutation> reflections(int n) {
  std::vector<SignedPermutation> out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (int a = 1; a <= n; ++a) {
    std::vector<int> base(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) base[i] = i + 1;

    auto negate = base;  // e_a
    negate[a - 1] = -a;
    out.emplace_back(negate);
    for (int b = a + 1; b <= n; ++b) {
      auto swap = base;  // e_a - e_b
      swap[a - 1] = b;
      swap[b - 1] = a;
      out.emplace_back(swap);
      auto signed_swap = base;  // e_a + e_b
      signed_swap[a - 1] = -b;
      signed_swap[b - 1] = -a;
      out.emplace_back(signed_swap);
    }
  }
  return out;
}

std::set<SignedPermutation> bruhat_interval(const SignedPermutation& w) {
  const auto refl = reflections(w.rank());
  std::set<SignedPermutation> seen{w};
  std::deque<SignedPermutation> queue{w};
  while (!queue.empty()) {
    const SignedPermutation v = queue.front();
    queue.pop_front();
    const int target = length(v) - 1;
    for (const auto& t : refl) {
      SignedPermutation u = compose(v, t);
      if (length(u) == target && seen.insert(u).second) queue.push_back(u);
    }
  }
  return seen;
}

}  // namespace bstrata
