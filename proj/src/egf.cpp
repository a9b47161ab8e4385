#include "bstrata/egf.hpp"

#include <algorithm>

namespace bstrata {

// ---------------------------------------------------------------- PolyT

PolyT::PolyT(long constant) : c_{BigRational(constant)} { trim(); }

PolyT::PolyT(const BigRational& constant) : c_{constant} { trim(); }

PolyT::PolyT(std::vector<BigRational> coefficients)
    : c_(std::move(coefficients)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

PolyT PolyT::t() { return PolyT({BigRational(0), BigRational(1)}); }

void PolyT::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational PolyT::coefficient(int d) const {
  return d >= 0 && d <= degree() ? c_[d] : BigRational(0);
}

BigRational PolyT::evaluate(const BigRational& t) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool PolyT::is_integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const BigRational& q) { return q.get_den() == 1; });
}

std::vector<std::string> PolyT::integer_strings() const {
  if (!is_integral()) {
    throw std::domain_error("polynomial has non-integer coefficients: " +
                            to_string());
  }
  std::vector<std::string> out;
  for (const auto& q : c_) out.push_back(q.get_num().get_str());
  if (out.empty()) out.emplace_back("0");
  return out;
}

PolyT& PolyT::operator+=(const PolyT& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

PolyT& PolyT::operator-=(const PolyT& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

PolyT operator*(const PolyT& a, const PolyT& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  PolyT p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

PolyT& PolyT::operator*=(const PolyT& rhs) { return *this = *this * rhs; }

PolyT operator-(PolyT a) {
  for (auto& q : a.c_) q = -q;
  return a;
}

std::string PolyT::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    if (c_[d] == 0) continue;
    if (!out.empty()) out += " + ";
    out += c_[d].get_str();
    if (d >= 1) out += "*t";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

// ------------------------------------------------------------- helpers

namespace {

bool is_zero(const BigRational& q) { return q == 0; }
bool is_zero(const PolyT& p) { return p.is_zero(); }
bool is_one(const BigRational& q) { return q == 1; }
bool is_one(const PolyT& p) { return p == PolyT(1); }

BigRational times(const BigRational& a, const BigRational& b) { return a * b; }
PolyT times(const PolyT& a, const PolyT& b) { return a * b; }

BigRational scaled(const BigRational& a, const BigInt& k) {
  return a * BigRational(k);
}
PolyT scaled(const PolyT& a, const BigInt& k) {
  std::vector<BigRational> c = a.coefficients();
  for (auto& q : c) q *= BigRational(k);
  return PolyT(std::move(c));
}

// Rows 0..n of Pascal's triangle.
std::vector<std::vector<BigInt>> pascal(int n) {
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    rows[i].assign(static_cast<std::size_t>(i) + 1, BigInt(1));
    for (int k = 1; k < i; ++k) rows[i][k] = rows[i - 1][k - 1] + rows[i - 1][k];
  }
  return rows;
}

template <class C>
void check_orders(const EgfSeries<C>& a, const EgfSeries<C>& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series order mismatch: " +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// ----------------------------------------------------- series arithmetic

template <class C>
EgfSeries<C> series_add(const EgfSeries<C>& a, const EgfSeries<C>& b) {
  check_orders(a, b);
  EgfSeries<C> c(a.order());
  for (int n = 0; n <= a.order(); ++n) c[n] = a[n] + b[n];
  return c;
}

template <class C>
EgfSeries<C> series_sub(const EgfSeries<C>& a, const EgfSeries<C>& b) {
  check_orders(a, b);
  EgfSeries<C> c(a.order());
  for (int n = 0; n <= a.order(); ++n) c[n] = a[n] - b[n];
  return c;
}

template <class C>
EgfSeries<C> series_scale(const EgfSeries<C>& a, const C& factor) {
  EgfSeries<C> c(a.order());
  for (int n = 0; n <= a.order(); ++n) c[n] = times(a[n], factor);
  return c;
}

template <class C>
EgfSeries<C> series_mul(const EgfSeries<C>& a, const EgfSeries<C>& b) {
  check_orders(a, b);
  const int order = a.order();
  const auto binom = pascal(order);
  EgfSeries<C> c(order);
  for (int n = 0; n <= order; ++n) {
    C acc{};
    for (int k = 0; k <= n; ++k) {
      if (is_zero(a[k]) || is_zero(b[n - k])) continue;
      acc += scaled(times(a[k], b[n - k]), binom[n][k]);
    }
    c[n] = std::move(acc);
  }
  return c;
}

template <class C>
EgfSeries<C> series_exp(const EgfSeries<C>& s) {
  if (!is_zero(s[0])) {
    throw std::domain_error("series_exp needs a zero constant term");
  }
  const int order = s.order();
  const auto binom = pascal(order);
  EgfSeries<C> e(order);
  e[0] = C(1);
  for (int n = 0; n < order; ++n) {
    C acc{};
    for (int k = 0; k <= n; ++k) {
      if (is_zero(s[k + 1]) || is_zero(e[n - k])) continue;
      acc += scaled(times(s[k + 1], e[n - k]), binom[n][k]);
    }
    e[n + 1] = std::move(acc);
  }
  return e;
}

template <class C>
EgfSeries<C> series_log(const EgfSeries<C>& f) {
  if (!is_one(f[0])) {
    throw std::domain_error("series_log needs constant term 1");
  }
  const int order = f.order();
  const auto binom = pascal(order);
  EgfSeries<C> s(order);
  // f' = s' f, solved for s_{n+1} using f_0 = 1.
  for (int n = 0; n < order; ++n) {
    C acc = f[n + 1];
    for (int k = 0; k < n; ++k) {
      if (is_zero(s[k + 1]) || is_zero(f[n - k])) continue;
      acc -= scaled(times(s[k + 1], f[n - k]), binom[n][k]);
    }
    s[n + 1] = std::move(acc);
  }
  return s;
}

template <class C>
EgfSeries<C> series_reciprocal(const EgfSeries<C>& f) {
  if (!is_one(f[0])) {
    throw std::domain_error("series_reciprocal needs constant term 1");
  }
  const int order = f.order();
  const auto binom = pascal(order);
  EgfSeries<C> g(order);
  g[0] = C(1);
  for (int n = 1; n <= order; ++n) {
    C acc{};
    for (int k = 1; k <= n; ++k) {
      if (is_zero(f[k]) || is_zero(g[n - k])) continue;
      acc -= scaled(times(f[k], g[n - k]), binom[n][k]);
    }
    g[n] = std::move(acc);
  }
  return g;
}

template <class C>
EgfSeries<C> series_pow(const EgfSeries<C>& f, const C& lambda) {
  return series_exp(series_scale(series_log(f), lambda));
}

template EgfSeries<PolyT> series_add(const EgfSeries<PolyT>&, const EgfSeries<PolyT>&);
template EgfSeries<PolyT> series_sub(const EgfSeries<PolyT>&, const EgfSeries<PolyT>&);
template EgfSeries<PolyT> series_scale(const EgfSeries<PolyT>&, const PolyT&);
template EgfSeries<PolyT> series_mul(const EgfSeries<PolyT>&, const EgfSeries<PolyT>&);
template EgfSeries<PolyT> series_exp(const EgfSeries<PolyT>&);
template EgfSeries<PolyT> series_log(const EgfSeries<PolyT>&);
template EgfSeries<PolyT> series_reciprocal(const EgfSeries<PolyT>&);
template EgfSeries<PolyT> series_pow(const EgfSeries<PolyT>&, const PolyT&);

template EgfSeries<BigRational> series_add(const EgfSeries<BigRational>&, const EgfSeries<BigRational>&);
template EgfSeries<BigRational> series_sub(const EgfSeries<BigRational>&, const EgfSeries<BigRational>&);
template EgfSeries<BigRational> series_scale(const EgfSeries<BigRational>&, const BigRational&);
template EgfSeries<BigRational> series_mul(const EgfSeries<BigRational>&, const EgfSeries<BigRational>&);
template EgfSeries<BigRational> series_exp(const EgfSeries<BigRational>&);
template EgfSeries<BigRational> series_log(const EgfSeries<BigRational>&);
template EgfSeries<BigRational> series_reciprocal(const EgfSeries<BigRational>&);
template EgfSeries<BigRational> series_pow(const EgfSeries<BigRational>&, const BigRational&);

TSeries series_pow_half_linear(const TSeries& f, const BigRational& scale) {
  const BigRational half_scale = scale / 2;
  const PolyT lambda({half_scale, half_scale});
  return series_pow(f, lambda);
}

QSeries specialize(const TSeries& s, const BigRational& t) {
  QSeries q(s.order());
  for (int n = 0; n <= s.order(); ++n) q[n] = s[n].evaluate(t);
  return q;
}

TSeries lift(const QSeries& s) {
  TSeries p(s.order());
  for (int n = 0; n <= s.order(); ++n) p[n] = PolyT(s[n]);
  return p;
}

QSeries series_x(int order) {
  QSeries x(order);
  if (order >= 1) x[1] = 1;
  return x;
}

QSeries series_exp_x(int order) {
  return QSeries(order, std::vector<BigRational>(
                            static_cast<std::size_t>(order) + 1, BigRational(1)));
}

QSeries series_two_minus_exp(int order) {
  QSeries s(order, std::vector<BigRational>(static_cast<std::size_t>(order) + 1,
                                            BigRational(-1)));
  s[0] = 1;
  return s;
}

// ------------------------------------------------ Stirling and Fubini

BigInt stirling(int n, int j) {
  if (n < 0 || j < 0 || j > n) {
    throw std::invalid_argument("stirling needs 0 <= j <= n, got (" +
                                std::to_string(n) + ", " + std::to_string(j) +
                                ")");
  }
  std::vector<BigInt> row(static_cast<std::size_t>(j) + 1, BigInt(0));
  row[0] = 1;  // S(0, 0)
  for (int m = 1; m <= n; ++m) {
    for (int i = std::min(m, j); i >= 1; --i) row[i] = i * row[i] + row[i - 1];
    row[0] = 0;
  }
  return row[j];
}

BigInt stirling_alternating_sum(int n, int j) {
  if (n < 0 || j < 0 || j > n) {
    throw std::invalid_argument("stirling needs 0 <= j <= n");
  }
  BigInt sum = 0;
  for (int i = 0; i <= j; ++i) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i),
                  static_cast<unsigned long>(n));
    const BigInt term = binomial(j, i) * power;
    if ((j - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / factorial(j);
}

BigInt fubini(int n) {
  if (n < 0) throw std::invalid_argument("fubini needs n >= 0");
  BigInt total = 0;
  for (int j = 0; j <= n; ++j) total += stirling(n, j) * factorial(j);
  return total;
}

// ------------------------------------------------ D(x,t) and H(x,t)

TSeries d_series(int order) {
  if (order < 1) throw std::invalid_argument("d_series needs order >= 1");
  const QSeries inner =
      series_sub(series_x(order), series_log(series_two_minus_exp(order)));
  const PolyT lambda({BigRational(1, 2), BigRational(1, 2)});
  return series_scale(lift(inner), lambda);
}

TSeries d_series_direct(int order) {
  if (order < 1) throw std::invalid_argument("d_series needs order >= 1");
  TSeries d(order);
  d[1] = PolyT(1);  // stand-alone x: the all-black 1x1 diagram
  for (int n = 1; n <= order; ++n) {
    BigRational tagged = 0;
    BigRational untagged = 0;
    for (int j = 1; j <= n; ++j) {
      const BigRational weight(factorial(j - 1) * stirling(n, j));
      if ((n + j) % 2 == 0) {
        tagged += weight;
      } else {
        untagged += weight;
      }
    }
    d[n] += PolyT({untagged, tagged});
  }
  return d;
}

TSeries h_series(int order) {
  if (order == 0) return TSeries(0, {PolyT(1)});
  return series_exp(d_series(order));
}

TSeries h_series_closed(int order) {
  const QSeries ratio = series_mul(series_exp_x(order),
                                   series_reciprocal(series_two_minus_exp(order)));
  return series_pow_half_linear(lift(ratio));
}

StrataPolynomials::StrataPolynomials(int order) : series_(h_series(order)) {}

const PolyT& StrataPolynomials::polynomial(int n) const {
  if (n < 0 || n > order()) {
    throw std::out_of_range("n = " + std::to_string(n) +
                            " beyond series order " + std::to_string(order()));
  }
  return series_[n];
}

namespace {

QSeries h_specialized(int order, const BigRational& t) {
  if (order == 0) return QSeries(0, {BigRational(1)});
  const QSeries inner =
      series_sub(series_x(order), series_log(series_two_minus_exp(order)));
  return series_exp(series_scale(inner, BigRational((t + 1) / 2)));
}

}  // namespace

StrataCounts::StrataCounts(int order)
    : totals_(h_specialized(order, 1)), primitive_(h_specialized(order, 0)) {}

void StrataCounts::check(int n) const {
  if (n < 0 || n > order()) {
    throw std::out_of_range("n = " + std::to_string(n) +
                            " beyond series order " + std::to_string(order()));
  }
}

BigInt StrataCounts::totals(int n) const {
  check(n);
  return totals_[n].get_num();
}

BigInt StrataCounts::primitive_count(int n) const {
  check(n);
  return primitive_[n].get_num();
}

BigRational StrataCounts::primitive_ratio(int n) const {
  check(n);
  return BigRational(primitive_[n] / totals_[n]);
}

std::string to_decimal(const BigRational& q, int places) {
  if (places < 0) throw std::invalid_argument("to_decimal needs places >= 0");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const BigInt num = abs(q.get_num());
  const BigInt den = q.get_den();
  const BigInt rounded = (2 * num * scale + den) / (2 * den);
  BigInt whole = rounded / scale;
  std::string out = (q < 0 && rounded != 0 ? "-" : "") + whole.get_str();
  if (places > 0) {
    std::string frac = BigInt(rounded % scale).get_str();
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

}  // namespace bstrata
