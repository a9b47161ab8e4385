// Truncated exponential generating functions with exact coefficients.
//
// A series of order N stores a_0..a_N and stands for sum a_n x^n / n!.
// Coefficients are either BigRational (scalar series) or PolyT, a
// polynomial in t with BigRational coefficients. In the EGF normalization
//   product:  c_n = sum_k C(n,k) a_k b_{n-k}
//   exp:      e_{n+1} = sum_{k<=n} C(n,k) s_{k+1} e_{n-k}
// so exp, log and reciprocal of a series with constant term 1 need ring
// operations only. Fractional powers are exp(lambda * log s).

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bstrata {

using BigInt = mpz_class;
using BigRational = mpq_class;

class PolyT {
 public:
  PolyT() = default;
  PolyT(long constant);  // NOLINT(google-explicit-constructor)
  PolyT(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  explicit PolyT(std::vector<BigRational> coefficients);

  /// t itself.
  static PolyT t();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of t^d (zero beyond the degree).
  BigRational coefficient(int d) const;
  const std::vector<BigRational>& coefficients() const { return c_; }

  BigRational evaluate(const BigRational& t) const;

  /// All coefficients are integers.
  bool is_integral() const;
  /// Decimal strings of the coefficients, constant term first. Requires
  /// integral coefficients.
  std::vector<std::string> integer_strings() const;

  PolyT& operator+=(const PolyT& rhs);
  PolyT& operator-=(const PolyT& rhs);
  PolyT& operator*=(const PolyT& rhs);

  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator*(const PolyT& a, const PolyT& b);
  friend PolyT operator-(PolyT a);
  friend bool operator==(const PolyT&, const PolyT&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

template <class Coeff>
class EgfSeries {
 public:
  explicit EgfSeries(int order) : a_(checked_size(order)) {}
  EgfSeries(int order, std::vector<Coeff> coefficients)
      : a_(std::move(coefficients)) {
    if (a_.size() != checked_size(order)) {
      throw std::invalid_argument("series needs exactly order+1 coefficients");
    }
  }

  int order() const { return static_cast<int>(a_.size()) - 1; }
  const Coeff& operator[](int n) const { return a_.at(n); }
  Coeff& operator[](int n) { return a_.at(n); }
  const std::vector<Coeff>& coefficients() const { return a_; }

  friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    return static_cast<std::size_t>(order) + 1;
  }
  std::vector<Coeff> a_;
};

using TSeries = EgfSeries<PolyT>;
using QSeries = EgfSeries<BigRational>;

BigInt binomial(int n, int k);
BigInt factorial(int n);

// Series over either coefficient ring. Binary operations require equal
// orders.
template <class C> EgfSeries<C> series_add(const EgfSeries<C>& a, const EgfSeries<C>& b);
template <class C> EgfSeries<C> series_sub(const EgfSeries<C>& a, const EgfSeries<C>& b);
template <class C> EgfSeries<C> series_scale(const EgfSeries<C>& a, const C& factor);
template <class C> EgfSeries<C> series_mul(const EgfSeries<C>& a, const EgfSeries<C>& b);
/// Requires a zero constant term.
template <class C> EgfSeries<C> series_exp(const EgfSeries<C>& s);
/// Requires constant term 1.
template <class C> EgfSeries<C> series_log(const EgfSeries<C>& f);
/// 1/f; requires constant term 1.
template <class C> EgfSeries<C> series_reciprocal(const EgfSeries<C>& f);
/// f^lambda = exp(lambda log f); requires constant term 1.
template <class C> EgfSeries<C> series_pow(const EgfSeries<C>& f, const C& lambda);

/// f^((t+1)/2 * scale): the exponent is linear in t.
TSeries series_pow_half_linear(const TSeries& f, const BigRational& scale = 1);

/// Substitute a value for t.
QSeries specialize(const TSeries& s, const BigRational& t);
TSeries lift(const QSeries& s);

// Elementary series to a given order.
QSeries series_x(int order);
QSeries series_exp_x(int order);
/// 2 - e^x
QSeries series_two_minus_exp(int order);

/// S(n, j) by the recurrence S(n,j) = j S(n-1,j) + S(n-1,j-1).
BigInt stirling(int n, int j);
/// S(n, j) = (1/j!) sum_i (-1)^(j-i) C(j,i) i^n.
BigInt stirling_alternating_sum(int n, int j);
/// Ordered set partitions: sum_j S(n,j) j!.
BigInt fubini(int n);

/// Component weight series, closed form ((t+1)/2) (x - log(2 - e^x)).
TSeries d_series(int order);
/// The same series from the double sum over j with parity-split weights
/// (j-1)! S(n,j) t or (j-1)! S(n,j), plus x for the all-black 1x1 diagram.
TSeries d_series_direct(int order);

/// exp(D).
TSeries h_series(int order);
/// (e^x / (2 - e^x))^((t+1)/2) via reciprocal, product and log.
TSeries h_series_closed(int order);

/// Coefficient polynomials p_0..p_N of H(x,t).
class StrataPolynomials {
 public:
  explicit StrataPolynomials(int order);
  int order() const { return series_.order(); }
  /// p_n(t); throws std::out_of_range beyond the order.
  const PolyT& polynomial(int n) const;

 private:
  TSeries series_;
};

/// Totals p_n(1) and primitive counts p_n(0) from H specialized at t = 1
/// and t = 0. Cheaper than StrataPolynomials at large orders.
class StrataCounts {
 public:
  explicit StrataCounts(int order);
  int order() const { return totals_.order(); }
  BigInt totals(int n) const;
  BigInt primitive_count(int n) const;
  BigRational primitive_ratio(int n) const;

 private:
  void check(int n) const;
  QSeries totals_;
  QSeries primitive_;
};

/// Decimal rendering rounded half away from zero to a number of places.
std::string to_decimal(const BigRational& q, int places);

}  // namespace bstrata
