#pragma once

// Exact arithmetic used throughout the library: rationals backed by GMP,
// residues, fixed-length rational exponent vectors, and monomial maps
// (exponent matrices of monomial coordinate changes).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "nashcar/error.hpp"

namespace nashcar {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long n, long d);
  Rat(const mpz_class& n, const mpz_class& d);
  explicit Rat(const mpz_class& n) : v_(n) {}
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws Error(validation) on anything else.
  static Rat parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Largest integer <= value, as a machine integer (throws if it does not fit).
  std::int64_t floor() const;
  std::int64_t ceil() const;

  /// "p" when integral, otherwise "p/q".
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// n - floor(n/r)*r, the representative of n mod r in [0, r).
std::int64_t residue(std::int64_t n, std::int64_t r);
mpz_class residue(const mpz_class& n, const mpz_class& r);

std::int64_t floor_div(std::int64_t n, std::int64_t d);
std::int64_t ceil_div(std::int64_t n, std::int64_t d);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
/// Inverse of a modulo r; requires gcd(a, r) == 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t r);

/// Fixed-length vector of rationals; carrier for valuations and weights.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(std::size_t n) : e_(n) {}
  ExpVec(std::initializer_list<Rat> xs) : e_(xs) {}
  explicit ExpVec(std::vector<Rat> xs) : e_(std::move(xs)) {}

  /// (1/den) * (xs...), the usual way valuations are written.
  static ExpVec scaled(std::int64_t den, std::initializer_list<std::int64_t> xs);
  static ExpVec unit(std::size_t n, std::size_t i, const Rat& value = Rat(1));

  std::size_t size() const { return e_.size(); }
  const Rat& operator[](std::size_t i) const { return e_[i]; }
  Rat& operator[](std::size_t i) { return e_[i]; }
  std::span<const Rat> entries() const { return e_; }

  ExpVec& operator+=(const ExpVec& o);
  ExpVec& operator-=(const ExpVec& o);
  ExpVec& operator*=(const Rat& s);
  friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }
  friend ExpVec operator-(ExpVec a, const ExpVec& b) { return a -= b; }
  friend ExpVec operator*(ExpVec a, const Rat& s) { return a *= s; }
  friend ExpVec operator*(const Rat& s, ExpVec a) { return a *= s; }

  Rat dot(const ExpVec& o) const;

  /// Least common denominator of the entries.
  mpz_class common_denominator() const;

  /// "(a,b,c)" or "1/d·(a,b,c)".
  std::string str() const;

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend auto operator<=>(const ExpVec& a, const ExpVec& b) { return a.e_ <=> b.e_; }

 private:
  std::vector<Rat> e_;
};

std::ostream& operator<<(std::ostream& os, const ExpVec& v);

/// Exponent table of a monomial coordinate change. Rows are upstream
/// coordinates, columns are chart coordinates: upstream_j = prod_c chart_c^{M[j][c]}.
/// A valuation on chart coordinates maps to upstream coordinates by M*v.
class MonomialMap {
 public:
  /// Throws Error(argument) unless the matrix is square and invertible.
  explicit MonomialMap(std::vector<std::vector<Rat>> rows);

  static MonomialMap identity(std::size_t n);

  std::size_t dim() const { return m_.size(); }
  const Rat& at(std::size_t row, std::size_t col) const { return m_[row][col]; }
  const std::vector<std::vector<Rat>>& rows() const { return m_; }

  ExpVec apply(const ExpVec& v) const;
  MonomialMap inverse() const;

  /// (*this) * o : first apply o, then *this.
  friend MonomialMap operator*(const MonomialMap& a, const MonomialMap& b);
  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

 private:
  struct Trusted {};
  MonomialMap(std::vector<std::vector<Rat>> rows, Trusted) : m_(std::move(rows)) {}

  std::vector<std::vector<Rat>> m_;
};

/// Gauss-Jordan inverse over Q; empty result when singular.
std::vector<std::vector<Rat>> invert_matrix(std::vector<std::vector<Rat>> a);

}  // namespace nashcar
