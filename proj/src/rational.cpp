#include "nashcar/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>
#include <utility>

namespace nashcar {

namespace {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) fail(ErrorKind::internal, "integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat::Rat(long n, long d) {
  require(d != 0, ErrorKind::argument, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  require(d != 0, ErrorKind::argument, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const auto bad = [&] {
    fail(ErrorKind::validation, "not an exact rational: \"" + std::string(text) + "\"");
  };
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) bad();
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) bad();
  if (negative) n = -n;
  return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
  require(!o.is_zero(), ErrorKind::argument, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::int64_t Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_int64(q);
}

std::int64_t Rat::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return to_int64(q);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::int64_t residue(std::int64_t n, std::int64_t r) {
  require(r >= 1, ErrorKind::argument, "residue modulus must be positive");
  return n - floor_div(n, r) * r;
}

mpz_class residue(const mpz_class& n, const mpz_class& r) {
  require(r >= 1, ErrorKind::argument, "residue modulus must be positive");
  mpz_class out;
  mpz_fdiv_r(out.get_mpz_t(), n.get_mpz_t(), r.get_mpz_t());
  return out;
}

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  require(d != 0, ErrorKind::argument, "division by zero");
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t n, std::int64_t d) { return -floor_div(-n, d); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod_inverse(std::int64_t a, std::int64_t r) {
  require(r >= 1, ErrorKind::argument, "modulus must be positive");
  if (r == 1) return 0;
  std::int64_t old_r = residue(a, r), cur_r = r, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const std::int64_t q = old_r / cur_r;
    std::tie(old_r, cur_r) = std::pair{cur_r, old_r - q * cur_r};
    std::tie(old_s, cur_s) = std::pair{cur_s, old_s - q * cur_s};
  }
  require(old_r == 1, ErrorKind::argument,
          std::to_string(a) + " is not invertible modulo " + std::to_string(r));
  return residue(old_s, r);
}

// ---------------------------------------------------------------------------

ExpVec ExpVec::scaled(std::int64_t den, std::initializer_list<std::int64_t> xs) {
  ExpVec v(xs.size());
  std::size_t i = 0;
  for (auto x : xs) v[i++] = Rat(x, den);
  return v;
}

ExpVec ExpVec::unit(std::size_t n, std::size_t i, const Rat& value) {
  ExpVec v(n);
  v[i] = value;
  return v;
}

ExpVec& ExpVec::operator+=(const ExpVec& o) {
  require(size() == o.size(), ErrorKind::argument, "exponent vector length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ExpVec& ExpVec::operator-=(const ExpVec& o) {
  require(size() == o.size(), ErrorKind::argument, "exponent vector length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

ExpVec& ExpVec::operator*=(const Rat& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

Rat ExpVec::dot(const ExpVec& o) const {
  require(size() == o.size(), ErrorKind::argument, "exponent vector length mismatch");
  Rat acc;
  for (std::size_t i = 0; i < e_.size(); ++i) acc += e_[i] * o.e_[i];
  return acc;
}

mpz_class ExpVec::common_denominator() const {
  mpz_class d = 1;
  for (const auto& x : e_) d = lcm(d, x.den());
  return d;
}

std::string ExpVec::str() const {
  const mpz_class d = common_denominator();
  std::ostringstream os;
  if (d != 1) os << "1/" << d.get_str() << "·";
  os << '(';
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ',';
    os << (e_[i] * Rat(d)).str();
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExpVec& v) { return os << v.str(); }

// ---------------------------------------------------------------------------

std::vector<std::vector<Rat>> invert_matrix(std::vector<std::vector<Rat>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return {};
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rat f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

MonomialMap::MonomialMap(std::vector<std::vector<Rat>> rows) : m_(std::move(rows)) {
  for (const auto& row : m_)
    require(row.size() == m_.size(), ErrorKind::argument, "monomial map must be square");
  require(!m_.empty() && !invert_matrix(m_).empty(), ErrorKind::argument,
          "monomial map is not invertible");
}

MonomialMap MonomialMap::identity(std::size_t n) {
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = Rat(1);
  return MonomialMap(std::move(rows), Trusted{});
}

ExpVec MonomialMap::apply(const ExpVec& v) const {
  require(v.size() == dim(), ErrorKind::argument, "dimension mismatch in monomial map");
  ExpVec out(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Rat acc;
    for (std::size_t c = 0; c < dim(); ++c)
      if (!m_[j][c].is_zero() && !v[c].is_zero()) acc += m_[j][c] * v[c];
    out[j] = acc;
  }
  return out;
}

MonomialMap MonomialMap::inverse() const { return MonomialMap(invert_matrix(m_), Trusted{}); }

MonomialMap operator*(const MonomialMap& a, const MonomialMap& b) {
  require(a.dim() == b.dim(), ErrorKind::argument, "dimension mismatch in monomial map product");
  const std::size_t n = a.dim();
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.m_[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b.m_[k][j].is_zero()) out[i][j] += a.m_[i][k] * b.m_[k][j];
    }
  return MonomialMap(std::move(out), MonomialMap::Trusted{});
}

}  // namespace nashcar
