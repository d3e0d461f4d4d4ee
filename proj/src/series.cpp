#include "nashcar/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace nashcar {

namespace {

Rat binomial(std::int64_t n, std::int64_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(out);
}

Rat power(const Rat& base, std::int64_t e) {
  Rat out(1);
  for (std::int64_t t = 0; t < e; ++t) out *= base;
  return out;
}

// Smallest truncation weight over the stored terms.
std::int64_t truncation_order(const InvariantSeries& f) {
  std::int64_t best = f.truncation().bound + 1;
  for (const auto& [e, c] : f.terms()) best = std::min(best, f.truncation().weight(e.first, e.second));
  return best;
}

}  // namespace

InvariantSeries::InvariantSeries(std::int64_t r, const std::vector<Term>& terms, std::int64_t trunc)
    : r_(r), trunc_{r, trunc} {
  require(r >= 1, ErrorKind::validation, "r must be a positive integer");
  require(trunc >= 1, ErrorKind::validation, "truncation bound must be positive");
  for (const auto& t : terms) {
    require(t.i >= 0 && t.j >= 0, ErrorKind::validation, "negative exponent in series term");
    require(!t.c.is_zero(), ErrorKind::validation, "zero coefficient in series term");
    require(trunc_.known(t.i, t.j), ErrorKind::validation,
            "trunc too small: term z^" + std::to_string(r * t.i) + "*u^" + std::to_string(t.j) +
                " has total degree above " + std::to_string(trunc));
    const bool fresh = terms_.emplace(Exponent{t.i, t.j}, t.c).second;
    require(fresh, ErrorKind::validation,
            "duplicate series term (" + std::to_string(t.i) + "," + std::to_string(t.j) + ")");
  }
}

InvariantSeries::InvariantSeries(std::int64_t r, std::map<Exponent, Rat> terms, Truncation trunc)
    : r_(r), trunc_(trunc) {
  for (auto& [e, c] : terms)
    if (!c.is_zero() && trunc_.known(e.first, e.second)) terms_.emplace(e, std::move(c));
}

std::vector<Term> InvariantSeries::term_list() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back({e.first, e.second, c});
  return out;
}

Rat InvariantSeries::coefficient(std::int64_t i, std::int64_t j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat() : it->second;
}

std::optional<std::int64_t> InvariantSeries::pure_u_order() const {
  for (const auto& [e, c] : terms_)
    if (e.first == 0) return e.second;  // map order: (0, j) entries come first, by j
  return std::nullopt;
}

std::int64_t InvariantSeries::z_order() const {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : terms_) best = std::min(best, e.first);
  return terms_.empty() ? 0 : best;
}

InvariantSeries InvariantSeries::operator*(const InvariantSeries& o) const {
  require(r_ == o.r_ && trunc_.slope == o.trunc_.slope && trunc_.uweight == o.trunc_.uweight, ErrorKind::argument,
          "series product needs matching r and truncation weights");
  require(trunc_.slope >= 0, ErrorKind::argument, "series product needs a nonnegative truncation slope");
  const std::int64_t bound = std::min(trunc_.bound + truncation_order(o), o.trunc_.bound + truncation_order(*this));
  const Truncation t{trunc_.slope, bound, trunc_.uweight};
  std::map<Exponent, Rat> out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      const std::int64_t i = ea.first + eb.first, j = ea.second + eb.second;
      if (!t.known(i, j)) continue;
      out[{i, j}] += ca * cb;
    }
  return InvariantSeries(r_, std::move(out), t);
}

InvariantSeries InvariantSeries::operator-(const InvariantSeries& o) const {
  require(r_ == o.r_ && trunc_.slope == o.trunc_.slope && trunc_.uweight == o.trunc_.uweight, ErrorKind::argument,
          "series difference needs matching r and truncation weights");
  const Truncation t{trunc_.slope, std::min(trunc_.bound, o.trunc_.bound), trunc_.uweight};
  std::map<Exponent, Rat> out = terms_;
  for (const auto& [e, c] : o.terms_) out[e] -= c;
  return InvariantSeries(r_, std::move(out), t);
}

InvariantSeries InvariantSeries::truncated(Truncation t) const {
  return InvariantSeries(r_, terms_, t);
}

InvariantSeries InvariantSeries::swapped() const {
  require(r_ == 1, ErrorKind::argument, "exchanging z and u needs r = 1");
  std::map<Exponent, Rat> out;
  for (const auto& [e, c] : terms_) out.emplace(Exponent{e.second, e.first}, c);
  require(trunc_.slope == 1 && trunc_.uweight == 1, ErrorKind::argument,
          "exchanging z and u needs truncation slope 1");
  return InvariantSeries(1, std::move(out), trunc_);
}

std::string InvariantSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Decreasing z-degree, then increasing u-degree.
  std::vector<std::pair<Exponent, Rat>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  for (const auto& [e, c] : items) {
    Rat mag = c;
    if (c.sign() < 0) {
      os << (first ? "-" : " - ");
      mag = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    std::vector<std::string> parts;
    if (mag != Rat(1) || (e.first == 0 && e.second == 0)) parts.push_back(mag.str());
    const std::int64_t zexp = r_ * e.first;
    if (zexp == 1) parts.emplace_back("z");
    if (zexp > 1) parts.push_back("z^" + std::to_string(zexp));
    if (e.second == 1) parts.emplace_back("u");
    if (e.second > 1) parts.push_back("u^" + std::to_string(e.second));
    for (std::size_t p = 0; p < parts.size(); ++p) os << (p ? "*" : "") << parts[p];
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Rat min_weight(const InvariantSeries& f, const Rat& weight_i, const Rat& weight_j) {
  require(!f.empty(), ErrorKind::truncation, "series has no known terms");
  require(weight_i.sign() >= 0 && weight_j.sign() > 0, ErrorKind::argument, "weights must be positive");
  std::optional<Rat> best;
  for (const auto& [e, c] : f.terms()) {
    const Rat w = weight_i * Rat(e.first) + weight_j * Rat(e.second);
    if (!best || w < *best) best = w;
  }
  // Unknown terms satisfy slope*i + uweight*j >= bound + 1 with i, j >= 0.
  const Truncation& t = f.truncation();
  Rat floor_unknown = weight_j * Rat(t.bound + 1, t.uweight);
  if (t.slope > 0) floor_unknown = std::min(floor_unknown, weight_i * Rat(t.bound + 1, t.slope));
  if (*best > floor_unknown)
    fail(ErrorKind::truncation, "insufficient truncation: weight minimum of " + f.str() +
                                    " could be attained beyond the truncation bound");
  return *best;
}

std::int64_t weight_order(const InvariantSeries& f, std::int64_t k) {
  require(k >= 1, ErrorKind::argument, "weight index k must be positive");
  return min_weight(f, Rat(k), Rat(1)).floor();
}

std::int64_t delta(const InvariantSeries& f) {
  require(f.r() > 1, ErrorKind::argument, "delta is defined for r > 1");
  const auto l = f.pure_u_order();
  require(l.has_value(), ErrorKind::argument, "delta needs a pure u^l term (isolatedness)");
  std::int64_t prev = weight_order(f, 1);
  for (std::int64_t k = 1; k <= *l + 1; ++k) {
    const std::int64_t next = weight_order(f, k + 1);
    if (next == prev) return k;
    prev = next;
  }
  fail(ErrorKind::internal, "m_k failed to stabilize below the pure-u order");
}

std::int64_t bar_delta(const InvariantSeries& f) {
  require(f.r() == 1, ErrorKind::argument, "bar_delta is defined for r = 1");
  bool isolated = false;
  for (const auto& [e, c] : f.terms()) isolated = isolated || e.first <= 1;
  require(isolated, ErrorKind::argument, "bar_delta needs a u^l or z*u^l term (isolatedness)");
  std::int64_t prev = weight_order(f, 1);
  const std::int64_t limit = 2 * f.trunc() + 4;
  for (std::int64_t k = 1; k <= limit; ++k) {
    const std::int64_t next = weight_order(f, k + 1);
    if (next <= prev + 1) return k;
    prev = next;
  }
  fail(ErrorKind::internal, "bar_delta search did not terminate");
}

InvariantSeries addm_transform(const InvariantSeries& f) {
  const std::int64_t m = weight_order(f, 1);
  std::map<Exponent, Rat> out;
  for (const auto& [e, c] : f.terms()) out.emplace(Exponent{e.first, e.first + e.second - m}, c);
  const Truncation& t = f.truncation();
  return InvariantSeries(f.r(), std::move(out), Truncation{t.slope - t.uweight, t.bound - t.uweight * m, t.uweight});
}

InvariantSeries substitute(const InvariantSeries& f, const UPoly& phi) {
  UPoly p;
  for (const auto& [d, c] : phi)
    if (!c.is_zero()) p.emplace(d, c);
  if (p.empty()) return f;
  require(f.r() == 1, ErrorKind::argument, "z -> z + phi(u) is only equivariant when r = 1");
  require(p.begin()->first >= 1, ErrorKind::argument, "phi(u) must vanish at u = 0");
  const Truncation t = f.truncation();
  require(t.slope <= t.uweight * p.begin()->first, ErrorKind::argument,
          "substitution order is below the truncation slope");

  // Powers of phi up to u-degree bound.
  std::int64_t max_i = 0;
  for (const auto& [e, c] : f.terms()) max_i = std::max(max_i, e.first);
  std::vector<UPoly> pw(static_cast<std::size_t>(max_i) + 1);
  pw[0][0] = Rat(1);
  for (std::size_t l = 1; l < pw.size(); ++l)
    for (const auto& [d1, c1] : pw[l - 1])
      for (const auto& [d2, c2] : p)
        if (d1 + d2 <= t.bound) pw[l][d1 + d2] += c1 * c2;

  std::map<Exponent, Rat> out;
  for (const auto& [e, c] : f.terms()) {
    const auto [i, j] = e;
    for (std::int64_t l = 0; l <= i; ++l) {
      const Rat scale = c * binomial(i, l);
      for (const auto& [d, cd] : pw[static_cast<std::size_t>(l)]) {
        if (cd.is_zero() || !t.known(i - l, j + d)) continue;
        out[{i - l, j + d}] += scale * cd;
      }
    }
  }
  return InvariantSeries(1, std::move(out), t);
}

NormalizedCoordinates normalize_coordinates(const InvariantSeries& f) {
  require(f.r() == 1, ErrorKind::argument, "coordinate normalization is for r = 1");
  const std::int64_t m = weight_order(f, 1);
  std::vector<Rat> form(static_cast<std::size_t>(m) + 1);  // form[i] = coeff of z^i u^{m-i}
  for (std::int64_t i = 0; i <= m; ++i) form[static_cast<std::size_t>(i)] = f.coefficient(i, m - i);

  NormalizedCoordinates out{f, {}, false, NormalizationStatus::maximal};
  const Rat& lead = form.back();
  if (lead.is_zero()) {
    // c*u^m is the m-th power of a linear form only through the swap z <-> u.
    bool pure_u = !form.front().is_zero();
    for (std::int64_t i = 1; i <= m; ++i) pure_u = pure_u && form[static_cast<std::size_t>(i)].is_zero();
    if (pure_u && m >= 1) {
      out.series = f.swapped();
      out.swapped = true;
    }
    return out;
  }
  if (m == 0) return out;
  const Rat lambda = form[static_cast<std::size_t>(m - 1)] / (Rat(m) * lead);
  for (std::int64_t i = 0; i <= m; ++i)
    if (form[static_cast<std::size_t>(i)] != lead * binomial(m, i) * power(lambda, m - i)) return out;
  if (!lambda.is_zero()) {
    out.phi = UPoly{{1, -lambda}};
    out.series = substitute(f, out.phi);
  }
  return out;
}

bool weight_two_condition(const InvariantSeries& f) {
  require(f.r() == 1, ErrorKind::argument, "weight-two condition is stated for r = 1");
  const std::int64_t m = weight_order(f, 1);
  for (const auto& [e, c] : f.terms())
    if (2 * e.first + e.second < 2 * m) return false;
  const Truncation& t = f.truncation();
  Rat floor_unknown(t.bound + 1, t.uweight);
  if (t.slope > 0) floor_unknown = std::min(floor_unknown, Rat(2 * (t.bound + 1), t.slope));
  require(floor_unknown >= Rat(2 * m), ErrorKind::truncation,
          "insufficient truncation to decide the weight-two condition");
  return true;
}

}  // namespace nashcar
