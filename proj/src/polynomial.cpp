#include "nashcar/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace nashcar {

namespace {

const mpz_class kDivisorLimit("1000000000000");

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::int64_t degree(const QPoly& p) {
  for (std::size_t t = p.size(); t > 0; --t)
    if (!p[t - 1].is_zero()) return static_cast<std::int64_t>(t) - 1;
  return -1;
}

QPoly derivative(const QPoly& p) {
  QPoly out;
  for (std::size_t t = 1; t < p.size(); ++t) out.push_back(p[t] * Rat(static_cast<long>(t)));
  trim(out);
  return out;
}

QPoly multiply(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly monic(const QPoly& p) {
  QPoly out = p;
  trim(out);
  if (out.empty()) return out;
  const Rat lead = out.back();
  for (auto& c : out) c /= lead;
  return out;
}

std::pair<QPoly, QPoly> divide(const QPoly& a, const QPoly& b) {
  QPoly r = a, bb = b;
  trim(r);
  trim(bb);
  require(!bb.empty(), ErrorKind::argument, "polynomial division by zero");
  const std::size_t db = bb.size() - 1;
  QPoly q(r.size() >= bb.size() ? r.size() - db : 0);
  while (!r.empty() && r.size() >= bb.size()) {
    const std::size_t shift = r.size() - bb.size();
    const Rat c = r.back() / bb.back();
    q[shift] = c;
    for (std::size_t t = 0; t <= db; ++t) r[shift + t] -= c * bb[t];
    trim(r);
  }
  trim(q);
  return {q, r};
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Rat evaluate(const QPoly& p, const Rat& x) {
  Rat acc;
  for (std::size_t t = p.size(); t > 0; --t) acc = acc * x + p[t - 1];
  return acc;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly out = a;
  out.resize(std::max(a.size(), b.size()));
  for (std::size_t t = 0; t < b.size(); ++t) out[t] += b[t];
  trim(out);
  return out;
}

QPoly subtract(const QPoly& a, const QPoly& b) {
  QPoly out = a;
  out.resize(std::max(a.size(), b.size()));
  for (std::size_t t = 0; t < b.size(); ++t) out[t] -= b[t];
  trim(out);
  return out;
}

std::pair<QPoly, QPoly> bezout(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b, s0{Rat(1)}, s1, t0, t1{Rat(1)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    const auto [q, r] = divide(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, subtract(s0, multiply(q, s1)));
    t0 = std::exchange(t1, subtract(t0, multiply(q, t1)));
  }
  require(degree(r0) == 0, ErrorKind::argument, "bezout needs coprime polynomials");
  const Rat inv = Rat(1) / r0[0];
  for (auto& c : s0) c *= inv;
  for (auto& c : t0) c *= inv;
  return {s0, t0};
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  std::vector<QPoly> out;
  QPoly f = monic(p);
  if (degree(f) <= 0) return out;
  QPoly a = gcd(f, derivative(f));
  QPoly b = divide(f, a).first;
  QPoly c = divide(derivative(f), a).first;
  const auto minus_derivative = [](const QPoly& x, const QPoly& y) {
    QPoly out = x, yp = derivative(y);
    out.resize(std::max(out.size(), yp.size()));
    for (std::size_t t = 0; t < yp.size(); ++t) out[t] -= yp[t];
    trim(out);
    return out;
  };
  QPoly d = minus_derivative(c, b);
  while (degree(b) > 0) {
    QPoly g = gcd(b, d);
    out.push_back(g);
    b = divide(b, g).first;
    c = divide(d, g).first;
    d = minus_derivative(c, b);
  }
  while (!out.empty() && degree(out.back()) == 0) out.pop_back();
  return out;
}

std::optional<std::vector<Rat>> rational_roots(const QPoly& p) {
  QPoly f = p;
  trim(f);
  std::vector<Rat> roots;
  if (degree(f) <= 0) return roots;
  // Strip the root 0.
  std::size_t low = 0;
  while (f[low].is_zero()) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (degree(f) <= 0) return roots;
  mpz_class den = 1;
  for (const auto& c : f) den = lcm(den, c.den());
  std::vector<mpz_class> z;
  for (const auto& c : f) z.push_back(c.num() * (den / c.den()));
  const mpz_class a0 = abs(z.front()), an = abs(z.back());
  if (a0 > kDivisorLimit || an > kDivisorLimit) return std::nullopt;
  const auto num_divs = positive_divisors(a0);
  const auto den_divs = positive_divisors(an);
  for (const auto& e : den_divs)
    for (const auto& d : num_divs)
      for (int sign : {1, -1}) {
        if (gcd(d, e) != 1) continue;
        const Rat x(mpz_class(sign * d), e);
        if (evaluate(f, x).is_zero()) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace nashcar
