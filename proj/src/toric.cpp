#include "nashcar/toric.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nashcar {

QuotientSpace::QuotientSpace(std::int64_t r, std::vector<std::int64_t> weights) : r_(r), w_(std::move(weights)) {
  require(r >= 1, ErrorKind::argument, "quotient order must be positive");
  require(!w_.empty(), ErrorKind::argument, "quotient space needs at least one coordinate");
  std::int64_t g = r_;
  for (auto x : w_) g = std::gcd(g, x);
  if (g > 1) {
    r_ /= g;
    for (auto& x : w_) x /= g;
  }
  if (r_ == 1) std::fill(w_.begin(), w_.end(), 0);
}

QuotientSpace QuotientSpace::canonical() const {
  std::vector<std::int64_t> best;
  for (std::int64_t s = 1; s <= r_; ++s) {
    if (std::gcd(s, r_) != 1) continue;
    std::vector<std::int64_t> cand(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) cand[i] = residue(s * w_[i], r_);
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return QuotientSpace(r_, std::move(best));
}

std::string QuotientSpace::str() const {
  if (is_smooth()) return "smooth";
  std::ostringstream os;
  os << "1/" << r_ << '(';
  for (std::size_t i = 0; i < w_.size(); ++i) os << (i ? "," : "") << w_[i];
  os << ')';
  return os.str();
}

bool operator==(const QuotientSpace& a, const QuotientSpace& b) {
  if (a.r_ != b.r_ || a.w_.size() != b.w_.size()) return false;
  return a.canonical().w_ == b.canonical().w_;
}

ExpVec BlowupWeight::vector() const {
  ExpVec v(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) v[i] = Rat(b[i], r);
  return v;
}

BlowupWeight decompose_weight(const QuotientSpace& space, const std::vector<std::int64_t>& b) {
  require(b.size() == space.dim(), ErrorKind::argument, "blow-up weight has the wrong length");
  for (auto x : b) require(x >= 1, ErrorKind::argument, "blow-up weights must be positive");
  const std::int64_t r = space.r();
  const auto& a = space.weights();
  for (std::int64_t lambda = 1; lambda <= r; ++lambda) {
    bool ok = true;
    for (std::size_t i = 0; i < b.size() && ok; ++i) ok = residue(b[i] - lambda * a[i], r) == 0;
    if (!ok) continue;
    BlowupWeight w{r, b, lambda, std::vector<std::int64_t>(b.size())};
    for (std::size_t i = 0; i < b.size(); ++i) w.k[i] = (b[i] - lambda * a[i]) / r;
    return w;
  }
  fail(ErrorKind::argument, "weight is not a lattice point of the quotient lattice");
}

QuotientSpace chart_quotient_by_lattice(const QuotientSpace& space, const BlowupWeight& w, std::size_t index) {
  const std::size_t n = space.dim();
  require(index < n, ErrorKind::argument, "chart index out of range");
  const std::int64_t r = space.r();
  const auto& a = space.weights();
  const auto& b = w.b;
  const std::int64_t bi = b[index];
  // In the chart basis {e_j (j != i), w}, the images of e_i and (1/r)a are
  // (1/b_i)(-b_j, r) and (1/b_i)((a_j b_i - a_i b_j)/r, a_i); the group they
  // generate modulo Z^n has order b_i.
  std::vector<std::int64_t> ev(n), av(n);
  for (std::size_t j = 0; j < n; ++j) {
    ev[j] = j == index ? r : -b[j];
    if (j == index) {
      av[j] = a[index];
    } else {
      const std::int64_t num = a[j] * bi - a[index] * b[j];
      require(num % r == 0, ErrorKind::internal, "chart lattice image is not integral");
      av[j] = num / r;
    }
  }
  const auto order = [&](const std::vector<std::int64_t>& u) {
    std::int64_t g = bi;
    for (auto x : u) g = std::gcd(g, residue(x, bi));
    return bi / g;
  };
  const std::int64_t oe = order(ev), oa = order(av);
  std::vector<std::int64_t> u(n);
  for (std::int64_t total = 0; total <= oe + oa; ++total)
    for (std::int64_t s = std::max<std::int64_t>(0, total - oa); s <= std::min(total, oe); ++s) {
      const std::int64_t t = total - s;
      for (std::size_t j = 0; j < n; ++j) u[j] = residue(s * ev[j] + t * av[j], bi);
      if (order(u) == bi) return QuotientSpace(bi, u);
    }
  fail(ErrorKind::internal, "chart group is not cyclic");
}

ChartData blowup_chart(const QuotientSpace& space, const BlowupWeight& w, std::size_t index) {
  const std::size_t n = space.dim();
  require(index < n && w.b.size() == n, ErrorKind::argument, "chart index out of range");
  const std::int64_t r = space.r();
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
  for (std::size_t j = 0; j < n; ++j) {
    rows[j][index] = Rat(w.b[j], r);
    if (j != index) rows[j][j] = Rat(1);
  }
  QuotientSpace q;
  if (w.lambda == 1) {
    std::vector<std::int64_t> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = j == index ? r : -w.b[j];
    q = QuotientSpace(w.b[index], std::move(c));
  } else {
    q = chart_quotient_by_lattice(space, w, index);
  }
  return ChartData{index, std::move(q), MonomialMap(std::move(rows)), w.vector()};
}

Rat discrepancy(const QuotientSpace& space, const BlowupWeight& w, const std::vector<Rat>& hyp_weights) {
  Rat out(std::accumulate(w.b.begin(), w.b.end(), std::int64_t{0}), space.r());
  for (const auto& h : hyp_weights) out -= h;
  return out - Rat(1);
}

Rat series_valuation(const InvariantSeries& f, const Rat& vz, const Rat& vu) {
  return min_weight(f, Rat(f.r()) * vz, vu);
}

ExpVec transport_valuation(const ChartData& chart, const ExpVec& v, const std::optional<EliminatedCoordinate>& hyp) {
  ExpVec out = chart.change.apply(v);
  if (hyp) {
    require(v[hyp->eliminated].is_zero(), ErrorKind::argument, "eliminated coordinate must carry value 0");
    out[hyp->eliminated] = series_valuation(hyp->f, out[hyp->z_index], out[hyp->u_index]) - out[hyp->partner];
  }
  return out;
}

}  // namespace nashcar
