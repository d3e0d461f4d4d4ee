#include "nashcar/qfactorial.hpp"

#include <algorithm>
#include <numeric>

#include "nashcar/polynomial.hpp"

namespace nashcar {

namespace {

using TermMap = std::map<Exponent, Rat>;

// Series in (w, u) with w = z^r; same term map and truncation region.
InvariantSeries as_w(const InvariantSeries& f) { return InvariantSeries(1, f.terms(), f.truncation()); }
InvariantSeries as_z(std::int64_t r, const InvariantSeries& F) { return InvariantSeries(r, F.terms(), F.truncation()); }

Certainty worst(Certainty a, Certainty b) { return std::max(a, b); }

struct Branches {
  std::vector<InvariantSeries> factors;  // w-series
  std::vector<std::int64_t> counts;
  Certainty certainty = Certainty::certified;

  void add(InvariantSeries f, std::int64_t count, Certainty c) {
    factors.push_back(std::move(f));
    counts.push_back(count);
    certainty = worst(certainty, c);
  }
  void append(Branches&& o) {
    for (std::size_t t = 0; t < o.factors.size(); ++t) {
      factors.push_back(std::move(o.factors[t]));
      counts.push_back(o.counts[t]);
    }
    certainty = worst(certainty, o.certainty);
  }
};

// Largest L such that every (i, j) >= 0 with p i + q j <= L lies in the region.
std::int64_t omega_precision(const Truncation& t, std::int64_t p, std::int64_t q) {
  require(t.slope >= 1, ErrorKind::internal, "factorization needs a positive truncation slope");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t i = 0;; ++i) {
    const std::int64_t j = std::max<std::int64_t>(0, ceil_div(t.bound + 1 - t.slope * i, t.uweight));
    best = std::min(best, p * i + q * j);
    if (j == 0) break;
  }
  return best - 1;
}

// Region inside t on which substituting w -> w + c u^p is defined.
Truncation substitution_region(const Truncation& t, std::int64_t p) {
  if (t.slope <= t.uweight * p) return t;
  return Truncation{p, floor_div(t.bound * p, t.slope)};
}

TermMap weighted_form(const QPoly& poly, std::int64_t p, std::int64_t q, std::int64_t shift_j) {
  TermMap out;
  const std::int64_t d = degree(poly);
  for (std::int64_t t = 0; t <= d; ++t)
    if (!poly[static_cast<std::size_t>(t)].is_zero())
      out[{t * q, (d - t) * p + shift_j}] = poly[static_cast<std::size_t>(t)];
  return out;
}

std::int64_t omega(const Exponent& e, std::int64_t p, std::int64_t q) { return p * e.first + q * e.second; }

// F = G * H with G monic of w-degree g, in_omega(G) = g0 and in_omega(H) = h0
// for omega = (p, q), where g0 = P1(w^q / u^p) u^(p deg P1) and h0 likewise from P2.
// Each level reduces to P1 y + P2 x = e in S = w^q / u^p with deg x < deg P1.
// Each factor carries the region on which it is determined.
std::pair<InvariantSeries, InvariantSeries> hensel_split(const InvariantSeries& F, std::int64_t p, std::int64_t q,
                                                         const QPoly& p1, const QPoly& p2, std::int64_t shift_j) {
  const Truncation t = F.truncation();
  const std::int64_t lambda = omega_precision(t, p, q);
  const TermMap g0 = weighted_form(p1, p, q, 0), h0 = weighted_form(p2, p, q, shift_j);
  const std::int64_t dg = omega(g0.begin()->first, p, q), dh = omega(h0.begin()->first, p, q);
  const std::int64_t d0 = dg + dh;
  require(lambda >= d0, ErrorKind::truncation, "insufficient truncation to separate the factors of f");
  const auto [s1, s2] = bezout(p1, p2);

  std::map<std::int64_t, TermMap> flev, glev, hlev;
  for (const auto& [e, c] : F.terms()) {
    const std::int64_t w = omega(e, p, q);
    if (w <= lambda) flev[w][e] = c;
  }
  glev[dg] = g0;
  hlev[dh] = h0;

  // Places S^k coefficients on level `level` starting at w-exponent i0.
  const auto place = [&](const QPoly& poly, std::int64_t level, std::int64_t i0, TermMap& out) {
    const std::int64_t j0 = (level - p * i0) / q;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (poly[k].is_zero()) continue;
      const Exponent e{i0 + q * static_cast<std::int64_t>(k), j0 - p * static_cast<std::int64_t>(k)};
      require(e.second >= 0, ErrorKind::internal, "Hensel lifting left the power series ring");
      out[e] = poly[k];
    }
  };

  for (std::int64_t level = d0 + 1; level <= lambda; ++level) {
    const std::int64_t step = level - d0;
    TermMap err;
    if (auto it = flev.find(level); it != flev.end()) err = it->second;
    for (const auto& [lg, gt] : glev) {
      const auto ht = hlev.find(level - lg);
      if (ht == hlev.end()) continue;
      for (const auto& [ge, gc] : gt)
        for (const auto& [he, hc] : ht->second) err[{ge.first + he.first, ge.second + he.second}] -= gc * hc;
    }
    std::erase_if(err, [](const auto& kv) { return kv.second.is_zero(); });
    if (err.empty()) continue;
    const std::int64_t i0 = err.begin()->first.first % q;
    QPoly e;
    for (const auto& [x, c] : err) {
      const auto k = static_cast<std::size_t>((x.first - i0) / q);
      if (e.size() <= k) e.resize(k + 1);
      e[k] = c;
    }
    const QPoly xs = divide(multiply(s2, e), p1).second;
    const auto [ys, rem] = divide(subtract(e, multiply(p2, xs)), p1);
    require(rem.empty(), ErrorKind::internal, "Hensel lifting system is inconsistent");
    place(xs, dg + step, i0, glev[dg + step]);
    place(ys, dh + step, i0, hlev[dh + step]);
  }

  TermMap gt, ht;
  for (const auto& [l, m] : glev) gt.insert(m.begin(), m.end());
  for (const auto& [l, m] : hlev) ht.insert(m.begin(), m.end());
  InvariantSeries G(1, std::move(gt), Truncation{p, lambda - dh, q}), H(1, std::move(ht), Truncation{p, lambda - dg, q});
  const InvariantSeries prod = G * H;
  const InvariantSeries diff = prod - F.truncated(Truncation{p, std::min(lambda, prod.trunc()), q});
  require(diff.empty(), ErrorKind::internal, "lifted factors do not multiply back to f");
  return {std::move(G), std::move(H)};
}


InvariantSeries shifted(const InvariantSeries& F, std::int64_t di, std::int64_t dj) {
  TermMap out;
  for (const auto& [e, c] : F.terms()) out[{e.first - di, e.second - dj}] = c;
  const Truncation& t = F.truncation();
  return InvariantSeries(1, std::move(out), Truncation{t.slope, t.bound - t.weight(di, dj), t.uweight});
}

InvariantSeries monomial(std::int64_t i, std::int64_t j, const Truncation& t) {
  return InvariantSeries(1, TermMap{{{i, j}, Rat(1)}}, t);
}

InvariantSeries substitute_w(const InvariantSeries& F, const Rat& rho, std::int64_t p) {
  return substitute(F.truncated(substitution_region(F.truncation(), p)), UPoly{{p, rho}});
}

struct Piece {
  QPoly poly;  // monic factor of the edge polynomial
  bool rational_root = false;
  Rat root;
  std::int64_t multiplicity = 1;
  std::int64_t distinct = 1;  // distinct complex roots
};

std::vector<Piece> edge_pieces(const QPoly& P) {
  std::vector<Piece> out;
  const auto yun = squarefree_decomposition(P);
  for (std::size_t k = 0; k < yun.size(); ++k) {
    const std::int64_t mult = static_cast<std::int64_t>(k) + 1;
    QPoly rest = yun[k];
    if (degree(rest) <= 0) continue;
    if (const auto roots = rational_roots(rest)) {
      for (const auto& rho : *roots) {
        QPoly lin{-rho, Rat(1)}, power{Rat(1)};
        for (std::int64_t e = 0; e < mult; ++e) power = multiply(power, lin);
        out.push_back({power, true, rho, mult, 1});
        rest = divide(rest, lin).first;
      }
    }
    if (degree(rest) >= 1) {
      QPoly power{Rat(1)};
      for (std::int64_t e = 0; e < mult; ++e) power = multiply(power, rest);
      out.push_back({monic(power), false, Rat(), mult, degree(rest)});
    }
  }
  return out;
}

Branches analyze(InvariantSeries F);

// One Weierstrass factor G of degree g from a piece of the first segment.
void classify_piece(const Piece& piece, const InvariantSeries& G, std::int64_t p, std::int64_t q, Branches& out) {
  if (piece.multiplicity == 1) {
    out.add(G, piece.distinct, piece.distinct == 1 ? Certainty::certified : Certainty::count_only);
    return;
  }
  if (!piece.rational_root || q != 1) {
    out.add(G, piece.distinct, Certainty::unknown);
    return;
  }
  const InvariantSeries moved = substitute_w(G, piece.root, p);
  Branches sub = analyze(moved);
  Branches back;
  back.certainty = sub.certainty;
  for (std::size_t k = 0; k < sub.factors.size(); ++k) {
    const InvariantSeries& f = sub.factors[k];
    back.factors.push_back(substitute(f.truncated(substitution_region(f.truncation(), p)), UPoly{{p, -piece.root}}));
    back.counts.push_back(sub.counts[k]);
  }
  out.append(std::move(back));
}

// Slope of the first segment after the vertex at index 0, or none.
std::optional<Rat> first_slope(const NewtonPolygon& poly) {
  if (poly.segments.empty()) return std::nullopt;
  return Rat(poly.segments.front().p, poly.segments.front().q);
}

Branches analyze(InvariantSeries F) {
  Branches out;
  require(!F.empty() && F.trunc() >= 0, ErrorKind::truncation, "insufficient truncation: a factor has no known terms");
  // u | F within the known region: the pure-w vertex is beyond the truncation.
  std::int64_t jmin = std::numeric_limits<std::int64_t>::max(), imin = jmin;
  for (const auto& [e, c] : F.terms()) {
    jmin = std::min(jmin, e.second);
    imin = std::min(imin, e.first);
  }
  if (jmin >= 1) {
    const NewtonPolygon poly = newton_polygon(F);
    const Exponent right = poly.vertices.back();
    const std::int64_t n_min = F.trunc() / F.truncation().slope + 1;  // least possible pure-w degree
    bool vertex_certain = jmin == 1 && n_min > right.first;
    if (vertex_certain && !poly.segments.empty()) {
      const NewtonSegment& last = poly.segments.back();
      vertex_certain = Rat(1, n_min - right.first) < Rat(last.p, last.q);
    }
    require(vertex_certain, ErrorKind::truncation,
            "insufficient truncation: no pure power of z^r is known in " + F.str() + " and the branches near u = 0 are undetermined");
    out.add(monomial(0, 1, F.truncation()), 1, Certainty::certified);
    F = shifted(F, 0, jmin);
  }
  // w | F within the known region: the pure-u vertex is beyond the truncation.
  if (imin >= 1) {
    const NewtonPolygon poly = newton_polygon(F);
    const Exponent left = poly.vertices.front();
    bool vertex_certain = imin == 1;
    if (vertex_certain) {
      if (const auto s = first_slope(poly)) vertex_certain = Rat(ceil_div(F.trunc() + 1, F.truncation().uweight) - left.second) > *s;
    }
    require(vertex_certain, ErrorKind::truncation,
            "insufficient truncation: no pure power of u is known in " + F.str() + " and the branches near z = 0 are undetermined");
    out.add(monomial(1, 0, F.truncation()), 1, Certainty::certified);
    F = shifted(F, imin, 0);
  }
  while (true) {
    const NewtonPolygon poly = newton_polygon(F);
    require(poly.vertices.back().second == 0, ErrorKind::truncation,
            "insufficient truncation: the pure power of z^r in a cofactor lies beyond the known region");
    if (poly.segments.empty()) break;  // a unit
    const NewtonSegment& seg = poly.segments.front();
    const QPoly P = edge_polynomial(F, seg);
    const auto pieces = edge_pieces(P);
    require(!pieces.empty(), ErrorKind::internal, "edge polynomial has no factors");
    const Piece& first = pieces.front();
    if (pieces.size() == 1 && poly.segments.size() == 1) {
      classify_piece(first, F, seg.p, seg.q, out);
      break;
    }
    const QPoly rest = divide(P, first.poly).first;
    auto [G, H] = hensel_split(F, seg.p, seg.q, first.poly, rest, seg.right.second);
    classify_piece(first, G, seg.p, seg.q, out);
    F = std::move(H);
  }
  return out;
}

const char* certainty_name(Certainty c) {
  switch (c) {
    case Certainty::certified: return "certified";
    case Certainty::count_only: return "count-only";
    case Certainty::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

std::string to_string(Certainty c) { return certainty_name(c); }

NewtonPolygon newton_polygon(const InvariantSeries& f) {
  NewtonPolygon out;
  std::map<std::int64_t, std::int64_t> lowest;  // i -> least j
  for (const auto& [e, c] : f.terms()) {
    auto [it, fresh] = lowest.emplace(e.first, e.second);
    if (!fresh) it->second = std::min(it->second, e.second);
  }
  if (lowest.empty()) return out;
  std::vector<Exponent> hull;
  for (const auto& [i, j] : lowest) {
    const Exponent pt{i, j};
    while (hull.size() >= 2) {
      const Exponent& a = hull[hull.size() - 2];
      const Exponent& b = hull.back();
      const std::int64_t cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  // Keep the part with strictly decreasing j.
  std::vector<Exponent> verts{hull.front()};
  for (std::size_t k = 1; k < hull.size() && hull[k].second < verts.back().second; ++k) verts.push_back(hull[k]);
  out.vertices = verts;
  for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
    NewtonSegment s;
    s.left = verts[k];
    s.right = verts[k + 1];
    const std::int64_t di = s.right.first - s.left.first, dj = s.left.second - s.right.second;
    const std::int64_t g = std::gcd(di, dj);
    s.p = dj / g;
    s.q = di / g;
    s.length = di;
    s.lattice_length = g;
    out.segments.push_back(s);
  }
  return out;
}

std::vector<Rat> edge_polynomial(const InvariantSeries& f, const NewtonSegment& s) {
  QPoly out(static_cast<std::size_t>(s.lattice_length) + 1);
  for (std::int64_t t = 0; t <= s.lattice_length; ++t)
    out[static_cast<std::size_t>(t)] = f.coefficient(s.left.first + t * s.q, s.left.second - t * s.p);
  return out;
}

std::string picard_description(std::int64_t r, std::int64_t n) {
  std::string free = n <= 1 ? "" : (n == 2 ? "Z" : "Z^" + std::to_string(n - 1));
  if (r == 1) return free.empty() ? "0" : free;
  const std::string tors = "Z/" + std::to_string(r) + "Z";
  return free.empty() ? tors : tors + " ⊕ " + free;
}

FactorizationResult factor_series(const InvariantSeries& f) {
  Branches b = analyze(as_w(f));
  FactorizationResult out;
  out.certainty = b.certainty;
  for (std::size_t k = 0; k < b.factors.size(); ++k) {
    out.factors.push_back(as_z(f.r(), b.factors[k]));
    out.branches.push_back(b.counts[k]);
    out.n += b.counts[k];
  }
  out.picard = out.certainty == Certainty::unknown ? "unknown" : picard_description(f.r(), out.n);
  if (out.certainty == Certainty::count_only)
    out.notes.emplace_back("some factors are irreducible only over an extension of Q; branch count is exact");
  if (out.certainty == Certainty::unknown)
    out.notes.emplace_back("a repeated root of an edge polynomial is irrational or sits on a ramified edge; branch count is a lower bound");
  return out;
}

FactorizationResult verify_factors(const InvariantSeries& f, const std::vector<InvariantSeries>& factors) {
  require(!factors.empty(), ErrorKind::validation, "factor list is empty");
  InvariantSeries prod = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) prod = prod * factors[k];
  const Truncation common{f.truncation().slope, std::min(f.trunc(), prod.trunc()), f.truncation().uweight};
  const InvariantSeries fc = f.truncated(common), pc = prod.truncated(common);
  require(!fc.empty() && !pc.empty(), ErrorKind::truncation, "factor product is not determined on any term of f");
  const auto& [e0, c0] = *fc.terms().begin();
  const Rat pcoef = pc.coefficient(e0.first, e0.second);
  require(!pcoef.is_zero(), ErrorKind::validation, "product of the given factors does not match f");
  TermMap scaled;
  for (const auto& [e, c] : pc.terms()) scaled[e] = c * (c0 / pcoef);
  const InvariantSeries diff = fc - InvariantSeries(f.r(), std::move(scaled), common);
  require(diff.empty(), ErrorKind::validation, "product of the given factors does not match f up to a constant");

  FactorizationResult out;
  out.certainty = Certainty::certified;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const FactorizationResult one = factor_series(factors[k]);
    require(one.n >= 1, ErrorKind::validation, "factor " + std::to_string(k + 1) + " is a unit");
    if (one.certainty != Certainty::unknown)
      require(one.n == 1, ErrorKind::validation, "factor " + std::to_string(k + 1) + " is reducible");
    else
      out.certainty = Certainty::unknown;
    out.factors.push_back(factors[k]);
    out.branches.push_back(1);
    ++out.n;
  }
  out.picard = out.certainty == Certainty::unknown ? "unknown" : picard_description(f.r(), out.n);
  out.notes.emplace_back("factorization supplied with the input and verified");
  return out;
}

Tri q_factorial_verdict(const FactorizationResult& fr) {
  if (fr.certainty == Certainty::unknown) return Tri::unknown;
  return fr.n == 1 ? Tri::yes : Tri::no;
}

Tri is_q_factorial(const CArGerm& g) {
  try {
    return q_factorial_verdict(factor_series(g.f));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::truncation) return Tri::unknown;
    throw;
  }
}

QFactorialization q_factorialization_components(const CArGerm& g, const FactorizationResult& fr) {
  require(fr.certainty != Certainty::unknown, ErrorKind::argument, "factors unavailable: factorization is undecided");
  for (auto b : fr.branches)
    require(b == 1, ErrorKind::argument, "factors unavailable: some factor splits only over an extension of Q");
  QFactorialization out;
  const std::int64_t M = weight_order(g.f, g.r);
  std::int64_t c = 0;
  for (std::size_t t = 0; t < fr.factors.size(); ++t) {
    const InvariantSeries& ft = fr.factors[t];
    const std::int64_t m1 = weight_order(ft, 1);
    out.components.push_back(CArGerm{g.r, g.a, ft, m1, g.r == 1 && m1 == 1});
    if (t + 1 == fr.factors.size()) break;
    c += weight_order(ft, g.r);
    DivisorialValuation v;
    v.values = ExpVec::scaled(1, {c, M - c, 1, 1});
    v.discrepancy = Rat(1);
    v.label = Label{LabelKind::blowup_curve, 0, static_cast<std::int64_t>(t) + 1};
    v.nash = true;
    v.essential = Tri::yes;
    v.provenance = "blow-up of a Weil divisor in the q-factorialization";
    out.curves.push_back(std::move(v));
  }
  return out;
}

}  // namespace nashcar
