#include "nashcar/resolution.hpp"

#include <functional>
#include <numeric>

namespace nashcar {

namespace {

using Sink = std::function<void(const ExpVec& point_values, const Rat& discrepancy)>;

// A chart over a 3-dimensional quotient point: its type, the monomial map to
// the point's coordinates, and the discrepancies of its coordinate divisors.
struct Frame3 {
  QuotientSpace space;
  MonomialMap to_point;
  ExpVec alpha;
};

void economic_step(const Frame3& frame, const Sink& sink) {
  if (frame.space.is_smooth()) return;
  const auto b = terminal_weight(frame.space);
  require(b.has_value(), ErrorKind::internal, "non-terminal quotient " + frame.space.str() + " in economic resolution");
  const BlowupWeight w = decompose_weight(frame.space, *b);
  const ExpVec wv = w.vector();
  const Rat disc = discrepancy(frame.space, w, {}) + frame.alpha.dot(wv);
  sink(frame.to_point.apply(wv), disc);
  for (std::size_t c = 0; c < 3; ++c) {
    if ((*b)[c] <= 1) continue;
    ChartData chart = blowup_chart(frame.space, w, c);
    ExpVec alpha = frame.alpha;
    alpha[c] = disc;
    economic_step(Frame3{chart.space, frame.to_point * chart.change, std::move(alpha)}, sink);
  }
}

std::vector<std::int64_t> drop(const std::vector<std::int64_t>& v, std::size_t slot) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != slot) out.push_back(v[i]);
  return out;
}

ExpVec drop(const ExpVec& v, std::size_t slot) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != slot) out.push_back(v[i]);
  return ExpVec(std::move(out));
}

ExpVec insert_zero(const ExpVec& v, std::size_t slot) {
  std::vector<Rat> out(v.entries().begin(), v.entries().end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(slot), Rat());
  return ExpVec(std::move(out));
}

// The germ at the current node, with the map from its coordinates to the root
// coordinates and the discrepancies of its coordinate divisors.
struct GermFrame {
  InvariantSeries f;
  MonomialMap to_root = MonomialMap::identity(4);
  ExpVec alpha = ExpVec(4);
};

// Economic resolution of the point at the origin of a hypersurface chart in
// which the coordinate `eliminated` was solved from xy = f.
void resolve_chart_point(const GermFrame& node, const ChartData& chart, std::size_t eliminated, std::size_t partner,
                         const ExpVec& chart_alpha, const Sink& sink) {
  require(chart_alpha[eliminated].is_zero(), ErrorKind::internal, "eliminated coordinate carries a discrepancy");
  const QuotientSpace point(chart.space.r(), drop(chart.space.weights(), eliminated));
  const EliminatedCoordinate elim{eliminated, partner, 2, 3, node.f};
  const Sink lift = [&](const ExpVec& v3, const Rat& disc) {
    const ExpVec upstream = transport_valuation(chart, insert_zero(v3, eliminated), elim);
    sink(node.to_root.apply(upstream), disc);
  };
  economic_step(Frame3{point, MonomialMap::identity(3), drop(chart_alpha, eliminated)}, lift);
}

}  // namespace

CArGerm validate_germ(std::int64_t r, std::int64_t a, const InvariantSeries& f) {
  require(r >= 1, ErrorKind::validation, "r must be a positive integer");
  require(f.r() == r, ErrorKind::validation, "series was built for a different r");
  require(!f.empty(), ErrorKind::validation, "f is empty");
  CArGerm g{r, 0, f, 0, false};
  if (r > 1) {
    require(std::gcd(a, r) == 1, ErrorKind::validation,
            "gcd(a, r) must be 1 (got a=" + std::to_string(a) + ", r=" + std::to_string(r) + ")");
    g.a = residue(a, r);
    require(f.pure_u_order().has_value(), ErrorKind::validation,
            f.z_order() > 0 ? "z divides f: the singularity is not isolated"
                            : "no pure u^l term: the singularity is not isolated");
  } else {
    bool surrogate = false;
    for (const auto& [e, c] : f.terms()) surrogate = surrogate || e.first <= 1;
    require(surrogate, ErrorKind::validation, "neither u^l nor z*u^l occurs in f: the singularity is not isolated");
  }
  g.m1 = weight_order(f, 1);
  require(g.m1 >= 1, ErrorKind::validation, "f(0,0) is nonzero: the origin is not on X");
  if (r > 1) {
    require(!f.coefficient(g.m1, 0).is_zero(), ErrorKind::validation,
            "the term z^(r*m_1) is missing (normalized form needs z^(r*m_1) in f)");
    delta(f);
  } else {
    g.smooth = g.m1 == 1;
    if (!g.smooth) bar_delta(f);
  }
  return g;
}

QuotientSpace ambient_space(const CArGerm& g) { return QuotientSpace(g.r, {g.a, -g.a, 1, 0}); }

std::optional<std::vector<std::int64_t>> terminal_weight(const QuotientSpace& q) {
  if (q.dim() != 3 || q.is_smooth()) return std::nullopt;
  const std::int64_t r = q.r();
  const auto& w = q.weights();
  for (std::size_t c = 0; c < 3; ++c) {
    if (std::gcd(w[c], r) != 1) continue;
    const std::int64_t s = mod_inverse(w[c], r);
    std::vector<std::int64_t> b(3);
    for (std::size_t i = 0; i < 3; ++i) b[i] = residue(s * w[i], r);
    b[c] = 1;
    const std::size_t d = (c + 1) % 3, e = (c + 2) % 3;
    if (b[d] > 0 && b[e] > 0 && b[d] + b[e] == r) return b;
  }
  return std::nullopt;
}

std::vector<ResolvedDivisor> economic_resolution(const QuotientSpace& q) {
  require(q.dim() == 3, ErrorKind::argument, "economic resolution needs a 3-dimensional quotient");
  std::vector<ResolvedDivisor> out;
  if (q.is_smooth()) return out;
  require(terminal_weight(q).has_value(), ErrorKind::argument, q.str() + " is not a terminal quotient 1/r(a,-a,1)");
  economic_step(Frame3{q, MonomialMap::identity(3), ExpVec(3)}, [&](const ExpVec& v, const Rat& disc) {
    out.push_back({v, disc, DivisorSource::cyclic_point, 0, ""});
  });
  return out;
}

WMorphismStep w_morphism_step(const CArGerm& g, std::int64_t step) {
  require(g.r > 1, ErrorKind::argument, "w-morphism steps are for r > 1");
  const std::int64_t m = weight_order(g.f, 1);
  require(m >= 1, ErrorKind::argument, "germ is already resolved (m_1 = 0)");
  const QuotientSpace space = ambient_space(g);
  WMorphismStep out;
  out.step = step;
  out.weight = decompose_weight(space, {g.a, g.r * m - g.a, 1, g.r});
  out.ux = blowup_chart(space, out.weight, 0);
  out.uy = blowup_chart(space, out.weight, 1);
  out.uu = blowup_chart(space, out.weight, 3);
  out.germ_after = addm_transform(g.f);
  out.terminal = weight_order(out.germ_after, 1) == 0;
  return out;
}

ResolutionTree gorenstein_resolution(const CArGerm& g) {
  ResolutionTree tree;
  if (g.smooth) {
    tree.notes.emplace_back("X is smooth: no exceptional divisors");
    return tree;
  }
  const auto record = [&tree](std::int64_t step, std::string point) {
    return [&tree, step, point](const ExpVec& v, const Rat& disc) {
      tree.divisors.push_back({v, disc, DivisorSource::cyclic_point, step, point});
    };
  };

  if (g.r == 1) {
    const std::int64_t m = g.m1;
    const QuotientSpace space = QuotientSpace::smooth(4);
    const BlowupWeight w = decompose_weight(space, {m - 1, 1, 1, 1});
    const Rat disc = discrepancy(space, w, {Rat(m)});
    tree.divisors.push_back({w.vector(), disc, DivisorSource::ordinary_blowup, 1, ""});
    const ChartData ux = blowup_chart(space, w, 0);
    ExpVec alpha(4);
    alpha[0] = disc;
    tree.quotient_points.push_back({1, "U_x", QuotientSpace(ux.space.r(), drop(ux.space.weights(), 1))});
    resolve_chart_point(GermFrame{g.f}, ux, 1, 0, alpha, record(1, "U_x"));
    tree.notes.emplace_back("cA points on the U_z and U_u charts are left unresolved");
    return tree;
  }

  GermFrame node{g.f};
  CArGerm current = g;
  for (std::int64_t step = 1;; ++step) {
    WMorphismStep s = w_morphism_step(current, step);
    const QuotientSpace space = ambient_space(current);
    const ExpVec wv = s.weight.vector();
    const Rat a_new = discrepancy(space, s.weight, {Rat(weight_order(current.f, 1))});
    require(a_new == Rat(1, g.r), ErrorKind::internal, "w-morphism discrepancy is not 1/r");
    const Rat disc = a_new + node.alpha.dot(wv);
    tree.divisors.push_back({node.to_root.apply(wv), disc, DivisorSource::w_morphism, step, ""});

    ExpVec alpha_x = node.alpha, alpha_y = node.alpha, alpha_u = node.alpha;
    alpha_x[0] = disc;
    alpha_y[1] = disc;
    alpha_u[3] = disc;
    if (!s.ux.space.is_smooth()) {
      tree.quotient_points.push_back({step, "U_x", QuotientSpace(s.ux.space.r(), drop(s.ux.space.weights(), 1))});
      resolve_chart_point(node, s.ux, 1, 0, alpha_x, record(step, "U_x"));
    }
    if (!s.uy.space.is_smooth()) {
      tree.quotient_points.push_back({step, "U_y", QuotientSpace(s.uy.space.r(), drop(s.uy.space.weights(), 0))});
      resolve_chart_point(node, s.uy, 0, 1, alpha_y, record(step, "U_y"));
    }
    const bool terminal = s.terminal;
    node = GermFrame{s.germ_after, node.to_root * s.uu.change, alpha_u};
    tree.steps.push_back(std::move(s));
    if (terminal) break;
    current = CArGerm{g.r, g.a, node.f, weight_order(node.f, 1), false};
  }
  return tree;
}

}  // namespace nashcar
