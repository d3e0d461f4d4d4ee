#include "nashcar/catalog.hpp"

#include <algorithm>

namespace nashcar {

namespace {

// m[k] for k = 0..n (m[0] unused).
std::vector<std::int64_t> weights_upto(const CArGerm& g, std::int64_t n) {
  std::vector<std::int64_t> m(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t k = 1; k <= n; ++k) m[static_cast<std::size_t>(k)] = weight_order(g.f, k);
  return m;
}

DivisorialValuation entry(ExpVec values, Rat disc, LabelKind kind, std::int64_t k, std::int64_t i) {
  DivisorialValuation v;
  v.values = std::move(values);
  v.nash = disc <= Rat(1);
  v.discrepancy = std::move(disc);
  v.label = Label{kind, k, i};
  return v;
}

ExpVec r_scaled(std::int64_t r, std::int64_t x, std::int64_t y, std::int64_t z) {
  return ExpVec::scaled(r, {x, y, z, r});
}

bool is_example_pair(const CArGerm& g) {
  // z^r + u^(2r) up to coefficients.
  const auto& t = g.f.terms();
  return g.r > 1 && t.size() == 2 && t.count({1, 0}) && t.count({0, 2 * g.r});
}

const char* kNash = "discrepancy at most 1: Nash valuation";
const char* kRange = "q-factorial range m_(k-r) - floor((k-r)a/r) <= i <= m_k - m_(k-r) - ceil((k-r)a/r)";
const char* kBelow = "v(x) or v(y) below m_(k-r): center on a blow-up is a curve";
const char* kOpen = "no decision rule without q-factoriality";
const char* kWeightTwo = "weight-two condition 2i + j >= 2m holds in normalized coordinates";

}  // namespace

std::vector<std::int64_t> mk_table(const CArGerm& g, std::int64_t n) {
  auto m = weights_upto(g, n);
  m.erase(m.begin());
  return m;
}

std::int64_t mk_extent(const CArGerm& g) { return g.r > 1 ? 2 * g.r + delta(g.f) : 2 + bar_delta(g.f); }

std::vector<DivisorialValuation> closed_form_catalog(const CArGerm& g) {
  std::vector<DivisorialValuation> out;
  if (g.smooth) return out;
  const std::int64_t r = g.r;
  if (r == 1) {
    const std::int64_t m = g.m1;
    for (std::int64_t i = 1; i <= m - 1; ++i)
      out.push_back(entry(ExpVec::scaled(1, {i, m - i, 1, 1}), Rat(1), LabelKind::sigma, 1, i));
    return out;
  }
  const std::int64_t d = delta(g.f);
  const auto m = weights_upto(g, r + d);
  const auto mk = [&](std::int64_t k) { return m[static_cast<std::size_t>(k)]; };
  for (std::int64_t k = 1; k < r; ++k) {
    const std::int64_t ka = residue(k * g.a, r);
    for (std::int64_t i = 0; i <= mk(k) - 1; ++i)
      out.push_back(entry(r_scaled(r, ka + i * r, (mk(k) - i) * r - ka, k), Rat(k, r), LabelKind::sigma, k, i));
  }
  for (std::int64_t i = 1; i <= mk(r) - 1; ++i)
    out.push_back(entry(ExpVec::scaled(1, {i, mk(r) - i, 1, 1}), Rat(1), LabelKind::sigma, r, i));
  for (std::int64_t k0 = 1; k0 <= d; ++k0) {
    const std::int64_t k = r + k0;
    for (std::int64_t i = 1; i <= mk(k) - mk(k0) - 1; ++i)
      out.push_back(entry(r_scaled(r, k0 * g.a + i * r, (mk(k) - i) * r - k0 * g.a, k), Rat(k, r), LabelKind::tau, k, i));
  }
  return out;
}

std::vector<DivisorialValuation> nash_valuations(const CArGerm& g) {
  std::vector<DivisorialValuation> out;
  for (auto& v : closed_form_catalog(g)) {
    if (!v.nash) continue;
    v.essential = Tri::yes;
    v.provenance = kNash;
    out.push_back(std::move(v));
  }
  return out;
}

bool below_previous_weight(const CArGerm& g, const ExpVec& values) {
  const Rat kr = values[2] * Rat(g.r);
  if (!kr.is_integer() || values[3] != Rat(1)) return false;
  const std::int64_t k = kr.floor();
  if (k <= g.r) return false;
  const Rat bound(weight_order(g.f, k - g.r));
  return values[0] < bound || values[1] < bound;
}

EssentialResult essential_valuations(const CArGerm& g, Tri qf) {
  EssentialResult res;
  res.valuations = closed_form_catalog(g);
  const std::int64_t r = g.r;
  for (auto& v : res.valuations) {
    if (v.nash) {
      v.essential = Tri::yes;
      v.provenance = kNash;
    }
  }

  if (r == 1) {
    if (g.smooth) {
      res.verdict = surjectivity_verdict(g, qf);
      return res;
    }
    const NormalizedCoordinates nc = normalize_coordinates(g.f);
    const bool condition = weight_two_condition(nc.series);
    if (condition && qf != Tri::no) {
      auto tau = entry(ExpVec::scaled(1, {g.m1, g.m1, 2, 1}), Rat(2), LabelKind::tau, 2, g.m1);
      tau.essential = qf == Tri::yes ? Tri::yes : Tri::unknown;
      tau.provenance = qf == Tri::yes ? kWeightTwo : std::string(kWeightTwo) + "; q-factoriality undecided";
      res.valuations.push_back(std::move(tau));
    }
    res.verdict = surjectivity_verdict(g, qf);
    return res;
  }

  const auto m = weights_upto(g, 2 * r);
  for (auto& v : res.valuations) {
    if (v.nash) continue;
    const std::int64_t k = v.label.k, i = v.label.i, k0 = k - r;
    const bool below = below_previous_weight(g, v.values);
    if (qf == Tri::yes) {
      bool in_range = false;
      if (k <= 2 * r) {
        const std::int64_t mk = m[static_cast<std::size_t>(k)], mk0 = m[static_cast<std::size_t>(k0)];
        const std::int64_t lo = mk0 - floor_div(k0 * g.a, r);
        const std::int64_t hi = mk - mk0 - ceil_div(k0 * g.a, r);
        in_range = lo <= i && i <= hi;
      }
      require(in_range != below, ErrorKind::internal, "essential range and weight test disagree on " + v.label.str());
      v.essential = in_range ? Tri::yes : Tri::no;
      v.provenance = in_range ? kRange : kBelow;
    } else {
      v.essential = below ? Tri::no : Tri::unknown;
      v.provenance = below ? kBelow : kOpen;
    }
  }
  if (qf == Tri::yes && is_example_pair(g)) {
    res.notes.push_back("for z^r + u^(2r) the range rule admits (r,r,2,1) at k = 2r, so the essential count is r^2, "
                        "one more than the commonly quoted r^2 - 1");
  }
  res.verdict = surjectivity_verdict(g, qf);
  return res;
}

SurjectivityVerdict surjectivity_verdict(const CArGerm& g, Tri qf) {
  SurjectivityVerdict out;
  if (g.smooth) {
    out.surjective = Tri::yes;
    out.rule = "smooth point";
    return out;
  }
  const std::int64_t r = g.r;
  if (r == 1) {
    if (qf == Tri::no) {
      out.surjective = Tri::yes;
      out.rule = "non-q-factorial isolated cA point";
      return out;
    }
    const bool condition = weight_two_condition(normalize_coordinates(g.f).series);
    out.rule = "weight-two condition 2i + j >= 2m in normalized coordinates";
    if (!condition) {
      out.surjective = Tri::yes;
    } else {
      auto tau = entry(ExpVec::scaled(1, {g.m1, g.m1, 2, 1}), Rat(2), LabelKind::tau, 2, g.m1);
      tau.essential = qf == Tri::yes ? Tri::yes : Tri::unknown;
      tau.provenance = kWeightTwo;
      out.witnesses.push_back(std::move(tau));
      out.surjective = qf == Tri::yes ? Tri::no : Tri::unknown;
    }
    return out;
  }

  if (qf == Tri::yes) {
    const auto m = weights_upto(g, 2 * r);
    out.rule = "m_k < 2 m_(k-r) + (1 - [k = 2r]) for r+1 <= k <= 2r";
    bool all = true;
    for (std::int64_t k = r + 1; k <= 2 * r; ++k) {
      const std::int64_t mk = m[static_cast<std::size_t>(k)], mk0 = m[static_cast<std::size_t>(k - r)];
      const std::int64_t bound = 2 * mk0 + (k == 2 * r ? 0 : 1);
      out.criterion.push_back({k, mk, bound, mk < bound});
      all = all && mk < bound;
    }
    out.surjective = all ? Tri::yes : Tri::no;
  }
  // Witnesses: non-Nash catalog entries that are (or may be) essential.
  bool undecided = false;
  for (auto& v : closed_form_catalog(g)) {
    if (v.nash || below_previous_weight(g, v.values)) continue;
    if (qf == Tri::yes) {
      v.essential = Tri::yes;
      v.provenance = kRange;
    } else {
      v.essential = Tri::unknown;
      v.provenance = kOpen;
      undecided = true;
    }
    out.witnesses.push_back(std::move(v));
  }
  if (qf == Tri::yes) {
    require(out.witnesses.empty() == (out.surjective == Tri::yes), ErrorKind::internal,
            "surjectivity inequality and essential range disagree");
  } else {
    out.rule = "surjective iff no non-Nash divisor is essential; decided by the v(x), v(y) >= m_(k-r) test";
    out.surjective = undecided ? Tri::unknown : Tri::yes;
  }
  return out;
}

std::map<Rat, std::int64_t> count_by_discrepancy(const CArGerm& g) {
  std::map<Rat, std::int64_t> out;
  for (const auto& v : closed_form_catalog(g)) ++out[v.discrepancy];
  return out;
}

std::map<std::int64_t, std::int64_t> first_step_cyclic_counts(const CArGerm& g) {
  require(g.r > 1, ErrorKind::argument, "cyclic chart counts are for r > 1");
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t lambda = 1; lambda <= g.r; ++lambda)
    out[lambda] = (lambda == 1 || lambda == g.r) ? g.m1 - 1 : g.m1;
  return out;
}

}  // namespace nashcar
