#include "nashcar/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace nashcar {

namespace {

std::int64_t integer_field(const Json& doc, const char* key) {
  const auto it = doc.find(key);
  require(it != doc.end(), ErrorKind::validation, std::string("missing field \"") + key + "\"");
  require(it->is_number_integer(), ErrorKind::validation, std::string("field \"") + key + "\" must be an integer");
  return it->get<std::int64_t>();
}

Rat coefficient(const Json& c) {
  if (c.is_string()) return Rat::parse(c.get<std::string>());
  if (c.is_number_integer()) return Rat(static_cast<long>(c.get<std::int64_t>()));
  fail(ErrorKind::validation, "non-rational coefficient " + c.dump() + " (use an integer or a \"p/q\" string)");
}

std::vector<Term> term_list(const Json& list, const std::string& where) {
  require(list.is_array(), ErrorKind::validation, where + " must be an array of {i, j, c} records");
  std::vector<Term> out;
  for (const auto& t : list) {
    require(t.is_object(), ErrorKind::validation, where + " entries must be objects");
    Term term;
    term.i = integer_field(t, "i");
    term.j = integer_field(t, "j");
    require(term.i >= 0 && term.j >= 0, ErrorKind::validation, "negative exponent in " + where);
    const auto c = t.find("c");
    require(c != t.end(), ErrorKind::validation, "missing field \"c\" in " + where);
    term.c = coefficient(*c);
    out.push_back(std::move(term));
  }
  return out;
}

Json terms_json(const std::vector<Term>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back({{"i", t.i}, {"j", t.j}, {"c", t.c.str()}});
  return out;
}

std::string sorted_key(const ExpVec& v, const Rat& d) { return v.str() + " a=" + d.str(); }

OracleCheck oracle_check(const CArGerm& g, const ResolutionTree& tree) {
  OracleCheck out;
  std::vector<std::string> formula, resolved;
  for (const auto& v : closed_form_catalog(g)) formula.push_back(sorted_key(v.values, v.discrepancy));
  for (const auto& d : tree.divisors) resolved.push_back(sorted_key(d.values, d.discrepancy));
  std::sort(formula.begin(), formula.end());
  std::sort(resolved.begin(), resolved.end());
  out.formula_count = formula.size();
  out.resolution_count = resolved.size();
  std::set_difference(formula.begin(), formula.end(), resolved.begin(), resolved.end(),
                      std::back_inserter(out.only_formula));
  std::set_difference(resolved.begin(), resolved.end(), formula.begin(), formula.end(),
                      std::back_inserter(out.only_resolution));
  out.match = out.only_formula.empty() && out.only_resolution.empty();
  return out;
}

}  // namespace

InputDoc parse_input(const Json& doc) {
  require(doc.is_object(), ErrorKind::validation, "malformed document: expected a JSON object");
  InputDoc out;
  out.r = integer_field(doc, "r");
  if (doc.contains("a"))
    out.a = integer_field(doc, "a");
  else
    require(out.r == 1, ErrorKind::validation, "missing field \"a\" (only optional when r = 1)");
  const auto f = doc.find("f");
  require(f != doc.end(), ErrorKind::validation, "missing field \"f\"");
  out.f = term_list(*f, "f");
  if (doc.contains("trunc")) out.trunc = integer_field(doc, "trunc");
  if (const auto it = doc.find("f_factors"); it != doc.end()) {
    require(it->is_array(), ErrorKind::validation, "f_factors must be an array of term lists");
    std::vector<std::vector<Term>> factors;
    for (std::size_t k = 0; k < it->size(); ++k)
      factors.push_back(term_list((*it)[k], "f_factors[" + std::to_string(k) + "]"));
    out.f_factors = std::move(factors);
  }
  if (const auto it = doc.find("options"); it != doc.end()) {
    require(it->is_object(), ErrorKind::validation, "options must be an object");
    out.options = *it;
  }
  return out;
}

InputDoc parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::validation, std::string("malformed document: ") + e.what());
  }
  return parse_input(doc);
}

Json input_json(const InputDoc& d) {
  Json out;
  out["r"] = d.r;
  out["a"] = d.a;
  out["f"] = terms_json(d.f);
  out["trunc"] = d.trunc;
  if (d.f_factors) {
    Json fs = Json::array();
    for (const auto& t : *d.f_factors) fs.push_back(terms_json(t));
    out["f_factors"] = std::move(fs);
  }
  if (!d.options.empty()) out["options"] = d.options;
  return out;
}

std::optional<Section> section_from_name(const std::string& name) {
  static const std::pair<const char*, Section> names[] = {
      {"analyze", Section::analyze}, {"mk", Section::mk},           {"nash", Section::nash},
      {"essential", Section::essential}, {"resolve", Section::resolve}, {"factor", Section::factor},
      {"oracle-check", Section::oracle}};
  for (const auto& [n, s] : names)
    if (name == n) return s;
  return std::nullopt;
}

std::optional<Format> format_from_name(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  return std::nullopt;
}

bool Report::has_unknown() const {
  if (q_factorial == Tri::unknown || verdict.surjective == Tri::unknown) return true;
  return std::any_of(valuations.begin(), valuations.end(),
                     [](const DivisorialValuation& v) { return v.essential == Tri::unknown; });
}

Report analyze(const InputDoc& doc, const ReportOptions& opts) {
  Report rep;
  rep.input = doc;
  const std::int64_t trunc = opts.trunc.value_or(doc.trunc);
  const InvariantSeries f(doc.r, doc.f, trunc);
  rep.germ = validate_germ(doc.r, doc.a, f);
  const CArGerm& g = rep.germ;

  rep.delta_name = g.r > 1 ? "delta" : "bar_delta";
  rep.delta = g.smooth ? 0 : (g.r > 1 ? delta(g.f) : bar_delta(g.f));
  const std::int64_t extent = opts.max_k.value_or(g.smooth ? 2 : mk_extent(g));
  require(extent >= 1, ErrorKind::argument, "--max-k must be at least 1");
  rep.mk = mk_table(g, extent);

  try {
    if (doc.f_factors) {
      std::vector<InvariantSeries> factors;
      for (const auto& t : *doc.f_factors) factors.emplace_back(doc.r, t, trunc);
      rep.factorization = verify_factors(g.f, factors);
    } else {
      rep.factorization = factor_series(g.f);
    }
    rep.q_factorial = q_factorial_verdict(rep.factorization);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::truncation) throw;
    rep.factor_error = e;
    rep.factorization = FactorizationResult{};
    rep.factorization.picard = "unknown";
    rep.q_factorial = Tri::unknown;
    rep.notes.push_back(std::string("factorization: ") + e.what());
  }
  for (const auto& n : rep.factorization.notes) rep.notes.push_back("factorization: " + n);

  EssentialResult ess = essential_valuations(g, rep.q_factorial);
  rep.valuations = std::move(ess.valuations);
  rep.verdict = std::move(ess.verdict);
  for (auto& n : ess.notes) rep.notes.push_back(std::move(n));

  if (rep.q_factorial == Tri::no) {
    const auto& br = rep.factorization.branches;
    if (std::all_of(br.begin(), br.end(), [](std::int64_t b) { return b == 1; })) {
      const QFactorialization qf = q_factorialization_components(g, rep.factorization);
      for (const auto& c : qf.components) {
        ComponentSummary s{c.f.str(), c.m1, 0};
        try {
          s.nash_count = nash_valuations(validate_germ(c.r, c.a, c.f)).size();
        } catch (const Error&) {
          s.nash_count = 0;
        }
        rep.components.push_back(std::move(s));
      }
      rep.curves = qf.curves;
    }
  }

  if (g.smooth) rep.notes.emplace_back("smooth point");
  if (rep.q_factorial == Tri::unknown)
    rep.notes.emplace_back("Q-factoriality undecided: essential flags use only the rules valid without it");
  const bool open = std::any_of(rep.valuations.begin(), rep.valuations.end(),
                                [](const DivisorialValuation& v) { return v.essential == Tri::unknown; });
  if (open)
    rep.notes.emplace_back("essential=unknown: for a germ that is not known to be Q-factorial, a non-Nash divisor is "
                           "decided only when v(x) or v(y) falls below m_(k-r)");
  if (rep.verdict.surjective == Tri::unknown) rep.notes.emplace_back("surjectivity undecided: see the open entries");

  if (opts.oracle || opts.with_tree) {
    ResolutionTree tree = gorenstein_resolution(g);
    if (opts.oracle) rep.oracle = oracle_check(g, tree);
    for (const auto& n : tree.notes) rep.notes.push_back("resolution: " + n);
    if (opts.with_tree) rep.tree = std::move(tree);
  }
  return rep;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::truncation: return kExitTruncation;
    case ErrorKind::undecided: return kExitUndecided;
    case ErrorKind::validation:
    case ErrorKind::argument:
    case ErrorKind::internal: return kExitValidation;
  }
  return kExitValidation;
}

namespace {

Json valuation_json(const DivisorialValuation& v) {
  Json values = Json::array();
  for (std::size_t k = 0; k < v.values.size(); ++k) values.push_back(v.values[k].str());
  return {{"label", v.label.str()},       {"values", std::move(values)},  {"display", v.values.str()},
          {"discrepancy", v.discrepancy.str()}, {"nash", v.nash}, {"essential", to_string(v.essential)},
          {"provenance", v.provenance}};
}

Json valuations_json(const std::vector<DivisorialValuation>& vs, bool nash_only = false) {
  Json out = Json::array();
  for (const auto& v : vs)
    if (!nash_only || v.nash) out.push_back(valuation_json(v));
  return out;
}

Json germ_json(const Report& rep) {
  const CArGerm& g = rep.germ;
  return {{"r", g.r},
          {"a", g.a},
          {"f", g.f.str()},
          {"trunc", {{"slope", g.f.truncation().slope}, {"bound", g.f.trunc()}}},
          {"m1", g.m1},
          {"smooth", g.smooth}};
}

Json mk_json(const Report& rep) {
  Json out = Json::array();
  for (std::size_t k = 0; k < rep.mk.size(); ++k) out.push_back({{"k", k + 1}, {"m", rep.mk[k]}});
  return out;
}

Json factor_json(const Report& rep) {
  const FactorizationResult& fr = rep.factorization;
  Json factors = Json::array();
  for (std::size_t k = 0; k < fr.factors.size(); ++k)
    factors.push_back({{"f", fr.factors[k].str()}, {"branches", fr.branches[k]}});
  Json out{{"verdict", to_string(rep.q_factorial)},
           {"factor_count", fr.n},
           {"certainty", to_string(fr.certainty)},
           {"picard", fr.picard},
           {"factors", std::move(factors)}};
  if (rep.factor_error) out["error"] = rep.factor_error->what();
  return out;
}

Json polygon_json(const InvariantSeries& f) {
  const NewtonPolygon np = newton_polygon(f);
  Json verts = Json::array(), segs = Json::array();
  for (const auto& v : np.vertices) verts.push_back(Json::array({v.first, v.second}));
  for (const auto& s : np.segments)
    segs.push_back({{"slope", Rat(s.p, s.q).str()}, {"length", s.length}, {"lattice_length", s.lattice_length}});
  return {{"vertices", std::move(verts)}, {"segments", std::move(segs)}};
}

Json surjectivity_json(const SurjectivityVerdict& v) {
  Json crit = Json::array(), wit = Json::array();
  for (const auto& c : v.criterion) crit.push_back({{"k", c.k}, {"m_k", c.mk}, {"bound", c.bound}, {"holds", c.holds}});
  for (const auto& w : v.witnesses) wit.push_back(w.label.str());
  return {{"verdict", to_string(v.surjective)}, {"rule", v.rule}, {"criterion", std::move(crit)},
          {"witnesses", std::move(wit)}};
}

Json components_json(const Report& rep) {
  Json comps = Json::array();
  for (const auto& c : rep.components) comps.push_back({{"f", c.f}, {"m1", c.m1}, {"nash_count", c.nash_count}});
  return {{"germs", std::move(comps)}, {"curves", valuations_json(rep.curves)}};
}

const char* source_name(DivisorSource s) {
  switch (s) {
    case DivisorSource::w_morphism: return "w-morphism";
    case DivisorSource::cyclic_point: return "cyclic-point";
    case DivisorSource::ordinary_blowup: return "blow-up";
  }
  return "";
}

Json tree_json(const ResolutionTree& t) {
  Json steps = Json::array(), points = Json::array(), divs = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"step", s.step},
                     {"weight", s.weight.vector().str()},
                     {"U_x", s.ux.space.str()},
                     {"U_y", s.uy.space.str()},
                     {"U_u", s.germ_after.str()},
                     {"terminal", s.terminal}});
  for (const auto& p : t.quotient_points) points.push_back({{"step", p.step}, {"chart", p.chart}, {"space", p.space.str()}});
  for (const auto& d : t.divisors)
    divs.push_back({{"values", d.values.str()},
                    {"discrepancy", d.discrepancy.str()},
                    {"source", source_name(d.source)},
                    {"step", d.step},
                    {"point", d.point}});
  return {{"steps", std::move(steps)}, {"quotient_points", std::move(points)}, {"divisors", std::move(divs)}};
}

Json oracle_json(const OracleCheck& o) {
  return {{"match", o.match},
          {"formula_count", o.formula_count},
          {"resolution_count", o.resolution_count},
          {"only_formula", o.only_formula},
          {"only_resolution", o.only_resolution}};
}

std::size_t count_if_essential(const Report& rep, Tri t) {
  return static_cast<std::size_t>(std::count_if(rep.valuations.begin(), rep.valuations.end(),
                                                [t](const DivisorialValuation& v) { return v.essential == t; }));
}

Json counts_json(const Report& rep) {
  const auto nash = std::count_if(rep.valuations.begin(), rep.valuations.end(),
                                  [](const DivisorialValuation& v) { return v.nash; });
  return {{"divisors", rep.valuations.size()},
          {"nash", nash},
          {"essential_yes", count_if_essential(rep, Tri::yes)},
          {"essential_unknown", count_if_essential(rep, Tri::unknown)}};
}

}  // namespace

Json render_json(const Report& rep, Section s) {
  Json out;
  out["input"] = input_json(rep.input);
  out["germ"] = germ_json(rep);
  switch (s) {
    case Section::mk:
      out["m_k"] = mk_json(rep);
      out[rep.delta_name] = rep.delta;
      break;
    case Section::nash:
      out["nash"] = valuations_json(rep.valuations, true);
      break;
    case Section::essential:
      out["q_factorial"] = factor_json(rep);
      out["valuations"] = valuations_json(rep.valuations);
      out["counts"] = counts_json(rep);
      out["surjectivity"] = surjectivity_json(rep.verdict);
      break;
    case Section::resolve:
      if (rep.tree) out["resolution"] = tree_json(*rep.tree);
      break;
    case Section::factor:
      out["newton_polygon"] = polygon_json(rep.germ.f);
      out["factorization"] = factor_json(rep);
      if (!rep.components.empty()) out["q_factorialization"] = components_json(rep);
      break;
    case Section::oracle:
      break;
    case Section::analyze:
      out["m_k"] = mk_json(rep);
      out[rep.delta_name] = rep.delta;
      out["q_factorial"] = factor_json(rep);
      out["valuations"] = valuations_json(rep.valuations);
      out["counts"] = counts_json(rep);
      out["surjectivity"] = surjectivity_json(rep.verdict);
      if (!rep.components.empty()) out["q_factorialization"] = components_json(rep);
      break;
  }
  if (rep.oracle) out["oracle"] = oracle_json(*rep.oracle);
  out["notes"] = rep.notes;
  return out;
}

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++n;
  return n;
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& os, const std::string& indent) const {
    std::vector<std::size_t> widths(rows_.front().size(), 0);
    for (const auto& row : rows_)
      for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], display_width(row[c]));
    for (const auto& row : rows_) {
      std::string line = indent;
      for (std::size_t c = 0; c < row.size(); ++c) line += c + 1 == row.size() ? row[c] : pad(row[c], widths[c] + 2);
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void write_valuations(std::ostream& os, const std::vector<DivisorialValuation>& vs, bool nash_only) {
  Table t({"label", "values", "discrepancy", "nash", "essential", "provenance"});
  std::size_t n = 0;
  for (const auto& v : vs) {
    if (nash_only && !v.nash) continue;
    t.add({v.label.str(), v.values.str(), v.discrepancy.str(), yes_no(v.nash), to_string(v.essential), v.provenance});
    ++n;
  }
  if (n == 0) {
    os << "  (none)\n";
    return;
  }
  t.write(os, "  ");
}

void write_germ(std::ostream& os, const Report& rep) {
  const CArGerm& g = rep.germ;
  os << "germ         r=" << g.r << " a=" << g.a << "  xy = " << g.f.str() << "  (trunc " << g.f.trunc() << ")\n";
}

void write_mk(std::ostream& os, const Report& rep) {
  std::vector<std::string> ks{"k"}, ms{"m_k"};
  for (std::size_t k = 0; k < rep.mk.size(); ++k) {
    ks.push_back(std::to_string(k + 1));
    ms.push_back(std::to_string(rep.mk[k]));
  }
  Table grid(ks);
  grid.add(ms);
  grid.write(os, "  ");
  os << pad(rep.delta_name, 13) << rep.delta << '\n';
}

void write_factorization(std::ostream& os, const Report& rep) {
  const FactorizationResult& fr = rep.factorization;
  os << "Q-factorial  " << to_string(rep.q_factorial) << "  (" << fr.n << " branch" << (fr.n == 1 ? "" : "es") << ", "
     << to_string(fr.certainty) << "; Pic(X-O) = " << fr.picard << ")\n";
  for (std::size_t k = 0; k < fr.factors.size(); ++k)
    os << "  f_" << k + 1 << " = " << fr.factors[k].str() << (fr.branches[k] > 1 ? "  [" + std::to_string(fr.branches[k]) + " branches]" : "")
       << '\n';
}

void write_components(std::ostream& os, const Report& rep) {
  if (rep.components.empty()) return;
  os << "components\n";
  Table t({"f_i", "m1", "nash"});
  for (const auto& c : rep.components) t.add({c.f, std::to_string(c.m1), std::to_string(c.nash_count)});
  t.write(os, "  ");
  write_valuations(os, rep.curves, false);
}

void write_surjectivity(std::ostream& os, const Report& rep) {
  const SurjectivityVerdict& v = rep.verdict;
  os << "surjective   " << to_string(v.surjective) << "  (" << v.rule << ")\n";
  if (!v.criterion.empty()) {
    Table t({"k", "m_k", "bound", "m_k < bound"});
    for (const auto& c : v.criterion) t.add({std::to_string(c.k), std::to_string(c.mk), std::to_string(c.bound), yes_no(c.holds)});
    t.write(os, "  ");
  }
  if (!v.witnesses.empty()) {
    std::string labels;
    for (const auto& w : v.witnesses) labels += (labels.empty() ? "" : ", ") + w.label.str();
    os << "  witnesses: " << labels << '\n';
  }
}

void write_tree(std::ostream& os, const ResolutionTree& tree) {
  for (const auto& s : tree.steps)
    os << "  step " << s.step << "  weight " << s.weight.vector().str() << "  U_x " << s.ux.space.str() << "  U_y "
       << s.uy.space.str() << "  U_u: " << s.germ_after.str() << (s.terminal ? "  (smooth)" : "") << '\n';
  if (!tree.quotient_points.empty()) {
    Table t({"step", "chart", "point"});
    for (const auto& p : tree.quotient_points) t.add({std::to_string(p.step), p.chart, p.space.str()});
    t.write(os, "  ");
  }
  Table t({"values", "discrepancy", "source", "step", "point"});
  for (const auto& d : tree.divisors)
    t.add({d.values.str(), d.discrepancy.str(), source_name(d.source), std::to_string(d.step), d.point});
  t.write(os, "  ");
}

void write_oracle(std::ostream& os, const OracleCheck& o) {
  os << "oracle       " << (o.match ? "match" : "MISMATCH") << "  (formula " << o.formula_count << ", resolution "
     << o.resolution_count << ")\n";
  for (const auto& s : o.only_formula) os << "  formula only: " << s << '\n';
  for (const auto& s : o.only_resolution) os << "  resolution only: " << s << '\n';
}

void write_notes(std::ostream& os, const Report& rep) {
  if (rep.notes.empty()) return;
  os << "notes\n";
  for (const auto& n : rep.notes) os << "  - " << n << '\n';
}

}  // namespace

std::string render_table(const Report& rep, Section s) {
  std::ostringstream os;
  write_germ(os, rep);
  switch (s) {
    case Section::mk:
      write_mk(os, rep);
      break;
    case Section::nash:
      os << "nash valuations\n";
      write_valuations(os, rep.valuations, true);
      break;
    case Section::essential:
      write_factorization(os, rep);
      os << "valuations\n";
      write_valuations(os, rep.valuations, false);
      write_surjectivity(os, rep);
      break;
    case Section::resolve:
      os << "resolution\n";
      if (rep.tree) write_tree(os, *rep.tree);
      break;
    case Section::factor: {
      const NewtonPolygon np = newton_polygon(rep.germ.f);
      os << "polygon     ";
      for (const auto& v : np.vertices) os << " (" << v.first << "," << v.second << ")";
      os << '\n';
      write_factorization(os, rep);
      write_components(os, rep);
      break;
    }
    case Section::oracle:
      break;
    case Section::analyze:
      write_mk(os, rep);
      write_factorization(os, rep);
      os << "valuations\n";
      write_valuations(os, rep.valuations, false);
      write_surjectivity(os, rep);
      write_components(os, rep);
      break;
  }
  if (rep.oracle) write_oracle(os, *rep.oracle);
  write_notes(os, rep);
  return os.str();
}

std::string render(const Report& rep, Section s, Format f) {
  return f == Format::json ? render_json(rep, s).dump(2) + "\n" : render_table(rep, s);
}

namespace {

struct EntryResult {
  Json json;
  std::string text;
  std::string diagnostics;
  int exit_code = kExitOk;
};

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::truncation: return "truncation";
    case ErrorKind::undecided: return "undecided";
    case ErrorKind::argument: return "argument";
    case ErrorKind::internal: return "internal";
  }
  return "internal";
}

bool undecided_for(const Report& rep, Section s) {
  switch (s) {
    case Section::analyze:
    case Section::essential: return rep.has_unknown();
    case Section::factor: return rep.q_factorial == Tri::unknown;
    default: return false;
  }
}

EntryResult run_entry(const Json& doc, const RunOptions& opts) {
  EntryResult out;
  try {
    ReportOptions ro = opts.report;
    if (opts.section == Section::oracle) ro.oracle = true;
    if (opts.section == Section::resolve) ro.with_tree = true;
    const Report rep = analyze(parse_input(doc), ro);
    if (opts.format == Format::json)
      out.json = render_json(rep, opts.section);
    else
      out.text = render_table(rep, opts.section);
    if (opts.section == Section::factor && rep.factor_error) {
      out.exit_code = kExitTruncation;
      out.diagnostics = std::string("truncation: ") + rep.factor_error->what();
    } else if (rep.oracle && !rep.oracle->match) {
      out.exit_code = kExitOracle;
      out.diagnostics = "oracle: closed-form catalog and resolution disagree";
    } else if (opts.strict && undecided_for(rep, opts.section)) {
      out.exit_code = kExitUndecided;
      out.diagnostics = "undecided: --strict requires every verdict to be decided";
    }
  } catch (const Error& e) {
    out.exit_code = exit_code_for(e.kind());
    out.diagnostics = std::string(kind_name(e.kind())) + ": " + e.what();
    out.json = {{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}};
    out.text = std::string("error        ") + kind_name(e.kind()) + ": " + e.what() + "\n";
  }
  return out;
}

}  // namespace

RunResult run_document(const std::string& text, const RunOptions& opts) {
  RunResult res;
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    res.exit_code = kExitValidation;
    res.diagnostics = std::string("validation: malformed document: ") + e.what() + "\n";
    return res;
  }
  if (!doc.is_array()) {
    EntryResult e = run_entry(doc, opts);
    if (opts.format == Format::json)
      res.output = e.json.dump(2) + "\n";
    else if (!e.json.contains("error"))
      res.output = e.text;
    res.exit_code = e.exit_code;
    if (!e.diagnostics.empty()) res.diagnostics = e.diagnostics + "\n";
    return res;
  }

  std::vector<EntryResult> results(doc.size());
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::min<std::size_t>(doc.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < results.size(); k = next++) results[k] = run_entry(doc[k], opts);
    });
  for (auto& t : pool) t.join();

  Json arr = Json::array();
  std::ostringstream text_out, diag;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const EntryResult& e = results[k];
    if (opts.format == Format::json)
      arr.push_back(e.json);
    else
      text_out << (k ? "\n" : "") << "== entry " << k + 1 << " ==\n" << e.text;
    if (!e.diagnostics.empty()) diag << "entry " << k + 1 << ": " << e.diagnostics << '\n';
    res.exit_code = std::max(res.exit_code, e.exit_code);
  }
  res.output = opts.format == Format::json ? arr.dump(2) + "\n" : text_out.str();
  res.diagnostics = diag.str();
  return res;
}

}  // namespace nashcar
