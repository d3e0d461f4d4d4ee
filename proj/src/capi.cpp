#include "nashcar/nashcar.h"

#include <new>
#include <string>

#include "nashcar/report.hpp"

using namespace nashcar;

struct nashcar_germ {
  InputDoc doc;
  CArGerm germ;
  std::string json;
};

struct nashcar_run {
  RunResult result;
};

namespace {

thread_local std::string last_error;

nashcar_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::validation: return NASHCAR_E_VALIDATION;
    case ErrorKind::truncation: return NASHCAR_E_TRUNCATION;
    case ErrorKind::undecided: return NASHCAR_E_UNDECIDED;
    case ErrorKind::argument: return NASHCAR_E_ARGUMENT;
    case ErrorKind::internal: return NASHCAR_E_INTERNAL;
  }
  return NASHCAR_E_INTERNAL;
}

template <class Fn>
nashcar_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return NASHCAR_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unexpected exception";
  }
  return NASHCAR_E_INTERNAL;
}

void need(const void* p, const char* what) { require(p != nullptr, ErrorKind::argument, std::string(what) + " is NULL"); }

nashcar_tri tri(Tri t) {
  switch (t) {
    case Tri::yes: return NASHCAR_YES;
    case Tri::no: return NASHCAR_NO;
    case Tri::unknown: return NASHCAR_UNKNOWN;
  }
  return NASHCAR_UNKNOWN;
}

nashcar_status make_germ(InputDoc doc, nashcar_germ** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    const InvariantSeries f(doc.r, doc.f, doc.trunc);
    auto* h = new nashcar_germ{std::move(doc), CArGerm{}, {}};
    try {
      h->germ = validate_germ(h->doc.r, h->doc.a, f);
    } catch (...) {
      delete h;
      throw;
    }
    *out = h;
  });
}

}  // namespace

extern "C" {

NASHCAR_API const char* nashcar_last_error(void) { return last_error.c_str(); }

NASHCAR_API const char* nashcar_status_name(nashcar_status s) {
  switch (s) {
    case NASHCAR_OK: return "ok";
    case NASHCAR_E_VALIDATION: return "validation";
    case NASHCAR_E_TRUNCATION: return "truncation";
    case NASHCAR_E_UNDECIDED: return "undecided";
    case NASHCAR_E_ORACLE: return "oracle mismatch";
    case NASHCAR_E_ARGUMENT: return "argument";
    case NASHCAR_E_INTERNAL: return "internal";
  }
  return "unknown status";
}

NASHCAR_API nashcar_status nashcar_germ_new(int64_t r, int64_t a, const nashcar_term* terms, size_t count,
                                            int64_t trunc, nashcar_germ** out) {
  InputDoc doc;
  const nashcar_status st = guarded([&] {
    require(terms != nullptr || count == 0, ErrorKind::argument, "terms is NULL");
    doc.r = r;
    doc.a = a;
    doc.trunc = trunc;
    for (size_t k = 0; k < count; ++k) {
      need(terms[k].c, "term coefficient");
      require(terms[k].i >= 0 && terms[k].j >= 0, ErrorKind::validation, "negative exponent in f");
      doc.f.push_back({terms[k].i, terms[k].j, Rat::parse(terms[k].c)});
    }
  });
  if (st != NASHCAR_OK) {
    if (out) *out = nullptr;
    return st;
  }
  return make_germ(std::move(doc), out);
}

NASHCAR_API nashcar_status nashcar_germ_from_json(const char* document, nashcar_germ** out) {
  InputDoc doc;
  const nashcar_status st = guarded([&] {
    need(document, "document");
    doc = parse_input(std::string(document));
  });
  if (st != NASHCAR_OK) {
    if (out) *out = nullptr;
    return st;
  }
  return make_germ(std::move(doc), out);
}

NASHCAR_API void nashcar_germ_free(nashcar_germ* g) { delete g; }

NASHCAR_API nashcar_status nashcar_germ_mk(const nashcar_germ* g, int64_t k, int64_t* out) {
  return guarded([&] {
    need(g, "germ");
    need(out, "out");
    require(k >= 1, ErrorKind::argument, "k must be at least 1");
    *out = weight_order(g->germ.f, k);
  });
}

NASHCAR_API nashcar_status nashcar_germ_delta(const nashcar_germ* g, int64_t* out) {
  return guarded([&] {
    need(g, "germ");
    need(out, "out");
    const CArGerm& c = g->germ;
    *out = c.smooth ? 0 : (c.r > 1 ? delta(c.f) : bar_delta(c.f));
  });
}

NASHCAR_API nashcar_status nashcar_germ_is_smooth(const nashcar_germ* g, int* out) {
  return guarded([&] {
    need(g, "germ");
    need(out, "out");
    *out = g->germ.smooth ? 1 : 0;
  });
}

NASHCAR_API nashcar_status nashcar_germ_factor(const nashcar_germ* g, int64_t* branches, nashcar_certainty* certainty) {
  return guarded([&] {
    need(g, "germ");
    need(branches, "branches");
    need(certainty, "certainty");
    const FactorizationResult fr = factor_series(g->germ.f);
    *branches = fr.n;
    *certainty = fr.certainty == Certainty::certified   ? NASHCAR_CERTIFIED
                 : fr.certainty == Certainty::count_only ? NASHCAR_COUNT_ONLY
                                                         : NASHCAR_CERTAINTY_UNKNOWN;
  });
}

NASHCAR_API nashcar_status nashcar_germ_q_factorial(const nashcar_germ* g, nashcar_tri* out) {
  return guarded([&] {
    need(g, "germ");
    need(out, "out");
    *out = tri(is_q_factorial(g->germ));
  });
}

NASHCAR_API nashcar_status nashcar_germ_catalog_size(const nashcar_germ* g, size_t* out) {
  return guarded([&] {
    need(g, "germ");
    need(out, "out");
    *out = closed_form_catalog(g->germ).size();
  });
}

NASHCAR_API nashcar_status nashcar_germ_nash_count(const nashcar_germ* g, size_t* out) {
  return guarded([&] {
    need(g, "germ");
    need(out, "out");
    *out = nash_valuations(g->germ).size();
  });
}

NASHCAR_API nashcar_status nashcar_germ_essential_count(const nashcar_germ* g, size_t* yes, size_t* unknown) {
  return guarded([&] {
    need(g, "germ");
    need(yes, "yes");
    need(unknown, "unknown");
    const EssentialResult res = essential_valuations(g->germ, is_q_factorial(g->germ));
    *yes = *unknown = 0;
    for (const auto& v : res.valuations) {
      if (v.essential == Tri::yes) ++*yes;
      if (v.essential == Tri::unknown) ++*unknown;
    }
  });
}

NASHCAR_API nashcar_status nashcar_germ_surjective(const nashcar_germ* g, nashcar_tri* out) {
  return guarded([&] {
    need(g, "germ");
    need(out, "out");
    *out = tri(surjectivity_verdict(g->germ, is_q_factorial(g->germ)).surjective);
  });
}

NASHCAR_API nashcar_status nashcar_germ_oracle_check(const nashcar_germ* g, int* match) {
  return guarded([&] {
    need(g, "germ");
    need(match, "match");
    ReportOptions opts;
    opts.oracle = true;
    *match = analyze(g->doc, opts).oracle->match ? 1 : 0;
  });
}

NASHCAR_API nashcar_status nashcar_germ_report_json(nashcar_germ* g, const char** out) {
  return guarded([&] {
    need(g, "germ");
    need(out, "out");
    g->json = render_json(analyze(g->doc), Section::analyze).dump(2);
    *out = g->json.c_str();
  });
}

NASHCAR_API void nashcar_run_options_init(nashcar_run_options* opts) {
  if (!opts) return;
  opts->command = "analyze";
  opts->format = "table";
  opts->oracle = 0;
  opts->strict = 0;
  opts->trunc = 0;
  opts->max_k = 0;
}

NASHCAR_API nashcar_status nashcar_run_document(const char* document, const nashcar_run_options* opts, nashcar_run** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    need(document, "document");
    nashcar_run_options o;
    nashcar_run_options_init(&o);
    if (opts) o = *opts;
    RunOptions ro;
    const auto sec = section_from_name(o.command ? o.command : "analyze");
    require(sec.has_value(), ErrorKind::argument, std::string("unknown command \"") + o.command + "\"");
    const auto fmt = format_from_name(o.format ? o.format : "table");
    require(fmt.has_value(), ErrorKind::argument, std::string("unknown format \"") + o.format + "\"");
    ro.section = *sec;
    ro.format = *fmt;
    ro.strict = o.strict != 0;
    ro.report.oracle = o.oracle != 0;
    if (o.trunc > 0) ro.report.trunc = o.trunc;
    if (o.max_k > 0) ro.report.max_k = o.max_k;
    *out = new nashcar_run{run_document(document, ro)};
  });
}

NASHCAR_API const char* nashcar_run_output(const nashcar_run* run) { return run ? run->result.output.c_str() : ""; }
NASHCAR_API const char* nashcar_run_diagnostics(const nashcar_run* run) {
  return run ? run->result.diagnostics.c_str() : "";
}
NASHCAR_API int nashcar_run_exit_code(const nashcar_run* run) { return run ? run->result.exit_code : NASHCAR_E_ARGUMENT; }
NASHCAR_API void nashcar_run_free(nashcar_run* run) { delete run; }

}  // extern "C"
