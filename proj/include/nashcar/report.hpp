#pragma once

// Input documents, analysis orchestration and report rendering.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nashcar/catalog.hpp"
#include "nashcar/qfactorial.hpp"
#include "nashcar/resolution.hpp"

namespace nashcar {

using Json = nlohmann::ordered_json;

struct InputDoc {
  std::int64_t r = 1;
  std::int64_t a = 0;
  std::vector<Term> f;
  std::int64_t trunc = 64;
  std::optional<std::vector<std::vector<Term>>> f_factors;
  Json options = Json::object();

  friend bool operator==(const InputDoc&, const InputDoc&) = default;
};

/// One germ document. Throws Error(validation) on malformed input.
InputDoc parse_input(const Json& doc);
InputDoc parse_input(const std::string& text);

/// Canonical echo of the input; parse_input(input_json(d)) == d.
Json input_json(const InputDoc& d);

enum class Section { analyze, mk, nash, essential, resolve, factor, oracle };
enum class Format { table, json };

std::optional<Section> section_from_name(const std::string& name);
std::optional<Format> format_from_name(const std::string& name);

struct ReportOptions {
  bool oracle = false;
  std::optional<std::int64_t> trunc;  // overrides the document's trunc
  std::optional<std::int64_t> max_k;  // m_k table length
  bool with_tree = false;
};

struct OracleCheck {
  bool match = false;
  std::size_t formula_count = 0;
  std::size_t resolution_count = 0;
  std::vector<std::string> only_formula;
  std::vector<std::string> only_resolution;
};

struct ComponentSummary {
  std::string f;
  std::int64_t m1 = 0;
  std::size_t nash_count = 0;
};

struct Report {
  InputDoc input;
  CArGerm germ;
  std::vector<std::int64_t> mk;
  std::string delta_name;  // "delta" or "bar_delta"
  std::int64_t delta = 0;
  FactorizationResult factorization;
  std::optional<Error> factor_error;
  Tri q_factorial = Tri::unknown;
  std::vector<DivisorialValuation> valuations;
  SurjectivityVerdict verdict;
  std::vector<ComponentSummary> components;
  std::vector<DivisorialValuation> curves;
  std::optional<OracleCheck> oracle;
  std::optional<ResolutionTree> tree;
  std::vector<std::string> notes;

  bool has_unknown() const;
};

/// validate, m_k and delta, factorization, catalog, classification, verdict.
Report analyze(const InputDoc& doc, const ReportOptions& opts = {});

Json render_json(const Report& rep, Section s);
std::string render_table(const Report& rep, Section s);
std::string render(const Report& rep, Section s, Format f);

/// Runs a whole document (one germ or a batch array) and renders it.
struct RunOptions {
  Section section = Section::analyze;
  Format format = Format::table;
  ReportOptions report;
  bool strict = false;
};

struct RunResult {
  std::string output;
  std::string diagnostics;
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitTruncation = 2;
inline constexpr int kExitUndecided = 3;
inline constexpr int kExitOracle = 4;

int exit_code_for(ErrorKind kind);

RunResult run_document(const std::string& text, const RunOptions& opts);

}  // namespace nashcar
