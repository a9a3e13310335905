#pragma once

// Analysis orchestration and report serialization (json, csv, text).

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddr/asymptotics.hpp"
#include "ddr/bounds.hpp"
#include "ddr/designs.hpp"
#include "ddr/empirics.hpp"
#include "ddr/io.hpp"
#include "ddr/numeric.hpp"
#include "ddr/spaces.hpp"

namespace ddr {

struct ReportBoundRow {
  Rational x, fd, fx, gap, lambda;
  std::optional<Rational> corollary;
  bool satisfied = false;
  std::optional<bool> corollary_satisfied;
  std::optional<double> envelope_lower;
  std::optional<double> envelope_upper;
  bool envelope_ok = true;

  friend bool operator==(const ReportBoundRow&, const ReportBoundRow&) = default;
};

struct ReportFixedPointRow {
  Rational x, gd, bound;
  double poisson = 0, printed = 0, gap = 0;
  bool satisfied = false;

  friend bool operator==(const ReportFixedPointRow&, const ReportFixedPointRow&) = default;
};

struct ReportNormalGap {
  Rational x;
  double gap = 0;

  friend bool operator==(const ReportNormalGap&, const ReportNormalGap&) = default;
};

struct AnalysisReport {
  SpaceDescriptor space;
  std::size_t size = 0;
  std::vector<Rational> frequencies;
  std::vector<Rational> dual_numerators;
  int capacity = 0;
  int strength_moments = 0;
  int strength_dual = 0;
  bool capacity_reached = false;
  std::optional<int> combinatorial_strength;
  std::optional<Integer> eta;
  bool strengths_agree = true;
  std::optional<int> t;
  std::optional<int> kappa;
  std::optional<std::string> corollary;
  std::vector<ReportBoundRow> bounds;
  std::vector<ReportFixedPointRow> fixed_point;
  std::vector<ReportNormalGap> normal_gaps;
  std::vector<std::string> warnings;
  bool violated = false;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  bool bounds = true;              // false for `strength`
  std::optional<int> t;            // default: certified strength
  std::optional<Rational> grid;    // default: integer x
  PairOptions pairs;
};

namespace warning_text {

inline std::string fx_normalization(const SpaceDescriptor& s, std::size_t d) {
  return "F_X is normalized by |X| = " + s.cardinality.get_str() + " (q^n), not by |D| = " + std::to_string(d);
}
inline std::string hahn_normalization() {
  return "orthonormal Hahn polynomials are H_k/sqrt(m_k), m_k = C(nu,k) - C(nu,k-1); H_k/sqrt(v_k) is not normalized";
}
inline std::string poisson_law() {
  return "reference law sum_{1<=i<=x} 1/i! exceeds 1 and is not a c.d.f.; the Poisson(1) c.d.f. sum_{0<=i<=x} e^-1/i! is used "
         "(both are reported)";
}
inline std::string capacity(int n) {
  return "strength reached N(X) = " + std::to_string(n) + "; higher moments cannot be certified by the polynomial method";
}
inline std::string kernel_ratio(double lambda, double alt_lambda) {
  return "limiting kernel ratio taken as (1-x/q)^2/(pq), the square of the Hahn limit (lambda = " + format_decimal(lambda) +
         "); reading it as (1-x/q)^2/sqrt(pq) gives lambda = " + format_decimal(alt_lambda);
}
inline std::string qary_corollary(int q) {
  return "q-ary closed form n/(n+(n(q-1)-qx)^2) is only the kappa=1 lambda for q = 2; with q = " + std::to_string(q) +
         " lambda is n(q-1)/(n(q-1)+(n(q-1)-qx)^2) and the closed form can fail for genuine strength-2 arrays";
}
inline std::string envelope_nodes() {
  return "Markov-Stieltjes nodes are the quadrature rule through x (zeros of p_{k+1}(t)p_k(x) - p_k(t)p_{k+1}(x)); "
         "fixed zeros of p_k alone do not bound F from below";
}

}  // namespace warning_text

inline AnalysisReport run_analyze(const PointSet& set, const AnalyzeOptions& options = {}) {
  const auto& space = set.space();
  AnalysisReport r;
  r.space = space;
  r.size = set.size();

  const auto design = design_report(set, options.pairs);
  r.frequencies = design.frequencies.values;
  r.dual_numerators = design.dual.numerators;
  r.capacity = design.capacity;
  r.strength_moments = design.strength_moments;
  r.strength_dual = design.strength_dual;
  r.capacity_reached = design.capacity_reached;
  r.combinatorial_strength = design.combinatorial_strength;
  r.eta = design.eta;
  r.strengths_agree = design.agree;
  if (design.capacity_reached) r.warnings.push_back(warning_text::capacity(design.capacity));
  if (space.family == Family::johnson) r.warnings.push_back(warning_text::hahn_normalization());

  if (!options.bounds) return r;

  const int t = options.t.value_or(design.strength_moments);
  const auto xs = evaluation_grid(space, options.grid);
  const auto b = theorem9_check(set, t, xs, options.pairs);
  r.t = b.t;
  r.kappa = b.kappa;
  if (b.corollary) r.corollary = std::string(to_string(*b.corollary));
  for (const auto& row : b.rows) {
    ReportBoundRow out{row.x, row.fd, row.fx, row.gap, row.lambda, row.corollary, row.satisfied, row.corollary_satisfied,
                       std::nullopt, std::nullopt, row.envelope_contains_d && row.envelope_contains_x};
    if (row.envelope) {
      out.envelope_lower = row.envelope->lower;
      out.envelope_upper = row.envelope->upper;
    }
    r.violated = r.violated || !out.satisfied || !out.envelope_ok || (out.corollary_satisfied && !*out.corollary_satisfied);
    r.bounds.push_back(std::move(out));
  }
  if (b.corollary == CorollaryKind::qary_strength2 && space.q > 2) r.warnings.push_back(warning_text::qary_corollary(space.q));
  if (b.kappa >= 1) r.warnings.push_back(warning_text::envelope_nodes());
  if (space.family == Family::hamming) r.warnings.push_back(warning_text::fx_normalization(space, set.size()));

  if (space.family == Family::hamming && space.q == 2) {
    for (const auto& row : b.rows) r.normal_gaps.push_back({row.x, normal_gap(row.fd, space.n, to_double(row.x))});
    r.warnings.push_back(linear_strength_regime_status());
  }

  if (space.family == Family::symmetric && design.combinatorial_strength && *design.combinatorial_strength >= 2) {
    for (const auto& x : xs) {
      const auto fp = fixed_point_cdf_bound(set, x);
      r.fixed_point.push_back({fp.x, fp.gd, fp.bound, fp.poisson, fp.printed, fp.gap, fp.satisfied});
      r.violated = r.violated || !fp.satisfied;
    }
    r.warnings.push_back(warning_text::poisson_law());
  }
  return r;
}

inline AnalysisReport run_analyze(const InputDocument& doc, const AnalyzeOptions& options = {}) {
  return run_analyze(doc.point_set(), options);
}

// ---- serialization ------------------------------------------------------------------------

namespace detail {

using nlohmann::ordered_json;

inline ordered_json rational_json(const Rational& v) {
  return ordered_json{{"exact", exact_string(v)}, {"decimal", format_decimal(to_double(v))}};
}

inline Rational rational_from(const ordered_json& j) { return parse_rational(j.at("exact").get<std::string>()); }

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

inline ordered_json space_json(const SpaceDescriptor& s) {
  ordered_json params = ordered_json::array();
  switch (s.family) {
    case Family::hamming: params = {s.n, s.q}; break;
    case Family::johnson: params = {s.n, s.d}; break;
    case Family::symmetric: params = {s.n}; break;
  }
  ordered_json val = ordered_json::array();
  for (const auto& v : s.valencies) val.push_back(v.get_str());
  return ordered_json{{"family", std::string(to_string(s.family))}, {"params", params}, {"diameter", s.diameter},
                      {"cardinality", s.cardinality.get_str()}, {"valencies", val}};
}

inline SpaceDescriptor space_from(const ordered_json& j) {
  const auto fam = j.at("family").get<std::string>();
  const auto params = j.at("params").get<std::vector<int>>();
  Family f = fam == "hamming" ? Family::hamming : fam == "johnson" ? Family::johnson : Family::symmetric;
  return make_space(f, params);
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
  using detail::ordered_json;
  ordered_json freq = ordered_json::array(), dual = ordered_json::array();
  for (const auto& f : r.frequencies) freq.push_back(detail::rational_json(f));
  for (const auto& f : r.dual_numerators) dual.push_back(detail::rational_json(f));

  ordered_json strengths{{"capacity", r.capacity},
                         {"moments", r.strength_moments},
                         {"dual", r.strength_dual},
                         {"capacity_reached", r.capacity_reached},
                         {"combinatorial", detail::optional_json(r.combinatorial_strength)},
                         {"eta", r.eta ? ordered_json(r.eta->get_str()) : ordered_json(nullptr)},
                         {"agree", r.strengths_agree}};

  ordered_json rows = ordered_json::array();
  for (const auto& b : r.bounds) {
    rows.push_back({{"x", detail::rational_json(b.x)},
                    {"F_D", detail::rational_json(b.fd)},
                    {"F_X", detail::rational_json(b.fx)},
                    {"gap", detail::rational_json(b.gap)},
                    {"lambda", detail::rational_json(b.lambda)},
                    {"corollary_bound", b.corollary ? detail::rational_json(*b.corollary) : ordered_json(nullptr)},
                    {"satisfied", b.satisfied},
                    {"corollary_satisfied", detail::optional_json(b.corollary_satisfied)},
                    {"envelope_lower", detail::optional_json(b.envelope_lower)},
                    {"envelope_upper", detail::optional_json(b.envelope_upper)},
                    {"envelope_ok", b.envelope_ok}});
  }
  ordered_json fp = ordered_json::array();
  for (const auto& f : r.fixed_point) {
    fp.push_back({{"x", detail::rational_json(f.x)},
                  {"G_D", detail::rational_json(f.gd)},
                  {"poisson_cdf", f.poisson},
                  {"printed_law", f.printed},
                  {"gap", f.gap},
                  {"bound", detail::rational_json(f.bound)},
                  {"satisfied", f.satisfied}});
  }
  ordered_json ng = ordered_json::array();
  for (const auto& g : r.normal_gaps) ng.push_back({{"x", detail::rational_json(g.x)}, {"gap", g.gap}});

  return ordered_json{{"space", detail::space_json(r.space)},
                      {"size", r.size},
                      {"frequencies", freq},
                      {"dual_numerators", dual},
                      {"strengths", strengths},
                      {"bounds", {{"t", detail::optional_json(r.t)},
                                  {"kappa", detail::optional_json(r.kappa)},
                                  {"corollary", detail::optional_json(r.corollary)},
                                  {"rows", rows}}},
                      {"fixed_point", fp},
                      {"normal_gaps", ng},
                      {"warnings", r.warnings},
                      {"violated", r.violated}};
}

inline AnalysisReport report_from_json(const nlohmann::ordered_json& j) {
  auto opt_int = [](const nlohmann::ordered_json& v) { return v.is_null() ? std::optional<int>() : std::optional<int>(v.get<int>()); };
  auto opt_bool = [](const nlohmann::ordered_json& v) { return v.is_null() ? std::optional<bool>() : std::optional<bool>(v.get<bool>()); };
  auto opt_double = [](const nlohmann::ordered_json& v) {
    return v.is_null() ? std::optional<double>() : std::optional<double>(v.get<double>());
  };
  AnalysisReport r;
  r.space = detail::space_from(j.at("space"));
  r.size = j.at("size").get<std::size_t>();
  for (const auto& f : j.at("frequencies")) r.frequencies.push_back(detail::rational_from(f));
  for (const auto& f : j.at("dual_numerators")) r.dual_numerators.push_back(detail::rational_from(f));
  const auto& s = j.at("strengths");
  r.capacity = s.at("capacity").get<int>();
  r.strength_moments = s.at("moments").get<int>();
  r.strength_dual = s.at("dual").get<int>();
  r.capacity_reached = s.at("capacity_reached").get<bool>();
  r.combinatorial_strength = opt_int(s.at("combinatorial"));
  if (!s.at("eta").is_null()) r.eta = Integer(s.at("eta").get<std::string>());
  r.strengths_agree = s.at("agree").get<bool>();
  const auto& b = j.at("bounds");
  r.t = opt_int(b.at("t"));
  r.kappa = opt_int(b.at("kappa"));
  if (!b.at("corollary").is_null()) r.corollary = b.at("corollary").get<std::string>();
  for (const auto& row : b.at("rows")) {
    ReportBoundRow out;
    out.x = detail::rational_from(row.at("x"));
    out.fd = detail::rational_from(row.at("F_D"));
    out.fx = detail::rational_from(row.at("F_X"));
    out.gap = detail::rational_from(row.at("gap"));
    out.lambda = detail::rational_from(row.at("lambda"));
    if (!row.at("corollary_bound").is_null()) out.corollary = detail::rational_from(row.at("corollary_bound"));
    out.satisfied = row.at("satisfied").get<bool>();
    out.corollary_satisfied = opt_bool(row.at("corollary_satisfied"));
    out.envelope_lower = opt_double(row.at("envelope_lower"));
    out.envelope_upper = opt_double(row.at("envelope_upper"));
    out.envelope_ok = row.at("envelope_ok").get<bool>();
    r.bounds.push_back(std::move(out));
  }
  for (const auto& f : j.at("fixed_point")) {
    r.fixed_point.push_back({detail::rational_from(f.at("x")), detail::rational_from(f.at("G_D")), detail::rational_from(f.at("bound")),
                             f.at("poisson_cdf").get<double>(), f.at("printed_law").get<double>(), f.at("gap").get<double>(),
                             f.at("satisfied").get<bool>()});
  }
  for (const auto& g : j.at("normal_gaps")) r.normal_gaps.push_back({detail::rational_from(g.at("x")), g.at("gap").get<double>()});
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.violated = j.at("violated").get<bool>();
  return r;
}

inline AnalysisReport parse_report(const std::string& json_text) {
  return report_from_json(nlohmann::ordered_json::parse(json_text));
}

enum class OutputFormat { json, csv, text };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw Error(ErrorKind::invalid_parameters, "unknown format '" + s + "' (json|csv|text)");
}

inline std::string emit_csv(const AnalysisReport& r) {
  std::ostringstream out;
  out << "x,F_D,F_X,gap,lambda,corollary_bound,satisfied\n";
  for (const auto& b : r.bounds) {
    out << exact_string(b.x) << ',' << exact_string(b.fd) << ',' << exact_string(b.fx) << ',' << exact_string(b.gap) << ','
        << exact_string(b.lambda) << ',' << (b.corollary ? exact_string(*b.corollary) : std::string()) << ','
        << (b.satisfied ? "true" : "false") << '\n';
  }
  return out.str();
}

inline std::string emit_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "space        " << r.space.name() << "  |X| = " << r.space.cardinality.get_str() << "  diameter " << r.space.diameter << '\n';
  out << "valencies   ";
  for (const auto& v : r.space.valencies) out << ' ' << v.get_str();
  out << "\n|D|          " << r.size << '\n';
  out << "frequencies ";
  for (const auto& f : r.frequencies) out << ' ' << exact_string(f);
  out << "\nstrength     moments " << r.strength_moments << ", dual " << r.strength_dual;
  if (r.combinatorial_strength) out << ", combinatorial " << *r.combinatorial_strength;
  if (r.eta) out << " (eta " << r.eta->get_str() << ")";
  out << "  [N(X) = " << r.capacity << (r.capacity_reached ? ", reached" : "") << "]" << (r.strengths_agree ? "" : "  DISAGREE")
      << '\n';
  if (r.t) {
    out << "bounds       t = " << *r.t << ", kappa = " << *r.kappa;
    if (r.corollary) out << ", corollary " << *r.corollary;
    out << "\n\n";
    const std::vector<std::string> head{"x", "F_D", "F_X", "gap", "lambda", "corollary", "ok"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& b : r.bounds) {
      cells.push_back({exact_string(b.x), format_rational(b.fd), format_rational(b.fx), format_rational(b.gap), format_rational(b.lambda),
                       b.corollary ? format_rational(*b.corollary) : "-",
                       (b.satisfied && b.envelope_ok && b.corollary_satisfied.value_or(true)) ? "yes" : "NO"});
    }
    std::vector<std::size_t> width(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
      width[c] = head[c].size();
      for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
      out << '\n';
    };
    line(head);
    for (const auto& row : cells) line(row);
  }
  if (!r.fixed_point.empty()) {
    out << "\nfixed points    x  G_D                   poisson   gap       bound\n";
    for (const auto& f : r.fixed_point)
      out << "  " << std::setw(14) << exact_string(f.x) << "  " << std::setw(20) << format_rational(f.gd) << "  "
          << format_decimal(f.poisson) << "  " << format_decimal(f.gap) << "  " << format_rational(f.bound) << (f.satisfied ? "" : "  NO")
          << '\n';
  }
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  out << (r.violated ? "RESULT: bound violated\n" : "RESULT: all certified bounds hold\n");
  return out.str();
}

inline std::string emit(const AnalysisReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return to_json(r).dump(2) + "\n";
    case OutputFormat::csv: return emit_csv(r);
    case OutputFormat::text: return emit_text(r);
  }
  return {};
}

}  // namespace ddr
