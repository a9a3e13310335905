// ddrtool: design strength and distribution bounds for point sets in Hamming, Johnson and
// symmetric-group spaces.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddr/ddr.hpp"

namespace {

using nlohmann::ordered_json;

struct Globals {
  std::string format = "text";
  std::string output;
  std::uint64_t max_pairs = 10'000'000'000ULL;
  unsigned workers = 1;
};

void write_output(const Globals& g, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw ddr::Error(ddr::ErrorKind::io_error, "cannot write '" + g.output + "'");
  out << text;
}

ddr::SpaceDescriptor parse_space_spec(const std::string& spec) {
  // hamming:16:2, johnson:7:3, symmetric:4 (':' or ',' separated)
  std::string s = spec;
  for (char& c : s)
    if (c == ':' || c == ',') c = ' ';
  std::istringstream in(s);
  std::string family;
  in >> family;
  std::vector<int> params;
  for (int v; in >> v;) params.push_back(v);
  if (!in.eof()) throw ddr::Error(ddr::ErrorKind::invalid_parameters, "bad space spec '" + spec + "'");
  if (family == "hamming") return ddr::make_space(ddr::Family::hamming, params);
  if (family == "johnson") return ddr::make_space(ddr::Family::johnson, params);
  if (family == "symmetric") return ddr::make_space(ddr::Family::symmetric, params);
  throw ddr::Error(ddr::ErrorKind::invalid_parameters, "unknown family in space spec '" + spec + "'");
}

int report_and_exit(const Globals& g, const ddr::AnalysisReport& r) {
  write_output(g, ddr::emit(r, ddr::parse_format(g.format)));
  return r.violated ? 1 : 0;
}

int run_orthopoly(const Globals& g, const std::string& spec, int N) {
  const auto space = parse_space_spec(spec);
  const auto sys = ddr::gram_schmidt(space, N);
  const auto fmt = ddr::parse_format(g.format);
  std::ostringstream out;
  if (fmt == ddr::OutputFormat::json) {
    ordered_json polys = ordered_json::array();
    for (int i = 0; i <= sys.degree(); ++i) {
      ordered_json coeffs = ordered_json::array();
      for (const auto& c : sys.polys[static_cast<std::size_t>(i)].coeffs()) coeffs.push_back(ddr::exact_string(c));
      polys.push_back({{"degree", i}, {"coefficients", coeffs}, {"sqnorm", ddr::exact_string(sys.sqnorms[static_cast<std::size_t>(i)])}});
    }
    ordered_json support = sys.measure.support;
    out << ordered_json{{"space", space.name()}, {"N(X)", sys.measure.capacity()}, {"support", support}, {"polynomials", polys}}.dump(2)
        << '\n';
  } else if (fmt == ddr::OutputFormat::csv) {
    out << "degree,coefficients,sqnorm\n";
    for (int i = 0; i <= sys.degree(); ++i) {
      out << i << ',';
      const auto& cs = sys.polys[static_cast<std::size_t>(i)].coeffs();
      for (std::size_t k = 0; k < cs.size(); ++k) out << (k ? ";" : "") << ddr::exact_string(cs[k]);
      out << ',' << ddr::exact_string(sys.sqnorms[static_cast<std::size_t>(i)]) << '\n';
    }
  } else {
    out << space.name() << "  N(X) = " << sys.measure.capacity() << '\n';
    for (int i = 0; i <= sys.degree(); ++i)
      out << "p_" << i << "(x) = " << sys.polys[static_cast<std::size_t>(i)].to_string() << "    |p_" << i
          << "|^2 = " << ddr::format_rational(sys.sqnorms[static_cast<std::size_t>(i)]) << '\n';
  }
  write_output(g, out.str());
  return 0;
}

int run_hahn_limit(const Globals& g, int k, const std::string& p_text, const std::string& x_text, const std::vector<int>& ladder) {
  const auto p = ddr::parse_rational(p_text);
  const auto x = ddr::parse_rational(x_text);
  const auto check = ddr::hahn_limit_check(k, p, x, ladder.empty() ? ddr::default_ladder() : ladder);
  const auto lk = ddr::limit_kernel(k, p, x);
  std::vector<double> finite;
  for (std::size_t i = 0; i < check.ladder.size(); ++i) finite.push_back(1 / ddr::finite_kernel(k, check.ladder[i], check.blocks[i], x));
  const std::string warning = ddr::warning_text::kernel_ratio(lk.lambda, lk.alt_lambda);

  const auto fmt = ddr::parse_format(g.format);
  std::ostringstream out;
  if (fmt == ddr::OutputFormat::json) {
    ordered_json rungs = ordered_json::array();
    for (std::size_t i = 0; i < check.ladder.size(); ++i)
      rungs.push_back({{"nu", check.ladder[i]}, {"n", check.blocks[i]}, {"observed", check.observed[i]}, {"error", check.errors[i]},
                       {"finite_lambda", finite[i]}});
    out << ordered_json{{"k", k},
                        {"p", ddr::exact_string(p)},
                        {"x", ddr::exact_string(x)},
                        {"limit", check.limit},
                        {"rungs", rungs},
                        {"monotone_decreasing", check.monotone_decreasing},
                        {"limit_kernel", {{"ratio", lk.ratio}, {"lambda", lk.lambda}, {"alt_ratio", lk.alt_ratio},
                                          {"alt_lambda", lk.alt_lambda}, {"degenerate", lk.degenerate}}},
                        {"warnings", {warning, ddr::linear_strength_regime_status()}}}
               .dump(2)
        << '\n';
  } else if (fmt == ddr::OutputFormat::csv) {
    out << "nu,n,observed,limit,error,finite_lambda,limit_lambda\n";
    for (std::size_t i = 0; i < check.ladder.size(); ++i)
      out << check.ladder[i] << ',' << check.blocks[i] << ',' << ddr::format_double(check.observed[i]) << ','
          << ddr::format_double(check.limit) << ',' << ddr::format_double(check.errors[i]) << ',' << ddr::format_double(finite[i]) << ','
          << ddr::format_double(lk.lambda) << '\n';
  } else {
    out << "normalized Hahn limit, k = " << k << ", p = " << ddr::exact_string(p) << ", x = " << ddr::exact_string(x)
        << ", limit = " << ddr::format_decimal(check.limit, 9) << '\n';
    out << "      nu       n        observed           error    finite lambda\n";
    for (std::size_t i = 0; i < check.ladder.size(); ++i) {
      std::ostringstream row;
      row << std::setw(8) << check.ladder[i] << std::setw(8) << check.blocks[i] << std::setw(16) << ddr::format_decimal(check.observed[i], 9)
          << std::setw(16) << ddr::format_decimal(check.errors[i], 9) << std::setw(17) << ddr::format_decimal(finite[i], 9);
      out << row.str() << '\n';
    }
    out << "error decreasing over last three rungs: " << (check.monotone_decreasing ? "yes" : "no") << '\n';
    out << "limiting lambda_k = " << ddr::format_decimal(lk.lambda, 9) << (lk.degenerate ? " (ratio one)" : "") << '\n';
    out << "warning: " << warning << '\n';
    out << "note: " << ddr::linear_strength_regime_status() << '\n';
  }
  write_output(g, out.str());
  return 0;
}

int run_berry_esseen(const Globals& g, int nmax) {
  const auto fmt = ddr::parse_format(g.format);
  std::vector<ddr::BerryEsseenGap> gaps;
  for (int n = 1; n <= nmax; ++n) gaps.push_back(ddr::berry_esseen_gap(n));
  double worst = 0;
  for (const auto& b : gaps) worst = std::max(worst, b.scaled);
  std::ostringstream out;
  if (fmt == ddr::OutputFormat::json) {
    ordered_json rows = ordered_json::array();
    for (const auto& b : gaps) rows.push_back({{"n", b.n}, {"gap", b.gap}, {"argmax", b.argmax}, {"gap_sqrt_n", b.scaled}});
    out << ordered_json{{"rows", rows}, {"max_gap_sqrt_n", worst}}.dump(2) << '\n';
  } else if (fmt == ddr::OutputFormat::csv) {
    out << "n,gap,argmax,gap_sqrt_n\n";
    for (const auto& b : gaps) out << b.n << ',' << ddr::format_double(b.gap) << ',' << b.argmax << ',' << ddr::format_double(b.scaled) << '\n';
  } else {
    out << "   n        gap  argmax  gap*sqrt(n)\n";
    for (const auto& b : gaps) {
      std::ostringstream row;
      row << std::setw(4) << b.n << std::setw(11) << ddr::format_decimal(b.gap) << std::setw(8) << b.argmax << std::setw(13)
          << ddr::format_decimal(b.scaled);
      out << row.str() << '\n';
    }
    out << "max gap*sqrt(n) = " << ddr::format_decimal(worst) << '\n';
  }
  write_output(g, out.str());
  return 0;
}

int run_generate(const Globals& g, const std::string& kind, int m) {
  std::optional<ddr::PointSet> set;
  if (kind == "extended-hamming") set = ddr::extended_hamming_code(m);
  else if (kind == "simplex") set = ddr::simplex_code(m);
  else if (kind == "even-weight") set = ddr::even_weight_code(m);
  else if (kind == "fano") set = ddr::fano_plane();
  else if (kind == "alternating") set = ddr::alternating_group(m);
  else if (kind == "symmetric") set = ddr::symmetric_group(m);
  else if (kind == "cyclic") set = ddr::cyclic_group(m);
  else throw ddr::Error(ddr::ErrorKind::unknown_kind, "unknown construction '" + kind + "'");
  write_output(g, ddr::format_input(*set));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design strength and Christoffel-function bounds in distance-degree-regular spaces.\n"
               "Input files index blocks and permutation images from 0."};
  app.require_subcommand(1);
  Globals g;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--format", g.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", g.output, "output path (default stdout)");
    sub->add_option("--max-pairs", g.max_pairs, "cap on ordered pair distance evaluations");
    sub->add_option("--workers", g.workers, "worker threads for pair loops")->check(CLI::PositiveNumber);
  };

  std::string file, grid, space_spec, p_text, x_text, kind;
  int t = -1, N = 0, k = 1, nmax = 64, m = 4;
  std::vector<int> ladder;

  auto* analyze = app.add_subcommand("analyze", "frequencies, strengths and bound table");
  analyze->add_option("file", file, "input file")->required();
  analyze->add_option("--grid", grid, "rational step for the x grid (default: integers)");
  add_globals(analyze);

  auto* strength = app.add_subcommand("strength", "design strength by moments, dual frequencies and oracle");
  strength->add_option("file", file, "input file")->required();
  add_globals(strength);

  auto* bounds = app.add_subcommand("bounds", "Christoffel bound table for a given strength t");
  bounds->add_option("file", file, "input file")->required();
  bounds->add_option("--t", t, "strength to certify")->required();
  bounds->add_option("--grid", grid, "rational step for the x grid (default: integers)");
  add_globals(bounds);

  auto* ortho = app.add_subcommand("orthopoly", "monic orthogonal polynomials of a space's valency measure");
  ortho->add_option("--space", space_spec, "hamming:n:q | johnson:nu:d | symmetric:n")->required();
  ortho->add_option("--N", N, "largest degree")->required();
  add_globals(ortho);

  auto* asym = app.add_subcommand("asymptotics", "finite-size limit checks");
  asym->require_subcommand(1);
  auto* hahn = asym->add_subcommand("hahn-limit", "normalized Hahn polynomial ladder");
  hahn->add_option("--k", k, "degree")->required();
  hahn->add_option("--p", p_text, "block fraction n/nu in (0,1)")->required();
  hahn->add_option("--x", x_text, "relative distance in (0,1)")->required();
  hahn->add_option("--ladder", ladder, "groundset sizes nu")->delimiter(',');
  add_globals(hahn);
  auto* be = asym->add_subcommand("berry-esseen", "binomial vs normal c.d.f. gap");
  be->add_option("--nmax", nmax, "largest n")->check(CLI::PositiveNumber);
  add_globals(be);

  auto* gen = app.add_subcommand("generate", "write a standard point set as an input file");
  gen->add_option("kind", kind, "extended-hamming|simplex|even-weight|fano|alternating|symmetric|cyclic")->required();
  gen->add_option("--m", m, "size parameter (code order, word length, or letters)");
  gen->add_option("--output", g.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ddr::AnalyzeOptions opts;
    opts.pairs = {g.workers, g.max_pairs};
    if (!grid.empty()) opts.grid = ddr::parse_rational(grid);
    if (*analyze) return report_and_exit(g, ddr::run_analyze(ddr::parse_input(file), opts));
    if (*strength) {
      opts.bounds = false;
      return report_and_exit(g, ddr::run_analyze(ddr::parse_input(file), opts));
    }
    if (*bounds) {
      opts.t = t;
      return report_and_exit(g, ddr::run_analyze(ddr::parse_input(file), opts));
    }
    if (*ortho) return run_orthopoly(g, space_spec, N);
    if (*hahn) return run_hahn_limit(g, k, p_text, x_text, ladder);
    if (*be) return run_berry_esseen(g, nmax);
    if (*gen) return run_generate(g, kind, m);
  } catch (const ddr::Error& e) {
    std::cerr << "ddrtool: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
