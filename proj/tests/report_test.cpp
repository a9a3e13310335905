#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ddr/constructions.hpp"
#include "ddr/io.hpp"
#include "ddr/report.hpp"

namespace ddr {
namespace {

template <class Fn>
std::string error_message(ErrorKind kind, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no error thrown";
  return {};
}

AnalyzeOptions strength_only() {
  AnalyzeOptions o;
  o.bounds = false;
  return o;
}

TEST(InputTest, ParsesAllFamilies) {
  auto h = parse_input_text("# even weight\nhamming 3 2\n000\n011\n\n101\n1 1 0\n");
  EXPECT_EQ(h.space, hamming_space(3, 2));
  ASSERT_EQ(h.elements.size(), 4u);
  EXPECT_EQ(h.elements[3], Point::word({1, 1, 0}));

  auto j = parse_input_text("johnson 7 3\n0 1 3\n6 2 1\n");
  EXPECT_EQ(j.space, johnson_space(7, 3));
  EXPECT_EQ(j.elements[1], Point::block({1, 2, 6}));

  auto s = parse_input_text("symmetric 3\r\n0 1 2\r\n1 2 0\r\n");
  EXPECT_EQ(s.space, symmetric_space(3));
  EXPECT_EQ(s.elements.size(), 2u);

  auto big = parse_input_text("hamming 2 12\n10 11\n0 3\n");
  EXPECT_EQ(big.elements[0], Point::word({10, 11}));
}

TEST(InputTest, ReportsLineNumbers) {
  auto msg = error_message(ErrorKind::malformed_line, [] { parse_input_text("hamming 3 2\n000\n012\n", "f.txt"); });
  EXPECT_NE(msg.find("f.txt:3:"), std::string::npos) << msg;
  msg = error_message(ErrorKind::duplicate_element, [] { parse_input_text("hamming 3 2\n000\n# c\n000\n", "f.txt"); });
  EXPECT_NE(msg.find("f.txt:4:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  error_message(ErrorKind::malformed_header, [] { parse_input_text("hamm 3 2\n000\n"); });
  error_message(ErrorKind::malformed_header, [] { parse_input_text("hamming 3 x\n000\n"); });
  error_message(ErrorKind::malformed_header, [] { parse_input_text("# nothing\n"); });
  error_message(ErrorKind::invalid_parameters, [] { parse_input_text("johnson 6 3\n0 1 2\n"); });
  error_message(ErrorKind::malformed_line, [] { parse_input_text("johnson 7 3\n0 1\n"); });
  error_message(ErrorKind::malformed_line, [] { parse_input_text("symmetric 3\n0 a 2\n"); });
  error_message(ErrorKind::malformed_line, [] { parse_input_text("symmetric 3\n"); });
  error_message(ErrorKind::io_error, [] { parse_input("/nonexistent/file.txt"); });
}

TEST(InputTest, FormatRoundTrips) {
  for (const auto& set : {even_weight_code(4), fano_plane(), alternating_group(4)}) {
    auto doc = parse_input_text(format_input(set));
    EXPECT_EQ(doc.space, set.space());
    EXPECT_EQ(doc.elements, set.elements());
  }
}

TEST(InputTest, ReadsFromDisk) {
  auto path = std::filesystem::temp_directory_path() / "ddr_report_test_input.txt";
  {
    std::ofstream out(path);
    out << format_input(fano_plane());
  }
  auto doc = parse_input(path.string());
  EXPECT_EQ(doc.point_set().size(), 7u);
  std::filesystem::remove(path);
}

TEST(ReportTest, RationalFormatting) {
  EXPECT_EQ(format_rational(ratio(1459, 2048)), "1459/2048 (0.712402)");
  EXPECT_EQ(exact_string(Rational(3)), "3/1");
  EXPECT_EQ(parse_rational("0.25"), ratio(1, 4));
  EXPECT_EQ(parse_rational("-6/8"), ratio(-3, 4));
  EXPECT_EQ(parse_rational("1e-2"), ratio(1, 100));
}

TEST(ReportTest, AnalyzeEvenWeightCode) {
  auto r = run_analyze(even_weight_code(3));
  EXPECT_EQ(r.strength_moments, 2);
  EXPECT_EQ(r.t, 2);
  EXPECT_EQ(r.kappa, 1);
  EXPECT_EQ(r.corollary, "qary-strength2");
  ASSERT_EQ(r.bounds.size(), 4u);
  EXPECT_EQ(r.bounds[2].gap, ratio(1, 8));
  EXPECT_FALSE(r.violated);
  EXPECT_FALSE(r.normal_gaps.empty());
}

TEST(ReportTest, JsonRoundTrip) {
  AnalyzeOptions grid;
  grid.grid = ratio(1, 2);
  for (const auto& r : {run_analyze(even_weight_code(4)), run_analyze(fano_plane(), grid), run_analyze(alternating_group(4)),
                        run_analyze(simplex_code(3), strength_only())}) {
    auto text = emit(r, OutputFormat::json);
    auto back = parse_report(text);
    EXPECT_EQ(back, r);
    EXPECT_EQ(emit(back, OutputFormat::json), text);
  }
}

TEST(ReportTest, JsonShape) {
  auto j = to_json(run_analyze(extended_hamming_code(3)));
  EXPECT_EQ(j["space"]["family"], "hamming");
  EXPECT_EQ(j["frequencies"][4]["exact"], "7/8");
  EXPECT_EQ(j["frequencies"][4]["decimal"], "0.875000");
  EXPECT_EQ(j["strengths"]["moments"], 3);
  EXPECT_EQ(j["violated"], false);
}

TEST(ReportTest, FixedPointSection) {
  auto r = run_analyze(alternating_group(4));
  EXPECT_EQ(r.combinatorial_strength, 2);
  ASSERT_EQ(r.fixed_point.size(), 5u);
  EXPECT_EQ(r.fixed_point[4].bound, ratio(4, 13));
  EXPECT_FALSE(r.violated);
  auto cyclic = run_analyze(cyclic_group(4));
  EXPECT_TRUE(cyclic.fixed_point.empty());
}

TEST(ReportTest, CsvAndText) {
  auto empty = run_analyze(even_weight_code(3), strength_only());
  EXPECT_EQ(emit(empty, OutputFormat::csv), "x,F_D,F_X,gap,lambda,corollary_bound,satisfied\n");
  auto r = run_analyze(even_weight_code(3));
  auto csv = emit(r, OutputFormat::csv);
  EXPECT_NE(csv.find("\n2/1,1/1,7/8,1/8,3/4,3/4,true\n"), std::string::npos) << csv;
  auto text = emit(r, OutputFormat::text);
  EXPECT_NE(text.find("RESULT: all certified bounds hold"), std::string::npos);
  EXPECT_NE(text.find("1/8 (0.125000)"), std::string::npos);
  EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
  EXPECT_THROW(parse_format("xml"), Error);
}

TEST(ReportTest, OutputIsDeterministic) {
  auto a = emit(run_analyze(extended_hamming_code(4), {true, std::nullopt, std::nullopt, {1}}), OutputFormat::json);
  auto b = emit(run_analyze(extended_hamming_code(4), {true, std::nullopt, std::nullopt, {8}}), OutputFormat::json);
  EXPECT_EQ(a, b);
}

TEST(ReportTest, JohnsonCarriesNormalizationWarning) {
  auto r = run_analyze(fano_plane());
  bool found = false;
  for (const auto& w : r.warnings) found = found || w.find("m_k") != std::string::npos;
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace ddr
