#include <sstream>

#include <gtest/gtest.h>

#include "ossmax/coverage.hpp"
#include "ossmax/instance_io.hpp"
#include "ossmax/quadratic.hpp"

namespace ossmax {
namespace {

std::vector<Instance> samples() {
  CoverageParams p;
  p.n = 5;
  p.m = 9;
  p.density = 0.4;
  p.weight_min = 0.1;
  p.weight_max = 3.0;
  p.seed = 12;
  auto cov = std::make_shared<CoverageMultilinearObjective>(make_coverage_instance(p));
  auto quad = std::make_shared<QuadraticSemiMetricObjective>(
      random_semimetric_instance(5, 3, 0.1, 1.0, 12));
  return {
      {cov, std::make_shared<BoxPolytope>(Vector{0.3, 1.0, 0.7, 1.0 / 3.0, 1.0})},
      {quad, std::make_shared<CardinalityPolytope>(5, 2)},
      {cov, std::make_shared<MonotoneLinearPolytope>(
                5, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {3, 2}})},
  };
}

TEST(InstanceIo, RoundTripIsExact) {
  for (const Instance& inst : samples()) {
    const std::string text = instance_to_string(inst);
    std::istringstream in(text);
    const Instance back = read_instance(in);
    EXPECT_EQ(instance_to_string(back), text);
    EXPECT_EQ(objective_kind(*back.objective), objective_kind(*inst.objective));
    EXPECT_EQ(back.polytope->kind(), inst.polytope->kind());
    const Vector x(5, 0.37);
    EXPECT_EQ(back.objective->value(x), inst.objective->value(x));
    EXPECT_EQ(back.objective->gradient(x), inst.objective->gradient(x));
  }
}

TEST(InstanceIo, QuadraticFieldsSurviveBitForBit) {
  const Instance inst = samples()[1];
  std::istringstream in(instance_to_string(inst));
  const Instance back = read_instance(in);
  const auto& a = dynamic_cast<const QuadraticSemiMetricObjective&>(*inst.objective);
  const auto& b = dynamic_cast<const QuadraticSemiMetricObjective&>(*back.objective);
  EXPECT_EQ(a.matrix(), b.matrix());
  EXPECT_EQ(a.linear(), b.linear());
  EXPECT_EQ(a.sigma_claimed(), b.sigma_claimed());
}

TEST(InstanceIo, CommentsAndBlankLinesAreIgnored) {
  const std::string text =
      "# hand written\n"
      "format ossmax-instance 1\n\n"
      "kind coverage   # two sets, one element\n"
      "dimension 2\n"
      "elements 1\n"
      "weights 1\n"
      "cover 1 0\n"
      "cover 1 0\n"
      "polytope cardinality\n"
      "budget 1\n"
      "end\n";
  std::istringstream in(text);
  const Instance inst = read_instance(in);
  EXPECT_DOUBLE_EQ(inst.objective->value(Vector{1.0, 1.0}), 1.0);
  EXPECT_EQ(inst.polytope->kind(), "cardinality");
}

TEST(InstanceIo, MalformedInputIsAValidationError) {
  const std::string good = instance_to_string(samples()[0]);
  auto expect_bad = [](const std::string& text) {
    std::istringstream in(text);
    EXPECT_THROW(read_instance(in), ValidationError) << text;
  };
  expect_bad("");
  expect_bad("format something-else 1\n");
  expect_bad(good.substr(0, good.rfind("end")));
  std::string bad_kind = good;
  bad_kind.replace(bad_kind.find("coverage"), 8, "coverag3");
  expect_bad(bad_kind);
  std::string bad_number = good;
  bad_number.replace(bad_number.find("weights ") + 8, 1, "x");
  expect_bad(bad_number);
  expect_bad(
      "format ossmax-instance 1\nkind quadratic-semimetric\ndimension 2\n"
      "sigma 1\nmatrix\n0 1\n1 0\nlinear 1\npolytope box\nupper 1 1\nend\n");
  expect_bad(
      "format ossmax-instance 1\nkind quadratic-semimetric\ndimension 2\n"
      "sigma 1\nmatrix\n0 1\n2 0\nlinear 1 1\npolytope box\nupper 1 1\nend\n");
}

TEST(InstanceIo, MissingFileIsARuntimeError) {
  EXPECT_THROW(read_instance_file("/nonexistent/dir/x.inst"), std::runtime_error);
}

}  // namespace
}  // namespace ossmax
