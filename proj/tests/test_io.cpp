#include "cartprod/io.hpp"

#include <gtest/gtest.h>

#include "cartprod/verify.hpp"

namespace cartprod {
namespace {

TEST(MatrixJson, ExactRoundTrip) {
  TrialRng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix m = random_matrix(rng, random_order(rng, 4));
    const MatrixVariant back = matrix_from_json(matrix_to_json(m));
    ASSERT_TRUE(std::holds_alternative<ExactMatrix>(back));
    EXPECT_EQ(std::get<ExactMatrix>(back), m);
  }
}

TEST(MatrixJson, ApproxRoundTrip) {
  ComplexMatrix m(2, 3);
  m(0, 0) = {1.5, -2.25};
  m(1, 2) = {0.0, 3.0};
  const MatrixVariant back = matrix_from_json(matrix_to_json(m));
  ASSERT_TRUE(std::holds_alternative<ComplexMatrix>(back));
  EXPECT_TRUE(matrices_equal(std::get<ComplexMatrix>(back), m, 0.0));
}

TEST(MatrixJson, ExactEntriesMustBeIntegral) {
  const auto j = json::parse(
      R"({"rows":1,"cols":1,"mode":"exact","entries":[[1.5,0]]})");
  EXPECT_THROW(matrix_from_json(j), parse_error);
}

TEST(MatrixJson, ShapeValidation) {
  EXPECT_THROW(parse_matrix_json("not json at all"), parse_error);
  EXPECT_THROW(parse_matrix_json(R"({"rows":2,"cols":2,"mode":"exact"})"),
               parse_error);
  EXPECT_THROW(
      parse_matrix_json(
          R"({"rows":2,"cols":2,"mode":"exact","entries":[[1,0]]})"),
      parse_error);
  EXPECT_THROW(
      parse_matrix_json(
          R"({"rows":1,"cols":1,"mode":"weird","entries":[[1,0]]})"),
      parse_error);
  EXPECT_THROW(
      parse_matrix_json(
          R"({"rows":0,"cols":1,"mode":"exact","entries":[]})"),
      parse_error);
  EXPECT_THROW(
      parse_matrix_json(
          R"({"rows":1,"cols":1,"mode":"exact","entries":[[1]]})"),
      parse_error);
}

TEST(EdgeList, ParseWithCommentsAndBlankLines) {
  const Graph g = parse_edge_list(
      "c a 4-cycle\n"
      "p 4\n"
      "\n"
      "e 1 2\n"
      "e 2 3\n"
      "e 3 4\n"
      "c wrap around\n"
      "e 4 1\n");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.has_edge(3, 0));
}

TEST(EdgeList, RoundTrip) {
  const Graph g = cycle_graph(5);
  const Graph back = parse_edge_list(edge_list_to_string(g));
  EXPECT_EQ(back.vertex_count(), g.vertex_count());
  EXPECT_EQ(back.edges(), g.edges());
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list(""), parse_error);
  EXPECT_THROW(parse_edge_list("e 1 2\np 2\n"), parse_error);
  EXPECT_THROW(parse_edge_list("p 2\np 2\n"), parse_error);
  EXPECT_THROW(parse_edge_list("p 0\n"), parse_error);
  EXPECT_THROW(parse_edge_list("p 2\ne 1 3\n"), parse_error);
  EXPECT_THROW(parse_edge_list("p 2\ne 1 1\n"), parse_error);
  EXPECT_THROW(parse_edge_list("p 2\ne 1\n"), parse_error);
  EXPECT_THROW(parse_edge_list("p 2\nq 1 2\n"), parse_error);
  // Duplicate edges collapse, set-style.
  const Graph g = parse_edge_list("p 2\ne 1 2\ne 2 1\n");
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Files, MissingFileFails) {
  EXPECT_THROW(load_edge_list("definitely/not/here.graph"), parse_error);
  EXPECT_THROW(load_matrix("definitely/not/here.json"), parse_error);
}

}  // namespace
}  // namespace cartprod
