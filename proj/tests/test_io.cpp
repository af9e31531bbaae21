#include "doctest.h"

#include "oracle.hpp"
#include "pbs/hybrid.hpp"
#include "pbs/io.hpp"

using namespace pbs;

namespace {

std::size_t error_line(std::string_view text, bool schedule = false) {
  try {
    if (schedule) {
      parse_schedule(text);
    } else {
      parse_instance(text);
    }
  } catch (const ParseError& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST_CASE("instance files round-trip") {
  auto inst = PbsInstance::create(2, 3, {{0, 0, 3}, {1, 2, Rational(5, 2)}}, Rational(7, 3));
  const auto text = write_instance(inst);
  CHECK(text.rfind("pbs-instance 1\n", 0) == 0);
  CHECK(parse_instance(text) == inst);
}

TEST_CASE("instance parsing accepts comments and blank lines") {
  auto inst = parse_instance(
      "# demo\n\npbs-instance 1\nn_sources 1   # trailing\nn_dests 2\nsetup_cost 1/2\n"
      "edge 0 1 4\nedge 0 0 0\n");
  CHECK(inst.n_dests() == 2);
  CHECK(inst.edges().size() == 1);
  CHECK(inst.setup_cost() == Rational(1, 2));
}

TEST_CASE("instance parse errors carry line numbers") {
  const std::string head = "pbs-instance 1\nn_sources 2\nn_dests 2\nsetup_cost 1\n";
  CHECK(error_line("") == 1);
  CHECK(error_line("pbs-instance 2\n") == 1);
  CHECK(error_line("pbs-schedule 1\n") == 1);
  CHECK(error_line(head + "edge 0 0 1\nedge 0 0 2\n") == 6);
  CHECK(error_line(head + "edge 0 5 1\n") == 5);
  CHECK(error_line(head + "edge 0 0 -1\n") == 5);
  CHECK(error_line(head + "edge 0 0\n") == 5);
  CHECK(error_line(head + "edge a 0 1\n") == 5);
  CHECK(error_line(head + "edge 0 0 1/0\n") == 5);
  CHECK(error_line(head + "colour 3\n") == 5);
  CHECK(error_line(head + "n_dests 3\n") == 5);
  CHECK(error_line("pbs-instance 1\nn_sources 1\nsetup_cost 0\n") == 3);
  CHECK(error_line("pbs-instance 1\nn_sources 1\nn_dests 1\nsetup_cost -2\n") == 4);
}

TEST_CASE("schedule files round-trip and keep the cost line") {
  auto inst = oracle::from_grid({{3, 2}, {2, 3}}, 4);
  auto o = run_algorithm(Algorithm::Posa, inst);
  const auto text = write_schedule(o.schedule, 4);
  CHECK(text == "pbs-schedule 1\nalgorithm posa\nround 3 0:0 1:1\nround 2 0:1 1:0\ncost 13\n");
  auto back = parse_schedule(text);
  CHECK(back.schedule == o.schedule);
  CHECK(back.cost == Rational(13));

  auto nocost = parse_schedule("pbs-schedule 1\nround 1/2 0:0\n");
  CHECK_FALSE(nocost.cost);
  CHECK(nocost.schedule.rounds[0].duration == Rational(1, 2));
}

TEST_CASE("schedule parse errors carry line numbers") {
  CHECK(error_line("pbs-schedule 1\nround\n", true) == 2);
  CHECK(error_line("pbs-schedule 1\nround 2 0-1\n", true) == 2);
  CHECK(error_line("pbs-schedule 1\ncost 3\nround 1 0:0\n", true) == 3);
  CHECK(error_line("pbs-schedule 1\nwhat 1\n", true) == 2);
}

TEST_CASE("a schedule with a conflicting round parses but fails validation") {
  auto inst = oracle::from_grid({{3, 2}, {2, 3}}, 4);
  auto file = parse_schedule("pbs-schedule 1\nround 5 0:0 0:1\n");
  CHECK_FALSE(file.schedule.rounds[0].matching.valid());
  CHECK_FALSE(validate_schedule(inst, file.schedule).ok());
}
