#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "helpers.hpp"
#include "quinn/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = quinn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("trace-unit") {
  const auto r = run({"trace-unit", "--category", "c5"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "e = I + 3A"));
  CHECK(has(r.out, "c = I + 4A"));
  const auto fib = run({"trace-unit", "--category", testing::fixture("fib11.cat")});
  CHECK(fib.code == 0);
  CHECK(has(fib.out, "c = I + 9T"));
}

TEST_CASE("check-relation") {
  auto r = run({"check-relation", "newseq", "vertexpass"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "EQUAL over 13 starts"));
  r = run({"check-relation", testing::fixture("newseq.qs"), "vertexpass", "--table"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "EQUAL over 13 starts"));
  r = run({"check-relation", "newseq", "vertexpass", "--start", "( ?g ( ( A A ):?e ?b ):?a ):1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "EQUAL over"));
  r = run({"check-relation", "bubble", "identity"});
  CHECK(r.code == 0);
  r = run({"check-relation", "newseq", "vertexpass", "--category",
           testing::fixture("broken_pentagon.cat")});
  CHECK(r.code == 1);
  CHECK(has(r.out, "DIFFERENT"));
  r = run({"check-relation", "newseq", "bubble"});
  CHECK(r.code == 2);
}

TEST_CASE("reproduce-paper is stable") {
  const auto a = run({"reproduce-paper"});
  const auto b = run({"reproduce-paper"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(has(a.out, "21/21 rows match"));
}

TEST_CASE("eval") {
  auto r = run({"eval", "--start", "( A ( ( A A ):A A ):A ):1", "--script", "newseq"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "4 * ( A ( A ( A A ):1 ):A ):1"));
  r = run({"eval", "--start", "( A ( ( A A ):A A ):A ):1", "--script",
           testing::fixture("newseq.qs"), "--trace"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "split @RR"));
  r = run({"eval", "--start", testing::fixture("bad_tree.txt"), "--script", "newseq"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "parse error"));
  r = run({"eval", "--start", "( A A ):1", "--script", "newseq"});
  CHECK(r.code == 2);
  r = run({"eval", "--start", "( A A ):1"});
  CHECK(r.code == 2);
}

TEST_CASE("validate-category") {
  auto r = run({"validate-category", "--category", "c5"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "PASS"));
  CHECK_FALSE(has(r.out, "FAIL"));
  r = run({"validate-category", "--category", testing::fixture("broken_pentagon.cat")});
  CHECK(r.code == 1);
  CHECK(has(r.out, "FAIL"));
  r = run({"validate-category", "--category", "c5", "--p", "7"});
  CHECK(r.code == 2);
  r = run({"validate-category", "--category", testing::fixture("fib19.cat")});
  CHECK(r.code == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"trace-unit", "--category", "/nonexistent.cat"}).code == 2);
}

TEST_CASE("present transform") {
  auto r = run({"present", "transform", "<a,b | a b A B, a a b>", "--script",
                testing::fixture("transforms.qt")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "invariants agree"));
  r = run({"present", "transform", "<a | a a>", "--script", "inv 1; conj 1 by \"a\"", "--trace"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "[2] -> [2]"));
  r = run({"present", "transform", "<a | a a>", "--script", "deprolong"});
  CHECK(r.code == 2);
  r = run({"present", "transform", "<a | a a", "--script", "inv 1"});
  CHECK(r.code == 2);
}

TEST_CASE("color output") {
  ::setenv("QUINNCALC_COLOR", "1", 1);
  const auto r = run({"check-relation", "newseq", "vertexpass"});
  ::unsetenv("QUINNCALC_COLOR");
  CHECK(r.code == 0);
  CHECK(has(r.out, "\x1b["));
  CHECK_FALSE(has(run({"check-relation", "newseq", "vertexpass"}).out, "\x1b["));
}
