// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "helpers.hpp"
#include "oracle.hpp"
#include "quinn/ambialgebra.hpp"
#include "quinn/fusion_category.hpp"
#include "quinn/move_script.hpp"
#include "quinn/presentation.hpp"
#include "quinn/reproduce.hpp"

using namespace quinn;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body) {
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  if (!r.ok) ++failures;
  std::printf("criterion %d: %s %s", n, r.ok ? "PASS" : "FAIL", title.c_str());
  if (!r.detail.empty()) std::printf(" (%s)", r.detail.c_str());
  std::printf("\n");
}

Outcome vertex_example(const FusionCategory& cat, const char* start,
                       const std::vector<std::pair<std::int64_t, std::string>>& want) {
  const auto site = example_vertex_descriptor();
  const auto s = testing::tree_state(cat, start);
  const auto expected = testing::combo(cat, want);
  const auto a = evaluate(cat, new_sequence(site), s);
  const auto b = evaluate(cat, vertex_pass(site), s);
  return {a == expected && b == expected, print_state(cat, a)};
}

}  // namespace

int main() {
  const FusionCategory cat = builtin_c5();
  const PrimeField& f = cat.field();
  const ObjectId A = cat.id_of("A");

  criterion(1, "F(A,A,A;A) = [[2,4],[3,3]] is its own inverse", [&]() -> Outcome {
    const Matrix& F = cat.f_block(A, A, A, A).matrix;
    return {F.to_string() == "[[2,4],[3,3]]" && F.multiply(f, F).is_identity(), F.to_string()};
  });

  criterion(2, "pairing of A is 1 and coform of A is 3", [&]() -> Outcome {
    const auto pa = pairing_scalar(cat, A);
    const auto ca = cat.coform_scalar(A);
    return {pa == Scalar{1} && ca == Scalar{3} && validate(cat).all_passed(),
            "pairing " + std::to_string(pa.value) + ", coform " + std::to_string(ca.value)};
  });

  criterion(3, "e = I + 3A and c = I + 4A", [&]() -> Outcome {
    const auto e = unit_e(cat);
    const auto c = trace_unit_solve(cat);
    const bool ok = print_element(cat, e) == "I + 3A" && print_element(cat, c) == "I + 4A" &&
                    trace_unit_general(cat) == c && m_psi_delta(cat, c) == e;
    return {ok, "e = " + print_element(cat, e) + ", c = " + print_element(cat, c)};
  });

  const std::string end1 = "( A ( A ( A A ):1 ):A ):1";
  const std::string endA = "( A ( A ( A A ):A ):A ):1";
  criterion(4, "example 1", [&] {
    return vertex_example(cat, "( A ( ( A A ):A A ):A ):1", {{4, end1}, {3, endA}});
  });
  criterion(5, "example 2", [&] {
    return vertex_example(cat, "( A ( ( A A ):1 A ):A ):1", {{2, end1}, {3, endA}});
  });
  criterion(6, "example 3", [&] {
    return vertex_example(cat, "( 1 ( ( A A ):A A ):1 ):1", {{1, "( 1 ( A ( A A ):A ):1 ):1"}});
  });
  criterion(7, "example 4", [&] {
    return vertex_example(cat, "( A ( ( 1 1 ):1 A ):A ):1", {{1, "( A ( 1 ( 1 A ):A ):A ):1"}});
  });

  criterion(8, "bubble relation is the identity on both sites", [&]() -> Outcome {
    std::size_t starts = 0;
    for (const auto& site : {example_bubble_descriptor(), nested_bubble_descriptor()}) {
      const auto r = check_relation(cat, bubble_relation(site), identity_script(site.shape));
      if (!r.equal) return {false, "differs on " + print_tree(cat, r.rows[*r.first_counterexample].start)};
      starts += r.rows.size();
    }
    return {true, std::to_string(starts) + " starts"};
  });

  criterion(9, "new sequence equals the vertex pass on every admissible start", [&]() -> Outcome {
    const auto site = example_vertex_descriptor();
    const auto r = check_relation(cat, new_sequence(site), vertex_pass(site));
    const bool complete = r.rows.size() == enumerate_admissible(cat, site.shape).size();
    return {r.equal && complete && r.rows.size() == 13, std::to_string(r.rows.size()) + " starts"};
  });

  criterion(10, "primitive moves agree with the brute-force oracle up to 6 leaves", [&]() -> Outcome {
    const auto r = oracle::sweep(cat, 6);
    return {r.mismatches == 0 && r.moves > 0,
            std::to_string(r.moves) + " move instances" +
                (r.mismatches ? ", first mismatch " + r.first_mismatch : "")};
  });

  criterion(11, "pentagon equations hold", [&]() -> Outcome {
    const auto r = oracle::pentagon(cat);
    return {r.failures == 0 && r.equations > 0, std::to_string(r.equations) + " equations"};
  });

  criterion(12, "relator transformations keep the Smith invariants", [&]() -> Outcome {
    using Kind = Transformation::Kind;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> letter(1, 3), len(0, 5), kind(0, 3);
    std::bernoulli_distribution neg(0.5);
    const auto word = [&] {
      Word w(static_cast<std::size_t>(len(rng)));
      for (auto& x : w) x = neg(rng) ? -letter(rng) : letter(rng);
      return w;
    };
    for (int script = 0; script < 100; ++script) {
      Presentation p = make_presentation(3, {word(), word(), word()});
      const auto before = smith_invariants(p);
      for (int step = 0; step < 10; ++step) {
        std::uniform_int_distribution<std::size_t> rel(0, 2);
        const std::size_t i = rel(rng);
        const std::size_t k = (i + 1 + rel(rng) % 2) % 3;
        Transformation t;
        switch (kind(rng)) {
          case 0: t = {Kind::Conjugate, i, 0, 1, word()}; break;
          case 1: t = {Kind::Invert, i, 0, 1, {}}; break;
          case 2: t = {Kind::MultiplyRight, i, k, neg(rng) ? -1 : 1, {}}; break;
          default: t = {Kind::MultiplyLeft, i, k, neg(rng) ? -1 : 1, {}}; break;
        }
        p = apply(p, t);
      }
      if (smith_invariants(p) != before) return {false, "script " + std::to_string(script)};
    }
    for (int i = 0; i < 1000; ++i) {
      const Word w = free_reduce(word());
      if (free_reduce(w) != w) return {false, "free reduction not idempotent"};
    }
    return {true, "100 scripts, 1000 words"};
  });

  criterion(13, "text formats round-trip and the reproduction is deterministic", [&]() -> Outcome {
    for (const auto& line : testing::fixture_lines("trees.txt")) {
      const auto t = parse_tree(cat, line);
      if (parse_tree(cat, print_tree(cat, t)) != t) return {false, "tree " + line};
    }
    for (const char* name : {"newseq.qs", "bubble_nested.qs", "coform_loop.qs", "explicit_trace.qs"}) {
      const auto s = parse_script(cat, testing::read_fixture(name));
      if (!(parse_script(cat, print_script(cat, s)) == s)) return {false, name};
    }
    for (const char* name : {"c5.cat", "z2sign.cat", "fib11.cat", "fib19.cat", "broken_pentagon.cat"}) {
      const auto c = testing::load(name);
      if (print_category(parse_category(print_category(c))) != print_category(c)) return {false, name};
    }
    const auto a = format_reproduction(reproduce_paper());
    const auto b = format_reproduction(reproduce_paper());
    bool rows_ok = true;
    for (const auto& r : reproduce_paper()) rows_ok = rows_ok && r.ok;
    return {a == b && rows_ok, rows_ok ? "" : "reproduction rows differ"};
  });

  return failures == 0 ? 0 : 1;
}
