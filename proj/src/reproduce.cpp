#include "quinn/reproduce.hpp"

#include <algorithm>
#include <sstream>

#include "quinn/ambialgebra.hpp"
#include "quinn/fusion_category.hpp"
#include "quinn/move_script.hpp"
#include "quinn/tree_syntax.hpp"

namespace quinn {

namespace {

struct VertexExample {
  const char* name;
  const char* start;
  std::vector<std::pair<int, const char*>> expected;
};

StateVector expected_state(const FusionCategory& cat,
                           const std::vector<std::pair<int, const char*>>& terms) {
  StateVector out(cat.field(), parse_tree(cat, terms.front().second).shape);
  for (const auto& [coeff, tree] : terms) {
    out = out.plus(StateVector::basis(cat.field(), parse_tree(cat, tree)).scaled(cat.field().of(coeff)));
  }
  return out;
}

void add(std::vector<ReproRow>& rows, std::string item, std::string expected, std::string computed) {
  const bool ok = expected == computed;
  rows.push_back({std::move(item), std::move(expected), std::move(computed), ok});
}

}  // namespace

std::vector<ReproRow> reproduce_paper() {
  const FusionCategory cat = builtin_c5();
  const PrimeField& f = cat.field();
  const ObjectId A = cat.id_of("A");
  std::vector<ReproRow> rows;

  const Matrix& F = cat.f_block(A, A, A, A).matrix;
  add(rows, "F(A,A,A;A)", "[[2,4],[3,3]]", F.to_string());
  add(rows, "F(A,A,A;A)^2", "[[1,0],[0,1]]", F.multiply(f, F).to_string());
  add(rows, "coform(A)", "3", std::to_string(cat.coform_scalar(A).value));
  add(rows, "pairing(A)", "1", std::to_string(pairing_scalar(cat, A).value));
  add(rows, "unit e", "I + 3A", print_element(cat, unit_e(cat)));
  add(rows, "trace unit c", "I + 4A", print_element(cat, trace_unit_solve(cat)));
  add(rows, "trace unit c (closed form)", "I + 4A", print_element(cat, trace_unit_general(cat)));

  const std::vector<VertexExample> examples = {
      {"example 1",
       "( A ( ( A A ):A A ):A ):1",
       {{4, "( A ( A ( A A ):1 ):A ):1"}, {3, "( A ( A ( A A ):A ):A ):1"}}},
      {"example 2",
       "( A ( ( A A ):1 A ):A ):1",
       {{2, "( A ( A ( A A ):1 ):A ):1"}, {3, "( A ( A ( A A ):A ):A ):1"}}},
      {"example 3", "( 1 ( ( A A ):A A ):1 ):1", {{1, "( 1 ( A ( A A ):A ):1 ):1"}}},
      {"example 4", "( A ( ( 1 1 ):1 A ):A ):1", {{1, "( A ( 1 ( 1 A ):A ):A ):1"}}},
      {"all-unit start", "( 1 ( ( 1 1 ):1 1 ):1 ):1", {{1, "( 1 ( 1 ( 1 1 ):1 ):1 ):1"}}},
  };
  const VertexDescriptor site = example_vertex_descriptor();
  const MoveScript newseq = new_sequence(site);
  const MoveScript pass = vertex_pass(site);
  for (const auto& ex : examples) {
    const StateVector start = StateVector::basis(f, parse_tree(cat, ex.start));
    const std::string want = print_state(cat, expected_state(cat, ex.expected));
    add(rows, std::string(ex.name) + " newseq", want, print_state(cat, evaluate(cat, newseq, start)));
    add(rows, std::string(ex.name) + " vertexpass", want, print_state(cat, evaluate(cat, pass, start)));
  }

  const std::vector<std::pair<BubbleDescriptor, const char*>> bubbles = {
      {example_bubble_descriptor(), "( A A ):1"},
      {nested_bubble_descriptor(), "( ( A A ):A A ):1"},
      {example_bubble_descriptor(), "( 1 1 ):1"},
  };
  for (const auto& [site_b, tree] : bubbles) {
    const StateVector start = StateVector::basis(f, parse_tree(cat, tree));
    add(rows, std::string("bubble on ") + tree, print_state(cat, start),
        print_state(cat, evaluate(cat, bubble_relation(site_b), start)));
  }

  const RelationReport rel = check_relation(cat, newseq, pass);
  add(rows, "newseq = vertexpass on all starts",
      "EQUAL over " + std::to_string(rel.rows.size()) + " starts",
      (rel.equal ? "EQUAL" : "DIFFERENT") + std::string(" over ") + std::to_string(rel.rows.size()) +
          " starts");
  return rows;
}

std::string format_reproduction(const std::vector<ReproRow>& rows) {
  std::size_t w_item = 4, w_exp = 8;
  for (const auto& r : rows) {
    w_item = std::max(w_item, r.item.size());
    w_exp = std::max(w_exp, r.expected.size());
  }
  const auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  std::ostringstream os;
  os << pad("item", w_item) << "  " << pad("expected", w_exp) << "  computed\n";
  std::size_t ok = 0;
  for (const auto& r : rows) {
    os << pad(r.item, w_item) << "  " << pad(r.expected, w_exp) << "  " << r.computed
       << (r.ok ? "" : "  MISMATCH") << '\n';
    ok += r.ok;
  }
  os << ok << '/' << rows.size() << " rows match\n";
  return os.str();
}

}  // namespace quinn
