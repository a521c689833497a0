#include "quinn/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "quinn/ambialgebra.hpp"
#include "quinn/fusion_category.hpp"
#include "quinn/move_script.hpp"
#include "quinn/presentation.hpp"
#include "quinn/reproduce.hpp"
#include "quinn/tree_syntax.hpp"

namespace quinn::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

class Painter {
 public:
  Painter() {
    const char* v = std::getenv("QUINNCALC_COLOR");
    on_ = v && std::string(v) == "1";
  }
  std::string good(const std::string& s) const { return on_ ? "\033[32m" + s + "\033[0m" : s; }
  std::string bad(const std::string& s) const { return on_ ? "\033[31m" + s + "\033[0m" : s; }
  std::string verdict(bool ok, const std::string& yes, const std::string& no) const {
    return ok ? good(yes) : bad(no);
  }

 private:
  bool on_ = false;
};

std::optional<std::string> read_if_file(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return std::nullopt;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw UsageError("cannot read " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FusionCategory load_category(const std::string& spec, const std::optional<std::uint32_t>& prime) {
  if (spec == "c5" || spec == "trivial") {
    if (prime) throw UsageError("--p applies only to category files");
    return spec == "c5" ? builtin_c5() : builtin_trivial();
  }
  auto text = read_if_file(spec);
  if (!text) throw UsageError("no category '" + spec + "' (use c5, trivial or a file)");
  return parse_category(*text, prime);
}

MoveScript load_script(const FusionCategory& cat, const std::string& spec,
                       const std::optional<Shape>& identity_shape) {
  if (auto b = builtin_script(spec)) return *b;
  if (spec == "identity" || spec == "empty") {
    if (!identity_shape) throw UsageError("'" + spec + "' needs the other script's shape");
    return identity_script(*identity_shape);
  }
  auto text = read_if_file(spec);
  if (!text) throw UsageError("no script '" + spec + "' (use a builtin name or a file)");
  return parse_script(cat, *text);
}

std::string trimmed(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

std::string text_or_file(const std::string& arg) {
  if (auto t = read_if_file(arg)) {
    // Allow `#` comment lines in tree and presentation files.
    std::istringstream in(*t);
    std::string line, body;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      body += line + "\n";
    }
    return trimmed(body);
  }
  return arg;
}

void print_trace_state(std::ostream& out, const FusionCategory& cat, const ScriptState& s) {
  if (const auto* v = std::get_if<StateVector>(&s)) {
    out << print_state(cat, *v);
  } else {
    out << print_split(cat, std::get<SplitState>(s));
  }
}

struct Options {
  std::string category = "c5";
  std::optional<std::uint32_t> prime;
  std::string start;
  std::string script;
  bool trace = false;
  std::string script_a;
  std::string script_b;
  bool table = false;
  std::string presentation;
  std::string transforms;
};

int cmd_validate(const Options& o, std::ostream& out, const Painter& paint) {
  const FusionCategory cat = load_category(o.category, o.prime);
  const ValidationReport report = validate(cat);
  for (const auto& c : report.checks) {
    out << paint.verdict(c.passed, "PASS", "FAIL") << ' ' << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    if (!c.witness.empty()) out << "  at " << c.witness;
    out << '\n';
  }
  return report.all_passed() ? kOk : kFailed;
}

int cmd_trace_unit(const Options& o, std::ostream& out, std::ostream& err) {
  const FusionCategory cat = load_category(o.category, o.prime);
  try {
    out << "e = " << print_element(cat, unit_e(cat)) << '\n';
    out << "c = " << print_element(cat, trace_unit_solve(cat)) << '\n';
  } catch (const Error& e) {
    err << "quinncalc: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const FusionCategory cat = load_category(o.category, o.prime);
  const RootTree tree = parse_tree(cat, text_or_file(o.start));
  const MoveScript script = load_script(cat, o.script, tree.shape);
  const StateVector start = StateVector::basis(cat.field(), tree);
  if (!o.trace) {
    out << print_state(cat, evaluate(cat, script, start)) << '\n';
    return kOk;
  }
  std::vector<TraceStep> steps;
  const StateVector result = evaluate_traced(cat, script, start, steps);
  out << "start  " << print_state(cat, start) << '\n';
  for (const auto& s : steps) {
    out << '[' << s.move_index + 1 << "] " << s.move_text << "\n    ";
    print_trace_state(out, cat, s.state);
    out << '\n';
  }
  out << "result " << print_state(cat, result) << '\n';
  return kOk;
}

int cmd_check_relation(const Options& o, std::ostream& out, const Painter& paint) {
  const FusionCategory cat = load_category(o.category, o.prime);
  const bool a_builtin_shape = builtin_script(o.script_a).has_value() || read_if_file(o.script_a);
  std::optional<Shape> shape;
  MoveScript a = a_builtin_shape ? load_script(cat, o.script_a, std::nullopt) : MoveScript{};
  if (a_builtin_shape) shape = a.input_shape;
  const MoveScript b = load_script(cat, o.script_b, shape);
  if (!a_builtin_shape) a = load_script(cat, o.script_a, b.input_shape);

  std::optional<std::vector<RootTree>> domain;
  if (!o.start.empty()) {
    const TreePattern pattern = parse_pattern(cat, text_or_file(o.start));
    domain = enumerate_pattern(cat, pattern);
  }
  const RelationReport report = check_relation(cat, a, b, domain);
  if (o.table) {
    for (const auto& row : report.rows) {
      out << print_tree(cat, row.start) << "\n  A: " << print_state(cat, row.output_a)
          << "\n  B: " << print_state(cat, row.output_b) << '\n';
    }
  }
  const std::string n = std::to_string(report.rows.size());
  if (report.equal) {
    out << paint.good("EQUAL") << " over " << n << " starts\n";
    return kOk;
  }
  const auto& row = report.rows[*report.first_counterexample];
  out << paint.bad("DIFFERENT") << " over " << n << " starts\n"
      << "first counterexample: " << print_tree(cat, row.start) << "\n  A: "
      << print_state(cat, row.output_a) << "\n  B: " << print_state(cat, row.output_b) << '\n';
  return kFailed;
}

int cmd_present_transform(const Options& o, std::ostream& out, const Painter& paint) {
  Presentation p = parse_presentation(text_or_file(o.presentation));
  std::string script_text = o.transforms;
  if (auto t = read_if_file(o.transforms)) {
    script_text = *t;
  } else {
    for (char& c : script_text) {
      if (c == ';') c = '\n';
    }
  }
  const auto steps = parse_transformations(script_text);
  const auto before = smith_invariants(p);
  const auto show = [](const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  out << "start  " << print_presentation(p) << '\n';
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      p = apply(p, steps[i]);
    } catch (const Error& e) {
      throw Error("step " + std::to_string(i + 1) + " (" + print_transformation(steps[i]) +
                  "): " + e.what());
    }
    if (o.trace) out << '[' << i + 1 << "] " << print_transformation(steps[i]) << "\n    "
                     << print_presentation(p) << '\n';
  }
  const auto after = smith_invariants(p);
  out << "result " << print_presentation(p) << '\n';
  out << "smith  " << show(before) << " -> " << show(after) << '\n';
  // Prolongations add a unit invariant; compare the non-unit parts.
  const auto core = [](std::vector<std::int64_t> v) {
    std::erase(v, 1);
    return v;
  };
  const bool same = core(before) == core(after);
  out << paint.verdict(same, "invariants agree", "invariants differ") << '\n';
  return same ? kOk : kFailed;
}

int cmd_reproduce(std::ostream& out, const Painter& paint) {
  const auto rows = reproduce_paper();
  out << format_reproduction(rows);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.ok;
  out << paint.verdict(ok, "all numbers reproduced", "some numbers differ") << '\n';
  return ok ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact state-sum computations over fusion categories mod p", "quinncalc"};
  app.require_subcommand(1);
  Options o;

  const auto category_flags = [&](CLI::App* sub) {
    sub->add_option("--category", o.category, "c5, trivial or a category file");
    sub->add_option("--p", o.prime, "prime overriding a category file's prime");
  };

  auto* validate_cmd = app.add_subcommand("validate-category", "check the category axioms");
  category_flags(validate_cmd);

  auto* trace_cmd = app.add_subcommand("trace-unit", "solve for the unit e and trace unit c");
  category_flags(trace_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a move script on a start tree");
  category_flags(eval_cmd);
  eval_cmd->add_option("--start", o.start, "tree expression or file")->required();
  eval_cmd->add_option("--script", o.script, "builtin name or script file")->required();
  eval_cmd->add_flag("--trace", o.trace, "print the state after every move");

  auto* rel_cmd = app.add_subcommand("check-relation", "compare two scripts on all starts");
  category_flags(rel_cmd);
  rel_cmd->add_option("script_a", o.script_a, "builtin name or script file")->required();
  rel_cmd->add_option("script_b", o.script_b, "builtin name, identity, or script file")->required();
  rel_cmd->add_option("--start", o.start, "tree pattern restricting the starts");
  rel_cmd->add_flag("--table", o.table, "print every start with both outputs");

  auto* present_cmd = app.add_subcommand("present", "presentation tools");
  present_cmd->require_subcommand(1);
  auto* transform_cmd = present_cmd->add_subcommand("transform", "apply a transformation script");
  transform_cmd->add_option("presentation", o.presentation, "presentation text or file")
      ->required();
  transform_cmd->add_option("--script", o.transforms, "script file, or lines separated by ';'")
      ->required();
  transform_cmd->add_flag("--trace", o.trace, "print the presentation after every step");

  auto* repro_cmd = app.add_subcommand("reproduce-paper", "table of the worked C5 numbers");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "quinncalc: " << e.what() << '\n';
    return kUsage;
  }

  const Painter paint;
  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out, paint);
    if (trace_cmd->parsed()) return cmd_trace_unit(o, out, err);
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (rel_cmd->parsed()) return cmd_check_relation(o, out, paint);
    if (transform_cmd->parsed()) return cmd_present_transform(o, out, paint);
    if (repro_cmd->parsed()) return cmd_reproduce(out, paint);
  } catch (const ParseError& e) {
    err << "quinncalc: parse error at " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "quinncalc: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace quinn::cli
