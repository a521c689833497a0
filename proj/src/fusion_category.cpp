#include "quinn/fusion_category.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace quinn {

namespace {

std::string tuple_string(const FusionCategory& cat, std::initializer_list<ObjectId> ids,
                         std::size_t split_at) {
  std::string s = "(";
  std::size_t i = 0;
  for (ObjectId id : ids) {
    if (i) s += (i == split_at) ? ";" : ",";
    s += cat.name(id);
    ++i;
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------- builder

CategoryBuilder& CategoryBuilder::object(std::string name, std::string dual) {
  objects_.emplace_back(std::move(name), std::move(dual));
  return *this;
}

CategoryBuilder& CategoryBuilder::fuse(std::string a, std::string b,
                                       std::vector<std::string> outcomes) {
  fusions_.push_back({{std::move(a), std::move(b)}, std::move(outcomes)});
  return *this;
}

CategoryBuilder& CategoryBuilder::f_block(std::string a, std::string b, std::string c,
                                          std::string d,
                                          std::vector<std::vector<std::int64_t>> rows) {
  blocks_.push_back({{std::move(a), std::move(b), std::move(c), std::move(d)}, std::move(rows)});
  return *this;
}

CategoryBuilder& CategoryBuilder::coform(std::string a, std::int64_t value) {
  coforms_.emplace_back(std::move(a), value);
  return *this;
}

FusionCategory CategoryBuilder::build() const {
  FusionCategory cat{PrimeField(prime_)};
  if (objects_.empty()) throw Error("category has no objects");
  if (objects_.size() > 256) throw Error("too many objects");

  std::map<std::string, ObjectId, std::less<>> ids;
  for (const auto& [name, dual] : objects_) {
    if (name.empty()) throw Error("empty object name");
    const ObjectId id{static_cast<std::uint16_t>(cat.objects_.size())};
    if (!ids.emplace(name, id).second) throw Error("duplicate object '" + name + "'");
    cat.objects_.push_back({id, name, ObjectId{}});
  }
  auto lookup = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it == ids.end()) throw Error("unknown object '" + name + "'");
    return it->second;
  };
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    cat.objects_[i].dual = lookup(objects_[i].second);
  }

  const std::size_t n = cat.size();
  cat.fusion_.assign(n * n * n, 0);
  auto set_n = [&](ObjectId a, ObjectId b, ObjectId c, std::uint8_t v) {
    cat.fusion_[(a.value * n + b.value) * n + c.value] = v;
  };
  std::set<std::pair<ObjectId, ObjectId>> explicit_pairs;
  for (const auto& [pair, outs] : fusions_) {
    const ObjectId a = lookup(pair[0]);
    const ObjectId b = lookup(pair[1]);
    explicit_pairs.insert({a, b});
    for (std::size_t c = 0; c < n; ++c) set_n(a, b, ObjectId{static_cast<std::uint16_t>(c)}, 0);
    for (const auto& o : outs) set_n(a, b, lookup(o), 1);
  }
  // Unit fusion is implied unless stated explicitly.
  for (ObjectId a : cat.objects()) {
    if (!explicit_pairs.contains({kUnit, a})) set_n(kUnit, a, a, 1);
    if (!explicit_pairs.contains({a, kUnit})) set_n(a, kUnit, a, 1);
  }

  std::map<std::array<ObjectId, 4>, const BlockSpec*> given;
  for (const auto& spec : blocks_) {
    std::array<ObjectId, 4> key{lookup(spec.key[0]), lookup(spec.key[1]), lookup(spec.key[2]),
                                lookup(spec.key[3])};
    given[key] = &spec;
  }

  const PrimeField& f = cat.field_;
  for (ObjectId a : cat.objects()) {
    for (ObjectId b : cat.objects()) {
      for (ObjectId c : cat.objects()) {
        for (ObjectId d : cat.objects()) {
          const std::array<ObjectId, 4> key{a, b, c, d};
          auto left = cat.left_channels(a, b, c, d);
          auto right = cat.right_channels(a, b, c, d);
          auto g = given.find(key);
          const std::string where = "F" + tuple_string(cat, {a, b, c, d}, 3);
          if (left.empty() && right.empty()) {
            if (g != given.end()) throw Error(where + " given for an inadmissible triple");
            continue;
          }
          Matrix m(left.size(), right.size());
          if (g != given.end()) {
            const auto& rows = g->second->rows;
            if (rows.size() != left.size()) throw Error(where + " has wrong row count");
            for (std::size_t r = 0; r < rows.size(); ++r) {
              if (rows[r].size() != right.size()) throw Error(where + " has wrong column count");
              for (std::size_t col = 0; col < rows[r].size(); ++col) m(r, col) = f.of(rows[r][col]);
            }
          } else if (left.size() == 1 && right.size() == 1) {
            m(0, 0) = f.one();
          } else if (left.size() == right.size()) {
            throw Error("missing " + where);
          }
          auto inv = m.inverse(f);
          cat.blocks_.emplace(key, FBlock{std::move(left), std::move(right), std::move(m),
                                          std::move(inv)});
        }
      }
    }
  }

  cat.coform_.assign(n, f.one());
  for (const auto& [name, value] : coforms_) cat.coform_[lookup(name).value] = f.of(value);
  return cat;
}

// ---------------------------------------------------------------- category

std::vector<ObjectId> FusionCategory::objects() const {
  std::vector<ObjectId> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(ObjectId{static_cast<std::uint16_t>(i)});
  return out;
}

const SimpleObject& FusionCategory::object(ObjectId id) const {
  if (!valid(id)) throw Error("unknown object id " + std::to_string(id.value));
  return objects_[id.value];
}

std::optional<ObjectId> FusionCategory::find(std::string_view name) const {
  for (const auto& o : objects_) {
    if (o.name == name) return o.id;
  }
  return std::nullopt;
}

ObjectId FusionCategory::id_of(std::string_view name) const {
  auto id = find(name);
  if (!id) throw Error("unknown object '" + std::string(name) + "'");
  return *id;
}

std::vector<ObjectId> FusionCategory::fuse(ObjectId a, ObjectId b) const {
  object(a);
  object(b);
  std::vector<ObjectId> out;
  for (ObjectId c : objects()) {
    if (n(a, b, c)) out.push_back(c);
  }
  return out;
}

std::vector<ObjectId> FusionCategory::left_channels(ObjectId a, ObjectId b, ObjectId c,
                                                    ObjectId d) const {
  std::vector<ObjectId> out;
  for (ObjectId e : objects()) {
    if (n(a, b, e) && n(e, c, d)) out.push_back(e);
  }
  return out;
}

std::vector<ObjectId> FusionCategory::right_channels(ObjectId a, ObjectId b, ObjectId c,
                                                     ObjectId d) const {
  std::vector<ObjectId> out;
  for (ObjectId f : objects()) {
    if (n(b, c, f) && n(a, f, d)) out.push_back(f);
  }
  return out;
}

const FBlock* FusionCategory::find_block(ObjectId a, ObjectId b, ObjectId c, ObjectId d) const {
  auto it = blocks_.find({a, b, c, d});
  return it == blocks_.end() ? nullptr : &it->second;
}

const FBlock& FusionCategory::f_block(ObjectId a, ObjectId b, ObjectId c, ObjectId d) const {
  const FBlock* blk = find_block(a, b, c, d);
  if (!blk || blk->left_channels.empty() || blk->right_channels.empty()) {
    throw Error("inadmissible triple " + tuple_string(*this, {a, b, c, d}, 3));
  }
  return *blk;
}

namespace {

std::optional<std::size_t> index_of(const std::vector<ObjectId>& v, ObjectId x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

}  // namespace

Scalar FusionCategory::f_entry(ObjectId a, ObjectId b, ObjectId c, ObjectId d, ObjectId e,
                               ObjectId f) const {
  const FBlock* blk = find_block(a, b, c, d);
  if (!blk) return field_.zero();
  auto r = index_of(blk->left_channels, e);
  auto col = index_of(blk->right_channels, f);
  if (!r || !col) return field_.zero();
  return blk->matrix(*r, *col);
}

Scalar FusionCategory::f_inverse_entry(ObjectId a, ObjectId b, ObjectId c, ObjectId d,
                                       ObjectId f, ObjectId e) const {
  const FBlock* blk = find_block(a, b, c, d);
  if (!blk) return field_.zero();
  auto col = index_of(blk->right_channels, f);
  auto r = index_of(blk->left_channels, e);
  if (!r || !col) return field_.zero();
  if (!blk->inverse) {
    throw Error("F-block " + tuple_string(*this, {a, b, c, d}, 3) + " is not invertible");
  }
  return (*blk->inverse)(*col, *r);
}

Scalar FusionCategory::form_scalar(ObjectId a) const {
  object(a);
  return field_.one();
}

Scalar FusionCategory::coform_scalar(ObjectId a) const { return coform_.at(object(a).id.value); }

bool operator==(const FusionCategory& x, const FusionCategory& y) {
  if (!(x.field_ == y.field_) || x.fusion_ != y.fusion_ || x.coform_ != y.coform_) return false;
  if (x.objects_.size() != y.objects_.size()) return false;
  for (std::size_t i = 0; i < x.objects_.size(); ++i) {
    if (x.objects_[i].name != y.objects_[i].name || x.objects_[i].dual != y.objects_[i].dual) {
      return false;
    }
  }
  if (x.blocks_.size() != y.blocks_.size()) return false;
  for (const auto& [key, blk] : x.blocks_) {
    auto it = y.blocks_.find(key);
    if (it == y.blocks_.end() || !(it->second.matrix == blk.matrix)) return false;
  }
  return true;
}

FusionCategory builtin_c5() {
  return CategoryBuilder(5)
      .object("1", "1")
      .object("A", "A")
      .fuse("A", "A", {"1", "A"})
      .f_block("A", "A", "A", "A", {{2, 4}, {3, 3}})
      .f_block("A", "A", "A", "1", {{1}})
      .coform("A", 3)
      .build();
}

FusionCategory builtin_trivial(std::uint32_t prime) {
  return CategoryBuilder(prime).object("1", "1").build();
}

// ---------------------------------------------------------------- validation

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Scalar pairing_scalar(const FusionCategory& cat, ObjectId a) {
  const PrimeField& f = cat.field();
  const ObjectId abar = cat.dual(a);
  const Scalar assoc = cat.f_entry(a, abar, a, a, kUnit, kUnit);
  return f.mul(f.mul(cat.form_scalar(a), assoc), cat.coform_scalar(abar));
}

namespace {

void fail(AxiomCheck& check, std::string witness) {
  if (check.passed) {
    check.passed = false;
    check.witness = std::move(witness);
  }
}

AxiomCheck check_unit_laws(const FusionCategory& cat) {
  AxiomCheck check{"unit-laws", true, {}, {}};
  for (ObjectId a : cat.objects()) {
    for (ObjectId c : cat.objects()) {
      const int want = (a == c) ? 1 : 0;
      if (cat.n(kUnit, a, c) != want) fail(check, "n" + tuple_string(cat, {kUnit, a, c}, 9));
      if (cat.n(a, kUnit, c) != want) fail(check, "n" + tuple_string(cat, {a, kUnit, c}, 9));
    }
  }
  return check;
}

AxiomCheck check_duality(const FusionCategory& cat) {
  AxiomCheck check{"duality", true, {}, {}};
  if (cat.dual(kUnit) != kUnit) fail(check, "dual(" + cat.name(kUnit) + ")");
  for (ObjectId a : cat.objects()) {
    if (cat.dual(cat.dual(a)) != a) fail(check, "dual(dual(" + cat.name(a) + "))");
    for (ObjectId b : cat.objects()) {
      const int want = (b == cat.dual(a)) ? 1 : 0;
      if (cat.n(a, b, kUnit) != want) fail(check, "n" + tuple_string(cat, {a, b, kUnit}, 9));
    }
  }
  return check;
}

AxiomCheck check_fusion_associativity(const FusionCategory& cat) {
  AxiomCheck check{"fusion-associativity", true, {}, {}};
  const auto objs = cat.objects();
  for (ObjectId a : objs)
    for (ObjectId b : objs)
      for (ObjectId c : objs)
        for (ObjectId d : objs) {
          int lhs = 0;
          int rhs = 0;
          for (ObjectId x : objs) {
            lhs += cat.n(a, b, x) * cat.n(x, c, d);
            rhs += cat.n(b, c, x) * cat.n(a, x, d);
          }
          if (lhs != rhs) fail(check, tuple_string(cat, {a, b, c, d}, 3));
        }
  return check;
}

AxiomCheck check_invertibility(const FusionCategory& cat) {
  AxiomCheck check{"block-invertibility", true, {}, {}};
  for (const auto& [key, blk] : cat.blocks()) {
    if (!blk.matrix.square() || !blk.inverse) {
      fail(check, "F" + tuple_string(cat, {key[0], key[1], key[2], key[3]}, 3));
    }
  }
  check.detail = std::to_string(cat.blocks().size()) + " blocks";
  return check;
}

AxiomCheck check_triangle(const FusionCategory& cat) {
  AxiomCheck check{"triangle", true, {}, {}};
  for (const auto& [key, blk] : cat.blocks()) {
    if (key[0] == kUnit || key[1] == kUnit || key[2] == kUnit) {
      if (!blk.matrix.is_identity()) {
        fail(check, "F" + tuple_string(cat, {key[0], key[1], key[2], key[3]}, 3));
      }
    }
  }
  return check;
}

AxiomCheck check_pentagon(const FusionCategory& cat) {
  AxiomCheck check{"pentagon", true, {}, {}};
  const PrimeField& fld = cat.field();
  const auto objs = cat.objects();
  std::size_t quintuples = 0;
  std::size_t equations = 0;
  for (ObjectId a : objs)
    for (ObjectId b : objs)
      for (ObjectId c : objs)
        for (ObjectId d : objs)
          for (ObjectId x : objs) {
            bool admissible = false;
            // Path (a)(b)(cd): ((ab)_e c)_k d  <-  a (b (cd)_g)_h, two ways.
            for (ObjectId e : cat.fuse(a, b))
              for (ObjectId k : cat.fuse(e, c)) {
                if (!cat.n(k, d, x)) continue;
                for (ObjectId g : cat.fuse(c, d))
                  for (ObjectId h : cat.fuse(b, g)) {
                    if (!cat.n(a, h, x)) continue;
                    admissible = true;
                    ++equations;
                    const Scalar lhs = fld.mul(cat.f_entry(e, c, d, x, k, g),
                                               cat.f_entry(a, b, g, x, e, h));
                    Scalar rhs = fld.zero();
                    for (ObjectId m : objs) {
                      const Scalar t = fld.mul(
                          fld.mul(cat.f_entry(a, b, c, k, e, m), cat.f_entry(a, m, d, x, k, h)),
                          cat.f_entry(b, c, d, h, m, g));
                      rhs = fld.add(rhs, t);
                    }
                    if (lhs != rhs) {
                      fail(check, tuple_string(cat, {a, b, c, d, x}, 4) + " e=" + cat.name(e) +
                                      " k=" + cat.name(k) + " g=" + cat.name(g) +
                                      " h=" + cat.name(h));
                    }
                  }
              }
            if (admissible) ++quintuples;
          }
  check.detail = std::to_string(quintuples) + " admissible quintuples, " +
                 std::to_string(equations) + " equations";
  return check;
}

AxiomCheck check_pairing(const FusionCategory& cat) {
  AxiomCheck check{"pairing", true, {}, {}};
  for (ObjectId a : cat.objects()) {
    if (pairing_scalar(cat, a) != cat.field().one()) fail(check, cat.name(a));
  }
  return check;
}

}  // namespace

ValidationReport validate(const FusionCategory& cat) {
  ValidationReport report;
  report.checks.push_back(check_unit_laws(cat));
  report.checks.push_back(check_duality(cat));
  report.checks.push_back(check_fusion_associativity(cat));
  report.checks.push_back(check_invertibility(cat));
  report.checks.push_back(check_triangle(cat));
  report.checks.push_back(check_pentagon(cat));
  report.checks.push_back(check_pairing(cat));
  return report;
}

// ---------------------------------------------------------------- file format

namespace {

struct LineCursor {
  std::string_view text;
  std::size_t line;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, line, pos + 1); }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  std::string word() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '=' && text[pos] != '[' && text[pos] != ']' && text[pos] != ',') {
      ++pos;
    }
    if (start == pos) error("expected a name");
    return std::string(text.substr(start, pos - start));
  }
  void expect(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) != token) error("expected '" + std::string(token) + "'");
    pos += token.size();
  }
  bool accept(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) != token) return false;
    pos += token.size();
    return true;
  }
  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{}) error("expected an integer");
    pos = static_cast<std::size_t>(ptr - text.data());
    return v;
  }
};

std::vector<std::vector<std::int64_t>> parse_matrix(LineCursor& cur) {
  std::vector<std::vector<std::int64_t>> rows;
  cur.expect("[");
  if (cur.accept("]")) return rows;
  do {
    cur.expect("[");
    std::vector<std::int64_t> row;
    if (!cur.accept("]")) {
      do {
        row.push_back(cur.integer());
      } while (cur.accept(","));
      cur.expect("]");
    }
    rows.push_back(std::move(row));
  } while (cur.accept(","));
  cur.expect("]");
  return rows;
}

}  // namespace

FusionCategory parse_category(std::string_view text, std::optional<std::uint32_t> prime_override) {
  CategoryBuilder builder(0);
  bool have_prime = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineCursor cur{line, line_no};
    if (cur.at_end()) continue;
    const std::string kw = cur.word();
    if (kw == "prime") {
      const auto p = cur.integer();
      if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint32_t>(p))) {
        cur.error("not a supported prime");
      }
      builder.prime(static_cast<std::uint32_t>(p));
      have_prime = true;
    } else if (kw == "object") {
      std::string name = cur.word();
      std::string dual = name;
      if (cur.accept("dual")) {
        cur.expect("=");
        dual = cur.word();
      }
      builder.object(std::move(name), std::move(dual));
    } else if (kw == "fuse") {
      std::string a = cur.word();
      std::string b = cur.word();
      cur.expect("->");
      std::vector<std::string> outs;
      while (!cur.at_end()) outs.push_back(cur.word());
      builder.fuse(std::move(a), std::move(b), std::move(outs));
    } else if (kw == "F") {
      std::string a = cur.word();
      std::string b = cur.word();
      std::string c = cur.word();
      cur.expect("@");
      std::string d = cur.word();
      cur.expect("=");
      builder.f_block(std::move(a), std::move(b), std::move(c), std::move(d), parse_matrix(cur));
    } else if (kw == "coform") {
      std::string a = cur.word();
      cur.expect("=");
      builder.coform(std::move(a), cur.integer());
    } else {
      cur.pos = 0;
      cur.error("unknown directive '" + kw + "'");
    }
    if (!cur.at_end()) cur.error("trailing input");
  }
  if (prime_override) {
    if (!is_prime(*prime_override) || *prime_override > 65521) {
      throw Error("not a supported prime: " + std::to_string(*prime_override));
    }
    builder.prime(*prime_override);
    have_prime = true;
  }
  if (!have_prime) throw ParseError("missing 'prime' line", 1, 1);
  return builder.build();
}

std::string print_category(const FusionCategory& cat) {
  std::ostringstream os;
  os << "prime " << cat.prime() << '\n';
  for (ObjectId a : cat.objects()) {
    os << "object " << cat.name(a) << " dual=" << cat.name(cat.dual(a)) << '\n';
  }
  for (ObjectId a : cat.objects()) {
    for (ObjectId b : cat.objects()) {
      const auto outs = cat.fuse(a, b);
      const bool unit_pair = (a == kUnit || b == kUnit);
      const bool implied = unit_pair && outs.size() == 1 && outs[0] == (a == kUnit ? b : a);
      if (implied || (!unit_pair && outs.empty())) continue;
      os << "fuse " << cat.name(a) << ' ' << cat.name(b) << " ->";
      for (ObjectId c : outs) os << ' ' << cat.name(c);
      os << '\n';
    }
  }
  for (const auto& [key, blk] : cat.blocks()) {
    if (blk.matrix.rows() == 1 && blk.matrix.cols() == 1 && blk.matrix.is_identity()) continue;
    os << "F " << cat.name(key[0]) << ' ' << cat.name(key[1]) << ' ' << cat.name(key[2])
       << " @ " << cat.name(key[3]) << " = " << blk.matrix.to_string() << '\n';
  }
  for (ObjectId a : cat.objects()) {
    if (cat.coform_scalar(a) != cat.field().one()) {
      os << "coform " << cat.name(a) << " = " << cat.coform_scalar(a).value << '\n';
    }
  }
  return os.str();
}

}  // namespace quinn
