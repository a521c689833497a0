#include "quinn/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace quinn {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return free_reduce(out);
}

Presentation make_presentation(std::size_t generators, std::vector<Word> relators) {
  if (generators > 26) throw Error("at most 26 generators");
  for (Word& r : relators) {
    for (int x : r) {
      if (x == 0 || static_cast<std::size_t>(std::abs(x)) > generators) {
        throw Error("relator letter out of range");
      }
    }
    r = free_reduce(r);
  }
  return {generators, std::move(relators)};
}

namespace {

using Kind = Transformation::Kind;

void check_relator(const Presentation& p, std::size_t i) {
  if (i >= p.relators.size()) throw Error("no relator " + std::to_string(i + 1));
}

void check_generator(const Presentation& p, std::size_t i) {
  if (i >= p.generators) throw Error("no generator " + std::to_string(i + 1));
}

void check_word(const Presentation& p, const Word& w) {
  for (int x : w) {
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > p.generators) {
      throw Error("word uses a letter outside the presentation");
    }
  }
}

Word power(const Word& w, int sign) { return sign > 0 ? w : inverse(w); }

Word substitute(const Word& r, int gen_letter, const Word& image) {
  Word out;
  for (int x : r) {
    if (x == gen_letter) {
      out.insert(out.end(), image.begin(), image.end());
    } else if (x == -gen_letter) {
      const Word inv = inverse(image);
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.push_back(x);
    }
  }
  return free_reduce(out);
}

}  // namespace

Presentation apply(const Presentation& p, const Transformation& t) {
  Presentation out = p;
  auto& rel = out.relators;
  switch (t.kind) {
    case Kind::Conjugate:
      check_relator(p, t.i);
      check_word(p, t.word);
      rel[t.i] = concat(concat(t.word, rel[t.i]), inverse(t.word));
      break;
    case Kind::Invert:
      check_relator(p, t.i);
      rel[t.i] = inverse(rel[t.i]);
      break;
    case Kind::MultiplyRight:
    case Kind::MultiplyLeft: {
      check_relator(p, t.i);
      check_relator(p, t.k);
      if (t.i == t.k) throw Error("a relator cannot be multiplied by itself");
      const Word m = power(rel[t.k], t.sign);
      rel[t.i] = t.kind == Kind::MultiplyRight ? concat(rel[t.i], m) : concat(m, rel[t.i]);
      break;
    }
    case Kind::GeneratorInvert:
      check_generator(p, t.i);
      for (Word& r : rel) r = substitute(r, static_cast<int>(t.i) + 1, {-static_cast<int>(t.i) - 1});
      break;
    case Kind::GeneratorMultiplyRight:
    case Kind::GeneratorMultiplyLeft: {
      check_generator(p, t.i);
      check_generator(p, t.k);
      if (t.i == t.k) throw Error("a generator cannot be multiplied by itself");
      const int ai = static_cast<int>(t.i) + 1;
      const int ak = t.sign * (static_cast<int>(t.k) + 1);
      const Word image = t.kind == Kind::GeneratorMultiplyRight ? Word{ai, ak} : Word{ak, ai};
      for (Word& r : rel) r = substitute(r, ai, image);
      break;
    }
    case Kind::Prolong: {
      check_word(p, t.word);
      if (p.generators >= 26) throw Error("at most 26 generators");
      ++out.generators;
      rel.push_back(concat(inverse(t.word), {static_cast<int>(out.generators)}));
      break;
    }
    case Kind::Deprolong: {
      const int a = static_cast<int>(p.generators);
      if (a == 0 || rel.empty() || rel.back().empty() || rel.back().back() != a) {
        throw Error("deprolong: last relator is not of the form w^-1 x with x the last generator");
      }
      for (std::size_t r = 0; r < rel.size(); ++r) {
        const Word& w = rel[r];
        const std::size_t limit = r + 1 == rel.size() ? w.size() - 1 : w.size();
        for (std::size_t j = 0; j < limit; ++j) {
          if (std::abs(w[j]) == a) throw Error("deprolong: last generator occurs elsewhere");
        }
      }
      rel.pop_back();
      --out.generators;
      break;
    }
    case Kind::Swap:
      check_relator(p, t.i);
      check_relator(p, t.k);
      std::swap(rel[t.i], rel[t.k]);
      break;
  }
  return out;
}

Transformation inverse(const Presentation& before, const Transformation& t) {
  Transformation inv = t;
  switch (t.kind) {
    case Kind::Conjugate:
      inv.word = inverse(t.word);
      break;
    case Kind::MultiplyRight:
    case Kind::MultiplyLeft:
    case Kind::GeneratorMultiplyRight:
    case Kind::GeneratorMultiplyLeft:
      inv.sign = -t.sign;
      break;
    case Kind::Invert:
    case Kind::GeneratorInvert:
    case Kind::Swap:
      break;
    case Kind::Prolong:
      inv = Transformation{Kind::Deprolong, 0, 0, 1, {}};
      break;
    case Kind::Deprolong: {
      if (before.relators.empty() || before.relators.back().empty()) {
        throw Error("deprolong: nothing to invert");
      }
      Word head = before.relators.back();
      head.pop_back();
      inv = Transformation{Kind::Prolong, 0, 0, 1, inverse(head)};
      break;
    }
  }
  return inv;
}

std::vector<std::int64_t> smith_invariants(const Presentation& p) {
  const std::size_t m = p.relators.size();
  const std::size_t n = p.generators;
  std::vector<std::vector<std::int64_t>> a(m, std::vector<std::int64_t>(n, 0));
  for (std::size_t r = 0; r < m; ++r) {
    for (int x : p.relators[r]) a[r][std::abs(x) - 1] += x > 0 ? 1 : -1;
  }
  const std::size_t d = std::min(m, n);
  for (std::size_t t = 0; t < d; ++t) {
    while (true) {
      std::size_t pr = m, pc = n;
      for (std::size_t r = t; r < m; ++r) {
        for (std::size_t c = t; c < n; ++c) {
          if (a[r][c] != 0 && (pr == m || std::llabs(a[r][c]) < std::llabs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == m) break;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      const std::int64_t piv = a[t][t];
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        const std::int64_t q = a[r][t] / piv;
        for (std::size_t c = t; c < n; ++c) a[r][c] -= q * a[t][c];
        clean = clean && a[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        const std::int64_t q = a[t][c] / piv;
        for (std::size_t r = t; r < m; ++r) a[r][c] -= q * a[r][t];
        clean = clean && a[t][c] == 0;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      for (std::size_t r = t + 1; r < m && clean; ++r) {
        for (std::size_t c = t + 1; c < n; ++c) {
          if (a[r][c] % piv != 0) {
            for (std::size_t j = t; j < n; ++j) a[t][j] += a[r][j];
            clean = false;
            break;
          }
        }
      }
      if (clean) break;
    }
  }
  std::vector<std::int64_t> diag(d);
  for (std::size_t t = 0; t < d; ++t) diag[t] = std::llabs(a[t][t]);
  return diag;
}

std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    const char base = static_cast<char>((x > 0 ? 'a' : 'A') + std::abs(x) - 1);
    out += base;
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  bool saw_one = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '1') {
      saw_one = true;
    } else if (c >= 'a' && c <= 'z') {
      w.push_back(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      w.push_back(-(c - 'A' + 1));
    } else {
      throw ParseError(std::string("unexpected '") + c + "' in word", 1, i + 1);
    }
  }
  if (saw_one && !w.empty()) throw ParseError("'1' must stand alone", 1, 1);
  return w;
}

std::string print_presentation(const Presentation& p) {
  std::string out = "<";
  for (std::size_t g = 0; g < p.generators; ++g) {
    if (g) out += ',';
    out += static_cast<char>('a' + g);
  }
  out += " |";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    out += r ? ", " : " ";
    out += print_word(p.relators[r]);
  }
  return out + ">";
}

Presentation parse_presentation(std::string_view text) {
  const std::size_t open = text.find('<');
  const std::size_t close = text.rfind('>');
  if (open == std::string_view::npos) throw ParseError("expected '<'", 1, 1);
  if (close == std::string_view::npos || close < open) {
    throw ParseError("expected '>'", 1, text.size() + 1);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((i < open || i > close) && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("text outside the presentation", 1, i + 1);
    }
  }
  const std::string_view body = text.substr(open + 1, close - open - 1);
  const std::size_t bar = body.find('|');
  const std::string_view gens = body.substr(0, bar);
  std::size_t n = 0;
  std::size_t col = open + 2;
  bool expect_name = true;
  for (std::size_t i = 0; i < gens.size(); ++i, ++col) {
    const char c = gens[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (expect_name) {
      if (c != static_cast<char>('a' + n)) {
        throw ParseError(std::string("expected generator '") + static_cast<char>('a' + n) + "'", 1,
                         col);
      }
      ++n;
      expect_name = false;
    } else if (c == ',') {
      expect_name = true;
    } else {
      throw ParseError("expected ','", 1, col);
    }
  }
  if (expect_name && n > 0) throw ParseError("trailing ',' in generator list", 1, col);
  std::vector<Word> relators;
  if (bar != std::string_view::npos) {
    std::string_view rest = body.substr(bar + 1);
    std::size_t base = open + 2 + bar + 1;
    bool any = false;
    for (char c : rest) any = any || !std::isspace(static_cast<unsigned char>(c));
    while (any) {
      const std::size_t comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      bool blank = true;
      for (char c : item) blank = blank && std::isspace(static_cast<unsigned char>(c));
      if (blank) throw ParseError("empty relator (write 1 for the empty word)", 1, base);
      try {
        relators.push_back(parse_word(item));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), 1, base + e.column() - 1);
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
      base += comma + 1;
    }
  }
  for (const Word& r : relators) {
    for (int x : r) {
      if (static_cast<std::size_t>(std::abs(x)) > n) {
        throw ParseError("relator uses an undeclared generator", 1, open + 1);
      }
    }
  }
  return make_presentation(n, std::move(relators));
}

std::string print_transformation(const Transformation& t) {
  const auto quoted = [](const Word& w) {
    std::string s;
    for (char c : print_word(w)) {
      if (c != ' ' && c != '1') s += c;
    }
    return "\"" + s + "\"";
  };
  const std::string i = std::to_string(t.i + 1);
  const std::string k = (t.sign < 0 ? "-" : "") + std::to_string(t.k + 1);
  switch (t.kind) {
    case Kind::Conjugate: return "conj " + i + " by " + quoted(t.word);
    case Kind::Invert: return "inv " + i;
    case Kind::MultiplyRight: return "mulR " + i + " " + k;
    case Kind::MultiplyLeft: return "mulL " + i + " " + k;
    case Kind::GeneratorInvert: return "geninv " + i;
    case Kind::GeneratorMultiplyRight: return "genmulR " + i + " " + k;
    case Kind::GeneratorMultiplyLeft: return "genmulL " + i + " " + k;
    case Kind::Prolong: return "prolong " + quoted(t.word);
    case Kind::Deprolong: return "deprolong";
    case Kind::Swap: return "swap " + i + " " + std::to_string(t.k + 1);
  }
  return {};
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
  bool quoted;
};

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (line[i] == '"') {
      const std::size_t end = line.find('"', i + 1);
      if (end == std::string_view::npos) throw ParseError("unterminated word", line_no, i + 1);
      out.push_back({std::string(line.substr(i + 1, end - i - 1)), start + 1, true});
      i = end + 1;
      continue;
    }
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1, false});
  }
  return out;
}

std::size_t parse_index(const Token& tok, std::size_t line_no, int* sign) {
  std::string_view s = tok.text;
  if (sign) {
    *sign = 1;
    if (!s.empty() && s[0] == '-') {
      *sign = -1;
      s.remove_prefix(1);
    }
  }
  if (s.empty() || s.size() > 6) throw ParseError("expected an index", line_no, tok.column);
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("expected an index", line_no, tok.column);
    }
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  if (v == 0) throw ParseError("indices start at 1", line_no, tok.column);
  return v - 1;
}

}  // namespace

std::vector<Transformation> parse_transformations(std::string_view text) {
  std::vector<Transformation> out;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(begin, end - begin);
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    begin = end + 1;
    const auto tok = tokenize(line, line_no);
    if (!tok.empty()) {
      const std::string& op = tok[0].text;
      const auto need = [&](std::size_t n) {
        if (tok.size() != n) {
          throw ParseError("'" + op + "' takes " + std::to_string(n - 1) + " operands", line_no,
                           tok[0].column);
        }
      };
      const auto word = [&](const Token& t) {
        if (!t.quoted) throw ParseError("expected a quoted word", line_no, t.column);
        try {
          return parse_word(t.text);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line_no, t.column + e.column());
        }
      };
      Transformation t;
      if (op == "conj") {
        need(4);
        if (tok[2].text != "by" || tok[2].quoted) {
          throw ParseError("expected 'by'", line_no, tok[2].column);
        }
        t = {Kind::Conjugate, parse_index(tok[1], line_no, nullptr), 0, 1, word(tok[3])};
      } else if (op == "inv" || op == "geninv") {
        need(2);
        t.kind = op == "inv" ? Kind::Invert : Kind::GeneratorInvert;
        t.i = parse_index(tok[1], line_no, nullptr);
      } else if (op == "mulR" || op == "mulL" || op == "genmulR" || op == "genmulL") {
        need(3);
        t.kind = op == "mulR"    ? Kind::MultiplyRight
                 : op == "mulL"  ? Kind::MultiplyLeft
                 : op == "genmulR" ? Kind::GeneratorMultiplyRight
                                   : Kind::GeneratorMultiplyLeft;
        t.i = parse_index(tok[1], line_no, nullptr);
        t.k = parse_index(tok[2], line_no, &t.sign);
      } else if (op == "swap") {
        need(3);
        t.kind = Kind::Swap;
        t.i = parse_index(tok[1], line_no, nullptr);
        t.k = parse_index(tok[2], line_no, nullptr);
      } else if (op == "prolong") {
        need(2);
        t = {Kind::Prolong, 0, 0, 1, word(tok[1])};
      } else if (op == "deprolong") {
        need(1);
        t.kind = Kind::Deprolong;
      } else {
        throw ParseError("unknown transformation '" + op + "'", line_no, tok[0].column);
      }
      out.push_back(std::move(t));
    }
    if (end == text.size()) break;
  }
  return out;
}

}  // namespace quinn
