#include "sbim/textio.hpp"

#include <cctype>
#include <climits>
#include <sstream>

namespace sbim {

std::string annotate_parse_error(const std::string& input, const ParseError& e) {
  std::ostringstream out;
  out << "parse error: " << e.what() << " at position " << e.position << "\n";
  out << "  " << input << "\n";
  out << "  " << std::string(std::min(e.position, input.size()), ' ') << "^";
  return out.str();
}

std::string coeff_term_str(const Laurent& c, const std::string& symbol) {
  if (c.is_zero()) return "0";
  if (auto u = c.as_unit_monomial(); u && u->exp == 0)
    return u->sign > 0 ? symbol : "-" + symbol;
  if (c.terms().size() == 1) return c.str() + "*" + symbol;
  return "(" + c.str() + ")*" + symbol;
}

namespace {

std::string join_terms(std::vector<std::string> parts) {
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!parts[i].empty() && parts[i][0] == '-')
      out += " - " + parts[i].substr(1);
    else
      out += " + " + parts[i];
  }
  return out;
}

} // namespace

std::string ring_str(const Group& G, const RingElement& x) {
  std::vector<std::string> parts;
  for (const auto& [A, c] : x.terms()) parts.push_back(coeff_term_str(c, "R" + G.set_str(A)));
  return join_terms(std::move(parts));
}

std::string algebra_str(const AlgebraElement& a) {
  std::vector<std::string> parts;
  for (const CWord& mon : canonical_monomials()) {
    Laurent c = a.coeff(mon);
    if (!c.is_zero()) parts.push_back(coeff_term_str(c, cword_str(mon)));
  }
  // non-canonical keys should not occur; print them last if they ever do
  for (const auto& [w, c] : a.terms())
    if (canonical_index(w) < 0) parts.push_back(coeff_term_str(c, cword_str(w)));
  return join_terms(std::move(parts));
}

std::string character_str(const Group& G, const Character& c) {
  std::vector<std::string> parts;
  for (Elem a = 0; a < G.order(); ++a)
    if (c.coeff(a) != 0) parts.push_back(std::to_string(c.coeff(a)) + "*" + G.name(a));
  return join_terms(std::move(parts));
}

Json laurent_json(const Laurent& c) {
  Json j = Json::object();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    const Int& v = it->second;
    if (v >= LLONG_MIN && v <= LLONG_MAX)
      j[std::to_string(it->first)] = static_cast<long long>(v);
    else
      j[std::to_string(it->first)] = v.str();
  }
  return j;
}

Json ring_json(const Group& G, const RingElement& x) {
  Json j = Json::array();
  for (const auto& [A, c] : x.terms()) {
    Json names = Json::array();
    for (Elem a : G.subset_elems(A)) names.push_back(G.name(a));
    j.push_back(Json{{"set", names}, {"coeff", laurent_json(c)}});
  }
  return j;
}

Json algebra_json(const AlgebraElement& a) {
  Json j = Json::array();
  for (const CWord& mon : canonical_monomials()) {
    Laurent c = a.coeff(mon);
    if (!c.is_zero()) j.push_back(Json{{"monomial", cword_str(mon)}, {"coeff", laurent_json(c)}});
  }
  return j;
}

Json character_json(const Group& G, const Character& c) {
  Json j = Json::object();
  for (Elem a = 0; a < G.order(); ++a)
    if (c.coeff(a) != 0) j[G.name(a)] = c.coeff(a);
  return j;
}

Json relation_report_json(const Group& G, const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"ok", c.ok},
                          {"lhs", ring_str(G, c.lhs)},
                          {"rhs", ring_str(G, c.rhs)}});
  return Json{{"ok", r.all_ok()}, {"checks", checks}};
}

Json iso_report_json(const IsoReport& r) {
  Json j{{"ok", r.ok()},
         {"determinant", r.det.str()},
         {"determinant_is_unit", r.det_is_unit},
         {"words_checked", r.words_checked},
         {"words_ok", r.words_ok}};
  if (r.first_failure) j["first_failure"] = cword_str(*r.first_failure);
  return j;
}

Json lemma_check_json(const Group& G, const HilbertOracle::LemmaCheck& r) {
  Json j{{"set", G.set_str(r.A)},
         {"reflection", G.name(r.s)},
         {"applicable", r.applicable},
         {"max_degree", r.max_degree},
         {"ok", r.ok}};
  if (!r.applicable) j["reason"] = r.reason;
  if (r.applicable) {
    Json sides = Json::array();
    for (const auto& [l, rr] : r.sides) sides.push_back(Json{{"lhs", l}, {"rhs", rr}});
    j["sides"] = sides;
    if (!r.ok) j["first_failure_degree"] = r.first_failure_degree;
  }
  return j;
}

Json b2_compare_json(const HilbertOracle::B2Compare& r) {
  Json shifts = Json::array();
  for (const auto& s : r.shifts) {
    Json sj{{"n", s.n}, {"matches", s.matches}};
    if (!s.matches) {
      sj["witness_internal_degree"] = s.witness_degree;
      sj["product_dim"] = s.lhs;
      sj["shifted_rw_dim"] = s.rhs;
    }
    shifts.push_back(sj);
  }
  return Json{{"max_degree", r.max_degree},
              {"window", r.window},
              {"rw_dims", r.dims},
              {"mismatch_for_all_shifts", r.mismatch_for_all()},
              {"shifts", shifts}};
}

Json b2_report_json(const B2CounterexampleReport& r) {
  const Group G = Group::b2();
  return Json{{"ok", r.ok()},
              {"uch", character_json(G, r.uch_b)},
              {"support_all_multiplicity_one", r.support_ok},
              {"twist_invariant", r.twist_invariant},
              {"first_step_class_ok", r.first_step_class_ok},
              {"lemma_inapplicable_at_first_step", r.lemma_inapplicable},
              {"graded_dimension_mismatch", r.graded_mismatch},
              {"graded_comparison", b2_compare_json(r.cmp)}};
}

Json a3_report_json(const A3ChecksReport& r) {
  const Group G = Group::a3();
  Json wt = Json::array();
  for (const auto& c : r.wtilde) {
    Json cj{{"wtilde", G.name(c.wtilde)}, {"excluded", c.excluded}};
    if (c.witness_pair)
      cj["witness_pair"] = Json::array({G.name(c.witness_pair->first), G.name(c.witness_pair->second)});
    wt.push_back(cj);
  }
  return Json{{"ok", r.ok()},
              {"note", kCharacterAssumptionNote},
              {"uch_BtBuBt", character_json(G, r.uch_t_u_t)},
              {"uch_BtBstsBt", character_json(G, r.uch_t_sts_t)},
              {"uch_distinguishes", r.distinguishes},
              {"eq3_compatible", r.eq3_compatible},
              {"filtration_example_ok", r.filtration_example_ok},
              {"four_wtilde_ok", r.four_wtilde_ok},
              {"wtilde_checks", wt}};
}

Json remark_report_json(const Group& G, const RemarkReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json ej{{"class", G.set_str(e.target)}, {"found", e.found}};
    if (e.found) {
      std::ostringstream word;
      word << "Rw:" << G.name(e.w);
      for (int i : e.simple_indices) word << " * B:" << G.labels()[static_cast<std::size_t>(i)];
      word << " * Rw:" << G.name(e.w2);
      ej["witness_word"] = word.str();
      ej["shift"] = e.shift;
      ej["kind"] = e.strong ? "isomorphic to a shift" : "appears as a summand";
    }
    entries.push_back(ej);
  }
  return Json{{"ok", r.ok()},
              {"max_word_len", r.max_len},
              {"shift_window", r.window},
              {"entries", entries}};
}

Json closure_report_json(const Group& G, const ClosureReport& r) {
  Json gens = Json::array();
  for (Elem t : r.generators) gens.push_back(G.name(t));
  Json reached = Json::array();
  for (const auto& [A, word] : r.reached) {
    std::ostringstream w;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i) w << " * ";
      w << "B:" << G.name(word[i]);
    }
    reached.push_back(Json{{"class", G.set_str(A)}, {"word", w.str()}});
  }
  Json opaque = Json::array();
  for (const auto& word : r.opaque_words) {
    std::ostringstream w;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i) w << " * ";
      w << "B:" << G.name(word[i]);
    }
    opaque.push_back(w.str());
  }
  return Json{{"group", r.group},
              {"generators", gens},
              {"budget", r.budget},
              {"steps", r.steps},
              {"budget_exhausted", r.budget_exhausted},
              {"reached_count", r.reached.size()},
              {"reached", reached},
              {"opaque_products", opaque},
              {"growth", r.growth}};
}

// ---- parsing ---------------------------------------------------------

namespace {

class Cursor {
public:
  explicit Cursor(const std::string& s) : s_(s) {}
  std::size_t pos() const { return pos_; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool try_consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool try_consume(const std::string& word) {
    skip_ws();
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at = std::string::npos) const {
    throw ParseError(msg, at == std::string::npos ? pos_ : at);
  }

  // maximal run of [a-z0-9*], with trailing '*' returned to the stream
  std::string element_word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if ((std::islower(static_cast<unsigned char>(c)) && c != 'v') ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '*')
        ++pos_;
      else
        break;
    }
    std::size_t end = pos_;
    while (end > start && s_[end - 1] == '*') --end;
    pos_ = end;
    if (end == start) fail("expected a group element");
    return s_.substr(start, end - start);
  }

  Elem parse_element(const Group& G) {
    skip_ws();
    const std::size_t start = pos_;
    const std::string w = element_word();
    auto e = G.parse_elem(w);
    if (!e) fail("unknown group element '" + w + "'", start);
    return *e;
  }

  long parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = try_consume('-');
    std::size_t digits = 0;
    long value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = value * 10 + (s_[pos_] - '0');
      ++pos_;
      ++digits;
      if (value > 1000000) fail("integer out of range", start);
    }
    if (digits == 0) fail("expected an integer", start);
    return neg ? -value : value;
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

class RingExprParser {
public:
  RingExprParser(const GrotRing& ring, const std::string& text) : ring_(ring), cur_(text) {}

  RingElement parse() {
    RingElement r = expr();
    if (!cur_.eof()) cur_.fail("unexpected trailing input");
    return r;
  }

private:
  const GrotRing& ring_;
  Cursor cur_;

  RingElement expr() {
    RingElement acc;
    bool neg = cur_.try_consume('-');
    acc += neg ? term().scaled(Laurent(-1)) : term();
    while (true) {
      if (cur_.try_consume('+'))
        acc += term();
      else if (cur_.try_consume('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  RingElement term() {
    RingElement acc = factor();
    while (cur_.try_consume('*')) acc = multiply(acc, factor());
    return acc;
  }

  RingElement multiply(const RingElement& a, const RingElement& b) {
    try {
      return ring_.product(a, b);
    } catch (const std::invalid_argument& e) {
      cur_.fail(e.what());
    }
  }

  RingElement factor() {
    cur_.skip_ws();
    const std::size_t start = cur_.pos();
    if (cur_.try_consume('(')) {
      RingElement inner = expr();
      if (!cur_.try_consume(')')) cur_.fail("expected ')'");
      return inner;
    }
    if (cur_.try_consume(std::string("Rw:"))) {
      Elem w = cur_.parse_element(ring_.group());
      RingElement r = ring_.R_class(w);
      if (!ring_.in_basis(ring_.group().singleton(w)))
        cur_.fail("class R_" + ring_.group().name(w) + " needs the extended variant", start);
      return r;
    }
    if (cur_.try_consume(std::string("B:"))) {
      Elem t = cur_.parse_element(ring_.group());
      if (!ring_.group().is_reflection(t))
        cur_.fail("B: wants a reflection, got '" + ring_.group().name(t) + "'", start);
      return ring_.B_class(t);
    }
    if (cur_.try_consume('R')) {
      if (!cur_.try_consume('{')) cur_.fail("expected '{' after R");
      Subset A = 0;
      while (true) {
        A |= ring_.group().singleton(cur_.parse_element(ring_.group()));
        if (cur_.try_consume(',')) continue;
        break;
      }
      if (!cur_.try_consume('}')) cur_.fail("expected '}'");
      if (!ring_.in_basis(A))
        cur_.fail("R" + ring_.group().set_str(A) + " is not a class of the active basis", start);
      return RingElement::basis(A);
    }
    if (cur_.peek() == 'v') {
      cur_.try_consume('v');
      int exp = 1;
      if (cur_.try_consume('^')) exp = static_cast<int>(cur_.parse_int());
      return ring_.unit().scaled(Laurent::v(exp));
    }
    if (std::isdigit(static_cast<unsigned char>(cur_.peek())))
      return ring_.unit().scaled(Laurent(cur_.parse_int()));
    cur_.fail("expected R{...}, B:, Rw:, a scalar or '('");
  }
};

} // namespace

RingElement parse_ring_expr(const GrotRing& ring, const std::string& text) {
  return RingExprParser(ring, text).parse();
}

GenWord parse_gen_word(const Group& G, const std::string& text) {
  Cursor cur(text);
  GenWord w;
  while (true) {
    cur.skip_ws();
    const std::size_t start = cur.pos();
    if (cur.try_consume(std::string("Rw:"))) {
      w.push_back(GenFactor::R(cur.parse_element(G)));
    } else if (cur.try_consume(std::string("B:"))) {
      Elem t = cur.parse_element(G);
      if (!G.is_reflection(t)) cur.fail("B: wants a reflection, got '" + G.name(t) + "'", start);
      w.push_back(GenFactor::B(t));
    } else {
      cur.fail("expected B:<element> or Rw:<element>");
    }
    if (cur.eof()) break;
    if (!cur.try_consume('*')) cur.fail("expected '*' between factors");
  }
  return w;
}

CWord parse_cword(const std::string& text) {
  Cursor cur(text);
  CWord w;
  if (cur.try_consume('1')) {
    if (!cur.eof()) cur.fail("unexpected trailing input");
    return w;
  }
  while (true) {
    cur.skip_ws();
    if (!cur.try_consume('C')) cur.fail("expected a generator C1, C2 or C3");
    const char c = cur.peek();
    if (c < '1' || c > '3') cur.fail("generator index must be 1, 2 or 3");
    cur.try_consume(c);
    w.push_back(c - '0');
    if (cur.eof()) break;
    if (!cur.try_consume('*')) cur.fail("expected '*' between generators");
  }
  return w;
}

Subset parse_subset(const Group& G, const std::string& text) {
  Cursor cur(text);
  cur.skip_ws();
  if (cur.try_consume('W')) {
    if (!cur.eof()) cur.fail("unexpected trailing input");
    return G.full_set();
  }
  if (!cur.try_consume('{')) cur.fail("expected 'W' or '{elem,...}'");
  Subset A = 0;
  while (true) {
    A |= G.singleton(cur.parse_element(G));
    if (cur.try_consume(',')) continue;
    break;
  }
  if (!cur.try_consume('}')) cur.fail("expected '}'");
  if (!cur.eof()) cur.fail("unexpected trailing input");
  return A;
}

} // namespace sbim
