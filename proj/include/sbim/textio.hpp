#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "sbim/characters.hpp"
#include "sbim/coxeter.hpp"
#include "sbim/explorer.hpp"
#include "sbim/grotring.hpp"
#include "sbim/hilbert.hpp"
#include "sbim/laurent.hpp"
#include "sbim/presented.hpp"

namespace sbim {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
  std::size_t position;
};

// multi-line message with a caret under the offending position
std::string annotate_parse_error(const std::string& input, const ParseError& e);

// ---- text forms ------------------------------------------------------

// "(v + v^-1)*X", "v^2*X", "X", "-X" depending on the coefficient
std::string coeff_term_str(const Laurent& c, const std::string& symbol);
std::string ring_str(const Group& G, const RingElement& x);
std::string algebra_str(const AlgebraElement& a);
std::string character_str(const Group& G, const Character& c);

// ---- JSON forms ------------------------------------------------------

Json laurent_json(const Laurent& c);
Json ring_json(const Group& G, const RingElement& x);
Json algebra_json(const AlgebraElement& a);
Json character_json(const Group& G, const Character& c);
Json relation_report_json(const Group& G, const RelationReport& r);
Json iso_report_json(const IsoReport& r);
Json lemma_check_json(const Group& G, const HilbertOracle::LemmaCheck& r);
Json b2_compare_json(const HilbertOracle::B2Compare& r);
Json b2_report_json(const B2CounterexampleReport& r);
Json a3_report_json(const A3ChecksReport& r);
Json remark_report_json(const Group& G, const RemarkReport& r);
Json closure_report_json(const Group& G, const ClosureReport& r);

// ---- parsing ---------------------------------------------------------

// Grammar: sums of '*'-separated factors, where a factor is R{a,b,...}
// (a class), B:<elem> or Rw:<elem> (generators), a Laurent scalar
// (integer, v, v^k), or a parenthesized subexpression.
RingElement parse_ring_expr(const GrotRing& ring, const std::string& text);
// words in the generators only: B:<elem> and Rw:<elem> joined by '*'
GenWord parse_gen_word(const Group& G, const std::string& text);
// "C1*C3*C2", or "1" for the empty word
CWord parse_cword(const std::string& text);
// "W" or "{e,s1,...}"
Subset parse_subset(const Group& G, const std::string& text);

} // namespace sbim
