#include "ncomm/serialize.hpp"

#include <limits>

#include "ncomm/errors.hpp"

namespace ncomm {

using nlohmann::json;

std::string to_string(CommutatorKind kind) {
  return kind == CommutatorKind::kLie ? "lie" : "jordan";
}

CommutatorKind commutator_kind_from_string(const std::string& s) {
  if (s == "lie") return CommutatorKind::kLie;
  if (s == "jordan") return CommutatorKind::kJordan;
  throw ParseError("variant must be 'lie' or 'jordan'");
}

namespace {

json word_to_json(const Word& w) {
  json arr = json::array();
  for (int l : w.letters()) arr.push_back(l);
  return arr;
}

std::string table_source_name(CoeffTable::Source s) {
  switch (s) {
    case CoeffTable::Source::kFullExpansion:
      return "full-expansion";
    case CoeffTable::Source::kCaseAnalysis:
      return "case-analysis";
    case CoeffTable::Source::kClosedForm:
      return "closed-form";
  }
  return "unknown";
}

long long to_int64(const Coeff& c) {
  if (c < std::numeric_limits<long long>::min() ||
      c > std::numeric_limits<long long>::max())
    throw CapacityError("coefficient exceeds 64-bit serialization range");
  return static_cast<long long>(c);
}

}  // namespace

json to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [word, coeff] : p.sorted_terms())
    terms.push_back({{"word", word_to_json(word)}, {"coeff", coeff.str()}});
  return {{"word_length", p.word_length()},
          {"term_count", p.term_count()},
          {"terms", terms}};
}

Poly poly_from_json(const json& j) {
  Poly p;
  for (const auto& t : j.at("terms")) {
    std::vector<int> letters = t.at("word").get<std::vector<int>>();
    p.add_term(Word(letters), Coeff(t.at("coeff").get<std::string>()));
  }
  return p;
}

json to_json(const CoeffTable& t) {
  json values = json::array();
  for (const Coeff& v : t.values) values.push_back(to_int64(v));
  return {{"n", t.n},
          {"variant", to_string(t.variant)},
          {"source", table_source_name(t.source)},
          {"values", values}};
}

json to_json(const GenPoly& g) {
  return {{"n", g.n}, {"coeffs", g.coeffs}};
}

json to_json(const IdentityReport& r) {
  json witness = nullptr;
  if (r.witness_word)
    witness = {{"word", word_to_json(*r.witness_word)},
               {"coeff", r.witness_coeff.str()}};
  else if (r.witness_coeff != 0)
    witness = {{"coeff", r.witness_coeff.str()}};
  return {{"theorem", r.theorem},
          {"n", r.n},
          {"modulus", r.modulus ? json(*r.modulus) : json(nullptr)},
          {"verdict", r.holds ? "holds" : "fails"},
          {"method", r.method},
          {"witness", witness},
          {"distinct_terms", r.distinct_terms},
          {"generated_terms", r.generated_terms}};
}

json to_json(const ConsistencyReport& r) {
  json failure = nullptr;
  if (r.first_failure)
    failure = {{"n", r.first_failure->n},
               {"i", r.first_failure->i},
               {"lhs", r.first_failure->lhs},
               {"rhs", r.first_failure->rhs},
               {"check", r.first_failure->check}};
  return {{"n_max", r.n_max},
          {"verdict", r.ok ? "holds" : "fails"},
          {"first_failure", failure}};
}

json to_json(const FuzzReport& r) {
  return {{"theorem", r.theorem},
          {"n", r.n},
          {"dimension", r.config.dimension},
          {"modulus", r.config.modulus},
          {"seed", r.config.seed},
          {"trials", r.config.trials},
          {"trials_run", r.trials_run},
          {"verdict", r.all_zero ? "all-zero" : "nonzero"},
          {"witness_trial",
           r.witness_trial ? json(*r.witness_trial) : json(nullptr)}};
}

}  // namespace ncomm
