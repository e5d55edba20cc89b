#include "shuffleforge/json_io.hpp"

#include <algorithm>

#include "shuffleforge/errors.hpp"

namespace shuffleforge {

Json to_json(const LaurentPoly& p) {
  auto order = VarRegistry::canonical_order();
  std::vector<const Term*> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](const Term* a, const Term* b) { return canonical_less(a->mono, b->mono, order); });
  Json out = Json::array();
  for (const Term* t : terms) {
    Json exps = Json::object();
    for (int s : order) {
      if (int e = t->mono.exp(s); e != 0) exps[VarRegistry::var(s).str()] = e;
    }
    out.push_back(Json{{"coeff", t->coeff.str()}, {"exps", std::move(exps)}});
  }
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff")) throw ParseError("term needs a coeff field");
    Monomial m;
    if (t.contains("exps")) {
      for (const auto& [name, e] : t.at("exps").items()) {
        if (!e.is_number_integer()) throw ParseError("exponent of " + name + " must be an integer");
        int s = VarRegistry::slot(VarId::parse(name));
        m.set(s, m.exp(s) + e.get<int>());
      }
    }
    m.fold_sqrt();
    const auto& c = t.at("coeff");
    Rational r = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long long>());
    terms.push_back({m, std::move(r)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const RatFunc& f) {
  Json den = Json::array();
  std::vector<BinomialForm> forms = f.den();
  std::sort(forms.begin(), forms.end());
  for (const auto& b : forms) den.push_back(to_json(b.as_poly()));
  for (const auto& g : f.general_den()) den.push_back(to_json(g));
  return Json{{"num", to_json(f.num())}, {"den", std::move(den)}};
}

RatFunc ratfunc_from_json(const Json& j) {
  if (j.is_array()) return RatFunc(poly_from_json(j));
  if (!j.is_object() || !j.contains("num")) throw ParseError("rational function needs a num field");
  RatFunc f(poly_from_json(j.at("num")));
  if (j.contains("den")) {
    for (const auto& d : j.at("den")) f.divide_by(poly_from_json(d));
  }
  return f;
}

}  // namespace shuffleforge
