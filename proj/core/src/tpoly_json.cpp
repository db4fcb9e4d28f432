#include <json.hpp>

#include "conic/errors.hpp"
#include "conic/tpoly.hpp"

namespace conic {

using nlohmann::json;

std::string to_json(const FPolynomial& p) {
  json terms = json::array();
  for (const auto& [key, c] : p.terms()) {
    json t;
    t["coeff"] = to_string(c);
    if (auto jk = t_decomposition(key, p.params().beta())) {
      t["j"] = jk->first;
      t["k"] = jk->second;
    } else {
      t["gamma"] = to_string(key.gamma);
    }
    t["m"] = key.m;
    t["trig"] = to_string(key.trig);
    t["sigma"] = key.sigma.entries();
    terms.push_back(std::move(t));
  }
  json doc;
  doc["beta"] = to_string(p.params().beta());
  doc["xi_dim"] = p.params().xi_dim();
  doc["terms"] = std::move(terms);
  return doc.dump();
}

namespace {

Rational read_rational(const json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError(std::string(what) + " must be an integer or a \"p/q\" string");
}

}  // namespace

FPolynomial from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("beta")) throw ParseError("polynomial JSON needs a 'beta' field");
    const Rational beta = read_rational(doc.at("beta"), "beta");
    const json terms = doc.value("terms", json::array());
    int xi_dim = 0;
    if (doc.contains("xi_dim")) {
      xi_dim = doc.at("xi_dim").get<int>();
    } else if (!terms.empty() && terms.front().contains("sigma")) {
      xi_dim = static_cast<int>(terms.front().at("sigma").size());
    }
    const ConeParam params(beta, xi_dim);
    FPolynomial p(params);
    for (const auto& t : terms) {
      const Rational c = read_rational(t.at("coeff"), "coeff");
      const int m = t.value("m", 0);
      const Trig trig = parse_trig(t.value("trig", std::string("cos")));
      MultiIndex sigma = t.contains("sigma") ? MultiIndex(t.at("sigma").get<std::vector<int>>())
                                             : MultiIndex::zeros(static_cast<std::size_t>(xi_dim));
      if (t.contains("gamma")) {
        p.add_term(MonomialKey{read_rational(t.at("gamma"), "gamma"), m, trig, std::move(sigma)}, c);
      } else {
        const long j = t.at("j").get<long>();
        const long k = t.at("k").get<long>();
        if (j < 0 || k < m || (k - m) % 2 != 0) {
          throw ParseError("term needs j >= 0 and k - m a nonnegative even integer");
        }
        p += FPolynomial::t_monomial(params, c, j, k, m, trig, std::move(sigma));
      }
    }
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON field: ") + e.what());
  }
}

}  // namespace conic
