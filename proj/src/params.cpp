#include "qkz/params.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qkz {

namespace {

ExactComplex parse_complex_entry(const nlohmann::json& j) {
  if (j.is_string()) return ExactComplex(parse_rational(j.get<std::string>()));
  if (j.is_array() && j.size() == 2)
    return ExactComplex(parse_rational(j[0].get<std::string>()),
                        parse_rational(j[1].get<std::string>()));
  throw Error("parse-error", "complex entry must be a string or [re, im]");
}

}  // namespace

ParamSet parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("parse-error", std::string("bad config JSON: ") + e.what());
  }
  ParamSet ps;
  try {
    for (const auto& item : j.at("lambdas"))
      ps.lambdas.push_back(parse_rational(item.get<std::string>()));
    for (const auto& item : j.at("z")) ps.z.push_back(parse_complex_entry(item));
    ps.p = parse_rational(j.at("p").get<std::string>());
    ps.l = j.at("l").get<int>();
    if (j.contains("k"))
      ps.k = j.at("k").get<int>();
    else
      ps.k = resonance_order(ps);
  } catch (const nlohmann::json::exception& e) {
    throw Error("parse-error", std::string("bad config field: ") + e.what());
  }
  if (ps.lambdas.empty())
    throw Error("parse-error", "config needs at least one weight");
  if (ps.z.size() != ps.lambdas.size())
    throw Error("parse-error", "config needs one z per weight");
  if (ps.l < 0) throw Error("parse-error", "level must be nonnegative");
  return ps;
}

ParamSet load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

Rational weight_sum(const ParamSet& ps) {
  Rational sum(0);
  for (const auto& lam : ps.lambdas) sum += 2 * lam;
  return sum;
}

int resonance_order(const ParamSet& ps) {
  Rational r = Rational(2 * ps.l - 1) - ps.p - weight_sum(ps);
  if (!is_integer(r)) return 0;
  Integer ri = boost::multiprecision::numerator(r);
  if (ri <= 0) return 0;
  return static_cast<int>(ri);
}

bool is_dominant(const Rational& lambda) {
  Rational twice = 2 * lambda;
  return is_integer(twice) && twice >= 0;
}

bool is_admissible(const std::vector<int>& lbar,
                   const std::vector<Rational>& lambdas) {
  for (std::size_t i = 0; i < lbar.size(); ++i)
    if (is_dominant(lambdas[i]) && Rational(lbar[i]) > 2 * lambdas[i])
      return false;
  return true;
}

ConditionReport validate(const ParamSet& ps) {
  ConditionReport rep;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    rep.failures.push_back(what);
  };

  if (!(ps.p < 0)) fail(rep.step_ok, "p must be negative");
  if (in_pz(Rational(1), ps.p)) fail(rep.step_ok, "1 lies in pZ");

  Rational max_lambda = ps.lambdas[0];
  for (const auto& lam : ps.lambdas)
    if (lam > max_lambda) max_lambda = lam;
  for (int s = 1; s <= ps.l; ++s) {
    if (!(Rational(s) < 2 * max_lambda)) break;
    if (in_pz(Rational(s), ps.p))
      fail(rep.small_integers_ok, "integer " + std::to_string(s) + " lies in pZ");
  }

  for (int m = 0; m < ps.n(); ++m) {
    for (int s = 0; s < ps.l; ++s) {
      if (!(Rational(s) < 2 * ps.lambdas[m])) break;
      Rational value = 2 * ps.lambdas[m] - s;
      if (in_pz(value, ps.p))
        fail(rep.weight_shifts_ok, "2*lambda_" + std::to_string(m + 1) + " - " +
                                       std::to_string(s) + " lies in pZ");
    }
  }

  for (int a = 0; a < ps.n(); ++a) {
    for (int b = 0; b < ps.n(); ++b) {
      if (a == b) continue;
      for (int s = 1 - ps.l; s <= ps.l - 1; ++s) {
        ExactComplex base = ps.z[a] - ps.z[b];
        Rational lsum = ps.lambdas[a] + ps.lambdas[b];
        for (int sign : {+1, -1}) {
          ExactComplex value = base + ExactComplex(sign * lsum + s);
          if (in_pz(value, ps.p))
            fail(rep.pair_separation_ok,
                 "z_" + std::to_string(a + 1) + " - z_" + std::to_string(b + 1) +
                     (sign > 0 ? " + " : " - ") + "(lambda sum) + " +
                     std::to_string(s) + " lies in pZ");
        }
      }
    }
  }

  bool any_nondominant = false;
  for (const auto& lam : ps.lambdas)
    if (!is_dominant(lam)) any_nondominant = true;
  if (any_nondominant) {
    for (int s = 1; s <= ps.l; ++s)
      if (in_pz(Rational(s), ps.p))
        fail(rep.nondominant_step_ok,
             "integer " + std::to_string(s) + " lies in pZ");
    for (int m = 0; m < ps.n(); ++m) {
      if (is_dominant(ps.lambdas[m])) continue;
      for (int s = 0; s < ps.l; ++s) {
        Rational value = 2 * ps.lambdas[m] - s;
        if (in_pz(value, ps.p))
          fail(rep.nondominant_shifts_ok,
               "2*lambda_" + std::to_string(m + 1) + " - " + std::to_string(s) +
                   " lies in pZ");
      }
    }
  }

  rep.resonance_order = resonance_order(ps);
  rep.resonant = rep.resonance_order > 0;
  return rep;
}

}  // namespace qkz
