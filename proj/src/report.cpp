#include "pfmirror/report.hpp"

#include <algorithm>
#include <sstream>

#include "pfmirror/enumgeo.hpp"
#include "pfmirror/gdreduce.hpp"

namespace pfm {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse '" + item + "' as an integer");
    }
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

std::string h_expression(const BigRational& a, const BigRational& b) {
  std::string num;
  if (sgn(a) != 0) num = to_string(a) + "*z";
  if (sgn(b) != 0 || num.empty()) {
    if (num.empty()) {
      num = to_string(b);
    } else {
      num += sgn(b) < 0 ? " - " + to_string(BigRational(-b)) : " + " + to_string(b);
    }
  }
  return "(" + num + ")/(z - 1)";
}

Json strings(const std::vector<BigRational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string omega_string(const SchubertClass& c, int n) {
  if (c.is_zero()) return "0";
  std::string s;
  for (auto it = c.coeffs().rbegin(); it != c.coeffs().rend(); ++it) {
    const auto [p, q] = sigma_to_omega(it->first.first, it->first.second, n);
    if (!s.empty()) s += " + ";
    s += it->second.get_str() + "*Omega(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  return s;
}

}  // namespace

HGParams parse_family(const std::string& text) {
  std::vector<int> degrees = parse_int_list(text);
  std::sort(degrees.begin(), degrees.end());
  for (const auto& p : hg_presets()) {
    std::vector<int> d = p.degrees;
    std::sort(d.begin(), d.end());
    if (d == degrees) return p;
  }
  return hg_from_degrees(degrees);
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse '" + item + "' as a prime");
    }
  }
  return out;
}

Json cmd_pf(const std::vector<std::uint64_t>& primes, int lambda_count, std::uint64_t seed) {
  const PfDiscovery d = discover_relation(primes, lambda_count, seed);
  Json rep;
  rep["command"] = "pf";
  rep["inputs"] = {{"primes", primes}, {"lambda_count", lambda_count}, {"seed", seed}};

  Json rel = Json::object();
  for (int i = 5; i >= 2; --i) {
    const auto& a = d.relation.a[i - 2];
    const auto& b = d.relation.b[i - 2];
    rel["h_" + std::to_string(i)] = {
        {"a", to_string(a)}, {"b", to_string(b)}, {"expression", h_expression(a, b)}};
  }
  Json coeffs = Json::array();
  for (std::size_t j = 0; j < d.op.coefficients.size(); ++j) {
    for (std::size_t k = 0; k < d.op.coefficients[j].size(); ++k) {
      if (sgn(d.op.coefficients[j][k]) == 0) continue;
      coeffs.push_back({{"z_power", j}, {"theta_power", k}, {"value", to_string(d.op.coefficients[j][k])}});
    }
  }
  rep["outputs"] = {
      {"relation", rel},
      {"operator", {{"text", d.op.to_string()}, {"coefficients", coeffs}}},
      {"indicial_exponents", strings(d.exponents)},
      {"maximally_unipotent", d.maximally_unipotent},
      {"verification", {{"prime", d.check_prime}, {"lambda", d.check_lambda.to_string()}, {"passed", true}}},
  };

  Json prov = Json::array();
  for (const auto& run : d.runs) {
    Json samples = Json::array();
    for (const auto& s : run.samples) {
      Json js = {{"lambda", s.lambda.to_string()}};
      if (s.relation) {
        js["z"] = s.relation->z.to_string();
        Json h = Json::array();
        for (const auto& x : s.relation->h) h.push_back(x.to_string());
        js["h"] = h;
      } else {
        js["rejected"] = s.rejected;
      }
      samples.push_back(js);
    }
    Json res = Json::object();
    for (int i = 2; i <= 5; ++i) {
      res["a_" + std::to_string(i)] = std::to_string(run.residues.a[i - 2]);
      res["b_" + std::to_string(i)] = std::to_string(run.residues.b[i - 2]);
    }
    prov.push_back({{"prime", run.prime}, {"samples", samples}, {"residues", res}});
  }
  rep["provenance"] = prov;
  return rep;
}

Json cmd_yukawa(const HGParams& family, int d_max) {
  const YukawaResult r = compute_yukawa(family, d_max);
  Json rep;
  rep["command"] = "yukawa";
  std::vector<BigRational> a(family.a.begin(), family.a.end());
  rep["inputs"] = {{"family", family.label},
                   {"degrees", family.degrees},
                   {"ambient_dim", family.ambient_dim},
                   {"parameters", strings(a)},
                   {"d_max", d_max}};
  RationalSeries kappa(r.kappa.begin(), r.kappa.begin() + d_max + 1);
  Json inst = Json::array();
  for (const auto& [deg, n] : r.instantons.n) inst.push_back({{"d", deg}, {"n", n.get_str()}});
  rep["outputs"] = {{"degree", family.degree().get_str()},
                    {"scale", family.scale().get_str()},
                    {"series_order", r.order},
                    {"kappa", strings(kappa)},
                    {"instantons", inst}};
  return rep;
}

Json cmd_lines(const std::vector<int>& degrees, int n) {
  const BigInt count = line_count(degrees, n);
  Json rep;
  rep["command"] = "lines";
  rep["inputs"] = {{"degrees", degrees}, {"ambient_dim", n}};
  Json classes = Json::array();
  SchubertClass product = SchubertClass::basis(n + 1, 0, 0);
  for (int d : degrees) {
    const auto c = lines_incidence_class(d, n + 1);
    product = class_mul(product, c);
    classes.push_back({{"degree", d}, {"sigma", c.to_string()}, {"omega", omega_string(c, n)}});
  }
  rep["outputs"] = {{"grassmannian", "Gr(2," + std::to_string(n + 1) + ")"},
                    {"incidence_classes", classes},
                    {"product", {{"sigma", product.to_string()}, {"omega", omega_string(product, n)}}},
                    {"line_count", count.get_str()}};
  return rep;
}

Json cmd_euler() {
  const OrbifoldReport r = orbifold_euler();
  Json points = Json::object();
  for (const auto& [k, v] : r.point_elements) points[std::to_string(k)] = v;
  Json rep;
  rep["command"] = "euler";
  rep["inputs"] = Json::object();
  rep["outputs"] = {
      {"chi_V", r.chi_v.get_str()},
      {"chi_V_curve", ci_euler({3, 3}, 3).get_str()},
      {"orbifold_chi", to_string(r.total)},
      {"mirror_test", r.total == BigRational(-r.chi_v)},
      {"identity_term", to_string(r.identity_term)},
      {"census",
       {{"group_order", 81},
        {"curve_elements", r.curve_elements},
        {"point_elements_by_fixed_points", points},
        {"fixed_point_free_elements", r.empty_elements},
        {"total_fixed_points", r.total_fixed_points.get_str()}}},
      {"quotient_contributions",
       {{"curve_elements", to_string(r.curve_quotient_sum)},
        {"point_elements", to_string(r.point_quotient_sum)}}},
  };
  return rep;
}

std::string instantons_csv(const Json& rep) {
  std::string out = "degree,\"V_{" + rep.at("inputs").at("family").get<std::string>() + "}\"\n";
  for (const auto& row : rep.at("outputs").at("instantons")) {
    out += std::to_string(row.at("d").get<int>()) + "," + row.at("n").get<std::string>() + "\n";
  }
  return out;
}

Json error_report(const std::string& command, const std::string& kind, const std::string& message) {
  return {{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace pfm
