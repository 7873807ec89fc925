#include "gpi/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gpi/catalog.hpp"

namespace gpi {

using nlohmann::ordered_json;

namespace {

std::vector<Rat> rat_vec_from_json(const nlohmann::json& arr) {
  std::vector<Rat> v;
  for (const auto& x : arr) {
    if (x.is_string())
      v.push_back(rat_parse(x.get<std::string>()));
    else
      v.push_back(Rat(x.get<long>()));
  }
  return v;
}

ordered_json rat_vec_to_json(const RatVec& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v) arr.push_back(rat_str(x));
  return arr;
}

}  // namespace

GradedAlgebra algebra_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("malformed algebra document: ") + e.what());
  }
  GradedAlgebra a;
  a.name = j.value("name", "");
  if (!j.contains("group") || !j["group"].contains("orders"))
    throw std::invalid_argument("algebra document: missing group.orders");
  a.group.orders = j["group"]["orders"].get<std::vector<int>>();
  for (int o : a.group.orders)
    if (o < 1) throw std::invalid_argument("algebra document: group orders must be positive");
  if (!j.contains("basis")) throw std::invalid_argument("algebra document: missing basis");
  a.basis = j["basis"].get<std::vector<std::string>>();
  a.dim = static_cast<int>(a.basis.size());
  if (!j.contains("deg")) throw std::invalid_argument("algebra document: missing deg");
  const int k = a.group.rank();
  for (const auto& d : j["deg"]) {
    auto residues = d.get<std::vector<int>>();
    int parity = 0;
    if (static_cast<int>(residues.size()) == k + 1) {
      parity = residues.back();
      residues.pop_back();
    } else if (static_cast<int>(residues.size()) != k) {
      throw std::invalid_argument("algebra document: degree tuple rank mismatch");
    }
    if (parity != 0 && parity != 1)
      throw std::invalid_argument("algebra document: parity bit must be 0 or 1");
    a.degree.push_back(ExtendedDegree{a.group.reduce(std::move(residues)), parity});
  }
  if (static_cast<int>(a.degree.size()) != a.dim)
    throw std::invalid_argument("algebra document: deg length mismatch");
  a.mult.assign(a.dim, std::vector<std::vector<std::pair<int, Rat>>>(a.dim));
  if (j.contains("mult")) {
    for (const auto& entry : j["mult"]) {
      if (!entry.is_array() || entry.size() != 4)
        throw std::invalid_argument("algebra document: mult entries are [i,j,k,coeff]");
      int i = entry[0].get<int>(), jj = entry[1].get<int>(), kk = entry[2].get<int>();
      if (i < 0 || i >= a.dim || jj < 0 || jj >= a.dim || kk < 0 || kk >= a.dim)
        throw std::invalid_argument("algebra document: mult index out of range");
      Rat c = entry[3].is_string() ? rat_parse(entry[3].get<std::string>())
                                   : Rat(entry[3].get<long>());
      a.set_entry(i, jj, kk, std::move(c));
    }
  }
  if (j.contains("unit")) {
    RatVec u = rat_vec_from_json(j["unit"]);
    if (static_cast<int>(u.size()) != a.dim)
      throw std::invalid_argument("algebra document: unit length mismatch");
    a.unit = std::move(u);
  }
  if (j.contains("wedderburn")) {
    WedderburnData w;
    for (const auto& comp : j["wedderburn"]["components"]) {
      RatMat rows;
      for (const auto& v : comp) {
        RatVec row = rat_vec_from_json(v);
        if (static_cast<int>(row.size()) != a.dim)
          throw std::invalid_argument("algebra document: component vector length mismatch");
        rows.push_back(std::move(row));
      }
      w.components.push_back(std::move(rows));
    }
    if (j["wedderburn"].contains("radical")) {
      for (const auto& v : j["wedderburn"]["radical"]) {
        RatVec row = rat_vec_from_json(v);
        if (static_cast<int>(row.size()) != a.dim)
          throw std::invalid_argument("algebra document: radical vector length mismatch");
        w.radical.push_back(std::move(row));
      }
    }
    a.wedderburn = std::move(w);
  }
  return a;
}

std::string algebra_to_json(const GradedAlgebra& a) {
  ordered_json j;
  j["name"] = a.name;
  j["group"] = {{"orders", a.group.orders}};
  j["basis"] = a.basis;
  ordered_json degs = ordered_json::array();
  for (const auto& d : a.degree) {
    std::vector<int> v = d.g.r;
    v.push_back(d.parity);
    degs.push_back(v);
  }
  j["deg"] = std::move(degs);
  ordered_json mult = ordered_json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int jj = 0; jj < a.dim; ++jj)
      for (const auto& [k, c] : a.mult[i][jj])
        mult.push_back(ordered_json::array({i, jj, k, rat_str(c)}));
  j["mult"] = std::move(mult);
  if (a.unit) j["unit"] = rat_vec_to_json(*a.unit);
  if (a.wedderburn) {
    ordered_json comps = ordered_json::array();
    for (const auto& comp : a.wedderburn->components) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : comp) rows.push_back(rat_vec_to_json(r));
      comps.push_back(std::move(rows));
    }
    ordered_json rad = ordered_json::array();
    for (const auto& r : a.wedderburn->radical) rad.push_back(rat_vec_to_json(r));
    j["wedderburn"] = {{"components", std::move(comps)}, {"radical", std::move(rad)}};
  }
  return j.dump(2) + "\n";
}

GradedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json(ss.str());
}

GradedAlgebra resolve_algebra(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) return catalog_build(source).body;
  GradedAlgebra a = load_algebra_file(source);
  ValidationReport rep = validate_algebra(a);
  if (!rep.ok) throw std::invalid_argument("algebra file invalid: " + rep.message);
  return a;
}

}  // namespace gpi
