#include "gpi/report.hpp"

#include <sstream>

#include <json.hpp>

namespace gpi {

using nlohmann::ordered_json;

namespace {

ordered_json tuple_json(const GroupSpec& g, const DegreeTuple& t) {
  ordered_json arr = ordered_json::array();
  for (const auto& d : t) arr.push_back(g.label(d));
  return arr;
}

std::string tuple_csv(const GroupSpec& g, const DegreeTuple& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += " ";
    s += g.label(t[i]);
  }
  return s;
}

}  // namespace

std::string codim_json(const GroupSpec& g, const std::string& algebra,
                       const std::vector<CodimReport>& reports) {
  ordered_json out;
  out["algebra"] = algebra;
  out["group"] = group_name(g);
  ordered_json per_n = ordered_json::array();
  for (const auto& rep : reports) {
    ordered_json jn;
    jn["n"] = rep.n;
    ordered_json tuples = ordered_json::array();
    for (const auto& t : rep.tuples) {
      ordered_json jt;
      jt["tuple"] = tuple_json(g, t.tuple);
      jt["c"] = t.c;
      jt["cz"] = t.cz;
      jt["cdelta"] = t.cdelta;
      tuples.push_back(std::move(jt));
    }
    jn["tuples"] = std::move(tuples);
    jn["totals"] = {{"c", rep.c}, {"cz", rep.cz}, {"cdelta", rep.cdelta}};
    jn["pruned_tuples"] = rep.pruned_tuples;
    per_n.push_back(std::move(jn));
  }
  out["reports"] = std::move(per_n);
  return out.dump(2) + "\n";
}

std::string codim_csv(const GroupSpec& g, const std::vector<CodimReport>& reports) {
  std::ostringstream out;
  out << "n,tuple,c,cz,cdelta\n";
  for (const auto& rep : reports) {
    for (const auto& t : rep.tuples)
      out << rep.n << "," << tuple_csv(g, t.tuple) << "," << t.c << "," << t.cz << ","
          << t.cdelta << "\n";
    out << rep.n << ",TOTAL," << rep.c << "," << rep.cz << "," << rep.cdelta << "\n";
  }
  return out.str();
}

std::string exponent_json(const GradedAlgebra& a, const ExponentReport& rep) {
  ordered_json out;
  out["algebra"] = a.name;
  out["group"] = group_name(a.group);
  out["exp"] = rep.exp_g;
  {
    ordered_json cert;
    cert["components"] = rep.admissible.components;
    ordered_json w = ordered_json::array();
    for (const auto& x : rep.admissible.witness) w.push_back(rat_str(x));
    cert["witness"] = std::move(w);
    cert["dim"] = rep.admissible.total_dim;
    out["admissible"] = std::move(cert);
  }
  out["delta_lower_bound"] = rep.delta_lower_bound;
  if (rep.delta_exact) out["delta_exact"] = *rep.delta_exact;
  if (rep.delta_witness) {
    const CentralWitness& w = *rep.delta_witness;
    ordered_json jw;
    jw["n"] = w.n;
    jw["tuple"] = tuple_json(a.group, w.tuple);
    ordered_json terms = ordered_json::array();
    for (const auto& [word, c] : w.poly.terms) {
      ordered_json t;
      ordered_json jword = ordered_json::array();
      for (int p : word) jword.push_back(p + 1);
      t["word"] = std::move(jword);
      t["coeff"] = rat_str(c);
      terms.push_back(std::move(t));
    }
    jw["poly"] = std::move(terms);
    ordered_json asg = ordered_json::array();
    for (int j : w.assignment) asg.push_back(a.basis[j]);
    jw["assignment"] = std::move(asg);
    ordered_json val = ordered_json::array();
    for (const auto& x : w.value) val.push_back(rat_str(x));
    jw["value"] = std::move(val);
    jw["touched_components"] = w.touched;
    jw["dim"] = w.total_dim;
    jw["verify_method"] = w.verify_method;
    jw["centrality_evals"] = w.centrality_evals;
    out["delta_witness"] = std::move(jw);
  }
  out["delta_le_exp"] = rep.delta_le_exp;
  out["mode"] = rep.mode;
  out["max_degree"] = rep.searched_max_degree;
  return out.dump(2) + "\n";
}

std::string suite_json(const SuiteResult& r) {
  ordered_json out;
  out["suite"] = r.suite;
  out["effective_n"] = r.effective_n;
  out["pass"] = r.pass;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["claim"] = c.claim;
    jc["params"] = c.params;
    jc["bound"] = c.bound;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  out["checks"] = std::move(checks);
  return out.dump(2) + "\n";
}

std::string suite_text(const SuiteResult& r) {
  std::ostringstream out;
  out << "suite " << r.suite;
  if (r.effective_n > 0) out << " (effective degree bound " << r.effective_n << ")";
  out << "\n";
  for (const auto& c : r.checks) {
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << " " << c.claim;
    if (!c.params.empty()) out << " | " << c.params;
    if (!c.detail.empty()) out << " | " << c.detail;
    out << "\n";
  }
  out << (r.pass ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks)\n";
  return out.str();
}

}  // namespace gpi
