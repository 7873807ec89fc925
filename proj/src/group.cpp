#include "gpi/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gpi {

long GroupSpec::order() const {
  long n = 1;
  for (int o : orders) n *= o;
  return n;
}

GroupElement GroupSpec::identity() const {
  return GroupElement{std::vector<int>(orders.size(), 0)};
}

GroupElement GroupSpec::reduce(std::vector<int> residues) const {
  if (residues.size() != orders.size())
    throw std::invalid_argument("group element rank mismatch");
  for (size_t i = 0; i < residues.size(); ++i) {
    residues[i] %= orders[i];
    if (residues[i] < 0) residues[i] += orders[i];
  }
  return GroupElement{std::move(residues)};
}

void GroupSpec::check_element(const GroupElement& a) const {
  if (a.r.size() != orders.size())
    throw std::invalid_argument("group element does not belong to this group");
  for (size_t i = 0; i < a.r.size(); ++i)
    if (a.r[i] < 0 || a.r[i] >= orders[i])
      throw std::invalid_argument("group element residue out of range");
}

GroupElement GroupSpec::mul(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<int> r(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) r[i] = (a.r[i] + b.r[i]) % orders[i];
  return GroupElement{std::move(r)};
}

GroupElement GroupSpec::inv(const GroupElement& a) const {
  check_element(a);
  std::vector<int> r(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) r[i] = (orders[i] - a.r[i]) % orders[i];
  return GroupElement{std::move(r)};
}

GroupElement GroupSpec::pow(const GroupElement& a, long e) const {
  check_element(a);
  std::vector<int> r(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) {
    long v = (static_cast<long>(a.r[i]) * e) % orders[i];
    if (v < 0) v += orders[i];
    r[i] = static_cast<int>(v);
  }
  return GroupElement{std::move(r)};
}

int GroupSpec::order_of(const GroupElement& a) const {
  check_element(a);
  int n = 1;
  for (size_t i = 0; i < orders.size(); ++i) {
    int g = std::gcd(a.r[i], orders[i]);
    n = std::lcm(n, orders[i] / g);
  }
  return n;
}

std::vector<GroupElement> GroupSpec::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<size_t>(order()));
  for (long i = 0; i < order(); ++i) out.push_back(element_at(i));
  return out;
}

long GroupSpec::index_of(const GroupElement& a) const {
  check_element(a);
  long idx = 0;
  for (size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + a.r[i];
  return idx;
}

GroupElement GroupSpec::element_at(long idx) const {
  std::vector<int> r(orders.size());
  for (int i = rank() - 1; i >= 0; --i) {
    r[i] = static_cast<int>(idx % orders[i]);
    idx /= orders[i];
  }
  return GroupElement{std::move(r)};
}

namespace {
constexpr const char* kGenLetters = "ghkl";
}

std::string GroupSpec::label(const GroupElement& a) const {
  check_element(a);
  if (rank() > 4) {
    std::string s = "(";
    for (size_t i = 0; i < a.r.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(a.r[i]);
    }
    return s + ")";
  }
  std::string s;
  for (int i = 0; i < rank(); ++i) {
    if (a.r[i] == 0) continue;
    s += kGenLetters[i];
    if (a.r[i] > 1) s += std::to_string(a.r[i]);
  }
  return s.empty() ? "1" : s;
}

GroupElement GroupSpec::parse_label(const std::string& s) const {
  if (s.empty()) throw std::invalid_argument("empty degree label");
  if (s == "1" || s == "e") return identity();
  if (s[0] == '(') {
    if (s.back() != ')') throw std::invalid_argument("unterminated residue tuple: " + s);
    std::vector<int> r;
    std::string cur;
    for (size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == ',') {
        r.push_back(std::stoi(cur));
        cur.clear();
      } else {
        cur += s[i];
      }
    }
    if (!cur.empty()) r.push_back(std::stoi(cur));
    if (static_cast<int>(r.size()) != rank())
      throw std::invalid_argument("residue tuple rank mismatch: " + s);
    return reduce(std::move(r));
  }
  std::vector<int> r(orders.size(), 0);
  size_t i = 0;
  while (i < s.size()) {
    const char* p = strchr(kGenLetters, s[i]);
    if (!p || s[i] == '\0')
      throw std::invalid_argument("unknown degree label: '" + s + "'");
    int factor = static_cast<int>(p - kGenLetters);
    if (factor >= rank())
      throw std::invalid_argument("label '" + s + "' names a generator outside the group");
    ++i;
    int e = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      e = std::stoi(s.substr(i, j - i));
      i = j;
    }
    r[factor] += e;
  }
  return reduce(std::move(r));
}

ExtendedDegree ext_mul(const GroupSpec& spec, const ExtendedDegree& a, const ExtendedDegree& b) {
  return ExtendedDegree{spec.mul(a.g, b.g), (a.parity + b.parity) % 2};
}

ExtendedDegree ext_inv(const GroupSpec& spec, const ExtendedDegree& a) {
  return ExtendedDegree{spec.inv(a.g), a.parity};
}

ExtendedDegree ext_identity(const GroupSpec& spec) {
  return ExtendedDegree{spec.identity(), 0};
}

std::vector<GroupElement> subgroup_generated(const GroupSpec& spec,
                                             const std::vector<GroupElement>& gens) {
  std::set<GroupElement> closed{spec.identity()};
  for (const auto& g : gens) spec.check_element(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupElement> cur(closed.begin(), closed.end());
    for (const auto& x : cur)
      for (const auto& g : gens)
        if (closed.insert(spec.mul(x, g)).second) grew = true;
  }
  return {closed.begin(), closed.end()};
}

std::vector<ExtendedDegree> subgroup_generated_ext(const GroupSpec& spec,
                                                   const std::vector<ExtendedDegree>& gens) {
  std::set<ExtendedDegree> closed{ext_identity(spec)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ExtendedDegree> cur(closed.begin(), closed.end());
    for (const auto& x : cur)
      for (const auto& g : gens)
        if (closed.insert(ext_mul(spec, x, g)).second) grew = true;
  }
  return {closed.begin(), closed.end()};
}

int Cocycle::find(const ExtendedDegree& x) const {
  auto it = std::lower_bound(subgroup.begin(), subgroup.end(), x);
  if (it == subgroup.end() || !(*it == x)) return -1;
  return static_cast<int>(it - subgroup.begin());
}

const Rat& Cocycle::value(const ExtendedDegree& a, const ExtendedDegree& b) const {
  int i = find(a), j = find(b);
  if (i < 0 || j < 0) throw std::invalid_argument("cocycle argument outside the subgroup");
  return table[i][j];
}

CocycleReport validate_cocycle(const GroupSpec& spec, const Cocycle& c) {
  const int n = static_cast<int>(c.subgroup.size());
  if (!std::is_sorted(c.subgroup.begin(), c.subgroup.end()))
    return {false, "subgroup list is not sorted canonically"};
  if (static_cast<int>(c.table.size()) != n)
    return {false, "cocycle table is not total on the subgroup"};
  for (const auto& row : c.table)
    if (static_cast<int>(row.size()) != n)
      return {false, "cocycle table is not total on the subgroup"};
  // Closure under product.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c.find(ext_mul(spec, c.subgroup[i], c.subgroup[j])) < 0)
        return {false, "subgroup not closed under product"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (is_zero(c.table[i][j]))
        return {false, "cocycle takes a zero value"};
  const int e = c.find(ext_identity(spec));
  if (e < 0) return {false, "identity missing from subgroup"};
  for (int i = 0; i < n; ++i) {
    if (c.table[e][i] != 1 || c.table[i][e] != 1)
      return {false, "normalization violated at element index " + std::to_string(i)};
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = c.find(ext_mul(spec, c.subgroup[a], c.subgroup[b]));
      for (int d = 0; d < n; ++d) {
        const int bd = c.find(ext_mul(spec, c.subgroup[b], c.subgroup[d]));
        if (c.table[a][b] * c.table[ab][d] != c.table[b][d] * c.table[a][bd]) {
          return {false, "cocycle condition violated at triple (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(d) + ")"};
        }
      }
    }
  }
  return {true, ""};
}

Cocycle trivial_cocycle(const GroupSpec& spec, std::vector<ExtendedDegree> subgroup) {
  (void)spec;
  std::sort(subgroup.begin(), subgroup.end());
  const int n = static_cast<int>(subgroup.size());
  Cocycle c{std::move(subgroup), RatMat(n, RatVec(n, Rat(1)))};
  return c;
}

Cocycle sign_cocycle(const GroupSpec& spec, const ExtendedDegree& a, const ExtendedDegree& b) {
  if (!(ext_mul(spec, a, a) == ext_identity(spec)) ||
      !(ext_mul(spec, b, b) == ext_identity(spec)))
    throw std::invalid_argument("sign cocycle requires two order-2 generators");
  if (a == b) throw std::invalid_argument("sign cocycle requires distinct generators");
  auto sub = subgroup_generated_ext(spec, {a, b});
  if (sub.size() != 4) throw std::invalid_argument("sign cocycle generators must span a Klein group");
  std::sort(sub.begin(), sub.end());
  auto pow_pair = [&](int s, int t) {
    ExtendedDegree x = ext_identity(spec);
    if (s) x = ext_mul(spec, x, a);
    if (t) x = ext_mul(spec, x, b);
    return x;
  };
  // Exponent pair (s,t) of x = a^s b^t.
  auto exp_of = [&](const ExtendedDegree& x) -> std::pair<int, int> {
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        if (pow_pair(s, t) == x) return {s, t};
    throw std::logic_error("element outside the generated Klein group");
  };
  const int n = 4;
  RatMat table(n, RatVec(n, Rat(1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto [si, ti] = exp_of(sub[i]);
      auto [sj, tj] = exp_of(sub[j]);
      (void)si;
      (void)tj;
      table[i][j] = (ti * sj) % 2 ? Rat(-1) : Rat(1);
    }
  }
  return Cocycle{std::move(sub), std::move(table)};
}

GroupSpec parse_group(const std::string& name) {
  std::vector<int> orders;
  size_t i = 0;
  while (i < name.size()) {
    if (name[i] != 'Z' && name[i] != 'z')
      throw std::invalid_argument("malformed group name: '" + name + "'");
    ++i;
    size_t j = i;
    while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
    if (j == i) throw std::invalid_argument("malformed group name: '" + name + "'");
    int o = std::stoi(name.substr(i, j - i));
    if (o < 1) throw std::invalid_argument("group factor order must be >= 1");
    orders.push_back(o);
    i = j;
    if (i < name.size()) {
      if (name[i] != 'x' && name[i] != 'X')
        throw std::invalid_argument("malformed group name: '" + name + "'");
      ++i;
    }
  }
  if (orders.empty()) throw std::invalid_argument("empty group name");
  return GroupSpec{std::move(orders)};
}

std::string group_name(const GroupSpec& spec) {
  std::string s;
  for (size_t i = 0; i < spec.orders.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(spec.orders[i]);
  }
  return s.empty() ? "Z1" : s;
}

}  // namespace gpi
