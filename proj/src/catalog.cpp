#include "schur/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "schur/error.hpp"

namespace schur {

namespace {

// Largest order build_group will materialize as a Cayley table.
constexpr long long kBuildOrderCap = 4096;

bool is_small_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_build_order(long long order) {
  if (order > kBuildOrderCap) {
    fail(Errc::budget_exceeded, "spec names a group of order " + std::to_string(order) +
                                    ", build cap is " + std::to_string(kBuildOrderCap));
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) fail(Errc::io_error, "cannot read " + path);
  return buf.str();
}

nlohmann::json parse_json_file(const std::string& path) {
  try {
    return nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::io_error, path + " is not valid JSON: " + e.what());
  }
}

}  // namespace

FiniteGroup dihedral8() {
  const std::vector<std::vector<int>> action = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  return semidirect_product(cyclic_group(4), cyclic_group(2), action);
}

FiniteGroup quaternion8() {
  // x^a y^b with x^4 = 1, y^2 = x^2, y^-1 x y = x^-1, index a*2 + b.
  auto idx = [](int a, int b) { return a * 2 + b; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 2; ++d) {
          int ra, rb;
          if (b == 0) {
            ra = (a + c) % 4;
            rb = d;
          } else if (d == 0) {
            ra = (a - c + 4) % 4;
            rb = 1;
          } else {
            ra = (a - c + 6) % 4;
            rb = 0;
          }
          t[static_cast<size_t>(idx(a, b))][static_cast<size_t>(idx(c, d))] = idx(ra, rb);
        }
      }
    }
  }
  return FiniteGroup::from_table(t);
}

FiniteGroup elem_abelian(long long p, int k) {
  if (!is_small_prime(p)) {
    fail(Errc::semantic_error, "ElemAb needs a prime, got " + std::to_string(p));
  }
  if (k < 0) fail(Errc::semantic_error, "ElemAb needs a non-negative exponent");
  FiniteGroup g = trivial_group();
  long long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= p;
    check_build_order(order);
    g = direct_product(g, cyclic_group(static_cast<int>(p)));
  }
  return g;
}

FiniteGroup extraspecial_exp_p(long long p) {
  if (p == 2 || !is_small_prime(p)) {
    fail(Errc::semantic_error, "E1 needs an odd prime, got " + std::to_string(p));
  }
  check_build_order(p * p * p);
  const int pi = static_cast<int>(p);
  const int n = pi * pi * pi;
  auto idx = [pi](int a, int b, int c) { return (a * pi + b) * pi + c; };
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < pi; ++a) {
    for (int b = 0; b < pi; ++b) {
      for (int c = 0; c < pi; ++c) {
        for (int a2 = 0; a2 < pi; ++a2) {
          for (int b2 = 0; b2 < pi; ++b2) {
            for (int c2 = 0; c2 < pi; ++c2) {
              t[static_cast<size_t>(idx(a, b, c))][static_cast<size_t>(idx(a2, b2, c2))] =
                  idx((a + a2) % pi, (b + b2) % pi, (c + c2 + a * b2) % pi);
            }
          }
        }
      }
    }
  }
  return FiniteGroup::from_table(t);
}

FiniteGroup extraspecial_exp_p2(long long p) {
  if (p == 2 || !is_small_prime(p)) {
    fail(Errc::semantic_error, "E2 needs an odd prime, got " + std::to_string(p));
  }
  check_build_order(p * p * p);
  const long long p2 = p * p;
  std::vector<std::vector<int>> action(static_cast<size_t>(p), std::vector<int>(static_cast<size_t>(p2)));
  long long mult = 1;
  for (long long j = 0; j < p; ++j) {
    for (long long x = 0; x < p2; ++x) {
      action[static_cast<size_t>(j)][static_cast<size_t>(x)] = static_cast<int>((x * mult) % p2);
    }
    mult = (mult * (1 + p)) % p2;
  }
  return semidirect_product(cyclic_group(static_cast<int>(p2)), cyclic_group(static_cast<int>(p)),
                            action);
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  GroupSpec parse() {
    GroupSpec g = parse_product();
    skip_ws();
    if (pos_ != s_.size()) err("'x' or end of input");
    return g;
  }

 private:
  [[noreturn]] void err(const std::string& expectation) {
    fail(Errc::parse_error, "offset " + std::to_string(pos_) + ": expected " + expectation);
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
  }

  bool match(const std::string& word) {
    skip_ws();
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) err(std::string("'") + c + "'");
    ++pos_;
  }

  long long parse_int(const std::string& what) {
    skip_ws();
    size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000) err("a smaller integer");
      ++pos_;
    }
    if (pos_ == start) err(what);
    return v;
  }

  std::string parse_path(const std::string& what) {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '\n' &&
           s_[pos_] != '\r' && s_[pos_] != ',' && s_[pos_] != ')') {
      ++pos_;
    }
    if (pos_ == start) err(what);
    return s_.substr(start, pos_ - start);
  }

  GroupSpec parse_product() {
    std::vector<GroupSpec> kids;
    kids.push_back(parse_atom());
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        kids.push_back(parse_atom());
      } else {
        break;
      }
    }
    if (kids.size() == 1) return std::move(kids[0]);
    GroupSpec g;
    g.kind = GroupSpec::Kind::product;
    g.kids = std::move(kids);
    return g;
  }

  GroupSpec parse_atom() {
    skip_ws();
    if (pos_ >= s_.size()) err("a group atom");
    GroupSpec g;
    if (s_[pos_] == '1') {
      ++pos_;
      g.kind = GroupSpec::Kind::trivial;
      return g;
    }
    if (s_[pos_] == 'Z') {
      ++pos_;
      g.kind = GroupSpec::Kind::cyclic;
      g.a = parse_int("an integer after 'Z'");
      return g;
    }
    if (s_[pos_] == '@') {
      ++pos_;
      g.kind = GroupSpec::Kind::file;
      g.path = parse_path("a file path after '@'");
      return g;
    }
    if (match("ElemAb")) {
      g.kind = GroupSpec::Kind::elem_ab;
      expect('(');
      g.a = parse_int("a prime");
      expect(',');
      g.b = parse_int("an exponent");
      expect(')');
      return g;
    }
    if (match("E1") || match("E2")) {
      g.kind = s_[pos_ - 1] == '1' ? GroupSpec::Kind::e1 : GroupSpec::Kind::e2;
      expect('(');
      g.a = parse_int("a prime");
      expect(')');
      return g;
    }
    if (match("D8")) {
      g.kind = GroupSpec::Kind::d8;
      return g;
    }
    if (match("Q8")) {
      g.kind = GroupSpec::Kind::q8;
      return g;
    }
    if (match("Sd")) {
      g.kind = GroupSpec::Kind::semidirect;
      expect('(');
      g.kids.push_back(parse_product());
      expect(',');
      g.kids.push_back(parse_product());
      expect(',');
      g.path = parse_path("an action file path");
      expect(')');
      return g;
    }
    err("a group atom");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(const std::string& text) { return SpecParser(text).parse(); }

std::string render_spec(const GroupSpec& s) {
  switch (s.kind) {
    case GroupSpec::Kind::trivial: return "1";
    case GroupSpec::Kind::cyclic: return "Z" + std::to_string(s.a);
    case GroupSpec::Kind::elem_ab:
      return "ElemAb(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
    case GroupSpec::Kind::d8: return "D8";
    case GroupSpec::Kind::q8: return "Q8";
    case GroupSpec::Kind::e1: return "E1(" + std::to_string(s.a) + ")";
    case GroupSpec::Kind::e2: return "E2(" + std::to_string(s.a) + ")";
    case GroupSpec::Kind::product: {
      std::string out;
      for (size_t i = 0; i < s.kids.size(); ++i) {
        if (i) out += " x ";
        out += render_spec(s.kids[i]);
      }
      return out;
    }
    case GroupSpec::Kind::semidirect:
      return "Sd(" + render_spec(s.kids[0]) + ", " + render_spec(s.kids[1]) + ", " + s.path + ")";
    case GroupSpec::Kind::file: return "@" + s.path;
  }
  fail(Errc::semantic_error, "unknown spec node");
}

BuiltGroup build_group(const GroupSpec& s) {
  switch (s.kind) {
    case GroupSpec::Kind::trivial: {
      FiniteGroup g = trivial_group();
      return {g, whole_group(g)};
    }
    case GroupSpec::Kind::cyclic: {
      if (s.a < 1) fail(Errc::semantic_error, "Z" + std::to_string(s.a) + " is not a group");
      check_build_order(s.a);
      FiniteGroup g = cyclic_group(static_cast<int>(s.a));
      return {g, whole_group(g)};
    }
    case GroupSpec::Kind::elem_ab: {
      FiniteGroup g = elem_abelian(s.a, static_cast<int>(s.b));
      return {g, whole_group(g)};
    }
    case GroupSpec::Kind::d8: {
      FiniteGroup g = dihedral8();
      return {g, whole_group(g)};
    }
    case GroupSpec::Kind::q8: {
      FiniteGroup g = quaternion8();
      return {g, whole_group(g)};
    }
    case GroupSpec::Kind::e1: {
      FiniteGroup g = extraspecial_exp_p(s.a);
      return {g, whole_group(g)};
    }
    case GroupSpec::Kind::e2: {
      FiniteGroup g = extraspecial_exp_p2(s.a);
      return {g, whole_group(g)};
    }
    case GroupSpec::Kind::product: {
      FiniteGroup g = build_group(s.kids[0]).group;
      const int first_order = g.order();
      long long order = g.order();
      for (size_t i = 1; i < s.kids.size(); ++i) {
        FiniteGroup f = build_group(s.kids[i]).group;
        order *= f.order();
        check_build_order(order);
        g = direct_product(g, f);
      }
      const int stride = g.order() / first_order;
      std::vector<int> elems(static_cast<size_t>(first_order));
      for (int y = 0; y < first_order; ++y) elems[static_cast<size_t>(y)] = y * stride;
      return {g, subgroup_from_elements(g, elems)};
    }
    case GroupSpec::Kind::semidirect: {
      FiniteGroup n = build_group(s.kids[0]).group;
      FiniteGroup k = build_group(s.kids[1]).group;
      check_build_order(static_cast<long long>(n.order()) * k.order());
      auto action = load_action_file(s.path, n, k);
      FiniteGroup g = semidirect_product(n, k, action);
      std::vector<int> elems(static_cast<size_t>(n.order()));
      for (int y = 0; y < n.order(); ++y) elems[static_cast<size_t>(y)] = y * k.order();
      return {g, subgroup_from_elements(g, elems)};
    }
    case GroupSpec::Kind::file: {
      FiniteGroup g = load_cayley_file(s.path);
      return {g, whole_group(g)};
    }
  }
  fail(Errc::semantic_error, "unknown spec node");
}

FiniteGroup load_cayley_file(const std::string& path) {
  nlohmann::json doc = parse_json_file(path);
  if (!doc.is_object() || !doc.contains("order") || !doc["order"].is_number_integer() ||
      !doc.contains("table") || !doc["table"].is_array()) {
    fail(Errc::io_error, path + " must carry an integer \"order\" and an array \"table\"");
  }
  const long long n = doc["order"].get<long long>();
  if (n < 1) fail(Errc::malformed_table, "order " + std::to_string(n) + " is not positive");
  check_build_order(n);
  const auto& rows = doc["table"];
  if (static_cast<long long>(rows.size()) != n) {
    fail(Errc::malformed_table,
         "table has " + std::to_string(rows.size()) + " rows for order " + std::to_string(n));
  }
  std::vector<std::vector<int>> t(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<long long>(row.size()) != n) {
      fail(Errc::malformed_table, "row " + std::to_string(i) + " does not list " +
                                      std::to_string(n) + " entries");
    }
    for (long long j = 0; j < n; ++j) {
      if (!row[static_cast<size_t>(j)].is_number_integer()) {
        fail(Errc::malformed_table,
             "cell (" + std::to_string(i) + "," + std::to_string(j) + ") is not an integer");
      }
      t[static_cast<size_t>(i)].push_back(row[static_cast<size_t>(j)].get<int>());
    }
  }
  return FiniteGroup::from_table(t);
}

std::vector<std::vector<int>> load_action_file(const std::string& path, const FiniteGroup& n,
                                               const FiniteGroup& k) {
  nlohmann::json doc = parse_json_file(path);
  if (!doc.is_object() || !doc.contains("generator_images") ||
      !doc["generator_images"].is_object()) {
    fail(Errc::io_error, path + " must carry a \"generator_images\" object");
  }
  const int nk = k.order();
  const int nn = n.order();
  std::vector<std::vector<int>> action(static_cast<size_t>(nk));
  std::vector<int> givens;
  for (const auto& [key, value] : doc["generator_images"].items()) {
    long long idx = -1;
    try {
      size_t used = 0;
      idx = std::stoll(key, &used);
      if (used != key.size()) idx = -1;
    } catch (...) {
      idx = -1;
    }
    if (idx < 0 || idx >= nk) {
      fail(Errc::io_error, path + ": key \"" + key + "\" does not name an element of K (order " +
                               std::to_string(nk) + ")");
    }
    if (!value.is_array() || static_cast<int>(value.size()) != nn) {
      fail(Errc::io_error, path + ": image for " + key + " must list " + std::to_string(nn) +
                               " integers");
    }
    std::vector<int> perm;
    perm.reserve(static_cast<size_t>(nn));
    for (const auto& cell : value) {
      if (!cell.is_number_integer() || cell.get<long long>() < 0 || cell.get<long long>() >= nn) {
        fail(Errc::io_error, path + ": image for " + key + " holds an entry outside N");
      }
      perm.push_back(cell.get<int>());
    }
    action[static_cast<size_t>(idx)] = std::move(perm);
    givens.push_back(static_cast<int>(idx));
  }
  if (action[0].empty()) {
    action[0].resize(static_cast<size_t>(nn));
    for (int x = 0; x < nn; ++x) action[0][static_cast<size_t>(x)] = x;
  }
  std::vector<int> queue;
  for (int x = 0; x < nk; ++x) {
    if (!action[static_cast<size_t>(x)].empty()) queue.push_back(x);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int g : givens) {
      const int y = k.mul(x, g);
      if (!action[static_cast<size_t>(y)].empty()) continue;
      std::vector<int> comp(static_cast<size_t>(nn));
      for (int t = 0; t < nn; ++t) {
        comp[static_cast<size_t>(t)] =
            action[static_cast<size_t>(x)][static_cast<size_t>(
                action[static_cast<size_t>(g)][static_cast<size_t>(t)])];
      }
      action[static_cast<size_t>(y)] = std::move(comp);
      queue.push_back(y);
    }
  }
  if (static_cast<int>(queue.size()) != nk) {
    fail(Errc::semantic_error, path + ": generator images reach only " +
                                   std::to_string(queue.size()) + " of " + std::to_string(nk) +
                                   " elements of K");
  }
  return action;
}

std::vector<CatalogEntry> groups_of_order(long long p, int k) {
  if (!is_small_prime(p)) {
    fail(Errc::semantic_error, "order base must be prime, got " + std::to_string(p));
  }
  if (k < 0 || k > 3) {
    fail(Errc::unsupported_order,
         "complete lists stop at exponent 3, got " + std::to_string(k));
  }
  long long order = 1;
  for (int i = 0; i < k; ++i) order *= p;
  check_build_order(order);
  const std::string zp = "Z" + std::to_string(p);
  std::vector<CatalogEntry> out;
  switch (k) {
    case 0:
      out.push_back({"1", trivial_group()});
      break;
    case 1:
      out.push_back({zp, cyclic_group(static_cast<int>(p))});
      break;
    case 2:
      out.push_back({"Z" + std::to_string(p * p), cyclic_group(static_cast<int>(p * p))});
      out.push_back({zp + " x " + zp, elem_abelian(p, 2)});
      break;
    case 3:
      out.push_back({"Z" + std::to_string(order), cyclic_group(static_cast<int>(order))});
      out.push_back({"Z" + std::to_string(p * p) + " x " + zp,
                     direct_product(cyclic_group(static_cast<int>(p * p)),
                                    cyclic_group(static_cast<int>(p)))});
      out.push_back({zp + " x " + zp + " x " + zp, elem_abelian(p, 3)});
      if (p == 2) {
        out.push_back({"D8", dihedral8()});
        out.push_back({"Q8", quaternion8()});
      } else {
        out.push_back({"E1(" + std::to_string(p) + ")", extraspecial_exp_p(p)});
        out.push_back({"E2(" + std::to_string(p) + ")", extraspecial_exp_p2(p)});
      }
      break;
  }
  return out;
}

std::vector<CatalogEntry> catalog_closure(long long p, int budget) {
  if (!is_small_prime(p)) {
    fail(Errc::semantic_error, "catalog prime must be prime, got " + std::to_string(p));
  }
  if (budget < 1) fail(Errc::semantic_error, "budget must be positive");
  struct Atom {
    std::string name;
    FiniteGroup g;
    long long order;
  };
  std::vector<Atom> atoms;
  for (long long o = p; o <= budget; o *= p) {
    atoms.push_back({"Z" + std::to_string(o), cyclic_group(static_cast<int>(o)), o});
    if (o > budget / p) break;
  }
  if (p == 2 && budget >= 8) {
    atoms.push_back({"D8", dihedral8(), 8});
    atoms.push_back({"Q8", quaternion8(), 8});
  }
  if (p != 2 && budget >= p * p * p) {
    atoms.push_back({"E1(" + std::to_string(p) + ")", extraspecial_exp_p(p), p * p * p});
    atoms.push_back({"E2(" + std::to_string(p) + ")", extraspecial_exp_p2(p), p * p * p});
  }
  std::vector<CatalogEntry> raw;
  raw.push_back({"1", trivial_group()});
  std::vector<size_t> pick;
  auto rec = [&](auto&& self, size_t start, long long order, const FiniteGroup& acc) -> void {
    for (size_t i = start; i < atoms.size(); ++i) {
      if (order > budget / atoms[i].order) continue;
      FiniteGroup g = direct_product(acc, atoms[i].g);
      pick.push_back(i);
      std::string name;
      for (size_t j = 0; j < pick.size(); ++j) {
        if (j) name += " x ";
        name += atoms[pick[j]].name;
      }
      raw.push_back({name, g});
      self(self, i, order * atoms[i].order, g);
      pick.pop_back();
    }
  };
  rec(rec, 0, 1, trivial_group());
  std::vector<CatalogEntry> out;
  for (auto& e : raw) {
    bool dup = false;
    for (const auto& u : out) {
      if (u.group.order() == e.group.order() && are_isomorphic(u.group, e.group)) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace schur
