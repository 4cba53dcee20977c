#include "twocat/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twocat {

void ValidationReport::absorb(const ValidationReport& r, const std::string& prefix) {
  for (const auto& v : r.violations) violations.push_back({prefix + v.tag, v.detail});
}

std::string ValidationReport::summary(std::size_t max_lines) const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < max_lines; ++i)
    os << "\n  " << violations[i].tag << " @ " << violations[i].detail;
  if (violations.size() > max_lines) os << "\n  ...";
  return os.str();
}

namespace {
int lookup_name(const std::unordered_map<std::string, int>& m, const std::string& name,
                const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw Error("UnknownCell", std::string(what) + " '" + name + "'");
  return it->second;
}

void build_name_maps(const TwoCat& c, std::unordered_map<std::string, int>& ob,
                     std::unordered_map<std::string, int>& one,
                     std::unordered_map<std::string, int>& two) {
  if (ob.size() == c.objects.size() && one.size() == c.ones.size() &&
      two.size() == c.twos.size())
    return;
  ob.clear();
  one.clear();
  two.clear();
  for (int i = 0; i < c.n_obj(); ++i) ob[c.objects[i]] = i;
  for (int i = 0; i < c.n_one(); ++i) one[c.ones[i].name] = i;
  for (int i = 0; i < c.n_two(); ++i) two[c.twos[i].name] = i;
}
}  // namespace

int TwoCat::obj_index(const std::string& name) const {
  build_name_maps(*this, obj_by_name_, one_by_name_, two_by_name_);
  return lookup_name(obj_by_name_, name, "object");
}
int TwoCat::one_index(const std::string& name) const {
  build_name_maps(*this, obj_by_name_, one_by_name_, two_by_name_);
  return lookup_name(one_by_name_, name, "1-cell");
}
int TwoCat::two_index(const std::string& name) const {
  build_name_maps(*this, obj_by_name_, one_by_name_, two_by_name_);
  return lookup_name(two_by_name_, name, "2-cell");
}

int TwoCat::comp1(int g, int f) const {
  auto it = comp1_tab.find(pair_key(g, f));
  if (it == comp1_tab.end())
    throw Error("MissingTableEntry",
                "comp1(" + ones.at(g).name + "," + ones.at(f).name + ")");
  return it->second;
}
int TwoCat::vcomp(int b, int a) const {
  auto it = vcomp_tab.find(pair_key(b, a));
  if (it == vcomp_tab.end())
    throw Error("MissingTableEntry",
                "vcomp(" + twos.at(b).name + "," + twos.at(a).name + ")");
  return it->second;
}
int TwoCat::hcomp(int b, int a) const {
  auto it = hcomp_tab.find(pair_key(b, a));
  if (it == hcomp_tab.end())
    throw Error("MissingTableEntry",
                "hcomp(" + twos.at(b).name + "," + twos.at(a).name + ")");
  return it->second;
}

int TwoCat::compose_chain(const std::vector<int>& chain, int obj_if_empty) const {
  if (chain.empty()) return id1(obj_if_empty);
  int acc = chain[0];
  for (std::size_t i = 1; i < chain.size(); ++i) acc = comp1(chain[i], acc);
  return acc;
}

int TwoCat::hcompose_chain(const std::vector<int>& chain, int one_if_empty) const {
  if (chain.empty()) return id2(one_if_empty);
  int acc = chain[0];
  for (std::size_t i = 1; i < chain.size(); ++i) acc = hcomp(chain[i], acc);
  return acc;
}

int TwoCat::vcompose_chain(const std::vector<int>& chain, int one_if_empty) const {
  if (chain.empty()) return id2(one_if_empty);
  int acc = chain[0];
  for (std::size_t i = 1; i < chain.size(); ++i) acc = vcomp(chain[i], acc);
  return acc;
}

std::vector<int> TwoCat::ones_from_to(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < n_one(); ++f)
    if (ones[f].src == a && ones[f].tgt == b) out.push_back(f);
  return out;
}

std::vector<int> TwoCat::twos_from_to(int f, int g) const {
  std::vector<int> out;
  for (int t = 0; t < n_two(); ++t)
    if (twos[t].src == f && twos[t].tgt == g) out.push_back(t);
  return out;
}

int TwoCatBuilder::add_object(const std::string& name) {
  cat_.objects.push_back(name);
  return cat_.n_obj() - 1;
}
int TwoCatBuilder::add_one(const std::string& name, int src, int tgt) {
  if (src < 0 || src >= cat_.n_obj() || tgt < 0 || tgt >= cat_.n_obj())
    throw Error("BoundaryMismatch", "1-cell '" + name + "' has unknown endpoint");
  cat_.ones.push_back({name, src, tgt});
  return cat_.n_one() - 1;
}
int TwoCatBuilder::add_two(const std::string& name, int src, int tgt) {
  if (src < 0 || src >= cat_.n_one() || tgt < 0 || tgt >= cat_.n_one())
    throw Error("BoundaryMismatch", "2-cell '" + name + "' has unknown boundary");
  if (!cat_.one_parallel(src, tgt))
    throw Error("BoundaryMismatch", "2-cell '" + name + "' between non-parallel 1-cells");
  cat_.twos.push_back({name, src, tgt});
  return cat_.n_two() - 1;
}
void TwoCatBuilder::set_comp1(int g, int f, int gf) {
  if (cat_.ones.at(f).tgt != cat_.ones.at(g).src)
    throw Error("BoundaryMismatch", "comp1 pair not composable");
  auto key = pair_key(g, f);
  auto it = cat_.comp1_tab.find(key);
  if (it != cat_.comp1_tab.end() && it->second != gf)
    throw Error("DuplicateTableEntry", "comp1(" + cat_.ones[g].name + "," + cat_.ones[f].name + ")");
  cat_.comp1_tab[key] = gf;
}
void TwoCatBuilder::set_vcomp(int b, int a, int ba) {
  if (cat_.twos.at(a).tgt != cat_.twos.at(b).src)
    throw Error("BoundaryMismatch", "vcomp pair not composable");
  auto key = pair_key(b, a);
  auto it = cat_.vcomp_tab.find(key);
  if (it != cat_.vcomp_tab.end() && it->second != ba)
    throw Error("DuplicateTableEntry", "vcomp(" + cat_.twos[b].name + "," + cat_.twos[a].name + ")");
  cat_.vcomp_tab[key] = ba;
}
void TwoCatBuilder::set_hcomp(int b, int a, int ba) {
  const auto& fa = cat_.ones.at(cat_.twos.at(a).src);
  const auto& fb = cat_.ones.at(cat_.twos.at(b).src);
  if (fa.tgt != fb.src) throw Error("BoundaryMismatch", "hcomp pair not composable");
  auto key = pair_key(b, a);
  auto it = cat_.hcomp_tab.find(key);
  if (it != cat_.hcomp_tab.end() && it->second != ba)
    throw Error("DuplicateTableEntry", "hcomp(" + cat_.twos[b].name + "," + cat_.twos[a].name + ")");
  cat_.hcomp_tab[key] = ba;
}
void TwoCatBuilder::set_id1(int obj, int one) {
  cat_.id1_tab.resize(cat_.n_obj(), -1);
  cat_.id1_tab.at(obj) = one;
}
void TwoCatBuilder::set_id2(int one, int two) {
  cat_.id2_tab.resize(cat_.n_one(), -1);
  cat_.id2_tab.at(one) = two;
}

void TwoCatBuilder::synthesize_identities() {
  cat_.id1_tab.resize(cat_.n_obj(), -1);
  for (int a = 0; a < cat_.n_obj(); ++a) {
    if (cat_.id1_tab[a] >= 0) continue;
    cat_.id1_tab[a] = add_one("id:" + cat_.objects[a], a, a);
  }
  cat_.id2_tab.resize(cat_.n_one(), -1);
  for (int f = 0; f < cat_.n_one(); ++f) {
    if (cat_.id2_tab[f] >= 0) continue;
    std::string nm = "id:" + cat_.ones[f].name;
    cat_.id2_tab[f] = add_two(nm, f, f);
  }
  // comp1 with identities
  for (int f = 0; f < cat_.n_one(); ++f) {
    int s = cat_.ones[f].src, t = cat_.ones[f].tgt;
    if (!has_comp1(f, cat_.id1_tab[s])) set_comp1(f, cat_.id1_tab[s], f);
    if (!has_comp1(cat_.id1_tab[t], f)) set_comp1(cat_.id1_tab[t], f, f);
  }
  // vcomp with identity 2-cells
  for (int a = 0; a < cat_.n_two(); ++a) {
    int s = cat_.twos[a].src, t = cat_.twos[a].tgt;
    if (!has_vcomp(a, cat_.id2_tab[s])) set_vcomp(a, cat_.id2_tab[s], a);
    if (!has_vcomp(cat_.id2_tab[t], a)) set_vcomp(cat_.id2_tab[t], a, a);
  }
  // hcomp with identity 2-cells of identity 1-cells
  for (int a = 0; a < cat_.n_two(); ++a) {
    int fs = cat_.twos[a].src;
    int sobj = cat_.ones[fs].src, tobj = cat_.ones[fs].tgt;
    int idl = cat_.id2_tab[cat_.id1_tab[tobj]];
    int idr = cat_.id2_tab[cat_.id1_tab[sobj]];
    if (!has_hcomp(idl, a)) set_hcomp(idl, a, a);
    if (!has_hcomp(a, idr)) set_hcomp(a, idr, a);
  }
  // hcomp of identity 2-cells equals identity of the composite
  for (int g = 0; g < cat_.n_one(); ++g)
    for (int f = 0; f < cat_.n_one(); ++f) {
      if (cat_.ones[f].tgt != cat_.ones[g].src) continue;
      if (!has_comp1(g, f)) continue;
      int gf = cat_.comp1_tab[pair_key(g, f)];
      if (!has_hcomp(cat_.id2_tab[g], cat_.id2_tab[f]))
        set_hcomp(cat_.id2_tab[g], cat_.id2_tab[f], cat_.id2_tab[gf]);
    }
}

TwoCatPtr TwoCatBuilder::finalize() {
  TwoCat& c = cat_;
  c.id1_tab.resize(c.n_obj(), -1);
  c.id2_tab.resize(c.n_one(), -1);
  for (int a = 0; a < c.n_obj(); ++a)
    if (c.id1_tab[a] < 0) throw Error("MissingTableEntry", "id1(" + c.objects[a] + ")");
  for (int f = 0; f < c.n_one(); ++f)
    if (c.id2_tab[f] < 0) throw Error("MissingTableEntry", "id2(" + c.ones[f].name + ")");
  for (int a = 0; a < c.n_obj(); ++a) {
    const auto& f = c.ones.at(c.id1_tab[a]);
    if (f.src != a || f.tgt != a) throw Error("BoundaryMismatch", "id1(" + c.objects[a] + ") not an endocell");
  }
  for (int f = 0; f < c.n_one(); ++f) {
    const auto& t = c.twos.at(c.id2_tab[f]);
    if (t.src != f || t.tgt != f) throw Error("BoundaryMismatch", "id2(" + c.ones[f].name + ") not an endocell");
  }
  // totality
  for (int g = 0; g < c.n_one(); ++g)
    for (int f = 0; f < c.n_one(); ++f)
      if (c.ones[f].tgt == c.ones[g].src && !c.comp1_tab.count(pair_key(g, f)))
        throw Error("MissingTableEntry", "comp1(" + c.ones[g].name + "," + c.ones[f].name + ")");
  for (int b = 0; b < c.n_two(); ++b)
    for (int a = 0; a < c.n_two(); ++a) {
      if (c.twos[a].tgt == c.twos[b].src && !c.vcomp_tab.count(pair_key(b, a)))
        throw Error("MissingTableEntry", "vcomp(" + c.twos[b].name + "," + c.twos[a].name + ")");
      if (c.ones[c.twos[a].src].tgt == c.ones[c.twos[b].src].src &&
          !c.hcomp_tab.count(pair_key(b, a)))
        throw Error("MissingTableEntry", "hcomp(" + c.twos[b].name + "," + c.twos[a].name + ")");
    }
  return std::make_shared<TwoCat>(std::move(cat_));
}

ValidationReport validate(const TwoCat& c) {
  ValidationReport rep;
  auto oname = [&](int f) { return c.ones[f].name; };
  auto tname = [&](int t) { return c.twos[t].name; };

  // boundary compatibility of table entries
  for (const auto& [key, gf] : c.comp1_tab) {
    int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
    if (c.ones[gf].src != c.ones[f].src || c.ones[gf].tgt != c.ones[g].tgt)
      rep.add("BoundaryMismatch", "comp1(" + oname(g) + "," + oname(f) + ")=" + oname(gf));
  }
  for (const auto& [key, ba] : c.vcomp_tab) {
    int b = static_cast<int>(key >> 32), a = static_cast<int>(key & 0xffffffffu);
    if (c.twos[ba].src != c.twos[a].src || c.twos[ba].tgt != c.twos[b].tgt)
      rep.add("BoundaryMismatch", "vcomp(" + tname(b) + "," + tname(a) + ")=" + tname(ba));
  }
  for (const auto& [key, ba] : c.hcomp_tab) {
    int b = static_cast<int>(key >> 32), a = static_cast<int>(key & 0xffffffffu);
    int src = -1, tgt = -1;
    auto i1 = c.comp1_tab.find(pair_key(c.twos[b].src, c.twos[a].src));
    auto i2 = c.comp1_tab.find(pair_key(c.twos[b].tgt, c.twos[a].tgt));
    if (i1 != c.comp1_tab.end()) src = i1->second;
    if (i2 != c.comp1_tab.end()) tgt = i2->second;
    if (c.twos[ba].src != src || c.twos[ba].tgt != tgt)
      rep.add("BoundaryMismatch", "hcomp(" + tname(b) + "," + tname(a) + ")=" + tname(ba));
  }
  if (!rep.ok()) return rep;  // axiom scan assumes well-formed boundaries

  // associativity of comp1, unit laws for id1
  for (int h = 0; h < c.n_one(); ++h)
    for (int g = 0; g < c.n_one(); ++g) {
      if (c.ones[g].tgt != c.ones[h].src) continue;
      int hg = c.comp1(h, g);
      for (int f = 0; f < c.n_one(); ++f) {
        if (c.ones[f].tgt != c.ones[g].src) continue;
        if (c.comp1(hg, f) != c.comp1(h, c.comp1(g, f)))
          rep.add("Comp1AssociativityViolation",
                  "(" + oname(h) + "," + oname(g) + "," + oname(f) + ")");
      }
    }
  for (int f = 0; f < c.n_one(); ++f) {
    if (c.comp1(f, c.id1(c.ones[f].src)) != f)
      rep.add("Unit1Violation", oname(f) + " . id");
    if (c.comp1(c.id1(c.ones[f].tgt), f) != f)
      rep.add("Unit1Violation", "id . " + oname(f));
  }

  // hom-categories: vcomp associativity + id2 units
  for (int b = 0; b < c.n_two(); ++b)
    for (int a = 0; a < c.n_two(); ++a) {
      if (c.twos[a].tgt != c.twos[b].src) continue;
      int ba = c.vcomp(b, a);
      for (int x = 0; x < c.n_two(); ++x) {
        if (c.twos[x].tgt != c.twos[a].src) continue;
        if (c.vcomp(ba, x) != c.vcomp(b, c.vcomp(a, x)))
          rep.add("VcompAssociativityViolation",
                  "(" + tname(b) + "," + tname(a) + "," + tname(x) + ")");
      }
    }
  for (int a = 0; a < c.n_two(); ++a) {
    if (c.vcomp(a, c.id2(c.twos[a].src)) != a) rep.add("Unit2Violation", tname(a) + " * id");
    if (c.vcomp(c.id2(c.twos[a].tgt), a) != a) rep.add("Unit2Violation", "id * " + tname(a));
  }

  // hcomp associativity
  for (int x = 0; x < c.n_two(); ++x)
    for (int b = 0; b < c.n_two(); ++b) {
      if (c.ones[c.twos[b].src].tgt != c.ones[c.twos[x].src].src) continue;
      int xb = c.hcomp(x, b);
      for (int a = 0; a < c.n_two(); ++a) {
        if (c.ones[c.twos[a].src].tgt != c.ones[c.twos[b].src].src) continue;
        if (c.hcomp(xb, a) != c.hcomp(x, c.hcomp(b, a)))
          rep.add("HcompAssociativityViolation",
                  "(" + tname(x) + "," + tname(b) + "," + tname(a) + ")");
      }
    }
  // hcomp units: whiskering with the identity 2-cell of the identity 1-cell
  for (int a = 0; a < c.n_two(); ++a) {
    int fs = c.twos[a].src;
    int idl = c.id2(c.id1(c.ones[fs].tgt));
    int idr = c.id2(c.id1(c.ones[fs].src));
    if (c.hcomp(idl, a) != a) rep.add("HcompUnitViolation", "id o " + tname(a));
    if (c.hcomp(a, idr) != a) rep.add("HcompUnitViolation", tname(a) + " o id");
  }
  // hcomp of identity 2-cells is the identity 2-cell of the composite
  for (int g = 0; g < c.n_one(); ++g)
    for (int f = 0; f < c.n_one(); ++f) {
      if (c.ones[f].tgt != c.ones[g].src) continue;
      if (c.hcomp(c.id2(g), c.id2(f)) != c.id2(c.comp1(g, f)))
        rep.add("HcompIdentityViolation", "(" + oname(g) + "," + oname(f) + ")");
    }

  // interchange law
  for (int b2 = 0; b2 < c.n_two(); ++b2)
    for (int a2 = 0; a2 < c.n_two(); ++a2) {
      if (c.twos[a2].tgt != c.twos[b2].src) continue;  // b2 *1 a2
      for (int b1 = 0; b1 < c.n_two(); ++b1) {
        if (c.ones[c.twos[b1].src].tgt != c.ones[c.twos[a2].src].src) continue;
        for (int a1 = 0; a1 < c.n_two(); ++a1) {
          if (c.twos[a1].tgt != c.twos[b1].src) continue;  // b1 *1 a1
          int lhs = c.hcomp(c.vcomp(b2, a2), c.vcomp(b1, a1));
          int rhs = c.vcomp(c.hcomp(b2, b1), c.hcomp(a2, a1));
          if (lhs != rhs)
            rep.add("InterchangeViolation", "(" + tname(b2) + "," + tname(a2) + ";" +
                                                tname(b1) + "," + tname(a1) + ")");
        }
      }
    }
  return rep;
}

namespace {
TwoCatPtr finalize_builder(TwoCatBuilder& b) { return b.finalize(); }
}  // namespace

TwoCatPtr point_cat() { return ordinal(0); }

TwoCatPtr ordinal(int n) {
  if (n < 0) throw Error("BadArgument", "ordinal(n) needs n >= 0");
  TwoCatBuilder b;
  for (int i = 0; i <= n; ++i) b.add_object(std::to_string(i));
  std::vector<std::vector<int>> arrow(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      arrow[i][j] = b.add_one(std::to_string(i) + "<=" + std::to_string(j), i, j);
  for (int i = 0; i <= n; ++i) b.set_id1(i, arrow[i][i]);
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) b.set_comp1(arrow[j][k], arrow[i][j], arrow[i][k]);
  for (int f = 0; f < b.n_one(); ++f) b.set_id2(f, b.add_two("id:" + b.peek().ones[f].name, f, f));
  const TwoCat& c = b.peek();
  for (int t2 = 0; t2 < b.n_two(); ++t2)
    for (int t1 = 0; t1 < b.n_two(); ++t1) {
      if (c.twos[t1].tgt == c.twos[t2].src) b.set_vcomp(t2, t1, t1);
      int f1 = c.twos[t1].src, f2 = c.twos[t2].src;
      if (c.ones[f1].tgt == c.ones[f2].src)
        b.set_hcomp(t2, t1, c.id2_tab[c.comp1_tab.at(pair_key(f2, f1))]);
    }
  return finalize_builder(b);
}

TwoCatPtr cyclic_group_cat(int n) {
  if (n < 1) throw Error("BadArgument", "cyclic_group_cat(n) needs n >= 1");
  TwoCatBuilder b;
  b.add_object("*");
  int e = b.add_one("1", 0, 0);
  b.set_id1(0, e);
  b.set_comp1(e, e, e);
  for (int g = 0; g < n; ++g) b.add_two("g" + std::to_string(g), e, e);
  b.set_id2(e, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      b.set_vcomp(x, y, (x + y) % n);
      b.set_hcomp(x, y, (x + y) % n);
    }
  return finalize_builder(b);
}

TwoCatPtr cyclic_monoid_cat(int n) {
  if (n < 1) throw Error("BadArgument", "cyclic_monoid_cat(n) needs n >= 1");
  TwoCatBuilder b;
  b.add_object("*");
  for (int g = 0; g < n; ++g) b.add_one("m" + std::to_string(g), 0, 0);
  b.set_id1(0, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) b.set_comp1(x, y, (x + y) % n);
  for (int f = 0; f < n; ++f) b.set_id2(f, b.add_two("id:m" + std::to_string(f), f, f));
  for (int x = 0; x < n; ++x) {
    b.set_vcomp(x, x, x);
    for (int y = 0; y < n; ++y) b.set_hcomp(x, y, (x + y) % n);
  }
  return finalize_builder(b);
}

TwoCatPtr walking_two_cell() {
  TwoCatBuilder b;
  b.add_object("0");
  b.add_object("1");
  int i0 = b.add_one("id0", 0, 0), i1 = b.add_one("id1", 1, 1);
  int m = b.add_one("m", 0, 1), n = b.add_one("n", 0, 1);
  b.set_id1(0, i0);
  b.set_id1(1, i1);
  for (int f : {m, n}) {
    b.set_comp1(f, i0, f);
    b.set_comp1(i1, f, f);
  }
  b.set_comp1(i0, i0, i0);
  b.set_comp1(i1, i1, i1);
  int ti0 = b.add_two("id:id0", i0, i0), ti1 = b.add_two("id:id1", i1, i1);
  int tm = b.add_two("id:m", m, m), tn = b.add_two("id:n", n, n);
  int al = b.add_two("alpha", m, n);
  b.set_id2(i0, ti0);
  b.set_id2(i1, ti1);
  b.set_id2(m, tm);
  b.set_id2(n, tn);
  // vertical composition within Hom(0,1) = walking arrow
  b.set_vcomp(ti0, ti0, ti0);
  b.set_vcomp(ti1, ti1, ti1);
  b.set_vcomp(tm, tm, tm);
  b.set_vcomp(tn, tn, tn);
  b.set_vcomp(al, tm, al);
  b.set_vcomp(tn, al, al);
  // horizontal: whiskering by identities
  for (int t : {tm, tn, al}) {
    b.set_hcomp(t, ti0, t);
    b.set_hcomp(ti1, t, t);
  }
  b.set_hcomp(ti0, ti0, ti0);
  b.set_hcomp(ti1, ti1, ti1);
  return finalize_builder(b);
}

TwoCatPtr bipartite_preorder_cat(int k, const std::vector<std::pair<int, int>>& rel) {
  // transitive-reflexive closure of the relation
  std::vector<std::vector<bool>> le(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) le[i][i] = true;
  for (auto [i, j] : rel) le.at(i).at(j) = true;
  for (int m = 0; m < k; ++m)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (le[i][m] && le[m][j]) le[i][j] = true;

  TwoCatBuilder b;
  b.add_object("0");
  b.add_object("1");
  int i0 = b.add_one("id0", 0, 0), i1 = b.add_one("id1", 1, 1);
  b.set_id1(0, i0);
  b.set_id1(1, i1);
  b.set_comp1(i0, i0, i0);
  b.set_comp1(i1, i1, i1);
  std::vector<int> hom(k);
  for (int i = 0; i < k; ++i) hom[i] = b.add_one("f" + std::to_string(i), 0, 1);
  for (int i = 0; i < k; ++i) {
    b.set_comp1(hom[i], i0, hom[i]);
    b.set_comp1(i1, hom[i], hom[i]);
  }
  int ti0 = b.add_two("id:id0", i0, i0), ti1 = b.add_two("id:id1", i1, i1);
  b.set_id2(i0, ti0);
  b.set_id2(i1, ti1);
  std::vector<std::vector<int>> cell(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (le[i][j])
        cell[i][j] = b.add_two("c" + std::to_string(i) + "_" + std::to_string(j), hom[i], hom[j]);
  for (int i = 0; i < k; ++i) b.set_id2(hom[i], cell[i][i]);
  b.set_vcomp(ti0, ti0, ti0);
  b.set_vcomp(ti1, ti1, ti1);
  b.set_hcomp(ti0, ti0, ti0);
  b.set_hcomp(ti1, ti1, ti1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!le[i][j]) continue;
      for (int l = 0; l < k; ++l)
        if (le[j][l]) b.set_vcomp(cell[j][l], cell[i][j], cell[i][l]);
      b.set_hcomp(cell[i][j], ti0, cell[i][j]);
      b.set_hcomp(ti1, cell[i][j], cell[i][j]);
    }
  return finalize_builder(b);
}

TwoCatPtr dual(const TwoCat& a, DualKind kind) {
  bool flip1 = (kind == DualKind::Op || kind == DualKind::Coop);
  bool flip2 = (kind == DualKind::Co || kind == DualKind::Coop);
  TwoCatBuilder b;
  for (const auto& o : a.objects) b.add_object(o);
  for (const auto& f : a.ones) b.add_one(f.name, flip1 ? f.tgt : f.src, flip1 ? f.src : f.tgt);
  for (const auto& t : a.twos) b.add_two(t.name, flip2 ? t.tgt : t.src, flip2 ? t.src : t.tgt);
  for (int o = 0; o < a.n_obj(); ++o) b.set_id1(o, a.id1(o));
  for (int f = 0; f < a.n_one(); ++f) b.set_id2(f, a.id2(f));
  for (const auto& [key, gf] : a.comp1_tab) {
    int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
    if (flip1)
      b.set_comp1(f, g, gf);
    else
      b.set_comp1(g, f, gf);
  }
  for (const auto& [key, ba] : a.vcomp_tab) {
    int t2 = static_cast<int>(key >> 32), t1 = static_cast<int>(key & 0xffffffffu);
    if (flip2)
      b.set_vcomp(t1, t2, ba);
    else
      b.set_vcomp(t2, t1, ba);
  }
  for (const auto& [key, ba] : a.hcomp_tab) {
    int t2 = static_cast<int>(key >> 32), t1 = static_cast<int>(key & 0xffffffffu);
    if (flip1)
      b.set_hcomp(t1, t2, ba);
    else
      b.set_hcomp(t2, t1, ba);
  }
  return b.finalize();
}

TwoCatPtr dual(const TwoCatPtr& a, DualKind kind) { return dual(*a, kind); }

TwoCatPtr product(const TwoCat& a, const TwoCat& b) {
  TwoCatBuilder r;
  auto oi = [&](int x, int y) { return x * b.n_obj() + y; };
  auto fi = [&](int x, int y) { return x * b.n_one() + y; };
  for (int x = 0; x < a.n_obj(); ++x)
    for (int y = 0; y < b.n_obj(); ++y)
      r.add_object("(" + a.objects[x] + "," + b.objects[y] + ")");
  for (int x = 0; x < a.n_one(); ++x)
    for (int y = 0; y < b.n_one(); ++y)
      r.add_one("(" + a.ones[x].name + "," + b.ones[y].name + ")",
                oi(a.ones[x].src, b.ones[y].src), oi(a.ones[x].tgt, b.ones[y].tgt));
  for (int x = 0; x < a.n_two(); ++x)
    for (int y = 0; y < b.n_two(); ++y)
      r.add_two("(" + a.twos[x].name + "," + b.twos[y].name + ")",
                fi(a.twos[x].src, b.twos[y].src), fi(a.twos[x].tgt, b.twos[y].tgt));
  auto ti = [&](int x, int y) { return x * b.n_two() + y; };
  for (int x = 0; x < a.n_obj(); ++x)
    for (int y = 0; y < b.n_obj(); ++y) r.set_id1(oi(x, y), fi(a.id1(x), b.id1(y)));
  for (int x = 0; x < a.n_one(); ++x)
    for (int y = 0; y < b.n_one(); ++y) r.set_id2(fi(x, y), ti(a.id2(x), b.id2(y)));
  for (const auto& [k1, gf1] : a.comp1_tab)
    for (const auto& [k2, gf2] : b.comp1_tab) {
      int g1 = static_cast<int>(k1 >> 32), f1 = static_cast<int>(k1 & 0xffffffffu);
      int g2 = static_cast<int>(k2 >> 32), f2 = static_cast<int>(k2 & 0xffffffffu);
      r.set_comp1(fi(g1, g2), fi(f1, f2), fi(gf1, gf2));
    }
  for (const auto& [k1, v1] : a.vcomp_tab)
    for (const auto& [k2, v2] : b.vcomp_tab) {
      int b1 = static_cast<int>(k1 >> 32), a1 = static_cast<int>(k1 & 0xffffffffu);
      int b2 = static_cast<int>(k2 >> 32), a2 = static_cast<int>(k2 & 0xffffffffu);
      r.set_vcomp(ti(b1, b2), ti(a1, a2), ti(v1, v2));
    }
  for (const auto& [k1, v1] : a.hcomp_tab)
    for (const auto& [k2, v2] : b.hcomp_tab) {
      int b1 = static_cast<int>(k1 >> 32), a1 = static_cast<int>(k1 & 0xffffffffu);
      int b2 = static_cast<int>(k2 >> 32), a2 = static_cast<int>(k2 & 0xffffffffu);
      r.set_hcomp(ti(b1, b2), ti(a1, a2), ti(v1, v2));
    }
  return r.finalize();
}

TwoCatPtr coproduct(const TwoCat& a, const TwoCat& b) {
  TwoCatBuilder r;
  for (const auto& o : a.objects) r.add_object("L:" + o);
  for (const auto& o : b.objects) r.add_object("R:" + o);
  int oo = a.n_obj(), of = a.n_one(), ot = a.n_two();
  for (const auto& f : a.ones) r.add_one("L:" + f.name, f.src, f.tgt);
  for (const auto& f : b.ones) r.add_one("R:" + f.name, oo + f.src, oo + f.tgt);
  for (const auto& t : a.twos) r.add_two("L:" + t.name, t.src, t.tgt);
  for (const auto& t : b.twos) r.add_two("R:" + t.name, of + t.src, of + t.tgt);
  for (int o = 0; o < a.n_obj(); ++o) r.set_id1(o, a.id1(o));
  for (int o = 0; o < b.n_obj(); ++o) r.set_id1(oo + o, of + b.id1(o));
  for (int f = 0; f < a.n_one(); ++f) r.set_id2(f, a.id2(f));
  for (int f = 0; f < b.n_one(); ++f) r.set_id2(of + f, ot + b.id2(f));
  for (const auto& [k, v] : a.comp1_tab)
    r.set_comp1(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v);
  for (const auto& [k, v] : b.comp1_tab)
    r.set_comp1(of + static_cast<int>(k >> 32), of + static_cast<int>(k & 0xffffffffu), of + v);
  for (const auto& [k, v] : a.vcomp_tab)
    r.set_vcomp(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v);
  for (const auto& [k, v] : b.vcomp_tab)
    r.set_vcomp(ot + static_cast<int>(k >> 32), ot + static_cast<int>(k & 0xffffffffu), ot + v);
  for (const auto& [k, v] : a.hcomp_tab)
    r.set_hcomp(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v);
  for (const auto& [k, v] : b.hcomp_tab)
    r.set_hcomp(ot + static_cast<int>(k >> 32), ot + static_cast<int>(k & 0xffffffffu), ot + v);
  return r.finalize();
}

namespace {
// union-find
struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int x, int y) { p[find(x)] = find(y); }
};
}  // namespace

TwoCatPtr tau_i(const TwoCat& a) {
  // identify 1-cells related by a zigzag of 2-cells
  UF uf(a.n_one());
  for (const auto& t : a.twos) uf.join(t.src, t.tgt);
  std::vector<int> cls(a.n_one(), -1), rep;
  for (int f = 0; f < a.n_one(); ++f) {
    int r = uf.find(f);
    if (cls[r] < 0) {
      cls[r] = static_cast<int>(rep.size());
      rep.push_back(r);
    }
    cls[f] = cls[r];
  }
  TwoCatBuilder b;
  for (const auto& o : a.objects) b.add_object(o);
  for (std::size_t k = 0; k < rep.size(); ++k)
    b.add_one(a.ones[rep[k]].name, a.ones[rep[k]].src, a.ones[rep[k]].tgt);
  for (int o = 0; o < a.n_obj(); ++o) b.set_id1(o, cls[a.id1(o)]);
  // comp1 must descend to classes
  for (const auto& [key, gf] : a.comp1_tab) {
    int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
    if (b.has_comp1(cls[g], cls[f])) {
      const TwoCat& cur = b.peek();
      auto it = cur.comp1_tab.find(pair_key(cls[g], cls[f]));
      if (it->second != cls[gf])
        throw Error("QuotientIllDefined", "comp1 does not descend at (" + a.ones[g].name +
                                              "," + a.ones[f].name + ")");
    } else {
      b.set_comp1(cls[g], cls[f], cls[gf]);
    }
  }
  for (std::size_t k = 0; k < rep.size(); ++k) {
    int t = b.add_two("id:" + a.ones[rep[k]].name, static_cast<int>(k),
                      static_cast<int>(k));
    b.set_id2(static_cast<int>(k), t);
  }
  const TwoCat& cur = b.peek();
  for (int t2 = 0; t2 < b.n_two(); ++t2)
    for (int t1 = 0; t1 < b.n_two(); ++t1) {
      if (cur.twos[t1].tgt == cur.twos[t2].src) b.set_vcomp(t2, t1, t1);
      int f1 = cur.twos[t1].src, f2 = cur.twos[t2].src;
      if (cur.ones[f1].tgt == cur.ones[f2].src)
        b.set_hcomp(t2, t1, cur.id2_tab[cur.comp1_tab.at(pair_key(f2, f1))]);
    }
  return b.finalize();
}

TwoCatPtr tau_b(const TwoCat& a) {
  TwoCatBuilder b;
  for (const auto& o : a.objects) b.add_object(o);
  for (const auto& f : a.ones) b.add_one(f.name, f.src, f.tgt);
  for (int o = 0; o < a.n_obj(); ++o) b.set_id1(o, a.id1(o));
  for (const auto& [key, gf] : a.comp1_tab)
    b.set_comp1(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu), gf);
  for (int f = 0; f < a.n_one(); ++f) b.set_id2(f, b.add_two("id:" + a.ones[f].name, f, f));
  const TwoCat& cur = b.peek();
  for (int t2 = 0; t2 < b.n_two(); ++t2)
    for (int t1 = 0; t1 < b.n_two(); ++t1) {
      if (cur.twos[t1].tgt == cur.twos[t2].src) b.set_vcomp(t2, t1, t1);
      int f1 = cur.twos[t1].src, f2 = cur.twos[t2].src;
      if (cur.ones[f1].tgt == cur.ones[f2].src)
        b.set_hcomp(t2, t1, cur.id2_tab[cur.comp1_tab.at(pair_key(f2, f1))]);
    }
  return b.finalize();
}

std::vector<std::vector<int>> pi0(const TwoCat& a) {
  UF uf(a.n_obj());
  for (const auto& f : a.ones) uf.join(f.src, f.tgt);
  std::unordered_map<int, int> idx;
  std::vector<std::vector<int>> comps;
  for (int o = 0; o < a.n_obj(); ++o) {
    int r = uf.find(o);
    auto it = idx.find(r);
    if (it == idx.end()) {
      idx[r] = static_cast<int>(comps.size());
      comps.push_back({});
      it = idx.find(r);
    }
    comps[it->second].push_back(o);
  }
  return comps;
}

bool is_category(const TwoCat& a) {
  for (int t = 0; t < a.n_two(); ++t)
    if (!a.is_id2(t)) return false;
  return true;
}

bool equal_presentation(const TwoCat& a, const TwoCat& b) {
  if (a.objects != b.objects) return false;
  if (a.n_one() != b.n_one() || a.n_two() != b.n_two()) return false;
  for (int f = 0; f < a.n_one(); ++f)
    if (a.ones[f].name != b.ones[f].name || a.ones[f].src != b.ones[f].src ||
        a.ones[f].tgt != b.ones[f].tgt)
      return false;
  for (int t = 0; t < a.n_two(); ++t)
    if (a.twos[t].name != b.twos[t].name || a.twos[t].src != b.twos[t].src ||
        a.twos[t].tgt != b.twos[t].tgt)
      return false;
  return a.id1_tab == b.id1_tab && a.id2_tab == b.id2_tab && a.comp1_tab == b.comp1_tab &&
         a.vcomp_tab == b.vcomp_tab && a.hcomp_tab == b.hcomp_tab;
}

namespace {

struct IsoSearch {
  const TwoCat& a;
  const TwoCat& b;
  std::vector<int> ob, one, two;      // a -> b
  std::vector<int> ob_r, one_r, two_r;  // b -> a, -1 if unused

  IsoSearch(const TwoCat& a_, const TwoCat& b_)
      : a(a_), b(b_), ob(a.n_obj(), -1), one(a.n_one(), -1), two(a.n_two(), -1),
        ob_r(b.n_obj(), -1), one_r(b.n_one(), -1), two_r(b.n_two(), -1) {}

  bool assign_objects(int i) {
    if (i == a.n_obj()) return assign_ones(0);
    for (int j = 0; j < b.n_obj(); ++j) {
      if (ob_r[j] >= 0) continue;
      // degree profile pruning
      if (a.ones_from_to(i, i).size() != b.ones_from_to(j, j).size()) continue;
      ob[i] = j;
      ob_r[j] = i;
      if (assign_objects(i + 1)) return true;
      ob[i] = -1;
      ob_r[j] = -1;
    }
    return false;
  }

  bool assign_ones(int f) {
    if (f == a.n_one()) {
      if (!check_comp1()) return false;
      return assign_twos(0);
    }
    for (int g = 0; g < b.n_one(); ++g) {
      if (one_r[g] >= 0) continue;
      if (b.ones[g].src != ob[a.ones[f].src] || b.ones[g].tgt != ob[a.ones[f].tgt]) continue;
      bool f_is_id = (a.id1(a.ones[f].src) == f && a.ones[f].src == a.ones[f].tgt);
      bool g_is_id = (b.id1(b.ones[g].src) == g && b.ones[g].src == b.ones[g].tgt);
      if (f_is_id != g_is_id) continue;
      one[f] = g;
      one_r[g] = f;
      if (check_comp1_partial(f) && assign_ones(f + 1)) return true;
      one[f] = -1;
      one_r[g] = -1;
    }
    return false;
  }

  bool check_comp1_partial(int latest) {
    for (int f = 0; f <= latest; ++f) {
      if (one[f] < 0) continue;
      for (int g = 0; g <= latest; ++g) {
        if (one[g] < 0) continue;
        if (a.ones[f].tgt != a.ones[g].src) continue;
        int gf = a.comp1(g, f);
        if (gf <= latest && one[gf] >= 0) {
          if (b.comp1(one[g], one[f]) != one[gf]) return false;
        }
      }
    }
    return true;
  }

  bool check_comp1() {
    for (int o = 0; o < a.n_obj(); ++o)
      if (one[a.id1(o)] != b.id1(ob[o])) return false;
    for (const auto& [key, gf] : a.comp1_tab) {
      int g = static_cast<int>(key >> 32), f = static_cast<int>(key & 0xffffffffu);
      if (b.comp1(one[g], one[f]) != one[gf]) return false;
    }
    return true;
  }

  bool assign_twos(int t) {
    if (t == a.n_two()) return check_twos();
    for (int s = 0; s < b.n_two(); ++s) {
      if (two_r[s] >= 0) continue;
      if (b.twos[s].src != one[a.twos[t].src] || b.twos[s].tgt != one[a.twos[t].tgt]) continue;
      two[t] = s;
      two_r[s] = t;
      if (assign_twos(t + 1)) return true;
      two[t] = -1;
      two_r[s] = -1;
    }
    return false;
  }

  bool check_twos() {
    for (int f = 0; f < a.n_one(); ++f)
      if (two[a.id2(f)] != b.id2(one[f])) return false;
    for (const auto& [key, v] : a.vcomp_tab) {
      int x = static_cast<int>(key >> 32), y = static_cast<int>(key & 0xffffffffu);
      if (b.vcomp(two[x], two[y]) != two[v]) return false;
    }
    for (const auto& [key, v] : a.hcomp_tab) {
      int x = static_cast<int>(key >> 32), y = static_cast<int>(key & 0xffffffffu);
      if (b.hcomp(two[x], two[y]) != two[v]) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const TwoCat& a, const TwoCat& b) {
  if (a.n_obj() != b.n_obj() || a.n_one() != b.n_one() || a.n_two() != b.n_two())
    return std::nullopt;
  IsoSearch s(a, b);
  if (a.n_obj() == 0) return Isomorphism{{}, {}, {}};
  if (!s.assign_objects(0)) return std::nullopt;
  return Isomorphism{s.ob, s.one, s.two};
}

std::string cells_summary(const TwoCat& a) {
  std::ostringstream os;
  os << a.n_obj() << " objects, " << a.n_one() << " 1-cells, " << a.n_two() << " 2-cells";
  return os.str();
}

}  // namespace twocat
