#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace twocat {

// Structural error (bad boundaries, missing table entries, unusable input).
// Axiom failures discovered by scanning are reported through ValidationReport
// instead, so callers can inspect every violation at once.
class Error : public std::runtime_error {
public:
  Error(std::string tag, const std::string& what)
      : std::runtime_error(tag + ": " + what), tag_(std::move(tag)) {}
  const std::string& tag() const { return tag_; }

private:
  std::string tag_;
};

struct Violation {
  std::string tag;     // e.g. "InterchangeViolation"
  std::string detail;  // offending cell tuple, human readable
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string tag, std::string detail) {
    violations.push_back({std::move(tag), std::move(detail)});
  }
  // Folds another report in, prefixing its tags.
  void absorb(const ValidationReport& r, const std::string& prefix);
  std::string summary(std::size_t max_lines = 8) const;
};

inline std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

using Table = std::unordered_map<std::uint64_t, int>;

enum class DualKind { Op, Co, Coop };

// A finite strict 2-category given by explicit cell sets and total
// composition tables. Instances are immutable once built; every operation
// in the library is a pure function producing fresh presentations.
class TwoCat;
using TwoCatPtr = std::shared_ptr<const TwoCat>;

class TwoCat {
public:
  struct OneCell {
    std::string name;
    int src = -1, tgt = -1;  // object indices
  };
  struct TwoCell {
    std::string name;
    int src = -1, tgt = -1;  // parallel 1-cell indices
  };

  std::vector<std::string> objects;
  std::vector<OneCell> ones;
  std::vector<TwoCell> twos;
  Table comp1_tab;  // (g,f) -> g.f   for tgt(f)==src(g)
  Table vcomp_tab;  // (b,a) -> b*a   for tgt(a)==src(b)
  Table hcomp_tab;  // (b,a) -> b o a for composable underlying 1-cells
  std::vector<int> id1_tab;  // object -> identity 1-cell
  std::vector<int> id2_tab;  // 1-cell -> identity 2-cell

  int n_obj() const { return static_cast<int>(objects.size()); }
  int n_one() const { return static_cast<int>(ones.size()); }
  int n_two() const { return static_cast<int>(twos.size()); }

  int obj_index(const std::string& name) const;
  int one_index(const std::string& name) const;
  int two_index(const std::string& name) const;

  int comp1(int g, int f) const;
  int vcomp(int b, int a) const;
  int hcomp(int b, int a) const;
  int id1(int obj) const { return id1_tab.at(obj); }
  int id2(int one) const { return id2_tab.at(one); }

  bool is_id2(int t) const { return id2_tab.at(twos[t].src) == t; }
  bool one_parallel(int f, int g) const {
    return ones[f].src == ones[g].src && ones[f].tgt == ones[g].tgt;
  }

  // Left/right whiskering of a 2-cell by a 1-cell.
  int whisker_l(int one, int two) const { return hcomp(id2(one), two); }
  int whisker_r(int two, int one) const { return hcomp(two, id2(one)); }

  // Composite of a chain f_k ... f_1 of composable 1-cells, listed
  // source-first; empty chain needs the object.
  int compose_chain(const std::vector<int>& chain, int obj_if_empty) const;
  // Horizontal composite a_k o ... o a_1 of 2-cells, listed source-first.
  int hcompose_chain(const std::vector<int>& chain, int one_if_empty) const;
  // Vertical composite of 2-cells listed first-applied-first.
  int vcompose_chain(const std::vector<int>& chain, int one_if_empty) const;

  std::vector<int> ones_from_to(int a, int b) const;
  std::vector<int> twos_from_to(int f, int g) const;

private:
  mutable std::unordered_map<std::string, int> obj_by_name_, one_by_name_,
      two_by_name_;
  friend class TwoCatBuilder;
};

// Incremental constructor for presentations. finalize() checks boundary
// well-formedness and totality of the tables (throwing MissingTableEntry /
// BoundaryMismatch); it does not check the 2-category axioms, which is
// validate()'s job.
class TwoCatBuilder {
public:
  int add_object(const std::string& name);
  int add_one(const std::string& name, int src, int tgt);
  int add_two(const std::string& name, int src, int tgt);
  void set_comp1(int g, int f, int gf);
  void set_vcomp(int b, int a, int ba);
  void set_hcomp(int b, int a, int ba);
  void set_id1(int obj, int one);
  void set_id2(int one, int two);
  // Synthesizes missing identity cells and all table entries involving
  // them that are forced by the axioms (used by the `autoid` directive).
  void synthesize_identities();
  bool has_comp1(int g, int f) const { return cat_.comp1_tab.count(pair_key(g, f)) != 0; }
  bool has_vcomp(int b, int a) const { return cat_.vcomp_tab.count(pair_key(b, a)) != 0; }
  bool has_hcomp(int b, int a) const { return cat_.hcomp_tab.count(pair_key(b, a)) != 0; }
  int n_obj() const { return cat_.n_obj(); }
  int n_one() const { return cat_.n_one(); }
  int n_two() const { return cat_.n_two(); }
  const TwoCat& peek() const { return cat_; }
  TwoCatPtr finalize();

private:
  TwoCat cat_;
};

// Exhaustive axiom scan; empty report iff the presentation is a strict
// 2-category.
ValidationReport validate(const TwoCat& a);

// Canonical constructors.
TwoCatPtr point_cat();              // e
TwoCatPtr ordinal(int n);           // the poset {0,..,n}
TwoCatPtr cyclic_group_cat(int n);  // one object, one 1-cell, 2-cells Z/n
TwoCatPtr cyclic_monoid_cat(int n); // one object, 1-cells Z/n, identity 2-cells
TwoCatPtr walking_two_cell();       // two objects, parallel pair, one 2-cell
// Two objects 0,1 with Hom(0,1) an arbitrary finite preorder given by its
// relation matrix; no other nonidentity cells.
TwoCatPtr bipartite_preorder_cat(int k, const std::vector<std::pair<int, int>>& rel);

// Dualities, product, coproduct.
TwoCatPtr dual(const TwoCat& a, DualKind kind);
TwoCatPtr dual(const TwoCatPtr& a, DualKind kind);
TwoCatPtr product(const TwoCat& a, const TwoCat& b);
TwoCatPtr coproduct(const TwoCat& a, const TwoCat& b);

// Truncations to 1-categories and path components.
TwoCatPtr tau_i(const TwoCat& a);  // quotient hom-categories by pi0
TwoCatPtr tau_b(const TwoCat& a);  // forget nonidentity 2-cells
std::vector<std::vector<int>> pi0(const TwoCat& a);

bool is_category(const TwoCat& a);  // all 2-cells identities

// Exact comparison: same cell names in the same order, same tables.
bool equal_presentation(const TwoCat& a, const TwoCat& b);

struct Isomorphism {
  std::vector<int> ob_map, one_map, two_map;
};
// Explicit relabeling search; never name-based.
std::optional<Isomorphism> find_isomorphism(const TwoCat& a, const TwoCat& b);

std::string cells_summary(const TwoCat& a);

}  // namespace twocat
