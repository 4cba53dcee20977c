#pragma once

#include "twocat/functor.hpp"
#include "twocat/nerve.hpp"

namespace twocat {

// Integral boundary matrices on normalized (nondegenerate) chains.
struct ChainComplex {
  // boundary[k] maps degree-k chains to degree-(k-1) chains,
  // boundary[k][row][col] with rows indexing (k-1)-chains
  std::vector<std::vector<std::vector<long long>>> boundary;
  std::vector<int> dims;  // chain group ranks per degree
};

ChainComplex normalized_chains(const TruncatedSSet& x, int k_max);

struct HomologyGroup {
  int free_rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1
};

bool operator==(const HomologyGroup& a, const HomologyGroup& b);
std::string to_string(const HomologyGroup& g);

struct HomologyResult {
  std::vector<HomologyGroup> groups;  // degrees 0..k_max
};

// Smith-normal-form homology of the normalized chains; requires
// k_max <= dim(x) - 1 so the needed boundaries exist.
HomologyResult homology(const TruncatedSSet& x, int k_max);

// Smith normal form diagonal of an integer matrix (invariant factors).
std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> m);

int pi0_sset(const TruncatedSSet& x);

enum class ProbeVerdict { Consistent, Refuted, Inconclusive };

struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
  std::string detail;
  HomologyResult src_h, tgt_h;
};

// Necessary-condition probe for weak equivalence: refuted when pi0 fails to
// be a bijection or some H_k (k <= k_max) differs; never asserts a weak
// equivalence.
ProbeResult we_probe(const LaxFunctor& u, int dim, int k_max,
                     NerveVariant variant = NerveVariant::LaxNor,
                     long long budget = 2000000);

}  // namespace twocat
