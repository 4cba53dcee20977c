#include "doctest.h"
#include "fixtures.hpp"
#include "twocat/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace twocat;
using namespace twofix;

TEST_CASE("2cat round trip") {
  for (const auto& a :
       {ordinal(2), cyclic_group_cat(3), walking_two_cell(),
        TwoCatPtr(product(*ordinal(1), *cyclic_group_cat(2)))}) {
    std::ostringstream os;
    write_2cat(os, *a);
    std::istringstream is(os.str());
    auto b = parse_2cat(is, "<mem>");
    CHECK(equal_presentation(*a, *b));
  }
}

TEST_CASE("2cat parse errors carry line numbers") {
  std::istringstream is("2cat v1\nob x\n1cell f : x -> y\n");
  try {
    parse_2cat(is, "demo");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("demo:3") != std::string::npos);
  }
  std::istringstream is2(
      "2cat v1\nob x\n1cell i : x -> x\n1cell f : x -> x\nid1 x = i\n"
      "comp1 f . f = i\ncomp1 f . f = f\n");
  CHECK_THROWS_AS(parse_2cat(is2, "dup"), Error);
}

TEST_CASE("autoid synthesizes identities") {
  std::istringstream is("2cat v1\nautoid\nob x\nob y\n1cell f : x -> y\n");
  auto a = parse_2cat(is, "<mem>");
  CHECK(validate(*a).ok());
  CHECK(a->n_one() == 3);
  CHECK(a->n_two() == 3);
}

TEST_CASE("lfun round trip through files") {
  std::mt19937 rng(211);
  auto u = random_chain_functor(rng, 2, 2);
  save_2cat("/tmp/twocat_src.2cat", *u.src);
  save_2cat("/tmp/twocat_tgt.2cat", *u.tgt);
  {
    std::ofstream out("/tmp/twocat_u.lfun");
    write_lfun(out, u, "twocat_src.2cat", "twocat_tgt.2cat");
  }
  auto v = load_lfun("/tmp/twocat_u.lfun");
  CHECK(equal_functor(u, v));
  CHECK(validate_functor(v).ok());
  std::remove("/tmp/twocat_src.2cat");
  std::remove("/tmp/twocat_tgt.2cat");
  std::remove("/tmp/twocat_u.lfun");
}

TEST_CASE("trans, mod and diag formats") {
  std::mt19937 rng(223);
  auto u = random_chain_functor(rng, 2, 2);
  auto v = random_chain_functor(rng, 2, 2);
  auto s = random_colax_transformation(rng, u, v, 2);
  REQUIRE(validate_transformation(s).ok());
  save_2cat("/tmp/tc_src.2cat", *u.src);
  save_2cat("/tmp/tc_tgt.2cat", *u.tgt);
  {
    std::ofstream out("/tmp/tc_u.lfun");
    write_lfun(out, u, "tc_src.2cat", "tc_tgt.2cat");
  }
  {
    std::ofstream out("/tmp/tc_v.lfun");
    write_lfun(out, v, "tc_src.2cat", "tc_tgt.2cat");
  }
  {
    std::ofstream out("/tmp/tc_s.trans");
    out << "trans v1 tc_u.lfun tc_v.lfun colax\n";
    const TwoCat& A = *u.src;
    const TwoCat& B = *u.tgt;
    for (int o = 0; o < A.n_obj(); ++o)
      out << "ob " << A.objects[o] << " -> " << B.ones[s.comp_obj[o]].name << "\n";
    for (int f = 0; f < A.n_one(); ++f)
      out << "1cell " << A.ones[f].name << " -> " << B.twos[s.comp_one[f]].name << "\n";
  }
  auto s2 = load_trans("/tmp/tc_s.trans");
  CHECK(s2.kind == TransKind::Colax);
  CHECK(s2.comp_obj == s.comp_obj);
  CHECK(s2.comp_one == s.comp_one);
  CHECK(validate_transformation(s2).ok());

  {
    std::ofstream out("/tmp/tc_i.trans");
    out << "trans v1 tc_u.lfun tc_u.lfun strict\n";
    const TwoCat& A = *u.src;
    const TwoCat& B = *u.tgt;
    auto i = identity_transformation(u);
    for (int o = 0; o < A.n_obj(); ++o)
      out << "ob " << A.objects[o] << " -> " << B.ones[i.comp_obj[o]].name << "\n";
    for (int f = 0; f < A.n_one(); ++f)
      out << "1cell " << A.ones[f].name << " -> " << B.twos[i.comp_one[f]].name << "\n";
  }
  {
    std::ofstream out("/tmp/tc_m.mod");
    out << "mod v1 tc_i.trans tc_i.trans\n";
    const TwoCat& A = *u.src;
    const TwoCat& B = *u.tgt;
    for (int o = 0; o < A.n_obj(); ++o)
      out << "ob " << A.objects[o] << " -> " << B.twos[B.id2(B.id1(u.ob(o)))].name << "\n";
  }
  auto m = load_mod("/tmp/tc_m.mod");
  CHECK(validate_modification(m).ok());

  save_2cat("/tmp/tc_base.2cat", *ordinal(1));
  save_2cat("/tmp/tc_val.2cat", *cyclic_group_cat(2));
  {
    std::ofstream out("/tmp/tc_d.diag");
    out << "diag v1 tc_base.2cat cov\n";
    out << "obval 0 = tc_val.2cat\n";
    out << "obval 1 = tc_val.2cat\n";
  }
  auto d = load_diag("/tmp/tc_d.diag");
  CHECK(validate_diagram(d).ok());
  auto r = integrate(d);
  CHECK(find_isomorphism(*r.total, *product(*ordinal(1), *cyclic_group_cat(2))).has_value());
  for (const char* f : {"/tmp/tc_src.2cat", "/tmp/tc_tgt.2cat", "/tmp/tc_u.lfun",
                        "/tmp/tc_v.lfun", "/tmp/tc_s.trans", "/tmp/tc_i.trans",
                        "/tmp/tc_m.mod", "/tmp/tc_base.2cat", "/tmp/tc_val.2cat",
                        "/tmp/tc_d.diag"})
    std::remove(f);
}

TEST_CASE("sset json round trip") {
  auto n = nerve(cyclic_group_cat(2), NerveVariant::LaxNor, 3);
  auto text = sset_to_json(n.sset);
  auto back = sset_from_json(text);
  CHECK(back.dim == n.sset.dim);
  CHECK(back.names == n.sset.names);
  CHECK(back.face == n.sset.face);
  CHECK(back.degen == n.sset.degen);
  auto h1 = homology(n.sset, 2);
  auto h2 = homology(back, 2);
  for (int k = 0; k <= 2; ++k) CHECK(h1.groups[k] == h2.groups[k]);
  CHECK(homology_to_text(h1).find("H_2 = Z/2") != std::string::npos);
}
