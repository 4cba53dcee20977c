#include "twocat/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace twocat {

namespace {

struct Lines {
  std::string origin;
  int lineno = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("ParseError", origin + ":" + std::to_string(lineno) + ": " + msg);
  }
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line.substr(0, line.find('#')));
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

std::string join_dir(const std::string& dir, const std::string& rel) {
  std::filesystem::path p(rel);
  if (p.is_absolute() || dir.empty()) return rel;
  return (std::filesystem::path(dir) / p).string();
}

std::string dir_of(const std::string& path) {
  return std::filesystem::path(path).parent_path().string();
}

}  // namespace

TwoCatPtr parse_2cat(std::istream& in, const std::string& origin) {
  Lines ctx{origin};
  TwoCatBuilder b;
  bool header = false, autoid = false;
  std::string line;
  while (std::getline(in, line)) {
    ++ctx.lineno;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    if (!header) {
      if (t.size() != 2 || t[0] != "2cat" || t[1] != "v1") ctx.fail("expected '2cat v1'");
      header = true;
      continue;
    }
    try {
      if (t[0] == "ob" && t.size() == 2) {
        b.add_object(t[1]);
      } else if (t[0] == "1cell" && t.size() == 6 && t[2] == ":" && t[4] == "->") {
        b.add_one(t[1], b.peek().obj_index(t[3]), b.peek().obj_index(t[5]));
      } else if (t[0] == "2cell" && t.size() == 6 && t[2] == ":" && t[4] == "=>") {
        b.add_two(t[1], b.peek().one_index(t[3]), b.peek().one_index(t[5]));
      } else if (t[0] == "comp1" && t.size() == 6 && t[2] == "." && t[4] == "=") {
        b.set_comp1(b.peek().one_index(t[1]), b.peek().one_index(t[3]),
                    b.peek().one_index(t[5]));
      } else if (t[0] == "vcomp" && t.size() == 6 && t[2] == "*" && t[4] == "=") {
        b.set_vcomp(b.peek().two_index(t[1]), b.peek().two_index(t[3]),
                    b.peek().two_index(t[5]));
      } else if (t[0] == "hcomp" && t.size() == 6 && t[2] == "o" && t[4] == "=") {
        b.set_hcomp(b.peek().two_index(t[1]), b.peek().two_index(t[3]),
                    b.peek().two_index(t[5]));
      } else if (t[0] == "id1" && t.size() == 4 && t[2] == "=") {
        b.set_id1(b.peek().obj_index(t[1]), b.peek().one_index(t[3]));
      } else if (t[0] == "id2" && t.size() == 4 && t[2] == "=") {
        b.set_id2(b.peek().one_index(t[1]), b.peek().two_index(t[3]));
      } else if (t[0] == "autoid" && t.size() == 1) {
        autoid = true;
      } else {
        ctx.fail("unrecognized directive '" + t[0] + "'");
      }
    } catch (const Error& e) {
      if (e.tag() == "ParseError") throw;
      ctx.fail(e.what());
    }
  }
  if (!header) throw Error("ParseError", origin + ": empty input, expected '2cat v1'");
  if (autoid) b.synthesize_identities();
  try {
    return b.finalize();
  } catch (const Error& e) {
    throw Error("ParseError", origin + ": " + e.what());
  }
}

TwoCatPtr load_2cat(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  return parse_2cat(in, path);
}

void write_2cat(std::ostream& out, const TwoCat& a) {
  out << "2cat v1\n";
  for (const auto& o : a.objects) out << "ob " << o << "\n";
  for (const auto& f : a.ones)
    out << "1cell " << f.name << " : " << a.objects[f.src] << " -> " << a.objects[f.tgt]
        << "\n";
  for (const auto& t : a.twos)
    out << "2cell " << t.name << " : " << a.ones[t.src].name << " => " << a.ones[t.tgt].name
        << "\n";
  for (int o = 0; o < a.n_obj(); ++o)
    out << "id1 " << a.objects[o] << " = " << a.ones[a.id1(o)].name << "\n";
  for (int f = 0; f < a.n_one(); ++f)
    out << "id2 " << a.ones[f].name << " = " << a.twos[a.id2(f)].name << "\n";
  // deterministic table order: iterate cells in index order
  for (int g = 0; g < a.n_one(); ++g)
    for (int f = 0; f < a.n_one(); ++f)
      if (a.ones[f].tgt == a.ones[g].src)
        out << "comp1 " << a.ones[g].name << " . " << a.ones[f].name << " = "
            << a.ones[a.comp1(g, f)].name << "\n";
  for (int s = 0; s < a.n_two(); ++s)
    for (int t = 0; t < a.n_two(); ++t) {
      if (a.twos[t].tgt == a.twos[s].src)
        out << "vcomp " << a.twos[s].name << " * " << a.twos[t].name << " = "
            << a.twos[a.vcomp(s, t)].name << "\n";
      if (a.ones[a.twos[t].src].tgt == a.ones[a.twos[s].src].src)
        out << "hcomp " << a.twos[s].name << " o " << a.twos[t].name << " = "
            << a.twos[a.hcomp(s, t)].name << "\n";
    }
}

void save_2cat(const std::string& path, const TwoCat& a) {
  std::ofstream out(path);
  if (!out) throw Error("IoError", "cannot write " + path);
  write_2cat(out, a);
}

LaxFunctor parse_lfun(std::istream& in, const std::string& origin, const std::string& dir) {
  Lines ctx{origin};
  LaxFunctor u;
  bool header = false;
  std::string line;
  while (std::getline(in, line)) {
    ++ctx.lineno;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    if (!header) {
      if (t.size() != 5 || t[0] != "lfun" || t[1] != "v1" ||
          (t[4] != "lax" && t[4] != "colax"))
        ctx.fail("expected 'lfun v1 <source> <target> <lax|colax>'");
      u.src = load_2cat(join_dir(dir, t[2]));
      u.tgt = load_2cat(join_dir(dir, t[3]));
      u.dir = (t[4] == "lax") ? Direction::Lax : Direction::Colax;
      u.ob_map.assign(u.src->n_obj(), -1);
      u.one_map.assign(u.src->n_one(), -1);
      u.two_map.assign(u.src->n_two(), -1);
      u.unit_cell.assign(u.src->n_obj(), -1);
      header = true;
      continue;
    }
    try {
      if (t[0] == "ob" && t.size() == 4 && t[2] == "->") {
        u.ob_map.at(u.src->obj_index(t[1])) = u.tgt->obj_index(t[3]);
      } else if (t[0] == "1cell" && t.size() == 4 && t[2] == "->") {
        u.one_map.at(u.src->one_index(t[1])) = u.tgt->one_index(t[3]);
      } else if (t[0] == "2cell" && t.size() == 4 && t[2] == "->") {
        u.two_map.at(u.src->two_index(t[1])) = u.tgt->two_index(t[3]);
      } else if (t[0] == "comp" && t.size() == 5 && t[3] == "->") {
        u.comp_cell[pair_key(u.src->one_index(t[1]), u.src->one_index(t[2]))] =
            u.tgt->two_index(t[4]);
      } else if (t[0] == "unit" && t.size() == 4 && t[2] == "->") {
        u.unit_cell.at(u.src->obj_index(t[1])) = u.tgt->two_index(t[3]);
      } else {
        ctx.fail("unrecognized directive '" + t[0] + "'");
      }
    } catch (const Error& e) {
      if (e.tag() == "ParseError") throw;
      ctx.fail(e.what());
    }
  }
  if (!header) throw Error("ParseError", origin + ": empty input, expected 'lfun v1'");
  for (int o : u.ob_map)
    if (o < 0) throw Error("ParseError", origin + ": missing 'ob' assignment");
  for (int f : u.one_map)
    if (f < 0) throw Error("ParseError", origin + ": missing '1cell' assignment");
  for (int t : u.two_map)
    if (t < 0) throw Error("ParseError", origin + ": missing '2cell' assignment");
  for (int a = 0; a < u.src->n_obj(); ++a)
    if (u.unit_cell[a] < 0) throw Error("ParseError", origin + ": missing 'unit' assignment");
  for (int g = 0; g < u.src->n_one(); ++g)
    for (int f = 0; f < u.src->n_one(); ++f)
      if (u.src->ones[f].tgt == u.src->ones[g].src && !u.comp_cell.count(pair_key(g, f)))
        throw Error("ParseError", origin + ": missing 'comp' assignment");
  return u;
}

LaxFunctor load_lfun(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  return parse_lfun(in, path, dir_of(path));
}

void write_lfun(std::ostream& out, const LaxFunctor& u, const std::string& src_path,
                const std::string& tgt_path) {
  out << "lfun v1 " << src_path << " " << tgt_path << " "
      << (u.dir == Direction::Lax ? "lax" : "colax") << "\n";
  const TwoCat& A = *u.src;
  const TwoCat& B = *u.tgt;
  for (int o = 0; o < A.n_obj(); ++o)
    out << "ob " << A.objects[o] << " -> " << B.objects[u.ob(o)] << "\n";
  for (int f = 0; f < A.n_one(); ++f)
    out << "1cell " << A.ones[f].name << " -> " << B.ones[u.one(f)].name << "\n";
  for (int t = 0; t < A.n_two(); ++t)
    out << "2cell " << A.twos[t].name << " -> " << B.twos[u.two(t)].name << "\n";
  for (int g = 0; g < A.n_one(); ++g)
    for (int f = 0; f < A.n_one(); ++f)
      if (A.ones[f].tgt == A.ones[g].src)
        out << "comp " << A.ones[g].name << " " << A.ones[f].name << " -> "
            << B.twos[u.comp(g, f)].name << "\n";
  for (int a = 0; a < A.n_obj(); ++a)
    out << "unit " << A.objects[a] << " -> " << B.twos[u.unit(a)].name << "\n";
}

Transformation parse_trans(std::istream& in, const std::string& origin,
                           const std::string& dir) {
  Lines ctx{origin};
  Transformation s;
  bool header = false;
  std::string line;
  while (std::getline(in, line)) {
    ++ctx.lineno;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    if (!header) {
      if (t.size() != 5 || t[0] != "trans" || t[1] != "v1" ||
          (t[4] != "lax" && t[4] != "colax" && t[4] != "strict"))
        ctx.fail("expected 'trans v1 <from-lfun> <to-lfun> <lax|colax|strict>'");
      s.from = load_lfun(join_dir(dir, t[2]));
      s.to = load_lfun(join_dir(dir, t[3]));
      s.kind = t[4] == "lax" ? TransKind::Lax
                             : (t[4] == "colax" ? TransKind::Colax : TransKind::Strict);
      s.comp_obj.assign(s.from.src->n_obj(), -1);
      s.comp_one.assign(s.from.src->n_one(), -1);
      header = true;
      continue;
    }
    try {
      if (t[0] == "ob" && t.size() == 4 && t[2] == "->") {
        s.comp_obj.at(s.from.src->obj_index(t[1])) = s.from.tgt->one_index(t[3]);
      } else if (t[0] == "1cell" && t.size() == 4 && t[2] == "->") {
        s.comp_one.at(s.from.src->one_index(t[1])) = s.from.tgt->two_index(t[3]);
      } else {
        ctx.fail("unrecognized directive '" + t[0] + "'");
      }
    } catch (const Error& e) {
      if (e.tag() == "ParseError") throw;
      ctx.fail(e.what());
    }
  }
  if (!header) throw Error("ParseError", origin + ": empty input, expected 'trans v1'");
  for (int v : s.comp_obj)
    if (v < 0) throw Error("ParseError", origin + ": missing 'ob' component");
  for (int v : s.comp_one)
    if (v < 0) throw Error("ParseError", origin + ": missing '1cell' component");
  return s;
}

Transformation load_trans(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  return parse_trans(in, path, dir_of(path));
}

Modification parse_mod(std::istream& in, const std::string& origin, const std::string& dir) {
  Lines ctx{origin};
  Modification m;
  bool header = false;
  std::string line;
  while (std::getline(in, line)) {
    ++ctx.lineno;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    if (!header) {
      if (t.size() != 4 || t[0] != "mod" || t[1] != "v1")
        ctx.fail("expected 'mod v1 <from-trans> <to-trans>'");
      m.from = load_trans(join_dir(dir, t[2]));
      m.to = load_trans(join_dir(dir, t[3]));
      m.comp.assign(m.from.from.src->n_obj(), -1);
      header = true;
      continue;
    }
    try {
      if (t[0] == "ob" && t.size() == 4 && t[2] == "->") {
        m.comp.at(m.from.from.src->obj_index(t[1])) = m.from.from.tgt->two_index(t[3]);
      } else {
        ctx.fail("unrecognized directive '" + t[0] + "'");
      }
    } catch (const Error& e) {
      if (e.tag() == "ParseError") throw;
      ctx.fail(e.what());
    }
  }
  if (!header) throw Error("ParseError", origin + ": empty input, expected 'mod v1'");
  for (int v : m.comp)
    if (v < 0) throw Error("ParseError", origin + ": missing 'ob' component");
  return m;
}

Modification load_mod(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  return parse_mod(in, path, dir_of(path));
}

Diagram parse_diag(std::istream& in, const std::string& origin, const std::string& dir) {
  Lines ctx{origin};
  Diagram d;
  bool header = false;
  std::string line;
  while (std::getline(in, line)) {
    ++ctx.lineno;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    if (!header) {
      if (t.size() != 4 || t[0] != "diag" || t[1] != "v1")
        ctx.fail("expected 'diag v1 <base-file> <cov|op|co|coop>'");
      d.base = load_2cat(join_dir(dir, t[2]));
      if (t[3] == "cov") d.variance = Variance::Cov;
      else if (t[3] == "op") d.variance = Variance::Op;
      else if (t[3] == "co") d.variance = Variance::Co;
      else if (t[3] == "coop") d.variance = Variance::Coop;
      else ctx.fail("unknown variance '" + t[3] + "'");
      d.ob_val.resize(d.base->n_obj());
      d.one_val.resize(d.base->n_one());
      d.two_val.resize(d.base->n_two());
      header = true;
      continue;
    }
    try {
      if (t[0] == "obval" && t.size() == 4 && t[2] == "=") {
        d.ob_val.at(d.base->obj_index(t[1])) = load_2cat(join_dir(dir, t[3]));
      } else if (t[0] == "oneval" && t.size() == 4 && t[2] == "=") {
        d.one_val.at(d.base->one_index(t[1])) = load_lfun(join_dir(dir, t[3]));
      } else if (t[0] == "twoval" && t.size() == 4 && t[2] == "=") {
        d.two_val.at(d.base->two_index(t[1])) = load_trans(join_dir(dir, t[3]));
      } else {
        ctx.fail("unrecognized directive '" + t[0] + "'");
      }
    } catch (const Error& e) {
      if (e.tag() == "ParseError") throw;
      ctx.fail(e.what());
    }
  }
  if (!header) throw Error("ParseError", origin + ": empty input, expected 'diag v1'");
  // fill unstated values: identity functors and identity transformations
  // where a single obval covers endpoints
  for (int f = 0; f < d.base->n_one(); ++f)
    if (d.one_val[f].src == nullptr) {
      int a = d.base->ones[f].src;
      if (d.ob_val[a] == nullptr)
        throw Error("ParseError", origin + ": missing obval for " + d.base->objects[a]);
      d.one_val[f] = identity_functor(d.ob_val[a]);
    }
  for (int t = 0; t < d.base->n_two(); ++t)
    if (d.two_val[t].comp_obj.empty())
      d.two_val[t] = identity_transformation(d.one_val[d.base->twos[t].src]);
  return d;
}

Diagram load_diag(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  return parse_diag(in, path, dir_of(path));
}

LaxColaxAdjunction parse_alc(std::istream& in, const std::string& origin,
                             const std::string& dir) {
  Lines ctx{origin};
  LaxColaxAdjunction d;
  bool header = false;
  std::string line;
  while (std::getline(in, line)) {
    ++ctx.lineno;
    auto t = tokens_of(line);
    if (t.empty()) continue;
    if (!header) {
      if (t.size() != 4 || t[0] != "alc" || t[1] != "v1")
        ctx.fail("expected 'alc v1 <u-lfun> <v-lfun>'");
      d.u = load_lfun(join_dir(dir, t[2]));
      d.v = load_lfun(join_dir(dir, t[3]));
      d.p_obj.assign(d.u.tgt->n_obj(), -1);
      d.p_one.assign(d.u.tgt->n_one(), -1);
      d.q_obj.assign(d.u.src->n_obj(), -1);
      d.q_one.assign(d.u.src->n_one(), -1);
      d.sigma.assign(d.u.src->n_obj(), -1);
      d.tau.assign(d.u.tgt->n_obj(), -1);
      header = true;
      continue;
    }
    try {
      if (t[0] == "p" && t.size() == 4 && t[2] == "=")
        d.p_obj.at(d.u.tgt->obj_index(t[1])) = d.u.tgt->one_index(t[3]);
      else if (t[0] == "pg" && t.size() == 4 && t[2] == "=")
        d.p_one.at(d.u.tgt->one_index(t[1])) = d.u.tgt->two_index(t[3]);
      else if (t[0] == "q" && t.size() == 4 && t[2] == "=")
        d.q_obj.at(d.u.src->obj_index(t[1])) = d.u.src->one_index(t[3]);
      else if (t[0] == "qf" && t.size() == 4 && t[2] == "=")
        d.q_one.at(d.u.src->one_index(t[1])) = d.u.src->two_index(t[3]);
      else if (t[0] == "sigma" && t.size() == 4 && t[2] == "=")
        d.sigma.at(d.u.src->obj_index(t[1])) = d.u.tgt->two_index(t[3]);
      else if (t[0] == "tau" && t.size() == 4 && t[2] == "=")
        d.tau.at(d.u.tgt->obj_index(t[1])) = d.u.src->two_index(t[3]);
      else
        ctx.fail("unrecognized directive '" + t[0] + "'");
    } catch (const Error& e) {
      if (e.tag() == "ParseError") throw;
      ctx.fail(e.what());
    }
  }
  if (!header) throw Error("ParseError", origin + ": empty input, expected 'alc v1'");
  return d;
}

LaxColaxAdjunction load_alc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open " + path);
  return parse_alc(in, path, dir_of(path));
}

std::string sset_to_json(const TruncatedSSet& x) {
  nlohmann::json j;
  j["dim"] = x.dim;
  j["simplices"] = x.names;
  j["faces"] = x.face;
  j["degeneracies"] = x.degen;
  std::vector<std::vector<int>> deg;
  for (const auto& row : x.degenerate) deg.push_back(std::vector<int>(row.begin(), row.end()));
  j["degenerate"] = deg;
  return j.dump(2);
}

TruncatedSSet sset_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  TruncatedSSet x;
  x.dim = j.at("dim").get<int>();
  x.names = j.at("simplices").get<std::vector<std::vector<std::string>>>();
  x.face = j.at("faces").get<std::vector<std::vector<std::vector<int>>>>();
  x.degen = j.at("degeneracies").get<std::vector<std::vector<std::vector<int>>>>();
  auto deg = j.at("degenerate").get<std::vector<std::vector<int>>>();
  for (const auto& row : deg) x.degenerate.push_back(std::vector<bool>(row.begin(), row.end()));
  return x;
}

std::string homology_to_json(const HomologyResult& h) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t k = 0; k < h.groups.size(); ++k) {
    nlohmann::json g;
    g["degree"] = k;
    g["free_rank"] = h.groups[k].free_rank;
    g["torsion"] = h.groups[k].torsion;
    g["pretty"] = to_string(h.groups[k]);
    j.push_back(g);
  }
  return j.dump(2);
}

std::string homology_to_text(const HomologyResult& h) {
  std::ostringstream os;
  for (std::size_t k = 0; k < h.groups.size(); ++k)
    os << "H_" << k << " = " << to_string(h.groups[k]) << "\n";
  return os.str();
}

}  // namespace twocat
