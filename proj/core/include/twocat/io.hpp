#pragma once

#include "twocat/comma.hpp"
#include "twocat/homology.hpp"
#include "twocat/integration.hpp"
#include "twocat/nerve.hpp"

#include <iosfwd>
#include <string>

namespace twocat {

// Line-oriented text formats; '#' starts a comment, identifiers are
// whitespace-free tokens. Parse errors carry line numbers; duplicate table
// entries are errors.
TwoCatPtr parse_2cat(std::istream& in, const std::string& origin = "<stream>");
TwoCatPtr load_2cat(const std::string& path);
void write_2cat(std::ostream& out, const TwoCat& a);
void save_2cat(const std::string& path, const TwoCat& a);

LaxFunctor parse_lfun(std::istream& in, const std::string& origin, const std::string& dir);
LaxFunctor load_lfun(const std::string& path);
void write_lfun(std::ostream& out, const LaxFunctor& u, const std::string& src_path,
                const std::string& tgt_path);

Transformation parse_trans(std::istream& in, const std::string& origin,
                           const std::string& dir);
Transformation load_trans(const std::string& path);

Modification parse_mod(std::istream& in, const std::string& origin, const std::string& dir);
Modification load_mod(const std::string& path);

Diagram parse_diag(std::istream& in, const std::string& origin, const std::string& dir);
Diagram load_diag(const std::string& path);

LaxColaxAdjunction parse_alc(std::istream& in, const std::string& origin,
                             const std::string& dir);
LaxColaxAdjunction load_alc(const std::string& path);

std::string sset_to_json(const TruncatedSSet& x);
TruncatedSSet sset_from_json(const std::string& text);
std::string homology_to_json(const HomologyResult& h);
std::string homology_to_text(const HomologyResult& h);

}  // namespace twocat
