// JSON interchange: groupoid documents, module documents, workspaces and
// reports. Every document carries "schema": 1. Integers that do not fit in a
// 64-bit signed value are written as decimal strings; both forms are read.

#ifndef OGPD_JSON_IO_HPP_
#define OGPD_JSON_IO_HPP_

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "ogpd/abgroup.hpp"
#include "ogpd/gmodule.hpp"
#include "ogpd/homology.hpp"
#include "ogpd/lcat.hpp"
#include "ogpd/ordered_groupoid.hpp"

namespace ogpd {

using Json = nlohmann::json;

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j, const std::string& pointer);
Json matrix_to_json(const ZMatrix& m);
// Checks the shape against rows x cols.
ZMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& pointer);
Json canonical_to_json(const CanonicalForm& c);
FgAbGroup group_from_json(const Json& j, const std::string& pointer);
Json group_to_json(const FgAbGroup& g);

// Schema checks only; referential checks happen in OrderedGroupoid::build.
GroupoidSpec groupoid_spec_from_json(const Json& j, const std::string& pointer = "");
// Canonical form: arrows in spec order, compose and order sorted.
Json groupoid_to_json(const GroupoidSpec& spec);
inline Json groupoid_to_json(const OrderedGroupoid& g) { return groupoid_to_json(g.to_spec()); }

// Module over L(g). Groups are given per identity, maps per covering pair
// "e>f" of the identity order and per non-identity arrow x (acting as
// (d(x), x)); all other actions are composed from these and the result is
// checked for functoriality (InputError on failure).
GModule module_from_json(const Json& j, const OrderedGroupoid& g, const LCat& l,
                         const std::string& pointer = "");
Json module_to_json(const GModule& m, const OrderedGroupoid& g, const LCat& l);
// Constant module: the same group everywhere, every morphism the identity.
GModule constant_module(const LCat& l, const FgAbGroup& group);

struct WorkspaceDocument {
  GroupoidSpec groupoid;
  std::map<std::string, Json> modules;  // raw module documents, by name
  std::optional<long long> seed;
};

// Accepts a workspace ({"groupoid": ..., "modules": ..., "seed": ...}) or a
// bare groupoid document. The groupoid is built to resolve references, and
// modules are parsed against it, so dangling ids fail here.
WorkspaceDocument workspace_from_json(const Json& j);
Json workspace_to_json(const WorkspaceDocument& doc);
WorkspaceDocument load_workspace(const std::string& path);
// Writes the canonical text: sorted keys, two-space indent, trailing newline.
void save_workspace(const std::string& path, const WorkspaceDocument& doc);
std::string canonical_text(const Json& j);

Json validation_to_json(const ValidationReport& r);
Json theorem_to_json(const TheoremReport& r);

}  // namespace ogpd

#endif  // OGPD_JSON_IO_HPP_
