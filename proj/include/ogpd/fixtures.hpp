// Small named instances used by the tests and shipped under fixtures/.
//
//   chain2         identities 1 > f, nothing else
//   z2group        the group Z/2 = {e, s}, trivially ordered
//   clifford       Z/2 over 1 and Z/2 over f < 1, with t < s
//   nontransitive  Z/2 groups over 1, e, f and Z/2 x Z/2 over the bottom 0;
//                  s restricts to s_A over e and s_B over f
//   bowtie         identities a, b above c, d; no arrows

#ifndef OGPD_FIXTURES_HPP_
#define OGPD_FIXTURES_HPP_

#include <string>
#include <vector>

#include "ogpd/json_io.hpp"

namespace ogpd {

std::vector<std::string> fixture_names();
// Throws std::out_of_range for unknown names.
GroupoidSpec fixture_spec(const std::string& name);
// Workspace document with the fixture's named modules.
WorkspaceDocument fixture_document(const std::string& name);

}  // namespace ogpd

#endif  // OGPD_FIXTURES_HPP_
