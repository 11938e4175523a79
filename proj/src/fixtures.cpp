#include "ogpd/fixtures.hpp"

#include <stdexcept>

namespace ogpd {

namespace {

struct Fixture {
  const char* name;
  const char* groupoid;
  const char* modules;  // JSON object, may be empty
};

const Fixture kFixtures[] = {
    {"chain2",
     R"J({"identities": ["1", "f"], "arrows": [], "compose": [], "order": [["f", "1"]]})J",
     R"J({
       "constant": {"groups": {"1": {"rank": 1}, "f": {"rank": 1}}, "poset_maps": {"1>f": [[1]]}},
       "mixed": {"groups": {"1": {"rank": 1}, "f": {"torsion": [2]}}, "poset_maps": {"1>f": [[1]]}}
     })J"},
    {"z2group",
     R"J({"identities": ["e"], "arrows": [{"id": "s", "d": "e", "r": "e", "inv": "s"}],
         "compose": [["s", "s", "e"]], "order": []})J",
     R"J({
       "trivial": {"groups": {"e": {"rank": 1}}, "arrow_maps": {"s": [[1]]}},
       "sign": {"groups": {"e": {"rank": 1}}, "arrow_maps": {"s": [[-1]]}}
     })J"},
    {"clifford",
     R"J({"identities": ["1", "f"],
         "arrows": [{"id": "s", "d": "1", "r": "1", "inv": "s"}, {"id": "t", "d": "f", "r": "f", "inv": "t"}],
         "compose": [["s", "s", "1"], ["t", "t", "f"]], "order": [["f", "1"], ["t", "s"]]})J",
     R"J({
       "sign": {"groups": {"1": {"rank": 1}, "f": {"rank": 1}}, "poset_maps": {"1>f": [[1]]},
                "arrow_maps": {"s": [[-1]], "t": [[-1]]}},
       "trivial": {"groups": {"1": {"rank": 1}, "f": {"rank": 1}}, "poset_maps": {"1>f": [[1]]},
                   "arrow_maps": {"s": [[1]], "t": [[1]]}}
     })J"},
    {"nontransitive",
     R"J({"identities": ["1", "e", "f", "0"],
         "arrows": [{"id": "s", "d": "1", "r": "1", "inv": "s"},
                    {"id": "s_A", "d": "e", "r": "e", "inv": "s_A"},
                    {"id": "s_B", "d": "f", "r": "f", "inv": "s_B"},
                    {"id": "(s,0)", "d": "0", "r": "0", "inv": "(s,0)"},
                    {"id": "(0,s)", "d": "0", "r": "0", "inv": "(0,s)"},
                    {"id": "(s,s)", "d": "0", "r": "0", "inv": "(s,s)"}],
         "compose": [["s", "s", "1"], ["s_A", "s_A", "e"], ["s_B", "s_B", "f"],
                     ["(s,0)", "(s,0)", "0"], ["(0,s)", "(0,s)", "0"], ["(s,s)", "(s,s)", "0"],
                     ["(s,0)", "(0,s)", "(s,s)"], ["(0,s)", "(s,0)", "(s,s)"],
                     ["(s,0)", "(s,s)", "(0,s)"], ["(s,s)", "(s,0)", "(0,s)"],
                     ["(0,s)", "(s,s)", "(s,0)"], ["(s,s)", "(0,s)", "(s,0)"]],
         "order": [["e", "1"], ["f", "1"], ["0", "e"], ["0", "f"],
                   ["s_A", "s"], ["s_B", "s"], ["(s,0)", "s_A"], ["(0,s)", "s_B"]]})J",
     "{}"},
    {"bowtie",
     R"J({"identities": ["a", "b", "c", "d"], "arrows": [], "compose": [],
         "order": [["c", "a"], ["d", "a"], ["c", "b"], ["d", "b"]]})J",
     R"J({
       "constant": {"groups": {"a": {"rank": 1}, "b": {"rank": 1}, "c": {"rank": 1}, "d": {"rank": 1}},
                    "poset_maps": {"a>c": [[1]], "a>d": [[1]], "b>c": [[1]], "b>d": [[1]]}}
     })J"},
};

const Fixture& lookup(const std::string& name) {
  for (const auto& f : kFixtures)
    if (name == f.name) return f;
  throw std::out_of_range("unknown fixture '" + name + "'");
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : kFixtures) out.emplace_back(f.name);
  return out;
}

GroupoidSpec fixture_spec(const std::string& name) {
  return groupoid_spec_from_json(Json::parse(lookup(name).groupoid));
}

WorkspaceDocument fixture_document(const std::string& name) {
  const Fixture& f = lookup(name);
  Json doc = {{"schema", 1}, {"groupoid", Json::parse(f.groupoid)}};
  Json modules = Json::parse(f.modules);
  if (!modules.empty()) doc["modules"] = modules;
  return workspace_from_json(doc);
}

}  // namespace ogpd
