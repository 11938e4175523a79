#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ogpd/fixtures.hpp"
#include "ogpd/json_io.hpp"
#include "ogpd/random.hpp"

using namespace ogpd;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = OGPD_FIXTURE_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ogpd-tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(OGPD_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string pointer_of(const Json& j) {
  try {
    workspace_from_json(j);
  } catch (const InputError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

Json fixture_json(const std::string& name) { return Json::parse(slurp(kFixtures + "/" + name + ".json")); }

}  // namespace

TEST_CASE("fixture files are the canonical built-in documents") {
  for (const auto& name : fixture_names()) {
    INFO(name);
    const std::string text = slurp(kFixtures + "/" + name + ".json");
    CHECK(text == canonical_text(workspace_to_json(fixture_document(name))));
  }
}

TEST_CASE("save after load is byte-identical") {
  for (const auto& name : fixture_names()) {
    INFO(name);
    const fs::path src = kFixtures + "/" + name + ".json";
    const fs::path dst = scratch(name + ".json");
    save_workspace(dst.string(), load_workspace(src.string()));
    CHECK(slurp(dst) == slurp(src));
  }
}

TEST_CASE("documents load in any key order and with bare groupoids") {
  Json j = fixture_json("clifford");
  // Permute list entries; the canonical text must not change.
  auto& order = j["groupoid"]["order"];
  std::reverse(order.begin(), order.end());
  CHECK(canonical_text(workspace_to_json(workspace_from_json(j))) == slurp(kFixtures + "/clifford.json"));

  const WorkspaceDocument bare = workspace_from_json(fixture_json("clifford")["groupoid"]);
  CHECK(bare.modules.empty());
  CHECK(bare.groupoid == fixture_spec("clifford"));
}

TEST_CASE("schema errors point at the offending field") {
  Json j = fixture_json("clifford");
  j["groupoid"]["arrows"][1].erase("inv");
  CHECK(pointer_of(j) == "/groupoid/arrows/1/inv");

  j = fixture_json("clifford")["groupoid"];
  j["arrows"][0].erase("inv");
  CHECK(pointer_of(j) == "/arrows/0/inv");

  j = fixture_json("clifford");
  j["groupoid"]["compose"][0] = Json::array({"s", "s"});
  CHECK(pointer_of(j).rfind("/groupoid/compose/0", 0) == 0);

  j = fixture_json("clifford");
  j["schema"] = 2;
  CHECK(pointer_of(j) == "/schema");

  j = fixture_json("clifford");
  j["groupoid"]["order"].push_back(Json::array({"s", "ghost"}));
  CHECK(pointer_of(j).rfind("/groupoid/order", 0) == 0);
}

TEST_CASE("module documents are checked") {
  Json j = fixture_json("clifford");
  j["modules"]["sign"]["poset_maps"].erase("1>f");
  CHECK(pointer_of(j) == "/modules/sign/poset_maps/1>f");

  j = fixture_json("clifford");
  j["modules"]["sign"]["poset_maps"]["f>1"] = Json::array({Json::array({1})});
  CHECK(pointer_of(j).rfind("/modules/sign/poset_maps", 0) == 0);

  j = fixture_json("clifford");
  j["modules"]["sign"]["arrow_maps"]["t"] = Json::array({Json::array({1})});
  // s acts by -1 and t by +1, but t is the restriction of s.
  CHECK(pointer_of(j).rfind("/modules/sign", 0) == 0);

  j = fixture_json("clifford");
  j["modules"]["sign"]["arrow_maps"]["s"] = Json::array({Json::array({1, 0})});
  CHECK(pointer_of(j) == "/modules/sign/arrow_maps/s/0");

  j = fixture_json("chain2");
  j["modules"]["mixed"]["groups"].erase("f");
  CHECK(pointer_of(j) == "/modules/mixed/groups/f");
}

TEST_CASE("module round trip") {
  const WorkspaceDocument doc = fixture_document("chain2");
  const OrderedGroupoid g = OrderedGroupoid::build(doc.groupoid);
  const LCat l = LCat::build(g);
  for (const auto& [name, raw] : doc.modules) {
    INFO(name);
    const GModule m = module_from_json(raw, g, l);
    const GModule again = module_from_json(module_to_json(m, g, l), g, l);
    REQUIRE(again.groups.size() == m.groups.size());
    for (std::size_t o = 0; o < m.groups.size(); ++o)
      CHECK(again.groups[o].canonical() == m.groups[o].canonical());
    CHECK(again.actions == m.actions);
  }
}

TEST_CASE("integers beyond 64 bits travel as strings") {
  const Integer big("123456789012345678901234567890");
  const Json j = integer_to_json(big);
  CHECK(j.is_string());
  CHECK(integer_from_json(j, "") == big);
  CHECK(integer_to_json(Integer(-7)).is_number_integer());
  CHECK(integer_from_json(Json("-7"), "") == -7);
  CHECK_THROWS_AS(integer_from_json(Json("seven"), "/x"), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2]]"), 2, 1, "/m"), InputError);
  CHECK(matrix_from_json(Json::parse("[[1],[2]]"), 2, 1, "/m") == ZMatrix{{1}, {2}});
}

TEST_CASE("the generator is deterministic") {
  for (std::uint64_t seed : {0u, 1u, 17u, 123456u}) {
    CHECK(random_groupoid_spec(seed) == random_groupoid_spec(seed));
    const RandomOgParams p{4, 4, 2, true};
    CHECK(random_groupoid_spec(seed, p) == random_groupoid_spec(seed, p));
  }
  CHECK_FALSE(random_groupoid_spec(1) == random_groupoid_spec(2));
  const Run a = run("gen --seed 99"), b = run("gen --seed 99");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"seed\"") != std::string::npos);
}

TEST_CASE("command line exit codes") {
  const std::string dir = kFixtures + "/";

  Run r = run("validate " + dir + "z2group.json --json");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["valid"] == true);

  r = run("validate " + dir + "nontransitive.json --json");
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["valid"] == false);

  r = run("quotient " + dir + "nontransitive.json");
  CHECK(r.code == 1);
  CHECK(r.out.find("(s_A, s, s_B)") != std::string::npos);

  r = run("quotient " + dir + "clifford.json");
  CHECK(r.code == 0);

  r = run("check theorem " + dir + "clifford.json --degrees 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("degree 2: Z/2 | Z/2") != std::string::npos);

  r = run("check adjunction " + dir + "clifford.json");
  CHECK(r.code == 2);  // infinite groups cannot be enumerated

  r = run("homology " + dir + "z2group.json --module trivial --max-degree 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("Z/2") != std::string::npos);

  CHECK(run("validate " + dir + "does-not-exist.json").code == 2);
  CHECK(run("validate --no-such-flag").code == 2);
  CHECK(run("frobnicate").code == 2);

  const fs::path broken = scratch("broken.json");
  write(broken, "{\"identities\": [\"e\"], ");
  CHECK(run("validate " + broken.string()).code == 2);

  const fs::path no_inv = scratch("no-inv.json");
  Json j = fixture_json("clifford");
  j["groupoid"]["arrows"][1].erase("inv");
  write(no_inv, j.dump());
  r = run("validate " + no_inv.string());
  CHECK(r.code == 2);
  CHECK(r.out.find("/groupoid/arrows/1/inv") != std::string::npos);

  r = run("fixture clifford");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(dir + "clifford.json"));
}
