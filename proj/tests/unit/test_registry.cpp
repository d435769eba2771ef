#include <doctest.h>

#include <cstring>
#include <map>

#include "propkit/activity/nrtl.hpp"
#include "propkit/antoine/antoine.hpp"
#include "propkit/api/config.hpp"
#include "propkit/core/registry.hpp"
#include "propkit/error.hpp"
#include "systems.hpp"

using namespace propkit;

namespace {

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an Error");
  return Error(Errc::InvalidInput, "", "");
}

const char* kTableA =
    "smiles,A,B,C,t_min_K,t_max_K,p_unit\n"
    "OCC,9.0,1500,-50,280,400,Pa\n";
const char* kTableB =
    "smiles,A,B,C,t_min_K,t_max_K,p_unit\n"
    "CCO,5.0,1500,-50,280,400,kPa\n"
    "CCCCCC,4.0,1200,-50,280,400,bar\n";

}  // namespace

TEST_CASE("register_component canonicalizes and fills what resolves") {
  const auto& reg = testsys::demo_registry();
  const auto ethanol = register_component("OCC", reg);
  CHECK(ethanol.input_smiles == "OCC");
  CHECK(ethanol.canonical_smiles == "CCO");
  REQUIRE(ethanol.groups);
  CHECK(*ethanol.groups == GroupCounts{{1, 1}, {2, 1}, {14, 1}});
  CHECK(ethanol.antoine.has_value());

  const auto phenol = register_component("Oc1ccccc1", reg);
  CHECK(phenol.canonical_smiles == "Oc1ccccc1");

  const auto chloro = register_component("CCCl", reg);
  CHECK(!chloro.groups);
  CHECK(!chloro.antoine);

  const auto bad = error_of([&] { register_component("C(", reg); });
  CHECK(bad.code() == Errc::InvalidSmiles);
  CHECK(bad.offset() == 1u);
  CHECK(error_of([&] { register_component("", reg); }).code() == Errc::InvalidSmiles);
}

TEST_CASE("demo table values round-trip") {
  const auto hexane = testsys::component("CCCCCC");
  const auto p = resolve_antoine(hexane, testsys::demo_registry());
  CHECK(p.A_declared() == 4.00266);
  CHECK(p.B() == 1171.53);
  CHECK(p.C() == -48.784);
  CHECK(p.t_min().value == 286.18);
  CHECK(p.t_max().value == 342.69);
  CHECK(p.declared_unit() == PressureUnit::bar);
}

TEST_CASE("first matching source wins, absent components are not covered") {
  ProviderRegistry reg;
  reg.add_antoine_source(std::make_shared<AntoineTable>(AntoineTable::parse(kTableA, "a")));
  reg.add_antoine_source(std::make_shared<AntoineTable>(AntoineTable::parse(kTableB, "b")));
  const auto ethanol = register_component("CCO", reg);
  CHECK(resolve_antoine(ethanol, reg).A() == 9.0);
  const auto hexane = register_component("CCCCCC", reg);
  CHECK(resolve_antoine(hexane, reg).A_declared() == 4.0);
  const auto water = register_component("O", reg);
  CHECK(error_of([&] { resolve_antoine(water, reg); }).code() == Errc::NotCovered);
}

TEST_CASE("repeated resolution is bit-identical") {
  const auto& reg = testsys::demo_registry();
  const auto a = resolve_antoine(register_component("CCO", reg), reg);
  const auto b = resolve_antoine(register_component("OCC", reg), reg);
  CHECK(a == b);
  const auto c1 = register_component("CCCCCC", reg), c2 = register_component("CCO", reg);
  const auto m1 = resolve_activity_model("unifac", c1, c2, reg);
  const auto m2 = resolve_activity_model("unifac", c1, c2, reg);
  const auto g1 = m1->ln_gamma(0.37, Kelvin{333.0}), g2 = m2->ln_gamma(0.37, Kelvin{333.0});
  CHECK(g1.ln_gamma1 == g2.ln_gamma1);
  CHECK(g1.ln_gamma2 == g2.ln_gamma2);
}

TEST_CASE("activity model resolution") {
  const auto& reg = testsys::demo_registry();
  const auto hex = testsys::component("CCCCCC"), eth = testsys::component("CCO");
  const auto nrtl = resolve_activity_model("nrtl-demo", hex, eth, reg);
  const auto* as_nrtl = dynamic_cast<const activity::NrtlModel*>(nrtl.get());
  REQUIRE(as_nrtl);
  CHECK(as_nrtl->parameters().a12 == 0.5);

  // Reversed order comes back swapped.
  const auto rev = resolve_activity_model("nrtl-demo", eth, hex, reg);
  CHECK(dynamic_cast<const activity::NrtlModel&>(*rev).parameters().a21 == 0.5);

  const auto chloro = testsys::component("CCCl");
  CHECK(error_of([&] { resolve_activity_model("unifac", hex, chloro, reg); }).code() ==
        Errc::DecompositionRequired);
  CHECK(error_of([&] { resolve_activity_model("nrtl", hex, chloro, reg); }).code() ==
        Errc::NotCovered);
  const auto unknown = error_of([&] { resolve_activity_model("wilson", hex, eth, reg); });
  CHECK(unknown.code() == Errc::UnknownModel);
  CHECK(std::string(unknown.what()).find("unifac-modified") != std::string::npos);

  const auto mod = resolve_activity_model("unifac-modified", hex, eth, reg);
  CHECK(mod->ln_gamma(0.4, Kelvin{300.0}).ln_gamma1 != mod->ln_gamma(0.4, Kelvin{380.0}).ln_gamma1);
}

TEST_CASE("models listing and re-registration") {
  ProviderRegistry reg;
  reg.add_activity_model("m", "first", nullptr);
  reg.add_activity_model("m", "second", nullptr);
  REQUIRE(reg.activity_models().size() == 1);
  CHECK(reg.activity_models()[0].description == "second");
  CHECK(reg.find_activity_model("x") == nullptr);

  std::vector<std::string> names;
  for (const auto& m : testsys::demo_registry().activity_models()) names.push_back(m.name);
  CHECK(names == std::vector<std::string>{"nrtl", "nrtl-demo", "unifac", "unifac-modified"});
}

TEST_CASE("table parsing errors") {
  CHECK(error_of([] { AntoineTable::parse("smiles,A,B\nCCO,1,2\n", "t"); }).code() ==
        Errc::MalformedTable);
  CHECK(error_of([] {
          AntoineTable::parse("smiles,A,B,C,t_min_K,t_max_K,p_unit\nC(,1,2,3,4,5,Pa\n", "t");
        }).code() == Errc::MalformedTable);
  CHECK(error_of([] {
          AntoineTable::parse("smiles,A,B,C,t_min_K,t_max_K,p_unit\nCCO,1,2,3,4,5,atm\n", "t");
        }).code() == Errc::MalformedTable);
  CHECK(error_of([] { AntoineTable::load("/nonexistent/antoine.csv"); }).code() ==
        Errc::MalformedTable);

  const char* header = "smiles1,smiles2,variant,a12,a21,b12,b21,e12,e21,f12,f21,c12,d12\n";
  const std::string dup = std::string(header) + "CCO,O,3,1,2,0,0,0,0,0,0,0.3,0\n" +
                          "O,OCC,3,1,2,0,0,0,0,0,0,0.3,0\n";
  CHECK(error_of([&] { NrtlPairTable::parse(dup, "t"); }).code() == Errc::MalformedTable);
  const std::string slot = std::string(header) + "CCO,O,3,1,2,5,0,0,0,0,0,0.3,0\n";
  CHECK(error_of([&] { NrtlPairTable::parse(slot, "t"); }).code() == Errc::MalformedTable);

  const auto ok = NrtlPairTable::parse(std::string(header) + "OCC,O,6,1,2,10,20,0,0,0,0,0.3,0.001\n", "t");
  const auto fwd = ok.lookup("CCO", "O");
  const auto bwd = ok.lookup("O", "CCO");
  REQUIRE(fwd);
  REQUIRE(bwd);
  CHECK(fwd->b12 == 10);
  CHECK(bwd->b12 == 20);
  CHECK(bwd->c12 == 0.3);
  CHECK(!ok.lookup("CCO", "C"));
}

TEST_CASE("configuration text and environment overrides") {
  const auto c = api::parse_config(
      "# comment\n"
      "port = 9001\n"
      "host=0.0.0.0\n"
      "antoine_file = /tmp/a.csv\n"
      "antoine_file = /tmp/b.csv\n"
      "activity_adapter = hanna http://127.0.0.1:9100/activity\n"
      "adapter_timeout_s = 2.5\n");
  CHECK(c.port == 9001);
  CHECK(c.host == "0.0.0.0");
  CHECK(c.antoine_files == std::vector<std::string>{"/tmp/a.csv", "/tmp/b.csv"});
  REQUIRE(c.activity_adapters.size() == 1);
  CHECK(c.activity_adapters[0].first == "hanna");
  CHECK(c.adapter_timeout_s == 2.5);
  CHECK(error_of([] { api::parse_config("port = eighty\n"); }).code() == Errc::InvalidInput);
  CHECK(error_of([] { api::parse_config("colour = blue\n"); }).code() == Errc::InvalidInput);

  static std::map<std::string, std::string> env{{"PROPKIT_PORT", "7777"},
                                                {"PROPKIT_ANTOINE_FILES", "/x.csv:/y.csv"}};
  auto fake = [](const char* name) -> const char* {
    auto it = env.find(name);
    return it == env.end() ? nullptr : it->second.c_str();
  };
  auto d = api::default_config();
  api::apply_env_overrides(d, fake);
  CHECK(d.port == 7777);
  CHECK(d.antoine_files == std::vector<std::string>{"/x.csv", "/y.csv"});
}
