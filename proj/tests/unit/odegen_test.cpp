#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "triadic/odegen.hpp"

namespace {

using triadic::OdeFormat;
using triadic::OdeSystem;
using triadic::OdeTerm;
using triadic::Triad;

const Triad kIsolated{{4, 12}, {5, 14}, {9, 13}};
// Sum mode of the first triad is the first mode of the second one.
const std::vector<Triad> kButterfly{{{2, 44}, {28, 55}, {30, 54}}, {{30, 54}, {28, 90}, {58, 65}}};

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TRIADIC_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

OdeTerm term(std::size_t alpha, std::size_t triad, int slot, std::size_t f0, std::size_t f1,
             std::int64_t den) {
  return {alpha, triad, slot, {f0, f1}, 1, den};
}

TEST(OdeGen, IsolatedTriad) {
  const std::vector<Triad> one{kIsolated};
  const OdeSystem s = triadic::generate(one);
  ASSERT_EQ(s.modes.size(), 3u);
  EXPECT_EQ(s.mode_labels, (std::vector<std::size_t>{1, 2, 3}));
  ASSERT_EQ(s.equations.size(), 3u);
  EXPECT_EQ(s.equations[0].terms, std::vector<OdeTerm>{term(1, 0, 1, 1, 2, 1)});
  EXPECT_EQ(s.equations[1].terms, std::vector<OdeTerm>{term(2, 0, 2, 0, 2, 1)});
  EXPECT_EQ(s.equations[2].terms, std::vector<OdeTerm>{term(3, 0, 3, 0, 1, 1)});
  const std::string text = triadic::emit(s, OdeFormat::text);
  EXPECT_NE(text.find("dA1/dt = a1*A2*A3\n"), std::string::npos);
  EXPECT_NE(text.find("dA2/dt = a2*A1*A3\n"), std::string::npos);
  EXPECT_NE(text.find("dA3/dt = a3*A1*A2\n"), std::string::npos);
}

TEST(OdeGen, ButterflySharesOneMode) {
  const OdeSystem s = triadic::generate(kButterfly);
  ASSERT_EQ(s.modes.size(), 5u);
  EXPECT_EQ(s.mode_labels, (std::vector<std::size_t>{1, 2, 3, 5, 6}));
  ASSERT_EQ(s.equations.size(), 5u);
  // Mode indices: A1 -> 0, A2 -> 1, A3 -> 2, A5 -> 3, A6 -> 4.
  EXPECT_EQ(s.equations[0].terms, std::vector<OdeTerm>{term(1, 0, 1, 1, 2, 1)});
  EXPECT_EQ(s.equations[1].terms, std::vector<OdeTerm>{term(2, 0, 2, 0, 2, 1)});
  EXPECT_EQ(s.equations[2].terms,
            (std::vector<OdeTerm>{term(3, 0, 3, 0, 1, 2), term(4, 1, 1, 3, 4, 2)}));
  EXPECT_EQ(s.equations[3].terms, std::vector<OdeTerm>{term(5, 1, 2, 2, 4, 1)});
  EXPECT_EQ(s.equations[4].terms, std::vector<OdeTerm>{term(6, 1, 3, 2, 3, 1)});
  EXPECT_TRUE(s.double_links.empty());
  const std::string text = triadic::emit(s, OdeFormat::text);
  EXPECT_NE(text.find("dA3/dt = 1/2*(a3*A1*A2 + a4*A5*A6)\n"), std::string::npos);
  EXPECT_NE(text.find("dA5/dt = a5*A3*A6\n"), std::string::npos);
  EXPECT_NE(text.find("dA6/dt = a6*A3*A5\n"), std::string::npos);
}

TEST(OdeGen, ModeInThreeTriadsGetsOneThird) {
  const std::vector<Triad> three{{{1, 10}, {2, 20}, {3, 30}},
                                 {{3, 30}, {4, 40}, {7, 70}},
                                 {{3, 30}, {5, 50}, {8, 80}}};
  const OdeSystem s = triadic::generate(three);
  EXPECT_EQ(s.modes.size(), 7u);
  const auto& shared = s.equations[2];
  ASSERT_EQ(shared.terms.size(), 3u);
  for (const auto& t : shared.terms) {
    EXPECT_EQ(t.prefactor_num, 1);
    EXPECT_EQ(t.prefactor_den, 3);
  }
  EXPECT_NE(triadic::emit(s, OdeFormat::text).find("dA3/dt = 1/3*("), std::string::npos);
}

TEST(OdeGen, DoubleLinkIsRecorded) {
  const std::vector<Triad> two{{{1, 10}, {2, 20}, {3, 30}}, {{2, 20}, {3, 30}, {5, 50}}};
  const OdeSystem s = triadic::generate(two);
  ASSERT_EQ(s.double_links.size(), 1u);
  EXPECT_EQ(s.modes.size(), 4u);
  EXPECT_NE(triadic::emit(s, OdeFormat::text).find("share two modes"), std::string::npos);
}

TEST(OdeGen, StructuralInvariants) {
  const std::vector<Triad> cluster{{{1, 10}, {2, 20}, {3, 30}},
                                   {{3, 30}, {4, 40}, {7, 70}},
                                   {{4, 40}, {6, 60}, {10, 100}},
                                   {{1, 10}, {6, 60}, {7, 70}}};
  const OdeSystem s = triadic::generate(cluster);
  std::set<std::pair<std::int64_t, std::int64_t>> distinct;
  for (const auto& t : cluster) {
    for (const auto& k : t.vectors()) distinct.insert({k.m, k.n});
  }
  EXPECT_EQ(s.modes.size(), distinct.size());
  EXPECT_EQ(s.equations.size(), s.modes.size());
  std::size_t terms = 0;
  for (const auto& eq : s.equations) {
    terms += eq.terms.size();
    for (const auto& t : eq.terms) {
      EXPECT_EQ(t.prefactor_den, static_cast<std::int64_t>(eq.terms.size()));
    }
  }
  EXPECT_EQ(terms, 3 * cluster.size());
  EXPECT_EQ(triadic::emit(s, OdeFormat::structured), triadic::emit(triadic::generate(cluster), "json"));
}

TEST(OdeGen, FormatsAndCoefficients) {
  EXPECT_EQ(triadic::parse_ode_format("text"), OdeFormat::text);
  EXPECT_EQ(triadic::parse_ode_format("structured"), OdeFormat::structured);
  EXPECT_EQ(triadic::parse_ode_format("json"), OdeFormat::structured);
  EXPECT_THROW(triadic::parse_ode_format("latex"), std::invalid_argument);

  const std::vector<Triad> one{kIsolated};
  const std::vector<std::size_t> ids{17};
  const OdeSystem s = triadic::generate(one, ids);
  const triadic::CoefficientTable table{{{17, 1}, "-0.25"}, {{17, 3}, "3/7"}};
  const std::string text = triadic::emit(s, OdeFormat::text, &table);
  EXPECT_NE(text.find("dA1/dt = (-0.25)*A2*A3"), std::string::npos);
  EXPECT_NE(text.find("dA2/dt = a2*A1*A3"), std::string::npos);
  EXPECT_NE(text.find("dA3/dt = (3/7)*A1*A2"), std::string::npos);
  const auto doc = nlohmann::json::parse(triadic::emit(s, OdeFormat::structured, &table));
  EXPECT_EQ(doc["equations"][0]["terms"][0]["alpha_value"], "-0.25");
  EXPECT_FALSE(doc["equations"][1]["terms"][0].contains("alpha_value"));
  EXPECT_THROW(triadic::generate(one, std::vector<std::size_t>{1, 2}), std::invalid_argument);
}

TEST(OdeGen, EmptyInput) {
  EXPECT_EQ(triadic::emit_all({}, OdeFormat::text), "");
  EXPECT_EQ(triadic::emit_all({}, OdeFormat::structured), "");
}

TEST(OdeGen, GoldenFiles) {
  const std::vector<Triad> one{kIsolated};
  const OdeSystem iso = triadic::generate(one);
  const OdeSystem fly = triadic::generate(kButterfly);
  const std::vector<OdeSystem> iso_all{iso};
  const std::vector<OdeSystem> fly_all{fly};
  EXPECT_EQ(triadic::emit_all(iso_all, OdeFormat::text), slurp("isolated.ode.txt"));
  EXPECT_EQ(triadic::emit_all(fly_all, OdeFormat::text), slurp("butterfly.ode.txt"));
  EXPECT_EQ(triadic::emit_all(iso_all, OdeFormat::structured), slurp("isolated.ode.json"));
  EXPECT_EQ(triadic::emit_all(fly_all, OdeFormat::structured), slurp("butterfly.ode.json"));
}

}  // namespace
