#include <gtest/gtest.h>

#include <random>
#include <set>

#include "autocat/functors.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace autocat;
using autocat::testing::load_category;

namespace {

const std::vector<std::string> kCategoryFiles{"terminal.cat", "z1.cat",       "z2.cat",       "z3.cat",
                                              "z4.cat",       "z5.cat",       "z6.cat",       "idem.cat",
                                              "parallel.cat", "retract.cat",  "square.cat",   "coslice_z3.cat",
                                              "coslice_idem.cat"};

struct Enumerated {
  std::map<ObjectId, ObjectId> objects;
  std::map<ArrowId, ArrowId> arrows;
};

// Every total pair of maps (objects, arrows) from s to t.
std::vector<Enumerated> all_maps(const FiniteCategory& s, const FiniteCategory& t) {
  std::vector<Enumerated> out;
  std::vector<std::size_t> od(s.object_count(), 0), ad(s.arrow_count(), 0);
  std::vector<std::size_t> orad(s.object_count(), t.object_count()), arad(s.arrow_count(), t.arrow_count());
  do {
    do {
      Enumerated m;
      for (std::size_t i = 0; i < od.size(); ++i) m.objects.emplace(s.object(i), t.object(od[i]));
      for (std::size_t i = 0; i < ad.size(); ++i) m.arrows.emplace(s.arrow(i), t.arrow(ad[i]));
      out.push_back(std::move(m));
    } while (autocat::testing::detail::bump(ad, arad));
  } while (autocat::testing::detail::bump(od, orad));
  return out;
}

std::map<std::string, std::string> plain(const auto& m) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : m) out.emplace(k.str(), v.str());
  return out;
}

StateMap rotation(std::size_t k) { return {k % 3, (1 + k) % 3, (2 + k) % 3}; }

}  // namespace

TEST(Functor, IdentityAndCollapseOnCorpus) {
  auto one = terminal_category();
  for (const auto& file : kCategoryFiles) {
    auto c = load_category(file);
    EXPECT_TRUE(check_functor(identity_functor(c)).valid()) << file;
    EXPECT_TRUE(check_functor(to_terminal(c, one)).valid()) << file;
  }
}

TEST(Functor, Z3Automorphism) {
  auto z3 = load_category("z3.cat");
  Functor swap{"Swap", z3, z3, {{ObjectId{"A"}, ObjectId{"A"}}},
               {{ArrowId{"e"}, ArrowId{"e"}}, {ArrowId{"g"}, ArrowId{"g2"}}, {ArrowId{"g2"}, ArrowId{"g"}}}};
  EXPECT_TRUE(check_functor(swap).valid());

  Functor bad = swap;
  bad.arrows[ArrowId{"g"}] = ArrowId{"e"};
  auto r = check_functor(bad);
  ASSERT_FALSE(r.valid());
  EXPECT_EQ(r.violations.front().kind, FunctorViolationKind::CompositionNotPreserved);
  EXPECT_EQ((std::vector<std::string>(r.violations.front().witness.begin(), r.violations.front().witness.begin() + 2)),
            (std::vector<std::string>{"g", "g"}));
}

TEST(Functor, CorpusBadFunctor) {
  auto doc = autocat::testing::load_document("broken_functor.cat");
  CategoryTable table{{"Z3", make_category(doc.categories[0])}};
  auto r = check_functor(resolve_functor(doc.functors[0], table));
  ASSERT_FALSE(r.valid());
  EXPECT_EQ(r.violations.front().witness[0], "g");
  EXPECT_EQ(r.violations.front().witness[1], "g");
}

TEST(Functor, Errors) {
  auto z3 = load_category("z3.cat");
  auto partial = identity_functor(z3);
  partial.arrows.erase(ArrowId{"g"});
  try {
    check_functor(partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTotal);
  }
  auto unknown = identity_functor(z3);
  unknown.arrows[ArrowId{"g"}] = ArrowId{"zz"};
  EXPECT_THROW(check_functor(unknown), Error);
}

TEST(Functor, EndpointViolation) {
  auto square = load_category("square.cat");
  auto F = identity_functor(square);
  F.arrows[ArrowId{"f"}] = ArrowId{"g"};
  auto r = check_functor(F);
  ASSERT_FALSE(r.valid());
  EXPECT_EQ(r.violations.front().kind, FunctorViolationKind::EndpointsNotPreserved);
}

TEST(Functor, IdentityViolation) {
  auto retract = load_category("retract.cat");
  auto F = identity_functor(retract);
  F.arrows[ArrowId{"idX"}] = ArrowId{"e"};
  auto r = check_functor(F);
  ASSERT_FALSE(r.valid());
  bool identity_reported = false;
  for (const auto& v : r.violations) identity_reported |= v.kind == FunctorViolationKind::IdentityNotPreserved;
  EXPECT_TRUE(identity_reported);
}

// A single changed arrow assignment can land on another functor when the
// target has a parallel arrow with the same behaviour under composition.
TEST(Functor, SomeSingleMutationsRemainFunctors) {
  auto parallel = load_category("parallel.cat");
  auto F = identity_functor(parallel);
  F.arrows[ArrowId{"f"}] = ArrowId{"h"};
  EXPECT_TRUE(check_functor(F).valid());
  EXPECT_TRUE(autocat::testing::oracle_is_functor(parallel.to_raw(), parallel.to_raw(), plain(F.objects), plain(F.arrows)));

  auto retract = load_category("retract.cat");
  auto G = identity_functor(retract);
  G.arrows[ArrowId{"e"}] = ArrowId{"idX"};
  EXPECT_TRUE(check_functor(G).valid());
}

TEST(Functor, CheckerAgreesWithOracleAndCompositionIsClosed) {
  std::vector<FiniteCategory> cats;
  for (const auto* file : {"terminal.cat", "z2.cat", "z3.cat", "idem.cat", "parallel.cat", "retract.cat"}) {
    cats.push_back(load_category(file));
  }
  // valid[i][j]: every functor cats[i] -> cats[j]
  std::vector<std::vector<std::vector<Functor>>> valid(cats.size(), std::vector<std::vector<Functor>>(cats.size()));
  for (std::size_t i = 0; i < cats.size(); ++i) {
    for (std::size_t j = 0; j < cats.size(); ++j) {
      auto src = cats[i].to_raw(), tgt = cats[j].to_raw();
      for (auto& m : all_maps(cats[i], cats[j])) {
        Functor F{"F", cats[i], cats[j], std::move(m.objects), std::move(m.arrows)};
        bool expected = autocat::testing::oracle_is_functor(src, tgt, plain(F.objects), plain(F.arrows));
        auto r = check_functor(F);
        ASSERT_EQ(r.valid(), expected);
        for (const auto& v : r.violations) EXPECT_FALSE(v.witness.empty());
        if (expected) valid[i][j].push_back(std::move(F));
      }
      if (cats[j].arrow_count() == 1) {
        EXPECT_EQ(valid[i][j].size(), 1u);
      }
    }
  }
  std::size_t composites = 0;
  for (std::size_t i = 0; i < cats.size(); ++i) {
    for (std::size_t j = 0; j < cats.size(); ++j) {
      for (std::size_t k = 0; k < cats.size(); ++k) {
        for (const auto& F : valid[i][j]) {
          for (const auto& G : valid[j][k]) {
            EXPECT_TRUE(check_functor(compose(G, F)).valid());
            ++composites;
          }
        }
      }
    }
  }
  EXPECT_GT(composites, 0u);
}

TEST(Natural, Examples) {
  auto z3 = load_category("z3.cat");
  auto id = identity_functor(z3);
  EXPECT_TRUE(check_natural(identity_transformation(id)).natural);

  Functor swap{"Swap", z3, z3, {{ObjectId{"A"}, ObjectId{"A"}}},
               {{ArrowId{"e"}, ArrowId{"e"}}, {ArrowId{"g"}, ArrowId{"g2"}}, {ArrowId{"g2"}, ArrowId{"g"}}}};
  NaturalTransformation nt{"IdToSwap", id, swap, {{ObjectId{"A"}, ArrowId{"e"}}}};
  auto r = check_natural(nt);
  ASSERT_FALSE(r.natural);
  EXPECT_EQ(r.failure->arrow, ArrowId{"g"});
  EXPECT_EQ(r.failure->lhs, ArrowId{"g"});
  EXPECT_EQ(r.failure->rhs, ArrowId{"g2"});

  // source without non-identity arrows: any well-typed component works
  auto one = terminal_category();
  Functor P{"P", one, z3, {{ObjectId{"pt"}, ObjectId{"A"}}}, {{ArrowId{"id_pt"}, ArrowId{"e"}}}};
  EXPECT_TRUE(check_natural({"any", P, P, {{ObjectId{"pt"}, ArrowId{"g"}}}}).natural);
}

TEST(Natural, IdentityOnCorpusFunctors) {
  auto doc = autocat::testing::load_document("functors.cat");
  CategoryTable table;
  for (const auto& c : doc.categories) table.emplace(c.name, make_category(c));
  for (const auto& f : doc.functors) {
    auto F = resolve_functor(f, table);
    ASSERT_TRUE(check_functor(F).valid()) << f.name;
    EXPECT_TRUE(check_natural(identity_transformation(F)).natural) << f.name;
  }
  EXPECT_TRUE(check_natural(resolve_natural(*doc.natural("IdNat"), doc, table)).natural);
  EXPECT_FALSE(check_natural(resolve_natural(*doc.natural("IdToSwap"), doc, table)).natural);
}

TEST(Natural, Errors) {
  auto z3 = load_category("z3.cat");
  auto other = load_category("z3.cat");
  auto F = identity_functor(z3);
  auto G = identity_functor(other);
  EXPECT_THROW(check_natural({"n", F, G, {{ObjectId{"A"}, ArrowId{"e"}}}}), Error);
  try {
    check_natural({"n", F, F, {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTotal);
  }
}

TEST(DynSys, Examples) {
  auto still = transformation_monoid(autocat::testing::load_dynsys("still.dyn"));
  EXPECT_EQ(still.monoid.size(), 1u);

  auto rot = transformation_monoid(autocat::testing::load_dynsys("rotation.dyn"));
  EXPECT_EQ(rot.monoid.size(), 3u);
  EXPECT_EQ(rot.tail, 0u);
  EXPECT_EQ(rot.period, 3u);
  EXPECT_TRUE(autocat::testing::oracle_isomorphic(autocat::testing::table_monoid(rot.monoid.category().to_raw()),
                                                  autocat::testing::table_monoid(autocat::testing::cyclic_group(3))));

  auto constant = transformation_monoid(autocat::testing::load_dynsys("constant.dyn"));
  ASSERT_EQ(constant.monoid.size(), 2u);
  EXPECT_EQ(constant.monoid.compose(ArrowId{"s^1"}, ArrowId{"s^1"}), ArrowId{"s^1"});
  EXPECT_EQ(constant.action.at(ArrowId{"s^1"}), (StateMap{0, 0}));

  auto rho = transformation_monoid(autocat::testing::load_dynsys("rho.dyn"));
  EXPECT_EQ(rho.tail, 2u);
  EXPECT_EQ(rho.period, 2u);
  EXPECT_EQ(rho.monoid.size(), 4u);

  EXPECT_THROW(transformation_monoid(autocat::testing::load_dynsys("rotation.dyn"), 2), Error);
  EXPECT_THROW(transformation_monoid(autocat::testing::load_dynsys("rotation.dyn"), 0), Error);
}

TEST(DynSys, ConstructionErrors) {
  EXPECT_THROW(DiscreteDynSys({}, {}), Error);
  EXPECT_THROW(DiscreteDynSys({"a", "b"}, {{"a", "b"}}), Error);
  EXPECT_THROW(DiscreteDynSys({"a"}, {{"a", "z"}}), Error);
  EXPECT_THROW(DiscreteDynSys({"a", "a"}, {{"a", "a"}}), Error);
}

TEST(DynSys, RandomSystems) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 7);
    const std::size_t n = size(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::string> states;
    std::map<std::string, std::string> step;
    std::vector<std::size_t> f(n);
    for (std::size_t i = 0; i < n; ++i) states.push_back("q" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = pick(rng);
      step[states[i]] = states[f[i]];
    }
    DiscreteDynSys d(states, step);
    auto t = transformation_monoid(d);

    // count distinct iterates directly
    std::set<std::vector<std::size_t>> iterates;
    std::vector<std::size_t> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    while (iterates.insert(cur).second) {
      for (auto& s : cur) s = f[s];
    }
    EXPECT_EQ(t.monoid.size(), iterates.size());
    EXPECT_LE(t.monoid.size(), 1 + t.tail + t.period);
    EXPECT_EQ(t.monoid.size(), t.tail + t.period);
    EXPECT_TRUE(autocat::testing::oracle_is_category(t.monoid.category().to_raw()));
    EXPECT_TRUE(verify_action_functor(t.monoid, t.action, n).valid);
  }
}

TEST(Action, Z3Actions) {
  auto z3 = as_monoid(load_category("z3.cat"));
  std::map<ArrowId, StateMap> rot{{ArrowId{"e"}, rotation(0)}, {ArrowId{"g"}, rotation(1)}, {ArrowId{"g2"}, rotation(2)}};
  EXPECT_TRUE(verify_action_functor(z3, rot, 3).valid);

  auto broken = rot;
  broken[ArrowId{"g"}] = {0, 0, 0};
  auto r = verify_action_functor(z3, broken, 3);
  EXPECT_FALSE(r.valid);
  EXPECT_TRUE(r.identity_ok);
  ASSERT_TRUE(r.failing_pair);
  // action(g . g2) = action(e) = id, but const . rot2 is constant
  EXPECT_NE(after(broken.at(ArrowId{"g"}), broken.at(ArrowId{"g2"})), identity_map(3));

  auto partial = rot;
  partial.erase(ArrowId{"g"});
  EXPECT_THROW(verify_action_functor(z3, partial, 3), Error);
}
