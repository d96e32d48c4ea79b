#include <gtest/gtest.h>

#include <map>

#include "gt/gen/show_lam_gen.hpp"
#include "gt/gen/show_t_gen.hpp"
#include "gt/lambda.hpp"
#include "gt/runtime.hpp"
#include "support/generators.hpp"

using gt::Transformer;
using gt::unit;
using Lam = gt::gen::lam;
using gt::lambda::app;
using gt::lambda::var;
using Show = gt::gen::lam_t<unit, std::string>;

namespace {

std::string run(const Transformer& t, const Lam& l) {
  return gt::gen::lam_gcata<unit, std::string>(t, {}, l);
}

Transformer better_show() {
  return gt::gen::show_lam::make().extend(
      "better_show",
      {Show::c_Var.bind([](const Transformer&, const unit&, const Show::aug&,
                           const std::string& x) { return x; })});
}

// Renders the way better_show should, without the framework.
std::string plain(const Lam& l) {
  return std::visit(gt::overloaded{
                        [](const Lam::Var& v) { return v._0; },
                        [](const Lam::App& a) {
                          return "App (" + plain(*a._0) + ", " + plain(*a._1) + ")";
                        },
                        [](const Lam::Lam& f) { return "Lam (" + f._0 + ", " + plain(*f._1) + ")"; },
                    },
                    l.node);
}

int count_vars(const Lam& l) {
  return std::visit(gt::overloaded{
                        [](const Lam::Var&) { return 1; },
                        [](const Lam::App& a) { return count_vars(*a._0) + count_vars(*a._1); },
                        [](const Lam::Lam& f) { return count_vars(*f._1); },
                    },
                    l.node);
}

}  // namespace

TEST(MakeAug, ProjectsTheValue) {
  std::function<std::string(const unit&, const Lam&)> f = [](const unit&, const Lam&) {
    return std::string("shown");
  };
  auto a = gt::make_aug(var("x"), f, Show::tp{});
  EXPECT_EQ(a.x, var("x"));
}

TEST(MakeAug, PartialApplicationAgreesWithF) {
  gen_support::Rng rng(7);
  std::function<std::string(const int&, const Lam&)> f = [](const int& i, const Lam& l) {
    return std::to_string(i) + ":" + gt::lambda::show(l);
  };
  for (int n = 0; n < 200; ++n) {
    const Lam v = gen_support::random_term(rng, 4);
    const int i = gen_support::pick(rng, -50, 50);
    auto a = gt::make_aug(v, f, gt::gen::lam_t<int, std::string>::tp{});
    EXPECT_EQ(a.fx(i), f(i, v));
  }
}

TEST(MakeAug, ConstantFunction) {
  std::function<int(const unit&, const int&)> zero = [](const unit&, const int&) { return 0; };
  auto a = gt::make_aug(5, zero, Show::tp{});
  EXPECT_EQ(a.fx(unit{}), 0);
  EXPECT_EQ(a.x, 5);
}

TEST(ParamBundle, NamesMatchTypeParameters) {
  using TT = gt::gen::t_t<int, int, bool, bool, unit, int>;
  ASSERT_EQ(TT::tp::names.size(), 2u);
  EXPECT_EQ(TT::tp::names[0], "a");
  EXPECT_EQ(TT::tp::names[1], "b");
  EXPECT_TRUE(Show::tp::names.empty());
}

TEST(Extend, BetterShowReachesNestedVariables) {
  EXPECT_EQ(run(better_show(), app(var("x"), var("y"))), "App (x, y)");
}

TEST(Extend, EmptyOverrideChangesNothing) {
  gen_support::Rng rng(11);
  const Transformer base = gt::gen::show_lam::make();
  const Transformer same = base.extend("nothing", {});
  for (int n = 0; n < 100; ++n) {
    const Lam t = gen_support::random_term(rng, 5);
    EXPECT_EQ(run(base, t), run(same, t));
  }
}

TEST(Extend, LastWriterWins) {
  auto constant = [](std::string s) {
    return Show::c_Var.bind([s](const Transformer&, const unit&, const Show::aug&,
                                const std::string&) { return s; });
  };
  const Transformer t =
      gt::gen::show_lam::make().extend("h1", {constant("h1")}).extend("h2", {constant("h2")});
  EXPECT_EQ(run(t, var("x")), "h2");
  const Transformer same_layer = gt::gen::show_lam::make().extend("both", {constant("h1"), constant("h2")});
  EXPECT_EQ(run(same_layer, var("x")), "h2");
}

TEST(Extend, RejectsUnknownHandler) {
  constexpr gt::Slot<int(const Transformer&, const unit&)> bogus{"c_Bogus"};
  try {
    gt::gen::show_lam::make().extend("bad", {bogus.bind([](const Transformer&, const unit&) { return 0; })});
    FAIL() << "expected UnknownHandler";
  } catch (const gt::UnknownHandler& e) {
    EXPECT_EQ(e.name(), "c_Bogus");
  }
}

TEST(Dispatch, AbstractSlotThrows) {
  EXPECT_THROW(run(Show::abstract(), var("x")), gt::AbstractMethod);
}

TEST(Dispatch, WrongSignatureIsReported) {
  constexpr gt::Slot<int(const Transformer&, const unit&)> wrong{"c_Var"};
  const Transformer t = gt::gen::show_lam::make();
  EXPECT_THROW(t.call(wrong, unit{}), gt::SlotTypeMismatch);
}

TEST(Dispatch, TopLevelHandlerRunsOnceWithTheGivenAttribute) {
  using C = gt::gen::lam_t<int, int>;
  auto calls = std::make_shared<std::map<std::string, std::vector<int>>>();
  const Transformer t = C::abstract().extend(
      "count", {C::c_Var.bind([calls](const Transformer&, const int& i, const C::aug&,
                                      const std::string&) {
                  (*calls)["c_Var"].push_back(i);
                  return 0;
                }),
                C::c_App.bind([calls](const Transformer&, const int& i, const C::aug&, const C::aug&,
                                      const C::aug&) {
                  (*calls)["c_App"].push_back(i);
                  return 0;
                }),
                C::c_Lam.bind([calls](const Transformer&, const int& i, const C::aug&,
                                      const std::string&, const C::aug&) {
                  (*calls)["c_Lam"].push_back(i);
                  return 0;
                })});
  const std::vector<std::pair<Lam, std::string>> cases = {
      {var("x"), "c_Var"}, {app(var("x"), var("y")), "c_App"}, {gt::lambda::lam("x", var("x")), "c_Lam"}};
  for (const auto& [term, slot] : cases) {
    calls->clear();
    gt::gen::lam_gcata<int, int>(t, 42, term);
    ASSERT_EQ(calls->size(), 1u);
    EXPECT_EQ(calls->begin()->first, slot);
    EXPECT_EQ(calls->begin()->second, std::vector<int>{42});
  }
}

TEST(Dispatch, OverrideAtDepth) {
  gen_support::Rng rng(3);
  const Transformer t = better_show();
  for (int n = 0; n < 300; ++n) {
    const Lam term = gen_support::random_term(rng, 7);
    const std::string out = run(t, term);
    EXPECT_EQ(out, plain(term));
    EXPECT_EQ(out.find("Var ("), std::string::npos);
    EXPECT_GE(count_vars(term), 1);
  }
}

TEST(Dispatch, Stateless) {
  gen_support::Rng rng(5);
  const Transformer t = gt::gen::show_lam::make();
  for (int n = 0; n < 50; ++n) {
    const Lam term = gen_support::random_term(rng, 6);
    EXPECT_EQ(run(t, term), run(t, term));
  }
}

TEST(Introspection, ChainAndProviders) {
  const Transformer t = better_show();
  EXPECT_EQ(t.chain(), (std::vector<std::string>{"better_show", "show_lam", "lam_t"}));
  EXPECT_EQ(t.provider("c_Var"), "better_show");
  EXPECT_EQ(t.provider("c_App"), "show_lam");
  EXPECT_EQ(t.layer_methods("better_show"), std::vector<std::string>{"c_Var"});
  EXPECT_FALSE(Show::abstract().provider("c_Var").has_value());
  EXPECT_TRUE(t.declares("c_Lam"));
  EXPECT_FALSE(t.declares("head"));
}

TEST(Derive, AddsSlots) {
  constexpr gt::Slot<int(const Transformer&, const int&)> twice{"twice"};
  const Transformer t = Show::abstract().derive(
      "extra", {"twice"}, {twice.bind([](const Transformer&, const int& x) { return 2 * x; })});
  EXPECT_TRUE(t.declares("twice"));
  EXPECT_EQ(t.call(twice, 21), 42);
}

TEST(Box, ComparesByValue) {
  gt::Box<int> a(3), b(3), c(4);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == c);
  EXPECT_EQ(*a, 3);
}
