// The five showcase terms from the reduction-strategy examples, with the
// strategy each example is stated for.
#pragma once

#include <vector>

#include "gt/lambda.hpp"

namespace samples {

using namespace gt::lambda;

struct Sample {
  Strategy strategy;
  Term term;
  Term expected;
};

inline std::vector<Sample> all() {
  const Term under_lambda = lam("x", app(lam("y", var("y")), var("z")));
  const Term in_argument = app(var("x"), app(lam("x", var("x")), var("y")));
  const Term hybrid = app(lam("x", app(var("y"), var("x"))), app(lam("x", var("x")), var("y")));
  return {
      {Strategy::bn, under_lambda, under_lambda},
      {Strategy::nor, under_lambda, lam("x", var("z"))},
      {Strategy::bv, in_argument, app(var("x"), var("y"))},
      {Strategy::bn, in_argument, in_argument},
      {Strategy::ha, hybrid, app(var("y"), var("y"))},
  };
}

}  // namespace samples
