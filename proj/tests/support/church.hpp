// Church numerals and arithmetic on them.
#pragma once

#include <string>
#include <vector>

#include "gt/lambda.hpp"

namespace church {

using gt::lambda::app;
using gt::lambda::lam;
using gt::lambda::Term;
using gt::lambda::var;

inline Term numeral(int n) {
  Term body = var("x");
  for (int i = 0; i < n; ++i) body = app(var("f"), body);
  return lam("f", lam("x", body));
}

inline Term plus() {
  return lam("m", lam("n", lam("f", lam("x", app(app(var("m"), var("f")), app(app(var("n"), var("f")), var("x")))))));
}

inline Term times() { return lam("m", lam("n", lam("f", app(var("m"), app(var("n"), var("f")))))); }

struct Case {
  std::string name;
  Term term;
  int value;
};

/// add and mul over 0..3, with the numeral each should normalize to.
inline std::vector<Case> corpus() {
  std::vector<Case> out;
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      out.push_back({std::to_string(m) + "+" + std::to_string(n), app(app(plus(), numeral(m)), numeral(n)), m + n});
      out.push_back({std::to_string(m) + "*" + std::to_string(n), app(app(times(), numeral(m)), numeral(n)), m * n});
    }
  return out;
}

}  // namespace church
