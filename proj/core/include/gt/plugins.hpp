// Built-in plugins: show, foldl and map.
#pragma once

#include <map>
#include <string>

#include "gt/codegen.hpp"

namespace gt::plugins {

/// Renders every value as `Ctor (arg, ..., arg)`; nullary constructors as
/// just `Ctor`. Inh is gt::unit, Syn and every parameter's Syn are strings.
codegen::Plugin show();

/// Threads an accumulator `acc_` through every augmentable argument, left
/// to right, and returns it. Raw arguments are skipped.
codegen::Plugin foldl();

/// Rebuilds the value with each parameter `a` mapped to `ta_`.
codegen::Plugin map();

/// Primitive renderers known to `show`: external type name -> function.
const std::map<std::string, std::string, std::less<>>& show_renderers();

}  // namespace gt::plugins
