// Runtime support shared by generated traversals and transformation objects.
//
// A transformation over an algebraic type is split in two halves: a
// generated, type-specific traversal function (`<type>_gcata`) that
// pattern-matches a value, and a transformation object (`Transformer`) that
// holds one late-bound handler per constructor. The traversal hands every
// handler the inherited attribute plus *augmented* versions of the matched
// value and of its sub-values (see `Aug`).
#pragma once

#include <any>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace gt {

/// Inherited attribute for transformations that need none.
using unit = std::monostate;

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

/// Immutable shared box with value semantics; used for recursive
/// constructor arguments so generated types stay regular values.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  const T& get() const { return *ptr_; }

  friend bool operator==(const Box& a, const Box& b) {
    return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_;
  }

 private:
  std::shared_ptr<const T> ptr_;
};

/// Augmented value: `x` packaged with the transformation `f` for its type,
/// the closed-over partial application `fx = f(., x)`, and the bundle `tp`
/// of transformations for the host type's parameters.
template <class Inh, class Val, class Syn, class Params>
struct Aug {
  Val x;
  std::function<Syn(const Inh&, const Val&)> f;
  std::function<Syn(const Inh&)> fx;
  Params tp;
};

template <class Inh, class Val, class Syn, class Params>
Aug<Inh, Val, Syn, Params> make_aug(
    Val value, std::function<Syn(const Inh&, const Val&)> f, Params tp) {
  std::function<Syn(const Inh&)> fx = [f, value](const Inh& i) {
    return f(i, value);
  };
  return Aug<Inh, Val, Syn, Params>{std::move(value), std::move(f),
                                    std::move(fx), std::move(tp)};
}

class UnknownHandler : public std::invalid_argument {
 public:
  explicit UnknownHandler(const std::string& name)
      : std::invalid_argument("unknown handler: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Raised when dispatch reaches a declared slot nobody has defined.
class AbstractMethod : public std::logic_error {
 public:
  explicit AbstractMethod(const std::string& name)
      : std::logic_error("abstract method called: " + name) {}
};

class SlotTypeMismatch : public std::logic_error {
 public:
  explicit SlotTypeMismatch(const std::string& name)
      : std::logic_error("handler has the wrong signature: " + name) {}
};

class Transformer;

/// A named handler definition, produced by `Slot::bind`.
struct Override {
  std::string name;
  std::any method;
};
using Overrides = std::vector<Override>;

template <class Sig>
struct Slot;

/// Typed key into a transformer's handler table. The first handler
/// argument is always the transformer the dispatch went through, which is
/// what makes calls like `self.call(head, ...)` late-bound.
template <class R, class... Params>
struct Slot<R(const Transformer&, Params...)> {
  using function_type = std::function<R(const Transformer&, Params...)>;

  std::string_view name;

  template <class F>
  Override bind(F&& f) const {
    return Override{std::string(name),
                    std::any(function_type(std::forward<F>(f)))};
  }
};

/// Late-bound handler table. Each `extend` pushes a layer; dispatch walks
/// the layers newest-first, so an override installed on top is seen by
/// every handler underneath that dispatches through the transformer it
/// was called with. Transformers hold behaviour only and are immutable.
class Transformer {
 public:
  struct Layer {
    std::string name;
    std::map<std::string, std::any, std::less<>> methods;
    std::shared_ptr<const Layer> parent;
  };

  /// An abstract transformer: declared slots, no handlers.
  static Transformer declare(std::string name, std::vector<std::string> slots);

  /// New transformer answering `overrides` from a fresh layer named
  /// `layer` and everything else from `*this`. Throws UnknownHandler if an
  /// override names an undeclared slot.
  Transformer extend(std::string layer, Overrides overrides) const;

  /// Like `extend`, but first declares `slots` (virtual methods introduced
  /// by a subclass).
  Transformer derive(std::string layer, std::vector<std::string> slots,
                     Overrides overrides) const;

  template <class R, class... Params, class... Args>
  R call(const Slot<R(const Transformer&, Params...)>& slot,
         Args&&... args) const {
    using Fn = typename Slot<R(const Transformer&, Params...)>::function_type;
    const std::any& any = lookup(slot.name);
    const Fn* fn = std::any_cast<Fn>(&any);
    if (fn == nullptr) throw SlotTypeMismatch(std::string(slot.name));
    return (*fn)(*this, std::forward<Args>(args)...);
  }

  bool declares(std::string_view slot) const;
  const std::set<std::string, std::less<>>& slots() const { return *slots_; }

  /// Layer names, newest first.
  std::vector<std::string> chain() const;
  /// Name of the layer that answers `slot`, if any layer defines it.
  std::optional<std::string> provider(std::string_view slot) const;
  /// Slots defined directly by the named layer.
  std::vector<std::string> layer_methods(std::string_view layer) const;

 private:
  Transformer(std::shared_ptr<const std::set<std::string, std::less<>>> slots,
              std::shared_ptr<const Layer> top)
      : slots_(std::move(slots)), top_(std::move(top)) {}

  const std::any& lookup(std::string_view name) const;

  std::shared_ptr<const std::set<std::string, std::less<>>> slots_;
  std::shared_ptr<const Layer> top_;
};

/// Sequential composition of partial handler tables (trait stacking);
/// later entries win.
inline Transformer extend_all(
    Transformer base,
    std::vector<std::pair<std::string, Overrides>> layers) {
  for (auto& [name, overrides] : layers)
    base = base.extend(std::move(name), std::move(overrides));
  return base;
}

// Primitive renderers used by generated `show` transformers.
inline std::string show_string(const std::string& s) { return s; }
std::string show_int(long long v);
inline std::string show_bool(bool b) { return b ? "true" : "false"; }

}  // namespace gt
