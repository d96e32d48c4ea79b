#include "gt/runtime.hpp"

namespace gt {

Transformer Transformer::declare(std::string name,
                                 std::vector<std::string> slots) {
  auto declared = std::make_shared<std::set<std::string, std::less<>>>(
      std::make_move_iterator(slots.begin()),
      std::make_move_iterator(slots.end()));
  auto layer = std::make_shared<Layer>();
  layer->name = std::move(name);
  return Transformer(std::move(declared), std::move(layer));
}

Transformer Transformer::extend(std::string layer, Overrides overrides) const {
  auto next = std::make_shared<Layer>();
  next->name = std::move(layer);
  next->parent = top_;
  for (auto& o : overrides) {
    if (!declares(o.name)) throw UnknownHandler(o.name);
    // Within one layer the last definition of a name wins.
    next->methods.insert_or_assign(std::move(o.name), std::move(o.method));
  }
  return Transformer(slots_, std::move(next));
}

Transformer Transformer::derive(std::string layer,
                                std::vector<std::string> slots,
                                Overrides overrides) const {
  auto declared = std::make_shared<std::set<std::string, std::less<>>>(*slots_);
  for (auto& s : slots) declared->insert(std::move(s));
  return Transformer(std::move(declared), top_)
      .extend(std::move(layer), std::move(overrides));
}

bool Transformer::declares(std::string_view slot) const {
  return slots_->find(slot) != slots_->end();
}

const std::any& Transformer::lookup(std::string_view name) const {
  for (const Layer* l = top_.get(); l != nullptr; l = l->parent.get()) {
    auto it = l->methods.find(name);
    if (it != l->methods.end()) return it->second;
  }
  throw AbstractMethod(std::string(name));
}

std::vector<std::string> Transformer::chain() const {
  std::vector<std::string> names;
  for (const Layer* l = top_.get(); l != nullptr; l = l->parent.get())
    names.push_back(l->name);
  return names;
}

std::optional<std::string> Transformer::provider(std::string_view slot) const {
  for (const Layer* l = top_.get(); l != nullptr; l = l->parent.get())
    if (l->methods.find(slot) != l->methods.end()) return l->name;
  return std::nullopt;
}

std::vector<std::string> Transformer::layer_methods(
    std::string_view layer) const {
  for (const Layer* l = top_.get(); l != nullptr; l = l->parent.get()) {
    if (l->name != layer) continue;
    std::vector<std::string> names;
    for (const auto& [name, _] : l->methods) names.push_back(name);
    return names;
  }
  return {};
}

std::string show_int(long long v) { return std::to_string(v); }

}  // namespace gt
