#include <algorithm>
#include <stdexcept>

#include "biprod/instances.hpp"

namespace biprod {

namespace {

// A linearly ordered abelian group (here the integers) viewed as a thin
// category: one arrow x -> y exactly when x <= y. Finite non-empty products and
// coproducts exist (min and max) but there is no zero object, so the
// construction stops at the nullary stage.
class ZChain final : public Instance {
 public:
  ZChain(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
    if (lo > hi) throw std::invalid_argument("z-chain bounds out of order");
  }

  std::string name() const override { return "z-chain"; }

  std::vector<Obj> universe() const override {
    std::vector<Obj> out;
    for (std::int64_t x = lo_; x <= hi_; ++x) out.emplace_back(x);
    return out;
  }

  bool is_object(const Obj& a) const override { return a.arity() == 1; }

  std::optional<std::vector<Mor>> enumerate_hom(const Obj& a, const Obj& b,
                                                std::size_t) const override {
    std::vector<Mor> out;
    if (a.value() <= b.value()) out.push_back(arrow(a.value(), b.value()));
    return out;
  }

  std::optional<Mor> random_morphism(const Obj& a, const Obj& b,
                                     std::mt19937_64&) const override {
    if (a.value() > b.value()) return std::nullopt;
    return arrow(a.value(), b.value());
  }

  ProductWitness product(const Obj& a, const Obj& b) const override {
    const std::int64_t m = std::min(a.value(), b.value());
    return ProductWitness{a, b, Obj(m), arrow(m, a.value()), arrow(m, b.value()),
                          [m](const Mor& f, const Mor&) { return arrow(f.dom().value(), m); }};
  }

  CoproductWitness coproduct(const Obj& a, const Obj& b) const override {
    const std::int64_t m = std::max(a.value(), b.value());
    return CoproductWitness{a, b, Obj(m), arrow(a.value(), m), arrow(b.value(), m),
                            [m](const Mor& f, const Mor&) { return arrow(m, f.cod().value()); }};
  }

  // The truncation's endpoints are not terminal/initial in the full chain, so
  // none are declared.
  std::optional<TerminalWitness> terminal() const override { return std::nullopt; }
  std::optional<InitialWitness> initial() const override { return std::nullopt; }

  Obj tensor_objects(const Obj& a, const Obj& b) const override {
    return Obj(a.value() + b.value());
  }
  Obj unit() const override { return Obj(0); }

  Mor right_unitor(const Obj& a) const override { return identity(a); }
  Mor right_unitor_inverse(const Obj& a) const override { return identity(a); }

  // min(A+B, A+C) -> A+min(B, C); both sides are the same integer.
  Mor product_distributor_inverse(const Obj& a, const Obj& b, const Obj& c) const override {
    const std::int64_t x = a.value(), y = b.value(), z = c.value();
    return arrow(std::min(x + y, x + z), x + std::min(y, z));
  }

  // max(A, B)+C -> max(A+C, B+C).
  Mor coproduct_distributor_inverse(const Obj& a, const Obj& b, const Obj& c) const override {
    const std::int64_t x = a.value(), y = b.value(), z = c.value();
    return arrow(std::max(x, y) + z, std::max(x + z, y + z));
  }

  std::optional<Mor> terminal_distributor_inverse(const Obj&) const override {
    return std::nullopt;
  }
  std::optional<Mor> initial_distributor_inverse(const Obj&) const override {
    return std::nullopt;
  }

 protected:
  Mor compose_unchecked(const Mor& g, const Mor& f) const override {
    return arrow(f.dom().value(), g.cod().value());
  }

  Mor make_identity(const Obj& a) const override { return arrow(a.value(), a.value()); }

  Mor tensor_morphisms(const Mor& f, const Mor& g) const override {
    return arrow(f.dom().value() + g.dom().value(), f.cod().value() + g.cod().value());
  }

 private:
  static Mor arrow(std::int64_t from, std::int64_t to) {
    if (from > to)
      throw std::logic_error("no arrow " + std::to_string(from) + " -> " + std::to_string(to));
    return Mor(Obj(from), Obj(to), Arrow{});
  }

  std::int64_t lo_;
  std::int64_t hi_;
};

}  // namespace

InstancePtr z_chain(std::int64_t lo, std::int64_t hi) { return std::make_shared<ZChain>(lo, hi); }

}  // namespace biprod
