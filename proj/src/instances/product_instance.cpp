#include <stdexcept>

#include "biprod/instances.hpp"

namespace biprod {

namespace {

class ProductInstance final : public Instance {
 public:
  ProductInstance(InstancePtr left, InstancePtr right)
      : left_(std::move(left)), right_(std::move(right)), split_(left_->arity()) {
    if (!left_ || !right_) throw std::invalid_argument("product_instance needs two instances");
  }

  std::string name() const override { return "product:" + left_->name() + "+" + right_->name(); }
  std::size_t arity() const override { return left_->arity() + right_->arity(); }

  std::vector<Obj> universe() const override {
    std::vector<Obj> out;
    for (const Obj& l : left_->universe())
      for (const Obj& r : right_->universe()) out.push_back(concat(l, r));
    return out;
  }

  bool is_object(const Obj& a) const override {
    return a.arity() == arity() && left_->is_object(lo(a)) && right_->is_object(ro(a));
  }

  std::optional<std::vector<Mor>> enumerate_hom(const Obj& a, const Obj& b,
                                                std::size_t limit) const override {
    const auto ls = left_->enumerate_hom(lo(a), lo(b), limit);
    const auto rs = right_->enumerate_hom(ro(a), ro(b), limit);
    if (!ls || !rs || ls->size() * rs->size() > limit) return std::nullopt;
    std::vector<Mor> out;
    for (const Mor& l : *ls)
      for (const Mor& r : *rs) out.push_back(concat(l, r));
    return out;
  }

  std::optional<Mor> random_morphism(const Obj& a, const Obj& b,
                                     std::mt19937_64& rng) const override {
    auto l = left_->random_morphism(lo(a), lo(b), rng);
    auto r = right_->random_morphism(ro(a), ro(b), rng);
    if (!l || !r) return std::nullopt;
    return concat(*l, *r);
  }

  std::optional<Mor> native_sum(const Mor& f, const Mor& g) const override {
    auto l = left_->native_sum(lm(f), lm(g));
    auto r = right_->native_sum(rm(f), rm(g));
    if (!l || !r) return std::nullopt;
    return concat(*l, *r);
  }

  ProductWitness product(const Obj& a, const Obj& b) const override {
    ProductWitness l = left_->product(lo(a), lo(b));
    ProductWitness r = right_->product(ro(a), ro(b));
    const std::size_t split = split_;
    Mediator mediate = [l = l.mediate, r = r.mediate, split](const Mor& f, const Mor& g) {
      return concat(l(head(f, split), head(g, split)), r(tail(f, split), tail(g, split)));
    };
    return ProductWitness{a, b, concat(l.apex, r.apex), concat(l.pi1, r.pi1),
                          concat(l.pi2, r.pi2), std::move(mediate)};
  }

  CoproductWitness coproduct(const Obj& a, const Obj& b) const override {
    CoproductWitness l = left_->coproduct(lo(a), lo(b));
    CoproductWitness r = right_->coproduct(ro(a), ro(b));
    const std::size_t split = split_;
    Mediator mediate = [l = l.mediate, r = r.mediate, split](const Mor& f, const Mor& g) {
      return concat(l(head(f, split), head(g, split)), r(tail(f, split), tail(g, split)));
    };
    return CoproductWitness{a, b, concat(l.apex, r.apex), concat(l.in1, r.in1),
                            concat(l.in2, r.in2), std::move(mediate)};
  }

  std::optional<TerminalWitness> terminal() const override {
    auto l = left_->terminal();
    auto r = right_->terminal();
    if (!l || !r) return std::nullopt;
    const std::size_t split = split_;
    const std::size_t total = arity();
    return TerminalWitness{concat(l->obj, r->obj),
                           [l = l->bang, r = r->bang, split, total](const Obj& x) {
                             return concat(l(x.slice(0, split)), r(x.slice(split, total - split)));
                           }};
  }

  std::optional<InitialWitness> initial() const override {
    auto l = left_->initial();
    auto r = right_->initial();
    if (!l || !r) return std::nullopt;
    const std::size_t split = split_;
    const std::size_t total = arity();
    return InitialWitness{concat(l->obj, r->obj),
                          [l = l->cobang, r = r->cobang, split, total](const Obj& x) {
                            return concat(l(x.slice(0, split)), r(x.slice(split, total - split)));
                          }};
  }

  Obj tensor_objects(const Obj& a, const Obj& b) const override {
    return concat(left_->tensor_objects(lo(a), lo(b)), right_->tensor_objects(ro(a), ro(b)));
  }
  Obj unit() const override { return concat(left_->unit(), right_->unit()); }

  Mor right_unitor(const Obj& a) const override {
    return concat(left_->right_unitor(lo(a)), right_->right_unitor(ro(a)));
  }
  Mor right_unitor_inverse(const Obj& a) const override {
    return concat(left_->right_unitor_inverse(lo(a)), right_->right_unitor_inverse(ro(a)));
  }

  Mor product_distributor_inverse(const Obj& a, const Obj& b, const Obj& c) const override {
    return concat(left_->product_distributor_inverse(lo(a), lo(b), lo(c)),
                  right_->product_distributor_inverse(ro(a), ro(b), ro(c)));
  }
  Mor coproduct_distributor_inverse(const Obj& a, const Obj& b, const Obj& c) const override {
    return concat(left_->coproduct_distributor_inverse(lo(a), lo(b), lo(c)),
                  right_->coproduct_distributor_inverse(ro(a), ro(b), ro(c)));
  }

  std::optional<Mor> terminal_distributor_inverse(const Obj& a) const override {
    auto l = left_->terminal_distributor_inverse(lo(a));
    auto r = right_->terminal_distributor_inverse(ro(a));
    if (!l || !r) return std::nullopt;
    return concat(*l, *r);
  }
  std::optional<Mor> initial_distributor_inverse(const Obj& a) const override {
    auto l = left_->initial_distributor_inverse(lo(a));
    auto r = right_->initial_distributor_inverse(ro(a));
    if (!l || !r) return std::nullopt;
    return concat(*l, *r);
  }

 protected:
  Mor compose_unchecked(const Mor& g, const Mor& f) const override {
    return concat(left_->compose(lm(g), lm(f)).value(), right_->compose(rm(g), rm(f)).value());
  }

  Mor make_identity(const Obj& a) const override {
    return concat(left_->identity(lo(a)), right_->identity(ro(a)));
  }

  Mor tensor_morphisms(const Mor& f, const Mor& g) const override {
    return concat(left_->tensor(lm(f), lm(g)), right_->tensor(rm(f), rm(g)));
  }

 private:
  static Mor head(const Mor& f, std::size_t split) { return f.slice(0, split); }
  static Mor tail(const Mor& f, std::size_t split) {
    return f.slice(split, f.parts().size() - split);
  }

  Obj lo(const Obj& a) const { return a.slice(0, split_); }
  Obj ro(const Obj& a) const { return a.slice(split_, a.arity() - split_); }
  Mor lm(const Mor& f) const { return head(f, split_); }
  Mor rm(const Mor& f) const { return tail(f, split_); }

  InstancePtr left_;
  InstancePtr right_;
  std::size_t split_;
};

}  // namespace

InstancePtr product_instance(InstancePtr left, InstancePtr right) {
  return std::make_shared<ProductInstance>(std::move(left), std::move(right));
}

}  // namespace biprod
