#pragma once

// Shared helpers: literal morphism builders, hand-rolled random generators, and
// a forwarding Instance that lets tests corrupt individual witnesses.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "biprod/instances.hpp"
#include "oracles.hpp"

namespace testing_support {

using biprod::BoolMatrix;
using biprod::Mor;
using biprod::NatMatrix;
using biprod::Obj;
using biprod::RatMatrix;

inline Obj obj(std::int64_t n) { return Obj(n); }

inline Mor nat(std::size_t dom, std::size_t cod, const oracle::Grid& g) {
  return Mor(Obj(static_cast<std::int64_t>(dom)), Obj(static_cast<std::int64_t>(cod)),
             oracle::to_matrix<biprod::NaturalSemiring>(g, dom));
}

inline Mor boolean(std::size_t dom, std::size_t cod, const oracle::Grid& g) {
  return Mor(Obj(static_cast<std::int64_t>(dom)), Obj(static_cast<std::int64_t>(cod)),
             oracle::to_matrix<biprod::BooleanSemiring>(g, dom));
}

inline Mor rational(std::size_t dom, std::size_t cod, const oracle::QGrid& g) {
  return Mor(Obj(static_cast<std::int64_t>(dom)), Obj(static_cast<std::int64_t>(cod)),
             oracle::to_rat(g, dom));
}

// Library matrix back into a plain grid, so oracles can consume it.
template <class M>
oracle::Grid grid_of(const M& m) {
  oracle::Grid g = oracle::zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<M, BoolMatrix>) {
        g[i][j] = m.get(i, j) ? 1 : 0;
      } else {
        g[i][j] = m.get(i, j).get_si();
      }
    }
  return g;
}

inline oracle::Grid random_grid(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                long long max_entry) {
  std::uniform_int_distribution<long long> d(0, max_entry);
  oracle::Grid g = oracle::zeros(rows, cols);
  for (auto& row : g)
    for (auto& x : row) x = d(rng);
  return g;
}

inline oracle::QGrid random_qgrid(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  oracle::QGrid g(rows, std::vector<mpq_class>(cols, 0));
  for (auto& row : g)
    for (auto& x : row) {
      x = mpq_class(num(rng), den(rng));
      x.canonicalize();
    }
  return g;
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Delegates everything to `inner`; individual hooks can be overridden with
// the std::function members.
class ForwardingInstance : public biprod::Instance {
 public:
  explicit ForwardingInstance(biprod::InstancePtr inner) : inner_(std::move(inner)) {}

  std::function<Mor(const Obj&, const Obj&, const Obj&)> product_distributor_override;
  std::function<Mor(const Obj&, const Obj&, const Obj&)> coproduct_distributor_override;
  std::function<Mor(const Obj&)> right_unitor_inverse_override;

  std::string name() const override { return "forwarding:" + inner_->name(); }
  std::size_t arity() const override { return inner_->arity(); }
  std::optional<std::vector<Mor>> enumerate_hom(const Obj& a, const Obj& b,
                                                std::size_t limit) const override {
    return inner_->enumerate_hom(a, b, limit);
  }

  biprod::ProductWitness product(const Obj& a, const Obj& b) const override {
    return inner_->product(a, b);
  }
  biprod::CoproductWitness coproduct(const Obj& a, const Obj& b) const override {
    return inner_->coproduct(a, b);
  }
  std::optional<biprod::TerminalWitness> terminal() const override { return inner_->terminal(); }
  std::optional<biprod::InitialWitness> initial() const override { return inner_->initial(); }

  Obj tensor_objects(const Obj& a, const Obj& b) const override {
    return inner_->tensor_objects(a, b);
  }
  Obj unit() const override { return inner_->unit(); }
  Mor right_unitor(const Obj& a) const override { return inner_->right_unitor(a); }
  Mor right_unitor_inverse(const Obj& a) const override {
    if (right_unitor_inverse_override) return right_unitor_inverse_override(a);
    return inner_->right_unitor_inverse(a);
  }
  Mor product_distributor_inverse(const Obj& a, const Obj& b, const Obj& c) const override {
    if (product_distributor_override) return product_distributor_override(a, b, c);
    return inner_->product_distributor_inverse(a, b, c);
  }
  Mor coproduct_distributor_inverse(const Obj& a, const Obj& b, const Obj& c) const override {
    if (coproduct_distributor_override) return coproduct_distributor_override(a, b, c);
    return inner_->coproduct_distributor_inverse(a, b, c);
  }
  std::optional<Mor> terminal_distributor_inverse(const Obj& a) const override {
    return inner_->terminal_distributor_inverse(a);
  }
  std::optional<Mor> initial_distributor_inverse(const Obj& a) const override {
    return inner_->initial_distributor_inverse(a);
  }

  std::vector<Obj> universe() const override { return inner_->universe(); }
  bool is_object(const Obj& a) const override { return inner_->is_object(a); }
  std::optional<Mor> random_morphism(const Obj& a, const Obj& b,
                                     std::mt19937_64& rng) const override {
    return inner_->random_morphism(a, b, rng);
  }
  std::optional<Mor> native_sum(const Mor& f, const Mor& g) const override {
    return inner_->native_sum(f, g);
  }

  const biprod::Instance& inner() const { return *inner_; }

 protected:
  Mor compose_unchecked(const Mor& g, const Mor& f) const override {
    return inner_->compose(g, f).value();
  }
  Mor make_identity(const Obj& a) const override { return inner_->identity(a); }
  Mor tensor_morphisms(const Mor& f, const Mor& g) const override {
    return inner_->tensor(f, g);
  }

 private:
  biprod::InstancePtr inner_;
};

}  // namespace testing_support
