#pragma once

#include <functional>
#include <optional>
#include <span>

#include "biprod/kernel.hpp"

namespace biprod {

using Mediator = std::function<Mor(const Mor&, const Mor&)>;

// A chosen product cone (pi1: apex -> left, pi2: apex -> right). `mediate`
// builds <f, g> and is checked against the cone after every call.
struct ProductWitness {
  Obj left;
  Obj right;
  Obj apex;
  Mor pi1;
  Mor pi2;
  Mediator mediate;
};

// A chosen coproduct cocone (in1: left -> apex, in2: right -> apex).
struct CoproductWitness {
  Obj left;
  Obj right;
  Obj apex;
  Mor in1;
  Mor in2;
  Mediator mediate;
};

struct TerminalWitness {
  Obj obj;
  std::function<Mor(const Obj&)> bang;  // X -> obj
};

struct InitialWitness {
  Obj obj;
  std::function<Mor(const Obj&)> cobang;  // obj -> X
};

// The four components f_jk = pi_j o f o i_k of a map f: A + B -> C x D.
struct Mat2 {
  Mor f11;  // A -> C
  Mor f12;  // B -> C
  Mor f21;  // A -> D
  Mor f22;  // B -> D

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// A category with chosen binary (co)products and optional chosen terminal and
// initial objects. The library never searches for (co)limits.
class BicartesianCategory : public Category {
 public:
  virtual ProductWitness product(const Obj& a, const Obj& b) const = 0;
  virtual CoproductWitness coproduct(const Obj& a, const Obj& b) const = 0;
  virtual std::optional<TerminalWitness> terminal() const = 0;
  virtual std::optional<InitialWitness> initial() const = 0;
};

Result<Mor> pair(const Category& cat, const ProductWitness& p, const Mor& f, const Mor& g);
Result<Mor> copair(const Category& cat, const CoproductWitness& c, const Mor& f, const Mor& g);

// Pairing into the chosen product of the codomains, copairing out of the chosen
// coproduct of the domains.
Result<Mor> pair(const BicartesianCategory& cat, const Mor& f, const Mor& g);
Result<Mor> copair(const BicartesianCategory& cat, const Mor& f, const Mor& g);

// f x g = <f o pi1, g o pi2>
Result<Mor> times_map(const BicartesianCategory& cat, const Mor& f, const Mor& g);
// f + g = [i1 o f, i2 o g]
Result<Mor> plus_map(const BicartesianCategory& cat, const Mor& f, const Mor& g);

Result<Mat2> matrix_of(const Category& cat, const Mor& f, const CoproductWitness& c,
                       const ProductWitness& p);

// Rebuilds f: A + B -> C x D from its components. Both [<f11,f21>, <f12,f22>]
// and <[f11,f12], [f21,f22]> are computed; InternalAgreementFailure if they
// differ.
Result<Mor> from_matrix(const BicartesianCategory& cat, const Mat2& m);

// Universal property of the chosen product of (a, b) against every probe
// object X whose homsets the instance can enumerate within `hom_limit`:
// every pair of legs factors, and every h: X -> apex equals <pi1 h, pi2 h>.
Result<CheckResult> verify_product(const BicartesianCategory& cat, const Obj& a, const Obj& b,
                                   std::span<const Obj> probes, std::size_t hom_limit);
Result<CheckResult> verify_coproduct(const BicartesianCategory& cat, const Obj& a, const Obj& b,
                                     std::span<const Obj> probes, std::size_t hom_limit);

// Every enumerable morphism X -> 1 equals bang(X); dually for 0.
Result<CheckResult> verify_terminal(const BicartesianCategory& cat, std::span<const Obj> probes,
                                    std::size_t hom_limit);
Result<CheckResult> verify_initial(const BicartesianCategory& cat, std::span<const Obj> probes,
                                   std::size_t hom_limit);

}  // namespace biprod
