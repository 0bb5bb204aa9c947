#pragma once

#include <optional>

#include "biprod/structure.hpp"

namespace biprod {

// A binary functor (x) with a right unit, plus instance-supplied inverses of
// the canonical distribution maps. Associativity and a left unit are not part
// of the contract and are never used.
class TensoredCategory : public BicartesianCategory {
 public:
  virtual Obj tensor_objects(const Obj& a, const Obj& b) const = 0;
  virtual Obj unit() const = 0;

  // A (x) I -> A and its inverse.
  virtual Mor right_unitor(const Obj& a) const = 0;
  virtual Mor right_unitor_inverse(const Obj& a) const = 0;

  // Supplied inverse of <A(x)pi1, A(x)pi2>: A(x)(B x C) -> (A(x)B) x (A(x)C).
  virtual Mor product_distributor_inverse(const Obj& a, const Obj& b, const Obj& c) const = 0;
  // Supplied inverse of [i1(x)C, i2(x)C]: (A(x)C) + (B(x)C) -> (A+B)(x)C.
  virtual Mor coproduct_distributor_inverse(const Obj& a, const Obj& b, const Obj& c) const = 0;

  // 1 -> A (x) 1, inverting the unique A (x) 1 -> 1.
  virtual std::optional<Mor> terminal_distributor_inverse(const Obj& a) const = 0;
  // 0 (x) A -> 0, inverting the unique 0 -> 0 (x) A.
  virtual std::optional<Mor> initial_distributor_inverse(const Obj& a) const = 0;

  Mor tensor(const Mor& f, const Mor& g) const { return tensor_morphisms(f, g); }

 protected:
  virtual Mor tensor_morphisms(const Mor& f, const Mor& g) const = 0;
};

inline Mor tensor(const TensoredCategory& cat, const Mor& f, const Mor& g) {
  return cat.tensor(f, g);
}

// Certified A (x) I ~= A.
Result<InversePair> right_unit(const TensoredCategory& cat, const Obj& a);

// fwd = <A(x)pi1, A(x)pi2>, bwd = the supplied inverse; WitnessInvalid if the
// pair does not certify.
Result<InversePair> dist_prod(const TensoredCategory& cat, const Obj& a, const Obj& b,
                              const Obj& c);
// fwd = [i1(x)C, i2(x)C], bwd = the supplied inverse.
Result<InversePair> dist_coprod(const TensoredCategory& cat, const Obj& a, const Obj& b,
                                const Obj& c);

struct NullaryDistributors {
  InversePair terminal;  // A (x) 1 -> 1
  InversePair initial;   // 0 -> 0 (x) A
};

// NoNullaryStructure when the instance has no terminal/initial object or does
// not supply the nullary inverses.
Result<NullaryDistributors> nullary_distributors(const TensoredCategory& cat, const Obj& a);

// (f (x) g) o (h (x) k) = (f o h) (x) (g o k), and id (x) id = id.
Result<CheckResult> verify_tensor_functoriality(const TensoredCategory& cat, const Mor& f,
                                                const Mor& g, const Mor& h, const Mor& k);

// rho_B o (f (x) id_I) = f o rho_A for f: A -> B.
Result<CheckResult> verify_right_unit_naturality(const TensoredCategory& cat, const Mor& f);

}  // namespace biprod
