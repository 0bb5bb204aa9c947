#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "biprod/monoidal.hpp"

namespace biprod {

// A concrete category with its full witness bundle and a bounded object
// universe over which the verification suites run. Derived objects (apexes,
// tensors) may fall outside the universe and are still valid objects.
class Instance : public TensoredCategory {
 public:
  virtual std::vector<Obj> universe() const = 0;
  virtual bool is_object(const Obj& a) const = 0;

  // A random morphism a -> b, or nullopt when hom(a, b) is empty.
  virtual std::optional<Mor> random_morphism(const Obj& a, const Obj& b,
                                             std::mt19937_64& rng) const = 0;

  // The instance's own addition of parallel morphisms, when it has one
  // (entrywise addition of matrices).
  virtual std::optional<Mor> native_sum(const Mor& f, const Mor& g) const;
};

using InstancePtr = std::shared_ptr<const Instance>;

enum class SemiringKind { Naturals, Booleans, Rationals };

// Sets 0..max_size and relations between them, as boolean matrices. Product
// and coproduct are both the disjoint union; the tensor is the cartesian
// product.
InstancePtr finrel(std::size_t max_size);

// Dimensions 0..max_dim and matrices over the semiring; (co)product is the
// dimension sum with block projections/injections, tensor the Kronecker
// product.
InstancePtr mat_semiring(SemiringKind semiring, std::size_t max_dim);

// Integers in [lo, hi] under <=: product is min, coproduct is max, tensor is
// addition. No terminal or initial object is declared.
InstancePtr z_chain(std::int64_t lo, std::int64_t hi);

// Componentwise structure; nullary witnesses present iff present in both.
InstancePtr product_instance(InstancePtr left, InstancePtr right);

// Selectors: finrel, mat-nat, mat-bool, mat-rat, z-chain, product:<a>+<b>.
// `bound` is the size/dimension bound; z-chain uses [-bound, bound].
Result<InstancePtr> make_instance(std::string_view selector, std::size_t bound);

}  // namespace biprod
