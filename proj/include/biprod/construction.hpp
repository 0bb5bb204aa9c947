#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>

#include "biprod/monoidal.hpp"

namespace biprod {

// 0 (x) 1 exhibited as both terminal and initial, and the resulting 1 -> 0.
struct ZeroWitness {
  Obj obj;                   // 0 (x) 1
  InversePair to_terminal;   // 0 (x) 1 ~= 1
  InversePair from_initial;  // 0 ~= 0 (x) 1
  Mor one_to_zero;           // 1 -> 0 (x) 1 -> 0
  CheckResult certificate;
};

Result<ZeroWitness> zero_object(const TensoredCategory& cat);

// A -> 1 -> 0 -> B.
Result<Mor> zero_map(const TensoredCategory& cat, const Obj& a, const Obj& b);
Mor zero_map(const TensoredCategory& cat, const ZeroWitness& zero, const Obj& a, const Obj& b);

// Source of zero maps used by the constructions that need them; defaults to
// zero_map. Tests substitute faulty sources as negative controls.
using ZeroMaps = std::function<Result<Mor>(const Obj&, const Obj&)>;
ZeroMaps default_zero_maps(const TensoredCategory& cat);

// The canonical map
//   ((A1(x)B1) x (A1(x)B2)) + ((A2(x)B1) x (A2(x)B2))
//     -> ((A1(x)B1) + (A2(x)B1)) x ((A1(x)B2) + (A2(x)B2))
// whose component from summand j to factor k is i_j o pi_k. Also checked
// against [i1 x i1, i2 x i2] and <pi1 + pi1, pi2 + pi2>.
Result<Mor> interchange_map(const TensoredCategory& cat, const Obj& a1, const Obj& a2,
                            const Obj& b1, const Obj& b2);

// The same map built only from distributors and their inverses:
//   (dist_coprod^-1 x dist_coprod^-1) o dist_prod(A1+A2) o dist_coprod(B1 x B2)
//     o (dist_prod^-1 + dist_prod^-1).
// Certified invertible.
Result<InversePair> distributor_interchange(const TensoredCategory& cat, const Obj& a1,
                                            const Obj& a2, const Obj& b1, const Obj& b2);

// pi_k o y o i_j = i_j o pi_k for j, k in {1, 2}, and y equals the
// interchange map.
Result<CheckResult> verify_interchange_factorization(const TensoredCategory& cat, const Obj& a1,
                                                     const Obj& a2, const Obj& b1,
                                                     const Obj& b2);

// (A x A) + (B x B) -> (A + B) x (A + B), components i_j o pi_k.
Result<Mor> square_interchange(const TensoredCategory& cat, const Obj& a, const Obj& b);

// The square interchange together with an inverse obtained by conjugating the
// distributor interchange at (A, B, I, I) with right unitors. No matrix
// inversion is involved.
Result<InversePair> square_interchange_inverse(const TensoredCategory& cat, const Obj& a,
                                               const Obj& b);

struct InterchangeIdempotents {
  Mor on_sum;      // (<A,0> + <0,B>) o (pi1 + pi2), splits on A + B
  Mor on_product;  // (i1 x i2) o ([A,0] x [0,B]), splits on A x B
};

Result<InterchangeIdempotents> split_idempotents(const TensoredCategory& cat, const Obj& a,
                                                 const Obj& b, const ZeroMaps& zeros = {});

// The square interchange carries one idempotent to the other:
// t o e = e' o t, and both sides have components (i1 o pi1, 0, 0, i2 o pi2).
Result<CheckResult> verify_idempotent_map(const TensoredCategory& cat, const Obj& a,
                                          const Obj& b, const ZeroMaps& zeros = {});

// A + B -> A x B as ([A,0] x [0,B]) o t o (<A,0> + <0,B>), with inverse
// (pi1 + pi2) o t^-1 o (i1 x i2).
Result<InversePair> comparison_iso(const TensoredCategory& cat, const Obj& a, const Obj& b);

// The map A + B -> A x B with components (id, 0, 0, id).
Result<Mor> canonical_mixed_map(const TensoredCategory& cat, const Obj& a, const Obj& b);

struct BiproductWitness {
  Obj a;
  Obj b;
  Obj apex;
  Mor in1;
  Mor in2;
  Mor pr1;
  Mor pr2;
  InversePair mixed_iso;  // A + B ~= A x B
  CheckResult certificate;
};

// CanonicalMismatch if the comparison iso is not the canonical mixed map.
Result<BiproductWitness> biproduct(const TensoredCategory& cat, const Obj& a, const Obj& b);

// f + g = [f, g] o c_{A,A}^-1 o <id, id> for f, g: A -> B.
Result<Mor> hom_add(const TensoredCategory& cat, const Mor& f, const Mor& g);

// hom_add with the zero object and the per-object duplication maps
// A -> A + A memoised. Not thread-safe; use one per thread.
class HomAddition {
 public:
  explicit HomAddition(const TensoredCategory& cat) : cat_(cat) {}

  Result<Mor> add(const Mor& f, const Mor& g);
  Result<Mor> zero(const Obj& a, const Obj& b);

 private:
  Result<Mor> duplicate(const Obj& a);

  const TensoredCategory& cat_;
  std::optional<Result<ZeroWitness>> zero_;
  std::map<Obj, Result<Mor>> duplicates_;
};

// Commutative-monoid laws and two-sided bilinearity of composition over every
// applicable tuple drawn from `sample`.
Result<CheckResult> verify_semiadditive(const TensoredCategory& cat, std::span<const Mor> sample);

// t_{A',B'} o ((f x f) + (g x g)) = ((f + g) x (f + g)) o t_{A,B}.
Result<CheckResult> verify_interchange_naturality(const TensoredCategory& cat, const Mor& f,
                                                  const Mor& g);

}  // namespace biprod
