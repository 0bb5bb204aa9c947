#include "biprod/monoidal.hpp"

namespace biprod {

namespace {

std::string triple(const Obj& a, const Obj& b, const Obj& c) {
  return "(" + describe(a) + ", " + describe(b) + ", " + describe(c) + ")";
}

}  // namespace

Result<InversePair> right_unit(const TensoredCategory& cat, const Obj& a) {
  const Obj ai = cat.tensor_objects(a, cat.unit());
  const Mor fwd = cat.right_unitor(a);
  const Mor bwd = cat.right_unitor_inverse(a);
  if (fwd.dom() != ai || fwd.cod() != a)
    return Error{ErrorKind::WitnessInvalid, "right unitor at " + describe(a) + " is mistyped"};
  return certify_inverse_pair(cat, fwd, bwd, "right unit at " + describe(a));
}

Result<InversePair> dist_prod(const TensoredCategory& cat, const Obj& a, const Obj& b,
                              const Obj& c) {
  return capture([&] {
    const ProductWitness bc = cat.product(b, c);
    const ProductWitness target =
        cat.product(cat.tensor_objects(a, b), cat.tensor_objects(a, c));
    const Mor id_a = cat.identity(a);
    const Mor fwd = pair(cat, target, cat.tensor(id_a, bc.pi1), cat.tensor(id_a, bc.pi2)).value();
    const Mor bwd = cat.product_distributor_inverse(a, b, c);
    return certify_inverse_pair(cat, fwd, bwd, "product distributor " + triple(a, b, c)).value();
  });
}

Result<InversePair> dist_coprod(const TensoredCategory& cat, const Obj& a, const Obj& b,
                                const Obj& c) {
  return capture([&] {
    const CoproductWitness ab = cat.coproduct(a, b);
    const CoproductWitness source =
        cat.coproduct(cat.tensor_objects(a, c), cat.tensor_objects(b, c));
    const Mor id_c = cat.identity(c);
    const Mor fwd =
        copair(cat, source, cat.tensor(ab.in1, id_c), cat.tensor(ab.in2, id_c)).value();
    const Mor bwd = cat.coproduct_distributor_inverse(a, b, c);
    return certify_inverse_pair(cat, fwd, bwd, "coproduct distributor " + triple(a, b, c)).value();
  });
}

Result<NullaryDistributors> nullary_distributors(const TensoredCategory& cat, const Obj& a) {
  const auto one = cat.terminal();
  const auto zero = cat.initial();
  if (!one || !zero)
    return Error{ErrorKind::NoNullaryStructure,
                 cat.name() + " declares no " + (one ? "initial" : "terminal") + " object"};
  const auto to_one_inv = cat.terminal_distributor_inverse(a);
  const auto from_zero_inv = cat.initial_distributor_inverse(a);
  if (!to_one_inv || !from_zero_inv)
    return Error{ErrorKind::NoNullaryStructure,
                 cat.name() + " supplies no nullary distributor at " + describe(a)};
  return capture([&] {
    const Mor to_one = one->bang(cat.tensor_objects(a, one->obj));
    const Mor from_zero = zero->cobang(cat.tensor_objects(zero->obj, a));
    return NullaryDistributors{
        certify_inverse_pair(cat, to_one, *to_one_inv,
                             "A (x) 1 -> 1 at " + describe(a)).value(),
        certify_inverse_pair(cat, from_zero, *from_zero_inv,
                             "0 -> 0 (x) A at " + describe(a)).value()};
  });
}

Result<CheckResult> verify_tensor_functoriality(const TensoredCategory& cat, const Mor& f,
                                                const Mor& g, const Mor& h, const Mor& k) {
  return capture([&] {
    CheckResult out{"tensor functoriality", {}};
    const Mor lhs = cat.compose(cat.tensor(f, g), cat.tensor(h, k)).value();
    const Mor rhs = cat.tensor(cat.compose(f, h).value(), cat.compose(g, k).value());
    out.expect_equal("(f(x)g) o (h(x)k) = (f o h)(x)(g o k)", lhs, rhs);
    const Obj& a = h.dom();
    const Obj& b = k.dom();
    out.expect_equal("id (x) id = id", cat.tensor(cat.identity(a), cat.identity(b)),
                     cat.identity(cat.tensor_objects(a, b)));
    return out;
  });
}

Result<CheckResult> verify_right_unit_naturality(const TensoredCategory& cat, const Mor& f) {
  return capture([&] {
    CheckResult out{"right unit naturality", {}};
    const InversePair rho_a = right_unit(cat, f.dom()).value();
    const InversePair rho_b = right_unit(cat, f.cod()).value();
    const Mor lhs =
        cat.compose(rho_b.fwd(), cat.tensor(f, cat.identity(cat.unit()))).value();
    const Mor rhs = cat.compose(f, rho_a.fwd()).value();
    out.expect_equal("rho o (f (x) I) = f o rho", lhs, rhs);
    return out;
  });
}

}  // namespace biprod
