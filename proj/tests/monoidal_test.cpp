#include <gtest/gtest.h>

#include <random>

#include "biprod/instances.hpp"
#include "biprod/monoidal.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace biprod;
using namespace testing_support;

namespace {

const Instance& mat_nat() {
  static InstancePtr inst = mat_semiring(SemiringKind::Naturals, 3);
  return *inst;
}
const Instance& rel() {
  static InstancePtr inst = finrel(2);
  return *inst;
}
const Instance& chain() {
  static InstancePtr inst = z_chain(-5, 5);
  return *inst;
}

bool is_permutation(const oracle::Grid& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    long long row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += g[i][j];
      col += g[j][i];
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

}  // namespace

TEST(Tensor, KroneckerOfScalars) {
  const oracle::Grid expected = oracle::kron({{2}}, 1, {{3}}, 1);
  ASSERT_EQ(expected, (oracle::Grid{{6}}));
  EXPECT_EQ(tensor(mat_nat(), nat(1, 1, {{2}}), nat(1, 1, {{3}})), nat(1, 1, expected));
}

TEST(Tensor, KroneckerMatchesOracleOnRandomMatrices) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t a = pick(rng, 0, 3), b = pick(rng, 0, 3), c = pick(rng, 0, 3), d = pick(rng, 0, 3);
    const oracle::Grid f = random_grid(rng, b, a, 5), g = random_grid(rng, d, c, 5);
    EXPECT_EQ(tensor(mat_nat(), nat(a, b, f), nat(c, d, g)), nat(a * c, b * d, oracle::kron(f, a, g, c)));
  }
}

TEST(Tensor, ChainTensorIsAddition) {
  EXPECT_EQ(chain().tensor_objects(obj(3), obj(5)), obj(8));
  const Mor f(obj(1), obj(3), Arrow{});
  const Mor g(obj(2), obj(5), Arrow{});
  EXPECT_EQ(tensor(chain(), f, g), Mor(obj(3), obj(8), Arrow{}));
}

TEST(DistProd, AllDimsOneIsIdentity) {
  const auto d = dist_prod(mat_nat(), obj(1), obj(1), obj(1));
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d->fwd(), nat(2, 2, oracle::eye(2)));
}

TEST(DistProd, ForwardIsPermutationFromProjections) {
  // <A (x) pi1, A (x) pi2> with A = 2, B = C = 1.
  const oracle::Grid a_pi1 = oracle::kron(oracle::eye(2), 2, {{1, 0}}, 2);
  const oracle::Grid a_pi2 = oracle::kron(oracle::eye(2), 2, {{0, 1}}, 2);
  oracle::Grid expected = a_pi1;
  expected.insert(expected.end(), a_pi2.begin(), a_pi2.end());
  ASSERT_TRUE(is_permutation(expected));
  ASSERT_EQ(expected, (oracle::Grid{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));

  const auto d = dist_prod(mat_nat(), obj(2), obj(1), obj(1));
  ASSERT_TRUE(d.ok()) << d.error().describe();
  EXPECT_EQ(d->fwd(), nat(4, 4, expected));
  EXPECT_EQ(d->bwd(), nat(4, 4, oracle::transpose(expected, 4)));
}

TEST(DistProd, ForwardIsThePairingFormula) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        const auto d = dist_prod(mat_nat(), obj(a), obj(b), obj(c));
        ASSERT_TRUE(d.ok()) << d.error().describe();
        const ProductWitness p = mat_nat().product(obj(b), obj(c));
        const Mor ida = mat_nat().identity(obj(a));
        EXPECT_EQ(d->fwd(), *pair(mat_nat(), tensor(mat_nat(), ida, p.pi1), tensor(mat_nat(), ida, p.pi2)));
        EXPECT_TRUE(d->certificate().passed());
      }
}

TEST(DistProd, ChainDistributorIsTheUniqueArrow) {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        const auto d = dist_prod(chain(), obj(a), obj(b), obj(c));
        ASSERT_TRUE(d.ok());
        EXPECT_EQ(d->fwd().dom(), obj(a + std::min(b, c)));
        EXPECT_EQ(d->fwd().cod(), obj(std::min(a + b, a + c)));
        EXPECT_EQ(d->fwd().dom(), d->fwd().cod());
      }
}

TEST(DistCoprod, AllDimsOneIsIdentity) {
  const auto d = dist_coprod(mat_nat(), obj(1), obj(1), obj(1));
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d->fwd(), nat(2, 2, oracle::eye(2)));
}

TEST(DistCoprod, FinRelSizeTwoIsPermutationWithConverseInverse) {
  // [i1 (x) C, i2 (x) C] with i1 = [I; 0], i2 = [0; I] on 2 + 2.
  const oracle::Grid i1 = {{1, 0}, {0, 1}, {0, 0}, {0, 0}};
  const oracle::Grid i2 = {{0, 0}, {0, 0}, {1, 0}, {0, 1}};
  const oracle::Grid left = oracle::kron(i1, 2, oracle::eye(2), 2);
  const oracle::Grid right = oracle::kron(i2, 2, oracle::eye(2), 2);
  oracle::Grid expected = oracle::zeros(8, 8);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      expected[r][c] = left[r][c];
      expected[r][4 + c] = right[r][c];
    }
  ASSERT_TRUE(is_permutation(expected));

  const auto d = dist_coprod(rel(), obj(2), obj(2), obj(2));
  ASSERT_TRUE(d.ok()) << d.error().describe();
  EXPECT_EQ(d->fwd(), boolean(8, 8, expected));
  EXPECT_EQ(d->bwd(), boolean(8, 8, oracle::transpose(expected, 8)));
}

TEST(DistCoprod, ChainDistributorIsTheUniqueArrow) {
  const auto d = dist_coprod(chain(), obj(-1), obj(3), obj(2));
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d->fwd().dom(), obj(std::max(-1 + 2, 3 + 2)));
  EXPECT_EQ(d->fwd().cod(), obj(std::max(-1, 3) + 2));
}

TEST(DistProd, CorruptedInverseIsRejected) {
  auto broken = std::make_shared<ForwardingInstance>(mat_semiring(SemiringKind::Naturals, 3));
  broken->product_distributor_override = [&](const Obj& a, const Obj& b, const Obj& c) {
    Mor good = broken->inner().product_distributor_inverse(a, b, c);
    NatMatrix m = good.as<NatMatrix>();
    if (m.rows() > 0) m.set(0, 0, m.get(0, 0) + 1);
    return Mor(good.dom(), good.cod(), m);
  };
  const auto d = dist_prod(*broken, obj(2), obj(1), obj(1));
  ASSERT_FALSE(d.ok());
  EXPECT_EQ(d.error().kind, ErrorKind::WitnessInvalid);
  EXPECT_NE(d.error().message.find("= id"), std::string::npos) << d.error().message;
}

TEST(NullaryDistributors, MatrixUnitsAreZeroDimensional) {
  for (int a = 0; a <= 3; ++a) {
    const auto n = nullary_distributors(mat_nat(), obj(a));
    ASSERT_TRUE(n.ok()) << n.error().describe();
    EXPECT_EQ(n->terminal.fwd(), nat(0, 0, {}));
    EXPECT_EQ(n->terminal.bwd(), nat(0, 0, {}));
    EXPECT_EQ(n->initial.fwd(), nat(0, 0, {}));
    EXPECT_EQ(n->initial.bwd(), nat(0, 0, {}));
  }
}

TEST(NullaryDistributors, FinRelEmptyTimesAnythingIsEmpty) {
  for (int a = 0; a <= 2; ++a) {
    EXPECT_EQ(rel().tensor_objects(obj(0), obj(a)), obj(0));
    const auto n = nullary_distributors(rel(), obj(a));
    ASSERT_TRUE(n.ok());
    EXPECT_EQ(n->initial.fwd().cod(), obj(0));
  }
}

TEST(NullaryDistributors, ChainHasNone) {
  const auto n = nullary_distributors(chain(), obj(0));
  ASSERT_FALSE(n.ok());
  EXPECT_EQ(n.error().kind, ErrorKind::NoNullaryStructure);
}

TEST(RightUnit, CertifiedOnEveryInstance) {
  for (const Instance* inst : {&mat_nat(), &rel(), &chain()})
    for (const Obj& a : inst->universe()) {
      const auto r = right_unit(*inst, a);
      ASSERT_TRUE(r.ok()) << r.error().describe();
      EXPECT_EQ(r->fwd().dom(), inst->tensor_objects(a, inst->unit()));
    }
}

TEST(TensorProperty, FunctorialOnSampledComposablePairs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t a = pick(rng, 0, 2), b = pick(rng, 0, 2), c = pick(rng, 0, 2);
    const std::size_t x = pick(rng, 0, 2), y = pick(rng, 0, 2), z = pick(rng, 0, 2);
    const Mor h = nat(a, b, random_grid(rng, b, a, 3)), f = nat(b, c, random_grid(rng, c, b, 3));
    const Mor k = nat(x, y, random_grid(rng, y, x, 3)), g = nat(y, z, random_grid(rng, z, y, 3));
    const auto check = verify_tensor_functoriality(mat_nat(), f, g, h, k);
    ASSERT_TRUE(check.ok()) << check.error().describe();
    EXPECT_TRUE(check->passed()) << check->summary();
  }
}

TEST(RightUnitProperty, NaturalOnSampledMorphisms) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t a = pick(rng, 0, 3), b = pick(rng, 0, 3);
    const auto check = verify_right_unit_naturality(mat_nat(), nat(a, b, random_grid(rng, b, a, 5)));
    ASSERT_TRUE(check.ok());
    EXPECT_TRUE(check->passed()) << check->summary();
  }
}

TEST(RightUnitProperty, BrokenUnitorIsCaught) {
  auto broken = std::make_shared<ForwardingInstance>(mat_semiring(SemiringKind::Naturals, 3));
  broken->right_unitor_inverse_override = [](const Obj& a) {
    NatMatrix m = NatMatrix::identity(static_cast<std::size_t>(a.value()));
    if (m.rows() > 0) m.set(0, 0, 2);
    return Mor(a, a, m);
  };
  const auto r = right_unit(*broken, obj(2));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().kind, ErrorKind::WitnessInvalid);
}
