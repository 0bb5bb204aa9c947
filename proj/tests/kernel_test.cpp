#include <gtest/gtest.h>

#include <random>

#include "biprod/instances.hpp"
#include "biprod/kernel.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace biprod;
using namespace testing_support;

namespace {

const Instance& mat_nat() {
  static InstancePtr inst = mat_semiring(SemiringKind::Naturals, 3);
  return *inst;
}
const Instance& mat_bool() {
  static InstancePtr inst = mat_semiring(SemiringKind::Booleans, 3);
  return *inst;
}
const Instance& chain() {
  static InstancePtr inst = z_chain(-5, 5);
  return *inst;
}

}  // namespace

TEST(Compose, IdentityIsNeutral) {
  const Mor f = nat(2, 3, {{1, 2}, {0, 4}, {5, 0}});
  EXPECT_EQ(*mat_nat().compose(mat_nat().identity(obj(3)), f), f);
  EXPECT_EQ(*mat_nat().compose(f, mat_nat().identity(obj(2))), f);
}

TEST(Compose, BooleanProductMatchesBruteForce) {
  const oracle::Grid g = {{1, 0}, {1, 1}};
  const oracle::Grid f = {{0, 1}, {1, 0}};
  const oracle::Grid expected = oracle::product(g, f, 2, true);
  ASSERT_EQ(expected, (oracle::Grid{{0, 1}, {1, 1}}));
  EXPECT_EQ(*mat_bool().compose(boolean(2, 2, g), boolean(2, 2, f)), boolean(2, 2, expected));
}

TEST(Compose, ChainArrowsCompose) {
  const Mor f(obj(1), obj(3), Arrow{});
  const Mor g(obj(3), obj(5), Arrow{});
  EXPECT_EQ(*chain().compose(g, f), Mor(obj(1), obj(5), Arrow{}));
}

TEST(Compose, RejectsMismatchedTypes) {
  const Mor f = nat(2, 3, oracle::zeros(3, 2));
  const auto r = mat_nat().compose(f, f);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().kind, ErrorKind::DomainMismatch);
}

TEST(Compose, ChainOrderIsRightToLeft) {
  const Mor f = nat(1, 2, {{1}, {2}});
  const Mor g = nat(2, 2, {{0, 1}, {1, 0}});
  const Mor h = nat(2, 1, {{3, 5}});
  const auto hgf = mat_nat().compose_chain({h, g, f});
  const oracle::Grid expected = oracle::product({{3, 5}}, oracle::product({{0, 1}, {1, 0}}, {{1}, {2}}, 2), 2);
  EXPECT_EQ(*hgf, nat(1, 1, expected));
}

TEST(Identity, Examples) {
  EXPECT_EQ(mat_nat().identity(obj(2)), nat(2, 2, oracle::eye(2)));
  static InstancePtr rel = finrel(3);
  EXPECT_EQ(rel->identity(obj(3)), boolean(3, 3, oracle::eye(3)));
  EXPECT_EQ(chain().identity(obj(4)), Mor(obj(4), obj(4), Arrow{}));
}

TEST(Equal, Examples) {
  const Mor f = nat(2, 2, {{1, 2}, {3, 4}});
  EXPECT_TRUE(mat_nat().equal(f, f));
  // A zero 3x2 matrix directly, and as a composite through dimension 1.
  const Mor direct = nat(2, 3, oracle::zeros(3, 2));
  const Mor routed = *mat_nat().compose(nat(1, 3, oracle::zeros(3, 1)), nat(2, 1, {{4, 7}}));
  EXPECT_TRUE(mat_nat().equal(direct, routed));
  EXPECT_FALSE(mat_nat().equal(nat(1, 1, {{1}}), nat(1, 1, {{2}})));
}

TEST(LocateDifference, NamesFirstEntry) {
  const std::string d = locate_difference(nat(2, 2, {{1, 2}, {3, 4}}), nat(2, 2, {{1, 2}, {3, 5}}));
  EXPECT_NE(d.find("(1, 1)"), std::string::npos) << d;
  EXPECT_TRUE(locate_difference(nat(1, 1, {{1}}), nat(1, 1, {{1}})).empty());
}

TEST(CheckInversePair, IdentityPasses) {
  const Mor id = mat_nat().identity(obj(3));
  EXPECT_TRUE(check_inverse_pair(mat_nat(), id, id)->passed());
}

TEST(CheckInversePair, PermutationWithTranspose) {
  const oracle::Grid p = oracle::permutation_rows({2, 3, 1});
  const oracle::Grid pt = oracle::transpose(p, 3);
  ASSERT_EQ(oracle::product(p, pt, 3), oracle::eye(3));
  ASSERT_EQ(oracle::product(pt, p, 3), oracle::eye(3));
  EXPECT_TRUE(check_inverse_pair(mat_nat(), nat(3, 3, p), nat(3, 3, pt))->passed());
}

TEST(CheckInversePair, NoNaturalInverseForShear) {
  const oracle::Grid shear = {{1, 1}, {0, 1}};
  std::size_t oracle_inverses = 0;
  std::size_t library_passes = 0;
  // Every 2x2 candidate with entries 0..3.
  for (int mask = 0; mask < 256; ++mask) {
    oracle::Grid g = {{mask & 3, (mask >> 2) & 3}, {(mask >> 4) & 3, (mask >> 6) & 3}};
    if (oracle::product(g, shear, 2) == oracle::eye(2) && oracle::product(shear, g, 2) == oracle::eye(2))
      ++oracle_inverses;
    if (check_inverse_pair(mat_nat(), nat(2, 2, shear), nat(2, 2, g))->passed()) ++library_passes;
  }
  EXPECT_EQ(oracle_inverses, 0u);
  EXPECT_EQ(library_passes, 0u);
}

TEST(CheckInversePair, MismatchedTypes) {
  const auto r = check_inverse_pair(mat_nat(), nat(2, 3, oracle::zeros(3, 2)), nat(2, 3, oracle::zeros(3, 2)));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().kind, ErrorKind::DomainMismatch);
}

TEST(CertifyInversePair, FailureNamesEquation) {
  const Mor f = nat(1, 1, {{2}});
  const auto r = certify_inverse_pair(mat_nat(), f, f, "doubling");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().kind, ErrorKind::WitnessInvalid);
  EXPECT_NE(r.error().message.find("o f = id"), std::string::npos) << r.error().message;
}

TEST(CertifyInversePair, InverseSwapsRoles) {
  const Mor p = nat(2, 2, {{0, 1}, {1, 0}});
  const auto r = certify_inverse_pair(mat_nat(), p, p);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->certificate().passed());
  EXPECT_EQ(r->inverse().fwd(), r->bwd());
}

// --- properties over hand-rolled generators -------------------------------

TEST(ComposeProperty, AssociativeAndMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t a = pick(rng, 0, 3), b = pick(rng, 0, 3), c = pick(rng, 0, 3), d = pick(rng, 0, 3);
    const oracle::Grid fg = random_grid(rng, b, a, 5);
    const oracle::Grid gg = random_grid(rng, c, b, 5);
    const oracle::Grid hg = random_grid(rng, d, c, 5);
    const Mor f = nat(a, b, fg), g = nat(b, c, gg), h = nat(c, d, hg);
    const Mor left = *mat_nat().compose(*mat_nat().compose(h, g), f);
    const Mor right = *mat_nat().compose(h, *mat_nat().compose(g, f));
    EXPECT_EQ(left, right);
    EXPECT_EQ(left, nat(a, d, oracle::product_sized(hg, oracle::product_sized(gg, fg, b, a), c, a)));
    EXPECT_EQ(*mat_nat().compose(mat_nat().identity(obj(static_cast<int64_t>(d))), h), h);
  }
}

TEST(CheckInversePairProperty, SymmetricInItsArguments) {
  // Exhaustive over boolean 2x2 pairs; agreement with the oracle, and symmetry.
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y) {
      const oracle::Grid fg = {{x & 1, (x >> 1) & 1}, {(x >> 2) & 1, (x >> 3) & 1}};
      const oracle::Grid gg = {{y & 1, (y >> 1) & 1}, {(y >> 2) & 1, (y >> 3) & 1}};
      const bool expected = oracle::product(gg, fg, 2, true) == oracle::eye(2) &&
                            oracle::product(fg, gg, 2, true) == oracle::eye(2);
      const Mor f = boolean(2, 2, fg), g = boolean(2, 2, gg);
      EXPECT_EQ(check_inverse_pair(mat_bool(), f, g)->passed(), expected);
      EXPECT_EQ(check_inverse_pair(mat_bool(), g, f)->passed(), expected);
    }
}

TEST(Result, CaptureConvertsThrownErrors) {
  const auto r = capture([]() -> int {
    const Result<int> bad = Error{ErrorKind::ParseError, "nope"};
    return bad.value();
  });
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().kind, ErrorKind::ParseError);
  EXPECT_EQ(r.error().describe().find("ParseError"), 0u) << r.error().describe();
}
