#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

namespace biprod {

// A commutative semiring: commutative addition with zero, multiplication with
// one, multiplication distributing over addition. No subtraction is assumed.
template <class S>
concept Semiring = requires(const typename S::value_type& a,
                            const typename S::value_type& b) {
  { S::zero() } -> std::convertible_to<typename S::value_type>;
  { S::one() } -> std::convertible_to<typename S::value_type>;
  { S::add(a, b) } -> std::convertible_to<typename S::value_type>;
  { S::mul(a, b) } -> std::convertible_to<typename S::value_type>;
  { S::to_string(a) } -> std::convertible_to<std::string>;
  { S::name() } -> std::convertible_to<std::string_view>;
};

struct BooleanSemiring {
  using value_type = bool;
  static bool zero() { return false; }
  static bool one() { return true; }
  static bool add(bool a, bool b) { return a || b; }
  static bool mul(bool a, bool b) { return a && b; }
  static std::string to_string(bool a) { return a ? "1" : "0"; }
  static std::string_view name() { return "booleans"; }
};

// Naturals are held in mpz_class so sums and products never overflow; only
// non-negative values are ever constructed.
struct NaturalSemiring {
  using value_type = mpz_class;
  static mpz_class zero() { return 0; }
  static mpz_class one() { return 1; }
  static mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
  static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
  static std::string to_string(const mpz_class& a) { return a.get_str(); }
  static std::string_view name() { return "naturals"; }
};

struct RationalField {
  using value_type = mpq_class;
  static mpq_class zero() { return 0; }
  static mpq_class one() { return 1; }
  static mpq_class add(const mpq_class& a, const mpq_class& b) {
    mpq_class r = a + b;
    r.canonicalize();
    return r;
  }
  static mpq_class mul(const mpq_class& a, const mpq_class& b) {
    mpq_class r = a * b;
    r.canonicalize();
    return r;
  }
  static std::string to_string(const mpq_class& a) { return a.get_str(); }
  static std::string_view name() { return "rationals"; }
};

static_assert(Semiring<BooleanSemiring>);
static_assert(Semiring<NaturalSemiring>);
static_assert(Semiring<RationalField>);

}  // namespace biprod
