#include <stdexcept>

#include "biprod/instances.hpp"

namespace biprod {

namespace {

template <Semiring S>
typename S::value_type random_entry(std::mt19937_64& rng) {
  if constexpr (std::is_same_v<S, BooleanSemiring>) {
    return (rng() & 1U) != 0;
  } else if constexpr (std::is_same_v<S, NaturalSemiring>) {
    return mpz_class(static_cast<unsigned long>(rng() % 6));
  } else {
    const long num = static_cast<long>(rng() % 11) - 5;
    const unsigned long den = static_cast<unsigned long>(rng() % 4) + 1;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
}

template <Semiring S>
class MatrixInstance final : public Instance {
 public:
  using M = Matrix<S>;

  MatrixInstance(std::string name, std::size_t max_dim) : name_(std::move(name)), max_dim_(max_dim) {}

  std::string name() const override { return name_; }

  std::vector<Obj> universe() const override {
    std::vector<Obj> out;
    for (std::size_t n = 0; n <= max_dim_; ++n) out.push_back(object(n));
    return out;
  }

  bool is_object(const Obj& a) const override { return a.arity() == 1 && a.value() >= 0; }

  std::optional<std::vector<Mor>> enumerate_hom(const Obj& a, const Obj& b,
                                                std::size_t limit) const override {
    const std::size_t cells = dim(a) * dim(b);
    if (cells == 0) return std::vector<Mor>{make(dim(a), dim(b), M(dim(b), dim(a)))};
    if constexpr (std::is_same_v<S, BooleanSemiring>) {
      if (cells >= 40 || (std::size_t{1} << cells) > limit) return std::nullopt;
      std::vector<Mor> out;
      for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
        M m(dim(b), dim(a));
        for (std::size_t bit = 0; bit < cells; ++bit)
          m.set(bit / dim(a), bit % dim(a), ((mask >> bit) & 1U) != 0);
        out.push_back(make(dim(a), dim(b), std::move(m)));
      }
      return out;
    } else {
      return std::nullopt;
    }
  }

  std::optional<Mor> random_morphism(const Obj& a, const Obj& b,
                                     std::mt19937_64& rng) const override {
    M m(dim(b), dim(a));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, random_entry<S>(rng));
    return make(dim(a), dim(b), std::move(m));
  }

  std::optional<Mor> native_sum(const Mor& f, const Mor& g) const override {
    const M& x = mat(f);
    const M& y = mat(g);
    if (f.dom() != g.dom() || f.cod() != g.cod()) return std::nullopt;
    M out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) out.set(i, j, S::add(x.get(i, j), y.get(i, j)));
    return Mor(f.dom(), f.cod(), std::move(out));
  }

  ProductWitness product(const Obj& a, const Obj& b) const override {
    const std::size_t m = dim(a);
    const std::size_t n = dim(b);
    M pi1(m, m + n);
    M pi2(n, m + n);
    for (std::size_t i = 0; i < m; ++i) pi1.set(i, i, S::one());
    for (std::size_t i = 0; i < n; ++i) pi2.set(i, m + i, S::one());
    const Obj apex = object(m + n);
    return ProductWitness{a, b, apex, make(m + n, m, std::move(pi1)), make(m + n, n, std::move(pi2)),
                          [apex](const Mor& f, const Mor& g) {
                            return Mor(f.dom(), apex, stack_rows(mat(f), mat(g)));
                          }};
  }

  CoproductWitness coproduct(const Obj& a, const Obj& b) const override {
    const std::size_t m = dim(a);
    const std::size_t n = dim(b);
    M in1(m + n, m);
    M in2(m + n, n);
    for (std::size_t i = 0; i < m; ++i) in1.set(i, i, S::one());
    for (std::size_t i = 0; i < n; ++i) in2.set(m + i, i, S::one());
    const Obj apex = object(m + n);
    return CoproductWitness{a, b, apex, make(m, m + n, std::move(in1)),
                            make(n, m + n, std::move(in2)),
                            [apex](const Mor& f, const Mor& g) {
                              return Mor(apex, f.cod(), stack_cols(mat(f), mat(g)));
                            }};
  }

  std::optional<TerminalWitness> terminal() const override {
    return TerminalWitness{object(0), [](const Obj& x) { return make(dim(x), 0, M(0, dim(x))); }};
  }

  std::optional<InitialWitness> initial() const override {
    return InitialWitness{object(0), [](const Obj& x) { return make(0, dim(x), M(dim(x), 0)); }};
  }

  Obj tensor_objects(const Obj& a, const Obj& b) const override { return object(dim(a) * dim(b)); }
  Obj unit() const override { return object(1); }

  Mor right_unitor(const Obj& a) const override { return identity(a); }
  Mor right_unitor_inverse(const Obj& a) const override { return identity(a); }

  // The forward map A(x)(B x C) -> (A(x)B) x (A(x)C) sends basis vector (x, y)
  // to (x, y) in the first block when y < B, else to (x, y - B) in the second;
  // the inverse is the transposed permutation.
  Mor product_distributor_inverse(const Obj& a, const Obj& b, const Obj& c) const override {
    const std::size_t na = dim(a), nb = dim(b), nc = dim(c);
    const std::size_t n = na * (nb + nc);
    M inv(n, n);
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < nb + nc; ++y) {
        const std::size_t source = x * (nb + nc) + y;
        const std::size_t target = y < nb ? x * nb + y : na * nb + x * nc + (y - nb);
        inv.set(source, target, S::one());
      }
    return make(na * nb + na * nc, n, std::move(inv));
  }

  // (A+B)(x)C -> (A(x)C) + (B(x)C); with row-major Kronecker indexing both
  // sides enumerate (x, z) in the same order.
  Mor coproduct_distributor_inverse(const Obj& a, const Obj& b, const Obj& c) const override {
    const std::size_t na = dim(a), nb = dim(b), nc = dim(c);
    const std::size_t n = (na + nb) * nc;
    M inv(n, n);
    for (std::size_t x = 0; x < na + nb; ++x)
      for (std::size_t z = 0; z < nc; ++z) {
        const std::size_t source = x * nc + z;
        const std::size_t target = x < na ? x * nc + z : na * nc + (x - na) * nc + z;
        inv.set(target, source, S::one());
      }
    return make(n, na * nc + nb * nc, std::move(inv));
  }

  std::optional<Mor> terminal_distributor_inverse(const Obj& a) const override {
    return make(0, dim(a) * 0, M(0, 0));
  }

  std::optional<Mor> initial_distributor_inverse(const Obj& a) const override {
    return make(0 * dim(a), 0, M(0, 0));
  }

 protected:
  Mor compose_unchecked(const Mor& g, const Mor& f) const override {
    return Mor(f.dom(), g.cod(), multiply(mat(g), mat(f)));
  }

  Mor make_identity(const Obj& a) const override { return make(dim(a), dim(a), M::identity(dim(a))); }

  Mor tensor_morphisms(const Mor& f, const Mor& g) const override {
    return Mor(tensor_objects(f.dom(), g.dom()), tensor_objects(f.cod(), g.cod()),
               kronecker(mat(f), mat(g)));
  }

 private:
  static std::size_t dim(const Obj& a) {
    if (a.arity() != 1 || a.value() < 0) throw std::invalid_argument("not a matrix object: " + describe(a));
    return static_cast<std::size_t>(a.value());
  }
  static Obj object(std::size_t n) { return Obj(static_cast<std::int64_t>(n)); }
  static Mor make(std::size_t dom, std::size_t cod, M m) {
    return Mor(object(dom), object(cod), std::move(m));
  }
  static const M& mat(const Mor& f) { return f.as<M>(); }

  std::string name_;
  std::size_t max_dim_;
};

}  // namespace

InstancePtr finrel(std::size_t max_size) {
  return std::make_shared<MatrixInstance<BooleanSemiring>>("finrel", max_size);
}

InstancePtr mat_semiring(SemiringKind semiring, std::size_t max_dim) {
  switch (semiring) {
    case SemiringKind::Naturals:
      return std::make_shared<MatrixInstance<NaturalSemiring>>("mat-nat", max_dim);
    case SemiringKind::Booleans:
      return std::make_shared<MatrixInstance<BooleanSemiring>>("mat-bool", max_dim);
    case SemiringKind::Rationals:
      return std::make_shared<MatrixInstance<RationalField>>("mat-rat", max_dim);
  }
  throw std::invalid_argument("unknown semiring");
}

}  // namespace biprod
