#include "biprod/construction.hpp"

#include <array>
#include <memory>

namespace biprod {

namespace {

std::string pair_label(const Obj& a, const Obj& b) {
  return "(" + describe(a) + ", " + describe(b) + ")";
}

std::string quad_label(const Obj& a1, const Obj& a2, const Obj& b1, const Obj& b2) {
  return "(" + describe(a1) + ", " + describe(a2) + ", " + describe(b1) + ", " + describe(b2) +
         ")";
}

const Mor& proj(const ProductWitness& p, int k) { return k == 0 ? p.pi1 : p.pi2; }
const Mor& inj(const CoproductWitness& c, int j) { return j == 0 ? c.in1 : c.in2; }

// Objects X_jk laid out so that the interchange goes from the sum over j of
// (X_j1 x X_j2) to the product over k of (X_1k + X_2k).
struct Grid {
  std::array<ProductWitness, 2> rows;    // rows[j] = X_j1 x X_j2
  std::array<CoproductWitness, 2> cols;  // cols[k] = X_1k + X_2k
  CoproductWitness source;
  ProductWitness target;
};

Grid make_grid(const BicartesianCategory& cat, const Obj& x11, const Obj& x12, const Obj& x21,
               const Obj& x22) {
  std::array<ProductWitness, 2> rows{cat.product(x11, x12), cat.product(x21, x22)};
  std::array<CoproductWitness, 2> cols{cat.coproduct(x11, x21), cat.coproduct(x12, x22)};
  CoproductWitness source = cat.coproduct(rows[0].apex, rows[1].apex);
  ProductWitness target = cat.product(cols[0].apex, cols[1].apex);
  return Grid{std::move(rows), std::move(cols), std::move(source), std::move(target)};
}

Grid tensor_grid(const TensoredCategory& cat, const Obj& a1, const Obj& a2, const Obj& b1,
                 const Obj& b2) {
  return make_grid(cat, cat.tensor_objects(a1, b1), cat.tensor_objects(a1, b2),
                   cat.tensor_objects(a2, b1), cat.tensor_objects(a2, b2));
}

// Component from summand j into factor k: i_j o pi_k.
Mor grid_entry(const Category& cat, const Grid& g, int k, int j) {
  return cat.compose(inj(g.cols[k], j), proj(g.rows[j], k)).value();
}

Mor interchange_of(const BicartesianCategory& cat, const Grid& g) {
  const Mat2 m{grid_entry(cat, g, 0, 0), grid_entry(cat, g, 0, 1), grid_entry(cat, g, 1, 0),
               grid_entry(cat, g, 1, 1)};
  const Mor built = from_matrix(cat, m).value();

  const Mor via_times =
      copair(cat, g.source, times_map(cat, g.cols[0].in1, g.cols[1].in1).value(),
             times_map(cat, g.cols[0].in2, g.cols[1].in2).value())
          .value();
  const Mor via_plus =
      pair(cat, g.target, plus_map(cat, g.rows[0].pi1, g.rows[1].pi1).value(),
           plus_map(cat, g.rows[0].pi2, g.rows[1].pi2).value())
          .value();
  if (const auto d = locate_difference(built, via_times); !d.empty())
    raise(ErrorKind::InternalAgreementFailure, "interchange differs from [i1 x i1, i2 x i2] at " + d);
  if (const auto d = locate_difference(built, via_plus); !d.empty())
    raise(ErrorKind::InternalAgreementFailure,
          "interchange differs from <pi1 + pi1, pi2 + pi2> at " + d);
  return built;
}

ZeroMaps resolve(const TensoredCategory& cat, const ZeroMaps& zeros) {
  return zeros ? zeros : default_zero_maps(cat);
}

// Sections and retractions through which the two idempotents split.
struct Splitting {
  Mor sum_section;         // <A,0> + <0,B>: A + B -> (A x A) + (B x B)
  Mor sum_retraction;      // pi1 + pi2
  Mor product_retraction;  // [A,0] x [0,B]: (A + B) x (A + B) -> A x B
  Mor product_section;     // i1 x i2
};

Splitting make_splitting(const TensoredCategory& cat, const Obj& a, const Obj& b,
                         const ZeroMaps& zeros) {
  const ProductWitness aa = cat.product(a, a);
  const ProductWitness bb = cat.product(b, b);
  const CoproductWitness ab = cat.coproduct(a, b);
  const Mor id_a = cat.identity(a);
  const Mor id_b = cat.identity(b);

  const Mor keep_a = pair(cat, aa, id_a, zeros(a, a).value()).value();
  const Mor keep_b = pair(cat, bb, zeros(b, b).value(), id_b).value();
  const Mor only_a = copair(cat, ab, id_a, zeros(b, a).value()).value();
  const Mor only_b = copair(cat, ab, zeros(a, b).value(), id_b).value();

  return Splitting{plus_map(cat, keep_a, keep_b).value(),
                   plus_map(cat, aa.pi1, bb.pi2).value(),
                   times_map(cat, only_a, only_b).value(),
                   times_map(cat, ab.in1, ab.in2).value()};
}

}  // namespace

Result<ZeroWitness> zero_object(const TensoredCategory& cat) {
  const auto one = cat.terminal();
  const auto zero = cat.initial();
  if (!one || !zero)
    return Error{ErrorKind::NoNullaryStructure,
                 cat.name() + " has no " + (one ? "initial" : "terminal") + " object"};
  return capture([&] {
    // 0 (x) - preserves the terminal object and - (x) 1 preserves the initial one.
    const NullaryDistributors at_zero = nullary_distributors(cat, zero->obj).value();
    const NullaryDistributors at_one = nullary_distributors(cat, one->obj).value();
    const InversePair to_terminal = at_zero.terminal;
    const InversePair from_initial = at_one.initial;
    const Obj mid = cat.tensor_objects(zero->obj, one->obj);

    const Mor one_to_zero = cat.compose(from_initial.bwd(), to_terminal.bwd()).value();
    const Mor zero_to_one = one->bang(zero->obj);

    CheckResult cert{"zero object", {}};
    cert.expect_equal("bang(0) = cobang(1)", zero_to_one, zero->cobang(one->obj));
    cert.expect_equal("0 -> 0(x)1 -> 1 is the unique 0 -> 1",
                      cat.compose(to_terminal.fwd(), from_initial.fwd()).value(), zero_to_one);
    cert.expect_equal("(1 -> 0) o (0 -> 1) = id_0", cat.compose(one_to_zero, zero_to_one).value(),
                      cat.identity(zero->obj));
    cert.expect_equal("(0 -> 1) o (1 -> 0) = id_1", cat.compose(zero_to_one, one_to_zero).value(),
                      cat.identity(one->obj));
    if (!cert.passed()) raise(ErrorKind::WitnessInvalid, cert.summary());
    return ZeroWitness{mid, to_terminal, from_initial, one_to_zero, std::move(cert)};
  });
}

Mor zero_map(const TensoredCategory& cat, const ZeroWitness& zero, const Obj& a, const Obj& b) {
  const Mor to_one = cat.terminal()->bang(a);
  const Mor from_zero = cat.initial()->cobang(b);
  return cat.compose_chain({from_zero, zero.one_to_zero, to_one}).value();
}

Result<Mor> zero_map(const TensoredCategory& cat, const Obj& a, const Obj& b) {
  auto zero = zero_object(cat);
  if (!zero) return zero.error();
  return capture([&] { return zero_map(cat, *zero, a, b); });
}

ZeroMaps default_zero_maps(const TensoredCategory& cat) {
  auto witness = std::make_shared<const Result<ZeroWitness>>(zero_object(cat));
  return [&cat, witness](const Obj& a, const Obj& b) -> Result<Mor> {
    if (!*witness) return witness->error();
    return capture([&] { return zero_map(cat, **witness, a, b); });
  };
}

Result<Mor> interchange_map(const TensoredCategory& cat, const Obj& a1, const Obj& a2,
                            const Obj& b1, const Obj& b2) {
  return capture([&] { return interchange_of(cat, tensor_grid(cat, a1, a2, b1, b2)); });
}

Result<InversePair> distributor_interchange(const TensoredCategory& cat, const Obj& a1,
                                            const Obj& a2, const Obj& b1, const Obj& b2) {
  return capture([&] {
    const Obj b12 = cat.product(b1, b2).apex;
    const Obj a12 = cat.coproduct(a1, a2).apex;

    const InversePair d1 = dist_prod(cat, a1, b1, b2).value();
    const InversePair d2 = dist_prod(cat, a2, b1, b2).value();
    const InversePair gather = dist_coprod(cat, a1, a2, b12).value();
    const InversePair spread = dist_prod(cat, a12, b1, b2).value();
    const InversePair c1 = dist_coprod(cat, a1, a2, b1).value();
    const InversePair c2 = dist_coprod(cat, a1, a2, b2).value();

    const Mor step1 = plus_map(cat, d1.bwd(), d2.bwd()).value();
    const Mor step4 = times_map(cat, c1.bwd(), c2.bwd()).value();
    const Mor step1_inv = plus_map(cat, d1.fwd(), d2.fwd()).value();
    const Mor step4_inv = times_map(cat, c1.fwd(), c2.fwd()).value();

    const Mor fwd = cat.compose_chain({step4, spread.fwd(), gather.fwd(), step1}).value();
    const Mor bwd = cat.compose_chain({step1_inv, gather.bwd(), spread.bwd(), step4_inv}).value();
    return certify_inverse_pair(cat, fwd, bwd,
                                "distributor interchange " + quad_label(a1, a2, b1, b2))
        .value();
  });
}

Result<CheckResult> verify_interchange_factorization(const TensoredCategory& cat, const Obj& a1,
                                                     const Obj& a2, const Obj& b1,
                                                     const Obj& b2) {
  return capture([&] {
    const Grid g = tensor_grid(cat, a1, a2, b1, b2);
    const InversePair y = distributor_interchange(cat, a1, a2, b1, b2).value();
    CheckResult out{"interchange factorization " + quad_label(a1, a2, b1, b2), {}};
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const std::string jj = std::to_string(j + 1);
        const std::string kk = std::to_string(k + 1);
        const Mor lhs =
            cat.compose_chain({proj(g.target, k), y.fwd(), inj(g.source, j)}).value();
        out.expect_equal("pi" + kk + " o y o i" + jj + " = i" + jj + " o pi" + kk, lhs,
                         grid_entry(cat, g, k, j));
      }
    out.expect_equal("y = interchange", y.fwd(), interchange_of(cat, g));
    return out;
  });
}

Result<Mor> square_interchange(const TensoredCategory& cat, const Obj& a, const Obj& b) {
  return capture([&] { return interchange_of(cat, make_grid(cat, a, a, b, b)); });
}

Result<InversePair> square_interchange_inverse(const TensoredCategory& cat, const Obj& a,
                                               const Obj& b) {
  return capture([&] {
    const Obj unit = cat.unit();
    const InversePair y = distributor_interchange(cat, a, b, unit, unit).value();
    const InversePair ra = right_unit(cat, a).value();
    const InversePair rb = right_unit(cat, b).value();

    // Right unitors carry the (A, B, I, I) interchange onto the plain one.
    const Mor into_source_inv = plus_map(cat, times_map(cat, ra.bwd(), ra.bwd()).value(),
                                         times_map(cat, rb.bwd(), rb.bwd()).value())
                                    .value();
    const Mor into_source = plus_map(cat, times_map(cat, ra.fwd(), ra.fwd()).value(),
                                     times_map(cat, rb.fwd(), rb.fwd()).value())
                                .value();
    const Mor onto_target = times_map(cat, plus_map(cat, ra.fwd(), rb.fwd()).value(),
                                      plus_map(cat, ra.fwd(), rb.fwd()).value())
                                .value();
    const Mor onto_target_inv = times_map(cat, plus_map(cat, ra.bwd(), rb.bwd()).value(),
                                          plus_map(cat, ra.bwd(), rb.bwd()).value())
                                    .value();

    const Mor conjugated = cat.compose_chain({onto_target, y.fwd(), into_source_inv}).value();
    const Mor inverse = cat.compose_chain({into_source, y.bwd(), onto_target_inv}).value();
    const Mor t = square_interchange(cat, a, b).value();
    if (const auto d = locate_difference(conjugated, t); !d.empty())
      raise(ErrorKind::WitnessInvalid,
            "unitor-conjugated interchange differs from the square interchange " +
                pair_label(a, b) + " at " + d);
    return certify_inverse_pair(cat, t, inverse, "square interchange " + pair_label(a, b))
        .value();
  });
}

Result<InterchangeIdempotents> split_idempotents(const TensoredCategory& cat, const Obj& a,
                                                 const Obj& b, const ZeroMaps& zeros) {
  const ZeroMaps source = resolve(cat, zeros);
  return capture([&] {
    const Splitting s = make_splitting(cat, a, b, source);
    const Mor on_sum = cat.compose(s.sum_section, s.sum_retraction).value();
    const Mor on_product = cat.compose(s.product_section, s.product_retraction).value();
    CheckResult check{"idempotents " + pair_label(a, b), {}};
    check.expect_equal("e o e = e", cat.compose(on_sum, on_sum).value(), on_sum);
    check.expect_equal("e' o e' = e'", cat.compose(on_product, on_product).value(), on_product);
    if (!check.passed()) raise(ErrorKind::WitnessInvalid, check.summary());
    return InterchangeIdempotents{on_sum, on_product};
  });
}

Result<CheckResult> verify_idempotent_map(const TensoredCategory& cat, const Obj& a,
                                          const Obj& b, const ZeroMaps& zeros) {
  const ZeroMaps source = resolve(cat, zeros);
  return capture([&] {
    const Grid g = make_grid(cat, a, a, b, b);
    const Mor t = interchange_of(cat, g);
    const InterchangeIdempotents e = split_idempotents(cat, a, b, source).value();
    const Mor top = cat.compose(t, e.on_sum).value();
    const Mor bottom = cat.compose(e.on_product, t).value();

    const ProductWitness& aa = g.rows[0];
    const ProductWitness& bb = g.rows[1];
    const CoproductWitness& ab = g.cols[0];
    const Mat2 expected{cat.compose(ab.in1, aa.pi1).value(), source(bb.apex, ab.apex).value(),
                        source(aa.apex, ab.apex).value(), cat.compose(ab.in2, bb.pi2).value()};

    CheckResult out{"idempotent map " + pair_label(a, b), {}};
    out.expect_equal("t o e = e' o t", top, bottom);
    for (const auto& [path, f] : {std::pair{"t o e", top}, std::pair{"e' o t", bottom}}) {
      const Mat2 m = matrix_of(cat, f, g.source, g.target).value();
      const std::string p = path;
      out.expect_equal(p + " entry (1,1) = i1 o pi1", m.f11, expected.f11);
      out.expect_equal(p + " entry (1,2) = 0", m.f12, expected.f12);
      out.expect_equal(p + " entry (2,1) = 0", m.f21, expected.f21);
      out.expect_equal(p + " entry (2,2) = i2 o pi2", m.f22, expected.f22);
    }
    return out;
  });
}

Result<InversePair> comparison_iso(const TensoredCategory& cat, const Obj& a, const Obj& b) {
  const ZeroMaps zeros = default_zero_maps(cat);
  return capture([&] {
    const InversePair t = square_interchange_inverse(cat, a, b).value();
    const Splitting s = make_splitting(cat, a, b, zeros);
    const Mor fwd = cat.compose_chain({s.product_retraction, t.fwd(), s.sum_section}).value();
    const Mor bwd = cat.compose_chain({s.sum_retraction, t.bwd(), s.product_section}).value();
    return certify_inverse_pair(cat, fwd, bwd, "comparison " + pair_label(a, b)).value();
  });
}

Result<Mor> canonical_mixed_map(const TensoredCategory& cat, const Obj& a, const Obj& b) {
  const ZeroMaps zeros = default_zero_maps(cat);
  return capture([&] {
    const Mor id_a = cat.identity(a);
    const Mor id_b = cat.identity(b);
    const Mor zero_ab = zeros(a, b).value();
    const Mor zero_ba = zeros(b, a).value();
    const Mor mixed = from_matrix(cat, Mat2{id_a, zero_ba, zero_ab, id_b}).value();

    const ProductWitness p = cat.product(a, b);
    const Mor columns = copair(cat, cat.coproduct(a, b), pair(cat, p, id_a, zero_ab).value(),
                               pair(cat, p, zero_ba, id_b).value())
                            .value();
    if (const auto d = locate_difference(mixed, columns); !d.empty())
      raise(ErrorKind::InternalAgreementFailure,
            "canonical map differs from [<A,0>, <0,B>] at " + d);
    return mixed;
  });
}

Result<BiproductWitness> biproduct(const TensoredCategory& cat, const Obj& a, const Obj& b) {
  const ZeroMaps zeros = default_zero_maps(cat);
  return capture([&] {
    const InversePair c = comparison_iso(cat, a, b).value();
    const Mor mixed = canonical_mixed_map(cat, a, b).value();
    if (const auto d = locate_difference(c.fwd(), mixed); !d.empty())
      raise(ErrorKind::CanonicalMismatch,
            "comparison " + pair_label(a, b) + " is not the canonical map: " + d);

    const CoproductWitness s = cat.coproduct(a, b);
    const ProductWitness p = cat.product(a, b);
    const Mor pr1 = cat.compose(p.pi1, c.fwd()).value();
    const Mor pr2 = cat.compose(p.pi2, c.fwd()).value();

    CheckResult cert{"biproduct " + pair_label(a, b), {}};
    cert.expect_equal("pr1 o in1 = id", cat.compose(pr1, s.in1).value(), cat.identity(a));
    cert.expect_equal("pr2 o in2 = id", cat.compose(pr2, s.in2).value(), cat.identity(b));
    cert.expect_equal("pr1 o in2 = 0", cat.compose(pr1, s.in2).value(), zeros(b, a).value());
    cert.expect_equal("pr2 o in1 = 0", cat.compose(pr2, s.in1).value(), zeros(a, b).value());
    if (!cert.passed()) raise(ErrorKind::WitnessInvalid, cert.summary());
    return BiproductWitness{a, b, s.apex, s.in1, s.in2, pr1, pr2, c, std::move(cert)};
  });
}

Result<Mor> HomAddition::duplicate(const Obj& a) {
  if (auto it = duplicates_.find(a); it != duplicates_.end()) return it->second;
  Result<Mor> dup = capture([&] {
    const InversePair c = comparison_iso(cat_, a, a).value();
    const Mor id = cat_.identity(a);
    const Mor diagonal = pair(cat_, cat_.product(a, a), id, id).value();
    return cat_.compose(c.bwd(), diagonal).value();
  });
  duplicates_.try_emplace(a, dup);
  return dup;
}

Result<Mor> HomAddition::add(const Mor& f, const Mor& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    return Error{ErrorKind::DomainMismatch, "hom_add: summands live in different homsets"};
  auto dup = duplicate(f.dom());
  if (!dup) return dup.error();
  return capture([&] {
    const Mor both = copair(cat_, cat_.coproduct(f.dom(), f.dom()), f, g).value();
    return cat_.compose(both, *dup).value();
  });
}

Result<Mor> HomAddition::zero(const Obj& a, const Obj& b) {
  if (!zero_) zero_.emplace(zero_object(cat_));
  if (!*zero_) return zero_->error();
  return capture([&] { return zero_map(cat_, **zero_, a, b); });
}

Result<Mor> hom_add(const TensoredCategory& cat, const Mor& f, const Mor& g) {
  HomAddition adder(cat);
  return adder.add(f, g);
}

Result<CheckResult> verify_semiadditive(const TensoredCategory& cat,
                                        std::span<const Mor> sample) {
  HomAddition adder(cat);
  return capture([&] {
    CheckResult out{"semi-additivity", {}};
    std::map<std::pair<Obj, Obj>, std::vector<std::size_t>> homsets;
    for (std::size_t i = 0; i < sample.size(); ++i)
      homsets[{sample[i].dom(), sample[i].cod()}].push_back(i);

    auto add = [&](const Mor& f, const Mor& g) { return adder.add(f, g).value(); };
    auto compose = [&](const Mor& g, const Mor& f) { return cat.compose(g, f).value(); };

    for (const auto& [type, members] : homsets) {
      const auto& [a, b] = type;
      const std::string hom = "hom" + pair_label(a, b);
      const Mor zero = adder.zero(a, b).value();

      std::map<std::pair<std::size_t, std::size_t>, Mor> sums;
      auto sum = [&](std::size_t i, std::size_t j) -> const Mor& {
        auto it = sums.find({i, j});
        if (it == sums.end()) it = sums.emplace(std::pair{i, j}, add(sample[i], sample[j])).first;
        return it->second;
      };

      for (std::size_t i : members) {
        out.expect_equal("f + 0 = f on " + hom, add(sample[i], zero), sample[i]);
        out.expect_equal("0 + f = f on " + hom, add(zero, sample[i]), sample[i]);
      }
      for (std::size_t i : members)
        for (std::size_t j : members) {
          if (j < i) continue;
          out.expect_equal("f + g = g + f on " + hom, sum(i, j), sum(j, i));
        }
      for (std::size_t i : members)
        for (std::size_t j : members)
          for (std::size_t k : members)
            out.expect_equal("(f + g) + h = f + (g + h) on " + hom, add(sum(i, j), sample[k]),
                             add(sample[i], sum(j, k)));

      for (std::size_t i : members)
        for (std::size_t j : members) {
          if (j < i) continue;
          const Mor& fg = sum(i, j);
          for (const Mor& h : sample) {
            if (h.dom() == b) {
              out.expect_equal("h o (f + g) = h o f + h o g on " + hom, compose(h, fg),
                               add(compose(h, sample[i]), compose(h, sample[j])));
            }
            if (h.cod() == a) {
              out.expect_equal("(f + g) o h = f o h + g o h on " + hom, compose(fg, h),
                               add(compose(sample[i], h), compose(sample[j], h)));
            }
          }
        }
    }
    return out;
  });
}

Result<CheckResult> verify_interchange_naturality(const TensoredCategory& cat, const Mor& f,
                                                  const Mor& g) {
  return capture([&] {
    const Mor before = square_interchange(cat, f.dom(), g.dom()).value();
    const Mor after = square_interchange(cat, f.cod(), g.cod()).value();
    const Mor squares = plus_map(cat, times_map(cat, f, f).value(), times_map(cat, g, g).value())
                            .value();
    const Mor sum = plus_map(cat, f, g).value();
    const Mor sum_squared = times_map(cat, sum, sum).value();
    CheckResult out{"interchange naturality", {}};
    out.expect_equal("t o ((f x f) + (g x g)) = ((f + g) x (f + g)) o t",
                     cat.compose(after, squares).value(),
                     cat.compose(sum_squared, before).value());
    return out;
  });
}

}  // namespace biprod
