#include "biprod/structure.hpp"

namespace biprod {

namespace {

std::string arrow_type(const Mor& f) { return describe(f.dom()) + " -> " + describe(f.cod()); }

Error mismatch(const std::string& what) { return Error{ErrorKind::DomainMismatch, what}; }

}  // namespace

Result<Mor> pair(const Category& cat, const ProductWitness& p, const Mor& f, const Mor& g) {
  if (f.dom() != g.dom())
    return mismatch("pair: legs have different domains (" + arrow_type(f) + ", " + arrow_type(g) + ")");
  if (f.cod() != p.left || g.cod() != p.right)
    return mismatch("pair: legs " + arrow_type(f) + ", " + arrow_type(g) +
                    " do not target the product of " + describe(p.left) + " and " + describe(p.right));
  return capture([&] {
    Mor h = p.mediate(f, g);
    if (h.dom() != f.dom() || h.cod() != p.apex)
      raise(ErrorKind::WitnessInvalid, "pair: mediating map has type " + arrow_type(h));
    CheckResult check{"pair", {}};
    check.expect_equal("pi1 o <f,g> = f", cat.compose(p.pi1, h).value(), f);
    check.expect_equal("pi2 o <f,g> = g", cat.compose(p.pi2, h).value(), g);
    if (!check.passed()) raise(ErrorKind::WitnessInvalid, check.summary());
    return h;
  });
}

Result<Mor> copair(const Category& cat, const CoproductWitness& c, const Mor& f, const Mor& g) {
  if (f.cod() != g.cod())
    return mismatch("copair: legs have different codomains (" + arrow_type(f) + ", " +
                    arrow_type(g) + ")");
  if (f.dom() != c.left || g.dom() != c.right)
    return mismatch("copair: legs " + arrow_type(f) + ", " + arrow_type(g) +
                    " do not leave the coproduct of " + describe(c.left) + " and " +
                    describe(c.right));
  return capture([&] {
    Mor h = c.mediate(f, g);
    if (h.dom() != c.apex || h.cod() != f.cod())
      raise(ErrorKind::WitnessInvalid, "copair: mediating map has type " + arrow_type(h));
    CheckResult check{"copair", {}};
    check.expect_equal("[f,g] o i1 = f", cat.compose(h, c.in1).value(), f);
    check.expect_equal("[f,g] o i2 = g", cat.compose(h, c.in2).value(), g);
    if (!check.passed()) raise(ErrorKind::WitnessInvalid, check.summary());
    return h;
  });
}

Result<Mor> pair(const BicartesianCategory& cat, const Mor& f, const Mor& g) {
  return pair(cat, cat.product(f.cod(), g.cod()), f, g);
}

Result<Mor> copair(const BicartesianCategory& cat, const Mor& f, const Mor& g) {
  return copair(cat, cat.coproduct(f.dom(), g.dom()), f, g);
}

Result<Mor> times_map(const BicartesianCategory& cat, const Mor& f, const Mor& g) {
  return capture([&] {
    const ProductWitness source = cat.product(f.dom(), g.dom());
    const ProductWitness target = cat.product(f.cod(), g.cod());
    return pair(cat, target, cat.compose(f, source.pi1).value(),
                cat.compose(g, source.pi2).value())
        .value();
  });
}

Result<Mor> plus_map(const BicartesianCategory& cat, const Mor& f, const Mor& g) {
  return capture([&] {
    const CoproductWitness source = cat.coproduct(f.dom(), g.dom());
    const CoproductWitness target = cat.coproduct(f.cod(), g.cod());
    return copair(cat, source, cat.compose(target.in1, f).value(),
                  cat.compose(target.in2, g).value())
        .value();
  });
}

Result<Mat2> matrix_of(const Category& cat, const Mor& f, const CoproductWitness& c,
                       const ProductWitness& p) {
  if (f.dom() != c.apex || f.cod() != p.apex)
    return mismatch("matrix_of: " + arrow_type(f) + " is not a map " + describe(c.apex) + " -> " +
                    describe(p.apex));
  return capture([&] {
    auto entry = [&](const Mor& proj, const Mor& inj) {
      return cat.compose_chain({proj, f, inj}).value();
    };
    return Mat2{entry(p.pi1, c.in1), entry(p.pi1, c.in2), entry(p.pi2, c.in1),
                entry(p.pi2, c.in2)};
  });
}

Result<Mor> from_matrix(const BicartesianCategory& cat, const Mat2& m) {
  const Obj& a = m.f11.dom();
  const Obj& b = m.f12.dom();
  const Obj& c = m.f11.cod();
  const Obj& d = m.f21.cod();
  if (m.f12.cod() != c || m.f21.dom() != a || m.f22.dom() != b || m.f22.cod() != d)
    return mismatch("from_matrix: entries are not typed as a single map A + B -> C x D");
  return capture([&] {
    const CoproductWitness sum = cat.coproduct(a, b);
    const ProductWitness prod = cat.product(c, d);
    const Mor columns = copair(cat, sum, pair(cat, prod, m.f11, m.f21).value(),
                               pair(cat, prod, m.f12, m.f22).value())
                            .value();
    const Mor rows = pair(cat, prod, copair(cat, sum, m.f11, m.f12).value(),
                          copair(cat, sum, m.f21, m.f22).value())
                         .value();
    if (const std::string diff = locate_difference(columns, rows); !diff.empty())
      raise(ErrorKind::InternalAgreementFailure,
            "from_matrix: [<f11,f21>,<f12,f22>] and <[f11,f12],[f21,f22]> disagree at " + diff);
    return columns;
  });
}

Result<CheckResult> verify_product(const BicartesianCategory& cat, const Obj& a, const Obj& b,
                                   std::span<const Obj> probes, std::size_t hom_limit) {
  return capture([&] {
    const ProductWitness p = cat.product(a, b);
    CheckResult out{"product(" + describe(a) + ", " + describe(b) + ")", {}};
    if (p.pi1.dom() != p.apex || p.pi1.cod() != a || p.pi2.dom() != p.apex || p.pi2.cod() != b)
      raise(ErrorKind::WitnessInvalid, out.name + ": projections are mistyped");
    out.expect_equal("<pi1,pi2> = id", pair(cat, p, p.pi1, p.pi2).value(), cat.identity(p.apex));
    for (const Obj& x : probes) {
      const auto legs1 = cat.enumerate_hom(x, a, hom_limit);
      const auto legs2 = cat.enumerate_hom(x, b, hom_limit);
      if (legs1 && legs2 && legs1->size() * legs2->size() <= hom_limit) {
        // pair() itself certifies both projection equations for each cone.
        for (const Mor& f : *legs1)
          for (const Mor& g : *legs2) (void)pair(cat, p, f, g).value();
      }
      if (const auto maps = cat.enumerate_hom(x, p.apex, hom_limit)) {
        for (const Mor& h : *maps) {
          const Mor mediated =
              pair(cat, p, cat.compose(p.pi1, h).value(), cat.compose(p.pi2, h).value()).value();
          out.expect_equal("h = <pi1 h, pi2 h> for h: " + describe(x) + " -> apex", h, mediated);
        }
      }
    }
    return out;
  });
}

Result<CheckResult> verify_coproduct(const BicartesianCategory& cat, const Obj& a, const Obj& b,
                                     std::span<const Obj> probes, std::size_t hom_limit) {
  return capture([&] {
    const CoproductWitness c = cat.coproduct(a, b);
    CheckResult out{"coproduct(" + describe(a) + ", " + describe(b) + ")", {}};
    if (c.in1.cod() != c.apex || c.in1.dom() != a || c.in2.cod() != c.apex || c.in2.dom() != b)
      raise(ErrorKind::WitnessInvalid, out.name + ": injections are mistyped");
    out.expect_equal("[i1,i2] = id", copair(cat, c, c.in1, c.in2).value(), cat.identity(c.apex));
    for (const Obj& y : probes) {
      const auto legs1 = cat.enumerate_hom(a, y, hom_limit);
      const auto legs2 = cat.enumerate_hom(b, y, hom_limit);
      if (legs1 && legs2 && legs1->size() * legs2->size() <= hom_limit) {
        for (const Mor& f : *legs1)
          for (const Mor& g : *legs2) (void)copair(cat, c, f, g).value();
      }
      if (const auto maps = cat.enumerate_hom(c.apex, y, hom_limit)) {
        for (const Mor& h : *maps) {
          const Mor mediated =
              copair(cat, c, cat.compose(h, c.in1).value(), cat.compose(h, c.in2).value()).value();
          out.expect_equal("h = [h i1, h i2] for h: apex -> " + describe(y), h, mediated);
        }
      }
    }
    return out;
  });
}

Result<CheckResult> verify_terminal(const BicartesianCategory& cat, std::span<const Obj> probes,
                                    std::size_t hom_limit) {
  const auto t = cat.terminal();
  if (!t) return Error{ErrorKind::NoNullaryStructure, cat.name() + " declares no terminal object"};
  CheckResult out{"terminal " + describe(t->obj), {}};
  for (const Obj& x : probes) {
    const Mor bang = t->bang(x);
    if (bang.dom() != x || bang.cod() != t->obj)
      return Error{ErrorKind::WitnessInvalid, "bang(" + describe(x) + ") is mistyped"};
    if (const auto maps = cat.enumerate_hom(x, t->obj, hom_limit)) {
      if (maps->empty())
        return Error{ErrorKind::WitnessInvalid, "no map " + describe(x) + " -> terminal"};
      for (const Mor& h : *maps) out.expect_equal("h = bang(" + describe(x) + ")", h, bang);
    }
  }
  return out;
}

Result<CheckResult> verify_initial(const BicartesianCategory& cat, std::span<const Obj> probes,
                                   std::size_t hom_limit) {
  const auto i = cat.initial();
  if (!i) return Error{ErrorKind::NoNullaryStructure, cat.name() + " declares no initial object"};
  CheckResult out{"initial " + describe(i->obj), {}};
  for (const Obj& x : probes) {
    const Mor cobang = i->cobang(x);
    if (cobang.dom() != i->obj || cobang.cod() != x)
      return Error{ErrorKind::WitnessInvalid, "cobang(" + describe(x) + ") is mistyped"};
    if (const auto maps = cat.enumerate_hom(i->obj, x, hom_limit)) {
      if (maps->empty())
        return Error{ErrorKind::WitnessInvalid, "no map initial -> " + describe(x)};
      for (const Mor& h : *maps) out.expect_equal("h = cobang(" + describe(x) + ")", h, cobang);
    }
  }
  return out;
}

}  // namespace biprod
