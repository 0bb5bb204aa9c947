#include "biprod/suite.hpp"

#include <random>
#include <sstream>

#include "biprod/construction.hpp"
#include "json.hpp"

namespace biprod::cli {

namespace {

constexpr std::size_t kHomLimit = 512;

std::vector<std::string> names(std::initializer_list<Obj> objs) {
  std::vector<std::string> out;
  for (const Obj& o : objs) out.push_back(describe(o));
  return out;
}

class Recorder {
 public:
  explicit Recorder(Report& report) : report_(report) {}

  void add(CheckRecord rec) {
    switch (rec.status) {
      case Status::Passed: ++report_.summary.passed; break;
      case Status::Failed: ++report_.summary.failed; break;
      case Status::Unsupported: ++report_.summary.unsupported; break;
    }
    report_.checks.push_back(std::move(rec));
  }

  void error(std::string suite, std::vector<std::string> objs, const Error& e) {
    const Status s = e.kind == ErrorKind::NoNullaryStructure ? Status::Unsupported : Status::Failed;
    add(CheckRecord{std::move(suite), std::move(objs), s, e.describe(), 0});
  }

  void check(std::string suite, std::vector<std::string> objs, const Result<CheckResult>& res) {
    if (!res) return error(std::move(suite), std::move(objs), res.error());
    const CheckResult& c = *res;
    CheckRecord rec{std::move(suite), std::move(objs), Status::Passed, {}, c.details.size()};
    if (const Equation* bad = c.first_failure()) {
      rec.status = Status::Failed;
      rec.failure = c.name + ": " + bad->label + " (" + bad->difference + ")";
    }
    add(std::move(rec));
  }

 private:
  Report& report_;
};

class Sampler {
 public:
  Sampler(const Instance& inst, std::uint64_t seed)
      : inst_(inst), universe_(inst.universe()), rng_(seed) {}

  Obj object() { return universe_[rng_() % universe_.size()]; }

  std::optional<Mor> between(const Obj& a, const Obj& b) {
    return inst_.random_morphism(a, b, rng_);
  }

  // A random morphism out of `a`; the identity when the drawn target is not
  // reachable.
  Mor from(const Obj& a) {
    if (auto f = between(a, object())) return *f;
    return inst_.identity(a);
  }

 private:
  const Instance& inst_;
  std::vector<Obj> universe_;
  std::mt19937_64 rng_;
};

void run_cones(const Instance& inst, const std::vector<Obj>& u, Recorder& rec) {
  for (const Obj& a : u)
    for (const Obj& b : u) {
      rec.check("product", names({a, b}), verify_product(inst, a, b, u, kHomLimit));
      rec.check("coproduct", names({a, b}), verify_coproduct(inst, a, b, u, kHomLimit));
    }
}

bool run_nullary(const Instance& inst, const std::vector<Obj>& u, Recorder& rec) {
  rec.check("terminal", {}, verify_terminal(inst, u, kHomLimit));
  rec.check("initial", {}, verify_initial(inst, u, kHomLimit));
  const auto zero = zero_object(inst);
  if (!zero) {
    rec.error("zero-object", {}, zero.error());
    return false;
  }
  rec.check("zero-object", names({zero->obj}), zero->certificate);
  return true;
}

void run_distributors(const Instance& inst, const std::vector<Obj>& u, bool nullary,
                      Recorder& rec) {
  auto certified = [](const Result<InversePair>& p) -> Result<CheckResult> {
    if (!p) return p.error();
    return p->certificate();
  };
  for (const Obj& a : u) {
    rec.check("right-unit", names({a}), certified(right_unit(inst, a)));
    if (nullary) {
      const auto n = nullary_distributors(inst, a);
      if (!n) {
        rec.error("nullary-distributors", names({a}), n.error());
      } else {
        CheckResult both{"nullary distributors", {}};
        both.append(n->terminal.certificate());
        both.append(n->initial.certificate());
        rec.check("nullary-distributors", names({a}), both);
      }
    }
  }
  for (const Obj& a : u)
    for (const Obj& b : u)
      for (const Obj& c : u) {
        rec.check("dist-prod", names({a, b, c}), certified(dist_prod(inst, a, b, c)));
        rec.check("dist-coprod", names({a, b, c}), certified(dist_coprod(inst, a, b, c)));
      }
}

void run_interchange(const Instance& inst, const std::vector<Obj>& u, Recorder& rec) {
  for (const Obj& a1 : u)
    for (const Obj& a2 : u)
      for (const Obj& b1 : u)
        for (const Obj& b2 : u)
          rec.check("interchange", names({a1, a2, b1, b2}),
                    verify_interchange_factorization(inst, a1, a2, b1, b2));
}

void run_interchange_inverse(const Instance& inst, const std::vector<Obj>& u, Recorder& rec) {
  for (const Obj& a : u)
    for (const Obj& b : u) {
      rec.check("interchange-inverse", names({a, b}), capture([&] {
                  const InversePair t = square_interchange_inverse(inst, a, b).value();
                  const Mor direct = square_interchange(inst, a, b).value();
                  return check_inverse_pair(inst, direct, t.bwd()).value();
                }));
    }
}

void run_idempotents(const Instance& inst, const std::vector<Obj>& u, Recorder& rec) {
  for (const Obj& a : u)
    for (const Obj& b : u)
      rec.check("idempotents", names({a, b}), verify_idempotent_map(inst, a, b));
}

void run_comparison(const Instance& inst, const std::vector<Obj>& u, Recorder& rec) {
  for (const Obj& a : u)
    for (const Obj& b : u)
      rec.check("comparison", names({a, b}), capture([&] {
                  const InversePair c = comparison_iso(inst, a, b).value();
                  CheckResult out{"comparison", {}};
                  out.append(c.certificate());
                  out.expect_equal("c = canonical mixed map", c.fwd(),
                                   canonical_mixed_map(inst, a, b).value());
                  return out;
                }));
}

void run_biproduct(const Instance& inst, const std::vector<Obj>& u, Recorder& rec) {
  for (const Obj& a : u)
    for (const Obj& b : u) {
      const auto w = biproduct(inst, a, b);
      if (!w) {
        rec.error("biproduct", names({a, b}), w.error());
      } else {
        rec.check("biproduct", names({a, b}), w->certificate);
      }
    }
}

void run_semiadditive(const Instance& inst, std::int64_t samples, Sampler& sampler,
                      Recorder& rec) {
  HomAddition adder(inst);
  for (std::int64_t s = 0; s < samples; ++s) {
    const Obj a = sampler.object();
    const Mor f = sampler.from(a);
    const Obj& b = f.cod();
    std::vector<Mor> sample{f};
    if (auto g = sampler.between(a, b)) sample.push_back(*g);
    if (auto k = sampler.between(a, b)) sample.push_back(*k);
    sample.push_back(sampler.from(b));
    const Obj c = sampler.object();
    if (auto h = sampler.between(c, a)) sample.push_back(*h);

    rec.check("semiadditive", names({a, b, c}), capture([&] {
                CheckResult out = verify_semiadditive(inst, sample).value();
                if (sample.size() > 1 && sample[1].dom() == a && sample[1].cod() == b) {
                  if (auto native = inst.native_sum(sample[0], sample[1]))
                    out.expect_equal("f + g = native sum", adder.add(sample[0], sample[1]).value(),
                                     *native);
                }
                return out;
              }));
  }
}

void run_naturality(const Instance& inst, std::int64_t samples, Sampler& sampler,
                    Recorder& rec) {
  for (std::int64_t s = 0; s < samples; ++s) {
    const Mor f = sampler.from(sampler.object());
    const Mor g = sampler.from(sampler.object());
    rec.check("interchange-naturality", names({f.dom(), f.cod(), g.dom(), g.cod()}),
              verify_interchange_naturality(inst, f, g));

    const Mor h = sampler.from(sampler.object());
    const Mor f2 = sampler.from(h.cod());
    const Mor k = sampler.from(sampler.object());
    const Mor g2 = sampler.from(k.cod());
    rec.check("tensor-functoriality", names({h.dom(), h.cod(), k.dom(), k.cod()}),
              verify_tensor_functoriality(inst, f2, g2, h, k));
    rec.check("right-unit-naturality", names({f.dom(), f.cod()}),
              verify_right_unit_naturality(inst, f));
  }
}

}  // namespace

std::string to_string(ReportFormat format) { return format == ReportFormat::Json ? "json" : "text"; }

std::string to_string(Status status) {
  switch (status) {
    case Status::Passed: return "pass";
    case Status::Failed: return "FAIL";
    case Status::Unsupported: return "unsupported";
  }
  return "?";
}

Report run_suite(const Instance& inst, const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report report{config, {}, {}, {}};
  Recorder rec(report);
  const std::vector<Obj> u = inst.universe();
  Sampler sampler(inst, config.seed);

  run_cones(inst, u, rec);
  const bool nullary = run_nullary(inst, u, rec);
  run_distributors(inst, u, nullary, rec);
  run_interchange(inst, u, rec);
  run_interchange_inverse(inst, u, rec);
  if (nullary) {
    run_idempotents(inst, u, rec);
    run_comparison(inst, u, rec);
    run_biproduct(inst, u, rec);
    run_semiadditive(inst, config.samples, sampler, rec);
  } else {
    const Error skipped{ErrorKind::NoNullaryStructure, inst.name() + " has no zero object"};
    for (const char* suite : {"idempotents", "comparison", "biproduct", "semiadditive"})
      rec.error(suite, {}, skipped);
  }
  run_naturality(inst, config.samples, sampler, rec);

  report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

Result<Report> run_suite(const SuiteConfig& config) {
  if (config.max_size < 0)
    return Error{ErrorKind::InvalidBounds, "max-size must be non-negative"};
  if (config.samples < 0) return Error{ErrorKind::InvalidBounds, "samples must be non-negative"};
  auto inst = make_instance(config.instance, static_cast<std::size_t>(config.max_size));
  if (!inst) return inst.error();
  return run_suite(**inst, config);
}

std::string render_text(const Report& report, bool include_timing) {
  std::ostringstream os;
  const SuiteConfig& c = report.config;
  os << "instance " << c.instance << ", max-size " << c.max_size << ", samples " << c.samples
     << ", seed " << c.seed << "\n";
  for (const CheckRecord& r : report.checks) {
    os << '[' << to_string(r.status) << "] " << r.suite;
    if (!r.objects.empty()) {
      os << " (";
      for (std::size_t i = 0; i < r.objects.size(); ++i) os << (i ? ", " : "") << r.objects[i];
      os << ')';
    }
    if (r.status == Status::Passed) {
      os << ": " << r.equations << " equations";
    } else {
      os << ": " << r.failure;
    }
    os << "\n";
  }
  os << "summary: " << report.summary.passed << " passed, " << report.summary.failed
     << " failed, " << report.summary.unsupported << " unsupported\n";
  if (include_timing) os << "duration: " << report.duration.count() << " ms\n";
  return os.str();
}

std::string render_json(const Report& report, bool include_timing) {
  using json = nlohmann::ordered_json;
  const SuiteConfig& c = report.config;
  json doc;
  doc["config"] = {{"instance", c.instance},
                   {"max_size", c.max_size},
                   {"samples", c.samples},
                   {"seed", c.seed},
                   {"report", to_string(c.format)}};
  json checks = json::array();
  for (const CheckRecord& r : report.checks) {
    json item;
    item["suite"] = r.suite;
    item["objects"] = r.objects;
    item["passed"] = r.status == Status::Passed;
    item["equations"] = r.equations;
    if (r.status == Status::Failed) item["failure"] = r.failure;
    if (r.status == Status::Unsupported) item["unsupported"] = r.failure;
    checks.push_back(std::move(item));
  }
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"passed", report.summary.passed},
                    {"failed", report.summary.failed},
                    {"unsupported", report.summary.unsupported}};
  if (include_timing) doc["duration_ms"] = report.duration.count();
  return doc.dump(2) + "\n";
}

int exit_code(const Report& report) { return report.all_passed() ? 0 : 1; }

}  // namespace biprod::cli
