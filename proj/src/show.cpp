#include "biprod/show.hpp"

#include <cctype>
#include <sstream>

#include "biprod/construction.hpp"

namespace biprod::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression expression() {
    Expression out;
    skip_space();
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      out.name += text_[pos_++];
    if (pos_ < text_.size() && text_[pos_] == '\'') out.name += text_[pos_++];
    if (out.name.empty()) fail("expected a map name");
    expect('(');
    out.args.push_back(object());
    while (peek() == ',') {
      ++pos_;
      out.args.push_back(object());
    }
    expect(')');
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return out;
  }

 private:
  Obj object() {
    std::vector<std::int64_t> parts;
    collect(parts);
    return Obj(std::move(parts));
  }

  void collect(std::vector<std::int64_t>& parts) {
    if (peek() == '(') {
      ++pos_;
      collect(parts);
      while (peek() == ',') {
        ++pos_;
        collect(parts);
      }
      expect(')');
      return;
    }
    parts.push_back(integer());
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    raise(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                     std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_payload(std::ostringstream& os, const Payload& p, const Obj& dom, const Obj& cod,
                    const std::string& indent) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Arrow>) {
          os << indent << describe(dom) << " <= " << describe(cod) << "\n";
        } else {
          if (v.rows() == 0 || v.cols() == 0) {
            os << indent << "(empty " << v.rows() << "x" << v.cols() << " matrix)\n";
            return;
          }
          for (std::size_t i = 0; i < v.rows(); ++i) {
            os << indent << '[';
            for (std::size_t j = 0; j < v.cols(); ++j)
              os << (j ? " " : "") << T::semiring::to_string(v.get(i, j));
            os << "]\n";
          }
        }
      },
      p);
}

void render(std::ostringstream& os, const Mor& f, const std::string& indent) {
  if (f.parts().size() == 1) {
    render_payload(os, f.payload(), f.dom(), f.cod(), indent);
    return;
  }
  for (std::size_t k = 0; k < f.parts().size(); ++k) {
    os << indent << "component " << k + 1 << ":\n";
    render_payload(os, f.parts()[k], Obj(f.dom().parts()[k]), Obj(f.cod().parts()[k]),
                   indent + "  ");
  }
}

void render_components(std::ostringstream& os, const Mat2& m) {
  os << "components:\n";
  for (const auto& [label, f] :
       {std::pair{"f11", &m.f11}, {"f12", &m.f12}, {"f21", &m.f21}, {"f22", &m.f22}}) {
    os << "  " << label << ": " << describe(f->dom()) << " -> " << describe(f->cod()) << "\n";
    render(os, *f, "    ");
  }
}

std::size_t expected_arity(const std::string& name) {
  if (name == "t" || name == "c" || name == "e" || name == "e'" || name == "zero") return 2;
  if (name == "star") return 4;
  return 0;
}

}  // namespace

Result<Expression> parse_expression(std::string_view text) {
  return capture([&] { return Parser(text).expression(); });
}

Result<std::string> show(const Instance& inst, std::string_view expression) {
  auto parsed = parse_expression(expression);
  if (!parsed) return parsed.error();
  const Expression& e = *parsed;
  const std::size_t arity = expected_arity(e.name);
  if (arity == 0)
    return Error{ErrorKind::ParseError,
                 "unknown map '" + e.name + "' (expected t, c, e, e', star or zero)"};
  if (e.args.size() != arity)
    return Error{ErrorKind::ParseError,
                 e.name + " takes " + std::to_string(arity) + " objects, got " +
                     std::to_string(e.args.size())};
  for (const Obj& o : e.args)
    if (!inst.is_object(o))
      return Error{ErrorKind::ParseError, describe(o) + " is not an object of " + inst.name()};

  return capture([&] {
    std::ostringstream os;
    std::string head = e.name + "(";
    for (std::size_t i = 0; i < e.args.size(); ++i)
      head += (i ? ", " : "") + describe(e.args[i]);
    head += ")";

    auto emit = [&](const Mor& f) {
      os << head << ": " << describe(f.dom()) << " -> " << describe(f.cod()) << "\n";
      render(os, f, "  ");
    };

    const auto& a = e.args;
    if (e.name == "t") {
      const Mor t = square_interchange(inst, a[0], a[1]).value();
      emit(t);
      const auto sum = inst.coproduct(inst.product(a[0], a[0]).apex, inst.product(a[1], a[1]).apex);
      const Obj ab = inst.coproduct(a[0], a[1]).apex;
      render_components(os, matrix_of(inst, t, sum, inst.product(ab, ab)).value());
    } else if (e.name == "star") {
      const Mor s = interchange_map(inst, a[0], a[1], a[2], a[3]).value();
      emit(s);
      auto tn = [&](const Obj& x, const Obj& y) { return inst.tensor_objects(x, y); };
      const auto sum = inst.coproduct(inst.product(tn(a[0], a[2]), tn(a[0], a[3])).apex,
                                      inst.product(tn(a[1], a[2]), tn(a[1], a[3])).apex);
      const auto prod = inst.product(inst.coproduct(tn(a[0], a[2]), tn(a[1], a[2])).apex,
                                     inst.coproduct(tn(a[0], a[3]), tn(a[1], a[3])).apex);
      render_components(os, matrix_of(inst, s, sum, prod).value());
    } else if (e.name == "c") {
      const InversePair c = comparison_iso(inst, a[0], a[1]).value();
      emit(c.fwd());
      render_components(
          os, matrix_of(inst, c.fwd(), inst.coproduct(a[0], a[1]), inst.product(a[0], a[1])).value());
      os << "inverse: " << describe(c.bwd().dom()) << " -> " << describe(c.bwd().cod()) << "\n";
      render(os, c.bwd(), "  ");
    } else if (e.name == "e" || e.name == "e'") {
      const InterchangeIdempotents idem = split_idempotents(inst, a[0], a[1]).value();
      emit(e.name == "e" ? idem.on_sum : idem.on_product);
    } else {
      emit(zero_map(inst, a[0], a[1]).value());
    }
    return os.str();
  });
}

}  // namespace biprod::cli
