#include "trilie/graded.hpp"

#include <utility>

#include "trilie/errors.hpp"

namespace trilie {

struct GradedElement::Expr {
  std::size_t ambient;
  std::size_t degree;

  Expr(std::size_t a, std::size_t d) : ambient(a), degree(d) {}
  virtual ~Expr() = default;

  /// Value on 2*degree+1 coordinate vectors of length `ambient`.
  /// Arguments are validated once at the GradedElement boundary.
  virtual Vec eval(const std::vector<Vec>& args) const = 0;
};

namespace {

using ExprPtr = std::shared_ptr<const GradedElement::Expr>;

struct ZeroExpr final : GradedElement::Expr {
  using Expr::Expr;
  Vec eval(const std::vector<Vec>&) const override { return Vec(ambient); }
};

struct TableExpr final : GradedElement::Expr {
  Cochain table;

  explicit TableExpr(Cochain c)
      : Expr(c.space.alg_dim(), c.space.degree() - 1), table(std::move(c)) {}
  Vec eval(const std::vector<Vec>& args) const override {
    return table.eval(args);
  }
};

struct BracketExpr final : GradedElement::Expr {
  TriLieAlgebra alg;

  explicit BracketExpr(TriLieAlgebra a)
      : Expr(a.dim(), 1), alg(std::move(a)) {}
  Vec eval(const std::vector<Vec>& args) const override {
    return alg.bracket(args[0], args[1], args[2]);
  }
};

struct EmbedExpr final : GradedElement::Expr {
  Cochain f;
  std::size_t dg;

  EmbedExpr(Cochain f_, std::size_t dg_, std::size_t dh_)
      : Expr(dg_ + dh_, f_.space.degree() - 1),
        f(std::move(f_)),
        dg(dg_) {}
  Vec eval(const std::vector<Vec>& args) const override {
    std::vector<Vec> proj;
    proj.reserve(args.size());
    for (const Vec& a : args) proj.emplace_back(a.begin(), a.begin() + dg);
    const Vec v = f.eval(proj);
    Vec out(ambient);
    for (std::size_t i = 0; i < v.size(); ++i) out[dg + i] = v[i];
    return out;
  }
};

struct SumExpr final : GradedElement::Expr {
  ExprPtr a, b;

  SumExpr(ExprPtr a_, ExprPtr b_)
      : Expr(a_->ambient, a_->degree), a(std::move(a_)), b(std::move(b_)) {}
  Vec eval(const std::vector<Vec>& args) const override {
    Vec v = a->eval(args);
    vaxpy(v, 1, b->eval(args));
    return v;
  }
};

struct ScaleExpr final : GradedElement::Expr {
  Rational c;
  ExprPtr a;

  ScaleExpr(Rational c_, ExprPtr a_)
      : Expr(a_->ambient, a_->degree), c(std::move(c_)), a(std::move(a_)) {}
  Vec eval(const std::vector<Vec>& args) const override {
    return vscale(c, a->eval(args));
  }
};

/// The shuffle composition. Pair slots are 0-based here: for a term with
/// 1-based insertion slot k, the shuffled pairs are 0..k+q-2, the split
/// pair is k+q-1, and pairs k+q..p+q-1 pass through behind the insertion.
struct ComposeExpr final : GradedElement::Expr {
  ExprPtr p, q;

  ComposeExpr(ExprPtr p_, ExprPtr q_)
      : Expr(p_->ambient, p_->degree + q_->degree),
        p(std::move(p_)),
        q(std::move(q_)) {}

  Vec eval(const std::vector<Vec>& args) const override {
    const std::size_t dp = p->degree;
    const std::size_t dq = q->degree;
    const std::size_t m = dp + dq;
    const Vec& last = args[2 * m];
    const auto px = [&](std::size_t i) -> const Vec& { return args[2 * i]; };
    const auto py = [&](std::size_t i) -> const Vec& {
      return args[2 * i + 1];
    };

    Vec out(ambient);
    std::vector<Vec> qargs, pargs;
    qargs.reserve(2 * dq + 1);
    pargs.reserve(2 * dp + 1);

    // Insertions into the pair slots of p.
    for (std::size_t k = 1; k <= dp; ++k) {
      const int base_sign = ((k - 1) * dq) % 2 == 0 ? 1 : -1;
      const std::size_t split = k + dq - 1;
      for (const Shuffle& sh : shuffles(k - 1, dq)) {
        for (int variant = 0; variant < 2; ++variant) {
          qargs.clear();
          for (std::size_t i : sh.right) {
            qargs.push_back(px(i));
            qargs.push_back(py(i));
          }
          qargs.push_back(variant == 0 ? px(split) : py(split));
          Vec qv = q->eval(qargs);
          if (vzero(qv)) continue;
          pargs.clear();
          for (std::size_t i : sh.left) {
            pargs.push_back(px(i));
            pargs.push_back(py(i));
          }
          if (variant == 0) {
            pargs.push_back(std::move(qv));
            pargs.push_back(py(split));
          } else {
            pargs.push_back(px(split));
            pargs.push_back(std::move(qv));
          }
          for (std::size_t i = split + 1; i < m; ++i) {
            pargs.push_back(px(i));
            pargs.push_back(py(i));
          }
          pargs.push_back(last);
          vaxpy(out, base_sign * sh.sign, p->eval(pargs));
        }
      }
    }

    // Insertions into the final argument.
    const int final_sign = (dp * dq) % 2 == 0 ? 1 : -1;
    for (const Shuffle& sh : shuffles(dp, dq)) {
      qargs.clear();
      for (std::size_t i : sh.right) {
        qargs.push_back(px(i));
        qargs.push_back(py(i));
      }
      qargs.push_back(last);
      Vec qv = q->eval(qargs);
      if (vzero(qv)) continue;
      pargs.clear();
      for (std::size_t i : sh.left) {
        pargs.push_back(px(i));
        pargs.push_back(py(i));
      }
      pargs.push_back(std::move(qv));
      vaxpy(out, final_sign * sh.sign, p->eval(pargs));
    }
    return out;
  }
};

} // namespace

std::size_t GradedElement::ambient() const { return impl_->ambient; }
std::size_t GradedElement::degree() const { return impl_->degree; }

Vec GradedElement::eval(const std::vector<Vec>& args) const {
  if (args.size() != arg_count()) {
    throw DimensionMismatch("graded element arity");
  }
  for (const Vec& a : args) {
    if (a.size() != ambient()) {
      throw DimensionMismatch("graded element argument length");
    }
  }
  return impl_->eval(args);
}

Vec GradedElement::eval_basis(const std::vector<std::size_t>& idx) const {
  std::vector<Vec> args;
  args.reserve(idx.size());
  for (std::size_t i : idx) args.push_back(basis_vec(ambient(), i));
  return eval(args);
}

Cochain GradedElement::materialize() const {
  const CochainSpace s(ambient(), ambient(), degree() + 1);
  Cochain out = Cochain::zero(s);
  for (std::size_t r = 0; r < s.tuples(); ++r) {
    const Vec v = impl_->eval(s.tuple_args(r));
    for (std::size_t c = 0; c < s.val_dim(); ++c) {
      out.coeffs[r * s.val_dim() + c] = v[c];
    }
  }
  return out;
}

GradedElement GradedElement::zero(std::size_t ambient, std::size_t degree) {
  return GradedElement(std::make_shared<ZeroExpr>(ambient, degree));
}

GradedElement GradedElement::from_cochain(const Cochain& c) {
  if (c.space.alg_dim() != c.space.val_dim()) {
    throw DimensionMismatch(
        "a graded element's values live in its own space");
  }
  return GradedElement(std::make_shared<TableExpr>(c));
}

GradedElement GradedElement::bracket_element(const TriLieAlgebra& a) {
  return GradedElement(std::make_shared<BracketExpr>(a));
}

GradedElement graded_add(const GradedElement& a, const GradedElement& b) {
  if (a.degree() != b.degree() || a.ambient() != b.ambient()) {
    throw DegreeMismatch("graded sum of incompatible elements");
  }
  return GradedElement(std::make_shared<SumExpr>(a.impl(), b.impl()));
}

GradedElement graded_scale(const Rational& c, const GradedElement& a) {
  return GradedElement(std::make_shared<ScaleExpr>(c, a.impl()));
}

GradedElement compose(const GradedElement& p, const GradedElement& q) {
  if (p.ambient() != q.ambient()) {
    throw DegreeMismatch("composition over different base spaces");
  }
  return GradedElement(std::make_shared<ComposeExpr>(p.impl(), q.impl()));
}

GradedElement nr_bracket(const GradedElement& p, const GradedElement& q) {
  GradedElement pq = compose(p, q);
  GradedElement qp = compose(q, p);
  const Rational s = (p.degree() * q.degree()) % 2 == 0 ? -1 : 1;
  return graded_add(pq, graded_scale(s, qp));
}

VData make_v_data(const Action& act) {
  if (!check_action(act).ok()) {
    throw InvalidStructure("the data does not satisfy the action axioms, "
                           "so the master equation would fail");
  }
  return VData{act, GradedElement::bracket_element(semidirect(act))};
}

GradedElement embed_relative(const VData& vd, const Cochain& f) {
  if (f.space.alg_dim() != vd.g_dim() || f.space.val_dim() != vd.h_dim()) {
    throw DimensionMismatch("relative cochain endpoints");
  }
  return GradedElement(
      std::make_shared<EmbedExpr>(f, vd.g_dim(), vd.h_dim()));
}

Cochain project_relative(const VData& vd, const GradedElement& p) {
  if (p.ambient() != vd.ambient()) {
    throw DimensionMismatch("element lives on a different space");
  }
  const std::size_t dg = vd.g_dim();
  const std::size_t dh = vd.h_dim();
  const CochainSpace s(dg, dh, p.degree() + 1);
  Cochain out = Cochain::zero(s);
  for (std::size_t r = 0; r < s.tuples(); ++r) {
    std::vector<Vec> args = s.tuple_args(r);
    for (Vec& a : args) a.resize(dg + dh);
    const Vec v = p.eval(args);
    for (std::size_t c = 0; c < dh; ++c) {
      out.coeffs[r * dh + c] = v[dg + c];
    }
  }
  return out;
}

Cochain derived_bracket(const VData& vd, const std::vector<Cochain>& args) {
  if (args.empty()) {
    throw DimensionMismatch("derived bracket needs at least one argument");
  }
  GradedElement nested = vd.Delta;
  for (const Cochain& f : args) {
    nested = nr_bracket(nested, embed_relative(vd, f));
  }
  return project_relative(vd, nested);
}

Cochain derived_bracket_l1(const VData& vd, const Cochain& f) {
  return derived_bracket(vd, {f});
}

Cochain derived_bracket_l3(const VData& vd, const Cochain& p,
                           const Cochain& q, const Cochain& r) {
  return derived_bracket(vd, {p, q, r});
}

Cochain mc_residual(const VData& vd, const LinearMap& H) {
  const Cochain h = cochain_from_map(H);
  return cochain_add(
      derived_bracket_l1(vd, h),
      cochain_scale(Rational(1, 6), derived_bracket_l3(vd, h, h, h)));
}

namespace {

GradedElement materialized_bracket(const GradedElement& a,
                                   const GradedElement& b) {
  return GradedElement::from_cochain(nr_bracket(a, b).materialize());
}

} // namespace

TwistedBrackets::TwistedBrackets(VData vd, const LinearMap& H)
    : vd_(std::move(vd)),
      delta_h_(materialized_bracket(
          vd_.Delta, embed_relative(vd_, cochain_from_map(H)))),
      delta_h_h_(materialized_bracket(
          delta_h_, embed_relative(vd_, cochain_from_map(H)))) {}

Cochain TwistedBrackets::l1(const Cochain& f) const {
  const GradedElement fi = embed_relative(vd_, f);
  return cochain_add(
      project_relative(vd_, nr_bracket(vd_.Delta, fi)),
      cochain_scale(Rational(1, 2),
                    project_relative(vd_, nr_bracket(delta_h_h_, fi))));
}

Cochain TwistedBrackets::l2(const Cochain& f, const Cochain& g) const {
  return project_relative(
      vd_, nr_bracket(nr_bracket(delta_h_, embed_relative(vd_, f)),
                      embed_relative(vd_, g)));
}

Cochain TwistedBrackets::l3(const Cochain& f, const Cochain& g,
                            const Cochain& h) const {
  return derived_bracket(vd_, {f, g, h});
}

TwistedBrackets twisted_brackets(const VData& vd, const LinearMap& H) {
  if (!check_crossed(vd.act, H).ok()) {
    throw NotMaurerCartan("twisting requires a crossed homomorphism");
  }
  return TwistedBrackets(vd, H);
}

Cochain twisted_mc_residual(const VData& vd, const LinearMap& H,
                            const LinearMap& H2) {
  const TwistedBrackets tb = twisted_brackets(vd, H);
  const Cochain h2 = cochain_from_map(H2);
  Cochain out = tb.l1(h2);
  out = cochain_add(out, cochain_scale(Rational(1, 2), tb.l2(h2, h2)));
  out = cochain_add(out, cochain_scale(Rational(1, 6), tb.l3(h2, h2, h2)));
  return out;
}

} // namespace trilie
