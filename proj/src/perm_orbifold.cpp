#include "modorb/perm_orbifold.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "modorb/error.hpp"
#include "modorb/sl2z.hpp"

namespace modorb::perm {
namespace {

void require_prime(int k) {
  if (!is_prime(k)) throw InputError("k must be prime, got " + std::to_string(k));
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t ipow(std::size_t base, int exp) {
  std::size_t out = 1;
  for (int e = 0; e < exp; ++e) out *= base;
  return out;
}

// Exponent of the phase shared by every twisted entry: -lambda/k + c/(24k).
Rational twisted_exponent(const ModularDatum& v, int k, int i) {
  const Rational kk(k);
  return -v.modules()[static_cast<std::size_t>(i)].h / kk + v.central_charge() / (Rational(24) * kk);
}

}  // namespace

std::string label_kind(const OrbifoldModuleLabel& label) {
  return std::visit(Overloaded{[](const OffDiagonal&) { return std::string("offdiag"); },
                               [](const Diagonal&) { return std::string("diag"); },
                               [](const Twisted&) { return std::string("twisted"); }},
                    label);
}

std::string describe(const OrbifoldModuleLabel& label, const ModularDatum& v) {
  auto name = [&v](int i) { return v.modules()[static_cast<std::size_t>(i)].label; };
  return std::visit(
      Overloaded{[&](const OffDiagonal& o) {
                   std::string s = "offdiag(";
                   for (std::size_t j = 0; j < o.tuple.size(); ++j) s += (j ? "," : "") + name(o.tuple[j]);
                   return s + ")";
                 },
                 [&](const Diagonal& d) { return "diag(" + name(d.i) + ";a=" + std::to_string(d.a) + ")"; },
                 [&](const Twisted& t) {
                   return "twisted(r=" + std::to_string(t.r) + ";" + name(t.i) + ";a=" + std::to_string(t.a) + ")";
                 }},
      label);
}

std::string to_string(ResidueConvention c) { return c == ResidueConvention::kMinus ? "minus" : "plus"; }

ResidueConvention parse_convention(const std::string& text) {
  if (text == "minus") return ResidueConvention::kMinus;
  if (text == "plus") return ResidueConvention::kPlus;
  throw InputError("convention must be \"minus\" or \"plus\", got \"" + text + "\"");
}

std::vector<int> canonical_rotation(const std::vector<int>& tuple) {
  std::vector<int> best = tuple;
  std::vector<int> rotated = tuple;
  for (std::size_t r = 1; r < tuple.size(); ++r) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (rotated < best) best = rotated;
  }
  return best;
}

std::size_t orbifold_module_count(std::size_t rank, int k) {
  const auto kk = static_cast<std::size_t>(k);
  return (ipow(rank, k) - rank) / kk + rank * kk + rank * kk * (kk - 1);
}

std::vector<OrbifoldModule> enumerate_orbifold_modules(const ModularDatum& v, int k,
                                                       ResidueConvention convention) {
  require_prime(k);
  const int n = static_cast<int>(v.rank());
  const Rational kk(k);
  const auto& mods = v.modules();
  std::vector<OrbifoldModule> out;
  out.reserve(orbifold_module_count(v.rank(), k));

  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < k; ++a) out.push_back({Diagonal{i, a}, mod1(kk * mods[static_cast<std::size_t>(i)].h)});
  }

  // Odometer over [0,n)^k in lexicographic order; orbit representatives
  // are exactly the tuples equal to their own canonical rotation.
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  while (true) {
    const bool constant = std::all_of(tuple.begin(), tuple.end(), [&](int x) { return x == tuple[0]; });
    if (!constant && canonical_rotation(tuple) == tuple) {
      Rational w(0);
      for (int x : tuple) w += mods[static_cast<std::size_t>(x)].h;
      out.push_back({OffDiagonal{tuple}, mod1(w)});
    }
    int pos = k - 1;
    while (pos >= 0 && ++tuple[static_cast<std::size_t>(pos)] == n) tuple[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }

  // Twisted weights: lambda/k + (k^2-1)c/(24k) + m0/k with m0 = (-+ a r) mod k.
  const Rational shift = Rational(k * k - 1) * v.central_charge() / (Rational(24) * kk);
  const int sign = convention == ResidueConvention::kMinus ? -1 : 1;
  for (int r = 1; r < k; ++r) {
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < k; ++a) {
        const int m0 = (((sign * a * r) % k) + k) % k;
        const Rational w = mods[static_cast<std::size_t>(i)].h / kk + shift + Rational(m0, k);
        out.push_back({Twisted{r, i, a}, mod1(w)});
      }
    }
  }
  return out;
}

ComplexMatrix twisted_block_S(const ModularDatum& v, int k, int r, int s) {
  const auto transform = build_A(k, r, s);
  const ComplexMatrix sa = v.s_matrix() * rho_of(transform.matrix, v);
  const auto n = static_cast<Eigen::Index>(v.rank());
  ComplexMatrix block(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Phase left(Rational(transform.a) * twisted_exponent(v, k, static_cast<int>(j)));
    for (Eigen::Index i = 0; i < n; ++i) {
      const Phase right(-Rational(transform.b) * twisted_exponent(v, k, static_cast<int>(i)));
      block(j, i) = (left * right).value() * sa(j, i);
    }
  }
  return block;
}

ComplexMatrix assemble_orbifold_S(const ModularDatum& v, int k) {
  const auto modules = enumerate_orbifold_modules(v, k);
  const auto& s = v.s_matrix();
  const Real inv_k = Real(1) / k;

  std::map<std::pair<int, int>, ComplexMatrix> blocks;
  for (int r = 1; r < k; ++r) {
    for (int t = 1; t < k; ++t) blocks.emplace(std::make_pair(r, t), twisted_block_S(v, k, r, t));
  }

  // Entry between the row label x and the column label y.
  auto entry = [&](const OrbifoldModuleLabel& x, const OrbifoldModuleLabel& y) -> Complex {
    if (const auto* tx = std::get_if<Twisted>(&x)) {
      if (const auto* ty = std::get_if<Twisted>(&y)) {
        const Phase p(Rational(ty->r * tx->a + tx->r * ty->a, k));
        return inv_k * blocks.at({tx->r, ty->r})(tx->i, ty->i) * p.value();
      }
      if (const auto* dy = std::get_if<Diagonal>(&y)) {
        return inv_k * s(tx->i, dy->i) * Phase(Rational(tx->r * dy->a, k)).value();
      }
      return 0;
    }
    if (const auto* ox = std::get_if<OffDiagonal>(&x)) {
      if (const auto* oy = std::get_if<OffDiagonal>(&y)) {
        Complex sum = 0;
        for (int rho = 0; rho < k; ++rho) {
          Complex prod = 1;
          for (int j = 0; j < k; ++j) prod *= s(ox->tuple[static_cast<std::size_t>(j)],
                                                 oy->tuple[static_cast<std::size_t>((j + rho) % k)]);
          sum += prod;
        }
        return sum;
      }
      if (const auto* dy = std::get_if<Diagonal>(&y)) {
        Complex prod = 1;
        for (int i : ox->tuple) prod *= s(i, dy->i);
        return prod;
      }
      return 0;
    }
    const auto& dx = std::get<Diagonal>(x);
    const auto& dy = std::get<Diagonal>(y);
    return inv_k * std::pow(s(dx.i, dy.i), k);
  };

  // Fill the upper triangle from whichever side the case analysis covers and
  // mirror it; the orbifold S-matrix is symmetric.
  auto rank_of = [](const OrbifoldModuleLabel& l) {
    return std::holds_alternative<Twisted>(l) ? 0 : std::holds_alternative<OffDiagonal>(l) ? 1 : 2;
  };
  const auto n = static_cast<Eigen::Index>(modules.size());
  ComplexMatrix out(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = x; y < n; ++y) {
      const auto& lx = modules[static_cast<std::size_t>(x)].label;
      const auto& ly = modules[static_cast<std::size_t>(y)].label;
      const Complex value = rank_of(lx) <= rank_of(ly) ? entry(lx, ly) : entry(ly, lx);
      out(x, y) = value;
      out(y, x) = value;
    }
  }
  return out;
}

std::vector<Phase> orbifold_T(const ModularDatum& v, int k, ResidueConvention convention) {
  const Rational shift = Rational(k) * v.central_charge() / Rational(24);
  std::vector<Phase> t;
  for (const auto& m : enumerate_orbifold_modules(v, k, convention)) t.emplace_back(m.weight_mod1 - shift);
  return t;
}

OrbifoldDatum build_orbifold_datum(const ModularDatum& v, int k, ResidueConvention convention,
                                   const Tolerances& tol) {
  const auto modules = enumerate_orbifold_modules(v, k, convention);
  std::vector<ModuleInfo> infos;
  std::vector<OrbifoldModuleLabel> labels;
  infos.reserve(modules.size());
  labels.reserve(modules.size());
  for (const auto& m : modules) {
    infos.push_back({describe(m.label, v), m.weight_mod1});
    labels.push_back(m.label);
  }
  ModularDatum datum(Rational(k) * v.central_charge(), std::move(infos), assemble_orbifold_S(v, k));
  auto report = validate_modular_datum(datum, tol);
  return {std::move(datum), std::move(labels), k, v.rank(), convention, std::move(report)};
}

OrbifoldDatum build_orbifold_datum_auto(const ModularDatum& v, int k, const Tolerances& tol) {
  auto first = build_orbifold_datum(v, k, ResidueConvention::kMinus, tol);
  if (first.report.passed()) return first;
  auto second = build_orbifold_datum(v, k, ResidueConvention::kPlus, tol);
  return second.report.passed() ? second : first;
}

}  // namespace modorb::perm
