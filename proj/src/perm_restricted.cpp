#include "modorb/perm_restricted.hpp"

#include <map>
#include <variant>

#include "modorb/perm_orbifold.hpp"
#include "modorb/phase.hpp"

namespace modorb::perm {

using restricted::CharacterTable;
using restricted::Element;
using restricted::FiniteAbelianGroup;
using restricted::OrbitSpec;

namespace {

// lambda_a(g^m) = exp(-2 pi i a m / k) on the full group Z_k.
CharacterTable cyclic_characters(int k) {
  CharacterTable t;
  for (int m = 0; m < k; ++m) t.elements.push_back({m});
  for (int a = 0; a < k; ++a) {
    std::vector<Complex> row;
    for (int m = 0; m < k; ++m) row.push_back(Phase(Rational(-a * m, k)).value());
    t.rows.push_back(std::move(row));
    t.dims.push_back(1);
  }
  return t;
}

CharacterTable trivial_characters() { return {{{0}}, {{Complex(1, 0)}}, {1}}; }

enum class OrbitKind { kDiagonal, kOffDiagonal, kTwisted };

struct OrbitInfo {
  OrbitKind kind;
  int r = 0;  // twist power
  int i = 0;  // module of V (diagonal, twisted)
  std::vector<int> tuple;  // off-diagonal
};

}  // namespace

PermutationRestrictedData permutation_restricted_input(const ModularDatum& v, int k, bool alternate_transversals) {
  const auto modules = enumerate_orbifold_modules(v, k);
  const auto& s = v.s_matrix();
  PermutationRestrictedData out{{FiniteAbelianGroup({k}), {}, {}, {}}, {}};
  auto& in = out.input;

  // Orbits in the orbifold enumeration order; characters of one orbit are
  // consecutive in that order (a runs fastest).
  std::vector<OrbitInfo> infos;
  for (std::size_t x = 0; x < modules.size(); ++x) {
    const auto& label = modules[x].label;
    if (const auto* d = std::get_if<Diagonal>(&label)) {
      if (d->a == 0) {
        infos.push_back({OrbitKind::kDiagonal, 0, d->i, {}});
        in.orbits.push_back({describe(Diagonal{d->i, 0}, v), {0}, cyclic_characters(k)});
      }
    } else if (const auto* o = std::get_if<OffDiagonal>(&label)) {
      infos.push_back({OrbitKind::kOffDiagonal, 0, 0, o->tuple});
      in.orbits.push_back({describe(label, v), {0}, trivial_characters()});
    } else {
      const auto& t = std::get<Twisted>(label);
      if (t.a == 0) {
        infos.push_back({OrbitKind::kTwisted, t.r, t.i, {}});
        in.orbits.push_back({describe(Twisted{t.r, t.i, 0}, v), {t.r}, cyclic_characters(k)});
      }
    }
    out.orbifold_index.push_back(x);
  }

  std::map<std::pair<int, int>, ComplexMatrix> twisted;
  for (int r = 1; r < k; ++r) {
    for (int t = 1; t < k; ++t) twisted.emplace(std::make_pair(r, t), twisted_block_S(v, k, r, t));
  }

  // S-matrix of V^{tensor k} between plain tensor products.
  auto tensor_s = [&](const std::vector<int>& x, const std::vector<int>& y) {
    Complex p = 1;
    for (std::size_t m = 0; m < x.size(); ++m) p *= s(x[m], y[m]);
    return p;
  };
  auto constant = [k](int i) { return std::vector<int>(static_cast<std::size_t>(k), i); };
  // M^{t} o g^m = M^{t_{1+m}, ..., t_{k+m}}.
  auto rotate = [k](const std::vector<int>& t, int m) {
    std::vector<int> out(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) out[j] = t[(j + static_cast<std::size_t>(m)) % static_cast<std::size_t>(k)];
    return out;
  };

  const Element one{0};
  const Element gen{k > 1 ? 1 : 0};
  for (std::size_t i = 0; i < infos.size(); ++i) {
    for (std::size_t j = 0; j < infos.size(); ++j) {
      const auto& x = infos[i];
      const auto& y = infos[j];
      const auto key = std::make_pair(i, j);
      auto all_kappas = [&](auto value_of) {
        std::vector<Element> c;
        for (int m = 0; m < k; ++m) {
          c.push_back({m});
          in.blocks[{i, j, Element{m}}] = value_of(m);
        }
        in.transversals[key] = c;
      };
      // Orbit j is a single module, so any kappa names it; supply them all.
      auto singleton = [&](Complex value) {
        for (int m = 0; m < k; ++m) in.blocks[{i, j, Element{m}}] = value;
        in.transversals[key] = {alternate_transversals ? gen : one};
      };

      const bool x_twisted = x.kind == OrbitKind::kTwisted;
      const bool y_twisted = y.kind == OrbitKind::kTwisted;
      const bool x_off = x.kind == OrbitKind::kOffDiagonal;
      const bool y_off = y.kind == OrbitKind::kOffDiagonal;

      if ((x_twisted && y_off) || (x_off && y_twisted)) continue;  // C_{i,j} empty
      if (x_twisted && y_twisted) {
        singleton(twisted.at({x.r, y.r})(x.i, y.i));
      } else if (x_twisted || y_twisted) {
        // Untwisted-twisted entries reduce to S of V.
        singleton(s(x.i, y.i));
      } else if (y_off) {
        const auto row = x_off ? x.tuple : constant(x.i);
        all_kappas([&](int m) { return tensor_s(row, rotate(y.tuple, m)); });
      } else {
        const auto row = x_off ? x.tuple : constant(x.i);
        singleton(tensor_s(row, constant(y.i)));
      }
    }
  }
  return out;
}

}  // namespace modorb::perm
