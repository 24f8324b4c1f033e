#include "modorb/restricted_smatrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "modorb/error.hpp"

namespace modorb::restricted {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (auto n : factors_) {
    if (n <= 0) throw InputError("invariant factors must be positive");
  }
}

std::int64_t FiniteAbelianGroup::order() const {
  std::int64_t n = 1;
  for (auto f : factors_) n *= f;
  return n;
}

Element FiniteAbelianGroup::multiply(const Element& x, const Element& y) const {
  Element z(factors_.size());
  for (std::size_t c = 0; c < factors_.size(); ++c) z[c] = (x[c] + y[c]) % factors_[c];
  return z;
}

Element FiniteAbelianGroup::inverse(const Element& x) const {
  Element z(factors_.size());
  for (std::size_t c = 0; c < factors_.size(); ++c) z[c] = (factors_[c] - x[c]) % factors_[c];
  return z;
}

bool FiniteAbelianGroup::contains(const Element& x) const {
  if (x.size() != factors_.size()) return false;
  for (std::size_t c = 0; c < factors_.size(); ++c) {
    if (x[c] < 0 || x[c] >= factors_[c]) return false;
  }
  return true;
}

void FiniteAbelianGroup::require(const Element& x, const std::string& what) const {
  if (!contains(x)) throw InputError(what + " " + to_string(x) + " is not a reduced group element");
}

std::vector<Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  Element x = identity();
  while (true) {
    out.push_back(x);
    std::size_t c = factors_.size();
    while (c > 0) {
      --c;
      if (++x[c] < factors_[c]) break;
      x[c] = 0;
      if (c == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

std::string to_string(const Element& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t c = 0; c < x.size(); ++c) os << (c ? "," : "") << x[c];
  os << ")";
  return os.str();
}

Complex CharacterTable::value(std::size_t row, const Element& x) const {
  const auto it = std::find(elements.begin(), elements.end(), x);
  if (it == elements.end()) throw InputError("character evaluated outside its stabilizer at " + to_string(x));
  return rows.at(row).at(static_cast<std::size_t>(it - elements.begin()));
}

namespace {

std::string orbit_name(const RestrictedInput& in, std::size_t i) {
  return "orbit " + std::to_string(i) + " (" + in.orbits[i].label + ")";
}

void check_orbit(const RestrictedInput& in, std::size_t i, const Tolerances& tol, ValidationReport& report) {
  const auto& g = in.group;
  const auto& orbit = in.orbits[i];
  const auto& table = orbit.characters;
  const auto name = orbit_name(in, i);

  bool elements_ok = g.contains(orbit.twist);
  std::set<Element> distinct;
  for (const auto& h : table.elements) {
    elements_ok = elements_ok && g.contains(h);
    distinct.insert(h);
  }
  elements_ok = elements_ok && distinct.size() == table.elements.size();
  report.add({name + ": elements", elements_ok, 0, "twist and stabilizer are distinct reduced group elements"});
  if (!elements_ok) return;

  bool closed = distinct.count(g.identity()) == 1;
  for (const auto& x : table.elements) {
    for (const auto& y : table.elements) closed = closed && distinct.count(g.multiply(x, y)) == 1;
  }
  report.add({name + ": stabilizer_subgroup", closed, 0, "stabilizer contains 1 and is closed"});

  const bool twist_in = distinct.count(orbit.twist) == 1;
  report.add({name + ": twist_in_stabilizer", twist_in, 0, "g_i lies in G_{M^i}"});

  const auto order = static_cast<Real>(table.elements.size());
  bool shapes = table.dims.size() == table.rows.size() && !table.rows.empty();
  for (const auto& row : table.rows) shapes = shapes && row.size() == table.elements.size();
  if (!shapes) {
    report.add({name + ": character_orthogonality", false, 0, "character table has the wrong shape"});
    return;
  }

  Real orth = 0;
  for (std::size_t l = 0; l < table.rows.size(); ++l) {
    for (std::size_t m = 0; m < table.rows.size(); ++m) {
      Complex sum = 0;
      for (std::size_t c = 0; c < table.elements.size(); ++c) sum += table.rows[l][c] * std::conj(table.rows[m][c]);
      orth = std::max(orth, std::abs(sum - Complex(l == m ? order : 0, 0)));
    }
  }
  report.add({name + ": character_orthogonality", orth <= tol.eps, orth,
              "max |sum_h lambda(h) conj(mu(h)) - |H| delta|"});

  Real dim_sq = 0;
  Real dim_match = 0;
  for (std::size_t l = 0; l < table.rows.size(); ++l) {
    const auto dim = static_cast<Real>(table.dims[l]);
    dim_sq += dim * dim;
    dim_match = std::max(dim_match, std::abs(table.value(l, g.identity()) - Complex(dim, 0)));
  }
  const Real dim_res = std::max(std::abs(dim_sq - order), dim_match);
  report.add({name + ": dimension_sum", dim_res <= tol.eps, dim_res,
              "sum dim^2 = |H| and lambda(1) = dim W_lambda"});
}

}  // namespace

ValidationReport validate_group_data(const RestrictedInput& in, const Tolerances& tol) {
  ValidationReport report;
  for (std::size_t i = 0; i < in.orbits.size(); ++i) check_orbit(in, i, tol, report);

  bool coverage = true;
  std::string missing;
  for (const auto& [key, kappas] : in.transversals) {
    const bool in_range = key.first < in.orbits.size() && key.second < in.orbits.size();
    const std::set<Element> distinct(kappas.begin(), kappas.end());
    coverage = coverage && in_range && distinct.size() == kappas.size();
    for (const auto& kappa : kappas) {
      if (!in.group.contains(kappa) || !in.blocks.count({key.first, key.second, kappa})) {
        coverage = false;
        if (missing.empty()) {
          missing = "; first gap at (" + std::to_string(key.first) + "," + std::to_string(key.second) + "," +
                    to_string(kappa) + ")";
        }
      }
    }
  }
  report.add({"block_coverage", coverage, 0, "every kappa in every C_{i,j} is valid and has a block entry" + missing});

  // S_{M^i, M^j o kappa} = S_{M^i o h, M^j o kappa h} = S_{M^i, M^j o kappa h} for h in G_{M^i}.
  Real invariance = 0;
  for (const auto& [key, value] : in.blocks) {
    const auto& [i, j, kappa] = key;
    if (i >= in.orbits.size() || !in.group.contains(kappa)) continue;
    for (const auto& h : in.orbits[i].characters.elements) {
      if (!in.group.contains(h)) continue;
      const auto other = in.blocks.find({i, j, in.group.multiply(kappa, h)});
      if (other != in.blocks.end()) invariance = std::max(invariance, std::abs(other->second - value));
    }
  }
  report.add({"conjugation_invariance", invariance <= tol.eps, invariance,
              "blocks agree on kappa and kappa h for h in G_{M^i}"});
  return report;
}

RestrictedSMatrix assemble_restricted_S(const RestrictedInput& in) {
  const auto& g = in.group;
  RestrictedSMatrix out;
  for (std::size_t i = 0; i < in.orbits.size(); ++i) {
    for (std::size_t l = 0; l < in.orbits[i].characters.rows.size(); ++l) out.index.emplace_back(i, l);
  }
  const auto n = static_cast<Eigen::Index>(out.index.size());
  out.s = ComplexMatrix::Zero(n, n);

  for (Eigen::Index x = 0; x < n; ++x) {
    const auto [i, lambda] = out.index[static_cast<std::size_t>(x)];
    const auto& oi = in.orbits[i];
    const auto stabilizer_order = static_cast<Real>(oi.characters.elements.size());
    const Element gi_inv = g.inverse(oi.twist);
    for (Eigen::Index y = 0; y < n; ++y) {
      const auto [j, mu] = out.index[static_cast<std::size_t>(y)];
      const auto cij = in.transversals.find({i, j});
      if (cij == in.transversals.end()) continue;
      const auto& oj = in.orbits[j];
      Complex sum = 0;
      for (const auto& kappa : cij->second) {
        const auto block = in.blocks.find({i, j, kappa});
        if (block == in.blocks.end()) {
          throw InputError("missing block S(" + std::to_string(i) + "," + std::to_string(j) + "," +
                           to_string(kappa) + ") for a kappa in C_{i,j}");
        }
        const Element kappa_inv = g.inverse(kappa);
        const Element conj_gj = g.multiply(g.multiply(kappa_inv, oj.twist), kappa);
        const Element conj_gi_inv = g.multiply(g.multiply(kappa, gi_inv), kappa_inv);
        sum += block->second * std::conj(oi.characters.value(lambda, conj_gj)) *
               oj.characters.value(mu, conj_gi_inv);
      }
      out.s(x, y) = sum / stabilizer_order;
    }
  }
  return out;
}

ComplexMatrix vacuum_rows(const RestrictedInput& in) {
  if (in.orbits.empty()) throw InputError("no orbits supplied");
  const auto& g = in.group;
  const auto& vac = in.orbits.front();
  std::size_t cols = 0;
  for (const auto& o : in.orbits) cols += o.characters.rows.size();
  ComplexMatrix out(static_cast<Eigen::Index>(vac.characters.rows.size()), static_cast<Eigen::Index>(cols));

  Eigen::Index y = 0;
  for (std::size_t j = 0; j < in.orbits.size(); ++j) {
    const auto& oj = in.orbits[j];
    const auto cij = in.transversals.find({0, j});
    if (cij == in.transversals.end() || cij->second.empty()) {
      throw InputError("C_{0," + std::to_string(j) + "} must be nonempty");
    }
    const auto block = in.blocks.find({0, j, cij->second.front()});
    if (block == in.blocks.end()) throw InputError("missing vacuum block for orbit " + std::to_string(j));
    const auto stabilizer_order = static_cast<Real>(oj.characters.elements.size());
    for (std::size_t mu = 0; mu < oj.characters.rows.size(); ++mu, ++y) {
      for (std::size_t lambda = 0; lambda < vac.characters.rows.size(); ++lambda) {
        out(static_cast<Eigen::Index>(lambda), y) = block->second *
                                                    vac.characters.value(lambda, g.inverse(oj.twist)) *
                                                    static_cast<Real>(oj.characters.dims[mu]) / stabilizer_order;
      }
    }
  }
  return out;
}

Real transversal_discrepancy(const RestrictedInput& first, const RestrictedInput& second) {
  const auto a = assemble_restricted_S(first);
  const auto b = assemble_restricted_S(second);
  if (a.index != b.index) throw InputError("inputs index different orbit/character sets");
  return max_abs(a.s - b.s);
}

RestrictedSMatrix holomorphic_assemble(const HolomorphicInput& h) {
  const auto& g = h.group;
  if (h.twists.size() != h.characters.size()) throw InputError("one character table per twist is required");
  if (h.twists.empty() || h.twists.front() != g.identity()) throw InputError("the first twist must be the identity");
  const std::set<Element> distinct(h.twists.begin(), h.twists.end());
  if (distinct.size() != h.twists.size() || static_cast<std::int64_t>(distinct.size()) != g.order()) {
    throw InputError("an abelian group needs exactly one twisted module per element");
  }

  RestrictedInput in{g, {}, {}, {}};
  for (std::size_t i = 0; i < h.twists.size(); ++i) {
    g.require(h.twists[i], "twist");
    in.orbits.push_back({"V" + to_string(h.twists[i]), h.twists[i], h.characters[i]});
  }
  for (std::size_t i = 0; i < h.twists.size(); ++i) {
    for (std::size_t j = 0; j < h.twists.size(); ++j) {
      const auto s = h.s.find({i, j});
      if (s == h.s.end()) {
        throw InputError("missing S(V(g_" + std::to_string(i) + "), V(g_" + std::to_string(j) + "))");
      }
      in.transversals[{i, j}] = {g.identity()};
      in.blocks[{i, j, g.identity()}] = s->second;
    }
  }
  return assemble_restricted_S(in);
}

}  // namespace modorb::restricted
