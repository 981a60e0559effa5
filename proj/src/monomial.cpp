#include "wlp/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wlp/errors.hpp"

namespace wlp {

Monomial Monomial::variable(int num_vars, int j, int power) {
  if (j < 0 || j >= num_vars) throw invalid_input("variable index out of range");
  Monomial m = one(num_vars);
  m.exponents[j] = power;
  return m;
}

int Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
  if (exponents.size() != other.exponents.size()) return false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (exponents.size() != other.exponents.size()) {
    throw invalid_input("monomial product across different variable counts");
  }
  Monomial result = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    result.exponents[i] += other.exponents[i];
  }
  return result;
}

Monomial Monomial::times_variable(int j) const {
  Monomial result = *this;
  result.exponents.at(j) += 1;
  return result;
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << i;
    if (exponents[i] > 1) os << "^" << exponents[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  // Within a degree: larger exponent on the earliest differing variable
  // sorts first.
  return std::lexicographical_compare(a.exponents.begin(), a.exponents.end(),
                                      b.exponents.begin(), b.exponents.end(),
                                      [](int x, int y) { return x > y; });
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> generators)
    : num_vars_(num_vars) {
  if (num_vars < 0) throw invalid_input("negative variable count");
  if (num_vars == 0 && !generators.empty()) {
    throw invalid_input("generators given over an empty variable set");
  }
  for (const Monomial& g : generators) {
    if (g.num_vars() != num_vars) {
      throw invalid_input("generator exponent length does not match the variable count");
    }
    for (int e : g.exponents) {
      if (e < 0) throw invalid_input("negative exponent in generator " + g.str());
    }
    if (g.degree() == 0) {
      throw invalid_input("degree-0 generator: the unit ideal is not a valid input");
    }
  }
  std::sort(generators.begin(), generators.end(), canonical_less);
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  // Canonical order is graded, so any divisor of g was already kept.
  for (const Monomial& g : generators) {
    bool redundant = false;
    for (const Monomial& kept : gens_) {
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

MonomialIdeal minimalize(std::vector<Monomial> gens, int num_vars) {
  return MonomialIdeal(num_vars, std::move(gens));
}

bool is_artinian(const MonomialIdeal& ideal) {
  for (int j = 0; j < ideal.num_vars(); ++j) {
    bool pure_power = false;
    for (const Monomial& g : ideal.generators()) {
      if (g.exponents[j] == g.degree()) {
        pure_power = true;
        break;
      }
    }
    if (!pure_power) return false;
  }
  return true;
}

namespace {

void require_artinian(const MonomialIdeal& ideal) {
  if (!is_artinian(ideal)) {
    throw invalid_input("non-Artinian ideal: some variable has no pure-power generator");
  }
}

void for_each_monomial_rec(std::vector<int>& exps, int var, int remaining,
                           const std::function<void(const Monomial&)>& fn) {
  const int n = static_cast<int>(exps.size());
  if (var == n - 1) {
    exps[var] = remaining;
    fn(Monomial(exps));
    exps[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    for_each_monomial_rec(exps, var + 1, remaining - e, fn);
  }
  exps[var] = 0;
}

}  // namespace

void for_each_monomial(int num_vars, int deg,
                       const std::function<void(const Monomial&)>& fn) {
  if (deg < 0) return;
  if (num_vars == 0) {
    if (deg == 0) fn(Monomial::one(0));
    return;
  }
  std::vector<int> exps(num_vars, 0);
  for_each_monomial_rec(exps, 0, deg, fn);
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int deg) {
  require_artinian(ideal);
  std::vector<Monomial> result;
  for_each_monomial(ideal.num_vars(), deg, [&](const Monomial& m) {
    if (!ideal.contains(m)) result.push_back(m);
  });
  return result;  // emitted in canonical order already
}

const std::vector<Monomial>& GradedBasis::at(int deg) const {
  static const std::vector<Monomial> empty;
  if (deg < 0 || deg >= static_cast<int>(by_degree.size())) return empty;
  return by_degree[deg];
}

GradedBasis graded_basis(const MonomialIdeal& ideal) {
  require_artinian(ideal);
  GradedBasis basis;
  for (int d = 0;; ++d) {
    std::vector<Monomial> level = standard_monomials(ideal, d);
    if (level.empty()) break;
    basis.by_degree.push_back(std::move(level));
  }
  return basis;
}

HilbertFunction hilbert_function(const MonomialIdeal& ideal) {
  require_artinian(ideal);
  HilbertFunction h;
  for (int d = 0;; ++d) {
    std::int64_t count = 0;
    for_each_monomial(ideal.num_vars(), d, [&](const Monomial& m) {
      if (!ideal.contains(m)) ++count;
    });
    if (count == 0) break;
    h.push_back(count);
  }
  return h;
}

int socle_degree(const MonomialIdeal& ideal) {
  return static_cast<int>(hilbert_function(ideal).size()) - 1;
}

std::vector<Monomial> socle(const MonomialIdeal& ideal) {
  require_artinian(ideal);
  std::vector<Monomial> result;
  const GradedBasis basis = graded_basis(ideal);
  for (const auto& level : basis.by_degree) {
    for (const Monomial& m : level) {
      bool annihilated = true;
      for (int j = 0; j < ideal.num_vars(); ++j) {
        if (!ideal.contains(m.times_variable(j))) {
          annihilated = false;
          break;
        }
      }
      if (annihilated) result.push_back(m);
    }
  }
  return result;
}

bool is_level(const MonomialIdeal& ideal) {
  const std::vector<Monomial> soc = socle(ideal);
  const int top = socle_degree(ideal);
  for (const Monomial& m : soc) {
    if (m.degree() != top) return false;
  }
  return true;
}

MonomialIdeal tensor_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_artinian(a);
  require_artinian(b);
  const int na = a.num_vars();
  const int nb = b.num_vars();
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() + b.generators().size());
  for (const Monomial& g : a.generators()) {
    Monomial padded = g;
    padded.exponents.resize(na + nb, 0);
    gens.push_back(std::move(padded));
  }
  for (const Monomial& g : b.generators()) {
    Monomial shifted = Monomial::one(na + nb);
    for (int j = 0; j < nb; ++j) shifted.exponents[na + j] = g.exponents[j];
    gens.push_back(std::move(shifted));
  }
  return MonomialIdeal(na + nb, std::move(gens));
}

MonomialIdeal truncate_ideal(const MonomialIdeal& ideal, int i) {
  require_artinian(ideal);
  if (i < 0) throw invalid_input("truncation degree must be >= 0");
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() <= i + 1) gens.push_back(g);
  }
  const std::size_t low = gens.size();
  for_each_monomial(ideal.num_vars(), i + 2, [&](const Monomial& m) {
    for (std::size_t t = 0; t < low; ++t) {
      if (gens[t].divides(m)) return;
    }
    gens.push_back(m);
  });
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.num_vars() != ideal.num_vars()) {
    throw invalid_input("colon monomial has the wrong variable count");
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) {
    Monomial q = Monomial::one(ideal.num_vars());
    for (int j = 0; j < ideal.num_vars(); ++j) {
      q.exponents[j] = std::max(g.exponents[j] - m.exponents[j], 0);
    }
    gens.push_back(std::move(q));
  }
  // A degree-0 quotient means m itself lies in the ideal; the constructor
  // rejects that as the unit ideal.
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

}  // namespace wlp
