#include "wlp/lefschetz.hpp"

#include <algorithm>
#include <map>

#include "wlp/errors.hpp"

namespace wlp {

const char* to_string(FailureMode mode) {
  switch (mode) {
    case FailureMode::injectivity: return "injectivity";
    case FailureMode::surjectivity: return "surjectivity";
    case FailureMode::both: return "both";
  }
  return "?";
}

const char* to_string(SESRule rule) {
  switch (rule) {
    case SESRule::link_injectivity: return "link-injectivity";
    case SESRule::deletion_surjectivity: return "deletion-surjectivity";
  }
  return "?";
}

IntMatrix mult_matrix(const MonomialIdeal& ideal, int degree, int power) {
  if (!is_artinian(ideal)) throw invalid_input("multiplication matrix needs an Artinian ideal");
  if (degree < 0) throw invalid_input("degree must be >= 0");
  if (power < 1) throw invalid_input("power must be >= 1");

  const std::vector<Monomial> source = standard_monomials(ideal, degree);
  const std::vector<Monomial> target = standard_monomials(ideal, degree + power);
  std::map<std::vector<int>, Index> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) {
    row_of.emplace(target[r].exponents, static_cast<Index>(r));
  }

  // Expand (sum of variables)^power: one term per degree-`power` exponent
  // vector, with its multinomial coefficient.
  std::vector<std::pair<Monomial, Int>> terms;
  Int power_factorial = 1;
  for (int t = 2; t <= power; ++t) power_factorial *= t;
  for_each_monomial(ideal.num_vars(), power, [&](const Monomial& alpha) {
    Int coeff = power_factorial;
    for (int e : alpha.exponents) {
      for (int t = 2; t <= e; ++t) coeff /= t;
    }
    terms.emplace_back(alpha, coeff);
  });

  IntMatrix m = IntMatrix::Zero(static_cast<Index>(target.size()),
                                static_cast<Index>(source.size()));
  for (std::size_t c = 0; c < source.size(); ++c) {
    for (const auto& [alpha, coeff] : terms) {
      const Monomial product = source[c] * alpha;
      const auto it = row_of.find(product.exponents);
      if (it != row_of.end()) m(it->second, static_cast<Index>(c)) += coeff;
    }
  }
  return m;
}

std::int64_t WLPReport::rank_at(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(degrees.size())) return 0;
  return degrees[static_cast<std::size_t>(degree)].rank;
}

bool WLPReport::injective_at(int degree) const {
  return rank_at(degree) == dim(degree);
}

bool WLPReport::surjective_at(int degree) const {
  return rank_at(degree) == dim(degree + 1);
}

WLPReport wlp_report(const MonomialIdeal& ideal, std::int64_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw invalid_input("characteristic must be 0 or a prime");
  }
  WLPReport report;
  report.characteristic = characteristic;
  report.hilbert = hilbert_function(ideal);
  const int d = static_cast<int>(report.hilbert.size()) - 1;
  for (int i = 0; i < d; ++i) {
    const IntMatrix m = mult_matrix(ideal, i, 1);
    DegreeRecord rec;
    rec.degree = i;
    rec.dim_source = report.hilbert[i];
    rec.dim_target = report.hilbert[i + 1];
    rec.rank = characteristic == 0
                   ? rank_rational(m)
                   : rank_mod_p(m, characteristic);
    rec.full = rec.rank == rec.max_rank();
    report.degrees.push_back(rec);
    if (!rec.full) {
      FailureMode mode;
      if (rec.dim_source < rec.dim_target) {
        mode = FailureMode::injectivity;
      } else if (rec.dim_source > rec.dim_target) {
        mode = FailureMode::surjectivity;
      } else {
        mode = FailureMode::both;
      }
      report.failures.push_back({i, mode});
    }
  }
  // Maps into the zero space in degree >= d are trivially full rank.
  report.has_wlp = report.failures.empty();
  return report;
}

bool char2_chain_condition(const MonomialIdeal& ideal) {
  const int d = socle_degree(ideal);
  for (int i = 0; i + 2 <= d; ++i) {
    const IntMatrix composite = mult_matrix(ideal, i + 1, 1) * mult_matrix(ideal, i, 1);
    for (Index r = 0; r < composite.rows(); ++r) {
      for (Index c = 0; c < composite.cols(); ++c) {
        if (mpz_odd_p(composite(r, c).get_mpz_t())) return false;
      }
    }
  }
  return true;
}

SESInference ses_infer(const Graph& graph, const Removal& removal) {
  MonomialIdeal ambient = to_ideal(graph);
  SESInference out;
  out.removal = removal;

  Graph deletion_graph, link_graph;
  int link_shift = 0;
  if (removal.kind == Removal::Kind::vertex) {
    deletion_graph = delete_star_vertex(graph, removal.u).graph;
    link_graph = link_vertex(graph, removal.u).graph;
    link_shift = 1;
  } else {
    deletion_graph = delete_star_edge(graph, removal.u, removal.v);
    link_graph = link_edge(graph, removal.u, removal.v).graph;
    link_shift = 2;
  }
  out.deletion_report = wlp_report(to_ideal(deletion_graph));
  out.link_report = wlp_report(to_ideal(link_graph));

  const HilbertFunction h = hilbert_function(ambient);
  const auto dim = [&h](int i) -> std::int64_t {
    return i >= 0 && i < static_cast<int>(h.size()) ? h[i] : 0;
  };
  out.max_degree = static_cast<int>(h.size()) - 2;

  for (int i = 0; i <= out.max_degree; ++i) {
    // f_{i-1}(Delta) = dim A_i, f_i(Delta) = dim A_{i+1}.
    const std::int64_t f_im1 = dim(i);
    const std::int64_t f_i = dim(i + 1);

    const int t = i - link_shift;
    if (!out.link_report.injective_at(t) && f_i >= f_im1) {
      SESConclusion c;
      c.degree = i;
      c.mode = FailureMode::injectivity;
      c.rule = SESRule::link_injectivity;
      c.witness_degree = t;
      c.witness_rank = out.link_report.rank_at(t);
      c.witness_dim = out.link_report.dim(t);
      c.f_i = f_i;
      c.f_im1 = f_im1;
      out.conclusions.push_back(c);
    }
    if (!out.deletion_report.surjective_at(i) && f_i <= f_im1) {
      SESConclusion c;
      c.degree = i;
      c.mode = FailureMode::surjectivity;
      c.rule = SESRule::deletion_surjectivity;
      c.witness_degree = i;
      c.witness_rank = out.deletion_report.rank_at(i);
      c.witness_dim = out.deletion_report.dim(i + 1);
      c.f_i = f_i;
      c.f_im1 = f_im1;
      out.conclusions.push_back(c);
    }
  }
  return out;
}

}  // namespace wlp
