#include "wlp/tensor.hpp"

#include <algorithm>
#include <sstream>

#include "wlp/errors.hpp"
#include "wlp/lefschetz.hpp"

namespace wlp {

int TensorSpec::total_vars() const {
  int n = 0;
  for (const TensorFactor& f : factors) n += f.dim;
  return n;
}

int TensorSpec::critical_degree() const {
  int k = 0;
  for (const TensorFactor& f : factors) k += f.order - 1;
  return k;
}

namespace {

void validate(const TensorSpec& spec) {
  if (spec.factors.empty()) throw invalid_input("tensor spec needs at least one factor");
  for (const TensorFactor& f : spec.factors) {
    if (f.dim < 1) throw invalid_input("factor dimension must be >= 1");
    if (f.order < 2) throw invalid_input("factor order must be >= 2");
  }
}

void refuse_char2(std::int64_t characteristic, const char* what) {
  if (characteristic == 2) {
    throw invalid_input(std::string(what) +
                        " assumes characteristic != 2; no answer is given in characteristic 2");
  }
}

}  // namespace

TensorSpec parse_tensor_spec(const std::string& text) {
  TensorSpec spec;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      throw invalid_input("bad tensor factor '" + token + "': want dim:order");
    }
    try {
      TensorFactor f;
      f.dim = std::stoi(token.substr(0, colon));
      f.order = std::stoi(token.substr(colon + 1));
      spec.factors.push_back(f);
    } catch (const std::exception&) {
      throw invalid_input("bad tensor factor '" + token + "': want dim:order");
    }
  }
  validate(spec);
  return spec;
}

MonomialIdeal realize(const TensorSpec& spec) {
  validate(spec);
  const int n = spec.total_vars();
  std::vector<Monomial> gens;
  int offset = 0;
  for (const TensorFactor& f : spec.factors) {
    for_each_monomial(f.dim, f.order, [&](const Monomial& block) {
      Monomial g = Monomial::one(n);
      for (int j = 0; j < f.dim; ++j) g.exponents[offset + j] = block.exponents[j];
      gens.push_back(std::move(g));
    });
    offset += f.dim;
  }
  return MonomialIdeal(n, std::move(gens));
}

bool order2_tensor_has_wlp(const TensorSpec& spec, std::int64_t characteristic) {
  validate(spec);
  refuse_char2(characteristic, "the quadratic tensor classification");
  for (const TensorFactor& f : spec.factors) {
    if (f.order != 2) {
      throw invalid_input("the quadratic tensor classification needs all orders = 2");
    }
  }
  const int n = static_cast<int>(spec.factors.size());
  int big = 0;  // factors with dim >= 2
  for (const TensorFactor& f : spec.factors) {
    if (f.dim >= 2) ++big;
  }
  return big <= 1 || (big == 2 && n % 2 == 1);
}

int tensor_failure_degree(const TensorSpec& spec) {
  validate(spec);
  if (spec.factors.size() < 2) {
    throw invalid_input("the failure degree needs at least two factors");
  }
  for (const TensorFactor& f : spec.factors) {
    if (f.dim < 2) {
      throw invalid_input("the failure degree needs every factor dimension >= 2");
    }
  }
  return spec.critical_degree() - 1;
}

FailureWindow failure_window(const MonomialIdeal& ideal,
                             std::int64_t characteristic) {
  const WLPReport report = wlp_report(ideal, characteristic);
  FailureWindow window;
  const int d = static_cast<int>(report.hilbert.size()) - 1;
  for (int t = 0; t <= d; ++t) {
    if (!report.injective_at(t)) window.inj_fail_sources.insert(t);
    if (!report.surjective_at(t)) window.surj_fail_targets.insert(t + 1);
  }
  return window;
}

FailureWindow combine_windows(const FailureWindow& a, const FailureWindow& b) {
  FailureWindow out;
  for (int i : a.surj_fail_targets) {
    for (int j : b.surj_fail_targets) out.surj_fail_targets.insert(i + j);
  }
  for (int i : a.inj_fail_sources) {
    for (int j : b.inj_fail_sources) out.inj_fail_sources.insert(i + j);
  }
  return out;
}

WlpGuarantee power_factor_guarantee(const MonomialIdeal& ideal, int j) {
  if (j < 2) throw invalid_input("truncation order must be >= 2");
  return j >= socle_degree(ideal) + 1 ? WlpGuarantee::guaranteed
                                      : WlpGuarantee::no_guarantee;
}

bool bipartite_cone_has_wlp(int a, int b, int r, std::int64_t characteristic) {
  if (a < 2 || b < 2 || r < 0) throw invalid_input("need a, b >= 2 and r >= 0");
  refuse_char2(characteristic, "the bipartite cone parity rule");
  return r % 2 == 1;
}

}  // namespace wlp
