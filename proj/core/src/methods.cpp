// Copyright 2026 The mcdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mcdm/methods.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mcdm/normalize.hpp"
#include "mcdm/reference.hpp"

namespace mcdm {
namespace {

void prepare(Method method, const DecisionProblem& problem, const MethodParams& params) {
  const Method methods[] = {method};
  auto issues = validate_problem(problem, methods);
  auto param_issues = validate_params(params);
  issues.insert(issues.end(), param_issues.begin(), param_issues.end());
  if (!issues.empty()) throw Error(std::move(issues));
}

MethodResult finish(Method method, std::vector<double> scores) {
  MethodResult result;
  result.method = method;
  result.orientation = orientation_of(method);
  result.ranks = rank_from_scores(scores, result.orientation);
  result.scores = std::move(scores);
  return result;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double taxicab(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) sum += std::abs(a[j] - b[j]);
  return sum;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }
double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

Error degenerate_problem(const std::string& what) {
  return Error(ErrorCode::DegenerateProblem, what);
}

// Compromise set from the acceptable-advantage and acceptable-stability
// conditions. Returns indices in Q order.
std::vector<std::size_t> vikor_compromise(const std::vector<double>& s,
                                          const std::vector<double>& r,
                                          const std::vector<double>& q, bool& advantage,
                                          bool& stability) {
  const std::size_t m = q.size();
  const auto q_ranks = rank_from_scores(q, Orientation::LowerBetter);
  const auto order = order_by_rank(q_ranks);
  const std::size_t first = order[0];
  const std::size_t second = order[1];

  advantage = q[second] - q[first] >= 1.0 / static_cast<double>(m - 1);
  const auto s_ranks = rank_from_scores(s, Orientation::LowerBetter);
  const auto r_ranks = rank_from_scores(r, Orientation::LowerBetter);
  stability = s_ranks[first] == 1 || r_ranks[first] == 1;

  if (advantage && stability) return {first};
  if (advantage) return {first, second};

  // Q(a_d) - Q(a_1) grows with d while 1/(d - 1) shrinks, so the admissible
  // d form a prefix and the scan can stop at the first failure.
  std::vector<std::size_t> set{first};
  for (std::size_t d = 2; d <= m; ++d) {
    const std::size_t candidate = order[d - 1];
    if (q[candidate] - q[first] < 1.0 / static_cast<double>(d - 1)) {
      set.push_back(candidate);
    } else {
      break;
    }
  }
  return set;
}

}  // namespace

MethodResult topsis(const DecisionProblem& problem, const MethodParams& params) {
  prepare(Method::Topsis, problem, params);
  const auto weighted = apply_weights(vector_normalize(problem), problem.criteria);
  const auto ideals = ideal_solutions(weighted);
  const std::size_t m = weighted.values.rows();

  std::vector<double> s_plus(m), s_minus(m), scores(m);
  for (std::size_t i = 0; i < m; ++i) {
    s_plus[i] = euclidean(weighted.values.row(i), ideals.positive.values);
    s_minus[i] = euclidean(weighted.values.row(i), ideals.negative.values);
    if (s_plus[i] + s_minus[i] == 0.0) {
      throw degenerate_problem("positive and negative ideal coincide; every column is constant");
    }
    scores[i] = s_minus[i] / (s_minus[i] + s_plus[i]);
  }

  auto result = finish(Method::Topsis, std::move(scores));
  result.diagnostics["weighted"] = weighted.values;
  result.diagnostics["pis"] = ideals.positive.values;
  result.diagnostics["nis"] = ideals.negative.values;
  result.diagnostics["s_plus"] = std::move(s_plus);
  result.diagnostics["s_minus"] = std::move(s_minus);
  return result;
}

MethodResult gra(const DecisionProblem& problem, const MethodParams& params) {
  prepare(Method::Gra, problem, params);
  const auto normalized = maxmin_normalize(problem);
  const auto reference = ideal_solutions(normalized).positive.values;
  const Matrix& f = normalized.values;
  const std::size_t m = f.rows();
  const std::size_t n = f.cols();

  Matrix delta(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) delta(i, j) = std::abs(reference[j] - f(i, j));
  }
  double dmin = delta(0, 0);
  double dmax = delta(0, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dmin = std::min(dmin, delta(i, j));
      dmax = std::max(dmax, delta(i, j));
    }
  }

  const bool weighted = params.gra_variant == GraVariant::Weighted;
  const double zeta = weighted ? params.gra_zeta : 1.0;
  Matrix grc(m, n);
  std::vector<double> scores(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      grc(i, j) = (dmin + zeta * dmax) / (delta(i, j) + zeta * dmax);
      scores[i] += weighted ? problem.criteria[j].weight * grc(i, j) : grc(i, j);
    }
    if (!weighted) scores[i] /= static_cast<double>(n);
  }

  auto result = finish(Method::Gra, std::move(scores));
  result.diagnostics["normalized"] = f;
  result.diagnostics["delta"] = std::move(delta);
  result.diagnostics["grc"] = std::move(grc);
  return result;
}

MethodResult vikor(const DecisionProblem& problem, const MethodParams& params) {
  prepare(Method::Vikor, problem, params);
  const auto deviation = vikor_deviation_normalize(problem);
  const Matrix& f = deviation.values;
  const std::size_t m = f.rows();

  std::vector<double> s(m, 0.0), r(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const double term = problem.criteria[j].weight * f(i, j);
      s[i] += term;
      r[i] = std::max(r[i], term);
    }
  }

  const double s_best = min_of(s), s_worst = max_of(s);
  const double r_best = min_of(r), r_worst = max_of(r);
  const double gamma = params.vikor_gamma;
  std::vector<double> q(m);
  for (std::size_t i = 0; i < m; ++i) {
    // A measure that does not discriminate contributes nothing.
    const double s_term = s_worst == s_best ? 0.0 : (s[i] - s_best) / (s_worst - s_best);
    const double r_term = r_worst == r_best ? 0.0 : (r[i] - r_best) / (r_worst - r_best);
    q[i] = gamma * s_term + (1.0 - gamma) * r_term;
  }

  bool advantage = false;
  bool stability = false;
  const auto set = vikor_compromise(s, r, q, advantage, stability);
  std::vector<std::string> labels;
  for (std::size_t idx : set) labels.push_back(problem.alternatives[idx]);

  auto result = finish(Method::Vikor, q);
  result.diagnostics["normalized"] = f;
  result.diagnostics["s"] = std::move(s);
  result.diagnostics["r"] = std::move(r);
  result.diagnostics["q"] = std::move(q);
  result.diagnostics["compromise_set"] = std::move(labels);
  result.diagnostics["acceptable_advantage"] = advantage;
  result.diagnostics["acceptable_stability"] = stability;
  return result;
}

MethodResult edas(const DecisionProblem& problem, const MethodParams& params) {
  prepare(Method::Edas, problem, params);
  const Matrix f = problem.matrix();
  const auto average = average_solution_raw(problem).values;
  const std::size_t m = f.rows();
  const std::size_t n = f.cols();

  Matrix pda(m, n), nda(m, n);
  std::vector<double> sp(m, 0.0), sn(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double above = std::max(0.0, f(i, j) - average[j]) / average[j];
      const double below = std::max(0.0, average[j] - f(i, j)) / average[j];
      const bool maximize = problem.criteria[j].direction == Direction::Maximize;
      pda(i, j) = maximize ? above : below;
      nda(i, j) = maximize ? below : above;
      sp[i] += problem.criteria[j].weight * pda(i, j);
      sn[i] += problem.criteria[j].weight * nda(i, j);
    }
  }
  const double sp_max = max_of(sp);
  const double sn_max = max_of(sn);
  if (sp_max == 0.0 || sn_max == 0.0) {
    throw degenerate_problem("no alternative deviates from the average solution");
  }

  std::vector<double> nsp(m), nsn(m), scores(m);
  for (std::size_t i = 0; i < m; ++i) {
    nsp[i] = sp[i] / sp_max;
    nsn[i] = 1.0 - sn[i] / sn_max;
    scores[i] = 0.5 * (nsp[i] + nsn[i]);
  }

  auto result = finish(Method::Edas, std::move(scores));
  result.diagnostics["average"] = average;
  result.diagnostics["pda"] = std::move(pda);
  result.diagnostics["nda"] = std::move(nda);
  result.diagnostics["sp"] = std::move(sp);
  result.diagnostics["sn"] = std::move(sn);
  result.diagnostics["nsp"] = std::move(nsp);
  result.diagnostics["nsn"] = std::move(nsn);
  return result;
}

MethodResult mabac(const DecisionProblem& problem, const MethodParams& params) {
  prepare(Method::Mabac, problem, params);
  const auto normalized = maxmin_normalize(problem);
  const auto weighted = mabac_weighting(normalized, problem.criteria);
  const auto border = border_approximation(weighted).values;
  const std::size_t m = weighted.values.rows();

  std::vector<double> scores(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < border.size(); ++j) scores[i] += weighted.values(i, j) - border[j];
  }

  auto result = finish(Method::Mabac, std::move(scores));
  result.diagnostics["normalized"] = normalized.values;
  result.diagnostics["weighted"] = weighted.values;
  result.diagnostics["border"] = border;
  return result;
}

MethodResult codas(const DecisionProblem& problem, const MethodParams& params) {
  prepare(Method::Codas, problem, params);
  const auto weighted = apply_weights(max_normalize(problem), problem.criteria);
  const auto nis = ideal_solutions(weighted).negative.values;
  const std::size_t m = weighted.values.rows();

  std::vector<double> e(m), t(m);
  for (std::size_t i = 0; i < m; ++i) {
    e[i] = euclidean(weighted.values.row(i), nis);
    t[i] = taxicab(weighted.values.row(i), nis);
  }

  Matrix h(m, m);
  std::vector<double> scores(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      const double de = e[i] - e[k];
      const double psi = std::abs(de) >= params.codas_tau ? 1.0 : 0.0;
      h(i, k) = de + psi * (t[i] - t[k]);
      scores[i] += h(i, k);
    }
  }

  auto result = finish(Method::Codas, std::move(scores));
  result.diagnostics["weighted"] = weighted.values;
  result.diagnostics["nis"] = nis;
  result.diagnostics["e"] = std::move(e);
  result.diagnostics["t"] = std::move(t);
  result.diagnostics["h"] = std::move(h);
  return result;
}

MethodResult piv(const DecisionProblem& problem, const MethodParams& params) {
  prepare(Method::Piv, problem, params);
  const auto weighted = apply_weights(vector_normalize(problem), problem.criteria);
  const auto pis = ideal_solutions(weighted).positive.values;
  const std::size_t m = weighted.values.rows();

  std::vector<double> scores(m);
  for (std::size_t i = 0; i < m; ++i) scores[i] = taxicab(weighted.values.row(i), pis);

  auto result = finish(Method::Piv, std::move(scores));
  result.diagnostics["weighted"] = weighted.values;
  result.diagnostics["pis"] = pis;
  return result;
}

MethodResult marcos(const DecisionProblem& problem, const MethodParams& params) {
  prepare(Method::Marcos, problem, params);
  const auto ideals = ideal_solutions(problem);
  const std::size_t m = problem.num_alternatives();
  const std::size_t n = problem.num_criteria();

  // Rows m and m + 1 hold the positive and negative ideal.
  auto rows = problem.values;
  rows.push_back(ideals.positive.values);
  rows.push_back(ideals.negative.values);
  const auto extended =
      apply_weights(max_normalize(Matrix::from_rows(rows), problem.directions()),
                    problem.criteria);

  std::vector<double> sums(m + 2, 0.0);
  for (std::size_t i = 0; i < m + 2; ++i) {
    for (std::size_t j = 0; j < n; ++j) sums[i] += extended.values(i, j);
  }
  const double s_pos = sums[m];
  const double s_neg = sums[m + 1];

  std::vector<double> s(sums.begin(), sums.begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<double> k_plus(m), k_minus(m), f_plus(m), f_minus(m), scores(m);
  for (std::size_t i = 0; i < m; ++i) {
    k_plus[i] = s[i] / s_pos;
    k_minus[i] = s[i] / s_neg;
    f_plus[i] = k_minus[i] / (k_plus[i] + k_minus[i]);
    f_minus[i] = k_plus[i] / (k_plus[i] + k_minus[i]);
    scores[i] = (k_plus[i] + k_minus[i]) /
                (1.0 + (1.0 - f_plus[i]) / f_plus[i] + (1.0 - f_minus[i]) / f_minus[i]);
  }

  auto result = finish(Method::Marcos, std::move(scores));
  result.diagnostics["extended_weighted"] = extended.values;
  result.diagnostics["s"] = std::move(s);
  result.diagnostics["s_pos"] = s_pos;
  result.diagnostics["s_neg"] = s_neg;
  result.diagnostics["k_plus"] = std::move(k_plus);
  result.diagnostics["k_minus"] = std::move(k_minus);
  result.diagnostics["f_k_plus"] = std::move(f_plus);
  result.diagnostics["f_k_minus"] = std::move(f_minus);
  return result;
}

MethodResult probid(const DecisionProblem& problem, const MethodParams& params) {
  prepare(Method::Probid, problem, params);
  const auto weighted = apply_weights(vector_normalize(problem), problem.criteria);
  const auto tiers = tiered_ideals(weighted);
  const auto average = average_solution_weighted(weighted).values;
  const std::size_t m = weighted.values.rows();
  const std::size_t n = weighted.values.cols();

  // Tier ranges (1-based, inclusive). For odd m the middle tier is shared.
  const std::size_t pos_last = m % 2 == 1 ? (m + 1) / 2 : m / 2;
  const std::size_t neg_first = m % 2 == 1 ? (m + 1) / 2 : m / 2 + 1;

  Matrix tier_values(m, n);
  Matrix distances(m, m);
  std::vector<double> s_avg(m), s_pos(m, 0.0), s_neg(m, 0.0), ratio(m), scores(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < n; ++j) tier_values(k, j) = tiers[k].values[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 1; k <= m; ++k) {
      distances(i, k - 1) = euclidean(weighted.values.row(i), tiers[k - 1].values);
    }
    s_avg[i] = euclidean(weighted.values.row(i), average);
    for (std::size_t k = 1; k <= pos_last; ++k) {
      s_pos[i] += distances(i, k - 1) / static_cast<double>(k);
    }
    for (std::size_t k = neg_first; k <= m; ++k) {
      s_neg[i] += distances(i, k - 1) / static_cast<double>(m - k + 1);
    }
    if (s_neg[i] == 0.0 && s_pos[i] == 0.0) {
      throw degenerate_problem("alternative " + problem.alternatives[i] +
                               " coincides with every tier");
    }
    // Sitting on the negative tiers sends the ratio to infinity and the
    // first term to its limit of 0.
    if (s_neg[i] == 0.0) {
      ratio[i] = std::numeric_limits<double>::infinity();
      scores[i] = s_avg[i];
    } else {
      ratio[i] = s_pos[i] / s_neg[i];
      scores[i] = 1.0 / (1.0 + ratio[i] * ratio[i]) + s_avg[i];
    }
  }

  auto result = finish(Method::Probid, std::move(scores));
  result.diagnostics["weighted"] = weighted.values;
  result.diagnostics["tiers"] = std::move(tier_values);
  result.diagnostics["average"] = average;
  result.diagnostics["distances"] = std::move(distances);
  result.diagnostics["s_avg"] = std::move(s_avg);
  result.diagnostics["s_pos_ideal"] = std::move(s_pos);
  result.diagnostics["s_neg_ideal"] = std::move(s_neg);
  result.diagnostics["r"] = std::move(ratio);
  return result;
}

MethodResult run_method(Method method, const DecisionProblem& problem,
                        const MethodParams& params) {
  switch (method) {
    case Method::Topsis: return topsis(problem, params);
    case Method::Gra: return gra(problem, params);
    case Method::Vikor: return vikor(problem, params);
    case Method::Edas: return edas(problem, params);
    case Method::Mabac: return mabac(problem, params);
    case Method::Codas: return codas(problem, params);
    case Method::Piv: return piv(problem, params);
    case Method::Marcos: return marcos(problem, params);
    case Method::Probid: return probid(problem, params);
  }
  throw std::invalid_argument("run_method: unknown method");
}

}  // namespace mcdm
