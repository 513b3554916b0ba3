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

#pragma once

#include "mcdm/problem.hpp"

namespace mcdm {

// Every method validates its input (structure plus its own preconditions)
// and throws Error on failure. Scores are full double precision.
//
// Diagnostics carried by each result:
//   topsis  weighted, pis, nis, s_plus, s_minus
//   gra     normalized, delta, grc
//   vikor   normalized, s, r, q, compromise_set, acceptable_advantage,
//           acceptable_stability
//   edas    average, pda, nda, sp, sn, nsp, nsn
//   mabac   normalized, weighted, border
//   codas   weighted, nis, e, t, h
//   piv     weighted, pis
//   marcos  extended_weighted, s, s_pos, s_neg, k_plus, k_minus, f_k_plus,
//           f_k_minus
//   probid  weighted, tiers, average, distances, s_avg, s_pos_ideal,
//           s_neg_ideal, r

/// Closeness to the positive ideal relative to both ideals (Euclidean).
MethodResult topsis(const DecisionProblem& problem, const MethodParams& params = {});

/// Grey relational grade against the all-ones reference of a Max-Min matrix.
/// Unweighted: mean of (dmin + dmax)/(d + dmax). Weighted: weighted sum of
/// (dmin + zeta dmax)/(d + zeta dmax).
MethodResult gra(const DecisionProblem& problem, const MethodParams& params = {});

/// Group utility S, individual regret R and their blend Q. Lower Q is better.
/// The compromise set is attached as a diagnostic and never alters ranks.
MethodResult vikor(const DecisionProblem& problem, const MethodParams& params = {});

/// Positive and negative distances from the raw average solution.
MethodResult edas(const DecisionProblem& problem, const MethodParams& params = {});

/// Sum of distances from the geometric-mean border approximation area.
MethodResult mabac(const DecisionProblem& problem, const MethodParams& params = {});

/// Euclidean distance from the negative ideal, with the taxicab distance
/// added for pairs whose Euclidean gap reaches tau.
MethodResult codas(const DecisionProblem& problem, const MethodParams& params = {});

/// L1 distance to the positive ideal. Lower is better.
MethodResult piv(const DecisionProblem& problem, const MethodParams& params = {});

/// Utility degrees against raw-domain ideals appended to the matrix.
MethodResult marcos(const DecisionProblem& problem, const MethodParams& params = {});

/// Distances to every tier of ideal solutions plus the average solution.
MethodResult probid(const DecisionProblem& problem, const MethodParams& params = {});

MethodResult run_method(Method method, const DecisionProblem& problem,
                        const MethodParams& params = {});

}  // namespace mcdm
