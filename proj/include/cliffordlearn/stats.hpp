// Copyright 2026 The cliffordlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cliffordlearn {

struct MeanStats {
    double mean = 0.0;
    double std_error = 0.0;
    size_t count = 0;
};

MeanStats mean_stats(const std::vector<double>& values);

// Plug-in standard error of a binomial proportion.
double binomial_std_error(double p_hat, size_t trials);

double chi_square_stat(const std::vector<uint64_t>& observed,
                       const std::vector<double>& expected);

// Upper-tail p-value of the chi-square distribution with df degrees of
// freedom, via the regularized incomplete gamma function.
double chi_square_pvalue(double stat, size_t df);

// Hoeffding sample count for estimating the mean of a [lo, hi]-valued
// function to accuracy tau with failure probability delta_prime.
size_t hoeffding_sample_count(double lo, double hi, double tau, double delta_prime);

}  // namespace cliffordlearn
