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

#include "cliffordlearn/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffordlearn {

namespace {

// Regularized lower incomplete gamma P(a, x) by series expansion.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 1000; i++) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-15) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by continued fraction.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; i++) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::fabs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) {
        throw std::domain_error("gamma_q requires x >= 0 and a > 0");
    }
    if (x == 0.0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return 1.0 - gamma_p_series(a, x);
    }
    return gamma_q_cf(a, x);
}

}  // namespace

MeanStats mean_stats(const std::vector<double>& values) {
    MeanStats s;
    s.count = values.size();
    if (s.count == 0) {
        return s;
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(s.count);
    if (s.count < 2) {
        return s;
    }
    double ss = 0.0;
    for (double v : values) {
        double d = v - s.mean;
        ss += d * d;
    }
    double var = ss / static_cast<double>(s.count - 1);
    s.std_error = std::sqrt(var / static_cast<double>(s.count));
    return s;
}

double binomial_std_error(double p_hat, size_t trials) {
    if (trials == 0) {
        return 0.0;
    }
    return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

double chi_square_stat(const std::vector<uint64_t>& observed,
                       const std::vector<double>& expected) {
    if (observed.size() != expected.size()) {
        throw std::invalid_argument("observed/expected length mismatch");
    }
    double stat = 0.0;
    for (size_t i = 0; i < observed.size(); i++) {
        if (expected[i] <= 0.0) {
            throw std::invalid_argument("expected counts must be positive");
        }
        double d = static_cast<double>(observed[i]) - expected[i];
        stat += d * d / expected[i];
    }
    return stat;
}

double chi_square_pvalue(double stat, size_t df) {
    if (df == 0) {
        return 1.0;
    }
    return gamma_q(static_cast<double>(df) / 2.0, stat / 2.0);
}

size_t hoeffding_sample_count(double lo, double hi, double tau, double delta_prime) {
    if (!(hi > lo) || !(tau > 0.0) || !(delta_prime > 0.0 && delta_prime < 1.0)) {
        throw std::invalid_argument("invalid hoeffding parameters");
    }
    double range = hi - lo;
    double m = std::ceil(range * range * std::log(2.0 / delta_prime) / (2.0 * tau * tau));
    return static_cast<size_t>(m);
}

}  // namespace cliffordlearn
