// Copyright 2026 The tcluster Authors
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

#ifndef TCLUSTER_AFFINE_PROB_H
#define TCLUSTER_AFFINE_PROB_H

#include <array>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace tcluster {

using Rational = boost::rational<int64_t>;

/// Exact degree-1 polynomial c0 + c1*q1 + c2*q2 + c3*q3 in the thermal error
/// probabilities, used for first-order channel algebra.
class AffineProb {
   public:
    AffineProb() = default;
    AffineProb(Rational c0, Rational c1, Rational c2, Rational c3) : c_{c0, c1, c2, c3} {
    }
    static AffineProb constant(Rational c) {
        return {c, 0, 0, 0};
    }
    /// The formal variable q_k, k in {1, 2, 3}.
    static AffineProb q(int k);

    const Rational &coeff(int k) const {
        return c_.at(k);
    }
    bool is_zero() const;

    AffineProb operator+(const AffineProb &o) const;
    AffineProb operator-(const AffineProb &o) const;
    AffineProb operator-() const;
    AffineProb operator*(const Rational &s) const;
    AffineProb &operator+=(const AffineProb &o);
    AffineProb &operator-=(const AffineProb &o);
    bool operator==(const AffineProb &o) const = default;

    double evaluate(double q1, double q2, double q3) const;

    /// e.g. "1 - 2q1 - 6q2 - 6q3", "q2 + q3", "0".
    std::string str() const;

   private:
    std::array<Rational, 4> c_{};
};

/// Product truncated at total degree 1.
AffineProb multiply_first_order(const AffineProb &a, const AffineProb &b);

std::string rational_str(const Rational &r);

}  // namespace tcluster

#endif
