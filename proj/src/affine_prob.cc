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

#include "tcluster/affine_prob.h"

#include <sstream>
#include <stdexcept>

namespace tcluster {

std::string rational_str(const Rational &r) {
    std::stringstream ss;
    ss << r.numerator();
    if (r.denominator() != 1) {
        ss << "/" << r.denominator();
    }
    return ss.str();
}

AffineProb AffineProb::q(int k) {
    if (k < 1 || k > 3) {
        throw std::out_of_range("AffineProb::q: index must be 1, 2 or 3");
    }
    AffineProb p;
    p.c_[k] = 1;
    return p;
}

bool AffineProb::is_zero() const {
    for (const Rational &c : c_) {
        if (c.numerator() != 0) {
            return false;
        }
    }
    return true;
}

AffineProb AffineProb::operator+(const AffineProb &o) const {
    AffineProb out = *this;
    out += o;
    return out;
}

AffineProb AffineProb::operator-(const AffineProb &o) const {
    AffineProb out = *this;
    out -= o;
    return out;
}

AffineProb AffineProb::operator-() const {
    return AffineProb{} - *this;
}

AffineProb AffineProb::operator*(const Rational &s) const {
    AffineProb out = *this;
    for (Rational &c : out.c_) {
        c *= s;
    }
    return out;
}

AffineProb &AffineProb::operator+=(const AffineProb &o) {
    for (int k = 0; k < 4; k++) {
        c_[k] += o.c_[k];
    }
    return *this;
}

AffineProb &AffineProb::operator-=(const AffineProb &o) {
    for (int k = 0; k < 4; k++) {
        c_[k] -= o.c_[k];
    }
    return *this;
}

double AffineProb::evaluate(double q1, double q2, double q3) const {
    return boost::rational_cast<double>(c_[0]) + boost::rational_cast<double>(c_[1]) * q1 +
           boost::rational_cast<double>(c_[2]) * q2 + boost::rational_cast<double>(c_[3]) * q3;
}

std::string AffineProb::str() const {
    std::stringstream ss;
    bool first = true;
    for (int k = 0; k < 4; k++) {
        Rational c = c_[k];
        if (c.numerator() == 0) {
            continue;
        }
        bool negative = c.numerator() < 0;
        Rational mag = negative ? -c : c;
        if (first) {
            ss << (negative ? "-" : "");
        } else {
            ss << (negative ? " - " : " + ");
        }
        if (k == 0 || mag != Rational(1)) {
            ss << rational_str(mag);
        }
        if (k > 0) {
            ss << "q" << k;
        }
        first = false;
    }
    if (first) {
        ss << "0";
    }
    return ss.str();
}

AffineProb multiply_first_order(const AffineProb &a, const AffineProb &b) {
    AffineProb out = AffineProb::constant(a.coeff(0) * b.coeff(0));
    for (int k = 1; k < 4; k++) {
        Rational c = a.coeff(0) * b.coeff(k) + a.coeff(k) * b.coeff(0);
        out += AffineProb::q(k) * c;
    }
    return out;
}

}  // namespace tcluster
