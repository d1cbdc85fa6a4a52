// Copyright 2026 The twograph Authors
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

#include "twograph/z4_poly.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "twograph/errors.hpp"

namespace twograph {

Z2Polynomial Z2Polynomial::constant(bool value) {
    Z2Polynomial p;
    if (value) {
        p.terms_.insert(0);
    }
    return p;
}

Z2Polynomial Z2Polynomial::variable(int j) {
    if (j < 0 || j >= 64) {
        throw PreconditionError("variable index " + std::to_string(j) + " outside [0, 64)");
    }
    Z2Polynomial p;
    p.terms_.insert(std::uint64_t{1} << j);
    return p;
}

Z2Polynomial Z2Polynomial::affine(std::uint64_t support, bool constant) {
    Z2Polynomial p = Z2Polynomial::constant(constant);
    for (std::uint64_t rest = support; rest != 0; rest &= rest - 1) {
        p.terms_.insert(rest & (~rest + 1));
    }
    return p;
}

int Z2Polynomial::degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (auto m : terms_) {
        d = std::max(d, std::popcount(m));
    }
    return d;
}

bool Z2Polynomial::evaluate(std::uint64_t assignment) const {
    bool value = false;
    for (auto m : terms_) {
        value ^= (assignment & m) == m;
    }
    return value;
}

Z2Polynomial &Z2Polynomial::operator+=(const Z2Polynomial &other) {
    for (auto m : other.terms_) {
        if (!terms_.erase(m)) {
            terms_.insert(m);
        }
    }
    return *this;
}

Z2Polynomial operator*(const Z2Polynomial &a, const Z2Polynomial &b) {
    Z2Polynomial out;
    for (auto x : a.terms_) {
        for (auto y : b.terms_) {
            const std::uint64_t m = x | y;
            if (!out.terms_.erase(m)) {
                out.terms_.insert(m);
            }
        }
    }
    return out;
}

void Z4Polynomial::add(std::uint64_t monomial, int coefficient) {
    const int c = (((terms_.count(monomial) ? terms_[monomial] : 0) + coefficient) % 4 + 4) % 4;
    if (c == 0) {
        terms_.erase(monomial);
    } else {
        terms_[monomial] = static_cast<std::uint8_t>(c);
    }
}

int Z4Polynomial::coefficient(std::uint64_t monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? 0 : it->second;
}

int Z4Polynomial::degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, std::popcount(m));
    }
    return d;
}

int Z4Polynomial::evaluate(std::uint64_t assignment) const {
    int value = 0;
    for (const auto &[m, c] : terms_) {
        if ((assignment & m) == m) {
            value += c;
        }
    }
    return value & 3;
}

bool Z4Polynomial::is_special_form() const {
    for (const auto &[m, c] : terms_) {
        const int d = std::popcount(m);
        if (d > 2 || (d == 2 && c % 2 != 0)) {
            return false;
        }
    }
    return true;
}

std::string Z4Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    // Order by degree, then by variable indices.
    std::vector<std::pair<std::uint64_t, int>> sorted(terms_.begin(), terms_.end());
    auto key = [](std::uint64_t m) {
        std::vector<int> vars;
        for (std::uint64_t r = m; r != 0; r &= r - 1) {
            vars.push_back(std::countr_zero(r));
        }
        return std::pair{static_cast<int>(vars.size()), vars};
    };
    std::sort(sorted.begin(), sorted.end(), [&](const auto &a, const auto &b) { return key(a.first) < key(b.first); });
    std::string out;
    for (const auto &[m, c] : sorted) {
        if (!out.empty()) {
            out += '+';
        }
        if (m == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c);
        }
        for (std::uint64_t r = m; r != 0; r &= r - 1) {
            out += 'x' + std::to_string(std::countr_zero(r));
        }
    }
    return out;
}

Z4Polynomial &Z4Polynomial::operator+=(const Z4Polynomial &other) {
    for (const auto &[m, c] : other.terms_) {
        add(m, c);
    }
    return *this;
}

Z4Polynomial Z4Polynomial::scaled(int k) const {
    Z4Polynomial out;
    for (const auto &[m, c] : terms_) {
        out.add(m, c * k);
    }
    return out;
}

Z4Polynomial lift_to_z4(const Z2Polynomial &a) {
    const auto &mono = a.monomials();
    const std::vector<std::uint64_t> t(mono.begin(), mono.end());
    Z4Polynomial out;
    for (std::size_t k = 0; k < t.size(); ++k) {
        out.add(t[k], 1);
        for (std::size_t l = k + 1; l < t.size(); ++l) {
            out.add(t[k] | t[l], 2);
        }
    }
    return out;
}

Z4Polynomial z2_sum_to_z4(std::span<const Z2Polynomial> terms) {
    Z2Polynomial sum;
    Z2Polynomial pairs;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        sum += terms[i];
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            pairs += terms[i] * terms[j];
        }
    }
    Z4Polynomial out = lift_to_z4(sum) + lift_to_z4(pairs).scaled(2);
    if (!out.is_special_form()) {
        throw InvariantError("mod-4 expansion left the special quadratic form: " + out.to_string());
    }
    return out;
}

}  // namespace twograph
