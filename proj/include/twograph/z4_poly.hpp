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

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>

namespace twograph {

/// Multilinear polynomial over GF(2). A monomial is the bit mask of its
/// variables; mask 0 is the constant 1.
class Z2Polynomial {
  public:
    Z2Polynomial() = default;
    static Z2Polynomial constant(bool value);
    static Z2Polynomial variable(int j);
    /// constant + Σ_{j∈support} x_j, support given as a mask.
    static Z2Polynomial affine(std::uint64_t support, bool constant);

    [[nodiscard]] const std::set<std::uint64_t> &monomials() const { return terms_; }
    [[nodiscard]] int degree() const;
    [[nodiscard]] bool evaluate(std::uint64_t assignment) const;

    Z2Polynomial &operator+=(const Z2Polynomial &other);
    friend Z2Polynomial operator+(Z2Polynomial a, const Z2Polynomial &b) { return a += b; }
    friend Z2Polynomial operator*(const Z2Polynomial &a, const Z2Polynomial &b);
    bool operator==(const Z2Polynomial &) const = default;

  private:
    std::set<std::uint64_t> terms_;
};

/// Multilinear polynomial ℤ₂ⁿ → ℤ₄ with coefficients in ℤ₄.
class Z4Polynomial {
  public:
    Z4Polynomial() = default;

    void add(std::uint64_t monomial, int coefficient);
    [[nodiscard]] int coefficient(std::uint64_t monomial) const;
    [[nodiscard]] const std::map<std::uint64_t, std::uint8_t> &terms() const { return terms_; }
    [[nodiscard]] int degree() const;
    [[nodiscard]] int evaluate(std::uint64_t assignment) const;
    /// Degree ≤ 2 and every quadratic coefficient even.
    [[nodiscard]] bool is_special_form() const;
    /// "x0+x1+2x0x1", "0" when empty. Constant first.
    [[nodiscard]] std::string to_string() const;

    Z4Polynomial &operator+=(const Z4Polynomial &other);
    friend Z4Polynomial operator+(Z4Polynomial a, const Z4Polynomial &b) { return a += b; }
    [[nodiscard]] Z4Polynomial scaled(int k) const;
    bool operator==(const Z4Polynomial &) const = default;

  private:
    std::map<std::uint64_t, std::uint8_t> terms_;
};

/// The ℤ₄ polynomial agreeing with the {0,1}-embedding of a GF(2) polynomial:
/// [Σ t_k] = Σ t_k + 2 Σ_{k<l} t_k t_l (mod 4).
Z4Polynomial lift_to_z4(const Z2Polynomial &a);

/// Σ_i [A_i] (mod 4), expanded as [Σ A_i] + 2 [Σ_{i<j} A_i A_j]. Throws
/// InvariantError when the result is not of the special quadratic form.
Z4Polynomial z2_sum_to_z4(std::span<const Z2Polynomial> terms);

}  // namespace twograph
