/*
 * Copyright 2026 The mppg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MPPG_RATIONAL_HPP
#define MPPG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mppg {

/**
 * Exact rational number with 64-bit numerator and denominator.
 *
 * Always kept in lowest terms with a positive denominator. Comparisons go
 * through 128-bit cross products, so any two representable values compare
 * exactly. Arithmetic throws std::overflow_error if a result leaves the
 * 64-bit range.
 */
class Rat
{
public:
    constexpr Rat() = default;
    Rat(std::int64_t num) : num_(num), den_(1) { }
    Rat(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) = default;
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    /// "p/q", always with the slash (5 is written "5/1").
    std::string str() const;

    /// Accepts "p/q" or a plain integer "p".
    static Rat parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/**
 * Game value: an exact rational, or one of the two infinities.
 *
 * NegInf is the payoff of a play that loses the parity condition; PosInf is
 * the corresponding penalty. Ordering is the extended-real order.
 */
class Value
{
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    Value() : kind_(Kind::Finite) { }
    Value(Rat r) : kind_(Kind::Finite), rat_(r) { }
    Value(std::int64_t n) : kind_(Kind::Finite), rat_(n) { }

    static Value neg_inf() { return Value(Kind::NegInf); }
    static Value pos_inf() { return Value(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    /// Precondition: finite().
    const Rat& rat() const;

    /// Negation swaps the infinities.
    Value operator-() const;

    friend bool operator==(const Value& a, const Value& b);
    friend std::strong_ordering operator<=>(const Value& a, const Value& b);

    /// "p/q", "-inf" or "inf".
    std::string str() const;
    static Value parse(std::string_view text);

private:
    explicit Value(Kind k) : kind_(k) { }

    Kind kind_;
    Rat rat_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

/// Values indexed by StateId; the domain is exactly the game's state set.
using ValueFunction = std::vector<Value>;

/// Pointwise negation, mapping -inf to inf and back.
ValueFunction negate(const ValueFunction& f);

} // namespace mppg

#endif
