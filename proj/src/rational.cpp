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

#include "mppg/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mppg {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational overflow");
    }
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rat make(i128 num, i128 den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rat(narrow(num), narrow(den));
}

std::int64_t parse_int(std::string_view s)
{
    std::int64_t out = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return out;
}

} // namespace

Rat::Rat(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    i128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

Rat Rat::operator-() const
{
    return make(-static_cast<i128>(num_), den_);
}

Rat& Rat::operator+=(const Rat& o)
{
    *this = make(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                 static_cast<i128>(den_) * o.den_);
    return *this;
}

Rat& Rat::operator-=(const Rat& o)
{
    return *this += -o;
}

Rat& Rat::operator*=(const Rat& o)
{
    *this = make(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
}

Rat& Rat::operator/=(const Rat& o)
{
    *this = make(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b)
{
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::str() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rat(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rat& r)
{
    return os << r.str();
}

const Rat& Value::rat() const
{
    if (kind_ != Kind::Finite) throw std::logic_error("rat() on infinite value");
    return rat_;
}

Value Value::operator-() const
{
    switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    default: return Value(-rat_);
    }
}

bool operator==(const Value& a, const Value& b)
{
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Value::Kind::Finite || a.rat_ == b.rat_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b)
{
    if (a.kind_ != b.kind_) {
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    }
    if (a.kind_ != Value::Kind::Finite) return std::strong_ordering::equal;
    return a.rat_ <=> b.rat_;
}

std::string Value::str() const
{
    switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    default: return rat_.str();
    }
}

Value Value::parse(std::string_view text)
{
    if (text == "-inf") return neg_inf();
    if (text == "inf" || text == "+inf") return pos_inf();
    return Value(Rat::parse(text));
}

std::ostream& operator<<(std::ostream& os, const Value& v)
{
    return os << v.str();
}

ValueFunction negate(const ValueFunction& f)
{
    ValueFunction out;
    out.reserve(f.size());
    for (const auto& v : f) out.push_back(-v);
    return out;
}

} // namespace mppg
