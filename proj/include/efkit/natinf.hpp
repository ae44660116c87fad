/*
 * Copyright 2026 The efkit Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace efk {

/// Natural number or infinity; addition saturates at infinity.
class NatInf {
public:
    constexpr NatInf() = default;
    constexpr NatInf(std::uint64_t v) : v_(v) {}

    static constexpr NatInf inf() { return NatInf(kInf); }

    constexpr bool is_inf() const noexcept { return v_ == kInf; }
    constexpr bool finite() const noexcept { return v_ != kInf; }
    /// Only meaningful when finite.
    constexpr std::uint64_t value() const noexcept { return v_; }

    friend constexpr auto operator<=>(NatInf, NatInf) = default;

    friend constexpr NatInf operator+(NatInf a, NatInf b)
    {
        if (a.is_inf() || b.is_inf() || a.v_ > kInf - 1 - b.v_)
            return inf();
        return NatInf(a.v_ + b.v_);
    }

    std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

    friend std::ostream& operator<<(std::ostream& os, NatInf x) { return os << x.str(); }

private:
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t v_ = 0;
};

} // namespace efk
