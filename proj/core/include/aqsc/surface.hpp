// Copyright 2026 The AQSC Authors
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

#ifndef AQSC_SURFACE_HPP
#define AQSC_SURFACE_HPP

#include <compare>
#include <string>
#include <string_view>

namespace aqsc {

enum class Orientability { Orientable, NonOrientable };

std::string_view to_string(Orientability o);

/// Closed surface: genus h (orientable, connected sum of h tori) or
/// genus g (non-orientable, connected sum of g projective planes).
struct Surface {
    int genus;
    Orientability orientability;

    /// Throws InvalidArgument for genus < 1.
    static Surface make(int genus, Orientability orientability);
    static Surface orientable(int h) { return make(h, Orientability::Orientable); }
    static Surface non_orientable(int g) { return make(g, Orientability::NonOrientable); }

    bool is_orientable() const noexcept { return orientability == Orientability::Orientable; }
    bool is_hyperbolic() const noexcept;

    /// Side count of the fundamental polygon: 4h or 2g.
    int polygon_sides() const noexcept { return is_orientable() ? 4 * genus : 2 * genus; }

    std::string to_string() const;

    auto operator<=>(const Surface&) const = default;
};

/// 2 - 2h (orientable) or 2 - g (non-orientable).
int euler_characteristic(const Surface& surface);

}  // namespace aqsc

#endif  // AQSC_SURFACE_HPP
