// SPDX-License-Identifier: Apache-2.0
//
// vlcoris: reflector-assisted indoor visible light communication simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace vlcoris {

// Binary LED-to-element association: entry (l, k) set means element k of the
// reflector wall forwards LED l's light specularly.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int leds, int elements)
      : leds_(leds), elements_(elements), bits_(static_cast<std::size_t>(leds) * elements, 0) {}

  int leds() const { return leds_; }
  int elements() const { return elements_; }

  bool get(int l, int k) const { return bits_[index(l, k)] != 0; }
  void set(int l, int k, bool on = true) { bits_[index(l, k)] = on ? 1 : 0; }

  std::span<const std::uint8_t> row(int l) const {
    return {bits_.data() + static_cast<std::size_t>(l) * elements_,
            static_cast<std::size_t>(elements_)};
  }

  int count() const {
    int n = 0;
    for (auto b : bits_) n += b;
    return n;
  }

  // Number of LEDs associated with element k (at most one when valid).
  int column_count(int k) const {
    int n = 0;
    for (int l = 0; l < leds_; ++l) n += bits_[index(l, k)];
    return n;
  }

  // Per-element exclusivity and the global element budget.
  bool is_valid(int n_max) const {
    for (int k = 0; k < elements_; ++k)
      if (column_count(k) > 1) return false;
    return count() <= n_max;
  }

  // Selected element indices in increasing order.
  std::vector<int> selected_elements() const {
    std::vector<int> out;
    for (int k = 0; k < elements_; ++k)
      if (column_count(k) > 0) out.push_back(k);
    return out;
  }

  bool operator==(const Assignment&) const = default;

 private:
  std::size_t index(int l, int k) const { return static_cast<std::size_t>(l) * elements_ + k; }

  int leds_ = 0;
  int elements_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace vlcoris
