/*
 * Copyright 2026 The ecsum Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Group characters of E(F_q) indexed against the basis of a GroupStructure:
//   chi_{u,v}(a P1 + b P2) = exp(2 pi i (u a / M + v b / L)).

#pragma once

#include <cstdint>
#include <iterator>
#include <memory>

#include "ecsum/curves.hpp"
#include "ecsum/fields.hpp"

namespace ecsum {

class GroupCharacter {
 public:
  GroupCharacter(std::shared_ptr<const GroupStructure> structure,
                 std::uint32_t u, std::uint32_t v)
      : structure_(std::move(structure)),
        u_(u % structure_->m()),
        v_(v % structure_->l()) {}

  const GroupStructure& structure() const { return *structure_; }
  std::uint32_t u() const { return u_; }
  std::uint32_t v() const { return v_; }
  bool is_principal() const { return u_ == 0 && v_ == 0; }

  // chi(P) = exp(2 pi i phase(P) / #E).
  std::uint64_t phase(Coord c) const {
    const std::uint64_t m = structure_->m(), l = structure_->l();
    const std::uint64_t n = m * l;
    return (std::uint64_t{u_} * c.a % m * l + std::uint64_t{v_} * c.b % l * m) %
           n;
  }

  Complex at(Coord c) const { return unit_root(phase(c), structure_->order()); }

  Complex at_index(std::size_t index) const {
    return at(structure_->coord_at(index));
  }

  Complex operator()(const Point& p) const {
    return at(structure_->decompose(p));
  }

 private:
  std::shared_ptr<const GroupStructure> structure_;
  std::uint32_t u_;
  std::uint32_t v_;
};

// The dual group X, iterated with u ascending, then v ascending.
class DualGroup {
 public:
  explicit DualGroup(std::shared_ptr<const GroupStructure> structure)
      : structure_(std::move(structure)) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = GroupCharacter;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = GroupCharacter;

    iterator() = default;
    iterator(const DualGroup* dual, std::uint64_t pos) : dual_(dual), pos_(pos) {}

    GroupCharacter operator*() const {
      const std::uint32_t l = dual_->structure_->l();
      return GroupCharacter(dual_->structure_,
                            static_cast<std::uint32_t>(pos_ / l),
                            static_cast<std::uint32_t>(pos_ % l));
    }
    iterator& operator++() {
      ++pos_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++pos_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    const DualGroup* dual_ = nullptr;
    std::uint64_t pos_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, structure_->order()); }
  std::uint64_t size() const { return structure_->order(); }

 private:
  std::shared_ptr<const GroupStructure> structure_;
};

inline DualGroup all_group_characters(
    std::shared_ptr<const GroupStructure> structure) {
  return DualGroup(std::move(structure));
}

// exp(2 pi i k / n) for k in [0, n), for repeated character evaluation.
class RootTable {
 public:
  explicit RootTable(std::uint64_t n) : values_(n) {
    for (std::uint64_t k = 0; k < n; ++k) values_[k] = unit_root(k, n);
  }
  const Complex& operator[](std::uint64_t k) const { return values_[k]; }
  std::uint64_t size() const { return values_.size(); }

 private:
  std::vector<Complex> values_;
};

}  // namespace ecsum
