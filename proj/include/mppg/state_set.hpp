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

#ifndef MPPG_STATE_SET_HPP
#define MPPG_STATE_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mppg {

/**
 * Subset of the states 0..universe-1 of a game, as a dense bitmap.
 *
 * Set operations require both operands to share the same universe.
 */
class StateSet
{
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe, bool full = false)
        : bits_(universe, full), count_(full ? universe : 0) { }
    StateSet(std::size_t universe, std::initializer_list<std::uint32_t> members);

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(std::uint32_t q) const { return bits_[q]; }
    void insert(std::uint32_t q)
    {
        if (!bits_[q]) {
            bits_[q] = true;
            ++count_;
        }
    }
    void erase(std::uint32_t q)
    {
        if (bits_[q]) {
            bits_[q] = false;
            --count_;
        }
    }

    std::vector<std::uint32_t> members() const;

    StateSet complement() const;
    StateSet operator|(const StateSet& o) const;
    StateSet operator&(const StateSet& o) const;
    StateSet operator-(const StateSet& o) const;
    bool subset_of(const StateSet& o) const;

    friend bool operator==(const StateSet& a, const StateSet& b) { return a.bits_ == b.bits_; }

private:
    std::vector<bool> bits_;
    std::size_t count_ = 0;
};

} // namespace mppg

#endif
