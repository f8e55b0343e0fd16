/*
 * Copyright 2026 The pgsolve Authors
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

#include "pg/node_set.hpp"

#include <algorithm>
#include <cassert>

namespace pg {

NodeSet::NodeSet(std::size_t universe, std::initializer_list<NodeId> members) : bits_(universe, 0)
{
    for (NodeId v : members) insert(v);
}

NodeSet
NodeSet::full(std::size_t universe)
{
    NodeSet s;
    s.bits_.assign(universe, 1);
    s.count_ = universe;
    return s;
}

void
NodeSet::clear()
{
    std::fill(bits_.begin(), bits_.end(), 0);
    count_ = 0;
}

NodeSet&
NodeSet::operator|=(const NodeSet& other)
{
    assert(universe() == other.universe());
    for (std::size_t i = 0; i < bits_.size(); i++) {
        if (other.bits_[i] && !bits_[i]) {
            bits_[i] = 1;
            ++count_;
        }
    }
    return *this;
}

NodeSet&
NodeSet::operator-=(const NodeSet& other)
{
    assert(universe() == other.universe());
    for (std::size_t i = 0; i < bits_.size(); i++) {
        if (other.bits_[i] && bits_[i]) {
            bits_[i] = 0;
            --count_;
        }
    }
    return *this;
}

NodeSet&
NodeSet::operator&=(const NodeSet& other)
{
    assert(universe() == other.universe());
    for (std::size_t i = 0; i < bits_.size(); i++) {
        if (bits_[i] && !other.bits_[i]) {
            bits_[i] = 0;
            --count_;
        }
    }
    return *this;
}

bool
NodeSet::is_subset_of(const NodeSet& other) const
{
    if (count_ > other.count_) return false;
    for (std::size_t i = 0; i < bits_.size(); i++) {
        if (bits_[i] && !other.contains(static_cast<NodeId>(i))) return false;
    }
    return true;
}

bool
NodeSet::intersects(const NodeSet& other) const
{
    const std::size_t n = std::min(bits_.size(), other.bits_.size());
    for (std::size_t i = 0; i < n; i++) {
        if (bits_[i] && other.bits_[i]) return true;
    }
    return false;
}

std::vector<NodeId>
NodeSet::to_vector() const
{
    std::vector<NodeId> out;
    out.reserve(count_);
    for (NodeId v : *this) out.push_back(v);
    return out;
}

NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }
NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }

} // namespace pg
