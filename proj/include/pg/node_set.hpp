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

#ifndef PG_NODE_SET_HPP
#define PG_NODE_SET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace pg {

using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

/**
 * A set of nodes over a fixed universe [0, universe).
 * Membership and insertion are O(1); iteration visits members in ascending
 * order and costs O(universe).
 */
class NodeSet
{
public:
    class const_iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = NodeId;
        using difference_type = std::ptrdiff_t;
        using pointer = const NodeId*;
        using reference = NodeId;

        const_iterator() = default;
        const_iterator(const std::vector<std::uint8_t>* bits, NodeId pos) : bits_(bits), pos_(pos) { skip(); }

        NodeId operator*() const { return pos_; }
        const_iterator& operator++() { ++pos_; skip(); return *this; }
        const_iterator operator++(int) { auto tmp = *this; ++*this; return tmp; }
        bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

    private:
        void skip()
        {
            while (pos_ < bits_->size() && !(*bits_)[pos_]) ++pos_;
        }

        const std::vector<std::uint8_t>* bits_ = nullptr;
        NodeId pos_ = 0;
    };

    NodeSet() = default;
    explicit NodeSet(std::size_t universe) : bits_(universe, 0) {}
    NodeSet(std::size_t universe, std::initializer_list<NodeId> members);

    static NodeSet full(std::size_t universe);

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(NodeId v) const { return v < bits_.size() && bits_[v]; }

    // Returns true if v was not already a member.
    bool insert(NodeId v)
    {
        if (bits_[v]) return false;
        bits_[v] = 1;
        ++count_;
        return true;
    }

    bool erase(NodeId v)
    {
        if (!bits_[v]) return false;
        bits_[v] = 0;
        --count_;
        return true;
    }

    void clear();

    NodeSet& operator|=(const NodeSet& other);
    NodeSet& operator-=(const NodeSet& other);
    NodeSet& operator&=(const NodeSet& other);

    bool is_subset_of(const NodeSet& other) const;
    bool intersects(const NodeSet& other) const;

    std::vector<NodeId> to_vector() const;

    const_iterator begin() const { return const_iterator(&bits_, 0); }
    const_iterator end() const { return const_iterator(&bits_, static_cast<NodeId>(bits_.size())); }

    friend bool operator==(const NodeSet& a, const NodeSet& b)
    {
        return a.count_ == b.count_ && a.bits_ == b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
    std::size_t count_ = 0;
};

NodeSet operator|(NodeSet a, const NodeSet& b);
NodeSet operator-(NodeSet a, const NodeSet& b);
NodeSet operator&(NodeSet a, const NodeSet& b);

} // namespace pg

#endif
