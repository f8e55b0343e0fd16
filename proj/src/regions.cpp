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

#include "pg/regions.hpp"

#include <algorithm>

namespace pg {

Regions
regions_from(Owner player, const NodeSet& won_by)
{
    NodeSet rest = NodeSet::full(won_by.universe()) - won_by;
    if (player == Owner::Even) return Regions{won_by, std::move(rest)};
    return Regions{std::move(rest), won_by};
}

std::size_t
Strategy::defined() const
{
    return static_cast<std::size_t>(std::count_if(moves_.begin(), moves_.end(), [](NodeId u) { return u != kNoNode; }));
}

} // namespace pg
