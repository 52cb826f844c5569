// Copyright 2026 The graphdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHDIM_METRIC_HH
#define GRAPHDIM_METRIC_HH

#include <graphdim/graph.hh>

namespace graphdim
{
    /// s distinguishes x and y when their distances from s differ.
    auto distinguishes(const MetricMatrix & m, unsigned s, unsigned x, unsigned y) -> bool;

    /// Exactly one of x, y lies in N(s).
    auto adjacency_distinguishes(const Graph & g, unsigned s, unsigned x, unsigned y) -> bool;

    /// Every s with |N(s) ∩ {x, y}| = 1, i.e. N(x) Δ N(y).
    auto adjacency_distinguishers(const Graph & g, unsigned x, unsigned y) -> VertexSet;

    /// Every s with m(s, x) != m(s, y).
    auto metric_distinguishers(const MetricMatrix & m, unsigned x, unsigned y) -> VertexSet;
}

#endif
