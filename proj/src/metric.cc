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

#include <graphdim/metric.hh>

namespace graphdim
{
    using std::to_string;

    namespace
    {
        auto check(unsigned order, unsigned s, unsigned x, unsigned y) -> void
        {
            if (s >= order || x >= order || y >= order)
                throw GraphError("index out of range: s=" + to_string(s) + " x=" + to_string(x) + " y=" + to_string(y)
                    + " for order " + to_string(order));
        }
    }

    auto distinguishes(const MetricMatrix & m, unsigned s, unsigned x, unsigned y) -> bool
    {
        check(m.order(), s, x, y);
        return m(s, x) != m(s, y);
    }

    auto adjacency_distinguishes(const Graph & g, unsigned s, unsigned x, unsigned y) -> bool
    {
        check(g.order(), s, x, y);
        return g.adjacent(s, x) != g.adjacent(s, y);
    }

    auto adjacency_distinguishers(const Graph & g, unsigned x, unsigned y) -> VertexSet
    {
        check(g.order(), x, x, y);
        return g.row(x) ^ g.row(y);
    }

    auto metric_distinguishers(const MetricMatrix & m, unsigned x, unsigned y) -> VertexSet
    {
        check(m.order(), x, x, y);
        VertexSet result(m.order());
        for (unsigned s = 0; s < m.order(); ++s)
            if (m(s, x) != m(s, y))
                result.set(s);
        return result;
    }
}
