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

#include <graphdim/cover.hh>

#include <algorithm>
#include <exception>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

using std::optional;
using std::vector;

namespace graphdim
{
    namespace
    {
        constexpr unsigned none = ~0u;

        /// Drops duplicate constraints and any constraint containing another.
        auto minimise(vector<VertexSet> constraints) -> vector<VertexSet>
        {
            std::stable_sort(constraints.begin(), constraints.end(),
                [](const VertexSet & a, const VertexSet & b) { return a.count() < b.count(); });
            vector<VertexSet> kept;
            for (auto & c : constraints) {
                bool redundant = false;
                for (auto & k : kept)
                    if (k.is_subset_of(c)) {
                        redundant = true;
                        break;
                    }
                if (! redundant)
                    kept.push_back(std::move(c));
            }
            return kept;
        }

        template <typename F>
        auto run_parallel(std::size_t count, unsigned threads, F && work) -> void
        {
            if (threads <= 1 || count <= 1) {
                for (std::size_t i = 0; i < count; ++i)
                    work(i);
                return;
            }
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            vector<std::thread> pool;
            for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
                pool.emplace_back([&] {
                    for (auto i = next++; i < count; i = next++) {
                        try {
                            work(i);
                        }
                        catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (! failure)
                                failure = std::current_exception();
                        }
                    }
                });
            for (auto & t : pool)
                t.join();
            if (failure)
                std::rethrow_exception(failure);
        }
    }

    struct CoverSearch::Frame
    {
        VertexSet chosen;
        VertexSet available;
        unsigned chosen_count = 0;
        vector<unsigned> open;
        // For symmetry breaking: neighbouring free members of the same class.
        std::shared_ptr<const vector<unsigned>> lower_twin, higher_twin;
    };

    CoverSearch::CoverSearch(CoverProblem problem, SearchLimits limits) :
        _problem(std::move(problem)),
        _limits(limits)
    {
        _problem.constraints = minimise(std::move(_problem.constraints));
        if (_limits.threads == 0)
            _limits.threads = 1;
    }

    auto CoverSearch::tick() -> void
    {
        auto n = ++_nodes;
        if (_limits.node_budget != 0 && n > _limits.node_budget)
            throw BudgetExceeded("search exceeded its budget of " + std::to_string(_limits.node_budget) + " nodes");
    }

    auto CoverSearch::make_root(const VertexSet & forced, const VertexSet & allowed, bool symmetric) const -> Frame
    {
        Frame root;
        root.chosen = forced;
        root.available = allowed;
        root.available.subtract(forced);
        root.chosen_count = forced.count();
        for (unsigned i = 0; i < _problem.constraints.size(); ++i)
            if (! _problem.constraints[i].intersects(forced))
                root.open.push_back(i);

        if (symmetric && ! _problem.interchangeable.empty()) {
            auto lower = std::make_shared<vector<unsigned>>(_problem.universe, none);
            auto higher = std::make_shared<vector<unsigned>>(_problem.universe, none);
            for (auto & cls : _problem.interchangeable) {
                vector<unsigned> free;
                for (auto v : cls)
                    if (root.available.test(v))
                        free.push_back(v);
                std::sort(free.begin(), free.end());
                for (std::size_t i = 1; i < free.size(); ++i) {
                    (*lower)[free[i]] = free[i - 1];
                    (*higher)[free[i - 1]] = free[i];
                }
            }
            root.lower_twin = std::move(lower);
            root.higher_twin = std::move(higher);
        }
        return root;
    }

    auto CoverSearch::expand(const Frame & frame, unsigned k, vector<Frame> & children, bool & solved) -> void
    {
        tick();
        solved = false;
        if (frame.open.empty()) {
            solved = true;
            return;
        }
        if (frame.chosen_count >= k)
            return;

        // Pick the open constraint with the fewest candidates; bound by a
        // greedy packing of constraints with pairwise disjoint candidates.
        unsigned best = none, best_size = none, packed = 0;
        VertexSet packing(_problem.universe);
        for (auto i : frame.open) {
            auto candidates = _problem.constraints[i] & frame.available;
            auto size = candidates.count();
            if (size == 0)
                return;
            if (size < best_size) {
                best_size = size;
                best = i;
            }
            if (! candidates.intersects(packing)) {
                packing.union_with(candidates);
                ++packed;
            }
        }
        if (frame.chosen_count + packed > k)
            return;

        auto candidates = _problem.constraints[best] & frame.available;
        auto available = frame.available;
        candidates.for_each([&](unsigned v) {
            if (! available.test(v))
                return;

            Frame child;
            child.chosen = frame.chosen;
            child.available = available;
            child.chosen_count = frame.chosen_count;
            child.lower_twin = frame.lower_twin;
            child.higher_twin = frame.higher_twin;

            bool consistent = true;
            for (auto u = v; u != none; u = frame.lower_twin ? (*frame.lower_twin)[u] : none) {
                if (child.chosen.test(u))
                    break;
                if (! child.available.test(u)) {
                    consistent = false;
                    break;
                }
                child.chosen.set(u);
                child.available.reset(u);
                ++child.chosen_count;
            }

            if (consistent && child.chosen_count <= k) {
                for (auto i : frame.open)
                    if (! _problem.constraints[i].intersects(child.chosen))
                        child.open.push_back(i);
                children.push_back(std::move(child));
            }

            for (auto u = v; u != none; u = frame.higher_twin ? (*frame.higher_twin)[u] : none) {
                if (frame.chosen.test(u))
                    break;
                available.reset(u);
            }
        });
    }

    auto CoverSearch::find_from(const Frame & frame, unsigned k) -> optional<VertexSet>
    {
        vector<Frame> children;
        bool solved;
        expand(frame, k, children, solved);
        if (solved)
            return frame.chosen;
        for (auto & child : children)
            if (auto r = find_from(child, k))
                return r;
        return std::nullopt;
    }

    auto CoverSearch::enumerate_from(const Frame & frame, unsigned k, vector<VertexSet> & out) -> void
    {
        vector<Frame> children;
        bool solved;
        expand(frame, k, children, solved);
        if (solved) {
            out.push_back(frame.chosen);
            return;
        }
        for (auto & child : children)
            enumerate_from(child, k, out);
    }

    auto CoverSearch::find(unsigned k, const VertexSet & forced, const VertexSet & allowed) -> optional<VertexSet>
    {
        auto root = make_root(forced, allowed, true);
        if (root.chosen_count > k)
            return std::nullopt;

        vector<Frame> children;
        bool solved;
        expand(root, k, children, solved);
        if (solved)
            return root.chosen;

        // Root branches are independent; taking the lowest successful index
        // reproduces the sequential answer for any thread count.
        vector<optional<VertexSet>> results(children.size());
        std::atomic<std::size_t> first_hit{children.size()};
        run_parallel(children.size(), _limits.threads, [&](std::size_t i) {
            if (i > first_hit.load())
                return;
            results[i] = find_from(children[i], k);
            if (results[i]) {
                auto current = first_hit.load();
                while (i < current && ! first_hit.compare_exchange_weak(current, i))
                    ;
            }
        });
        for (auto & r : results)
            if (r)
                return r;
        return std::nullopt;
    }

    auto CoverSearch::find(unsigned k) -> optional<VertexSet>
    {
        return find(k, VertexSet(_problem.universe), VertexSet::full(_problem.universe));
    }

    auto CoverSearch::lower_bound() const -> unsigned
    {
        unsigned packed = 0;
        VertexSet packing(_problem.universe);
        for (auto & c : _problem.constraints)
            if (! c.intersects(packing)) {
                packing.union_with(c);
                ++packed;
            }
        return packed;
    }

    auto CoverSearch::minimum() -> VertexSet
    {
        auto best = greedy_cover(_problem);
        for (auto & c : _problem.constraints)
            if (! c.intersects(best))
                throw std::logic_error("cover problem has a constraint no vertex can hit");
        auto floor = lower_bound();
        while (best.count() > floor) {
            auto r = find(best.count() - 1);
            if (! r)
                break;
            best = *r;
        }
        return best;
    }

    auto CoverSearch::canonical_minimum() -> VertexSet
    {
        auto witness = minimum();
        unsigned k = witness.count();
        unsigned n = _problem.universe;

        vector<unsigned> class_of(n, none);
        for (unsigned c = 0; c < _problem.interchangeable.size(); ++c)
            for (auto v : _problem.interchangeable[c])
                class_of[v] = c;

        VertexSet prefix(n);
        int last = -1;
        for (unsigned pos = 0; pos < k; ++pos) {
            // witness = prefix followed by members above last; its next member
            // is the fallback answer for this position.
            unsigned target = witness.next(last);
            vector<unsigned> candidates;
            for (unsigned v = last + 1; v < target; ++v) {
                // A twin strictly between last and v would have been tried
                // first and answers for v by swapping.
                bool shadowed = false;
                if (class_of[v] != none)
                    for (auto u : _problem.interchangeable[class_of[v]])
                        if (static_cast<int>(u) > last && u < v)
                            shadowed = true;
                if (! shadowed)
                    candidates.push_back(v);
            }

            for (auto v : candidates) {
                auto forced = prefix;
                forced.set(v);
                auto allowed = forced;
                for (unsigned w = v + 1; w < n; ++w)
                    allowed.set(w);
                if (auto r = find(k, forced, allowed)) {
                    witness = *r;
                    target = v;
                    break;
                }
            }
            prefix.set(target);
            last = target;
        }
        return witness;
    }

    auto CoverSearch::all_minimum() -> vector<VertexSet>
    {
        unsigned k = minimum().count();
        auto root = make_root(VertexSet(_problem.universe), VertexSet::full(_problem.universe), false);

        vector<Frame> children;
        bool solved;
        expand(root, k, children, solved);
        vector<VertexSet> result;
        if (solved)
            result.push_back(root.chosen);
        else {
            vector<vector<VertexSet>> parts(children.size());
            run_parallel(children.size(), _limits.threads, [&](std::size_t i) { enumerate_from(children[i], k, parts[i]); });
            for (auto & p : parts)
                for (auto & s : p)
                    result.push_back(std::move(s));
        }
        std::sort(result.begin(), result.end(), [](const VertexSet & a, const VertexSet & b) { return lexicographically_less(a, b); });
        return result;
    }

    auto greedy_cover(const CoverProblem & problem) -> VertexSet
    {
        VertexSet chosen(problem.universe);
        vector<const VertexSet *> open;
        for (auto & c : problem.constraints)
            open.push_back(&c);
        while (! open.empty()) {
            vector<unsigned> hits(problem.universe, 0);
            for (auto * c : open)
                c->for_each([&](unsigned v) { ++hits[v]; });
            auto best = std::max_element(hits.begin(), hits.end()) - hits.begin();
            if (hits[best] == 0)
                break;
            chosen.set(best);
            std::erase_if(open, [&](const VertexSet * c) { return c->test(best); });
        }
        return chosen;
    }
}
