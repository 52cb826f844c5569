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

#ifndef GRAPHDIM_VERTEX_SET_HH
#define GRAPHDIM_VERTEX_SET_HH

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace graphdim
{
    /**
     * A set of vertices drawn from 0..capacity-1, stored as a dense bit row.
     *
     * All binary operations require both operands to share the same capacity.
     */
    class VertexSet
    {
    private:
        using Word = std::uint64_t;
        static constexpr unsigned bits_per_word = 64;

        unsigned _capacity = 0;
        std::vector<Word> _words;

        auto trim() -> void
        {
            if (_capacity % bits_per_word != 0 && ! _words.empty())
                _words.back() &= (Word{1} << (_capacity % bits_per_word)) - 1;
        }

    public:
        VertexSet() = default;

        explicit VertexSet(unsigned capacity) :
            _capacity(capacity),
            _words((capacity + bits_per_word - 1) / bits_per_word, 0)
        {
        }

        VertexSet(unsigned capacity, std::initializer_list<unsigned> members) :
            VertexSet(capacity)
        {
            for (auto v : members)
                set(v);
        }

        VertexSet(unsigned capacity, std::span<const unsigned> members) :
            VertexSet(capacity)
        {
            for (auto v : members)
                set(v);
        }

        static auto full(unsigned capacity) -> VertexSet
        {
            VertexSet result(capacity);
            for (auto & w : result._words)
                w = ~Word{0};
            result.trim();
            return result;
        }

        auto capacity() const -> unsigned { return _capacity; }

        auto set(unsigned v) -> void { _words[v / bits_per_word] |= Word{1} << (v % bits_per_word); }

        auto reset(unsigned v) -> void { _words[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word)); }

        auto test(unsigned v) const -> bool { return (_words[v / bits_per_word] >> (v % bits_per_word)) & 1; }

        auto count() const -> unsigned
        {
            unsigned result = 0;
            for (auto w : _words)
                result += std::popcount(w);
            return result;
        }

        auto empty() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return false;
            return true;
        }

        auto clear() -> void
        {
            for (auto & w : _words)
                w = 0;
        }

        /// Smallest member, or capacity() when empty.
        auto first() const -> unsigned
        {
            for (unsigned i = 0; i < _words.size(); ++i)
                if (_words[i])
                    return i * bits_per_word + std::countr_zero(_words[i]);
            return _capacity;
        }

        /// Smallest member strictly greater than v, or capacity() if none.
        auto next(unsigned v) const -> unsigned
        {
            ++v;
            if (v >= _capacity)
                return _capacity;
            unsigned i = v / bits_per_word;
            Word w = _words[i] & (~Word{0} << (v % bits_per_word));
            while (true) {
                if (w)
                    return i * bits_per_word + std::countr_zero(w);
                if (++i >= _words.size())
                    return _capacity;
                w = _words[i];
            }
        }

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (unsigned i = 0; i < _words.size(); ++i) {
                Word w = _words[i];
                while (w) {
                    f(i * bits_per_word + std::countr_zero(w));
                    w &= w - 1;
                }
            }
        }

        auto members() const -> std::vector<unsigned>
        {
            std::vector<unsigned> result;
            result.reserve(count());
            for_each([&](unsigned v) { result.push_back(v); });
            return result;
        }

        auto intersect_with(const VertexSet & other) -> VertexSet &
        {
            for (unsigned i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        auto union_with(const VertexSet & other) -> VertexSet &
        {
            for (unsigned i = 0; i < _words.size(); ++i)
                _words[i] |= other._words[i];
            return *this;
        }

        auto subtract(const VertexSet & other) -> VertexSet &
        {
            for (unsigned i = 0; i < _words.size(); ++i)
                _words[i] &= ~other._words[i];
            return *this;
        }

        auto symmetric_difference_with(const VertexSet & other) -> VertexSet &
        {
            for (unsigned i = 0; i < _words.size(); ++i)
                _words[i] ^= other._words[i];
            return *this;
        }

        auto complement() const -> VertexSet
        {
            VertexSet result(*this);
            for (auto & w : result._words)
                w = ~w;
            result.trim();
            return result;
        }

        auto intersects(const VertexSet & other) const -> bool
        {
            for (unsigned i = 0; i < _words.size(); ++i)
                if (_words[i] & other._words[i])
                    return true;
            return false;
        }

        auto intersection_count(const VertexSet & other) const -> unsigned
        {
            unsigned result = 0;
            for (unsigned i = 0; i < _words.size(); ++i)
                result += std::popcount(_words[i] & other._words[i]);
            return result;
        }

        auto is_subset_of(const VertexSet & other) const -> bool
        {
            for (unsigned i = 0; i < _words.size(); ++i)
                if (_words[i] & ~other._words[i])
                    return false;
            return true;
        }

        auto hash() const -> std::size_t
        {
            std::size_t h = _capacity;
            for (auto w : _words)
                h = h * 0x9E3779B97F4A7C15ull + std::hash<Word>{}(w);
            return h;
        }

        friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

        /// Orders sets by their sorted member sequences.
        friend auto lexicographically_less(const VertexSet & a, const VertexSet & b) -> bool
        {
            auto x = a.first(), y = b.first();
            while (x < a._capacity && y < b._capacity) {
                if (x != y)
                    return x < y;
                x = a.next(x);
                y = b.next(y);
            }
            return x >= a._capacity && y < b._capacity;
        }
    };

    inline auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a.intersect_with(b); }
    inline auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a.union_with(b); }
    inline auto operator^(VertexSet a, const VertexSet & b) -> VertexSet { return a.symmetric_difference_with(b); }

    struct VertexSetHash
    {
        auto operator()(const VertexSet & s) const -> std::size_t { return s.hash(); }
    };
}

#endif
