/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ROLLBACK_BITSET_HH
#define ROLLBACK_BITSET_HH

#include <bit>
#include <cstdint>
#include <vector>

namespace rollback
{
    /**
     * Dynamically sized bitset with word-parallel set operations. All operands of a binary
     * operation must have the same size.
     */
    class Bitset
    {
    public:
        using Word = std::uint64_t;
        static constexpr int bits_per_word = 64;

        Bitset() = default;

        explicit Bitset(int size) :
            _size(size),
            _words((size + bits_per_word - 1) / bits_per_word, 0)
        {
        }

        auto size() const -> int { return _size; }

        auto set(int i) -> void { _words[i / bits_per_word] |= Word{ 1 } << (i % bits_per_word); }
        auto reset(int i) -> void { _words[i / bits_per_word] &= ~(Word{ 1 } << (i % bits_per_word)); }

        auto test(int i) const -> bool
        {
            return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1;
        }

        auto set_all() -> void
        {
            for (auto & w : _words)
                w = ~Word{ 0 };
            trim();
        }

        auto clear() -> void
        {
            for (auto & w : _words)
                w = 0;
        }

        auto count() const -> int
        {
            int result = 0;
            for (auto w : _words)
                result += std::popcount(w);
            return result;
        }

        auto any() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return true;
            return false;
        }

        auto operator|=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0 ; i < _words.size() ; ++i)
                _words[i] |= other._words[i];
            return *this;
        }

        auto operator&=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0 ; i < _words.size() ; ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        auto subtract(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0 ; i < _words.size() ; ++i)
                _words[i] &= ~other._words[i];
            return *this;
        }

        /// |this ∩ other|
        auto count_and(const Bitset & other) const -> int
        {
            int result = 0;
            for (std::size_t i = 0 ; i < _words.size() ; ++i)
                result += std::popcount(_words[i] & other._words[i]);
            return result;
        }

        /// |this ∖ other|
        auto count_and_not(const Bitset & other) const -> int
        {
            int result = 0;
            for (std::size_t i = 0 ; i < _words.size() ; ++i)
                result += std::popcount(_words[i] & ~other._words[i]);
            return result;
        }

        /// Index of the lowest set bit at or after from, or -1.
        auto find_next(int from) const -> int
        {
            if (from >= _size)
                return -1;
            std::size_t wi = from / bits_per_word;
            Word w = _words[wi] & (~Word{ 0 } << (from % bits_per_word));
            while (true) {
                if (w)
                    return int(wi * bits_per_word) + std::countr_zero(w);
                if (++wi == _words.size())
                    return -1;
                w = _words[wi];
            }
        }

        auto find_first() const -> int { return find_next(0); }

        template <typename F_>
        auto for_each(F_ && f) const -> void
        {
            for (std::size_t wi = 0 ; wi < _words.size() ; ++wi) {
                Word w = _words[wi];
                while (w) {
                    f(int(wi * bits_per_word) + std::countr_zero(w));
                    w &= w - 1;
                }
            }
        }

        auto to_vector() const -> std::vector<int>
        {
            std::vector<int> result;
            for_each([&] (int i) { result.push_back(i); });
            return result;
        }

        auto words() const -> const std::vector<Word> & { return _words; }

        friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

    private:
        int _size = 0;
        std::vector<Word> _words;

        auto trim() -> void
        {
            if (_size % bits_per_word != 0 && ! _words.empty())
                _words.back() &= (Word{ 1 } << (_size % bits_per_word)) - 1;
        }
    };

    inline auto operator|(Bitset a, const Bitset & b) -> Bitset
    {
        a |= b;
        return a;
    }

    inline auto operator&(Bitset a, const Bitset & b) -> Bitset
    {
        a &= b;
        return a;
    }
}

#endif
