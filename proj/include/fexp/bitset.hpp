#ifndef FEXP_BITSET_HPP_
#define FEXP_BITSET_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace fexp {

  // Fixed-capacity bitset with cheap set-bit iteration. Used for edge sets of
  // Cayley subgraphs, where an edge is identified by src * |letters| + letter.
  template <std::size_t N>
  class BitSet {
    static_assert(N % 64 == 0);
    static constexpr std::size_t words = N / 64;

   public:
    static constexpr std::size_t capacity = N;

    constexpr BitSet() noexcept : _w{} {}

    bool test(std::size_t i) const noexcept {
      return (_w[i >> 6] >> (i & 63)) & 1U;
    }

    void set(std::size_t i) noexcept {
      _w[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    void reset(std::size_t i) noexcept {
      _w[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : _w) {
        c += std::popcount(w);
      }
      return c;
    }

    bool none() const noexcept {
      for (auto w : _w) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    // True iff every bit of *this is also set in other.
    bool is_subset_of(BitSet const& other) const noexcept {
      for (std::size_t i = 0; i < words; ++i) {
        if ((_w[i] & ~other._w[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    BitSet& operator|=(BitSet const& o) noexcept {
      for (std::size_t i = 0; i < words; ++i) {
        _w[i] |= o._w[i];
      }
      return *this;
    }

    BitSet& operator&=(BitSet const& o) noexcept {
      for (std::size_t i = 0; i < words; ++i) {
        _w[i] &= o._w[i];
      }
      return *this;
    }

    BitSet operator~() const noexcept {
      BitSet r;
      for (std::size_t i = 0; i < words; ++i) {
        r._w[i] = ~_w[i];
      }
      return r;
    }

    friend BitSet operator|(BitSet a, BitSet const& b) noexcept {
      return a |= b;
    }

    friend BitSet operator&(BitSet a, BitSet const& b) noexcept {
      return a &= b;
    }

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t w = _w[i];
        while (w != 0) {
          f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
          w &= w - 1;
        }
      }
    }

    std::size_t hash() const noexcept {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL;
      for (auto w : _w) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }

    friend bool operator==(BitSet const&, BitSet const&) = default;
    friend auto operator<=>(BitSet const&, BitSet const&) = default;

   private:
    std::array<std::uint64_t, words> _w;
  };

  using EdgeBits = BitSet<512>;

}  // namespace fexp

#endif  // FEXP_BITSET_HPP_
