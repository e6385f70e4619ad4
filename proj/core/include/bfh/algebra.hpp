#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bfh {

// Basis of the torus algebra. Chords are the consecutive strings r_lo..r_hi
// with 1 <= lo <= hi <= 3.
enum class Basis : std::uint8_t { i0, i1, r1, r2, r3, r12, r23, r123 };

inline constexpr std::array<Basis, 8> kAllBasis = {Basis::i0,  Basis::i1,  Basis::r1,  Basis::r2,
                                                   Basis::r3,  Basis::r12, Basis::r23, Basis::r123};
inline constexpr std::array<Basis, 6> kChords = {Basis::r1,  Basis::r2,  Basis::r3,
                                                 Basis::r12, Basis::r23, Basis::r123};

bool is_idempotent(Basis a);
Basis idempotent(int i);  // 0 -> i0, 1 -> i1
int idem_index(Basis e);  // i0 -> 0, i1 -> 1; throws on chords

int chord_lo(Basis a);
int chord_hi(Basis a);
Basis chord(int lo, int hi);

// Idempotent indices (0 or 1) with left * a * right = a.
int left_idem(Basis a);
int right_idem(Basis a);
std::pair<Basis, Basis> idempotents(Basis a);

std::optional<Basis> mul(Basis a, Basis b);

// The anti-automorphism r1 <-> r3, r12 <-> r23, i0 <-> i1.
Basis phi(Basis a);

std::string_view name(Basis a);
Basis parse_basis(std::string_view token);
std::optional<Basis> try_parse_basis(std::string_view token);

// F2 combination of basis elements, stored as an 8-bit mask.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(Basis b) : mask_(static_cast<std::uint8_t>(1u << static_cast<int>(b))) {}

    static AlgebraElement from_mask(std::uint8_t m) {
        AlgebraElement e;
        e.mask_ = m;
        return e;
    }

    bool is_zero() const { return mask_ == 0; }
    bool contains(Basis b) const { return mask_ >> static_cast<int>(b) & 1u; }
    std::uint8_t mask() const { return mask_; }
    std::vector<Basis> terms() const;

    AlgebraElement& operator+=(const AlgebraElement& o) {
        mask_ ^= o.mask_;
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    std::string str() const;

private:
    std::uint8_t mask_ = 0;
};

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);

// Product of a sequence; nullopt when some partial product vanishes.
std::optional<Basis> product(const std::vector<Basis>& seq);

// Flatten to single letters r1, r2, r3 (chords expand to ascending runs).
std::vector<int> letters(const std::vector<Basis>& word);

// Concatenate and greedily merge adjacent entries whose product is nonzero.
std::vector<Basis> regroup(const std::vector<std::vector<Basis>>& strings);

// True when no two adjacent entries multiply to something nonzero, which is
// exactly when regroup leaves the word unchanged.
bool is_grouped(const std::vector<Basis>& word);

std::string word_str(const std::vector<Basis>& word);

}  // namespace bfh
