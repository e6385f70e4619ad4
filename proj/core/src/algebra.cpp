#include "bfh/algebra.hpp"

#include "bfh/errors.hpp"

namespace bfh {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"i0", "i1", "r1", "r2", "r3", "r12", "r23", "r123"};

int index(Basis a) { return static_cast<int>(a); }

}  // namespace

bool is_idempotent(Basis a) { return a == Basis::i0 || a == Basis::i1; }

Basis idempotent(int i) {
    if (i != 0 && i != 1) throw InvalidInput("idempotent index must be 0 or 1");
    return i == 0 ? Basis::i0 : Basis::i1;
}

int idem_index(Basis e) {
    if (!is_idempotent(e)) throw InvalidInput(std::string(name(e)) + " is not an idempotent");
    return e == Basis::i0 ? 0 : 1;
}

int chord_lo(Basis a) {
    switch (a) {
        case Basis::r1: case Basis::r12: case Basis::r123: return 1;
        case Basis::r2: case Basis::r23: return 2;
        case Basis::r3: return 3;
        default: throw InvalidInput("idempotent has no chord");
    }
}

int chord_hi(Basis a) {
    switch (a) {
        case Basis::r1: return 1;
        case Basis::r2: case Basis::r12: return 2;
        case Basis::r3: case Basis::r23: case Basis::r123: return 3;
        default: throw InvalidInput("idempotent has no chord");
    }
}

Basis chord(int lo, int hi) {
    if (lo == 1 && hi == 1) return Basis::r1;
    if (lo == 2 && hi == 2) return Basis::r2;
    if (lo == 3 && hi == 3) return Basis::r3;
    if (lo == 1 && hi == 2) return Basis::r12;
    if (lo == 2 && hi == 3) return Basis::r23;
    if (lo == 1 && hi == 3) return Basis::r123;
    throw InvalidInput("no chord r" + std::to_string(lo) + ".." + std::to_string(hi));
}

// r_lo starts at idempotent 0 when lo is odd; r_hi ends at idempotent 1 when
// hi is odd.
int left_idem(Basis a) {
    if (is_idempotent(a)) return idem_index(a);
    return chord_lo(a) % 2 == 1 ? 0 : 1;
}

int right_idem(Basis a) {
    if (is_idempotent(a)) return idem_index(a);
    return chord_hi(a) % 2 == 1 ? 1 : 0;
}

std::pair<Basis, Basis> idempotents(Basis a) { return {idempotent(left_idem(a)), idempotent(right_idem(a))}; }

std::optional<Basis> mul(Basis a, Basis b) {
    if (is_idempotent(a)) {
        if (left_idem(b) == idem_index(a)) return b;
        return std::nullopt;
    }
    if (is_idempotent(b)) {
        if (right_idem(a) == idem_index(b)) return a;
        return std::nullopt;
    }
    if (chord_lo(b) == chord_hi(a) + 1) return chord(chord_lo(a), chord_hi(b));
    return std::nullopt;
}

Basis phi(Basis a) {
    switch (a) {
        case Basis::i0: return Basis::i1;
        case Basis::i1: return Basis::i0;
        case Basis::r1: return Basis::r3;
        case Basis::r3: return Basis::r1;
        case Basis::r12: return Basis::r23;
        case Basis::r23: return Basis::r12;
        default: return a;
    }
}

std::string_view name(Basis a) { return kNames[index(a)]; }

std::optional<Basis> try_parse_basis(std::string_view token) {
    for (Basis b : kAllBasis)
        if (name(b) == token) return b;
    return std::nullopt;
}

Basis parse_basis(std::string_view token) {
    if (auto b = try_parse_basis(token)) return *b;
    throw ParseError("unknown algebra element '" + std::string(token) +
                     "' (expected one of i0 i1 r1 r2 r3 r12 r23 r123)");
}

std::vector<Basis> AlgebraElement::terms() const {
    std::vector<Basis> out;
    for (Basis b : kAllBasis)
        if (contains(b)) out.push_back(b);
    return out;
}

std::string AlgebraElement::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (Basis b : terms()) {
        if (!s.empty()) s += " + ";
        s += name(b);
    }
    return s;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (Basis x : a.terms())
        for (Basis y : b.terms())
            if (auto p = mul(x, y)) out += *p;
    return out;
}

std::optional<Basis> product(const std::vector<Basis>& seq) {
    if (seq.empty()) return std::nullopt;
    std::optional<Basis> cur = seq.front();
    for (std::size_t i = 1; i < seq.size() && cur; ++i) cur = mul(*cur, seq[i]);
    return cur;
}

std::vector<int> letters(const std::vector<Basis>& word) {
    std::vector<int> out;
    for (Basis b : word) {
        if (is_idempotent(b)) continue;
        for (int k = chord_lo(b); k <= chord_hi(b); ++k) out.push_back(k);
    }
    return out;
}

std::vector<Basis> regroup(const std::vector<std::vector<Basis>>& strings) {
    std::vector<Basis> out;
    for (const auto& s : strings) {
        if (s.empty()) throw DegenerateInput("empty string in regroup");
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (right_idem(s[i]) != left_idem(s[i + 1]))
                throw DegenerateInput("string " + word_str(s) + " is not composable");
        if (!out.empty() && right_idem(out.back()) != left_idem(s.front()))
            throw DegenerateInput("strings do not compose at " + word_str(s));
        for (Basis a : s) {
            if (!out.empty()) {
                if (auto p = mul(out.back(), a)) {
                    out.back() = *p;
                    continue;
                }
            }
            out.push_back(a);
        }
    }
    return out;
}

bool is_grouped(const std::vector<Basis>& word) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (mul(word[i], word[i + 1])) return false;
    return true;
}

std::string word_str(const std::vector<Basis>& word) {
    std::string s;
    for (Basis b : word) {
        if (!s.empty()) s += ' ';
        s += name(b);
    }
    return s;
}

}  // namespace bfh
