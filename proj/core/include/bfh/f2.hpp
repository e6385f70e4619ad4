#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bfh {

// Sparse F2 vector: the set of basis indices with coefficient 1.
class F2Vector {
public:
    F2Vector() = default;
    F2Vector(std::initializer_list<int> xs) {
        for (int x : xs) toggle(x);
    }
    explicit F2Vector(const std::set<int>& s) : support_(s) {}

    void toggle(int i) {
        if (!support_.erase(i)) support_.insert(i);
    }
    bool contains(int i) const { return support_.count(i) != 0; }
    bool empty() const { return support_.empty(); }
    std::size_t size() const { return support_.size(); }
    const std::set<int>& support() const { return support_; }
    auto begin() const { return support_.begin(); }
    auto end() const { return support_.end(); }

    F2Vector& operator+=(const F2Vector& o) {
        for (int i : o.support_) toggle(i);
        return *this;
    }
    friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a += b; }
    friend bool operator==(const F2Vector&, const F2Vector&) = default;

private:
    std::set<int> support_;
};

F2Vector add(const F2Vector& u, const F2Vector& v);

// Dense row over F2 packed into 64-bit words.
class BitRow {
public:
    explicit BitRow(std::size_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}
    BitRow(std::size_t n, const F2Vector& v);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1u; }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    BitRow& operator^=(const BitRow& o);
    std::optional<std::size_t> lowest() const;
    bool zero() const;

private:
    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

// Incremental row echelon basis. insert() returns true when the row was
// independent of everything inserted so far.
class Eliminator {
public:
    explicit Eliminator(std::size_t n) : n_(n), pivot_of_(n, -1) {}
    bool insert(BitRow row);
    BitRow reduce(BitRow row) const;
    bool spans(const BitRow& row) const { return reduce(row).zero(); }
    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t n_;
    std::vector<BitRow> rows_;
    std::vector<int> pivot_of_;
};

std::size_t rank(const std::vector<F2Vector>& rows);

class ChainComplex {
public:
    ChainComplex() = default;
    explicit ChainComplex(std::vector<std::string> generators);

    int add_generator(const std::string& id);
    void set_differential(int g, F2Vector dg) { d_.at(g) = std::move(dg); }
    void add_to_differential(int g, int h) { d_.at(g).toggle(h); }

    std::size_t size() const { return gens_.size(); }
    const std::vector<std::string>& generators() const { return gens_; }
    const std::string& generator(int i) const { return gens_.at(i); }
    const F2Vector& d(int g) const { return d_.at(g); }
    const std::vector<F2Vector>& differential() const { return d_; }
    int index_of(const std::string& id) const;
    std::optional<int> find(const std::string& id) const;

    void set_label(const std::string& generator_or_cycle, const std::string& label);
    const std::map<std::string, std::string>& labels() const { return labels_; }
    void add_cycle(const std::string& name, F2Vector z);
    const std::map<std::string, F2Vector>& cycles() const { return cycles_; }
    void set_grading(int g, int h) { grading_[g] = h; }
    const std::map<int, int>& grading() const { return grading_; }

    F2Vector boundary(const F2Vector& z) const;
    bool d_squared_zero() const;
    // Generators g with d(d(g)) != 0.
    std::vector<int> d_squared_failures() const;

private:
    std::vector<std::string> gens_;
    std::vector<F2Vector> d_;
    std::map<std::string, int> index_;
    std::map<std::string, std::string> labels_;
    std::map<std::string, F2Vector> cycles_;
    std::map<int, int> grading_;
};

std::size_t homology_rank(const ChainComplex& c);
bool in_image(const ChainComplex& c, const F2Vector& z);
bool is_nonvanishing_cycle(const ChainComplex& c, const F2Vector& z);

// Result of one Gaussian-elimination step. `pushforward` re-expresses any
// chain of the old complex in the new basis; cycles keep their homology
// class under it.
struct Cancellation {
    ChainComplex complex;
    std::vector<int> old_to_new;  // -1 for the two cancelled generators
    F2Vector rest;                // d(x) - y, in old indices
    int y = -1;
    F2Vector pushforward(const F2Vector& z) const;
};

Cancellation cancel(const ChainComplex& c, int x, int y);
ChainComplex cancel_ids(const ChainComplex& c, const std::string& x, const std::string& y);

// Cancel until the differential vanishes. The surviving generators number
// exactly homology_rank(c).
ChainComplex reduce_fully(const ChainComplex& c);

}  // namespace bfh
