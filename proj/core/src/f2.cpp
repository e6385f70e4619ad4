#include "bfh/f2.hpp"

#include <bit>

#include "bfh/errors.hpp"

namespace bfh {

F2Vector add(const F2Vector& u, const F2Vector& v) { return u + v; }

BitRow::BitRow(std::size_t n, const F2Vector& v) : BitRow(n) {
    for (int i : v) {
        if (i < 0 || static_cast<std::size_t>(i) >= n) throw UnknownGenerator("index " + std::to_string(i));
        flip(static_cast<std::size_t>(i));
    }
}

BitRow& BitRow::operator^=(const BitRow& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
}

std::optional<std::size_t> BitRow::lowest() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return std::nullopt;
}

bool BitRow::zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

BitRow Eliminator::reduce(BitRow row) const {
    // Rows are kept fully reduced against earlier pivots only, so sweep until
    // the lowest surviving bit has no pivot.
    while (auto p = row.lowest()) {
        int r = pivot_of_[*p];
        if (r < 0) break;
        row ^= rows_[static_cast<std::size_t>(r)];
    }
    return row;
}

bool Eliminator::insert(BitRow row) {
    row = reduce(std::move(row));
    auto p = row.lowest();
    if (!p) return false;
    pivot_of_[*p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

std::size_t rank(const std::vector<F2Vector>& rows) {
    int n = 0;
    for (const auto& r : rows)
        for (int i : r) n = std::max(n, i + 1);
    Eliminator e(static_cast<std::size_t>(n));
    for (const auto& r : rows) e.insert(BitRow(static_cast<std::size_t>(n), r));
    return e.rank();
}

ChainComplex::ChainComplex(std::vector<std::string> generators) {
    for (auto& g : generators) add_generator(g);
}

int ChainComplex::add_generator(const std::string& id) {
    if (index_.count(id)) throw StructureError("duplicate generator " + id);
    int i = static_cast<int>(gens_.size());
    gens_.push_back(id);
    d_.emplace_back();
    index_[id] = i;
    return i;
}

std::optional<int> ChainComplex::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int ChainComplex::index_of(const std::string& id) const {
    if (auto i = find(id)) return *i;
    throw UnknownGenerator("no generator named " + id);
}

void ChainComplex::set_label(const std::string& generator_or_cycle, const std::string& label) {
    if (!index_.count(generator_or_cycle) && !cycles_.count(generator_or_cycle))
        throw UnknownGenerator("label target " + generator_or_cycle + " does not exist");
    labels_[generator_or_cycle] = label;
}

void ChainComplex::add_cycle(const std::string& name, F2Vector z) {
    for (int i : z)
        if (i < 0 || static_cast<std::size_t>(i) >= gens_.size()) throw UnknownGenerator("cycle " + name);
    cycles_[name] = std::move(z);
}

F2Vector ChainComplex::boundary(const F2Vector& z) const {
    F2Vector out;
    for (int i : z) {
        if (i < 0 || static_cast<std::size_t>(i) >= gens_.size())
            throw UnknownGenerator("index " + std::to_string(i) + " outside complex");
        out += d_[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<int> ChainComplex::d_squared_failures() const {
    std::vector<int> bad;
    for (std::size_t g = 0; g < gens_.size(); ++g)
        if (!boundary(d_[g]).empty()) bad.push_back(static_cast<int>(g));
    return bad;
}

bool ChainComplex::d_squared_zero() const { return d_squared_failures().empty(); }

std::size_t homology_rank(const ChainComplex& c) {
    if (!c.d_squared_zero()) throw StructureError("d^2 != 0");
    return c.size() - 2 * rank(c.differential());
}

bool in_image(const ChainComplex& c, const F2Vector& z) {
    Eliminator e(c.size());
    for (const auto& row : c.differential()) e.insert(BitRow(c.size(), row));
    return e.spans(BitRow(c.size(), z));
}

bool is_nonvanishing_cycle(const ChainComplex& c, const F2Vector& z) {
    for (int i : z)
        if (i < 0 || static_cast<std::size_t>(i) >= c.size())
            throw UnknownGenerator("index " + std::to_string(i) + " outside complex");
    if (!c.boundary(z).empty()) return false;
    return !in_image(c, z);
}

F2Vector Cancellation::pushforward(const F2Vector& z) const {
    F2Vector out;
    auto move = [&](const F2Vector& v) {
        for (int i : v) {
            int j = old_to_new[static_cast<std::size_t>(i)];
            if (j >= 0) out.toggle(j);
        }
    };
    move(z);
    if (z.contains(y)) move(rest);
    return out;
}

Cancellation cancel(const ChainComplex& c, int x, int y) {
    if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= c.size() || static_cast<std::size_t>(y) >= c.size())
        throw UnknownGenerator("cancel: generator out of range");
    if (x == y)
        throw PreconditionError("cannot cancel " + c.generator(x) + " against itself");
    if (!c.d(x).contains(y))
        throw PreconditionError("cannot cancel " + c.generator(x) + " -> " + c.generator(y) + ": coefficient is 0");
    Cancellation out;
    out.y = y;
    out.rest = c.d(x);
    out.rest.toggle(y);
    out.old_to_new.assign(c.size(), -1);
    for (std::size_t g = 0; g < c.size(); ++g) {
        if (static_cast<int>(g) == x || static_cast<int>(g) == y) continue;
        out.old_to_new[g] = out.complex.add_generator(c.generator(static_cast<int>(g)));
    }
    for (std::size_t g = 0; g < c.size(); ++g) {
        int ng = out.old_to_new[g];
        if (ng < 0) continue;
        F2Vector dg = c.d(static_cast<int>(g));
        if (dg.contains(y)) dg += c.d(x);
        F2Vector mapped;
        for (int h : dg) {
            int nh = out.old_to_new[static_cast<std::size_t>(h)];
            if (nh >= 0) mapped.toggle(nh);
        }
        out.complex.set_differential(ng, std::move(mapped));
    }
    for (const auto& [g, h] : c.grading()) {
        int ng = out.old_to_new[static_cast<std::size_t>(g)];
        if (ng >= 0) out.complex.set_grading(ng, h);
    }
    for (const auto& [name, z] : c.cycles()) out.complex.add_cycle(name, out.pushforward(z));
    for (const auto& [target, label] : c.labels())
        if (out.complex.find(target) || out.complex.cycles().count(target)) out.complex.set_label(target, label);
    return out;
}

ChainComplex cancel_ids(const ChainComplex& c, const std::string& x, const std::string& y) {
    return cancel(c, c.index_of(x), c.index_of(y)).complex;
}

ChainComplex reduce_fully(const ChainComplex& c) {
    ChainComplex cur = c;
    for (;;) {
        bool found = false;
        // A self-loop is not cancellable; if d is nonzero, d^2 = 0 guarantees
        // some off-diagonal entry exists.
        for (std::size_t g = 0; g < cur.size() && !found; ++g) {
            const int x = static_cast<int>(g);
            for (int h : cur.d(x)) {
                if (h == x) continue;
                cur = cancel(cur, x, h).complex;
                found = true;
                break;
            }
        }
        if (!found) return cur;
    }
}

}  // namespace bfh
