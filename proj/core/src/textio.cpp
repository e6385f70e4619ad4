#include "bfh/textio.hpp"

#include <sstream>

#include "bfh/errors.hpp"

namespace bfh {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

int parse_idem(const std::string& tok, int lineno) {
    if (tok == "i0") return 0;
    if (tok == "i1") return 1;
    fail(lineno, "expected idempotent i0 or i1, got '" + tok + "'");
}

Basis parse_elem(const std::string& tok, int lineno) {
    if (auto b = try_parse_basis(tok)) return *b;
    fail(lineno, "unknown algebra element '" + tok + "' (expected i0 i1 r1 r2 r3 r12 r23 r123)");
}

// "src | a b c -> tgt"
struct OpLine {
    std::string source;
    Word word;
    std::string target;
};

OpLine parse_op(const std::vector<std::string>& t, int lineno, const char* keyword) {
    const std::string grammar = std::string(keyword) + " <source> | <element>... -> <target>";
    if (t.size() < 6 || t[2] != "|" || t[t.size() - 2] != "->") fail(lineno, "expected '" + grammar + "'");
    OpLine op;
    op.source = t[1];
    op.target = t.back();
    for (std::size_t i = 3; i + 2 < t.size(); ++i) op.word.push_back(parse_elem(t[i], lineno));
    if (op.word.empty()) fail(lineno, "empty input word in '" + grammar + "'");
    return op;
}

template <class T>
int lookup(const T& s, const std::string& id, int lineno) {
    try {
        return s.index_of(id);
    } catch (const UnknownGenerator&) {
        fail(lineno, "unknown generator '" + id + "' (declare it with a gen line first)");
    }
}

}  // namespace

std::vector<Structure> parse_document(const std::string& text) {
    std::vector<Structure> doc;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        auto t = tokens(raw);
        if (t.empty()) continue;
        const std::string& head = t[0];
        if (head.front() == '[') {
            std::string name = t.size() > 1 ? t[1] : "";
            if (t.size() > 2) fail(lineno, "section header takes one name");
            if (head == "[typeD]") {
                TypeD d;
                d.name = name;
                doc.emplace_back(std::move(d));
            } else if (head == "[typeA]") {
                TypeA m;
                m.name = name;
                doc.emplace_back(std::move(m));
            } else if (head == "[graphA]") {
                GraphTypeA g;
                g.name = name;
                doc.emplace_back(std::move(g));
            } else if (head == "[dd]") {
                DDBimodule p;
                p.name = name;
                doc.emplace_back(std::move(p));
            } else {
                fail(lineno, "unknown section '" + head + "' (expected [typeD], [typeA], [graphA] or [dd])");
            }
            continue;
        }
        if (doc.empty()) fail(lineno, "'" + head + "' before any section header");
        Structure& cur = doc.back();
        if (auto d = std::get_if<TypeD>(&cur)) {
            if (head == "gen" && t.size() == 3) {
                d->add_generator(t[1], parse_idem(t[2], lineno));
            } else if (head == "arrow" && t.size() == 4) {
                d->add_arrow(lookup(*d, t[1], lineno), parse_elem(t[2], lineno), lookup(*d, t[3], lineno));
            } else {
                fail(lineno, "expected 'gen <id> <i0|i1>' or 'arrow <source> <element> <target>'");
            }
        } else if (auto m = std::get_if<TypeA>(&cur)) {
            if (head == "gen" && t.size() == 3) {
                m->add_generator(t[1], parse_idem(t[2], lineno));
            } else if (head == "op") {
                auto op = parse_op(t, lineno, "op");
                m->add_op(lookup(*m, op.source, lineno), op.word, lookup(*m, op.target, lineno));
            } else {
                fail(lineno, "expected 'gen <id> <i0|i1>' or 'op <source> | <element>... -> <target>'");
            }
        } else if (auto g = std::get_if<GraphTypeA>(&cur)) {
            if (head == "gen" && t.size() == 3) {
                g->add_generator(t[1], parse_idem(t[2], lineno));
            } else if (head == "edge") {
                auto op = parse_op(t, lineno, "edge");
                g->add_edge(lookup(*g, op.source, lineno), op.word, lookup(*g, op.target, lineno));
            } else {
                fail(lineno, "expected 'gen <id> <i0|i1>' or 'edge <source> | <element>... -> <target>'");
            }
        } else if (auto p = std::get_if<DDBimodule>(&cur)) {
            if (head == "gen" && t.size() == 4) {
                p->add_generator(t[1], parse_idem(t[2], lineno), parse_idem(t[3], lineno));
            } else if (head == "arrow" && t.size() == 5) {
                p->add_arrow(lookup(*p, t[1], lineno), parse_elem(t[2], lineno), parse_elem(t[3], lineno),
                             lookup(*p, t[4], lineno));
            } else {
                fail(lineno, "expected 'gen <id> <left> <right>' or 'arrow <source> <left> <right> <target>'");
            }
        }
    }
    return doc;
}

Structure parse_structure(const std::string& text) {
    auto doc = parse_document(text);
    if (doc.size() != 1) throw ParseError("expected exactly one structure, found " + std::to_string(doc.size()));
    return std::move(doc.front());
}

namespace {

std::string idem_token(int i) { return i == 0 ? "i0" : "i1"; }

void print_graph(std::ostringstream& os, const GraphTypeA& g) {
    os << "[graphA] " << g.name << "\n";
    for (const auto& gen : g.generators()) os << "gen " << gen.id << " " << idem_token(gen.idem) << "\n";
    for (const auto& e : g.edges())
        os << "edge " << g.generators()[static_cast<std::size_t>(e.source)].id << " | " << word_str(e.label) << " -> "
           << g.generators()[static_cast<std::size_t>(e.target)].id << "\n";
}

}  // namespace

std::string print_structure(const Structure& s) {
    std::ostringstream os;
    if (auto d = std::get_if<TypeD>(&s)) {
        os << "[typeD] " << d->name << "\n";
        for (const auto& g : d->generators()) os << "gen " << g.id << " " << idem_token(g.idem) << "\n";
        for (const auto& a : d->arrows())
            os << "arrow " << d->id(a.source) << " " << name(a.label) << " " << d->id(a.target) << "\n";
    } else if (auto m = std::get_if<TypeA>(&s)) {
        if (m->is_lazy()) {
            print_graph(os, *m->graph());
        } else {
            os << "[typeA] " << m->name << "\n";
            for (const auto& g : m->generators()) os << "gen " << g.id << " " << idem_token(g.idem) << "\n";
            for (const auto& [key, targets] : m->ops())
                for (int y : targets) os << "op " << m->id(key.first) << " | " << word_str(key.second) << " -> " << m->id(y) << "\n";
        }
    } else if (auto g = std::get_if<GraphTypeA>(&s)) {
        print_graph(os, *g);
    } else if (auto p = std::get_if<DDBimodule>(&s)) {
        os << "[dd] " << p->name << "\n";
        for (const auto& g : p->generators()) os << "gen " << g.id << " " << idem_token(g.left) << " " << idem_token(g.right) << "\n";
        for (const auto& a : p->arrows())
            os << "arrow " << p->generators()[static_cast<std::size_t>(a.source)].id << " " << name(a.left) << " "
               << name(a.right) << " " << p->generators()[static_cast<std::size_t>(a.target)].id << "\n";
    }
    return os.str();
}

std::string print_document(const std::vector<Structure>& doc) {
    std::string out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        if (i) out += "\n";
        out += print_structure(doc[i]);
    }
    return out;
}

std::string structure_kind(const Structure& s) {
    if (std::holds_alternative<TypeD>(s)) return "typeD";
    if (auto m = std::get_if<TypeA>(&s)) return m->is_lazy() ? "graphA" : "typeA";
    if (std::holds_alternative<GraphTypeA>(s)) return "graphA";
    return "dd";
}

std::string structure_name(const Structure& s) {
    return std::visit([](const auto& x) { return x.name; }, s);
}

}  // namespace bfh
