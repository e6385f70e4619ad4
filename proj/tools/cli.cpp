#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <variant>

#include "bfh/algebra.hpp"
#include "bfh/contact.hpp"
#include "bfh/curves.hpp"
#include "bfh/errors.hpp"
#include "bfh/f2.hpp"
#include "bfh/farey.hpp"
#include "bfh/models.hpp"
#include "bfh/pairing.hpp"
#include "bfh/structures.hpp"
#include "bfh/textio.hpp"

namespace bfh::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};


std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Structure> load_all(const std::string& token) {
    try {
        return {model_by_name(token)};
    } catch (const ParseError& e) {
        if (!std::filesystem::is_regular_file(token))
            {
            std::string why = e.what();
            if (why.find(token) == std::string::npos) why = "'" + token + "': " + why;
            throw UsageError(why + "; no file of that name either");
        }
    }
    auto doc = parse_document(slurp(token));
    if (doc.empty()) throw UsageError("file '" + token + "' holds no structure");
    return doc;
}

Structure load(const std::string& token) { return load_all(token).front(); }

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) out.push_back(part);
    if (out.empty()) throw UsageError("empty generator list '" + s + "'");
    return out;
}

Basis parse_letter(const std::string& s) {
    auto b = try_parse_basis(s);
    if (!b) throw UsageError("unknown algebra element '" + s + "' (expected r1, r2, r3, r12, r23 or r123)");
    return *b;
}

int parse_int_token(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError("expected an integer, got '" + s + "'");
}

// Curves for model names. The A picture of a type-D model is its reflected
// curve; aline models come straight from the line word.
Curve curve_arg(const std::string& token, bool a_picture) {
    if (token.rfind("aline:", 0) == 0) {
        if (!a_picture) throw UsageError("'" + token + "' is a type-A line; it has no type-D picture");
        model_by_name(token);  // rejects malformed names with the registry's message
        auto q_at = token.find("q="), p_at = token.find(":p=");
        int q = parse_int_token(token.substr(q_at + 2, p_at - q_at - 2));
        int p = parse_int_token(token.substr(p_at + 3));
        return parse_curve(line_word(q, p));
    }
    Structure s;
    try {
        s = model_by_name(token);
    } catch (const ParseError&) {
        std::string text = std::filesystem::is_regular_file(token) ? slurp(token) : token;
        try {
            return parse_curve(text);
        } catch (const ParseError& e) {
            throw UsageError("'" + token + "' is neither a model nor a curve: " + e.what());
        }
    }
    auto d = std::get_if<TypeD>(&s);
    if (!d) throw UsageError("'" + token + "' is not a type-D model, so it has no curve");
    Curve c = curve_from_typeD(reduce_typeD(*d));
    return a_picture ? reflect(c) : c;
}

const CurveComponent& distinguished(const Curve& c) {
    for (const auto& comp : c.components)
        if (is_distinguished(comp)) return comp;
    throw NotDistinguished("no component wraps once longitudinally");
}

json structure_json(const TypeD& d) {
    json gens = json::array(), arrows = json::array();
    for (const auto& g : d.generators()) gens.push_back({{"id", g.id}, {"idem", g.idem}});
    for (const auto& a : d.arrows())
        arrows.push_back({{"source", d.id(a.source)}, {"label", std::string(name(a.label))}, {"target", d.id(a.target)}});
    return {{"name", d.name}, {"generators", gens}, {"arrows", arrows}};
}

std::string verdict_case(int tb, int rot, int tau, int eps, int s) {
    int edge = 2 * tau - 1;
    if (tb - rot < edge) return "tb - rot < 2 tau - 1";
    if (tb - rot > edge) return "tb - rot > 2 tau - 1, not covered by the theorem";
    if (eps == -1) return "tb - rot = 2 tau - 1 with epsilon = -1";
    return s >= 2 * tau ? "tb - rot = 2 tau - 1 with s >= 2 tau" : "tb - rot = 2 tau - 1 with s <= 2 tau - 1";
}

struct Context {
    std::ostream& out;
    bool as_json = false;
    int code = 0;

    void emit(const json& j, const std::function<void()>& text) {
        if (as_json)
            out << j.dump(2) << '\n';
        else
            text();
    }
};

// ---- subcommands ----------------------------------------------------------

void cmd_check(Context& cx, const std::string& target) {
    auto doc = load_all(target);
    json report = json::array();
    std::vector<std::pair<std::string, Verdict>> results;
    for (const auto& s : doc) {
        Verdict v = std::visit(
            [](const auto& m) -> Verdict {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, TypeD>) return validate_typeD(m);
                if constexpr (std::is_same_v<T, DDBimodule>) return validate_DD(m);
                if constexpr (std::is_same_v<T, TypeA>) return validate_typeA(m, m.is_lazy() ? std::optional<std::size_t>{6} : std::nullopt);
                if constexpr (std::is_same_v<T, GraphTypeA>) {
                    TypeA a = module_from_graph(m);
                    return validate_typeA(a, a.is_lazy() ? std::optional<std::size_t>{6} : std::nullopt);
                }
            },
            s);
        if (!v.ok) cx.code = 1;
        report.push_back({{"name", structure_name(s)}, {"kind", structure_kind(s)}, {"ok", v.ok}, {"failures", v.failures}});
        results.emplace_back(structure_name(s), v);
    }
    cx.emit(doc.size() == 1 ? report[0] : json{{"structures", report}}, [&] {
        for (const auto& [nm, v] : results) {
            std::string prefix = results.size() == 1 ? "" : nm + ": ";
            cx.out << prefix << (v.ok ? "ok" : "fail") << '\n';
            for (const auto& f : v.failures) cx.out << "  " << f << '\n';
        }
    });
}

void cmd_pair(Context& cx, const std::string& a_tok, const std::string& d_tok, bool homology) {
    TypeA a = as_typeA(load(a_tok));
    TypeD d = as_typeD(load(d_tok));
    ChainComplex c = box_AD(a, d);
    json diff = json::object();
    for (std::size_t g = 0; g < c.size(); ++g) {
        json targets = json::array();
        for (int h : c.d(static_cast<int>(g))) targets.push_back(c.generator(h));
        diff[c.generator(static_cast<int>(g))] = targets;
    }
    json j = {{"generators", c.generators()}, {"differential", diff}};
    std::size_t r = 0;
    std::vector<std::string> survivors;
    if (homology) {
        r = homology_rank(c);
        survivors = reduce_fully(c).generators();
        j["homology_rank"] = r;
        j["survivors"] = survivors;
    }
    cx.emit(j, [&] {
        cx.out << c.size() << " generators\n";
        for (std::size_t g = 0; g < c.size(); ++g) {
            cx.out << "d " << c.generator(static_cast<int>(g)) << " =";
            if (c.d(static_cast<int>(g)).empty()) cx.out << " 0";
            bool first = true;
            for (int h : c.d(static_cast<int>(g))) {
                cx.out << (first ? " " : " + ") << c.generator(h);
                first = false;
            }
            cx.out << '\n';
        }
        if (homology) {
            cx.out << "homology rank " << r << '\n';
            for (const auto& s : survivors) cx.out << "  " << s << '\n';
        }
    });
}

void cmd_dd_pair(Context& cx, const std::string& a_tok, bool reduce) {
    TypeD d = box_A_DD(as_typeA(load(a_tok)), azdd());
    if (reduce) d = reduce_typeD(d);
    cx.emit(structure_json(d), [&] { cx.out << print_structure(d); });
}

void cmd_farey_path(Context& cx, const std::string& r, const std::string& s) {
    auto path = minimal_path(parse_slope(r), parse_slope(s));
    json j = json::array();
    for (const auto& v : path) j.push_back(v.str());
    cx.emit({{"path", j}}, [&] {
        for (std::size_t i = 0; i < path.size(); ++i) cx.out << (i ? " " : "") << path[i].str();
        cx.out << '\n';
    });
}

void cmd_farey_classify(Context& cx, const std::string& text, bool slice) {
    DecoratedPath p = parse_decorated(text);
    Tightness t = slice ? classify_slice(p) : classify(p);
    cx.emit({{"path", p.str()}, {"verdict", to_string(t)}}, [&] { cx.out << to_string(t) << '\n'; });
}

void cmd_farey_count(Context& cx, const std::string& slope, bool enumerate) {
    Slope s = parse_slope(slope);
    long n = count_tight_solid_torus(s);
    json j = {{"slope", s.str()}, {"count", n}};
    long brute = 0;
    if (enumerate) {
        brute = enumerate_tight_classes(s);
        j["enumerated"] = brute;
        if (brute != n) cx.code = 1;
    }
    cx.emit(j, [&] {
        cx.out << n << '\n';
        if (enumerate) cx.out << "enumerated " << brute << '\n';
    });
}

std::shared_ptr<const TypeA> typeA_arg(const std::string& tok) { return std::make_shared<const TypeA>(as_typeA(load(tok))); }

json class_json(const ContactClass& c) {
    return {{"module", c.module->name}, {"support", support_ids(c)}, {"idempotent", c.idempotent}};
}

void print_class(std::ostream& out, const ContactClass& c) {
    auto ids = support_ids(c);
    if (ids.empty()) out << "0";
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " + " : "") << ids[i];
    out << "  (i" << c.idempotent << ")\n";
}

void cmd_contact_bypass(Context& cx, const std::string& model, const std::string& gens, const std::string& letter) {
    Basis a = parse_letter(letter);
    ContactClass c = make_class(typeA_arg(model), split_ids(gens), gens);
    ContactClass r = bypass(c, a);
    std::string slice = slice_of(a).str();
    cx.emit({{"class", class_json(r)}, {"slice", slice}}, [&] {
        print_class(cx.out, r);
        cx.out << "attached: " << slice << '\n';
    });
}

void cmd_contact_sv(Context& cx, const std::string& model, const std::string& gens, const std::string& via) {
    SVParam p;
    if (via == "r2")
        p = SVParam::rho2;
    else if (via == "r3")
        p = SVParam::rho3;
    else
        throw UsageError("--via takes r2 or r3, got '" + via + "'");
    ContactClass r = sv_image(make_class(typeA_arg(model), split_ids(gens), gens), p);
    cx.emit({{"class", class_json(r)}}, [&] { print_class(cx.out, r); });
}

void cmd_contact_pair(Context& cx, const std::string& m1, const std::string& g1, const std::string& m2,
                      const std::string& g2) {
    ContactClass c1 = make_class(typeA_arg(m1), split_ids(g1), g1);
    ContactClass c2 = make_class(typeA_arg(m2), split_ids(g2), g2);
    PairedClass pc = pair_contact(c1, dual_class(c2, azdd()));
    bool nv = is_nonvanishing_cycle(pc.complex, pc.cycle);
    std::size_t r = homology_rank(pc.complex);
    cx.emit({{"nonvanishing", nv}, {"homology_rank", r}}, [&] {
        cx.out << (nv ? "nonvanishes" : "vanishes") << '\n';
        cx.out << "homology rank " << r << '\n';
    });
}

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = parse_int_token(s);
        return {v, v};
    }
    int lo = parse_int_token(s.substr(0, dots)), hi = parse_int_token(s.substr(dots + 2));
    if (lo > hi) throw UsageError("empty framing range '" + s + "'");
    return {lo, hi};
}

void cmd_contact_verify(Context& cx, const std::string& knot, const std::string& framings) {
    auto [lo, hi] = parse_range(framings);
    json rows = json::array();
    for (int n = lo; n <= hi; ++n) {
        auto r = legendrian_surgery(knot, n);
        if (!r.xi3_nonvanishing || !r.xi1_nonvanishing) cx.code = 1;
        rows.push_back({{"framing", n}, {"rho3_side", r.xi3_nonvanishing}, {"rho1_side", r.xi1_nonvanishing}});
    }
    cx.emit({{"knot", knot}, {"results", rows}}, [&] {
        for (const auto& row : rows)
            cx.out << "n=" << row["framing"].get<int>() << "  rho3 side "
                   << (row["rho3_side"].get<bool>() ? "nonvanishes" : "vanishes") << ", rho1 side "
                   << (row["rho1_side"].get<bool>() ? "nonvanishes" : "vanishes") << '\n';
        cx.out << (cx.code == 0 ? "ok" : "fail") << '\n';
    });
}

void cmd_curve_tau_eps(Context& cx, const std::string& tok) {
    Curve c = curve_arg(tok, true);
    auto [tau, eps] = tau_epsilon(lift(distinguished(c)));
    cx.emit({{"tau", tau}, {"epsilon", eps}}, [&] { cx.out << "tau " << tau << "\nepsilon " << eps << '\n'; });
}

void cmd_curve_rank(Context& cx, const std::string& a, const std::string& d) {
    long n = min_intersections(curve_arg(a, true), curve_arg(d, false));
    cx.emit({{"intersections", n}}, [&] { cx.out << n << '\n'; });
}

void cmd_curve_show(Context& cx, const std::string& tok, bool d_picture) {
    Curve c = curve_arg(tok, !d_picture);
    std::string text = print_curve(c);
    cx.emit({{"curve", text}}, [&] { cx.out << text << '\n'; });
}

void cmd_render(Context& cx, const std::string& tok, const std::string& path, bool lifted) {
    Curve c = curve_arg(tok, true);
    std::string svg = lifted ? render_svg(lift(distinguished(c))) : render_svg(c);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << svg;
    cx.emit({{"written", path}, {"bytes", svg.size()}}, [&] { cx.out << "wrote " << path << '\n'; });
}

struct SurgeryArgs {
    std::optional<int> tb, rot, tau, eps, s, n;
    std::string model, mark, knot;
};

void cmd_surgery(Context& cx, const SurgeryArgs& a) {
    auto need = [](const std::optional<int>& v, const char* flag, const char* mode) {
        if (!v) throw UsageError(std::string("missing ") + flag + " (" + mode + ")");
        return *v;
    };
    if (!a.model.empty()) {
        const char* mode = "curve mode: --model <knot model> --mark <generator> --n <k>";
        if (a.mark.empty()) throw UsageError(std::string("missing --mark (") + mode + ")");
        int n = need(a.n, "--n", mode);
        SurgeryVerdict v = surgery_verdict_curve(curve_arg(a.model, true), a.mark, n);
        cx.emit({{"verdict", to_string(v)}, {"method", "curve lemmas"}}, [&] {
            cx.out << to_string(v) << '\n' << "from the curve lemmas at " << a.mark << '\n';
        });
        return;
    }
    if (!a.knot.empty()) {
        const char* mode = "algebra mode: --knot <key> --tb --rot --n";
        int tb = need(a.tb, "--tb", mode), rot = need(a.rot, "--rot", mode), n = need(a.n, "--n", mode);
        SurgeryVerdict v = surgery_verdict_algebra(a.knot, tb, rot, n);
        cx.emit({{"verdict", to_string(v)}, {"method", "pairing"}}, [&] {
            cx.out << to_string(v) << '\n' << "from the pairing with the framed solid torus\n";
        });
        return;
    }
    const char* mode = "formula mode: --tb --rot --tau --eps --s";
    int tb = need(a.tb, "--tb", mode), rot = need(a.rot, "--rot", mode), tau = need(a.tau, "--tau", mode);
    int eps = need(a.eps, "--eps", mode), s = need(a.s, "--s", mode);
    SurgeryVerdict v = surgery_verdict_formula(tb, rot, tau, eps, s);
    std::string why = verdict_case(tb, rot, tau, eps, s);
    cx.emit({{"verdict", to_string(v)}, {"method", "formula"}, {"case", why}},
            [&] { cx.out << to_string(v) << '\n' << "case: " << why << '\n'; });
}

bool usage_like(const Error& e) {
    return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidInput*>(&e) ||
           dynamic_cast<const InvalidFraming*>(&e) || dynamic_cast<const BadForm*>(&e) ||
           dynamic_cast<const BadMark*>(&e) || dynamic_cast<const UnknownGenerator*>(&e);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bordered Floer pairings, contact classes and Farey paths", "bfh"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    Context cx{out};
    std::function<void()> action;

    std::string t1, t2, t3, t4;
    bool flag = false;

    auto* check = app.add_subcommand("check", "Validate a model or every structure in a file");
    check->add_option("target", t1, "model name or file")->required();
    check->callback([&] { action = [&] { cmd_check(cx, t1); }; });

    auto* pair = app.add_subcommand("pair", "Box tensor product of a type-A and a type-D model");
    pair->add_option("A", t1)->required();
    pair->add_option("D", t2)->required();
    pair->add_flag("--homology", flag, "Also report homology");
    pair->callback([&] { action = [&] { cmd_pair(cx, t1, t2, flag); }; });

    auto* dd = app.add_subcommand("dd-pair", "Tensor a type-A model with the twisting bimodule");
    dd->add_option("A", t1)->required();
    dd->add_flag("--reduce", flag, "Cancel idempotent arrows");
    dd->callback([&] { action = [&] { cmd_dd_pair(cx, t1, flag); }; });

    auto* farey = app.add_subcommand("farey", "Farey graph paths and tightness");
    farey->require_subcommand(1);
    auto* fpath = farey->add_subcommand("path", "Minimal clockwise path between two slopes");
    fpath->add_option("from", t1)->required();
    fpath->add_option("to", t2)->required();
    fpath->callback([&] { action = [&] { cmd_farey_path(cx, t1, t2); }; });
    auto* fclass = farey->add_subcommand("classify", "Classify a decorated path 'vertex (sign vertex)*'");
    fclass->add_option("path", t1)->required();
    fclass->add_flag("--slice", flag, "Path in T^2 x I, no circle edge required");
    fclass->callback([&] { action = [&] { cmd_farey_classify(cx, t1, flag); }; });
    auto* fcount = farey->add_subcommand("count", "Tight structures on the solid torus with slope 1/n");
    fcount->add_option("slope", t1)->required();
    fcount->add_flag("--enumerate", flag, "Cross-check by enumerating shuffle classes");
    fcount->callback([&] { action = [&] { cmd_farey_count(cx, t1, flag); }; });

    auto* contact = app.add_subcommand("contact", "Contact classes on type-A models");
    contact->require_subcommand(1);
    auto* cby = contact->add_subcommand("bypass", "m2(c, a) for a class c given by generator ids");
    cby->add_option("model", t1)->required();
    cby->add_option("generators", t2, "comma separated ids")->required();
    cby->add_option("letter", t3, "r1, r2, r3, r12, r23 or r123")->required();
    cby->callback([&] { action = [&] { cmd_contact_bypass(cx, t1, t2, t3); }; });
    auto* csv = contact->add_subcommand("sv", "Image of a class in the meridional idempotent");
    csv->add_option("model", t1)->required();
    csv->add_option("generators", t2)->required();
    t3 = "r2";
    csv->add_option("--via", t3, "r2 or r3");
    csv->callback([&] { action = [&] { cmd_contact_sv(cx, t1, t2, t3); }; });
    auto* cpair = contact->add_subcommand("pair", "Pair two classes through the twisting bimodule");
    cpair->add_option("A", t1)->required();
    cpair->add_option("A-generators", t2)->required();
    cpair->add_option("B", t3)->required();
    cpair->add_option("B-generators", t4)->required();
    cpair->callback([&] { action = [&] { cmd_contact_pair(cx, t1, t2, t3, t4); }; });
    auto* cver = contact->add_subcommand("verify", "Legendrian surgery nonvanishing over a framing range");
    cver->add_option("--model", t1, "knot key, e.g. lht")->required();
    cver->add_option("--framings", t2, "lo..hi")->required();
    cver->callback([&] { action = [&] { cmd_contact_verify(cx, t1, t2); }; });

    auto* curve = app.add_subcommand("curve", "Immersed curve invariants");
    curve->require_subcommand(1);
    auto* cte = curve->add_subcommand("tau-eps", "tau and epsilon from the distinguished component");
    cte->add_option("curve", t1, "model name, curve text or file")->required();
    cte->callback([&] { action = [&] { cmd_curve_tau_eps(cx, t1); }; });
    auto* crk = curve->add_subcommand("rank", "Minimal intersection of an A-picture and a D-picture curve");
    crk->add_option("c1", t1)->required();
    crk->add_option("c2", t2)->required();
    crk->callback([&] { action = [&] { cmd_curve_rank(cx, t1, t2); }; });
    auto* cshow = curve->add_subcommand("show", "Print the curve of a model");
    cshow->add_option("model", t1)->required();
    cshow->add_flag("--d-picture", flag, "Type-D picture instead of the type-A picture");
    cshow->callback([&] { action = [&] { cmd_curve_show(cx, t1, flag); }; });

    SurgeryArgs sa;
    auto* surg = app.add_subcommand("surgery", "Contact surgery verdicts");
    surg->add_option("--tb", sa.tb, "Thurston-Bennequin number");
    surg->add_option("--rot", sa.rot, "rotation number");
    surg->add_option("--tau", sa.tau, "tau of the knot, formula mode");
    surg->add_option("--eps", sa.eps, "epsilon of the knot, formula mode");
    surg->add_option("--s", sa.s, "smooth surgery coefficient tb + n, formula mode");
    surg->add_option("--model", sa.model, "knot model, curve mode");
    surg->add_option("--mark", sa.mark, "generator on a vertical step");
    surg->add_option("--n", sa.n, "solid torus parameter");
    surg->add_option("--knot", sa.knot, "knot key, algebra mode");
    surg->callback([&] { action = [&] { cmd_surgery(cx, sa); }; });

    auto* render = app.add_subcommand("render", "Write a curve as SVG");
    render->add_option("curve", t1)->required();
    render->add_option("--out", t2, "output path")->required();
    render->add_flag("--lift", flag, "Draw the lift to the strip");
    render->callback([&] { action = [&] { cmd_render(cx, t1, t2, flag); }; });

    std::vector<std::string> argv_store = {"bfh"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* deepest = &app;
        while (!deepest->get_subcommands().empty()) deepest = deepest->get_subcommands().front();
        out << deepest->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        const CLI::App* deepest = &app;
        while (!deepest->get_subcommands().empty()) deepest = deepest->get_subcommands().front();
        for (const auto& token : app.remaining(true)) err << "unexpected token '" << token << "'\n";
        err << deepest->help();
        return 2;
    }
    cx.as_json = format == "json";

    try {
        action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << (usage_like(e) ? "usage error: " : "error: ") << e.what() << '\n';
        return usage_like(e) ? 2 : 1;
    }
    return cx.code;
}

}  // namespace bfh::cli
