#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = bfh::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
    Result s = run({"surgery", "--tb", "1", "--rot", "0", "--tau", "1", "--eps", "1", "--s", "2"});
    CHECK(s.code == 0);
    CHECK(first_line(s.out) == "nonvanishes");
    Result f = run({"farey", "count", "1/-4"});
    CHECK(f.code == 0);
    CHECK(f.out == "4\n");
    Result c = run({"check", "az"});
    CHECK(c.code == 0);
    CHECK(c.out == "ok\n");
}

TEST_CASE("json twins carry the same values") {
    auto j = nlohmann::json::parse(run({"--format", "json", "farey", "count", "1/-4"}).out);
    CHECK(j["count"] == 4);
    auto s = nlohmann::json::parse(run({"surgery", "--tb", "1", "--rot", "0", "--tau", "1", "--eps", "1", "--s", "2", "--format", "json"}).out);
    CHECK(s["verdict"] == "nonvanishes");
    auto p = nlohmann::json::parse(run({"--format", "json", "farey", "path", "inf", "-1/3"}).out);
    CHECK(p["path"] == nlohmann::json::array({"inf", "-1", "-1/2", "-1/3"}));
    auto t = nlohmann::json::parse(run({"--format", "json", "curve", "tau-eps", "knot:t34:f=0"}).out);
    CHECK(t["tau"] == 3);
    CHECK(t["epsilon"] == 1);
    auto h = nlohmann::json::parse(run({"--format", "json", "pair", "knot:rht:f=-1", "cap:i0", "--homology"}).out);
    CHECK(h["homology_rank"] == 3);
}

TEST_CASE("subcommands") {
    CHECK(run({"farey", "path", "inf", "1/3"}).out == "inf 0 1/3\n");
    CHECK(run({"farey", "classify", "inf o -1 + -1/2 - -1/3"}).out == "virtually_overtwisted\n");
    CHECK(run({"farey", "count", "1/-5", "--enumerate"}).out == "5\nenumerated 5\n");
    CHECK(run({"curve", "tau-eps", "knot:lht:f=2"}).out == "tau -1\nepsilon -1\n");
    CHECK(run({"curve", "rank", "aline:q=1:p=2", "dline:q=2:p=1"}).out == "3\n");
    Result pr = run({"pair", "knot:rht:f=-1", "cap:i0", "--homology"});
    CHECK(pr.out.find("homology rank 3") != std::string::npos);
    Result dd = run({"dd-pair", "solid:n=2:param=c", "--reduce"});
    CHECK(dd.out.find("[typeD]") == 0);
    Result v = run({"contact", "verify", "--model", "lht", "--framings=-3..-1"});
    CHECK(v.code == 0);
    CHECK(v.out.find("ok") != std::string::npos);
    CHECK(first_line(run({"surgery", "--knot", "rht", "--tb", "0", "--rot", "-1", "--n", "2"}).out) == "nonvanishes");
    CHECK(first_line(run({"surgery", "--knot", "rht", "--tb", "0", "--rot", "-1", "--n", "1"}).out) == "vanishes");
    CHECK(first_line(run({"surgery", "--model", "knot:lht:f=-1", "--mark", "g1", "--n", "5"}).out) != "");
}

TEST_CASE("validation failures exit 1") {
    auto path = std::filesystem::temp_directory_path() / "bfh_cli_bad.txt";
    std::ofstream(path) << "[typeD] bad\ngen x i0\ngen y i1\ngen z i0\narrow x r1 y\narrow y r2 z\n";
    Result r = run({"check", path.string()});
    CHECK(r.code == 1);
    CHECK(first_line(r.out) == "fail");
    std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2 and name the token") {
    Result a = run({"farey", "bogus"});
    CHECK(a.code == 2);
    CHECK(a.err.find("bogus") != std::string::npos);
    Result b = run({"check", "knot:nope:f=1"});
    CHECK(b.code == 2);
    CHECK(b.err.find("knot:nope:f=1") != std::string::npos);
    Result c = run({"surgery", "--tb", "1"});
    CHECK(c.code == 2);
    CHECK(c.err.find("--rot") != std::string::npos);
    Result d = run({"farey", "count", "2/3"});
    CHECK(d.code == 2);
    CHECK(d.err.find("2/3") != std::string::npos);
    Result e = run({"contact", "bypass", "solid:n=2:param=c", "x1", "r9"});
    CHECK(e.code == 2);
    CHECK(e.err.find("r9") != std::string::npos);
    Result f = run({"--format", "xml", "check", "az"});
    CHECK(f.code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("help exits 0") {
    Result h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("surgery") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
    std::vector<std::vector<std::string>> cmds = {
        {"pair", "knot:t34:f=1", "dline:q=1:p=2", "--homology"},
        {"dd-pair", "solid:n=-3:param=a"},
        {"--format", "json", "check", "knot:t34:f=-2:mirror"},
        {"curve", "show", "knot:rht:f=-1"},
        {"contact", "bypass", "knot:rht:f=0", "x0", "r1"},
    };
    for (const auto& cmd : cmds) {
        Result a = run(cmd), b = run(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
    auto dir = std::filesystem::temp_directory_path();
    auto p1 = (dir / "bfh_render_1.svg").string(), p2 = (dir / "bfh_render_2.svg").string();
    CHECK(run({"render", "knot:rht:f=-1", "--out", p1, "--lift"}).code == 0);
    CHECK(run({"render", "knot:rht:f=-1", "--out", p2, "--lift"}).code == 0);
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    CHECK(slurp(p1) == slurp(p2));
    CHECK(slurp(p1).find("<svg") == 0);
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

}
