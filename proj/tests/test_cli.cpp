#include "hyperpack/cli.hpp"
#include "hyperpack/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hyperpack;
namespace fs = std::filesystem;

namespace {
    struct Run {
        int status;
        std::string out;
        std::string err;
    };

    Run run(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        int status = cli::run(args, out, err);
        return {status, out.str(), err.str()};
    }

    class TempDir {
    public:
        TempDir() :
            path_(fs::temp_directory_path() / ("hyperpack-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++)))
        {
            fs::create_directories(path_);
        }
        ~TempDir() { fs::remove_all(path_); }
        std::string file(const std::string& name, const std::string& contents = {}) const
        {
            auto p = path_ / name;
            if (! contents.empty())
                std::ofstream(p) << contents;
            return p.string();
        }

    private:
        static inline int counter_ = 0;
        fs::path path_;
    };
}

TEST_CASE("check")
{
    TempDir dir;
    auto a = dir.file("a.hyp", "h 4 3 1\ne 1 2 3\n");
    auto b = dir.file("b.hyp", "c single edge\nh 4 3 1\ne 2 3 4\n");
    auto r = run({"check", a, b});
    CHECK(r.status == cli::positive);
    CHECK(r.out.find("condition=NAROSKI lhs=1 rhs=4 packs=true") != std::string::npos);
    CHECK(r.out.find("condition=BETA lhs=2 rhs=3 packs=true beta=1") != std::string::npos);

    auto k = dir.file("k.hyp", "h 3 3 1\ne 1 2 3\n");
    CHECK(run({"check", k, k}).status == cli::negative);

    auto s = run({"--format", "structured", "check", a, b});
    auto doc = nlohmann::json::parse(s.out);
    CHECK(doc["command"] == "check");
    CHECK(doc["status"] == 0);
    CHECK(doc["records"][0]["condition"] == "NAROSKI");
    CHECK(doc["records"][0]["lhs"] == 1);
    CHECK(doc["records"][0]["packs"] == true);
}

TEST_CASE("input and usage errors")
{
    TempDir dir;
    auto a = dir.file("a.hyp", "h 4 3 1\ne 1 2 3\n");
    auto bad = dir.file("bad.hyp", "h 4 3 2\ne 1 2 3\ne 1 2\n");
    auto other = dir.file("other.hyp", "h 5 3 0\n");

    auto r = run({"check", a, bad});
    CHECK(r.status == cli::input_error);
    CHECK(r.err.find("line 3") != std::string::npos);

    auto m = run({"check", a, other});
    CHECK(m.status == cli::usage_error);
    CHECK(m.err.find("(n,k)=(4,3)") != std::string::npos);
    CHECK(m.err.find("(n,k)=(5,3)") != std::string::npos);

    CHECK(run({"check", a, dir.file("missing.hyp")}).status == cli::io_error);
    CHECK(run({"frobnicate"}).status == cli::usage_error);
    CHECK(run({}).status == cli::usage_error);
    CHECK(run({"pack", a, a, "--beta", "1", "--auto"}).status == cli::usage_error);
    CHECK(run({"pack", a, a, "--beta", "7"}).status == cli::usage_error);
}

TEST_CASE("pack and verify")
{
    TempDir dir;
    auto a = dir.file("a.hyp", "h 4 3 1\ne 1 2 3\n");
    auto r = run({"pack", a, a, "--beta", "1", "--trace"});
    CHECK(r.status == cli::positive);
    CHECK(r.out.find("result outcome=packed beta=1") != std::string::npos);
    CHECK(r.out.find("switch beta=1 u={1} v={4} before=1 after=0") != std::string::npos);
    CHECK(r.out.find("1 -> 4\n2 -> 2\n3 -> 3\n4 -> 1\n") != std::string::npos);

    auto quiet = run({"--quiet", "pack", a, a, "--beta", "1", "--trace"});
    CHECK(quiet.out.find("switch beta=") == std::string::npos);

    auto star = dir.file("star.hyp", "h 4 2 3\ne 1 2\ne 1 3\ne 1 4\n");
    auto mk = dir.file("m.hyp", "h 4 2 2\ne 1 2\ne 3 4\n");
    CHECK(run({"pack", star, mk, "--brute"}).status == cli::negative);
    CHECK(run({"pack", star, mk, "--seed", "4"}).status == cli::unknown);
    CHECK(run({"pack", star, mk, "--brute", "--budget", "2"}).status == cli::unknown);

    auto map = dir.file("map.txt", "1 -> 4\n2 -> 2\n3 -> 3\n4 -> 1\n");
    CHECK(run({"verify", a, a, "--map", map}).status == cli::positive);
    auto idmap = dir.file("id.txt", "1 -> 1\n2 -> 2\n3 -> 3\n4 -> 4\n");
    auto v = run({"verify", a, a, "--map", idmap});
    CHECK(v.status == cli::negative);
    CHECK(v.out.find("conflict edge={1,2,3}") != std::string::npos);
    auto badmap = dir.file("badmap.txt", "1 -> 1\n2 => 2\n");
    CHECK(run({"verify", a, a, "--map", badmap}).status == cli::input_error);

    // repeated runs are byte-identical
    CHECK(run({"pack", star, mk, "--seed", "9", "--trace"}).out == run({"pack", star, mk, "--seed", "9", "--trace"}).out);
}

TEST_CASE("design")
{
    TempDir dir;
    auto r = run({"design", "--t", "2", "--n", "7", "--k", "3"});
    CHECK(r.status == cli::positive);
    // stdout is itself a design file
    std::istringstream in(r.out);
    auto parsed = read_hypergraph(in);
    CHECK(parsed.graph.size() == 7);
    auto out = dir.file("fano.hyp", r.out);
    CHECK(run({"design", "--verify", out}).status == cli::positive);

    CHECK(run({"design", "--t", "2", "--n", "8", "--k", "3"}).status == cli::negative);
    CHECK(run({"design", "--t", "2", "--n", "13", "--k", "4", "--budget", "2"}).status == cli::unknown);

    auto broken = dir.file("broken.hyp", "c design t=2 lambda=1\nh 7 3 6\ne 1 4 5\ne 1 6 7\ne 2 4 6\ne 2 5 7\ne 3 4 7\ne 3 5 6\n");
    auto v = run({"design", "--verify", broken});
    CHECK(v.status == cli::negative);
    CHECK(v.out.find("violation={1,2} coverage=0") != std::string::npos);

    auto written = dir.file("sqs.hyp");
    CHECK(run({"design", "--t", "3", "--n", "8", "--k", "4", "--out", written}).status == cli::positive);
    auto f = read_hypergraph_file(written);
    CHECK(f.graph.size() == 14);
    CHECK(f.comments.front() == "design t=3 lambda=1");
}

TEST_CASE("extremal and bounds")
{
    TempDir dir;
    auto prefix = dir.file("even");
    auto r = run({"extremal", "--n", "13", "--k", "4", "--out-prefix", prefix});
    CHECK(r.status == cli::positive);
    CHECK(r.out.find("total=68") != std::string::npos);
    auto h1 = read_hypergraph_file(prefix + ".h1.hyp");
    auto h2 = read_hypergraph_file(prefix + ".h2.hyp");
    CHECK(h1.graph.size() + h2.graph.size() == 68);
    std::ifstream cert(prefix + ".cert.txt");
    std::string cert_text((std::istreambuf_iterator<char>(cert)), {});
    CHECK(cert_text.find("certified:") != std::string::npos);

    auto odd = dir.file("odd");
    auto o = run({"extremal", "--n", "21", "--k", "3", "--odd-t", "3", "--out-prefix", odd});
    CHECK(o.status == cli::positive);
    CHECK(o.out.find("h1_edges=106 h2_edges=21") != std::string::npos);
    CHECK(run({"extremal", "--n", "14", "--k", "4", "--out-prefix", odd}).status == cli::negative);
    CHECK(run({"extremal", "--n", "14", "--k", "4", "--pad", "1", "--out-prefix", odd}).status == cli::positive);

    auto b = run({"bounds", "--n", "4", "--k", "2"});
    CHECK(b.status == cli::positive);
    CHECK(b.out.find("exact m=5") != std::string::npos);
    auto b2 = run({"--format", "structured", "bounds", "--n", "27", "--k", "3"});
    auto doc = nlohmann::json::parse(b2.out);
    CHECK(doc["records"][1]["m_at_most"] == 178);
    CHECK(doc["records"][1]["exponent"] == "5/3");
}
