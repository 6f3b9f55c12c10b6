#include "hyperpack/cli.hpp"
#include "hyperpack/conditions.hpp"
#include "hyperpack/designs.hpp"
#include "hyperpack/extremal.hpp"
#include "hyperpack/io.hpp"
#include "hyperpack/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

namespace hyperpack::cli {

namespace {
    using Value = std::variant<std::string, Count, bool>;

    /// One output line. The text form is "<type> key=value ..." except for
    /// condition reports and bijection lines, which have fixed layouts.
    struct Record {
        std::string type;
        std::vector<std::pair<std::string, Value>> fields;

        Record& add(std::string key, Value v)
        {
            fields.emplace_back(std::move(key), std::move(v));
            return *this;
        }

        const Value& get(const std::string& key) const
        {
            for (const auto& [k, v] : fields)
                if (k == key)
                    return v;
            throw std::logic_error("missing field " + key);
        }
    };

    std::string text_value(const Value& v)
    {
        if (auto s = std::get_if<std::string>(&v))
            return *s;
        if (auto c = std::get_if<Count>(&v))
            return to_string(*c);
        return std::get<bool>(v) ? "true" : "false";
    }

    nlohmann::json json_value(const Value& v)
    {
        if (auto s = std::get_if<std::string>(&v))
            return *s;
        if (auto c = std::get_if<Count>(&v))
            return fits_int64(*c) ? nlohmann::json(static_cast<std::int64_t>(*c)) : nlohmann::json(to_string(*c));
        return std::get<bool>(v);
    }

    std::string render(const Record& r)
    {
        if (r.type == "map")
            return text_value(r.get("vertex")) + " -> " + text_value(r.get("image"));
        std::string s = r.type == "condition" ? "" : r.type;
        for (const auto& [k, v] : r.fields) {
            if (! s.empty())
                s += ' ';
            s += k + "=" + text_value(v);
        }
        return s;
    }

    struct Output {
        std::string command;
        std::vector<Record> records;
        int status = positive;
        /// Text mode only: written after the records, which then become
        /// comment lines so the whole stream stays a valid hypergraph file.
        std::string body;

        Record& add(std::string type)
        {
            records.push_back(Record{std::move(type), {}});
            return records.back();
        }
    };

    Record condition_record(const ConditionReport& c)
    {
        Record r{"condition", {}};
        r.add("condition", std::string(name(c.id))).add("lhs", c.lhs).add("rhs", c.rhs).add("packs", c.guarantees_packing);
        if (c.beta)
            r.add("beta", Count(*c.beta));
        return r;
    }

    Count as_count(std::size_t v) { return static_cast<Count>(v); }

    HypergraphFile load(const std::string& path)
    {
        if (! std::filesystem::exists(path))
            throw std::filesystem::filesystem_error("input file does not exist", path, std::make_error_code(std::errc::no_such_file_or_directory));
        return read_hypergraph_file(path);
    }

    void require_same_parameters(const std::string& a, const Hypergraph& h1, const std::string& b, const Hypergraph& h2)
    {
        if (h1.n() != h2.n() || h1.k() != h2.k())
            throw std::invalid_argument("parameter mismatch: " + a + " has (n,k)=(" + std::to_string(h1.n()) + ","
                + std::to_string(h1.k()) + ") but " + b + " has (n,k)=(" + std::to_string(h2.n()) + "," + std::to_string(h2.k()) + ")");
    }

    void add_pack_result(Output& out, const PackResult& res, bool trace, bool quiet)
    {
        auto& summary = out.add("result");
        summary.add("outcome", std::string(name(res.outcome)));
        if (res.beta)
            summary.add("beta", Count(res.beta));
        summary.add("examined", Count(res.stats.bijections_examined))
            .add("switches", Count(res.stats.switches))
            .add("restarts", Count(res.stats.restarts));
        if (trace && ! quiet)
            for (const auto& s : res.trace)
                out.add("switch")
                    .add("beta", Count(s.beta))
                    .add("u", s.u_set.str())
                    .add("v", s.v_set.str())
                    .add("before", as_count(s.conflicts_before))
                    .add("after", as_count(s.conflicts_after));
        if (res.packing)
            for (std::size_t v = 1; v <= res.packing->size(); ++v)
                out.add("map").add("vertex", as_count(v)).add("image", as_count((*res.packing)(static_cast<Vertex>(v))));
        out.status = res.outcome == PackOutcome::packed ? positive
            : res.outcome == PackOutcome::no_packing_proven ? negative
                                                            : unknown;
    }

    void emit(const Output& o, bool structured, std::ostream& os)
    {
        if (structured) {
            nlohmann::json doc;
            doc["command"] = o.command;
            doc["status"] = o.status;
            doc["records"] = nlohmann::json::array();
            for (const auto& r : o.records) {
                nlohmann::json j;
                j["type"] = r.type;
                for (const auto& [k, v] : r.fields)
                    j[k] = json_value(v);
                doc["records"].push_back(std::move(j));
            }
            os << doc.dump(2) << '\n';
        }
        else {
            for (const auto& r : o.records)
                os << (o.body.empty() ? "" : "c ") << render(r) << '\n';
            os << o.body;
        }
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Packing of k-uniform hypergraphs", "hyperpack"};
    app.require_subcommand(1);
    std::string format = "text";
    bool quiet = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--quiet", quiet, "Suppress traces");

    std::string h1_path, h2_path;

    auto* check = app.add_subcommand("check", "Evaluate the sufficient packing conditions");
    check->add_option("h1", h1_path, "First hypergraph file")->required();
    check->add_option("h2", h2_path, "Second hypergraph file")->required();
    int check_beta_value = 0;
    check->add_option("--beta", check_beta_value, "Also report this specific beta");

    auto* pack = app.add_subcommand("pack", "Search for a packing");
    pack->add_option("h1", h1_path, "First hypergraph file")->required();
    pack->add_option("h2", h2_path, "Second hypergraph file")->required();
    int beta = 0;
    bool auto_beta = false, brute = false, trace = false;
    std::uint64_t seed = 0;
    std::int64_t budget = 0;
    int restarts = default_max_restarts;
    auto* beta_opt = pack->add_option("--beta", beta, "Switching subset size");
    auto* auto_opt = pack->add_flag("--auto", auto_beta, "Pick beta from the condition witness");
    pack->add_flag("--brute", brute, "Exhaustive search");
    pack->add_option("--seed", seed, "Seed for restarts");
    pack->add_option("--budget", budget, "Node budget for --brute");
    pack->add_option("--restarts", restarts, "Restart cap for switching");
    pack->add_flag("--trace", trace, "Print every switch");
    beta_opt->excludes(auto_opt);

    auto* design = app.add_subcommand("design", "Construct or verify a t-(n,k,lambda) design");
    std::size_t dt = 0, dn = 0, dk = 0, dlambda = 1;
    std::string verify_path, out_path;
    std::int64_t design_budget = static_cast<std::int64_t>(default_design_budget);
    auto* t_opt = design->add_option("--t", dt, "Strength");
    auto* n_opt = design->add_option("--n", dn, "Number of vertices");
    auto* k_opt = design->add_option("--k", dk, "Edge size");
    auto* lambda_opt = design->add_option("--lambda", dlambda, "Multiplicity");
    design->add_option("--budget", design_budget, "Search node budget");
    design->add_option("--verify", verify_path, "Verify a design file instead of constructing");
    design->add_option("--out", out_path, "Write the design here instead of stdout");

    auto* extremal = app.add_subcommand("extremal", "Build and certify a non-packing pair");
    std::size_t en = 0, ek = 0, pad = 0;
    std::size_t odd_t = 0;
    std::string prefix;
    extremal->add_option("--n", en, "Number of vertices")->required();
    extremal->add_option("--k", ek, "Edge size")->required();
    auto* odd_t_opt = extremal->add_option("--odd-t", odd_t, "Number of design copies for odd k");
    extremal->add_option("--pad", pad, "Isolated vertices added to H2 (even k)");
    extremal->add_option("--out-prefix", prefix, "Writes PREFIX.h1.hyp, PREFIX.h2.hyp, PREFIX.cert.txt")->required();
    extremal->add_option("--budget", design_budget, "Design search node budget");

    auto* bounds = app.add_subcommand("bounds", "Report bounds on m(n,k)");
    std::size_t bn = 0, bk = 0;
    bounds->add_option("--n", bn, "Number of vertices")->required();
    bounds->add_option("--k", bk, "Edge size")->required();

    auto* verify = app.add_subcommand("verify", "Check that a bijection packs two hypergraphs");
    std::string map_path;
    verify->add_option("h1", h1_path, "First hypergraph file")->required();
    verify->add_option("h2", h2_path, "Second hypergraph file")->required();
    verify->add_option("--map", map_path, "File of 'v -> f(v)' lines")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return positive;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    const bool structured = format == "structured";
    Output o;
    try {
        if (check->parsed()) {
            o.command = "check";
            auto a = load(h1_path).graph, b = load(h2_path).graph;
            require_same_parameters(h1_path, a, h2_path, b);
            auto reports = check_all(a, b);
            if (check_beta_value != 0)
                reports.push_back(check_beta(a, b, check_beta_value));
            bool any = false;
            for (const auto& r : reports) {
                o.records.push_back(condition_record(r));
                any = any || r.guarantees_packing;
            }
            o.status = any ? positive : negative;
        }
        else if (pack->parsed()) {
            o.command = "pack";
            auto a = load(h1_path).graph, b = load(h2_path).graph;
            require_same_parameters(h1_path, a, h2_path, b);
            PackResult res;
            if (brute)
                res = brute_force_pack(a, b, budget > 0 ? budget : default_brute_force_budget);
            else if (beta_opt->count() > 0) {
                SwitchingOptions opts;
                opts.seed = seed;
                opts.max_restarts = restarts;
                res = switching_pack(a, b, beta, opts);
            }
            else
                res = switching_pack_auto(a, b, seed);
            add_pack_result(o, res, trace, quiet);
        }
        else if (design->parsed()) {
            o.command = "design";
            if (! verify_path.empty()) {
                auto file = load(verify_path);
                std::optional<std::pair<std::size_t, std::size_t>> tl;
                for (const auto& c : file.comments)
                    if (! tl)
                        tl = parse_design_comment(c);
                DesignSpec spec{tl ? tl->first : 0, file.graph.n(), file.graph.k(), tl ? tl->second : 1};
                if (t_opt->count())
                    spec.t = dt;
                if (lambda_opt->count())
                    spec.lambda = dlambda;
                if ((n_opt->count() && dn != spec.n) || (k_opt->count() && dk != spec.k))
                    throw std::invalid_argument("--n/--k disagree with the header of " + verify_path);
                if (spec.t == 0)
                    throw std::invalid_argument("t unknown: pass --t or add a 'c design t=.. lambda=..' line");
                auto check_result = verify_design(Design{spec, file.graph.edges()});
                auto& r = o.add("verify");
                r.add("spec", spec.str()).add("blocks", as_count(file.graph.size())).add("valid", check_result.ok);
                if (check_result.violation)
                    r.add("violation", check_result.violation->str()).add("coverage", as_count(check_result.coverage));
                o.status = check_result.ok ? positive : negative;
            }
            else {
                if (! t_opt->count() || ! n_opt->count() || ! k_opt->count())
                    throw std::invalid_argument("design needs --t, --n and --k (or --verify FILE)");
                DesignSpec spec{dt, dn, dk, dlambda};
                auto div = divisibility_check(spec);
                for (const auto& term : div.terms)
                    o.add("divisibility")
                        .add("i", as_count(term.i))
                        .add("divisor", term.divisor)
                        .add("dividend", term.dividend)
                        .add("divides", term.divides);
                auto res = construct_design(spec, design_budget);
                auto& r = o.add("design");
                r.add("spec", spec.str());
                switch (res.status) {
                case ConstructStatus::found: r.add("status", std::string("found")); break;
                case ConstructStatus::not_found: r.add("status", std::string("not-found")); break;
                case ConstructStatus::budget_exceeded: r.add("status", std::string("budget-exceeded")); break;
                }
                r.add("nodes", Count(res.nodes));
                if (res.design) {
                    r.add("blocks", as_count(res.design->blocks.size()));
                    auto h = design_to_hypergraph(*res.design);
                    std::vector<std::string> comments{design_comment(spec)};
                    if (! out_path.empty()) {
                        write_hypergraph_file(out_path, h, comments);
                        r.add("file", out_path);
                    }
                    else if (! structured) {
                        std::ostringstream body;
                        write_hypergraph(body, h, comments);
                        o.body = body.str();
                    }
                    else
                        for (const auto& b : res.design->blocks)
                            o.add("block").add("points", b.str());
                }
                else
                    r.add("reason", res.reason);
                o.status = res.status == ConstructStatus::found ? positive
                    : res.status == ConstructStatus::not_found ? negative
                                                               : unknown;
            }
        }
        else if (extremal->parsed()) {
            o.command = "extremal";
            if (ek % 2 == 1 && pad != 0)
                throw std::invalid_argument("--pad applies to even k only");
            ExtremalPair pair = ek % 2 == 1
                ? build_odd_pair(en, ek, odd_t_opt->count() ? std::optional<std::size_t>(odd_t) : std::nullopt, design_budget)
                : build_even_pair_padded(en, ek, pad, design_budget);
            auto cert = verify_nonpacking(pair);

            const std::string p1 = prefix + ".h1.hyp", p2 = prefix + ".h2.hyp", pc = prefix + ".cert.txt";
            std::string kind(name(pair.kind));
            write_hypergraph_file(p1, pair.h1, {"extremal " + kind + " H1"});
            write_hypergraph_file(p2, pair.h2, {"extremal " + kind + " H2"});

            auto& r = o.add("pair");
            r.add("kind", kind)
                .add("n", as_count(pair.params.n))
                .add("k", as_count(pair.params.k))
                .add("h1_edges", as_count(pair.h1.size()))
                .add("h2_edges", as_count(pair.h2.size()))
                .add("total", pair.claimed_total);
            if (pair.kind == ExtremalKind::odd_k)
                r.add("t", as_count(pair.params.copies)).add("clique", as_count(pair.params.clique_size));
            else
                r.add("kernels", as_count(pair.params.kernels)).add("padding", as_count(pair.params.padding));
            o.add("certificate").add("certified", cert.ok).add("file", pc);
            o.add("files").add("h1", p1).add("h2", p2);

            std::ofstream cf(pc);
            if (! cf)
                throw std::filesystem::filesystem_error("cannot write certificate", pc, std::make_error_code(std::errc::io_error));
            cf << "pair " << kind << " n=" << pair.params.n << " k=" << pair.params.k << " total=" << to_string(pair.claimed_total) << '\n';
            for (const auto& line : cert.verified)
                cf << "verified: " << line << '\n';
            if (pair.kind == ExtremalKind::even_k_padded)
                cf << "note: kernels number padding+1 and each kernel is joined to every alpha-subset outside itself\n";
            if (cert.ok)
                cf << "certified: no bijection packs H1 and H2\n";
            else
                cf << "failed: " << cert.failure << (cert.witness ? " witness=" + cert.witness->str() : "") << '\n';
            o.status = cert.ok ? positive : negative;
        }
        else if (bounds->parsed()) {
            o.command = "bounds";
            if (bk < 1 || bk > bn)
                throw std::invalid_argument("bounds needs 1 <= k <= n");
            const auto n = static_cast<std::int64_t>(bn), k = static_cast<std::int64_t>(bk);
            o.add("lower").add("n", Count(n)).add("k", Count(k)).add("packing_threshold", packing_threshold(n, k))
                .add("m_at_least", m_lower_bound(n, k));
            if (bk == 2)
                o.add("exact").add("m", m_graph(n));
            if (bk % 2 == 0) {
                auto ub = even_upper_bound(bn, bk);
                auto& r = o.add("upper").add("construction", std::string("even"));
                r.add("divisible", ub.has_value());
                if (ub)
                    r.add("m_at_most", *ub);
            }
            else if (bk >= 3) {
                auto t = default_odd_copies(bn, bk);
                auto ub = odd_upper_bound(bn, bk, t);
                auto [num, den] = odd_exponent(bk);
                auto& r = o.add("upper").add("construction", std::string("odd")).add("t", as_count(t));
                r.add("divisible", ub.has_value());
                if (ub)
                    r.add("m_at_most", *ub);
                r.add("exponent", std::to_string(num) + "/" + std::to_string(den));
            }
        }
        else if (verify->parsed()) {
            o.command = "verify";
            auto a = load(h1_path).graph, b = load(h2_path).graph;
            require_same_parameters(h1_path, a, h2_path, b);
            std::ifstream mf(map_path);
            if (! mf)
                throw std::filesystem::filesystem_error("cannot open", map_path, std::make_error_code(std::errc::no_such_file_or_directory));
            Bijection f;
            try {
                f = read_bijection(mf);
            }
            catch (const ParseError& e) {
                throw ParseError(e.line(), e.detail(), map_path);
            }
            if (f.size() != a.n())
                throw std::invalid_argument("mapping covers " + std::to_string(f.size()) + " vertices, expected " + std::to_string(a.n()));
            auto cs = conflicts(a, b, f);
            o.add("packing").add("valid", cs.empty()).add("conflicts", as_count(cs.size()));
            if (! quiet)
                for (const auto& c : cs)
                    o.add("conflict").add("edge", c.str());
            o.status = cs.empty() ? positive : negative;
        }
    }
    catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
    catch (const ExtremalError& e) {
        err << "error: " << e.what() << '\n';
        return e.reason() == ExtremalError::Reason::design_budget ? unknown : negative;
    }
    catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return internal_error;
    }
    catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
    catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }

    emit(o, structured, out);
    return o.status;
}

} // namespace hyperpack::cli
