// Command-line front end.
//
// Exit codes: 0 success/equal, 1 unequal, 2 usage, 3 parse error, 4 budget
// exceeded.  Config precedence: flags > DOODLE_* environment variables >
// --config file (key=value lines).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "doodle/doodle.hpp"

namespace {

using namespace doodle;

constexpr int kExitOk = 0;
constexpr int kExitUnequal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitBudget = 4;

std::string default_fixture_dir() {
    if (const char* env = std::getenv("DOODLE_FIXTURES")) return env;
#ifdef DOODLE_FIXTURE_DIR
    return DOODLE_FIXTURE_DIR;
#else
    return "data/fixtures";
#endif
}

struct Config {
    std::optional<std::string> store;
    std::optional<double> budget_secs;
    std::optional<unsigned> workers;
};

Config load_config(const std::string& path) {
    Config c;
    std::ifstream in(path);
    if (!in) throw Error("config: cannot open '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (key == "store") c.store = value;
        else if (key == "budget_secs") c.budget_secs = std::stod(value);
        else if (key == "workers") c.workers = static_cast<unsigned>(std::stoul(value));
    }
    return c;
}

std::string slurp(std::istream& in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input(const std::string& spec) {
    if (spec == "-") return slurp(std::cin);
    std::ifstream in(spec);
    if (!in) throw Error("cannot open '" + spec + "'");
    return slurp(in);
}

Mode parse_mode(const std::string& text) {
    Mode mode;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part == "oriented") mode.orientation = Orientation::oriented;
        else if (part == "unoriented") mode.orientation = Orientation::unoriented;
        else if (part == "ordered") mode.ordering = Ordering::ordered;
        else if (part == "unordered") mode.ordering = Ordering::unordered;
        else if (!part.empty()) throw Error("unknown mode '" + part + "'");
    }
    return mode;
}

// Inputs: a path (.gauss/.gc, .pd, .json), "-" with --format, or
// "family:NAME[:N]".
DoodleMap load_map(const std::string& spec, const std::string& format, Mode mode) {
    if (spec.rfind("family:", 0) == 0) {
        std::string rest = spec.substr(7);
        std::string name = rest;
        std::uint32_t n = 0;
        if (auto colon = rest.find(':'); colon != std::string::npos) {
            name = rest.substr(0, colon);
            n = static_cast<std::uint32_t>(std::stoul(rest.substr(colon + 1)));
        }
        if (name == "hopf") return hopf();
        if (name == "trivial") return trivial(n ? n : 1);
        if (name == "borromean") return borromean(n ? n : 3);
        if (name == "poppy") return borromean(4);
        if (name == "gyro") return gyro(n ? n : 3);
        if (name == "ortho") return ortho(n ? n : 3);
        // Figure fixtures are addressable the same way.
        return parse_pd(fixture(name, default_fixture_dir()), mode);
    }
    std::string fmt = format;
    if (fmt.empty()) {
        auto dot = spec.rfind('.');
        if (dot != std::string::npos) {
            auto ext = spec.substr(dot + 1);
            if (ext == "gauss" || ext == "gc") fmt = "gauss";
            else if (ext == "pd") fmt = "pd";
            else if (ext == "json") fmt = "json";
        }
    }
    if (fmt.empty()) throw Error("cannot infer format of '" + spec + "'; use --format");
    auto text = read_input(spec);
    if (fmt == "gauss") return parse_gauss(text, mode);
    if (fmt == "pd") return parse_pd(text, mode);
    if (fmt == "json") return from_json(text);
    throw Error("unknown format '" + fmt + "'");
}

std::string emit_map(const DoodleMap& m, const std::string& format) {
    if (format == "gauss") return emit_gauss(m).text();
    if (format == "pd") return planarize(m).document.text();
    if (format == "json") return to_json(m) + "\n";
    throw Error("unknown output format '" + format + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"doodles on surfaces: reduction, equivalence, censuses"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value config file");

    std::string in1, in2, format, out_format = "json", mode_text;

    auto* cmd_reduce = app.add_subcommand("reduce", "reduce to the minimal diagram");
    cmd_reduce->add_option("input", in1)->required();
    cmd_reduce->add_option("--format", format, "gauss|pd|json");
    cmd_reduce->add_option("--out", out_format, "gauss|pd|json (default json)");

    auto* cmd_canon = app.add_subcommand("canon", "canonical code (hex)");
    cmd_canon->add_option("input", in1)->required();
    cmd_canon->add_option("--format", format);
    cmd_canon->add_option("--mode", mode_text, "oriented|unoriented,ordered|unordered");

    auto* cmd_eq = app.add_subcommand("eq", "doodle equality (exit 0 iff equal)");
    bool detour_only = false;
    cmd_eq->add_option("input1", in1)->required();
    cmd_eq->add_option("input2", in2)->required();
    cmd_eq->add_option("--format", format);
    cmd_eq->add_option("--mode", mode_text);
    cmd_eq->add_flag("--detour-only", detour_only, "compare Gauss data without reduction");

    auto* cmd_genus = app.add_subcommand("genus", "genus of the doodle");
    cmd_genus->add_option("input", in1)->required();
    cmd_genus->add_option("--format", format);

    auto* cmd_va = app.add_subcommand("va", "virtual area number of a virtual doodle");
    cmd_va->add_option("input", in1)->required();
    cmd_va->add_option("--format", format);

    auto* cmd_census = app.add_subcommand("census", "enumerate minimal connected diagrams");
    std::uint32_t census_n = 0;
    int census_genus = -1, census_components = -1;
    std::string store_path, resume_path, checkpoint_path;
    double budget_secs = -1;
    unsigned workers = 0;
    cmd_census->add_option("n", census_n, "crossing count")->required();
    cmd_census->add_option("--genus", census_genus, "exact genus filter");
    cmd_census->add_option("--components", census_components, "exact component count");
    cmd_census->add_option("--store", store_path, "append records to this JSON-lines store");
    cmd_census->add_option("--budget", budget_secs, "wall-clock seconds");
    cmd_census->add_option("--workers", workers, "worker threads");
    cmd_census->add_option("--resume", resume_path, "resume from a checkpoint file");
    cmd_census->add_option("--checkpoint", checkpoint_path,
                           "checkpoint file to write on budget exhaustion");

    auto* cmd_verify = app.add_subcommand("verify-claims", "check the published census claims");
    bool extended = false;
    std::string fixtures_dir = default_fixture_dir();
    cmd_verify->add_flag("--extended", extended, "run the 9/10-crossing planar checks");
    cmd_verify->add_option("--fixtures", fixtures_dir, "fixture directory");
    cmd_verify->add_option("--budget", budget_secs, "wall-clock seconds per census");
    cmd_verify->add_option("--workers", workers);

    auto* cmd_family = app.add_subcommand("family", "emit a named family map");
    std::string family_name;
    std::uint32_t family_n = 0;
    cmd_family->add_option("name", family_name)->required();
    cmd_family->add_option("n", family_n);
    cmd_family->add_option("--out", out_format, "gauss|pd|json (default json)");

    auto* cmd_planarize = app.add_subcommand("planarize", "draw as a virtual diagram");
    std::uint64_t seed = 0;
    cmd_planarize->add_option("input", in1)->required();
    cmd_planarize->add_option("--format", format);
    cmd_planarize->add_option("--seed", seed, "routing seed");

    auto* cmd_render = app.add_subcommand("render", "emit SVG or DOT");
    bool want_svg = false, want_dot = false;
    cmd_render->add_option("input", in1)->required();
    cmd_render->add_option("--format", format);
    cmd_render->add_flag("--svg", want_svg);
    cmd_render->add_flag("--dot", want_dot);

    auto* cmd_identities = app.add_subcommand("identities", "report I1-I3");
    cmd_identities->add_option("input", in1)->required();
    cmd_identities->add_option("--format", format);

    auto* cmd_confluence = app.add_subcommand("confluence", "leveled-graph experiments");
    std::size_t random_n = 0, depth = 1024;
    std::uint64_t conf_seed = 0;
    std::string doodle_seed;
    cmd_confluence->add_option("--random", random_n, "number of random graphs");
    cmd_confluence->add_option("--seed", conf_seed, "rng seed");
    cmd_confluence->add_option("--doodle-seed", doodle_seed, "input diagram");
    cmd_confluence->add_option("--depth", depth, "node budget for the descent closure");
    cmd_confluence->add_option("--format", format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Config config;
    if (!config_path.empty()) config = load_config(config_path);
    auto env_or = [](const char* name) -> std::optional<std::string> {
        if (const char* v = std::getenv(name)) return std::string(v);
        return std::nullopt;
    };
    if (store_path.empty()) {
        if (auto v = env_or("DOODLE_STORE")) store_path = *v;
        else if (config.store) store_path = *config.store;
    }
    if (budget_secs < 0) {
        if (auto v = env_or("DOODLE_BUDGET_SECS")) budget_secs = std::stod(*v);
        else if (config.budget_secs) budget_secs = *config.budget_secs;
    }
    if (workers == 0) {
        if (auto v = env_or("DOODLE_WORKERS")) workers = static_cast<unsigned>(std::stoul(*v));
        else if (config.workers) workers = *config.workers;
        else workers = 1;
    }

    Mode mode = parse_mode(mode_text);

    if (cmd_reduce->parsed()) {
        auto m = load_map(in1, format, mode);
        auto r = reduce(m);
        if (out_format == "json") {
            nlohmann::ordered_json j;
            j["result"] = map_to_json_value(r.map);
            auto trace = nlohmann::ordered_json::array();
            for (const auto& step : r.trace)
                trace.push_back(
                    {{"move", step.kind == ReductionSite::Kind::monogon ? "H1-" : "H2-"},
                     {"crossings", step.crossings}});
            j["trace"] = trace;
            std::cout << j.dump(2) << '\n';
        } else {
            for (const auto& step : r.trace) {
                std::cerr << (step.kind == ReductionSite::Kind::monogon ? "H1- at" : "H2- at");
                for (auto c : step.crossings) std::cerr << ' ' << c;
                std::cerr << '\n';
            }
            std::cout << emit_map(r.map, out_format);
        }
        return kExitOk;
    }
    if (cmd_canon->parsed()) {
        std::cout << canonical_code(load_map(in1, format, mode), mode).hex() << '\n';
        return kExitOk;
    }
    if (cmd_eq->parsed()) {
        if (detour_only) {
            auto k1 = PdDocument::parse(read_input(in1));
            auto k2 = PdDocument::parse(read_input(in2));
            return gauss_data_equal(k1, k2) ? kExitOk : kExitUnequal;
        }
        auto a = load_map(in1, format, mode);
        auto b = load_map(in2, format, mode);
        return doodle_equal(a, b, mode) ? kExitOk : kExitUnequal;
    }
    if (cmd_genus->parsed()) {
        std::cout << genus_of_doodle(load_map(in1, format, mode)) << '\n';
        return kExitOk;
    }
    if (cmd_va->parsed()) {
        std::cout << genus_of_doodle(load_map(in1, format.empty() ? "pd" : format, mode))
                  << '\n';
        return kExitOk;
    }
    if (cmd_census->parsed()) {
        CensusFilters filters;
        if (census_genus >= 0) filters.genus = census_genus;
        if (census_components >= 0) filters.components = census_components;
        CensusBudget budget;
        if (budget_secs >= 0) budget.seconds = budget_secs;
        CensusResult result;
        if (!resume_path.empty()) {
            auto state = resumption_from_json(read_input(resume_path));
            result = census_resume(state, budget, workers);
        } else {
            result = census(census_n, filters, budget, workers);
        }
        for (const auto& rec : result.records)
            std::cout << detail::record_to_json(rec).dump() << '\n';
        if (!store_path.empty()) store_append(result.records, store_path);
        if (!result.complete) {
            std::string where =
                !checkpoint_path.empty() ? checkpoint_path
                : !store_path.empty()    ? store_path + ".resume"
                                         : "census.resume";
            std::ofstream out(where);
            out << resumption_to_json(*result.resumption);
            std::cerr << "budget exceeded; checkpoint written to " << where << '\n';
            return kExitBudget;
        }
        return kExitOk;
    }
    if (cmd_verify->parsed()) {
        ClaimsOptions copts;
        copts.extended = extended;
        copts.fixture_dir = fixtures_dir;
        copts.workers = workers;
        if (budget_secs >= 0) copts.budget.seconds = budget_secs;
        auto report = verify_census_claims(copts);
        std::cout << claims_to_text(report);
        return report.all_passed() ? kExitOk : kExitUnequal;
    }
    if (cmd_family->parsed()) {
        std::string spec = "family:" + family_name;
        if (family_n) spec += ":" + std::to_string(family_n);
        std::cout << emit_map(load_map(spec, "", mode), out_format);
        return kExitOk;
    }
    if (cmd_planarize->parsed()) {
        auto r = planarize(load_map(in1, format, mode), seed);
        std::cout << "# virtual crossings: " << r.virtual_crossings << '\n'
                  << r.document.text();
        return kExitOk;
    }
    if (cmd_render->parsed()) {
        if (want_svg == want_dot) throw Error("render: pass exactly one of --svg/--dot");
        if (want_svg) {
            PdDocument doc;
            bool is_pd = format == "pd" ||
                         (format.empty() && in1.size() > 3 && in1.substr(in1.size() - 3) == ".pd");
            if (is_pd) doc = PdDocument::parse(read_input(in1));
            else doc = planarize(load_map(in1, format, mode)).document;
            std::cout << render_svg(doc);
        } else {
            std::cout << render_dot(load_map(in1, format, mode));
        }
        return kExitOk;
    }
    if (cmd_identities->parsed()) {
        auto r = check_identities(load_map(in1, format, mode));
        if (!r.applicable) {
            std::cout << r.reason << '\n';
            return kExitOk;
        }
        auto line = [](const char* name, const IdentityLine& l) {
            std::ostringstream out;
            out << name << ": " << l.lhs << " = " << l.rhs << (l.pass ? "  ok" : "  VIOLATED");
            return out.str();
        };
        std::cout << line("I1 (E = 2V)", r.i1) << '\n'
                  << line("I2 (F = V + 2 - 2g)", r.i2) << '\n'
                  << line("I3 (V - 6 + 6g = sum (i-3) F_i)", r.i3) << '\n';
        return r.all_pass() ? kExitOk : kExitUnequal;
    }
    if (cmd_confluence->parsed()) {
        if (random_n > 0) {
            std::mt19937_64 rng(conf_seed);
            std::size_t ldc_count = 0, urp_count = 0, consistent = 0;
            for (std::size_t i = 0; i < random_n; ++i) {
                auto g = random_leveled_graph(rng);
                bool ldc = check_ldc(g), urp = check_urp(g);
                ldc_count += ldc;
                urp_count += urp;
                consistent += !ldc || urp;
            }
            std::cout << "seed " << conf_seed << ": " << random_n << " graphs, ldc "
                      << ldc_count << ", urp " << urp_count << ", (ldc => urp) held on "
                      << consistent << '\n';
            return consistent == random_n ? kExitOk : kExitUnequal;
        }
        if (!doodle_seed.empty()) {
            auto m = load_map(doodle_seed, format, mode);
            auto sub = doodle_subgraph(m, depth);
            auto r = roots(sub.graph);
            std::cout << "nodes " << sub.graph.size() << ", roots " << r.size() << '\n';
            for (auto v : r)
                std::cout << "root level " << sub.graph.node(v).level << " crossings "
                          << sub.maps[v].crossing_count() << '\n';
            return r.size() == 1 ? kExitOk : kExitUnequal;
        }
        throw Error("confluence: pass --random N or --doodle-seed <in>");
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const doodle::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const doodle::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
