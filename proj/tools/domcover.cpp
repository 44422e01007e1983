// Command-line front end: text/JSON formats, exit code 0 for
// success/property-true, 1 for property-false (counterexample JSON on
// stdout), 2 for input, format, or capacity errors (message on stderr).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domcover/domcover.hpp"
#include "domcover/fuzz.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace domcover;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open '" + out_path + "' for writing");
    out << text;
}

json vertices_json(const std::vector<int>& vs) { return json(vs); }

json domination_json(const DominationCertificate& cert) {
    json j;
    j["verdict"] = cert.dominating;
    if (!cert.dominating) j["witness"] = vertices_json(cert.witness);
    return j;
}

json parts_json(const std::vector<FeasibleEntry>& parts, const std::vector<char>& palette) {
    json arr = json::array();
    for (const auto& p : parts) {
        json jp;
        jp["color"] = std::string(1, palette.at(p.color));
        jp["vertices"] = p.vertices.to_vector();
        arr.push_back(std::move(jp));
    }
    return arr;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

/// Shared tournament loading with the --reverse / --star transforms.
struct TournamentInput {
    std::string path;
    bool reversed = false;
    bool starred = false;

    Tournament load_tournament() const {
        std::istringstream in(slurp(path));
        Tournament t = read_tournament(in);
        return reversed ? reverse(t) : t;
    }

    Digraph load_digraph() const {
        Tournament t = load_tournament();
        return starred ? star(t) : t.digraph();
    }
};

int default_guard_from_env(int fallback) {
    if (const char* env = std::getenv("DOMCOVER_GUARD")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("DOMCOVER_GUARD must be an integer");
        }
    }
    return fallback;
}

struct Args {
    int d = 0;
    int k = 0;
    int n = 0;
    int m = 0;
    int samples = 0;
    int retries = 32;
    int guard = 0;  // 0: default for the subcommand
    std::uint64_t seed = 1;
    std::string in_path;
    std::string cert_path;
    std::string out_path;
    std::vector<int> sizes;
    std::string mode = "dominating";
    bool reversed = false;
    bool starred = false;

    TournamentInput tournament() const { return {in_path, reversed, starred}; }
    int guard_or(int fallback) const {
        return guard > 0 ? guard : default_guard_from_env(fallback);
    }
};

int run_paley(const Args& a) {
    Tournament t = paley(a.n);
    emit(a.out_path, to_text(t));
    return kExitTrue;
}

int run_gen_cim(const Args& a) {
    auto ex = generate_example_cim(a.d, a.sizes);
    emit(a.out_path, to_text(ex.digraph));
    return kExitTrue;
}

int run_gen_threecolor(const Args& a) {
    emit(a.out_path, to_text(generate_three_color(a.n)));
    return kExitTrue;
}

int run_gen_tourcolor(const Args& a) {
    auto k = coloring_from_tournament(a.tournament().load_tournament());
    emit(a.out_path, to_text(k));
    return kExitTrue;
}

int run_cover_fuzz(const Args& a) {
    const int d = a.d;
    const int max_n = a.guard_or(40);
    const auto limit = d == 1 ? 2 : bound(d);
    std::size_t max_parts = 0;
    for (int i = 0; i < a.samples; ++i) {
        auto k = fuzz_coloring(a.seed, i, max_n);
        auto cert = d == 1 ? loop_cover(k) : cover(k, d);
        auto v = verify_cover(k, cert, d);
        if (!v || cert.parts.size() > limit) {
            json bad;
            bad["case"] = i;
            bad["seed"] = a.seed + static_cast<std::uint64_t>(i);
            bad["n"] = k.order();
            bad["parts"] = cert.parts.size();
            bad["bound"] = limit;
            bad["valid"] = v.valid;
            if (!v.valid) bad["reason"] = v.reason;
            print_json(bad);
            return kExitFalse;
        }
        max_parts = std::max(max_parts, cert.parts.size());
    }
    json ok;
    ok["cases"] = a.samples;
    ok["d"] = d;
    ok["max_n"] = max_n;
    ok["max_parts"] = max_parts;
    ok["bound"] = limit;
    ok["all_valid"] = true;
    print_json(ok);
    return kExitTrue;
}

int run_cover(const Args& a) {
    if (a.samples > 0) return run_cover_fuzz(a);
    auto k = colored_from_text(slurp(a.in_path));
    auto cert = a.d == 1 ? loop_cover(k) : cover(k, a.d);
    auto v = verify_cover(k, cert, a.d);
    if (!v) throw InternalError("emitted cover failed verification: " + v.reason);
    emit(a.out_path, cover_to_json(cert).dump(2) + "\n");
    return kExitTrue;
}

int run_verify(const Args& a) {
    auto k = colored_from_text(slurp(a.in_path));
    CoverCertificate cert;
    try {
        cert = cover_from_json(nlohmann::json::parse(slurp(a.cert_path)));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (a.d > 0 && a.d != cert.d)
        throw std::invalid_argument("-d disagrees with the certificate's d");
    auto v = verify_cover(k, cert, cert.d);
    json j;
    j["valid"] = v.valid;
    j["d"] = cert.d;
    j["parts"] = cert.parts.size();
    if (!v.valid) {
        j["reason"] = v.reason;
        if (v.failing_part >= 0) j["failing_part"] = v.failing_part;
        if (!v.witness.empty()) j["witness"] = vertices_json(v.witness);
        if (v.uncovered_vertex >= 0) j["uncovered_vertex"] = v.uncovered_vertex;
    }
    print_json(j);
    return v.valid ? kExitTrue : kExitFalse;
}

int run_mincover_fuzz(const Args& a) {
    const int d = a.d;
    const int max_n = std::min(a.guard_or(kOracleGuard), kOracleGuard);
    std::size_t max_parts = 0;
    for (int i = 0; i < a.samples; ++i) {
        auto k = fuzz_coloring(a.seed, i, max_n);
        auto oracle = min_cover_size(k, d);
        auto cert = d == 1 ? loop_cover(k) : cover(k, d);
        auto v = verify_cover(k, cert, d);
        const auto limit = d == 1 ? 2 : bound(d);
        if (!v || !oracle.feasible ||
            static_cast<std::size_t>(oracle.size) > cert.parts.size() ||
            cert.parts.size() > limit) {
            json bad;
            bad["case"] = i;
            bad["seed"] = a.seed + static_cast<std::uint64_t>(i);
            bad["n"] = k.order();
            bad["min_cover"] = oracle.size;
            bad["parts"] = cert.parts.size();
            bad["valid"] = v.valid;
            print_json(bad);
            return kExitFalse;
        }
        max_parts = std::max(max_parts, cert.parts.size());
    }
    json ok;
    ok["cases"] = a.samples;
    ok["d"] = d;
    ok["max_n"] = max_n;
    ok["max_parts"] = max_parts;
    ok["oracle_never_exceeded_engine"] = true;
    print_json(ok);
    return kExitTrue;
}

int run_mincover(const Args& a) {
    if (a.d > 0 && a.k > 0)
        throw std::invalid_argument("give either -d (colored) or -k (dominating), not both");
    if (a.samples > 0) {
        if (a.d < 1) throw std::invalid_argument("mincover --samples needs -d");
        return run_mincover_fuzz(a);
    }
    if (a.d > 0) {
        auto k = colored_from_text(slurp(a.in_path));
        auto res = min_cover_size(k, a.d, a.guard_or(kOracleGuard));
        json j;
        j["feasible"] = res.feasible;
        j["size"] = res.size;
        j["parts"] = parts_json(res.parts, k.palette());
        print_json(j);
        return res.feasible ? kExitTrue : kExitFalse;
    }
    if (a.k > 0) {
        Digraph g = a.tournament().load_digraph();
        auto res = min_cover_dominating(g, a.k, a.guard_or(kOracleGuard));
        json j;
        j["feasible"] = res.feasible;
        j["size"] = res.size;
        json arr = json::array();
        for (const auto& p : res.parts) arr.push_back(p.to_vector());
        j["parts"] = std::move(arr);
        print_json(j);
        return res.feasible ? kExitTrue : kExitFalse;
    }
    throw std::invalid_argument("mincover needs -d or -k");
}

int run_check(const Args& a) {
    Digraph g = a.tournament().load_digraph();
    if (a.samples > 0) {
        auto rep = subgraph_domination_property(g, a.k - 1, a.samples, a.seed);
        json j;
        j["holds"] = rep.holds;
        j["bound"] = a.k;
        j["samples_checked"] = rep.samples_checked;
        if (!rep.holds) {
            j["failing_side"] = rep.failing_side;
            j["counterexample"] = rep.counterexample->to_vector();
        }
        print_json(j);
        return rep.holds ? kExitTrue : kExitFalse;
    }
    DominationCertificate cert;
    if (a.mode == "dominating") cert = check_d_dominating(g, a.k);
    else if (a.mode == "dominated") cert = check_d_dominated(g, a.k);
    else throw std::invalid_argument("--mode must be dominating or dominated");
    json j = domination_json(cert);
    j["k"] = a.k;
    j["mode"] = a.mode;
    print_json(j);
    return cert.dominating ? kExitTrue : kExitFalse;
}

int run_paradox(const Args& a) {
    Tournament t = a.tournament().load_tournament();
    auto rep = is_perfectly_paradoxical(t, a.d, a.guard_or(kSubtournamentGuard));
    json j;
    j["d"] = a.d;
    j["perfect"] = rep.perfect();
    j["dominating"] = domination_json(rep.dominating);
    j["dominated"] = domination_json(rep.dominated);
    j["no_dominating_subtournament"] = !rep.dominating_subtournament.has_value();
    if (rep.dominating_subtournament)
        j["dominating_subtournament"] = vertices_json(*rep.dominating_subtournament);
    j["no_dominated_subtournament"] = !rep.dominated_subtournament.has_value();
    if (rep.dominated_subtournament)
        j["dominated_subtournament"] = vertices_json(*rep.dominated_subtournament);
    print_json(j);
    return rep.perfect() ? kExitTrue : kExitFalse;
}

int run_critical(const Args& a) {
    Tournament t = a.tournament().load_tournament();
    DominationMode mode;
    if (a.mode == "dominating") mode = DominationMode::dominating;
    else if (a.mode == "dominated") mode = DominationMode::dominated;
    else throw std::invalid_argument("--mode must be dominating or dominated");
    auto rep = is_critical(t, a.d, mode, a.guard_or(kSubtournamentGuard));
    json j;
    j["verdict"] = to_string(rep.verdict);
    j["mode"] = a.mode;
    j["d"] = a.d;
    if (rep.counterexample) j["counterexample"] = vertices_json(*rep.counterexample);
    print_json(j);
    return rep.verdict == CriticalityVerdict::not_critical ? kExitFalse : kExitTrue;
}

int run_confined(const Args& a) {
    auto k = colored_from_text(slurp(a.in_path));
    int total = 0;
    for (int s : a.sizes) total += s;
    if (total != k.order())
        throw std::invalid_argument("--sizes must sum to the number of vertices");
    std::vector<VertexSet> blocks;
    int v = 0;
    for (int s : a.sizes) {
        VertexSet b(k.order());
        for (int i = 0; i < s; ++i) b.set(v++);
        blocks.push_back(std::move(b));
    }
    auto rep = verify_parts_confined(k, blocks, a.d, a.guard_or(kOracleGuard));
    json j;
    j["confined"] = rep.confined;
    if (!rep.confined) {
        json ce;
        ce["color"] = std::string(1, k.label(rep.counterexample->color));
        ce["vertices"] = rep.counterexample->vertices.to_vector();
        j["counterexample"] = std::move(ce);
    }
    print_json(j);
    return rep.confined ? kExitTrue : kExitFalse;
}

int run_bukh(const Args& a) {
    BukhParams params;
    params.d = a.d;
    params.m = a.m;
    params.seed = a.seed;
    params.max_retries = a.retries;
    auto res = bukh(params);

    json j;
    j["success"] = res.success;
    j["d"] = params.d;
    j["m"] = params.block();
    j["n"] = params.n();
    if (res.success) j["seed_used"] = res.seed_used;
    json attempts = json::array();
    for (const auto& at : res.attempts) {
        json ja;
        ja["seed"] = at.seed;
        ja["dominating"] = at.dominating.dominating;
        ja["dominated"] = at.dominated.dominating;
        if (!at.dominating.dominating) ja["dominating_witness"] = vertices_json(at.dominating.witness);
        if (!at.dominated.dominating) ja["dominated_witness"] = vertices_json(at.dominated.witness);
        attempts.push_back(std::move(ja));
    }
    j["attempts"] = std::move(attempts);

    if (!res.success) {
        print_json(j);
        return kExitFalse;
    }
    if (a.out_path.empty()) {
        std::cout << to_text(res.tournament);
        std::cerr << j.dump(2) << '\n';
    } else {
        emit(a.out_path, to_text(res.tournament));
        print_json(j);
    }
    return kExitTrue;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"covers of 2-colored complete digraphs by monochromatic d-dominating subgraphs"};
    app.require_subcommand(1);
    Args a;

    auto* paley_cmd = app.add_subcommand("paley", "quadratic-residue tournament on p vertices");
    paley_cmd->add_option("p", a.n, "prime, p = 3 mod 4")->required();
    paley_cmd->add_option("-o", a.out_path, "output tournament file");

    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto* cim = gen->add_subcommand("cim", "2d-block lower-bound coloring");
    cim->add_option("-d", a.d, "block parameter")->required();
    cim->add_option("--sizes", a.sizes, "2d comma-separated block sizes")
        ->required()
        ->delimiter(',');
    cim->add_option("-o", a.out_path, "output colored-digraph file");
    auto* three = gen->add_subcommand("threecolor", "ordered 3-coloring with green loops");
    three->add_option("-n", a.n, "vertex count")->required();
    three->add_option("-o", a.out_path, "output colored-digraph file");
    auto* tourcolor = gen->add_subcommand("tourcolor", "blue tournament arcs, red elsewhere");
    tourcolor->add_option("file", a.in_path, "tournament file")->required();
    tourcolor->add_option("-o", a.out_path, "output colored-digraph file");
    tourcolor->add_flag("--reverse", a.reversed, "reverse the tournament first");

    auto* cover_cmd = app.add_subcommand("cover", "construct a monochromatic d-dominating cover");
    cover_cmd->add_option("-d", a.d, "domination parameter")->required()->check(CLI::PositiveNumber);
    cover_cmd->add_option("file", a.in_path, "colored-digraph file");
    cover_cmd->add_option("-o", a.out_path, "output certificate JSON");
    cover_cmd->add_option("--samples", a.samples, "fuzz mode: verify this many random colorings");
    cover_cmd->add_option("--seed", a.seed, "fuzz seed");
    cover_cmd->add_option("--guard", a.guard, "fuzz mode: largest random order (default 40)");

    auto* verify_cmd = app.add_subcommand("verify", "check a cover certificate against a coloring");
    verify_cmd->add_option("certificate", a.cert_path, "cover JSON")->required();
    verify_cmd->add_option("file", a.in_path, "colored-digraph file")->required();
    verify_cmd->add_option("-d", a.d, "must match the certificate's d");

    auto* mincover_cmd = app.add_subcommand("mincover", "exact minimum cover (exhaustive oracle)");
    mincover_cmd->add_option("file", a.in_path, "colored-digraph file (-d) or tournament file (-k)");
    mincover_cmd->add_option("-d", a.d, "monochromatic d-dominating parts");
    mincover_cmd->add_option("-k", a.k, "k-dominating induced subgraphs of a digraph");
    mincover_cmd->add_flag("--reverse", a.reversed, "reverse the tournament first");
    mincover_cmd->add_flag("--star", a.starred, "add a loop at every vertex");
    mincover_cmd->add_option("--samples", a.samples, "oracle-vs-engine fuzz over random colorings");
    mincover_cmd->add_option("--seed", a.seed, "fuzz seed");
    mincover_cmd->add_option("--guard", a.guard, "oracle size guard / fuzz max order");

    auto* check_cmd = app.add_subcommand("check", "domination checks on a tournament file");
    check_cmd->add_option("file", a.in_path, "tournament file")->required();
    check_cmd->add_option("-k", a.k, "domination parameter")->required()->check(CLI::PositiveNumber);
    check_cmd->add_option("--mode", a.mode, "dominating (default) or dominated");
    check_cmd->add_flag("--reverse", a.reversed, "reverse the tournament first");
    check_cmd->add_flag("--star", a.starred, "add a loop at every vertex");
    check_cmd->add_option("--samples", a.samples,
                          "sampled induced subgraphs must have in/out dominating sets of size <= k");
    check_cmd->add_option("--seed", a.seed, "sampling seed");

    auto* paradox_cmd = app.add_subcommand("paradox", "perfectly d-paradoxical test");
    paradox_cmd->add_option("file", a.in_path, "tournament file")->required();
    paradox_cmd->add_option("-d", a.d, "paradox parameter")->required()->check(CLI::PositiveNumber);
    paradox_cmd->add_flag("--reverse", a.reversed, "reverse the tournament first");
    paradox_cmd->add_option("--guard", a.guard, "exhaustive subtournament scan guard (default 22)");

    auto* critical_cmd = app.add_subcommand("critical", "criticality of a dominating/dominated tournament");
    critical_cmd->add_option("file", a.in_path, "tournament file")->required();
    critical_cmd->add_option("-d", a.d, "domination parameter")->required()->check(CLI::PositiveNumber);
    critical_cmd->add_option("--mode", a.mode, "dominating (default) or dominated");
    critical_cmd->add_flag("--reverse", a.reversed, "reverse the tournament first");
    critical_cmd->add_option("--guard", a.guard, "exhaustive subtournament scan guard (default 22)");

    auto* confined_cmd = app.add_subcommand("confined", "are all feasible parts inside single blocks?");
    confined_cmd->add_option("file", a.in_path, "colored-digraph file")->required();
    confined_cmd->add_option("-d", a.d, "domination parameter")->required()->check(CLI::PositiveNumber);
    confined_cmd->add_option("--sizes", a.sizes, "consecutive block sizes")->required()->delimiter(',');
    confined_cmd->add_option("--guard", a.guard, "oracle size guard (default 20)");

    auto* bukh_cmd = app.add_subcommand("bukh", "randomized perfectly d-paradoxical construction");
    bukh_cmd->add_option("-d", a.d, "paradox parameter")->required()->check(CLI::PositiveNumber);
    bukh_cmd->add_option("--m", a.m, "block size (default 2^{3d})");
    bukh_cmd->add_option("--seed", a.seed, "first seed to try");
    bukh_cmd->add_option("--retries", a.retries, "seeds tried before giving up");
    bukh_cmd->add_option("-o", a.out_path, "output tournament file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitTrue : kExitError;
    }

    if (paley_cmd->parsed()) return run_paley(a);
    if (gen->parsed()) {
        if (cim->parsed()) return run_gen_cim(a);
        if (three->parsed()) return run_gen_threecolor(a);
        if (tourcolor->parsed()) return run_gen_tourcolor(a);
    }
    if (cover_cmd->parsed()) {
        if (a.samples == 0 && a.in_path.empty())
            throw std::invalid_argument("cover needs an input file or --samples");
        return run_cover(a);
    }
    if (verify_cmd->parsed()) return run_verify(a);
    if (mincover_cmd->parsed()) return run_mincover(a);
    if (check_cmd->parsed()) return run_check(a);
    if (paradox_cmd->parsed()) return run_paradox(a);
    if (critical_cmd->parsed()) return run_critical(a);
    if (confined_cmd->parsed()) return run_confined(a);
    if (bukh_cmd->parsed()) return run_bukh(a);
    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
