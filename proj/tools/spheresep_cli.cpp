// spheresep command-line front end. Talks to the library only through the
// C interface in spheresep.h.
//
// Exit codes: 0 success, 1 verification false, 2 input error,
// 3 hypothesis violation.

#include <spheresep/spheresep.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

namespace {

enum Exit { kOk = 0, kFalse = 1, kInput = 2, kHypothesis = 3 };

struct Failure {
    int code;
};

int exit_for(ssep_status st) {
    switch (st) {
        case SSEP_OK: return kOk;
        case SSEP_ERR_HYPOTHESIS:
        case SSEP_ERR_DISCONNECTED: return kHypothesis;
        case SSEP_ERR_INTERNAL: return kFalse;
        default: return kInput;
    }
}

void check(ssep_status st) {
    if (st == SSEP_OK) return;
    std::cerr << "spheresep: " << ssep_last_error() << "\n";
    throw Failure{exit_for(st)};
}

struct StringDeleter {
    void operator()(char* s) const { ssep_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ArrangementDeleter {
    void operator()(ssep_arrangement* a) const { ssep_arrangement_free(a); }
};
using Arrangement = std::unique_ptr<ssep_arrangement, ArrangementDeleter>;

struct GraphDeleter {
    void operator()(ssep_graph* g) const { ssep_graph_free(g); }
};
using Graph = std::unique_ptr<ssep_graph, GraphDeleter>;

std::string slurp(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "spheresep: cannot read " << path << "\n";
        throw Failure{kInput};
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "spheresep: cannot write " << out << "\n";
        throw Failure{kInput};
    }
    f << text;
}

struct Source {
    std::string input;
    std::string gen;
    std::uint64_t seed = 1;
    double eps = 0;

    void add_to(CLI::App* cmd) {
        auto* in = cmd->add_option("--input", input, "arrangement JSON file, - for stdin");
        auto* g = cmd->add_option("--gen", gen, "generator spec kind:key=value,...");
        in->excludes(g);
        cmd->add_option("--seed", seed, "random seed")->capture_default_str();
        cmd->add_option("--eps", eps, "predicate tolerance (default 1e-9 or SPHERESEPS_EPS)");
    }

    bool given() const { return !input.empty() || !gen.empty(); }

    Arrangement arrangement() const {
        ssep_arrangement* a = nullptr;
        if (!input.empty())
            check(ssep_arrangement_from_json(slurp(input).c_str(), &a));
        else
            check(ssep_arrangement_generate(gen.c_str(), seed, &a));
        return Arrangement(a);
    }

    // Abstract-graph generator kinds have no arrangement.
    bool abstract_kind() const {
        return gen.rfind("triangle_free_grid", 0) == 0;
    }

    Graph graph() const {
        ssep_graph* g = nullptr;
        if (!gen.empty()) {
            check(ssep_graph_generate(gen.c_str(), seed, eps, &g));
        } else {
            Arrangement a = arrangement();
            check(ssep_graph_build(a.get(), eps, &g));
        }
        return Graph(g);
    }
};

void need_source(const Source& src) {
    if (!src.given()) {
        std::cerr << "spheresep: one of --input or --gen is required\n";
        throw Failure{kInput};
    }
}

int run_build(const Source& src, const std::string& out) {
    need_source(src);
    Graph g = src.graph();
    char* text = nullptr;
    check(ssep_graph_to_edge_list(g.get(), &text));
    OwnedString owned(text);
    emit(text, out);
    return kOk;
}

struct SeparateArgs {
    std::uint32_t t = 2;
    std::uint64_t r = 0;
    std::uint64_t h = 0;
    std::string out;
    std::string scaling;
    std::uint32_t seeds = 10;
    unsigned jobs = 1;
    std::size_t dim = 2;
};

int run_scaling(const Source& src, const SeparateArgs& a) {
    char* csv = nullptr;
    double exponent = 0;
    check(ssep_scaling(src.gen.empty() ? nullptr : src.gen.c_str(), a.scaling.c_str(), src.seed,
                       a.seeds, a.t, src.eps, a.jobs, &csv, &exponent));
    OwnedString owned(csv);
    std::ostringstream os;
    os << csv;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", exponent);
    os << "# fitted_exponent " << buf << "\n";
    emit(os.str(), a.out);
    return kOk;
}

int run_separate(const Source& src, const SeparateArgs& a) {
    if (!a.scaling.empty()) return run_scaling(src, a);
    need_source(src);
    ssep_separate_options opts{a.t, a.r, a.h, src.eps, src.seed};
    int verdict = 0;
    char* record = nullptr;
    if (src.abstract_kind()) {
        Graph g = src.graph();
        check(ssep_separate_graph(g.get(), a.dim, &opts, &verdict, &record));
    } else {
        Arrangement arr = src.arrangement();
        check(ssep_separate(arr.get(), &opts, &verdict, &record));
    }
    OwnedString owned(record);
    emit(record, a.out);
    return verdict ? kOk : kFalse;
}

struct AsdimArgs {
    double r = 1;
    unsigned jobs = 1;
    std::string out;
    std::string cover_out;
    std::uint32_t seeds = 0;
};

int run_asdim(const Source& src, const AsdimArgs& a) {
    need_source(src);
    if (a.seeds > 0) {
        // Corpus mode: one row per seed.
        if (src.gen.empty()) {
            std::cerr << "spheresep: --seeds needs --gen\n";
            throw Failure{kInput};
        }
        std::ostringstream os;
        os << "seed,n,families,sets,D,verdict\n";
        bool all = true;
        for (std::uint32_t i = 0; i < a.seeds; ++i) {
            Source one = src;
            one.seed = src.seed + i;
            Arrangement arr = one.arrangement();
            int verdict = 0;
            char* report = nullptr;
            check(ssep_asdim(arr.get(), a.r, src.eps, a.jobs, one.seed, &verdict, &report,
                             nullptr));
            OwnedString owned(report);
            const std::string rep = report;
            auto field = [&](const std::string& key) {
                const auto at = rep.find("\"" + key + "\":");
                if (at == std::string::npos) return std::string("?");
                auto begin = rep.find_first_not_of(' ', at + key.size() + 3);
                auto end = rep.find_first_of(",\n}", begin);
                return rep.substr(begin, end - begin);
            };
            os << one.seed << ',' << field("n") << ',' << field("families") << ','
               << field("sets") << ',' << field("D") << ',' << (verdict ? "true" : "false")
               << "\n";
            all = all && verdict;
        }
        emit(os.str(), a.out);
        return all ? kOk : kFalse;
    }
    Arrangement arr = src.arrangement();
    int verdict = 0;
    char* report = nullptr;
    char* cover = nullptr;
    check(ssep_asdim(arr.get(), a.r, src.eps, a.jobs, src.seed, &verdict, &report, &cover));
    OwnedString owned_report(report), owned_cover(cover);
    emit(report, a.out);
    if (!a.cover_out.empty()) emit(cover, a.cover_out);
    return verdict ? kOk : kFalse;
}

struct VerifyArgs {
    std::string graph;
    std::string cover;
    std::string separator;
    std::string model;
};

int run_verify(const VerifyArgs& a) {
    ssep_graph* raw = nullptr;
    check(ssep_graph_from_edge_list(slurp(a.graph).c_str(), &raw));
    Graph g(raw);
    int verdict = 0;
    char* report = nullptr;
    if (!a.cover.empty())
        check(ssep_verify_cover(g.get(), slurp(a.cover).c_str(), &verdict, &report));
    else if (!a.separator.empty())
        check(ssep_verify_separator(g.get(), a.separator.c_str(), &verdict, &report));
    else
        check(ssep_verify_model(g.get(), slurp(a.model).c_str(), &verdict, &report));
    OwnedString owned(report);
    std::cout << report;
    return verdict ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sphere intersection graphs: separators, covers, certificates"};
    app.set_version_flag("--version", std::string(ssep_version()));
    app.require_subcommand(1);

    Source build_src;
    std::string build_out;
    auto* build = app.add_subcommand("build", "write the intersection graph as an edge list");
    build_src.add_to(build);
    build->add_option("--out", build_out, "output file (default stdout)");

    Source sep_src;
    SeparateArgs sep;
    auto* separate = app.add_subcommand("separate", "balanced separator or shallow clique minor");
    separate->set_help_flag("--help", "print this help message and exit");
    sep_src.add_to(separate);
    separate->add_option("--t", sep.t, "forbidden K_{t,t}")->capture_default_str();
    separate->add_option("--r", sep.r, "override the radius parameter");
    separate->add_option("--h", sep.h, "override the clique size");
    separate->add_option("--out", sep.out, "output file (default stdout)");
    separate->add_option("--scaling", sep.scaling, "size range, e.g. n=512..8192");
    separate->add_option("--seeds", sep.seeds, "seeds per size in --scaling mode")
        ->capture_default_str();
    separate->add_option("--jobs", sep.jobs, "worker threads")->capture_default_str();
    separate->add_option("--dim", sep.dim, "dimension for abstract-graph generators")
        ->capture_default_str();

    Source asdim_src;
    AsdimArgs ad;
    auto* asdim = app.add_subcommand("asdim", "hat graph checks and a bounded cover");
    asdim_src.add_to(asdim);
    asdim->add_option("--r", ad.r, "cover scale")->capture_default_str();
    asdim->add_option("--jobs", ad.jobs, "worker threads")->capture_default_str();
    asdim->add_option("--out", ad.out, "report file (default stdout)");
    asdim->add_option("--cover-out", ad.cover_out, "write the cover JSON here");
    asdim->add_option("--seeds", ad.seeds, "corpus mode: run seeds seed..seed+N-1");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a cover, separator or minor model");
    verify->add_option("--graph", va.graph, "edge list file")->required();
    auto* vc = verify->add_option("--cover", va.cover, "cover JSON file");
    auto* vs = verify->add_option("--separator", va.separator, "vertex ids");
    auto* vm = verify->add_option("--model", va.model, "minor model JSON file");
    auto* what = verify->add_option_group("certificate");
    what->add_option(vc);
    what->add_option(vs);
    what->add_option(vm);
    what->require_option(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*build) return run_build(build_src, build_out);
        if (*separate) return run_separate(sep_src, sep);
        if (*asdim) return run_asdim(asdim_src, ad);
        if (*verify) return run_verify(va);
    } catch (const Failure& f) {
        return f.code;
    }
    return kInput;
}
