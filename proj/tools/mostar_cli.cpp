#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mostar/mostar.h"

namespace {

// MOG_OK -> 0; bad names and arities -> 2 (usage); everything else -> 1.
int exit_code(mog_status status) {
    if (status == MOG_OK) return 0;
    std::fprintf(stderr, "error: %s\n", mog_last_error());
    return status == MOG_ERROR_INVALID_ARGUMENT ? 2 : 1;
}

int usage(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return 2;
}

// kind plus its integer arguments: P/C/S/B/B1..B6 take one, smr two,
// theta three.
int build_family(const std::string& kind, const std::vector<int>& args, mog_graph** out) {
    mog_status status;
    if (kind == "smr") {
        if (args.size() != 2) return usage("smr takes m and r");
        status = mog_make_smr(args[0], args[1], out);
    } else if (kind == "theta") {
        if (args.size() != 3) return usage("theta takes three path lengths");
        status = mog_make_theta(args[0], args[1], args[2], out);
    } else {
        if (args.size() != 1) return usage("family " + kind + " takes one integer");
        status = mog_make_family(kind.c_str(), args[0], out);
    }
    return exit_code(status);
}

int emit_graph6(mog_graph* graph) {
    char* line = nullptr;
    mog_status status = mog_graph_to_graph6(graph, &line);
    if (status == MOG_OK) {
        std::printf("%s\n", line);
        mog_string_free(line);
    }
    mog_graph_free(graph);
    return exit_code(status);
}

int index_line(const std::string& line, bool vertex_version) {
    mog_graph* graph = nullptr;
    mog_status status = mog_graph_from_graph6(line.c_str(), &graph);
    if (status != MOG_OK) return exit_code(status);
    long long value = 0;
    status = vertex_version ? mog_mostar_index(graph, &value)
                            : mog_edge_mostar_index(graph, &value);
    mog_graph_free(graph);
    if (status != MOG_OK) return exit_code(status);
    std::printf("%s,%lld\n", line.c_str(), value);
    return 0;
}

extern "C" int print_line(const char* line, void*) {
    std::printf("%s\n", line);
    return 0;
}

int write_text(const char* text, const std::string& path) {
    if (path.empty()) {
        std::fputs(text, stdout);
        return 0;
    }
    std::FILE* file = std::fopen(path.c_str(), "w");
    if (!file) {
        std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
        return 1;
    }
    std::fputs(text, file);
    std::fclose(file);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::setvbuf(stdout, nullptr, _IOLBF, 0);

    CLI::App app{"Mostar and edge Mostar index toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --jobs/--seed are accepted after the subcommand too
    int jobs = 0;
    unsigned long long seed = 12345ULL;
    app.add_option("--jobs", jobs, "worker threads; 0 means one per hardware thread")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized verification")->capture_default_str();

    auto* index = app.add_subcommand("index", "read graph6 lines, write <graph6>,<value>");
    bool vertex_version = false;
    bool edge_version = false;
    auto* mostar_flag = index->add_flag("--mostar", vertex_version, "vertex version");
    auto* edge_flag =
        index->add_flag("--edge-mostar", edge_version, "edge version (the default)");
    mostar_flag->excludes(edge_flag);
    edge_flag->excludes(mostar_flag);
    std::vector<std::string> index_family;
    index->add_option("--family", index_family, "kind and integers instead of stdin")
        ->expected(-1);

    auto* psi = app.add_subcommand("psi", "per-edge split table of one graph as CSV");
    std::vector<std::string> psi_family;
    psi->add_option("--family", psi_family, "kind and integers instead of stdin")->expected(-1);

    auto* family = app.add_subcommand("family", "write one extremal-family member as graph6");
    std::string family_kind;
    std::vector<int> family_args;
    family->add_option("kind", family_kind, "P, C, S, B, B1..B6, smr, or theta")->required();
    family->add_option("args", family_args, "integer arguments")->expected(-1);

    auto* enumerate = app.add_subcommand("enumerate", "stream one graph6 line per class");
    std::string enum_kind;
    int enum_size = 0;
    enumerate->add_option("--kind", enum_kind, "tree, unicyclic, or bicyclic")
        ->required()
        ->check(CLI::IsMember({"tree", "unicyclic", "bicyclic"}));
    enumerate->add_option("--size", enum_size, "number of edges")->required();

    auto* verify = app.add_subcommand("verify", "check one extremal table entry");
    std::string verify_what;
    int verify_size = -1;
    int verify_from = 0;
    int verify_to = 0;
    int verify_trials = 200;
    std::string json_path;
    verify->add_option("what", verify_what, "bicyclic, unicyclic, cases, joins, or shifts")
        ->required()
        ->check(CLI::IsMember({"bicyclic", "unicyclic", "cases", "joins", "shifts"}));
    auto* size_opt = verify->add_option("--size", verify_size, "size m (joins: pair budget)");
    auto* from_opt = verify->add_option("--from", verify_from, "range start for CSV summary");
    auto* to_opt = verify->add_option("--to", verify_to, "range end for CSV summary");
    verify->add_option("--trials", verify_trials, "profiles per move for shifts")
        ->capture_default_str();
    auto* json_opt = verify->add_option("--json", json_path, "write the JSON report here");
    size_opt->excludes(from_opt)->excludes(to_opt);
    json_opt->excludes(from_opt)->excludes(to_opt);

    auto* disprove = app.add_subcommand("disprove", "B versus B5 CSV over an m range");
    int disprove_from = 0;
    int disprove_to = 0;
    disprove->add_option("--from", disprove_from, "first m")->required();
    disprove->add_option("--to", disprove_to, "last m")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    if (index->parsed()) {
        bool vertex = vertex_version;
        if (!index_family.empty()) {
            std::vector<int> args;
            for (std::size_t i = 1; i < index_family.size(); ++i) {
                try {
                    args.push_back(std::stoi(index_family[i]));
                } catch (...) {
                    return usage("--family integers are malformed");
                }
            }
            mog_graph* graph = nullptr;
            if (int code = build_family(index_family[0], args, &graph)) return code;
            char* line = nullptr;
            mog_status status = mog_graph_to_graph6(graph, &line);
            mog_graph_free(graph);
            if (status != MOG_OK) return exit_code(status);
            std::string text = line;
            mog_string_free(line);
            return index_line(text, vertex);
        }
        std::string line;
        while (std::getline(std::cin, line)) {
            if (line.empty()) continue;
            if (int code = index_line(line, vertex)) return code;
        }
        return 0;
    }

    if (psi->parsed()) {
        mog_graph* graph = nullptr;
        if (!psi_family.empty()) {
            std::vector<int> args;
            for (std::size_t i = 1; i < psi_family.size(); ++i) {
                try {
                    args.push_back(std::stoi(psi_family[i]));
                } catch (...) {
                    return usage("--family integers are malformed");
                }
            }
            if (int code = build_family(psi_family[0], args, &graph)) return code;
        } else {
            std::string line;
            while (std::getline(std::cin, line) && line.empty()) {
            }
            if (line.empty()) return usage("psi needs one graph6 line on stdin");
            if (int code = exit_code(mog_graph_from_graph6(line.c_str(), &graph))) return code;
        }
        char* csv = nullptr;
        mog_status status = mog_edge_split_csv(graph, &csv);
        mog_graph_free(graph);
        if (status != MOG_OK) return exit_code(status);
        std::fputs(csv, stdout);
        mog_string_free(csv);
        return 0;
    }

    if (family->parsed()) {
        mog_graph* graph = nullptr;
        if (int code = build_family(family_kind, family_args, &graph)) return code;
        return emit_graph6(graph);
    }

    if (enumerate->parsed())
        return exit_code(mog_enumerate(enum_kind.c_str(), enum_size, jobs, print_line, nullptr));

    if (verify->parsed()) {
        mog_verify_options options{jobs, seed, verify_trials, 0};
        bool ranged = from_opt->count() > 0 || to_opt->count() > 0;
        if (ranged && (from_opt->count() == 0 || to_opt->count() == 0))
            return usage("--from and --to go together");
        if (verify_what == "joins") {
            if (ranged) return usage("joins has no range mode");
            options.budget = verify_size > 0 ? verify_size : 0;
        } else if (verify_what == "shifts") {
            if (ranged || size_opt->count() > 0) return usage("shifts takes only --trials");
        } else if (!ranged && size_opt->count() == 0) {
            return usage("verify " + verify_what + " needs --size or --from/--to");
        }
        char* text = nullptr;
        mog_status status;
        if (ranged)
            status = mog_verify_range_csv(verify_what.c_str(), verify_from, verify_to, &options,
                                          &text);
        else
            status = mog_verify_json(verify_what.c_str(), verify_size, &options, &text);
        if (status != MOG_OK) return exit_code(status);
        std::string body = text;
        mog_string_free(text);
        if (!ranged) body += "\n";
        return write_text(body.c_str(), json_path);
    }

    char* csv = nullptr;
    mog_status status = mog_disprove_csv(disprove_from, disprove_to, &csv);
    if (status != MOG_OK) return exit_code(status);
    std::fputs(csv, stdout);
    mog_string_free(csv);
    return 0;
}
