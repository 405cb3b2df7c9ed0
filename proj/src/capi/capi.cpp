#include "mostar/mostar.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/canonical.hpp"
#include "core/enumerate.hpp"
#include "core/error.hpp"
#include "core/families.hpp"
#include "core/graph.hpp"
#include "core/graph6.hpp"
#include "core/indices.hpp"
#include "core/verify.hpp"

using namespace mostar;

struct mog_graph {
    Graph graph;
};

namespace {

thread_local std::string g_last_error = "no error";

template <typename Fn>
mog_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return MOG_ERROR_PARSE;
    } catch (const DomainError& e) {
        g_last_error = e.what();
        return MOG_ERROR_DOMAIN;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return MOG_ERROR_NOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MOG_ERROR_INTERNAL;
    }
}

mog_status invalid(const char* message) {
    g_last_error = message;
    return MOG_ERROR_INVALID_ARGUMENT;
}

// strdup into malloc storage so callers pair every string with
// mog_string_free.
mog_status copy_out(const std::string& text, char** out) {
    char* copy = static_cast<char*>(std::malloc(text.size() + 1));
    if (!copy) {
        g_last_error = "out of memory";
        return MOG_ERROR_NOMEM;
    }
    std::memcpy(copy, text.c_str(), text.size() + 1);
    *out = copy;
    return MOG_OK;
}

mog_status wrap(Graph graph, mog_graph** out) {
    *out = new (std::nothrow) mog_graph{std::move(graph)};
    if (!*out) {
        g_last_error = "out of memory";
        return MOG_ERROR_NOMEM;
    }
    return MOG_OK;
}

mog_verify_options fill_defaults(const mog_verify_options* options) {
    mog_verify_options opts{0, 12345, 0, 0};
    if (options) opts = *options;
    if (opts.trials <= 0) opts.trials = 200;
    if (opts.budget <= 0) opts.budget = 9;
    return opts;
}

}  // namespace

extern "C" {

const char* mog_last_error(void) { return g_last_error.c_str(); }

void mog_graph_free(mog_graph* graph) { delete graph; }

void mog_string_free(char* text) { std::free(text); }

mog_status mog_graph_from_graph6(const char* line, mog_graph** out) {
    if (!line || !out) return invalid("line and out must be non-null");
    return guarded([&] { return wrap(graph6_decode(line), out); });
}

mog_status mog_graph_to_graph6(const mog_graph* graph, char** out) {
    if (!graph || !out) return invalid("graph and out must be non-null");
    return guarded([&] { return copy_out(graph6_encode(graph->graph), out); });
}

mog_status mog_canonical_graph6(const mog_graph* graph, char** out) {
    if (!graph || !out) return invalid("graph and out must be non-null");
    return guarded([&] { return copy_out(canonical_form(graph->graph).bytes, out); });
}

int mog_graph_order(const mog_graph* graph) { return graph ? graph->graph.order() : -1; }

int mog_graph_size(const mog_graph* graph) { return graph ? graph->graph.size() : -1; }

mog_status mog_mostar_index(const mog_graph* graph, long long* out) {
    if (!graph || !out) return invalid("graph and out must be non-null");
    return guarded([&] {
        *out = mostar::mostar(graph->graph);
        return MOG_OK;
    });
}

mog_status mog_edge_mostar_index(const mog_graph* graph, long long* out) {
    if (!graph || !out) return invalid("graph and out must be non-null");
    return guarded([&] {
        *out = edge_mostar(graph->graph);
        return MOG_OK;
    });
}

mog_status mog_edge_split_csv(const mog_graph* graph, char** out) {
    if (!graph || !out) return invalid("graph and out must be non-null");
    return guarded([&] { return copy_out(edge_split_csv(graph->graph), out); });
}

mog_status mog_make_family(const char* kind, int m, mog_graph** out) {
    if (!kind || !out) return invalid("kind and out must be non-null");
    return guarded([&]() -> mog_status {
        auto parsed = family_kind_from_name(kind);
        if (!parsed) return invalid("unknown family kind");
        switch (*parsed) {
            case FamilyKind::Path:
            case FamilyKind::Cycle:
            case FamilyKind::Star:
                return wrap(make_basic(*parsed, m), out);
            default:
                return wrap(make_b_family(*parsed, m), out);
        }
    });
}

mog_status mog_make_smr(int m, int r, mog_graph** out) {
    if (!out) return invalid("out must be non-null");
    return guarded([&] { return wrap(make_s_m_r(m, r), out); });
}

mog_status mog_make_theta(int l1, int l2, int l3, mog_graph** out) {
    if (!out) return invalid("out must be non-null");
    return guarded([&] { return wrap(make_theta(l1, l2, l3), out); });
}

mog_status mog_family_expected_edge_mostar(const char* kind, int m, long long* out) {
    if (!kind || !out) return invalid("kind and out must be non-null");
    return guarded([&]() -> mog_status {
        auto parsed = family_kind_from_name(kind);
        if (!parsed) return invalid("unknown family kind");
        *out = expected_value(*parsed, m);
        return MOG_OK;
    });
}

mog_status mog_enumerate(const char* kind, int size, int jobs, mog_line_sink sink, void* user) {
    if (!kind || !sink) return invalid("kind and sink must be non-null");
    return guarded([&]() -> mog_status {
        std::string name = kind;
        std::vector<Graph> population;
        if (name == "tree") {
            if (size < 0) throw DomainError("tree size must be non-negative");
            population = enumerate_trees(size + 1);
        } else if (name == "unicyclic") {
            population = enumerate_unicyclic(size, jobs);
        } else if (name == "bicyclic") {
            population = enumerate_bicyclic(size, jobs);
        } else {
            return invalid("kind must be tree, unicyclic, or bicyclic");
        }
        for (const Graph& g : population)
            if (sink(graph6_encode(g).c_str(), user) != 0) break;
        return MOG_OK;
    });
}

mog_status mog_verify_json(const char* what, int size, const mog_verify_options* options,
                           char** out) {
    if (!what || !out) return invalid("what and out must be non-null");
    return guarded([&]() -> mog_status {
        mog_verify_options opts = fill_defaults(options);
        std::string name = what;
        VerificationReport report;
        if (name == "bicyclic")
            report = verify_bicyclic_theorem(size, opts.jobs);
        else if (name == "unicyclic")
            report = verify_unicyclic_lemma(size, opts.jobs);
        else if (name == "cases")
            report = verify_case_bounds(size, opts.jobs);
        else if (name == "joins")
            report = verify_join_lemmas(opts.budget, opts.jobs);
        else if (name == "shifts")
            report = verify_shift_identities(opts.seed, opts.trials);
        else
            return invalid("what must be bicyclic, unicyclic, cases, joins, or shifts");
        return copy_out(report_json(report), out);
    });
}

mog_status mog_verify_range_csv(const char* what, int from, int to,
                                const mog_verify_options* options, char** out) {
    if (!what || !out) return invalid("what and out must be non-null");
    return guarded([&]() -> mog_status {
        mog_verify_options opts = fill_defaults(options);
        std::string name = what;
        if (name != "bicyclic" && name != "unicyclic" && name != "cases")
            return invalid("what must be bicyclic, unicyclic, or cases");
        if (to < from) throw DomainError("range is empty");
        std::string csv = report_csv_header() + "\n";
        for (int m = from; m <= to; ++m) {
            VerificationReport report;
            if (name == "bicyclic")
                report = verify_bicyclic_theorem(m, opts.jobs);
            else if (name == "unicyclic")
                report = verify_unicyclic_lemma(m, opts.jobs);
            else
                report = verify_case_bounds(m, opts.jobs);
            csv += report_csv_row(report) + "\n";
        }
        return copy_out(csv, out);
    });
}

mog_status mog_disprove_csv(int from, int to, char** out) {
    if (!out) return invalid("out must be non-null");
    return guarded([&] { return copy_out(disprove_conjecture_csv(from, to), out); });
}

}  // extern "C"
