#include "core/transforms.hpp"

#include <algorithm>

#include "core/families.hpp"

namespace mostar {

namespace {

using Counts = std::array<int, 5>;

struct MoveDef {
    std::array<int, 3> brace;
    const char* label;
    long long (*delta)(const Counts&);
    bool (*hypothesis)(const Counts&);
    const char* needs;
};

// Hypotheses are the exact sign-resolution domains of each rebalancing step;
// outside them the closed-form delta is simply false (e.g. (1,2,2) with
// counts 5,5,4,0 shifts by 16, not 2*a2 = 10).
const MoveDef kMoves[] = {
    {{1, 2, 2},
     "v2->v1",
     [](const Counts& a) { return 2LL * a[1]; },
     [](const Counts& a) { return a[0] >= a[1] && a[3] <= a[2] && a[2] <= a[3] + 1; },
     "a1 >= a2 and a4 <= a3 <= a4+1"},
    {{1, 2, 2},
     "v4->v3",
     [](const Counts& a) { return 8LL * a[3]; },
     [](const Counts& a) { return a[1] == 0 && a[2] >= a[0] + a[3] + 1; },
     "a2 = 0 and a3 >= a1+a4+1"},
    {{1, 2, 2},
     "v1->v3",
     [](const Counts& a) { return 3LL * a[0]; },
     [](const Counts& a) { return a[1] == 0 && a[3] == 0 && a[2] >= a[0] + 1; },
     "a2 = a4 = 0 and a3 >= a1+1"},
    {{2, 2, 2},
     "v2->v1",
     [](const Counts& a) { return 12LL * a[1]; },
     [](const Counts& a) {
         return a[2] >= a[3] && a[3] >= a[4] && a[0] + a[4] >= a[1] + a[2] + a[3] + 1;
     },
     "a3 >= a4 >= a5 and a1+a5 >= a2+a3+a4+1"},
    {{2, 2, 2},
     "v5->v3",
     [](const Counts& a) { return 8LL * a[4]; },
     [](const Counts& a) { return a[1] == 0 && a[3] >= a[4] && a[2] >= a[0] + a[3] + a[4] + 1; },
     "a2 = 0, a4 >= a5 and a3 >= a1+a4+a5+1"},
    {{2, 2, 2},
     "v1->v3",
     [](const Counts& a) { return 6LL * a[0]; },
     [](const Counts& a) { return a[1] == 0 && a[3] == 0 && a[4] == 0 && a[2] >= a[0] + 1; },
     "a2 = a4 = a5 = 0 and a3 >= a1+1"},
    {{1, 2, 3},
     "v2->v1,v5->v4",
     [](const Counts& a) { return 4LL * (a[1] + a[4]); },
     [](const Counts& a) { return a[2] <= 2 && a[0] + a[3] >= a[1] + a[4]; },
     "a3 <= 2 and a1+a4 >= a2+a5"},
    {{1, 2, 3},
     "v4->v1",
     [](const Counts& a) { return 4LL * a[3] + a[0] - a[2]; },
     [](const Counts& a) {
         return a[1] == 0 && a[4] == 0 && a[0] == a[2] && a[3] <= a[0] + a[2] + 2;
     },
     "a2 = a5 = 0, a1 = a3 and a4 <= a1+a3+2"},
    {{1, 2, 3},
     "v3->v1",
     [](const Counts& a) { return 5LL * a[2]; },
     [](const Counts& a) { return a[1] == 0 && a[3] == 0 && a[4] == 0 && a[2] <= 2; },
     "a2 = a4 = a5 = 0 and a3 <= 2"},
};

std::string brace_name(const std::array<int, 3>& brace) {
    return "(" + std::to_string(brace[0]) + "," + std::to_string(brace[1]) + "," +
           std::to_string(brace[2]) + ")";
}

void validate_profile(const PendantProfile& p) {
    int roles = brace_role_count(p.brace);
    for (int i = 0; i < 5; ++i) {
        if (p.counts[i] < 0) throw DomainError("pendant counts must be non-negative");
        if (i >= roles && p.counts[i] != 0)
            throw DomainError("brace " + brace_name(p.brace) + " has only " +
                              std::to_string(roles) + " role vertices");
    }
}

const MoveDef& find_move(const std::array<int, 3>& brace, std::string_view label) {
    for (const MoveDef& def : kMoves)
        if (def.brace == brace && label == def.label) return def;
    throw DomainError("no move '" + std::string(label) + "' on brace " + brace_name(brace));
}

// "vX->vY" with single-digit roles; compound labels are comma-separated.
std::vector<std::pair<int, int>> parse_hops(std::string_view label) {
    std::vector<std::pair<int, int>> hops;
    size_t pos = 0;
    while (pos < label.size()) {
        size_t end = label.find(',', pos);
        if (end == std::string_view::npos) end = label.size();
        std::string_view hop = label.substr(pos, end - pos);
        if (hop.size() != 6 || hop[0] != 'v' || hop.substr(2, 3) != "->v" ||
            hop[1] < '1' || hop[1] > '5' || hop[5] < '1' || hop[5] > '5')
            throw DomainError("malformed move label '" + std::string(label) + "'");
        hops.emplace_back(hop[1] - '1', hop[5] - '1');
        pos = end + 1;
    }
    if (hops.empty()) throw DomainError("empty move label");
    return hops;
}

}  // namespace

int brace_role_count(const std::array<int, 3>& brace) {
    if (brace == std::array<int, 3>{1, 2, 2}) return 4;
    if (brace == std::array<int, 3>{2, 2, 2} || brace == std::array<int, 3>{1, 2, 3}) return 5;
    throw DomainError("unsupported brace " + brace_name(brace));
}

Graph profile_graph(const PendantProfile& profile) {
    validate_profile(profile);
    Graph g = make_theta(profile.brace[0], profile.brace[1], profile.brace[2]);
    int roles = brace_role_count(profile.brace);
    std::vector<Edge> edges = g.edges();
    int next = g.order();
    for (int role = 0; role < roles; ++role)
        for (int i = 0; i < profile.counts[role]; ++i) edges.push_back({role, next++});
    return Graph(next, std::move(edges));
}

Graph shift_pendants(const Graph& g, int from, int to, int k) {
    if (k < 0) throw DomainError("shift count must be non-negative");
    if (from == to) throw DomainError("shift endpoints must differ");
    if (to < 0 || to >= g.order()) throw DomainError("shift target out of range");
    std::vector<int> pendants;
    for (int w : g.neighbors(from))
        if (g.degree(w) == 1 && w != to) pendants.push_back(w);
    if (static_cast<int>(pendants.size()) < k)
        throw DomainError("vertex " + std::to_string(from) + " has only " +
                          std::to_string(pendants.size()) + " movable pendants");
    pendants.resize(k);
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        int other = e.u == from ? e.v : e.v == from ? e.u : -1;
        if (other != -1 && std::binary_search(pendants.begin(), pendants.end(), other))
            edges.push_back({to, other});
        else
            edges.push_back(e);
    }
    return Graph(g.order(), std::move(edges));
}

const std::vector<ShiftMove>& shift_moves() {
    static const std::vector<ShiftMove> moves = [] {
        std::vector<ShiftMove> out;
        for (const MoveDef& def : kMoves) out.push_back({def.brace, def.label});
        return out;
    }();
    return moves;
}

PendantProfile apply_move(const PendantProfile& profile, std::string_view label) {
    validate_profile(profile);
    PendantProfile out = profile;
    for (auto [from, to] : parse_hops(label)) {
        if (from >= brace_role_count(profile.brace))
            throw DomainError("move '" + std::string(label) + "' does not fit brace " +
                              brace_name(profile.brace));
        out.counts[to] += out.counts[from];
        out.counts[from] = 0;
    }
    return out;
}

long long predicted_delta(const std::array<int, 3>& brace, std::string_view label,
                          const PendantProfile& profile) {
    if (profile.brace != brace) throw DomainError("profile brace does not match move brace");
    validate_profile(profile);
    const MoveDef& def = find_move(brace, label);
    if (!def.hypothesis(profile.counts))
        throw DomainError("move '" + std::string(label) + "' on brace " + brace_name(brace) +
                          " needs " + def.needs);
    return def.delta(profile.counts);
}

}  // namespace mostar
