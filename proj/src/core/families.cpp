#include "core/families.hpp"

namespace mostar {

namespace {

Graph add_pendants(const Graph& g, int anchor, int k) {
    if (k < 0) throw DomainError("pendant count must be non-negative");
    std::vector<Edge> edges = g.edges();
    for (int i = 0; i < k; ++i) edges.push_back({anchor, g.order() + i});
    return Graph(g.order() + k, std::move(edges));
}

Graph two_cycles_at_zero(int r1, int r2, int pendants) {
    std::vector<Edge> edges;
    for (int i = 0; i < r1; ++i) edges.push_back({i, (i + 1) % r1});
    // Second cycle reuses vertex 0 and takes labels r1 .. r1+r2-2.
    int base = r1 - 1;
    edges.push_back({0, base + 1});
    for (int i = 1; i < r2 - 1; ++i) edges.push_back({base + i, base + i + 1});
    edges.push_back({0, base + r2 - 1});
    return add_pendants(Graph(r1 + r2 - 1, std::move(edges)), 0, pendants);
}

}  // namespace

std::optional<FamilyKind> family_kind_from_name(std::string_view name) {
    if (name == "P") return FamilyKind::Path;
    if (name == "C") return FamilyKind::Cycle;
    if (name == "S") return FamilyKind::Star;
    if (name == "B") return FamilyKind::B;
    if (name == "B1") return FamilyKind::B1;
    if (name == "B2") return FamilyKind::B2;
    if (name == "B3") return FamilyKind::B3;
    if (name == "B4") return FamilyKind::B4;
    if (name == "B5") return FamilyKind::B5;
    if (name == "B6") return FamilyKind::B6;
    return std::nullopt;
}

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Path: return "P";
        case FamilyKind::Cycle: return "C";
        case FamilyKind::Star: return "S";
        case FamilyKind::B: return "B";
        case FamilyKind::B1: return "B1";
        case FamilyKind::B2: return "B2";
        case FamilyKind::B3: return "B3";
        case FamilyKind::B4: return "B4";
        case FamilyKind::B5: return "B5";
        case FamilyKind::B6: return "B6";
    }
    throw DomainError("unknown family kind");
}

int family_min_size(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Path: return 1;
        case FamilyKind::Cycle: return 3;
        case FamilyKind::Star: return 1;
        case FamilyKind::B: return 8;
        case FamilyKind::B1: return 7;
        case FamilyKind::B2: return 6;
        case FamilyKind::B3: return 5;
        case FamilyKind::B4: return 5;
        case FamilyKind::B5: return 6;
        case FamilyKind::B6: return 6;
    }
    throw DomainError("unknown family kind");
}

int family_form_min_size(FamilyKind kind) {
    return kind == FamilyKind::B4 ? 6 : family_min_size(kind);
}

Graph make_basic(FamilyKind kind, int n) {
    if (n < family_min_size(kind)) throw DomainError(family_kind_name(kind) + " needs n >= " +
                                                     std::to_string(family_min_size(kind)));
    std::vector<Edge> edges;
    switch (kind) {
        case FamilyKind::Path:
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            break;
        case FamilyKind::Cycle:
            for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
            break;
        case FamilyKind::Star:
            for (int i = 1; i < n; ++i) edges.push_back({0, i});
            break;
        default:
            throw DomainError("make_basic handles P, C, S only");
    }
    return Graph(n, std::move(edges));
}

Graph make_theta(int l1, int l2, int l3) {
    if (l1 < 1 || l1 > l2 || l2 > l3) throw DomainError("theta needs 1 <= l1 <= l2 <= l3");
    if (l2 < 2) throw DomainError("theta(1,1,k) would need a parallel edge");
    std::vector<Edge> edges;
    int next = 2;
    for (int len : {l1, l2, l3}) {
        int prev = 0;
        for (int i = 1; i < len; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, 1});
    }
    return Graph(next, std::move(edges));
}

Graph make_s_m_r(int m, int r) {
    if (r < 3) throw DomainError("S(m,r) needs r >= 3");
    if (m < r) throw DomainError("S(m,r) needs m >= r");
    return add_pendants(make_basic(FamilyKind::Cycle, r), 0, m - r);
}

Graph make_b_family(FamilyKind kind, int m) {
    int min = family_min_size(kind);
    int pendants = m - min;
    if (pendants < 0)
        throw DomainError(family_kind_name(kind) + " needs m >= " + std::to_string(min));
    switch (kind) {
        case FamilyKind::B: return two_cycles_at_zero(4, 4, pendants);
        case FamilyKind::B1: return two_cycles_at_zero(3, 4, pendants);
        case FamilyKind::B2: return two_cycles_at_zero(3, 3, pendants);
        case FamilyKind::B3: return add_pendants(make_theta(1, 2, 2), 0, pendants);
        case FamilyKind::B4: return add_pendants(make_theta(1, 2, 2), 2, pendants);
        case FamilyKind::B5: return add_pendants(make_theta(2, 2, 2), 2, pendants);
        case FamilyKind::B6: return add_pendants(make_theta(1, 2, 3), 0, pendants);
        default: throw DomainError("make_b_family handles B and B1..B6 only");
    }
}

long long expected_value(FamilyKind kind, int m) {
    if (m < family_min_size(kind))
        throw DomainError(family_kind_name(kind) + " needs m >= " +
                          std::to_string(family_min_size(kind)));
    long long mm = static_cast<long long>(m) * m;
    switch (kind) {
        case FamilyKind::B: return mm - m - 24;
        case FamilyKind::B1: return mm - 2 * m - 15;
        case FamilyKind::B2: return mm - 3 * m - 6;
        case FamilyKind::B3: return mm - 3 * m - 6;
        case FamilyKind::B4: return mm - 2 * m - 15;
        case FamilyKind::B5: return mm - m - 28;
        case FamilyKind::B6: return mm - 2 * m - 16;
        default: throw DomainError("no closed form for " + family_kind_name(kind));
    }
}

}  // namespace mostar
