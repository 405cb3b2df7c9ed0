#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace mostar {

// A theta core with pendants. Role vertices: v1 = 0 and v2 = 1 are the hubs;
// interior path vertices follow make_theta's labeling, so
//   (1,2,2): v3 = 2, v4 = 3 sit on the two length-2 paths;
//   (2,2,2): v3 = 2, v4 = 3, v5 = 4;
//   (1,2,3): v3 = 2 on the length-2 path, v4 = 3 beside v1, v5 = 4 beside v2.
// counts[i] pendants hang off role vertex v(i+1); roles past the core size
// must stay zero.
struct PendantProfile {
    std::array<int, 3> brace;
    std::array<int, 5> counts;
};

// Number of role vertices for a brace: 4 for (1,2,2), otherwise 5.
int brace_role_count(const std::array<int, 3>& brace);

Graph profile_graph(const PendantProfile& profile);

// Re-anchors k pendant edges from `from` to `to`, labels unchanged.
Graph shift_pendants(const Graph& g, int from, int to, int k);

// One rebalancing step of the extremal argument, identified by brace and
// label. Each step moves every pendant off one or two role vertices:
//   (1,2,2): "v2->v1", "v4->v3", "v1->v3"
//   (2,2,2): "v2->v1", "v5->v3", "v1->v3"
//   (1,2,3): "v2->v1,v5->v4", "v4->v1", "v3->v1"
struct ShiftMove {
    std::array<int, 3> brace;
    std::string label;
};

// All nine moves, in the order above.
const std::vector<ShiftMove>& shift_moves();

// The move applied to the profile (counts rebalanced, same brace).
PendantProfile apply_move(const PendantProfile& profile, std::string_view label);

// Exact change in the edge Mostar index promised for the move, valid only
// under the move's hypotheses on the counts; violations raise DomainError.
long long predicted_delta(const std::array<int, 3>& brace, std::string_view label,
                          const PendantProfile& profile);

}  // namespace mostar
