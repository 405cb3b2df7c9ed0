#pragma once

#include <compare>
#include <string>

#include "core/graph.hpp"

namespace mostar {

// Total-order key: equal for two graphs iff they are isomorphic.
struct CanonicalForm {
    std::string bytes;  // graph6 of the canonical representative

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Canonically relabeled copy of g: the representative whose row-major
// upper-triangle bit string is minimal over the orderings explored by
// equitable refinement with backtracking. Isomorphic inputs map to the
// identical graph.
Graph canonical_graph(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

}  // namespace mostar
