#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace mostar {

enum class FamilyKind { Path, Cycle, Star, B, B1, B2, B3, B4, B5, B6 };

// "P", "C", "S", "B", "B1" .. "B6".
std::optional<FamilyKind> family_kind_from_name(std::string_view name);
std::string family_kind_name(FamilyKind kind);

// Smallest size each constructor accepts (vertices for Path/Cycle/Star,
// edges for the B families, where the minimum is the bare core).
int family_min_size(FamilyKind kind);

// First size at which the closed form in expected_value is asserted to hold.
// Differs from family_min_size only for B4, whose bare core coincides with B3.
int family_form_min_size(FamilyKind kind);

// Path/Cycle/Star on n vertices: path 0-1-..-(n-1), cycle adds the closing
// edge, star has center 0.
Graph make_basic(FamilyKind kind, int n);

// Two degree-3 hubs 0 and 1 joined by three internally disjoint paths of
// lengths l1 <= l2 <= l3; interior vertices are labeled 2, 3, ... along the
// first path, then the second, then the third. l1 = l2 = 1 would need a
// parallel edge and is rejected.
Graph make_theta(int l1, int l2, int l3);

// Cycle 0..r-1 with m-r pendent edges at vertex 0, total size m.
Graph make_s_m_r(int m, int r);

// Bicyclic families, all with pendants at the lowest-labeled vertex of the
// designated orbit:
//   B  two 4-cycles sharing vertex 0, pendants at 0        (m >= 8)
//   B1 a 3-cycle and a 4-cycle sharing vertex 0, pendants at 0  (m >= 7)
//   B2 two 3-cycles sharing vertex 0, pendants at 0        (m >= 6)
//   B3 theta(1,2,2), pendants at hub 0                     (m >= 5)
//   B4 theta(1,2,2), pendants at path vertex 2             (m >= 5)
//   B5 theta(2,2,2), pendants at path vertex 2             (m >= 6)
//   B6 theta(1,2,3), pendants at hub 0                     (m >= 6)
Graph make_b_family(FamilyKind kind, int m);

// Closed-form edge Mostar value for the B families. This is the expectation
// table the verification suite audits; verify_case_bounds reports where
// direct computation disagrees.
long long expected_value(FamilyKind kind, int m);

}  // namespace mostar
