#pragma once

#include <array>
#include <vector>

#include "core/graph.hpp"

namespace mostar {

// Pruning pendants off a bicyclic graph leaves either two edge-disjoint
// cycles (joined at one vertex or by a path) or a theta core.
enum class BicyclicKind { G1, G2 };

struct BicyclicClass {
    BicyclicKind kind;
    std::array<int, 2> cycles{};  // G1: cycle lengths, ascending
    std::array<int, 3> brace{};   // G2: path lengths, ascending
};

// All enumerators emit one canonical representative per isomorphism class,
// sorted by canonical form, so two runs produce identical streams for any
// job count.

// Trees on n vertices, grown by leaf augmentation with canonical dedup.
std::vector<Graph> enumerate_trees(int n);

// Connected graphs with m vertices and m edges: every tree on m vertices
// plus one non-edge, deduplicated.
std::vector<Graph> enumerate_unicyclic(int m, int jobs = 1);

// Connected graphs with m-1 vertices and m edges: every tree on m-1
// vertices plus two distinct non-edges, deduplicated. Complete because any
// spanning tree of such a graph omits exactly two edges.
std::vector<Graph> enumerate_bicyclic(int m, int jobs = 1);

// Every connected isomorphism class with n vertices and m edges, by walking
// all 2^C(n,2) labeled graphs. Test oracle; refuses n > 7.
std::vector<Graph> brute_force_oracle(int n, int m);

BicyclicClass classify_bicyclic(const Graph& g);

}  // namespace mostar
