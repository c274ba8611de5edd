#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gpmyc/graph.hpp"

namespace gpmyc {

// Canonical labellings, relied on by golden tests:
//   path      0-1-...-(n-1)
//   cycle     path plus (n-1, 0)
//   star      centre 0, leaves 1..n-1
//   kminus    K_n without the edge (0, 1)
//   multipartite  parts sorted descending, consecutive index ranges

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int n);
Graph complete_minus_edge(int n);
Graph complete_multipartite(std::vector<int> parts);

/// The abundant d-regular graph of order 3d-1: an independent block
/// 0..d-1 joined completely to 2d..3d-2, a clique on d..2d-1, and the
/// matching i <-> d+i.
Graph abundant_regular(int d);

/// `pairs` disjoint edges (2i, 2i+1) joined completely to a clique on the
/// last min_degree-1 vertices. Independence number `pairs`, minimum degree
/// `min_degree`.
Graph join_alpha_k2(int pairs, int min_degree);

/// A clique on 0..n-2 with vertex n-1 hanging off vertex 0.
Graph clique_with_leaf(int n);

/// The PRNG used everywhere randomness appears. Fixed algorithm so seeds
/// reproduce across platforms.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Rejection sampling on raw 64-bit draws so
/// the stream does not depend on the standard library's distributions.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform labelled tree decoded from a random Prufer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// G(n, p) with p = numerator/denominator.
Graph random_graph(int n, int numerator, int denominator, Rng& rng);

/// Random connected graph of order n with edge density drawn per attempt;
/// complete graphs are rejected when `non_complete` is set.
Graph random_connected_graph(int n, Rng& rng, bool non_complete = true);

/// Caterpillar: a spine path with an NT vertex every `spine_gap` edges, NT
/// vertex i carrying leaves_per_nt[i] pendant leaves. Spine vertices come
/// first (0..(w-1)*gap), then leaves in NT order.
Graph spaced_tree(int nt_count, std::span<const int> leaves_per_nt, int spine_gap);

inline constexpr int kUndefinedSpacing = -1;

struct TreeStats {
  int leaf_count = 0;      // l
  int nt_count = 0;        // w: non-leaf vertices adjacent to a leaf
  int interior_count = 0;  // k = n - l - w
  int leaf_spacing = kUndefinedSpacing;  // D_T, undefined when w < 2
  VertexSet leaves;
  VertexSet nt_vertices;
};

/// Throws InvalidArgument unless g is a tree of order >= 2.
TreeStats tree_stats(const Graph& g);

}  // namespace gpmyc
