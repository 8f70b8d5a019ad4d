#pragma once

#include <string>
#include <vector>

#include "bti/orbifold.hpp"  // Validation

namespace bti {

// Integer-weighted rooted tree. Vertex 0 is the root; ids are indices
// into `verts`. Values are immutable in practice: operations return new
// trees.
struct BubbleTree {
    struct Vertex {
        long weight = 0;
        std::vector<int> children;
    };
    std::vector<Vertex> verts;

    static BubbleTree single(long weight);

    long total_weight(int v = 0) const;
    int parent_of(int v) const;  // -1 for root
    size_t edge_count() const { return verts.size() - 1; }
};

// Both bullet conditions of the definition: every non-root vertex has
// nonzero weight, or at least two children whose subtrees all have
// positive total weight.
Validation validate(const BubbleTree& t);

// Canonical text encoding: "w" for a leaf, "w(c1,c2,...)" otherwise,
// child encodings sorted lexicographically. Equal encodings <=>
// isomorphic weighted rooted trees.
std::string canonical(const BubbleTree& t);
BubbleTree parse_tree(const std::string& encoding);

struct EnumerationConfig {
    long max_total_weight = 6;
};

// All isomorphism classes of bubble trees with total weight k, as
// canonical forms, sorted.
std::vector<std::string> enumerate_trees(long k, const EnumerationConfig& cfg = {});

// Subtrees admissible below a non-root position (root satisfies the
// non-root weight/children rule), by total weight. Shared with the
// orbifold tree enumeration.
const std::vector<BubbleTree>& enumerate_subtrees(long total);

// Contraction at (parent, child): child removed, weight added to
// parent, grandchildren re-parented.
BubbleTree contract(const BubbleTree& t, int parent, int child);

// t1 <= t2 in the contraction partial order: t2 reachable from t1 by
// contracting some (possibly empty) edge set.
bool leq(const BubbleTree& t1, const BubbleTree& t2);

std::vector<int> ghost_vertices(const BubbleTree& t);

// |S_{m_v}|: product of factorials of multiplicities of isomorphism
// classes among v's child subtrees.
unsigned long symmetry_order(const BubbleTree& t, int v);

}  // namespace bti
