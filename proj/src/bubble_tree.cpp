#include "bti/bubble_tree.hpp"

#include "bti/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace bti {

BubbleTree BubbleTree::single(long weight) {
    BubbleTree t;
    t.verts.push_back({weight, {}});
    return t;
}

long BubbleTree::total_weight(int v) const {
    long sum = verts[v].weight;
    for (int c : verts[v].children) sum += total_weight(c);
    return sum;
}

int BubbleTree::parent_of(int v) const {
    for (size_t i = 0; i < verts.size(); ++i)
        for (int c : verts[i].children)
            if (c == v) return static_cast<int>(i);
    return -1;
}

Validation validate(const BubbleTree& t) {
    Validation v;
    if (t.verts.empty()) {
        v.ok = false;
        v.reasons.push_back("empty tree");
        return v;
    }
    for (size_t i = 0; i < t.verts.size(); ++i) {
        if (t.verts[i].weight < 0) {
            v.ok = false;
            v.reasons.push_back("vertex " + std::to_string(i) + " has negative weight");
        }
        if (i == 0) continue;
        const auto& vert = t.verts[i];
        if (vert.weight != 0) continue;
        if (vert.children.size() < 2) {
            v.ok = false;
            v.reasons.push_back("ghost vertex " + std::to_string(i) +
                                " has fewer than 2 children");
            continue;
        }
        for (int c : vert.children)
            if (t.total_weight(c) <= 0) {
                v.ok = false;
                v.reasons.push_back("ghost vertex " + std::to_string(i) +
                                    " has a zero-total-weight child subtree");
            }
    }
    return v;
}

namespace {

std::string canon_rec(const BubbleTree& t, int v) {
    std::vector<std::string> kids;
    kids.reserve(t.verts[v].children.size());
    for (int c : t.verts[v].children) kids.push_back(canon_rec(t, c));
    std::sort(kids.begin(), kids.end());
    std::string s = std::to_string(t.verts[v].weight);
    if (!kids.empty()) {
        s += '(';
        for (size_t i = 0; i < kids.size(); ++i) {
            if (i) s += ',';
            s += kids[i];
        }
        s += ')';
    }
    return s;
}

// Append `sub` as a child subtree of `root_id` in `t`.
void attach(BubbleTree& t, int root_id, const BubbleTree& sub) {
    int offset = static_cast<int>(t.verts.size());
    for (const auto& v : sub.verts) {
        BubbleTree::Vertex nv;
        nv.weight = v.weight;
        for (int c : v.children) nv.children.push_back(c + offset);
        t.verts.push_back(std::move(nv));
    }
    t.verts[root_id].children.push_back(offset);
}

int parse_rec(const std::string& s, size_t& pos, BubbleTree& t) {
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw validation_error("tree encoding: expected weight at " +
                                             std::to_string(start));
    long w = std::stol(s.substr(start, pos - start));
    int id = static_cast<int>(t.verts.size());
    t.verts.push_back({w, {}});
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        while (true) {
            int child = parse_rec(s, pos, t);
            t.verts[id].children.push_back(child);
            if (pos >= s.size()) throw validation_error("tree encoding: unterminated '('");
            if (s[pos] == ',') {
                ++pos;
                continue;
            }
            if (s[pos] == ')') {
                ++pos;
                break;
            }
            throw validation_error("tree encoding: unexpected '" + std::string(1, s[pos]) +
                                   "'");
        }
    }
    return id;
}

// Multisets of subtrees from `pool` with total weight `target`, chosen
// with non-decreasing pool index to avoid duplicates.
void multisets(const std::vector<const BubbleTree*>& pool, const std::vector<long>& weights,
               size_t from, long target, std::vector<const BubbleTree*>& cur,
               const std::function<void(const std::vector<const BubbleTree*>&)>& emit) {
    if (target == 0) {
        emit(cur);
        return;
    }
    for (size_t i = from; i < pool.size(); ++i) {
        if (weights[i] > target) continue;
        cur.push_back(pool[i]);
        multisets(pool, weights, i, target - weights[i], cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::string canonical(const BubbleTree& t) { return canon_rec(t, 0); }

BubbleTree parse_tree(const std::string& encoding) {
    BubbleTree t;
    size_t pos = 0;
    parse_rec(encoding, pos, t);
    if (pos != encoding.size())
        throw validation_error("tree encoding: trailing characters");
    return t;
}

const std::vector<BubbleTree>& enumerate_subtrees(long total) {
    static std::map<long, std::vector<BubbleTree>> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(total);
    if (it != cache.end()) return it->second;

    std::vector<BubbleTree> out;
    // candidate child subtrees have total weight 1..total-1
    std::vector<const BubbleTree*> pool;
    std::vector<long> pool_w;
    for (long w = 1; w < total; ++w)
        for (const auto& s : enumerate_subtrees(w)) {
            pool.push_back(&s);
            pool_w.push_back(w);
        }
    for (long w = total; w >= 0; --w) {
        std::vector<const BubbleTree*> cur;
        multisets(pool, pool_w, 0, total - w, cur,
                  [&](const std::vector<const BubbleTree*>& kids) {
                      if (w == 0 && kids.size() < 2) return;  // ghost rule
                      BubbleTree t = BubbleTree::single(w);
                      for (const auto* k : kids) attach(t, 0, *k);
                      out.push_back(std::move(t));
                  });
    }
    return cache.emplace(total, std::move(out)).first->second;
}

std::vector<std::string> enumerate_trees(long k, const EnumerationConfig& cfg) {
    if (k < 1) throw validation_error("enumerate: k must be >= 1");
    if (k > cfg.max_total_weight)
        throw resource_limit("enumerate: k exceeds configured cap " +
                             std::to_string(cfg.max_total_weight));
    std::set<std::string> forms;
    std::vector<const BubbleTree*> pool;
    std::vector<long> pool_w;
    for (long w = 1; w <= k; ++w)
        for (const auto& s : enumerate_subtrees(w)) {
            pool.push_back(&s);
            pool_w.push_back(w);
        }
    for (long w = k; w >= 0; --w) {
        std::vector<const BubbleTree*> cur;
        multisets(pool, pool_w, 0, k - w, cur,
                  [&](const std::vector<const BubbleTree*>& kids) {
                      BubbleTree t = BubbleTree::single(w);  // root: no ghost rule
                      for (const auto* kid : kids) attach(t, 0, *kid);
                      forms.insert(canonical(t));
                  });
    }
    return {forms.begin(), forms.end()};
}

BubbleTree contract(const BubbleTree& t, int parent, int child) {
    if (parent < 0 || child <= 0 || static_cast<size_t>(parent) >= t.verts.size() ||
        static_cast<size_t>(child) >= t.verts.size())
        throw validation_error("contract: vertex id out of range");
    const auto& pc = t.verts[parent].children;
    if (std::find(pc.begin(), pc.end(), child) == pc.end())
        throw validation_error("contract: no such edge");

    BubbleTree r;
    std::vector<int> remap(t.verts.size(), -1);
    int next = 0;
    for (size_t i = 0; i < t.verts.size(); ++i)
        if (static_cast<int>(i) != child) remap[i] = next++;
    r.verts.resize(t.verts.size() - 1);
    for (size_t i = 0; i < t.verts.size(); ++i) {
        if (static_cast<int>(i) == child) continue;
        auto& nv = r.verts[remap[i]];
        nv.weight = t.verts[i].weight;
        for (int c : t.verts[i].children) {
            if (c == child) continue;
            nv.children.push_back(remap[c]);
        }
    }
    auto& np = r.verts[remap[parent]];
    np.weight += t.verts[child].weight;
    for (int c : t.verts[child].children) np.children.push_back(remap[c]);
    return r;
}

bool leq(const BubbleTree& t1, const BubbleTree& t2) {
    if (t1.total_weight() != t2.total_weight()) return false;
    std::string target = canonical(t2);
    std::set<std::string> seen;
    std::vector<BubbleTree> frontier{t1};
    seen.insert(canonical(t1));
    if (seen.count(target)) return true;
    while (!frontier.empty()) {
        BubbleTree cur = std::move(frontier.back());
        frontier.pop_back();
        for (size_t p = 0; p < cur.verts.size(); ++p)
            for (int c : cur.verts[p].children) {
                BubbleTree next = contract(cur, static_cast<int>(p), c);
                std::string enc = canonical(next);
                if (enc == target) return true;
                if (seen.insert(enc).second) frontier.push_back(std::move(next));
            }
    }
    return false;
}

std::vector<int> ghost_vertices(const BubbleTree& t) {
    std::vector<int> out;
    for (size_t i = 1; i < t.verts.size(); ++i)
        if (t.verts[i].weight == 0) out.push_back(static_cast<int>(i));
    return out;
}

unsigned long symmetry_order(const BubbleTree& t, int v) {
    if (v < 0 || static_cast<size_t>(v) >= t.verts.size())
        throw validation_error("symmetry_order: vertex id out of range");
    std::map<std::string, unsigned long> counts;
    for (int c : t.verts[v].children) ++counts[canon_rec(t, c)];
    unsigned long order = 1;
    for (const auto& [_, n] : counts)
        for (unsigned long i = 2; i <= n; ++i) order *= i;
    return order;
}

}  // namespace bti
