#pragma once

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace snc {

// Hopcroft-Karp maximum matching on a bipartite graph with left vertices
// 0..n_left-1 and right vertices 0..n_right-1. After solve(), a Hall
// violator on the left side (if the matching does not saturate it) is
// available as the set of left vertices reachable from an unmatched left
// vertex by alternating paths; its right neighborhood is strictly smaller.
class BipartiteMatcher {
public:
    BipartiteMatcher(int n_left, int n_right)
        : nl_(n_left), nr_(n_right), adj_(n_left), match_l_(n_left, -1), match_r_(n_right, -1) {}

    void add_edge(int l, int r) {
        if (l < 0 || l >= nl_ || r < 0 || r >= nr_)
            throw std::out_of_range("BipartiteMatcher: endpoint out of range");
        adj_[l].push_back(r);
    }

    int solve() {
        int matched = 0;
        while (bfs()) {
            for (int l = 0; l < nl_; ++l)
                if (match_l_[l] < 0 && dfs(l)) ++matched;
        }
        return matched;
    }

    const std::vector<int>& left_match() const { return match_l_; }

    // Left vertices reachable by alternating paths from an unmatched left
    // vertex. Empty iff the matching saturates the left side.
    std::vector<int> deficiency_witness() const {
        std::vector<char> vis_l(nl_, 0), vis_r(nr_, 0);
        std::queue<int> q;
        for (int l = 0; l < nl_; ++l)
            if (match_l_[l] < 0) {
                vis_l[l] = 1;
                q.push(l);
            }
        if (q.empty()) return {};
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : adj_[l]) {
                if (vis_r[r]) continue;
                vis_r[r] = 1;
                int l2 = match_r_[r];
                if (l2 >= 0 && !vis_l[l2]) {
                    vis_l[l2] = 1;
                    q.push(l2);
                }
            }
        }
        std::vector<int> out;
        for (int l = 0; l < nl_; ++l)
            if (vis_l[l]) out.push_back(l);
        return out;
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs() {
        std::queue<int> q;
        dist_.assign(nl_, kInf);
        int reachable_free = kInf;
        for (int l = 0; l < nl_; ++l)
            if (match_l_[l] < 0) {
                dist_[l] = 0;
                q.push(l);
            }
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            if (dist_[l] >= reachable_free) continue;
            for (int r : adj_[l]) {
                int l2 = match_r_[r];
                if (l2 < 0)
                    reachable_free = dist_[l] + 1;
                else if (dist_[l2] == kInf) {
                    dist_[l2] = dist_[l] + 1;
                    q.push(l2);
                }
            }
        }
        return reachable_free != kInf;
    }

    bool dfs(int l) {
        for (int r : adj_[l]) {
            int l2 = match_r_[r];
            if (l2 < 0 || (dist_[l2] == dist_[l] + 1 && dfs(l2))) {
                match_l_[l] = r;
                match_r_[r] = l;
                return true;
            }
        }
        dist_[l] = kInf;
        return false;
    }

    int nl_, nr_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_l_, match_r_, dist_;
};

}  // namespace snc
