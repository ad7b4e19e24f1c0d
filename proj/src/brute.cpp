// Branch-and-prune enumeration of weighted perfect matchings.

#include "tilecount/engines.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tilecount {

namespace {

// One connected component compacted into index-based arrays.  Removal and
// restoration are O(deg) and strictly LIFO, so the alive set seen while
// restoring a vertex equals the one seen while removing it.
class BruteState {
public:
    BruteState(const MatchGraph& g, const std::vector<int>& ids) {
        n_ = static_cast<int>(ids.size());
        std::map<int, int> index;
        for (int i = 0; i < n_; ++i) index[ids[i]] = i;
        adj_.resize(n_);
        alive_.assign(n_, 1);
        deg_.assign(n_, 0);
        for (int i = 0; i < n_; ++i) {
            for (int nb : g.neighbors(ids[i])) {
                int j = index.at(nb);
                if (j < i) continue;
                int e = static_cast<int>(weights_.size());
                const Rat& w = g.weight(ids[i], nb);
                weights_.push_back(w);
                unit_.push_back(w == 1 ? 1 : 0);
                adj_[i].push_back({j, e});
                adj_[j].push_back({i, e});
            }
        }
        for (int i = 0; i < n_; ++i) deg_[i] = static_cast<int>(adj_[i].size());
    }

    Rat count() { return enumerate(); }

private:
    void remove(int v) {
        alive_[v] = 0;
        for (auto [u, e] : adj_[v]) {
            if (alive_[u]) --deg_[u];
        }
        trail_.push_back(v);
    }

    void restore_to(std::size_t mark) {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            alive_[v] = 1;
            for (auto [u, e] : adj_[v]) {
                if (alive_[u]) ++deg_[u];
            }
        }
    }

    Rat enumerate() {
        std::size_t mark = trail_.size();
        Rat acc = 1;
        // Match pendant vertices along their only edge; a stranded vertex
        // kills the branch.
        for (;;) {
            int pendant = -1;
            for (int v = 0; v < n_; ++v) {
                if (!alive_[v]) continue;
                if (deg_[v] == 0) {
                    restore_to(mark);
                    return 0;
                }
                if (deg_[v] == 1) {
                    pendant = v;
                    break;
                }
            }
            if (pendant < 0) break;
            for (auto [u, e] : adj_[pendant]) {
                if (!alive_[u]) continue;
                if (!unit_[e]) acc *= weights_[e];
                remove(pendant);
                remove(u);
                break;
            }
        }

        int branch = -1;
        for (int v = 0; v < n_; ++v) {
            if (alive_[v] && (branch < 0 || deg_[v] < deg_[branch])) branch = v;
        }
        if (branch < 0) {
            restore_to(mark);
            return acc;
        }

        std::vector<std::pair<int, int>> options;
        for (auto [u, e] : adj_[branch]) {
            if (alive_[u]) options.push_back({u, e});
        }
        Rat sum = 0;
        remove(branch);
        for (auto [u, e] : options) {
            remove(u);
            Rat sub = enumerate();
            if (!sub.is_zero()) sum += unit_[e] ? sub : Rat(weights_[e] * sub);
            restore_to(trail_.size() - 1);
        }
        restore_to(mark);
        if (sum.is_zero()) return 0;
        return acc * sum;
    }

    int n_ = 0;
    std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbor, edge id)
    std::vector<Rat> weights_;
    std::vector<char> unit_;
    std::vector<char> alive_;
    std::vector<int> deg_;
    std::vector<int> trail_;
};

}  // namespace

Rat count_brute(const MatchGraph& g, std::size_t guard) {
    if (g.vertex_count() > guard) {
        std::ostringstream msg;
        msg << "brute engine: graph has " << g.vertex_count()
            << " vertices, above the guard of " << guard
            << "; raise the guard or use the kasteleyn engine";
        throw std::runtime_error(msg.str());
    }
    Rat total = 1;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() % 2 != 0) return 0;
        int balance = 0;
        for (int id : comp) balance += g.vertex(id).color == Color::Black ? 1 : -1;
        if (balance != 0) return 0;
        BruteState state(g, comp);
        Rat part = state.count();
        if (part.is_zero()) return 0;
        total *= part;
    }
    return total;
}

Rat count_auto(const MatchGraph& g, std::size_t brute_limit) {
    if (g.vertex_count() <= brute_limit) return count_brute(g, brute_limit);
    return count_kasteleyn(g);
}

}  // namespace tilecount
