#include "tessella/cover.hpp"

#include <algorithm>

namespace tessella {

namespace {

struct Search {
    const CoverProblem& p;
    std::vector<std::vector<std::pair<int, int>>> cell_cands; // cell -> (cand, mult)
    std::vector<int> count;
    std::vector<char> active;
    std::vector<int> avail; // active candidates per cell
    std::vector<int> chosen;
    std::uint64_t nodes;
    bool aborted = false;

    explicit Search(const CoverProblem& prob, std::uint64_t budget)
        : p(prob),
          cell_cands(prob.num_cells),
          count(prob.num_cells, 0),
          active(prob.cand.size(), 1),
          avail(prob.num_cells, 0),
          nodes(budget) {
        for (int r = 0; r < static_cast<int>(p.cand.size()); ++r)
            for (auto [c, m] : p.cand[r]) cell_cands[c].emplace_back(r, m);
        for (int c = 0; c < p.num_cells; ++c)
            avail[c] = static_cast<int>(cell_cands[c].size());
        // candidates that overflow some cell on their own are never usable
        for (int r = 0; r < static_cast<int>(p.cand.size()); ++r)
            if (!placeable(r)) deactivate(r, nullptr);
    }

    bool placeable(int r) const {
        for (auto [c, m] : p.cand[r])
            if (count[c] + m > p.hi[c]) return false;
        return true;
    }

    void deactivate(int r, std::vector<int>* trail) {
        active[r] = 0;
        for (auto [c, m] : p.cand[r]) avail[c] -= 1;
        if (trail) trail->push_back(r);
    }

    void reactivate(int r) {
        active[r] = 1;
        for (auto [c, m] : p.cand[r]) avail[c] += 1;
    }

    // cell most in need of coverage with fewest remaining options
    int pick_cell() const {
        int best = -1;
        for (int c = 0; c < p.num_cells; ++c) {
            if (count[c] >= p.lo[c]) continue;
            if (best < 0 || avail[c] < avail[best]) best = c;
        }
        return best;
    }

    bool run() {
        if (nodes == 0) {
            aborted = true;
            return false;
        }
        --nodes;
        int cell = pick_cell();
        if (cell < 0) return true; // all lower bounds met
        if (avail[cell] == 0) return false;
        std::vector<int> branch_trail;
        bool found = false;
        for (auto [r, mult] : cell_cands[cell]) {
            (void)mult;
            if (!active[r] || !placeable(r)) continue;
            // place r
            for (auto [c, m] : p.cand[r]) count[c] += m;
            chosen.push_back(r);
            std::vector<int> trail;
            deactivate(r, &trail);
            for (auto [c, m] : p.cand[r]) {
                (void)m;
                for (auto [r2, m2] : cell_cands[c]) {
                    (void)m2;
                    if (active[r2] && !placeable(r2)) deactivate(r2, &trail);
                }
            }
            if (run()) {
                found = true;
                break;
            }
            for (auto it = trail.rbegin(); it != trail.rend(); ++it) reactivate(*it);
            chosen.pop_back();
            for (auto [c, m] : p.cand[r]) count[c] -= m;
            if (aborted) break;
            // any solution covering `cell` without r is explored with r excluded
            deactivate(r, &branch_trail);
        }
        if (!found)
            for (auto it = branch_trail.rbegin(); it != branch_trail.rend(); ++it)
                reactivate(*it);
        return found;
    }
};

}  // namespace

CoverResult solve_cover(const CoverProblem& p, std::uint64_t node_budget) {
    for (int c = 0; c < p.num_cells; ++c)
        if (p.lo[c] > p.hi[c]) return CoverResult{false, false, {}};
    Search s(p, node_budget);
    bool ok = s.run();
    return CoverResult{ok, s.aborted, ok ? s.chosen : std::vector<int>{}};
}

}  // namespace tessella
