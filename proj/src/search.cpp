#include "swc/search.hpp"

#include "swc/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace swc {

// --- SignedConfiguration ---

SignedConfiguration SignedConfiguration::from_pair(const PointConfiguration& F, const PointConfiguration& G) {
    if (F.dim() != G.dim()) throw Error(ErrorCode::DimensionError, "configurations differ in dimension");
    SignedConfiguration g(F.dim());
    for (const auto& [p, m] : F.entries()) g.add(p, m);
    for (const auto& [p, m] : G.entries()) g.add(p, -m);
    return g;
}

void SignedConfiguration::add(const LatticePoint& p, Int value) {
    if (p.dim() != d_) throw Error(ErrorCode::DimensionError, "point dimension differs");
    Int& v = values_[p];
    v = detail::checked_add(v, value);
    if (v == 0) values_.erase(p);
}

PointConfiguration SignedConfiguration::positive_part() const {
    PointConfiguration out(d_);
    for (const auto& [p, v] : values_) {
        if (v > 0) out.add(p, v);
    }
    return out;
}

PointConfiguration SignedConfiguration::negative_part() const {
    PointConfiguration out(d_);
    for (const auto& [p, v] : values_) {
        if (v < 0) out.add(p, -v);
    }
    return out;
}

bool SignedConfiguration::balanced() const {
    Int total = 0;
    for (const auto& [p, v] : values_) total = detail::checked_add(total, v);
    return total == 0;
}

bool SignedConfiguration::line_sums_vanish(std::span<const Direction> S) const {
    for (const auto& s : S) {
        std::map<LineKey, Int> sums;
        for (const auto& [p, v] : values_) sums[line_key(p, s)] += v;
        for (const auto& [key, total] : sums) {
            if (total != 0) return false;
        }
    }
    return true;
}

namespace {

// Lines of every direction that meet the cell list, numbered globally.
struct LineIndex {
    std::size_t dirs = 0;
    std::size_t cells = 0;
    std::vector<std::uint32_t> cell_line;  // [cell * dirs + dir]
    std::vector<int> line_size;
    std::vector<std::map<LineKey, std::uint32_t>> key_to_line;  // per direction
};

LineIndex build_index(std::span<const LatticePoint> cells, std::span<const Direction> dirs) {
    LineIndex idx;
    idx.dirs = dirs.size();
    idx.cells = cells.size();
    idx.cell_line.resize(idx.cells * idx.dirs);
    idx.key_to_line.resize(idx.dirs);
    for (std::size_t j = 0; j < idx.dirs; ++j) {
        for (std::size_t c = 0; c < idx.cells; ++c) {
            auto [it, inserted] =
                idx.key_to_line[j].try_emplace(line_key(cells[c], dirs[j]), static_cast<std::uint32_t>(idx.line_size.size()));
            if (inserted) idx.line_size.push_back(0);
            ++idx.line_size[it->second];
            idx.cell_line[c * idx.dirs + j] = it->second;
        }
    }
    return idx;
}

inline int pos_part(int x) { return x > 0 ? x : 0; }
inline int neg_part(int x) { return x < 0 ? -x : 0; }

// Running line sums of a partial +1/-1/0 labelling.
class GhostState {
public:
    GhostState(const LineIndex& idx, int k)
        : idx_(idx), k_(k), sum_(idx.line_size.size(), 0), rem_(idx.line_size),
          need_pos_(idx.dirs, 0), need_neg_(idx.dirs, 0), labels(idx.cells, 0) {}

    // Updates the state unconditionally; returns false if the partial
    // labelling can no longer be completed to a ghost with sides <= k.
    bool apply(std::size_t cell, int label) {
        labels[cell] = static_cast<std::int8_t>(label);
        pos += label > 0;
        neg += label < 0;
        bool ok = true;
        const std::uint32_t* lines = &idx_.cell_line[cell * idx_.dirs];
        for (std::size_t j = 0; j < idx_.dirs; ++j) {
            const std::uint32_t L = lines[j];
            --rem_[L];
            const int old = sum_[L];
            const int now = old + label;
            sum_[L] = now;
            need_pos_[j] += neg_part(now) - neg_part(old);
            need_neg_[j] += pos_part(now) - pos_part(old);
            if (std::abs(now) > rem_[L]) ok = false;
        }
        if (!ok) return false;
        for (std::size_t j = 0; j < idx_.dirs; ++j) {
            if (need_pos_[j] > k_ - pos || need_neg_[j] > k_ - neg) return false;
        }
        return true;
    }

    void undo(std::size_t cell, int label) {
        const std::uint32_t* lines = &idx_.cell_line[cell * idx_.dirs];
        for (std::size_t j = 0; j < idx_.dirs; ++j) {
            const std::uint32_t L = lines[j];
            ++rem_[L];
            const int old = sum_[L];
            const int now = old - label;
            sum_[L] = now;
            need_pos_[j] += neg_part(now) - neg_part(old);
            need_neg_[j] += pos_part(now) - pos_part(old);
        }
        pos -= label > 0;
        neg -= label < 0;
        labels[cell] = 0;
    }

    bool solved() const {
        if (pos == 0) return false;
        for (std::size_t j = 0; j < idx_.dirs; ++j) {
            if (need_pos_[j] != 0 || need_neg_[j] != 0) return false;
        }
        return true;
    }

    int k() const noexcept { return k_; }

    int pos = 0;
    int neg = 0;

private:
    const LineIndex& idx_;
    int k_;
    std::vector<int> sum_;
    std::vector<int> rem_;
    std::vector<int> need_pos_;
    std::vector<int> need_neg_;

public:
    std::vector<std::int8_t> labels;
};

constexpr int kLabelOrder[3] = {1, -1, 0};

// Labels tried at a node, with the +1-first symmetry break and the side caps.
inline bool label_allowed(const GhostState& s, int label) {
    if (label == 1) return s.pos < s.k();
    if (label == -1) return s.pos > 0 && s.neg < s.k();
    return true;
}

constexpr std::size_t kSplitDepth = 6;
constexpr std::uint64_t kFlushInterval = 1024;

struct Task {
    std::vector<std::int8_t> prefix;  // labels of cells [0, prefix.size())
};

enum class TaskStatus { Pending, NotFound, Found, Aborted, Skipped };

struct TaskResult {
    TaskStatus status = TaskStatus::Pending;
    std::vector<std::int8_t> labels;
    std::uint64_t nodes = 0;
};

struct SharedControl {
    std::uint64_t budget = 0;
    std::atomic<std::uint64_t> spent{0};
    std::atomic<bool> abort{false};
    std::atomic<std::size_t> best{SIZE_MAX};
};

class Worker {
public:
    Worker(const LineIndex& idx, int k, SharedControl& ctl) : idx_(idx), k_(k), ctl_(ctl) {}

    TaskResult run(const Task& task, std::size_t index) {
        TaskResult res;
        GhostState state(idx_, k_);
        for (std::size_t c = 0; c < task.prefix.size(); ++c) state.apply(c, task.prefix[c]);
        index_ = index;
        nodes_ = 0;
        unflushed_ = 0;
        stop_ = StopReason::None;
        const bool found = dfs(state, task.prefix.size());
        ctl_.spent.fetch_add(unflushed_);
        res.nodes = nodes_;
        if (found) {
            res.status = TaskStatus::Found;
            res.labels = state.labels;
        } else if (stop_ == StopReason::Budget) {
            res.status = TaskStatus::Aborted;
        } else if (stop_ == StopReason::Superseded) {
            res.status = TaskStatus::Skipped;
        } else {
            res.status = TaskStatus::NotFound;
        }
        return res;
    }

private:
    enum class StopReason { None, Budget, Superseded };

    void poll() {
        if (ctl_.spent.fetch_add(unflushed_) + unflushed_ > ctl_.budget) ctl_.abort = true;
        unflushed_ = 0;
        if (ctl_.abort) stop_ = StopReason::Budget;
        else if (ctl_.best.load() < index_) stop_ = StopReason::Superseded;
    }

    bool dfs(GhostState& s, std::size_t cell) {
        ++nodes_;
        if (++unflushed_ >= kFlushInterval) poll();
        if (stop_ != StopReason::None) return false;
        if (s.solved()) return true;
        if (cell == idx_.cells) return false;
        for (int label : kLabelOrder) {
            if (!label_allowed(s, label)) continue;
            if (s.apply(cell, label) && dfs(s, cell + 1)) return true;
            s.undo(cell, label);
            if (stop_ != StopReason::None) return false;
        }
        return false;
    }

    const LineIndex& idx_;
    int k_;
    SharedControl& ctl_;
    std::size_t index_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t unflushed_ = 0;
    StopReason stop_ = StopReason::None;
};

// Frontier of the DFS tree at kSplitDepth (or earlier, at solved nodes), in
// DFS order. Returns the number of interior nodes visited.
std::uint64_t split_tasks(GhostState& s, std::size_t cell, std::size_t depth, std::vector<Task>& out) {
    if (s.solved() || cell == depth) {
        out.push_back({std::vector<std::int8_t>(s.labels.begin(), s.labels.begin() + cell)});
        return 0;
    }
    std::uint64_t nodes = 1;
    for (int label : kLabelOrder) {
        if (!label_allowed(s, label)) continue;
        if (s.apply(cell, label)) nodes += split_tasks(s, cell + 1, depth, out);
        s.undo(cell, label);
    }
    return nodes;
}

struct FixedKResult {
    bool found = false;
    bool aborted = false;
    std::vector<std::int8_t> labels;
    std::uint64_t nodes = 0;
};

FixedKResult search_fixed_k(const LineIndex& idx, int k, std::uint64_t budget, unsigned threads) {
    FixedKResult out;
    std::vector<Task> tasks;
    {
        GhostState root(idx, k);
        out.nodes = split_tasks(root, 0, std::min(kSplitDepth, idx.cells), tasks);
    }
    const std::uint64_t prefix_nodes = out.nodes;
    if (prefix_nodes > budget) {
        out.aborted = true;
        return out;
    }

    SharedControl ctl;
    ctl.budget = budget - prefix_nodes;
    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        Worker worker(idx, k, ctl);
        while (true) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            if (ctl.abort) {
                results[t].status = TaskStatus::Aborted;
                continue;
            }
            if (t > ctl.best.load()) {
                results[t].status = TaskStatus::Skipped;
                continue;
            }
            results[t] = worker.run(tasks[t], t);
            if (results[t].status == TaskStatus::Found) {
                std::size_t cur = ctl.best.load();
                while (t < cur && !ctl.best.compare_exchange_weak(cur, t)) {
                }
            }
        }
    };
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size()))));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    // Deterministic merge: the winner is the first task in DFS order that
    // found a ghost, valid only if every earlier task ran to completion.
    for (std::size_t t = 0; t < results.size(); ++t) {
        const TaskResult& r = results[t];
        out.nodes += r.nodes;
        if (r.status == TaskStatus::Found) {
            out.found = true;
            out.labels = r.labels;
            return out;
        }
        if (r.status != TaskStatus::NotFound) {
            out.aborted = true;
            out.nodes = prefix_nodes + ctl.spent.load();
            return out;
        }
    }
    return out;
}

}  // namespace

SearchOutcome min_ghost(const DirectionSet& S, const Grid& grid, Int k_max, const SearchOptions& options) {
    if (grid.dim() != S.dim()) throw Error(ErrorCode::DimensionError, "grid and direction set differ in dimension");
    if (k_max < 1) throw Error(ErrorCode::InvalidParameter, "k_max must be at least 1");
    if (grid.cell_count() > 100'000) throw Error(ErrorCode::ResourceLimit, "grid too large for exhaustive search");

    SearchOutcome out;
    const auto half = static_cast<Int>(grid.cell_count() / 2);
    out.k_max = k_max;
    if (k_max > half) {
        out.k_max = half;
        out.warnings.push_back("k_max " + std::to_string(k_max) + " clamped to " + std::to_string(half) +
                               " (half the grid)");
    }

    const std::vector<LatticePoint> cells = grid.points();
    const LineIndex idx = build_index(cells, S.directions());
    std::uint64_t remaining = options.node_budget;

    for (Int k = 1; k <= out.k_max; ++k) {
        FixedKResult r = search_fixed_k(idx, static_cast<int>(k), remaining, options.threads);
        out.nodes_explored += r.nodes;
        if (r.aborted) {
            out.exhausted = false;
            out.warnings.push_back("node budget exhausted while searching k = " + std::to_string(k));
            return out;
        }
        remaining -= std::min(remaining, r.nodes);
        if (r.found) {
            PointConfiguration F(grid.dim());
            PointConfiguration G(grid.dim());
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (r.labels[c] > 0) F.add(cells[c]);
                if (r.labels[c] < 0) G.add(cells[c]);
            }
            out.minimal_size = k;
            out.witness = make_ghost_pair(std::move(F), std::move(G), S);
            out.exhausted = true;
            return out;
        }
    }
    out.exhausted = true;
    return out;
}

// --- reconstruction ---

namespace {

class ProfileEnumerator {
public:
    ProfileEnumerator(const LineIndex& idx, std::vector<int> target, int k, std::span<const LatticePoint> cells,
                      const SearchOptions& options)
        : idx_(idx), need_(std::move(target)), rem_(idx.line_size), k_(k), cells_(cells), options_(options),
          chosen_(idx.cells, false) {}

    ProfileMatches run() {
        ProfileMatches out;
        dfs(0, out);
        out.exhausted = !stopped_;
        out.nodes_explored = nodes_;
        return out;
    }

private:
    bool apply(std::size_t cell, bool take) {
        chosen_[cell] = take;
        placed_ += take;
        bool ok = true;
        for (std::size_t j = 0; j < idx_.dirs; ++j) {
            const std::uint32_t L = idx_.cell_line[cell * idx_.dirs + j];
            --rem_[L];
            need_[L] -= take;
            if (need_[L] < 0 || need_[L] > rem_[L]) ok = false;
        }
        return ok;
    }

    void undo(std::size_t cell, bool take) {
        for (std::size_t j = 0; j < idx_.dirs; ++j) {
            const std::uint32_t L = idx_.cell_line[cell * idx_.dirs + j];
            ++rem_[L];
            need_[L] += take;
        }
        placed_ -= take;
        chosen_[cell] = false;
    }

    void dfs(std::size_t cell, ProfileMatches& out) {
        if (stopped_) return;
        if (++nodes_ > options_.node_budget) {
            stopped_ = true;
            return;
        }
        if (cell == idx_.cells) {
            PointConfiguration F(cells_.empty() ? 0 : cells_[0].dim());
            for (std::size_t c = 0; c < cells_.size(); ++c) {
                if (chosen_[c]) F.add(cells_[c]);
            }
            out.configurations.push_back(std::move(F));
            if (out.configurations.size() >= options_.solution_limit) stopped_ = true;
            return;
        }
        for (bool take : {true, false}) {
            if (take && placed_ == k_) continue;
            if (apply(cell, take)) dfs(cell + 1, out);
            undo(cell, take);
            if (stopped_) return;
        }
    }

    const LineIndex& idx_;
    std::vector<int> need_;
    std::vector<int> rem_;
    int k_;
    std::span<const LatticePoint> cells_;
    const SearchOptions& options_;
    std::vector<bool> chosen_;
    int placed_ = 0;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
};

}  // namespace

ProfileMatches sets_with_profile(std::span<const XRayProfile> profiles, const Grid& grid,
                                 const SearchOptions& options) {
    if (profiles.empty()) throw Error(ErrorCode::InvalidProfileSet, "at least one profile is required");
    const Int k = profiles.front().total();
    for (const auto& p : profiles) {
        if (p.direction.dim() != grid.dim()) throw Error(ErrorCode::DimensionError, "profile dimension differs from grid");
        if (p.total() != k) throw Error(ErrorCode::InvalidProfileSet, "profiles disagree on the total point count");
        for (const auto& [key, c] : p.counts) {
            if (c <= 0) throw Error(ErrorCode::InvalidProfileSet, "profile counts must be positive");
        }
    }
    if (grid.cell_count() > 100'000) throw Error(ErrorCode::ResourceLimit, "grid too large for exhaustive search");

    const std::vector<LatticePoint> cells = grid.points();
    std::vector<Direction> dirs;
    for (const auto& p : profiles) dirs.push_back(p.direction);
    const LineIndex idx = build_index(cells, dirs);

    std::vector<int> target(idx.line_size.size(), 0);
    for (std::size_t j = 0; j < profiles.size(); ++j) {
        for (const auto& [key, c] : profiles[j].counts) {
            auto it = idx.key_to_line[j].find(key);
            // A populated line that misses the grid, or one holding more
            // points than it has cells, cannot be matched.
            if (it == idx.key_to_line[j].end() || c > idx.line_size[it->second]) {
                return ProfileMatches{{}, true, 0};
            }
            target[it->second] = static_cast<int>(c);
        }
    }
    return ProfileEnumerator(idx, std::move(target), static_cast<int>(k), cells, options).run();
}

UniquenessResult uniqueness_check(const PointConfiguration& F, std::span<const Direction> S, const Grid& grid,
                                  const SearchOptions& options) {
    if (F.dim() != grid.dim()) throw Error(ErrorCode::DimensionError, "configuration and grid differ in dimension");
    if (S.empty()) throw Error(ErrorCode::InvalidParameter, "at least one direction is required");
    if (!F.is_set()) throw Error(ErrorCode::InvalidParameter, "uniqueness is defined for sets, not multisets");
    for (const auto& [p, m] : F.entries()) {
        if (!grid.contains(p)) throw Error(ErrorCode::OutOfGrid, "configuration has a point outside the grid");
    }
    std::vector<XRayProfile> profiles;
    for (const auto& s : S) profiles.push_back(xray(F, s));
    ProfileMatches matches = sets_with_profile(profiles, grid, options);

    UniquenessResult r;
    r.exhausted = matches.exhausted;
    r.nodes_explored = matches.nodes_explored;
    bool saw_self = false;
    for (auto& c : matches.configurations) {
        if (c == F) saw_self = true;
        else r.alternatives.push_back(std::move(c));
    }
    if (!saw_self && matches.exhausted) throw Error(ErrorCode::InternalError, "reconstruction lost the input set");
    r.unique = matches.exhausted && r.alternatives.empty();
    return r;
}

// --- U-gons ---

namespace {

__int128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    const __int128 ax = static_cast<__int128>(a[0]) - o[0];
    const __int128 ay = static_cast<__int128>(a[1]) - o[1];
    const __int128 bx = static_cast<__int128>(b[0]) - o[0];
    const __int128 by = static_cast<__int128>(b[1]) - o[1];
    return ax * by - ay * bx;
}

// Strict convex hull (collinear points dropped), Andrew's monotone chain.
std::vector<LatticePoint> strict_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t h = 0;
    for (const auto& p : pts) {
        while (h >= 2 && cross(hull[h - 2], hull[h - 1], p) <= 0) --h;
        hull[h++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = h + 1; i-- > 0;) {
        while (h >= lower && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
        hull[h++] = pts[i];
    }
    hull.resize(h - 1);
    return hull;
}

}  // namespace

UgonReport ugon_check(const PointConfiguration& V, std::span<const Direction> S) {
    if (V.dim() != 2) throw Error(ErrorCode::DimensionError, "U-gons live in Z^2");
    for (const auto& s : S) {
        if (s.dim() != 2) throw Error(ErrorCode::DimensionError, "directions must be planar");
    }
    if (!V.is_set()) throw Error(ErrorCode::InvalidParameter, "vertices must be distinct");
    if (V.entries().size() < 3) throw Error(ErrorCode::DegeneratePolygon, "a polygon needs at least 3 vertices");

    std::vector<LatticePoint> pts;
    for (const auto& [p, m] : V.entries()) pts.push_back(p);

    UgonReport r;
    const std::vector<LatticePoint> hull = strict_hull(pts);
    if (hull.size() < 3) throw Error(ErrorCode::DegeneratePolygon, "vertices are collinear");
    for (const auto& p : pts) {
        if (std::find(hull.begin(), hull.end(), p) == hull.end()) r.non_vertices.push_back(p);
    }
    r.convex_position = hull.size() >= 3 && r.non_vertices.empty();

    for (const auto& s : S) {
        std::map<LineKey, int> on_line;
        for (const auto& p : pts) ++on_line[line_key(p, s)];
        for (const auto& p : pts) {
            if (on_line[line_key(p, s)] < 2) r.violations.push_back({p, s});
        }
    }
    r.is_ugon = r.convex_position && r.violations.empty();
    return r;
}

}  // namespace swc
