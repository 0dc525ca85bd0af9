#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "geodex/arithmetic.hpp"
#include "geodex/canonical.hpp"
#include "geodex/digraph.hpp"
#include "geodex/outlier.hpp"
#include "geodex/walks.hpp"

namespace geodex {

struct SearchConfig {
    int d = 1;
    int k = 1;
    std::uint64_t node_budget = 0;  // 0 = unlimited
    int workers = 1;
    std::string checkpoint_path;  // written when the budget runs out
    // Structural prunes. The common-out-neighbour rule is theorem-backed for
    // d = 3 only and is applied only there.
    bool prune_common_out_neighbour = true;
    bool prune_outlier_transposition = true;
};

struct SearchResult {
    bool exhausted = false;
    std::vector<Digraph> found;  // pairwise non-isomorphic, sorted by canonical form
    std::uint64_t nodes = 0;     // arcs placed inside task subtrees
    double wall_seconds = 0.0;
};

namespace detail {

// Checkpoint file: little-endian, versioned. Layout:
//   magic "GDXCHKP1" (8 bytes), u32 version = 1, u32 d, u32 k,
//   u32 split_arcs, u64 total_tasks, u64 next_task,
//   u32 n_interrupted, then per interrupted task:
//     u64 task_index, u32 path_len, u32 arc-target per path entry
//     (targets fully determine the path: sources follow from the assignment
//     discipline),
//   u64 nodes, u64 n_found, then per found digraph: u32 byte length + the
//   canonical digraph text.
constexpr char kCheckpointMagic[8] = {'G', 'D', 'X', 'C', 'H', 'K', 'P', '1'};
constexpr std::uint32_t kCheckpointVersion = 1;

template <typename T>
void put_le(std::string& out, T value) {
    for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
}

template <typename T>
T get_le(const std::string& in, std::size_t& pos) {
    if (pos + sizeof(T) > in.size()) throw CheckpointError("checkpoint truncated");
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        value |= static_cast<T>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
    pos += sizeof(T);
    return value;
}

struct InterruptedTask {
    std::uint64_t task_index = 0;
    std::vector<Vertex> path;  // arc targets from the root
};

struct CheckpointData {
    int d = 0;
    int k = 0;
    int split_arcs = 0;
    std::uint64_t total_tasks = 0;
    std::uint64_t next_task = 0;
    std::vector<InterruptedTask> interrupted;
    std::uint64_t nodes = 0;
    std::vector<std::string> found_texts;
};

inline void write_checkpoint(const std::string& path, const CheckpointData& data) {
    std::string buf;
    buf.append(kCheckpointMagic, sizeof(kCheckpointMagic));
    put_le<std::uint32_t>(buf, kCheckpointVersion);
    put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(data.d));
    put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(data.k));
    put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(data.split_arcs));
    put_le<std::uint64_t>(buf, data.total_tasks);
    put_le<std::uint64_t>(buf, data.next_task);
    put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(data.interrupted.size()));
    for (const auto& task : data.interrupted) {
        put_le<std::uint64_t>(buf, task.task_index);
        put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(task.path.size()));
        for (Vertex v : task.path) put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(v));
    }
    put_le<std::uint64_t>(buf, data.nodes);
    put_le<std::uint64_t>(buf, static_cast<std::uint64_t>(data.found_texts.size()));
    for (const auto& text : data.found_texts) {
        put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(text.size()));
        buf.append(text);
    }
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw CheckpointError("cannot write checkpoint file " + path);
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

inline CheckpointData read_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw CheckpointError("cannot open checkpoint file " + path);
    std::string buf((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    if (buf.size() < sizeof(kCheckpointMagic) || std::memcmp(buf.data(), kCheckpointMagic, sizeof(kCheckpointMagic)) != 0)
        throw CheckpointError("bad checkpoint magic");
    std::size_t pos = sizeof(kCheckpointMagic);
    if (get_le<std::uint32_t>(buf, pos) != kCheckpointVersion) throw CheckpointError("unsupported checkpoint version");
    CheckpointData data;
    data.d = static_cast<int>(get_le<std::uint32_t>(buf, pos));
    data.k = static_cast<int>(get_le<std::uint32_t>(buf, pos));
    data.split_arcs = static_cast<int>(get_le<std::uint32_t>(buf, pos));
    data.total_tasks = get_le<std::uint64_t>(buf, pos);
    data.next_task = get_le<std::uint64_t>(buf, pos);
    auto n_interrupted = get_le<std::uint32_t>(buf, pos);
    for (std::uint32_t i = 0; i < n_interrupted; ++i) {
        InterruptedTask task;
        task.task_index = get_le<std::uint64_t>(buf, pos);
        auto len = get_le<std::uint32_t>(buf, pos);
        for (std::uint32_t j = 0; j < len; ++j) task.path.push_back(static_cast<Vertex>(get_le<std::uint32_t>(buf, pos)));
        data.interrupted.push_back(std::move(task));
    }
    data.nodes = get_le<std::uint64_t>(buf, pos);
    auto n_found = get_le<std::uint64_t>(buf, pos);
    for (std::uint64_t i = 0; i < n_found; ++i) {
        auto len = get_le<std::uint32_t>(buf, pos);
        if (pos + len > buf.size()) throw CheckpointError("checkpoint truncated");
        data.found_texts.push_back(buf.substr(pos, len));
        pos += len;
    }
    return data;
}

// Depth-first assignment of out-neighbour sets over n = M(d,k)+1 labeled
// vertices. Symmetry breaking: vertex 0's out-set is {1..d} (forced by the
// first-use rule) and new labels are introduced in ascending order, so every
// isomorphism class reachable from a strongly connected candidate appears at
// least once; completed digraphs are deduplicated by canonical form upstream.
// Geodecity is enforced incrementally: exact per-length walk counts with an
// undo journal, cut as soon as any <=k pair count reaches 2.
class SearchEngine {
public:
    SearchEngine(const SearchConfig& cfg, int n)
        : cfg_(cfg),
          n_(n),
          use_common_prune_(cfg.prune_common_out_neighbour && cfg.d == 3),
          walks_(static_cast<std::size_t>(cfg.k + 1) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0),
          totals_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
        out_.resize(static_cast<std::size_t>(n));
        in_.resize(static_cast<std::size_t>(n));
        indeg_.assign(static_cast<std::size_t>(n), 0);
        for (Vertex u = 0; u < n; ++u) {
            walk(0, u, u) = 1;
            total(u, u) = 1;
        }
    }

    // Explore the subtree rooted at `prefix` (applied without counting).
    // `resume` = arc targets below the prefix to fast-forward past; nodes on
    // the resume path were counted by the interrupted run. Returns false if
    // the budget stopped the walk; stop_path() then names the next node.
    bool explore(std::span<const Vertex> prefix, std::span<const Vertex> resume,
                 std::atomic<std::uint64_t>& nodes, std::uint64_t budget,
                 const std::function<void(const Digraph&)>& found_sink) {
        for (Vertex v : prefix)
            if (!apply_arc_checked(v)) throw CheckpointError("checkpoint path is not a valid search prefix");
        stop_path_.clear();
        bool ok = dfs(resume, 0, nodes, budget, found_sink);
        for (std::size_t i = 0; i < prefix.size(); ++i) undo_arc();
        return ok;
    }

    // Enumerate task roots: all live nodes at arc depth `split_arcs`,
    // in DFS preorder. Shallower leaves are validated directly.
    void enumerate_tasks(int split_arcs, std::vector<std::vector<Vertex>>& tasks,
                         const std::function<void(const Digraph&)>& found_sink) {
        enumerate_rec(split_arcs, tasks, found_sink);
    }

    const std::vector<Vertex>& stop_path() const { return stop_path_; }

private:
    std::uint16_t& walk(int t, Vertex x, Vertex y) {
        return walks_[(static_cast<std::size_t>(t) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x)) *
                          static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(y)];
    }
    std::uint16_t& total(Vertex x, Vertex y) {
        return totals_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
    }

    Vertex current_source() const {
        Vertex u = 0;
        while (u < n_ && static_cast<int>(out_[static_cast<std::size_t>(u)].size()) == cfg_.d) ++u;
        return u;
    }

    bool assignment_complete() const { return arcs_placed_ == n_ * cfg_.d; }

    // Candidates for the next arc target from source u, ascending: existing
    // labels above the previous slot, then the single next-new label.
    void candidates(Vertex u, std::vector<Vertex>& out) const {
        out.clear();
        const auto& row = out_[static_cast<std::size_t>(u)];
        Vertex lo = row.empty() ? 0 : row.back() + 1;
        for (Vertex v = lo; v <= max_used_ && v < n_; ++v)
            if (v != u) out.push_back(v);
        if (max_used_ + 1 < n_ && max_used_ + 1 >= lo) out.push_back(max_used_ + 1);
    }

    // Place the next arc (current source -> v) if every incremental check
    // passes; otherwise leave the state untouched.
    bool apply_arc_checked(Vertex v) {
        Vertex u = current_source();
        if (u >= n_) return false;
        if (v == u || v < 0 || v >= n_) return false;
        const auto& row = out_[static_cast<std::size_t>(u)];
        if (!row.empty() && v <= row.back()) return false;
        if (v > max_used_ + 1) return false;  // new labels in first-use order
        if (indeg_[static_cast<std::size_t>(v)] >= cfg_.d) return false;

        journal_frames_.push_back(journal_.size());
        Vertex prev_max = max_used_;
        out_[static_cast<std::size_t>(u)].push_back(v);
        in_[static_cast<std::size_t>(v)].push_back(u);
        ++indeg_[static_cast<std::size_t>(v)];
        ++arcs_placed_;
        if (v > max_used_) max_used_ = v;
        arc_stack_.push_back(v);
        max_used_stack_.push_back(prev_max);

        if (!update_walks(u, v) || !structural_ok(u)) {
            undo_arc();
            return false;
        }
        return true;
    }

    void undo_arc() {
        Vertex v = arc_stack_.back();
        arc_stack_.pop_back();
        max_used_ = max_used_stack_.back();
        max_used_stack_.pop_back();
        // the arc being removed is the last one placed, so its source is the
        // most recent in-neighbour recorded at v
        Vertex u = in_[static_cast<std::size_t>(v)].back();
        out_[static_cast<std::size_t>(u)].pop_back();
        in_[static_cast<std::size_t>(v)].pop_back();
        --indeg_[static_cast<std::size_t>(v)];
        --arcs_placed_;
        std::size_t frame = journal_frames_.back();
        journal_frames_.pop_back();
        while (journal_.size() > frame) {
            const JournalEntry& e = journal_.back();
            if (e.t >= 0)
                walk(e.t, e.x, e.y) = static_cast<std::uint16_t>(walk(e.t, e.x, e.y) - e.delta);
            else
                total(e.x, e.y) = static_cast<std::uint16_t>(total(e.x, e.y) - e.delta);
            journal_.pop_back();
        }
    }

    // Exact incremental walk counting for the new arc (a,b): every new
    // <=k walk through (a,b) decomposes as x ~i~> a -> b ~j~> y with
    // i + 1 + j <= k, counted from the tables of the previous state. Walks
    // using the arc twice would require a pre-existing b ~> a path, which
    // makes total(b,b) >= 2 here and prunes the state, so single-use
    // decomposition stays exact on every surviving state.
    bool update_walks(Vertex a, Vertex b) {
        const int k = cfg_.k;
        bool ok = true;
        std::vector<std::pair<int, Vertex>> into_a;   // (i, x) with walk(i,x,a) > 0, i <= k-1
        std::vector<std::pair<int, Vertex>> from_b;   // (j, y) with walk(j,b,y) > 0, j <= k-1
        for (int i = 0; i <= k - 1; ++i)
            for (Vertex x = 0; x < n_; ++x)
                if (walk(i, x, a) > 0) into_a.emplace_back(i, x);
        for (int j = 0; j <= k - 1; ++j)
            for (Vertex y = 0; y < n_; ++y)
                if (walk(j, b, y) > 0) from_b.emplace_back(j, y);
        for (const auto& [i, x] : into_a) {
            for (const auto& [j, y] : from_b) {
                if (i + 1 + j > k) continue;
                std::uint16_t delta = static_cast<std::uint16_t>(walk(i, x, a) * walk(j, b, y));
                int t = i + 1 + j;
                walk(t, x, y) = static_cast<std::uint16_t>(walk(t, x, y) + delta);
                journal_.push_back({t, x, y, delta});
                total(x, y) = static_cast<std::uint16_t>(total(x, y) + delta);
                journal_.push_back({-1, x, y, delta});
                if (total(x, y) >= 2) ok = false;
            }
            if (!ok) break;
        }
        return ok;
    }

    bool structural_ok(Vertex u) {
        const auto& row = out_[static_cast<std::size_t>(u)];
        Vertex b = row.back();
        if (use_common_prune_) {
            // at most one common out-neighbour among distinct vertices
            for (Vertex x : in_[static_cast<std::size_t>(b)]) {
                if (x == u) continue;
                auto& other = out_[static_cast<std::size_t>(x)];
                int shared = 0;
                for (Vertex w : row)
                    if (std::find(other.begin(), other.end(), w) != other.end()) ++shared;
                if (shared >= 2) return false;
            }
        }
        if (cfg_.prune_outlier_transposition && static_cast<int>(row.size()) == cfg_.d) {
            // equal out-neighbourhoods force an outlier transposition, so a
            // third vertex with the same out-set is impossible
            int same = 1;
            for (Vertex w = 0; w < n_; ++w) {
                if (w == u) continue;
                const auto& other = out_[static_cast<std::size_t>(w)];
                if (static_cast<int>(other.size()) == cfg_.d && other == row) ++same;
            }
            if (same >= 3) return false;
        }
        // every still-unintroduced label needs a free out-slot somewhere
        int needed = (n_ - 1) - max_used_;
        int slots_left = n_ * cfg_.d - arcs_placed_;
        if (needed > slots_left) return false;
        return true;
    }

    void leaf(const std::function<void(const Digraph&)>& found_sink) {
        Digraph g(out_);
        // The incremental counts already certify geodecity; re-verify the
        // full excess-one contract through the library path before
        // accepting, and treat any failure as an internal inconsistency.
        auto profile = excess_profile(g, cfg_.d, cfg_.k);
        if (!profile.is_excess_one) throw Error("search leaf failed excess-one re-verification");
        OutlierMap o = outlier_map(g, cfg_.k);
        if (!verify_path_identity(g, cfg_.k, o)) throw Error("search leaf failed the walk identity");
        found_sink(g);
    }

    bool dfs(std::span<const Vertex> resume, std::size_t resume_depth, std::atomic<std::uint64_t>& nodes,
             std::uint64_t budget, const std::function<void(const Digraph&)>& found_sink) {
        if (assignment_complete()) {
            leaf(found_sink);
            return true;
        }
        Vertex u = current_source();
        if (u >= n_ || u > max_used_) return true;  // unintroduced source: no valid completion

        std::vector<Vertex> cands;
        candidates(u, cands);
        bool resume_pending = resume_depth < resume.size();
        for (Vertex v : cands) {
            bool replay = false;
            std::span<const Vertex> child_resume{};
            std::size_t child_depth = 0;
            if (resume_pending) {
                if (v < resume[resume_depth]) continue;  // explored before the interruption
                if (v > resume[resume_depth])
                    throw CheckpointError("checkpoint resume path does not match the search tree");
                if (resume_depth + 1 < resume.size()) {
                    replay = true;  // interior resume node: counted by the interrupted run
                    child_resume = resume;
                    child_depth = resume_depth + 1;
                }
                // after this candidate the resume path is consumed at this level
                resume_pending = false;
            }
            if (!replay) {
                std::uint64_t seen = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
                if (budget != 0 && seen > budget) {
                    nodes.fetch_sub(1, std::memory_order_relaxed);
                    stop_path_.assign(arc_stack_.begin(), arc_stack_.end());
                    stop_path_.push_back(v);
                    return false;
                }
            }
            if (!apply_arc_checked(v)) {
                if (replay) throw CheckpointError("checkpoint resume path is not a live branch");
                continue;
            }
            bool ok = dfs(child_resume, child_depth, nodes, budget, found_sink);
            undo_arc();
            if (!ok) return false;
        }
        return true;
    }

    void enumerate_rec(int split_arcs, std::vector<std::vector<Vertex>>& tasks,
                       const std::function<void(const Digraph&)>& found_sink) {
        if (arcs_placed_ == split_arcs) {
            tasks.emplace_back(arc_stack_);
            return;
        }
        if (assignment_complete()) {
            leaf(found_sink);
            return;
        }
        Vertex u = current_source();
        if (u >= n_ || u > max_used_) return;
        std::vector<Vertex> cands;
        candidates(u, cands);
        for (Vertex v : cands) {
            if (!apply_arc_checked(v)) continue;
            enumerate_rec(split_arcs, tasks, found_sink);
            undo_arc();
        }
    }

    struct JournalEntry {
        int t;  // -1 = totals table
        Vertex x;
        Vertex y;
        std::uint16_t delta;
    };

    SearchConfig cfg_;
    int n_;
    bool use_common_prune_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<int> indeg_;
    std::vector<std::uint16_t> walks_;   // (k+1) x n x n, exact per-length counts
    std::vector<std::uint16_t> totals_;  // n x n, sums over lengths 0..k
    Vertex max_used_ = 0;
    int arcs_placed_ = 0;
    std::vector<Vertex> arc_stack_;
    std::vector<Vertex> max_used_stack_;
    std::vector<JournalEntry> journal_;
    std::vector<std::size_t> journal_frames_;
    std::vector<Vertex> stop_path_;
};

}  // namespace detail

// Exhaustive labeled search for (d,k;+1)-digraphs of order M(d,k)+1, split at
// a fixed arc depth into DFS-preorder tasks (the unit of parallelism and of
// checkpoint resume).
inline SearchResult search_excess_one(const SearchConfig& cfg,
                                      const detail::CheckpointData* resume_from = nullptr) {
    if (cfg.d < 1 || cfg.k < 1) throw std::invalid_argument("search requires d >= 1, k >= 1");
    const BigInt order = moore_bound(cfg.d, cfg.k) + 1;
    if (order > 64) throw std::invalid_argument("search order M(d,k)+1 exceeds the supported desk scale");
    const int n = order.convert_to<int>();

    const auto t_start = std::chrono::steady_clock::now();
    int split_arcs = (cfg.d >= 3 ? 3 * cfg.d : 2 * cfg.d);
    if (split_arcs > n * cfg.d) split_arcs = n * cfg.d;
    if (resume_from) split_arcs = resume_from->split_arcs;

    // Phase 1: deterministic task list (not counted against the budget).
    std::vector<std::vector<Vertex>> tasks;
    std::vector<Digraph> shallow_found;
    {
        detail::SearchEngine engine(cfg, n);
        engine.enumerate_tasks(split_arcs, tasks, [&](const Digraph& g) { shallow_found.push_back(g); });
    }

    std::atomic<std::uint64_t> nodes{0};
    std::vector<std::vector<Digraph>> per_task_found(tasks.size());
    std::vector<detail::InterruptedTask> interrupted;
    std::mutex interrupted_mutex;
    std::atomic<std::uint64_t> next_task{0};
    std::atomic<bool> out_of_budget{false};
    std::uint64_t first_unstarted = tasks.size();

    std::vector<std::pair<std::uint64_t, std::vector<Vertex>>> resume_assignments;
    if (resume_from) {
        if (resume_from->total_tasks != tasks.size())
            throw CheckpointError("checkpoint task list does not match this configuration");
        nodes.store(resume_from->nodes);
        next_task.store(resume_from->next_task);
        for (const auto& task : resume_from->interrupted) {
            if (task.task_index >= tasks.size()) throw CheckpointError("checkpoint task index out of range");
            resume_assignments.emplace_back(task.task_index, task.path);
        }
    }

    std::atomic<std::uint64_t> next_resume{0};
    auto worker = [&]() {
        detail::SearchEngine engine(cfg, n);
        // finish interrupted tasks first
        while (true) {
            std::uint64_t i = next_resume.fetch_add(1);
            if (i >= resume_assignments.size()) break;
            auto& [task_index, full_path] = resume_assignments[i];
            const auto& prefix = tasks[task_index];
            if (full_path.size() < prefix.size() ||
                !std::equal(prefix.begin(), prefix.end(), full_path.begin()))
                throw CheckpointError("checkpoint resume path does not extend its task prefix");
            std::vector<Vertex> tail(full_path.begin() + static_cast<long>(prefix.size()), full_path.end());
            bool ok = engine.explore(prefix, tail, nodes, cfg.node_budget,
                                     [&](const Digraph& g) { per_task_found[task_index].push_back(g); });
            if (!ok) {
                std::lock_guard<std::mutex> lock(interrupted_mutex);
                interrupted.push_back({task_index, engine.stop_path()});
                out_of_budget.store(true);
            }
        }
        // then fresh tasks
        while (!out_of_budget.load()) {
            std::uint64_t i = next_task.fetch_add(1);
            if (i >= tasks.size()) break;
            bool ok = engine.explore(tasks[i], {}, nodes, cfg.node_budget,
                                     [&](const Digraph& g) { per_task_found[i].push_back(g); });
            if (!ok) {
                std::lock_guard<std::mutex> lock(interrupted_mutex);
                interrupted.push_back({i, engine.stop_path()});
                out_of_budget.store(true);
            }
        }
    };

    int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    first_unstarted = std::min<std::uint64_t>(next_task.load(), tasks.size());

    SearchResult result;
    result.nodes = nodes.load();
    result.exhausted = !out_of_budget.load() && first_unstarted == tasks.size();

    std::map<std::string, Digraph> dedup;
    auto add_found = [&](const Digraph& g) { dedup.emplace(canonical_form(g), g); };
    for (const auto& g : shallow_found) add_found(g);
    for (const auto& bucket : per_task_found)
        for (const auto& g : bucket) add_found(g);
    if (resume_from)
        for (const auto& text : resume_from->found_texts) add_found(Digraph::parse(text));
    for (auto& [form, g] : dedup) result.found.push_back(std::move(g));

    if (!result.exhausted && !cfg.checkpoint_path.empty()) {
        detail::CheckpointData data;
        data.d = cfg.d;
        data.k = cfg.k;
        data.split_arcs = split_arcs;
        data.total_tasks = tasks.size();
        data.next_task = first_unstarted;
        data.interrupted = interrupted;
        data.nodes = result.nodes;
        for (const auto& g : result.found) data.found_texts.push_back(g.to_text());
        detail::write_checkpoint(cfg.checkpoint_path, data);
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return result;
}

// Continue an interrupted search from its checkpoint; (d,k) must match and
// the budget compares against the cumulative node count.
inline SearchResult resume_search(const SearchConfig& cfg, const std::string& checkpoint_path) {
    detail::CheckpointData data = detail::read_checkpoint(checkpoint_path);
    if (data.d != cfg.d || data.k != cfg.k)
        throw CheckpointError("checkpoint is for (d,k) = (" + std::to_string(data.d) + "," +
                              std::to_string(data.k) + ")");
    return search_excess_one(cfg, &data);
}

}  // namespace geodex
