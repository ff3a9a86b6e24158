#pragma once

// Isomorph-free exhaustive generation of connected minimal doodle diagrams
// by crossing number.
//
// The searcher enumerates breadth-first codes directly: darts are paired in
// canonical order, new crossings are allocated on first reference, and a
// finished pairing is accepted iff its code is the lexicographic minimum
// over all seed darts.  Each isomorphism class therefore appears exactly
// once, already in canonical coordinates.  Faces are tracked incrementally
// as chains; completing a monogon or a distinct-corner bigon prunes the
// branch, and for an exact-genus filter the face count is bounded from
// both sides (each future face consumes at least three of the boundary
// sides not yet absorbed by completed faces).
//
// The search tree is split at a fixed depth into independent work items;
// items are distributed to workers and the merged records sorted by code,
// so census files are byte-identical across runs and worker counts.  Wall
// clock and node budgets interrupt the search with a resumable state.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "doodle/canonical.hpp"
#include "doodle/faces.hpp"
#include "doodle/map.hpp"
#include "doodle/moves.hpp"

namespace doodle {

struct CensusFilters {
    std::optional<int> genus;
    std::optional<std::uint32_t> components;
    std::optional<std::map<std::size_t, std::uint32_t>> face_vector;
};

struct CensusBudget {
    std::optional<double> seconds;
    std::optional<std::uint64_t> max_nodes;
};

struct CensusRecord {
    std::string code;
    std::uint32_t crossings = 0;
    int genus = 0;
    std::uint32_t components = 0;
    std::uint32_t trivial_circles = 0;
    std::vector<std::pair<std::size_t, std::uint32_t>> face_vector;
    bool fundamental = false;
    bool repeated_corner_bigon = false;
    std::vector<DartId> pairing;  // canonical coordinates

    DoodleMap map() const {
        return DoodleMap::from_pairing(crossings, std::vector<DartId>(pairing));
    }
};

inline constexpr int kCensusSchemaVersion = 1;

struct CensusResumption {
    std::uint32_t n = 0;
    CensusFilters filters;
    std::vector<std::vector<std::pair<std::uint16_t, std::uint16_t>>> pending;
    std::vector<CensusRecord> done;
};

struct CensusResult {
    std::vector<CensusRecord> records;
    bool complete = true;
    std::optional<CensusResumption> resumption;
    std::uint64_t nodes = 0;
};

namespace detail {

inline nlohmann::ordered_json record_to_json(const CensusRecord& r) {
    nlohmann::ordered_json j;
    j["schema"] = "doodle-census";
    j["version"] = kCensusSchemaVersion;
    j["code"] = r.code;
    j["crossings"] = r.crossings;
    j["genus"] = r.genus;
    j["components"] = r.components;
    j["trivial_circles"] = r.trivial_circles;
    auto fv = nlohmann::ordered_json::array();
    for (auto [deg, count] : r.face_vector) fv.push_back({deg, count});
    j["face_vector"] = fv;
    j["fundamental"] = r.fundamental;
    j["repeated_corner_bigon"] = r.repeated_corner_bigon;
    j["pairing"] = r.pairing;
    return j;
}

inline CensusRecord record_from_json(const nlohmann::json& j) {
    if (j.value("schema", "") != "doodle-census" || j.value("version", -1) != kCensusSchemaVersion)
        throw ParseError("census record: schema mismatch");
    CensusRecord r;
    r.code = j.at("code").get<std::string>();
    r.crossings = j.at("crossings").get<std::uint32_t>();
    r.genus = j.at("genus").get<int>();
    r.components = j.at("components").get<std::uint32_t>();
    r.trivial_circles = j.at("trivial_circles").get<std::uint32_t>();
    for (const auto& e : j.at("face_vector"))
        r.face_vector.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::uint32_t>());
    r.fundamental = j.at("fundamental").get<bool>();
    r.repeated_corner_bigon = j.at("repeated_corner_bigon").get<bool>();
    r.pairing = j.at("pairing").get<std::vector<DartId>>();
    return r;
}

// Depth-first generator over breadth-first codes with incremental face
// chains.  One instance per worker.
class CensusSearcher {
public:
    CensusSearcher(std::uint32_t n, const CensusFilters& filters)
        : n_(n),
          filters_(filters),
          pairing_(static_cast<std::size_t>(n) * 4, kNoDart),
          succ_(pairing_.size(), kNoDart),
          head_(pairing_.size(), kNoDart),
          tail_(pairing_.size(), kNoDart),
          len_(pairing_.size(), 0),
          comparer_(pairing_) {
        allocate();  // crossing 0
        if (filters_.genus) {
            int ft = static_cast<int>(n_) + 2 - 2 * *filters_.genus;
            face_target_ = ft >= 1 ? std::optional<int>(ft) : std::optional<int>(0);
        }
    }

    // Runs the subtree below `prefix`.  `poll` is invoked periodically and
    // may raise the stop flag; returns false when stopped mid-subtree.
    template <typename Emit, typename Poll>
    bool run(const std::vector<std::pair<std::uint16_t, std::uint16_t>>& prefix,
             const Emit& emit, const std::atomic<bool>& stop, std::uint64_t& nodes,
             const Poll& poll) {
        reset();
        for (auto [e, f] : prefix) {
            if (!apply(e, f)) throw Error("census: invalid resumption prefix");
        }
        return dfs(emit, stop, nodes, poll);
    }

    // Expands a prefix by one decision; children that fail pruning are not
    // reported.  Completed leaves are emitted directly.
    template <typename Emit>
    std::vector<std::pair<std::uint16_t, std::uint16_t>> children(
        const std::vector<std::pair<std::uint16_t, std::uint16_t>>& prefix, const Emit& emit) {
        reset();
        for (auto [e, f] : prefix)
            if (!apply(e, f)) throw Error("census: invalid prefix");
        std::vector<std::pair<std::uint16_t, std::uint16_t>> out;
        DartId e = first_unpaired();
        if (e == kNoDart) {
            if (allocated_ == n_) harvest(emit);
            return out;
        }
        for (DartId f : candidates(e)) {
            if (apply(e, f)) {
                out.emplace_back(static_cast<std::uint16_t>(e), static_cast<std::uint16_t>(f));
                undo();
            }
        }
        return out;
    }

private:
    static constexpr DartId kNew = 0xfffffffeu;

    void reset() {
        std::fill(pairing_.begin(), pairing_.end(), kNoDart);
        std::fill(succ_.begin(), succ_.end(), kNoDart);
        allocated_ = 0;
        unpaired_ = 0;
        completed_ = 0;
        completed_deg_ = 0;
        trail_.clear();
        allocate();
    }

    void allocate() {
        for (std::uint32_t s = 0; s < 4; ++s) {
            DartId d = make_dart(allocated_, s);
            succ_[d] = kNoDart;
            head_[d] = d;
            tail_[d] = d;
            len_[d] = 1;
        }
        ++allocated_;
        unpaired_ += 4;
    }

    DartId first_unpaired() const {
        for (DartId d = 0; d < allocated_ * 4; ++d)
            if (pairing_[d] == kNoDart) return d;
        return kNoDart;
    }

    std::vector<DartId> candidates(DartId e) const {
        std::vector<DartId> fs;
        for (DartId f = e + 1; f < allocated_ * 4; ++f)
            if (pairing_[f] == kNoDart) fs.push_back(f);
        if (allocated_ < n_) fs.push_back(make_dart(allocated_, 0));
        return fs;
    }

    struct TrailEntry {
        DartId e, f;
        bool allocated;
        // two face links, each either a merge or a cycle
        struct Link {
            DartId a = kNoDart, b = kNoDart;
            DartId merged_head = kNoDart, merged_tail = kNoDart;
            std::uint32_t merged_len = 0;
            bool cycle = false;
            std::uint32_t cycle_len = 0;
        } links[2];
    };

    // Adds a face-successor link a -> b; returns false if a monogon or a
    // distinct-corner bigon closed.
    bool add_link(DartId a, DartId b, TrailEntry::Link& rec) {
        rec.a = a;
        rec.b = b;
        DartId hA = head_[a];
        if (hA == b) {
            rec.cycle = true;
            rec.cycle_len = len_[b];
            succ_[a] = b;
            ++completed_;
            completed_deg_ += len_[b];
            if (len_[b] == 1) return false;  // monogon
            if (len_[b] == 2 && owner(b) != owner(succ_[b])) return false;  // bigon
            return true;
        }
        DartId tB = tail_[b];
        rec.merged_head = hA;
        rec.merged_tail = tB;
        rec.merged_len = len_[b];
        head_[tB] = hA;
        tail_[hA] = tB;
        len_[hA] += len_[b];
        succ_[a] = b;
        return true;
    }

    void undo_link(const TrailEntry::Link& rec) {
        if (rec.a == kNoDart) return;
        succ_[rec.a] = kNoDart;
        if (rec.cycle) {
            --completed_;
            completed_deg_ -= rec.cycle_len;
        } else {
            head_[rec.merged_tail] = rec.b;
            tail_[rec.merged_head] = rec.a;
            len_[rec.merged_head] -= rec.merged_len;
        }
    }

    // Pairs e with f (f may be the slot-0 dart of the next crossing) and
    // updates face chains.  Returns false and rolls back when the branch is
    // pruned.
    bool apply(DartId e, DartId f) {
        TrailEntry t;
        t.e = e;
        t.f = f;
        t.allocated = false;
        if (owner(f) == allocated_) {
            if (slot(f) != 0 || allocated_ >= n_) return false;
            allocate();
            t.allocated = true;
        } else if (owner(f) > allocated_ || owner(e) >= allocated_) {
            return false;
        }
        if (pairing_[e] != kNoDart || pairing_[f] != kNoDart || e == f) {
            if (t.allocated) deallocate();
            return false;
        }
        pairing_[e] = f;
        pairing_[f] = e;
        unpaired_ -= 2;
        bool ok = add_link(e, rot_back(f), t.links[0]) && add_link(f, rot_back(e), t.links[1]);
        trail_.push_back(t);
        if (ok) ok = feasible();
        if (!ok) {
            undo();
            return false;
        }
        return true;
    }

    void deallocate() {
        --allocated_;
        unpaired_ -= 4;
    }

    void undo() {
        TrailEntry t = trail_.back();
        trail_.pop_back();
        undo_link(t.links[1]);
        undo_link(t.links[0]);
        pairing_[t.e] = kNoDart;
        pairing_[t.f] = kNoDart;
        unpaired_ += 2;
        if (t.allocated) deallocate();
    }

    bool feasible() const {
        if (!face_target_) return true;
        const int target = *face_target_;
        const int c = static_cast<int>(completed_);
        const bool more_faces = unpaired_ > 0 || allocated_ < n_;
        if (c > target) return false;
        if (c == target && more_faces) return false;
        const int open_sides = static_cast<int>(4 * n_) - static_cast<int>(completed_deg_);
        const int by_sides = open_sides / 3;
        const int by_chains =
            static_cast<int>(unpaired_) + 4 * static_cast<int>(n_ - allocated_);
        if (c + std::min(by_sides, by_chains) < target) return false;
        return true;
    }

    template <typename Emit, typename Poll>
    bool dfs(const Emit& emit, const std::atomic<bool>& stop, std::uint64_t& nodes,
             const Poll& poll) {
        if ((++nodes & 0xfff) == 0) {
            poll(nodes);
            if (stop.load(std::memory_order_relaxed)) return false;
        }
        DartId e = first_unpaired();
        if (e == kNoDart) {
            if (allocated_ == n_) harvest(emit);
            return true;
        }
        for (DartId f : candidates(e)) {
            if (!apply(e, f)) continue;
            bool ok = dfs(emit, stop, nodes, poll);
            undo();
            if (!ok) return false;
        }
        return true;
    }

    template <typename Emit>
    void harvest(const Emit& emit) {
        // Isomorph rejection: the generated pairing is its own code from
        // seed 0; accept only the minimum over all seeds.
        std::vector<std::uint16_t> ref(pairing_.begin(), pairing_.end());
        for (DartId seed = 1; seed < n_ * 4; ++seed)
            if (comparer_.compare_from(seed, ref.data(), ref.size()) < 0) return;

        auto m = DoodleMap::from_pairing(n_, std::vector<DartId>(pairing_));
        auto [faces, fv] = face_trace(m);
        if (filters_.genus && fv.total_genus != *filters_.genus) return;
        if (filters_.components &&
            static_cast<std::uint32_t>(m.components().size()) != *filters_.components)
            return;
        if (filters_.face_vector) {
            std::map<std::size_t, std::uint32_t> got(fv.face_counts.begin(),
                                                     fv.face_counts.end());
            if (got != *filters_.face_vector) return;
        }
        CensusRecord r;
        r.code = canonical_code(m, kUnorientedUnordered).hex();
        r.crossings = n_;
        r.genus = fv.total_genus;
        r.components = static_cast<std::uint32_t>(m.components().size());
        r.trivial_circles = 0;
        for (auto [deg, count] : fv.face_counts) r.face_vector.emplace_back(deg, count);
        for (const auto& f : faces)
            if (f.degree() == 2 && owner(f.darts[0]) == owner(f.darts[1]))
                r.repeated_corner_bigon = true;
        r.fundamental = is_fundamental(m);
        r.pairing = pairing_;
        emit(std::move(r));
    }

    std::uint32_t n_;
    CensusFilters filters_;
    std::optional<int> face_target_;
    std::vector<DartId> pairing_;
    std::vector<DartId> succ_;
    std::vector<DartId> head_;  // valid at chain tails
    std::vector<DartId> tail_;  // valid at chain heads
    std::vector<std::uint32_t> len_;  // valid at chain heads
    std::uint32_t allocated_ = 0;
    std::uint32_t unpaired_ = 0;
    std::uint32_t completed_ = 0;
    std::uint64_t completed_deg_ = 0;
    std::vector<TrailEntry> trail_;
    BfsCodeComparer comparer_;
};

}  // namespace detail

// Exhaustive census of connected minimal diagrams with n crossings, one
// record per unoriented-unordered canonical class, sorted by code.
inline CensusResult census(std::uint32_t n, const CensusFilters& filters = {},
                           const CensusBudget& budget = {}, unsigned workers = 1,
                           const CensusResumption* resume = nullptr) {
    if (n < 1) throw Error("census: n >= 1 required");
    const CensusFilters& active = resume ? resume->filters : filters;
    CensusResult result;
    std::vector<CensusRecord> serial;
    using Prefix = std::vector<std::pair<std::uint16_t, std::uint16_t>>;
    std::vector<Prefix> tasks;

    if (resume) {
        tasks = resume->pending;
        serial = resume->done;
    } else {
        // Deterministic frontier expansion to a worker-friendly width.
        detail::CensusSearcher expander(n, active);
        std::vector<Prefix> frontier{{}};
        const std::size_t want = std::max<std::size_t>(32, static_cast<std::size_t>(workers) * 16);
        std::size_t depth = 0;
        const std::size_t max_depth = n;  // enough decisions to fan out
        while (frontier.size() < want && depth < max_depth) {
            std::vector<Prefix> next;
            for (const auto& p : frontier) {
                auto kids = expander.children(
                    p, [&](CensusRecord&& r) { serial.push_back(std::move(r)); });
                for (auto [e, f] : kids) {
                    Prefix q = p;
                    q.emplace_back(e, f);
                    next.push_back(std::move(q));
                }
            }
            frontier = std::move(next);
            ++depth;
            if (frontier.empty()) break;
        }
        tasks = std::move(frontier);
    }

    std::atomic<bool> stop{false};
    std::atomic<std::size_t> cursor{0};
    std::atomic<std::uint64_t> total_nodes{0};
    std::vector<std::vector<CensusRecord>> bucket(tasks.size());
    std::vector<std::atomic<bool>> done(tasks.size());
    for (auto& d : done) d.store(false);

    const auto deadline = budget.seconds
                              ? std::optional(std::chrono::steady_clock::now() +
                                              std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                  std::chrono::duration<double>(*budget.seconds)))
                              : std::nullopt;

    auto work = [&]() {
        detail::CensusSearcher searcher(n, active);
        std::uint64_t nodes = 0;
        auto poll = [&](std::uint64_t local_nodes) {
            if (deadline && std::chrono::steady_clock::now() >= *deadline) stop.store(true);
            if (budget.max_nodes &&
                total_nodes.load(std::memory_order_relaxed) + local_nodes > *budget.max_nodes)
                stop.store(true);
        };
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) break;
            std::vector<CensusRecord> here;
            bool ok = searcher.run(
                tasks[i], [&](CensusRecord&& r) { here.push_back(std::move(r)); }, stop, nodes,
                poll);
            if (ok) {
                bucket[i] = std::move(here);
                done[i].store(true);
            }
            poll(nodes);
            if (stop.load()) break;
        }
        total_nodes.fetch_add(nodes);
    };

    workers = std::max(1u, workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    result.nodes = total_nodes.load();

    result.records = std::move(serial);
    std::vector<Prefix> pending;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (done[i].load()) {
            for (auto& r : bucket[i]) result.records.push_back(std::move(r));
        } else {
            pending.push_back(tasks[i]);
        }
    }
    std::sort(result.records.begin(), result.records.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.code < b.code; });
    if (!pending.empty()) {
        result.complete = false;
        CensusResumption res;
        res.n = n;
        res.filters = filters;
        res.pending = std::move(pending);
        res.done = result.records;
        result.resumption = std::move(res);
    }
    return result;
}

inline CensusResult census_resume(const CensusResumption& state, const CensusBudget& budget = {},
                                  unsigned workers = 1) {
    return census(state.n, state.filters, budget, workers, &state);
}

// Brute-force census over all fixed-point-free pairings with post-hoc
// canonical dedupe; the correctness oracle for small n.
inline std::vector<CensusRecord> naive_census(std::uint32_t n, const CensusFilters& filters = {}) {
    std::vector<CensusRecord> out;
    std::vector<std::string> seen;
    std::vector<DartId> pairing(static_cast<std::size_t>(n) * 4, kNoDart);

    auto leaf = [&]() {
        auto m = DoodleMap::from_pairing(n, std::vector<DartId>(pairing));
        if (!is_connected(m)) return;
        if (!find_sites(m).empty()) return;
        auto [faces, fv] = face_trace(m);
        if (filters.genus && fv.total_genus != *filters.genus) return;
        if (filters.components &&
            static_cast<std::uint32_t>(m.components().size()) != *filters.components)
            return;
        auto code = canonical_code(m, kUnorientedUnordered).hex();
        for (const auto& s : seen)
            if (s == code) return;
        seen.push_back(code);
        CensusRecord r;
        r.code = code;
        r.crossings = n;
        r.genus = fv.total_genus;
        r.components = static_cast<std::uint32_t>(m.components().size());
        for (auto [deg, count] : fv.face_counts) r.face_vector.emplace_back(deg, count);
        r.fundamental = is_fundamental(m);
        r.pairing = pairing;
        out.push_back(std::move(r));
    };

    std::function<void()> rec = [&]() {
        DartId e = kNoDart;
        for (DartId d = 0; d < pairing.size(); ++d)
            if (pairing[d] == kNoDart) {
                e = d;
                break;
            }
        if (e == kNoDart) {
            leaf();
            return;
        }
        for (DartId f = e + 1; f < pairing.size(); ++f) {
            if (pairing[f] != kNoDart) continue;
            pairing[e] = f;
            pairing[f] = e;
            rec();
            pairing[e] = kNoDart;
            pairing[f] = kNoDart;
        }
    };
    rec();
    std::sort(out.begin(), out.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.code < b.code; });
    return out;
}

// ---------------------------------------------------------------------------
// Census store: JSON lines, idempotent append keyed by canonical code.

struct CensusQuery {
    std::optional<std::uint32_t> crossings;
    CensusFilters filters;
};

inline std::vector<CensusRecord> store_load(const std::string& path) {
    std::ifstream in(path);
    std::vector<CensusRecord> records;
    if (!in) return records;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            records.push_back(detail::record_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw ParseError("census store line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return records;
}

// Appends records not already present (by code), keeping the file sorted
// within each append batch.  Returns the number of new records.
inline std::size_t store_append(const std::vector<CensusRecord>& records,
                                const std::string& path) {
    auto existing = store_load(path);
    std::vector<std::string> have;
    for (const auto& r : existing) have.push_back(r.code);
    std::vector<CensusRecord> fresh;
    for (const auto& r : records) {
        bool dup = false;
        for (const auto& h : have) dup |= h == r.code;
        for (const auto& f : fresh) dup |= f.code == r.code;
        if (!dup) fresh.push_back(r);
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const CensusRecord& a, const CensusRecord& b) { return a.code < b.code; });
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error("store_append: cannot open '" + path + "'");
    for (const auto& r : fresh) out << detail::record_to_json(r).dump() << "\n";
    return fresh.size();
}

inline std::vector<CensusRecord> store_query(const CensusQuery& q, const std::string& path) {
    std::vector<CensusRecord> out;
    for (const auto& r : store_load(path)) {
        if (q.crossings && r.crossings != *q.crossings) continue;
        if (q.filters.genus && r.genus != *q.filters.genus) continue;
        if (q.filters.components && r.components != *q.filters.components) continue;
        if (q.filters.face_vector) {
            std::map<std::size_t, std::uint32_t> got(r.face_vector.begin(), r.face_vector.end());
            if (got != *q.filters.face_vector) continue;
        }
        out.push_back(r);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Resumption (de)serialization.

inline std::string resumption_to_json(const CensusResumption& r) {
    nlohmann::ordered_json j;
    j["schema"] = "doodle-census-resumption";
    j["version"] = kCensusSchemaVersion;
    j["n"] = r.n;
    nlohmann::ordered_json f;
    if (r.filters.genus) f["genus"] = *r.filters.genus;
    if (r.filters.components) f["components"] = *r.filters.components;
    if (r.filters.face_vector) {
        auto fv = nlohmann::ordered_json::array();
        for (auto [deg, count] : *r.filters.face_vector) fv.push_back({deg, count});
        f["face_vector"] = fv;
    }
    j["filters"] = f;
    auto pending = nlohmann::ordered_json::array();
    for (const auto& p : r.pending) {
        auto one = nlohmann::ordered_json::array();
        for (auto [e, fd] : p) one.push_back({e, fd});
        pending.push_back(one);
    }
    j["pending"] = pending;
    auto done = nlohmann::ordered_json::array();
    for (const auto& rec : r.done) done.push_back(detail::record_to_json(rec));
    j["done"] = done;
    return j.dump();
}

inline CensusResumption resumption_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("resumption: ") + e.what());
    }
    if (j.value("schema", "") != "doodle-census-resumption")
        throw ParseError("resumption: schema mismatch");
    CensusResumption r;
    r.n = j.at("n").get<std::uint32_t>();
    const auto& f = j.at("filters");
    if (f.contains("genus")) r.filters.genus = f["genus"].get<int>();
    if (f.contains("components")) r.filters.components = f["components"].get<std::uint32_t>();
    if (f.contains("face_vector")) {
        std::map<std::size_t, std::uint32_t> fv;
        for (const auto& e : f["face_vector"])
            fv[e.at(0).get<std::size_t>()] = e.at(1).get<std::uint32_t>();
        r.filters.face_vector = fv;
    }
    for (const auto& p : j.at("pending")) {
        std::vector<std::pair<std::uint16_t, std::uint16_t>> one;
        for (const auto& e : p)
            one.emplace_back(e.at(0).get<std::uint16_t>(), e.at(1).get<std::uint16_t>());
        r.pending.push_back(std::move(one));
    }
    for (const auto& rec : j.at("done")) r.done.push_back(detail::record_from_json(rec));
    return r;
}

}  // namespace doodle
