#include "adq/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "adq/errors.hpp"
#include "combinations.hpp"

namespace adq {

namespace {

constexpr std::uint64_t kEvenBits = 0x5555555555555555ull;

struct Obj {
    std::uint64_t g[2];
    std::size_t rank;
};

Obj to_obj(const CodeObject& o) {
    Obj w{{0, 0}, o.rank()};
    for (std::size_t i = 0; i < o.rank(); ++i) w.g[i] = o.gen(i).word0();
    return w;
}

// General position of the candidate against a reduced basis of a subset that
// is itself in general position.
bool gp_against(const WordBasis& basis, const Obj& c) {
    std::uint64_t r1 = basis.reduce(c.g[0]);
    if (c.rank >= 1 && !r1) return false;
    if (c.rank < 2) return true;
    std::uint64_t r2 = basis.reduce(c.g[1]);
    if (!r2) return false;
    // One extra elimination step against r1; both are reduced w.r.t. basis.
    const std::uint64_t lead = std::uint64_t(1) << (63 - std::countl_zero(r1));
    if (r2 & lead) r2 ^= r1;
    return r2 != 0;
}

// Reduced bases of all subsets of `fam` of the given size, each joined with
// the objects listed in `extra`.
std::vector<WordBasis> subset_bases(const std::vector<Obj>& fam, std::size_t subset_size,
                                    const std::vector<Obj>& extra) {
    std::vector<WordBasis> bases;
    if (subset_size > fam.size()) return bases;
    auto add_obj = [](WordBasis& b, const Obj& o) {
        for (std::size_t i = 0; i < o.rank; ++i) b.insert(o.g[i]);
    };
    if (subset_size == 0) {
        WordBasis b;
        for (const auto& e : extra) add_obj(b, e);
        bases.push_back(b);
        return bases;
    }
    auto subset = detail::first_combination(subset_size);
    do {
        WordBasis b;
        for (auto i : subset) add_obj(b, fam[i]);
        for (const auto& e : extra) add_obj(b, e);
        bases.push_back(b);
    } while (detail::next_combination(subset, fam.size()));
    return bases;
}

bool strength_at_least(const std::vector<Obj>& fam, std::size_t t) {
    const std::size_t u = std::min(t, fam.size());
    if (u == 0) return true;
    auto subset = detail::first_combination(u);
    do {
        WordBasis b;
        std::size_t rank_sum = 0;
        for (auto i : subset) {
            rank_sum += fam[i].rank;
            for (std::size_t g = 0; g < fam[i].rank; ++g) b.insert(fam[i].g[g]);
        }
        if (b.dim() != rank_sum) return false;
    } while (detail::next_combination(subset, fam.size()));
    return true;
}

class CompletionEngine {
  public:
    CompletionEngine(const CompletionProblem& p, SearchMode mode, unsigned workers,
                     const ProgressFn& progress)
        : problem_(p), mode_(mode), workers_(std::max(1u, workers)), progress_(progress) {
        if (p.base.ambient > 64) throw limit_error("completion search supports ambient <= 64");
        t_ = p.min_strength;
        for (const auto& o : p.base.objects) fam0_.push_back(to_obj(o));
        if (!strength_at_least(fam0_, t_))
            throw std::invalid_argument("completion base violates the strength constraint");
        if (p.target_count < p.base.size())
            throw std::invalid_argument("target_count below base size");

        if (p.candidate_pool.empty()) {
            pool_objs_ = enumerate_lines(p.base.ambient);
        } else {
            pool_objs_ = p.candidate_pool;
        }
        pool_.reserve(pool_objs_.size());
        for (const auto& o : pool_objs_) pool_.push_back(to_obj(o));
    }

    CompletionReport run() {
        const auto start = std::chrono::steady_clock::now();
        CompletionReport report;

        if (problem_.target_count == problem_.base.size()) {
            // Already complete; the base itself is the unique solution.
            report.solution_count = 1;
            if (mode_ == SearchMode::Collect) report.solutions.push_back(problem_.base);
            report.nodes_visited = 1;
            report.elapsed_seconds = seconds_since(start);
            return report;
        }

        // Root filtering against every (u-1)-subset of the base.
        std::vector<std::uint32_t> root_list = filter_full(fam0_, all_indices());

        if (progress_)
            progress_("pool " + std::to_string(pool_.size()) + ", compatible with base: " +
                      std::to_string(root_list.size()));

        std::atomic<std::uint64_t> next{0};
        std::atomic<std::uint64_t> count{0};
        std::atomic<std::uint64_t> nodes{root_list.empty() ? 0ull : 1ull};
        std::atomic<bool> stop{false};
        std::mutex sol_mutex;
        std::vector<ObjectFamily> solutions;

        auto worker = [&]() {
            std::vector<Obj> fam = fam0_;
            std::vector<std::size_t> added;
            std::uint64_t local_nodes = 0;
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= root_list.size() || stop.load()) break;
                descend(fam, added, root_list, i, count, solutions, sol_mutex, stop, local_nodes);
                if (progress_ && (i % 1024 == 0))
                    progress_("root " + std::to_string(i) + "/" +
                              std::to_string(root_list.size()) + ", solutions " +
                              std::to_string(count.load()));
            }
            nodes.fetch_add(local_nodes);
        };

        if (workers_ == 1) {
            worker();
        } else {
            std::vector<std::thread> threads;
            for (unsigned w = 0; w < workers_; ++w) threads.emplace_back(worker);
            for (auto& th : threads) th.join();
        }

        report.solution_count = count.load();
        report.nodes_visited = nodes.load();
        if (mode_ == SearchMode::Collect) {
            std::sort(solutions.begin(), solutions.end(),
                      [](const ObjectFamily& a, const ObjectFamily& b) {
                          return std::lexicographical_compare(a.objects.begin(), a.objects.end(),
                                                              b.objects.begin(), b.objects.end());
                      });
            report.solutions = std::move(solutions);
        }
        report.elapsed_seconds = seconds_since(start);
        return report;
    }

  private:
    static double seconds_since(std::chrono::steady_clock::time_point start) {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    std::vector<std::uint32_t> all_indices() const {
        std::vector<std::uint32_t> idx(pool_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = std::uint32_t(i);
        return idx;
    }

    // Candidates compatible with every (u-1)-subset of fam, u = min(t, |fam|+1).
    std::vector<std::uint32_t> filter_full(const std::vector<Obj>& fam,
                                           const std::vector<std::uint32_t>& candidates) const {
        const std::size_t u = std::min(t_, fam.size() + 1);
        if (u == 0) return candidates;
        const auto bases = subset_bases(fam, u - 1, {});
        std::vector<std::uint32_t> out;
        out.reserve(candidates.size());
        for (auto idx : candidates) {
            bool ok = true;
            for (const auto& b : bases)
                if (!gp_against(b, pool_[idx])) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(idx);
        }
        return out;
    }

    void record_solution(const std::vector<Obj>&, const std::vector<std::size_t>& added,
                         std::atomic<std::uint64_t>& count, std::vector<ObjectFamily>& solutions,
                         std::mutex& sol_mutex, std::atomic<bool>& stop) {
        count.fetch_add(1);
        if (mode_ == SearchMode::Exists) stop.store(true);
        if (mode_ == SearchMode::Collect) {
            ObjectFamily fam = problem_.base;
            for (auto idx : added) fam.objects.push_back(pool_objs_[idx]);
            std::lock_guard<std::mutex> lock(sol_mutex);
            solutions.push_back(std::move(fam));
        }
    }

    // Takes candidate list entry `pos` and explores the subtree below it.
    void descend(std::vector<Obj>& fam, std::vector<std::size_t>& added,
                 const std::vector<std::uint32_t>& list, std::size_t pos,
                 std::atomic<std::uint64_t>& count, std::vector<ObjectFamily>& solutions,
                 std::mutex& sol_mutex, std::atomic<bool>& stop, std::uint64_t& nodes) {
        if (stop.load(std::memory_order_relaxed)) return;
        ++nodes;
        const std::uint32_t idx = list[pos];
        fam.push_back(pool_[idx]);
        added.push_back(idx);

        if (fam.size() == problem_.target_count) {
            record_solution(fam, added, count, solutions, sol_mutex, stop);
        } else {
            std::vector<std::uint32_t> tail(list.begin() + pos, list.end());
            std::vector<std::uint32_t> child;
            if (fam.size() + 1 > t_) {
                // Incremental: only subsets through the newest object are new.
                const Obj& newest = fam.back();
                std::vector<Obj> prior(fam.begin(), fam.end() - 1);
                const auto bases = subset_bases(prior, t_ >= 2 ? t_ - 2 : 0, {newest});
                child.reserve(tail.size());
                for (auto cidx : tail) {
                    bool ok = true;
                    for (const auto& b : bases)
                        if (!gp_against(b, pool_[cidx])) {
                            ok = false;
                            break;
                        }
                    if (ok) child.push_back(cidx);
                }
            } else {
                child = filter_full(fam, tail);
            }
            for (std::size_t p = 0; p < child.size(); ++p)
                descend(fam, added, child, p, count, solutions, sol_mutex, stop, nodes);
        }

        fam.pop_back();
        added.pop_back();
    }

    const CompletionProblem& problem_;
    SearchMode mode_;
    unsigned workers_;
    ProgressFn progress_;
    std::size_t t_ = 0;
    std::vector<Obj> fam0_;
    std::vector<CodeObject> pool_objs_;
    std::vector<Obj> pool_;
};

}  // namespace

CompletionReport complete_family(const CompletionProblem& p, SearchMode mode, unsigned workers,
                                 const ProgressFn& progress) {
    CompletionEngine engine(p, mode, workers, progress);
    return engine.run();
}

namespace {

struct CoverLine {
    std::uint64_t pts[3];
};

}  // namespace

CoverageReport coverage_search(const CoverageProblem& p, SearchMode mode) {
    const auto start = std::chrono::steady_clock::now();
    if (p.ambient > 24) throw limit_error("coverage search supports ambient <= 24");
    const std::size_t npts = (std::size_t(1) << p.ambient);

    // required[v] = exact multiplicity for point v, or -1 if unconstrained.
    std::vector<int> rem(npts, -1);
    for (const auto& [pt, mult] : p.required_multiplicity) {
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        rem[pt.word0()] = mult;
    }
    for (const auto& pt : p.forbidden_points) rem[pt.word0()] = 0;

    CoverageReport report;
    auto finish = [&]() {
        report.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    };

    // Pool of candidate lines (excluding lines through exhausted points).
    const auto all_lines = enumerate_lines(p.ambient);
    std::vector<CoverLine> lines;
    std::vector<const CodeObject*> line_objs;
    for (const auto& l : all_lines) {
        auto pts = l.points();
        CoverLine cl{{pts[0].word0(), pts[1].word0(), pts[2].word0()}};
        lines.push_back(cl);
        line_objs.push_back(&l);
    }

    long long sum_rem = 0;
    for (std::size_t v = 1; v < npts; ++v)
        if (rem[v] > 0) sum_rem += rem[v];

    // Apply the fixed lines first.
    std::vector<CodeObject> chosen;
    std::size_t used = 0;
    for (const auto& f : p.fixed) {
        if (f.rank() != 2) throw std::invalid_argument("fixed objects must be lines");
        auto pts = f.points();
        for (const auto& q : pts) {
            const std::uint64_t v = q.word0();
            if (rem[v] == 0) return finish();  // infeasible, zero solutions
            if (rem[v] > 0) {
                --rem[v];
                --sum_rem;
            }
        }
        chosen.push_back(f);
        ++used;
    }
    if (used > p.total_lines) return finish();

    std::uint64_t nodes = 0;

    // Branch on the smallest-index point with unmet multiplicity; lines for a
    // given point are taken in non-decreasing index order so every multiset
    // is produced exactly once.
    std::vector<std::vector<std::uint32_t>> through(npts);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (auto v : lines[i].pts) through[v].push_back(std::uint32_t(i));

    auto usable = [&](std::uint32_t li) {
        for (auto v : lines[li].pts)
            if (rem[v] == 0) return false;
        return true;
    };

    std::function<void(std::uint64_t, std::uint32_t)> solve = [&](std::uint64_t prev_point,
                                                                  std::uint32_t min_idx) {
        ++nodes;
        if (mode == SearchMode::Exists && report.solution_count > 0) return;
        const std::size_t left = p.total_lines - used;
        if (sum_rem > 3 * (long long)left) return;
        if (used == p.total_lines) {
            if (sum_rem == 0) {
                ++report.solution_count;
                if (mode == SearchMode::Collect) {
                    auto sol = chosen;
                    std::sort(sol.begin(), sol.end());
                    report.solutions.push_back(std::move(sol));
                }
            }
            return;
        }

        std::uint64_t point = 0;
        for (std::size_t v = 1; v < npts; ++v)
            if (rem[v] > 0) {
                point = v;
                break;
            }

        auto take = [&](std::uint32_t li) {
            for (auto v : lines[li].pts)
                if (rem[v] > 0) {
                    --rem[v];
                    --sum_rem;
                }
            chosen.push_back(*line_objs[li]);
            ++used;
        };
        auto untake = [&](std::uint32_t li) {
            for (auto v : lines[li].pts)
                if (rem[v] >= 0) {
                    ++rem[v];
                    ++sum_rem;
                }
            chosen.pop_back();
            --used;
        };

        if (point == 0) {
            // All exact constraints met; pad with lines avoiding constrained
            // points, in non-decreasing index order.
            for (std::uint32_t li = min_idx; li < lines.size(); ++li) {
                bool free_line = true;
                for (auto v : lines[li].pts)
                    if (rem[v] != -1) {
                        free_line = false;
                        break;
                    }
                if (!free_line) continue;
                take(li);
                solve(0, li);
                untake(li);
            }
            return;
        }

        const std::uint32_t lo = (point == prev_point) ? min_idx : 0;
        for (auto li : through[point]) {
            if (li < lo) continue;
            if (!usable(li)) continue;
            take(li);
            solve(point, li);
            untake(li);
        }
    };

    solve(0, 0);
    report.nodes_visited = nodes;
    if (mode == SearchMode::Collect) {
        std::sort(report.solutions.begin(), report.solutions.end(),
                  [](const std::vector<CodeObject>& a, const std::vector<CodeObject>& b) {
                      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                  });
    }
    return finish();
}

namespace {

std::uint64_t mul_omega_word(std::uint64_t w) {
    const std::uint64_t a = w & kEvenBits;
    const std::uint64_t b = (w >> 1) & kEvenBits;
    return (a ^ b) | (a << 1);
}

std::uint64_t scale_word(F4Elem s, std::uint64_t w) {
    switch (s.value()) {
        case 0: return 0;
        case 1: return w;
        case 2: return mul_omega_word(w);
        default: return mul_omega_word(mul_omega_word(w));
    }
}

std::uint64_t pack_f4(const F4Vector& v, std::size_t offset_symbols) {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const std::size_t bit = 2 * (offset_symbols + j);
        if (v[j].hi_bit()) w |= std::uint64_t(1) << bit;
        if (v[j].lo_bit()) w |= std::uint64_t(1) << (bit + 1);
    }
    return w;
}

}  // namespace

F4CompletionReport f4_systematic_completion(const F4CompletionProblem& p, SearchMode mode) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t k = p.total_rows;
    if (p.fixed_rows.empty() && k == 0) throw std::invalid_argument("empty problem");
    const std::size_t width = p.fixed_rows.empty() ? k : p.fixed_rows[0].size();
    const std::size_t n = k + width;  // code length of (I | P)
    if (2 * n > 64) throw limit_error("f4 completion supports length <= 32");
    if (p.fixed_rows.size() > k) throw std::invalid_argument("more fixed rows than total_rows");
    for (const auto& row : p.fixed_rows)
        if (row.size() != width) throw std::invalid_argument("ragged fixed rows");

    auto row_word = [&](std::size_t i, const F4Vector& v) {
        // (e_i | v): symbol 1 at position i, then v at offset k.
        return (std::uint64_t(1) << (2 * i + 1)) | pack_f4(v, k);
    };
    auto qw = [](std::uint64_t w) { return std::popcount((w | (w >> 1)) & kEvenBits); };

    // Codewords of the partial code, grown by a factor of 4 per added row.
    std::vector<std::uint64_t> words{0};
    auto extend = [&](std::uint64_t rw) {
        const std::size_t old = words.size();
        for (F4Elem lambda : {F4Elem::one(), F4Elem::omega(), F4Elem::omega_bar()}) {
            const std::uint64_t lw = scale_word(lambda, rw);
            for (std::size_t i = 0; i < old; ++i) words.push_back(words[i] ^ lw);
        }
    };
    auto candidate_ok = [&](std::uint64_t rw) {
        for (F4Elem lambda : {F4Elem::one(), F4Elem::omega(), F4Elem::omega_bar()}) {
            const std::uint64_t lw = scale_word(lambda, rw);
            for (auto c : words)
                if (qw(c ^ lw) < p.min_distance) return false;
        }
        return true;
    };

    if (!p.row_pattern.empty() && p.row_pattern.size() != 4)
        throw std::invalid_argument("row_pattern must list counts for the 4 symbols");

    F4CompletionReport report;

    // An inconsistent prefix admits no completion: its short words survive in
    // every extension.
    bool feasible = true;
    for (std::size_t i = 0; i < p.fixed_rows.size() && feasible; ++i) {
        const std::uint64_t rw = row_word(i, p.fixed_rows[i]);
        if (!candidate_ok(rw))
            feasible = false;
        else
            extend(rw);
    }
    if (!feasible) {
        report.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    auto pattern_ok = [&](const F4Vector& v) {
        if (p.row_pattern.empty()) return true;
        std::size_t freq[4] = {0, 0, 0, 0};
        for (std::size_t j = 0; j < v.size(); ++j) ++freq[v[j].value()];
        for (int s = 0; s < 4; ++s)
            if (freq[s] != p.row_pattern[s]) return false;
        return true;
    };
    std::uint64_t nodes = 0;
    std::vector<F4Vector> chosen;

    const std::uint64_t ncand = std::uint64_t(1) << (2 * width);
    std::function<void(std::size_t)> dfs = [&](std::size_t row) {
        if (mode == SearchMode::Exists && report.solution_count > 0) return;
        if (row == k) {
            ++report.solution_count;
            if (mode == SearchMode::Collect) {
                std::vector<F4Vector> sol = p.fixed_rows;
                for (const auto& v : chosen) sol.push_back(v);
                report.solutions.push_back(std::move(sol));
            }
            return;
        }
        for (std::uint64_t val = 0; val < ncand; ++val) {
            ++nodes;
            // Leftmost symbol is the most significant digit: lexicographic order.
            F4Vector v(width);
            for (std::size_t j = 0; j < width; ++j)
                v[j] = F4Elem(std::uint8_t((val >> (2 * (width - 1 - j))) & 3));
            if (!pattern_ok(v)) continue;
            const std::uint64_t rw = row_word(row, v);
            if (!candidate_ok(rw)) continue;
            extend(rw);
            chosen.push_back(v);
            dfs(row + 1);
            chosen.pop_back();
            words.resize(words.size() / 4);
        }
    };
    dfs(p.fixed_rows.size());

    report.nodes_visited = nodes;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace adq
