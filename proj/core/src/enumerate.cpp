#include "propchoose/enumerate.hpp"

#include <algorithm>
#include <string>

#include "propchoose/errors.hpp"

namespace propchoose {

namespace {

// Depth-first generation of support multisets in increasing mask order with
// orbit rejection: a prefix is cut as soon as some automorphism maps it to a
// lexicographically smaller multiset, which no completion can undo (later
// entries carry strictly larger masks, so the original side is frozen up to
// the difference position while the image side can only get smaller).
//
// Per group element we keep an incremental comparison status against the
// current prefix: either the permuted image is still equal, or it is greater
// with the first difference at position j and image mask vj there. A push
// only needs a full recomparison when the new image mask lands at or before
// the difference position.
class Enumerator {
public:
    Enumerator(const Graph& g, int k, const std::function<bool(const SupportMultiset&)>& cb)
        : n_(g.vertex_count()), k_(k), cb_(cb) {
        VertexSet full = g.all_vertices();
        for (const auto& perm : g.automorphism_group()) {
            bool identity = true;
            for (int v = 0; v < n_; v++)
                if (perm[v] != v) identity = false;
            if (identity) continue;
            std::vector<std::uint32_t> tab(full + 1);
            for (VertexSet m = 0; m <= full; m++) {
                VertexSet image = 0;
                for (int v = 0; v < n_; v++)
                    if (set_contains(m, v)) image |= set_of(perm[v]);
                tab[m] = static_cast<std::uint32_t>(image);
            }
            tables_.push_back(std::move(tab));
        }
        degs_.assign(n_, k);
        int max_depth = n_ * k + 2;
        stats_.assign(static_cast<std::size_t>(max_depth) * tables_.size(), Stat{0, kEqual, 0, 0});
    }

    std::uint64_t run() {
        if (n_ * k_ + 2 > kMaxEntries)
            throw ResourceLimitError("enumeration: instance too large for entry buffers");
        stopped_ = false;
        emitted_ = 0;
        dfs(1, 1);
        return emitted_;
    }

private:
    struct Stat {
        std::int32_t j;
        std::int32_t dir; // kEqual or kGreater
        std::uint32_t vj;
        std::uint32_t vmax;
    };
    static constexpr std::int32_t kEqual = 0;
    static constexpr std::int32_t kGreater = 1;
    static constexpr int kMaxEntries = 640;

    // Full recomparison of sorted image vs prefix. Returns true when the
    // image is strictly smaller (prune); otherwise fills st.
    bool image_smaller(const std::vector<std::uint32_t>& tab, Stat& st) {
        std::size_t sz = cur_.size();
        std::uint32_t buf[kMaxEntries];
        int mult[kMaxEntries];
        std::uint32_t vmax = 0;
        for (std::size_t i = 0; i < sz; i++) {
            buf[i] = tab[cur_[i].first];
            mult[i] = cur_[i].second;
            vmax = std::max(vmax, buf[i]);
        }
        std::size_t remaining = sz;
        for (std::size_t pos = 0; pos < sz; pos++) {
            std::size_t mi = 0;
            for (std::size_t i = 1; i < remaining; i++)
                if (buf[i] < buf[mi]) mi = i;
            std::uint32_t m = buf[mi];
            int mu = mult[mi];
            std::uint32_t pm = static_cast<std::uint32_t>(cur_[pos].first);
            int pu = cur_[pos].second;
            if (m < pm || (m == pm && mu < pu)) return true;
            if (m > pm || (m == pm && mu > pu)) {
                st = Stat{static_cast<std::int32_t>(pos), kGreater, m, vmax};
                return false;
            }
            buf[mi] = buf[remaining - 1];
            mult[mi] = mult[remaining - 1];
            remaining--;
        }
        st = Stat{static_cast<std::int32_t>(sz), kEqual, 0, vmax};
        return false;
    }

    // Updates all statuses for the just-pushed entry; false means prune.
    bool push_ok(int depth) {
        if (tables_.empty()) return true;
        const Stat* prev = &stats_[static_cast<std::size_t>(depth - 1) * tables_.size()];
        Stat* curst = &stats_[static_cast<std::size_t>(depth) * tables_.size()];
        std::uint32_t emask = static_cast<std::uint32_t>(cur_.back().first);
        std::size_t sz = cur_.size();
        for (std::size_t s = 0; s < tables_.size(); s++) {
            const Stat& p = prev[s];
            Stat& c = curst[s];
            std::uint32_t ie = tables_[s][emask];
            if (p.dir == kGreater) {
                if (ie >= p.vj) {
                    c = p;
                    c.vmax = std::max(c.vmax, ie);
                    continue;
                }
                if (image_smaller(tables_[s], c)) return false;
            } else {
                if (ie > p.vmax) {
                    // appended at the end on both sides; multiplicities match
                    if (ie < emask) return false;
                    if (ie > emask)
                        c = Stat{static_cast<std::int32_t>(sz - 1), kGreater, ie, ie};
                    else
                        c = Stat{static_cast<std::int32_t>(sz), kEqual, 0, ie};
                    continue;
                }
                if (image_smaller(tables_[s], c)) return false;
            }
        }
        return true;
    }

    void emit() {
        scratch_.entries.assign(cur_.begin(), cur_.end());
        emitted_++;
        if (!cb_(scratch_)) stopped_ = true;
    }

    void dfs(VertexSet mask, int depth) {
        if (stopped_) return;
        bool alldone = true;
        for (int v = 0; v < n_; v++)
            if (degs_[v]) {
                alldone = false;
                break;
            }
        if (alldone) {
            emit();
            return;
        }
        VertexSet full = (n_ == 64) ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
        if (mask > full) return;
        dfs(mask + 1, depth);
        if (stopped_) return;
        int mx = k_;
        for (int v = 0; v < n_; v++)
            if (set_contains(mask, v)) mx = std::min(mx, degs_[v]);
        for (int m = 1; m <= mx && !stopped_; m++) {
            for (int v = 0; v < n_; v++)
                if (set_contains(mask, v)) degs_[v]--;
            cur_.push_back({mask, m});
            if (push_ok(depth)) dfs(mask + 1, depth + 1);
            cur_.pop_back();
        }
        for (int v = 0; v < n_; v++)
            if (set_contains(mask, v)) degs_[v] += mx;
    }

    int n_;
    int k_;
    const std::function<bool(const SupportMultiset&)>& cb_;
    std::vector<std::vector<std::uint32_t>> tables_;
    std::vector<Stat> stats_;
    std::vector<int> degs_;
    std::vector<std::pair<VertexSet, int>> cur_;
    SupportMultiset scratch_;
    bool stopped_ = false;
    std::uint64_t emitted_ = 0;
};

} // namespace

std::uint64_t enumerate_support_multisets(const Graph& g, int k,
                                          const std::function<bool(const SupportMultiset&)>& cb,
                                          const EnumLimits& limits) {
    if (k < 1) throw std::invalid_argument("enumerate_support_multisets: k must be >= 1");
    if (!limits.override_guard &&
        (g.vertex_count() > limits.max_vertices || k > limits.max_k)) {
        throw ResourceLimitError("enumeration guard exceeded: " +
                                 std::to_string(g.vertex_count()) + " vertices, k=" +
                                 std::to_string(k) + " (limit " +
                                 std::to_string(limits.max_vertices) + " vertices, k<=" +
                                 std::to_string(limits.max_k) + "); override to proceed");
    }
    Enumerator e(g, k, cb);
    return e.run();
}

std::uint64_t enumerate_assignments(const Graph& g, int k,
                                    const std::function<bool(const ListAssignment&)>& cb,
                                    const EnumLimits& limits) {
    int n = g.vertex_count();
    return enumerate_support_multisets(
        g, k, [&](const SupportMultiset& m) { return cb(materialize(m, n)); }, limits);
}

} // namespace propchoose
