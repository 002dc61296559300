#include "pnhom/pipelines.hpp"

#include "pnhom/cubical.hpp"
#include "pnhom/homology.hpp"
#include "pnhom/mayer_vietoris.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace pnhom {

const char* to_string(PipelineVariant v) {
    switch (v) {
        case PipelineVariant::P: return "P";
        case PipelineVariant::N: return "N";
        case PipelineVariant::Nprime: return "Nprime";
    }
    return "?";
}

PipelineVariant pipeline_variant_from_string(const std::string& s) {
    if (s == "P") return PipelineVariant::P;
    if (s == "N") return PipelineVariant::N;
    if (s == "Nprime") return PipelineVariant::Nprime;
    throw Error("unknown pipeline variant '" + s + "' (expected P, N or Nprime)");
}

ElementaryNet make_pipeline(const PipelineSpec& spec) {
    return make_pipeline(spec.n, spec.variant);
}

ElementaryNet make_pipeline(std::size_t n, PipelineVariant variant) {
    if (n < 2) throw Error("pipeline requires n >= 2");
    std::vector<std::string> places;
    for (std::size_t i = 1; i < n; ++i) places.push_back("p" + std::to_string(i));
    std::vector<EventDef> events;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k == 1 && variant == PipelineVariant::N) continue;
        if (k == 2 && variant == PipelineVariant::Nprime) continue;
        EventDef def;
        def.name = "t" + std::to_string(k);
        if (k > 1) def.pre.push_back("p" + std::to_string(k - 1));
        if (k < n) def.post.push_back("p" + std::to_string(k));
        events.push_back(std::move(def));
    }
    return ElementaryNet(std::move(places), events, {});
}

bool VerificationReport::all_pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS" : "FAIL") << " " << c.name;
        if (!c.detail.empty()) os << " - " << c.detail;
        os << "\n";
    }
    os << (all_pass() ? "all checks passed" : std::to_string(failures()) + " check(s) failed")
       << " (" << checks.size() << " total)\n";
    return os.str();
}

namespace {

bool groups_are(const std::vector<HomologyGroup>& groups,
                const std::vector<std::size_t>& betti_prefix) {
    for (std::size_t k = 0; k < std::max(groups.size(), betti_prefix.size()); ++k) {
        HomologyGroup g = group_at(groups, k);
        std::size_t want = k < betti_prefix.size() ? betti_prefix[k] : 0;
        if (g.betti != want || !g.torsion.empty()) return false;
    }
    return true;
}

std::string describe(const std::vector<HomologyGroup>& groups) {
    std::string s;
    for (const auto& g : groups) {
        if (!s.empty()) s += ", ";
        s += "H_" + std::to_string(g.degree) + "=" + to_string(g);
    }
    return s;
}

// Set of state indices reachable from `from`, following edges forwards or
// backwards.
std::vector<char> reach(const StateSpace& sp, std::uint32_t from, bool forward) {
    std::vector<std::vector<std::uint32_t>> adj(sp.size());
    for (std::uint32_t i = 0; i < sp.size(); ++i)
        for (std::size_t e = 0; e < sp.net().event_count(); ++e)
            if (auto j = sp.step(i, e)) {
                if (forward)
                    adj[i].push_back(*j);
                else
                    adj[*j].push_back(i);
            }
    std::vector<char> seen(sp.size(), 0);
    std::deque<std::uint32_t> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
        std::uint32_t i = queue.front();
        queue.pop_front();
        for (std::uint32_t j : adj[i])
            if (!seen[j]) {
                seen[j] = 1;
                queue.push_back(j);
            }
    }
    return seen;
}

} // namespace

VerificationReport verify_theorems(std::size_t n_max, std::uint64_t max_states) {
    if (n_max < 2) throw Error("verification starts at n = 2");
    VerificationReport report;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    for (std::size_t n = 2; n <= n_max; ++n) {
        const std::string tag = "P_" + std::to_string(n);

        ElementaryNet full = make_pipeline(n, PipelineVariant::P);
        StateSpace reachable = explore(full, ExploreMode::reachable, max_states);
        StateSpace all = explore(full, ExploreMode::all_states, max_states);

        // The reachable set from the empty pipeline saturates the power set,
        // so both readings of the theorems coincide.
        add(tag + ": reachable set saturates all states",
            reachable.states() == all.states(),
            std::to_string(reachable.size()) + " states");

        auto space = std::make_shared<const StateSpace>(std::move(all));
        SemicubicalSet q = build_complex(space);

        add(tag + ": cube complex validates", validate(q).empty());

        auto groups = homology(boundary_matrices(q));
        add(tag + ": homology is Z, Z, 0, ...", groups_are(groups, {1, 1}), describe(groups));

        for (int eps = 0; eps <= 1; ++eps) {
            auto directed = homology(directed_boundary_matrices(q, eps));
            add(tag + ": directed homology (eps=" + std::to_string(eps) + ") vanishes",
                groups_are(directed, {}), describe(directed));
        }

        add(tag + ": no deadlocks and no senders",
            deadlocks(*space).empty() && senders(*space).empty());

        // Both truncated variants, as event restrictions of the full complex.
        std::vector<std::size_t> without_t1, without_t2;
        for (std::size_t e = 0; e < full.event_count(); ++e) {
            if (full.events()[e].name != "t1") without_t1.push_back(e);
            if (full.events()[e].name != "t2") without_t2.push_back(e);
        }
        SemicubicalSet qn = restrict_to_events(q, without_t1);
        SemicubicalSet qp = restrict_to_events(q, without_t2);

        for (const auto& [sub, label] : {std::pair{&qn, "N"}, std::pair{&qp, "N'"}}) {
            auto sub_groups = homology(boundary_matrices(*sub));
            add(tag + ": " + label + " homology is Z, 0, ...", groups_are(sub_groups, {1}),
                describe(sub_groups));
            for (int eps = 0; eps <= 1; ++eps) {
                auto dg = homology(directed_boundary_matrices(*sub, eps));
                add(tag + ": " + label + " directed homology (eps=" + std::to_string(eps) +
                        ") is Z, 0, ...",
                    groups_are(dg, {1}), describe(dg));
            }
        }

        add(tag + ": union of restrictions rebuilds the complex", unite(qn, qp) == q);

        SemicubicalSet inter = intersect(qn, qp);
        add(tag + ": intersection has two components", component_count(inter) == 2);

        if (n >= 3) {
            // Each component must have the per-grade sizes of the complex of
            // the next shorter truncated net.
            ElementaryNet shorter = make_pipeline(n - 1, PipelineVariant::N);
            SemicubicalSet qs =
                build_complex(explore(shorter, ExploreMode::all_states, max_states));
            auto labels = component_labels(inter);
            // Count cubes per component; a cube sits in the component of any
            // of its vertices, found by walking lower faces down to grade 0.
            std::vector<std::vector<std::size_t>> per_comp(
                2, std::vector<std::size_t>(std::max(inter.grade_count(), qs.grade_count()), 0));
            for (std::size_t g = 0; g < inter.grade_count(); ++g)
                for (std::size_t idx = 0; idx < inter.size(g); ++idx) {
                    std::uint32_t v = static_cast<std::uint32_t>(idx);
                    for (std::size_t gg = g; gg >= 1; --gg) v = inter.face_index(gg, v, 1, 0);
                    per_comp[labels[v]][g] += 1;
                }
            bool sizes_match = true;
            for (std::uint32_t comp = 0; comp < 2; ++comp)
                for (std::size_t g = 0; g < per_comp[comp].size(); ++g)
                    if (per_comp[comp][g] != qs.size(g)) sizes_match = false;
            add(tag + ": intersection components match the shorter chain complex", sizes_match);
        }

        MVReport mv = mv_check(qn, qp);
        add(tag + ": union/intersection sequence is exact", mv.exact(), mv.summary());
        bool ones = mv.h0_diagonal_matrix.rows() == 2 && mv.h0_diagonal_matrix.cols() == 2;
        for (std::size_t i = 0; ones && i < 2; ++i)
            for (std::size_t j = 0; ones && j < 2; ++j)
                if (mv.h0_diagonal_matrix(i, j) != 1) ones = false;
        add(tag + ": induced H_0 map is the all-ones 2x2 matrix", ones);
        add(tag + ": Euler characteristics balance",
            mv.euler_left + mv.euler_right == mv.euler_union + mv.euler_inter);

        // Structure of the truncated chain: one deadlock (bottom), one sender
        // (top), strictly decreasing state value along transitions, and
        // everything between the top and bottom states.
        ElementaryNet truncated = make_pipeline(n, PipelineVariant::N);
        StateSpace tspace = explore(truncated, ExploreMode::all_states, max_states);
        auto dl = deadlocks(tspace);
        auto sn = senders(tspace);
        Marking bottom(full.place_count());
        Marking topm = Marking::from_value(full.place_count(),
                                           (std::uint64_t{1} << (n - 1)) - 1);
        add(tag + ": truncated chain has exactly the empty deadlock",
            dl.size() == 1 && dl[0] == bottom);
        add(tag + ": truncated chain has exactly the full sender",
            sn.size() == 1 && sn[0] == topm);

        bool monotone = true;
        for (std::uint32_t i = 0; i < tspace.size() && monotone; ++i)
            for (std::size_t e = 0; e < truncated.event_count(); ++e)
                if (auto j = tspace.step(i, e))
                    if (state_index(tspace.state(i)) <= state_index(tspace.state(*j)))
                        monotone = false;
        add(tag + ": transitions strictly decrease the state value", monotone);

        auto from_top = reach(tspace, *tspace.index_of(topm), true);
        auto to_bottom = reach(tspace, *tspace.index_of(bottom), false);
        add(tag + ": all states lie between the full and empty markings",
            std::all_of(from_top.begin(), from_top.end(), [](char c) { return c; }) &&
                std::all_of(to_bottom.begin(), to_bottom.end(), [](char c) { return c; }));

        // Dropping the producer edges of the second truncated variant splits
        // its graph into two copies of the next shorter chain, matched by
        // flipping the first place.
        ElementaryNet second = make_pipeline(n, PipelineVariant::Nprime);
        StateSpace sspace = explore(second, ExploreMode::all_states, max_states);
        std::size_t t1 = second.event_index("t1");
        bool split_ok = true;
        for (std::uint32_t i = 0; i < sspace.size() && split_ok; ++i) {
            for (std::size_t e = 0; e < second.event_count(); ++e) {
                if (e == t1) continue;
                auto j = sspace.step(i, e);
                Marking flipped = sspace.state(i);
                flipped.set(0, !flipped.occupied(0));
                auto fi = sspace.index_of(flipped);
                std::optional<std::uint32_t> fj = sspace.step(*fi, e);
                if (j.has_value() != fj.has_value()) {
                    split_ok = false;
                    break;
                }
                if (j) {
                    Marking target = sspace.state(*j);
                    target.set(0, !target.occupied(0));
                    if (!(sspace.state(*fj) == target)) {
                        split_ok = false;
                        break;
                    }
                }
            }
        }
        add(tag + ": second truncation is two mirrored copies of the shorter chain",
            split_ok);
    }
    return report;
}

} // namespace pnhom
