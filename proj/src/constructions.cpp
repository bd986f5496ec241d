#include "qtcat/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qtcat/partitions.hpp"

namespace qtcat {

namespace {

struct Pt {
    int32_t x, y;
    friend bool operator==(const Pt &, const Pt &) = default;
    friend bool operator<(const Pt &a, const Pt &b) {
        return std::pair{a.x, a.y} < std::pair{b.x, b.y};
    }
};

enum class GroupKind { Anchor, Singleton, Block, Slot, OneBlk, Merged };

struct Group {
    GroupKind kind;
    std::vector<Pt> pts;
};

// y-minimal block instances, normalized (translation 0)
std::vector<Pt> block_min(const Partition &mu) {
    if (mu == Partition{1}) return {{-1, 1}, {0, 0}};
    if (mu == Partition{1, 1, 1}) return {{-2, 2}, {-1, 1}, {0, 0}};
    if (mu == Partition{1, 1}) return {{-1, 1}, {0, 0}, {1, 1}, {2, 0}};
    if (mu.size() == 1) {
        std::vector<Pt> v = {{-1, 1}, {0, 0}};
        for (uint32_t i = 1; i < mu[0]; i++) v.push_back({int32_t(i), 0});
        return v;
    }
    if (mu.size() == 2 && mu[0] >= 2) {
        uint32_t v0 = mu[0], w = mu[1];
        std::vector<Pt> v;
        for (uint32_t i = 0; i < w; i++) v.push_back({int32_t(i), 0});
        v.push_back({-1, 1});
        v.push_back({int32_t(w - v0), 1});
        return v;
    }
    throw std::invalid_argument("building block: unsupported segment shape");
}

std::vector<Pt> slot_prime() { return {{-1, 1}, {0, 0}, {1, 0}}; }  // phi = rho_2
std::vector<Pt> slot_dprime() { return {{-1, 1}, {0, 0}, {0, 1}}; } // phi = rho_2 - rho_1^2

size_t block_size(const Partition &mu, bool three_point_run) {
    if (mu == Partition{1, 1} && three_point_run) return 3;
    return block_min(mu).size();
}

std::vector<Pt> all_pts(const std::vector<Group> &gs) {
    std::vector<Pt> v;
    for (const auto &g : gs) v.insert(v.end(), g.pts.begin(), g.pts.end());
    return v;
}

int64_t total_y(const std::vector<Group> &gs) {
    int64_t y = 0;
    for (const auto &g : gs)
        for (const auto &p : g.pts) y += p.y;
    return y;
}

bool try_move(std::vector<Group> &gs, size_t gi, size_t pi, std::set<Pt> &occ) {
    Pt p = gs[gi].pts[pi];
    if (p.x - 1 < 0) return false;
    Pt tgt{p.x - 1, p.y + 1};
    if (occ.count(tgt)) return false;
    occ.erase(p);
    occ.insert(tgt);
    gs[gi].pts[pi] = tgt;
    return true;
}

// greedy north-west moves; all |.|-profiles are preserved, so every
// profile-certified block keeps its leading-monomial certificate
int64_t distribute(std::vector<Group> &gs, int64_t budget, bool allow_singletons,
                   bool allow_blocks) {
    std::set<Pt> occ;
    for (const auto &p : all_pts(gs)) occ.insert(p);
    std::vector<std::pair<size_t, size_t>> sources;
    for (size_t gi = gs.size(); gi-- > 0;)
        if (gs[gi].kind == GroupKind::Singleton && allow_singletons) sources.push_back({gi, 0});
    for (size_t gi = 0; gi < gs.size(); gi++) {
        if (gs[gi].kind != GroupKind::Block || !allow_blocks) continue;
        std::vector<size_t> idx(gs[gi].pts.size());
        for (size_t i = 0; i < idx.size(); i++) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            const Pt &pa = gs[gi].pts[a], &pb = gs[gi].pts[b];
            return std::pair{-pa.y, pa.x} < std::pair{-pb.y, pb.x};
        });
        for (size_t i : idx) sources.push_back({gi, i});
    }
    while (budget > 0) {
        bool progress = false;
        for (auto [gi, pi] : sources) {
            while (budget > 0 && try_move(gs, gi, pi, occ)) {
                budget--;
                progress = true;
            }
        }
        if (!progress) break;
    }
    return budget;
}

// CASE 1 / CASE 2 assembly of Eq. (5.3) at minimal y-degree.
// slot: 0 = 4-point (1,1) block, 1 = prime, 2 = double prime variant.
std::optional<std::vector<Group>> assemble(uint32_t n, const Partition &nu, int slot) {
    std::vector<Partition> blks;
    if (!nu.empty()) blks = substring_decompose(nu).blocks;
    bool case2 = !blks.empty() && blks.back() == Partition{1, 1, 1};
    std::vector<Group> gs;
    if (case2) {
        uint32_t m = uint32_t(blks.size());
        gs.push_back({GroupKind::Anchor, {{0, 0}}});
        for (uint32_t j = 2; j + 3 * m <= n; j++)
            gs.push_back({GroupKind::Singleton, {{int32_t(j) - 1, 0}}});
        for (uint32_t j = 1; j <= m; j++) {
            int32_t s = int32_t(n) - 3 * int32_t(m) + 3 * int32_t(j) - 3;
            gs.push_back({GroupKind::Block, {{s, 0}, {s - 1, 1}, {s - 2, 2}}});
        }
        return gs;
    }
    size_t n0 = 1;
    for (const auto &b : blks) n0 += block_size(b, slot != 0);
    if (n0 > n) return std::nullopt;
    gs.push_back({GroupKind::Anchor, {{0, 0}}});
    int32_t T = 1;
    std::vector<Group> placed;
    for (size_t i = blks.size(); i-- > 0;) {
        const Partition &b = blks[i];
        std::vector<Pt> base;
        GroupKind kind = GroupKind::Block;
        if (b == Partition{1, 1} && slot != 0) {
            base = (slot == 1) ? slot_prime() : slot_dprime();
            kind = GroupKind::Slot;
        } else {
            base = block_min(b);
        }
        std::vector<Pt> pts;
        for (const auto &p : base) pts.push_back({p.x + T, p.y});
        placed.push_back({kind, std::move(pts)});
        T += int32_t(base.size());
    }
    for (auto &g : placed) gs.push_back(std::move(g));
    for (size_t j = n0 + 1; j <= n; j++)
        gs.push_back({GroupKind::Singleton, {{int32_t(j) - 1, 0}}});
    return gs;
}

PointDiagram to_diagram(const std::vector<Group> &gs, bool transposed) {
    std::vector<PlanarPoint> pts;
    for (const auto &p : all_pts(gs))
        pts.push_back(transposed ? PlanarPoint{p.y, p.x} : PlanarPoint{p.x, p.y});
    return PointDiagram(std::move(pts), Flavor::D);
}

RhoMonomial rho_of(const Partition &nu) {
    RhoMonomial m;
    m.parts = nu;
    std::sort(m.parts.begin(), m.parts.end());
    return m;
}

void check_preconditions(uint32_t n, uint64_t d1, uint64_t d2, const Partition &nu, uint32_t kmax) {
    uint64_t choose2 = uint64_t(n) * (n - 1) / 2;
    if (d1 + d2 > choose2) throw std::invalid_argument("construction: d1+d2 > C(n,2)");
    uint64_t k = choose2 - d1 - d2;
    if (k > kmax) throw std::invalid_argument("construction: deficit k out of range");
    if (d2 > d1) throw std::invalid_argument("construction: requires d2 <= d1");
    if (partition_weight(nu) != k) throw std::invalid_argument("construction: |nu| != k");
    if (nu.size() > d2) throw std::invalid_argument("construction: nu not in Pi_{d2,k}");
    if (!is_valid_partition(nu)) throw std::invalid_argument("construction: invalid partition");
}

GeneratorCertificate finalize(uint32_t n, uint64_t d1, uint64_t d2, const Partition &nu,
                              FormalSum element) {
    GeneratorCertificate cert;
    cert.nu = nu;
    cert.bidegree = {int64_t(d1), int64_t(d2)};
    for (const auto &t : element.terms) {
        if (t.diagram.size() != n || !t.diagram.in_D())
            throw std::logic_error("construction: diagram not in D_n");
        if (t.diagram.bidegree() != cert.bidegree)
            throw std::logic_error("construction: wrong bidegree");
    }
    cert.phi_value = phi_sum(element);
    if (cert.phi_value.is_zero()) throw std::logic_error("construction: phi value is zero");
    auto [lm, lc] = leading(cert.phi_value);
    if (!(lm == rho_of(nu)))
        throw std::logic_error("construction: leading monomial is not rho_nu (got " +
                               cert.phi_value.str() + ")");
    cert.leading = lm;
    cert.element = std::move(element);
    return cert;
}

std::optional<PointDiagram> build_single(uint32_t n, uint64_t d1, uint64_t d2,
                                         const Partition &nu) {
    for (bool transposed : {false, true}) {
        uint64_t target_y = transposed ? d1 : d2;
        auto gs = assemble(n, nu, 0);
        if (!gs) return std::nullopt;
        int64_t budget = int64_t(target_y) - total_y(*gs);
        if (budget < 0) continue;
        if (distribute(*gs, budget, true, true) != 0) continue;
        PointDiagram D = to_diagram(*gs, transposed);
        if (D.size() != n) continue;
        if (D.bidegree() != Bidegree{int64_t(d1), int64_t(d2)}) continue;
        RhoPoly v = phi(D);
        if (!v.is_zero() && leading(v).first == rho_of(nu)) return D;
    }
    return std::nullopt;
}

// E'/E'' pair: identical assemblies except for the run slot, with one spare
// singleton stepped south-east in the double-prime copy to even the bidegree
std::optional<FormalSum> build_prime_pair(uint32_t n, uint64_t d1, uint64_t d2,
                                          const Partition &nu) {
    auto gs = assemble(n, nu, 1);
    if (!gs) return std::nullopt;
    size_t last_sing = SIZE_MAX;
    for (size_t i = 0; i < gs->size(); i++)
        if ((*gs)[i].kind == GroupKind::Singleton) last_sing = i;
    if (last_sing == SIZE_MAX) return std::nullopt;
    int64_t budget = int64_t(d2) - total_y(*gs);
    if (budget < 1) return std::nullopt;
    std::set<Pt> occ;
    for (const auto &p : all_pts(*gs)) occ.insert(p);
    if (!try_move(*gs, last_sing, 0, occ)) return std::nullopt;
    if (distribute(*gs, budget - 1, true, true) != 0) return std::nullopt;
    std::vector<Group> g2 = *gs;
    for (auto &g : g2) {
        if (g.kind != GroupKind::Slot) continue;
        int32_t T = INT32_MAX;
        for (const auto &p : g.pts) T = std::min(T, p.x);
        T += 1; // prime slot has min x = T-1
        g.pts.clear();
        for (const auto &p : slot_dprime()) g.pts.push_back({p.x + T, p.y});
    }
    Pt &sp = g2[last_sing].pts[0];
    sp = {sp.x + 1, sp.y - 1};
    PointDiagram D1 = to_diagram(*gs, false), D2 = to_diagram(g2, false);
    if (D1.size() != n || D2.size() != n) return std::nullopt;
    Bidegree want{int64_t(d1), int64_t(d2)};
    if (D1.bidegree() != want || D2.bidegree() != want) return std::nullopt;
    return FormalSum({{mpq_class(1), D1}, {mpq_class(-1), D2}});
}

// Corner family (k = n-3, run block (1,1), final block a singleton (w)):
// no unit-coefficient pair exists, so certify with Delta(A) - 2 Delta(B).
// The run's two 1's are carried by a 2-point block with phi = (g-h) rho_1
// and by the merged (w+1)-block, whose top point raised s steps has
// phi = rho_{w+1} - s rho_1 rho_w exactly; matching g-h = 2(g'-h') and
// s_A != s_B leaves 2(s_B - s_A) rho_1^2 rho_w times the shared factors.
std::optional<FormalSum> build_corner_pair(uint32_t n, uint64_t d1, uint64_t d2,
                                           const Partition &nu) {
    uint32_t c = 0;
    while (c < nu.size() && nu[c] == 1) c++;
    std::vector<uint32_t> rest(nu.begin() + c, nu.end());
    if (c % 3 != 2 || rest.empty() || rest.size() % 2 == 0) return std::nullopt;
    uint32_t w = rest.back();
    std::vector<Partition> pairs;
    for (size_t i = 0; i + 1 < rest.size(); i += 2) pairs.push_back({rest[i], rest[i + 1]});
    size_t triples = (c - 2) / 3;
    uint32_t w1 = w + 1;

    auto merged_raised = [&](uint32_t s) {
        std::vector<Pt> pts = block_min({w1});
        for (auto &p : pts)
            if (p == Pt{int32_t(w1) - 1, 0}) p = {int32_t(w1) - 1 - int32_t(s), int32_t(s)};
        return pts;
    };
    auto build = [&](std::pair<uint32_t, uint32_t> one_blk, const std::vector<Pt> &merged,
                     const std::vector<std::vector<Pt>> &shared_pairs,
                     const std::vector<std::vector<Pt>> &shared_triples) {
        std::vector<Group> gs;
        gs.push_back({GroupKind::Anchor, {{0, 0}}});
        int32_t T = 1;
        std::vector<Pt> mp;
        for (const auto &p : merged) mp.push_back({p.x + T, p.y});
        gs.push_back({GroupKind::Merged, std::move(mp)});
        T += int32_t(w1) + 1;
        for (size_t i = shared_pairs.size(); i-- > 0;) {
            std::vector<Pt> pp;
            for (const auto &p : shared_pairs[i]) pp.push_back({p.x + T, p.y});
            T += int32_t(shared_pairs[i].size());
            gs.push_back({GroupKind::Block, std::move(pp)});
        }
        auto [g, h] = one_blk;
        gs.push_back({GroupKind::OneBlk, {{T - int32_t(g), int32_t(g)}, {T - int32_t(h), int32_t(h)}}});
        T += 2;
        for (size_t i = shared_triples.size(); i-- > 0;) {
            std::vector<Pt> tp;
            for (const auto &p : shared_triples[i]) tp.push_back({p.x + T, p.y});
            T += 3;
            gs.push_back({GroupKind::Block, std::move(tp)});
        }
        return gs;
    };

    std::vector<std::vector<Pt>> pair_min, tri_min;
    for (const auto &p : pairs) pair_min.push_back(block_min(p));
    for (size_t i = 0; i < triples; i++) tri_min.push_back(block_min({1, 1, 1}));
    int64_t y_shared_min = 0;
    for (const auto &v : pair_min)
        for (const auto &p : v) y_shared_min += p.y;
    for (const auto &v : tri_min)
        for (const auto &p : v) y_shared_min += p.y;

    for (int64_t extra = 0;; extra++) {
        int64_t R = int64_t(d2) - (y_shared_min + extra);
        if (R < 3) break;
        // push `extra` into the shared blocks, identically for both diagrams
        auto trial = build({1, 0}, merged_raised(0), pair_min, tri_min);
        if (extra > 0 && distribute(trial, extra, false, true) != 0) continue;
        std::vector<std::vector<Pt>> pair_cfg(pair_min.size()), tri_cfg(tri_min.size());
        {
            size_t gi = 2;
            for (size_t i = pair_min.size(); i-- > 0; gi++) {
                int32_t base = INT32_MAX;
                for (const auto &p : trial[gi].pts) base = std::min(base, p.x + p.y);
                for (const auto &p : trial[gi].pts) pair_cfg[i].push_back({p.x - base, p.y});
            }
            gi++; // one-block
            for (size_t i = tri_min.size(); i-- > 0; gi++) {
                int32_t base = INT32_MAX;
                for (const auto &p : trial[gi].pts) base = std::min(base, p.x + p.y);
                for (const auto &p : trial[gi].pts) tri_cfg[i].push_back({p.x - base, p.y});
            }
        }
        int32_t T1 = 1 + int32_t(w1) + 1;
        for (const auto &v : pair_cfg) T1 += int32_t(v.size());
        // one-block y-parity matches its constant's parity; pick the side of
        // the merged raise so both systems solve with c_A = 2, c_B = 1
        std::optional<std::tuple<uint32_t, uint32_t, uint32_t, uint32_t, uint32_t, uint32_t>> found;
        for (uint32_t sA = 0; sA < w1 && !found; sA++) {
            int64_t YA = R - 1 - sA;
            if (YA < 2 || YA % 2 != 0) continue;
            uint32_t gA = uint32_t((YA + 2) / 2), hA = uint32_t((YA - 2) / 2);
            if (int64_t(gA) > T1) continue;
            for (uint32_t sB = 0; sB < w1; sB++) {
                if (sB == sA) continue;
                int64_t YB = R - 1 - sB;
                if (YB < 1 || YB % 2 != 1) continue;
                uint32_t gB = uint32_t((YB + 1) / 2), hB = uint32_t((YB - 1) / 2);
                if (int64_t(gB) > T1) continue;
                found = {gA, hA, sA, gB, hB, sB};
                break;
            }
        }
        if (!found) continue;
        auto [gA, hA, sA, gB, hB, sB] = *found;
        auto A = build({gA, hA}, merged_raised(sA), pair_cfg, tri_cfg);
        auto B = build({gB, hB}, merged_raised(sB), pair_cfg, tri_cfg);
        PointDiagram DA = to_diagram(A, false), DB = to_diagram(B, false);
        if (DA.size() != n || DB.size() != n) continue;
        if (!DA.in_D() || !DB.in_D()) continue;
        if (DA.bidegree() != Bidegree{int64_t(d1), int64_t(d2)}) continue;
        if (DB.bidegree() != Bidegree{int64_t(d1), int64_t(d2)}) continue;
        RhoPoly v = phi(DA) - phi(DB).scaled(2);
        if (!v.is_zero() && leading(v).first == rho_of(nu))
            return FormalSum({{mpq_class(1), DA}, {mpq_class(-2), DB}});
    }
    return std::nullopt;
}

} // namespace

BuildingBlock building_block(const Partition &mu, uint32_t y_budget) {
    BuildingBlock b;
    b.mu = mu;
    b.weight = partition_weight(mu);
    std::vector<Pt> pts = block_min(mu);
    int64_t ymin = 0;
    for (const auto &p : pts) ymin += p.y;
    if (y_budget < ymin) throw std::invalid_argument("building_block: budget below minimum");
    std::vector<Group> gs = {{GroupKind::Block, pts}};
    // blocks live in D', so x may go negative here; shift legality is x >= -|P|
    // handled by moving within the normalized frame shifted right
    int32_t shift = int32_t(partition_weight(mu)) + int32_t(y_budget) + 2;
    for (auto &p : gs[0].pts) p.x += shift;
    if (distribute(gs, int64_t(y_budget) - ymin, false, true) != 0)
        throw std::invalid_argument("building_block: budget above the block envelope");
    std::vector<PlanarPoint> out;
    for (const auto &p : gs[0].pts) out.push_back({p.x - shift, p.y});
    b.diagram = PointDiagram(std::move(out), Flavor::Dprime);
    b.size = b.diagram.size();
    RhoPoly v = phi(b.diagram);
    if (v.is_zero() || !(leading(v).first == rho_of(mu)))
        throw std::logic_error("building_block: certificate LM(phi) = rho_mu failed");
    return b;
}

GeneratorCertificate construct_D_nu(uint32_t n, uint64_t d1, uint64_t d2, const Partition &nu) {
    check_preconditions(n, d1, d2, nu, n >= 4 ? n - 4 : 0);
    auto D = build_single(n, d1, d2, nu);
    if (!D) throw std::logic_error("construct_D_nu: assembly failed");
    return finalize(n, d1, d2, nu, FormalSum(*D));
}

GeneratorCertificate construct_f_nu(uint32_t n, uint64_t d1, uint64_t d2, const Partition &nu) {
    check_preconditions(n, d1, d2, nu, n >= 3 ? n - 3 : 0);
    bool has_run_pair = false;
    if (!nu.empty())
        for (const auto &b : substring_decompose(nu).blocks)
            if (b == Partition{1, 1}) has_run_pair = true;
    if (!has_run_pair || assemble(n, nu, 0).has_value()) {
        auto D = build_single(n, d1, d2, nu);
        if (D) return finalize(n, d1, d2, nu, FormalSum(*D));
    }
    if (has_run_pair) {
        auto pair = build_prime_pair(n, d1, d2, nu);
        if (pair) return finalize(n, d1, d2, nu, std::move(*pair));
        auto corner = build_corner_pair(n, d1, d2, nu);
        if (corner) return finalize(n, d1, d2, nu, std::move(*corner));
    }
    throw std::logic_error("construct_f_nu: all strategies failed for nu at this cell");
}

BasisReport basis_certificate(uint32_t n, uint64_t d1, uint64_t d2) {
    uint64_t choose2 = uint64_t(n) * (n - 1) / 2;
    if (d1 + d2 > choose2 || d2 > d1)
        throw std::invalid_argument("basis_certificate: need d2 <= d1, d1+d2 <= C(n,2)");
    uint64_t k = choose2 - d1 - d2;
    if (k + 3 > n) throw std::invalid_argument("basis_certificate: requires k <= n-3");
    BasisReport rep;
    std::set<Partition> seen;
    for (const auto &nu : enumerate_partitions_bounded(uint32_t(d2), uint32_t(k))) {
        GeneratorCertificate cert = construct_f_nu(n, d1, d2, nu);
        if (!seen.insert(cert.leading.parts).second)
            throw std::logic_error("basis_certificate: duplicate leading monomial");
        rep.certificates.push_back(std::move(cert));
    }
    rep.rank = rep.certificates.size();
    return rep;
}

} // namespace qtcat
