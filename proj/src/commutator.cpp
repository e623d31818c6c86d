#include "dlpar/commutator.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "dlpar/errors.hpp"

namespace dlpar {

std::vector<AffineLevel> commutator_support(const RootDatum& datum, const AffineLevel& l1, const AffineLevel& l2)
{
    if (datum.neg(l1.alpha) == l2.alpha) throw DomainError("commutator_support: opposite roots");
    std::vector<AffineLevel> out;
    for (const auto& sp : datum.root_string_pairs(l1.alpha, l2.alpha))
        out.push_back({sp.gamma, sp.p * l1.index + sp.q * l2.index});
    return out;
}

nlohmann::json Witness::to_json() const
{
    return {{"check", check}, {"family", family}, {"alpha", alpha}, {"beta", beta}, {"point", point},
            {"p", p},         {"q", q},           {"a", a},         {"r", r},       {"i", i},
            {"lhs", lhs},     {"rhs", rhs}};
}

void ContainmentReport::merge(const ContainmentReport& o)
{
    instances += o.instances;
    for (const auto& [k, v] : o.branches) branches[k] += v;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
}

nlohmann::json ContainmentReport::to_json(size_t max_witnesses) const
{
    nlohmann::json j;
    j["check"] = check;
    j["experimental"] = experimental;
    j["instances"] = instances;
    j["branches"] = branches;
    j["violation_count"] = violations.size();
    nlohmann::json w = nlohmann::json::array();
    for (size_t k = 0; k < violations.size() && k < max_witnesses; ++k) w.push_back(violations[k].to_json());
    j["violations"] = w;
    return j;
}

namespace {

std::string point_str(const RatVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s + ")";
}

struct Checker {
    const FiltrationProfile& P;
    const RootDatum& D;
    int r;
    ContainmentReport& rep;

    Checker(const FiltrationProfile& prof, int r_, ContainmentReport& report)
        : P(prof), D(*prof.datum), r(r_), rep(report) {}

    int thr(int g) const { return affine_index(P, g, r, r); }
    int aff(int g, int a) const { return affine_index(P, g, a, r); }
    long long fl(int p, int a, int q, int b) const
    {
        return floor_rat(Rat(p) * P.eps(a) + Rat(q) * P.eps(b));
    }

    void require(bool cond, const std::string& branch, long long lhs, long long rhs, int alpha, int beta, int p = 0,
                 int q = 0, int a = 0, int i = 0)
    {
        ++rep.instances;
        rep.hit(branch);
        if (cond) return;
        Witness w;
        w.check = branch;
        w.family = D.family();
        w.alpha = alpha >= 0 ? root_str(D.root(alpha)) : "";
        w.beta = beta >= 0 ? root_str(D.root(beta)) : "";
        w.point = point_str(P.v);
        w.p = p;
        w.q = q;
        w.a = a;
        w.r = r;
        w.i = i;
        w.lhs = lhs;
        w.rhs = rhs;
        rep.violations.push_back(w);
    }

    // lhs >= rhs
    void ge(long long lhs, long long rhs, const std::string& branch, int alpha, int beta, int p = 0, int q = 0,
            int a = 0, int i = 0)
    {
        require(lhs >= rhs, branch, lhs, rhs, alpha, beta, p, q, a, i);
    }
};

}  // namespace

ContainmentReport certify_eps_ms(const FiltrationProfile& prof)
{
    ContainmentReport rep;
    rep.check = "eps_ms";
    auto r = check_eps_ms(*prof.datum, prof);
    rep.instances = r.instances;
    rep.branches["floor_zero"] = r.instances - r.floor_positive;
    rep.branches["floor_positive"] = r.floor_positive;
    for (const auto& v : r.violations) {
        Witness w;
        w.check = "eps_ms";
        w.family = prof.datum->family();
        w.alpha = root_str(prof.datum->root(v.alpha));
        w.beta = root_str(prof.datum->root(v.beta));
        w.point = point_str(prof.v);
        w.p = v.p;
        w.q = v.q;
        w.lhs = v.lhs;
        w.rhs = v.rhs;
        rep.violations.push_back(w);
    }
    return rep;
}

ContainmentReport certify_lemma_comm(const FiltrationProfile& prof, int r)
{
    ContainmentReport rep;
    rep.check = "lemma_comm";
    if (r < 2) return rep;
    Checker C(prof, r, rep);
    const RootDatum& D = C.D;
    for (int a = 1; a <= r - 1; ++a) {
        for (int al = 0; al < D.num_roots(); ++al) {
            bool ared = prof.red(al);
            std::string part = ared ? "b." : "a.";
            // xi in U^{r-a}_alpha; the other side is G^{a+1} (part a) or G^a (part b)
            int lx = C.aff(al, r - a);
            int lev = ared ? a : a + 1;
            C.ge(torus_commutator_level(lx, lev), C.thr(al), part + "torus", al, -1, 0, 0, a);
            int na = D.neg(al);
            C.ge(lx + C.aff(na, lev), r, part + "opposite", al, na, 0, 0, a);
            for (int be = 0; be < D.num_roots(); ++be) {
                if (be == na) continue;
                bool bred = prof.red(be);
                int lb = C.aff(be, lev);
                for (const auto& sp : D.root_string_pairs(al, be)) {
                    int p = sp.p, q = sp.q, g = sp.gamma;
                    long long idx = static_cast<long long>(p) * lx + static_cast<long long>(q) * lb;
                    long long d = static_cast<long long>(p) * prof.m(al) + static_cast<long long>(q) * prof.m(be) -
                                  prof.m(g);
                    std::string br = part + (bred ? "beta_red" : "beta_nonred");
                    if (!bred) br += prof.red(g) ? ".gamma_red" : ".gamma_nonred";
                    C.ge(idx, C.thr(g), br + ".threshold", al, be, p, q, a);
                    // the same vanishing in the form used by the case analysis
                    long long extra = ared ? (p - 1) * (r - a) + (q - 1) * (bred ? a : a - 1)
                                           : (p - 1) * (r - a - 1) + (q - 1) * (bred ? a + 1 : a);
                    long long need = (!bred && prof.red(g)) ? 1 : 0;
                    C.ge(d + extra, need, br + ".inequality", al, be, p, q, a);
                    if (!bred && prof.red(g)) C.ge(C.fl(p, al, q, be), 1, br + ".residue", al, be, p, q, a);
                }
            }
        }
    }
    return rep;
}

ContainmentReport certify_jump_filtration(const FiltrationProfile& prof, int r)
{
    ContainmentReport rep;
    rep.check = "jump_filtration";
    if (r < 2) return rep;
    Checker C(prof, r, rep);
    const RootDatum& D = C.D;
    int s = prof.s();
    auto support = [&](int al, int be, long long ia, long long ib) {
        std::vector<std::pair<RootDatum::StringPair, long long>> out;
        for (const auto& sp : D.root_string_pairs(al, be)) out.push_back({sp, sp.p * ia + sp.q * ib});
        return out;
    };

    // H(1): reductive alpha at level m+1 against any beta in G_2^1
    for (int al = 0; al < D.num_roots(); ++al) {
        if (!prof.red(al)) continue;
        for (int be = 0; be < D.num_roots(); ++be) {
            if (be == D.neg(al)) {
                // [U^1_alpha, U^1_{-alpha}] lands in T^{alpha,2}, trivial in G_2
                C.ge(prof.m(al) + 1 + prof.m(be) + 1, 2, "H1.opposite", al, be);
                continue;
            }
            if (prof.red(be)) {
                for (auto& [sp, idx] : support(al, be, prof.m(al) + 1, prof.m(be) + 1))
                    C.ge(idx, affine_index(prof, sp.gamma, 2, 2), "H1.red_red", al, be, sp.p, sp.q);
            } else {
                for (auto& [sp, idx] : support(al, be, prof.m(al) + 1, prof.m(be)))
                    C.ge(idx, prof.m(sp.gamma) + 1, "H1.red_nonred", al, be, sp.p, sp.q);
            }
        }
    }

    for (int i = 1; i <= s; ++i) {
        const Rat& ei = prof.jump(i);
        const Rat& ei1 = prof.jump(i + 1);
        for (int al = 0; al < D.num_roots(); ++al) {
            if (prof.red(al) || prof.eps(al) < ei) continue;
            for (int be = 0; be < D.num_roots(); ++be) {
                if (prof.red(be)) continue;
                if (be == D.neg(al)) {
                    // torus part T^{alpha, m_alpha + m_{-alpha}} = T^{alpha,1} lies in H(1)
                    C.ge(prof.m(al) + prof.m(be), 1, "Hi.opposite", al, be, 0, 0, 1, i);
                    continue;
                }
                bool quotient = prof.eps(al) == ei && prof.eps(be) == ei;
                for (auto& [sp, idx] : support(al, be, prof.m(al), prof.m(be))) {
                    int g = sp.gamma;
                    // normality of H(eps_i)
                    if (!prof.red(g) && prof.eps(g) >= ei) {
                        C.ge(idx, prof.m(g), "Hi.gamma_in", al, be, sp.p, sp.q, 1, i);
                    } else if (prof.red(g)) {
                        C.ge(idx, prof.m(g) + 1, "Hi.gamma_red", al, be, sp.p, sp.q, 1, i);
                    } else {
                        C.ge(C.fl(sp.p, al, sp.q, be), 1, "Hi.contradiction", al, be, sp.p, sp.q, 1, i);
                        C.ge(idx, prof.m(g) + 1, "Hi.contradiction.vanish", al, be, sp.p, sp.q, 1, i);
                    }
                    if (!quotient) continue;
                    // H(eps_i)/H(eps_{i+1}) abelian
                    if (!prof.red(g) && prof.eps(g) >= ei1) {
                        C.ge(idx, prof.m(g), "Q.gamma_in", al, be, sp.p, sp.q, 1, i);
                    } else {
                        C.ge(idx, prof.m(g) + 1, prof.red(g) ? "Q.gamma_red" : "Q.vanish", al, be, sp.p, sp.q, 1,
                             i);
                    }
                }
            }
        }
    }
    return rep;
}

std::vector<std::vector<int>> positive_systems(const RootDatum& datum)
{
    std::vector<int> std_pos = datum.positive_roots();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    for (const auto& w : datum.weyl_elements()) {
        std::vector<int> sys;
        for (int a : std_pos) sys.push_back(w.perm[a]);
        std::sort(sys.begin(), sys.end());
        if (seen.insert(sys).second) out.push_back(sys);
    }
    return out;
}

ContainmentReport certify_pairings(const FiltrationProfile& prof, int r)
{
    ContainmentReport rep;
    rep.check = "pairings";
    if (r < 2) return rep;
    Checker C(prof, r, rep);
    const RootDatum& D = C.D;
    int s = prof.s();
    int N = D.num_roots();

    // pairing, a >= 2
    for (int a = 2; a <= r - 1; ++a)
        for (int al = 0; al < N; ++al) {
            if (prof.red(al)) continue;
            int lx = C.aff(al, r - a);
            for (int be = 0; be < N; ++be) {
                int lb = C.aff(be, a), lb1 = C.aff(be, a + 1);
                if (be == D.neg(al)) {
                    C.ge(lx + lb, r - 1, "P1.opposite", al, be, 0, 0, a);
                    C.ge(lx + 1 + lb, r, "P1.opposite.shift", al, be, 0, 0, a);
                    C.ge(lx + lb1, r, "P1.opposite.shift", al, be, 0, 0, a);
                    continue;
                }
                for (const auto& sp : D.root_string_pairs(al, be)) {
                    int g = sp.gamma;
                    C.ge(sp.p * lx + sp.q * lb, C.aff(g, r - 1), "P1.target", al, be, sp.p, sp.q, a);
                    C.ge(sp.p * (lx + 1) + sp.q * lb, C.thr(g), "P1.xi_shift", al, be, sp.p, sp.q, a);
                    C.ge(sp.p * lx + sp.q * lb1, C.thr(g), "P1.x_shift", al, be, sp.p, sp.q, a);
                }
            }
        }

    // pairing, a = 1
    for (int al = 0; al < N; ++al) {
        if (prof.red(al)) continue;
        int na = D.neg(al);
        int i = prof.at(na).jump;
        const Rat& ei = prof.jump(i);
        int lx = C.aff(al, r - 1);
        for (int be = 0; be < N; ++be) {
            bool bred = prof.red(be);
            int lb = C.aff(be, 1);
            if (be == na) {
                C.ge(lx + lb, r - 1, "P2.c1.opposite", al, be, 0, 0, 1, i);
                continue;
            }
            if (bred || prof.eps(be) >= ei) {
                for (const auto& sp : D.root_string_pairs(al, be)) {
                    int g = sp.gamma;
                    long long idx = sp.p * lx + sp.q * lb;
                    std::string br = bred ? "P2.c1.beta_red" : "P2.c1.beta_nonred";
                    C.ge(idx, prof.m(g) + r - 1, br, al, be, sp.p, sp.q, 1, i);
                    if (!bred) C.ge(C.fl(sp.p, al, sp.q, be) + (sp.p - 1) * (r - 2), 1, br + ".floor", al, be, sp.p,
                                    sp.q, 1, i);
                }
            }
            bool in_next = bred || (i + 1 <= s && prof.eps(be) >= prof.jump(i + 1));
            if (!in_next) continue;
            for (const auto& sp : D.root_string_pairs(al, be)) {
                int g = sp.gamma;
                long long idx = sp.p * lx + sp.q * lb;
                if (bred) {
                    C.ge(idx, C.thr(g), "P2.c2.beta_red", al, be, sp.p, sp.q, 1, i);
                } else if (prof.red(g)) {
                    C.ge(idx, prof.m(g) + r, "P2.c2.gamma_red", al, be, sp.p, sp.q, 1, i);
                    C.ge(C.fl(sp.p, al, sp.q, be) + (sp.p - 1) * (r - 2), 2, "P2.c2.gamma_red.floor", al, be, sp.p,
                         sp.q, 1, i);
                } else {
                    C.ge(idx, prof.m(g) + r - 1, "P2.c2.gamma_nonred", al, be, sp.p, sp.q, 1, i);
                }
            }
        }
    }

    // commutator containments, relative to every positive system
    for (const auto& pos : positive_systems(D)) {
        std::vector<bool> in(N, false);
        for (int a : pos) in[a] = true;
        std::vector<int> ht(N, 0);
        for (int a : pos) ht[a] = D.height(a, pos);
        for (int al = 0; al < N; ++al) {
            int na = D.neg(al);
            if (prof.red(al) || !in[na]) continue;
            for (int be : pos) {
                if (be == na || prof.red(be) || ht[be] > ht[na]) continue;
                for (int a = 1; a <= r - 1; ++a) {
                    if (a == 1 && prof.eps(be) != prof.eps(na)) continue;
                    if (a == 1 && prof.at(na).jump > s) continue;
                    std::string tag = a == 1 ? "S1." : "S2.";
                    for (const auto& sp : D.root_string_pairs(al, be)) {
                        int p = sp.p, q = sp.q, g = sp.gamma;
                        if (p >= q) {
                            // height hypothesis forces the root into the opposite system
                            C.require(!in[g], tag + "discard", in[g], 0, al, be, p, q, a);
                            continue;
                        }
                        long long d = static_cast<long long>(p) * prof.m(al) + static_cast<long long>(q) * prof.m(be) -
                                      prof.m(g);
                        long long lhs = a == 1 ? d + p * (r - 2) - (r - 1)
                                               : d + p * (r - a - 1) + q * (a - 1) - (r - 1);
                        long long need = prof.red(g) ? 1 : 0;
                        C.ge(lhs, need, tag + (prof.red(g) ? "qgtp.gamma_red" : "qgtp.gamma_nonred"), al, be, p, q, a);
                        if (in[g]) rep.hit(tag + "qgtp.positive");
                        if (in[g] && D.family() == "C2" && p == 1 && q == 2) rep.hit(tag + "qgtp.positive.C2_p1q2");
                    }
                }
            }
        }
    }
    return rep;
}

ContainmentReport certify_duality(const FiltrationProfile& prof, int r)
{
    ContainmentReport rep;
    rep.check = "duality";
    rep.experimental = true;
    if (r < 2) return rep;
    Checker C(prof, r, rep);
    const RootDatum& D = C.D;
    int s = prof.s();
    int N = D.num_roots();
    // index of U_alpha inside G^{b,i}; i = s+2 means G^{b+1}
    auto level = [&](int al, int b, int i) {
        if (i >= s + 2) return C.aff(al, std::min(b + 1, r));
        bool full = prof.red(al) || prof.eps(al) >= prof.jump(i);
        return full ? C.aff(al, b) : C.aff(al, std::min(b + 1, r));
    };
    auto torus_level = [&](int b, int i) { return i >= s + 2 ? b + 1 : b; };
    for (int a = 1; a <= r - 1; ++a)
        for (int i = 1; i <= s; ++i) {
            int j = s + 1 - i;
            for (int al = 0; al < N; ++al)
                for (int be = 0; be < N; ++be) {
                    // three containments: target, and triviality when either side moves one step
                    struct Case {
                        int ja, jb;
                        bool trivial;
                        const char* name;
                    } cases[] = {{j, i, false, "D.target"}, {j + 1, i, true, "D.left"}, {j, i + 1, true, "D.right"}};
                    for (const auto& cs : cases) {
                        int la = level(al, r - a, cs.ja), lb = level(be, a, cs.jb);
                        if (be == D.neg(al)) {
                            C.ge(la + lb, cs.trivial ? r : r - 1, std::string(cs.name) + ".opposite", al, be, 0, 0, a,
                                 i);
                            continue;
                        }
                        for (const auto& sp : D.root_string_pairs(al, be)) {
                            long long idx = sp.p * la + sp.q * lb;
                            int need = cs.trivial ? C.thr(sp.gamma)
                                                  : (prof.red(sp.gamma) ? C.aff(sp.gamma, r - 1) : C.thr(sp.gamma));
                            C.ge(idx, need, cs.name, al, be, sp.p, sp.q, a, i);
                        }
                        // torus of either side against the root of the other
                        C.ge(torus_level(r - a, cs.ja) + lb, cs.trivial ? C.thr(be) : C.aff(be, r - 1),
                             std::string(cs.name) + ".torus", -1, be, 0, 0, a, i);
                    }
                }
        }
    return rep;
}

nlohmann::json SweepResult::to_json() const
{
    nlohmann::json j;
    j["points"] = points;
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& r : reports) reps.push_back(r.to_json());
    j["reports"] = reps;
    return j;
}

SweepResult symbolic_sweep(const SweepConfig& cfg)
{
    auto start = std::chrono::steady_clock::now();
    struct Job {
        size_t datum;
        RatVec v;
    };
    std::vector<RootDatum> data;
    for (const auto& f : cfg.families) data.push_back(RootDatum::build(f));
    std::vector<Job> jobs;
    for (size_t d = 0; d < data.size(); ++d)
        for (auto& v : alcove_points(data[d], cfg.max_denominator)) jobs.push_back({d, v});

    const int K = 5;
    std::vector<std::vector<ContainmentReport>> per_job(jobs.size());
    auto run = [&](size_t k) {
        const auto& job = jobs[k];
        FiltrationProfile prof = profile(data[job.datum], job.v);
        std::vector<ContainmentReport> reps(K);
        reps[0] = certify_eps_ms(prof);
        for (int r = 2; r <= cfg.r_max; ++r) {
            reps[1].merge(certify_lemma_comm(prof, r));
            reps[2].merge(certify_jump_filtration(prof, r));
            reps[3].merge(certify_pairings(prof, r));
            reps[4].merge(certify_duality(prof, r));
        }
        per_job[k] = std::move(reps);
    };
    int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        for (size_t k = 0; k < jobs.size(); ++k) run(k);
    } else {
        std::vector<std::thread> pool;
        std::mutex mu;
        size_t next = 0;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                while (true) {
                    size_t k;
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        if (next >= jobs.size()) return;
                        k = next++;
                    }
                    run(k);
                }
            });
        for (auto& t : pool) t.join();
    }

    SweepResult res;
    res.points = static_cast<long long>(jobs.size());
    const char* names[K] = {"eps_ms", "lemma_comm", "jump_filtration", "pairings", "duality"};
    res.reports.resize(K);
    for (int k = 0; k < K; ++k) {
        res.reports[k].check = names[k];
        res.reports[k].experimental = k == 4;
    }
    for (auto& reps : per_job)
        for (int k = 0; k < K; ++k) res.reports[k].merge(reps[k]);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace dlpar
