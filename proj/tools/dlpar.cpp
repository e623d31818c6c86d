#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dlpar/apartment.hpp"
#include "dlpar/commutator.hpp"
#include "dlpar/errors.hpp"
#include "dlpar/group_suites.hpp"
#include "dlpar/parallel.hpp"
#include "dlpar/predictions.hpp"

using nlohmann::json;
using namespace dlpar;

namespace {

enum Status { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct Options {
    std::string command;
    std::string config_path;
    int workers = 1;
    long long budget = 100000000;
    std::string out;
    std::string format = "json";
    bool symbolic = false;
    bool all = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// the report under construction; written even when a budget runs out
struct Report {
    json doc;
    bool ok = true;
};

Rat rat_field(const json& v)
{
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    throw UsageError("rationals must be given as strings \"a/b\" or integers");
}

RatVec rat_vec(const json& v)
{
    if (!v.is_array()) throw UsageError("expected an array of rationals");
    RatVec out;
    for (const auto& x : v) out.push_back(rat_field(x));
    return out;
}

json rat_json(const RatVec& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

GroupSpec group_spec(const json& cfg)
{
    if (!cfg.contains("group")) throw UsageError("config needs a \"group\" object");
    const json& g = cfg["group"];
    GroupSpec s;
    s.family = g.value("family", "GL");
    s.n = g.value("n", 2);
    s.q = g.value("q", 2);
    s.r = g.value("r", 1);
    s.ambient = g.value("ambient", 1);
    if (g.contains("x")) s.x = rat_vec(g["x"]);
    if (g.contains("twist")) {
        s.twist_perm = g["twist"].at("perm").get<std::vector<int>>();
        s.twist_pow = g["twist"].at("pow").get<std::vector<int>>();
    }
    return s;
}

json spec_json(const GroupSpec& s)
{
    json j = {{"family", s.family}, {"n", s.n}, {"q", s.q}, {"r", s.r}, {"ambient", s.ambient}, {"x", rat_json(s.x)}};
    if (!s.twist_perm.empty()) j["twist"] = {{"perm", s.twist_perm}, {"pow", s.twist_pow}};
    return j;
}

// dimension of the fixed cocharacters of a Weyl element
int fixed_rank(const IMat& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = Rat(m[i][j] - (i == j ? 1 : 0));
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
        int p = rank;
        while (p < n && A[p][c] == Rat(0)) ++p;
        if (p == n) continue;
        std::swap(A[p], A[rank]);
        for (int i = 0; i < n; ++i) {
            if (i == rank || A[i][c] == Rat(0)) continue;
            Rat f = A[i][c] / A[rank][c];
            for (int j = 0; j < n; ++j) A[i][j] -= f * A[rank][j];
        }
        ++rank;
    }
    return n - rank;
}

int torus_index(const Setting& S, const json& v)
{
    const auto& tori = S.tori();
    if (v.is_number_integer()) {
        int i = v.get<int>();
        if (i < 0 || i >= static_cast<int>(tori.size())) throw UsageError("torus index out of range");
        return i;
    }
    if (!v.is_string()) throw UsageError("torus must be a label or an index");
    std::string label = v.get<std::string>();
    if (label == "elliptic") {
        const GroupModel& M = S.model();
        int minimal = M.datum().dim() - M.datum().rank();
        for (size_t i = 0; i < tori.size(); ++i)
            if (fixed_rank(M.weyl_x()[tori[i].w].matrix) == minimal) return static_cast<int>(i);
        throw UsageError("no elliptic torus class at this point");
    }
    for (size_t i = 0; i < tori.size(); ++i)
        if (tori[i].label == label) return static_cast<int>(i);
    throw UsageError("unknown torus label: " + label);
}

std::vector<Character> characters(const Setting& S, int t, const json& cfg)
{
    const RationalTorus& T = S.torus(t);
    auto all = characters_of(T);
    if (!cfg.contains("characters") || cfg["characters"] == "all") return all;
    if (cfg["characters"] == "regular") {
        std::vector<Character> out;
        for (const auto& c : all)
            if (is_regular(S.model(), T, c).regular) out.push_back(c);
        return out;
    }
    std::vector<Character> out;
    for (const auto& e : cfg["characters"]) {
        Character c{e.get<std::vector<int>>()};
        if (c.exps.size() != T.orders.size()) throw UsageError("character has the wrong number of exponents");
        for (size_t i = 0; i < c.exps.size(); ++i)
            if (c.exps[i] < 0 || c.exps[i] >= T.orders[i]) throw UsageError("character exponent out of range");
        out.push_back(c);
    }
    return out;
}

// explicit elements, or a deterministic sample of very regular elements
std::vector<GroupElement> elements(const Setting& S, const json& cfg, int default_sample)
{
    if (cfg.contains("elements") && cfg["elements"].is_array()) {
        std::vector<GroupElement> out;
        for (const auto& e : cfg["elements"]) out.push_back(S.model().from_json(e));
        return out;
    }
    size_t limit = static_cast<size_t>(cfg.value("sample", default_sample));
    std::vector<GroupElement> out;
    for (size_t t = 0; t < S.tori().size(); ++t) {
        auto part = S.very_regular_sample(static_cast<int>(t), limit);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

void cmd_profile(const json& cfg, Report& rep)
{
    std::string family;
    RatVec x;
    int n = 0;
    if (cfg.contains("datum")) {
        family = cfg["datum"].at("family").get<std::string>();
        n = cfg["datum"].value("n", 0);
        if (cfg["datum"].contains("x")) x = rat_vec(cfg["datum"]["x"]);
    } else if (cfg.contains("group")) {
        GroupSpec s = group_spec(cfg);
        family = s.family;
        n = s.n;
        x = s.x;
    } else {
        throw UsageError("profile needs a \"datum\" or \"group\" object");
    }
    RootDatum D = RootDatum::build(family, n);
    if (cfg.contains("datum") && cfg["datum"].contains("x_simple_coroots")) {
        // x = sum c_i (simple coroot i)
        RatVec c = rat_vec(cfg["datum"]["x_simple_coroots"]);
        if (static_cast<int>(c.size()) != D.rank()) throw UsageError("one coefficient per simple coroot expected");
        x.assign(D.dim(), Rat(0));
        for (int i = 0; i < D.rank(); ++i)
            for (int k = 0; k < D.dim(); ++k) x[k] += c[i] * Rat(D.coroot(D.simple()[i])[k]);
    }
    if (x.empty()) x.assign(D.dim(), Rat(0));
    if (static_cast<int>(x.size()) != D.dim()) throw UsageError("point has wrong dimension");
    FiltrationProfile prof = profile(D, x);
    auto eps = certify_eps_ms(prof);
    rep.doc["datum"] = family;
    rep.doc["x"] = rat_json(x);
    rep.doc["profile"] = prof.to_json();
    rep.doc["eps_ms"] = eps.to_json();
    rep.ok = eps.ok();
}

void cmd_verify(const json& cfg, const Options& opt, Report& rep)
{
    bool symbolic = opt.symbolic || opt.all;
    bool groups = opt.all || cfg.contains("group");
    if (!symbolic && !groups) throw UsageError("verify needs --symbolic, --all, or a group in the config");
    if (symbolic) {
        SweepConfig sc;
        if (cfg.contains("symbolic")) {
            const json& s = cfg["symbolic"];
            if (s.contains("families")) sc.families = s["families"].get<std::vector<std::string>>();
            sc.max_denominator = s.value("max_denominator", sc.max_denominator);
            sc.r_max = s.value("r_max", sc.r_max);
        }
        sc.workers = opt.workers;
        SweepResult res = symbolic_sweep(sc);
        json gaps = json::array();
        for (const auto& r : res.reports) {
            if (r.experimental) continue;
            if (!r.ok()) rep.ok = false;
            for (const auto& [b, c] : r.branches)
                if (c == 0) gaps.push_back(r.check + ":" + b);
        }
        if (!gaps.empty()) rep.ok = false;
        rep.doc["symbolic"] = res.to_json();
        rep.doc["symbolic"]["coverage_gaps"] = gaps;
    }
    if (groups) {
        std::vector<GroupSpec> specs;
        if (cfg.contains("group")) {
            specs.push_back(group_spec(cfg));
        } else {
            for (int q : {2, 3})
                for (int r : {2, 3}) {
                    GroupSpec s;
                    s.family = "SL";
                    s.n = 2;
                    s.q = q;
                    s.r = r;
                    s.x = {Rat(1, 4), Rat(-1, 4)};
                    specs.push_back(s);
                }
        }
        rep.doc["groups"] = json::array();
        for (const auto& s : specs) {
            GroupModel M(s);
            json g = {{"group", spec_json(M.spec())}, {"suites", json::array()}};
            std::vector<SuiteReport> suites = {suite_commutator_vanishing(M), suite_jump_normality(M),
                                               suite_bruhat_factorization(M), suite_stratum_orders(M),
                                               suite_torus_commutator(M)};
            json vacuous = json::array();
            for (const auto& r : suites) {
                if (r.failures > 0) rep.ok = false;
                json j = r.to_json();
                j["vacuous"] = r.checks == 0;
                if (r.checks == 0) vacuous.push_back(r.name);
                g["suites"].push_back(j);
            }
            if (!vacuous.empty()) g["warning"] = {{"no_checks", vacuous}};
            rep.doc["groups"].push_back(g);
        }
    }
}

void cmd_trace(const json& cfg, const Options& opt, Report& rep)
{
    GroupModel M(group_spec(cfg));
    Setting S(M, opt.budget);
    int t = torus_index(S, cfg.value("torus", json("split")));
    auto chars = characters(S, t, cfg);
    auto gs = elements(S, cfg, 0);
    rep.doc["group"] = spec_json(M.spec());
    rep.doc["torus"] = S.torus(t).to_json(M);
    rep.doc["characters"] = json::array();
    for (const auto& c : chars) {
        auto reg = is_regular(M, S.torus(t), c);
        auto ip = inner_product_prediction(S, t, c, t, c);
        json cj = {{"theta", character_json(c)}, {"regular", reg.regular}, {"self_inner_product", ip.count}};
        if (!ip.hypothesis) cj["warning"] = "neither character is regular";
        rep.doc["characters"].push_back(cj);
    }
    std::vector<json> rows(gs.size());
    parallel_for(gs.size(), opt.workers, [&](size_t i) {
        auto cert = S.very_regular(gs[i]);
        json row = {{"g", M.to_json(gs[i])}, {"very_regular", tri_str(cert.status)}};
        if (cert.status == Tri::Yes) {
            row["centralizer"] = S.torus(cert.torus).label;
            json vals = json::array();
            for (const auto& c : chars) vals.push_back(trace_prediction(S, t, c, gs[i]).to_json());
            row["values"] = vals;
        }
        rows[i] = row;
    });
    rep.doc["rows"] = rows;
}

void cmd_fixed_points(const json& cfg, const Options& opt, Report& rep)
{
    GroupModel M(group_spec(cfg));
    Setting S(M, opt.budget);
    int t = torus_index(S, cfg.value("torus", json("split")));
    auto levels = cfg.value("levels", std::vector<int>{1});
    auto gs = elements(S, cfg, 200);
    rep.doc["group"] = spec_json(M.spec());
    rep.doc["torus"] = S.torus(t).to_json(M);
    rep.doc["rows"] = json::array();
    for (int n : levels) {
        std::vector<json> rows(gs.size());
        std::vector<char> ok(gs.size(), 1);
        parallel_for(gs.size(), opt.workers, [&](size_t i) {
            auto fp = fixed_points(S, t, gs[i], n, opt.budget);
            ok[i] = fp.ok();
            json row = fp.to_json(M, cfg.value("with_points", false));
            row["g"] = M.to_json(gs[i]);
            rows[i] = row;
        });
        for (size_t i = 0; i < gs.size(); ++i) {
            rep.ok = rep.ok && ok[i];
            rep.doc["rows"].push_back(rows[i]);
        }
    }
    if (cfg.value("negative_control", false)) {
        auto id = lang_fixed_set(S, t, M.identity(), 1, opt.budget);
        bool larger = id.size() > S.torus(t).size();
        rep.doc["negative_control"] = {{"size", id.size()}, {"torus_points", S.torus(t).size()}, {"larger", larger}};
        rep.ok = rep.ok && larger;
    }
}

void cmd_oracle_compare(const json& cfg, const Options& opt, Report& rep)
{
    GroupModel M(group_spec(cfg));
    Setting S(M, opt.budget);
    auto chars = characters(S, 0, cfg);
    auto gs = elements(S, cfg, 0);
    rep.doc["group"] = spec_json(M.spec());
    rep.doc["characters"] = json::array();
    for (const auto& c : chars) rep.doc["characters"].push_back(character_json(c));
    std::vector<json> rows(gs.size());
    std::vector<long long> bad(gs.size(), 0);
    parallel_for(gs.size(), opt.workers, [&](size_t i) {
        auto ind = induced_characters(S, chars, gs[i]);
        json cells = json::array();
        for (size_t k = 0; k < chars.size(); ++k) {
            Cyclo pred = trace_prediction(S, 0, chars[k], gs[i]);
            bool eq = pred == ind[k];
            bad[i] += !eq;
            cells.push_back({{"prediction", pred.to_json()}, {"induced", ind[k].to_json()}, {"equal", eq}});
        }
        rows[i] = {{"g", M.to_json(gs[i])}, {"cells", cells}};
    });
    long long mismatches = 0;
    for (auto b : bad) mismatches += b;
    rep.doc["rows"] = rows;
    rep.doc["mismatches"] = mismatches;
    rep.ok = mismatches == 0;
}

void cmd_chartable(const json& cfg, const Options& opt, Report& rep)
{
    GroupModel M(group_spec(cfg));
    long long table_budget = cfg.value("table_budget", 10000LL);
    rep.doc["group"] = spec_json(M.spec());
    if (cfg.contains("match")) {
        Setting S(M, opt.budget);
        auto tab = character_table(M, S.group(), table_budget);
        rep.doc["table"] = tab.to_json(M);
        std::string why;
        rep.doc["orthogonality"] = tab.orthogonality(&why);
        rep.ok = why.empty();
        int t = torus_index(S, cfg["match"].value("torus", json("split")));
        Character c{cfg["match"].at("character").get<std::vector<int>>()};
        auto m = match_irreducible(S, tab, t, c);
        auto ip = inner_product_prediction(S, t, c, t, c);
        rep.doc["match"] = m.to_json(tab);
        rep.doc["match"]["inner_product_prediction"] = ip.count;
        rep.doc["match"]["hypothesis"] = ip.hypothesis;
    } else {
        auto G = rational_points(M, opt.budget);
        auto tab = character_table(M, G, table_budget);
        rep.doc["table"] = tab.to_json(M);
        std::string why;
        rep.doc["orthogonality"] = tab.orthogonality(&why);
        rep.ok = why.empty();
    }
}

void cmd_level_compare(const json& cfg, Report& rep)
{
    json lc = cfg.value("level_change", json::object());
    std::string family = lc.value("family", cfg.contains("group") ? cfg["group"].value("family", "GL") : "GL");
    int n = lc.value("n", cfg.contains("group") ? cfg["group"].value("n", 2) : 2);
    int q = lc.value("q", cfg.contains("group") ? cfg["group"].value("q", 3) : 3);
    int r = lc.value("r", 1), s = lc.value("s", 2);
    auto out = level_compare(family, n, q, r, s);
    rep.doc["level_change"] = out.to_json();
    rep.doc["level_change"]["family"] = family;
    rep.doc["level_change"]["n"] = n;
    rep.doc["level_change"]["q"] = q;
    rep.doc["level_change"]["r"] = r;
    rep.doc["level_change"]["s"] = s;
    rep.ok = out.ok();
}

// one line per scalar leaf, rows summarized by index
void render_table(const json& j, const std::string& prefix, std::ostream& os, int depth = 0)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            if (it->is_structured() && depth < 3)
                render_table(*it, key, os, depth + 1);
            else
                os << key << " = " << it->dump() << "\n";
        }
    } else if (j.is_array() && depth < 3 && !j.empty() && j.front().is_object()) {
        for (size_t i = 0; i < j.size(); ++i) render_table(j[i], prefix + "[" + std::to_string(i) + "]", os, depth + 1);
    } else {
        os << prefix << " = " << j.dump() << "\n";
    }
}

void emit(const Report& rep, const Options& opt)
{
    std::ostringstream os;
    if (opt.format == "table")
        render_table(rep.doc, "", os);
    else
        os << rep.doc.dump(2) << "\n";
    if (opt.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(opt.out);
        if (!f) throw UsageError("cannot write " + opt.out);
        f << os.str();
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"dlpar: parahoric Deligne-Lusztig predictions and oracles"};
    Options opt;
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "JSON configuration file");
        sub->add_option("--workers", opt.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--budget-elems", opt.budget, "enumeration budget")->check(CLI::PositiveNumber);
        sub->add_option("--out", opt.out, "write the report here instead of stdout");
        sub->add_option("--format", opt.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };
    const std::vector<std::pair<const char*, const char*>> commands = {
        {"profile", "jump profile of a point of the apartment"},
        {"verify", "symbolic containment sweep and group suites"},
        {"trace", "trace predictions at very regular elements"},
        {"fixed-points", "fixed-point sets and their cell decomposition"},
        {"oracle-compare", "predictions against the induced-character oracle"},
        {"chartable", "character table and irreducibility matching"},
        {"level-compare", "induced and inflated dimensions across levels"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub);
        if (std::string(name) == "verify") {
            sub->add_flag("--symbolic", opt.symbolic, "run the symbolic containment sweep");
            sub->add_flag("--all", opt.all, "symbolic sweep plus group suites");
        }
        sub->callback([&opt, name] { opt.command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    Report rep;
    rep.doc["command"] = opt.command;
    json cfg = json::object();
    try {
        if (!opt.config_path.empty()) {
            std::ifstream f(opt.config_path);
            if (!f) throw UsageError("cannot read " + opt.config_path);
            cfg = json::parse(f);
        }
        if (opt.command == "profile") cmd_profile(cfg, rep);
        else if (opt.command == "verify") cmd_verify(cfg, opt, rep);
        else if (opt.command == "trace") cmd_trace(cfg, opt, rep);
        else if (opt.command == "fixed-points") cmd_fixed_points(cfg, opt, rep);
        else if (opt.command == "oracle-compare") cmd_oracle_compare(cfg, opt, rep);
        else if (opt.command == "chartable") cmd_chartable(cfg, opt, rep);
        else if (opt.command == "level-compare") cmd_level_compare(cfg, rep);
    } catch (const ResourceError& e) {
        rep.doc["status"] = "budget_exceeded";
        rep.doc["error"] = e.what();
        rep.doc["partial"] = e.partial;
        emit(rep, opt);
        return kBudget;
    } catch (const json::exception& e) {
        std::cerr << "dlpar: bad configuration: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "dlpar: " << e.what() << "\n";
        return kUsage;
    } catch (const ConfigError& e) {
        std::cerr << "dlpar: unsupported configuration: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "dlpar: " << e.what() << "\n";
        return kUsage;
    } catch (const MembershipError& e) {
        std::cerr << "dlpar: " << e.what() << "\n";
        return kUsage;
    }
    rep.doc["status"] = rep.ok ? "ok" : "failed";
    try {
        emit(rep, opt);
    } catch (const UsageError& e) {
        std::cerr << "dlpar: " << e.what() << "\n";
        return kUsage;
    }
    return rep.ok ? kOk : kFailed;
}
