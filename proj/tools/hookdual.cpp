// hookdual: command-line front end. Exit codes: 0 pass, 1 fail, 2 usage error.

#include "hookdual/acceptance.hpp"
#include "hookdual/hook_walgebra.hpp"
#include "hookdual/semicoh.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace hookdual;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "hookdual.report";
constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Status { Pass, Fail, Conjectural };

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "conjectural-structure";
    }
}

struct Outcome {
    Status status = Status::Pass;
    json details;
    std::string text;
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

int thread_count() {
    if (const char* t = std::getenv("HOOKDUAL_THREADS")) {
        const int n = std::atoi(t);
        if (n < 1) throw UsageError("HOOKDUAL_THREADS must be a positive integer, got '" + std::string(t) + "'");
        return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

AlgebraId parse_algebra(const std::string& s) {
    try {
        return AlgebraId::parse(s);
    } catch (const std::exception& e) {
        throw UsageError("--algebra: " + std::string(e.what()) + " (try gl1, sl2, so5, sp4, so4, osp12)");
    }
}

Weight parse_weight(const AlgebraId& id, const std::string& s, const char* flag) {
    Weight w{id, {}};
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            w.coords.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": '" + s + "' is not a comma-separated list of integers");
        }
    }
    if (static_cast<int>(w.coords.size()) != id.rank())
        throw UsageError(std::string(flag) + ": " + id.name() + " needs " + std::to_string(id.rank()) +
                         " fundamental-weight coordinates");
    if (!w.is_dominant()) throw UsageError(std::string(flag) + ": " + weight_str(w) + " is not dominant");
    return w;
}

// "3", "3/2" or "1.5" -> doubled order.
int parse_order2(const std::string& s, const char* flag) {
    try {
        const Rational r(s.find('.') == std::string::npos ? s : std::to_string(static_cast<int>(std::stod(s) * 2)) + "/2");
        const Rational two = 2 * r;
        if (two.get_den() != 1 || two < 0) throw std::invalid_argument(s);
        return static_cast<int>(two.get_num().get_si());
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + ": '" + s + "' is not a nonnegative integer or half-integer");
    }
}

HookType parse_x(const std::string& s) {
    try {
        return parse_hook_type(s);
    } catch (const std::exception&) {
        throw UsageError("--X: '" + s + "' is not one of A, B, C, D, O");
    }
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw UsageError(msg);
}

// pretty() writes the variable as k; the inverse map is a function of l.
std::string swap_variable(std::string s) {
    for (char& c : s)
        if (c == 'k') c = 'l';
    return s;
}

json weight_json(const Weight& w) { return w.coords; }

json level_maps_json(const DualityPair& p) {
    return {{"plus_to_minus", level_map(p, LevelDirection::PlusToMinus).pretty()},
            {"minus_to_plus", level_map(p, LevelDirection::MinusToPlus).pretty()}};
}

// ---- commands ----

Outcome algebra_info(const json& q) {
    const AlgebraId id = parse_algebra(q["algebra"]);
    const RootDatum& rd = root_datum(id);
    Outcome o;
    o.details = {{"name", id.name()},
                 {"dim", id.dim()},
                 {"odd_dim", id.odd_dim()},
                 {"rank", id.rank()},
                 {"dual_coxeter", to_json(id.dual_coxeter())},
                 {"lacing", id.lacing()},
                 {"super", id.is_super()},
                 {"positive_roots", rd.positive_roots().size()},
                 {"jacobi", algebra_basis(id).super_jacobi()}};
    o.status = o.details["jacobi"].get<bool>() ? Status::Pass : Status::Fail;
    std::ostringstream t;
    t << id.name() << ": dim " << id.dim() << " (odd " << id.odd_dim() << "), rank " << id.rank() << ", h = "
      << id.dual_coxeter() << ", " << rd.positive_roots().size() << " positive roots";
    o.text = t.str();
    return o;
}

Outcome char_cmd(const json& q) {
    const AlgebraId id = parse_algebra(q["algebra"]);
    const Weight l = parse_weight(id, q["lambda"], "--lambda");
    Outcome o;
    const FiniteChar& ch = character(l);
    o.details = {{"lambda", weight_json(l)}, {"dim", ch.dim()}, {"sdim", ch.sdim()}, {"finite", to_json(ch)}};
    std::ostringstream t;
    t << "L" << weight_str(l) << ": dim " << ch.dim() << ", sdim " << ch.sdim();
    if (q.contains("order")) {
        const int order2 = q["order"];
        const GradedSeries s = weyl_module_char(l, LevelScalar::k(), order2);
        o.details["weyl_module"] = to_json(s);
        t << "\nWeyl module at level k, shift " << s.shift().str() << ":";
        for (const auto& [d, terms] : s.coeffs()) {
            long long total = 0;
            for (const auto& [w, m] : terms) total += m.total();
            t << "\n  q^" << half_str(d) << ": " << total;
        }
    }
    o.text = t.str();
    return o;
}

Outcome kernel_cmd(const json& q) {
    const AlgebraId id = parse_algebra(q["algebra"]);
    const int n = q["n"], order2 = q["order"];
    const KernelSpec spec = kernel_spec(id, n);
    const KernelChar kc = kernel_char(spec, order2);
    json sectors = json::array();
    std::ostringstream t;
    t << "kernel " << id.name() << " n=" << n << ", level partner l = " << spec.ell.pretty() << ", "
      << kc.sectors.size() << " sectors to q^" << half_str(order2);
    for (const auto& s : kc.sectors) {
        json j{{"lambda", s.lambda ? weight_json(*s.lambda) : json(nullptr)},
               {"partner", s.partner ? weight_json(*s.partner) : json(nullptr)},
               {"shift", to_json(s.lowest)},
               {"parity", s.parity}};
        if (id.family == Family::GL) j["lattice_charge"] = s.lattice_charge;
        sectors.push_back(j);
    }
    Outcome o;
    o.details = {{"family", id.name()},
                 {"n", n},
                 {"truncation", half_str(order2)},
                 {"gluing", {{"a", to_json(spec.a)}, {"b", to_json(spec.b)}, {"c", to_json(spec.c)}}},
                 {"gluing_residual", to_json(spec.gluing_residual())},
                 {"partner_level", spec.ell.pretty()},
                 {"weight_bound", kc.weight_bound},
                 {"sectors", sectors},
                 {"series", to_json(kc.series)}};
    o.status = !spec.gluing_residual().is_zero() ? Status::Fail : kc.conjectural ? Status::Conjectural : Status::Pass;
    o.text = t.str();
    return o;
}

Outcome duality_levels(const json& q) {
    const HookType x = parse_x(q["X"]);
    const int n = q["n"], m = q["m"];
    const DualityPair p = duality_pair(x, n, m);
    const HookData dp = hook_data(p.plus), dm = hook_data(p.minus);
    const LevelScalar ell = level_map(p, LevelDirection::PlusToMinus);
    const auto [ap, am] = alpha_levels(p);
    const bool relation = LevelScalar(p.r) * (LevelScalar::k() + LevelScalar(dp.h)) * (ell + LevelScalar(dm.h)) == LevelScalar(1);
    const bool involutive = level_map(p, LevelDirection::MinusToPlus, ell) == LevelScalar::k();
    Outcome o;
    o.details = {{"plus", {{"label", p.plus.name()}, {"g", dp.g}, {"h", to_json(dp.h)}, {"k_b", dp.k_b.pretty()}}},
                 {"minus", {{"label", p.minus.name()}, {"g", dm.g}, {"h", to_json(dm.h)}, {"l_b", dm.k_b.compose(ell).pretty()}}},
                 {"r", to_json(p.r)},
                 {"level_maps", level_maps_json(p)},
                 {"alpha_plus", ap.pretty()},
                 {"alpha_minus", am.pretty()},
                 {"relation_holds", relation},
                 {"involutive", involutive}};
    o.status = relation && involutive ? Status::Pass : Status::Fail;
    o.text = p.plus.name() + " <-> " + p.minus.name() + "\nl(k) = " + ell.pretty() + "\nk(l) = " +
             swap_variable(level_map(p, LevelDirection::MinusToPlus).pretty());
    return o;
}

Outcome duality_verify(const json& q) {
    const HookType x = parse_x(q["X"]);
    const int n = q["n"], m = q["m"], order2 = q["order"];
    const DualityPair p = duality_pair(x, n, m);
    const MainTheoremReport r = verify_main_theorem_char(p, order2);
    json shifts = json::array();
    for (const auto& [l, s] : r.shifts) shifts.push_back({{"lambda", l}, {"shift", to_json(s)}});
    json residuals = json::object();
    for (const auto& [d, v] : r.residual) residuals[half_str(d)] = to_json(Rational(static_cast<long>(v)));
    Outcome o;
    o.details = {{"plus", p.plus.name()},
                 {"minus", p.minus.name()},
                 {"level_maps", level_maps_json(p)},
                 {"order", half_str(order2)},
                 {"ok", r.ok},
                 {"first_mismatch", r.first_mismatch < 0 ? json(nullptr) : json(half_str(r.first_mismatch))},
                 {"detail", r.detail},
                 {"shifts", shifts},
                 {"residuals", residuals}};
    o.status = !r.ok ? Status::Fail : r.conjectural ? Status::Conjectural : Status::Pass;
    o.text = p.plus.name() + " -> " + p.minus.name() + " to q^" + half_str(order2) + ": " + r.detail;
    return o;
}

Outcome semicoh_cmd(const json& q) {
    const AlgebraId id = parse_algebra(q["algebra"]);
    const Weight l = parse_weight(id, q["lambda"], "--lambda"), mu = parse_weight(id, q["mu"], "--mu");
    const int N = q["maxweight"];
    const SemicohReport h = relative_semicoh(l, mu, N, thread_count());
    json blocks = json::array();
    for (const auto& b : h.blocks)
        blocks.push_back({{"degree", b.degree}, {"weight", b.weight}, {"dim", b.dim}, {"states", b.states},
                          {"invariants", b.invariants}, {"rank", b.rank}});
    json witness = nullptr;
    if (h.witness) {
        json terms = json::array();
        for (const auto& t : h.witness->terms) terms.push_back({{"monomial", t.state}, {"coeff", to_json(t.coeff)}});
        witness = {{"weight", h.witness->weight},
                   {"terms", terms},
                   {"invariant", h.witness->invariant},
                   {"closed", h.witness->closed},
                   {"non_exact", h.witness->non_exact}};
    }
    const long expected = dual_weight(mu) == l ? 1 : 0;
    const bool witness_ok = expected == 0 || (h.witness && h.witness->invariant && h.witness->closed && h.witness->non_exact);
    Outcome o;
    o.details = {{"lambda", weight_json(l)},
                 {"mu", weight_json(mu)},
                 {"level_l", h.ell.pretty()},
                 {"blocks", blocks},
                 {"total_dim", h.total_dim()},
                 {"expected_dim", expected},
                 {"concentrated_in_degree_zero", h.concentrated_in_degree_zero()},
                 {"relative", h.relative},
                 {"square_zero", h.square_zero},
                 {"witness", witness},
                 {"failures", h.failures}};
    if (id.family == Family::GL)
        o.details["precondition"] = "Fock pairing of charges at generic level: assumed, not decided";
    const bool ok = h.failures.empty() && h.concentrated_in_degree_zero() && h.total_dim() == expected && witness_ok;
    o.status = ok ? Status::Pass : Status::Fail;
    std::ostringstream t;
    t << id.name() << " " << weight_str(l) << " (x) " << weight_str(mu) << " to weight " << N << ", l = " << h.ell.pretty();
    for (const auto& b : h.blocks)
        if (b.dim) t << "\n  H^" << b.degree << " at weight " << b.weight << ": " << b.dim;
    t << "\n  total " << h.total_dim() << " (expected " << expected << ")";
    if (h.witness) t << ", witness with " << h.witness->terms.size() << " terms";
    o.text = t.str();
    return o;
}

Outcome ce_verify(const json& q) {
    Outcome o;
    json checks = json::array();
    bool ok = true;
    const auto record = [&](const std::string& what, const std::optional<std::string>& failure) {
        checks.push_back({{"check", what}, {"square_zero", !failure}, {"failure", failure ? json(*failure) : json(nullptr)}});
        ok = ok && !failure;
    };
    if (q.contains("algebra")) {
        const AlgebraId id = parse_algebra(q["algebra"]);
        const Weight l = parse_weight(id, q["lambda"], "--lambda");
        const int N = q["maxweight"], deg = q["degree"];
        const WeylModule m(l, LevelScalar::k(), N);
        record("loop_plus cochains", CEComplex<LevelScalar>(loop_plus(id, N), loop_plus_module(m), CEDirection::Cochain, deg, N)
                                         .square_zero_failure());
        record("loop_minus chains", CEComplex<LevelScalar>(loop_minus(id, N), loop_minus_module(m), CEDirection::Chain, deg, N)
                                        .square_zero_failure());
        const SemicohReport h = relative_semicoh(l, dual_weight(l), N, thread_count());
        record("semi-infinite", h.square_zero ? std::nullopt : std::optional<std::string>("d^2 != 0"));
    }
    const int count = q["random"];
    const auto algebras = random_superalgebras(q["seed"].get<std::uint64_t>(), count);
    for (std::size_t i = 0; i < algebras.size(); ++i) {
        const GradedAlgebra a = GradedAlgebra::ungraded(algebras[i]);
        for (auto dir : {CEDirection::Cochain, CEDirection::Chain})
            record("random " + std::to_string(i) + (dir == CEDirection::Cochain ? " cochains" : " chains"),
                   CEComplex<Rational>(a, adjoint_module<Rational>(a), dir, 3, 0).square_zero_failure());
    }
    o.details = {{"checks", checks}};
    o.status = ok ? Status::Pass : Status::Fail;
    o.text = std::to_string(checks.size()) + " complexes, " + (ok ? "all square to zero" : "some fail d^2 = 0");
    return o;
}

Outcome ep_check_cmd(const json& q) {
    const AlgebraId id = parse_algebra(q["algebra"]);
    const Weight l = parse_weight(id, q["lambda"], "--lambda"), mu = parse_weight(id, q["mu"], "--mu");
    const int N = q["maxweight"];
    const EulerPoincareReport r = ep_check(l, mu, N, thread_count());
    Outcome o;
    o.details = {{"lambda", weight_json(l)},
                 {"mu", weight_json(mu)},
                 {"series", to_json(r.series)},
                 {"matches_delta", r.matches_delta},
                 {"ep_coeff", r.ep_coeff},
                 {"invariant_sum", r.invariant_sum},
                 {"cohomology_sum", r.cohomology_sum},
                 {"consistent", r.consistent}};
    o.status = r.matches_delta && r.consistent ? Status::Pass : Status::Fail;
    std::ostringstream t;
    t << "Euler-Poincare coefficients by weight:";
    for (long c : r.ep_coeff) t << " " << c;
    t << (r.matches_delta ? "; equals delta" : "; does not equal delta")
      << (r.consistent ? ", consistent with cohomology" : ", inconsistent with cohomology");
    o.text = t.str();
    return o;
}

Outcome suite(const json& q) {
    const Profile profile = parse_profile(q["profile"]);
    std::optional<TableFault> fault;
    if (q.contains("corrupt")) fault = TableFault{q["corrupt"]["pair"], q["corrupt"]["cell"]};
    json criteria = json::array();
    bool pass = true, conjectural = false;
    std::ostringstream t;
    for (int id = 1; id <= kCriteria; ++id) {
        const CriterionResult r = run_criterion(id, profile, thread_count(), fault);
        criteria.push_back(r.to_json(false));
        pass = pass && r.pass;
        for (const auto& n : r.notes) conjectural = conjectural || n.find("conjectural") != std::string::npos;
        t << "criterion " << id << " " << (r.pass ? "PASS" : "FAIL") << ": " << r.title << "\n";
        for (const auto& f : r.failures) t << "  failed: " << f << "\n";
    }
    Outcome o;
    o.details = {{"profile", profile_name(profile)}, {"criteria", criteria}, {"conjectural_notes", conjectural}};
    o.status = pass ? Status::Pass : Status::Fail;
    o.text = t.str();
    if (!o.text.empty()) o.text.pop_back();
    return o;
}

Outcome dispatch(const json& request) {
    const std::string& cmd = request["command"].get_ref<const std::string&>();
    const json& q = request["params"];
    if (cmd == "algebra-info") return algebra_info(q);
    if (cmd == "char") return char_cmd(q);
    if (cmd == "kernel") return kernel_cmd(q);
    if (cmd == "duality-levels") return duality_levels(q);
    if (cmd == "duality-verify") return duality_verify(q);
    if (cmd == "semicoh") return semicoh_cmd(q);
    if (cmd == "ce-verify") return ce_verify(q);
    if (cmd == "ep-check") return ep_check_cmd(q);
    if (cmd == "suite") return suite(q);
    throw UsageError("unknown command " + cmd);
}

// ---- cache ----

class Cache {
public:
    Cache() {
        if (const char* d = std::getenv("HOOKDUAL_CACHE_DIR"); d && *d) dir_ = d;
    }

    std::optional<json> load(const json& request, const std::string& key) const {
        if (dir_.empty()) return std::nullopt;
        const auto path = dir_ / (key + ".json");
        std::ifstream in(path);
        if (!in) return std::nullopt;
        try {
            const json entry = json::parse(in);
            const json& report = entry.at("report");
            if (entry.at("request") != request || entry.at("digest") != hex(fnv1a(report.dump())))
                throw std::runtime_error("digest mismatch");
            return report;
        } catch (const std::exception& e) {
            std::cerr << "hookdual: ignoring corrupted cache entry " << path.string() << " (" << e.what() << ")\n";
            return std::nullopt;
        }
    }

    void store(const json& request, const std::string& key, const json& report) const {
        if (dir_.empty()) return;
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        const auto path = dir_ / (key + ".json");
        const auto tmp = dir_ / (key + ".tmp");
        {
            std::ofstream out(tmp);
            out << json{{"request", request}, {"digest", hex(fnv1a(report.dump()))}, {"report", report}}.dump(2) << "\n";
            if (!out) return;
        }
        std::filesystem::rename(tmp, path, ec);
    }

private:
    std::filesystem::path dir_;
};

}  // namespace

int main(int argc, char** argv) {
    // "duality verify" and "duality levels" are spellings of duality-verify and duality-levels.
    std::vector<std::string> args(argv, argv + argc);
    if (args.size() > 2 && args[1] == "duality" && (args[2] == "verify" || args[2] == "levels")) {
        args[1] = "duality-" + args[2];
        args.erase(args.begin() + 2);
    }

    CLI::App app{"Character-level checks for Feigin-Frenkel type dualities of hook-type W-superalgebras", "hookdual"};
    app.require_subcommand(1);
    std::string json_path, format = "text";
    app.add_option("--json", json_path, "Write the JSON report to this path");
    app.add_option("--format", format, "Stdout format")->check(CLI::IsMember({"text", "json"}));

    std::string algebra, lambda, mu, X, order = "3", profile = "fast", corrupt;
    int n = 1, m = 1, maxweight = 2, degree = 2, random = 0;
    std::uint64_t seed = 20261015;
    bool with_order = false;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--json", json_path, "Write the JSON report to this path");
        sub->add_option("--format", format, "Stdout format")->check(CLI::IsMember({"text", "json"}));
    };
    const auto add_hook = [&](CLI::App* sub) {
        sub->add_option("--X", X, "Hook type A, B, C, D or O")->required();
        sub->add_option("--n", n, "n >= 1")->check(CLI::PositiveNumber);
        sub->add_option("--m", m, "m >= 1")->check(CLI::PositiveNumber);
    };

    auto* info = app.add_subcommand("algebra-info", "Dimensions, dual Coxeter number and roots of an algebra");
    info->add_option("--algebra", algebra, "e.g. sl2, osp12, so5")->required();
    auto* chr = app.add_subcommand("char", "Finite character, and the Weyl module character with --order");
    chr->add_option("--algebra", algebra)->required();
    chr->add_option("--lambda", lambda, "Fundamental-weight coordinates, comma separated")->required();
    auto* chr_order = chr->add_option("--order", order, "q-truncation (integer or half-integer)");
    auto* ker = app.add_subcommand("kernel", "Kernel-algebra character");
    ker->add_option("--algebra", algebra)->required();
    ker->add_option("--n", n)->check(CLI::PositiveNumber);
    ker->add_option("--order", order);
    auto* lev = app.add_subcommand("duality-levels", "Level maps and alpha levels of a duality pair");
    add_hook(lev);
    auto* ver = app.add_subcommand("duality-verify", "Character-level main theorem for a duality pair");
    add_hook(ver);
    ver->add_option("--order", order);
    auto* sc = app.add_subcommand("semicoh", "Relative semi-infinite cohomology of V_lambda (x) V_mu");
    auto* ep = app.add_subcommand("ep-check", "Euler-Poincare check against the cohomology");
    for (auto* sub : {sc, ep}) {
        sub->add_option("--algebra", algebra)->required();
        sub->add_option("--lambda", lambda)->required();
        sub->add_option("--mu", mu)->required();
        sub->add_option("--maxweight", maxweight, "Truncation weight")->check(CLI::Range(0, 6));
    }
    auto* ce = app.add_subcommand("ce-verify", "d^2 = 0 on loop, semi-infinite and random complexes");
    ce->add_option("--algebra", algebra);
    ce->add_option("--lambda", lambda);
    ce->add_option("--maxweight", maxweight)->check(CLI::Range(0, 4));
    ce->add_option("--degree", degree, "Top CE degree")->check(CLI::Range(0, 4));
    ce->add_option("--random", random, "Number of random superalgebras")->check(CLI::Range(0, 100));
    ce->add_option("--seed", seed);
    auto* su = app.add_subcommand("suite", "Acceptance battery");
    su->add_option("--profile", profile)->check(CLI::IsMember({"fast", "full"}));
    su->add_option("--corrupt", corrupt, "Corrupt a table cell, PAIR:CELL, e.g. 'C(1,1):r'");
    for (auto* sub : {info, chr, ker, lev, ver, sc, ep, ce, su}) add_common(sub);

    std::vector<const char*> cargs;
    for (const auto& a : args) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), const_cast<char**>(cargs.data()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    with_order = chr_order->count() > 0;

    const auto t0 = std::chrono::steady_clock::now();
    json request;
    Outcome outcome;
    bool cached = false;
    try {
        CLI::App* sub = app.get_subcommands().front();
        json params = json::object();
        const std::string cmd = sub->get_name();
        if (cmd == "algebra-info") params = {{"algebra", algebra}};
        else if (cmd == "char") {
            params = {{"algebra", algebra}, {"lambda", lambda}};
            if (with_order) params["order"] = parse_order2(order, "--order");
        } else if (cmd == "kernel") params = {{"algebra", algebra}, {"n", n}, {"order", parse_order2(order, "--order")}};
        else if (cmd == "duality-levels") params = {{"X", X}, {"n", n}, {"m", m}};
        else if (cmd == "duality-verify") params = {{"X", X}, {"n", n}, {"m", m}, {"order", parse_order2(order, "--order")}};
        else if (cmd == "semicoh" || cmd == "ep-check")
            params = {{"algebra", algebra}, {"lambda", lambda}, {"mu", mu}, {"maxweight", maxweight}};
        else if (cmd == "ce-verify") {
            require(!algebra.empty() || random > 0, "ce-verify needs --algebra and --lambda, or --random N");
            require(algebra.empty() == lambda.empty(), "ce-verify: --algebra and --lambda go together");
            params = {{"random", random}, {"seed", seed}};
            if (!algebra.empty()) {
                params["algebra"] = algebra;
                params["lambda"] = lambda;
                params["maxweight"] = maxweight;
                params["degree"] = degree;
            }
        } else if (cmd == "suite") {
            params = {{"profile", profile}};
            if (!corrupt.empty()) {
                const auto colon = corrupt.rfind(':');
                require(colon != std::string::npos, "--corrupt: expected PAIR:CELL, e.g. 'C(1,1):r'");
                params["corrupt"] = {{"pair", corrupt.substr(0, colon)}, {"cell", corrupt.substr(colon + 1)}};
            }
        }
        request = {{"command", cmd}, {"params", params}};
        if (cmd == "ce-verify" || cmd == "semicoh" || cmd == "ep-check" || cmd == "char" || cmd == "kernel") {
            // Validate the algebra and weights before any cache lookup.
            if (params.contains("algebra")) {
                const AlgebraId id = parse_algebra(params["algebra"]);
                if (params.contains("lambda")) parse_weight(id, params["lambda"], "--lambda");
                if (params.contains("mu")) parse_weight(id, params["mu"], "--mu");
            }
        }

        const Cache cache;
        const std::string key = hex(fnv1a(request.dump()));
        if (auto hit = cache.load(request, key)) {
            outcome.status = Status::Pass;
            outcome.details = (*hit)["details"];
            outcome.text = (*hit)["text"];
            cached = true;
        } else {
            outcome = dispatch(request);
            if (outcome.status == Status::Pass)
                cache.store(request, key, {{"details", outcome.details}, {"text", outcome.text}});
        }
    } catch (const UsageError& e) {
        std::cerr << "hookdual: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hookdual: invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "hookdual: error: " << e.what() << "\n";
        return 1;
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const json report{{"schema", kSchema},
                      {"version", kSchemaVersion},
                      {"request", request},
                      {"status", status_name(outcome.status)},
                      {"details", outcome.details},
                      {"timing", {{"seconds", seconds}, {"cached", cached}}}};
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << report.dump(2) << "\n";
        if (!out) {
            std::cerr << "hookdual: cannot write " << json_path << "\n";
            return 2;
        }
    }
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << outcome.text << "\nstatus: " << status_name(outcome.status) << "\n";
    return outcome.status == Status::Fail ? 1 : 0;
}
