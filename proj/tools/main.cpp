// removal-lab: batch experiment runner over the F_p^n triangle laboratory.
//
// Every subcommand writes <out>/<command>.json (ExperimentRecord) plus an
// optional CSV, prints a one-line summary, and is reproducible given
// --seed.  Exit codes: 0 ok, 2 validation error, 3 capacity/budget error,
// 64 usage error.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <string>

#include "removal/constructions.hpp"
#include "removal/exponents.hpp"
#include "removal/generate.hpp"
#include "removal/io.hpp"
#include "removal/oracle.hpp"
#include "removal/procedures.hpp"
#include "removal/record.hpp"
#include "removal/rng.hpp"
#include "removal/transform.hpp"

namespace {

using namespace removal;

struct CommonFlags {
    std::string out_dir;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonFlags& common) {
    cmd->add_option("--out", common.out_dir, "output directory (default: $REMOVAL_LAB_OUT or ./out)");
    cmd->add_option("--seed", common.seed, "master seed (default 0)");
    cmd->configurable();   // [subcommand] section in a --config file
    cmd->fallthrough();    // let --config after the subcommand reach the app
}

Rational parse_rational_arg(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational::of(static_cast<i128>(std::stoll(text)), 1);
        return Rational::of(static_cast<i128>(std::stoll(text.substr(0, slash))),
                            static_cast<i128>(std::stoll(text.substr(slash + 1))));
    } catch (const std::exception&) {
        throw ValidationError("cannot parse rational '" + text + "' (use a/b)");
    }
}

void finish(ExperimentRecord& rec, const CommonFlags& common,
            std::chrono::steady_clock::time_point started) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    rec.set_wall_millis(static_cast<std::uint64_t>(ms));
    std::string path = rec.write(resolve_out_dir(common.out_dir));
    std::cout << rec.summary() << " -> " << path << "\n";
}

// ---- subcommand bodies ----

void run_exponents(unsigned p, double tol, bool closed, const CommonFlags& common,
                   std::chrono::steady_clock::time_point started) {
    ExponentTable t = closed ? closed_form(p) : solve_exponent(p, tol);
    PruneSchedule sched = build_prune_schedule(p);
    ExperimentRecord rec("exponents", common.seed);
    rec.param_int("p", p);
    rec.param("mode", closed ? "closed-form" : "optimizer");
    rec.out_real("c_p", t.c_p);
    rec.out_real("capital_c_p", t.C_p);
    rec.out_real("x_star", t.x_star);
    rec.out_real("h_star", t.h_star);
    if (t.a) rec.out_real("a", *t.a);
    if (t.b) rec.out_real("b", *t.b);
    rec.out_real("schedule_a_p", sched.a_p);
    rec.out_int("schedule_a_p_log2", static_cast<std::uint64_t>(sched.a_p_log2));
    finish(rec, common, started);
}

void run_count(const std::string& instance, const std::string& method, unsigned bit_budget,
               const CommonFlags& common, std::chrono::steady_clock::time_point started) {
    TripleSystem sys = load_system(instance);
    ExperimentRecord rec("count", common.seed);
    rec.param("instance", instance);
    rec.param("method", method);
    rec.param_int("p", sys.params.p());
    rec.param_int("n", sys.params.n());

    std::uint64_t value = 0;
    if (method == "naive") {
        value = count_naive(sys);
        rec.out_int("count", value);
    } else if (method == "transform") {
        value = count_transform(sys, TransformConfig{bit_budget});
        rec.out_int("count", value);
    } else if (method == "both") {
        std::uint64_t naive = count_naive(sys);
        std::uint64_t transform = count_transform(sys, TransformConfig{bit_budget});
        if (naive != transform)
            throw std::runtime_error("count mismatch: naive=" + std::to_string(naive) +
                                     " transform=" + std::to_string(transform));
        value = naive;
        rec.out_int("count", value);
        rec.out_int("count_naive", naive);
        rec.out_int("count_transform", transform);
    } else {
        throw ValidationError("unknown method '" + method + "'");
    }
    const i128 N = static_cast<i128>(sys.params.order());
    rec.out_rational("delta", Rational::of(static_cast<i128>(value), N * N));
    finish(rec, common, started);
}

void run_degrees(const std::string& instance, bool with_csv, const CommonFlags& common,
                 std::chrono::steady_clock::time_point started) {
    TripleSystem sys = load_system(instance);
    TriangleStats st = degree_profile(sys);
    ExperimentRecord rec("degrees", common.seed);
    rec.param("instance", instance);
    rec.out_int("total", st.total);
    rec.out_rational("delta", st.delta);
    rec.out_int("max_degree", st.max_degree);
    rec.out_rational("rho", st.rho);
    if (with_csv) {
        rec.csv_header({"role", "point", "degree"});
        for (Point a : sys.X.members())
            rec.csv_row({"X", std::to_string(a), std::to_string(st.deg_x[a])});
        for (Point a : sys.Y.members())
            rec.csv_row({"Y", std::to_string(a), std::to_string(st.deg_y[a])});
        for (Point a : sys.Z.members())
            rec.csv_row({"Z", std::to_string(a), std::to_string(st.deg_z[a])});
    }
    finish(rec, common, started);
}

void run_construct(const std::string& kind, unsigned p, unsigned n, unsigned t,
                   std::uint64_t m, std::uint64_t size_x, std::uint64_t size_y,
                   std::uint64_t size_z, const std::string& write_path,
                   const CommonFlags& common, std::chrono::steady_clock::time_point started) {
    ExperimentRecord rec("construct", common.seed);
    rec.param("kind", kind);
    rec.param_int("p", p);
    if (kind == "random-system") {
        GroupParams g(p, n);
        TripleSystem sys = size_x + size_y + size_z > 0
                               ? random_system(g, size_x, size_y, size_z, common.seed)
                               : random_system_budgeted(g, 1 << 16, common.seed);
        if (!write_path.empty()) save_system(sys, write_path);
        rec.param_int("n", n);
        rec.out_int("size_x", sys.X.size());
        rec.out_int("size_y", sys.Y.size());
        rec.out_int("size_z", sys.Z.size());
        rec.out_int("count", count_naive(sys));
    } else if (kind == "singleton") {
        GroupParams g(p, n);
        MatchedTriples single = random_singleton(g, common.seed);
        if (!write_path.empty()) save_matched(single, write_path);
        rec.param_int("n", n);
        rec.out_int("m", 1);
    } else if (kind == "diagonal") {
        MatchedTriples diag = common.seed == 0 ? diagonal_matching(p, t, m)
                                               : diagonal_matching_seeded(p, t, m, common.seed);
        if (!write_path.empty()) save_matched(diag, write_path);
        rec.param_int("t", t);
        rec.out_int("m", diag.triples.size());
        rec.out_int("n", diag.params.n());
        rec.out_bool("verified", verify_matching(diag));
    } else {
        throw ValidationError("unknown construct kind '" + kind + "'");
    }
    if (!write_path.empty()) rec.out_text("written", write_path);
    finish(rec, common, started);
}

void run_lift(const std::string& instance, const std::string& write_path,
              const CommonFlags& common, std::chrono::steady_clock::time_point started) {
    MatchedTriples m = load_matched(instance);
    MatchedTriples lifted = lift_plus_two(m);
    std::uint64_t before = count_naive(system_from(m));
    std::uint64_t after = count_naive(system_from(lifted));
    if (!write_path.empty()) save_matched(lifted, write_path);
    ExperimentRecord rec("lift", common.seed);
    rec.param("instance", instance);
    rec.out_int("m", lifted.triples.size());
    rec.out_int("n_before", m.params.n());
    rec.out_int("n_after", lifted.params.n());
    rec.out_int("count_before", before);
    rec.out_int("count_after", after);
    rec.out_bool("count_preserved", before == after);
    if (!write_path.empty()) rec.out_text("written", write_path);
    finish(rec, common, started);
}

void run_tensor(const std::string& instance, unsigned k, bool audit,
                const std::string& write_path, const CommonFlags& common,
                std::chrono::steady_clock::time_point started) {
    Instance inst = load_instance(instance);
    ExperimentRecord rec("tensor", common.seed);
    rec.param("instance", instance);
    rec.param_int("k", k);
    if (auto* m = std::get_if<MatchedTriples>(&inst)) {
        if (!verify_matching(*m)) throw ValidationError("input collection is not a matching");
        m->cross_free_verified = true;
        MatchedTriples powered = tensor_power_matched(*m, k);
        rec.out_int("m_base", m->triples.size());
        rec.out_int("m_power", powered.triples.size());
        rec.out_bool("verified", verify_matching(powered));
        if (!write_path.empty()) {
            save_matched(powered, write_path);
            rec.out_text("written", write_path);
        }
    } else {
        TripleSystem& sys = std::get<TripleSystem>(inst);
        if (audit) {
            auto rows = amplification_audit(sys, k);
            rec.csv_header({"k", "count"});
            for (auto [kk, c] : rows)
                rec.csv_row({std::to_string(kk), std::to_string(c)});
            rec.out_int("count_base", count_naive(sys));
            rec.out_int("count_power", rows.empty() ? count_naive(sys) : rows.back().second);
            rec.out_bool("multiplicative", true);  // audit throws on divergence
        } else {
            TripleSystem powered = tensor_power_system(sys, k);
            rec.out_int("count_base", count_naive(sys));
            rec.out_int("count_power", count_naive(powered));
            if (!write_path.empty()) {
                save_system(powered, write_path);
                rec.out_text("written", write_path);
            }
        }
    }
    finish(rec, common, started);
}

void run_blowup(const std::string& instance, unsigned l, const std::string& write_path,
                const CommonFlags& common, std::chrono::steady_clock::time_point started) {
    MatchedTriples m = load_matched(instance);
    if (!verify_matching(m)) throw ValidationError("input collection is not a matching");
    m.cross_free_verified = true;
    BlowupResult b = product_blowup(m, l);
    ExperimentRecord rec("blowup", common.seed);
    rec.param("instance", instance);
    rec.param_int("l", l);
    rec.out_int("m", m.triples.size());
    rec.out_int("n_out", b.params.n());
    rec.out_int128("triangle_count", b.triangle_count);
    rec.out_int128("min_deletion_formula", b.min_deletion_formula);
    rec.out_bool("materialized", b.dense.has_value());
    if (b.dense) rec.out_int("count_recount", count_naive(*b.dense));
    if (!write_path.empty()) {
        if (!b.dense)
            throw CapacityError("blow-up too large to materialize for --write");
        save_system(*b.dense, write_path);
        rec.out_text("written", write_path);
    }
    finish(rec, common, started);
}

void run_greedy(const std::string& instance, const std::string& write_path,
                const CommonFlags& common, std::chrono::steady_clock::time_point started) {
    TripleSystem sys = load_system(instance);
    MatchedTriples got = greedy_disjoint(sys);
    ExperimentRecord rec("greedy", common.seed);
    rec.param("instance", instance);
    rec.out_int("matching_size", got.triples.size());
    rec.out_int("count", count_naive(sys));
    if (!write_path.empty()) {
        save_matched(got, write_path);
        rec.out_text("written", write_path);
    }
    finish(rec, common, started);
}

void run_prune(const std::string& instance, const std::string& eps_text,
               const CommonFlags& common, std::chrono::steady_clock::time_point started) {
    TripleSystem sys = load_system(instance);
    Rational eps = parse_rational_arg(eps_text);
    PruneSchedule sched = build_prune_schedule(sys.params.p());
    PruneTrace trace = prune_high_degree(sys, eps, sched);
    ExperimentRecord rec("prune", common.seed);
    rec.param("instance", instance);
    rec.param("eps", eps.str());
    rec.out_int("count_before", count_naive(sys));
    rec.out_int("count_after", trace.final_count);
    rec.out_int("removed_points", trace.steps.size());
    rec.out_real("schedule_a_p", sched.a_p);
    rec.csv_header({"step", "role", "point", "degree_at_removal", "delta_prime_after"});
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const PruneStep& s = trace.steps[i];
        rec.csv_row({std::to_string(i), std::string(1, role_letter(s.role)),
                     std::to_string(s.point), std::to_string(s.degree_at_removal),
                     s.delta_prime_after.str()});
    }
    finish(rec, common, started);
}

void run_subspace_sim(const std::string& instance, unsigned d, std::uint64_t trials,
                      unsigned threads, std::int64_t membership_point, bool audit_claims,
                      const CommonFlags& common,
                      std::chrono::steady_clock::time_point started) {
    ExperimentRecord rec("subspace-sim", common.seed);
    rec.param("instance", instance);
    rec.param_int("d", d);
    rec.param_int("trials", trials);
    if (membership_point >= 0) {
        TripleSystem sys = load_system(instance);
        const GroupParams& g = sys.params;
        Point v = static_cast<Point>(membership_point);
        double freq = membership_frequency(g, v, d, trials, common.seed);
        double expect = static_cast<double>(g.pow_p(d) - 1) / (g.order() - 1);
        rec.param_int("membership_point", v);
        rec.out_real("frequency", freq);
        rec.out_real("expected", expect);
        rec.out_real("std_error", std::sqrt(expect * (1 - expect) / trials));
    } else {
        TripleSystem sys = load_system(instance);
        SubspaceExperimentReport rep =
            subspace_experiment(sys, d, trials, common.seed, threads, audit_claims);
        rec.out_int("total_restricted", rep.total_restricted);
        rec.out_int("total_good", rep.total_good);
        rec.out_int("max_good_single_trial", rep.max_good_single_trial);
        rec.out_real("mean_restricted", rep.mean_restricted);
        rec.out_real("mean_good", rep.mean_good);
        rec.out_real("good_fraction_given_survival", rep.good_fraction_given_survival);
        rec.out_real("good_mean_floor", rep.good_mean_floor);
        rec.out_real("capacity", rep.capacity);
        TriangleStats st = degree_profile(sys);
        if (st.max_degree > 0) {
            RestrictionDimension ld = restriction_dimension(sys.params.p(), st.rho);
            rec.out_int("suggested_d", ld.d);
            rec.out_bool("suggested_d_below_three", ld.below_three);
        }
    }
    finish(rec, common, started);
}

void run_oracle_mindel(const std::string& instance, std::uint64_t max_nodes,
                       double max_seconds, const CommonFlags& common,
                       std::chrono::steady_clock::time_point started) {
    TripleSystem sys = load_system(instance);
    MinDeletionResult r = min_deletion_exact(sys, OracleBudget{max_nodes, max_seconds});
    ExperimentRecord rec("oracle-mindel", common.seed);
    rec.param("instance", instance);
    rec.out_int("min_deletion", r.value);
    rec.out_text("status", r.status == OracleStatus::Exact ? "exact" : "budget-exhausted");
    rec.out_int("lower", r.lower);
    rec.out_int("upper", r.upper);
    rec.out_int("nodes", r.nodes);
    rec.csv_header({"role", "point"});
    for (const DeletionVertex& v : r.deleted)
        rec.csv_row({std::string(1, role_letter(v.role)), std::to_string(v.point)});
    finish(rec, common, started);
}

void run_oracle_maxmatch(unsigned p, unsigned n, std::uint64_t max_nodes, double max_seconds,
                         bool no_cap, const std::string& write_path,
                         const CommonFlags& common,
                         std::chrono::steady_clock::time_point started) {
    MaxMatchedResult r = max_matched_exact(p, n, OracleBudget{max_nodes, max_seconds}, !no_cap);
    ExperimentRecord rec("oracle-maxmatch", common.seed);
    rec.param_int("p", p);
    rec.param_int("n", n);
    rec.param_int("cap_pruning", no_cap ? 0 : 1);
    rec.out_int("m", r.best.triples.size());
    rec.out_text("status", r.status == OracleStatus::Exact ? "exact" : "budget-exhausted");
    rec.out_int("nodes", r.nodes);
    if (r.cap) rec.out_int("sumfree_cap", r.cap);
    rec.out_bool("verified", r.best.cross_free_verified);
    if (!write_path.empty()) {
        save_matched(r.best, write_path);
        rec.out_text("written", write_path);
    }
    finish(rec, common, started);
}

void run_audit(const std::string& instance, std::uint64_t max_nodes, double max_seconds,
               const CommonFlags& common, std::chrono::steady_clock::time_point started) {
    TripleSystem sys = load_system(instance);
    RemovalBoundAudit a = removal_bound_audit(sys, OracleBudget{max_nodes, max_seconds});
    ExperimentRecord rec("audit", common.seed);
    rec.param("instance", instance);
    if (!a.solved) {
        rec.out_bool("solved", false);
        rec.out_text("skip_reason", "deletion oracle budget exhausted");
    } else {
        rec.out_bool("solved", true);
        rec.out_int("triangles", a.triangles);
        rec.out_int("min_deletion", a.min_deletion);
        rec.out_real("rhs", a.rhs);
        rec.out_bool("holds", a.holds);
    }
    finish(rec, common, started);
}

void run_frontier(unsigned p, unsigned base_n, const std::string& base_file, unsigned k_max,
                  std::uint64_t max_nodes, double max_seconds, const CommonFlags& common,
                  std::chrono::steady_clock::time_point started) {
    MatchedTriples base = [&] {
        if (!base_file.empty()) {
            MatchedTriples m = load_matched(base_file);
            if (!verify_matching(m)) throw ValidationError("base file is not a matching");
            m.cross_free_verified = true;
            return m;
        }
        MaxMatchedResult r =
            max_matched_exact(p, base_n, OracleBudget{max_nodes, max_seconds});
        return r.best;
    }();

    auto rows = family_curve({base}, k_max);
    ExperimentRecord rec("frontier", common.seed);
    rec.param_int("p", p);
    rec.param_int("base_n", base.params.n());
    rec.param_int("k_max", k_max);
    rec.out_int("base_m", base.triples.size());
    rec.out_int("rows", rows.size());
    if (!rows.empty()) rec.out_real("exponent", rows.front().exponent);
    double cap = solve_exponent(p).C_p;
    rec.out_real("capital_c_p", cap);
    rec.csv_header({"n", "m", "epsilon", "delta", "exponent"});
    for (const FamilyPoint& r : rows)
        rec.csv_row({std::to_string(r.n), to_string(r.m), r.epsilon.str(), r.delta.str(),
                     ExperimentRecord::format_real(r.exponent)});
    finish(rec, common, started);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"removal-lab: an F_p^n triangle removal laboratory"};
    app.require_subcommand(1);
    app.set_config("--config");

    auto started = std::chrono::steady_clock::now();

    // exponents
    CommonFlags c_exp;
    unsigned exp_p = 2;
    double exp_tol = 1e-12;
    bool exp_closed = false;
    CLI::App* cmd_exp = app.add_subcommand("exponents", "c_p, C_p, minimizer, schedule");
    cmd_exp->add_option("--p", exp_p, "prime")->required();
    cmd_exp->add_option("--tol", exp_tol, "bracket tolerance");
    cmd_exp->add_flag("--closed-form", exp_closed, "use the p in {2,3} closed forms");
    add_common(cmd_exp, c_exp);

    // count
    CommonFlags c_count;
    std::string count_instance, count_method = "both";
    unsigned count_bits = 62;
    CLI::App* cmd_count = app.add_subcommand("count", "exact triangle count");
    cmd_count->add_option("--instance", count_instance, "instance file")->required();
    cmd_count->add_option("--method", count_method, "naive|transform|both");
    cmd_count->add_option("--bit-budget", count_bits, "modulus bit budget");
    add_common(cmd_count, c_count);

    // degrees
    CommonFlags c_deg;
    std::string deg_instance;
    bool deg_csv = false;
    CLI::App* cmd_deg = app.add_subcommand("degrees", "degree profile and rho");
    cmd_deg->add_option("--instance", deg_instance, "instance file")->required();
    cmd_deg->add_flag("--csv", deg_csv, "emit per-point degrees as CSV");
    add_common(cmd_deg, c_deg);

    // construct
    CommonFlags c_cons;
    std::string cons_kind = "random-system", cons_write;
    unsigned cons_p = 2, cons_n = 3, cons_t = 1;
    std::uint64_t cons_m = 1, cons_sx = 0, cons_sy = 0, cons_sz = 0;
    CLI::App* cmd_cons = app.add_subcommand("construct", "seeded instance generators");
    cmd_cons->add_option("--kind", cons_kind, "random-system|singleton|diagonal");
    cmd_cons->add_option("--p", cons_p, "prime")->required();
    cmd_cons->add_option("--n", cons_n, "dimension (random-system/singleton)");
    cmd_cons->add_option("--t", cons_t, "tag dimension (diagonal; n = 2t)");
    cmd_cons->add_option("--m", cons_m, "collection size (diagonal)");
    cmd_cons->add_option("--size-x", cons_sx, "X size (random-system)");
    cmd_cons->add_option("--size-y", cons_sy, "Y size (random-system)");
    cmd_cons->add_option("--size-z", cons_sz, "Z size (random-system)");
    cmd_cons->add_option("--write", cons_write, "write the instance file here");
    add_common(cmd_cons, c_cons);

    // lift
    CommonFlags c_lift;
    std::string lift_instance, lift_write;
    CLI::App* cmd_lift = app.add_subcommand("lift", "embed into F_p^{n+2}");
    cmd_lift->add_option("--instance", lift_instance, "matched-collection file")->required();
    cmd_lift->add_option("--write", lift_write, "write the lifted collection here");
    add_common(cmd_lift, c_lift);

    // tensor
    CommonFlags c_tensor;
    std::string tensor_instance, tensor_write;
    unsigned tensor_k = 2;
    bool tensor_audit = false;
    CLI::App* cmd_tensor = app.add_subcommand("tensor", "tensor powers");
    cmd_tensor->add_option("--instance", tensor_instance, "instance file")->required();
    cmd_tensor->add_option("--k", tensor_k, "power");
    cmd_tensor->add_flag("--audit", tensor_audit, "audit count multiplicativity up to k");
    cmd_tensor->add_option("--write", tensor_write, "write the powered instance here");
    add_common(cmd_tensor, c_tensor);

    // blowup
    CommonFlags c_blow;
    std::string blow_instance, blow_write;
    unsigned blow_l = 1;
    CLI::App* cmd_blow = app.add_subcommand("blowup", "X x F_p^l product construction");
    cmd_blow->add_option("--instance", blow_instance, "matched-collection file")->required();
    cmd_blow->add_option("--l", blow_l, "fibre dimension");
    cmd_blow->add_option("--write", blow_write, "write the dense blow-up here");
    add_common(cmd_blow, c_blow);

    // greedy
    CommonFlags c_greedy;
    std::string greedy_instance, greedy_write;
    CLI::App* cmd_greedy = app.add_subcommand("greedy", "greedy disjoint triangles");
    cmd_greedy->add_option("--instance", greedy_instance, "instance file")->required();
    cmd_greedy->add_option("--write", greedy_write, "write the matching here");
    add_common(cmd_greedy, c_greedy);

    // prune
    CommonFlags c_prune;
    std::string prune_instance, prune_eps = "1/4";
    CLI::App* cmd_prune = app.add_subcommand("prune", "degree pruning loop");
    cmd_prune->add_option("--instance", prune_instance, "instance file")->required();
    cmd_prune->add_option("--eps", prune_eps, "eps as a rational a/b");
    add_common(cmd_prune, c_prune);

    // subspace-sim
    CommonFlags c_sub;
    std::string sub_instance;
    unsigned sub_d = 2, sub_threads = 1;
    std::uint64_t sub_trials = 1000;
    std::int64_t sub_membership = -1;
    bool sub_audit = false;
    CLI::App* cmd_sub = app.add_subcommand("subspace-sim", "random subspace experiments");
    cmd_sub->add_option("--instance", sub_instance, "instance file")->required();
    cmd_sub->add_option("--d", sub_d, "subspace dimension")->required();
    cmd_sub->add_option("--trials", sub_trials, "trial count");
    cmd_sub->add_option("--threads", sub_threads, "worker threads (trials only)");
    cmd_sub->add_flag("--audit-claims", sub_audit,
                      "require the structural hypotheses before running");
    cmd_sub->add_option("--membership-point", sub_membership,
                        "run the fixed-point membership experiment instead");
    add_common(cmd_sub, c_sub);

    // oracle-mindel
    CommonFlags c_mindel;
    std::string mindel_instance;
    std::uint64_t mindel_nodes = 50'000'000;
    double mindel_seconds = 120.0;
    CLI::App* cmd_mindel = app.add_subcommand("oracle-mindel", "exact minimum deletion");
    cmd_mindel->add_option("--instance", mindel_instance, "instance file")->required();
    cmd_mindel->add_option("--max-nodes", mindel_nodes, "node budget");
    cmd_mindel->add_option("--max-seconds", mindel_seconds, "time budget");
    add_common(cmd_mindel, c_mindel);

    // oracle-maxmatch
    CommonFlags c_maxm;
    unsigned maxm_p = 2, maxm_n = 2;
    std::uint64_t maxm_nodes = 50'000'000;
    double maxm_seconds = 120.0;
    bool maxm_nocap = false;
    std::string maxm_write;
    CLI::App* cmd_maxm = app.add_subcommand("oracle-maxmatch", "maximum matched collection");
    cmd_maxm->add_option("--p", maxm_p, "prime")->required();
    cmd_maxm->add_option("--n", maxm_n, "dimension (p^n <= 64)")->required();
    cmd_maxm->add_option("--max-nodes", maxm_nodes, "node budget");
    cmd_maxm->add_option("--max-seconds", maxm_seconds, "time budget");
    cmd_maxm->add_flag("--no-cap", maxm_nocap, "disable sum-free cap pruning");
    cmd_maxm->add_option("--write", maxm_write, "write the collection here");
    add_common(cmd_maxm, c_maxm);

    // audit
    CommonFlags c_audit;
    std::string audit_instance;
    std::uint64_t audit_nodes = 50'000'000;
    double audit_seconds = 120.0;
    CLI::App* cmd_audit = app.add_subcommand("audit", "removal-bound consistency audit");
    cmd_audit->add_option("--instance", audit_instance, "instance file")->required();
    cmd_audit->add_option("--max-nodes", audit_nodes, "node budget");
    cmd_audit->add_option("--max-seconds", audit_seconds, "time budget");
    add_common(cmd_audit, c_audit);

    // frontier
    CommonFlags c_front;
    unsigned front_p = 2, front_base_n = 2, front_kmax = 3;
    std::string front_base_file;
    std::uint64_t front_nodes = 50'000'000;
    double front_seconds = 120.0;
    CLI::App* cmd_front = app.add_subcommand("frontier", "constructed-family exponent curve");
    cmd_front->add_option("--p", front_p, "prime")->required();
    cmd_front->add_option("--base-n", front_base_n, "oracle base dimension");
    cmd_front->add_option("--base-file", front_base_file, "matched base file (overrides oracle)");
    cmd_front->add_option("--kmax", front_kmax, "largest tensor power");
    cmd_front->add_option("--max-nodes", front_nodes, "oracle node budget");
    cmd_front->add_option("--max-seconds", front_seconds, "oracle time budget");
    add_common(cmd_front, c_front);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    }

    try {
        if (*cmd_exp) run_exponents(exp_p, exp_tol, exp_closed, c_exp, started);
        if (*cmd_count) run_count(count_instance, count_method, count_bits, c_count, started);
        if (*cmd_deg) run_degrees(deg_instance, deg_csv, c_deg, started);
        if (*cmd_cons)
            run_construct(cons_kind, cons_p, cons_n, cons_t, cons_m, cons_sx, cons_sy,
                          cons_sz, cons_write, c_cons, started);
        if (*cmd_lift) run_lift(lift_instance, lift_write, c_lift, started);
        if (*cmd_tensor)
            run_tensor(tensor_instance, tensor_k, tensor_audit, tensor_write, c_tensor, started);
        if (*cmd_blow) run_blowup(blow_instance, blow_l, blow_write, c_blow, started);
        if (*cmd_greedy) run_greedy(greedy_instance, greedy_write, c_greedy, started);
        if (*cmd_prune) run_prune(prune_instance, prune_eps, c_prune, started);
        if (*cmd_sub)
            run_subspace_sim(sub_instance, sub_d, sub_trials, sub_threads, sub_membership,
                             sub_audit, c_sub, started);
        if (*cmd_mindel)
            run_oracle_mindel(mindel_instance, mindel_nodes, mindel_seconds, c_mindel, started);
        if (*cmd_maxm)
            run_oracle_maxmatch(maxm_p, maxm_n, maxm_nodes, maxm_seconds, maxm_nocap,
                                maxm_write, c_maxm, started);
        if (*cmd_audit) run_audit(audit_instance, audit_nodes, audit_seconds, c_audit, started);
        if (*cmd_front)
            run_frontier(front_p, front_base_n, front_base_file, front_kmax, front_nodes,
                         front_seconds, c_front, started);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
