#include "cli.hpp"

#include "sgc/errors.hpp"
#include "sgc/families.hpp"
#include "sgc/io.hpp"
#include "sgc/solve.hpp"
#include "sgc/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace sgc::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad arguments or unreadable files; maps to exit_usage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SignedGraph load_graph(const std::string& path)
{
    if (!std::filesystem::is_regular_file(path)) throw UsageError("cannot open graph file " + path);
    return io::read_graph(path);
}

io::AnyColoring load_coloring(const std::string& path)
{
    if (!std::filesystem::is_regular_file(path)) throw UsageError("cannot open coloring file " + path);
    return io::read_coloring(path);
}

KDColoring expect_kd(const io::AnyColoring& c, const std::string& what)
{
    if (const auto* kd = std::get_if<KDColoring>(&c)) return *kd;
    throw UsageError(what + " needs a kd coloring");
}

void emit(std::ostream& out, const std::string& path, const std::string& text)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write " + path);
    file << text;
}

std::string kd_text(const KDColoring& c) { return io::format_coloring(io::AnyColoring{c}); }

std::string pm_text(const std::vector<Int>& colors, Int m)
{
    std::ostringstream s;
    s << "pm " << m << "\n";
    for (std::size_t v = 0; v < colors.size(); ++v) s << v << " " << colors[v] << "\n";
    return s.str();
}

json report_json(const InvariantReport& r)
{
    const auto& w = r.chi_c.witness;
    return json{
        {"n", r.order},
        {"m", r.edges},
        {"edgeless_convention", r.edgeless_convention},
        {"chi", r.chi.value},
        {"chi_c",
         {{"num", r.chi_c.value.num()}, {"den", r.chi_c.value.den()}, {"k", w.k()}, {"d", w.d()}, {"coloring", w.colors()}}},
        {"chi_pm", r.chi_pm},
        {"checks", {{"bounds", r.bounds_ok}, {"gap", r.gap_ok}, {"charac", r.charac_ok}, {"pm", r.pm_ok}, {"witness", r.witness_ok}}},
    };
}

// ---- sweep ----------------------------------------------------------------

constexpr const char* sweep_columns =
    "index,seed,n,m,balanced,antibalanced,chi,chi_c,chi_pm,chi_minus_chic,bounds,gap,charac,pm,witness,switching";

constexpr const char* sweep_footer = R"(CSV columns (header row first, one row per instance, in index order):
  index           instance number 0..count-1
  seed            per-instance seed derived from --seed and index
  n, m            vertex and edge count
  balanced        every circuit has an even number of negative edges
  antibalanced    balanced after negating every sign
  chi, chi_pm     chromatic number and signed-color-set chromatic number
  chi_c           circular chromatic number, reduced num/den
  chi_minus_chic  chi - chi_c, reduced num/den
  bounds          chi - 1 <= chi_c <= chi
  gap             chi_c = chi - 1 or chi_c >= (chi - 1)(1 + 1/(4n - 1))
  charac          chi_c = chi - 1 iff a (2(chi-1), 2)-coloring exists
  pm              |chi_pm - chi| <= 1
  witness         the chi_c witness has k <= 4n
  switching       chi, chi_c and chi_pm unchanged under random switchings
The sweep stops at the first row with a false check, writes that graph
to <out>.fail.sg (sweep.fail.sg without --out) and exits with status 1.)";

struct SweepRow {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    SignedGraph graph;
    bool balanced = false;
    bool antibalanced = false;
    Int chi = 0;
    Ratio chi_c;
    Int chi_pm = 0;
    bool bounds = false, gap = false, charac = false, pm = false, witness = false, switching = false;

    bool ok() const { return bounds && gap && charac && pm && witness && switching; }
};

std::string flag(bool b) { return b ? "true" : "false"; }

std::string csv_line(const SweepRow& r)
{
    std::ostringstream s;
    s << r.index << ',' << r.seed << ',' << r.graph.order() << ',' << r.graph.size() << ',' << flag(r.balanced) << ','
      << flag(r.antibalanced) << ',' << r.chi << ',' << r.chi_c.to_string() << ',' << r.chi_pm << ','
      << (Ratio(r.chi) - r.chi_c).to_string() << ',' << flag(r.bounds) << ',' << flag(r.gap) << ',' << flag(r.charac)
      << ',' << flag(r.pm) << ',' << flag(r.witness) << ',' << flag(r.switching) << '\n';
    return s.str();
}

SweepRow sweep_instance(std::size_t index, std::uint64_t base_seed, int max_n, int switchings)
{
    SweepRow row;
    row.index = index;
    row.seed = mix_seed(base_seed, index);
    std::mt19937_64 rng(row.seed);
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    const double p = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    const double q = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    row.graph = random_signed(n, p, q, rng());

    const auto rep = report(row.graph);
    row.balanced = is_balanced(row.graph).balanced;
    row.antibalanced = is_antibalanced(row.graph);
    row.chi = rep.chi.value;
    row.chi_c = rep.chi_c.value;
    row.chi_pm = rep.chi_pm;
    row.bounds = rep.bounds_ok;
    row.gap = rep.gap_ok;
    row.charac = rep.charac_ok;
    row.pm = rep.pm_ok;
    row.witness = rep.witness_ok;

    row.switching = true;
    SignedGraph h = row.graph;
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    for (int s = 0; s < switchings && row.switching; ++s) {
        h = switch_at(h, pick(rng));
        const auto c = chi(h).value;
        row.switching = c == row.chi && chi_c(h, c).value == row.chi_c && chi_pm(h) == row.chi_pm;
    }
    return row;
}

int run_sweep(int max_n, std::size_t count, std::uint64_t seed, int switchings, unsigned jobs, const std::string& out_path,
              std::ostream& out, std::ostream& err)
{
    std::vector<std::optional<SweepRow>> rows(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_bad{count};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || i > first_bad.load()) return;
            try {
                rows[i] = sweep_instance(i, seed, max_n, switchings);
                if (rows[i]->ok()) continue;
            }
            catch (...) {
                errors[i] = std::current_exception();
            }
            std::size_t cur = first_bad.load();
            while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw UsageError("cannot write " + out_path);
    }
    std::ostream& csv = out_path.empty() ? out : file;
    csv << sweep_columns << '\n';
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        const SweepRow& row = *rows[i];
        csv << csv_line(row);
        if (!row.ok()) {
            const std::string fail = (out_path.empty() ? std::string("sweep") : out_path) + ".fail.sg";
            std::ofstream f(fail);
            io::write_graph(f, row.graph);
            err << "sweep: check failed at index " << i << " (seed " << row.seed << "); graph written to " << fail << "\n";
            return exit_invalid;
        }
    }
    return exit_ok;
}

// ---- command table --------------------------------------------------------

struct Options {
    std::string graph;
    std::string coloring;
    std::string out;
    std::string witness;
    Int k = 0, d = 0, t = 0, x0 = 0, steps = 1;
    bool trace = false;

    int n = 0;
    std::vector<int> neg;
    std::vector<int> sizes;
    bool clique = false;
    double p = 0.5, q = 0.5;
    std::uint64_t seed = 0;
    bool bipartite = false;

    std::size_t count = 0;
    int switchings = 5;
    unsigned jobs = 1;
};

using Action = std::function<int(std::ostream&, std::ostream&)>;

struct Command {
    CLI::App* app;
    Action action;
};

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto g = load_graph(o.graph);
    const auto c = load_coloring(o.coloring);
    const auto violations = std::visit(
        [&](const auto& col) {
            if constexpr (std::is_same_v<std::decay_t<decltype(col)>, KDColoring>)
                return verify_kd(g, col);
            else
                return verify_r(g, col);
        },
        c);
    if (violations.empty()) {
        out << "valid\n";
        return exit_ok;
    }
    out << "invalid: " << violations.size() << (violations.size() == 1 ? " violation\n" : " violations\n");
    for (const auto& v : violations)
        out << "  e " << v.edge.u << ' ' << v.edge.v << ' ' << (v.edge.sign > 0 ? '+' : '-') << " distance "
            << v.distance.to_pretty() << " < " << v.required.to_pretty() << '\n';
    return exit_invalid;
}

void add_graph_arg(CLI::App* app, Options& o) { app->add_option("graph", o.graph, "signed graph file")->required(); }

void add_transforms(CLI::App* parent, Options& o, std::vector<Command>& table)
{
    auto add = [&](const char* name, const char* help, auto&& body) -> CLI::App* {
        CLI::App* sub = parent->add_subcommand(name, help);
        add_graph_arg(sub, o);
        sub->add_option("--coloring,-c", o.coloring, "input coloring file")->required();
        sub->add_option("--out,-o", o.out, "write the result here instead of stdout");
        table.push_back({sub, [&o, body](std::ostream& out, std::ostream& err) {
                             const auto g = load_graph(o.graph);
                             const auto c = load_coloring(o.coloring);
                             emit(out, o.out, body(g, c, err));
                             return exit_ok;
                         }});
        return sub;
    };
    auto kd_body = [&o](auto fn, std::string name) {
        return [&o, fn, name](const SignedGraph& g, const io::AnyColoring& c, std::ostream&) {
            return kd_text(fn(g, expect_kd(c, name), o));
        };
    };

    add("scale", "(k,d) -> (tk,td)", kd_body([](const auto& g, const auto& c, const auto& op) { return scale(g, c, op.t); }, "scale"))
        ->add_option("--t", o.t, "factor t >= 1")
        ->required();
    add("extend", "(k,d) -> (k',d) for k' > k",
        kd_body([](const auto& g, const auto& c, const auto& op) { return extend(g, c, op.k); }, "extend"))
        ->add_option("--k", o.k, "new modulus")
        ->required();
    auto* rt = add("reduce-t", "(tk,td) -> (tk-2k,td-2d) for gcd(k,d) = 1, t >= 3",
                   kd_body([](const auto& g, const auto& c, const auto& op) { return reduce_t(g, c, op.k, op.d, op.t); }, "reduce-t"));
    rt->add_option("--k", o.k, "base k")->required();
    rt->add_option("--d", o.d, "base d")->required();
    rt->add_option("--t", o.t, "multiplier t")->required();
    auto* up = add("update", "update at x0, x0+d, ... (steps times)",
                   kd_body([](const auto& g, const auto& c, const auto& op) { return update_steps(g, c, op.x0, op.steps); }, "update"));
    up->add_option("--x0", o.x0, "start color")->required();
    up->add_option("--steps", o.steps, "number of updates")->capture_default_str();
    add("halve", "(2k,2d) -> (k,d) for gcd(k,d) = 1, k > 2n",
        kd_body([](const auto& g, const auto& c, const auto&) { return halve(g, c); }, "halve"));
    add("descend", "(k,d) -> (k',d'), k' < k, k'/d' < k/d, for gcd(k,d) = 1, k > 4n",
        [&o](const SignedGraph& g, const io::AnyColoring& c, std::ostream& err) {
            auto res = descend_traced(g, expect_kd(c, "descend"));
            if (o.trace) err << "descend: route " << to_string(res.route) << '\n';
            return kd_text(res.coloring);
        })
        ->add_flag("--trace", o.trace, "report which construction produced the result");
    auto* rg = add("retarget", "(k,d) -> (k',d') for k/d < k'/d', or equal ratio with d odd",
                   kd_body([](const auto& g, const auto& c, const auto& op) { return retarget(g, c, op.k, op.d); }, "retarget"));
    rg->add_option("--k", o.k, "target k")->required();
    rg->add_option("--d", o.d, "target d")->required();
    add("kd2r", "(K,D)-coloring -> circular K/D-coloring", [](const SignedGraph& g, const io::AnyColoring& c, std::ostream&) {
        return io::format_coloring(io::AnyColoring{kd_to_r(g, expect_kd(c, "kd2r"))});
    });
    add("r2kd", "circular r-coloring -> (k,d)- or (2k,2d)-coloring", [](const SignedGraph& g, const io::AnyColoring& c, std::ostream&) {
        const auto* f = std::get_if<RColoring>(&c);
        if (f == nullptr) throw UsageError("r2kd needs an r coloring");
        return kd_text(r_to_kd(g, *f));
    });
}

void add_generators(CLI::App* parent, Options& o, std::vector<Command>& table)
{
    auto* circ = parent->add_subcommand("circuit", "cycle 0-1-...-(n-1)-0; edge i joins i and i+1");
    circ->add_option("--n", o.n, "vertex count (>= 3)")->required();
    circ->add_option("--neg", o.neg, "negative edge indices")->delimiter(',');
    circ->add_option("--out,-o", o.out, "output file");
    table.push_back({circ, [&o](std::ostream& out, std::ostream&) {
                         emit(out, o.out, io::format_graph(circuit(o.n, std::set<int>(o.neg.begin(), o.neg.end()))));
                         return exit_ok;
                     }});

    auto* ks = parent->add_subcommand("kstar", "n all-negative groups joined by positive edges");
    ks->add_option("--n", o.n, "number of groups")->required();
    ks->add_option("--sizes", o.sizes, "group sizes (default 2 each)")->delimiter(',');
    ks->add_flag("--clique", o.clique, "make each group a clique instead of a path");
    ks->add_option("--out,-o", o.out, "output file");
    table.push_back({ks, [&o](std::ostream& out, std::ostream&) {
                         if (o.n < 1) throw UsageError("kstar: --n must be at least 1");
                         auto sizes = o.sizes.empty() ? std::vector<int>(static_cast<std::size_t>(o.n), 2) : o.sizes;
                         if (sizes.size() != static_cast<std::size_t>(o.n))
                             throw UsageError("kstar: --sizes lists " + std::to_string(sizes.size()) + " groups, --n is " +
                                              std::to_string(o.n));
                         const auto shape = o.clique ? GroupShape::clique : GroupShape::path;
                         emit(out, o.out, io::format_graph(k_star(sizes, shape)));
                         return exit_ok;
                     }});

    auto* rnd = parent->add_subcommand("random", "random signed graph");
    rnd->add_option("--n", o.n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    rnd->add_option("--p", o.p, "edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    rnd->add_option("--q", o.q, "probability an edge is negative")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    rnd->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
    rnd->add_flag("--bipartite", o.bipartite, "restrict to a bipartite underlying graph");
    rnd->add_option("--out,-o", o.out, "output file");
    table.push_back({rnd, [&o](std::ostream& out, std::ostream&) {
                         auto g = o.bipartite ? random_bipartite(o.n, o.p, o.q, o.seed) : random_signed(o.n, o.p, o.q, o.seed);
                         emit(out, o.out, io::format_graph(g));
                         return exit_ok;
                     }});
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Chromatic invariants and recolorings of signed graphs", "sgc"};
    app.require_subcommand(1);
    Options o;
    std::vector<Command> table;

    auto* chi_cmd = app.add_subcommand("chi", "chromatic number: least k with a (k,1)-coloring");
    add_graph_arg(chi_cmd, o);
    chi_cmd->add_option("--witness,-w", o.witness, "write the (chi,1)-coloring here");
    table.push_back({chi_cmd, [&o](std::ostream& out, std::ostream&) {
                         const auto r = chi(load_graph(o.graph));
                         out << r.value << '\n';
                         if (!o.witness.empty()) emit(out, o.witness, kd_text(r.witness));
                         return exit_ok;
                     }});

    auto* chic_cmd = app.add_subcommand("chic", "circular chromatic number with a (k,d) witness, k <= 4n");
    add_graph_arg(chic_cmd, o);
    chic_cmd->add_option("--witness,-w", o.witness, "write the witness coloring here");
    table.push_back({chic_cmd, [&o](std::ostream& out, std::ostream&) {
                         const auto r = chi_c(load_graph(o.graph));
                         out << r.value.to_pretty() << " (witness k=" << r.witness.k() << " d=" << r.witness.d() << ")\n";
                         if (!o.witness.empty()) emit(out, o.witness, kd_text(r.witness));
                         return exit_ok;
                     }});

    auto* pm_cmd = app.add_subcommand("chipm", "least m with a coloring from the signed color set M_m");
    add_graph_arg(pm_cmd, o);
    pm_cmd->add_option("--witness,-w", o.witness, "write the M_m-coloring here (header `pm <m>`)");
    table.push_back({pm_cmd, [&o](std::ostream& out, std::ostream&) {
                         const auto g = load_graph(o.graph);
                         const Int m = chi_pm(g);
                         out << m << '\n';
                         if (!o.witness.empty()) emit(out, o.witness, pm_text(*pm_coloring(g, m), m));
                         return exit_ok;
                     }});

    auto* rep_cmd = app.add_subcommand("report", "all invariants and theorem checks as JSON");
    add_graph_arg(rep_cmd, o);
    table.push_back({rep_cmd, [&o](std::ostream& out, std::ostream&) {
                         const auto r = report(load_graph(o.graph));
                         out << report_json(r).dump(2) << '\n';
                         return r.all_ok() ? exit_ok : exit_invalid;
                     }});

    auto* ver_cmd = app.add_subcommand("verify", "check a coloring certificate; exit 0 if valid, 1 if not");
    add_graph_arg(ver_cmd, o);
    ver_cmd->add_option("--coloring,-c", o.coloring, "coloring file")->required();
    table.push_back({ver_cmd, [&o](std::ostream& out, std::ostream&) { return cmd_verify(o, out); }});

    auto* tr_cmd = app.add_subcommand("transform", "apply one recoloring construction");
    tr_cmd->require_subcommand(1);
    add_transforms(tr_cmd, o, table);

    auto* gen_cmd = app.add_subcommand("gen", "generate a graph family");
    gen_cmd->require_subcommand(1);
    add_generators(gen_cmd, o, table);

    auto* sw_cmd = app.add_subcommand("sweep", "random instances -> CSV of invariants and theorem checks");
    sw_cmd->add_option("--n", o.n, "maximum vertex count; each instance draws n in [1, N]")->required()->check(CLI::Range(1, 12));
    sw_cmd->add_option("--count", o.count, "number of instances")->required();
    sw_cmd->add_option("--seed", o.seed, "base seed")->capture_default_str();
    sw_cmd->add_option("--out,-o", o.out, "CSV file (stdout if omitted)");
    sw_cmd->add_option("--switchings", o.switchings, "random switchings checked per instance")->capture_default_str();
    sw_cmd->add_option("--jobs,-j", o.jobs, "worker threads; output does not depend on it")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    sw_cmd->footer(sweep_footer);
    table.push_back({sw_cmd, [&o](std::ostream& out, std::ostream& err) {
                         return run_sweep(o.n, o.count, o.seed, o.switchings, o.jobs, o.out, out, err);
                     }});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    auto chosen = std::find_if(table.begin(), table.end(), [](const Command& c) { return c.app->parsed(); });
    // Parents (transform, gen) are parsed too; the table only holds leaves.
    try {
        return chosen->action(out, err);
    }
    catch (const UsageError& e) {
        err << "sgc: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const ParseError& e) {
        err << "sgc: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const Error& e) {
        err << "sgc: " << e.what() << '\n';
        return exit_invalid;
    }
    catch (const InternalError& e) {
        err << "sgc: internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace sgc::cli
