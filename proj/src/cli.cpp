#include "cospectra/cli.hpp"

#include "cospectra/beta_solver.hpp"
#include "cospectra/centrality.hpp"
#include "cospectra/error.hpp"
#include "cospectra/exact_walks.hpp"
#include "cospectra/miner.hpp"
#include "cospectra/serialize.hpp"
#include "cospectra/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace cospectra {

namespace {

struct Options {
    std::string input;
    std::string format = "edgelist";
    std::string output = "json";
    std::string beta = "1";
    std::string alpha;
    int prec = Precision::kDefaultDigits;
    std::string bmax = "20";
    std::string step = "1/100";
    std::string fn = "subgraph";
    std::string backend = "auto";
    std::vector<int> pair;
    std::vector<std::string> predicates;
    int workers = 1;
    int min_n = 1;
    int max_n = 62;
    bool no_filters = false;
    bool verify = false;
};

class Context {
public:
    Context(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

    Precision precision() const { return Precision(opt_.prec); }

    Beta beta() const
    {
        Rational b = parse_rational(opt_.beta);
        if (sgn(b) == 0) throw InvalidArgument("--beta must be nonzero");
        return Beta::rational(std::move(b));
    }

    ScanOptions scan() const
    {
        ScanOptions s;
        s.beta_max = parse_rational(opt_.bmax);
        s.step = parse_rational(opt_.step);
        if (sgn(s.beta_max) <= 0 || sgn(s.step) <= 0) throw InvalidArgument("--bmax and --step must be positive");
        if (s.step > s.beta_max) throw InvalidArgument("--step must not exceed --bmax");
        return s;
    }

    std::string read_input()
    {
        if (opt_.input.empty() || opt_.input == "-")
            return std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
        std::ifstream file(opt_.input, std::ios::binary);
        if (!file) throw InvalidArgument("cannot read input '" + opt_.input + "'");
        return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }

    std::istream& stream()
    {
        if (opt_.input.empty() || opt_.input == "-") return in_;
        file_.open(opt_.input, std::ios::binary);
        if (!file_) throw InvalidArgument("cannot read input '" + opt_.input + "'");
        return file_;
    }

    Graph graph()
    {
        const std::string text = read_input();
        if (opt_.format == "edgelist") return parse_edge_list(text);
        std::istringstream lines(text);
        std::string line;
        std::vector<std::string> graphs;
        while (std::getline(lines, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) graphs.push_back(line);
        }
        if (graphs.size() != 1)
            throw InvalidArgument("expected exactly one graph6 line, got " + std::to_string(graphs.size()));
        return parse_graph6(graphs.front());
    }

    Json document(const std::string& command) const
    {
        return Json{{"schema", kSchemaVersion}, {"command", command}};
    }

    void emit(const Json& doc) { out_ << doc.dump(2) << '\n'; }

    const Options& opt() const { return opt_; }
    std::ostream& out() { return out_; }

private:
    const Options& opt_;
    std::istream& in_;
    std::ostream& out_;
    std::ifstream file_;
};

Json graph_json(const Graph& g)
{
    return Json{{"n", g.order()}, {"directed", g.directed()}, {"edges", g.edges().size()}, {"weighted", g.weighted()}};
}

Json classes_json(const std::vector<int>& class_of)
{
    std::vector<std::vector<int>> classes;
    for (std::size_t v = 0; v < class_of.size(); ++v) {
        const auto c = static_cast<std::size_t>(class_of[v]);
        if (c >= classes.size()) classes.resize(c + 1);
        classes[c].push_back(static_cast<int>(v));
    }
    return Json(classes);
}

void require_json(const Options& opt, const std::string& command)
{
    if (opt.output != "json") throw InvalidArgument(command + ": only --output json is supported");
}

CentralityReport subgraph_report(const ExactMatrix& a, const Beta& beta, const Precision& prec,
                                 const std::string& backend, const SpectralData* sd = nullptr)
{
    const bool spectral = backend == "spectral" || (backend == "auto" && a.is_symmetric());
    if (!spectral) return subgraph_centrality_taylor(a, beta, prec);
    if (!a.is_symmetric()) throw InvalidArgument("spectral backend needs undirected (symmetric) input");
    if (sd) return subgraph_centrality_spectral(*sd, beta, prec);
    return subgraph_centrality_spectral(decompose(a, prec), beta, prec);
}

void print_table(std::ostream& out, const CentralityReport& r)
{
    const int digits = r.precision.digits();
    std::size_t width = 5;
    std::vector<std::string> text;
    for (const auto& v : r.values) {
        text.push_back(v.to_decimal(digits));
        width = std::max(width, text.back().size());
    }
    out << "# " << r.function << " (" << r.backend << ")";
    if (!r.parameter_name.empty()) out << ' ' << r.parameter_name << '=' << r.parameter;
    out << ", " << digits << " digits\n";
    out << std::left << std::setw(8) << "vertex" << std::setw(static_cast<int>(width) + 2) << "value" << "class\n";
    for (std::size_t i = 0; i < text.size(); ++i)
        out << std::setw(8) << i << std::setw(static_cast<int>(width) + 2) << text[i] << r.partition.class_of[i]
            << '\n';
    out << std::right;
}

int cmd_cospectral(Context& ctx)
{
    require_json(ctx.opt(), "cospectral");
    const Graph g = ctx.graph();
    const ExactMatrix a = adjacency_matrix(g);
    Json doc = ctx.document("cospectral");
    doc["graph"] = graph_json(g);
    const auto cls = cospectral_classes(a);
    doc["class_of"] = cls;
    doc["classes"] = classes_json(cls);
    doc["walks"] = to_json(walk_counts(a, std::max<std::size_t>(a.dim(), 2) - 1));
    ctx.emit(doc);
    return kExitOk;
}

int cmd_walkreg(Context& ctx)
{
    require_json(ctx.opt(), "walkreg");
    const Graph g = ctx.graph();
    const ExactMatrix a = adjacency_matrix(g);
    Json doc = ctx.document("walkreg");
    doc["graph"] = graph_json(g);
    const auto cls = cospectral_classes(a);
    doc["walk_regular"] = walk_regular(a);
    doc["classes"] = classes_json(cls);
    ctx.emit(doc);
    return kExitOk;
}

int cmd_centrality(Context& ctx)
{
    const Options& opt = ctx.opt();
    const Precision prec = ctx.precision();
    std::optional<Beta> beta;
    std::optional<Rational> alpha;
    if (opt.fn == "subgraph") beta = ctx.beta();
    if (opt.fn == "resolvent") {
        if (opt.alpha.empty()) throw InvalidArgument("resolvent needs --alpha");
        alpha = parse_rational(opt.alpha);
        if (sgn(*alpha) <= 0) throw InvalidArgument("--alpha must be positive");
    }
    const Graph g = ctx.graph();
    const ExactMatrix a = adjacency_matrix(g);

    CentralityReport report;
    if (opt.fn == "subgraph") {
        report = subgraph_report(a, *beta, prec, opt.backend);
    } else if (opt.fn == "resolvent") {
        report = resolvent_centrality(a, *alpha, prec);
    } else if (opt.fn == "degree") {
        report.function = "degree";
        report.backend = "exact";
        report.precision = prec;
        report.exact_values = degree_centrality(a);
        for (const auto& q : *report.exact_values) report.values.emplace_back(q, prec.bits());
        report.partition = classify_equivalence(report);
    } else {
        report = eigenvector_centrality(a, prec);
    }

    if (opt.output == "csv") {
        ctx.out() << to_csv(report);
    } else if (opt.output == "table") {
        print_table(ctx.out(), report);
    } else {
        Json doc = ctx.document("centrality");
        doc["graph"] = graph_json(g);
        const Json body = to_json(report);
        for (const auto& [k, v] : body.items()) doc[k] = v;
        ctx.emit(doc);
    }
    return kExitOk;
}

int cmd_entropy(Context& ctx)
{
    const Precision prec = ctx.precision();
    const Beta beta = ctx.beta();
    const Graph g = ctx.graph();
    const ExactMatrix a = adjacency_matrix(g);
    const CentralityReport report = subgraph_report(a, beta, prec, ctx.opt().backend);
    const EntropyResult e = walk_entropy(report, prec);
    if (ctx.opt().output == "table") {
        ctx.out() << "entropy " << e.entropy.to_decimal(prec.digits()) << "\nln_n    "
                  << e.log_n.to_decimal(prec.digits()) << "\nmaximal " << (e.maximal ? "true" : "false") << '\n';
        return kExitOk;
    }
    require_json(ctx.opt(), "entropy");
    Json doc = ctx.document("entropy");
    doc["graph"] = graph_json(g);
    doc["beta"] = report.parameter;
    doc["backend"] = report.backend;
    doc["digits"] = prec.digits();
    const Json body = to_json(e, prec.digits());
    for (const auto& [k, v] : body.items()) doc[k] = v;
    ctx.emit(doc);
    return kExitOk;
}

Json pair_scan_json(const DiffFunction& df, const ScanOptions& scan, const Precision& prec)
{
    Json out{{"pair", Json::array({df.pair.i, df.pair.j})}};
    if (df.identically_zero) {
        out["cospectral"] = true;
        return out;
    }
    out["cospectral"] = false;
    const ScanResult res = scan_roots(df, scan);
    Json brackets = Json::array();
    for (const auto& b : res.brackets) brackets.push_back(to_json(b));
    Json near = Json::array();
    for (const auto& b : res.near_zero) near.push_back(to_string(b));
    Json roots = Json::array();
    Json spurious = Json::array();
    for (const auto& b : res.brackets) {
        try {
            roots.push_back(to_json(refine_root(df, b, prec)));
        } catch (const SpuriousBracket&) {
            spurious.push_back(to_json(b));
        }
    }
    out["brackets"] = brackets;
    out["near_zero"] = near;
    out["roots"] = roots;
    out["spurious"] = spurious;
    return out;
}

int cmd_solve_beta(Context& ctx)
{
    require_json(ctx.opt(), "solve-beta");
    const Precision prec = ctx.precision();
    const ScanOptions scan = ctx.scan();
    const Options& opt = ctx.opt();
    if (!opt.pair.empty() && opt.pair.size() != 2) throw InvalidArgument("--pair takes two vertex indices");
    const Graph g = ctx.graph();
    if (g.directed()) throw InvalidArgument("solve-beta needs an undirected graph");
    const ExactMatrix a = adjacency_matrix(g);

    Json doc = ctx.document("solve-beta");
    doc["graph"] = graph_json(g);
    doc["digits"] = prec.digits();
    doc["bmax"] = to_string(scan.beta_max);
    doc["step"] = to_string(scan.step);
    if (!opt.pair.empty()) {
        const VertexPair p = VertexPair{opt.pair[0], opt.pair[1]}.normalized();
        validate_pair(p, a.dim());
        doc["result"] = pair_scan_json(build_diff(decompose(a, prec), p), scan, prec);
    } else if (walk_regular(a)) {
        doc["walk_regular"] = true;
        doc["result"] = nullptr;
    } else {
        doc["walk_regular"] = false;
        doc["result"] = to_json(regularity_beta_search(g, prec, scan));
    }
    ctx.emit(doc);
    return kExitOk;
}

int cmd_analyze(Context& ctx)
{
    require_json(ctx.opt(), "analyze");
    const Precision prec = ctx.precision();
    const Beta beta = ctx.beta();
    const ScanOptions scan = ctx.scan();
    const Graph g = ctx.graph();
    const ExactMatrix a = adjacency_matrix(g);
    const std::size_t n = a.dim();

    Json doc = ctx.document("analyze");
    doc["graph"] = graph_json(g);
    doc["digits"] = prec.digits();
    const WalkTable walks = walk_counts(a, std::max<std::size_t>(n, 2) - 1);
    doc["walks"] = to_json(walks);
    doc["char_poly"] = to_json(char_poly(a));
    const auto cls = cospectral_classes(a);
    doc["cospectral_classes"] = classes_json(cls);
    const bool wr = walk_regular(a);
    doc["walk_regular"] = wr;

    const bool symmetric = a.is_symmetric();
    std::optional<SpectralData> sd;
    if (symmetric) sd = decompose(a, prec);
    doc["spectral"] = sd ? to_json(*sd) : Json(nullptr);

    const CentralityReport sc = symmetric ? subgraph_centrality_spectral(*sd, beta, prec)
                                          : subgraph_centrality_taylor(a, beta, prec, &walks);
    doc["subgraph"] = to_json(sc);
    doc["entropy"] = to_json(walk_entropy(sc, prec), prec.digits());

    if (symmetric) {
        Json deg = Json::array();
        for (const auto& q : degree_centrality(a)) deg.push_back(to_string(q));
        doc["degree"] = deg;
    } else {
        doc["degree"] = nullptr;
    }
    doc["eigenvector"] = symmetric && sd->perron ? to_json(eigenvector_centrality(a, prec)) : Json(nullptr);
    doc["crossing"] = symmetric && !wr && n > 1 ? to_json(regularity_beta_search(g, prec, scan)) : Json(nullptr);
    ctx.emit(doc);
    return kExitOk;
}

int cmd_mine(Context& ctx)
{
    const Options& opt = ctx.opt();
    MineTask task;
    for (const auto& name : opt.predicates) {
        std::stringstream list(name);
        std::string item;
        while (std::getline(list, item, ','))
            if (!item.empty()) task.predicates.push_back(parse_predicate(item));
    }
    if (task.predicates.empty()) task.predicates.push_back(Predicate::CospectralNonAutomorphic);
    task.min_order = opt.min_n;
    task.max_order = opt.max_n;
    task.precision = ctx.precision();
    task.escalated = Precision(std::max(2 * opt.prec, 100));
    task.scan = ctx.scan();
    task.workers = opt.workers;
    task.cheap_filters = !opt.no_filters;

    std::ostream& out = ctx.out();
    bool all_verified = true;
    const MineSummary summary = mine(ctx.stream(), task, [&](const Finding& f) {
        Json j = to_json(f);
        if (opt.verify) {
            const bool ok = verify_finding(f);
            all_verified = all_verified && ok;
            j["verified"] = ok;
        }
        out << j.dump() << '\n';
    });
    Json s = to_json(summary);
    if (opt.verify) s["all_verified"] = all_verified;
    out << s.dump() << '\n';
    if (summary.malformed > 0) return kExitInput;
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Walk-based centralities, exact vertex cospectrality and beta-equivalence search", "cospectra"};
    app.require_subcommand(1);
    app.fallthrough(false);

    const std::vector<std::string> formats{"edgelist", "g6"};
    const std::vector<std::string> outputs{"json", "csv", "table"};

    auto graph_input = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "Input file (default: standard input)");
        sub->add_option("--format", opt.format, "Input format")->check(CLI::IsMember(formats));
        sub->add_option("--output", opt.output, "Output format")->check(CLI::IsMember(outputs));
    };
    auto precision = [&](CLI::App* sub) { sub->add_option("--prec", opt.prec, "Significant decimal digits (>= 30)"); };
    auto beta = [&](CLI::App* sub) { sub->add_option("--beta", opt.beta, "Inverse temperature (nonzero rational)"); };
    auto scan = [&](CLI::App* sub) {
        sub->add_option("--bmax", opt.bmax, "Upper end of the beta scan");
        sub->add_option("--step", opt.step, "Beta scan step");
    };

    auto* analyze = app.add_subcommand("analyze", "Full pipeline on one graph");
    graph_input(analyze);
    precision(analyze);
    beta(analyze);
    scan(analyze);

    auto* cosp = app.add_subcommand("cospectral", "Exact cospectral vertex classes");
    graph_input(cosp);

    auto* walkreg = app.add_subcommand("walkreg", "Exact walk-regularity test");
    graph_input(walkreg);

    auto* cent = app.add_subcommand("centrality", "Vertex centralities");
    graph_input(cent);
    precision(cent);
    beta(cent);
    cent->add_option("--alpha", opt.alpha, "Resolvent parameter (rational)");
    cent->add_option("--fn", opt.fn, "Centrality function")
        ->check(CLI::IsMember({"subgraph", "resolvent", "degree", "eigenvector"}));
    cent->add_option("--backend", opt.backend, "Subgraph centrality backend")
        ->check(CLI::IsMember({"auto", "taylor", "spectral"}));

    auto* ent = app.add_subcommand("entropy", "Walk entropy at beta");
    graph_input(ent);
    precision(ent);
    beta(ent);
    ent->add_option("--backend", opt.backend, "Subgraph centrality backend")
        ->check(CLI::IsMember({"auto", "taylor", "spectral"}));

    auto* solve = app.add_subcommand("solve-beta", "Locate beta where vertex centralities cross");
    graph_input(solve);
    precision(solve);
    scan(solve);
    solve->add_option("--pair", opt.pair, "Restrict to one vertex pair")->expected(2);

    auto* mine_cmd = app.add_subcommand("mine", "Scan a graph6 stream for predicates");
    mine_cmd->add_option("input", opt.input, "graph6 file (default: standard input)");
    precision(mine_cmd);
    scan(mine_cmd);
    mine_cmd->add_option("--pred", opt.predicates,
                         "cospectral-nonauto, walk-regular, crossing-pair, regularity-candidate (comma separated)")
        ->allow_extra_args(false);
    mine_cmd->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
    mine_cmd->add_option("--min-n", opt.min_n, "Smallest order to evaluate")->check(CLI::Range(1, 62));
    mine_cmd->add_option("--max-n", opt.max_n, "Largest order to evaluate")->check(CLI::Range(1, 62));
    mine_cmd->add_flag("--no-filters", opt.no_filters, "Disable the cheap prefilters");
    mine_cmd->add_flag("--verify", opt.verify, "Re-verify every finding before printing it");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitInput;
    }
    Context ctx(opt, in, out);
    try {
        if (*analyze) return cmd_analyze(ctx);
        if (*cosp) return cmd_cospectral(ctx);
        if (*walkreg) return cmd_walkreg(ctx);
        if (*cent) return cmd_centrality(ctx);
        if (*ent) return cmd_entropy(ctx);
        if (*solve) return cmd_solve_beta(ctx);
        if (*mine_cmd) return cmd_mine(ctx);
    } catch (const PrecisionError& e) {
        err << "precision exhausted: " << e.what() << '\n';
        return kExitPrecision;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
    err << app.help();
    return kExitInput;
}

} // namespace cospectra
